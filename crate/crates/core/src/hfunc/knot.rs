use super::report::{Axiom, HValidationReport};
use crate::error::{Error, Result};
use crate::poly::{LaurentPoly1, NegPowerSeries};

/// H-function of a knot: a window on `[-R, R]`, zero above and `-s` below.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct KnotHFunction {
    radius: i64,
    window: Vec<i64>,
}

impl KnotHFunction {
    pub fn unknot() -> Self {
        KnotHFunction { radius: 1, window: vec![1, 0, 0] }
    }

    /// Build without checking the axioms. Only the window length is checked.
    pub fn from_window_unvalidated(radius: i64, window: Vec<i64>) -> Result<Self> {
        if radius < 1 || window.len() as i64 != 2 * radius + 1 {
            return Err(Error::InvalidTable(format!(
                "knot window must hold 2R+1 = {} values, got {}",
                2 * radius + 1,
                window.len()
            )));
        }
        Ok(KnotHFunction { radius, window })
    }

    /// Build from `H(-R), ..., H(R)` and validate.
    pub fn from_window(radius: i64, window: Vec<i64>) -> Result<Self> {
        let k = Self::from_window_unvalidated(radius, window)?;
        k.validated()
    }

    /// Build from `h(-R), ..., h(R)` where `H(s) = h(s) + max(0, -s)`.
    pub fn from_h_window(radius: i64, h: Vec<i64>) -> Result<Self> {
        let window = h.iter().zip(-radius..=radius).map(|(v, s)| v + (-s).max(0)).collect();
        Self::from_window(radius, window)
    }

    pub fn from_fn(radius: i64, f: impl Fn(i64) -> i64) -> Result<Self> {
        Self::from_window(radius, (-radius..=radius).map(f).collect())
    }

    pub(crate) fn validated(self) -> Result<Self> {
        let report = self.validate();
        if report.is_clean() {
            Ok(self)
        } else {
            Err(Error::NotLSpaceConsistent(report))
        }
    }

    pub fn radius(&self) -> i64 {
        self.radius
    }

    pub fn value(&self, s: i64) -> i64 {
        if s.abs() <= self.radius {
            self.window[(s + self.radius) as usize]
        } else if s > 0 {
            0
        } else {
            -s
        }
    }

    /// `h(s) = H(s) - max(0, -s)`.
    pub fn h(&self, s: i64) -> i64 {
        self.value(s) - (-s).max(0)
    }

    pub fn sum_h(&self) -> i64 {
        (-self.radius..=self.radius).map(|s| self.h(s)).sum()
    }

    pub fn is_unknot(&self) -> bool {
        (-self.radius..=self.radius).all(|s| self.h(s) == 0)
    }

    /// Same function on a larger window.
    pub fn with_radius(&self, radius: i64) -> Self {
        let radius = radius.max(self.radius);
        KnotHFunction { radius, window: (-radius..=radius).map(|s| self.value(s)).collect() }
    }

    pub fn validate(&self) -> HValidationReport {
        let mut rep = HValidationReport::default();
        let r = self.radius;
        if self.window[0] != r || self.window[(2 * r) as usize] != 0 {
            rep.push(
                Axiom::Stabilization,
                &[r],
                format!("need H(-R) = R and H(R) = 0, got {} and {}", self.window[0], self.window[(2 * r) as usize]),
            );
        }
        for s in -r - 1..=r + 1 {
            let v = self.value(s);
            if v < 0 {
                rep.push(Axiom::Nonnegative, &[s], format!("H = {v}"));
            }
            let step = self.value(s - 1) - v;
            if step != 0 && step != 1 {
                rep.push(Axiom::Growth, &[s], format!("H(s-1) - H(s) = {step}"));
            }
            if self.value(-s) != v + s {
                rep.push(Axiom::Symmetry, &[s], format!("H(-s) = {} but H(s) + s = {}", self.value(-s), v + s));
            }
            if self.h(s) < 0 {
                rep.push(Axiom::HNonnegative, &[s], format!("h = {}", self.h(s)));
            }
        }
        rep
    }
}

fn from_series(series: &NegPowerSeries, degree: i64) -> std::result::Result<KnotHFunction, HValidationReport> {
    let mut rep = HValidationReport::default();
    let radius = degree.max(1).max(1 - series.bottom());
    if series.tail_slope() != 1 || series.coeff(-radius) != radius {
        rep.push(
            Axiom::SeriesTail,
            &[-radius],
            format!("tail slope {}, value {} at -R", series.tail_slope(), series.coeff(-radius)),
        );
        return Err(rep);
    }
    let k = KnotHFunction { radius, window: (-radius..=radius).map(|s| series.coeff(s)).collect() };
    let rep = k.validate();
    if rep.is_clean() {
        Ok(k)
    } else {
        Err(rep)
    }
}

/// H-function from a symmetric Alexander polynomial, with the sign of `Δ`
/// chosen so that the result is a valid H-function.
pub fn h_from_alexander_knot(delta: &LaurentPoly1) -> Result<KnotHFunction> {
    if !delta.is_symmetric(1) && !delta.is_symmetric(-1) {
        return Err(Error::NotSymmetric);
    }
    let degree = delta.max_exponent().unwrap_or(0) / 2;
    let mut found = Vec::new();
    let mut first_report = None;
    for sign in [1, -1] {
        let shifted = delta.scale(sign).shift(-2);
        let series = NegPowerSeries::from_poly(&shifted)?;
        let outcome = match series.divide_by_geometric_squared() {
            Ok(s) => from_series(&s, degree),
            Err(_) => {
                let mut rep = HValidationReport::default();
                rep.push(Axiom::SeriesTail, &[], "no linear tail".into());
                Err(rep)
            }
        };
        match outcome {
            Ok(k) => found.push(k),
            Err(rep) => {
                first_report.get_or_insert(rep);
            }
        }
    }
    match found.len() {
        0 => Err(Error::NotLSpaceConsistent(first_report.unwrap_or_default())),
        1 => Ok(found.remove(0)),
        _ if found[0] == found[1] => Ok(found.remove(0)),
        _ => Err(Error::AmbiguousSign),
    }
}

/// `min { s >= 0 : H(s) = 0 }`.
pub fn nu_plus(k: &KnotHFunction) -> i64 {
    (0..).find(|s| k.value(*s) == 0).expect("H vanishes above the window")
}
