use std::collections::BTreeMap;

use super::knot::KnotHFunction;
use super::report::{Axiom, HValidationReport};
use crate::error::{Error, Result};
use crate::poly::LaurentPoly2;

/// H-function of a two-component link with linking number zero.
///
/// Values inside the core box `[-R, R]^2` are stored; outside, the two
/// component H-functions and the symmetry `H(-s) = H(s) + s1 + s2` take over.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinkHFunction2 {
    radius: i64,
    core: Vec<i64>,
    comps: [KnotHFunction; 2],
    tilde: Option<LaurentPoly2>,
}

/// Whether a table lists `H` or `h = H - H_O`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableKind {
    UpperH,
    LowerH,
}

/// `H_O(s) = Σ (|s_i| - s_i) / 2`, the H-function of the unlink.
pub fn h_unlink(s1: i64, s2: i64) -> i64 {
    (-s1).max(0) + (-s2).max(0)
}

impl LinkHFunction2 {
    /// Build from a value function on the core box, without validation.
    pub fn from_fn_unvalidated(radius: i64, comps: [KnotHFunction; 2], f: impl Fn(i64, i64) -> i64) -> Self {
        let side = 2 * radius + 1;
        let mut core = Vec::with_capacity((side * side) as usize);
        for s2 in -radius..=radius {
            for s1 in -radius..=radius {
                core.push(f(s1, s2));
            }
        }
        LinkHFunction2 { radius, core, comps, tilde: None }
    }

    /// Build from `H` on the core box and validate.
    pub fn from_fn(radius: i64, comps: [KnotHFunction; 2], f: impl Fn(i64, i64) -> i64) -> Result<Self> {
        Self::from_fn_unvalidated(radius, comps, f).validated()
    }

    /// Build from `h` on the core box and validate.
    pub fn from_h_fn(radius: i64, comps: [KnotHFunction; 2], h: impl Fn(i64, i64) -> i64) -> Result<Self> {
        Self::from_fn(radius, comps, |a, b| h(a, b) + h_unlink(a, b))
    }

    /// Build from rows in figure orientation: the first row is `s2 = R`, the
    /// last `s2 = -R`; within a row `s1` runs from `-R` to `R`.
    pub fn from_figure_rows(rows: &[Vec<i64>], kind: TableKind, comps: [KnotHFunction; 2]) -> Result<Self> {
        let n = rows.len() as i64;
        if n % 2 == 0 || n < 3 {
            return Err(Error::InvalidTable("table needs an odd number (>= 3) of rows".into()));
        }
        if rows.iter().any(|r| r.len() as i64 != n) {
            return Err(Error::InvalidTable("table must be square".into()));
        }
        let radius = (n - 1) / 2;
        if comps.iter().any(|c| c.radius() > radius) {
            return Err(Error::InvalidTable(format!("component windows exceed the table radius {radius}")));
        }
        let cell = |s1: i64, s2: i64| rows[(radius - s2) as usize][(s1 + radius) as usize];
        match kind {
            TableKind::UpperH => Self::from_fn(radius, comps, cell),
            TableKind::LowerH => Self::from_h_fn(radius, comps, cell),
        }
    }

    pub fn unlink() -> Self {
        Self::from_fn_unvalidated(2, [KnotHFunction::unknot(), KnotHFunction::unknot()], h_unlink)
            .with_tilde(LaurentPoly2::zero())
    }

    pub(crate) fn with_tilde(mut self, tilde: LaurentPoly2) -> Self {
        self.tilde = Some(tilde);
        self
    }

    pub(crate) fn validated(self) -> Result<Self> {
        let rep = self.validate();
        if rep.is_clean() {
            Ok(self)
        } else {
            Err(Error::NotLSpaceConsistent(rep))
        }
    }

    pub fn radius(&self) -> i64 {
        self.radius
    }

    /// Component `k` in {1, 2}.
    pub fn component(&self, k: u8) -> &KnotHFunction {
        &self.comps[(k - 1) as usize]
    }

    pub fn components(&self) -> &[KnotHFunction; 2] {
        &self.comps
    }

    /// The sign-resolved `Δ̃`, when the function was built from one.
    pub fn tilde_alexander(&self) -> Option<&LaurentPoly2> {
        self.tilde.as_ref()
    }

    fn core_at(&self, s1: i64, s2: i64) -> i64 {
        let side = 2 * self.radius + 1;
        self.core[((s2 + self.radius) * side + s1 + self.radius) as usize]
    }

    pub fn value(&self, s1: i64, s2: i64) -> i64 {
        let r = self.radius;
        if s1.abs() <= r && s2.abs() <= r {
            self.core_at(s1, s2)
        } else if s2 > r {
            self.comps[0].value(s1)
        } else if s1 > r {
            self.comps[1].value(s2)
        } else {
            self.value(-s1, -s2) - s1 - s2
        }
    }

    pub fn h(&self, s1: i64, s2: i64) -> i64 {
        self.value(s1, s2) - h_unlink(s1, s2)
    }

    /// Nonzero values of `h'(s) = h(s) - h1(s1) - h2(s2)`.
    pub fn h_prime(&self) -> BTreeMap<(i64, i64), i64> {
        let r = self.radius;
        let mut out = BTreeMap::new();
        for s1 in -r..=r {
            for s2 in -r..=r {
                let v = self.h(s1, s2) - self.comps[0].h(s1) - self.comps[1].h(s2);
                if v != 0 {
                    out.insert((s1, s2), v);
                }
            }
        }
        out
    }

    /// Nonzero values of `h` on the core box.
    pub fn h_support(&self) -> BTreeMap<(i64, i64), i64> {
        let r = self.radius;
        let mut out = BTreeMap::new();
        for s1 in -r..=r {
            for s2 in -r..=r {
                let v = self.h(s1, s2);
                if v != 0 {
                    out.insert((s1, s2), v);
                }
            }
        }
        out
    }

    pub fn is_unlink(&self) -> bool {
        self.h(0, 0) == 0
    }

    /// The same link with the components swapped.
    pub fn transpose(&self) -> Self {
        let t = Self::from_fn_unvalidated(self.radius, [self.comps[1].clone(), self.comps[0].clone()], |a, b| {
            self.value(b, a)
        });
        match &self.tilde {
            Some(d) => t.with_tilde(d.transpose()),
            None => t,
        }
    }

    /// `χ(s) = -H(s1-1,s2-1) + H(s1-1,s2) + H(s1,s2-1) - H(s1,s2)` as a polynomial.
    pub fn euler_characteristic(&self) -> LaurentPoly2 {
        let r = self.radius;
        let mut out = LaurentPoly2::zero();
        for s1 in -r - 1..=r + 2 {
            for s2 in -r - 1..=r + 2 {
                let chi =
                    -self.value(s1 - 1, s2 - 1) + self.value(s1 - 1, s2) + self.value(s1, s2 - 1) - self.value(s1, s2);
                out.add_term([2 * s1, 2 * s2], chi);
            }
        }
        out
    }

    pub fn validate(&self) -> HValidationReport {
        let mut rep = HValidationReport::default();
        for (k, c) in self.comps.iter().enumerate() {
            rep.absorb_component(k as u8 + 1, c.validate());
        }
        let r = self.radius;
        for t in -r..=r {
            if self.core_at(t, r) != self.comps[0].value(t) {
                rep.push(Axiom::Stabilization, &[t, r], format!("H(s1, R) != H1(s1) = {}", self.comps[0].value(t)));
            }
            if self.core_at(r, t) != self.comps[1].value(t) {
                rep.push(Axiom::Stabilization, &[r, t], format!("H(R, s2) != H2(s2) = {}", self.comps[1].value(t)));
            }
        }
        for s1 in -r - 1..=r + 1 {
            for s2 in -r - 1..=r + 1 {
                let v = self.value(s1, s2);
                if v < 0 {
                    rep.push(Axiom::Nonnegative, &[s1, s2], format!("H = {v}"));
                }
                for (d1, d2) in [(1, 0), (0, 1)] {
                    let step = self.value(s1 - d1, s2 - d2) - v;
                    if step != 0 && step != 1 {
                        rep.push(
                            Axiom::Growth,
                            &[s1, s2],
                            format!("step of {step} toward s - e{}", if d1 == 1 { 1 } else { 2 }),
                        );
                    }
                }
                let mirrored = self.value(-s1, -s2);
                if mirrored != v + s1 + s2 {
                    rep.push(
                        Axiom::Symmetry,
                        &[s1, s2],
                        format!("H(-s) = {mirrored}, H(s) + s1 + s2 = {}", v + s1 + s2),
                    );
                }
                if self.h(s1, s2) < 0 {
                    rep.push(Axiom::HNonnegative, &[s1, s2], format!("h = {}", self.h(s1, s2)));
                }
            }
        }
        rep
    }
}

/// H-function from `Δ̃ = (t1 t2)^(1/2) Δ` and the component H-functions,
/// with the sign of `Δ̃` chosen so that the result validates.
pub fn h_from_alexander_link(tilde: &LaurentPoly2, h1: &KnotHFunction, h2: &KnotHFunction) -> Result<LinkHFunction2> {
    if !tilde.has_integral_exponents() {
        return Err(Error::NonZeroLinking);
    }
    let radius = (tilde.max_abs_exponent() + 2).max(h1.radius()).max(h2.radius()).max(2);
    let comps = [h1.clone(), h2.clone()];
    let mut found: Vec<LinkHFunction2> = Vec::new();
    let mut first_report = None;
    for sign in [1, -1] {
        let signed = tilde.scale(sign);
        // tail[s1][s2] = Σ_{s1' > s1, s2' > s2} a, over the core.
        let side = (2 * radius + 2) as usize;
        let mut tail = vec![vec![0i64; side + 1]; side + 1];
        for i in (0..side).rev() {
            for j in (0..side).rev() {
                let s1 = i as i64 - radius;
                let s2 = j as i64 - radius;
                tail[i][j] =
                    signed.coeff([2 * (s1 + 1), 2 * (s2 + 1)]) + tail[i + 1][j] + tail[i][j + 1] - tail[i + 1][j + 1];
            }
        }
        let cand = LinkHFunction2::from_fn_unvalidated(radius, comps.clone(), |s1, s2| {
            h1.value(s1) + h2.value(s2) - tail[(s1 + radius) as usize][(s2 + radius) as usize]
        })
        .with_tilde(signed);
        let rep = cand.validate();
        if rep.is_clean() {
            found.push(cand);
        } else {
            first_report.get_or_insert(rep);
        }
    }
    match found.len() {
        0 => Err(Error::NotLSpaceConsistent(first_report.unwrap_or_default())),
        1 => Ok(found.remove(0)),
        _ if found[0].core == found[1].core => Ok(found.remove(0)),
        _ => Err(Error::AmbiguousSign),
    }
}

/// `(b1, b2)` with `b1 = max{s1 : h(s1,0) > 0}` and `b2 = max{s2 : h(0,s2) > 0}`.
pub fn b_invariants(l: &LinkHFunction2) -> Result<(i64, i64)> {
    if l.is_unlink() {
        return Err(Error::TrivialLink);
    }
    // h(s1, 0) tends to h2(0) as s1 grows, so b1 is finite only when h2(0) = 0.
    if l.component(2).h(0) > 0 {
        return Err(Error::ComponentNotUnknot(2));
    }
    if l.component(1).h(0) > 0 {
        return Err(Error::ComponentNotUnknot(1));
    }
    let r = l.radius();
    let b1 = (-r..=r).rev().find(|s| l.h(*s, 0) > 0).unwrap_or(0);
    let b2 = (-r..=r).rev().find(|s| l.h(0, *s) > 0).unwrap_or(0);
    Ok((b1, b2))
}

/// H-function of the knot left after blowing down the other (unknotted)
/// component: `s -> H(0, s)` for `which = 2`, `s -> H(s, 0)` for `which = 1`.
pub fn blowdown_h(l: &LinkHFunction2, which: u8) -> Result<KnotHFunction> {
    let other = 3 - which;
    if !l.component(other).is_unknot() {
        return Err(Error::ComponentNotUnknot(other));
    }
    let r = l.radius();
    let window = (-r..=r).map(|s| if which == 2 { l.value(0, s) } else { l.value(s, 0) }).collect();
    KnotHFunction::from_window(r, window)
}
