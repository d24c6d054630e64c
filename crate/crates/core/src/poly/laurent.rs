use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// Exponent key of a Laurent monomial. Every component is a doubled exponent,
/// so `k` stands for `t^(k/2)`.
pub trait Exponent: Copy + Ord + fmt::Debug {
    const VARS: &'static [&'static str];

    fn zero() -> Self;
    fn plus(self, other: Self) -> Self;
    fn negate(self) -> Self;
    fn doubled(self) -> Vec<i64>;
    fn from_doubled(parts: &[i64]) -> Self;
}

impl Exponent for i64 {
    const VARS: &'static [&'static str] = &["t"];

    fn zero() -> Self {
        0
    }
    fn plus(self, other: Self) -> Self {
        self + other
    }
    fn negate(self) -> Self {
        -self
    }
    fn doubled(self) -> Vec<i64> {
        vec![self]
    }
    fn from_doubled(parts: &[i64]) -> Self {
        parts[0]
    }
}

impl Exponent for [i64; 2] {
    const VARS: &'static [&'static str] = &["t1", "t2"];

    fn zero() -> Self {
        [0, 0]
    }
    fn plus(self, other: Self) -> Self {
        [self[0] + other[0], self[1] + other[1]]
    }
    fn negate(self) -> Self {
        [-self[0], -self[1]]
    }
    fn doubled(self) -> Vec<i64> {
        self.to_vec()
    }
    fn from_doubled(parts: &[i64]) -> Self {
        [parts[0], parts[1]]
    }
}

/// Integer Laurent polynomial with half-integer exponent support.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Laurent<E: Exponent> {
    terms: BTreeMap<E, i64>,
}

pub type LaurentPoly1 = Laurent<i64>;
pub type LaurentPoly2 = Laurent<[i64; 2]>;

impl<E: Exponent> Laurent<E> {
    pub fn zero() -> Self {
        Laurent { terms: BTreeMap::new() }
    }

    pub fn constant(c: i64) -> Self {
        Self::monomial(c, E::zero())
    }

    /// `c * t^(e/2)` with `e` in doubled form.
    pub fn monomial(c: i64, e: E) -> Self {
        let mut p = Self::zero();
        p.add_term(e, c);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (E, i64)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn add_term(&mut self, e: E, c: i64) {
        if c == 0 {
            return;
        }
        let slot = self.terms.entry(e).or_insert(0);
        *slot += c;
        if *slot == 0 {
            self.terms.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: E) -> i64 {
        self.terms.get(&e).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (E, i64)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, *c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn has_integral_exponents(&self) -> bool {
        self.terms.keys().all(|e| e.doubled().iter().all(|k| k % 2 == 0))
    }

    pub fn map_exponents(&self, f: impl Fn(E) -> E) -> Self {
        Self::from_terms(self.terms().map(|(e, c)| (f(e), c)))
    }

    /// The image under `t -> t^-1` in every variable.
    pub fn invert_variables(&self) -> Self {
        self.map_exponents(E::negate)
    }

    pub fn scale(&self, k: i64) -> Self {
        Self::from_terms(self.terms().map(|(e, c)| (e, c * k)))
    }

    pub fn shift(&self, by: E) -> Self {
        self.map_exponents(|e| e.plus(by))
    }

    pub fn is_symmetric(&self, sign: i64) -> bool {
        self.invert_variables() == self.scale(sign)
    }

    /// Sum of coefficients, i.e. the value at `t = 1`.
    pub fn eval_at_one(&self) -> i64 {
        self.terms.values().sum()
    }
}

impl LaurentPoly1 {
    pub fn max_exponent(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }
}

impl LaurentPoly2 {
    /// Largest absolute integer exponent over both variables.
    pub fn max_abs_exponent(&self) -> i64 {
        self.terms.keys().flat_map(|e| [e[0].abs(), e[1].abs()]).map(|k| (k + 1) / 2).max().unwrap_or(0)
    }

    /// Swap `t1` and `t2`.
    pub fn transpose(&self) -> Self {
        self.map_exponents(|e| [e[1], e[0]])
    }

    /// Exact quotient by `(t_k - 1)`, `k` in {0, 1}. Returns `None` when the
    /// division leaves a remainder.
    pub fn div_by_linear(&self, k: usize) -> Option<Self> {
        let mut slices: BTreeMap<(i64, i64), BTreeMap<i64, i64>> = BTreeMap::new();
        for (e, c) in self.terms() {
            slices.entry((e[1 - k], e[k].rem_euclid(2))).or_default().insert(e[k], c);
        }
        let mut quotient = Self::zero();
        for ((other, _), slice) in slices {
            let (&lo, _) = slice.iter().next()?;
            let (&hi, _) = slice.iter().next_back()?;
            let mut acc = 0;
            let mut e = hi;
            while e >= lo {
                acc += slice.get(&e).copied().unwrap_or(0);
                if e > lo {
                    let mut q = [0, 0];
                    q[k] = e - 2;
                    q[1 - k] = other;
                    quotient.add_term(q, acc);
                }
                e -= 2;
            }
            if acc != 0 {
                return None;
            }
        }
        Some(quotient)
    }
}

/// `(t1 t2)^(1/2) * Δ` for a two-variable Alexander polynomial.
pub fn tilde_normalize_link(delta: &LaurentPoly2) -> Result<LaurentPoly2> {
    if !delta.is_symmetric(1) && !delta.is_symmetric(-1) {
        return Err(Error::NotSymmetric);
    }
    let shifted = delta.shift([1, 1]);
    if shifted.has_integral_exponents() {
        Ok(shifted)
    } else {
        Err(Error::NonIntegralExponents)
    }
}

impl<'a, E: Exponent> Add<&'a Laurent<E>> for &'a Laurent<E> {
    type Output = Laurent<E>;
    fn add(self, rhs: &'a Laurent<E>) -> Laurent<E> {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, c);
        }
        out
    }
}

impl<'a, E: Exponent> Sub<&'a Laurent<E>> for &'a Laurent<E> {
    type Output = Laurent<E>;
    fn sub(self, rhs: &'a Laurent<E>) -> Laurent<E> {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, -c);
        }
        out
    }
}

impl<'a, E: Exponent> Mul<&'a Laurent<E>> for &'a Laurent<E> {
    type Output = Laurent<E>;
    fn mul(self, rhs: &'a Laurent<E>) -> Laurent<E> {
        let mut out = Laurent::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in rhs.terms() {
                out.add_term(e1.plus(e2), c1 * c2);
            }
        }
        out
    }
}

impl<E: Exponent> Neg for &Laurent<E> {
    type Output = Laurent<E>;
    fn neg(self) -> Laurent<E> {
        self.scale(-1)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<E: Exponent> $tr for Laurent<E> {
            type Output = Laurent<E>;
            fn $m(self, rhs: Laurent<E>) -> Laurent<E> {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<E: Exponent> Neg for Laurent<E> {
    type Output = Laurent<E>;
    fn neg(self) -> Laurent<E> {
        self.scale(-1)
    }
}

fn fmt_exponent(k: i64) -> String {
    if k % 2 == 0 {
        let n = k / 2;
        if n < 0 {
            format!("^({n})")
        } else {
            format!("^{n}")
        }
    } else {
        format!("^({k}/2)")
    }
}

impl<E: Exponent> fmt::Display for Laurent<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (n, (e, c)) in self.terms().rev().enumerate() {
            let mono: Vec<String> = e
                .doubled()
                .iter()
                .zip(E::VARS)
                .filter(|(k, _)| **k != 0)
                .map(|(k, v)| if *k == 2 { v.to_string() } else { format!("{v}{}", fmt_exponent(*k)) })
                .collect();
            let sign = if c < 0 { "-" } else { "+" };
            if n == 0 {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let a = c.abs();
            match (a, mono.is_empty()) {
                (_, true) => write!(f, "{a}")?,
                (1, false) => write!(f, "{}", mono.join("*"))?,
                (_, false) => write!(f, "{a}*{}", mono.join("*"))?,
            }
        }
        Ok(())
    }
}

impl<E: Exponent> fmt::Debug for Laurent<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Laurent({self})")
    }
}
