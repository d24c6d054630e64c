use std::fmt;

use super::laurent::LaurentPoly1;
use crate::error::{Error, Result};

/// Formal series in `t^-1` with exponents bounded above.
///
/// `coeffs[k]` is the coefficient of `t^(top - k)`. Below the stored window the
/// coefficients continue linearly from the last stored value with step
/// `tail_slope` per unit decrease of the exponent (slope 0 is a constant tail).
#[derive(Clone, PartialEq, Eq)]
pub struct NegPowerSeries {
    top: i64,
    coeffs: Vec<i64>,
    tail_slope: i64,
}

impl NegPowerSeries {
    pub fn zero() -> Self {
        NegPowerSeries { top: 0, coeffs: Vec::new(), tail_slope: 0 }
    }

    fn normalized(top: i64, mut coeffs: Vec<i64>, tail_slope: i64) -> Self {
        while coeffs.len() >= 2 && coeffs[coeffs.len() - 1] == coeffs[coeffs.len() - 2] + tail_slope {
            coeffs.pop();
        }
        let lead = coeffs.iter().take_while(|c| **c == 0).count();
        if lead == coeffs.len() && tail_slope == 0 {
            return Self::zero();
        }
        let lead = lead.min(coeffs.len() - 1);
        coeffs.drain(..lead);
        NegPowerSeries { top: top - lead as i64, coeffs, tail_slope }
    }

    /// A polynomial with integer exponents, viewed as a series with zero tail.
    pub fn from_poly(p: &LaurentPoly1) -> Result<Self> {
        if !p.has_integral_exponents() {
            return Err(Error::NonIntegralExponents);
        }
        let (Some(hi), Some(lo)) = (p.max_exponent(), p.min_exponent()) else {
            return Ok(Self::zero());
        };
        let (hi, lo) = (hi / 2, lo / 2);
        let mut coeffs: Vec<i64> = (lo..=hi).rev().map(|e| p.coeff(2 * e)).collect();
        coeffs.push(0);
        Ok(Self::normalized(hi, coeffs, 0))
    }

    /// Build from an explicit window plus tail slope.
    pub fn from_window(top: i64, coeffs: Vec<i64>, tail_slope: i64) -> Self {
        if coeffs.is_empty() {
            return Self::zero();
        }
        Self::normalized(top, coeffs, tail_slope)
    }

    pub fn top(&self) -> i64 {
        self.top
    }

    /// Lowest exponent stored explicitly.
    pub fn bottom(&self) -> i64 {
        self.top - self.coeffs.len() as i64 + 1
    }

    pub fn tail_slope(&self) -> i64 {
        self.tail_slope
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, e: i64) -> i64 {
        let Some(&last) = self.coeffs.last() else {
            return 0;
        };
        if e > self.top {
            0
        } else if e >= self.bottom() {
            self.coeffs[(self.top - e) as usize]
        } else {
            last + self.tail_slope * (self.bottom() - e)
        }
    }

    /// Coefficients at exponents `top, top-1, ..., lo`.
    pub fn window(&self, lo: i64) -> Vec<(i64, i64)> {
        (lo..=self.top).rev().map(|e| (e, self.coeff(e))).collect()
    }

    fn multiply_by_kernel(&self, kernel: impl Fn(i64) -> i64) -> Result<Self> {
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let span = self.coeffs.len() as i64;
        let len = 2 * span + 8;
        let out: Vec<i64> =
            (0..len).map(|n| (0..=n).map(|k| kernel(k) * self.coeff(self.top - (n - k))).sum()).collect();
        let tail = &out[(span + 4) as usize..];
        let diffs: Vec<i64> = tail.windows(2).map(|w| w[1] - w[0]).collect();
        if diffs.windows(2).any(|w| w[0] != w[1]) {
            return Err(Error::TailNotRecognized);
        }
        Ok(Self::normalized(self.top, out, diffs[0]))
    }

    /// Multiply by `1/(1 - t^-1) = Σ t^-k`.
    pub fn divide_by_geometric(&self) -> Result<Self> {
        self.multiply_by_kernel(|_| 1)
    }

    /// Multiply by `1/(1 - t^-1)^2 = Σ (k+1) t^-k`.
    pub fn divide_by_geometric_squared(&self) -> Result<Self> {
        self.multiply_by_kernel(|k| k + 1)
    }

    /// Multiply by `(1 - t^-1)`. Exact inverse of [`Self::divide_by_geometric`].
    pub fn times_one_minus_inverse(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let coeffs: Vec<i64> =
            (self.bottom() - 1..=self.top).rev().map(|e| self.coeff(e) - self.coeff(e + 1)).collect();
        Self::normalized(self.top, coeffs, 0)
    }

    /// Multiply by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        NegPowerSeries { top: self.top + k, ..self.clone() }
    }
}

/// `Δ / (1 - t^-1)` expanded in `t^-1`.
pub fn tilde_normalize_knot(delta: &LaurentPoly1) -> Result<NegPowerSeries> {
    if !delta.is_symmetric(1) && !delta.is_symmetric(-1) {
        return Err(Error::NotSymmetric);
    }
    NegPowerSeries::from_poly(delta)?.divide_by_geometric()
}

impl fmt::Debug for NegPowerSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NegPowerSeries(top={}, {:?}, slope={})", self.top, self.coeffs, self.tail_slope)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn trefoil() -> LaurentPoly1 {
        LaurentPoly1::from_terms([(2, 1), (0, -1), (-2, 1)])
    }

    #[test]
    fn unknot_geometric() {
        let s = tilde_normalize_knot(&LaurentPoly1::constant(1)).unwrap();
        assert_eq!(s.tail_slope(), 0);
        for e in -20..=0 {
            assert_eq!(s.coeff(e), 1);
        }
        assert_eq!(s.coeff(1), 0);
    }

    #[test]
    fn trefoil_series() {
        let s = tilde_normalize_knot(&trefoil()).unwrap();
        assert_eq!(s.coeff(1), 1);
        assert_eq!(s.coeff(0), 0);
        for e in -15..=-1 {
            assert_eq!(s.coeff(e), 1);
        }
    }

    #[test]
    fn constant_squared() {
        let s = NegPowerSeries::from_poly(&LaurentPoly1::constant(1)).unwrap().divide_by_geometric_squared().unwrap();
        assert_eq!(s.tail_slope(), 1);
        for k in 0..30 {
            assert_eq!(s.coeff(-k), k + 1);
        }
    }

    #[test]
    fn zero_stays_zero() {
        assert!(NegPowerSeries::zero().divide_by_geometric_squared().unwrap().is_zero());
    }

    #[test]
    fn quadratic_tail_rejected() {
        let s = NegPowerSeries::from_window(0, vec![1], 0);
        assert_eq!(s.coeff(-5), 1);
        assert_eq!(s.divide_by_geometric_squared(), Err(Error::TailNotRecognized));
        let linear = s.divide_by_geometric().unwrap();
        assert_eq!(linear.tail_slope(), 1);
    }

    #[test]
    fn inverse_of_geometric() {
        let s = NegPowerSeries::from_poly(&trefoil()).unwrap();
        let g = s.divide_by_geometric().unwrap();
        assert_eq!(g.times_one_minus_inverse(), s);
    }
}
