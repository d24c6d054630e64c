use num_integer::Integer;

use super::laurent::{LaurentPoly1, LaurentPoly2};
use crate::error::{Error, Result};

pub fn unknot_alexander() -> LaurentPoly1 {
    LaurentPoly1::constant(1)
}

/// Divide ordinary polynomials (coefficients lowest degree first) exactly.
fn exact_div(num: &[i64], den: &[i64]) -> Option<Vec<i64>> {
    let mut rem = num.to_vec();
    let dlead = *den.last()?;
    if num.len() < den.len() {
        return rem.iter().all(|c| *c == 0).then(Vec::new);
    }
    let mut q = vec![0; num.len() - den.len() + 1];
    for k in (0..q.len()).rev() {
        let c = rem[k + den.len() - 1];
        if c % dlead != 0 {
            return None;
        }
        let f = c / dlead;
        q[k] = f;
        for (j, d) in den.iter().enumerate() {
            rem[k + j] -= f * d;
        }
    }
    rem.iter().all(|c| *c == 0).then_some(q)
}

fn binomial_minus_one(n: usize) -> Vec<i64> {
    let mut v = vec![0; n + 1];
    v[0] = -1;
    v[n] = 1;
    v
}

fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Symmetrized Alexander polynomial of the torus knot `T(p,q)`.
pub fn torus_knot_alexander(p: i64, q: i64) -> Result<LaurentPoly1> {
    if p < 2 || q < 2 || p.gcd(&q) != 1 {
        return Err(Error::InvalidTorusParameters { p, q });
    }
    let (pu, qu) = (p as usize, q as usize);
    let num = poly_mul(&binomial_minus_one(pu * qu), &binomial_minus_one(1));
    let den = poly_mul(&binomial_minus_one(pu), &binomial_minus_one(qu));
    let quot = exact_div(&num, &den).ok_or(Error::InvalidTorusParameters { p, q })?;
    let half = (quot.len() as i64 - 1) / 2;
    Ok(LaurentPoly1::from_terms(quot.iter().enumerate().map(|(k, c)| (2 * (k as i64 - half), *c))))
}

/// `Δ̃` of the Whitehead link, `-(t1 - 1)(t2 - 1)`.
pub fn whitehead_tilde() -> LaurentPoly2 {
    LaurentPoly2::from_terms([([2, 2], -1), ([2, 0], 1), ([0, 2], 1), ([0, 0], -1)])
}

/// Symmetric Alexander polynomial of the Whitehead link.
pub fn whitehead_alexander() -> LaurentPoly2 {
    whitehead_tilde().shift([-1, -1])
}

/// `Δ̃` of the two-component unlink.
pub fn unlink2_tilde() -> LaurentPoly2 {
    LaurentPoly2::zero()
}
