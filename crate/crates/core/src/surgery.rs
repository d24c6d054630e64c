//! Closed-form d-invariants: lens spaces, circle bundles, knot surgery and
//! surgery on two-component links.

use std::fmt;

use num_rational::Ratio;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::hfunc::{KnotHFunction, LinkHFunction2};

pub type Rational = Ratio<i64>;

/// An exact d-invariant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DInvariant(pub Rational);

impl DInvariant {
    pub fn from_integer(n: i64) -> Self {
        DInvariant(Rational::from_integer(n))
    }

    pub fn value(self) -> Rational {
        self.0
    }
}

impl fmt::Display for DInvariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_rational(f, self.0)
    }
}

/// `a/b` in lowest terms, or just `a` when `b = 1`.
pub fn format_rational(r: Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn write_rational(f: &mut fmt::Formatter<'_>, r: Rational) -> fmt::Result {
    f.write_str(&format_rational(r))
}

impl Serialize for DInvariant {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

fn check_label(p: i64, i: i64) -> Result<()> {
    if p == 0 {
        return Err(Error::ZeroFraming);
    }
    if 2 * i.abs() > p.abs() {
        return Err(Error::InvalidSpinc { p, i });
    }
    Ok(())
}

/// d-invariant of the lens space `L(p,1)` in label `i`.
pub fn phi(p: i64, i: i64) -> Result<Rational> {
    check_label(p, i)?;
    if p < 0 {
        return phi(-p, i).map(|v| -v);
    }
    let best = (-2..=2)
        .map(|k| {
            let s = i + k * p;
            let v = p + 2 * s;
            Rational::new(1, 4) * (Rational::from_integer(1) - Rational::new(v * v, p))
        })
        .max()
        .expect("nonempty");
    Ok(-best)
}

/// Canonical representative of `s mod |p|` in `(-|p|/2, |p|/2]`.
pub fn canonical_label(p: i64, s: i64) -> i64 {
    let m = p.abs();
    let r = s.rem_euclid(m);
    if 2 * r > m {
        r - m
    } else {
        r
    }
}

/// All canonical labels for framing `p`, in increasing order.
pub fn labels(p: i64) -> impl Iterator<Item = i64> {
    let m = p.abs();
    (-(m - 1) / 2..=m / 2).map(move |i| canonical_label(m, i))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct SpincLabel2 {
    pub i1: i64,
    pub i2: i64,
}

impl SpincLabel2 {
    pub fn new(i1: i64, i2: i64) -> Self {
        SpincLabel2 { i1, i2 }
    }

    pub fn conjugate(self) -> Self {
        SpincLabel2 { i1: -self.i1, i2: -self.i2 }
    }
}

/// Canonical label of `(s1, s2)` modulo `(p1, p2)`.
pub fn reduce_spinc(p1: i64, p2: i64, s1: i64, s2: i64) -> SpincLabel2 {
    SpincLabel2 { i1: canonical_label(p1, s1), i2: canonical_label(p2, s2) }
}

/// Every canonical label for `(p1, p2)`, lexicographically ordered.
pub fn all_labels(p1: i64, p2: i64) -> Vec<SpincLabel2> {
    let mut out: Vec<SpincLabel2> =
        labels(p1).flat_map(|i1| labels(p2).map(move |i2| SpincLabel2::new(i1, i2))).collect();
    out.sort();
    out
}

/// `(s+, s-)` for one coordinate: `s+` is the least nonnegative residue of
/// `i mod p`, and `s- = s+ - p` when `s+ > 0`, else `0`.
pub fn quadrant_coords(p: i64, i: i64) -> Result<(i64, i64)> {
    if p <= 0 {
        return Err(Error::NonPositiveFraming(p));
    }
    let plus = i.rem_euclid(p);
    let minus = if plus > 0 { plus - p } else { 0 };
    Ok((plus, minus))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct QuadrantPoints {
    pub pp: (i64, i64),
    pub pm: (i64, i64),
    pub mp: (i64, i64),
    pub mm: (i64, i64),
}

impl QuadrantPoints {
    pub fn all(&self) -> [(i64, i64); 4] {
        [self.pp, self.pm, self.mp, self.mm]
    }
}

/// The four representatives of `label` closest to the origin, one per quadrant.
pub fn quadrant_points(p1: i64, p2: i64, label: SpincLabel2) -> Result<QuadrantPoints> {
    let (a_plus, a_minus) = quadrant_coords(p1, label.i1)?;
    let (b_plus, b_minus) = quadrant_coords(p2, label.i2)?;
    Ok(QuadrantPoints { pp: (a_plus, b_plus), pm: (a_plus, b_minus), mp: (a_minus, b_plus), mm: (a_minus, b_minus) })
}

/// d-invariant of `p`-surgery on a knot, `p > 0`.
pub fn d_knot_surgery(k: &KnotHFunction, p: i64, i: i64) -> Result<DInvariant> {
    if p <= 0 {
        return Err(Error::NonPositiveFraming(p));
    }
    let base = phi(p, i)?;
    let (plus, minus) = quadrant_coords(p, i)?;
    let m = k.h(plus).max(k.h(minus));
    Ok(DInvariant(base - Rational::from_integer(2 * m)))
}

/// d-invariant of `(p1, p2)`-surgery on a two-component link.
pub fn d_link_surgery(l: &LinkHFunction2, p1: i64, p2: i64, label: SpincLabel2) -> Result<DInvariant> {
    let phis = phi(p1, label.i1)? + phi(p2, label.i2)?;
    let d = match (p1 > 0, p2 > 0) {
        (false, false) => phis,
        (true, true) => {
            let q = quadrant_points(p1, p2, label)?;
            let m = q.all().iter().map(|&(a, b)| l.h(a, b)).max().expect("four points");
            phis - Rational::from_integer(2 * m)
        }
        (true, false) => d_knot_surgery(l.component(1), p1, label.i1)?.0 + phi(p2, label.i2)?,
        (false, true) => d_knot_surgery(l.component(2), p2, label.i2)?.0 + phi(p1, label.i1)?,
    };
    Ok(DInvariant(d))
}

/// `⌈(g - |t|)/2⌉` for `|t| <= g`, else 0.
pub fn f_g(g: i64, t: i64) -> i64 {
    let d = g - t.abs();
    if d < 0 {
        0
    } else {
        (d + 1) / 2
    }
}

/// Bottom and top d-invariants of the circle bundles `B_p` and `B_-p` of
/// Euler number `±p` over a genus `g` surface.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CircleBundleD {
    pub bot_pos: Rational,
    pub top_pos: Rational,
    pub bot_neg: Rational,
    pub top_neg: Rational,
}

pub fn d_circle_bundle(p: i64, g: i64, i: i64) -> Result<CircleBundleD> {
    if p <= 0 {
        return Err(Error::NonPositiveFraming(p));
    }
    let ph = phi(p, i)?;
    let g_r = Rational::from_integer(g);
    let f = Rational::from_integer(f_g(g, i));
    let bot_pos = ph - g_r;
    let bot_neg = -ph + Rational::from_integer(2) * f - g_r;
    Ok(CircleBundleD { bot_pos, top_neg: -bot_pos, bot_neg, top_pos: -bot_neg })
}
