//! Classical invariants and applications derived from H-functions.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::hfunc::{b_invariants, nu_plus, KnotHFunction, LinkHFunction2};
use crate::poly::LaurentPoly2;
use crate::surgery::{canonical_label, d_link_surgery, f_g, phi, Rational, SpincLabel2};

/// Sato-Levine invariant `β = -Σ h'`.
pub fn sato_levine(l: &LinkHFunction2) -> i64 {
    -l.h_prime().values().sum::<i64>()
}

/// `Δ̃'(1,1)` where `Δ̃ = (t1 - 1)(t2 - 1) Δ̃'`, if the division is exact.
pub fn torres_quotient_at_one(tilde: &LaurentPoly2) -> Option<i64> {
    Some(tilde.div_by_linear(0)?.div_by_linear(1)?.eval_at_one())
}

/// Compares `-Σ h'` with `Δ̃'(1,1)` when `Δ̃` is known.
pub fn sato_levine_cross_check(l: &LinkHFunction2) -> Option<bool> {
    let tilde = l.tilde_alexander()?;
    Some(torres_quotient_at_one(tilde) == Some(sato_levine(l)))
}

/// `a2 = Σ h(s)`.
pub fn conway_a2(k: &KnotHFunction) -> i64 {
    k.sum_h()
}

/// Casson invariant of `(e1, e2)`-surgery, `e_i = ±1`.
pub fn casson_link_pm1(l: &LinkHFunction2, e1: i64, e2: i64) -> i64 {
    let hp: i64 = l.h_prime().values().sum();
    e1 * e2 * hp + e1 * l.component(1).sum_h() + e2 * l.component(2).sum_h()
}

/// Casson invariant of `e`-surgery on an L-space knot. `lspace_knot` must
/// assert that `k` comes from an L-space knot; otherwise the torsion
/// contribution is unknown.
pub fn casson_knot_pm1(k: &KnotHFunction, e: i64, lspace_knot: bool) -> Result<i64> {
    if !lspace_knot {
        return Err(Error::TorsionUnknown);
    }
    Ok(e * k.sum_h())
}

/// `-Σ_{s1 != 0} h(s1, s2)`, the torsion Euler characteristic of the knot
/// obtained by blowing down the first component.
pub fn torsion_euler_blowdown(l: &LinkHFunction2) -> Result<i64> {
    for k in [1, 2] {
        if !l.component(k).is_unknot() {
            return Err(Error::ComponentNotUnknot(k));
        }
    }
    Ok(-l.h_support().iter().filter(|((s1, _), _)| *s1 != 0).map(|(_, v)| v).sum::<i64>())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum LSpaceRegion {
    /// `S_{p1,p2}` is an L-space iff `p1 > t1` and `p2 > t2`.
    Exact { t1: i64, t2: i64 },
    /// Conditions every L-space surgery must satisfy.
    NecessaryOnly { nu_plus: [i64; 2], unknotted: [bool; 2] },
}

impl LSpaceRegion {
    /// `Some(answer)` when decided; `None` when the necessary conditions hold
    /// but do not settle the question.
    pub fn contains(&self, p1: i64, p2: i64) -> Option<bool> {
        match *self {
            LSpaceRegion::Exact { t1, t2 } => Some(p1 > t1 && p2 > t2),
            LSpaceRegion::NecessaryOnly { nu_plus, unknotted } => {
                let sign = p1 > 0 || p2 > 0;
                let comp = |k: usize, p: i64| if unknotted[k] { p != 0 } else { p >= 2 * nu_plus[k] - 1 };
                if sign && (comp(0, p1) || comp(1, p2)) {
                    None
                } else {
                    Some(false)
                }
            }
        }
    }
}

impl fmt::Display for LSpaceRegion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LSpaceRegion::Exact { t1, t2 } => write!(f, "p1>{t1} and p2>{t2} (exact)"),
            LSpaceRegion::NecessaryOnly { nu_plus, unknotted } => {
                let cond = |k: usize| {
                    if unknotted[k] {
                        format!("p{}!=0", k + 1)
                    } else {
                        format!("p{}>={}", k + 1, 2 * nu_plus[k] - 1)
                    }
                };
                write!(f, "(p1>0 or p2>0) and ({} or {}) (necessary only)", cond(0), cond(1))
            }
        }
    }
}

pub fn lspace_region(l: &LinkHFunction2) -> Result<LSpaceRegion> {
    if l.is_unlink() {
        return Err(Error::TrivialLink);
    }
    let unknotted = [l.component(1).is_unknot(), l.component(2).is_unknot()];
    if unknotted == [true, true] {
        let (b1, b2) = b_invariants(l)?;
        Ok(LSpaceRegion::Exact { t1: 2 * b1, t2: 2 * b2 })
    } else {
        Ok(LSpaceRegion::NecessaryOnly { nu_plus: [nu_plus(l.component(1)), nu_plus(l.component(2))], unknotted })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GenusBoundReport {
    pub cap: i64,
    /// Pairs `(g1, g2)` with both entries at most `cap` that cannot bound.
    pub excluded: Vec<(i64, i64)>,
    /// Smallest `g1 + g2` over pairs that are not excluded, if any.
    pub min_total: Option<i64>,
}

/// Whether the genera `(g1, g2)` are ruled out by `h(s) <= f_g1(t1) + f_g2(t2)`.
pub fn genus_pair_excluded(l: &LinkHFunction2, g1: i64, g2: i64) -> bool {
    let r = l.radius();
    let pmax = 2 * r + 2;
    let support = l.h_support();
    for (&(s1, s2), &h) in &support {
        for p1 in 1..=pmax {
            for p2 in 1..=pmax {
                let t1 = canonical_label(p1, s1);
                let t2 = canonical_label(p2, s2);
                if h > f_g(g1, t1) + f_g(g2, t2) {
                    return true;
                }
            }
        }
    }
    // Far out along a row h equals h1 (resp. h2); a framing on the other
    // coordinate can then make its genus weight vanish.
    for (k, g) in [(1u8, g1), (2u8, g2)] {
        let comp = l.component(k);
        for s in -comp.radius()..=comp.radius() {
            let h = comp.h(s);
            if h > 0 && (1..=pmax).any(|p| h > f_g(g, canonical_label(p, s))) {
                return true;
            }
        }
    }
    false
}

pub fn genus_lower_bound(l: &LinkHFunction2, cap: i64) -> GenusBoundReport {
    let mut excluded = Vec::new();
    let mut min_total = None;
    for g1 in 0..=cap {
        for g2 in 0..=cap {
            if genus_pair_excluded(l, g1, g2) {
                excluded.push((g1, g2));
            } else {
                let t = g1 + g2;
                min_total = Some(min_total.map_or(t, |m: i64| m.min(t)));
            }
        }
    }
    GenusBoundReport { cap, excluded, min_total }
}

/// d-invariants keyed by label tuple.
pub type DTable = BTreeMap<Vec<i64>, Rational>;

/// Every canonical label tuple for the given framings.
pub fn label_tuples(framings: &[i64]) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for &p in framings {
        let m = p.abs();
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (-(m - 1) / 2..=m / 2).map(move |i| {
                    let mut v = prefix.clone();
                    v.push(i);
                    v
                })
            })
            .collect();
    }
    out
}

/// d-invariants of `(p1, p2)`-surgery on `l` for every label.
pub fn link_d_table(l: &LinkHFunction2, p1: i64, p2: i64) -> Result<DTable> {
    let mut out = DTable::new();
    for t in label_tuples(&[p1, p2]) {
        let d = d_link_surgery(l, p1, p2, SpincLabel2::new(t[0], t[1]))?;
        out.insert(t, d.0);
    }
    Ok(out)
}

/// Checks `d(S_{-p}, t) <= Σ (-φ(p_i, t_i) + 2 f_{g_i}(t_i))` and
/// `-d(S_p, t) <=` the same bound, for every label, on whichever tables are given.
pub fn d_genus_check(
    d_negative: Option<&DTable>,
    d_positive: Option<&DTable>,
    genera: &[i64],
    framings: &[i64],
) -> Result<bool> {
    if genera.len() != framings.len() {
        return Err(Error::LabelMismatch(format!("{} genera for {} framings", genera.len(), framings.len())));
    }
    if let Some(p) = framings.iter().find(|p| **p <= 0) {
        return Err(Error::NonPositiveFraming(*p));
    }
    let labels = label_tuples(framings);
    let bound = |t: &[i64]| -> Result<Rational> {
        let mut acc = Rational::from_integer(0);
        for ((&p, &g), &i) in framings.iter().zip(genera).zip(t) {
            acc += -phi(p, i)? + Rational::from_integer(2 * f_g(g, i));
        }
        Ok(acc)
    };
    let mut ok = true;
    for (table, sign) in [(d_negative, 1), (d_positive, -1)] {
        let Some(table) = table else { continue };
        if table.len() != labels.len() || labels.iter().any(|t| !table.contains_key(t)) {
            return Err(Error::LabelMismatch(format!(
                "expected {} canonical labels, got {}",
                labels.len(),
                table.len()
            )));
        }
        for t in &labels {
            if Rational::from_integer(sign) * table[t] > bound(t)? {
                ok = false;
            }
        }
    }
    Ok(ok)
}

/// `d_- - 2 <= d_+ <= d_-`.
pub fn skein_check(d_plus: Rational, d_minus: Rational) -> bool {
    d_minus - Rational::from_integer(2) <= d_plus && d_plus <= d_minus
}

#[derive(Debug, Clone, Serialize)]
pub struct CassonTable {
    #[serde(rename = "++")]
    pub pp: i64,
    #[serde(rename = "+-")]
    pub pm: i64,
    #[serde(rename = "-+")]
    pub mp: i64,
    #[serde(rename = "--")]
    pub mm: i64,
}

pub fn casson_table(l: &LinkHFunction2) -> CassonTable {
    CassonTable {
        pp: casson_link_pm1(l, 1, 1),
        pm: casson_link_pm1(l, 1, -1),
        mp: casson_link_pm1(l, -1, 1),
        mm: casson_link_pm1(l, -1, -1),
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct InvariantsReport {
    pub beta: i64,
    pub casson: CassonTable,
    pub lspace_region: Option<String>,
    pub genus_lower_bound: Option<i64>,
}

pub fn summary(l: &LinkHFunction2, genus_cap: i64) -> InvariantsReport {
    InvariantsReport {
        beta: sato_levine(l),
        casson: casson_table(l),
        lspace_region: lspace_region(l).ok().map(|r| r.to_string()),
        genus_lower_bound: genus_lower_bound(l, genus_cap).min_total,
    }
}
