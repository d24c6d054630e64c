//! Valid h-functions assembled from centered plateaus, for tests and demos.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::hfunc::{KnotHFunction, LinkHFunction2};

/// `s -> max(0, min(a - |s1|, b - |s2|, c - |s1| - |s2|))`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Plateau {
    pub a: i64,
    pub b: i64,
    pub c: i64,
}

impl Plateau {
    pub fn at(&self, s1: i64, s2: i64) -> i64 {
        (self.a - s1.abs()).min(self.b - s2.abs()).min(self.c - s1.abs() - s2.abs()).max(0)
    }
}

/// `h(s) = max(h1(s1), h2(s2), max_j plateau_j(s))`.
///
/// Every term is symmetric, finitely supported in the link directions and
/// changes by 0 or 1 per unit step toward the origin, and those properties
/// survive the maximum, so the result always validates.
pub fn staircase_link(plateaus: &[Plateau], comps: [KnotHFunction; 2]) -> Result<LinkHFunction2> {
    let reach = plateaus.iter().map(|p| p.a.max(p.b).max(p.c)).max().unwrap_or(0);
    let radius = reach.max(comps[0].radius()).max(comps[1].radius()).max(1) + 1;
    let h1 = comps[0].clone();
    let h2 = comps[1].clone();
    LinkHFunction2::from_h_fn(radius, comps, move |s1, s2| {
        plateaus.iter().map(|p| p.at(s1, s2)).chain([h1.h(s1), h2.h(s2)]).max().unwrap_or(0)
    })
}
