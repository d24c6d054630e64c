//! Truncated surgery complexes as graded rectangular cell complexes, and the
//! combinatorial d-invariant computed from them.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::hfunc::LinkHFunction2;
use crate::surgery::{all_labels, canonical_label, d_link_surgery, phi, Rational, SpincLabel2};

/// Which generator a cell carries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Flavor {
    /// `z_{1,2}(s)`, a 0-cell.
    Vertex,
    /// `z_2(s)`, the 1-cell from `s` to `s + Λ1`.
    EdgeH,
    /// `z_1(s)`, the 1-cell from `s` to `s + Λ2`.
    EdgeV,
    /// `z_∅(s)`, the 2-cell spanned at `s`.
    Square,
}

impl Flavor {
    pub fn dim(self) -> u8 {
        match self {
            Flavor::Vertex => 0,
            Flavor::EdgeH | Flavor::EdgeV => 1,
            Flavor::Square => 2,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GradedCell {
    pub flavor: Flavor,
    /// Grid coordinates `(a, b)`, with lattice point `s = (r1 + a p1, r2 + b p2)`.
    pub grid: (i64, i64),
    pub lattice: (i64, i64),
    pub rel_deg: i64,
    pub erased: bool,
}

impl GradedCell {
    pub fn dim(&self) -> u8 {
        self.flavor.dim()
    }
}

/// One component of the differential: `D z(from) ∋ U^u_power z(to)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Incidence {
    pub from: usize,
    pub to: usize,
    pub u_power: i64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SurgeryCase {
    /// Both framings negative: nothing erased.
    A,
    /// Both framings positive: the whole boundary erased.
    B,
    /// Mixed signs: two opposite sides erased.
    C,
}

/// Pair of opposite sides of a grid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Axis {
    LeftRight,
    TopBottom,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ErasedBoundary {
    None,
    All,
    Sides(Axis),
}

#[derive(Debug, Clone, Serialize)]
pub struct TruncatedComplex {
    cells: Vec<GradedCell>,
    #[serde(skip)]
    index: HashMap<(Flavor, i64, i64), usize>,
    incidences: Vec<Incidence>,
    pub case: SurgeryCase,
    pub erased: ErasedBoundary,
    pub framing: (i64, i64),
    pub label: SpincLabel2,
    pub truncation: i64,
    /// Square index ranges `[min, max]` along each axis.
    pub square_range: [(i64, i64); 2],
    residues: (i64, i64),
}

/// Square indices `a` with `|r + a p| <= b`, as an inclusive range.
fn square_range(r: i64, p: i64, b: i64) -> (i64, i64) {
    let inside = |a: i64| (r + a * p).abs() <= b;
    let mut lo = 0;
    while inside(lo - 1) {
        lo -= 1;
    }
    let mut hi = 0;
    while inside(hi + 1) {
        hi += 1;
    }
    (lo, hi)
}

/// Degrees of `z_{1,2}` along one axis, indexed from `lo`, via
/// `deg(a+1) = deg(a) + 2 s(a)` with `deg(0) = 0`.
fn axis_degrees(r: i64, p: i64, lo: i64, hi: i64) -> Vec<i64> {
    let mut deg = BTreeMap::from([(0, 0)]);
    for a in 0..hi {
        let d = deg[&a] + 2 * (r + a * p);
        deg.insert(a + 1, d);
    }
    for a in (lo..0).rev() {
        let d = deg[&(a + 1)] - 2 * (r + a * p);
        deg.insert(a, d);
    }
    (lo..=hi).map(|a| deg[&a]).collect()
}

/// Build the truncated complex for `(p1, p2)`-surgery in `label`, truncated at `b`.
pub fn build_complex(l: &LinkHFunction2, p1: i64, p2: i64, label: SpincLabel2, b: i64) -> Result<TruncatedComplex> {
    if p1 == 0 || p2 == 0 {
        return Err(Error::ZeroFraming);
    }
    for (p, i) in [(p1, label.i1), (p2, label.i2)] {
        if 2 * i.abs() > p.abs() {
            return Err(Error::InvalidSpinc { p, i });
        }
    }
    let min = p1.abs().max(p2.abs()).max(l.radius() - 1);
    if b <= min {
        return Err(Error::TruncationTooSmall { b, min });
    }
    let label = SpincLabel2::new(canonical_label(p1, label.i1), canonical_label(p2, label.i2));
    let r1 = label.i1.rem_euclid(p1.abs());
    let r2 = label.i2.rem_euclid(p2.abs());
    let (a_lo, a_hi) = square_range(r1, p1, b);
    let (b_lo, b_hi) = square_range(r2, p2, b);
    let deg1 = axis_degrees(r1, p1, a_lo, a_hi + 1);
    let deg2 = axis_degrees(r2, p2, b_lo, b_hi + 1);
    let open1 = p1 > 0;
    let open2 = p2 > 0;
    let (case, erased) = match (open1, open2) {
        (false, false) => (SurgeryCase::A, ErasedBoundary::None),
        (true, true) => (SurgeryCase::B, ErasedBoundary::All),
        (true, false) => (SurgeryCase::C, ErasedBoundary::Sides(Axis::LeftRight)),
        (false, true) => (SurgeryCase::C, ErasedBoundary::Sides(Axis::TopBottom)),
    };
    let on_side1 = |a: i64| open1 && (a == a_lo || a == a_hi + 1);
    let on_side2 = |bb: i64| open2 && (bb == b_lo || bb == b_hi + 1);
    let s_of = |a: i64, bb: i64| (r1 + a * p1, r2 + bb * p2);
    let vdeg = |a: i64, bb: i64| deg1[(a - a_lo) as usize] + deg2[(bb - b_lo) as usize];
    let h1 = l.component(1);
    let h2 = l.component(2);

    let mut cells = Vec::new();
    let mut index = HashMap::new();
    let mut push = |flavor: Flavor, a: i64, bb: i64, rel_deg: i64, erased: bool| {
        index.insert((flavor, a, bb), cells.len());
        cells.push(GradedCell { flavor, grid: (a, bb), lattice: s_of(a, bb), rel_deg, erased });
    };
    for bb in b_lo..=b_hi + 1 {
        for a in a_lo..=a_hi + 1 {
            let (s1, s2) = s_of(a, bb);
            let d = vdeg(a, bb);
            push(Flavor::Vertex, a, bb, d, on_side1(a) || on_side2(bb));
            if a <= a_hi {
                push(Flavor::EdgeH, a, bb, d - 2 * h1.value(s1), on_side2(bb));
            }
            if bb <= b_hi {
                push(Flavor::EdgeV, a, bb, d - 2 * h2.value(s2), on_side1(a));
            }
            if a <= a_hi && bb <= b_hi {
                push(Flavor::Square, a, bb, d - 2 * l.value(s1, s2), false);
            }
        }
    }

    let mut incidences = Vec::new();
    let mut link = |from: usize, key: (Flavor, i64, i64), u_power: i64| {
        let to = index[&key];
        if !cells[to].erased && !cells[from].erased {
            incidences.push(Incidence { from, to, u_power });
        }
    };
    for (n, c) in cells.clone().iter().enumerate() {
        let (a, bb) = c.grid;
        let (s1, s2) = c.lattice;
        match c.flavor {
            Flavor::Vertex => {}
            Flavor::EdgeH => {
                link(n, (Flavor::Vertex, a, bb), h1.value(s1));
                link(n, (Flavor::Vertex, a + 1, bb), h1.value(-s1));
            }
            Flavor::EdgeV => {
                link(n, (Flavor::Vertex, a, bb), h2.value(s2));
                link(n, (Flavor::Vertex, a, bb + 1), h2.value(-s2));
            }
            Flavor::Square => {
                let hs = l.value(s1, s2);
                let hm = l.value(-s1, -s2);
                link(n, (Flavor::EdgeH, a, bb), hs - h1.value(s1));
                link(n, (Flavor::EdgeV, a, bb), hs - h2.value(s2));
                link(n, (Flavor::EdgeH, a, bb + 1), hm - h1.value(-s1));
                link(n, (Flavor::EdgeV, a + 1, bb), hm - h2.value(-s2));
            }
        }
    }

    Ok(TruncatedComplex {
        cells,
        index,
        incidences,
        case,
        erased,
        framing: (p1, p2),
        label,
        truncation: b,
        square_range: [(a_lo, a_hi), (b_lo, b_hi)],
        residues: (r1, r2),
    })
}

impl TruncatedComplex {
    pub fn cells(&self) -> &[GradedCell] {
        &self.cells
    }

    /// Mutable access for experiments such as deliberately corrupting degrees.
    pub fn cells_mut(&mut self) -> &mut [GradedCell] {
        &mut self.cells
    }

    pub fn incidences(&self) -> &[Incidence] {
        &self.incidences
    }

    pub fn incidences_mut(&mut self) -> &mut [Incidence] {
        &mut self.incidences
    }

    pub fn cell(&self, flavor: Flavor, a: i64, b: i64) -> Option<&GradedCell> {
        self.index.get(&(flavor, a, b)).map(|&n| &self.cells[n])
    }

    /// The cell of the given flavor sitting at lattice point `s`, if present.
    pub fn cell_at(&self, flavor: Flavor, s1: i64, s2: i64) -> Option<&GradedCell> {
        let (p1, p2) = self.framing;
        let (r1, r2) = self.residues;
        if (s1 - r1) % p1 != 0 || (s2 - r2) % p2 != 0 {
            return None;
        }
        self.cell(flavor, (s1 - r1) / p1, (s2 - r2) / p2)
    }

    /// Combinatorial d-invariant relative to `deg z_{1,2}(s++) = 0`, including
    /// the cube degree of the generating cells.
    pub fn relative_d(&self) -> i64 {
        let live = |f: Flavor| self.cells.iter().filter(move |c| c.flavor == f && !c.erased);
        match self.case {
            SurgeryCase::A => live(Flavor::Vertex).map(|c| c.rel_deg).max().expect("vertices"),
            SurgeryCase::B => live(Flavor::Square).map(|c| c.rel_deg).min().expect("squares") + 2,
            SurgeryCase::C => {
                let ErasedBoundary::Sides(axis) = self.erased else { unreachable!() };
                maximin_bottleneck(&self.refined_grid(), axis) + 1
            }
        }
    }

    /// The complex on a `(2m+1) x (2n+1)` grid of cells: vertices at even/even
    /// positions, edges at mixed, squares at odd/odd. Squares are impassable;
    /// vertices and erased cells do not constrain a path.
    pub fn refined_grid(&self) -> Vec<Vec<i64>> {
        let [(a_lo, a_hi), (b_lo, b_hi)] = self.square_range;
        let width = (2 * (a_hi - a_lo + 2) - 1) as usize;
        let height = (2 * (b_hi - b_lo + 2) - 1) as usize;
        let mut grid = vec![vec![i64::MIN; width]; height];
        for c in &self.cells {
            let (a, b) = c.grid;
            let x = 2 * (a - a_lo) + i64::from(c.flavor == Flavor::EdgeH || c.flavor == Flavor::Square);
            let y = 2 * (b - b_lo) + i64::from(c.flavor == Flavor::EdgeV || c.flavor == Flavor::Square);
            grid[y as usize][x as usize] = match c.flavor {
                Flavor::Square => i64::MIN,
                Flavor::Vertex => i64::MAX,
                _ if c.erased => i64::MAX,
                _ => c.rel_deg,
            };
        }
        grid
    }

    /// Every U-exponent is a nonnegative integer equal to half the degree
    /// drop, every square has its four edges, and `D^2 = 0` over `F_2`.
    pub fn verify_differential(&self) -> bool {
        for inc in &self.incidences {
            let diff = self.cells[inc.to].rel_deg - self.cells[inc.from].rel_deg;
            if inc.u_power < 0 || diff != 2 * inc.u_power {
                return false;
            }
        }
        let parity = self.cells.first().map(|c| c.rel_deg.rem_euclid(2));
        if self.cells.iter().any(|c| Some(c.rel_deg.rem_euclid(2)) != parity) {
            return false;
        }
        let mut out: HashMap<usize, Vec<(usize, i64)>> = HashMap::new();
        for inc in &self.incidences {
            out.entry(inc.from).or_default().push((inc.to, inc.u_power));
        }
        for (n, c) in self.cells.iter().enumerate() {
            if c.flavor != Flavor::Square {
                continue;
            }
            let (a, b) = c.grid;
            let faces =
                [(Flavor::EdgeH, a, b), (Flavor::EdgeV, a, b), (Flavor::EdgeH, a, b + 1), (Flavor::EdgeV, a + 1, b)];
            if faces.iter().any(|k| !self.index.contains_key(k)) {
                return false;
            }
            let mut tally: HashMap<(usize, i64), u32> = HashMap::new();
            for &(edge, u) in out.get(&n).map(Vec::as_slice).unwrap_or(&[]) {
                for &(vertex, v) in out.get(&edge).map(Vec::as_slice).unwrap_or(&[]) {
                    *tally.entry((vertex, u + v)).or_default() += 1;
                }
            }
            if tally.values().any(|k| k % 2 != 0) {
                return false;
            }
        }
        true
    }

    /// One line per cell: `dim s1 s2 rel_deg erased`.
    pub fn to_tsv(&self) -> String {
        let mut out = String::from("dim\ts1\ts2\trel_deg\terased\n");
        for c in &self.cells {
            let _ =
                writeln!(out, "{}\t{}\t{}\t{}\t{}", c.dim(), c.lattice.0, c.lattice.1, c.rel_deg, u8::from(c.erased));
        }
        out
    }
}

/// Largest `θ` such that the cells of weight `>= θ` connect the two sides of
/// `axis`, i.e. the best achievable minimum along a 4-connected path.
pub fn maximin_bottleneck(weights: &[Vec<i64>], axis: Axis) -> i64 {
    let mut levels: Vec<i64> = weights.iter().flatten().copied().collect();
    levels.sort_unstable();
    levels.dedup();
    let (mut lo, mut hi) = (0, levels.len() - 1);
    while lo < hi {
        let mid = (lo + hi).div_ceil(2);
        if connects(weights, axis, levels[mid]) {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    levels[lo]
}

fn connects(weights: &[Vec<i64>], axis: Axis, threshold: i64) -> bool {
    let h = weights.len();
    let w = weights[0].len();
    let open = |y: usize, x: usize| weights[y][x] >= threshold;
    let mut seen = vec![vec![false; w]; h];
    let mut queue = VecDeque::new();
    let starts: Vec<(usize, usize)> = match axis {
        Axis::LeftRight => (0..h).map(|y| (y, 0)).collect(),
        Axis::TopBottom => (0..w).map(|x| (0, x)).collect(),
    };
    for (y, x) in starts {
        if open(y, x) {
            seen[y][x] = true;
            queue.push_back((y, x));
        }
    }
    while let Some((y, x)) = queue.pop_front() {
        let done = match axis {
            Axis::LeftRight => x == w - 1,
            Axis::TopBottom => y == h - 1,
        };
        if done {
            return true;
        }
        let nbrs = [(y.wrapping_sub(1), x), (y + 1, x), (y, x.wrapping_sub(1)), (y, x + 1)];
        for (ny, nx) in nbrs {
            if ny < h && nx < w && !seen[ny][nx] && open(ny, nx) {
                seen[ny][nx] = true;
                queue.push_back((ny, nx));
            }
        }
    }
    false
}

/// Default truncation for a link and framing.
pub fn default_truncation(l: &LinkHFunction2, p1: i64, p2: i64) -> i64 {
    p1.abs().max(p2.abs()).max(l.radius()).max(LinkHFunction2::unlink().radius()) + 1
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleMismatch {
    pub p1: i64,
    pub p2: i64,
    pub label: SpincLabel2,
    /// `d - (φ + φ)` from the closed formula.
    pub formula: String,
    /// Relative d of the link minus relative d of the unlink.
    pub oracle: i64,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct OracleReport {
    pub cases: usize,
    pub mismatches: Vec<OracleMismatch>,
    /// Complexes failing [`TruncatedComplex::verify_differential`].
    pub bad_differentials: usize,
    /// Cases where the oracle changed when the truncation grew by 2.
    pub unstable: usize,
}

impl OracleReport {
    pub fn is_clean(&self) -> bool {
        self.mismatches.is_empty() && self.bad_differentials == 0 && self.unstable == 0
    }
}

/// Oracle-minus-unlink difference at truncation `b`, plus whether both
/// complexes passed the differential check.
fn oracle_difference(
    l: &LinkHFunction2,
    unlink: &LinkHFunction2,
    p1: i64,
    p2: i64,
    label: SpincLabel2,
    b: i64,
) -> Result<(i64, bool)> {
    let cx = build_complex(l, p1, p2, label, b)?;
    let ux = build_complex(unlink, p1, p2, label, b)?;
    let ok = cx.verify_differential() && ux.verify_differential();
    Ok((cx.relative_d() - ux.relative_d(), ok))
}

/// Compare the closed formula with the cell-complex computation for every
/// framing `0 < |p1|, |p2| <= p_max` and every label.
pub fn check_against_formula(l: &LinkHFunction2, p_max: i64) -> Result<OracleReport> {
    let unlink = LinkHFunction2::unlink();
    let mut rep = OracleReport::default();
    let framings: Vec<i64> = (-p_max..=p_max).filter(|p| *p != 0).collect();
    for &p1 in &framings {
        for &p2 in &framings {
            let b = default_truncation(l, p1, p2);
            for label in all_labels(p1, p2) {
                rep.cases += 1;
                let d = d_link_surgery(l, p1, p2, label)?;
                let formula = d.0 - phi(p1, label.i1)? - phi(p2, label.i2)?;
                let (oracle, ok) = oracle_difference(l, &unlink, p1, p2, label, b)?;
                let (wider, ok_wider) = oracle_difference(l, &unlink, p1, p2, label, b + 2)?;
                rep.bad_differentials += usize::from(!ok) + usize::from(!ok_wider);
                rep.unstable += usize::from(wider != oracle);
                if Rational::from_integer(oracle) != formula {
                    rep.mismatches.push(OracleMismatch {
                        p1,
                        p2,
                        label,
                        formula: crate::surgery::format_rational(formula),
                        oracle,
                    });
                }
            }
        }
    }
    Ok(rep)
}
