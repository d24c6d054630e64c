#![allow(dead_code)]

use lsk_core::cw::Axis;
use lsk_core::hfunc::{h_from_alexander_knot, h_from_alexander_link, KnotHFunction, LinkHFunction2};
use lsk_core::poly::{torus_knot_alexander, whitehead_tilde};
use lsk_core::synthetic::{staircase_link, Plateau};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn whitehead() -> LinkHFunction2 {
    let u = KnotHFunction::unknot();
    h_from_alexander_link(&whitehead_tilde(), &u, &u).unwrap()
}

pub fn torus(p: i64, q: i64) -> KnotHFunction {
    h_from_alexander_knot(&torus_knot_alexander(p, q).unwrap()).unwrap()
}

pub fn component_pool() -> Vec<KnotHFunction> {
    vec![KnotHFunction::unknot(), torus(2, 3), torus(2, 5), torus(3, 4)]
}

pub fn random_plateaus(rng: &mut impl Rng) -> Vec<Plateau> {
    (0..rng.gen_range(1..=3))
        .map(|_| Plateau { a: rng.gen_range(1..=3), b: rng.gen_range(1..=3), c: rng.gen_range(1..=4) })
        .collect()
}

/// Seeded random validated tables. The first half has unknotted components.
pub fn random_tables(seed: u64, n: usize) -> Vec<(Vec<Plateau>, LinkHFunction2)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pool = component_pool();
    (0..n)
        .map(|k| {
            let plateaus = random_plateaus(&mut rng);
            let comps = if k < n / 2 {
                [pool[0].clone(), pool[0].clone()]
            } else {
                [pool[rng.gen_range(0..pool.len())].clone(), pool[rng.gen_range(0..pool.len())].clone()]
            };
            let l = staircase_link(&plateaus, comps).unwrap();
            (plateaus, l)
        })
        .collect()
}

/// Best minimum weight over every simple 4-connected path joining the two
/// sides of `axis`, by exhaustive search.
pub fn brute_bottleneck(w: &[Vec<i64>], axis: Axis) -> i64 {
    let h = w.len();
    let width = w[0].len();
    let mut best = i64::MIN;
    let mut seen = vec![vec![false; width]; h];
    fn walk(w: &[Vec<i64>], axis: Axis, y: usize, x: usize, floor: i64, seen: &mut Vec<Vec<bool>>, best: &mut i64) {
        let floor = floor.min(w[y][x]);
        let done = match axis {
            Axis::LeftRight => x == w[0].len() - 1,
            Axis::TopBottom => y == w.len() - 1,
        };
        if done {
            *best = (*best).max(floor);
            return;
        }
        seen[y][x] = true;
        let nbrs = [(y.wrapping_sub(1), x), (y + 1, x), (y, x.wrapping_sub(1)), (y, x + 1)];
        for (ny, nx) in nbrs {
            if ny < w.len() && nx < w[0].len() && !seen[ny][nx] {
                walk(w, axis, ny, nx, floor, seen, best);
            }
        }
        seen[y][x] = false;
    }
    let starts: Vec<(usize, usize)> = match axis {
        Axis::LeftRight => (0..h).map(|y| (y, 0)).collect(),
        Axis::TopBottom => (0..width).map(|x| (0, x)).collect(),
    };
    for (y, x) in starts {
        walk(w, axis, y, x, i64::MAX, &mut seen, &mut best);
    }
    best
}

/// Every grid of the given shape with weights in `0..levels`, as a flat index.
pub fn grid_from_index(h: usize, w: usize, levels: i64, mut n: u64) -> Vec<Vec<i64>> {
    let mut g = vec![vec![0; w]; h];
    for row in g.iter_mut() {
        for v in row.iter_mut() {
            *v = (n % levels as u64) as i64;
            n /= levels as u64;
        }
    }
    g
}
