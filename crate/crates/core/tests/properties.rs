//! Property suites over random polynomials, synthetic H-tables and grids.

mod common;

use common::{brute_bottleneck, component_pool, whitehead};
use lsk_core::cw::{build_complex, default_truncation, maximin_bottleneck, Axis, Flavor, SurgeryCase};
use lsk_core::hfunc::{h_from_alexander_link, Axiom, LinkHFunction2};
use lsk_core::invariants::{casson_link_pm1, genus_lower_bound, sato_levine, torres_quotient_at_one};
use lsk_core::poly::{LaurentPoly1, LaurentPoly2, NegPowerSeries};
use lsk_core::surgery::{all_labels, canonical_label, d_link_surgery, phi, quadrant_points, SpincLabel2};
use lsk_core::synthetic::{staircase_link, Plateau};
use proptest::prelude::*;

fn poly1() -> impl Strategy<Value = LaurentPoly1> {
    prop::collection::vec((-6i64..=6, -3i64..=3), 0..6).prop_map(LaurentPoly1::from_terms)
}

fn poly2() -> impl Strategy<Value = LaurentPoly2> {
    prop::collection::vec(((-4i64..=4, -4i64..=4), -3i64..=3), 0..6)
        .prop_map(|t| LaurentPoly2::from_terms(t.into_iter().map(|((a, b), c)| ([a, b], c))))
}

fn integral_poly1() -> impl Strategy<Value = LaurentPoly1> {
    prop::collection::vec((-4i64..=4, -3i64..=3), 0..6)
        .prop_map(|t| LaurentPoly1::from_terms(t.into_iter().map(|(e, c)| (2 * e, c))))
}

fn plateau() -> impl Strategy<Value = Plateau> {
    (1i64..=3, 1i64..=3, 1i64..=4).prop_map(|(a, b, c)| Plateau { a, b, c })
}

fn plateaus() -> impl Strategy<Value = Vec<Plateau>> {
    prop::collection::vec(plateau(), 0..=3)
}

fn table() -> impl Strategy<Value = LinkHFunction2> {
    (plateaus(), 0usize..4, 0usize..4).prop_map(|(ps, c1, c2)| {
        let pool = component_pool();
        staircase_link(&ps, [pool[c1].clone(), pool[c2].clone()]).unwrap()
    })
}

fn unknotted_table() -> impl Strategy<Value = LinkHFunction2> {
    plateaus().prop_map(|ps| staircase_link(&ps, LinkHFunction2::unlink().components().clone()).unwrap())
}

fn framing(max: i64) -> impl Strategy<Value = i64> {
    (1..=max).prop_flat_map(|p| prop_oneof![Just(p), Just(-p)])
}

fn label(p1: i64, p2: i64, k: usize) -> SpincLabel2 {
    let all = all_labels(p1, p2);
    all[k % all.len()]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in poly2(), b in poly2(), c in poly2()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) - &b, a.clone());
        prop_assert_eq!(&a * &LaurentPoly2::constant(1), a);
    }

    #[test]
    fn text_round_trip(a in poly1(), b in poly2()) {
        prop_assert_eq!(a.to_string().parse::<LaurentPoly1>().unwrap(), a);
        prop_assert_eq!(b.to_string().parse::<LaurentPoly2>().unwrap(), b);
    }

    #[test]
    fn geometric_division_inverts(p in integral_poly1()) {
        let s = NegPowerSeries::from_poly(&p).unwrap();
        let once = s.divide_by_geometric().unwrap();
        prop_assert_eq!(once.times_one_minus_inverse(), s.clone());
        let twice = s.divide_by_geometric_squared().unwrap();
        prop_assert_eq!(twice.times_one_minus_inverse().times_one_minus_inverse(), s);
    }

    #[test]
    fn torres_division(q in poly2()) {
        let q = LaurentPoly2::from_terms(q.terms().map(|([a, b], c)| ([2 * a, 2 * b], c)));
        let lin = |k: usize| {
            let mut e = [0, 0];
            e[k] = 2;
            LaurentPoly2::from_terms([(e, 1), ([0, 0], -1)])
        };
        let p = &(&lin(0) * &lin(1)) * &q;
        prop_assert_eq!(torres_quotient_at_one(&p), Some(q.eval_at_one()));
    }

    #[test]
    fn synthetic_tables_satisfy_axioms(l in table()) {
        let rep = l.validate();
        prop_assert!(rep.is_clean(), "{}", rep);
        let r = l.radius() + 2;
        for s1 in -r..=r {
            for s2 in -r..=r {
                prop_assert_eq!(l.h(s1, s2), l.h(-s1, -s2));
                let h = l.h(s1, s2);
                if s1 > 0 {
                    prop_assert!(l.h(s1 - 1, s2) >= h);
                }
                if s1 < 0 {
                    prop_assert!(l.h(s1 + 1, s2) >= h);
                }
                if s2 > 0 {
                    prop_assert!(l.h(s1, s2 - 1) >= h);
                }
                if s2 < 0 {
                    prop_assert!(l.h(s1, s2 + 1) >= h);
                }
            }
        }
    }

    #[test]
    fn corruption_is_detected(l in table(), x in 0i64..64, y in 0i64..64) {
        let r = l.radius();
        let (s1, s2) = (x % (2 * r + 1) - r, y % (2 * r + 1) - r);
        prop_assume!((s1, s2) != (0, 0));
        let bad = LinkHFunction2::from_fn_unvalidated(r, l.components().clone(), |a, b| {
            l.value(a, b) + i64::from((a, b) == (s1, s2))
        });
        let rep = bad.validate();
        prop_assert!(rep.has(Axiom::Symmetry), "{}", rep);
    }

    #[test]
    fn euler_characteristic_round_trip(l in table()) {
        let chi = l.euler_characteristic();
        let back = h_from_alexander_link(&chi, l.component(1), l.component(2)).unwrap();
        let r = l.radius() + 3;
        for s1 in -r..=r {
            for s2 in -r..=r {
                prop_assert_eq!(back.value(s1, s2), l.value(s1, s2));
            }
        }
        let again = back.euler_characteristic();
        prop_assert!(again == chi || again == -&chi);
    }

    #[test]
    fn sato_levine_is_torres_value(l in table()) {
        let q = torres_quotient_at_one(&l.euler_characteristic());
        prop_assert_eq!(q.map(i64::abs), Some(sato_levine(&l).abs()));
    }

    #[test]
    fn sato_levine_nonpositive_for_unknotted(l in unknotted_table()) {
        prop_assert!(sato_levine(&l) <= 0);
    }

    #[test]
    fn d_conjugation_invariant(l in table(), p1 in framing(6), p2 in framing(6), k in 0usize..64) {
        let t = label(p1, p2, k);
        let c = SpincLabel2::new(canonical_label(p1, -t.i1), canonical_label(p2, -t.i2));
        prop_assert_eq!(d_link_surgery(&l, p1, p2, t).unwrap(), d_link_surgery(&l, p1, p2, c).unwrap());
    }

    #[test]
    fn phi_symmetric(p in framing(40), k in 0i64..40) {
        let i = canonical_label(p, k);
        prop_assert_eq!(phi(p, i).unwrap(), phi(p, canonical_label(p, -i)).unwrap());
    }

    #[test]
    fn d_positive_unit_surgery(l in table()) {
        let d = d_link_surgery(&l, 1, 1, SpincLabel2::new(0, 0)).unwrap().0;
        prop_assert_eq!(d, lsk_core::surgery::Rational::from_integer(-2 * l.h(0, 0)));
    }

    #[test]
    fn complexes_are_chain_complexes(l in table(), p1 in framing(4), p2 in framing(4), k in 0usize..64) {
        let t = label(p1, p2, k);
        let b = default_truncation(&l, p1, p2);
        let cx = build_complex(&l, p1, p2, t, b).unwrap();
        prop_assert!(cx.verify_differential());
        prop_assert!(cx.incidences().iter().all(|i| i.u_power >= 0));
    }

    #[test]
    fn truncation_stability(l in table(), p1 in framing(4), p2 in framing(4), k in 0usize..64, extra in 1i64..4) {
        let t = label(p1, p2, k);
        let b = default_truncation(&l, p1, p2);
        let d0 = build_complex(&l, p1, p2, t, b).unwrap().relative_d();
        let d1 = build_complex(&l, p1, p2, t, b + extra).unwrap().relative_d();
        prop_assert_eq!(d0, d1);
    }

    #[test]
    fn positive_case_minimum_at_quadrant_points(l in table(), p1 in 1i64..=4, p2 in 1i64..=4, k in 0usize..64) {
        let t = label(p1, p2, k);
        let cx = build_complex(&l, p1, p2, t, default_truncation(&l, p1, p2)).unwrap();
        prop_assert_eq!(cx.case, SurgeryCase::B);
        let squares = || cx.cells().iter().filter(|c| c.flavor == Flavor::Square);
        let global = squares().map(|c| c.rel_deg).min().unwrap();
        let q = quadrant_points(p1, p2, t).unwrap().all();
        let local = squares().filter(|c| q.contains(&c.lattice)).map(|c| c.rel_deg).min().unwrap();
        prop_assert_eq!(global, local);
    }

    #[test]
    fn mixed_case_straight_path(l in table(), p1 in 1i64..=4, p2 in 1i64..=4, k in 0usize..64) {
        let p2 = -p2;
        let t = label(p1, p2, k);
        let cx = build_complex(&l, p1, p2, t, default_truncation(&l, p1, p2)).unwrap();
        let grid = cx.refined_grid();
        let s2 = t.i2.rem_euclid(p2.abs()) + p2;
        let row = cx
            .cells()
            .iter()
            .find(|c| c.flavor == Flavor::Vertex && c.lattice.1 == s2)
            .map(|c| {
                let (_, b) = c.grid;
                let b_lo = cx.cells().iter().map(|c| c.grid.1).min().unwrap();
                (2 * (b - b_lo)) as usize
            })
            .unwrap();
        let straight = *grid[row].iter().min().unwrap();
        prop_assert_eq!(maximin_bottleneck(&grid, Axis::LeftRight), straight);
    }

    #[test]
    fn casson_multilinear(l in table(), e1 in prop_oneof![Just(1i64), Just(-1)], e2 in prop_oneof![Just(1i64), Just(-1)]) {
        let s = casson_link_pm1(&l, e1, e2) + casson_link_pm1(&l, -e1, e2);
        prop_assert_eq!(s, 2 * e2 * l.component(2).sum_h());
        let s = casson_link_pm1(&l, e1, e2) + casson_link_pm1(&l, e1, -e2);
        prop_assert_eq!(s, 2 * e1 * l.component(1).sum_h());
    }

    #[test]
    fn genus_bound_monotone(ps in plateaus(), extra in plateau()) {
        let comps = LinkHFunction2::unlink().components().clone();
        let small = staircase_link(&ps, comps.clone()).unwrap();
        let mut more = ps.clone();
        more.push(extra);
        let big = staircase_link(&more, comps).unwrap();
        let (a, b) = (genus_lower_bound(&small, 6), genus_lower_bound(&big, 6));
        prop_assert!(b.min_total.unwrap_or(i64::MAX) >= a.min_total.unwrap_or(i64::MAX));
    }

    #[test]
    fn bottleneck_matches_exhaustive_search(
        grid in (1usize..=3, 1usize..=4).prop_flat_map(|(h, w)| {
            prop::collection::vec(prop::collection::vec(0i64..=3, w), h)
        }),
        vertical in any::<bool>(),
    ) {
        let axis = if vertical { Axis::TopBottom } else { Axis::LeftRight };
        prop_assert_eq!(maximin_bottleneck(&grid, axis), brute_bottleneck(&grid, axis));
    }
}

#[test]
fn whitehead_region_points() {
    let region = lsk_core::invariants::lspace_region(&whitehead()).unwrap();
    assert_eq!(region.contains(1, 1), Some(true));
    for q in -3..=3 {
        for (a, b) in [(0, q), (q, 0), (-1, q), (q, -1)] {
            assert_eq!(region.contains(a, b), Some(false));
        }
    }
}

#[test]
fn zero_h_gives_lens_sums() {
    let u = LinkHFunction2::unlink();
    for (p1, p2) in [(3, 2), (-3, 2), (3, -2), (-3, -2)] {
        for t in all_labels(p1, p2) {
            let d = d_link_surgery(&u, p1, p2, t).unwrap().0;
            assert_eq!(d, phi(p1, t.i1).unwrap() + phi(p2, t.i2).unwrap());
        }
    }
}

#[test]
fn whitehead_blowdown_is_trefoil() {
    let k = lsk_core::hfunc::blowdown_h(&whitehead(), 2).unwrap();
    let t = common::torus(2, 3);
    for s in -6..=6 {
        assert_eq!(k.value(s), t.value(s));
    }
}
