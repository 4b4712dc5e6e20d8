mod common;

use num_complex::Complex64;
use rand::rngs::StdRng;
use rand::SeedableRng;

use spx_core::canonical::canonical_form;
use spx_core::complexity::{
    boundary_component_count, cv_verdict, manifold_complexity, Assertions, BoundaryCount, Rule,
    VerdictKind,
};
use spx_core::epsilon::{epsilon_invariant, epsilon_weight};
use spx_core::generators::{
    bipyramid_face_pairing, bipyramid_parameters, bipyramid_spine, family_spine, triangulation_import,
};
use spx_core::golden::{epsilon_power, GoldenInt};
use spx_core::io::parse_spine;
use spx_core::moves::{
    apply_t_detailed, apply_t_inverse, applicable_t_sites, applicable_tinv_sites, MoveSite,
};
use spx_core::search::search_equivalents;
use spx_core::strata::{euler_characteristic, NormalBundle};
use spx_core::subcomplex::{count_proper, enumerate_simple_subpolyhedra};
use spx_core::tv::{admissible_triple, enumerate_colorings, six_j, tv_report, Coloring, TVContext};
use spx_core::{SpecialPolyhedron, Stratification};

const WITNESS: &str = include_str!("fixtures/long_witness.spine");

fn witness() -> SpecialPolyhedron {
    parse_spine(WITNESS, "long_witness.spine").unwrap()
}

fn random_with<F: Fn(&SpecialPolyhedron, &Stratification) -> bool>(
    n: usize,
    seed: u64,
    keep: F,
) -> SpecialPolyhedron {
    let mut rng = StdRng::seed_from_u64(seed);
    loop {
        let p = common::random_polyhedron(n, &mut rng);
        if keep(&p, &Stratification::new(&p)) {
            return p;
        }
    }
}

fn one_component(n: usize, seed: u64) -> SpecialPolyhedron {
    random_with(n, seed, |_, st| st.component_count() == 1)
}

/// `T` applied to a one-component polyhedron: two 2-components, one with a
/// short curve and trivial bundle.
fn short_trivial_pair(n: usize, seed: u64) -> (SpecialPolyhedron, usize) {
    let y = one_component(n - 1, seed);
    let out = apply_t_detailed(&y, applicable_t_sites(&y)[0]).unwrap();
    (out.polyhedron, out.created_component.unwrap())
}

fn generated() -> Vec<SpecialPolyhedron> {
    let mut out: Vec<_> = bipyramid_parameters(6)
        .into_iter()
        .filter(|&(n, _)| n >= 4)
        .map(|(n, k)| bipyramid_spine(n, k).unwrap())
        .collect();
    out.push(family_spine(0).unwrap());
    out.push(witness());
    out
}

#[test]
fn bipyramid_4_1_shape() {
    let p = bipyramid_spine(4, 1).unwrap();
    assert_eq!(p.vertex_count(), 4);
    assert_eq!(p.edge_count(), 8);
    let st = Stratification::new(&p);
    assert_eq!(st.component_count(), 2);
    assert_eq!(euler_characteristic(&p), -2);
    let fp = bipyramid_face_pairing(4, 1).unwrap();
    assert_eq!(fp.edge_class_count().unwrap(), 2);
    assert_eq!(canonical_form(&triangulation_import(&fp).unwrap()), canonical_form(&p));
    assert_eq!(euler_characteristic(&bipyramid_spine(5, 1).unwrap()), -3);
}

#[test]
fn bipyramid_family_up_to_nine() {
    for (n, k) in bipyramid_parameters(9).into_iter().filter(|&(n, _)| n >= 4) {
        let p = bipyramid_spine(n, k).unwrap();
        let st = Stratification::new(&p);
        assert_eq!((p.vertex_count(), p.edge_count(), st.component_count()), (n, 2 * n, 2));
        assert!(p.is_orientable());
        for c in st.curves() {
            assert_eq!(c.vertex_multiplicity.len(), n);
            assert!(!c.is_short);
            assert_eq!(c.normal_bundle, NormalBundle::Trivial);
        }
        assert!(applicable_tinv_sites(&p).is_empty());
        // ideal triangulation: one vertex class, two edge classes, 2n faces, n tetrahedra
        let b = boundary_component_count(&p).value() as i64;
        let chi_star = b - st.component_count() as i64 + 2 * n as i64 - n as i64;
        assert_eq!(chi_star, n as i64 - 1, "P_{n},{k}");
    }
}

#[test]
fn bipyramid_gcd_condition_is_enforced() {
    let err = bipyramid_spine(4, 0).unwrap_err().to_string();
    assert!(err.contains("gcd"), "{err}");
}

#[test]
fn family_spines() {
    for s in 0..3 {
        let p = family_spine(s).unwrap();
        let st = Stratification::new(&p);
        assert_eq!(p.vertex_count(), 5 + 4 * s);
        assert_eq!(st.component_count(), 2);
        assert!(!st.has_short_curve());
        assert_eq!(st.nontrivial_count(), 0);
    }
}

#[test]
fn subpolyhedra_boundary_cases() {
    for p in generated() {
        let all = enumerate_simple_subpolyhedra(&p);
        let (empty, full) = (&all[0], all.last().unwrap());
        assert_eq!((empty.chi, empty.true_vertices), (0, 0));
        assert_eq!(full.chi, euler_characteristic(&p));
        assert_eq!(full.true_vertices, p.vertex_count());
    }
    assert_eq!(count_proper(&one_component(3, 1)), 0);
    assert_eq!(count_proper(&bipyramid_spine(4, 1).unwrap()), 1);
    assert_eq!(count_proper(&family_spine(0).unwrap()), 0);
}

#[test]
fn proper_subpolyhedron_identity_after_t() {
    // χ(Q) + 2n = 4 + V(Q) when P is T of a one-component polyhedron with n−1 vertices
    for (n, seed) in [(4, 1), (5, 2), (5, 3), (6, 4)] {
        let (p, short) = short_trivial_pair(n, seed);
        let all = enumerate_simple_subpolyhedra(&p);
        let proper: Vec<_> = all[1..all.len() - 1].iter().collect();
        assert_eq!(proper.len(), 1, "n = {n}, seed = {seed}");
        let q = proper[0];
        assert_eq!(q.components, vec![1 - short]);
        let n = n as i64;
        assert_eq!(q.chi + 2 * n, 4 + q.true_vertices as i64);
        assert_eq!(q.true_vertices as i64, n - 3);
        let want = epsilon_power(4 - 2 * n);
        let want = if (n - 1) % 2 == 0 { want } else { -want };
        assert_eq!(epsilon_weight(q), want);
    }
}

#[test]
fn epsilon_closed_forms() {
    let p = family_spine(0).unwrap();
    let full = enumerate_simple_subpolyhedra(&p).pop().unwrap();
    assert_eq!(epsilon_weight(&full), -epsilon_power(-8));
    assert_eq!(epsilon_invariant(&p), &(-epsilon_power(-8)) + &GoldenInt::one());
    for seed in 0..5 {
        let q = one_component(4, seed);
        let n = 5i64;
        // d=1 with n−1 vertices: (−1)^{n−1} ε^{3−2n} + 1
        assert_eq!(epsilon_invariant(&q), &epsilon_power(3 - 2 * n) + &GoldenInt::one());
    }
}

#[test]
fn epsilon_invariant_under_every_t_site() {
    for p in generated() {
        let t = epsilon_invariant(&p);
        for site in applicable_t_sites(&p) {
            let q = apply_t_detailed(&p, site).unwrap().polyhedron;
            assert_eq!(epsilon_invariant(&q), t);
        }
    }
}

fn sj(ctx: &TVContext, a: [u8; 6]) -> Complex64 {
    six_j(ctx, a[0], a[1], a[2], a[3], a[4], a[5]).unwrap()
}

/// `(other, special)` color pairs with their weights; `special` has the shorter curve.
fn pair_weights(p: &SpecialPolyhedron, ctx: &TVContext) -> Vec<((u8, u8), Complex64)> {
    let st = Stratification::new(p);
    let special = (0..2).min_by_key(|&c| st.components[c].curve.len()).unwrap();
    let r = tv_report(p, ctx);
    let mut out: Vec<_> = r
        .colorings
        .iter()
        .zip(&r.weights)
        .map(|(c, w)| ((c.0[1 - special], c.0[special]), *w))
        .collect();
    out.sort_by_key(|x| x.0);
    out
}

#[test]
fn displayed_weight_formulas() {
    let ctx = TVContext::new(7).unwrap();
    let q = |n| spx_core::tv::quantum_int(&ctx, n);
    let p = witness();
    let n = p.vertex_count() as i32;
    let st = Stratification::new(&p);
    let m = st.curves().find(|c| c.vertex_multiplicity.len() == 3).unwrap().doubly_visited() as i32;
    let s222 = sj(&ctx, [2, 2, 2, 2, 2, 2]);
    let want_20 = s222.powi(n - 3)
        * sj(&ctx, [2, 2, 0, 2, 2, 0]).powi(m)
        * sj(&ctx, [2, 2, 2, 2, 2, 0]).powi(3 - m)
        * q(3);
    let wp = pair_weights(&p, &ctx);
    assert!((wp[1].1 - want_20).norm() < 1e-9, "{} vs {want_20}", wp[1].1);

    let (pp, _) = short_trivial_pair(4, 7);
    let wpp = pair_weights(&pp, &ctx);
    let want_24 = s222.powi(n - 3) * sj(&ctx, [2, 2, 2, 2, 2, 4]).powi(3) * q(3) * q(5);
    assert_eq!(wpp[3].0, (2, 4));
    assert!((wpp[3].1 - want_24).norm() < 1e-9);
    // monochrome weights agree for equal vertex counts
    assert!((wp[0].1 - wpp[0].1).norm() < 1e-9);
    assert!((wp[2].1 - wpp[2].1).norm() < 1e-9);
}

#[test]
fn zero_coloring_always_admissible() {
    let ctx = TVContext::new(3).unwrap();
    for seed in 0..20 {
        let p = random_with(1 + seed as usize % 4, seed, |_, _| true);
        let cols = enumerate_colorings(&p, &ctx);
        let d = Stratification::new(&p).component_count();
        assert_eq!(cols[0], Coloring(vec![0; d]));
        if cols.len() == 1 {
            assert!((tv_report(&p, &ctx).invariant - Complex64::new(1.0, 0.0)).norm() < 1e-12);
        }
    }
}

#[test]
fn one_component_colorings_are_the_self_admissible_colors() {
    let ctx = TVContext::new(7).unwrap();
    for seed in 0..5 {
        let p = one_component(2 + seed as usize % 3, seed);
        let got: Vec<u8> = enumerate_colorings(&p, &ctx).into_iter().map(|c| c.0[0]).collect();
        let want: Vec<u8> = ctx.palette().filter(|&c| admissible_triple(&ctx, c, c, c)).collect();
        assert_eq!(got, want);
    }
}

#[test]
fn move_site_boundaries() {
    let one = random_with(1, 3, |_, _| true);
    assert!(applicable_t_sites(&one).is_empty());
    let report = search_equivalents(&one, 4, 100);
    assert_eq!(report.visited(), 1);

    let p = bipyramid_spine(4, 1).unwrap();
    for site in applicable_t_sites(&p) {
        let q = apply_t_detailed(&p, site).unwrap().polyhedron;
        assert!(!applicable_t_sites(&q).is_empty());
        assert!(!applicable_tinv_sites(&q).is_empty());
    }
}

#[test]
fn short_nontrivial_curve_is_not_a_site() {
    let p = random_with(3, 11, |_, st| {
        st.components
            .iter()
            .any(|c| c.curve.is_short && c.curve.normal_bundle == NormalBundle::NonTrivial)
    });
    let st = Stratification::new(&p);
    for site in applicable_tinv_sites(&p) {
        let MoveSite::TInverse { component } = site else { unreachable!() };
        assert_eq!(st.components[component].curve.normal_bundle, NormalBundle::Trivial);
    }
    let bad = st
        .components
        .iter()
        .find(|c| c.curve.is_short && c.curve.normal_bundle == NormalBundle::NonTrivial)
        .unwrap();
    assert!(apply_t_inverse(&p, MoveSite::TInverse { component: bad.id }).is_err());
    assert_eq!(boundary_component_count(&p), BoundaryCount::DefaultLowerBound { b: 1 });
    assert!(manifold_complexity(&p, Assertions::default()).is_err());
}

#[test]
fn short_trivial_curve_reduces() {
    let (x, c) = short_trivial_pair(5, 2);
    let y = apply_t_inverse(&x, MoveSite::TInverse { component: c }).unwrap();
    assert_eq!(y.vertex_count(), 4);
    assert_eq!(Stratification::new(&y).component_count(), 1);
    assert_eq!(euler_characteristic(&y), euler_characteristic(&x));
    let v = cv_verdict(&x);
    assert_eq!(v.kind, VerdictKind::Exact { value: 4 });
    assert_eq!(v.applied_rules, vec![Rule::ShortTrivialCurve]);
}

#[test]
fn verdict_examples() {
    let two = random_with(2, 5, |_, _| true);
    assert_eq!(cv_verdict(&two).kind, VerdictKind::Exact { value: 2 });
    assert_eq!(cv_verdict(&random_with(1, 5, |_, _| true)).kind, VerdictKind::Exact { value: 1 });
    let hyp = Assertions { hyperbolic_geodesic_boundary: true };
    for (n, k) in bipyramid_parameters(7).into_iter().filter(|&(n, _)| n >= 4) {
        let p = bipyramid_spine(n, k).unwrap();
        assert_eq!(manifold_complexity(&p, hyp).unwrap().exact(), Some(n));
        let bare = manifold_complexity(&p, Assertions::default()).unwrap();
        assert_eq!(bare.kind, VerdictKind::Range { lo: 0, hi: n });
    }
}

#[test]
fn search_stays_at_or_above_exact_verdicts() {
    for p in [bipyramid_spine(4, 1).unwrap(), witness()] {
        let v = cv_verdict(&p).exact().unwrap();
        let report = search_equivalents(&p, p.vertex_count() + 2, 3_000);
        assert!(report.min_vertices >= v);
    }
}
