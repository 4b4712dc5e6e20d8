mod common;

use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;

use spx_core::canonical::canonical_form;
use spx_core::complexity::{boundary_component_count, cv_verdict, BoundaryCount, VerdictKind};
use spx_core::epsilon::epsilon_invariant;
use spx_core::generators::{triangulation_export, triangulation_import};
use spx_core::io::{parse_spine, parse_tri, write_spine, write_tri};
use spx_core::moves::{apply_t_detailed, apply_t_inverse, applicable_t_sites, MoveSite};
use spx_core::perm::WING_PAIRS;
use spx_core::search::search_equivalents;
use spx_core::strata::{euler_characteristic, euler_characteristic_by_cells, NormalBundle};
use spx_core::subcomplex::{enumerate_simple_subpolyhedra, link_degree_support};
use spx_core::tv::{tv_invariant, TVContext};
use spx_core::{SpecialPolyhedron, Stratification};

fn polyhedron(max_n: usize) -> impl Strategy<Value = SpecialPolyhedron> {
    (1..=max_n, any::<u64>())
        .prop_map(|(n, seed)| common::random_polyhedron(n, &mut StdRng::seed_from_u64(seed)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn wings_partition_and_curves_close(p in polyhedron(6)) {
        let st = Stratification::new(&p);
        let n = p.vertex_count();
        let mut owned = 0;
        for v in 0..n {
            for w in st.vertex_wings(v) {
                prop_assert!(w < st.component_count());
                owned += 1;
            }
        }
        prop_assert_eq!(owned, 6 * n);
        let total: usize = st.curves().map(|c| c.len()).sum();
        prop_assert_eq!(total, 6 * n);
        let mut per_edge = vec![0usize; p.edge_count()];
        for c in st.curves() {
            for s in &c.steps {
                per_edge[s.edge] += 1;
            }
            let visits: usize = c.vertex_multiplicity.values().sum();
            prop_assert_eq!(visits, c.len());
            prop_assert_eq!(c.is_short, c.len() == 3 && c.vertex_multiplicity.len() == 3);
        }
        prop_assert!(per_edge.iter().all(|&k| k == 3));
    }

    #[test]
    fn euler_characteristic_two_ways(p in polyhedron(6)) {
        prop_assert_eq!(euler_characteristic(&p), euler_characteristic_by_cells(&p));
    }

    #[test]
    fn subpolyhedra_are_consistent(p in polyhedron(4)) {
        let st = Stratification::new(&p);
        let all = enumerate_simple_subpolyhedra(&p);
        prop_assert!(all.len() >= 2);
        prop_assert!(all[0].components.is_empty());
        prop_assert_eq!(all.last().unwrap().components.len(), st.component_count());
        for q in &all {
            let included = |c: usize| q.components.binary_search(&c).is_ok();
            // each included branch ends at two ports, each port meets two included wings
            let mut port_ends = 0;
            for v in 0..p.vertex_count() {
                let mut mask = 0u8;
                for (k, &c) in st.vertex_wings(v).iter().enumerate() {
                    if included(c) {
                        mask |= 1 << k;
                    }
                }
                port_ends += link_degree_support(mask);
            }
            prop_assert_eq!(port_ends, 2 * q.k1);
            prop_assert_eq!(q.chi, q.k0 as i64 - q.k1 as i64 + q.components.len() as i64);
        }
        prop_assert_eq!(WING_PAIRS.len(), 6);
    }

    #[test]
    fn boundary_count_is_bounded(p in polyhedron(6)) {
        let st = Stratification::new(&p);
        match boundary_component_count(&p) {
            BoundaryCount::Exact { b } => {
                prop_assert!(b >= 1 && b <= st.component_count());
                prop_assert_eq!(st.nontrivial_count(), 0);
            }
            BoundaryCount::DefaultLowerBound { b } => {
                prop_assert_eq!(b, 1);
                prop_assert!(st.nontrivial_count() > 0);
            }
        }
        let v = cv_verdict(&p);
        let (lo, hi) = v.kind.bounds();
        prop_assert!(1 <= lo && lo <= hi && hi <= p.vertex_count());
        if let VerdictKind::Exact { value } = v.kind {
            let d = st.component_count() as i64;
            prop_assert!(p.vertex_count() as i64 - (d - v.b_used.value() as i64) <= value as i64);
        }
    }

    #[test]
    fn moves_conserve_invariants(p in polyhedron(4), pick in any::<prop::sample::Index>()) {
        let sites = applicable_t_sites(&p);
        prop_assume!(!sites.is_empty());
        let site = sites[pick.index(sites.len())];
        let out = apply_t_detailed(&p, site).unwrap();
        let q = &out.polyhedron;
        let (sp, sq) = (Stratification::new(&p), Stratification::new(q));
        prop_assert_eq!(q.vertex_count(), p.vertex_count() + 1);
        prop_assert_eq!(sq.component_count(), sp.component_count() + 1);
        prop_assert_eq!(euler_characteristic(q), euler_characteristic(&p));
        prop_assert_eq!(sq.nontrivial_count(), sp.nontrivial_count());
        let c = out.created_component.unwrap();
        prop_assert!(sq.components[c].curve.is_short);
        prop_assert_eq!(sq.components[c].curve.normal_bundle, NormalBundle::Trivial);
        prop_assert_eq!(epsilon_invariant(q), epsilon_invariant(&p));
        let ctx = TVContext::new(5).unwrap();
        prop_assert!((tv_invariant(q, &ctx) - tv_invariant(&p, &ctx)).norm() < 1e-6);
        let back = apply_t_inverse(q, MoveSite::TInverse { component: c }).unwrap();
        prop_assert_eq!(canonical_form(&back), canonical_form(&p));
    }

    #[test]
    fn canonical_form_is_a_complete_invariant_of_relabeling(p in polyhedron(5), seed in any::<u64>()) {
        let form = canonical_form(&p);
        let rep = form.to_polyhedron();
        prop_assert_eq!(canonical_form(&rep), form.clone());
        prop_assert_eq!(rep.vertex_count(), p.vertex_count());
        let shuffled = common::relabel(&p, &mut StdRng::seed_from_u64(seed));
        prop_assert_eq!(canonical_form(&shuffled), form);
    }

    #[test]
    fn spine_text_round_trip(p in polyhedron(6)) {
        let text = write_spine(&p);
        let back = parse_spine(&text, "p.spine").unwrap();
        prop_assert_eq!(&back, &p);
        prop_assert_eq!(write_spine(&back), text);
    }

    #[test]
    fn triangulation_round_trip(p in polyhedron(4)) {
        let st = Stratification::new(&p);
        match triangulation_export(&p) {
            Ok(fp) => {
                prop_assert_eq!(st.nontrivial_count(), 0);
                let text = write_tri(&fp);
                let again = parse_tri(&text, "p.tri").unwrap();
                prop_assert_eq!(&again, &fp);
                let q = triangulation_import(&again).unwrap();
                prop_assert_eq!(canonical_form(&q), canonical_form(&p));
                prop_assert_eq!(triangulation_export(&q).unwrap(), fp);
            }
            Err(_) => prop_assert!(st.nontrivial_count() > 0),
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn search_reaches_the_start_from_its_neighbors(p in polyhedron(3)) {
        let sites = applicable_t_sites(&p);
        prop_assume!(!sites.is_empty());
        let q = apply_t_detailed(&p, sites[0]).unwrap().polyhedron;
        let from_p = search_equivalents(&p, p.vertex_count() + 1, 2_000);
        let from_q = search_equivalents(&q, p.vertex_count() + 1, 2_000);
        prop_assert!(from_p.forms.contains(&canonical_form(&q)));
        prop_assert!(from_q.forms.contains(&canonical_form(&p)));
        prop_assert!(from_q.min_vertices <= p.vertex_count());
    }
}
