//! The moves `T` and `T⁻¹` as local rewrites of gluing data.
//!
//! In the dual picture a true vertex is a tetrahedron whose face opposite
//! vertex `p` is port `p`, and a 2-component is an edge class. `T` is the 2-3
//! exchange on two distinct tetrahedra sharing a face; `T⁻¹` is the 3-2
//! exchange around an edge of degree three lying in three distinct
//! tetrahedra, which is exactly a short boundary curve. The trivial normal
//! bundle is what lets the two ends of that edge be told apart consistently.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Result, SpineError};
use crate::perm::{complement_pair, other_labels, Perm4};
use crate::polyhedron::{Port, SpecialPolyhedron};
use crate::strata::{NormalBundle, Stratification};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum MoveSite {
    T { edge: usize },
    TInverse { component: usize },
}

/// Edges whose two ends lie at distinct vertices.
pub fn applicable_t_sites(p: &SpecialPolyhedron) -> Vec<MoveSite> {
    (0..p.edge_count())
        .filter(|&e| {
            let (a, b) = p.edge_endpoints(e);
            a != b
        })
        .map(|edge| MoveSite::T { edge })
        .collect()
}

/// 2-components whose boundary curve is short with trivial normal bundle.
pub fn applicable_tinv_sites(p: &SpecialPolyhedron) -> Vec<MoveSite> {
    tinv_sites_with(&Stratification::new(p))
}

pub fn tinv_sites_with(st: &Stratification) -> Vec<MoveSite> {
    st.components
        .iter()
        .filter(|c| c.curve.is_short && c.curve.normal_bundle == NormalBundle::Trivial)
        .map(|c| MoveSite::TInverse { component: c.id })
        .collect()
}

/// Result of a move with the bookkeeping needed to undo it.
#[derive(Clone, Debug)]
pub struct MoveOutcome {
    pub polyhedron: SpecialPolyhedron,
    /// For `T`: id of the created 2-component (short, trivial bundle).
    pub created_component: Option<usize>,
}

pub fn apply_t(p: &SpecialPolyhedron, site: MoveSite) -> Result<SpecialPolyhedron> {
    Ok(apply_t_detailed(p, site)?.polyhedron)
}

pub fn apply_t_inverse(p: &SpecialPolyhedron, site: MoveSite) -> Result<SpecialPolyhedron> {
    let MoveSite::TInverse { component } = site else {
        return Err(SpineError::StaleSite(format!("{site:?} is not a T^-1 site")));
    };
    apply_t_inverse_with(p, &Stratification::new(p), component)
}

/// Re-assembles a polyhedron after replacing some vertices.
///
/// `vertex_map` sends each kept old vertex to its new index (`None` for
/// removed ones). `port_map` sends each surviving port of a removed vertex to
/// its new port together with the relabeling from new labels to old labels.
/// Old gluings with an end at a removed port absent from `port_map` are
/// dropped; `internal` gluings are added as given.
fn rebuild(
    p: &SpecialPolyhedron,
    new_count: usize,
    vertex_map: &[Option<usize>],
    port_map: &HashMap<Port, (Port, Perm4)>,
    internal: Vec<(Port, Port, Perm4)>,
) -> SpecialPolyhedron {
    let locate = |old: Port| -> Option<(Port, Perm4)> {
        match vertex_map[old.vertex] {
            Some(v) => Some((Port::new(v, old.port), Perm4::IDENTITY)),
            None => port_map.get(&old).copied(),
        }
    };
    let mut triples = Vec::with_capacity(2 * new_count);
    for (e, g) in p.gluings().iter().enumerate() {
        let (Some((na, ra)), Some((nb, rb))) = (locate(g.end_a), locate(g.end_b)) else {
            continue;
        };
        let perm = rb.inverse().compose(p.edge_perm(e)).compose(ra);
        triples.push((na, nb, perm));
    }
    triples.extend(internal);
    let out = SpecialPolyhedron::from_perms(new_count, triples);
    debug_assert!(
        crate::polyhedron::validate_parts(new_count, out.gluings()).valid,
        "move produced invalid gluing data"
    );
    out
}

/// Labels of `a`'s face vertices other than `c`, ascending.
fn others(a: u8, c: u8) -> [u8; 2] {
    complement_pair(a, c)
}

pub fn apply_t_detailed(p: &SpecialPolyhedron, site: MoveSite) -> Result<MoveOutcome> {
    let MoveSite::T { edge } = site else {
        return Err(SpineError::StaleSite(format!("{site:?} is not a T site")));
    };
    if edge >= p.edge_count() {
        return Err(SpineError::StaleSite(format!("edge {edge} does not exist")));
    }
    let g = &p.gluings()[edge];
    let (u, a) = (g.end_a.vertex, g.end_a.port);
    let (w, b) = (g.end_b.vertex, g.end_b.port);
    if u == w {
        return Err(SpineError::StaleSite(format!("edge {edge} is a loop at vertex {u}")));
    }
    let phi = p.edge_perm(edge);
    let n = p.vertex_count();
    let face = other_labels(a);
    // new tetrahedra T_c for c in the face; indices reuse u and w
    let index = [u, w, n];
    let slot = |c: u8| face.iter().position(|&x| x == c).unwrap();
    let mut vertex_map: Vec<Option<usize>> = (0..n).map(Some).collect();
    vertex_map[u] = None;
    vertex_map[w] = None;
    let mut port_map = HashMap::new();
    for (k, &c) in face.iter().enumerate() {
        let [x1, x2] = others(a, c);
        // labels of T_c: 0 = A, 1 = B, 2 = x1, 3 = x2
        let to_u = Perm4::new([a, c, x1, x2]).unwrap();
        let to_w = Perm4::new([phi.apply(c), b, phi.apply(x1), phi.apply(x2)]).unwrap();
        port_map.insert(Port::new(u, c), (Port::new(index[k], 1), to_u));
        port_map.insert(Port::new(w, phi.apply(c)), (Port::new(index[k], 0), to_w));
    }
    let label_in = |c: u8, x: u8| -> u8 {
        let [x1, _] = others(a, c);
        if x == x1 {
            2
        } else {
            3
        }
    };
    let mut internal = Vec::with_capacity(3);
    for (i, &c) in face.iter().enumerate() {
        for &d in &face[i + 1..] {
            let e = face.iter().copied().find(|&x| x != c && x != d).unwrap();
            // face A B e: opposite d in T_c, opposite c in T_d
            let mut table = [0u8, 1, 0, 0];
            table[label_in(c, d) as usize] = label_in(d, c);
            table[label_in(c, e) as usize] = label_in(d, e);
            let perm = Perm4::new(table).unwrap();
            internal.push((
                Port::new(index[slot(c)], label_in(c, d)),
                Port::new(index[slot(d)], label_in(d, c)),
                perm,
            ));
        }
    }
    let out = rebuild(p, n + 1, &vertex_map, &port_map, internal);
    let created = Stratification::new(&out).wing_owner(index[0], 2, 3);
    Ok(MoveOutcome { polyhedron: out, created_component: Some(created) })
}

pub fn apply_t_inverse_with(
    p: &SpecialPolyhedron,
    st: &Stratification,
    component: usize,
) -> Result<SpecialPolyhedron> {
    let Some(comp) = st.components.get(component) else {
        return Err(SpineError::StaleSite(format!("2-component {component} does not exist")));
    };
    let curve = &comp.curve;
    if !curve.is_short {
        return Err(SpineError::StaleSite(format!(
            "2-component {component} does not have a short boundary curve"
        )));
    }
    if curve.normal_bundle != NormalBundle::Trivial {
        return Err(SpineError::StaleSite(format!(
            "2-component {component} has a nontrivial normal bundle"
        )));
    }
    // t_i entered through port p_i, left through port q_i; vertex p_i of t_i
    // is the equatorial vertex E_i, vertex q_i is E_{i-1}.
    let steps = &curve.steps;
    let tets: Vec<usize> = steps.iter().map(|s| s.vertex).collect();
    let mut ab = complement_pair(steps[0].from_port, steps[0].to_port);
    let mut poles = Vec::with_capacity(3);
    for s in steps {
        poles.push(ab);
        let perm = p.link(s.vertex, s.to_port).perm;
        ab = [perm.apply(ab[0]), perm.apply(ab[1])];
    }
    debug_assert_eq!(ab, poles[0]);
    let n = p.vertex_count();
    let mut removed = tets.clone();
    removed.sort();
    // U and W take the two smallest freed indices; the last vertex fills the third
    let (iu, iw, ifree) = (removed[0], removed[1], removed[2]);
    let mut vertex_map: Vec<Option<usize>> = (0..n).map(Some).collect();
    for &t in &tets {
        vertex_map[t] = None;
    }
    if ifree != n - 1 {
        vertex_map[n - 1] = Some(ifree);
    }
    let mut port_map = HashMap::new();
    for j in 0..3 {
        let i = (j + 2) % 3;
        let (e_next, e_far) = ((j + 1) % 3, (j + 2) % 3);
        let t = tets[i];
        let [a_lab, b_lab] = poles[i];
        let (p_lab, q_lab) = (steps[i].from_port, steps[i].to_port);
        // U labels: 0 = A, 1 + k = E_k; the face opposite E_j is the old face opposite B in t_i
        let mut to_old = [0u8; 4];
        to_old[0] = a_lab;
        to_old[1 + j] = b_lab;
        to_old[1 + e_next] = q_lab;
        to_old[1 + e_far] = p_lab;
        port_map.insert(Port::new(t, b_lab), (Port::new(iu, 1 + j as u8), Perm4::new(to_old).unwrap()));
        let mut to_old = [0u8; 4];
        to_old[0] = b_lab;
        to_old[1 + j] = a_lab;
        to_old[1 + e_next] = q_lab;
        to_old[1 + e_far] = p_lab;
        port_map.insert(Port::new(t, a_lab), (Port::new(iw, 1 + j as u8), Perm4::new(to_old).unwrap()));
    }
    let internal = vec![(Port::new(iu, 0), Port::new(iw, 0), Perm4::IDENTITY)];
    Ok(rebuild(p, n - 1, &vertex_map, &port_map, internal))
}

/// Applies any site, dispatching on its kind.
pub fn apply_move(p: &SpecialPolyhedron, site: MoveSite) -> Result<SpecialPolyhedron> {
    match site {
        MoveSite::T { .. } => apply_t(p, site),
        MoveSite::TInverse { .. } => apply_t_inverse(p, site),
    }
}
