//! Bounded breadth-first exploration of the `T^{±1}` equivalence class.

use std::collections::{BTreeMap, HashSet};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::canonical::{canonical_form, CanonicalForm};
use crate::moves::{applicable_t_sites, apply_t, apply_t_inverse_with, tinv_sites_with, MoveSite};
use crate::polyhedron::SpecialPolyhedron;
use crate::strata::Stratification;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SearchReport {
    pub start_vertices: usize,
    pub max_vertices: usize,
    pub node_budget: usize,
    /// Distinct polyhedra seen, by vertex count.
    pub by_vertex_count: BTreeMap<usize, usize>,
    pub min_vertices: usize,
    pub truncated: bool,
    pub levels: usize,
    #[serde(skip)]
    pub forms: HashSet<CanonicalForm>,
    #[serde(skip)]
    pub min_example: Option<SpecialPolyhedron>,
}

impl SearchReport {
    pub fn visited(&self) -> usize {
        self.forms.len()
    }
}

fn successors(p: &SpecialPolyhedron, max_vertices: usize) -> Vec<SpecialPolyhedron> {
    let mut out = Vec::new();
    if p.vertex_count() < max_vertices {
        for site in applicable_t_sites(p) {
            if let Ok(q) = apply_t(p, site) {
                out.push(q);
            }
        }
    }
    let st = Stratification::new(p);
    for site in tinv_sites_with(&st) {
        if let MoveSite::TInverse { component } = site {
            if let Ok(q) = apply_t_inverse_with(p, &st, component) {
                out.push(q);
            }
        }
    }
    out
}

/// BFS over move applications, deduplicated by canonical form. At most
/// `node_budget` distinct polyhedra are recorded; the search never exceeds
/// `max_vertices` true vertices.
pub fn search_equivalents(
    p: &SpecialPolyhedron,
    max_vertices: usize,
    node_budget: usize,
) -> SearchReport {
    let mut forms = HashSet::new();
    let mut by_vertex_count = BTreeMap::new();
    let start = canonical_form(p);
    forms.insert(start);
    *by_vertex_count.entry(p.vertex_count()).or_insert(0) += 1;
    let mut min_vertices = p.vertex_count();
    let mut min_example = Some(p.clone());
    let mut frontier = vec![p.clone()];
    let mut truncated = false;
    let mut levels = 0;
    while !frontier.is_empty() && !truncated {
        levels += 1;
        let mut found: Vec<(CanonicalForm, SpecialPolyhedron)> = frontier
            .par_iter()
            .flat_map_iter(|q| successors(q, max_vertices))
            .map(|q| (canonical_form(&q), q))
            .collect();
        found.sort_by(|a, b| a.0.cmp(&b.0));
        found.dedup_by(|a, b| a.0 == b.0);
        let mut next = Vec::new();
        for (form, q) in found {
            if forms.contains(&form) {
                continue;
            }
            if forms.len() >= node_budget {
                truncated = true;
                break;
            }
            let nv = q.vertex_count();
            *by_vertex_count.entry(nv).or_insert(0) += 1;
            if nv < min_vertices {
                min_vertices = nv;
                min_example = Some(q.clone());
            }
            forms.insert(form);
            next.push(q);
        }
        frontier = next;
    }
    SearchReport {
        start_vertices: p.vertex_count(),
        max_vertices,
        node_budget,
        by_vertex_count,
        min_vertices,
        truncated,
        levels,
        forms,
        min_example,
    }
}
