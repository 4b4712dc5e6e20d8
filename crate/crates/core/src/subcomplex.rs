//! Simple subpolyhedra: unions of closed 2-components that are themselves simple.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::perm::WING_PAIRS;
use crate::polyhedron::SpecialPolyhedron;
use crate::strata::Stratification;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimpleSubpolyhedron {
    /// Ids of the included 2-components, ascending.
    pub components: Vec<usize>,
    pub k0: usize,
    pub k1: usize,
    pub chi: i64,
    /// Vertices whose six wings are all included.
    pub true_vertices: usize,
}

/// Wing subsets of a vertex link (bit `k` = wing `WING_PAIRS[k]`) whose
/// underlying graph is empty, a circle, a theta graph or `K4`.
pub const ADMISSIBLE_LINKS: [u8; 15] = [
    0b000000, // empty
    0b001011, // triangle 0-1-2
    0b010101, // triangle 0-1-3
    0b100110, // triangle 0-2-3
    0b111000, // triangle 1-2-3
    0b011110, // 4-cycle 0-2-1-3
    0b101101, // 4-cycle 0-1-2-3
    0b110011, // 4-cycle 0-1-3-2
    0b111110, // K4 minus {0,1}
    0b111101, // K4 minus {0,2}
    0b111011, // K4 minus {0,3}
    0b110111, // K4 minus {1,2}
    0b101111, // K4 minus {1,3}
    0b011111, // K4 minus {2,3}
    0b111111, // K4
];

fn link_table() -> [bool; 64] {
    let mut t = [false; 64];
    for m in ADMISSIBLE_LINKS {
        t[m as usize] = true;
    }
    t
}

/// All members of `F(P)`, including the empty set and `P`, ordered by component bitmask.
///
/// # Panics
/// If `P` has more than 30 2-components.
pub fn enumerate_simple_subpolyhedra(p: &SpecialPolyhedron) -> Vec<SimpleSubpolyhedron> {
    enumerate_with(p, &Stratification::new(p))
}

pub fn enumerate_with(p: &SpecialPolyhedron, st: &Stratification) -> Vec<SimpleSubpolyhedron> {
    let d = st.component_count();
    assert!(d <= 30, "too many 2-components ({d}) for subset enumeration");
    let table = link_table();
    let n = p.vertex_count();
    let wings: Vec<[usize; 6]> = (0..n).map(|v| st.vertex_wings(v)).collect();
    let branches: Vec<[usize; 3]> = (0..p.edge_count()).map(|e| st.edge_branches(e)).collect();
    let test = |mask: u32| -> Option<SimpleSubpolyhedron> {
        let inc = |c: usize| mask >> c & 1 == 1;
        let mut k1 = 0;
        for b in &branches {
            match b.iter().filter(|&&c| inc(c)).count() {
                0 => {}
                1 => return None,
                _ => k1 += 1,
            }
        }
        let mut k0 = 0;
        let mut full = 0;
        for w in &wings {
            let mut m = 0u8;
            for (k, &c) in w.iter().enumerate() {
                if inc(c) {
                    m |= 1 << k;
                }
            }
            if !table[m as usize] {
                return None;
            }
            if m != 0 {
                k0 += 1;
            }
            if m == 0b111111 {
                full += 1;
            }
        }
        let components: Vec<usize> = (0..d).filter(|&c| inc(c)).collect();
        let chi = k0 as i64 - k1 as i64 + components.len() as i64;
        Some(SimpleSubpolyhedron { components, k0, k1, chi, true_vertices: full })
    };
    let total = 1u32 << d;
    if d >= 10 {
        (0..total).into_par_iter().filter_map(test).collect()
    } else {
        (0..total).filter_map(test).collect()
    }
}

/// `|F(P)| − 2`.
pub fn count_proper(p: &SpecialPolyhedron) -> usize {
    enumerate_simple_subpolyhedra(p).len() - 2
}

/// Ports of a vertex that carry an included branch, given the included wing mask.
pub fn link_degree_support(mask: u8) -> usize {
    let mut touched = [false; 4];
    for (k, &(a, b)) in WING_PAIRS.iter().enumerate() {
        if mask >> k & 1 == 1 {
            touched[a as usize] = true;
            touched[b as usize] = true;
        }
    }
    touched.iter().filter(|&&t| t).count()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn degrees(mask: u8) -> [usize; 4] {
        let mut deg = [0; 4];
        for (k, &(a, b)) in WING_PAIRS.iter().enumerate() {
            if mask >> k & 1 == 1 {
                deg[a as usize] += 1;
                deg[b as usize] += 1;
            }
        }
        deg
    }

    // A subgraph of K4 is a circle, theta or K4 exactly when it has no
    // vertex of degree 1 (graphs with all degrees in {0,2,3} on four
    // vertices are automatically connected).
    #[test]
    fn whitelist_matches_degree_rule() {
        let table = link_table();
        for m in 0u8..64 {
            let ok = degrees(m).iter().all(|&d| d != 1);
            assert_eq!(table[m as usize], ok, "mask {m:06b}");
        }
        assert_eq!(ADMISSIBLE_LINKS.len(), 15);
    }

    #[test]
    fn whitelist_closed_under_relabeling() {
        use crate::perm::{wing_index, Perm4};
        let table = link_table();
        for g in Perm4::all() {
            for &m in &ADMISSIBLE_LINKS {
                let mut img = 0u8;
                for (k, &(a, b)) in WING_PAIRS.iter().enumerate() {
                    if m >> k & 1 == 1 {
                        img |= 1 << wing_index(g.apply(a), g.apply(b));
                    }
                }
                assert!(table[img as usize]);
            }
        }
    }

    #[test]
    fn support_counts() {
        assert_eq!(link_degree_support(0), 0);
        assert_eq!(link_degree_support(0b001011), 3);
        assert_eq!(link_degree_support(0b111111), 4);
    }
}
