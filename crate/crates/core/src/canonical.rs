//! Canonical form of gluing data up to renumbering vertices and relabeling ports.
//!
//! For every start vertex and every relabeling of its ports, vertices are
//! numbered in breadth-first order; a newly reached vertex is relabeled so
//! that the gluing leading to it becomes the identity. The form is the
//! lexicographically least resulting table. Twist bits are not part of it.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::perm::Perm4;
use crate::polyhedron::SpecialPolyhedron;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CanonicalForm(pub Vec<u32>);

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 && i % 4 == 0 {
                write!(f, "|")?;
            }
            write!(f, "{:x}.{:x} ", x >> 5, x & 31)?;
        }
        write!(f, ")")
    }
}

impl CanonicalForm {
    pub fn vertex_count(&self) -> usize {
        self.0.len() / 4
    }

    /// Hex string, stable across runs.
    pub fn to_hex(&self) -> String {
        self.0.iter().map(|x| format!("{x:04x}")).collect()
    }

    /// The canonical representative described by this form.
    pub fn to_polyhedron(&self) -> SpecialPolyhedron {
        let n = self.vertex_count();
        let perms: Vec<Perm4> = Perm4::all().collect();
        let mut triples = Vec::with_capacity(2 * n);
        for v in 0..n {
            for p in 0..4u8 {
                let code = self.0[4 * v + p as usize];
                let (to, perm) = ((code >> 5) as usize, perms[(code & 31) as usize]);
                let q = perm.apply(p);
                if (v, p) < (to, q) {
                    triples.push((
                        crate::polyhedron::Port::new(v, p),
                        crate::polyhedron::Port::new(to, q),
                        perm,
                    ));
                }
            }
        }
        SpecialPolyhedron::from_perms(n, triples)
    }
}

fn perm_code(p: Perm4) -> u32 {
    // position in Perm4::all(), via the factorial-base digits used there
    let mut pool = vec![0u8, 1, 2, 3];
    let mut code = 0u32;
    let mut radix_mul = 1u32;
    for (k, &x) in p.images().iter().enumerate() {
        let pick = pool.iter().position(|&y| y == x).unwrap() as u32;
        pool.remove(pick as usize);
        code += pick * radix_mul;
        radix_mul *= (4 - k) as u32;
    }
    code
}

pub fn canonical_form(p: &SpecialPolyhedron) -> CanonicalForm {
    let n = p.vertex_count();
    let mut best: Option<Vec<u32>> = None;
    let mut buf = Vec::with_capacity(4 * n);
    let mut index = vec![usize::MAX; n];
    let mut relabel = vec![Perm4::IDENTITY; n];
    let mut queue = VecDeque::with_capacity(n);
    for start in 0..n {
        for sigma in Perm4::all() {
            buf.clear();
            index.iter_mut().for_each(|x| *x = usize::MAX);
            queue.clear();
            index[start] = 0;
            relabel[start] = sigma;
            queue.push_back(start);
            let mut next = 1;
            // whether buf is still equal to the prefix of best
            let mut tied = best.is_some();
            let mut abandoned = false;
            'bfs: while let Some(v) = queue.pop_front() {
                let sv = relabel[v];
                let sv_inv = sv.inverse();
                for np in 0..4u8 {
                    let l = p.link(v, sv_inv.apply(np));
                    let to = l.to.vertex;
                    if index[to] == usize::MAX {
                        index[to] = next;
                        next += 1;
                        relabel[to] = sv.compose(l.perm.inverse());
                        queue.push_back(to);
                    }
                    let glued = relabel[to].compose(l.perm).compose(sv_inv);
                    let code = ((index[to] as u32) << 5) | perm_code(glued);
                    if tied {
                        let b = best.as_ref().unwrap()[buf.len()];
                        if code > b {
                            abandoned = true;
                            break 'bfs;
                        }
                        if code < b {
                            tied = false;
                        }
                    }
                    buf.push(code);
                }
            }
            if !abandoned && (best.is_none() || !tied) {
                best = Some(buf.clone());
            }
        }
    }
    CanonicalForm(best.unwrap_or_default())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn perm_codes_match_enumeration_order() {
        for (i, p) in Perm4::all().enumerate() {
            assert_eq!(perm_code(p), i as u32);
        }
    }

    #[test]
    fn representative_round_trip() {
        let p = crate::generators::bipyramid_spine(5, 1).unwrap();
        let f = canonical_form(&p);
        let q = f.to_polyhedron();
        assert_eq!(canonical_form(&q), f);
        assert_eq!(q.vertex_count(), 5);
    }
}
