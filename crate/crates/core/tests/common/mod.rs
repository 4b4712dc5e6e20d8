//! Shared helpers for integration tests.
#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;
use spx_core::perm::Perm4;
use spx_core::polyhedron::{validate_parts, EdgeGluing, Port, SpecialPolyhedron};

/// Uniformly random matching of ports with random slot bijections; retries
/// until the singular graph is connected.
pub fn random_polyhedron<R: Rng>(n: usize, rng: &mut R) -> SpecialPolyhedron {
    loop {
        let mut ports: Vec<Port> =
            (0..n).flat_map(|v| (0..4u8).map(move |p| Port::new(v, p))).collect();
        ports.shuffle(rng);
        let perms: Vec<Perm4> = Perm4::all().collect();
        let gluings: Vec<EdgeGluing> = ports
            .chunks(2)
            .map(|pair| {
                let (a, b) = (pair[0], pair[1]);
                let candidates: Vec<Perm4> =
                    perms.iter().copied().filter(|p| p.apply(a.port) == b.port).collect();
                let perm = *candidates.choose(rng).unwrap();
                EdgeGluing::from_perm(a, b, perm)
            })
            .collect();
        if validate_parts(n, &gluings).valid {
            return SpecialPolyhedron::new(n, gluings).unwrap();
        }
    }
}

/// The same polyhedron with vertices, port labels, edge order and edge
/// orientations scrambled.
pub fn relabel<R: Rng>(p: &SpecialPolyhedron, rng: &mut R) -> SpecialPolyhedron {
    let n = p.vertex_count();
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let all: Vec<Perm4> = Perm4::all().collect();
    let sigma: Vec<Perm4> = (0..n).map(|_| *all.choose(rng).unwrap()).collect();
    let mut gluings: Vec<EdgeGluing> = (0..p.edge_count())
        .map(|e| {
            let g = &p.gluings()[e];
            let (u, w) = (g.end_a, g.end_b);
            let perm = sigma[w.vertex].compose(p.edge_perm(e)).compose(sigma[u.vertex].inverse());
            let a = Port::new(order[u.vertex], sigma[u.vertex].apply(u.port));
            let b = Port::new(order[w.vertex], sigma[w.vertex].apply(w.port));
            if rng.gen_bool(0.5) {
                EdgeGluing::from_perm(a, b, perm)
            } else {
                EdgeGluing::from_perm(b, a, perm.inverse())
            }
        })
        .collect();
    gluings.shuffle(rng);
    SpecialPolyhedron::new(n, gluings).unwrap()
}
