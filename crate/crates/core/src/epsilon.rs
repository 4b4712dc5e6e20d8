//! The ε-invariant `t(P) = Σ_Q (−1)^V(Q) ε^(χ(Q)−V(Q))`.

use crate::golden::{epsilon_power, GoldenInt};
use crate::polyhedron::SpecialPolyhedron;
use crate::subcomplex::{enumerate_simple_subpolyhedra, SimpleSubpolyhedron};

pub fn epsilon_weight(q: &SimpleSubpolyhedron) -> GoldenInt {
    let v = q.true_vertices as i64;
    epsilon_power(q.chi - v).signed(v % 2 == 1)
}

pub fn epsilon_invariant(p: &SpecialPolyhedron) -> GoldenInt {
    enumerate_simple_subpolyhedra(p).iter().map(epsilon_weight).sum()
}
