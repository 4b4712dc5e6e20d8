//! Turaev–Viro state sums of order `r` on special polyhedra.

use std::collections::HashMap;
use std::f64::consts::PI;
use std::sync::RwLock;

pub use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Result, SpineError};
use crate::perm::wing_index;
use crate::polyhedron::SpecialPolyhedron;
use crate::strata::Stratification;

/// Evaluation context: root of unity, quantum integers and memoized symbols.
#[derive(Debug)]
pub struct TVContext {
    r: u32,
    root_index: u32,
    q: Complex64,
    pub tolerance: f64,
    qint: Vec<Complex64>,
    qfact: Vec<Complex64>,
    six_j_memo: RwLock<HashMap<[u8; 6], Complex64>>,
}

impl TVContext {
    /// `q = exp(iπ/r)`.
    pub fn new(r: u32) -> Result<Self> {
        Self::with_root(r, 1)
    }

    /// `q = exp(iπ·j/r)`; `q²` must be a primitive `r`-th root of unity.
    pub fn with_root(r: u32, j: u32) -> Result<Self> {
        if r < 3 {
            return Err(SpineError::Parameters(format!("order r must be at least 3, got {r}")));
        }
        if j == 0 || j >= 2 * r || gcd(j, r) != 1 {
            return Err(SpineError::Parameters(format!(
                "root index {j} does not give a primitive r-th root q² for r = {r}"
            )));
        }
        let q = Complex64::from_polar(1.0, PI * j as f64 / r as f64);
        let len = 3 * r as usize + 4;
        let denom = q - q.inv();
        let qint: Vec<Complex64> =
            (0..len).map(|n| (q.powi(n as i32) - q.powi(-(n as i32))) / denom).collect();
        let mut qfact = Vec::with_capacity(len);
        qfact.push(Complex64::new(1.0, 0.0));
        for n in 1..len {
            let prev = qfact[n - 1];
            qfact.push(prev * qint[n]);
        }
        Ok(TVContext {
            r,
            root_index: j,
            q,
            tolerance: 1e-9,
            qint,
            qfact,
            six_j_memo: RwLock::new(HashMap::new()),
        })
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn root_index(&self) -> u32 {
        self.root_index
    }

    pub fn q(&self) -> Complex64 {
        self.q
    }

    /// Colors `0..=r−2`.
    pub fn palette(&self) -> std::ops::RangeInclusive<u8> {
        0..=(self.r - 2) as u8
    }

    fn fact(&self, n: i64) -> Complex64 {
        debug_assert!(n >= 0);
        self.qfact[n as usize]
    }
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// `[n] = (qⁿ − q⁻ⁿ)/(q − q⁻¹)`.
pub fn quantum_int(ctx: &TVContext, n: usize) -> Complex64 {
    ctx.qint[n]
}

pub fn quantum_factorial(ctx: &TVContext, n: usize) -> Complex64 {
    ctx.qfact[n]
}

/// Weight `w_i = (−1)^i [i+1]` of a color.
pub fn color_weight(ctx: &TVContext, i: u8) -> Complex64 {
    let v = ctx.qint[i as usize + 1];
    if i % 2 == 1 {
        -v
    } else {
        v
    }
}

pub fn admissible_triple(ctx: &TVContext, i: u8, j: u8, k: u8) -> bool {
    let (i, j, k) = (i as u32, j as u32, k as u32);
    i + j >= k && j + k >= i && k + i >= j && (i + j + k) % 2 == 0 && i + j + k + 4 <= 2 * ctx.r
}

pub fn delta(ctx: &TVContext, i: u8, j: u8, k: u8) -> Result<Complex64> {
    if !admissible_triple(ctx, i, j, k) {
        return Err(SpineError::NotAdmissible(vec![i as u32, j as u32, k as u32]));
    }
    Ok(delta_unchecked(ctx, i, j, k))
}

fn delta_unchecked(ctx: &TVContext, i: u8, j: u8, k: u8) -> Complex64 {
    let (i, j, k) = (i as i64, j as i64, k as i64);
    let num = ctx.fact((i + j - k) / 2) * ctx.fact((j + k - i) / 2) * ctx.fact((k + i - j) / 2);
    (num / ctx.fact((i + j + k) / 2 + 1)).sqrt()
}

/// Quantum 6j-symbol `|i j k; l m n|`, where `(i,l)`, `(j,m)`, `(k,n)` are opposite.
pub fn six_j(ctx: &TVContext, i: u8, j: u8, k: u8, l: u8, m: u8, n: u8) -> Result<Complex64> {
    let args = [i, j, k, l, m, n];
    for (a, b, c) in [(i, j, k), (i, m, n), (j, l, n), (k, l, m)] {
        if !admissible_triple(ctx, a, b, c) {
            return Err(SpineError::NotAdmissible(args.iter().map(|&x| x as u32).collect()));
        }
    }
    Ok(six_j_unchecked(ctx, args))
}

fn six_j_unchecked(ctx: &TVContext, args: [u8; 6]) -> Complex64 {
    if let Some(v) = ctx.six_j_memo.read().unwrap().get(&args) {
        return *v;
    }
    let v = six_j_compute(ctx, args);
    ctx.six_j_memo.write().unwrap().insert(args, v);
    v
}

fn six_j_compute(ctx: &TVContext, [i, j, k, l, m, n]: [u8; 6]) -> Complex64 {
    let phase = match (i as u32 + j as u32 + k as u32 + l as u32 + m as u32 + n as u32) % 4 {
        0 => Complex64::new(1.0, 0.0),
        1 => Complex64::new(0.0, 1.0),
        2 => Complex64::new(-1.0, 0.0),
        _ => Complex64::new(0.0, -1.0),
    };
    let a_factor = phase
        * delta_unchecked(ctx, i, j, k)
        * delta_unchecked(ctx, i, m, n)
        * delta_unchecked(ctx, j, l, n)
        * delta_unchecked(ctx, k, l, m);
    let [i, j, k, l, m, n] = [i, j, k, l, m, n].map(|x| x as i64);
    let t = [(i + j + k) / 2, (i + m + n) / 2, (j + l + n) / 2, (k + l + m) / 2];
    let s = [(i + j + l + m) / 2, (i + k + l + n) / 2, (j + k + m + n) / 2];
    let lo = *t.iter().max().unwrap();
    let hi = *s.iter().min().unwrap();
    let mut sum = Complex64::new(0.0, 0.0);
    for z in lo..=hi {
        let b = t.iter().fold(Complex64::new(1.0, 0.0), |acc, &x| acc * ctx.fact(z - x));
        let c = s.iter().fold(Complex64::new(1.0, 0.0), |acc, &x| acc * ctx.fact(x - z));
        let sign = if z % 2 == 0 { 1.0 } else { -1.0 };
        sum += ctx.fact(z + 1) * sign / (b * c);
    }
    sum * a_factor
}

/// Color of each 2-component, indexed by component id.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Coloring(pub Vec<u8>);

/// All admissible colorings, in lexicographic order of the color vector.
pub fn enumerate_colorings(p: &SpecialPolyhedron, ctx: &TVContext) -> Vec<Coloring> {
    let st = Stratification::new(p);
    colorings_with(p, &st, ctx)
}

pub fn colorings_with(p: &SpecialPolyhedron, st: &Stratification, ctx: &TVContext) -> Vec<Coloring> {
    let d = st.component_count();
    let edges: Vec<[usize; 3]> = (0..p.edge_count()).map(|e| st.edge_branches(e)).collect();
    let mut incidence = vec![0usize; d];
    for e in &edges {
        for &c in e {
            incidence[c] += 1;
        }
    }
    let mut order: Vec<usize> = (0..d).collect();
    order.sort_by_key(|&c| (std::cmp::Reverse(incidence[c]), c));
    let mut rank = vec![0usize; d];
    for (pos, &c) in order.iter().enumerate() {
        rank[c] = pos;
    }
    // edges become checkable once their last component (in search order) is colored
    let mut checks: Vec<Vec<[usize; 3]>> = vec![Vec::new(); d];
    for e in &edges {
        let last = e.iter().map(|&c| rank[c]).max().unwrap();
        checks[last].push(*e);
    }
    let palette: Vec<u8> = ctx.palette().collect();
    let mut colors = vec![0u8; d];
    let mut out = Vec::new();
    fn recurse(
        pos: usize,
        order: &[usize],
        checks: &[Vec<[usize; 3]>],
        palette: &[u8],
        colors: &mut Vec<u8>,
        ctx: &TVContext,
        out: &mut Vec<Coloring>,
    ) {
        if pos == order.len() {
            out.push(Coloring(colors.clone()));
            return;
        }
        for &c in palette {
            colors[order[pos]] = c;
            let ok = checks[pos]
                .iter()
                .all(|e| admissible_triple(ctx, colors[e[0]], colors[e[1]], colors[e[2]]));
            if ok {
                recurse(pos + 1, order, checks, palette, colors, ctx, out);
            }
        }
    }
    recurse(0, &order, &checks, &palette, &mut colors, ctx, &mut out);
    out.sort();
    out
}

/// The six wing colors at a vertex as 6j arguments `(i, j, k, l, m, n)`.
///
/// Wings `{0,1},{0,2},{0,3}` fill the top row and their opposites
/// `{2,3},{1,3},{1,2}` the bottom row, so the four admissible triples of the
/// symbol are exactly the wing triples around ports 0, 1, 2, 3.
pub fn vertex_arguments(st: &Stratification, coloring: &Coloring, v: usize) -> [u8; 6] {
    let w = st.vertex_wings(v);
    let c = |a: u8, b: u8| coloring.0[w[wing_index(a, b)]];
    [c(0, 1), c(0, 2), c(0, 3), c(2, 3), c(1, 3), c(1, 2)]
}

pub fn coloring_weight(p: &SpecialPolyhedron, ctx: &TVContext, coloring: &Coloring) -> Complex64 {
    weight_with(p, &Stratification::new(p), ctx, coloring)
}

pub fn weight_with(
    p: &SpecialPolyhedron,
    st: &Stratification,
    ctx: &TVContext,
    coloring: &Coloring,
) -> Complex64 {
    let mut w = Complex64::new(1.0, 0.0);
    for v in 0..p.vertex_count() {
        w *= six_j_unchecked(ctx, vertex_arguments(st, coloring, v));
    }
    for &c in &coloring.0 {
        w *= color_weight(ctx, c);
    }
    w
}

#[derive(Clone, Debug)]
pub struct TVReport {
    pub r: u32,
    pub colorings: Vec<Coloring>,
    pub weights: Vec<Complex64>,
    pub invariant: Complex64,
}

/// Full state sum, with per-coloring weights summed in coloring order.
pub fn tv_report(p: &SpecialPolyhedron, ctx: &TVContext) -> TVReport {
    let st = Stratification::new(p);
    let colorings = colorings_with(p, &st, ctx);
    let weights: Vec<Complex64> =
        colorings.par_iter().map(|z| weight_with(p, &st, ctx, z)).collect();
    let invariant = weights.iter().fold(Complex64::new(0.0, 0.0), |a, w| a + w);
    TVReport { r: ctx.r, colorings, weights, invariant }
}

pub fn tv_invariant(p: &SpecialPolyhedron, ctx: &TVContext) -> Complex64 {
    tv_report(p, ctx).invariant
}
