//! Complexity verdicts for virtual manifolds (`cv[P]`) and for the
//! 3-manifolds that `P` spines (`c(M)`).

use serde::{Deserialize, Serialize};

use crate::error::{Result, SpineError};
use crate::polyhedron::SpecialPolyhedron;
use crate::strata::{NormalBundle, Stratification};
use crate::unionfind::UnionFind;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum BoundaryCount {
    Exact { b: usize },
    /// The thickening always has nonempty boundary.
    DefaultLowerBound { b: usize },
}

impl BoundaryCount {
    pub fn value(self) -> usize {
        match self {
            BoundaryCount::Exact { b } | BoundaryCount::DefaultLowerBound { b } => b,
        }
    }

    pub fn is_exact(self) -> bool {
        matches!(self, BoundaryCount::Exact { .. })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum VerdictKind {
    Exact { value: usize },
    Range { lo: usize, hi: usize },
}

impl VerdictKind {
    pub fn bounds(self) -> (usize, usize) {
        match self {
            VerdictKind::Exact { value } => (value, value),
            VerdictKind::Range { lo, hi } => (lo, hi),
        }
    }

    pub fn exact(self) -> Option<usize> {
        match self {
            VerdictKind::Exact { value } => Some(value),
            VerdictKind::Range { .. } => None,
        }
    }
}

/// The statement a verdict rests on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Rule {
    OneVertex,
    TwoVertices,
    OneComponent,
    BoundaryMatchesComponents,
    TwoLongCurves,
    ShortTrivialCurve,
    BothBundlesNontrivial,
    VertexBounds,
    AtLeastOneVertex,
    SpineUpperBound,
    OneComponentManifold,
    TwoLongCurvesHyperbolic,
    HyperbolicEquality,
}

impl Rule {
    pub fn tag(self) -> &'static str {
        match self {
            Rule::OneVertex => "one-vertex",
            Rule::TwoVertices => "two-vertices",
            Rule::OneComponent => "one-component",
            Rule::BoundaryMatchesComponents => "boundary-matches-components",
            Rule::TwoLongCurves => "two-long-curves",
            Rule::ShortTrivialCurve => "short-trivial-curve",
            Rule::BothBundlesNontrivial => "both-bundles-nontrivial",
            Rule::VertexBounds => "vertex-bounds",
            Rule::AtLeastOneVertex => "at-least-one-vertex",
            Rule::SpineUpperBound => "spine-upper-bound",
            Rule::OneComponentManifold => "one-component-manifold",
            Rule::TwoLongCurvesHyperbolic => "two-long-curves-hyperbolic",
            Rule::HyperbolicEquality => "hyperbolic-equality",
        }
    }
}

/// User-supplied facts about `M` that are taken on trust.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Assertions {
    pub hyperbolic_geodesic_boundary: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexityVerdict {
    #[serde(flatten)]
    pub kind: VerdictKind,
    #[serde(rename = "rules")]
    pub applied_rules: Vec<Rule>,
    #[serde(rename = "b")]
    pub b_used: BoundaryCount,
    pub assertions_used: Vec<String>,
}

impl ComplexityVerdict {
    fn new(kind: VerdictKind, rules: Vec<Rule>, b: BoundaryCount) -> Self {
        ComplexityVerdict { kind, applied_rules: rules, b_used: b, assertions_used: Vec::new() }
    }

    pub fn exact(&self) -> Option<usize> {
        self.kind.exact()
    }

    pub fn rule_tags(&self) -> Vec<&'static str> {
        self.applied_rules.iter().map(|r| r.tag()).collect()
    }
}

/// Boundary components of the thickening `W(P)`.
///
/// Each vertex carries four chambers, one per port triple; the chamber
/// `{p, q, r}` is the corner of the tetrahedron opposite the remaining port.
/// Along an edge, chambers of the two ends are joined sector by sector through
/// the edge's slot map. Components of the resulting graph are the boundary
/// components. Exact only when every normal bundle is trivial.
pub fn boundary_component_count(p: &SpecialPolyhedron) -> BoundaryCount {
    boundary_count_with(p, &Stratification::new(p))
}

pub fn boundary_count_with(p: &SpecialPolyhedron, st: &Stratification) -> BoundaryCount {
    if st.curves().any(|c| c.normal_bundle == NormalBundle::NonTrivial) {
        return BoundaryCount::DefaultLowerBound { b: 1 };
    }
    let chamber = |v: usize, s: u8| 4 * v + s as usize;
    let mut uf = UnionFind::new(4 * p.vertex_count());
    for (e, g) in p.gluings().iter().enumerate() {
        let perm = p.edge_perm(e);
        for s in (0..4u8).filter(|&s| s != g.end_a.port) {
            uf.union(chamber(g.end_a.vertex, s), chamber(g.end_b.vertex, perm.apply(s)));
        }
    }
    BoundaryCount::Exact { b: uf.count() }
}

/// `cv[P]`: the first matching rule wins.
pub fn cv_verdict(p: &SpecialPolyhedron) -> ComplexityVerdict {
    cv_verdict_with(p, &Stratification::new(p))
}

pub fn cv_verdict_with(p: &SpecialPolyhedron, st: &Stratification) -> ComplexityVerdict {
    let n = p.vertex_count();
    let d = st.component_count();
    let b = boundary_count_with(p, st);
    let exact = |value: usize, rule: Rule| {
        ComplexityVerdict::new(VerdictKind::Exact { value }, vec![rule], b)
    };
    if n == 1 {
        return exact(1, Rule::OneVertex);
    }
    if n == 2 {
        return exact(2, Rule::TwoVertices);
    }
    if d == 1 {
        return exact(n, Rule::OneComponent);
    }
    if b.is_exact() && b.value() == d {
        return exact(n, Rule::BoundaryMatchesComponents);
    }
    if d == 2 {
        let short = st.components.iter().find(|c| c.curve.is_short);
        match short {
            None => return exact(n, Rule::TwoLongCurves),
            Some(c) if c.curve.normal_bundle == NormalBundle::Trivial => {
                return exact(n - 1, Rule::ShortTrivialCurve)
            }
            Some(_) if st.nontrivial_count() == 2 => return exact(n, Rule::BothBundlesNontrivial),
            Some(_) => {}
        }
    }
    let raw = n as i64 - (d as i64 - b.value() as i64);
    let mut rules = vec![Rule::VertexBounds];
    if raw < 1 {
        rules.push(Rule::AtLeastOneVertex);
    }
    ComplexityVerdict::new(VerdictKind::Range { lo: raw.max(1) as usize, hi: n }, rules, b)
}

/// `c(M)` for the manifold `M` with special spine `P`.
pub fn manifold_complexity(p: &SpecialPolyhedron, assertions: Assertions) -> Result<ComplexityVerdict> {
    let st = Stratification::new(p);
    if st.nontrivial_count() > 0 {
        return Err(SpineError::NotAManifold(format!(
            "{} boundary curve(s) have a nontrivial normal bundle",
            st.nontrivial_count()
        )));
    }
    let n = p.vertex_count();
    let d = st.component_count();
    let cv = cv_verdict_with(p, &st);
    let asserted = |kind: VerdictKind, rule: Rule| ComplexityVerdict {
        kind,
        applied_rules: vec![rule],
        b_used: cv.b_used,
        assertions_used: vec!["hyperbolic_geodesic_boundary".to_string()],
    };
    if assertions.hyperbolic_geodesic_boundary {
        if d == 1 && n >= 2 {
            return Ok(asserted(VerdictKind::Exact { value: n }, Rule::OneComponentManifold));
        }
        if d == 2 && n >= 2 && !st.has_short_curve() {
            return Ok(asserted(VerdictKind::Exact { value: n }, Rule::TwoLongCurvesHyperbolic));
        }
        if let Some(v) = cv.exact().filter(|&v| v >= 2) {
            let mut out = asserted(VerdictKind::Exact { value: v }, Rule::HyperbolicEquality);
            out.applied_rules.extend(cv.applied_rules.iter().copied());
            return Ok(out);
        }
    }
    let (_, hi) = cv.kind.bounds();
    let mut rules = vec![Rule::SpineUpperBound];
    rules.extend(cv.applied_rules.iter().copied());
    Ok(ComplexityVerdict::new(VerdictKind::Range { lo: 0, hi }, rules, cv.b_used))
}
