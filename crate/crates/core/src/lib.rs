//! Special polyhedra and the invariants of the virtual 3-manifolds they present.

pub mod canonical;
pub mod complexity;
pub mod epsilon;
pub mod error;
pub mod generators;
pub mod golden;
pub mod io;
pub mod moves;
pub mod perm;
pub mod polyhedron;
pub mod search;
pub mod strata;
pub mod subcomplex;
pub mod tv;
mod unionfind;

pub use error::{Result, SpineError};
pub use perm::Perm4;
pub use polyhedron::{EdgeGluing, Issue, Port, SpecialPolyhedron, ValidationReport};
pub use strata::{BoundaryCurve, NormalBundle, Stratification, TwoComponent};
pub use complexity::{Assertions, BoundaryCount, ComplexityVerdict, Rule, VerdictKind};
pub use golden::GoldenInt;
