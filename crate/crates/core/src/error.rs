use thiserror::Error;

use crate::polyhedron::Issue;

#[derive(Debug, Error)]
pub enum SpineError {
    #[error("invalid polyhedron: {}", join_issues(.0))]
    Invalid(Vec<Issue>),

    #[error("{file}:{line}: {message}")]
    Parse { file: String, line: usize, message: String },

    #[error("stale move site: {0}")]
    StaleSite(String),

    #[error("invalid parameters: {0}")]
    Parameters(String),

    #[error("not a manifold spine: {0}")]
    NotAManifold(String),

    #[error("non-admissible colors {0:?}")]
    NotAdmissible(Vec<u32>),
}

fn join_issues(issues: &[Issue]) -> String {
    issues.iter().map(|i| i.to_string()).collect::<Vec<_>>().join("; ")
}

pub type Result<T, E = SpineError> = std::result::Result<T, E>;
