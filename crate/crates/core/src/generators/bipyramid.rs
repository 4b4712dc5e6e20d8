//! Spines dual to the quotient of an `n`-gonal bipyramid.
//!
//! The bipyramid is cut into tetrahedra `T_i = N S V_i V_{i+1}` with vertex
//! labels `N = 0, S = 1, V_i = 2, V_{i+1} = 3`. Consecutive tetrahedra share
//! the face `N S V_{i+1}`; the face `V_i V_{i+1} N` of `T_i` is identified
//! with the face `S V_{i+k} V_{i+k+1}` of `T_{i+k}`, vertices in that order.

use crate::error::{Result, SpineError};
use crate::polyhedron::SpecialPolyhedron;

use super::triangulation::{triangulation_import, Face, FaceGluing, FacePairing};

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

pub fn check_bipyramid_parameters(n: usize, k: usize) -> Result<()> {
    if n < 4 {
        return Err(SpineError::Parameters(format!("bipyramid needs n >= 4, got n = {n}")));
    }
    if k >= n {
        return Err(SpineError::Parameters(format!("need 0 <= k < n, got k = {k}, n = {n}")));
    }
    if gcd(n as i64, 2 - k as i64) != 1 {
        return Err(SpineError::Parameters(format!(
            "gcd(n, 2 - k) = gcd({n}, {}) must be 1",
            2 - k as i64
        )));
    }
    Ok(())
}

pub fn bipyramid_face_pairing(n: usize, k: usize) -> Result<FacePairing> {
    check_bipyramid_parameters(n, k)?;
    let face = |tet, face| Face { tet, face };
    let mut gluings = Vec::with_capacity(2 * n);
    for i in 0..n {
        // N S V_{i+1}: labels (0, 1, 3) in T_i become (0, 1, 2) in T_{i+1}
        gluings.push(FaceGluing { a: face(i, 2), b: face((i + 1) % n, 3), map: [0, 1, 2] });
        // V_i V_{i+1} N -> S V_{i+k} V_{i+k+1}: 2 -> 1, 3 -> 2, 0 -> 3
        gluings.push(FaceGluing { a: face(i, 1), b: face((i + k) % n, 0), map: [3, 1, 2] });
    }
    Ok(FacePairing { tetrahedra: n, gluings })
}

pub fn bipyramid_spine(n: usize, k: usize) -> Result<SpecialPolyhedron> {
    Ok(triangulation_import(&bipyramid_face_pairing(n, k)?)?.with_name(format!("P_{n},{k}")))
}

/// All admissible `(n, k)` with `4 <= n <= max_n`.
pub fn bipyramid_parameters(max_n: usize) -> Vec<(usize, usize)> {
    (4..=max_n)
        .flat_map(|n| (0..n).map(move |k| (n, k)))
        .filter(|&(n, k)| check_bipyramid_parameters(n, k).is_ok())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parameter_checks() {
        assert!(check_bipyramid_parameters(3, 1).is_err());
        assert!(check_bipyramid_parameters(4, 4).is_err());
        let e = check_bipyramid_parameters(4, 0).unwrap_err().to_string();
        assert!(e.contains("gcd"), "{e}");
        assert!(check_bipyramid_parameters(4, 1).is_ok());
        assert!(check_bipyramid_parameters(5, 2).is_err());
    }

    #[test]
    fn small_spine() {
        let p = bipyramid_spine(4, 1).unwrap();
        assert_eq!(p.vertex_count(), 4);
        assert_eq!(p.edge_count(), 8);
    }
}
