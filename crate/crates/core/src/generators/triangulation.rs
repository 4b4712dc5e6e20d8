//! Duality between special spines and tetrahedral face pairings.
//!
//! Tetrahedron `t` becomes true vertex `t`; its face opposite vertex `f`
//! becomes port `f`; the vertex correspondence of a face identification is
//! exactly the slot map of the dual edge. Edge classes of the triangulation
//! become 2-components, vertex classes become boundary components.

use serde::{Deserialize, Serialize};

use crate::error::{Result, SpineError};
use crate::polyhedron::{EdgeGluing, Port, SpecialPolyhedron};
use crate::strata::{NormalBundle, Stratification};

/// Face `face` (the face opposite vertex `face`) of tetrahedron `tet`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Face {
    pub tet: usize,
    pub face: u8,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaceGluing {
    pub a: Face,
    pub b: Face,
    /// Images of the vertices of face `a`, ascending, as vertex labels of tetrahedron `b.tet`.
    pub map: [u8; 3],
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FacePairing {
    pub tetrahedra: usize,
    pub gluings: Vec<FaceGluing>,
}

impl FacePairing {
    /// Number of edge classes under the identifications.
    pub fn edge_class_count(&self) -> Result<usize> {
        let spine = triangulation_import(self)?;
        Ok(Stratification::new(&spine).component_count())
    }
}

pub fn triangulation_import(fp: &FacePairing) -> Result<SpecialPolyhedron> {
    let gluings = fp
        .gluings
        .iter()
        .map(|g| EdgeGluing::new(Port::new(g.a.tet, g.a.face), Port::new(g.b.tet, g.b.face), g.map))
        .collect::<Vec<_>>();
    let mut p = SpecialPolyhedron::new(fp.tetrahedra, gluings)?;
    let filled = p
        .gluings()
        .iter()
        .map(|g| {
            let mut g = g.clone();
            g.twist = Some(crate::polyhedron::derived_twist(g.perm().unwrap()));
            g
        })
        .collect();
    p = SpecialPolyhedron::new(fp.tetrahedra, filled)?;
    Ok(p)
}

/// Refused when some boundary curve has a nontrivial normal bundle: such an
/// edge class would be glued to itself with reversed orientation.
pub fn triangulation_export(p: &SpecialPolyhedron) -> Result<FacePairing> {
    let st = Stratification::new(p);
    if let Some(c) = st
        .components
        .iter()
        .find(|c| c.curve.normal_bundle == NormalBundle::NonTrivial)
    {
        return Err(SpineError::NotAManifold(format!(
            "2-component {} has a nontrivial normal bundle; no dual triangulation",
            c.id
        )));
    }
    Ok(FacePairing {
        tetrahedra: p.vertex_count(),
        gluings: p
            .gluings()
            .iter()
            .map(|g| FaceGluing {
                a: Face { tet: g.end_a.vertex, face: g.end_a.port },
                b: Face { tet: g.end_b.vertex, face: g.end_b.port },
                map: g.slot_map,
            })
            .collect(),
    })
}
