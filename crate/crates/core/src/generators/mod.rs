//! Example families and dual constructions.

pub mod bipyramid;
pub mod ograph;
pub mod triangulation;

pub use triangulation::{triangulation_export, triangulation_import, Face, FaceGluing, FacePairing};
pub use bipyramid::{bipyramid_face_pairing, bipyramid_parameters, bipyramid_spine};
pub use ograph::{
    chain_ograph, family_double_edge_colors, family_ograph, family_spine, ograph_to_spine,
    ograph_to_spine_with, Germ, OEdge, OGraph, OGraphConvention,
};
