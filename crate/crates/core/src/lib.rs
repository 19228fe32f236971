//! The small Witt design S(5,6,12), constructed from the projective plane
//! of order 3, plus a generic Steiner-system checker and a brute-force
//! automorphism search for the resulting design.
//!
//! The pipeline: [`Plane::build`] makes PG(2,q) in homogeneous
//! coordinates; [`census`] classifies all 1716 six-point subsets of the
//! order-3 plane into four types; [`WittDesign::build`] turns the
//! classification into the 132 blocks of S(5,6,12) on the 12 points away
//! from a chosen point U; [`verify_steiner`] checks any design exhaustively;
//! and [`enumerate_automorphisms`] counts the design's full automorphism
//! group, whose order 95040 witnesses sharp 5-transitivity.

pub mod autgroup;
pub mod census;
pub mod checker;
pub mod error;
pub mod gf;
pub mod plane;
pub mod subsets;
pub mod witt;

pub use autgroup::{
    aut_group_summary, enumerate_automorphisms, extend_base_image, AutGroupSummary, BlockTables,
    Enumeration, Permutation,
};
pub use census::{
    census, classify_by_trisecants, classify_structurally, triangle_roles, trisecants,
    CensusReport, PointSet, SixSetType, TriangleRoles,
};
pub use checker::{
    derived_lambdas, read_design, verify_steiner, write_design, Design, VerificationReport,
};
pub use error::Error;
pub use plane::{Plane, Triple};
pub use witt::{diagonal_points, Block, BlockType, CoverCase, Witness, WittDesign};
