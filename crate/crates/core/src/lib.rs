//! Exact weight combinatorics for the Penrose transform that produces a complex
//! starting with the Dirac operator in `k` variables in dimension 4.
//!
//! The pipeline is [`hasse`] (relative Hasse diagram) -> [`bgg`] (weights on
//! the vertices) -> [`pushdown`] (direct images and the complex on `G/P`),
//! with [`dims`] as a dimension cross-check and [`dirac4`] as an exact model of
//! the first operator.

pub mod bgg;
pub mod dims;
pub mod dirac4;
pub mod error;
pub mod hasse;
pub mod linalg;
pub mod pushdown;
pub mod weights;

pub use bgg::{build_bgg, canonical_seed, row_bundles, BggDiagram, RowBundle};
pub use dims::{dim_module, dim_so4, weyl_dim_sl, SlHighestWeight};
pub use error::{Error, Result};
pub use hasse::{build_hasse, inversion_set, HasseDiagram, HasseEdge, HasseVertex};
pub use pushdown::{
    build_complex, closed_descriptor, descriptor_from_weight, direct_image, direct_images, operator_order,
    ComplexDescriptor, DirectImage, ModuleDescriptor,
};
pub use weights::{
    affine_last_reflection, delta, fundamental_weight, root_vector, ParabolicMarking, RootKind, RootLabel, Weight,
};
