//! Linear algebra over prime fields: interpolation ranks, toric tangent
//! spans and the genericity checks behind limit tetrahedra.

pub mod field;
pub mod interpolation;
pub mod toric;

pub use field::{Field, PRIME_LARGE, PRIME_SMALL};
pub use interpolation::{
    ah_sweep, interpolation_rank, is_exceptional, RankProblem, RankResult, SweepReport, DEFAULT_CEILING, DEFAULT_SEED,
};
pub use toric::{
    certify_block_defectivity, limit_projection_check, segre_corner_tangent_check, toric_tangent_span, ToricModel,
};
