//! Subdivisions of `Δ_d`, its layers and the named blocks, with lifting
//! functions and an exact regularity check.

pub mod blocks;
mod cell;
mod lift;
mod regularity;
mod subdivision;
pub mod wedge;

pub use blocks::{build_block, Block, BlockName};
pub use cell::{classify, Cell, CellKind};
pub use lift::AffineForm;
pub use regularity::{check_regularity, RegularityReport, RegularityViolation};
pub use subdivision::{build_layer, build_standard_subdivision, Subdivision};
