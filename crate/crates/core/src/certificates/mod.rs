//! Certificates of non-defectivity: disjoint units in subdivided regions.

pub mod certificate;
pub mod claims;
pub mod configs;
pub mod expected;
pub mod frozen;
pub mod identities;
pub mod unit;

pub use certificate::{Certificate, PreconditionLedger, VerificationReport, VerifyOptions};
pub use configs::{block_certificate, block_contribution, config_for, odd_layer_config, stated_block_value};
pub use expected::{expected_dimension, ExpectedDimension};
pub use identities::{check_identities, IdentityReport};
pub use unit::{Unit, UnitKind};
