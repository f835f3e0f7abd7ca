//! Which argument settles `Sec_k(V_{3,d})` for each `k`.

use serde::Serialize;

use super::configs::config_for;
use super::expected::expected_dimension;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Justification {
    /// Non-defectivity at `n_d` passes down to every smaller index.
    Monotonicity,
    /// A verified certificate of disjoint units.
    Certificate,
    /// `Sec_{n_d}` already fills the ambient space.
    Filling,
    /// `Sec_{n_d}` is a hypersurface; one more tangent space is not inside it.
    Hyperplane,
    /// Codimension 2: a hyperplane containing every tangent space would make
    /// the projected variety a point.
    Projection,
    /// Codimension 3: the uncovered points are absorbed into one further
    /// tetrahedron, an informal step discharged numerically.
    ExtraTetrahedron,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Range {
    Below,
    At,
    Above,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Claim {
    pub range: Range,
    /// Inclusive bounds on `k`; `None` above means unbounded.
    pub k_min: i64,
    pub k_max: Option<i64>,
    pub justification: Justification,
    pub oracle_required: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClaimSet {
    pub d: i64,
    pub n_d: i64,
    pub codim_class: i64,
    pub claims: Vec<Claim>,
}

/// Builds and verifies the certificate for `d`, then records the claims.
pub fn classify_all_k(d: i64) -> Result<ClaimSet> {
    let report = config_for(d)?.verify();
    if let Some(f) = report.failure {
        return Err(Error::InvalidParams(format!("certificate for d = {d} fails: {}", f.reason)));
    }
    let e = expected_dimension(d);
    let above = match e.codim_class {
        0 => Justification::Filling,
        1 => Justification::Hyperplane,
        2 => Justification::Projection,
        _ => Justification::ExtraTetrahedron,
    };
    let mut claims = Vec::new();
    if e.n_d > 0 {
        claims.push(Claim {
            range: Range::Below,
            k_min: 0,
            k_max: Some(e.n_d - 1),
            justification: Justification::Monotonicity,
            oracle_required: false,
        });
    }
    claims.push(Claim {
        range: Range::At,
        k_min: e.n_d,
        k_max: Some(e.n_d),
        justification: Justification::Certificate,
        oracle_required: false,
    });
    claims.push(Claim {
        range: Range::Above,
        k_min: e.n_d + 1,
        k_max: None,
        justification: above,
        oracle_required: above == Justification::ExtraTetrahedron,
    });
    Ok(ClaimSet { d, n_d: e.n_d, codim_class: e.codim_class, claims })
}
