use serde::Serialize;

/// Expected dimension data of the secant varieties of `V_{3,d}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ExpectedDimension {
    pub d: i64,
    /// Dimension of the ambient projective space, `C(d+3, 3) − 1`.
    pub big_n: i64,
    /// Critical secant index; `n_d + 1 = ⌊(d+1)(d+2)(d+3)/24⌋`.
    pub n_d: i64,
    /// `(N_d + 1) − 4(n_d + 1)`, always in `0..=3`.
    pub codim_class: i64,
}

pub fn expected_dimension(d: i64) -> ExpectedDimension {
    let points = (d + 1) * (d + 2) * (d + 3) / 6;
    let n_plus_1 = (d + 1) * (d + 2) * (d + 3) / 24;
    ExpectedDimension { d, big_n: points - 1, n_d: n_plus_1 - 1, codim_class: points - 4 * n_plus_1 }
}

impl ExpectedDimension {
    /// Expected dimension of `Sec_k`: `min{4(k+1) − 1, N_d}`.
    pub fn expected_secant_dim(&self, k: i64) -> i64 {
        (4 * (k + 1) - 1).min(self.big_n)
    }
}
