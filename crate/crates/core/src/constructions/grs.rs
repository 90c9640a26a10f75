use serde::{Deserialize, Serialize};

use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::matrix::{check_nodes, egrs_generator, grs_generator, Matrix};

/// Parameters of a generalized Reed-Solomon code `C_k(a, v)` or its
/// extension by the point at infinity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GrsSpec {
    /// Pairwise distinct evaluation nodes.
    pub a: Vec<u32>,
    /// Nonzero column multipliers; empty means all ones.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub v: Vec<u32>,
    pub k: usize,
    #[serde(default)]
    pub extended: bool,
}

impl GrsSpec {
    /// Reed-Solomon code: unit multipliers.
    pub fn rs(a: Vec<u32>, k: usize) -> GrsSpec {
        GrsSpec {
            a,
            v: Vec::new(),
            k,
            extended: false,
        }
    }

    pub fn multipliers(&self) -> Vec<u32> {
        if self.v.is_empty() {
            vec![1; self.a.len()]
        } else {
            self.v.clone()
        }
    }

    pub fn generator(&self, field: &Field) -> Result<Matrix> {
        let v = self.multipliers();
        if self.extended {
            egrs_generator(field, &self.a, &v, self.k)
        } else {
            grs_generator(field, &self.a, &v, self.k)
        }
    }

    pub fn build(&self, field: &Field) -> Result<LinearCode> {
        LinearCode::from_generator(&self.generator(field)?)
    }
}

/// `C_k(a, v)`: evaluations `(v_i f(a_i))` of polynomials of degree `< k`.
pub fn grs(field: &Field, a: &[u32], v: &[u32], k: usize) -> Result<LinearCode> {
    LinearCode::from_generator(&grs_generator(field, a, v, k)?)
}

/// `C_k(a, v, inf)`: `C_k(a, v)` with the coefficient of `x^(k-1)` appended.
pub fn egrs(field: &Field, a: &[u32], v: &[u32], k: usize) -> Result<LinearCode> {
    LinearCode::from_generator(&egrs_generator(field, a, v, k)?)
}

/// `w_i = 1 / (v_i prod_{j != i} (a_i - a_j))`, the multipliers of the dual
/// code: `C_k(a, v)^perp = C_(n-k)(a, w)`.
pub fn grs_dual_weights(field: &Field, a: &[u32], v: &[u32]) -> Result<Vec<u32>> {
    check_nodes(field, a, v, 0)?;
    Ok(a.iter()
        .zip(v)
        .enumerate()
        .map(|(i, (&ai, &vi))| {
            let prod = field.product(
                a.iter()
                    .enumerate()
                    .filter(|&(j, _)| j != i)
                    .map(|(_, &aj)| field.sub(ai, aj)),
            );
            field.inv(field.mul(vi, prod))
        })
        .collect())
}

/// Projective Reed-Solomon code `PRS(k)`: the extended RS code of length
/// `q + 1` on all of `GF(q)`.
pub fn prs(field: &Field, k: usize) -> Result<LinearCode> {
    let q = field.order() as usize;
    if k == 0 || k > q + 1 {
        return Err(Error::BadK {
            k,
            reason: format!("need 1 <= k <= q + 1 = {}", q + 1),
        });
    }
    let a: Vec<u32> = field.elements().collect();
    egrs(field, &a, &vec![1; q], k)
}

/// The vector `u` with `u_i = a_i^(n-k) w_i`. It satisfies
/// `G_k u^T = (0, ..., 0, 1)^T`, so extending `C_k(a, v)` by `u` gives
/// `C_k(a, v, inf)`.
pub fn grs_extension_vector(field: &Field, a: &[u32], v: &[u32], k: usize) -> Result<Vec<u32>> {
    check_nodes(field, a, v, k)?;
    if k == 0 {
        return Err(Error::BadK {
            k,
            reason: "need k >= 1".into(),
        });
    }
    let w = grs_dual_weights(field, a, v)?;
    let e = (a.len() - k) as u64;
    Ok(a.iter()
        .zip(&w)
        .map(|(&ai, &wi)| field.mul(field.pow(ai, e), wi))
        .collect())
}
