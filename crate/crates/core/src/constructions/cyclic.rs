//! The MDS cyclic codes `C_u` of length `q + 1` over `GF(2^m)`.

use serde::{Deserialize, Serialize};

use crate::code::LinearCode;
use crate::covering::{covering_radius_with, CoveringOptions};
use crate::error::{Error, Result};
use crate::field::{Field, Poly};
use crate::matrix::Matrix;

/// Parameters of `C_u`: `q = 2^m`, `beta = alpha^(q-1)` for the canonical
/// primitive element `alpha` of `GF(q^2)`, and the generator polynomial
/// `g_u = prod_{i=u}^{q/2} M_{beta^i}` over `GF(q)`, lowest degree first.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CyclicSpec {
    pub m: u32,
    pub u: u32,
    /// `beta` encoded in `GF(q^2)`.
    pub beta: u32,
    pub gen_poly: Vec<u32>,
}

fn check_params(m: u32, u: u32) -> Result<Field> {
    if m < 2 {
        return Err(Error::BadDims(format!("need m >= 2, got {m}")));
    }
    let field = Field::new(2, m)?;
    let half = field.order() / 2;
    if u == 0 || u > half {
        return Err(Error::BadU { u, max: half });
    }
    Ok(field)
}

pub fn cyclic_spec(m: u32, u: u32) -> Result<CyclicSpec> {
    let base = check_params(m, u)?;
    let q = base.order();
    let ext = Field::quadratic_extension(&base)?;
    let beta = ext.pow(ext.primitive(), (q - 1) as u64);
    let mut g = Poly::constant(&base, 1);
    for i in u..=q / 2 {
        g = g.mul(&ext.minimal_poly_over_base(ext.pow(beta, i as u64))?)?;
    }
    Ok(CyclicSpec {
        m,
        u,
        beta,
        gen_poly: g.coeffs().to_vec(),
    })
}

impl CyclicSpec {
    pub fn field(&self) -> Result<Field> {
        check_params(self.m, self.u)
    }

    /// Generator matrix whose rows are the cyclic shifts `x^i g_u(x)`.
    pub fn generator(&self) -> Result<Matrix> {
        let field = self.field()?;
        let n = field.order() as usize + 1;
        let deg = self.gen_poly.len() - 1;
        let k = n - deg;
        let mut g = Matrix::zeros(&field, k, n);
        for i in 0..k {
            for (j, &c) in self.gen_poly.iter().enumerate() {
                g.set(i, i + j, c);
            }
        }
        Ok(g)
    }

    pub fn build(&self) -> Result<LinearCode> {
        LinearCode::from_generator(&self.generator()?)
    }
}

/// The `[q + 1, 2u - 1, q - 2u + 3]` cyclic code `C_u`.
pub fn cyclic_code(m: u32, u: u32) -> Result<LinearCode> {
    cyclic_spec(m, u)?.build()
}

/// Facts about extending `C_u` by the all-one vector.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CyclicExtensionFacts {
    pub q: u32,
    pub u: u32,
    /// `[n, k, d]` of `C_u`.
    pub params: [usize; 3],
    pub mds: bool,
    /// `[n, k, d]` of the extension.
    pub extended_params: [usize; 3],
    pub extended_mds: bool,
    /// Weight distribution of the extension, present when `q^k` fits the
    /// budget.
    pub extended_weights: Option<Vec<u64>>,
    pub dual_rho: usize,
    pub ones_deep_hole_of_dual: bool,
}

pub fn cyclic_extension_facts(m: u32, u: u32, budget: u64) -> Result<CyclicExtensionFacts> {
    let code = cyclic_code(m, u)?;
    let q = code.field().order();
    let n = code.n();
    let ones = vec![1u32; n];
    let ext = code.extend_u(&ones)?;
    let d = code.min_distance_with_budget(budget)?;
    let ed = ext.min_distance_with_budget(budget)?;
    let extended_weights = ext.weight_enumerator(budget).ok();
    let report = covering_radius_with(
        &code.dual(),
        CoveringOptions {
            budget,
            representatives: false,
        },
    )?;
    Ok(CyclicExtensionFacts {
        q,
        u,
        params: [n, code.k(), d],
        mds: d == n - code.k() + 1,
        extended_params: [ext.n(), ext.k(), ed],
        extended_mds: ed == ext.n() - ext.k() + 1,
        extended_weights,
        dual_rho: report.rho(),
        ones_deep_hole_of_dual: report.is_deep_hole(&ones)?,
    })
}
