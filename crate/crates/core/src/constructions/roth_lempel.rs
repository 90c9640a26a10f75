use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::matrix::{check_nodes, grs_generator, Matrix};

use super::grs_dual_weights;

fn check_dims(field: &Field, a: &[u32], k: usize) -> Result<()> {
    let n = a.len();
    if !(4 <= k + 1 && k < n && n <= field.order() as usize) {
        return Err(Error::BadDims(format!(
            "Roth-Lempel codes need 4 <= k + 1 <= n <= q, got k = {k}, n = {n}, q = {}",
            field.order()
        )));
    }
    check_nodes(field, a, &vec![1; n], k)
}

/// Generator of the `[n + 2, k]` Roth-Lempel code: the RS generator with
/// columns `(0, ..., 0, 1)^T` and `(0, ..., 0, 1, delta)^T` appended.
pub fn roth_lempel_generator(field: &Field, a: &[u32], k: usize, delta: u32) -> Result<Matrix> {
    check_dims(field, a, k)?;
    if !field.contains(delta) {
        return Err(Error::ElementOutOfRange {
            value: delta,
            q: field.order(),
        });
    }
    let g = grs_generator(field, a, &vec![1; a.len()], k)?;
    let mut inf = vec![0; k];
    inf[k - 1] = 1;
    let mut last = vec![0; k];
    last[k - 2] = 1;
    last[k - 1] = delta;
    g.append_column(&inf)?.append_column(&last)
}

/// The Roth-Lempel code. It is MDS iff no `k - 1` of the nodes sum to
/// `delta`.
pub fn roth_lempel(field: &Field, a: &[u32], k: usize, delta: u32) -> Result<LinearCode> {
    LinearCode::from_generator(&roth_lempel_generator(field, a, k, delta)?)
}

/// The length `n + 1` vector `(u_1, ..., u_n, delta - sum a_i)` with
/// `u_i = a_i^(n+1-k) / prod_{j != i}(a_i - a_j)`. Extending the extended RS
/// code `C_k(a, 1, inf)` by it gives the Roth-Lempel code.
pub fn roth_lempel_extension_vector(
    field: &Field,
    a: &[u32],
    k: usize,
    delta: u32,
) -> Result<Vec<u32>> {
    check_dims(field, a, k)?;
    let n = a.len();
    let w = grs_dual_weights(field, a, &vec![1; n])?;
    let e = (n + 1 - k) as u64;
    let mut u: Vec<u32> = a
        .iter()
        .zip(&w)
        .map(|(&ai, &wi)| field.mul(field.pow(ai, e), wi))
        .collect();
    u.push(field.sub(delta, field.sum(a.iter().copied())));
    Ok(u)
}
