//! Explicit deep-hole candidates for Reed-Solomon codes and for duals of
//! extended Reed-Solomon codes.

use serde::{Deserialize, Serialize};

use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::matrix::check_nodes;

use super::{egrs, grs_dual_weights, subset_sums, t_set};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CandidateKind {
    /// Generated by `x^k` (times the multiplier interpolant).
    Monomial,
    /// Generated by `1 / (x - pi)` (times the multiplier interpolant).
    Pole,
    /// Monomial candidate with an extra coordinate `delta`.
    ExtendedMonomial,
    /// Pole candidate with an extra coordinate `delta`.
    ExtendedPole,
}

/// One representative vector of a candidate deep-hole class, together with
/// the parameters that produced it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeepHoleCandidate {
    pub kind: CandidateKind,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pi: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub delta: Option<u32>,
    pub vector: Vec<u32>,
    /// Verdict of the membership condition; always true for the plain
    /// monomial and pole kinds.
    pub valid: bool,
}

/// Outcome of asking for the pole candidates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PoleFamily {
    Candidates(Vec<DeepHoleCandidate>),
    /// Every field element is a node, so no pole location exists.
    EmptyFamily,
}

fn check_dim(a: &[u32], k: usize) -> Result<()> {
    if k == 0 || k >= a.len() {
        return Err(Error::BadK {
            k,
            reason: format!("need 1 <= k < n = {}", a.len()),
        });
    }
    Ok(())
}

fn monomial(field: &Field, a: &[u32], mult: &[u32], k: usize) -> DeepHoleCandidate {
    DeepHoleCandidate {
        kind: CandidateKind::Monomial,
        pi: None,
        delta: None,
        vector: a
            .iter()
            .zip(mult)
            .map(|(&x, &m)| field.mul(field.pow(x, k as u64), m))
            .collect(),
        valid: true,
    }
}

fn pole(field: &Field, a: &[u32], mult: &[u32], pi: u32) -> DeepHoleCandidate {
    DeepHoleCandidate {
        kind: CandidateKind::Pole,
        pi: Some(pi),
        delta: None,
        vector: a
            .iter()
            .zip(mult)
            .map(|(&x, &m)| field.div(m, field.sub(x, pi)))
            .collect(),
        valid: true,
    }
}

/// Candidate deep holes of the GRS code `C_k(a, mult)`: the evaluations of
/// `x^k L(x)` and of `L(x) / (x - pi)` for every `pi` outside the node set,
/// where `L` interpolates `mult` on the nodes. Each vector stands for the
/// class of its nonzero multiples plus codewords.
pub fn grs_deep_hole_family(
    field: &Field,
    a: &[u32],
    mult: &[u32],
    k: usize,
) -> Result<Vec<DeepHoleCandidate>> {
    check_nodes(field, a, mult, k)?;
    check_dim(a, k)?;
    let mut out = vec![monomial(field, a, mult, k)];
    out.extend(
        field
            .elements()
            .filter(|pi| !a.contains(pi))
            .map(|pi| pole(field, a, mult, pi)),
    );
    Ok(out)
}

/// [`grs_deep_hole_family`] for the Reed-Solomon code `C_k(a, 1)`.
pub fn rs_deep_hole_family(field: &Field, a: &[u32], k: usize) -> Result<Vec<DeepHoleCandidate>> {
    grs_deep_hole_family(field, a, &vec![1; a.len()], k)
}

/// Only the pole candidates of [`rs_deep_hole_family`].
pub fn rs_pole_family(field: &Field, a: &[u32], k: usize) -> Result<PoleFamily> {
    let poles: Vec<_> = rs_deep_hole_family(field, a, k)?
        .into_iter()
        .filter(|c| c.kind == CandidateKind::Pole)
        .collect();
    Ok(if poles.is_empty() {
        PoleFamily::EmptyFamily
    } else {
        PoleFamily::Candidates(poles)
    })
}

/// The dual of the extended RS code `C_k(a, 1, inf)`. Its generator is the
/// scaled Vandermonde matrix in `w` with the column `(0, ..., 0, -1)^T`
/// appended.
pub fn egrs_dual_code(field: &Field, a: &[u32], k: usize) -> Result<LinearCode> {
    Ok(egrs(field, a, &vec![1; a.len()], k)?.dual())
}

fn egrs_dual_setup(field: &Field, a: &[u32], k: usize, delta: u32) -> Result<Vec<u32>> {
    let n = a.len();
    check_nodes(field, a, &vec![1; n], k)?;
    if k == 0 {
        return Err(Error::BadK {
            k,
            reason: "need 1 <= k <= n".into(),
        });
    }
    if !field.contains(delta) {
        return Err(Error::ElementOutOfRange {
            value: delta,
            q: field.order(),
        });
    }
    grs_dual_weights(field, a, &vec![1; n])
}

/// `(a_1^(n+1-k) w_1, ..., a_n^(n+1-k) w_n, delta)` as a candidate deep hole
/// of [`egrs_dual_code`]. Valid iff `-delta` is not a sum of `n + 1 - k`
/// distinct nodes.
pub fn egrs_dual_monomial(
    field: &Field,
    a: &[u32],
    k: usize,
    delta: u32,
) -> Result<DeepHoleCandidate> {
    let w = egrs_dual_setup(field, a, k, delta)?;
    let m = a.len() + 1 - k;
    let mut vector = monomial(field, a, &w, m).vector;
    vector.push(delta);
    let sums = subset_sums(field, a, m)?;
    Ok(DeepHoleCandidate {
        kind: CandidateKind::ExtendedMonomial,
        pi: None,
        delta: Some(delta),
        vector,
        valid: !sums.contains(&field.neg(delta)),
    })
}

/// `(w_1 / (a_1 - pi), ..., w_n / (a_n - pi), delta)` as a candidate deep
/// hole of [`egrs_dual_code`]. Valid iff `delta` is not the reciprocal of a
/// product of `n + 1 - k` distinct factors `pi - a_i`.
pub fn egrs_dual_pole(
    field: &Field,
    a: &[u32],
    k: usize,
    delta: u32,
    pi: u32,
) -> Result<DeepHoleCandidate> {
    let w = egrs_dual_setup(field, a, k, delta)?;
    let m = a.len() + 1 - k;
    let t = t_set(field, a, pi, m)?;
    let mut vector = pole(field, a, &w, pi).vector;
    vector.push(delta);
    Ok(DeepHoleCandidate {
        kind: CandidateKind::ExtendedPole,
        pi: Some(pi),
        delta: Some(delta),
        vector,
        valid: !t.contains(&delta),
    })
}

/// True iff `u - c * rep` lies in `code` for some nonzero scalar `c`.
pub fn in_orbit(code: &LinearCode, rep: &[u32], u: &[u32]) -> Result<bool> {
    let f = code.field();
    let target = code.syndrome(u)?;
    let base = code.syndrome(rep)?;
    Ok(f.nonzero_elements()
        .any(|c| base.iter().zip(&target).all(|(&b, &t)| f.mul(c, b) == t)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::grs;
    use crate::covering::covering_radius;

    #[test]
    fn rs_family_examples() {
        let f = Field::prime(5).unwrap();
        let all: Vec<u32> = f.elements().collect();
        let fam = rs_deep_hole_family(&f, &all, 2).unwrap();
        assert_eq!(fam.len(), 1);
        assert_eq!(fam[0].vector, vec![0, 1, 4, 4, 1]);
        assert_eq!(
            rs_pole_family(&f, &all, 2).unwrap(),
            PoleFamily::EmptyFamily
        );
        let code = grs(&f, &all, &[1; 5], 2).unwrap();
        let report = covering_radius(&code).unwrap();
        for c in &fam {
            assert!(report.is_deep_hole(&c.vector).unwrap());
        }

        let a = [0, 1, 2, 3];
        match rs_pole_family(&f, &a, 2).unwrap() {
            PoleFamily::Candidates(c) => assert_eq!(c[0].pi, Some(4)),
            PoleFamily::EmptyFamily => panic!("4 is not a node"),
        }
        assert!(matches!(
            rs_deep_hole_family(&f, &a, 4),
            Err(Error::BadK { .. })
        ));
    }

    #[test]
    fn pole_candidates_at_zero_delta_are_valid() {
        let f = Field::prime(7).unwrap();
        let a = [0, 1, 2, 3, 4];
        for k in 1..=5 {
            for pi in [5, 6] {
                assert!(egrs_dual_pole(&f, &a, k, 0, pi).unwrap().valid);
            }
        }
        assert_eq!(
            egrs_dual_pole(&f, &a, 2, 0, 3).unwrap_err(),
            Error::PoleCollision(3)
        );
    }

    #[test]
    fn monomial_invalid_when_sums_cover_field() {
        let f = Field::new(2, 2).unwrap();
        let a: Vec<u32> = f.elements().collect();
        // triples of GF(4) sum to every element
        for d in f.elements() {
            assert!(!egrs_dual_monomial(&f, &a, 2, d).unwrap().valid);
        }
    }

    #[test]
    fn orbit_membership() {
        let f = Field::prime(5).unwrap();
        let code = grs(&f, &[0, 1, 2, 3], &[1; 4], 2).unwrap();
        let rep = [0, 1, 4, 4];
        let cw = code.encode(&[3, 1]).unwrap();
        let u: Vec<u32> = rep
            .iter()
            .zip(&cw)
            .map(|(&r, &c)| f.add(f.mul(2, r), c))
            .collect();
        assert!(in_orbit(&code, &rep, &u).unwrap());
        assert!(!in_orbit(&code, &rep, &cw).unwrap());
    }
}
