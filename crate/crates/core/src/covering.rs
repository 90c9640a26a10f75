//! Covering radius, coset leaders and deep holes.
//!
//! The covering radius is computed by a weight-layered syndrome sweep: error
//! vectors are enumerated by increasing Hamming weight, each in
//! lexicographic order, and the first weight at which a syndrome appears is
//! its coset-leader weight. The sweep stops as soon as every syndrome has
//! been reached, so it never touches vectors heavier than the radius.

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::code::{check_budget, power_count, LinearCode, DEFAULT_BUDGET};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::matrix::Matrix;

const UNSEEN: u8 = u8::MAX;

/// Knobs for [`covering_radius_with`].
#[derive(Debug, Clone, Copy)]
pub struct CoveringOptions {
    /// Maximum number of syndromes `q^(n-k)`.
    pub budget: u64,
    /// Record the lexicographically first leader of every deep-hole coset.
    pub representatives: bool,
}

impl Default for CoveringOptions {
    fn default() -> Self {
        CoveringOptions {
            budget: DEFAULT_BUDGET,
            representatives: true,
        }
    }
}

/// Result of the syndrome sweep for one code.
#[derive(Debug, Clone)]
pub struct CoveringReport {
    field: Field,
    parity: Matrix,
    rho: usize,
    /// Leader weight per syndrome index; a syndrome `s` has index
    /// `sum s_j q^j`.
    leader_weights: Vec<u8>,
    deep_hole_cosets: Vec<u64>,
    /// Flattened representatives, `n` entries each, in the order of
    /// `deep_hole_cosets`. Empty when not requested.
    representatives: Vec<u32>,
}

/// Serialized form of a covering report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoveringSummary {
    pub rho: usize,
    pub num_deep_hole_cosets: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub representatives: Option<Vec<Vec<u32>>>,
}

impl CoveringReport {
    pub fn rho(&self) -> usize {
        self.rho
    }

    pub fn n(&self) -> usize {
        self.parity.cols()
    }

    pub fn leader_weights(&self) -> &[u8] {
        &self.leader_weights
    }

    /// Syndrome indices of the cosets at distance `rho`, ordered by their
    /// lexicographically first leader.
    pub fn deep_hole_cosets(&self) -> &[u64] {
        &self.deep_hole_cosets
    }

    pub fn num_deep_hole_cosets(&self) -> usize {
        self.deep_hole_cosets.len()
    }

    pub fn has_representatives(&self) -> bool {
        !self.representatives.is_empty() || self.deep_hole_cosets.is_empty()
    }

    /// One canonical vector per deep-hole coset: its lexicographically
    /// smallest coset leader.
    pub fn representatives(&self) -> impl Iterator<Item = &[u32]> {
        self.representatives.chunks(self.n().max(1))
    }

    pub fn syndrome_index(&self, v: &[u32]) -> Result<u64> {
        if v.len() != self.n() {
            return Err(Error::LengthMismatch {
                expected: self.n(),
                got: v.len(),
            });
        }
        let s = self.parity.mul_vec(v)?;
        Ok(index_of(&s, self.field.order()))
    }

    /// Distance from `v` to the code: the leader weight of its coset.
    pub fn distance(&self, v: &[u32]) -> Result<usize> {
        let idx = self.syndrome_index(v)?;
        Ok(self.leader_weights[idx as usize] as usize)
    }

    pub fn is_deep_hole(&self, v: &[u32]) -> Result<bool> {
        Ok(self.distance(v)? == self.rho)
    }

    pub fn summary(&self, with_representatives: bool) -> CoveringSummary {
        CoveringSummary {
            rho: self.rho,
            num_deep_hole_cosets: self.num_deep_hole_cosets(),
            representatives: with_representatives
                .then(|| self.representatives().map(<[u32]>::to_vec).collect()),
        }
    }
}

fn index_of(s: &[u32], q: u32) -> u64 {
    s.iter()
        .rev()
        .fold(0u64, |acc, &x| acc * q as u64 + x as u64)
}

/// Adds two syndrome indices coordinate-wise.
struct IndexAdder {
    field: Field,
    q: u64,
    digits: usize,
}

impl IndexAdder {
    #[inline]
    fn add(&self, a: u64, b: u64) -> u64 {
        if self.field.characteristic() == 2 {
            // base-2^m digits are bit fields
            return a ^ b;
        }
        let (mut a, mut b) = (a, b);
        let mut out = 0u64;
        let mut place = 1u64;
        for _ in 0..self.digits {
            let d = self.field.add((a % self.q) as u32, (b % self.q) as u32);
            out += d as u64 * place;
            a /= self.q;
            b /= self.q;
            place *= self.q;
        }
        out
    }
}

struct Sweep<'a> {
    n: usize,
    q: u32,
    adder: &'a IndexAdder,
    /// contrib[i * q + a] = index of a * (column i of H)
    contrib: Vec<u64>,
    weights: Vec<u8>,
    seen: u64,
    total: u64,
    current: Vec<u32>,
    record: bool,
    layer: u8,
    layer_cosets: Vec<u64>,
    layer_leaders: Vec<u32>,
}

impl Sweep<'_> {
    /// Visits every vector of weight exactly `remaining` on positions
    /// `pos..n`, in lexicographic order. Returns false once everything is
    /// covered.
    fn descend(&mut self, pos: usize, remaining: usize, acc: u64) -> bool {
        if remaining == 0 {
            let slot = &mut self.weights[acc as usize];
            if *slot == UNSEEN {
                *slot = self.layer;
                self.seen += 1;
                if self.record {
                    self.layer_cosets.push(acc);
                    self.layer_leaders.extend_from_slice(&self.current);
                }
            }
            return self.seen < self.total;
        }
        let left = self.n - pos;
        if left < remaining {
            return true;
        }
        if left > remaining && !self.descend(pos + 1, remaining, acc) {
            return false;
        }
        let base = pos * self.q as usize;
        for a in 1..self.q {
            self.current[pos] = a;
            let next = self.adder.add(acc, self.contrib[base + a as usize]);
            let go_on = self.descend(pos + 1, remaining - 1, next);
            self.current[pos] = 0;
            if !go_on {
                return false;
            }
        }
        true
    }
}

/// Covering radius with the default budget and representatives.
pub fn covering_radius(code: &LinearCode) -> Result<CoveringReport> {
    covering_radius_with(code, CoveringOptions::default())
}

pub fn covering_radius_with(code: &LinearCode, opts: CoveringOptions) -> Result<CoveringReport> {
    let f = code.field();
    let q = f.order();
    let (n, r) = (code.n(), code.redundancy());
    let total = power_count(q, r);
    check_budget(total, opts.budget)?;
    let total = total as u64;
    let h = code.parity();
    let adder = IndexAdder {
        field: f.clone(),
        q: q as u64,
        digits: r,
    };
    let mut contrib = vec![0u64; n * q as usize];
    for i in 0..n {
        let col = h.column(i);
        for a in 0..q {
            let scaled: Vec<u32> = col.iter().map(|&x| f.mul(a, x)).collect();
            contrib[i * q as usize + a as usize] = index_of(&scaled, q);
        }
    }
    let mut weights = vec![UNSEEN; total as usize];
    weights[0] = 0;
    let mut sweep = Sweep {
        n,
        q,
        adder: &adder,
        contrib,
        weights,
        seen: 1,
        total,
        current: vec![0; n],
        record: opts.representatives,
        layer: 0,
        layer_cosets: vec![0],
        layer_leaders: vec![0; if opts.representatives { n } else { 0 }],
    };
    if !opts.representatives {
        sweep.layer_cosets.clear();
    }
    let mut rho = 0;
    while sweep.seen < total {
        rho += 1;
        debug_assert!(rho <= n, "every syndrome is reached by weight n - k");
        sweep.layer = rho as u8;
        sweep.layer_cosets.clear();
        sweep.layer_leaders.clear();
        sweep.descend(0, rho, 0);
    }
    let deep_hole_cosets = if opts.representatives {
        std::mem::take(&mut sweep.layer_cosets)
    } else {
        (0..total)
            .filter(|&s| sweep.weights[s as usize] as usize == rho)
            .collect()
    };
    Ok(CoveringReport {
        field: f.clone(),
        parity: h.clone(),
        rho,
        representatives: std::mem::take(&mut sweep.layer_leaders),
        leader_weights: sweep.weights,
        deep_hole_cosets,
    })
}

/// Minimum Hamming distance from `v` to a codeword. Enumerates codewords
/// when that is cheap, otherwise falls back to the syndrome sweep.
pub fn distance_to_code(code: &LinearCode, v: &[u32]) -> Result<usize> {
    if v.len() != code.n() {
        return Err(Error::LengthMismatch {
            expected: code.n(),
            got: v.len(),
        });
    }
    if power_count(code.field().order(), code.k()) <= DEFAULT_BUDGET as u128 {
        let mut best = usize::MAX;
        code.for_each_codeword(|c| {
            let d = crate::code::hamming_distance(c, v);
            best = best.min(d);
        });
        return Ok(best);
    }
    covering_radius_with(
        code,
        CoveringOptions {
            representatives: false,
            ..Default::default()
        },
    )?
    .distance(v)
}

pub fn is_deep_hole(code: &LinearCode, v: &[u32]) -> Result<bool> {
    let report = covering_radius_with(
        code,
        CoveringOptions {
            representatives: false,
            ..Default::default()
        },
    )?;
    report.is_deep_hole(v)
}

/// Deep-hole test for an MDS code of full covering radius `n - k`: `u` is
/// a deep hole iff the generator with `u` appended as a row generates an
/// `[n, k+1]` MDS code.
pub fn is_deep_hole_via_mds(code: &LinearCode, u: &[u32]) -> Result<bool> {
    if !code.is_mds()? {
        return Err(Error::NotMds);
    }
    let report = covering_radius_with(
        code,
        CoveringOptions {
            representatives: false,
            ..Default::default()
        },
    )?;
    deep_hole_via_mds_with(code, &report, u)
}

/// As [`is_deep_hole_via_mds`] with a precomputed report. MDS-ness of
/// `code` is the caller's responsibility.
pub fn deep_hole_via_mds_with(
    code: &LinearCode,
    report: &CoveringReport,
    u: &[u32],
) -> Result<bool> {
    if u.len() != code.n() {
        return Err(Error::LengthMismatch {
            expected: code.n(),
            got: u.len(),
        });
    }
    let full = code.redundancy();
    if report.rho() != full {
        return Err(Error::CoveringRadiusDeficient {
            rho: report.rho(),
            full,
        });
    }
    if code.k() == code.n() {
        return Err(Error::BadK {
            k: code.k(),
            reason: "no [n, n+1] code exists".into(),
        });
    }
    let stacked = code.generator().append_row(u)?;
    stacked.all_k_columns_independent(code.k() + 1)
}

/// `u` is a deep hole iff `H u^T` is not a linear combination of any
/// `rho - 1` columns of `H`.
pub fn syndrome_criterion(h: &Matrix, u: &[u32], rho: usize) -> Result<bool> {
    if rho == 0 || rho - 1 > h.cols() {
        return Err(Error::BadRho(rho));
    }
    let s = h.mul_vec(u)?;
    if s.iter().all(|&x| x == 0) {
        return Ok(false);
    }
    let t = rho - 1;
    if t == 0 {
        return Ok(true);
    }
    let expressible = (0..h.cols()).combinations(t).any(|cols| {
        let sub = h.select_columns(&cols);
        let aug = sub
            .append_column(&s)
            .expect("syndrome length equals the row count");
        sub.rank() == aug.rank()
    });
    Ok(!expressible)
}

/// For an MDS code: a vector `x` such that the generator with `x` appended
/// generates an `[n, k+1]` MDS code, if one exists. Such a vector exists
/// exactly when the covering radius is `n - k`.
pub fn full_radius_witness(code: &LinearCode) -> Result<Option<Vec<u32>>> {
    if !code.is_mds()? {
        return Err(Error::NotMds);
    }
    if code.k() == code.n() {
        return Ok(None);
    }
    let report = covering_radius(code)?;
    if report.rho() != code.redundancy() {
        return Ok(None);
    }
    for rep in report.representatives() {
        let stacked = code.generator().append_row(rep)?;
        if stacked.all_k_columns_independent(code.k() + 1)? {
            return Ok(Some(rep.to_vec()));
        }
    }
    Ok(None)
}

/// The three predicates related by the main equivalence for an MDS code
/// `C` and a vector `u`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtensionEquivalence {
    /// The extension `C(u)` is MDS.
    pub extended_mds: bool,
    /// The covering radius of the dual equals `k`.
    pub rho_dual_is_k: bool,
    /// `u` is a deep hole of the dual.
    pub u_deep_hole_dual: bool,
}

impl ExtensionEquivalence {
    /// `extended_mds == (rho_dual_is_k && u_deep_hole_dual)`.
    pub fn holds(&self) -> bool {
        self.extended_mds == (self.rho_dual_is_k && self.u_deep_hole_dual)
    }
}

/// Evaluates the extension/deep-hole equivalence for many `u` against one
/// code, sharing the dual's covering report.
pub struct EquivalenceChecker {
    code: LinearCode,
    dual_report: CoveringReport,
}

impl EquivalenceChecker {
    pub fn new(code: &LinearCode, budget: u64) -> Result<Self> {
        if !code.is_mds_with_budget(budget)? {
            return Err(Error::NotMds);
        }
        let dual_report = covering_radius_with(
            &code.dual(),
            CoveringOptions {
                budget,
                representatives: false,
            },
        )?;
        Ok(EquivalenceChecker {
            code: code.clone(),
            dual_report,
        })
    }

    pub fn dual_report(&self) -> &CoveringReport {
        &self.dual_report
    }

    pub fn check(&self, u: &[u32]) -> Result<ExtensionEquivalence> {
        let extended = self.code.extend_u(u)?;
        Ok(ExtensionEquivalence {
            extended_mds: extended.is_mds_by_minors(),
            rho_dual_is_k: self.dual_report.rho() == self.code.k(),
            u_deep_hole_dual: self.dual_report.is_deep_hole(u)?,
        })
    }
}

pub fn check_extension_equivalence(code: &LinearCode, u: &[u32]) -> Result<ExtensionEquivalence> {
    EquivalenceChecker::new(code, DEFAULT_BUDGET)?.check(u)
}
