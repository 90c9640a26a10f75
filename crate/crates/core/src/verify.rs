//! Deterministic verification suites. Each suite cross-checks a family of
//! identities or equivalences by brute force and stops at the first
//! counterexample, which it reports as a replayable code file.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::code::{power_count, LinearCode};
use crate::codefile::CodeFile;
use crate::constructions::{
    cyclic_extension_facts, egrs, egrs_dual_code, egrs_dual_monomial, egrs_dual_pole, grs,
    grs_dual_weights, grs_extension_vector, is_nk_delta_set, prs, roth_lempel,
    roth_lempel_extension_vector, subset_sums, t_set,
};
use crate::covering::{covering_radius_with, CoveringOptions, EquivalenceChecker};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::matrix::grs_generator;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    /// Extension by `u` is MDS iff the dual has radius `k` and `u` is a
    /// deep hole of it, for every `u`, over small GRS and EGRS codes.
    ExtensionEquivalence,
    /// The GRS extension vector yields the EGRS code and is a deep hole of
    /// the GRS dual.
    GrsExtension,
    /// The Roth-Lempel extension vector yields the Roth-Lempel code.
    RothLempelExtension,
    /// Subset-sum and subset-product verdicts for EGRS-dual candidates
    /// agree with brute force whenever the dual has radius `k`.
    EgrsDualDeepHoles,
    /// Radii of the EGRS duals over GF(4) and GF(8).
    WorkedExamples,
    /// Covering radii of projective RS codes.
    PrsRadius,
    /// Parameters and extension facts of the cyclic codes `C_u`.
    CyclicFamily,
    /// Subset DP against explicit enumeration.
    SetDp,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::ExtensionEquivalence,
        Suite::GrsExtension,
        Suite::RothLempelExtension,
        Suite::EgrsDualDeepHoles,
        Suite::WorkedExamples,
        Suite::PrsRadius,
        Suite::CyclicFamily,
        Suite::SetDp,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Suite::ExtensionEquivalence => "extension-equivalence",
            Suite::GrsExtension => "grs-extension",
            Suite::RothLempelExtension => "roth-lempel-extension",
            Suite::EgrsDualDeepHoles => "egrs-dual-deep-holes",
            Suite::WorkedExamples => "worked-examples",
            Suite::PrsRadius => "prs-radius",
            Suite::CyclicFamily => "cyclic-family",
            Suite::SetDp => "set-dp",
        }
    }

    /// Default upper bound on the field size.
    fn default_max_q(self) -> u32 {
        match self {
            Suite::ExtensionEquivalence => 4,
            Suite::GrsExtension => 9,
            Suite::RothLempelExtension => 8,
            Suite::EgrsDualDeepHoles => 5,
            Suite::WorkedExamples => 8,
            Suite::PrsRadius => 8,
            Suite::CyclicFamily => 8,
            Suite::SetDp => 16,
        }
    }

    /// Default cap on syndrome-table sizes.
    fn default_budget(self) -> u64 {
        match self {
            Suite::GrsExtension => 1 << 16,
            _ => crate::DEFAULT_BUDGET,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Suite> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.id() == s)
            .ok_or_else(|| Error::UnknownSuite(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct SuiteParams {
    pub max_q: Option<u32>,
    pub budget: Option<u64>,
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub description: String,
    pub file: CodeFile,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub passed: bool,
    pub checks: u64,
    /// Cases not checked because a precondition failed or a budget was
    /// exceeded.
    pub skipped: u64,
    pub notes: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
}

enum Halt {
    Failed,
    Error(Error),
}

impl From<Error> for Halt {
    fn from(e: Error) -> Halt {
        Halt::Error(e)
    }
}

type Step = std::result::Result<(), Halt>;

struct Run {
    max_q: u32,
    budget: u64,
    rng: ChaCha8Rng,
    checks: u64,
    skipped: u64,
    notes: Vec<String>,
    failure: Option<Counterexample>,
}

impl Run {
    fn check(&mut self, ok: bool, fail: impl FnOnce() -> (String, CodeFile)) -> Step {
        self.checks += 1;
        if ok {
            return Ok(());
        }
        let (description, file) = fail();
        self.failure = Some(Counterexample { description, file });
        Err(Halt::Failed)
    }

    fn fields(&self, orders: &[u32]) -> Result<Vec<Field>> {
        orders
            .iter()
            .filter(|&&q| q <= self.max_q)
            .map(|&q| field_of_order(q))
            .collect()
    }

    fn fits(&self, q: u32, e: usize) -> bool {
        power_count(q, e) <= self.budget as u128
    }
}

fn field_of_order(q: u32) -> Result<Field> {
    let p = (2..=q)
        .find(|d| q % d == 0)
        .ok_or(Error::NonPrimeCharacteristic(q))?;
    let mut m = 0;
    let mut r = q;
    while r % p == 0 {
        r /= p;
        m += 1;
    }
    if r != 1 {
        return Err(Error::NonPrimeCharacteristic(q));
    }
    Field::new(p, m)
}

fn prime_powers_up_to(bound: u32) -> Vec<u32> {
    (2..=bound).filter(|&q| field_of_order(q).is_ok()).collect()
}

/// Every vector of `GF(q)^n` in lexicographic order, last position fastest.
fn all_vectors(q: u32, n: usize) -> impl Iterator<Item = Vec<u32>> {
    (0..n).map(|_| 0..q).multi_cartesian_product()
}

fn failure(code: &LinearCode, u: &[u32], description: String) -> (String, CodeFile) {
    (description, CodeFile::from_code(code).with_u(u.to_vec()))
}

/// Runs a suite with the given parameters.
pub fn run_suite(suite: Suite, params: &SuiteParams) -> Result<SuiteReport> {
    let mut run = Run {
        max_q: params.max_q.unwrap_or(suite.default_max_q()),
        budget: params.budget.unwrap_or(suite.default_budget()),
        rng: ChaCha8Rng::seed_from_u64(params.seed),
        checks: 0,
        skipped: 0,
        notes: Vec::new(),
        failure: None,
    };
    let outcome = match suite {
        Suite::ExtensionEquivalence => extension_equivalence(&mut run),
        Suite::GrsExtension => grs_extension(&mut run),
        Suite::RothLempelExtension => roth_lempel_extension(&mut run),
        Suite::EgrsDualDeepHoles => egrs_dual_deep_holes(&mut run),
        Suite::WorkedExamples => worked_examples(&mut run),
        Suite::PrsRadius => prs_radius(&mut run),
        Suite::CyclicFamily => cyclic_family(&mut run),
        Suite::SetDp => set_dp(&mut run),
    };
    match outcome {
        Ok(()) | Err(Halt::Failed) => Ok(SuiteReport {
            suite: suite.id().to_string(),
            passed: run.failure.is_none(),
            checks: run.checks,
            skipped: run.skipped,
            notes: run.notes,
            counterexample: run.failure,
        }),
        Err(Halt::Error(e)) => Err(e),
    }
}

/// `(1, g, g^2, ...)` for the primitive element `g`.
fn geometric_multipliers(field: &Field, n: usize) -> Vec<u32> {
    let g = field.primitive();
    (0..n).map(|i| field.pow(g, i as u64)).collect()
}

fn check_equivalence_for_all_u(run: &mut Run, code: &LinearCode) -> Step {
    let checker = EquivalenceChecker::new(code, run.budget)?;
    for u in all_vectors(code.field().order(), code.n()) {
        let rec = checker.check(&u)?;
        run.check(rec.holds(), || {
            failure(
                code,
                &u,
                format!(
                    "extended MDS = {}, dual radius = k: {}, deep hole of dual: {}",
                    rec.extended_mds, rec.rho_dual_is_k, rec.u_deep_hole_dual
                ),
            )
        })?;
    }
    Ok(())
}

fn extension_equivalence(run: &mut Run) -> Step {
    for f in run.fields(&[2, 3, 4, 5])? {
        let q = f.order() as usize;
        let mut codes = 0;
        for n in 2..=q.min(5) {
            for a in f.elements().combinations(n) {
                for v in [vec![1; n], geometric_multipliers(&f, n)].iter().dedup() {
                    for k in 1..n {
                        check_equivalence_for_all_u(run, &grs(&f, &a, v, k)?)?;
                        codes += 1;
                    }
                    if n < 5 {
                        for k in 1..=n {
                            check_equivalence_for_all_u(run, &egrs(&f, &a, v, k)?)?;
                            codes += 1;
                        }
                    }
                }
            }
        }
        run.notes
            .push(format!("GF({q}): {codes} codes, every u checked"));
    }
    Ok(())
}

/// Up to `count` node sets of size at least `min_n`, drawn from the RNG.
fn sample_node_sets(run: &mut Run, f: &Field, min_n: usize, count: usize) -> Vec<Vec<u32>> {
    let q = f.order() as usize;
    (0..count)
        .map(|_| {
            let n = run.rng.random_range(min_n..=q);
            let mut a: Vec<u32> = sample(&mut run.rng, q, n)
                .into_iter()
                .map(|x| x as u32)
                .collect();
            a.sort_unstable();
            a
        })
        .collect()
}

fn grs_extension(run: &mut Run) -> Step {
    let orders = prime_powers_up_to(run.max_q);
    for f in run.fields(&orders)? {
        let q = f.order();
        for a in sample_node_sets(run, &f, 2, 20) {
            let n = a.len();
            let v: Vec<u32> = (0..n).map(|_| run.rng.random_range(1..q)).collect();
            for k in 1..n {
                let u = grs_extension_vector(&f, &a, &v, k)?;
                let gk = grs_generator(&f, &a, &v, k)?;
                let mut e = vec![0; k];
                e[k - 1] = 1;
                let code = grs(&f, &a, &v, k)?;
                run.check(gk.mul_vec(&u)? == e, || {
                    failure(&code, &u, "G_k u^T is not (0, ..., 0, 1)".into())
                })?;
                let same = code.extend_u(&u)?.same_code(&egrs(&f, &a, &v, k)?)?;
                run.check(same, || {
                    failure(&code, &u, "extension differs from the EGRS code".into())
                })?;
                if !run.fits(q, k) {
                    run.skipped += 1;
                    continue;
                }
                let dual = code.dual();
                let report = covering_radius_with(
                    &dual,
                    CoveringOptions {
                        budget: run.budget,
                        representatives: false,
                    },
                )?;
                let deep = report.is_deep_hole(&u)?;
                run.check(report.rho() == k && deep, || {
                    failure(
                        &dual,
                        &u,
                        format!(
                            "dual radius {} (expected {k}), deep hole: {deep}",
                            report.rho()
                        ),
                    )
                })?;
            }
        }
    }
    Ok(())
}

fn roth_lempel_extension(run: &mut Run) -> Step {
    for f in run.fields(&[4, 5, 7, 8])? {
        let mut sets = vec![f.elements().collect::<Vec<_>>()];
        sets.extend(sample_node_sets(run, &f, 4, 4));
        for a in sets {
            let n = a.len();
            let w = grs_dual_weights(&f, &a, &vec![1; n])?;
            let lhs = f.sum(
                a.iter()
                    .zip(&w)
                    .map(|(&x, &wi)| f.mul(wi, f.pow(x, n as u64))),
            );
            let rhs = f.sum(a.iter().copied());
            let base = egrs(&f, &a, &vec![1; n], 3)?;
            run.check(lhs == rhs, || {
                failure(&base, &a, "sum w_i a_i^n differs from sum a_i".into())
            })?;
            for k in 3..n {
                let e = egrs(&f, &a, &vec![1; n], k)?;
                for delta in f.elements() {
                    let u = roth_lempel_extension_vector(&f, &a, k, delta)?;
                    let rl = roth_lempel(&f, &a, k, delta)?;
                    run.check(e.extend_u(&u)?.same_code(&rl)?, || {
                        failure(
                            &e,
                            &u,
                            format!("extension differs from RL(k = {k}, delta = {delta})"),
                        )
                    })?;
                    let mds = rl.is_mds_by_minors();
                    let set = is_nk_delta_set(&f, &a, k - 1, delta)?;
                    run.check(mds == set, || {
                        failure(
                            &rl,
                            &u,
                            format!("RL MDS = {mds} but ({n}, {}, {delta})-set = {set}", k - 1),
                        )
                    })?;
                }
            }
        }
    }
    Ok(())
}

fn egrs_dual_deep_holes(run: &mut Run) -> Step {
    for f in run.fields(&[3, 4, 5, 7])? {
        let q = f.order() as usize;
        for n in 3..=q.min(6) {
            let a: Vec<u32> = (0..n as u32).collect();
            for k in 1..n {
                let d = egrs_dual_code(&f, &a, k)?;
                if !run.fits(f.order(), d.redundancy()) {
                    run.skipped += 1;
                    continue;
                }
                let report = covering_radius_with(
                    &d,
                    CoveringOptions {
                        budget: run.budget,
                        representatives: false,
                    },
                )?;
                if report.rho() != k {
                    run.skipped += 1;
                    run.notes.push(format!(
                        "GF({q}) n = {n} k = {k}: dual radius {} != k, not checked",
                        report.rho()
                    ));
                    continue;
                }
                for delta in f.elements() {
                    let mut candidates = vec![egrs_dual_monomial(&f, &a, k, delta)?];
                    for pi in f.elements().filter(|x| !a.contains(x)) {
                        candidates.push(egrs_dual_pole(&f, &a, k, delta, pi)?);
                    }
                    for c in candidates {
                        let deep = report.is_deep_hole(&c.vector)?;
                        run.check(deep == c.valid, || {
                            failure(
                                &d,
                                &c.vector,
                                format!(
                                    "{:?} candidate (delta = {delta}, pi = {:?}): set verdict {}, deep hole {deep}",
                                    c.kind, c.pi, c.valid
                                ),
                            )
                        })?;
                    }
                }
            }
        }
    }
    Ok(())
}

fn worked_examples(run: &mut Run) -> Step {
    for (q, k, params) in [
        (4u32, 3usize, [5, 2, 4]),
        (8, 3, [9, 6, 4]),
        (8, 4, [9, 5, 5]),
    ] {
        if q > run.max_q {
            run.skipped += 1;
            continue;
        }
        let f = field_of_order(q)?;
        let a: Vec<u32> = f.elements().collect();
        let d = egrs(&f, &a, &vec![1; a.len()], k)?.dual();
        let got = [d.n(), d.k(), d.min_distance()?];
        let report = covering_radius_with(
            &d,
            CoveringOptions {
                budget: run.budget,
                representatives: false,
            },
        )?;
        run.notes.push(format!(
            "GF({q}) k = {k}: EGRS dual is [{}, {}, {}], radius {}",
            got[0],
            got[1],
            got[2],
            report.rho()
        ));
        run.check(got == params && report.rho() == 3, || {
            failure(&d, &[], format!("expected {params:?} with radius 3"))
        })?;
        let no_delta = f
            .elements()
            .map(|delta| is_nk_delta_set(&f, &a, k - 1, delta))
            .collect::<Result<Vec<_>>>()?;
        // an (n, k-1, delta)-set exists exactly when the radius reaches k
        let exists = no_delta.iter().any(|&b| b);
        run.check(exists == (k == 3), || {
            failure(
                &d,
                &[],
                format!("(n, {}, delta)-set existence = {exists}", k - 1),
            )
        })?;
    }
    Ok(())
}

/// Expected covering radius of `PRS(k)` for `2 <= k <= q - 2`.
fn expected_prs_radius(q: usize, k: usize) -> usize {
    if q % 2 == 0 && (k == 2 || k == q - 2) {
        q - k + 1
    } else {
        q - k
    }
}

fn prs_radius(run: &mut Run) -> Step {
    for f in run.fields(&[4, 5, 7, 8])? {
        let q = f.order() as usize;
        for k in 2..=q - 2 {
            let code = prs(&f, k)?;
            if !run.fits(f.order(), code.redundancy()) {
                run.skipped += 1;
                continue;
            }
            let rho = covering_radius_with(
                &code,
                CoveringOptions {
                    budget: run.budget,
                    representatives: false,
                },
            )?
            .rho();
            let expected = expected_prs_radius(q, k);
            run.notes.push(format!("GF({q}): rho(PRS({k})) = {rho}"));
            run.check(rho == expected, || {
                failure(&code, &[], format!("radius {rho}, expected {expected}"))
            })?;
        }
    }
    Ok(())
}

fn cyclic_family(run: &mut Run) -> Step {
    for m in 2u32.. {
        let q = 1u32 << m;
        if q > run.max_q {
            break;
        }
        for u in 1..=q / 2 {
            let facts = cyclic_extension_facts(m, u, run.budget)?;
            let code = crate::constructions::cyclic_code(m, u)?;
            let (qq, uu) = (q as usize, u as usize);
            let expected = [qq + 1, 2 * uu - 1, qq - 2 * uu + 3];
            run.check(facts.params == expected && facts.mds, || {
                failure(
                    &code,
                    &[],
                    format!("parameters {:?}, expected {expected:?}", facts.params),
                )
            })?;
            let ones = vec![1; qq + 1];
            if u == 2 {
                let mut weights = vec![0u64; qq + 3];
                weights[0] = 1;
                weights[qq] = ((qq + 2) * (qq * qq - 1) / 2) as u64;
                weights[qq + 2] = (qq * (qq - 1) * (qq - 1) / 2) as u64;
                let ok = facts.extended_params == [qq + 2, 3, qq]
                    && facts.extended_weights.as_ref() == Some(&weights)
                    && facts.dual_rho == 3
                    && facts.ones_deep_hole_of_dual;
                run.notes.push(format!(
                    "q = {q}, u = 2: extension {:?}, weights {:?}, dual radius {}",
                    facts.extended_params, facts.extended_weights, facts.dual_rho
                ));
                run.check(ok, || failure(&code, &ones, format!("{facts:?}")))?;
            }
            if u == q / 2 {
                let ok = facts.extended_params == [qq + 2, qq - 1, 4]
                    && facts.extended_mds
                    && facts.dual_rho == qq - 1
                    && facts.ones_deep_hole_of_dual;
                run.notes.push(format!(
                    "q = {q}, u = {u}: extension {:?}, dual radius {}",
                    facts.extended_params, facts.dual_rho
                ));
                run.check(ok, || failure(&code, &ones, format!("{facts:?}")))?;
            }
        }
    }
    Ok(())
}

fn brute_subset_sums(f: &Field, s: &[u32], m: usize) -> Vec<u32> {
    s.iter()
        .combinations(m)
        .map(|c| f.sum(c.into_iter().copied()))
        .sorted()
        .dedup()
        .collect()
}

fn brute_t_set(f: &Field, a: &[u32], pi: u32, m: usize) -> Vec<u32> {
    a.iter()
        .combinations(m)
        .map(|c| f.inv(f.product(c.into_iter().map(|&x| f.sub(pi, x)))))
        .sorted()
        .dedup()
        .collect()
}

fn set_dp(run: &mut Run) -> Step {
    let empty = |f: &Field, s: &[u32], what: String| {
        let code = LinearCode::full_space(f, s.len().max(1));
        (what, CodeFile::from_code(&code).with_u(s.to_vec()))
    };
    for f in run.fields(&[4, 5, 7, 8, 9, 11, 13, 16])? {
        let q = f.order() as usize;
        for _ in 0..30 {
            let size = run.rng.random_range(0..=q.min(12));
            let s: Vec<u32> = sample(&mut run.rng, q, size)
                .into_iter()
                .map(|x| x as u32)
                .collect();
            let m = run.rng.random_range(0..=size);
            let dp = subset_sums(&f, &s, m)?;
            run.check(dp == brute_subset_sums(&f, &s, m), || {
                empty(&f, &s, format!("subset sums of size {m} disagree"))
            })?;
            let delta = run.rng.random_range(0..q as u32);
            run.check(
                is_nk_delta_set(&f, &s, m, delta)? == !dp.contains(&delta),
                || empty(&f, &s, format!("set check for delta = {delta} disagrees")),
            )?;
            if let Some(pi) = f.elements().find(|x| !s.contains(x)) {
                run.check(t_set(&f, &s, pi, m)? == brute_t_set(&f, &s, pi, m), || {
                    empty(
                        &f,
                        &s,
                        format!("product set for pi = {pi}, m = {m} disagrees"),
                    )
                })?;
            }
        }
    }
    // every delta is a sum of k distinct elements of GF(q) when
    // floor((q-1)/2) <= k < q-2
    for f in run.fields(&[5, 7, 8, 9, 11])? {
        let q = f.order() as usize;
        let all: Vec<u32> = f.elements().collect();
        for k in (q - 1) / 2..q - 2 {
            let dp = subset_sums(&f, &all, k)?;
            run.check(dp == all, || {
                empty(
                    &f,
                    &all,
                    format!("sums of {k} elements miss part of GF({q})"),
                )
            })?;
            if q <= 8 {
                run.check(brute_subset_sums(&f, &all, k) == all, || {
                    empty(
                        &f,
                        &all,
                        format!("enumerated sums of {k} elements miss part of GF({q})"),
                    )
                })?;
            }
        }
    }
    Ok(())
}
