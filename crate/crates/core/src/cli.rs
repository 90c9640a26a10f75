//! The `extcode` command line. Reports go to stdout as JSON, a one-line
//! human summary goes to stderr.
//!
//! Exit codes: 0 success, 1 failed verification, 2 usage or input error,
//! 3 budget exceeded.

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use crate::code::{LinearCode, DEFAULT_BUDGET};
use crate::codefile::{CodeFile, CodeSource};
use crate::constructions::{
    egrs_dual_code, egrs_dual_monomial, egrs_dual_pole, is_nk_delta_set, rs_deep_hole_family,
    subset_sums,
};
use crate::covering::{
    covering_radius_with, deep_hole_via_mds_with, syndrome_criterion, CoveringOptions,
    EquivalenceChecker,
};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::verify::{run_suite, Suite, SuiteParams};

pub const EXIT_FAILED: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_BUDGET: u8 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "extcode",
    version,
    about = "Linear codes over finite fields: extensions, covering radii and deep holes"
)]
pub struct Cli {
    /// Field GF(p^m) for code files and sets that do not name one.
    #[arg(long, num_args = 2, value_names = ["P", "M"], global = true)]
    field: Option<Vec<u32>>,
    /// Cap on enumeration sizes (codewords, syndromes, column subsets).
    #[arg(long, global = true)]
    budget: Option<u64>,
    /// Compact single-line JSON.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build a code and print its parameters and canonical generator.
    Build {
        /// Code file (JSON), or - for stdin.
        file: PathBuf,
    },
    /// Covering radius of a code.
    Covering {
        /// Code file (JSON), or - for stdin.
        file: PathBuf,
        /// Also list one canonical representative per deep-hole coset.
        #[arg(long)]
        deep_holes: bool,
    },
    /// Deep-hole queries.
    ///
    /// With --u, test one vector. With --delta (and
    /// optionally --pi) on a Reed-Solomon file, test the extended
    /// candidates against the dual of the extended RS code. Otherwise list
    /// deep-hole coset representatives.
    DeepHoles {
        /// Code file (JSON), or - for stdin.
        file: PathBuf,
        /// Vector to test, comma separated.
        #[arg(long, value_delimiter = ',')]
        u: Option<Vec<u32>>,
        /// Last coordinate of the extended candidate.
        #[arg(long)]
        delta: Option<u32>,
        /// Pole of the extended candidate; omit for the monomial one.
        #[arg(long, requires = "delta")]
        pi: Option<u32>,
    },
    /// Extend a code by a vector or a generator column.
    ///
    /// --u appends <u, c> to each codeword c; --g appends a column to the
    /// generator. Without either flag, uses the file's "u" entry.
    Extend {
        /// Code file (JSON), or - for stdin.
        file: PathBuf,
        /// Extension vector of length n, comma separated.
        #[arg(long, value_delimiter = ',', conflicts_with = "g")]
        u: Option<Vec<u32>>,
        /// Extra generator column of length k, comma separated.
        #[arg(long, value_delimiter = ',')]
        g: Option<Vec<u32>>,
    },
    /// Run a verification suite.
    Verify {
        /// One of: extension-equivalence, grs-extension,
        /// roth-lempel-extension, egrs-dual-deep-holes, worked-examples,
        /// prs-radius, cyclic-family, set-dp, all.
        suite: String,
        /// Largest field size to include.
        #[arg(long)]
        max_q: Option<u32>,
        /// Seed for the sampled node sets.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// The dual code, as a re-readable code file.
    Dual {
        /// Code file (JSON), or - for stdin.
        file: PathBuf,
    },
    /// Minimum distance.
    Mindist {
        /// Code file (JSON), or - for stdin.
        file: PathBuf,
    },
    /// Weight distribution.
    Weights {
        /// Code file (JSON), or - for stdin.
        file: PathBuf,
    },
    /// Check whether no k elements of a set sum to delta.
    ///
    /// Without --delta, lists every delta for which that holds.
    SetCheck {
        /// Subset size.
        #[arg(long)]
        k: usize,
        /// Target sum.
        #[arg(long)]
        delta: Option<u32>,
        /// Set elements; defaults to the whole field.
        #[arg(long, value_delimiter = ',')]
        set: Option<Vec<u32>>,
    },
}

/// What a command produced: a JSON payload, a summary line and whether
/// verification passed.
struct Outcome {
    payload: Value,
    summary: String,
    passed: bool,
}

impl Outcome {
    fn ok(payload: impl Serialize, summary: String) -> Result<Outcome> {
        Ok(Outcome {
            payload: serde_json::to_value(payload).expect("reports serialize"),
            summary,
            passed: true,
        })
    }
}

pub fn exit_code(e: &Error) -> u8 {
    match e {
        Error::BudgetExceeded { .. } => EXIT_BUDGET,
        _ => EXIT_USAGE,
    }
}

/// Entry point for the binary.
pub fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    ExitCode::from(run(&cli))
}

/// Runs a parsed command line, printing to stdout and stderr, and returns
/// the exit code.
pub fn run(cli: &Cli) -> u8 {
    match execute(cli) {
        Ok(out) => {
            let text = if cli.json {
                serde_json::to_string(&out.payload)
            } else {
                serde_json::to_string_pretty(&out.payload)
            }
            .expect("values serialize");
            println!("{text}");
            eprintln!("{}", out.summary);
            if out.passed {
                0
            } else {
                EXIT_FAILED
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}

fn read_file(path: &PathBuf) -> Result<CodeFile> {
    let mut text = String::new();
    let read = if path.as_os_str() == "-" {
        std::io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|t| text = t)
    };
    read.map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    CodeFile::parse(&text)
}

fn params(code: &LinearCode, budget: u64) -> (Option<usize>, Option<bool>) {
    if code.k() == 0 {
        return (None, Some(true));
    }
    match code.min_distance_with_budget(budget) {
        Ok(d) => (Some(d), Some(d == code.n() - code.k() + 1)),
        Err(_) => (None, None),
    }
}

fn describe(code: &LinearCode, budget: u64) -> (Value, String) {
    let (d, mds) = params(code, budget);
    let mut v = serde_json::to_value(CodeFile::from_code(code)).expect("code files serialize");
    v["n"] = json!(code.n());
    v["k"] = json!(code.k());
    v["d"] = json!(d);
    v["is_mds"] = json!(mds);
    let d_text = d.map_or("?".to_string(), |d| d.to_string());
    let mds_text = mds.map_or("?".to_string(), |m| m.to_string());
    let summary = format!(
        "[{},{},{}] MDS={} over {}",
        code.n(),
        code.k(),
        d_text,
        mds_text,
        code.field()
    );
    (v, summary)
}

fn execute(cli: &Cli) -> Result<Outcome> {
    let field = match &cli.field {
        Some(pm) => Some(Field::new(pm[0], pm[1])?),
        None => None,
    };
    let budget = cli.budget.unwrap_or(DEFAULT_BUDGET);
    let load = |path: &PathBuf| -> Result<(CodeFile, LinearCode)> {
        let file = read_file(path)?;
        let code = file.build(field.as_ref())?;
        Ok((file, code))
    };
    match &cli.command {
        Command::Build { file } => {
            let (_, code) = load(file)?;
            let (v, summary) = describe(&code, budget);
            Outcome::ok(v, summary)
        }
        Command::Dual { file } => {
            let (_, code) = load(file)?;
            let (v, summary) = describe(&code.dual(), budget);
            Outcome::ok(v, format!("dual: {summary}"))
        }
        Command::Mindist { file } => {
            let (_, code) = load(file)?;
            let d = code.min_distance_with_budget(budget)?;
            Outcome::ok(
                json!({ "n": code.n(), "k": code.k(), "d": d }),
                format!("d = {d}"),
            )
        }
        Command::Weights { file } => {
            let (_, code) = load(file)?;
            let w = code.weight_enumerator(budget)?;
            let terms: Vec<String> = w
                .iter()
                .enumerate()
                .filter(|(_, &c)| c > 0)
                .map(|(i, c)| {
                    if i == 0 {
                        c.to_string()
                    } else {
                        format!("{c}z^{i}")
                    }
                })
                .collect();
            Outcome::ok(json!({ "weights": w }), terms.join(" + "))
        }
        Command::Covering { file, deep_holes } => {
            let (_, code) = load(file)?;
            let report = covering_radius_with(
                &code,
                CoveringOptions {
                    budget,
                    representatives: *deep_holes,
                },
            )?;
            let summary = format!(
                "rho = {}, {} deep-hole cosets",
                report.rho(),
                report.num_deep_hole_cosets()
            );
            Outcome::ok(report.summary(*deep_holes), summary)
        }
        Command::DeepHoles { file, u, delta, pi } => {
            let (spec, code) = load(file)?;
            deep_holes(&spec, &code, u.as_deref(), *delta, *pi, budget)
        }
        Command::Extend { file, u, g } => {
            let (spec, code) = load(file)?;
            extend(
                &spec,
                &code,
                u.clone(),
                g.as_deref(),
                field.as_ref(),
                budget,
            )
        }
        Command::Verify { suite, max_q, seed } => {
            let suites = if suite == "all" {
                Suite::ALL.to_vec()
            } else {
                vec![suite.parse::<Suite>()?]
            };
            let params = SuiteParams {
                max_q: *max_q,
                budget: cli.budget,
                seed: *seed,
            };
            let mut reports = Vec::new();
            for s in suites {
                reports.push(run_suite(s, &params)?);
            }
            let passed = reports.iter().all(|r| r.passed);
            let summary = reports
                .iter()
                .map(|r| {
                    format!(
                        "{} {}: {} checks, {} skipped",
                        if r.passed { "PASS" } else { "FAIL" },
                        r.suite,
                        r.checks,
                        r.skipped
                    )
                })
                .collect::<Vec<_>>()
                .join("\n");
            let payload = if reports.len() == 1 {
                serde_json::to_value(&reports[0])
            } else {
                serde_json::to_value(&reports)
            }
            .expect("reports serialize");
            Ok(Outcome {
                payload,
                summary,
                passed,
            })
        }
        Command::SetCheck { k, delta, set } => {
            let f =
                field.ok_or_else(|| Error::InvalidSpec("set-check needs --field P M".into()))?;
            let s: Vec<u32> = set.clone().unwrap_or_else(|| f.elements().collect());
            match delta {
                Some(d) => {
                    let ok = is_nk_delta_set(&f, &s, *k, *d)?;
                    Outcome::ok(
                        json!({ "n": s.len(), "k": k, "delta": d, "is_set": ok }),
                        format!("({}, {k}, {d})-set: {ok}", s.len()),
                    )
                }
                None => {
                    let sums = subset_sums(&f, &s, *k)?;
                    let deltas: Vec<u32> = f.elements().filter(|x| !sums.contains(x)).collect();
                    let summary = format!(
                        "({}, {k}, delta)-set for {} of {} values of delta",
                        s.len(),
                        deltas.len(),
                        f.order()
                    );
                    Outcome::ok(
                        json!({ "n": s.len(), "k": k, "sums": sums, "deltas": deltas }),
                        summary,
                    )
                }
            }
        }
    }
}

/// Nodes and dimension of a plain Reed-Solomon source.
fn rs_source(spec: &CodeFile) -> Option<(&[u32], usize)> {
    match &spec.source {
        CodeSource::Grs(g) if !g.extended && !spec.dual && g.v.iter().all(|&x| x == 1) => {
            Some((&g.a, g.k))
        }
        _ => None,
    }
}

fn deep_holes(
    spec: &CodeFile,
    code: &LinearCode,
    u: Option<&[u32]>,
    delta: Option<u32>,
    pi: Option<u32>,
    budget: u64,
) -> Result<Outcome> {
    let f = code.field();
    let opts = |reps| CoveringOptions {
        budget,
        representatives: reps,
    };
    if let Some(delta) = delta {
        let (a, k) = rs_source(spec).ok_or_else(|| {
            Error::InvalidSpec(
                "--delta needs a Reed-Solomon file (grs with unit multipliers)".into(),
            )
        })?;
        let target = egrs_dual_code(f, a, k)?;
        let report = covering_radius_with(&target, opts(false))?;
        let candidate = match pi {
            Some(pi) => egrs_dual_pole(f, a, k, delta, pi)?,
            None => egrs_dual_monomial(f, a, k, delta)?,
        };
        let deep = report.is_deep_hole(&candidate.vector)?;
        let summary = format!(
            "{:?} candidate: set verdict {}, deep hole {} (dual radius {}, k = {k})",
            candidate.kind,
            candidate.valid,
            deep,
            report.rho()
        );
        return Outcome::ok(
            json!({
                "candidate": candidate,
                "rho": report.rho(),
                "radius_equals_k": report.rho() == k,
                "is_deep_hole": deep,
            }),
            summary,
        );
    }
    if let Some(u) = u {
        let report = covering_radius_with(code, opts(false))?;
        let distance = report.distance(u)?;
        let syndrome = if report.rho() > 0 {
            Some(syndrome_criterion(code.parity(), u, report.rho())?)
        } else {
            None
        };
        let via_mds = if code.is_mds_with_budget(budget)? {
            match deep_hole_via_mds_with(code, &report, u) {
                Ok(b) => json!(b),
                Err(e) => json!(e.to_string()),
            }
        } else {
            json!(Error::NotMds.to_string())
        };
        let deep = distance == report.rho();
        return Outcome::ok(
            json!({
                "rho": report.rho(),
                "distance": distance,
                "is_deep_hole": deep,
                "syndrome_criterion": syndrome,
                "mds_criterion": via_mds,
            }),
            format!(
                "distance {distance}, rho {}, deep hole: {deep}",
                report.rho()
            ),
        );
    }
    let report = covering_radius_with(code, opts(true))?;
    let mut payload = serde_json::to_value(report.summary(true)).expect("reports serialize");
    if let Some((a, k)) = rs_source(spec) {
        if k >= 1 && k < a.len() {
            let family: Vec<Value> = rs_deep_hole_family(f, a, k)?
                .into_iter()
                .map(|c| {
                    let deep = report.is_deep_hole(&c.vector).unwrap_or(false);
                    json!({ "candidate": c, "is_deep_hole": deep })
                })
                .collect();
            payload["family"] = Value::Array(family);
        }
    }
    let summary = format!(
        "rho = {}, {} deep-hole cosets",
        report.rho(),
        report.num_deep_hole_cosets()
    );
    Outcome::ok(payload, summary)
}

fn extend(
    spec: &CodeFile,
    code: &LinearCode,
    u: Option<Vec<u32>>,
    g: Option<&[u32]>,
    field: Option<&Field>,
    budget: u64,
) -> Result<Outcome> {
    if let Some(col) = g {
        let ext = crate::code::extend_g(&spec.generator(field)?, col)?;
        let (v, summary) = describe(&ext, budget);
        return Outcome::ok(v, format!("extension by column: {summary}"));
    }
    let u = u
        .or_else(|| spec.u.clone())
        .ok_or_else(|| Error::InvalidSpec("extend needs --u, --g or a \"u\" entry".into()))?;
    let ext = code.extend_u(&u)?;
    let (mut v, summary) = describe(&ext, budget);
    if code.is_mds_with_budget(budget).unwrap_or(false) {
        if let Ok(checker) = EquivalenceChecker::new(code, budget) {
            let rec = checker.check(&u)?;
            v["equivalence"] = serde_json::to_value(rec).expect("records serialize");
            v["equivalence_holds"] = json!(rec.holds());
        }
    }
    Outcome::ok(v, format!("extension by u: {summary}"))
}
