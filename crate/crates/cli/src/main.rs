use std::fmt::Write as _;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand};
use pmtutte::basis::{activity_tight, enumerate_bases_limited};
use pmtutte::polyalg::{parse_rational, Rational};
use pmtutte::polycore::{
    parse_instance, validate_rank_function, Instance, MatroidOracle, Polymatroid, RankFunction,
    RankSpec, ValidationReport,
};
use pmtutte::tutte::{
    exterior_from_jp, interior_from_jp, jp_polynomial_with, matroid_tutte,
    reduction_identity_check, BasisTerm, JpOptions,
};
use pmtutte::verify::{
    explore_t, random_polymatroid, run_suite, GeneratorKind, InstanceSpec, Suite, VerifyOptions,
};
use pmtutte::{BivariatePolynomial, CheckReport, Error, UnivariateRationalPolynomial};
use serde_json::{json, Value};

const BUDGET_VAR: &str = "PMTUTTE_BUDGET";

#[derive(Parser)]
#[command(name = "pmtutte", version, about = "Tutte-type invariants of integer polymatroids")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the polymatroid axioms on an instance's rank table.
    Validate { instance: PathBuf },
    /// List the lattice points of the base polytope in lexicographic order.
    Bases {
        instance: PathBuf,
        /// Print internal and external activities per basis.
        #[arg(long)]
        activities: bool,
    },
    /// The bivariate polynomial J_P as sorted `[i, j, coeff]` triples.
    Jp {
        instance: PathBuf,
        /// Print the quotient J_P / (x + y - 1) instead.
        #[arg(long)]
        factor: bool,
        /// Emit one JSON line per basis before the polynomial.
        #[arg(long)]
        log: bool,
        /// Print the polynomial as an expression.
        #[arg(long)]
        human: bool,
    },
    /// The interior polynomial.
    Interior {
        instance: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// The exterior polynomial.
    Exterior {
        instance: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// The quotient J_P / (x + y - 1).
    Cf {
        instance: PathBuf,
        #[arg(long)]
        human: bool,
    },
    /// One-variable slice J_P(x, t) or J_P(t, y).
    #[command(group(ArgGroup::new("axis").required(true).args(["x", "y"])))]
    Specialize {
        instance: PathBuf,
        /// Value substituted for x.
        #[arg(long, allow_hyphen_values = true)]
        x: Option<String>,
        /// Value substituted for y.
        #[arg(long, allow_hyphen_values = true)]
        y: Option<String>,
    },
    /// Run a suite of structural checks and print one report per line.
    Verify {
        instance: PathBuf,
        #[arg(long, default_value = "all")]
        suite: String,
        /// Include per-check timings (output is then not reproducible).
        #[arg(long)]
        timing: bool,
    },
    /// Scan a rational grid of slices for non-interpolating supports.
    Explore {
        instance: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        t_min: String,
        #[arg(long, allow_hyphen_values = true)]
        t_max: String,
        #[arg(long)]
        step: String,
    },
    /// Generate seeded random instances, optionally verifying each.
    Random {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 4)]
        n: usize,
        #[arg(long, default_value = "mixed")]
        kind: String,
        #[arg(long, default_value_t = 1)]
        count: usize,
        #[arg(long, default_value_t = 5)]
        max_rank: usize,
        /// Run this suite on each instance instead of printing it.
        #[arg(long)]
        suite: Option<String>,
    },
    /// Check the reduction of J_P to the Tutte polynomial on a matroid instance.
    TutteCheck { instance: PathBuf },
}

enum Failure {
    Input(String),
    Budget(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::BudgetExceeded { .. } => Failure::Budget(e.to_string()),
            e => Failure::Input(e.to_string()),
        }
    }
}

type Outcome = Result<bool, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = String::new();
    let result = run(cli.command, &mut out);
    let mut stdout = io::stdout().lock();
    let _ = stdout.write_all(out.as_bytes());
    let _ = stdout.flush();
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Budget(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}

fn run(command: Command, out: &mut String) -> Outcome {
    let budget = budget_from_env()?;
    match command {
        Command::Validate { instance } => validate(&instance, out),
        Command::Bases {
            instance,
            activities,
        } => {
            let p = load(&instance)?;
            for a in enumerate_bases_limited(&p, budget)? {
                if activities {
                    let profile = activity_tight(&p, &a)?;
                    let term = BasisTerm { basis: a, profile };
                    line(out, &term.to_json());
                } else {
                    line(out, &json!(a));
                }
            }
            Ok(true)
        }
        Command::Jp {
            instance,
            factor,
            log,
            human,
        } => {
            let p = load(&instance)?;
            let options = JpOptions {
                budget,
                log_terms: log,
            };
            let result = jp_polynomial_with(&p, &options)?;
            for term in &result.terms {
                line(out, &term.to_json());
            }
            let poly = if factor {
                result.polynomial.divide_exact_xy1()?
            } else {
                result.polynomial
            };
            match (human, factor) {
                (true, true) => writeln!(out, "(x + y - 1)*({poly})").unwrap(),
                (true, false) => writeln!(out, "{poly}").unwrap(),
                (false, _) => line(out, &triples(&poly)),
            }
            Ok(true)
        }
        Command::Interior { instance, json } => {
            let p = load(&instance)?;
            let j = jp(&p, budget)?;
            univariate(out, &interior_from_jp(&j, p.n())?, json);
            Ok(true)
        }
        Command::Exterior { instance, json } => {
            let p = load(&instance)?;
            let j = jp(&p, budget)?;
            univariate(out, &exterior_from_jp(&j, p.n())?, json);
            Ok(true)
        }
        Command::Cf { instance, human } => {
            let p = load(&instance)?;
            let q = jp(&p, budget)?.divide_exact_xy1()?;
            if human {
                writeln!(out, "{q}").unwrap();
            } else {
                line(out, &triples(&q));
            }
            Ok(true)
        }
        Command::Specialize { instance, x, y } => {
            let p = load(&instance)?;
            let j = jp(&p, budget)?;
            let slice = match (x, y) {
                (Some(t), None) => j.specialize_x(&rational_arg(&t)?),
                (None, Some(t)) => j.specialize_y(&rational_arg(&t)?),
                _ => return Err(Failure::Input("give exactly one of --x and --y".into())),
            };
            writeln!(out, "{slice}").unwrap();
            Ok(true)
        }
        Command::Verify {
            instance,
            suite,
            timing,
        } => {
            let p = load(&instance)?;
            let suite: Suite = suite.parse()?;
            let options = VerifyOptions {
                budget,
                ..VerifyOptions::default()
            };
            let id = instance_id(&instance);
            let reports = run_suite(&p, &id, suite, &options)?;
            Ok(emit_reports(out, &reports, timing))
        }
        Command::Explore {
            instance,
            t_min,
            t_max,
            step,
        } => {
            let p = load(&instance)?;
            let failures = explore_t(
                &p,
                &rational_arg(&t_min)?,
                &rational_arg(&t_max)?,
                &rational_arg(&step)?,
            )?;
            for f in &failures {
                line(out, &f.to_json());
            }
            Ok(true)
        }
        Command::Random {
            seed,
            n,
            kind,
            count,
            max_rank,
            suite,
        } => {
            let kind: GeneratorKind = kind.parse()?;
            let suite = suite.map(|s| s.parse::<Suite>()).transpose()?;
            let options = VerifyOptions {
                budget,
                ..VerifyOptions::default()
            };
            let mut reports = Vec::new();
            for k in 0..count as u64 {
                let spec = InstanceSpec {
                    seed: seed.wrapping_add(k),
                    n,
                    max_rank,
                    kind,
                    uniform_rank: None,
                };
                let p = random_polymatroid(&spec)?;
                let id = format!("{kind}-seed{}-n{n}", spec.seed);
                match suite {
                    Some(s) => reports.extend(run_suite(&p, &id, s, &options)?),
                    None => {
                        let doc = Instance::from_polymatroid(&p);
                        line(out, &serde_json::to_value(&doc).expect("instances serialize"));
                    }
                }
            }
            Ok(suite.is_none() || emit_reports(out, &reports, false))
        }
        Command::TutteCheck { instance } => {
            let p = load(&instance)?;
            let m = MatroidOracle::from_polymatroid(&p)?;
            let report = reduction_identity_check(&m, &instance_id(&instance))?;
            writeln!(out, "T = {}", matroid_tutte(&m)).unwrap();
            Ok(emit_reports(out, &[report], false))
        }
    }
}

fn budget_from_env() -> Result<Option<usize>, Failure> {
    match std::env::var(BUDGET_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .map(Some)
            .map_err(|_| Failure::Input(format!("{BUDGET_VAR} must be a non-negative integer, got `{v}`"))),
        Err(_) => Ok(None),
    }
}

fn read(path: &Path) -> Result<Instance, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    parse_instance(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn load(path: &Path) -> Result<Polymatroid, Failure> {
    read(path)?
        .build()
        .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn instance_id(path: &Path) -> String {
    path.file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string())
}

fn rational_arg(text: &str) -> Result<Rational, Failure> {
    Ok(parse_rational(text)?)
}

fn jp(p: &Polymatroid, budget: Option<usize>) -> Result<BivariatePolynomial, Failure> {
    let options = JpOptions {
        budget,
        log_terms: false,
    };
    Ok(jp_polynomial_with(p, &options)?.polynomial)
}

/// Explicit tables are checked without building a `Polymatroid`, so
/// invalid tables get a report instead of an input error.
fn validate(path: &Path, out: &mut String) -> Outcome {
    let doc = read(path)?;
    let rank = match &doc.rank {
        RankSpec::Explicit { values } => {
            let n = values.len().trailing_zeros() as usize;
            if values.len() != 1 << n || n != doc.n {
                return Err(Failure::Input(format!(
                    "{}: explicit table has {} entries, expected 2^{}",
                    path.display(),
                    values.len(),
                    doc.n
                )));
            }
            RankFunction::new(n, values.clone())?
        }
        _ => doc
            .build()
            .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?
            .rank()
            .clone(),
    };
    let report = validate_rank_function(&rank);
    line(out, &validation_json(&rank, &report));
    Ok(report.is_polymatroid())
}

fn validation_json(rank: &RankFunction, report: &ValidationReport) -> Value {
    let witnesses: Vec<Value> = report
        .witnesses
        .iter()
        .map(|v| {
            json!({
                "axiom": v.axiom,
                "first": v.first.elements_one_based(),
                "second": v.second.elements_one_based(),
            })
        })
        .collect();
    json!({
        "n": rank.n(),
        "polymatroid": report.is_polymatroid(),
        "zero_at_empty": report.zero_at_empty,
        "submodular": report.submodular,
        "monotone": report.monotone,
        "witnesses": witnesses,
    })
}

/// JSON lines followed by a summary table; returns whether every check passed.
fn emit_reports(out: &mut String, reports: &[CheckReport], timing: bool) -> bool {
    for r in reports {
        line(out, &r.to_json(timing));
    }
    let failed = reports.iter().filter(|r| !r.passed).count();
    let width = reports.iter().map(|r| r.name.len()).max().unwrap_or(0);
    let id_width = reports.iter().map(|r| r.instance_id.len()).max().unwrap_or(0);
    for r in reports {
        let status = if r.passed { "PASS" } else { "FAIL" };
        writeln!(out, "# {status}  {:<width$}  {:<id_width$}", r.name, r.instance_id).unwrap();
    }
    writeln!(out, "# {} checks, {} failed", reports.len(), failed).unwrap();
    failed == 0
}

fn univariate(out: &mut String, p: &UnivariateRationalPolynomial, as_json: bool) {
    if as_json {
        line(out, &json!(p.to_pairs()));
    } else {
        writeln!(out, "{p}").unwrap();
    }
}

/// Coefficients that fit in `i64` are JSON numbers, larger ones strings.
fn triples(p: &BivariatePolynomial) -> Value {
    let rows: Vec<Value> = p
        .to_triples()
        .into_iter()
        .map(|(i, j, c)| match i64::try_from(&c) {
            Ok(small) => json!([i, j, small]),
            Err(_) => json!([i, j, c.to_string()]),
        })
        .collect();
    Value::Array(rows)
}

fn line(out: &mut String, v: &Value) {
    writeln!(out, "{v}").unwrap();
}
