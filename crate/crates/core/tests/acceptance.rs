//! Acceptance criteria, one line of output per criterion.
//!
//! Run with `cargo test -p pmtutte --test acceptance` (add `--release` for
//! realistic timings).

use std::process::ExitCode;
use std::time::{Duration, Instant};

use pmtutte::polyalg::{rational, BivariatePolynomial, Rational, Variable};
use pmtutte::polycore::{rank_from_uniform_matroid, Hypergraph};
use pmtutte::tutte::{jp_polynomial, matroid_tutte, reduction_identity_check};
use pmtutte::verify::corpus::{
    explicit_corpus, k4_hypergraph, matroid_corpus, path_hypergraph, random_corpus,
    worked_example, triangle_hypergraph, CorpusEntry,
};
use pmtutte::verify::{
    check_activity_lemmas, check_hypergraph_corollaries, check_interpolating,
    check_oracle_equivalence, explore_t, random_connected_hypergraph, run_suite, Suite,
    VerifyOptions,
};
use pmtutte::CheckReport;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const RANDOM_INSTANCES: usize = 200;
const RANDOM_SEED: u64 = 20_240_601;

struct Outcome {
    passed: bool,
    detail: String,
}

impl Outcome {
    fn from_reports(reports: &[CheckReport], extra: &str) -> Self {
        let failed: Vec<&CheckReport> = reports.iter().filter(|r| !r.passed).collect();
        let detail = match failed.first() {
            None => format!("{} checks, 0 failures{extra}", reports.len()),
            Some(r) => format!(
                "{} of {} checks failed; first: {} on {} witness {}",
                failed.len(),
                reports.len(),
                r.name,
                r.instance_id,
                r.witness.as_ref().map(|w| w.to_string()).unwrap_or_default()
            ),
        };
        Self {
            passed: failed.is_empty(),
            detail,
        }
    }

    fn error(e: impl std::fmt::Display) -> Self {
        Self {
            passed: false,
            detail: format!("error: {e}"),
        }
    }
}

fn corpus() -> Vec<CorpusEntry> {
    let mut c = explicit_corpus().expect("explicit corpus builds");
    c.extend(random_corpus(RANDOM_INSTANCES, RANDOM_SEED).expect("random corpus builds"));
    c
}

fn ac1() -> Outcome {
    let start = Instant::now();
    let p = worked_example();
    let j = match jp_polynomial(&p) {
        Ok(j) => j,
        Err(e) => return Outcome::error(e),
    };
    let xy1 = BivariatePolynomial::from_terms([(1, 0, 1), (0, 1, 1), (0, 0, -1)]);
    let rest = BivariatePolynomial::from_terms([(0, 2, 1), (0, 1, 1), (1, 1, 2), (2, 0, 1)]);
    let golden = j == &xy1 * &rest;
    let third = j.specialize_y(&rational(1, 3)).to_string();
    let zero = j.specialize_x(&rational(0, 1)).to_string();
    let failures = match explore_t(&p, &rational(-2, 1), &rational(5, 6), &rational(1, 6)) {
        Ok(f) => f,
        Err(e) => return Outcome::error(e),
    };
    let flags_third = failures
        .iter()
        .any(|f| f.fixed == Variable::Y && f.t == rational(1, 3) && f.support == [0, 3]);
    let flags_zero = failures
        .iter()
        .any(|f| f.fixed == Variable::X && f.t == rational(0, 1) && f.support == [1, 3]);
    let elapsed = start.elapsed();
    let passed = golden
        && third == "x^3 - 8/27"
        && zero == "y^3 - y"
        && flags_third
        && flags_zero
        && elapsed < Duration::from_secs(1);
    Outcome {
        passed,
        detail: format!(
            "J = {j}; J(x,1/3) = {third}; J(0,y) = {zero}; explorer flags both: {}; {:.1} ms",
            flags_third && flags_zero,
            elapsed.as_secs_f64() * 1e3
        ),
    }
}

fn ac2(corpus: &[CorpusEntry]) -> Outcome {
    let start = Instant::now();
    let mut reports = Vec::new();
    for e in corpus {
        match run_suite(&e.polymatroid, &e.id, Suite::Coeffs, &VerifyOptions::default()) {
            Ok(r) => reports.extend(r),
            Err(err) => return Outcome::error(err),
        }
    }
    let elapsed = start.elapsed();
    let mut out = Outcome::from_reports(
        &reports,
        &format!(" over {} instances; {:.2} s", corpus.len(), elapsed.as_secs_f64()),
    );
    if elapsed >= Duration::from_secs(300) {
        out.passed = false;
    }
    out
}

fn ac3(corpus: &[CorpusEntry]) -> Outcome {
    let ts: Vec<Rational> = [(1, 1), (7, 6), (4, 3), (3, 2), (2, 1), (3, 1)]
        .iter()
        .map(|&(p, q)| rational(p, q))
        .collect();
    let mut reports = Vec::new();
    for e in corpus {
        match check_interpolating(&e.polymatroid, &e.id, &ts, true) {
            Ok(r) => reports.push(r),
            Err(err) => return Outcome::error(err),
        }
    }
    Outcome::from_reports(&reports, " (both slices, 6 values of t)")
}

fn ac4(corpus: &[CorpusEntry]) -> Outcome {
    let mut reports = Vec::new();
    for (k, e) in corpus.iter().enumerate() {
        let options = VerifyOptions {
            invariance_seed: k as u64,
            invariance_trials: 5,
            ..VerifyOptions::default()
        };
        match run_suite(&e.polymatroid, &e.id, Suite::Duality, &options) {
            Ok(r) => reports.extend(r),
            Err(err) => return Outcome::error(err),
        }
    }
    Outcome::from_reports(&reports, "")
}

fn ac5(corpus: &[CorpusEntry]) -> Outcome {
    let mut reports = Vec::new();
    for e in corpus {
        match check_oracle_equivalence(&e.polymatroid, &e.id, None, 1_000_000) {
            Ok(r) => reports.push(r),
            Err(err) => return Outcome::error(err),
        }
    }
    let skipped = reports.iter().filter(|r| !r.notes.is_empty()).count();
    Outcome::from_reports(&reports, &format!("; box scan skipped on {skipped} (volume > 10^6)"))
}

fn ac6(corpus: &[CorpusEntry]) -> Outcome {
    let mut reports = Vec::new();
    for e in corpus {
        match check_activity_lemmas(&e.polymatroid, &e.id, 5000) {
            Ok(r) => reports.push(r),
            Err(err) => return Outcome::error(err),
        }
    }
    let skipped = reports.iter().filter(|r| !r.notes.is_empty()).count();
    Outcome::from_reports(&reports, &format!("; {skipped} instances above 5000 bases skipped"))
}

fn ac7() -> Outcome {
    let mut reports = Vec::new();
    for (id, m) in matroid_corpus(6) {
        match reduction_identity_check(&m, &id) {
            Ok(r) => reports.push(r),
            Err(err) => return Outcome::error(err),
        }
    }
    let u24 = matroid_tutte(&rank_from_uniform_matroid(4, 2).expect("valid"));
    let expected = BivariatePolynomial::from_terms([(2, 0, 1), (1, 0, 2), (0, 1, 2), (0, 2, 1)]);
    let mut out = Outcome::from_reports(&reports, &format!("; T(U(2,4)) = {u24}"));
    if u24 != expected {
        out.passed = false;
    }
    out
}

/// Random connected hypergraphs; `strong` additionally requires every
/// `H - e` to be connected.
fn random_hypergraphs(count: usize, strong: bool, seed: u64) -> Vec<Hypergraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    while out.len() < count {
        let n = rng.gen_range(2..=6);
        let vertices = rng.gen_range(2..=5);
        let h = random_connected_hypergraph(&mut rng, n, vertices);
        if !strong || (0..n).all(|e| h.is_connected_without_edge(e)) {
            out.push(h);
        }
    }
    out
}

fn ac8() -> Outcome {
    let mut reports = Vec::new();
    let named = [
        ("path", path_hypergraph()),
        ("triangle", triangle_hypergraph()),
        ("k4-hypergraph", k4_hypergraph()),
    ];
    let mut cases: Vec<(String, Hypergraph, bool)> = named
        .into_iter()
        .map(|(id, h)| {
            let strong = (0..h.edges().len()).all(|e| h.is_connected_without_edge(e));
            (id.to_string(), h, strong)
        })
        .collect();
    for (k, h) in random_hypergraphs(20, false, 11).into_iter().enumerate() {
        let strong = (0..h.edges().len()).all(|e| h.is_connected_without_edge(e));
        cases.push((format!("interior-{k}"), h, strong));
    }
    for (k, h) in random_hypergraphs(20, true, 12).into_iter().enumerate() {
        cases.push((format!("exterior-{k}"), h, true));
    }
    let mut exterior_checked = 0;
    for (id, h, strong) in &cases {
        let report = match check_hypergraph_corollaries(h, id) {
            Ok(r) => r,
            Err(err) => return Outcome::error(err),
        };
        if *strong && !report.notes.is_empty() {
            return Outcome::error(format!("{id}: exterior clause skipped despite its hypothesis"));
        }
        if report.notes.is_empty() {
            exterior_checked += 1;
        }
        reports.push(report);
    }
    Outcome::from_reports(
        &reports,
        &format!("; interior clause on {}, exterior clause on {exterior_checked}", cases.len()),
    )
}

type Criterion<'a> = (&'static str, &'static str, Box<dyn Fn() -> Outcome + 'a>);

fn main() -> ExitCode {
    let corpus = corpus();
    let criteria: [Criterion<'_>; 8] = [
        ("AC1", "golden worked example", Box::new(ac1)),
        ("AC2", "top and sub-top coefficients", Box::new(|| ac2(&corpus))),
        ("AC3", "interpolation for t >= 1", Box::new(|| ac3(&corpus))),
        ("AC4", "duality, divisibility, invariance", Box::new(|| ac4(&corpus))),
        ("AC5", "oracle equivalence", Box::new(|| ac5(&corpus))),
        ("AC6", "activity lemmas", Box::new(|| ac6(&corpus))),
        ("AC7", "matroid reduction", Box::new(ac7)),
        ("AC8", "hypergraph linear coefficients", Box::new(ac8)),
    ];
    let mut all = true;
    for (tag, title, run) in &criteria {
        let out = run();
        let status = if out.passed { "PASS" } else { "FAIL" };
        println!("[{status}] {tag} {title}: {}", out.detail);
        all &= out.passed;
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
