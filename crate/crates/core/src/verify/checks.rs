use std::collections::{BTreeSet, HashSet};
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::One;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::basis::{
    activity_direct, coordinate_bounds, enumerate_bases_limited, is_basis, tight_family_unchecked,
    BasisVector,
};
use crate::error::{Error, Result};
use crate::polyalg::{rational, BivariatePolynomial, Rational, Variable};
use crate::polycore::{
    dual_polymatroid, permute_rank, rank_from_hypergraph, translate_rank, Hypergraph, Polymatroid,
    SubsetMask,
};
use crate::report::CheckReport;
use crate::tutte::{exterior_from_jp, interior_from_jp, jp_polynomial};

fn timed(start: Instant, report: CheckReport) -> CheckReport {
    report.timed(start.elapsed())
}

fn slice(j: &BivariatePolynomial, fixed: Variable, t: &Rational) -> crate::UnivariateRationalPolynomial {
    match fixed {
        Variable::Y => j.specialize_y(t),
        Variable::X => j.specialize_x(t),
    }
}

/// Support contiguity of `J(x, t)` (and `J(t, y)` when `both_axes`) for each
/// `t >= 1`.
pub fn check_interpolating(
    p: &Polymatroid,
    id: &str,
    ts: &[Rational],
    both_axes: bool,
) -> Result<CheckReport> {
    if let Some(t) = ts.iter().find(|t| **t < Rational::one()) {
        return Err(Error::InvalidArgument(format!(
            "interpolation is only guaranteed for t >= 1, got {t}; use the explorer below 1"
        )));
    }
    let start = Instant::now();
    let j = jp_polynomial(p)?;
    Ok(timed(start, interpolating_with(&j, id, ts, both_axes)))
}

pub(crate) fn interpolating_with(
    j: &BivariatePolynomial,
    id: &str,
    ts: &[Rational],
    both_axes: bool,
) -> CheckReport {
    let axes: &[Variable] = if both_axes {
        &[Variable::Y, Variable::X]
    } else {
        &[Variable::Y]
    };
    for t in ts {
        for &fixed in axes {
            let s = slice(j, fixed, t);
            let report = s.support_report();
            if !report.interpolating {
                return CheckReport::fail(
                    "interpolating",
                    id,
                    json!({
                        "t": t.to_string(),
                        "fixed": fixed.name(),
                        "support": report.support,
                        "slice": s.to_string(),
                    }),
                );
            }
        }
    }
    CheckReport::pass("interpolating", id)
}

/// `[x^n] J(x, 1) = 1` and `[y^n] J(1, y) = 1`.
pub fn check_top_coefficient(p: &Polymatroid, id: &str) -> Result<CheckReport> {
    let start = Instant::now();
    let j = jp_polynomial(p)?;
    Ok(timed(start, top_coefficient_with(&j, p.n(), id)))
}

pub(crate) fn top_coefficient_with(j: &BivariatePolynomial, n: usize, id: &str) -> CheckReport {
    let one = rational(1, 1);
    for fixed in [Variable::Y, Variable::X] {
        let s = slice(j, fixed, &one);
        let c = s.coeff(n as u32);
        if c != one {
            return CheckReport::fail(
                "top-coefficient",
                id,
                json!({"slice": s.to_string(), "degree": n, "coefficient": c.to_string()}),
            );
        }
    }
    CheckReport::pass("top-coefficient", id)
}

/// Degree `n-1` coefficients of the two slices against the rank formulas.
pub fn check_subtop_coefficients(p: &Polymatroid, id: &str) -> Result<CheckReport> {
    let start = Instant::now();
    let j = jp_polynomial(p)?;
    Ok(timed(start, subtop_with(&j, p, id)))
}

/// `(Σ f({i}) - f([n]), Σ f([n] \ {i}) - (n-1) f([n]))`.
pub fn subtop_formulas(p: &Polymatroid) -> (i64, i64) {
    let n = p.n();
    let total = p.rank().total();
    let full = SubsetMask::full(n);
    let singles: i64 = (0..n).map(|i| p.f(SubsetMask::singleton(i))).sum();
    let co_singles: i64 = (0..n).map(|i| p.f(full.without(i))).sum();
    (singles - total, co_singles - (n as i64 - 1) * total)
}

pub(crate) fn subtop_with(j: &BivariatePolynomial, p: &Polymatroid, id: &str) -> CheckReport {
    let one = rational(1, 1);
    let n = p.n() as u32;
    let (ex, ey) = subtop_formulas(p);
    for (fixed, expected) in [(Variable::Y, ex), (Variable::X, ey)] {
        let s = slice(j, fixed, &one);
        let c = s.coeff(n - 1);
        if c != Rational::from_integer(BigInt::from(expected)) {
            return CheckReport::fail(
                "subtop-coefficients",
                id,
                json!({
                    "slice": s.to_string(),
                    "degree": n - 1,
                    "coefficient": c.to_string(),
                    "formula": expected,
                }),
            );
        }
    }
    CheckReport::pass("subtop-coefficients", id)
}

/// Linear coefficients of the interior and exterior polynomials of a
/// connected hypergraph against `|ε| - (|E| + |V|) + 1` and `|V| - 1`. The
/// exterior clause needs `H - e` connected for every hyperedge `e` and is
/// skipped with a note otherwise.
pub fn check_hypergraph_corollaries(h: &Hypergraph, id: &str) -> Result<CheckReport> {
    let start = Instant::now();
    let p = rank_from_hypergraph(h)?;
    let j = jp_polynomial(&p)?;
    let n = p.n();
    let vertices = h.vertex_count() as i64;
    let interior = interior_from_jp(&j, n)?;
    let expected = h.incidence_count() as i64 - (n as i64 + vertices) + 1;
    let got = interior.coeff(1);
    if got != Rational::from_integer(expected.into()) {
        let w = json!({"polynomial": "interior", "value": interior.to_string(),
                       "linear": got.to_string(), "formula": expected});
        return Ok(timed(start, CheckReport::fail("hypergraph-corollaries", id, w)));
    }
    let mut report = CheckReport::pass("hypergraph-corollaries", id);
    if (0..n).all(|e| h.is_connected_without_edge(e)) {
        let exterior = exterior_from_jp(&j, n)?;
        let got = exterior.coeff(1);
        if got != Rational::from_integer((vertices - 1).into()) {
            let w = json!({"polynomial": "exterior", "value": exterior.to_string(),
                           "linear": got.to_string(), "formula": vertices - 1});
            return Ok(timed(start, CheckReport::fail("hypergraph-corollaries", id, w)));
        }
    } else {
        report = report.with_note("exterior clause skipped: some H - e is disconnected");
    }
    Ok(timed(start, report))
}

/// `J_{-P}(x, y) = J_P(y, x)`.
pub fn check_duality(p: &Polymatroid, id: &str) -> Result<CheckReport> {
    let start = Instant::now();
    let j = jp_polynomial(p)?;
    duality_with(&j, p, id).map(|r| timed(start, r))
}

pub(crate) fn duality_with(j: &BivariatePolynomial, p: &Polymatroid, id: &str) -> Result<CheckReport> {
    let jd = jp_polynomial(&dual_polymatroid(p))?;
    let swapped = j.swap_xy();
    Ok(if jd == swapped {
        CheckReport::pass("duality", id)
    } else {
        CheckReport::fail(
            "duality",
            id,
            json!({"dual": jd.to_string(), "swapped": swapped.to_string()}),
        )
    })
}

/// `J_P` is divisible by `x + y - 1`.
pub fn check_divisibility(p: &Polymatroid, id: &str) -> Result<CheckReport> {
    let start = Instant::now();
    let j = jp_polynomial(p)?;
    Ok(timed(start, divisibility_with(&j, id)))
}

pub(crate) fn divisibility_with(j: &BivariatePolynomial, id: &str) -> CheckReport {
    match j.divide_exact_xy1() {
        Ok(_) => CheckReport::pass("divisibility", id),
        Err(Error::NotDivisible { remainder }) => {
            CheckReport::fail("divisibility", id, json!({"remainder": remainder}))
        }
        Err(e) => CheckReport::fail("divisibility", id, json!({"error": e.to_string()})),
    }
}

/// `J_P` is unchanged under `trials` random translations and `trials`
/// random permutations drawn from `seed`.
pub fn check_invariance(p: &Polymatroid, id: &str, seed: u64, trials: usize) -> Result<CheckReport> {
    let start = Instant::now();
    let j = jp_polynomial(p)?;
    invariance_with(&j, p, id, seed, trials).map(|r| timed(start, r))
}

pub(crate) fn invariance_with(
    j: &BivariatePolynomial,
    p: &Polymatroid,
    id: &str,
    seed: u64,
    trials: usize,
) -> Result<CheckReport> {
    let n = p.n();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..trials {
        let by: Vec<i64> = (0..n).map(|_| rng.gen_range(-3..=3)).collect();
        let jt = jp_polynomial(&translate_rank(p, &by)?)?;
        if &jt != j {
            let w = json!({"translate": by, "polynomial": jt.to_string(), "expected": j.to_string()});
            return Ok(CheckReport::fail("invariance", id, w));
        }
    }
    for _ in 0..trials {
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(&mut rng);
        let jp = jp_polynomial(&permute_rank(p, &perm)?)?;
        if &jp != j {
            let one_based: Vec<usize> = perm.iter().map(|k| k + 1).collect();
            let w = json!({"permute": one_based, "polynomial": jp.to_string(), "expected": j.to_string()});
            return Ok(CheckReport::fail("invariance", id, w));
        }
    }
    Ok(CheckReport::pass("invariance", id))
}

/// Exhaustive check of the activity lemmas over all bases:
/// tight-set lattice closure, the exchange criterion via tight sets, the
/// tight-set form of activities, the basis exchange axiom, monotonicity of
/// internal activity along two-coordinate moves, and that the internal
/// activities form an interval ending at `n`.
///
/// Instances with more than `basis_limit` bases are skipped with a note.
pub fn check_activity_lemmas(p: &Polymatroid, id: &str, basis_limit: usize) -> Result<CheckReport> {
    const NAME: &str = "activity-lemmas";
    let start = Instant::now();
    let bases = match enumerate_bases_limited(p, Some(basis_limit)) {
        Ok(b) => b,
        Err(Error::BudgetExceeded { .. }) => {
            return Ok(timed(
                start,
                CheckReport::pass(NAME, id)
                    .with_note(format!("skipped: more than {basis_limit} bases")),
            ))
        }
        Err(e) => return Err(e),
    };
    let n = p.n();
    let set: HashSet<&BasisVector> = bases.iter().collect();
    let mut internal = Vec::with_capacity(bases.len());

    for a in &bases {
        let fam = tight_family_unchecked(p, a);
        if let Some((i, j)) = fam.closure_violation() {
            let w = json!({"lemma": "tight", "basis": a, "sets": [i.to_string(), j.to_string()]});
            return Ok(timed(start, CheckReport::fail(NAME, id, w)));
        }
        for i in 0..n {
            for j in (0..n).filter(|&j| j != i) {
                let direct = is_basis(p, &a.exchanged(i, j));
                if fam.exchange_feasible(i, j) != direct {
                    let w = json!({"lemma": "transfer", "basis": a, "i": i + 1, "j": j + 1,
                                   "member": direct});
                    return Ok(timed(start, CheckReport::fail(NAME, id, w)));
                }
            }
        }
        let via_tight = fam.activity();
        let direct = activity_direct(p, a)?;
        if via_tight != direct {
            let w = json!({"lemma": "ia", "basis": a,
                           "direct": [direct.internal.to_string(), direct.external.to_string()],
                           "tight": [via_tight.internal.to_string(), via_tight.external.to_string()]});
            return Ok(timed(start, CheckReport::fail(NAME, id, w)));
        }
        internal.push(via_tight.internal);
    }

    // basis exchange axiom
    for a in &bases {
        for b in &bases {
            if a == b {
                continue;
            }
            for i in (0..n).filter(|&i| a[i] > b[i]) {
                let ok = (0..n).filter(|&j| a[j] < b[j]).any(|j| {
                    set.contains(&a.exchanged(j, i)) && set.contains(&b.exchanged(i, j))
                });
                if !ok {
                    let w = json!({"lemma": "basis-exchange", "a": a, "b": b, "i": i + 1});
                    return Ok(timed(start, CheckReport::fail(NAME, id, w)));
                }
            }
        }
    }

    // moves a -> b = a + k(e_i - e_j)
    let index: std::collections::HashMap<&BasisVector, usize> =
        bases.iter().enumerate().map(|(k, b)| (b, k)).collect();
    let bounds = coordinate_bounds(p);
    for (ka, a) in bases.iter().enumerate() {
        for i in 0..n {
            for j in (0..n).filter(|&j| j != i) {
                for step in 1..=(bounds[i].1 - a[i]) {
                    let mut b = a.0.clone();
                    b[i] += step;
                    b[j] -= step;
                    let Some(&kb) = index.get(&BasisVector(b)) else {
                        continue;
                    };
                    let (ia, ib) = (internal[ka], internal[kb]);
                    // every k > i active for a stays active for b
                    if let Some(k) = (i + 1..n).find(|&k| ia.contains(k) && !ib.contains(k)) {
                        let w = json!({"lemma": "a-to-b", "a": a, "b": bases[kb], "k": k + 1});
                        return Ok(timed(start, CheckReport::fail(NAME, id, w)));
                    }
                    if let Some(k) =
                        (i.max(j) + 1..n).find(|&k| ia.contains(k) != ib.contains(k))
                    {
                        let w = json!({"lemma": "a-and-b", "a": a, "b": bases[kb], "k": k + 1});
                        return Ok(timed(start, CheckReport::fail(NAME, id, w)));
                    }
                }
            }
        }
    }

    // internal activities form an interval with maximum n
    let iotas: BTreeSet<usize> = internal.iter().map(|m| m.len()).collect();
    let lo = *iotas.first().expect("non-empty basis set");
    let hi = *iotas.last().expect("non-empty basis set");
    if hi != n || iotas.len() != hi - lo + 1 {
        let w = json!({"lemma": "main", "iota_values": iotas, "n": n});
        return Ok(timed(start, CheckReport::fail(NAME, id, w)));
    }
    Ok(timed(start, CheckReport::pass(NAME, id)))
}

/// All integer points of the box `Π [f([n]) - f([n]\{i}), f({i})]` that pass
/// the membership test, in lexicographic order. `None` when the box holds
/// more than `volume_limit` points.
pub fn box_scan_bases(p: &Polymatroid, volume_limit: u64) -> Option<Vec<BasisVector>> {
    let bounds = coordinate_bounds(p);
    let mut volume: u64 = 1;
    for &(lo, hi) in &bounds {
        if hi < lo {
            return Some(Vec::new());
        }
        volume = volume.checked_mul((hi - lo + 1) as u64)?;
        if volume > volume_limit {
            return None;
        }
    }
    let mut point: Vec<i64> = bounds.iter().map(|b| b.0).collect();
    let mut out = Vec::new();
    loop {
        if is_basis(p, &point) {
            out.push(BasisVector(point.clone()));
        }
        // odometer, last coordinate fastest
        let mut k = point.len();
        loop {
            if k == 0 {
                return Some(out);
            }
            k -= 1;
            if point[k] < bounds[k].1 {
                point[k] += 1;
                break;
            }
            point[k] = bounds[k].0;
        }
    }
}

/// Cross-checks the production algorithms against their direct oracles:
/// activities (definition vs tight sets), exchange feasibility (tight sets vs
/// membership) and enumeration (depth-first search vs box scan).
pub fn check_oracle_equivalence(
    p: &Polymatroid,
    id: &str,
    basis_budget: Option<usize>,
    box_volume_limit: u64,
) -> Result<CheckReport> {
    const NAME: &str = "oracle-equivalence";
    let start = Instant::now();
    let bases = enumerate_bases_limited(p, basis_budget)?;
    let n = p.n();
    for a in &bases {
        let direct = activity_direct(p, a)?;
        let tight = crate::basis::activity_tight(p, a)?;
        if direct != tight {
            let w = json!({"oracle": "activity", "basis": a,
                           "direct": [direct.internal.to_string(), direct.external.to_string()],
                           "tight": [tight.internal.to_string(), tight.external.to_string()]});
            return Ok(timed(start, CheckReport::fail(NAME, id, w)));
        }
        for i in 0..n {
            for j in (0..n).filter(|&j| j != i) {
                let feasible = crate::basis::is_exchange_feasible(p, a, i, j)?;
                if feasible != is_basis(p, &a.exchanged(i, j)) {
                    let w = json!({"oracle": "exchange", "basis": a, "i": i + 1, "j": j + 1});
                    return Ok(timed(start, CheckReport::fail(NAME, id, w)));
                }
            }
        }
    }
    let mut report = CheckReport::pass(NAME, id);
    match box_scan_bases(p, box_volume_limit) {
        Some(scan) if scan != bases => {
            let w = json!({"oracle": "enumeration", "search": bases.len(), "box_scan": scan.len(),
                           "first_difference": first_difference(&bases, &scan)});
            report = CheckReport::fail(NAME, id, w);
        }
        Some(_) => {}
        None => report = report.with_note("box scan skipped: box volume above limit"),
    }
    Ok(timed(start, report))
}

fn first_difference(a: &[BasisVector], b: &[BasisVector]) -> Value {
    let k = a.iter().zip(b).take_while(|(x, y)| x == y).count();
    json!({"index": k, "search": a.get(k), "box_scan": b.get(k)})
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::rank_from_uniform_matroid;
    use crate::verify::corpus::{k4_hypergraph, path_hypergraph, worked_example, triangle_hypergraph};

    fn ts(values: &[(i64, i64)]) -> Vec<Rational> {
        values.iter().map(|&(p, q)| rational(p, q)).collect()
    }

    #[test]
    fn worked_interpolation() {
        let p = worked_example();
        let r = check_interpolating(&p, "worked", &ts(&[(1, 1), (3, 2), (2, 1), (7, 3)]), true).unwrap();
        assert!(r.passed);
        assert!(check_interpolating(&p, "worked", &ts(&[(1, 3)]), true).is_err());
        let j = jp_polynomial(&p).unwrap();
        assert_eq!(j.specialize_y(&rational(1, 1)).support(), vec![1, 2, 3]);
    }

    #[test]
    fn single_element_interpolation() {
        let p = Polymatroid::from_values(1, vec![0, 2]).unwrap();
        let r = check_interpolating(&p, "n1", &ts(&[(1, 1), (2, 1), (9, 4)]), true).unwrap();
        assert!(r.passed);
    }

    #[test]
    fn interpolation_failure_carries_witness() {
        let j = jp_polynomial(&worked_example()).unwrap();
        let r = interpolating_with(&j, "worked", &ts(&[(1, 3)]), false);
        assert!(!r.passed);
        let w = r.witness.unwrap();
        assert_eq!(w["support"], json!([0, 3]));
        assert_eq!(w["slice"], json!("x^3 - 8/27"));
    }

    #[test]
    fn coefficient_theorems_on_worked() {
        let p = worked_example();
        assert!(check_top_coefficient(&p, "worked").unwrap().passed);
        assert_eq!(subtop_formulas(&p), (2, 3));
        assert!(check_subtop_coefficients(&p, "worked").unwrap().passed);
        let free = rank_from_uniform_matroid(4, 4).unwrap().to_polymatroid();
        assert!(check_top_coefficient(&free, "free").unwrap().passed);
    }

    #[test]
    fn path_hypergraph_subtop() {
        let p = rank_from_hypergraph(&path_hypergraph()).unwrap();
        assert_eq!(jp_polynomial(&p).unwrap(), crate::polyalg::xy1_power(2));
        assert_eq!(subtop_formulas(&p).0, 0);
        assert!(check_subtop_coefficients(&p, "path").unwrap().passed);
    }

    #[test]
    fn hypergraph_corollaries() {
        let tri = triangle_hypergraph();
        assert_eq!(tri.incidence_count(), 6);
        let p = rank_from_hypergraph(&tri).unwrap();
        let j = jp_polynomial(&p).unwrap();
        assert_eq!(interior_from_jp(&j, 3).unwrap().coeff(1), rational(1, 1));
        assert_eq!(exterior_from_jp(&j, 3).unwrap().coeff(1), rational(2, 1));
        let r = check_hypergraph_corollaries(&tri, "triangle").unwrap();
        assert!(r.passed && r.notes.is_empty());

        let r = check_hypergraph_corollaries(&path_hypergraph(), "path").unwrap();
        assert!(r.passed);
        assert_eq!(r.notes.len(), 1);
        let pj = jp_polynomial(&rank_from_hypergraph(&path_hypergraph()).unwrap()).unwrap();
        assert_eq!(interior_from_jp(&pj, 2).unwrap().to_string(), "1");

        assert!(check_hypergraph_corollaries(&k4_hypergraph(), "k4").unwrap().passed);
    }

    #[test]
    fn duality_divisibility_invariance_on_worked() {
        let p = worked_example();
        let jd = jp_polynomial(&dual_polymatroid(&p)).unwrap();
        let expected = BivariatePolynomial::from_terms([
            (0, 3, 1),
            (1, 2, 3),
            (2, 1, 3),
            (3, 0, 1),
            (0, 2, -1),
            (1, 1, -1),
            (1, 0, -1),
        ]);
        assert_eq!(jd, expected);
        assert!(check_duality(&p, "worked").unwrap().passed);
        assert!(check_divisibility(&p, "worked").unwrap().passed);
        assert!(check_invariance(&p, "worked", 7, 5).unwrap().passed);
        let j = jp_polynomial(&p).unwrap();
        assert_eq!(jp_polynomial(&translate_rank(&p, &[5, 5, 5]).unwrap()).unwrap(), j);
        assert_eq!(jp_polynomial(&permute_rank(&p, &[1, 2, 0]).unwrap()).unwrap(), j);
    }

    #[test]
    fn divisibility_failure_is_reported() {
        let r = divisibility_with(&BivariatePolynomial::x(), "x");
        assert!(!r.passed && r.witness.is_some());
    }

    #[test]
    fn lemmas_on_worked() {
        let p = worked_example();
        let iotas: Vec<usize> = crate::basis::enumerate_bases(&p)
            .iter()
            .map(|b| activity_direct(&p, b).unwrap().iota)
            .collect();
        let mut sorted = iotas.clone();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        assert_eq!(sorted, vec![3, 2, 2, 1, 1]);
        assert!(check_activity_lemmas(&p, "worked", 5000).unwrap().passed);
        let single = Polymatroid::from_values(1, vec![0, 1]).unwrap();
        assert!(check_activity_lemmas(&single, "n1", 5000).unwrap().passed);
        let r = check_activity_lemmas(&p, "worked", 3).unwrap();
        assert!(r.passed && !r.notes.is_empty());
    }

    #[test]
    fn box_scan_matches_search() {
        let p = worked_example();
        assert_eq!(box_scan_bases(&p, 1_000).unwrap(), crate::basis::enumerate_bases(&p));
        assert!(box_scan_bases(&p, 3).is_none());
        assert!(check_oracle_equivalence(&p, "worked", None, 1_000_000).unwrap().passed);
    }
}
