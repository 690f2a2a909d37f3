//! Seeded property suites shared by the `mch verify` command and the tests.

use std::time::Instant;

use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::complex::synthetic::{random_first_chain, random_second_chain, SyntheticCell};
use crate::complex::{first_to_second, nicify, SecondChain};
use crate::error::{Error, Result};
use crate::fixtures;
use crate::geometry::{gauss_linking_estimate, linking_number};
use crate::nmch::{hnul_element, multilink_chain, verify_chain_map};
use crate::rational::{qf, to_f64, Q};

pub const SUITES: [&str; 5] = ["axioms", "chain-map", "oracle", "nicify", "first-to-second"];

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub seed: u64,
    pub cases: usize,
    pub passed_cases: usize,
    pub failures: Vec<String>,
    pub passed: bool,
    #[serde(skip)]
    pub seconds: f64,
}

/// Runs `body` on every case, spread over the available cores. Failures are
/// reported in case order, so the report does not depend on scheduling.
fn run_cases<F>(suite: &str, seed: u64, cases: usize, body: F) -> Result<SuiteReport>
where
    F: Fn(&mut ChaCha8Rng) -> Result<Vec<String>> + Sync,
{
    let start = Instant::now();
    let workers = std::thread::available_parallelism().map_or(1, |n| n.get()).min(cases.max(1));
    let mut results: Vec<Option<Result<Vec<String>>>> = (0..cases).map(|_| None).collect();
    std::thread::scope(|scope| {
        let handles: Vec<_> = (0..workers)
            .map(|w| {
                let body = &body;
                scope.spawn(move || {
                    (w..cases).step_by(workers).map(|case| (case, body(&mut case_rng(seed, case)))).collect::<Vec<_>>()
                })
            })
            .collect();
        for h in handles {
            for (case, r) in h.join().expect("suite worker panicked") {
                results[case] = Some(r);
            }
        }
    });
    let mut report = SuiteReport {
        suite: suite.into(),
        seed,
        cases,
        passed_cases: 0,
        failures: vec![],
        passed: false,
        seconds: 0.0,
    };
    for (case, r) in results.into_iter().enumerate() {
        let problems = r.expect("every case ran")?;
        if problems.is_empty() {
            report.passed_cases += 1;
        } else {
            report.failures.extend(problems.into_iter().map(|p| format!("case {case}: {p}")));
        }
    }
    report.passed = report.passed_cases == cases;
    report.seconds = start.elapsed().as_secs_f64();
    Ok(report)
}

pub fn run_suite(name: &str, seed: u64, cases: usize) -> Result<SuiteReport> {
    match name {
        "axioms" => axioms(seed, cases),
        "chain-map" => chain_map(seed, cases),
        "oracle" => oracle(seed, cases),
        "nicify" => nicify_suite(seed, cases),
        "first-to-second" => first_to_second_suite(seed, cases),
        _ => Err(Error::InvalidInput(format!("unknown suite {name:?}; expected one of {SUITES:?}"))),
    }
}

/// Case seeds derived from the suite seed.
pub fn case_rng(seed: u64, case: usize) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ (case as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15))
}

fn check(problems: &mut Vec<String>, ok: bool, what: &str) {
    if !ok {
        problems.push(what.into());
    }
}

fn vanishes(a: &SecondChain<SyntheticCell>, b: &SecondChain<SyntheticCell>) -> Result<bool> {
    Ok(a.plus(b)?.is_zero())
}

/// The six identities and ∂̂² = 0 on random chains, k ≤ 4, l ≤ 3, d ≤ 3.
pub fn axioms(seed: u64, cases: usize) -> Result<SuiteReport> {
    run_cases("axioms", seed, cases, |rng| {
        let d = rng.gen_range(0..=3);
        let c = random_second_chain(rng, d, 4, 3);
        let (b, dl, t) = (c.boundary()?, c.delta()?, c.tilde());
        let mut p = vec![];
        check(&mut p, b.boundary()?.is_zero(), "∂² ≠ 0");
        check(&mut p, dl.delta()?.is_zero(), "δ² ≠ 0");
        check(&mut p, t.tilde().is_zero(), "∂̃² ≠ 0");
        check(&mut p, vanishes(&b.delta()?, &dl.boundary()?)?, "∂δ + δ∂ ≠ 0");
        check(&mut p, vanishes(&b.tilde(), &t.boundary()?)?, "∂∂̃ + ∂̃∂ ≠ 0");
        check(&mut p, vanishes(&dl.tilde(), &t.delta()?)?, "δ∂̃ + ∂̃δ ≠ 0");
        check(&mut p, c.hat()?.hat()?.is_zero(), "∂̂² ≠ 0");
        Ok(p)
    })
}

/// Random transversal isotopies of Hopf blocks (k ≤ 3, ≤ 5 crossings): the
/// MultiLink chain-map identity and MultiLink(ℋ_nul relation) = 0.
pub fn chain_map(seed: u64, cases: usize) -> Result<SuiteReport> {
    run_cases("chain-map", seed, cases, |rng| {
        let k = rng.gen_range(1..=3);
        let iso = fixtures::random_block_isotopy(rng.gen(), k, 5)?;
        let pairing: Vec<usize> = (0..2 * k).map(|h| h ^ 1).collect();
        let report = verify_chain_map(&iso, &pairing)?;
        let mut p = vec![];
        check(&mut p, report.passed, &format!("lhs {} ≠ rhs {}", report.lhs, report.rhs));
        check(&mut p, report.terms.len() <= 5, "more than 5 crossings");
        check(&mut p, hnul_element(&iso, &pairing)?.multilink()?.is_zero(), "MultiLink(relation) ≠ 0");
        Ok(p)
    })
}

/// Projection-count linking against the Gauss integral, plus exact symmetry,
/// orientation reversal and integrality.
pub fn oracle(seed: u64, cases: usize) -> Result<SuiteReport> {
    run_cases("oracle", seed, cases, |rng| {
        let n = rng.gen_range(5..=9);
        let linked = rng.gen_bool(0.5);
        let (a, b) = fixtures::random_loop_pair(rng, n, linked);
        let lk = linking_number(&a, &b)?;
        let gauss = gauss_linking_estimate(&a, &b, 1e-4)?;
        let mut p = vec![];
        check(&mut p, (to_f64(&lk) - gauss).abs() < 0.01, &format!("exact {lk} vs Gauss {gauss}"));
        check(&mut p, lk.is_integer(), "non-integer link of integral loops");
        check(&mut p, linking_number(&b, &a)? == lk, "asymmetric");
        check(&mut p, linking_number(&a.reversed(), &b)? == -lk.clone(), "reversal does not negate");
        check(&mut p, lk.abs() == Q::from_integer((linked as i64).into()), "unexpected value");
        Ok(p)
    })
}

/// Non-nice cycles nice + ∂̂w with k ≤ 2 are returned to nice form with the
/// same MultiLink.
pub fn nicify_suite(seed: u64, cases: usize) -> Result<SuiteReport> {
    run_cases("nicify", seed, cases, |rng| {
        let k = rng.gen_range(1..=2);
        let (nice, z) = fixtures::witness_cycle(rng.gen(), k)?;
        let out = nicify(&z, &qf(1, 100))?;
        let mut p = vec![];
        check(&mut p, !z.is_nice(), "input already nice");
        check(&mut p, z.plus(&out.b.hat()?)? == out.z_nice, "z + ∂̂b differs from the output");
        check(&mut p, out.z_nice.is_nice(), "output not nice");
        check(&mut p, out.z_nice.hat()?.is_zero(), "output not a cycle");
        check(&mut p, multilink_chain(&out.z_nice)? == multilink_chain(&nice)?, "MultiLink changed");
        Ok(p)
    })
}

/// f∂̂ = ∂̂f on random first-version chains.
pub fn first_to_second_suite(seed: u64, cases: usize) -> Result<SuiteReport> {
    run_cases("first-to-second", seed, cases, |rng| {
        let d = rng.gen_range(0..=2);
        let c = random_first_chain(rng, d, 3, 2);
        let lhs = first_to_second(&c.hat()?)?;
        let rhs = first_to_second(&c)?.hat()?;
        let mut p = vec![];
        check(&mut p, lhs.minus(&rhs)?.is_zero(), "f∂̂ ≠ ∂̂f");
        Ok(p)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_runs_pass() {
        for name in SUITES {
            let cases = if name == "nicify" { 1 } else { 3 };
            let r = run_suite(name, 5, cases).unwrap();
            assert!(r.passed, "{name}: {:?}", r.failures);
        }
        assert!(run_suite("nope", 0, 1).is_err());
    }
}
