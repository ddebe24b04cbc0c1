//! The full self-check suite behind `verify-all`.
//!
//! Every check is exact and seeded, so two runs with the same arguments
//! produce identical reports. Nothing time-dependent goes into a report.

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::betti::{
    betti_via_codes, betti_via_descents, betti_via_recursion, hess_poincare, BettiTable,
};
use crate::charseries::{
    ch_from_codes, csf_bruteforce, csf_lollipop, hess_char_series, lollipop_graph, series_a,
    verify_identity,
};
use crate::fan::{maximal_chains, verify_fan};
use crate::flags::krylov_rank_trials;
use crate::{factorial, falling_factorial, Result};

const MAX_FAILURES: usize = 10;

/// Outcome of one named check.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl CheckResult {
    fn new(name: &str) -> Self {
        CheckResult {
            name: name.to_string(),
            passed: true,
            cases: 0,
            failures: Vec::new(),
        }
    }

    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.passed = false;
            if self.failures.len() < MAX_FAILURES {
                self.failures.push(what());
            }
        }
    }

    fn record_result(&mut self, r: Result<bool>, what: impl Fn() -> String) {
        match r {
            Ok(ok) => self.record(ok, what),
            Err(e) => self.record(false, || format!("{}: {e}", what())),
        }
    }
}

/// Everything `verify-all` ran.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct VerifyReport {
    pub max_n: usize,
    pub seed: u64,
    pub trials: usize,
    pub checks: Vec<CheckResult>,
}

impl VerifyReport {
    pub fn all_ok(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// Top-dimensional cone count against `n!/(n-k-1)!`.
pub fn check_euler(max_n: usize) -> CheckResult {
    let mut r = CheckResult::new("euler_characteristic");
    for n in 2..=max_n {
        for k in 0..=n - 2 {
            let got = maximal_chains(n, k).map(|c| c.len() as u64);
            let want = falling_factorial(n, k + 1);
            r.record_result(got.map(|g| g == want), || format!("n={n} k={k}"));
        }
    }
    r
}

/// Eulerian numbers by counting descents over all of `S_n`.
pub fn eulerian_bruteforce(n: usize) -> Vec<u64> {
    let mut row = vec![0u64; n.max(1)];
    for p in (1..=n).permutations(n) {
        let d = p.windows(2).filter(|w| w[0] > w[1]).count();
        row[d] += 1;
    }
    row
}

/// The three Betti computations agree, and the permutohedral rows are Eulerian.
pub fn check_betti(max_n: usize) -> CheckResult {
    let mut r = CheckResult::new("betti_agreement");
    for n in 2..=max_n {
        for k in 0..=n - 2 {
            let tables: Result<Vec<BettiTable>> = [
                betti_via_descents(n, k),
                betti_via_recursion(n, k),
                betti_via_codes(n, k),
            ]
            .into_iter()
            .collect();
            let ok = tables.map(|t| {
                let agree = t[0] == t[1] && t[1] == t[2];
                let eulerian = k + 2 != n || t[0].betti == eulerian_bruteforce(n);
                agree && eulerian && t[0].total() == falling_factorial(n, k + 1)
            });
            r.record_result(ok, || format!("n={n} k={k}"));
        }
    }
    r
}

/// Subdivision oracle, completeness, intersections, condition (*) and `τ`.
pub fn check_fans(max_n: usize, trials: usize, seed: u64) -> CheckResult {
    let mut r = CheckResult::new("fan");
    for n in 2..=max_n {
        for k in 0..=n - 2 {
            match verify_fan(n, k, trials, seed) {
                Ok(rep) => r.record(rep.all_ok(), || {
                    format!("n={n} k={k}: {}", rep.violations.join("; "))
                }),
                Err(e) => r.record(false, || format!("n={n} k={k}: {e}")),
            }
        }
    }
    r
}

/// The recursive series against the orbit sum over codes.
pub fn check_characters(max_n: usize) -> CheckResult {
    let mut r = CheckResult::new("character_agreement");
    for n in 2..=max_n {
        for k in 0..=n - 2 {
            let ok = series_a(n, k).and_then(|a| Ok(a == ch_from_codes(n, k)?));
            r.record_result(ok, || format!("n={n} k={k}"));
        }
    }
    r
}

/// The lollipop identity symbolically up to `max_symbolic`, and against
/// proper colorings up to `max_coloring`.
pub fn check_identity(max_symbolic: usize, max_coloring: usize) -> CheckResult {
    let mut r = CheckResult::new("lollipop_identity");
    for n in 4..=max_symbolic {
        for k in 1..=n - 3 {
            r.record_result(verify_identity(n, k), || format!("symbolic n={n} k={k}"));
        }
    }
    for n in 4..=max_coloring {
        for k in 1..=n - 3 {
            let ok = (|| {
                let brute = csf_bruteforce(&lollipop_graph(n, k)?, true)?;
                let formula = csf_lollipop(n, k)?.expand_monomials(n);
                let omega_side = hess_char_series(n, k)?.omega().expand_monomials(n);
                Ok(brute == formula && brute == omega_side)
            })();
            r.record_result(ok, || format!("coloring n={n} k={k}"));
        }
    }
    r
}

/// Dimension specialization of the Hessenberg series and its total.
pub fn check_hessenberg_totals(max_n: usize) -> CheckResult {
    let mut r = CheckResult::new("hessenberg_totals");
    for n in 4..=max_n {
        for k in 1..=n - 3 {
            let ok = (|| {
                let special = hess_char_series(n, k)?.dimension_specialization();
                let total = special.eval(&1);
                let want = (falling_factorial(n, k + 1) * factorial(n - k - 1)) as i64;
                Ok(special == hess_poincare(n, k)? && total == want)
            })();
            r.record_result(ok, || format!("n={n} k={k}"));
        }
    }
    r
}

/// Krylov ranks of random vectors with prescribed support size.
pub fn check_krylov(max_n: usize, trials: usize, seed: u64) -> CheckResult {
    let mut r = CheckResult::new("krylov_rank");
    for n in 1..=max_n {
        for support in 0..=n {
            let rep = krylov_rank_trials(n, support, trials, seed);
            r.record(rep.violations == 0, || {
                format!("n={n} support={support}: {} violations", rep.violations)
            });
        }
    }
    r
}

/// Run the whole suite. `max_n` bounds the exhaustive fan and coloring
/// checks; the cheap symbolic checks use fixed ranges.
pub fn run_all(max_n: usize, seed: u64, trials: usize) -> VerifyReport {
    let checks = vec![
        check_euler(7.max(max_n)),
        check_betti(6.max(max_n)),
        check_fans(max_n, trials, seed),
        check_characters(6.max(max_n)),
        check_identity(7.max(max_n), max_n.min(crate::charseries::MAX_COLORING_N)),
        check_hessenberg_totals(7.max(max_n)),
        check_krylov(8.max(max_n), trials.min(200), seed),
    ];
    VerifyReport {
        max_n,
        seed,
        trials,
        checks,
    }
}
