//! Named verification suites: each one is a list of independent cells that
//! can run sequentially or spread over worker threads, with results merged in
//! a fixed order either way.

use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::thread;

use num_bigint::BigUint;
use thiserror::Error;

use crate::bijections::{verify_bijection_theorem, verify_relabel_theorem, BijectionError};
use crate::families::{check_families, check_poly_symmetries, worpitzky_little_b, worpitzky_q};
use crate::numbers::{self, EulerianTables};
use crate::perm::{
    oracle_a_first_table, oracle_b_set_table, oracle_big_b_table, oracle_big_b_table_parallel, oracle_big_descents_table,
    verify_lambda_fibers, PermError,
};
use crate::report::CheckReport;
use crate::roots::{check_eulerian_roots, verify_interlacing_sequence};
use crate::series::{check_r_family, verify_egf, verify_product_relation};

#[derive(Debug, Error)]
pub enum SuiteError {
    #[error("unknown suite '{0}'")]
    UnknownSuite(String),
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error(transparent)]
    Bijection(#[from] BijectionError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    Recurrences,
    Symmetry,
    Divisibility,
    Worpitzky,
    Parity,
    LogConcavity,
    Lex,
    Bijections,
    Oracle,
    Series,
    Roots,
    All,
}

impl Suite {
    pub const INDIVIDUAL: [Suite; 11] = [
        Suite::Recurrences,
        Suite::Symmetry,
        Suite::Divisibility,
        Suite::Worpitzky,
        Suite::Parity,
        Suite::LogConcavity,
        Suite::Lex,
        Suite::Bijections,
        Suite::Oracle,
        Suite::Series,
        Suite::Roots,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Recurrences => "recurrences",
            Suite::Symmetry => "symmetry",
            Suite::Divisibility => "divisibility",
            Suite::Worpitzky => "worpitzky",
            Suite::Parity => "parity",
            Suite::LogConcavity => "logconcavity",
            Suite::Lex => "lex",
            Suite::Bijections => "bijections",
            Suite::Oracle => "oracle",
            Suite::Series => "series",
            Suite::Roots => "roots",
            Suite::All => "all",
        }
    }

    /// Largest `n` (or series order) a suite goes to when none is given.
    pub fn default_max_n(self) -> usize {
        match self {
            Suite::Recurrences | Suite::Symmetry | Suite::Divisibility | Suite::Parity | Suite::LogConcavity => 12,
            Suite::Worpitzky | Suite::Lex => 10,
            Suite::Bijections | Suite::Oracle => 6,
            Suite::Series | Suite::Roots => 8,
            Suite::All => 12,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = SuiteError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::INDIVIDUAL
            .into_iter()
            .chain([Suite::All])
            .find(|suite| suite.name() == s)
            .ok_or_else(|| SuiteError::UnknownSuite(s.to_string()))
    }
}

type Cell<'a> = Box<dyn FnOnce() -> Result<CheckReport, SuiteError> + Send + 'a>;

fn cell<'a>(f: impl FnOnce() -> Result<CheckReport, SuiteError> + Send + 'a) -> Cell<'a> {
    Box::new(f)
}

fn ok<'a>(f: impl FnOnce() -> CheckReport + Send + 'a) -> Cell<'a> {
    Box::new(move || Ok(f()))
}

/// Exhaustive `B(n,k,j)` counts against the recurrence table, all cells.
pub fn check_oracle_big_b(tables: &EulerianTables, n: usize, parallel: bool) -> Result<CheckReport, PermError> {
    let mut report = CheckReport::new(format!("enumeration of B_n vs B(n,k,j), n={n}"));
    let counts = if parallel { oracle_big_b_table_parallel(n)? } else { oracle_big_b_table(n)? };
    for (k, row) in counts.iter().enumerate() {
        for (j, count) in row.iter().enumerate() {
            let idx = format!("(n={n}, k={k}, j={j})");
            report.expect_eq("#{σ: des=k, neg=j} = B(n,k,j)", idx, &tables.big_b(n, k as i64, j as i64), count);
        }
    }
    Ok(report)
}

/// Exhaustive check that the count with negative set `U` depends on `|U|`
/// only and equals `b(n,k,|U|)`.
pub fn check_oracle_sets(tables: &EulerianTables, n: usize) -> Result<CheckReport, PermError> {
    let mut report = CheckReport::new(format!("counts by negative set, n={n}"));
    let counts = oracle_b_set_table(n)?;
    for (k, row) in counts.iter().enumerate() {
        for (mask, &count) in row.iter().enumerate() {
            let size = mask.count_ones() as i64;
            let idx = format!("(n={n}, k={k}, U={})", crate::perm::Subset::from_bits(mask as u64));
            report.expect_eq("#{σ: des=k, negative set U} = b(n,k,|U|)", idx, &tables.little_b(n, k as i64, size), &BigUint::from(count));
        }
    }
    Ok(report)
}

/// `#{τ ∈ S_{n+1}: des τ = k, τ_1 = j + 1} = b(n,k,j)`.
pub fn check_oracle_a_first(tables: &EulerianTables, n: usize) -> Result<CheckReport, PermError> {
    let mut report = CheckReport::new(format!("type A by first entry, n+1={}", n + 1));
    let counts = oracle_a_first_table(n + 1)?;
    for (k, row) in counts.iter().enumerate().take(n + 1) {
        for (first, &count) in row.iter().enumerate() {
            let idx = format!("(n={n}, k={k}, j={first})");
            report.expect_eq("#{τ: des=k, τ1=j+1} = b(n,k,j)", idx, &tables.little_b(n, k as i64, first as i64), &BigUint::from(count));
        }
    }
    Ok(report)
}

/// `#{τ ∈ S_n: k - 1 big descents} = b(n,k,1)` for `n >= 2`.
pub fn check_big_descents(tables: &EulerianTables, n: usize) -> Result<CheckReport, PermError> {
    let mut report = CheckReport::new(format!("big descents, n={n}"));
    let counts = oracle_big_descents_table(n)?;
    for k in 1..=n {
        let count = counts.get(k - 1).copied().unwrap_or(0);
        let idx = format!("(n={n}, k={k})");
        report.expect_eq("#{τ: k-1 big descents} = b(n,k,1)", idx, &tables.little_b(n, k as i64, 1), &BigUint::from(count));
    }
    Ok(report)
}

fn cells<'a>(suite: Suite, max_n: usize, tables: &'a EulerianTables, parallel: bool) -> Vec<Cell<'a>> {
    let t = tables;
    match suite {
        Suite::Recurrences => vec![
            ok(move || numbers::check_boundaries(t, max_n)),
            ok(move || numbers::check_little_b_recurrences(t, max_n)),
            ok(move || numbers::check_fractional_recurrences(t, max_n)),
            ok(move || numbers::check_closed_formulas(t, max_n)),
            ok(move || {
                let mut r = CheckReport::new(format!("polynomial families to n={max_n}"));
                (0..=max_n).for_each(|n| r.absorb(check_families(t, n)));
                r
            }),
        ],
        Suite::Symmetry => vec![
            ok(move || numbers::check_symmetries(t, max_n)),
            ok(move || {
                let mut r = CheckReport::new(format!("polynomial symmetries to n={max_n}"));
                (0..=max_n).for_each(|n| r.absorb(check_poly_symmetries(n)));
                r
            }),
        ],
        Suite::Divisibility => vec![ok(move || numbers::check_divisibility(t, max_n))],
        Suite::Worpitzky => (0..=max_n)
            .map(|n| {
                ok(move || {
                    let mut r = CheckReport::new(format!("Worpitzky identities, n={n}"));
                    r.absorb(worpitzky_q(n));
                    (0..=n).for_each(|j| r.absorb(worpitzky_little_b(t, n, j)));
                    r
                })
            })
            .collect(),
        Suite::Parity => vec![
            ok(move || numbers::check_sum_identities(t, max_n)),
            ok(move || numbers::check_special_values(t, max_n)),
        ],
        Suite::LogConcavity => vec![ok(move || numbers::check_log_concavity(t, max_n))],
        Suite::Lex => (1..=max_n).map(|n| ok(move || numbers::check_lexicographic_unimodality(t, n).report)).collect(),
        Suite::Bijections => {
            let mut out: Vec<Cell<'a>> = Vec::new();
            for n in 0..=max_n {
                out.push(cell(move || Ok(verify_bijection_theorem(t, n)?)));
                // The relabeling sweep is quadratic in the number of subsets.
                if n <= max_n.min(5) {
                    out.push(cell(move || Ok(verify_relabel_theorem(n)?)));
                }
                out.push(cell(move || Ok(verify_lambda_fibers(n)?)));
            }
            out
        }
        Suite::Oracle => {
            let mut out: Vec<Cell<'a>> = Vec::new();
            for n in 0..=max_n {
                out.push(cell(move || Ok(check_oracle_big_b(t, n, parallel)?)));
                out.push(cell(move || Ok(check_oracle_sets(t, n)?)));
                out.push(cell(move || Ok(check_oracle_a_first(t, n)?)));
            }
            for n in 2..=(max_n + 1) {
                out.push(cell(move || Ok(check_big_descents(t, n)?)));
            }
            out
        }
        Suite::Series => vec![
            ok(move || verify_egf(max_n)),
            ok(move || verify_product_relation(max_n)),
            ok(move || check_r_family(t, max_n)),
        ],
        Suite::Roots => {
            let mut out: Vec<Cell<'a>> = (1..=max_n).map(|n| ok(move || verify_interlacing_sequence(n))).collect();
            out.extend((0..=max_n).map(|n| ok(move || check_eulerian_roots(n))));
            out
        }
        Suite::All => Suite::INDIVIDUAL
            .into_iter()
            .flat_map(|s| cells(s, s.default_max_n(), tables, parallel))
            .collect(),
    }
}

fn run_cells(cells: Vec<Cell<'_>>, parallel: bool) -> Result<Vec<CheckReport>, SuiteError> {
    if !parallel {
        return cells.into_iter().map(|c| c()).collect();
    }
    let workers = thread::available_parallelism().map_or(1, |n| n.get()).min(cells.len().max(1));
    let queue: Vec<Mutex<Option<Cell<'_>>>> = cells.into_iter().map(|c| Mutex::new(Some(c))).collect();
    let results: Vec<Mutex<Option<Result<CheckReport, SuiteError>>>> = queue.iter().map(|_| Mutex::new(None)).collect();
    let next = AtomicUsize::new(0);
    thread::scope(|scope| {
        for _ in 0..workers {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                let Some(slot) = queue.get(i) else { break };
                let job = slot.lock().expect("queue lock").take().expect("each cell runs once");
                *results[i].lock().expect("result lock") = Some(job());
            });
        }
    });
    results
        .into_iter()
        .map(|r| r.into_inner().expect("result lock").expect("every cell ran"))
        .collect()
}

/// Runs a suite up to `max_n` (its default when `None`). For [`Suite::All`]
/// every suite runs at its own default and `max_n` is ignored.
pub fn run_suite(suite: Suite, max_n: Option<usize>, parallel: bool) -> Result<Vec<CheckReport>, SuiteError> {
    let max_n = match suite {
        Suite::All => suite.default_max_n(),
        _ => max_n.unwrap_or(suite.default_max_n()),
    };
    // A(n+1,k) for the row-sum identities needs one extra order.
    let tables = EulerianTables::new(max_n + 1);
    run_cells(cells(suite, max_n, &tables, parallel), parallel)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for s in Suite::INDIVIDUAL.into_iter().chain([Suite::All]) {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn small_suites_pass_in_both_modes() {
        for s in Suite::INDIVIDUAL {
            let seq = run_suite(s, Some(3), false).unwrap();
            let par = run_suite(s, Some(3), true).unwrap();
            assert_eq!(seq, par, "{s}");
            for r in &seq {
                assert!(r.passed(), "{s}: {r} {:?}", r.first_failure());
            }
        }
    }
}
