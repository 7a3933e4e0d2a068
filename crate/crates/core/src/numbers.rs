//! Eulerian number families of type A and type B, refined by minus signs.
//!
//! [`EulerianTables`] builds, for every order up to a bound, the arrays
//!
//! * `A(n,k)`: permutations of `{1..n}` with `k` descents,
//! * `B(n,k)`: signed permutations with `k` descents,
//! * `B(n,k,j)`: signed permutations with `k` descents and `j` minus signs,
//! * `b(n,k,j) = B(n,k,j) / C(n,j)`,
//!
//! purely from their recurrences. The closed alternating-sum formulas live in
//! separate functions and are only used as independent cross-checks.
//!
//! Every lookup is total: indices outside `0 <= k, j <= n` read as zero.

use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Pow, Zero};
use thiserror::Error;

use crate::report::CheckReport;

/// Arbitrary-precision nonnegative count.
pub type BigCount = BigUint;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NumbersError {
    #[error("{formula} is only defined for 0 <= k, j <= n (got n={n}, k={k}, j={j})")]
    OutOfRange {
        formula: &'static str,
        n: usize,
        k: i64,
        j: i64,
    },
    #[error("{formula} produced a negative value {value} at n={n}, k={k}, j={j}")]
    NegativeSum {
        formula: &'static str,
        n: usize,
        k: i64,
        j: i64,
        value: BigInt,
    },
    #[error("C({n},{j}) = {binomial} does not divide B({n},{k},{j}) = {value}")]
    NotDivisible {
        n: usize,
        k: i64,
        j: i64,
        value: BigCount,
        binomial: BigCount,
    },
    #[error("parity sums at n={n}, k={k} are ({even}, {odd}), expected ({expected_even}, {expected_odd})")]
    ParityMismatch {
        n: usize,
        k: i64,
        even: BigInt,
        odd: BigInt,
        expected_even: BigInt,
        expected_odd: BigInt,
    },
}

/// Which number family a [`TriangleTable`] holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// Type A Eulerian numbers `A(n,k)`.
    A,
    /// Type B Eulerian numbers `B(n,k)`.
    B,
    /// `B(n,k,j)`.
    BigB,
    /// `b(n,k,j)`.
    LittleB,
}

impl Family {
    pub fn is_two_statistic(self) -> bool {
        matches!(self, Family::BigB | Family::LittleB)
    }
}

/// The table of one family at one order `n`.
///
/// Single-statistic families store one column: `rows[k] = [value]`.
/// Two-statistic families store `rows[k][j]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriangleTable {
    family: Family,
    n: usize,
    rows: Vec<Vec<BigCount>>,
}

fn in_range(n: usize, index: i64) -> Option<usize> {
    usize::try_from(index).ok().filter(|&i| i <= n)
}

impl TriangleTable {
    fn new(family: Family, n: usize, rows: Vec<Vec<BigCount>>) -> Self {
        debug_assert_eq!(rows.len(), n + 1);
        Self { family, n, rows }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[Vec<BigCount>] {
        &self.rows
    }

    /// Entry `k` of a single-statistic family, zero outside `0..=n`.
    pub fn entry(&self, k: i64) -> BigCount {
        debug_assert!(!self.family.is_two_statistic());
        in_range(self.n, k)
            .map(|k| self.rows[k][0].clone())
            .unwrap_or_default()
    }

    /// Cell `(k, j)` of a two-statistic family, zero outside `0..=n`.
    pub fn cell(&self, k: i64, j: i64) -> BigCount {
        debug_assert!(self.family.is_two_statistic());
        match (in_range(self.n, k), in_range(self.n, j)) {
            (Some(k), Some(j)) => self.rows[k][j].clone(),
            _ => BigCount::zero(),
        }
    }

    /// Single-statistic entries as a flat row `k = 0..=n`.
    pub fn as_row(&self) -> Vec<BigCount> {
        self.rows.iter().map(|r| r[0].clone()).collect()
    }
}

impl fmt::Display for TriangleTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            let line: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            writeln!(f, "{}", line.join("\t"))?;
        }
        Ok(())
    }
}

/// Pascal's triangle, memoized.
#[derive(Debug, Clone)]
pub struct Pascal {
    rows: Vec<Vec<BigCount>>,
}

impl Pascal {
    pub fn new(n_max: usize) -> Self {
        let mut rows: Vec<Vec<BigCount>> = Vec::with_capacity(n_max + 1);
        rows.push(vec![BigCount::one()]);
        for n in 1..=n_max {
            let prev = &rows[n - 1];
            let mut row = Vec::with_capacity(n + 1);
            row.push(BigCount::one());
            for k in 1..n {
                row.push(&prev[k - 1] + &prev[k]);
            }
            row.push(BigCount::one());
            rows.push(row);
        }
        Self { rows }
    }

    pub fn n_max(&self) -> usize {
        self.rows.len() - 1
    }

    /// `C(n, k)`, zero for `k < 0` or `k > n`.
    pub fn get(&self, n: usize, k: i64) -> BigCount {
        assert!(n <= self.n_max(), "binomial row {n} beyond memoized {}", self.n_max());
        in_range(n, k)
            .map(|k| self.rows[n][k].clone())
            .unwrap_or_default()
    }
}

/// All four families for every order `0..=n_max`, built by recurrence.
#[derive(Debug, Clone)]
pub struct EulerianTables {
    n_max: usize,
    pascal: Pascal,
    a: Vec<TriangleTable>,
    b: Vec<TriangleTable>,
    big_b: Vec<TriangleTable>,
    little_b: Vec<TriangleTable>,
}

impl EulerianTables {
    pub fn new(n_max: usize) -> Self {
        // One extra Pascal row so that identities at n_max can ask for C(n+1, i).
        let pascal = Pascal::new(n_max + 1);
        let a = build_a(n_max);
        let b = build_b(n_max);
        let big_b = build_big_b(n_max, &a);
        let little_b = build_little_b(n_max);
        Self {
            n_max,
            pascal,
            a,
            b,
            big_b,
            little_b,
        }
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    pub fn pascal(&self) -> &Pascal {
        &self.pascal
    }

    pub fn table(&self, family: Family, n: usize) -> &TriangleTable {
        self.check_order(n);
        match family {
            Family::A => &self.a[n],
            Family::B => &self.b[n],
            Family::BigB => &self.big_b[n],
            Family::LittleB => &self.little_b[n],
        }
    }

    fn check_order(&self, n: usize) {
        assert!(n <= self.n_max, "order {n} beyond tables built to {}", self.n_max);
    }

    pub fn binomial(&self, n: usize, k: i64) -> BigCount {
        self.pascal.get(n, k)
    }

    pub fn a(&self, n: usize, k: i64) -> BigCount {
        self.table(Family::A, n).entry(k)
    }

    pub fn b(&self, n: usize, k: i64) -> BigCount {
        self.table(Family::B, n).entry(k)
    }

    pub fn big_b(&self, n: usize, k: i64, j: i64) -> BigCount {
        self.table(Family::BigB, n).cell(k, j)
    }

    pub fn little_b(&self, n: usize, k: i64, j: i64) -> BigCount {
        self.table(Family::LittleB, n).cell(k, j)
    }
}

fn single_column(values: Vec<BigCount>) -> Vec<Vec<BigCount>> {
    values.into_iter().map(|v| vec![v]).collect()
}

fn get1(row: &[BigCount], k: i64) -> BigCount {
    usize::try_from(k)
        .ok()
        .and_then(|k| row.get(k).cloned())
        .unwrap_or_default()
}

fn build_a(n_max: usize) -> Vec<TriangleTable> {
    let mut rows: Vec<Vec<BigCount>> = vec![vec![BigCount::one()]];
    for n in 1..=n_max {
        let prev = &rows[n - 1];
        let mut row = vec![BigCount::zero(); n + 1];
        row[0] = BigCount::one();
        for k in 1..n {
            let ki = k as i64;
            row[k] = get1(prev, ki - 1) * BigCount::from(n - k) + get1(prev, ki) * BigCount::from(k + 1);
        }
        rows.push(row);
    }
    rows.into_iter()
        .enumerate()
        .map(|(n, r)| TriangleTable::new(Family::A, n, single_column(r)))
        .collect()
}

fn build_b(n_max: usize) -> Vec<TriangleTable> {
    let mut rows: Vec<Vec<BigCount>> = vec![vec![BigCount::one()]];
    for n in 1..=n_max {
        let prev = &rows[n - 1];
        let mut row = vec![BigCount::zero(); n + 1];
        row[0] = BigCount::one();
        row[n] = BigCount::one();
        for k in 1..n {
            let ki = k as i64;
            row[k] = get1(prev, ki - 1) * BigCount::from(2 * n - 2 * k + 1)
                + get1(prev, ki) * BigCount::from(2 * k + 1);
        }
        rows.push(row);
    }
    rows.into_iter()
        .enumerate()
        .map(|(n, r)| TriangleTable::new(Family::B, n, single_column(r)))
        .collect()
}

fn build_big_b(n_max: usize, a: &[TriangleTable]) -> Vec<TriangleTable> {
    let mut tables = vec![TriangleTable::new(Family::BigB, 0, vec![vec![BigCount::one()]])];
    for n in 1..=n_max {
        let prev = &tables[n - 1];
        let an = &a[n];
        let mut rows = vec![vec![BigCount::zero(); n + 1]; n + 1];
        for (k, row) in rows.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                let (ki, ji) = (k as i64, j as i64);
                *cell = if k == 0 {
                    BigCount::from(u8::from(j == 0))
                } else if k == n {
                    BigCount::from(u8::from(j == n))
                } else if j == 0 {
                    an.entry(ki)
                } else if j == n {
                    an.entry((n - k) as i64)
                } else {
                    prev.cell(ki, ji) * BigCount::from(k + 1)
                        + prev.cell(ki - 1, ji) * BigCount::from(n - k)
                        + prev.cell(ki, ji - 1) * BigCount::from(k)
                        + prev.cell(ki - 1, ji - 1) * BigCount::from(n - k + 1)
                };
            }
        }
        tables.push(TriangleTable::new(Family::BigB, n, rows));
    }
    tables
}

// b(n,k,j) = (k+1) b(n-1,k,j) + (n-k) b(n-1,k-1,j)        for j < n
// b(n,k,n) = k b(n-1,k,n-1) + (n-k+1) b(n-1,k-1,n-1)
fn build_little_b(n_max: usize) -> Vec<TriangleTable> {
    let mut tables = vec![TriangleTable::new(Family::LittleB, 0, vec![vec![BigCount::one()]])];
    for n in 1..=n_max {
        let prev = &tables[n - 1];
        let mut rows = vec![vec![BigCount::zero(); n + 1]; n + 1];
        for (k, row) in rows.iter_mut().enumerate() {
            let ki = k as i64;
            for (j, cell) in row.iter_mut().enumerate() {
                let ji = j as i64;
                *cell = if j < n {
                    prev.cell(ki, ji) * BigCount::from(k + 1) + prev.cell(ki - 1, ji) * BigCount::from(n - k)
                } else {
                    prev.cell(ki, ji - 1) * BigCount::from(k)
                        + prev.cell(ki - 1, ji - 1) * BigCount::from(n - k + 1)
                };
            }
        }
        tables.push(TriangleTable::new(Family::LittleB, n, rows));
    }
    tables
}

/// `A(n,k)` by recurrence; zero outside `0 <= k <= n`.
pub fn eulerian_a(n: usize, k: i64) -> BigCount {
    EulerianTables::new(n).a(n, k)
}

/// `B(n,k)` by recurrence; zero outside `0 <= k <= n`.
pub fn eulerian_b(n: usize, k: i64) -> BigCount {
    EulerianTables::new(n).b(n, k)
}

/// `B(n,k,j)` by recurrence; zero outside the index square.
pub fn big_b(n: usize, k: i64, j: i64) -> BigCount {
    EulerianTables::new(n).big_b(n, k, j)
}

/// `b(n,k,j)` by recurrence; zero outside the index square.
pub fn little_b(n: usize, k: i64, j: i64) -> BigCount {
    EulerianTables::new(n).little_b(n, k, j)
}

// ---------------------------------------------------------------------------
// Closed formulas

fn pow_convention(base: u64, exp: usize) -> BigInt {
    // 0^0 = 1
    Pow::pow(BigInt::from(base), exp)
}

fn narrow(formula: &'static str, n: usize, k: i64, j: i64, value: BigInt) -> Result<BigCount, NumbersError> {
    match value.sign() {
        Sign::Minus => Err(NumbersError::NegativeSum {
            formula,
            n,
            k,
            j,
            value,
        }),
        _ => Ok(value.magnitude().clone()),
    }
}

fn require_range(formula: &'static str, n: usize, k: i64, j: i64) -> Result<(usize, usize), NumbersError> {
    match (in_range(n, k), in_range(n, j)) {
        (Some(k), Some(j)) => Ok((k, j)),
        _ => Err(NumbersError::OutOfRange { formula, n, k, j }),
    }
}

/// `sum_{i=0}^{k} (-1)^(k-i) C(n+1, k-i) i^j (i+1)^(n-j)` with signed intermediates.
fn alternating_sum(pascal: &Pascal, n: usize, k: usize, term: impl Fn(u64) -> BigInt) -> BigInt {
    let mut total = BigInt::zero();
    for i in 0..=k {
        let c = BigInt::from(pascal.get(n + 1, (k - i) as i64));
        let t = c * term(i as u64);
        if (k - i).is_multiple_of(2) {
            total += t;
        } else {
            total -= t;
        }
    }
    total
}

/// `A(n,k) = sum_{i=0}^{k} (-1)^(k-i) C(n+1,k-i) (i+1)^n`.
pub fn eulerian_a_formula(n: usize, k: i64) -> Result<BigCount, NumbersError> {
    let (ku, _) = require_range("eulerian_a_formula", n, k, 0)?;
    let pascal = Pascal::new(n + 1);
    let sum = alternating_sum(&pascal, n, ku, |i| pow_convention(i + 1, n));
    narrow("eulerian_a_formula", n, k, 0, sum)
}

/// `B(n,k) = sum_{i=0}^{k} (-1)^(k-i) C(n+1,k-i) (2i+1)^n`.
pub fn eulerian_b_formula(n: usize, k: i64) -> Result<BigCount, NumbersError> {
    let (ku, _) = require_range("eulerian_b_formula", n, k, 0)?;
    let pascal = Pascal::new(n + 1);
    let sum = alternating_sum(&pascal, n, ku, |i| pow_convention(2 * i + 1, n));
    narrow("eulerian_b_formula", n, k, 0, sum)
}

/// `b(n,k,j) = sum_{i=0}^{k} (-1)^(k-i) C(n+1,k-i) i^j (i+1)^(n-j)`, with `0^0 = 1`.
pub fn little_b_formula(n: usize, k: i64, j: i64) -> Result<BigCount, NumbersError> {
    let (ku, ju) = require_range("little_b_formula", n, k, j)?;
    let pascal = Pascal::new(n + 1);
    let sum = alternating_sum(&pascal, n, ku, |i| pow_convention(i, ju) * pow_convention(i + 1, n - ju));
    narrow("little_b_formula", n, k, j, sum)
}

/// `B(n,k,j) = C(n,j) * sum_{i=0}^{k} (-1)^(k-i) C(n+1,k-i) i^j (i+1)^(n-j)`.
pub fn big_b_formula(n: usize, k: i64, j: i64) -> Result<BigCount, NumbersError> {
    let (ku, ju) = require_range("big_b_formula", n, k, j)?;
    let pascal = Pascal::new(n + 1);
    let sum = alternating_sum(&pascal, n, ku, |i| pow_convention(i, ju) * pow_convention(i + 1, n - ju));
    let scaled = BigInt::from(pascal.get(n, j)) * sum;
    narrow("big_b_formula", n, k, j, scaled)
}

/// Returns `B(n,k,j) / C(n,j)`, failing if the division leaves a remainder.
pub fn divisibility_witness(tables: &EulerianTables, n: usize, k: i64, j: i64) -> Result<BigCount, NumbersError> {
    require_range("divisibility_witness", n, k, j)?;
    let value = tables.big_b(n, k, j);
    let binomial = tables.binomial(n, j);
    let (q, r) = value.div_rem(&binomial);
    if r.is_zero() {
        Ok(q)
    } else {
        Err(NumbersError::NotDivisible {
            n,
            k,
            j,
            value,
            binomial,
        })
    }
}

/// Sums of `B(n,k,j)` over even and over odd `j`.
///
/// Fails unless they equal `B(n,k)/2 + (-1)^k C(n,k)/2` and
/// `B(n,k)/2 - (-1)^k C(n,k)/2` respectively.
pub fn parity_sums(tables: &EulerianTables, n: usize, k: i64) -> Result<(BigInt, BigInt), NumbersError> {
    require_range("parity_sums", n, k, 0)?;
    let mut even = BigInt::zero();
    let mut odd = BigInt::zero();
    for j in 0..=n {
        let v = BigInt::from(tables.big_b(n, k, j as i64));
        if j % 2 == 0 {
            even += v;
        } else {
            odd += v;
        }
    }
    let total = BigInt::from(tables.b(n, k));
    let mut signed_binomial = BigInt::from(tables.binomial(n, k));
    if k % 2 != 0 {
        signed_binomial = -signed_binomial;
    }
    let twice_even = &total + &signed_binomial;
    let twice_odd = &total - &signed_binomial;
    let two = BigInt::from(2);
    if &even * &two == twice_even && &odd * &two == twice_odd {
        Ok((even, odd))
    } else {
        Err(NumbersError::ParityMismatch {
            n,
            k,
            even,
            odd,
            expected_even: twice_even / &two,
            expected_odd: twice_odd / &two,
        })
    }
}

// ---------------------------------------------------------------------------
// Identity sweeps

fn idx3(n: usize, k: i64, j: i64) -> String {
    format!("(n={n}, k={k}, j={j})")
}

fn idx2(n: usize, k: i64) -> String {
    format!("(n={n}, k={k})")
}

fn factorial(n: usize) -> BigCount {
    (1..=n).fold(BigCount::one(), |acc, i| acc * BigCount::from(i))
}

/// Boundary values of `B` and `b`, and the extended recurrence on the edges.
pub fn check_boundaries(tables: &EulerianTables, n_max: usize) -> CheckReport {
    let mut report = CheckReport::new("boundaries");
    for n in 0..=n_max {
        for k in 0..=n as i64 {
            let a_k = tables.a(n, k);
            let a_rev = tables.a(n, n as i64 - k);
            report.expect_eq("B(n,k,0)=A(n,k)", idx2(n, k), &a_k, &tables.big_b(n, k, 0));
            report.expect_eq("B(n,k,n)=A(n,n-k)", idx2(n, k), &a_rev, &tables.big_b(n, k, n as i64));
            report.expect_eq("b(n,k,0)=A(n,k)", idx2(n, k), &a_k, &tables.little_b(n, k, 0));
            report.expect_eq("b(n,k,n)=A(n,n-k)", idx2(n, k), &a_rev, &tables.little_b(n, k, n as i64));
            for j in 0..=n as i64 {
                let want0 = BigCount::from(u8::from(j == 0));
                let wantn = BigCount::from(u8::from(j == n as i64));
                report.expect_eq("B(n,0,j)=[j=0]", idx2(n, j), &want0, &tables.big_b(n, 0, j));
                report.expect_eq("B(n,n,j)=[j=n]", idx2(n, j), &wantn, &tables.big_b(n, n as i64, j));
                report.expect_eq("b(n,0,j)=[j=0]", idx2(n, j), &want0, &tables.little_b(n, 0, j));
                report.expect_eq("b(n,n,j)=[j=n]", idx2(n, j), &wantn, &tables.little_b(n, n as i64, j));
                if n >= 1 {
                    let rec = tables.big_b(n - 1, k, j) * BigCount::from((k + 1) as u64)
                        + tables.big_b(n - 1, k - 1, j) * BigCount::from(n as u64 - k as u64)
                        + tables.big_b(n - 1, k, j - 1) * BigCount::from(k as u64)
                        + tables.big_b(n - 1, k - 1, j - 1) * BigCount::from(n as u64 - k as u64 + 1);
                    report.expect_eq("B recurrence, extended by zero", idx3(n, k, j), &tables.big_b(n, k, j), &rec);
                }
            }
        }
    }
    report
}

/// `B(n,k,j) = B(n,n-k,n-j)`, `b(n,k,j) = b(n,n-k,n-j)` and
/// `b(n,k,j-1) - b(n,k,j) = b(n-1,k,j-1) - b(n-1,k-1,j-1)` for `1 <= j,k <= n`.
pub fn check_symmetries(tables: &EulerianTables, n_max: usize) -> CheckReport {
    let mut report = CheckReport::new("symmetry");
    for n in 0..=n_max {
        let ni = n as i64;
        for k in 0..=ni {
            for j in 0..=ni {
                report.expect_eq("B(n,k,j)=B(n,n-k,n-j)", idx3(n, k, j), &tables.big_b(n, k, j), &tables.big_b(n, ni - k, ni - j));
                report.expect_eq("b(n,k,j)=b(n,n-k,n-j)", idx3(n, k, j), &tables.little_b(n, k, j), &tables.little_b(n, ni - k, ni - j));
                if n >= 1 && k >= 1 && j >= 1 {
                    let lhs = BigInt::from(tables.little_b(n, k, j - 1)) - BigInt::from(tables.little_b(n, k, j));
                    let rhs = BigInt::from(tables.little_b(n - 1, k, j - 1)) - BigInt::from(tables.little_b(n - 1, k - 1, j - 1));
                    report.expect_eq("b difference identity", idx3(n, k, j), &rhs, &lhs);
                }
            }
        }
    }
    report
}

/// The two `b` recurrences (one valid for `j < n`, one for `j > 0`) and the
/// prefix/suffix sum recurrence, each evaluated independently of how the
/// table was built.
pub fn check_little_b_recurrences(tables: &EulerianTables, n_max: usize) -> CheckReport {
    let mut report = CheckReport::new("little-b recurrences");
    for n in 1..=n_max {
        let ni = n as i64;
        for k in 0..=ni {
            let ku = k as u64;
            for j in 0..=ni {
                let value = tables.little_b(n, k, j);
                if j < ni {
                    let rec = tables.little_b(n - 1, k, j) * BigCount::from(ku + 1)
                        + tables.little_b(n - 1, k - 1, j) * BigCount::from(n as u64 - ku);
                    report.expect_eq("b(n,k,j)=(k+1)b(n-1,k,j)+(n-k)b(n-1,k-1,j)", idx3(n, k, j), &value, &rec);
                }
                if j > 0 {
                    let rec = tables.little_b(n - 1, k, j - 1) * BigCount::from(ku)
                        + tables.little_b(n - 1, k - 1, j - 1) * BigCount::from(n as u64 - ku + 1);
                    report.expect_eq("b(n,k,j)=k b(n-1,k,j-1)+(n-k+1)b(n-1,k-1,j-1)", idx3(n, k, j), &value, &rec);
                }
                let prefix: BigCount = (0..j).map(|i| tables.little_b(n - 1, k - 1, i)).sum();
                let suffix: BigCount = (j..ni).map(|i| tables.little_b(n - 1, k, i)).sum();
                report.expect_eq("b prefix/suffix sum recurrence", idx3(n, k, j), &value, &(prefix + suffix));
            }
        }
    }
    report
}

/// The alternating-sum closed forms against the recurrence-built tables.
pub fn check_closed_formulas(tables: &EulerianTables, n_max: usize) -> CheckReport {
    let mut report = CheckReport::new("closed formulas");
    let show = |r: Result<BigCount, NumbersError>| r.map(|v| v.to_string()).unwrap_or_else(|e| e.to_string());
    for n in 0..=n_max {
        for k in 0..=n as i64 {
            let f = show(eulerian_a_formula(n, k));
            report.expect_eq("A(n,k) alternating sum", idx2(n, k), &tables.a(n, k).to_string(), &f);
            let f = show(eulerian_b_formula(n, k));
            report.expect_eq("B(n,k) alternating sum", idx2(n, k), &tables.b(n, k).to_string(), &f);
            for j in 0..=n as i64 {
                let f = show(little_b_formula(n, k, j));
                report.expect_eq("b(n,k,j) alternating sum", idx3(n, k, j), &tables.little_b(n, k, j).to_string(), &f);
                let f = show(big_b_formula(n, k, j));
                report.expect_eq("B(n,k,j) alternating sum", idx3(n, k, j), &tables.big_b(n, k, j).to_string(), &f);
            }
        }
    }
    report
}

/// `C(n,j) | B(n,k,j)` with quotient `b(n,k,j)`.
pub fn check_divisibility(tables: &EulerianTables, n_max: usize) -> CheckReport {
    let mut report = CheckReport::new("divisibility");
    for n in 0..=n_max {
        for k in 0..=n as i64 {
            for j in 0..=n as i64 {
                let witness = divisibility_witness(tables, n, k, j);
                match witness {
                    Ok(q) => report.expect_eq("B(n,k,j)/C(n,j)=b(n,k,j)", idx3(n, k, j), &tables.little_b(n, k, j), &q),
                    Err(e) => report.expect(false, "C(n,j) divides B(n,k,j)", idx3(n, k, j), || {
                        ("exact division".into(), e.to_string())
                    }),
                }
            }
        }
    }
    report
}

/// Row and column sums of both arrays and the parity-refined row sums.
pub fn check_sum_identities(tables: &EulerianTables, n_max: usize) -> CheckReport {
    let mut report = CheckReport::new("sum identities");
    for n in 0..=n_max {
        let ni = n as i64;
        let n_fact = factorial(n);
        for k in 0..=ni {
            let row: BigCount = (0..=ni).map(|j| tables.big_b(n, k, j)).sum();
            report.expect_eq("sum_j B(n,k,j)=B(n,k)", idx2(n, k), &tables.b(n, k), &row);
            let row: BigCount = (0..=ni).map(|j| tables.little_b(n, k, j)).sum();
            let a_next = a_next(tables, n, k);
            report.expect_eq("sum_j b(n,k,j)=A(n+1,k)", idx2(n, k), &a_next, &row);
            if let Err(e) = parity_sums(tables, n, k) {
                report.expect(false, "parity-refined sums", idx2(n, k), || ("identity".into(), e.to_string()));
            } else {
                report.checks += 1;
            }
        }
        for j in 0..=ni {
            let col: BigCount = (0..=ni).map(|k| tables.big_b(n, k, j)).sum();
            let want = tables.binomial(n, j) * &n_fact;
            report.expect_eq("sum_k B(n,k,j)=C(n,j) n!", idx2(n, j), &want, &col);
            let col: BigCount = (0..=ni).map(|k| tables.little_b(n, k, j)).sum();
            report.expect_eq("sum_k b(n,k,j)=n!", idx2(n, j), &n_fact, &col);
        }
    }
    report
}

// A(n+1,k) may sit one order beyond the tables.
fn a_next(tables: &EulerianTables, n: usize, k: i64) -> BigCount {
    if n < tables.n_max {
        tables.a(n + 1, k)
    } else {
        eulerian_a(n + 1, k)
    }
}

/// `B(n,k,j)(n-j) = n[(k+1)B(n-1,k,j) + (n-k)B(n-1,k-1,j)]` for `j < n` and
/// `B(n,k,j) j = n[k B(n-1,k,j-1) + (n-k+1) B(n-1,k-1,j-1)]` for `j > 0`.
pub fn check_fractional_recurrences(tables: &EulerianTables, n_max: usize) -> CheckReport {
    let mut report = CheckReport::new("fractional recurrences");
    for n in 1..=n_max {
        let ni = n as i64;
        let nn = BigCount::from(n);
        for k in 0..=ni {
            let ku = k as u64;
            for j in 0..=ni {
                let value = tables.big_b(n, k, j);
                if j < ni {
                    let lhs = &value * BigCount::from((ni - j) as u64);
                    let rhs = &nn
                        * (tables.big_b(n - 1, k, j) * BigCount::from(ku + 1)
                            + tables.big_b(n - 1, k - 1, j) * BigCount::from(n as u64 - ku));
                    report.expect_eq("B(n,k,j)(n-j) recurrence", idx3(n, k, j), &rhs, &lhs);
                }
                if j > 0 {
                    let lhs = &value * BigCount::from(j as u64);
                    let rhs = &nn
                        * (tables.big_b(n - 1, k, j - 1) * BigCount::from(ku)
                            + tables.big_b(n - 1, k - 1, j - 1) * BigCount::from(n as u64 - ku + 1));
                    report.expect_eq("B(n,k,j) j recurrence", idx3(n, k, j), &rhs, &lhs);
                }
            }
        }
    }
    report
}

/// `B(n,k,j)^2 k(n-k) >= B(n,k-1,j) B(n,k+1,j) (k+1)(n-k+1)` for `0 < k < n`.
pub fn check_log_concavity(tables: &EulerianTables, n_max: usize) -> CheckReport {
    let mut report = CheckReport::new("log-concavity");
    for n in 2..=n_max {
        let ni = n as i64;
        for j in 0..=ni {
            for k in 1..ni {
                let ku = k as u64;
                let mid = tables.big_b(n, k, j);
                let lhs = &mid * &mid * BigCount::from(ku * (n as u64 - ku));
                let rhs = tables.big_b(n, k - 1, j)
                    * tables.big_b(n, k + 1, j)
                    * BigCount::from((ku + 1) * (n as u64 - ku + 1));
                report.expect(lhs >= rhs, "strong log-concavity in k", idx3(n, k, j), || {
                    (format!(">= {rhs}"), lhs.to_string())
                });
            }
        }
    }
    report
}

/// `B(n,1,0) = 2^n - n - 1` and `B(n,1,j) = C(n,j) 2^(n-j)` for `1 <= j <= n`.
pub fn check_special_values(tables: &EulerianTables, n_max: usize) -> CheckReport {
    let mut report = CheckReport::new("special values");
    for n in 1..=n_max {
        let want = (BigCount::one() << n) - BigCount::from(n + 1);

        report.expect_eq("B(n,1,0)=2^n-n-1", idx2(n, 1), &want, &tables.big_b(n, 1, 0));
        for j in 1..=n {
            let want = tables.binomial(n, j as i64) << (n - j);
            report.expect_eq("B(n,1,j)=C(n,j)2^(n-j)", idx3(n, 1, j as i64), &want, &tables.big_b(n, 1, j as i64));
        }
    }
    report
}

/// Result of the lexicographic unimodality check for one `n`.
#[derive(Debug, Clone)]
pub struct LexReport {
    pub n: usize,
    /// Parts (a) and (b) and unimodality along the order.
    pub report: CheckReport,
    pub max_value: BigCount,
    /// Every `(k, j)` attaining `max_value`, in `⪯` order.
    pub argmax: Vec<(usize, usize)>,
    /// Positions named as maximal by the proposition, with their values.
    pub claimed: Vec<((usize, usize), BigCount)>,
    pub claimed_attains_max: bool,
    /// For odd `n`, the positions `((n-1)/2, 0)` and `((n+1)/2, n)` (the claim
    /// with the `j` coordinates exchanged). Empty for even `n`.
    pub swapped: Vec<((usize, usize), BigCount)>,
    pub swapped_attains_max: bool,
}

/// Positions of `{0..n}^2` listed along `⪯`: `k` ascending, and within a
/// row `j` descending, so `(k, 0)` is followed by `(k+1, n)`.
pub fn lexicographic_order(n: usize) -> Vec<(usize, usize)> {
    (0..=n)
        .flat_map(|k| (0..=n).rev().map(move |j| (k, j)))
        .collect()
}

/// Index of the first strict descent after which the sequence never rises,
/// or `None` if it is not unimodal.
fn unimodal_peak<T: PartialOrd>(values: &[T]) -> Option<usize> {
    let mut i = 0;
    while i + 1 < values.len() && values[i] <= values[i + 1] {
        i += 1;
    }
    let peak = i;
    while i + 1 < values.len() {
        if values[i] < values[i + 1] {
            return None;
        }
        i += 1;
    }
    Some(peak)
}

/// Parts (a), (b) and (c) of the lexicographic unimodality statement for `b(n,·,·)`.
///
/// The maximal positions stated for odd `n` do not match the tables, so both
/// the stated and the coordinate-swapped positions are evaluated and reported;
/// only the inequalities and the unimodality are recorded as checks.
pub fn check_lexicographic_unimodality(tables: &EulerianTables, n: usize) -> LexReport {
    assert!(n >= 1, "lexicographic unimodality is stated for n >= 1");
    let mut report = CheckReport::new(format!("lexicographic unimodality n={n}"));
    let ni = n as i64;
    let b = |k: i64, j: i64| tables.little_b(n, k, j);
    let odd = n % 2 == 1;

    // (a) b(n,k,j-1) >= b(n,k,j)
    for k in 0..=ni {
        for j in 1..=ni {
            let applies = 2 * k < ni || (2 * k == ni && 2 * j > ni);
            if !applies {
                continue;
            }
            let (hi, lo) = (b(k, j - 1), b(k, j));
            report.expect(hi >= lo, "(a) b(n,k,j-1) >= b(n,k,j)", idx3(n, k, j), || {
                (format!(">= {lo}"), hi.to_string())
            });
            let exempt = (k == 0 && j >= 2) || (odd && 2 * k == ni - 1 && j == 1);
            if !exempt {
                report.expect(hi > lo, "(a) strict", idx3(n, k, j), || (format!("> {lo}"), hi.to_string()));
            } else if hi == lo {
                report.note(format!("(a) equality at exempt position (k={k}, j={j})"));
            }
        }
    }

    // (b) b(n,k-1,j) <= b(n,k,j)
    for k in 1..=ni {
        for j in 0..=ni {
            let applies = 2 * k <= ni || (odd && 2 * k == ni + 1 && 2 * j >= ni + 1);
            if !applies {
                continue;
            }
            let (lo, hi) = (b(k - 1, j), b(k, j));
            report.expect(lo <= hi, "(b) b(n,k-1,j) <= b(n,k,j)", idx3(n, k, j), || {
                (format!(">= {lo}"), hi.to_string())
            });
            let exempt = !odd && 2 * k == ni && j == 0;
            if !exempt {
                report.expect(lo < hi, "(b) strict", idx3(n, k, j), || (format!("> {lo}"), hi.to_string()));
            } else if lo == hi {
                report.note(format!("(b) equality at exempt position (k={k}, j={j})"));
            }
        }
    }

    // (c) unimodal along ⪯
    let order = lexicographic_order(n);
    let values: Vec<BigCount> = order.iter().map(|&(k, j)| b(k as i64, j as i64)).collect();
    let peak = unimodal_peak(&values);
    report.expect(peak.is_some(), "(c) unimodal along the lexicographic order", format!("(n={n})"), || {
        ("unimodal".into(), "sequence rises after falling".into())
    });

    let max_value = values.iter().max().cloned().unwrap_or_default();
    let argmax: Vec<(usize, usize)> = order
        .iter()
        .zip(&values)
        .filter(|(_, v)| **v == max_value)
        .map(|(p, _)| *p)
        .collect();

    let at = |k: usize, j: usize| ((k, j), b(k as i64, j as i64));
    let (claimed, swapped) = if odd {
        (
            vec![at((n - 1) / 2, n), at((n + 1) / 2, 0)],
            vec![at((n - 1) / 2, 0), at((n + 1) / 2, n)],
        )
    } else {
        (vec![at(n / 2, n / 2)], Vec::new())
    };
    let claimed_attains_max = claimed.iter().all(|(_, v)| *v == max_value);
    let swapped_attains_max = !swapped.is_empty() && swapped.iter().all(|(_, v)| *v == max_value);

    let fmt_positions = |ps: &[((usize, usize), BigCount)]| {
        ps.iter()
            .map(|((k, j), v)| format!("b({n},{k},{j})={v}"))
            .collect::<Vec<_>>()
            .join(", ")
    };
    report.note(format!("maximum {max_value} attained at {argmax:?}"));
    report.note(format!(
        "stated maximal positions: {} ({})",
        fmt_positions(&claimed),
        if claimed_attains_max { "maximal" } else { "NOT maximal" }
    ));
    if odd {
        report.note(format!(
            "j-swapped positions: {} ({})",
            fmt_positions(&swapped),
            if swapped_attains_max { "maximal" } else { "NOT maximal" }
        ));
    }

    LexReport {
        n,
        report,
        max_value,
        argmax,
        claimed,
        claimed_attains_max,
        swapped,
        swapped_attains_max,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(v: u64) -> BigCount {
        BigCount::from(v)
    }

    #[test]
    fn eulerian_a_values() {
        assert_eq!(eulerian_a(0, 0), c(1));
        assert_eq!(eulerian_a(4, 1), c(11));
        assert_eq!(eulerian_a(4, 2), c(11));
        assert_eq!(eulerian_a(4, 4), c(0));
        assert_eq!(eulerian_a(4, -1), c(0));
        assert_eq!(eulerian_a(4, 7), c(0));
    }

    #[test]
    fn eulerian_a_formula_values() {
        assert_eq!(eulerian_a_formula(4, 1).unwrap(), c(11));
        assert_eq!(eulerian_a_formula(5, 2).unwrap(), c(66));
        for n in 0..=12 {
            assert_eq!(eulerian_a_formula(n, 0).unwrap(), c(1));
        }
        assert!(matches!(eulerian_a_formula(3, 4), Err(NumbersError::OutOfRange { .. })));
        assert!(matches!(eulerian_a_formula(3, -1), Err(NumbersError::OutOfRange { .. })));
    }

    #[test]
    fn eulerian_b_values() {
        for n in 0..8 {
            assert_eq!(eulerian_b(n, 0), c(1));
        }
        assert_eq!(eulerian_b(2, 1), c(6));
        assert_eq!(eulerian_b(5, 2), c(1682));
        assert_eq!(eulerian_b_formula(5, 2).unwrap(), c(1682));
    }

    #[test]
    fn big_b_values() {
        assert_eq!(big_b(5, 2, 3), c(480));
        assert_eq!(big_b(4, 1, 1), c(32));
        assert_eq!(big_b(7, 0, 0), c(1));
        assert_eq!(big_b(4, 1, 5), c(0));
        assert_eq!(big_b(4, -1, 0), c(0));
        assert_eq!(big_b_formula(4, 1, 2).unwrap(), c(24));
        assert_eq!(big_b_formula(3, 2, 2).unwrap(), c(12));
        assert_eq!(big_b_formula(6, 3, 3).unwrap(), c(7680));
        assert!(big_b_formula(3, 0, 4).is_err());
    }

    #[test]
    fn little_b_values() {
        assert_eq!(little_b(6, 2, 3), c(160));
        assert_eq!(little_b(4, 2, 2), c(16));
        for n in 0..8 {
            assert_eq!(little_b(n, n as i64, n as i64), c(1));
        }
        assert_eq!(little_b_formula(6, 2, 3).unwrap(), c(160));
        // 0^0 = 1 makes b(n,0,0) = 1
        assert_eq!(little_b_formula(5, 0, 0).unwrap(), c(1));
    }

    #[test]
    fn divisibility_examples() {
        let t = EulerianTables::new(6);
        assert_eq!(divisibility_witness(&t, 5, 2, 1).unwrap(), c(66));
        assert_eq!(divisibility_witness(&t, 4, 2, 2).unwrap(), c(16));
        for k in 0..=6 {
            assert_eq!(divisibility_witness(&t, 6, k, 0).unwrap(), t.big_b(6, k, 0));
        }
        assert!(divisibility_witness(&t, 4, 5, 0).is_err());
    }

    #[test]
    fn parity_examples() {
        let t = EulerianTables::new(6);
        let (even, odd) = parity_sums(&t, 3, 1).unwrap();
        assert_eq!(even, BigInt::from(10));
        assert_eq!(odd, BigInt::from(13));
        let (even, odd) = parity_sums(&t, 2, 1).unwrap();
        assert_eq!((even, odd), (BigInt::from(2), BigInt::from(4)));
        for n in 0..=6 {
            assert_eq!(parity_sums(&t, n, 0).unwrap(), (BigInt::from(1), BigInt::from(0)));
        }
    }

    #[test]
    fn fractional_recurrence_example() {
        let t = EulerianTables::new(5);
        // 480 * 2 = 5 * (3 * 56 + 3 * 8)
        let lhs = t.big_b(5, 2, 3) * c(2);
        let rhs = c(5) * (t.big_b(4, 2, 3) * c(3) + t.big_b(4, 1, 3) * c(3));
        assert_eq!(lhs, rhs);
        assert_eq!(lhs, c(960));
    }

    #[test]
    fn sweeps_pass_small() {
        let t = EulerianTables::new(8);
        for report in [
            check_boundaries(&t, 8),
            check_symmetries(&t, 8),
            check_little_b_recurrences(&t, 8),
            check_closed_formulas(&t, 8),
            check_divisibility(&t, 8),
            check_sum_identities(&t, 8),
            check_fractional_recurrences(&t, 8),
            check_log_concavity(&t, 8),
            check_special_values(&t, 8),
        ] {
            assert!(report.passed(), "{report}: {:?}", report.first_failure());
            assert!(report.checks > 0);
        }
    }

    #[test]
    fn symmetry_sweep_detects_corruption() {
        let mut t = EulerianTables::new(3);
        t.big_b[3].rows[1][1] += 1u8;
        let report = check_symmetries(&t, 3);
        assert!(!report.passed());
        assert!(report.first_failure().unwrap().identity.starts_with("B(n,k,j)"));
    }

    #[test]
    fn lex_order_successors() {
        let order = lexicographic_order(2);
        assert_eq!(order[0], (0, 2));
        assert_eq!(order[2], (0, 0));
        assert_eq!(order[3], (1, 2));
        assert_eq!(order.len(), 9);
    }

    #[test]
    fn lex_unimodality_small() {
        let t = EulerianTables::new(6);
        let r2 = check_lexicographic_unimodality(&t, 2);
        assert!(r2.report.passed(), "{:?}", r2.report.failures);
        assert_eq!(r2.max_value, c(2));
        assert!(r2.claimed_attains_max);

        let r6 = check_lexicographic_unimodality(&t, 6);
        assert!(r6.report.passed());
        assert_eq!(r6.max_value, c(384));
        assert_eq!(r6.argmax, vec![(3, 3)]);

        let r5 = check_lexicographic_unimodality(&t, 5);
        assert!(r5.report.passed(), "{:?}", r5.report.failures);
        assert_eq!(r5.max_value, c(66));
        assert!(r5.argmax.contains(&(2, 0)) && r5.argmax.contains(&(3, 5)));
        assert!(!r5.claimed_attains_max);
        assert_eq!(r5.claimed[0].1, c(26));
        assert!(r5.swapped_attains_max);
    }

    #[test]
    fn unimodal_peak_detection() {
        assert_eq!(unimodal_peak(&[1, 2, 2, 3, 1, 0]), Some(3));
        assert_eq!(unimodal_peak(&[1, 2, 1, 2]), None);
        assert_eq!(unimodal_peak::<i32>(&[]), Some(0));
    }
}
