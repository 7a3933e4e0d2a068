//! Type A and type B permutations, their descent statistics, and exhaustive
//! enumeration used as the brute-force oracle for the number tables.
//!
//! Conventions differ between the two types and are never mixed: a type B
//! permutation is the sequence `(0, σ1, ..., σn)` and its descents are counted
//! over all `n + 1` entries, so a negative `σ1` is a descent; a type A
//! permutation is `(τ1, ..., τn)` with no prepended zero.

use std::fmt;
use std::thread;

use num_bigint::BigUint;
use thiserror::Error;

use crate::numbers::BigCount;
use crate::report::CheckReport;

/// Largest order accepted by the enumerators unless `SEB_MAX_ENUM` says otherwise.
pub const DEFAULT_ENUMERATION_CAP: usize = 8;

/// Hard ceiling for the subset bitmask representation.
const MAX_ORDER: usize = 63;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PermError {
    #[error("order {n} exceeds the enumeration cap {cap} (set SEB_MAX_ENUM to raise it)")]
    EnumerationCap { n: usize, cap: usize },
    #[error("not a permutation of 1..={n}: {entries:?}")]
    NotAPermutation { n: usize, entries: Vec<i64> },
    #[error("signed permutation must start with 0, got {first}")]
    MissingLeadingZero { first: i64 },
    #[error("insertion position {position} outside 1..={max}")]
    InvalidPosition { position: usize, max: usize },
    #[error("order {n} is above the supported maximum {MAX_ORDER}")]
    OrderTooLarge { n: usize },
    #[error("subset element {element} outside 1..={n}")]
    SubsetElement { element: u32, n: usize },
}

/// The active enumeration cap: `SEB_MAX_ENUM` if set and parseable, else the default.
pub fn enumeration_cap() -> usize {
    std::env::var("SEB_MAX_ENUM")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_ENUMERATION_CAP)
}

fn check_cap(n: usize) -> Result<(), PermError> {
    let cap = enumeration_cap().min(MAX_ORDER);
    if n > cap {
        Err(PermError::EnumerationCap { n, cap })
    } else {
        Ok(())
    }
}

/// Number of `i >= 1` with `a[i-1] > a[i]`.
pub fn descents<T: PartialOrd>(seq: &[T]) -> usize {
    seq.windows(2).filter(|w| w[0] > w[1]).count()
}

/// Number of descents `a[i-1] > a[i]` with `a[i-1] - a[i] >= 2`.
pub fn big_descents(seq: &[u32]) -> usize {
    seq.windows(2).filter(|w| w[0] >= w[1] + 2).count()
}

/// A subset of `{1, ..., n}` stored as a bitmask; bit `i - 1` marks `i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Subset(u64);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub fn from_bits(bits: u64) -> Self {
        Subset(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    /// `{1, ..., m}`.
    pub fn initial(m: usize) -> Self {
        assert!(m <= MAX_ORDER);
        Subset((1u64 << m) - 1)
    }

    pub fn from_elements(n: usize, elements: &[u32]) -> Result<Self, PermError> {
        let mut bits = 0;
        for &e in elements {
            if e == 0 || e as usize > n {
                return Err(PermError::SubsetElement { element: e, n });
            }
            bits |= 1u64 << (e - 1);
        }
        Ok(Subset(bits))
    }

    pub fn contains(self, element: u32) -> bool {
        element >= 1 && self.0 >> (element - 1) & 1 == 1
    }

    pub fn insert(&mut self, element: u32) {
        self.0 |= 1u64 << (element - 1);
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Elements in ascending order.
    pub fn elements(self) -> Vec<u32> {
        (0..64).filter(|i| self.0 >> i & 1 == 1).map(|i| i + 1).collect()
    }

    /// Every subset of `{1..n}` of size `size`, in increasing bitmask order.
    pub fn all_of_size(n: usize, size: usize) -> impl Iterator<Item = Subset> {
        (0u64..1 << n).filter(move |b| b.count_ones() as usize == size).map(Subset)
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.elements().iter().map(|e| e.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// A permutation `(τ1, ..., τn)` of `{1, ..., n}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TypeAPermutation(Vec<u32>);

impl TypeAPermutation {
    pub fn new(entries: Vec<u32>) -> Result<Self, PermError> {
        let n = entries.len();
        let mut seen = vec![false; n + 1];
        for &e in &entries {
            let e = e as usize;
            if e == 0 || e > n || seen[e] {
                return Err(PermError::NotAPermutation {
                    n,
                    entries: entries.iter().map(|&e| e as i64).collect(),
                });
            }
            seen[e] = true;
        }
        Ok(Self(entries))
    }

    pub fn identity(n: usize) -> Self {
        Self((1..=n as u32).collect())
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    /// `τ(i)` for `1 <= i <= n`.
    pub fn apply(&self, i: u32) -> u32 {
        self.0[i as usize - 1]
    }

    /// Descents of `(τ1, ..., τn)` with no prepended zero.
    pub fn des(&self) -> usize {
        descents(&self.0)
    }

    pub fn big_des(&self) -> usize {
        big_descents(&self.0)
    }

    pub fn first(&self) -> Option<u32> {
        self.0.first().copied()
    }
}

impl fmt::Display for TypeAPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|e| e.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Descent and sign statistics of a signed permutation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DescentStats {
    pub des: usize,
    pub neg: usize,
    pub negative_set: Subset,
}

/// A type B permutation stored as `(0, σ1, ..., σn)`.
///
/// Only the positive half is stored; `σ(-i) = -σ(i)` is implicit.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPermutation(Vec<i32>);

impl SignedPermutation {
    /// Builds from `(σ1, ..., σn)` (no leading zero).
    pub fn new(entries: &[i32]) -> Result<Self, PermError> {
        let n = entries.len();
        if n > MAX_ORDER {
            return Err(PermError::OrderTooLarge { n });
        }
        let mut seen = vec![false; n + 1];
        for &e in entries {
            let a = e.unsigned_abs() as usize;
            if a == 0 || a > n || seen[a] {
                return Err(PermError::NotAPermutation {
                    n,
                    entries: entries.iter().map(|&e| e as i64).collect(),
                });
            }
            seen[a] = true;
        }
        let mut seq = Vec::with_capacity(n + 1);
        seq.push(0);
        seq.extend_from_slice(entries);
        Ok(Self(seq))
    }

    /// Builds from the full sequence `(0, σ1, ..., σn)`.
    pub fn from_sequence(seq: &[i32]) -> Result<Self, PermError> {
        match seq.first() {
            Some(0) => Self::new(&seq[1..]),
            Some(&first) => Err(PermError::MissingLeadingZero { first: first as i64 }),
            None => Err(PermError::MissingLeadingZero { first: i64::MIN }),
        }
    }

    pub fn identity(n: usize) -> Self {
        Self((0..=n as i32).collect())
    }

    pub fn n(&self) -> usize {
        self.0.len() - 1
    }

    /// The full sequence including the leading zero.
    pub fn sequence(&self) -> &[i32] {
        &self.0
    }

    /// `(σ1, ..., σn)`.
    pub fn entries(&self) -> &[i32] {
        &self.0[1..]
    }

    pub fn des(&self) -> usize {
        descents(&self.0)
    }

    pub fn neg(&self) -> usize {
        self.0.iter().filter(|&&v| v < 0).count()
    }

    pub fn negative_set(&self) -> Subset {
        let mut set = Subset::EMPTY;
        for &v in &self.0[1..] {
            if v < 0 {
                set.insert(v.unsigned_abs());
            }
        }
        set
    }

    pub fn stats(&self) -> DescentStats {
        DescentStats {
            des: self.des(),
            neg: self.neg(),
            negative_set: self.negative_set(),
        }
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|e| e.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Rearranges `perm` into its lexicographic successor; `false` when it was the last.
fn next_permutation(perm: &mut [u32]) -> bool {
    if perm.len() < 2 {
        return false;
    }
    let mut i = perm.len() - 1;
    while i > 0 && perm[i - 1] >= perm[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = perm.len() - 1;
    while perm[j] <= perm[i - 1] {
        j -= 1;
    }
    perm.swap(i - 1, j);
    perm[i..].reverse();
    true
}

/// Lazily yields every permutation of `{1..n}` in lexicographic order.
#[derive(Debug, Clone)]
pub struct TypeAPermutations {
    current: Option<Vec<u32>>,
}

impl Iterator for TypeAPermutations {
    type Item = TypeAPermutation;

    fn next(&mut self) -> Option<Self::Item> {
        let out = self.current.clone()?;
        let cur = self.current.as_mut().expect("checked above");
        if !next_permutation(cur) {
            self.current = None;
        }
        Some(TypeAPermutation(out))
    }
}

/// All `n!` permutations of `{1..n}`, lexicographically.
pub fn enumerate_a(n: usize) -> Result<TypeAPermutations, PermError> {
    // Type A oracles go one order higher than type B ones for the same n.
    if n > enumeration_cap() + 1 {
        return Err(PermError::EnumerationCap {
            n,
            cap: enumeration_cap() + 1,
        });
    }
    Ok(TypeAPermutations {
        current: Some((1..=n as u32).collect()),
    })
}

/// Lazily yields every signed permutation of order `n`.
///
/// Order: unsigned permutations lexicographically; for each, sign patterns as
/// a binary counter where bit `i` negates `σ(i+1)`.
#[derive(Debug, Clone)]
pub struct SignedPermutations {
    n: usize,
    unsigned: Option<Vec<u32>>,
    /// Remaining permutations must keep this first entry (partitioned enumeration).
    fixed_first: Option<u32>,
    mask: u64,
}

impl SignedPermutations {
    fn advance(&mut self) {
        self.mask += 1;
        if self.mask >> self.n == 0 {
            return;
        }
        self.mask = 0;
        let Some(perm) = self.unsigned.as_mut() else { return };
        let first = perm.first().copied();
        if !next_permutation(perm) || (self.fixed_first.is_some() && perm.first().copied() != first) {
            self.unsigned = None;
        }
    }
}

impl Iterator for SignedPermutations {
    type Item = SignedPermutation;

    fn next(&mut self) -> Option<Self::Item> {
        let perm = self.unsigned.as_ref()?;
        let mut seq = Vec::with_capacity(self.n + 1);
        seq.push(0);
        for (i, &v) in perm.iter().enumerate() {
            let v = v as i32;
            seq.push(if self.mask >> i & 1 == 1 { -v } else { v });
        }
        self.advance();
        Some(SignedPermutation(seq))
    }
}

/// All `2^n n!` signed permutations of order `n`.
pub fn enumerate_b(n: usize) -> Result<SignedPermutations, PermError> {
    check_cap(n)?;
    Ok(SignedPermutations {
        n,
        unsigned: Some((1..=n as u32).collect()),
        fixed_first: None,
        mask: 0,
    })
}

/// The signed permutations whose unsigned first entry is `first`.
fn enumerate_b_with_first(n: usize, first: u32) -> SignedPermutations {
    let mut start = vec![first];
    start.extend((1..=n as u32).filter(|&v| v != first));
    SignedPermutations {
        n,
        unsigned: Some(start),
        fixed_first: Some(first),
        mask: 0,
    }
}

/// Exhaustive count table `counts[k][j] = |{σ ∈ B_n : des σ = k, neg σ = j}|`.
pub fn oracle_big_b_table(n: usize) -> Result<Vec<Vec<BigCount>>, PermError> {
    let mut counts = vec![vec![0u64; n + 1]; n + 1];
    for sigma in enumerate_b(n)? {
        counts[sigma.des()][sigma.neg()] += 1;
    }
    Ok(to_big(counts))
}

/// As [`oracle_big_b_table`], partitioned by the first unsigned entry across threads.
pub fn oracle_big_b_table_parallel(n: usize) -> Result<Vec<Vec<BigCount>>, PermError> {
    check_cap(n)?;
    if n == 0 {
        return oracle_big_b_table(0);
    }
    let partials: Vec<Vec<Vec<u64>>> = thread::scope(|scope| {
        let handles: Vec<_> = (1..=n as u32)
            .map(|first| {
                scope.spawn(move || {
                    let mut counts = vec![vec![0u64; n + 1]; n + 1];
                    for sigma in enumerate_b_with_first(n, first) {
                        counts[sigma.des()][sigma.neg()] += 1;
                    }
                    counts
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("worker panicked")).collect()
    });
    let mut total = vec![vec![0u64; n + 1]; n + 1];
    for part in partials {
        for (row, prow) in total.iter_mut().zip(part) {
            for (cell, p) in row.iter_mut().zip(prow) {
                *cell += p;
            }
        }
    }
    Ok(to_big(total))
}

fn to_big(counts: Vec<Vec<u64>>) -> Vec<Vec<BigCount>> {
    counts
        .into_iter()
        .map(|r| r.into_iter().map(BigUint::from).collect())
        .collect()
}

fn index(n: usize, i: i64) -> Option<usize> {
    usize::try_from(i).ok().filter(|&i| i <= n)
}

/// `B(n,k,j)` by exhaustive enumeration.
pub fn oracle_big_b(n: usize, k: i64, j: i64) -> Result<BigCount, PermError> {
    let table = oracle_big_b_table(n)?;
    Ok(match (index(n, k), index(n, j)) {
        (Some(k), Some(j)) => table[k][j].clone(),
        _ => BigCount::default(),
    })
}

/// Count table indexed `[k][negative-set bitmask]`.
pub fn oracle_b_set_table(n: usize) -> Result<Vec<Vec<u64>>, PermError> {
    let mut counts = vec![vec![0u64; 1 << n]; n + 1];
    for sigma in enumerate_b(n)? {
        counts[sigma.des()][sigma.negative_set().bits() as usize] += 1;
    }
    Ok(counts)
}

/// `|{σ ∈ B_n : des σ = k, negative set = U}|` by enumeration.
pub fn oracle_b_set(n: usize, k: i64, set: Subset) -> Result<BigCount, PermError> {
    let mut count = 0u64;
    if index(n, k).is_some() {
        let k = k as usize;
        for sigma in enumerate_b(n)? {
            if sigma.des() == k && sigma.negative_set() == set {
                count += 1;
            }
        }
    } else {
        check_cap(n)?;
    }
    Ok(BigCount::from(count))
}

/// Count table `[k][first - 1]` of permutations of `{1..n}` with `k` descents.
pub fn oracle_a_first_table(n: usize) -> Result<Vec<Vec<u64>>, PermError> {
    let mut counts = vec![vec![0u64; n.max(1)]; n + 1];
    for tau in enumerate_a(n)? {
        if let Some(first) = tau.first() {
            counts[tau.des()][first as usize - 1] += 1;
        }
    }
    Ok(counts)
}

/// `|{τ ∈ A_n : des τ = k, τ1 = first}|` by enumeration.
pub fn oracle_a_first(n: usize, k: i64, first: u32) -> Result<BigCount, PermError> {
    let table = oracle_a_first_table(n)?;
    let value = match index(n, k) {
        Some(k) if first >= 1 && first as usize <= n => table[k][first as usize - 1],
        _ => 0,
    };
    Ok(BigCount::from(value))
}

/// `counts[d]` = number of permutations of `{1..n}` with `d` big descents.
pub fn oracle_big_descents_table(n: usize) -> Result<Vec<u64>, PermError> {
    let mut counts = vec![0u64; n + 1];
    for tau in enumerate_a(n)? {
        counts[tau.big_des()] += 1;
    }
    Ok(counts)
}

/// Number of permutations of `{1..n}` with exactly `k - 1` big descents.
pub fn oracle_big_descents(n: usize, k: i64) -> Result<BigCount, PermError> {
    let table = oracle_big_descents_table(n)?;
    let value = usize::try_from(k - 1).ok().and_then(|d| table.get(d).copied()).unwrap_or(0);
    Ok(BigCount::from(value))
}

/// Which of the four deletion cases applied to the removed entry `±n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LambdaCase {
    /// `+n`, at the end or with `σ(i-1) > σ(i+1)`: `(k, j)` unchanged.
    PlusKeepsDescents,
    /// `+n` with `σ(i-1) < σ(i+1)`: one descent fewer.
    PlusDropsDescent,
    /// `-n` with `σ(i-1) > σ(i+1)`: one minus sign fewer.
    MinusKeepsDescents,
    /// `-n`, at the end or with `σ(i-1) < σ(i+1)`: one descent and one minus sign fewer.
    MinusDropsDescent,
}

impl LambdaCase {
    /// `(des decrease, neg decrease)` when passing from `σ` to `Λσ`.
    pub fn shift(self) -> (usize, usize) {
        match self {
            LambdaCase::PlusKeepsDescents => (0, 0),
            LambdaCase::PlusDropsDescent => (1, 0),
            LambdaCase::MinusKeepsDescents => (0, 1),
            LambdaCase::MinusDropsDescent => (1, 1),
        }
    }
}

/// Deletes the entry `±n`, returning `Λσ` and the case it fell under.
pub fn lambda_delete(sigma: &SignedPermutation) -> (SignedPermutation, LambdaCase) {
    let n = sigma.n();
    assert!(n >= 1, "Λ is defined for n >= 1");
    let seq = sigma.sequence();
    let i = (1..=n)
        .find(|&i| seq[i].unsigned_abs() as usize == n)
        .expect("valid signed permutation contains ±n");
    let positive = seq[i] > 0;
    let at_end = i == n;
    let outer_descent = !at_end && seq[i - 1] > seq[i + 1];
    // The end position goes with "keeps" for +n and with "drops" for -n.
    let case = match (positive, at_end || outer_descent, !at_end && outer_descent) {
        (true, true, _) => LambdaCase::PlusKeepsDescents,
        (true, false, _) => LambdaCase::PlusDropsDescent,
        (false, _, true) => LambdaCase::MinusKeepsDescents,
        (false, _, false) => LambdaCase::MinusDropsDescent,
    };
    let mut out = seq.to_vec();
    out.remove(i);
    (SignedPermutation(out), case)
}

/// Inserts `±n` (with `n = τ.n() + 1`) so that it lands at index `position`
/// of `(0, σ1, ..., σn)`, i.e. between `τ(position-1)` and `τ(position)`.
pub fn lambda_insert(tau: &SignedPermutation, negative: bool, position: usize) -> Result<SignedPermutation, PermError> {
    let n = tau.n() + 1;
    if position == 0 || position > n {
        return Err(PermError::InvalidPosition { position, max: n });
    }
    if n > MAX_ORDER {
        return Err(PermError::OrderTooLarge { n });
    }
    let mut seq = tau.sequence().to_vec();
    let value = n as i32;
    seq.insert(position, if negative { -value } else { value });
    Ok(SignedPermutation(seq))
}

/// For every `τ` of order `n - 1`, inserts `±n` in all `2n` positions and
/// checks that `Λ` undoes each insertion with the case matching the change in
/// `(des, neg)`, and that the preimages of `τ` in each class `(k, j)` number
/// `k + 1`, `n - k`, `k` and `n - k + 1` for `τ` in class `(k, j)`,
/// `(k - 1, j)`, `(k, j - 1)` and `(k - 1, j - 1)` respectively.
pub fn verify_lambda_fibers(n: usize) -> Result<CheckReport, PermError> {
    let mut report = CheckReport::new(format!("Λ fibers, n={n}"));
    if n == 0 {
        return Ok(report);
    }
    for tau in enumerate_b(n - 1)? {
        let (k0, j0) = (tau.des(), tau.neg());
        let mut fiber = vec![vec![0usize; n + 1]; n + 1];
        for negative in [false, true] {
            for position in 1..=n {
                let sigma = lambda_insert(&tau, negative, position)?;
                let (back, case) = lambda_delete(&sigma);
                let idx = format!("(τ={tau}, σ={sigma})");
                report.expect_eq("Λ(insert(τ)) = τ", &idx, &tau, &back);
                let (dk, dj) = case.shift();
                report.expect_eq("case shift matches des", &idx, &sigma.des(), &(k0 + dk));
                report.expect_eq("case shift matches neg", &idx, &sigma.neg(), &(j0 + dj));
                fiber[sigma.des()][sigma.neg()] += 1;
            }
        }
        for (k, row) in fiber.iter().enumerate() {
            for (j, &count) in row.iter().enumerate() {
                let want = match (k as i64 - k0 as i64, j as i64 - j0 as i64) {
                    (0, 0) => k + 1,
                    (1, 0) => n - k,
                    (0, 1) => k,
                    (1, 1) => n - k + 1,
                    _ => 0,
                };
                report.expect_eq("fiber size", format!("(τ={tau}, k={k}, j={j})"), &want, &count);
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn sp(entries: &[i32]) -> SignedPermutation {
        SignedPermutation::from_sequence(entries).unwrap()
    }

    #[test]
    fn descents_examples() {
        assert_eq!(descents(&[0, -1, 2]), 1);
        assert_eq!(descents(&[0, 1, 2, 3]), 0);
        assert_eq!(descents(&[0, 2, -1, -3, 1]), 2);
        assert_eq!(descents(&[0.5, 0.25]), 1);
        assert_eq!(descents::<i32>(&[7]), 0);
    }

    #[test]
    fn stats_examples() {
        let id = SignedPermutation::identity(4);
        assert_eq!(id.stats(), DescentStats { des: 0, neg: 0, negative_set: Subset::EMPTY });
        // -1 > -2 > ... is a run of descents; the ascending negatives have one.
        let s = SignedPermutation::new(&[-1, -2, -3, -4]).unwrap().stats();
        assert_eq!((s.des, s.neg), (4, 4));
        assert_eq!(s.negative_set, Subset::initial(4));
        let s = SignedPermutation::new(&[-4, -3, -2, -1]).unwrap().stats();
        assert_eq!((s.des, s.neg), (1, 4));
        let s = sp(&[0, 2, -1, 3]).stats();
        assert_eq!((s.des, s.neg), (1, 1));
        assert_eq!(s.negative_set.elements(), vec![1]);
    }

    #[test]
    fn rejects_invalid_sequences() {
        assert!(SignedPermutation::new(&[1, 1]).is_err());
        assert!(SignedPermutation::new(&[1, 3]).is_err());
        assert!(SignedPermutation::from_sequence(&[1, 0]).is_err());
        assert!(TypeAPermutation::new(vec![2, 2]).is_err());
        assert!(TypeAPermutation::new(vec![0, 1]).is_err());
    }

    #[test]
    fn enumerate_b_small() {
        let one: Vec<_> = enumerate_b(1).unwrap().collect();
        assert_eq!(one, vec![sp(&[0, 1]), sp(&[0, -1])]);
        assert_eq!(enumerate_b(2).unwrap().count(), 8);
        let zero: Vec<_> = enumerate_b(0).unwrap().collect();
        assert_eq!(zero, vec![SignedPermutation::identity(0)]);
    }

    #[test]
    fn enumerate_b_counts_and_distinct() {
        for n in 0..=6usize {
            let all: HashSet<_> = enumerate_b(n).unwrap().collect();
            let expected = (1..=n).product::<usize>() << n;
            assert_eq!(all.len(), expected, "n={n}");
        }
    }

    #[test]
    fn enumeration_order_is_lexicographic_then_binary() {
        let seq: Vec<_> = enumerate_b(2).unwrap().map(|s| s.entries().to_vec()).collect();
        assert_eq!(
            seq,
            vec![
                vec![1, 2],
                vec![-1, 2],
                vec![1, -2],
                vec![-1, -2],
                vec![2, 1],
                vec![-2, 1],
                vec![2, -1],
                vec![-2, -1],
            ]
        );
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(enumerate_b(DEFAULT_ENUMERATION_CAP + 1), Err(PermError::EnumerationCap { .. })));
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(oracle_big_b(2, 1, 1).unwrap(), BigCount::from(4u8));
        assert_eq!(oracle_big_b(3, 1, 2).unwrap(), BigCount::from(6u8));
        assert_eq!(oracle_big_b(5, 3, 2).unwrap(), BigCount::from(480u32));
        assert_eq!(oracle_big_b(0, 0, 0).unwrap(), BigCount::from(1u8));
        assert_eq!(oracle_big_b(3, 4, 0).unwrap(), BigCount::from(0u8));
    }

    #[test]
    fn parallel_oracle_matches_sequential() {
        for n in 0..=5 {
            assert_eq!(oracle_big_b_table(n).unwrap(), oracle_big_b_table_parallel(n).unwrap());
        }
    }

    #[test]
    fn set_oracle_examples() {
        let u = Subset::from_elements(3, &[1, 3]).unwrap();
        assert_eq!(oracle_b_set(3, 1, u).unwrap(), BigCount::from(2u8));
        let u = Subset::from_elements(4, &[2]).unwrap();
        assert_eq!(oracle_b_set(4, 2, u).unwrap(), BigCount::from(14u8));
        assert!(Subset::from_elements(3, &[4]).is_err());
    }

    #[test]
    fn a_first_examples() {
        assert_eq!(oracle_a_first(3, 1, 2).unwrap(), BigCount::from(2u8));
        assert_eq!(oracle_a_first(5, 2, 3).unwrap(), BigCount::from(16u8));
        for n in 1..=6 {
            assert_eq!(oracle_a_first(n, 0, 1).unwrap(), BigCount::from(1u8));
        }
    }

    #[test]
    fn big_descent_examples() {
        assert_eq!(oracle_big_descents(4, 2).unwrap(), BigCount::from(14u8));
        assert_eq!(oracle_big_descents(6, 3).unwrap(), BigCount::from(342u32));
        for n in 2..=6usize {
            assert_eq!(oracle_big_descents(n, 1).unwrap(), BigCount::from(1u64 << (n - 1)));
        }
        assert_eq!(oracle_big_descents(4, 0).unwrap(), BigCount::from(0u8));
    }

    #[test]
    fn lambda_delete_examples() {
        assert_eq!(lambda_delete(&sp(&[0, 2, -1, 3])), (sp(&[0, 2, -1]), LambdaCase::PlusKeepsDescents));
        assert_eq!(lambda_delete(&sp(&[0, -3, 1, 2])), (sp(&[0, 1, 2]), LambdaCase::MinusDropsDescent));
        assert_eq!(lambda_delete(&sp(&[0, 1, 3, 2])), (sp(&[0, 1, 2]), LambdaCase::PlusDropsDescent));
        assert_eq!(lambda_delete(&sp(&[0, 2, -3, 1])).1, LambdaCase::MinusKeepsDescents);
        assert_eq!(lambda_delete(&sp(&[0, -1, -3, 2])).1, LambdaCase::MinusDropsDescent);
        assert_eq!(lambda_delete(&sp(&[0, 2, -3, -1])).1, LambdaCase::MinusKeepsDescents);
        assert_eq!(lambda_delete(&sp(&[0, 1, 2, -3])).1, LambdaCase::MinusDropsDescent);
    }

    #[test]
    fn lambda_case_predicts_statistics() {
        for n in 1..=5 {
            for sigma in enumerate_b(n).unwrap() {
                let (tau, case) = lambda_delete(&sigma);
                let (dd, dn) = case.shift();
                assert_eq!(tau.des() + dd, sigma.des(), "{sigma}");
                assert_eq!(tau.neg() + dn, sigma.neg(), "{sigma}");
            }
        }
    }

    #[test]
    fn lambda_insert_examples() {
        let tau = sp(&[0, 2, -1]);
        let end_plus = lambda_insert(&tau, false, 3).unwrap();
        assert_eq!(end_plus.des(), tau.des());
        let end_minus = lambda_insert(&tau, true, 3).unwrap();
        assert_eq!(end_minus.des(), tau.des() + 1);
        assert_eq!(end_minus.neg(), tau.neg() + 1);
        assert!(matches!(lambda_insert(&tau, false, 0), Err(PermError::InvalidPosition { .. })));
        assert!(matches!(lambda_insert(&tau, false, 4), Err(PermError::InvalidPosition { .. })));
        for pos in 1..=3 {
            for neg in [false, true] {
                assert_eq!(lambda_delete(&lambda_insert(&tau, neg, pos).unwrap()).0, tau);
            }
        }
    }

    #[test]
    fn lambda_fibers() {
        for n in 0..=4 {
            let r = verify_lambda_fibers(n).unwrap();
            assert!(r.passed(), "{:?}", r.first_failure());
        }
    }

    #[test]
    fn subset_helpers() {
        let s = Subset::from_elements(5, &[4, 2]).unwrap();
        assert_eq!(s.elements(), vec![2, 4]);
        assert_eq!(s.len(), 2);
        assert!(s.contains(4) && !s.contains(3));
        assert_eq!(s.to_string(), "{2,4}");
        assert_eq!(Subset::all_of_size(4, 2).count(), 6);
    }
}
