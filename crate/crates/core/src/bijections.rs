//! The relabeling bijection between signed permutations with prescribed
//! negative sets of equal size, and the map `F_n: S_{n+1} -> B_n`.

use std::collections::{HashMap, HashSet};

use num_bigint::BigUint;
use thiserror::Error;

use crate::numbers::EulerianTables;
use crate::perm::{enumerate_a, enumerate_b, PermError, SignedPermutation, Subset, TypeAPermutation};
use crate::report::CheckReport;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BijectionError {
    #[error("subsets {u} and {v} have different sizes")]
    SizeMismatch { u: Subset, v: Subset },
    #[error("subset {set} is not contained in 1..={n}")]
    SubsetOutOfRange { set: Subset, n: usize },
    #[error("negative set {actual} of {sigma} differs from the map's source {expected}")]
    NegativeSetMismatch { sigma: String, expected: Subset, actual: Subset },
    #[error("order {expected} expected, got a permutation of order {actual}")]
    OrderMismatch { expected: usize, actual: usize },
    #[error("{tau} is not in the image of F_n: |τ_{i1}| < |τ_{i2}| and τ_{i2} < 0 but τ_{i1} > 0")]
    NotInImage { tau: String, i1: usize, i2: usize },
    #[error(transparent)]
    Perm(#[from] PermError),
}

/// The permutation `τ` of `{1..n}` with `τ(U) = V` that is increasing on `U`
/// and on its complement, extended by `τ(-i) = -τ(i)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelabelMap {
    pub n: usize,
    pub u: Subset,
    pub v: Subset,
    pub tau: TypeAPermutation,
}

fn complement(n: usize, set: Subset) -> Vec<u32> {
    (1..=n as u32).filter(|&i| !set.contains(i)).collect()
}

/// Pairs the sorted elements of `U` with those of `V`, and likewise the
/// complements.
pub fn build_relabel(n: usize, u: Subset, v: Subset) -> Result<RelabelMap, BijectionError> {
    for set in [u, v] {
        if set.elements().last().is_some_and(|&e| e as usize > n) {
            return Err(BijectionError::SubsetOutOfRange { set, n });
        }
    }
    if u.len() != v.len() {
        return Err(BijectionError::SizeMismatch { u, v });
    }
    let mut tau = vec![0u32; n];
    let pairs = u.elements().into_iter().zip(v.elements()).chain(complement(n, u).into_iter().zip(complement(n, v)));
    for (from, to) in pairs {
        tau[from as usize - 1] = to;
    }
    Ok(RelabelMap { n, u, v, tau: TypeAPermutation::new(tau)? })
}

/// `σ ↦ τ ∘ σ`, defined on signed permutations with negative set `U`.
pub fn apply_relabel(map: &RelabelMap, sigma: &SignedPermutation) -> Result<SignedPermutation, BijectionError> {
    if sigma.n() != map.n {
        return Err(BijectionError::OrderMismatch { expected: map.n, actual: sigma.n() });
    }
    let actual = sigma.negative_set();
    if actual != map.u {
        return Err(BijectionError::NegativeSetMismatch { sigma: sigma.to_string(), expected: map.u, actual });
    }
    let entries: Vec<i32> = sigma
        .entries()
        .iter()
        .map(|&e| {
            let image = map.tau.apply(e.unsigned_abs()) as i32;
            if e < 0 {
                -image
            } else {
                image
            }
        })
        .collect();
    Ok(SignedPermutation::new(&entries)?)
}

/// `F_n(σ)_i = σ_{i+1} - σ_1` if `σ_{i+1} < σ_1`, else `σ_{i+1} - 1`.
pub fn f_map(sigma: &TypeAPermutation) -> SignedPermutation {
    let entries = sigma.entries();
    let first = *entries.first().expect("F_n needs a permutation of order n + 1 >= 1") as i32;
    let image: Vec<i32> = entries[1..]
        .iter()
        .map(|&v| {
            let v = v as i32;
            if v < first {
                v - first
            } else {
                v - 1
            }
        })
        .collect();
    SignedPermutation::new(&image).expect("F_n yields a signed permutation")
}

/// Positions `(i1, i2)` (1-based) with `|τ_{i1}| < |τ_{i2}|`, `τ_{i2} < 0`
/// and `τ_{i1} > 0`, if any. `None` means `τ` is in the image of `F_n`.
pub fn image_violation(tau: &SignedPermutation) -> Option<(usize, usize)> {
    let entries = tau.entries();
    // The largest |τ_i| among negatives must lie below every positive |τ_i|.
    let (i2, _) = entries.iter().enumerate().filter(|(_, &e)| e < 0).max_by_key(|(_, &e)| e.unsigned_abs())?;
    let (i1, _) = entries
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0 && e.unsigned_abs() < entries[i2].unsigned_abs())
        .min_by_key(|(_, &e)| e)?;
    Some((i1 + 1, i2 + 1))
}

/// Whether `τ` is in the image of `F_n`, i.e. its negative set is `{1, ..., j}`.
pub fn in_fn_image(tau: &SignedPermutation) -> bool {
    image_violation(tau).is_none()
}

/// The unique `σ` with `F_n(σ) = τ`: `σ_1 = neg(τ) + 1`, then the two
/// shifts undone.
pub fn f_inverse(tau: &SignedPermutation) -> Result<TypeAPermutation, BijectionError> {
    if let Some((i1, i2)) = image_violation(tau) {
        return Err(BijectionError::NotInImage { tau: tau.to_string(), i1, i2 });
    }
    let first = tau.neg() as i32 + 1;
    let mut entries = vec![first as u32];
    entries.extend(tau.entries().iter().map(|&e| if e < 0 { (e + first) as u32 } else { (e + 1) as u32 }));
    Ok(TypeAPermutation::new(entries)?)
}

/// Exhaustive check over `S_{n+1}` that `F_n` is injective, preserves
/// descents, sends first entry `j + 1` to negative set `{1..j}`, has image
/// equal to the predicate set, is inverted by [`f_inverse`], and restricts to
/// bijections onto `B_{n,k,{1..j}}` with `b(n,k,j)` elements.
pub fn verify_bijection_theorem(tables: &EulerianTables, n: usize) -> Result<CheckReport, BijectionError> {
    let mut report = CheckReport::new(format!("F_n bijection, n={n}"));
    let mut image = HashSet::new();
    let mut by_class = vec![vec![0u64; n + 1]; n + 1];
    for sigma in enumerate_a(n + 1)? {
        let tau = f_map(&sigma);
        let idx = format!("(σ={sigma})");
        let first = sigma.first().expect("order >= 1") as usize;
        report.expect_eq("des F_n(σ) = des σ", &idx, &sigma.des(), &tau.des());
        report.expect_eq("negative set of F_n(σ) = {1..σ_1-1}", &idx, &Subset::initial(first - 1), &tau.negative_set());
        report.expect(in_fn_image(&tau), "F_n(σ) satisfies the image predicate", &idx, || {
            ("predicate holds".into(), tau.to_string())
        });
        let back = f_inverse(&tau);
        report.expect(back.as_ref() == Ok(&sigma), "f_inverse(F_n(σ)) = σ", &idx, || (sigma.to_string(), format!("{back:?}")));
        by_class[tau.des()][first - 1] += 1;
        report.expect(image.insert(tau.clone()), "F_n is injective", &idx, || ("new image".into(), tau.to_string()));
    }
    let factorial: u64 = (1..=n as u64 + 1).product();
    report.expect_eq("|image of F_n| = (n+1)!", format!("(n={n})"), &factorial, &(image.len() as u64));

    let mut predicate_set = 0u64;
    let mut target = vec![vec![0u64; n + 1]; n + 1];
    for tau in enumerate_b(n)? {
        if !in_fn_image(&tau) {
            continue;
        }
        predicate_set += 1;
        target[tau.des()][tau.neg()] += 1;
        let idx = format!("(τ={tau})");
        report.expect(image.contains(&tau), "predicate set ⊆ image of F_n", &idx, || ("in image".into(), "missing".into()));
        if let Ok(sigma) = f_inverse(&tau) {
            report.expect_eq("F_n(f_inverse(τ)) = τ", &idx, &tau, &f_map(&sigma));
        }
    }
    report.expect_eq("|predicate set| = (n+1)!", format!("(n={n})"), &factorial, &predicate_set);
    for k in 0..=n {
        for j in 0..=n {
            let idx = format!("(n={n}, k={k}, j={j})");
            let want = tables.little_b(n, k as i64, j as i64);
            report.expect_eq("|A_{n+1,k,j+1}| = b(n,k,j)", &idx, &want, &BigUint::from(by_class[k][j]));
            report.expect_eq("|B_{n,k,{1..j}}| = b(n,k,j)", &idx, &want, &BigUint::from(target[k][j]));
        }
    }
    Ok(report)
}

/// Exhaustive check that for all `U, V ⊆ {1..n}` of equal size the
/// relabeling is a descent-preserving bijection from negative set `U` to
/// negative set `V`, inverted by the relabeling from `V` to `U`.
pub fn verify_relabel_theorem(n: usize) -> Result<CheckReport, BijectionError> {
    let mut report = CheckReport::new(format!("relabeling bijections, n={n}"));
    let mut groups: HashMap<Subset, Vec<SignedPermutation>> = HashMap::new();
    for sigma in enumerate_b(n)? {
        groups.entry(sigma.negative_set()).or_default().push(sigma);
    }
    for size in 0..=n {
        let sets: Vec<Subset> = Subset::all_of_size(n, size).collect();
        for &u in &sets {
            for &v in &sets {
                let forward = build_relabel(n, u, v)?;
                let backward = build_relabel(n, v, u)?;
                let idx = format!("(n={n}, U={u}, V={v})");
                let source = &groups[&u];
                let target: HashSet<&SignedPermutation> = groups[&v].iter().collect();
                let mut seen = HashSet::new();
                for sigma in source {
                    let image = apply_relabel(&forward, sigma)?;
                    report.expect_eq("des τσ = des σ", &idx, &sigma.des(), &image.des());
                    report.expect_eq("negative set of τσ = V", &idx, &v, &image.negative_set());
                    let back = apply_relabel(&backward, &image)?;
                    report.expect_eq("relabel back to U recovers σ", &idx, sigma, &back);
                    report.expect(target.contains(&image) && seen.insert(image.clone()), "relabeling is injective into V", &idx, || {
                        ("fresh image".into(), image.to_string())
                    });
                }
                report.expect_eq("relabeling is onto V", &idx, &target.len(), &seen.len());
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(n: usize, e: &[u32]) -> Subset {
        Subset::from_elements(n, e).unwrap()
    }

    fn sp(entries: &[i32]) -> SignedPermutation {
        SignedPermutation::from_sequence(entries).unwrap()
    }

    fn ap(entries: &[u32]) -> TypeAPermutation {
        TypeAPermutation::new(entries.to_vec()).unwrap()
    }

    #[test]
    fn relabel_examples() {
        let m = build_relabel(4, set(4, &[2, 3]), set(4, &[2, 3])).unwrap();
        assert_eq!(m.tau, TypeAPermutation::identity(4));
        let m = build_relabel(3, set(3, &[1]), set(3, &[3])).unwrap();
        assert_eq!(m.tau, ap(&[3, 1, 2]));
        let m2 = build_relabel(4, set(4, &[1, 2]), set(4, &[3, 4])).unwrap();
        assert_eq!(m2.tau, ap(&[3, 4, 1, 2]));

        let image = apply_relabel(&m, &sp(&[0, 2, -1, 3])).unwrap();
        assert_eq!(image, sp(&[0, 1, -3, 2]));
        assert_eq!(image.des(), 1);
        assert_eq!(image.negative_set(), set(3, &[3]));
    }

    #[test]
    fn relabel_errors() {
        assert!(matches!(build_relabel(3, set(3, &[1]), set(3, &[1, 2])), Err(BijectionError::SizeMismatch { .. })));
        assert!(matches!(build_relabel(2, set(3, &[3]), set(3, &[1])), Err(BijectionError::SubsetOutOfRange { .. })));
        let m = build_relabel(3, set(3, &[1]), set(3, &[3])).unwrap();
        assert!(matches!(apply_relabel(&m, &sp(&[0, 1, -2, 3])), Err(BijectionError::NegativeSetMismatch { .. })));
    }

    #[test]
    fn f_map_examples() {
        assert_eq!(f_map(&TypeAPermutation::identity(4)), SignedPermutation::identity(3));
        assert_eq!(f_map(&ap(&[3, 1, 2])), sp(&[0, -2, -1]));
        assert_eq!(f_map(&ap(&[2, 3, 1])), sp(&[0, 2, -1]));
        assert_eq!(f_map(&ap(&[1])), SignedPermutation::identity(0));
    }

    #[test]
    fn f_inverse_examples() {
        assert_eq!(f_inverse(&SignedPermutation::identity(3)).unwrap(), TypeAPermutation::identity(4));
        assert_eq!(f_inverse(&sp(&[0, -2, -1])).unwrap(), ap(&[3, 1, 2]));
        assert!(in_fn_image(&sp(&[0, -1, 2])));
        let err = f_inverse(&sp(&[0, 1, -2])).unwrap_err();
        assert_eq!(err, BijectionError::NotInImage { tau: "(0,1,-2)".into(), i1: 1, i2: 2 });
    }

    #[test]
    fn exhaustive_small() {
        let t = EulerianTables::new(4);
        for n in 0..=4 {
            let r = verify_bijection_theorem(&t, n).unwrap();
            assert!(r.passed(), "{:?}", r.first_failure());
            let r = verify_relabel_theorem(n).unwrap();
            assert!(r.passed(), "{:?}", r.first_failure());
        }
    }

    #[test]
    fn image_of_f2() {
        let image: HashSet<_> = enumerate_a(3).unwrap().map(|s| f_map(&s)).collect();
        assert_eq!(image.len(), 6);
        let excluded: Vec<_> = enumerate_b(2).unwrap().filter(|t| !image.contains(t)).collect();
        assert_eq!(excluded.len(), 2);
        assert!(excluded.iter().all(|t| t.negative_set() == set(2, &[2])));
    }
}
