use std::sync::OnceLock;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use proptest::prelude::*;
use seb_core::bijections::{apply_relabel, build_relabel, f_inverse, f_map, in_fn_image};
use seb_core::families::{build_little_p_family, build_p_family};
use seb_core::numbers::{big_b_formula, divisibility_witness, little_b_formula};
use seb_core::perm::{lambda_delete, lambda_insert, SignedPermutation, Subset, TypeAPermutation};
use seb_core::roots::{is_interleaver, isolate_roots};
use seb_core::series::{Bivariate, TruncatedSeries};
use seb_core::EulerianTables;

const N_MAX: usize = 20;

fn tables() -> &'static EulerianTables {
    static TABLES: OnceLock<EulerianTables> = OnceLock::new();
    TABLES.get_or_init(|| EulerianTables::new(N_MAX))
}

fn cell() -> impl Strategy<Value = (usize, i64, i64)> {
    (0..=N_MAX).prop_flat_map(|n| (Just(n), 0..=n as i64, 0..=n as i64))
}

fn permutation(max: usize) -> impl Strategy<Value = Vec<u32>> {
    (1..=max).prop_flat_map(|n| Just((1..=n as u32).collect::<Vec<_>>()).prop_shuffle())
}

fn signed_permutation(max: usize) -> impl Strategy<Value = SignedPermutation> {
    permutation(max).prop_flat_map(|p| {
        let n = p.len();
        prop::collection::vec(any::<bool>(), n).prop_map(move |signs| {
            let entries: Vec<i32> = p.iter().zip(&signs).map(|(&v, &neg)| if neg { -(v as i32) } else { v as i32 }).collect();
            SignedPermutation::new(&entries).unwrap()
        })
    })
}

fn small_bivariate() -> impl Strategy<Value = Bivariate<BigRational>> {
    prop::collection::vec((0usize..3, 0usize..3, -5i64..5), 0..5)
        .prop_map(|terms| Bivariate::from_terms(terms.into_iter().map(|(i, j, c)| (i, j, BigRational::from_integer(c.into())))))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn reflection_symmetry((n, k, j) in cell()) {
        let t = tables();
        let ni = n as i64;
        prop_assert_eq!(t.big_b(n, k, j), t.big_b(n, ni - k, ni - j));
        prop_assert_eq!(t.little_b(n, k, j), t.little_b(n, ni - k, ni - j));
    }

    #[test]
    fn binomial_divides((n, k, j) in cell()) {
        let t = tables();
        prop_assert_eq!(divisibility_witness(t, n, k, j).unwrap(), t.little_b(n, k, j));
    }

    #[test]
    fn closed_forms_match((n, k, j) in cell()) {
        let t = tables();
        prop_assert_eq!(big_b_formula(n, k, j).unwrap(), t.big_b(n, k, j));
        prop_assert_eq!(little_b_formula(n, k, j).unwrap(), t.little_b(n, k, j));
    }

    #[test]
    fn four_term_recurrence((n, k, j) in cell().prop_filter("n >= 1", |c| c.0 >= 1)) {
        let t = tables();
        let u = |v: i64| BigUint::from(v as u64);
        let rec = t.big_b(n - 1, k, j) * u(k + 1)
            + t.big_b(n - 1, k - 1, j) * u(n as i64 - k)
            + t.big_b(n - 1, k, j - 1) * u(k)
            + t.big_b(n - 1, k - 1, j - 1) * u(n as i64 - k + 1);
        prop_assert_eq!(t.big_b(n, k, j), rec);
    }

    #[test]
    fn f_map_round_trip(p in permutation(9)) {
        let sigma = TypeAPermutation::new(p).unwrap();
        let tau = f_map(&sigma);
        prop_assert!(in_fn_image(&tau));
        prop_assert_eq!(tau.des(), sigma.des());
        prop_assert_eq!(tau.negative_set(), Subset::initial(sigma.first().unwrap() as usize - 1));
        prop_assert_eq!(f_inverse(&tau).unwrap(), sigma);
    }

    #[test]
    fn f_inverse_rejects_exactly_non_image(tau in signed_permutation(8)) {
        let set = tau.negative_set();
        let initial = set == Subset::initial(set.len());
        prop_assert_eq!(in_fn_image(&tau), initial);
        prop_assert_eq!(f_inverse(&tau).is_ok(), initial);
    }

    #[test]
    fn relabel_preserves_descents(sigma in signed_permutation(9), seed in any::<u64>()) {
        let n = sigma.n();
        let u = sigma.negative_set();
        // a target of the same size: rotate the bitmask within n bits
        let mask = (1u64 << n) - 1;
        let shift = (seed % n as u64) as u32;
        let bits = u.bits();
        let v = Subset::from_bits(((bits << shift) | (bits >> ((n as u32 - shift) % 64))) & mask);
        prop_assume!(v.len() == u.len());
        let forward = build_relabel(n, u, v).unwrap();
        let image = apply_relabel(&forward, &sigma).unwrap();
        prop_assert_eq!(image.des(), sigma.des());
        prop_assert_eq!(image.negative_set(), v);
        let back = build_relabel(n, v, u).unwrap();
        prop_assert_eq!(apply_relabel(&back, &image).unwrap(), sigma);
    }

    #[test]
    fn lambda_round_trip(tau in signed_permutation(7), negative in any::<bool>(), pos in any::<prop::sample::Index>()) {
        let position = pos.index(tau.n() + 1) + 1;
        let sigma = lambda_insert(&tau, negative, position).unwrap();
        let (back, case) = lambda_delete(&sigma);
        prop_assert_eq!(&back, &tau);
        let (dk, dj) = case.shift();
        prop_assert_eq!((sigma.des(), sigma.neg()), (tau.des() + dk, tau.neg() + dj));
    }

    #[test]
    fn bivariate_ring_laws(a in small_bivariate(), b in small_bivariate(), c in small_bivariate()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
    }

    #[test]
    fn exp_is_a_homomorphism(a in small_bivariate(), b in small_bivariate()) {
        let order = 4;
        let sa = TruncatedSeries::linear(order, a.clone());
        let sb = TruncatedSeries::linear(order, b.clone());
        let lhs = (&sa + &sb).exp().unwrap();
        let rhs = &sa.exp().unwrap() * &sb.exp().unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn nonnegative_combinations_are_real_rooted(n in 1usize..=6, coeffs in prop::collection::vec(0u32..50, 7)) {
        for family in [build_little_p_family::<BigInt>(n), build_p_family::<BigInt>(n)] {
            let combo = family.iter().zip(&coeffs).fold(seb_core::IntPolynomial::zero(), |acc, (p, c)| &acc + &p.scale(&BigInt::from(*c)));
            prop_assume!(!combo.is_zero());
            let cert = isolate_roots(&combo).unwrap();
            prop_assert!(cert.is_real_rooted(), "{}", combo);
            prop_assert!(cert.verify());
        }
    }

    #[test]
    fn interleaving_is_ordered(n in 2usize..=6, i in 0usize..6, j in 0usize..6) {
        let (i, j) = (i % (n + 1), j % (n + 1));
        prop_assume!(i != j);
        let family = build_little_p_family::<BigInt>(n);
        let (lo, hi) = (i.min(j), i.max(j));
        prop_assert!(is_interleaver(&family[lo], &family[hi]).unwrap().holds);
    }
}
