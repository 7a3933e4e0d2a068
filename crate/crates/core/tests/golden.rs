mod common;

use num_bigint::{BigInt, BigUint};
use seb_core::families::{build_little_p_family, build_p_family, build_q_family, eulerian_poly_a, eulerian_poly_b};
use seb_core::perm::{oracle_a_first, oracle_b_set, oracle_big_b, oracle_big_descents, Subset};
use seb_core::{EulerianTables, IntPolynomial};

fn poly(c: &[i64]) -> IntPolynomial {
    IntPolynomial::from_ints(c)
}

#[test]
fn printed_big_b_tables_match_enumeration() {
    // Independent of the recurrences: brute-force counts against the printed arrays.
    for (n, table) in common::BIG_B.iter().enumerate() {
        for (k, row) in table.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                assert_eq!(oracle_big_b(n, k as i64, j as i64).unwrap(), BigUint::from(v), "B({n},{k},{j})");
            }
        }
    }
}

#[test]
fn printed_little_b_tables_match_type_a_enumeration() {
    for (n, table) in common::LITTLE_B.iter().enumerate() {
        for (k, row) in table.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                let count = oracle_a_first(n + 1, k as i64, j as u32 + 1).unwrap();
                assert_eq!(count, BigUint::from(v), "b({n},{k},{j})");
            }
        }
    }
}

#[test]
fn printed_tables_match_recurrences() {
    let t = EulerianTables::new(6);
    for (n, table) in common::BIG_B.iter().enumerate() {
        for (k, row) in table.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                assert_eq!(t.big_b(n, k as i64, j as i64), BigUint::from(v));
            }
        }
    }
    for (n, table) in common::LITTLE_B.iter().enumerate() {
        for (k, row) in table.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                assert_eq!(t.little_b(n, k as i64, j as i64), BigUint::from(v));
            }
        }
    }
}

#[test]
fn negative_set_counts() {
    let set = Subset::from_elements(3, &[1, 3]).unwrap();
    assert_eq!(oracle_b_set(3, 1, set).unwrap(), BigUint::from(2u32));
    assert_eq!(oracle_big_b(0, 0, 0).unwrap(), BigUint::from(1u32));
}

#[test]
fn big_descent_counts() {
    assert_eq!(oracle_big_descents(4, 2).unwrap(), BigUint::from(14u32));
    assert_eq!(oracle_big_descents(6, 3).unwrap(), BigUint::from(342u32));
    for n in 2..=6usize {
        assert_eq!(oracle_big_descents(n, 1).unwrap(), BigUint::from(1u32 << (n - 1)));
    }
}

#[test]
fn polynomial_examples() {
    let t = EulerianTables::new(5);
    assert_eq!(eulerian_poly_a(&t, 4), poly(&[1, 11, 11, 1]));
    assert_eq!(eulerian_poly_b(&t, 2), poly(&[1, 6, 1]));
    assert_eq!(build_p_family::<BigInt>(2)[1], poly(&[0, 4]));
    assert_eq!(build_p_family::<BigInt>(5)[3], poly(&[0, 40, 480, 600, 80]));
    assert_eq!(build_q_family::<BigInt>(2)[1], poly(&[1, 4, 1]));
    assert_eq!(build_q_family::<BigInt>(4)[2], poly(&[11, 56, 96, 56, 11]));
    assert_eq!(build_little_p_family::<BigInt>(2)[1], poly(&[0, 2]));
    assert_eq!(build_little_p_family::<BigInt>(4)[2], poly(&[0, 4, 16, 4]));
}

#[test]
fn p_columns_are_printed_columns() {
    // P_{n,j} read off the printed B tables column by column.
    for (n, table) in common::BIG_B.iter().enumerate() {
        let family = build_p_family::<BigInt>(n);
        for (j, p) in family.iter().enumerate() {
            let column: Vec<i64> = table.iter().map(|row| row[j] as i64).collect();
            assert_eq!(*p, poly(&column), "P_({n},{j})");
        }
    }
}
