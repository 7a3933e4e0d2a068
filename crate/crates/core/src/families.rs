//! The polynomial families `P^A_n`, `P^B_n`, `P_{n,j}`, `Q_{n,k}` and
//! `p_{n,j}`, their recurrences, symmetries and Worpitzky-type identities.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::numbers::EulerianTables;
use crate::poly::Polynomial;
use crate::report::CheckReport;
use crate::scalar::Scalar;
use crate::series::{build_r, Bivariate};

type IntPoly = Polynomial<BigInt>;
type RatPoly = Polynomial<BigRational>;

/// `P^A_n(t) = Σ_k A(n,k) t^k`, read from the tables.
pub fn eulerian_poly_a(tables: &EulerianTables, n: usize) -> IntPoly {
    Polynomial::new((0..=n as i64).map(|k| BigInt::from(tables.a(n, k))).collect())
}

/// `P^B_n(t) = Σ_k B(n,k) t^k`, read from the tables.
pub fn eulerian_poly_b(tables: &EulerianTables, n: usize) -> IntPoly {
    Polynomial::new((0..=n as i64).map(|k| BigInt::from(tables.b(n, k))).collect())
}

/// `(c0 + c1 x) p + (x - x^2) p'`, the shape shared by every derivative
/// recurrence here.
fn derivative_step<T: Scalar>(c0: T, c1: T, p: &Polynomial<T>) -> Polynomial<T> {
    let x_minus_x2 = Polynomial::new(vec![T::zero(), T::one(), -T::one()]);
    &(&Polynomial::linear(c0, c1) * p) + &(&x_minus_x2 * &p.derivative())
}

/// `P^A_0, ..., P^A_n` by `P^A_m = (1 + (m-1)x) P^A_{m-1} + (x - x^2) P^A_{m-1}'`.
pub fn eulerian_poly_a_family<T: Scalar>(n: usize) -> Vec<Polynomial<T>> {
    let mut out = vec![Polynomial::one()];
    for m in 1..=n {
        let next = derivative_step(T::one(), T::from_i64(m as i64 - 1), &out[m - 1]);
        out.push(next);
    }
    out
}

/// `P_{n,0}, ..., P_{n,n}` with `P_{n,j} = Σ_k B(n,k,j) x^k`, built from
/// `P_{0,0} = 1` by
/// `P_{m,j} = (1 + m x - x) P_{m-1,j} + (x - x^2) P_{m-1,j}' + m x P_{m-1,j-1} + (x - x^2) P_{m-1,j-1}'`
/// for `0 < j < m`, with `P_{m,0} = P^A_m` and `P_{m,m} = x P^A_m`.
pub fn build_p_family<T: Scalar>(n: usize) -> Vec<Polynomial<T>> {
    let pa = eulerian_poly_a_family::<T>(n);
    let mut row = vec![Polynomial::one()];
    for m in 1..=n {
        let mt = T::from_i64(m as i64);
        let mut next = Vec::with_capacity(m + 1);
        next.push(pa[m].clone());
        for j in 1..m {
            let keep = derivative_step(T::one(), mt.clone() - T::one(), &row[j]);
            let prev = &row[j - 1];
            let flip = &Polynomial::monomial(mt.clone(), 1) * prev;
            let flip = &flip + &derivative_step(T::zero(), T::zero(), prev);
            next.push(&keep + &flip);
        }
        next.push(pa[m].shift(1));
        row = next;
    }
    row
}

/// `Q_{n,0}, ..., Q_{n,n}` with `Q_{n,k} = Σ_j B(n,k,j) y^j`, built by
/// `Q_{m,k} = (k + 1 + k y) Q_{m-1,k} + (m - k + (m - k + 1) y) Q_{m-1,k-1}`
/// for `0 < k < m`, with `Q_{m,0} = 1` and `Q_{m,m} = y^m`.
pub fn build_q_family<T: Scalar>(n: usize) -> Vec<Polynomial<T>> {
    let mut row = vec![Polynomial::one()];
    for m in 1..=n {
        let mut next = Vec::with_capacity(m + 1);
        next.push(Polynomial::one());
        for k in 1..m {
            let (k, m) = (k as i64, m as i64);
            let a = Polynomial::linear(T::from_i64(k + 1), T::from_i64(k));
            let b = Polynomial::linear(T::from_i64(m - k), T::from_i64(m - k + 1));
            next.push(&(&a * &row[k as usize]) + &(&b * &row[k as usize - 1]));
        }
        next.push(Polynomial::monomial(T::one(), m));
        row = next;
    }
    row
}

/// `p_{n,0}, ..., p_{n,n}` with `p_{n,j} = Σ_k b(n,k,j) x^k`, built by
/// `p_{m,j} = Σ_{i<j} x p_{m-1,i} + Σ_{i=j}^{m-1} p_{m-1,i}` from `p_{0,0} = 1`.
pub fn build_little_p_family<T: Scalar>(n: usize) -> Vec<Polynomial<T>> {
    let mut row = vec![Polynomial::<T>::one()];
    for m in 1..=n {
        // prefix[j] = Σ_{i<j} p_{m-1,i}
        let mut prefix = vec![Polynomial::zero()];
        for p in &row {
            let last = prefix.last().expect("nonempty");
            prefix.push(last + p);
        }
        let total = prefix[m].clone();
        row = (0..=m)
            .map(|j| &prefix[j].shift(1) + &(&total - &prefix[j]))
            .collect();
    }
    row
}

/// The same family by the fractional derivative recurrence
/// `p_{m,j} = (m-j)/m [(1 + m x - x) p_{m-1,j} + (x - x^2) p_{m-1,j}'] + j x p_{m-1,j-1} + j/m (x - x^2) p_{m-1,j-1}'`
/// for `0 < j < m`, with `p_{m,0} = P^A_m` and `p_{m,m} = x P^A_m`.
/// Computed over the rationals.
pub fn build_little_p_family_fractional(n: usize) -> Vec<RatPoly> {
    let pa = eulerian_poly_a_family::<BigRational>(n);
    let mut row = vec![RatPoly::one()];
    for m in 1..=n {
        let mq = BigRational::from_i64(m as i64);
        let mut next = Vec::with_capacity(m + 1);
        next.push(pa[m].clone());
        for j in 1..m {
            let jq = BigRational::from_i64(j as i64);
            let keep = derivative_step(BigRational::one(), mq.clone() - BigRational::one(), &row[j])
                .scale(&(BigRational::from_i64((m - j) as i64) / &mq));
            let prev = &row[j - 1];
            let flip = &Polynomial::monomial(jq.clone(), 1) * prev;
            let flip = &flip + &derivative_step(BigRational::zero(), BigRational::zero(), prev).scale(&(jq / &mq));
            next.push(&keep + &flip);
        }
        next.push(pa[m].shift(1));
        row = next;
    }
    row
}

/// `C(x + a, n)` as a polynomial in `x`: `Π_{i<n} (x + a - i) / n!`.
pub fn binomial_poly(a: i64, n: usize) -> RatPoly {
    let mut out = RatPoly::one();
    let mut factorial = BigRational::one();
    for i in 0..n {
        out = &out * &RatPoly::linear(BigRational::from_i64(a - i as i64), BigRational::one());
        factorial *= BigRational::from_i64(i as i64 + 1);
    }
    out.scale(&(BigRational::one() / factorial))
}

/// Both Worpitzky identities for `Q_{n,k}` as polynomial identities in
/// `(u, y)`, with `u` in the first variable:
/// `Σ_k C(u+n-k, n) Q_{n,k}(y) = (u + 1 + u y)^n` and
/// `Σ_k C(u+k, n) Q_{n,k}(y) = (u + y + u y)^n`.
pub fn worpitzky_q(n: usize) -> CheckReport {
    let mut report = CheckReport::new(format!("Worpitzky identities for Q, n={n}"));
    let q = build_q_family::<BigRational>(n);
    let u = Bivariate::<BigRational>::x();
    let y = Bivariate::<BigRational>::y();
    let one = Bivariate::<BigRational>::one();
    let uy = &u * &y;

    let mut descending = Bivariate::zero();
    let mut ascending = Bivariate::zero();
    for (k, qk) in q.iter().enumerate() {
        let qy = Bivariate::from_y(qk);
        let k = k as i64;
        descending = &descending + &(&Bivariate::from_x(&binomial_poly(n as i64 - k, n)) * &qy);
        ascending = &ascending + &(&Bivariate::from_x(&binomial_poly(k, n)) * &qy);
    }
    let want = (&(&u + &one) + &uy).pow(n);
    report.expect_eq("Σ_k C(u+n-k,n) Q_{n,k}(y) = (u+1+uy)^n", format!("(n={n})"), &want, &descending);
    let want = (&(&u + &y) + &uy).pow(n);
    report.expect_eq("Σ_k C(u+k,n) Q_{n,k}(y) = (u+y+uy)^n", format!("(n={n})"), &want, &ascending);
    report
}

/// `Σ_k b(n,k,j) C(x+n-k, n) = x^j (1+x)^{n-j}` as a polynomial identity.
pub fn worpitzky_little_b(tables: &EulerianTables, n: usize, j: usize) -> CheckReport {
    let mut report = CheckReport::new(format!("Worpitzky identity for b, n={n}, j={j}"));
    let mut lhs = RatPoly::zero();
    for k in 0..=n {
        let b = BigRational::from_integer(tables.little_b(n, k as i64, j as i64).into());
        lhs = &lhs + &binomial_poly((n - k) as i64, n).scale(&b);
    }
    let want = RatPoly::from_ints(&[1, 1]).pow(n - j).shift(j);
    report.expect_eq("Σ_k b(n,k,j) C(x+n-k,n) = x^j (1+x)^(n-j)", format!("(n={n}, j={j})"), &want, &lhs);
    report
}

/// `P_{n,j}(x) = x^n P_{n,n-j}(1/x)`, `Q_{n,k}(y) = y^n Q_{n,n-k}(1/y)` and
/// `R_n(x,y) = x^n y^n R_n(1/x, 1/y)`.
pub fn check_poly_symmetries(n: usize) -> CheckReport {
    let mut report = CheckReport::new(format!("polynomial symmetries, n={n}"));
    let p = build_p_family::<BigInt>(n);
    let q = build_q_family::<BigInt>(n);
    for i in 0..=n {
        let idx = format!("(n={n}, j={i})");
        match p[n - i].reverse(n) {
            Ok(rev) => report.expect_eq("P_{n,j} = x^n P_{n,n-j}(1/x)", &idx, &p[i], &rev),
            Err(e) => report.expect(false, "P_{n,j} = x^n P_{n,n-j}(1/x)", &idx, || (p[i].to_string(), e.to_string())),
        }
        let idx = format!("(n={n}, k={i})");
        match q[n - i].reverse(n) {
            Ok(rev) => report.expect_eq("Q_{n,k} = y^n Q_{n,n-k}(1/y)", &idx, &q[i], &rev),
            Err(e) => report.expect(false, "Q_{n,k} = y^n Q_{n,n-k}(1/y)", &idx, || (q[i].to_string(), e.to_string())),
        }
    }
    let r = build_r::<BigInt>(n);
    let rev = r.reverse(n, n);
    report.expect(rev.as_ref() == Ok(&r), "R_n(x,y) = x^n y^n R_n(1/x,1/y)", format!("(n={n})"), || {
        (r.to_string(), format!("{rev:?}"))
    });
    report
}

/// Coefficients of every family against the number tables, agreement of the
/// two `p` recurrences, `P_{n,j} = C(n,j) p_{n,j}`, degrees,
/// `p_{n,n} = x p_{n,0}` and the evaluation sums at `x = 1`.
pub fn check_families(tables: &EulerianTables, n: usize) -> CheckReport {
    let mut report = CheckReport::new(format!("polynomial families, n={n}"));
    let p = build_p_family::<BigInt>(n);
    let q = build_q_family::<BigInt>(n);
    let lp = build_little_p_family::<BigInt>(n);
    let lp_frac = build_little_p_family_fractional(n);
    let pa = eulerian_poly_a_family::<BigInt>(n + 1);
    let n_fact: BigInt = (1..=n as u64).map(BigInt::from).product();
    let one = BigInt::one();

    report.expect_eq("P^A_n by recurrence = table row", format!("(n={n})"), &eulerian_poly_a(tables, n), &pa[n]);
    for j in 0..=n {
        let jj = j as i64;
        for k in 0..=n as i64 {
            let idx = format!("(n={n}, k={k}, j={j})");
            let big = BigInt::from(tables.big_b(n, k, jj));
            report.expect_eq("[x^k] P_{n,j} = B(n,k,j)", &idx, &big, &p[j].coeff(k as usize));
            report.expect_eq("[y^j] Q_{n,k} = B(n,k,j)", &idx, &big, &q[k as usize].coeff(j));
            let small = BigInt::from(tables.little_b(n, k, jj));
            report.expect_eq("[x^k] p_{n,j} = b(n,k,j)", &idx, &small, &lp[j].coeff(k as usize));
        }
        let idx = format!("(n={n}, j={j})");
        report.expect_eq("two p recurrences agree", &idx, &lp[j].to_rational(), &lp_frac[j]);
        let c = BigInt::from(tables.binomial(n, jj));
        report.expect_eq("P_{n,j} = C(n,j) p_{n,j}", &idx, &p[j], &lp[j].scale(&c));
        report.expect_eq("P_{n,j}(1) = C(n,j) n!", &idx, &(&c * &n_fact), &p[j].evaluate(&one));
        report.expect_eq("p_{n,j}(1) = n!", &idx, &n_fact, &lp[j].evaluate(&one));
        if n >= 1 {
            let want = if j < n { n - 1 } else { n };
            report.expect_eq("deg p_{n,j}", &idx, &want, &lp[j].degree().unwrap_or(0));
        }
    }
    if n >= 1 {
        report.expect_eq("p_{n,n} = x p_{n,0}", format!("(n={n})"), &lp[0].shift(1), &lp[n]);
    }
    let sum = lp.iter().fold(IntPoly::zero(), |acc, p| &acc + p);
    report.expect_eq("Σ_j p_{n,j} = P^A_{n+1}", format!("(n={n})"), &pa[n + 1], &sum);
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(c: &[i64]) -> IntPoly {
        IntPoly::from_ints(c)
    }

    #[test]
    fn eulerian_polynomials() {
        let t = EulerianTables::new(4);
        assert_eq!(eulerian_poly_a(&t, 0), IntPoly::one());
        assert_eq!(eulerian_poly_a(&t, 4), ints(&[1, 11, 11, 1]));
        assert_eq!(eulerian_poly_b(&t, 2), ints(&[1, 6, 1]));
        assert_eq!(eulerian_poly_a_family::<BigInt>(4)[4], ints(&[1, 11, 11, 1]));
        assert_eq!(ints(&[1, 4, 1]).evaluate(&BigInt::one()), BigInt::from(6));
    }

    #[test]
    fn p_family_examples() {
        assert_eq!(build_p_family::<BigInt>(2)[1], ints(&[0, 4]));
        assert_eq!(build_p_family::<BigInt>(5)[3], ints(&[0, 40, 480, 600, 80]));
        // The i64 instantiation gives the same polynomials.
        let small = build_p_family::<i64>(6);
        let big = build_p_family::<BigInt>(6);
        for (a, b) in small.iter().zip(&big) {
            assert_eq!(a.map(|c| BigInt::from(*c)), *b);
        }
    }

    #[test]
    fn q_family_examples() {
        assert_eq!(build_q_family::<BigInt>(3)[0], IntPoly::one());
        assert_eq!(build_q_family::<BigInt>(2)[1], ints(&[1, 4, 1]));
        assert_eq!(build_q_family::<BigInt>(4)[2], ints(&[11, 56, 96, 56, 11]));
    }

    #[test]
    fn little_p_examples() {
        assert_eq!(build_little_p_family::<BigInt>(2)[1], ints(&[0, 2]));
        assert_eq!(build_little_p_family::<BigInt>(4)[2], ints(&[0, 4, 16, 4]));
        assert_eq!(build_little_p_family::<BigInt>(5)[0], eulerian_poly_a_family::<BigInt>(5)[5]);
    }

    #[test]
    fn binomial_polynomials() {
        // C(x+1, 1) = x + 1, C(x, 2) = (x^2 - x)/2
        assert_eq!(binomial_poly(1, 1), ints(&[1, 1]).to_rational());
        let half = BigRational::new(1.into(), 2.into());
        assert_eq!(binomial_poly(0, 2), RatPoly::new(vec![BigRational::zero(), -half.clone(), half]));
        assert_eq!(binomial_poly(5, 0), RatPoly::one());
    }

    #[test]
    fn worpitzky_small() {
        let t = EulerianTables::new(6);
        for n in 0..=6 {
            let r = worpitzky_q(n);
            assert!(r.passed(), "{:?}", r.first_failure());
            for j in 0..=n {
                let r = worpitzky_little_b(&t, n, j);
                assert!(r.passed(), "{:?}", r.first_failure());
            }
        }
    }

    #[test]
    fn symmetries_and_families() {
        let t = EulerianTables::new(8);
        for n in 0..=8 {
            let r = check_poly_symmetries(n);
            assert!(r.passed(), "{:?}", r.first_failure());
            let r = check_families(&t, n);
            assert!(r.passed(), "{:?}", r.first_failure());
        }
    }
}
