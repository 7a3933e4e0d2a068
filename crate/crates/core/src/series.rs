//! Bivariate polynomials in `(x, y)` and power series in `z` truncated at a
//! fixed order, with bivariate coefficients.
//!
//! Generating-function identities whose closed forms divide by `1 - x e^{...}`
//! are checked after multiplying through by the denominator, so no series is
//! ever inverted.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use thiserror::Error;

use crate::numbers::EulerianTables;
use crate::poly::Polynomial;
use crate::report::CheckReport;
use crate::scalar::{FieldScalar, Scalar};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SeriesError {
    #[error("exp needs a series with zero constant term")]
    NonzeroConstant,
    #[error("cannot reverse with respect to degrees ({nx}, {ny}): term x^{px} y^{py} is too high")]
    ReverseDegree { nx: usize, ny: usize, px: usize, py: usize },
}

/// `Σ c[(i, j)] x^i y^j`, with no stored zero coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct Bivariate<T> {
    terms: BTreeMap<(usize, usize), T>,
}

impl<T: Scalar> Bivariate<T> {
    pub fn zero() -> Self {
        Self { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        Self::monomial(c, 0, 0)
    }

    /// `c x^i y^j`.
    pub fn monomial(c: T, i: usize, j: usize) -> Self {
        let mut out = Self::zero();
        out.add_term(i, j, c);
        out
    }

    pub fn x() -> Self {
        Self::monomial(T::one(), 1, 0)
    }

    pub fn y() -> Self {
        Self::monomial(T::one(), 0, 1)
    }

    /// Builds from `(i, j, coefficient)` triples, summing repeats.
    pub fn from_terms(terms: impl IntoIterator<Item = (usize, usize, T)>) -> Self {
        let mut out = Self::zero();
        for (i, j, c) in terms {
            out.add_term(i, j, c);
        }
        out
    }

    /// `p(x)` viewed as a bivariate polynomial.
    pub fn from_x(p: &Polynomial<T>) -> Self {
        Self::from_terms(p.coeffs().iter().enumerate().map(|(i, c)| (i, 0, c.clone())))
    }

    /// `q(y)` viewed as a bivariate polynomial.
    pub fn from_y(q: &Polynomial<T>) -> Self {
        Self::from_terms(q.coeffs().iter().enumerate().map(|(j, c)| (0, j, c.clone())))
    }

    /// `p(x) q(y)`.
    pub fn outer(p: &Polynomial<T>, q: &Polynomial<T>) -> Self {
        let mut out = Self::zero();
        for (i, a) in p.coeffs().iter().enumerate() {
            for (j, b) in q.coeffs().iter().enumerate() {
                out.add_term(i, j, a.clone() * b);
            }
        }
        out
    }

    fn add_term(&mut self, i: usize, j: usize, c: T) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry((i, j)).or_insert_with(T::zero);
        *entry = entry.clone() + &c;
        if entry.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    pub fn coeff(&self, i: usize, j: usize) -> T {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(T::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Nonzero terms in `(i, j)` order.
    pub fn terms(&self) -> impl Iterator<Item = (usize, usize, &T)> {
        self.terms.iter().map(|(&(i, j), c)| (i, j, c))
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::from_terms(self.terms().map(|(i, j, a)| (i, j, a.clone() * c)))
    }

    /// `∂/∂x`.
    pub fn partial_x(&self) -> Self {
        Self::from_terms(
            self.terms()
                .filter(|(i, _, _)| *i > 0)
                .map(|(i, j, c)| (i - 1, j, c.clone() * &T::from_i64(i as i64))),
        )
    }

    pub fn pow(&self, exp: usize) -> Self {
        (0..exp).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Substitutes a constant for `y`, leaving a polynomial in `x`.
    pub fn at_y(&self, y: &T) -> Polynomial<T> {
        let degree = self.terms().map(|(i, _, _)| i).max().map_or(0, |d| d + 1);
        let mut coeffs = vec![T::zero(); degree];
        for (i, j, c) in self.terms() {
            let mut term = c.clone();
            for _ in 0..j {
                term = term * y;
            }
            coeffs[i] = coeffs[i].clone() + &term;
        }
        Polynomial::new(coeffs)
    }

    /// `x^nx y^ny p(1/x, 1/y)`.
    pub fn reverse(&self, nx: usize, ny: usize) -> Result<Self, SeriesError> {
        let mut out = Self::zero();
        for (px, py, c) in self.terms() {
            if px > nx || py > ny {
                return Err(SeriesError::ReverseDegree { nx, ny, px, py });
            }
            out.add_term(nx - px, ny - py, c.clone());
        }
        Ok(out)
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Bivariate<U> {
        Bivariate::from_terms(self.terms().map(|(i, j, c)| (i, j, f(c))))
    }
}

impl Bivariate<BigInt> {
    pub fn to_rational(&self) -> Bivariate<BigRational> {
        self.map(|c| BigRational::from_integer(c.clone()))
    }
}

impl<T: Scalar> Add for &Bivariate<T> {
    type Output = Bivariate<T>;

    fn add(self, rhs: Self) -> Bivariate<T> {
        let mut out = self.clone();
        for (i, j, c) in rhs.terms() {
            out.add_term(i, j, c.clone());
        }
        out
    }
}

impl<T: Scalar> Sub for &Bivariate<T> {
    type Output = Bivariate<T>;

    fn sub(self, rhs: Self) -> Bivariate<T> {
        let mut out = self.clone();
        for (i, j, c) in rhs.terms() {
            out.add_term(i, j, -c.clone());
        }
        out
    }
}

impl<T: Scalar> Mul for &Bivariate<T> {
    type Output = Bivariate<T>;

    fn mul(self, rhs: Self) -> Bivariate<T> {
        let mut out = Bivariate::zero();
        for (i1, j1, a) in self.terms() {
            for (i2, j2, b) in rhs.terms() {
                out.add_term(i1 + i2, j1 + j2, a.clone() * b);
            }
        }
        out
    }
}

impl<T: Scalar> Neg for &Bivariate<T> {
    type Output = Bivariate<T>;

    fn neg(self) -> Bivariate<T> {
        self.map(|c| -c.clone())
    }
}

impl<T: Scalar> fmt::Display for Bivariate<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms()
            .map(|(i, j, c)| match (i, j) {
                (0, 0) => format!("{c}"),
                (i, 0) => format!("({c})x^{i}"),
                (0, j) => format!("({c})y^{j}"),
                (i, j) => format!("({c})x^{i}y^{j}"),
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl<T: Scalar> fmt::Debug for Bivariate<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Bivariate({self})")
    }
}

/// `Σ_{m=0}^{order} coeffs[m] z^m`; everything beyond `z^order` is discarded.
#[derive(Clone, PartialEq, Eq)]
pub struct TruncatedSeries<T> {
    order: usize,
    coeffs: Vec<Bivariate<T>>,
}

impl<T: Scalar> TruncatedSeries<T> {
    /// Pads or truncates `coeffs` to `order + 1` entries.
    pub fn new(order: usize, mut coeffs: Vec<Bivariate<T>>) -> Self {
        coeffs.resize_with(order + 1, Bivariate::zero);
        Self { order, coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self::new(order, Vec::new())
    }

    pub fn constant(order: usize, c: Bivariate<T>) -> Self {
        Self::new(order, vec![c])
    }

    /// `c z`.
    pub fn linear(order: usize, c: Bivariate<T>) -> Self {
        Self::new(order, vec![Bivariate::zero(), c])
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeff(&self, m: usize) -> &Bivariate<T> {
        &self.coeffs[m]
    }

    pub fn coeffs(&self) -> &[Bivariate<T>] {
        &self.coeffs
    }

    /// Multiplies every coefficient by the same bivariate polynomial.
    pub fn scale(&self, c: &Bivariate<T>) -> Self {
        Self::new(self.order, self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Substitutes `z -> c z`: coefficient `m` is multiplied by `c^m`.
    pub fn substitute_scaled(&self, c: &Bivariate<T>) -> Self {
        let mut power = Bivariate::one();
        let mut out = Vec::with_capacity(self.order + 1);
        for a in &self.coeffs {
            out.push(a * &power);
            power = &power * c;
        }
        Self::new(self.order, out)
    }

    fn assert_same_order(&self, other: &Self) {
        assert_eq!(self.order, other.order, "series truncated at different orders");
    }
}

impl<T: FieldScalar> TruncatedSeries<T> {
    /// `Σ terms[m] z^m / m!`.
    pub fn from_egf(order: usize, terms: &[Bivariate<T>]) -> Self {
        let mut factorial = T::one();
        let mut coeffs = Vec::with_capacity(order + 1);
        for m in 0..=order {
            if m > 0 {
                factorial = factorial * &T::from_i64(m as i64);
            }
            let inv = T::one() / &factorial;
            coeffs.push(terms.get(m).map(|t| t.scale(&inv)).unwrap_or_else(Bivariate::zero));
        }
        Self::new(order, coeffs)
    }

    /// `Σ_{m=0}^{order} s^m / m!`, defined when `s` has no constant term.
    pub fn exp(&self) -> Result<Self, SeriesError> {
        if !self.coeffs[0].is_zero() {
            return Err(SeriesError::NonzeroConstant);
        }
        let mut total = Self::constant(self.order, Bivariate::one());
        let mut power = total.clone();
        let mut factorial = T::one();
        for m in 1..=self.order {
            power = &power * self;
            factorial = factorial * &T::from_i64(m as i64);
            let inv = Bivariate::constant(T::one() / &factorial);
            total = &total + &power.scale(&inv);
        }
        Ok(total)
    }

    /// `e^{c z}`.
    pub fn exp_linear(order: usize, c: &Bivariate<T>) -> Self {
        Self::linear(order, c.clone()).exp().expect("linear series has no constant term")
    }
}

impl<T: Scalar> fmt::Debug for TruncatedSeries<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("TruncatedSeries").field("order", &self.order).field("coeffs", &self.coeffs).finish()
    }
}

impl<T: Scalar> Add for &TruncatedSeries<T> {
    type Output = TruncatedSeries<T>;

    fn add(self, rhs: Self) -> TruncatedSeries<T> {
        self.assert_same_order(rhs);
        let coeffs = self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect();
        TruncatedSeries::new(self.order, coeffs)
    }
}

impl<T: Scalar> Sub for &TruncatedSeries<T> {
    type Output = TruncatedSeries<T>;

    fn sub(self, rhs: Self) -> TruncatedSeries<T> {
        self.assert_same_order(rhs);
        let coeffs = self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect();
        TruncatedSeries::new(self.order, coeffs)
    }
}

impl<T: Scalar> Mul for &TruncatedSeries<T> {
    type Output = TruncatedSeries<T>;

    fn mul(self, rhs: Self) -> TruncatedSeries<T> {
        self.assert_same_order(rhs);
        let mut coeffs = vec![Bivariate::zero(); self.order + 1];
        for (m, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (l, b) in rhs.coeffs.iter().enumerate().take(self.order + 1 - m) {
                coeffs[m + l] = &coeffs[m + l] + &(a * b);
            }
        }
        TruncatedSeries::new(self.order, coeffs)
    }
}

/// `R_0, ..., R_n` by
/// `R_m = (1 + m x y + m x - x) R_{m-1} + (x - x^2)(1 + y) ∂R_{m-1}/∂x`, `R_0 = 1`.
pub fn build_r_family<T: Scalar>(n: usize) -> Vec<Bivariate<T>> {
    let x = Bivariate::<T>::x();
    let y = Bivariate::<T>::y();
    let one = Bivariate::<T>::one();
    let x_minus_x2 = &x - &(&x * &x);
    let shift_factor = &x_minus_x2 * &(&one + &y);
    let mut family = vec![one.clone()];
    for m in 1..=n {
        let mt = Bivariate::constant(T::from_i64(m as i64));
        let xy = &x * &y;
        let lin = &(&(&one + &(&mt * &xy)) + &(&mt * &x)) - &x;
        let prev = &family[m - 1];
        let next = &(&lin * prev) + &(&shift_factor * &prev.partial_x());
        family.push(next);
    }
    family
}

/// `R_n(x, y) = Σ B(n,k,j) x^k y^j`, built by its recurrence.
pub fn build_r<T: Scalar>(n: usize) -> Bivariate<T> {
    build_r_family(n).pop().expect("family is nonempty")
}

fn rational_series_from_x_polys(order: usize, polys: &[Polynomial<BigInt>]) -> TruncatedSeries<BigRational> {
    let terms: Vec<Bivariate<BigRational>> = polys.iter().map(|p| Bivariate::from_x(&p.to_rational())).collect();
    TruncatedSeries::from_egf(order, &terms)
}

fn expect_series_eq(
    report: &mut CheckReport,
    identity: &str,
    lhs: &TruncatedSeries<BigRational>,
    rhs: &TruncatedSeries<BigRational>,
) {
    for m in 0..=lhs.order() {
        report.expect_eq(identity, format!("z^{m}"), rhs.coeff(m), lhs.coeff(m));
    }
}

/// Cleared-denominator checks of the three exponential generating functions
/// to order `order`:
///
/// * `(1 - x e^{(1-x)(1+y)z}) Σ R_n z^n/n! = (1-x) e^{(1-x)z}`,
/// * `(1 - t e^{(1-t)z}) Σ P^A_n(t) z^n/n! = (1-t) e^{(1-t)z}`,
/// * `(1 - t e^{2(1-t)z}) Σ P^B_n(t) z^n/n! = (1-t) e^{(1-t)z}`.
pub fn verify_egf(order: usize) -> CheckReport {
    let mut report = CheckReport::new(format!("generating functions to z^{order}"));
    let tables = EulerianTables::new(order);
    type R = BigRational;
    let one = Bivariate::<R>::one();
    let x = Bivariate::<R>::x();
    let y = Bivariate::<R>::y();
    let one_minus_x = &one - &x;
    let rhs = TruncatedSeries::exp_linear(order, &one_minus_x).scale(&one_minus_x);

    // f(x, y, z)
    let r_terms: Vec<Bivariate<R>> = build_r_family::<BigInt>(order).iter().map(|r| r.to_rational()).collect();
    let f = TruncatedSeries::from_egf(order, &r_terms);
    let inner = TruncatedSeries::exp_linear(order, &(&one_minus_x * &(&one + &y)));
    let denom = &TruncatedSeries::constant(order, one.clone()) - &inner.scale(&x);
    expect_series_eq(&mut report, "EGF of R_n, cleared", &(&denom * &f), &rhs);

    // f^A(t, z)
    let pa: Vec<Polynomial<BigInt>> = (0..=order).map(|n| crate::families::eulerian_poly_a(&tables, n)).collect();
    let fa = rational_series_from_x_polys(order, &pa);
    let denom = &TruncatedSeries::constant(order, one.clone())
        - &TruncatedSeries::exp_linear(order, &one_minus_x).scale(&x);
    expect_series_eq(&mut report, "EGF of P^A_n, cleared", &(&denom * &fa), &rhs);

    // f^B(t, z)
    let pb: Vec<Polynomial<BigInt>> = (0..=order).map(|n| crate::families::eulerian_poly_b(&tables, n)).collect();
    let fb = rational_series_from_x_polys(order, &pb);
    let two = Bivariate::constant(R::from_i64(2));
    let denom = &TruncatedSeries::constant(order, one.clone())
        - &TruncatedSeries::exp_linear(order, &(&two * &one_minus_x)).scale(&x);
    expect_series_eq(&mut report, "EGF of P^B_n, cleared", &(&denom * &fb), &rhs);

    report
}

/// `Σ R_n z^n/n! = f^A(x, (1+y)z) e^{(x-1)yz}` to order `order`.
pub fn verify_product_relation(order: usize) -> CheckReport {
    let mut report = CheckReport::new(format!("product relation to z^{order}"));
    let tables = EulerianTables::new(order);
    type R = BigRational;
    let one = Bivariate::<R>::one();
    let x = Bivariate::<R>::x();
    let y = Bivariate::<R>::y();

    let r_terms: Vec<Bivariate<R>> = build_r_family::<BigInt>(order).iter().map(|r| r.to_rational()).collect();
    let f = TruncatedSeries::from_egf(order, &r_terms);

    let pa: Vec<Polynomial<BigInt>> = (0..=order).map(|n| crate::families::eulerian_poly_a(&tables, n)).collect();
    let fa = rational_series_from_x_polys(order, &pa).substitute_scaled(&(&one + &y));
    let correction = TruncatedSeries::exp_linear(order, &(&(&x - &one) * &y));
    expect_series_eq(&mut report, "f = f^A(x,(1+y)z) e^{(x-1)yz}", &f, &(&fa * &correction));
    report
}

/// Coefficients of `R_n` against the `B(n,k,j)` table, the reflection
/// symmetry, and the specializations `y = 0` and `y = 1`.
pub fn check_r_family(tables: &EulerianTables, n_max: usize) -> CheckReport {
    let mut report = CheckReport::new("R_n family");
    let family = build_r_family::<BigInt>(n_max);
    for (n, r) in family.iter().enumerate() {
        for k in 0..=n {
            for j in 0..=n {
                let want = BigInt::from(tables.big_b(n, k as i64, j as i64));
                report.expect_eq("[x^k y^j] R_n = B(n,k,j)", format!("(n={n}, k={k}, j={j})"), &want, &r.coeff(k, j));
            }
        }
        let reversed = r.reverse(n, n);
        report.expect(reversed.as_ref() == Ok(r), "R_n(x,y) = x^n y^n R_n(1/x,1/y)", format!("(n={n})"), || {
            (r.to_string(), format!("{reversed:?}"))
        });
        let pa = crate::families::eulerian_poly_a(tables, n);
        report.expect_eq("R_n(x,0) = P^A_n(x)", format!("(n={n})"), &pa, &r.at_y(&BigInt::from(0)));
        let pb = crate::families::eulerian_poly_b(tables, n);
        report.expect_eq("R_n(x,1) = P^B_n(x)", format!("(n={n})"), &pb, &r.at_y(&BigInt::from(1)));
    }
    report
}
