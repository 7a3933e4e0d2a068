//! Dense univariate polynomials over an exact coefficient ring.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use thiserror::Error;

use crate::scalar::{rational_to_integer, FieldScalar, Scalar};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("cannot reverse with respect to degree {n}: polynomial has degree {degree}")]
    ReverseDegree { n: usize, degree: usize },
    #[error("coefficient {value} of x^{power} is not an integer")]
    NotIntegral { power: usize, value: String },
}

/// `Σ coeffs[i] x^i`, with no trailing zero coefficients.
///
/// The zero polynomial has no coefficients and no degree.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> Polynomial<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    /// `c x^power`.
    pub fn monomial(c: T, power: usize) -> Self {
        let mut coeffs = vec![T::zero(); power + 1];
        coeffs[power] = c;
        Self::new(coeffs)
    }

    /// `x`.
    pub fn x() -> Self {
        Self::monomial(T::one(), 1)
    }

    /// `a + b x`.
    pub fn linear(a: T, b: T) -> Self {
        Self::new(vec![a, b])
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| T::from_i64(c)).collect())
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    /// Coefficient of `x^power` (zero beyond the degree).
    pub fn coeff(&self, power: usize) -> T {
        self.coeffs.get(power).cloned().unwrap_or_else(T::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.clone() * c).collect())
    }

    /// Multiplies by `x^power`.
    pub fn shift(&self, power: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![T::zero(); power];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    /// Formal derivative.
    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.clone() * &T::from_i64(i as i64))
                .collect(),
        )
    }

    /// Horner evaluation.
    pub fn evaluate(&self, at: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * at + c)
    }

    /// `x^n p(1/x)`; requires `deg p <= n`.
    pub fn reverse(&self, n: usize) -> Result<Self, PolyError> {
        match self.degree() {
            None => Ok(Self::zero()),
            Some(d) if d > n => Err(PolyError::ReverseDegree { n, degree: d }),
            Some(_) => {
                let mut coeffs: Vec<T> = (0..=n).map(|i| self.coeff(i)).collect();
                coeffs.reverse();
                Ok(Self::new(coeffs))
            }
        }
    }

    pub fn pow(&self, exp: usize) -> Self {
        (0..exp).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Substitutes `x -> q(x)`.
    pub fn compose(&self, q: &Self) -> Self {
        self.coeffs
            .iter()
            .rev()
            .fold(Self::zero(), |acc, c| &(&acc * q) + &Self::constant(c.clone()))
    }

    /// Applies `f` to each coefficient.
    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Polynomial<U> {
        Polynomial::new(self.coeffs.iter().map(f).collect())
    }
}

impl<T: FieldScalar> Polynomial<T> {
    /// Euclidean division: `self = q * divisor + r` with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let d = divisor.degree().expect("division by the zero polynomial");
        let lead = divisor.leading().expect("nonzero").clone();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![T::zero(); self.coeffs.len().saturating_sub(d)];
        while rem.len() > d && !rem.is_empty() {
            let top = rem.len() - 1;
            let c = rem[top].clone() / &lead;
            let shift = top - d;
            for (i, dc) in divisor.coeffs.iter().enumerate() {
                rem[shift + i] = rem[shift + i].clone() - &(c.clone() * dc);
            }
            quot[shift] = c;
            rem.pop();
            while rem.last().is_some_and(|c| c.is_zero()) {
                rem.pop();
            }
        }
        (Self::new(quot), Self::new(rem))
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(lead) => {
                let lead = lead.clone();
                Self::new(self.coeffs.iter().map(|c| c.clone() / &lead).collect())
            }
        }
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }
}

impl Polynomial<BigInt> {
    pub fn to_rational(&self) -> Polynomial<BigRational> {
        self.map(|c| BigRational::from_integer(c.clone()))
    }
}

impl Polynomial<BigRational> {
    /// Converts back to integer coefficients, failing on any fractional one.
    pub fn to_integer(&self) -> Result<Polynomial<BigInt>, PolyError> {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(power, c)| {
                rational_to_integer(c).ok_or_else(|| PolyError::NotIntegral {
                    power,
                    value: c.to_string(),
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Polynomial::new(coeffs))
    }
}

impl<T: Scalar> Default for Polynomial<T> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<T: Scalar> Add for &Polynomial<T> {
    type Output = Polynomial<T>;

    fn add(self, rhs: Self) -> Polynomial<T> {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<T: Scalar> Sub for &Polynomial<T> {
    type Output = Polynomial<T>;

    fn sub(self, rhs: Self) -> Polynomial<T> {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<T: Scalar> Mul for &Polynomial<T> {
    type Output = Polynomial<T>;

    fn mul(self, rhs: Self) -> Polynomial<T> {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + &(a.clone() * b);
            }
        }
        Polynomial::new(out)
    }
}

impl<T: Scalar> Neg for &Polynomial<T> {
    type Output = Polynomial<T>;

    fn neg(self) -> Polynomial<T> {
        Polynomial::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

macro_rules! forward_owned {
    ($($tr:ident::$m:ident),*) => {$(
        impl<T: Scalar> $tr for Polynomial<T> {
            type Output = Polynomial<T>;
            fn $m(self, rhs: Self) -> Polynomial<T> {
                (&self).$m(&rhs)
            }
        }
    )*};
}

forward_owned!(Add::add, Sub::sub, Mul::mul);

impl<T: Scalar> fmt::Display for Polynomial<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})x")?,
                _ => write!(f, "({c})x^{i}")?,
            }
        }
        Ok(())
    }
}

impl<T: Scalar> fmt::Debug for Polynomial<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial{:?}", self.coeffs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    type P = Polynomial<i64>;

    #[test]
    fn canonical_form_drops_trailing_zeros() {
        assert_eq!(P::from_ints(&[1, 2, 0, 0]).coeffs(), &[1, 2]);
        assert!(P::from_ints(&[0, 0]).is_zero());
        assert_eq!(P::zero().degree(), None);
    }

    #[test]
    fn reverse_examples() {
        assert_eq!(P::from_ints(&[1, 1]).reverse(2).unwrap(), P::from_ints(&[0, 1, 1]));
        assert_eq!(P::from_ints(&[0, 4]).reverse(2).unwrap(), P::from_ints(&[0, 4]));
        assert!(matches!(
            P::from_ints(&[1, 1, 1]).reverse(1),
            Err(PolyError::ReverseDegree { n: 1, degree: 2 })
        ));
    }

    #[test]
    fn derivative_and_evaluate() {
        assert_eq!(P::from_ints(&[0, 0, 1]).derivative(), P::from_ints(&[0, 2]));
        assert_eq!(P::from_ints(&[1, 4, 1]).evaluate(&1), 6);
        assert_eq!(P::constant(5).derivative(), P::zero());
    }

    #[test]
    fn rational_division() {
        let a = Polynomial::<BigRational>::from_ints(&[-1, 0, 1]);
        let b = Polynomial::<BigRational>::from_ints(&[1, 1]);
        let (q, r) = a.div_rem(&b);
        assert_eq!(q, Polynomial::from_ints(&[-1, 1]));
        assert!(r.is_zero());
        let g = Polynomial::<BigRational>::from_ints(&[0, 2, 2]).gcd(&Polynomial::from_ints(&[0, 0, 3, 3]));
        assert_eq!(g, Polynomial::from_ints(&[0, 1, 1]));
    }

    #[test]
    fn integer_round_trip_rejects_fractions() {
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        let p = Polynomial::new(vec![half]);
        assert!(p.to_integer().is_err());
    }

    fn small_poly() -> impl Strategy<Value = Vec<i64>> {
        prop::collection::vec(-20i64..20, 0..6)
    }

    proptest! {
        #[test]
        fn ring_laws_hold(a in small_poly(), b in small_poly(), c in small_poly()) {
            let (a, b, c) = (P::from_ints(&a), P::from_ints(&b), P::from_ints(&c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a + &b) - &b, a.clone());
        }

        #[test]
        fn machine_and_big_coefficients_agree(a in small_poly(), b in small_poly(), x in -5i64..5) {
            let (pa, pb) = (P::from_ints(&a), P::from_ints(&b));
            let (ba, bb) = (Polynomial::<BigInt>::from_ints(&a), Polynomial::<BigInt>::from_ints(&b));
            let small = (&pa * &pb).derivative().evaluate(&x);
            let big = (&ba * &bb).derivative().evaluate(&BigInt::from(x));
            prop_assert_eq!(BigInt::from(small), big);
        }

        #[test]
        fn reverse_is_an_involution(a in small_poly()) {
            let p = P::from_ints(&a);
            let n = p.degree().unwrap_or(0) + 2;
            let twice = p.reverse(n).unwrap().reverse(n).unwrap();
            prop_assert_eq!(twice, p);
        }

        #[test]
        fn division_identity(a in small_poly(), b in small_poly()) {
            let a = Polynomial::<BigRational>::from_ints(&a);
            let b = Polynomial::<BigRational>::from_ints(&b);
            prop_assume!(!b.is_zero());
            let (q, r) = a.div_rem(&b);
            prop_assert_eq!(&(&q * &b) + &r, a);
            prop_assert!(r.degree() < b.degree() || r.is_zero());
        }
    }
}
