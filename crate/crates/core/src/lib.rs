//! Exact computation of type B Eulerian numbers refined by the number of
//! minus signs, together with brute-force oracles, the two constructive
//! bijections behind them, their generating polynomials and series, and
//! exact real-root certification for the associated polynomial families.
//!
//! Polynomial and series types are generic over the coefficient ring
//! ([`scalar::Scalar`]); the aliases below fix the exact types the
//! verification code uses.

pub mod bijections;
pub mod families;
pub mod numbers;
pub mod perm;
pub mod poly;
pub mod report;
pub mod roots;
pub mod scalar;
pub mod series;
pub mod suites;

pub use numbers::{BigCount, EulerianTables, Family, TriangleTable};
pub use report::{CheckReport, Failure};

use num_bigint::BigInt;
use num_rational::BigRational;

pub type IntPolynomial = poly::Polynomial<BigInt>;
pub type RatPolynomial = poly::Polynomial<BigRational>;
pub type IntBivariate = series::Bivariate<BigInt>;
pub type RatBivariate = series::Bivariate<BigRational>;
pub type RatSeries = series::TruncatedSeries<BigRational>;
