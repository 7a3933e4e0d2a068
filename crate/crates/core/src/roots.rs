//! Exact real-root counting and isolation with Sturm sequences, and
//! certification of the interleaver relation between real-rooted polynomials.
//!
//! Sturm sequences are kept over the integers: each remainder is a
//! pseudo-remainder with its sign corrected and its content divided out, which
//! changes every term by a positive factor only and so leaves all sign
//! variation counts intact.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::families::{build_little_p_family, build_p_family, eulerian_poly_a_family};
use crate::poly::Polynomial;
use crate::report::CheckReport;

type IntPoly = Polynomial<BigInt>;
type RatPoly = Polynomial<BigRational>;

/// Seed of the generator behind the pseudo-random nonnegative coefficient
/// vectors in [`verify_interlacing_sequence`].
pub const COROLLARY_SEED: u64 = 0x5eb_0610;
/// Number of pseudo-random coefficient vectors per family.
pub const COROLLARY_RANDOM_VECTORS: usize = 10;
/// Pseudo-random coefficients are drawn uniformly from `0..=COROLLARY_MAX_COEFF`.
pub const COROLLARY_MAX_COEFF: u32 = 1000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RootError {
    #[error("the zero polynomial has no finite root set")]
    ZeroPolynomial,
    #[error("leading coefficient of {0} must be positive")]
    NonPositiveLeading(String),
}

/// A point of the extended real line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Endpoint {
    NegInfinity,
    At(BigRational),
    PosInfinity,
}

/// Clears denominators and content, leaving a primitive integer polynomial
/// with positive leading coefficient.
pub fn primitive_part(p: &RatPoly) -> IntPoly {
    if p.is_zero() {
        return IntPoly::zero();
    }
    let lcm = p.coeffs().iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = p.coeffs().iter().map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer()).collect();
    primitive_int(&IntPoly::new(ints))
}

fn primitive_int(p: &IntPoly) -> IntPoly {
    let Some(lead) = p.leading() else {
        return IntPoly::zero();
    };
    let mut content = p.coeffs().iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if lead.is_negative() {
        content = -content;
    }
    p.map(|c| c / &content)
}

/// Sign of `p(a)`, evaluated without fractions as
/// `Σ c_i num^i den^(d-i)`, which differs from `p(a)` by the positive factor `den^d`.
pub fn sign_at(p: &IntPoly, at: &BigRational) -> i8 {
    let Some(d) = p.degree() else { return 0 };
    let (num, den) = (at.numer(), at.denom());
    let mut total = BigInt::zero();
    let mut num_pow = BigInt::one();
    let mut den_pows = vec![BigInt::one(); d + 1];
    for i in 1..=d {
        den_pows[i] = &den_pows[i - 1] * den;
    }
    for (i, c) in p.coeffs().iter().enumerate() {
        total += c * &num_pow * &den_pows[d - i];
        num_pow *= num;
    }
    sign(&total)
}

fn sign(v: &BigInt) -> i8 {
    if v.is_positive() {
        1
    } else if v.is_negative() {
        -1
    } else {
        0
    }
}

fn sign_at_endpoint(p: &IntPoly, at: &Endpoint) -> i8 {
    match at {
        Endpoint::At(q) => sign_at(p, q),
        Endpoint::PosInfinity => p.leading().map_or(0, sign),
        Endpoint::NegInfinity => {
            let s = p.leading().map_or(0, sign);
            if p.degree().unwrap_or(0) % 2 == 1 {
                -s
            } else {
                s
            }
        }
    }
}

/// Integer pseudo-remainder `prem(a, b)` with `lc(b)^(deg a - deg b + 1) a = q b + prem`.
fn pseudo_remainder(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let db = b.degree().expect("nonzero divisor");
    let lead = b.leading().expect("nonzero").clone();
    let mut rem = a.coeffs().to_vec();
    let Some(da) = a.degree() else {
        return IntPoly::zero();
    };
    if da < db {
        return a.clone();
    }
    for _ in 0..=(da - db) {
        // one step per degree, whether or not the current top term vanishes
        let top = rem.len() - 1;
        let c = rem[top].clone();
        for v in rem.iter_mut() {
            *v = &*v * &lead;
        }
        if !c.is_zero() {
            let shift = top - db;
            for (i, bc) in b.coeffs().iter().enumerate() {
                rem[shift + i] -= &c * bc;
            }
        }
        rem.pop();
    }
    IntPoly::new(rem)
}

/// A Sturm sequence `p_0 = p, p_1 = p', p_{i+1} = -rem(p_{i-1}, p_i)`, each
/// entry scaled by a positive constant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SturmChain {
    chain: Vec<IntPoly>,
}

impl SturmChain {
    pub fn new(p: &IntPoly) -> Result<Self, RootError> {
        if p.is_zero() {
            return Err(RootError::ZeroPolynomial);
        }
        let mut chain = vec![p.clone()];
        let d = p.derivative();
        if d.is_zero() {
            return Ok(Self { chain });
        }
        chain.push(primitive_keep_sign(&d));
        loop {
            let n = chain.len();
            let (a, b) = (&chain[n - 2], &chain[n - 1]);
            let prem = pseudo_remainder(a, b);
            if prem.is_zero() {
                break;
            }
            // rem = prem / lc(b)^(δ+1); the Sturm entry is -rem.
            let delta = a.degree().unwrap_or(0) - b.degree().unwrap_or(0);
            let lead_negative = b.leading().expect("nonzero").is_negative();
            let flip = !(lead_negative && delta % 2 == 0);
            let next = if flip { -&prem } else { prem };
            chain.push(primitive_keep_sign(&next));
        }
        Ok(Self { chain })
    }

    pub fn polys(&self) -> &[IntPoly] {
        &self.chain
    }

    /// Number of sign changes in the chain at `at`, zeros skipped.
    pub fn variations(&self, at: &Endpoint) -> usize {
        let signs: Vec<i8> = self.chain.iter().map(|p| sign_at_endpoint(p, at)).filter(|s| *s != 0).collect();
        signs.windows(2).filter(|w| w[0] != w[1]).count()
    }

    /// Distinct real roots in `(a, b]`, valid when the chain's first entry is
    /// square-free.
    pub fn count(&self, a: &Endpoint, b: &Endpoint) -> usize {
        self.variations(a).saturating_sub(self.variations(b))
    }
}

/// Divides by the positive content, preserving the sign of every coefficient.
fn primitive_keep_sign(p: &IntPoly) -> IntPoly {
    let content = p.coeffs().iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if content.is_zero() {
        return p.clone();
    }
    p.map(|c| c / &content)
}

/// `p / gcd(p, p')` as a primitive integer polynomial with positive leading
/// coefficient.
pub fn squarefree_part(p: &IntPoly) -> Result<IntPoly, RootError> {
    if p.is_zero() {
        return Err(RootError::ZeroPolynomial);
    }
    let q = p.to_rational();
    let g = q.gcd(&q.derivative());
    if g.is_zero() {
        return Ok(primitive_part(&q));
    }
    Ok(primitive_part(&q.div_rem(&g).0))
}

/// Yun's square-free factorization over the rationals: `factors[i]` collects
/// the roots of multiplicity `i + 1`, as primitive integer polynomials.
pub fn squarefree_factors(p: &IntPoly) -> Result<Vec<IntPoly>, RootError> {
    if p.is_zero() {
        return Err(RootError::ZeroPolynomial);
    }
    let f = p.to_rational();
    if f.degree() == Some(0) {
        return Ok(Vec::new());
    }
    let df = f.derivative();
    let a0 = f.gcd(&df);
    let mut b = f.div_rem(&a0).0;
    let c = df.div_rem(&a0).0;
    let mut d = &c - &b.derivative();
    let mut factors = Vec::new();
    while b.degree().unwrap_or(0) > 0 {
        let a = b.gcd(&d);
        let next_b = b.div_rem(&a).0;
        let next_c = d.div_rem(&a).0;
        d = &next_c - &next_b.derivative();
        b = next_b;
        factors.push(primitive_part(&a));
    }
    Ok(factors)
}

/// A real root located either exactly (`lo == hi`) or strictly inside the
/// open interval `(lo, hi)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootInterval {
    pub lo: BigRational,
    pub hi: BigRational,
}

impl RootInterval {
    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    /// Number of roots of `q` in the interval: exact evaluation for a point,
    /// a Sturm count on `(lo, hi]` otherwise. Meaningful only for polynomials
    /// whose roots are among those of the isolated polynomial.
    fn roots_of(&self, q: &IntPoly) -> usize {
        if self.is_exact() {
            usize::from(sign_at(q, &self.lo) == 0)
        } else {
            let chain = SturmChain::new(q).expect("nonzero factor");
            chain.count(&Endpoint::At(self.lo.clone()), &Endpoint::At(self.hi.clone()))
        }
    }
}

impl fmt::Display for RootInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_exact() {
            write!(f, "{{{}}}", self.lo)
        } else {
            write!(f, "({}, {})", self.lo, self.hi)
        }
    }
}

/// Isolating intervals and multiplicities for every distinct real root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootCertificate {
    pub poly: IntPoly,
    pub squarefree_part: IntPoly,
    /// Sorted ascending, pairwise disjoint.
    pub isolating_intervals: Vec<RootInterval>,
    pub multiplicities: Vec<usize>,
}

impl RootCertificate {
    pub fn distinct_real_roots(&self) -> usize {
        self.isolating_intervals.len()
    }

    /// Real roots counted with multiplicity.
    pub fn real_root_total(&self) -> usize {
        self.multiplicities.iter().sum()
    }

    /// Every complex root is real (constants included).
    pub fn is_real_rooted(&self) -> bool {
        self.real_root_total() == self.poly.degree().unwrap_or(0)
    }

    /// Re-checks the certificate from scratch: ordering, disjointness, one
    /// root of the square-free part per interval, and the multiplicities.
    pub fn verify(&self) -> bool {
        let Ok(chain) = SturmChain::new(&self.squarefree_part) else {
            return false;
        };
        let Ok(factors) = squarefree_factors(&self.poly) else {
            return false;
        };
        let ordered = self.isolating_intervals.windows(2).all(|w| w[0].hi <= w[1].lo && w[0].hi != w[1].hi);
        let single = self.isolating_intervals.iter().all(|iv| {
            if iv.is_exact() {
                sign_at(&self.squarefree_part, &iv.lo) == 0
            } else {
                iv.lo < iv.hi
                    && sign_at(&self.squarefree_part, &iv.hi) != 0
                    && chain.count(&Endpoint::At(iv.lo.clone()), &Endpoint::At(iv.hi.clone())) == 1
            }
        });
        let total = chain.count(&Endpoint::NegInfinity, &Endpoint::PosInfinity) == self.isolating_intervals.len();
        let mults = self.multiplicities.len() == self.isolating_intervals.len()
            && self
                .isolating_intervals
                .iter()
                .zip(&self.multiplicities)
                .all(|(iv, m)| multiplicity_in(&factors, iv) == *m);
        ordered && single && total && mults
    }
}

impl fmt::Display for RootCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "polynomial: {}", self.poly)?;
        writeln!(f, "square-free part: {}", self.squarefree_part)?;
        writeln!(
            f,
            "distinct real roots: {}, with multiplicity: {}, degree: {}",
            self.distinct_real_roots(),
            self.real_root_total(),
            self.poly.degree().unwrap_or(0)
        )?;
        for (iv, m) in self.isolating_intervals.iter().zip(&self.multiplicities) {
            writeln!(f, "  {iv}  multiplicity {m}")?;
        }
        Ok(())
    }
}

fn multiplicity_in(factors: &[IntPoly], iv: &RootInterval) -> usize {
    factors.iter().position(|a| iv.roots_of(a) == 1).map_or(0, |i| i + 1)
}

/// Number of distinct real roots.
pub fn real_root_count(p: &IntPoly) -> Result<usize, RootError> {
    let chain = SturmChain::new(&squarefree_part(p)?)?;
    Ok(chain.count(&Endpoint::NegInfinity, &Endpoint::PosInfinity))
}

/// Number of distinct real roots in `(a, b]`.
pub fn real_root_count_in(p: &IntPoly, a: &Endpoint, b: &Endpoint) -> Result<usize, RootError> {
    let chain = SturmChain::new(&squarefree_part(p)?)?;
    Ok(chain.count(a, b))
}

/// `1 + max |c_i / lc|`, rounded up; every root lies in `(-bound, bound)`.
fn cauchy_bound(p: &IntPoly) -> BigRational {
    let lead = p.leading().expect("nonzero").abs();
    let max = p.coeffs().iter().map(|c| c.abs()).max().unwrap_or_default();
    BigRational::from_integer(BigInt::one() + Integer::div_ceil(&max, &lead))
}

struct Isolator<'a> {
    p: &'a IntPoly,
    chain: SturmChain,
    out: Vec<RootInterval>,
}

impl Isolator<'_> {
    fn v(&self, at: &BigRational) -> usize {
        self.chain.variations(&Endpoint::At(at.clone()))
    }

    /// Shrinks an interval holding one root to width at most 1, stopping
    /// early if a bisection point hits the root exactly.
    fn refine(&mut self, mut lo: BigRational, mut hi: BigRational, v_lo: usize) {
        let two = BigRational::from_integer(2.into());
        loop {
            if sign_at(self.p, &hi) == 0 {
                self.out.push(RootInterval { lo: hi.clone(), hi });
                return;
            }
            if &hi - &lo <= BigRational::one() {
                self.out.push(RootInterval { lo, hi });
                return;
            }
            let mid = (&lo + &hi) / &two;
            if v_lo - self.v(&mid) == 1 {
                hi = mid;
            } else {
                lo = mid;
            }
        }
    }

    /// Isolates the roots in `(lo, hi]`, where `lo` is not a root.
    fn run(&mut self, lo: BigRational, hi: BigRational, v_lo: usize, v_hi: usize) {
        let count = v_lo - v_hi;
        if count == 0 {
            return;
        }
        if count == 1 {
            self.refine(lo, hi, v_lo);
            return;
        }
        let mid = (&lo + &hi) / BigRational::from_integer(2.into());
        let v_mid = self.v(&mid);
        if sign_at(self.p, &mid) != 0 {
            self.run(lo, mid.clone(), v_lo, v_mid);
            self.run(mid, hi, v_mid, v_hi);
            return;
        }
        // mid is a root: fence it off with a neighbourhood holding no other root.
        let mut delta = (&hi - &lo) / BigRational::from_integer(4.into());
        loop {
            let left = &mid - &delta;
            let right = &mid + &delta;
            if sign_at(self.p, &left) != 0 && sign_at(self.p, &right) != 0 {
                let (vl, vr) = (self.v(&left), self.v(&right));
                if vl - vr == 1 {
                    self.run(lo, left, v_lo, vl);
                    self.out.push(RootInterval { lo: mid.clone(), hi: mid });
                    self.run(right, hi, vr, v_hi);
                    return;
                }
            }
            delta /= BigRational::from_integer(2.into());
        }
    }
}

/// Isolates every distinct real root of `p` and records its multiplicity.
pub fn isolate_roots(p: &IntPoly) -> Result<RootCertificate, RootError> {
    let sqfree = squarefree_part(p)?;
    let factors = squarefree_factors(p)?;
    let mut isolator = Isolator { p: &sqfree, chain: SturmChain::new(&sqfree)?, out: Vec::new() };
    if sqfree.degree().unwrap_or(0) > 0 {
        let bound = cauchy_bound(&sqfree);
        let lo = -bound.clone();
        let (v_lo, v_hi) = (isolator.v(&lo), isolator.v(&bound));
        isolator.run(lo, bound, v_lo, v_hi);
    }
    let intervals = isolator.out;
    let multiplicities = intervals.iter().map(|iv| multiplicity_in(&factors, iv)).collect();
    Ok(RootCertificate { poly: p.clone(), squarefree_part: sqfree, isolating_intervals: intervals, multiplicities })
}

/// One distinct root of `f g`, with its multiplicity in each factor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MergedRoot {
    pub location: RootInterval,
    pub mult_f: usize,
    pub mult_g: usize,
}

impl fmt::Display for MergedRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match (self.mult_f, self.mult_g) {
            (0, m) => format!("g^{m}"),
            (m, 0) => format!("f^{m}"),
            (a, b) => format!("shared f^{a} g^{b}"),
        };
        write!(f, "{} {tag}", self.location)
    }
}

/// Outcome of testing `f ≪ g`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InterlacingVerdict {
    pub f: IntPoly,
    pub g: IntPoly,
    pub holds: bool,
    /// Distinct roots of `f g`, largest first.
    pub merged_order: Vec<MergedRoot>,
    pub reason: Option<String>,
}

impl fmt::Display for InterlacingVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} << {}: {}", self.f, self.g, if self.holds { "holds" } else { "fails" })?;
        if let Some(reason) = &self.reason {
            write!(f, " ({reason})")?;
        }
        Ok(())
    }
}

/// Decides `f ≪ g`: both real-rooted and, with `α` the roots of `f` and `β`
/// those of `g` in decreasing order, `β_1 ≥ α_1 ≥ β_2 ≥ α_2 ≥ ...`.
///
/// Degrees must satisfy `deg f ≤ deg g ≤ deg f + 1`. Shared roots are located
/// exactly through the common square-free part, so ties are decided exactly.
pub fn is_interleaver(f: &IntPoly, g: &IntPoly) -> Result<InterlacingVerdict, RootError> {
    for p in [f, g] {
        match p.leading() {
            None => return Err(RootError::ZeroPolynomial),
            Some(c) if !c.is_positive() => return Err(RootError::NonPositiveLeading(p.to_string())),
            Some(_) => {}
        }
    }
    let verdict = |holds: bool, merged_order: Vec<MergedRoot>, reason: Option<String>| InterlacingVerdict {
        f: f.clone(),
        g: g.clone(),
        holds,
        merged_order,
        reason,
    };

    let product = f * g;
    let cert = isolate_roots(&product)?;
    let f_factors = squarefree_factors(f)?;
    let g_factors = squarefree_factors(g)?;
    let merged: Vec<MergedRoot> = cert
        .isolating_intervals
        .iter()
        .rev()
        .map(|iv| MergedRoot {
            location: iv.clone(),
            mult_f: multiplicity_in(&f_factors, iv),
            mult_g: multiplicity_in(&g_factors, iv),
        })
        .collect();

    let (deg_f, deg_g) = (f.degree().unwrap_or(0), g.degree().unwrap_or(0));
    let real_f: usize = merged.iter().map(|m| m.mult_f).sum();
    let real_g: usize = merged.iter().map(|m| m.mult_g).sum();
    if real_f != deg_f {
        return Ok(verdict(false, merged, Some(format!("f has {} non-real roots", deg_f - real_f))));
    }
    if real_g != deg_g {
        return Ok(verdict(false, merged, Some(format!("g has {} non-real roots", deg_g - real_g))));
    }
    if deg_g < deg_f || deg_g > deg_f + 1 {
        return Ok(verdict(false, merged, Some(format!("degrees {deg_f} and {deg_g} cannot interlace"))));
    }

    // Ranks in the decreasing merged order; a smaller rank is a larger root.
    let expand = |mult: fn(&MergedRoot) -> usize| -> Vec<usize> {
        merged.iter().enumerate().flat_map(|(r, m)| std::iter::repeat_n(r, mult(m))).collect()
    };
    let alpha = expand(|m| m.mult_f);
    let beta = expand(|m| m.mult_g);
    for (i, a) in alpha.iter().enumerate() {
        if beta[i].cmp(a) == Ordering::Greater {
            return Ok(verdict(false, merged, Some(format!("beta_{} < alpha_{}", i + 1, i + 1))));
        }
        if let Some(b) = beta.get(i + 1) {
            if a > b {
                return Ok(verdict(false, merged, Some(format!("alpha_{} < beta_{}", i + 1, i + 2))));
            }
        }
    }
    Ok(verdict(true, merged, None))
}

/// Nonnegative coefficient vectors for the corollary: the unit vectors, the
/// all-ones vector and [`COROLLARY_RANDOM_VECTORS`] vectors drawn from
/// ChaCha8 seeded with [`COROLLARY_SEED`] and the length.
pub fn corollary_vectors(len: usize) -> Vec<Vec<u32>> {
    let mut out: Vec<Vec<u32>> = (0..len)
        .map(|i| (0..len).map(|j| u32::from(i == j)).collect())
        .collect();
    out.push(vec![1; len]);
    let mut rng = ChaCha8Rng::seed_from_u64(COROLLARY_SEED ^ len as u64);
    for _ in 0..COROLLARY_RANDOM_VECTORS {
        let mut v: Vec<u32> = (0..len).map(|_| rng.gen_range(0..=COROLLARY_MAX_COEFF)).collect();
        if v.iter().all(|c| *c == 0) {
            v[0] = 1;
        }
        out.push(v);
    }
    out
}

fn check_family(report: &mut CheckReport, label: &str, n: usize, family: &[IntPoly]) {
    for (j, p) in family.iter().enumerate() {
        let idx = format!("(n={n}, j={j})");
        match isolate_roots(p) {
            Ok(cert) => {
                report.expect(cert.is_real_rooted(), &format!("{label}_{{n,j}} is real-rooted"), &idx, || {
                    (format!("{} real roots", p.degree().unwrap_or(0)), format!("{}", cert.real_root_total()))
                });
                let mults = cert.multiplicities.clone();
                report.note(format!("{label}_{{{n},{j}}} root multiplicities {mults:?}"));
            }
            Err(e) => report.expect(false, &format!("{label}_{{n,j}} is real-rooted"), &idx, || {
                ("certificate".into(), e.to_string())
            }),
        }
    }
    for i in 0..family.len() {
        for j in i + 1..family.len() {
            let idx = format!("(n={n}, i={i}, j={j})");
            let identity = format!("{label}_{{n,i}} << {label}_{{n,j}}");
            match is_interleaver(&family[i], &family[j]) {
                Ok(v) => report.expect(v.holds, &identity, &idx, || ("holds".into(), v.to_string())),
                Err(e) => report.expect(false, &identity, &idx, || ("holds".into(), e.to_string())),
            }
        }
    }
    for (v, c) in corollary_vectors(family.len()).iter().enumerate() {
        let combo = family
            .iter()
            .zip(c)
            .fold(IntPoly::zero(), |acc, (p, c)| &acc + &p.scale(&BigInt::from(*c)));
        let idx = format!("(n={n}, c={c:?})");
        let identity = format!("Σ c_j {label}_{{n,j}} is real-rooted");
        match isolate_roots(&combo) {
            Ok(cert) => report.expect(cert.is_real_rooted(), &identity, &idx, || {
                ("real-rooted".into(), format!("vector {v}: {} of {} real", cert.real_root_total(), combo.degree().unwrap_or(0)))
            }),
            Err(e) => report.expect(false, &identity, &idx, || ("real-rooted".into(), e.to_string())),
        }
    }
}

/// Pairwise interleaving of `p_{n,0..n}` and of `P_{n,0..n}`, real-rootedness
/// of every member, and real-rootedness of nonnegative combinations.
pub fn verify_interlacing_sequence(n: usize) -> CheckReport {
    let mut report = CheckReport::new(format!("interlacing sequences, n={n}"));
    check_family(&mut report, "p", n, &build_little_p_family::<BigInt>(n));
    check_family(&mut report, "P", n, &build_p_family::<BigInt>(n));
    report
}

/// `P^A_n` is real-rooted with no root in `(0, ∞)`.
pub fn check_eulerian_roots(n: usize) -> CheckReport {
    let mut report = CheckReport::new(format!("roots of P^A_n, n={n}"));
    let pa = eulerian_poly_a_family::<BigInt>(n).pop().expect("nonempty");
    let idx = format!("(n={n})");
    let positive = real_root_count_in(&pa, &Endpoint::At(BigRational::zero()), &Endpoint::PosInfinity);
    report.expect(positive == Ok(0), "P^A_n has no roots in (0, ∞)", &idx, || ("0".into(), format!("{positive:?}")));
    let cert = isolate_roots(&pa);
    let real = cert.as_ref().map(|c| c.is_real_rooted());
    report.expect(real == Ok(true), "P^A_n is real-rooted", &idx, || ("true".into(), format!("{real:?}")));
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ints(c: &[i64]) -> IntPoly {
        IntPoly::from_ints(c)
    }

    fn q(a: i64, b: i64) -> BigRational {
        BigRational::new(a.into(), b.into())
    }

    #[test]
    fn counts() {
        assert_eq!(real_root_count(&ints(&[1, 0, 1])), Ok(0));
        assert_eq!(real_root_count(&ints(&[-1, 0, 1])), Ok(2));
        assert_eq!(real_root_count(&ints(&[0, 4, 16, 4])), Ok(3));
        assert_eq!(real_root_count(&ints(&[7])), Ok(0));
        assert_eq!(real_root_count(&IntPoly::zero()), Err(RootError::ZeroPolynomial));
        // (x-1)^3 (x+2): two distinct roots
        let p = &ints(&[-1, 1]).pow(3) * &ints(&[2, 1]);
        assert_eq!(real_root_count(&p), Ok(2));
    }

    #[test]
    fn sturm_chain_with_negative_leading() {
        // -(x-1)(x-2)(x-3)
        let p = ints(&[6, -11, 6, -1]);
        assert_eq!(real_root_count(&p), Ok(3));
        let chain = SturmChain::new(&p).unwrap();
        assert_eq!(chain.count(&Endpoint::At(q(3, 2)), &Endpoint::At(q(5, 2))), 1);
        assert_eq!(chain.count(&Endpoint::At(q(0, 1)), &Endpoint::At(q(3, 1))), 3);
        assert_eq!(chain.count(&Endpoint::At(q(1, 1)), &Endpoint::At(q(3, 1))), 2);
    }

    #[test]
    fn isolation_examples() {
        let c = isolate_roots(&ints(&[0, 1, 1])).unwrap();
        assert_eq!(c.distinct_real_roots(), 2);
        assert_eq!(c.multiplicities, vec![1, 1]);
        assert!(c.isolating_intervals[0].hi < q(0, 1) || c.isolating_intervals[0].lo == q(-1, 1));
        assert_eq!(c.isolating_intervals[1], RootInterval { lo: q(0, 1), hi: q(0, 1) });
        assert!(c.verify());

        let c = isolate_roots(&ints(&[1, 11, 11, 1])).unwrap();
        assert_eq!(c.distinct_real_roots(), 3);
        assert!(c.isolating_intervals.iter().all(|iv| iv.hi <= q(0, 1)));
        assert!(c.is_real_rooted() && c.verify());

        let c = isolate_roots(&ints(&[0, 2])).unwrap();
        assert_eq!(c.distinct_real_roots(), 1);
        assert_eq!(c.isolating_intervals, vec![RootInterval { lo: q(0, 1), hi: q(0, 1) }]);
    }

    #[test]
    fn multiplicities_recorded() {
        // x^2 (x+1)^3 (x^2+1)
        let p = &(&ints(&[0, 0, 1]) * &ints(&[1, 1]).pow(3)) * &ints(&[1, 0, 1]);
        let c = isolate_roots(&p).unwrap();
        assert_eq!(c.multiplicities, vec![3, 2]);
        assert_eq!(c.real_root_total(), 5);
        assert!(!c.is_real_rooted());
        assert!(c.verify());
        let f = squarefree_factors(&p).unwrap();
        assert_eq!(f.len(), 3);
        assert_eq!(f[0], ints(&[1, 0, 1]));
    }

    #[test]
    fn close_roots_separated() {
        // (1000x - 1)(1001x - 1)
        let p = &ints(&[-1, 1000]) * &ints(&[-1, 1001]);
        let c = isolate_roots(&p).unwrap();
        assert_eq!(c.distinct_real_roots(), 2);
        assert!(c.verify());
    }

    #[test]
    fn interleaver_examples() {
        let v = is_interleaver(&ints(&[0, 2]), &ints(&[0, 1, 1])).unwrap();
        assert!(v.holds, "{v}");
        assert_eq!(v.merged_order[0].mult_f, 1);
        assert_eq!(v.merged_order[0].mult_g, 1);
        assert!(is_interleaver(&ints(&[1, 1]), &ints(&[0, 2])).unwrap().holds);
        let p = ints(&[1, 11, 11, 1]);
        assert!(is_interleaver(&p, &p).unwrap().holds);
        assert!(is_interleaver(&ints(&[1]), &ints(&[0, 1])).unwrap().holds);
        // reversed order fails: 0 is larger than -1
        assert!(!is_interleaver(&ints(&[0, 2]), &ints(&[1, 1])).unwrap().holds);
        // non-real roots fail with a reason
        let v = is_interleaver(&ints(&[1, 0, 1]), &ints(&[1, 0, 1])).unwrap();
        assert!(!v.holds && v.reason.is_some());
        assert!(matches!(is_interleaver(&ints(&[0, -1]), &ints(&[0, 1])), Err(RootError::NonPositiveLeading(_))));
    }

    #[test]
    fn small_sequences() {
        for n in 1..=4 {
            let r = verify_interlacing_sequence(n);
            assert!(r.passed(), "{:?}", r.first_failure());
            let r = check_eulerian_roots(n);
            assert!(r.passed(), "{:?}", r.first_failure());
        }
    }

    #[test]
    fn corollary_vectors_are_deterministic() {
        let a = corollary_vectors(5);
        assert_eq!(a, corollary_vectors(5));
        assert_eq!(a.len(), 5 + 1 + COROLLARY_RANDOM_VECTORS);
        assert!(a.iter().all(|v| v.len() == 5 && v.iter().any(|c| *c > 0)));
    }

    fn roots_poly(roots: &[i64]) -> IntPoly {
        roots.iter().fold(IntPoly::one(), |acc, r| &acc * &ints(&[-r, 1]))
    }

    proptest! {
        #[test]
        fn isolation_matches_known_roots(roots in prop::collection::vec(-6i64..6, 0..7)) {
            let p = roots_poly(&roots);
            let c = isolate_roots(&p).unwrap();
            let mut distinct = roots.clone();
            distinct.sort();
            distinct.dedup();
            prop_assert_eq!(c.distinct_real_roots(), distinct.len());
            prop_assert!(c.is_real_rooted());
            prop_assert!(c.verify());
            for (iv, r) in c.isolating_intervals.iter().zip(&distinct) {
                let r = q(*r, 1);
                prop_assert!(iv.lo <= r && r <= iv.hi);
            }
        }

        #[test]
        fn interleaver_reflexive_and_symmetric(roots in prop::collection::vec(-5i64..5, 0..6)) {
            let p = roots_poly(&roots);
            prop_assert!(is_interleaver(&p, &p).unwrap().holds);
            // Scaling by a positive constant leaves the root multiset unchanged.
            let scaled = p.scale(&BigInt::from(3));
            prop_assert!(is_interleaver(&p, &scaled).unwrap().holds);
            prop_assert!(is_interleaver(&scaled, &p).unwrap().holds);
        }

        #[test]
        fn interleaving_with_linear_factor(roots in prop::collection::vec(-5i64..5, 1..6), extra in 6i64..9) {
            // f has the roots, g adds one root above all of them and drops the smallest:
            // β_1 = extra > α_1 ≥ β_2 ≥ ...
            let mut sorted = roots.clone();
            sorted.sort();
            let f = roots_poly(&sorted);
            let mut g_roots = sorted[1..].to_vec();
            g_roots.push(extra);
            let g = roots_poly(&g_roots);
            prop_assert!(is_interleaver(&f, &g).unwrap().holds);
        }
    }
}
