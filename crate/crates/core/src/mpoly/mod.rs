//! Sparse homogeneous polynomials with exact rational coefficients.
//!
//! A [`Polynomial`] lives either in the point ring `S = Q[x0..xN]` or in the
//! operator ring `T = Q[d0..dN]`. `T` acts on `S` by contraction:
//!
//! ```text
//! d^a . x^b = a! * binom(b, a) * x^(b-a)   if b >= a componentwise, else 0
//! ```
//!
//! which in each fixed degree gives a perfect pairing `S_d x T_d -> Q`.

mod parse;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg;

pub use parse::{parse_polynomial, parse_polynomial_in};

/// Which side of the apolarity pairing a polynomial lives on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Ring {
    /// Point ring, variables `x0, x1, ...`.
    S,
    /// Operator ring, variables `d0, d1, ...`.
    T,
}

impl Ring {
    pub fn var_prefix(self) -> char {
        match self {
            Ring::S => 'x',
            Ring::T => 'd',
        }
    }

    pub fn dual(self) -> Ring {
        match self {
            Ring::S => Ring::T,
            Ring::T => Ring::S,
        }
    }

    pub(crate) fn name(self) -> &'static str {
        match self {
            Ring::S => "S",
            Ring::T => "T",
        }
    }
}

/// A multi-index. Ordered graded-lexicographically: first by total degree,
/// then lexicographically (so `x0^2 > x0*x1 > x1^2`).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Exponent(Vec<u32>);

impl Exponent {
    pub fn new(exps: Vec<u32>) -> Self {
        Exponent(exps)
    }

    pub fn zero(nvars: usize) -> Self {
        Exponent(vec![0; nvars])
    }

    pub fn unit(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Exponent(e)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn divides(&self, other: &Exponent) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn checked_sub(&self, other: &Exponent) -> Option<Exponent> {
        if other.divides(self) {
            Some(Exponent(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect()))
        } else {
            None
        }
    }

    pub fn add(&self, other: &Exponent) -> Exponent {
        Exponent(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `a!` for a multi-index.
    pub fn factorial(&self) -> BigInt {
        self.0.iter().map(|&e| factorial(e)).product()
    }
}

impl PartialOrd for Exponent {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Exponent {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

pub(crate) fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

pub(crate) fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Number of monomials of degree `d` in `nvars` variables.
pub fn monomial_count(nvars: usize, d: u32) -> usize {
    if nvars == 0 {
        return usize::from(d == 0);
    }
    let b = binomial(nvars as u32 - 1 + d, d);
    usize::try_from(b).expect("monomial count overflows usize")
}

/// All monomials of degree `d` in `nvars` variables, in descending
/// graded-lex order (`x0^d` first).
pub fn monomials(nvars: usize, d: u32) -> Vec<Exponent> {
    fn rec(pos: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Exponent>) {
        if pos + 1 == cur.len() {
            cur[pos] = left;
            out.push(Exponent(cur.clone()));
            return;
        }
        for e in (0..=left).rev() {
            cur[pos] = e;
            rec(pos + 1, left - e, cur, out);
        }
    }
    let mut out = Vec::with_capacity(monomial_count(nvars, d));
    if nvars == 0 {
        if d == 0 {
            out.push(Exponent(vec![]));
        }
        return out;
    }
    rec(0, d, &mut vec![0; nvars], &mut out);
    out
}

/// Dense basis of a graded piece: monomials plus their index lookup.
#[derive(Debug, Clone)]
pub struct MonomialBasis {
    pub nvars: usize,
    pub degree: u32,
    monos: Vec<Exponent>,
    index: std::collections::HashMap<Exponent, usize>,
}

impl MonomialBasis {
    pub fn new(nvars: usize, degree: u32) -> Self {
        let monos = monomials(nvars, degree);
        let index = monos.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        MonomialBasis { nvars, degree, monos, index }
    }

    pub fn len(&self) -> usize {
        self.monos.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monos.is_empty()
    }

    pub fn monomials(&self) -> &[Exponent] {
        &self.monos
    }

    pub fn index_of(&self, e: &Exponent) -> Option<usize> {
        self.index.get(e).copied()
    }

    /// Coefficient vector of `p` in this basis. `p` must be homogeneous of
    /// this degree (or zero).
    pub fn coords(&self, p: &Polynomial) -> Vec<BigRational> {
        let mut v = vec![BigRational::zero(); self.len()];
        for (e, c) in p.terms() {
            let i = self.index_of(e).expect("polynomial outside monomial basis");
            v[i] = c.clone();
        }
        v
    }

    pub fn polynomial(&self, ring: Ring, coords: &[BigRational]) -> Polynomial {
        let terms = self
            .monos
            .iter()
            .zip(coords)
            .filter(|(_, c)| !c.is_zero())
            .map(|(e, c)| (e.clone(), c.clone()));
        Polynomial::from_terms(ring, self.nvars, terms)
    }
}

/// A linear form `c0*x0 + ... + cN*xN`, also read as a point of the dual
/// projective space.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinearForm(pub Vec<BigRational>);

impl LinearForm {
    pub fn from_ints(cs: &[i64]) -> Self {
        LinearForm(cs.iter().map(|&c| BigRational::from_integer(c.into())).collect())
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn to_polynomial(&self, ring: Ring) -> Polynomial {
        let n = self.nvars();
        Polynomial::from_terms(
            ring,
            n,
            self.0
                .iter()
                .enumerate()
                .map(|(i, c)| (Exponent::unit(n, i), c.clone())),
        )
    }

    /// Evaluate a polynomial at the point with these coordinates.
    pub fn evaluate(&self, p: &Polynomial) -> BigRational {
        p.terms()
            .map(|(e, c)| {
                e.as_slice()
                    .iter()
                    .zip(&self.0)
                    .fold(c.clone(), |acc, (&k, x)| acc * pow_rat(x, k))
            })
            .sum()
    }
}

fn pow_rat(x: &BigRational, k: u32) -> BigRational {
    num_traits::pow(x.clone(), k as usize)
}

/// A homogeneous polynomial in `S` or `T` with exact rational coefficients.
///
/// Invariants: no zero coefficients are stored and all exponents share one
/// total degree. The zero polynomial has no degree (`degree() == None`) and
/// is compatible with every degree.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    ring: Ring,
    nvars: usize,
    terms: BTreeMap<Exponent, BigRational>,
}

impl Polynomial {
    pub fn zero(ring: Ring, nvars: usize) -> Self {
        Polynomial { ring, nvars, terms: BTreeMap::new() }
    }

    pub fn constant(ring: Ring, nvars: usize, c: BigRational) -> Self {
        Self::from_terms(ring, nvars, std::iter::once((Exponent::zero(nvars), c)))
    }

    pub fn var(ring: Ring, nvars: usize, i: usize) -> Self {
        Self::monomial(ring, Exponent::unit(nvars, i), BigRational::one())
    }

    pub fn monomial(ring: Ring, e: Exponent, c: BigRational) -> Self {
        let nvars = e.nvars();
        Self::from_terms(ring, nvars, std::iter::once((e, c)))
    }

    /// Builds a polynomial by summing terms.
    ///
    /// Panics if the terms are not homogeneous or have the wrong length; use
    /// [`Polynomial::try_from_terms`] for untrusted input.
    pub fn from_terms(
        ring: Ring,
        nvars: usize,
        terms: impl IntoIterator<Item = (Exponent, BigRational)>,
    ) -> Self {
        Self::try_from_terms(ring, nvars, terms).expect("inhomogeneous term list")
    }

    pub fn try_from_terms(
        ring: Ring,
        nvars: usize,
        terms: impl IntoIterator<Item = (Exponent, BigRational)>,
    ) -> Result<Self> {
        let mut map: BTreeMap<Exponent, BigRational> = BTreeMap::new();
        for (e, c) in terms {
            if e.nvars() != nvars {
                return Err(Error::VarCountMismatch { left: nvars, right: e.nvars() });
            }
            if c.is_zero() {
                continue;
            }
            let slot = map.entry(e).or_insert_with(BigRational::zero);
            *slot += c;
        }
        map.retain(|_, c| !c.is_zero());
        let mut degs = map.keys().map(Exponent::degree);
        if let Some(first) = degs.next() {
            if let Some(second) = degs.find(|&d| d != first) {
                return Err(Error::Inhomogeneous { first, second });
            }
        }
        Ok(Polynomial { ring, nvars, terms: map })
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Homogeneous degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next().map(Exponent::degree)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exponent, &BigRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: &Exponent) -> BigRational {
        self.terms.get(e).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Leading (graded-lex largest) term.
    pub fn leading(&self) -> Option<(&Exponent, &BigRational)> {
        self.terms.iter().next_back()
    }

    /// Same coefficients, reinterpreted in the other ring.
    pub fn with_ring(mut self, ring: Ring) -> Self {
        self.ring = ring;
        self
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero(self.ring, self.nvars);
        }
        Polynomial {
            ring: self.ring,
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect(),
        }
    }

    /// Multiply by a monomial.
    pub fn shift(&self, m: &Exponent) -> Self {
        Polynomial {
            ring: self.ring,
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.add(m), c.clone())).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Polynomial::constant(self.ring, self.nvars, BigRational::one());
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    fn check_compatible(&self, other: &Polynomial) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::VarCountMismatch { left: self.nvars, right: other.nvars });
        }
        if self.ring != other.ring {
            return Err(Error::RingMismatch {
                expected: self.ring.name(),
                found: other.ring.name(),
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_compatible(other)?;
        if let (Some(a), Some(b)) = (self.degree(), other.degree()) {
            if a != b {
                return Err(Error::DegreeMismatch { left: a, right: b });
            }
        }
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            let slot = terms.entry(e.clone()).or_insert_with(BigRational::zero);
            *slot += c;
        }
        terms.retain(|_, c| !c.is_zero());
        Ok(Polynomial { ring: self.ring, nvars: self.nvars, terms })
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_compatible(other)?;
        let mut terms: BTreeMap<Exponent, BigRational> = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let slot = terms.entry(e1.add(e2)).or_insert_with(BigRational::zero);
                *slot += c1 * c2;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        Ok(Polynomial { ring: self.ring, nvars: self.nvars, terms })
    }

    /// Clear denominators, divide by content and make the leading
    /// coefficient positive. The zero polynomial is returned unchanged.
    pub fn normalized(&self) -> Polynomial {
        let Some((_, lead)) = self.leading() else {
            return self.clone();
        };
        let den_lcm = self
            .terms
            .values()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let nums: Vec<BigInt> = self
            .terms
            .values()
            .map(|c| (c * BigRational::from_integer(den_lcm.clone())).to_integer())
            .collect();
        let content = nums.iter().fold(BigInt::zero(), |acc, n| acc.gcd(n));
        let mut factor = BigRational::new(den_lcm, content);
        if lead.is_negative() {
            factor = -factor;
        }
        self.scale(&factor)
    }

    /// True if `self = c * other` for some nonzero rational `c`.
    pub fn is_proportional_to(&self, other: &Polynomial) -> bool {
        if self.ring != other.ring || self.nvars != other.nvars {
            return false;
        }
        if self.is_zero() || other.is_zero() {
            return self.is_zero() && other.is_zero();
        }
        self.normalized() == other.normalized()
    }

    /// Apply the substitution `x_i -> sum_j change[i][j] * x_j`, i.e. return
    /// `f(change * x)`. The matrix must be square of size `nvars` and
    /// invertible.
    pub fn substitute_linear(&self, change: &[Vec<BigRational>]) -> Result<Polynomial> {
        let n = self.nvars;
        if change.len() != n || change.iter().any(|r| r.len() != n) {
            return Err(Error::BadMatrixShape {
                rows: change.len(),
                cols: change.first().map_or(0, Vec::len),
                expected: n,
            });
        }
        if linalg::rank(change) < n {
            return Err(Error::SingularMatrix);
        }
        Ok(self.substitute_unchecked(change))
    }

    /// `f(change * x)` for any `nvars x m` matrix, producing a polynomial in
    /// `m` variables. No invertibility check.
    pub(crate) fn substitute_unchecked(&self, change: &[Vec<BigRational>]) -> Polynomial {
        let m = change.first().map_or(0, Vec::len);
        let images: Vec<Polynomial> = change
            .iter()
            .map(|row| LinearForm(row.clone()).to_polynomial(self.ring))
            .collect();
        let mut powers: Vec<Vec<Polynomial>> = images
            .iter()
            .map(|l| vec![Polynomial::constant(self.ring, m, BigRational::one()), l.clone()])
            .collect();
        let mut out = Polynomial::zero(self.ring, m);
        for (e, c) in &self.terms {
            let mut term = Polynomial::constant(self.ring, m, c.clone());
            for (i, &k) in e.as_slice().iter().enumerate() {
                while powers[i].len() <= k as usize {
                    let next = &powers[i][powers[i].len() - 1] * &images[i];
                    powers[i].push(next);
                }
                term = &term * &powers[i][k as usize];
            }
            out = &out + &term;
        }
        out
    }

    /// Contraction `self . f` of an operator `self` in `T` on a form `f` in
    /// `S` (or symmetrically `S` acting on `T`).
    pub fn contract(&self, f: &Polynomial) -> Result<Polynomial> {
        contract(self, f)
    }
}

/// Contraction action of `op` on `f`: bilinear extension of
/// `d^a . x^b = a! binom(b, a) x^(b-a)` (zero unless `a <= b`).
pub fn contract(op: &Polynomial, f: &Polynomial) -> Result<Polynomial> {
    if op.nvars != f.nvars {
        return Err(Error::VarCountMismatch { left: op.nvars, right: f.nvars });
    }
    if op.ring == f.ring {
        return Err(Error::RingMismatch { expected: f.ring.dual().name(), found: op.ring.name() });
    }
    let mut terms: BTreeMap<Exponent, BigRational> = BTreeMap::new();
    for (a, ca) in &op.terms {
        for (b, cb) in &f.terms {
            if let Some(diff) = b.checked_sub(a) {
                let w: BigInt = a
                    .as_slice()
                    .iter()
                    .zip(b.as_slice())
                    .map(|(&ai, &bi)| factorial(ai) * binomial(bi, ai))
                    .product();
                let slot = terms.entry(diff).or_insert_with(BigRational::zero);
                *slot += ca * cb * BigRational::from_integer(w);
            }
        }
    }
    terms.retain(|_, c| !c.is_zero());
    Ok(Polynomial { ring: f.ring, nvars: f.nvars, terms })
}

/// The apolarity pairing of `f` in `S_d` with `g` in `T_d`.
pub fn pair(f: &Polynomial, g: &Polynomial) -> Result<BigRational> {
    if f.nvars != g.nvars {
        return Err(Error::VarCountMismatch { left: f.nvars, right: g.nvars });
    }
    if let (Some(a), Some(b)) = (f.degree(), g.degree()) {
        if a != b {
            return Err(Error::DegreeMismatch { left: a, right: b });
        }
    }
    let c = contract(g, f)?;
    Ok(c.coeff(&Exponent::zero(f.nvars)))
}

/// Multinomial expansion of `l^d` in `S`.
pub fn power_of_linear_form(l: &LinearForm, d: u32) -> Polynomial {
    let n = l.nvars();
    let d_fact = factorial(d);
    let terms = monomials(n, d).into_iter().map(|e| {
        let multinom = BigRational::new(d_fact.clone(), e.factorial());
        let c = e
            .as_slice()
            .iter()
            .zip(&l.0)
            .fold(multinom, |acc, (&k, x)| acc * pow_rat(x, k));
        (e, c)
    });
    Polynomial::from_terms(Ring::S, n, terms)
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.try_add(rhs).expect("incompatible polynomial addition")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self + &(-rhs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            ring: self.ring,
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.try_mul(rhs).expect("incompatible polynomial multiplication")
    }
}

pub(crate) fn fmt_rational(c: &BigRational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for Polynomial {
    /// Prints in the text grammar accepted by [`parse_polynomial`], leading
    /// term first: `3*x0^2*x1 - 1/2*x2^3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let prefix = self.ring.var_prefix();
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            let mag = c.abs();
            if k == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let vars: Vec<String> = e
                .as_slice()
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(i, &k)| {
                    if k == 1 {
                        format!("{prefix}{i}")
                    } else {
                        format!("{prefix}{i}^{k}")
                    }
                })
                .collect();
            if vars.is_empty() {
                write!(f, "{}", fmt_rational(&mag))?;
            } else if mag.is_one() {
                write!(f, "{}", vars.join("*"))?;
            } else {
                write!(f, "{}*{}", fmt_rational(&mag), vars.join("*"))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Polynomial {
        parse_polynomial(s).unwrap()
    }

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn contraction_monomial_rule() {
        let d = parse_polynomial_in("d0^2", Ring::T, 2).unwrap();
        let f = parse_polynomial_in("x0^3", Ring::S, 2).unwrap();
        assert_eq!(contract(&d, &f).unwrap(), parse_polynomial_in("6*x0", Ring::S, 2).unwrap());

        let d = p("d0*d1");
        let f = parse_polynomial_in("x0^2", Ring::S, 2).unwrap();
        assert!(contract(&d, &f).unwrap().is_zero());
    }

    #[test]
    fn contraction_is_bilinear() {
        let d = p("d0 + d1");
        let f = p("x0^2 + x1^2");
        assert_eq!(contract(&d, &f).unwrap(), p("2*x0 + 2*x1"));
    }

    #[test]
    fn contraction_rejects_mismatches() {
        let d = parse_polynomial_in("d0", Ring::T, 3).unwrap();
        let f = parse_polynomial_in("x0", Ring::S, 2).unwrap();
        assert!(matches!(contract(&d, &f), Err(Error::VarCountMismatch { .. })));
        let g = p("x0*x1");
        assert!(matches!(contract(&g, &g), Err(Error::RingMismatch { .. })));
    }

    #[test]
    fn contraction_lower_degree_target_is_zero() {
        let d = p("d0^3");
        let f = parse_polynomial_in("x0^2", Ring::S, 1).unwrap();
        assert!(contract(&d, &f).unwrap().is_zero());
    }

    #[test]
    fn pairing_values() {
        let f = parse_polynomial_in("x0^2", Ring::S, 2).unwrap();
        let g = parse_polynomial_in("d0^2", Ring::T, 2).unwrap();
        assert_eq!(pair(&f, &g).unwrap(), q(2));
        assert_eq!(pair(&p("x0*x1"), &g).unwrap(), q(0));
        assert!(matches!(
            pair(&p("x0*x1"), &parse_polynomial_in("d0", Ring::T, 2).unwrap()),
            Err(Error::DegreeMismatch { .. })
        ));
    }

    #[test]
    fn pairing_gram_matrix_two_vars() {
        // brute force over the 9 basis pairs
        let basis = monomials(2, 2);
        let mut gram = vec![vec![q(0); 3]; 3];
        for (i, a) in basis.iter().enumerate() {
            for (j, b) in basis.iter().enumerate() {
                let f = Polynomial::monomial(Ring::S, a.clone(), q(1));
                let g = Polynomial::monomial(Ring::T, b.clone(), q(1));
                gram[i][j] = pair(&f, &g).unwrap();
            }
        }
        let expect = vec![vec![q(2), q(0), q(0)], vec![q(0), q(1), q(0)], vec![q(0), q(0), q(2)]];
        assert_eq!(gram, expect);
    }

    #[test]
    fn powers_of_linear_forms() {
        let l = LinearForm::from_ints(&[1, 1]);
        assert_eq!(power_of_linear_form(&l, 2), p("x0^2 + 2*x0*x1 + x1^2"));
        let l = LinearForm::from_ints(&[1, 0]);
        assert_eq!(power_of_linear_form(&l, 5), parse_polynomial_in("x0^5", Ring::S, 2).unwrap());
        assert_eq!(power_of_linear_form(&l, 0).degree(), Some(0));
    }

    #[test]
    fn power_evaluation_rule() {
        // D . f_c^b = a! binom(b, a) D(c) f_c^(b-a) for D = d0, c = (1, 2), b = 3
        let c = LinearForm::from_ints(&[1, 2]);
        let f = power_of_linear_form(&c, 3);
        let d = parse_polynomial_in("d0", Ring::T, 2).unwrap();
        let lhs = contract(&d, &f).unwrap();
        // expand by hand: (x0 + 2 x1)^3 = x0^3 + 6x0^2x1 + 12x0x1^2 + 8x1^3
        // d0 of it = 3x0^2 + 12x0x1 + 12x1^2 = 3 (x0 + 2x1)^2
        assert_eq!(lhs, p("3*x0^2 + 12*x0*x1 + 12*x1^2"));
        let rhs = power_of_linear_form(&c, 2).scale(&(q(3) * c.evaluate(&d)));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn substitution_basics() {
        let f = p("x0^2 + 3*x0*x1");
        let id = vec![vec![q(1), q(0)], vec![q(0), q(1)]];
        assert_eq!(f.substitute_linear(&id).unwrap(), f);
        let swap = vec![vec![q(0), q(1)], vec![q(1), q(0)]];
        let g = parse_polynomial_in("x0^2", Ring::S, 2).unwrap();
        assert_eq!(g.substitute_linear(&swap).unwrap(), p("x1^2").with_ring(Ring::S));
        let singular = vec![vec![q(1), q(1)], vec![q(2), q(2)]];
        assert_eq!(f.substitute_linear(&singular), Err(Error::SingularMatrix));
    }

    #[test]
    fn normalization_is_canonical() {
        let f = p("-1/2*x0^2 + 3/4*x1^2");
        assert_eq!(f.normalized().to_string(), "2*x0^2 - 3*x1^2");
        assert!(f.is_proportional_to(&p("4*x0^2 - 6*x1^2")));
        assert!(!f.is_proportional_to(&p("x0^2 - x1^2")));
    }

    #[test]
    fn zero_has_no_degree() {
        let z = Polynomial::zero(Ring::S, 3);
        assert_eq!(z.degree(), None);
        let f = p("x0^2 + x2^2");
        assert_eq!((&z + &f), f);
        assert_eq!(z.to_string(), "0");
    }

    #[test]
    fn adding_different_degrees_fails() {
        assert!(matches!(
            p("x0^2").try_add(&p("x0^3")),
            Err(Error::DegreeMismatch { left: 2, right: 3 })
        ));
    }

    #[test]
    fn monomial_enumeration_order() {
        let ms = monomials(3, 2);
        assert_eq!(ms.len(), 6);
        assert_eq!(ms[0].as_slice(), &[2, 0, 0]);
        assert_eq!(ms[5].as_slice(), &[0, 0, 2]);
        assert!(ms.windows(2).all(|w| w[0] > w[1]));
        assert_eq!(monomial_count(6, 5), 252);
    }
}
