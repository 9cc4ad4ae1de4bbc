//! Dense univariate polynomials over Q, just enough for minimal polynomials
//! of small matrices: gcd, squarefreeness and exact rational roots.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::linalg::{self, Matrix};

/// Coefficients from the constant term up; no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniPoly(pub Vec<BigRational>);

impl UniPoly {
    pub fn new(mut c: Vec<BigRational>) -> Self {
        while c.last().is_some_and(Zero::is_zero) {
            c.pop();
        }
        UniPoly(c)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.0.iter().rev().fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    pub fn derivative(&self) -> UniPoly {
        UniPoly::new(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigRational::from_integer(i.into()))
                .collect(),
        )
    }

    pub fn monic(&self) -> UniPoly {
        match self.0.last() {
            None => self.clone(),
            Some(lead) => UniPoly(self.0.iter().map(|c| c / lead).collect()),
        }
    }

    pub fn rem(&self, other: &UniPoly) -> UniPoly {
        assert!(!other.is_zero(), "division by zero polynomial");
        let mut r = self.0.clone();
        let dl = other.0.len();
        let lead = other.0.last().expect("nonzero");
        while r.len() >= dl && !r.is_empty() {
            let f = r.last().expect("nonempty") / lead;
            let shift = r.len() - dl;
            for (i, c) in other.0.iter().enumerate() {
                r[shift + i] -= &f * c;
            }
            r.pop();
            while r.last().is_some_and(Zero::is_zero) {
                r.pop();
            }
        }
        UniPoly(r)
    }

    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gcd(&self.derivative()).degree() == 0
    }

    /// Distinct rational roots, ascending. Exact: the polynomial is scaled to
    /// a monic integer polynomial, whose rational roots are integers; real
    /// roots are isolated by Sturm bisection and integer candidates tested.
    pub fn rational_roots(&self) -> Vec<BigRational> {
        if self.degree() == 0 {
            return Vec::new();
        }
        let p = self.monic();
        let n = p.degree();
        let scale = p.0.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        // q(y) = scale^n p(y / scale) is monic with integer coefficients
        let q: Vec<BigInt> = p
            .0
            .iter()
            .enumerate()
            .map(|(k, c)| (c * BigRational::from_integer(num_traits::pow(scale.clone(), n - k))).to_integer())
            .collect();
        let qpoly = UniPoly::new(q.iter().cloned().map(BigRational::from_integer).collect());
        let sq = qpoly.clone();
        let base = sq.gcd(&sq.derivative());
        let free = squarefree_part(&sq, &base);
        let bound = BigRational::from_integer(
            BigInt::one() + q[..n].iter().map(|c| c.abs()).max().unwrap_or_else(BigInt::zero),
        );
        let chain = sturm_chain(&free);
        let mut roots = Vec::new();
        let mut stack = vec![(-bound.clone(), bound)];
        while let Some((lo, hi)) = stack.pop() {
            let count = sign_changes(&chain, &lo) - sign_changes(&chain, &hi);
            if count == 0 {
                continue;
            }
            if &hi - &lo < BigRational::one() {
                // at most one integer in (lo, hi]
                let cand = BigRational::from_integer(hi.floor().to_integer());
                if cand > lo && free.eval(&cand).is_zero() {
                    roots.push(cand / BigRational::from_integer(scale.clone()));
                }
                continue;
            }
            let mid = (&lo + &hi) / BigRational::from_integer(2.into());
            stack.push((lo, mid.clone()));
            stack.push((mid, hi));
        }
        roots.sort();
        roots.dedup();
        roots
    }
}

fn squarefree_part(p: &UniPoly, g: &UniPoly) -> UniPoly {
    if g.degree() == 0 {
        return p.clone();
    }
    // exact division p / g
    let mut r = p.0.clone();
    let dg = g.0.len();
    let lead = g.0.last().expect("nonzero");
    let mut quot = vec![BigRational::zero(); r.len() + 1 - dg];
    while r.len() >= dg {
        let f = r.last().expect("nonempty") / lead;
        let shift = r.len() - dg;
        for (i, c) in g.0.iter().enumerate() {
            r[shift + i] -= &f * c;
        }
        quot[shift] = f;
        r.pop();
    }
    UniPoly::new(quot)
}

fn sturm_chain(p: &UniPoly) -> Vec<UniPoly> {
    let mut chain = vec![p.clone(), p.derivative()];
    loop {
        let n = chain.len();
        if chain[n - 1].is_zero() {
            chain.pop();
            break;
        }
        let r = chain[n - 2].rem(&chain[n - 1]);
        if r.is_zero() {
            break;
        }
        chain.push(UniPoly(r.0.iter().map(|c| -c).collect()));
    }
    chain
}

fn sign_changes(chain: &[UniPoly], x: &BigRational) -> usize {
    let signs: Vec<bool> = chain
        .iter()
        .map(|p| p.eval(x))
        .filter(|v| !v.is_zero())
        .map(|v| v.is_positive())
        .collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Minimal polynomial of a square matrix: the first linear relation among
/// `I, M, M^2, ...`.
pub fn minimal_polynomial(m: &Matrix) -> UniPoly {
    let n = m.len();
    let flatten = |a: &Matrix| -> Vec<BigRational> { a.iter().flatten().cloned().collect() };
    let mut powers = vec![flatten(&linalg::identity(n))];
    let mut current = linalg::identity(n);
    loop {
        current = linalg::mat_mul(&current, m);
        let target = flatten(&current);
        // solve sum c_i P_i = M^k
        let a = linalg::transpose(&powers);
        if let Some(c) = linalg::solve(&a, &target) {
            let mut coeffs: Vec<BigRational> = c.into_iter().map(|x| -x).collect();
            coeffs.push(BigRational::one());
            return UniPoly::new(coeffs);
        }
        powers.push(target);
    }
}
