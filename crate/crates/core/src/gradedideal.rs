//! Homogeneous ideals handled degree by degree.
//!
//! Every question about an ideal is answered in a fixed degree by exact
//! linear algebra on the span of `monomial * generator` products, up to a
//! declared truncation bound. There is no Gröbner basis machinery.

use std::sync::{Arc, OnceLock};

use num_rational::BigRational;
use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{self, Rref};
use crate::mpoly::{monomial_count, parse_polynomial, parse_polynomial_in, LinearForm, MonomialBasis, Polynomial, Ring};

/// The degree-`d` part of an ideal, as an exact basis.
#[derive(Debug, Clone)]
pub struct GradedPiece {
    pub degree: u32,
    pub ring: Ring,
    pub nvars: usize,
    /// Linearly independent, in reduced echelon form w.r.t. the descending
    /// graded-lex monomial order.
    pub basis: Vec<Polynomial>,
    echelon: Rref,
}

impl GradedPiece {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient_dim(&self) -> usize {
        monomial_count(self.nvars, self.degree)
    }

    pub fn codimension(&self) -> usize {
        self.ambient_dim() - self.dim()
    }

    pub fn echelon(&self) -> &Rref {
        &self.echelon
    }

    /// Membership of a form of this degree (the zero form is always in).
    pub fn contains(&self, f: &Polynomial) -> bool {
        match f.degree() {
            None => true,
            Some(d) if d != self.degree => false,
            Some(_) => self.echelon.contains(&MonomialBasis::new(self.nvars, self.degree).coords(f)),
        }
    }
}

/// A homogeneous ideal given by generators, trusted up to `bound`.
#[derive(Debug)]
pub struct HomogeneousIdeal {
    ring: Ring,
    nvars: usize,
    generators: Vec<Polynomial>,
    bound: u32,
    cache: Vec<OnceLock<Arc<GradedPiece>>>,
}

impl Clone for HomogeneousIdeal {
    fn clone(&self) -> Self {
        HomogeneousIdeal {
            ring: self.ring,
            nvars: self.nvars,
            generators: self.generators.clone(),
            bound: self.bound,
            cache: self.cache.clone(),
        }
    }
}

impl PartialEq for HomogeneousIdeal {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring
            && self.nvars == other.nvars
            && self.bound == other.bound
            && self.generators == other.generators
    }
}

impl HomogeneousIdeal {
    pub fn new(ring: Ring, nvars: usize, generators: Vec<Polynomial>, bound: u32) -> Result<Self> {
        for g in &generators {
            if g.is_zero() {
                return Err(Error::ZeroGenerator);
            }
            if g.nvars() != nvars {
                return Err(Error::VarCountMismatch { left: nvars, right: g.nvars() });
            }
            if g.ring() != ring {
                return Err(Error::RingMismatch { expected: ring.name(), found: g.ring().name() });
            }
            let d = g.degree().expect("nonzero");
            if d > bound {
                return Err(Error::BeyondTruncation { degree: d, bound });
            }
        }
        Ok(Self::from_parts(ring, nvars, generators, bound))
    }

    fn from_parts(ring: Ring, nvars: usize, generators: Vec<Polynomial>, bound: u32) -> Self {
        HomogeneousIdeal {
            ring,
            nvars,
            generators,
            bound,
            cache: (0..=bound).map(|_| OnceLock::new()).collect(),
        }
    }

    pub fn zero(ring: Ring, nvars: usize, bound: u32) -> Self {
        Self::from_parts(ring, nvars, Vec::new(), bound)
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn truncation_bound(&self) -> u32 {
        self.bound
    }

    /// Same generators under a different truncation bound.
    pub fn with_bound(&self, bound: u32) -> Result<Self> {
        Self::new(self.ring, self.nvars, self.generators.clone(), bound)
    }

    /// Same generators read in the dual ring (e.g. an ideal of `S` used as an
    /// ideal of operators).
    pub fn into_ring(self, ring: Ring) -> Self {
        let generators = self.generators.into_iter().map(|g| g.with_ring(ring)).collect();
        Self::from_parts(ring, self.nvars, generators, self.bound)
    }

    fn check_degree(&self, d: u32) -> Result<()> {
        if d > self.bound {
            Err(Error::BeyondTruncation { degree: d, bound: self.bound })
        } else {
            Ok(())
        }
    }

    /// Basis of `I_d = span{m * g : deg m + deg g = d}`.
    pub fn graded_piece(&self, d: u32) -> Result<Arc<GradedPiece>> {
        self.check_degree(d)?;
        Ok(self.cache[d as usize].get_or_init(|| Arc::new(self.compute_piece(d))).clone())
    }

    fn compute_piece(&self, d: u32) -> GradedPiece {
        let target = MonomialBasis::new(self.nvars, d);
        let mut rows = Vec::new();
        for g in &self.generators {
            let gd = g.degree().expect("nonzero generator");
            if gd > d {
                continue;
            }
            for m in crate::mpoly::monomials(self.nvars, d - gd) {
                let mut row = vec![BigRational::zero(); target.len()];
                for (e, c) in g.terms() {
                    let idx = target.index_of(&e.add(&m)).expect("degree d monomial");
                    row[idx] = c.clone();
                }
                rows.push(row);
            }
        }
        let echelon = linalg::rref(&rows, target.len());
        let basis = echelon.rows.iter().map(|r| target.polynomial(self.ring, r)).collect();
        GradedPiece { degree: d, ring: self.ring, nvars: self.nvars, basis, echelon }
    }

    /// `dim S_d - dim I_d`.
    pub fn hilbert_function(&self, d: u32) -> Result<usize> {
        Ok(self.graded_piece(d)?.codimension())
    }

    /// Hilbert function values in degrees `0..=bound`. Degrees are computed
    /// in parallel.
    pub fn hilbert_values(&self) -> Vec<usize> {
        (0..=self.bound)
            .into_par_iter()
            .map(|d| self.hilbert_function(d).expect("within bound"))
            .collect()
    }

    pub fn hilbert_record(&self) -> HilbertRecord {
        HilbertRecord {
            degrees: (0..=self.bound).collect(),
            values: self.hilbert_values(),
            truncation_bound: self.bound,
        }
    }

    pub fn contains_in_degree(&self, f: &Polynomial) -> Result<bool> {
        if f.nvars() != self.nvars {
            return Err(Error::VarCountMismatch { left: self.nvars, right: f.nvars() });
        }
        match f.degree() {
            None => Ok(true),
            Some(d) => Ok(self.graded_piece(d)?.contains(f)),
        }
    }

    /// Degreewise containment `self_d ⊆ other_d` for every `d <= up_to`.
    pub fn is_contained_in(&self, other: &HomogeneousIdeal, up_to: u32) -> Result<bool> {
        for d in 0..=up_to {
            let mine = self.graded_piece(d)?;
            let theirs = other.graded_piece(d)?;
            if !mine.basis.iter().all(|b| theirs.contains(&b.clone().with_ring(theirs.ring))) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Generator concatenation; the bound is the smaller of the two.
    pub fn sum(&self, other: &HomogeneousIdeal) -> Result<HomogeneousIdeal> {
        if self.nvars != other.nvars {
            return Err(Error::VarCountMismatch { left: self.nvars, right: other.nvars });
        }
        if self.ring != other.ring {
            return Err(Error::RingMismatch { expected: self.ring.name(), found: other.ring.name() });
        }
        let bound = self.bound.min(other.bound);
        let gens = self.generators.iter().chain(&other.generators).cloned().collect();
        HomogeneousIdeal::new(self.ring, self.nvars, gens, bound)
    }

    /// Image of the ideal in `S / (forms)`, presented in the remaining
    /// `nvars - forms.len()` variables.
    ///
    /// The forms are put in reduced echelon form; each pivot variable is
    /// solved for in terms of the free ones and substituted into every
    /// generator. Generators that vanish identically are dropped.
    pub fn quotient_by_linear_forms(&self, forms: &[LinearForm]) -> Result<HomogeneousIdeal> {
        let change = elimination_substitution(self.nvars, forms)?;
        let reduced_vars = self.nvars - forms.len();
        let gens = self
            .generators
            .iter()
            .map(|g| g.substitute_unchecked(&change))
            .filter(|g| !g.is_zero())
            .collect();
        Ok(Self::from_parts(self.ring, reduced_vars, gens, self.bound))
    }
}

/// `nvars x (nvars - forms.len())` matrix expressing every variable in terms
/// of the free variables left after solving `forms = 0`.
pub fn elimination_substitution(nvars: usize, forms: &[LinearForm]) -> Result<linalg::Matrix> {
    if let Some(l) = forms.iter().find(|l| l.nvars() != nvars) {
        return Err(Error::VarCountMismatch { left: nvars, right: l.nvars() });
    }
    // pivot on the highest-index variables so the survivors keep their order
    let rows: Vec<Vec<BigRational>> = forms
        .iter()
        .map(|l| l.0.iter().rev().cloned().collect())
        .collect();
    let red = linalg::rref(&rows, nvars);
    if red.rank() < forms.len() {
        return Err(Error::DependentForms);
    }
    let col = |j: usize| nvars - 1 - j;
    let mut is_pivot = vec![false; nvars];
    for &p in &red.pivots {
        is_pivot[col(p)] = true;
    }
    let free: Vec<usize> = (0..nvars).filter(|&j| !is_pivot[j]).collect();
    let mut change = vec![vec![BigRational::zero(); free.len()]; nvars];
    for (k, &j) in free.iter().enumerate() {
        change[j][k] = num_traits::One::one();
    }
    for (row, &p) in red.rows.iter().zip(&red.pivots) {
        for (k, &j) in free.iter().enumerate() {
            change[col(p)][k] = -row[col(j)].clone();
        }
    }
    Ok(change)
}

/// JSON record of a Hilbert function.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertRecord {
    pub degrees: Vec<u32>,
    pub values: Vec<usize>,
    pub truncation_bound: u32,
}

/// Parse an ideal file: one polynomial per line, `#` starts a comment.
/// The variable count is the largest seen unless `nvars` is given.
pub fn parse_ideal_text(text: &str, nvars: Option<usize>, bound: u32) -> Result<HomogeneousIdeal> {
    let lines: Vec<&str> = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty())
        .collect();
    let mut ring = None;
    let mut max_vars = 0;
    for l in &lines {
        let p = parse_polynomial(l)?;
        if !p.is_zero() || p.nvars() > 1 {
            max_vars = max_vars.max(p.nvars());
        }
        match ring {
            Some(r) if r != p.ring() && !p.is_zero() => {
                return Err(Error::RingMismatch { expected: Ring::name(r), found: p.ring().name() })
            }
            None if !p.is_zero() => ring = Some(p.ring()),
            _ => {}
        }
    }
    let ring = ring.unwrap_or(Ring::S);
    let nvars = nvars.unwrap_or(max_vars.max(1));
    let gens = lines
        .iter()
        .map(|l| parse_polynomial_in(l, ring, nvars))
        .collect::<Result<Vec<_>>>()?;
    HomogeneousIdeal::new(ring, nvars, gens, bound)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mpoly::binomial;

    fn ideal(gens: &[&str], nvars: usize, bound: u32) -> HomogeneousIdeal {
        let gens = gens.iter().map(|g| parse_polynomial_in(g, Ring::S, nvars).unwrap()).collect();
        HomogeneousIdeal::new(Ring::S, nvars, gens, bound).unwrap()
    }

    #[test]
    fn principal_ideal_piece() {
        let i = ideal(&["x0"], 2, 3);
        let p = i.graded_piece(2).unwrap();
        assert_eq!(p.dim(), 2);
        assert_eq!(p.codimension(), 1);
        assert!(p.contains(&parse_polynomial_in("x0^2", Ring::S, 2).unwrap()));
        assert!(p.contains(&parse_polynomial_in("x0*x1", Ring::S, 2).unwrap()));
    }

    #[test]
    fn two_quadrics_fill_degree_three() {
        // the 4 multiples x0^2x1, x0x1^2, x0^3-x0x1^2, x0^2x1-x1^3 are independent
        let i = ideal(&["x0*x1", "x0^2 - x1^2"], 2, 4);
        let p = i.graded_piece(3).unwrap();
        assert_eq!(p.dim(), 4);
        assert_eq!(p.codimension(), 0);
    }

    #[test]
    fn zero_ideal_hilbert_function() {
        for nvars in 1..5 {
            let z = HomogeneousIdeal::zero(Ring::S, nvars, 6);
            for d in 0..=6 {
                let expect = binomial(nvars as u32 - 1 + d, d);
                assert_eq!(num_bigint::BigInt::from(z.hilbert_function(d).unwrap()), expect);
            }
        }
    }

    #[test]
    fn rejects_degree_beyond_bound() {
        let i = ideal(&["x0"], 2, 3);
        assert_eq!(i.graded_piece(4).unwrap_err(), Error::BeyondTruncation { degree: 4, bound: 3 });
        assert!(matches!(
            HomogeneousIdeal::new(Ring::S, 2, vec![parse_polynomial_in("x0^5", Ring::S, 2).unwrap()], 3),
            Err(Error::BeyondTruncation { .. })
        ));
    }

    #[test]
    fn rejects_zero_generator() {
        assert_eq!(
            HomogeneousIdeal::new(Ring::S, 2, vec![Polynomial::zero(Ring::S, 2)], 3).unwrap_err(),
            Error::ZeroGenerator
        );
    }

    #[test]
    fn quotient_by_coordinate_form() {
        let i = ideal(&["x0^2 + x1^2 + x2^2"], 3, 4);
        let q = i.quotient_by_linear_forms(&[LinearForm::from_ints(&[0, 0, 1])]).unwrap();
        assert_eq!(q.nvars(), 2);
        assert_eq!(q.generators(), &[parse_polynomial_in("x0^2 + x1^2", Ring::S, 2).unwrap()]);
    }

    #[test]
    fn quotient_by_general_form() {
        let i = ideal(&["x0*x2"], 3, 4);
        let q = i.quotient_by_linear_forms(&[LinearForm::from_ints(&[-1, -1, 1])]).unwrap();
        assert_eq!(q.generators(), &[parse_polynomial_in("x0^2 + x0*x1", Ring::S, 2).unwrap()]);
    }

    #[test]
    fn quotient_rejects_dependent_forms() {
        let i = ideal(&["x0*x2"], 3, 4);
        let forms = [LinearForm::from_ints(&[1, 1, 0]), LinearForm::from_ints(&[2, 2, 0])];
        assert_eq!(i.quotient_by_linear_forms(&forms).unwrap_err(), Error::DependentForms);
    }

    #[test]
    fn quotient_by_all_variables() {
        let i = ideal(&["x0^2 - x1*x2"], 3, 4);
        let forms = [
            LinearForm::from_ints(&[1, 2, 0]),
            LinearForm::from_ints(&[0, 1, 3]),
            LinearForm::from_ints(&[1, 0, 1]),
        ];
        let q = i.quotient_by_linear_forms(&forms).unwrap();
        assert_eq!(q.nvars(), 0);
        assert_eq!(q.hilbert_values(), vec![1, 0, 0, 0, 0]);
    }

    #[test]
    fn membership() {
        let i = ideal(&["x0"], 2, 3);
        assert!(i.contains_in_degree(&parse_polynomial_in("x0*x1", Ring::S, 2).unwrap()).unwrap());
        let j = ideal(&["x0^2"], 2, 3);
        assert!(!j.contains_in_degree(&parse_polynomial_in("x0", Ring::S, 2).unwrap()).unwrap());
    }

    #[test]
    fn multiplication_by_variables_stays_inside() {
        let i = ideal(&["x0*x1 - x2^2", "x0^3 + x1^3"], 3, 5);
        for d in 2..5 {
            let p = i.graded_piece(d).unwrap();
            let next = i.graded_piece(d + 1).unwrap();
            assert!(p.dim() <= next.dim());
            for b in &p.basis {
                for v in 0..3 {
                    let prod = b * &Polynomial::var(Ring::S, 3, v);
                    assert!(next.contains(&prod));
                }
            }
        }
    }

    #[test]
    fn complete_intersection_artinian_hilbert_function() {
        // (2, 3) in 3 vars reduced by nothing is already Artinian only after
        // cutting; use 2 forms of degrees 2 and 3 in 2 variables:
        // (1 + t)(1 + t + t^2) = 1 + 2t + 2t^2 + t^3
        let i = ideal(&["x0^2 + 3*x0*x1 - x1^2", "x0^3 - 2*x1^3 + x0*x1^2"], 2, 6);
        assert_eq!(i.hilbert_values(), vec![1, 2, 2, 1, 0, 0, 0]);
    }

    #[test]
    fn hilbert_json_shape() {
        let i = ideal(&["x0"], 2, 2);
        let json = serde_json::to_string(&i.hilbert_record()).unwrap();
        assert_eq!(json, r#"{"degrees":[0,1,2],"values":[1,1,1],"truncation_bound":2}"#);
    }

    #[test]
    fn ideal_file_parsing() {
        let text = "# twisted cubic\nx0*x2 - x1^2\nx0*x3 - x1*x2 # second\n\nx1*x3 - x2^2\n";
        let i = parse_ideal_text(text, None, 4).unwrap();
        assert_eq!(i.nvars(), 4);
        assert_eq!(i.generators().len(), 3);
        assert_eq!(i.hilbert_values(), vec![1, 4, 7, 10, 13]);
    }
}
