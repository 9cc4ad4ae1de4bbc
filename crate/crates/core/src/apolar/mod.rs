//! Apolarity: catalecticants, perp ideals, Macaulay dual generators and
//! Fermat-equivalence of forms.

mod fermat;
pub(crate) mod univariate;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::gradedideal::HomogeneousIdeal;
use crate::linalg::{self, Matrix};
use crate::mpoly::{binomial, power_of_linear_form, LinearForm, MonomialBasis, Polynomial, Ring};

pub use fermat::{is_fermat_equivalent, FermatOptions, FermatStatus, FermatVerdict};

/// The catalecticant `T_j -> S_{d-j}`, `D -> D . F`, in monomial bases.
#[derive(Debug, Clone)]
pub struct Catalecticant {
    pub source_degree: u32,
    pub target_degree: u32,
    /// Rows indexed by `S_{d-j}` monomials, columns by `T_j` monomials,
    /// both in descending graded-lex order.
    pub matrix: Matrix,
    pub rank: usize,
    /// Basis of the kernel, i.e. of `(F^perp)_j`.
    pub kernel: Vec<Polynomial>,
}

/// Catalecticant of a nonzero form `f` in `S` at source degree `j`.
pub fn catalecticant(f: &Polynomial, j: u32) -> Result<Catalecticant> {
    let d = form_degree(f)?;
    if j > d {
        return Err(Error::Precondition(format!("catalecticant degree {j} exceeds form degree {d}")));
    }
    let n = f.nvars();
    let source = MonomialBasis::new(n, j);
    let target = MonomialBasis::new(n, d - j);
    let mut matrix = vec![vec![BigRational::zero(); source.len()]; target.len()];
    for (col, a) in source.monomials().iter().enumerate() {
        let weight_a = a.factorial();
        for (b, c) in f.terms() {
            if let Some(diff) = b.checked_sub(a) {
                let binom: num_bigint::BigInt = a
                    .as_slice()
                    .iter()
                    .zip(b.as_slice())
                    .map(|(&ai, &bi)| binomial(bi, ai))
                    .product();
                let row = target.index_of(&diff).expect("target monomial");
                matrix[row][col] = c * BigRational::from_integer(&weight_a * binom);
            }
        }
    }
    let red = linalg::rref(&matrix, source.len());
    let kernel = red
        .kernel()
        .iter()
        .map(|v| source.polynomial(Ring::T, v))
        .collect();
    Ok(Catalecticant { source_degree: j, target_degree: d - j, matrix, rank: red.rank(), kernel })
}

fn form_degree(f: &Polynomial) -> Result<u32> {
    if f.ring() != Ring::S {
        return Err(Error::RingMismatch { expected: "S", found: "T" });
    }
    f.degree()
        .ok_or_else(|| Error::Precondition("the zero form has no catalecticants".into()))
}

/// Rank of the first catalecticant: the number of essential variables.
pub fn essential_rank(f: &Polynomial) -> Result<usize> {
    let d = form_degree(f)?;
    if d == 0 {
        return Err(Error::Precondition("essential rank needs degree >= 1".into()));
    }
    Ok(catalecticant(f, 1)?.rank)
}

/// `F^perp` as an ideal of `T`: the kernels of all catalecticants plus all
/// of `T_{d+1}`.
pub fn perp_ideal(f: &Polynomial, bound: u32) -> Result<HomogeneousIdeal> {
    let d = form_degree(f)?;
    if bound < d + 1 {
        return Err(Error::Precondition(format!("perp ideal bound {bound} must be at least {}", d + 1)));
    }
    let n = f.nvars();
    let mut gens = Vec::new();
    for j in 1..=d {
        gens.extend(catalecticant(f, j)?.kernel);
    }
    gens.extend(
        MonomialBasis::new(n, d + 1)
            .monomials()
            .iter()
            .map(|e| Polynomial::monomial(Ring::T, e.clone(), BigRational::one())),
    );
    HomogeneousIdeal::new(Ring::T, n, gens, bound)
}

/// The Macaulay dual generator of an Artinian Gorenstein ideal `j` of `T`
/// with socle degree `e`: the form `F` in `S_e` annihilated by `j_e`,
/// unique up to scalar. Returned normalized (integer coefficients, content
/// 1, positive leading coefficient).
///
/// Fails with the kernel dimension if it is not exactly one, and with a
/// precondition error if the quotient does not vanish above `e`.
pub fn dual_generator(j: &HomogeneousIdeal, e: u32) -> Result<Polynomial> {
    for d in e + 1..=j.truncation_bound() {
        let hf = j.hilbert_function(d)?;
        if hf != 0 {
            return Err(Error::Precondition(format!(
                "quotient is not Artinian above degree {e}: HF({d}) = {hf}"
            )));
        }
    }
    let piece = j.graded_piece(e)?;
    let basis = MonomialBasis::new(j.nvars(), e);
    let weights: Vec<BigRational> = basis
        .monomials()
        .iter()
        .map(|m| BigRational::from_integer(m.factorial()))
        .collect();
    // F . g = sum_b g_b f_b b! for g in J_e
    let rows: Matrix = piece
        .echelon()
        .rows
        .iter()
        .map(|r| r.iter().zip(&weights).map(|(x, w)| x * w).collect())
        .collect();
    let kernel = linalg::kernel(&rows, basis.len());
    if kernel.len() != 1 {
        return Err(Error::KernelDimension { dim: kernel.len(), degree: e });
    }
    Ok(basis.polynomial(Ring::S, &kernel[0]).normalized())
}

/// Outcome of an apolarity check against a point set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ApolarityCheck {
    pub apolar: bool,
    /// `F = sum lambda_i l_i^d` when apolar.
    pub coefficients: Option<Vec<BigRational>>,
}

/// Decide whether `f` lies in the span of the `d`-th powers of the linear
/// forms attached to `points`.
pub fn verify_apolarity(points: &[LinearForm], f: &Polynomial) -> Result<ApolarityCheck> {
    let d = form_degree(f)?;
    let n = f.nvars();
    for (i, p) in points.iter().enumerate() {
        if p.nvars() != n {
            return Err(Error::VarCountMismatch { left: n, right: p.nvars() });
        }
        if p.is_zero() {
            return Err(Error::Precondition("zero point".into()));
        }
        if points[..i].iter().any(|q| linalg::rank(&[p.0.clone(), q.0.clone()]) < 2) {
            return Err(Error::Precondition("points are not pairwise distinct".into()));
        }
    }
    let basis = MonomialBasis::new(n, d);
    let cols: Vec<Vec<BigRational>> = points
        .iter()
        .map(|p| basis.coords(&power_of_linear_form(p, d)))
        .collect();
    let a = linalg::transpose(&cols);
    let a = if a.is_empty() { vec![Vec::new(); basis.len()] } else { a };
    match linalg::solve(&a, &basis.coords(f)) {
        Some(lambda) => Ok(ApolarityCheck { apolar: true, coefficients: Some(lambda) }),
        None => Ok(ApolarityCheck { apolar: false, coefficients: None }),
    }
}

/// Ideal of a finite set of points of projective space, computed degreewise
/// as the kernel of evaluation up to `bound`.
pub fn points_ideal(points: &[LinearForm], bound: u32) -> Result<HomogeneousIdeal> {
    let n = points
        .first()
        .map(LinearForm::nvars)
        .ok_or_else(|| Error::Precondition("empty point set".into()))?;
    let mut gens: Vec<Polynomial> = Vec::new();
    for d in 1..=bound {
        let basis = MonomialBasis::new(n, d);
        let rows: Matrix = points
            .iter()
            .map(|p| {
                basis
                    .monomials()
                    .iter()
                    .map(|m| p.evaluate(&Polynomial::monomial(Ring::S, m.clone(), BigRational::one())))
                    .collect()
            })
            .collect();
        let current = HomogeneousIdeal::new(Ring::S, n, gens.clone(), bound)?;
        let mut span = current.graded_piece(d)?.echelon().clone();
        for v in linalg::kernel(&rows, basis.len()) {
            if span.insert(&v) {
                gens.push(basis.polynomial(Ring::S, &v).normalized());
            }
        }
    }
    HomogeneousIdeal::new(Ring::S, n, gens, bound)
}

/// Sum of `d`-th powers of the coordinates, `x0^d + ... + x_{n-1}^d`.
pub fn fermat_form(nvars: usize, d: u32) -> Polynomial {
    Polynomial::from_terms(
        Ring::S,
        nvars,
        (0..nvars).map(|i| {
            let mut e = vec![0; nvars];
            e[i] = d;
            (crate::mpoly::Exponent::new(e), BigRational::one())
        }),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mpoly::{parse_polynomial, parse_polynomial_in};

    fn s(x: &str, n: usize) -> Polynomial {
        parse_polynomial_in(x, Ring::S, n).unwrap()
    }
    fn t(x: &str, n: usize) -> Polynomial {
        parse_polynomial_in(x, Ring::T, n).unwrap()
    }

    #[test]
    fn catalecticant_ranks() {
        assert_eq!(catalecticant(&s("x0^4", 3), 1).unwrap().rank, 1);
        let fermat = fermat_form(3, 3);
        let cat = catalecticant(&fermat, 1).unwrap();
        assert_eq!((cat.matrix.len(), cat.matrix[0].len()), (6, 3));
        assert_eq!(cat.rank, 3);
        assert_eq!(catalecticant(&fermat, 2).unwrap().rank, 3);
    }

    #[test]
    fn kernel_annihilates() {
        let f = parse_polynomial("x0^3 + 2*x0*x1*x2 - x2^3 + x1^2*x2").unwrap();
        for j in 0..=3 {
            for k in catalecticant(&f, j).unwrap().kernel {
                assert!(k.contract(&f).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn perp_of_fermat_cubic() {
        let f = fermat_form(3, 3);
        let perp = perp_ideal(&f, 4).unwrap();
        let p2 = perp.graded_piece(2).unwrap();
        assert_eq!(p2.dim(), 3);
        for q in ["d0*d1", "d0*d2", "d1*d2"] {
            assert!(p2.contains(&t(q, 3)));
        }
        let p3 = perp.graded_piece(3).unwrap();
        for q in ["d0^3 - d1^3", "d0^3 - d2^3", "d1^3 - d2^3"] {
            assert!(p3.contains(&t(q, 3)));
        }
        assert_eq!(perp.hilbert_values(), vec![1, 3, 3, 1, 0]);
        for g in perp.generators() {
            assert!(g.contract(&f).unwrap().is_zero());
        }
    }

    #[test]
    fn perp_of_product() {
        let f = s("x0*x1", 2);
        let perp = perp_ideal(&f, 3).unwrap();
        let p2 = perp.graded_piece(2).unwrap();
        assert_eq!(p2.dim(), 2);
        assert!(p2.contains(&t("d0^2", 2)));
        assert!(p2.contains(&t("d1^2", 2)));
        assert_eq!(perp.graded_piece(1).unwrap().dim(), 0);
    }

    #[test]
    fn perp_bound_precondition() {
        assert!(matches!(perp_ideal(&fermat_form(2, 3), 3), Err(Error::Precondition(_))));
    }

    #[test]
    fn dual_generator_of_fermat_relations() {
        let gens = ["d0*d1", "d0*d2", "d1*d2", "d0^3 - d1^3", "d0^3 - d2^3"]
            .iter()
            .map(|g| t(g, 3))
            .collect();
        let j = HomogeneousIdeal::new(Ring::T, 3, gens, 5).unwrap();
        assert_eq!(dual_generator(&j, 3).unwrap(), fermat_form(3, 3));
    }

    #[test]
    fn dual_generator_of_squares() {
        let j = HomogeneousIdeal::new(Ring::T, 2, vec![t("d0^2", 2), t("d1^2", 2)], 4).unwrap();
        assert_eq!(dual_generator(&j, 2).unwrap(), s("x0*x1", 2));
    }

    #[test]
    fn dual_generator_kernel_errors() {
        // (d0^2) in 2 vars: not Artinian
        let j = HomogeneousIdeal::new(Ring::T, 2, vec![t("d0^2", 2)], 4).unwrap();
        assert!(matches!(dual_generator(&j, 2), Err(Error::Precondition(_))));
        // (d0, d1)^2 stops at degree 1 with a 2-dim socle
        let gens = vec![t("d0^2", 2), t("d0*d1", 2), t("d1^2", 2)];
        let j = HomogeneousIdeal::new(Ring::T, 2, gens, 3).unwrap();
        assert_eq!(dual_generator(&j, 1).unwrap_err(), Error::KernelDimension { dim: 2, degree: 1 });
        assert_eq!(dual_generator(&j, 2).unwrap_err(), Error::KernelDimension { dim: 0, degree: 2 });
    }

    #[test]
    fn apolarity_against_coordinate_points() {
        let pts = [LinearForm::from_ints(&[1, 0]), LinearForm::from_ints(&[0, 1])];
        let r = verify_apolarity(&pts, &s("x0^2 + x1^2", 2)).unwrap();
        assert!(r.apolar);
        let one = BigRational::one();
        assert_eq!(r.coefficients, Some(vec![one.clone(), one]));
        assert!(!verify_apolarity(&pts, &s("x0*x1", 2)).unwrap().apolar);
        let dup = [LinearForm::from_ints(&[1, 1]), LinearForm::from_ints(&[2, 2])];
        assert!(verify_apolarity(&dup, &s("x0*x1", 2)).is_err());
    }

    #[test]
    fn coordinate_points_ideal_inside_fermat_perp() {
        let pts = [
            LinearForm::from_ints(&[1, 0, 0]),
            LinearForm::from_ints(&[0, 1, 0]),
            LinearForm::from_ints(&[0, 0, 1]),
        ];
        let gamma = points_ideal(&pts, 4).unwrap().into_ring(Ring::T);
        let perp = perp_ideal(&fermat_form(3, 3), 4).unwrap();
        assert!(gamma.is_contained_in(&perp, 4).unwrap());
        assert_eq!(gamma.hilbert_values(), vec![1, 3, 3, 3, 3]);
    }

    #[test]
    fn essential_rank_examples() {
        let f = parse_polynomial_in("x0^3 + 3*x0^2*x1 + 3*x0*x1^2 + x1^3", Ring::S, 3).unwrap();
        assert_eq!(essential_rank(&f).unwrap(), 1);
        assert_eq!(essential_rank(&fermat_form(3, 3)).unwrap(), 3);
    }
}
