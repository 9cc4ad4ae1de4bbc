//! Example varieties, built as images of monomial parametrizations.
//!
//! Every constructor here works the same way: the ambient coordinates pull
//! back to monomials in a parameter ring, and the degree-`d` piece of the
//! image ideal is the set of degree-`d` forms whose pullback lies in the
//! parameter-side ideal (zero, or a principal ideal `(g)`). Pieces are
//! computed as exact kernels up to the truncation bound, and generators are
//! read off degree by degree.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::artinian::VarietyPresentation;
use crate::error::{Error, Result};
use crate::gradedideal::HomogeneousIdeal;
use crate::linalg;
use crate::mpoly::{monomials, Exponent, MonomialBasis, Polynomial, Ring};
use crate::scrollcalc::{self, ScrollClass};

/// A parameter-ring polynomial: exponent vectors to coefficients. The
/// parameter rings here are multigraded, so no homogeneity is enforced.
type Sparse = HashMap<Vec<u32>, BigRational>;

/// Coordinates of an embedding as parameter monomials.
#[derive(Debug, Clone)]
struct Parametrization {
    coords: Vec<Vec<u32>>,
}

impl Parametrization {
    fn ambient_vars(&self) -> usize {
        self.coords.len()
    }

    fn pullback(&self, e: &Exponent) -> Vec<u32> {
        let width = self.coords.first().map_or(0, Vec::len);
        let mut out = vec![0; width];
        for (c, &k) in self.coords.iter().zip(e.as_slice()) {
            for (o, &x) in out.iter_mut().zip(c) {
                *o += k * x;
            }
        }
        out
    }
}

fn mul_monomial(g: &Sparse, m: &[u32]) -> Sparse {
    g.iter()
        .map(|(e, c)| (e.iter().zip(m).map(|(a, b)| a + b).collect(), c.clone()))
        .collect()
}

/// Basis of `{p in S_d : p(param) in span(multiples)}`, where `multiples`
/// are parameter polynomials spanning the relevant piece of the
/// parameter-side ideal.
fn image_piece(param: &Parametrization, d: u32, multiples: &[Sparse]) -> Vec<Polynomial> {
    let n = param.ambient_vars();
    let basis = MonomialBasis::new(n, d);
    let mut index: HashMap<Vec<u32>, usize> = HashMap::new();
    let mut intern = |e: &Vec<u32>| {
        let next = index.len();
        *index.entry(e.clone()).or_insert(next)
    };
    let images: Vec<usize> = basis.monomials().iter().map(|m| intern(&param.pullback(m))).collect();
    let mult_cols: Vec<Vec<(usize, BigRational)>> = multiples
        .iter()
        .map(|g| g.iter().map(|(e, c)| (intern(e), c.clone())).collect())
        .collect();
    let ncols = basis.len() + multiples.len();
    let mut rows = vec![vec![BigRational::zero(); ncols]; index.len()];
    for (j, &r) in images.iter().enumerate() {
        rows[r][j] = BigRational::one();
    }
    for (k, col) in mult_cols.iter().enumerate() {
        for (r, c) in col {
            rows[*r][basis.len() + k] = -c.clone();
        }
    }
    // multiples of a nonzero g are independent, so projecting the kernel to
    // the first block is injective
    linalg::kernel(&rows, ncols)
        .into_iter()
        .map(|v| basis.polynomial(Ring::S, &v[..basis.len()]).normalized())
        .collect()
}

/// Generators of the ideal whose degree-`d` pieces are given, `d <= bound`:
/// in each degree, the basis elements not already in the ideal generated by
/// lower-degree generators.
fn generators_from_pieces(
    nvars: usize,
    bound: u32,
    mut piece: impl FnMut(u32) -> Vec<Polynomial>,
) -> Result<Vec<Polynomial>> {
    let mut gens: Vec<Polynomial> = Vec::new();
    for d in 1..=bound {
        let elements = piece(d);
        if elements.is_empty() {
            continue;
        }
        let so_far = HomogeneousIdeal::new(Ring::S, nvars, gens.clone(), d)?;
        let mut ech = so_far.graded_piece(d)?.echelon().clone();
        let target = MonomialBasis::new(nvars, d);
        for p in elements {
            if ech.insert(&target.coords(&p)) {
                gens.push(p);
            }
        }
    }
    Ok(gens)
}

fn presentation(
    n_ambient: usize,
    dim: usize,
    s: Option<i64>,
    gens: Vec<Polynomial>,
    bound: u32,
    label: String,
    flags: Vec<String>,
) -> Result<VarietyPresentation> {
    let ideal = HomogeneousIdeal::new(Ring::S, n_ambient + 1, gens, bound)?;
    Ok(VarietyPresentation { n_ambient, dim, s, ideal, label, flags })
}

fn veronese_param(m: usize, n: u32) -> Parametrization {
    Parametrization {
        coords: monomials(m + 1, n).into_iter().map(|e| e.as_slice().to_vec()).collect(),
    }
}

/// `v_n(P^M) ⊂ P^N`, `N = C(n + M, n) - 1`. The ideal is generated by
/// quadrics; `s` is recorded when `n` divides `M + 1`.
pub fn veronese_ideal(m: usize, n: u32, bound: u32) -> Result<VarietyPresentation> {
    if m < 1 || n < 1 {
        return Err(Error::Precondition("Veronese needs M, n >= 1".into()));
    }
    if bound < 2 {
        return Err(Error::Precondition(format!("bound {bound} < 2")));
    }
    let param = veronese_param(m, n);
    let n_ambient = param.ambient_vars() - 1;
    let gens = image_piece(&param, 2, &[]);
    let s = ((m as i64 + 1) % n as i64 == 0).then(|| -(m as i64 + 1) / n as i64);
    presentation(n_ambient, m, s, gens, bound, format!("v_{n}(P^{m})"), Vec::new())
}

/// `v_n(V(f)) ⊂ P^N` for `f` a form in `M + 1` variables of degree
/// `s n + M + 1`.
pub fn veronese_hypersurface_image(
    f: &Polynomial,
    n: u32,
    s: i64,
    bound: u32,
) -> Result<VarietyPresentation> {
    let m = f
        .nvars()
        .checked_sub(1)
        .filter(|&m| m >= 1)
        .ok_or_else(|| Error::Precondition("need at least two variables".into()))?;
    if n < 1 {
        return Err(Error::Precondition("n must be positive".into()));
    }
    let deg = f.degree().ok_or(Error::ZeroGenerator)? as i64;
    let expected = s * n as i64 + m as i64 + 1;
    if expected <= 0 || deg != expected {
        return Err(Error::Precondition(format!(
            "degree {deg} does not match s*n + M + 1 = {expected}"
        )));
    }
    let g: Sparse = f.terms().map(|(e, c)| (e.as_slice().to_vec(), c.clone())).collect();
    let param = veronese_param(m, n);
    let n_ambient = param.ambient_vars() - 1;
    let gens = generators_from_pieces(n_ambient + 1, bound, |d| {
        let top = d as i64 * n as i64 - deg;
        let multiples: Vec<Sparse> = if top < 0 {
            Vec::new()
        } else {
            monomials(m + 1, top as u32)
                .iter()
                .map(|e| mul_monomial(&g, e.as_slice()))
                .collect()
        };
        image_piece(&param, d, &multiples)
    })?;
    presentation(
        n_ambient,
        m - 1,
        Some(s),
        gens,
        bound,
        format!("v_{n}(V({f}))"),
        Vec::new(),
    )
}

fn random_coefficient(rng: &mut ChaCha8Rng) -> BigRational {
    loop {
        let c: i64 = rng.gen_range(-5..=5);
        if c != 0 {
            return BigRational::from_integer(BigInt::from(c));
        }
    }
}

/// A dense form of degree `d` with nonzero small-integer coefficients.
pub fn random_form(nvars: usize, d: u32, rng: &mut ChaCha8Rng) -> Polynomial {
    Polynomial::from_terms(
        Ring::S,
        nvars,
        monomials(nvars, d).into_iter().map(|e| (e, random_coefficient(rng))),
    )
}

/// A complete intersection of seeded random forms of the given degrees in
/// `P^N`, with `s = -N - 1 + sum d_i`.
pub fn complete_intersection(
    degrees: &[u32],
    n_ambient: usize,
    seed: u64,
    bound: u32,
) -> Result<VarietyPresentation> {
    let c = degrees.len();
    if c < 1 || c + 1 > n_ambient {
        return Err(Error::Precondition(format!(
            "codimension {c} must lie in 1..=N-1 = {}",
            n_ambient as i64 - 1
        )));
    }
    if degrees.iter().any(|&d| d < 2) {
        return Err(Error::Precondition("complete intersection degrees must be >= 2".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let gens: Vec<Polynomial> = degrees
        .iter()
        .map(|&d| random_form(n_ambient + 1, d, &mut rng))
        .collect();
    let s = -(n_ambient as i64) - 1 + degrees.iter().map(|&d| d as i64).sum::<i64>();
    let bound = bound.max(degrees.iter().copied().max().unwrap_or(0));
    let label = format!(
        "CI({}) in P^{n_ambient}",
        degrees.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
    );
    presentation(
        n_ambient,
        n_ambient - c,
        Some(s),
        gens,
        bound,
        label,
        vec!["genericity assumed".into()],
    )
}

/// A sorted scroll type `a_1 <= ... <= a_k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScrollType {
    pub exponents: Vec<u32>,
}

impl ScrollType {
    pub fn new(mut exponents: Vec<u32>) -> Result<Self> {
        if exponents.len() < 2 {
            return Err(Error::Precondition("scroll needs k >= 2".into()));
        }
        exponents.sort_unstable();
        Ok(ScrollType { exponents })
    }

    pub fn k(&self) -> usize {
        self.exponents.len()
    }

    pub fn f(&self) -> u32 {
        self.exponents.iter().sum()
    }

    pub fn n_ambient(&self) -> usize {
        self.k() - 1 + self.f() as usize
    }

    pub fn invariants(&self) -> Result<scrollcalc::ScrollInvariants> {
        scrollcalc::scroll_invariants(&self.as_i64())
    }

    fn as_i64(&self) -> Vec<i64> {
        self.exponents.iter().map(|&a| a as i64).collect()
    }

    /// Parameter ring `(s, t, u_1, ..., u_k)`; coordinate `s^{a_i - j} t^j u_i`.
    fn parametrization(&self) -> Parametrization {
        let k = self.k();
        let mut coords = Vec::new();
        for (i, &a) in self.exponents.iter().enumerate() {
            for j in 0..=a {
                let mut e = vec![0; k + 2];
                e[0] = a - j;
                e[1] = j;
                e[2 + i] = 1;
                coords.push(e);
            }
        }
        Parametrization { coords }
    }

    /// Monomials of class `aH + bF` on `P(E)`.
    pub fn class_monomials(&self, class: ScrollClass) -> Vec<Vec<u32>> {
        let k = self.k();
        if class.a < 0 {
            return Vec::new();
        }
        let mut out = Vec::new();
        for alpha in monomials(k, class.a as u32) {
            let w: i64 = alpha
                .as_slice()
                .iter()
                .zip(&self.exponents)
                .map(|(&x, &a)| (x * a) as i64)
                .sum::<i64>()
                + class.b;
            if w < 0 {
                continue;
            }
            for j in 0..=w as u32 {
                let mut e = vec![w as u32 - j, j];
                e.extend_from_slice(alpha.as_slice());
                out.push(e);
            }
        }
        out
    }
}

impl std::fmt::Display for ScrollType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.exponents.iter().map(u32::to_string).collect();
        write!(f, "S_{{{}}}", parts.join(","))
    }
}

/// The scroll `S_{a_1..a_k} ⊂ P^N`. Zero exponents give cones.
pub fn scroll_ideal(t: &ScrollType, bound: u32) -> Result<VarietyPresentation> {
    if t.f() <= 1 {
        return Err(Error::Precondition(format!("{t} is degenerate: f = {} <= 1", t.f())));
    }
    let param = t.parametrization();
    let gens = generators_from_pieces(t.n_ambient() + 1, bound, |d| image_piece(&param, d, &[]))?;
    presentation(t.n_ambient(), t.k(), None, gens, bound, t.to_string(), Vec::new())
}

/// A bihomogeneous form of class `aH + bF` given by its coefficients on
/// parameter monomials `[s, t, u_1..u_k]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScrollForm {
    pub terms: Vec<(Vec<u32>, BigRational)>,
}

/// Image in `P^N` of the divisor `V(form)` of class `aH + bF` on `P(E)`.
///
/// With `form = None` a seeded random member of the linear system is used.
/// `s` is inferred from the class when it has the crepant shape; otherwise
/// it must be supplied.
pub fn scroll_divisor_image(
    t: &ScrollType,
    class: ScrollClass,
    form: Option<&ScrollForm>,
    seed: u64,
    bound: u32,
    s: Option<i64>,
) -> Result<VarietyPresentation> {
    let inv = t.invariants()?;
    let monos = t.class_monomials(class);
    if monos.is_empty() {
        return Err(Error::EmptyLinearSystem(format!("|{class}| on {t} is empty")));
    }
    let mut flags = Vec::new();
    let g: Sparse = match form {
        Some(f) => {
            let allowed: std::collections::HashSet<&Vec<u32>> = monos.iter().collect();
            if let Some((e, _)) = f.terms.iter().find(|(e, _)| !allowed.contains(e)) {
                return Err(Error::Precondition(format!("monomial {e:?} is not of class {class}")));
            }
            let g: Sparse = f
                .terms
                .iter()
                .filter(|(_, c)| !c.is_zero())
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect();
            if g.is_empty() {
                return Err(Error::ZeroGenerator);
            }
            g
        }
        None => {
            flags.push("genericity assumed".to_string());
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            monos.iter().map(|e| (e.clone(), random_coefficient(&mut rng))).collect()
        }
    };
    let s = match s.or_else(|| scrollcalc::infer_subcanonical_level(class, inv.k, inv.n_ambient)) {
        Some(s) => s,
        None => {
            return Err(Error::Precondition(format!(
                "class {class} is not crepant on {t}; pass s explicitly"
            )))
        }
    };
    if inv.k <= 2 {
        flags.push("k = 2: Main Theorem hypotheses not met".to_string());
    }
    let param = t.parametrization();
    let gens = generators_from_pieces(t.n_ambient() + 1, bound, |d| {
        let cofactor = ScrollClass::new(d as i64, 0) - class;
        let multiples: Vec<Sparse> =
            t.class_monomials(cofactor).iter().map(|m| mul_monomial(&g, m)).collect();
        image_piece(&param, d, &multiples)
    })?;
    presentation(
        t.n_ambient(),
        t.k() - 1,
        Some(s),
        gens,
        bound,
        format!("divisor {class} on {t}"),
        flags,
    )
}

/// Pull back an ambient form through the scroll parametrization.
pub fn scroll_pullback(t: &ScrollType, p: &Polynomial) -> Vec<(Vec<u32>, BigRational)> {
    let param = t.parametrization();
    let mut acc: HashMap<Vec<u32>, BigRational> = HashMap::new();
    for (e, c) in p.terms() {
        *acc.entry(param.pullback(e)).or_insert_with(BigRational::zero) += c;
    }
    let mut out: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
    out.sort();
    out
}

/// Cone over `X`: one more ambient variable, absent from every generator.
pub fn cone(x: &VarietyPresentation) -> Result<VarietyPresentation> {
    let nv = x.ideal.nvars() + 1;
    let gens = x
        .ideal
        .generators()
        .iter()
        .map(|g| {
            Polynomial::from_terms(
                Ring::S,
                nv,
                g.terms().map(|(e, c)| {
                    let mut v = e.as_slice().to_vec();
                    v.push(0);
                    (Exponent::new(v), c.clone())
                }),
            )
        })
        .collect();
    let mut flags = x.flags.clone();
    flags.push("cone".into());
    presentation(
        x.n_ambient + 1,
        x.dim + 1,
        x.s,
        gens,
        x.ideal.truncation_bound(),
        format!("cone over {}", x.label),
        flags,
    )
}
