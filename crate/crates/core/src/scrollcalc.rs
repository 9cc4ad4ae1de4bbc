//! Divisor classes on `P(E)`, `E = O(a1) + ... + O(ak)` over `P^1`, and on
//! the rational normal scroll `S_{a1..ak} ⊂ P^N` it resolves.
//!
//! `Pic P(E) = Z H + Z F` with `H` the tautological class and `F` a fibre;
//! intersection numbers are `H^k = f`, `H^{k-1} F = 1`, `F^2 = 0` where
//! `f = a1 + ... + ak` and `N = k - 1 + f`.

use serde::Serialize;

use crate::error::{Error, Result};

/// The class `a H + b F`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct ScrollClass {
    pub a: i64,
    pub b: i64,
}

impl ScrollClass {
    pub const fn new(a: i64, b: i64) -> Self {
        ScrollClass { a, b }
    }
}

impl std::ops::Add for ScrollClass {
    type Output = ScrollClass;
    fn add(self, o: ScrollClass) -> ScrollClass {
        ScrollClass::new(self.a + o.a, self.b + o.b)
    }
}

impl std::ops::Sub for ScrollClass {
    type Output = ScrollClass;
    fn sub(self, o: ScrollClass) -> ScrollClass {
        ScrollClass::new(self.a - o.a, self.b - o.b)
    }
}

impl std::ops::Mul<ScrollClass> for i64 {
    type Output = ScrollClass;
    fn mul(self, c: ScrollClass) -> ScrollClass {
        ScrollClass::new(self * c.a, self * c.b)
    }
}

impl std::fmt::Display for ScrollClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}H{:+}F", self.a, self.b)
    }
}

/// Numerical data of a scroll type `(a1 <= ... <= ak)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScrollInvariants {
    pub k: i64,
    pub f: i64,
    pub n_ambient: i64,
    /// Number of zero exponents; the vertex is a `P^{zeros-1}`.
    pub zeros: i64,
    /// `None` when there is no vertex.
    pub vertex_dim: Option<i64>,
    /// `N - dim V`, or `None` without a vertex.
    pub vertex_codim_ambient: Option<i64>,
    /// `k - dim V`: codimension of the vertex inside the scroll.
    pub vertex_codim_scroll: Option<i64>,
}

impl ScrollInvariants {
    /// The vertex has codimension 2 in the scroll, where the class group
    /// drops to `Z J(F)` and the exceptional divisor `E ~ H - fF` appears.
    pub fn exceptional_regime(&self) -> bool {
        self.vertex_codim_scroll == Some(2)
    }
}

pub fn scroll_invariants(exponents: &[i64]) -> Result<ScrollInvariants> {
    if exponents.iter().any(|&a| a < 0) {
        return Err(Error::Precondition("scroll exponents must be nonnegative".into()));
    }
    if exponents.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::Precondition("scroll exponents must be sorted".into()));
    }
    let f: i64 = exponents.iter().sum();
    if f == 0 {
        return Err(Error::Precondition("scroll type is all zero".into()));
    }
    let k = exponents.len() as i64;
    let n_ambient = k - 1 + f;
    let zeros = exponents.iter().filter(|&&a| a == 0).count() as i64;
    let vertex_dim = (zeros > 0).then_some(zeros - 1);
    Ok(ScrollInvariants {
        k,
        f,
        n_ambient,
        zeros,
        vertex_dim,
        vertex_codim_ambient: vertex_dim.map(|v| n_ambient - v),
        vertex_codim_scroll: vertex_dim.map(|v| k - v),
    })
}

/// `K_{P(E)} = -k H + (N - k - 1) F`.
pub fn canonical_class(k: i64, n_ambient: i64) -> Result<ScrollClass> {
    if n_ambient < k {
        return Err(Error::Precondition(format!("N = {n_ambient} < k = {k}")));
    }
    Ok(ScrollClass::new(-k, n_ambient - k - 1))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CrepantClass {
    /// `Y ~ (s + k) H + (k + 1 - N) F`.
    Divisor { class: ScrollClass },
    /// `N = k`: the scroll is `P^N` blown up and `Y` is the total transform
    /// of a hypersurface of this degree.
    Hypersurface { degree: i64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CrepantReport {
    pub class: CrepantClass,
    /// `2 - f`, which always equals `k + 1 - N`.
    pub two_minus_f: i64,
}

/// Class of the proper transform of a crepant `s`-subcanonical divisor on a
/// `k`-dimensional scroll in `P^N`. Requires `k > 2` and `k > -s`.
pub fn crepant_divisor_class(s: i64, k: i64, n_ambient: i64) -> Result<CrepantReport> {
    if k <= 2 {
        return Err(Error::Hypothesis(format!("k = {k} must exceed 2")));
    }
    if k <= -s {
        return Err(Error::Hypothesis(format!("k = {k} must exceed -s = {}", -s)));
    }
    if n_ambient < k {
        return Err(Error::Precondition(format!("N = {n_ambient} < k = {k}")));
    }
    let f = n_ambient - k + 1;
    let class = if n_ambient == k {
        CrepantClass::Hypersurface { degree: s + k + 1 }
    } else {
        CrepantClass::Divisor { class: ScrollClass::new(s + k, k + 1 - n_ambient) }
    };
    Ok(CrepantReport { class, two_minus_f: 2 - f })
}

/// Inverse of [`crepant_divisor_class`]: the `s` for which `class` is the
/// crepant class, if it has that shape.
pub fn infer_subcanonical_level(class: ScrollClass, k: i64, n_ambient: i64) -> Option<i64> {
    if n_ambient > k && class.b == k + 1 - n_ambient {
        Some(class.a - k)
    } else if n_ambient == k && class.b == 0 {
        Some(class.a - k - 1)
    } else {
        None
    }
}

/// Integral total transform of a Weil divisor `X ≡ d J(F)` on a scroll whose
/// vertex has codimension 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TotalTransform {
    /// `d - 1 = m f + h` with `0 <= h < f`.
    pub m: i64,
    pub h: i64,
    /// For `d >= 0`: `(m + 1) H + (f - h - 1) F`. For `d < 0`: the first
    /// presentation `-(m + 1) J(H) + (f - h - 1) J(F)`.
    pub class: ScrollClass,
    /// For `d < 0` only: the second presentation `-m J(H) - (h + 1) J(F)`.
    pub alternative: Option<ScrollClass>,
    /// Smallest integer `>= d / f` (the strict transform is `Y ~ d F`).
    pub n_q: i64,
    /// `Y + n_q E` with `E ~ H - f F`, i.e. `n_q H + (d - f n_q) F`.
    pub via_exceptional: ScrollClass,
}

pub fn integral_total_transform(d: i64, f: i64) -> Result<TotalTransform> {
    if f < 1 {
        return Err(Error::Precondition(format!("f = {f} must be positive")));
    }
    let m = (d - 1).div_euclid(f);
    let h = (d - 1).rem_euclid(f);
    let n_q = -((-d).div_euclid(f));
    let via_exceptional = ScrollClass::new(d, 0).swap_to_fibre() + n_q * exceptional_class(f);
    if d >= 0 {
        Ok(TotalTransform {
            m,
            h,
            class: ScrollClass::new(m + 1, f - h - 1),
            alternative: None,
            n_q,
            via_exceptional,
        })
    } else {
        Ok(TotalTransform {
            m,
            h,
            class: ScrollClass::new(-(m + 1), f - h - 1),
            alternative: Some(ScrollClass::new(-m, -(h + 1))),
            n_q,
            via_exceptional,
        })
    }
}

impl ScrollClass {
    /// `(d, 0)` read as `d F`.
    fn swap_to_fibre(self) -> ScrollClass {
        ScrollClass::new(0, self.a)
    }
}

/// `E ~ H - f F`.
pub fn exceptional_class(f: i64) -> ScrollClass {
    ScrollClass::new(1, -f)
}

/// Degree in `P^N` of the image of a divisor of class `aH + bF`:
/// `(aH + bF) . H^{k-1} = a f + b`.
pub fn divisor_degree(exponents: &[i64], class: ScrollClass) -> Result<i64> {
    let inv = scroll_invariants(exponents)?;
    if class.a < 0 {
        return Err(Error::Precondition(format!("a = {} must be nonnegative", class.a)));
    }
    Ok(class.a * inv.f + class.b)
}

/// Full `scroll calc` record.
#[derive(Debug, Clone, Serialize)]
pub struct ScrollReport {
    pub exponents: Vec<i64>,
    pub s: i64,
    pub invariants: ScrollInvariants,
    pub canonical_class: ScrollClass,
    pub crepant: std::result::Result<CrepantReport, String>,
    pub predicted_degree: Option<i64>,
    pub main_theorem_applicable: bool,
    pub hypotheses: Vec<String>,
}

pub fn scroll_report(exponents: &[i64], s: i64) -> Result<ScrollReport> {
    let inv = scroll_invariants(exponents)?;
    let canonical = canonical_class(inv.k, inv.n_ambient)?;
    let crepant = crepant_divisor_class(s, inv.k, inv.n_ambient).map_err(|e| e.to_string());
    let predicted_degree = match &crepant {
        Ok(CrepantReport { class: CrepantClass::Divisor { class }, .. }) => {
            divisor_degree(exponents, *class).ok()
        }
        Ok(CrepantReport { class: CrepantClass::Hypersurface { degree }, .. }) => Some(*degree),
        Err(_) => None,
    };
    let hypotheses = vec![
        format!("k > 2: {}", inv.k > 2),
        format!("k + s > 2: {}", inv.k + s > 2),
    ];
    Ok(ScrollReport {
        exponents: exponents.to_vec(),
        s,
        main_theorem_applicable: inv.k > 2 && inv.k + s > 2,
        invariants: inv,
        canonical_class: canonical,
        crepant,
        predicted_degree,
        hypotheses,
    })
}
