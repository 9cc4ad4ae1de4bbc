//! Artinian reductions `A = S_X / (η_0, ..., η_n)` and their Macaulay
//! polynomials.
//!
//! Only computable consequences of the arithmetically Gorenstein property
//! are checked: the quotient is Artinian, its socle in the top degree is one
//! dimensional, and the h-vector is symmetric. These are necessary
//! conditions, and the reports say so.

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::apolar::dual_generator;
use crate::error::{Error, Result};
use crate::gradedideal::HomogeneousIdeal;
use crate::linalg;
use crate::mpoly::{fmt_rational, parse_polynomial_in, LinearForm, Polynomial, Ring};

/// Default number of draws of linear forms before giving up.
pub const DEFAULT_RETRIES: u32 = 8;

/// `X ⊂ P^N` of dimension `n`, with `ω_X = O_X(s)` when `s` is known.
#[derive(Debug, Clone, PartialEq)]
pub struct VarietyPresentation {
    pub n_ambient: usize,
    pub dim: usize,
    pub s: Option<i64>,
    /// An ideal of `S` in `N + 1` variables.
    pub ideal: HomogeneousIdeal,
    pub label: String,
    pub flags: Vec<String>,
}

#[derive(Debug, Serialize, Deserialize)]
struct VarietyJson {
    #[serde(rename = "N")]
    n_ambient: usize,
    n: usize,
    s: Option<i64>,
    generators: Vec<String>,
    label: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    truncation_bound: Option<u32>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    flags: Vec<String>,
}

impl VarietyPresentation {
    pub fn new(
        n_ambient: usize,
        dim: usize,
        s: Option<i64>,
        ideal: HomogeneousIdeal,
        label: impl Into<String>,
    ) -> Result<Self> {
        let x = VarietyPresentation { n_ambient, dim, s, ideal, label: label.into(), flags: Vec::new() };
        x.validate()?;
        Ok(x)
    }

    fn validate(&self) -> Result<()> {
        if self.dim >= self.n_ambient {
            return Err(Error::Precondition(format!(
                "dimension n = {} must be below N = {}",
                self.dim, self.n_ambient
            )));
        }
        if self.ideal.nvars() != self.n_ambient + 1 {
            return Err(Error::VarCountMismatch { left: self.n_ambient + 1, right: self.ideal.nvars() });
        }
        if self.ideal.ring() != Ring::S {
            return Err(Error::RingMismatch { expected: "S", found: "T" });
        }
        Ok(())
    }

    /// `s + n + 1`, the socle degree predicted for an aG variety.
    pub fn predicted_socle_degree(&self) -> Option<i64> {
        self.s.map(|s| s + self.dim as i64 + 1)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let j = VarietyJson {
            n_ambient: self.n_ambient,
            n: self.dim,
            s: self.s,
            generators: self.ideal.generators().iter().map(|g| g.to_string()).collect(),
            label: self.label.clone(),
            truncation_bound: Some(self.ideal.truncation_bound()),
            flags: self.flags.clone(),
        };
        serde_json::to_value(j).expect("serializable")
    }

    /// Parse the JSON presentation. Without an explicit `truncation_bound`
    /// the bound defaults to `s + n + 3` (and at least the top generator
    /// degree); it is required when `s` is null.
    pub fn from_json(text: &str) -> Result<Self> {
        let j: VarietyJson =
            serde_json::from_str(text).map_err(|e| Error::Parse { pos: e.column(), msg: e.to_string() })?;
        let nvars = j.n_ambient + 1;
        let gens = j
            .generators
            .iter()
            .map(|g| parse_polynomial_in(g, Ring::S, nvars))
            .collect::<Result<Vec<_>>>()?;
        let top = gens.iter().filter_map(Polynomial::degree).max().unwrap_or(0);
        let bound = match (j.truncation_bound, j.s) {
            (Some(b), _) => b,
            (None, Some(s)) => {
                let b = s + j.n as i64 + 3;
                (b.max(top as i64).max(1)) as u32
            }
            (None, None) => {
                return Err(Error::Precondition("truncation_bound is required when s is null".into()))
            }
        };
        let ideal = HomogeneousIdeal::new(Ring::S, nvars, gens, bound)?;
        let x = VarietyPresentation {
            n_ambient: j.n_ambient,
            dim: j.n,
            s: j.s,
            ideal,
            label: j.label,
            flags: j.flags,
        };
        x.validate()?;
        Ok(x)
    }
}

/// Result of a successful Artinian reduction.
#[derive(Debug, Clone, PartialEq)]
pub struct ArtinianReport {
    pub forms: Vec<LinearForm>,
    /// Hilbert function of `A` from degree 0 to the socle degree.
    pub h_vector: Vec<usize>,
    pub socle_degree: u32,
    pub predicted_socle_degree: Option<i64>,
    pub gorenstein_symmetric: bool,
    /// A form in `N - n` variables of degree `socle_degree`.
    pub macaulay_polynomial: Polynomial,
    pub seed: u64,
    pub truncation_bound: u32,
    /// Number of draws used, including the successful one.
    pub attempts: u32,
    pub notes: Vec<String>,
}

fn rational_string(c: &BigRational) -> String {
    fmt_rational(c)
}

impl ArtinianReport {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "forms": self.forms.iter()
                .map(|l| l.0.iter().map(rational_string).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
            "h_vector": self.h_vector,
            "socle_degree": self.socle_degree,
            "predicted_socle_degree": self.predicted_socle_degree,
            "gorenstein_symmetric": self.gorenstein_symmetric,
            "macaulay_polynomial": self.macaulay_polynomial.to_string(),
            "seed": self.seed,
            "truncation_bound": self.truncation_bound,
            "attempts": self.attempts,
            "notes": self.notes,
        })
    }

    pub fn degree(&self) -> usize {
        self.h_vector.iter().sum()
    }
}

/// The quotient `(I_X + (forms)) / (forms)` as an ideal of `T` in `N + 1 -
/// forms.len()` variables, ready for [`dual_generator`].
pub fn reduced_ideal(x: &VarietyPresentation, forms: &[LinearForm]) -> Result<HomogeneousIdeal> {
    if linalg::rank(&forms.iter().map(|l| l.0.clone()).collect::<Vec<_>>()) < forms.len() {
        return Err(Error::DependentForms);
    }
    Ok(x.ideal.quotient_by_linear_forms(forms)?.into_ring(Ring::T))
}

/// Hilbert function of `S_X / (forms)` in degrees `0..=bound`.
pub fn reduction_hilbert_values(x: &VarietyPresentation, forms: &[LinearForm]) -> Result<Vec<usize>> {
    Ok(reduced_ideal(x, forms)?.hilbert_values())
}

/// Largest degree with nonzero Hilbert function, provided the function
/// vanishes at the bound.
fn measured_socle(values: &[usize]) -> Option<u32> {
    if values.last().is_some_and(|&v| v != 0) {
        return None;
    }
    values.iter().rposition(|&v| v != 0).map(|d| d as u32)
}

/// The Macaulay polynomial `F_η` of `S_X / (η_0, ..., η_n)` for explicit
/// forms: deterministic, no retries.
pub fn alpha_map(x: &VarietyPresentation, forms: &[LinearForm]) -> Result<Polynomial> {
    if forms.len() != x.dim + 1 {
        return Err(Error::Precondition(format!(
            "need n + 1 = {} forms, got {}",
            x.dim + 1,
            forms.len()
        )));
    }
    let j = reduced_ideal(x, forms)?;
    let values = j.hilbert_values();
    let e = measured_socle(&values).ok_or_else(|| {
        Error::Precondition(format!(
            "quotient is not Artinian within bound {}",
            j.truncation_bound()
        ))
    })?;
    dual_generator(&j, e)
}

/// Random forms with coefficients in `-3..=3`.
pub fn random_linear_forms(count: usize, nvars: usize, rng: &mut ChaCha8Rng) -> Vec<LinearForm> {
    (0..count)
        .map(|_| {
            LinearForm(
                (0..nvars)
                    .map(|_| BigRational::from_integer(BigInt::from(rng.gen_range(-3i64..=3))))
                    .collect(),
            )
        })
        .collect()
}

/// Reduce `X` by `n + 1` seeded random linear forms and compute its Macaulay
/// polynomial, retrying up to `retries` draws when the draw is not general
/// enough (forms dependent, Hilbert function not vanishing above `s + n +
/// 1`, or a socle of dimension other than one).
pub fn artinian_reduction_with(x: &VarietyPresentation, seed: u64, retries: u32) -> Result<ArtinianReport> {
    x.validate()?;
    let bound = x.ideal.truncation_bound();
    let predicted = x.predicted_socle_degree();
    if let Some(p) = predicted {
        if p < 0 {
            return Err(Error::Precondition(format!("s + n + 1 = {p} is negative")));
        }
        if (bound as i64) < p + 2 {
            return Err(Error::Precondition(format!(
                "truncation bound {bound} is below s + n + 3 = {}",
                p + 2
            )));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut last_reason = String::from("no attempts made");
    let mut kernel_failures = 0;
    for attempt in 1..=retries {
        let forms = random_linear_forms(x.dim + 1, x.n_ambient + 1, &mut rng);
        let j = match reduced_ideal(x, &forms) {
            Ok(j) => j,
            Err(Error::DependentForms) => {
                last_reason = "dependent linear forms".into();
                continue;
            }
            Err(e) => return Err(e),
        };
        let values = j.hilbert_values();
        let Some(e) = measured_socle(&values) else {
            last_reason = format!("Hilbert function nonzero at the bound: {values:?}");
            continue;
        };
        if predicted.is_some_and(|p| e as i64 > p) {
            last_reason = format!("Hilbert function nonzero above s + n + 1: {values:?}");
            continue;
        }
        let f = match dual_generator(&j, e) {
            Ok(f) => f,
            Err(Error::KernelDimension { dim, degree }) => {
                kernel_failures += 1;
                last_reason = format!("socle of dimension {dim} in degree {degree}");
                continue;
            }
            Err(err) => return Err(err),
        };
        let h_vector = values[..=e as usize].to_vec();
        let symmetric = h_vector.iter().eq(h_vector.iter().rev());
        let mut notes = vec!["Gorenstein checks are necessary conditions only".to_string()];
        if let Some(p) = predicted {
            if p != e as i64 {
                notes.push(format!("measured socle degree {e} differs from s + n + 1 = {p}"));
            }
        }
        return Ok(ArtinianReport {
            forms,
            h_vector,
            socle_degree: e,
            predicted_socle_degree: predicted,
            gorenstein_symmetric: symmetric,
            macaulay_polynomial: f,
            seed,
            truncation_bound: bound,
            attempts: attempt,
            notes,
        });
    }
    if kernel_failures == retries && retries > 0 {
        return Err(Error::GenericityNotAchieved {
            attempts: retries,
            reason: format!("not Gorenstein: {last_reason} on every draw"),
        });
    }
    Err(Error::GenericityNotAchieved { attempts: retries, reason: last_reason })
}

pub fn artinian_reduction(x: &VarietyPresentation, seed: u64) -> Result<ArtinianReport> {
    artinian_reduction_with(x, seed, DEFAULT_RETRIES)
}

/// Hilbert function of a reduction by seeded random forms, trimmed after
/// its last nonzero value. Works for non-Gorenstein `X`; useful for degree
/// checks.
pub fn artinian_h_vector(x: &VarietyPresentation, seed: u64) -> Result<Vec<usize>> {
    x.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut last = String::new();
    for _ in 0..DEFAULT_RETRIES {
        let forms = random_linear_forms(x.dim + 1, x.n_ambient + 1, &mut rng);
        match reduction_hilbert_values(x, &forms) {
            Ok(values) => match measured_socle(&values) {
                Some(e) => return Ok(values[..=e as usize].to_vec()),
                None => last = format!("not Artinian within bound: {values:?}"),
            },
            Err(Error::DependentForms) => last = "dependent linear forms".into(),
            Err(e) => return Err(e),
        }
    }
    Err(Error::GenericityNotAchieved { attempts: DEFAULT_RETRIES, reason: last })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::apolar::perp_ideal;
    use crate::geomzoo;
    use crate::mpoly::parse_polynomial;

    fn canonical_curve() -> VarietyPresentation {
        let f = parse_polynomial("x0^5 + x1^5 + x2^5").unwrap();
        geomzoo::veronese_hypersurface_image(&f, 2, 1, 5).unwrap()
    }

    #[test]
    fn genus_six_canonical_curve() {
        let x = canonical_curve();
        for seed in 0..3 {
            let r = artinian_reduction(&x, seed).unwrap();
            assert_eq!(r.h_vector, vec![1, 4, 4, 1]);
            assert_eq!(r.socle_degree, 3);
            assert_eq!(r.predicted_socle_degree, Some(3));
            assert!(r.gorenstein_symmetric);
            assert_eq!(r.macaulay_polynomial.nvars(), 4);
            assert_eq!(r.macaulay_polynomial.degree(), Some(3));
        }
    }

    #[test]
    fn quadric_cubic_intersection() {
        let x = geomzoo::complete_intersection(&[2, 3], 4, 11, 5).unwrap();
        let r = artinian_reduction(&x, 0).unwrap();
        assert_eq!(r.h_vector, vec![1, 2, 2, 1]);
        assert_eq!(r.socle_degree, 3);
    }

    #[test]
    fn linear_space_is_rejected() {
        let ideal = HomogeneousIdeal::zero(Ring::S, 3, 4);
        assert!(VarietyPresentation::new(2, 2, Some(-3), ideal, "P^2").is_err());
    }

    #[test]
    fn bound_guard() {
        let x = geomzoo::complete_intersection(&[3, 3], 4, 1, 4).unwrap();
        assert!(matches!(artinian_reduction(&x, 0), Err(Error::Precondition(_))));
    }

    #[test]
    fn alpha_map_is_scale_invariant() {
        let x = geomzoo::complete_intersection(&[3, 3], 4, 2, 6).unwrap();
        let r = artinian_reduction(&x, 4).unwrap();
        let mut scaled = r.forms.clone();
        scaled[0] = LinearForm(scaled[0].0.iter().map(|c| c * BigRational::from_integer(2.into())).collect());
        assert_eq!(alpha_map(&x, &r.forms).unwrap(), r.macaulay_polynomial);
        assert_eq!(alpha_map(&x, &scaled).unwrap(), r.macaulay_polynomial);
    }

    #[test]
    fn macaulay_perp_contains_reduced_ideal() {
        let x = canonical_curve();
        let r = artinian_reduction(&x, 1).unwrap();
        let j = reduced_ideal(&x, &r.forms).unwrap();
        let perp = perp_ideal(&r.macaulay_polynomial, 5).unwrap();
        assert!(j.is_contained_in(&perp, 5).unwrap());
    }

    #[test]
    fn reports_are_deterministic() {
        let x = geomzoo::complete_intersection(&[2, 3], 4, 3, 5).unwrap();
        let a = artinian_reduction(&x, 7).unwrap();
        let b = artinian_reduction(&x, 7).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.to_json().to_string(), b.to_json().to_string());
    }

    #[test]
    fn non_gorenstein_is_reported() {
        // v_2(P^2): h-vector 1, 3, socle of dimension 3
        let v = geomzoo::veronese_ideal(2, 2, 4).unwrap();
        assert_eq!(artinian_h_vector(&v, 0).unwrap(), vec![1, 3]);
        let err = artinian_reduction(&v, 0).unwrap_err();
        assert!(matches!(err, Error::GenericityNotAchieved { ref reason, .. } if reason.contains("not Gorenstein")));
    }

    #[test]
    fn json_round_trip() {
        let x = geomzoo::complete_intersection(&[2, 2], 4, 0, 4).unwrap();
        let text = x.to_json().to_string();
        let y = VarietyPresentation::from_json(&text).unwrap();
        assert_eq!(y.ideal, x.ideal);
        assert_eq!((y.n_ambient, y.dim, y.s), (4, 2, Some(-1)));
        let minimal = r#"{"N":2,"n":1,"s":0,"generators":["x0^3+x1^3+x2^3"],"label":"cubic"}"#;
        let c = VarietyPresentation::from_json(minimal).unwrap();
        assert_eq!(c.ideal.truncation_bound(), 4);
        let r = artinian_reduction(&c, 0).unwrap();
        assert_eq!(r.h_vector, vec![1, 1, 1]);
    }
}
