//! Command-line front end: argument parsing, the Main Theorem check and
//! the thin subcommand wrappers. The `apolar` binary only forwards to
//! [`run`].

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::apolar::{is_fermat_equivalent, FermatOptions, FermatStatus};
use crate::artinian::{artinian_reduction, VarietyPresentation, DEFAULT_RETRIES};
use crate::error::{Error, Result};
use crate::geomzoo::{self, ScrollType};
use crate::gradedideal::parse_ideal_text;
use crate::mpoly::parse_polynomial;
use crate::scrollcalc::{self, ScrollClass};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

pub const EXIT_OK: i32 = 0;
pub const EXIT_OTHER: i32 = 1;
pub const EXIT_HYPOTHESIS: i32 = 2;
pub const EXIT_GENERICITY: i32 = 3;
pub const EXIT_PARSE: i32 = 4;

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse { .. } | Error::Inhomogeneous { .. } => EXIT_PARSE,
        Error::Hypothesis(_) => EXIT_HYPOTHESIS,
        Error::GenericityNotAchieved { .. } => EXIT_GENERICITY,
        _ => EXIT_OTHER,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Json,
    Text,
}

/// Echoed settings of one invocation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PipelineConfig {
    pub command: String,
    pub inputs: Vec<PathBuf>,
    pub seed: u64,
    pub attempts: u32,
    pub truncation_bound: Option<u32>,
    pub format: OutputFormat,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HypothesisCheck {
    pub name: String,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TrialRecord {
    pub trial: usize,
    pub seed: u64,
    pub h_vector: Vec<usize>,
    pub socle_degree: u32,
    pub macaulay_polynomial: String,
    pub verdict: FermatStatus,
    pub certificate: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MainTheoremSummary {
    pub version: String,
    pub label: String,
    pub seed: u64,
    pub truncation_bound: u32,
    pub k: usize,
    pub s: Option<i64>,
    pub hypotheses: Vec<HypothesisCheck>,
    /// Set when a hypothesis fails: the verdicts are reported but the
    /// theorem says nothing about them.
    pub informational: bool,
    pub notes: Vec<String>,
    pub trials: Vec<TrialRecord>,
    /// The common verdict, if all trials agree.
    pub consensus: Option<FermatStatus>,
}

/// For `trials` seeds `seed, seed + 1, ...`, reduce `X` by general forms and
/// decide whether the Macaulay polynomial is Fermat. With `k = n + 1 > 2`
/// and `s + k > 2` the expected consensus is Fermat exactly when `X` is a
/// crepant divisor on a variety of minimal degree.
pub fn run_maintheorem_check(x: &VarietyPresentation, seed: u64, trials: usize) -> Result<MainTheoremSummary> {
    let k = x.dim + 1;
    let s = x.s.ok_or_else(|| Error::Precondition("the Main Theorem check needs s".into()))?;
    let hypotheses = vec![
        HypothesisCheck { name: "k = n + 1 > 2".into(), holds: k > 2 },
        HypothesisCheck { name: "s + k > 2".into(), holds: s + k as i64 > 2 },
    ];
    let informational = hypotheses.iter().any(|h| !h.holds);
    let mut notes = x.flags.clone();
    if s + k as i64 == 2 {
        notes.push("boundary: s+k=2".into());
    }
    let records: Vec<Result<TrialRecord>> = (0..trials)
        .into_par_iter()
        .map(|i| {
            let trial_seed = seed.wrapping_add(i as u64);
            let report = artinian_reduction(x, trial_seed)?;
            let verdict = is_fermat_equivalent(
                &report.macaulay_polynomial,
                FermatOptions { seed: trial_seed, ..FermatOptions::default() },
            )?;
            Ok(TrialRecord {
                trial: i,
                seed: trial_seed,
                h_vector: report.h_vector,
                socle_degree: report.socle_degree,
                macaulay_polynomial: report.macaulay_polynomial.to_string(),
                verdict: verdict.status,
                certificate: verdict.certificate,
            })
        })
        .collect();
    let trials = records.into_iter().collect::<Result<Vec<_>>>()?;
    let consensus = match trials.first() {
        Some(first) if trials.iter().all(|t| t.verdict == first.verdict) => Some(first.verdict),
        _ => None,
    };
    Ok(MainTheoremSummary {
        version: VERSION.to_string(),
        label: x.label.clone(),
        seed,
        truncation_bound: x.ideal.truncation_bound(),
        k,
        s: Some(s),
        hypotheses,
        informational,
        notes,
        trials,
        consensus,
    })
}

#[derive(Debug, Parser)]
#[command(name = "apolar", version, about = "Macaulay polynomials of Artinian reductions")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Hilbert function of an ideal given one generator per line.
    Hilbert {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value_t = 6)]
        bound: u32,
        /// Number of variables; inferred from the generators if omitted.
        #[arg(long)]
        nvars: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Artinian reduction and Macaulay polynomial of a variety.
    Macaulay {
        #[arg(long)]
        variety: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
    /// Fermat-equivalence of a form read from a file.
    Fermat {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 32)]
        attempts: u32,
        #[arg(long)]
        json: bool,
    },
    /// Build an example variety and print its JSON presentation.
    Construct {
        #[command(subcommand)]
        kind: Construct,
    },
    /// Divisor-class arithmetic on rational normal scrolls.
    Scroll {
        #[command(subcommand)]
        op: ScrollOp,
    },
    /// Run the Fermat criterion on several general reductions of a variety.
    Maintheorem {
        #[arg(long)]
        variety: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 5)]
        trials: usize,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Args)]
pub struct BoundArg {
    #[arg(long)]
    pub bound: Option<u32>,
}

#[derive(Debug, Subcommand)]
pub enum Construct {
    /// v_n(P^M).
    Veronese {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: u32,
        #[command(flatten)]
        bound: BoundArg,
    },
    /// v_n(V(f)) for a form f of degree s n + M + 1.
    VeroneseHypersurface {
        #[arg(long)]
        form: String,
        #[arg(long)]
        n: u32,
        #[arg(long, allow_hyphen_values = true)]
        s: i64,
        #[command(flatten)]
        bound: BoundArg,
    },
    /// Complete intersection of random forms.
    Ci {
        #[arg(long, value_delimiter = ',')]
        degrees: Vec<u32>,
        #[arg(long)]
        ambient: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        bound: BoundArg,
    },
    /// Rational normal scroll S_{a_1..a_k}.
    Scroll {
        #[arg(long = "type", value_delimiter = ',')]
        exponents: Vec<u32>,
        #[command(flatten)]
        bound: BoundArg,
    },
    /// Image of a random divisor of class aH + bF on a scroll.
    ScrollDivisor {
        #[arg(long = "type", value_delimiter = ',')]
        exponents: Vec<u32>,
        /// `a,b` for the class aH + bF.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        class: Vec<i64>,
        #[arg(long, allow_hyphen_values = true)]
        s: Option<i64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        bound: BoundArg,
    },
}

#[derive(Debug, Subcommand)]
pub enum ScrollOp {
    /// Invariants, canonical and crepant classes of a scroll type.
    Calc {
        #[arg(long = "type", value_delimiter = ',')]
        exponents: Vec<i64>,
        #[arg(long, allow_hyphen_values = true)]
        s: i64,
        #[arg(long)]
        json: bool,
    },
    /// Integral total transform of d J(F) on a scroll with f = sum a_i.
    Transform {
        #[arg(long, allow_hyphen_values = true)]
        d: i64,
        #[arg(long)]
        f: i64,
        #[arg(long)]
        json: bool,
    },
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("serializable")
}

/// Default bound for a construction of predicted socle degree `e`.
fn default_bound(e: i64) -> u32 {
    (e + 2).max(2) as u32
}

fn construct(kind: &Construct) -> Result<VarietyPresentation> {
    match kind {
        Construct::Veronese { m, n, bound } => geomzoo::veronese_ideal(*m, *n, bound.bound.unwrap_or(3)),
        Construct::VeroneseHypersurface { form, n, s, bound } => {
            let f = parse_polynomial(form)?;
            let dim = f.nvars() as i64 - 2;
            geomzoo::veronese_hypersurface_image(&f, *n, *s, bound.bound.unwrap_or(default_bound(s + dim + 1)))
        }
        Construct::Ci { degrees, ambient, seed, bound } => {
            let s = -(*ambient as i64) - 1 + degrees.iter().map(|&d| d as i64).sum::<i64>();
            let dim = *ambient as i64 - degrees.len() as i64;
            let b = bound.bound.unwrap_or(default_bound(s + dim + 1));
            geomzoo::complete_intersection(degrees, *ambient, *seed, b)
        }
        Construct::Scroll { exponents, bound } => {
            geomzoo::scroll_ideal(&ScrollType::new(exponents.clone())?, bound.bound.unwrap_or(3))
        }
        Construct::ScrollDivisor { exponents, class, s, seed, bound } => {
            let [a, b] = class[..] else {
                return Err(Error::Parse { pos: 0, msg: "--class expects a,b".into() });
            };
            let t = ScrollType::new(exponents.clone())?;
            let class = ScrollClass::new(a, b);
            let level = s.or_else(|| {
                scrollcalc::infer_subcanonical_level(class, t.k() as i64, t.n_ambient() as i64)
            });
            let b = bound
                .bound
                .unwrap_or_else(|| default_bound(level.unwrap_or(0) + t.k() as i64));
            geomzoo::scroll_divisor_image(&t, class, None, *seed, b, *s)
        }
    }
}

fn scroll_calc_text(r: &scrollcalc::ScrollReport) -> String {
    let mut out = String::new();
    let i = &r.invariants;
    out.push_str(&format!("type {:?}: k = {}, f = {}, N = {}\n", r.exponents, i.k, i.f, i.n_ambient));
    if let Some(v) = i.vertex_dim {
        out.push_str(&format!(
            "vertex P^{v}: codimension {} in P^N, {} in the scroll\n",
            i.vertex_codim_ambient.unwrap_or_default(),
            i.vertex_codim_scroll.unwrap_or_default()
        ));
    }
    out.push_str(&format!("K = {}\n", r.canonical_class));
    match &r.crepant {
        Ok(c) => {
            match c.class {
                scrollcalc::CrepantClass::Divisor { class } => {
                    out.push_str(&format!("crepant class (s = {}): {class}\n", r.s))
                }
                scrollcalc::CrepantClass::Hypersurface { degree } => {
                    out.push_str(&format!("crepant: hypersurface of degree {degree} in P^k\n"))
                }
            }
            out.push_str(&format!("2 - f = {}\n", c.two_minus_f));
        }
        Err(e) => out.push_str(&format!("crepant class: {e}\n")),
    }
    if let Some(d) = r.predicted_degree {
        out.push_str(&format!("degree = {d}\n"));
    }
    for h in &r.hypotheses {
        out.push_str(&format!("{h}\n"));
    }
    out
}

fn summary_text(s: &MainTheoremSummary) -> String {
    let level = s.s.map_or("?".to_string(), |v| v.to_string());
    let mut out = format!("{} (k = {}, s = {level}, bound {})\n", s.label, s.k, s.truncation_bound);
    for h in &s.hypotheses {
        out.push_str(&format!("  {}: {}\n", h.name, h.holds));
    }
    for n in &s.notes {
        out.push_str(&format!("  note: {n}\n"));
    }
    for t in &s.trials {
        out.push_str(&format!(
            "  trial {} (seed {}): h = {:?}, F = {}, {}\n",
            t.trial, t.seed, t.h_vector, t.macaulay_polynomial, t.verdict
        ));
    }
    match s.consensus {
        Some(c) => out.push_str(&format!("consensus: {c}\n")),
        None => out.push_str("consensus: mixed\n"),
    }
    if s.informational {
        out.push_str("informational run: hypotheses not met\n");
    }
    out
}

impl Cli {
    /// The settings echoed into JSON output.
    pub fn config(&self) -> PipelineConfig {
        let json_flag = |j: bool| if j { OutputFormat::Json } else { OutputFormat::Text };
        let (command, inputs, seed, attempts, bound, format) = match &self.command {
            Command::Hilbert { input, bound, json, .. } => {
                ("hilbert", vec![input.clone()], 0, 0, Some(*bound), json_flag(*json))
            }
            Command::Macaulay { variety, seed, json } => {
                ("macaulay", vec![variety.clone()], *seed, DEFAULT_RETRIES, None, json_flag(*json))
            }
            Command::Fermat { input, seed, attempts, json } => {
                ("fermat", vec![input.clone()], *seed, *attempts, None, json_flag(*json))
            }
            Command::Construct { kind } => {
                let (seed, bound) = match kind {
                    Construct::Veronese { bound, .. }
                    | Construct::VeroneseHypersurface { bound, .. }
                    | Construct::Scroll { bound, .. } => (0, bound.bound),
                    Construct::Ci { seed, bound, .. } | Construct::ScrollDivisor { seed, bound, .. } => {
                        (*seed, bound.bound)
                    }
                };
                ("construct", Vec::new(), seed, 0, bound, OutputFormat::Json)
            }
            Command::Scroll { op: ScrollOp::Calc { json, .. } } => {
                ("scroll calc", Vec::new(), 0, 0, None, json_flag(*json))
            }
            Command::Scroll { op: ScrollOp::Transform { json, .. } } => {
                ("scroll transform", Vec::new(), 0, 0, None, json_flag(*json))
            }
            Command::Maintheorem { variety, seed, json, .. } => {
                ("maintheorem", vec![variety.clone()], *seed, DEFAULT_RETRIES, None, json_flag(*json))
            }
        };
        PipelineConfig { command: command.into(), inputs, seed, attempts, truncation_bound: bound, format }
    }
}

fn with_version(mut v: Value, extra: &[(&str, Value)]) -> Value {
    if let Value::Object(map) = &mut v {
        map.insert("version".into(), json!(VERSION));
        for (k, x) in extra {
            map.insert((*k).into(), x.clone());
        }
    }
    v
}

/// Execute a parsed command, returning the text to print and the exit code.
pub fn execute(cli: &Cli) -> Result<(String, i32)> {
    let config = serde_json::to_value(cli.config()).expect("serializable");
    let with_version = |v: Value, extra: &[(&str, Value)]| {
        let mut v = with_version(v, extra);
        if let Value::Object(map) = &mut v {
            map.insert("config".into(), config.clone());
        }
        v
    };
    match &cli.command {
        Command::Hilbert { input, bound, nvars, json } => {
            let ideal = parse_ideal_text(&read(input)?, *nvars, *bound)?;
            let rec = ideal.hilbert_record();
            let text = if *json {
                pretty(&with_version(serde_json::to_value(&rec).expect("serializable"), &[]))
            } else {
                rec.degrees
                    .iter()
                    .zip(&rec.values)
                    .map(|(d, v)| format!("{d}\t{v}"))
                    .collect::<Vec<_>>()
                    .join("\n")
            };
            Ok((text, EXIT_OK))
        }
        Command::Macaulay { variety, seed, json } => {
            let x = VarietyPresentation::from_json(&read(variety)?)?;
            let r = artinian_reduction(&x, *seed)?;
            let text = if *json {
                pretty(&with_version(r.to_json(), &[("label", json!(x.label))]))
            } else {
                format!(
                    "{}\nh-vector {:?}, socle degree {} (s + n + 1 = {})\nF = {}",
                    x.label,
                    r.h_vector,
                    r.socle_degree,
                    r.predicted_socle_degree.map_or("?".into(), |p| p.to_string()),
                    r.macaulay_polynomial
                )
            };
            Ok((text, EXIT_OK))
        }
        Command::Fermat { input, seed, attempts, json } => {
            let f = parse_polynomial(read(input)?.trim())?;
            let v = is_fermat_equivalent(&f, FermatOptions { seed: *seed, attempts: *attempts })?;
            let code = if v.status == FermatStatus::Inconclusive { EXIT_GENERICITY } else { EXIT_OK };
            let text = if *json {
                pretty(&with_version(v.to_json(), &[("seed", json!(seed)), ("attempts", json!(attempts))]))
            } else {
                format!("{}: {}", v.status, v.certificate)
            };
            Ok((text, code))
        }
        Command::Construct { kind } => {
            let x = construct(kind)?;
            Ok((pretty(&with_version(x.to_json(), &[])), EXIT_OK))
        }
        Command::Scroll { op: ScrollOp::Calc { exponents, s, json } } => {
            let r = scrollcalc::scroll_report(exponents, *s)?;
            let code = if r.main_theorem_applicable { EXIT_OK } else { EXIT_HYPOTHESIS };
            let text = if *json {
                pretty(&with_version(serde_json::to_value(&r).expect("serializable"), &[]))
            } else {
                scroll_calc_text(&r)
            };
            Ok((text, code))
        }
        Command::Scroll { op: ScrollOp::Transform { d, f, json } } => {
            let t = scrollcalc::integral_total_transform(*d, *f)?;
            let text = if *json {
                pretty(&with_version(serde_json::to_value(t).expect("serializable"), &[]))
            } else {
                let mut s = format!("d - 1 = {} * {f} + {}\nX* ~ {}\n", t.m, t.h, t.class);
                if let Some(alt) = t.alternative {
                    s.push_str(&format!("   ~ {alt}\n"));
                }
                s.push_str(&format!("Y + {} E ~ {}", t.n_q, t.via_exceptional));
                s
            };
            Ok((text, EXIT_OK))
        }
        Command::Maintheorem { variety, seed, trials, json } => {
            let x = VarietyPresentation::from_json(&read(variety)?)?;
            let summary = run_maintheorem_check(&x, *seed, *trials)?;
            let code = if summary.informational { EXIT_HYPOTHESIS } else { EXIT_OK };
            let text = if *json {
                pretty(&with_version(serde_json::to_value(&summary).expect("serializable"), &[]))
            } else {
                summary_text(&summary)
            };
            Ok((text, code))
        }
    }
}

/// Parse `args` (including the program name), run, and write the output.
/// Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut impl Write, err: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{e}");
                    EXIT_PARSE
                }
            };
        }
    };
    match execute(&cli) {
        Ok((text, code)) => {
            let _ = writeln!(out, "{text}");
            code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("apolar").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn scroll_calc_codes() {
        let (code, out, _) = run_str(&["scroll", "calc", "--type", "1,1,1", "--s", "0"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("3H-1F"), "{out}");
        let (code, _, _) = run_str(&["scroll", "calc", "--type", "1,2", "--s", "1"]);
        assert_eq!(code, EXIT_HYPOTHESIS);
    }

    #[test]
    fn parse_errors_exit_four() {
        let dir = tempfile::tempdir().unwrap();
        let p = dir.path().join("f.txt");
        std::fs::write(&p, "x0^2 + x1").unwrap();
        let (code, _, err) = run_str(&["fermat", "--input", p.to_str().unwrap()]);
        assert_eq!(code, EXIT_PARSE, "{err}");
        let (code, _, _) = run_str(&["no-such-command"]);
        assert_eq!(code, EXIT_PARSE);
    }

    #[test]
    fn construct_then_macaulay() {
        let dir = tempfile::tempdir().unwrap();
        let (code, out, _) = run_str(&["construct", "ci", "--degrees", "2,3", "--ambient", "4", "--seed", "1"]);
        assert_eq!(code, EXIT_OK);
        let p = dir.path().join("x.json");
        std::fs::write(&p, &out).unwrap();
        let (code, out, err) = run_str(&["macaulay", "--variety", p.to_str().unwrap(), "--json"]);
        assert_eq!(code, EXIT_OK, "{err}");
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["h_vector"], json!([1, 2, 2, 1]));
        assert_eq!(v["version"], json!(VERSION));
    }

    #[test]
    fn boundary_case_is_informational() {
        let x = geomzoo::complete_intersection(&[2, 2], 4, 0, 4).unwrap();
        let s = run_maintheorem_check(&x, 0, 2).unwrap();
        assert!(s.informational);
        assert!(s.notes.iter().any(|n| n == "boundary: s+k=2"));
        assert_eq!(s.trials.len(), 2);
        assert_eq!(s.trials[1].seed, 1);
    }
}
