//! Command-line front end: single evaluations, coefficient dumps, positivity
//! scans, Gram positive definiteness tests, dyadic limit studies, an
//! exploratory exponent frontier, and the Polya certificate.
//!
//! Exit codes: 0 success / all-pass, 1 usage error, 2 a theorem-backed check
//! produced a NEGATIVE (or a PD test failed), 3 precision exhausted. Angles
//! are radians only. Numeric ranges use `lo..hi[:step]`, inclusive on both
//! ends. A plain `key = value` config file can supply any long flag; explicit
//! flags win, and `PDSPHERE_THREADS` overrides the config's thread count.
//! Every output starts with `# key = value` lines echoing the fully resolved
//! configuration, so a run can be reproduced from its own output.

use crate::error::{Error, Result};
use crate::integrals::{self, IntegralQuery};
use crate::kernels::{self, KernelSpec, SpaceKind, SpaceSpec};
use crate::report;
use crate::verify::{self, DeltaRule, ScanGrid};
use clap::{Parser, Subcommand};
use serde_json::json;
use std::collections::{BTreeMap, HashMap};
use std::f64::consts::PI;
use std::fmt::Display;
use std::io::Write as _;
use std::path::PathBuf;
use std::str::FromStr;

#[derive(Parser, Debug)]
#[command(
    name = "pdsphere",
    version,
    about = "Truncated-power kernel positivity toolkit",
    disable_help_subcommand = true
)]
struct Cli {
    /// Plain `key = value` file supplying defaults for any long flag.
    #[arg(long, global = true, value_name = "FILE")]
    config: Option<PathBuf>,
    /// Write output here instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    output: Option<PathBuf>,
    /// Output format: csv or json.
    #[arg(long, global = true)]
    format: Option<String>,
    /// Worker threads (0 = all cores); PDSPHERE_THREADS also recognized.
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Seed for sampling commands.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Quadrature tolerance.
    #[arg(long, global = true, allow_negative_numbers = true)]
    tol: Option<f64>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Evaluate one integral family member.
    Eval {
        #[arg(long, allow_negative_numbers = true)]
        alpha: Option<f64>,
        #[arg(long, allow_negative_numbers = true)]
        beta: Option<f64>,
        #[arg(long, allow_negative_numbers = true)]
        delta: Option<f64>,
        #[arg(long)]
        n: Option<usize>,
        /// Dyadic level; 0 is the plain family.
        #[arg(long)]
        m: Option<u32>,
        #[arg(long, allow_negative_numbers = true)]
        t: Option<f64>,
    },
    /// Expansion coefficients of a truncated-power kernel on a space.
    Coeffs {
        /// sphere | real-projective | complex-projective |
        /// quaternionic-projective | cayley
        #[arg(long)]
        space: Option<String>,
        #[arg(long)]
        dim: Option<u32>,
        #[arg(long, allow_negative_numbers = true)]
        t: Option<f64>,
        #[arg(long, allow_negative_numbers = true)]
        delta: Option<f64>,
        #[arg(long)]
        nmax: Option<usize>,
    },
    /// Positivity scan over a parameter grid.
    Scan {
        /// Range `lo..hi[:step]` of first parameters.
        #[arg(long, allow_hyphen_values = true)]
        alpha: Option<String>,
        /// Range `lo..hi[:step]` of second parameters.
        #[arg(long, allow_hyphen_values = true)]
        beta: Option<String>,
        /// alpha+1 | ceil(alpha)+1 | explicit
        #[arg(long)]
        delta_rule: Option<String>,
        /// Exponent list; implies --delta-rule explicit.
        #[arg(long, allow_hyphen_values = true)]
        delta: Option<String>,
        #[arg(long)]
        nmax: Option<usize>,
        /// Angle grid k pi / tsteps for k = 1..=tsteps.
        #[arg(long)]
        tsteps: Option<usize>,
    },
    /// Strict positive definiteness test on a sampled Gram matrix.
    Pdtest {
        #[arg(long)]
        space: Option<String>,
        #[arg(long)]
        dim: Option<u32>,
        #[arg(long, allow_negative_numbers = true)]
        delta: Option<f64>,
        #[arg(long, allow_negative_numbers = true)]
        t: Option<f64>,
        #[arg(long)]
        points: Option<usize>,
    },
    /// Dyadic sequence against its Bessel-integral limit.
    Limits {
        #[arg(long, allow_negative_numbers = true)]
        alpha: Option<f64>,
        #[arg(long, allow_negative_numbers = true)]
        delta: Option<f64>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, allow_negative_numbers = true)]
        t: Option<f64>,
        /// Level range `lo..hi`.
        #[arg(long)]
        m: Option<String>,
    },
    /// EXPLORATORY scan of exponents around the proven thresholds.
    Frontier {
        #[arg(long, allow_negative_numbers = true)]
        alpha: Option<f64>,
        #[arg(long, allow_negative_numbers = true)]
        beta: Option<f64>,
        /// Range `lo..hi[:step]` of exponents.
        #[arg(long, allow_hyphen_values = true)]
        delta: Option<String>,
        #[arg(long)]
        nmax: Option<usize>,
        #[arg(long)]
        tsteps: Option<usize>,
    },
    /// Polya certificate for g(theta) = (pi - theta)^power on a sphere.
    Polya {
        #[arg(long, allow_negative_numbers = true)]
        power: Option<f64>,
        /// Sphere dimension parameter d (certificate needs d >= 3).
        #[arg(long)]
        dim: Option<u32>,
    },
}

impl Cmd {
    fn name(&self) -> &'static str {
        match self {
            Cmd::Eval { .. } => "eval",
            Cmd::Coeffs { .. } => "coeffs",
            Cmd::Scan { .. } => "scan",
            Cmd::Pdtest { .. } => "pdtest",
            Cmd::Limits { .. } => "limits",
            Cmd::Frontier { .. } => "frontier",
            Cmd::Polya { .. } => "polya",
        }
    }
}

const KNOWN_CONFIG_KEYS: &[&str] = &[
    "command", "alpha", "beta", "delta", "delta-rule", "n", "m", "t", "nmax", "tsteps", "space",
    "dim", "points", "power", "output", "format", "threads", "seed", "tol",
];

fn load_config_file(path: &PathBuf) -> Result<HashMap<String, String>> {
    let text = std::fs::read_to_string(path)?;
    let mut map = HashMap::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (k, v) = line.split_once('=').ok_or_else(|| {
            Error::Parse(format!("config line {} is not `key = value`", lineno + 1))
        })?;
        let k = k.trim().to_string();
        if !KNOWN_CONFIG_KEYS.contains(&k.as_str()) {
            return Err(Error::Parse(format!("unknown config key {k:?}")));
        }
        map.insert(k, v.trim().to_string());
    }
    Ok(map)
}

/// Resolves each parameter as flag > config file > default, recording the
/// chosen value for the output header.
struct Resolver {
    file: HashMap<String, String>,
    echo: BTreeMap<String, String>,
}

impl Resolver {
    fn get<T>(&mut self, key: &str, flag: Option<T>, default: Option<T>) -> Result<T>
    where
        T: FromStr + Display,
    {
        let value = if let Some(v) = flag {
            v
        } else if let Some(s) = self.file.get(key) {
            s.parse::<T>()
                .map_err(|_| Error::Parse(format!("config value {key} = {s:?} is invalid")))?
        } else if let Some(d) = default {
            d
        } else {
            return Err(Error::Parse(format!("missing required --{key}")));
        };
        self.echo.insert(key.to_string(), value.to_string());
        Ok(value)
    }

    fn note(&mut self, key: &str, value: impl Display) {
        self.echo.insert(key.to_string(), value.to_string());
    }

    fn header(&self) -> Vec<(String, String)> {
        self.echo
            .iter()
            .map(|(k, v)| (k.clone(), v.clone()))
            .collect()
    }
}

/// Inclusive numeric range `lo..hi[:step]`; a bare number is a single value.
fn parse_range(s: &str) -> Result<Vec<f64>> {
    let s = s.trim();
    let bad = |s: &str| Error::Parse(format!("bad range {s:?}; expected lo..hi[:step]"));
    match s.split_once("..") {
        None => Ok(vec![s.parse::<f64>().map_err(|_| bad(s))?]),
        Some((lo, rest)) => {
            let lo: f64 = lo.trim().parse().map_err(|_| bad(s))?;
            let (hi, step) = match rest.split_once(':') {
                None => (rest.trim().parse::<f64>().map_err(|_| bad(s))?, 1.0),
                Some((hi, st)) => (
                    hi.trim().parse::<f64>().map_err(|_| bad(s))?,
                    st.trim().parse::<f64>().map_err(|_| bad(s))?,
                ),
            };
            if !(step > 0.0) || hi < lo {
                return Err(bad(s));
            }
            let count = ((hi - lo) / step + 1e-9).floor() as usize;
            Ok((0..=count).map(|k| lo + k as f64 * step).collect())
        }
    }
}

fn parse_index_range(s: &str) -> Result<Vec<u32>> {
    parse_range(s)?
        .into_iter()
        .map(|v| {
            if v >= 0.0 && v.fract() == 0.0 && v <= u32::MAX as f64 {
                Ok(v as u32)
            } else {
                Err(Error::Parse(format!("{v} is not a valid level index")))
            }
        })
        .collect()
}

fn parse_space(name: &str, dim: Option<u32>) -> Result<SpaceSpec> {
    let need_dim = || dim.ok_or_else(|| Error::Parse(format!("--space {name} requires --dim")));
    let kind = match name {
        "sphere" => SpaceKind::Sphere(need_dim()?),
        "real-projective" => SpaceKind::RealProjective(need_dim()?),
        "complex-projective" => SpaceKind::ComplexProjective(need_dim()?),
        "quaternionic-projective" => SpaceKind::QuaternionicProjective(need_dim()?),
        "cayley" => SpaceKind::CayleyPlane,
        other => {
            return Err(Error::Parse(format!(
                "unknown space {other:?}; expected sphere, real-projective, \
                 complex-projective, quaternionic-projective, or cayley"
            )))
        }
    };
    SpaceSpec::new(kind)
}

fn t_grid_for(tsteps: usize) -> Result<Vec<f64>> {
    if tsteps == 0 || tsteps > 100_000 {
        return Err(Error::Parse(format!("tsteps must lie in 1..=100000, got {tsteps}")));
    }
    Ok((1..=tsteps).map(|k| k as f64 * PI / tsteps as f64).collect())
}

enum Rendered {
    Csv(String),
    Json(serde_json::Value),
}

struct Outcome {
    rendered: Rendered,
    exit: i32,
}

fn run_command(cli: &Cli, r: &mut Resolver, format: &str, tol: f64, seed: u64) -> Result<Outcome> {
    match &cli.cmd {
        Cmd::Eval { alpha, beta, delta, n, m, t } => {
            let alpha = r.get("alpha", *alpha, None)?;
            let beta = r.get("beta", *beta, None)?;
            let delta = r.get("delta", *delta, None)?;
            let n = r.get("n", *n, None)?;
            let m = r.get("m", *m, Some(0))?;
            let t = r.get("t", *t, None)?;
            let query = IntegralQuery::new(alpha, beta, delta, n, m, t)?;
            let (res, exit) = match integrals::f_integral_tol(query, tol) {
                Ok(res) => (res, 0),
                Err(Error::PrecisionExhausted { best }) => {
                    r.note("precision-exhausted", "true");
                    (best, 3)
                }
                Err(e) => return Err(e),
            };
            let rendered = if format == "json" {
                Rendered::Json(json!({
                    "config": config_value(r),
                    "err_bound": res.err_bound,
                    "nodes_used": res.nodes_used,
                    "value": res.value,
                }))
            } else {
                let mut out = header_text(r);
                out.push_str("value,err_bound,nodes_used\n");
                out.push_str(&format!("{:e},{:e},{}\n", res.value, res.err_bound, res.nodes_used));
                Rendered::Csv(out)
            };
            Ok(Outcome { rendered, exit })
        }
        Cmd::Coeffs { space, dim, t, delta, nmax } => {
            let space_name: String = r.get("space", space.clone(), None)?;
            let dim_val = match dim {
                Some(d) => Some(*d),
                None => match r.file.get("dim") {
                    Some(s) => Some(s.parse::<u32>().map_err(|_| {
                        Error::Parse(format!("config value dim = {s:?} is invalid"))
                    })?),
                    None => None,
                },
            };
            if let Some(d) = dim_val {
                r.note("dim", d);
            }
            let t = r.get("t", *t, None)?;
            let delta = r.get("delta", *delta, None)?;
            let nmax = r.get("nmax", *nmax, Some(50))?;
            let spec = KernelSpec::new(t, delta, parse_space(&space_name, dim_val)?)?;
            let cv = kernels::schoenberg_coeffs(&spec, nmax)?;
            let rendered = if format == "json" {
                Rendered::Json(report::coeffs_json(&cv, &r.header()))
            } else {
                let mut buf = Vec::new();
                report::write_coeffs_csv(&mut buf, &cv, &r.header())?;
                Rendered::Csv(String::from_utf8(buf).expect("csv is utf-8"))
            };
            Ok(Outcome { rendered, exit: 0 })
        }
        Cmd::Scan { alpha, beta, delta_rule, delta, nmax, tsteps } => {
            let alpha_s: String = r.get("alpha", alpha.clone(), None)?;
            let beta_s: String = r.get("beta", beta.clone(), None)?;
            // A bare exponent list implies the explicit rule; naming a
            // formula rule next to a list would make the run lie about one
            // of them, so that combination is rejected.
            let rule_given = delta_rule.is_some() || r.file.contains_key("delta-rule");
            let delta_given = delta.is_some() || r.file.contains_key("delta");
            let rule_s: String = if !rule_given && delta_given {
                r.get("delta-rule", Some("explicit".into()), None)?
            } else {
                r.get("delta-rule", delta_rule.clone(), Some("alpha+1".into()))?
            };
            if delta_given && rule_s != "explicit" {
                return Err(Error::Parse(format!(
                    "--delta lists exponents but the delta rule is {rule_s:?}; \
                     drop --delta or use --delta-rule explicit"
                )));
            }
            let nmax = r.get("nmax", *nmax, Some(50))?;
            let tsteps = r.get("tsteps", *tsteps, Some(64))?;
            let rule = match rule_s.as_str() {
                "alpha+1" => DeltaRule::AlphaPlusOne,
                "ceil(alpha)+1" => DeltaRule::CeilAlphaPlusOne,
                "explicit" => {
                    let list: String = r.get("delta", delta.clone(), None)?;
                    let deltas = list
                        .split(',')
                        .map(|p| {
                            p.trim()
                                .parse::<f64>()
                                .map_err(|_| Error::Parse(format!("bad exponent {p:?}")))
                        })
                        .collect::<Result<Vec<_>>>()?;
                    DeltaRule::Explicit(deltas)
                }
                other => {
                    return Err(Error::Parse(format!(
                        "unknown delta rule {other:?}; expected alpha+1, ceil(alpha)+1, or explicit"
                    )))
                }
            };
            let grid = ScanGrid {
                alpha_set: parse_range(&alpha_s)?,
                beta_set: parse_range(&beta_s)?,
                delta_rule: rule,
                n_max: nmax,
                t_grid: t_grid_for(tsteps)?,
                tolerance: tol,
            };
            let rep = verify::scan_positivity(&grid)?;
            let exit = if rep.negative > 0 {
                2
            } else if rep.precision_exhausted > 0 {
                3
            } else {
                0
            };
            let rendered = if format == "json" {
                Rendered::Json(report::scan_summary_json(&rep, &r.header()))
            } else {
                let mut buf = Vec::new();
                report::write_scan_csv(&mut buf, &rep, &r.header())?;
                Rendered::Csv(String::from_utf8(buf).expect("csv is utf-8"))
            };
            Ok(Outcome { rendered, exit })
        }
        Cmd::Pdtest { space, dim, delta, t, points } => {
            let space_name: String = r.get("space", space.clone(), None)?;
            let dim_val = match dim {
                Some(d) => Some(*d),
                None => match r.file.get("dim") {
                    Some(s) => Some(s.parse::<u32>().map_err(|_| {
                        Error::Parse(format!("config value dim = {s:?} is invalid"))
                    })?),
                    None => None,
                },
            };
            if let Some(d) = dim_val {
                r.note("dim", d);
            }
            let delta = r.get("delta", *delta, None)?;
            let t = r.get("t", *t, None)?;
            let points = r.get("points", *points, Some(100))?;
            let spec = KernelSpec::new(t, delta, parse_space(&space_name, dim_val)?)?;
            let rep = verify::strict_pd_test(&spec, points, seed)?;
            let exit = if rep.strictly_pd { 0 } else { 2 };
            let rendered = if format == "json" {
                Rendered::Json(report::pd_report_json(&rep, &r.header()))
            } else {
                let mut out = header_text(r);
                out.push_str(
                    "min_eigenvalue,threshold,strictly_pd,cholesky_succeeded,n_points,resamples\n",
                );
                out.push_str(&format!(
                    "{:e},{:e},{},{},{},{}\n",
                    rep.min_eigenvalue,
                    rep.threshold,
                    rep.strictly_pd,
                    rep.cholesky_succeeded,
                    rep.n_points,
                    rep.resamples
                ));
                Rendered::Csv(out)
            };
            Ok(Outcome { rendered, exit })
        }
        Cmd::Limits { alpha, delta, n, t, m } => {
            let alpha = r.get("alpha", *alpha, None)?;
            let delta = r.get("delta", *delta, None)?;
            let n = r.get("n", *n, None)?;
            let t = r.get("t", *t, None)?;
            let m_s: String = r.get("m", m.clone(), Some("4..10".into()))?;
            let levels = parse_index_range(&m_s)?;
            if levels.is_empty() {
                return Err(Error::Parse("empty level range".into()));
            }
            let lo = *levels.first().unwrap();
            let hi = *levels.last().unwrap();
            let target = integrals::bessel_limit_target(alpha, delta, n, t)?.value;
            let seq = integrals::bessel_limit_sequence(alpha, delta, n, t, lo..=hi)?;
            r.note("target", format!("{target:e}"));
            let rendered = if format == "json" {
                let rows: Vec<serde_json::Value> = seq
                    .iter()
                    .map(|(m, v)| {
                        json!({"gap": (v - target).abs(), "m": m, "scaled_value": v})
                    })
                    .collect();
                Rendered::Json(json!({
                    "config": config_value(r),
                    "rows": rows,
                    "target": target,
                }))
            } else {
                let mut out = header_text(r);
                out.push_str("m,scaled_value,target,gap\n");
                for (m, v) in &seq {
                    out.push_str(&format!(
                        "{m},{:e},{target:e},{:e}\n",
                        v,
                        (v - target).abs()
                    ));
                }
                Rendered::Csv(out)
            };
            Ok(Outcome { rendered, exit: 0 })
        }
        Cmd::Frontier { alpha, beta, delta, nmax, tsteps } => {
            let alpha = r.get("alpha", *alpha, None)?;
            let beta = r.get("beta", *beta, None)?;
            let delta_s: String = r.get("delta", delta.clone(), None)?;
            let nmax = r.get("nmax", *nmax, Some(50))?;
            let tsteps = r.get("tsteps", *tsteps, Some(64))?;
            let deltas = parse_range(&delta_s)?;
            r.note("label", "EXPLORATORY");
            let rep =
                verify::conjecture_frontier(alpha, beta, &deltas, nmax, &t_grid_for(tsteps)?)?;
            let rendered = if format == "json" {
                let rows: Vec<serde_json::Value> = rep
                    .rows
                    .iter()
                    .map(|row| {
                        json!({
                            "delta": row.delta,
                            "min_margin": row.min_margin,
                            "min_value": row.min_value,
                            "negatives": row.negatives,
                            "precision_exhausted": row.precision_exhausted,
                            "zero_consistent": row.zero_consistent,
                        })
                    })
                    .collect();
                Rendered::Json(json!({
                    "config": config_value(r),
                    "label": "EXPLORATORY",
                    "rows": rows,
                    "smallest_clean_delta": rep.smallest_clean_delta,
                }))
            } else {
                let mut out = header_text(r);
                out.push_str("delta,negatives,zero_consistent,precision_exhausted,min_value,min_margin\n");
                for row in &rep.rows {
                    out.push_str(&format!(
                        "{:e},{},{},{},{:e},{:e}\n",
                        row.delta,
                        row.negatives,
                        row.zero_consistent,
                        row.precision_exhausted,
                        row.min_value,
                        row.min_margin
                    ));
                }
                Rendered::Csv(out)
            };
            Ok(Outcome { rendered, exit: 0 })
        }
        Cmd::Polya { power, dim } => {
            let power = r.get("power", *power, None)?;
            let dim = r.get("dim", *dim, None)?;
            if !(power > 0.0) {
                return Err(Error::Parse(format!("power must be > 0, got {power}")));
            }
            let g = move |theta: f64| (PI - theta).powf(power);
            let verdict = verify::polya_check(verify::PolyaInput::Function(&g), dim)?;
            let rendered = if format == "json" {
                Rendered::Json(json!({
                    "config": config_value(r),
                    "verdict": verdict.to_string(),
                }))
            } else {
                let mut out = header_text(r);
                out.push_str("verdict\n");
                out.push_str(&format!("{verdict}\n"));
                Rendered::Csv(out)
            };
            Ok(Outcome { rendered, exit: 0 })
        }
    }
}

fn header_text(r: &Resolver) -> String {
    let mut out = String::new();
    for (k, v) in &r.echo {
        out.push_str(&format!("# {k} = {v}\n"));
    }
    out
}

fn config_value(r: &Resolver) -> serde_json::Value {
    let map: serde_json::Map<String, serde_json::Value> = r
        .echo
        .iter()
        .map(|(k, v)| (k.clone(), serde_json::Value::String(v.clone())))
        .collect();
    serde_json::Value::Object(map)
}

fn execute(cli: &Cli) -> Result<i32> {
    let file = match &cli.config {
        Some(path) => load_config_file(path)?,
        None => HashMap::new(),
    };
    if let Some(expected) = file.get("command") {
        if expected != cli.cmd.name() {
            return Err(Error::Parse(format!(
                "config file is for command {expected:?}, not {:?}",
                cli.cmd.name()
            )));
        }
    }
    let mut r = Resolver { file, echo: BTreeMap::new() };
    r.note("command", cli.cmd.name());

    let threads = if let Some(t) = cli.threads {
        t
    } else if let Ok(s) = std::env::var("PDSPHERE_THREADS") {
        s.parse::<usize>()
            .map_err(|_| Error::Parse(format!("PDSPHERE_THREADS = {s:?} is invalid")))?
    } else if let Some(s) = r.file.get("threads") {
        s.parse::<usize>()
            .map_err(|_| Error::Parse(format!("config value threads = {s:?} is invalid")))?
    } else {
        0
    };
    r.note("threads", threads);
    let format: String = r.get("format", cli.format.clone(), Some("csv".into()))?;
    if format != "csv" && format != "json" {
        return Err(Error::Parse(format!("format must be csv or json, got {format:?}")));
    }
    let tol = r.get("tol", cli.tol, Some(integrals::DEFAULT_TOL))?;
    if !(tol > 0.0) {
        return Err(Error::Parse(format!("tol must be > 0, got {tol}")));
    }
    let seed = r.get("seed", cli.seed, Some(0))?;
    // the destination does not influence the content, so it is not echoed;
    // headers stay identical wherever the file lands
    let output = match &cli.output {
        Some(p) => Some(p.clone()),
        None => r.file.get("output").map(PathBuf::from),
    };

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| Error::Domain(format!("thread pool: {e}")))?;
    let outcome = pool.install(|| run_command(cli, &mut r, &format, tol, seed))?;

    let text = match outcome.rendered {
        Rendered::Csv(s) => s,
        Rendered::Json(v) => {
            let mut s = serde_json::to_string_pretty(&v).expect("json serialization");
            s.push('\n');
            s
        }
    };
    match output {
        Some(path) => std::fs::write(path, text)?,
        None => {
            let stdout = std::io::stdout();
            let mut lock = stdout.lock();
            lock.write_all(text.as_bytes())?;
        }
    }
    Ok(outcome.exit)
}

fn exit_code_for(err: &Error) -> i32 {
    match err {
        Error::PrecisionExhausted { .. } => 3,
        _ => 1,
    }
}

/// Parses `argv` (without the program name), runs the command, and returns
/// the process exit code.
pub fn run(argv: &[String]) -> i32 {
    let mut full = Vec::with_capacity(argv.len() + 1);
    full.push("pdsphere");
    full.extend(argv.iter().map(String::as_str));
    let cli = match Cli::try_parse_from(&full) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    print!("{e}");
                    0
                }
                _ => {
                    eprint!("{e}");
                    1
                }
            };
        }
    };
    match execute(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code_for(&e)
        }
    }
}
