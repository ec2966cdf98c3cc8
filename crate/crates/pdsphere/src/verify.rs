//! Theorem-level verification: positivity scans over parameter grids, Gram
//! spectral tests on sampled point sets, monotonicity and decay measurements,
//! a Polya-type convexity certificate, and an exploratory frontier scan.

use crate::error::{Error, Result};
use crate::integrals::{self, IntegralQuery};
use crate::kernels::{self, KernelSpec};
use nalgebra::DMatrix;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use rayon::prelude::*;
use std::f64::consts::PI;
use std::fmt;

/// Sign classification of a single integral value against its error budget.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    /// Value exceeds both the rounding-noise scale and ten times the error bound.
    Positive,
    /// Value is indistinguishable from zero at the achieved accuracy.
    ZeroConsistent,
    /// Value is below minus ten times the error bound.
    Negative,
    /// The quadrature ladder did not reach the requested tolerance.
    PrecisionExhausted,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Verdict::Positive => "positive",
            Verdict::ZeroConsistent => "zero-consistent",
            Verdict::Negative => "NEGATIVE",
            Verdict::PrecisionExhausted => "precision-exhausted",
        };
        f.write_str(s)
    }
}

impl std::str::FromStr for Verdict {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "positive" => Ok(Verdict::Positive),
            "zero-consistent" => Ok(Verdict::ZeroConsistent),
            "NEGATIVE" => Ok(Verdict::Negative),
            "precision-exhausted" => Ok(Verdict::PrecisionExhausted),
            other => Err(Error::Parse(format!("unknown verdict {other:?}"))),
        }
    }
}

/// How the exponent set is derived from each alpha in a scan.
#[derive(Debug, Clone, PartialEq)]
pub enum DeltaRule {
    Explicit(Vec<f64>),
    AlphaPlusOne,
    CeilAlphaPlusOne,
}

impl DeltaRule {
    pub fn deltas_for(&self, alpha: f64) -> Vec<f64> {
        match self {
            DeltaRule::Explicit(v) => v.clone(),
            DeltaRule::AlphaPlusOne => vec![alpha + 1.0],
            DeltaRule::CeilAlphaPlusOne => vec![alpha.ceil() + 1.0],
        }
    }
}

/// Parameter grid for a positivity scan.
#[derive(Debug, Clone, PartialEq)]
pub struct ScanGrid {
    pub alpha_set: Vec<f64>,
    pub beta_set: Vec<f64>,
    pub delta_rule: DeltaRule,
    pub n_max: usize,
    pub t_grid: Vec<f64>,
    pub tolerance: f64,
}

impl ScanGrid {
    pub fn validate(&self) -> Result<()> {
        if self.alpha_set.is_empty() || self.beta_set.is_empty() || self.t_grid.is_empty() {
            return Err(Error::Domain("scan grid has an empty axis".into()));
        }
        if !(self.tolerance > 0.0) {
            return Err(Error::Domain("scan tolerance must be > 0".into()));
        }
        for w in self.t_grid.windows(2) {
            if !(w[0] < w[1]) {
                return Err(Error::Domain("t grid must be strictly increasing".into()));
            }
        }
        let t_last = *self.t_grid.last().unwrap();
        if !(self.t_grid[0] > 0.0) || !(t_last <= PI + 1e-12) {
            return Err(Error::Domain("t grid must lie in (0, pi]".into()));
        }
        Ok(())
    }
}

/// Evenly spaced angles `k pi / 64` for `k = 1..=64`.
pub fn default_t_grid() -> Vec<f64> {
    (1..=64).map(|k| k as f64 * PI / 64.0).collect()
}

/// One classified scan entry. `err` is the effective error used for the
/// verdict: the quadrature bound, floored by the rounding-noise estimate of
/// the query, so it is never optimistically zero.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScanRow {
    pub alpha: f64,
    pub beta: f64,
    pub delta: f64,
    pub n: usize,
    pub t: f64,
    pub value: f64,
    pub err: f64,
    pub verdict: Verdict,
}

impl ScanRow {
    /// Signed distance from zero in units of the effective error.
    pub fn margin(&self) -> f64 {
        self.value / self.err
    }
}

/// A full scan with verdict counts and the most dangerous row.
#[derive(Debug, Clone, PartialEq)]
pub struct ScanReport {
    pub rows: Vec<ScanRow>,
    pub positive: usize,
    pub zero_consistent: usize,
    pub negative: usize,
    pub precision_exhausted: usize,
    pub min_margin: f64,
    pub worst: Option<ScanRow>,
}

impl ScanReport {
    pub fn from_rows(rows: Vec<ScanRow>) -> Self {
        let mut counts = [0usize; 4];
        let mut min_margin = f64::INFINITY;
        let mut worst = None;
        for row in &rows {
            counts[match row.verdict {
                Verdict::Positive => 0,
                Verdict::ZeroConsistent => 1,
                Verdict::Negative => 2,
                Verdict::PrecisionExhausted => 3,
            }] += 1;
            let m = row.margin();
            if m < min_margin {
                min_margin = m;
                worst = Some(*row);
            }
        }
        ScanReport {
            rows,
            positive: counts[0],
            zero_consistent: counts[1],
            negative: counts[2],
            precision_exhausted: counts[3],
            min_margin,
            worst,
        }
    }

    pub fn all_clean(&self) -> bool {
        self.negative == 0 && self.precision_exhausted == 0
    }
}

/// Effective error of one evaluation: the reported quadrature bound floored
/// by the rounding-noise estimate for the query.
pub fn effective_err(query: &IntegralQuery, err_bound: f64) -> f64 {
    err_bound.max(integrals::rounding_floor(query))
}

fn classify(value: f64, err_eff: f64, scale: f64, converged: bool) -> Verdict {
    if !converged {
        Verdict::PrecisionExhausted
    } else if value < -10.0 * err_eff {
        Verdict::Negative
    } else if value > (1e-12 * scale).max(10.0 * err_eff) {
        Verdict::Positive
    } else {
        Verdict::ZeroConsistent
    }
}

/// Evaluates and classifies the integral family over the whole grid.
/// Work is parallel over `(alpha, beta, delta, t)` tuples with each tuple
/// batched over degrees; row order is deterministic regardless of thread
/// count.
pub fn scan_positivity(grid: &ScanGrid) -> Result<ScanReport> {
    grid.validate()?;
    let mut tuples = Vec::new();
    for &alpha in &grid.alpha_set {
        for &beta in &grid.beta_set {
            for delta in grid.delta_rule.deltas_for(alpha) {
                for &t in &grid.t_grid {
                    tuples.push((alpha, beta, delta, t));
                }
            }
        }
    }
    let chunks = tuples
        .par_iter()
        .map(|&(alpha, beta, delta, t)| -> Result<Vec<ScanRow>> {
            let batch =
                integrals::f_batch(alpha, beta, delta, 0, t, grid.n_max, grid.tolerance)?;
            let scale = t.powf(delta + 2.0 * alpha + 1.0);
            let mut rows = Vec::with_capacity(batch.len());
            for (n, r) in batch.iter().enumerate() {
                let q = IntegralQuery::new(alpha, beta, delta, n, 0, t)?;
                let err = effective_err(&q, r.err_bound);
                let verdict = classify(r.value, err, scale, r.err_bound <= grid.tolerance);
                rows.push(ScanRow {
                    alpha,
                    beta,
                    delta,
                    n,
                    t,
                    value: r.value,
                    err,
                    verdict,
                });
            }
            Ok(rows)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ScanReport::from_rows(chunks.into_iter().flatten().collect()))
}

/// Unit vectors in `R^dim` with independent standard normal coordinates,
/// normalized; fully determined by the seed.
pub fn sample_sphere(dim: usize, n_points: usize, seed: u64) -> Vec<Vec<f64>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(n_points);
    while out.len() < n_points {
        let v: Vec<f64> = (0..dim).map(|_| rng.sample::<f64, _>(StandardNormal)).collect();
        let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        if norm > 1e-6 {
            out.push(v.iter().map(|x| x / norm).collect());
        }
    }
    out
}

/// Synthetic distance matrix (row-major) of points on a closed geodesic
/// circle, valid in every catalogued space: angles uniform on `[0, 2 pi)`,
/// distance `min(|u - v|, 2 pi - |u - v|)`.
pub fn sample_circle_distances(n_points: usize, seed: u64) -> Vec<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let angles: Vec<f64> = (0..n_points).map(|_| rng.random::<f64>() * 2.0 * PI).collect();
    let mut dist = vec![0.0; n_points * n_points];
    for i in 0..n_points {
        for j in i + 1..n_points {
            let gap = (angles[i] - angles[j]).abs();
            let d = gap.min(2.0 * PI - gap);
            dist[i * n_points + j] = d;
            dist[j * n_points + i] = d;
        }
    }
    dist
}

/// Outcome of a strict positive definiteness test on one sampled Gram matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PdReport {
    pub min_eigenvalue: f64,
    pub threshold: f64,
    pub strictly_pd: bool,
    pub cholesky_succeeded: bool,
    pub n_points: usize,
    pub seed: u64,
    pub resamples: u32,
}

/// Samples a point set in the kernel's space, assembles the Gram matrix, and
/// checks its smallest eigenvalue against `1e-10 * N * t^delta`. Spheres use
/// random unit vectors; the remaining spaces use geodesic-circle distances.
/// Coincident points trigger up to three deterministic resamples. The
/// eigenvalue decides the verdict; a Cholesky factorization is run alongside
/// as corroboration.
pub fn strict_pd_test(spec: &KernelSpec, n_points: usize, seed: u64) -> Result<PdReport> {
    if n_points == 0 || n_points > 512 {
        return Err(Error::Domain(format!(
            "point count must lie in 1..=512, got {n_points}"
        )));
    }
    let mut resamples = 0u32;
    loop {
        let attempt_seed = seed.wrapping_add(resamples as u64);
        let gram = match spec.space.ambient_dim() {
            Some(dim) => {
                kernels::gram_matrix(spec, &sample_sphere(dim, n_points, attempt_seed))
            }
            None => {
                let dist = sample_circle_distances(n_points, attempt_seed);
                kernels::gram_from_distances(spec, &dist, n_points)
            }
        };
        match gram {
            Ok(g) => {
                let m = DMatrix::from_row_slice(n_points, n_points, g.data());
                let cholesky_succeeded = m.clone().cholesky().is_some();
                let eig = m.symmetric_eigen();
                let min_eigenvalue = eig.eigenvalues.iter().fold(f64::INFINITY, |a, &b| a.min(b));
                let threshold = 1e-10 * n_points as f64 * spec.t.powf(spec.delta);
                return Ok(PdReport {
                    min_eigenvalue,
                    threshold,
                    strictly_pd: min_eigenvalue > threshold,
                    cholesky_succeeded,
                    n_points,
                    seed,
                    resamples,
                });
            }
            Err(Error::DegenerateInput(_)) if resamples < 3 => {
                resamples += 1;
            }
            Err(e) => return Err(e),
        }
    }
}

/// Results of comparing the integral family across consecutive second
/// parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MonotonicityReport {
    pub rows_checked: usize,
    /// Comparisons where the higher second parameter failed to decrease the value.
    pub violations: usize,
    /// Minimum of (difference / combined error) over all comparisons.
    pub min_margin: f64,
    /// Largest absolute mismatch between the difference and its closed
    /// expression as the alpha-raised family member.
    pub max_identity_residual: f64,
    /// That mismatch in units of the combined error bounds.
    pub max_residual_ratio: f64,
}

/// Checks that raising beta strictly lowers every family member, and that the
/// drop equals the alpha-raised member, for `beta = 0..beta_max` over the
/// degree/angle grid. Requires `alpha > 0` and `delta >= ceil(alpha) + 2`.
pub fn monotonicity_check(
    alpha: f64,
    beta_max: usize,
    delta: f64,
    n_max: usize,
    t_grid: &[f64],
) -> Result<MonotonicityReport> {
    if !(alpha > 0.0) {
        return Err(Error::Domain(format!("needs alpha > 0, got {alpha}")));
    }
    if delta < alpha.ceil() + 2.0 - 1e-12 {
        return Err(Error::Domain(format!(
            "needs delta >= ceil(alpha) + 2 = {}, got {delta}",
            alpha.ceil() + 2.0
        )));
    }
    if t_grid.is_empty() {
        return Err(Error::Domain("empty t grid".into()));
    }
    let tol = integrals::DEFAULT_TOL;
    let per_t = t_grid
        .par_iter()
        .map(|&t| -> Result<(usize, usize, f64, f64, f64)> {
            let mut checked = 0;
            let mut violations = 0;
            let mut min_margin = f64::INFINITY;
            let mut max_resid = 0.0f64;
            let mut max_ratio = 0.0f64;
            let mut lower = integrals::f_batch(alpha, 0.0, delta, 0, t, n_max, tol)?;
            for beta in 0..=beta_max {
                let upper = integrals::f_batch(alpha, beta as f64 + 1.0, delta, 0, t, n_max, tol)?;
                let raised = integrals::f_batch(alpha + 1.0, beta as f64, delta, 0, t, n_max, tol)?;
                for n in 0..=n_max {
                    let diff = lower[n].value - upper[n].value;
                    let q = IntegralQuery::new(alpha, beta as f64, delta, n, 0, t)?;
                    let e = effective_err(&q, lower[n].err_bound)
                        + effective_err(&q, upper[n].err_bound);
                    checked += 1;
                    let margin = diff / e;
                    if margin <= 0.0 {
                        violations += 1;
                    }
                    min_margin = min_margin.min(margin);
                    let resid = (diff - raised[n].value).abs();
                    max_resid = max_resid.max(resid);
                    max_ratio = max_ratio.max(resid / (e + raised[n].err_bound));
                }
                lower = upper;
            }
            Ok((checked, violations, min_margin, max_resid, max_ratio))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut report = MonotonicityReport {
        rows_checked: 0,
        violations: 0,
        min_margin: f64::INFINITY,
        max_identity_residual: 0.0,
        max_residual_ratio: 0.0,
    };
    for (checked, violations, margin, resid, ratio) in per_t {
        report.rows_checked += checked;
        report.violations += violations;
        report.min_margin = report.min_margin.min(margin);
        report.max_identity_residual = report.max_identity_residual.max(resid);
        report.max_residual_ratio = report.max_residual_ratio.max(ratio);
    }
    Ok(report)
}

/// Log-log least-squares fit of the sup-norm decay of the family.
#[derive(Debug, Clone, PartialEq)]
pub struct DecayFit {
    pub slope: f64,
    pub intercept: f64,
    /// Per-degree suprema of the absolute value over the angle grid.
    pub sups: Vec<(usize, f64)>,
}

/// Measures `sup_t |F_n|` over the default angle grid for each degree in
/// `n_lo..=n_hi` and fits `ln sup ~ slope * ln n + intercept`. Degrees up to
/// 400; a vanishing supremum anywhere is rejected as degenerate.
pub fn decay_fit(
    alpha: f64,
    beta: f64,
    delta: f64,
    n_lo: usize,
    n_hi: usize,
) -> Result<DecayFit> {
    if n_lo < 1 || n_lo >= n_hi || n_hi > 400 {
        return Err(Error::Domain(format!(
            "degree window must satisfy 1 <= lo < hi <= 400, got {n_lo}..{n_hi}"
        )));
    }
    let t_grid = default_t_grid();
    let per_t = t_grid
        .par_iter()
        .map(|&t| {
            integrals::f_batch(alpha, beta, delta, 0, t, n_hi, integrals::DEFAULT_TOL)
        })
        .collect::<Result<Vec<_>>>()?;
    let mut sups = Vec::with_capacity(n_hi - n_lo + 1);
    for n in n_lo..=n_hi {
        let sup = per_t.iter().map(|b| b[n].value.abs()).fold(0.0f64, f64::max);
        if sup < 1e-300 {
            return Err(Error::DegenerateInput(format!(
                "family member {n} vanishes on the whole angle grid"
            )));
        }
        sups.push((n, sup));
    }
    let m = sups.len() as f64;
    let (mut sx, mut sy, mut sxx, mut sxy) = (0.0, 0.0, 0.0, 0.0);
    for &(n, sup) in &sups {
        let x = (n as f64).ln();
        let y = sup.ln();
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    let slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
    let intercept = (sy - slope * sx) / m;
    Ok(DecayFit { slope, intercept, sups })
}

/// Input to the Polya-type certificate: either a closure on `[0, pi]` or
/// samples at evenly spaced angles covering `[0, pi]`.
pub enum PolyaInput<'a> {
    Function(&'a dyn Fn(f64) -> f64),
    Samples { values: &'a [f64], step: f64 },
}

/// Outcome of the Polya-type certificate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PolyaVerdict {
    StrictlyPositiveDefinite,
    PositiveDefinite,
    /// The folded derivative of order lambda is not convex.
    FailsConvexity,
    /// A derivative fails to vanish at pi; `order` is the first failing one.
    FailsEndpoint { order: usize },
}

impl fmt::Display for PolyaVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PolyaVerdict::StrictlyPositiveDefinite => f.write_str("strictly-positive-definite"),
            PolyaVerdict::PositiveDefinite => f.write_str("positive-definite"),
            PolyaVerdict::FailsConvexity => f.write_str("fails-convexity"),
            PolyaVerdict::FailsEndpoint { order } => {
                write!(f, "fails-endpoint(order {order})")
            }
        }
    }
}

/// Convexity certificate for positive definiteness on a sphere of dimension
/// `d >= 3`: with `lambda = ceil((d - 2) / 2)`, requires every derivative
/// `g^(j)`, `j <= lambda + 1`, to vanish at pi, `(-1)^lambda g^(lambda)` to
/// be convex, and `g^(lambda + 1)` to stay finite at zero. Strictness
/// additionally requires the folded derivative to be genuinely non-affine.
/// Derivatives are formed by iterated central differences, so the grid must
/// resolve `lambda + 1` differentiations.
pub fn polya_check(input: PolyaInput<'_>, d: u32) -> Result<PolyaVerdict> {
    if d < 3 {
        return Err(Error::Domain(format!("needs dimension d >= 3, got {d}")));
    }
    let lambda = ((d - 2) as usize).div_ceil(2);
    let (values, h): (Vec<f64>, f64) = match input {
        PolyaInput::Function(f) => {
            let panels = 4096usize;
            let h = PI / panels as f64;
            ((0..=panels).map(|i| f(i as f64 * h)).collect(), h)
        }
        PolyaInput::Samples { values, step } => {
            if !(step > 0.0) || values.len() < 2 {
                return Err(Error::Domain("need step > 0 and at least two samples".into()));
            }
            let span = (values.len() - 1) as f64 * step;
            if (span - PI).abs() > 1e-6 {
                return Err(Error::Domain(format!(
                    "samples must cover [0, pi]; they span {span}"
                )));
            }
            (values.to_vec(), step)
        }
    };
    if values.len() < 16 * (lambda + 2) {
        return Err(Error::Resolution(format!(
            "need at least {} samples to form {} derivatives, got {}",
            16 * (lambda + 2),
            lambda + 1,
            values.len()
        )));
    }
    if values.iter().any(|v| !v.is_finite()) {
        return Err(Error::Domain("samples must be finite".into()));
    }

    // levels[j][i] approximates the j-th derivative at (i + j) * h
    let mut levels: Vec<Vec<f64>> = vec![values];
    for j in 0..=lambda {
        let prev = &levels[j];
        let next: Vec<f64> = (1..prev.len() - 1)
            .map(|i| (prev[i + 1] - prev[i - 1]) / (2.0 * h))
            .collect();
        levels.push(next);
    }
    let scale_max = levels
        .iter()
        .flat_map(|l| l.iter())
        .fold(0.0f64, |a, &b| a.max(b.abs()));
    let endpoint_tol = 20.0 * h * (1.0 + scale_max);

    for (j, level) in levels.iter().enumerate() {
        let at_pi = *level.last().unwrap();
        if at_pi.abs() > endpoint_tol {
            return Ok(PolyaVerdict::FailsEndpoint { order: j });
        }
    }

    let top = levels.last().unwrap();
    if !top[0].is_finite() {
        return Ok(PolyaVerdict::FailsConvexity);
    }

    let sign = if lambda % 2 == 0 { 1.0 } else { -1.0 };
    let folded: Vec<f64> = levels[lambda].iter().map(|v| sign * v).collect();
    let folded_scale = folded.iter().fold(0.0f64, |a, &b| a.max(b.abs()));
    let convex_tol = 1e-9 * (1.0 + folded_scale);
    for w in folded.windows(3) {
        if w[0] - 2.0 * w[1] + w[2] < -convex_tol {
            return Ok(PolyaVerdict::FailsConvexity);
        }
    }

    // affine folded derivative means the certificate cannot give strictness
    let m = folded.len() as f64;
    let (mut sx, mut sy, mut sxx, mut sxy) = (0.0, 0.0, 0.0, 0.0);
    for (i, &v) in folded.iter().enumerate() {
        let x = i as f64;
        sx += x;
        sy += v;
        sxx += x * x;
        sxy += x * v;
    }
    let det = m * sxx - sx * sx;
    let slope = (m * sxy - sx * sy) / det;
    let inter = (sy - slope * sx) / m;
    let max_resid = folded
        .iter()
        .enumerate()
        .map(|(i, &v)| (v - inter - slope * i as f64).abs())
        .fold(0.0f64, f64::max);
    if max_resid <= 1e-9 * (1.0 + folded_scale) {
        Ok(PolyaVerdict::PositiveDefinite)
    } else {
        Ok(PolyaVerdict::StrictlyPositiveDefinite)
    }
}

/// Per-exponent tallies of an exploratory frontier scan.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FrontierRow {
    pub delta: f64,
    pub negatives: usize,
    pub zero_consistent: usize,
    pub precision_exhausted: usize,
    pub min_value: f64,
    pub min_margin: f64,
}

/// EXPLORATORY: empirical sign behaviour of the family below and around the
/// proven exponent thresholds. Carries no proof weight.
#[derive(Debug, Clone, PartialEq)]
pub struct FrontierReport {
    pub alpha: f64,
    pub beta: f64,
    pub rows: Vec<FrontierRow>,
    /// Smallest scanned exponent with no negative and no unconverged entry.
    pub smallest_clean_delta: Option<f64>,
}

/// Scans each exponent in turn and tallies verdicts; results are exploratory
/// observations about where positivity appears to begin, not certificates.
pub fn conjecture_frontier(
    alpha: f64,
    beta: f64,
    deltas: &[f64],
    n_max: usize,
    t_grid: &[f64],
) -> Result<FrontierReport> {
    if deltas.is_empty() {
        return Err(Error::Domain("need at least one exponent".into()));
    }
    let mut rows = Vec::with_capacity(deltas.len());
    for &delta in deltas {
        let grid = ScanGrid {
            alpha_set: vec![alpha],
            beta_set: vec![beta],
            delta_rule: DeltaRule::Explicit(vec![delta]),
            n_max,
            t_grid: t_grid.to_vec(),
            tolerance: integrals::DEFAULT_TOL,
        };
        let report = scan_positivity(&grid)?;
        let min_value = report
            .rows
            .iter()
            .map(|r| r.value)
            .fold(f64::INFINITY, f64::min);
        rows.push(FrontierRow {
            delta,
            negatives: report.negative,
            zero_consistent: report.zero_consistent,
            precision_exhausted: report.precision_exhausted,
            min_value,
            min_margin: report.min_margin,
        });
    }
    let smallest_clean_delta = rows
        .iter()
        .filter(|r| r.negatives == 0 && r.precision_exhausted == 0)
        .map(|r| r.delta)
        .fold(None, |acc: Option<f64>, d| Some(acc.map_or(d, |a| a.min(d))));
    Ok(FrontierReport {
        alpha,
        beta,
        rows,
        smallest_clean_delta,
    })
}
