//! Truncated-power kernels `g(theta) = (t - theta)_+^delta` on spheres and
//! the other compact two-point homogeneous spaces, their Jacobi expansion
//! coefficients, and Gram matrices over point sets.
//!
//! Each space carries a parameter pair `(alpha, beta)` tying its harmonic
//! analysis to the integral family in [`crate::integrals`], plus the exponent
//! threshold from which the kernel is strictly positive definite there.

use crate::error::{Error, Result};
use crate::integrals::{self, EvalResult};
use crate::special::{self, JacobiParam};
use std::f64::consts::PI;
use std::fmt;

/// A compact two-point homogeneous space, normalized to diameter pi.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpaceKind {
    /// The unit sphere S^(d-1) in R^d, d >= 2.
    Sphere(u32),
    /// Real projective space of dimension d >= 2.
    RealProjective(u32),
    /// Complex projective space of real dimension d (even, >= 4).
    ComplexProjective(u32),
    /// Quaternionic projective space of real dimension d (even, >= 8).
    QuaternionicProjective(u32),
    /// The Cayley projective plane (real dimension 16).
    CayleyPlane,
}

impl fmt::Display for SpaceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpaceKind::Sphere(d) => write!(f, "sphere({d})"),
            SpaceKind::RealProjective(d) => write!(f, "real-projective({d})"),
            SpaceKind::ComplexProjective(d) => write!(f, "complex-projective({d})"),
            SpaceKind::QuaternionicProjective(d) => write!(f, "quaternionic-projective({d})"),
            SpaceKind::CayleyPlane => write!(f, "cayley-plane"),
        }
    }
}

/// A space together with its expansion parameters `(alpha, beta)`, the parity
/// rule for retained coefficients, and the exponent threshold above which the
/// truncated-power kernel is strictly positive definite on it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpaceSpec {
    kind: SpaceKind,
    alpha: f64,
    beta: f64,
    parity_even_only: bool,
    spd_delta_threshold: f64,
}

impl SpaceSpec {
    pub fn new(kind: SpaceKind) -> Result<Self> {
        let (alpha, beta, parity_even_only, threshold) = match kind {
            SpaceKind::Sphere(d) => {
                if d < 2 {
                    return Err(Error::Domain(format!("sphere needs d >= 2, got {d}")));
                }
                let a = (d as f64 - 2.0) / 2.0;
                (a, a, false, ((d + 1) / 2) as f64)
            }
            SpaceKind::RealProjective(d) => {
                if d < 2 {
                    return Err(Error::Domain(format!(
                        "real projective space needs d >= 2, got {d}"
                    )));
                }
                let a = (d as f64 - 2.0) / 2.0;
                (a, a, true, ((d + 2) / 2) as f64)
            }
            SpaceKind::ComplexProjective(d) => {
                if d < 4 || d % 2 != 0 {
                    return Err(Error::Domain(format!(
                        "complex projective space needs even d >= 4, got {d}"
                    )));
                }
                ((d as f64 - 2.0) / 2.0, 0.0, false, ((d + 2) / 2) as f64)
            }
            SpaceKind::QuaternionicProjective(d) => {
                if d < 8 || d % 2 != 0 {
                    return Err(Error::Domain(format!(
                        "quaternionic projective space needs even d >= 8, got {d}"
                    )));
                }
                ((d as f64 - 2.0) / 2.0, 1.0, false, ((d + 2) / 2) as f64)
            }
            SpaceKind::CayleyPlane => (7.0, 3.0, false, 9.0),
        };
        Ok(SpaceSpec {
            kind,
            alpha,
            beta,
            parity_even_only,
            spd_delta_threshold: threshold,
        })
    }

    pub fn kind(&self) -> SpaceKind {
        self.kind
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    /// Whether only even-index expansion coefficients are retained.
    pub fn parity_even_only(&self) -> bool {
        self.parity_even_only
    }

    /// Smallest exponent delta from which `(t - theta)_+^delta` is strictly
    /// positive definite on the space.
    pub fn spd_delta_threshold(&self) -> f64 {
        self.spd_delta_threshold
    }

    /// Ambient dimension of the unit-vector point model (spheres only).
    pub fn ambient_dim(&self) -> Option<usize> {
        match self.kind {
            SpaceKind::Sphere(d) => Some(d as usize),
            _ => None,
        }
    }
}

/// Kernel `g(theta) = (t - theta)^delta` for `theta <= t`, zero beyond, on a
/// chosen space.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KernelSpec {
    pub t: f64,
    pub delta: f64,
    pub space: SpaceSpec,
}

impl KernelSpec {
    pub fn new(t: f64, delta: f64, space: SpaceSpec) -> Result<Self> {
        if !(t > 0.0) || !(t <= PI + 1e-12) {
            return Err(Error::Domain(format!("support angle t must lie in (0, pi], got {t}")));
        }
        if !(delta > 0.0) || !delta.is_finite() {
            return Err(Error::Domain(format!("exponent delta must be > 0, got {delta}")));
        }
        Ok(KernelSpec { t, delta, space })
    }
}

/// Pointwise kernel value `(t - theta)_+^delta`; continuous at `theta = t`.
pub fn kernel_eval(spec: &KernelSpec, theta: f64) -> Result<f64> {
    if !(0.0..=PI + 1e-12).contains(&theta) {
        return Err(Error::Domain(format!("theta must lie in [0, pi], got {theta}")));
    }
    if theta >= spec.t {
        Ok(0.0)
    } else {
        Ok((spec.t - theta).powf(spec.delta))
    }
}

/// Expansion coefficients of the kernel in `P_n^(alpha-1/2, beta-1/2)(cos theta)`,
/// with their propagated quadrature error bounds.
#[derive(Debug, Clone, PartialEq)]
pub struct CoeffVector {
    pub spec: KernelSpec,
    pub coeffs: Vec<f64>,
    pub err_bounds: Vec<f64>,
}

impl CoeffVector {
    pub fn n_max(&self) -> usize {
        self.coeffs.len() - 1
    }
}

/// Fourier-Jacobi coefficients `a_n = 2 F_n / h_n` of the kernel: `F_n` is
/// the degree-n member of the integral family at the space's parameters and
/// `h_n` the squared Jacobi norm, paired so the series reconstructs the
/// kernel in the `sin(theta/2)^(2 alpha) cos(theta/2)^(2 beta)` weight. On
/// spaces retaining only even parity, odd-index entries are exactly zero.
pub fn schoenberg_coeffs(spec: &KernelSpec, n_max: usize) -> Result<CoeffVector> {
    let alpha = spec.space.alpha();
    let beta = spec.space.beta();
    let raw = integrals::f_batch(
        alpha,
        beta,
        spec.delta,
        0,
        spec.t,
        n_max,
        integrals::DEFAULT_TOL,
    )?;
    let params = JacobiParam::new(alpha, beta)?;
    let mut coeffs = Vec::with_capacity(n_max + 1);
    let mut errs = Vec::with_capacity(n_max + 1);
    for (n, r) in raw.iter().enumerate() {
        if spec.space.parity_even_only() && n % 2 == 1 {
            coeffs.push(0.0);
            errs.push(0.0);
            continue;
        }
        let h = special::jacobi_norm_h(params, n);
        let a_n = 2.0 * r.value / h;
        let e_n = 2.0 * r.err_bound / h;
        if r.err_bound > integrals::DEFAULT_TOL {
            return Err(Error::PrecisionExhausted {
                best: EvalResult { value: a_n, err_bound: e_n, nodes_used: r.nodes_used },
            });
        }
        coeffs.push(a_n);
        errs.push(e_n);
    }
    Ok(CoeffVector { spec: *spec, coeffs, err_bounds: errs })
}

/// Partial sum `sum_n a_n P_n^(alpha-1/2, beta-1/2)(cos theta)` of a
/// coefficient vector.
pub fn expansion_eval(cv: &CoeffVector, theta: f64) -> Result<f64> {
    if !(0.0..=PI + 1e-12).contains(&theta) {
        return Err(Error::Domain(format!("theta must lie in [0, pi], got {theta}")));
    }
    let a = cv.spec.space.alpha() - 0.5;
    let b = cv.spec.space.beta() - 0.5;
    let mut vals = vec![0.0; cv.coeffs.len()];
    special::jacobi_fill_auto(a, b, theta.cos(), &mut vals);
    Ok(cv.coeffs.iter().zip(&vals).map(|(c, p)| c * p).sum())
}

/// Great-circle angle `arccos <x, y>` between unit vectors; the inner product
/// is clamped to `[-1, 1]` before the arccosine.
pub fn geodesic_distance(x: &[f64], y: &[f64]) -> Result<f64> {
    if x.len() != y.len() || x.is_empty() {
        return Err(Error::Domain("points must share a nonzero dimension".into()));
    }
    let nx: f64 = x.iter().map(|v| v * v).sum::<f64>().sqrt();
    let ny: f64 = y.iter().map(|v| v * v).sum::<f64>().sqrt();
    if (nx - 1.0).abs() >= 1e-10 || (ny - 1.0).abs() >= 1e-10 {
        return Err(Error::Domain(format!(
            "points must be unit vectors (norms {nx}, {ny})"
        )));
    }
    let dot: f64 = x.iter().zip(y).map(|(a, b)| a * b).sum();
    Ok(dot.clamp(-1.0, 1.0).acos())
}

/// Dense symmetric kernel matrix, stored row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct GramMatrix {
    n: usize,
    data: Vec<f64>,
}

impl GramMatrix {
    pub fn from_rows(n: usize, data: Vec<f64>) -> Result<Self> {
        if data.len() != n * n {
            return Err(Error::Domain(format!(
                "expected {} entries for a {n} x {n} matrix, got {}",
                n * n,
                data.len()
            )));
        }
        Ok(GramMatrix { n, data })
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    pub fn data(&self) -> &[f64] {
        &self.data
    }
}

/// Gram matrix `[g(d(x_i, x_j))]` of the kernel over unit vectors. Entries
/// vanish exactly where the distance exceeds the support angle; points closer
/// than 1e-12 are rejected as duplicates.
pub fn gram_matrix(spec: &KernelSpec, points: &[Vec<f64>]) -> Result<GramMatrix> {
    let n = points.len();
    if n == 0 {
        return Err(Error::Domain("need at least one point".into()));
    }
    let diag = spec.t.powf(spec.delta);
    let mut data = vec![0.0; n * n];
    for i in 0..n {
        data[i * n + i] = diag;
        for j in i + 1..n {
            let d = geodesic_distance(&points[i], &points[j])?;
            if d < 1e-12 {
                return Err(Error::DegenerateInput(format!(
                    "points {i} and {j} coincide (distance {d:.3e})"
                )));
            }
            let v = kernel_eval(spec, d)?;
            data[i * n + j] = v;
            data[j * n + i] = v;
        }
    }
    GramMatrix::from_rows(n, data)
}

/// Gram matrix from a precomputed symmetric distance matrix (row-major,
/// zero diagonal), for spaces without a unit-vector point model.
pub fn gram_from_distances(spec: &KernelSpec, distances: &[f64], n: usize) -> Result<GramMatrix> {
    if distances.len() != n * n || n == 0 {
        return Err(Error::Domain(format!(
            "expected {} distances for {n} points, got {}",
            n * n,
            distances.len()
        )));
    }
    let diag = spec.t.powf(spec.delta);
    let mut data = vec![0.0; n * n];
    for i in 0..n {
        data[i * n + i] = diag;
        for j in i + 1..n {
            let d = distances[i * n + j];
            let d_t = distances[j * n + i];
            if (d - d_t).abs() > 1e-12 {
                return Err(Error::Domain(format!(
                    "distance matrix is not symmetric at ({i}, {j})"
                )));
            }
            if !(0.0..=PI + 1e-12).contains(&d) {
                return Err(Error::Domain(format!(
                    "distance at ({i}, {j}) must lie in [0, pi], got {d}"
                )));
            }
            if d < 1e-12 {
                return Err(Error::DegenerateInput(format!(
                    "points {i} and {j} coincide (distance {d:.3e})"
                )));
            }
            let v = kernel_eval(spec, d)?;
            data[i * n + j] = v;
            data[j * n + i] = v;
        }
    }
    GramMatrix::from_rows(n, data)
}

/// Weighted L2 distance between the kernel and a partial expansion, measured
/// in the same weight that makes the expansion orthogonal.
pub fn reconstruction_l2_error(cv: &CoeffVector, panels: usize) -> Result<f64> {
    let spec = &cv.spec;
    let alpha = spec.space.alpha();
    let beta = spec.space.beta();
    let mut acc = 0.0;
    // midpoint rule is plenty here: the integrand is bounded and the result
    // is only compared across n_max values
    let h = PI / panels as f64;
    for k in 0..panels {
        let theta = (k as f64 + 0.5) * h;
        let diff = kernel_eval(spec, theta)? - expansion_eval(cv, theta)?;
        let w = (theta / 2.0).sin().powf(2.0 * alpha) * (theta / 2.0).cos().powf(2.0 * beta);
        acc += diff * diff * w * h;
    }
    Ok(acc.sqrt())
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn sphere(d: u32) -> SpaceSpec {
        SpaceSpec::new(SpaceKind::Sphere(d)).unwrap()
    }

    #[test]
    fn catalog_parameters() {
        let s3 = sphere(3);
        assert_eq!((s3.alpha(), s3.beta()), (0.5, 0.5));
        assert_eq!(s3.spd_delta_threshold(), 2.0);
        assert!(!s3.parity_even_only());

        let s6 = sphere(6);
        assert_eq!((s6.alpha(), s6.beta()), (2.0, 2.0));
        assert_eq!(s6.spd_delta_threshold(), 3.0);

        let rp3 = SpaceSpec::new(SpaceKind::RealProjective(3)).unwrap();
        assert_eq!((rp3.alpha(), rp3.beta()), (0.5, 0.5));
        assert!(rp3.parity_even_only());
        assert_eq!(rp3.spd_delta_threshold(), 2.0);

        let cp4 = SpaceSpec::new(SpaceKind::ComplexProjective(4)).unwrap();
        assert_eq!((cp4.alpha(), cp4.beta()), (1.0, 0.0));
        assert_eq!(cp4.spd_delta_threshold(), 3.0);

        let hp8 = SpaceSpec::new(SpaceKind::QuaternionicProjective(8)).unwrap();
        assert_eq!((hp8.alpha(), hp8.beta()), (3.0, 1.0));
        assert_eq!(hp8.spd_delta_threshold(), 5.0);

        let ca = SpaceSpec::new(SpaceKind::CayleyPlane).unwrap();
        assert_eq!((ca.alpha(), ca.beta()), (7.0, 3.0));
        assert_eq!(ca.spd_delta_threshold(), 9.0);
    }

    #[test]
    fn catalog_rejects_bad_dimensions() {
        assert!(SpaceSpec::new(SpaceKind::Sphere(1)).is_err());
        assert!(SpaceSpec::new(SpaceKind::ComplexProjective(5)).is_err());
        assert!(SpaceSpec::new(SpaceKind::ComplexProjective(2)).is_err());
        assert!(SpaceSpec::new(SpaceKind::QuaternionicProjective(6)).is_err());
    }

    #[test]
    fn kernel_pointwise_values() {
        let spec = KernelSpec::new(PI / 2.0, 2.0, sphere(3)).unwrap();
        assert_eq!(kernel_eval(&spec, PI).unwrap(), 0.0);
        assert_relative_eq!(kernel_eval(&spec, 0.0).unwrap(), (PI / 2.0).powi(2));
        let edge = KernelSpec::new(1.0, 1.0, sphere(3)).unwrap();
        assert_eq!(kernel_eval(&edge, 1.0).unwrap(), 0.0);
        assert!(kernel_eval(&edge, -0.1).is_err());
    }

    #[test]
    fn schoenberg_leading_coefficient() {
        let spec = KernelSpec::new(PI, 2.0, sphere(3)).unwrap();
        let cv = schoenberg_coeffs(&spec, 4).unwrap();
        assert_relative_eq!(cv.coeffs[0], (PI * PI - 4.0) / 2.0, max_relative = 1e-12);
        assert_relative_eq!(cv.coeffs[0], 2.9348022005446793, max_relative = 1e-12);
    }

    #[test]
    fn schoenberg_frozen_sphere5_entry() {
        // alpha = beta = 3/2, t = pi/2, delta = 3; F_5 and h_5 frozen
        let spec = KernelSpec::new(PI / 2.0, 3.0, sphere(5)).unwrap();
        let cv = schoenberg_coeffs(&spec, 5).unwrap();
        let want = 2.0 * 0.0030194427175122582 / 0.13186813186813187;
        assert_relative_eq!(cv.coeffs[5], want, max_relative = 1e-11);
        let want0 = 2.0 * 0.015132237570773153 / (1.0 / 3.0);
        assert_relative_eq!(cv.coeffs[0], want0, max_relative = 1e-11);
    }

    #[test]
    fn real_projective_zeroes_odd_indices() {
        let space = SpaceSpec::new(SpaceKind::RealProjective(3)).unwrap();
        let spec = KernelSpec::new(1.2, 2.0, space).unwrap();
        let cv = schoenberg_coeffs(&spec, 6).unwrap();
        for n in (1..=5).step_by(2) {
            assert_eq!(cv.coeffs[n], 0.0);
        }
        assert!(cv.coeffs[0] > 0.0);
    }

    #[test]
    fn geodesic_distances() {
        let e1 = vec![1.0, 0.0, 0.0];
        let e2 = vec![0.0, 1.0, 0.0];
        let neg = vec![-1.0, 0.0, 0.0];
        assert_eq!(geodesic_distance(&e1, &e1).unwrap(), 0.0);
        assert_relative_eq!(geodesic_distance(&e1, &neg).unwrap(), PI);
        assert_relative_eq!(geodesic_distance(&e1, &e2).unwrap(), PI / 2.0);
        assert!(geodesic_distance(&[0.5, 0.0, 0.0], &e1).is_err());
    }

    #[test]
    fn gram_small_cases() {
        let spec = KernelSpec::new(PI / 2.0, 2.0, sphere(3)).unwrap();
        let g = gram_matrix(
            &spec,
            &[vec![0.0, 0.0, 1.0], vec![0.0, 0.0, -1.0]],
        )
        .unwrap();
        let d = (PI / 2.0).powi(2);
        assert_eq!(g.get(0, 1), 0.0);
        assert_eq!(g.get(1, 0), 0.0);
        assert_relative_eq!(g.get(0, 0), d);

        let single = gram_matrix(&spec, &[vec![1.0, 0.0, 0.0]]).unwrap();
        assert_relative_eq!(single.get(0, 0), d);

        let dup = gram_matrix(
            &spec,
            &[vec![1.0, 0.0, 0.0], vec![1.0, 0.0, 0.0]],
        );
        assert!(matches!(dup, Err(Error::DegenerateInput(_))));
    }

    #[test]
    fn expansion_reconstructs_kernel() {
        let spec = KernelSpec::new(PI / 2.0, 2.0, sphere(4)).unwrap();
        let cv = schoenberg_coeffs(&spec, 200).unwrap();
        let theta = PI / 4.0;
        let direct = kernel_eval(&spec, theta).unwrap();
        let series = expansion_eval(&cv, theta).unwrap();
        assert!(
            (direct - series).abs() < 1e-3,
            "reconstruction off by {}",
            (direct - series).abs()
        );
    }

    #[test]
    fn reconstruction_error_shrinks_with_degree() {
        let spec = KernelSpec::new(PI / 2.0, 2.0, sphere(4)).unwrap();
        let mut last = f64::INFINITY;
        for n_max in [10usize, 20, 40, 80] {
            let cv = schoenberg_coeffs(&spec, n_max).unwrap();
            let err = reconstruction_l2_error(&cv, 2048).unwrap();
            assert!(err <= last + 1e-12, "L2 error grew at n_max = {n_max}");
            last = err;
        }
    }
}
