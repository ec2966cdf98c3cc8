//! Special functions: Jacobi and Gegenbauer polynomials, their orthogonality
//! norms, and Bessel functions of the first kind for real order `nu >= -1/2`.
//!
//! Everything here is a pure function of its arguments and safe to call from
//! any number of threads.

use crate::dd::Dd;
use crate::error::{Error, Result};

/// Largest argument accepted by the general-order Bessel power series.
///
/// Half-integer orders use closed forms instead and have no argument cap.
pub const BESSEL_Z_MAX: f64 = 60.0;

/// Weight exponent pair `(alpha, beta)` with `alpha, beta > -1/2`.
///
/// These are the exponents of `sin(theta/2)^(2 alpha) cos(theta/2)^(2 beta)`;
/// the Jacobi polynomial paired with them always carries the shifted indices
/// `(alpha - 1/2, beta - 1/2)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct JacobiParam {
    alpha: f64,
    beta: f64,
}

impl JacobiParam {
    /// Rejects non-finite values and anything `<= -1/2`.
    pub fn new(alpha: f64, beta: f64) -> Result<Self> {
        if !alpha.is_finite() || !beta.is_finite() || alpha <= -0.5 || beta <= -0.5 {
            return Err(Error::Domain(format!(
                "weight exponents must satisfy alpha, beta > -1/2, got ({alpha}, {beta})"
            )));
        }
        Ok(JacobiParam { alpha, beta })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }
}

/// Jacobi polynomial values `P_0^(a,b)(x) .. P_degree_max^(a,b)(x)` at one
/// abscissa, as produced by [`jacobi_eval_batch`].
#[derive(Clone, Debug)]
pub struct PolySequence {
    pub a: f64,
    pub b: f64,
    pub x: f64,
    pub values: Vec<f64>,
}

impl PolySequence {
    pub fn degree_max(&self) -> usize {
        self.values.len() - 1
    }
}

fn check_jacobi_args(a: f64, b: f64, x: f64) -> Result<()> {
    if !a.is_finite() || !b.is_finite() || a <= -1.0 || b <= -1.0 {
        return Err(Error::Domain(format!(
            "Jacobi indices must satisfy a, b > -1, got ({a}, {b})"
        )));
    }
    if !(-1.0..=1.0).contains(&x) {
        return Err(Error::Domain(format!("abscissa {x} outside [-1, 1]")));
    }
    Ok(())
}

// Three-term recurrence in the degree:
//   2k (k+a+b) (2k+a+b-2) P_k = (2k+a+b-1) [ (2k+a+b)(2k+a+b-2) x + a^2 - b^2 ] P_{k-1}
//                               - 2 (k+a-1)(k+b-1)(2k+a+b) P_{k-2}
// Well conditioned on [-1, 1] for a, b > -1.
#[inline]
fn recurrence_coeffs(k: usize, a: f64, b: f64) -> (f64, f64, f64, f64) {
    let kf = k as f64;
    let c0 = 2.0 * kf + a + b;
    let c1 = 2.0 * kf * (kf + a + b) * (c0 - 2.0);
    let cx = (c0 - 1.0) * c0 * (c0 - 2.0);
    let cc = (c0 - 1.0) * (a * a - b * b);
    let c3 = 2.0 * (kf + a - 1.0) * (kf + b - 1.0) * c0;
    (c1, cx, cc, c3)
}

fn jacobi_fill(a: f64, b: f64, x: f64, out: &mut [f64]) {
    out[0] = 1.0;
    if out.len() == 1 {
        return;
    }
    out[1] = 0.5 * (a - b) + 0.5 * (a + b + 2.0) * x;
    for k in 2..out.len() {
        let (c1, cx, cc, c3) = recurrence_coeffs(k, a, b);
        out[k] = ((cx * x + cc) * out[k - 1] - c3 * out[k - 2]) / c1;
    }
}

// Same recurrence with the running pair held in double-double, which keeps
// the slow ulp drift of long sweeps out of the result.
fn jacobi_fill_compensated(a: f64, b: f64, x: f64, out: &mut [f64]) {
    out[0] = 1.0;
    if out.len() == 1 {
        return;
    }
    let p1 = 0.5 * (a - b) + 0.5 * (a + b + 2.0) * x;
    out[1] = p1;
    let mut prev = Dd::from_f64(1.0);
    let mut cur = Dd::from_f64(p1);
    for k in 2..out.len() {
        let (c1, cx, cc, c3) = recurrence_coeffs(k, a, b);
        let next = cur
            .mul_f64(cx * x + cc)
            .sub(prev.mul_f64(c3))
            .div_f64(c1);
        prev = cur;
        cur = next;
        out[k] = next.value();
    }
}

const COMPENSATED_DEGREE: usize = 200;

/// Evaluates the Jacobi polynomial `P_n^(a,b)(x)` for `a, b > -1`, `|x| <= 1`.
///
/// Degrees above 200 switch to a compensated accumulation of the same
/// recurrence.
pub fn jacobi_eval(a: f64, b: f64, n: usize, x: f64) -> Result<f64> {
    check_jacobi_args(a, b, x)?;
    if n == 0 {
        return Ok(1.0);
    }
    if n <= COMPENSATED_DEGREE {
        let mut prev = 1.0;
        let mut cur = 0.5 * (a - b) + 0.5 * (a + b + 2.0) * x;
        for k in 2..=n {
            let (c1, cx, cc, c3) = recurrence_coeffs(k, a, b);
            let next = ((cx * x + cc) * cur - c3 * prev) / c1;
            prev = cur;
            cur = next;
        }
        Ok(cur)
    } else {
        let mut prev = Dd::from_f64(1.0);
        let mut cur = Dd::from_f64(0.5 * (a - b) + 0.5 * (a + b + 2.0) * x);
        for k in 2..=n {
            let (c1, cx, cc, c3) = recurrence_coeffs(k, a, b);
            let next = cur
                .mul_f64(cx * x + cc)
                .sub(prev.mul_f64(c3))
                .div_f64(c1);
            prev = cur;
            cur = next;
        }
        Ok(cur.value())
    }
}

/// Evaluates all degrees `P_0 .. P_n_max` at `x` in one recurrence sweep.
pub fn jacobi_eval_batch(a: f64, b: f64, n_max: usize, x: f64) -> Result<PolySequence> {
    check_jacobi_args(a, b, x)?;
    let mut values = vec![0.0; n_max + 1];
    if n_max > COMPENSATED_DEGREE {
        jacobi_fill_compensated(a, b, x, &mut values);
    } else {
        jacobi_fill(a, b, x, &mut values);
    }
    Ok(PolySequence { a, b, x, values })
}

pub(crate) fn jacobi_fill_auto(a: f64, b: f64, x: f64, out: &mut [f64]) {
    if out.len() > COMPENSATED_DEGREE + 1 {
        jacobi_fill_compensated(a, b, x, out);
    } else {
        jacobi_fill(a, b, x, out);
    }
}

/// Evaluates the Gegenbauer polynomial `C_n^lambda(x)` through the Jacobi
/// relation `C_n^lambda = (2 lambda)_n / (lambda + 1/2)_n P_n^(lambda-1/2, lambda-1/2)`.
///
/// `lambda = 0` is degenerate (the relation collapses) and is rejected.
pub fn gegenbauer_eval(lambda: f64, n: usize, x: f64) -> Result<f64> {
    if lambda == 0.0 {
        return Err(Error::UnsupportedParameter(
            "lambda = 0 Gegenbauer is degenerate; use the Chebyshev form directly".into(),
        ));
    }
    if !lambda.is_finite() || lambda <= -0.5 {
        return Err(Error::Domain(format!(
            "Gegenbauer lambda must be > -1/2, got {lambda}"
        )));
    }
    let p = jacobi_eval(lambda - 0.5, lambda - 0.5, n, x)?;
    let (ln_num, s_num) = ln_poch(2.0 * lambda, n);
    let (ln_den, s_den) = ln_poch(lambda + 0.5, n);
    Ok(s_num * s_den * (ln_num - ln_den).exp() * p)
}

/// The squared norm `h_n` of `P_n^(alpha-1/2, beta-1/2)` in the weight
/// `2^(1-alpha-beta) (1-x)^(alpha-1/2) (1+x)^(beta-1/2)`:
///
/// ```text
/// h_n = 2 Gamma(n+alpha+1/2) Gamma(n+beta+1/2)
///       / ( (2n+alpha+beta) Gamma(n+alpha+beta) n! )
/// ```
///
/// evaluated in log space; at `n = 0` the denominator pair collapses to
/// `Gamma(alpha+beta+1)`, which also covers `alpha + beta = 0`.
pub fn jacobi_norm_h(params: JacobiParam, n: usize) -> f64 {
    let (al, be) = (params.alpha(), params.beta());
    let nf = n as f64;
    let ln2 = std::f64::consts::LN_2;
    if n == 0 {
        return (ln2 + ln_gamma(al + 0.5) + ln_gamma(be + 0.5) - ln_gamma(al + be + 1.0)).exp();
    }
    (ln2 + ln_gamma(nf + al + 0.5) + ln_gamma(nf + be + 0.5)
        - (2.0 * nf + al + be).ln()
        - ln_gamma(nf + al + be)
        - ln_gamma(nf + 1.0))
    .exp()
}

/// `ln Gamma(x)` for the arguments this crate produces (poles excluded by
/// construction); sign handled separately where it can go negative.
pub(crate) fn ln_gamma(x: f64) -> f64 {
    libm::lgamma_r(x).0
}

/// `(ln |(a)_n|, sign)` of the Pochhammer symbol `(a)_n = Gamma(a+n)/Gamma(a)`.
pub(crate) fn ln_poch(a: f64, n: usize) -> (f64, f64) {
    if n == 0 {
        return (0.0, 1.0);
    }
    let (ln_top, s_top) = libm::lgamma_r(a + n as f64);
    let (ln_bot, s_bot) = libm::lgamma_r(a);
    (ln_top - ln_bot, (s_top * s_bot) as f64)
}

fn is_half_integer_order(nu: f64) -> bool {
    let k = nu - 0.5;
    k.fract() == 0.0 && k >= -1.0
}

fn check_bessel_args(nu: f64, z: f64) -> Result<()> {
    if !nu.is_finite() || nu < -0.5 {
        return Err(Error::UnsupportedParameter(format!(
            "Bessel order must be >= -1/2, got {nu}"
        )));
    }
    if !z.is_finite() || z < 0.0 {
        return Err(Error::Domain(format!(
            "Bessel argument must be >= 0, got {z}"
        )));
    }
    if !is_half_integer_order(nu) && z > BESSEL_Z_MAX {
        return Err(Error::Domain(format!(
            "argument {z} beyond the power-series bound {BESSEL_Z_MAX} for non-half-integer order"
        )));
    }
    Ok(())
}

// J_nu(z) / z^nu by the defining power series, accumulated in double-double:
// the terms near k ~ z/2 exceed the result by up to e^z, and the compensated
// sum keeps the cancellation honest through z = 60.
fn bessel_series_scaled(nu: f64, z: f64) -> f64 {
    let u0 = (-nu * std::f64::consts::LN_2 - ln_gamma(nu + 1.0)).exp();
    if z == 0.0 {
        return u0;
    }
    let neg_q = Dd::prod(-0.5 * z, 0.5 * z);
    let mut term = Dd::from_f64(u0);
    let mut sum = term;
    for k in 1..400 {
        let kf = k as f64;
        term = term.mul(neg_q).div(Dd::sum(nu, kf).mul_f64(kf));
        sum = sum.add(term);
        if term.hi.abs() < 1e-40 * (1.0 + sum.hi.abs()) {
            break;
        }
    }
    sum.value()
}

// J_{k+1/2}(z) from the closed forms
//   J_{-1/2}(z) = sqrt(2/(pi z)) cos z,   J_{1/2}(z) = sqrt(2/(pi z)) sin z,
// walked up when the order is below the argument, and recovered by downward
// (Miller) recurrence normalized against the larger seed otherwise.
fn bessel_half_integer(k: i64, z: f64) -> f64 {
    let pref = (2.0 / (std::f64::consts::PI * z)).sqrt();
    let j_minus = pref * z.cos();
    let j_plus = pref * z.sin();
    if k == -1 {
        return j_minus;
    }
    if k == 0 {
        return j_plus;
    }
    if (k as f64) + 0.5 <= z {
        let (mut a, mut b) = (j_minus, j_plus);
        for j in 0..k {
            let nu_j = j as f64 + 0.5;
            let c = (2.0 * nu_j / z) * b - a;
            a = b;
            b = c;
        }
        return b;
    }
    // pick the start high enough that the minimal solution dominates by 1e20
    let mut extra = 0i64;
    let mut decades = 0.0;
    let mut nu_probe = k as f64 + 0.5;
    while decades < 20.0 {
        nu_probe += 1.0;
        extra += 1;
        decades += (2.0 * nu_probe / z).log10();
    }
    let start = k + extra;
    let mut t_upper = 0.0f64; // trial value at order j+1/2 for j one above t_mid's
    let mut t_mid = 1e-30f64; // trial value at order j+1/2
    let mut t_target = 0.0f64;
    let mut t_half = 0.0f64;
    let mut j = start;
    while j > -1 {
        let t_lower = (2.0 * (j as f64 + 0.5) / z) * t_mid - t_upper;
        t_upper = t_mid;
        t_mid = t_lower;
        j -= 1;
        if j == k {
            t_target = t_mid;
        }
        if j == 0 {
            t_half = t_mid;
        }
        if t_mid.abs() > 1e250 {
            t_upper *= 1e-250;
            t_mid *= 1e-250;
            t_target *= 1e-250;
            t_half *= 1e-250;
        }
    }
    let t_minus = t_mid;
    let scale = if j_plus.abs() >= j_minus.abs() {
        j_plus / t_half
    } else {
        j_minus / t_minus
    };
    t_target * scale
}

/// Bessel function of the first kind `J_nu(z)` for `nu >= -1/2`, `z >= 0`.
///
/// Half-integer orders run through exact spherical-Bessel closed forms with a
/// stable downward recurrence when the order exceeds the argument; other real
/// orders use the defining power series, capped at [`BESSEL_Z_MAX`].
pub fn bessel_j(nu: f64, z: f64) -> Result<f64> {
    check_bessel_args(nu, z)?;
    if z == 0.0 {
        return Ok(if nu == 0.0 {
            1.0
        } else if nu > 0.0 {
            0.0
        } else {
            f64::INFINITY
        });
    }
    if is_half_integer_order(nu) {
        if z < 0.5 {
            return Ok(bessel_series_scaled(nu, z) * z.powf(nu));
        }
        return Ok(bessel_half_integer((nu - 0.5) as i64, z));
    }
    Ok(bessel_series_scaled(nu, z) * z.powf(nu))
}

/// `J_nu(z) / z^nu`, which is entire in `z` and finite at `z = 0`.
///
/// This is the form the quadrature integrands want: the `z^nu` vanishing is
/// absorbed into the quadrature weight and the remaining factor stays smooth.
pub fn bessel_j_scaled(nu: f64, z: f64) -> Result<f64> {
    check_bessel_args(nu, z)?;
    if z < 0.5 || !is_half_integer_order(nu) {
        return Ok(bessel_series_scaled(nu, z));
    }
    Ok(bessel_half_integer((nu - 0.5) as i64, z) / z.powf(nu))
}
