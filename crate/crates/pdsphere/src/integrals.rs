//! Truncated-power moment integrals of Jacobi and Gegenbauer polynomials.
//!
//! The central object is the family
//!
//! ```text
//! F[n,m](t) = int_0^t (t-th)^delta P_D^(alpha-1/2, beta-1/2)(cos(th/2^m))
//!             * sin(th/2^(m+1))^(2 alpha) * cos(th/2^(m+1))^(2 beta) dth,   D = 2^m n,
//! ```
//!
//! whose sign pattern governs positive definiteness of the kernel
//! `(t - theta)_+^delta` on spheres and related homogeneous spaces. Evaluation
//! maps `[0, t]` to `[-1, 1]` and absorbs the endpoint factors `(t-th)^delta`
//! and `th^(2 alpha)` into a Gauss-Jacobi weight, leaving a smooth integrand;
//! a node-doubling ladder provides the reported error bound. The module also
//! carries the identity calculus around the family: index-raising relations,
//! quadratic (angle-halving) transforms, finite closed forms for integer
//! Gegenbauer index, the Riemann-Liouville fractional integral, and the
//! Bessel-integral limits approached as the dyadic level m grows.

use crate::error::{Error, Result};
use crate::quad;
use crate::special;
use std::f64::consts::PI;

/// Absolute tolerance requested from the quadrature ladder by default.
pub const DEFAULT_TOL: f64 = 1e-12;

const NODE_LADDER: [usize; 5] = [32, 64, 128, 256, 512];

/// Largest polynomial degree (`2^m * n`) accepted by the evaluators.
const MAX_DEGREE: usize = 10_000_000;

/// Quadrature outcome: a value, the node-doubling error estimate, and the
/// node count of the accepted evaluation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalResult {
    pub value: f64,
    /// Absolute difference between the accepted evaluation and the one at
    /// half the node count.
    pub err_bound: f64,
    pub nodes_used: usize,
}

/// One instance of the integral family: parameters `(alpha, beta, delta)`,
/// degree `n`, dyadic level `m` (0 is the plain integral), and endpoint `t`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IntegralQuery {
    pub alpha: f64,
    pub beta: f64,
    pub delta: f64,
    pub n: usize,
    pub m: u32,
    pub t: f64,
}

impl IntegralQuery {
    pub fn new(alpha: f64, beta: f64, delta: f64, n: usize, m: u32, t: f64) -> Result<Self> {
        let q = IntegralQuery { alpha, beta, delta, n, m, t };
        q.validate()?;
        Ok(q)
    }

    pub fn validate(&self) -> Result<()> {
        if !self.alpha.is_finite() || !self.beta.is_finite() {
            return Err(Error::Domain("alpha and beta must be finite".into()));
        }
        if self.alpha < 0.0 || self.beta < 0.0 {
            return Err(Error::UnsupportedParameter(format!(
                "alpha and beta must be >= 0, got ({}, {})",
                self.alpha, self.beta
            )));
        }
        if !(self.delta > 0.0) || !self.delta.is_finite() {
            return Err(Error::Domain(format!("delta must be > 0, got {}", self.delta)));
        }
        if !(self.t > 0.0) || !(self.t <= PI + 1e-12) {
            return Err(Error::Domain(format!("t must lie in (0, pi], got {}", self.t)));
        }
        if self.m > 40 || self.n.checked_shl(self.m).is_none_or(|d| d > MAX_DEGREE) {
            return Err(Error::Domain(format!(
                "degree 2^{} * {} exceeds the supported range",
                self.m, self.n
            )));
        }
        Ok(())
    }

    fn degree(&self) -> usize {
        self.n << self.m
    }
}

struct Plan {
    weight_a: f64,
    weight_b: f64,
    prefactor: f64,
    /// Effective endpoint (snapped to pi on the endpoint-singular path).
    t: f64,
    endpoint: bool,
}

fn is_even_integer_doubled(x: f64) -> bool {
    (2.0 * x).fract() == 0.0
}

fn make_plan(q: &IntegralQuery) -> Plan {
    let endpoint = q.m == 0 && q.t >= PI - 1e-12 && !is_even_integer_doubled(q.beta);
    if endpoint {
        // At t = pi the factor cos(th/2)^(2 beta) = sin((pi-th)/2)^(2 beta)
        // is algebraic at the right endpoint; fold (pi-th)^(2 beta) into the
        // weight and keep the smooth remainder in the integrand.
        Plan {
            weight_a: q.delta + 2.0 * q.beta,
            weight_b: 2.0 * q.alpha,
            prefactor: (PI / 2.0).powf(q.delta + 2.0 * q.alpha + 2.0 * q.beta + 1.0)
                * 2f64.powf(-2.0 * q.beta),
            t: PI,
            endpoint: true,
        }
    } else {
        let t = q.t.min(PI);
        Plan {
            weight_a: q.delta,
            weight_b: 2.0 * q.alpha,
            prefactor: (t / 2.0).powf(q.delta + 2.0 * q.alpha + 1.0),
            t,
            endpoint: false,
        }
    }
}

fn envelope(theta: f64, alpha: f64, beta: f64, m: u32, endpoint: bool) -> f64 {
    let half = theta * 2f64.powi(-(m as i32) - 1);
    let mut env = 1.0;
    if alpha != 0.0 {
        env *= (half.sin() / theta).powf(2.0 * alpha);
    }
    if beta != 0.0 {
        if endpoint {
            let u = 0.5 * (PI - theta);
            env *= (u.sin() / u).powf(2.0 * beta);
        } else {
            env *= half.cos().powf(2.0 * beta);
        }
    }
    env
}

fn jacobi_sum(q: &IntegralQuery, plan: &Plan, nodes: usize) -> Result<f64> {
    let rule = quad::rule(nodes, plan.weight_a, plan.weight_b)?;
    let a = q.alpha - 0.5;
    let b = q.beta - 0.5;
    let deg = q.degree();
    let scale = 2f64.powi(-(q.m as i32));
    let mut acc = 0.0;
    for (s, w) in rule.nodes.iter().zip(&rule.weights) {
        let theta = plan.t * (1.0 + s) / 2.0;
        let poly = special::jacobi_eval(a, b, deg, (theta * scale).cos())?;
        acc += w * poly * envelope(theta, q.alpha, q.beta, q.m, plan.endpoint);
    }
    Ok(plan.prefactor * acc)
}

fn ladder(tol: f64, eval: impl Fn(usize) -> Result<f64>) -> Result<EvalResult> {
    let mut prev = eval(NODE_LADDER[0])?;
    for (i, &nn) in NODE_LADDER.iter().enumerate().skip(1) {
        let cur = eval(nn)?;
        let err = (cur - prev).abs();
        let result = EvalResult { value: cur, err_bound: err, nodes_used: nn };
        if err <= tol {
            return Ok(result);
        }
        if i + 1 == NODE_LADDER.len() {
            return Err(Error::PrecisionExhausted { best: result });
        }
        prev = cur;
    }
    unreachable!("node ladder has at least two rungs")
}

/// Evaluate one integral of the family to the default tolerance.
pub fn f_integral(q: IntegralQuery) -> Result<EvalResult> {
    f_integral_tol(q, DEFAULT_TOL)
}

/// Evaluate one integral of the family to a caller-chosen absolute tolerance.
pub fn f_integral_tol(q: IntegralQuery, tol: f64) -> Result<EvalResult> {
    q.validate()?;
    let plan = make_plan(&q);
    ladder(tol, |nodes| jacobi_sum(&q, &plan, nodes))
}

/// Evaluate the whole degree range `n = 0..=n_max` at fixed
/// `(alpha, beta, delta, m, t)` in one sweep, sharing the per-node polynomial
/// recurrence. Entries that fail to reach `tol` keep their best value and a
/// larger `err_bound`; callers decide how to classify them.
pub fn f_batch(
    alpha: f64,
    beta: f64,
    delta: f64,
    m: u32,
    t: f64,
    n_max: usize,
    tol: f64,
) -> Result<Vec<EvalResult>> {
    let q = IntegralQuery { alpha, beta, delta, n: n_max, m, t };
    q.validate()?;
    let plan = make_plan(&q);
    let a = alpha - 0.5;
    let b = beta - 0.5;
    let deg_max = q.degree();
    let stride = 1usize << m;
    let scale = 2f64.powi(-(m as i32));

    let mut poly = vec![0.0; deg_max + 1];
    let level = |nodes: usize, poly: &mut [f64]| -> Result<Vec<f64>> {
        let rule = quad::rule(nodes, plan.weight_a, plan.weight_b)?;
        let mut acc = vec![0.0; n_max + 1];
        for (s, w) in rule.nodes.iter().zip(&rule.weights) {
            let theta = plan.t * (1.0 + s) / 2.0;
            special::jacobi_fill_auto(a, b, (theta * scale).cos(), poly);
            let e = w * envelope(theta, alpha, beta, m, plan.endpoint);
            for (n, slot) in acc.iter_mut().enumerate() {
                *slot += e * poly[n * stride];
            }
        }
        for slot in acc.iter_mut() {
            *slot *= plan.prefactor;
        }
        Ok(acc)
    };

    let mut out: Vec<Option<EvalResult>> = vec![None; n_max + 1];
    let mut prev = level(NODE_LADDER[0], &mut poly)?;
    for (i, &nn) in NODE_LADDER.iter().enumerate().skip(1) {
        let cur = level(nn, &mut poly)?;
        let last = i + 1 == NODE_LADDER.len();
        for n in 0..=n_max {
            if out[n].is_none() {
                let err = (cur[n] - prev[n]).abs();
                if err <= tol || last {
                    out[n] = Some(EvalResult { value: cur[n], err_bound: err, nodes_used: nn });
                }
            }
        }
        if out.iter().all(Option::is_some) {
            break;
        }
        prev = cur;
    }
    Ok(out.into_iter().map(|r| r.expect("ladder fills every entry")).collect())
}

/// Conservative absolute floor below which a computed value of the integral
/// is indistinguishable from rounding noise: machine epsilon times a bound on
/// the quadrature mass of the integrand. Used when classifying signs.
pub fn rounding_floor(q: &IntegralQuery) -> f64 {
    let plan = make_plan(q);
    let a = q.alpha - 0.5;
    let b = q.beta - 0.5;
    let qm = a.max(b);
    let deg = q.degree() as f64;
    let poly_bound =
        (special::ln_gamma(deg + qm + 1.0) - special::ln_gamma(qm + 1.0)
            - special::ln_gamma(deg + 1.0))
        .exp();
    let sinc_bound = 2f64.powf(-2.0 * q.alpha * (q.m as f64 + 1.0));
    64.0 * f64::EPSILON
        * plan.prefactor
        * quad::mu0(plan.weight_a, plan.weight_b)
        * poly_bound
        * sinc_bound
}

/// Gegenbauer-weight variant `int_0^t (t-th)^delta C_n^lambda(cos th)
/// (sin th)^(2 lambda) dth`, computed through the Jacobi family via
/// `C_n^lambda = (2 lambda)_n / (lambda + 1/2)_n P_n^(lambda-1/2, lambda-1/2)`
/// and `sin th = 2 sin(th/2) cos(th/2)`.
pub fn f_integral_gegenbauer(lambda: f64, delta: f64, n: usize, t: f64) -> Result<EvalResult> {
    f_integral_gegenbauer_tol(lambda, delta, n, t, DEFAULT_TOL)
}

pub fn f_integral_gegenbauer_tol(
    lambda: f64,
    delta: f64,
    n: usize,
    t: f64,
    tol: f64,
) -> Result<EvalResult> {
    if !(lambda > 0.0) || !lambda.is_finite() {
        return Err(Error::UnsupportedParameter(format!(
            "gegenbauer-weight integral needs lambda > 0, got {lambda}"
        )));
    }
    let (ln_num, s_num) = special::ln_poch(2.0 * lambda, n);
    let (ln_den, s_den) = special::ln_poch(lambda + 0.5, n);
    let c = s_num * s_den * (2.0 * lambda * std::f64::consts::LN_2 + ln_num - ln_den).exp();
    let q = IntegralQuery { alpha: lambda, beta: lambda, delta, n, m: 0, t };
    let rescale = |r: EvalResult| EvalResult {
        value: c * r.value,
        err_bound: c.abs() * r.err_bound,
        nodes_used: r.nodes_used,
    };
    match f_integral_tol(q, tol) {
        Ok(r) => Ok(rescale(r)),
        Err(Error::PrecisionExhausted { best }) => {
            Err(Error::PrecisionExhausted { best: rescale(best) })
        }
        Err(e) => Err(e),
    }
}

/// Same integral as [`f_integral_gegenbauer`] but quadrature is applied to
/// the Gegenbauer form itself, with its own three-term recurrence. Kept as an
/// independent route so the two can be compared rather than one defined by
/// the other.
pub fn f_integral_gegenbauer_direct(
    lambda: f64,
    delta: f64,
    n: usize,
    t: f64,
) -> Result<EvalResult> {
    if !(lambda > 0.0) || !lambda.is_finite() {
        return Err(Error::UnsupportedParameter(format!(
            "gegenbauer-weight integral needs lambda > 0, got {lambda}"
        )));
    }
    if !(delta > 0.0) || !delta.is_finite() {
        return Err(Error::Domain(format!("delta must be > 0, got {delta}")));
    }
    if !(t > 0.0) || !(t <= PI + 1e-12) {
        return Err(Error::Domain(format!("t must lie in (0, pi], got {t}")));
    }
    let endpoint = t >= PI - 1e-12 && !is_even_integer_doubled(lambda);
    let (wa, wb, pref, teff) = if endpoint {
        // (sin th)^(2 lambda) = th^(2 lambda) (pi-th)^(2 lambda)
        //                       * (sin th / (th (pi-th)))^(2 lambda) at t = pi.
        (
            delta + 2.0 * lambda,
            2.0 * lambda,
            (PI / 2.0).powf(delta + 4.0 * lambda + 1.0),
            PI,
        )
    } else {
        let teff = t.min(PI);
        (delta, 2.0 * lambda, (teff / 2.0).powf(delta + 2.0 * lambda + 1.0), teff)
    };
    let mut scratch = vec![0.0; n + 1];
    let mut sum_at = |nodes: usize| -> Result<f64> {
        let rule = quad::rule(nodes, wa, wb)?;
        let mut acc = 0.0;
        for (s, w) in rule.nodes.iter().zip(&rule.weights) {
            let theta = teff * (1.0 + s) / 2.0;
            gegenbauer_fill(lambda, theta.cos(), &mut scratch);
            let base = if endpoint {
                theta.sin() / (theta * (PI - theta))
            } else {
                theta.sin() / theta
            };
            acc += w * scratch[n] * base.powf(2.0 * lambda);
        }
        Ok(pref * acc)
    };
    let mut prev = sum_at(NODE_LADDER[0])?;
    for (i, &nn) in NODE_LADDER.iter().enumerate().skip(1) {
        let cur = sum_at(nn)?;
        let err = (cur - prev).abs();
        let result = EvalResult { value: cur, err_bound: err, nodes_used: nn };
        if err <= DEFAULT_TOL {
            return Ok(result);
        }
        if i + 1 == NODE_LADDER.len() {
            return Err(Error::PrecisionExhausted { best: result });
        }
        prev = cur;
    }
    unreachable!()
}

fn gegenbauer_fill(lambda: f64, x: f64, out: &mut [f64]) {
    out[0] = 1.0;
    if out.len() > 1 {
        out[1] = 2.0 * lambda * x;
    }
    for k in 2..out.len() {
        let kf = k as f64;
        out[k] = (2.0 * (kf + lambda - 1.0) * x * out[k - 1]
            - (kf + 2.0 * lambda - 2.0) * out[k - 2])
            / kf;
    }
}

/// Closed form of the flat case `alpha = beta = 0, delta = 1`:
/// `(1/2)_n / n! * (1 - cos(n t)) / n^2`, with the `n = 0` limit `t^2 / 2`.
pub fn chebyshev_closed_form(n: usize, t: f64) -> f64 {
    if n == 0 {
        return t * t / 2.0;
    }
    let (lnp, _) = special::ln_poch(0.5, n);
    let pref = (lnp - special::ln_gamma(n as f64 + 1.0)).exp();
    let nf = n as f64;
    pref * (1.0 - (nf * t).cos()) / (nf * nf)
}

/// Case selector for [`f_closed_form`]: whether the integer Gegenbauer index
/// `lambda` is odd (`lambda = 2 mu - 1`) or even (`lambda = 2 mu`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Odd,
    Even,
}

/// Coefficient `b_{k,n}` of the finite closed forms:
/// `2^(1-2q) / Gamma(q) * (-1)^k * C(q, k) * (n+1)_(2q-1) / (n+k)_(q+1)`
/// for bracket order `q`. Defined for `n + k >= 1`; the `n = k = 0` slot is
/// a limit handled inside [`f_closed_form`].
pub fn bracket_coefficient(order: u32, k: u32, n: usize) -> f64 {
    debug_assert!(order >= 1 && k <= order && n + k as usize >= 1);
    let q = order as f64;
    let kf = k as f64;
    let nf = n as f64;
    let ln_binom = special::ln_gamma(q + 1.0)
        - special::ln_gamma(kf + 1.0)
        - special::ln_gamma(q - kf + 1.0);
    let (ln_top, _) = special::ln_poch(nf + 1.0, 2 * order as usize - 1);
    let (ln_bot, _) = special::ln_poch(nf + kf, order as usize + 1);
    let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
    sign * ((1.0 - 2.0 * q) * std::f64::consts::LN_2 - special::ln_gamma(q) + ln_binom
        + ln_top
        - ln_bot)
        .exp()
}

/// The `n = k = 0` limit constant `lim_(w->0) w * b_{0,0}` for bracket order q.
fn bracket_limit_constant(order: u32) -> f64 {
    let q = order as f64;
    ((1.0 - 2.0 * q) * std::f64::consts::LN_2 + special::ln_gamma(2.0 * q)
        - special::ln_gamma(q)
        - special::ln_gamma(q + 1.0))
    .exp()
}

fn factorial(n: u32) -> f64 {
    special::ln_gamma(n as f64 + 1.0).exp()
}

/// `sin y` minus its Taylor polynomial through `y^(2 mu - 1)`; the tail
/// series is used for small `|y|` where direct subtraction cancels.
fn sin_bracket(y: f64, mu: u32) -> f64 {
    if y.abs() < 1.0 {
        let mut term = if mu % 2 == 0 { 1.0 } else { -1.0 };
        term *= y.powi(2 * mu as i32 + 1) / factorial(2 * mu + 1);
        let mut sum = term;
        let mut j = mu as i32;
        loop {
            j += 1;
            term *= -y * y / ((2 * j) as f64 * (2 * j + 1) as f64);
            sum += term;
            if term.abs() <= f64::EPSILON * sum.abs() || j > mu as i32 + 40 {
                return sum;
            }
        }
    }
    let mut s = y.sin();
    let mut term = y;
    for j in 0..mu {
        if j > 0 {
            term *= -y * y / ((2 * j) as f64 * (2 * j + 1) as f64);
        }
        s -= term;
    }
    s
}

/// `cos y` minus its Taylor polynomial through `y^(2 mu)`.
fn cos_bracket(y: f64, mu: u32) -> f64 {
    if y.abs() < 1.0 {
        let mut term = if mu % 2 == 0 { -1.0 } else { 1.0 };
        term *= y.powi(2 * mu as i32 + 2) / factorial(2 * mu + 2);
        let mut sum = term;
        let mut j = (mu + 1) as i32;
        loop {
            j += 1;
            term *= -y * y / ((2 * j - 1) as f64 * (2 * j) as f64);
            sum += term;
            if term.abs() <= f64::EPSILON * sum.abs() || j > mu as i32 + 41 {
                return sum;
            }
        }
    }
    let mut s = y.cos();
    let mut term = 1.0;
    for j in 0..=mu {
        if j > 0 {
            term *= -y * y / ((2 * j - 1) as f64 * (2 * j) as f64);
        }
        s -= term;
    }
    s
}

/// Finite closed form of the Gegenbauer-weight integral for integer index:
/// the odd case gives `lambda = 2 mu - 1, delta = 2 mu`, the even case
/// `lambda = 2 mu, delta = 2 mu + 1`. Small `(n + 2 lambda) t` switches to a
/// power series in `t` that sidesteps the cross-term cancellation.
pub fn f_closed_form(mu: u32, parity: Parity, n: usize, t: f64) -> Result<f64> {
    if mu == 0 {
        return Err(Error::Domain("closed form needs mu >= 1".into()));
    }
    if !(t > 0.0) || !(t <= PI + 1e-12) {
        return Err(Error::Domain(format!("t must lie in (0, pi], got {t}")));
    }
    let lam = match parity {
        Parity::Odd => 2 * mu - 1,
        Parity::Even => 2 * mu,
    };
    if (n as f64 + 2.0 * lam as f64) * t < 0.5 {
        return Ok(closed_form_series(mu, parity, lam, n, t));
    }
    let mut total = 0.0;
    for k in 0..=lam {
        if n == 0 && k == 0 {
            total += match parity {
                Parity::Odd => {
                    bracket_limit_constant(lam) * factorial(2 * mu) / factorial(2 * mu + 1)
                        * t.powi(2 * mu as i32 + 1)
                }
                Parity::Even => {
                    bracket_limit_constant(lam) * factorial(2 * mu + 1) / factorial(2 * mu + 2)
                        * t.powi(2 * mu as i32 + 2)
                }
            };
            continue;
        }
        let w = n as f64 + 2.0 * k as f64;
        let b = bracket_coefficient(lam, k, n);
        total += match parity {
            Parity::Odd => {
                let sign = if mu % 2 == 0 { 1.0 } else { -1.0 };
                b * sign * factorial(2 * mu) / w.powi(2 * mu as i32) * sin_bracket(w * t, mu)
            }
            Parity::Even => {
                let sign = if mu % 2 == 0 { -1.0 } else { 1.0 };
                b * sign * factorial(2 * mu + 1) / w.powi(2 * mu as i32 + 1) * cos_bracket(w * t, mu)
            }
        };
    }
    Ok(total)
}

fn closed_form_series(mu: u32, parity: Parity, lam: u32, n: usize, t: f64) -> f64 {
    // Power-series form in t; sums over k first so that the vanishing low
    // moments of the coefficients never enter. The n = k = 0 limit slot only
    // contributes at moment order 1, which lies below the first surviving
    // term, hence it is skipped entirely.
    let k_lo = if n == 0 { 1 } else { 0 };
    let moment = |p: i32| -> f64 {
        (k_lo..=lam)
            .map(|k| bracket_coefficient(lam, k, n) * (n as f64 + 2.0 * k as f64).powi(p))
            .sum()
    };
    let mut total = 0.0;
    let (j0, fact_num): (i32, f64) = match parity {
        Parity::Odd => (3 * mu as i32 - 1, factorial(2 * mu)),
        Parity::Even => (3 * mu as i32 + 1, factorial(2 * mu + 1)),
    };
    for j in j0..j0 + 40 {
        let term = match parity {
            Parity::Odd => {
                let p = 2 * j + 1 - 2 * mu as i32;
                let sign = if (mu as i32 + j) % 2 == 0 { 1.0 } else { -1.0 };
                sign * fact_num / factorial(2 * j as u32 + 1) * moment(p)
                    * t.powi(2 * j + 1)
            }
            Parity::Even => {
                let p = 2 * j - 2 * mu as i32 - 1;
                let sign = if (mu as i32 + 1 + j) % 2 == 0 { 1.0 } else { -1.0 };
                sign * fact_num / factorial(2 * j as u32) * moment(p) * t.powi(2 * j)
            }
        };
        total += term;
        if term.abs() <= f64::EPSILON * total.abs() && j > j0 + 2 {
            break;
        }
    }
    total
}

/// Riemann-Liouville fractional integral of sampled data on a uniform grid
/// over `[0, T]`: `(L^delta f)(t) = 1/Gamma(delta) int_0^t (t-th)^(delta-1)
/// f(th) dth`, computed by exact product integration of the piecewise-linear
/// interpolant.
pub fn riemann_liouville(values: &[f64], step: f64, delta: f64) -> Result<Vec<f64>> {
    if !(delta > 0.0) || !delta.is_finite() {
        return Err(Error::Domain(format!(
            "fractional integral order must be > 0, got {delta}"
        )));
    }
    if values.len() < 2 || !(step > 0.0) {
        return Err(Error::Domain("need at least two samples and a positive step".into()));
    }
    let mm = values.len();
    let mut pow_d = Vec::with_capacity(mm);
    let mut pow_d1 = Vec::with_capacity(mm);
    for j in 0..mm {
        let u = step * j as f64;
        pow_d.push(u.powf(delta));
        pow_d1.push(u.powf(delta + 1.0));
    }
    let inv_gamma = (-special::ln_gamma(delta)).exp();
    let mut out = vec![0.0; mm];
    for i in 1..mm {
        let mut acc = 0.0;
        for j in 0..i {
            // On [th_j, th_(j+1)] write f linearly and substitute u = t_i - th,
            // which runs over [a, b] = [(i-j-1) h, (i-j) h].
            let a = pow_d[i - j - 1];
            let b = pow_d[i - j];
            let bh = step * (i - j) as f64;
            let c0 = values[j];
            let c1 = (values[j + 1] - values[j]) / step;
            acc += (c0 + c1 * bh) * (b - a) / delta
                - c1 * (pow_d1[i - j] - pow_d1[i - j - 1]) / (delta + 1.0);
        }
        out[i] = inv_gamma * acc;
    }
    Ok(out)
}

/// Coefficient `(n + beta + 1/2) / (2n + alpha + beta + 1)` of the
/// index-raising relations.
pub fn raise_coeff_a(alpha: f64, beta: f64, n: usize) -> f64 {
    let nf = n as f64;
    (nf + beta + 0.5) / (2.0 * nf + alpha + beta + 1.0)
}

/// Coefficient `(n + 1) / (2n + alpha + beta + 1)` of the index-raising
/// relations.
pub fn raise_coeff_b(alpha: f64, beta: f64, n: usize) -> f64 {
    let nf = n as f64;
    (nf + 1.0) / (2.0 * nf + alpha + beta + 1.0)
}

/// Raise beta by one: from values of the family at `(alpha, beta)` and
/// degrees `n, n+1`, return the degree-`n` value at `(alpha, beta + 1)`.
pub fn beta_raise(f_n: f64, f_n1: f64, alpha: f64, beta: f64, n: usize) -> f64 {
    raise_coeff_a(alpha, beta, n) * f_n + raise_coeff_b(alpha, beta, n) * f_n1
}

/// Raise alpha by one; the mirror relation carries a sign flip and swaps the
/// roles of alpha and beta in the first coefficient. Adding it to
/// [`beta_raise`] recovers the original value, since the two first
/// coefficients sum to one.
pub fn alpha_raise(f_n: f64, f_n1: f64, alpha: f64, beta: f64, n: usize) -> f64 {
    raise_coeff_a(beta, alpha, n) * f_n - raise_coeff_b(alpha, beta, n) * f_n1
}

/// Constant `a_n = (2n)! (alpha + 1/2)_n / (n! (alpha + 1/2)_(2n))` of the
/// quadratic (angle-halving) transform.
pub fn quadratic_coefficient(alpha: f64, n: usize) -> f64 {
    let (ln_top, _) = special::ln_poch(alpha + 0.5, n);
    let (ln_bot, _) = special::ln_poch(alpha + 0.5, 2 * n);
    (special::ln_gamma(2.0 * n as f64 + 1.0) - special::ln_gamma(n as f64 + 1.0) + ln_top
        - ln_bot)
        .exp()
}

/// Both sides of the angle-halving identity at level 0, evaluated
/// independently: the beta = 0 integral at `t` against
/// `2^(2 alpha + delta + 1) a_n` times the `(alpha, alpha)` integral of
/// degree `2n` at `t/2`.
pub fn quadratic_transform_pair(
    alpha: f64,
    delta: f64,
    n: usize,
    t: f64,
) -> Result<(EvalResult, EvalResult)> {
    let lhs = f_integral(IntegralQuery { alpha, beta: 0.0, delta, n, m: 0, t })?;
    let rhs = f_integral(IntegralQuery { alpha, beta: alpha, delta, n: 2 * n, m: 0, t: t / 2.0 })?;
    let c = 2f64.powf(2.0 * alpha + delta + 1.0) * quadratic_coefficient(alpha, n);
    Ok((
        lhs,
        EvalResult { value: c * rhs.value, err_bound: c * rhs.err_bound, nodes_used: rhs.nodes_used },
    ))
}

/// Both sides of the dyadic-level identity at the same endpoint: the beta = 0
/// family at level `m` against `a_(2^m n) 2^(2 alpha)` times the
/// `(alpha, alpha)` family at level `m + 1`. No endpoint dilation enters, so
/// the constant differs from the level-0 transform.
pub fn dyadic_transform_pair(
    alpha: f64,
    delta: f64,
    n: usize,
    m: u32,
    t: f64,
) -> Result<(EvalResult, EvalResult)> {
    let lhs = f_integral(IntegralQuery { alpha, beta: 0.0, delta, n, m, t })?;
    let rhs = f_integral(IntegralQuery { alpha, beta: alpha, delta, n, m: m + 1, t })?;
    let c = 2f64.powf(2.0 * alpha) * quadratic_coefficient(alpha, n << m);
    Ok((
        lhs,
        EvalResult { value: c * rhs.value, err_bound: c * rhs.err_bound, nodes_used: rhs.nodes_used },
    ))
}

/// The nonnegative Bessel moment `int_0^x (x-th)^(alpha + 2 mu - 1/2)
/// th^(alpha + mu) J_alpha(th) dth` for `0 <= mu <= 1`, `alpha + mu >= 1/2`.
pub fn bessel_limit_integral(alpha: f64, mu: f64, x: f64) -> Result<EvalResult> {
    if !(alpha >= 0.0) || !(0.0..=1.0).contains(&mu) || alpha + mu < 0.5 {
        return Err(Error::Domain(format!(
            "bessel moment needs alpha >= 0, mu in [0, 1], alpha + mu >= 1/2; got ({alpha}, {mu})"
        )));
    }
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::Domain(format!("upper limit must be positive, got {x}")));
    }
    // th^(alpha + mu) J_alpha(th) = th^(2 alpha + mu) * (J_alpha(th)/th^alpha);
    // both endpoint powers join the weight and the scaled Bessel factor stays
    // smooth through th = 0.
    let wa = alpha + 2.0 * mu - 0.5;
    let wb = 2.0 * alpha + mu;
    let pref = (x / 2.0).powf(wa + wb + 1.0);
    ladder(DEFAULT_TOL, |nodes| {
        let rule = quad::rule(nodes, wa, wb)?;
        let mut acc = 0.0;
        for (s, w) in rule.nodes.iter().zip(&rule.weights) {
            let theta = x * (1.0 + s) / 2.0;
            acc += w * special::bessel_j_scaled(alpha, theta)?;
        }
        Ok(pref * acc)
    })
}

/// The Bessel-integral limit approached by `2^(m (alpha + 1/2)) F[n,m]` for
/// the `beta = 0` family as the dyadic level grows:
/// `2^(-alpha - 1/2) n^(-delta - alpha - 3/2)
///  int_0^(n t) (n t - th)^delta th^(alpha + 1/2) J_(alpha - 1/2)(th) dth`.
pub fn bessel_limit_target(alpha: f64, delta: f64, n: usize, t: f64) -> Result<EvalResult> {
    if !(alpha >= 0.0) || !alpha.is_finite() {
        return Err(Error::Domain(format!("alpha must be >= 0, got {alpha}")));
    }
    if !(delta > 0.0) || !delta.is_finite() {
        return Err(Error::Domain(format!("delta must be > 0, got {delta}")));
    }
    if n == 0 {
        return Err(Error::Domain("limit target needs degree n >= 1".into()));
    }
    if !(t > 0.0) || !(t <= PI + 1e-12) {
        return Err(Error::Domain(format!("t must lie in (0, pi], got {t}")));
    }
    let x = n as f64 * t;
    let order = alpha - 0.5;
    let wa = delta;
    let wb = 2.0 * alpha;
    let c = 2f64.powf(-alpha - 0.5) * (n as f64).powf(-delta - alpha - 1.5);
    let pref = c * (x / 2.0).powf(wa + wb + 1.0);
    ladder(DEFAULT_TOL, |nodes| {
        let rule = quad::rule(nodes, wa, wb)?;
        let mut acc = 0.0;
        for (s, w) in rule.nodes.iter().zip(&rule.weights) {
            let theta = x * (1.0 + s) / 2.0;
            acc += w * special::bessel_j_scaled(order, theta)?;
        }
        Ok(pref * acc)
    })
}

/// The scaled dyadic sequence `2^(m (alpha + 1/2)) F[n,m](t)` for the
/// `beta = 0` family over a range of levels; its limit is
/// [`bessel_limit_target`].
pub fn bessel_limit_sequence(
    alpha: f64,
    delta: f64,
    n: usize,
    t: f64,
    m_range: std::ops::RangeInclusive<u32>,
) -> Result<Vec<(u32, f64)>> {
    let mut out = Vec::new();
    for m in m_range {
        let r = f_integral(IntegralQuery { alpha, beta: 0.0, delta, n, m, t })?;
        out.push((m, 2f64.powf(m as f64 * (alpha + 0.5)) * r.value));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn q(alpha: f64, beta: f64, delta: f64, n: usize, m: u32, t: f64) -> IntegralQuery {
        IntegralQuery { alpha, beta, delta, n, m, t }
    }

    #[test]
    fn plain_integral_closed_cases() {
        let r = f_integral(q(0.0, 0.0, 1.0, 0, 0, 1.0)).unwrap();
        assert_relative_eq!(r.value, 0.5, max_relative = 1e-13);
        let r = f_integral(q(0.0, 0.0, 1.0, 1, 0, PI)).unwrap();
        assert_relative_eq!(r.value, 1.0, max_relative = 1e-13);
        let r = f_integral(q(1.0, 1.0, 2.0, 0, 0, PI)).unwrap();
        assert_relative_eq!(r.value, PI.powi(3) / 24.0 - PI / 16.0, max_relative = 1e-13);
    }

    #[test]
    fn plain_integral_frozen_values() {
        for (alpha, beta, delta, n, t, want) in [
            (2.0, 1.0, 3.0, 7, 2.0, 0.00091161201606722763),
            (1.5, 0.5, 2.5, 3, 1.0, 0.0027017853209630744),
            (0.0, 2.0, 4.0, 12, 2.5, 0.059969853597827601),
            (3.0, 0.0, 4.0, 5, PI, 0.016299302969512465),
            (2.0, 2.0, 3.0, 4, PI, 0.010871308406122407),
        ] {
            let r = f_integral(q(alpha, beta, delta, n, 0, t)).unwrap();
            assert_relative_eq!(r.value, want, max_relative = 1e-12);
            assert!(r.err_bound <= DEFAULT_TOL);
        }
    }

    #[test]
    fn endpoint_path_frozen_values() {
        // 2 beta non-integer at t = pi routes through the endpoint weight.
        let r = f_integral(q(0.5, 0.5, 2.0, 0, 0, PI)).unwrap();
        assert_relative_eq!(r.value, 2.9348022005446793, max_relative = 1e-12);
        let r = f_integral(q(1.5, 2.0, 3.0, 9, 0, PI)).unwrap();
        assert_relative_eq!(r.value, 0.0016200259862882735, max_relative = 1e-12);
    }

    #[test]
    fn dyadic_level_frozen_values() {
        let r = f_integral(q(1.0, 0.0, 2.0, 2, 3, PI / 2.0)).unwrap();
        assert_relative_eq!(r.value, 0.0034301817140093899, max_relative = 1e-12);
        let r = f_integral(q(1.0, 1.0, 2.0, 1, 1, PI / 3.0)).unwrap();
        assert_relative_eq!(r.value, 0.0043165523571975771, max_relative = 1e-12);
    }

    #[test]
    fn batch_matches_single_evaluations() {
        let rs = f_batch(1.5, 0.5, 2.5, 0, 1.0, 8, DEFAULT_TOL).unwrap();
        assert_eq!(rs.len(), 9);
        for (n, r) in rs.iter().enumerate() {
            let single = f_integral(q(1.5, 0.5, 2.5, n, 0, 1.0)).unwrap();
            assert_relative_eq!(r.value, single.value, max_relative = 1e-12);
        }
    }

    #[test]
    fn rejects_invalid_queries() {
        assert!(matches!(
            f_integral(q(-0.25, 0.0, 1.0, 0, 0, 1.0)),
            Err(Error::UnsupportedParameter(_))
        ));
        assert!(matches!(f_integral(q(0.0, 0.0, 0.0, 0, 0, 1.0)), Err(Error::Domain(_))));
        assert!(matches!(f_integral(q(0.0, 0.0, 1.0, 0, 0, 0.0)), Err(Error::Domain(_))));
        assert!(matches!(f_integral(q(0.0, 0.0, 1.0, 0, 0, 4.0)), Err(Error::Domain(_))));
    }

    #[test]
    fn unreachable_tolerance_reports_best_value() {
        let err = f_integral_tol(q(1.5, 0.5, 2.5, 3, 0, 1.0), -1.0).unwrap_err();
        match err {
            Error::PrecisionExhausted { best } => {
                assert_eq!(best.nodes_used, 512);
                assert_relative_eq!(best.value, 0.0027017853209630744, max_relative = 1e-12);
            }
            other => panic!("expected precision exhaustion, got {other:?}"),
        }
    }

    #[test]
    fn gegenbauer_route_frozen_values() {
        for (lambda, delta, n, t, want) in [
            (2.0, 3.0, 1, PI / 2.0, 0.21142896390415031),
            (0.5, 3.0, 4, PI, 0.33510321638291128),
            (1.5, 2.0, 9, 2.0, 0.012500153941741915),
            (1.0, 2.0, 3, 1.1, 0.078420332734075694),
            (1.0, 2.0, 2, 0.001, 9.9999952380963492e-17),
            (2.0, 4.0, 0, PI, 10.736663116288658),
            (3.0, 4.0, 3, 1.1, 0.019656482298142850),
            (4.0, 5.0, 5, 2.3, 1.7666594401879554),
            (3.0, 4.0, 2, 0.001, 9.0909020979048766e-36),
            (4.0, 5.0, 1, 0.002, 7.2721993216414730e-42),
        ] {
            let via = f_integral_gegenbauer(lambda, delta, n, t).unwrap();
            assert_relative_eq!(via.value, want, max_relative = 1e-11);
            let direct = f_integral_gegenbauer_direct(lambda, delta, n, t).unwrap();
            assert_relative_eq!(direct.value, want, max_relative = 1e-11);
        }
    }

    #[test]
    fn gegenbauer_spec_case() {
        let r = f_integral_gegenbauer(1.0, 2.0, 0, PI).unwrap();
        assert_relative_eq!(r.value, PI.powi(3) / 6.0 - PI / 4.0, max_relative = 1e-13);
        assert!(matches!(
            f_integral_gegenbauer(0.0, 2.0, 0, PI),
            Err(Error::UnsupportedParameter(_))
        ));
    }

    #[test]
    fn chebyshev_closed_form_matches_quadrature() {
        for n in [0usize, 1, 2, 5, 17, 50] {
            for t in [0.3, 1.0, 2.2, PI] {
                let r = f_integral(q(0.0, 0.0, 1.0, n, 0, t)).unwrap();
                assert_relative_eq!(
                    r.value,
                    chebyshev_closed_form(n, t),
                    epsilon = 1e-12,
                    max_relative = 1e-10
                );
            }
        }
    }

    #[test]
    fn closed_form_examples() {
        assert_relative_eq!(bracket_coefficient(1, 0, 1), 0.5, max_relative = 1e-14);
        let v = f_closed_form(1, Parity::Odd, 0, PI).unwrap();
        assert_relative_eq!(v, PI.powi(3) / 6.0 - PI / 4.0, max_relative = 1e-13);
        // vanishes as t -> 0 (series path well below the cutover)
        let tiny = f_closed_form(1, Parity::Odd, 3, 1e-8).unwrap();
        assert!(tiny.abs() < 1e-30 && tiny > 0.0);
    }

    #[test]
    fn closed_form_tracks_quadrature_at_moderate_t() {
        for mu in [1u32, 2] {
            for n in [0usize, 1, 7, 23] {
                for t in [0.4, 1.3, PI] {
                    let lam_odd = (2 * mu - 1) as f64;
                    let odd = f_closed_form(mu, Parity::Odd, n, t).unwrap();
                    let odd_q = f_integral_gegenbauer(lam_odd, lam_odd + 1.0, n, t).unwrap();
                    assert_relative_eq!(odd, odd_q.value, epsilon = 1e-10, max_relative = 1e-8);
                    let lam_even = (2 * mu) as f64;
                    let even = f_closed_form(mu, Parity::Even, n, t).unwrap();
                    let even_q = f_integral_gegenbauer(lam_even, lam_even + 1.0, n, t).unwrap();
                    assert_relative_eq!(even, even_q.value, epsilon = 1e-10, max_relative = 1e-8);
                }
            }
        }
    }

    #[test]
    fn closed_form_series_path_small_t() {
        let t = 1e-3;
        for mu in [1u32, 2] {
            for n in [0usize, 1, 7, 40] {
                let lam_odd = (2 * mu - 1) as f64;
                let odd = f_closed_form(mu, Parity::Odd, n, t).unwrap();
                let odd_q = f_integral_gegenbauer(lam_odd, lam_odd + 1.0, n, t).unwrap();
                assert_relative_eq!(odd, odd_q.value, max_relative = 1e-6);
                let lam_even = (2 * mu) as f64;
                let even = f_closed_form(mu, Parity::Even, n, t).unwrap();
                let even_q = f_integral_gegenbauer(lam_even, lam_even + 1.0, n, t).unwrap();
                assert_relative_eq!(even, even_q.value, max_relative = 1e-6);
            }
        }
    }

    #[test]
    fn fractional_integral_polynomial_cases() {
        let step = 1e-3;
        let grid: Vec<f64> = (0..=2000).map(|j| step * j as f64).collect();
        let ones = vec![1.0; grid.len()];
        let l1 = riemann_liouville(&ones, step, 1.0).unwrap();
        assert_relative_eq!(l1[2000], 2.0, max_relative = 1e-12);
        let l2 = riemann_liouville(&ones[..=1000], step, 2.0).unwrap();
        assert_relative_eq!(l2[1000], 0.5, max_relative = 1e-12);
        let lin: Vec<f64> = grid[..=1000].to_vec();
        let l1lin = riemann_liouville(&lin, step, 1.0).unwrap();
        assert_relative_eq!(l1lin[1000], 0.5, max_relative = 1e-12);
        assert!(riemann_liouville(&ones, step, 0.0).is_err());
    }

    #[test]
    fn raising_coefficients_and_identities() {
        assert_relative_eq!(raise_coeff_a(1.0, 0.0, 0), 0.25);
        assert_relative_eq!(raise_coeff_b(1.0, 0.0, 0), 0.5);
        assert_eq!(beta_raise(0.0, 0.0, 1.0, 0.0, 0), 0.0);
        assert_eq!(alpha_raise(0.0, 0.0, 1.0, 0.0, 0), 0.0);

        let (alpha, beta, delta, t) = (0.0, 0.0, 1.0, PI);
        for n in [0usize, 1, 4] {
            let f_n = f_integral(q(alpha, beta, delta, n, 0, t)).unwrap().value;
            let f_n1 = f_integral(q(alpha, beta, delta, n + 1, 0, t)).unwrap().value;
            let raised = beta_raise(f_n, f_n1, alpha, beta, n);
            let direct = f_integral(q(alpha, beta + 1.0, delta, n, 0, t)).unwrap().value;
            assert_relative_eq!(raised, direct, epsilon = 1e-10);
            let a_raised = alpha_raise(f_n, f_n1, alpha, beta, n);
            let a_direct = f_integral(q(alpha + 1.0, beta, delta, n, 0, t)).unwrap().value;
            assert_relative_eq!(a_raised, a_direct, epsilon = 1e-10);
            assert_relative_eq!(raised + a_raised, f_n, epsilon = 1e-12);
        }
    }

    #[test]
    fn quadratic_transform_agrees() {
        assert_relative_eq!(quadratic_coefficient(0.7, 0), 1.0);
        assert_relative_eq!(quadratic_coefficient(1.0, 1), 0.8, max_relative = 1e-14);
        let (lhs, rhs) = quadratic_transform_pair(1.0, 2.0, 1, PI).unwrap();
        assert_relative_eq!(lhs.value, rhs.value, epsilon = 1e-10);
        let (lhs, rhs) = dyadic_transform_pair(1.0, 2.0, 2, 2, PI / 2.0).unwrap();
        assert_relative_eq!(lhs.value, rhs.value, epsilon = 1e-12);
    }

    #[test]
    fn bessel_moment_frozen_values() {
        for (alpha, mu, x, want) in [
            (0.5, 1.0, PI, 5.0132565492620010),
            (0.5, 1.0, 2.0 * PI, 30.079539295572006),
            (1.0, 0.75, 10.0, 53.105709940203691),
            (0.5, 0.5, 5.0, 4.9074552554733644),
        ] {
            let r = bessel_limit_integral(alpha, mu, x).unwrap();
            assert_relative_eq!(r.value, want, max_relative = 1e-12);
        }
        assert!(bessel_limit_integral(0.0, 0.25, 1.0).is_err());
        assert!(bessel_limit_integral(1.0, 1.5, 1.0).is_err());
    }

    #[test]
    fn bessel_limit_target_frozen_values() {
        let r = bessel_limit_target(1.0, 2.0, 1, PI / 2.0).unwrap();
        assert_relative_eq!(r.value, 0.079885100262247166, max_relative = 1e-12);
        let r = bessel_limit_target(1.0, 2.0, 4, PI).unwrap();
        assert_relative_eq!(r.value, 0.041541887130598032, max_relative = 1e-12);
    }

    #[test]
    fn dyadic_sequence_approaches_target() {
        let target = bessel_limit_target(1.0, 2.0, 2, PI / 2.0).unwrap().value;
        let seq = bessel_limit_sequence(1.0, 2.0, 2, PI / 2.0, 4..=8).unwrap();
        let gaps: Vec<f64> = seq.iter().map(|(_, v)| (v - target).abs()).collect();
        for w in gaps.windows(2) {
            assert!(w[1] < w[0], "gap sequence must decrease: {gaps:?}");
        }
    }

    #[test]
    fn rounding_floor_scales_sanely() {
        let small = rounding_floor(&q(1.0, 1.0, 2.0, 5, 0, 0.01));
        let big = rounding_floor(&q(1.0, 1.0, 2.0, 5, 0, PI));
        assert!(small < big && small > 0.0);
        let v = f_integral(q(1.0, 1.0, 2.0, 0, 0, PI)).unwrap().value;
        assert!(rounding_floor(&q(1.0, 1.0, 2.0, 0, 0, PI)) < 1e-10 * v.abs());
    }
}
