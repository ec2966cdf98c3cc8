//! The identity calculus tying family members together: parameter raising,
//! the two-route sum identity, the quadratic and dyadic transforms, and
//! exponent transport through the fractional integral.

use pdsphere::integrals::{
    alpha_raise, beta_raise, dyadic_transform_pair, f_batch, f_integral,
    quadratic_transform_pair, riemann_liouville, IntegralQuery, DEFAULT_TOL,
};

fn ln_gamma(x: f64) -> f64 {
    libm::lgamma(x)
}

fn main() -> pdsphere::Result<()> {
    let (alpha, beta, delta, t) = (1.0, 1.0, 3.0, 2.0);
    let n_max = 12;
    let base = f_batch(alpha, beta, delta, 0, t, n_max + 1, DEFAULT_TOL)?;
    let beta_up = f_batch(alpha, beta + 1.0, delta, 0, t, n_max, DEFAULT_TOL)?;
    let alpha_up = f_batch(alpha + 1.0, beta, delta, 0, t, n_max, DEFAULT_TOL)?;

    let mut worst_raise = 0.0f64;
    let mut worst_sum = 0.0f64;
    for n in 0..=n_max {
        let b = beta_raise(base[n].value, base[n + 1].value, alpha, beta, n);
        let a = alpha_raise(base[n].value, base[n + 1].value, alpha, beta, n);
        worst_raise = worst_raise
            .max((b - beta_up[n].value).abs())
            .max((a - alpha_up[n].value).abs());
        worst_sum = worst_sum.max((alpha_up[n].value + beta_up[n].value - base[n].value).abs());
    }
    println!("raising identities, (alpha, beta, delta, t) = ({alpha}, {beta}, {delta}, {t}):");
    println!("  worst raising residual: {worst_raise:.3e}");
    println!("  worst sum-identity residual: {worst_sum:.3e}");

    // quadratic transform relates the one-sided family to the symmetric one
    // at half the angle; its dyadic form stays at the same angle
    let mut worst_quad = 0.0f64;
    let mut worst_dyadic = 0.0f64;
    for n in 0..6 {
        let (lhs, rhs) = quadratic_transform_pair(2.0, 3.0, n, 2.8)?;
        worst_quad = worst_quad.max((lhs.value - rhs.value).abs());
        let (lhs, rhs) = dyadic_transform_pair(2.0, 3.0, n, 1, 2.8)?;
        worst_dyadic = worst_dyadic.max((lhs.value - rhs.value).abs());
    }
    println!("quadratic transform (alpha = 2, delta = 3, t = 2.8):");
    println!("  worst level-0 residual: {worst_quad:.3e}");
    println!("  worst level-1 residual: {worst_dyadic:.3e}");

    // exponent transport: the fractional integral of order mu carries the
    // family from exponent delta to delta + mu, up to a Gamma-ratio factor
    let (delta_lo, mu, n) = (1.0, 1.5, 3usize);
    let steps = 4000usize;
    let step = t / steps as f64;
    let mut samples = vec![0.0; steps + 1];
    for (j, s) in samples.iter_mut().enumerate().skip(1) {
        let q = IntegralQuery::new(alpha, beta, delta_lo, n, 0, j as f64 * step)?;
        *s = f_integral(q)?.value;
    }
    let lifted = riemann_liouville(&samples, step, mu)?;
    let factor = (ln_gamma(delta_lo + mu + 1.0) - ln_gamma(delta_lo + 1.0)).exp();
    let q = IntegralQuery::new(alpha, beta, delta_lo + mu, n, 0, t)?;
    let direct = f_integral(q)?.value;
    println!("exponent transport delta {delta_lo} -> {} at n = {n}:", delta_lo + mu);
    println!("  transported {:.10e}", factor * lifted[steps]);
    println!("  direct      {:.10e}", direct);
    println!("  rel diff    {:.2e}", ((factor * lifted[steps] - direct) / direct).abs());
    Ok(())
}
