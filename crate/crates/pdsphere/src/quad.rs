//! Gauss-Jacobi quadrature rules on [-1, 1] with weight
//! `(1-x)^a (1+x)^b`, built by the Golub-Welsch eigenvalue method and cached
//! by `(a, b, n)` since scans reuse the same rule thousands of times.

use crate::error::{Error, Result};
use nalgebra::DMatrix;
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

#[derive(Debug)]
pub(crate) struct GaussJacobi {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

/// Zeroth moment `mu_0 = 2^(a+b+1) B(a+1, b+1)` of the weight.
pub(crate) fn mu0(a: f64, b: f64) -> f64 {
    ((a + b + 1.0) * std::f64::consts::LN_2 + crate::special::ln_gamma(a + 1.0)
        + crate::special::ln_gamma(b + 1.0)
        - crate::special::ln_gamma(a + b + 2.0))
    .exp()
}

fn build(n: usize, a: f64, b: f64) -> Result<GaussJacobi> {
    if n == 0 {
        return Err(Error::Domain("quadrature rule needs at least 1 node".into()));
    }
    if !(a > -1.0) || !(b > -1.0) || a + b <= -1.0 {
        return Err(Error::Domain(format!(
            "Gauss-Jacobi weight exponents out of range: ({a}, {b})"
        )));
    }
    // Jacobi matrix of the monic recurrence: diagonal alpha_k, off-diagonal
    // sqrt(beta_k); nodes are its eigenvalues, weights mu_0 * v_0^2.
    let mut m = DMatrix::<f64>::zeros(n, n);
    m[(0, 0)] = (b - a) / (a + b + 2.0);
    for k in 1..n {
        let kf = k as f64;
        let s = 2.0 * kf + a + b;
        m[(k, k)] = (b * b - a * a) / (s * (s + 2.0));
        let num = 4.0 * kf * (kf + a) * (kf + b) * (kf + a + b);
        let den = s * s * (s + 1.0) * (s - 1.0);
        let off = (num / den).sqrt();
        m[(k, k - 1)] = off;
        m[(k - 1, k)] = off;
    }
    let eig = m.symmetric_eigen();
    let mu = mu0(a, b);
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| eig.eigenvalues[i].total_cmp(&eig.eigenvalues[j]));
    let mut nodes = Vec::with_capacity(n);
    let mut weights = Vec::with_capacity(n);
    for &i in &order {
        nodes.push(eig.eigenvalues[i]);
        let v0 = eig.eigenvectors[(0, i)];
        weights.push(mu * v0 * v0);
    }
    Ok(GaussJacobi { nodes, weights })
}

type Cache = Mutex<HashMap<(u64, u64, usize), Arc<GaussJacobi>>>;

fn cache() -> &'static Cache {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

pub(crate) fn rule(n: usize, a: f64, b: f64) -> Result<Arc<GaussJacobi>> {
    let key = (a.to_bits(), b.to_bits(), n);
    if let Some(r) = cache().lock().unwrap().get(&key) {
        return Ok(Arc::clone(r));
    }
    let built = Arc::new(build(n, a, b)?);
    cache()
        .lock()
        .unwrap()
        .entry(key)
        .or_insert_with(|| Arc::clone(&built));
    Ok(built)
}
