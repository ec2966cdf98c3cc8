//! Evaluate single members of the integral family and show how the
//! node-doubling ladder reports its accuracy.

use pdsphere::integrals::{f_integral, f_integral_tol, IntegralQuery};
use std::f64::consts::PI;

fn main() -> pdsphere::Result<()> {
    println!("{:>5} {:>5} {:>5} {:>4} {:>10} {:>24} {:>12} {:>6}",
        "alpha", "beta", "delta", "n", "t", "value", "err_bound", "nodes");
    let cases = [
        (0.0, 0.0, 1.0, 0, 1.0),
        (0.0, 0.0, 1.0, 3, PI),
        (1.0, 0.0, 2.0, 5, PI / 2.0),
        (1.5, 1.5, 3.0, 12, PI / 3.0),
        (0.5, 0.5, 2.0, 0, PI),
        (4.0, 4.0, 5.0, 40, PI),
    ];
    for (alpha, beta, delta, n, t) in cases {
        let q = IntegralQuery::new(alpha, beta, delta, n, 0, t)?;
        let r = f_integral(q)?;
        println!("{alpha:>5} {beta:>5} {delta:>5} {n:>4} {t:>10.6} {:>24.16e} {:>12.3e} {:>6}",
            r.value, r.err_bound, r.nodes_used);
    }

    // the t = pi endpoint of a half-integer weight goes through the
    // singular-endpoint rule; (1/2, 1/2, 2) at n = 0 equals (pi^2 - 4) / 2
    let q = IntegralQuery::new(0.5, 0.5, 2.0, 0, 0, PI)?;
    let r = f_integral(q)?;
    let exact = (PI * PI - 4.0) / 2.0;
    println!("\nendpoint check: value - (pi^2 - 4)/2 = {:+.3e}", r.value - exact);

    // a looser tolerance converges on a coarser rung of the ladder
    let q = IntegralQuery::new(2.0, 1.0, 3.0, 30, 0, PI)?;
    for tol in [1e-6, 1e-12] {
        let r = f_integral_tol(q, tol)?;
        println!("tol {tol:>8.0e}: {} nodes, err bound {:.3e}", r.nodes_used, r.err_bound);
    }
    Ok(())
}
