//! Closed forms for the low half-integer Gegenbauer cases against blind
//! quadrature, including the cancellation-safe series path near t = 0.

use pdsphere::integrals::{f_closed_form, f_integral_gegenbauer, Parity};
use std::f64::consts::PI;

fn main() -> pdsphere::Result<()> {
    // odd case: lambda = 2 mu - 1, delta = 2 mu; even case: lambda = 2 mu,
    // delta = 2 mu + 1
    println!("{:>3} {:>6} {:>4} {:>10} {:>24} {:>24} {:>10}",
        "mu", "parity", "n", "t", "closed", "quadrature", "diff");
    for mu in [1u32, 2] {
        for parity in [Parity::Odd, Parity::Even] {
            let (lambda, delta) = match parity {
                Parity::Odd => (2.0 * mu as f64 - 1.0, 2.0 * mu as f64),
                Parity::Even => (2.0 * mu as f64, 2.0 * mu as f64 + 1.0),
            };
            for n in [0usize, 1, 6, 25] {
                for t in [PI / 8.0, PI / 2.0, PI] {
                    let c = f_closed_form(mu, parity, n, t)?;
                    let q = f_integral_gegenbauer(lambda, delta, n, t)?;
                    let tag = match parity { Parity::Odd => "odd", Parity::Even => "even" };
                    println!("{mu:>3} {tag:>6} {n:>4} {t:>10.6} {c:>24.16e} {:>24.16e} {:>10.2e}",
                        q.value, (c - q.value).abs());
                }
            }
        }
    }

    // near zero the bracket terms cancel to ~t^(2 delta + ...); the series
    // path keeps full relative accuracy where naive summation loses it all
    println!("\nsmall-t relative accuracy (t = 1e-3):");
    for (mu, parity, n) in [(1u32, Parity::Odd, 4usize), (2, Parity::Even, 3)] {
        let (lambda, delta) = match parity {
            Parity::Odd => (2.0 * mu as f64 - 1.0, 2.0 * mu as f64),
            Parity::Even => (2.0 * mu as f64, 2.0 * mu as f64 + 1.0),
        };
        let t = 1e-3;
        let c = f_closed_form(mu, parity, n, t)?;
        let q = f_integral_gegenbauer(lambda, delta, n, t)?;
        println!("  mu = {mu}, n = {n}: closed {c:.10e}, rel diff {:.2e}",
            ((c - q.value) / q.value).abs());
    }
    Ok(())
}
