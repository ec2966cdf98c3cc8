//! The convexity certificate: a quick sufficient test for positive
//! definiteness on spheres that needs only derivative behaviour of the
//! kernel profile, no expansion.

use pdsphere::verify::{polya_check, PolyaInput, PolyaVerdict};
use std::f64::consts::PI;

fn main() -> pdsphere::Result<()> {
    let cases: [(&str, Box<dyn Fn(f64) -> f64>); 4] = [
        ("(pi - theta)^3", Box::new(|th| (PI - th).powi(3))),
        ("(pi - theta)^2", Box::new(|th| (PI - th).powi(2))),
        ("(pi - theta)^4", Box::new(|th| (PI - th).powi(4))),
        ("zero function", Box::new(|_| 0.0)),
    ];
    println!("certificate on the two-sphere (d = 3):");
    for (name, g) in &cases {
        let verdict = polya_check(PolyaInput::Function(g.as_ref()), 3)?;
        println!("  {name:<16} -> {verdict}");
    }

    // the same profile can certify on one sphere and fail on a bigger one:
    // higher dimension demands one more vanishing derivative at pi
    println!("\n(pi - theta)^3 across dimensions:");
    let cubic = |th: f64| (PI - th).powi(3);
    for d in [3u32, 4, 5, 6] {
        let verdict = polya_check(PolyaInput::Function(&cubic), d)?;
        println!("  d = {d} -> {verdict}");
    }

    // sampled input works too; the grid must resolve the derivatives
    let n = 1024;
    let step = PI / n as f64;
    let samples: Vec<f64> = (0..=n).map(|i| (PI - i as f64 * step).powi(3)).collect();
    let verdict = polya_check(PolyaInput::Samples { values: &samples, step }, 3)?;
    println!("\nsampled cubic profile -> {verdict}");
    match verdict {
        PolyaVerdict::StrictlyPositiveDefinite => Ok(()),
        other => panic!("expected a strict verdict, got {other}"),
    }
}
