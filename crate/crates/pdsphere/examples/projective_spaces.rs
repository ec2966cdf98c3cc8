//! The full space catalog: expansion parameters, strictness thresholds, and
//! positive definiteness on synthetic geodesic-circle point sets for the
//! spaces without a unit-vector model.

use pdsphere::kernels::{schoenberg_coeffs, KernelSpec, SpaceKind, SpaceSpec};
use pdsphere::verify::strict_pd_test;
use std::f64::consts::PI;

fn main() -> pdsphere::Result<()> {
    let spaces = [
        SpaceKind::Sphere(4),
        SpaceKind::RealProjective(3),
        SpaceKind::RealProjective(4),
        SpaceKind::ComplexProjective(4),
        SpaceKind::ComplexProjective(6),
        SpaceKind::QuaternionicProjective(8),
        SpaceKind::CayleyPlane,
    ];
    println!("{:>28} {:>6} {:>6} {:>11} {:>10}",
        "space", "alpha", "beta", "parity", "threshold");
    for kind in spaces {
        let s = SpaceSpec::new(kind)?;
        println!("{:>28} {:>6} {:>6} {:>11} {:>10}",
            kind.to_string(),
            s.alpha(),
            s.beta(),
            if s.parity_even_only() { "even only" } else { "all" },
            s.spd_delta_threshold());
    }

    println!("\nGram tests on geodesic-circle point sets (N = 60):");
    println!("{:>28} {:>6} {:>13} {:>13}", "space", "delta", "min eig", "threshold");
    for kind in spaces.into_iter().skip(1) {
        let space = SpaceSpec::new(kind)?;
        let spec = KernelSpec::new(PI / 2.0, space.spd_delta_threshold(), space)?;
        let r = strict_pd_test(&spec, 60, 5)?;
        println!("{:>28} {:>6} {:>13.3e} {:>13.3e}",
            kind.to_string(), spec.delta, r.min_eigenvalue, r.threshold);
        assert!(r.strictly_pd);
    }

    // on real projective space only even-degree coefficients survive
    let space = SpaceSpec::new(SpaceKind::RealProjective(3))?;
    let spec = KernelSpec::new(PI / 2.0, 2.0, space)?;
    let cv = schoenberg_coeffs(&spec, 8)?;
    println!("\nreal-projective(3) coefficients (odd ones vanish):");
    for (n, a) in cv.coeffs.iter().enumerate() {
        println!("  a_{n} = {a:.6e}");
    }
    Ok(())
}
