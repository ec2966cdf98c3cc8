//! Expansion coefficients of a truncated-power kernel and how well the
//! partial expansion reconstructs it.

use pdsphere::kernels::{
    expansion_eval, kernel_eval, schoenberg_coeffs, KernelSpec, SpaceKind, SpaceSpec,
};
use std::f64::consts::PI;

fn main() -> pdsphere::Result<()> {
    let space = SpaceSpec::new(SpaceKind::Sphere(3))?;
    let spec = KernelSpec::new(PI, 2.0, space)?;
    let cv = schoenberg_coeffs(&spec, 12)?;
    println!("(pi - theta)^2 on the two-sphere, leading coefficients:");
    for (n, (a, e)) in cv.coeffs.iter().zip(&cv.err_bounds).enumerate() {
        println!("  a_{n:<2} = {a:>22.15e}   err {e:.1e}");
    }
    println!("  a_0 - (pi^2 - 4)/2 = {:+.3e}", cv.coeffs[0] - (PI * PI - 4.0) / 2.0);

    let space = SpaceSpec::new(SpaceKind::Sphere(4))?;
    let spec = KernelSpec::new(PI / 2.0, 2.0, space)?;
    println!("\nreconstruction of (pi/2 - theta)_+^2 on the three-sphere:");
    println!("{:>6} {:>14} {:>14} {:>10}", "n_max", "kernel", "series", "diff");
    let theta = PI / 4.0;
    for n_max in [10usize, 40, 160] {
        let cv = schoenberg_coeffs(&spec, n_max)?;
        let direct = kernel_eval(&spec, theta)?;
        let series = expansion_eval(&cv, theta)?;
        println!("{n_max:>6} {direct:>14.9} {series:>14.9} {:>10.2e}", (direct - series).abs());
    }
    Ok(())
}
