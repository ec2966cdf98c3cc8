//! Truncated-power kernels `(t - theta)_+^delta` on spheres and related
//! homogeneous spaces, driven by integrals of Jacobi polynomials.
//!
//! The crate is organized around one family of integrals,
//!
//! ```text
//! F_n(t) = integral_0^t (t - theta)^delta P_n^(alpha-1/2, beta-1/2)(cos theta)
//!          sin(theta/2)^(2 alpha) cos(theta/2)^(2 beta) d theta,
//! ```
//!
//! whose signs decide whether the kernel is (strictly) positive definite.
//! Modules:
//!
//! * [`special`]: Jacobi/Gegenbauer polynomials, orthogonality norms, Bessel J.
//! * [`integrals`]: quadrature and closed forms for `F_n` and its transforms.
//! * [`kernels`]: kernel evaluation, Schoenberg coefficients, Gram matrices,
//!   and the catalog of supported spaces.
//! * [`verify`]: positivity scans, strict-PD eigenvalue tests, decay fits,
//!   and the Polya criterion checker.
//! * [`report`]: CSV/JSON serialization with config echo headers.
//! * [`cli`]: the `pdsphere` command-line front end.
//!
//! Start with the `examples/` directory; each file exercises one capability
//! end to end.

pub mod cli;
mod dd;
mod error;
pub mod integrals;
pub mod kernels;
mod quad;
pub mod report;
pub mod special;
pub mod verify;

pub use error::{Error, Result};
