//! Structural invariants checked on randomized inputs, plus a few dense
//! deterministic sweeps. Every identity here is verified against a route
//! that does not share code with the implementation under test.

use std::f64::consts::PI;

use pdsphere::integrals::{
    self, chebyshev_closed_form, dyadic_transform_pair, f_batch, f_integral,
    f_integral_gegenbauer, quadratic_coefficient, quadratic_transform_pair, riemann_liouville,
    IntegralQuery, DEFAULT_TOL,
};
use pdsphere::kernels::{
    gram_matrix, geodesic_distance, schoenberg_coeffs, CoeffVector, KernelSpec, SpaceKind,
    SpaceSpec,
};
use pdsphere::report::{read_coeffs_csv, write_coeffs_csv};
use pdsphere::special::{
    bessel_j, gegenbauer_eval, jacobi_eval, jacobi_norm_h, JacobiParam,
};
use pdsphere::verify::{effective_err, sample_sphere};
use proptest::prelude::*;

fn close(lhs: f64, rhs: f64, tol: f64) -> bool {
    (lhs - rhs).abs() <= tol
}

// ---------------------------------------------------------------------------
// Orthogonal polynomial layer.
// ---------------------------------------------------------------------------

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn jacobi_reflection_swaps_parameters(
        a in -0.9f64..4.0,
        b in -0.9f64..4.0,
        n in 0usize..=40,
        x in -1.0f64..=1.0,
    ) {
        let lhs = jacobi_eval(a, b, n, -x).unwrap();
        let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
        let rhs = sign * jacobi_eval(b, a, n, x).unwrap();
        let tol = 1e-10 * (1.0 + lhs.abs() + rhs.abs());
        prop_assert!(close(lhs, rhs, tol), "P({a},{b},{n},-x) = {lhs} vs {rhs}");
    }

    #[test]
    fn jacobi_endpoint_matches_gamma_ratio(
        a in -0.9f64..4.0,
        b in -0.9f64..4.0,
        n in 0usize..=200,
    ) {
        let got = jacobi_eval(a, b, n, 1.0).unwrap();
        let nf = n as f64;
        let want =
            (libm::lgamma(nf + a + 1.0) - libm::lgamma(a + 1.0) - libm::lgamma(nf + 1.0)).exp();
        prop_assert!(
            close(got, want, 1e-11 * (1.0 + want.abs())),
            "endpoint value {got} vs binomial {want} at ({a},{b},{n})"
        );
    }

    #[test]
    fn gegenbauer_matches_reference_recurrence(
        lambda in 0.3f64..3.0,
        n in 0usize..=100,
        x in -1.0f64..=1.0,
    ) {
        // Independent route: the classical three-term recurrence, seeded at
        // C_0 = 1, C_1 = 2 lambda x.
        let mut prev = 1.0;
        let mut cur = 2.0 * lambda * x;
        if n >= 2 {
            for k in 1..n {
                let kf = k as f64;
                let next =
                    (2.0 * (kf + lambda) * x * cur - (kf + 2.0 * lambda - 1.0) * prev) / (kf + 1.0);
                prev = cur;
                cur = next;
            }
        }
        let want = if n == 0 { 1.0 } else { cur };
        let got = gegenbauer_eval(lambda, n, x).unwrap();
        prop_assert!(
            close(got, want, 1e-10 * (1.0 + want.abs())),
            "C_{n}^{lambda}({x}) = {got} vs recurrence {want}"
        );
    }

    #[test]
    fn trigonometric_special_cases(n in 0usize..=60, theta in 0.0f64..PI) {
        // P_n^(-1/2,-1/2)(cos t) is proportional to cos(n t).
        let scaled = jacobi_eval(-0.5, -0.5, n, theta.cos()).unwrap()
            / jacobi_eval(-0.5, -0.5, n, 1.0).unwrap();
        let want = (n as f64 * theta).cos();
        prop_assert!(
            close(scaled, want, 1e-11 * (n as f64 + 1.0)),
            "cos({n} t) route gave {scaled} vs {want}"
        );

        // C_n^1(cos t) = sin((n+1) t) / sin t away from the poles.
        if theta.sin() > 0.15 {
            let got = gegenbauer_eval(1.0, n, theta.cos()).unwrap();
            let ref_u = ((n as f64 + 1.0) * theta).sin() / theta.sin();
            prop_assert!(
                close(got, ref_u, 1e-10 * (n as f64 + 1.0)),
                "U_{n}(cos t) = {got} vs {ref_u}"
            );
        }
    }
}

/// Tanh-sinh rule on (0, pi) for integrands with algebraic endpoint factors.
/// `f` receives the fraction q = theta / pi and its complement computed
/// without cancellation.
fn tanh_sinh<F: Fn(f64, f64) -> f64>(f: &F, step: f64) -> f64 {
    let cutoff = (4.0 / step).round() as i64;
    let mut acc = 0.0;
    for j in -cutoff..=cutoff {
        let u = j as f64 * step;
        let w = 0.5 * PI * u.sinh();
        let q = 1.0 / (1.0 + (-2.0 * w).exp());
        let q_comp = 1.0 / (1.0 + (2.0 * w).exp());
        let jac = PI * PI * u.cosh() * q * q_comp;
        if jac > 0.0 {
            acc += f(q, q_comp) * jac;
        }
    }
    acc * step
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10))]

    #[test]
    fn norm_matches_direct_quadrature(
        alpha in 0.0f64..3.0,
        beta in 0.0f64..3.0,
        n in 0usize..=32,
    ) {
        let p = JacobiParam::new(alpha, beta).unwrap();
        let h = jacobi_norm_h(p, n);
        // Independent route on the theta-form integrand. Fractional weight
        // exponents make the endpoint derivatives blow up, so an equispaced
        // rule is useless here; the tanh-sinh transform restores spectral
        // accuracy. The full-interval norm is twice the angular one.
        let integrand = |q: f64, q_comp: f64| {
            // theta = pi q; half-angle factors from whichever side is small.
            let s = (0.5 * PI * q).sin();
            let c = (0.5 * PI * q_comp).sin();
            let x = 1.0 - 2.0 * s * s;
            let v = jacobi_eval(alpha - 0.5, beta - 0.5, n, x).unwrap();
            v * v * s.powf(2.0 * alpha) * c.powf(2.0 * beta)
        };
        let coarse = tanh_sinh(&integrand, 1.0 / 256.0);
        let direct = tanh_sinh(&integrand, 1.0 / 512.0);
        prop_assert!(
            close(coarse, direct, 1e-11 * (1.0 + direct.abs())),
            "reference rule not converged: {coarse} vs {direct} at ({alpha},{beta},{n})"
        );
        prop_assert!(
            close(h / 2.0, direct, 1e-9 * (1.0 + h)),
            "norm {h} / 2 vs quadrature {direct} at ({alpha},{beta},{n})"
        );
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn half_integer_bessel_closed_forms(z in 1.0f64..55.0) {
        let c = (2.0 / (PI * z)).sqrt();
        let j_half = c * z.sin();
        let j_three_half = c * (z.sin() / z - z.cos());
        let j_five_half = c * ((3.0 / (z * z) - 1.0) * z.sin() - 3.0 * z.cos() / z);
        prop_assert!(close(bessel_j(0.5, z).unwrap(), j_half, 1e-12));
        prop_assert!(close(bessel_j(1.5, z).unwrap(), j_three_half, 1e-12));
        prop_assert!(close(bessel_j(2.5, z).unwrap(), j_five_half, 1e-12));
    }
}

// ---------------------------------------------------------------------------
// Fractional integration operator.
// ---------------------------------------------------------------------------

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn fractional_integrals_compose(
        c0 in -1.0f64..1.0,
        c1 in -1.0f64..1.0,
        c2 in -1.0f64..1.0,
        d1 in 0.6f64..1.8,
        d2 in 0.6f64..1.8,
    ) {
        let m = 1600usize;
        let step = 2.0 / m as f64;
        let values: Vec<f64> = (0..=m)
            .map(|j| {
                let x = j as f64 * step;
                c0 + c1 * x + c2 * x * x
            })
            .collect();
        let once = riemann_liouville(&values, step, d1).unwrap();
        let composed = riemann_liouville(&once, step, d2).unwrap();
        let direct = riemann_liouville(&values, step, d1 + d2).unwrap();
        for idx in [m / 2, m] {
            let tol = 1e-4 * (1.0 + direct[idx].abs());
            prop_assert!(
                close(composed[idx], direct[idx], tol),
                "semigroup gap {} vs {} at index {idx}",
                composed[idx],
                direct[idx]
            );
        }
    }
}

#[test]
fn fractional_transport_raises_the_exponent() {
    // Raising delta by 2 equals applying the order-2 operator and the
    // Gamma(delta + 3) / Gamma(delta + 1) factor, here with delta = 1.
    let n = 3;
    let m = 2000usize;
    let step = PI / m as f64;
    let mut values = vec![0.0; m + 1];
    for (j, slot) in values.iter_mut().enumerate().skip(1) {
        let t = j as f64 * step;
        *slot = f_integral(IntegralQuery { alpha: 1.0, beta: 1.0, delta: 1.0, n, m: 0, t })
            .unwrap()
            .value;
    }
    let lifted = riemann_liouville(&values, step, 2.0).unwrap();
    let factor = 6.0; // Gamma(4) / Gamma(2)
    let direct = f_integral(IntegralQuery { alpha: 1.0, beta: 1.0, delta: 3.0, n, m: 0, t: PI })
        .unwrap()
        .value;
    let got = factor * lifted[m];
    assert!(
        close(got, direct, 1e-5 * direct.abs()),
        "transport route {got} vs direct {direct}"
    );
}

// ---------------------------------------------------------------------------
// Integral family identities.
// ---------------------------------------------------------------------------

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn raising_identities_close_pointwise(
        alpha in 0.0f64..3.0,
        beta in 0.0f64..3.0,
        delta in 1.0f64..4.0,
        n in 0usize..=15,
        t in 0.3f64..PI,
    ) {
        let base = f_batch(alpha, beta, delta, 0, t, n + 1, DEFAULT_TOL).unwrap();
        let up_b = f_batch(alpha, beta + 1.0, delta, 0, t, n, DEFAULT_TOL).unwrap();
        let up_a = f_batch(alpha + 1.0, beta, delta, 0, t, n, DEFAULT_TOL).unwrap();

        let err = |a: f64, b: f64, k: usize, e: f64| {
            effective_err(&IntegralQuery { alpha: a, beta: b, delta, n: k, m: 0, t }, e)
        };
        let e0 = err(alpha, beta, n, base[n].err_bound);
        let e1 = err(alpha, beta, n + 1, base[n + 1].err_bound);
        let eb = err(alpha, beta + 1.0, n, up_b[n].err_bound);
        let ea = err(alpha + 1.0, beta, n, up_a[n].err_bound);

        let pred_b = integrals::beta_raise(base[n].value, base[n + 1].value, alpha, beta, n);
        prop_assert!(
            close(pred_b, up_b[n].value, 10.0 * (e0 + e1 + eb) + 1e-14),
            "beta raise residual {} at ({alpha},{beta},{delta},{n},{t})",
            pred_b - up_b[n].value
        );

        let pred_a = integrals::alpha_raise(base[n].value, base[n + 1].value, alpha, beta, n);
        prop_assert!(
            close(pred_a, up_a[n].value, 10.0 * (e0 + e1 + ea) + 1e-14),
            "alpha raise residual {} at ({alpha},{beta},{delta},{n},{t})",
            pred_a - up_a[n].value
        );

        let sum = up_a[n].value + up_b[n].value;
        prop_assert!(
            close(sum, base[n].value, 10.0 * (e0 + ea + eb) + 1e-14),
            "exponent sum residual {} at ({alpha},{beta},{delta},{n},{t})",
            sum - base[n].value
        );
    }

    #[test]
    fn quadratic_and_dyadic_transforms_agree(
        alpha in 0.0f64..3.0,
        delta in 0.5f64..4.0,
        n in 0usize..=12,
        level in 0u32..=2,
        t in 0.3f64..PI,
    ) {
        let (lhs, rhs) = quadratic_transform_pair(alpha, delta, n, t).unwrap();
        let c = 2f64.powf(2.0 * alpha + delta + 1.0) * quadratic_coefficient(alpha, n);
        let e_l = effective_err(
            &IntegralQuery { alpha, beta: 0.0, delta, n, m: 0, t },
            lhs.err_bound,
        );
        let e_r = rhs.err_bound.max(
            c * integrals::rounding_floor(&IntegralQuery {
                alpha,
                beta: alpha,
                delta,
                n: 2 * n,
                m: 0,
                t: t / 2.0,
            }),
        );
        prop_assert!(
            close(lhs.value, rhs.value, 10.0 * (e_l + e_r) + 1e-14),
            "quadratic transform gap {} at ({alpha},{delta},{n},{t})",
            lhs.value - rhs.value
        );

        let (dl, dr) = dyadic_transform_pair(alpha, delta, n, level, t).unwrap();
        let dc = 2f64.powf(2.0 * alpha) * quadratic_coefficient(alpha, n << level);
        let de_l = effective_err(
            &IntegralQuery { alpha, beta: 0.0, delta, n, m: level, t },
            dl.err_bound,
        );
        let de_r = dr.err_bound.max(
            dc * integrals::rounding_floor(&IntegralQuery {
                alpha,
                beta: alpha,
                delta,
                n,
                m: level + 1,
                t,
            }),
        );
        prop_assert!(
            close(dl.value, dr.value, 10.0 * (de_l + de_r) + 1e-14),
            "dyadic transform gap {} at ({alpha},{delta},{n},{level},{t})",
            dl.value - dr.value
        );
    }

    #[test]
    fn positivity_persists_above_the_threshold(
        pair in 1usize..16,
        n in 0usize..=20,
        k in 1usize..=16,
        u in 0.01f64..3.0,
    ) {
        // Once the guaranteed exponent alpha + 1 is reached, pushing delta
        // higher must never produce a resolvable negative value.
        let alpha = (pair / 4) as f64;
        let beta = (pair % 4) as f64;
        let t = k as f64 * PI / 16.0;
        let q = IntegralQuery { alpha, beta, delta: alpha + 1.0 + u, n, m: 0, t };
        let r = f_integral(q).unwrap();
        let e = effective_err(&q, r.err_bound);
        prop_assert!(
            r.value > -10.0 * e,
            "value {} below noise floor {} at ({alpha},{beta},{},{n},{t})",
            r.value,
            -10.0 * e,
            q.delta
        );
    }
}

#[test]
fn chebyshev_family_matches_closed_form_densely() {
    // alpha = beta = 0, delta = 1 admits the closed form
    // (1/2)_n / n! (1 - cos(n t)) / n^2; on a dense grid the quadrature must
    // reproduce it and consecutive degrees must never both vanish.
    for k in 1..=512usize {
        let t = k as f64 * PI / 512.0;
        let batch = f_batch(0.0, 0.0, 1.0, 0, t, 50, DEFAULT_TOL).unwrap();
        for (n, r) in batch.iter().enumerate() {
            let want = chebyshev_closed_form(n, t);
            assert!(
                close(r.value, want, 1e-12),
                "closed-form gap {} at n = {n}, t = {t}",
                r.value - want
            );
        }
        for n in 0..50 {
            assert!(
                batch[n].value.max(batch[n + 1].value) > 1e-14,
                "degrees {n} and {} both vanish at t = {t}",
                n + 1
            );
        }
    }
}

// ---------------------------------------------------------------------------
// Kernel expansions.
// ---------------------------------------------------------------------------

#[test]
fn catalog_coefficients_stay_nonnegative() {
    let kinds = [
        SpaceKind::Sphere(3),
        SpaceKind::Sphere(4),
        SpaceKind::Sphere(5),
        SpaceKind::Sphere(6),
        SpaceKind::RealProjective(3),
        SpaceKind::ComplexProjective(4),
        SpaceKind::QuaternionicProjective(8),
        SpaceKind::CayleyPlane,
    ];
    for kind in kinds {
        let space = SpaceSpec::new(kind).unwrap();
        let delta = space.spd_delta_threshold();
        for t in [PI / 2.0, PI] {
            let spec = KernelSpec::new(t, delta, space.clone()).unwrap();
            let cv = schoenberg_coeffs(&spec, 120).unwrap();
            for (n, (&a, &e)) in cv.coeffs.iter().zip(&cv.err_bounds).enumerate() {
                assert!(
                    a >= -10.0 * e.max(1e-15),
                    "coefficient {a} at n = {n} for {kind} with t = {t}"
                );
            }
        }
    }
}

#[test]
fn legendre_route_confirms_polya_certificate() {
    // Dual route to the d = 3 certificate for (pi - theta)^3: its Legendre
    // coefficients, computed as weighted integrals rather than through the
    // difference calculus, must all be nonnegative with both parities
    // represented among the strictly positive ones.
    let mut pos_even = 0usize;
    let mut pos_odd = 0usize;
    for k in 0..=50usize {
        let v = f_integral_gegenbauer(0.5, 3.0, k, PI).unwrap().value;
        assert!(v >= -1e-10, "coefficient {v} at degree {k}");
        if v > 1e-10 {
            if k % 2 == 0 {
                pos_even += 1;
            } else {
                pos_odd += 1;
            }
        }
    }
    assert!(pos_even > 0 && pos_odd > 0, "expected both parities: {pos_even} / {pos_odd}");
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn gram_respects_kernel_support(
        n in 2usize..=10,
        seed in any::<u64>(),
        t in 0.5f64..PI,
        delta in 0.5f64..4.0,
    ) {
        let points = sample_sphere(4, n, seed);
        let space = SpaceSpec::new(SpaceKind::Sphere(4)).unwrap();
        let spec = KernelSpec::new(t, delta, space).unwrap();
        let g = gram_matrix(&spec, &points).unwrap();
        for i in 0..n {
            prop_assert_eq!(g.get(i, i), t.powf(delta));
            for j in 0..i {
                prop_assert_eq!(g.get(i, j), g.get(j, i));
                let d = geodesic_distance(&points[i], &points[j]).unwrap();
                if d >= t {
                    prop_assert_eq!(g.get(i, j), 0.0);
                } else {
                    prop_assert!(g.get(i, j) > 0.0);
                }
            }
        }
    }

    #[test]
    fn coefficient_rows_round_trip_bitwise(
        entries in prop::collection::vec(
            (any::<f64>(), any::<f64>()).prop_filter("finite", |(a, e)| {
                a.is_finite() && e.is_finite()
            }),
            1..20,
        ),
    ) {
        let space = SpaceSpec::new(SpaceKind::Sphere(3)).unwrap();
        let spec = KernelSpec::new(PI / 2.0, 2.0, space).unwrap();
        let cv = CoeffVector {
            spec,
            coeffs: entries.iter().map(|(a, _)| *a).collect(),
            err_bounds: entries.iter().map(|(_, e)| *e).collect(),
        };
        let mut buf = Vec::new();
        write_coeffs_csv(&mut buf, &cv, &[]).unwrap();
        let (_, rows) = read_coeffs_csv(&buf[..]).unwrap();
        prop_assert_eq!(rows.len(), entries.len());
        for (row, (a, e)) in rows.iter().zip(&entries) {
            prop_assert_eq!(row.a_n.to_bits(), a.to_bits());
            prop_assert_eq!(row.err_bound.to_bits(), e.to_bits());
        }
    }
}
