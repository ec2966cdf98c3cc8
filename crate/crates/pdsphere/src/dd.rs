//! Minimal double-double arithmetic: an unevaluated sum `hi + lo` of two
//! doubles, giving roughly 32 significant digits. Used where a plain f64
//! accumulation visibly loses digits: the alternating Bessel power series
//! and the Jacobi recurrence at very high degree.

#[derive(Clone, Copy, Debug, Default)]
pub(crate) struct Dd {
    pub hi: f64,
    pub lo: f64,
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let err = (a - (s - bb)) + (b - bb);
    (s, err)
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let err = b - (s - a);
    (s, err)
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    let err = a.mul_add(b, -p);
    (p, err)
}

impl Dd {
    #[inline]
    pub fn from_f64(x: f64) -> Self {
        Dd { hi: x, lo: 0.0 }
    }

    /// Exact sum of two doubles.
    #[inline]
    pub fn sum(a: f64, b: f64) -> Self {
        let (hi, lo) = two_sum(a, b);
        Dd { hi, lo }
    }

    /// Exact product of two doubles.
    #[inline]
    pub fn prod(a: f64, b: f64) -> Self {
        let (hi, lo) = two_prod(a, b);
        Dd { hi, lo }
    }

    #[inline]
    pub fn value(self) -> f64 {
        self.hi + self.lo
    }

    #[inline]
    pub fn add(self, other: Dd) -> Dd {
        let (s, e) = two_sum(self.hi, other.hi);
        let (t, f) = two_sum(self.lo, other.lo);
        let (s, e2) = quick_two_sum(s, e + t);
        let (hi, lo) = quick_two_sum(s, e2 + f);
        Dd { hi, lo }
    }

    #[inline]
    pub fn sub(self, other: Dd) -> Dd {
        self.add(Dd {
            hi: -other.hi,
            lo: -other.lo,
        })
    }

    #[inline]
    pub fn mul_f64(self, c: f64) -> Dd {
        let (p, e) = two_prod(self.hi, c);
        let (hi, lo) = quick_two_sum(p, e + self.lo * c);
        Dd { hi, lo }
    }

    #[inline]
    pub fn div_f64(self, c: f64) -> Dd {
        let q1 = self.hi / c;
        let (p, e) = two_prod(q1, c);
        let r = (self.hi - p) - e + self.lo;
        let q2 = r / c;
        let (hi, lo) = quick_two_sum(q1, q2);
        Dd { hi, lo }
    }

    #[inline]
    pub fn mul(self, other: Dd) -> Dd {
        let (p, e) = two_prod(self.hi, other.hi);
        let e = e + (self.hi * other.lo + self.lo * other.hi);
        let (hi, lo) = quick_two_sum(p, e);
        Dd { hi, lo }
    }

    #[inline]
    pub fn div(self, other: Dd) -> Dd {
        let q1 = self.hi / other.hi;
        let r1 = self.sub(other.mul_f64(q1));
        let q2 = r1.hi / other.hi;
        let r2 = r1.sub(other.mul_f64(q2));
        let q3 = r2.hi / other.hi;
        let (s, e) = quick_two_sum(q1, q2);
        let (hi, lo) = quick_two_sum(s, e + q3);
        Dd { hi, lo }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn add_recovers_cancelled_bits() {
        let a = Dd::from_f64(1.0);
        let b = Dd::from_f64(1e-20);
        let s = a.add(b).sub(a);
        assert_eq!(s.value(), 1e-20);
    }

    #[test]
    fn mul_div_round_trip() {
        let x = Dd::from_f64(std::f64::consts::PI);
        let y = x.mul_f64(3.0).div_f64(3.0);
        assert!((y.value() - std::f64::consts::PI).abs() < 1e-30);
        assert_eq!(y.hi, std::f64::consts::PI);
    }

    #[test]
    fn full_precision_mul_div_round_trip() {
        let x = Dd::prod(std::f64::consts::PI, std::f64::consts::E);
        let y = Dd::sum(std::f64::consts::SQRT_2, 1e-25);
        let z = x.mul(y).div(y);
        assert!((z.hi - x.hi).abs() <= f64::EPSILON * x.hi.abs());
        assert!((z.value() - x.value()).abs() < 1e-28);
    }

    #[test]
    fn alternating_sum_beats_f64() {
        // sum of (-1)^k 10^8 / k! has huge cancellation against the leading terms
        let mut dd = Dd::from_f64(0.0);
        let mut term = Dd::from_f64(1e8);
        for k in 1..60 {
            dd = dd.add(term);
            term = term.mul_f64(-1.0).div_f64(k as f64);
        }
        let expected = 1e8 * (-1.0f64).exp();
        assert!((dd.value() - expected).abs() / expected < 1e-15);
    }
}
