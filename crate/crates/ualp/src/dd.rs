//! Minimal double-double arithmetic (~31 significant decimal digits).
//!
//! Used only where a plain f64 accumulation loses too many digits to
//! cancellation, most importantly the ascending Bessel series at large
//! argument, whose terms grow to ~e^x before cancelling down to O(1).

/// An unevaluated sum `hi + lo` with `|lo| <= ulp(hi)/2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct Dd {
    pub hi: f64,
    pub lo: f64,
}

#[inline]
fn two_sum(a: f64, b: f64) -> Dd {
    let s = a + b;
    let bb = s - a;
    let err = (a - (s - bb)) + (b - bb);
    Dd { hi: s, lo: err }
}

/// Requires |a| >= |b| (or a == 0).
#[inline]
fn quick_two_sum(a: f64, b: f64) -> Dd {
    let s = a + b;
    Dd {
        hi: s,
        lo: b - (s - a),
    }
}

#[inline]
fn two_prod(a: f64, b: f64) -> Dd {
    let p = a * b;
    Dd {
        hi: p,
        lo: a.mul_add(b, -p),
    }
}

impl Dd {
    #[inline]
    pub fn from_f64(x: f64) -> Self {
        Dd { hi: x, lo: 0.0 }
    }

    /// Exact sum of two f64 values as a double-double.
    #[inline]
    pub fn exact_sum(a: f64, b: f64) -> Self {
        two_sum(a, b)
    }

    /// Exact square of an f64 value.
    #[inline]
    pub fn sqr_f64(x: f64) -> Self {
        two_prod(x, x)
    }

    #[inline]
    pub fn add(self, o: Dd) -> Self {
        let s = two_sum(self.hi, o.hi);
        let t = two_sum(self.lo, o.lo);
        let u = quick_two_sum(s.hi, s.lo + t.hi);
        quick_two_sum(u.hi, u.lo + t.lo)
    }

    #[inline]
    pub fn mul(self, o: Dd) -> Self {
        let p = two_prod(self.hi, o.hi);
        let lo = p.lo + (self.hi * o.lo + self.lo * o.hi);
        quick_two_sum(p.hi, lo)
    }

    #[inline]
    pub fn mul_f64(self, o: f64) -> Self {
        let p = two_prod(self.hi, o);
        let lo = p.lo + self.lo * o;
        quick_two_sum(p.hi, lo)
    }

    #[inline]
    pub fn div(self, o: Dd) -> Self {
        let q1 = self.hi / o.hi;
        let r1 = self.add(o.mul_f64(q1).neg());
        let q2 = r1.hi / o.hi;
        let r2 = r1.add(o.mul_f64(q2).neg());
        let q3 = r2.hi / o.hi;
        quick_two_sum(q1, q2).add(Dd::from_f64(q3))
    }

    #[inline]
    pub fn neg(self) -> Self {
        Dd {
            hi: -self.hi,
            lo: -self.lo,
        }
    }

    #[inline]
    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }
}
