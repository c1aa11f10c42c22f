//! Arbitrary-precision real and complex scalars.
//!
//! Thin wrappers over MPFR floats. Binary operations between two values
//! carry the smaller of the two operand precisions, so a computation can
//! never silently claim more accuracy than its inputs had.

use rug::float::Round;
use rug::ops::Pow;
use rug::Float;
use std::cmp::Ordering;
use std::fmt;

/// Smallest precision the library will work at.
pub const MIN_PREC: u32 = 64;

/// Arbitrary-precision real number. Precision is carried per value.
#[derive(Clone, PartialEq)]
pub struct Real(pub(crate) Float);

impl fmt::Debug for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Real({:e}@{})", self.0.to_f64(), self.prec())
    }
}

impl fmt::Display for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

fn join(a: u32, b: u32) -> u32 {
    a.min(b).max(MIN_PREC)
}

impl Real {
    pub fn new(prec: u32, v: f64) -> Self {
        Real(Float::with_val(prec.max(MIN_PREC), v))
    }

    pub fn zero(prec: u32) -> Self {
        Self::new(prec, 0.0)
    }

    pub fn one(prec: u32) -> Self {
        Self::new(prec, 1.0)
    }

    pub fn from_int(prec: u32, v: i64) -> Self {
        Real(Float::with_val(prec.max(MIN_PREC), v))
    }

    /// Parse a base-10 decimal string at the given precision.
    pub fn parse(prec: u32, s: &str) -> Option<Self> {
        Float::parse(s)
            .ok()
            .map(|inc| Real(Float::with_val(prec.max(MIN_PREC), inc)))
    }

    pub fn pi(prec: u32) -> Self {
        Real(Float::with_val(
            prec.max(MIN_PREC),
            rug::float::Constant::Pi,
        ))
    }

    pub fn ln2(prec: u32) -> Self {
        Real(Float::with_val(
            prec.max(MIN_PREC),
            rug::float::Constant::Log2,
        ))
    }

    pub fn prec(&self) -> u32 {
        self.0.prec()
    }

    /// Same value rounded to a different working precision.
    pub fn with_prec(&self, prec: u32) -> Self {
        Real(Float::with_val(prec.max(MIN_PREC), &self.0))
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_finite(&self) -> bool {
        self.0.is_finite()
    }

    pub fn is_sign_negative(&self) -> bool {
        self.0.is_sign_negative() && !self.0.is_zero()
    }

    pub fn abs(&self) -> Self {
        Real(Float::with_val(self.prec(), self.0.as_abs().as_ref()))
    }

    pub fn neg(&self) -> Self {
        Real(Float::with_val(self.prec(), -&self.0))
    }

    pub fn add(&self, o: &Real) -> Self {
        Real(Float::with_val(join(self.prec(), o.prec()), &self.0 + &o.0))
    }

    pub fn sub(&self, o: &Real) -> Self {
        Real(Float::with_val(join(self.prec(), o.prec()), &self.0 - &o.0))
    }

    pub fn mul(&self, o: &Real) -> Self {
        Real(Float::with_val(join(self.prec(), o.prec()), &self.0 * &o.0))
    }

    pub fn div(&self, o: &Real) -> Self {
        Real(Float::with_val(join(self.prec(), o.prec()), &self.0 / &o.0))
    }

    pub fn add_f64(&self, v: f64) -> Self {
        Real(Float::with_val(self.prec(), &self.0 + v))
    }

    pub fn sub_f64(&self, v: f64) -> Self {
        Real(Float::with_val(self.prec(), &self.0 - v))
    }

    pub fn mul_f64(&self, v: f64) -> Self {
        Real(Float::with_val(self.prec(), &self.0 * v))
    }

    pub fn div_f64(&self, v: f64) -> Self {
        Real(Float::with_val(self.prec(), &self.0 / v))
    }

    pub fn mul_i64(&self, v: i64) -> Self {
        Real(Float::with_val(self.prec(), &self.0 * v))
    }

    pub fn recip(&self) -> Self {
        Real(self.0.clone().recip())
    }

    pub fn square(&self) -> Self {
        self.mul(self)
    }

    pub fn sqrt(&self) -> Self {
        Real(self.0.clone().sqrt())
    }

    pub fn exp(&self) -> Self {
        Real(self.0.clone().exp())
    }

    pub fn ln(&self) -> Self {
        Real(self.0.clone().ln())
    }

    pub fn sin(&self) -> Self {
        Real(self.0.clone().sin())
    }

    pub fn cos(&self) -> Self {
        Real(self.0.clone().cos())
    }

    pub fn sin_cos(&self) -> (Self, Self) {
        let (s, c) = self.0.clone().sin_cos(Float::new(self.prec()));
        (Real(s), Real(c))
    }

    pub fn tan(&self) -> Self {
        Real(self.0.clone().tan())
    }

    pub fn sinh(&self) -> Self {
        Real(self.0.clone().sinh())
    }

    pub fn cosh(&self) -> Self {
        Real(self.0.clone().cosh())
    }

    pub fn tanh(&self) -> Self {
        Real(self.0.clone().tanh())
    }

    pub fn atan(&self) -> Self {
        Real(self.0.clone().atan())
    }

    pub fn atan2(&self, x: &Real) -> Self {
        Real(
            Float::with_val(join(self.prec(), x.prec()), &self.0)
                .atan2(&x.0),
        )
    }

    pub fn asin(&self) -> Self {
        Real(self.0.clone().asin())
    }

    pub fn acosh(&self) -> Self {
        Real(self.0.clone().acosh())
    }

    pub fn asinh(&self) -> Self {
        Real(self.0.clone().asinh())
    }

    pub fn floor(&self) -> Self {
        Real(self.0.clone().floor())
    }

    /// self^k for integer k.
    pub fn powi(&self, k: i64) -> Self {
        Real(Float::with_val(self.prec(), (&self.0).pow(k as i32)))
    }

    /// self^e for real e; requires self > 0.
    pub fn pow(&self, e: &Real) -> Self {
        Real(Float::with_val(
            join(self.prec(), e.prec()),
            (&self.0).pow(&e.0),
        ))
    }

    pub fn pow_f64(&self, e: f64) -> Self {
        let ef = Float::with_val(self.prec(), e);
        Real(Float::with_val(self.prec(), (&self.0).pow(&ef)))
    }

    pub fn cmp_f64(&self, v: f64) -> Ordering {
        self.0.partial_cmp(&v).unwrap_or(Ordering::Equal)
    }

    pub fn cmp_real(&self, v: &Real) -> Ordering {
        self.0.partial_cmp(&v.0).unwrap_or(Ordering::Equal)
    }

    pub fn max(&self, o: &Real) -> Self {
        if self.cmp_real(o) == Ordering::Less {
            o.clone()
        } else {
            self.clone()
        }
    }

    pub fn min(&self, o: &Real) -> Self {
        if self.cmp_real(o) == Ordering::Greater {
            o.clone()
        } else {
            self.clone()
        }
    }

    /// log2 of |self|; -inf for zero. Cheap, used for cancellation accounting.
    pub fn log2_abs(&self) -> f64 {
        if self.0.is_zero() {
            return f64::NEG_INFINITY;
        }
        let (m, e) = self.0.to_f64_exp();
        m.abs().log2() + e as f64
    }

    /// Decimal string with the given number of significant digits.
    pub fn to_decimal(&self, digits: usize) -> String {
        format!("{:.*e}", digits.saturating_sub(1), self.0)
    }
}

/// Arbitrary-precision complex number; both parts share one precision.
#[derive(Clone, PartialEq)]
pub struct Cplx {
    pub re: Real,
    pub im: Real,
}

impl fmt::Debug for Cplx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Cplx({:e} {:+e}i @{})",
            self.re.to_f64(),
            self.im.to_f64(),
            self.prec()
        )
    }
}

impl Cplx {
    pub fn new(re: Real, im: Real) -> Self {
        let p = join(re.prec(), im.prec());
        Cplx {
            re: re.with_prec(p),
            im: im.with_prec(p),
        }
    }

    pub fn from_f64(prec: u32, re: f64, im: f64) -> Self {
        Cplx {
            re: Real::new(prec, re),
            im: Real::new(prec, im),
        }
    }

    pub fn from_real(re: Real) -> Self {
        let p = re.prec();
        Cplx {
            re,
            im: Real::zero(p),
        }
    }

    pub fn zero(prec: u32) -> Self {
        Self::from_f64(prec, 0.0, 0.0)
    }

    pub fn one(prec: u32) -> Self {
        Self::from_f64(prec, 1.0, 0.0)
    }

    pub fn i(prec: u32) -> Self {
        Self::from_f64(prec, 0.0, 1.0)
    }

    pub fn prec(&self) -> u32 {
        self.re.prec()
    }

    pub fn with_prec(&self, prec: u32) -> Self {
        Cplx {
            re: self.re.with_prec(prec),
            im: self.im.with_prec(prec),
        }
    }

    pub fn to_c64(&self) -> num_complex::Complex64 {
        num_complex::Complex64::new(self.re.to_f64(), self.im.to_f64())
    }

    pub fn conj(&self) -> Self {
        Cplx {
            re: self.re.clone(),
            im: self.im.neg(),
        }
    }

    pub fn neg(&self) -> Self {
        Cplx {
            re: self.re.neg(),
            im: self.im.neg(),
        }
    }

    pub fn add(&self, o: &Cplx) -> Self {
        Cplx::new(self.re.add(&o.re), self.im.add(&o.im))
    }

    pub fn sub(&self, o: &Cplx) -> Self {
        Cplx::new(self.re.sub(&o.re), self.im.sub(&o.im))
    }

    pub fn mul(&self, o: &Cplx) -> Self {
        let re = self.re.mul(&o.re).sub(&self.im.mul(&o.im));
        let im = self.re.mul(&o.im).add(&self.im.mul(&o.re));
        Cplx::new(re, im)
    }

    pub fn div(&self, o: &Cplx) -> Self {
        let d = o.norm_sq();
        let re = self.re.mul(&o.re).add(&self.im.mul(&o.im)).div(&d);
        let im = self.im.mul(&o.re).sub(&self.re.mul(&o.im)).div(&d);
        Cplx::new(re, im)
    }

    pub fn scale(&self, r: &Real) -> Self {
        Cplx::new(self.re.mul(r), self.im.mul(r))
    }

    pub fn scale_f64(&self, v: f64) -> Self {
        Cplx {
            re: self.re.mul_f64(v),
            im: self.im.mul_f64(v),
        }
    }

    /// i * self.
    pub fn mul_i(&self) -> Self {
        Cplx {
            re: self.im.neg(),
            im: self.re.clone(),
        }
    }

    pub fn add_real(&self, r: &Real) -> Self {
        Cplx::new(self.re.add(r), self.im.clone())
    }

    pub fn add_f64(&self, v: f64) -> Self {
        Cplx {
            re: self.re.add_f64(v),
            im: self.im.clone(),
        }
    }

    pub fn norm_sq(&self) -> Real {
        self.re.square().add(&self.im.square())
    }

    pub fn abs(&self) -> Real {
        self.norm_sq().sqrt()
    }

    /// Principal argument via atan2.
    pub fn arg(&self) -> Real {
        self.im.atan2(&self.re)
    }

    pub fn exp(&self) -> Self {
        let m = self.re.exp();
        let (s, c) = self.im.sin_cos();
        Cplx::new(m.mul(&c), m.mul(&s))
    }

    /// Principal branch logarithm.
    pub fn ln(&self) -> Self {
        let r = self.norm_sq().ln().mul_f64(0.5);
        Cplx::new(r, self.arg())
    }

    pub fn sqrt(&self) -> Self {
        self.ln().scale_f64(0.5).exp()
    }

    pub fn recip(&self) -> Self {
        let d = self.norm_sq();
        Cplx::new(self.re.div(&d), self.im.neg().div(&d))
    }

    /// self^w via exp(w ln self), principal branch.
    pub fn pow(&self, w: &Cplx) -> Self {
        w.mul(&self.ln()).exp()
    }

    /// x^w for positive real x (real logarithm).
    pub fn real_base_pow(x: &Real, w: &Cplx) -> Self {
        debug_assert!(x.cmp_f64(0.0) == Ordering::Greater);
        w.scale(&x.ln()).exp()
    }

    pub fn is_finite(&self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn min_precision_propagates() {
        let a = Real::new(256, 1.5);
        let b = Real::new(128, 2.5);
        assert_eq!(a.add(&b).prec(), 128);
        assert_eq!(a.mul(&b).prec(), 128);
        let z = Cplx::new(Real::new(192, 1.0), Real::new(256, 2.0));
        assert_eq!(z.prec(), 192);
        let w = Cplx::from_f64(512, 0.5, -0.25);
        assert_eq!(z.mul(&w).prec(), 192);
    }

    #[test]
    fn complex_field_ops() {
        let p = 128;
        let z = Cplx::from_f64(p, 3.0, 4.0);
        assert!((z.abs().to_f64() - 5.0).abs() < 1e-15);
        let w = z.mul(&z.recip());
        assert!((w.re.to_f64() - 1.0).abs() < 1e-30);
        assert!(w.im.to_f64().abs() < 1e-30);
        // exp(ln z) = z
        let back = z.ln().exp();
        assert!((back.re.to_f64() - 3.0).abs() < 1e-25);
        assert!((back.im.to_f64() - 4.0).abs() < 1e-25);
    }

    #[test]
    fn exp_of_i_pi() {
        let p = 256;
        let ipi = Cplx::new(Real::zero(p), Real::pi(p));
        let e = ipi.exp();
        assert!((e.re.to_f64() + 1.0).abs() < 1e-60);
        assert!(e.im.to_f64().abs() < 1e-60);
    }
}
