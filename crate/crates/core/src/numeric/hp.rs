//! Complex numbers over MPFR floats.

use rug::float::Constant;
use rug::{Float, Rational};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Smallest precision accepted for high-precision values.
pub const MIN_PRECISION: u32 = 64;

/// Working precision used when callers ask for `bits` of accuracy.
pub fn working_bits(bits: u32) -> u32 {
    bits.max(MIN_PRECISION) + 32
}

/// A complex number whose parts are MPFR floats of a common precision.
#[derive(Clone, Debug, PartialEq)]
pub struct HpComplex {
    re: Float,
    im: Float,
}

impl HpComplex {
    pub fn new(re: Float, im: Float) -> Self {
        let prec = re.prec().min(im.prec()).max(MIN_PRECISION);
        let mut re = re;
        let mut im = im;
        re.set_prec(prec);
        im.set_prec(prec);
        HpComplex { re, im }
    }

    pub fn zero(prec: u32) -> Self {
        Self::from_f64(0.0, 0.0, prec)
    }

    pub fn one(prec: u32) -> Self {
        Self::from_f64(1.0, 0.0, prec)
    }

    pub fn i(prec: u32) -> Self {
        Self::from_f64(0.0, 1.0, prec)
    }

    pub fn from_f64(re: f64, im: f64, prec: u32) -> Self {
        let prec = prec.max(MIN_PRECISION);
        HpComplex {
            re: Float::with_val(prec, re),
            im: Float::with_val(prec, im),
        }
    }

    pub fn from_real(re: Float) -> Self {
        let prec = re.prec();
        Self::new(re, Float::new(prec))
    }

    pub fn from_rational(q: &Rational, prec: u32) -> Self {
        let prec = prec.max(MIN_PRECISION);
        HpComplex {
            re: Float::with_val(prec, q),
            im: Float::new(prec),
        }
    }

    /// `re + i·im` with exact rational parts.
    pub fn from_rationals(re: &Rational, im: &Rational, prec: u32) -> Self {
        let prec = prec.max(MIN_PRECISION);
        HpComplex {
            re: Float::with_val(prec, re),
            im: Float::with_val(prec, im),
        }
    }

    /// `i·y`, a point on the imaginary axis.
    pub fn imag(y: f64, prec: u32) -> Self {
        Self::from_f64(0.0, y, prec)
    }

    pub fn pi(prec: u32) -> Float {
        Float::with_val(prec, Constant::Pi)
    }

    pub fn re(&self) -> &Float {
        &self.re
    }

    pub fn im(&self) -> &Float {
        &self.im
    }

    pub fn precision_bits(&self) -> u32 {
        self.re.prec().min(self.im.prec())
    }

    pub fn with_precision(&self, prec: u32) -> Self {
        let mut out = self.clone();
        out.re.set_prec(prec);
        out.im.set_prec(prec);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_finite(&self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }

    pub fn to_f64_pair(&self) -> (f64, f64) {
        (self.re.to_f64(), self.im.to_f64())
    }

    pub fn conj(&self) -> Self {
        HpComplex {
            re: self.re.clone(),
            im: -self.im.clone(),
        }
    }

    pub fn norm_sqr(&self) -> Float {
        let p = self.precision_bits();
        Float::with_val(p, self.re.square_ref()) + Float::with_val(p, self.im.square_ref())
    }

    pub fn abs(&self) -> Float {
        self.re.clone().hypot(&self.im)
    }

    pub fn abs_f64(&self) -> f64 {
        self.abs().to_f64()
    }

    pub fn scale(&self, s: &Float) -> Self {
        let p = self.precision_bits();
        HpComplex {
            re: Float::with_val(p, &self.re * s),
            im: Float::with_val(p, &self.im * s),
        }
    }

    pub fn scale_rational(&self, q: &Rational) -> Self {
        let p = self.precision_bits();
        HpComplex {
            re: Float::with_val(p, &self.re * q),
            im: Float::with_val(p, &self.im * q),
        }
    }

    pub fn add_rational(&self, q: &Rational) -> Self {
        let p = self.precision_bits();
        HpComplex {
            re: Float::with_val(p, &self.re + q),
            im: self.im.clone(),
        }
    }

    pub fn recip(&self) -> Self {
        let n = self.norm_sqr();
        HpComplex {
            re: Float::with_val(n.prec(), &self.re / &n),
            im: -Float::with_val(n.prec(), &self.im / &n),
        }
    }

    pub fn exp(&self) -> Self {
        let p = self.precision_bits();
        let m = self.re.clone().exp();
        let (s, c) = self.im.clone().sin_cos(Float::new(p));
        HpComplex {
            re: Float::with_val(p, &m * &c),
            im: Float::with_val(p, &m * &s),
        }
    }

    /// Principal logarithm; the imaginary part lies in (−π, π].
    pub fn ln(&self) -> Self {
        HpComplex {
            re: self.abs().ln(),
            im: self.im.clone().atan2(&self.re),
        }
    }

    pub fn sin(&self) -> Self {
        let p = self.precision_bits();
        let (s, c) = self.re.clone().sin_cos(Float::new(p));
        let sh = self.im.clone().sinh();
        let ch = self.im.clone().cosh();
        HpComplex {
            re: Float::with_val(p, &s * &ch),
            im: Float::with_val(p, &c * &sh),
        }
    }

    pub fn sqr(&self) -> Self {
        self * self
    }

    /// `base^self` for a positive real base.
    pub fn exp_base(&self, base: &Float) -> Self {
        let l = base.clone().ln();
        self.scale(&l).exp()
    }

    pub fn powi(&self, n: u32) -> Self {
        let mut out = HpComplex::one(self.precision_bits());
        for _ in 0..n {
            out = &out * self;
        }
        out
    }

    /// Distance to the nearest integer on the real axis, if the imaginary part vanishes.
    pub fn nearest_integer(&self) -> Option<(i64, Float)> {
        if !self.im.is_zero() {
            return None;
        }
        let r = self.re.clone().round();
        let d = Float::with_val(self.re.prec(), &self.re - &r).abs();
        r.to_integer().and_then(|z| z.to_i64()).map(|k| (k, d))
    }

    /// Relative difference |self − other| / max(|self|, |other|, floor).
    pub fn rel_diff(&self, other: &HpComplex, floor: f64) -> f64 {
        let d = (self - other).abs_f64();
        let s = self.abs_f64().max(other.abs_f64()).max(floor);
        d / s
    }

    pub fn to_string_digits(&self, digits: usize) -> (String, String) {
        (
            self.re.to_string_radix(10, Some(digits)),
            self.im.to_string_radix(10, Some(digits)),
        )
    }
}

impl fmt::Display for HpComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (re, im) = self.to_f64_pair();
        write!(f, "{re:.15e}{im:+.15e}i")
    }
}

impl<'a> Add<&'a HpComplex> for &'a HpComplex {
    type Output = HpComplex;
    fn add(self, o: &HpComplex) -> HpComplex {
        let p = self.precision_bits().min(o.precision_bits());
        HpComplex {
            re: Float::with_val(p, &self.re + &o.re),
            im: Float::with_val(p, &self.im + &o.im),
        }
    }
}

impl<'a> Sub<&'a HpComplex> for &'a HpComplex {
    type Output = HpComplex;
    fn sub(self, o: &HpComplex) -> HpComplex {
        let p = self.precision_bits().min(o.precision_bits());
        HpComplex {
            re: Float::with_val(p, &self.re - &o.re),
            im: Float::with_val(p, &self.im - &o.im),
        }
    }
}

impl<'a> Mul<&'a HpComplex> for &'a HpComplex {
    type Output = HpComplex;
    fn mul(self, o: &HpComplex) -> HpComplex {
        let p = self.precision_bits().min(o.precision_bits());
        let ac = Float::with_val(p, &self.re * &o.re);
        let bd = Float::with_val(p, &self.im * &o.im);
        let ad = Float::with_val(p, &self.re * &o.im);
        let bc = Float::with_val(p, &self.im * &o.re);
        HpComplex {
            re: ac - bd,
            im: ad + bc,
        }
    }
}

impl<'a> Div<&'a HpComplex> for &'a HpComplex {
    type Output = HpComplex;
    fn div(self, o: &HpComplex) -> HpComplex {
        self * &o.recip()
    }
}

impl Neg for &HpComplex {
    type Output = HpComplex;
    fn neg(self) -> HpComplex {
        HpComplex {
            re: -self.re.clone(),
            im: -self.im.clone(),
        }
    }
}

impl Neg for HpComplex {
    type Output = HpComplex;
    fn neg(self) -> HpComplex {
        HpComplex {
            re: -self.re,
            im: -self.im,
        }
    }
}

macro_rules! owned_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<HpComplex> for HpComplex {
            type Output = HpComplex;
            fn $m(self, o: HpComplex) -> HpComplex {
                (&self).$m(&o)
            }
        }
        impl<'a> $tr<&'a HpComplex> for HpComplex {
            type Output = HpComplex;
            fn $m(self, o: &HpComplex) -> HpComplex {
                (&self).$m(o)
            }
        }
        impl<'a> $tr<HpComplex> for &'a HpComplex {
            type Output = HpComplex;
            fn $m(self, o: HpComplex) -> HpComplex {
                self.$m(&o)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);
owned_binop!(Div, div);

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_operations_round_trip() {
        let z = HpComplex::from_f64(0.75, -1.25, 128);
        let w = HpComplex::from_f64(-2.0, 0.5, 128);
        let back = &(&z * &w) / &w;
        assert!(back.rel_diff(&z, 1.0) < 1e-35);
        assert_eq!(back.precision_bits(), 128);
    }

    #[test]
    fn exp_ln_inverse() {
        let z = HpComplex::from_f64(0.3, 2.9, 160);
        assert!(z.ln().exp().rel_diff(&z, 1.0) < 1e-40);
    }

    #[test]
    fn precision_is_minimum_of_operands() {
        let a = HpComplex::from_f64(1.0, 0.0, 96);
        let b = HpComplex::from_f64(1.0, 0.0, 200);
        assert_eq!((&a + &b).precision_bits(), 96);
    }
}
