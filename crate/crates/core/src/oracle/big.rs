//! Minimal complex arithmetic over `astro_float::BigFloat`.

use astro_float::{BigFloat, Consts, Radix, RoundingMode};
use num_complex::Complex64;

/// Working precision and constant cache for one oracle evaluation.
pub(crate) struct Ctx {
    pub p: usize,
    rm: RoundingMode,
    cc: Consts,
}

#[derive(Debug, Clone)]
pub(crate) struct BigComplex {
    pub re: BigFloat,
    pub im: BigFloat,
}

/// Bits needed for `digits` decimal digits plus two guard words.
pub(crate) fn bits_for_digits(digits: u32) -> usize {
    (digits as f64 * std::f64::consts::LOG2_10).ceil() as usize + 128
}

impl Ctx {
    pub fn new(bits: usize) -> Self {
        Ctx {
            p: bits,
            rm: RoundingMode::ToEven,
            cc: Consts::new().expect("constant cache allocation"),
        }
    }

    pub fn real(&self, x: f64) -> BigFloat {
        BigFloat::from_f64(x, self.p)
    }

    pub fn int(&self, n: i64) -> BigFloat {
        BigFloat::from_i64(n, self.p)
    }

    pub fn zero(&self) -> BigComplex {
        self.c(Complex64::new(0.0, 0.0))
    }

    pub fn one(&self) -> BigComplex {
        self.c(Complex64::new(1.0, 0.0))
    }

    pub fn c(&self, z: Complex64) -> BigComplex {
        BigComplex {
            re: self.real(z.re),
            im: self.real(z.im),
        }
    }

    pub fn from_real(&self, re: BigFloat) -> BigComplex {
        BigComplex {
            re,
            im: self.real(0.0),
        }
    }

    pub fn parse(&mut self, s: &str) -> BigFloat {
        BigFloat::parse(s, Radix::Dec, self.p, self.rm, &mut self.cc)
    }

    /// `2^-k`, exact.
    pub fn pow2_neg(&self, k: usize) -> BigFloat {
        let half = self.real(0.5);
        half.powi(k, self.p, self.rm)
    }

    pub fn pi(&mut self) -> BigFloat {
        self.cc.pi(self.p, self.rm)
    }

    // real helpers

    pub fn radd(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.add(b, self.p, self.rm)
    }

    pub fn rsub(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.sub(b, self.p, self.rm)
    }

    pub fn rmul(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.mul(b, self.p, self.rm)
    }

    pub fn rdiv(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.div(b, self.p, self.rm)
    }

    pub fn rsqrt(&self, a: &BigFloat) -> BigFloat {
        a.sqrt(self.p, self.rm)
    }

    pub fn rln(&mut self, a: &BigFloat) -> BigFloat {
        a.ln(self.p, self.rm, &mut self.cc)
    }

    pub fn rexp(&mut self, a: &BigFloat) -> BigFloat {
        a.exp(self.p, self.rm, &mut self.cc)
    }

    /// `atan2(y, x)` in `(-π, π]`.
    pub fn atan2(&mut self, y: &BigFloat, x: &BigFloat) -> BigFloat {
        let pi = self.pi();
        if x.is_zero() {
            let half = self.rdiv(&pi, &self.int(2));
            return if y.is_negative() { half.neg() } else { half };
        }
        let t = self.rdiv(y, x).atan(self.p, self.rm, &mut self.cc);
        if x.is_positive() {
            t
        } else if y.is_negative() {
            self.rsub(&t, &pi)
        } else {
            self.radd(&t, &pi)
        }
    }

    // complex arithmetic

    pub fn add(&self, a: &BigComplex, b: &BigComplex) -> BigComplex {
        BigComplex {
            re: self.radd(&a.re, &b.re),
            im: self.radd(&a.im, &b.im),
        }
    }

    pub fn sub(&self, a: &BigComplex, b: &BigComplex) -> BigComplex {
        BigComplex {
            re: self.rsub(&a.re, &b.re),
            im: self.rsub(&a.im, &b.im),
        }
    }

    pub fn mul(&self, a: &BigComplex, b: &BigComplex) -> BigComplex {
        BigComplex {
            re: self.rsub(&self.rmul(&a.re, &b.re), &self.rmul(&a.im, &b.im)),
            im: self.radd(&self.rmul(&a.re, &b.im), &self.rmul(&a.im, &b.re)),
        }
    }

    pub fn scale(&self, a: &BigComplex, s: &BigFloat) -> BigComplex {
        BigComplex {
            re: self.rmul(&a.re, s),
            im: self.rmul(&a.im, s),
        }
    }

    pub fn norm_sqr(&self, a: &BigComplex) -> BigFloat {
        self.radd(&self.rmul(&a.re, &a.re), &self.rmul(&a.im, &a.im))
    }

    pub fn abs(&self, a: &BigComplex) -> BigFloat {
        self.rsqrt(&self.norm_sqr(a))
    }

    pub fn div(&self, a: &BigComplex, b: &BigComplex) -> BigComplex {
        let d = self.norm_sqr(b);
        let re = self.radd(&self.rmul(&a.re, &b.re), &self.rmul(&a.im, &b.im));
        let im = self.rsub(&self.rmul(&a.im, &b.re), &self.rmul(&a.re, &b.im));
        BigComplex {
            re: self.rdiv(&re, &d),
            im: self.rdiv(&im, &d),
        }
    }

    pub fn neg(&self, a: &BigComplex) -> BigComplex {
        BigComplex {
            re: a.re.neg(),
            im: a.im.neg(),
        }
    }

    /// Principal logarithm.
    pub fn ln(&mut self, a: &BigComplex) -> BigComplex {
        let m = self.abs(a);
        BigComplex {
            re: self.rln(&m),
            im: self.atan2(&a.im, &a.re),
        }
    }

    pub fn exp(&mut self, a: &BigComplex) -> BigComplex {
        let r = self.rexp(&a.re);
        let c = a.im.cos(self.p, self.rm, &mut self.cc);
        let s = a.im.sin(self.p, self.rm, &mut self.cc);
        BigComplex {
            re: self.rmul(&r, &c),
            im: self.rmul(&r, &s),
        }
    }

    /// Principal power `exp(α Log z)`.
    pub fn pow(&mut self, z: &BigComplex, alpha: &BigComplex) -> BigComplex {
        let l = self.ln(z);
        let e = self.mul(alpha, &l);
        self.exp(&e)
    }

    pub fn to_f64(&mut self, x: &BigFloat) -> f64 {
        if x.is_zero() {
            return 0.0;
        }
        let s = x
            .format(Radix::Dec, self.rm, &mut self.cc)
            .expect("formatting a finite value");
        s.parse().unwrap_or(f64::NAN)
    }

    pub fn to_c64(&mut self, z: &BigComplex) -> Complex64 {
        Complex64::new(self.to_f64(&z.re), self.to_f64(&z.im))
    }

    /// Decimal rendering with `digits` significant digits.
    pub fn to_decimal(&mut self, x: &BigFloat, digits: u32) -> String {
        let mut y = x.clone();
        let _ = y.set_precision(bits_for_digits(digits).saturating_sub(128).max(64), self.rm);
        y.format(Radix::Dec, self.rm, &mut self.cc)
            .unwrap_or_else(|_| "NaN".into())
    }

    /// `-log10(|a - b| / |b|)`, capped at `cap`.
    pub fn agreement_digits(&mut self, a: &BigComplex, b: &BigComplex, cap: u32) -> u32 {
        let d = self.abs(&self.sub(a, b));
        if d.is_zero() {
            return cap;
        }
        let m = self.abs(b);
        let scale = if m.is_zero() { self.real(1.0) } else { m };
        let rel = self.rdiv(&d, &scale);
        let lg = self.rln(&rel);
        let ln10 = self.rln(&self.real(10.0));
        let digits = self.to_f64(&self.rdiv(&lg, &ln10).neg());
        if digits.is_nan() {
            0
        } else {
            digits.floor().clamp(0.0, cap as f64) as u32
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_and_constants() {
        let mut ctx = Ctx::new(bits_for_digits(60));
        let z = ctx.c(Complex64::new(0.25, -3.5));
        assert_eq!(ctx.to_c64(&z), Complex64::new(0.25, -3.5));
        let pi = ctx.pi();
        assert_eq!(ctx.to_f64(&pi), std::f64::consts::PI);
        let l = ctx.ln(&ctx.c(Complex64::new(-1.0, 0.0)));
        assert_eq!(ctx.to_c64(&l), Complex64::new(0.0, std::f64::consts::PI));
        let e = ctx.exp(&l);
        let back = ctx.to_c64(&e);
        assert!((back - Complex64::new(-1.0, 0.0)).norm() < 1e-30);
    }

    #[test]
    fn complex_division() {
        let ctx = Ctx::new(256);
        let mut ctx = ctx;
        let a = ctx.c(Complex64::new(1.0, 2.0));
        let b = ctx.c(Complex64::new(3.0, -4.0));
        let q = ctx.div(&a, &b);
        let got = ctx.to_c64(&q);
        let want = Complex64::new(1.0, 2.0) / Complex64::new(3.0, -4.0);
        assert!((got - want).norm() < 1e-16);
    }
}
