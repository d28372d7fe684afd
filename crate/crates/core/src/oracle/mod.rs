//! Extended-precision reference values.
//!
//! Ferrers values come from `((1+x)/(1-x))^{μ/2} F(ν+1, -ν; 1-μ; (1-x)/2) / Γ(1-μ)`,
//! a representation unrelated to the `u, v` form used by the main path.
//! Hypergeometric values are summed directly for `|w| <= 0.9` and carried
//! further by Taylor steps of the differential equation. Every value is
//! computed at two working precisions and certified by their agreement.

mod big;

use std::sync::OnceLock;

use astro_float::BigFloat;
use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::One;

use big::{bits_for_digits, BigComplex, Ctx};

use crate::error::{Error, Result};
use crate::ferrers::DegreeOrder;
use crate::hyp2f1::HypParams;
use crate::special::{cut_distance, nonpositive_integer, CUT_TOLERANCE};

/// Smallest digit count a reference value is computed to.
pub const MIN_DIGITS: u32 = 50;

/// Imaginary shift applied to `μ` when `1 - μ` is a pole of Γ.
pub const MU_PERTURBATION: &str = "1e-30";

const DIRECT_RADIUS: f64 = 0.9;
const SEED_RADIUS: f64 = 0.5;
const STEP_FRACTION: f64 = 0.5;
const MAX_SERIES_TERMS: usize = 200_000;
const MAX_X_MODULUS: f64 = 4.0;

/// An extended-precision complex value with its certified digit count.
#[derive(Debug, Clone)]
pub struct BigFloatValue {
    re: BigFloat,
    im: BigFloat,
    precision_digits: u32,
}

impl BigFloatValue {
    pub fn precision_digits(&self) -> u32 {
        self.precision_digits
    }

    /// Nearest double-precision value.
    pub fn to_complex64(&self) -> Complex64 {
        let mut ctx = Ctx::new(bits_for_digits(self.precision_digits));
        ctx.to_c64(&BigComplex {
            re: self.re.clone(),
            im: self.im.clone(),
        })
    }

    /// Decimal strings of the real and imaginary parts.
    pub fn to_decimal(&self) -> (String, String) {
        let mut ctx = Ctx::new(bits_for_digits(self.precision_digits));
        (
            ctx.to_decimal(&self.re, self.precision_digits),
            ctx.to_decimal(&self.im, self.precision_digits),
        )
    }
}

/// `B_2, B_4, ..., B_{2N}` as exact rationals (Akiyama-Tanigawa).
fn bernoulli_even() -> &'static [BigRational] {
    static TABLE: OnceLock<Vec<BigRational>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let n_max = 160;
        let mut a: Vec<BigRational> = Vec::with_capacity(n_max + 1);
        let mut out = Vec::new();
        for m in 0..=n_max {
            a.push(BigRational::new(BigInt::one(), BigInt::from(m + 1)));
            for j in (1..=m).rev() {
                let d = &a[j - 1] - &a[j];
                a[j - 1] = d * BigRational::from_integer(BigInt::from(j));
            }
            if m >= 2 && m % 2 == 0 {
                out.push(a[0].clone());
            }
        }
        out
    })
}

fn rational_to_big(ctx: &mut Ctx, q: &BigRational) -> BigFloat {
    let n = ctx.parse(&q.numer().to_string());
    let d = ctx.parse(&q.denom().to_string());
    ctx.rdiv(&n, &d)
}

/// `1/Γ(z)` by upward shift and the Stirling series.
fn rgamma_big(ctx: &mut Ctx, z: &BigComplex, digits: u32) -> BigComplex {
    let target = (digits.max(MIN_DIGITS)) as f64;
    let zr = ctx.to_f64(&z.re);
    let m = if zr < target {
        (target - zr).ceil() as i64
    } else {
        0
    };
    let mut prod = ctx.one();
    let mut zs = z.clone();
    for _ in 0..m {
        prod = ctx.mul(&prod, &zs);
        zs = ctx.add(&zs, &ctx.one());
    }
    // ln Γ(zs) = (zs - 1/2) ln zs - zs + ln(2π)/2 + Σ B_2n / (2n(2n-1) zs^(2n-1))
    let half = ctx.from_real(ctx.real(0.5));
    let lz = ctx.ln(&zs);
    let mut lg = ctx.sub(&ctx.mul(&ctx.sub(&zs, &half), &lz), &zs);
    let pi = ctx.pi();
    let two_pi = ctx.rmul(&pi, &ctx.int(2));
    let l2pi = ctx.rln(&two_pi);
    lg = ctx.add(&lg, &ctx.from_real(ctx.rmul(&l2pi, &ctx.real(0.5))));
    let inv = ctx.div(&ctx.one(), &zs);
    let inv2 = ctx.mul(&inv, &inv);
    let mut pw = inv;
    let eps = ctx.pow2_neg(ctx.p);
    for (i, b) in bernoulli_even().iter().enumerate() {
        let n = (i + 1) as i64;
        let coef = rational_to_big(ctx, b);
        let coef = ctx.rdiv(&coef, &ctx.int(2 * n * (2 * n - 1)));
        let t = ctx.scale(&pw, &coef);
        lg = ctx.add(&lg, &t);
        if ctx.abs(&t).cmp(&eps).is_some_and(|o| o < 0) {
            break;
        }
        pw = ctx.mul(&pw, &inv2);
    }
    let e = ctx.neg(&lg);
    let r = ctx.exp(&e);
    ctx.mul(&prod, &r)
}

/// Exact non-positive integer in f64 terms, for termination tests.
fn exact_nonpositive_integer(z: Complex64) -> Option<u64> {
    if z.im == 0.0 && z.re <= 0.0 && z.re == z.re.round() {
        Some((-z.re) as u64)
    } else {
        None
    }
}

struct Params {
    a: BigComplex,
    b: BigComplex,
    c: BigComplex,
    terminating: Option<u64>,
}

/// `less(x, y)` for non-negative reals.
fn below(x: &BigFloat, y: &BigFloat) -> bool {
    x.cmp(y).is_some_and(|o| o < 0)
}

/// Series value and derivative at `w`.
fn series_big(ctx: &mut Ctx, q: &Params, w: &BigComplex) -> Result<(BigComplex, BigComplex)> {
    let mut term = ctx.one();
    let mut sum = ctx.one();
    let mut dsum = ctx.zero();
    let eps2 = ctx.pow2_neg(2 * (ctx.p - 8));
    let mut small = 0;
    let limit = q.terminating.map_or(MAX_SERIES_TERMS, |n| n as usize + 1);
    for k in 0..limit {
        let kf = ctx.from_real(ctx.int(k as i64));
        let num = ctx.mul(&ctx.add(&q.a, &kf), &ctx.add(&q.b, &kf));
        let k1 = ctx.int(k as i64 + 1);
        let den = ctx.scale(&ctx.add(&q.c, &kf), &k1);
        // derivative term: (k+1) t_{k+1} / w = t_k (a+k)(b+k)/(c+k)
        let dterm = ctx.mul(&term, &ctx.div(&num, &ctx.add(&q.c, &kf)));
        dsum = ctx.add(&dsum, &dterm);
        term = ctx.mul(&term, &ctx.mul(&ctx.div(&num, &den), w));
        sum = ctx.add(&sum, &term);
        if q.terminating.is_none() {
            let t2 = ctx.norm_sqr(&term);
            let s2 = ctx.rmul(&ctx.norm_sqr(&sum), &eps2);
            if below(&t2, &s2) {
                small += 1;
                if small >= 3 {
                    return Ok((sum, dsum));
                }
            } else {
                small = 0;
            }
        }
    }
    if q.terminating.is_some() {
        Ok((sum, dsum))
    } else {
        Err(Error::NoConvergence(format!(
            "reference series did not settle in {MAX_SERIES_TERMS} terms"
        )))
    }
}

/// One Taylor step of the hypergeometric equation from `z0` by `h`.
fn taylor_big(
    ctx: &mut Ctx,
    q: &Params,
    z0: &BigComplex,
    f: &BigComplex,
    df: &BigComplex,
    h: &BigComplex,
) -> Result<(BigComplex, BigComplex)> {
    let one = ctx.one();
    let a0 = ctx.mul(z0, &ctx.sub(&one, z0));
    let a1 = ctx.sub(&one, &ctx.scale(z0, &ctx.int(2)));
    let apb1 = ctx.add(&ctx.add(&q.a, &q.b), &one);
    let b0 = ctx.sub(&q.c, &ctx.mul(&apb1, z0));
    let h2 = ctx.mul(h, h);
    let mut d_prev = f.clone();
    let mut d_cur = ctx.mul(df, h);
    let mut val = ctx.add(&d_prev, &d_cur);
    let mut der = d_cur.clone();
    let eps2 = ctx.pow2_neg(2 * (ctx.p - 8));
    let mut small = 0;
    for n in 0..20 * ctx.p {
        let nf = ctx.from_real(ctx.int(n as i64));
        let t1 = ctx.mul(
            &ctx.mul(&ctx.add(&q.a, &nf), &ctx.add(&q.b, &nf)),
            &ctx.mul(&d_prev, &h2),
        );
        let lin = ctx.add(&ctx.scale(&a1, &ctx.int(n as i64)), &b0);
        let t2 = ctx.scale(&ctx.mul(&lin, &ctx.mul(&d_cur, h)), &ctx.int(n as i64 + 1));
        let den = ctx.scale(&a0, &ctx.int((n as i64 + 2) * (n as i64 + 1)));
        let d_next = ctx.div(&ctx.sub(&t1, &t2), &den);
        val = ctx.add(&val, &d_next);
        der = ctx.add(&der, &ctx.scale(&d_next, &ctx.int(n as i64 + 2)));
        let mag = ctx.rmul(
            &ctx.norm_sqr(&d_next),
            &ctx.int((n as i64 + 3) * (n as i64 + 3)),
        );
        let scale = ctx.rmul(&ctx.radd(&ctx.norm_sqr(&val), &ctx.norm_sqr(&der)), &eps2);
        if below(&mag, &scale) {
            small += 1;
            if small >= 3 {
                return Ok((val, ctx.div(&der, h)));
            }
        } else {
            small = 0;
        }
        d_prev = d_cur;
        d_cur = d_next;
    }
    Err(Error::NoConvergence("reference Taylor step".into()))
}

fn waypoints(w: Complex64) -> Vec<Option<Complex64>> {
    let len2 = w.norm_sqr();
    let t = (w.re / len2).clamp(0.0, 1.0);
    let closest = (w * t - 1.0).norm();
    if w.re > 1.0 && closest < 0.45 {
        let side = if w.im >= 0.0 { 1.0 } else { -1.0 };
        vec![Some(Complex64::new(1.0, 0.75 * side)), None]
    } else {
        vec![None]
    }
}

/// `2F1` anywhere off `[1, inf)`; `w` given in working precision.
fn hyp2f1_big(ctx: &mut Ctx, q: &Params, w: &BigComplex) -> Result<BigComplex> {
    let wf = ctx.to_c64(w);
    if q.terminating.is_some() || wf.norm() <= DIRECT_RADIUS {
        return Ok(series_big(ctx, q, w)?.0);
    }
    if wf.re >= 1.0 && wf.im.abs() <= CUT_TOLERANCE {
        return Err(Error::Branch(wf));
    }
    let legs = waypoints(wf);
    let first = legs[0].unwrap_or(wf);
    let seed = ctx.c(first * (SEED_RADIUS / first.norm()));
    let (mut f, mut df) = series_big(ctx, q, &seed)?;
    let mut z = seed;
    for leg in legs {
        let target = match leg {
            Some(p) => ctx.c(p),
            None => w.clone(),
        };
        let tf = ctx.to_c64(&target);
        for _ in 0..10_000 {
            let zf = ctx.to_c64(&z);
            let remaining = (tf - zf).norm();
            let radius = zf.norm().min((zf - 1.0).norm());
            let last = remaining <= STEP_FRACTION * radius;
            let gap = ctx.sub(&target, &z);
            let h = if last {
                gap
            } else {
                ctx.scale(&gap, &ctx.real(STEP_FRACTION * radius / remaining))
            };
            let (nf, ndf) = taylor_big(ctx, q, &z, &f, &df, &h)?;
            f = nf;
            df = ndf;
            if last {
                z = target.clone();
                break;
            }
            z = ctx.add(&z, &h);
        }
        let zf = ctx.to_c64(&z);
        if (zf - tf).norm() > 0.0 {
            return Err(Error::NoConvergence("reference continuation path".into()));
        }
    }
    Ok(f)
}

fn params(ctx: &Ctx, a: Complex64, b: Complex64, c: Complex64) -> Params {
    let terminating = match (exact_nonpositive_integer(a), exact_nonpositive_integer(b)) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, y) => x.or(y),
    };
    Params {
        a: ctx.c(a),
        b: ctx.c(b),
        c: ctx.c(c),
        terminating,
    }
}

/// Evaluate at two precisions and certify the agreement.
fn certified<F>(digits: u32, extra: u32, mut eval: F) -> Result<BigFloatValue>
where
    F: FnMut(&mut Ctx) -> Result<BigComplex>,
{
    let digits = digits.max(MIN_DIGITS);
    let mut lo = Ctx::new(bits_for_digits(digits + extra + 20));
    let v_lo = eval(&mut lo)?;
    let mut hi = Ctx::new(bits_for_digits(digits + extra + 40));
    let v_hi = eval(&mut hi)?;
    let v_lo = BigComplex {
        re: {
            let mut r = v_lo.re.clone();
            let _ = r.set_precision(hi.p, astro_float::RoundingMode::ToEven);
            r
        },
        im: {
            let mut r = v_lo.im.clone();
            let _ = r.set_precision(hi.p, astro_float::RoundingMode::ToEven);
            r
        },
    };
    let agree = hi.agreement_digits(&v_lo, &v_hi, digits + 20);
    if agree < digits {
        return Err(Error::NoConvergence(format!(
            "reference value certified to {agree} of {digits} digits"
        )));
    }
    Ok(BigFloatValue {
        re: v_hi.re,
        im: v_hi.im,
        precision_digits: agree.min(digits),
    })
}

/// Reference `2F1(a, b; c; w)` for `|w| < 1`, or `|w| = 1` with
/// `Re(c-a-b) > 0`.
pub fn reference_2f1(p: &HypParams, w: Complex64, digits: u32) -> Result<BigFloatValue> {
    let (a, b, c) = (p.a(), p.b(), p.c());
    let s = c - a - b;
    let r = w.norm();
    let terminating =
        exact_nonpositive_integer(a).is_some() || exact_nonpositive_integer(b).is_some();
    if !terminating && (r > 1.0 + 1e-12 || (r >= 1.0 - 1e-12 && s.re <= 0.0)) {
        return Err(Error::NoConvergence(format!(
            "the series does not converge at |w| = {r} with Re(c-a-b) = {}",
            s.re
        )));
    }
    if !terminating && (w - 1.0).norm() <= 1e-12 {
        return certified(digits, 0, |ctx| {
            // Gauss: Γ(c)Γ(c-a-b) / (Γ(c-a)Γ(c-b))
            let d = digits + 40;
            let g1 = rgamma_big(ctx, &ctx.c(c - a), d);
            let g2 = rgamma_big(ctx, &ctx.c(c - b), d);
            let h1 = rgamma_big(ctx, &ctx.c(c), d);
            let h2 = rgamma_big(ctx, &ctx.c(s), d);
            let num = ctx.mul(&g1, &g2);
            Ok(ctx.div(&num, &ctx.mul(&h1, &h2)))
        });
    }
    certified(digits, 0, |ctx| {
        let q = params(ctx, a, b, c);
        let wb = ctx.c(w);
        hyp2f1_big(ctx, &q, &wb)
    })
}

/// Reference `P_ν^μ(x)` from the `(1-x)/2` representation. When `1-μ` is
/// a pole of Γ, the average over `μ ± iε` is returned.
pub fn reference_ferrers_p(p: &DegreeOrder, x: Complex64, digits: u32) -> Result<BigFloatValue> {
    if cut_distance(x) <= CUT_TOLERANCE || x.norm() > MAX_X_MODULUS || !x.is_finite() {
        return Err(Error::RepresentationDomain(x));
    }
    let (nu, mu) = (p.nu(), p.mu());
    let c = 1.0 - mu;
    let perturb = nonpositive_integer(c, 1e-12).is_some();
    // the perturbed evaluations cancel about 30 digits
    let extra = if perturb { 35 } else { 0 };
    certified(digits, extra, |ctx| {
        let one = ctx.one();
        let xb = ctx.c(x);
        let w = ctx.scale(&ctx.sub(&one, &xb), &ctx.real(0.5));
        let ratio = ctx.div(&ctx.add(&one, &xb), &ctx.sub(&one, &xb));
        let eval_mu = |ctx: &mut Ctx, mu_b: BigComplex| -> Result<BigComplex> {
            let c_b = ctx.sub(&ctx.one(), &mu_b);
            let q = Params {
                a: ctx.c(nu + 1.0),
                b: ctx.c(-nu),
                c: c_b.clone(),
                terminating: exact_nonpositive_integer(nu + 1.0).or(exact_nonpositive_integer(-nu)),
            };
            let f = hyp2f1_big(ctx, &q, &w)?;
            let rg = rgamma_big(ctx, &c_b, digits + extra + 40);
            let half_mu = ctx.scale(&mu_b, &ctx.real(0.5));
            let pw = ctx.pow(&ratio, &half_mu);
            Ok(ctx.mul(&ctx.mul(&pw, &f), &rg))
        };
        if perturb {
            let e = ctx.parse(MU_PERTURBATION);
            let mu_b = ctx.c(mu);
            let up = BigComplex {
                re: mu_b.re.clone(),
                im: ctx.radd(&mu_b.im, &e),
            };
            let down = BigComplex {
                re: mu_b.re.clone(),
                im: ctx.rsub(&mu_b.im, &e),
            };
            let fu = eval_mu(ctx, up)?;
            let fd = eval_mu(ctx, down)?;
            Ok(ctx.scale(&ctx.add(&fu, &fd), &ctx.real(0.5)))
        } else {
            let mu_b = ctx.c(mu);
            eval_mu(ctx, mu_b)
        }
    })
}

/// `lim_{r->1-} 2F1(r w)` for `|w| = 1`, `w != 1`, `Re(c-a-b) > -1`, by
/// polynomial extrapolation in `1 - r` from `r = 1 - 10^-4, 1 - 10^-5,
/// 1 - 10^-6`. The digit count is the agreement of the linear and
/// quadratic extrapolants and must reach `digits`.
pub fn radial_limit_2f1(p: &HypParams, w: Complex64, digits: u32) -> Result<BigFloatValue> {
    let s = p.c() - p.a() - p.b();
    if s.re <= -1.0 {
        return Err(Error::ExtrapolationUnstable(format!(
            "Re(c-a-b) = {} <= -1: the series diverges on the circle",
            s.re
        )));
    }
    if (w - 1.0).norm() <= 1e-12 || (w.norm() - 1.0).abs() > 1e-12 {
        return Err(Error::ExtrapolationUnstable(format!(
            "w = {w} is not a point of the circle other than 1"
        )));
    }
    let work = digits.max(20) + 20;
    let mut ctx = Ctx::new(bits_for_digits(work));
    let q = params(&ctx, p.a(), p.b(), p.c());
    let wb = ctx.c(w);
    let mut hs = Vec::new();
    let mut fs = Vec::new();
    for e in ["1e-4", "1e-5", "1e-6"] {
        let h = ctx.parse(e);
        let r = ctx.rsub(&ctx.real(1.0), &h);
        let z = ctx.scale(&wb, &r);
        fs.push(hyp2f1_big(&mut ctx, &q, &z)?);
        hs.push(h);
    }
    // Neville's scheme at h = 0.
    let lin = |ctx: &Ctx, h0: &BigFloat, f0: &BigComplex, h1: &BigFloat, f1: &BigComplex| {
        let num = ctx.sub(&ctx.scale(f1, h0), &ctx.scale(f0, h1));
        let inv = ctx.rdiv(&ctx.real(1.0), &ctx.rsub(h0, h1));
        ctx.scale(&num, &inv)
    };
    let p01 = lin(&ctx, &hs[0], &fs[0], &hs[1], &fs[1]);
    let p12 = lin(&ctx, &hs[1], &fs[1], &hs[2], &fs[2]);
    let p012 = lin(&ctx, &hs[0], &p01, &hs[2], &p12);
    let agree = ctx.agreement_digits(&p12, &p012, work);
    if agree < digits {
        return Err(Error::ExtrapolationUnstable(format!(
            "extrapolants agree to {agree} digits, {digits} requested"
        )));
    }
    Ok(BigFloatValue {
        re: p012.re,
        im: p012.im,
        precision_digits: agree,
    })
}
