use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;

use super::{PrecisionMode, Real};
use crate::error::{Error, Result};

/// Closed interval with binary64 endpoints.
///
/// `lo <= hi` and both endpoints finite. Every operation returns an enclosure
/// of the exact real result: the round-to-nearest endpoint is kept when an
/// error-free transformation proves it is already on the safe side, and is
/// stepped one representable value outward otherwise.
#[derive(Clone, Copy, PartialEq)]
pub struct Interval {
    lo: f64,
    hi: f64,
}

// Below this magnitude products and quotients may lose bits to gradual
// underflow and the error-free transformations stop being exact.
const EFT_FLOOR: f64 = 1e-290;

#[inline]
fn down(x: f64) -> f64 {
    x.next_down()
}

#[inline]
fn up(x: f64) -> f64 {
    x.next_up()
}

fn finite(x: f64, what: &'static str) -> Result<f64> {
    if x.is_finite() {
        Ok(x)
    } else {
        Err(Error::Overflow(what))
    }
}

/// `(round_down(a+b), round_up(a+b))` via TwoSum.
fn add_rd_ru(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let err = (a - (s - bb)) + (b - bb);
    if err > 0.0 {
        (s, up(s))
    } else if err < 0.0 {
        (down(s), s)
    } else {
        (s, s)
    }
}

fn mul_rd_ru(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    if p != 0.0 && p.abs() < EFT_FLOOR {
        return (down(p), up(p));
    }
    if p == 0.0 && a != 0.0 && b != 0.0 {
        // total underflow
        return (down(p), up(p));
    }
    let err = a.mul_add(b, -p);
    if err > 0.0 {
        (p, up(p))
    } else if err < 0.0 {
        (down(p), p)
    } else {
        (p, p)
    }
}

fn div_rd_ru(a: f64, b: f64) -> (f64, f64) {
    let q = a / b;
    if q.abs() < EFT_FLOOR || a.abs() < EFT_FLOOR {
        if q == 0.0 && a == 0.0 {
            return (0.0, 0.0);
        }
        return (down(q), up(q));
    }
    // a - q*b is exact; the exact quotient exceeds q iff r/b > 0
    let r = (-q).mul_add(b, a);
    let above = (r > 0.0) == (b > 0.0);
    if r == 0.0 {
        (q, q)
    } else if above {
        (q, up(q))
    } else {
        (down(q), q)
    }
}

fn sqrt_rd_ru(x: f64) -> (f64, f64) {
    let s = x.sqrt();
    if s == 0.0 {
        return (0.0, 0.0);
    }
    if x < EFT_FLOOR {
        return (down(s).max(0.0), up(s));
    }
    let r = (-s).mul_add(s, x);
    if r > 0.0 {
        (s, up(s))
    } else if r < 0.0 {
        (down(s), s)
    } else {
        (s, s)
    }
}

/// Outward steps applied to libm results (`ln`, `exp`, `cbrt`), whose
/// accuracy is below one unit in the last place but not correctly rounded.
const LIBM_STEPS: usize = 2;

fn step_down(mut x: f64, n: usize) -> f64 {
    for _ in 0..n {
        x = down(x);
    }
    x
}

fn step_up(mut x: f64, n: usize) -> f64 {
    for _ in 0..n {
        x = up(x);
    }
    x
}

/// Exact comparison of a binary64 value with a rational.
fn cmp_f64_rational(x: f64, q: &BigRational) -> std::cmp::Ordering {
    let xr = BigRational::from_float(x).expect("finite");
    xr.cmp(q)
}

impl Interval {
    pub fn new(lo: f64, hi: f64) -> Result<Self> {
        if lo.is_nan() || hi.is_nan() || lo.is_infinite() || hi.is_infinite() {
            return Err(Error::Overflow("interval construction"));
        }
        if lo > hi {
            return Err(Error::InvalidInterval { lo, hi });
        }
        Ok(Interval { lo, hi })
    }

    /// Degenerate interval; panics on a non-finite value.
    pub fn point(v: f64) -> Self {
        assert!(v.is_finite(), "interval endpoints must be finite");
        Interval { lo: v, hi: v }
    }

    pub fn ratio(p: i64, q: i64) -> Self {
        Interval::point(0.0).lift_ratio(p, q)
    }

    pub fn from_rational(q: &BigRational) -> Result<Self> {
        Interval::point(0.0).lift_rational(q)
    }

    /// Outward hull of two rationals, in either order.
    pub fn from_rational_bounds(a: &BigRational, b: &BigRational) -> Result<Self> {
        let x = Interval::from_rational(a)?;
        let y = Interval::from_rational(b)?;
        Ok(x.hull(&y))
    }

    pub fn lo(&self) -> f64 {
        self.lo
    }

    pub fn hi(&self) -> f64 {
        self.hi
    }

    /// `hi - lo`, rounded up.
    pub fn width(&self) -> f64 {
        add_rd_ru(self.hi, -self.lo).1
    }

    pub fn midpoint(&self) -> f64 {
        let m = 0.5 * self.lo + 0.5 * self.hi;
        m.clamp(self.lo, self.hi)
    }

    pub fn contains(&self, p: f64) -> bool {
        self.lo <= p && p <= self.hi
    }

    /// Halves sharing the midpoint.
    pub fn split(&self) -> (Interval, Interval) {
        let m = self.midpoint();
        (
            Interval { lo: self.lo, hi: m },
            Interval { lo: m, hi: self.hi },
        )
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }
}

impl fmt::Debug for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{:e}, {:e}]", self.lo, self.hi)
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

impl Real for Interval {
    fn mode(&self) -> PrecisionMode {
        PrecisionMode::Machine
    }

    fn lift(&self, v: f64) -> Self {
        Interval::point(v)
    }

    fn lift_int(&self, n: i64) -> Self {
        let f = n as f64;
        if f as i128 == n as i128 {
            return Interval::point(f);
        }
        self.lift_ratio(n, 1)
    }

    fn lift_ratio(&self, p: i64, q: i64) -> Self {
        assert!(q != 0, "zero denominator");
        let pf = p as f64;
        let qf = q as f64;
        if pf as i128 == p as i128 && qf as i128 == q as i128 {
            let (lo, hi) = div_rd_ru(pf, qf);
            return Interval { lo, hi };
        }
        let r = BigRational::new(BigInt::from(p), BigInt::from(q));
        self.lift_rational(&r).expect("i64 ratio is finite")
    }

    fn lift_rational(&self, q: &BigRational) -> Result<Self> {
        let approx = q
            .to_f64()
            .filter(|v| v.is_finite())
            .ok_or(Error::Overflow("rational conversion"))?;
        let mut lo = approx;
        while cmp_f64_rational(lo, q).is_gt() {
            lo = down(lo);
        }
        let mut hi = approx;
        while cmp_f64_rational(hi, q).is_lt() {
            hi = up(hi);
        }
        Interval::new(finite(lo, "rational")?, finite(hi, "rational")?)
    }

    fn pi(&self) -> Self {
        let p = std::f64::consts::PI;
        Interval { lo: down(p), hi: up(p) }
    }

    fn ln2(&self) -> Self {
        let l = std::f64::consts::LN_2;
        Interval { lo: down(l), hi: up(l) }
    }

    fn lo_f64(&self) -> f64 {
        self.lo
    }

    fn hi_f64(&self) -> f64 {
        self.hi
    }

    fn lo_point(&self) -> Self {
        Interval::point(self.lo)
    }

    fn hi_point(&self) -> Self {
        Interval::point(self.hi)
    }

    fn add(&self, rhs: &Self) -> Result<Self> {
        let lo = add_rd_ru(self.lo, rhs.lo).0;
        let hi = add_rd_ru(self.hi, rhs.hi).1;
        Interval::new(finite(lo, "add")?, finite(hi, "add")?)
    }

    fn sub(&self, rhs: &Self) -> Result<Self> {
        let lo = add_rd_ru(self.lo, -rhs.hi).0;
        let hi = add_rd_ru(self.hi, -rhs.lo).1;
        Interval::new(finite(lo, "sub")?, finite(hi, "sub")?)
    }

    fn mul(&self, rhs: &Self) -> Result<Self> {
        let cands = [
            mul_rd_ru(self.lo, rhs.lo),
            mul_rd_ru(self.lo, rhs.hi),
            mul_rd_ru(self.hi, rhs.lo),
            mul_rd_ru(self.hi, rhs.hi),
        ];
        let lo = cands.iter().map(|c| c.0).fold(f64::INFINITY, f64::min);
        let hi = cands.iter().map(|c| c.1).fold(f64::NEG_INFINITY, f64::max);
        Interval::new(finite(lo, "mul")?, finite(hi, "mul")?)
    }

    fn div(&self, rhs: &Self) -> Result<Self> {
        if rhs.lo <= 0.0 && rhs.hi >= 0.0 {
            return Err(Error::DivisionByZeroInterval);
        }
        let cands = [
            div_rd_ru(self.lo, rhs.lo),
            div_rd_ru(self.lo, rhs.hi),
            div_rd_ru(self.hi, rhs.lo),
            div_rd_ru(self.hi, rhs.hi),
        ];
        let lo = cands.iter().map(|c| c.0).fold(f64::INFINITY, f64::min);
        let hi = cands.iter().map(|c| c.1).fold(f64::NEG_INFINITY, f64::max);
        Interval::new(finite(lo, "div")?, finite(hi, "div")?)
    }

    fn neg(&self) -> Self {
        Interval { lo: -self.hi, hi: -self.lo }
    }

    fn sqr(&self) -> Result<Self> {
        let (a, b) = (self.lo.abs(), self.hi.abs());
        let (small, large) = if a < b { (a, b) } else { (b, a) };
        let lo = if self.lo <= 0.0 && self.hi >= 0.0 {
            0.0
        } else {
            mul_rd_ru(small, small).0
        };
        let hi = mul_rd_ru(large, large).1;
        Interval::new(finite(lo, "sqr")?, finite(hi, "sqr")?)
    }

    fn sqrt(&self) -> Result<Self> {
        if self.lo < 0.0 {
            return Err(Error::Domain(format!("sqrt of {self:?}")));
        }
        Ok(Interval {
            lo: sqrt_rd_ru(self.lo).0,
            hi: sqrt_rd_ru(self.hi).1,
        })
    }

    fn cbrt(&self) -> Result<Self> {
        let lo = self.lo.cbrt();
        let hi = self.hi.cbrt();
        let lo = if self.lo == 0.0 { 0.0 } else { step_down(lo, LIBM_STEPS) };
        let hi = if self.hi == 0.0 { 0.0 } else { step_up(hi, LIBM_STEPS) };
        Interval::new(lo, hi)
    }

    fn ln(&self) -> Result<Self> {
        if self.lo <= 0.0 {
            return Err(Error::Domain(format!("ln of {self:?}")));
        }
        let lo = if self.lo == 1.0 { 0.0 } else { step_down(self.lo.ln(), LIBM_STEPS) };
        let hi = if self.hi == 1.0 { 0.0 } else { step_up(self.hi.ln(), LIBM_STEPS) };
        Interval::new(lo, hi)
    }

    fn exp(&self) -> Result<Self> {
        let lo = if self.lo == 0.0 {
            1.0
        } else {
            step_down(self.lo.exp(), LIBM_STEPS).max(0.0)
        };
        let hi = if self.hi == 0.0 { 1.0 } else { step_up(self.hi.exp(), LIBM_STEPS) };
        Interval::new(lo, finite(hi, "exp")?)
    }

    fn hull(&self, other: &Self) -> Self {
        Interval {
            lo: self.lo.min(other.lo),
            hi: self.hi.max(other.hi),
        }
    }

    fn intersect(&self, other: &Self) -> Option<Self> {
        let lo = self.lo.max(other.lo);
        let hi = self.hi.min(other.hi);
        (lo <= hi).then_some(Interval { lo, hi })
    }

    fn symmetric_hull(&self) -> Self {
        let m = self.lo.abs().max(self.hi.abs());
        Interval { lo: -m, hi: m }
    }

    fn clamp_lo_zero(&self) -> Self {
        if self.lo < 0.0 && self.hi >= 0.0 {
            Interval { lo: 0.0, hi: self.hi }
        } else {
            *self
        }
    }

    fn gt(&self, c: f64) -> bool {
        self.lo > c
    }

    fn lt(&self, c: f64) -> bool {
        self.hi < c
    }

    fn contains_f64(&self, c: f64) -> bool {
        self.contains(c)
    }

    fn subset_of(&self, other: &Self) -> bool {
        other.lo <= self.lo && self.hi <= other.hi
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iv(lo: f64, hi: f64) -> Interval {
        Interval::new(lo, hi).unwrap()
    }

    #[test]
    fn exact_endpoint_arithmetic_stays_exact() {
        assert_eq!(iv(1.0, 2.0).add(&iv(3.0, 4.0)).unwrap(), iv(4.0, 6.0));
        assert_eq!(iv(-1.0, 2.0).mul(&iv(3.0, 4.0)).unwrap(), iv(-4.0, 8.0));
        assert_eq!(iv(4.0, 9.0).sqrt().unwrap(), iv(2.0, 3.0));
    }

    #[test]
    fn division_by_zero_interval() {
        assert!(matches!(
            iv(1.0, 2.0).div(&iv(-1.0, 1.0)),
            Err(Error::DivisionByZeroInterval)
        ));
    }

    #[test]
    fn construction_rejects_bad_order_and_infinity() {
        assert!(matches!(
            Interval::new(2.0, 1.0),
            Err(Error::InvalidInterval { .. })
        ));
        assert!(Interval::new(0.0, f64::INFINITY).is_err());
    }

    #[test]
    fn overflow_is_an_error() {
        let big = iv(1e300, 1e300);
        assert!(matches!(big.mul(&big), Err(Error::Overflow(_))));
        assert!(iv(800.0, 800.0).exp().is_err());
    }

    #[test]
    fn inexact_quotient_is_bracketed() {
        let third = Interval::ratio(1, 3);
        assert!(third.lo() < third.hi());
        let r = BigRational::new(1.into(), 3.into());
        assert!(cmp_f64_rational(third.lo(), &r).is_lt());
        assert!(cmp_f64_rational(third.hi(), &r).is_gt());
        assert_eq!(third.hi(), up(third.lo()));
    }

    #[test]
    fn split_and_accessors() {
        let (a, b) = iv(0.0, 2.0).split();
        assert_eq!(a, iv(0.0, 1.0));
        assert_eq!(b, iv(1.0, 2.0));
        assert_eq!(iv(1.0, 4.0).width(), 3.0);
        assert!(iv(0.0, 1.0).contains(0.5));
        assert!(!iv(0.0, 1.0).contains(1.5));
    }

    #[test]
    fn elementary_examples() {
        let l = iv(1.0, std::f64::consts::E).ln().unwrap();
        assert!(l.contains(0.0) && l.contains(1.0));
        assert!(l.width() < 1.0 + 1e-14);
        let c = iv(8.0, 27.0).cbrt().unwrap();
        assert!(c.contains(2.0) && c.contains(3.0));
        assert!(c.width() < 1.0 + 1e-14);
        let neg = iv(-8.0, -8.0).cbrt().unwrap();
        assert!(neg.contains(-2.0));
        assert!(iv(-1.0, 1.0).sqrt().is_err());
        assert!(iv(0.0, 1.0).ln().is_err());
    }

    #[test]
    fn sqr_straddling_zero() {
        assert_eq!(iv(-2.0, 3.0).sqr().unwrap(), iv(0.0, 9.0));
        assert_eq!(iv(-3.0, -2.0).sqr().unwrap(), iv(4.0, 9.0));
        assert_eq!(iv(-2.0, 3.0).powi(3).unwrap(), iv(-8.0, 27.0));
        assert!(iv(-1.0, 1.0).powi(-2).is_err());
    }

    #[test]
    fn rational_lift_brackets_exactly() {
        let q = BigRational::new(BigInt::from(7), BigInt::from(10));
        let x = Interval::from_rational(&q).unwrap();
        assert!(cmp_f64_rational(x.lo(), &q).is_le());
        assert!(cmp_f64_rational(x.hi(), &q).is_ge());
        assert!(x.width() <= 2.0 * f64::EPSILON);
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        assert!(Interval::from_rational(&half).unwrap().is_point());
    }
}
