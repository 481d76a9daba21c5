use std::cell::RefCell;
use std::cmp::Ordering;
use std::fmt;

use astro_float::{BigFloat, Consts, RoundingMode, Sign, Word};
use num_bigint::{BigInt, Sign as BigSign};
use num_rational::BigRational;
use num_traits::Zero;

use super::{PrecisionMode, Real};
use crate::error::{Error, Result};

thread_local! {
    static HALF_LN_2PI: RefCell<Vec<(usize, BigInterval)>> = const { RefCell::new(Vec::new()) };
    // Cache of pi / ln 2 / e expansions used by ln, exp and constants. It only
    // memoizes digits; results never depend on its state.
    static CONSTS: RefCell<Consts> = RefCell::new(Consts::new().expect("constant cache"));
}

fn with_consts<T>(f: impl FnOnce(&mut Consts) -> T) -> T {
    CONSTS.with(|c| f(&mut c.borrow_mut()))
}

const RM: RoundingMode = RoundingMode::ToEven;

/// Closed interval with software floating-point endpoints.
///
/// Operations round to nearest at `bits` significand bits and then move each
/// endpoint outward by whole units in the last place, which dominates the
/// half-ulp rounding error.
#[derive(Clone)]
pub struct BigInterval {
    lo: BigFloat,
    hi: BigFloat,
    bits: usize,
}

#[derive(Clone, Copy)]
enum Dir {
    Down,
    Up,
}

fn check(v: BigFloat, what: &'static str) -> Result<BigFloat> {
    if v.is_nan() || v.is_inf() {
        Err(Error::Overflow(what))
    } else {
        Ok(v)
    }
}

/// Move `v` by `steps` units in its last place toward `dir`.
fn nudge(v: &BigFloat, steps: u32, dir: Dir, bits: usize) -> BigFloat {
    if v.is_zero() {
        return v.clone();
    }
    let mbits = v.mantissa_max_bit_len().unwrap_or(bits) as i64;
    let e = v.exponent().expect("finite value") as i64;
    // value = 0.1xxx * 2^e, so one ulp is 2^(e - mbits); the constant
    // `steps * 2^(e - mbits)` is built as `steps` with a shifted exponent.
    let mut delta = BigFloat::from_u32(steps, 64);
    let de = delta.exponent().expect("nonzero") as i64;
    delta.set_exponent((de + e - mbits) as i32);
    let work = bits.max(mbits as usize) + 64;
    let moved = match dir {
        Dir::Down => v.sub(&delta, work, RM),
        Dir::Up => v.add(&delta, work, RM),
    };
    // rounding back to `bits` must not undo the step, so round a second time
    // in the safe direction by nudging again if it moved back
    let mut out = moved.clone();
    let _ = out.set_precision(bits, RM);
    match dir {
        Dir::Down if out > moved => nudge_once_more(&out, dir, bits),
        Dir::Up if out < moved => nudge_once_more(&out, dir, bits),
        _ => out,
    }
}

fn nudge_once_more(v: &BigFloat, dir: Dir, bits: usize) -> BigFloat {
    nudge(v, 1, dir, bits)
}

/// Whether `r · den = num` holds exactly.
fn is_exact_quotient(r: &BigFloat, num: &BigFloat, den: &BigFloat) -> bool {
    let p = r.mantissa_max_bit_len().unwrap_or(64) + den.mantissa_max_bit_len().unwrap_or(64) + 64;
    r.mul(den, p, RM) == *num
}

fn bigint_to_bigfloat(n: &BigInt) -> BigFloat {
    let (sign, digits) = n.to_u64_digits();
    // wide enough that every partial sum below is exact
    let p = digits.len() * 64 + 128;
    let mut acc = BigFloat::from_u64(0, p);
    for &d in digits.iter().rev() {
        if !acc.is_zero() {
            let e = acc.exponent().expect("nonzero");
            acc.set_exponent(e + 64);
        }
        acc = acc.add(&BigFloat::from_u64(d, 64), p, RM);
    }
    if sign == BigSign::Minus {
        acc = acc.neg();
    }
    acc
}

/// Binary64 approximation within two ulps of `v` (before outward steps).
fn approx_f64(v: &BigFloat) -> f64 {
    match v.as_raw_parts() {
        None => f64::NAN,
        Some((m, _n, s, e, _)) => {
            let top: Word = *m.last().unwrap_or(&0);
            if top == 0 {
                return 0.0;
            }
            let scale = e - 64;
            let mag = if scale < -1070 {
                0.0
            } else if scale > 1000 {
                f64::INFINITY
            } else {
                (top as f64) * 2f64.powi(scale)
            };
            if s == Sign::Neg {
                -mag
            } else {
                mag
            }
        }
    }
}

impl BigInterval {
    pub fn point(v: f64, bits: u32) -> Self {
        assert!(v.is_finite(), "interval endpoints must be finite");
        let bits = bits as usize;
        let x = BigFloat::from_f64(v, bits.max(64));
        BigInterval { lo: x.clone(), hi: x, bits }
    }

    pub fn from_rational(q: &BigRational, bits: u32) -> Result<Self> {
        BigInterval::point(0.0, bits).lift_rational(q)
    }

    pub fn from_rational_bounds(a: &BigRational, b: &BigRational, bits: u32) -> Result<Self> {
        let x = BigInterval::from_rational(a, bits)?;
        let y = BigInterval::from_rational(b, bits)?;
        Ok(x.hull(&y))
    }

    pub fn bits(&self) -> u32 {
        self.bits as u32
    }

    pub fn lo(&self) -> &BigFloat {
        &self.lo
    }

    pub fn hi(&self) -> &BigFloat {
        &self.hi
    }

    fn from_nearest(lo: BigFloat, hi: BigFloat, steps: u32, bits: usize, what: &'static str) -> Result<Self> {
        let lo = check(lo, what)?;
        let hi = check(hi, what)?;
        Ok(BigInterval {
            lo: nudge(&lo, steps, Dir::Down, bits),
            hi: nudge(&hi, steps, Dir::Up, bits),
            bits,
        })
    }

    /// A monotone map applied to both endpoints, once for a point.
    fn endpoint_map(&self, mut f: impl FnMut(&BigFloat) -> BigFloat) -> (BigFloat, BigFloat) {
        let lo = f(&self.lo);
        let hi = if self.hi == self.lo { lo.clone() } else { f(&self.hi) };
        (lo, hi)
    }

    fn zero_straddle(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    fn p(&self) -> usize {
        self.bits
    }
}

impl fmt::Debug for BigInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{:e}, {:e}]@{}", self.lo_f64(), self.hi_f64(), self.bits)
    }
}

fn min_max(c: &[BigFloat]) -> (BigFloat, BigFloat) {
    let mut lo = c[0].clone();
    let mut hi = c[0].clone();
    for v in &c[1..] {
        if v < &lo {
            lo = v.clone();
        }
        if v > &hi {
            hi = v.clone();
        }
    }
    (lo, hi)
}

impl Real for BigInterval {
    fn mode(&self) -> PrecisionMode {
        PrecisionMode::Extended { bits: self.bits as u32 }
    }

    fn lift(&self, v: f64) -> Self {
        BigInterval::point(v, self.bits as u32)
    }

    fn lift_int(&self, n: i64) -> Self {
        let x = BigFloat::from_i64(n, self.p().max(64));
        BigInterval { lo: x.clone(), hi: x, bits: self.bits }
    }

    fn lift_ratio(&self, p: i64, q: i64) -> Self {
        assert!(q != 0, "zero denominator");
        let w = self.p().max(64);
        let num = BigFloat::from_i64(p, w);
        let den = BigFloat::from_i64(q, w);
        let r = num.div(&den, w, RM);
        if is_exact_quotient(&r, &num, &den) && r.mantissa_max_bit_len().is_some_and(|b| b <= self.bits.max(64)) {
            return BigInterval { lo: r.clone(), hi: r, bits: self.bits };
        }
        BigInterval::from_nearest(r.clone(), r, 1, self.bits, "ratio").expect("finite ratio")
    }

    fn lift_rational(&self, q: &BigRational) -> Result<Self> {
        let num = bigint_to_bigfloat(q.numer());
        let den = bigint_to_bigfloat(q.denom());
        if q.denom() == &BigInt::from(1) {
            let mut exact = num.clone();
            let _ = exact.set_precision(self.bits.max(64), RM);
            if exact == num {
                return Ok(BigInterval { lo: exact.clone(), hi: exact, bits: self.bits });
            }
        }
        if q.is_zero() {
            return Ok(self.zero());
        }
        let r = num.div(&den, self.bits, RM);
        if is_exact_quotient(&r, &num, &den) {
            return Ok(BigInterval { lo: r.clone(), hi: r, bits: self.bits });
        }
        BigInterval::from_nearest(r.clone(), r, 1, self.bits, "rational")
    }

    fn pi(&self) -> Self {
        let v = with_consts(|cc| cc.pi(self.bits, RM));
        BigInterval::from_nearest(v.clone(), v, 2, self.bits, "pi").expect("pi")
    }

    fn ln2(&self) -> Self {
        let v = with_consts(|cc| cc.ln_2(self.bits, RM));
        BigInterval::from_nearest(v.clone(), v, 2, self.bits, "ln2").expect("ln2")
    }

    fn half_ln_2pi(&self) -> Self {
        let bits = self.bits;
        if let Some(v) = HALF_LN_2PI.with(|c| c.borrow().iter().find(|(b, _)| *b == bits).map(|(_, v)| v.clone())) {
            return v;
        }
        let v = self.pi().mul_int(2).and_then(|t| t.ln()).and_then(|l| l.mul_ratio(1, 2)).expect("finite constant");
        HALF_LN_2PI.with(|c| c.borrow_mut().push((bits, v.clone())));
        v
    }

    fn lo_f64(&self) -> f64 {
        if self.lo.is_zero() {
            return 0.0;
        }
        let a = approx_f64(&self.lo);
        a.next_down().next_down()
    }

    fn hi_f64(&self) -> f64 {
        if self.hi.is_zero() {
            return 0.0;
        }
        let a = approx_f64(&self.hi);
        a.next_up().next_up()
    }

    fn lo_point(&self) -> Self {
        BigInterval { lo: self.lo.clone(), hi: self.lo.clone(), bits: self.bits }
    }

    fn hi_point(&self) -> Self {
        BigInterval { lo: self.hi.clone(), hi: self.hi.clone(), bits: self.bits }
    }

    fn add(&self, rhs: &Self) -> Result<Self> {
        let p = self.p();
        BigInterval::from_nearest(self.lo.add(&rhs.lo, p, RM), self.hi.add(&rhs.hi, p, RM), 1, p, "add")
    }

    fn sub(&self, rhs: &Self) -> Result<Self> {
        let p = self.p();
        BigInterval::from_nearest(self.lo.sub(&rhs.hi, p, RM), self.hi.sub(&rhs.lo, p, RM), 1, p, "sub")
    }

    fn mul(&self, rhs: &Self) -> Result<Self> {
        let p = self.p();
        let c = [
            self.lo.mul(&rhs.lo, p, RM),
            self.lo.mul(&rhs.hi, p, RM),
            self.hi.mul(&rhs.lo, p, RM),
            self.hi.mul(&rhs.hi, p, RM),
        ];
        let (lo, hi) = min_max(&c);
        BigInterval::from_nearest(lo, hi, 1, p, "mul")
    }

    fn div(&self, rhs: &Self) -> Result<Self> {
        if rhs.zero_straddle() {
            return Err(Error::DivisionByZeroInterval);
        }
        let p = self.p();
        let c = [
            self.lo.div(&rhs.lo, p, RM),
            self.lo.div(&rhs.hi, p, RM),
            self.hi.div(&rhs.lo, p, RM),
            self.hi.div(&rhs.hi, p, RM),
        ];
        let (lo, hi) = min_max(&c);
        BigInterval::from_nearest(lo, hi, 1, p, "div")
    }

    fn neg(&self) -> Self {
        BigInterval { lo: self.hi.neg(), hi: self.lo.neg(), bits: self.bits }
    }

    fn sqr(&self) -> Result<Self> {
        let p = self.p();
        let a = self.lo.abs();
        let b = self.hi.abs();
        let (small, large) = if a < b { (a, b) } else { (b, a) };
        let lo = if self.zero_straddle() {
            BigFloat::from_u64(0, p)
        } else {
            small.mul(&small, p, RM)
        };
        let hi = large.mul(&large, p, RM);
        BigInterval::from_nearest(lo, hi, 1, p, "sqr")
    }

    fn sqrt(&self) -> Result<Self> {
        if self.lo.is_negative() {
            return Err(Error::Domain(format!("sqrt of {self:?}")));
        }
        let p = self.p();
        let (lo, hi) = self.endpoint_map(|v| v.sqrt(p, RM));
        let mut r = BigInterval::from_nearest(lo, hi, 1, p, "sqrt")?;
        if r.lo.is_negative() {
            r.lo = BigFloat::from_u64(0, p);
        }
        Ok(r)
    }

    fn cbrt(&self) -> Result<Self> {
        let p = self.p();
        let (lo, hi) = self.endpoint_map(|v| v.cbrt(p, RM));
        BigInterval::from_nearest(lo, hi, 2, p, "cbrt")
    }

    fn ln(&self) -> Result<Self> {
        if !self.lo.is_positive() {
            return Err(Error::Domain(format!("ln of {self:?}")));
        }
        let p = self.p();
        let (lo, hi) = with_consts(|cc| self.endpoint_map(|v| v.ln(p, RM, cc)));
        BigInterval::from_nearest(lo, hi, 2, p, "ln")
    }

    fn exp(&self) -> Result<Self> {
        let p = self.p();
        let (lo, hi) = with_consts(|cc| self.endpoint_map(|v| v.exp(p, RM, cc)));
        let mut r = BigInterval::from_nearest(lo, hi, 2, p, "exp")?;
        if r.lo.is_negative() {
            r.lo = BigFloat::from_u64(0, p);
        }
        Ok(r)
    }

    fn hull(&self, other: &Self) -> Self {
        let lo = if other.lo < self.lo { other.lo.clone() } else { self.lo.clone() };
        let hi = if other.hi > self.hi { other.hi.clone() } else { self.hi.clone() };
        BigInterval { lo, hi, bits: self.bits.max(other.bits) }
    }

    fn intersect(&self, other: &Self) -> Option<Self> {
        let lo = if other.lo > self.lo { other.lo.clone() } else { self.lo.clone() };
        let hi = if other.hi < self.hi { other.hi.clone() } else { self.hi.clone() };
        (lo.partial_cmp(&hi) != Some(Ordering::Greater)).then_some(BigInterval {
            lo,
            hi,
            bits: self.bits.max(other.bits),
        })
    }

    fn symmetric_hull(&self) -> Self {
        let a = self.lo.abs();
        let b = self.hi.abs();
        let m = if a > b { a } else { b };
        BigInterval { lo: m.neg(), hi: m, bits: self.bits }
    }

    fn clamp_lo_zero(&self) -> Self {
        if self.lo.is_negative() && !self.hi.is_negative() {
            BigInterval { lo: BigFloat::from_u64(0, self.p()), hi: self.hi.clone(), bits: self.bits }
        } else {
            self.clone()
        }
    }

    fn gt(&self, c: f64) -> bool {
        self.lo > BigFloat::from_f64(c, 64)
    }

    fn lt(&self, c: f64) -> bool {
        self.hi < BigFloat::from_f64(c, 64)
    }

    fn contains_f64(&self, c: f64) -> bool {
        let c = BigFloat::from_f64(c, 64);
        self.lo <= c && c <= self.hi
    }

    fn width_f64(&self) -> f64 {
        let w = self.hi.sub(&self.lo, self.bits + 64, RM);
        if w.is_zero() {
            0.0
        } else {
            approx_f64(&w).next_up().next_up()
        }
    }

    fn subset_of(&self, other: &Self) -> bool {
        other.lo <= self.lo && self.hi <= other.hi
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iv(lo: f64, hi: f64) -> BigInterval {
        BigInterval::point(lo, 128).hull(&BigInterval::point(hi, 128))
    }

    #[test]
    fn nudge_moves_by_one_ulp() {
        let one = BigFloat::from_f64(1.0, 128);
        let up = nudge(&one, 1, Dir::Up, 128);
        let down = nudge(&one, 1, Dir::Down, 128);
        assert!(up > one && down < one);
        let diff = up.sub(&one, 256, RM);
        // 2^-127 for a 128-bit mantissa of a value in [1, 2)
        let expect = BigFloat::from_f64(2f64.powi(-127), 64);
        assert_eq!(diff, expect);
    }

    #[test]
    fn third_is_bracketed_tightly() {
        let t = iv(0.0, 0.0).lift_ratio(1, 3);
        let three = t.mul_int(3).unwrap();
        assert!(three.contains_f64(1.0));
        assert!(three.width_f64() < 1e-30);
    }

    #[test]
    fn f64_conversion_is_outward() {
        let t = iv(0.0, 0.0).lift_ratio(1, 3);
        assert!(t.lo_f64() < 1.0 / 3.0 && t.hi_f64() > 1.0 / 3.0);
        let n = t.neg();
        assert!(n.lo_f64() < -1.0 / 3.0 && n.hi_f64() > -1.0 / 3.0);
        let big = iv(0.0, 0.0).lift_int(1 << 40);
        assert!(big.contains_f64((1u64 << 40) as f64));
    }

    #[test]
    fn rational_lift_of_large_integers_is_exact() {
        let q = BigRational::from_integer(BigInt::from(8833393336320i64));
        let x = BigInterval::from_rational(&q, 128).unwrap();
        assert_eq!(x.lo(), x.hi());
        assert!(x.contains_f64(8833393336320.0));
    }

    #[test]
    fn elementary_functions_contain_exact_values() {
        let x = iv(2.0, 2.0);
        let l = x.ln().unwrap();
        assert!(l.width_f64() < 1e-36);
        assert!(l.overlaps(&x.lift(std::f64::consts::LN_2).hull(&x.lift(std::f64::consts::LN_2.next_up()))));
        assert!(l.subset_of(&x.ln2().hull(&l)));
        let e = iv(0.0, 1.0).exp().unwrap();
        assert!(e.contains_f64(1.0) && e.gt(0.99));
        assert!(iv(8.0, 27.0).cbrt().unwrap().contains_f64(3.0));
        assert!(iv(-1.0, 1.0).sqrt().is_err());
        assert!(iv(1.0, 2.0).div(&iv(-1.0, 1.0)).is_err());
    }
}
