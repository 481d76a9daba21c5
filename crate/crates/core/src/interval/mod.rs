//! Outward-rounded interval arithmetic.
//!
//! Two endpoint backends share one algebra, the [`Real`] trait: [`Interval`]
//! keeps IEEE binary64 endpoints, [`BigInterval`] keeps software floats of a
//! configurable significand width. Every enclosure in the crate is computed
//! through this trait, so the special functions and the named functions of
//! the proof are written once and evaluated at whatever precision a claim
//! needs.

mod dual;
mod extended;
mod machine;

use std::fmt;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

pub use dual::DualInterval;
pub use extended::BigInterval;
pub use machine::Interval;

use crate::error::Result;

/// Endpoint representation used for an evaluation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "lowercase")]
pub enum PrecisionMode {
    /// binary64 endpoints, each rounded outward after every operation.
    Machine,
    /// Software floating point with `bits` significand bits (at least 64).
    Extended { bits: u32 },
}

impl PrecisionMode {
    pub const DEFAULT_EXTENDED_BITS: u32 = 128;

    pub fn extended(bits: u32) -> Result<Self> {
        if bits < 64 {
            return Err(crate::Error::Precision(format!(
                "extended mode needs at least 64 bits, got {bits}"
            )));
        }
        Ok(PrecisionMode::Extended { bits })
    }

    /// Significand bits carried by this mode.
    pub fn bits(self) -> u32 {
        match self {
            PrecisionMode::Machine => 53,
            PrecisionMode::Extended { bits } => bits,
        }
    }
}

impl fmt::Display for PrecisionMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PrecisionMode::Machine => write!(f, "machine"),
            PrecisionMode::Extended { bits } => write!(f, "extended({bits})"),
        }
    }
}

/// Interval algebra shared by both endpoint backends.
///
/// Constructors that need a precision (`lift`, `pi`, ...) take `&self` as a
/// template: the result lives in the same backend at the same precision.
pub trait Real: Clone + fmt::Debug + Send + Sync + Sized {
    fn mode(&self) -> PrecisionMode;

    /// Exact lift of a binary64 value.
    fn lift(&self, v: f64) -> Self;
    fn lift_int(&self, n: i64) -> Self;
    /// Tightest outward enclosure of `p/q`.
    fn lift_ratio(&self, p: i64, q: i64) -> Self;
    fn lift_rational(&self, q: &BigRational) -> Result<Self>;
    fn pi(&self) -> Self;
    fn ln2(&self) -> Self;
    /// ½ ln(2π).
    fn half_ln_2pi(&self) -> Self {
        self.pi().mul_int(2).and_then(|t| t.ln()).and_then(|l| l.mul_ratio(1, 2)).expect("finite constant")
    }

    /// Lower endpoint rounded down to binary64.
    fn lo_f64(&self) -> f64;
    /// Upper endpoint rounded up to binary64.
    fn hi_f64(&self) -> f64;
    /// Degenerate interval at the lower endpoint.
    fn lo_point(&self) -> Self;
    fn hi_point(&self) -> Self;

    fn add(&self, rhs: &Self) -> Result<Self>;
    fn sub(&self, rhs: &Self) -> Result<Self>;
    fn mul(&self, rhs: &Self) -> Result<Self>;
    fn div(&self, rhs: &Self) -> Result<Self>;
    fn neg(&self) -> Self;
    /// Square, tight when the interval straddles zero.
    fn sqr(&self) -> Result<Self>;

    fn sqrt(&self) -> Result<Self>;
    fn cbrt(&self) -> Result<Self>;
    fn ln(&self) -> Result<Self>;
    fn exp(&self) -> Result<Self>;

    fn hull(&self, other: &Self) -> Self;
    fn intersect(&self, other: &Self) -> Option<Self>;
    /// `[-m, m]` with `m = max(|lo|, |hi|)`.
    fn symmetric_hull(&self) -> Self;
    /// `[0, hi]` when `lo < 0 <= hi`; used to absorb rounding slack below zero.
    fn clamp_lo_zero(&self) -> Self;

    /// True when the lower endpoint is strictly above `c`.
    fn gt(&self, c: f64) -> bool;
    /// True when the upper endpoint is strictly below `c`.
    fn lt(&self, c: f64) -> bool;
    fn contains_f64(&self, c: f64) -> bool;
    fn subset_of(&self, other: &Self) -> bool;

    fn is_positive(&self) -> bool {
        self.gt(0.0)
    }
    fn is_negative(&self) -> bool {
        self.lt(0.0)
    }
    fn contains_zero(&self) -> bool {
        self.contains_f64(0.0)
    }
    fn overlaps(&self, other: &Self) -> bool {
        self.intersect(other).is_some()
    }
    fn width_f64(&self) -> f64 {
        let w = self.hi_f64() - self.lo_f64();
        w.next_up()
    }

    fn zero(&self) -> Self {
        self.lift(0.0)
    }
    fn one(&self) -> Self {
        self.lift(1.0)
    }
    fn recip(&self) -> Result<Self> {
        self.one().div(self)
    }
    fn add_int(&self, n: i64) -> Result<Self> {
        self.add(&self.lift_int(n))
    }
    fn mul_int(&self, n: i64) -> Result<Self> {
        self.mul(&self.lift_int(n))
    }
    fn add_ratio(&self, p: i64, q: i64) -> Result<Self> {
        self.add(&self.lift_ratio(p, q))
    }
    fn mul_ratio(&self, p: i64, q: i64) -> Result<Self> {
        self.mul(&self.lift_ratio(p, q))
    }

    /// Integer power; negative exponents require `0 ∉ self`.
    fn powi(&self, n: i32) -> Result<Self> {
        if n < 0 {
            if self.contains_zero() {
                return Err(crate::Error::Domain(format!(
                    "negative power {n} of an interval containing zero"
                )));
            }
            return self.powi(-n)?.recip();
        }
        if n == 0 {
            return Ok(self.one());
        }
        if n % 2 == 0 {
            return self.sqr()?.powi(n / 2);
        }
        // odd powers are monotone, so the endpoint powers bound the range
        let lo = pow_by_squaring(&self.lo_point(), n as u32)?;
        let hi = pow_by_squaring(&self.hi_point(), n as u32)?;
        Ok(lo.hull(&hi))
    }

    /// Horner evaluation of an integer-coefficient polynomial, ascending order.
    fn poly_i64(&self, coeffs: &[i64]) -> Result<Self> {
        let mut acc = self.zero();
        for &c in coeffs.iter().rev() {
            acc = acc.mul(self)?.add_int(c)?;
        }
        Ok(acc)
    }
}

fn pow_by_squaring<I: Real>(x: &I, mut n: u32) -> Result<I> {
    let mut base = x.clone();
    let mut acc = x.one();
    while n > 0 {
        if n & 1 == 1 {
            acc = acc.mul(&base)?;
        }
        n >>= 1;
        if n > 0 {
            base = base.mul(&base)?;
        }
    }
    Ok(acc)
}

/// Binary operation selector for [`arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

pub fn arith<I: Real>(op: ArithOp, x: &I, y: &I) -> Result<I> {
    match op {
        ArithOp::Add => x.add(y),
        ArithOp::Sub => x.sub(y),
        ArithOp::Mul => x.mul(y),
        ArithOp::Div => x.div(y),
    }
}

/// Unary elementary function selector for [`elementary`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Elementary {
    Sqrt,
    Cbrt,
    Ln,
    Exp,
    PowInt(i32),
}

pub fn elementary<I: Real>(f: Elementary, x: &I) -> Result<I> {
    match f {
        Elementary::Sqrt => x.sqrt(),
        Elementary::Cbrt => x.cbrt(),
        Elementary::Ln => x.ln(),
        Elementary::Exp => x.exp(),
        Elementary::PowInt(n) => x.powi(n),
    }
}

/// [`arith`] lifted to dual intervals: sum, difference, product and quotient
/// rules on the derivative component.
pub fn dual_arith<I: Real>(op: ArithOp, x: &DualInterval<I>, y: &DualInterval<I>) -> Result<DualInterval<I>> {
    match op {
        ArithOp::Add => x.add(y),
        ArithOp::Sub => x.sub(y),
        ArithOp::Mul => x.mul(y),
        ArithOp::Div => x.div(y),
    }
}
