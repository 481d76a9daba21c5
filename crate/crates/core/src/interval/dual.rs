use super::Real;
use crate::error::{Error, Result};

/// Value enclosure paired with an enclosure of its first derivative in α.
#[derive(Debug, Clone)]
pub struct DualInterval<I> {
    pub val: I,
    pub der: I,
}

impl<I: Real> DualInterval<I> {
    pub fn new(val: I, der: I) -> Self {
        DualInterval { val, der }
    }

    /// The independent variable: derivative exactly one.
    pub fn variable(val: I) -> Self {
        let der = val.one();
        DualInterval { val, der }
    }

    /// Constant lift: derivative exactly zero.
    pub fn constant(val: I) -> Self {
        let der = val.zero();
        DualInterval { val, der }
    }

    pub fn lift_int(&self, n: i64) -> Self {
        DualInterval::constant(self.val.lift_int(n))
    }

    pub fn lift_ratio(&self, p: i64, q: i64) -> Self {
        DualInterval::constant(self.val.lift_ratio(p, q))
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        Ok(DualInterval::new(self.val.add(&rhs.val)?, self.der.add(&rhs.der)?))
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self> {
        Ok(DualInterval::new(self.val.sub(&rhs.val)?, self.der.sub(&rhs.der)?))
    }

    pub fn neg(&self) -> Self {
        DualInterval::new(self.val.neg(), self.der.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        let val = self.val.mul(&rhs.val)?;
        let der = self.der.mul(&rhs.val)?.add(&self.val.mul(&rhs.der)?)?;
        Ok(DualInterval::new(val, der))
    }

    /// Quotient rule `(u/v)' = (u' - (u/v) v') / v`.
    pub fn div(&self, rhs: &Self) -> Result<Self> {
        let val = self.val.div(&rhs.val)?;
        let der = self.der.sub(&val.mul(&rhs.der)?)?.div(&rhs.val)?;
        Ok(DualInterval::new(val, der))
    }

    pub fn add_int(&self, n: i64) -> Result<Self> {
        Ok(DualInterval::new(self.val.add_int(n)?, self.der.clone()))
    }

    pub fn mul_int(&self, n: i64) -> Result<Self> {
        Ok(DualInterval::new(self.val.mul_int(n)?, self.der.mul_int(n)?))
    }

    pub fn mul_ratio(&self, p: i64, q: i64) -> Result<Self> {
        Ok(DualInterval::new(self.val.mul_ratio(p, q)?, self.der.mul_ratio(p, q)?))
    }

    /// Scale by an interval constant.
    pub fn scale(&self, c: &I) -> Result<Self> {
        Ok(DualInterval::new(self.val.mul(c)?, self.der.mul(c)?))
    }

    pub fn sqr(&self) -> Result<Self> {
        let val = self.val.sqr()?;
        let der = self.val.mul(&self.der)?.mul_int(2)?;
        Ok(DualInterval::new(val, der))
    }

    pub fn powi(&self, n: i32) -> Result<Self> {
        if n == 0 {
            return Ok(DualInterval::constant(self.val.one()));
        }
        let val = self.val.powi(n)?;
        let der = self.val.powi(n - 1)?.mul_int(n as i64)?.mul(&self.der)?;
        Ok(DualInterval::new(val, der))
    }

    /// `d sqrt(u) = u' / (2 sqrt(u))`; needs `u > 0` on the whole enclosure.
    pub fn sqrt(&self) -> Result<Self> {
        if !self.val.is_positive() {
            return Err(Error::Domain(format!(
                "derivative of sqrt needs a positive argument, got {:?}",
                self.val
            )));
        }
        let val = self.val.sqrt()?;
        let der = self.der.div(&val.mul_int(2)?)?;
        Ok(DualInterval::new(val, der))
    }

    pub fn ln(&self) -> Result<Self> {
        let val = self.val.ln()?;
        let der = self.der.div(&self.val)?;
        Ok(DualInterval::new(val, der))
    }

    pub fn exp(&self) -> Result<Self> {
        let val = self.val.exp()?;
        let der = val.mul(&self.der)?;
        Ok(DualInterval::new(val, der))
    }

    /// Chain rule through a scalar map with known derivative enclosure.
    pub fn chain(&self, value: I, derivative: &I) -> Result<Self> {
        let der = derivative.mul(&self.der)?;
        Ok(DualInterval::new(value, der))
    }
}
