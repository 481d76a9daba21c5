//! The named functions of the proof as enclosure maps on α ∈ [0, 2] (d = 3).
//!
//! Each formula is written once against [`Arith`], so the same code yields a
//! value enclosure on an interval and a value/derivative pair on a
//! [`DualInterval`].

mod alphastar;
pub mod exact;
mod gammafn;
mod hfun;

use std::fmt;

pub use alphastar::{alpha_star, AlphaStar};
pub(crate) use alphastar::alpha_star_bracket;
pub use gammafn::{
    f_cap, f_cap_logderiv, f_prime, f_prime_at_zero, fh_pair, in10_ratio, in10_ratio_via_f,
    lambda_cap, mu, mu2_via_gamma, phi, phi_prime, rs_bundle, r_prime_constant, t_cap,
    t_via_f_cap, RsBundle,
};
pub use hfun::{
    a_coeff, b_coeff, discriminant, g_quadratic, h_curvature, h_prime, h_simplified,
    radicand, x_term, HCurvature, A_TAIL_COEFFS, A_X_COEFFS, A_X_COEFFS_PRINTED,
};

#[allow(unused_imports)]
pub(crate) use gammafn::{f_cap_n, f_ratio_n, half_plus, lambda_n, mu_n, r_n, r_prime_n, t_cap_n};
#[allow(unused_imports)]
pub(crate) use hfun::{a_n, g_n, h_simplified_n, x_n, RADICAND};

use crate::error::{Error, Result};
use crate::interval::{DualInterval, Real};
use crate::specfun;

/// Space dimension, fixed for the whole crate.
pub const DIMENSION: u32 = 3;

/// An enclosure of α inside [0, 2].
#[derive(Debug, Clone)]
pub struct AlphaDomain<I> {
    interval: I,
}

impl<I: Real> AlphaDomain<I> {
    pub fn new(interval: I) -> Result<Self> {
        if interval.lo_point().lt(0.0) || interval.hi_point().gt(2.0) {
            return Err(Error::Domain(format!("alpha {interval:?} outside [0, 2]")));
        }
        Ok(AlphaDomain { interval })
    }

    pub fn interval(&self) -> &I {
        &self.interval
    }

    pub fn dimension(&self) -> u32 {
        DIMENSION
    }
}

/// Arithmetic shared by value enclosures and dual enclosures.
pub trait Arith: Clone + fmt::Debug {
    type Base: Real;

    fn value(&self) -> &Self::Base;
    /// `c` as a constant in the same representation.
    fn constant(&self, c: Self::Base) -> Self;

    fn add(&self, rhs: &Self) -> Result<Self>;
    fn sub(&self, rhs: &Self) -> Result<Self>;
    fn mul(&self, rhs: &Self) -> Result<Self>;
    fn div(&self, rhs: &Self) -> Result<Self>;
    fn neg(&self) -> Self;
    fn sqr(&self) -> Result<Self>;
    fn powi(&self, n: i32) -> Result<Self>;
    fn sqrt(&self) -> Result<Self>;
    fn exp(&self) -> Result<Self>;
    fn lngamma(&self) -> Result<Self>;
    fn digamma(&self) -> Result<Self>;

    fn int(&self, n: i64) -> Self {
        self.constant(self.value().lift_int(n))
    }
    fn ratio(&self, p: i64, q: i64) -> Self {
        self.constant(self.value().lift_ratio(p, q))
    }
    fn add_int(&self, n: i64) -> Result<Self> {
        self.add(&self.int(n))
    }
    fn add_ratio(&self, p: i64, q: i64) -> Result<Self> {
        self.add(&self.ratio(p, q))
    }
    fn mul_int(&self, n: i64) -> Result<Self> {
        self.mul(&self.int(n))
    }
    fn mul_ratio(&self, p: i64, q: i64) -> Result<Self> {
        self.mul(&self.ratio(p, q))
    }
    /// `c0 + c1 α + c2 α² + …` by Horner's rule.
    fn poly(&self, coeffs: &[i64]) -> Result<Self> {
        let mut acc = self.int(*coeffs.last().expect("nonempty coefficients"));
        for &c in coeffs.iter().rev().skip(1) {
            acc = acc.mul(self)?.add_int(c)?;
        }
        Ok(acc)
    }
}

impl<I: Real> Arith for I {
    type Base = I;

    fn value(&self) -> &I {
        self
    }
    fn constant(&self, c: I) -> I {
        c
    }
    fn add(&self, rhs: &I) -> Result<I> {
        Real::add(self, rhs)
    }
    fn sub(&self, rhs: &I) -> Result<I> {
        Real::sub(self, rhs)
    }
    fn mul(&self, rhs: &I) -> Result<I> {
        Real::mul(self, rhs)
    }
    fn div(&self, rhs: &I) -> Result<I> {
        Real::div(self, rhs)
    }
    fn neg(&self) -> I {
        Real::neg(self)
    }
    fn sqr(&self) -> Result<I> {
        Real::sqr(self)
    }
    fn powi(&self, n: i32) -> Result<I> {
        Real::powi(self, n)
    }
    fn sqrt(&self) -> Result<I> {
        Real::sqrt(self)
    }
    fn exp(&self) -> Result<I> {
        Real::exp(self)
    }
    fn lngamma(&self) -> Result<I> {
        specfun::lngamma(self)
    }
    fn digamma(&self) -> Result<I> {
        specfun::digamma(self)
    }
}

impl<I: Real> Arith for DualInterval<I> {
    type Base = I;

    fn value(&self) -> &I {
        &self.val
    }
    fn constant(&self, c: I) -> Self {
        DualInterval::constant(c)
    }
    fn add(&self, rhs: &Self) -> Result<Self> {
        DualInterval::add(self, rhs)
    }
    fn sub(&self, rhs: &Self) -> Result<Self> {
        DualInterval::sub(self, rhs)
    }
    fn mul(&self, rhs: &Self) -> Result<Self> {
        DualInterval::mul(self, rhs)
    }
    fn div(&self, rhs: &Self) -> Result<Self> {
        DualInterval::div(self, rhs)
    }
    fn neg(&self) -> Self {
        DualInterval::neg(self)
    }
    fn sqr(&self) -> Result<Self> {
        DualInterval::sqr(self)
    }
    fn powi(&self, n: i32) -> Result<Self> {
        DualInterval::powi(self, n)
    }
    fn sqrt(&self) -> Result<Self> {
        DualInterval::sqrt(self)
    }
    fn exp(&self) -> Result<Self> {
        DualInterval::exp(self)
    }
    fn lngamma(&self) -> Result<Self> {
        specfun::lngamma_dual(self)
    }
    fn digamma(&self) -> Result<Self> {
        specfun::digamma_dual(self)
    }
}

/// Intersection of two enclosures of the same quantity; disjointness means
/// one of them is unsound.
pub(crate) fn agree<I: Real>(x: &I, y: &I, what: &str) -> Result<I> {
    x.intersect(y)
        .ok_or_else(|| Error::EmptyIntersection(format!("{what}: {x:?} vs {y:?}")))
}
