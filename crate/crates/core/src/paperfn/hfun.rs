use super::{agree, AlphaDomain, Arith};
use crate::error::{Error, Result};
use crate::interval::{DualInterval, Real};

/// Coefficients of the x(α)-multiplied group of A(α), from α¹¹ down to α⁰.
pub const A_X_COEFFS: [i64; 12] = [
    9861,
    215061,
    2306391,
    22832627,
    367617434,
    5168851898,
    42711607466,
    202807642502,
    576435831104,
    1071472458168,
    1458665131392,
    1171994600448,
];

/// The same group with the α¹⁰ and α⁹ coefficients as typeset (21506 and
/// 230639). It does not satisfy the curvature identity; kept for the
/// transcription checks.
pub const A_X_COEFFS_PRINTED: [i64; 12] = [
    9861,
    21506,
    230639,
    22832627,
    367617434,
    5168851898,
    42711607466,
    202807642502,
    576435831104,
    1071472458168,
    1458665131392,
    1171994600448,
];

/// Coefficients of the trailing polynomial of A(α), from α¹² down to α⁰.
pub const A_TAIL_COEFFS: [i64; 13] = [
    -9861,
    234441,
    4246101,
    10907731,
    210630942,
    4000462638,
    33568792782,
    263084581722,
    1699521987312,
    6179874342344,
    9813287816640,
    1154602149120,
    -8833393336320,
];

/// Q(α) = α⁴ − 6α³ + 25α² + 1104α + 2944, ascending.
pub(crate) const RADICAND: [i64; 5] = [2944, 1104, 25, -6, 1];

fn ascending<const K: usize>(desc: &[i64; K]) -> [i64; K] {
    let mut a = *desc;
    a.reverse();
    a
}

pub(crate) fn a_n<N: Arith>(a: &N) -> Result<N> {
    let num = a.mul_int(-3)?.add_int(14)?.mul(&a.add_int(3)?)?;
    num.div(&a.add_int(7)?.mul_int(1200)?)
}

pub(crate) fn b_n<N: Arith>(a: &N) -> Result<N> {
    let num = a.poly(&[168, 64, 3, -1])?;
    num.div(&a.add_int(7)?)?.mul_ratio(-1, 120)
}

/// g_α(t) = a(α)t² + b(α)t + α + 2, as (a t + b) t + α + 2.
pub(crate) fn g_n<N: Arith>(a: &N, t: &N) -> Result<N> {
    a_n(a)?.mul(t)?.add(&b_n(a)?)?.mul(t)?.add(&a.add_int(2)?)
}

/// a(α) = (14−3α)(3+α) / (1200(7+α)).
pub fn a_coeff<I: Real>(alpha: &AlphaDomain<I>) -> Result<I> {
    a_n(alpha.interval())
}

/// b(α) = −(1/120)(−α³+3α²+64α+168)/(7+α).
pub fn b_coeff<I: Real>(alpha: &AlphaDomain<I>) -> Result<I> {
    b_n(alpha.interval())
}

pub fn g_quadratic<I: Real>(alpha: &AlphaDomain<I>, t: &I) -> Result<I> {
    g_n(alpha.interval(), t)
}

/// b² − 4a(α+2).
pub fn discriminant<I: Real>(alpha: &AlphaDomain<I>) -> Result<I> {
    let a = alpha.interval();
    let four_ac = a_n(a)?.mul(&a.add_int(2)?)?.mul_int(4)?;
    b_n(a)?.sqr()?.sub(&four_ac)
}

pub fn radicand<I: Real>(alpha: &AlphaDomain<I>) -> Result<I> {
    alpha.interval().poly_i64(&RADICAND)
}

pub(crate) fn x_n<N: Arith>(a: &N) -> Result<N> {
    let q = a.poly(&RADICAND)?;
    if !q.value().is_positive() {
        return Err(Error::NegativeRadicand);
    }
    q.sqrt()?.div(&a.add_int(7)?)
}

/// x(α) = √Q(α) / (α+7).
pub fn x_term<I: Real>(alpha: &AlphaDomain<I>) -> Result<I> {
    x_n(alpha.interval())
}

/// h with √(b²−4a(α+2)) taken literally.
fn h_literal<I: Real>(a: &I) -> Result<I> {
    let d = discriminant(&AlphaDomain::new(a.clone())?)?;
    if d.lt(0.0) {
        return Err(Error::NegativeDiscriminant);
    }
    let num = b_n(a)?.neg().add(&d.clamp_lo_zero().sqrt()?)?;
    num.div(&a_n(a)?.mul(&a.mul_int(19)?.add_int(90)?)?.mul_int(2)?)
}

/// h with the discriminant's square root written as α x(α) / 120.
pub(crate) fn h_simplified_n<N: Arith>(a: &N) -> Result<N> {
    let root = a.mul(&x_n(a)?)?.mul_ratio(1, 120)?;
    let num = b_n(a)?.neg().add(&root)?;
    num.div(&a_n(a)?.mul(&a.mul_int(19)?.add_int(90)?)?.mul_int(2)?)
}

pub fn h_simplified<I: Real>(alpha: &AlphaDomain<I>) -> Result<I> {
    h_simplified_n(alpha.interval())
}

pub(crate) fn h_both<I: Real>(a: &I) -> Result<I> {
    agree(&h_literal(a)?, &h_simplified_n(a)?, "h literal vs simplified")
}

/// h′ by forward differentiation of the simplified closed form.
pub fn h_prime<I: Real>(alpha: &AlphaDomain<I>) -> Result<I> {
    Ok(h_simplified_n(&DualInterval::variable(alpha.interval().clone()))?.der)
}

/// x, A, B and h″ = −20 A / B.
#[derive(Debug, Clone)]
pub struct HCurvature<I> {
    pub x: I,
    pub a: I,
    pub b: I,
    pub h2: I,
}

pub fn h_curvature<I: Real>(alpha: &AlphaDomain<I>) -> Result<HCurvature<I>> {
    let a = alpha.interval();
    let q = a.poly_i64(&RADICAND)?;
    if !q.is_positive() {
        return Err(Error::NegativeRadicand);
    }
    let sq = q.sqrt()?;
    let x = sq.div(&a.add_int(7)?)?;
    let big_a = x
        .mul(&a.poly_i64(&ascending(&A_X_COEFFS))?)?
        .add(&a.poly_i64(&ascending(&A_TAIL_COEFFS))?)?;
    let cubes = a
        .mul_int(19)?
        .add_int(90)?
        .mul(&a.add_int(3)?)?
        .mul(&a.mul_int(3)?.add_int(-14)?)?
        .powi(3)?;
    let big_b = cubes.mul(&q)?.mul(&sq)?;
    let h2 = big_a.div(&big_b)?.mul_int(-20)?;
    Ok(HCurvature { x, a: big_a, b: big_b, h2 })
}
