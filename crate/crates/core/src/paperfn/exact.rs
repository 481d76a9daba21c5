//! Exact rational-function forms of the quantities used by the polynomial
//! claims.

use num_bigint::BigInt;

use super::hfun::{A_TAIL_COEFFS, RADICAND};
use crate::error::Result;
use crate::exactpoly::{IntPoly, QuadElem, RationalFn};

fn poly(ascending: &[i64]) -> IntPoly {
    IntPoly::from_i64(ascending)
}

fn poly_desc(descending: &[i64]) -> IntPoly {
    let mut c = descending.to_vec();
    c.reverse();
    IntPoly::from_i64(&c)
}

fn rf(num: IntPoly, den: IntPoly) -> RationalFn {
    RationalFn::new(num, den).expect("nonzero denominator")
}

pub fn a_exact() -> RationalFn {
    rf(poly(&[14, -3]).mul(&IntPoly::linear(3)), IntPoly::linear(7).scale(&BigInt::from(1200)))
}

pub fn b_exact() -> RationalFn {
    rf(poly(&[168, 64, 3, -1]).neg(), IntPoly::linear(7).scale(&BigInt::from(120)))
}

/// g_α(t) for a rational-function argument t.
pub fn g_exact(t: &RationalFn) -> RationalFn {
    let alpha_plus_2 = RationalFn::poly(IntPoly::linear(2));
    a_exact().mul(&t.mul(t)).add(&b_exact().mul(t)).add(&alpha_plus_2)
}

/// 2(90+19α)/(α+9)
pub fn t_lower_exact() -> RationalFn {
    rf(IntPoly::affine(19, 90).scale(&BigInt::from(2)), IntPoly::linear(9))
}

/// (90+19α)(α+2)/(α+9)
pub fn t_upper_exact() -> RationalFn {
    rf(IntPoly::affine(19, 90).mul(&IntPoly::linear(2)), IntPoly::linear(9))
}

/// 95α³ + 237α² − 6300α − 26568
pub fn cubic() -> IntPoly {
    poly(&[-26568, -6300, 237, 95])
}

/// 893α⁴ + 10367α³ + 36800α² + 32472α − 13608
pub fn quartic() -> IntPoly {
    poly(&[-13608, 32472, 36800, 10367, 893])
}

/// α⁴ − 6α³ + 25α² + 1104α + 2944
pub fn radicand_poly() -> IntPoly {
    poly(&RADICAND)
}

/// (α+7)(α+9)²
fn g_display_den() -> IntPoly {
    IntPoly::linear(7).mul(&IntPoly::linear(9).pow(2))
}

/// (1/300) α² (95α³+237α²−6300α−26568) / ((α+7)(α+9)²)
pub fn g_lower_display() -> RationalFn {
    rf(IntPoly::x().pow(2).mul(&cubic()), g_display_den().scale(&BigInt::from(300)))
}

/// −(1/1200) α² (893α⁴+…−13608) / ((α+7)(α+9)²)
pub fn g_upper_display() -> RationalFn {
    rf(IntPoly::x().pow(2).mul(&quartic()).neg(), g_display_den().scale(&BigInt::from(1200)))
}

/// b² − 4a(α+2)
pub fn discriminant_exact() -> RationalFn {
    let b = b_exact();
    b.mul(&b).sub(&a_exact().mul(&RationalFn::poly(IntPoly::linear(2))).scale(4, 1))
}

/// α² Q(α) / (14400 (α+7)²): the discriminant as a square times Q.
pub fn discriminant_factored() -> RationalFn {
    rf(IntPoly::x().pow(2).mul(&radicand_poly()), IntPoly::linear(7).pow(2).scale(&BigInt::from(14400)))
}

/// (α+9)(α+7)(α+5)(α+4) − 2(α+7)(90+19α)
pub fn c04_difference() -> IntPoly {
    let prod = IntPoly::linear(9).mul(&IntPoly::linear(7)).mul(&IntPoly::linear(5)).mul(&IntPoly::linear(4));
    prod.sub(&IntPoly::linear(7).mul(&IntPoly::affine(19, 90)).scale(&BigInt::from(2)))
}

/// (α+7)(α²+18α+63)
pub fn c04_cofactor() -> IntPoly {
    IntPoly::linear(7).mul(&poly(&[63, 18, 1]))
}

/// The x(α)-multiplied group of A for a coefficient table (α¹¹ first).
pub fn a_x_poly(descending: &[i64; 12]) -> IntPoly {
    poly_desc(descending)
}

/// (α+7) Q(α) (9861α⁶ + 205200α⁵ + 2268828α⁴ + 11439980α³ + 27060138α² +
/// 41330520α + 56870856), the factored form of the x-group.
pub fn a_x_factored() -> IntPoly {
    let k = poly_desc(&[9861, 205200, 2268828, 11439980, 27060138, 41330520, 56870856]);
    IntPoly::linear(7).mul(&radicand_poly()).mul(&k)
}

pub fn a_tail_poly() -> IntPoly {
    poly_desc(&A_TAIL_COEFFS)
}

/// (90+19α)³ (3+α)³ (3α−14)³
pub fn b_cube_factor() -> IntPoly {
    IntPoly::affine(19, 90)
        .mul(&IntPoly::linear(3))
        .mul(&IntPoly::affine(3, -14))
        .pow(3)
}

/// h(α) in Q(α)[√Q]: (−b + α√Q/(120(α+7))) / (2a(90+19α)).
pub fn h_exact() -> Result<QuadElem> {
    let q = radicand_poly();
    let den = a_exact().mul(&RationalFn::poly(IntPoly::affine(19, 90))).scale(2, 1);
    let rat = b_exact().neg().div(&den)?;
    let irr = rf(IntPoly::x(), IntPoly::linear(7).scale(&BigInt::from(120))).div(&den)?;
    Ok(QuadElem::new(rat, irr, &q))
}

/// −20 A/B as an element of Q(α)[√Q] for a given x-group table:
/// with A = R + P√Q/(α+7) and B = C Q √Q,
/// −20A/B = −20 (P Q/(α+7) + R √Q) / (C Q²).
pub fn h2_display(x_coeffs: &[i64; 12]) -> QuadElem {
    let q = radicand_poly();
    let c = b_cube_factor();
    let p = a_x_poly(x_coeffs);
    let r = a_tail_poly();
    let rat = rf(p.scale(&BigInt::from(-20)), IntPoly::linear(7).mul(&c).mul(&q));
    let irr = rf(r.scale(&BigInt::from(-20)), c.mul(&q.pow(2)));
    QuadElem::new(rat, irr, &q)
}

/// Whether h″ computed exactly from h equals −20A/B for the table.
pub fn h2_identity_holds(x_coeffs: &[i64; 12]) -> Result<bool> {
    let h2 = h_exact()?.derivative()?.derivative()?;
    Ok(h2.sub(&h2_display(x_coeffs)).is_zero())
}
