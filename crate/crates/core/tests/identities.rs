//! Algebraic identities between the paper's functions: exact ones by
//! polynomial arithmetic, transcendental ones by overlapping enclosures.

mod common;

use antisym::exactpoly::{eval_exact, identity_equal, rat, IntPoly, RationalFn};
use antisym::interval::Real;
use antisym::paperfn::{self, exact, AlphaDomain, A_X_COEFFS, A_X_COEFFS_PRINTED};
use antisym::{BigInterval, Interval};
use common::{encloses, q, ORACLE_BITS};
use num_bigint::BigInt;
use rug::ops::Pow;
use rug::Float;

fn dyadic_boxes<I: Real>(like: &I, depth: u32) -> Vec<I> {
    let n = 1i64 << depth;
    (0..n).map(|k| like.lift_ratio(2 * k, n).hull(&like.lift_ratio(2 * (k + 1), n))).collect()
}

type Pair<I> = fn(&AlphaDomain<I>) -> antisym::Result<(I, I)>;

fn pairs<I: Real>() -> Vec<(&'static str, Pair<I>)> {
    vec![
        ("mu_2", |d| Ok((paperfn::mu(2, d)?, paperfn::mu2_via_gamma(d)?))),
        ("ratio", |d| Ok((paperfn::in10_ratio(d)?, paperfn::in10_ratio_via_f(d)?))),
        ("T", |d| Ok((paperfn::t_cap(d)?, paperfn::t_via_f_cap(d)?))),
    ]
}

fn overlap_on_boxes<I: Real>(like: &I) {
    for b in dyadic_boxes(like, 6) {
        let d = AlphaDomain::new(b.clone()).unwrap();
        for (name, pair) in pairs::<I>() {
            let (x, y) = pair(&d).unwrap();
            assert!(x.overlaps(&y), "{name} on {b:?}: {x:?} vs {y:?}");
        }
    }
}

#[test]
fn transcendental_identities_overlap() {
    overlap_on_boxes(&Interval::point(0.0));
    overlap_on_boxes(&BigInterval::point(0.0, 128));
}

#[test]
fn different_functions_are_told_apart() {
    let d = AlphaDomain::new(BigInterval::point(1.0, 128)).unwrap();
    assert!(!paperfn::mu(2, &d).unwrap().overlaps(&paperfn::mu(1, &d).unwrap()));
    assert!(!paperfn::t_cap(&d).unwrap().overlaps(&paperfn::f_cap(&d).unwrap()));
}

/// μₙ(α) from its definition, in MPFR.
fn mu_oracle(n: u32, a: f64) -> Float {
    let a = Float::with_val(ORACLE_BITS, a);
    let g = |x: Float| x.gamma();
    let two = Float::with_val(ORACLE_BITS, 2).pow(&a);
    let h = Float::with_val(ORACLE_BITS, &a / 2u32);
    let num = g(Float::with_val(ORACLE_BITS, &h + (n + 1))) * g(Float::with_val(ORACLE_BITS, &h + q(2 * n as i64 + 3, 2)));
    let fact: u32 = (1..=n).product();
    two * num / fact / g(q(2 * n as i64 + 3, 2))
}

#[test]
fn mu_matches_its_definition() {
    let mut r = common::rng(7);
    for _ in 0..300 {
        let a: f64 = rand::Rng::gen_range(&mut r, 0.0..2.0);
        let n = rand::Rng::gen_range(&mut r, 0..=8u32);
        let m = paperfn::mu(n, &AlphaDomain::new(Interval::point(a)).unwrap()).unwrap();
        let e = paperfn::mu(n, &AlphaDomain::new(BigInterval::point(a, 128)).unwrap()).unwrap();
        let o = mu_oracle(n, a);
        assert!(encloses(&m, &o) && encloses(&e, &o), "mu_{n}({a})");
    }
    assert!(paperfn::mu(9, &AlphaDomain::new(Interval::point(0.5)).unwrap()).is_err());
}

fn poly(ascending: &[i64]) -> IntPoly {
    IntPoly::from_i64(ascending)
}

#[test]
fn cofactor_identity() {
    let rhs = poly(&[0, 1]).mul(&poly(&[7, 1])).mul(&poly(&[63, 18, 1]));
    assert_eq!(exact::c04_difference(), rhs);
    assert!(exact::c04_cofactor().all_coeffs_positive());
}

#[test]
fn g_at_the_bounds_of_t() {
    assert!(identity_equal(&exact::g_exact(&exact::t_lower_exact()), &exact::g_lower_display()));
    assert!(identity_equal(&exact::g_exact(&exact::t_upper_exact()), &exact::g_upper_display()));
    // a perturbed display must not pass
    let off = exact::g_lower_display().add(&RationalFn::constant(1, 1_000_000));
    assert!(!identity_equal(&exact::g_exact(&exact::t_lower_exact()), &off));
}

#[test]
fn discriminant_factorisation() {
    assert!(identity_equal(&exact::discriminant_exact(), &exact::discriminant_factored()));
    assert_eq!(eval_exact(&exact::discriminant_exact(), &rat(0, 1)).unwrap(), rat(0, 1));
}

#[test]
fn curvature_numerator_table() {
    assert!(exact::h2_identity_holds(&A_X_COEFFS).unwrap());
    assert!(!exact::h2_identity_holds(&A_X_COEFFS_PRINTED).unwrap());
    assert_eq!(exact::a_x_poly(&A_X_COEFFS), exact::a_x_factored());
}

#[test]
fn boundary_values_at_zero() {
    let zero = rat(0, 1);
    let g0 = exact::g_exact(&RationalFn::constant(20, 1));
    assert_eq!(eval_exact(&g0, &zero).unwrap(), rat(0, 1));
    for like in [BigInterval::point(0.0, 128)] {
        let d = AlphaDomain::new(like.clone()).unwrap();
        let (f, h) = paperfn::fh_pair(&d).unwrap();
        let two_ninths = like.lift_ratio(2, 9);
        for (name, v, want) in [
            ("f", f, two_ninths.clone()),
            ("h", h, two_ninths),
            ("mu_2", paperfn::mu(2, &d).unwrap(), like.lift_int(1)),
            ("Lambda", paperfn::lambda_cap(&d).unwrap(), like.lift_int(1)),
            ("F", paperfn::f_cap(&d).unwrap(), like.lift_int(2)),
            ("T", paperfn::t_cap(&d).unwrap(), like.lift_int(20)),
        ] {
            assert!(v.overlaps(&want) && v.width_f64() <= 1e-10, "{name}: {v:?}");
        }
    }
    let big = |n: i64| num_rational::BigRational::from_integer(BigInt::from(n));
    assert_eq!(exact::quartic().sign_at(&rat(3, 10)), -1);
    assert_eq!(exact::quartic().sign_at(&rat(31, 100)), 1);
    assert_eq!(exact::radicand_poly().eval(&big(0)), big(2944));
}
