//! Root counting and isolation on polynomials with known roots.

use antisym::exactpoly::{count_roots, rat, refine, sign_on_interval, sturm_isolate, IntPoly};
use antisym::Error;
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

/// ∏ (d x − n) over the given roots n/d.
fn with_roots(roots: &[(i64, i64)]) -> IntPoly {
    roots.iter().fold(IntPoly::one(), |p, &(n, d)| p.mul(&IntPoly::from_i64(&[-n, d])))
}

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn distinct(roots: &[(i64, i64)]) -> Vec<BigRational> {
    let mut v: Vec<_> = roots.iter().map(|&(n, d)| q(n, d)).collect();
    v.sort();
    v.dedup();
    v
}

fn roots_strategy() -> impl Strategy<Value = Vec<(i64, i64)>> {
    prop::collection::vec((-40i64..40, 1i64..6), 1..7)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn count_matches_known_roots(roots in roots_strategy(), a in -10i64..0, b in 0i64..10) {
        let p = with_roots(&roots);
        let (lo, hi) = (q(a, 1), q(b, 1));
        let expected = distinct(&roots).iter().filter(|r| **r >= lo && **r <= hi).count();
        prop_assert_eq!(count_roots(&p, &lo, &hi), expected);
    }

    #[test]
    fn isolation_brackets_each_root_once(roots in roots_strategy()) {
        let p = with_roots(&roots).square_free_part();
        let (lo, hi) = (q(-50, 1), q(50, 1));
        let brackets = sturm_isolate(&p, &lo, &hi).unwrap();
        let known = distinct(&roots);
        prop_assert_eq!(brackets.len(), known.len());
        for (b, r) in brackets.iter().zip(&known) {
            prop_assert!(b.contains(r));
            prop_assert_eq!(count_roots(&p, &b.lo, &b.hi), 1);
            let tight = refine(b, &q(1, 1_000_000));
            prop_assert!(tight.contains(r) && tight.width() <= q(1, 1_000_000));
        }
    }

    #[test]
    fn strict_sign_away_from_roots(roots in roots_strategy(), shift in 41i64..60) {
        let p = with_roots(&roots);
        let cert = sign_on_interval(&p, &q(shift, 1), &q(shift + 5, 1)).unwrap();
        let expected = p.sign_at(&q(shift, 1));
        prop_assert_eq!(cert.sign, expected);
        prop_assert_eq!(cert.sturm_roots, 0);
    }
}

#[test]
fn repeated_roots_are_counted_once() {
    let p = with_roots(&[(1, 2), (1, 2), (1, 2), (3, 1)]);
    assert_eq!(count_roots(&p, &rat(0, 1), &rat(4, 1)), 2);
    assert!(matches!(sturm_isolate(&p, &rat(0, 1), &rat(4, 1)), Err(Error::NonSquareFree)));
}

#[test]
fn roots_on_the_boundary() {
    let p = with_roots(&[(0, 1), (2, 1)]);
    assert_eq!(count_roots(&p, &rat(0, 1), &rat(2, 1)), 2);
    let b = sturm_isolate(&p, &rat(0, 1), &rat(2, 1)).unwrap();
    assert!(b[0].is_exact() && b[1].is_exact());
    match sign_on_interval(&p, &rat(0, 1), &rat(1, 1)) {
        Err(Error::HasRoots(r)) => assert_eq!(r.len(), 1),
        other => panic!("{other:?}"),
    }
}

#[test]
fn irrational_roots() {
    // x² − 2 has one root in [1, 2]
    let p = IntPoly::from_i64(&[-2, 0, 1]);
    let b = sturm_isolate(&p, &rat(0, 1), &rat(2, 1)).unwrap();
    assert_eq!(b.len(), 1);
    let t = refine(&b[0], &q(1, 1 << 40));
    let (lo, hi) = (t.lo.clone() * t.lo.clone(), t.hi.clone() * t.hi.clone());
    assert!(lo < rat(2, 1) && hi > rat(2, 1));
}
