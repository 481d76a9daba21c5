//! Sturm sequences over the integers and exact real-root isolation.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;
use serde::Serialize;

use super::poly::IntPoly;
use crate::error::{Error, Result};

/// Interval `[lo, hi]` with rational endpoints holding exactly one real root.
///
/// Either `poly(lo)` and `poly(hi)` have strict opposite signs, or the bracket
/// is degenerate (`lo == hi`) and sits on an exact root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootBracket {
    pub poly: IntPoly,
    pub lo: BigRational,
    pub hi: BigRational,
}

impl RootBracket {
    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains(&self, q: &BigRational) -> bool {
        &self.lo <= q && q <= &self.hi
    }
}

/// Evidence that a polynomial keeps one strict sign on a closed domain.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SignCertificate {
    /// +1 or -1.
    pub sign: i32,
    /// Distinct real roots in the domain according to the Sturm count (always 0).
    pub sturm_roots: usize,
    /// Rational sample point (the lower domain endpoint) and the sign found there.
    pub sample: String,
    pub sample_sign: i32,
}

/// Canonical Sturm sequence `p, p', -rem(...)...` with positive rescaling.
pub fn sturm_sequence(p: &IntPoly) -> Vec<IntPoly> {
    let mut seq = vec![p.clone()];
    if p.degree().unwrap_or(0) == 0 {
        return seq;
    }
    seq.push(p.derivative());
    loop {
        let n = seq.len();
        let (a, b) = (&seq[n - 2], &seq[n - 1]);
        if b.degree().unwrap_or(0) == 0 {
            break;
        }
        let delta = a.degree().unwrap() - b.degree().unwrap();
        let mut r = a.pseudo_rem(b);
        // the pseudo-remainder carries lc(b)^(delta+1); undo a negative factor
        if b.leading().is_negative() && delta % 2 == 0 {
            r = r.neg();
        }
        if r.is_zero() {
            break;
        }
        let c = r.content();
        let r = IntPoly::new(r.coeffs().iter().map(|x| x / &c).collect());
        seq.push(r.neg());
    }
    seq
}

fn variations(seq: &[IntPoly], q: &BigRational) -> usize {
    let mut count = 0;
    let mut last = 0;
    for s in seq {
        let v = s.sign_at(q);
        if v == 0 {
            continue;
        }
        if last != 0 && v != last {
            count += 1;
        }
        last = v;
    }
    count
}

/// Number of distinct real roots in the half-open interval `(a, b]`.
pub fn count_roots_half_open(seq: &[IntPoly], a: &BigRational, b: &BigRational) -> usize {
    variations(seq, a).saturating_sub(variations(seq, b))
}

/// Number of distinct real roots of `p` in the closed interval `[lo, hi]`.
pub fn count_roots(p: &IntPoly, lo: &BigRational, hi: &BigRational) -> usize {
    let sf = p.square_free_part();
    let seq = sturm_sequence(&sf);
    count_roots_half_open(&seq, lo, hi) + usize::from(sf.sign_at(lo) == 0)
}

fn half(a: &BigRational, b: &BigRational) -> BigRational {
    (a + b) / BigRational::from_integer(BigInt::from(2))
}

/// A split point strictly inside `(a, b)` that is not a root of `p`.
fn split_point(p: &IntPoly, a: &BigRational, b: &BigRational) -> BigRational {
    let mut m = half(a, b);
    while p.sign_at(&m) == 0 {
        // finitely many roots, so halving toward `a` terminates
        m = half(a, &m);
    }
    m
}

/// Isolate every real root of a square-free `p` in `[lo, hi]`.
pub fn sturm_isolate(p: &IntPoly, lo: &BigRational, hi: &BigRational) -> Result<Vec<RootBracket>> {
    if lo > hi {
        return Err(Error::Domain("empty isolation domain".into()));
    }
    if p.is_zero() {
        return Err(Error::Domain("the zero polynomial has no isolated roots".into()));
    }
    if !p.is_square_free() {
        return Err(Error::NonSquareFree);
    }
    let seq = sturm_sequence(p);
    let mut out = Vec::new();
    if p.sign_at(lo) == 0 {
        out.push(RootBracket { poly: p.clone(), lo: lo.clone(), hi: lo.clone() });
    }
    if lo == hi {
        return Ok(out);
    }
    let mut stack = vec![(lo.clone(), hi.clone())];
    let mut found = Vec::new();
    while let Some((a, b)) = stack.pop() {
        let c = count_roots_half_open(&seq, &a, &b);
        if c == 0 {
            continue;
        }
        if c == 1 {
            if p.sign_at(&b) == 0 {
                found.push(RootBracket { poly: p.clone(), lo: b.clone(), hi: b });
                continue;
            }
            if p.sign_at(&a) != 0 {
                found.push(RootBracket { poly: p.clone(), lo: a, hi: b });
                continue;
            }
        }
        let m = split_point(p, &a, &b);
        stack.push((m.clone(), b));
        stack.push((a, m));
    }
    found.sort_by(|x, y| x.lo.cmp(&y.lo));
    out.extend(found);
    Ok(out)
}

/// Shrink a bracket by exact bisection until its width is at most `target`.
pub fn refine(b: &RootBracket, target: &BigRational) -> RootBracket {
    let mut out = b.clone();
    if out.is_exact() {
        return out;
    }
    let lo_sign = out.poly.sign_at(&out.lo);
    while &out.width() > target {
        let m = half(&out.lo, &out.hi);
        let s = out.poly.sign_at(&m);
        if s == 0 {
            out.lo = m.clone();
            out.hi = m;
            break;
        }
        if s == lo_sign {
            out.lo = m;
        } else {
            out.hi = m;
        }
    }
    out
}

/// Constant strict sign of `p` on `[lo, hi]`, or the roots that prevent it.
pub fn sign_on_interval(p: &IntPoly, lo: &BigRational, hi: &BigRational) -> Result<SignCertificate> {
    if p.is_zero() {
        return Err(Error::Domain("the zero polynomial has no strict sign".into()));
    }
    let sf = p.square_free_part();
    let roots = count_roots(&sf, lo, hi);
    if roots > 0 {
        let brackets = sturm_isolate(&sf, lo, hi)?;
        return Err(Error::HasRoots(brackets));
    }
    let s = p.sign_at(lo);
    debug_assert!(s != 0);
    Ok(SignCertificate {
        sign: s,
        sturm_roots: 0,
        sample: lo.to_string(),
        sample_sign: s,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn sqrt_two_is_isolated_and_refined() {
        let p = IntPoly::from_i64(&[-2, 0, 1]);
        let b = sturm_isolate(&p, &rat(0, 1), &rat(2, 1)).unwrap();
        assert_eq!(b.len(), 1);
        let r = refine(&b[0], &rat(1, 100_000_000));
        assert!(r.width() <= rat(1, 100_000_000));
        let s = rat(141421356, 100000000);
        assert!(r.lo <= rat(141421357, 100000000) && r.hi >= s);
        let same = refine(&r, &rat(1, 1));
        assert_eq!(same, r);
    }

    #[test]
    fn roots_at_endpoints_are_exact_brackets() {
        // (a)(a-1)(a-2)
        let p = IntPoly::x().mul(&IntPoly::linear(-1)).mul(&IntPoly::linear(-2));
        let b = sturm_isolate(&p, &rat(0, 1), &rat(2, 1)).unwrap();
        assert_eq!(b.len(), 3);
        assert!(b[0].is_exact() && b[2].is_exact());
        assert!(b[1].contains(&rat(1, 1)));
        let q = IntPoly::x().mul(&IntPoly::linear(-1));
        let b = sturm_isolate(&q, &rat(0, 1), &rat(3, 1)).unwrap();
        assert_eq!(b.len(), 2);
        assert!(b[0].is_exact());
    }

    #[test]
    fn close_roots_are_separated() {
        // (1000a - 1)(1001a - 1)
        let p = IntPoly::affine(1000, -1).mul(&IntPoly::affine(1001, -1));
        let b = sturm_isolate(&p, &rat(0, 1), &rat(1, 1)).unwrap();
        assert_eq!(b.len(), 2);
        assert!(b[0].hi <= b[1].lo);
        for br in &b {
            if !br.is_exact() {
                assert_eq!(p.sign_at(&br.lo) * p.sign_at(&br.hi), -1);
            }
        }
    }

    #[test]
    fn non_square_free_is_rejected() {
        let p = IntPoly::linear(-1).pow(2);
        assert!(matches!(
            sturm_isolate(&p, &rat(0, 1), &rat(2, 1)),
            Err(Error::NonSquareFree)
        ));
    }

    #[test]
    fn sign_certificates() {
        let pos = IntPoly::from_i64(&[32472, 73600, 31101, 3572]);
        assert_eq!(sign_on_interval(&pos, &rat(0, 1), &rat(2, 1)).unwrap().sign, 1);
        let cubic = IntPoly::from_i64(&[-26568, -6300, 237, 95]);
        let c = sign_on_interval(&cubic, &rat(0, 1), &rat(2, 1)).unwrap();
        assert_eq!(c.sign, -1);
        assert_eq!(c.sturm_roots, 0);
        let q = IntPoly::from_i64(&[2944, 1104, 25, -6, 1]);
        assert_eq!(sign_on_interval(&q, &rat(0, 1), &rat(2, 1)).unwrap().sign, 1);
        let quartic = IntPoly::from_i64(&[-13608, 32472, 36800, 10367, 893]);
        match sign_on_interval(&quartic, &rat(0, 1), &rat(2, 1)) {
            Err(Error::HasRoots(b)) => assert_eq!(b.len(), 1),
            other => panic!("expected roots, got {other:?}"),
        }
    }
}
