#![allow(dead_code)]

pub mod suite;

use antisym::{BigInterval, Interval};
use astro_float::{BigFloat, Sign};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rug::float::Round;
use rug::integer::Order;
use rug::{Float, Integer, Rational};

/// Oracle precision in bits.
pub const ORACLE_BITS: u32 = 256;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn big_to_rational(x: &BigFloat) -> Rational {
    let (words, _, sign, exp, _) = x.as_raw_parts().expect("finite endpoint");
    let m = Integer::from_digits(words, Order::Lsf);
    let shift = exp as i64 - 64 * words.len() as i64;
    let mut q = Rational::from(m);
    if shift >= 0 {
        q <<= shift as u32;
    } else {
        q >>= (-shift) as u32;
    }
    if sign == Sign::Neg {
        -q
    } else {
        q
    }
}

/// Exact endpoints of an enclosure as rationals.
pub trait Endpoints {
    fn bounds(&self) -> (Rational, Rational);
}

impl Endpoints for Interval {
    fn bounds(&self) -> (Rational, Rational) {
        (Rational::from_f64(self.lo()).unwrap(), Rational::from_f64(self.hi()).unwrap())
    }
}

impl Endpoints for BigInterval {
    fn bounds(&self) -> (Rational, Rational) {
        (big_to_rational(self.lo()), big_to_rational(self.hi()))
    }
}

/// True when `v` lies in the enclosure. `v` is an oracle value whose own
/// error is far below the enclosure's resolution.
pub fn encloses<E: Endpoints>(e: &E, v: &Float) -> bool {
    let (lo, hi) = e.bounds();
    let q = v.to_rational().expect("finite oracle value");
    lo <= q && q <= hi
}

pub fn f(v: f64) -> Float {
    Float::with_val(ORACLE_BITS, v)
}

pub fn q(p: i64, d: i64) -> Float {
    Float::with_val(ORACLE_BITS, Rational::from((p, d)))
}

/// A random interval inside `[lo, hi]` and a random point of it.
pub fn sample(r: &mut ChaCha8Rng, lo: f64, hi: f64) -> (f64, f64, f64) {
    let a = r.gen_range(lo..hi);
    let w = match r.gen_range(0..4) {
        0 => 0.0,
        1 => (hi - a) * r.gen::<f64>() * 1e-12,
        2 => (hi - a) * r.gen::<f64>() * 1e-4,
        _ => (hi - a) * r.gen::<f64>(),
    };
    let b = (a + w).min(hi);
    let x = match r.gen_range(0..4) {
        0 => a,
        1 => b,
        _ => (a + (b - a) * r.gen::<f64>()).clamp(a, b),
    };
    (a, b, x)
}

/// `B_2, B_4, …, B_42`.
const BERNOULLI: [(&str, &str); 21] = [
    ("1", "6"), ("-1", "30"), ("1", "42"), ("-1", "30"), ("5", "66"), ("-691", "2730"), ("7", "6"),
    ("-3617", "510"), ("43867", "798"), ("-174611", "330"), ("854513", "138"), ("-236364091", "2730"),
    ("8553103", "6"), ("-23749461029", "870"), ("8615841276005", "14322"), ("-7709321041217", "510"),
    ("2577687858367", "6"), ("-26315271553053477373", "1919190"), ("2929993913841559", "6"),
    ("-261082718496449122051", "13530"), ("1520097643918070802691", "1806"),
];

/// ψ′(x) = Σ 1/(x+k)²: direct sum up to y = x + n ≥ 128, then the
/// Euler–Maclaurin tail 1/y + 1/(2y²) + Σ B_{2j} / y^{2j+1} (error < 2⁻²⁴⁰).
pub fn trigamma_oracle(x: &Float) -> Float {
    let p = ORACLE_BITS + 32;
    let mut y = Float::with_val(p, x);
    let mut sum = Float::with_val(p, 0);
    while y < 128 {
        sum += Float::with_val(p, y.clone().square().recip());
        y += 1;
    }
    let inv = Float::with_val(p, y.clone().recip());
    let inv2 = Float::with_val(p, inv.clone().square());
    sum += &inv;
    sum += Float::with_val(p, &inv2 / 2);
    let mut pw = Float::with_val(p, &inv2 * &inv);
    for (n, d) in BERNOULLI {
        let b = Rational::from((n.parse::<Integer>().unwrap(), d.parse::<Integer>().unwrap()));
        sum += Float::with_val(p, &pw * &b);
        pw *= &inv2;
    }
    Float::with_val_round(ORACLE_BITS, &sum, Round::Nearest).0
}

/// ψ′ from a central difference of MPFR's ψ, for cross-checking the series.
pub fn trigamma_by_difference(x: &Float) -> Float {
    let p = 2 * ORACLE_BITS;
    let h = Float::with_val(p, Float::u_exp(1, -(ORACLE_BITS as i32) / 2));
    let x = Float::with_val(p, x);
    let up = Float::with_val(p, &x + &h).digamma();
    let dn = Float::with_val(p, &x - &h).digamma();
    let d = Float::with_val(p, up - dn) / Float::with_val(p, 2 * h);
    Float::with_val_round(ORACLE_BITS, &d, Round::Nearest).0
}
