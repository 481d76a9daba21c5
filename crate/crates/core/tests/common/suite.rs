//! Random containment checks of the interval and special-function
//! operations against the MPFR oracle.

use antisym::interval::Real;
use antisym::{specfun, BigInterval, DualInterval, Interval};
use rug::ops::Pow;
use rug::Float;

use super::*;

pub const SAMPLES: usize = 10_000;
const DUAL_EXTENDED_SAMPLES: usize = 2_000;
const EXT_BITS: u32 = 128;

#[derive(Debug)]
pub struct Finding {
    pub name: String,
    pub samples: usize,
    pub violations: usize,
    pub first: Option<String>,
}

impl Finding {
    fn new(name: &str, samples: usize, bad: Vec<String>) -> Self {
        Finding { name: name.to_string(), samples, violations: bad.len(), first: bad.into_iter().next() }
    }
}

/// Panics with every failing operation listed.
pub fn assert_clean(fs: &[Finding]) {
    let bad: Vec<_> = fs.iter().filter(|f| f.violations > 0).collect();
    assert!(bad.is_empty(), "{bad:#?}");
}

fn machine(a: f64, b: f64) -> Interval {
    Interval::new(a, b).unwrap()
}

fn extended(a: f64, b: f64) -> BigInterval {
    BigInterval::point(a, EXT_BITS).hull(&BigInterval::point(b, EXT_BITS))
}

type Op1<I> = fn(&I) -> antisym::Result<I>;
type Op2<I> = fn(&I, &I) -> antisym::Result<I>;

fn unary<I: Real + Endpoints>(
    name: &str,
    seed: u64,
    dom: (f64, f64),
    make: fn(f64, f64) -> I,
    op: Op1<I>,
    oracle: fn(&Float) -> Float,
) -> Finding {
    let mut r = rng(seed);
    let mut bad = Vec::new();
    for _ in 0..SAMPLES {
        let (a, b, x) = sample(&mut r, dom.0, dom.1);
        match op(&make(a, b)) {
            Ok(e) if encloses(&e, &oracle(&f(x))) => {}
            Ok(e) => bad.push(format!("x={x:e} in [{a:e}, {b:e}] -> {e:?}")),
            Err(err) => bad.push(format!("[{a:e}, {b:e}]: {err}")),
        }
    }
    Finding::new(name, SAMPLES, bad)
}

fn binary<I: Real + Endpoints>(
    name: &str,
    seed: u64,
    dom: [(f64, f64); 2],
    make: fn(f64, f64) -> I,
    op: Op2<I>,
    oracle: fn(Float, Float) -> Float,
) -> Finding {
    let mut r = rng(seed);
    let mut bad = Vec::new();
    for _ in 0..SAMPLES {
        let (a, b, x) = sample(&mut r, dom[0].0, dom[0].1);
        let (c, d, y) = sample(&mut r, dom[1].0, dom[1].1);
        match op(&make(a, b), &make(c, d)) {
            Ok(e) if encloses(&e, &oracle(f(x), f(y))) => {}
            Ok(e) => bad.push(format!("x={x:e}, y={y:e} -> {e:?}")),
            Err(err) => bad.push(format!("[{a:e}, {b:e}], [{c:e}, {d:e}]: {err}")),
        }
    }
    Finding::new(name, SAMPLES, bad)
}

macro_rules! both {
    ($out:ident, $check:ident, $name:literal, $seed:expr, $dom:expr, $op:expr, $oracle:expr) => {
        $out.extend([
            $check::<Interval>(concat!($name, " (machine)"), $seed, $dom, machine, $op, $oracle),
            $check::<BigInterval>(concat!($name, " (extended)"), $seed + 1, $dom, extended, $op, $oracle),
        ]);
    };
}

const WIDE: (f64, f64) = (-1e3, 1e3);
const POSITIVE: (f64, f64) = (0.05, 40.0);

pub fn arithmetic() -> Vec<Finding> {
    let mut v = Vec::new();
    both!(v, binary, "add", 10, [WIDE, WIDE], |x, y| x.add(y), |x, y| x + y);
    both!(v, binary, "sub", 20, [WIDE, WIDE], |x, y| x.sub(y), |x, y| x - y);
    both!(v, binary, "mul", 30, [WIDE, WIDE], |x, y| x.mul(y), |x, y| x * y);
    both!(v, binary, "div", 40, [WIDE, (0.01, 50.0)], |x, y| x.div(y), |x, y| x / y);
    both!(v, binary, "div by negative", 50, [WIDE, (-50.0, -0.01)], |x, y| x.div(y), |x, y| x / y);
    v
}

pub fn algebra() -> Vec<Finding> {
    let mut v = Vec::new();
    both!(v, unary, "sqr", 60, WIDE, |x| x.sqr(), |x| x.clone().square());
    both!(v, unary, "neg", 70, WIDE, |x| Ok(x.neg()), |x| -x.clone());
    both!(v, unary, "mul_ratio", 80, WIDE, |x| x.mul_ratio(-7, 3), |x| x.clone() * q(-7, 3));
    both!(v, unary, "add_ratio", 90, WIDE, |x| x.add_ratio(9, 2), |x| x.clone() + q(9, 2));
    both!(v, unary, "powi 5", 100, (-8.0, 8.0), |x| x.powi(5), |x| x.clone().pow(5));
    both!(v, unary, "powi -2", 110, (0.05, 30.0), |x| x.powi(-2), |x| x.clone().pow(-2));
    both!(v, unary, "recip", 120, (-40.0, -0.02), |x| x.recip(), |x| x.clone().recip());
    v
}

pub fn elementary() -> Vec<Finding> {
    let mut v = Vec::new();
    both!(v, unary, "sqrt", 200, (0.0, 1e6), |x| x.sqrt(), |x| x.clone().sqrt());
    both!(v, unary, "cbrt", 210, (-1e6, 1e6), |x| x.cbrt(), |x| x.clone().cbrt());
    both!(v, unary, "ln", 220, (1e-6, 1e6), |x| x.ln(), |x| x.clone().ln());
    both!(v, unary, "exp", 230, (-60.0, 60.0), |x| x.exp(), |x| x.clone().exp());
    v
}

pub fn constants() -> Vec<Finding> {
    let m = Interval::point(0.0);
    let e = BigInterval::point(0.0, EXT_BITS);
    let pi = Float::with_val(ORACLE_BITS, rug::float::Constant::Pi);
    let ln2 = Float::with_val(ORACLE_BITS, rug::float::Constant::Log2);
    let mut bad = Vec::new();
    for (name, ok) in [
        ("pi", encloses(&m.pi(), &pi) && encloses(&e.pi(), &pi)),
        ("ln2", encloses(&m.ln2(), &ln2) && encloses(&e.ln2(), &ln2)),
    ] {
        if !ok {
            bad.push(name.to_string());
        }
    }
    let mut r = rng(300);
    for _ in 0..SAMPLES {
        let p = rand::Rng::gen_range(&mut r, -10_000i64..10_000);
        let d = rand::Rng::gen_range(&mut r, 1i64..10_000);
        if !encloses(&m.lift_ratio(p, d), &q(p, d)) || !encloses(&e.lift_ratio(p, d), &q(p, d)) {
            bad.push(format!("{p}/{d}"));
        }
    }
    vec![Finding::new("constants and rational lifts", SAMPLES + 2, bad)]
}

pub fn special() -> Vec<Finding> {
    let mut v = Vec::new();
    both!(v, unary, "lngamma", 400, POSITIVE, specfun::lngamma, |x| x.clone().ln_gamma());
    both!(v, unary, "gamma", 410, (0.05, 30.0), specfun::gamma, |x| x.clone().gamma());
    both!(v, unary, "digamma", 420, POSITIVE, specfun::digamma, |x| x.clone().digamma());
    both!(v, unary, "trigamma", 430, POSITIVE, specfun::trigamma, trigamma_oracle);
    v
}

type DualOp<I> = fn(&DualInterval<I>) -> antisym::Result<DualInterval<I>>;

fn dual<I: Real + Endpoints>(
    name: &str,
    seed: u64,
    samples: usize,
    make: fn(f64, f64) -> I,
    op: DualOp<I>,
    oracle: fn(&Float) -> (Float, Float),
) -> Finding {
    let mut r = rng(seed);
    let mut bad = Vec::new();
    for _ in 0..samples {
        let (a, b, x) = sample(&mut r, POSITIVE.0, POSITIVE.1);
        let d = op(&DualInterval::variable(make(a, b))).unwrap();
        let (v, dv) = oracle(&f(x));
        if !encloses(&d.val, &v) || !encloses(&d.der, &dv) {
            bad.push(format!("x={x:e} in [{a:e}, {b:e}]"));
        }
    }
    Finding::new(name, samples, bad)
}

fn lngamma_pair(x: &Float) -> (Float, Float) {
    (x.clone().ln_gamma(), x.clone().digamma())
}

fn gamma_pair(x: &Float) -> (Float, Float) {
    let g = x.clone().gamma();
    let d = Float::with_val(ORACLE_BITS, &g * x.clone().digamma());
    (g, d)
}

fn digamma_pair(x: &Float) -> (Float, Float) {
    (x.clone().digamma(), trigamma_oracle(x))
}

pub fn derivatives() -> Vec<Finding> {
    vec![
        dual("lngamma' (machine)", 500, SAMPLES, machine, specfun::lngamma_dual, lngamma_pair),
        dual("lngamma' (extended)", 501, DUAL_EXTENDED_SAMPLES, extended, specfun::lngamma_dual, lngamma_pair),
        dual("gamma' (machine)", 505, SAMPLES, machine, specfun::gamma_dual, gamma_pair),
        dual("digamma' (machine)", 510, SAMPLES, machine, specfun::digamma_dual, digamma_pair),
        dual("digamma' (extended)", 511, DUAL_EXTENDED_SAMPLES, extended, specfun::digamma_dual, digamma_pair),
    ]
}
