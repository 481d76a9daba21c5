use num_bigint::BigInt;
use num_rational::BigRational;

use super::certificate::{Outcome, Status, Witness};
use super::ProverConfig;
use crate::error::{Error, Result};
use crate::exactpoly::IntPoly;
use crate::interval::{BigInterval, Interval, PrecisionMode, Real};

/// A real function of α evaluated in interval arithmetic.
///
/// `derivative` is optional; when present the engine also tries the
/// mean-value form `f(m) + f′(X)(X − m)` on boxes the plain enclosure
/// cannot decide.
pub trait AlphaMap: Sync {
    fn value<I: Real>(&self, alpha: &I) -> Result<I>;

    fn derivative<I: Real>(&self, alpha: &I) -> Option<Result<I>> {
        let _ = alpha;
        None
    }
}

/// An integer polynomial in α (ascending coefficients).
#[derive(Debug, Clone)]
pub struct PolyMap(pub IntPoly);

fn horner<I: Real>(p: &IntPoly, x: &I) -> Result<I> {
    let lift = |c: &BigInt| x.lift_rational(&BigRational::from_integer(c.clone()));
    let coeffs = p.coeffs();
    let Some(last) = coeffs.last() else {
        return Ok(x.zero());
    };
    let mut acc = lift(last)?;
    for c in coeffs.iter().rev().skip(1) {
        acc = acc.mul(x)?.add(&lift(c)?)?;
    }
    Ok(acc)
}

impl AlphaMap for PolyMap {
    fn value<I: Real>(&self, alpha: &I) -> Result<I> {
        horner(&self.0, alpha)
    }

    fn derivative<I: Real>(&self, alpha: &I) -> Option<Result<I>> {
        Some(horner(&self.0.derivative(), alpha))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Target {
    Positive,
    Negative,
}

#[derive(Debug, Clone, Copy, PartialEq)]
enum Verdict {
    Good,
    Bad,
    Open(f64),
}

#[derive(Debug, Clone, Copy)]
struct Eval {
    verdict: Verdict,
    range: [f64; 2],
}

fn classify<I: Real>(v: &I, target: Target) -> Eval {
    let verdict = match target {
        Target::Positive if v.gt(0.0) => Verdict::Good,
        Target::Positive if !v.hi_point().gt(0.0) => Verdict::Bad,
        Target::Negative if v.lt(0.0) => Verdict::Good,
        Target::Negative if !v.lo_point().lt(0.0) => Verdict::Bad,
        _ => Verdict::Open(v.width_f64()),
    };
    Eval { verdict, range: [v.lo_f64(), v.hi_f64()] }
}

const OPEN_ERROR: Eval = Eval { verdict: Verdict::Open(f64::INFINITY), range: [f64::NEG_INFINITY, f64::INFINITY] };

fn box_interval<I: Real>(like: &I, lo: &BigRational, hi: &BigRational) -> Result<I> {
    let l = like.lift_rational(lo)?;
    if lo == hi {
        return Ok(l);
    }
    Ok(l.hull(&like.lift_rational(hi)?))
}

fn centered<I: Real, M: AlphaMap>(map: &M, like: &I, x: &I, lo: &BigRational, hi: &BigRational) -> Option<Result<I>> {
    let d = map.derivative(x)?;
    Some((|| {
        let mid = like.lift_rational(&((lo + hi) / BigInt::from(2)))?;
        map.value(&mid)?.add(&d?.mul(&x.sub(&mid)?)?)
    })())
}

fn enclose<I: Real, M: AlphaMap>(map: &M, like: &I, lo: &BigRational, hi: &BigRational, target: Target) -> Eval {
    let Ok(x) = box_interval(like, lo, hi) else {
        return OPEN_ERROR;
    };
    let naive = map.value(&x);
    if let Ok(v) = &naive {
        let e = classify(v, target);
        if !matches!(e.verdict, Verdict::Open(_)) || lo == hi {
            return e;
        }
    }
    let best = match (naive, centered(map, like, &x, lo, hi)) {
        (Ok(a), Some(Ok(b))) => a.intersect(&b),
        (Ok(a), _) => Some(a),
        (Err(_), Some(Ok(b))) => Some(b),
        _ => None,
    };
    best.map_or(OPEN_ERROR, |v| classify(&v, target))
}

fn evaluate<M: AlphaMap>(map: &M, lo: &BigRational, hi: &BigRational, mode: PrecisionMode, target: Target) -> Eval {
    match mode {
        PrecisionMode::Machine => enclose(map, &Interval::point(0.0), lo, hi, target),
        PrecisionMode::Extended { bits } => enclose(map, &BigInterval::point(0.0, bits), lo, hi, target),
    }
}

fn midpoint(lo: &BigRational, hi: &BigRational) -> BigRational {
    (lo + hi) / BigInt::from(2)
}

struct Node {
    lo: BigRational,
    hi: BigRational,
    depth: u32,
    level: usize,
    parent_width: f64,
}

/// Ratio above which a halved box is considered to have stopped tightening.
const STALL_RATIO: f64 = 0.75;
const STALL_MIN_DEPTH: u32 = 8;
const WITNESS_STEPS: u32 = 30;

/// Adaptive bisection proving that `map` is strictly positive (or negative)
/// on the closed domain.
///
/// Boxes are processed depth first, left half first. A box whose enclosure
/// straddles zero is split; one that stops tightening, or reaches
/// `max_depth`, is re-evaluated at the next precision of the schedule. A box
/// whose whole enclosure violates the strict inequality ends the search with
/// a witness.
pub fn verify_sign<M: AlphaMap>(map: &M, domain: (&BigRational, &BigRational), target: Target, cfg: &ProverConfig) -> Outcome {
    let (dlo, dhi) = domain;
    let mut out = Outcome::simple(Status::Verified, "");
    out.precision = cfg.precision[0];
    if dlo > dhi {
        out.status = Status::Undecided;
        out.detail = format!("empty domain [{dlo}, {dhi}]");
        return out;
    }
    let mut stack = vec![Node { lo: dlo.clone(), hi: dhi.clone(), depth: 0, level: 0, parent_width: f64::INFINITY }];
    let mut worst: Option<(BigRational, BigRational, f64)> = None;
    let mut open_leaves = 0u64;
    let mut level_used = 0usize;
    let mut budget_hit = false;

    while let Some(n) = stack.pop() {
        if out.boxes_examined >= cfg.max_boxes {
            budget_hit = true;
            open_leaves += 1 + stack.len() as u64;
            if worst.is_none() {
                worst = Some((n.lo.clone(), n.hi.clone(), f64::INFINITY));
            }
            break;
        }
        out.boxes_examined += 1;
        out.max_depth_used = out.max_depth_used.max(n.depth);
        level_used = level_used.max(n.level);
        let mode = cfg.precision[n.level];
        let e = evaluate(map, &n.lo, &n.hi, mode, target);
        match e.verdict {
            Verdict::Good => {}
            Verdict::Bad => {
                let (lo, hi, range, extra) = shrink_witness(map, n.lo, n.hi, e.range, mode, target);
                out.boxes_examined += extra;
                out.status = Status::Failed;
                out.precision = cfg.precision[level_used];
                out.detail = format!("enclosure [{:e}, {:e}] on the wrong side of 0", range[0], range[1]);
                out.witness = Some(Witness::new(&lo, &hi, range));
                return out;
            }
            Verdict::Open(w) => {
                let can_escalate = n.level + 1 < cfg.precision.len();
                let stalled = n.depth >= STALL_MIN_DEPTH && w.is_finite() && w > STALL_RATIO * n.parent_width;
                let at_floor = n.depth >= cfg.max_depth || n.lo == n.hi;
                if (at_floor || stalled) && can_escalate {
                    stack.push(Node { level: n.level + 1, ..n });
                } else if at_floor {
                    open_leaves += 1;
                    if worst.as_ref().is_none_or(|(_, _, ww)| w > *ww) {
                        worst = Some((n.lo, n.hi, w));
                    }
                } else {
                    let mid = midpoint(&n.lo, &n.hi);
                    let depth = n.depth + 1;
                    stack.push(Node { lo: mid.clone(), hi: n.hi, depth, level: n.level, parent_width: w });
                    stack.push(Node { lo: n.lo, hi: mid, depth, level: n.level, parent_width: w });
                }
            }
        }
    }
    out.precision = cfg.precision[level_used];
    match worst {
        None => {
            out.covered = Some((dlo.clone(), dhi.clone()));
            out.detail = format!("{} boxes, all sign-definite", out.boxes_examined);
        }
        Some((lo, hi, _)) => {
            out.status = Status::Undecided;
            out.detail = if budget_hit {
                format!("box budget of {} exhausted; {open_leaves} boxes open", cfg.max_boxes)
            } else {
                format!("{open_leaves} boxes undecided at the depth and precision limits")
            };
            out.worst_box = Some((lo, hi));
        }
    }
    out
}

/// Narrows a failing box by keeping the half with the most extreme enclosure.
fn shrink_witness<M: AlphaMap>(
    map: &M,
    mut lo: BigRational,
    mut hi: BigRational,
    mut range: [f64; 2],
    mode: PrecisionMode,
    target: Target,
) -> (BigRational, BigRational, [f64; 2], u64) {
    let mut extra = 0;
    for _ in 0..WITNESS_STEPS {
        if lo == hi {
            break;
        }
        let mid = midpoint(&lo, &hi);
        let left = evaluate(map, &lo, &mid, mode, target);
        let right = evaluate(map, &mid, &hi, mode, target);
        extra += 2;
        let score = |e: &Eval| match target {
            Target::Positive => -e.range[1],
            Target::Negative => e.range[0],
        };
        let pick = match (left.verdict == Verdict::Bad, right.verdict == Verdict::Bad) {
            (true, true) if score(&right) > score(&left) => Some((mid.clone(), hi.clone(), right)),
            (true, _) => Some((lo.clone(), mid.clone(), left)),
            (false, true) => Some((mid.clone(), hi.clone(), right)),
            _ => None,
        };
        let Some((l, h, e)) = pick else { break };
        lo = l;
        hi = h;
        range = e.range;
    }
    (lo, hi, range, extra)
}

fn overlap_in<I: Real, A: AlphaMap, B: AlphaMap>(f1: &A, f2: &B, like: &I, lo: &BigRational, hi: &BigRational) -> Result<(bool, [f64; 2])> {
    let x = box_interval(like, lo, hi)?;
    let a = f1.value(&x)?;
    let b = f2.value(&x)?;
    let gap = a.sub(&b)?;
    Ok((a.overlaps(&b), [gap.lo_f64(), gap.hi_f64()]))
}

fn overlap_at<A: AlphaMap, B: AlphaMap>(f1: &A, f2: &B, lo: &BigRational, hi: &BigRational, cfg: &ProverConfig) -> Option<(bool, [f64; 2])> {
    cfg.precision.iter().find_map(|mode| match *mode {
        PrecisionMode::Machine => overlap_in(f1, f2, &Interval::point(0.0), lo, hi).ok(),
        PrecisionMode::Extended { bits } => overlap_in(f1, f2, &BigInterval::point(0.0, bits), lo, hi).ok(),
    })
}

/// Dyadic subdivision depth used by [`verify_overlap`].
pub const OVERLAP_DEPTH: u32 = 6;

/// Consistency check: the two enclosures meet at `samples` evenly spaced
/// points and on every box of the depth-6 dyadic subdivision.
///
/// Disjoint enclosures refute the identity; meeting enclosures only fail to
/// refute it.
pub fn verify_overlap<A: AlphaMap, B: AlphaMap>(
    f1: &A,
    f2: &B,
    domain: (&BigRational, &BigRational),
    samples: u32,
    cfg: &ProverConfig,
) -> Outcome {
    let (lo, hi) = domain;
    let mut boxes: Vec<(BigRational, BigRational)> = Vec::new();
    let span = hi - lo;
    if samples == 1 || lo == hi {
        boxes.push((lo.clone(), lo.clone()));
    } else {
        for k in 0..samples {
            let p = lo + &span * BigRational::new(k.into(), (samples - 1).into());
            boxes.push((p.clone(), p));
        }
    }
    if lo != hi {
        let parts = 1u32 << OVERLAP_DEPTH;
        for k in 0..parts {
            let a = lo + &span * BigRational::new(k.into(), parts.into());
            let b = lo + &span * BigRational::new((k + 1).into(), parts.into());
            boxes.push((a, b));
        }
    }
    let mut out = Outcome::simple(Status::Verified, "");
    out.precision = cfg.precision[0];
    out.max_depth_used = if lo == hi { 0 } else { OVERLAP_DEPTH };
    let mut open = 0;
    for (a, b) in &boxes {
        out.boxes_examined += 1;
        match overlap_at(f1, f2, a, b, cfg) {
            Some((true, _)) => {}
            Some((false, gap)) => {
                out.status = Status::Failed;
                out.detail = format!("enclosures disjoint; difference in [{:e}, {:e}]", gap[0], gap[1]);
                out.witness = Some(Witness::new(a, b, gap));
                return out;
            }
            None => {
                open += 1;
                if out.worst_box.is_none() {
                    out.worst_box = Some((a.clone(), b.clone()));
                }
            }
        }
    }
    if open > 0 {
        out.status = Status::Undecided;
        out.detail = format!("{open} of {} evaluations raised errors", boxes.len());
    } else {
        out.covered = Some((lo.clone(), hi.clone()));
        out.detail = format!(
            "consistency check only: enclosures meet at {} points and {} dyadic boxes",
            boxes.len() - if lo == hi { 0 } else { 1 << OVERLAP_DEPTH },
            if lo == hi { 0 } else { 1 << OVERLAP_DEPTH }
        );
    }
    out
}

/// The value of D at the left end of the lifted domain.
#[derive(Debug, Clone)]
pub struct Anchor<I> {
    pub value: I,
    /// D vanishes there by an exact argument, not just within the enclosure.
    pub exact_zero: bool,
}

/// Sign of D′ established by the derivative claim.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    /// D′ > 0, so D ≥ D(anchor) ≥ 0.
    Increasing,
    /// D′ < 0, so D ≤ D(anchor) ≤ 0.
    Decreasing,
}

/// Lifts a sign of D′ on `[lo, hi]` and the anchor value D(lo) to a
/// non-strict bound on D over the domain.
pub fn verify_monotone_bound<I: Real>(
    anchor: &Anchor<I>,
    derivative_claim: &str,
    derivative: &Outcome,
    direction: Direction,
    domain: (&BigRational, &BigRational),
) -> Result<Outcome> {
    if !derivative.is_verified() {
        return Err(Error::DependencyNotVerified(derivative_claim.to_string()));
    }
    let (lo, hi) = domain;
    match &derivative.covered {
        Some((clo, chi)) if clo <= lo && hi <= chi => {}
        _ => {
            return Err(Error::Domain(format!(
                "{derivative_claim} does not cover [{lo}, {hi}]"
            )))
        }
    }
    let v = &anchor.value;
    let (holds, wrong) = match direction {
        Direction::Increasing => (!v.lo_point().lt(0.0), v.lt(0.0)),
        Direction::Decreasing => (!v.hi_point().gt(0.0), v.gt(0.0)),
    };
    let rel = if direction == Direction::Increasing { ">=" } else { "<=" };
    let mut out = Outcome::simple(Status::Verified, "");
    out.boxes_examined = 1;
    out.precision = v.mode();
    if anchor.exact_zero && v.contains_zero() || holds {
        out.covered = Some((lo.clone(), hi.clone()));
        out.detail = format!(
            "D {rel} 0 on [{lo}, {hi}] from D({lo}) in [{:e}, {:e}]{} and {derivative_claim}",
            v.lo_f64(),
            v.hi_f64(),
            if anchor.exact_zero { " (exactly 0)" } else { "" }
        );
    } else if wrong {
        out.status = Status::Failed;
        out.detail = format!("anchor value on the wrong side of 0: [{:e}, {:e}]", v.lo_f64(), v.hi_f64());
        out.witness = Some(Witness::new(lo, lo, [v.lo_f64(), v.hi_f64()]));
    } else {
        out.status = Status::Undecided;
        out.detail = "anchor enclosure straddles 0 and no exact identity was supplied".into();
        out.worst_box = Some((lo.clone(), lo.clone()));
    }
    Ok(out)
}
