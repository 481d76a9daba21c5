use std::collections::{BTreeMap, BTreeSet};
use std::time::Instant;

use super::certificate::{finite, Certificate, ClaimKind, Status, SubCheck};
use super::registry::{claim_registry, exact_alpha_star, Claim, Context, Evidence};
use super::{rational_to_f64, ProverConfig};
use crate::error::{Error, Result};

/// Claim ids in dependency order; ties keep registry order.
pub fn topological_order(claims: &[Claim]) -> Result<Vec<&'static str>> {
    let mut done: BTreeSet<&str> = BTreeSet::new();
    let mut order = Vec::with_capacity(claims.len());
    while order.len() < claims.len() {
        let next = claims
            .iter()
            .find(|c| !done.contains(c.id) && c.deps.iter().all(|d| done.contains(d)))
            .ok_or_else(|| Error::Domain("claim dependencies contain a cycle or a missing id".into()))?;
        done.insert(next.id);
        order.push(next.id);
    }
    Ok(order)
}

/// Runs the requested claims (and, silently, their dependencies) and returns
/// their certificates sorted by id.
pub fn run<S: AsRef<str>>(ids: &[S], cfg: &ProverConfig) -> Result<Vec<Certificate>> {
    run_with_overrides(ids, cfg, &BTreeMap::new())
}

/// As [`run`], with the status of some claims forced instead of computed.
/// Used to exercise the composition rules and exit codes.
pub fn run_with_overrides<S: AsRef<str>>(
    ids: &[S],
    cfg: &ProverConfig,
    overrides: &BTreeMap<String, Status>,
) -> Result<Vec<Certificate>> {
    cfg.validate()?;
    let registry = claim_registry();
    let by_id: BTreeMap<&str, &Claim> = registry.iter().map(|c| (c.id, c)).collect();
    let mut wanted = BTreeSet::new();
    for id in ids {
        let id = id.as_ref();
        if !by_id.contains_key(id) {
            return Err(Error::UnknownClaimId(id.to_string()));
        }
        wanted.insert(id.to_string());
    }
    let mut needed: BTreeSet<&str> = BTreeSet::new();
    let mut pending: Vec<&str> = wanted.iter().map(|s| by_id[s.as_str()].id).collect();
    while let Some(id) = pending.pop() {
        if needed.insert(id) {
            pending.extend(by_id[id].deps.iter().copied());
        }
    }
    let star = exact_alpha_star()?;
    let mut done: BTreeMap<String, Certificate> = BTreeMap::new();
    for id in topological_order(&registry)? {
        if !needed.contains(id) {
            continue;
        }
        let claim = by_id[id];
        let start = Instant::now();
        let lo = claim.domain.0.resolve(&star.hi, &cfg.delta);
        let hi = claim.domain.1.resolve(&star.hi, &cfg.delta);
        let ev = match overrides.get(id) {
            Some(&status) => Evidence::injected(status),
            None => {
                let ctx = Context { cfg, lo: lo.clone(), hi: hi.clone(), alpha_star: &star, deps: &done };
                (claim.check)(&ctx)
            }
        };
        let cert = certify(claim, ev, &lo, &hi, &done, start.elapsed().as_millis() as u64);
        done.insert(id.to_string(), cert);
    }
    Ok(wanted.iter().map(|id| done[id].clone()).collect())
}

fn certify(
    claim: &Claim,
    ev: Evidence,
    lo: &num_rational::BigRational,
    hi: &num_rational::BigRational,
    done: &BTreeMap<String, Certificate>,
    elapsed_ms: u64,
) -> Certificate {
    let mut status = ev.status();
    let mut checks = Vec::new();
    for d in claim.deps {
        let ds = done.get(*d).map_or(Status::Undecided, |c| c.status);
        if ds != Status::Verified && status != Status::Failed {
            status = Status::Undecided;
        }
        checks.push(SubCheck { name: format!("dependency {d}"), status: ds, detail: format!("{d} is {ds}") });
    }
    checks.extend(ev.checks);
    let note = match claim.kind {
        ClaimKind::Overlap => Some("consistency (falsification) check: meeting enclosures do not prove the identity".to_string()),
        ClaimKind::Compose => Some("verified only when every dependency and every local step is verified".to_string()),
        ClaimKind::Monotone => Some("non-strict bound lifted from an exact anchor value and a strict derivative sign".to_string()),
        _ => None,
    };
    Certificate {
        id: claim.id.to_string(),
        kind: claim.kind,
        statement: claim.statement.to_string(),
        paper_ref: claim.paper_ref.to_string(),
        deps: claim.deps.iter().map(|d| d.to_string()).collect(),
        status,
        domain: [rational_to_f64(lo), rational_to_f64(hi)],
        boxes_examined: ev.boxes,
        max_depth_used: ev.depth,
        witness: ev.witness,
        elapsed_ms,
        domain_exact: [lo.to_string(), hi.to_string()],
        covered: (status == Status::Verified).then(|| [lo.to_string(), hi.to_string()]),
        worst_box: ev.worst_box.map(|(a, b)| [finite(rational_to_f64(&a)), finite(rational_to_f64(&b))]),
        precision: ev.precision,
        checks,
        note,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_shape() {
        let r = claim_registry();
        assert_eq!(r.len(), 20);
        let c17 = r.iter().find(|c| c.id == "C17").unwrap();
        assert_eq!(c17.deps, ["C06", "C09", "C10", "C11", "C12", "C13", "C14", "C15", "C16"]);
        for c in &r {
            if c.kind == ClaimKind::Compose {
                assert!(!c.deps.is_empty(), "{}", c.id);
            }
        }
        let order = topological_order(&r).unwrap();
        assert_eq!(order.len(), 20);
        for c in &r {
            let pos = order.iter().position(|x| *x == c.id).unwrap();
            for d in c.deps {
                assert!(order.iter().position(|x| x == d).unwrap() < pos);
            }
        }
    }

    #[test]
    fn unknown_id_is_rejected() {
        let err = run(&["C99"], &ProverConfig::default()).unwrap_err();
        assert!(matches!(err, Error::UnknownClaimId(id) if id == "C99"));
    }

    #[test]
    fn exact_claim_runs_alone() {
        let certs = run(&["C04"], &ProverConfig::default()).unwrap();
        assert_eq!(certs.len(), 1);
        assert_eq!(certs[0].status, Status::Verified);
        assert!(certs[0].boxes_examined >= 1);
    }

    #[test]
    fn compose_waits_for_dependencies() {
        let mut o = BTreeMap::new();
        o.insert("C14".to_string(), Status::Undecided);
        for id in ["C06", "C09", "C10", "C11", "C12", "C13", "C15", "C16", "C03", "C10"] {
            o.insert(id.to_string(), Status::Verified);
        }
        let certs = run_with_overrides(&["C17"], &ProverConfig::default(), &o).unwrap();
        assert_eq!(certs[0].status, Status::Undecided);
        let dep = certs[0].check("dependency C14").unwrap();
        assert_eq!(dep.status, Status::Undecided);
    }
}
