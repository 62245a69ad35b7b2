use std::fmt;

use serde::Serialize;

use super::condition::TCondition;
use super::schedule::LevelSchedule;
use crate::real::lcm;

/// `q ≤ p`, i.e. `q ⊆ p` as node sets. Both conditions must be canonical.
///
/// Beyond `max(horizon)` both schedules are periodic, so comparing one
/// common period past that point decides every level.
pub fn leq(q: &TCondition, p: &TCondition) -> bool {
    if !p.stem().is_prefix_of(q.stem()) || !p.member(q.stem()) {
        return false;
    }
    let start = q.stem().len();
    let end = q.horizon().max(p.horizon()).max(start) + lcm(q.period(), p.period());
    (start..end).all(|level| {
        let rq = q.rule(level).expect("level above stem");
        let rp = p.rule(level).expect("level above stem");
        rq.refines(rp)
    })
}

/// `q ≤_n p`: `q ≤ p` and the first `n + 1` splitting levels agree.
pub fn leq_n(q: &TCondition, p: &TCondition, n: usize) -> bool {
    leq(q, p) && q.splitting_levels(n + 1) == p.splitting_levels(n + 1)
}

/// Both directions of [`leq`]: the conditions denote the same tree.
pub fn equivalent(p: &TCondition, q: &TCondition) -> bool {
    leq(p, q) && leq(q, p)
}

/// Reason two conditions have no common extension.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "reason", rename_all = "snake_case")]
pub enum Incompatible {
    /// The stems, or a stem and a fixed rule, disagree at this level.
    ConflictAt { level: usize },
    /// Only finitely many levels split in both.
    NoCommonSplittingTail,
}

impl fmt::Display for Incompatible {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Incompatible::ConflictAt { level } => write!(f, "conflict at level {level}"),
            Incompatible::NoCommonSplittingTail => f.write_str("no common splitting tail"),
        }
    }
}

/// Greatest common extension of two canonical conditions.
pub fn meet(p: &TCondition, q: &TCondition) -> Result<TCondition, Incompatible> {
    let (long, short) = if p.stem().len() >= q.stem().len() {
        (p, q)
    } else {
        (q, p)
    };
    for (level, &d) in long.stem().iter().enumerate() {
        let ok = match short.rule(level) {
            None => short.stem()[level] == d,
            Some(r) => r.allows(d),
        };
        if !ok {
            return Err(Incompatible::ConflictAt { level });
        }
    }
    let start = long.stem().len();
    let periodic_from = p.horizon().max(q.horizon()).max(start);
    let period = lcm(p.period(), q.period());
    let mut rules = Vec::with_capacity(periodic_from + period - start);
    for level in start..periodic_from + period {
        let rp = p.rule(level).expect("level above stem");
        let rq = q.rule(level).expect("level above stem");
        match rp.intersect(rq) {
            Some(r) => rules.push(r),
            None => return Err(Incompatible::ConflictAt { level }),
        }
    }
    let tail = rules.split_off(periodic_from - start);
    if !tail.iter().any(|r| r.is_split()) {
        return Err(Incompatible::NoCommonSplittingTail);
    }
    let schedule = LevelSchedule::new(rules, tail).expect("period is nonzero");
    Ok(TCondition::normalize(long.stem().clone(), schedule).expect("tail splits"))
}
