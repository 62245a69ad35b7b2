//! Amalgamation and finite-stage fusion drivers.
//!
//! Grafting copies the level pattern of a donor condition above a cut level
//! onto every node of the host: the host keeps its rules up to the cut and
//! takes the donor's behaviour (its stem digits as fixed rules, then its
//! schedule) strictly above it. The result can force the digit 2 at a
//! non-splitting level, so drivers return lenient conditions and flag them.

use serde::Serialize;

use super::oracle::{checked_refine, checked_refine_with_stem, DenseOracle};
use crate::error::{ForcingError, Result};
use crate::tree::{leq, meet, LevelRule, TCondition};
use crate::word::{Digit3, Word3};

/// Host rules on levels `≤ cut`, donor pattern on levels `> cut`.
fn graft_above(host: &TCondition, cut: usize, donor: &TCondition) -> TCondition {
    let mut rules: Vec<LevelRule> = (host.stem().len()..=cut)
        .map(|l| host.rule(l).expect("cut is above the stem"))
        .collect();
    let donor_stem = donor.stem();
    let above = if donor_stem.len() > cut + 1 {
        rules.extend(donor_stem[cut + 1..].iter().map(|&d| LevelRule::Fixed(d)));
        donor.schedule().clone()
    } else {
        donor.schedule_from(cut + 1)
    };
    let schedule = above.prepend(&rules);
    TCondition::normalize(host.stem().clone(), schedule).expect("donor tail splits")
}

/// Copy `p_j` above every node of `q` of length `n_k + 1`, where `n_k` is
/// the `k`-th splitting level of `q`. Requires `p_j ≤ q ↾ t` for some such
/// node `t`.
pub fn graft_one(q: &TCondition, k: usize, p_j: &TCondition) -> Result<TCondition> {
    let n_k = q.nth_split_level(k)?;
    let length = n_k + 1;
    let precondition = ForcingError::GraftPrecondition { length };
    if p_j.stem().len() < length {
        return Err(precondition);
    }
    let t = p_j.stem().prefix(length);
    let below = q
        .restrict(&t)
        .map(|r| leq(p_j, &r))
        .unwrap_or(false);
    if !below {
        return Err(precondition);
    }
    Ok(graft_above(q, n_k, p_j))
}

/// Result of one Axiom A refinement step.
#[derive(Debug, Clone, Serialize)]
pub struct AxiomAOutcome {
    pub q: TCondition,
    /// `n_k`, the `k`-th splitting level of the input.
    pub level: usize,
    /// The `3^(k+1)` nodes of length `n_k + 1`.
    pub nodes: Vec<Word3>,
    /// `E`: the oracle's answer for each node, in node order.
    pub witnesses: Vec<TCondition>,
    /// Some level above the stem of `q` is fixed to 2.
    pub lenient: bool,
}

impl AxiomAOutcome {
    /// For `r ≤ q`, the index `j` with `r ↾ t_j ≤ p_j`, making `r`
    /// compatible with `p_j ∈ E`.
    pub fn predense_witness(&self, r: &TCondition) -> Option<usize> {
        let len = self.level + 1;
        let t = r.extend_node(&r.stem().prefix(len), len, Digit3::ZERO);
        let j = self.nodes.iter().position(|n| *n == t)?;
        let restricted = r.restrict(&t).ok()?;
        (leq(&restricted, &self.witnesses[j]) && meet(r, &self.witnesses[j]).is_ok()).then_some(j)
    }
}

/// `q ≤_k p` with a finite set `E` of oracle answers predense below `q`.
pub fn axiom_a_refine<D: DenseOracle + ?Sized>(
    p: &TCondition,
    k: usize,
    oracle: &D,
) -> Result<AxiomAOutcome> {
    p.require_valid(false)?;
    let n_k = p.nth_split_level(k)?;
    let nodes = p.level_nodes(n_k + 1);
    let mut q = p.clone();
    let mut witnesses = Vec::with_capacity(nodes.len());
    for t in &nodes {
        let r = q.restrict(t)?;
        let p_j = checked_refine(oracle, &r)?;
        q = graft_one(&q, k, &p_j)?;
        witnesses.push(p_j);
    }
    let lenient = !q.is_strict();
    Ok(AxiomAOutcome {
        q,
        level: n_k,
        nodes,
        witnesses,
        lenient,
    })
}

/// A node where the stem-preserving oracle supplied a member of the dense set.
#[derive(Debug, Clone, Serialize)]
pub struct StemWitness {
    pub stage: usize,
    pub node: Word3,
    pub condition: TCondition,
}

#[derive(Debug, Clone, Serialize)]
pub struct QuasiPureOutcome {
    /// `q_K`.
    pub q: TCondition,
    /// `q_0 = p, q_1, ..., q_K`, with `q_{k+1} ≤_k q_k`.
    pub stages: Vec<TCondition>,
    pub witnesses: Vec<StemWitness>,
    pub lenient: bool,
}

/// `stages` rounds of the quasi-pure-decision fusion.
///
/// Stage `k` visits the `3^k` nodes of the current condition at its `k`-th
/// splitting level. When the oracle offers a member of the dense set with
/// exactly that node as stem, its pattern is grafted above the level;
/// otherwise the node is left alone.
pub fn quasi_pure_refine<D: DenseOracle + ?Sized>(
    p: &TCondition,
    stages: usize,
    oracle: &D,
) -> Result<QuasiPureOutcome> {
    p.require_valid(false)?;
    let mut q = p.clone();
    let mut history = vec![q.clone()];
    let mut witnesses = Vec::new();
    for stage in 0..stages {
        let n_k = q.nth_split_level(stage)?;
        for t in q.level_nodes(n_k) {
            if let Some(found) = checked_refine_with_stem(oracle, &q, &t)? {
                q = graft_above(&q, n_k, &found);
                witnesses.push(StemWitness {
                    stage,
                    node: t,
                    condition: found,
                });
            }
        }
        history.push(q.clone());
    }
    let lenient = !q.is_strict();
    Ok(QuasiPureOutcome {
        q,
        stages: history,
        witnesses,
        lenient,
    })
}
