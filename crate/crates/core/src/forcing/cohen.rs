//! Extracting a Cohen real from the generic branch, and why pure decision fails.

use serde::Serialize;

use crate::coding::{open_block_parity, parity_round_nodes, phi_star_t};
use crate::error::{ForcingError, Result};
use crate::tree::TCondition;
use crate::word::{Digit3, Word2};

/// The part of the coded real decided by `p`: the code of its stem.
///
/// On a canonical condition the level right above the stem splits, and the
/// choices 0 and 1 there lead to opposite parities for the open block, so
/// nothing beyond `φ*(stem)` is decided.
pub fn decided_cohen_prefix(p: &TCondition) -> Word2 {
    phi_star_t(p.stem())
}

/// One step of the Cohen-extension recursion.
#[derive(Debug, Clone)]
pub struct CohenRound {
    /// First splitting level, receiving `i ∈ {0,1}`.
    pub n0: usize,
    /// Second splitting level, receiving 2.
    pub n1: usize,
    /// `q ↾ t_i` together with the code digit the new 2 closes.
    pub candidates: [(TCondition, bool); 2],
}

/// Both candidates of a round. The stem of `q` must already contain a 2,
/// so the 2 placed at `n1` closes a block.
pub fn cohen_round(q: &TCondition) -> Result<CohenRound> {
    let n0 = q.next_split_at_or_after(q.stem().len())?;
    let n1 = q.next_split_at_or_after(n0 + 1)?;
    let [(t0, b0), (t1, b1)] = parity_round_nodes(q, q.stem())?;
    debug_assert_ne!(b0, b1, "the two choices differ by exactly one 1");
    Ok(CohenRound {
        n0,
        n1,
        candidates: [(q.restrict(&t0)?, b0), (q.restrict(&t1)?, b1)],
    })
}

/// When the stem contains no 2, put one at the first splitting level so
/// that later 2s close blocks.
fn open_first_block(p: &TCondition) -> Result<TCondition> {
    if open_block_parity(p.stem()).is_some() {
        return Ok(p.clone());
    }
    let level = p.next_split_at_or_after(p.stem().len())?;
    let t = p.extend_node(p.stem(), level, Digit3::ZERO).child(Digit3::TWO);
    p.restrict(&t)
}

/// A condition `q ≤ p` deciding `c_p ⌢ sigma` as an initial segment of the
/// coded real, built one round per bit of `sigma`.
pub fn extend_for_cohen(p: &TCondition, sigma: &Word2) -> Result<TCondition> {
    p.require_valid(false)?;
    if sigma.is_empty() {
        return Ok(p.clone());
    }
    let mut q = open_first_block(p)?;
    for &bit in sigma.iter() {
        let round = cohen_round(&q)?;
        let [(q0, b0), (q1, _)] = round.candidates;
        q = if b0 == bit { q0 } else { q1 };
    }
    let want = decided_cohen_prefix(p).concat(sigma);
    if decided_cohen_prefix(&q) != want {
        // Only forced 2s between the chosen levels can add digits.
        let level = p.first_fixed_two().unwrap_or(p.stem().len());
        return Err(ForcingError::ForcedTwo { level });
    }
    Ok(q)
}

/// Two extensions of `q` deciding code digit `k` oppositely.
#[derive(Debug, Clone, Serialize)]
pub struct DecisionPair {
    pub k: usize,
    pub q0: TCondition,
    pub q1: TCondition,
}

/// Witness that `q` does not decide digit `k = |c_q|` of the coded real:
/// `q0` and `q1` take 0 and 1 at the first splitting level and 2 at the
/// second, and decide that digit with opposite values.
pub fn refute_pure_decision(q: &TCondition) -> Result<DecisionPair> {
    q.require_valid(true)?;
    let k = decided_cohen_prefix(q).len();
    let base = open_first_block(q)?;
    let round = cohen_round(&base)?;
    let [(q0, _), (q1, _)] = round.candidates;
    Ok(DecisionPair { k, q0, q1 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tree::{leq, LevelRule, LevelSchedule};
    use crate::word::Word3;

    fn b(s: &str) -> Word2 {
        s.parse().unwrap()
    }

    #[test]
    fn decided_prefix_examples() {
        assert_eq!(decided_cohen_prefix(&TCondition::full_splitting("2112".parse().unwrap())), b("0"));
        assert_eq!(decided_cohen_prefix(&TCondition::full_splitting("012".parse().unwrap())), b(""));
    }

    #[test]
    fn empty_sigma_is_identity() {
        let p = TCondition::full_splitting("01".parse().unwrap());
        assert_eq!(extend_for_cohen(&p, &b("")).unwrap(), p);
    }

    #[test]
    fn one_bit_on_full_splitting() {
        let p = TCondition::full_splitting("2".parse().unwrap());
        let q = extend_for_cohen(&p, &b("1")).unwrap();
        assert!(leq(&q, &p));
        assert_eq!(decided_cohen_prefix(&q), b("1"));
        assert_eq!(q.stem().to_string(), "212");
    }

    #[test]
    fn rounds_have_complementary_parities() {
        let p = TCondition::normalize(
            "2".parse().unwrap(),
            LevelSchedule::new(vec![LevelRule::Split, LevelRule::F1], vec![LevelRule::F1, LevelRule::Split]).unwrap(),
        )
        .unwrap();
        let round = cohen_round(&p).unwrap();
        assert_ne!(round.candidates[0].1, round.candidates[1].1);
        assert_eq!(round.candidates[0].0.stem()[round.n0], Digit3::ZERO);
        assert_eq!(round.candidates[1].0.stem()[round.n0], Digit3::ONE);
        assert_eq!(round.candidates[1].0.stem()[round.n1], Digit3::TWO);
    }

    #[test]
    fn refutation_on_full_splitting() {
        let q = TCondition::full_splitting(Word3::new());
        let pair = refute_pure_decision(&q).unwrap();
        assert_eq!(pair.k, 0);
        let d0 = decided_cohen_prefix(&pair.q0);
        let d1 = decided_cohen_prefix(&pair.q1);
        assert_eq!(d0, b("0"));
        assert_eq!(d1, b("1"));
        assert!(leq(&pair.q0, &q) && leq(&pair.q1, &q));
    }

    #[test]
    fn refutation_rejects_lenient() {
        let q = TCondition::from_parts(Word3::new(), LevelSchedule::periodic(vec![LevelRule::Split, LevelRule::F2]).unwrap());
        assert!(matches!(refute_pure_decision(&q), Err(ForcingError::NotStrict { .. })));
    }
}
