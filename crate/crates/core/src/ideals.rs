//! Witness sets for the ideal of nowhere dense sets.
//!
//! `N_n` collects the reals with no digit 2 from position `n` on; `M_n`
//! collects the reals in `H` whose coded binary real vanishes from index `n`
//! on. Each single set is avoided below any condition by a refinement, while
//! any condition also has branches in their union.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::coding::{open_block_parity, parity_tail_analysis};
use crate::error::{ForcingError, Result};
use crate::forcing::{decided_cohen_prefix, extend_for_cohen};
use crate::real::{BranchSelector, EventualReal};
use crate::tree::{branch, unroll, LevelRule, TCondition};
use crate::word::{Digit3, Word2};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "n")]
pub enum IdealSetSpec {
    Nn(usize),
    Mn(usize),
}

impl IdealSetSpec {
    pub fn parse(kind: &str, n: usize) -> Result<IdealSetSpec> {
        match kind {
            "Nn" | "nn" | "N" => Ok(IdealSetSpec::Nn(n)),
            "Mn" | "mn" | "M" => Ok(IdealSetSpec::Mn(n)),
            other => Err(ForcingError::Parse(format!("unknown set {other:?}"))),
        }
    }

    pub fn contains(&self, z: &EventualReal) -> bool {
        match *self {
            IdealSetSpec::Nn(n) => member_nn(z, n),
            IdealSetSpec::Mn(n) => member_mn(z, n),
        }
    }

    /// A refinement of `p` with no branch in this set.
    pub fn witness(&self, p: &TCondition) -> Result<TCondition> {
        match *self {
            IdealSetSpec::Nn(n) => nn_witness(p, n),
            IdealSetSpec::Mn(n) => mn_witness(p, n),
        }
    }
}

impl fmt::Display for IdealSetSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IdealSetSpec::Nn(n) => write!(f, "N_{n}"),
            IdealSetSpec::Mn(n) => write!(f, "M_{n}"),
        }
    }
}

impl FromStr for IdealSetSpec {
    type Err = ForcingError;

    /// `Nn:3` or `Mn:0`.
    fn from_str(s: &str) -> Result<IdealSetSpec> {
        let (kind, n) = s
            .split_once(':')
            .ok_or_else(|| ForcingError::Parse(format!("expected KIND:N, got {s:?}")))?;
        let n = n
            .parse()
            .map_err(|_| ForcingError::Parse(format!("bad index {n:?}")))?;
        IdealSetSpec::parse(kind, n)
    }
}

/// No digit 2 at any position `≥ n`.
pub fn member_nn(z: &EventualReal, n: usize) -> bool {
    z.prefix().iter().skip(n).all(|d| !d.is_two()) && z.tail().iter().all(|d| !d.is_two())
}

/// `z ∈ H` and `c_z(k) = 0` for every `k ≥ n`.
pub fn member_mn(z: &EventualReal, n: usize) -> bool {
    parity_tail_analysis(z).is_ok_and(|a| a.zero_from(n))
}

/// `q ≤ p` whose stem has a 2 at position `≥ n`.
pub fn nn_witness(p: &TCondition, n: usize) -> Result<TCondition> {
    p.require_valid(false)?;
    let level = p.next_split_at_or_after(n.max(p.stem().len()))?;
    let t = p.extend_node(p.stem(), level, Digit3::ZERO).child(Digit3::TWO);
    p.restrict(&t)
}

/// The branch of `p` taking 0 at every splitting level; it lies in
/// `N_{|stem(p)|}`.
pub fn non2_branch(p: &TCondition) -> Result<EventualReal> {
    p.require_valid(true)?;
    Ok(branch(p, &BranchSelector::constant(Digit3::ZERO)))
}

/// `q ≤ p` deciding a code digit 1 at some index `≥ n`.
pub fn mn_witness(p: &TCondition, n: usize) -> Result<TCondition> {
    p.require_valid(true)?;
    let decided = decided_cohen_prefix(p).len();
    extend_for_cohen(p, &Word2::zeros_then_one(n.saturating_sub(decided)))
}

#[derive(Clone, PartialEq, Eq, Hash)]
struct Block {
    /// A 2 has been written since the start.
    open: bool,
    /// Parity of the 1s since the last 2.
    odd: bool,
}

/// A branch of `p` in `H` whose code vanishes beyond the decided prefix.
///
/// At a splitting level an even block is closed with a 2. An odd block is
/// evened out before the next splitting level, which then closes it: the
/// choice here is 1 or 0 according to whether the fixed 1s in between are
/// even or odd in number.
pub fn all_zero_branch(p: &TCondition) -> Result<EventualReal> {
    p.require_valid(true)?;
    let parity = open_block_parity(p.stem());
    let init = Block {
        open: parity.is_some(),
        odd: parity.unwrap_or(false),
    };
    let z = unroll(p, init, |state, level, rule| {
        let d = match rule {
            LevelRule::Fixed(d) => d,
            LevelRule::Split if !state.open || !state.odd => Digit3::TWO,
            LevelRule::Split => {
                let next = p.next_split_at_or_after(level + 1).expect("splitting tail");
                let ones = (level + 1..next)
                    .filter(|&l| p.rule(l) == Some(LevelRule::F1))
                    .count();
                if ones % 2 == 0 {
                    Digit3::ONE
                } else {
                    Digit3::ZERO
                }
            }
        };
        if d.is_two() {
            state.open = true;
            state.odd = false;
        } else if d.is_one() {
            state.odd = !state.odd;
        }
        d
    });
    Ok(z)
}
