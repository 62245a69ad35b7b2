use serde::{Deserialize, Serialize};

use super::condition::TCondition;
use super::schedule::{LevelRule, LevelSchedule};
use crate::error::{ForcingError, Result};
use crate::word::{Digit3, Word2, Word3};

/// An eventually periodic subset of the odd numbers: entry `j` of the
/// underlying bit sequence says whether `2j + 1` belongs to the set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OddPredicate {
    pub table: Word2,
    pub tail: Word2,
}

impl OddPredicate {
    pub fn new(table: Word2, tail: Word2) -> Result<OddPredicate> {
        if tail.is_empty() {
            return Err(ForcingError::EmptyTail);
        }
        Ok(OddPredicate { table, tail })
    }

    pub fn empty() -> OddPredicate {
        OddPredicate {
            table: Word2::new(),
            tail: Word2::from_bits(vec![false]),
        }
    }

    pub fn all_odds() -> OddPredicate {
        OddPredicate {
            table: Word2::new(),
            tail: Word2::from_bits(vec![true]),
        }
    }

    fn bit(&self, j: usize) -> bool {
        if j < self.table.len() {
            self.table[j]
        } else {
            self.tail[(j - self.table.len()) % self.tail.len()]
        }
    }

    /// Membership of an arbitrary natural number; even numbers are never in.
    pub fn contains(&self, n: usize) -> bool {
        n % 2 == 1 && self.bit(n / 2)
    }

    /// Least odd level `< horizon` on which the two sets differ.
    pub fn first_difference(&self, other: &OddPredicate, horizon: usize) -> Option<usize> {
        (1..horizon)
            .step_by(2)
            .find(|&n| self.contains(n) != other.contains(n))
    }
}

/// The condition splitting on every even level and fixed on every odd
/// level `n` to 1 when `n ∈ a`, to 0 otherwise.
pub fn build_antichain_condition(a: &OddPredicate) -> TCondition {
    let pair = |bit: bool| [LevelRule::Split, LevelRule::Fixed(Digit3::from_bit(bit))];
    let table = a.table.iter().flat_map(|&b| pair(b)).collect();
    let tail = a.tail.iter().flat_map(|&b| pair(b)).collect();
    let schedule = LevelSchedule::new(table, tail).expect("tail nonempty");
    TCondition::from_parts(Word3::new(), schedule)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tree::{meet, Incompatible};

    #[test]
    fn empty_set_gives_alternating_zero() {
        let p = build_antichain_condition(&OddPredicate::empty());
        assert!(p.schedule().same_rules(&LevelSchedule::periodic(vec![LevelRule::Split, LevelRule::F0]).unwrap()));
        assert!(p.validate(true).valid);
    }

    #[test]
    fn all_odds_gives_alternating_one() {
        let p = build_antichain_condition(&OddPredicate::all_odds());
        assert!(p.schedule().same_rules(&LevelSchedule::periodic(vec![LevelRule::Split, LevelRule::F1]).unwrap()));
    }

    #[test]
    fn singleton_against_empty_conflicts_at_one() {
        let a = OddPredicate::new("1".parse().unwrap(), "0".parse().unwrap()).unwrap();
        let b = OddPredicate::empty();
        assert_eq!(a.first_difference(&b, 40), Some(1));
        let pa = build_antichain_condition(&a);
        let pb = build_antichain_condition(&b);
        assert_eq!(meet(&pa, &pb), Err(Incompatible::ConflictAt { level: 1 }));
    }
}
