//! Eventually periodic infinite sequences.
//!
//! A sequence is stored as a finite `prefix` followed by a nonempty `tail`
//! repeated forever, so every digit query is total and every property that
//! depends only on the tail (infinitely many 2s, parity of 1-blocks) is
//! decidable.

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{ForcingError, Result};
use crate::word::{Digit3, Word3};

/// An eventually periodic element of `S^ω`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Eventual<S> {
    prefix: Vec<S>,
    tail: Vec<S>,
}

/// An eventually periodic element of `3^ω`.
pub type EventualReal = Eventual<Digit3>;

/// An eventually periodic element of `ω^ω`.
pub type EventualNatSeq = Eventual<u64>;

impl<S: Copy + PartialEq> Eventual<S> {
    pub fn new(prefix: Vec<S>, tail: Vec<S>) -> Result<Self> {
        if tail.is_empty() {
            return Err(ForcingError::EmptyTail);
        }
        Ok(Eventual { prefix, tail })
    }

    pub fn constant(value: S) -> Self {
        Eventual {
            prefix: Vec::new(),
            tail: vec![value],
        }
    }

    pub fn prefix(&self) -> &[S] {
        &self.prefix
    }

    pub fn tail(&self) -> &[S] {
        &self.tail
    }

    pub fn digit(&self, i: usize) -> S {
        if i < self.prefix.len() {
            self.prefix[i]
        } else {
            self.tail[(i - self.prefix.len()) % self.tail.len()]
        }
    }

    /// The first `len` digits.
    pub fn take(&self, len: usize) -> Vec<S> {
        (0..len).map(|i| self.digit(i)).collect()
    }

    /// Digit-wise equality of the represented sequences.
    pub fn same_sequence(&self, other: &Self) -> bool {
        let horizon = self.prefix.len().max(other.prefix.len());
        let period = lcm(self.tail.len(), other.tail.len());
        (0..horizon + period).all(|i| self.digit(i) == other.digit(i))
    }
}

impl EventualReal {
    pub fn from_words(prefix: &str, tail: &str) -> Result<EventualReal> {
        let prefix: Word3 = prefix.parse()?;
        let tail: Word3 = tail.parse()?;
        Eventual::new(prefix.into_digits(), tail.into_digits())
    }

    /// Membership in `H`, the reals with infinitely many 2s.
    pub fn in_h(&self) -> bool {
        self.tail.iter().any(|d| d.is_two())
    }

    pub fn take_word(&self, len: usize) -> Word3 {
        Word3::from_digits(self.take(len))
    }
}

pub(crate) fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub(crate) fn lcm(a: usize, b: usize) -> usize {
    if a == 0 || b == 0 {
        a.max(b)
    } else {
        a / gcd(a, b) * b
    }
}

#[derive(Serialize, Deserialize)]
struct RealRepr {
    prefix: Word3,
    tail: Word3,
}

impl Serialize for EventualReal {
    fn serialize<Ser: Serializer>(&self, serializer: Ser) -> std::result::Result<Ser::Ok, Ser::Error> {
        RealRepr {
            prefix: Word3::from_digits(self.prefix.clone()),
            tail: Word3::from_digits(self.tail.clone()),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for EventualReal {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = RealRepr::deserialize(deserializer)?;
        Eventual::new(repr.prefix.into_digits(), repr.tail.into_digits())
            .map_err(serde::de::Error::custom)
    }
}

#[derive(Serialize, Deserialize)]
struct NatSeqRepr {
    prefix: Vec<u64>,
    tail: Vec<u64>,
}

impl Serialize for EventualNatSeq {
    fn serialize<Ser: Serializer>(&self, serializer: Ser) -> std::result::Result<Ser::Ok, Ser::Error> {
        NatSeqRepr {
            prefix: self.prefix.clone(),
            tail: self.tail.clone(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for EventualNatSeq {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = NatSeqRepr::deserialize(deserializer)?;
        Eventual::new(repr.prefix, repr.tail).map_err(serde::de::Error::custom)
    }
}

/// Names a branch of a condition: digits consumed, one per splitting level.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BranchSelector {
    pub choices: Word3,
    #[serde(rename = "tailChoices")]
    pub tail_choices: Word3,
}

impl BranchSelector {
    pub fn new(choices: Word3, tail_choices: Word3) -> Result<BranchSelector> {
        if tail_choices.is_empty() {
            return Err(ForcingError::EmptyTail);
        }
        Ok(BranchSelector {
            choices,
            tail_choices,
        })
    }

    pub fn constant(d: Digit3) -> BranchSelector {
        BranchSelector {
            choices: Word3::new(),
            tail_choices: Word3::from_digits(vec![d]),
        }
    }

    /// The digit to use at the `k`-th splitting level visited.
    pub fn choice(&self, k: usize) -> Digit3 {
        if k < self.choices.len() {
            self.choices[k]
        } else {
            self.tail_choices[(k - self.choices.len()) % self.tail_choices.len()]
        }
    }

    /// Finite-state summary of "k choices consumed" for cycle detection.
    pub(crate) fn phase(&self, k: usize) -> usize {
        if k < self.choices.len() {
            k
        } else {
            self.choices.len() + (k - self.choices.len()) % self.tail_choices.len()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn digits_are_total() {
        let z = EventualReal::from_words("012", "21").unwrap();
        let got: Word3 = z.take(8).into_iter().collect();
        assert_eq!(got.to_string(), "01221212");
    }

    #[test]
    fn h_membership_reads_the_tail() {
        assert!(EventualReal::from_words("000", "102").unwrap().in_h());
        assert!(!EventualReal::from_words("222", "10").unwrap().in_h());
    }

    #[test]
    fn empty_tail_rejected() {
        assert_eq!(
            EventualReal::from_words("0", ""),
            Err(ForcingError::EmptyTail)
        );
    }

    #[test]
    fn json_shape() {
        let z = EventualReal::from_words("012", "2").unwrap();
        let json = serde_json::to_string(&z).unwrap();
        assert_eq!(json, r#"{"prefix":"012","tail":"2"}"#);
        let back: EventualReal = serde_json::from_str(&json).unwrap();
        assert_eq!(back, z);
    }

    #[test]
    fn semantic_equality_ignores_representation() {
        let a = EventualReal::from_words("", "12").unwrap();
        let b = EventualReal::from_words("1", "2121").unwrap();
        assert!(a.same_sequence(&b));
        let c = EventualReal::from_words("1", "21").unwrap();
        assert!(a.same_sequence(&c));
        let d = EventualReal::from_words("1", "22").unwrap();
        assert!(!a.same_sequence(&d));
    }
}
