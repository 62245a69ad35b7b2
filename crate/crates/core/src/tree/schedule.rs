use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{ForcingError, Result};
use crate::word::Digit3;

/// Behaviour of a condition at one level above its stem.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LevelRule {
    /// Every node of this length splits into all three digits.
    Split,
    /// Every node of this length continues with the same digit.
    Fixed(Digit3),
}

impl LevelRule {
    pub const F0: LevelRule = LevelRule::Fixed(Digit3::ZERO);
    pub const F1: LevelRule = LevelRule::Fixed(Digit3::ONE);
    pub const F2: LevelRule = LevelRule::Fixed(Digit3::TWO);

    pub fn is_split(self) -> bool {
        matches!(self, LevelRule::Split)
    }

    pub fn allows(self, d: Digit3) -> bool {
        match self {
            LevelRule::Split => true,
            LevelRule::Fixed(b) => b == d,
        }
    }

    /// The successor set of `self` is contained in that of `other`.
    pub fn refines(self, other: LevelRule) -> bool {
        match (self, other) {
            (_, LevelRule::Split) => true,
            (LevelRule::Split, LevelRule::Fixed(_)) => false,
            (LevelRule::Fixed(a), LevelRule::Fixed(b)) => a == b,
        }
    }

    /// Level-wise intersection; `None` when two fixed digits disagree.
    pub fn intersect(self, other: LevelRule) -> Option<LevelRule> {
        match (self, other) {
            (LevelRule::Split, r) | (r, LevelRule::Split) => Some(r),
            (LevelRule::Fixed(a), LevelRule::Fixed(b)) if a == b => Some(self),
            _ => None,
        }
    }

    pub fn code(self) -> &'static str {
        match self {
            LevelRule::Split => "S",
            LevelRule::Fixed(d) => ["F0", "F1", "F2"][d.value() as usize],
        }
    }

    pub fn from_code(code: &str) -> Result<LevelRule> {
        match code {
            "S" => Ok(LevelRule::Split),
            "F0" => Ok(LevelRule::F0),
            "F1" => Ok(LevelRule::F1),
            "F2" => Ok(LevelRule::F2),
            other => Err(ForcingError::InvalidRule(other.to_string())),
        }
    }
}

impl fmt::Display for LevelRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

impl Serialize for LevelRule {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.code())
    }
}

impl<'de> Deserialize<'de> for LevelRule {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        LevelRule::from_code(&s).map_err(serde::de::Error::custom)
    }
}

/// Eventually periodic sequence of level rules: a finite `table` followed
/// by a nonempty `tail` repeated forever. Offsets are relative to the level
/// where the schedule starts (the stem length of its condition).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "ScheduleRepr")]
pub struct LevelSchedule {
    table: Vec<LevelRule>,
    tail: Vec<LevelRule>,
}

#[derive(Deserialize)]
struct ScheduleRepr {
    table: Vec<LevelRule>,
    tail: Vec<LevelRule>,
}

impl TryFrom<ScheduleRepr> for LevelSchedule {
    type Error = ForcingError;

    fn try_from(r: ScheduleRepr) -> Result<LevelSchedule> {
        LevelSchedule::new(r.table, r.tail)
    }
}

impl LevelSchedule {
    pub fn new(table: Vec<LevelRule>, tail: Vec<LevelRule>) -> Result<LevelSchedule> {
        if tail.is_empty() {
            return Err(ForcingError::EmptyTail);
        }
        Ok(LevelSchedule { table, tail })
    }

    /// `Split` at every level.
    pub fn full_splitting() -> LevelSchedule {
        LevelSchedule {
            table: Vec::new(),
            tail: vec![LevelRule::Split],
        }
    }

    pub fn periodic(tail: Vec<LevelRule>) -> Result<LevelSchedule> {
        LevelSchedule::new(Vec::new(), tail)
    }

    pub fn table(&self) -> &[LevelRule] {
        &self.table
    }

    pub fn tail(&self) -> &[LevelRule] {
        &self.tail
    }

    pub fn rule_at(&self, offset: usize) -> LevelRule {
        if offset < self.table.len() {
            self.table[offset]
        } else {
            self.tail[(offset - self.table.len()) % self.tail.len()]
        }
    }

    pub fn has_splitting_tail(&self) -> bool {
        self.tail.iter().any(|r| r.is_split())
    }

    /// The schedule seen from `offset` levels further up.
    pub fn shifted(&self, offset: usize) -> LevelSchedule {
        if offset <= self.table.len() {
            LevelSchedule {
                table: self.table[offset..].to_vec(),
                tail: self.tail.clone(),
            }
        } else {
            let r = (offset - self.table.len()) % self.tail.len();
            let mut tail = self.tail[r..].to_vec();
            tail.extend_from_slice(&self.tail[..r]);
            LevelSchedule {
                table: Vec::new(),
                tail,
            }
        }
    }

    /// `rules` followed by `self`.
    pub fn prepend(&self, rules: &[LevelRule]) -> LevelSchedule {
        let mut table = rules.to_vec();
        table.extend_from_slice(&self.table);
        LevelSchedule {
            table,
            tail: self.tail.clone(),
        }
    }

    /// The same schedule with one level replaced; the tail is untouched.
    pub fn with_rule(&self, offset: usize, rule: LevelRule) -> LevelSchedule {
        if offset < self.table.len() {
            let mut table = self.table.clone();
            table[offset] = rule;
            return LevelSchedule {
                table,
                tail: self.tail.clone(),
            };
        }
        let mut table: Vec<LevelRule> = (0..offset).map(|i| self.rule_at(i)).collect();
        table.push(rule);
        LevelSchedule {
            table,
            tail: self.shifted(offset + 1).tail,
        }
    }

    /// Offset of the first `Fixed(2)`, scanning the table then one tail period.
    pub fn first_fixed_two(&self) -> Option<usize> {
        self.table
            .iter()
            .chain(self.tail.iter())
            .position(|&r| r == LevelRule::F2)
    }

    /// Rule-wise equality of the represented infinite sequences.
    pub fn same_rules(&self, other: &LevelSchedule) -> bool {
        let horizon = self.table.len().max(other.table.len());
        let period = crate::real::lcm(self.tail.len(), other.tail.len());
        (0..horizon + period).all(|i| self.rule_at(i) == other.rule_at(i))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use LevelRule::Split as S;

    #[test]
    fn json_codes() {
        let sch = LevelSchedule::new(vec![S, LevelRule::F0, LevelRule::F1], vec![S, LevelRule::F0]).unwrap();
        let json = serde_json::to_string(&sch).unwrap();
        assert_eq!(json, r#"{"table":["S","F0","F1"],"tail":["S","F0"]}"#);
        let back: LevelSchedule = serde_json::from_str(&json).unwrap();
        assert_eq!(back, sch);
        assert!(serde_json::from_str::<LevelSchedule>(r#"{"table":[],"tail":[]}"#).is_err());
        assert!(serde_json::from_str::<LevelSchedule>(r#"{"table":["F3"],"tail":["S"]}"#).is_err());
    }

    #[test]
    fn shifting_past_the_table_rotates_the_tail() {
        let sch = LevelSchedule::new(vec![LevelRule::F1], vec![S, LevelRule::F0, LevelRule::F2]).unwrap();
        for off in 0..12 {
            let sh = sch.shifted(off);
            for i in 0..10 {
                assert_eq!(sh.rule_at(i), sch.rule_at(off + i));
            }
        }
        assert_eq!(sch.shifted(3).tail(), &[LevelRule::F2, S, LevelRule::F0]);
    }

    #[test]
    fn replacing_one_level() {
        let sch = LevelSchedule::new(vec![LevelRule::F1], vec![S, LevelRule::F0]).unwrap();
        for off in 0..7 {
            let patched = sch.with_rule(off, LevelRule::F2);
            for i in 0..12 {
                let want = if i == off { LevelRule::F2 } else { sch.rule_at(i) };
                assert_eq!(patched.rule_at(i), want);
            }
        }
    }

    #[test]
    fn rule_lattice() {
        assert!(LevelRule::F0.refines(S));
        assert!(!S.refines(LevelRule::F0));
        assert!(!LevelRule::F0.refines(LevelRule::F1));
        assert_eq!(S.intersect(LevelRule::F2), Some(LevelRule::F2));
        assert_eq!(LevelRule::F0.intersect(LevelRule::F1), None);
    }
}
