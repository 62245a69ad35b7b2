use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::schedule::{LevelRule, LevelSchedule};
use crate::error::{ForcingError, Result};
use crate::word::{Digit3, Word3};

/// Default cap on the depth of explicit node enumeration.
pub const DEFAULT_ORACLE_DEPTH: usize = 20;

/// A condition of the ternary tree forcing: a stem and the rule for every
/// level above it.
///
/// The represented tree is `{ t : t ↾ |stem| ⊆ stem, and t(i) is allowed by
/// the rule at level i for |stem| ≤ i < |t| }`. A condition is *canonical*
/// when the rule at level `|stem|` is `Split`, so the stored stem is the
/// longest node compatible with every node. Values built through
/// [`TCondition::normalize`] are canonical; [`TCondition::from_parts`] keeps
/// arbitrary input so [`TCondition::validate`] can report on it.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TCondition {
    stem: Word3,
    schedule: LevelSchedule,
}

impl TCondition {
    pub fn from_parts(stem: Word3, schedule: LevelSchedule) -> TCondition {
        TCondition { stem, schedule }
    }

    /// Absorb leading `Fixed` rules into the stem until the first rule
    /// above the stem is `Split`.
    pub fn normalize(stem: Word3, schedule: LevelSchedule) -> Result<TCondition> {
        if !schedule.has_splitting_tail() {
            return Err(ForcingError::NoSplittingTail);
        }
        let mut stem = stem;
        let mut offset = 0;
        while let LevelRule::Fixed(b) = schedule.rule_at(offset) {
            stem.push(b);
            offset += 1;
        }
        Ok(TCondition {
            stem,
            schedule: schedule.shifted(offset),
        })
    }

    pub fn normalized(&self) -> Result<TCondition> {
        TCondition::normalize(self.stem.clone(), self.schedule.clone())
    }

    /// The full splitting tree above `stem`.
    pub fn full_splitting(stem: Word3) -> TCondition {
        TCondition {
            stem,
            schedule: LevelSchedule::full_splitting(),
        }
    }

    pub fn stem(&self) -> &Word3 {
        &self.stem
    }

    pub fn schedule(&self) -> &LevelSchedule {
        &self.schedule
    }

    /// Rule at an absolute level; `None` inside the stem.
    pub fn rule(&self, level: usize) -> Option<LevelRule> {
        level
            .checked_sub(self.stem.len())
            .map(|off| self.schedule.rule_at(off))
    }

    /// First level from which the rules are purely periodic.
    pub fn horizon(&self) -> usize {
        self.stem.len() + self.schedule.table().len()
    }

    pub fn period(&self) -> usize {
        self.schedule.tail().len()
    }

    /// The schedule as seen from an absolute `level ≥ |stem|`.
    pub fn schedule_from(&self, level: usize) -> LevelSchedule {
        debug_assert!(level >= self.stem.len());
        self.schedule.shifted(level - self.stem.len())
    }

    pub fn is_canonical(&self) -> bool {
        self.schedule.rule_at(0).is_split()
    }

    /// No `Fixed(2)` anywhere above the stem.
    pub fn is_strict(&self) -> bool {
        self.schedule.first_fixed_two().is_none()
    }

    /// Absolute level of the first `Fixed(2)`, if any.
    pub fn first_fixed_two(&self) -> Option<usize> {
        self.schedule
            .first_fixed_two()
            .map(|off| off + self.stem.len())
    }

    pub fn member(&self, t: &[Digit3]) -> bool {
        t.iter().enumerate().all(|(i, &d)| match self.rule(i) {
            None => self.stem[i] == d,
            Some(r) => r.allows(d),
        })
    }

    /// `p ↾ t`: the nodes of `p` compatible with `t`.
    pub fn restrict(&self, t: &[Digit3]) -> Result<TCondition> {
        if !self.member(t) {
            return Err(ForcingError::NotAMember {
                node: Word3::from_digits(t.to_vec()).to_string(),
            });
        }
        if t.len() <= self.stem.len() {
            return Ok(self.clone());
        }
        TCondition::normalize(Word3::from_digits(t.to_vec()), self.schedule_from(t.len()))
    }

    /// Splitting levels in increasing order. Finite only when the tail has
    /// no `Split`, which [`validate`](TCondition::validate) rejects.
    pub fn split_levels(&self) -> SplitLevels<'_> {
        let end = if self.schedule.has_splitting_tail() {
            usize::MAX
        } else {
            self.horizon()
        };
        SplitLevels {
            cond: self,
            level: self.stem.len(),
            end,
        }
    }

    /// The first `m` elements of the splitting-level set.
    pub fn splitting_levels(&self, m: usize) -> Vec<usize> {
        self.split_levels().take(m).collect()
    }

    /// The `k`-th splitting level (0-indexed).
    pub fn nth_split_level(&self, k: usize) -> Result<usize> {
        self.split_levels()
            .nth(k)
            .ok_or(ForcingError::NoSplittingTail)
    }

    /// Least splitting level `≥ level`.
    pub fn next_split_at_or_after(&self, level: usize) -> Result<usize> {
        self.split_levels()
            .find(|&l| l >= level)
            .ok_or(ForcingError::NoSplittingTail)
    }

    /// Extend the member `t` to length `len`, following `Fixed` rules and
    /// taking `at_split` on every splitting level passed.
    pub fn extend_node(&self, t: &[Digit3], len: usize, at_split: Digit3) -> Word3 {
        let mut out = Word3::from_digits(t.to_vec());
        for level in t.len()..len {
            let d = match self.rule(level) {
                None => self.stem[level],
                Some(LevelRule::Split) => at_split,
                Some(LevelRule::Fixed(b)) => b,
            };
            out.push(d);
        }
        out
    }

    /// All nodes of length `d`, bounded by [`DEFAULT_ORACLE_DEPTH`].
    pub fn nodes_at_depth(&self, d: usize) -> Result<BTreeSet<Word3>> {
        self.nodes_at_depth_limited(d, DEFAULT_ORACLE_DEPTH)
    }

    pub fn nodes_at_depth_limited(&self, d: usize, limit: usize) -> Result<BTreeSet<Word3>> {
        if d > limit {
            return Err(ForcingError::DepthLimit { depth: d, limit });
        }
        Ok(self.level_nodes(d).into_iter().collect())
    }

    /// Unbounded node enumeration in lexicographic order; callers must know
    /// the count `3^(splits below d)` is small.
    pub(crate) fn level_nodes(&self, d: usize) -> Vec<Word3> {
        if d <= self.stem.len() {
            return vec![self.stem.prefix(d)];
        }
        let mut layer = vec![self.stem.clone()];
        for level in self.stem.len()..d {
            layer = match self.schedule.rule_at(level - self.stem.len()) {
                LevelRule::Split => layer
                    .iter()
                    .flat_map(|t| Digit3::ALL.into_iter().map(move |d| t.child(d)))
                    .collect(),
                LevelRule::Fixed(b) => layer.into_iter().map(|t| t.child(b)).collect(),
            };
        }
        layer
    }

    /// Check canonical form, perfectness and, when `strict`, that no level
    /// above the stem is fixed to the digit 2.
    pub fn validate(&self, strict: bool) -> Validation {
        let mut diagnostics = Vec::new();
        if !self.schedule.has_splitting_tail() {
            diagnostics.push(Violation::NotPerfect);
        }
        if !self.is_canonical() {
            diagnostics.push(Violation::StemNotMaximal {
                level: self.stem.len(),
            });
        }
        if strict {
            if let Some(level) = self.first_fixed_two() {
                diagnostics.push(Violation::FixedTwoAboveStem { level });
            }
        }
        Validation {
            valid: diagnostics.is_empty(),
            strict,
            diagnostics,
        }
    }

    /// Valid in the lenient class (canonical and perfect).
    pub fn is_valid(&self) -> bool {
        self.validate(false).valid
    }

    pub fn require_valid(&self, strict: bool) -> Result<()> {
        let v = self.validate(strict);
        match v.diagnostics.first() {
            None => Ok(()),
            Some(Violation::NotPerfect) => Err(ForcingError::NoSplittingTail),
            Some(Violation::StemNotMaximal { .. }) => Err(ForcingError::Parse(
                "condition is not canonical (normalize it first)".into(),
            )),
            Some(Violation::FixedTwoAboveStem { level }) => {
                Err(ForcingError::NotStrict { level: *level })
            }
        }
    }
}

impl fmt::Display for TCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "⟨{}⟩ [", self.stem)?;
        for r in self.schedule.table() {
            write!(f, "{r} ")?;
        }
        write!(f, "| ")?;
        for r in self.schedule.tail() {
            write!(f, "{r} ")?;
        }
        write!(f, "]*")
    }
}

/// Iterator over the splitting levels of a condition.
pub struct SplitLevels<'a> {
    cond: &'a TCondition,
    level: usize,
    end: usize,
}

impl Iterator for SplitLevels<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        while self.level < self.end {
            let level = self.level;
            self.level += 1;
            if self.cond.rule(level).is_some_and(|r| r.is_split()) {
                return Some(level);
            }
        }
        None
    }
}

/// Outcome of [`TCondition::validate`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Validation {
    pub valid: bool,
    #[serde(skip)]
    pub strict: bool,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub diagnostics: Vec<Violation>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "violation", rename_all = "snake_case")]
pub enum Violation {
    /// Only finitely many splitting levels: the tree is not perfect.
    NotPerfect,
    /// The level just above the stem does not split, so the stem is not
    /// the longest node compatible with all others.
    StemNotMaximal { level: usize },
    /// A non-splitting node above the stem is continued by the digit 2.
    FixedTwoAboveStem { level: usize },
}
