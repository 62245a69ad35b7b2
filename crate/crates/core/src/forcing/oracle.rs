use std::fmt;
use std::str::FromStr;

use crate::error::{ForcingError, Result};
use crate::tree::{leq, LevelRule, TCondition};
use crate::word::{Digit3, Word3};

/// Executable stand-in for a dense set: maps every condition to a stronger
/// member of the set.
pub trait DenseOracle {
    fn name(&self) -> &str;

    /// A member of the dense set below `r`.
    fn refine(&self, r: &TCondition) -> TCondition;

    /// A member of the dense set below `r` whose stem is exactly `stem`, or
    /// `None` when the oracle knows of no such member.
    fn refine_with_stem(&self, _r: &TCondition, _stem: &Word3) -> Option<TCondition> {
        None
    }
}

/// Call [`DenseOracle::refine`] and enforce its contract.
pub fn checked_refine<D: DenseOracle + ?Sized>(oracle: &D, r: &TCondition) -> Result<TCondition> {
    let out = oracle.refine(r);
    if !out.is_valid() || !leq(&out, r) {
        return Err(ForcingError::OracleNotBelow);
    }
    Ok(out)
}

/// Call [`DenseOracle::refine_with_stem`] and enforce its contract.
pub fn checked_refine_with_stem<D: DenseOracle + ?Sized>(
    oracle: &D,
    r: &TCondition,
    stem: &Word3,
) -> Result<Option<TCondition>> {
    let Some(out) = oracle.refine_with_stem(r, stem) else {
        return Ok(None);
    };
    if out.stem() != stem {
        return Err(ForcingError::OracleWrongStem {
            expected: stem.to_string(),
            got: out.stem().to_string(),
        });
    }
    if !out.is_valid() || !leq(&out, r) {
        return Err(ForcingError::OracleNotBelow);
    }
    Ok(Some(out))
}

/// The oracles available from the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BuiltinOracle {
    /// Every condition is in the set.
    Identity,
    /// Conditions whose stem took 0 at a splitting level; stem-preserving
    /// variant freezes the first splitting level above the stem to 0.
    NextSplitZero,
    /// Lengthens the stem by 1 and then 2 at the next two splitting levels;
    /// never preserves a stem.
    StemLengthener,
}

impl BuiltinOracle {
    pub const ALL: [BuiltinOracle; 3] = [
        BuiltinOracle::Identity,
        BuiltinOracle::NextSplitZero,
        BuiltinOracle::StemLengthener,
    ];
}

fn through_next_split(r: &TCondition, d: Digit3) -> TCondition {
    r.restrict(&r.stem().child(d)).expect("canonical: level |stem| splits")
}

/// `r ↾ stem` when that restriction has exactly this stem.
fn restriction_with_stem(r: &TCondition, stem: &Word3) -> Option<TCondition> {
    let out = r.restrict(stem).ok()?;
    (out.stem() == stem).then_some(out)
}

impl DenseOracle for BuiltinOracle {
    fn name(&self) -> &str {
        match self {
            BuiltinOracle::Identity => "identity",
            BuiltinOracle::NextSplitZero => "next-split-0",
            BuiltinOracle::StemLengthener => "stem-lengthener",
        }
    }

    fn refine(&self, r: &TCondition) -> TCondition {
        match self {
            BuiltinOracle::Identity => r.clone(),
            BuiltinOracle::NextSplitZero => through_next_split(r, Digit3::ZERO),
            BuiltinOracle::StemLengthener => {
                through_next_split(&through_next_split(r, Digit3::ONE), Digit3::TWO)
            }
        }
    }

    fn refine_with_stem(&self, r: &TCondition, stem: &Word3) -> Option<TCondition> {
        match self {
            BuiltinOracle::Identity => restriction_with_stem(r, stem),
            BuiltinOracle::NextSplitZero => {
                let base = restriction_with_stem(r, stem)?;
                let level = base.next_split_at_or_after(stem.len() + 1).ok()?;
                let sched = base
                    .schedule()
                    .with_rule(level - stem.len(), LevelRule::F0);
                Some(TCondition::from_parts(stem.clone(), sched))
            }
            BuiltinOracle::StemLengthener => None,
        }
    }
}

impl fmt::Display for BuiltinOracle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BuiltinOracle {
    type Err = ForcingError;

    fn from_str(s: &str) -> Result<BuiltinOracle> {
        BuiltinOracle::ALL
            .into_iter()
            .find(|o| o.name() == s)
            .ok_or_else(|| ForcingError::Parse(format!("unknown oracle {s:?}")))
    }
}
