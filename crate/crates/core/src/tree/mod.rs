//! Conditions of the ternary tree forcing and their order structure.

mod antichain;
mod branch;
mod condition;
mod order;
mod schedule;

pub use antichain::{build_antichain_condition, OddPredicate};
pub use branch::branch;
pub(crate) use branch::unroll;
pub use condition::{SplitLevels, TCondition, Validation, Violation, DEFAULT_ORACLE_DEPTH};
pub use order::{equivalent, leq, leq_n, meet, Incompatible};
pub use schedule::{LevelRule, LevelSchedule};
