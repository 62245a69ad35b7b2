//! Finite, exact representations of a Mathias-style tree forcing on
//! `3^<ω`: conditions given by a stem and an eventually periodic level
//! schedule, their order and meets, the block-parity coding into binary
//! reals, fusion drivers, witnesses for the associated nowhere dense sets,
//! and a second coding-pair instance on a Hechler-style poset.

pub mod coding;
pub mod error;
pub mod forcing;
pub mod gen;
pub mod hechler;
pub mod ideals;
pub mod real;
pub mod tree;
pub mod word;

pub use error::{ForcingError, Result};
pub use real::{BranchSelector, Eventual, EventualNatSeq, EventualReal};
pub use tree::{Incompatible, LevelRule, LevelSchedule, TCondition};
pub use word::{Digit3, Word2, Word3};
