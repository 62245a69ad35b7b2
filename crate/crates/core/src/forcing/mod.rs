//! Forcing-theoretic constructions: Cohen extension, the failure of pure
//! decision, dense-set oracles and the fusion drivers.

mod cohen;
mod fusion;
mod oracle;

pub use cohen::{
    cohen_round, decided_cohen_prefix, extend_for_cohen, refute_pure_decision, CohenRound,
    DecisionPair,
};
pub use fusion::{
    axiom_a_refine, graft_one, quasi_pure_refine, AxiomAOutcome, QuasiPureOutcome, StemWitness,
};
pub use oracle::{checked_refine, checked_refine_with_stem, BuiltinOracle, DenseOracle};
