//! Parity coding of the ternary forcing into binary reals, the coding-pair
//! contract, and the correspondence between `H` and increasing sequences.

mod iso;
mod pair;
mod parity;

pub use iso::{iso_b, iso_b_inv, iso_phi_inv, iso_phi_prefix};
pub use pair::{
    check_coding_pair, t_parity_samples, CodingPair, CodingReport, CodingSamples, Counterexample,
    Law, Mutated, Mutation, PosetKind, TParity,
};
pub(crate) use parity::parity_round_nodes;
pub use parity::{
    check_alignment, open_block_parity, parity_digit, parity_tail_analysis, phi_star_t,
    realize_t, t_alignment, two_position, ParityAnalysis,
};
