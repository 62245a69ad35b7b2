//! The `(φ, φ*)` coding-pair contract and a sample-based checker for it.
//!
//! A coding pair for a tree forcing consists of a continuous coding map `φ`
//! from branches to binary reals together with its finite approximation
//! `φ*` on nodes. Three laws are checked on samples:
//!
//! * monotonicity: `t ⊆ t'` implies `φ*(t) ⊆ φ*(t')`;
//! * alignment: for each real `x` and `i`, `φ*(x ↾ align(x, i))` has
//!   length at least `i` and agrees with `φ(x) ↾ i`;
//! * realizability: below every condition `q`, every binary word `s` is
//!   coded by some node `σ ∈ q` with `φ*(σ) ⊇ φ*(stem(q)) ⌢ s`.

use std::fmt::Debug;

use rand::Rng;
use serde::Serialize;

use super::parity::{parity_digit, phi_star_t, realize_t, t_alignment};
use crate::error::Result;
use crate::gen::{self, GenParams};
use crate::real::Eventual;
use crate::tree::TCondition;
use crate::word::{Digit3, Word2};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum PosetKind {
    T,
    HechlerOmega,
}

pub trait CodingPair {
    type Symbol: Copy + PartialEq + Debug;
    type Condition: Clone + Debug;

    fn kind(&self) -> PosetKind;
    fn phi_star(&self, t: &[Self::Symbol]) -> Word2;
    /// Digit `i` of `φ(x)`.
    fn code_digit(&self, x: &Eventual<Self::Symbol>, i: usize) -> Result<bool>;
    /// A prefix length of `x` after which the first `i` code digits are settled.
    fn align(&self, x: &Eventual<Self::Symbol>, i: usize) -> Result<usize>;
    fn stem(&self, q: &Self::Condition) -> Vec<Self::Symbol>;
    fn member(&self, q: &Self::Condition, t: &[Self::Symbol]) -> bool;
    fn realize(&self, q: &Self::Condition, s: &Word2) -> Result<Vec<Self::Symbol>>;
}

/// The parity coding of the ternary tree forcing.
#[derive(Debug, Clone, Copy, Default)]
pub struct TParity;

impl CodingPair for TParity {
    type Symbol = Digit3;
    type Condition = TCondition;

    fn kind(&self) -> PosetKind {
        PosetKind::T
    }

    fn phi_star(&self, t: &[Digit3]) -> Word2 {
        phi_star_t(t)
    }

    fn code_digit(&self, x: &Eventual<Digit3>, i: usize) -> Result<bool> {
        parity_digit(x, i)
    }

    fn align(&self, x: &Eventual<Digit3>, i: usize) -> Result<usize> {
        t_alignment(x, i)
    }

    fn stem(&self, q: &TCondition) -> Vec<Digit3> {
        q.stem().to_vec()
    }

    fn member(&self, q: &TCondition, t: &[Digit3]) -> bool {
        q.member(t)
    }

    fn realize(&self, q: &TCondition, s: &Word2) -> Result<Vec<Digit3>> {
        realize_t(q, s).map(|w| w.into_digits())
    }
}

/// Sample inputs for [`check_coding_pair`].
#[derive(Debug, Clone)]
pub struct CodingSamples<S, C> {
    /// Pairs `(t, t')` with `t ⊆ t'`.
    pub extensions: Vec<(Vec<S>, Vec<S>)>,
    pub reals: Vec<(Eventual<S>, usize)>,
    pub targets: Vec<(C, Word2)>,
}

impl<S, C> CodingSamples<S, C> {
    pub fn len(&self) -> usize {
        self.extensions.len().max(self.reals.len()).max(self.targets.len())
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Law {
    Monotonicity,
    Alignment,
    Realizability,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub law: Law,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct CodingReport {
    pub kind: PosetKind,
    pub samples: usize,
    pub counterexamples: Vec<Counterexample>,
}

impl CodingReport {
    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }

    pub fn violates(&self, law: Law) -> bool {
        self.counterexamples.iter().any(|c| c.law == law)
    }
}

pub fn check_coding_pair<P: CodingPair>(
    cp: &P,
    samples: &CodingSamples<P::Symbol, P::Condition>,
) -> CodingReport {
    let mut counterexamples = Vec::new();
    let mut fail = |law, detail: String| counterexamples.push(Counterexample { law, detail });

    for (t, t2) in &samples.extensions {
        if t2.len() < t.len() || t2[..t.len()] != t[..] {
            continue;
        }
        let (a, b) = (cp.phi_star(t), cp.phi_star(t2));
        if !a.is_prefix_of(&b) {
            fail(Law::Monotonicity, format!("{t:?} ⊆ {t2:?} but φ* gives {a} and {b}"));
        }
    }

    for (x, i) in &samples.reals {
        let outcome = cp.align(x, *i).and_then(|n| {
            let coded = cp.phi_star(&x.take(n));
            let direct = (0..*i)
                .map(|k| cp.code_digit(x, k))
                .collect::<Result<Word2>>()?;
            Ok((n, coded, direct))
        });
        match outcome {
            Err(e) => fail(Law::Alignment, format!("{x:?}, i = {i}: {e}")),
            Ok((n, coded, direct)) => {
                if coded.len() < *i || coded.prefix(*i) != direct {
                    fail(
                        Law::Alignment,
                        format!("{x:?}, i = {i}: φ*(x ↾ {n}) = {coded}, φ(x) ↾ i = {direct}"),
                    );
                }
            }
        }
    }

    for (q, s) in &samples.targets {
        let stem = cp.stem(q);
        match cp.realize(q, s) {
            Err(e) => fail(Law::Realizability, format!("{q:?}, s = {s}: {e}")),
            Ok(sigma) => {
                let want = cp.phi_star(&stem).concat(s);
                let got = cp.phi_star(&sigma);
                let extends_stem = sigma.len() >= stem.len() && sigma[..stem.len()] == stem[..];
                if !cp.member(q, &sigma) || !extends_stem || !want.is_prefix_of(&got) {
                    fail(
                        Law::Realizability,
                        format!("{q:?}, s = {s}: σ = {sigma:?} codes {got}, wanted ⊇ {want}"),
                    );
                }
            }
        }
    }

    CodingReport {
        kind: cp.kind(),
        samples: samples.len(),
        counterexamples,
    }
}

/// Deliberate corruptions used to confirm the checker has teeth.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mutation {
    /// `φ*` drops its last bit.
    TruncatedPhiStar,
    /// `align` returns one level too early.
    ShiftedAlignment,
    /// The realizer aims for the complemented word.
    FlippedRealizer,
}

#[derive(Debug, Clone)]
pub struct Mutated<P> {
    pub inner: P,
    pub mutation: Mutation,
}

impl<P: CodingPair> CodingPair for Mutated<P> {
    type Symbol = P::Symbol;
    type Condition = P::Condition;

    fn kind(&self) -> PosetKind {
        self.inner.kind()
    }

    fn phi_star(&self, t: &[P::Symbol]) -> Word2 {
        let w = self.inner.phi_star(t);
        match self.mutation {
            Mutation::TruncatedPhiStar => w.prefix(w.len().saturating_sub(1)),
            _ => w,
        }
    }

    fn code_digit(&self, x: &Eventual<P::Symbol>, i: usize) -> Result<bool> {
        self.inner.code_digit(x, i)
    }

    fn align(&self, x: &Eventual<P::Symbol>, i: usize) -> Result<usize> {
        let n = self.inner.align(x, i)?;
        Ok(match self.mutation {
            Mutation::ShiftedAlignment => n.saturating_sub(1),
            _ => n,
        })
    }

    fn stem(&self, q: &P::Condition) -> Vec<P::Symbol> {
        self.inner.stem(q)
    }

    fn member(&self, q: &P::Condition, t: &[P::Symbol]) -> bool {
        self.inner.member(q, t)
    }

    fn realize(&self, q: &P::Condition, s: &Word2) -> Result<Vec<P::Symbol>> {
        match self.mutation {
            Mutation::FlippedRealizer => {
                let flipped: Word2 = s.iter().map(|&b| !b).collect();
                self.inner.realize(q, &flipped)
            }
            _ => self.inner.realize(q, s),
        }
    }
}

/// Random samples for the parity instance: strict conditions, reals in `H`
/// and prefix pairs of ternary words.
pub fn t_parity_samples<R: Rng + ?Sized>(
    rng: &mut R,
    n: usize,
) -> CodingSamples<Digit3, TCondition> {
    let params = GenParams::strict();
    let mut samples = CodingSamples {
        extensions: Vec::with_capacity(n),
        reals: Vec::with_capacity(n),
        targets: Vec::with_capacity(n),
    };
    for _ in 0..n {
        let t = gen::random_word3(rng, 12);
        let mut t2 = t.clone();
        for d in gen::random_word3(rng, 12).iter() {
            t2.push(*d);
        }
        samples.extensions.push((t.into_digits(), t2.into_digits()));
        samples
            .reals
            .push((gen::random_real_in_h(rng, 6, 6), rng.gen_range(0..=20)));
        samples
            .targets
            .push((gen::random_condition(rng, &params), gen::random_word2(rng, 6)));
    }
    samples
}
