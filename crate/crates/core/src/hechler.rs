//! A Hechler-style tree poset on `ω^<ω` with the mod-2 coding.
//!
//! A condition is a stem together with an eventually constant floor; its
//! tree contains the prefixes of the stem and every extension whose entries
//! from `|stem|` on lie on or above the floor. The coded real is read off
//! digit by digit, so the alignment of this coding pair is the identity.

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::coding::{CodingPair, CodingSamples, PosetKind};
use crate::error::Result;
use crate::gen;
use crate::real::{Eventual, EventualNatSeq};
use crate::word::Word2;

/// `n ↦ table[n]` below `|table|`, and `tail` from there on.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EventualFn {
    pub table: Vec<u64>,
    pub tail: u64,
}

impl EventualFn {
    pub fn new(table: Vec<u64>, tail: u64) -> EventualFn {
        EventualFn { table, tail }
    }

    pub fn constant(value: u64) -> EventualFn {
        EventualFn::new(Vec::new(), value)
    }

    pub fn at(&self, n: usize) -> u64 {
        self.table.get(n).copied().unwrap_or(self.tail)
    }

    /// `self(n) ≥ other(n)` for every `n ≥ from`.
    pub fn dominates_from(&self, other: &EventualFn, from: usize) -> bool {
        let horizon = self.table.len().max(other.table.len());
        (from..horizon).all(|n| self.at(n) >= other.at(n)) && self.tail >= other.tail
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DCondition {
    pub stem: Vec<u64>,
    pub floor: EventualFn,
}

impl DCondition {
    pub fn new(stem: Vec<u64>, floor: EventualFn) -> DCondition {
        DCondition { stem, floor }
    }
}

pub fn d_member(p: &DCondition, t: &[u64]) -> bool {
    let k = p.stem.len().min(t.len());
    t[..k] == p.stem[..k]
        && t.iter()
            .enumerate()
            .skip(p.stem.len())
            .all(|(n, &v)| v >= p.floor.at(n))
}

pub fn d_leq(q: &DCondition, p: &DCondition) -> bool {
    q.stem.len() >= p.stem.len()
        && d_member(p, &q.stem)
        && q.floor.dominates_from(&p.floor, q.stem.len())
}

pub fn mod2_phi_star(t: &[u64]) -> Word2 {
    t.iter().map(|v| v % 2 == 1).collect()
}

/// Extend the stem by `floor(n)` or `floor(n) + 1`, whichever has parity `s`.
pub fn realize_mod2(q: &DCondition, s: &Word2) -> Vec<u64> {
    let mut out = q.stem.clone();
    for &bit in s.iter() {
        let lo = q.floor.at(out.len());
        out.push(if (lo % 2 == 1) == bit { lo } else { lo + 1 });
    }
    out
}

/// The mod-2 coding pair.
#[derive(Debug, Clone, Copy, Default)]
pub struct HechlerMod2;

impl CodingPair for HechlerMod2 {
    type Symbol = u64;
    type Condition = DCondition;

    fn kind(&self) -> PosetKind {
        PosetKind::HechlerOmega
    }

    fn phi_star(&self, t: &[u64]) -> Word2 {
        mod2_phi_star(t)
    }

    fn code_digit(&self, x: &Eventual<u64>, i: usize) -> Result<bool> {
        Ok(x.digit(i) % 2 == 1)
    }

    fn align(&self, _x: &Eventual<u64>, i: usize) -> Result<usize> {
        Ok(i)
    }

    fn stem(&self, q: &DCondition) -> Vec<u64> {
        q.stem.clone()
    }

    fn member(&self, q: &DCondition, t: &[u64]) -> bool {
        d_member(q, t)
    }

    fn realize(&self, q: &DCondition, s: &Word2) -> Result<Vec<u64>> {
        Ok(realize_mod2(q, s))
    }
}

fn random_nats<R: Rng + ?Sized>(rng: &mut R, max_len: usize, cap: u64) -> Vec<u64> {
    let len = rng.gen_range(0..=max_len);
    (0..len).map(|_| rng.gen_range(0..=cap)).collect()
}

/// A condition with stem and floor table of length at most 3 and values at
/// most `cap`.
pub fn random_d_condition<R: Rng + ?Sized>(rng: &mut R, cap: u64) -> DCondition {
    let floor = EventualFn::new(random_nats(rng, 3, cap), rng.gen_range(0..=cap));
    let mut stem = Vec::new();
    for _ in 0..rng.gen_range(0..=3) {
        stem.push(rng.gen_range(0..=cap));
    }
    DCondition::new(stem, floor)
}

/// Random samples for the mod-2 instance.
pub fn mod2_samples<R: Rng + ?Sized>(rng: &mut R, n: usize) -> CodingSamples<u64, DCondition> {
    let mut samples = CodingSamples {
        extensions: Vec::with_capacity(n),
        reals: Vec::with_capacity(n),
        targets: Vec::with_capacity(n),
    };
    for _ in 0..n {
        let t = random_nats(rng, 8, 20);
        let mut t2 = t.clone();
        t2.extend(random_nats(rng, 8, 20));
        samples.extensions.push((t, t2));
        let mut tail = random_nats(rng, 5, 20);
        if tail.is_empty() {
            tail.push(rng.gen_range(0..=20));
        }
        let x = EventualNatSeq::new(random_nats(rng, 6, 20), tail).expect("nonempty tail");
        samples.reals.push((x, rng.gen_range(0..=20)));
        samples
            .targets
            .push((random_d_condition(rng, 20), gen::random_word2(rng, 6)));
    }
    samples
}
