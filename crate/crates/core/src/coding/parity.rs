//! Block-parity coding of ternary reals into binary ones.
//!
//! For `z ∈ H` let `σ_z(k)` be the position of the `(k+1)`-th digit 2
//! (0-indexed). Digit `k` of the coded real `c_z` is the parity of the 1s in
//! `[σ_z(k), σ_z(k+1))`. Position `σ_z(k)` holds a 2, so this is also the
//! parity of the 1s strictly between the two 2s, which is what the finite
//! map [`phi_star_t`] counts.

use std::collections::{HashSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{ForcingError, Result};
use crate::real::EventualReal;
use crate::tree::{LevelRule, TCondition};
use crate::word::{Digit3, Word2, Word3};

/// `c_z` as a transient part followed by a repeated period.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParityAnalysis {
    pub transient: Word2,
    pub period: Word2,
}

impl ParityAnalysis {
    pub fn digit(&self, k: usize) -> bool {
        if k < self.transient.len() {
            self.transient[k]
        } else {
            self.period[(k - self.transient.len()) % self.period.len()]
        }
    }

    /// Every digit at index `≥ n` is 0.
    pub fn zero_from(&self, n: usize) -> bool {
        self.transient.iter().skip(n).all(|&b| !b) && self.period.iter().all(|&b| !b)
    }
}

fn require_h(z: &EventualReal) -> Result<()> {
    if z.in_h() {
        Ok(())
    } else {
        Err(ForcingError::NotInH)
    }
}

fn two_offsets(word: &[Digit3]) -> Vec<usize> {
    word.iter()
        .enumerate()
        .filter_map(|(i, d)| d.is_two().then_some(i))
        .collect()
}

/// `σ_z(k)`: position of the `(k+1)`-th digit 2 of `z`.
pub fn two_position(z: &EventualReal, k: usize) -> Result<usize> {
    require_h(z)?;
    let in_prefix = two_offsets(z.prefix());
    if k < in_prefix.len() {
        return Ok(in_prefix[k]);
    }
    let in_tail = two_offsets(z.tail());
    let rest = k - in_prefix.len();
    Ok(z.prefix().len() + (rest / in_tail.len()) * z.tail().len() + in_tail[rest % in_tail.len()])
}

/// `c_z(k)`: `true` when the block after the `(k+1)`-th 2 holds an odd number of 1s.
pub fn parity_digit(z: &EventualReal, k: usize) -> Result<bool> {
    let start = two_position(z, k)?;
    let end = two_position(z, k + 1)?;
    let ones = (start..end).filter(|&i| z.digit(i).is_one()).count();
    Ok(ones % 2 == 1)
}

/// Eventually periodic description of `c_z`.
///
/// Once a block starts inside the periodic tail of `z`, its contents depend
/// only on which 2 of the tail word opens it, so the blocks opened by the
/// tail's 2s repeat with period equal to their number.
pub fn parity_tail_analysis(z: &EventualReal) -> Result<ParityAnalysis> {
    require_h(z)?;
    let c = z.prefix().iter().filter(|d| d.is_two()).count();
    let m = z.tail().iter().filter(|d| d.is_two()).count();
    let transient = (0..c).map(|k| parity_digit(z, k)).collect::<Result<Word2>>()?;
    let period = (c..c + m).map(|k| parity_digit(z, k)).collect::<Result<Word2>>()?;
    Ok(ParityAnalysis { transient, period })
}

/// `φ*`: bit `i` is the parity of the 1s strictly between the `(i+1)`-th
/// and `(i+2)`-th occurrence of 2 in `t`.
pub fn phi_star_t(t: &[Digit3]) -> Word2 {
    let mut out = Word2::new();
    let mut open = false;
    let mut parity = false;
    for d in t {
        if d.is_two() {
            if open {
                out.push(parity);
            }
            open = true;
            parity = false;
        } else if d.is_one() {
            parity = !parity;
        }
    }
    out
}

/// Parity of the 1s after the last 2 of `t`; `None` when `t` has no 2.
pub fn open_block_parity(t: &[Digit3]) -> Option<bool> {
    let last = t.iter().rposition(|d| d.is_two())?;
    Some(t[last + 1..].iter().filter(|d| d.is_one()).count() % 2 == 1)
}

/// Length of the prefix of `z` that settles the first `i` coded digits:
/// everything up to and including the `(i+1)`-th 2.
pub fn t_alignment(z: &EventualReal, i: usize) -> Result<usize> {
    Ok(two_position(z, i)? + 1)
}

/// `φ*(z ↾ n_i)` equals the first `i` digits of `c_z`.
pub fn check_alignment(z: &EventualReal, i: usize) -> Result<bool> {
    let n = t_alignment(z, i)?;
    let coded = phi_star_t(&z.take(n));
    let direct = (0..i).map(|k| parity_digit(z, k)).collect::<Result<Word2>>()?;
    Ok(coded == direct)
}

/// Candidate nodes for one parity round above `sigma`, a member of `q` that
/// ends a block: take the next two splitting levels `n0 < n1`, put `i` at
/// `n0` and 2 at `n1`. Returns `(t_0, parity_0), (t_1, parity_1)` where
/// `parity_i` is the parity of the block closed by that 2.
pub(crate) fn parity_round_nodes(q: &TCondition, sigma: &Word3) -> Result<[(Word3, bool); 2]> {
    let n0 = q.next_split_at_or_after(sigma.len())?;
    let n1 = q.next_split_at_or_after(n0 + 1)?;
    let base = q.extend_node(sigma, n0, Digit3::ZERO);
    let build = |i: Digit3| {
        let t = q.extend_node(&base.child(i), n1, Digit3::ZERO).child(Digit3::TWO);
        let parity = open_block_parity(&t[..n1]).unwrap_or(false);
        (t, parity)
    };
    Ok([build(Digit3::ZERO), build(Digit3::ONE)])
}

/// A node of `q` extending its stem whose code is `φ*(stem(q)) ⌢ s`.
///
/// Strict conditions use the two-splitting-levels construction per bit.
/// Conditions with forced 2s fall back to an exhaustive search over the
/// finitely many (schedule phase, block state, bits matched) states.
pub fn realize_t(q: &TCondition, s: &Word2) -> Result<Word3> {
    q.require_valid(false)?;
    if s.is_empty() {
        return Ok(q.stem().clone());
    }
    if !q.is_strict() {
        return realize_by_search(q, s);
    }
    let mut sigma = q.stem().clone();
    if open_block_parity(&sigma).is_none() {
        let level = q.next_split_at_or_after(sigma.len())?;
        sigma = q.extend_node(&sigma, level, Digit3::ZERO).child(Digit3::TWO);
    }
    for &bit in s.iter() {
        let [(t0, p0), (t1, p1)] = parity_round_nodes(q, &sigma)?;
        debug_assert_ne!(p0, p1);
        sigma = if p0 == bit { t0 } else { t1 };
    }
    Ok(sigma)
}

fn realize_by_search(q: &TCondition, s: &Word2) -> Result<Word3> {
    #[derive(Clone, Copy, PartialEq, Eq, Hash)]
    struct State {
        phase: usize,
        open: bool,
        parity: bool,
        matched: usize,
    }
    let horizon = q.horizon();
    let phase = |level: usize| {
        if level < horizon {
            level
        } else {
            horizon + (level - horizon) % q.period()
        }
    };
    let stem = q.stem();
    let start = State {
        phase: phase(stem.len()),
        open: open_block_parity(stem).is_some(),
        parity: open_block_parity(stem).unwrap_or(false),
        matched: 0,
    };
    let mut seen = HashSet::from([start]);
    let mut queue = VecDeque::from([(stem.clone(), start)]);
    while let Some((node, state)) = queue.pop_front() {
        let level = node.len();
        let fixed;
        let digits: &[Digit3] = match q.rule(level).expect("level above stem") {
            LevelRule::Split => &Digit3::ALL,
            LevelRule::Fixed(b) => {
                fixed = [b];
                &fixed
            }
        };
        for &d in digits {
            let mut next = State {
                phase: phase(level + 1),
                ..state
            };
            if d.is_two() {
                if state.open {
                    if s[state.matched] != state.parity {
                        continue;
                    }
                    next.matched += 1;
                }
                next.open = true;
                next.parity = false;
            } else if d.is_one() {
                next.parity = !next.parity;
            }
            let child = node.child(d);
            if next.matched == s.len() {
                return Ok(child);
            }
            if seen.insert(next) {
                queue.push_back((child, next));
            }
        }
    }
    Err(ForcingError::Unrealizable)
}
