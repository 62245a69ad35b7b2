//! Naive reference implementations, written directly from the definitions
//! and independent of the library's own membership and enumeration code.

#![allow(dead_code)]

use std::collections::BTreeSet;

use tforce::{Digit3, EventualReal, LevelRule, TCondition, Word2, Word3};

/// Allowed digits at `level`, read straight off the stored table and tail.
pub fn allowed(p: &TCondition, level: usize) -> Vec<Digit3> {
    let stem = p.stem();
    if level < stem.len() {
        return vec![stem[level]];
    }
    let offset = level - stem.len();
    let table = p.schedule().table();
    let tail = p.schedule().tail();
    let rule = if offset < table.len() {
        table[offset]
    } else {
        tail[(offset - table.len()) % tail.len()]
    };
    match rule {
        LevelRule::Split => Digit3::ALL.to_vec(),
        LevelRule::Fixed(d) => vec![d],
    }
}

/// All words of length `d` in the tree, grown level by level.
pub fn nodes(p: &TCondition, d: usize) -> BTreeSet<Vec<Digit3>> {
    let mut layer: Vec<Vec<Digit3>> = vec![Vec::new()];
    for level in 0..d {
        let digits = allowed(p, level);
        layer = layer
            .into_iter()
            .flat_map(|t| {
                digits.iter().map(move |&x| {
                    let mut u = t.clone();
                    u.push(x);
                    u
                })
            })
            .collect();
    }
    layer.into_iter().collect()
}

pub fn naive_member(p: &TCondition, t: &[Digit3]) -> bool {
    t.iter().enumerate().all(|(l, d)| allowed(p, l).contains(d))
}

/// Node-set inclusion at every length up to `depth`.
pub fn included(q: &TCondition, p: &TCondition, depth: usize) -> bool {
    nodes(q, depth).iter().all(|t| naive_member(p, t))
}

/// Bit `i` is the parity of the 1s between the `(i+1)`-th and `(i+2)`-th 2.
pub fn naive_phi(t: &[Digit3]) -> Word2 {
    let twos: Vec<usize> = (0..t.len()).filter(|&i| t[i].is_two()).collect();
    twos.windows(2)
        .map(|w| t[w[0] + 1..w[1]].iter().filter(|d| d.is_one()).count() % 2 == 1)
        .collect()
}

/// The first `k` code digits of `z`, by expanding `z` until it shows `k + 1`
/// twos.
pub fn naive_code(z: &EventualReal, k: usize) -> Word2 {
    let mut len = z.prefix().len() + z.tail().len();
    loop {
        let t = z.take(len);
        if t.iter().filter(|d| d.is_two()).count() > k {
            return naive_phi(&t).prefix(k);
        }
        len *= 2;
    }
}

pub fn word(s: &str) -> Word3 {
    s.parse().unwrap()
}

/// All binary words of length at most `n`, in length-lexicographic order.
pub fn binary_words(n: usize) -> Vec<Word2> {
    let mut out = vec![Word2::new()];
    let mut layer = vec![Word2::new()];
    for _ in 0..n {
        layer = layer
            .iter()
            .flat_map(|w| {
                [false, true].map(|b| {
                    let mut u = w.clone();
                    u.push(b);
                    u
                })
            })
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}
