//! The correspondence between `H` and strictly increasing sequences.
//!
//! A real in `H` is cut at its 2s into binary segments `σ_0, σ_1, ...`
//! (`σ_0` before the first 2, `σ_{j+1}` strictly between the `(j+1)`-th and
//! `(j+2)`-th 2). Segment words are numbered by the length-lexicographic
//! enumeration `b`, and the sequence `⟨Σ_{i≤n} b(σ_i) + n⟩` is strictly
//! increasing. This module works on finite prefixes ending in a 2.

use crate::error::{ForcingError, Result};
use crate::word::{Digit3, Word2, Word3};

/// Length-lexicographic index of a binary word: the value of `1 ⌢ s` in
/// binary, minus one. `b(⟨⟩) = 0`, `b(0) = 1`, `b(1) = 2`, `b(00) = 3`.
pub fn iso_b(s: &Word2) -> Result<u64> {
    if s.len() > 63 {
        return Err(ForcingError::WordTooLong(s.len()));
    }
    let value = s.iter().fold(1u64, |acc, &bit| (acc << 1) | bit as u64);
    Ok(value - 1)
}

pub fn iso_b_inv(n: u64) -> Word2 {
    let m = n as u128 + 1;
    let width = 128 - m.leading_zeros() as usize - 1;
    (0..width).rev().map(|i| (m >> i) & 1 == 1).collect()
}

/// Image of the cylinder determined by `x` (which ends in 2): one entry per 2.
pub fn iso_phi_prefix(x: &Word3) -> Result<Vec<u64>> {
    if x.count_twos() == 0 {
        return Err(ForcingError::NoTwo);
    }
    if !x.last().is_some_and(|d| d.is_two()) {
        return Err(ForcingError::NotEndingInTwo);
    }
    let mut out = Vec::with_capacity(x.count_twos());
    let mut running: u64 = 0;
    for (n, segment) in x[..x.len() - 1].split(|d| d.is_two()).enumerate() {
        let word: Word2 = segment.iter().map(|d| d.is_one()).collect();
        let b = iso_b(&word)?;
        running = running.checked_add(b).ok_or(ForcingError::Overflow(b))?;
        let entry = if n == 0 {
            running
        } else {
            running.checked_add(n as u64).ok_or(ForcingError::Overflow(running))?
        };
        out.push(entry);
    }
    Ok(out)
}

/// Inverse of [`iso_phi_prefix`] on strictly increasing sequences.
pub fn iso_phi_inv(s: &[u64]) -> Result<Word3> {
    let mut out = Word3::new();
    for (n, &entry) in s.iter().enumerate() {
        let b = if n == 0 {
            entry
        } else {
            let prev = s[n - 1];
            if entry <= prev {
                return Err(ForcingError::NotIncreasing(n));
            }
            entry - prev - 1
        };
        for bit in iso_b_inv(b).iter() {
            out.push(Digit3::from_bit(*bit));
        }
        out.push(Digit3::TWO);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(s: &str) -> Word2 {
        s.parse().unwrap()
    }

    fn w(s: &str) -> Word3 {
        s.parse().unwrap()
    }

    #[test]
    fn enumeration_values() {
        assert_eq!(iso_b(&b("")).unwrap(), 0);
        assert_eq!(iso_b(&b("0")).unwrap(), 1);
        assert_eq!(iso_b(&b("1")).unwrap(), 2);
        assert_eq!(iso_b(&b("00")).unwrap(), 3);
        assert_eq!(iso_b(&b("11")).unwrap(), 6);
        assert_eq!(iso_b_inv(0), b(""));
        assert_eq!(iso_b_inv(6), b("11"));
        assert!(iso_b(&Word2::from_bits(vec![true; 64])).is_err());
        assert_eq!(iso_b_inv(u64::MAX).len(), 64);
    }

    #[test]
    fn phi_examples() {
        assert_eq!(iso_phi_prefix(&w("2")).unwrap(), vec![0]);
        assert_eq!(iso_phi_prefix(&w("222")).unwrap(), vec![0, 1, 2]);
        assert_eq!(iso_phi_prefix(&w("1202")).unwrap(), vec![2, 4]);
        assert_eq!(iso_phi_prefix(&w("0110")), Err(ForcingError::NoTwo));
        assert_eq!(iso_phi_prefix(&w("0210")), Err(ForcingError::NotEndingInTwo));
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(iso_phi_inv(&[0]).unwrap(), w("2"));
        assert_eq!(iso_phi_inv(&[0, 1, 2]).unwrap(), w("222"));
        assert_eq!(iso_phi_inv(&[2, 4]).unwrap(), w("1202"));
        assert_eq!(iso_phi_inv(&[3, 3]), Err(ForcingError::NotIncreasing(1)));
    }
}
