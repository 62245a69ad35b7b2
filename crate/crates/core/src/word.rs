//! Finite words over the ternary and binary alphabets.

use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{ForcingError, Result};

/// A digit of the alphabet `{0, 1, 2}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Digit3(u8);

impl Digit3 {
    pub const ZERO: Digit3 = Digit3(0);
    pub const ONE: Digit3 = Digit3(1);
    pub const TWO: Digit3 = Digit3(2);
    pub const ALL: [Digit3; 3] = [Digit3::ZERO, Digit3::ONE, Digit3::TWO];

    pub fn new(value: u8) -> Result<Digit3> {
        if value < 3 {
            Ok(Digit3(value))
        } else {
            Err(ForcingError::InvalidDigit(value))
        }
    }

    pub fn value(self) -> u8 {
        self.0
    }

    pub fn is_two(self) -> bool {
        self.0 == 2
    }

    pub fn is_one(self) -> bool {
        self.0 == 1
    }

    /// The digit `0` or `1` carrying the given bit.
    pub fn from_bit(bit: bool) -> Digit3 {
        if bit {
            Digit3::ONE
        } else {
            Digit3::ZERO
        }
    }

    fn from_char(c: char) -> Result<Digit3> {
        match c {
            '0' => Ok(Digit3::ZERO),
            '1' => Ok(Digit3::ONE),
            '2' => Ok(Digit3::TWO),
            other => Err(ForcingError::Parse(format!("{other:?} is not a ternary digit"))),
        }
    }
}

impl fmt::Display for Digit3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A node of `3^<ω`.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word3(Vec<Digit3>);

impl Word3 {
    pub fn new() -> Word3 {
        Word3(Vec::new())
    }

    pub fn from_digits(digits: Vec<Digit3>) -> Word3 {
        Word3(digits)
    }

    pub fn digits(&self) -> &[Digit3] {
        &self.0
    }

    pub fn into_digits(self) -> Vec<Digit3> {
        self.0
    }

    pub fn push(&mut self, d: Digit3) {
        self.0.push(d);
    }

    /// `self ⌢ d`.
    pub fn child(&self, d: Digit3) -> Word3 {
        let mut out = self.clone();
        out.push(d);
        out
    }

    pub fn prefix(&self, len: usize) -> Word3 {
        Word3(self.0[..len.min(self.0.len())].to_vec())
    }

    pub fn is_prefix_of(&self, other: &[Digit3]) -> bool {
        other.len() >= self.0.len() && other[..self.0.len()] == self.0[..]
    }

    /// Number of occurrences of the digit 2.
    pub fn count_twos(&self) -> usize {
        self.0.iter().filter(|d| d.is_two()).count()
    }
}

impl Deref for Word3 {
    type Target = [Digit3];

    fn deref(&self) -> &[Digit3] {
        &self.0
    }
}

impl From<Vec<Digit3>> for Word3 {
    fn from(v: Vec<Digit3>) -> Word3 {
        Word3(v)
    }
}

impl FromIterator<Digit3> for Word3 {
    fn from_iter<I: IntoIterator<Item = Digit3>>(iter: I) -> Word3 {
        Word3(iter.into_iter().collect())
    }
}

impl FromStr for Word3 {
    type Err = ForcingError;

    fn from_str(s: &str) -> Result<Word3> {
        s.chars().map(Digit3::from_char).collect()
    }
}

impl fmt::Display for Word3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for d in &self.0 {
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

impl Serialize for Word3 {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Word3 {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Word3, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A finite binary word, an element of `2^<ω`.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word2(Vec<bool>);

impl Word2 {
    pub fn new() -> Word2 {
        Word2(Vec::new())
    }

    pub fn from_bits(bits: Vec<bool>) -> Word2 {
        Word2(bits)
    }

    pub fn bits(&self) -> &[bool] {
        &self.0
    }

    pub fn push(&mut self, b: bool) {
        self.0.push(b);
    }

    pub fn concat(&self, other: &Word2) -> Word2 {
        let mut bits = self.0.clone();
        bits.extend_from_slice(&other.0);
        Word2(bits)
    }

    pub fn is_prefix_of(&self, other: &Word2) -> bool {
        other.0.len() >= self.0.len() && other.0[..self.0.len()] == self.0[..]
    }

    pub fn prefix(&self, len: usize) -> Word2 {
        Word2(self.0[..len.min(self.0.len())].to_vec())
    }

    /// The word `0^zeros ⌢ 1`.
    pub fn zeros_then_one(zeros: usize) -> Word2 {
        let mut bits = vec![false; zeros];
        bits.push(true);
        Word2(bits)
    }
}

impl Deref for Word2 {
    type Target = [bool];

    fn deref(&self) -> &[bool] {
        &self.0
    }
}

impl FromIterator<bool> for Word2 {
    fn from_iter<I: IntoIterator<Item = bool>>(iter: I) -> Word2 {
        Word2(iter.into_iter().collect())
    }
}

impl FromStr for Word2 {
    type Err = ForcingError;

    fn from_str(s: &str) -> Result<Word2> {
        s.chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(ForcingError::Parse(format!("{other:?} is not a bit"))),
            })
            .collect()
    }
}

impl fmt::Display for Word2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.0 {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl Serialize for Word2 {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Word2 {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Word2, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn digit_range() {
        assert!(Digit3::new(2).is_ok());
        assert_eq!(Digit3::new(3), Err(ForcingError::InvalidDigit(3)));
    }

    #[test]
    fn word3_parse_and_display() {
        let w: Word3 = "0212".parse().unwrap();
        assert_eq!(w.len(), 4);
        assert_eq!(w.count_twos(), 2);
        assert_eq!(w.to_string(), "0212");
        assert!("03".parse::<Word3>().is_err());
    }

    #[test]
    fn word3_prefix_relation() {
        let a: Word3 = "02".parse().unwrap();
        let b: Word3 = "021".parse().unwrap();
        assert!(a.is_prefix_of(&b));
        assert!(!b.is_prefix_of(&a));
        assert!(Word3::new().is_prefix_of(&a));
    }

    #[test]
    fn word2_json_is_a_string() {
        let w: Word2 = "0110".parse().unwrap();
        assert_eq!(serde_json::to_string(&w).unwrap(), "\"0110\"");
        let back: Word2 = serde_json::from_str("\"0110\"").unwrap();
        assert_eq!(back, w);
        assert!(serde_json::from_str::<Word2>("\"012\"").is_err());
    }
}
