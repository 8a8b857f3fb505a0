//! The [`Word`] value type: a finite sequence of symbols from `0..=9`.
//!
//! Words are written and parsed as digit strings, so `"0120"` is the word
//! with symbols `[0, 1, 2, 0]`. Most algorithms in this crate operate on
//! plain `&[u8]` slices; `Word` derefs to one.

use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest alphabet a [`Word`] can carry.
pub const MAX_ALPHABET: u8 = 10;

#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<u8>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn from_symbols(symbols: impl Into<Vec<u8>>) -> Result<Self> {
        let symbols = symbols.into();
        if let Some(&bad) = symbols.iter().find(|&&s| s >= MAX_ALPHABET) {
            return Err(Error::SymbolOutOfRange(bad));
        }
        Ok(Word(symbols))
    }

    /// Builds a word from symbols already known to be `< 10`.
    pub(crate) fn from_vec_unchecked(symbols: Vec<u8>) -> Self {
        debug_assert!(symbols.iter().all(|&s| s < MAX_ALPHABET));
        Word(symbols)
    }

    pub fn symbols(&self) -> &[u8] {
        &self.0
    }

    pub fn into_symbols(self) -> Vec<u8> {
        self.0
    }

    /// Number of distinct symbols needed to write the word: `1 + max symbol`.
    pub fn alphabet_bound(&self) -> u8 {
        self.0.iter().max().map_or(0, |&m| m + 1)
    }

    pub fn is_binary(&self) -> bool {
        is_binary(&self.0)
    }
}

pub(crate) fn is_binary(w: &[u8]) -> bool {
    w.iter().all(|&s| s < 2)
}

pub(crate) fn require_binary(w: &[u8]) -> Result<()> {
    if is_binary(w) {
        Ok(())
    } else {
        Err(Error::NonBinary)
    }
}

pub(crate) fn require_nonempty(w: &[u8]) -> Result<()> {
    if w.is_empty() {
        Err(Error::EmptyWord)
    } else {
        Ok(())
    }
}

/// Renders a symbol slice as a digit string.
pub fn render(w: &[u8]) -> String {
    w.iter().map(|&s| char::from(b'0' + s)).collect()
}

impl Deref for Word {
    type Target = [u8];

    fn deref(&self) -> &[u8] {
        &self.0
    }
}

impl AsRef<[u8]> for Word {
    fn as_ref(&self) -> &[u8] {
        &self.0
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| match c.to_digit(10) {
                Some(d) => Ok(d as u8),
                None => Err(Error::InvalidSymbol(c)),
            })
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }
}

impl TryFrom<&[u8]> for Word {
    type Error = Error;

    fn try_from(symbols: &[u8]) -> Result<Self> {
        Word::from_symbols(symbols.to_vec())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render(&self.0))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({})", render(&self.0))
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&render(&self.0))
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Parses a digit string, panicking on malformed input. Intended for
/// literals in tests and examples.
pub fn w(s: &str) -> Word {
    s.parse().unwrap_or_else(|e| panic!("bad word literal {s:?}: {e}"))
}

/// All words of length `n` over `0..k`, in lexicographic order.
pub fn all_words(k: u8, n: usize) -> impl Iterator<Item = Vec<u8>> {
    let total = (k as u64).checked_pow(n as u32).expect("word space too large");
    (0..total).map(move |mut idx| {
        let mut out = vec![0u8; n];
        for slot in out.iter_mut().rev() {
            *slot = (idx % k as u64) as u8;
            idx /= k as u64;
        }
        out
    })
}

/// Decodes the `idx`-th binary word of length `n` (most significant bit first).
pub fn binary_word(idx: u64, n: usize) -> Vec<u8> {
    (0..n).map(|i| ((idx >> (n - 1 - i)) & 1) as u8).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_render() {
        let x: Word = "0120".parse().unwrap();
        assert_eq!(x.symbols(), &[0, 1, 2, 0]);
        assert_eq!(x.to_string(), "0120");
        assert_eq!(Word::empty().to_string(), "");
        assert_eq!("01a".parse::<Word>(), Err(Error::InvalidSymbol('a')));
    }

    #[test]
    fn symbol_range_enforced() {
        assert_eq!(Word::from_symbols(vec![0, 10]), Err(Error::SymbolOutOfRange(10)));
        assert!(Word::from_symbols(vec![9, 0]).is_ok());
    }

    #[test]
    fn serde_uses_digit_strings() {
        let x = w("3443");
        let json = serde_json::to_string(&x).unwrap();
        assert_eq!(json, "\"3443\"");
        assert_eq!(serde_json::from_str::<Word>(&json).unwrap(), x);
    }

    #[test]
    fn word_enumeration() {
        let words: Vec<_> = all_words(2, 2).collect();
        assert_eq!(words, vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]);
        assert_eq!(all_words(3, 0).count(), 1);
        assert_eq!(binary_word(0b011, 3), vec![0, 1, 1]);
    }
}
