//! Borders, periods, fractional roots, symmetric words and the
//! palindromic-periodicity decision.
//!
//! A word `x` is a palindromic periodicity when there are palindromes `p`
//! and `s` with `|x| >= |ps|` and `x` a prefix of `(ps)^ω`. Equivalently,
//! `x` has a period whose prefix factors as two palindromes, which is how
//! [`is_pal_periodicity`] decides it.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::palindrome::PalindromeOracle;
use crate::word::{require_nonempty, Word};

pub fn reverse(w: &[u8]) -> Word {
    Word::from_vec_unchecked(w.iter().rev().copied().collect())
}

pub fn is_palindrome(w: &[u8]) -> bool {
    w.iter().eq(w.iter().rev())
}

/// Failure function of a word: the longest proper border of every prefix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BorderTable {
    border: Vec<usize>,
}

impl BorderTable {
    pub fn new(w: &[u8]) -> Self {
        let n = w.len();
        let mut border = vec![0usize; n + 1];
        let mut k = 0usize;
        for i in 1..n {
            while k > 0 && w[i] != w[k] {
                k = border[k];
            }
            if w[i] == w[k] {
                k += 1;
            }
            border[i + 1] = k;
        }
        BorderTable { border }
    }

    /// Length of the word the table was built from.
    pub fn word_len(&self) -> usize {
        self.border.len() - 1
    }

    /// Longest proper border of the prefix of length `len`.
    pub fn longest(&self, len: usize) -> usize {
        self.border[len]
    }

    /// Lengths of all borders of the whole word (including the empty one),
    /// longest first.
    pub fn borders(&self) -> impl Iterator<Item = usize> + '_ {
        let n = self.word_len();
        let mut next = Some(self.border[n]);
        std::iter::from_fn(move || {
            let b = next?;
            next = if b == 0 { None } else { Some(self.border[b]) };
            Some(b)
        })
        .filter(move |_| n > 0)
    }

    /// All periods of the whole word, ascending.
    pub fn periods(&self) -> impl Iterator<Item = usize> + '_ {
        let n = self.word_len();
        self.borders().map(move |b| n - b)
    }
}

pub fn border_table(w: &[u8]) -> BorderTable {
    BorderTable::new(w)
}

/// All periods of `w` in ascending order; always ends with `|w|`.
pub fn periods(w: &[u8]) -> Result<Vec<usize>> {
    require_nonempty(w)?;
    Ok(BorderTable::new(w).periods().collect())
}

/// Smallest period of `w`.
pub fn smallest_period(w: &[u8]) -> Result<usize> {
    require_nonempty(w)?;
    Ok(w.len() - BorderTable::new(w).longest(w.len()))
}

/// The shortest word-period of `w`.
pub fn fractional_root(w: &[u8]) -> Result<Word> {
    let p = smallest_period(w)?;
    Ok(Word::from_vec_unchecked(w[..p].to_vec()))
}

/// Whether `w` is not a proper integer power `u^k`, `k >= 2`.
pub fn is_primitive(w: &[u8]) -> Result<bool> {
    let p = smallest_period(w)?;
    Ok(p == w.len() || w.len() % p != 0)
}

/// Smallest split `m` such that `w[..m]` and `w[m..]` are both palindromes.
pub fn is_symmetric(w: &[u8]) -> Option<usize> {
    PalindromeOracle::new(w).symmetric_split(0, w.len())
}

/// The `|w|` rotations of `w`, starting with `w` itself.
pub fn conjugates(w: &[u8]) -> Result<Vec<Word>> {
    require_nonempty(w)?;
    Ok((0..w.len())
        .map(|i| {
            let mut r = Vec::with_capacity(w.len());
            r.extend_from_slice(&w[i..]);
            r.extend_from_slice(&w[..i]);
            Word::from_vec_unchecked(r)
        })
        .collect())
}

/// Certificate that a word is a palindromic periodicity: it is a prefix of
/// `(p s)^ω`, with `p` and `s` palindromes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PPWitness {
    pub p: Word,
    pub s: Word,
}

impl PPWitness {
    pub fn period(&self) -> usize {
        self.p.len() + self.s.len()
    }

    /// Checks the witness against `w` directly, without any precomputation.
    pub fn certifies(&self, w: &[u8]) -> bool {
        let period = self.period();
        let root: Vec<u8> = self.p.iter().chain(self.s.iter()).copied().collect();
        period >= 1
            && is_palindrome(&self.p)
            && is_palindrome(&self.s)
            && w.len() >= period
            && w.iter().enumerate().all(|(i, &c)| root[i % period] == c)
    }
}

/// Decides palindromic periodicity. The witness uses the smallest period
/// whose prefix is symmetric, split at its smallest cut with a nonempty
/// first palindrome (so a palindromic root is reported as `p = root`,
/// `s = ε`).
pub fn is_pal_periodicity(w: &[u8]) -> Option<PPWitness> {
    if w.is_empty() {
        return None;
    }
    let oracle = PalindromeOracle::new(w);
    let table = BorderTable::new(w);
    let witness = table.periods().find_map(|p| {
        let cut = (1..=p).find(|&m| oracle.is_pal(0, m) && oracle.is_pal(m, p));
        cut.map(|m| PPWitness {
            p: Word::from_vec_unchecked(w[..m].to_vec()),
            s: Word::from_vec_unchecked(w[m..p].to_vec()),
        })
    });
    witness
}

/// Allocation-light boolean form of [`is_pal_periodicity`].
pub fn is_pp(w: &[u8]) -> bool {
    if w.is_empty() {
        return false;
    }
    let oracle = PalindromeOracle::new(w);
    let table = BorderTable::new(w);
    let found = table
        .periods()
        .any(|p| oracle.symmetric_split(0, p).is_some());
    found
}

/// Periods of `w` whose prefix is symmetric, ascending.
pub fn symmetric_word_periods(w: &[u8]) -> Result<Vec<usize>> {
    require_nonempty(w)?;
    let oracle = PalindromeOracle::new(w);
    Ok(BorderTable::new(w)
        .periods()
        .filter(|&p| oracle.symmetric_split(0, p).is_some())
        .collect())
}
