//! Membership tests for finite Sturmian, trapezoidal, central, standard,
//! rich and closed words.
//!
//! A finite binary word is Sturmian exactly when it has no pathological
//! pair: no `u` such that both `0u0` and `1u1` occur in it. Every other
//! Sturmian-family predicate here is derived from that test.

use std::collections::{HashMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::palindrome::distinct_palindromes;
use crate::periodicity::BorderTable;
use crate::word::{require_binary, require_nonempty, Word};

/// A shortest `u` such that `0u0` and `1u1` both occur in the host word.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathologicalPair {
    pub u: Word,
    /// Leftmost occurrence of `0u0`.
    pub zero_pos: usize,
    /// Leftmost occurrence of `1u1`.
    pub one_pos: usize,
}

impl PathologicalPair {
    pub fn zero_factor(&self) -> Word {
        wrap(0, &self.u)
    }

    pub fn one_factor(&self) -> Word {
        wrap(1, &self.u)
    }
}

fn wrap(letter: u8, u: &[u8]) -> Word {
    let mut v = Vec::with_capacity(u.len() + 2);
    v.push(letter);
    v.extend_from_slice(u);
    v.push(letter);
    Word::from_vec_unchecked(v)
}

/// Minimal pathological pair of a binary word; ties between equally short
/// `u` go to the leftmost `0u0`.
pub fn pathological_pair(w: &[u8]) -> Result<Option<PathologicalPair>> {
    require_binary(w)?;
    Ok(find_pathological_pair(w))
}

fn find_pathological_pair(w: &[u8]) -> Option<PathologicalPair> {
    let n = w.len();
    for inner in 0..n.saturating_sub(1) {
        let span = inner + 2;
        let mut ones: HashMap<&[u8], usize> = HashMap::new();
        for (i, win) in w.windows(span).enumerate() {
            if win[0] == 1 && win[span - 1] == 1 {
                ones.entry(&win[1..span - 1]).or_insert(i);
            }
        }
        if ones.is_empty() {
            continue;
        }
        for (i, win) in w.windows(span).enumerate() {
            if win[0] == 0 && win[span - 1] == 0 {
                if let Some(&j) = ones.get(&win[1..span - 1]) {
                    return Some(PathologicalPair {
                        u: Word::from_vec_unchecked(win[1..span - 1].to_vec()),
                        zero_pos: i,
                        one_pos: j,
                    });
                }
            }
        }
    }
    None
}

/// Balanced test for finite binary words: no pathological pair.
pub fn is_finite_sturmian(w: &[u8]) -> Result<bool> {
    require_binary(w)?;
    require_nonempty(w)?;
    Ok(find_pathological_pair(w).is_none())
}

/// Number of distinct factors of length `n`.
pub fn factor_complexity(w: &[u8], n: usize) -> Result<usize> {
    if n > w.len() {
        return Err(Error::LengthOutOfRange { n, len: w.len() });
    }
    if n == 0 {
        return Ok(1);
    }
    Ok(w.windows(n).collect::<HashSet<_>>().len())
}

/// At most `n + 1` distinct factors of every length `n`.
pub fn is_trapezoidal(w: &[u8]) -> Result<bool> {
    require_binary(w)?;
    require_nonempty(w)?;
    Ok((1..=w.len()).all(|n| w.windows(n).collect::<HashSet<_>>().len() <= n + 1))
}

/// `0u0`, `0u1`, `1u0` and `1u1` are all finite Sturmian.
pub fn is_central(u: &[u8]) -> Result<bool> {
    require_binary(u)?;
    let mut ext = vec![0u8; u.len() + 2];
    ext[1..=u.len()].copy_from_slice(u);
    let last = u.len() + 1;
    for (a, b) in [(0, 0), (0, 1), (1, 0), (1, 1)] {
        ext[0] = a;
        ext[last] = b;
        if find_pathological_pair(&ext).is_some() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `u01` or `u10` with `u` central.
pub fn is_standard_sturmian(w: &[u8]) -> Result<bool> {
    require_binary(w)?;
    if w.len() < 2 {
        return Err(Error::TooShort { min: 2, len: w.len() });
    }
    let (u, tail) = w.split_at(w.len() - 2);
    Ok(tail[0] != tail[1] && is_central(u)?)
}

pub fn distinct_palindromic_factors(w: &[u8]) -> usize {
    distinct_palindromes(w)
}

/// A word of length `n` with `n` distinct nonempty palindromic factors.
pub fn is_rich(w: &[u8]) -> bool {
    distinct_palindromes(w) == w.len()
}

/// Length one, or some nonempty proper border occurs only as prefix and
/// suffix.
pub fn is_closed(w: &[u8]) -> Result<bool> {
    require_nonempty(w)?;
    let n = w.len();
    if n == 1 {
        return Ok(true);
    }
    let table = BorderTable::new(w);
    let closed = table.borders().filter(|&b| b > 0).any(|b| {
        let border = &w[..b];
        (1..n - b).all(|i| &w[i..i + b] != border)
    });
    Ok(closed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::{all_words, w};

    /// Direct search over every `u` and every pair of positions.
    fn brute_pathological_len(x: &[u8]) -> Option<usize> {
        let n = x.len();
        (0..n.saturating_sub(1)).find(|&l| {
            (0..=n - l - 2).any(|i| {
                x[i] == 0
                    && x[i + l + 1] == 0
                    && (0..=n - l - 2).any(|j| {
                        x[j] == 1 && x[j + l + 1] == 1 && x[i + 1..i + l + 1] == x[j + 1..j + l + 1]
                    })
            })
        })
    }

    #[test]
    fn pathological_pair_examples() {
        let pp = pathological_pair(&w("00001010")).unwrap().unwrap();
        assert_eq!(pp.u, w("0"));
        assert_eq!((pp.zero_factor(), pp.one_factor()), (w("000"), w("101")));
        assert_eq!(brute_pathological_len(&w("0011")), Some(0));
        assert_eq!(pathological_pair(&w("0011")).unwrap().unwrap().u, w(""));
        assert_eq!(pathological_pair(&w("0101")).unwrap(), None);
        assert_eq!(pathological_pair(&w("012")), Err(Error::NonBinary));
    }

    #[test]
    fn pathological_pair_minimal_against_brute_force() {
        for n in 1..=11 {
            for x in all_words(2, n) {
                let got = find_pathological_pair(&x).map(|p| p.u.len());
                assert_eq!(got, brute_pathological_len(&x), "{x:?}");
            }
        }
    }

    #[test]
    fn sturmian_examples() {
        assert!(!is_finite_sturmian(&w("0011")).unwrap());
        assert_eq!(brute_pathological_len(&w("010010")), None);
        assert!(is_finite_sturmian(&w("010010")).unwrap());
        assert!(is_finite_sturmian(&w("0")).unwrap());
        assert!(is_finite_sturmian(&[]).is_err());
    }

    #[test]
    fn complexity_examples() {
        // windows: 000 000 001 010 101 010
        assert_eq!(factor_complexity(&w("00001010"), 3).unwrap(), 4);
        assert_eq!(factor_complexity(&w("0110"), 0).unwrap(), 1);
        assert_eq!(factor_complexity(&w("0000"), 2).unwrap(), 1);
        assert_eq!(
            factor_complexity(&w("01"), 3),
            Err(Error::LengthOutOfRange { n: 3, len: 2 })
        );
    }

    #[test]
    fn trapezoidal_examples() {
        assert!(is_trapezoidal(&w("00001010")).unwrap());
        assert!(is_trapezoidal(&w("0011")).unwrap());
        assert_eq!(factor_complexity(&w("001011"), 2).unwrap(), 4);
        assert!(!is_trapezoidal(&w("001011")).unwrap());
        assert_eq!(is_trapezoidal(&w("0120")), Err(Error::NonBinary));
    }

    #[test]
    fn central_and_standard_examples() {
        assert!(is_central(&w("00100")).unwrap());
        assert!(is_central(&w("")).unwrap());
        assert!(!is_central(&w("01")).unwrap());
        assert!(is_standard_sturmian(&w("01")).unwrap());
        assert!(is_central(&w("00")).unwrap());
        assert!(is_standard_sturmian(&w("0010")).unwrap());
        assert!(!is_standard_sturmian(&w("0011")).unwrap());
        assert!(is_standard_sturmian(&w("0")).is_err());
    }

    #[test]
    fn central_words_are_palindromes() {
        for n in 0..=12 {
            for u in all_words(2, n) {
                if is_central(&u).unwrap() {
                    assert!(crate::periodicity::is_palindrome(&u), "{u:?}");
                }
            }
        }
    }

    #[test]
    fn rich_examples() {
        assert_eq!(distinct_palindromic_factors(&w("001011")), 6);
        assert_eq!(distinct_palindromic_factors(&w("")), 0);
        assert_eq!(distinct_palindromic_factors(&w("000")), 3);
        assert!(is_rich(&w("001011")));
        assert!(!is_rich(&w("001001101011")));
        assert!(is_rich(&w("0")));
    }

    #[test]
    fn closed_examples() {
        for x in ["00", "0110", "01010", "0"] {
            assert!(is_closed(&w(x)).unwrap(), "{x}");
        }
        for x in ["01", "0010", "0101001"] {
            assert!(!is_closed(&w(x)).unwrap(), "{x}");
        }
        assert!(is_closed(&[]).is_err());
    }
}
