//! Burrows–Wheeler transform by rotation sorting, and the perfectly
//! clustered test.

use crate::error::{Error, Result};
use crate::word::{require_nonempty, Word};

/// Last letters of the lexicographically sorted conjugates of `w`,
/// duplicates kept.
pub fn bwt(w: &[u8]) -> Result<Word> {
    require_nonempty(w)?;
    Ok(Word::from_vec_unchecked(bwt_symbols(w)))
}

pub(crate) fn bwt_symbols(w: &[u8]) -> Vec<u8> {
    let n = w.len();
    let mut starts: Vec<usize> = (0..n).collect();
    starts.sort_by(|&a, &b| {
        let ra = w[a..].iter().chain(&w[..a]);
        let rb = w[b..].iter().chain(&w[..b]);
        ra.cmp(rb)
    });
    starts.iter().map(|&i| w[(i + n - 1) % n]).collect()
}

/// Whether the BWT of `w` lies in `(k-1)^* ⋯ 1^* 0^*`, i.e. its symbols
/// never increase.
pub fn is_perfectly_clustered(w: &[u8], k: u8) -> Result<bool> {
    if let Some(&symbol) = w.iter().find(|&&c| c >= k) {
        return Err(Error::SymbolNotInAlphabet { symbol, k });
    }
    require_nonempty(w)?;
    Ok(bwt_symbols(w).windows(2).all(|p| p[0] >= p[1]))
}
