//! Exhaustive searches for words with few palindromic-periodicity factors.
//!
//! The breadth-first search only ever stores words in canonical form
//! (letters numbered by first occurrence). Renaming letters does not change
//! which factors are palindromic periodicities, and adding a letter can only
//! add factors, so pruning a word whose count exceeds the threshold never
//! loses a survivor.

use std::collections::{BTreeSet, HashSet};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::census::shortlex;
use crate::error::{Error, Result};
use crate::periodicity::is_pp;
use crate::word::{Word, MAX_ALPHABET};

/// Renames letters in order of first occurrence: the first distinct letter
/// becomes 0, the second 1, and so on.
pub fn canonical_form(w: &[u8]) -> Word {
    let mut map = [u8::MAX; MAX_ALPHABET as usize];
    let mut next = 0u8;
    let out = w
        .iter()
        .map(|&c| {
            let slot = &mut map[c as usize];
            if *slot == u8::MAX {
                *slot = next;
                next += 1;
            }
            *slot
        })
        .collect();
    Word::from_vec_unchecked(out)
}

pub fn is_canonical(w: &[u8]) -> bool {
    let mut next = 0u8;
    for &c in w {
        if c > next {
            return false;
        }
        if c == next {
            next += 1;
        }
    }
    true
}

/// Distinct nonempty factors of `w` that are palindromic periodicities.
pub fn pp_factor_set(w: &[u8]) -> BTreeSet<Word> {
    let mut seen: HashSet<&[u8]> = HashSet::new();
    for i in 0..w.len() {
        for j in i + 1..=w.len() {
            seen.insert(&w[i..j]);
        }
    }
    seen.into_iter()
        .filter(|f| is_pp(f))
        .map(|f| Word::from_vec_unchecked(f.to_vec()))
        .collect()
}

/// Number of distinct nonempty palindromic-periodicity factors of `w`.
pub fn pp_factor_count(w: &[u8]) -> usize {
    (1..=w.len()).map(|end| new_pp_suffixes(&w[..end])).sum()
}

/// Length of the longest suffix of `w` that also occurs ending earlier.
fn longest_repeated_suffix(w: &[u8]) -> usize {
    // Z-function of the reversal: the longest prefix of reverse(w) that
    // reoccurs at a later offset.
    let r: Vec<u8> = w.iter().rev().copied().collect();
    let n = r.len();
    let mut z = vec![0usize; n];
    let (mut l, mut rr) = (0usize, 0usize);
    let mut best = 0;
    for i in 1..n {
        let mut k = if i < rr { (rr - i).min(z[i - l]) } else { 0 };
        while i + k < n && r[k] == r[i + k] {
            k += 1;
        }
        z[i] = k;
        if i + k > rr {
            l = i;
            rr = i + k;
        }
        best = best.max(k);
    }
    best
}

/// How many palindromic-periodicity factors `w` has that `w` minus its last
/// letter does not. These are exactly the suffixes of `w` that occur
/// nowhere else in `w`.
pub fn new_pp_suffixes(w: &[u8]) -> usize {
    let n = w.len();
    let seen = longest_repeated_suffix(w);
    (seen + 1..=n).filter(|&len| is_pp(&w[n - len..])).count()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AlphabetMode {
    /// Any number of letters (up to ten), introduced in order.
    Growing,
    /// Letters drawn from `0..k`.
    Fixed(u8),
}

impl AlphabetMode {
    fn limit(self) -> u8 {
        match self {
            AlphabetMode::Growing => MAX_ALPHABET,
            AlphabetMode::Fixed(k) => k.min(MAX_ALPHABET),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchReport {
    pub threshold: usize,
    pub alphabet: AlphabetMode,
    pub length_cap: usize,
    /// Longest length with at least one survivor.
    pub length_reached: usize,
    /// `frontier_sizes[i]` is the number of canonical survivors of length
    /// `i + 1`.
    pub frontier_sizes: Vec<usize>,
    /// Canonical survivors of length `length_reached`, sorted.
    pub extremal: Vec<Word>,
    /// Every relabeling of the extremal words inside the alphabet (for
    /// fixed alphabets; equal to `extremal` when growing).
    pub extremal_relabeled: Vec<Word>,
    /// Whether the frontier emptied at or before `length_cap`.
    pub closed: bool,
}

#[derive(Debug, Clone)]
struct Node {
    word: Vec<u8>,
    /// Palindromic-periodicity factors of `word`.
    count: usize,
    /// Letters used so far.
    letters: u8,
}

fn children(node: &Node, threshold: usize, limit: u8) -> Vec<Node> {
    let top = (node.letters + 1).min(limit);
    (0..top)
        .filter_map(|a| {
            let mut word = Vec::with_capacity(node.word.len() + 1);
            word.extend_from_slice(&node.word);
            word.push(a);
            let count = node.count + new_pp_suffixes(&word);
            (count <= threshold).then(|| Node {
                word,
                count,
                letters: node.letters.max(a + 1),
            })
        })
        .collect()
}

/// Largest frontier the searches hold in memory before giving up.
pub const DEFAULT_MAX_FRONTIER: usize = 1 << 20;

/// Level-by-level search; `visit(len, level)` sees every level of survivors
/// in sorted order.
fn bfs_levels<F>(
    threshold: usize,
    length_cap: usize,
    mode: AlphabetMode,
    max_frontier: usize,
    mut visit: F,
) -> Result<()>
where
    F: FnMut(usize, &[Node]),
{
    let limit = mode.limit();
    let mut level: Vec<Node> = if threshold >= 1 && limit >= 1 && length_cap >= 1 {
        vec![Node {
            word: vec![0],
            count: 1,
            letters: 1,
        }]
    } else {
        Vec::new()
    };
    let mut len = 1;
    while !level.is_empty() {
        visit(len, &level);
        if len == length_cap {
            break;
        }
        let mut next: Vec<Node> = level
            .par_iter()
            .flat_map_iter(|node| children(node, threshold, limit))
            .collect();
        len += 1;
        if next.len() > max_frontier {
            return Err(Error::FrontierLimit { limit: max_frontier, len });
        }
        next.sort_by(|a, b| a.word.cmp(&b.word));
        level = next;
    }
    Ok(())
}

/// Longest canonical words with at most `threshold` distinct nonempty
/// palindromic-periodicity factors.
///
/// Over a growing alphabet, thresholds of 9 and more admit aperiodic
/// infinite words, so the frontier grows without bound; such searches stop
/// with [`Error::FrontierLimit`].
pub fn bfs_longest(threshold: usize, length_cap: usize, mode: AlphabetMode) -> Result<SearchReport> {
    bfs_longest_limited(threshold, length_cap, mode, DEFAULT_MAX_FRONTIER)
}

/// [`bfs_longest`] with an explicit frontier limit.
pub fn bfs_longest_limited(
    threshold: usize,
    length_cap: usize,
    mode: AlphabetMode,
    max_frontier: usize,
) -> Result<SearchReport> {
    if threshold < 1 || length_cap < 1 {
        return Err(Error::InvalidArgument(
            "threshold and length cap must be at least 1".into(),
        ));
    }
    let mut frontier_sizes = Vec::new();
    let mut extremal: Vec<Word> = Vec::new();
    let mut closed = true;
    bfs_levels(threshold, length_cap, mode, max_frontier, |len, level| {
        frontier_sizes.push(level.len());
        extremal = level
            .iter()
            .map(|n| Word::from_vec_unchecked(n.word.clone()))
            .collect();
        if len == length_cap {
            closed = level
                .iter()
                .all(|n| children(n, threshold, mode.limit()).is_empty());
        }
    })?;
    let length_reached = frontier_sizes.len();
    let extremal_relabeled = match mode {
        AlphabetMode::Growing => extremal.clone(),
        AlphabetMode::Fixed(k) => relabelings(&extremal, k),
    };
    Ok(SearchReport {
        threshold,
        alphabet: mode,
        length_cap,
        length_reached,
        frontier_sizes,
        extremal,
        extremal_relabeled,
        closed,
    })
}

/// All images of `words` under injective renamings into `0..k`.
fn relabelings(words: &[Word], k: u8) -> Vec<Word> {
    let mut out = BTreeSet::new();
    for w in words {
        let used = w.alphabet_bound();
        for map in injections(used, k) {
            let img = w.iter().map(|&c| map[c as usize]).collect();
            out.insert(Word::from_vec_unchecked(img));
        }
    }
    out.into_iter().collect()
}

fn injections(from: u8, to: u8) -> Vec<Vec<u8>> {
    if from == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for prefix in injections(from - 1, to) {
        for t in 0..to {
            if !prefix.contains(&t) {
                let mut m = prefix.clone();
                m.push(t);
                out.push(m);
            }
        }
    }
    out
}

/// Palindromic-periodicity factors of the periodic word `x^ω`.
///
/// Factor lengths are probed up to `cap_multiplier · |x|`; finding any at a
/// length beyond half that limit is reported as unbounded.
pub fn periodic_pp_set_with(x: &[u8], cap_multiplier: usize) -> Result<Vec<Word>> {
    if x.is_empty() {
        return Err(Error::EmptyWord);
    }
    let p = x.len();
    let limit = cap_multiplier.max(2) * p;
    let reps = limit / p + 2;
    let unrolled: Vec<u8> = x.iter().copied().cycle().take(reps * p).collect();
    let mut found = BTreeSet::new();
    let mut longest = 0;
    for len in 1..=limit {
        for start in 0..p {
            let f = &unrolled[start..start + len];
            if is_pp(f) && found.insert(f.to_vec()) {
                longest = len;
            }
        }
    }
    if 2 * longest > limit {
        return Err(Error::Unbounded { limit: limit / 2 });
    }
    Ok(shortlex(found.into_iter().map(Word::from_vec_unchecked)))
}

pub const DEFAULT_CAP_MULTIPLIER: usize = 8;

pub fn periodic_pp_set(x: &[u8]) -> Result<Vec<Word>> {
    periodic_pp_set_with(x, DEFAULT_CAP_MULTIPLIER)
}

/// Words of the shape `x · y^i · z` with `x`, `y`, `z` drawn from the given
/// sets and `i >= 0`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormFamily {
    pub prefixes: Vec<Word>,
    pub blocks: Vec<Word>,
    pub suffixes: Vec<Word>,
}

impl FormFamily {
    pub fn new(prefixes: &[&str], blocks: &[&str], suffixes: &[&str]) -> Result<Self> {
        let parse = |v: &[&str]| v.iter().map(|s| s.parse()).collect::<Result<Vec<Word>>>();
        Ok(FormFamily {
            prefixes: parse(prefixes)?,
            blocks: parse(blocks)?,
            suffixes: parse(suffixes)?,
        })
    }

    /// Replaces the block set by all conjugates of its members.
    pub fn with_conjugate_blocks(mut self) -> Self {
        let mut all = BTreeSet::new();
        for b in &self.blocks {
            for i in 0..b.len() {
                let mut r = b[i..].to_vec();
                r.extend_from_slice(&b[..i]);
                all.insert(Word::from_vec_unchecked(r));
            }
        }
        self.blocks = all.into_iter().collect();
        self
    }

    pub fn matches(&self, w: &[u8]) -> bool {
        let suffixes: HashSet<&[u8]> = self.suffixes.iter().map(|s| s.symbols()).collect();
        self.matches_with(w, &suffixes)
    }

    fn matches_with(&self, w: &[u8], suffixes: &HashSet<&[u8]>) -> bool {
        self.prefixes.iter().filter(|x| w.starts_with(x)).any(|x| {
            let rest = &w[x.len()..];
            self.blocks.iter().filter(|y| !y.is_empty()).any(|y| {
                let mut r = rest;
                loop {
                    if suffixes.contains(r) {
                        return true;
                    }
                    match r.strip_prefix(y.symbols()) {
                        Some(tail) => r = tail,
                        None => return false,
                    }
                }
            })
        })
    }
}

/// The four shapes that ternary-or-larger canonical words of length at
/// least 9 with at most 8 palindromic periodicities take.
pub fn ternary_families() -> Vec<FormFamily> {
    [
        FormFamily::new(&["0"], &["012"], &["", "0", "01"]),
        FormFamily::new(
            &[""],
            &["012"],
            &["", "0", "2", "3", "00", "01", "03", "011", "013"],
        ),
        FormFamily::new(&[""], &["0123"], &["", "0", "01", "012"]),
        FormFamily::new(&["0"], &["123"], &["", "1", "12"]),
    ]
    .into_iter()
    .collect::<Result<Vec<_>>>()
    .expect("literal families parse")
}

/// Repeating blocks (up to conjugacy) of long binary words with at most
/// 43 palindromic periodicities.
pub const BINARY_BLOCKS: [&str; 14] = [
    "001011", "001101", "0001011", "0001101", "0010111", "0011101", "00001011", "00001101",
    "00010111", "00011101", "00101011", "00101111", "00110101", "00111101",
];

/// `x y^i z` with `|x|, |z| <= 5` and `y` a conjugate of a member of
/// [`BINARY_BLOCKS`].
pub fn binary_family() -> FormFamily {
    let short: Vec<Word> = (0..=5)
        .flat_map(|n| crate::word::all_words(2, n))
        .map(Word::from_vec_unchecked)
        .collect();
    FormFamily {
        prefixes: short.clone(),
        blocks: BINARY_BLOCKS.iter().map(|s| s.parse().unwrap()).collect(),
        suffixes: short,
    }
    .with_conjugate_blocks()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructuralReport {
    pub threshold: usize,
    pub alphabet: AlphabetMode,
    pub min_len: usize,
    pub max_len: usize,
    /// `(length, number of canonical survivors)` for each checked length.
    pub survivors: Vec<(usize, usize)>,
    /// Survivors matching none of the families.
    pub violations: Vec<Word>,
}

impl StructuralReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Enumerates every canonical word with length in `min_len..=max_len` and
/// at most `threshold` palindromic periodicities, and checks each against
/// the families.
pub fn verify_structural_forms(
    threshold: usize,
    min_len: usize,
    max_len: usize,
    mode: AlphabetMode,
    forms: &[FormFamily],
) -> Result<StructuralReport> {
    if min_len > max_len || threshold < 1 {
        return Err(Error::InvalidArgument("empty length range or zero threshold".into()));
    }
    let suffix_sets: Vec<HashSet<&[u8]>> = forms
        .iter()
        .map(|f| f.suffixes.iter().map(|s| s.symbols()).collect())
        .collect();
    let mut survivors = Vec::new();
    let mut violations = Vec::new();
    bfs_levels(threshold, max_len, mode, DEFAULT_MAX_FRONTIER, |len, level| {
        if len < min_len {
            return;
        }
        survivors.push((len, level.len()));
        for node in level {
            let ok = forms
                .iter()
                .zip(&suffix_sets)
                .any(|(f, s)| f.matches_with(&node.word, s));
            if !ok {
                violations.push(Word::from_vec_unchecked(node.word.clone()));
            }
        }
    })?;
    for len in min_len..=max_len {
        if !survivors.iter().any(|&(l, _)| l == len) {
            survivors.push((len, 0));
        }
    }
    Ok(StructuralReport {
        threshold,
        alphabet: mode,
        min_len,
        max_len,
        survivors,
        violations,
    })
}

/// Number of binary words of length `n` that are palindromic
/// periodicities, counting both letter labelings.
pub fn count_binary_pp_words(n: usize) -> Result<u64> {
    if n < 1 {
        return Err(Error::InvalidArgument("length must be at least 1".into()));
    }
    if n > 40 {
        return Err(Error::InvalidArgument("length too large for exhaustive count".into()));
    }
    // Complementing letters preserves the property, so count the words
    // starting with 0 and double.
    let half = 1u64 << (n - 1);
    let count = (0..half)
        .into_par_iter()
        .map_init(
            || vec![0u8; n],
            |buf, idx| {
                for (i, slot) in buf.iter_mut().enumerate() {
                    *slot = ((idx >> (n - 1 - i)) & 1) as u8;
                }
                u64::from(is_pp(buf))
            },
        )
        .sum::<u64>();
    Ok(2 * count)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::{all_words, w};

    fn naive_pp_factor_count(x: &[u8]) -> usize {
        let mut set = HashSet::new();
        for i in 0..x.len() {
            for j in i + 1..=x.len() {
                if crate::periodicity::is_pal_periodicity(&x[i..j]).is_some() {
                    set.insert(x[i..j].to_vec());
                }
            }
        }
        set.len()
    }

    #[test]
    fn canonical_form_examples() {
        assert_eq!(canonical_form(&w("2101")), w("0121"));
        assert_eq!(canonical_form(&w("0012")), w("0012"));
        assert_eq!(canonical_form(&w("111")), w("000"));
        assert!(is_canonical(&w("0121")) && !is_canonical(&w("1")) && !is_canonical(&w("02")));
    }

    #[test]
    fn pp_factor_count_examples() {
        assert_eq!(pp_factor_count(&w("00000")), 5);
        assert_eq!(pp_factor_count(&w("012")), 5);
        assert_eq!(pp_factor_count(&w("")), 0);
        assert_eq!(pp_factor_set(&w("012")).len(), 5);
    }

    #[test]
    fn incremental_count_matches_full_enumeration() {
        for n in 0..=9 {
            for x in all_words(3, n) {
                assert_eq!(pp_factor_count(&x), naive_pp_factor_count(&x), "{x:?}");
            }
        }
    }

    #[test]
    fn bfs_examples() {
        let r = bfs_longest(5, 10, AlphabetMode::Growing).unwrap();
        assert!(r.closed);
        assert_eq!(r.length_reached, 5);
        assert_eq!(r.extremal, vec![w("00000")]);

        let r = bfs_longest(1, 10, AlphabetMode::Fixed(1)).unwrap();
        assert!(r.closed);
        assert_eq!((r.length_reached, r.extremal.clone()), (1, vec![w("0")]));

        let r = bfs_longest(3, 2, AlphabetMode::Fixed(2)).unwrap();
        assert!(!r.closed, "000 still survives past the cap");
        assert_eq!(r.length_reached, 2);
    }

    #[test]
    fn growing_search_beyond_eight_hits_the_frontier_limit() {
        let r = bfs_longest_limited(9, 200, AlphabetMode::Growing, 500);
        assert!(matches!(r, Err(Error::FrontierLimit { limit: 500, .. })));
        let r = bfs_longest(8, 40, AlphabetMode::Growing).unwrap();
        assert!(!r.closed && r.frontier_sizes[39] == 6);
    }

    #[test]
    fn binary_forms_hold_only_beyond_length_43() {
        let fam = [binary_family()];
        let r = verify_structural_forms(43, 12, 16, AlphabetMode::Fixed(2), &fam).unwrap();
        assert!(r.violations.contains(&w("000000000000")));
        let r = verify_structural_forms(43, 44, 70, AlphabetMode::Fixed(2), &fam).unwrap();
        assert!(r.passed(), "{:?}", r.violations);
        let r = verify_structural_forms(43, 43, 43, AlphabetMode::Fixed(2), &fam).unwrap();
        assert_eq!(r.violations, vec![w(&"0".repeat(43))]);
    }

    #[test]
    fn binary_relabelings() {
        let r = bfs_longest(4, 10, AlphabetMode::Fixed(2)).unwrap();
        assert_eq!(r.extremal, vec![w("0000")]);
        assert_eq!(r.extremal_relabeled, vec![w("0000"), w("1111")]);
    }

    #[test]
    fn periodic_sets() {
        let s = periodic_pp_set(&w("012")).unwrap();
        assert_eq!(s, shortlex(["0", "1", "2", "01", "12", "20"].map(w)));
        assert!(matches!(periodic_pp_set(&w("01")), Err(Error::Unbounded { .. })));
        assert!(periodic_pp_set(&w("")).is_err());
    }

    #[test]
    fn family_matching() {
        let fams = ternary_families();
        assert!(fams[0].matches(&w("0012012012")));
        assert!(fams[1].matches(&w("012012013")));
        assert!(!fams[1].matches(&w("012012021")));
        let empty: Vec<FormFamily> = Vec::new();
        let r = verify_structural_forms(8, 9, 9, AlphabetMode::Growing, &empty).unwrap();
        assert!(!r.violations.is_empty());
    }

    #[test]
    fn binary_family_blocks_closed_under_conjugacy() {
        let fam = binary_family();
        assert_eq!(fam.prefixes.len(), 63);
        assert!(fam.blocks.contains(&w("010110")));
        assert!(fam.blocks.contains(&w("10000110")));
    }

    #[test]
    fn binary_counts_small() {
        assert_eq!(count_binary_pp_words(1).unwrap(), 2);
        assert_eq!(count_binary_pp_words(2).unwrap(), 4);
        assert_eq!(count_binary_pp_words(3).unwrap(), 8);
        assert_eq!(count_binary_pp_words(6).unwrap(), 58);
        for n in 1..=12 {
            let full = all_words(2, n).filter(|x| is_pp(x)).count() as u64;
            assert_eq!(count_binary_pp_words(n).unwrap(), full);
        }
    }
}
