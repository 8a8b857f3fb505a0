//! Counting palindromic-periodicity factors of infinite words.
//!
//! Every statistic here is computed on a finite prefix that is grown until
//! the answer stops changing (see [`StabilizationPolicy`]). The closed-form
//! counts for the period-doubling, Thue–Morse and Tribonacci words live in
//! [`crate::formulas`]; this module measures and compares.

use std::collections::{BTreeSet, HashSet};
use std::io;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::formulas::{self, TribonacciConvention};
use crate::periodicity::is_pp;
use crate::sequences::{builtin, SequenceSpec};
use crate::word::Word;

/// How far to grow a prefix before trusting a factor statistic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct StabilizationPolicy {
    pub initial: usize,
    pub growth: usize,
    pub cap: usize,
    /// Longest factor length examined when enumerating an inventory.
    pub probe_len: usize,
}

impl Default for StabilizationPolicy {
    fn default() -> Self {
        StabilizationPolicy {
            initial: 4096,
            growth: 2,
            cap: 1 << 22,
            probe_len: 64,
        }
    }
}

impl StabilizationPolicy {
    /// Grows prefixes of `spec` until `measure` gives the same answer on two
    /// consecutive prefixes. Returns the answer and the prefix length that
    /// confirmed it.
    pub fn stabilize<T, F>(&self, spec: &SequenceSpec, min_len: usize, measure: F) -> Result<(T, usize)>
    where
        T: PartialEq,
        F: Fn(&[u8]) -> T,
    {
        if self.growth < 2 {
            return Err(Error::InvalidArgument("growth factor must be at least 2".into()));
        }
        let mut len = self.initial.max(min_len);
        if len > self.cap {
            return Err(Error::StabilizationCap { cap: self.cap });
        }
        let mut prev = measure(&spec.prefix(len)?);
        loop {
            let next_len = len.saturating_mul(self.growth);
            if next_len > self.cap {
                return Err(Error::StabilizationCap { cap: self.cap });
            }
            let cur = measure(&spec.prefix(next_len)?);
            if cur == prev {
                return Ok((cur, next_len));
            }
            prev = cur;
            len = next_len;
        }
    }
}

/// One line of a census: counts for factors of length `n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusRow {
    pub n: usize,
    pub factors: usize,
    pub pp: usize,
    pub formula: Option<u64>,
    #[serde(rename = "match")]
    pub matches: Option<bool>,
}

impl CensusRow {
    pub fn with_formula(mut self, value: Option<u64>) -> Self {
        self.formula = value;
        self.matches = value.map(|v| v == self.pp as u64);
        self
    }
}

/// Distinct length-`n` factors of `x` and how many are palindromic
/// periodicities. Each distinct factor is counted once, at its first
/// occurrence.
pub fn count_row(x: &[u8], n: usize) -> CensusRow {
    let (factors, pp) = if n == 0 {
        (1, 0)
    } else {
        let distinct: HashSet<&[u8]> = x.windows(n).collect();
        let pp = distinct.iter().filter(|f| is_pp(f)).count();
        (distinct.len(), pp)
    };
    CensusRow {
        n,
        factors,
        pp,
        formula: None,
        matches: None,
    }
}

fn rows_on_prefix(x: &[u8], n_lo: usize, n_hi: usize) -> Vec<CensusRow> {
    (n_lo..=n_hi).into_par_iter().map(|n| count_row(x, n)).collect()
}

/// Census of lengths `n_lo..=n_hi`, sorted by `n`.
pub fn pp_census(
    spec: &SequenceSpec,
    n_lo: usize,
    n_hi: usize,
    policy: &StabilizationPolicy,
) -> Result<Vec<CensusRow>> {
    if n_lo < 1 || n_lo > n_hi {
        return Err(Error::InvalidArgument(format!(
            "census range must satisfy 1 <= n_lo <= n_hi, got {n_lo}..={n_hi}"
        )));
    }
    let (rows, _) = policy.stabilize(spec, n_hi + 1, |x| rows_on_prefix(x, n_lo, n_hi))?;
    Ok(rows)
}

/// Closed-form count attached to census rows for a builtin word, if one
/// is known.
pub fn formula_for(name: &str, n: usize) -> Option<u64> {
    match name {
        "period_doubling" => Some(formulas::f_pd(n)),
        "thue_morse" => formulas::f_tm(n).ok(),
        "tribonacci" => Some(formulas::f_tr(n, TribonacciConvention::Standard)),
        _ => None,
    }
}

/// Census of a builtin word with its closed-form column filled in.
pub fn builtin_census(
    name: &str,
    n_lo: usize,
    n_hi: usize,
    policy: &StabilizationPolicy,
) -> Result<Vec<CensusRow>> {
    let spec = builtin(name)?;
    Ok(pp_census(&spec, n_lo, n_hi, policy)?
        .into_iter()
        .map(|row| {
            let f = formula_for(name, row.n);
            row.with_formula(f)
        })
        .collect())
}

pub fn write_json<W: io::Write>(rows: &[CensusRow], out: W) -> serde_json::Result<()> {
    serde_json::to_writer_pretty(out, rows)
}

pub fn write_csv<W: io::Write>(rows: &[CensusRow], out: W) -> csv::Result<()> {
    let mut writer = csv::Writer::from_writer(out);
    for row in rows {
        writer.serialize(row)?;
    }
    writer.flush()?;
    Ok(())
}

/// Orders words by length, then lexicographically.
pub fn shortlex(words: impl IntoIterator<Item = Word>) -> Vec<Word> {
    let mut v: Vec<Word> = words.into_iter().collect();
    v.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    v.dedup();
    v
}

fn inventory_on_prefix(x: &[u8], probe_len: usize) -> BTreeSet<Vec<u8>> {
    (1..=probe_len.min(x.len()))
        .into_par_iter()
        .flat_map_iter(|n| {
            let distinct: HashSet<&[u8]> = x.windows(n).collect();
            distinct
                .into_iter()
                .filter(|f| is_pp(f))
                .map(<[u8]>::to_vec)
                .collect::<Vec<_>>()
        })
        .collect()
}

/// All distinct nonempty palindromic-periodicity factors of the word, in
/// shortlex order. Fails when such factors still appear in the upper half
/// of the probed lengths, since the set is then likely infinite.
pub fn pp_inventory(spec: &SequenceSpec, policy: &StabilizationPolicy) -> Result<Vec<Word>> {
    let probe = policy.probe_len;
    let (set, _) = policy.stabilize(spec, probe + 1, |x| inventory_on_prefix(x, probe))?;
    if let Some(longest) = set.iter().map(Vec::len).max() {
        if 2 * longest > probe {
            return Err(Error::InventoryUnbounded { len: longest, probe });
        }
    }
    Ok(shortlex(set.into_iter().map(Word::from_vec_unchecked)))
}

/// Longest palindromic-periodicity factors of a word whose inventory is
/// finite.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MaxLengthReport {
    pub max_len: usize,
    /// Every factor of length `max_len` that is a palindromic periodicity,
    /// in lexicographic order.
    pub witnesses: Vec<Word>,
}

pub fn max_pp_length(spec: &SequenceSpec, policy: &StabilizationPolicy) -> Result<MaxLengthReport> {
    let inventory = pp_inventory(spec, policy)?;
    let max_len = inventory.last().map_or(0, |w| w.len());
    let witnesses = inventory.into_iter().filter(|w| w.len() == max_len).collect();
    Ok(MaxLengthReport { max_len, witnesses })
}

/// [`max_pp_length`] for the two builtin words known to have finitely many
/// palindromic periodicities.
pub fn rs_pf_max_length(name: &str, policy: &StabilizationPolicy) -> Result<MaxLengthReport> {
    match name {
        "rudin_shapiro" | "paperfolding" => max_pp_length(&builtin(name)?, policy),
        _ => Err(Error::InvalidArgument(format!(
            "expected rudin_shapiro or paperfolding, got {name:?}"
        ))),
    }
}

/// How a census value is compared with a linear function of `n`:
/// `coeff · pp  (relation)  slope · n + offset`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Relation {
    AtMost,
    AtLeast,
    GreaterThan,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinearBound {
    pub name: String,
    pub coeff: i128,
    pub relation: Relation,
    pub slope: i128,
    pub offset: i128,
    /// Smallest `n` the inequality is claimed for.
    pub min_n: usize,
}

impl LinearBound {
    fn new(name: &str, coeff: i128, relation: Relation, slope: i128, offset: i128, min_n: usize) -> Self {
        LinearBound {
            name: name.to_string(),
            coeff,
            relation,
            slope,
            offset,
            min_n,
        }
    }

    fn sides(&self, n: usize, pp: usize) -> (i128, i128) {
        (self.coeff * pp as i128, self.slope * n as i128 + self.offset)
    }

    pub fn holds(&self, n: usize, pp: usize) -> bool {
        let (lhs, rhs) = self.sides(n, pp);
        match self.relation {
            Relation::AtMost => lhs <= rhs,
            Relation::AtLeast => lhs >= rhs,
            Relation::GreaterThan => lhs > rhs,
        }
    }

    pub fn tight(&self, n: usize, pp: usize) -> bool {
        let (lhs, rhs) = self.sides(n, pp);
        lhs == rhs
    }
}

impl std::fmt::Display for LinearBound {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} (n >= {})", self.name, self.min_n)
    }
}

/// Rational lower approximation `ALPHA_NUM / ALPHA_DEN` of the real root
/// `α ≈ 1.0873780253841527` of `X³ + 2X² + 4X − 8`.
pub const ALPHA_NUM: i128 = 1_087_378_025;
pub const ALPHA_DEN: i128 = 1_000_000_000;

/// The inequalities known for a builtin word's census.
pub fn bounds_for(name: &str) -> Result<Vec<LinearBound>> {
    use Relation::*;
    Ok(match name {
        "period_doubling" => vec![
            LinearBound::new("pp <= 5n/3", 3, AtMost, 5, 0, 2),
            LinearBound::new("pp >= (6n+6)/5", 5, AtLeast, 6, 6, 3),
        ],
        "thue_morse" => vec![
            LinearBound::new("pp >= (n+17)/2", 2, AtLeast, 1, 17, 12),
            LinearBound::new("pp <= (8n-6)/3", 3, AtMost, 8, -6, 6),
        ],
        "tribonacci" => vec![
            LinearBound::new("pp <= 2n+1", 1, AtMost, 2, 1, 1),
            LinearBound::new("pp > alpha*n", ALPHA_DEN, GreaterThan, ALPHA_NUM, 0, 1),
        ],
        _ => {
            return Err(Error::InvalidArgument(format!(
                "no bounds known for {name:?}; expected period_doubling, thue_morse or tribonacci"
            )))
        }
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundCheck {
    pub bound: LinearBound,
    /// Lengths `n >= min_n` in range where the inequality fails.
    pub violations: Vec<usize>,
    /// Every `n` in the census range where both sides are equal.
    pub equality_at: Vec<usize>,
}

impl BoundCheck {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundsReport {
    pub sequence: String,
    pub rows: Vec<CensusRow>,
    pub checks: Vec<BoundCheck>,
}

impl BoundsReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(BoundCheck::passed)
    }
}

pub fn check_bounds(rows: &[CensusRow], bounds: Vec<LinearBound>) -> Vec<BoundCheck> {
    bounds
        .into_iter()
        .map(|bound| {
            let violations = rows
                .iter()
                .filter(|r| r.n >= bound.min_n && !bound.holds(r.n, r.pp))
                .map(|r| r.n)
                .collect();
            let equality_at = rows
                .iter()
                .filter(|r| bound.tight(r.n, r.pp))
                .map(|r| r.n)
                .collect();
            BoundCheck {
                bound,
                violations,
                equality_at,
            }
        })
        .collect()
}

pub fn verify_bounds(
    name: &str,
    n_lo: usize,
    n_hi: usize,
    policy: &StabilizationPolicy,
) -> Result<BoundsReport> {
    let bounds = bounds_for(name)?;
    let rows = builtin_census(name, n_lo, n_hi, policy)?;
    let checks = check_bounds(&rows, bounds);
    Ok(BoundsReport {
        sequence: name.to_string(),
        rows,
        checks,
    })
}

/// A length where a closed form disagrees with the measured census.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mismatch {
    pub n: usize,
    pub census: usize,
    pub formula: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TribonacciComparison {
    pub rows: Vec<CensusRow>,
    /// Closed form as stated, standard `T_k`.
    pub standard_mismatches: Vec<Mismatch>,
    /// Closed form as stated, literal `T_k`.
    pub literal_mismatches: Vec<Mismatch>,
    /// First-case threshold `(T_{k+1} + T_{k-1} - 1)/2`, standard `T_k`.
    pub amended_mismatches: Vec<Mismatch>,
}

fn mismatches(rows: &[CensusRow], f: impl Fn(usize) -> u64) -> Vec<Mismatch> {
    rows.iter()
        .filter_map(|r| {
            let v = f(r.n);
            (v != r.pp as u64).then_some(Mismatch {
                n: r.n,
                census: r.pp,
                formula: v,
            })
        })
        .collect()
}

/// Compares the Tribonacci census with the closed form under both
/// Tribonacci-number conventions. Disagreements are reported, not raised.
pub fn compare_tribonacci(
    n_lo: usize,
    n_hi: usize,
    policy: &StabilizationPolicy,
) -> Result<TribonacciComparison> {
    let rows = builtin_census("tribonacci", n_lo, n_hi, policy)?;
    let standard_mismatches = mismatches(&rows, |n| formulas::f_tr(n, TribonacciConvention::Standard));
    let literal_mismatches = mismatches(&rows, |n| formulas::f_tr(n, TribonacciConvention::Literal));
    let amended_mismatches =
        mismatches(&rows, |n| formulas::f_tr_amended(n, TribonacciConvention::Standard));
    Ok(TribonacciComparison {
        rows,
        standard_mismatches,
        literal_mismatches,
        amended_mismatches,
    })
}
