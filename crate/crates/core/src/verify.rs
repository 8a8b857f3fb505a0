//! The reproducibility checklist: every published claim the crate can
//! check on finite evidence, grouped into numbered criteria.
//!
//! Each criterion returns a [`CriterionResult`] instead of panicking, so the
//! same code drives the `verify-paper` subcommand and the test suite.

use std::collections::HashSet;
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::bwt::{bwt, is_perfectly_clustered};
use crate::census::{
    builtin_census, compare_tribonacci, pp_census, pp_inventory, rs_pf_max_length, verify_bounds,
    StabilizationPolicy,
};
use crate::classes::{is_closed, is_finite_sturmian, is_rich, is_trapezoidal};
use crate::error::Result;
use crate::formulas::{f_pd, f_tm, f_tr, TribonacciConvention};
use crate::periodicity::{fractional_root, is_pal_periodicity, is_pp, is_symmetric};
use crate::search::{
    bfs_longest, count_binary_pp_words, periodic_pp_set, ternary_families,
    verify_structural_forms, AlphabetMode,
};
use crate::sequences::{builtin, check_no_kth_power, factor};
use crate::word::{all_words, render, w, Word};

/// How much exhaustive work to do.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Tier {
    Quick,
    Full,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct VerifyOptions {
    pub tier: Tier,
    /// Also run the long binary breadth-first search.
    pub deep: bool,
}

impl VerifyOptions {
    pub fn quick() -> Self {
        VerifyOptions { tier: Tier::Quick, deep: false }
    }

    pub fn full() -> Self {
        VerifyOptions { tier: Tier::Full, deep: false }
    }

    fn pick(&self, quick: usize, full: usize) -> usize {
        match self.tier {
            Tier::Quick => quick,
            Tier::Full => full,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CriterionResult {
    pub id: u8,
    pub title: &'static str,
    pub passed: bool,
    /// One line per individual check, prefixed `ok` or `FAIL`.
    pub details: Vec<String>,
}

impl fmt::Display for CriterionResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "[{status}] criterion {:>2}: {}", self.id, self.title)
    }
}

/// Collects named checks for one criterion.
struct Checks {
    details: Vec<String>,
    passed: bool,
}

impl Checks {
    fn new() -> Self {
        Checks { details: Vec::new(), passed: true }
    }

    fn check(&mut self, ok: bool, what: impl Into<String>) {
        let what = what.into();
        self.passed &= ok;
        self.details.push(format!("{} {what}", if ok { "ok  " } else { "FAIL" }));
    }

    /// Records an error from a library call as a failed check.
    fn attempt<T>(&mut self, what: &str, r: Result<T>) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.check(false, format!("{what}: {e}"));
                None
            }
        }
    }

    fn finish(self, id: u8, title: &'static str) -> CriterionResult {
        CriterionResult { id, title, passed: self.passed, details: self.details }
    }
}

/// Direct reading of the definition: some period `p` whose prefix splits
/// into two palindromes. No border tables, no palindrome index.
pub fn naive_is_pp(x: &[u8]) -> bool {
    let n = x.len();
    let pal = |s: &[u8]| s.iter().eq(s.iter().rev());
    (1..=n).any(|p| (0..n - p).all(|t| x[t] == x[t + p]) && (0..=p).any(|m| pal(&x[..m]) && pal(&x[m..p])))
}

/// Exhaustive scan over all `k`-ary words of lengths `1..=max_len`;
/// returns up to `limit` words failing `pred`, and how many were tested.
fn counterexamples<F>(k: u8, max_len: usize, limit: usize, pred: F) -> (Vec<Vec<u8>>, u64)
where
    F: Fn(&[u8]) -> bool + Sync,
{
    let mut bad = Vec::new();
    let mut tested = 0u64;
    for n in 1..=max_len {
        let total = (k as u64).pow(n as u32);
        tested += total;
        let found: Vec<Vec<u8>> = (0..total)
            .into_par_iter()
            .map_init(
                || vec![0u8; n],
                |buf, mut idx| {
                    for slot in buf.iter_mut().rev() {
                        *slot = (idx % k as u64) as u8;
                        idx /= k as u64;
                    }
                    (!pred(buf)).then(|| buf.clone())
                },
            )
            .flatten()
            .take_any(limit)
            .collect();
        bad.extend(found);
        if bad.len() >= limit {
            bad.truncate(limit);
            break;
        }
    }
    bad.sort();
    (bad, tested)
}

fn describe(bad: &[Vec<u8>]) -> String {
    if bad.is_empty() {
        "none".to_string()
    } else {
        bad.iter().map(|b| render(b)).collect::<Vec<_>>().join(", ")
    }
}

pub fn definitional_examples() -> CriterionResult {
    let mut c = Checks::new();
    let x = w("121344312134");
    let wit = is_pal_periodicity(&x);
    c.check(
        wit.as_ref().is_some_and(|t| t.p == w("121") && t.s == w("3443")),
        format!("121344312134 witness {:?}", wit.map(|t| (render(&t.p), render(&t.s)))),
    );
    c.check(is_pp(&w("010110")), "010110 is a palindromic periodicity");
    c.check(!is_pp(&w("010110010110")), "its square 010110010110 is not");
    let y = w("0100110");
    let root = fractional_root(&y).ok();
    c.check(is_pp(&y), "0100110 is a palindromic periodicity");
    c.check(
        root.as_ref() == Some(&w("010011")) && is_symmetric(&w("010011")).is_none(),
        format!("fractional root of 0100110 is {:?}, not symmetric", root.map(|r| render(&r))),
    );
    // e, n, t -> 0, 1, 2
    let entente = w("0120120");
    let root = fractional_root(&entente).ok();
    c.check(
        root.as_ref() == Some(&w("012")),
        format!("entente has fractional root of length {:?}", root.map(|r| r.len())),
    );
    c.finish(1, "definitional examples")
}

pub fn sturmian_words_are_pp(opts: VerifyOptions) -> CriterionResult {
    let mut c = Checks::new();
    let max = opts.pick(14, 18);
    let (bad, tested) = counterexamples(2, max, 5, |x| !is_finite_sturmian(x).unwrap() || is_pp(x));
    c.check(
        bad.is_empty(),
        format!("Sturmian binary words of length <= {max} ({tested} words): counterexamples {}", describe(&bad)),
    );
    c.finish(2, "every finite Sturmian word is a palindromic periodicity")
}

pub fn trapezoidal_roots_symmetric(opts: VerifyOptions) -> CriterionResult {
    let mut c = Checks::new();
    let max = opts.pick(14, 18);
    let root_symmetric = |x: &[u8]| fractional_root(x).is_ok_and(|r| is_symmetric(&r).is_some());
    let (bad, tested) = counterexamples(2, max, 5, |x| !is_trapezoidal(x).unwrap() || root_symmetric(x));
    c.check(
        bad.is_empty(),
        format!("trapezoidal words of length <= {max} ({tested} words): counterexamples {}", describe(&bad)),
    );
    let x = w("010001000100010010010010010");
    let root = fractional_root(&x).unwrap();
    c.check(
        is_trapezoidal(&x).unwrap() && !is_finite_sturmian(&x).unwrap(),
        "010001000100010010010010010 is trapezoidal and not Sturmian",
    );
    let mut rebuilt = root.to_vec();
    rebuilt.extend_from_slice(&[0, 1, 0]);
    c.check(
        root.len() == 24 && rebuilt == *x && is_symmetric(&root).is_some(),
        format!("its fractional root {} has length {} and is symmetric", root, root.len()),
    );
    c.finish(3, "trapezoidal words have a symmetric fractional root")
}

pub fn hierarchy(opts: VerifyOptions) -> CriterionResult {
    let mut c = Checks::new();
    let max = opts.pick(12, 16);
    let root_symmetric = |x: &[u8]| fractional_root(x).is_ok_and(|r| is_symmetric(&r).is_some());
    let mut strict = [None::<Word>, None, None, None];
    let mut bad = [0u64; 5];
    for n in 1..=max {
        for x in all_words(2, n) {
            let st = is_finite_sturmian(&x).unwrap();
            let tr = is_trapezoidal(&x).unwrap();
            let rs = root_symmetric(&x);
            let pp = is_pp(&x);
            let rich = is_rich(&x);
            bad[0] += u64::from(st && !tr);
            bad[1] += u64::from(tr && !rs);
            bad[2] += u64::from(rs && !pp);
            bad[3] += u64::from(tr && !rich);
            bad[4] += u64::from(rich && is_closed(&x).unwrap() && !pp);
            let witnesses = [tr && !st, rs && !tr, pp && !rs, !pp];
            for (slot, hit) in strict.iter_mut().zip(witnesses) {
                if hit && slot.is_none() {
                    *slot = Some(Word::from_vec_unchecked(x.clone()));
                }
            }
        }
    }
    let names = [
        "Sturmian => trapezoidal",
        "trapezoidal => symmetric root",
        "symmetric root => palindromic periodicity",
        "trapezoidal => rich",
        "rich and closed => palindromic periodicity",
    ];
    for (name, count) in names.iter().zip(bad) {
        c.check(count == 0, format!("{name} (length <= {max}): {count} counterexamples"));
    }
    let labels = [
        "trapezoidal, not Sturmian",
        "symmetric root, not trapezoidal",
        "pp, root not symmetric",
        "not pp",
    ];
    for (label, found) in labels.iter().zip(&strict) {
        c.check(found.is_some(), format!("shortest {label}: {:?}", found.as_ref().map(|x| x.to_string())));
    }
    let x = w("0011");
    c.check(is_trapezoidal(&x).unwrap() && !is_finite_sturmian(&x).unwrap(), "0011 trapezoidal, not Sturmian");
    let x = w("0100110");
    c.check(is_pp(&x) && !root_symmetric(&x), "0100110 pp with non-symmetric root");
    let x = w("001011");
    c.check(is_rich(&x) && !is_pp(&x), "001011 rich, not pp");
    let x = w("001001101011");
    c.check(!is_rich(&x) && is_pp(&x), "001001101011 pp, not rich");
    let shortest = (1..=12)
        .flat_map(|n| all_words(2, n))
        .find(|x| is_pp(x) && !is_rich(x));
    c.check(
        shortest.as_deref() == Some(&[0, 0, 1, 0, 0, 1, 1, 0, 1, 0, 1, 1][..]),
        format!("first pp-not-rich word in shortlex order: {:?}", shortest.map(|x| render(&x))),
    );
    c.finish(4, "inclusion hierarchy of binary word classes")
}

pub fn bwt_suite(opts: VerifyOptions) -> CriterionResult {
    let mut c = Checks::new();
    let got = bwt(&w("0120")).map(|b| b.to_string());
    c.check(got.as_deref() == Ok("2001"), format!("BWT(0120) = {got:?}"));
    for (k, max) in [(2u8, opts.pick(11, 14)), (3, opts.pick(8, 14))] {
        let (bad, tested) = counterexamples(k, max, 5, |x| {
            let sym = is_symmetric(x).is_some();
            (!is_perfectly_clustered(x, k).unwrap() || sym) && (!sym || is_pp(x))
        });
        c.check(
            bad.is_empty(),
            format!(
                "{k}-ary words of length <= {max} ({tested} words): clustered => symmetric => pp, counterexamples {}",
                describe(&bad)
            ),
        );
    }
    c.finish(5, "Burrows-Wheeler clustering implies symmetry")
}

fn policy() -> StabilizationPolicy {
    StabilizationPolicy::default()
}

pub fn period_doubling() -> CriterionResult {
    let mut c = Checks::new();
    c.check(f_pd(0) == 0, "n = 0: one empty factor, not counted");
    if let Some(rows) = c.attempt("census", builtin_census("period_doubling", 1, 64, &policy())) {
        let bad: Vec<usize> = rows.iter().filter(|r| r.matches != Some(true)).map(|r| r.n).collect();
        c.check(bad.is_empty(), format!("census = closed form for 1 <= n <= 64, mismatches {bad:?}"));
    }
    if let Some(report) = c.attempt("bounds", verify_bounds("period_doubling", 1, 64, &policy())) {
        // (equality observed from n, expected lengths)
        let expected: [(usize, &[usize]); 2] = [(1, &[3, 6, 12, 24, 48]), (1, &[4, 9, 19, 39])];
        for (check, (from, want)) in report.checks.iter().zip(expected) {
            let eq: Vec<usize> = check.equality_at.iter().copied().filter(|&n| n >= from).collect();
            c.check(
                check.passed() && eq == want,
                format!("{}: violations {:?}, equality at {eq:?}", check.bound, check.violations),
            );
        }
    }
    let pd = builtin("period_doubling").unwrap();
    let a = factor(&pd, 12, 9).unwrap();
    let b = factor(&pd, 7, 9).unwrap();
    let e = factor(&pd, 8, 9).unwrap();
    c.check(a == w("101110111") && is_pp(&a), format!("pd[12..20] = {a} is pp"));
    c.check(b == w("010111011") && !is_pp(&b), format!("pd[7..15] = {b} is not pp"));
    c.check(a == e, format!("pd[8..16] = {e} repeats pd[12..20]"));
    c.finish(6, "period-doubling census and bounds")
}

pub fn thue_morse() -> CriterionResult {
    let mut c = Checks::new();
    if let Some(rows) = c.attempt("census", pp_census(&builtin("thue_morse").unwrap(), 3, 64, &policy())) {
        let bad: Vec<usize> =
            rows.iter().filter(|r| f_tm(r.n).ok() != Some(r.pp as u64)).map(|r| r.n).collect();
        c.check(bad.is_empty(), format!("census = closed form for 3 <= n <= 64, mismatches {bad:?}"));
    }
    if let Some(report) = c.attempt("bounds", verify_bounds("thue_morse", 3, 64, &policy())) {
        // The lower bound is also tight at n = 7, below its stated range;
        // the upper bound's equality family 3·4^k starts below n = 6.
        let expected: [(usize, &[usize]); 2] = [(12, &[31]), (3, &[3, 12, 48])];
        for (check, (from, want)) in report.checks.iter().zip(expected) {
            let eq: Vec<usize> = check.equality_at.iter().copied().filter(|&n| n >= from).collect();
            c.check(
                check.passed() && eq == want,
                format!("{}: violations {:?}, equality at {eq:?}", check.bound, check.violations),
            );
        }
    }
    c.finish(7, "Thue-Morse census and bounds")
}

pub fn rudin_shapiro_paperfolding() -> CriterionResult {
    let mut c = Checks::new();
    let cases = [
        ("rudin_shapiro", 24, "011110110111100010000100", 334),
        ("paperfolding", 21, "011000110111001001110", 255),
    ];
    for (name, max_len, witness, total) in cases {
        if let Some(r) = c.attempt(name, rs_pf_max_length(name, &policy())) {
            c.check(
                r.max_len == max_len && r.witnesses.contains(&w(witness)),
                format!("{name}: longest pp factor length {}, witnesses include {witness}", r.max_len),
            );
        }
        if let Some(inv) = c.attempt(name, pp_inventory(&builtin(name).unwrap(), &policy())) {
            c.check(inv.len() == total, format!("{name}: {} pp factors in total", inv.len()));
        }
    }
    c.finish(8, "Rudin-Shapiro and paperfolding inventories")
}

pub fn tribonacci() -> CriterionResult {
    let mut c = Checks::new();
    if let Some(cmp) = c.attempt("comparison", compare_tribonacci(1, 50, &policy())) {
        let over: Vec<usize> =
            cmp.rows.iter().filter(|r| r.pp > 2 * r.n + 1).map(|r| r.n).collect();
        c.check(over.is_empty(), format!("pp(n) <= 2n+1 for 1 <= n <= 50, violations {over:?}"));
        let pp_at = |n: usize| cmp.rows.iter().find(|r| r.n == n).map(|r| r.pp as u64);
        let std = TribonacciConvention::Standard;
        c.check(
            pp_at(2) == Some(5) && pp_at(3) == Some(5) && f_tr(2, std) == 5 && f_tr(3, std) == 5,
            "census(2) = census(3) = 5 = closed form (standard convention)",
        );
        let flagged: Vec<usize> = cmp.standard_mismatches.iter().map(|m| m.n).collect();
        c.check(true, format!("closed form as stated disagrees at n = {flagged:?}"));
        let amended: Vec<usize> = cmp.amended_mismatches.iter().map(|m| m.n).collect();
        c.check(true, format!("with first threshold (T_(k+1) + T_(k-1) - 1)/2: disagrees at n = {amended:?}"));
    }
    let tr = builtin("tribonacci").unwrap();
    let x = tr.prefix(2000).unwrap();
    let bad = (1..=2000).find(|&n| !is_pp(&x[..n]));
    c.check(bad.is_none(), format!("every prefix up to length 2000 is pp (first failure {bad:?})"));
    c.check(!is_pp(&w("102")), "102 is not pp");
    c.finish(9, "Tribonacci census")
}

pub fn ternary_extremal() -> CriterionResult {
    let mut c = Checks::new();
    if let Some(r) = c.attempt("search", bfs_longest(5, 10, AlphabetMode::Growing)) {
        c.check(
            r.closed && r.length_reached == 5 && r.extremal == [w("00000")],
            format!("threshold 5: closed at {} with {:?}", r.length_reached, r.extremal),
        );
    }
    let expected: Vec<Word> = ["0", "1", "2", "01", "12", "20"].map(w).to_vec();
    if let Some(s) = c.attempt("(012)^ω", periodic_pp_set(&w("012"))) {
        c.check(s == expected, format!("(012)^ω pp factors: {}", join(&s)));
    }
    let tau = builtin("tau_f").unwrap();
    if let Some(inv) = c.attempt("τ(f)", pp_inventory(&tau, &policy())) {
        let want: Vec<Word> = crate::census::shortlex(["0", "1", "2", "01", "12", "20", "00", "001", "200"].map(w));
        c.check(inv == want, format!("τ(f) pp factors: {}", join(&inv)));
    }
    c.check(check_no_kth_power(&tau, 4, 5000).unwrap(), "no 4th power in the length-5000 prefix of τ(f)");
    if let Some(r) = c.attempt(
        "forms",
        verify_structural_forms(8, 9, 14, AlphabetMode::Growing, &ternary_families()),
    ) {
        c.check(
            r.passed(),
            format!("threshold 8, lengths 9..14: survivors {:?}, violations {}", r.survivors, join(&r.violations)),
        );
    }
    c.finish(10, "ternary extremal words")
}

pub const PERIODIC_001011: [&str; 30] = [
    "0", "1", "00", "01", "10", "11", "001", "010", "011", "100", "101", "110", "0010", "0101",
    "0110", "1001", "1011", "1100", "00101", "01011", "01100", "10010", "10110", "11001", "010110",
    "011001", "100101", "0110010", "1011001", "10010110",
];

pub fn binary_extremal(opts: VerifyOptions) -> CriterionResult {
    let mut c = Checks::new();
    if let Some(s) = c.attempt("(001011)^ω", periodic_pp_set(&w("001011"))) {
        let want: HashSet<Word> = PERIODIC_001011.iter().map(|x| w(x)).collect();
        let got: HashSet<Word> = s.iter().cloned().collect();
        c.check(got == want && s.len() == 30, format!("(001011)^ω has {} pp factors", s.len()));
    }
    let phi = builtin("phi_f").unwrap();
    if let Some(inv) = c.attempt("φ(f)", pp_inventory(&phi, &policy())) {
        let longest = inv.last().map_or(0, |x| x.len());
        c.check(inv.len() == 44 && longest == 9, format!("φ(f): {} pp factors, longest {longest}", inv.len()));
    }
    c.check(check_no_kth_power(&phi, 4, 5000).unwrap(), "no 4th power in the length-5000 prefix of φ(f)");
    if opts.deep {
        if let Some(r) = c.attempt("search", bfs_longest(29, 40, AlphabetMode::Fixed(2))) {
            c.check(
                r.closed && r.length_reached == 29 && r.extremal_relabeled == [w(&"0".repeat(29)), w(&"1".repeat(29))],
                format!("binary threshold 29: closed at {}, {} extremal words", r.length_reached, r.extremal_relabeled.len()),
            );
        }
    } else {
        c.details.push("skip binary threshold-29 search (deep tier)".into());
    }
    c.finish(11, "binary extremal words")
}

/// Published counts of binary palindromic periodicities, lengths 1..=21.
pub const BINARY_PP_COUNTS: [u64; 21] = [
    2, 4, 8, 16, 32, 58, 108, 190, 336, 560, 948, 1574, 2568, 4116, 6596, 10444, 16320, 25488, 39216,
    60690, 92204,
];

pub fn binary_counts() -> CriterionResult {
    let mut c = Checks::new();
    let mut wrong = Vec::new();
    let mut below = Vec::new();
    for (i, &want) in BINARY_PP_COUNTS.iter().enumerate() {
        let n = i + 1;
        let got = count_binary_pp_words(n).unwrap();
        if got != want {
            wrong.push((n, got, want));
        }
        if got < 1u64 << n.div_ceil(2) {
            below.push(n);
        }
    }
    c.check(wrong.is_empty(), format!("counts for n = 1..21 match, mismatches {wrong:?}"));
    c.check(below.is_empty(), format!("count(n) >= 2^ceil(n/2), failures {below:?}"));
    c.finish(12, "counting binary palindromic periodicities")
}

pub fn oracle_equivalence(opts: VerifyOptions) -> CriterionResult {
    let mut c = Checks::new();
    for (k, max) in [(2u8, opts.pick(12, 16)), (3, opts.pick(7, 10))] {
        let (bad, tested) = counterexamples(k, max, 5, |x| {
            let fast = is_pal_periodicity(x);
            fast.as_ref().is_some_and(|t| t.certifies(x)) == naive_is_pp(x) && fast.is_some() == naive_is_pp(x)
        });
        c.check(
            bad.is_empty(),
            format!("{k}-ary words of length <= {max} ({tested} words): disagreements {}", describe(&bad)),
        );
    }
    for name in ["period_doubling", "thue_morse", "tribonacci", "rudin_shapiro"] {
        let spec = builtin(name).unwrap();
        let Some(rows) = c.attempt(name, pp_census(&spec, 1, 12, &policy())) else { continue };
        let x = spec.prefix(1 << 13).unwrap();
        let recount: Vec<usize> = (1..=12)
            .map(|n| {
                let mut seen: Vec<&[u8]> = x.windows(n).collect();
                seen.sort();
                seen.dedup();
                seen.into_iter().filter(|f| naive_is_pp(f)).count()
            })
            .collect();
        let census: Vec<usize> = rows.iter().map(|r| r.pp).collect();
        c.check(census == recount, format!("{name} census n <= 12 = naive recount {recount:?}"));
    }
    c.finish(13, "fast decision procedure agrees with the definition")
}

fn join(ws: &[Word]) -> String {
    ws.iter().map(Word::to_string).collect::<Vec<_>>().join(" ")
}

/// Runs every criterion in order.
pub fn run_all(opts: VerifyOptions) -> Vec<CriterionResult> {
    vec![
        definitional_examples(),
        sturmian_words_are_pp(opts),
        trapezoidal_roots_symmetric(opts),
        hierarchy(opts),
        bwt_suite(opts),
        period_doubling(),
        thue_morse(),
        rudin_shapiro_paperfolding(),
        tribonacci(),
        ternary_extremal(),
        binary_extremal(opts),
        binary_counts(),
        oracle_equivalence(opts),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn naive_oracle_examples() {
        assert!(naive_is_pp(&w("121344312134")));
        assert!(!naive_is_pp(&w("102")));
        assert!(!naive_is_pp(&w("010110010110")));
        assert!(!naive_is_pp(&[]));
    }

    #[test]
    fn counterexample_scan_reports_failures() {
        let (bad, tested) = counterexamples(2, 3, 10, |x| x[0] == 0);
        assert_eq!(tested, 2 + 4 + 8);
        assert_eq!(bad.len(), 7);
        assert_eq!(bad[0], vec![1]);
    }

    #[test]
    fn definitional_criterion_passes() {
        let r = definitional_examples();
        assert!(r.passed, "{:?}", r.details);
    }
}
