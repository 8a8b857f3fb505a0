//! Reproducibility checklist: runs all thirteen criteria and prints one
//! line per criterion. Exits nonzero if any criterion fails.
//!
//! `PALPER_ACCEPTANCE=quick` shrinks the exhaustive ranges; the default runs
//! the full tier including the long binary search.
//!
//! Besides the library's own checks, a few values are re-derived here with
//! oracles that share no code with the crate.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::Instant;

use palper::sequences::builtin;
use palper::verify::{self, CriterionResult, Tier, VerifyOptions};

fn is_pal(s: &[u8]) -> bool {
    s.iter().eq(s.iter().rev())
}

/// Literal definition: prefix of (ps)^ω with p, s palindromes, |x| >= |ps|.
fn oracle_pp(x: &[u8]) -> bool {
    let n = x.len();
    (1..=n).any(|q| {
        (0..=q).any(|m| {
            let (p, s) = (&x[..m], &x[m..q]);
            is_pal(p) && is_pal(s) && x.iter().enumerate().all(|(i, &c)| c == x[i % q])
        })
    })
}

fn words(n: usize) -> impl Iterator<Item = Vec<u8>> {
    (0u32..1 << n).map(move |b| (0..n).map(|i| ((b >> (n - 1 - i)) & 1) as u8).collect())
}

/// Independent recounts; returns extra detail lines for the criterion.
fn cross_checks(id: u8, quick: bool) -> Vec<(bool, String)> {
    let mut out = Vec::new();
    match id {
        6 => {
            // Direct period-doubling rule: pd[i] = 1 unless v2(i+1) is odd.
            let pd: Vec<u8> = (1u64..=4096).map(|i| u8::from(i.trailing_zeros() % 2 == 0)).collect();
            let lib = builtin("period_doubling").unwrap().prefix(4096).unwrap();
            out.push((pd == lib.symbols(), "direct rule reproduces the period-doubling prefix".into()));
            let mut ok = true;
            for n in 1..=20 {
                let set: BTreeSet<&[u8]> = pd.windows(n).collect();
                let count = set.into_iter().filter(|f| oracle_pp(f)).count() as u64;
                ok &= count == palper::formulas::f_pd(n);
            }
            out.push((ok, "naive recount matches the closed form for n <= 20".into()));
        }
        12 => {
            let max = if quick { 12 } else { 16 };
            let got: Vec<u64> = (1..=max).map(|n| words(n).filter(|x| oracle_pp(x)).count() as u64).collect();
            out.push((
                got[..] == verify::BINARY_PP_COUNTS[..max],
                format!("definition-level count agrees for n <= {max}"),
            ));
        }
        _ => {}
    }
    out
}

fn main() -> ExitCode {
    let quick = std::env::var("PALPER_ACCEPTANCE").is_ok_and(|v| v == "quick");
    let opts = if quick {
        VerifyOptions::quick()
    } else {
        VerifyOptions { tier: Tier::Full, deep: true }
    };
    let start = Instant::now();
    let mut results: Vec<CriterionResult> = verify::run_all(opts);
    for r in &mut results {
        for (ok, what) in cross_checks(r.id, quick) {
            r.passed &= ok;
            r.details.push(format!("{} {what} (test oracle)", if ok { "ok  " } else { "FAIL" }));
        }
    }
    let mut failed = 0;
    for r in &results {
        println!("{r}");
        if !r.passed {
            failed += 1;
            for d in &r.details {
                println!("    {d}");
            }
        }
    }
    println!(
        "acceptance: {}/{} passed ({:?} tier, {:.1}s)",
        results.len() - failed,
        results.len(),
        opts.tier,
        start.elapsed().as_secs_f64()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
