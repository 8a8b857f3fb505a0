// Periods, fractional roots, symmetry and the palindromic-periodicity
// witness for a handful of words.
//
// ```text
// cargo run --example word_properties [WORD...]
// ```

use palper::periodicity::{fractional_root, is_pal_periodicity, is_symmetric, periods};
use palper::Word;

pub fn describe(word: &Word) -> palper::Result<String> {
    let root = fractional_root(word)?;
    let symmetric = match is_symmetric(word) {
        Some(m) => format!("symmetric (cut at {m})"),
        None => "not symmetric".to_string(),
    };
    let pp = match is_pal_periodicity(word) {
        Some(t) => format!("pp with p={} s={}", t.p, t.s),
        None => "not a palindromic periodicity".to_string(),
    };
    Ok(format!(
        "{word}: periods {:?}, root {root}, {symmetric}, {pp}",
        periods(word)?
    ))
}

pub fn run(words: &[&str]) -> palper::Result<Vec<String>> {
    words.iter().map(|s| describe(&s.parse()?)).collect()
}

#[allow(dead_code)]
fn main() -> palper::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let words: Vec<&str> = if args.is_empty() {
        vec!["121344312134", "0100110", "010110", "010110010110", "0120120"]
    } else {
        args.iter().map(String::as_str).collect()
    };
    for line in run(&words)? {
        println!("{line}");
    }
    Ok(())
}
