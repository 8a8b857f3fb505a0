// Burrows–Wheeler transforms and perfectly clustered words.

use palper::bwt::{bwt, is_perfectly_clustered};
use palper::periodicity::is_symmetric;
use palper::word::all_words;

/// Perfectly clustered `k`-ary words of length `n` that use every letter.
pub fn clustered_words(k: u8, n: usize) -> palper::Result<Vec<String>> {
    let mut out = Vec::new();
    for x in all_words(k, n) {
        let uses_all = (0..k).all(|a| x.contains(&a));
        if uses_all && is_perfectly_clustered(&x, k)? {
            assert!(is_symmetric(&x).is_some());
            out.push(palper::word::render(&x));
        }
    }
    Ok(out)
}

pub fn run() -> palper::Result<()> {
    println!("BWT(0120) = {}", bwt(&"0120".parse::<palper::Word>()?)?);
    println!("clustered ternary words of length 5: {:?}", clustered_words(3, 5)?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> palper::Result<()> {
    run()
}
