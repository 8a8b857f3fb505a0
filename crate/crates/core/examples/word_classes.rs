// Classify every binary word of a given length: Sturmian, trapezoidal,
// rich, closed, palindromic periodicity.

use palper::classes::{is_closed, is_finite_sturmian, is_rich, is_trapezoidal, pathological_pair};
use palper::periodicity::is_pp;
use palper::word::{all_words, w};

#[derive(Debug, Default, PartialEq, Eq)]
pub struct Tally {
    pub words: usize,
    pub sturmian: usize,
    pub trapezoidal: usize,
    pub rich: usize,
    pub closed: usize,
    pub pp: usize,
}

pub fn run(n: usize) -> palper::Result<Tally> {
    let mut t = Tally::default();
    for x in all_words(2, n) {
        t.words += 1;
        t.sturmian += usize::from(is_finite_sturmian(&x)?);
        t.trapezoidal += usize::from(is_trapezoidal(&x)?);
        t.rich += usize::from(is_rich(&x));
        t.closed += usize::from(is_closed(&x)?);
        t.pp += usize::from(is_pp(&x));
    }
    Ok(t)
}

#[allow(dead_code)]
fn main() -> palper::Result<()> {
    let n = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(10);
    println!("length {n}: {:?}", run(n)?);

    let pair = pathological_pair(&w("00001010"))?.expect("not Sturmian");
    println!("00001010 has pathological pair ({}, {})", pair.zero_factor(), pair.one_factor());
    Ok(())
}
