// Breadth-first search for long words with few palindromic periodicities.

use palper::search::{bfs_longest, periodic_pp_set, ternary_families, verify_structural_forms, AlphabetMode};
use palper::word::w;

pub fn run() -> palper::Result<()> {
    let r = bfs_longest(5, 20, AlphabetMode::Growing)?;
    println!("<= 5 over any alphabet: longest {} ({:?})", r.length_reached, r.extremal);

    let r = bfs_longest(29, 40, AlphabetMode::Fixed(2))?;
    println!("<= 29 over binary: longest {}, closed {}", r.length_reached, r.closed);

    println!("(012)^ω: {:?}", periodic_pp_set(&w("012"))?);

    let report = verify_structural_forms(8, 9, 14, AlphabetMode::Growing, &ternary_families())?;
    println!("threshold 8 survivors by length: {:?}", report.survivors);
    println!("{}", serde_json::to_string(&report).expect("json"));
    Ok(())
}

#[allow(dead_code)]
fn main() -> palper::Result<()> {
    run()
}
