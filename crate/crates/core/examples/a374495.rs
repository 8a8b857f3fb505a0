// Number of binary words of length n that are palindromic periodicities.

use palper::search::count_binary_pp_words;

pub fn run(max: usize) -> palper::Result<Vec<u64>> {
    (1..=max).map(count_binary_pp_words).collect()
}

#[allow(dead_code)]
fn main() -> palper::Result<()> {
    let max = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(21);
    println!("n,count");
    for (i, c) in run(max)?.into_iter().enumerate() {
        println!("{},{c}", i + 1);
    }
    Ok(())
}
