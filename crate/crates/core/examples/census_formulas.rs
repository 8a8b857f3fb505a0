// Palindromic-periodicity census of automatic words, compared against the
// closed forms; writes CSV to stdout.

use palper::census::{builtin_census, compare_tribonacci, verify_bounds, write_csv, StabilizationPolicy};

pub fn run(out: &mut impl std::io::Write) -> palper::Result<()> {
    let policy = StabilizationPolicy::default();
    let rows = builtin_census("thue_morse", 3, 24, &policy)?;
    write_csv(&rows, &mut *out).expect("csv write");

    let bounds = verify_bounds("period_doubling", 1, 64, &policy)?;
    for c in &bounds.checks {
        writeln!(out, "# {}: equality at {:?}", c.bound, c.equality_at).unwrap();
    }

    let cmp = compare_tribonacci(1, 60, &policy)?;
    let ns: Vec<usize> = cmp.standard_mismatches.iter().map(|m| m.n).collect();
    writeln!(out, "# tribonacci closed form as stated differs at {ns:?}").unwrap();
    Ok(())
}

#[allow(dead_code)]
fn main() -> palper::Result<()> {
    run(&mut std::io::stdout().lock())
}
