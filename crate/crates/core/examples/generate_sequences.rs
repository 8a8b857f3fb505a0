// Prefixes of the builtin infinite words, plus a custom morphism.

use palper::sequences::{builtin, Morphism, SequenceSpec, BUILTIN_NAMES};

pub fn run(len: usize) -> palper::Result<Vec<(String, String)>> {
    let mut out = Vec::new();
    for name in BUILTIN_NAMES {
        out.push((name.to_string(), builtin(name)?.prefix(len)?.to_string()));
    }
    // Any letter-to-word map whose seed image starts with the seed gives a fixed point.
    let custom = SequenceSpec::FixedPoint {
        morphism: Morphism::from_images(&["01", "12", "20"])?,
        seed: 0,
    };
    out.push(("0->01,1->12,2->20".into(), custom.prefix(len)?.to_string()));
    Ok(out)
}

#[allow(dead_code)]
fn main() -> palper::Result<()> {
    for (name, prefix) in run(32)? {
        println!("{name:>20}  {prefix}");
    }
    Ok(())
}
