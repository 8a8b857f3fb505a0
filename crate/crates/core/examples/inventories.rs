// Words with finitely many palindromic periodicities: list them all.

use palper::census::{max_pp_length, pp_inventory, StabilizationPolicy};
use palper::sequences::builtin;

pub fn run() -> palper::Result<Vec<(String, usize, usize)>> {
    let policy = StabilizationPolicy::default();
    let mut out = Vec::new();
    for name in ["rudin_shapiro", "paperfolding", "tau_f", "phi_f"] {
        let spec = builtin(name)?;
        let inv = pp_inventory(&spec, &policy)?;
        let longest = max_pp_length(&spec, &policy)?;
        out.push((name.to_string(), inv.len(), longest.max_len));
    }
    Ok(out)
}

#[allow(dead_code)]
fn main() -> palper::Result<()> {
    for (name, total, longest) in run()? {
        println!("{name}: {total} palindromic periodicities, longest {longest}");
    }
    // The Thue–Morse word has infinitely many; the inventory refuses.
    let err = pp_inventory(&builtin("thue_morse")?, &StabilizationPolicy::default()).unwrap_err();
    println!("thue_morse: {err}");
    Ok(())
}
