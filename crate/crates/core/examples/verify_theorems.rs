//! Runs every statement with its default parameters and prints a summary.
//!
//! `cargo run --release --example verify_theorems`

use blockspec::verify::{run, TheoremId, VerifyOptions};

fn main() -> blockspec::Result<()> {
    let opts = VerifyOptions {
        seed: 7,
        ..Default::default()
    };
    println!(
        "{:<5} {:>7} {:>8} {:>5} {:>5} {:>10}  result",
        "id", "checked", "excluded", "ties", "viol", "ms"
    );
    for id in TheoremId::ALL {
        let r = run(id, &opts)?;
        println!(
            "{:<5} {:>7} {:>8} {:>5} {:>5} {:>10}  {}",
            r.theorem,
            r.checked,
            r.excluded,
            r.ties,
            r.violations.len(),
            r.elapsed_ms,
            if r.passed() { "ok" } else { "VIOLATED" }
        );
        if let Some(v) = r.violations.first() {
            println!(
                "      first violation: lhs {:.10} rhs {:.10} ({})",
                v.lhs, v.rhs, v.note
            );
        }
    }
    Ok(())
}
