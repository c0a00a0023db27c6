//! The r = 0 stratification tables for 4x4 and 3x4 coefficient matrices.

use steinerlab::cli::{cmd_table, RunConfig, TableKind};

fn main() -> steinerlab::Result<()> {
    let cfg = RunConfig::default();
    for kind in [TableKind::Jordan4, TableKind::Jordan3x4] {
        let report = cmd_table(kind, &cfg)?;
        print!("{}", report.text);
        for c in report.failures() {
            println!(
                "differs from reference: {} (expected {}, got {})",
                c.name, c.expected, c.got
            );
        }
        println!();
    }
    Ok(())
}
