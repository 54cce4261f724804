//! Recompute the published design examples with a verdict per number.

use scsi_core::tables::{paper_tables, Verdict};

fn main() -> scsi_core::Result<()> {
    let t = paper_tables()?;
    println!("{t}");
    for row in &t.rows {
        for c in row.cells() {
            if c.verdict == Verdict::DocumentedDiscrepancy {
                println!("\n{}: computed {}, printed {}", row.example, c.computed, c.published);
            }
        }
    }
    Ok(())
}
