//! Recomputes the family closed form, both constructions, the odd-boundary
//! property and the r-cycle grid, printing one line per group.
//!
//! ```text
//! cargo run --release --example verify_paper
//! ```

use montesinos::verify::verify_paper;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for report in verify_paper()? {
        println!("{}", report.summary());
    }
    Ok(())
}
