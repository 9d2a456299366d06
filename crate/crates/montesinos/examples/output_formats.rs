//! The same sweep rendered as a table, as CSV and as JSON.
//!
//! ```text
//! cargo run --example output_formats -- "P(-2,3,7)"
//! ```

use montesinos::output::render_surfaces;
use montesinos::solver::exhaustive_depth;
use montesinos::{parse_knot, slopes, Format};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let knot = parse_knot(
        &std::env::args()
            .nth(1)
            .unwrap_or_else(|| "P(-2,3,7)".into()),
    )?;
    let records: Vec<_> = slopes(&knot, exhaustive_depth(&knot))?
        .iter()
        .map(|s| s.record())
        .collect();
    for format in [Format::Table, Format::Csv, Format::Json] {
        println!("{}", render_surfaces(&records, format)?);
    }
    Ok(())
}
