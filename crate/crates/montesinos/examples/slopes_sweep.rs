//! Sweeps every edgepath system of one knot and prints the candidate
//! surfaces it carries.
//!
//! ```text
//! cargo run --example slopes_sweep -- "P(-3,3,7)" [max-edges]
//! ```

use montesinos::solver::exhaustive_depth;
use montesinos::{output, parse_knot, slopes, Format};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let knot = parse_knot(&args.next().unwrap_or_else(|| "P(-3,3,7)".into()))?;
    let max_edges = args
        .next()
        .map(|s| s.parse())
        .transpose()?
        .unwrap_or_else(|| exhaustive_depth(&knot));
    let surfaces = slopes(&knot, max_edges)?;
    let records: Vec<_> = surfaces.iter().map(|s| s.record()).collect();
    print!("{}", output::render_surfaces(&records, Format::Table)?);
    Ok(())
}
