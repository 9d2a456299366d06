//! Builds a knot carrying an orientable candidate surface with `b`
//! boundary components and slope denominator `q`, for `b` even.
//!
//! ```text
//! cargo run --example realize -- 6 5
//! ```

use montesinos::output::render_realization;
use montesinos::{realize, Format};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1).map(|s| s.parse::<u64>());
    let b = args.next().transpose()?.unwrap_or(6);
    let q = args.next().transpose()?.unwrap_or(5);
    print!("{}", render_realization(&realize(b, q)?, Format::Table)?);
    Ok(())
}
