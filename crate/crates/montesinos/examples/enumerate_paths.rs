//! Admissible edgepaths of one tangle, with the r-value of each final edge.
//!
//! ```text
//! cargo run --example enumerate_paths -- 2/7
//! ```

use montesinos::{enumerate_edgepaths, r_value, Tangle};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let t: Tangle = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "2/7".into())
        .parse()?;
    for path in enumerate_edgepaths(&t, t.max_path_edges())? {
        match path.final_edge() {
            Some(e) => println!("{path:<40} r = {}", r_value(&e)?),
            None => println!("{path:<40} constant"),
        }
    }
    Ok(())
}
