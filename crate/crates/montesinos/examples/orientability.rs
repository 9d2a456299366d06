//! The two orientability tests side by side on the `P(−p, p, q)` family:
//! the parity criterion and the sign propagation through the saddles.
//!
//! ```text
//! cargo run --example orientability
//! ```

use montesinos::surface::orientable_by_parity;
use montesinos::verify::family_system;
use montesinos::{orientable_by_propagation, solve_system};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    println!("{:<14} {:>7} {:>12}", "knot", "parity", "propagation");
    for (p, q) in [(3, 7), (3, 9), (3, 15), (5, 21), (5, 23), (7, 43), (7, 49)] {
        let (knot, paths) = family_system(p, q)?;
        let system = solve_system(&knot, &paths)?.ok_or("no solution")?;
        let parity = orientable_by_parity(&system)?;
        let propagation = orientable_by_propagation(&system)?;
        println!("{:<14} {parity:>7} {propagation:>12}", knot.to_string());
    }
    Ok(())
}
