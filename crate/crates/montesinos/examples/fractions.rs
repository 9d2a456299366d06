//! Exact fractions: Farey adjacency, continued fractions and Stern–Brocot
//! parents.
//!
//! ```text
//! cargo run --example fractions -- 7/11
//! ```

use montesinos::arith::{
    continued_fraction, from_continued_fraction, is_farey_neighbor, stern_brocot_parents,
};
use montesinos::Fraction;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let x: Fraction = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "7/11".into())
        .parse()?;
    let terms = continued_fraction(&x);
    let shown: Vec<String> = terms.iter().map(|t| t.to_string()).collect();
    println!(
        "{x} = [{}] -> {}",
        shown.join("; "),
        from_continued_fraction(&terms)
    );
    for parent in stern_brocot_parents(&x) {
        println!(
            "parent {parent} (Farey neighbor: {})",
            is_farey_neighbor(&x, &parent)
        );
    }
    Ok(())
}
