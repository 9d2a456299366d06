//! Every invariant of the candidate surface of one system: twist, slope
//! denominator, boundary count, Euler characteristic, genus and the
//! r-cycle screen.
//!
//! ```text
//! cargo run --example analyze_surface -- 5 61
//! ```

use montesinos::surface::r_cycle;
use montesinos::verify::family_system;
use montesinos::{analyze, solve_system};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1).map(|s| s.parse::<i64>());
    let p = args.next().transpose()?.unwrap_or(5);
    let q = args.next().transpose()?.unwrap_or(61);
    let (knot, paths) = family_system(p, q)?;
    let system = solve_system(&knot, &paths)?.ok_or("no solution")?;
    let s = analyze(&system)?;
    println!("{knot}: {}", system.path_strings().join("  "));
    println!(
        "  twist {}  slope denominator {}",
        s.twist, s.slope_denominator
    );
    println!(
        "  boundary components {}  chi {}",
        s.boundary_components, s.euler_characteristic
    );
    println!(
        "  genus {}",
        s.genus.map_or("undefined".into(), |g| g.to_string())
    );
    let cycle: Vec<String> = r_cycle(&system)
        .unwrap_or_default()
        .iter()
        .map(|r| r.to_string())
        .collect();
    println!(
        "  r-cycle ({})  screen {}",
        cycle.join(", "),
        s.incompressible
    );
    Ok(())
}
