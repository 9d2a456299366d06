//! Solves the gluing equations for one hand-picked path per tangle and
//! checks the solution by substitution.
//!
//! ```text
//! cargo run --example solve_system
//! ```

use montesinos::solver::{solve_system_detailed, SolveOutcome};
use montesinos::{parse_knot, Edgepath};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let knot = parse_knot("P(-3,3,7)")?;
    let paths: Vec<Edgepath> = ["<-1/3>-><-1/2>", "<1/3>-><0/1>", "<1/7>-><0/1>"]
        .iter()
        .map(|s| s.parse())
        .collect::<Result<_, _>>()?;
    match solve_system_detailed(&knot, &paths)? {
        SolveOutcome::Solved(system) => {
            for (path, (w, end)) in paths
                .iter()
                .zip(system.weights.iter().zip(system.endpoints()?))
            {
                println!(
                    "{path:<18} weights {w}  endpoint ({}, {}, {})",
                    end.a, end.b, end.c
                );
            }
            println!(
                "sheets {}  residues {:?}",
                system.sheets,
                system.residues()?
            );
        }
        SolveOutcome::Rejected(why) => println!("no solution: {why:?}"),
    }
    Ok(())
}
