//! Exact Hatcher–Oertel machinery for Montesinos and pretzel knots.
//!
//! The pipeline runs in five stages, each its own module:
//!
//! 1. [`arith`] — arbitrary-precision fractions with `∞ = 1/0`, Farey
//!    adjacency, continued fractions and Stern–Brocot parents.
//! 2. [`diagram`] — vertices, edges and `(a, b, c)` coordinates in the
//!    Hatcher–Oertel diagram.
//! 3. [`edgepath`] — enumeration and checking of admissible edgepaths per
//!    tangle, and r-values of final edges.
//! 4. [`solver`] — the gluing system on a choice of one path per tangle,
//!    solved exactly for minimal integer weights.
//! 5. [`surface`] and [`orientation`] — twist, slope denominator, boundary
//!    count, Euler characteristic, the r-cycle incompressibility screen and
//!    two independent orientability tests.
//!
//! [`realize`] ties them together: knot notation, per-knot slope sweeps and
//! the constructor that, for any even `b ≥ 2` and any `q ≥ 1`, produces a
//! pretzel knot carrying an orientable candidate surface with `b` boundary
//! components and slope denominator `q`.
//!
//! ```
//! use montesinos::{parse_knot, slopes};
//!
//! let knot = parse_knot("P(-3,3,7)").unwrap();
//! let surfaces = slopes(&knot, 8).unwrap();
//! assert!(surfaces.iter().any(|s| s.boundary_components == 4.into()));
//! ```

pub mod arith;
pub mod diagram;
pub mod edgepath;
pub mod error;
pub mod orientation;
pub mod output;
pub mod realize;
pub mod solver;
pub mod surface;
pub mod verify;

pub use arith::Fraction;
pub use diagram::{DiagramPoint, Edge, EdgeKind, Vertex};
pub use edgepath::{check_edgepath, enumerate_edgepaths, r_value, Edgepath, Tangle};
pub use error::{Error, Result};
pub use orientation::{orientable_by_propagation, PropagationOptions};
pub use output::Format;
pub use realize::{parse_knot, realize, slopes, Construction, RealizationResult};
pub use solver::{solve_system, sweep, EdgepathSystem, MontesinosKnot, Weights};
pub use surface::{analyze, CandidateSurface, Incompressibility, Orientability, SurfaceRecord};
