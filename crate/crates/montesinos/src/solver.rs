//! Edgepath systems: one edgepath per tangle, glued by the global condition
//! that all endpoints have the same sheet count and horizontal position and
//! that their vertical positions sum to zero.
//!
//! For a fixed choice of paths the condition is a homogeneous linear system
//! in the `2n` endpoint weights. It is solved exactly over the rationals;
//! when the solution space is a single ray the primitive integer vector on
//! it is the minimal solution, and every other solution is a multiple.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::arith::{lcm, Fraction};
use crate::diagram::{endpoint_coordinates, endpoint_forms, DiagramPoint};
use crate::edgepath::{enumerate_edgepaths, Edgepath, Tangle};
use crate::error::{Error, Result};

/// How a knot was written, so that it prints back the same way.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Notation {
    /// `P(t1,…,tn)`, tangles `1/ti`.
    Pretzel,
    /// `M(p1/q1,…,pn/qn)`.
    Montesinos,
}

/// A Montesinos knot `K(p1/q1, …, pn/qn)` with `n ≥ 3`. The constructors
/// also accept parameters that close up to a link (see
/// [`MontesinosKnot::component_count`]); the edgepath machinery applies to
/// both, but surface invariants are only derived for knots.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MontesinosKnot {
    pub tangles: Vec<Tangle>,
    pub notation: Notation,
}

impl MontesinosKnot {
    pub fn new(tangles: Vec<Tangle>) -> Result<Self> {
        if tangles.len() < 3 {
            return Err(Error::Arity(tangles.len()));
        }
        Ok(MontesinosKnot {
            tangles,
            notation: Notation::Montesinos,
        })
    }

    /// The pretzel knot `P(t1,…,tn)`; every `|ti|` must be at least 2.
    pub fn pretzel(ts: &[i64]) -> Result<Self> {
        if ts.len() < 3 {
            return Err(Error::Arity(ts.len()));
        }
        if let Some(t) = ts.iter().find(|t| t.abs() < 2) {
            return Err(Error::InvalidArgument(format!(
                "pretzel parameter {t} must satisfy |t| >= 2"
            )));
        }
        let tangles = ts.iter().map(|&t| Tangle::from_ints(1, t)).collect();
        Ok(MontesinosKnot {
            tangles,
            notation: Notation::Pretzel,
        })
    }

    pub fn len(&self) -> usize {
        self.tangles.len()
    }

    /// Number of components of the closed-up tangle sum. Each tangle `p/q`
    /// joins its four ends according to the parities of `p` and `q`: top to
    /// top (`p` even), left to left (`q` even) or diagonally (both odd).
    pub fn component_count(&self) -> usize {
        const NW: usize = 0;
        const NE: usize = 1;
        const SW: usize = 2;
        const SE: usize = 3;
        let n = self.tangles.len();
        let end = |i: usize, corner: usize| 4 * (i % n) + corner;
        let mut partner = vec![[usize::MAX; 2]; 4 * n];
        let mut join = |a: usize, b: usize| {
            let slot = |v: &mut [usize; 2], x| {
                if v[0] == usize::MAX {
                    v[0] = x
                } else {
                    v[1] = x
                }
            };
            slot(&mut partner[a], b);
            slot(&mut partner[b], a);
        };
        for (i, t) in self.tangles.iter().enumerate() {
            let (p_even, q_even) = (t.slope.numer().is_even(), t.slope.denom().is_even());
            let (a, b) = match (p_even, q_even) {
                (true, _) => ((NW, NE), (SW, SE)),
                (_, true) => ((NW, SW), (NE, SE)),
                _ => ((NW, SE), (NE, SW)),
            };
            join(end(i, a.0), end(i, a.1));
            join(end(i, b.0), end(i, b.1));
            // Ends of neighboring tangles meet; the last closes up to the first.
            join(end(i, NE), end(i + 1, NW));
            join(end(i, SE), end(i + 1, SW));
        }
        let mut seen = vec![false; 4 * n];
        let mut count = 0;
        for start in 0..4 * n {
            if seen[start] {
                continue;
            }
            count += 1;
            let (mut prev, mut cur) = (usize::MAX, start);
            while !seen[cur] {
                seen[cur] = true;
                let next = if partner[cur][0] != prev {
                    partner[cur][0]
                } else {
                    partner[cur][1]
                };
                prev = cur;
                cur = next;
            }
        }
        count
    }

    pub fn is_knot(&self) -> bool {
        self.component_count() == 1
    }

    pub fn is_empty(&self) -> bool {
        self.tangles.is_empty()
    }
}

impl fmt::Display for MontesinosKnot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = match self.notation {
            Notation::Pretzel => self
                .tangles
                .iter()
                .map(|t| {
                    let sign = if t.slope.is_negative() { "-" } else { "" };
                    format!("{sign}{}", t.slope.denom())
                })
                .collect(),
            Notation::Montesinos => self.tangles.iter().map(|t| t.to_string()).collect(),
        };
        let tag = if self.notation == Notation::Pretzel {
            'P'
        } else {
            'M'
        };
        write!(f, "{tag}({})", parts.join(","))
    }
}

impl fmt::Debug for MontesinosKnot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for MontesinosKnot {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Endpoint weights of one path: `x` on the near end of the final edge,
/// `y` on the far end. For a constant path `x` counts arcs and `y` circles.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Weights {
    #[serde(serialize_with = "crate::arith::serialize_bigint")]
    pub x: BigInt,
    #[serde(serialize_with = "crate::arith::serialize_bigint")]
    pub y: BigInt,
}

impl Weights {
    pub fn new(x: impl Into<BigInt>, y: impl Into<BigInt>) -> Self {
        Weights {
            x: x.into(),
            y: y.into(),
        }
    }
}

impl fmt::Display for Weights {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

/// A solved edgepath system.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct EdgepathSystem {
    pub knot: MontesinosKnot,
    pub paths: Vec<Edgepath>,
    pub weights: Vec<Weights>,
    #[serde(serialize_with = "crate::arith::serialize_bigint")]
    pub sheets: BigInt,
}

impl EdgepathSystem {
    /// Endpoint coordinates of every path at its weights.
    pub fn endpoints(&self) -> Result<Vec<DiagramPoint>> {
        self.paths
            .iter()
            .zip(&self.weights)
            .map(|(p, w)| endpoint_coordinates(p, &w.x, &w.y))
            .collect()
    }

    /// Substitutes the weights back into the gluing equations and returns
    /// the residues `(max |a_i − s|, max |b_i − b_0|, |Σ c_i|)`; all three
    /// are zero for a valid system.
    pub fn residues(&self) -> Result<(BigInt, BigInt, BigInt)> {
        let pts = self.endpoints()?;
        let ra = pts
            .iter()
            .map(|p| (&p.a - &self.sheets).abs())
            .max()
            .unwrap_or_default();
        let rb = pts
            .iter()
            .map(|p| (&p.b - &pts[0].b).abs())
            .max()
            .unwrap_or_default();
        let rc = pts.iter().map(|p| p.c.clone()).sum::<BigInt>().abs();
        Ok((ra, rb, rc))
    }

    /// True iff no integer `k > 1` divides every weight (and the sheet count).
    pub fn is_primitive(&self) -> bool {
        let g = self
            .weights
            .iter()
            .fold(self.sheets.clone(), |g, w| g.gcd(&w.x).gcd(&w.y));
        g.is_one()
    }

    pub fn path_strings(&self) -> Vec<String> {
        self.paths.iter().map(|p| p.to_string()).collect()
    }
}

/// Why a path combination produced no system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Rejection {
    /// Horizontal ranges of the endpoints cannot overlap.
    Pruned,
    /// Only the zero solution.
    Trivial,
    /// A solution space of this dimension (> 1); not sampled.
    Degenerate(usize),
    /// The solution ray leaves the non-negative orthant.
    NotPositive,
    /// The solution has no sheets.
    NoSheets,
    /// A non-constant path ends exactly at the near vertex of its final
    /// edge; the same surface arises from the shorter path.
    EmptyFinalEdge(usize),
}

/// The result of solving one path combination.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SolveOutcome {
    Solved(EdgepathSystem),
    Rejected(Rejection),
}

/// Solves the gluing equations for one path per tangle; `None` if there is
/// no admissible positive solution.
pub fn solve_system(knot: &MontesinosKnot, paths: &[Edgepath]) -> Result<Option<EdgepathSystem>> {
    Ok(match solve_system_detailed(knot, paths)? {
        SolveOutcome::Solved(s) => Some(s),
        SolveOutcome::Rejected(_) => None,
    })
}

/// As [`solve_system`], reporting why a combination was rejected.
pub fn solve_system_detailed(knot: &MontesinosKnot, paths: &[Edgepath]) -> Result<SolveOutcome> {
    let n = knot.len();
    if paths.len() != n {
        return Err(Error::InvalidArgument(format!(
            "{} paths for {} tangles",
            paths.len(),
            n
        )));
    }
    for (t, p) in knot.tangles.iter().zip(paths) {
        if p.start().slope != t.slope {
            return Err(Error::InvalidArgument(format!(
                "path {p} does not start at tangle {t}"
            )));
        }
    }
    if !b_ranges_overlap(paths) {
        return Ok(SolveOutcome::Rejected(Rejection::Pruned));
    }

    let forms: Vec<(DiagramPoint, DiagramPoint)> = paths.iter().map(endpoint_forms).collect();
    let cols = 2 * n;
    let mut rows: Vec<Vec<Fraction>> = Vec::new();
    let entry = |i: usize, pick: fn(&DiagramPoint) -> &BigInt| -> Vec<Fraction> {
        let mut r = vec![Fraction::zero(); cols];
        r[2 * i] = Fraction::integer(pick(&forms[i].0).clone());
        r[2 * i + 1] = Fraction::integer(pick(&forms[i].1).clone());
        r
    };
    let pick_a: fn(&DiagramPoint) -> &BigInt = |p| &p.a;
    let pick_b: fn(&DiagramPoint) -> &BigInt = |p| &p.b;
    let pick_c: fn(&DiagramPoint) -> &BigInt = |p| &p.c;
    for i in 1..n {
        for pick in [pick_a, pick_b] {
            let (r0, ri) = (entry(0, pick), entry(i, pick));
            rows.push(r0.iter().zip(&ri).map(|(u, v)| u - v).collect());
        }
    }
    let mut csum = vec![Fraction::zero(); cols];
    for i in 0..n {
        for (acc, v) in csum.iter_mut().zip(entry(i, pick_c)) {
            *acc = &*acc + &v;
        }
    }
    rows.push(csum);

    let basis = nullspace(rows, cols);
    if basis.is_empty() {
        return Ok(SolveOutcome::Rejected(Rejection::Trivial));
    }
    if basis.len() > 1 {
        return Ok(SolveOutcome::Rejected(Rejection::Degenerate(basis.len())));
    }
    let mut v = primitive_integer_vector(&basis[0]);
    if v.iter().all(|x| !x.is_positive()) {
        v.iter_mut().for_each(|x| *x = -&*x);
    }
    if v.iter().any(|x| x.is_negative()) {
        return Ok(SolveOutcome::Rejected(Rejection::NotPositive));
    }
    let weights: Vec<Weights> = (0..n)
        .map(|i| Weights {
            x: v[2 * i].clone(),
            y: v[2 * i + 1].clone(),
        })
        .collect();
    for (i, (p, w)) in paths.iter().zip(&weights).enumerate() {
        if !p.is_constant() && w.y.is_zero() {
            return Ok(SolveOutcome::Rejected(Rejection::EmptyFinalEdge(i)));
        }
    }
    let sheets = &forms[0].0.a * &weights[0].x + &forms[0].1.a * &weights[0].y;
    if !sheets.is_positive() {
        return Ok(SolveOutcome::Rejected(Rejection::NoSheets));
    }
    Ok(SolveOutcome::Solved(EdgepathSystem {
        knot: knot.clone(),
        paths: paths.to_vec(),
        weights,
        sheets,
    }))
}

/// Minimal sheet count `s'` for which every fractional position `y_i/s` on
/// a final edge (or circle ratio on a constant path) becomes integral after
/// scaling by `s'`.
pub fn sheet_count(system: &EdgepathSystem) -> BigInt {
    let g = system
        .weights
        .iter()
        .fold(system.sheets.clone(), |g, w| g.gcd(&w.y));
    &system.sheets / g
}

/// An edge bound that never truncates a sweep of `knot`.
pub fn exhaustive_depth(knot: &MontesinosKnot) -> usize {
    knot.tangles
        .iter()
        .map(Tangle::max_path_edges)
        .max()
        .unwrap_or(1)
}

/// Every solvable system of `knot` whose paths have at most `max_edges`
/// edges, in the lexicographic order of the per-tangle path menus.
pub fn sweep(knot: &MontesinosKnot, max_edges: usize) -> Result<Vec<EdgepathSystem>> {
    let menus: Vec<Vec<Edgepath>> = knot
        .tangles
        .iter()
        .map(|t| enumerate_edgepaths(t, max_edges))
        .collect::<Result<_>>()?;
    let mut out = Vec::new();
    let mut idx = vec![0usize; menus.len()];
    loop {
        let combo: Vec<Edgepath> = idx.iter().zip(&menus).map(|(&i, m)| m[i].clone()).collect();
        if let Some(s) = solve_system(knot, &combo)? {
            out.push(s);
        }
        // Odometer increment, last tangle fastest.
        let mut k = menus.len();
        loop {
            if k == 0 {
                return Ok(out);
            }
            k -= 1;
            idx[k] += 1;
            if idx[k] < menus[k].len() {
                break;
            }
            idx[k] = 0;
        }
    }
}

/// Range of `b/a` an endpoint can reach: a convex combination of the final
/// edge's two horizontal positions, or `[q − 1, ∞)` for a constant path
/// (circles push the point right without adding sheets).
fn b_range(path: &Edgepath) -> (Fraction, Option<Fraction>) {
    let (fa, fb) = endpoint_forms(path);
    if fb.a.is_zero() {
        return (Fraction::integer(fa.b), None);
    }
    let (u, v) = (Fraction::integer(fa.b), Fraction::integer(fb.b));
    if u <= v {
        (u, Some(v))
    } else {
        (v, Some(u))
    }
}

fn b_ranges_overlap(paths: &[Edgepath]) -> bool {
    let ranges: Vec<_> = paths.iter().map(b_range).collect();
    let lo = ranges.iter().map(|r| r.0.clone()).max().expect("non-empty");
    ranges.iter().filter_map(|r| r.1.clone()).all(|hi| hi >= lo)
}

/// Basis of the rational nullspace of `rows` (each of length `cols`), via
/// reduced row echelon form. Each basis vector has a 1 in its free column.
pub fn nullspace(mut rows: Vec<Vec<Fraction>>, cols: usize) -> Vec<Vec<Fraction>> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = Fraction::integer(1) / &rows[r][c];
        rows[r] = rows[r].iter().map(|x| x * &inv).collect();
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                let pivot_row = rows[r].clone();
                for (x, y) in rows[i].iter_mut().zip(&pivot_row) {
                    *x = &*x - &(&f * y);
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![Fraction::zero(); cols];
            v[fc] = Fraction::integer(1);
            for (ri, &pc) in pivots.iter().enumerate() {
                v[pc] = -&rows[ri][fc];
            }
            v
        })
        .collect()
}

/// Clears denominators and divides out the content of a rational vector.
pub fn primitive_integer_vector(v: &[Fraction]) -> Vec<BigInt> {
    let l = v.iter().fold(BigInt::one(), |l, x| lcm(&l, x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&l / x.denom())).collect();
    let g = ints.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if g.is_zero() {
        return ints;
    }
    ints.into_iter().map(|x| x / &g).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn paths(spec: &[&str]) -> Vec<Edgepath> {
        spec.iter().map(|s| s.parse().unwrap()).collect()
    }

    #[test]
    fn component_counts() {
        let c = |ts: &[i64]| MontesinosKnot::pretzel(ts).unwrap().component_count();
        assert_eq!(c(&[-2, 3, 7]), 1);
        assert_eq!(c(&[-3, 3, 7]), 1);
        assert_eq!(c(&[3, 5, 7]), 1);
        assert_eq!(c(&[-4, 3, -4]), 2);
        assert_eq!(c(&[-4, 4, 5]), 2);
        assert_eq!(c(&[3, 5, 7, 9]), 2);
        assert_eq!(c(&[2, 2, 2]), 3);
        // Integer shifts summing to zero keep the knot.
        let m = |v: &[(i64, i64)]| {
            MontesinosKnot::new(v.iter().map(|&(p, q)| Tangle::from_ints(p, q)).collect()).unwrap()
        };
        assert_eq!(m(&[(3, 4), (-2, 3), (-1, 4)]).component_count(), 2);
        assert_eq!(m(&[(-1, 2), (-2, 3), (8, 7)]).component_count(), 1);
    }

    #[test]
    fn three_path_system_of_p337() {
        let k = MontesinosKnot::pretzel(&[-3, 3, 7]).unwrap();
        let ps = paths(&["<-1/3>-><-1/2>", "<1/3>-><0/1>", "<1/7>-><0/1>"]);
        let s = solve_system(&k, &ps).unwrap().unwrap();
        assert_eq!(
            s.weights,
            vec![Weights::new(2, 2), Weights::new(3, 1), Weights::new(1, 3)]
        );
        assert_eq!(s.sheets, 4.into());
        assert_eq!(sheet_count(&s), 4.into());
        let z = BigInt::zero();
        assert_eq!(s.residues().unwrap(), (z.clone(), z.clone(), z));
        assert!(s.is_primitive());
    }

    #[test]
    fn p3323_sheets() {
        let k = MontesinosKnot::pretzel(&[-3, 3, 23]).unwrap();
        let ps = paths(&["<-1/3>-><-1/2>", "<1/3>-><0/1>", "<1/23>-><0/1>"]);
        let s = solve_system(&k, &ps).unwrap().unwrap();
        assert_eq!(s.sheets, 12.into());
        let k = MontesinosKnot::pretzel(&[-3, 3, 15]).unwrap();
        let ps = paths(&["<-1/3>-><-1/2>", "<1/3>-><0/1>", "<1/15>-><0/1>"]);
        assert_eq!(
            sheet_count(&solve_system(&k, &ps).unwrap().unwrap()),
            8.into()
        );
    }

    #[test]
    fn all_constant_paths_have_no_solution() {
        let k = MontesinosKnot::pretzel(&[-3, 3, 7]).unwrap();
        let ps = paths(&["<-1/3>", "<1/3>", "<1/7>"]);
        assert_eq!(solve_system(&k, &ps).unwrap(), None);
    }

    #[test]
    fn below_the_bound_is_rejected() {
        // p = 4 needs q >= 7; at q = 5 the near-end weight of the first path
        // would be negative.
        let k = MontesinosKnot::pretzel(&[-4, 4, 5]).unwrap();
        let ps = paths(&["<-1/4>-><-1/3>", "<1/4>-><0/1>", "<1/5>-><0/1>"]);
        assert_eq!(solve_system(&k, &ps).unwrap(), None);
    }

    #[test]
    fn wrong_arity_or_start_is_an_error() {
        let k = MontesinosKnot::pretzel(&[-3, 3, 7]).unwrap();
        assert!(solve_system(&k, &paths(&["<-1/3>", "<1/3>"])).is_err());
        assert!(solve_system(&k, &paths(&["<1/3>", "<1/3>", "<1/7>"])).is_err());
    }

    #[test]
    fn nullspace_small() {
        let f = |p| Fraction::from_ints(p, 1);
        let ns = nullspace(vec![vec![f(1), f(1), f(0)], vec![f(0), f(1), f(1)]], 3);
        assert_eq!(ns.len(), 1);
        assert_eq!(
            primitive_integer_vector(&ns[0]),
            vec![1.into(), (-1).into(), 1.into()]
        );
    }

    #[test]
    fn display_round_trip_forms() {
        assert_eq!(
            MontesinosKnot::pretzel(&[-2, 3, 7]).unwrap().to_string(),
            "P(-2,3,7)"
        );
        let m = MontesinosKnot::new(vec![
            Tangle::from_ints(-2, 5),
            Tangle::from_ints(1, 3),
            Tangle::from_ints(3, 7),
        ])
        .unwrap();
        assert_eq!(m.to_string(), "M(-2/5,1/3,3/7)");
    }
}
