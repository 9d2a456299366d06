//! Per-tangle edgepaths: minimal, monotone paths in the diagram from the
//! tangle vertex towards the vertical axis, ending with a fractional final
//! edge.
//!
//! Only the right-hand region of the diagram is explored: every step moves
//! from `<p/q>` to one of its two Stern–Brocot parents, so the horizontal
//! coordinate `(q − 1)/q` strictly decreases and paths stop at integer
//! vertices. Vertical moves along the axis and endings at `<∞>` are not
//! generated.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::arith::{is_farey_neighbor, stern_brocot_parents, Fraction};
use crate::diagram::{Edge, EdgeKind, Vertex};
use crate::error::{Error, Result};

/// A rational tangle `p/q` of a Montesinos knot.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tangle {
    pub slope: Fraction,
}

impl Tangle {
    pub fn new(slope: Fraction) -> Result<Self> {
        if slope.is_infinite() {
            return Err(Error::InvalidArgument(
                "a tangle fraction must be finite".into(),
            ));
        }
        Ok(Tangle { slope })
    }

    pub fn from_ints(p: i64, q: i64) -> Self {
        Tangle::new(Fraction::from_ints(p, q)).expect("finite tangle")
    }

    pub fn vertex(&self) -> Vertex {
        Vertex::new(self.slope.clone())
    }

    /// An edge bound that never truncates enumeration: every step lowers
    /// the denominator, so no path of `p/q` has more than `q − 1` edges.
    /// Never below 1, so it is always a valid `max_edges`.
    pub fn max_path_edges(&self) -> usize {
        self.slope.denom().to_usize().unwrap_or(usize::MAX).max(2) - 1
    }
}

impl fmt::Display for Tangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.slope)
    }
}

impl fmt::Debug for Tangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Tangle {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Tangle::new(s.parse()?)
    }
}

/// A path of Farey edges given by its vertex sequence. The final edge
/// carries the fractional endpoint, whose position is left to the solver;
/// a single-vertex path is the constant path.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edgepath {
    vertices: Vec<Vertex>,
}

impl Edgepath {
    /// Builds a path from its vertices; consecutive vertices must be Farey
    /// neighbors. Admissibility (minimality, monotonicity) is checked
    /// separately by [`check_edgepath`].
    pub fn from_vertices(vertices: Vec<Vertex>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::InvalidArgument(
                "an edgepath needs a start vertex".into(),
            ));
        }
        for w in vertices.windows(2) {
            Edge::farey(w[0].clone(), w[1].clone())?;
        }
        Ok(Edgepath { vertices })
    }

    pub fn constant(v: Vertex) -> Self {
        Edgepath { vertices: vec![v] }
    }

    pub fn start(&self) -> &Vertex {
        &self.vertices[0]
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn is_constant(&self) -> bool {
        self.vertices.len() == 1
    }

    /// Number of edges, counting the fractional final edge as one.
    pub fn len(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.is_constant()
    }

    /// Whether the endpoint may sit strictly inside the final edge.
    pub fn fractional_final(&self) -> bool {
        !self.is_constant()
    }

    pub fn edges(&self) -> Vec<Edge> {
        self.vertices
            .windows(2)
            .map(|w| Edge {
                from: w[0].clone(),
                to: w[1].clone(),
                kind: EdgeKind::Farey,
            })
            .collect()
    }

    pub fn final_edge(&self) -> Option<Edge> {
        self.edges().pop()
    }
}

impl fmt::Display for Edgepath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.vertices.iter().map(|v| v.to_string()).collect();
        f.write_str(&parts.join("->"))
    }
}

impl fmt::Debug for Edgepath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Edgepath {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl FromStr for Edgepath {
    type Err = Error;

    /// Parses the arrow-joined form `<1/7>-><0/1>`.
    fn from_str(s: &str) -> Result<Self> {
        let mut vs = Vec::new();
        let mut offset = 0;
        for part in s.split("->") {
            let t = part.trim();
            let inner = t
                .strip_prefix('<')
                .and_then(|t| t.strip_suffix('>'))
                .ok_or_else(|| Error::Parse {
                    input: s.to_string(),
                    position: offset,
                    message: "expected <p/q>".into(),
                })?;
            vs.push(Vertex::new(inner.parse()?));
            offset += part.len() + 2;
        }
        Edgepath::from_vertices(vs)
    }
}

/// Which admissibility condition a path fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PathViolation {
    /// Does not start at the tangle vertex.
    WrongStart,
    /// Two consecutive vertices are not joined by a Farey edge.
    NotAnEdge(usize),
    /// Stops, retraces, or runs along two sides of one triangle.
    NotMinimal(usize),
    /// Fails to move strictly leftwards, or moves along the axis.
    NotMonotone(usize),
}

/// Checks conditions (E1), (E2), (E4) edge by edge, independently of the
/// enumerator.
pub fn check_edgepath(t: &Tangle, path: &Edgepath) -> std::result::Result<(), PathViolation> {
    let vs = path.vertices();
    if vs[0].slope != t.slope {
        return Err(PathViolation::WrongStart);
    }
    for i in 1..vs.len() {
        let (a, b) = (&vs[i - 1].slope, &vs[i].slope);
        if a == b {
            return Err(PathViolation::NotMinimal(i));
        }
        if !is_farey_neighbor(a, b) {
            return Err(PathViolation::NotAnEdge(i));
        }
        if b.denom() >= a.denom() {
            return Err(PathViolation::NotMonotone(i));
        }
        if i >= 2 && (vs[i - 2].slope == *b || is_farey_neighbor(&vs[i - 2].slope, b)) {
            return Err(PathViolation::NotMinimal(i));
        }
    }
    Ok(())
}

/// All admissible edgepaths of `t` with at most `max_edges` edges, in
/// depth-first order: the constant path first, then every path extended
/// through the smaller parent before the larger one.
pub fn enumerate_edgepaths(t: &Tangle, max_edges: usize) -> Result<Vec<Edgepath>> {
    if max_edges == 0 {
        return Err(Error::InvalidArgument("max_edges must be positive".into()));
    }
    let mut out = vec![Edgepath::constant(t.vertex())];
    let mut stack = vec![t.vertex()];
    extend(&mut stack, max_edges, &mut out);
    Ok(out)
}

fn extend(stack: &mut Vec<Vertex>, max_edges: usize, out: &mut Vec<Edgepath>) {
    if stack.len() > max_edges {
        return;
    }
    let last = stack.last().expect("non-empty").slope.clone();
    for w in stern_brocot_parents(&last) {
        // Two sides of one triangle: the new vertex would neighbor the
        // vertex two steps back.
        if stack.len() >= 2 && is_farey_neighbor(&stack[stack.len() - 2].slope, &w) {
            continue;
        }
        stack.push(Vertex::new(w));
        out.push(Edgepath {
            vertices: stack.clone(),
        });
        extend(stack, max_edges, out);
        stack.pop();
    }
}

/// The r-value `q − v` of a final edge `<p/q|u/v>`.
pub fn r_value(final_edge: &Edge) -> Result<BigInt> {
    if final_edge.kind == EdgeKind::Vertical {
        return Err(Error::InvalidArgument(
            "vertical edges carry no r-value".into(),
        ));
    }
    Ok(final_edge.from.slope.denom() - final_edge.to.slope.denom())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn strs(t: &Tangle, k: usize) -> Vec<String> {
        enumerate_edgepaths(t, k)
            .unwrap()
            .iter()
            .map(|p| p.to_string())
            .collect()
    }

    #[test]
    fn unit_tangle_paths() {
        let got = strs(&Tangle::from_ints(1, 7), 8);
        assert!(got.contains(&"<1/7>-><0/1>".to_string()));
        assert!(got.contains(&"<1/7>-><1/6>".to_string()));
        assert_eq!(got[0], "<1/7>");
    }

    #[test]
    fn integer_tangle_is_constant_only() {
        assert_eq!(strs(&Tangle::from_ints(0, 1), 5), vec!["<0/1>"]);
    }

    #[test]
    fn one_third() {
        let got = strs(&Tangle::from_ints(1, 3), 4);
        assert_eq!(
            got,
            vec![
                "<1/3>",
                "<1/3>-><0/1>",
                "<1/3>-><1/2>",
                "<1/3>-><1/2>-><1/1>"
            ]
        );
    }

    #[test]
    fn negative_tangle_mirrors_positive() {
        let pos = enumerate_edgepaths(&Tangle::from_ints(2, 7), 8).unwrap();
        let neg = enumerate_edgepaths(&Tangle::from_ints(-2, 7), 8).unwrap();
        let mirrored: Vec<String> = pos
            .iter()
            .map(|p| {
                let vs = p
                    .vertices()
                    .iter()
                    .map(|v| Vertex::new(-&v.slope))
                    .collect();
                Edgepath::from_vertices(vs).unwrap().to_string()
            })
            .collect();
        let mut a = mirrored;
        let mut b: Vec<String> = neg.iter().map(|p| p.to_string()).collect();
        a.sort();
        b.sort();
        assert_eq!(a, b);
    }

    #[test]
    fn rejects_zero_depth() {
        assert!(enumerate_edgepaths(&Tangle::from_ints(1, 3), 0).is_err());
    }

    #[test]
    fn r_values() {
        let e = |a: (i64, i64), b: (i64, i64)| {
            Edge::farey(Vertex::from_ints(a.0, a.1), Vertex::from_ints(b.0, b.1)).unwrap()
        };
        for p in 3..10 {
            assert_eq!(r_value(&e((1, p), (1, p - 1))).unwrap(), 1.into());
            assert_eq!(r_value(&e((1, p), (0, 1))).unwrap(), (p - 1).into());
        }
        assert_eq!(r_value(&e((1, 7), (0, 1))).unwrap(), 6.into());
        let v = Edge::vertical(Vertex::from_ints(1, 3), Vertex::from_ints(2, 3)).unwrap();
        assert!(r_value(&v).is_err());
    }

    #[test]
    fn checker_flags_triangle_and_direction() {
        let t = Tangle::from_ints(2, 5);
        let p: Edgepath = "<2/5>-><1/2>-><1/3>".parse().unwrap();
        assert_eq!(check_edgepath(&t, &p), Err(PathViolation::NotMonotone(2)));
        let p: Edgepath = "<2/5>-><1/3>-><1/2>".parse().unwrap();
        assert!(check_edgepath(&t, &p).is_err());
        let p: Edgepath = "<2/5>-><1/2>-><0/1>".parse().unwrap();
        assert_eq!(check_edgepath(&t, &p), Ok(()));
        let p: Edgepath = "<2/5>-><1/2>-><1/1>".parse().unwrap();
        assert_eq!(check_edgepath(&t, &p), Ok(()));
        let p: Edgepath = "<2/5>-><1/3>-><0/1>".parse().unwrap();
        assert_eq!(check_edgepath(&t, &p), Ok(()));
    }

    #[test]
    fn path_parse_round_trip() {
        let p: Edgepath = "<1/7>-><0/1>".parse().unwrap();
        assert_eq!(p.to_string(), "<1/7>-><0/1>");
        assert!("<1/7>-><1/2>".parse::<Edgepath>().is_err());
        assert!("1/7".parse::<Edgepath>().is_err());
    }
}
