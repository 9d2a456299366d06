//! The Hatcher–Oertel diagram: vertices `<p/q>`, the Farey edges joining
//! them, and the homogeneous `(a, b, c)` coordinates of weighted points.
//!
//! The diagram is never materialized; vertices and edges are generated on
//! demand from Farey structure.
//!
//! Coordinates per unit weight:
//!
//! * an arc vertex `<p/q>` contributes `(1, q − 1, p)`: one sheet, horizontal
//!   position `q − 1`, vertical position `p`;
//! * a circle at `<p/q>` (the far end of a constant path) contributes
//!   `(0, q, p)`: it adds no sheet but moves the point along the horizontal
//!   edge towards the circle vertex.
//!
//! A point dividing an edge `<α|β>` with weights `(x, y)` is then
//! `x·f(α) + y·f(β)`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::arith::{is_farey_neighbor, Fraction};
use crate::edgepath::Edgepath;
use crate::error::{Error, Result};

/// A vertex `<p/q>` of the diagram.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vertex {
    pub slope: Fraction,
}

impl Vertex {
    pub fn new(slope: Fraction) -> Self {
        Vertex { slope }
    }

    pub fn from_ints(p: i64, q: i64) -> Self {
        Vertex::new(Fraction::from_ints(p, q))
    }

    /// The `(1, q − 1, p)` form of one arc sheet at this vertex.
    pub fn arc_form(&self) -> DiagramPoint {
        let q = self.slope.denom();
        DiagramPoint {
            a: BigInt::one(),
            b: q - BigInt::one(),
            c: self.slope.numer().clone(),
        }
    }

    /// The `(0, q, p)` form of one circle at this vertex.
    pub fn circle_form(&self) -> DiagramPoint {
        DiagramPoint {
            a: BigInt::zero(),
            b: self.slope.denom().clone(),
            c: self.slope.numer().clone(),
        }
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}>", self.slope)
    }
}

impl fmt::Debug for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Vertex {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum EdgeKind {
    /// Joins Farey neighbors; carries twist.
    Farey,
    /// Motion at constant horizontal position; carries no twist.
    Vertical,
}

/// A directed edge of the diagram.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Edge {
    pub from: Vertex,
    pub to: Vertex,
    pub kind: EdgeKind,
}

impl Edge {
    /// A Farey edge; fails unless the endpoints are Farey neighbors.
    pub fn farey(from: Vertex, to: Vertex) -> Result<Self> {
        if !is_farey_neighbor(&from.slope, &to.slope) {
            return Err(Error::InvalidArgument(format!(
                "{from} and {to} are not Farey neighbors"
            )));
        }
        Ok(Edge {
            from,
            to,
            kind: EdgeKind::Farey,
        })
    }

    /// A vertical edge; both ends must share a denominator, hence the same
    /// horizontal position.
    pub fn vertical(from: Vertex, to: Vertex) -> Result<Self> {
        if from.slope.denom() != to.slope.denom() || from == to {
            return Err(Error::InvalidArgument(format!(
                "{from} and {to} do not span a vertical edge"
            )));
        }
        Ok(Edge {
            from,
            to,
            kind: EdgeKind::Vertical,
        })
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}|{}>", self.from.slope, self.to.slope)
    }
}

impl fmt::Debug for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Homogeneous endpoint coordinates: `a` is the sheet count, `b` the
/// horizontal position (equalized across tangles), `c` the vertical
/// position (summed to zero across tangles).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct DiagramPoint {
    #[serde(serialize_with = "crate::arith::serialize_bigint")]
    pub a: BigInt,
    #[serde(serialize_with = "crate::arith::serialize_bigint")]
    pub b: BigInt,
    #[serde(serialize_with = "crate::arith::serialize_bigint")]
    pub c: BigInt,
}

impl DiagramPoint {
    pub fn scale(&self, k: &BigInt) -> DiagramPoint {
        DiagramPoint {
            a: &self.a * k,
            b: &self.b * k,
            c: &self.c * k,
        }
    }

    pub fn add(&self, o: &DiagramPoint) -> DiagramPoint {
        DiagramPoint {
            a: &self.a + &o.a,
            b: &self.b + &o.b,
            c: &self.c + &o.c,
        }
    }
}

/// The unit forms `(f(α), f(β))` whose `(x, y)`-combination is the endpoint
/// of `path`: the final edge's two vertices, or the vertex and its circle
/// for a constant path.
pub fn endpoint_forms(path: &Edgepath) -> (DiagramPoint, DiagramPoint) {
    match path.final_edge() {
        Some(e) => (e.from.arc_form(), e.to.arc_form()),
        None => (path.start().arc_form(), path.start().circle_form()),
    }
}

/// Endpoint of `path` with weight `x` on the near end of its final edge and
/// `y` on the far end.
pub fn endpoint_coordinates(path: &Edgepath, x: &BigInt, y: &BigInt) -> Result<DiagramPoint> {
    if x.is_zero() && y.is_zero() {
        return Err(Error::InvalidArgument(
            "endpoint weights must not both be zero".into(),
        ));
    }
    if x < &BigInt::zero() || y < &BigInt::zero() {
        return Err(Error::InvalidArgument(
            "endpoint weights must be non-negative".into(),
        ));
    }
    let (fa, fb) = endpoint_forms(path);
    Ok(fa.scale(x).add(&fb.scale(y)))
}
