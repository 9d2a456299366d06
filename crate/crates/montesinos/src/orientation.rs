//! Constructive orientability check for candidate surfaces.
//!
//! Each tangle ball is modelled as a pillowcase, the quotient of the plane
//! by the group generated by π-rotations about the integer lattice points.
//! The four punctures are the classes of `Z²/2Z²`; an arc of slope `p/q` is
//! a lattice segment in direction `(q, p)` and pairs each puncture `c` with
//! `c + (q, p) mod 2`.
//!
//! The surface inside a ball starts as `s` parallel copies of the two arcs
//! of the tangle slope. Every edge of the path attaches saddle bands that
//! turn pairs of arcs into arcs of the next slope. Each band joins the two
//! arc copies nearest to it, runs through the strip between their lines and
//! nests inside the bands already placed. The arcs it creates sit in
//! saddle order, the first-made closest to the new core line. Circles of a
//! constant path enclose the arc of the pair through the origin class.
//!
//! Orientations are tracked as a parity relative to a reference direction
//! on every arc (from the smaller puncture class to the larger). A saddle
//! forces its two arcs to be coherently oriented, and this orientation
//! propagates to the arcs it creates. Adjacent balls are glued along a
//! common circle, which every ball's arcs cross in the same order. Matching
//! crossings must carry the same crossing direction. The surface is
//! orientable iff the resulting parity constraints are consistent.
//!
//! None of the arbitrary conventions affect the verdict: the puncture order
//! defining reference directions, the initial stacking sides and the choice
//! of band side. [`PropagationOptions`] exposes them so tests can check
//! that.

use std::cmp::Ordering;

use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::solver::EdgepathSystem;

type V = (i64, i64);

fn det(a: V, b: V) -> i64 {
    a.0 * b.1 - a.1 * b.0
}

fn neg(a: V) -> V {
    (-a.0, -a.1)
}

fn add(a: V, b: V) -> V {
    (a.0 + b.0, a.1 + b.1)
}

fn sgn(x: i64) -> i64 {
    if x > 0 {
        1
    } else {
        -1
    }
}

/// Puncture class of a lattice point, numbered `x + 2y` with `x, y ∈ {0, 1}`.
fn cls(v: V) -> u8 {
    (v.0.rem_euclid(2) + 2 * v.1.rem_euclid(2)) as u8
}

fn class_point(c: u8) -> V {
    ((c & 1) as i64, (c >> 1) as i64)
}

/// Direction vector `(q, p)` of the slope `p/q`, normalized to `q > 0`.
fn direction(slope: V) -> V {
    let (p, q) = slope;
    if q > 0 {
        (q, p)
    } else {
        (0, 1)
    }
}

/// The two puncture classes joined by an arc, as a bitmask.
type Pair = u8;

fn pair(a: u8, b: u8) -> Pair {
    (1 << a) | (1 << b)
}

fn complement(p: Pair) -> Pair {
    0b1111 & !p
}

fn members(p: Pair) -> [u8; 2] {
    let mut it = (0..4u8).filter(|c| p & (1 << c) != 0);
    [
        it.next().expect("two members"),
        it.next().expect("two members"),
    ]
}

/// Arbitrary conventions of the model; the verdict must not depend on them.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PropagationOptions {
    /// Rank of each puncture class; reference directions run from the
    /// lower-ranked puncture to the higher.
    pub class_rank: [u8; 4],
    /// Stacking sides of the initial arc copies of the pair through the
    /// origin class and of the other pair (`+1` or `−1`).
    pub initial_sides: (i64, i64),
    /// Put each band on the stacking side of the pair through the origin
    /// class (otherwise on the opposite side).
    pub band_on_origin_side: bool,
}

impl Default for PropagationOptions {
    fn default() -> Self {
        PropagationOptions {
            class_rank: [0, 1, 2, 3],
            initial_sides: (1, -1),
            band_on_origin_side: true,
        }
    }
}

/// Placement of the parallel copies of one arc: a lattice lift from `start`
/// by `dir`, with copies displaced towards `offset`.
#[derive(Clone, Copy, Debug)]
struct Geometry {
    start: V,
    dir: V,
    offset: V,
}

impl Geometry {
    /// Sign of the vertical displacement of the copies, measured on the lift
    /// that starts at class `c` and runs in the positive direction. Passing
    /// to the other end of the segment is a π-rotation, which flips sides.
    fn side(&self, c: u8) -> i64 {
        let d = self.dir;
        let v = if d.0 > 0 || (d.0 == 0 && d.1 > 0) {
            d
        } else {
            neg(d)
        };
        let t = if d == v {
            self.start
        } else {
            add(self.start, d)
        };
        let s = sgn(det(v, self.offset));
        if cls(t) == c {
            s
        } else {
            -s
        }
    }
}

/// One arc copy: its union-find variable and orientation parity relative to
/// the reference direction.
#[derive(Clone, Copy, Debug)]
struct Arc {
    var: usize,
    parity: u8,
}

/// Parity union-find: `rel(a, b) = 1` means opposite orientations.
struct ParityUnionFind {
    parent: Vec<usize>,
    rel: Vec<u8>,
}

impl ParityUnionFind {
    fn new() -> Self {
        ParityUnionFind {
            parent: Vec::new(),
            rel: Vec::new(),
        }
    }

    fn add(&mut self) -> usize {
        self.parent.push(self.parent.len());
        self.rel.push(0);
        self.parent.len() - 1
    }

    fn find(&mut self, a: usize) -> (usize, u8) {
        let mut path = Vec::new();
        let mut x = a;
        while self.parent[x] != x {
            path.push(x);
            x = self.parent[x];
        }
        // Compress, accumulating parity from the root downward.
        let root = x;
        let mut acc = 0;
        for &node in path.iter().rev() {
            acc ^= self.rel[node];
            self.rel[node] = acc;
            self.parent[node] = root;
        }
        (root, if path.is_empty() { 0 } else { self.rel[a] })
    }

    /// Imposes `rel(a, b) = r`; returns false on a contradiction.
    fn union(&mut self, a: usize, b: usize, r: u8) -> bool {
        let (ra, pa) = self.find(a);
        let (rb, pb) = self.find(b);
        if ra == rb {
            return (pa ^ pb) == r;
        }
        self.parent[ra] = rb;
        self.rel[ra] = pa ^ pb ^ r;
        true
    }
}

/// A crossing of an arc copy with the gluing circle.
#[derive(Clone, Copy, Debug)]
struct Crossing {
    /// Position on the circle as `t_num / t_den` in `[0, 2)`.
    t_num: i64,
    t_den: i64,
    /// Displacement from the core crossing, in copy units.
    offset: i64,
    /// Crossing direction of the oriented copy.
    dir: i8,
    var: usize,
}

/// Crossings of the lift of slope `p/q` starting at class point `l`, as
/// `(t_num, t_den, offset_sign, direction)`; the circle is the image of the
/// line `x = 1/2`, met at `x = m + 1/2` and folded by the rotation at odd `m`.
fn crossings(slope: V, l: V) -> Vec<(i64, i64, i64, i8)> {
    let (p, q) = slope;
    let den = 2 * q;
    (l.0..l.0 + q)
        .map(|m| {
            let y = 2 * q * l.1 + (2 * (m - l.0) + 1) * p;
            if m.rem_euclid(2) == 0 {
                (y.rem_euclid(2 * den), den, 1, 1)
            } else {
                ((-y).rem_euclid(2 * den), den, -1, -1)
            }
        })
        .collect()
}

struct Level {
    slope: V,
    geometry: Vec<(Pair, Geometry)>,
    stacks: Vec<(Pair, Vec<Arc>)>,
}

fn to_i64(x: &num_bigint::BigInt, what: &str) -> Result<i64> {
    x.to_i64().filter(|v| v.abs() < (1 << 24)).ok_or_else(|| {
        Error::InvalidArgument(format!("{what} {x} is too large for the orientation model"))
    })
}

/// Runs the propagation check with the default conventions.
pub fn orientable_by_propagation(system: &EdgepathSystem) -> Result<bool> {
    orientable_by_propagation_with(system, &PropagationOptions::default())
}

/// Runs the propagation check under explicit conventions.
pub fn orientable_by_propagation_with(
    system: &EdgepathSystem,
    opts: &PropagationOptions,
) -> Result<bool> {
    let s = to_i64(&system.sheets, "sheet count")? as usize;
    let rank = |c: u8| opts.class_rank[c as usize];
    let reference = |pr: Pair| {
        let [a, b] = members(pr);
        if rank(a) < rank(b) {
            (a, b)
        } else {
            (b, a)
        }
    };

    let mut uf = ParityUnionFind::new();
    let mut consistent = true;
    let mut sequences: Vec<Vec<Crossing>> = Vec::new();

    for (path, w) in system.paths.iter().zip(&system.weights) {
        let slopes: Vec<V> = path
            .vertices()
            .iter()
            .map(|v| {
                Ok((
                    to_i64(v.slope.numer(), "slope numerator")?,
                    to_i64(v.slope.denom(), "slope denominator")?,
                ))
            })
            .collect::<Result<_>>()?;
        let y = to_i64(&w.y, "weight")? as usize;

        let mut cur = slopes[0];
        let v = direction(cur);
        let mut nrm = match slopes.get(1) {
            Some(&next) => direction(next),
            None if det(v, (1, 0)) != 0 => (1, 0),
            None => (0, 1),
        };
        if det(v, nrm) < 0 {
            nrm = neg(nrm);
        }
        let mut p0 = pair(0, cls(v));
        let mut p1 = complement(p0);
        let side_vec = |sign: i64| if sign > 0 { nrm } else { neg(nrm) };
        let mut geometry = vec![
            (
                p0,
                Geometry {
                    start: (0, 0),
                    dir: v,
                    offset: side_vec(opts.initial_sides.0),
                },
            ),
            (
                p1,
                Geometry {
                    start: nrm,
                    dir: v,
                    offset: side_vec(opts.initial_sides.1),
                },
            ),
        ];
        let mut stacks: Vec<(Pair, Vec<Arc>)> = vec![(p0, Vec::new()), (p1, Vec::new())];
        for _ in 0..s {
            for st in stacks.iter_mut() {
                st.1.push(Arc {
                    var: uf.add(),
                    parity: 0,
                });
            }
        }
        let geom_of =
            |g: &Vec<(Pair, Geometry)>, pr: Pair| g.iter().find(|e| e.0 == pr).expect("pair").1;
        let stack_of = |st: &Vec<(Pair, Vec<Arc>)>, pr: Pair| {
            st.iter().find(|e| e.0 == pr).expect("pair").1.clone()
        };

        let mut levels: Vec<Level> = Vec::new();
        let edges = slopes.len() - 1;
        for e in 0..edges {
            let next = slopes[e + 1];
            let v = direction(cur);
            let vn = direction(next);
            let s0 = geom_of(&geometry, p0).side(0);
            let mut band = if sgn(det(v, vn)) == s0 { vn } else { neg(vn) };
            if !opts.band_on_origin_side {
                band = neg(band);
            }
            let band_side = sgn(det(v, band));
            let s1 = geom_of(&geometry, p1).side(cls(band));

            // Copies in the order the bands reach them, nearest first.
            let mut l0 = stack_of(&stacks, p0);
            if s0 == band_side {
                l0.reverse();
            }
            let mut l1 = stack_of(&stacks, p1);
            if s1 == -band_side {
                l1.reverse();
            }
            let n_saddles = if e + 1 < edges { s } else { y };

            let q0 = pair(0, cls(band));
            let q1 = complement(q0);
            let new_geometry = vec![
                (
                    q0,
                    Geometry {
                        start: (0, 0),
                        dir: band,
                        offset: v,
                    },
                ),
                (
                    q1,
                    Geometry {
                        start: v,
                        dir: band,
                        offset: neg(v),
                    },
                ),
            ];
            let mut new_stacks: Vec<(Pair, Vec<Arc>)> = vec![(q0, Vec::new()), (q1, Vec::new())];
            let (pa1, pa2) = reference(p0);
            let (pb1, pb2) = reference(p1);
            for (a, b) in l0.iter().zip(&l1).take(n_saddles) {
                // The new arc through pa1 continues along `a` into the band
                // and leaves along `b` towards pk.
                let n1 = if q0 & (1 << pa1) != 0 { q0 } else { q1 };
                let pk = members(n1)
                    .into_iter()
                    .find(|&c| c != pa1)
                    .expect("two members");
                let n2 = complement(n1);
                let pl = if pk == pb2 { pb1 } else { pb2 };
                if !uf.union(
                    a.var,
                    b.var,
                    (a.parity + b.parity + u8::from(pk != pb2)) % 2,
                ) {
                    consistent = false;
                }
                let r1 = (a.parity + u8::from(rank(pa1) >= rank(pk))) % 2;
                let r2 = (a.parity + u8::from(rank(pl) >= rank(pa2))) % 2;
                for (pr, r) in [(n1, r1), (n2, r2)] {
                    new_stacks
                        .iter_mut()
                        .find(|st| st.0 == pr)
                        .expect("pair")
                        .1
                        .push(Arc {
                            var: a.var,
                            parity: r,
                        });
                }
            }
            if e + 1 == edges {
                // The unsaddled copies stay behind at this level, in their
                // original stacking order. (Arcs made by one saddle share a
                // variable, so copies are told apart by position.)
                let keep = |arcs: &Vec<Arc>, reversed: bool| -> Vec<Arc> {
                    let rest = arcs.len() - n_saddles.min(arcs.len());
                    if reversed {
                        arcs[..rest].to_vec()
                    } else {
                        arcs[arcs.len() - rest..].to_vec()
                    }
                };
                let remaining = vec![
                    (p0, keep(&stack_of(&stacks, p0), s0 == band_side)),
                    (p1, keep(&stack_of(&stacks, p1), s1 == -band_side)),
                ];
                levels.push(Level {
                    slope: cur,
                    geometry: geometry.clone(),
                    stacks: remaining,
                });
            }
            geometry = new_geometry;
            stacks = new_stacks;
            cur = next;
            p0 = q0;
            p1 = q1;
        }
        levels.push(Level {
            slope: cur,
            geometry: geometry.clone(),
            stacks: stacks.clone(),
        });

        let mut seq = Vec::new();
        for level in &levels {
            for (pr, arcs) in &level.stacks {
                let a = reference(*pr).0;
                let sd = geom_of(&level.geometry, *pr).side(a);
                for (r, arc) in arcs.iter().enumerate() {
                    for (t_num, t_den, od, dd) in crossings(level.slope, class_point(a)) {
                        let dir = if arc.parity == 0 { dd } else { -dd };
                        seq.push(Crossing {
                            t_num,
                            t_den,
                            offset: od * sd * (r as i64 + 1),
                            dir,
                            var: arc.var,
                        });
                    }
                }
            }
        }
        if edges == 0 && y > 0 {
            let a = reference(p0).0;
            let sd = geom_of(&geometry, p0).side(a);
            for c in 0..y {
                let var = uf.add();
                for (t_num, t_den, od, dd) in crossings(cur, class_point(a)) {
                    // Beyond the arc stack on its side, innermost-first on
                    // the other side.
                    seq.push(Crossing {
                        t_num,
                        t_den,
                        offset: od * sd * (s + 1 + c) as i64,
                        dir: dd,
                        var,
                    });
                    seq.push(Crossing {
                        t_num,
                        t_den,
                        offset: -od * sd * (c as i64 + 1),
                        dir: -dd,
                        var,
                    });
                }
            }
        }
        seq.sort_by(|x, y| {
            let lhs = x.t_num as i128 * y.t_den as i128;
            let rhs = y.t_num as i128 * x.t_den as i128;
            lhs.cmp(&rhs).then(x.offset.cmp(&y.offset))
        });
        if seq.windows(2).any(|w| {
            (w[0].t_num as i128 * w[1].t_den as i128)
                .cmp(&(w[1].t_num as i128 * w[0].t_den as i128))
                == Ordering::Equal
                && w[0].offset == w[1].offset
        }) {
            return Err(Error::Invariant(
                "two arc copies cross the gluing circle at the same point".into(),
            ));
        }
        sequences.push(seq);
    }

    let first = &sequences[0];
    if sequences.iter().any(|s| s.len() != first.len()) {
        return Err(Error::Invariant(
            "tangles meet the gluing circle in different numbers of points".into(),
        ));
    }
    for other in &sequences[1..] {
        for (x, y) in first.iter().zip(other) {
            if !uf.union(x.var, y.var, u8::from(x.dir != y.dir)) {
                consistent = false;
            }
        }
    }
    Ok(consistent)
}
