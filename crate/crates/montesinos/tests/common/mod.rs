//! Independent oracles shared by the integration tests: plain `i64`
//! arithmetic and a brute-force edgepath search.

#![allow(dead_code)]

use std::collections::BTreeSet;

pub type Q = (i64, i64);

pub fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

pub fn adjacent(a: Q, b: Q) -> bool {
    (a.0 * b.1 - a.1 * b.0).abs() == 1
}

/// Reduced fractions with denominator below `v.1` adjacent to `v`, found by
/// scanning numerators near `v.0·d/v.1` for every smaller denominator `d`.
pub fn lower_neighbors(v: Q) -> Vec<Q> {
    let mut out = Vec::new();
    for d in 1..v.1 {
        let centre = v.0 * d / v.1;
        for n in centre - 2..=centre + 2 {
            if gcd(n, d) == 1 && adjacent(v, (n, d)) {
                out.push((n, d));
            }
        }
    }
    out
}

fn dfs(path: &mut Vec<Q>, max_edges: usize, out: &mut BTreeSet<String>) {
    out.insert(
        path.iter()
            .map(|(p, q)| format!("<{p}/{q}>"))
            .collect::<Vec<_>>()
            .join("->"),
    );
    if path.len() > max_edges {
        return;
    }
    let last = *path.last().unwrap();
    for w in lower_neighbors(last) {
        let revisits = path.contains(&w);
        let triangle = path.len() >= 2 && adjacent(path[path.len() - 2], w);
        if !revisits && !triangle {
            path.push(w);
            dfs(path, max_edges, out);
            path.pop();
        }
    }
}

/// Every path from `p/q` that steps to lower-denominator Farey neighbors,
/// never revisits a vertex and never runs along two sides of a triangle.
pub fn brute_force_paths(p: i64, q: i64, max_edges: usize) -> BTreeSet<String> {
    let mut out = BTreeSet::new();
    dfs(&mut vec![(p, q)], max_edges, &mut out);
    out
}

/// Closed forms for the `P(−p, p, q)` family: boundary components, slope
/// denominator, sheets, and the total twist as a reduced `(num, den)`.
pub fn family_closed_form(p: i64, q: i64) -> (i64, i64, i64, Q) {
    let (a, b) = (p - 1, q - 1);
    let g = gcd(a, b);
    let h = gcd(a + b, 2 * a * a);
    let (tn, td) = (2 * a * a - 2 * a - 2 * b, a + b);
    let t = gcd(tn, td);
    (h / g, (a + b) / h, (a + b) / g, (tn / t, td / t))
}
