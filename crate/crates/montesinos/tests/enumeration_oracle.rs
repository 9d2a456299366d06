//! Edgepath enumeration against a brute-force search that scans every
//! fraction with a smaller denominator for Farey adjacency.

use std::collections::BTreeSet;

use montesinos::{check_edgepath, enumerate_edgepaths, Tangle};

mod common;

use common::{brute_force_paths as oracle, gcd};

fn enumerated(p: i64, q: i64, max_edges: usize) -> BTreeSet<String> {
    let t = Tangle::from_ints(p, q);
    let paths = enumerate_edgepaths(&t, max_edges).unwrap();
    for path in &paths {
        assert_eq!(check_edgepath(&t, path), Ok(()), "{path}");
    }
    let set: BTreeSet<String> = paths.iter().map(|p| p.to_string()).collect();
    assert_eq!(set.len(), paths.len(), "duplicates for {p}/{q}");
    set
}

#[test]
fn unit_tangles_match_oracle() {
    for q in 2..=12 {
        for sign in [1, -1] {
            assert_eq!(enumerated(sign, q, 16), oracle(sign, q, 16), "{sign}/{q}");
        }
    }
}

#[test]
fn all_tangles_up_to_denominator_7_match_oracle() {
    for q in 1..=7 {
        for p in -2 * q..=2 * q {
            if gcd(p, q) == 1 {
                for k in [1, 2, 3, 8] {
                    assert_eq!(
                        enumerated(p, q, k),
                        oracle(p, q, k),
                        "{p}/{q} with at most {k} edges"
                    );
                }
            }
        }
    }
}

#[test]
fn unit_tangle_closed_form() {
    // Constant path, the direct exit to 0/1, and every prefix of the chain
    // 1/q → 1/(q−1) → … → 1/1.
    for q in 2..=12i64 {
        let mut want = BTreeSet::new();
        want.insert(format!("<1/{q}>"));
        want.insert(format!("<1/{q}>-><0/1>"));
        for k in (1..q).rev() {
            let chain: Vec<String> = (k..=q).rev().map(|d| format!("<1/{d}>")).collect();
            want.insert(chain.join("->"));
        }
        assert_eq!(enumerated(1, q, 16), want, "1/{q}");
    }
}
