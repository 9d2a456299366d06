//! Property tests over arithmetic, enumeration, the solver, the screens and
//! the orientability conventions.

use montesinos::arith::{
    continued_fraction, from_continued_fraction, is_farey_neighbor, stern_brocot_parents,
};
use montesinos::diagram::endpoint_coordinates;
use montesinos::orientation::orientable_by_propagation_with;
use montesinos::realize::parse_notation;
use montesinos::solver::exhaustive_depth;
use montesinos::surface::exceptional_patterns;
use montesinos::*;
use num_bigint::BigInt;
use num_integer::Integer;
use proptest::prelude::*;

fn frac() -> impl Strategy<Value = (i64, i64)> {
    (-1000i64..1000, 1i64..1000)
}

fn rotations(v: &[BigInt]) -> Vec<Vec<BigInt>> {
    (0..v.len())
        .map(|k| v[k..].iter().chain(&v[..k]).cloned().collect())
        .collect()
}

fn pretzel_entry() -> impl Strategy<Value = i64> {
    prop_oneof![-7i64..=-2, 2i64..=9]
}

fn permutations4() -> Vec<[u8; 4]> {
    let mut out = Vec::new();
    for a in 0..4u8 {
        for b in 0..4u8 {
            for c in 0..4u8 {
                for d in 0..4u8 {
                    let v = [a, b, c, d];
                    if (0..4u8).all(|x| v.contains(&x)) {
                        out.push(v);
                    }
                }
            }
        }
    }
    out
}

proptest! {
    #[test]
    fn arithmetic_matches_cross_multiplication((a, b) in frac(), (c, d) in frac()) {
        let x = Fraction::from_ints(a, b);
        let y = Fraction::from_ints(c, d);
        let (a, b, c, d) = (a as i128, b as i128, c as i128, d as i128);
        let eq = |f: &Fraction, n: i128, m: i128| {
            BigInt::from(n) * f.denom() == BigInt::from(m) * f.numer()
        };
        prop_assert!(eq(&(x.clone() + y.clone()), a * d + b * c, b * d));
        prop_assert!(eq(&(x.clone() - y.clone()), a * d - b * c, b * d));
        prop_assert!(eq(&(x.clone() * y.clone()), a * c, b * d));
        prop_assert_eq!(x < y, a * d < b * c);
        prop_assert!(x.denom() > &BigInt::from(0));
        prop_assert!(x.numer().gcd(x.denom()) == BigInt::from(1) || x.is_zero());
    }

    #[test]
    fn display_parse_round_trip((a, b) in frac()) {
        let x = Fraction::from_ints(a, b);
        prop_assert_eq!(x.to_string().parse::<Fraction>().unwrap(), x);
    }

    #[test]
    fn farey_adjacency_is_symmetric((a, b) in frac(), (c, d) in frac()) {
        let x = Fraction::from_ints(a, b);
        let y = Fraction::from_ints(c, d);
        prop_assert_eq!(is_farey_neighbor(&x, &y), is_farey_neighbor(&y, &x));
    }

    #[test]
    fn parents_are_the_lower_neighbors(q in 2i64..=50, p in -100i64..100) {
        prop_assume!(p.gcd(&q) == 1);
        let x = Fraction::from_ints(p, q);
        let parents = stern_brocot_parents(&x);
        prop_assert_eq!(parents.len(), 2);
        prop_assert!(is_farey_neighbor(&parents[0], &parents[1]));
        let mut brute = Vec::new();
        for d in 1..q {
            for n in (p * d / q - 2)..=(p * d / q + 2) {
                let y = Fraction::from_ints(n, d);
                if y.denom() == &BigInt::from(d) && is_farey_neighbor(&x, &y) && !brute.contains(&y) {
                    brute.push(y);
                }
            }
        }
        brute.sort();
        prop_assert_eq!(parents, brute);
    }

    #[test]
    fn continued_fraction_round_trip((a, b) in frac()) {
        let x = Fraction::from_ints(a, b);
        let terms = continued_fraction(&x);
        prop_assert_eq!(from_continued_fraction(&terms), x);
        if terms.len() > 1 {
            prop_assert!(terms[1..].iter().all(|t| *t >= BigInt::from(1)));
            prop_assert!(*terms.last().unwrap() > BigInt::from(1));
        }
    }

    #[test]
    fn endpoints_are_linear_in_weights(q in 2i64..=13, p in 1i64..13, w in prop::array::uniform4(0i64..50), pick in 0usize..64) {
        prop_assume!(p.gcd(&q) == 1 && p < q);
        let paths = enumerate_edgepaths(&Tangle::from_ints(p, q), 6).unwrap();
        let path = &paths[pick % paths.len()];
        let [x1, y1, x2, y2] = w.map(BigInt::from);
        prop_assume!(x1 != BigInt::from(0) || y1 != BigInt::from(0));
        prop_assume!(x2 != BigInt::from(0) || y2 != BigInt::from(0));
        let e1 = endpoint_coordinates(path, &x1, &y1).unwrap();
        let e2 = endpoint_coordinates(path, &x2, &y2).unwrap();
        let e = endpoint_coordinates(path, &(&x1 + &x2), &(&y1 + &y2)).unwrap();
        prop_assert_eq!(e, e1.add(&e2));
    }

    #[test]
    fn exceptional_patterns_are_rotation_invariant(v in prop::collection::vec(0i64..5, 3..7)) {
        let cycle: Vec<BigInt> = v.into_iter().map(BigInt::from).collect();
        let mut want = exceptional_patterns(&cycle);
        want.sort_by_key(|p| *p as u8);
        for rot in rotations(&cycle) {
            let mut got = exceptional_patterns(&rot);
            got.sort_by_key(|p| *p as u8);
            prop_assert_eq!(&got, &want);
        }
    }

    #[test]
    fn knot_notation_round_trips(ts in prop::collection::vec(pretzel_entry(), 3..6), fs in prop::collection::vec((-30i64..30, 2i64..30), 3..6)) {
        let k = MontesinosKnot::pretzel(&ts).unwrap();
        prop_assert_eq!(parse_notation(&k.to_string()).unwrap(), k.clone());
        prop_assert_eq!(parse_knot(&k.to_string()).is_ok(), k.is_knot());
        let tangles: Vec<Tangle> = fs.iter().map(|&(p, q)| Tangle::from_ints(p, q)).collect();
        let k = MontesinosKnot::new(tangles).unwrap();
        prop_assert_eq!(parse_notation(&k.to_string()).unwrap(), k.clone());
        prop_assert_eq!(parse_knot(&k.to_string()).is_ok(), k.is_knot());
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 24, ..ProptestConfig::default() })]

    #[test]
    fn solved_systems_satisfy_every_identity(a in pretzel_entry(), b in pretzel_entry(), c in pretzel_entry()) {
        let knot = MontesinosKnot::pretzel(&[a, b, c]).unwrap();
        prop_assume!(knot.is_knot());
        for system in sweep(&knot, exhaustive_depth(&knot)).unwrap() {
            let (ra, rb, rc) = system.residues().unwrap();
            prop_assert!(ra == BigInt::from(0) && rb == BigInt::from(0) && rc == BigInt::from(0));
            prop_assert!(system.is_primitive());
            prop_assert!(system.sheets > BigInt::from(0));
            prop_assert!(system.weights.iter().all(|w| w.x >= BigInt::from(0) && w.y >= BigInt::from(0)));
            let s = analyze(&system).unwrap();
            prop_assert_eq!(&s.boundary_components * &s.slope_denominator, system.sheets.clone());
            if s.orientable.is_yes() {
                prop_assert!((&s.euler_characteristic - &s.boundary_components).is_even());
                prop_assert!(s.genus.clone().unwrap() >= BigInt::from(0));
            }
            if s.parity == Some(true) {
                prop_assert_eq!(s.propagation, Some(true));
            }
            if s.orientable.is_yes() && s.boundary_components.is_odd() {
                prop_assert_eq!(s.slope_denominator, BigInt::from(1));
            }
        }
    }

    #[test]
    fn four_tangle_systems_are_consistent(fs in prop::collection::vec(prop::sample::select(vec![(1i64, 3i64), (-2, 3), (2, 5), (-3, 5), (1, 4), (-3, 4), (3, 7)]), 4)) {
        let knot = MontesinosKnot::new(fs.iter().map(|&(p, q)| Tangle::from_ints(p, q)).collect()).unwrap();
        prop_assume!(knot.is_knot());
        for system in sweep(&knot, exhaustive_depth(&knot)).unwrap() {
            let s = analyze(&system).unwrap();
            prop_assert_eq!(&s.boundary_components * &s.slope_denominator, system.sheets.clone());
            if s.orientable.is_yes() && s.boundary_components.is_odd() {
                prop_assert_eq!(s.slope_denominator, BigInt::from(1));
            }
            let flipped = PropagationOptions { class_rank: [2, 0, 3, 1], initial_sides: (-1, -1), band_on_origin_side: false };
            prop_assert_eq!(orientable_by_propagation_with(&system, &flipped).unwrap(), s.propagation.unwrap());
        }
    }

    #[test]
    fn propagation_ignores_conventions(a in pretzel_entry(), b in pretzel_entry(), c in pretzel_entry()) {
        let knot = MontesinosKnot::pretzel(&[a, b, c]).unwrap();
        prop_assume!(knot.is_knot());
        for system in sweep(&knot, exhaustive_depth(&knot)).unwrap() {
            let base = orientable_by_propagation(&system).unwrap();
            for class_rank in permutations4() {
                for initial_sides in [(1, -1), (-1, 1), (1, 1), (-1, -1)] {
                    for band_on_origin_side in [true, false] {
                        let opts = PropagationOptions { class_rank, initial_sides, band_on_origin_side };
                        prop_assert_eq!(orientable_by_propagation_with(&system, &opts).unwrap(), base, "{:?}", opts);
                    }
                }
            }
        }
    }
}
