//! Invariants of the candidate surface built from a solved edgepath system:
//! twist, boundary-slope denominator, boundary components, Euler
//! characteristic and genus, the r-cycle incompressibility screen, and the
//! two orientability checks.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::arith::Fraction;
use crate::edgepath::{r_value, Edgepath};
use crate::error::{Error, Result};
use crate::orientation::orientable_by_propagation;
use crate::solver::{EdgepathSystem, Weights};

/// Twist of one path: twice its signed length, where the final edge counts
/// `y/s` of a full edge. An edge counts positively when it increases the
/// absolute value of the slope and negatively when it decreases it, so that
/// a path `<-1/p> → <-1/(p-1)>` twists positively and `<1/p> → <0/1>`
/// negatively. Constant paths have no twist.
pub fn twist(path: &Edgepath, weights: &Weights, sheets: &BigInt) -> Fraction {
    let edges = path.edges();
    let last = edges.len().saturating_sub(1);
    edges
        .iter()
        .enumerate()
        .map(|(i, e)| {
            let sign = if e.to.slope.abs() > e.from.slope.abs() {
                2
            } else {
                -2
            };
            let length = if i < last {
                Fraction::integer(1)
            } else {
                Fraction::new(weights.y.clone(), sheets.clone()).expect("sheets > 0")
            };
            Fraction::integer(sign) * length
        })
        .sum()
}

/// Sum of the per-path twists.
pub fn total_twist(system: &EdgepathSystem) -> Fraction {
    system
        .paths
        .iter()
        .zip(&system.weights)
        .map(|(p, w)| twist(p, w, &system.sheets))
        .sum()
}

/// Denominator of the boundary slope: the slope agrees with the total twist
/// modulo 1.
pub fn slope_denominator(system: &EdgepathSystem) -> BigInt {
    total_twist(system).fract().denom().clone()
}

/// Number of boundary components, `sheets / slope denominator`.
pub fn boundary_count(system: &EdgepathSystem) -> Result<BigInt> {
    let den = slope_denominator(system);
    let (q, r) = system.sheets.div_rem(&den);
    if !r.is_zero() {
        return Err(Error::Invariant(format!(
            "slope denominator {den} does not divide {} sheets",
            system.sheets
        )));
    }
    Ok(q)
}

/// Euler characteristic of the glued candidate surface.
///
/// Inside each ball the surface is `2s` disks (one per arc copy), minus one
/// per saddle, plus one per circle of a constant path; a full edge carries
/// `s` saddles and the final edge `y`. The balls are glued cyclically along
/// `n` disks that all meet in a common axis circle. The boundary curves of
/// every ball cross that circle `C = 2(s + b)` times, cutting them into
/// `C + 2s` gluing arcs, each shared by two balls; the `C` axis points lie
/// in every ball. Hence
/// `χ = Σ χ_i − n(C + 2s)/2 + C = 2s − (n − 2)·b − Σ saddles + Σ circles`.
pub fn euler_characteristic(system: &EdgepathSystem) -> Result<BigInt> {
    let n = system.paths.len() as i64;
    let s = &system.sheets;
    let b = system.endpoints()?[0].b.clone();
    let mut chi = BigInt::from(2) * s - BigInt::from(n - 2) * b;
    for (p, w) in system.paths.iter().zip(&system.weights) {
        if p.is_constant() {
            chi += &w.y;
        } else {
            chi -= s * BigInt::from(p.len() as i64 - 1) + &w.y;
        }
    }
    Ok(chi)
}

/// Genus `(2 − χ − b)/2` of an orientable surface; `None` if the parity is
/// wrong or the value is negative.
pub fn genus(euler_characteristic: &BigInt, boundary_components: &BigInt) -> Option<BigInt> {
    let twice = BigInt::from(2) - euler_characteristic - boundary_components;
    if twice.is_odd() || twice.is_negative() {
        return None;
    }
    Some(twice / 2)
}

/// The exceptional r-cycle shapes under which the screen cannot certify
/// incompressibility.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum RPattern {
    /// `(0, r2, …, rn)`.
    LeadingZero,
    /// `(1, …, 1, rn)`.
    Ones,
    /// `(1, …, 1, 2, rn)`.
    OnesThenTwo,
}

/// Which exceptional patterns some cyclic rotation of `cycle` matches.
pub fn exceptional_patterns(cycle: &[BigInt]) -> Vec<RPattern> {
    let n = cycle.len();
    let one = BigInt::one();
    let two = BigInt::from(2);
    let mut found = Vec::new();
    let rotations = || (0..n).map(|k| cycle[k..].iter().chain(&cycle[..k]).collect::<Vec<_>>());
    if cycle.iter().any(|r| r.is_zero()) {
        found.push(RPattern::LeadingZero);
    }
    if n >= 1 && rotations().any(|r| r[..n - 1].iter().all(|x| **x == one)) {
        found.push(RPattern::Ones);
    }
    if n >= 2 && rotations().any(|r| r[..n - 2].iter().all(|x| **x == one) && *r[n - 2] == two) {
        found.push(RPattern::OnesThenTwo);
    }
    found
}

/// Verdict of the r-cycle screen.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Incompressibility {
    /// No rotation of the r-cycle is exceptional.
    Yes,
    /// Three tangles whose only match is `(1, 2, r)`. Such cycles arise on
    /// `P(−3, 3, q)`, where the surface is claimed incompressible without
    /// further argument; the screen alone cannot certify it, so this is not
    /// a `yes` verdict.
    PatternAmbiguous,
    /// Some rotation is exceptional.
    ExcludedByRCycle,
    /// The screen does not apply: some path is constant or the endpoints lie
    /// on the vertical axis.
    Unscreened,
}

impl Incompressibility {
    pub fn as_str(&self) -> &'static str {
        match self {
            Incompressibility::Yes => "yes",
            Incompressibility::PatternAmbiguous => "pattern-ambiguous",
            Incompressibility::ExcludedByRCycle => "excluded-by-r-cycle",
            Incompressibility::Unscreened => "unscreened",
        }
    }

    /// Whether the verdict reports the surface as incompressible.
    pub fn is_yes(&self) -> bool {
        *self == Incompressibility::Yes
    }
}

impl fmt::Display for Incompressibility {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for Incompressibility {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

/// The r-values of the final edges, in tangle order; `None` if some path is
/// constant.
pub fn r_cycle(system: &EdgepathSystem) -> Option<Vec<BigInt>> {
    system
        .paths
        .iter()
        .map(|p| p.final_edge().map(|e| r_value(&e).expect("farey edge")))
        .collect()
}

/// The incompressibility screen on the cycle of r-values.
pub fn incompressibility_screen(system: &EdgepathSystem) -> Result<Incompressibility> {
    let Some(cycle) = r_cycle(system) else {
        return Ok(Incompressibility::Unscreened);
    };
    if system.endpoints()?[0].b.is_zero() {
        return Ok(Incompressibility::Unscreened);
    }
    let found = exceptional_patterns(&cycle);
    Ok(match found.as_slice() {
        [] => Incompressibility::Yes,
        [RPattern::OnesThenTwo] if cycle.len() == 3 => Incompressibility::PatternAmbiguous,
        _ => Incompressibility::ExcludedByRCycle,
    })
}

/// Parameters `(a, b) = (p − 1, q − 1)` if `system` is the three-path
/// system `<-1/p>→<-1/(p-1)>`, `<1/p>→<0/1>`, `<1/q>→<0/1>` on `P(−p, p, q)`.
pub fn family_parameters(system: &EdgepathSystem) -> Option<(BigInt, BigInt)> {
    let [g0, g1, g2] = system.paths.as_slice() else {
        return None;
    };
    let ints = |path: &Edgepath| -> Option<Vec<(i64, i64)>> {
        path.vertices()
            .iter()
            .map(|v| Some((v.slope.numer().to_i64()?, v.slope.denom().to_i64()?)))
            .collect()
    };
    let (v0, v1, v2) = (ints(g0)?, ints(g1)?, ints(g2)?);
    match (v0.as_slice(), v1.as_slice(), v2.as_slice()) {
        ([(-1, p), (-1, pm)], [(1, p1), (0, 1)], [(1, q), (0, 1)])
            if *p >= 3 && *pm == p - 1 && p1 == p && *q >= 3 =>
        {
            Some((BigInt::from(p - 1), BigInt::from(q - 1)))
        }
        _ => None,
    }
}

/// The sufficient parity criterion for the three-path family: orientable if
/// `g = gcd(a, b)` and `(a + b)/g` are both even. `false` is inconclusive.
/// Errors for systems outside the family.
pub fn orientable_by_parity(system: &EdgepathSystem) -> Result<bool> {
    let (a, b) = family_parameters(system).ok_or_else(|| {
        Error::InvalidArgument(
            "parity criterion applies only to the P(-p,p,q) three-path system".into(),
        )
    })?;
    Ok(parity_criterion(&a, &b))
}

/// `gcd(a, b)` even and `(a + b)/gcd(a, b)` even.
pub fn parity_criterion(a: &BigInt, b: &BigInt) -> bool {
    let g = a.gcd(b);
    g.is_even() && ((a + b) / &g).is_even()
}

/// How orientability was established.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Orientability {
    /// The parity criterion holds and propagation agrees.
    YesByParity,
    /// The propagation check succeeds.
    YesByPropagation,
    /// The propagation check finds a contradiction.
    No,
    /// The propagation check could not run.
    Unknown,
}

impl Orientability {
    pub fn as_str(&self) -> &'static str {
        match self {
            Orientability::YesByParity => "yes-by-parity",
            Orientability::YesByPropagation => "yes-by-propagation",
            Orientability::No => "no",
            Orientability::Unknown => "unknown",
        }
    }

    pub fn is_yes(&self) -> bool {
        matches!(
            self,
            Orientability::YesByParity | Orientability::YesByPropagation
        )
    }
}

impl fmt::Display for Orientability {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for Orientability {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

/// A solved system with every derived invariant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CandidateSurface {
    pub system: EdgepathSystem,
    /// Total twist; the slope agrees with it modulo 1 only.
    pub twist: Fraction,
    pub slope_denominator: BigInt,
    pub boundary_components: BigInt,
    pub euler_characteristic: BigInt,
    /// Defined only for orientable surfaces.
    pub genus: Option<BigInt>,
    pub incompressible: Incompressibility,
    pub orientable: Orientability,
    /// Parity criterion, when the system is in the three-path family.
    pub parity: Option<bool>,
    /// Propagation verdict, when it could run.
    pub propagation: Option<bool>,
}

/// Derives every invariant of the surface of `system`, which must be a
/// system on a knot.
pub fn analyze(system: &EdgepathSystem) -> Result<CandidateSurface> {
    if !system.knot.is_knot() {
        return Err(Error::InvalidArgument(format!(
            "{} is a {}-component link; surface invariants assume a knot",
            system.knot,
            system.knot.component_count()
        )));
    }
    let twist = total_twist(system);
    let slope_denominator = twist.fract().denom().clone();
    let boundary_components = boundary_count(system)?;
    let euler_characteristic = euler_characteristic(system)?;
    let incompressible = incompressibility_screen(system)?;
    let parity = orientable_by_parity(system).ok();
    let propagation = match orientable_by_propagation(system) {
        Ok(v) => Some(v),
        Err(Error::InvalidArgument(_)) => None,
        Err(e) => return Err(e),
    };
    let orientable = match (parity, propagation) {
        (Some(true), Some(false)) => {
            return Err(Error::Invariant(format!(
                "parity criterion and propagation disagree on {}",
                system.path_strings().join(" ")
            )))
        }
        (Some(true), _) => Orientability::YesByParity,
        (_, Some(true)) => Orientability::YesByPropagation,
        (_, Some(false)) => Orientability::No,
        (_, None) => Orientability::Unknown,
    };
    let genus = if orientable.is_yes() {
        genus(&euler_characteristic, &boundary_components)
    } else {
        None
    };
    if orientable.is_yes() && genus.is_none() {
        return Err(Error::Invariant(format!(
            "orientable surface with χ = {euler_characteristic} and {boundary_components} boundary components has no genus"
        )));
    }
    Ok(CandidateSurface {
        system: system.clone(),
        twist,
        slope_denominator,
        boundary_components,
        euler_characteristic,
        genus,
        incompressible,
        orientable,
        parity,
        propagation,
    })
}

/// Flat output record of a candidate surface.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SurfaceRecord {
    pub knot: String,
    pub paths: String,
    pub sheets: String,
    pub twist: String,
    pub slope_denominator: String,
    pub boundary_components: String,
    pub euler_characteristic: String,
    pub genus: String,
    pub incompressible: String,
    pub orientable: String,
}

impl CandidateSurface {
    pub fn record(&self) -> SurfaceRecord {
        SurfaceRecord {
            knot: self.system.knot.to_string(),
            paths: self.system.path_strings().join(" "),
            sheets: self.system.sheets.to_string(),
            twist: self.twist.to_string(),
            slope_denominator: self.slope_denominator.to_string(),
            boundary_components: self.boundary_components.to_string(),
            euler_characteristic: self.euler_characteristic.to_string(),
            genus: self
                .genus
                .as_ref()
                .map_or_else(|| "undefined".to_string(), |g| g.to_string()),
            incompressible: self.incompressible.to_string(),
            orientable: self.orientable.to_string(),
        }
    }
}

/// Outcome of the odd-boundary check over a batch of surfaces.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MetaReport {
    pub checked: usize,
    /// Orientable (or undecided) surfaces with an odd number of boundary
    /// components and a slope denominator above 1. The propositions forbid
    /// these, so any entry indicates a bug.
    pub violations: Vec<usize>,
    /// Non-orientable candidates of the same shape. The propositions say
    /// nothing about them; they are listed for transparency.
    pub nonorientable_exceptions: Vec<usize>,
}

impl MetaReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks "odd boundary count ⇒ slope denominator 1" on every surface.
pub fn meta_property_check(surfaces: &[CandidateSurface]) -> MetaReport {
    let mut report = MetaReport {
        checked: surfaces.len(),
        ..Default::default()
    };
    for (i, s) in surfaces.iter().enumerate() {
        if s.boundary_components.is_odd() && !s.slope_denominator.is_one() {
            if s.orientable == Orientability::No {
                report.nonorientable_exceptions.push(i);
            } else {
                report.violations.push(i);
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solver::{solve_system, MontesinosKnot};

    fn family(p: i64, q: i64) -> EdgepathSystem {
        let k = MontesinosKnot::pretzel(&[-p, p, q]).unwrap();
        let paths: Vec<Edgepath> = [
            format!("<-1/{p}>-><-1/{}>", p - 1),
            format!("<1/{p}>-><0/1>"),
            format!("<1/{q}>-><0/1>"),
        ]
        .iter()
        .map(|s| s.parse().unwrap())
        .collect();
        solve_system(&k, &paths).unwrap().unwrap()
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| x.into()).collect()
    }

    #[test]
    fn per_path_twists_of_p337() {
        let s = family(3, 7);
        let t: Vec<Fraction> = s
            .paths
            .iter()
            .zip(&s.weights)
            .map(|(p, w)| twist(p, w, &s.sheets))
            .collect();
        assert_eq!(t[0], Fraction::from_ints(1, 1));
        assert_eq!(t[1], Fraction::from_ints(-1, 2));
        assert_eq!(total_twist(&s), Fraction::from_ints(-1, 1));
        assert_eq!(slope_denominator(&s), 1.into());
        assert_eq!(boundary_count(&s).unwrap(), 4.into());
        let constant: Edgepath = "<1/3>".parse().unwrap();
        assert!(twist(&constant, &Weights::new(2, 1), &3.into()).is_zero());
    }

    #[test]
    fn p3323() {
        let s = family(3, 23);
        assert_eq!(total_twist(&s), Fraction::from_ints(-5, 3));
        assert_eq!(slope_denominator(&s), 3.into());
        assert_eq!(boundary_count(&s).unwrap(), 4.into());
    }

    #[test]
    fn genus_of_p337() {
        let s = analyze(&family(3, 7)).unwrap();
        assert!(s.orientable.is_yes());
        let g = s.genus.unwrap();
        assert_eq!(
            BigInt::from(2) - &s.euler_characteristic - &s.boundary_components,
            g * 2
        );
    }

    #[test]
    fn pattern_examples() {
        assert_eq!(
            exceptional_patterns(&ints(&[0, 5, 7])),
            vec![RPattern::LeadingZero]
        );
        assert_eq!(
            exceptional_patterns(&ints(&[1, 1, 9])),
            vec![RPattern::Ones]
        );
        assert!(exceptional_patterns(&ints(&[1, 3, 6])).is_empty());
        assert_eq!(
            exceptional_patterns(&ints(&[1, 2, 6])),
            vec![RPattern::OnesThenTwo]
        );
    }

    #[test]
    fn screen_verdicts() {
        assert_eq!(
            incompressibility_screen(&family(4, 13)).unwrap(),
            Incompressibility::Yes
        );
        assert_eq!(
            incompressibility_screen(&family(3, 7)).unwrap(),
            Incompressibility::PatternAmbiguous
        );
    }

    #[test]
    fn parity_examples() {
        assert!(parity_criterion(&2.into(), &14.into()));
        assert!(parity_criterion(&2.into(), &6.into()));
        assert!(!parity_criterion(&3.into(), &6.into()));
        assert!(orientable_by_parity(&family(3, 15)).unwrap());
    }

    #[test]
    fn meta_check_flags_odd_boundary_with_denominator() {
        let mut s = analyze(&family(3, 7)).unwrap();
        s.boundary_components = 3.into();
        s.slope_denominator = 2.into();
        let r = meta_property_check(&[s.clone()]);
        assert_eq!(r.violations, vec![0]);
        s.orientable = Orientability::No;
        let r = meta_property_check(&[s]);
        assert!(r.passed());
        assert_eq!(r.nonorientable_exceptions, vec![0]);
    }
}
