//! Knot notation, the realization constructor for `(b, q)` pairs with `b`
//! even, and the full-pipeline sweep over one knot.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use serde::Serialize;

use crate::edgepath::{Edgepath, Tangle};
use crate::error::{Error, Result};
use crate::solver::{solve_system_detailed, sweep, MontesinosKnot, Rejection, SolveOutcome};
use crate::surface::{analyze, CandidateSurface, Incompressibility, SurfaceRecord};

/// Parses `P(t1,…,tn)` (pretzel, tangles `1/ti`, `|ti| ≥ 2`) or
/// `M(p1/q1,…,pn/qn)`, with `n ≥ 3`. Parameters describing a link of
/// several components are rejected.
pub fn parse_knot(text: &str) -> Result<MontesinosKnot> {
    let knot = parse_notation(text)?;
    match knot.component_count() {
        1 => Ok(knot),
        c => Err(Error::InvalidArgument(format!(
            "{knot} is a {c}-component link, not a knot"
        ))),
    }
}

/// Parses knot notation without checking that it closes up to a knot.
pub fn parse_notation(text: &str) -> Result<MontesinosKnot> {
    let err = |position: usize, message: &str| Error::Parse {
        input: text.to_string(),
        position,
        message: message.to_string(),
    };
    let start = text.len() - text.trim_start().len();
    let body = text.trim_end();
    let tag = body[start..]
        .chars()
        .next()
        .ok_or_else(|| err(start, "empty input"))?;
    let pretzel = match tag {
        'P' | 'p' => true,
        'M' | 'm' => false,
        _ => return Err(err(start, "expected 'P(' or 'M('")),
    };
    let after_tag = start + 1;
    let open = body[after_tag..]
        .find(|c: char| !c.is_whitespace())
        .map(|i| after_tag + i);
    let open = match open {
        Some(i) if body.as_bytes()[i] == b'(' => i,
        Some(i) => return Err(err(i, "expected '('")),
        None => return Err(err(body.len(), "expected '('")),
    };
    if !body.ends_with(')') {
        return Err(err(body.len(), "expected ')'"));
    }
    let inner_start = open + 1;
    let inner = &body[inner_start..body.len() - 1];
    if inner.contains('(') || inner.contains(')') {
        let i = inner.find(['(', ')']).expect("present");
        return Err(err(inner_start + i, "unexpected parenthesis"));
    }
    let mut items = Vec::new();
    let mut offset = inner_start;
    for raw in inner.split(',') {
        let lead = raw.len() - raw.trim_start().len();
        let item = raw.trim();
        if item.is_empty() {
            return Err(err(offset + lead, "empty entry"));
        }
        items.push((offset + lead, item));
        offset += raw.len() + 1;
    }
    if pretzel {
        let mut ts = Vec::new();
        for (pos, item) in &items {
            let t: i64 = item.parse().map_err(|_| err(*pos, "expected an integer"))?;
            if t.abs() < 2 {
                return Err(err(*pos, "pretzel entries need |t| >= 2"));
            }
            ts.push(t);
        }
        MontesinosKnot::pretzel(&ts)
    } else {
        let mut tangles = Vec::new();
        for (pos, item) in &items {
            let t: Tangle = item
                .parse()
                .map_err(|_| err(*pos, "expected a fraction p/q"))?;
            tangles.push(t);
        }
        MontesinosKnot::new(tangles)
    }
}

/// Every solvable system of `knot` with paths of at most `max_edges` edges,
/// analyzed and sorted by path serialization.
pub fn slopes(knot: &MontesinosKnot, max_edges: usize) -> Result<Vec<CandidateSurface>> {
    let mut out: Vec<CandidateSurface> = sweep(knot, max_edges)?
        .iter()
        .map(analyze)
        .collect::<Result<_>>()?;
    out.sort_by_key(|s| s.system.path_strings());
    Ok(out)
}

/// Which construction produced a realization.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Construction {
    /// `n = b/2` even: `P(−(n+1), n+1, 2n²q − n + 1)`.
    EvenN,
    /// `n = b/2` odd: `P(−(n+1), n+2, n(2nq + 1) + 2)`.
    OddN,
}

/// Outcome of one recomputed postcondition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckStatus {
    Pass,
    Fail,
    /// The certifying test cannot decide this surface either way.
    Uncertified,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub status: CheckStatus,
    pub detail: String,
}

impl Check {
    fn new(name: &str, ok: bool, detail: String) -> Check {
        Check {
            name: name.into(),
            status: if ok {
                CheckStatus::Pass
            } else {
                CheckStatus::Fail
            },
            detail,
        }
    }
}

/// A constructed knot and surface with its recomputed postconditions.
#[derive(Clone, Debug)]
pub struct RealizationResult {
    pub b: u64,
    pub q: u64,
    pub knot: MontesinosKnot,
    pub surface: CandidateSurface,
    pub construction: Construction,
    pub checks: Vec<Check>,
}

impl RealizationResult {
    /// True unless some postcondition failed outright.
    pub fn verified(&self) -> bool {
        self.checks.iter().all(|c| c.status != CheckStatus::Fail)
    }
}

/// Serializable view of a [`RealizationResult`].
#[derive(Clone, Debug, Serialize)]
pub struct RealizationRecord {
    pub b: u64,
    pub q: u64,
    pub construction: Construction,
    pub verified: bool,
    pub surface: SurfaceRecord,
    pub checks: Vec<Check>,
}

impl RealizationResult {
    pub fn record(&self) -> RealizationRecord {
        RealizationRecord {
            b: self.b,
            q: self.q,
            construction: self.construction,
            verified: self.verified(),
            surface: self.surface.record(),
            checks: self.checks.clone(),
        }
    }
}

/// The knot and edgepath system of the construction for `b = 2n`.
pub fn construction(b: u64, q: u64) -> Result<(MontesinosKnot, Vec<Edgepath>, Construction)> {
    if b % 2 == 1 {
        return Err(Error::InvalidArgument(format!(
            "b = {b} is odd: an essential surface with an odd number of boundary components has integral \
             slope, so only q = 1 could occur, and odd-b realization is outside this construction"
        )));
    }
    if b == 0 || q == 0 {
        return Err(Error::InvalidArgument("need b >= 2 even and q >= 1".into()));
    }
    let n = (b / 2) as i64;
    let q = q as i64;
    let path = |s: &str| s.parse::<Edgepath>();
    if n % 2 == 0 {
        let t = 2 * n * n * q - n + 1;
        let knot = MontesinosKnot::pretzel(&[-(n + 1), n + 1, t])?;
        let paths = vec![
            path(&format!("<-1/{}>-><-1/{}>", n + 1, n))?,
            path(&format!("<1/{}>-><0/1>", n + 1))?,
            path(&format!("<1/{t}>-><0/1>"))?,
        ];
        Ok((knot, paths, Construction::EvenN))
    } else {
        let t = n * (2 * n * q + 1) + 2;
        let knot = MontesinosKnot::pretzel(&[-(n + 1), n + 2, t])?;
        let paths = vec![
            path(&format!("<-1/{}>", n + 1))?,
            path(&format!("<1/{}>-><1/{}>", n + 2, n + 1))?,
            path(&format!("<1/{t}>-><0/1>"))?,
        ];
        Ok((knot, paths, Construction::OddN))
    }
}

/// Builds a knot whose exterior carries a candidate surface with `b`
/// boundary components and slope denominator `q`, and recomputes every
/// claimed property through the pipeline.
pub fn realize(b: u64, q: u64) -> Result<RealizationResult> {
    let (knot, mut paths, construction) = construction(b, q)?;
    let system = loop {
        match solve_system_detailed(&knot, &paths)? {
            SolveOutcome::Solved(system) => break system,
            // The endpoint sits on the start of a final edge: the same
            // surface is carried by the path without that edge.
            SolveOutcome::Rejected(Rejection::EmptyFinalEdge(i)) => {
                let vs = paths[i].vertices();
                paths[i] = Edgepath::from_vertices(vs[..vs.len() - 1].to_vec())?;
            }
            SolveOutcome::Rejected(why) => {
                return Err(Error::Invariant(format!(
                    "the construction system on {knot} has no solution: {why:?}"
                )))
            }
        }
    };
    let surface = analyze(&system)?;
    let mut checks = vec![
        Check::new(
            "boundary_components",
            surface.boundary_components == BigInt::from(b),
            format!("{} (want {b})", surface.boundary_components),
        ),
        Check::new(
            "slope_denominator",
            surface.slope_denominator == BigInt::from(q),
            format!("{} (want {q})", surface.slope_denominator),
        ),
        Check::new(
            "orientable",
            surface.orientable.is_yes(),
            surface.orientable.to_string(),
        ),
    ];
    let inc = surface.incompressible;
    checks.push(Check {
        name: "incompressible".into(),
        status: match inc {
            Incompressibility::Unscreened | Incompressibility::PatternAmbiguous => {
                CheckStatus::Uncertified
            }
            i if i.is_yes() => CheckStatus::Pass,
            _ => CheckStatus::Fail,
        },
        detail: match inc {
            Incompressibility::PatternAmbiguous => {
                "pattern-ambiguous (asserted incompressible; the r-cycle screen cannot decide)"
                    .into()
            }
            _ => inc.to_string(),
        },
    });
    if let Some(g) = &surface.genus {
        checks.push(Check::new("genus", !g.is_negative_value(), g.to_string()));
    }
    Ok(RealizationResult {
        b,
        q,
        knot,
        surface,
        construction,
        checks,
    })
}

trait NonNegative {
    fn is_negative_value(&self) -> bool;
}

impl NonNegative for BigInt {
    fn is_negative_value(&self) -> bool {
        self.sign() == num_bigint::Sign::Minus
    }
}

/// Closed-form values for the three-path system on `P(−p, p, q)`, with
/// `a = p − 1`, `b = q − 1`, `g = gcd(a, b)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyPrediction {
    #[serde(serialize_with = "crate::arith::serialize_bigint")]
    pub boundary_components: BigInt,
    #[serde(serialize_with = "crate::arith::serialize_bigint")]
    pub slope_denominator: BigInt,
    #[serde(serialize_with = "crate::arith::serialize_bigint")]
    pub sheets: BigInt,
    pub twist: crate::arith::Fraction,
}

pub fn family_prediction(p: i64, q: i64) -> FamilyPrediction {
    let (a, b) = (BigInt::from(p - 1), BigInt::from(q - 1));
    let g = a.gcd(&b);
    let two_a2 = BigInt::from(2) * &a * &a;
    let h = (&a + &b).gcd(&two_a2);
    FamilyPrediction {
        boundary_components: &h / &g,
        slope_denominator: (&a + &b) / &h,
        sheets: (&a + &b) / &g,
        twist: crate::arith::Fraction::new(
            &two_a2 - BigInt::from(2) * &a - BigInt::from(2) * &b,
            &a + &b,
        )
        .expect("a + b > 0"),
    }
}

impl fmt::Display for Construction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Construction::EvenN => "even-n",
            Construction::OddN => "odd-n",
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_pretzel_and_montesinos() {
        let k = parse_knot("P(-3,3,7)").unwrap();
        assert_eq!(
            k.tangles,
            vec![
                Tangle::from_ints(-1, 3),
                Tangle::from_ints(1, 3),
                Tangle::from_ints(1, 7)
            ]
        );
        assert_eq!(k.to_string(), "P(-3,3,7)");
        let k = parse_knot(" M(-2/5, 1/3, 2/7) ").unwrap();
        assert_eq!(k.to_string(), "M(-2/5,1/3,2/7)");
        assert_eq!(parse_knot("P(-2,3,11)").unwrap().len(), 3);
        assert!(
            matches!(parse_knot("P(-4,3,-4)"), Err(Error::InvalidArgument(m)) if m.contains("2-component link"))
        );
    }

    #[test]
    fn parse_errors() {
        assert_eq!(parse_knot("P(3)"), Err(Error::Arity(1)));
        match parse_knot("P(-3,x,7)") {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 5),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            parse_knot("P(-3,1,7)"),
            Err(Error::Parse { position: 5, .. })
        ));
        assert!(matches!(
            parse_knot("Q(1,2,3)"),
            Err(Error::Parse { position: 0, .. })
        ));
        assert!(matches!(parse_knot("P(1,2,3"), Err(Error::Parse { .. })));
        assert!(matches!(
            parse_knot("P(-3,,7)"),
            Err(Error::Parse { position: 5, .. })
        ));
    }

    #[test]
    fn realize_examples() {
        let r = realize(4, 3).unwrap();
        assert_eq!(r.knot.to_string(), "P(-3,3,23)");
        assert_eq!(r.surface.boundary_components, 4.into());
        assert_eq!(r.surface.slope_denominator, 3.into());
        assert!(r.verified());
        let r = realize(2, 2).unwrap();
        assert_eq!(r.knot.to_string(), "P(-2,3,7)");
        assert_eq!(r.surface.boundary_components, 2.into());
        assert_eq!(r.surface.slope_denominator, 2.into());
        assert!(r.verified());
        let e = realize(3, 2).unwrap_err();
        assert!(e.to_string().contains("odd"));
    }

    #[test]
    fn prediction_at_p3_q7() {
        let f = family_prediction(3, 7);
        assert_eq!(f.sheets, 4.into());
        assert_eq!(f.boundary_components, 4.into());
        assert_eq!(f.slope_denominator, 1.into());
        assert_eq!(f.twist, crate::arith::Fraction::from_ints(-1, 1));
    }
}
