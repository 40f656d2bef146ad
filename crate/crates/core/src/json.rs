//! JSON schemas for games, verdicts, and representations.
//!
//! Games: `{"n": 3, "winning": [[1,2],[1,3],...]}` or
//! `{"n": 3, "minimal_winning": [[...]], "maximal_losing": [[...]]}` with
//! 1-indexed players and each coalition's players ascending. Emitted
//! coalition lists are ordered by size then encoding, so output is stable
//! byte for byte.
//!
//! Rationals are strings in lowest terms (`"3/2"`, integers without the
//! denominator). Integer representations use plain JSON integers.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::game::{Coalition, SimpleGame, TradingTransform};
use crate::integer_repr::IntegerRepresentation;
use crate::linalg::{Int, Rational};
use crate::rough::{PotentCertificate, RoughSource, RoughVerdict};
use crate::rounding::{LambdaRounding, RelaxationSolution};
use crate::weightedness::{WeightRepresentation, WeightednessVerdict};

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GameJson {
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub winning: Option<Vec<Vec<usize>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub minimal_winning: Option<Vec<Vec<usize>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub maximal_losing: Option<Vec<Vec<usize>>>,
}

pub fn coalitions_to_lists(coalitions: &[Coalition]) -> Vec<Vec<usize>> {
    coalitions.iter().map(|c| c.players().collect()).collect()
}

pub fn lists_to_coalitions(lists: &[Vec<usize>], n: usize) -> Result<Vec<Coalition>> {
    lists.iter().map(|l| Coalition::from_players(l, n)).collect()
}

/// Canonical JSON form of a game: the explicit winning family.
pub fn game_to_json(g: &SimpleGame) -> GameJson {
    GameJson {
        n: g.n(),
        winning: Some(coalitions_to_lists(g.winning())),
        minimal_winning: None,
        maximal_losing: None,
    }
}

pub fn game_from_json(spec: &GameJson) -> Result<SimpleGame> {
    match (&spec.winning, &spec.minimal_winning, &spec.maximal_losing) {
        (Some(w), None, None) => {
            SimpleGame::from_winning(spec.n, &lists_to_coalitions(w, spec.n)?)
        }
        (None, Some(minw), Some(maxl)) => SimpleGame::from_min_max(
            spec.n,
            &lists_to_coalitions(minw, spec.n)?,
            &lists_to_coalitions(maxl, spec.n)?,
        ),
        _ => Err(Error::InvalidInput(
            "game JSON needs either \"winning\" or both \"minimal_winning\" and \"maximal_losing\""
                .into(),
        )),
    }
}

pub fn game_from_str(s: &str) -> Result<SimpleGame> {
    let spec: GameJson =
        serde_json::from_str(s).map_err(|e| Error::InvalidInput(format!("bad game JSON: {e}")))?;
    game_from_json(&spec)
}

pub fn rational_to_string(r: &Rational) -> String {
    r.to_string()
}

pub fn rational_from_string(s: &str) -> Result<Rational> {
    s.parse()
        .map_err(|e| Error::InvalidInput(format!("bad rational '{s}': {e}")))
}

fn int_to_i64(v: &Int) -> Result<i64> {
    i64::try_from(v.clone()).map_err(|_| Error::internal("integer too large for JSON"))
}

/// `{"verdict":"weighted","q":"p/q","w":[...]}` /
/// `{"verdict":"non_weighted","size":j,"X":[[...]],"Y":[[...]]}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "verdict")]
pub enum WeightednessJson {
    #[serde(rename = "weighted")]
    Weighted { q: String, w: Vec<String> },
    #[serde(rename = "non_weighted")]
    NonWeighted {
        size: usize,
        #[serde(rename = "X")]
        xs: Vec<Vec<usize>>,
        #[serde(rename = "Y")]
        ys: Vec<Vec<usize>>,
    },
}

pub fn weightedness_to_json(v: &WeightednessVerdict) -> WeightednessJson {
    match v {
        WeightednessVerdict::Weighted(rep) => WeightednessJson::Weighted {
            q: rational_to_string(&rep.quota),
            w: rep.weights.iter().map(rational_to_string).collect(),
        },
        WeightednessVerdict::NonWeighted { certificate, .. } => WeightednessJson::NonWeighted {
            size: certificate.size(),
            xs: coalitions_to_lists(certificate.xs()),
            ys: coalitions_to_lists(certificate.ys()),
        },
    }
}

/// Reconstructs the checkable content of a weightedness verdict from JSON.
pub fn weightedness_from_json(
    j: &WeightednessJson,
    n: usize,
) -> Result<either::Either<WeightRepresentation, TradingTransform>> {
    match j {
        WeightednessJson::Weighted { q, w } => Ok(either::Either::Left(WeightRepresentation {
            quota: rational_from_string(q)?,
            weights: w.iter().map(|s| rational_from_string(s)).collect::<Result<_>>()?,
        })),
        WeightednessJson::NonWeighted { xs, ys, .. } => {
            Ok(either::Either::Right(TradingTransform::new(
                lists_to_coalitions(xs, n)?,
                lists_to_coalitions(ys, n)?,
            )?))
        }
    }
}

/// Minimal stand-in for the either crate, local to the JSON layer.
pub mod either {
    #[derive(Clone, Debug)]
    pub enum Either<L, R> {
        Left(L),
        Right(R),
    }
}

/// `{"q": 2, "w": [1,1,1], "objective": "quota"}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct IntegerReprJson {
    pub q: i64,
    pub w: Vec<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub objective: Option<String>,
}

pub fn integer_repr_to_json(
    rep: &IntegerRepresentation,
    objective: Option<&str>,
) -> Result<IntegerReprJson> {
    Ok(IntegerReprJson {
        q: int_to_i64(&rep.quota)?,
        w: rep.weights.iter().map(int_to_i64).collect::<Result<_>>()?,
        objective: objective.map(str::to_owned),
    })
}

/// Rough verdicts mirror the weightedness schema, with potency data for the
/// negative case.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "verdict")]
pub enum RoughJson {
    #[serde(rename = "roughly_weighted")]
    RoughlyWeighted { q: i64, w: Vec<i64>, source: String },
    #[serde(rename = "not_roughly_weighted")]
    NotRough {
        potent: bool,
        size: usize,
        #[serde(rename = "X")]
        xs: Vec<Vec<usize>>,
        #[serde(rename = "Y")]
        ys: Vec<Vec<usize>>,
        /// Indices of the grand coalition within `X`.
        grand_in_x: Vec<usize>,
        /// Indices of the empty coalition within `Y`.
        empty_in_y: Vec<usize>,
    },
}

pub fn rough_to_json(v: &RoughVerdict, n: usize) -> Result<RoughJson> {
    Ok(match v {
        RoughVerdict::RoughlyWeighted { quota, weights, source } => RoughJson::RoughlyWeighted {
            q: int_to_i64(quota)?,
            w: weights.iter().map(int_to_i64).collect::<Result<_>>()?,
            source: match source {
                RoughSource::Passer => "passer".into(),
                RoughSource::P4 => "p4".into(),
            },
        },
        RoughVerdict::NotRough(cert) => rough_certificate_to_json(cert, n),
    })
}

pub fn rough_certificate_to_json(cert: &PotentCertificate, n: usize) -> RoughJson {
    RoughJson::NotRough {
        potent: true,
        size: cert.len(),
        xs: coalitions_to_lists(cert.transform.xs()),
        ys: coalitions_to_lists(cert.transform.ys()),
        grand_in_x: cert.grand_positions(n),
        empty_in_y: cert.empty_positions(),
    }
}

/// Output of the rounding pipeline: the relaxation solution, the factor-n
/// representation, and the multiplier-rounded one.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RoundingJson {
    pub relaxation: RelaxationJson,
    pub n_scaled: IntegerReprJson,
    pub lambda: String,
    pub g_at_lambda: String,
    pub lambda_rounded: IntegerReprJson,
    pub interval: IntervalJson,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RelaxationJson {
    pub q: String,
    pub w: Vec<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct IntervalJson {
    pub ell1_lo: String,
    pub ell1_hi: String,
    pub u1_lo: String,
    pub u1_hi: String,
}

pub fn rounding_to_json(
    relaxation: &RelaxationSolution,
    n_scaled: &IntegerRepresentation,
    rounded: &LambdaRounding,
) -> Result<RoundingJson> {
    Ok(RoundingJson {
        relaxation: RelaxationJson {
            q: rational_to_string(&relaxation.quota),
            w: relaxation.weights.iter().map(rational_to_string).collect(),
        },
        n_scaled: integer_repr_to_json(n_scaled, None)?,
        lambda: rational_to_string(&rounded.lambda),
        g_at_lambda: rational_to_string(&rounded.g_value),
        lambda_rounded: integer_repr_to_json(&rounded.representation, None)?,
        interval: IntervalJson {
            ell1_lo: rational_to_string(&rounded.interval.ell1.lo),
            ell1_hi: rational_to_string(&rounded.interval.ell1.hi),
            u1_lo: rational_to_string(&rounded.interval.u1.lo),
            u1_hi: rational_to_string(&rounded.interval.u1.hi),
        },
    })
}
