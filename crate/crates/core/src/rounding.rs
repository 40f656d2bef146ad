//! Integer representations by rounding a relaxation solution.
//!
//! Starting from a rational solution `(q*, w*)` of the relaxed
//! representation problem (winning sums reach `q`, losing sums stay one
//! below, `q >= 1`, `w_i >= 1`, integrality dropped), two constructions
//! produce integer representations:
//!
//! - flooring after scaling by the player count `n`, always valid;
//! - flooring after scaling by a carefully chosen multiplier
//!   `lambda in [l1, u1]` with `l1 = (2-sqrt2) n - (sqrt2-1)` and
//!   `u1 = (2-sqrt2) n + (sqrt2-1)`, which caps the blow-up at about
//!   `0.586 n + 0.414` instead of `n`.
//!
//! The multiplier exists wherever `g(lambda) = lambda - sum_i
//! frac(lambda w*_i)` is positive; `g` is right-continuous and piecewise
//! linear, so sweeping its breakpoints `k / w*_i` inside the interval finds
//! one deterministically. The irrational interval ends are handled as
//! outward rational brackets, and candidates are accepted only inside the
//! inward bracket, so every accepted multiplier certainly lies in the
//! interval.

use std::collections::BTreeSet;

use num_traits::{One, Signed, Zero};

use crate::bounds::{sqrt_bracket, RationalBracket};
use crate::error::{Error, Result};
use crate::game::{Coalition, SimpleGame};
use crate::integer_repr::IntegerRepresentation;
use crate::linalg::{feasible_inequality, Feasibility, IneqSystem, Int, IntMatrix, Rational};

/// Decimal digits used for the sqrt(2) bracket; the resulting interval
/// brackets are far narrower than the documented 1e-9.
const SQRT_DIGITS: u32 = 18;

/// Outward bracket of `sqrt(2)`.
pub fn sqrt2() -> RationalBracket {
    sqrt_bracket(2, SQRT_DIGITS)
}

/// Outward bracket of `2 - sqrt(2)`, the ceiling of the f curve.
pub fn two_minus_sqrt2() -> RationalBracket {
    let s = sqrt2();
    RationalBracket { lo: rational(2) - s.hi, hi: rational(2) - s.lo }
}

/// Outward bracket of `2 (sqrt(2) - 1)`, where the f curve reaches the
/// ceiling.
pub fn lower_threshold() -> RationalBracket {
    let s = sqrt2();
    RationalBracket {
        lo: rational(2) * s.lo - rational(2),
        hi: rational(2) * s.hi - rational(2),
    }
}

fn rational(v: i64) -> Rational {
    Rational::from_integer(Int::from(v))
}

/// The multiplier interval `[l1, u1]`, both ends as outward rational
/// brackets. `u1` is exact for a single player (the irrational part cancels).
#[derive(Clone, Debug)]
pub struct LambdaInterval {
    pub ell1: RationalBracket,
    pub u1: RationalBracket,
}

pub fn lambda_interval(n: usize) -> LambdaInterval {
    let s = sqrt2();
    let n_i = n as i64;
    // l1 = (2n + 1) - (n + 1) sqrt2, u1 = (2n - 1) + (1 - n) sqrt2.
    let ell1 = RationalBracket {
        lo: rational(2 * n_i + 1) - rational(n_i + 1) * &s.hi,
        hi: rational(2 * n_i + 1) - rational(n_i + 1) * &s.lo,
    };
    let c = 1 - n_i; // <= 0
    let u1 = RationalBracket {
        lo: rational(2 * n_i - 1) + rational(c) * &s.hi,
        hi: rational(2 * n_i - 1) + rational(c) * &s.lo,
    };
    LambdaInterval { ell1, u1 }
}

/// A rational solution of the relaxed representation problem over the
/// minimal-winning / maximal-losing triplet.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelaxationSolution {
    pub quota: Rational,
    pub weights: Vec<Rational>,
}

impl RelaxationSolution {
    /// Constraint check against the triplet families: winning sums reach the
    /// quota, losing sums stay at least one below, `q >= 1`, `w_i >= 1`.
    pub fn satisfies(&self, min_winning: &[Coalition], max_losing: &[Coalition]) -> bool {
        let one = Rational::one();
        if self.quota < one || self.weights.iter().any(|w| *w < one) {
            return false;
        }
        let sum = |c: &Coalition| -> Rational {
            c.players().map(|p| self.weights[p - 1].clone()).sum()
        };
        min_winning.iter().all(|c| sum(c) >= self.quota)
            && max_losing.iter().all(|c| sum(c) <= self.quota.clone() - &one)
    }
}

/// Solves the relaxation for a monotone proper game without null players.
/// Infeasibility means the game is not weighted.
pub fn solve_relaxation(g: &SimpleGame) -> Result<RelaxationSolution> {
    if !g.is_monotone() {
        return Err(Error::MonotonicityRequired);
    }
    if !g.is_proper() {
        return Err(Error::ProperGameRequired);
    }
    if !g.null_players().is_empty() {
        return Err(Error::NullPlayersPresent);
    }
    let n = g.n();
    let min_winning = g.minimal_winning();
    let max_losing = g.maximal_losing();
    // Variables (q, w_1..w_n), all free; bounds are explicit rows.
    let rows = min_winning.len() + max_losing.len() + 1 + n;
    let mut m = IntMatrix::zero(rows, n + 1);
    let mut rhs = vec![Int::zero(); rows];
    for (r, c) in min_winning.iter().enumerate() {
        m.set(r, 0, Int::from(-1));
        for p in c.players() {
            m.set(r, p, Int::from(1));
        }
    }
    for (k, c) in max_losing.iter().enumerate() {
        let r = min_winning.len() + k;
        m.set(r, 0, Int::from(1));
        for p in c.players() {
            m.set(r, p, Int::from(-1));
        }
        rhs[r] = Int::from(1);
    }
    let q_row = min_winning.len() + max_losing.len();
    m.set(q_row, 0, Int::from(1));
    rhs[q_row] = Int::from(1);
    for i in 0..n {
        m.set(q_row + 1 + i, i + 1, Int::from(1));
        rhs[q_row + 1 + i] = Int::from(1);
    }
    let sys = IneqSystem::ge(m, rhs, vec![false; n + 1]);
    match feasible_inequality(&sys)? {
        Feasibility::Feasible(sol) => {
            let relaxed = RelaxationSolution {
                quota: sol.values[0].clone(),
                weights: sol.values[1..].to_vec(),
            };
            debug_assert!(relaxed.satisfies(&min_winning, &max_losing));
            Ok(relaxed)
        }
        Feasibility::Infeasible => Err(Error::NotWeighted),
    }
}

fn floor_int(v: &Rational) -> Int {
    v.floor().to_integer()
}

fn check_triplet(
    quota: &Int,
    weights: &[Int],
    min_winning: &[Coalition],
    max_losing: &[Coalition],
) -> bool {
    let sum = |c: &Coalition| -> Int { c.players().map(|p| weights[p - 1].clone()).sum() };
    min_winning.iter().all(|c| &sum(c) >= quota)
        && max_losing.iter().all(|c| sum(c) <= quota - Int::one())
}

/// The always-valid scaling: `w' = floor(n w*)`, `q' = floor(n (q* - 1)) + 1`.
/// The result is verified against the triplet and checked to stay
/// componentwise below `n (q*; w*)`; both are guaranteed, so a failure is a
/// bug, not bad input.
pub fn scale_by_n(g: &SimpleGame, sol: &RelaxationSolution) -> Result<IntegerRepresentation> {
    let n = g.n();
    let n_r = rational(n as i64);
    let quota = floor_int(&(&n_r * (sol.quota.clone() - Rational::one()))) + Int::one();
    let weights: Vec<Int> = sol.weights.iter().map(|w| floor_int(&(&n_r * w))).collect();
    let min_winning = g.minimal_winning();
    let max_losing = g.maximal_losing();
    if !check_triplet(&quota, &weights, &min_winning, &max_losing) {
        return Err(Error::internal("factor-n scaling produced an invalid representation"));
    }
    let q_ok = Rational::from_integer(quota.clone()) <= &n_r * &sol.quota;
    let w_ok = weights
        .iter()
        .zip(&sol.weights)
        .all(|(wi, ws)| Rational::from_integer(wi.clone()) <= &n_r * ws);
    if !q_ok || !w_ok {
        return Err(Error::internal("factor-n scaling exceeded its componentwise cap"));
    }
    Ok(IntegerRepresentation { quota, weights, det_abs: None })
}

/// `g(lambda) = lambda - sum_i (lambda w_i - floor(lambda w_i))`, evaluated
/// exactly. Meaningful for `lambda > 0`.
pub fn g_eval(lambda: &Rational, weights: &[Rational]) -> Rational {
    debug_assert!(lambda.is_positive());
    let mut acc = lambda.clone();
    for w in weights {
        let prod = lambda * w;
        acc -= &prod - prod.floor();
    }
    acc
}

/// Outcome of the multiplier sweep.
#[derive(Clone, Debug)]
pub struct LambdaRounding {
    pub lambda: Rational,
    pub g_value: Rational,
    pub representation: IntegerRepresentation,
    pub interval: LambdaInterval,
}

/// Finds a multiplier `lambda` in `[l1, u1]` with `g(lambda) > 0` and floors
/// the relaxation solution with it.
///
/// Candidates are every breakpoint `k / w*_i` inside the inward bracket plus
/// the upper end of the inward bracket; among those with positive `g` the one
/// maximizing `g` wins, ties to the smaller multiplier. The positive
/// candidate always exists; running out would contradict the existence
/// theorem and is raised as an internal error.
pub fn find_lambda(g: &SimpleGame, sol: &RelaxationSolution) -> Result<LambdaRounding> {
    let n = g.n();
    let interval = lambda_interval(n);
    let lo = interval.ell1.hi.clone();
    let hi = interval.u1.lo.clone();
    if lo > hi {
        return Err(Error::internal("inward multiplier bracket is empty"));
    }

    let mut candidates: BTreeSet<Rational> = BTreeSet::new();
    candidates.insert(hi.clone());
    for w in &sol.weights {
        let mut k = (&lo * w).ceil().to_integer();
        let k_max = (&hi * w).floor().to_integer();
        while k <= k_max {
            let lambda = Rational::from_integer(k.clone()) / w;
            if lambda >= lo && lambda <= hi {
                candidates.insert(lambda);
            }
            k += Int::one();
        }
    }

    let mut best: Option<(Rational, Rational)> = None;
    for lambda in &candidates {
        let value = g_eval(lambda, &sol.weights);
        if value.is_positive() {
            let better = match &best {
                None => true,
                Some((_, bv)) => value > *bv,
            };
            if better {
                best = Some((lambda.clone(), value));
            }
        }
    }
    // The theorem places a positive point in the closed interval; the sliver
    // between the true lower end and the inward bracket is the one place the
    // sweep could miss, so try the bracket point before giving up.
    if best.is_none() {
        let value = g_eval(&lo, &sol.weights);
        if value.is_positive() {
            best = Some((lo.clone(), value));
        }
    }
    let Some((lambda, g_value)) = best else {
        return Err(Error::internal(
            "no multiplier with positive g found; contradicts the rounding theorem",
        ));
    };

    let quota = floor_int(&(&lambda * (sol.quota.clone() - Rational::one()))) + Int::one();
    let weights: Vec<Int> = sol.weights.iter().map(|w| floor_int(&(&lambda * w))).collect();
    let min_winning = g.minimal_winning();
    let max_losing = g.maximal_losing();
    if !check_triplet(&quota, &weights, &min_winning, &max_losing) {
        return Err(Error::internal("lambda rounding produced an invalid representation"));
    }
    // Componentwise cap at the lower bracket of u1, which is at least as
    // strong as the cap at u1 itself.
    let cap = interval.u1.lo.clone();
    let q_ok = Rational::from_integer(quota.clone()) <= &cap * &sol.quota;
    let w_ok = weights
        .iter()
        .zip(&sol.weights)
        .all(|(wi, ws)| Rational::from_integer(wi.clone()) <= &cap * ws);
    if !q_ok || !w_ok {
        return Err(Error::internal("lambda rounding exceeded its componentwise cap"));
    }
    Ok(LambdaRounding {
        lambda,
        g_value,
        representation: IntegerRepresentation { quota, weights, det_abs: None },
        interval,
    })
}

/// `f(x) = (integral of the fractional part over [-x, 0]) / x` in closed
/// form: with `m = floor(x)` and `r = x - m`, the full unit cells contribute
/// `m/2` and the partial cell `r - r^2/2`, so `f(x) = (m/2 + r - r^2/2) / x`.
pub fn f_eval(x: &Rational) -> Result<Rational> {
    if !x.is_positive() {
        return Err(Error::InvalidInput("f is defined for x > 0".into()));
    }
    let m = x.floor();
    let r = x - &m;
    let half = Rational::new(Int::one(), Int::from(2));
    let value = (&m * &half + &r - &r * &r * &half) / x;
    Ok(value)
}
