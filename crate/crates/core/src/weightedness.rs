//! Deciding weightedness with certificates in both directions.
//!
//! A game is weighted exactly when the inequality system P1 below is
//! feasible. When it is not, duality gives a feasible equality system D1
//! whose basic solutions scale (by the basis determinant) to integer
//! multiplicity vectors over the winning and losing families; expanding the
//! multiplicities yields a trading transform whose size is the determinant
//! magnitude, and therefore at most `alpha_{n+1}`.

use num_traits::{Signed, Zero};

use crate::bounds::{alpha, hadamard_bound, ALPHA_MAX_N};
use crate::error::{Error, Result};
use crate::game::{verify_trading_transform, Coalition, SimpleGame, TradingTransform};
use crate::linalg::{
    determinant, feasible_equality, feasible_inequality, BasicSolution, Feasibility, IneqSystem,
    Int, IntMatrix, Rational, Sense,
};

/// A rational quota/weight pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightRepresentation {
    pub quota: Rational,
    pub weights: Vec<Rational>,
}

impl WeightRepresentation {
    /// Exhaustive check that winning coalitions are exactly those with
    /// weight sum at least the quota. Exponential in the player count.
    pub fn represents(&self, g: &SimpleGame) -> bool {
        let n = g.n();
        assert_eq!(self.weights.len(), n);
        for mask in 0..(1u64 << n) {
            let c = Coalition::from_mask(mask);
            let total: Rational = c.players().map(|p| self.weights[p - 1].clone()).sum();
            if (total >= self.quota) != g.is_winning(c) {
                return false;
            }
        }
        true
    }
}

/// The verdict: either a separating representation or a trading transform
/// certifying that none exists.
#[derive(Clone, Debug)]
pub enum WeightednessVerdict {
    Weighted(WeightRepresentation),
    NonWeighted {
        certificate: TradingTransform,
        det_abs: Int,
    },
}

impl WeightednessVerdict {
    pub fn is_weighted(&self) -> bool {
        matches!(self, WeightednessVerdict::Weighted(_))
    }
}

/// The feasibility system for weightedness: for every winning coalition
/// `sum w_i >= q`, for every losing coalition `sum w_i <= q - eps`, together
/// with `eps > 0`. Variables are ordered `(w_1..w_n, -q, eps)`, all free;
/// rows are the winning block, then the losing block, then the eps
/// positivity row (strict, solved as `eps >= 1` since the system is a cone).
pub fn build_p1(g: &SimpleGame) -> IneqSystem {
    let n = g.n();
    let winning = g.winning();
    let losing = g.losing();
    let rows = winning.len() + losing.len() + 1;
    let mut m = IntMatrix::zero(rows, n + 2);
    for (r, c) in winning.iter().enumerate() {
        for p in c.players() {
            m.set(r, p - 1, Int::from(1));
        }
        m.set(r, n, Int::from(1));
    }
    for (k, c) in losing.iter().enumerate() {
        let r = winning.len() + k;
        for p in c.players() {
            m.set(r, p - 1, Int::from(-1));
        }
        m.set(r, n, Int::from(-1));
        m.set(r, n + 1, Int::from(-1));
    }
    m.set(rows - 1, n + 1, Int::from(1));
    let mut strict = vec![false; rows];
    strict[rows - 1] = true;
    IneqSystem::new(
        m,
        vec![Int::zero(); rows],
        vec![Sense::Ge; rows],
        strict,
        vec![false; n + 2],
    )
}

/// The Farkas dual of P1: nonnegative multipliers `x` over winning and `y`
/// over losing coalitions with equal per-player counts, equal totals, and
/// `sum y = 1`. Returns the equality matrix and right-hand side; columns are
/// the winning family then the losing family, in canonical order.
pub fn build_d1(g: &SimpleGame) -> (IntMatrix, Vec<Int>) {
    let n = g.n();
    let winning = g.winning();
    let losing = g.losing();
    let cols = winning.len() + losing.len();
    let mut m = IntMatrix::zero(n + 2, cols);
    for (j, c) in winning.iter().enumerate() {
        for p in c.players() {
            m.set(p - 1, j, Int::from(1));
        }
        m.set(n, j, Int::from(1));
    }
    for (k, c) in losing.iter().enumerate() {
        let j = winning.len() + k;
        for p in c.players() {
            m.set(p - 1, j, Int::from(-1));
        }
        m.set(n, j, Int::from(-1));
        m.set(n + 1, j, Int::from(-1));
    }
    let mut rhs = vec![Int::zero(); n + 2];
    rhs[n + 1] = Int::from(-1);
    (m, rhs)
}

/// Upper cap for certificate sizes: `alpha_{n+1}` exactly when tabulated,
/// otherwise the (outward) Hadamard bracket's upper end. Used as a
/// never-false-alarm monitor on produced certificates.
pub fn certificate_size_cap(n: usize) -> Result<Rational> {
    if n + 1 <= ALPHA_MAX_N {
        Ok(Rational::from_integer(alpha(n + 1)?))
    } else {
        Ok(hadamard_bound(n + 1)?.hi)
    }
}

/// Decides weightedness. Degenerate games (every or no coalition winning)
/// are weighted by convention and short-circuit the solver.
pub fn decide_weighted(g: &SimpleGame) -> Result<WeightednessVerdict> {
    let n = g.n();
    if g.num_winning() == 0 {
        return Ok(WeightednessVerdict::Weighted(WeightRepresentation {
            quota: Rational::from_integer(Int::from(1)),
            weights: vec![Rational::zero(); n],
        }));
    }
    if g.num_winning() == 1 << n {
        return Ok(WeightednessVerdict::Weighted(WeightRepresentation {
            quota: Rational::zero(),
            weights: vec![Rational::zero(); n],
        }));
    }

    let p1 = build_p1(g);
    if let Feasibility::Feasible(sol) = feasible_inequality(&p1)? {
        let eps = sol.values[n + 1].clone();
        if !eps.is_positive() {
            return Err(Error::internal("P1 solution has nonpositive eps"));
        }
        // Normalize so the winning/losing separation is exactly one unit.
        let quota = -sol.values[n].clone() / &eps;
        let weights = sol.values[..n].iter().map(|w| w / &eps).collect();
        let rep = WeightRepresentation { quota, weights };
        return Ok(WeightednessVerdict::Weighted(rep));
    }

    let (d1, rhs) = build_d1(g);
    let sol = match feasible_equality(&d1, &rhs, &vec![true; d1.cols()])? {
        Feasibility::Feasible(sol) => sol,
        Feasibility::Infeasible => {
            return Err(Error::internal(
                "both P1 and D1 infeasible: duality violated",
            ))
        }
    };
    let certificate = expand_certificate(g, &sol)?;
    let cap = certificate_size_cap(n)?;
    if Rational::from_integer(Int::from(certificate.size())) > cap {
        return Err(Error::internal(format!(
            "certificate size {} exceeds the alpha bound",
            certificate.size()
        )));
    }
    if !verify_trading_transform(g, &certificate, true) {
        return Err(Error::internal("constructed certificate fails verification"));
    }
    Ok(WeightednessVerdict::NonWeighted { certificate, det_abs: sol.det_abs.clone() })
}

/// Scales a D1 basic solution to integer multiplicities and expands them
/// into coalition sequences, each coalition repeated according to its
/// multiplicity, in canonical family order.
fn expand_certificate(g: &SimpleGame, sol: &BasicSolution) -> Result<TradingTransform> {
    let winning = g.winning();
    let losing = g.losing();
    let xs = expand_side(&sol.values[..winning.len()], winning, &sol.det_abs)?;
    let ys = expand_side(&sol.values[winning.len()..], &losing, &sol.det_abs)?;
    if xs.len() != ys.len() {
        return Err(Error::internal("certificate sides have different sizes"));
    }
    if Int::from(ys.len()) != sol.det_abs {
        return Err(Error::internal("certificate size differs from |det B|"));
    }
    TradingTransform::new(xs, ys)
}

pub(crate) fn expand_side(
    values: &[Rational],
    family: &[Coalition],
    det_abs: &Int,
) -> Result<Vec<Coalition>> {
    let mut out = Vec::new();
    for (v, &c) in values.iter().zip(family) {
        let scaled = v * Rational::from_integer(det_abs.clone());
        if !scaled.is_integer() || scaled.is_negative() {
            return Err(Error::internal("scaled multiplicity not a nonnegative integer"));
        }
        let mut count = scaled.to_integer();
        while count.is_positive() {
            out.push(c);
            count -= 1;
        }
    }
    Ok(out)
}

/// The sign-normalization identity behind the size bound: negating the
/// y-indexed columns of a D1 basis matrix must not change the determinant
/// magnitude, and turns the matrix 0-1 valued.
pub fn y_column_sign_invariant(g: &SimpleGame, sol: &BasicSolution) -> bool {
    let n_winning = g.num_winning();
    let mut flipped = sol.basis_matrix.clone();
    let y_cols: Vec<usize> = sol
        .basis
        .iter()
        .enumerate()
        .filter(|(_, &var)| var >= n_winning)
        .map(|(idx, _)| idx)
        .collect();
    flipped.negate_columns(&y_cols);
    let original = determinant(&sol.basis_matrix).expect("square");
    let after = determinant(&flipped).expect("square");
    original.abs() == after.abs() && flipped.is_zero_one()
}

/// Runs D1 on its own; used by the duality-exclusivity suites.
pub fn d1_feasible(g: &SimpleGame) -> Result<Feasibility> {
    let (d1, rhs) = build_d1(g);
    feasible_equality(&d1, &rhs, &vec![true; d1.cols()])
}

/// Runs P1 on its own; used by the duality-exclusivity suites.
pub fn p1_feasible(g: &SimpleGame) -> Result<Feasibility> {
    feasible_inequality(&build_p1(g))
}
