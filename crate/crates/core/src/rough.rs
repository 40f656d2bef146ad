//! Rough weightedness: representations with ties allowed at the quota, and
//! potent certificates when none exist.
//!
//! A game is roughly weighted when some nonzero nonnegative `(q; w)` makes
//! every below-quota coalition losing and every above-quota coalition
//! winning. For proper games the decision splits cleanly: either some player
//! passes every coalition containing them (then a unit weight on that player
//! with quota zero works), or the quota can be normalized to one and the
//! system P4 below decides the rest. When neither holds, the dual system
//! with the grand/empty multiplicities shifted up by one produces a potent
//! certificate: a trading transform with every X winning including the grand
//! coalition and every Y losing including the empty one, of length at most
//! `2 alpha_{n+1}`.

use num_traits::{One, Signed, Zero};

use crate::bounds::{alpha, alpha_or_one, hadamard_bound, ALPHA_MAX_N};
use crate::error::{Error, Result};
use crate::game::{verify_trading_transform, Coalition, SimpleGame, TradingTransform};
use crate::linalg::{
    feasible_equality, feasible_inequality, Feasibility, IneqSystem, Int, IntMatrix, Rational,
    Sense,
};
use crate::weightedness::expand_side;

/// How a rough representation was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RoughSource {
    Passer,
    P4,
}

/// A trading transform witnessing non-rough-weightedness: all X winning with
/// the grand coalition among them, all Y losing with the empty coalition
/// among them.
#[derive(Clone, Debug)]
pub struct PotentCertificate {
    pub transform: TradingTransform,
    pub det_abs: Int,
}

impl PotentCertificate {
    pub fn len(&self) -> usize {
        self.transform.size()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Positions of the grand coalition among the X side.
    pub fn grand_positions(&self, n: usize) -> Vec<usize> {
        let grand = Coalition::grand(n);
        self.transform
            .xs()
            .iter()
            .enumerate()
            .filter(|(_, c)| **c == grand)
            .map(|(i, _)| i)
            .collect()
    }

    /// Positions of the empty coalition among the Y side.
    pub fn empty_positions(&self) -> Vec<usize> {
        self.transform
            .ys()
            .iter()
            .enumerate()
            .filter(|(_, c)| c.is_empty())
            .map(|(i, _)| i)
            .collect()
    }

    /// Full potency check against a game.
    pub fn verify(&self, g: &SimpleGame) -> bool {
        verify_trading_transform(g, &self.transform, true)
            && !self.grand_positions(g.n()).is_empty()
            && !self.empty_positions().is_empty()
    }
}

/// The rough verdict: an integer representation or a potent certificate.
#[derive(Clone, Debug)]
pub enum RoughVerdict {
    RoughlyWeighted {
        quota: Int,
        weights: Vec<Int>,
        source: RoughSource,
    },
    NotRough(PotentCertificate),
}

impl RoughVerdict {
    pub fn is_roughly_weighted(&self) -> bool {
        matches!(self, RoughVerdict::RoughlyWeighted { .. })
    }
}

/// Checks the rough-representation conditions exhaustively: below-quota
/// coalitions lose, above-quota coalitions win, and `(q; w)` is not all
/// zero. Exponential in the player count.
pub fn is_rough_representation(g: &SimpleGame, quota: &Int, weights: &[Int]) -> bool {
    let n = g.n();
    assert_eq!(weights.len(), n);
    if quota.is_zero() && weights.iter().all(|w| w.is_zero()) {
        return false;
    }
    if weights.iter().any(|w| w.is_negative()) {
        return false;
    }
    for mask in 0..(1u64 << n) {
        let c = Coalition::from_mask(mask);
        let total: Int = c.players().map(|p| weights[p - 1].clone()).sum();
        if &total < quota && g.is_winning(c) {
            return false;
        }
        if &total > quota && !g.is_winning(c) {
            return false;
        }
    }
    true
}

/// The feasibility system for rough weightedness as stated: winning sums at
/// least `q`, losing sums at most `q`, and positive total weight. Variables
/// `(w_1..w_n, -q)`, all free; the positivity row is strict and solved as
/// `sum w >= 1` (the system is a cone).
pub fn build_p3(g: &SimpleGame) -> IneqSystem {
    let n = g.n();
    let winning = g.winning();
    let losing = g.losing();
    let rows = winning.len() + losing.len() + 1;
    let mut m = IntMatrix::zero(rows, n + 1);
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
    }
    for j in 0..n {
        m.set(rows - 1, j, Int::from(1));
    }
    let mut strict = vec![false; rows];
    strict[rows - 1] = true;
    IneqSystem::new(
        m,
        vec![Int::zero(); rows],
        vec![Sense::Ge; rows],
        strict,
        vec![false; n + 1],
    )
}

/// The quota-one normalization used for the representation direction:
/// winning sums at least 1, losing sums at most 1, `sum w <= u`, with
/// `w >= 0` and `u >= 0`. Variables `(w_1..w_n, u)`.
pub fn build_p4(g: &SimpleGame) -> IneqSystem {
    let n = g.n();
    let winning = g.winning();
    let losing = g.losing();
    let rows = winning.len() + losing.len() + 1;
    let mut m = IntMatrix::zero(rows, n + 1);
    let mut rhs = vec![Int::zero(); rows];
    for (r, c) in winning.iter().enumerate() {
        for p in c.players() {
            m.set(r, p - 1, Int::from(1));
        }
        rhs[r] = Int::from(1);
    }
    for (k, c) in losing.iter().enumerate() {
        let r = winning.len() + k;
        for p in c.players() {
            m.set(r, p - 1, Int::from(-1));
        }
        rhs[r] = Int::from(-1);
    }
    for j in 0..n {
        m.set(rows - 1, j, Int::from(-1));
    }
    m.set(rows - 1, n, Int::from(1));
    IneqSystem::ge(m, rhs, vec![true; n + 1])
}

/// The Farkas dual of P3: per-player multiplier balance `-1`, equal totals.
/// Columns are the winning then losing families.
pub fn build_d3(g: &SimpleGame) -> (IntMatrix, Vec<Int>) {
    let n = g.n();
    let winning = g.winning();
    let losing = g.losing();
    let cols = winning.len() + losing.len();
    let mut m = IntMatrix::zero(n + 1, cols);
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
    }
    let mut rhs = vec![Int::from(-1); n];
    rhs.push(Int::zero());
    (m, rhs)
}

/// D3 with an artificial length variable `u >= 0` tied by `sum x = u - 1`,
/// which is what bounds the certificate length. Columns: winning family,
/// losing family, then `u`.
pub fn build_d3_plus(g: &SimpleGame) -> (IntMatrix, Vec<Int>) {
    let n = g.n();
    let winning = g.winning();
    let losing = g.losing();
    let cols = winning.len() + losing.len() + 1;
    let mut m = IntMatrix::zero(n + 2, cols);
    for (j, c) in winning.iter().enumerate() {
        for p in c.players() {
            m.set(p - 1, j, Int::from(1));
        }
        m.set(n, j, Int::from(1));
        m.set(n + 1, j, Int::from(1));
    }
    for (k, c) in losing.iter().enumerate() {
        let j = winning.len() + k;
        for p in c.players() {
            m.set(p - 1, j, Int::from(-1));
        }
        m.set(n, j, Int::from(-1));
    }
    m.set(n + 1, cols - 1, Int::from(-1));
    let mut rhs = vec![Int::from(-1); n];
    rhs.push(Int::zero());
    rhs.push(Int::from(-1));
    (m, rhs)
}

/// Upper cap `2 alpha_{n+1}` for potent certificate lengths, via the
/// Hadamard bracket when the table runs out.
pub fn potent_length_cap(n: usize) -> Result<Rational> {
    let two = Rational::from_integer(Int::from(2));
    if n + 1 <= ALPHA_MAX_N {
        Ok(two * Rational::from_integer(alpha(n + 1)?))
    } else {
        Ok(two * hadamard_bound(n + 1)?.hi)
    }
}

/// Decides rough weightedness for a proper game. The passer shortcut runs
/// first; otherwise P4 provides a det-scaled integer representation, and if
/// P4 is infeasible the game is not roughly weighted and (for monotone
/// games) a potent certificate is extracted.
pub fn decide_rough(g: &SimpleGame) -> Result<RoughVerdict> {
    if !g.is_proper() {
        return Err(Error::ProperGameRequired);
    }
    let n = g.n();

    let passers = g.passers();
    if let Some(&p) = passers.first() {
        let mut weights = vec![Int::zero(); n];
        weights[p - 1] = Int::one();
        let quota = Int::zero();
        if !is_rough_representation(g, &quota, &weights) {
            return Err(Error::internal("passer construction failed the rough check"));
        }
        check_rough_bounds(n, &quota, &weights)?;
        return Ok(RoughVerdict::RoughlyWeighted { quota, weights, source: RoughSource::Passer });
    }

    let p4 = build_p4(g);
    if let Feasibility::Feasible(sol) = feasible_inequality(&p4)? {
        let det = Rational::from_integer(sol.det_abs.clone());
        let mut weights = Vec::with_capacity(n);
        for v in &sol.values[..n] {
            let s = v * &det;
            if !s.is_integer() {
                return Err(Error::internal("det-scaled P4 weight is not integral"));
            }
            weights.push(s.to_integer());
        }
        let quota = sol.det_abs.clone();
        if !is_rough_representation(g, &quota, &weights) {
            return Err(Error::internal("P4 scaling failed the rough check"));
        }
        check_rough_bounds(n, &quota, &weights)?;
        return Ok(RoughVerdict::RoughlyWeighted { quota, weights, source: RoughSource::P4 });
    }

    if !g.is_monotone() {
        // The certificate construction is only proved under monotonicity.
        return Err(Error::MonotonicityRequired);
    }
    Ok(RoughVerdict::NotRough(potent_certificate(g)?))
}

/// Magnitude bounds for rough representations of proper games:
/// `0 <= w_i <= alpha_{n-1}`, `0 <= q <= alpha_n`, `1 <= sum w <= 2 alpha_n`.
fn check_rough_bounds(n: usize, quota: &Int, weights: &[Int]) -> Result<()> {
    if n > ALPHA_MAX_N {
        return Ok(());
    }
    let a_prev = alpha_or_one(n - 1)?;
    let a_n = alpha(n)?;
    let sum: Int = weights.iter().sum();
    let ok = weights.iter().all(|w| !w.is_negative() && *w <= a_prev)
        && !quota.is_negative()
        && *quota <= a_n
        && sum >= Int::one()
        && sum <= Int::from(2) * &a_n;
    if !ok {
        return Err(Error::internal("rough representation violated its magnitude bounds"));
    }
    Ok(())
}

/// Builds a potent certificate from a basic feasible solution of the
/// extended dual: multiplicities are det-scaled, with the grand and empty
/// coalitions shifted up by one determinant unit so both appear.
///
/// Requires monotonicity and properness; errors with
/// [`Error::RoughlyWeightedInput`] when the dual is infeasible (the game is
/// roughly weighted after all).
pub fn potent_certificate(g: &SimpleGame) -> Result<PotentCertificate> {
    if !g.is_monotone() {
        return Err(Error::MonotonicityRequired);
    }
    if !g.is_proper() {
        return Err(Error::ProperGameRequired);
    }
    let n = g.n();
    let winning = g.winning();
    let losing = g.losing();
    let (d3p, rhs) = build_d3_plus(g);
    let sol = match feasible_equality(&d3p, &rhs, &vec![true; d3p.cols()])? {
        Feasibility::Feasible(sol) => sol,
        Feasibility::Infeasible => return Err(Error::RoughlyWeightedInput),
    };
    let det_abs = sol.det_abs.clone();
    let det_r = Rational::from_integer(det_abs.clone());

    // x* over winning coalitions with the grand coalition raised by one,
    // y* over losing with the empty coalition raised by one.
    let grand = Coalition::grand(n);
    let x_raw = &sol.values[..winning.len()];
    let y_raw = &sol.values[winning.len()..winning.len() + losing.len()];
    let shift = |values: &[Rational], family: &[Coalition], special: Coalition| -> Vec<Rational> {
        values
            .iter()
            .zip(family)
            .map(|(v, &c)| if c == special { v + Rational::one() } else { v.clone() })
            .collect()
    };
    let xs = expand_side(&shift(x_raw, winning, grand), winning, &det_abs)?;
    let ys = expand_side(&shift(y_raw, &losing, Coalition::EMPTY), &losing, &det_abs)?;
    let transform = TradingTransform::new(xs, ys)?;

    // Length accounting: |X| = det * (sum x' + 1) = det * u'.
    let u_val = &sol.values[winning.len() + losing.len()];
    let expected_len = u_val * &det_r;
    if !expected_len.is_integer()
        || Int::from(transform.size()) != expected_len.to_integer()
    {
        return Err(Error::internal("potent certificate length differs from det * u"));
    }
    let cap = potent_length_cap(n)?;
    if Rational::from_integer(Int::from(transform.size())) > cap {
        return Err(Error::internal("potent certificate exceeds the length cap"));
    }
    let cert = PotentCertificate { transform, det_abs };
    if !cert.verify(g) {
        return Err(Error::internal("potent certificate failed verification"));
    }
    Ok(cert)
}

/// P3 feasibility on its own; used by the duality-exclusivity suites and the
/// clamping check below.
pub fn p3_feasible(g: &SimpleGame) -> Result<Feasibility> {
    feasible_inequality(&build_p3(g))
}

/// D3 feasibility on its own.
pub fn d3_feasible(g: &SimpleGame) -> Result<Feasibility> {
    let (d3, rhs) = build_d3(g);
    feasible_equality(&d3, &rhs, &vec![true; d3.cols()])
}

/// The clamping step of the representation proof: a P3 solution with its
/// negative weights clamped to zero is still a rough representation (for
/// monotone games). Returns the clamped rational pair for inspection.
pub fn clamped_p3_representation(g: &SimpleGame) -> Result<Option<(Rational, Vec<Rational>)>> {
    let Feasibility::Feasible(sol) = p3_feasible(g)? else {
        return Ok(None);
    };
    let n = g.n();
    let quota = -sol.values[n].clone();
    let clamped: Vec<Rational> = sol.values[..n]
        .iter()
        .map(|w| if w.is_negative() { Rational::zero() } else { w.clone() })
        .collect();
    Ok(Some((quota, clamped)))
}

/// Rational-valued rough check used for the clamped pair.
pub fn is_rough_representation_rational(
    g: &SimpleGame,
    quota: &Rational,
    weights: &[Rational],
) -> bool {
    let n = g.n();
    if quota.is_zero() && weights.iter().all(|w| w.is_zero()) {
        return false;
    }
    for mask in 0..(1u64 << n) {
        let c = Coalition::from_mask(mask);
        let total: Rational = c.players().map(|p| weights[p - 1].clone()).sum();
        if &total < quota && g.is_winning(c) {
            return false;
        }
        if &total > quota && !g.is_winning(c) {
            return false;
        }
    }
    true
}
