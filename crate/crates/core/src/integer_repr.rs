//! Integer quota/weight representations with proved magnitude bounds.
//!
//! Scaling a basic feasible solution of the system P2 by its basis
//! determinant yields an integer representation satisfying
//! `|w_i| <= alpha_n`, `|q| <= alpha_{n+1}` and
//! `1 <= sum w_i <= 2 alpha_{n+1} - 1` for any proper game. On top of that,
//! a bounded exhaustive search finds minimum representations for small
//! monotone games, which is what reproduces the known per-n maxima of the
//! minimal quota, weight and weight-sum.

use num_traits::{Signed, Zero};

use crate::bounds::alpha;
use crate::error::{Error, Result};
use crate::game::{Coalition, SimpleGame};
use crate::linalg::{
    feasible_inequality, Feasibility, IneqSystem, Int, IntMatrix, Rational,
};

/// Player-count cap for the exhaustive minimum-representation search.
pub const MIN_REPR_MAX_N: usize = 5;

/// Objectives for the minimum-representation search.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Objective {
    MaxWeight,
    Quota,
    WeightSum,
}

impl Objective {
    pub fn name(self) -> &'static str {
        match self {
            Objective::MaxWeight => "max_weight",
            Objective::Quota => "quota",
            Objective::WeightSum => "weight_sum",
        }
    }

    pub fn parse(s: &str) -> Option<Objective> {
        match s {
            "max_weight" => Some(Objective::MaxWeight),
            "quota" => Some(Objective::Quota),
            "weight_sum" => Some(Objective::WeightSum),
            _ => None,
        }
    }
}

/// An integer quota and weight vector, with the magnitudes that the bound
/// suites assert.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegerRepresentation {
    pub quota: Int,
    pub weights: Vec<Int>,
    /// `|det B|` of the basis that produced this representation, when it came
    /// out of a solver rather than a search.
    pub det_abs: Option<Int>,
}

impl IntegerRepresentation {
    pub fn max_abs_weight(&self) -> Int {
        self.weights.iter().map(|w| w.abs()).max().unwrap_or_else(Int::zero)
    }

    pub fn quota_abs(&self) -> Int {
        self.quota.abs()
    }

    pub fn weight_sum(&self) -> Int {
        self.weights.iter().sum()
    }

    /// Exhaustive check: winning iff the weight sum reaches the quota.
    /// Exponential in the player count.
    pub fn represents(&self, g: &SimpleGame) -> bool {
        let n = g.n();
        assert_eq!(self.weights.len(), n);
        for mask in 0..(1u64 << n) {
            let c = Coalition::from_mask(mask);
            let total: Int = c.players().map(|p| self.weights[p - 1].clone()).sum();
            if (total >= self.quota) != g.is_winning(c) {
                return false;
            }
        }
        true
    }

    /// The three magnitude bounds guaranteed for solver-produced
    /// representations of an n-player proper game.
    pub fn satisfies_alpha_bounds(&self, n: usize) -> Result<bool> {
        let a_n = alpha(n)?;
        let a_n1 = alpha(n + 1)?;
        let sum = self.weight_sum();
        Ok(self.weights.iter().all(|w| w.abs() <= a_n)
            && self.quota.abs() <= a_n1
            && sum >= Int::from(1)
            && sum <= Int::from(2) * &a_n1 - 1)
    }
}

/// The inequality system behind the integer bounds: winning sums reach `q`,
/// losing sums stay at least one below, and `sum w <= u - 1` for a free cap
/// variable `u`. Variables `(w_1..w_n, -q, u)`, all free; rows are the
/// winning block, the losing block, then the cap row.
///
/// Requires the empty coalition losing and the grand coalition winning.
pub fn build_p2(g: &SimpleGame) -> Result<IneqSystem> {
    if !g.is_proper() {
        return Err(Error::ProperGameRequired);
    }
    let n = g.n();
    let winning = g.winning();
    let losing = g.losing();
    let rows = winning.len() + losing.len() + 1;
    let mut m = IntMatrix::zero(rows, n + 2);
    let mut rhs = vec![Int::zero(); rows];
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
        rhs[r] = Int::from(1);
    }
    for j in 0..n {
        m.set(rows - 1, j, Int::from(-1));
    }
    m.set(rows - 1, n + 1, Int::from(1));
    rhs[rows - 1] = Int::from(1);
    Ok(IneqSystem::ge(m, rhs, vec![false; n + 2]))
}

/// Everything the Cramer scaling of a P2 basic solution yields: the integer
/// representation plus the rational basic solution it was scaled from.
#[derive(Clone, Debug)]
pub struct ScaledP2Solution {
    pub representation: IntegerRepresentation,
    /// `(w', -q', u')` before scaling; `representation / det_abs` solves P2.
    pub basic_values: Vec<Rational>,
    pub scaled_u: Int,
}

/// Integer representation of a weighted proper game by det-scaling a basic
/// feasible solution of P2, with all three magnitude bounds asserted before
/// returning (a violation means a solver bug, not bad input).
pub fn integer_representation(g: &SimpleGame) -> Result<IntegerRepresentation> {
    Ok(integer_representation_full(g)?.representation)
}

pub fn integer_representation_full(g: &SimpleGame) -> Result<ScaledP2Solution> {
    let n = g.n();
    let p2 = build_p2(g)?;
    let sol = match feasible_inequality(&p2)? {
        Feasibility::Feasible(sol) => sol,
        Feasibility::Infeasible => return Err(Error::NotWeighted),
    };
    let det = Rational::from_integer(sol.det_abs.clone());
    let scale = |v: &Rational| -> Result<Int> {
        let s = v * &det;
        if !s.is_integer() {
            return Err(Error::internal("det-scaled P2 value is not integral"));
        }
        Ok(s.to_integer())
    };
    let weights: Vec<Int> = sol.values[..n].iter().map(&scale).collect::<Result<_>>()?;
    let quota = -scale(&sol.values[n])?;
    let scaled_u = scale(&sol.values[n + 1])?;
    let rep = IntegerRepresentation { quota, weights, det_abs: Some(sol.det_abs.clone()) };
    if n + 1 <= crate::bounds::ALPHA_MAX_N && !rep.satisfies_alpha_bounds(n)? {
        return Err(Error::internal("P2 scaling violated its magnitude bounds"));
    }
    if !rep.represents(g) {
        return Err(Error::internal("P2 scaling produced a non-representation"));
    }
    Ok(ScaledP2Solution { representation: rep, basic_values: sol.values, scaled_u })
}

/// Minimum integer representation over nonnegative weights, by exhaustive
/// search of the bound box `w in [0, alpha_n]^n`, `q in [1, alpha_{n+1}]`,
/// for monotone proper games with at most [`MIN_REPR_MAX_N`] players. The
/// box always contains a representation of a weighted game: clamping the
/// negative weights of the P2-scaled witness to zero preserves validity on
/// monotone games and keeps the quota.
///
/// Ties are broken by quota, then by the sorted weight vector, then by the
/// weight vector itself, so the result is unique and deterministic. Errors
/// with [`Error::NotWeighted`] when the box contains no representation
/// (equivalent to non-weightedness for these games).
pub fn minimum_representation(g: &SimpleGame, objective: Objective) -> Result<IntegerRepresentation> {
    let all = minimum_representations(g)?;
    Ok(match objective {
        Objective::MaxWeight => all.max_weight,
        Objective::Quota => all.quota,
        Objective::WeightSum => all.weight_sum,
    })
}

/// Minima for all three objectives in one box sweep.
#[derive(Clone, Debug)]
pub struct MinimumRepresentations {
    pub max_weight: IntegerRepresentation,
    pub quota: IntegerRepresentation,
    pub weight_sum: IntegerRepresentation,
}

pub fn minimum_representations(g: &SimpleGame) -> Result<MinimumRepresentations> {
    let n = g.n();
    if n > MIN_REPR_MAX_N {
        return Err(Error::ScopeExceeded(format!(
            "minimum-representation search capped at n <= {MIN_REPR_MAX_N}"
        )));
    }
    if !g.is_monotone() {
        return Err(Error::MonotonicityRequired);
    }
    if !g.is_proper() {
        return Err(Error::ProperGameRequired);
    }
    let w_max = i64::try_from(alpha(n)?).expect("small alpha");
    let q_max = i64::try_from(alpha(n + 1)?).expect("small alpha");
    search_box(g, w_max, q_max)
}

/// Candidate key: objective value first, then quota, then sorted weights,
/// then the raw weights.
type Key = (i64, i64, Vec<i64>, Vec<i64>);

struct Best {
    key: Option<Key>,
    quota: i64,
    weights: Vec<i64>,
}

impl Best {
    fn new() -> Best {
        Best { key: None, quota: 0, weights: Vec::new() }
    }

    fn offer(&mut self, objective: i64, quota: i64, weights: &[i64]) {
        let mut sorted = weights.to_vec();
        sorted.sort_unstable();
        let key = (objective, quota, sorted, weights.to_vec());
        if self.key.as_ref().map_or(true, |k| key < *k) {
            self.key = Some(key);
            self.quota = quota;
            self.weights = weights.to_vec();
        }
    }

    fn into_repr(self) -> Result<IntegerRepresentation> {
        if self.key.is_none() {
            return Err(Error::NotWeighted);
        }
        Ok(IntegerRepresentation {
            quota: Int::from(self.quota),
            weights: self.weights.into_iter().map(Int::from).collect(),
            det_abs: None,
        })
    }
}

/// Widened-box variant used by the suite that checks the proved box is not
/// binding.
#[doc(hidden)]
pub fn search_box_for_test(g: &SimpleGame, w_max: i64, q_max: i64) -> Result<MinimumRepresentations> {
    search_box(g, w_max, q_max)
}

/// Walks all weight vectors in `[0, w_max]^n`. For a fixed nonnegative
/// weight vector on a monotone game, validity only depends on the minimal
/// winning and maximal losing sums, and the best quota is one above the
/// losing maximum.
pub(crate) fn search_box(g: &SimpleGame, w_max: i64, q_max: i64) -> Result<MinimumRepresentations> {
    let n = g.n();
    let min_winning: Vec<u64> = g.minimal_winning().iter().map(|c| c.mask()).collect();
    let max_losing: Vec<u64> = g.maximal_losing().iter().map(|c| c.mask()).collect();
    if min_winning.is_empty() || max_losing.is_empty() {
        return Err(Error::ProperGameRequired);
    }

    let mut best_maxw = Best::new();
    let mut best_quota = Best::new();
    let mut best_sum = Best::new();

    let mut w = vec![0i64; n];
    loop {
        let sum_of = |mask: u64| -> i64 {
            let mut s = 0;
            for (i, wi) in w.iter().enumerate() {
                if mask & (1 << i) != 0 {
                    s += wi;
                }
            }
            s
        };
        let min_win = min_winning.iter().map(|&m| sum_of(m)).min().unwrap();
        let max_lose = max_losing.iter().map(|&m| sum_of(m)).max().unwrap();
        if min_win >= max_lose + 1 {
            let q = max_lose + 1;
            if q <= q_max {
                best_maxw.offer(w.iter().copied().max().unwrap(), q, &w);
                best_quota.offer(q, q, &w);
                best_sum.offer(w.iter().sum(), q, &w);
            }
        }
        // Lexicographic odometer over the weight box.
        let mut idx = n;
        while idx > 0 {
            if w[idx - 1] < w_max {
                w[idx - 1] += 1;
                break;
            }
            w[idx - 1] = 0;
            idx -= 1;
        }
        if idx == 0 {
            break;
        }
    }

    Ok(MinimumRepresentations {
        max_weight: best_maxw.into_repr()?,
        quota: best_quota.into_repr()?,
        weight_sum: best_sum.into_repr()?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(players: &[usize]) -> Coalition {
        Coalition::from_players(players, 62).unwrap()
    }

    fn majority3() -> SimpleGame {
        let winning: Vec<Coalition> = (0..8u64)
            .map(Coalition::from_mask)
            .filter(|c| c.size() >= 2)
            .collect();
        SimpleGame::from_winning(3, &winning).unwrap()
    }

    #[test]
    fn p2_row_counts_and_hypothesis() {
        let dictator = SimpleGame::from_winning(1, &[c(&[1])]).unwrap();
        assert_eq!(build_p2(&dictator).unwrap().rows(), 2 + 1);
        assert_eq!(build_p2(&majority3()).unwrap().rows(), 8 + 1);
        let all: Vec<Coalition> = (0..4u64).map(Coalition::from_mask).collect();
        let every = SimpleGame::from_winning(2, &all).unwrap();
        assert!(matches!(build_p2(&every), Err(Error::ProperGameRequired)));
    }

    #[test]
    fn dictator_representation() {
        let dictator = SimpleGame::from_winning(1, &[c(&[1])]).unwrap();
        let rep = integer_representation(&dictator).unwrap();
        assert!(rep.represents(&dictator));
        assert_eq!(rep.quota, Int::from(1));
        assert_eq!(rep.weights, vec![Int::from(1)]);
        assert!(rep.satisfies_alpha_bounds(1).unwrap());
    }

    #[test]
    fn majority_representation_within_bounds() {
        let rep = integer_representation(&majority3()).unwrap();
        assert!(rep.represents(&majority3()));
        assert!(rep.satisfies_alpha_bounds(3).unwrap());
        assert!(rep.max_abs_weight() <= Int::from(2)); // alpha_3
        assert!(rep.quota_abs() <= Int::from(3)); // alpha_4
    }

    #[test]
    fn non_weighted_game_reports_not_weighted() {
        let g = SimpleGame::from_min_max(
            4,
            &[c(&[1, 2]), c(&[3, 4])],
            &[c(&[1, 3]), c(&[1, 4]), c(&[2, 3]), c(&[2, 4])],
        )
        .unwrap();
        assert!(matches!(integer_representation(&g), Err(Error::NotWeighted)));
        assert!(matches!(
            minimum_representation(&g, Objective::Quota),
            Err(Error::NotWeighted)
        ));
    }

    #[test]
    fn scaling_consistency() {
        let full = integer_representation_full(&majority3()).unwrap();
        let det = full.representation.det_abs.clone().unwrap();
        let detr = Rational::from_integer(det);
        for (i, w) in full.representation.weights.iter().enumerate() {
            assert_eq!(Rational::from_integer(w.clone()) / &detr, full.basic_values[i]);
        }
        assert_eq!(
            Rational::from_integer(-full.representation.quota.clone()) / &detr,
            full.basic_values[3]
        );
    }

    #[test]
    fn minimum_quota_of_majority() {
        let rep = minimum_representation(&majority3(), Objective::Quota).unwrap();
        assert_eq!(rep.quota, Int::from(2));
        assert_eq!(rep.weights, vec![Int::from(1), Int::from(1), Int::from(1)]);
    }

    #[test]
    fn minimum_quota_of_unanimity5() {
        let g = SimpleGame::from_min_max(
            5,
            &[c(&[1, 2, 3, 4, 5])],
            &[
                c(&[2, 3, 4, 5]),
                c(&[1, 3, 4, 5]),
                c(&[1, 2, 4, 5]),
                c(&[1, 2, 3, 5]),
                c(&[1, 2, 3, 4]),
            ],
        )
        .unwrap();
        let rep = minimum_representation(&g, Objective::Quota).unwrap();
        assert_eq!(rep.quota, Int::from(5));
        assert!(rep.weights.iter().all(|w| *w == Int::from(1)));
    }

    #[test]
    fn minimum_search_requires_monotone_proper() {
        let g = SimpleGame::from_winning(2, &[c(&[1])]).unwrap(); // {1,2} losing
        assert!(matches!(
            minimum_representation(&g, Objective::Quota),
            Err(Error::MonotonicityRequired) | Err(Error::ProperGameRequired)
        ));
    }

    #[test]
    fn minimum_search_scope_cap() {
        let g = SimpleGame::from_winning(6, &[Coalition::grand(6)]).unwrap();
        assert!(matches!(
            minimum_representation(&g, Objective::Quota),
            Err(Error::ScopeExceeded(_))
        ));
    }
}
