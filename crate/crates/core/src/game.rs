//! Simple games over bitmask coalitions.
//!
//! A simple game is a player set `{1..n}` together with an arbitrary family
//! of winning coalitions; every other coalition is losing. Monotonicity
//! (supersets of winning coalitions win) is tracked as a flag rather than
//! enforced, because the weightedness analyses do not all require it.

use std::collections::HashSet;

use crate::error::{Error, Result};

/// Library-wide cap on the number of players, so a coalition fits in a `u64`
/// with room to spare.
pub const MAX_PLAYERS: usize = 62;

/// Hard cap for the exhaustive trade-robustness oracle.
pub const ORACLE_MAX_PLAYERS: usize = 5;
/// Hard cap on the trade size searched by the oracle.
pub const ORACLE_MAX_TRADE: usize = 9;

/// A coalition: a subset of the players `{1..n}`, player `i` stored in bit
/// `i - 1`. Membership tests, unions and popcounts are single instructions.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Coalition(u64);

impl Coalition {
    pub const EMPTY: Coalition = Coalition(0);

    /// The grand coalition `{1..n}`.
    pub fn grand(n: usize) -> Coalition {
        debug_assert!(n <= MAX_PLAYERS);
        Coalition(if n == 0 { 0 } else { (1u64 << n) - 1 })
    }

    pub fn singleton(player: usize) -> Coalition {
        debug_assert!((1..=MAX_PLAYERS).contains(&player));
        Coalition(1u64 << (player - 1))
    }

    /// Builds a coalition from 1-indexed players, validating the range.
    pub fn from_players(players: &[usize], n: usize) -> Result<Coalition> {
        let mut mask = 0u64;
        for &p in players {
            if p == 0 || p > n {
                return Err(Error::PlayerOutOfRange { player: p, n });
            }
            mask |= 1 << (p - 1);
        }
        Ok(Coalition(mask))
    }

    /// Raw bitmask accessor; bit `i` is player `i + 1`.
    pub fn mask(self) -> u64 {
        self.0
    }

    pub fn from_mask(mask: u64) -> Coalition {
        Coalition(mask)
    }

    pub fn contains(self, player: usize) -> bool {
        player >= 1 && player <= MAX_PLAYERS && self.0 & (1 << (player - 1)) != 0
    }

    pub fn size(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: Coalition) -> Coalition {
        Coalition(self.0 | other.0)
    }

    pub fn intersection(self, other: Coalition) -> Coalition {
        Coalition(self.0 & other.0)
    }

    pub fn minus(self, other: Coalition) -> Coalition {
        Coalition(self.0 & !other.0)
    }

    pub fn with(self, player: usize) -> Coalition {
        self.union(Coalition::singleton(player))
    }

    pub fn without(self, player: usize) -> Coalition {
        self.minus(Coalition::singleton(player))
    }

    pub fn is_subset_of(self, other: Coalition) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn complement(self, n: usize) -> Coalition {
        Coalition(Coalition::grand(n).0 & !self.0)
    }

    /// 1-indexed members in ascending order.
    pub fn players(self) -> impl Iterator<Item = usize> {
        let mask = self.0;
        (1..=MAX_PLAYERS).filter(move |p| mask & (1 << (p - 1)) != 0)
    }

    /// Relabels members through `perm`, where `perm[i - 1]` is the new name
    /// of player `i`.
    pub fn relabel(self, perm: &[usize]) -> Coalition {
        let mut mask = 0u64;
        for p in self.players() {
            mask |= 1 << (perm[p - 1] - 1);
        }
        Coalition(mask)
    }
}

/// Canonical certificate order: by size, then by encoding. Used everywhere a
/// coalition list is emitted, so outputs are reproducible run to run.
impl Ord for Coalition {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.size(), self.0).cmp(&(other.size(), other.0))
    }
}

impl PartialOrd for Coalition {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl std::fmt::Debug for Coalition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{")?;
        let mut first = true;
        for p in self.players() {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        write!(f, "}}")
    }
}

/// A simple game: player count plus the winning family. The losing family is
/// implicit (every coalition not in `winning`).
///
/// The winning family is stored both as a hash set (membership) and as a
/// canonically sorted vector (deterministic iteration).
#[derive(Clone)]
pub struct SimpleGame {
    n: usize,
    winning: HashSet<Coalition>,
    winning_sorted: Vec<Coalition>,
    monotone: bool,
}

impl SimpleGame {
    /// Builds a game from an explicit winning family. Duplicates are merged.
    pub fn from_winning(n: usize, winning: &[Coalition]) -> Result<SimpleGame> {
        if n == 0 || n > MAX_PLAYERS {
            return Err(Error::TooManyPlayers { n });
        }
        let grand = Coalition::grand(n);
        let mut set = HashSet::with_capacity(winning.len());
        for &c in winning {
            if !c.is_subset_of(grand) {
                let p = c.players().find(|&p| p > n).unwrap_or(n + 1);
                return Err(Error::PlayerOutOfRange { player: p, n });
            }
            set.insert(c);
        }
        let mut sorted: Vec<Coalition> = set.iter().copied().collect();
        sorted.sort();
        let monotone = compute_monotone(n, &set, &sorted);
        Ok(SimpleGame { n, winning: set, winning_sorted: sorted, monotone })
    }

    /// Reconstructs a monotone game from its minimal winning and maximal
    /// losing families, validating that the two antichains describe the same
    /// game.
    pub fn from_min_max(
        n: usize,
        min_winning: &[Coalition],
        max_losing: &[Coalition],
    ) -> Result<SimpleGame> {
        if n == 0 || n > MAX_PLAYERS {
            return Err(Error::TooManyPlayers { n });
        }
        let grand = Coalition::grand(n);
        for &c in min_winning.iter().chain(max_losing) {
            if !c.is_subset_of(grand) {
                let p = c.players().find(|&p| p > n).unwrap_or(n + 1);
                return Err(Error::PlayerOutOfRange { player: p, n });
            }
        }
        check_antichain(min_winning, "minimal winning")?;
        check_antichain(max_losing, "maximal losing")?;
        for &l in max_losing {
            for &w in min_winning {
                if w.is_subset_of(l) {
                    return Err(Error::InconsistentFamilies(format!(
                        "maximal losing {l:?} contains minimal winning {w:?}"
                    )));
                }
            }
        }
        // Upward closure of the minimal winning family.
        let mut winning = Vec::new();
        for mask in 0..(1u64 << n) {
            let c = Coalition::from_mask(mask);
            if min_winning.iter().any(|w| w.is_subset_of(c)) {
                winning.push(c);
            }
        }
        let game = SimpleGame::from_winning(n, &winning)?;
        let derived_max = game.maximal_losing();
        let mut given: Vec<Coalition> = max_losing.to_vec();
        given.sort();
        if derived_max != given {
            return Err(Error::InconsistentFamilies(format!(
                "maximal losing of the closure is {derived_max:?}, not {given:?}"
            )));
        }
        Ok(game)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_winning(&self, c: Coalition) -> bool {
        self.winning.contains(&c)
    }

    pub fn is_losing(&self, c: Coalition) -> bool {
        !self.winning.contains(&c)
    }

    /// Winning family in canonical order.
    pub fn winning(&self) -> &[Coalition] {
        &self.winning_sorted
    }

    pub fn num_winning(&self) -> usize {
        self.winning_sorted.len()
    }

    /// Losing family in canonical order. Materializes all `2^n - |W|`
    /// coalitions, so this is exponential in `n`.
    pub fn losing(&self) -> Vec<Coalition> {
        let mut out = Vec::new();
        for mask in 0..(1u64 << self.n) {
            let c = Coalition::from_mask(mask);
            if !self.winning.contains(&c) {
                out.push(c);
            }
        }
        out.sort();
        out
    }

    /// Whether supersets of winning coalitions are always winning.
    pub fn is_monotone(&self) -> bool {
        self.monotone
    }

    /// `true` when the empty coalition is losing.
    pub fn has_empty_losing(&self) -> bool {
        !self.winning.contains(&Coalition::EMPTY)
    }

    /// `true` when the grand coalition is winning.
    pub fn has_grand_winning(&self) -> bool {
        self.winning.contains(&Coalition::grand(self.n))
    }

    /// Both properness conditions at once: empty losing, grand winning.
    pub fn is_proper(&self) -> bool {
        self.has_empty_losing() && self.has_grand_winning()
    }

    /// Minimal winning coalitions: winning coalitions with no winning proper
    /// subset, as a canonically sorted antichain.
    pub fn minimal_winning(&self) -> Vec<Coalition> {
        let mut out = Vec::new();
        'outer: for &c in &self.winning_sorted {
            if self.monotone {
                for p in c.players() {
                    if self.winning.contains(&c.without(p)) {
                        continue 'outer;
                    }
                }
            } else {
                // Without monotonicity a winning subset may be several
                // players down, so compare against the whole family.
                for &other in &self.winning_sorted {
                    if other != c && other.is_subset_of(c) {
                        continue 'outer;
                    }
                }
            }
            out.push(c);
        }
        out
    }

    /// Maximal losing coalitions, as a canonically sorted antichain. Scans
    /// all `2^n` coalitions.
    pub fn maximal_losing(&self) -> Vec<Coalition> {
        let mut out = Vec::new();
        if self.monotone {
            for mask in 0..(1u64 << self.n) {
                let c = Coalition::from_mask(mask);
                if self.winning.contains(&c) {
                    continue;
                }
                let all_up_winning = (1..=self.n)
                    .filter(|&p| !c.contains(p))
                    .all(|p| self.winning.contains(&c.with(p)));
                if all_up_winning {
                    out.push(c);
                }
            }
        } else {
            // Losing supersets can skip levels, so walk losing coalitions by
            // descending size and keep those below no already-kept one.
            let mut losing = self.losing();
            losing.sort_by(|a, b| b.cmp(a));
            for c in losing {
                if !out.iter().any(|&m: &Coalition| c.is_subset_of(m)) {
                    out.push(c);
                }
            }
        }
        out.sort();
        out
    }

    /// Players whose every containing coalition is winning.
    pub fn passers(&self) -> Vec<usize> {
        let half = 1u64 << (self.n - 1);
        (1..=self.n)
            .filter(|&p| {
                let with_p = self.winning_sorted.iter().filter(|c| c.contains(p)).count() as u64;
                with_p == half
            })
            .collect()
    }

    /// Players whose presence never changes a coalition's status.
    pub fn null_players(&self) -> Vec<usize> {
        (1..=self.n)
            .filter(|&p| {
                self.winning_sorted.iter().all(|&c| {
                    if c.contains(p) {
                        self.winning.contains(&c.without(p))
                    } else {
                        self.winning.contains(&c.with(p))
                    }
                })
            })
            .collect()
    }

    /// The game with players renamed through `perm` (`perm[i - 1]` is the new
    /// name of player `i`).
    pub fn relabel(&self, perm: &[usize]) -> SimpleGame {
        let winning: Vec<Coalition> =
            self.winning_sorted.iter().map(|c| c.relabel(perm)).collect();
        SimpleGame::from_winning(self.n, &winning).expect("relabel preserves validity")
    }

    /// Encodes the winning family as a bitmask over coalition indices
    /// (coalition mask = bit position). Only usable for `n <= 6`.
    pub fn winning_bitmap(&self) -> u64 {
        assert!(self.n <= 6, "winning_bitmap requires n <= 6");
        let mut bits = 0u64;
        for c in &self.winning_sorted {
            bits |= 1 << c.mask();
        }
        bits
    }

    /// Inverse of [`winning_bitmap`](Self::winning_bitmap).
    pub fn from_winning_bitmap(n: usize, bits: u64) -> SimpleGame {
        assert!(n <= 6);
        let winning: Vec<Coalition> = (0..(1u64 << n))
            .filter(|&m| bits & (1 << m) != 0)
            .map(Coalition::from_mask)
            .collect();
        SimpleGame::from_winning(n, &winning).expect("bitmap within range")
    }
}

impl std::fmt::Debug for SimpleGame {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "SimpleGame(n={}, winning={:?})", self.n, self.winning_sorted)
    }
}

fn compute_monotone(n: usize, set: &HashSet<Coalition>, sorted: &[Coalition]) -> bool {
    sorted.iter().all(|&c| {
        (1..=n).filter(|&p| !c.contains(p)).all(|p| set.contains(&c.with(p)))
    })
}

fn check_antichain(family: &[Coalition], name: &str) -> Result<()> {
    for (i, &a) in family.iter().enumerate() {
        for &b in &family[i + 1..] {
            if a.is_subset_of(b) || b.is_subset_of(a) {
                return Err(Error::NotAntichain(format!(
                    "{name}: {a:?} and {b:?} are comparable"
                )));
            }
        }
    }
    Ok(())
}

/// A paired coalition sequence `(X_1..X_j; Y_1..Y_j)`. Balance (every player
/// appears equally often on both sides) is checked by
/// [`verify_trading_transform`], not by construction, so that candidate
/// certificates can be loaded and rejected.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TradingTransform {
    xs: Vec<Coalition>,
    ys: Vec<Coalition>,
}

impl TradingTransform {
    pub fn new(xs: Vec<Coalition>, ys: Vec<Coalition>) -> Result<TradingTransform> {
        if xs.is_empty() || xs.len() != ys.len() {
            return Err(Error::InvalidInput(format!(
                "trading transform needs equal nonempty sides, got {} and {}",
                xs.len(),
                ys.len()
            )));
        }
        Ok(TradingTransform { xs, ys })
    }

    pub fn xs(&self) -> &[Coalition] {
        &self.xs
    }

    pub fn ys(&self) -> &[Coalition] {
        &self.ys
    }

    pub fn size(&self) -> usize {
        self.xs.len()
    }

    /// Per-player appearance counts over one side.
    fn counts(side: &[Coalition], n: usize) -> Vec<usize> {
        let mut counts = vec![0usize; n];
        for c in side {
            for p in c.players() {
                counts[p - 1] += 1;
            }
        }
        counts
    }

    pub fn is_balanced(&self, n: usize) -> bool {
        Self::counts(&self.xs, n) == Self::counts(&self.ys, n)
    }

    pub fn relabel(&self, perm: &[usize]) -> TradingTransform {
        TradingTransform {
            xs: self.xs.iter().map(|c| c.relabel(perm)).collect(),
            ys: self.ys.iter().map(|c| c.relabel(perm)).collect(),
        }
    }
}

/// Checks that `t` is a trading transform over `g`'s players: every player
/// appears equally often among the `X_i` and the `Y_i`, and (when
/// `require_winning_losing`) all `X_i` win while all `Y_i` lose.
pub fn verify_trading_transform(
    g: &SimpleGame,
    t: &TradingTransform,
    require_winning_losing: bool,
) -> bool {
    let grand = Coalition::grand(g.n());
    if t.xs.iter().chain(&t.ys).any(|c| !c.is_subset_of(grand)) {
        return false;
    }
    if !t.is_balanced(g.n()) {
        return false;
    }
    if require_winning_losing {
        t.xs.iter().all(|&c| g.is_winning(c)) && t.ys.iter().all(|&c| g.is_losing(c))
    } else {
        true
    }
}

/// Outcome of the exhaustive trade-robustness oracle.
#[derive(Clone, Debug)]
pub enum TradeRobustness {
    Robust,
    Counterexample(TradingTransform),
}

impl TradeRobustness {
    pub fn is_robust(&self) -> bool {
        matches!(self, TradeRobustness::Robust)
    }
}

/// Exhaustively searches for a trading transform of size `j <= k` with all
/// `X_i` winning and all `Y_i` losing. Returns the first counterexample in a
/// fixed enumeration order, or confirms robustness.
///
/// The search is exponential; it is an oracle for cross-checking the solver
/// on small instances, hard-capped at `n <= 5`, `k <= 9` unless `override_limits`.
pub fn is_k_trade_robust_bruteforce(
    g: &SimpleGame,
    k: usize,
    override_limits: bool,
) -> Result<TradeRobustness> {
    if !override_limits && (g.n() > ORACLE_MAX_PLAYERS || k > ORACLE_MAX_TRADE) {
        return Err(Error::ScopeExceeded(format!(
            "trade-robustness oracle capped at n <= {ORACLE_MAX_PLAYERS}, k <= {ORACLE_MAX_TRADE} (got n = {}, k = {k})",
            g.n()
        )));
    }
    let winning = g.winning().to_vec();
    let losing = g.losing();
    if winning.is_empty() || losing.is_empty() {
        return Ok(TradeRobustness::Robust);
    }
    for j in 1..=k {
        // Meet in the middle on player-count vectors: hash the multisets of
        // the smaller family, stream the larger one.
        let (map_side, scan_side, map_is_y) = if winning.len() <= losing.len() {
            (&winning, &losing, false)
        } else {
            (&losing, &winning, true)
        };
        let mut map: std::collections::HashMap<Vec<u8>, Vec<Coalition>> =
            std::collections::HashMap::new();
        let mut chosen: Vec<Coalition> = Vec::with_capacity(j);
        build_multiset_map(g.n(), map_side, j, 0, &mut chosen, &mut map);
        let mut hit: Option<(Vec<Coalition>, Vec<Coalition>)> = None;
        scan_multisets(g.n(), scan_side, j, 0, &mut chosen, &mut |ms, counts| {
            if let Some(partner) = map.get(counts) {
                hit = Some((ms.to_vec(), partner.clone()));
                true
            } else {
                false
            }
        });
        if let Some((scanned, mapped)) = hit {
            let (xs, ys) = if map_is_y { (scanned, mapped) } else { (mapped, scanned) };
            let t = TradingTransform::new(xs, ys)?;
            debug_assert!(verify_trading_transform(g, &t, true));
            return Ok(TradeRobustness::Counterexample(t));
        }
    }
    Ok(TradeRobustness::Robust)
}

fn count_vec(n: usize, coalitions: &[Coalition]) -> Vec<u8> {
    let mut counts = vec![0u8; n];
    for c in coalitions {
        for p in c.players() {
            counts[p - 1] += 1;
        }
    }
    counts
}

fn build_multiset_map(
    n: usize,
    family: &[Coalition],
    j: usize,
    start: usize,
    chosen: &mut Vec<Coalition>,
    map: &mut std::collections::HashMap<Vec<u8>, Vec<Coalition>>,
) {
    if chosen.len() == j {
        map.entry(count_vec(n, chosen)).or_insert_with(|| chosen.clone());
        return;
    }
    for idx in start..family.len() {
        chosen.push(family[idx]);
        build_multiset_map(n, family, j, idx, chosen, map);
        chosen.pop();
    }
}

fn scan_multisets(
    n: usize,
    family: &[Coalition],
    j: usize,
    start: usize,
    chosen: &mut Vec<Coalition>,
    visit: &mut impl FnMut(&[Coalition], &Vec<u8>) -> bool,
) -> bool {
    if chosen.len() == j {
        return visit(chosen, &count_vec(n, chosen));
    }
    for idx in start..family.len() {
        chosen.push(family[idx]);
        let stop = scan_multisets(n, family, j, idx, chosen, visit);
        chosen.pop();
        if stop {
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(players: &[usize]) -> Coalition {
        Coalition::from_players(players, MAX_PLAYERS).unwrap()
    }

    /// All coalitions of size >= 2 out of three players.
    pub(crate) fn majority3() -> SimpleGame {
        let winning: Vec<Coalition> = (0..8u64)
            .map(Coalition::from_mask)
            .filter(|c| c.size() >= 2)
            .collect();
        SimpleGame::from_winning(3, &winning).unwrap()
    }

    #[test]
    fn dictator_flags() {
        let g = SimpleGame::from_winning(1, &[c(&[1])]).unwrap();
        assert!(g.is_monotone());
        assert!(g.has_empty_losing());
        assert!(g.has_grand_winning());
    }

    #[test]
    fn majority_game_is_symmetric_and_monotone() {
        let g = majority3();
        assert!(g.is_monotone());
        assert_eq!(g.num_winning(), 4);
        assert_eq!(g.minimal_winning(), vec![c(&[1, 2]), c(&[1, 3]), c(&[2, 3])]);
    }

    #[test]
    fn empty_winning_but_singleton_losing_is_not_monotone() {
        let g = SimpleGame::from_winning(2, &[c(&[1]), Coalition::EMPTY]).unwrap();
        assert!(!g.is_monotone());
    }

    #[test]
    fn player_out_of_range_rejected() {
        let err = SimpleGame::from_winning(2, &[c(&[3])]).unwrap_err();
        assert_eq!(err, Error::PlayerOutOfRange { player: 3, n: 2 });
    }

    #[test]
    fn from_min_max_reconstructs_closure() {
        // Player 1 plus anyone wins.
        let g = SimpleGame::from_min_max(
            3,
            &[c(&[1, 2]), c(&[1, 3])],
            &[c(&[2, 3]), c(&[1])],
        )
        .unwrap();
        assert!(g.is_winning(c(&[1, 2, 3])));
        assert!(g.is_winning(c(&[1, 2])));
        assert!(g.is_losing(c(&[2, 3])));
        assert!(g.is_losing(c(&[1])));
        assert_eq!(g.num_winning(), 3);
    }

    #[test]
    fn from_min_max_unanimity() {
        let g = SimpleGame::from_min_max(2, &[c(&[1, 2])], &[c(&[1]), c(&[2])]).unwrap();
        assert_eq!(g.num_winning(), 1);
    }

    #[test]
    fn from_min_max_containment_conflict() {
        let err = SimpleGame::from_min_max(2, &[c(&[1])], &[c(&[1])]).unwrap_err();
        assert!(matches!(err, Error::InconsistentFamilies(_)));
    }

    #[test]
    fn from_min_max_rejects_non_antichain() {
        let err =
            SimpleGame::from_min_max(3, &[c(&[1]), c(&[1, 2])], &[c(&[2, 3])]).unwrap_err();
        assert!(matches!(err, Error::NotAntichain(_)));
    }

    #[test]
    fn from_min_max_rejects_wrong_max_losing() {
        let err = SimpleGame::from_min_max(3, &[c(&[1, 2])], &[c(&[3])]).unwrap_err();
        assert!(matches!(err, Error::InconsistentFamilies(_)));
    }

    #[test]
    fn minimal_and_maximal_families() {
        // Dictator on 3 players: S wins iff it contains player 1.
        let winning: Vec<Coalition> = (0..8u64)
            .map(Coalition::from_mask)
            .filter(|c| c.contains(1))
            .collect();
        let g = SimpleGame::from_winning(3, &winning).unwrap();
        assert_eq!(g.minimal_winning(), vec![c(&[1])]);
        assert_eq!(g.maximal_losing(), vec![c(&[2, 3])]);

        let unanimity = SimpleGame::from_winning(3, &[c(&[1, 2, 3])]).unwrap();
        assert_eq!(
            unanimity.maximal_losing(),
            vec![c(&[1, 2]), c(&[1, 3]), c(&[2, 3])]
        );
    }

    #[test]
    fn minimal_winning_without_monotonicity_skips_levels() {
        // {1} and {1,2,3} winning, every other coalition losing.
        let g = SimpleGame::from_winning(3, &[c(&[1]), c(&[1, 2, 3])]).unwrap();
        assert!(!g.is_monotone());
        assert_eq!(g.minimal_winning(), vec![c(&[1])]);
        // {1,2,3} is winning but contains winning {1}: not minimal even
        // though no one-step-down subset wins.
        let ml = g.maximal_losing();
        assert!(ml.contains(&c(&[2, 3])));
        assert!(ml.contains(&c(&[1, 2])));
        assert!(ml.contains(&c(&[1, 3])));
    }

    #[test]
    fn passers_and_null_players() {
        let g = SimpleGame::from_winning(2, &[c(&[1]), c(&[1, 2])]).unwrap();
        assert_eq!(g.passers(), vec![1]);
        assert_eq!(g.null_players(), vec![2]);

        let g = majority3();
        assert!(g.passers().is_empty());
        assert!(g.null_players().is_empty());

        // All nonempty coalitions winning: everyone is a passer.
        let winning: Vec<Coalition> =
            (1..8u64).map(Coalition::from_mask).collect();
        let g = SimpleGame::from_winning(3, &winning).unwrap();
        assert_eq!(g.passers(), vec![1, 2, 3]);
    }

    #[test]
    fn verify_transform_accepts_balanced_pair() {
        let g = SimpleGame::from_min_max(
            4,
            &[c(&[1, 2]), c(&[3, 4])],
            &[c(&[1, 3]), c(&[1, 4]), c(&[2, 3]), c(&[2, 4])],
        )
        .unwrap();
        let t = TradingTransform::new(
            vec![c(&[1, 2]), c(&[3, 4])],
            vec![c(&[1, 3]), c(&[2, 4])],
        )
        .unwrap();
        assert!(verify_trading_transform(&g, &t, true));
    }

    #[test]
    fn verify_transform_rejects_winning_y() {
        let g = majority3();
        let x = c(&[1, 2]);
        let t = TradingTransform::new(vec![x], vec![x]).unwrap();
        assert!(verify_trading_transform(&g, &t, false));
        assert!(!verify_trading_transform(&g, &t, true));
    }

    #[test]
    fn verify_transform_rejects_unbalanced() {
        let g = majority3();
        let t = TradingTransform::new(vec![c(&[1, 2])], vec![c(&[1])]).unwrap();
        assert!(!verify_trading_transform(&g, &t, false));
    }

    #[test]
    fn oracle_finds_size_two_trade() {
        let g = SimpleGame::from_min_max(
            4,
            &[c(&[1, 2]), c(&[3, 4])],
            &[c(&[1, 3]), c(&[1, 4]), c(&[2, 3]), c(&[2, 4])],
        )
        .unwrap();
        match is_k_trade_robust_bruteforce(&g, 2, false).unwrap() {
            TradeRobustness::Counterexample(t) => {
                assert_eq!(t.size(), 2);
                assert!(verify_trading_transform(&g, &t, true));
            }
            TradeRobustness::Robust => panic!("expected a counterexample"),
        }
    }

    #[test]
    fn oracle_confirms_majority_robust() {
        let g = majority3();
        assert!(is_k_trade_robust_bruteforce(&g, 9, false).unwrap().is_robust());
    }

    #[test]
    fn oracle_confirms_dictator_robust() {
        let g = SimpleGame::from_winning(2, &[c(&[1]), c(&[1, 2])]).unwrap();
        assert!(is_k_trade_robust_bruteforce(&g, 9, false).unwrap().is_robust());
    }

    #[test]
    fn oracle_scope_cap() {
        let g = SimpleGame::from_winning(6, &[Coalition::grand(6)]).unwrap();
        let err = is_k_trade_robust_bruteforce(&g, 2, false).unwrap_err();
        assert!(matches!(err, Error::ScopeExceeded(_)));
        assert!(is_k_trade_robust_bruteforce(&g, 2, true).is_ok());
    }

    #[test]
    fn relabel_maps_families() {
        let g = SimpleGame::from_winning(3, &[c(&[1]), c(&[1, 2]), c(&[1, 3]), c(&[1, 2, 3])])
            .unwrap();
        let h = g.relabel(&[3, 1, 2]);
        assert!(h.is_winning(c(&[3])));
        assert!(h.is_losing(c(&[1])));
        assert_eq!(h.minimal_winning(), vec![c(&[3])]);
    }
}
