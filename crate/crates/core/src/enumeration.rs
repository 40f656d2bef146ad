//! Exhaustive generation of monotone simple games for small player counts.
//!
//! A monotone game on n players is an upward-closed subset of the coalition
//! lattice, encoded here as a bitmap over coalition indices (coalition mask =
//! bit position). Level n bitmaps are built from ordered pairs of level n-1
//! bitmaps `(f0, f1)` with `f0 <= f1` pointwise, which enumerates each game
//! exactly once. The totals are the Dedekind numbers: 3, 6, 20, 168, 7581
//! for n = 1..5.
//!
//! These streams drive the exhaustive property suites and the reproduction
//! of the known per-n maxima of minimum integer representations.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::game::SimpleGame;
use crate::integer_repr::{minimum_representations, IntegerRepresentation, Objective};
use crate::weightedness::decide_weighted;

/// Hard cap for full enumeration.
pub const ENUM_MAX_N: usize = 5;
/// Cap reachable with `override_limits` (bitmaps only; materializing all
/// seven million six-player games is on the caller).
pub const ENUM_OVERRIDE_MAX_N: usize = 6;

/// Dedekind numbers M(n) for n = 1..=5: the count of monotone games.
pub const DEDEKIND: [usize; 5] = [3, 6, 20, 168, 7581];

/// Known maxima over weighted monotone proper games of the minimum quota,
/// for n = 1..=5.
pub const MAX_MIN_QUOTA: [u64; 5] = [1, 2, 3, 5, 9];
/// Same for the minimum largest weight.
pub const MAX_MIN_MAX_WEIGHT: [u64; 5] = [1, 1, 2, 3, 5];
/// Same for the minimum weight sum.
pub const MAX_MIN_WEIGHT_SUM: [u64; 5] = [1, 2, 4, 8, 15];

/// Stream filters, all off by default.
#[derive(Clone, Copy, Debug, Default)]
pub struct GameFilters {
    /// Keep only games with the empty coalition losing and the grand
    /// coalition winning.
    pub proper: bool,
    /// Drop games with null players.
    pub no_null_players: bool,
    /// Keep one representative per player-permutation orbit (the one with
    /// the smallest bitmap).
    pub canonical: bool,
}

/// All monotone winning bitmaps for n players, ascending.
pub fn monotone_winning_bitmaps(n: usize, override_limits: bool) -> Result<Vec<u64>> {
    let cap = if override_limits { ENUM_OVERRIDE_MAX_N } else { ENUM_MAX_N };
    if n == 0 || n > cap {
        return Err(Error::ScopeExceeded(format!(
            "monotone enumeration capped at n <= {cap}"
        )));
    }
    // Base level: functions of zero players; the empty coalition is either
    // losing (bitmap 0) or winning (bitmap 1).
    let mut level: Vec<u64> = vec![0b0, 0b1];
    for k in 1..=n {
        let half = 1u64 << (k - 1);
        let mut next = Vec::new();
        for &lo in &level {
            for &hi in &level {
                if lo & !hi == 0 {
                    next.push(lo | (hi << half));
                }
            }
        }
        next.sort_unstable();
        level = next;
    }
    Ok(level)
}

fn bitmap_is_proper(n: usize, bits: u64) -> bool {
    bits & 1 == 0 && bits >> ((1u64 << n) - 1) & 1 == 1
}

fn bitmap_has_null_player(n: usize, bits: u64) -> bool {
    (0..n).any(|p| {
        let pbit = 1u64 << p;
        (0..(1u64 << n)).filter(|s| s & pbit == 0).all(|s| {
            (bits >> s) & 1 == (bits >> (s | pbit)) & 1
        })
    })
}

/// All permutations of `1..=n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut items: Vec<usize> = (1..=n).collect();
    let mut out = Vec::new();
    fn rec(items: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
        if k == items.len() {
            out.push(items.clone());
            return;
        }
        for i in k..items.len() {
            items.swap(k, i);
            rec(items, k + 1, out);
            items.swap(k, i);
        }
    }
    rec(&mut items, 0, &mut out);
    out.sort();
    out
}

/// Relabels a winning bitmap through a player permutation.
pub fn relabel_bitmap(n: usize, bits: u64, perm: &[usize]) -> u64 {
    let mut out = 0u64;
    for s in 0..(1u64 << n) {
        if (bits >> s) & 1 == 1 {
            let mut image = 0u64;
            for p in 0..n {
                if s & (1 << p) != 0 {
                    image |= 1 << (perm[p] - 1);
                }
            }
            out |= 1 << image;
        }
    }
    out
}

/// The orbit minimum of a winning bitmap under player permutations.
pub fn canonical_bitmap(n: usize, bits: u64, perms: &[Vec<usize>]) -> u64 {
    perms.iter().map(|perm| relabel_bitmap(n, bits, perm)).min().unwrap_or(bits)
}

/// All monotone games on n players matching the filters, each exactly once,
/// in ascending bitmap order. Hard-capped at [`ENUM_MAX_N`].
pub fn enumerate_monotone(n: usize, filters: GameFilters) -> Result<Vec<SimpleGame>> {
    let bitmaps = monotone_winning_bitmaps(n, false)?;
    let perms = if filters.canonical { permutations(n) } else { Vec::new() };
    let mut out = Vec::new();
    for bits in bitmaps {
        if filters.proper && !bitmap_is_proper(n, bits) {
            continue;
        }
        if filters.no_null_players && bitmap_has_null_player(n, bits) {
            continue;
        }
        if filters.canonical && canonical_bitmap(n, bits, &perms) != bits {
            continue;
        }
        out.push(SimpleGame::from_winning_bitmap(n, bits));
    }
    Ok(out)
}

/// Weighted games among [`enumerate_monotone`], each paired with its minimum
/// representation for the requested objective.
pub fn enumerate_weighted(
    n: usize,
    filters: GameFilters,
    objective: Objective,
) -> Result<Vec<(SimpleGame, IntegerRepresentation)>> {
    let mut out = Vec::new();
    for g in enumerate_monotone(n, filters)? {
        if !g.is_proper() {
            // The minimum search needs proper games; improper weighted games
            // carry no representation here.
            continue;
        }
        if decide_weighted(&g)?.is_weighted() {
            let reps = minimum_representations(&g)?;
            let rep = match objective {
                Objective::MaxWeight => reps.max_weight,
                Objective::Quota => reps.quota,
                Objective::WeightSum => reps.weight_sum,
            };
            out.push((g, rep));
        }
    }
    Ok(out)
}

/// One row of the minimum-representation statistics: the maxima over all
/// weighted monotone proper games of the per-game minima.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableRow {
    pub n: usize,
    pub games: usize,
    pub weighted_games: usize,
    pub max_min_quota: u64,
    pub max_min_max_weight: u64,
    pub max_min_weight_sum: u64,
}

impl TableRow {
    pub fn expected(n: usize) -> Option<TableRow> {
        if n == 0 || n > 5 {
            return None;
        }
        Some(TableRow {
            n,
            games: 0,
            weighted_games: 0,
            max_min_quota: MAX_MIN_QUOTA[n - 1],
            max_min_max_weight: MAX_MIN_MAX_WEIGHT[n - 1],
            max_min_weight_sum: MAX_MIN_WEIGHT_SUM[n - 1],
        })
    }

    pub fn matches_expected(&self) -> bool {
        TableRow::expected(self.n).is_some_and(|e| {
            e.max_min_quota == self.max_min_quota
                && e.max_min_max_weight == self.max_min_max_weight
                && e.max_min_weight_sum == self.max_min_weight_sum
        })
    }
}

/// Computes the statistics row for n by sweeping every monotone proper game
/// (null players permitted), deciding weightedness, and searching minimum
/// representations. The weightedness decision and the emptiness of the
/// search box must agree; a disagreement is a solver bug and errors out.
pub fn table_statistics(n: usize) -> Result<TableRow> {
    let bitmaps = monotone_winning_bitmaps(n, false)?;
    let proper: Vec<u64> = bitmaps
        .into_iter()
        .filter(|&b| bitmap_is_proper(n, b))
        .collect();
    let games = proper.len();

    let per_game: Vec<Result<Option<(u64, u64, u64)>>> = proper
        .par_iter()
        .map(|&bits| -> Result<Option<(u64, u64, u64)>> {
            let g = SimpleGame::from_winning_bitmap(n, bits);
            let weighted = decide_weighted(&g)?.is_weighted();
            match minimum_representations(&g) {
                Ok(reps) => {
                    if !weighted {
                        return Err(Error::internal(
                            "search box found a representation of a non-weighted game",
                        ));
                    }
                    let to_u64 = |v: crate::linalg::Int| -> u64 {
                        u64::try_from(v).expect("small representation values")
                    };
                    Ok(Some((
                        to_u64(reps.quota.quota),
                        to_u64(reps.max_weight.max_abs_weight()),
                        to_u64(reps.weight_sum.weight_sum()),
                    )))
                }
                Err(Error::NotWeighted) => {
                    if weighted {
                        return Err(Error::internal(
                            "weighted game has no representation in the search box",
                        ));
                    }
                    Ok(None)
                }
                Err(e) => Err(e),
            }
        })
        .collect();

    let mut row = TableRow {
        n,
        games,
        weighted_games: 0,
        max_min_quota: 0,
        max_min_max_weight: 0,
        max_min_weight_sum: 0,
    };
    for item in per_game {
        if let Some((q, mw, ws)) = item? {
            row.weighted_games += 1;
            row.max_min_quota = row.max_min_quota.max(q);
            row.max_min_max_weight = row.max_min_max_weight.max(mw);
            row.max_min_weight_sum = row.max_min_weight_sum.max(ws);
        }
    }
    Ok(row)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dedekind_counts() {
        for n in 1..=4 {
            assert_eq!(
                monotone_winning_bitmaps(n, false).unwrap().len(),
                DEDEKIND[n - 1],
                "n = {n}"
            );
        }
    }

    #[test]
    fn dedekind_count_n5() {
        assert_eq!(monotone_winning_bitmaps(5, false).unwrap().len(), 7581);
    }

    #[test]
    fn enumeration_cap() {
        assert!(matches!(
            monotone_winning_bitmaps(6, false),
            Err(Error::ScopeExceeded(_))
        ));
        assert!(monotone_winning_bitmaps(6, true).is_ok());
        assert!(matches!(
            monotone_winning_bitmaps(7, true),
            Err(Error::ScopeExceeded(_))
        ));
    }

    #[test]
    fn all_enumerated_games_are_monotone() {
        for g in enumerate_monotone(3, GameFilters::default()).unwrap() {
            assert!(g.is_monotone());
        }
    }

    #[test]
    fn proper_filter_counts() {
        let all = enumerate_monotone(3, GameFilters::default()).unwrap();
        let proper = enumerate_monotone(
            3,
            GameFilters { proper: true, ..GameFilters::default() },
        )
        .unwrap();
        // Only the all-winning and nothing-winning games are improper among
        // monotone ones.
        assert_eq!(all.len() - proper.len(), 2);
        assert!(proper.iter().all(|g| g.is_proper()));
    }

    #[test]
    fn canonical_orbits_cover_everything() {
        let n = 3;
        let all = monotone_winning_bitmaps(n, false).unwrap();
        let perms = permutations(n);
        let canonical: Vec<u64> = all
            .iter()
            .copied()
            .filter(|&b| canonical_bitmap(n, b, &perms) == b)
            .collect();
        // Expanding every orbit representative reproduces the full stream.
        let mut expanded: Vec<u64> = canonical
            .iter()
            .flat_map(|&b| perms.iter().map(move |p| relabel_bitmap(n, b, p)))
            .collect();
        expanded.sort_unstable();
        expanded.dedup();
        assert_eq!(expanded, all);
    }

    #[test]
    fn no_null_filter() {
        let games = enumerate_monotone(
            2,
            GameFilters { proper: true, no_null_players: true, ..GameFilters::default() },
        )
        .unwrap();
        for g in &games {
            assert!(g.null_players().is_empty());
        }
        // Proper n=2 games: unanimity, the two dictators (null partner), and
        // the disjunction; only unanimity and disjunction survive.
        assert_eq!(games.len(), 2);
    }

    #[test]
    fn every_proper_monotone_3_game_is_weighted() {
        let filters = GameFilters { proper: true, ..GameFilters::default() };
        let weighted = enumerate_weighted(3, filters, Objective::Quota).unwrap();
        assert_eq!(weighted.len(), enumerate_monotone(3, filters).unwrap().len());
    }

    #[test]
    fn table_row_small_n() {
        let row = table_statistics(2).unwrap();
        assert_eq!(row.max_min_quota, 2);
        assert_eq!(row.max_min_max_weight, 1);
        assert_eq!(row.max_min_weight_sum, 2);
        assert!(row.matches_expected());
    }
}
