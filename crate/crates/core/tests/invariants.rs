//! Cross-module invariants, checked exhaustively on small player counts and
//! by property tests elsewhere.

use proptest::prelude::*;

use votecert::bounds::{alpha, alpha_bruteforce};
use votecert::enumeration::{
    enumerate_monotone, monotone_winning_bitmaps, permutations, GameFilters, DEDEKIND,
};
use votecert::game::{verify_trading_transform, Coalition, SimpleGame, TradingTransform};
use votecert::integer_repr::minimum_representations;
use votecert::linalg::{determinant, rat_int, Int, IntMatrix, Rational};
use votecert::rough::{
    clamped_p3_representation, is_rough_representation_rational,
};
use votecert::rounding::g_eval;
use votecert::weightedness::{decide_weighted, y_column_sign_invariant, WeightednessVerdict};

/// Independent count of antichains in the subset lattice of an n-set, the
/// oracle for the enumeration totals: monotone games correspond one-to-one
/// with their minimal winning antichains.
fn antichain_count(n: usize) -> usize {
    fn comparable(a: u64, b: u64) -> bool {
        a & b == a || a & b == b
    }
    fn rec(n_subsets: u64, start: u64, chosen: &mut Vec<u64>) -> usize {
        let mut total = 1; // the antichain built so far
        for s in start..n_subsets {
            if chosen.iter().all(|&c| !comparable(c, s)) {
                chosen.push(s);
                total += rec(n_subsets, s + 1, chosen);
                chosen.pop();
            }
        }
        total
    }
    rec(1u64 << n, 0, &mut Vec::new())
}

#[test]
fn enumeration_matches_antichain_oracle() {
    for n in 1..=4 {
        assert_eq!(
            monotone_winning_bitmaps(n, false).unwrap().len(),
            antichain_count(n),
            "n = {n}"
        );
        assert_eq!(antichain_count(n), DEDEKIND[n - 1]);
    }
}

#[test]
fn enumeration_matches_antichain_oracle_n5() {
    assert_eq!(antichain_count(5), 7581);
    assert_eq!(monotone_winning_bitmaps(5, false).unwrap().len(), 7581);
}

#[test]
fn min_max_round_trip_on_all_small_monotone_games() {
    for n in 1..=4 {
        for g in enumerate_monotone(n, GameFilters::default()).unwrap() {
            let minw = g.minimal_winning();
            let maxl = g.maximal_losing();
            if minw.is_empty() || maxl.is_empty() {
                // Degenerate games have one empty family and no triplet form.
                continue;
            }
            let rebuilt = SimpleGame::from_min_max(n, &minw, &maxl).unwrap();
            assert_eq!(rebuilt.winning(), g.winning());
        }
    }
}

#[test]
fn families_are_antichains_and_characterize_membership() {
    for n in 1..=4 {
        for g in enumerate_monotone(n, GameFilters::default()).unwrap() {
            let minw = g.minimal_winning();
            let maxl = g.maximal_losing();
            for (i, a) in minw.iter().enumerate() {
                for b in &minw[i + 1..] {
                    assert!(!a.is_subset_of(*b) && !b.is_subset_of(*a));
                }
            }
            for (i, a) in maxl.iter().enumerate() {
                for b in &maxl[i + 1..] {
                    assert!(!a.is_subset_of(*b) && !b.is_subset_of(*a));
                }
            }
            for mask in 0..(1u64 << n) {
                let c = Coalition::from_mask(mask);
                let winning = g.is_winning(c);
                assert_eq!(winning, minw.iter().any(|m| m.is_subset_of(c)));
                assert_eq!(!winning, maxl.iter().any(|m| c.is_subset_of(*m)));
            }
        }
    }
}

#[test]
fn relabeling_preserves_verdicts_and_maps_certificates() {
    let perms = permutations(3);
    for g in enumerate_monotone(3, GameFilters::default()).unwrap() {
        let base = decide_weighted(&g).unwrap();
        for perm in &perms {
            let relabeled = g.relabel(perm);
            let moved = decide_weighted(&relabeled).unwrap();
            assert_eq!(base.is_weighted(), moved.is_weighted());
            if let WeightednessVerdict::NonWeighted { certificate, .. } = &base {
                let mapped = certificate.relabel(perm);
                assert!(verify_trading_transform(&relabeled, &mapped, true));
            }
            if let WeightednessVerdict::Weighted(rep) = &base {
                let mut weights = vec![Rational::from_integer(Int::from(0)); 3];
                for p in 1..=3 {
                    weights[perm[p - 1] - 1] = rep.weights[p - 1].clone();
                }
                let moved_rep = votecert::weightedness::WeightRepresentation {
                    quota: rep.quota.clone(),
                    weights,
                };
                assert!(moved_rep.represents(&relabeled));
            }
        }
    }
}

#[test]
fn d1_basis_sign_normalization_across_n4_games() {
    for g in enumerate_monotone(4, GameFilters::default()).unwrap() {
        if let votecert::linalg::Feasibility::Feasible(sol) =
            votecert::weightedness::d1_feasible(&g).unwrap()
        {
            assert!(y_column_sign_invariant(&g, &sol), "game {g:?}");
        }
    }
}

#[test]
fn clamped_p3_solutions_stay_rough_on_n4_games() {
    let filters = GameFilters { proper: true, ..GameFilters::default() };
    for g in enumerate_monotone(4, filters).unwrap() {
        if let Some((q, w)) = clamped_p3_representation(&g).unwrap() {
            assert!(is_rough_representation_rational(&g, &q, &w), "game {g:?}");
        }
    }
}

/// The minimum search box is the proved bound box; widening it must not
/// find anything better. Checked on every proper monotone 4-player game.
#[test]
fn minimum_search_box_is_not_binding_n4() {
    let filters = GameFilters { proper: true, ..GameFilters::default() };
    for g in enumerate_monotone(4, filters).unwrap() {
        let boxed = minimum_representations(&g);
        let a_n = i64::try_from(alpha(4).unwrap()).unwrap();
        let a_n1 = i64::try_from(alpha(5).unwrap()).unwrap();
        let wide = votecert::integer_repr::search_box_for_test(&g, 2 * a_n, 4 * a_n + 1);
        match (boxed, wide) {
            (Ok(b), Ok(w)) => {
                assert_eq!(b.quota.quota, w.quota.quota, "quota objective, game {g:?}");
                assert_eq!(
                    b.max_weight.max_abs_weight(),
                    w.max_weight.max_abs_weight(),
                    "max-weight objective, game {g:?}"
                );
                assert_eq!(
                    b.weight_sum.weight_sum(),
                    w.weight_sum.weight_sum(),
                    "weight-sum objective, game {g:?}"
                );
                assert!(i64::try_from(b.quota.quota.clone()).unwrap() <= a_n1);
            }
            (Err(_), Err(_)) => {}
            (b, w) => panic!("box disagreement for {g:?}: {b:?} vs {w:?}"),
        }
    }
}

#[test]
fn g_is_piecewise_linear_with_unit_jumps() {
    // Weights from a typical relaxation solution; slope between breakpoints
    // is 1 - sum(w), and values at breakpoints equal the right limits.
    let weights = vec![rat_int(1), Rational::new(Int::from(3), Int::from(2)), rat_int(2)];
    let slope = rat_int(1) - weights.iter().cloned().sum::<Rational>();
    // Breakpoints here are multiples of 1/6; a step well inside a cell must
    // follow the slope, starting from the breakpoint's own (right-limit) value.
    let tiny = Rational::new(Int::from(1), Int::from(1_000_000));
    for num in 2..=6u64 {
        let bp = Rational::new(Int::from(num), Int::from(2));
        let right = g_eval(&(bp.clone() + &tiny), &weights);
        let at = g_eval(&bp, &weights);
        assert_eq!(right, at.clone() + &tiny * &slope, "breakpoint {bp}");
    }
}

#[test]
fn alpha_bruteforce_matches_table_through_4() {
    for n in 1..=4 {
        assert_eq!(alpha_bruteforce(n).unwrap(), alpha(n).unwrap());
    }
}

proptest! {
    #[test]
    fn bareiss_matches_cofactor_on_random_matrices(entries in proptest::collection::vec(-9i64..=9, 16)) {
        let m = IntMatrix::from_fn(4, 4, |i, j| Int::from(entries[4 * i + j]));
        let bare = determinant(&m).unwrap();
        let cof = cofactor_det(&m);
        prop_assert_eq!(bare, cof);
    }

    #[test]
    fn transform_verification_is_permutation_invariant(
        xs_perm in proptest::sample::select(vec![0usize, 1, 2, 3, 4, 5]),
        ys_perm in proptest::sample::select(vec![0usize, 1, 2, 3, 4, 5]),
    ) {
        // Reorder the sides of a known certificate; truth value must not move.
        let g = SimpleGame::from_min_max(
            4,
            &[coalition(&[1, 2]), coalition(&[3, 4])],
            &[coalition(&[1, 3]), coalition(&[1, 4]), coalition(&[2, 3]), coalition(&[2, 4])],
        )
        .unwrap();
        let xs = vec![coalition(&[1, 2]), coalition(&[3, 4])];
        let ys = vec![coalition(&[1, 3]), coalition(&[2, 4])];
        let t0 = TradingTransform::new(xs.clone(), ys.clone()).unwrap();
        let expected = verify_trading_transform(&g, &t0, true);
        let t1 = TradingTransform::new(
            apply_two_perm(&xs, xs_perm),
            apply_two_perm(&ys, ys_perm),
        )
        .unwrap();
        prop_assert_eq!(verify_trading_transform(&g, &t1, true), expected);
    }
}

fn coalition(players: &[usize]) -> Coalition {
    Coalition::from_players(players, 62).unwrap()
}

fn apply_two_perm(side: &[Coalition], seed: usize) -> Vec<Coalition> {
    let mut out = side.to_vec();
    if seed % 2 == 1 {
        out.swap(0, 1);
    }
    out
}

fn cofactor_det(m: &IntMatrix) -> Int {
    let n = m.rows();
    if n == 1 {
        return m.get(0, 0).clone();
    }
    let mut acc = Int::from(0);
    for j in 0..n {
        let rows: Vec<usize> = (1..n).collect();
        let cols: Vec<usize> = (0..n).filter(|&x| x != j).collect();
        let minor = cofactor_det(&m.submatrix(&rows, &cols));
        let term = m.get(0, j) * minor;
        if j % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}
