//! Acceptance suite: one test per criterion, each printing a PASS line.
//!
//! Every criterion is pinned to exact values or exact rational comparisons
//! against outward brackets; nothing here is tuned after the fact. The
//! exhaustive sweeps cover all monotone games with up to five players
//! (3, 6, 20, 168, 7581 games per player count).

use std::process::Command;

use rayon::prelude::*;

use votecert::bounds::{alpha, alpha_bruteforce, hadamard_bound, lemma1_check, sqrt_bracket};
use votecert::enumeration::{
    monotone_winning_bitmaps, table_statistics, DEDEKIND, MAX_MIN_MAX_WEIGHT, MAX_MIN_QUOTA,
    MAX_MIN_WEIGHT_SUM,
};
use votecert::error::Error;
use votecert::game::{
    is_k_trade_robust_bruteforce, verify_trading_transform, SimpleGame, TradeRobustness,
};
use votecert::integer_repr::integer_representation;
use votecert::linalg::{rat, Int, IntMatrix, Rational};
use votecert::rough::{d3_feasible, decide_rough, p3_feasible, RoughVerdict};
use votecert::rounding::{
    f_eval, find_lambda, lower_threshold, scale_by_n, solve_relaxation, two_minus_sqrt2,
};
use votecert::weightedness::{d1_feasible, decide_weighted, p1_feasible, WeightednessVerdict};

fn pass(criterion: usize, what: &str) {
    println!("ACCEPTANCE {criterion:02}: PASS - {what}");
}

fn all_monotone_games(n: usize) -> Vec<SimpleGame> {
    monotone_winning_bitmaps(n, false)
        .unwrap()
        .into_iter()
        .map(|bits| SimpleGame::from_winning_bitmap(n, bits))
        .collect()
}

/// Criterion 1: brute-forced alpha values for n <= 5 and table lookups for
/// n = 6..11, both through the library and through the `bounds` command.
#[test]
fn acceptance_01_alpha_table() {
    let expected: [u64; 11] = [1, 1, 2, 3, 5, 9, 32, 56, 144, 320, 1458];
    for n in 1..=5 {
        assert_eq!(alpha_bruteforce(n).unwrap(), Int::from(expected[n - 1]), "brute force n={n}");
    }
    for n in 6..=11 {
        assert_eq!(alpha(n).unwrap(), Int::from(expected[n - 1]), "lookup n={n}");
    }
    let out = Command::new(env!("CARGO_BIN_EXE_votecert"))
        .args(["bounds", "--max-n", "11"])
        .output()
        .expect("bounds command runs");
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["all_pass"], serde_json::Value::Bool(true));
    let alphas = report["alpha"].as_array().unwrap();
    assert_eq!(alphas.len(), 11);
    for (i, entry) in alphas.iter().enumerate() {
        assert_eq!(entry["value"].as_str().unwrap(), expected[i].to_string());
        if i < 5 {
            assert_eq!(entry["bruteforce"].as_str().unwrap(), expected[i].to_string());
        }
    }
    pass(1, "alpha 1..5 recomputed by brute force, 6..11 tabulated, bounds command agrees");
}

/// Criterion 2: alpha_n is at most (n+1)^((n+1)/2) / 2^n for n = 1..11,
/// compared exactly (odd n) or against the outward bracket's lower end.
#[test]
fn acceptance_02_determinant_upper_bound() {
    for n in 1..=11 {
        let a = Rational::from_integer(alpha(n).unwrap());
        let bound = hadamard_bound(n).unwrap();
        assert!(a <= bound.lo, "alpha({n}) vs lower bracket {}", bound.lo);
    }
    pass(2, "alpha_n <= (n+1)^((n+1)/2)/2^n for n = 1..11 via exact brackets");
}

/// Criterion 3: exhaustive determinant lemma over all 0-1 matrices of size
/// 2..4: an all-one line forces |det| <= alpha_{n-1}, a single-zero line
/// forces |det| <= 2 alpha_{n-1}.
#[test]
fn acceptance_03_lemma_exhaustive() {
    for n in 2..=4usize {
        let cells = n * n;
        let mut checked_c1 = 0u64;
        let mut checked_c2 = 0u64;
        for bits in 0..(1u64 << cells) {
            let m = IntMatrix::from_fn(n, n, |i, j| Int::from((bits >> (n * i + j)) & 1));
            let report = lemma1_check(&m).unwrap();
            if report.all_one_line {
                assert_eq!(report.all_one_bound_holds, Some(true), "c1 fails for {m:?}");
                checked_c1 += 1;
            }
            if report.single_zero_line {
                assert_eq!(report.single_zero_bound_holds, Some(true), "c2 fails for {m:?}");
                checked_c2 += 1;
            }
        }
        assert!(checked_c1 > 0 && checked_c2 > 0);
    }
    pass(3, "all 0-1 matrices of size <= 4 satisfy both determinant-line bounds");
}

/// Criterion 4: on every monotone game with n <= 5, the weightedness verdict
/// is sound and non-weighted certificates respect the alpha size bound.
#[test]
fn acceptance_04_weightedness_sweep() {
    for n in 1..=5usize {
        let games = all_monotone_games(n);
        assert_eq!(games.len(), DEDEKIND[n - 1], "game count n={n}");
        let cap = usize::try_from(alpha(n + 1).unwrap()).unwrap();
        games.par_iter().for_each(|g| {
            match decide_weighted(g).unwrap() {
                WeightednessVerdict::Weighted(rep) => {
                    assert!(rep.represents(g), "unsound representation for {g:?}");
                }
                WeightednessVerdict::NonWeighted { certificate, det_abs } => {
                    assert!(
                        verify_trading_transform(g, &certificate, true),
                        "unsound certificate for {g:?}"
                    );
                    assert_eq!(Int::from(certificate.size()), det_abs);
                    assert!(certificate.size() <= cap, "size bound violated for {g:?}");
                }
            }
        });
    }
    pass(4, "verdicts sound on all 7581+168+20+6+3 monotone games, sizes within alpha");
}

/// Criterion 5: the LP-based verdict agrees with the exhaustive trade
/// search at the alpha_5 = 5 bound on every monotone game with n <= 4.
#[test]
fn acceptance_05_oracle_equivalence() {
    for n in 1..=4usize {
        let games = all_monotone_games(n);
        games.par_iter().for_each(|g| {
            let weighted = decide_weighted(g).unwrap().is_weighted();
            let robust = is_k_trade_robust_bruteforce(g, 5, false).unwrap();
            match robust {
                TradeRobustness::Robust => assert!(weighted, "robust but not weighted: {g:?}"),
                TradeRobustness::Counterexample(t) => {
                    assert!(!weighted, "weighted with a trade: {g:?}");
                    assert!(verify_trading_transform(g, &t, true));
                }
            }
        });
    }
    pass(5, "weightedness equals 5-trade robustness on all monotone games with n <= 4");
}

/// Criterion 6: every weighted monotone proper game with n <= 5 gets an
/// integer representation within the alpha bounds, valid on all coalitions.
#[test]
fn acceptance_06_integer_representation_sweep() {
    for n in 1..=5usize {
        let games = all_monotone_games(n);
        games.par_iter().for_each(|g| {
            if !g.is_proper() {
                return;
            }
            match integer_representation(g) {
                Ok(rep) => {
                    assert!(rep.represents(g), "invalid representation for {g:?}");
                    assert!(rep.satisfies_alpha_bounds(n).unwrap(), "bounds fail for {g:?}");
                }
                Err(Error::NotWeighted) => {
                    assert!(!decide_weighted(g).unwrap().is_weighted());
                }
                Err(e) => panic!("unexpected error for {g:?}: {e}"),
            }
        });
    }
    pass(6, "integer representations valid and alpha-bounded on every weighted game, n <= 5");
}

/// Criterion 7: the maxima over weighted games of minimum quota, minimum
/// largest weight and minimum weight sum match the known values for
/// n = 1..5; the quota row equals alpha_{n+1}, certifying tightness.
#[test]
fn acceptance_07_table_reproduction() {
    for n in 1..=5usize {
        let row = table_statistics(n).unwrap();
        assert_eq!(row.max_min_quota, MAX_MIN_QUOTA[n - 1], "quota column n={n}");
        assert_eq!(
            row.max_min_max_weight,
            MAX_MIN_MAX_WEIGHT[n - 1],
            "max-weight column n={n}"
        );
        assert_eq!(
            row.max_min_weight_sum,
            MAX_MIN_WEIGHT_SUM[n - 1],
            "weight-sum column n={n}"
        );
        assert_eq!(
            Int::from(row.max_min_quota),
            alpha(n + 1).unwrap(),
            "quota tightness n={n}"
        );
    }
    pass(7, "minimum-representation maxima are (1,2,3,5,9), (1,1,2,3,5), (1,2,4,8,15)");
}

/// Criterion 8: the multiplier rounding succeeds on every weighted monotone
/// proper game without null players, n <= 5, with the multiplier inside the
/// bracketed interval and the output componentwise below the interval cap.
#[test]
fn acceptance_08_rounding_sweep() {
    for n in 1..=5usize {
        let games = all_monotone_games(n);
        games.par_iter().for_each(|g| {
            if !g.is_proper() || !g.null_players().is_empty() {
                return;
            }
            let relaxation = match solve_relaxation(g) {
                Ok(r) => r,
                Err(Error::NotWeighted) => return,
                Err(e) => panic!("relaxation failed for {g:?}: {e}"),
            };
            let scaled = scale_by_n(g, &relaxation).unwrap();
            assert!(scaled.represents(g), "factor-n scaling invalid for {g:?}");
            let rounded = find_lambda(g, &relaxation).unwrap();
            assert!(rounded.representation.represents(g), "rounding invalid for {g:?}");
            assert!(rounded.g_value > Rational::from_integer(Int::from(0)));
            let iv = &rounded.interval;
            assert!(rounded.lambda >= iv.ell1.hi && rounded.lambda <= iv.u1.lo);
            // Componentwise cap through the bracket's lower end.
            let cap = &iv.u1.lo;
            assert!(
                Rational::from_integer(rounded.representation.quota.clone())
                    <= cap * &relaxation.quota
            );
            for (wi, ws) in rounded.representation.weights.iter().zip(&relaxation.weights) {
                assert!(Rational::from_integer(wi.clone()) <= cap * ws);
            }
            if n >= 2 {
                // The multiplier beats plain factor-n scaling: u1 < n.
                assert!(iv.u1.hi < Rational::from_integer(Int::from(n as i64)));
            }
        });
    }
    pass(8, "multiplier rounding valid, in-interval and capped on all eligible games, n <= 5");
}

/// Criterion 9: the rounding loss curve stays below 2 - sqrt2 on the 1/1000
/// grid over [2(sqrt2 - 1), 20] and at every interior local maximum, with
/// equality at the left end within 1e-9.
#[test]
fn acceptance_09_loss_curve_ceiling() {
    let ceiling = two_minus_sqrt2();
    let threshold = lower_threshold();
    // Grid start: first 1/1000 point at or above the threshold's upper end.
    let start = {
        let scaled = threshold.hi.clone() * Rational::from_integer(Int::from(1000));
        let mut k = scaled.ceil().to_integer();
        if k < Int::from(1) {
            k = Int::from(1);
        }
        u64::try_from(k).unwrap()
    };
    for k in start..=20_000 {
        let x = rat(k as i64, 1000);
        let fx = f_eval(&x).unwrap();
        assert!(fx <= ceiling.lo, "f({k}/1000) = {fx} exceeds the ceiling");
    }
    // Interior local maxima sit at sqrt(m (m + 1)).
    for m in 1..=19u64 {
        let bracket = sqrt_bracket(m * (m + 1), 12);
        for x in [bracket.lo.clone(), bracket.hi.clone()] {
            let fx = f_eval(&x).unwrap();
            if m == 1 {
                // The maximum touches the ceiling here; outward comparison.
                assert!(fx <= ceiling.hi);
            } else {
                assert!(fx <= ceiling.lo, "local max m={m}");
            }
        }
    }
    // Equality at the threshold within 1e-9.
    let tol = rat(1, 1_000_000_000);
    for x in [threshold.lo.clone(), threshold.hi.clone()] {
        let fx = f_eval(&x).unwrap();
        assert!(fx <= ceiling.hi.clone() + tol.clone());
        assert!(fx >= ceiling.lo.clone() - tol.clone());
    }
    pass(9, "loss curve bounded by 2 - sqrt2 on the grid and at local maxima, equal at the edge");
}

/// Criterion 10: rough verdicts on every monotone proper game with n <= 5:
/// representations obey the alpha bounds, certificates verify and respect
/// the doubled size bound.
#[test]
fn acceptance_10_rough_sweep() {
    use std::sync::atomic::{AtomicUsize, Ordering};
    let not_rough_seen = AtomicUsize::new(0);
    for n in 1..=5usize {
        let games = all_monotone_games(n);
        let a_prev = if n >= 2 { alpha(n - 1).unwrap() } else { Int::from(1) };
        let a_n = alpha(n).unwrap();
        let cap = usize::try_from(Int::from(2) * alpha(n + 1).unwrap()).unwrap();
        games.par_iter().for_each(|g| {
            if !g.is_proper() {
                return;
            }
            match decide_rough(g).unwrap() {
                RoughVerdict::RoughlyWeighted { quota, weights, .. } => {
                    assert!(
                        votecert::rough::is_rough_representation(g, &quota, &weights),
                        "invalid rough representation for {g:?}"
                    );
                    assert!(weights.iter().all(|w| *w >= Int::from(0) && *w <= a_prev));
                    assert!(quota >= Int::from(0) && quota <= a_n);
                    let sum: Int = weights.iter().sum();
                    assert!(sum >= Int::from(1) && sum <= Int::from(2) * &a_n);
                }
                RoughVerdict::NotRough(cert) => {
                    not_rough_seen.fetch_add(1, Ordering::Relaxed);
                    assert!(cert.verify(g), "potent certificate fails for {g:?}");
                    assert!(cert.len() <= cap, "length bound violated for {g:?}");
                }
            }
        });
    }
    // Whether any non-roughly-weighted game exists below six players is an
    // output of this sweep, not an assumption; report it either way.
    let count = not_rough_seen.load(std::sync::atomic::Ordering::Relaxed);
    pass(
        10,
        &format!("rough verdicts sound and bounded on all proper games, n <= 5 ({count} not rough)"),
    );
}

/// Criterion 11: exactly one of each primal/dual pair is feasible, on every
/// monotone game with n <= 5.
#[test]
fn acceptance_11_duality_exclusivity() {
    for n in 1..=5usize {
        let games = all_monotone_games(n);
        games.par_iter().for_each(|g| {
            let p1 = p1_feasible(g).unwrap().is_feasible();
            let d1 = d1_feasible(g).unwrap().is_feasible();
            assert!(p1 ^ d1, "P1/D1 exclusivity fails for {g:?}");
            let p3 = p3_feasible(g).unwrap().is_feasible();
            let d3 = d3_feasible(g).unwrap().is_feasible();
            assert!(p3 ^ d3, "P3/D3 exclusivity fails for {g:?}");
        });
    }
    pass(11, "exactly one of P1/D1 and of P3/D3 feasible on every monotone game, n <= 5");
}
