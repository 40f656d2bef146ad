//! Maximal determinants of 0-1 matrices and the bounds built on them.
//!
//! `alpha(n)` is the largest determinant magnitude over n x n 0-1 matrices.
//! The certificate-size and weight bounds proved elsewhere in this crate are
//! all phrased in terms of these values, so this module keeps the table, a
//! brute-force recomputation for small n, the Hadamard-style upper bound,
//! and executable checks of the two determinant lemmas used by the proofs.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{determinant, Int, IntMatrix, Rational};

/// Known values of `alpha_n` for n = 1..=11 (OEIS A003432).
pub const ALPHA: [u64; 11] = [1, 1, 2, 3, 5, 9, 32, 56, 144, 320, 1458];

/// Largest n covered by [`alpha`].
pub const ALPHA_MAX_N: usize = 11;

/// Hard cap for [`alpha_bruteforce`].
pub const ALPHA_BRUTEFORCE_MAX_N: usize = 5;

/// The maximal determinant of an n x n 0-1 matrix, by table lookup.
pub fn alpha(n: usize) -> Result<Int> {
    if n == 0 || n > ALPHA_MAX_N {
        return Err(Error::ScopeExceeded(format!(
            "alpha table covers 1..={ALPHA_MAX_N}; use hadamard_bound for n = {n}"
        )));
    }
    Ok(Int::from(ALPHA[n - 1]))
}

/// `alpha(n)`, extended by the 0 x 0 convention `alpha_0 = 1` (the empty
/// determinant). The rough-representation bound `w_i <= alpha_{n-1}` needs it
/// for single-player games.
pub fn alpha_or_one(n: usize) -> Result<Int> {
    if n == 0 {
        Ok(Int::one())
    } else {
        alpha(n)
    }
}

/// Recomputes `alpha(n)` by exhaustive search. Matrices are enumerated up to
/// row permutation (rows chosen as a strictly increasing sequence of row
/// masks), which preserves the determinant magnitude and prunes the raw
/// `2^(n^2)` space by `n!` plus all matrices with a repeated row.
pub fn alpha_bruteforce(n: usize) -> Result<Int> {
    if n == 0 || n > ALPHA_BRUTEFORCE_MAX_N {
        return Err(Error::ScopeExceeded(format!(
            "alpha brute force capped at n <= {ALPHA_BRUTEFORCE_MAX_N}"
        )));
    }
    let size = 1u32 << n;
    let mut best = Int::zero();
    let mut rows: Vec<u32> = Vec::with_capacity(n);
    fn rec(n: usize, size: u32, start: u32, rows: &mut Vec<u32>, best: &mut Int) {
        if rows.len() == n {
            let m = IntMatrix::from_fn(n, n, |i, j| Int::from((rows[i] >> j) & 1));
            let d = determinant(&m).expect("square").abs();
            if d > *best {
                *best = d;
            }
            return;
        }
        for mask in start..size {
            rows.push(mask);
            rec(n, size, mask + 1, rows, best);
            rows.pop();
        }
    }
    rec(n, size, 0, &mut rows, &mut best);
    Ok(best)
}

/// A rational interval `[lo, hi]` known to contain an (often irrational)
/// value. Checks pick the endpoint that makes the comparison sound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalBracket {
    pub lo: Rational,
    pub hi: Rational,
}

impl RationalBracket {
    pub fn exact(v: Rational) -> RationalBracket {
        RationalBracket { lo: v.clone(), hi: v }
    }

    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    pub fn width(&self) -> Rational {
        self.hi.clone() - self.lo.clone()
    }
}

/// Outward rational bracket of `sqrt(v)` with denominator `10^digits`.
pub fn sqrt_bracket(v: u64, digits: u32) -> RationalBracket {
    let den = Int::from(10u32).pow(digits);
    // isqrt of v * 10^(2 digits) gives the floor of the scaled root.
    let scaled = Int::from(v) * &den * &den;
    let root = scaled.sqrt();
    let lo = Rational::new(root.clone(), den.clone());
    if &root * &root == scaled {
        RationalBracket::exact(lo)
    } else {
        let hi = Rational::new(root + Int::one(), den);
        RationalBracket { lo, hi }
    }
}

/// The determinant upper bound `(n+1)^((n+1)/2) / 2^n`. Exact for odd n; for
/// even n the irrational value is returned as an outward bracket with
/// denominator `10^6`.
pub fn hadamard_bound(n: usize) -> Result<RationalBracket> {
    if n == 0 {
        return Err(Error::ScopeExceeded("hadamard_bound needs n >= 1".into()));
    }
    let two_n = Rational::from_integer(Int::from(2u32).pow(n as u32));
    if (n + 1) % 2 == 0 {
        let num = Int::from(n as u64 + 1).pow(((n + 1) / 2) as u32);
        return Ok(RationalBracket::exact(Rational::from_integer(num) / two_n));
    }
    // (n+1)^((n+1)/2) = (n+1)^(n/2) * sqrt(n+1).
    let whole = Rational::from_integer(Int::from(n as u64 + 1).pow((n / 2) as u32));
    let root = sqrt_bracket(n as u64 + 1, 6);
    Ok(RationalBracket {
        lo: &whole * root.lo / &two_n,
        hi: &whole * root.hi / two_n,
    })
}

/// Which determinant-bound cases apply to a 0-1 matrix and whether the
/// corresponding bounds hold for its actual determinant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lemma1Report {
    pub det: Int,
    /// Matrix has an all-one row or column; bound `|det| <= alpha_{n-1}`.
    pub all_one_line: bool,
    /// Matrix has a row or column with exactly one zero; bound
    /// `|det| <= 2 alpha_{n-1}`.
    pub single_zero_line: bool,
    pub all_one_bound_holds: Option<bool>,
    pub single_zero_bound_holds: Option<bool>,
}

/// Classifies a square 0-1 matrix (n >= 2) against the two determinant
/// bounds and reports whether each applicable bound holds.
pub fn lemma1_check(m: &IntMatrix) -> Result<Lemma1Report> {
    if !m.is_square() {
        return Err(Error::NonSquare { rows: m.rows(), cols: m.cols() });
    }
    let n = m.rows();
    if n < 2 {
        return Err(Error::ScopeExceeded("lemma applies to n >= 2".into()));
    }
    for i in 0..n {
        for j in 0..n {
            let v = m.get(i, j);
            if !v.is_zero() && !v.is_one() {
                return Err(Error::NonBinaryEntry { row: i, col: j });
            }
        }
    }
    let line_zero_count = |line: Box<dyn Iterator<Item = &Int>>| -> usize {
        line.filter(|v| v.is_zero()).count()
    };
    let mut all_one = false;
    let mut single_zero = false;
    for i in 0..n {
        let zeros = line_zero_count(Box::new(m.row(i).iter()));
        all_one |= zeros == 0;
        single_zero |= zeros == 1;
    }
    for j in 0..n {
        let zeros = line_zero_count(Box::new((0..n).map(move |i| m.get(i, j))));
        all_one |= zeros == 0;
        single_zero |= zeros == 1;
    }
    let det = determinant(m)?;
    let limit = alpha_or_one(n - 1)?;
    Ok(Lemma1Report {
        all_one_bound_holds: all_one.then(|| det.abs() <= limit),
        single_zero_bound_holds: single_zero.then(|| det.abs() <= Int::from(2) * &limit),
        det,
        all_one_line: all_one,
        single_zero_line: single_zero,
    })
}
