//! Exact rational linear algebra: fraction-free determinants, redundancy
//! removal, and a phase-1 simplex that returns basic feasible solutions
//! together with the basis determinant magnitude.
//!
//! Every certificate construction in this crate scales a basic solution by
//! the determinant of its basis matrix, so all arithmetic here is exact
//! (`BigInt` / `BigRational`); fixed-width arithmetic is deliberately absent.

mod simplex;

pub use simplex::{feasible_equality, feasible_inequality, BasicSolution, Feasibility, IneqSystem, Sense};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Int = BigInt;
pub type Rational = BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// A dense integer matrix. In this crate the entries are almost always in
/// `{-1, 0, 1}`, but intermediate elimination values are unbounded.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Int>,
}

impl IntMatrix {
    pub fn zero(rows: usize, cols: usize) -> IntMatrix {
        IntMatrix { rows, cols, data: vec![Int::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> IntMatrix {
        let mut m = IntMatrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, Int::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<i64>>) -> IntMatrix {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        let data = rows.into_iter().flatten().map(Int::from).collect();
        IntMatrix { rows: r, cols: c, data }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Int) -> IntMatrix {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        IntMatrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Int {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Int) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Int] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Submatrix picking `rows` then `cols`, in the given order.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> IntMatrix {
        IntMatrix::from_fn(rows.len(), cols.len(), |i, j| self.get(rows[i], cols[j]).clone())
    }

    pub fn transpose(&self) -> IntMatrix {
        IntMatrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    /// Negates the given columns in place; used by the sign-normalization
    /// checks that turn basis matrices into 0-1 matrices.
    pub fn negate_columns(&mut self, cols: &[usize]) {
        for i in 0..self.rows {
            for &j in cols {
                let v = -self.get(i, j).clone();
                self.set(i, j, v);
            }
        }
    }

    pub fn is_zero_one(&self) -> bool {
        self.data.iter().all(|v| v.is_zero() || v.is_one())
    }
}

impl std::fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "IntMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", self.row(i))?;
        }
        write!(f, "]")
    }
}

/// Exact determinant by fraction-free (Bareiss) elimination.
pub fn determinant(m: &IntMatrix) -> Result<Int> {
    if !m.is_square() {
        return Err(Error::NonSquare { rows: m.rows, cols: m.cols });
    }
    Ok(bareiss(m.clone()))
}

fn bareiss(mut m: IntMatrix) -> Int {
    let n = m.rows;
    if n == 0 {
        return Int::one();
    }
    let mut sign = 1i32;
    let mut prev = Int::one();
    for k in 0..n - 1 {
        if m.get(k, k).is_zero() {
            match (k + 1..n).find(|&i| !m.get(i, k).is_zero()) {
                Some(swap) => {
                    for j in 0..n {
                        let a = m.get(k, j).clone();
                        let b = m.get(swap, j).clone();
                        m.set(k, j, b);
                        m.set(swap, j, a);
                    }
                    sign = -sign;
                }
                None => return Int::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (m.get(i, j) * m.get(k, k) - m.get(i, k) * m.get(k, j)) / &prev;
                m.set(i, j, v);
            }
            m.set(i, k, Int::zero());
        }
        prev = m.get(k, k).clone();
    }
    let d = m.get(n - 1, n - 1).clone();
    if sign < 0 {
        -d
    } else {
        d
    }
}

/// Removes redundant rows of the equality system `a z = rhs`, keeping the
/// lexicographically first maximal independent row set. Returns the reduced
/// matrix, its right-hand side, and the kept row indices.
///
/// Errors with [`Error::InconsistentSystem`] when a dependent row disagrees
/// with the combination that produces it (the system has no solution).
pub fn remove_redundant_rows(a: &IntMatrix, rhs: &[Int]) -> Result<(IntMatrix, Vec<Int>, Vec<usize>)> {
    assert_eq!(a.rows(), rhs.len());
    let cols = a.cols();
    // Reduced rows kept so far, augmented with the rhs, with `lead[i]` the
    // pivot column of reduced row i.
    let mut reduced: Vec<Vec<Rational>> = Vec::new();
    let mut lead: Vec<usize> = Vec::new();
    let mut kept: Vec<usize> = Vec::new();

    for r in 0..a.rows() {
        let mut row: Vec<Rational> = a
            .row(r)
            .iter()
            .map(|v| Rational::from_integer(v.clone()))
            .chain(std::iter::once(Rational::from_integer(rhs[r].clone())))
            .collect();
        for (b, &lc) in reduced.iter().zip(&lead) {
            if !row[lc].is_zero() {
                let factor = row[lc].clone() / b[lc].clone();
                for j in 0..=cols {
                    let v = row[j].clone() - &factor * &b[j];
                    row[j] = v;
                }
            }
        }
        match (0..cols).find(|&j| !row[j].is_zero()) {
            Some(lc) => {
                reduced.push(row);
                lead.push(lc);
                kept.push(r);
            }
            None => {
                if !row[cols].is_zero() {
                    return Err(Error::InconsistentSystem);
                }
                // Row is a combination of earlier ones: drop it.
            }
        }
    }

    let sub = a.submatrix(&kept, &(0..cols).collect::<Vec<_>>());
    let sub_rhs = kept.iter().map(|&r| rhs[r].clone()).collect();
    Ok((sub, sub_rhs, kept))
}

/// Solves the square rational system `m x = b` by Gaussian elimination.
/// Returns `None` when `m` is singular.
pub fn solve_square(m: &IntMatrix, b: &[Rational]) -> Option<Vec<Rational>> {
    let n = m.rows();
    assert!(m.is_square() && b.len() == n);
    let mut aug: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            m.row(i)
                .iter()
                .map(|v| Rational::from_integer(v.clone()))
                .chain(std::iter::once(b[i].clone()))
                .collect()
        })
        .collect();
    for k in 0..n {
        let pivot = (k..n).find(|&i| !aug[i][k].is_zero())?;
        aug.swap(k, pivot);
        let p = aug[k][k].clone();
        for j in k..=n {
            let v = aug[k][j].clone() / &p;
            aug[k][j] = v;
        }
        for i in 0..n {
            if i != k && !aug[i][k].is_zero() {
                let f = aug[i][k].clone();
                for j in k..=n {
                    let v = aug[i][j].clone() - &f * &aug[k][j];
                    aug[i][j] = v;
                }
            }
        }
    }
    Some(aug.into_iter().map(|row| row[n].clone()).collect())
}

/// `true` when `den(v) | det`, i.e. `det * v` is an integer.
pub fn scales_to_integer(v: &Rational, det: &Int) -> bool {
    (v * Rational::from_integer(det.abs())).is_integer()
}
