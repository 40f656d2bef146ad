//! Phase-1 simplex over exact rationals with Bland's anti-cycling rule.
//!
//! Both entry points return a [`BasicSolution`]: the solution values together
//! with the basis in the paper sense, a square invertible submatrix of the
//! constraint matrix whose rows the solution satisfies with equality. The
//! magnitude of its determinant is what turns rational basic solutions into
//! integer certificates via Cramer's rule.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

use super::{determinant, remove_redundant_rows, solve_square, IntMatrix, Rational, Int};

/// Row sense of an inequality system.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sense {
    Ge,
    Le,
}

/// A linear inequality system `a v (>=|<=) rhs` over integer data.
///
/// A `strict[i]` row means the inequality is strict. Since all systems here
/// are cones in the strict direction, a strict row over integer data is
/// solved as `>= rhs + 1` (resp. `<= rhs - 1`): any solution of the strict
/// system scales to one of the shifted system and vice versa.
#[derive(Clone, Debug)]
pub struct IneqSystem {
    pub matrix: IntMatrix,
    pub rhs: Vec<Int>,
    pub senses: Vec<Sense>,
    pub strict: Vec<bool>,
    /// Per-variable sign restriction; `false` means free.
    pub nonneg: Vec<bool>,
}

impl IneqSystem {
    pub fn new(
        matrix: IntMatrix,
        rhs: Vec<Int>,
        senses: Vec<Sense>,
        strict: Vec<bool>,
        nonneg: Vec<bool>,
    ) -> IneqSystem {
        assert_eq!(matrix.rows(), rhs.len());
        assert_eq!(matrix.rows(), senses.len());
        assert_eq!(matrix.rows(), strict.len());
        assert_eq!(matrix.cols(), nonneg.len());
        IneqSystem { matrix, rhs, senses, strict, nonneg }
    }

    /// All-`Ge`, nothing strict.
    pub fn ge(matrix: IntMatrix, rhs: Vec<Int>, nonneg: Vec<bool>) -> IneqSystem {
        let rows = matrix.rows();
        IneqSystem::new(matrix, rhs, vec![Sense::Ge; rows], vec![false; rows], nonneg)
    }

    pub fn rows(&self) -> usize {
        self.matrix.rows()
    }

    pub fn vars(&self) -> usize {
        self.matrix.cols()
    }

    /// The system with all rows oriented `>=` and strict rows shifted by one.
    fn normalized(&self) -> (IntMatrix, Vec<Int>) {
        let m = IntMatrix::from_fn(self.rows(), self.vars(), |i, j| match self.senses[i] {
            Sense::Ge => self.matrix.get(i, j).clone(),
            Sense::Le => -self.matrix.get(i, j).clone(),
        });
        let rhs = (0..self.rows())
            .map(|i| {
                let base = match self.senses[i] {
                    Sense::Ge => self.rhs[i].clone(),
                    Sense::Le => -self.rhs[i].clone(),
                };
                if self.strict[i] {
                    base + Int::one()
                } else {
                    base
                }
            })
            .collect();
        (m, rhs)
    }

    /// Exact satisfaction check of the original (unshifted) system.
    pub fn satisfied_by(&self, values: &[Rational]) -> bool {
        assert_eq!(values.len(), self.vars());
        for i in 0..self.rows() {
            let lhs: Rational = (0..self.vars())
                .map(|j| Rational::from_integer(self.matrix.get(i, j).clone()) * &values[j])
                .sum();
            let rhs = Rational::from_integer(self.rhs[i].clone());
            let ok = match (self.senses[i], self.strict[i]) {
                (Sense::Ge, false) => lhs >= rhs,
                (Sense::Ge, true) => lhs > rhs,
                (Sense::Le, false) => lhs <= rhs,
                (Sense::Le, true) => lhs < rhs,
            };
            if !ok {
                return false;
            }
        }
        (0..self.vars()).all(|j| !self.nonneg[j] || !values[j].is_negative())
    }
}

/// A basic solution: values over all variables, the variables and rows that
/// form the basis, and the basis matrix with its determinant magnitude.
///
/// Invariants checked before returning: non-basic values are exactly zero,
/// the basis matrix is invertible (`det_abs >= 1`), `det_abs * values` is an
/// integer vector, and the full system is satisfied exactly.
#[derive(Clone, Debug)]
pub struct BasicSolution {
    pub values: Vec<Rational>,
    /// Indices of basic variables, ascending.
    pub basis: Vec<usize>,
    /// Indices of the constraint rows backing the basis, ascending. For
    /// equality systems these are the rows kept by redundancy removal; for
    /// inequality systems, the tight rows.
    pub rows: Vec<usize>,
    /// `|det|` of `basis_matrix`.
    pub det_abs: Int,
    /// Square submatrix of the (normalized, redundancy-reduced) constraint
    /// matrix: `rows` x `basis`.
    pub basis_matrix: IntMatrix,
}

/// Outcome of a feasibility solve. `Infeasible` is an ordinary answer, not
/// an error.
#[derive(Clone, Debug)]
pub enum Feasibility {
    Feasible(BasicSolution),
    Infeasible,
}

impl Feasibility {
    pub fn is_feasible(&self) -> bool {
        matches!(self, Feasibility::Feasible(_))
    }

    pub fn solution(&self) -> Option<&BasicSolution> {
        match self {
            Feasibility::Feasible(s) => Some(s),
            Feasibility::Infeasible => None,
        }
    }

    pub fn into_solution(self) -> Option<BasicSolution> {
        match self {
            Feasibility::Feasible(s) => Some(s),
            Feasibility::Infeasible => None,
        }
    }
}

/// Feasibility of the equality system `a z = rhs` with `z_j >= 0` for the
/// flagged variables. Redundant rows are removed first; an inconsistent
/// system is reported as `Infeasible`.
pub fn feasible_equality(a: &IntMatrix, rhs: &[Int], nonneg: &[bool]) -> Result<Feasibility> {
    assert_eq!(a.rows(), rhs.len());
    assert_eq!(a.cols(), nonneg.len());
    let (red, red_rhs, kept) = match remove_redundant_rows(a, rhs) {
        Ok(r) => r,
        Err(Error::InconsistentSystem) => return Ok(Feasibility::Infeasible),
        Err(e) => return Err(e),
    };
    let mut tab = Tableau::build(&red, &red_rhs, nonneg, false);
    if !tab.phase1()? {
        return Ok(Feasibility::Infeasible);
    }
    let values = tab.structural_values()?;
    let basis_vars = tab.basic_structural_vars()?;
    let rows: Vec<usize> = (0..red.rows()).collect();
    if basis_vars.len() != rows.len() {
        return Err(Error::internal(format!(
            "equality basis has {} variables for {} rows",
            basis_vars.len(),
            rows.len()
        )));
    }
    let sol = finish(
        &red,
        &red_rhs,
        rows,
        basis_vars,
        values,
        &kept,
        |v| {
            // Solutions of the reduced system must satisfy every original row.
            for i in 0..a.rows() {
                let lhs: Rational = (0..a.cols())
                    .map(|j| Rational::from_integer(a.get(i, j).clone()) * &v[j])
                    .sum();
                if lhs != Rational::from_integer(rhs[i].clone()) {
                    return false;
                }
            }
            (0..a.cols()).all(|j| !nonneg[j] || !v[j].is_negative())
        },
    )?;
    Ok(Feasibility::Feasible(sol))
}

/// Feasibility of an inequality system, returning a basic solution whose
/// basis rows are satisfied with equality.
pub fn feasible_inequality(sys: &IneqSystem) -> Result<Feasibility> {
    let (norm, norm_rhs) = sys.normalized();
    let mut tab = Tableau::build(&norm, &norm_rhs, &sys.nonneg, true);
    if !tab.phase1()? {
        return Ok(Feasibility::Infeasible);
    }
    let values = tab.structural_values()?;
    let basis_vars = tab.basic_structural_vars()?;
    let tight = tab.tight_rows();
    if basis_vars.len() != tight.len() {
        return Err(Error::internal(format!(
            "inequality basis has {} variables for {} tight rows",
            basis_vars.len(),
            tight.len()
        )));
    }
    let kept: Vec<usize> = (0..norm.rows()).collect();
    let sol = finish(&norm, &norm_rhs, tight, basis_vars, values, &kept, |v| {
        sys.satisfied_by(v)
    })?;
    Ok(Feasibility::Feasible(sol))
}

/// Common tail: build the basis matrix, cross-check the values against it,
/// verify the system and the Cramer integrality, and assemble the result.
fn finish(
    matrix: &IntMatrix,
    rhs: &[Int],
    rows: Vec<usize>,
    basis: Vec<usize>,
    values: Vec<Rational>,
    _kept: &[usize],
    check: impl Fn(&[Rational]) -> bool,
) -> Result<BasicSolution> {
    let basis_matrix = matrix.submatrix(&rows, &basis);
    let det = determinant(&basis_matrix)?;
    if det.is_zero() {
        return Err(Error::internal("basis matrix is singular"));
    }
    let det_abs = det.abs();

    let b: Vec<Rational> = rows
        .iter()
        .map(|&r| Rational::from_integer(rhs[r].clone()))
        .collect();
    let solved = solve_square(&basis_matrix, &b)
        .ok_or_else(|| Error::internal("basis matrix solve failed"))?;
    for (idx, &var) in basis.iter().enumerate() {
        if solved[idx] != values[var] {
            return Err(Error::internal(
                "basic solution disagrees with basis-matrix solve",
            ));
        }
    }
    for (j, v) in values.iter().enumerate() {
        if !basis.contains(&j) && !v.is_zero() {
            return Err(Error::internal("non-basic variable has nonzero value"));
        }
        if !super::scales_to_integer(v, &det_abs) {
            return Err(Error::internal("Cramer integrality violated"));
        }
    }
    if !check(&values) {
        return Err(Error::internal("basic solution fails exact substitution"));
    }
    Ok(BasicSolution { values, basis, rows, det_abs, basis_matrix })
}

/// Column roles inside the phase-1 tableau.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Col {
    /// Structural column: (variable, sign). Free variables get a +1 and a -1
    /// column; at most one of the pair is ever basic (the basis matrix would
    /// be singular otherwise).
    Structural(usize, i8),
    /// Surplus of the given row (`a v - s = b`).
    Surplus(usize),
    Artificial(usize),
}

struct Tableau {
    cols: Vec<Col>,
    /// Rows over `cols`, kept reduced so basic columns are unit columns.
    a: Vec<Vec<Rational>>,
    b: Vec<Rational>,
    /// Basic column per row.
    basis: Vec<usize>,
    n_vars: usize,
}

impl Tableau {
    /// Standard form for `matrix v >= rhs` (with surplus) or `matrix v = rhs`
    /// (without), rows sign-normalized so `b >= 0`.
    fn build(matrix: &IntMatrix, rhs: &[Int], nonneg: &[bool], with_surplus: bool) -> Tableau {
        let m = matrix.rows();
        let n = matrix.cols();
        let mut cols = Vec::new();
        for j in 0..n {
            cols.push(Col::Structural(j, 1));
            if !nonneg[j] {
                cols.push(Col::Structural(j, -1));
            }
        }
        let surplus_at = cols.len();
        if with_surplus {
            for r in 0..m {
                cols.push(Col::Surplus(r));
            }
        }

        let mut a: Vec<Vec<Rational>> = Vec::with_capacity(m);
        let mut b: Vec<Rational> = Vec::with_capacity(m);
        for r in 0..m {
            let flip = rhs[r].is_negative();
            let mut row = vec![Rational::zero(); cols.len()];
            for (cidx, col) in cols.iter().enumerate() {
                let v = match *col {
                    Col::Structural(j, sign) => {
                        let base = matrix.get(r, j).clone();
                        if sign < 0 {
                            -base
                        } else {
                            base
                        }
                    }
                    Col::Surplus(sr) if sr == r => -Int::one(),
                    _ => Int::zero(),
                };
                row[cidx] = Rational::from_integer(if flip { -v } else { v });
            }
            let bv = if flip { -rhs[r].clone() } else { rhs[r].clone() };
            a.push(row);
            b.push(Rational::from_integer(bv));
        }

        // Initial basis: a row whose surplus column carries +1 (it was
        // flipped) starts on its surplus; everything else gets an artificial.
        let mut basis = vec![usize::MAX; m];
        for r in 0..m {
            if with_surplus && a[r][surplus_at + r].is_one() {
                basis[r] = surplus_at + r;
            }
        }
        for r in 0..m {
            if basis[r] == usize::MAX {
                let cidx = cols.len();
                cols.push(Col::Artificial(r));
                for (i, row) in a.iter_mut().enumerate() {
                    row.push(if i == r { Rational::one() } else { Rational::zero() });
                }
                basis[r] = cidx;
            }
        }

        Tableau { cols, a, b, basis, n_vars: n }
    }

    fn is_artificial(&self, c: usize) -> bool {
        matches!(self.cols[c], Col::Artificial(_))
    }

    /// Minimizes the artificial sum with Bland's rule. Returns `false` when
    /// the optimum is positive (original system infeasible).
    fn phase1(&mut self) -> Result<bool> {
        let m = self.a.len();
        let nc = self.cols.len();
        // Reduced costs for objective = sum of artificials: r_j = -sum of
        // a[i][j] over rows whose basic variable is artificial.
        let mut red = vec![Rational::zero(); nc];
        for j in 0..nc {
            if self.is_artificial(j) {
                continue;
            }
            let mut s = Rational::zero();
            for i in 0..m {
                if self.is_artificial(self.basis[i]) {
                    s += &self.a[i][j];
                }
            }
            red[j] = -s;
        }

        loop {
            // Bland entering rule: lowest-index improving non-artificial column.
            let entering = (0..nc)
                .find(|&j| !self.is_artificial(j) && red[j].is_negative());
            let Some(e) = entering else { break };

            let mut leave: Option<(usize, Rational)> = None;
            for i in 0..m {
                if self.a[i][e].is_positive() {
                    let ratio = self.b[i].clone() / &self.a[i][e];
                    let better = match &leave {
                        None => true,
                        Some((li, lr)) => {
                            ratio < *lr || (ratio == *lr && self.basis[i] < self.basis[*li])
                        }
                    };
                    if better {
                        leave = Some((i, ratio));
                    }
                }
            }
            let Some((l, _)) = leave else {
                return Err(Error::internal("phase-1 objective unbounded"));
            };
            self.pivot(l, e, &mut red);
        }

        let obj: Rational = (0..m)
            .filter(|&i| self.is_artificial(self.basis[i]))
            .map(|i| self.b[i].clone())
            .sum();
        if obj.is_positive() {
            return Ok(false);
        }

        // Drive remaining zero-level artificials out of the basis. With every
        // row carrying a surplus (inequality mode) or redundancy removed
        // first (equality mode) a pivot column always exists.
        for i in 0..m {
            if self.is_artificial(self.basis[i]) {
                let e = (0..nc)
                    .find(|&j| !self.is_artificial(j) && !self.a[i][j].is_zero())
                    .ok_or_else(|| Error::internal("stuck artificial on a dependent row"))?;
                self.pivot(i, e, &mut red);
            }
        }
        Ok(true)
    }

    fn pivot(&mut self, row: usize, col: usize, red: &mut [Rational]) {
        let nc = self.cols.len();
        let piv = self.a[row][col].clone();
        for j in 0..nc {
            let v = self.a[row][j].clone() / &piv;
            self.a[row][j] = v;
        }
        let bv = self.b[row].clone() / &piv;
        self.b[row] = bv;
        for i in 0..self.a.len() {
            if i != row && !self.a[i][col].is_zero() {
                let f = self.a[i][col].clone();
                for j in 0..nc {
                    let v = self.a[i][j].clone() - &f * &self.a[row][j];
                    self.a[i][j] = v;
                }
                let nb = self.b[i].clone() - &f * &self.b[row];
                self.b[i] = nb;
            }
        }
        if !red[col].is_zero() {
            let f = red[col].clone();
            for j in 0..nc {
                let v = red[j].clone() - &f * &self.a[row][j];
                red[j] = v;
            }
        }
        self.basis[row] = col;
    }

    /// Values of the structural variables, recombining split columns.
    fn structural_values(&self) -> Result<Vec<Rational>> {
        let mut values = vec![Rational::zero(); self.n_vars];
        let mut seen = vec![false; self.n_vars];
        for (i, &c) in self.basis.iter().enumerate() {
            if let Col::Structural(j, sign) = self.cols[c] {
                if seen[j] {
                    return Err(Error::internal("both split halves of a variable are basic"));
                }
                seen[j] = true;
                values[j] = if sign < 0 { -self.b[i].clone() } else { self.b[i].clone() };
            }
        }
        Ok(values)
    }

    /// Original indices of variables with a basic structural column, ascending.
    fn basic_structural_vars(&self) -> Result<Vec<usize>> {
        let mut vars: Vec<usize> = self
            .basis
            .iter()
            .filter_map(|&c| match self.cols[c] {
                Col::Structural(j, _) => Some(j),
                _ => None,
            })
            .collect();
        vars.sort_unstable();
        vars.dedup();
        Ok(vars)
    }

    /// Rows whose surplus variable is non-basic, i.e. rows the basic solution
    /// satisfies with equality through the basis.
    fn tight_rows(&self) -> Vec<usize> {
        let basic: std::collections::HashSet<usize> = self.basis.iter().copied().collect();
        let mut rows = Vec::new();
        for (c, col) in self.cols.iter().enumerate() {
            if let Col::Surplus(r) = *col {
                if !basic.contains(&c) {
                    rows.push(r);
                }
            }
        }
        rows.sort_unstable();
        rows
    }
}
