//! Exact-rational simplex machinery for the certificate polytope
//! `{ c >= 0, sum(c) = 1, sum_{i in S} c_i = 1/2 for all S }`.
//!
//! A Gauss-Jordan pre-pass over the equalities catches pure equality
//! contradictions and produces Farkas multipliers for them; phase-one simplex
//! with Bland's anti-cycling rule decides the remaining sign-constrained
//! cases. Everything pivots deterministically, so identical inputs give
//! identical vertices.

// row operations index two rows of the same buffer, which iterators cannot
// express without split borrows
#![allow(clippy::needless_range_loop)]

use num_traits::{One, Signed, Zero};

use crate::rational::Rational;

/// One row operation of the equality elimination.
#[derive(Clone, Debug)]
pub struct EliminationStep {
    pub target: usize,
    pub pivot: usize,
    pub factor: Rational,
}

pub(crate) enum GaussOutcome {
    Consistent,
    Contradiction {
        steps: Vec<EliminationStep>,
        /// Original index of the row that reduced to `0 = residual`.
        row: usize,
        residual: Rational,
        /// Multipliers `y` with `y^T A = 0` and `y^T b = residual != 0`.
        farkas: Vec<Rational>,
    },
}

/// Gauss-Jordan elimination of `A x = b` that keeps rows in place (indices
/// stay meaningful for the trace) and tracks the multiplier matrix so an
/// inconsistent row comes with its Farkas combination.
pub(crate) fn eliminate_equalities(rows: &[Vec<Rational>], rhs: &[Rational]) -> GaussOutcome {
    let m = rows.len();
    if m == 0 {
        return GaussOutcome::Consistent;
    }
    let ncols = rows[0].len();
    let mut a: Vec<Vec<Rational>> = rows.to_vec();
    let mut b: Vec<Rational> = rhs.to_vec();
    let mut mult: Vec<Vec<Rational>> = (0..m)
        .map(|i| {
            (0..m)
                .map(|j| if i == j { Rational::one() } else { Rational::zero() })
                .collect()
        })
        .collect();
    let mut steps = Vec::new();
    let mut is_pivot_row = vec![false; m];
    for col in 0..ncols {
        let Some(p) = (0..m).find(|&r| !is_pivot_row[r] && !a[r][col].is_zero()) else {
            continue;
        };
        is_pivot_row[p] = true;
        for r in 0..m {
            if r == p || a[r][col].is_zero() {
                continue;
            }
            let factor = &a[r][col] / &a[p][col];
            for j in 0..ncols {
                let v = &a[r][j] - &factor * &a[p][j];
                a[r][j] = v;
            }
            let v = &b[r] - &factor * &b[p];
            b[r] = v;
            for j in 0..m {
                let v = &mult[r][j] - &factor * &mult[p][j];
                mult[r][j] = v;
            }
            steps.push(EliminationStep {
                target: r,
                pivot: p,
                factor,
            });
            if a[r].iter().all(Rational::is_zero) && !b[r].is_zero() {
                return GaussOutcome::Contradiction {
                    steps,
                    row: r,
                    residual: b[r].clone(),
                    farkas: mult[r].clone(),
                };
            }
        }
    }
    GaussOutcome::Consistent
}

/// A pivot in the simplex phase, identified by variable indices
/// (`0..num_vars` are the weights, the rest are artificials).
#[derive(Clone, Debug)]
pub struct PivotStep {
    pub entering: usize,
    pub leaving: usize,
}

/// Simplex tableau in canonical form over exact rationals.
pub(crate) struct Tableau {
    num_vars: usize,
    num_art: usize,
    /// m x (num_vars + num_art + 1); the last column is the right-hand side.
    rows: Vec<Vec<Rational>>,
    basis: Vec<usize>,
    /// Reduced costs plus, in the last slot, the negated objective value.
    obj: Vec<Rational>,
    pub pivots: Vec<PivotStep>,
}

impl Tableau {
    /// Builds the tableau for `A x = b`, `x >= 0` with one artificial
    /// variable per row. Requires `b >= 0` (all our right-hand sides are
    /// 1 or 1/2).
    pub fn new(constraints: Vec<Vec<Rational>>, rhs: Vec<Rational>) -> Self {
        let m = constraints.len();
        let num_vars = constraints.first().map_or(0, Vec::len);
        debug_assert!(rhs.iter().all(|b| !b.is_negative()));
        let mut rows = Vec::with_capacity(m);
        for (i, (coeffs, b)) in constraints.into_iter().zip(rhs).enumerate() {
            let mut row = coeffs;
            for k in 0..m {
                row.push(if k == i { Rational::one() } else { Rational::zero() });
            }
            row.push(b);
            rows.push(row);
        }
        let basis = (num_vars..num_vars + m).collect();
        let obj = vec![Rational::zero(); num_vars + m + 1];
        Self {
            num_vars,
            num_art: m,
            rows,
            basis,
            obj,
            pivots: Vec::new(),
        }
    }

    fn width(&self) -> usize {
        self.num_vars + self.num_art + 1
    }

    fn rhs(&self, row: usize) -> &Rational {
        &self.rows[row][self.width() - 1]
    }

    /// Sets the objective row for minimizing `costs . x` given the current
    /// basis. `costs` covers all columns (original plus artificial).
    fn reset_objective(&mut self, costs: &[Rational]) {
        let width = self.width();
        let mut obj = vec![Rational::zero(); width];
        for (j, c) in costs.iter().enumerate() {
            obj[j] = c.clone();
        }
        for (i, &b) in self.basis.iter().enumerate() {
            if costs[b].is_zero() {
                continue;
            }
            let cb = costs[b].clone();
            for j in 0..width {
                let v = &obj[j] - &cb * &self.rows[i][j];
                obj[j] = v;
            }
        }
        // reduced costs of basic columns are zero by construction, and the
        // rhs slot now holds the negated objective value
        self.obj = obj;
    }

    /// Current objective value (the objective row stores its negation).
    fn objective_value(&self) -> Rational {
        -self.obj[self.width() - 1].clone()
    }

    fn pivot(&mut self, row: usize, col: usize) {
        let width = self.width();
        let p = self.rows[row][col].clone();
        if !p.is_one() {
            for j in 0..width {
                let v = &self.rows[row][j] / &p;
                self.rows[row][j] = v;
            }
        }
        for r in 0..self.rows.len() {
            if r == row || self.rows[r][col].is_zero() {
                continue;
            }
            let factor = self.rows[r][col].clone();
            for j in 0..width {
                let v = &self.rows[r][j] - &factor * &self.rows[row][j];
                self.rows[r][j] = v;
            }
        }
        if !self.obj[col].is_zero() {
            let factor = self.obj[col].clone();
            for j in 0..width {
                let v = &self.obj[j] - &factor * &self.rows[row][j];
                self.obj[j] = v;
            }
        }
        self.pivots.push(PivotStep {
            entering: col,
            leaving: self.basis[row],
        });
        self.basis[row] = col;
    }

    /// Bland's rule: entering column is the lowest-indexed original variable
    /// with a negative reduced cost (artificials never re-enter).
    fn entering(&self) -> Option<usize> {
        (0..self.num_vars).find(|&j| self.obj[j].is_negative())
    }

    /// Ratio test; ties broken by the smallest basis variable index, which
    /// together with the entering rule makes Bland's anti-cycling guarantee
    /// hold.
    fn leaving(&self, col: usize) -> Option<usize> {
        let mut best: Option<(Rational, usize)> = None;
        for r in 0..self.rows.len() {
            let coeff = &self.rows[r][col];
            if !coeff.is_positive() {
                continue;
            }
            let ratio = self.rhs(r) / coeff;
            best = match best {
                None => Some((ratio, r)),
                Some((cur, cur_r)) => {
                    if ratio < cur || (ratio == cur && self.basis[r] < self.basis[cur_r]) {
                        Some((ratio, r))
                    } else {
                        Some((cur, cur_r))
                    }
                }
            };
        }
        best.map(|(_, r)| r)
    }

    fn run(&mut self) {
        while let Some(col) = self.entering() {
            let Some(row) = self.leaving(col) else {
                // every objective we pose is bounded on the simplex polytope
                unreachable!("unbounded objective on the certificate polytope");
            };
            self.pivot(row, col);
        }
    }

    /// Minimizes the sum of artificial variables. Returns the optimum; zero
    /// means the system is feasible.
    pub fn phase_one(&mut self) -> Rational {
        let costs: Vec<Rational> = (0..self.width() - 1)
            .map(|j| {
                if j >= self.num_vars {
                    Rational::one()
                } else {
                    Rational::zero()
                }
            })
            .collect();
        self.reset_objective(&costs);
        self.run();
        self.objective_value()
    }

    /// After a zero phase-one optimum: pivots leftover artificials out of the
    /// basis (dropping redundant rows) and deletes the artificial columns.
    pub fn drop_artificials(&mut self) {
        let mut r = 0;
        while r < self.rows.len() {
            if self.basis[r] < self.num_vars {
                r += 1;
                continue;
            }
            debug_assert!(self.rhs(r).is_zero(), "artificial basic at nonzero level");
            match (0..self.num_vars).find(|&j| !self.rows[r][j].is_zero()) {
                Some(j) => {
                    self.pivot(r, j);
                    r += 1;
                }
                None => {
                    // the row is a linear combination of the others
                    self.rows.remove(r);
                    self.basis.remove(r);
                }
            }
        }
        let width = self.width();
        for row in &mut self.rows {
            row.drain(self.num_vars..width - 1);
        }
        self.obj.drain(self.num_vars..width - 1);
        self.num_art = 0;
    }

    /// Minimizes `costs . x` over the original variables starting from the
    /// current feasible basis. Call only after [`Tableau::drop_artificials`].
    pub fn optimize(&mut self, costs: &[Rational]) -> Rational {
        assert_eq!(self.num_art, 0);
        assert_eq!(costs.len(), self.num_vars);
        self.reset_objective(costs);
        self.run();
        self.objective_value()
    }

    /// The current basic solution restricted to the original variables.
    pub fn solution(&self) -> Vec<Rational> {
        let mut x = vec![Rational::zero(); self.num_vars];
        for (i, &b) in self.basis.iter().enumerate() {
            if b < self.num_vars {
                x[b] = self.rhs(i).clone();
            }
        }
        x
    }

    /// Human-readable name of a tableau variable.
    pub fn var_name(&self, index: usize) -> String {
        if index < self.num_vars {
            format!("c{index}")
        } else {
            format!("a{}", index - self.num_vars)
        }
    }
}
