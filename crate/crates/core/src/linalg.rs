//! Dense exact-rational linear algebra.
//!
//! Sizes here are tiny (at most a few dozen rows), so plain Gauss-Jordan
//! over `Rational` is both fast enough and immune to the rank misjudgements
//! a floating-point pivot could make.

// elimination indexes two rows of the same buffer, which iterators cannot
// express without split borrows
#![allow(clippy::needless_range_loop)]

use num_traits::{One, Zero};

use crate::rational::Rational;

/// Dense row-major matrix of rationals.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RatMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(k: usize) -> Self {
        let mut m = Self::zero(k, k);
        for i in 0..k {
            *m.at_mut(i, i) = Rational::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == ncols), "ragged rows");
        Self {
            rows: nrows,
            cols: ncols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &Rational {
        &self.data[r * self.cols + c]
    }

    pub fn at_mut(&mut self, r: usize, c: usize) -> &mut Rational {
        &mut self.data[r * self.cols + c]
    }

    pub fn mul(&self, other: &RatMatrix) -> RatMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = RatMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    *out.at_mut(i, j) += a * other.at(k, j);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                (0..self.cols)
                    .map(|j| self.at(i, j) * &v[j])
                    .fold(Rational::zero(), |acc, t| acc + t)
            })
            .collect()
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    if i == j {
                        self.at(i, j).is_one()
                    } else {
                        self.at(i, j).is_zero()
                    }
                })
            })
    }

    /// Exact inverse via Gauss-Jordan; `None` when singular.
    pub fn inverse(&self) -> Option<RatMatrix> {
        assert_eq!(self.rows, self.cols, "inverse of a non-square matrix");
        let k = self.rows;
        let mut work = self.clone();
        let mut inv = RatMatrix::identity(k);
        for col in 0..k {
            let pivot = (col..k).find(|&r| !work.at(r, col).is_zero())?;
            if pivot != col {
                work.swap_rows(pivot, col);
                inv.swap_rows(pivot, col);
            }
            let p = work.at(col, col).clone();
            work.scale_row(col, &p.recip());
            inv.scale_row(col, &p.recip());
            for r in 0..k {
                if r == col || work.at(r, col).is_zero() {
                    continue;
                }
                let factor = work.at(r, col).clone();
                work.sub_scaled_row(r, col, &factor);
                inv.sub_scaled_row(r, col, &factor);
            }
        }
        Some(inv)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn scale_row(&mut self, r: usize, factor: &Rational) {
        for j in 0..self.cols {
            let v = self.at(r, j) * factor;
            *self.at_mut(r, j) = v;
        }
    }

    fn sub_scaled_row(&mut self, target: usize, source: usize, factor: &Rational) {
        for j in 0..self.cols {
            let v = self.at(target, j) - factor * self.at(source, j);
            *self.at_mut(target, j) = v;
        }
    }
}

/// Whether `A x = b` has a solution over the rationals, i.e. whether
/// `rank(A) = rank([A | b])`. Consumes a copy; `rows` are the rows of `A`.
pub fn system_is_consistent(rows: &[Vec<Rational>], rhs: &[Rational]) -> bool {
    assert_eq!(rows.len(), rhs.len());
    let m = rows.len();
    if m == 0 {
        return true;
    }
    let ncols = rows[0].len();
    let mut aug: Vec<Vec<Rational>> = rows
        .iter()
        .zip(rhs)
        .map(|(r, b)| {
            assert_eq!(r.len(), ncols, "ragged rows");
            let mut row = r.clone();
            row.push(b.clone());
            row
        })
        .collect();
    let mut pivot_row = 0;
    for col in 0..ncols {
        let Some(found) = (pivot_row..m).find(|&r| !aug[r][col].is_zero()) else {
            continue;
        };
        aug.swap(pivot_row, found);
        let p = aug[pivot_row][col].clone();
        for r in 0..m {
            if r == pivot_row || aug[r][col].is_zero() {
                continue;
            }
            let factor = &aug[r][col] / &p;
            for j in col..=ncols {
                let v = &aug[r][j] - &factor * &aug[pivot_row][j];
                aug[r][j] = v;
            }
        }
        pivot_row += 1;
        if pivot_row == m {
            break;
        }
    }
    // any row reduced to 0 = nonzero witnesses inconsistency
    aug.iter()
        .all(|row| !(row[..ncols].iter().all(Rational::is_zero) && !row[ncols].is_zero()))
}
