//! Dense matrices over an exact field.

use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::{exact_string, is_zero, Scalar};

#[derive(Clone, PartialEq)]
pub struct Matrix<S: Scalar> {
    rows: usize,
    cols: usize,
    data: Vec<S>,
    row_labels: Vec<String>,
    col_labels: Vec<String>,
}

/// Result of a row reduction: the reduced row echelon form and its pivots.
#[derive(Clone, Debug)]
pub struct RowReduction<S: Scalar> {
    pub reduced: Matrix<S>,
    pub pivots: Vec<usize>,
}

impl<S: Scalar> Matrix<S> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![S::zero(); rows * cols],
            row_labels: (0..rows).map(|i| format!("r{i}")).collect(),
            col_labels: (0..cols).map(|j| format!("c{j}")).collect(),
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = S::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<S>>) -> Result<Self> {
        let ncols = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        let mut m = Self::zeros(rows.len(), ncols);
        m.data = rows.into_iter().flatten().collect();
        Ok(m)
    }

    pub fn from_i64(rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| S::of(v)).collect())
                .collect(),
        )
    }

    pub fn with_labels(mut self, row_labels: Vec<String>, col_labels: Vec<String>) -> Result<Self> {
        if row_labels.len() != self.rows || col_labels.len() != self.cols {
            return Err(Error::Dimension("label count does not match shape".into()));
        }
        let unique = |v: &[String]| v.iter().collect::<HashSet<_>>().len() == v.len();
        if !unique(&row_labels) || !unique(&col_labels) {
            return Err(Error::InvalidArgument(
                "matrix labels must be unique".into(),
            ));
        }
        self.row_labels = row_labels;
        self.col_labels = col_labels;
        Ok(self)
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn row_labels(&self) -> &[String] {
        &self.row_labels
    }

    pub fn col_labels(&self) -> &[String] {
        &self.col_labels
    }

    pub fn row(&self, i: usize) -> &[S] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn mul_vec(&self, v: &[S]) -> Result<Vec<S>> {
        if v.len() != self.cols {
            return Err(Error::Dimension(format!(
                "vector of length {} for {} columns",
                v.len(),
                self.cols
            )));
        }
        Ok((0..self.rows)
            .map(|i| {
                let mut acc = S::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !is_zero(a) && !is_zero(b) {
                        acc += a.clone() * b;
                    }
                }
                acc
            })
            .collect())
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t.row_labels = self.col_labels.clone();
        t.col_labels = self.row_labels.clone();
        t
    }

    /// Reduced row echelon form by exact Gauss–Jordan elimination.
    pub fn row_reduce(&self) -> RowReduction<S> {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !is_zero(&m[(i, c)])) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = S::one() / m[(r, c)].clone();
            for j in c..m.cols {
                let v = m[(r, j)].clone() * &inv;
                m[(r, j)] = v;
            }
            for i in 0..m.rows {
                if i == r || is_zero(&m[(i, c)]) {
                    continue;
                }
                let f = m[(i, c)].clone();
                for j in c..m.cols {
                    if is_zero(&m[(r, j)]) {
                        continue;
                    }
                    let v = m[(r, j)].clone() * &f;
                    m[(i, j)] -= v;
                }
            }
            pivots.push(c);
            r += 1;
        }
        RowReduction { reduced: m, pivots }
    }

    pub fn rank(&self) -> usize {
        self.row_reduce().pivots.len()
    }

    /// Basis of `{v : M v = 0}`, one vector per free column.
    pub fn nullspace(&self) -> Vec<Vec<S>> {
        let RowReduction { reduced, pivots } = self.row_reduce();
        let pivot_set: HashSet<usize> = pivots.iter().copied().collect();
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|c| !pivot_set.contains(c)) {
            let mut v = vec![S::zero(); self.cols];
            v[free] = S::one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -reduced[(r, free)].clone();
            }
            basis.push(v);
        }
        basis
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
        self.row_labels.swap(a, b);
    }
}

/// Rank of a matrix over the rationals.
pub fn matrix_rank<S: Scalar>(m: &Matrix<S>) -> usize {
    m.rank()
}

impl<S: Scalar> std::ops::Index<(usize, usize)> for Matrix<S> {
    type Output = S;
    fn index(&self, (i, j): (usize, usize)) -> &S {
        &self.data[i * self.cols + j]
    }
}

impl<S: Scalar> std::ops::IndexMut<(usize, usize)> for Matrix<S> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut S {
        &mut self.data[i * self.cols + j]
    }
}

impl<S: Scalar> fmt::Debug for Matrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(exact_string).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Q;

    #[test]
    fn rank_examples() {
        assert_eq!(Matrix::<Q>::identity(2).rank(), 2);
        assert_eq!(Matrix::<Q>::zeros(3, 4).rank(), 0);
        assert_eq!(
            Matrix::<Q>::from_i64(&[&[1, 2], &[2, 4]]).unwrap().rank(),
            1
        );
    }

    #[test]
    fn nullspace_annihilates() {
        let m = Matrix::<Q>::from_i64(&[&[1, 2, 3, 4], &[2, 4, 6, 8], &[0, 1, 1, 0]]).unwrap();
        let ns = m.nullspace();
        assert_eq!(ns.len() + m.rank(), 4);
        for v in ns {
            assert!(m
                .mul_vec(&v)
                .unwrap()
                .iter()
                .all(|x| x == &Q::from_integer(0)));
        }
    }

    #[test]
    fn labels_must_be_unique() {
        let m = Matrix::<Q>::zeros(2, 1);
        assert!(m
            .clone()
            .with_labels(vec!["a".into(), "a".into()], vec!["c".into()])
            .is_err());
        assert!(m
            .with_labels(vec!["a".into(), "b".into()], vec!["c".into()])
            .is_ok());
    }
}
