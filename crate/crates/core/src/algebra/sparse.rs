//! Sparse row echelon forms with the pivot at the smallest column.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::scalar::{is_zero, Scalar};

/// A sparse vector: `(column, coefficient)` pairs, columns strictly increasing.
pub type SparseVec<S> = Vec<(usize, S)>;

const NO_ROW: u32 = u32::MAX;

/// Incrementally built echelon basis of a subspace of `S^ncols`.
///
/// Each stored row is monic with its pivot at its smallest column, and no
/// two rows share a pivot. Rows are not back-substituted; [`Self::reduce`]
/// still yields the unique representative supported off the pivots.
#[derive(Clone, Debug)]
pub struct SparseEchelon<S: Scalar> {
    ncols: usize,
    rows: Vec<SparseVec<S>>,
    row_of: Vec<u32>,
    work: Workspace<S>,
}

/// Dense scratch accumulator reused across reductions.
#[derive(Clone, Debug)]
struct Workspace<S> {
    dense: Vec<S>,
    touched: Vec<usize>,
    seen: Vec<bool>,
}

impl<S> Default for Workspace<S> {
    fn default() -> Self {
        Workspace {
            dense: Vec::new(),
            touched: Vec::new(),
            seen: Vec::new(),
        }
    }
}

impl<S: Scalar> SparseEchelon<S> {
    pub fn new(ncols: usize) -> Self {
        SparseEchelon {
            ncols,
            rows: Vec::new(),
            row_of: vec![NO_ROW; ncols],
            work: Workspace::default(),
        }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ncols
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.row_of[col] != NO_ROW
    }

    /// Pivot columns in increasing order.
    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.ncols).filter(|&c| self.is_pivot(c))
    }

    /// Columns that carry no pivot, in increasing order.
    pub fn free_columns(&self) -> Vec<usize> {
        (0..self.ncols).filter(|&c| !self.is_pivot(c)).collect()
    }

    pub fn row(&self, pivot: usize) -> Option<&SparseVec<S>> {
        match self.row_of.get(pivot) {
            Some(&r) if r != NO_ROW => Some(&self.rows[r as usize]),
            _ => None,
        }
    }

    /// Rows in increasing pivot order.
    pub fn rows(&self) -> impl Iterator<Item = (usize, &SparseVec<S>)> + '_ {
        self.pivots()
            .map(|c| (c, &self.rows[self.row_of[c] as usize]))
    }

    /// Normal form of `v` modulo the span: the unique vector congruent to
    /// `v` with no support on pivot columns.
    pub fn reduce(&self, v: &[(usize, S)]) -> SparseVec<S> {
        let mut work = Workspace::default();
        self.reduce_in(v, &mut work)
    }

    /// Same as [`Self::reduce`], reusing internal scratch space.
    pub fn reduce_mut(&mut self, v: &[(usize, S)]) -> SparseVec<S> {
        let mut work = std::mem::take(&mut self.work);
        let r = self.reduce_in(v, &mut work);
        self.work = work;
        r
    }

    fn reduce_in(&self, v: &[(usize, S)], w: &mut Workspace<S>) -> SparseVec<S> {
        if w.dense.len() != self.ncols {
            w.dense = vec![S::zero(); self.ncols];
            w.seen = vec![false; self.ncols];
            w.touched.clear();
        }
        let mut heap = BinaryHeap::new();
        let touch = |w: &mut Workspace<S>, heap: &mut BinaryHeap<Reverse<usize>>, c: usize| {
            if !w.seen[c] {
                w.seen[c] = true;
                w.touched.push(c);
                if self.row_of[c] != NO_ROW {
                    heap.push(Reverse(c));
                }
            }
        };
        for (c, x) in v {
            touch(w, &mut heap, *c);
            w.dense[*c] += x;
        }
        while let Some(Reverse(col)) = heap.pop() {
            let factor = std::mem::replace(&mut w.dense[col], S::zero());
            if is_zero(&factor) {
                continue;
            }
            for (c, x) in &self.rows[self.row_of[col] as usize][1..] {
                touch(w, &mut heap, *c);
                w.dense[*c] -= &(x.clone() * &factor);
            }
        }
        w.touched.sort_unstable();
        let mut out = Vec::new();
        for &c in &w.touched {
            w.seen[c] = false;
            let x = std::mem::replace(&mut w.dense[c], S::zero());
            if !is_zero(&x) {
                out.push((c, x));
            }
        }
        w.touched.clear();
        out
    }

    /// Rewrites every row so that it vanishes on all other pivots, giving
    /// the reduced row echelon form.
    pub fn back_substitute(&mut self) {
        let pivots: Vec<usize> = self.pivots().collect();
        // rows with larger pivots are already reduced, so one pass suffices
        for &p in pivots.iter().rev() {
            let r = self.row_of[p] as usize;
            let row = std::mem::take(&mut self.rows[r]);
            let mut tail = self.reduce_mut(&row[1..]);
            let mut head = row;
            head.truncate(1);
            head.append(&mut tail);
            self.rows[r] = head;
        }
    }

    /// Adds `v` to the span. Returns the new pivot, or `None` if `v` was
    /// already in the span.
    pub fn insert(&mut self, v: &[(usize, S)]) -> Option<usize> {
        let mut r = self.reduce_mut(v);
        if r.is_empty() {
            return None;
        }
        let inv = S::one() / r[0].1.clone();
        for (_, c) in r.iter_mut() {
            *c = c.clone() * &inv;
        }
        let p = r[0].0;
        self.row_of[p] = self.rows.len() as u32;
        self.rows.push(r);
        Some(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Q;

    fn q(v: i64) -> Q {
        Q::from_integer(v)
    }

    #[test]
    fn rank_and_normal_form() {
        let mut e = SparseEchelon::<Q>::new(3);
        assert_eq!(e.insert(&[(0, q(1)), (1, q(2))]), Some(0));
        assert_eq!(e.insert(&[(0, q(2)), (1, q(4))]), None);
        assert_eq!(e.insert(&[(1, q(1)), (2, q(1))]), Some(1));
        assert_eq!(e.rank(), 2);
        assert_eq!(e.free_columns(), vec![2]);
        // (1,0,0) ≡ (0,-2,0) ≡ (0,0,2)
        assert_eq!(e.reduce(&[(0, q(1))]), vec![(2, q(2))]);
        e.back_substitute();
        assert_eq!(e.row(0).unwrap(), &vec![(0, q(1)), (2, q(-2))]);
    }
}
