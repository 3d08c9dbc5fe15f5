//! Quotients of exterior algebras by homogeneous ideals, computed degree
//! by degree: the leading monomials of each graded piece of the ideal are
//! the pivots of an echelon basis, and the remaining monomials form the
//! normal basis of the quotient.

use std::collections::HashMap;

use crate::algebra::exterior::wedge_sign;
use crate::algebra::{ExtElement, SparseEchelon};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Monomial masks of degree `d` on `n` generators, lexicographic on index
/// tuples (so `e_1∧e_2` comes first and leads).
pub fn exterior_monomials(n: usize, d: usize) -> Vec<u64> {
    fn rec(n: usize, start: usize, left: usize, cur: u64, out: &mut Vec<u64>) {
        if left == 0 {
            out.push(cur);
            return;
        }
        for i in start..=n - left {
            rec(n, i + 1, left - 1, cur | (1 << i), out);
        }
    }
    let mut out = Vec::new();
    if d <= n {
        rec(n, 0, d, 0, &mut out);
    }
    out
}

#[derive(Clone, Debug)]
struct Level<S: Scalar> {
    masks: Vec<u64>,
    index: HashMap<u64, usize>,
    ideal: SparseEchelon<S>,
}

/// `E/I` for the exterior algebra `E` on `ngens` generators, through a
/// degree bound.
#[derive(Clone, Debug)]
pub struct ExteriorQuotient<S: Scalar> {
    ngens: usize,
    degree_bound: usize,
    levels: Vec<Level<S>>,
}

impl<S: Scalar> ExteriorQuotient<S> {
    /// `relations` must be homogeneous of positive degree.
    pub fn new(ngens: usize, relations: &[ExtElement<S>], degree_bound: usize) -> Result<Self> {
        if ngens > 64 {
            return Err(Error::Guard(format!(
                "{ngens} exterior generators exceed 64"
            )));
        }
        let mut by_degree: HashMap<usize, Vec<&ExtElement<S>>> = HashMap::new();
        for r in relations {
            if r.is_zero() {
                continue;
            }
            if r.ngens() != ngens {
                return Err(Error::Dimension(format!(
                    "relation on {} generators, algebra on {ngens}",
                    r.ngens()
                )));
            }
            match r.homogeneous_degree() {
                Some(d) if d > 0 => by_degree.entry(d as usize).or_default().push(r),
                _ => {
                    return Err(Error::InvalidArgument(format!(
                        "relation {r} is not homogeneous of positive degree"
                    )))
                }
            }
        }
        let top = degree_bound.min(ngens);
        let mut levels: Vec<Level<S>> = Vec::with_capacity(top + 1);
        for d in 0..=top {
            let masks = exterior_monomials(ngens, d);
            let index: HashMap<u64, usize> =
                masks.iter().enumerate().map(|(i, &m)| (m, i)).collect();
            let mut ideal = SparseEchelon::new(masks.len());
            let to_row = |terms: &mut dyn Iterator<Item = (u64, S)>| {
                let mut row: Vec<(usize, S)> = terms.map(|(m, c)| (index[&m], c)).collect();
                row.sort_unstable_by_key(|(i, _)| *i);
                row
            };
            if d >= 1 {
                let prev = &levels[d - 1];
                for (_, row) in prev.ideal.rows() {
                    for i in 0..ngens {
                        let mut acc: HashMap<u64, S> = HashMap::new();
                        for (col, c) in row {
                            let m = prev.masks[*col];
                            if let Some(sign) = wedge_sign(1 << i, m) {
                                let v = if sign < 0 { -c.clone() } else { c.clone() };
                                *acc.entry(m | (1 << i)).or_insert_with(S::zero) += v;
                            }
                        }
                        let r = to_row(&mut acc.into_iter().filter(|(_, c)| !c.is_zero()));
                        if !r.is_empty() {
                            ideal.insert(&r);
                        }
                    }
                }
            }
            for r in by_degree.get(&d).into_iter().flatten() {
                ideal.insert(&to_row(&mut r.terms().map(|(m, c)| (m, c.clone()))));
            }
            levels.push(Level {
                masks,
                index,
                ideal,
            });
        }
        Ok(ExteriorQuotient {
            ngens,
            degree_bound,
            levels,
        })
    }

    pub fn ngens(&self) -> usize {
        self.ngens
    }

    pub fn degree_bound(&self) -> usize {
        self.degree_bound
    }

    /// `dim (E/I)_d` for `d = 0..=degree_bound`.
    pub fn hilbert(&self) -> Vec<u128> {
        (0..=self.degree_bound)
            .map(|d| {
                self.levels
                    .get(d)
                    .map_or(0, |l| (l.masks.len() - l.ideal.rank()) as u128)
            })
            .collect()
    }

    pub fn ideal_dimension(&self, d: usize) -> usize {
        self.levels.get(d).map_or(0, |l| l.ideal.rank())
    }

    /// Normal monomials of degree `d`, the basis of `(E/I)_d`.
    pub fn normal_monomials(&self, d: usize) -> Vec<u64> {
        match self.levels.get(d) {
            None => Vec::new(),
            Some(l) => l
                .ideal
                .free_columns()
                .into_iter()
                .map(|c| l.masks[c])
                .collect(),
        }
    }

    /// Coordinates of a homogeneous degree-`d` element of `E` in the normal
    /// basis of `(E/I)_d`.
    pub fn coordinates(&self, x: &ExtElement<S>, d: usize) -> Result<Vec<S>> {
        let l = self
            .levels
            .get(d)
            .ok_or_else(|| Error::Dimension(format!("degree {d} beyond the bound")))?;
        let mut row: Vec<(usize, S)> = Vec::new();
        for (m, c) in x.terms() {
            if m.count_ones() as usize != d {
                return Err(Error::Dimension(format!(
                    "term of degree {} in a degree-{d} coordinate request",
                    m.count_ones()
                )));
            }
            row.push((l.index[&m], c.clone()));
        }
        row.sort_unstable_by_key(|(i, _)| *i);
        let nf = l.ideal.reduce(&row);
        let free = l.ideal.free_columns();
        let pos: HashMap<usize, usize> = free.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        let mut out = vec![S::zero(); free.len()];
        for (c, v) in nf {
            out[pos[&c]] = v;
        }
        Ok(out)
    }

    /// Reduced representative of a homogeneous element.
    pub fn normal_form(&self, x: &ExtElement<S>) -> Result<ExtElement<S>> {
        let mut out = ExtElement::zero(self.ngens);
        let Some(d) = x.homogeneous_degree() else {
            return Ok(out);
        };
        let d = d as usize;
        let basis = self.normal_monomials(d);
        for (m, c) in basis.into_iter().zip(self.coordinates(x, d)?) {
            out.add_term(m, c);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Q;

    fn e2(n: usize, i: usize, j: usize, c: i64) -> ExtElement<Q> {
        ExtElement::from_indices(n, &[i, j], Q::from_integer(c))
    }

    #[test]
    fn monomial_counts() {
        assert_eq!(exterior_monomials(4, 2).len(), 6);
        assert_eq!(exterior_monomials(4, 2)[0], 0b11);
        assert_eq!(exterior_monomials(3, 4), Vec::<u64>::new());
    }

    #[test]
    fn free_exterior_algebra() {
        let q = ExteriorQuotient::<Q>::new(3, &[], 5).unwrap();
        assert_eq!(q.hilbert(), vec![1, 3, 3, 1, 0, 0]);
    }

    #[test]
    fn arnold_relation_for_three_lines() {
        // e12 e13 − e12 e23 + e13 e23 with generators (0,1,2) = (12,13,23)
        let r = e2(3, 0, 1, 1)
            .add(&e2(3, 0, 2, -1))
            .unwrap()
            .add(&e2(3, 1, 2, 1))
            .unwrap();
        let q = ExteriorQuotient::new(3, &[r], 3).unwrap();
        assert_eq!(q.hilbert(), vec![1, 3, 2, 0]);
        assert_eq!(q.normal_monomials(2).len(), 2);
    }

    #[test]
    fn normal_form_is_idempotent() {
        let r = e2(4, 0, 1, 1).add(&e2(4, 2, 3, 1)).unwrap();
        let q = ExteriorQuotient::new(4, &[r.clone()], 4).unwrap();
        assert!(q.normal_form(&r).unwrap().is_zero());
        let x = e2(4, 0, 1, 3).add(&e2(4, 1, 3, 2)).unwrap();
        let nf = q.normal_form(&x).unwrap();
        assert_eq!(q.normal_form(&nf).unwrap(), nf);
        // e_i ∧ (e01 + e23) is a single cubic monomial for each i
        assert_eq!(q.hilbert(), vec![1, 4, 5, 0, 0]);
    }
}
