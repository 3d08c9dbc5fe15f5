//! Elements of an exterior algebra on at most 64 generators.
//!
//! A basis monomial `e_{i1} ∧ … ∧ e_{ik}` with `i1 < … < ik` is stored as a
//! bitmask; the bit order is the index order, so the mask is exactly the
//! strictly increasing index tuple.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::{exact_string, is_zero, Scalar};

/// Sign of `e_a ∧ e_b` relative to the sorted monomial `e_{a|b}`, or `None`
/// when the two monomials share an index.
pub fn wedge_sign(a: u64, b: u64) -> Option<i32> {
    if a & b != 0 {
        return None;
    }
    // Count pairs (s in a, t in b) with s > t.
    let mut inversions = 0u32;
    let mut rest = b;
    while rest != 0 {
        let t = rest.trailing_zeros();
        rest &= rest - 1;
        let above = if t == 63 { 0 } else { a >> (t + 1) };
        inversions += above.count_ones();
    }
    Some(if inversions % 2 == 0 { 1 } else { -1 })
}

/// Indices of a monomial mask in increasing order.
pub fn mask_indices(mask: u64) -> Vec<usize> {
    let mut out = Vec::with_capacity(mask.count_ones() as usize);
    let mut rest = mask;
    while rest != 0 {
        out.push(rest.trailing_zeros() as usize);
        rest &= rest - 1;
    }
    out
}

#[derive(Clone, PartialEq)]
pub struct ExtElement<S: Scalar> {
    ngens: usize,
    terms: BTreeMap<u64, S>,
}

impl<S: Scalar> ExtElement<S> {
    pub fn zero(ngens: usize) -> Self {
        assert!(ngens <= 64, "at most 64 exterior generators");
        ExtElement {
            ngens,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ngens: usize) -> Self {
        Self::monomial(ngens, 0, S::one())
    }

    /// The degree-one generator `e_i`.
    pub fn generator(ngens: usize, i: usize) -> Self {
        assert!(i < ngens);
        Self::monomial(ngens, 1u64 << i, S::one())
    }

    pub fn monomial(ngens: usize, mask: u64, coeff: S) -> Self {
        let mut e = Self::zero(ngens);
        e.add_term(mask, coeff);
        e
    }

    /// Builds `coeff · e_{i1} ∧ … ∧ e_{ik}` from an arbitrary index list,
    /// sorting it with the matching sign; repeated indices give zero.
    pub fn from_indices(ngens: usize, indices: &[usize], coeff: S) -> Self {
        let mut e = ExtElement::one(ngens).scale(&coeff);
        for &i in indices {
            e = e
                .multiply(&Self::generator(ngens, i))
                .expect("same ambient");
        }
        e
    }

    pub fn ngens(&self) -> usize {
        self.ngens
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (u64, &S)> {
        self.terms.iter().map(|(m, c)| (*m, c))
    }

    pub fn coefficient(&self, mask: u64) -> S {
        self.terms.get(&mask).cloned().unwrap_or_else(S::zero)
    }

    pub fn add_term(&mut self, mask: u64, coeff: S) {
        debug_assert!(self.ngens == 64 || mask >> self.ngens == 0);
        if is_zero(&coeff) {
            return;
        }
        let entry = self.terms.entry(mask).or_insert_with(S::zero);
        *entry += coeff;
        if is_zero(entry) {
            self.terms.remove(&mask);
        }
    }

    /// `Some(k)` if every term has degree `k`.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degrees = self.terms.keys().map(|m| m.count_ones());
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    pub fn scale(&self, c: &S) -> Self {
        let mut out = Self::zero(self.ngens);
        if is_zero(c) {
            return out;
        }
        for (m, v) in &self.terms {
            out.terms.insert(*m, v.clone() * c);
        }
        out
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_ambient(other)?;
        let mut out = self.clone();
        for (m, v) in &other.terms {
            out.add_term(*m, v.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-S::one()))
    }

    /// Graded-commutative product `self ∧ other`.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.check_ambient(other)?;
        let mut out = Self::zero(self.ngens);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                if let Some(sign) = wedge_sign(*a, *b) {
                    let mut c = ca.clone() * cb;
                    if sign < 0 {
                        c = -c;
                    }
                    out.add_term(a | b, c);
                }
            }
        }
        Ok(out)
    }

    fn check_ambient(&self, other: &Self) -> Result<()> {
        if self.ngens != other.ngens {
            return Err(Error::Dimension(format!(
                "exterior algebras on {} and {} generators",
                self.ngens, other.ngens
            )));
        }
        Ok(())
    }
}

/// Free function form of [`ExtElement::multiply`].
pub fn ext_multiply<S: Scalar>(a: &ExtElement<S>, b: &ExtElement<S>) -> Result<ExtElement<S>> {
    a.multiply(b)
}

impl<S: Scalar> fmt::Debug for ExtElement<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl<S: Scalar> fmt::Display for ExtElement<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let idx = mask_indices(*m);
            if idx.is_empty() {
                write!(f, "{}", exact_string(c))?;
            } else {
                let word: Vec<String> = idx.iter().map(|i| format!("e{}", i + 1)).collect();
                write!(f, "({})*{}", exact_string(c), word.join("^"))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Q;

    fn e(i: usize) -> ExtElement<Q> {
        ExtElement::generator(3, i)
    }

    #[test]
    fn repeated_index_vanishes() {
        let e12 = e(0).multiply(&e(1)).unwrap();
        assert!(e12.multiply(&e(0)).unwrap().is_zero());
    }

    #[test]
    fn degree_one_anticommute() {
        let lhs = e(1).multiply(&e(0)).unwrap();
        let rhs = e(0).multiply(&e(1)).unwrap().scale(&-Q::one());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn bilinear_expansion() {
        let a = e(0).add(&e(1)).unwrap();
        let b = e(0).sub(&e(1)).unwrap();
        let expected = ExtElement::monomial(3, 0b011, Q::of(-2));
        assert_eq!(a.multiply(&b).unwrap(), expected);
    }

    #[test]
    fn ambient_mismatch_is_an_error() {
        let a: ExtElement<Q> = ExtElement::generator(2, 0);
        let b: ExtElement<Q> = ExtElement::generator(3, 0);
        assert!(matches!(a.multiply(&b), Err(Error::Dimension(_))));
    }

    #[test]
    fn sign_table() {
        assert_eq!(wedge_sign(0b001, 0b010), Some(1));
        assert_eq!(wedge_sign(0b010, 0b001), Some(-1));
        assert_eq!(wedge_sign(0b110, 0b001), Some(1));
        assert_eq!(wedge_sign(0b011, 0b010), None);
        let from = ExtElement::<Q>::from_indices(3, &[2, 0, 1], Q::one());
        assert_eq!(from, ExtElement::monomial(3, 0b111, Q::one()));
    }

    use num_traits::One;
}
