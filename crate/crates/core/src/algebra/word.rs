//! Words over a finite alphabet and noncommutative polynomials.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use smallvec::SmallVec;

use crate::scalar::{exact_string, is_zero, Scalar};

/// A word in generator indices, ordered degree-lexicographically with
/// `x1 > x2 > …`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(pub SmallVec<[u8; 16]>);

impl Word {
    pub fn empty() -> Self {
        Word(SmallVec::new())
    }

    pub fn letter(i: usize) -> Self {
        Word(SmallVec::from_slice(&[i as u8]))
    }

    pub fn from_slice(letters: &[u8]) -> Self {
        Word(SmallVec::from_slice(letters))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut w = self.0.clone();
        w.extend_from_slice(&other.0);
        Word(w)
    }

    /// Replaces the factor `self[start..end]` by `middle`.
    pub fn splice(&self, start: usize, end: usize, middle: &[u8]) -> Word {
        let mut w: SmallVec<[u8; 16]> =
            SmallVec::with_capacity(self.len() - (end - start) + middle.len());
        w.extend_from_slice(&self.0[..start]);
        w.extend_from_slice(middle);
        w.extend_from_slice(&self.0[end..]);
        Word(w)
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| other.0.as_slice().cmp(self.0.as_slice()))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|l| format!("x{}", l + 1)).collect();
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

/// Linear combination of words; the largest word is the leading word.
#[derive(Clone, PartialEq, Default)]
pub struct NcPolynomial<S: Scalar> {
    terms: BTreeMap<Word, S>,
}

impl<S: Scalar> NcPolynomial<S> {
    pub fn zero() -> Self {
        NcPolynomial {
            terms: BTreeMap::new(),
        }
    }

    pub fn word(w: Word, c: S) -> Self {
        let mut p = Self::zero();
        p.add_term(w, c);
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Word, S)>) -> Self {
        let mut p = Self::zero();
        for (w, c) in terms {
            p.add_term(w, c);
        }
        p
    }

    /// `xy − yx` for two generators.
    pub fn commutator(a: usize, b: usize) -> Self {
        Self::from_terms([
            (Word::from_slice(&[a as u8, b as u8]), S::one()),
            (Word::from_slice(&[b as u8, a as u8]), -S::one()),
        ])
    }

    pub fn add_term(&mut self, w: Word, c: S) {
        if is_zero(&c) {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if is_zero(o.get()) {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Word, &S)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading(&self) -> Option<(&Word, &S)> {
        self.terms.iter().next_back()
    }

    pub fn coefficient(&self, w: &Word) -> S {
        self.terms.get(w).cloned().unwrap_or_else(S::zero)
    }

    pub fn homogeneous_degree(&self) -> Option<usize> {
        let first = self.terms.keys().next()?.len();
        self.terms.keys().all(|w| w.len() == first).then_some(first)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &S) -> Self {
        if is_zero(c) {
            return Self::zero();
        }
        NcPolynomial {
            terms: self
                .terms
                .iter()
                .map(|(w, v)| (w.clone(), v.clone() * c))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out.add_term(a.concat(b), ca.clone() * cb);
            }
        }
        out
    }

    /// `left · self · right` for words `left`, `right`.
    pub fn sandwich(&self, left: &Word, right: &Word) -> Self {
        NcPolynomial {
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (left.concat(w).concat(right), c.clone()))
                .collect(),
        }
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => self.clone(),
            Some((_, c)) => self.scale(&(S::one() / c.clone())),
        }
    }

    pub fn into_terms(self) -> BTreeMap<Word, S> {
        self.terms
    }

    pub fn display_with(&self, labels: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(w, c)| {
                let letters: Vec<String> = w
                    .letters()
                    .iter()
                    .map(|&l| {
                        labels
                            .get(l as usize)
                            .cloned()
                            .unwrap_or_else(|| format!("x{}", l + 1))
                    })
                    .collect();
                format!("({})*{}", exact_string(c), letters.join("*"))
            })
            .collect();
        parts.join(" + ")
    }
}

impl<S: Scalar> fmt::Debug for NcPolynomial<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with(&[]))
    }
}
