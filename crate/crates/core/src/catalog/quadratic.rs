//! Quadratic presentations of cohomology rings and of associated graded
//! Lie algebras.

use std::collections::BTreeMap;

use serde::Serialize;

use super::{Family, GroupId};
use crate::algebra::{ExtElement, Matrix, NcPolynomial, Word};
use crate::error::{Error, Result};
use crate::groebner::{NcQuadraticPresentation, SymmetricGrading};
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Flavor {
    Exterior,
    Associative,
    Lie,
}

/// A quadratic relation `Σ c · (x_i ⋆ x_j)` with integer coefficients.
///
/// For the exterior and Lie flavors `⋆` is antisymmetric and stored pairs
/// satisfy `i < j`; for the associative flavor pairs are ordered words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadRelation {
    pub label: String,
    pub terms: Vec<((usize, usize), i64)>,
}

impl QuadRelation {
    fn build(flavor: Flavor, label: String, products: &[(usize, usize, i64)]) -> Self {
        let mut acc: BTreeMap<(usize, usize), i64> = BTreeMap::new();
        for &(a, b, c) in products {
            let (key, sign) = match flavor {
                Flavor::Associative => ((a, b), 1),
                _ if a == b => continue,
                _ if a < b => ((a, b), 1),
                _ => ((b, a), -1),
            };
            *acc.entry(key).or_insert(0) += sign * c;
        }
        QuadRelation {
            label,
            terms: acc.into_iter().filter(|(_, c)| *c != 0).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

/// Generators, flavor and quadratic relations of a graded algebra.
#[derive(Clone, Debug)]
pub struct QuadraticAlgebraPresentation {
    pub flavor: Flavor,
    pub generators: Vec<String>,
    pub relations: Vec<QuadRelation>,
}

#[derive(Serialize)]
struct Dump<'a> {
    flavor: Flavor,
    generators: &'a [String],
    relations: Vec<Vec<(String, String)>>,
}

impl QuadraticAlgebraPresentation {
    pub fn n_generators(&self) -> usize {
        self.generators.len()
    }

    /// Relations as exterior elements of degree two.
    pub fn exterior_relations<S: Scalar>(&self) -> Result<Vec<ExtElement<S>>> {
        if self.flavor != Flavor::Exterior {
            return Err(Error::InvalidArgument(
                "not an exterior presentation".into(),
            ));
        }
        let n = self.n_generators();
        Ok(self
            .relations
            .iter()
            .map(|r| {
                let mut e = ExtElement::zero(n);
                for &((i, j), c) in &r.terms {
                    e.add_term((1u64 << i) | (1u64 << j), S::of(c));
                }
                e
            })
            .collect())
    }

    /// Associative presentation, expanding brackets as `[x, y] = xy − yx`.
    pub fn to_associative<S: Scalar>(&self) -> Result<NcQuadraticPresentation<S>> {
        if self.flavor == Flavor::Exterior {
            return Err(Error::InvalidArgument(
                "exterior presentations have no direct associative form".into(),
            ));
        }
        let rels = self
            .relations
            .iter()
            .map(|r| {
                let mut p = NcPolynomial::zero();
                for &((i, j), c) in &r.terms {
                    let ij = Word::from_slice(&[i as u8, j as u8]);
                    match self.flavor {
                        Flavor::Associative => p.add_term(ij, S::of(c)),
                        Flavor::Lie => {
                            p.add_term(ij, S::of(c));
                            p.add_term(Word::from_slice(&[j as u8, i as u8]), S::of(-c));
                        }
                        Flavor::Exterior => unreachable!(),
                    }
                }
                p
            })
            .collect();
        NcQuadraticPresentation::new(self.n_generators(), rels)
    }

    /// Dimension of the span of the relations in degree two.
    pub fn relation_rank<S: Scalar>(&self) -> usize {
        let n = self.n_generators();
        let cols = match self.flavor {
            Flavor::Associative => n * n,
            _ => n * n.saturating_sub(1) / 2,
        };
        if self.relations.is_empty() || cols == 0 {
            return 0;
        }
        let col = |i: usize, j: usize| match self.flavor {
            Flavor::Associative => i * n + j,
            // index of the pair (i, j), i < j, in lexicographic order
            _ => i * (2 * n - i - 1) / 2 + (j - i - 1),
        };
        let mut m = Matrix::<S>::zeros(self.relations.len(), cols);
        for (r, rel) in self.relations.iter().enumerate() {
            for &((i, j), c) in &rel.terms {
                m[(r, col(i, j))] = S::of(c);
            }
        }
        m.rank()
    }

    /// Deterministic JSON-ready summary.
    pub fn dump(&self) -> impl Serialize + '_ {
        let sep = match self.flavor {
            Flavor::Exterior => "*",
            Flavor::Associative => "*",
            Flavor::Lie => ",",
        };
        let relations = self
            .relations
            .iter()
            .map(|r| {
                r.terms
                    .iter()
                    .map(|&((i, j), c)| {
                        let term = match self.flavor {
                            Flavor::Lie => {
                                format!("[{}{sep}{}]", self.generators[i], self.generators[j])
                            }
                            _ => format!("{}{sep}{}", self.generators[i], self.generators[j]),
                        };
                        (term, c.to_string())
                    })
                    .collect()
            })
            .collect();
        Dump {
            flavor: self.flavor,
            generators: &self.generators,
            relations,
        }
    }
}

struct Builder<'a> {
    g: &'a GroupId,
    flavor: Flavor,
    relations: Vec<QuadRelation>,
}

impl<'a> Builder<'a> {
    fn new(g: &'a GroupId, flavor: Flavor) -> Self {
        Builder {
            g,
            flavor,
            relations: Vec::new(),
        }
    }

    fn gen(&self, i: usize, j: usize) -> usize {
        self.g
            .index_of(i, j)
            .unwrap_or_else(|| panic!("no generator ({i},{j}) in {}", self.g))
    }

    fn has(&self, i: usize, j: usize) -> bool {
        self.g.index_of(i, j).is_some()
    }

    /// `terms` lists `(coefficient, left pair, right pair)`.
    fn push(&mut self, label: String, terms: &[(i64, (usize, usize), (usize, usize))]) {
        let products: Vec<(usize, usize, i64)> = terms
            .iter()
            .map(|&(c, a, b)| (self.gen(a.0, a.1), self.gen(b.0, b.1), c))
            .collect();
        self.relations
            .push(QuadRelation::build(self.flavor, label, &products));
    }

    fn finish(self, letter: &str) -> QuadraticAlgebraPresentation {
        QuadraticAlgebraPresentation {
            flavor: self.flavor,
            generators: self.g.labels(letter),
            relations: self.relations,
        }
    }
}

fn triples_increasing(n: usize) -> impl Iterator<Item = (usize, usize, usize)> {
    (1..=n).flat_map(move |i| (i + 1..=n).flat_map(move |j| (j + 1..=n).map(move |k| (i, j, k))))
}

fn triples_distinct(n: usize) -> impl Iterator<Item = (usize, usize, usize)> {
    (1..=n).flat_map(move |i| {
        (1..=n).flat_map(move |j| {
            (1..=n)
                .filter(move |&k| i != j && j != k && i != k)
                .map(move |k| (i, j, k))
        })
    })
}

fn tag3(name: &str, i: usize, j: usize, k: usize) -> String {
    format!("{name}({i},{j},{k})")
}

/// Exterior presentation of `H*(G; Q)`.
pub fn cohomology_presentation(g: &GroupId) -> Result<QuadraticAlgebraPresentation> {
    let n = g.n;
    let mut b = Builder::new(g, Flavor::Exterior);
    let letter = match g.family {
        Family::Free => {
            for i in 1..=n {
                for j in i + 1..=n {
                    b.push(format!("F({i},{j})"), &[(1, (i, 0), (j, 0))]);
                }
            }
            "e"
        }
        Family::ProductOfFree => {
            for m in 1..n {
                for r in 1..=m {
                    for s in r + 1..=m {
                        b.push(format!("F{m}({r},{s})"), &[(1, (m, r), (m, s))]);
                    }
                }
            }
            "e"
        }
        Family::PureBraid => {
            // u_jk u_ik = u_ij (u_ik − u_jk)
            for (i, j, k) in triples_increasing(n) {
                b.push(
                    tag3("I1", i, j, k),
                    &[
                        (1, (j, k), (i, k)),
                        (-1, (i, j), (i, k)),
                        (1, (i, j), (j, k)),
                    ],
                );
            }
            "u"
        }
        Family::WeldedPure | Family::VirtualPure => {
            for i in 1..=n {
                for j in i + 1..=n {
                    b.push(format!("I2({i},{j})"), &[(1, (i, j), (j, i))]);
                }
            }
            // a_kj a_ik = a_ij (a_ik − a_jk)
            for (i, j, k) in triples_distinct(n) {
                b.push(
                    tag3("I3", i, j, k),
                    &[
                        (1, (k, j), (i, k)),
                        (-1, (i, j), (i, k)),
                        (1, (i, j), (j, k)),
                    ],
                );
            }
            if g.family == Family::VirtualPure {
                // a_ji a_ik = (a_ij − a_ik) a_jk
                for (i, j, k) in triples_distinct(n) {
                    b.push(
                        tag3("I4", i, j, k),
                        &[
                            (1, (j, i), (i, k)),
                            (-1, (i, j), (j, k)),
                            (1, (i, k), (j, k)),
                        ],
                    );
                }
            }
            "a"
        }
        Family::WeldedPurePlus | Family::VirtualPurePlus => {
            // e_ij (e_ik − e_jk) = 0
            for (i, j, k) in triples_increasing(n) {
                b.push(
                    tag3("I5", i, j, k),
                    &[(1, (i, j), (i, k)), (-1, (i, j), (j, k))],
                );
            }
            if g.family == Family::VirtualPurePlus {
                // (e_ij − e_ik) e_jk = 0
                for (i, j, k) in triples_increasing(n) {
                    b.push(
                        tag3("I6", i, j, k),
                        &[(1, (i, j), (j, k)), (-1, (i, k), (j, k))],
                    );
                }
            }
            "e"
        }
    };
    Ok(b.finish(letter))
}

/// Lie presentation of the associated graded Lie algebra `gr(G)`.
pub fn gr_presentation(g: &GroupId) -> Result<QuadraticAlgebraPresentation> {
    let n = g.n;
    let mut b = Builder::new(g, Flavor::Lie);
    match g.family {
        Family::Free => {}
        Family::ProductOfFree => {
            let gens = g.generator_indices();
            for (p, &a) in gens.iter().enumerate() {
                for &c in &gens[p + 1..] {
                    if a.0 != c.0 {
                        b.push(format!("[{},{}|{},{}]", a.0, a.1, c.0, c.1), &[(1, a, c)]);
                    }
                }
            }
        }
        Family::PureBraid => {
            push_l2(&mut b);
            // [x_im, x_ij + x_ik + x_jk] = 0, m ∈ {j, k}
            for (i, j, k) in triples_increasing(n) {
                for m in [j, k] {
                    b.push(
                        format!("L4({i},{j},{k};{m})"),
                        &[
                            (1, (i, m), (i, j)),
                            (1, (i, m), (i, k)),
                            (1, (i, m), (j, k)),
                        ],
                    );
                }
            }
        }
        Family::WeldedPure
        | Family::WeldedPurePlus
        | Family::VirtualPure
        | Family::VirtualPurePlus => {
            push_l1(&mut b);
            push_l2(&mut b);
            if matches!(g.family, Family::WeldedPure | Family::WeldedPurePlus) {
                push_l3(&mut b);
            }
        }
    }
    Ok(b.finish("x"))
}

/// For `wP_n`, the grading of `gr(wP_n)` by the second index,
/// `x_ij ↦ e_j`, with the symmetric group permuting strands. The relation
/// space is homogeneous for it: `L1 − L3` is `[x_ij, x_ik + x_jk]`.
pub fn symmetric_grading(g: &GroupId) -> Option<SymmetricGrading> {
    if g.family != Family::WeldedPure || g.n < 2 {
        return None;
    }
    let n = g.n;
    let gens = g.generator_indices();
    let on_letters = |sigma: &dyn Fn(usize) -> usize| -> Vec<u8> {
        gens.iter()
            .map(|&(i, j)| g.index_of(sigma(i), sigma(j)).expect("strand permutation") as u8)
            .collect()
    };
    let swap = |i: usize| match i {
        1 => 2,
        2 => 1,
        i => i,
    };
    let cycle = |i: usize| i % n + 1;
    Some(SymmetricGrading {
        parts: n,
        class: gens.iter().map(|&(_, j)| j - 1).collect(),
        symmetries: vec![on_letters(&swap), on_letters(&cycle)],
    })
}

/// `[x_ij, x_ik] + [x_ij, x_jk] + [x_ik, x_jk] = 0` for distinct `i, j, k`
/// whose three generators exist.
fn push_l1(b: &mut Builder<'_>) {
    for (i, j, k) in triples_distinct(b.g.n) {
        if b.has(i, j) && b.has(i, k) && b.has(j, k) {
            b.push(
                tag3("L1", i, j, k),
                &[
                    (1, (i, j), (i, k)),
                    (1, (i, j), (j, k)),
                    (1, (i, k), (j, k)),
                ],
            );
        }
    }
}

/// `[x_ij, x_kl] = 0` for disjoint index pairs, one relation per unordered
/// pair of generators.
fn push_l2(b: &mut Builder<'_>) {
    let gens = b.g.generator_indices();
    for (p, &(i, j)) in gens.iter().enumerate() {
        for &(k, l) in &gens[p + 1..] {
            if i != k && i != l && j != k && j != l {
                b.push(format!("L2({i},{j};{k},{l})"), &[(1, (i, j), (k, l))]);
            }
        }
    }
}

/// `[x_ik, x_jk] = 0` for distinct `i, j, k`, one relation per unordered
/// `{i, j}`.
fn push_l3(b: &mut Builder<'_>) {
    let n = b.g.n;
    for k in 1..=n {
        for i in 1..=n {
            for j in i + 1..=n {
                if i != k && j != k && b.has(i, k) && b.has(j, k) {
                    b.push(tag3("L3", i, j, k), &[(1, (i, k), (j, k))]);
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Q;

    fn binom(n: usize, k: usize) -> usize {
        if k > n {
            return 0;
        }
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn pure_braid_three() {
        let p = cohomology_presentation(&GroupId::pure_braid(3)).unwrap();
        assert_eq!(p.generators, ["u12", "u13", "u23"]);
        assert_eq!(p.relations.len(), 1);
        // u23 u13 − u12 u13 + u12 u23 = −u13u23 − u12u13 + u12u23
        assert_eq!(
            p.relations[0].terms,
            vec![((0, 1), -1), ((0, 2), 1), ((1, 2), -1)]
        );
    }

    #[test]
    fn virtual_two() {
        let p = cohomology_presentation(&GroupId::virtual_pure(2)).unwrap();
        assert_eq!(p.generators, ["a12", "a21"]);
        assert_eq!(p.relations.len(), 1);
        assert!(gr_presentation(&GroupId::virtual_pure(2))
            .unwrap()
            .relations
            .is_empty());
    }

    #[test]
    fn relation_counts() {
        for n in 2..=5 {
            let c3 = binom(n, 3);
            let perm3 = n * (n - 1) * n.saturating_sub(2);
            let disjoint_upper = binom(n, 2) * binom(n - 2, 2) / 2;
            let count = |g: GroupId| gr_presentation(&g).unwrap().relations.len();
            assert_eq!(
                cohomology_presentation(&GroupId::welded_plus(n))
                    .unwrap()
                    .relations
                    .len(),
                c3
            );
            assert_eq!(count(GroupId::pure_braid(n)), disjoint_upper + 2 * c3);
            assert_eq!(
                count(GroupId::welded_plus(n)),
                c3 + disjoint_upper + (1..=n).map(|k| binom(k - 1, 2)).sum::<usize>()
            );
            assert_eq!(count(GroupId::virtual_plus(n)), c3 + disjoint_upper);
            // ordered generators: each unordered disjoint pair of index pairs gives 4 generator pairs
            assert_eq!(
                count(GroupId::virtual_pure(n)),
                perm3 + 2 * binom(n, 2) * binom(n - 2, 2)
            );
            assert_eq!(
                count(GroupId::welded(n)),
                perm3 + 2 * binom(n, 2) * binom(n - 2, 2) + n * binom(n - 1, 2)
            );
        }
        assert_eq!(
            gr_presentation(&GroupId::welded(4))
                .unwrap()
                .relations
                .len(),
            48
        );
        assert_eq!(
            gr_presentation(&GroupId::pure_braid(4))
                .unwrap()
                .relations
                .len(),
            11
        );
    }

    #[test]
    fn pure_braid_three_lie() {
        let p = gr_presentation(&GroupId::pure_braid(3)).unwrap();
        assert_eq!(p.relations.len(), 2);
        // [x12, x13 + x23] and [x13, x12 + x23]
        assert_eq!(p.relations[0].terms, vec![((0, 1), 1), ((0, 2), 1)]);
        assert_eq!(p.relations[1].terms, vec![((0, 1), -1), ((1, 2), 1)]);
        assert_eq!(p.relation_rank::<Q>(), 2);
    }

    #[test]
    fn commutative_flavors_cancel_squares() {
        let r = QuadRelation::build(Flavor::Lie, "t".into(), &[(0, 0, 3), (1, 0, 2)]);
        assert_eq!(r.terms, vec![((0, 1), -2)]);
        let r = QuadRelation::build(Flavor::Associative, "t".into(), &[(0, 0, 3), (1, 0, 2)]);
        assert_eq!(r.terms, vec![((0, 0), 3), ((1, 0), 2)]);
    }
}
