//! Buchberger's algorithm for submodules of graded free modules over a
//! polynomial ring, with position-over-term orders and degree truncation.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::algebra::{monomials_of_degree, Monomial, MonomialOrder, Polynomial};
use crate::error::{Error, Result};
use crate::scalar::{is_zero, Scalar};

/// A term `m·e_pos` of a free module.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ModuleTerm {
    pub pos: usize,
    pub mono: Monomial,
}

/// Element of a free module, terms sorted strictly decreasing.
#[derive(Clone, Debug, PartialEq)]
pub struct ModuleVector<S: Scalar> {
    terms: Vec<(ModuleTerm, S)>,
}

impl<S: Scalar> ModuleVector<S> {
    pub fn zero() -> Self {
        ModuleVector { terms: Vec::new() }
    }

    pub fn terms(&self) -> &[(ModuleTerm, S)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading(&self) -> Option<&(ModuleTerm, S)> {
        self.terms.first()
    }

    /// Component polynomials, one per generator.
    pub fn components(
        &self,
        rank: usize,
        nvars: usize,
        order: MonomialOrder,
    ) -> Vec<Polynomial<S>> {
        let mut parts: Vec<Vec<(Monomial, S)>> = vec![Vec::new(); rank];
        for (t, c) in &self.terms {
            parts[t.pos].push((t.mono.clone(), c.clone()));
        }
        parts
            .into_iter()
            .map(|p| Polynomial::from_terms(nvars, order, p))
            .collect()
    }
}

/// Ring, free module and relations.
#[derive(Clone, Debug)]
pub struct ModulePresentation<S: Scalar> {
    nvars: usize,
    var_names: Vec<String>,
    order: MonomialOrder,
    shifts: Vec<u32>,
    relations: Vec<ModuleVector<S>>,
}

fn cmp_terms(order: MonomialOrder, a: &ModuleTerm, b: &ModuleTerm) -> Ordering {
    // e_1 > e_2 > …, then the ring order
    b.pos.cmp(&a.pos).then_with(|| order.cmp(&a.mono, &b.mono))
}

impl<S: Scalar> ModulePresentation<S> {
    /// `shifts[i]` is the degree of the `i`-th generator; each relation
    /// lists one polynomial per generator.
    pub fn new(
        nvars: usize,
        order: MonomialOrder,
        shifts: Vec<u32>,
        relations: Vec<Vec<Polynomial<S>>>,
    ) -> Result<Self> {
        let mut rels = Vec::with_capacity(relations.len());
        for r in relations {
            if r.len() != shifts.len() {
                return Err(Error::Dimension(format!(
                    "relation has {} entries, module rank is {}",
                    r.len(),
                    shifts.len()
                )));
            }
            let mut terms = Vec::new();
            for (pos, p) in r.iter().enumerate() {
                if p.nvars() != nvars {
                    return Err(Error::Dimension(format!(
                        "entry in {} variables, ring has {nvars}",
                        p.nvars()
                    )));
                }
                terms.extend(p.terms().iter().map(|(m, c)| {
                    (
                        ModuleTerm {
                            pos,
                            mono: m.clone(),
                        },
                        c.clone(),
                    )
                }));
            }
            terms.sort_by(|a, b| cmp_terms(order, &b.0, &a.0));
            rels.push(ModuleVector { terms });
        }
        let var_names = (1..=nvars).map(|i| format!("x{i}")).collect();
        Ok(ModulePresentation {
            nvars,
            var_names,
            order,
            shifts,
            relations: rels,
        })
    }

    /// An ideal, as a submodule of the rank-one free module.
    pub fn ideal(nvars: usize, order: MonomialOrder, gens: Vec<Polynomial<S>>) -> Result<Self> {
        let gens = gens
            .into_iter()
            .map(|g| vec![g.with_order(order)])
            .collect();
        Self::new(nvars, order, vec![0], gens)
    }

    pub fn with_var_names(mut self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.nvars {
            return Err(Error::Dimension(format!(
                "{} names for {} variables",
                names.len(),
                self.nvars
            )));
        }
        self.var_names = names;
        Ok(self)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn rank(&self) -> usize {
        self.shifts.len()
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn shifts(&self) -> &[u32] {
        &self.shifts
    }

    pub fn relations(&self) -> &[ModuleVector<S>] {
        &self.relations
    }

    pub fn is_homogeneous(&self) -> bool {
        self.relations.iter().all(|r| {
            let mut degs = r
                .terms
                .iter()
                .map(|(t, _)| t.mono.degree() + self.shifts[t.pos]);
            match degs.next() {
                None => true,
                Some(d) => degs.all(|e| e == d),
            }
        })
    }

    /// The same module under another ring order.
    pub fn with_order(&self, order: MonomialOrder) -> Self {
        let relations = self
            .relations
            .iter()
            .map(|r| {
                let mut terms = r.terms.clone();
                terms.sort_by(|a, b| cmp_terms(order, &b.0, &a.0));
                ModuleVector { terms }
            })
            .collect();
        ModulePresentation {
            order,
            relations,
            ..self.clone()
        }
    }

    fn degree_of(&self, t: &ModuleTerm) -> u32 {
        t.mono.degree() + self.shifts[t.pos]
    }
}

/// Reduced Gröbner basis, valid through `degree_bound`.
#[derive(Clone, Debug)]
pub struct GroebnerBasis<S: Scalar> {
    nvars: usize,
    var_names: Vec<String>,
    order: MonomialOrder,
    shifts: Vec<u32>,
    homogeneous: bool,
    degree_bound: u32,
    complete: bool,
    elements: Vec<ModuleVector<S>>,
}

fn sub_scaled<S: Scalar>(
    order: MonomialOrder,
    a: &[(ModuleTerm, S)],
    b: &[(ModuleTerm, S)],
    shift: &Monomial,
    factor: &S,
) -> Vec<(ModuleTerm, S)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut i = 0;
    let mut bi = b
        .iter()
        .map(|(t, c)| {
            (
                ModuleTerm {
                    pos: t.pos,
                    mono: t.mono.mul(shift),
                },
                c.clone() * factor,
            )
        })
        .peekable();
    while i < a.len() || bi.peek().is_some() {
        let pick = match (a.get(i), bi.peek()) {
            (Some(x), Some(y)) => cmp_terms(order, &x.0, &y.0),
            (Some(_), None) => Ordering::Greater,
            _ => Ordering::Less,
        };
        match pick {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                let (t, c) = bi.next().expect("peeked");
                out.push((t, -c));
            }
            Ordering::Equal => {
                let (t, c) = bi.next().expect("peeked");
                let v = a[i].1.clone() - &c;
                if !is_zero(&v) {
                    out.push((t, v));
                }
                i += 1;
            }
        }
    }
    out
}

struct Engine<'a, S: Scalar> {
    order: MonomialOrder,
    basis: &'a [ModuleVector<S>],
}

impl<S: Scalar> Engine<'_, S> {
    fn reducer(&self, t: &ModuleTerm) -> Option<usize> {
        self.basis.iter().position(|g| {
            let lt = &g.terms[0].0;
            lt.pos == t.pos && lt.mono.divides(&t.mono)
        })
    }

    /// Full normal form: no term is divisible by a leading term.
    fn normal_form(&self, v: &[(ModuleTerm, S)]) -> Vec<(ModuleTerm, S)> {
        let mut cur = v.to_vec();
        let mut done = 0;
        while done < cur.len() {
            match self.reducer(&cur[done].0) {
                None => done += 1,
                Some(gi) => {
                    let g = &self.basis[gi].terms;
                    let shift = g[0].0.mono.quotient_of(&cur[done].0.mono);
                    let factor = cur[done].1.clone() / g[0].1.clone();
                    let tail = sub_scaled(self.order, &cur[done + 1..], &g[1..], &shift, &factor);
                    cur.truncate(done);
                    cur.extend(tail);
                }
            }
        }
        cur
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
struct Pair {
    sugar: u32,
    i: usize,
    j: usize,
}

/// Computes a reduced Gröbner basis of the submodule generated by the
/// relations, processing S-pairs by increasing degree and discarding those
/// above `degree_bound`.
pub fn buchberger_module<S: Scalar>(
    p: &ModulePresentation<S>,
    degree_bound: u32,
) -> GroebnerBasis<S> {
    let order = p.order;
    let ideal = p.rank() == 1;
    let mut basis: Vec<ModuleVector<S>> = Vec::new();
    let mut sugar: Vec<u32> = Vec::new();
    let mut pairs: BTreeSet<Pair> = BTreeSet::new();
    let mut complete = true;

    let sugar_of = |v: &[(ModuleTerm, S)]| v.iter().map(|(t, _)| p.degree_of(t)).max().unwrap_or(0);

    let mut inputs: Vec<(u32, Vec<(ModuleTerm, S)>)> = p
        .relations
        .iter()
        .map(|r| (sugar_of(&r.terms), r.terms.clone()))
        .collect();
    inputs.sort_by_key(|(s, _)| *s);
    let mut pending = inputs.into_iter().peekable();

    loop {
        let next_pair_sugar = pairs.first().map(|q| q.sugar);
        let take_input = match (pending.peek(), next_pair_sugar) {
            (Some((s, _)), Some(ps)) => *s <= ps,
            (Some(_), None) => true,
            (None, Some(_)) => false,
            (None, None) => break,
        };
        let (s, raw) = if take_input {
            pending.next().expect("peeked")
        } else {
            let q = pairs.pop_first().expect("nonempty");
            if q.sugar > degree_bound {
                complete = false;
                pairs.clear();
                continue;
            }
            (q.sugar, spoly(order, &basis[q.i], &basis[q.j]))
        };
        let h = Engine {
            order,
            basis: &basis,
        }
        .normal_form(&raw);
        if h.is_empty() {
            continue;
        }
        let inv = S::one() / h[0].1.clone();
        let h = ModuleVector {
            terms: h.into_iter().map(|(t, c)| (t, c * &inv)).collect(),
        };
        let s = s.max(sugar_of(&h.terms));
        update_pairs(&mut pairs, &basis, &sugar, &h, s, ideal);
        basis.push(h);
        sugar.push(s);
    }

    let elements = interreduce(order, basis);
    GroebnerBasis {
        nvars: p.nvars,
        var_names: p.var_names.clone(),
        order,
        shifts: p.shifts.clone(),
        homogeneous: p.is_homogeneous(),
        degree_bound,
        complete,
        elements,
    }
}

fn spoly<S: Scalar>(
    order: MonomialOrder,
    f: &ModuleVector<S>,
    g: &ModuleVector<S>,
) -> Vec<(ModuleTerm, S)> {
    let (lf, cf) = &f.terms[0];
    let (lg, cg) = &g.terms[0];
    let l = lf.mono.lcm(&lg.mono);
    let a = lf.mono.quotient_of(&l);
    let b = lg.mono.quotient_of(&l);
    let fa: Vec<(ModuleTerm, S)> = f.terms[1..]
        .iter()
        .map(|(t, c)| {
            (
                ModuleTerm {
                    pos: t.pos,
                    mono: t.mono.mul(&a),
                },
                c.clone() / cf.clone(),
            )
        })
        .collect();
    sub_scaled(order, &fa, &g.terms[1..], &b, &(S::one() / cg.clone()))
}

/// Gebauer–Möller update for a new element `h` joining `basis`.
fn update_pairs<S: Scalar>(
    pairs: &mut BTreeSet<Pair>,
    basis: &[ModuleVector<S>],
    sugar: &[u32],
    h: &ModuleVector<S>,
    h_sugar: u32,
    ideal: bool,
) {
    let k = basis.len();
    let lh = &h.terms[0].0;
    let lcm_with = |i: usize| -> Option<Monomial> {
        let lt = &basis[i].terms[0].0;
        (lt.pos == lh.pos).then(|| lt.mono.lcm(&lh.mono))
    };
    let coprime = |i: usize| ideal && basis[i].terms[0].0.mono.is_coprime(&lh.mono);

    // drop old pairs made redundant by h
    let stale: Vec<Pair> = pairs
        .iter()
        .filter(|q| {
            let (ti, tj) = (&basis[q.i].terms[0].0, &basis[q.j].terms[0].0);
            if ti.pos != lh.pos {
                return false;
            }
            let l = ti.mono.lcm(&tj.mono);
            lh.mono.divides(&l)
                && lcm_with(q.i).is_some_and(|m| m != l)
                && lcm_with(q.j).is_some_and(|m| m != l)
        })
        .cloned()
        .collect();
    for q in stale {
        pairs.remove(&q);
    }

    let cands: Vec<(usize, Monomial)> =
        (0..k).filter_map(|i| lcm_with(i).map(|l| (i, l))).collect();
    let mut kept: Vec<(usize, Monomial)> = Vec::new();
    for (idx, (i, l)) in cands.iter().enumerate() {
        if coprime(*i) {
            kept.push((*i, l.clone()));
            continue;
        }
        let later_divides = cands[idx + 1..].iter().any(|(_, m)| m.divides(l));
        let kept_divides = kept.iter().any(|(_, m)| m.divides(l));
        if !later_divides && !kept_divides {
            kept.push((*i, l.clone()));
        }
    }
    for (i, l) in kept {
        if coprime(i) {
            continue;
        }
        let deg_l = l.degree();
        let si = sugar[i] + deg_l - basis[i].terms[0].0.mono.degree();
        let sh = h_sugar + deg_l - lh.mono.degree();
        pairs.insert(Pair {
            sugar: si.max(sh),
            i,
            j: k,
        });
    }
}

fn interreduce<S: Scalar>(
    order: MonomialOrder,
    basis: Vec<ModuleVector<S>>,
) -> Vec<ModuleVector<S>> {
    let mut minimal: Vec<ModuleVector<S>> = Vec::new();
    for (i, g) in basis.iter().enumerate() {
        let lt = &g.terms[0].0;
        let redundant = basis.iter().enumerate().any(|(j, h)| {
            let lh = &h.terms[0].0;
            j != i && lh.pos == lt.pos && lh.mono.divides(&lt.mono) && (lh.mono != lt.mono || j < i)
        });
        if !redundant {
            minimal.push(g.clone());
        }
    }
    let mut out = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let (head, tail) = (minimal[i].terms[0].clone(), &minimal[i].terms[1..]);
        let others: Vec<ModuleVector<S>> = minimal
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, g)| g.clone())
            .collect();
        let mut terms = vec![head];
        terms.extend(
            Engine {
                order,
                basis: &others,
            }
            .normal_form(tail),
        );
        out.push(ModuleVector { terms });
    }
    out.sort_by(|a, b| cmp_terms(order, &b.terms[0].0, &a.terms[0].0));
    out
}

impl<S: Scalar> GroebnerBasis<S> {
    pub fn elements(&self) -> &[ModuleVector<S>] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn is_homogeneous(&self) -> bool {
        self.homogeneous
    }

    pub fn degree_bound(&self) -> u32 {
        self.degree_bound
    }

    /// Whether every S-pair was processed, so the basis is a full
    /// Gröbner basis rather than a truncated one.
    pub fn is_complete(&self) -> bool {
        self.complete
    }

    pub fn leading_terms(&self) -> Vec<ModuleTerm> {
        self.elements.iter().map(|g| g.terms[0].0.clone()).collect()
    }

    /// Whether the basis contains a nonzero constant of a rank-one module.
    pub fn is_unit_ideal(&self) -> bool {
        self.elements
            .iter()
            .any(|g| g.terms[0].0.mono.is_one() && self.shifts.len() == 1)
    }

    /// Normal form of a vector given by one polynomial per generator.
    pub fn reduce(&self, v: &[Polynomial<S>]) -> Vec<Polynomial<S>> {
        let mut terms: Vec<(ModuleTerm, S)> = v
            .iter()
            .enumerate()
            .flat_map(|(pos, p)| {
                p.terms().iter().map(move |(m, c)| {
                    (
                        ModuleTerm {
                            pos,
                            mono: m.clone(),
                        },
                        c.clone(),
                    )
                })
            })
            .collect();
        terms.sort_by(|a, b| cmp_terms(self.order, &b.0, &a.0));
        let nf = Engine {
            order: self.order,
            basis: &self.elements,
        }
        .normal_form(&terms);
        ModuleVector { terms: nf }.components(self.shifts.len(), self.nvars, self.order)
    }

    /// Deterministic text dump, one element per line.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for g in &self.elements {
            let comps = g.components(self.shifts.len(), self.nvars, self.order);
            let parts: Vec<String> = comps
                .iter()
                .enumerate()
                .filter(|(_, p)| !p.is_zero())
                .map(|(i, p)| format!("({})*e{}", p.display_with(&self.var_names), i + 1))
                .collect();
            let _ = writeln!(out, "{}", parts.join(" + "));
        }
        out
    }
}

/// Dimensions of the quotient module in degrees `0..=degree_bound`, by
/// counting standard monomials.
pub fn hilbert_module<S: Scalar>(gb: &GroebnerBasis<S>, degree_bound: u32) -> Vec<u128> {
    let leads = gb.leading_terms();
    (0..=degree_bound)
        .map(|d| {
            gb.shifts
                .iter()
                .enumerate()
                .filter(|(_, &s)| s <= d)
                .map(|(pos, &s)| {
                    let at_pos: Vec<&Monomial> = leads
                        .iter()
                        .filter(|t| t.pos == pos)
                        .map(|t| &t.mono)
                        .collect();
                    monomials_of_degree(gb.nvars, d - s)
                        .iter()
                        .filter(|m| !at_pos.iter().any(|l| l.divides(m)))
                        .count() as u128
                })
                .sum()
        })
        .collect()
}
