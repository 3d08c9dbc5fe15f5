//! Truncated Gröbner bases of homogeneous two-sided ideals in the free
//! associative algebra, built degree by degree from overlap compositions.

use std::collections::hash_map::Entry;
use std::collections::{BTreeMap, BinaryHeap, HashMap};

use rustc_hash::FxHashMap;
use std::fmt::Write as _;

use crate::algebra::{NcPolynomial, SparseEchelon, Word};
use crate::error::{Error, Result};
use crate::groebner::automaton::{nc_normal_count, Automaton};
use crate::groebner::budget::Budget;
use crate::scalar::{exact_string, is_zero, Scalar};

/// Quadratic algebra `k⟨x_1..x_n⟩ / (relations)`.
#[derive(Clone, Debug)]
pub struct NcQuadraticPresentation<S: Scalar> {
    n_generators: usize,
    relations: Vec<NcPolynomial<S>>,
}

impl<S: Scalar> NcQuadraticPresentation<S> {
    pub fn new(n_generators: usize, relations: Vec<NcPolynomial<S>>) -> Result<Self> {
        if n_generators > u8::MAX as usize {
            return Err(Error::Guard(format!(
                "{n_generators} generators exceed the word alphabet"
            )));
        }
        for r in &relations {
            if !r.is_zero() && r.homogeneous_degree() != Some(2) {
                return Err(Error::InvalidArgument(format!(
                    "relation {r:?} is not homogeneous quadratic"
                )));
            }
            if r.terms()
                .any(|(w, _)| w.letters().iter().any(|&l| l as usize >= n_generators))
            {
                return Err(Error::Dimension(format!(
                    "relation {r:?} uses an unknown generator"
                )));
            }
        }
        Ok(NcQuadraticPresentation {
            n_generators,
            relations,
        })
    }

    pub fn n_generators(&self) -> usize {
        self.n_generators
    }

    pub fn relations(&self) -> &[NcPolynomial<S>] {
        &self.relations
    }

    /// The same algebra with generator `i` renamed to `perm[i]`.
    pub fn relabeled(&self, perm: &[u8]) -> Result<Self> {
        let mut seen = vec![false; self.n_generators];
        if perm.len() != self.n_generators
            || !perm.iter().all(|&l| {
                (l as usize) < self.n_generators && !std::mem::replace(&mut seen[l as usize], true)
            })
        {
            return Err(Error::InvalidArgument(format!(
                "{perm:?} is not a permutation of the generators"
            )));
        }
        let relations = self
            .relations
            .iter()
            .map(|r| {
                NcPolynomial::from_terms(r.terms().map(|(w, c)| {
                    (
                        Word::from_slice(
                            &w.letters()
                                .iter()
                                .map(|&l| perm[l as usize])
                                .collect::<Vec<_>>(),
                        ),
                        c.clone(),
                    )
                }))
            })
            .collect();
        Ok(NcQuadraticPresentation {
            n_generators: self.n_generators,
            relations,
        })
    }
}

/// Picks a generator relabeling that keeps the basis small: the identity and
/// `trials` seeded random permutations are each run to `probe_degree`, and
/// the one with the fewest stored terms wins. The Hilbert function does not
/// depend on the choice; only the cost of larger computations does.
pub fn tuned_letter_order<S: Scalar>(
    p: &NcQuadraticPresentation<S>,
    probe_degree: usize,
    trials: usize,
    seed: u64,
) -> Vec<u8> {
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    let n = p.n_generators;
    let identity: Vec<u8> = (0..n as u8).collect();
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut candidates = vec![identity];
    for _ in 0..trials {
        let mut perm: Vec<u8> = (0..n as u8).collect();
        perm.shuffle(&mut rng);
        candidates.push(perm);
    }
    let cost = |perm: &[u8]| -> usize {
        let q = p.relabeled(perm).expect("permutation");
        let gb = nc_groebner_truncated(&q, probe_degree.min(MAX_KEY_LEN)).expect("bounded degree");
        gb.rules.iter().map(|r| 1 + r.rhs.len()).sum()
    };
    let mut best = (usize::MAX, 0);
    for (i, c) in candidates.iter().enumerate() {
        let k = cost(c);
        if k < best.0 {
            best = (k, i);
        }
    }
    candidates.swap_remove(best.1)
}

/// Words of length ≤ 16 packed big-endian into a `u128`, one byte per
/// letter holding `255 − letter`; among words of one length the integer
/// order is the deglex order.
type Key = u128;

const MAX_KEY_LEN: usize = 16;

fn encode(letters: &[u8]) -> Key {
    letters
        .iter()
        .enumerate()
        .fold(0, |k, (p, &l)| k | (((255 - l) as Key) << (8 * (15 - p))))
}

fn decode(k: Key, len: usize) -> Word {
    Word::from_slice(&(0..len).map(|p| letter_at(k, p)).collect::<Vec<_>>())
}

#[inline]
fn letter_at(k: Key, p: usize) -> u8 {
    255 - (k >> (8 * (15 - p))) as u8
}

/// Mask of byte positions `start..start + len`.
#[inline]
fn span_mask(start: usize, len: usize) -> Key {
    let ones = if len == MAX_KEY_LEN {
        Key::MAX
    } else {
        (1 << (8 * len)) - 1
    };
    ones << (8 * (MAX_KEY_LEN - start - len))
}

/// A rewriting rule `lead → Σ c·w` read off a monic basis element.
#[derive(Clone, Debug)]
struct Rule<S: Scalar> {
    lead: Key,
    len: usize,
    rhs: Vec<(Key, S)>,
}

/// Reduced Gröbner basis truncated at a degree bound.
#[derive(Clone, Debug)]
pub struct NcGroebnerBasis<S: Scalar> {
    n_generators: usize,
    degree_bound: usize,
    rules: Vec<Rule<S>>,
}

struct Reducer<'a, S: Scalar> {
    rules: &'a [Rule<S>],
    automaton: Automaton,
}

impl<'a, S: Scalar> Reducer<'a, S> {
    fn new(rules: &'a [Rule<S>], n: usize) -> Self {
        let leads: Vec<Word> = rules.iter().map(|r| decode(r.lead, r.len)).collect();
        Reducer {
            rules,
            automaton: Automaton::new(&leads, n.max(1)),
        }
    }

    fn find(&self, k: Key, len: usize) -> Option<(usize, usize)> {
        let mut s = 0;
        for p in 0..len {
            s = self.automaton.step(s, letter_at(k, p));
            if let Some((ri, l)) = self.automaton.output_at(s) {
                return Some((ri, p + 1 - l));
            }
        }
        None
    }

    /// Normal form of a combination of words all of length `len`, largest
    /// word first.
    fn reduce(&self, mut acc: Accumulator<S>, len: usize) -> Vec<(Key, S)> {
        let mut out = Vec::new();
        while let Some((w, c)) = acc.pop_max() {
            match self.find(w, len) {
                None => out.push((w, c)),
                Some((ri, start)) => {
                    let rule = &self.rules[ri];
                    let keep = w & !span_mask(start, rule.len);
                    let shift = 8 * start;
                    for (t, x) in &rule.rhs {
                        acc.add(keep | (t >> shift), x.clone() * &c);
                    }
                }
            }
        }
        out
    }

    fn normal_form(&self, p: &NcPolynomial<S>) -> NcPolynomial<S> {
        let mut by_len: BTreeMap<usize, Accumulator<S>> = BTreeMap::new();
        for (w, c) in p.terms() {
            by_len
                .entry(w.len())
                .or_insert_with(Accumulator::new)
                .add(encode(w.letters()), c.clone());
        }
        let mut nf = NcPolynomial::zero();
        for (len, acc) in by_len {
            for (k, c) in self.reduce(acc, len) {
                nf.add_term(decode(k, len), c);
            }
        }
        nf
    }
}

/// Sparse combination of words with access to its largest word.
struct Accumulator<S> {
    terms: FxHashMap<Key, S>,
    order: BinaryHeap<Key>,
}

impl<S: Scalar> Accumulator<S> {
    fn new() -> Self {
        Accumulator {
            terms: FxHashMap::default(),
            order: BinaryHeap::new(),
        }
    }

    fn add(&mut self, w: Key, c: S) {
        if is_zero(&c) {
            return;
        }
        match self.terms.entry(w) {
            Entry::Vacant(v) => {
                v.insert(c);
                self.order.push(w);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if is_zero(o.get()) {
                    o.remove();
                }
            }
        }
    }

    fn pop_max(&mut self) -> Option<(Key, S)> {
        while let Some(w) = self.order.pop() {
            if let Some(c) = self.terms.remove(&w) {
                return Some((w, c));
            }
        }
        None
    }
}

/// Position of each normal word of one length in the descending list of
/// all normal words of that length, found by path counting in the
/// automaton of leading words.
struct Ranker {
    alphabet: usize,
    states: usize,
    len: usize,
    /// `below[(rem·states + s)·(alphabet+1) + l]`: normal continuations of
    /// length `rem + 1` from state `s` whose first letter is `< l`.
    below: Vec<u64>,
    total: u64,
}

impl Ranker {
    fn new(a: &Automaton, alphabet: usize, len: usize) -> Self {
        let states = a.states();
        let live = |t: usize| a.output_at(t).is_none();
        let mut count = vec![1u64; states];
        let mut below = vec![0u64; len * states * (alphabet + 1)];
        for rem in 0..len {
            let mut next = vec![0u64; states];
            for s in 0..states {
                let base = (rem * states + s) * (alphabet + 1);
                let mut acc = 0;
                for l in 0..alphabet {
                    below[base + l] = acc;
                    let t = a.step(s, l as u8);
                    if live(t) {
                        acc += count[t];
                    }
                }
                below[base + alphabet] = acc;
                next[s] = acc;
            }
            count = next;
        }
        Ranker {
            alphabet,
            states,
            len,
            below,
            total: count[0],
        }
    }

    /// Number of normal words larger than `k`.
    fn rank(&self, a: &Automaton, k: Key) -> usize {
        let mut s = 0;
        let mut r = 0;
        for p in 0..self.len {
            let l = letter_at(k, p);
            let rem = self.len - p - 1;
            r += self.below[(rem * self.states + s) * (self.alphabet + 1) + l as usize];
            s = a.step(s, l);
        }
        r as usize
    }
}

/// Budget, in stored terms, for candidates held back to be inserted
/// shortest first.
const BATCH_TERMS: usize = 1 << 21;

/// Polynomials handled between two resource checks.
const CHECK_EVERY: usize = 1 << 10;

/// Gaussian elimination of homogeneous polynomials of length `len` in
/// normal words, each given largest word first; returns monic, mutually
/// reduced rules sorted by leading word.
fn eliminate<S: Scalar>(
    reducer: &Reducer<S>,
    alphabet: usize,
    len: usize,
    polys: impl Iterator<Item = Vec<(Key, S)>>,
    budget: &Budget,
) -> Result<Vec<Rule<S>>> {
    let ranker = Ranker::new(&reducer.automaton, alphabet, len);
    let mut ech = SparseEchelon::new(ranker.total as usize);
    let mut word_of: FxHashMap<usize, Key> = FxHashMap::default();
    let mut batch: Vec<Vec<(usize, S)>> = Vec::new();
    let mut held = 0;
    let flush = |batch: &mut Vec<Vec<(usize, S)>>, ech: &mut SparseEchelon<S>| -> Result<()> {
        batch.sort_by_key(|v| v.len());
        for (i, v) in batch.drain(..).enumerate() {
            if i % CHECK_EVERY == 0 {
                budget.check()?;
            }
            ech.insert(&v);
        }
        Ok(())
    };
    for (i, p) in polys.enumerate() {
        if i % CHECK_EVERY == 0 {
            budget.check()?;
        }
        if p.is_empty() {
            continue;
        }
        let v: Vec<(usize, S)> = p
            .into_iter()
            .map(|(w, c)| {
                let col = ranker.rank(&reducer.automaton, w);
                word_of.insert(col, w);
                (col, c)
            })
            .collect();
        held += v.len();
        batch.push(v);
        if held > BATCH_TERMS {
            flush(&mut batch, &mut ech)?;
            held = 0;
        }
    }
    flush(&mut batch, &mut ech)?;
    budget.check()?;
    ech.back_substitute();
    let mut rules: Vec<Rule<S>> = ech
        .rows()
        .map(|(pivot, row)| Rule {
            lead: word_of[&pivot],
            len,
            rhs: row[1..]
                .iter()
                .map(|(i, c)| (word_of[i], -c.clone()))
                .collect(),
        })
        .collect();
    rules.sort_by_key(|r| std::cmp::Reverse(r.lead));
    Ok(rules)
}

/// Overlaps `(g, h, l)` of leading words, where the last `l` letters of
/// `g` are the first `l` of `h` and the overlap word has length `d` and
/// satisfies `keep`. Cheap compositions come first, which keeps the
/// echelon form sparse.
fn overlaps_in_degree<S: Scalar>(
    rules: &[Rule<S>],
    d: usize,
    keep: impl Fn(Key) -> bool,
) -> Vec<(usize, usize, usize)> {
    let prefix_of = |r: &Rule<S>, l: usize| (r.lead & span_mask(0, l), l);
    let mut by_prefix: HashMap<(Key, usize), Vec<usize>> = HashMap::new();
    for (i, r) in rules.iter().enumerate() {
        for l in 1..r.len {
            by_prefix.entry(prefix_of(r, l)).or_default().push(i);
        }
    }
    let mut overlaps: Vec<(usize, usize, usize)> = Vec::new();
    for (gi, g) in rules.iter().enumerate() {
        for l in 1..g.len {
            let Some(hs) = by_prefix.get(&((g.lead << (8 * (g.len - l))), l)) else {
                continue;
            };
            overlaps.extend(
                hs.iter()
                    .filter(|&&hi| {
                        let h = &rules[hi];
                        g.len + h.len - l == d && keep(g.lead | (h.lead >> (8 * (g.len - l))))
                    })
                    .map(|&hi| (gi, hi, l)),
            );
        }
    }
    overlaps.sort_by_key(|&(gi, hi, _)| rules[gi].rhs.len() + rules[hi].rhs.len());
    overlaps
}

/// `g·v[l..] − u[..|u|−l]·h` for an overlap, with both leading words
/// cancelled.
fn composition<S: Scalar>(rules: &[Rule<S>], (gi, hi, l): (usize, usize, usize)) -> Accumulator<S> {
    let (g, h) = (&rules[gi], &rules[hi]);
    let left = g.len - l;
    let right = (h.lead << (8 * l)) >> (8 * g.len);
    let prefix = g.lead & span_mask(0, left);
    let mut acc = Accumulator::new();
    for (t, c) in &g.rhs {
        acc.add(t | right, c.clone());
    }
    for (t, c) in &h.rhs {
        acc.add(prefix | (t >> (8 * left)), -c.clone());
    }
    acc
}

fn in_degree(e: Error, d: usize) -> Error {
    match e {
        Error::Guard(why) => Error::Guard(format!("{why} in degree {d}")),
        e => e,
    }
}

/// All obstruction words of degree ≤ `degree_bound` of the reduced
/// Gröbner basis of the ideal generated by `p`'s relations.
pub fn nc_groebner_truncated<S: Scalar>(
    p: &NcQuadraticPresentation<S>,
    degree_bound: usize,
) -> Result<NcGroebnerBasis<S>> {
    nc_groebner_within(p, degree_bound, &Budget::unlimited())
}

/// [`nc_groebner_truncated`] that gives up with [`Error::Guard`] once
/// `budget` runs out.
pub fn nc_groebner_within<S: Scalar>(
    p: &NcQuadraticPresentation<S>,
    degree_bound: usize,
    budget: &Budget,
) -> Result<NcGroebnerBasis<S>> {
    if degree_bound > MAX_KEY_LEN {
        return Err(Error::Guard(format!(
            "degree bound {degree_bound} exceeds {MAX_KEY_LEN}"
        )));
    }
    let n = p.n_generators;
    let alphabet = n.max(1);
    let mut rules: Vec<Rule<S>> = Vec::new();
    if degree_bound >= 2 {
        let polys = p.relations.iter().filter(|r| !r.is_zero()).map(|r| {
            r.terms()
                .rev()
                .map(|(w, c)| (encode(w.letters()), c.clone()))
                .collect()
        });
        rules = eliminate(&Reducer::new(&[], n), alphabet, 2, polys, budget)?;
    }
    for d in 3..=degree_bound {
        let overlaps = overlaps_in_degree(&rules, d, |_| true);
        if overlaps.is_empty() {
            continue;
        }
        let reducer = Reducer::new(&rules, n);
        let candidates = overlaps
            .iter()
            .map(|&o| reducer.reduce(composition(&rules, o), d));
        let new =
            eliminate(&reducer, alphabet, d, candidates, budget).map_err(|e| in_degree(e, d))?;
        drop(reducer);
        rules.extend(new);
    }
    Ok(NcGroebnerBasis {
        n_generators: n,
        degree_bound,
        rules,
    })
}

/// A grading of the generators by `Z^parts`, letter `i` having degree
/// `e_{class[i]}`, with letter permutations that preserve the relations
/// and permute the coordinates. Homogeneous components whose multidegrees
/// lie in one orbit then have equal dimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetricGrading {
    pub parts: usize,
    pub class: Vec<usize>,
    /// Generators of the symmetry group.
    pub symmetries: Vec<Vec<u8>>,
}

impl SymmetricGrading {
    /// The same grading after generator `i` is renamed to `perm[i]`.
    pub fn relabeled(&self, perm: &[u8]) -> Self {
        let mut class = vec![0; self.class.len()];
        for (i, &c) in self.class.iter().enumerate() {
            class[perm[i] as usize] = c;
        }
        let symmetries = self
            .symmetries
            .iter()
            .map(|s| {
                let mut t = vec![0; s.len()];
                for (i, &si) in s.iter().enumerate() {
                    t[perm[i] as usize] = perm[si as usize];
                }
                t
            })
            .collect();
        SymmetricGrading {
            parts: self.parts,
            class,
            symmetries,
        }
    }

    fn multidegree(&self, k: Key, len: usize) -> u64 {
        (0..len).fold(0, |m, p| {
            m + (1 << (8 * self.class[letter_at(k, p) as usize]))
        })
    }

    /// Coordinate permutation induced by each symmetry.
    fn coordinate_maps(&self, n: usize) -> Result<Vec<Vec<usize>>> {
        let bad = |why: &str| Err(Error::InvalidArgument(format!("grading: {why}")));
        if self.parts == 0 || self.parts > 8 {
            return bad("between 1 and 8 coordinates are supported");
        }
        if self.class.len() != n || self.class.iter().any(|&c| c >= self.parts) {
            return bad("every generator needs a coordinate");
        }
        let mut maps = Vec::new();
        for s in &self.symmetries {
            let mut seen = vec![false; n];
            if s.len() != n
                || !s
                    .iter()
                    .all(|&l| (l as usize) < n && !std::mem::replace(&mut seen[l as usize], true))
            {
                return bad("a symmetry is not a permutation of the generators");
            }
            let mut map = vec![usize::MAX; self.parts];
            for (i, &si) in s.iter().enumerate() {
                let (from, to) = (self.class[i], self.class[si as usize]);
                if map[from] != usize::MAX && map[from] != to {
                    return bad("a symmetry does not respect the grading");
                }
                map[from] = to;
            }
            let mut hit = vec![false; self.parts];
            for (c, m) in map.iter_mut().enumerate() {
                if *m == usize::MAX {
                    *m = c;
                }
            }
            if !map.iter().all(|&t| !std::mem::replace(&mut hit[t], true)) {
                return bad("a symmetry collapses coordinates");
            }
            maps.push(map);
        }
        Ok(maps)
    }
}

/// Multidegrees of total `d` up to symmetry: the largest packed value of
/// each orbit, with the orbit size.
fn multidegree_orbits(parts: usize, d: usize, maps: &[Vec<usize>]) -> Vec<(u64, u128)> {
    fn all(parts: usize, d: usize) -> Vec<u64> {
        if parts == 1 {
            return vec![d as u64];
        }
        (0..=d)
            .flat_map(|a| {
                all(parts - 1, d - a)
                    .into_iter()
                    .map(move |m| (m << 8) | a as u64)
            })
            .collect()
    }
    let apply = |m: u64, map: &[usize]| {
        (0..parts).fold(0, |acc, c| acc | (((m >> (8 * c)) & 0xff) << (8 * map[c])))
    };
    let mut done = std::collections::HashSet::new();
    let mut orbits = Vec::new();
    for m in all(parts, d) {
        if done.contains(&m) {
            continue;
        }
        let mut orbit = vec![m];
        done.insert(m);
        let mut i = 0;
        while i < orbit.len() {
            for map in maps {
                let t = apply(orbit[i], map);
                if done.insert(t) {
                    orbit.push(t);
                }
            }
            i += 1;
        }
        orbits.push((*orbit.iter().max().unwrap(), orbit.len() as u128));
    }
    orbits
}

/// Words of multidegree `m` avoiding every leading word.
fn normal_words_of_multidegree(a: &Automaton, class: &[usize], m: u64) -> u128 {
    fn go(
        a: &Automaton,
        class: &[usize],
        s: usize,
        rem: u64,
        memo: &mut FxHashMap<(usize, u64), u128>,
    ) -> u128 {
        if rem == 0 {
            return 1;
        }
        if let Some(&v) = memo.get(&(s, rem)) {
            return v;
        }
        let mut total = 0;
        for (l, &c) in class.iter().enumerate() {
            if (rem >> (8 * c)) & 0xff == 0 {
                continue;
            }
            let t = a.step(s, l as u8);
            if a.output_at(t).is_none() {
                total += go(a, class, t, rem - (1 << (8 * c)), memo);
            }
        }
        memo.insert((s, rem), total);
        total
    }
    go(a, class, 0, m, &mut FxHashMap::default())
}

/// Hilbert function through `degree`, as [`NcGroebnerBasis::hilbert`]
/// gives it, eliminating in the top degree only one homogeneous component
/// per orbit of multidegrees. Checks that the relations are homogeneous
/// and preserved by the symmetries.
pub fn nc_hilbert_symmetric_within<S: Scalar>(
    p: &NcQuadraticPresentation<S>,
    degree: usize,
    grading: &SymmetricGrading,
    budget: &Budget,
) -> Result<Vec<u128>> {
    let n = p.n_generators;
    let maps = grading.coordinate_maps(n)?;
    if degree < 3 {
        return Ok(nc_groebner_within(p, degree, budget)?.hilbert());
    }
    let gb = nc_groebner_within(p, degree - 1, budget)?;
    let rules = &gb.rules;
    let reducer = Reducer::new(rules, n);
    for r in rules.iter().filter(|r| r.len == 2) {
        let m = grading.multidegree(r.lead, 2);
        if r.rhs.iter().any(|(t, _)| grading.multidegree(*t, 2) != m) {
            return Err(Error::InvalidArgument(
                "grading: the relations are not homogeneous".into(),
            ));
        }
        for sym in &grading.symmetries {
            let moved =
                |k: Key| encode(&[sym[letter_at(k, 0) as usize], sym[letter_at(k, 1) as usize]]);
            let mut acc = Accumulator::new();
            acc.add(moved(r.lead), S::one());
            for (t, c) in &r.rhs {
                acc.add(moved(*t), -c.clone());
            }
            if !reducer.reduce(acc, 2).is_empty() {
                return Err(Error::InvalidArgument(
                    "grading: a symmetry does not preserve the relations".into(),
                ));
            }
        }
    }
    let orbits = multidegree_orbits(grading.parts, degree, &maps);
    let reps: std::collections::HashSet<u64> = orbits.iter().map(|o| o.0).collect();
    let overlaps = overlaps_in_degree(rules, degree, |w| {
        reps.contains(&grading.multidegree(w, degree))
    });
    let candidates = overlaps
        .iter()
        .map(|&o| reducer.reduce(composition(rules, o), degree));
    let new = eliminate(&reducer, n.max(1), degree, candidates, budget)
        .map_err(|e| in_degree(e, degree))?;
    let mut rank: FxHashMap<u64, u128> = FxHashMap::default();
    for r in &new {
        *rank.entry(grading.multidegree(r.lead, degree)).or_default() += 1;
    }
    let mut top = 0;
    for (m, size) in orbits {
        budget.check()?;
        let normal = normal_words_of_multidegree(&reducer.automaton, &grading.class, m);
        top += size * (normal - rank.get(&m).copied().unwrap_or(0));
    }
    let mut h = gb.hilbert();
    h.push(top);
    Ok(h)
}

impl<S: Scalar> NcGroebnerBasis<S> {
    pub fn n_generators(&self) -> usize {
        self.n_generators
    }

    pub fn degree_bound(&self) -> usize {
        self.degree_bound
    }

    /// Leading words, by degree and then descending within a degree.
    pub fn leading_words(&self) -> Vec<Word> {
        self.rules.iter().map(|r| decode(r.lead, r.len)).collect()
    }

    pub fn len(&self) -> usize {
        self.rules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rules.is_empty()
    }

    /// Number of basis elements in each degree `0..=degree_bound`.
    pub fn degree_profile(&self) -> Vec<usize> {
        let mut prof = vec![0; self.degree_bound + 1];
        for r in &self.rules {
            prof[r.len] += 1;
        }
        prof
    }

    /// The basis elements as monic polynomials.
    pub fn elements(&self) -> Vec<NcPolynomial<S>> {
        self.rules
            .iter()
            .map(|r| {
                let mut p = NcPolynomial::word(decode(r.lead, r.len), S::one());
                for (w, c) in &r.rhs {
                    p.add_term(decode(*w, r.len), -c.clone());
                }
                p
            })
            .collect()
    }

    /// Normal form of a polynomial all of whose words have length ≤ the bound.
    pub fn normal_form(&self, p: &NcPolynomial<S>) -> NcPolynomial<S> {
        Reducer::new(&self.rules, self.n_generators).normal_form(p)
    }

    /// Normal form of a single word.
    pub fn normal_form_of_word(&self, w: &Word) -> NcPolynomial<S> {
        self.normal_form(&NcPolynomial::word(w.clone(), S::one()))
    }

    /// Hilbert function of the quotient up to the degree bound.
    pub fn hilbert(&self) -> Vec<u128> {
        nc_normal_count(&self.leading_words(), self.n_generators, self.degree_bound)
    }

    /// Deterministic text dump, one element per line in leading-word order.
    pub fn dump(&self, labels: &[String]) -> String {
        let mut out = String::new();
        for p in self.elements() {
            let _ = writeln!(out, "{}", p.display_with(labels));
        }
        out
    }
}

/// Renders words as `x1*x2` lines; used in golden dumps.
pub fn dump_words(words: &[Word]) -> String {
    words.iter().map(|w| format!("{w:?}\n")).collect()
}

#[doc(hidden)]
pub fn coefficient_strings<S: Scalar>(p: &NcPolynomial<S>) -> Vec<String> {
    p.terms().map(|(_, c)| exact_string(c)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Q;

    fn pres(n: usize, rels: Vec<NcPolynomial<Q>>) -> NcQuadraticPresentation<Q> {
        NcQuadraticPresentation::new(n, rels).unwrap()
    }

    #[test]
    fn free_algebra_has_empty_basis() {
        let gb = nc_groebner_truncated(&pres(2, vec![]), 4).unwrap();
        assert!(gb.is_empty());
        assert_eq!(gb.hilbert(), vec![1, 2, 4, 8, 16]);
    }

    #[test]
    fn commutative_plane() {
        let gb = nc_groebner_truncated(&pres(2, vec![NcPolynomial::commutator(0, 1)]), 5).unwrap();
        assert_eq!(gb.leading_words(), vec![Word::from_slice(&[0, 1])]);
        assert_eq!(gb.hilbert(), vec![1, 2, 3, 4, 5, 6]);
    }

    #[test]
    fn polynomial_ring_in_three_variables() {
        let rels = vec![
            NcPolynomial::commutator(0, 1),
            NcPolynomial::commutator(0, 2),
            NcPolynomial::commutator(1, 2),
        ];
        let gb = nc_groebner_truncated(&pres(3, rels), 5).unwrap();
        assert_eq!(gb.hilbert(), vec![1, 3, 6, 10, 15, 21]);
        assert_eq!(gb.degree_profile(), vec![0, 0, 3, 0, 0, 0]);
    }

    #[test]
    fn non_quadratic_completion() {
        // x² − yx forces a cubic element
        let mut r = NcPolynomial::<Q>::word(Word::from_slice(&[0, 0]), Q::from_integer(1));
        r.add_term(Word::from_slice(&[1, 0]), Q::from_integer(-1));
        let gb = nc_groebner_truncated(&pres(2, vec![r]), 4).unwrap();
        for e in gb.elements() {
            assert!(gb.normal_form(&e).is_zero());
        }
        // brute force: quotient dimensions via linear algebra on all words
        let h = gb.hilbert();
        assert_eq!(h[..3], [1, 2, 3]);
    }

    #[test]
    fn rejects_non_quadratic_input() {
        let r = NcPolynomial::<Q>::word(Word::from_slice(&[0]), Q::from_integer(1));
        assert!(NcQuadraticPresentation::new(1, vec![r]).is_err());
    }

    #[test]
    fn expired_budget_stops_elimination() {
        let mut r = NcPolynomial::<Q>::word(Word::from_slice(&[0, 1]), Q::from_integer(1));
        r.add_term(Word::from_slice(&[1, 0]), Q::from_integer(-1));
        let past = Budget {
            deadline: Some(std::time::Instant::now() - std::time::Duration::from_secs(1)),
            max_rss_bytes: None,
        };
        let err = nc_groebner_within(&pres(2, vec![r]), 4, &past).unwrap_err();
        assert!(matches!(err, Error::Guard(_)));
    }

    fn graded_by_letter(symmetries: Vec<Vec<u8>>) -> SymmetricGrading {
        SymmetricGrading {
            parts: 3,
            class: vec![0, 1, 2],
            symmetries,
        }
    }

    #[test]
    fn symmetric_top_degree_matches_full_basis() {
        // x·y = y·x for every pair, plus x² = y² + z² made symmetric
        let mut rels: Vec<_> = [(0, 1), (0, 2), (1, 2)]
            .map(|(a, b)| NcPolynomial::<Q>::commutator(a, b))
            .into();
        rels.push(NcPolynomial::from_terms([
            (Word::from_slice(&[0, 1]), Q::of(1)),
            (Word::from_slice(&[1, 2]), Q::of(1)),
        ]));
        let p = pres(3, rels.clone());
        let g = graded_by_letter(vec![]);
        assert!(matches!(
            nc_hilbert_symmetric_within(&p, 4, &g, &Budget::unlimited()),
            Err(Error::InvalidArgument(_))
        ));
        let p = pres(3, rels[..3].to_vec());
        let g = graded_by_letter(vec![vec![1, 0, 2], vec![1, 2, 0]]);
        for d in 0..=6 {
            assert_eq!(
                nc_hilbert_symmetric_within(&p, d, &g, &Budget::unlimited()).unwrap(),
                nc_groebner_truncated(&p, d).unwrap().hilbert()
            );
        }
    }

    #[test]
    fn symmetries_must_preserve_relations() {
        // commuting x, y and a free z: swapping y and z is not a symmetry
        let p = pres(3, vec![NcPolynomial::commutator(0, 1)]);
        let g = graded_by_letter(vec![vec![0, 2, 1]]);
        assert!(nc_hilbert_symmetric_within(&p, 4, &g, &Budget::unlimited()).is_err());
        let g = graded_by_letter(vec![vec![1, 0, 2]]);
        assert_eq!(
            nc_hilbert_symmetric_within(&p, 5, &g, &Budget::unlimited()).unwrap(),
            nc_groebner_truncated(&p, 5).unwrap().hilbert()
        );
        let g = SymmetricGrading {
            parts: 2,
            class: vec![0, 0, 1],
            symmetries: vec![vec![2, 1, 0]],
        };
        assert!(nc_hilbert_symmetric_within(&p, 4, &g, &Budget::unlimited()).is_err());
    }
}
