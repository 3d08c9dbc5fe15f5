//! Chen ranks `θ_k = dim gr_k(G/G″)` by two routes: the linearized
//! Alexander invariant of the holonomy Lie algebra, and the Alexander
//! invariant of a commutator-relators presentation via Fox calculus over
//! a truncated power series ring.

use std::collections::HashMap;

use serde::Serialize;

use crate::algebra::{
    monomials_of_degree, ExtElement, Matrix, Monomial, MonomialOrder, Polynomial, SparseEchelon,
};
use crate::catalog::{
    closed_chen, cohomology_presentation, group_presentation, ClosedChen, Family, GroupId,
    GroupPresentation,
};
use crate::error::{Error, Result};
use crate::groebner::{buchberger_module, hilbert_module, ExteriorQuotient, ModulePresentation};
use crate::resonance::{component_basis, sample_membership, vp4_plus_cubics};
use crate::scalar::Scalar;
use crate::{PolynomialQ, Q};
use num_traits::{One, Zero};

const ORDER: MonomialOrder = MonomialOrder::DegRevLex;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ChenMethod {
    Infinitesimal,
    FoxMassey,
    ClosedForm,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChenRanks {
    pub group: GroupId,
    pub method: ChenMethod,
    pub kmax: usize,
    /// `θ_1..=θ_kmax`.
    pub theta: Vec<i128>,
    /// False when the method is not known to compute the group's Chen ranks.
    pub authoritative: bool,
}

/// Index of `e_i ∧ e_j`, `i < j`, among the pairs in lexicographic order.
fn pair_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * (2 * n - i - 1) / 2 + (j - i - 1)
}

fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |i| (i + 1..n).map(move |j| (i, j)))
}

fn triples(n: usize) -> impl Iterator<Item = (usize, usize, usize)> {
    (0..n).flat_map(move |i| (i + 1..n).flat_map(move |j| (j + 1..n).map(move |k| (i, j, k))))
}

/// Degree-one and degree-two data of the holonomy Lie algebra.
#[derive(Clone, Debug, PartialEq)]
pub struct HolonomyData {
    pub group: GroupId,
    pub b1: usize,
    /// Basis of `K = ker(Λ²V → A²)` in the pair basis of `Λ²V`.
    pub kernel: Vec<Vec<Q>>,
    /// Basis of the holonomy relations `K^⊥ ⊆ Λ²V`, the image of the dual
    /// of the cup product; its dimension is `dim A²`.
    pub relations: Vec<Vec<Q>>,
}

impl HolonomyData {
    pub fn kernel_dim(&self) -> usize {
        self.kernel.len()
    }
}

/// The cup product `Λ²A¹ → A²` as a matrix with one column per pair.
fn cup_product_matrix(g: &GroupId) -> Result<Matrix<Q>> {
    let p = cohomology_presentation(g)?;
    let n = p.n_generators();
    let q = ExteriorQuotient::new(n, &p.exterior_relations::<Q>()?, 2)?;
    let a2 = q.hilbert()[2] as usize;
    let mut m = Matrix::zeros(a2, n * n.saturating_sub(1) / 2);
    for (i, j) in pairs(n) {
        let c = q.coordinates(&ExtElement::from_indices(n, &[i, j], Q::one()), 2)?;
        for (r, v) in c.into_iter().enumerate() {
            m[(r, pair_index(n, i, j))] = v;
        }
    }
    Ok(m)
}

/// `K` and the holonomy relations from the cohomology ring in degrees ≤ 2.
///
/// For free groups `A² = 0`, so `K = Λ²V` and the holonomy Lie algebra is
/// free: it has no relations.
pub fn holonomy_from_cohomology(g: &GroupId) -> Result<HolonomyData> {
    let m = cup_product_matrix(g)?;
    let b1 = g.b1();
    let red = m.row_reduce();
    let relations = (0..red.pivots.len())
        .map(|r| red.reduced.row(r).to_vec())
        .collect();
    Ok(HolonomyData {
        group: *g,
        b1,
        kernel: m.nullspace(),
        relations,
    })
}

/// The linearized Alexander invariant `(Λ²V ⊗ S) / (δ₃(Λ³V ⊗ S) + R ⊗ S)`
/// over `S = Sym(V)`, with the holonomy relations `R` eliminated first.
#[derive(Clone, Debug)]
pub struct ChenModule {
    pub presentation: ModulePresentation<Q>,
    /// Pairs `(i, j)` surviving as module generators.
    pub generators: Vec<(usize, usize)>,
}

pub fn chen_module(h: &HolonomyData) -> Result<ChenModule> {
    let n = h.b1;
    let npairs = n * n.saturating_sub(1) / 2;
    // express each pivot pair through the free ones modulo R
    let rel = if h.relations.is_empty() {
        None
    } else {
        Some(Matrix::from_rows(h.relations.clone())?.row_reduce())
    };
    let pivots: Vec<usize> = rel.as_ref().map_or(Vec::new(), |r| r.pivots.clone());
    let free: Vec<usize> = (0..npairs).filter(|c| !pivots.contains(c)).collect();
    let slot: HashMap<usize, usize> = free.iter().enumerate().map(|(s, &c)| (c, s)).collect();
    // image of a pair in the free coordinates
    let image = |c: usize| -> Vec<(usize, Q)> {
        if let Some(&s) = slot.get(&c) {
            return vec![(s, Q::one())];
        }
        let r = rel.as_ref().expect("pivot implies relations");
        let row = pivots.iter().position(|&p| p == c).expect("pivot");
        free.iter()
            .enumerate()
            .filter(|(_, &f)| !r.reduced[(row, f)].is_zero())
            .map(|(s, &f)| (s, -r.reduced[(row, f)].clone()))
            .collect()
    };
    let x = |i: usize| Polynomial::var(n, ORDER, i);
    let mut relations = Vec::new();
    for (i, j, k) in triples(n) {
        let mut v = vec![Polynomial::zero(n, ORDER); free.len()];
        for (var, pair, sign) in [(i, (j, k), 1), (j, (i, k), -1), (k, (i, j), 1)] {
            for (s, c) in image(pair_index(n, pair.0, pair.1)) {
                v[s] = v[s].add(&x(var).scale(&(c * Q::of(sign))));
            }
        }
        if v.iter().any(|p| !p.is_zero()) {
            relations.push(v);
        }
    }
    let presentation = ModulePresentation::new(n, ORDER, vec![0; free.len()], relations)?;
    let all: Vec<(usize, usize)> = pairs(n).collect();
    Ok(ChenModule {
        presentation,
        generators: free.iter().map(|&c| all[c]).collect(),
    })
}

/// `θ_1..θ_kmax` from the holonomy data, without checking 1-formality.
pub fn holonomy_chen_ranks(h: &HolonomyData, kmax: usize) -> Result<Vec<i128>> {
    if kmax == 0 {
        return Ok(Vec::new());
    }
    let mut theta = vec![h.b1 as i128];
    if kmax >= 2 {
        let m = chen_module(h)?;
        let bound = (kmax - 2) as u32;
        let gb = buchberger_module(&m.presentation, bound + 1);
        theta.extend(hilbert_module(&gb, bound).into_iter().map(|d| d as i128));
    }
    Ok(theta)
}

pub fn chen_ranks_infinitesimal(g: &GroupId, kmax: usize) -> Result<ChenRanks> {
    if !g.is_one_formal() {
        return Err(Error::Refused(format!(
            "{} is not 1-formal; the holonomy route does not determine its Chen ranks, use the fox method",
            g.name()
        )));
    }
    infinitesimal_unchecked(g, kmax)
}

fn infinitesimal_unchecked(g: &GroupId, kmax: usize) -> Result<ChenRanks> {
    let theta = holonomy_chen_ranks(&holonomy_from_cohomology(g)?, kmax)?;
    Ok(ChenRanks {
        group: *g,
        method: ChenMethod::Infinitesimal,
        kmax,
        theta,
        authoritative: g.is_one_formal(),
    })
}

/// Drops every term of degree above `degree`.
fn truncate(p: &PolynomialQ, degree: u32) -> PolynomialQ {
    Polynomial::from_terms(
        p.nvars(),
        p.order(),
        p.terms()
            .iter()
            .filter(|(m, _)| m.degree() <= degree)
            .cloned(),
    )
}

/// `t^a = ∏ (1 + s_i)^{a_i}` modulo terms of degree above `degree`.
fn group_element(a: &[i64], degree: u32) -> PolynomialQ {
    let n = a.len();
    let mut acc = Polynomial::constant(n, ORDER, Q::one());
    for (i, &e) in a.iter().enumerate() {
        if e == 0 {
            continue;
        }
        // generalized binomial series of (1 + s_i)^e
        let mut c = Q::one();
        let mut terms = Vec::new();
        for k in 0..=degree {
            if c.is_zero() {
                break;
            }
            let mut exps = vec![0u16; n];
            exps[i] = k as u16;
            terms.push((Monomial::from_exponents(&exps), c.clone()));
            c = c * Q::of(e - k as i64) / Q::of(k as i64 + 1);
        }
        acc = truncate(&acc.mul(&Polynomial::from_terms(n, ORDER, terms)), degree);
    }
    acc
}

/// `∂w/∂x_i` mapped to `Q[s_1..s_n]` by `x_j ↦ 1 + s_j`, truncated at
/// `degree`. Letters are signed 1-based generator indices.
pub fn fox_derivative(w: &[i32], i: usize, nvars: usize, degree: u32) -> PolynomialQ {
    let mut prefix = vec![0i64; nvars];
    let mut out = Polynomial::zero(nvars, ORDER);
    for &l in w {
        let g = l.unsigned_abs() as usize - 1;
        if l > 0 {
            if g == i {
                out = out.add(&group_element(&prefix, degree));
            }
            prefix[g] += 1;
        } else {
            prefix[g] -= 1;
            if g == i {
                out = out.sub(&group_element(&prefix, degree));
            }
        }
    }
    out
}

/// A vector in `Λ²` over the truncated ring, keyed by pair index.
type PairVector = Vec<PolynomialQ>;

/// Writes a Crowell-kernel column `v` (with `Σ s_i v_i = 0`) as a
/// combination of `κ_ij = s_i e_j − s_j e_i`, eliminating the last
/// coordinate first.
fn kappa_coordinates(mut v: Vec<PolynomialQ>, degree: u32) -> Result<PairVector> {
    let n = v.len();
    let mut out: PairVector = vec![Polynomial::zero(n, ORDER); n * n.saturating_sub(1) / 2];
    for b in (1..n).rev() {
        let mut quotients: Vec<Vec<(Monomial, Q)>> = vec![Vec::new(); b];
        for (m, c) in v[b].terms() {
            let Some(i) = (0..b).find(|&i| m.exponents()[i] > 0) else {
                return Err(Error::Refused(format!(
                    "column fails the Crowell condition at s_{}",
                    b + 1
                )));
            };
            quotients[i].push((Monomial::var(n, i).quotient_of(m), c.clone()));
        }
        for (i, q) in quotients.into_iter().enumerate() {
            if q.is_empty() {
                continue;
            }
            let c = Polynomial::from_terms(n, ORDER, q);
            // subtract c·κ_ib = c·s_i e_b − c·s_b e_i
            v[b] = v[b].sub(&c.mul(&Polynomial::var(n, ORDER, i)));
            v[i] = truncate(&v[i].add(&c.mul(&Polynomial::var(n, ORDER, b))), degree);
            out[pair_index(n, i, b)] = out[pair_index(n, i, b)].add(&c);
        }
        debug_assert!(v[b].is_zero());
    }
    if !v[0].is_zero() {
        return Err(Error::Refused(
            "column fails the Crowell condition at s_1".into(),
        ));
    }
    Ok(out)
}

/// Fox Jacobian columns of every relator, truncated at `degree`, after
/// checking the Crowell condition `Σ s_i v_i ≡ 0`.
pub fn fox_jacobian(p: &GroupPresentation, degree: u32) -> Result<Vec<Vec<PolynomialQ>>> {
    if !p.commutator_relators {
        return Err(Error::Refused(
            "Fox path needs a commutator-relators presentation".into(),
        ));
    }
    let n = p.generators.len();
    let mut cols = Vec::with_capacity(p.relators.len());
    for r in &p.relators {
        let v: Vec<PolynomialQ> = (0..n).map(|i| fox_derivative(r, i, n, degree)).collect();
        let mut e = Polynomial::zero(n, ORDER);
        for (i, vi) in v.iter().enumerate() {
            e = e.add(&vi.mul(&Polynomial::var(n, ORDER, i)));
        }
        if !truncate(&e, degree).is_zero() {
            return Err(Error::Refused(
                "relator is not in the commutator subgroup".into(),
            ));
        }
        cols.push(v);
    }
    Ok(cols)
}

/// `θ_2..=θ_{D+2}` of the module presented on `Λ²` by Koszul syzygies and
/// the given extra relations, over `Q[s]/m^{D+1}`.
fn truncated_chen(n: usize, extra: &[PairVector], d: u32) -> Vec<i128> {
    let npairs = n * n.saturating_sub(1) / 2;
    let monos: Vec<Monomial> = (0..=d).flat_map(|k| monomials_of_degree(n, k)).collect();
    let mono_index: HashMap<&Monomial, usize> =
        monos.iter().enumerate().map(|(i, m)| (m, i)).collect();
    // columns ordered by degree so that pivots sit at the lowest degree
    let col = |pair: usize, m: &Monomial| mono_index[m] * npairs + pair;
    let mut relations: Vec<PairVector> = Vec::new();
    for (i, j, k) in triples(n) {
        let mut v = vec![Polynomial::zero(n, ORDER); npairs];
        v[pair_index(n, j, k)] = Polynomial::var(n, ORDER, i);
        v[pair_index(n, i, k)] = Polynomial::var(n, ORDER, j).scale(&Q::of(-1));
        v[pair_index(n, i, j)] = Polynomial::var(n, ORDER, k);
        relations.push(v);
    }
    relations.extend(extra.iter().cloned());
    let mut ech = SparseEchelon::<Q>::new(npairs * monos.len());
    for r in &relations {
        let order = r
            .iter()
            .filter_map(|p| p.terms().iter().map(|(m, _)| m.degree()).min())
            .min();
        let Some(order) = order else { continue };
        for shift in monos.iter().filter(|m| m.degree() + order <= d) {
            let mut row: Vec<(usize, Q)> = Vec::new();
            for (pair, p) in r.iter().enumerate() {
                for (m, c) in p.terms() {
                    let mm = m.mul(shift);
                    if mm.degree() <= d {
                        row.push((col(pair, &mm), c.clone()));
                    }
                }
            }
            row.sort_unstable_by_key(|(c, _)| *c);
            if !row.is_empty() {
                ech.insert(&row);
            }
        }
    }
    // rank of the relations modulo m^j for each j
    let mut rank_below = vec![0usize; d as usize + 2];
    for p in ech.pivots() {
        let deg = monos[p / npairs].degree() as usize;
        for r in rank_below.iter_mut().skip(deg + 1) {
            *r += 1;
        }
    }
    let mut below = vec![0usize; d as usize + 2];
    for m in &monos {
        for b in below.iter_mut().skip(m.degree() as usize + 1) {
            *b += 1;
        }
    }
    let quotient: Vec<i128> = (0..=d as usize + 1)
        .map(|j| (npairs * below[j] - rank_below[j]) as i128)
        .collect();
    (0..=d as usize)
        .map(|j| quotient[j + 1] - quotient[j])
        .collect()
}

pub fn chen_ranks_fox(g: &GroupId, kmax: usize) -> Result<ChenRanks> {
    if kmax < 2 {
        return Err(Error::InvalidArgument(
            "the fox method needs kmax ≥ 2".into(),
        ));
    }
    let p = group_presentation(g)?;
    let n = p.generators.len();
    let d = (kmax - 2) as u32;
    if n >= 10 && d > 4 {
        return Err(Error::Refused(format!(
            "truncation {d} with b₁ = {n} exceeds the memory guard"
        )));
    }
    // one extra degree so that division by s_i keeps degree d exact
    let cols = fox_jacobian(&p, d + 1)?;
    let lifts = cols
        .into_iter()
        .map(|v| kappa_coordinates(v, d + 1))
        .collect::<Result<Vec<_>>>()?;
    let lifts: Vec<PairVector> = lifts
        .into_iter()
        .map(|v| v.iter().map(|q| truncate(q, d)).collect())
        .collect();
    let mut theta = vec![n as i128];
    theta.extend(truncated_chen(n, &lifts, d));
    Ok(ChenRanks {
        group: *g,
        method: ChenMethod::FoxMassey,
        kmax,
        theta,
        authoritative: true,
    })
}

pub fn chen_ranks_closed(g: &GroupId, kmax: usize) -> Option<ChenRanks> {
    let theta: Option<Vec<i128>> = (1..=kmax)
        .map(|k| closed_chen(g, k).map(|c| c.value))
        .collect();
    theta.map(|theta| ChenRanks {
        group: *g,
        method: ChenMethod::ClosedForm,
        kmax,
        theta,
        authoritative: true,
    })
}

/// Dimensions of the irreducible components of `R₁(g)`.
pub fn resonance_component_dims(g: &GroupId) -> Result<Vec<usize>> {
    if let Ok(c) = component_basis(g) {
        return Ok(c.iter().map(|s| s.dim()).collect());
    }
    match (g.family, g.n) {
        (Family::Free, _) | (Family::VirtualPure, 3) => {
            let s = sample_membership(g, 20, 0)?;
            if s.members != s.points {
                return Err(Error::Refused(format!("{}: R₁ is not all of H¹", g.name())));
            }
            Ok(vec![g.b1()])
        }
        (Family::VirtualPurePlus, 4) => {
            // a single irreducible component; its dimension is the corank of
            // the Jacobian of the cubics at a point with no zero coordinate
            let cubics = vp4_plus_cubics();
            let zero = crate::resonance::integer_zeros(&cubics, 6, 1)
                .into_iter()
                .find(|p| p.iter().all(|x| !x.is_zero()))
                .ok_or_else(|| Error::Refused("no smooth zero found".into()))?;
            let jac: Vec<Vec<Q>> = cubics
                .iter()
                .map(|f| (0..6).map(|i| f.derivative(i).evaluate(&zero)).collect())
                .collect();
            Ok(vec![6 - Matrix::from_rows(jac)?.rank()])
        }
        _ => Err(Error::Unsupported(format!(
            "{}: resonance components unknown",
            g.name()
        ))),
    }
}

fn theta_free(m: usize, k: usize) -> i128 {
    closed_chen(&GroupId::free(m), k).map_or(0, |c| c.value)
}

/// `Σ_m c_m θ_k(F_m)` for the component dimension counts `c_m`, `m ≥ 2`.
pub fn formula_prediction(dims: &[usize], k: usize) -> i128 {
    dims.iter()
        .filter(|&&m| m >= 2)
        .map(|&m| theta_free(m, k))
        .sum()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChenComparison {
    pub group: GroupId,
    pub kmax: usize,
    pub infinitesimal: Option<ChenRanks>,
    pub fox: Option<ChenRanks>,
    pub closed_form: Vec<Option<ClosedChen>>,
    pub component_dims: Option<Vec<usize>>,
    /// Predicted `θ_k` for `k = 4..=kmax`.
    pub formula_prediction: Vec<i128>,
    /// Whether the prediction equals the authoritative ranks for all `k ≥ 4`.
    pub formula_matches: Option<bool>,
    /// Whether the two computed routes agree where both ran.
    pub methods_agree: Option<bool>,
}

impl ChenComparison {
    /// The ranks that determine the group's Chen ranks: the Fox route when
    /// available, otherwise the holonomy route for 1-formal groups.
    pub fn authoritative(&self) -> Option<&ChenRanks> {
        self.fox
            .as_ref()
            .or(self.infinitesimal.as_ref().filter(|r| r.authoritative))
    }
}

/// Whether the Fox route runs by default: truncations above 3 are skipped
/// once `b₁ ≥ 10`.
pub fn fox_by_default(g: &GroupId, kmax: usize) -> bool {
    g.has_group_presentation() && kmax >= 2 && (g.b1() < 10 || kmax <= 4)
}

/// Runs every applicable route; the Fox route only if [`fox_by_default`].
pub fn chen_compare(g: &GroupId, kmax: usize) -> Result<ChenComparison> {
    let infinitesimal = infinitesimal_unchecked(g, kmax).ok();
    let fox = if fox_by_default(g, kmax) {
        Some(chen_ranks_fox(g, kmax)?)
    } else {
        None
    };
    if infinitesimal.is_none() && fox.is_none() {
        return Err(Error::Unsupported(format!(
            "{}: no Chen rank method applies",
            g.name()
        )));
    }
    let closed_form = (1..=kmax).map(|k| closed_chen(g, k)).collect();
    let component_dims = resonance_component_dims(g).ok();
    let formula_prediction: Vec<i128> = match &component_dims {
        Some(d) => (4..=kmax).map(|k| formula_prediction(d, k)).collect(),
        None => Vec::new(),
    };
    let methods_agree = match (&infinitesimal, &fox) {
        (Some(a), Some(b)) => Some(a.theta == b.theta),
        _ => None,
    };
    let mut out = ChenComparison {
        group: *g,
        kmax,
        infinitesimal,
        fox,
        closed_form,
        component_dims,
        formula_prediction,
        formula_matches: None,
        methods_agree,
    };
    if out.component_dims.is_some() && kmax >= 4 {
        let theta = out.authoritative().map(|r| r.theta[3..].to_vec());
        out.formula_matches = theta.map(|t| t == out.formula_prediction);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly_of(n: usize, terms: &[(&[u16], i64)]) -> PolynomialQ {
        Polynomial::from_terms(
            n,
            ORDER,
            terms
                .iter()
                .map(|(e, c)| (Monomial::from_exponents(e), Q::of(*c))),
        )
    }

    #[test]
    fn fox_derivatives() {
        assert_eq!(
            fox_derivative(&[1, 2], 0, 2, 3),
            poly_of(2, &[(&[0, 0], 1)])
        );
        // −t₁⁻¹ = −1 + s₁ − s₁² + s₁³
        assert_eq!(
            fox_derivative(&[-1], 0, 1, 3),
            poly_of(1, &[(&[0], -1), (&[1], 1), (&[2], -1), (&[3], 1)])
        );
        // ∂[x₁,x₂]/∂x₁ = 1 − t₂
        assert_eq!(
            fox_derivative(&[1, 2, -1, -2], 0, 2, 4),
            poly_of(2, &[(&[0, 1], -1)])
        );
    }

    #[test]
    fn holonomy_dimensions() {
        assert_eq!(
            holonomy_from_cohomology(&GroupId::free(2))
                .unwrap()
                .kernel_dim(),
            1
        );
        assert!(holonomy_from_cohomology(&GroupId::free(2))
            .unwrap()
            .relations
            .is_empty());
        assert_eq!(
            holonomy_from_cohomology(&GroupId::pure_braid(3))
                .unwrap()
                .kernel_dim(),
            1
        );
        assert_eq!(
            holonomy_from_cohomology(&GroupId::welded_plus(4))
                .unwrap()
                .kernel_dim(),
            4
        );
    }

    #[test]
    fn free_group_chen_ranks() {
        let h = holonomy_from_cohomology(&GroupId::free(2)).unwrap();
        assert_eq!(holonomy_chen_ranks(&h, 5).unwrap(), vec![2, 1, 2, 3, 4]);
        let f3 = chen_ranks_infinitesimal(&GroupId::free(3), 4).unwrap();
        assert_eq!(f3.theta, vec![3, 3, 8, 15]);
        assert_eq!(
            chen_ranks_fox(&GroupId::free(3), 4).unwrap().theta,
            vec![3, 3, 8, 15]
        );
    }

    #[test]
    fn pure_braid_chen_ranks() {
        let r = chen_ranks_infinitesimal(&GroupId::pure_braid(4), 5).unwrap();
        assert_eq!(r.theta, vec![6, 4, 10, 15, 20]);
    }

    #[test]
    fn virtual_plus_three_by_fox() {
        let r = chen_ranks_fox(&GroupId::virtual_plus(3), 5).unwrap();
        assert_eq!(r.theta, vec![3, 2, 5, 9, 14]);
    }

    #[test]
    fn refuses_non_formal() {
        assert!(matches!(
            chen_ranks_infinitesimal(&GroupId::virtual_plus(4), 4),
            Err(Error::Refused(_))
        ));
    }
}
