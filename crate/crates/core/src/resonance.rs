//! First resonance varieties: Aomoto complexes, membership, the linear
//! component decompositions, the determinantal ideal and the linearity
//! obstruction to 1-formality.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::{
    monomials_of_degree, ExtElement, Matrix, Monomial, MonomialOrder, Polynomial,
};
use crate::catalog::{cohomology_presentation, Family, GroupId};
use crate::error::{Error, Result};
use crate::groebner::{radical_membership, ExteriorQuotient, Membership, DEFAULT_DEGREE_CAP};
use crate::scalar::Scalar;
use crate::{exact_string, PolynomialQ, Q};
use num_traits::{One, Zero};

/// Largest `b₁` for which the minors of the symbolic Aomoto matrix are
/// enumerated.
pub const MAX_MINOR_B1: usize = 8;

/// Coefficient range of generic sample points.
const GENERIC: i64 = 10_000;

/// A linear subspace of `H¹ = Q^{b₁}` with a rational basis.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LinearSubspace {
    pub label: String,
    pub ambient: usize,
    #[serde(serialize_with = "ser_vectors")]
    pub basis: Vec<Vec<Q>>,
}

fn ser_vectors<Se: serde::Serializer>(
    v: &[Vec<Q>],
    s: Se,
) -> std::result::Result<Se::Ok, Se::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for row in v {
        seq.serialize_element(&row.iter().map(exact_string).collect::<Vec<_>>())?;
    }
    seq.end()
}

impl LinearSubspace {
    pub fn new(label: impl Into<String>, ambient: usize, basis: Vec<Vec<Q>>) -> Result<Self> {
        if basis.iter().any(|v| v.len() != ambient) {
            return Err(Error::Dimension(format!(
                "basis vector outside Q^{ambient}"
            )));
        }
        if !basis.is_empty() && Matrix::from_rows(basis.clone())?.rank() != basis.len() {
            return Err(Error::InvalidArgument(
                "basis vectors are linearly dependent".into(),
            ));
        }
        Ok(LinearSubspace {
            label: label.into(),
            ambient,
            basis,
        })
    }

    /// The common zeros of the given linear forms.
    pub fn from_equations(
        label: impl Into<String>,
        ambient: usize,
        equations: Vec<Vec<Q>>,
    ) -> Result<Self> {
        let basis = if equations.is_empty() {
            (0..ambient).map(|i| unit(ambient, &[(i, 1)])).collect()
        } else {
            Matrix::from_rows(equations)?.nullspace()
        };
        Self::new(label, ambient, basis)
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// `Σ c_i · basis_i`.
    pub fn point(&self, coeffs: &[Q]) -> Vec<Q> {
        let mut v = vec![Q::zero(); self.ambient];
        for (c, b) in coeffs.iter().zip(&self.basis) {
            for (x, y) in v.iter_mut().zip(b) {
                *x += c.clone() * y;
            }
        }
        v
    }

    pub fn contains(&self, v: &[Q]) -> bool {
        let mut rows = self.basis.clone();
        rows.push(v.to_vec());
        Matrix::from_rows(rows).map_or(false, |m| m.rank() == self.dim())
    }
}

/// The multiplication `A¹ × A¹ → A²` of a cohomology ring, in the normal
/// basis of `A²`.
#[derive(Clone, Debug)]
pub struct AomotoComplex {
    group: GroupId,
    b1: usize,
    a2: usize,
    /// `products[g][h]`: coordinates of `e_g·e_h`.
    products: Vec<Vec<Vec<Q>>>,
}

impl AomotoComplex {
    pub fn new(g: &GroupId) -> Result<Self> {
        let p = cohomology_presentation(g)?;
        let b1 = p.n_generators();
        let q = ExteriorQuotient::new(b1, &p.exterior_relations::<Q>()?, 2)?;
        let a2 = q.hilbert()[2] as usize;
        let mut products = vec![vec![vec![Q::zero(); a2]; b1]; b1];
        for g in 0..b1 {
            for h in g + 1..b1 {
                let c = q.coordinates(&ExtElement::from_indices(b1, &[g, h], Q::one()), 2)?;
                products[h][g] = c.iter().map(|x| -x.clone()).collect();
                products[g][h] = c;
            }
        }
        Ok(AomotoComplex {
            group: *g,
            b1,
            a2,
            products,
        })
    }

    pub fn group(&self) -> GroupId {
        self.group
    }

    pub fn b1(&self) -> usize {
        self.b1
    }

    pub fn a2_dim(&self) -> usize {
        self.a2
    }

    fn check(&self, a: &[Q]) -> Result<()> {
        if a.len() != self.b1 {
            return Err(Error::Dimension(format!(
                "vector of length {} in H¹ of dimension {}",
                a.len(),
                self.b1
            )));
        }
        Ok(())
    }

    /// Matrix of `δ¹_a : u ↦ a·u`, one column per generator.
    pub fn matrix(&self, a: &[Q]) -> Result<Matrix<Q>> {
        self.check(a)?;
        let mut m = Matrix::zeros(self.a2, self.b1);
        for (g, x) in a.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for h in 0..self.b1 {
                for (r, c) in self.products[g][h].iter().enumerate() {
                    if !c.is_zero() {
                        m[(r, h)] += x.clone() * c;
                    }
                }
            }
        }
        Ok(m)
    }

    pub fn nullity(&self, a: &[Q]) -> Result<usize> {
        Ok(self.b1 - self.matrix(a)?.rank())
    }

    pub fn is_resonant(&self, a: &[Q]) -> Result<bool> {
        let n = self.nullity(a)?;
        Ok(if a.iter().all(|x| x.is_zero()) {
            self.b1 >= 1
        } else {
            n >= 2
        })
    }

    /// The Aomoto matrix with entries linear forms in the coordinates of `a`.
    pub fn symbolic_matrix(&self) -> Vec<Vec<PolynomialQ>> {
        (0..self.a2)
            .map(|r| {
                (0..self.b1)
                    .map(|h| {
                        let coeffs: Vec<Q> = (0..self.b1)
                            .map(|g| self.products[g][h][r].clone())
                            .collect();
                        Polynomial::linear(MonomialOrder::DegRevLex, &coeffs)
                    })
                    .collect()
            })
            .collect()
    }
}

pub fn aomoto_nullity(g: &GroupId, a: &[Q]) -> Result<usize> {
    AomotoComplex::new(g)?.nullity(a)
}

pub fn in_resonance(g: &GroupId, a: &[Q]) -> Result<bool> {
    AomotoComplex::new(g)?.is_resonant(a)
}

fn unit(n: usize, entries: &[(usize, i64)]) -> Vec<Q> {
    let mut v = vec![Q::zero(); n];
    for &(i, c) in entries {
        v[i] += Q::of(c);
    }
    v
}

/// The linear components of `R₁` for the families where they are known.
pub fn component_basis(g: &GroupId) -> Result<Vec<LinearSubspace>> {
    let n = g.n;
    let b1 = g.b1();
    let idx = |i: usize, j: usize| g.index_of(i, j).expect("generator present");
    // x_st = 0 for every generator whose indices leave `support`
    let outside = |support: &[usize]| -> Vec<Vec<Q>> {
        g.generator_indices()
            .iter()
            .enumerate()
            .filter(|(_, (s, t))| !(support.contains(s) && support.contains(t)))
            .map(|(p, _)| unit(b1, &[(p, 1)]))
            .collect()
    };
    let mut out = Vec::new();
    match g.family {
        Family::PureBraid => {
            for i in 1..=n {
                for j in i + 1..=n {
                    for k in j + 1..=n {
                        let mut eqs = outside(&[i, j, k]);
                        eqs.push(unit(b1, &[(idx(i, j), 1), (idx(i, k), 1), (idx(j, k), 1)]));
                        out.push(LinearSubspace::from_equations(
                            format!("L{i}{j}{k}"),
                            b1,
                            eqs,
                        )?);
                    }
                }
            }
            for i in 1..=n {
                for j in i + 1..=n {
                    for k in j + 1..=n {
                        for l in k + 1..=n {
                            let s = [i, j, k, l];
                            let mut eqs = outside(&s);
                            let all: Vec<(usize, i64)> = s
                                .iter()
                                .enumerate()
                                .flat_map(|(a, &p)| s[a + 1..].iter().map(move |&q| (p, q)))
                                .map(|(p, q)| (idx(p, q), 1))
                                .collect();
                            eqs.push(unit(b1, &all));
                            eqs.push(unit(b1, &[(idx(i, j), 1), (idx(k, l), -1)]));
                            eqs.push(unit(b1, &[(idx(j, k), 1), (idx(i, l), -1)]));
                            eqs.push(unit(b1, &[(idx(i, k), 1), (idx(j, l), -1)]));
                            out.push(LinearSubspace::from_equations(
                                format!("L{i}{j}{k}{l}"),
                                b1,
                                eqs,
                            )?);
                        }
                    }
                }
            }
        }
        Family::WeldedPure => {
            for i in 1..=n {
                for j in i + 1..=n {
                    out.push(LinearSubspace::from_equations(
                        format!("L{i}{j}"),
                        b1,
                        outside(&[i, j]),
                    )?);
                }
            }
            for i in 1..=n {
                for j in i + 1..=n {
                    for k in j + 1..=n {
                        let mut eqs = outside(&[i, j, k]);
                        eqs.push(unit(b1, &[(idx(j, i), 1), (idx(k, i), 1)]));
                        eqs.push(unit(b1, &[(idx(i, j), 1), (idx(k, j), 1)]));
                        eqs.push(unit(b1, &[(idx(i, k), 1), (idx(j, k), 1)]));
                        out.push(LinearSubspace::from_equations(
                            format!("L{i}{j}{k}"),
                            b1,
                            eqs,
                        )?);
                    }
                }
            }
        }
        Family::WeldedPurePlus => {
            // indices run in reverse relative to the generator labels: a ↦ n + 1 − a
            let r = |a: usize| n + 1 - a;
            let e = |a: usize, b: usize| idx(a.min(b), a.max(b));
            for i in 2..n {
                for j in 1..i {
                    let mut basis = vec![unit(b1, &[(e(r(i + 1), r(j + 1)), 1)])];
                    for k in 1..=j {
                        basis.push(unit(b1, &[(e(r(j + 1), r(k)), 1), (e(r(i + 1), r(k)), -1)]));
                    }
                    out.push(LinearSubspace::new(format!("L{i},{j}"), b1, basis)?);
                }
            }
        }
        _ => {
            return Err(Error::Unsupported(format!(
                "{}: no linear component decomposition is available",
                g.name()
            )))
        }
    }
    Ok(out)
}

/// The seeded generator used for every generic sample.
pub fn sampler(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn generic_vector(rng: &mut ChaCha8Rng, n: usize) -> Vec<Q> {
    (0..n)
        .map(|_| Q::of(rng.gen_range(-GENERIC..=GENERIC)))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComponentCheck {
    pub label: String,
    pub dim: usize,
    pub verified: bool,
    /// Nullity of `δ¹` at each generic point of the component.
    pub nullities: Vec<usize>,
    /// Nullity at a generic point of `H¹` off every listed component.
    pub outside_nullity: usize,
}

/// Checks that generic points of `s` are resonant while a generic point
/// outside all components of `g` is not.
pub fn verify_component(
    g: &GroupId,
    s: &LinearSubspace,
    trials: usize,
    seed: u64,
) -> Result<ComponentCheck> {
    verify_with(
        &AomotoComplex::new(g)?,
        &component_basis(g).unwrap_or_default(),
        s,
        trials,
        seed,
    )
}

fn verify_with(
    cx: &AomotoComplex,
    all: &[LinearSubspace],
    s: &LinearSubspace,
    trials: usize,
    seed: u64,
) -> Result<ComponentCheck> {
    if s.dim() == 0 {
        return Err(Error::InvalidArgument(format!(
            "{} is the zero subspace",
            s.label
        )));
    }
    if trials < 3 {
        return Err(Error::InvalidArgument(format!(
            "{trials} trials, at least 3 required"
        )));
    }
    if s.ambient != cx.b1() {
        return Err(Error::Dimension(format!(
            "{} lives in Q^{}, H¹ has dimension {}",
            s.label,
            s.ambient,
            cx.b1()
        )));
    }
    let mut rng = sampler(seed);
    let mut nullities = Vec::with_capacity(trials);
    let mut verified = true;
    for _ in 0..trials {
        let c = generic_vector(&mut rng, s.dim());
        let p = s.point(&c);
        nullities.push(cx.nullity(&p)?);
        verified &= cx.is_resonant(&p)?;
    }
    let off = loop {
        let v = generic_vector(&mut rng, cx.b1());
        if !all.iter().any(|l| l.contains(&v)) {
            break v;
        }
    };
    let outside_nullity = cx.nullity(&off)?;
    verified &= !cx.is_resonant(&off)?;
    Ok(ComponentCheck {
        label: s.label.clone(),
        dim: s.dim(),
        verified,
        nullities,
        outside_nullity,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SampleStats {
    pub points: usize,
    pub members: usize,
}

/// Counts how many of `points` seeded generic vectors lie in `R₁`.
pub fn sample_membership(g: &GroupId, points: usize, seed: u64) -> Result<SampleStats> {
    let cx = AomotoComplex::new(g)?;
    let mut rng = sampler(seed);
    let mut members = 0;
    for _ in 0..points {
        if cx.is_resonant(&generic_vector(&mut rng, cx.b1()))? {
            members += 1;
        }
    }
    Ok(SampleStats { points, members })
}

/// Determinant by expansion along rows, accumulated over column subsets.
fn determinant(m: &[Vec<&PolynomialQ>], nvars: usize) -> PolynomialQ {
    let k = m.len();
    let order = MonomialOrder::DegRevLex;
    let mut level: std::collections::HashMap<u32, PolynomialQ> = std::collections::HashMap::new();
    level.insert(0, Polynomial::constant(nvars, order, Q::one()));
    for row in m {
        let mut next: std::collections::HashMap<u32, PolynomialQ> =
            std::collections::HashMap::new();
        for (mask, p) in &level {
            for c in 0..k {
                if mask & (1 << c) != 0 || row[c].is_zero() {
                    continue;
                }
                let term = p.mul(row[c]);
                let term = if (mask >> c).count_ones() % 2 == 1 {
                    term.scale(&Q::of(-1))
                } else {
                    term
                };
                let e = next
                    .entry(mask | (1 << c))
                    .or_insert_with(|| Polynomial::zero(nvars, order));
                *e = e.add(&term);
            }
        }
        level = next;
    }
    level
        .remove(&((1u32 << k) - 1))
        .unwrap_or_else(|| Polynomial::zero(nvars, order))
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// A basis, in echelon form, of the span of the `(b₁−1)`-minors of the
/// symbolic Aomoto matrix; their common zeros are `R₁`.
pub fn resonance_ideal(g: &GroupId) -> Result<Vec<PolynomialQ>> {
    let b1 = g.b1();
    if b1 > MAX_MINOR_B1 {
        return Err(Error::Refused(format!(
            "b₁ = {b1} exceeds the minor enumeration guard {MAX_MINOR_B1}"
        )));
    }
    let cx = AomotoComplex::new(g)?;
    let k = b1.saturating_sub(1);
    if k == 0 || cx.a2_dim() < k {
        return Ok(Vec::new());
    }
    let sym = cx.symbolic_matrix();
    let monomials = monomials_of_degree(b1, k as u32);
    let pos: std::collections::HashMap<&Monomial, usize> =
        monomials.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut rows: Vec<Vec<Q>> = Vec::new();
    for rs in subsets(cx.a2_dim(), k) {
        for cs in subsets(b1, k) {
            let sub: Vec<Vec<&PolynomialQ>> = rs
                .iter()
                .map(|&r| cs.iter().map(|&c| &sym[r][c]).collect())
                .collect();
            let d = determinant(&sub, b1);
            if d.is_zero() {
                continue;
            }
            let mut row = vec![Q::zero(); monomials.len()];
            for (m, c) in d.terms() {
                row[pos[m]] = c.clone();
            }
            rows.push(row);
        }
    }
    if rows.is_empty() {
        return Ok(Vec::new());
    }
    let red = Matrix::from_rows(rows)?.row_reduce();
    Ok((0..red.pivots.len())
        .map(|r| {
            Polynomial::from_terms(
                b1,
                MonomialOrder::DegRevLex,
                monomials
                    .iter()
                    .zip(red.reduced.row(r))
                    .map(|(m, c)| (m.clone(), c.clone())),
            )
        })
        .collect())
}

/// The four cubics cutting out `R₁(vP₄⁺)`, in the coordinates
/// `x12, x13, x14, x23, x24, x34`.
pub fn vp4_plus_cubics() -> Vec<PolynomialQ> {
    let o = MonomialOrder::DegRevLex;
    let x: Vec<PolynomialQ> = (0..6).map(|i| Polynomial::var(6, o, i)).collect();
    let (x12, x13, x14, x23, x24, x34) = (&x[0], &x[1], &x[2], &x[3], &x[4], &x[5]);
    let m = |a: &PolynomialQ, b: &PolynomialQ| a.mul(b);
    vec![
        m(&m(x12, x24), &x13.add(x23))
            .add(&m(&m(x13, x34), &x12.sub(x23)))
            .sub(&m(&m(x24, x34), &x12.add(x13))),
        m(&m(x12, x23), &x14.add(x24))
            .add(&m(&m(x12, x34), &x23.sub(x14)))
            .add(&m(&m(x14, x34), &x23.add(x24))),
        m(&m(x13, x23), &x14.add(x24))
            .add(&m(&m(x14, x24), &x13.add(x23)))
            .add(&m(x34, &m(x13, x23).sub(&m(x14, x24)))),
        m(x12, &m(x13, x14).sub(&m(x23, x24))).add(&m(x34, &m(x13, x23).sub(&m(x14, x24)))),
    ]
}

/// Projectively distinct nonzero integer points with entries in
/// `[−height, height]` where every polynomial vanishes.
pub fn integer_zeros(polys: &[PolynomialQ], nvars: usize, height: i64) -> Vec<Vec<Q>> {
    let mut out = Vec::new();
    let width = (2 * height + 1) as u64;
    let total = width.pow(nvars as u32);
    for code in 0..total {
        let mut c = code;
        let v: Vec<i64> = (0..nvars)
            .map(|_| {
                let d = (c % width) as i64 - height;
                c /= width;
                d
            })
            .collect();
        // one representative per line: first nonzero entry positive, content 1
        let Some(&first) = v.iter().find(|&&x| x != 0) else {
            continue;
        };
        if first < 0 || v.iter().fold(0i64, |g, &x| num_integer::gcd(g, x)) != 1 {
            continue;
        }
        let q: Vec<Q> = v.iter().map(|&x| Q::of(x)).collect();
        if polys.iter().all(|p| p.evaluate(&q).is_zero()) {
            out.push(q);
        }
    }
    out
}

/// Integer zeros of the `vP₄⁺` cubics with no vanishing coordinate, away
/// from the coordinate subspaces.
fn vp4_plus_zero_pool() -> Vec<Vec<Q>> {
    integer_zeros(&vp4_plus_cubics(), 6, 2)
        .into_iter()
        .filter(|p| p.iter().all(|x| !x.is_zero()))
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FormalityVerdict {
    LinearComponents,
    NonlinearWitness,
}

/// Two resonant points whose sum is not resonant.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SecantCertificate {
    #[serde(serialize_with = "ser_vector")]
    pub p: Vec<Q>,
    #[serde(serialize_with = "ser_vector")]
    pub q: Vec<Q>,
    pub sum_nullity: usize,
}

fn ser_vector<Se: serde::Serializer>(v: &[Q], s: Se) -> std::result::Result<Se::Ok, Se::Error> {
    s.collect_seq(v.iter().map(exact_string))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Obstruction {
    pub verdict: FormalityVerdict,
    pub certificate: Option<SecantCertificate>,
}

/// Searches `points` for a pair of resonant vectors with non-resonant sum.
pub fn secant_certificate(
    cx: &AomotoComplex,
    points: &[Vec<Q>],
) -> Result<Option<SecantCertificate>> {
    let resonant: Vec<&Vec<Q>> = points
        .iter()
        .filter(|p| cx.is_resonant(p).unwrap_or(false))
        .collect();
    for (a, p) in resonant.iter().enumerate() {
        for q in &resonant[a + 1..] {
            let s: Vec<Q> = p.iter().zip(q.iter()).map(|(x, y)| x.clone() + y).collect();
            if !cx.is_resonant(&s)? {
                let sum_nullity = cx.nullity(&s)?;
                return Ok(Some(SecantCertificate {
                    p: (*p).clone(),
                    q: (*q).clone(),
                    sum_nullity,
                }));
            }
        }
    }
    Ok(None)
}

/// Whether `R₁` is a union of rational linear subspaces, or a pair of its
/// points spans a line leaving it.
pub fn formality_obstruction(g: &GroupId, seed: u64) -> Result<Obstruction> {
    let linear = Obstruction {
        verdict: FormalityVerdict::LinearComponents,
        certificate: None,
    };
    match (g.family, g.n) {
        (Family::PureBraid | Family::WeldedPure | Family::WeldedPurePlus, _) => {
            let cx = AomotoComplex::new(g)?;
            let comps = component_basis(g)?;
            for s in &comps {
                if !verify_with(&cx, &comps, s, 3, seed)?.verified {
                    return Err(Error::Refused(format!(
                        "component {} failed verification",
                        s.label
                    )));
                }
            }
            Ok(linear)
        }
        (Family::Free, _) | (Family::VirtualPure, 3) => {
            // R₁ is all of H¹
            let stats = sample_membership(g, 20, seed)?;
            if stats.members != stats.points {
                return Err(Error::Refused(format!("{}: R₁ is not all of H¹", g.name())));
            }
            Ok(linear)
        }
        (Family::VirtualPurePlus, 4) => {
            let cx = AomotoComplex::new(g)?;
            match secant_certificate(&cx, &vp4_plus_zero_pool())? {
                Some(c) => Ok(Obstruction {
                    verdict: FormalityVerdict::NonlinearWitness,
                    certificate: Some(c),
                }),
                None => Err(Error::Refused(
                    "no secant certificate among the sampled zeros".into(),
                )),
            }
        }
        _ => Err(Error::Unsupported(format!(
            "{}: no resonance description available",
            g.name()
        ))),
    }
}

/// Result of checking the cubic description of `R₁(vP₄⁺)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdealCheck {
    /// Radical membership of each cubic in the minors ideal.
    pub membership: Vec<Membership>,
    pub zeros_sampled: usize,
    pub zeros_resonant: usize,
}

/// Radical membership of the cubics in the minors ideal, and resonance of
/// `zeros` seeded common zeros of the cubics.
pub fn vp4_plus_ideal_check(zeros: usize, seed: u64) -> Result<IdealCheck> {
    let g = GroupId::virtual_plus(4);
    let ideal = resonance_ideal(&g)?;
    let cubics = vp4_plus_cubics();
    let membership = cubics
        .iter()
        .map(|f| radical_membership(f, &ideal, DEFAULT_DEGREE_CAP))
        .collect::<Result<Vec<_>>>()?;
    let cx = AomotoComplex::new(&g)?;
    let pool = vp4_plus_zero_pool();
    let mut rng = sampler(seed);
    let mut zeros_resonant = 0;
    for _ in 0..zeros {
        let p = &pool[rng.gen_range(0..pool.len())];
        let c = Q::of(rng.gen_range(1..=GENERIC));
        let p: Vec<Q> = p.iter().map(|x| x.clone() * &c).collect();
        if cx.is_resonant(&p)? {
            zeros_resonant += 1;
        }
    }
    Ok(IdealCheck {
        membership,
        zeros_sampled: zeros,
        zeros_resonant,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ResonanceReport {
    pub group: GroupId,
    pub components: Vec<ComponentCheck>,
    pub membership: Option<SampleStats>,
    pub ideal_check: Option<IdealCheck>,
    pub obstruction: Option<Obstruction>,
    pub notes: Vec<String>,
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Everything known about `R₁(g)`: verified components, a membership
/// sample, and for `vP₄⁺` the ideal comparison.
pub fn resonance_report(
    g: &GroupId,
    trials: usize,
    samples: usize,
    seed: u64,
) -> Result<ResonanceReport> {
    let cx = AomotoComplex::new(g)?;
    let comps = component_basis(g).ok();
    let mut components = Vec::new();
    for s in comps.iter().flatten() {
        components.push(verify_with(
            &cx,
            comps.as_deref().unwrap_or(&[]),
            s,
            trials,
            seed,
        )?);
    }
    let mut notes = Vec::new();
    if g.family == Family::WeldedPure {
        let three = components.iter().filter(|c| c.dim == 3).count();
        if three != binomial(g.n, 4) {
            notes.push(format!(
                "three-dimensional components: {three} = C({},3), not C({},4) = {}",
                g.n,
                g.n,
                binomial(g.n, 4)
            ));
        }
    }
    let membership = Some(sample_membership(g, samples, seed)?);
    let is_vp4_plus = *g == GroupId::virtual_plus(4);
    let ideal_check = if is_vp4_plus {
        Some(vp4_plus_ideal_check(20, seed)?)
    } else {
        None
    };
    let obstruction = formality_obstruction(g, seed).ok();
    Ok(ResonanceReport {
        group: *g,
        components,
        membership,
        ideal_check,
        obstruction,
        notes,
    })
}
