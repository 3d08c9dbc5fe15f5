//! Hilbert series of cohomology rings and enveloping algebras, their
//! inversion into lower central series ranks, and Koszul-duality checks.

use serde::Serialize;

use crate::algebra::{Matrix, NcPolynomial, SeriesTrunc, Word};
use crate::catalog::{cohomology_presentation, gr_presentation, symmetric_grading, GroupId};
use crate::error::{Error, Result};
use crate::groebner::{
    nc_groebner_within, nc_hilbert_symmetric_within, tuned_letter_order, Budget, ExteriorQuotient,
    NcQuadraticPresentation,
};
use num_traits::{FromPrimitive, One, Zero};

use crate::scalar::Scalar;
use crate::Q;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LcsMethod {
    /// Invert `Hilb(H*(G), −t)`; valid for Koszul cohomology rings.
    FormulaInversion,
    /// Invert `Hilb(U(gr G), t)` obtained from a noncommutative Gröbner basis.
    EnvelopingGb,
}

/// Ranks `φ_1..φ_D` of the successive quotients of the lower central series.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LcsRanks {
    pub group: GroupId,
    pub method: LcsMethod,
    pub degree: usize,
    pub phi: Vec<i64>,
    /// The Hilbert function that was inverted: of `H*(G)` for the formula
    /// path, of `U(gr G)` for the enveloping path.
    pub hilbert: Vec<u128>,
}

/// First place where `Hilb(A, t)·Hilb(A^!, −t)` differs from 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct KoszulDeviation {
    pub degree: usize,
    pub coefficient: i128,
}

/// `dim H^d(G)` for `d = 0..=degree`, by normal-monomial counting in the
/// exterior algebra.
pub fn hilbert_cohomology(g: &GroupId, degree: usize) -> Result<Vec<u128>> {
    let p = cohomology_presentation(g)?;
    let rels = p.exterior_relations::<Q>()?;
    Ok(ExteriorQuotient::new(p.n_generators(), &rels, degree)?.hilbert())
}

/// `(1 − t^k)^e` truncated at `degree`, for any integer `e`.
fn one_minus_tk_pow(k: usize, e: i64, degree: usize) -> SeriesTrunc<Q> {
    let mut coeffs = vec![Q::zero(); degree + 1];
    // generalized binomial C(e, j)·(−1)^j
    let mut c = Q::one();
    for j in 0..=degree / k {
        coeffs[j * k] = c.clone();
        c = c * Q::of(e - j as i64) / Q::of(j as i64 + 1) * Q::of(-1);
    }
    SeriesTrunc::new(coeffs, degree)
}

/// The unique integers `φ_1..φ_D` with `∏ (1 − t^k)^{φ_k} ≡ p` modulo
/// `t^{D+1}`.
pub fn witt_inversion(p: &SeriesTrunc<Q>) -> Result<Vec<i64>> {
    if p.coeff(0) != &Q::one() {
        return Err(Error::InvalidArgument(format!(
            "constant term {} is not 1",
            p.coeff(0)
        )));
    }
    let d = p.degree();
    let mut phi = Vec::with_capacity(d);
    let mut prod = SeriesTrunc::<Q>::one(d);
    for k in 1..=d {
        let f = prod.coeff(k).clone() - p.coeff(k);
        let e = f
            .as_integer()
            .and_then(|v| i64::try_from(v).ok())
            .ok_or(Error::NotPbwType { degree: k })?;
        phi.push(e);
        prod = prod.multiply(&one_minus_tk_pow(k, e, d))?;
    }
    Ok(phi)
}

/// Expands `∏_{k ≤ D} (1 − t^k)^{φ_k}`.
pub fn witt_product(phi: &[i64], degree: usize) -> SeriesTrunc<Q> {
    phi.iter()
        .enumerate()
        .fold(SeriesTrunc::one(degree), |acc, (i, &e)| {
            acc.multiply(&one_minus_tk_pow(i + 1, e, degree))
                .expect("same degree")
        })
}

fn alternate(h: &[u128], degree: usize) -> SeriesTrunc<Q> {
    let coeffs = h.iter().enumerate().map(|(i, &c)| {
        let v = Q::from_i128(c as i128).expect("fits");
        if i % 2 == 1 {
            -v
        } else {
            v
        }
    });
    SeriesTrunc::new(coeffs.collect(), degree)
}

fn series_of(h: &[u128], degree: usize) -> SeriesTrunc<Q> {
    SeriesTrunc::new(
        h.iter()
            .map(|&c| Q::from_i128(c as i128).expect("fits"))
            .collect(),
        degree,
    )
}

/// Hilbert function of a quadratic associative algebra through `degree`,
/// after relabeling generators for a smaller Gröbner basis.
pub fn hilbert_quadratic_algebra(
    p: &NcQuadraticPresentation<Q>,
    degree: usize,
) -> Result<Vec<u128>> {
    hilbert_quadratic_within(p, degree, &Budget::unlimited())
}

pub fn hilbert_quadratic_within(
    p: &NcQuadraticPresentation<Q>,
    degree: usize,
    budget: &Budget,
) -> Result<Vec<u128>> {
    match tuned_order(p, degree) {
        Some(perm) => Ok(nc_groebner_within(&p.relabeled(&perm)?, degree, budget)?.hilbert()),
        None => Ok(nc_groebner_within(p, degree, budget)?.hilbert()),
    }
}

fn tuned_order(p: &NcQuadraticPresentation<Q>, degree: usize) -> Option<Vec<u8>> {
    (p.n_generators() >= 8 && degree >= 6).then(|| tuned_letter_order(p, 5, 12, 0))
}

/// `Hilb(U(gr G), t)` through `degree`.
pub fn hilbert_enveloping(g: &GroupId, degree: usize) -> Result<Vec<u128>> {
    hilbert_enveloping_within(g, degree, &Budget::unlimited())
}

pub fn hilbert_enveloping_within(g: &GroupId, degree: usize, budget: &Budget) -> Result<Vec<u128>> {
    let a = gr_presentation(g)?.to_associative::<Q>()?;
    let Some(grading) = symmetric_grading(g) else {
        return hilbert_quadratic_within(&a, degree, budget);
    };
    match tuned_order(&a, degree) {
        Some(perm) => nc_hilbert_symmetric_within(
            &a.relabeled(&perm)?,
            degree,
            &grading.relabeled(&perm),
            budget,
        ),
        None => nc_hilbert_symmetric_within(&a, degree, &grading, budget),
    }
}

pub fn lcs_ranks(g: &GroupId, degree: usize, method: LcsMethod) -> Result<LcsRanks> {
    let (phi, hilbert) = match method {
        LcsMethod::FormulaInversion => {
            if !g.is_koszul() {
                return Err(Error::Refused(format!(
                    "{}: the cohomology ring is not Koszul for n ≥ 4, use the enveloping method",
                    g.name()
                )));
            }
            let h = hilbert_cohomology(g, degree)?;
            (witt_inversion(&alternate(&h, degree))?, h)
        }
        LcsMethod::EnvelopingGb => {
            let h = hilbert_enveloping(g, degree)?;
            (witt_inversion(&series_of(&h, degree).inverse()?)?, h)
        }
    };
    Ok(LcsRanks {
        group: *g,
        method,
        degree,
        phi,
        hilbert,
    })
}

/// The quadratic dual `A^! = T(V*)/(I^⊥)` of the cohomology ring, where
/// `I ⊆ V⊗V` is spanned by all symmetric tensors and lifts of the exterior
/// relations.
pub fn quadratic_dual(g: &GroupId) -> Result<NcQuadraticPresentation<Q>> {
    let p = cohomology_presentation(g)?;
    let n = p.n_generators();
    let mut rows: Vec<Vec<Q>> = Vec::new();
    for i in 0..n {
        for j in i..n {
            let mut r = vec![Q::zero(); n * n];
            r[i * n + j] += Q::one();
            r[j * n + i] += Q::one();
            rows.push(r);
        }
    }
    for rel in &p.relations {
        let mut r = vec![Q::zero(); n * n];
        for &((i, j), c) in &rel.terms {
            r[i * n + j] += Q::of(c);
        }
        rows.push(r);
    }
    let perp = Matrix::from_rows(rows)?.nullspace();
    let relations = perp
        .into_iter()
        .map(|v| {
            NcPolynomial::from_terms(
                v.into_iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(k, c)| (Word::from_slice(&[(k / n) as u8, (k % n) as u8]), c)),
            )
        })
        .collect();
    NcQuadraticPresentation::new(n, relations)
}

fn relation_rows(p: &NcQuadraticPresentation<Q>) -> Vec<Vec<Q>> {
    let n = p.n_generators();
    p.relations()
        .iter()
        .map(|r| {
            let mut row = vec![Q::zero(); n * n];
            for (w, c) in r.terms() {
                let l = w.letters();
                row[l[0] as usize * n + l[1] as usize] += c.clone();
            }
            row
        })
        .collect()
}

/// Whether two quadratic presentations on the same generators define the
/// same algebra, i.e. their relations span the same subspace of `V⊗V`.
pub fn same_quadratic_algebra(
    a: &NcQuadraticPresentation<Q>,
    b: &NcQuadraticPresentation<Q>,
) -> Result<bool> {
    if a.n_generators() != b.n_generators() {
        return Ok(false);
    }
    let rank = |rows: Vec<Vec<Q>>| -> Result<usize> {
        if rows.is_empty() {
            return Ok(0);
        }
        Ok(Matrix::from_rows(rows)?.rank())
    };
    let (ra, rb) = (relation_rows(a), relation_rows(b));
    let both: Vec<Vec<Q>> = ra.iter().chain(&rb).cloned().collect();
    let (x, y, z) = (rank(ra)?, rank(rb)?, rank(both)?);
    Ok(x == z && y == z)
}

/// Smallest degree `≤ degree` where `Hilb(A,t)·Hilb(A^!,−t) ≠ 1`.
pub fn koszul_witness(g: &GroupId, degree: usize) -> Result<Option<KoszulDeviation>> {
    if degree < 2 {
        return Err(Error::InvalidArgument(
            "the Koszul check needs degree ≥ 2".into(),
        ));
    }
    let dual = hilbert_quadratic_algebra(&quadratic_dual(g)?, degree)?;
    koszul_witness_from(g, &dual)
}

/// As [`koszul_witness`], given `Hilb(A^!)` through the wanted degree.
pub fn koszul_witness_from(g: &GroupId, dual_hilbert: &[u128]) -> Result<Option<KoszulDeviation>> {
    let degree = dual_hilbert.len().saturating_sub(1);
    if degree < 2 {
        return Err(Error::InvalidArgument(
            "the Koszul check needs degree ≥ 2".into(),
        ));
    }
    let a = series_of(&hilbert_cohomology(g, degree)?, degree);
    let dual = alternate(dual_hilbert, degree);
    let prod = a.multiply(&dual)?;
    for k in 1..=degree {
        if !prod.coeff(k).is_zero() {
            let coefficient = prod.coeff(k).as_integer().expect("integer series");
            return Ok(Some(KoszulDeviation {
                degree: k,
                coefficient,
            }));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn necklaces(n: i64, k: i64) -> i64 {
        fn mobius(mut m: i64) -> i64 {
            let mut r = 1;
            let mut p = 2;
            while p * p <= m {
                if m % p == 0 {
                    m /= p;
                    if m % p == 0 {
                        return 0;
                    }
                    r = -r;
                }
                p += 1;
            }
            if m > 1 {
                -r
            } else {
                r
            }
        }
        (1..=k)
            .filter(|d| k % d == 0)
            .map(|d| mobius(d) * n.pow((k / d) as u32))
            .sum::<i64>()
            / k
    }

    #[test]
    fn free_lie_ranks() {
        let p = SeriesTrunc::from_i64(&[1, -2], 8);
        let expected: Vec<i64> = (1..=8).map(|k| necklaces(2, k)).collect();
        assert_eq!(witt_inversion(&p).unwrap(), expected);
        assert_eq!(expected, vec![2, 1, 2, 3, 6, 9, 18, 30]);
    }

    #[test]
    fn product_of_free_groups() {
        let p = SeriesTrunc::from_i64(&[1, -3, 2], 5);
        let expected: Vec<i64> = (1..=5)
            .map(|k| necklaces(2, k) + i64::from(k == 1))
            .collect();
        assert_eq!(witt_inversion(&p).unwrap(), expected);
    }

    #[test]
    fn round_trip() {
        let phi = vec![3, -1, 4, 0, 7, 2];
        assert_eq!(witt_inversion(&witt_product(&phi, 6)).unwrap(), phi);
    }

    #[test]
    fn rejects_fractions() {
        let p = SeriesTrunc::new(vec![Q::one(), crate::ratio(1, 2)], 3);
        assert_eq!(witt_inversion(&p), Err(Error::NotPbwType { degree: 1 }));
    }

    #[test]
    fn cohomology_of_small_groups() {
        assert_eq!(
            hilbert_cohomology(&GroupId::pure_braid(4), 5).unwrap(),
            vec![1, 6, 11, 6, 0, 0]
        );
        assert_eq!(
            hilbert_cohomology(&GroupId::welded(3), 4).unwrap(),
            vec![1, 6, 9, 0, 0]
        );
        assert_eq!(
            hilbert_cohomology(&GroupId::virtual_plus(3), 3).unwrap(),
            vec![1, 3, 1, 0]
        );
    }

    #[test]
    fn enveloping_path_on_p3() {
        let r = lcs_ranks(&GroupId::pure_braid(3), 5, LcsMethod::EnvelopingGb).unwrap();
        assert_eq!(r.phi, vec![3, 1, 2, 3, 6]);
    }

    #[test]
    fn formula_path_refuses_non_koszul() {
        assert!(matches!(
            lcs_ranks(&GroupId::welded(4), 3, LcsMethod::FormulaInversion),
            Err(Error::Refused(_))
        ));
    }

    #[test]
    fn dual_of_p3_is_its_holonomy_algebra() {
        let d = quadratic_dual(&GroupId::pure_braid(3)).unwrap();
        assert_eq!(d.relations().len(), 9 - 7);
        assert_eq!(koszul_witness(&GroupId::pure_braid(3), 5).unwrap(), None);
    }
}
