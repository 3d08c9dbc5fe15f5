//! Closed-form Hilbert series and Chen ranks.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use super::{Family, GroupId};
use crate::algebra::SeriesTrunc;
use crate::error::{Error, Result};
use crate::scalar::{Rational, Scalar};

/// How a tabulated value is known.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "note", rename_all = "snake_case")]
pub enum Provenance {
    /// A proved formula.
    Exact,
    /// A formula stated as a conjecture or only for large degrees.
    Conjectural(String),
    /// Obtained here from other data (product rules, corrected formulas).
    Derived(String),
}

/// Integer coefficients `h_0..h_D` of a closed-form Hilbert series.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClosedSeries {
    pub coeffs: Vec<i128>,
    pub provenance: Provenance,
    pub source: &'static str,
}

impl ClosedSeries {
    pub fn series<S: Scalar>(&self) -> SeriesTrunc<S> {
        let d = self.coeffs.len() - 1;
        SeriesTrunc::new(
            self.coeffs
                .iter()
                .map(|&c| S::from_i128(c).expect("integer"))
                .collect(),
            d,
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClosedChen {
    pub value: i128,
    pub provenance: Provenance,
    pub validity: String,
    pub source: &'static str,
}

/// `Σ_{k≥2} θ_k t^{k−2} = numerator(t) / (1 − t)^power`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChenGeneratingFunction {
    pub numerator: Vec<i64>,
    pub power: u32,
}

impl ChenGeneratingFunction {
    /// `θ_2..=θ_kmax`.
    pub fn expand(&self, kmax: usize) -> Vec<i128> {
        (2..=kmax)
            .map(|k| {
                let m = k - 2;
                self.numerator
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| *i <= m)
                    .map(|(i, &c)| {
                        c as i128 * binom(m - i + self.power as usize - 1, self.power as usize - 1)
                    })
                    .sum()
            })
            .collect()
    }
}

pub(crate) fn binom(n: usize, k: usize) -> i128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1i128, |acc, i| acc * (n - i) as i128 / (i as i128 + 1))
}

/// Stirling numbers of the second kind.
pub fn stirling2(n: usize, j: usize) -> i128 {
    let mut row = vec![0i128; j + 1];
    row[0] = 1;
    for m in 1..=n {
        for r in (1..=j.min(m)).rev() {
            row[r] = r as i128 * row[r] + row[r - 1];
        }
        row[0] = 0;
    }
    if n == 0 && j == 0 {
        1
    } else {
        row[j]
    }
}

fn product_one_plus_jt(n: usize, d: usize) -> Vec<i128> {
    let mut c = vec![0i128; d + 1];
    c[0] = 1;
    for j in 1..n {
        for k in (1..=d).rev() {
            c[k] += j as i128 * c[k - 1];
        }
    }
    c
}

fn pad(mut v: Vec<i128>, d: usize) -> Vec<i128> {
    v.resize(d + 1, 0);
    v
}

fn factorial(n: usize) -> i128 {
    (1..=n as i128).product()
}

/// Closed-form `Hilb(H*(G), t)` truncated at degree `d`.
pub fn closed_hilbert(g: &GroupId, d: usize) -> Result<ClosedSeries> {
    let n = g.n;
    let (coeffs, provenance, source) = match g.family {
        Family::Free => (
            pad(vec![1, n as i128], d),
            Provenance::Exact,
            "free group, 1+nt",
        ),
        Family::PureBraid => (
            product_one_plus_jt(n, d),
            Provenance::Exact,
            "Hilbert series table, P_n row",
        ),
        Family::WeldedPurePlus => (
            product_one_plus_jt(n, d),
            Provenance::Exact,
            "Hilbert series table, wP_n+ row",
        ),
        Family::ProductOfFree => (
            product_one_plus_jt(n, d),
            Provenance::Derived("Künneth product of the free factors".into()),
            "product rule over F_1 x ... x F_{n-1}",
        ),
        Family::WeldedPure => (
            (0..=d)
                .map(|i| binom(n - 1, i) * (n as i128).pow(i as u32))
                .collect(),
            Provenance::Exact,
            "Hilbert series table, wP_n row",
        ),
        Family::VirtualPure => (
            (0..=d)
                .map(|i| {
                    if i < n {
                        binom(n - 1, i) * factorial(n) / factorial(n - i)
                    } else {
                        0
                    }
                })
                .collect(),
            Provenance::Exact,
            "Hilbert series table, vP_n row",
        ),
        Family::VirtualPurePlus => (
            (0..=d)
                .map(|i| if i < n { stirling2(n, n - i) } else { 0 })
                .collect(),
            Provenance::Derived("printed vP_n+ row read with k = j".into()),
            "Hilbert series table, vP_n+ row (corrected)",
        ),
    };
    Ok(ClosedSeries {
        coeffs: pad(coeffs, d),
        provenance,
        source,
    })
}

/// The printed vP_n+ Hilbert series `Σ_j (Σ_{i<j} (−1)^i C(j,i)(k−i)^n) t^{n−j} / j!`
/// with the free symbol `k` bound either to `j` (`None`) or to a constant.
pub fn vp_plus_printed_hilbert(n: usize, k: Option<i64>) -> Vec<Rational> {
    let mut out = vec![Rational::from_integer(0); n];
    for j in 1..=n {
        let kk = k.unwrap_or(j as i64);
        let mut s = BigInt::from(0);
        for i in 0..j {
            let term = BigInt::from(binom(j, i)) * BigInt::from(kk - i as i64).pow(n as u32);
            if i % 2 == 0 {
                s += term;
            } else {
                s -= term;
            }
        }
        out[n - j] = Rational::from_big(BigRational::new(s, BigInt::from(factorial(j))));
    }
    out
}

/// `Hilb(H*(G), −t)`, the input of the LCS formula, for Koszul groups.
pub fn closed_lcs_series(g: &GroupId, d: usize) -> Result<ClosedSeries> {
    if !g.is_koszul() {
        return Err(Error::Refused(format!(
            "{}: the cohomology ring is not Koszul for n ≥ 4",
            g.name()
        )));
    }
    let mut s = closed_hilbert(g, d)?;
    for (i, c) in s.coeffs.iter_mut().enumerate() {
        if i % 2 == 1 {
            *c = -*c;
        }
    }
    Ok(s)
}

fn theta_free(m: usize, k: usize) -> i128 {
    if k == 1 {
        m as i128
    } else {
        binom(m + k - 2, k) * (k as i128 - 1)
    }
}

fn theta_welded_plus(n: usize, k: usize) -> i128 {
    match k {
        1 => binom(n, 2),
        2 => binom(n, 3),
        3 => 2 * binom(n + 1, 4),
        _ => binom(n + k - 2, k + 1) + theta_welded_plus(n, k - 1),
    }
}

/// Closed-form Chen rank `θ_k(G)`, when one is tabulated.
pub fn closed_chen(g: &GroupId, k: usize) -> Option<ClosedChen> {
    if k == 0 {
        return None;
    }
    let n = g.n;
    let exact = |value, validity: &str, source| {
        Some(ClosedChen {
            value,
            provenance: Provenance::Exact,
            validity: validity.into(),
            source,
        })
    };
    if k == 1 {
        return exact(g.b1() as i128, "k = 1", "theta_1 = b_1");
    }
    match g.family {
        Family::Free => exact(
            theta_free(n, k),
            "k ≥ 2",
            "free group Chen ranks C(n+k-2,k)(k-1)",
        ),
        Family::PureBraid if k >= 3 => exact(
            (k as i128 - 1) * binom(n + 1, 4),
            "k ≥ 3",
            "pure braid Chen ranks (k-1)C(n+1,4)",
        ),
        Family::WeldedPure if k >= 4 => Some(ClosedChen {
            value: (k as i128 - 1) * binom(n, 2) + (k as i128 * k as i128 - 1) * binom(n, 3),
            provenance: Provenance::Conjectural(
                "proved for k ≫ 1; conjectured for all k ≥ 4, verified for n ≤ 8".into(),
            ),
            validity: "k ≥ 4".into(),
            source: "welded pure braid Chen ranks (k-1)C(n,2)+(k^2-1)C(n,3)",
        }),
        Family::WeldedPurePlus => exact(
            theta_welded_plus(n, k),
            "k ≥ 1",
            "upper McCool Chen rank recursion",
        ),
        Family::VirtualPure if n == 3 && k >= 3 => exact(
            binom(k + 3, 5) + binom(k + 2, 4) + binom(k + 1, 3) + 6 * binom(k, 2) + k as i128 - 2,
            "k ≥ 3",
            "Chen ranks table, vP_3 row",
        ),
        Family::VirtualPurePlus if n == 4 && k >= 3 => {
            let k = k as i128;
            exact(
                (k * k * k - 1) + k * (k - 1) / 2,
                "k ≥ 3",
                "Chen ranks table, vP_4+ row",
            )
        }
        Family::ProductOfFree => Some(ClosedChen {
            value: (1..n).map(|m| theta_free(m, k)).sum(),
            provenance: Provenance::Derived("sum of free-factor Chen ranks".into()),
            validity: "k ≥ 2".into(),
            source: "product rule over F_1 x ... x F_{n-1}",
        }),
        _ => chen_generating_function(g).map(|gf| ClosedChen {
            value: gf.expand(k)[k - 2],
            provenance: Provenance::Exact,
            validity: "k ≥ 2".into(),
            source: "Chen rank generating function",
        }),
    }
}

/// Recorded generating functions of Chen ranks.
pub fn chen_generating_function(g: &GroupId) -> Option<ChenGeneratingFunction> {
    let (numerator, power) = match (g.family, g.n) {
        (Family::VirtualPurePlus, 3) => (vec![2, -1], 3),
        (Family::VirtualPurePlus, 4) => (vec![8, -3, 1], 4),
        (Family::VirtualPurePlus, 5) => (vec![20, 15, 5], 4),
        (Family::VirtualPurePlus, 6) => (vec![40, 35, -40, -20], 5),
        (Family::VirtualPure, 3) => (vec![9, -20, 15, 0, -4, 1], 6),
        _ => return None,
    };
    Some(ChenGeneratingFunction { numerator, power })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hilbert_rows() {
        assert_eq!(
            closed_hilbert(&GroupId::pure_braid(4), 3).unwrap().coeffs,
            vec![1, 6, 11, 6]
        );
        assert_eq!(
            closed_hilbert(&GroupId::welded(4), 3).unwrap().coeffs,
            vec![1, 12, 48, 64]
        );
        assert_eq!(
            closed_hilbert(&GroupId::virtual_pure(3), 2).unwrap().coeffs,
            vec![1, 6, 6]
        );
        assert_eq!(
            closed_hilbert(&GroupId::virtual_plus(3), 3).unwrap().coeffs,
            vec![1, 3, 1, 0]
        );
        assert_eq!(
            closed_hilbert(&GroupId::virtual_plus(4), 4).unwrap().coeffs,
            vec![1, 6, 7, 1, 0]
        );
        assert_eq!(
            closed_hilbert(&GroupId::free(3), 3).unwrap().coeffs,
            vec![1, 3, 0, 0]
        );
    }

    #[test]
    fn printed_vp_plus_formula() {
        let one = Rational::from_integer;
        let with_j = vp_plus_printed_hilbert(4, None);
        assert_eq!(with_j, vec![one(1), one(6), one(7), one(1)]);
        // binding k to n instead does not give the Hilbert series
        assert_ne!(vp_plus_printed_hilbert(4, Some(4)), with_j);
    }

    #[test]
    fn stirling_numbers() {
        assert_eq!(
            (1..=5).map(|j| stirling2(5, j)).collect::<Vec<_>>(),
            vec![1, 15, 25, 10, 1]
        );
        assert_eq!(stirling2(0, 0), 1);
    }

    #[test]
    fn chen_examples() {
        assert_eq!(closed_chen(&GroupId::free(3), 4).unwrap().value, 15);
        assert_eq!(closed_chen(&GroupId::pure_braid(4), 5).unwrap().value, 20);
        assert!(closed_chen(&GroupId::pure_braid(4), 2).is_none());
        let seq: Vec<i128> = (1..=5)
            .map(|k| closed_chen(&GroupId::welded_plus(4), k).unwrap().value)
            .collect();
        assert_eq!(seq, vec![6, 4, 10, 16, 23]);
        assert_eq!(closed_chen(&GroupId::welded(4), 4).unwrap().value, 78);
        assert_eq!(closed_chen(&GroupId::welded(4), 5).unwrap().value, 120);
    }

    #[test]
    fn generating_functions_agree_with_closed_forms() {
        let vp3 = chen_generating_function(&GroupId::virtual_pure(3))
            .unwrap()
            .expand(6);
        assert_eq!(vp3[..3], [9, 34, 84]);
        for k in 3..=6 {
            assert_eq!(
                vp3[k - 2],
                closed_chen(&GroupId::virtual_pure(3), k).unwrap().value
            );
        }
        let vp4 = chen_generating_function(&GroupId::virtual_plus(4))
            .unwrap()
            .expand(6);
        assert_eq!(vp4[..3], [8, 29, 69]);
        for k in 3..=6 {
            assert_eq!(
                vp4[k - 2],
                closed_chen(&GroupId::virtual_plus(4), k).unwrap().value
            );
        }
        assert_eq!(
            chen_generating_function(&GroupId::virtual_plus(3))
                .unwrap()
                .expand(5),
            vec![2, 5, 9, 14]
        );
    }
}
