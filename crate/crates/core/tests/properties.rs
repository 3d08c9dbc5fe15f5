use braidlab::algebra::{
    ExtElement, Matrix, MonomialOrder, NcPolynomial, Polynomial, SeriesTrunc, Word,
};
use braidlab::catalog::GroupId;
use braidlab::groebner::{
    buchberger_module, hilbert_module, nc_groebner_truncated, nc_normal_count, ModulePresentation,
    NcQuadraticPresentation,
};
use braidlab::lcs::{witt_inversion, witt_product};
use braidlab::resonance::in_resonance;
use braidlab::{ratio, Scalar, Q};
use num_traits::Zero;
use proptest::prelude::*;

const N: usize = 5;

fn ext_element(max_terms: usize) -> impl Strategy<Value = ExtElement<Q>> {
    prop::collection::vec((0u64..(1 << N), -4i64..=4), 0..=max_terms).prop_map(|terms| {
        let mut x = ExtElement::zero(N);
        for (mask, c) in terms {
            x.add_term(mask, Q::of(c));
        }
        x
    })
}

fn homogeneous(degree: u32) -> impl Strategy<Value = ExtElement<Q>> {
    let masks: Vec<u64> = (0..1u64 << N)
        .filter(|m| m.count_ones() == degree)
        .collect();
    prop::collection::vec((prop::sample::select(masks), -4i64..=4), 1..=3).prop_map(|terms| {
        let mut x = ExtElement::zero(N);
        for (mask, c) in terms {
            x.add_term(mask, Q::of(c));
        }
        x
    })
}

fn series(degree: usize) -> impl Strategy<Value = SeriesTrunc<Q>> {
    prop::collection::vec(-6i64..=6, degree + 1)
        .prop_map(move |c| SeriesTrunc::from_i64(&c, degree))
}

fn small_matrix() -> impl Strategy<Value = Matrix<Q>> {
    (1usize..=5, 1usize..=6).prop_flat_map(|(r, c)| {
        prop::collection::vec(prop::collection::vec(-3i64..=3, c), r).prop_map(|rows| {
            Matrix::from_rows(
                rows.into_iter()
                    .map(|r| r.into_iter().map(Q::of).collect())
                    .collect(),
            )
            .unwrap()
        })
    })
}

fn quadratic_relation(n: usize) -> impl Strategy<Value = NcPolynomial<Q>> {
    prop::collection::vec(((0..n as u8), (0..n as u8), -2i64..=2), 1..=3).prop_map(|terms| {
        NcPolynomial::from_terms(
            terms
                .into_iter()
                .map(|(a, b, c)| (Word::from_slice(&[a, b]), Q::of(c))),
        )
    })
}

fn nc_poly(n: usize, max_len: usize) -> impl Strategy<Value = NcPolynomial<Q>> {
    prop::collection::vec(
        (prop::collection::vec(0..n as u8, 0..=max_len), -3i64..=3),
        0..=5,
    )
    .prop_map(|terms| {
        NcPolynomial::from_terms(
            terms
                .into_iter()
                .map(|(w, c)| (Word::from_slice(&w), Q::of(c))),
        )
    })
}

fn homogeneous_poly(nvars: usize, degree: u32) -> impl Strategy<Value = Polynomial<Q>> {
    prop::collection::vec(
        (
            prop::collection::vec(0u16..=degree as u16, nvars),
            -3i64..=3,
        ),
        1..=3,
    )
    .prop_map(move |terms| {
        // rescale exponents onto the requested total degree
        let terms = terms.into_iter().filter_map(|(mut e, c)| {
            let s: u16 = e.iter().sum();
            if s == 0 {
                return None;
            }
            let mut left = degree as u16;
            for x in e.iter_mut() {
                *x = (*x * degree as u16 / s).min(left);
                left -= *x;
            }
            e[0] += left;
            Some((braidlab::algebra::Monomial::from_exponents(&e), Q::of(c)))
        });
        Polynomial::from_terms(nvars, MonomialOrder::DegRevLex, terms)
    })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, ..ProptestConfig::default() })]

    #[test]
    fn exterior_product_is_associative(a in ext_element(4), b in ext_element(4), c in ext_element(4)) {
        let left = a.multiply(&b).unwrap().multiply(&c).unwrap();
        let right = a.multiply(&b.multiply(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn exterior_product_is_graded_commutative(
        (p, q, x, y) in (0u32..=3, 0u32..=2).prop_flat_map(|(p, q)| (Just(p), Just(q), homogeneous(p), homogeneous(q)))
    ) {
        let sign = if (p * q) % 2 == 0 { Q::of(1) } else { Q::of(-1) };
        prop_assert_eq!(x.multiply(&y).unwrap(), y.multiply(&x).unwrap().scale(&sign));
    }

    #[test]
    fn rank_plus_nullity_is_width(m in small_matrix()) {
        let null = m.nullspace();
        prop_assert_eq!(m.rank() + null.len(), m.ncols());
        for v in &null {
            prop_assert!(m.mul_vec(v).unwrap().iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn series_product_is_commutative_and_associative(a in series(6), b in series(6), c in series(6)) {
        prop_assert_eq!(a.multiply(&b).unwrap(), b.multiply(&a).unwrap());
        let l = a.multiply(&b).unwrap().multiply(&c).unwrap();
        let r = a.multiply(&b.multiply(&c).unwrap()).unwrap();
        prop_assert_eq!(l, r);
    }

    #[test]
    fn witt_round_trip_from_series(tail in prop::collection::vec(-20i64..=20, 7)) {
        let mut c = vec![1];
        c.extend(tail);
        let p = SeriesTrunc::<Q>::from_i64(&c, 7);
        let phi = witt_inversion(&p).unwrap();
        prop_assert_eq!(witt_product(&phi, 7), p);
    }

    #[test]
    fn witt_round_trip_from_exponents(phi in prop::collection::vec(-30i64..=30, 6)) {
        prop_assert_eq!(witt_inversion(&witt_product(&phi, 6)).unwrap(), phi);
    }

    #[test]
    fn nc_normal_form_is_idempotent(
        rels in prop::collection::vec(quadratic_relation(3), 1..=2),
        p in nc_poly(3, 4),
    ) {
        let rels: Vec<_> = rels.into_iter().filter(|r| !r.is_zero()).collect();
        prop_assume!(!rels.is_empty());
        let gb = nc_groebner_truncated(&NcQuadraticPresentation::new(3, rels).unwrap(), 4).unwrap();
        let once = gb.normal_form(&p);
        prop_assert_eq!(gb.normal_form(&once), once.clone());
        // normal words avoid every leading word
        for (w, _) in once.terms() {
            for l in gb.leading_words() {
                prop_assert!(!w.letters().windows(l.len()).any(|x| x == l.letters()));
            }
        }
    }

    #[test]
    fn module_normal_form_is_idempotent(
        gens in prop::collection::vec(homogeneous_poly(3, 2), 1..=3),
        v in homogeneous_poly(3, 3),
    ) {
        let gb = buchberger_module(&ModulePresentation::ideal(3, MonomialOrder::DegRevLex, gens).unwrap(), 6);
        let once = gb.reduce(&[v]);
        prop_assert_eq!(gb.reduce(&once), once);
    }

    #[test]
    fn hilbert_function_ignores_the_order(gens in prop::collection::vec(homogeneous_poly(3, 2), 1..=3)) {
        let p = ModulePresentation::ideal(3, MonomialOrder::DegRevLex, gens).unwrap();
        let a = hilbert_module(&buchberger_module(&p, 6), 5);
        let b = hilbert_module(&buchberger_module(&p.with_order(MonomialOrder::Lex), 6), 5);
        prop_assert_eq!(a, b);
    }

    #[test]
    fn resonance_is_homogeneous(
        a in prop::collection::vec(-3i64..=3, 6),
        num in prop_oneof![-50i64..=-1, 1i64..=50],
        den in 1i64..=50,
    ) {
        let c: Q = ratio(num, den);
        let a: Vec<Q> = a.into_iter().map(Q::of).collect();
        let scaled: Vec<Q> = a.iter().map(|x| x.clone() * &c).collect();
        for g in [GroupId::pure_braid(4), GroupId::welded_plus(4), GroupId::virtual_plus(4)] {
            prop_assert_eq!(in_resonance(&g, &a).unwrap(), in_resonance(&g, &scaled).unwrap());
        }
    }
}

#[test]
fn empty_obstruction_set_counts_all_words() {
    for n in 1..=4usize {
        let counts = nc_normal_count(&[], n, 6);
        for (d, &c) in counts.iter().enumerate() {
            assert_eq!(c, (n as u128).pow(d as u32));
        }
    }
}

/// `I^⊥ ⊆ V*⊗V*` for relations `I ⊆ V⊗V`.
fn dual(p: &NcQuadraticPresentation<Q>) -> NcQuadraticPresentation<Q> {
    let n = p.n_generators();
    let rows: Vec<Vec<Q>> = p
        .relations()
        .iter()
        .map(|r| {
            let mut row = vec![Q::zero(); n * n];
            for (w, c) in r.terms() {
                row[w.letters()[0] as usize * n + w.letters()[1] as usize] += c.clone();
            }
            row
        })
        .collect();
    let perp = Matrix::from_rows(rows).unwrap().nullspace();
    let rels = perp
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
    NcQuadraticPresentation::new(n, rels).unwrap()
}

fn alternating(h: &[u128]) -> SeriesTrunc<Q> {
    let d = h.len() - 1;
    SeriesTrunc::new(
        h.iter()
            .enumerate()
            .map(|(i, &c)| Q::of(if i % 2 == 0 { c as i64 } else { -(c as i64) }))
            .collect(),
        d,
    )
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 48, ..ProptestConfig::default() })]

    #[test]
    fn quadratic_bases_satisfy_koszul_numerics(rels in prop::collection::vec(quadratic_relation(2), 1..=2)) {
        let rels: Vec<_> = rels.into_iter().filter(|r| !r.is_zero()).collect();
        prop_assume!(!rels.is_empty());
        let a = NcQuadraticPresentation::new(2, rels).unwrap();
        let d = 5;
        let gb = nc_groebner_truncated(&a, d).unwrap();
        prop_assume!(gb.degree_profile().iter().enumerate().all(|(deg, &c)| deg == 2 || c == 0));
        let h = SeriesTrunc::new(gb.hilbert().into_iter().map(|c| Q::of(c as i64)).collect(), d);
        let dual_gb = nc_groebner_truncated(&dual(&a), d).unwrap();
        let prod = h.multiply(&alternating(&dual_gb.hilbert())).unwrap();
        prop_assert_eq!(prod, SeriesTrunc::one(d));
    }
}
