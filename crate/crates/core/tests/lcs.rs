use braidlab::algebra::{Matrix, NcPolynomial, SeriesTrunc};
use braidlab::catalog::{
    closed_hilbert, cohomology_presentation, gr_presentation, symmetric_grading, GroupId,
};
use braidlab::chen::holonomy_from_cohomology;
use braidlab::groebner::NcQuadraticPresentation;
use braidlab::lcs::{
    hilbert_cohomology, hilbert_enveloping, hilbert_quadratic_algebra, koszul_witness,
    koszul_witness_from, lcs_ranks, quadratic_dual, same_quadratic_algebra, LcsMethod,
};
use braidlab::{Scalar, Q};
use num_traits::Zero;

fn koszul_groups() -> Vec<GroupId> {
    let mut gs = vec![
        GroupId::free(3),
        GroupId::virtual_pure(3),
        GroupId::virtual_plus(3),
        GroupId::virtual_plus(4),
    ];
    for n in 3..=4 {
        gs.extend([
            GroupId::pure_braid(n),
            GroupId::welded_plus(n),
            GroupId::product_of_free(n),
        ]);
    }
    gs.push(GroupId::welded(3));
    gs
}

fn signed(h: &[u128], alternate: bool) -> SeriesTrunc<Q> {
    let c = h.iter().enumerate().map(|(i, &c)| {
        let c = Q::of(c as i64);
        if alternate && i % 2 == 1 {
            -c
        } else {
            c
        }
    });
    SeriesTrunc::new(c.collect(), h.len() - 1)
}

fn relation_rank(p: &NcQuadraticPresentation<Q>) -> usize {
    let n = p.n_generators();
    let row = |r: &NcPolynomial<Q>| {
        let mut row = vec![Q::zero(); n * n];
        for (w, c) in r.terms() {
            row[w.letters()[0] as usize * n + w.letters()[1] as usize] += c.clone();
        }
        row
    };
    if p.relations().is_empty() {
        return 0;
    }
    Matrix::from_rows(p.relations().iter().map(row).collect())
        .unwrap()
        .rank()
}

#[test]
fn koszul_duality_holds_through_degree_six() {
    for g in koszul_groups() {
        let d = if g.b1() > 6 { 5 } else { 6 };
        let a = signed(&hilbert_cohomology(&g, d).unwrap(), true);
        let u = signed(&hilbert_enveloping(&g, d).unwrap(), false);
        assert_eq!(a.multiply(&u).unwrap(), SeriesTrunc::one(d), "{g}");
        assert_eq!(koszul_witness(&g, d).unwrap(), None, "{g}");
    }
}

#[test]
fn enveloping_route_matches_the_formula() {
    for g in koszul_groups()
        .into_iter()
        .filter(|g| g.n <= 4 && g.b1() <= 6)
    {
        let f = lcs_ranks(&g, 6, LcsMethod::FormulaInversion).unwrap();
        let e = lcs_ranks(&g, 6, LcsMethod::EnvelopingGb).unwrap();
        assert_eq!(f.phi, e.phi, "{g}");
    }
}

#[test]
fn low_ranks_are_b1_and_kernel_dim() {
    for g in koszul_groups()
        .into_iter()
        .chain([GroupId::welded(4), GroupId::virtual_pure(4)])
    {
        let phi = lcs_ranks(&g, 3, LcsMethod::EnvelopingGb).unwrap().phi;
        let b1 = g.b1();
        assert_eq!(phi[0] as usize, b1, "{g}");
        let kernel = holonomy_from_cohomology(&g).unwrap().kernel.len();
        let a2 = closed_hilbert(&g, 2).unwrap().coeffs[2] as usize;
        assert_eq!(phi[1] as usize, kernel, "{g}");
        assert_eq!(kernel, b1 * (b1 - 1) / 2 - a2, "{g}");
    }
}

/// `I ⊆ V⊗V` is spanned by the symmetric tensors and the exterior relations,
/// and its annihilator has dimension `n² − dim I = dim A²`.
#[test]
fn dual_relations_are_complementary() {
    for g in koszul_groups().into_iter().chain([GroupId::welded(4)]) {
        let n = g.b1();
        let a2 = closed_hilbert(&g, 2).unwrap().coeffs[2] as usize;
        let exterior = cohomology_presentation(&g).unwrap().relation_rank::<Q>();
        let dim_i = n * (n + 1) / 2 + exterior;
        let dual = quadratic_dual(&g).unwrap();
        assert_eq!(dim_i + relation_rank(&dual), n * n, "{g}");
        assert_eq!(relation_rank(&dual), a2, "{g}");
        let gr = gr_presentation(&g).unwrap().to_associative::<Q>().unwrap();
        assert!(same_quadratic_algebra(&gr, &dual).unwrap(), "{g}");
    }
}

#[test]
fn witness_reports_the_first_deviation() {
    let g = GroupId::pure_braid(3);
    let mut h = hilbert_enveloping(&g, 5).unwrap();
    assert_eq!(koszul_witness_from(&g, &h).unwrap(), None);
    h[4] += 1;
    let dev = koszul_witness_from(&g, &h).unwrap().expect("deviation");
    assert_eq!(dev.degree, 4);
    assert!(koszul_witness_from(&g, &h[..2]).is_err());
}

#[test]
fn formula_route_refuses_non_koszul_rings() {
    assert!(lcs_ranks(&GroupId::welded(4), 5, LcsMethod::FormulaInversion).is_err());
}

#[test]
fn welded_symmetry_reproduces_the_full_hilbert_function() {
    for (n, d) in [(2, 6), (3, 6), (4, 7)] {
        let g = GroupId::welded(n);
        assert!(symmetric_grading(&g).is_some());
        let a = gr_presentation(&g).unwrap().to_associative::<Q>().unwrap();
        assert_eq!(
            hilbert_enveloping(&g, d).unwrap(),
            hilbert_quadratic_algebra(&a, d).unwrap(),
            "wP{n}"
        );
    }
    assert!(symmetric_grading(&GroupId::virtual_pure(4)).is_none());
}
