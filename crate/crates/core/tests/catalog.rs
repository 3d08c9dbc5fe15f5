use braidlab::catalog::{
    abelianize, all_families, closed_hilbert, cohomology_presentation, gr_presentation,
    group_presentation, GroupId,
};
use braidlab::lcs::hilbert_cohomology;
use braidlab::Q;

fn catalog(nmax: usize) -> Vec<GroupId> {
    all_families()
        .into_iter()
        .flat_map(|f| (2..=nmax).map(move |n| GroupId::new(f, n).unwrap()))
        .collect()
}

fn choose2(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

#[test]
fn presentations_have_b1_generators() {
    for g in catalog(5) {
        assert_eq!(
            cohomology_presentation(&g).unwrap().generators.len(),
            g.b1(),
            "{g}"
        );
        assert_eq!(gr_presentation(&g).unwrap().generators.len(), g.b1(), "{g}");
        assert_eq!(g.labels("x").len(), g.b1());
    }
}

#[test]
fn degree_two_matches_the_closed_form() {
    for g in catalog(5) {
        let closed = closed_hilbert(&g, 2).unwrap().coeffs;
        assert_eq!(
            hilbert_cohomology(&g, 2)
                .unwrap()
                .iter()
                .map(|&c| c as i128)
                .collect::<Vec<_>>(),
            closed,
            "{g}"
        );
        let rank = cohomology_presentation(&g).unwrap().relation_rank::<Q>();
        assert_eq!((choose2(g.b1()) - rank) as i128, closed[2], "{g}");
    }
}

/// Holonomy relations are dual to the cup product, so there are `dim A²` of them.
#[test]
fn gr_relations_count_dim_a2() {
    for g in catalog(4) {
        let a2 = closed_hilbert(&g, 2).unwrap().coeffs[2] as usize;
        assert_eq!(gr_presentation(&g).unwrap().relation_rank::<Q>(), a2, "{g}");
    }
}

#[test]
fn group_relators_are_commutators() {
    for g in catalog(5)
        .into_iter()
        .filter(|g| g.has_group_presentation())
    {
        let p = group_presentation(&g).unwrap();
        p.validate().unwrap();
        assert_eq!(p.generators.len(), g.b1(), "{g}");
        assert!(p.commutator_relators, "{g}");
        for r in &p.relators {
            assert!(abelianize(r, g.b1()).iter().all(|&e| e == 0), "{g}: {r:?}");
        }
    }
}

#[test]
fn group_ids_round_trip_through_names() {
    for g in catalog(6) {
        assert_eq!(g.to_string().parse::<GroupId>().unwrap(), g);
    }
    assert!("Q:3".parse::<GroupId>().is_err());
    assert!("P:0".parse::<GroupId>().is_err());
}
