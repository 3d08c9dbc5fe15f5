//! One line per acceptance criterion. Run with `--nocapture` to see them.
//!
//! Criterion 4 includes a degree-8 computation of a few minutes; set
//! `BRAIDLAB_QUICK=1` to skip it.

use std::sync::OnceLock;

use braidlab::algebra::{ExtElement, NcPolynomial, SeriesTrunc, Word};
use braidlab::catalog::{gr_presentation, GroupId};
use braidlab::groebner::nc_groebner_truncated;
use braidlab::lcs::{witt_inversion, witt_product};
use braidlab::{Scalar, Q};
use braidlab_cli::emit;
use braidlab_cli::record::{Status, VerdictRecord};
use braidlab_cli::suite::{run_verify, VerifySuiteConfig, EXTENDED_DEGREE};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn default_run() -> &'static [VerdictRecord] {
    static RECORDS: OnceLock<Vec<VerdictRecord>> = OnceLock::new();
    RECORDS.get_or_init(|| run_verify(&VerifySuiteConfig::default()).expect("suite runs"))
}

fn select<'a>(records: &'a [VerdictRecord], prefixes: &[&str]) -> Vec<&'a VerdictRecord> {
    records
        .iter()
        .filter(|r| prefixes.iter().any(|p| r.id.starts_with(p)))
        .collect()
}

fn find<'a>(records: &'a [VerdictRecord], id: &str) -> &'a VerdictRecord {
    records
        .iter()
        .find(|r| r.id == id)
        .unwrap_or_else(|| panic!("no record {id}"))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Verdict {
    Pass,
    Fail,
    Skipped,
}

fn report(n: usize, v: Verdict, detail: impl AsRef<str>) -> Verdict {
    let tag = match v {
        Verdict::Pass => "PASS",
        Verdict::Fail => "FAIL",
        Verdict::Skipped => "SKIPPED",
    };
    println!("criterion {n:>2} [{tag}] {}", detail.as_ref());
    v
}

/// Passes when every record passes; otherwise lists the failing ids.
fn all_pass(n: usize, rs: &[&VerdictRecord], what: &str) -> Verdict {
    assert!(!rs.is_empty(), "criterion {n} selected no records");
    let bad: Vec<String> = rs
        .iter()
        .filter(|r| r.status != Status::Pass)
        .map(|r| format!("{} ({} vs {})", r.id, r.expected, r.computed))
        .collect();
    if bad.is_empty() {
        report(n, Verdict::Pass, format!("{what}: {} checks", rs.len()))
    } else {
        report(n, Verdict::Fail, format!("{what}: {}", bad.join(", ")))
    }
}

fn criterion_4() -> Verdict {
    let records = default_run();
    let p4 = find(records, "koszul.P:4");
    assert_eq!(
        p4.status,
        Status::Pass,
        "koszul_witness(P4, 6) should be none"
    );
    if std::env::var_os("BRAIDLAB_QUICK").is_some() {
        return report(
            4,
            Verdict::Skipped,
            "BRAIDLAB_QUICK set: phi_8(wP4) and koszul_witness(wP4, 8) not run; koszul_witness(P4, 6) = none passed",
        );
    }
    let cfg = VerifySuiteConfig {
        groups: Some(vec![GroupId::welded(4)]),
        degree: EXTENDED_DEGREE,
        include_extended: true,
        ..VerifySuiteConfig::default()
    };
    let ext = run_verify(&cfg).expect("extended suite runs");
    let rs = vec![
        find(&ext, "lcs.anomaly.wP:4"),
        find(&ext, "koszul.wP:4"),
        p4,
    ];
    if rs.iter().any(|r| r.status == Status::Skipped) {
        return report(4, Verdict::Skipped, format!("over budget: {}", rs[0].note));
    }
    all_pass(
        4,
        &rs,
        "phi_8(wP4) = 24490, Koszul duality first fails in degree 8",
    )
}

/// The closed form for wP_4 is conjectural; the computed value differs at k = 4.
fn criterion_8() -> Verdict {
    let records = default_run();
    let wp4 = find(records, "chen.closed.wP:4");
    assert_eq!(
        (wp4.expected.as_str(), wp4.computed.as_str()),
        ("78,120", "81,120")
    );
    let rest: Vec<_> = select(records, &["chen.closed."])
        .into_iter()
        .filter(|r| r.id != wp4.id)
        .collect();
    assert!(
        rest.iter().all(|r| r.status == Status::Pass),
        "closed forms other than wP4 must hold"
    );
    report(
        8,
        Verdict::Fail,
        format!(
            "{} closed forms hold; wP4 theta_4,theta_5 = {} against (k-1)*6+(k^2-1)*4 = {} (conjectural form)",
            rest.len(),
            wp4.computed,
            wp4.expected
        ),
    )
}

fn criterion_11() -> Verdict {
    let records = default_run();
    let order = ["P:4", "wP:4", "wP+:4", "vP:3", "vP+:4"];
    let yes_no = |s: &str| if s == "yes" { "Yes" } else { "No" };
    let rs: Vec<_> = order
        .iter()
        .map(|g| find(records, &format!("chen.verdict.{g}")))
        .collect();
    let expected: Vec<_> = rs.iter().map(|r| yes_no(&r.expected)).collect();
    let computed: Vec<_> = rs.iter().map(|r| yes_no(&r.computed)).collect();
    assert_eq!(expected, ["Yes", "Yes", "No", "No", "No"]);
    assert_eq!(computed, ["Yes", "No", "No", "No", "No"]);
    let v = if expected == computed {
        Verdict::Pass
    } else {
        Verdict::Fail
    };
    report(
        11,
        v,
        format!(
            "verdicts for P4, wP4, wP4+, vP3, vP4+: expected ({}), computed ({}); wP4 follows from criterion 8",
            expected.join(", "),
            computed.join(", ")
        ),
    )
}

fn witt_round_trips() -> bool {
    let mut rng = StdRng::seed_from_u64(12);
    (0..50).all(|_| {
        let d = rng.gen_range(2..=8);
        let mut c = vec![1i64];
        c.extend((0..d).map(|_| rng.gen_range(-25..=25)));
        let p = SeriesTrunc::<Q>::from_i64(&c, d);
        witt_inversion(&p)
            .map(|phi| witt_product(&phi, d) == p)
            .unwrap_or(false)
    })
}

fn exterior_laws() -> bool {
    let mut rng = StdRng::seed_from_u64(13);
    let n = 6;
    let mut homogeneous = |deg: u32| {
        let mut x = ExtElement::<Q>::zero(n);
        for _ in 0..3 {
            let mask = loop {
                let m = rng.gen_range(0u64..1 << n);
                if m.count_ones() == deg {
                    break m;
                }
            };
            x.add_term(mask, Q::of(rng.gen_range(-3..=3)));
        }
        x
    };
    (0..40).all(|t| {
        let (p, q, r) = (t % 3 + 1, (t / 3) % 3, 1);
        let (a, b, c) = (homogeneous(p), homogeneous(q), homogeneous(r));
        let assoc = a.multiply(&b).unwrap().multiply(&c).unwrap()
            == a.multiply(&b.multiply(&c).unwrap()).unwrap();
        let sign = if p * q % 2 == 0 { Q::of(1) } else { Q::of(-1) };
        assoc && a.multiply(&b).unwrap() == b.multiply(&a).unwrap().scale(&sign)
    })
}

fn normal_form_idempotent() -> bool {
    let gb = nc_groebner_truncated(
        &gr_presentation(&GroupId::pure_braid(4))
            .unwrap()
            .to_associative::<Q>()
            .unwrap(),
        5,
    )
    .unwrap();
    let mut rng = StdRng::seed_from_u64(14);
    (0..50).all(|_| {
        let p = NcPolynomial::from_terms((0..4).map(|_| {
            let len = rng.gen_range(0..=5);
            let w: Vec<u8> = (0..len).map(|_| rng.gen_range(0..6)).collect();
            (Word::from_slice(&w), Q::of(rng.gen_range(-4..=4)))
        }));
        let once = gb.normal_form(&p);
        gb.normal_form(&once) == once
    })
}

fn verify_bytes_stable() -> bool {
    let cfg = VerifySuiteConfig {
        groups: Some(vec![
            GroupId::pure_braid(4),
            GroupId::virtual_plus(3),
            GroupId::welded(3),
        ]),
        seed: 9,
        ..VerifySuiteConfig::default()
    };
    let a = emit::json(&run_verify(&cfg).unwrap());
    let b = emit::json(&run_verify(&VerifySuiteConfig { jobs: 1, ..cfg }).unwrap());
    a == b
}

fn criterion_12() -> Verdict {
    let checks = [
        ("Witt round trip on 50 series", witt_round_trips()),
        ("exterior associativity and signs", exterior_laws()),
        ("normal-form idempotence", normal_form_idempotent()),
        ("verify bytes across runs", verify_bytes_stable()),
    ];
    let bad: Vec<_> = checks.iter().filter(|c| !c.1).map(|c| c.0).collect();
    if bad.is_empty() {
        report(12, Verdict::Pass, checks.map(|c| c.0).join("; "))
    } else {
        report(12, Verdict::Fail, bad.join("; "))
    }
}

#[test]
fn acceptance() {
    let r = default_run();
    let results = [
        all_pass(
            1,
            &select(r, &["hilbert."]),
            "Hilbert series of every family for n <= 5, vP+ printed row reported",
        ),
        all_pass(
            2,
            &select(r, &["lcs.formula.P:4", "lcs.prediction.wP:4"]),
            "LCS ranks from the closed forms",
        ),
        all_pass(
            3,
            &["P:3", "P:4", "wP+:3", "wP+:4", "vP:3", "vP+:3", "vP+:4"]
                .map(|g| find(r, &format!("lcs.enveloping.{g}"))),
            "enveloping algebra agrees with the formula through degree 6",
        ),
        criterion_4(),
        all_pass(
            5,
            &select(
                r,
                &[
                    "resonance.components.",
                    "resonance.verify.",
                    "resonance.sample.P:4",
                ],
            ),
            "resonance components of P4, P5, wP4, wP+3..5 with 500 sampled points of H^1(P4)",
        ),
        all_pass(
            6,
            &[find(r, "resonance.whole.vP:3")],
            "R1(vP3) = H^1 on 100 points",
        ),
        all_pass(
            7,
            &select(
                r,
                &[
                    "resonance.ideal.vP+:4",
                    "resonance.zeros.vP+:4",
                    "resonance.obstruction.vP+:4",
                ],
            ),
            "vP4+ cubics, common zeros and nonlinear witness",
        ),
        criterion_8(),
        all_pass(
            9,
            &select(r, &["chen.series.", "chen.table."]),
            "Fox calculus Chen ranks against generating functions",
        ),
        all_pass(
            10,
            &select(r, &["chen.cross.", "chen.low."]),
            "holonomy vs Fox ranks and theta_k = phi_k for k = 2, 3",
        ),
        criterion_11(),
        criterion_12(),
    ];
    for (i, v) in results.iter().enumerate() {
        let n = i + 1;
        match n {
            4 if std::env::var_os("BRAIDLAB_QUICK").is_some() => {
                assert_eq!(*v, Verdict::Skipped, "criterion 4")
            }
            8 | 11 => assert_eq!(*v, Verdict::Fail, "criterion {n} is a known discrepancy"),
            _ => assert_eq!(*v, Verdict::Pass, "criterion {n}"),
        }
    }
}
