use std::collections::BTreeSet;

use regmatch::enumerate::{enumerate_2regular, enumerate_omega, scan_polynomials, OmegaFlavor};
use regmatch::families::{
    extremal_2regular, extremal_cubic, extremal_omega, identify, parse_family, Atom, FamilyError,
    FamilySpec, GraphMode, Side, TwoRegularFlavor,
};
use regmatch::matchpoly::matching_polynomial;
use regmatch::MatchingPolynomial;

fn spec(text: &str) -> FamilySpec {
    parse_family(text, GraphMode::Multi).unwrap()
}

fn set(texts: &[&str]) -> BTreeSet<FamilySpec> {
    texts.iter().map(|t| spec(t)).collect()
}

#[test]
fn parsing() {
    let k = spec("K3,3*2");
    assert_eq!(k.vertex_count(), 12);
    assert_eq!(k.realize().connected_components().len(), 2);
    assert_eq!(
        spec("P3 + C5"),
        FamilySpec::new()
            .with(Atom::Path(3), 1)
            .with(Atom::Cycle(5), 1)
    );
    assert_eq!(spec(" P3+C5 "), spec("C5 + P3"));
    assert_eq!(spec("H3*4").realize().edge_slots(), 12);
    assert_eq!(spec("C4*2 + C4"), spec("C4*3"));
}

#[test]
fn parse_errors_carry_columns() {
    let err = |t: &str, mode| parse_family(t, mode).unwrap_err();
    assert!(matches!(
        err("P1", GraphMode::Multi),
        FamilyError::Semantic { column: 1, .. }
    ));
    assert!(matches!(
        err("P3 + C2", GraphMode::Simple),
        FamilyError::Semantic { column: 6, .. }
    ));
    assert!(matches!(
        err("H2", GraphMode::Simple),
        FamilyError::Semantic { .. }
    ));
    assert!(matches!(
        err("P3 +", GraphMode::Simple),
        FamilyError::Syntax { .. }
    ));
    assert!(matches!(
        err("X4", GraphMode::Simple),
        FamilyError::Syntax { column: 1, .. }
    ));
    assert!(matches!(
        err("P3*0", GraphMode::Simple),
        FamilyError::Semantic { column: 4, .. }
    ));
    assert!(matches!(
        err("M7", GraphMode::Simple),
        FamilyError::Semantic { .. }
    ));
    assert!(parse_family("C2", GraphMode::Multi).is_ok());
}

#[test]
fn display_round_trips_and_identify_inverts_realize() {
    for text in [
        "P3*2 + C5",
        "K3,3*2 + Q3",
        "H3*4",
        "G1 + M10",
        "C2 + P2",
        "K4,4",
        "M12 + C7*3",
    ] {
        let s = spec(text);
        assert_eq!(spec(&s.to_string()), s, "{text}");
        let g = s.realize();
        assert!(identify(&g).unwrap().realize().is_isomorphic(&g), "{text}");
    }
}

#[test]
fn identify_names_components() {
    assert_eq!(
        identify(&spec("P3*2 + C5").realize()),
        Some(spec("P3*2 + C5"))
    );
    assert_eq!(
        identify(&spec("G1 + M10").realize()),
        Some(spec("G1 + M10"))
    );
    let paw = regmatch::Multigraph::from_pairs(4, [(0, 1), (1, 2), (2, 0), (2, 3)]).unwrap();
    assert_eq!(identify(&paw), None);
}

#[test]
fn named_graphs() {
    let m10 = Atom::Mobius(10).realize();
    assert_eq!(m10.vertex_count(), 10);
    assert!(m10.is_regular(3) && m10.is_bipartite() && m10.is_connected());
    assert_eq!(
        matching_polynomial(&Atom::G1.realize()),
        MatchingPolynomial::from_u64s(&[1, 15, 75, 145, 96, 12])
    );
    assert_eq!(
        matching_polynomial(&Atom::MultiEdge(2).realize()),
        MatchingPolynomial::from_u64s(&[1, 2])
    );
    assert_eq!(
        matching_polynomial(&spec("H3*2").realize()),
        MatchingPolynomial::from_u64s(&[1, 6, 9])
    );
    let q3 = Atom::Hypercube3.realize();
    assert!(q3.is_regular(3) && q3.is_bipartite());
}

#[test]
fn two_regular_examples() {
    let one = |n, side, flavor| {
        extremal_2regular(n, side, flavor)
            .unwrap()
            .into_iter()
            .collect::<BTreeSet<_>>()
    };
    assert_eq!(one(8, Side::Max, TwoRegularFlavor::Simple), set(&["C4*2"]));
    assert_eq!(one(9, Side::Min, TwoRegularFlavor::Simple), set(&["C3*3"]));
    assert_eq!(
        one(8, Side::Min, TwoRegularFlavor::SimpleBipartite),
        set(&["C8"])
    );
    assert_eq!(
        one(10, Side::Max, TwoRegularFlavor::MultiBipartite),
        set(&["H2*5"])
    );
    assert!(extremal_2regular(7, Side::Max, TwoRegularFlavor::SimpleBipartite).is_err());
}

#[test]
fn omega_examples() {
    let get = |n, k, side, bip| {
        extremal_omega(n, k, side, bip)
            .unwrap()
            .into_iter()
            .collect::<BTreeSet<_>>()
    };
    assert_eq!(
        get(8, 2, Side::Min, false),
        set(&["P3 + P5", "P3 + P2 + C3"])
    );
    assert_eq!(get(8, 2, Side::Max, false), set(&["P2*2 + C4"]));
    assert_eq!(
        get(9, 2, Side::Max, true),
        set(&["P2 + P3 + C4", "P2 + P7"])
    );
    assert!(extremal_omega(5, 3, Side::Max, false).is_err());
}

fn codes(specs: &[FamilySpec]) -> BTreeSet<regmatch::CanonicalCode> {
    specs.iter().map(|s| s.realize().canonical_code()).collect()
}

fn scan(specs: &[FamilySpec]) -> regmatch::enumerate::ExtremumReport {
    let entries: Vec<_> = specs
        .iter()
        .map(|s| (s.realize().canonical_code(), s.polynomial()))
        .collect();
    scan_polynomials(&entries).unwrap()
}

#[test]
fn builders_agree_with_scans_beyond_the_acceptance_range() {
    for n in 15..=20 {
        for flavor in [
            TwoRegularFlavor::Simple,
            TwoRegularFlavor::SimpleBipartite,
            TwoRegularFlavor::MultiBipartite,
        ] {
            if flavor != TwoRegularFlavor::Simple && n % 2 == 1 {
                continue;
            }
            let report = scan(&enumerate_2regular(n, flavor));
            let got: BTreeSet<_> = report.coefficientwise_max.iter().cloned().collect();
            assert_eq!(
                got,
                codes(&extremal_2regular(n, Side::Max, flavor).unwrap()),
                "{flavor:?} {n}"
            );
            let got: BTreeSet<_> = report.coefficientwise_min.iter().cloned().collect();
            assert_eq!(
                got,
                codes(&extremal_2regular(n, Side::Min, flavor).unwrap()),
                "{flavor:?} {n}"
            );
        }
        for k in 1..=n / 2 {
            for (bip, flavor) in [
                (false, OmegaFlavor::Simple),
                (true, OmegaFlavor::SimpleBipartite),
            ] {
                let report = scan(&enumerate_omega(n, k, flavor).unwrap());
                let got: BTreeSet<_> = report.coefficientwise_max.iter().cloned().collect();
                assert_eq!(
                    got,
                    codes(&extremal_omega(n, k, Side::Max, bip).unwrap()),
                    "max {n} {k} {bip}"
                );
                let got: BTreeSet<_> = report.coefficientwise_min.iter().cloned().collect();
                assert_eq!(
                    got,
                    codes(&extremal_omega(n, k, Side::Min, bip).unwrap()),
                    "min {n} {k} {bip}"
                );
            }
        }
    }
}

#[test]
fn builder_outputs_have_the_right_degrees() {
    for n in 4..=24 {
        for k in 1..=n / 2 {
            for side in [Side::Min, Side::Max] {
                for bip in [false, true] {
                    for s in extremal_omega(n, k, side, bip).unwrap() {
                        let g = s.realize();
                        assert_eq!(g.vertex_count(), n);
                        let deg = g.degree_sequence();
                        assert_eq!(deg.iter().filter(|&&d| d == 1).count(), 2 * k);
                        assert!(deg.iter().all(|&d| d == 1 || d == 2));
                        assert!(g.is_simple());
                        assert!(!bip || g.is_bipartite());
                    }
                }
            }
        }
    }
}

#[test]
fn cubic_family() {
    assert_eq!(extremal_cubic(12).unwrap(), vec![spec("K3,3*2")]);
    assert_eq!(extremal_cubic(14).unwrap(), vec![spec("K3,3 + Q3")]);
    assert_eq!(
        extremal_cubic(16)
            .unwrap()
            .into_iter()
            .collect::<BTreeSet<_>>(),
        set(&["K3,3 + G1", "K3,3 + M10"])
    );
    assert!(extremal_cubic(4).is_err());
    assert!(extremal_cubic(11).is_err());
}
