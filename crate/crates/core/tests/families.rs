mod common;

use common::*;
use eqlab::families::{generate, recognize, FamilyKind, FamilyLabel};
use eqlab::oracles::is_degree_equipartite;
use eqlab::{are_isomorphic, Graph};
use proptest::prelude::*;

#[test]
fn every_family_member_is_degree_equipartite() {
    for n in 1..=6 {
        for label in FamilyLabel::all_for(n) {
            let g = generate(label).unwrap();
            assert_eq!(g.order(), 2 * n);
            assert_eq!(g.regular_degree(), Some(label.kind.degree(n)), "{label}");
            assert!(is_degree_equipartite(&g).unwrap().holds, "{label}");
            assert!(naive_degree_equipartite(&g), "{label}");
            assert!(recognize(&g).labels.contains(&label), "{label}");
        }
    }
}

#[test]
fn complements_pair_up() {
    for n in 1..=8 {
        for label in FamilyLabel::all_for(n) {
            let g = generate(label).unwrap();
            assert!(are_isomorphic(
                &g.complement(),
                &generate(label.complement()).unwrap()
            ));
        }
    }
}

#[test]
fn order_eight_extras() {
    let two_c4 = generate(FamilyLabel::new(FamilyKind::TwoC4, 4).unwrap()).unwrap();
    assert_eq!(two_c4.connected_components().len(), 2);
    assert!(FamilyLabel::new(FamilyKind::TwoC4, 3).is_err());
    let k8 = Graph::complete(8).unwrap();
    let k8_minus = generate(FamilyLabel::new(FamilyKind::K8MinusTwoC4, 4).unwrap()).unwrap();
    assert_eq!(k8_minus.edge_count(), k8.edge_count() - 8);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn complement_is_an_involution(g in arb_graph(7..=8)) {
        prop_assert_eq!(g.complement().complement(), g);
    }

    #[test]
    fn recognition_is_complement_coherent(g in arb_graph(7..=8)) {
        let labels: Vec<_> = recognize(&g).labels.into_iter().map(FamilyLabel::complement).collect();
        let comp: Vec<_> = recognize(&g.complement()).labels.into_iter().collect();
        let mut labels = labels;
        labels.sort();
        prop_assert_eq!(labels, comp);
    }

    #[test]
    fn recognizer_agrees_with_definition(g in arb_even_graph(4)) {
        prop_assert_eq!(recognize(&g).in_characterization, naive_degree_equipartite(&g));
    }
}
