mod common;

use common::*;
use eqlab::enumeration::enumerate_all;
use eqlab::spectral::{are_isospectral, characteristic_polynomial, edge_count_spectral_identity};
use eqlab::{are_isomorphic, Graph};
use num_bigint::BigInt;
use proptest::prelude::*;

#[test]
fn smallest_cospectral_pair() {
    let star = Graph::new(5, (1..5).map(|i| (0, i))).unwrap();
    let c4_k1 = Graph::new(5, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
    assert!(are_isospectral(&star, &c4_k1));
    assert!(!are_isomorphic(&star, &c4_k1));
}

#[test]
fn cospectral_classes_up_to_order_five() {
    // only the star/C4+K1 pair is cospectral and non-isomorphic
    let mut pairs = 0;
    for n in 1..=5 {
        let gs = enumerate_all(n).unwrap().into_graphs();
        for i in 0..gs.len() {
            for j in i + 1..gs.len() {
                if are_isospectral(&gs[i], &gs[j]) {
                    pairs += 1;
                }
            }
        }
    }
    assert_eq!(pairs, 1);
}

#[test]
fn low_coefficients() {
    for g in enumerate_all(6).unwrap().graphs() {
        let p = characteristic_polynomial(g);
        let d = p.degree();
        assert_eq!(p.coeff(d), BigInt::from(1));
        assert_eq!(p.coeff(d - 1), BigInt::from(0));
        assert_eq!(-p.coeff(d - 2), BigInt::from(g.edge_count()));
        assert!(edge_count_spectral_identity(g).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn isomorphic_implies_isospectral(
        (g, perm) in arb_graph(1..=10).prop_flat_map(|g| { let n = g.order(); (Just(g), arb_permutation(n)) })
    ) {
        let h = g.relabel(&perm).unwrap();
        prop_assert_eq!(characteristic_polynomial(&g), characteristic_polynomial(&h));
    }

    #[test]
    fn union_multiplies(g in arb_graph(0..=7), h in arb_graph(0..=7)) {
        let u = g.disjoint_union(&h).unwrap();
        prop_assert_eq!(
            characteristic_polynomial(&u),
            characteristic_polynomial(&g).mul(&characteristic_polynomial(&h))
        );
    }

    #[test]
    fn triangles_from_third_coefficient(g in arb_graph(3..=9)) {
        let p = characteristic_polynomial(&g);
        let d = p.degree();
        let n = g.order();
        let mut t = 0;
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    t += (g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c)) as i64;
                }
            }
        }
        prop_assert_eq!(-p.coeff(d - 3), BigInt::from(2 * t));
    }
}

/// C5 with every vertex replaced by two non-adjacent twins.
fn doubled_pentagon() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        let j = (i + 1) % 5;
        for s in 0..2 {
            for t in 0..2 {
                edges.push((2 * i + s, 2 * j + t));
            }
        }
    }
    Graph::new(10, edges).unwrap()
}

#[test]
fn doubled_pentagon_is_spectral_but_not_degree_equipartite() {
    use eqlab::oracles::{is_degree_equipartite, is_spectral_equipartite};
    let g = doubled_pentagon();
    assert_eq!(g.regular_degree(), Some(4));
    assert!(is_spectral_equipartite(&g).unwrap().holds);
    assert!(!is_degree_equipartite(&g).unwrap().holds);
    assert!(!eqlab::recognize(&g).in_characterization);
    assert_eq!(
        characteristic_polynomial(&g).to_string(),
        "x^10 - 20x^8 + 80x^6 - 64x^5"
    );
}

#[test]
fn order_ten_regular_exceptions() {
    use eqlab::enumeration::{enumerate_regular, search_property};
    use eqlab::oracles::is_degree_equipartite;
    use eqlab::{OracleConfig, Property};
    let mut exceptions = Vec::new();
    for k in 0..10 {
        let Ok(cat) = enumerate_regular(10, k) else {
            continue;
        };
        for (g, _) in search_property(
            &cat,
            Property::SpectralEquipartite,
            &OracleConfig::default(),
        )
        .unwrap()
        {
            if !is_degree_equipartite(&g).unwrap().holds {
                exceptions.push(g);
            }
        }
    }
    assert_eq!(exceptions.len(), 1);
    assert!(are_isomorphic(&exceptions[0], &doubled_pentagon()));
}
