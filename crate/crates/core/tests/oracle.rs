//! Library homology and predictors against the brute-force oracle.

mod common;

use common::{reduced_betti, reduced_euler, Field};
use indcx::complex::{independence_complex, Limits};
use indcx::homology::{betti_of_graph, Coefficients};
use indcx::homotopy::predict;
use indcx::verify::graph_from_mask;
use indcx::{Family, Graph};

fn library(g: &Graph, coeff: Coefficients) -> std::collections::BTreeMap<i64, u64> {
    betti_of_graph(g, coeff, &Limits::default()).unwrap().nonzero()
}

#[test]
fn oracle_self_check() {
    // one vertex: a point; K_2: S^0; empty graph: S^-1
    let single = graph_from_mask(1, 0);
    assert!(reduced_betti(&single, Field::Gf2).is_empty());
    assert_eq!(reduced_betti(&graph_from_mask(2, 1), Field::Gf2), [(0, 1)].into());
    assert_eq!(reduced_betti(&graph_from_mask(0, 0), Field::Rationals), [(-1, 1)].into());
    // C4: the independent pairs {1,3} and {2,4} are two disjoint segments
    let c4 = graph_from_mask(4, 0b101101);
    assert_eq!(c4.edge_count(), 4);
    assert_eq!(reduced_betti(&c4, Field::Rationals), [(0, 1)].into());
    // K_3 x K_3 has four circles
    let k33 = Family::Product { m: 3, n: 3 }.graph().unwrap();
    assert_eq!(reduced_betti(&k33, Field::Rationals), [(1, 4)].into());
}

#[test]
fn all_graphs_on_five_vertices_match() {
    for n in 0..=5usize {
        for mask in 0..1u64 << (n * n.saturating_sub(1) / 2) {
            let g = graph_from_mask(n, mask);
            let z2 = reduced_betti(&g, Field::Gf2);
            assert_eq!(library(&g, Coefficients::Mod2), z2, "n={n} mask={mask:b}");
            assert_eq!(library(&g, Coefficients::Integer), reduced_betti(&g, Field::Rationals));
            let k = independence_complex(&g, None, &Limits::default()).unwrap();
            assert_eq!(k.euler_characteristic_reduced(), reduced_euler(&g));
        }
    }
}

#[test]
fn small_family_members_match_the_oracle() {
    let specs = [
        "product 2 2",
        "product 2 5",
        "product 3 3",
        "product 3 4",
        "product 4 4",
        "kn_lr 2 3",
        "kn_lr 3 3",
        "kn_lr 3 4",
        "kn_lr 2 6",
        "gadget 3 1",
        "gadget 3 2",
        "gadget 3 3",
        "gadget 4 2",
        "mycielskian 3 2",
        "mycielskian 3 3",
        "mycielskian 4 3",
        "mycielskian 3 5",
        "cycle_ladder 3 1",
        "cycle_ladder 4 2",
        "cycle_ladder 5 3",
        "path 10",
        "cycle 12",
        "multi_k2_product 3 3",
        "conjecture_k2k3kn 2",
    ];
    for spec in specs {
        let f: Family = spec.parse().unwrap();
        let g = f.graph().unwrap();
        let oracle = reduced_betti(&g, Field::Rationals);
        assert_eq!(oracle, reduced_betti(&g, Field::Gf2), "{spec}: oracle sees 2-torsion");
        assert_eq!(predict(&f).unwrap().homotopy.betti(), oracle, "{spec}");
        assert_eq!(library(&g, Coefficients::Integer), oracle, "{spec}");
    }
}
