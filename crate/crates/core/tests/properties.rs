//! Randomized structural properties of graphs and the packing solvers.

use proptest::prelude::*;

use limpack::{graph6, solvers, Graph};

/// A random labeled graph on `1..=max_n` vertices.
fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (1..n).flat_map(|v| (0..v).map(move |u| (u, v)));
            let edges = pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e);
            Graph::from_edges(n, edges).expect("valid edges")
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn graph6_round_trips(g in graph(40)) {
        let text = graph6::emit(&g);
        prop_assert_eq!(graph6::parse(&text).unwrap(), g);
    }

    #[test]
    fn edge_list_round_trips(g in graph(20)) {
        prop_assert_eq!(Graph::parse_edge_list(&g.to_edge_list()).unwrap(), g);
    }

    #[test]
    fn complement_is_an_involution(g in graph(30)) {
        let c = g.complement();
        prop_assert_eq!(c.complement(), g.clone());
        prop_assert_eq!(g.max_degree() + c.min_degree(), g.n() - 1);
        prop_assert_eq!(g.edge_count() + c.edge_count(), g.n() * (g.n() - 1) / 2);
    }

    #[test]
    fn oracle_matches_branch_and_bound(g in graph(12), k in 1usize..5) {
        let oracle = solvers::limited_packing_oracle(&g, k).unwrap();
        let bb = solvers::limited_packing_bb(&g, k);
        prop_assert_eq!(oracle.value, bb.value);
        prop_assert!(solvers::is_k_limited_packing(&g, k, bb.witness));
        prop_assert_eq!(bb.witness.len(), bb.value);
        prop_assert_eq!(
            solvers::open_packing_oracle(&g).unwrap().value,
            solvers::open_packing_bb(&g).value
        );
    }

    #[test]
    fn packing_number_adds_over_disjoint_unions(g in graph(9), h in graph(9), k in 1usize..4) {
        let union = Graph::disjoint_union([&g, &h]).unwrap();
        let l = |x: &Graph| solvers::limited_packing_number(x, k).value;
        prop_assert_eq!(l(&union), l(&g) + l(&h));
    }

    #[test]
    fn relabeling_preserves_the_packing_number(g in graph(10), seed in any::<u64>(), k in 1usize..4) {
        let mut perm: Vec<usize> = (0..g.n()).collect();
        let mut state = seed;
        for i in (1..perm.len()).rev() {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (state >> 33) as usize % (i + 1));
        }
        let h = g.permuted(&perm);
        prop_assert_eq!(
            solvers::limited_packing_number(&g, k).value,
            solvers::limited_packing_number(&h, k).value
        );
    }
}
