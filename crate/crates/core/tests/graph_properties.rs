mod common;

use common::graph_strategy;
use mis_extremal_core::{Graph, VertexSet};
use proptest::prelude::*;

proptest! {
    #[test]
    fn complement_is_an_involution(g in graph_strategy(20)) {
        let c = g.complement();
        prop_assert!(c.invariants_hold());
        prop_assert_eq!(c.edge_count() + g.edge_count(), g.order() * g.order().saturating_sub(1) / 2);
        prop_assert_eq!(c.complement(), g);
    }

    #[test]
    fn induced_on_everything_is_identity(g in graph_strategy(20)) {
        prop_assert_eq!(g.induced_subgraph(g.vertices()).unwrap(), g);
    }

    #[test]
    fn delete_vertex_is_induced_on_the_rest(g in graph_strategy(16), pick in any::<prop::sample::Index>()) {
        prop_assume!(g.order() > 0);
        let v = pick.index(g.order());
        let del = g.delete_vertex(v).unwrap();
        prop_assert!(del.invariants_hold());
        prop_assert_eq!(&del, &g.induced_subgraph(g.vertices().without(v)).unwrap());
        prop_assert_eq!(del.edge_count(), g.edge_count() - g.degree(v).unwrap());
    }

    #[test]
    fn induced_subgraph_keeps_exactly_internal_edges(g in graph_strategy(16), mask in any::<u64>()) {
        let keep = VertexSet::from_bits(mask) & g.vertices();
        let sub = g.induced_subgraph(keep).unwrap();
        let old: Vec<usize> = keep.iter().collect();
        prop_assert_eq!(sub.order(), old.len());
        for i in 0..old.len() {
            for j in 0..old.len() {
                prop_assert_eq!(sub.has_edge(i, j), g.has_edge(old[i], old[j]));
            }
        }
    }

    #[test]
    fn disjoint_union_degrees_add_up(a in graph_strategy(12), b in graph_strategy(12)) {
        let u = a.disjoint_union(&b).unwrap();
        prop_assert!(u.invariants_hold());
        prop_assert_eq!(u.order(), a.order() + b.order());
        prop_assert_eq!(u.edge_count(), a.edge_count() + b.edge_count());
        for v in 0..a.order() {
            prop_assert_eq!(u.degree(v).unwrap(), a.degree(v).unwrap());
        }
        for v in 0..b.order() {
            prop_assert_eq!(u.degree(a.order() + v).unwrap(), b.degree(v).unwrap());
        }
    }

    #[test]
    fn from_edges_round_trips(g in graph_strategy(20)) {
        let edges: Vec<(usize, usize)> = g.edges().collect();
        prop_assert!(edges.windows(2).all(|w| w[0] < w[1]));
        prop_assert_eq!(Graph::from_edges(g.order(), edges).unwrap(), g);
    }

    #[test]
    fn min_degree_is_the_minimum(g in graph_strategy(20)) {
        prop_assume!(g.order() > 0);
        let d = g.min_degree().unwrap();
        let v = g.min_degree_vertex().unwrap();
        prop_assert_eq!(g.degree(v).unwrap(), d);
        for u in 0..g.order() {
            prop_assert!(g.degree(u).unwrap() >= d);
            if u < v {
                prop_assert!(g.degree(u).unwrap() > d);
            }
        }
    }
}

#[test]
fn min_degree_turan_7_3() {
    // parts 2, 2, 3: the vertices of the large part miss 2 others
    let g = mis_extremal_core::build_turan(7, 3).unwrap();
    assert_eq!(g.min_degree().unwrap(), 4);
}
