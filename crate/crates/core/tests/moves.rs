mod common;

use common::*;
use leavitt_core::contraction::contract;
use leavitt_core::graph::{canonical_isomorphic, parse_graph, Graph, MultiGraph, Multiplicity, Rename};
use leavitt_core::moves::{
    collapse_segment, desingularise_truncated, in_delay, truncate, DelayVector, Fixture, FixtureName, MoveError,
};
use leavitt_core::Algebra;
use proptest::prelude::*;

fn bundle_graph(m: Multiplicity) -> MultiGraph {
    let base = Graph::new("F", ["v", "w"], Vec::<(&str, &str, &str)>::new()).unwrap();
    MultiGraph::new(base, [("b", "w", "v", m)]).unwrap()
}

#[test]
fn single_edge_delay() {
    let f = single_edge();
    let d = DelayVector::parse(&f, "vertex w 1\nedge e 1\n").unwrap();
    let moved = in_delay(&f, &d).unwrap();
    assert_eq!(
        moved.graph.to_text(),
        "graph one_delayed\nvertex v#0\nvertex w#0\nvertex w#1\nedge e : w#1 -> v#0\nedge w~1 : w#0 -> w#1\n"
    );
    let res = contract(&Algebra::new(moved.graph.clone(), z()), &moved.g0).unwrap();
    assert!(canonical_isomorphic(res.graph(), &f, &moved.rename).unwrap());
}

#[test]
fn delay_vector_errors() {
    let f = single_edge();
    let bad = DelayVector::parse(&f, "edge e 2\n").unwrap();
    assert!(matches!(in_delay(&f, &bad), Err(MoveError::DelayInvariant { .. })));
    assert!(matches!(DelayVector::parse(&f, "vertex w\n"), Err(MoveError::DelayFile { line: 1, .. })));
    assert!(DelayVector::parse(&f, "vertex q 1\n").is_err());
    let d = DelayVector::parse(&f, "# comment\n\nvertex w 3 # trailing\n").unwrap();
    assert_eq!(d.vertex(f.vertex("w").unwrap()), 3);
}

#[test]
fn ex53_shape() {
    let fx = Fixture::new(FixtureName::Ex53, 3).unwrap();
    let g = &fx.graph;
    assert_eq!(g.vertex_count(), 4);
    assert_eq!(g.edge_count(), 5);
    assert_eq!(fx.expected.edge_count(), 3);
    assert!(fx.expected.edge_triples().all(|(_, s, r)| s == "w" && r == "v"));
}

#[test]
fn desingularisation_shapes() {
    let f = bundle_graph(Multiplicity::Infinite);
    let one = desingularise_truncated(&f, 1).unwrap();
    assert_eq!(one.graph.edge_count(), 1);
    assert!(desingularise_truncated(&f, 0).is_err());
    let four = desingularise_truncated(&f, 4).unwrap();
    let g = &four.graph;
    assert_eq!(g.vertex_count(), 5);
    assert_eq!(g.edge_count(), 7);
    // the source w keeps no head
    assert!(g.in_edges(g.vertex("w").unwrap()).is_empty());
    let fx = Fixture::new(FixtureName::Ex52, 4).unwrap();
    assert_eq!(fx.graph, g.renamed(fx.graph.name()));
}

#[test]
fn collapse_examples() {
    let par = parallel();
    let alg = Algebra::new(par.clone(), z());
    let (_, res) = collapse_segment(&alg, &Default::default()).unwrap();
    let mut rename = Rename::identity(&par);
    rename.edges = rename.edges.keys().map(|e| (format!("c_{e}"), e.clone())).collect();
    assert!(canonical_isomorphic(res.graph(), &par, &rename).unwrap());

    let pt = Graph::new("pt", ["u", "t", "v"], [("a", "t", "v"), ("b", "u", "t")]).unwrap();
    let alg = Algebra::new(pt.clone(), z());
    let (report, res) = collapse_segment(&alg, &pt.vertex_set(&["t"]).unwrap()).unwrap();
    assert!(report.passed());
    assert_eq!(res.graph().edge_triples().collect::<Vec<_>>(), [("c_a/b", "u", "v")]);

    let fx = Fixture::new(FixtureName::Ex51, 3).unwrap();
    let tail: Vec<String> = (1..=3).map(|i| format!("u_{i}")).collect();
    let (_, res) = collapse_segment(&fx.algebra(z()), &fx.graph.vertex_set(&tail).unwrap()).unwrap();
    assert!(canonical_isomorphic(res.graph(), &fx.expected, &fx.rename).unwrap());

    // singular or cyclic segments are refused
    assert!(matches!(collapse_segment(&alg, &pt.vertex_set(&["u"]).unwrap()), Err(MoveError::NotCollapsible(_))));
    let l = Algebra::new(loop_graph(), z());
    assert!(matches!(collapse_segment(&l, &l.graph().all_vertices()), Err(MoveError::NotCollapsible(_))));
}

#[test]
fn fixtures_round_trip_for_all_depths() {
    for name in FixtureName::ALL {
        for depth in 2..=6 {
            let fx = Fixture::new(name, depth).unwrap();
            let res = contract(&fx.algebra(z()), &fx.g0).unwrap();
            assert!(canonical_isomorphic(res.graph(), &fx.expected, &fx.rename).unwrap(), "{name} {depth}");
            assert_eq!(res.to_text(), fx.expected_text().unwrap());
            assert_eq!(parse_graph(&fx.expected.to_text()).unwrap(), fx.expected);
        }
    }
    assert!(Fixture::new(FixtureName::Ex51, 1).is_err());
    assert!("EX54".parse::<FixtureName>().is_err());
    assert_eq!("EX52".parse::<FixtureName>().ok(), Some(FixtureName::Ex52));
}

#[test]
fn finite_bundles_only_expand() {
    let f = bundle_graph(Multiplicity::Finite(2));
    for k in 1..=4 {
        let moved = desingularise_truncated(&f, k).unwrap();
        let t = truncate(&f, k).unwrap();
        assert!(canonical_isomorphic(&moved.graph, &t, &Rename::identity(&moved.graph)).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn delays_contract_back(g in small_graph(4, 6), ds in proptest::collection::vec(0u32..3, 4), es in proptest::collection::vec(0u32..3, 6)) {
        let mut d = DelayVector::zero(&g);
        for v in g.vertices() {
            d.set_vertex(&g, g.vertex_name(v), ds[v.index()]).unwrap();
        }
        for e in g.edges() {
            let cap = d.vertex(g.source(e));
            d.set_edge(&g, g.edge_name(e), es[e.index()].min(cap)).unwrap();
        }
        let moved = in_delay(&g, &d).unwrap();
        prop_assert_eq!(parse_graph(&moved.graph.to_text()).unwrap(), moved.graph.clone());
        let res = contract(&Algebra::new(moved.graph.clone(), z()), &moved.g0).unwrap();
        prop_assert!(canonical_isomorphic(res.graph(), &g, &moved.rename).unwrap());
        prop_assert!(res.family_check().passed());
    }
}
