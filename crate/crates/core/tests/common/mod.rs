#![allow(dead_code)]

use std::collections::BTreeMap;

use leavitt_core::graph::Graph;
use leavitt_core::{Algebra, Element, RingSpec};
use proptest::prelude::*;

pub fn loop_graph() -> Graph {
    Graph::new("loop", ["v"], [("a", "v", "v")]).unwrap()
}

pub fn parallel() -> Graph {
    Graph::new("par", ["v", "w"], [("e", "w", "v"), ("f", "w", "v")]).unwrap()
}

pub fn single_edge() -> Graph {
    Graph::new("one", ["v", "w"], [("e", "w", "v")]).unwrap()
}

pub fn isolated() -> Graph {
    Graph::new("iso", ["a", "b"], Vec::<(&str, &str, &str)>::new()).unwrap()
}

pub fn z() -> RingSpec {
    RingSpec::Integers
}

pub fn z4() -> RingSpec {
    RingSpec::modulo(4).unwrap()
}

/// Graph on `v0..` with edges `e0..` from index pairs `(src, rng)`.
pub fn indexed_graph(n: usize, edges: &[(usize, usize)]) -> Graph {
    let vs: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
    let es: Vec<(String, String, String)> =
        edges.iter().enumerate().map(|(i, &(s, r))| (format!("e{i}"), vs[s].clone(), vs[r].clone())).collect();
    Graph::new("rand", vs, es).unwrap()
}

/// Strategy for small random graphs: loops and parallel edges allowed.
pub fn small_graph(max_vertices: usize, max_edges: usize) -> impl Strategy<Value = Graph> {
    (1..=max_vertices).prop_flat_map(move |n| {
        proptest::collection::vec((0..n, 0..n), 0..=max_edges).prop_map(move |es| indexed_graph(n, &es))
    })
}

/// Brute-force closures over vertex bitmasks.
pub mod closure_oracle {
    use super::*;

    fn triples(g: &Graph) -> Vec<(usize, usize)> {
        let idx: BTreeMap<&str, usize> = g.vertex_names().enumerate().map(|(i, v)| (v, i)).collect();
        g.edge_triples().map(|(_, s, r)| (idx[s], idx[r])).collect()
    }

    pub fn is_hereditary(g: &Graph, h: u32) -> bool {
        triples(g).iter().all(|&(s, r)| h & (1 << r) == 0 || h & (1 << s) != 0)
    }

    pub fn is_saturated(g: &Graph, h: u32) -> bool {
        let es = triples(g);
        (0..g.vertex_count()).all(|v| {
            let ins: Vec<usize> = es.iter().filter(|e| e.1 == v).map(|e| e.0).collect();
            ins.is_empty() || !ins.iter().all(|&s| h & (1 << s) != 0) || h & (1 << v) != 0
        })
    }

    /// The unique minimal superset of `v` satisfying `closed`, found by
    /// checking every subset.
    fn minimal(g: &Graph, v: u32, closed: impl Fn(u32) -> bool) -> u32 {
        let n = g.vertex_count();
        let all: Vec<u32> = (0..(1u32 << n)).filter(|&s| s & v == v && closed(s)).collect();
        let best = *all.iter().min_by_key(|s| s.count_ones()).expect("the full set is closed");
        assert!(all.iter().all(|&s| s & best == best), "minimal closed superset is not unique");
        best
    }

    pub fn hereditary(g: &Graph, v: u32) -> u32 {
        minimal(g, v, |s| is_hereditary(g, s))
    }

    pub fn saturated_hereditary(g: &Graph, v: u32) -> u32 {
        minimal(g, v, |s| is_hereditary(g, s) && is_saturated(g, s))
    }

    pub fn names(g: &Graph, mask: u32) -> Vec<String> {
        g.vertex_names().enumerate().filter(|(i, _)| mask & (1 << i) != 0).map(|(_, v)| v.to_string()).collect()
    }
}

/// The representation of `L_Z(E)` on the free module over paths ending at
/// sources, written without reference to the library's normal forms.
/// Faithful when `E` is acyclic.
pub mod path_rep {
    use super::*;

    /// A path as (range vertex, edge names from the range end).
    pub type P = (String, Vec<String>);
    pub type Matrix = BTreeMap<(P, P), i64>;

    fn src_of(g: &Graph, p: &P) -> String {
        match p.1.last() {
            None => p.0.clone(),
            Some(e) => {
                let id = g.edge(e).unwrap();
                g.vertex_name(g.source(id)).to_string()
            }
        }
    }

    /// All paths whose source receives no edge. Requires an acyclic graph.
    pub fn basis(g: &Graph) -> Vec<P> {
        let mut out = Vec::new();
        let mut stack: Vec<P> = g
            .vertex_names()
            .filter(|v| g.in_edges(g.vertex(v).unwrap()).is_empty())
            .map(|v| (v.to_string(), Vec::new()))
            .collect();
        while let Some(p) = stack.pop() {
            assert!(p.1.len() <= g.vertex_count(), "graph has a cycle");
            for (e, s, r) in g.edge_triples() {
                if s == p.0 {
                    let mut edges = vec![e.to_string()];
                    edges.extend(p.1.iter().cloned());
                    stack.push((r.to_string(), edges));
                }
            }
            out.push(p);
        }
        out.sort();
        out
    }

    /// Matrix of `c s_mu s_{nu^*}` with `mu`, `nu` given by range and edge names.
    fn monomial(g: &Graph, basis: &[P], c: i64, mu: &P, nu: &P, m: &mut Matrix) {
        for pi in basis {
            if pi.0 != nu.0 || !pi.1.starts_with(&nu.1) {
                continue;
            }
            let rest = &pi.1[nu.1.len()..];
            if src_of(g, mu) != src_of(g, nu) {
                continue;
            }
            let mut edges = mu.1.clone();
            edges.extend(rest.iter().cloned());
            *m.entry(((mu.0.clone(), edges), pi.clone())).or_insert(0) += c;
        }
    }

    pub fn of(x: &Element) -> Matrix {
        let g = x.graph();
        let basis = basis(g);
        let mut m = Matrix::new();
        for (mono, c) in x.terms() {
            let p = |path: &leavitt_core::Path| -> P {
                (g.vertex_name(path.range()).to_string(), path.edge_names(g).iter().map(|s| s.to_string()).collect())
            };
            monomial(g, &basis, c, &p(mono.mu()), &p(mono.nu()), &mut m);
        }
        m.retain(|_, c| *c != 0);
        m
    }

    pub fn of_raw(g: &Graph, raw: &[(i64, P, P)]) -> Matrix {
        let basis = basis(g);
        let mut m = Matrix::new();
        for (c, mu, nu) in raw {
            monomial(g, &basis, *c, mu, nu, &mut m);
        }
        m.retain(|_, c| *c != 0);
        m
    }

    pub fn mul(a: &Matrix, b: &Matrix) -> Matrix {
        let mut out = Matrix::new();
        for ((i, k), x) in a {
            for ((k2, j), y) in b {
                if k == k2 {
                    *out.entry((i.clone(), j.clone())).or_insert(0) += x * y;
                }
            }
        }
        out.retain(|_, c| *c != 0);
        out
    }
}

pub fn pool(alg: &Algebra, max_len: usize) -> Vec<leavitt_core::Monomial> {
    leavitt_core::algebra::sample::basis_monomials(alg.graph(), max_len, |_, _| true)
}
