//! Finite directed graphs with named vertices and edges.
//!
//! Edges carry a source `s(e)` and a range `r(e)`; arrows in the text format
//! point from source to range. Paths compose right to left in the sense that
//! `s(mu_i) = r(mu_{i+1})`, so the first edge of a path is the one at its
//! range end.

mod closure;
mod path;
mod text;

pub use closure::{hereditary_closure, is_full, is_hereditary, is_saturated, saturated_hereditary_closure};
pub use path::{Path, PathFilter};
pub use text::{parse_graph, parse_multigraph, ParseError};

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use thiserror::Error;

/// Index of a vertex inside its [`Graph`]. Indices follow identifier order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub(crate) u32);

/// Index of an edge inside its [`Graph`]. Indices follow identifier order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeId(pub(crate) u32);

impl VertexId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl EdgeId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

pub type VertexSet = BTreeSet<VertexId>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("invalid identifier `{0}`")]
    InvalidIdentifier(String),
    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(String),
    #[error("duplicate edge `{0}`")]
    DuplicateEdge(String),
    #[error("identifier `{0}` is used both as a vertex and as an edge")]
    AmbiguousIdentifier(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("unknown edge `{0}`")]
    UnknownEdge(String),
    #[error("edges `{0}` and `{1}` do not compose: s({0}) != r({1})")]
    NotComposable(String, String),
    #[error("vertex set is not hereditary and saturated (offending vertex `{0}`)")]
    NotSaturatedHereditary(String),
    #[error("rename is not total on `{0}`")]
    RenameNotTotal(String),
    #[error("rename is not injective: `{0}` and `{1}` both map to `{2}`")]
    RenameNotInjective(String, String, String),
    #[error("bundle `{0}` has zero multiplicity")]
    EmptyBundle(String),
}

/// Characters allowed in vertex and edge identifiers.
pub fn is_identifier_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || matches!(c, '_' | '#' | '^' | '\'' | '~' | '@' | '/')
}

/// Identifiers start with an ASCII letter, digit or `_`, so that a `#` at
/// the start of a token always opens a comment.
pub fn is_identifier(s: &str) -> bool {
    s.chars().next().is_some_and(|c| c.is_ascii_alphanumeric() || c == '_') && s.chars().all(is_identifier_char)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub id: String,
    pub src: VertexId,
    pub rng: VertexId,
}

/// A finite directed graph. Immutable once built.
#[derive(Clone)]
pub struct Graph {
    name: String,
    vertices: Vec<String>,
    edges: Vec<Edge>,
    vertex_index: HashMap<String, VertexId>,
    edge_index: HashMap<String, EdgeId>,
    // both lists are sorted by edge id
    in_edges: Vec<Vec<EdgeId>>,
    out_edges: Vec<Vec<EdgeId>>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name && self.vertices == other.vertices && self.edges == other.edges
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("name", &self.name)
            .field("vertices", &self.vertices)
            .field(
                "edges",
                &self
                    .edges
                    .iter()
                    .map(|e| format!("{}: {} -> {}", e.id, self.vertex_name(e.src), self.vertex_name(e.rng)))
                    .collect::<Vec<_>>(),
            )
            .finish()
    }
}

impl Graph {
    /// Builds a graph from vertex names and `(edge, src, rng)` triples.
    pub fn new<V, E, S>(name: impl Into<String>, vertices: V, edges: E) -> Result<Graph, GraphError>
    where
        V: IntoIterator<Item = S>,
        E: IntoIterator<Item = (S, S, S)>,
        S: Into<String>,
    {
        let mut vnames: Vec<String> = vertices.into_iter().map(Into::into).collect();
        vnames.sort();
        for w in vnames.windows(2) {
            if w[0] == w[1] {
                return Err(GraphError::DuplicateVertex(w[0].clone()));
            }
        }
        for v in &vnames {
            if !is_identifier(v) {
                return Err(GraphError::InvalidIdentifier(v.clone()));
            }
        }
        let vertex_index: HashMap<String, VertexId> =
            vnames.iter().enumerate().map(|(i, v)| (v.clone(), VertexId(i as u32))).collect();

        let mut raw: Vec<(String, String, String)> =
            edges.into_iter().map(|(e, s, r)| (e.into(), s.into(), r.into())).collect();
        raw.sort();
        let mut edges = Vec::with_capacity(raw.len());
        for (i, (id, s, r)) in raw.iter().enumerate() {
            if i > 0 && raw[i - 1].0 == *id {
                return Err(GraphError::DuplicateEdge(id.clone()));
            }
            if !is_identifier(id) {
                return Err(GraphError::InvalidIdentifier(id.clone()));
            }
            if vertex_index.contains_key(id) {
                return Err(GraphError::AmbiguousIdentifier(id.clone()));
            }
            let src = *vertex_index.get(s).ok_or_else(|| GraphError::UnknownVertex(s.clone()))?;
            let rng = *vertex_index.get(r).ok_or_else(|| GraphError::UnknownVertex(r.clone()))?;
            edges.push(Edge { id: id.clone(), src, rng });
        }
        let edge_index = edges.iter().enumerate().map(|(i, e)| (e.id.clone(), EdgeId(i as u32))).collect();
        let mut in_edges = vec![Vec::new(); vnames.len()];
        let mut out_edges = vec![Vec::new(); vnames.len()];
        for (i, e) in edges.iter().enumerate() {
            in_edges[e.rng.index()].push(EdgeId(i as u32));
            out_edges[e.src.index()].push(EdgeId(i as u32));
        }
        Ok(Graph { name: name.into(), vertices: vnames, edges, vertex_index, edge_index, in_edges, out_edges })
    }

    pub fn empty(name: impl Into<String>) -> Graph {
        Graph::new::<_, _, String>(name, Vec::new(), Vec::new()).expect("empty graph is valid")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// Same graph under another name.
    pub fn renamed(&self, name: impl Into<String>) -> Graph {
        Graph { name: name.into(), ..self.clone() }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> impl ExactSizeIterator<Item = VertexId> + '_ {
        (0..self.vertices.len() as u32).map(VertexId)
    }

    pub fn edges(&self) -> impl ExactSizeIterator<Item = EdgeId> + '_ {
        (0..self.edges.len() as u32).map(EdgeId)
    }

    pub fn all_vertices(&self) -> VertexSet {
        self.vertices().collect()
    }

    pub fn vertex(&self, name: &str) -> Option<VertexId> {
        self.vertex_index.get(name).copied()
    }

    pub fn edge(&self, name: &str) -> Option<EdgeId> {
        self.edge_index.get(name).copied()
    }

    pub fn require_vertex(&self, name: &str) -> Result<VertexId, GraphError> {
        self.vertex(name).ok_or_else(|| GraphError::UnknownVertex(name.to_string()))
    }

    pub fn require_edge(&self, name: &str) -> Result<EdgeId, GraphError> {
        self.edge(name).ok_or_else(|| GraphError::UnknownEdge(name.to_string()))
    }

    /// Resolves a list of vertex names into a set.
    pub fn vertex_set<S: AsRef<str>>(&self, names: &[S]) -> Result<VertexSet, GraphError> {
        names.iter().map(|n| self.require_vertex(n.as_ref())).collect()
    }

    pub fn vertex_name(&self, v: VertexId) -> &str {
        &self.vertices[v.index()]
    }

    pub fn edge_name(&self, e: EdgeId) -> &str {
        &self.edges[e.index()].id
    }

    pub fn source(&self, e: EdgeId) -> VertexId {
        self.edges[e.index()].src
    }

    pub fn range(&self, e: EdgeId) -> VertexId {
        self.edges[e.index()].rng
    }

    /// `r^{-1}(v)`, sorted by identifier.
    pub fn in_edges(&self, v: VertexId) -> &[EdgeId] {
        &self.in_edges[v.index()]
    }

    /// `s^{-1}(v)`, sorted by identifier.
    pub fn out_edges(&self, v: VertexId) -> &[EdgeId] {
        &self.out_edges[v.index()]
    }

    /// Vertices receiving no edge. In a finite graph these are exactly the
    /// singular vertices, since there are no infinite receivers.
    pub fn singular_vertices(&self) -> VertexSet {
        self.vertices().filter(|&v| self.in_edges(v).is_empty()).collect()
    }

    pub fn is_singular(&self, v: VertexId) -> bool {
        self.in_edges(v).is_empty()
    }

    /// The distinguished incoming edge used to pick a basis: the smallest
    /// identifier in `r^{-1}(v)`. `None` for sources.
    pub fn special_edge(&self, v: VertexId) -> Option<EdgeId> {
        self.in_edges(v).first().copied()
    }

    /// A finite graph never has a head: an infinite acyclic path would have
    /// to revisit a vertex.
    pub fn has_no_heads(&self) -> bool {
        true
    }

    /// Returns a cycle inside the subgraph induced by `vs`, if there is one.
    ///
    /// The cycle is returned as a path `alpha` with `s(alpha) = r(alpha)` and
    /// pairwise distinct edge sources.
    pub fn find_cycle(&self, vs: &VertexSet) -> Option<Path> {
        #[derive(Clone, Copy, PartialEq)]
        enum Mark {
            New,
            Active,
            Done,
        }
        let mut mark = vec![Mark::New; self.vertex_count()];
        for &root in vs {
            if mark[root.index()] != Mark::New {
                continue;
            }
            // iterative DFS walking backwards along edges (range to source),
            // which produces edges in path order
            let mut stack: Vec<(VertexId, usize)> = vec![(root, 0)];
            let mut via: Vec<EdgeId> = Vec::new();
            mark[root.index()] = Mark::Active;
            while let Some(&mut (v, ref mut next)) = stack.last_mut() {
                let ins = self.in_edges(v);
                if *next < ins.len() {
                    let e = ins[*next];
                    *next += 1;
                    let u = self.source(e);
                    if !vs.contains(&u) {
                        continue;
                    }
                    match mark[u.index()] {
                        Mark::New => {
                            mark[u.index()] = Mark::Active;
                            stack.push((u, 0));
                            via.push(e);
                        }
                        Mark::Active => {
                            let start = stack.iter().position(|&(w, _)| w == u).expect("active vertex on stack");
                            let mut edges: Vec<EdgeId> = via[start..].to_vec();
                            edges.push(e);
                            return Some(Path::from_edges_unchecked(self, edges));
                        }
                        Mark::Done => {}
                    }
                } else {
                    mark[v.index()] = Mark::Done;
                    stack.pop();
                    via.pop();
                }
            }
        }
        None
    }

    pub fn is_acyclic(&self, vs: &VertexSet) -> bool {
        self.find_cycle(vs).is_none()
    }

    /// Enumerates every path of length at most `max_len` accepted by `filter`,
    /// ordered by length and then lexicographically by edge identifiers.
    pub fn enumerate_paths(&self, max_len: usize, filter: &PathFilter) -> Vec<Path> {
        let mut out = Vec::new();
        let mut frontier: Vec<Path> = Vec::new();
        for v in self.vertices() {
            if filter.range.as_ref().is_none_or(|r| r.contains(&v)) {
                let p = Path::vertex(v);
                if filter.accepts_source(v) {
                    out.push(p.clone());
                }
                frontier.push(p);
            }
        }
        for len in 1..=max_len {
            let mut next = Vec::new();
            for p in &frontier {
                let s = p.source();
                if len > 1 && !filter.accepts_interior(s) {
                    continue;
                }
                for &e in self.in_edges(s) {
                    // `in_edges(s)` are edges whose range is `s`, so they extend at the source end
                    let q = if len == 1 { Path::edge(self, e) } else { p.extended(self, e) };
                    next.push(q);
                }
            }
            if len == 1 {
                next.sort();
            }
            out.extend(next.iter().filter(|p| filter.accepts_source(p.source())).cloned());
            frontier = next;
            if frontier.is_empty() {
                break;
            }
        }
        out
    }

    /// The graph `E/H` obtained by deleting a saturated hereditary set `H`
    /// together with every edge whose source lies in `H`.
    pub fn quotient(&self, h: &VertexSet) -> Result<Graph, GraphError> {
        if let Some(v) = closure::hereditary_violation(self, h).or_else(|| closure::saturation_violation(self, h)) {
            return Err(GraphError::NotSaturatedHereditary(self.vertex_name(v).to_string()));
        }
        let vertices: Vec<&str> = self.vertices().filter(|v| !h.contains(v)).map(|v| self.vertex_name(v)).collect();
        let edges: Vec<(&str, &str, &str)> = self
            .edges
            .iter()
            .filter(|e| !h.contains(&e.src))
            .map(|e| {
                assert!(!h.contains(&e.rng), "hereditary set retained an edge into H");
                (e.id.as_str(), self.vertex_name(e.src), self.vertex_name(e.rng))
            })
            .collect();
        Graph::new(format!("{}_quotient", self.name), vertices, edges)
    }

    /// The subgraph on `vs` with every edge whose endpoints both lie in `vs`.
    pub fn induced_subgraph(&self, name: impl Into<String>, vs: &VertexSet) -> Graph {
        let vertices: Vec<&str> = vs.iter().map(|&v| self.vertex_name(v)).collect();
        let edges: Vec<(&str, &str, &str)> = self
            .edges
            .iter()
            .filter(|e| vs.contains(&e.src) && vs.contains(&e.rng))
            .map(|e| (e.id.as_str(), self.vertex_name(e.src), self.vertex_name(e.rng)))
            .collect();
        Graph::new(name, vertices, edges).expect("subgraph of a valid graph")
    }

    /// Iterates `(edge id, src, rng)` name triples in identifier order.
    pub fn edge_triples(&self) -> impl Iterator<Item = (&str, &str, &str)> + '_ {
        self.edges.iter().map(|e| (e.id.as_str(), self.vertex_name(e.src), self.vertex_name(e.rng)))
    }

    pub fn vertex_names(&self) -> impl Iterator<Item = &str> + '_ {
        self.vertices.iter().map(String::as_str)
    }

    pub fn to_text(&self) -> String {
        text::write_graph(self, &[])
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Name map from one graph onto another, used to compare outputs of graph
/// moves with hand-built expectations.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Rename {
    pub vertices: BTreeMap<String, String>,
    pub edges: BTreeMap<String, String>,
}

impl Rename {
    pub fn vertex(mut self, from: impl Into<String>, to: impl Into<String>) -> Self {
        self.vertices.insert(from.into(), to.into());
        self
    }

    pub fn edge(mut self, from: impl Into<String>, to: impl Into<String>) -> Self {
        self.edges.insert(from.into(), to.into());
        self
    }

    pub fn identity(g: &Graph) -> Rename {
        Rename {
            vertices: g.vertex_names().map(|v| (v.to_string(), v.to_string())).collect(),
            edges: g.edge_triples().map(|(e, _, _)| (e.to_string(), e.to_string())).collect(),
        }
    }

    pub fn inverse(&self) -> Rename {
        Rename {
            vertices: self.vertices.iter().map(|(a, b)| (b.clone(), a.clone())).collect(),
            edges: self.edges.iter().map(|(a, b)| (b.clone(), a.clone())).collect(),
        }
    }

    /// Applies the rename to every identifier of `g`.
    pub fn apply(&self, g: &Graph, name: impl Into<String>) -> Result<Graph, GraphError> {
        let mapv = |v: &str| self.vertices.get(v).cloned().ok_or_else(|| GraphError::RenameNotTotal(v.to_string()));
        let vertices = g.vertex_names().map(mapv).collect::<Result<Vec<_>, _>>()?;
        let edges = g
            .edge_triples()
            .map(|(e, s, r)| {
                let e2 = self.edges.get(e).cloned().ok_or_else(|| GraphError::RenameNotTotal(e.to_string()))?;
                Ok((e2, mapv(s)?, mapv(r)?))
            })
            .collect::<Result<Vec<_>, GraphError>>()?;
        Graph::new(name, vertices, edges)
    }
}

/// Checks that `rename` is a bijective graph morphism from `g1` onto `g2`
/// preserving sources and ranges. This verifies a given renaming; it is not
/// a general isomorphism test.
pub fn canonical_isomorphic(g1: &Graph, g2: &Graph, rename: &Rename) -> Result<bool, GraphError> {
    fn injective<'a>(
        names: impl Iterator<Item = &'a str>,
        map: &BTreeMap<String, String>,
    ) -> Result<Vec<String>, GraphError> {
        let mut seen: HashMap<&str, &str> = HashMap::new();
        let mut image = Vec::new();
        for n in names {
            let t = map.get(n).ok_or_else(|| GraphError::RenameNotTotal(n.to_string()))?;
            if let Some(prev) = seen.insert(t.as_str(), n) {
                return Err(GraphError::RenameNotInjective(prev.to_string(), n.to_string(), t.clone()));
            }
            image.push(t.clone());
        }
        Ok(image)
    }
    injective(g1.vertex_names(), &rename.vertices)?;
    injective(g1.edge_triples().map(|(e, _, _)| e), &rename.edges)?;
    if g1.vertex_count() != g2.vertex_count() || g1.edge_count() != g2.edge_count() {
        return Ok(false);
    }
    for v in g1.vertex_names() {
        if g2.vertex(&rename.vertices[v]).is_none() {
            return Ok(false);
        }
    }
    for (e, s, r) in g1.edge_triples() {
        let Some(e2) = g2.edge(&rename.edges[e]) else {
            return Ok(false);
        };
        if g2.vertex_name(g2.source(e2)) != rename.vertices[s] || g2.vertex_name(g2.range(e2)) != rename.vertices[r] {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Multiplicity of a bundle of parallel edges.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Multiplicity {
    Finite(u32),
    Infinite,
}

impl fmt::Display for Multiplicity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Multiplicity::Finite(n) => write!(f, "{n}"),
            Multiplicity::Infinite => f.write_str("inf"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bundle {
    pub id: String,
    pub src: VertexId,
    pub rng: VertexId,
    pub multiplicity: Multiplicity,
}

/// A graph plus bundles of parallel edges, possibly infinitely many.
/// Only used as input to desingularisation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiGraph {
    base: Graph,
    bundles: Vec<Bundle>,
}

impl MultiGraph {
    pub fn new<S: Into<String>>(
        base: Graph,
        bundles: impl IntoIterator<Item = (S, S, S, Multiplicity)>,
    ) -> Result<MultiGraph, GraphError> {
        let mut out: Vec<Bundle> = Vec::new();
        for (id, s, r, m) in bundles {
            let (id, s, r) = (id.into(), s.into(), r.into());
            if !is_identifier(&id) {
                return Err(GraphError::InvalidIdentifier(id));
            }
            if base.edge(&id).is_some() || out.iter().any(|b| b.id == id) {
                return Err(GraphError::DuplicateEdge(id));
            }
            if base.vertex(&id).is_some() {
                return Err(GraphError::AmbiguousIdentifier(id));
            }
            if m == Multiplicity::Finite(0) {
                return Err(GraphError::EmptyBundle(id));
            }
            let src = base.require_vertex(&s)?;
            let rng = base.require_vertex(&r)?;
            out.push(Bundle { id, src, rng, multiplicity: m });
        }
        out.sort_by(|a, b| a.id.cmp(&b.id));
        Ok(MultiGraph { base, bundles: out })
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn bundles(&self) -> &[Bundle] {
        &self.bundles
    }

    pub fn to_text(&self) -> String {
        text::write_graph(&self.base, &self.bundles)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parallel() -> Graph {
        Graph::new("par", ["v", "w"], [("e", "w", "v"), ("f", "w", "v")]).unwrap()
    }

    #[test]
    fn in_and_out_edges() {
        let g = parallel();
        let v = g.vertex("v").unwrap();
        let w = g.vertex("w").unwrap();
        let names = |es: &[EdgeId]| es.iter().map(|&e| g.edge_name(e).to_string()).collect::<Vec<_>>();
        assert_eq!(names(g.in_edges(v)), ["e", "f"]);
        assert!(g.in_edges(w).is_empty());
        assert_eq!(names(g.out_edges(w)), ["e", "f"]);
        let iso = Graph::new("iso", ["v"], Vec::<(&str, &str, &str)>::new()).unwrap();
        assert!(iso.in_edges(iso.vertex("v").unwrap()).is_empty());
    }

    #[test]
    fn singular_vertices_are_sources() {
        let loop_g = Graph::new("l", ["v"], [("a", "v", "v")]).unwrap();
        assert!(loop_g.singular_vertices().is_empty());
        let edgeless = Graph::new("e", ["a", "b"], Vec::<(&str, &str, &str)>::new()).unwrap();
        assert_eq!(edgeless.singular_vertices().len(), 2);
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(Graph::new("g", ["v"], [("e", "v", "u")]).unwrap_err(), GraphError::UnknownVertex("u".into()));
        assert!(matches!(
            Graph::new("g", ["v", "v"], Vec::<(&str, &str, &str)>::new()),
            Err(GraphError::DuplicateVertex(_))
        ));
        assert!(matches!(Graph::new("g", ["v"], [("v", "v", "v")]), Err(GraphError::AmbiguousIdentifier(_))));
        assert!(matches!(
            Graph::new("g", ["a b"], Vec::<(&str, &str, &str)>::new()),
            Err(GraphError::InvalidIdentifier(_))
        ));
    }

    #[test]
    fn cycles() {
        let loop_g = Graph::new("l", ["v"], [("e", "v", "v")]).unwrap();
        let c = loop_g.find_cycle(&loop_g.all_vertices()).unwrap();
        assert_eq!(c.edges().len(), 1);
        let two = Graph::new("t", ["a", "b"], [("e", "a", "b"), ("f", "b", "a")]).unwrap();
        let c = two.find_cycle(&two.all_vertices()).unwrap();
        assert_eq!(c.len(), 2);
        assert_eq!(c.source(), c.range());
        assert!(two.is_acyclic(&two.vertex_set(&["a"]).unwrap()));
        assert!(parallel().is_acyclic(&parallel().all_vertices()));
    }

    #[test]
    fn enumerate_small() {
        let loop_g = Graph::new("l", ["v"], [("e", "v", "v")]).unwrap();
        let ps = loop_g.enumerate_paths(2, &PathFilter::default());
        assert_eq!(ps.len(), 3);
        assert_eq!(ps[2].len(), 2);
        assert_eq!(parallel().enumerate_paths(0, &PathFilter::default()).len(), 2);
    }

    #[test]
    fn quotient_graphs() {
        let g = parallel();
        assert_eq!(g.quotient(&VertexSet::new()).unwrap().edge_count(), 2);
        assert_eq!(g.quotient(&g.all_vertices()).unwrap().vertex_count(), 0);
        // {v} is not hereditary: w emits into v
        assert!(g.quotient(&g.vertex_set(&["v"]).unwrap()).is_err());
        let q = g.quotient(&g.vertex_set(&["w"]).unwrap());
        // {w} is hereditary but not saturated: every edge into v comes from w
        assert!(q.is_err());
    }

    #[test]
    fn renames() {
        let g = parallel();
        assert!(canonical_isomorphic(&g, &g, &Rename::identity(&g)).unwrap());
        let swapped = Graph::new("par", ["v", "w"], [("e", "v", "w"), ("f", "w", "v")]).unwrap();
        assert!(!canonical_isomorphic(&g, &swapped, &Rename::identity(&g)).unwrap());
        let bad = Rename::identity(&g).edge("f", "e");
        assert!(matches!(canonical_isomorphic(&g, &g, &bad), Err(GraphError::RenameNotInjective(..))));
    }
}
