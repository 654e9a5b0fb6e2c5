use std::cmp::Ordering;

use super::{EdgeId, Graph, GraphError, VertexId, VertexSet};

/// A finite path `mu = mu_1 ... mu_n` with `s(mu_i) = r(mu_{i+1})`.
///
/// Length-0 paths are vertices; they keep the vertex as both range and source.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Path {
    range: VertexId,
    source: VertexId,
    edges: Vec<EdgeId>,
}

impl Path {
    pub fn vertex(v: VertexId) -> Path {
        Path { range: v, source: v, edges: Vec::new() }
    }

    pub fn edge(g: &Graph, e: EdgeId) -> Path {
        Path { range: g.range(e), source: g.source(e), edges: vec![e] }
    }

    /// Builds a path from edges listed range end first, checking composability.
    pub fn from_edges(g: &Graph, edges: Vec<EdgeId>) -> Result<Path, GraphError> {
        for w in edges.windows(2) {
            if g.source(w[0]) != g.range(w[1]) {
                return Err(GraphError::NotComposable(g.edge_name(w[0]).to_string(), g.edge_name(w[1]).to_string()));
            }
        }
        assert!(!edges.is_empty(), "use Path::vertex for length-0 paths");
        Ok(Path::from_edges_unchecked(g, edges))
    }

    pub(crate) fn from_edges_unchecked(g: &Graph, edges: Vec<EdgeId>) -> Path {
        debug_assert!(edges.windows(2).all(|w| g.source(w[0]) == g.range(w[1])));
        Path { range: g.range(edges[0]), source: g.source(*edges.last().expect("nonempty")), edges }
    }

    /// Parses dot-separated edge names, or a single vertex name for a
    /// length-0 path. Edge names take precedence.
    pub fn parse(g: &Graph, text: &str) -> Result<Path, GraphError> {
        if !text.contains('.') {
            if let Some(e) = g.edge(text) {
                return Ok(Path::edge(g, e));
            }
            if let Some(v) = g.vertex(text) {
                return Ok(Path::vertex(v));
            }
            return Err(GraphError::UnknownEdge(text.to_string()));
        }
        let edges = text.split('.').map(|n| g.require_edge(n)).collect::<Result<Vec<_>, _>>()?;
        Path::from_edges(g, edges)
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_vertex(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn range(&self) -> VertexId {
        self.range
    }

    pub fn source(&self) -> VertexId {
        self.source
    }

    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    pub fn last_edge(&self) -> Option<EdgeId> {
        self.edges.last().copied()
    }

    /// Appends `e` at the source end; requires `r(e) = s(self)`.
    pub fn extended(&self, g: &Graph, e: EdgeId) -> Path {
        debug_assert_eq!(g.range(e), self.source);
        let mut edges = self.edges.clone();
        edges.push(e);
        Path { range: self.range, source: g.source(e), edges }
    }

    /// Removes the last edge. `None` on vertices.
    pub fn without_last(&self, g: &Graph) -> Option<Path> {
        let last = *self.edges.last()?;
        let edges = self.edges[..self.edges.len() - 1].to_vec();
        Some(Path { range: self.range, source: g.range(last), edges })
    }

    /// `self` followed by `tail`; requires `s(self) = r(tail)`.
    pub fn concat(&self, tail: &Path) -> Path {
        assert_eq!(self.source, tail.range, "paths do not compose");
        let mut edges = self.edges.clone();
        edges.extend_from_slice(&tail.edges);
        Path { range: self.range, source: tail.source, edges }
    }

    /// If `self = prefix . rest`, returns `rest`.
    pub fn strip_prefix(&self, prefix: &Path) -> Option<Path> {
        if prefix.range != self.range || !self.edges.starts_with(&prefix.edges) {
            return None;
        }
        Some(Path { range: prefix.source, source: self.source, edges: self.edges[prefix.edges.len()..].to_vec() })
    }

    /// Interior vertices `s(mu_i)` for `1 <= i < |mu|`.
    pub fn interior<'a>(&'a self, g: &'a Graph) -> impl Iterator<Item = VertexId> + 'a {
        let n = self.edges.len().saturating_sub(1);
        self.edges[..n].iter().map(move |&e| g.source(e))
    }

    /// True for a cycle in the strict sense: nonempty, closed, and with
    /// pairwise distinct edge sources.
    pub fn is_cycle(&self, g: &Graph) -> bool {
        if self.edges.is_empty() || self.source != self.range {
            return false;
        }
        let mut seen = VertexSet::new();
        self.edges.iter().all(|&e| seen.insert(g.source(e)))
    }

    /// The path repeated `k` times; `k = 0` yields the vertex `r(self)`.
    pub fn power(&self, k: usize) -> Path {
        assert!(self.source == self.range || k <= 1, "only closed paths have powers");
        if k == 0 {
            return Path::vertex(self.range);
        }
        let mut edges = Vec::with_capacity(self.edges.len() * k);
        for _ in 0..k {
            edges.extend_from_slice(&self.edges);
        }
        Path { range: self.range, source: self.source, edges }
    }

    /// Shortest `root` with `self = root^k`.
    pub fn primitive_root(&self) -> (Path, usize) {
        let n = self.edges.len();
        if n == 0 || self.source != self.range {
            return (self.clone(), 1);
        }
        for p in 1..=n {
            if n.is_multiple_of(p) && (p..n).all(|i| self.edges[i] == self.edges[i - p]) {
                let root = Path { range: self.range, source: self.source, edges: self.edges[..p].to_vec() };
                return (root, n / p);
            }
        }
        unreachable!()
    }

    /// Dot-joined edge names, or the vertex name for length 0.
    pub fn display(&self, g: &Graph) -> String {
        if self.edges.is_empty() {
            g.vertex_name(self.range).to_string()
        } else {
            self.edge_names(g).join(".")
        }
    }

    pub fn edge_names<'a>(&self, g: &'a Graph) -> Vec<&'a str> {
        self.edges.iter().map(|&e| g.edge_name(e)).collect()
    }
}

impl Ord for Path {
    fn cmp(&self, other: &Self) -> Ordering {
        self.edges
            .len()
            .cmp(&other.edges.len())
            .then_with(|| self.edges.cmp(&other.edges))
            .then_with(|| self.range.cmp(&other.range))
    }
}

impl PartialOrd for Path {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Optional restrictions for [`Graph::enumerate_paths`].
#[derive(Clone, Debug, Default)]
pub struct PathFilter {
    pub source: Option<VertexSet>,
    pub range: Option<VertexSet>,
    /// Allowed interior vertices `s(mu_i)`, `i < |mu|`.
    pub interior: Option<VertexSet>,
}

impl PathFilter {
    pub fn with_source(mut self, s: VertexSet) -> Self {
        self.source = Some(s);
        self
    }

    pub fn with_range(mut self, r: VertexSet) -> Self {
        self.range = Some(r);
        self
    }

    pub fn with_interior(mut self, i: VertexSet) -> Self {
        self.interior = Some(i);
        self
    }

    pub(crate) fn accepts_source(&self, v: VertexId) -> bool {
        self.source.as_ref().is_none_or(|s| s.contains(&v))
    }

    pub(crate) fn accepts_interior(&self, v: VertexId) -> bool {
        self.interior.as_ref().is_none_or(|s| s.contains(&v))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain() -> Graph {
        // c -f-> b -e-> a
        Graph::new("chain", ["a", "b", "c"], [("e", "b", "a"), ("f", "c", "b")]).unwrap()
    }

    #[test]
    fn composition_rule() {
        let g = chain();
        let p = Path::parse(&g, "e.f").unwrap();
        assert_eq!(g.vertex_name(p.range()), "a");
        assert_eq!(g.vertex_name(p.source()), "c");
        assert!(Path::parse(&g, "f.e").is_err());
        assert_eq!(Path::parse(&g, "b").unwrap(), Path::vertex(g.vertex("b").unwrap()));
    }

    #[test]
    fn prefixes() {
        let g = chain();
        let ef = Path::parse(&g, "e.f").unwrap();
        let e = Path::parse(&g, "e").unwrap();
        let rest = ef.strip_prefix(&e).unwrap();
        assert_eq!(rest.display(&g), "f");
        let a = Path::vertex(g.vertex("a").unwrap());
        assert_eq!(ef.strip_prefix(&a).unwrap(), ef);
        assert!(ef.strip_prefix(&Path::vertex(g.vertex("b").unwrap())).is_none());
        assert_eq!(e.concat(&rest), ef);
        assert_eq!(ef.without_last(&g).unwrap(), e);
    }

    #[test]
    fn roots_and_cycles() {
        let g = Graph::new("l", ["v"], [("a", "v", "v")]).unwrap();
        let aaa = Path::parse(&g, "a.a.a").unwrap();
        let (root, k) = aaa.primitive_root();
        assert_eq!((root.display(&g).as_str(), k), ("a", 3));
        assert!(root.is_cycle(&g));
        assert!(!aaa.is_cycle(&g));
        assert_eq!(root.power(3), aaa);
    }
}
