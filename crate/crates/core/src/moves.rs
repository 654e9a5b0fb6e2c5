//! Graph moves and the example fixtures built from them.
//!
//! Naming conventions for generated identifiers:
//!
//! * in-delay: copies `v#0 .. v#d(v)` of each vertex, delay edges `v~j`
//!   from `v#(j-1)` to `v#j`, original edges keep their names;
//! * desingularisation of a bundle `b : w -> v`: edges `b#i` from `w`, new
//!   vertices `b^i` and chain edges `b~i : b^i -> b^(i-1)` where `b^0 = v`.
//!
//! Every move also reports the vertex set `G^0` at which contraction undoes
//! it, and the renaming from contracted names back to the original ones.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::algebra::Algebra;
use crate::contraction::{self, ContractionError, ContractionResult, EDGE_PREFIX, EDGE_SEPARATOR};
use crate::graph::{EdgeId, Graph, GraphError, MultiGraph, Multiplicity, Rename, VertexId, VertexSet};
use crate::report::Report;

#[derive(Debug, Error)]
pub enum MoveError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Contraction(#[from] ContractionError),
    #[error("delay of edge `{edge}` is {de}, larger than the delay {dv} of its source `{src}`")]
    DelayInvariant { edge: String, de: u32, src: String, dv: u32 },
    #[error("line {line}: {msg}")]
    DelayFile { line: usize, msg: String },
    #[error("depth must be at least {min}, got {got}")]
    Depth { min: usize, got: usize },
    #[error("unknown fixture `{0}` (expected EX51, EX52 or EX53)")]
    UnknownFixture(String),
    #[error("segment cannot be collapsed:\n{0}")]
    NotCollapsible(Report),
}

/// Output of a move: the new graph, the vertices to contract onto, and the
/// renaming from the contracted graph's identifiers to the original ones.
#[derive(Clone, Debug)]
pub struct Moved {
    pub graph: Graph,
    pub g0: VertexSet,
    pub rename: Rename,
}

fn contracted_name(edges: &[String]) -> String {
    let mut s = String::from(EDGE_PREFIX);
    s.push_str(&edges.join(&EDGE_SEPARATOR.to_string()));
    s
}

/// A Drinen source vector restricted to finite values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DelayVector {
    vertices: Vec<u32>,
    edges: Vec<u32>,
}

impl DelayVector {
    /// The zero vector on `g`.
    pub fn zero(g: &Graph) -> DelayVector {
        DelayVector { vertices: vec![0; g.vertex_count()], edges: vec![0; g.edge_count()] }
    }

    pub fn vertex(&self, v: VertexId) -> u32 {
        self.vertices[v.index()]
    }

    pub fn edge(&self, e: EdgeId) -> u32 {
        self.edges[e.index()]
    }

    pub fn set_vertex(&mut self, g: &Graph, name: &str, d: u32) -> Result<(), GraphError> {
        self.vertices[g.require_vertex(name)?.index()] = d;
        Ok(())
    }

    pub fn set_edge(&mut self, g: &Graph, name: &str, d: u32) -> Result<(), GraphError> {
        self.edges[g.require_edge(name)?.index()] = d;
        Ok(())
    }

    /// Reads `vertex <id> <n>` and `edge <id> <n>` lines; unlisted entries are 0.
    pub fn parse(g: &Graph, text: &str) -> Result<DelayVector, MoveError> {
        let mut d = DelayVector::zero(g);
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let content = strip_comment(raw);
            let parts: Vec<&str> = content.split_whitespace().collect();
            if parts.is_empty() {
                continue;
            }
            let err = |msg: String| MoveError::DelayFile { line, msg };
            if parts.len() != 3 {
                return Err(err("expected `vertex <id> <n>` or `edge <id> <n>`".into()));
            }
            let n: u32 = parts[2].parse().map_err(|_| err(format!("`{}` is not a non-negative integer", parts[2])))?;
            let res = match parts[0] {
                "vertex" => d.set_vertex(g, parts[1], n),
                "edge" => d.set_edge(g, parts[1], n),
                other => return Err(err(format!("unknown entry kind `{other}`"))),
            };
            res.map_err(|e| err(e.to_string()))?;
        }
        Ok(d)
    }

    /// Checks `d(e) <= d(s(e))` for every edge.
    pub fn check(&self, g: &Graph) -> Result<(), MoveError> {
        for e in g.edges() {
            let s = g.source(e);
            if self.edge(e) > self.vertex(s) {
                return Err(MoveError::DelayInvariant {
                    edge: g.edge_name(e).to_string(),
                    de: self.edge(e),
                    src: g.vertex_name(s).to_string(),
                    dv: self.vertex(s),
                });
            }
        }
        Ok(())
    }
}

// Identifiers may contain `#`, so a comment only starts at a token boundary.
fn strip_comment(raw: &str) -> &str {
    let mut prev_space = true;
    for (i, c) in raw.char_indices() {
        if c == '#' && prev_space {
            return &raw[..i];
        }
        prev_space = c.is_whitespace();
    }
    raw
}

fn copy_name(v: &str, j: u32) -> String {
    format!("{v}#{j}")
}

/// The in-delayed graph `d_s(F)`.
pub fn in_delay(f: &Graph, d: &DelayVector) -> Result<Moved, MoveError> {
    d.check(f)?;
    let mut vertices = Vec::new();
    let mut edges = Vec::new();
    let mut rename = Rename::default();
    let mut g0_names = Vec::new();
    for v in f.vertices() {
        let name = f.vertex_name(v);
        for j in 0..=d.vertex(v) {
            vertices.push(copy_name(name, j));
            if j > 0 {
                edges.push((format!("{name}~{j}"), copy_name(name, j - 1), copy_name(name, j)));
            }
        }
        g0_names.push(copy_name(name, 0));
        rename = rename.vertex(copy_name(name, 0), name);
    }
    for e in f.edges() {
        let (en, s, r) = (f.edge_name(e), f.vertex_name(f.source(e)), f.vertex_name(f.range(e)));
        edges.push((en.to_string(), copy_name(s, d.edge(e)), copy_name(r, 0)));
        let mut witness = vec![en.to_string()];
        witness.extend((1..=d.edge(e)).rev().map(|j| format!("{s}~{j}")));
        rename = rename.edge(contracted_name(&witness), en);
    }
    let graph = Graph::new(format!("{}_delayed", f.name()), vertices, edges)?;
    let g0 = graph.vertex_set(&g0_names)?;
    Ok(Moved { graph, g0, rename })
}

fn expand_finite(m: &MultiGraph) -> (Vec<String>, Vec<(String, String, String)>) {
    let base = m.base();
    let vertices = base.vertex_names().map(str::to_string).collect();
    let mut edges: Vec<(String, String, String)> =
        base.edge_triples().map(|(e, s, r)| (e.to_string(), s.to_string(), r.to_string())).collect();
    for b in m.bundles() {
        if let Multiplicity::Finite(n) = b.multiplicity {
            let (s, r) = (base.vertex_name(b.src), base.vertex_name(b.rng));
            edges.extend((0..n).map(|i| (format!("{}#{i}", b.id), s.to_string(), r.to_string())));
        }
    }
    (vertices, edges)
}

/// Replaces every infinite bundle by `depth` parallel edges and expands the
/// finite ones.
pub fn truncate(m: &MultiGraph, depth: usize) -> Result<Graph, MoveError> {
    if depth < 1 {
        return Err(MoveError::Depth { min: 1, got: depth });
    }
    let base = m.base();
    let (vertices, mut edges) = expand_finite(m);
    for b in m.bundles().iter().filter(|b| b.multiplicity == Multiplicity::Infinite) {
        let (s, r) = (base.vertex_name(b.src), base.vertex_name(b.rng));
        edges.extend((0..depth).map(|i| (format!("{}#{i}", b.id), s.to_string(), r.to_string())));
    }
    Ok(Graph::new(format!("{}_t{depth}", base.name()), vertices, edges)?)
}

/// Desingularisation cut off after `depth` edges per infinite bundle, with
/// no head added at sources.
pub fn desingularise_truncated(m: &MultiGraph, depth: usize) -> Result<Moved, MoveError> {
    if depth < 1 {
        return Err(MoveError::Depth { min: 1, got: depth });
    }
    let base = m.base();
    let (mut vertices, mut edges) = expand_finite(m);
    let mut rename = Rename::identity(base);
    rename.edges.clear();
    for (e, _, _) in base.edge_triples() {
        rename = rename.edge(contracted_name(&[e.to_string()]), e);
    }
    for b in m.bundles() {
        match b.multiplicity {
            Multiplicity::Finite(n) => {
                for i in 0..n {
                    let id = format!("{}#{i}", b.id);
                    rename = rename.edge(contracted_name(std::slice::from_ref(&id)), id);
                }
            }
            Multiplicity::Infinite => {
                let (w, v) = (base.vertex_name(b.src), base.vertex_name(b.rng));
                let chain = |i: usize| if i == 0 { v.to_string() } else { format!("{}^{i}", b.id) };
                for i in 0..depth {
                    let id = format!("{}#{i}", b.id);
                    if i > 0 {
                        vertices.push(chain(i));
                        edges.push((format!("{}~{i}", b.id), chain(i), chain(i - 1)));
                    }
                    edges.push((id.clone(), w.to_string(), chain(i)));
                    let mut witness: Vec<String> = (1..=i).map(|j| format!("{}~{j}", b.id)).collect();
                    witness.push(id.clone());
                    rename = rename.edge(contracted_name(&witness), id);
                }
            }
        }
    }
    let graph = Graph::new(format!("{}_desing{depth}", base.name()), vertices, edges)?;
    let names: Vec<&str> = base.vertex_names().collect();
    let g0 = graph.vertex_set(&names)?;
    Ok(Moved { graph, g0, rename })
}

/// Contracts the vertices of `seg` away, after checking that they can be
/// collapsed. Returns the diagnostics together with the contraction.
pub fn collapse_segment(alg: &Algebra, seg: &VertexSet) -> Result<(Report, ContractionResult), MoveError> {
    let e = alg.graph();
    let mut report = Report::new();
    let singular = seg.iter().find(|&&v| e.is_singular(v));
    report.record("segment-nonsingular", singular.map(|&v| e.vertex_name(v).to_string()));
    report.record("segment-acyclic", e.find_cycle(seg).map(|c| c.display(e)));
    for &v in seg {
        let exits = e.out_edges(v).iter().filter(|&&x| !seg.contains(&e.range(x))).count();
        let entries = e.in_edges(v).len();
        report.pass_with(format!("degree {}", e.vertex_name(v)), format!("receives {entries}, exits {exits}"));
    }
    if !report.passed() {
        return Err(MoveError::NotCollapsible(report));
    }
    let g0: VertexSet = e.vertices().filter(|v| !seg.contains(v)).collect();
    let res = contraction::contract(alg, &g0)?;
    Ok((report, res))
}

/// The three example families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum FixtureName {
    Ex51,
    Ex52,
    Ex53,
}

impl FixtureName {
    pub const ALL: [FixtureName; 3] = [FixtureName::Ex51, FixtureName::Ex52, FixtureName::Ex53];
}

impl fmt::Display for FixtureName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FixtureName::Ex51 => "EX51",
            FixtureName::Ex52 => "EX52",
            FixtureName::Ex53 => "EX53",
        })
    }
}

impl FromStr for FixtureName {
    type Err = MoveError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "EX51" => Ok(FixtureName::Ex51),
            "EX52" => Ok(FixtureName::Ex52),
            "EX53" => Ok(FixtureName::Ex53),
            other => Err(MoveError::UnknownFixture(other.to_string())),
        }
    }
}

/// A finite truncation of one of the example graphs.
#[derive(Clone, Debug)]
pub struct Fixture {
    pub name: FixtureName,
    pub depth: usize,
    pub graph: Graph,
    pub g0: VertexSet,
    /// The contracted graph as drawn, with its own edge names.
    pub expected: Graph,
    /// From contracted identifiers to the names used in `expected`.
    pub rename: Rename,
}

impl Fixture {
    pub fn new(name: FixtureName, depth: usize) -> Result<Fixture, MoveError> {
        if depth < 2 {
            return Err(MoveError::Depth { min: 2, got: depth });
        }
        let tag = format!("{name}_d{depth}");
        let (graph, g0, expected, rename) = match name {
            FixtureName::Ex51 => ex51(&tag, depth)?,
            FixtureName::Ex52 => {
                let f = ex52_source(&tag)?;
                let moved = desingularise_truncated(&f, depth)?;
                let expected = truncate(&f, depth)?.renamed(format!("{tag}_expected"));
                (moved.graph.renamed(tag.clone()), moved.g0, expected, moved.rename)
            }
            FixtureName::Ex53 => {
                let k = depth;
                let es: Vec<String> = (1..=k).map(|i| format!("e_{i}")).collect();
                let f = Graph::new(format!("{tag}_expected"), ["v", "w"], es.iter().map(|e| (e.as_str(), "w", "v")))?;
                let mut d = DelayVector::zero(&f);
                d.set_vertex(&f, "w", (k - 1) as u32)?;
                for (i, e) in es.iter().enumerate() {
                    d.set_edge(&f, e, i as u32)?;
                }
                let moved = in_delay(&f, &d)?;
                (moved.graph.renamed(tag.clone()), moved.g0, f, moved.rename)
            }
        };
        Ok(Fixture { name, depth, graph, g0, expected, rename })
    }

    pub fn algebra(&self, ring: crate::ring::RingSpec) -> Algebra {
        Algebra::new(self.graph.clone(), ring)
    }

    /// The expected contraction written exactly as contraction output would
    /// be: contracted identifiers, the contracted graph name, witness lines.
    pub fn expected_text(&self) -> Result<String, MoveError> {
        let back = self.rename.inverse();
        let g = back.apply(&self.expected, format!("{}_contracted", self.graph.name()))?;
        let mut out = g.to_text();
        for (e, _, _) in g.edge_triples() {
            let path = e.strip_prefix(EDGE_PREFIX).unwrap_or(e).replace(EDGE_SEPARATOR, ".");
            out.push_str(&format!("witness {e} = {path}\n"));
        }
        Ok(out)
    }
}

fn ex52_source(tag: &str) -> Result<MultiGraph, MoveError> {
    let base = Graph::new(format!("{tag}_F"), ["v", "w"], Vec::<(&str, &str, &str)>::new())?;
    Ok(MultiGraph::new(base, [("b", "w", "v", Multiplicity::Infinite)])?)
}

type Built = (Graph, VertexSet, Graph, Rename);

fn ex51(tag: &str, n: usize) -> Result<Built, MoveError> {
    let v = |i: usize| format!("v_{i}");
    let u = |i: usize| if i == 0 { v(0) } else { format!("u_{i}") };
    let mut vertices: Vec<String> = (0..=n).map(v).collect();
    vertices.extend((1..=n).map(u));
    let mut edges = vec![("y_0".to_string(), v(0), v(1))];
    for i in 1..=n {
        edges.push((format!("x_{i}"), u(i), u(i - 1)));
        edges.push((format!("y_{i}"), v(i), u(i)));
        if i >= 3 {
            edges.push((format!("z_{i}"), v(i), u(i - 1)));
        }
    }
    let graph = Graph::new(tag, vertices, edges)?;
    let g0_names: Vec<String> = (0..=n).map(v).collect();
    let g0 = graph.vertex_set(&g0_names)?;

    let mut expected_edges = vec![("h".to_string(), v(0), v(1))];
    let mut rename = Rename::default().edge(contracted_name(&["y_0".into()]), "h");
    let xs = |k: usize| (1..=k).map(|j| format!("x_{j}")).collect::<Vec<_>>();
    for i in 1..=n {
        expected_edges.push((format!("f_{i}"), v(i), v(0)));
        let mut w = xs(i);
        w.push(format!("y_{i}"));
        rename = rename.edge(contracted_name(&w), format!("f_{i}"));
        if i >= 3 {
            expected_edges.push((format!("g_{i}"), v(i), v(0)));
            let mut w = xs(i - 1);
            w.push(format!("z_{i}"));
            rename = rename.edge(contracted_name(&w), format!("g_{i}"));
        }
    }
    for name in &g0_names {
        rename = rename.vertex(name.clone(), name.clone());
    }
    let expected = Graph::new(format!("{tag}_expected"), g0_names, expected_edges)?;
    Ok((graph, g0, expected, rename))
}

/// Edge multiplicities between ordered vertex pairs, keyed `(src, rng)`.
pub fn multiplicities(g: &Graph) -> BTreeMap<(String, String), usize> {
    let mut out = BTreeMap::new();
    for (_, s, r) in g.edge_triples() {
        *out.entry((s.to_string(), r.to_string())).or_insert(0) += 1;
    }
    out
}
