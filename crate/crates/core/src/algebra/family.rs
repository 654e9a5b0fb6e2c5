//! Candidate Leavitt families and the homomorphisms they induce.

use std::sync::Arc;

use thiserror::Error;

use super::element::{Algebra, AlgebraError, Element};
use crate::graph::{EdgeId, Graph, VertexId};
use crate::report::Report;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error("family is not total: expected {expected} {kind} images, got {got}")]
    NotTotal { kind: &'static str, expected: usize, got: usize },
    #[error("family image lives outside the target algebra")]
    WrongTarget,
    #[error("family relations fail:\n{0}")]
    Relations(Report),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Images `P_v`, `S_e`, `S_{e^*}` of the generators of a source graph inside
/// a target algebra.
#[derive(Clone, Debug)]
pub struct FamilyAssignment {
    source: Arc<Graph>,
    target: Algebra,
    vertices: Vec<Element>,
    edges: Vec<Element>,
    ghosts: Vec<Element>,
}

impl FamilyAssignment {
    pub fn new(
        source: impl Into<Arc<Graph>>,
        target: Algebra,
        vertices: Vec<Element>,
        edges: Vec<Element>,
        ghosts: Vec<Element>,
    ) -> Result<FamilyAssignment, FamilyError> {
        let source = source.into();
        for (kind, expected, got) in [
            ("vertex", source.vertex_count(), vertices.len()),
            ("edge", source.edge_count(), edges.len()),
            ("ghost edge", source.edge_count(), ghosts.len()),
        ] {
            if expected != got {
                return Err(FamilyError::NotTotal { kind, expected, got });
            }
        }
        if vertices.iter().chain(&edges).chain(&ghosts).any(|x| *x.algebra() != target) {
            return Err(FamilyError::WrongTarget);
        }
        Ok(FamilyAssignment { source, target, vertices, edges, ghosts })
    }

    /// Builds a family from closures over the source graph's generators.
    pub fn from_fn(
        source: impl Into<Arc<Graph>>,
        target: Algebra,
        mut vertex: impl FnMut(VertexId) -> Element,
        mut edge: impl FnMut(EdgeId) -> Element,
        mut ghost: impl FnMut(EdgeId) -> Element,
    ) -> Result<FamilyAssignment, FamilyError> {
        let source = source.into();
        let vs = source.vertices().map(&mut vertex).collect();
        let es = source.edges().map(&mut edge).collect();
        let gs = source.edges().map(&mut ghost).collect();
        FamilyAssignment::new(source, target, vs, es, gs)
    }

    /// `v -> p_v`, `e -> s_e`, `e^* -> s_{e^*}` in `alg` itself.
    pub fn universal(alg: &Algebra) -> FamilyAssignment {
        FamilyAssignment::from_fn(alg.graph_arc().clone(), alg.clone(), |v| alg.p(v), |e| alg.s(e), |e| alg.s_star(e))
            .expect("universal family is total")
    }

    pub fn source(&self) -> &Graph {
        &self.source
    }

    pub fn source_arc(&self) -> &Arc<Graph> {
        &self.source
    }

    pub fn target(&self) -> &Algebra {
        &self.target
    }

    pub fn vertex_image(&self, v: VertexId) -> &Element {
        &self.vertices[v.index()]
    }

    pub fn edge_image(&self, e: EdgeId) -> &Element {
        &self.edges[e.index()]
    }

    pub fn ghost_image(&self, e: EdgeId) -> &Element {
        &self.ghosts[e.index()]
    }

    /// Checks the defining relations by normal-form comparison in the target:
    /// mutually orthogonal idempotents, (L1), (L2), and (L3) at every
    /// non-singular source vertex.
    pub fn check(&self) -> Report {
        let g = &*self.source;
        let p = |v: VertexId| &self.vertices[v.index()];
        let s = |e: EdgeId| &self.edges[e.index()];
        let st = |e: EdgeId| &self.ghosts[e.index()];
        let vn = |v: VertexId| g.vertex_name(v).to_string();
        let en = |e: EdgeId| g.edge_name(e).to_string();
        let mut report = Report::new();

        let mut witness = None;
        'outer: for v in g.vertices() {
            for w in g.vertices() {
                let prod = p(v) * p(w);
                let expected = if v == w { p(v).clone() } else { self.target.zero() };
                if prod != expected {
                    witness = Some(format!("P_{} P_{} = {}", vn(v), vn(w), prod));
                    break 'outer;
                }
            }
        }
        report.record("vertex-idempotents", witness);

        let mut witness = None;
        for e in g.edges() {
            let (r, src) = (g.range(e), g.source(e));
            let identities = [
                (p(r) * s(e), s(e), "P_r(e) S_e"),
                (s(e) * p(src), s(e), "S_e P_s(e)"),
                (p(src) * st(e), st(e), "P_s(e) S_e*"),
                (st(e) * p(r), st(e), "S_e* P_r(e)"),
            ];
            if let Some((lhs, rhs, what)) = identities.into_iter().find(|(l, r, _)| l != *r) {
                witness = Some(format!("{} for e={}: {} != {}", what, en(e), lhs, rhs));
                break;
            }
        }
        report.record("L1", witness);

        let mut witness = None;
        'l2: for e in g.edges() {
            for f in g.edges() {
                let lhs = st(e) * s(f);
                let rhs = if e == f { p(g.source(e)).clone() } else { self.target.zero() };
                if lhs != rhs {
                    witness = Some(format!("S_{}* S_{} = {} != {}", en(e), en(f), lhs, rhs));
                    break 'l2;
                }
            }
        }
        report.record("L2", witness);

        let mut witness = None;
        for v in g.vertices().filter(|&v| !g.is_singular(v)) {
            let sum = g.in_edges(v).iter().fold(self.target.zero(), |acc, &e| &acc + &(s(e) * st(e)));
            let diff = p(v) - &sum;
            if !diff.is_zero() {
                witness = Some(format!("P_{} - sum S_e S_e* = {}", vn(v), diff));
                break;
            }
        }
        report.record("L3", witness);
        report
    }

    pub fn verify(self) -> Result<VerifiedFamily, FamilyError> {
        let report = self.check();
        if report.passed() {
            Ok(VerifiedFamily { family: self })
        } else {
            Err(FamilyError::Relations(report))
        }
    }
}

/// A family whose relations have been checked; it induces the homomorphism
/// `L_R(source) -> target` sending generators to their images.
#[derive(Clone, Debug)]
pub struct VerifiedFamily {
    family: FamilyAssignment,
}

impl VerifiedFamily {
    pub fn family(&self) -> &FamilyAssignment {
        &self.family
    }

    /// Evaluates the induced homomorphism on an element of `L_R(source)`.
    pub fn eval(&self, x: &Element) -> Result<Element, AlgebraError> {
        let fam = &self.family;
        if *x.graph() != *fam.source || x.ring() != fam.target.ring() {
            return Err(AlgebraError::Mismatch(
                format!("{:?}", x.algebra()),
                format!("L_{}({})", fam.target.ring(), fam.source.name()),
            ));
        }
        let mut acc = fam.target.zero();
        for (m, c) in x.terms() {
            let image = if m.mu().is_vertex() && m.nu().is_vertex() {
                fam.vertices[m.junction().index()].clone()
            } else {
                let mut it = m
                    .mu()
                    .edges()
                    .iter()
                    .map(|e| &fam.edges[e.index()])
                    .chain(m.nu().edges().iter().rev().map(|e| &fam.ghosts[e.index()]));
                let first = it.next().expect("non-vertex monomial").clone();
                it.fold(first, |acc, y| &acc * y)
            };
            acc = &acc + &image.scale(c);
        }
        Ok(acc)
    }
}
