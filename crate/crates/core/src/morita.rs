//! The Morita context attached to a vertex subset `V`.
//!
//! With `M = span{s_mu s_{nu^*} : r(mu) in V}` and `M^* = span{... : r(nu) in V}`,
//! `MM^*` is the subalgebra spanned by monomials with both ranges in `V` and
//! `M^*M` is the ideal generated by `{p_v : v in V}`. None of these spans is
//! materialized; each one is a membership predicate.
//!
//! Membership in `M`, `M^*` and `MM^*` reads ranges off the normal form,
//! which is sound because rewriting never changes `r(mu)` or `r(nu)`.
//! Membership in `M^*M` maps the element onto `L_R(E/H)` for
//! `H = ΣH(V)` and tests for zero.

use std::fmt::Write as _;

use thiserror::Error;

use crate::algebra::sample::{basis_monomials, Sampler};
use crate::algebra::{Algebra, AlgebraError, Element, FamilyAssignment, Monomial, VerifiedFamily};
use crate::graph::{saturated_hereditary_closure, Graph, GraphError, Path, VertexSet};
use crate::report::Report;

#[derive(Debug, Error)]
pub enum MoritaError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// A graph, a coefficient ring and a vertex subset `V`.
#[derive(Clone, Debug)]
pub struct MoritaContext {
    alg: Algebra,
    set: VertexSet,
    closure: VertexSet,
    quotient: VerifiedFamily,
}

impl MoritaContext {
    pub fn new(alg: Algebra, set: VertexSet) -> Result<MoritaContext, MoritaError> {
        let g = alg.graph();
        let closure = saturated_hereditary_closure(g, &set)?;
        let qg = g.quotient(&closure)?;
        let target = Algebra::new(qg, alg.ring());
        let qgraph = target.graph();
        let fam = FamilyAssignment::from_fn(
            alg.graph_arc().clone(),
            target.clone(),
            |v| match qgraph.vertex(g.vertex_name(v)) {
                Some(w) => target.p(w),
                None => target.zero(),
            },
            |e| match qgraph.edge(g.edge_name(e)) {
                Some(f) => target.s(f),
                None => target.zero(),
            },
            |e| match qgraph.edge(g.edge_name(e)) {
                Some(f) => target.s_star(f),
                None => target.zero(),
            },
        )
        .expect("quotient family is total");
        let quotient = fam.verify().expect("the quotient by a saturated hereditary set carries a Leavitt family");
        Ok(MoritaContext { alg, set, closure, quotient })
    }

    /// Convenience constructor from vertex names.
    pub fn from_names<S: AsRef<str>>(alg: Algebra, names: &[S]) -> Result<MoritaContext, MoritaError> {
        let set = alg.graph().vertex_set(names)?;
        MoritaContext::new(alg, set)
    }

    pub fn algebra(&self) -> &Algebra {
        &self.alg
    }

    pub fn graph(&self) -> &Graph {
        self.alg.graph()
    }

    pub fn vertex_set(&self) -> &VertexSet {
        &self.set
    }

    /// `ΣH(V)`.
    pub fn closure(&self) -> &VertexSet {
        &self.closure
    }

    pub fn is_full(&self) -> bool {
        self.closure.len() == self.graph().vertex_count()
    }

    fn check(&self, x: &Element) -> Result<(), AlgebraError> {
        if *x.algebra() == self.alg {
            Ok(())
        } else {
            Err(AlgebraError::Mismatch(format!("{:?}", x.algebra()), format!("{:?}", self.alg)))
        }
    }

    fn all_terms(&self, x: &Element, pred: impl Fn(&Monomial) -> bool) -> Result<bool, AlgebraError> {
        self.check(x)?;
        Ok(x.terms().all(|(m, _)| pred(m)))
    }

    pub fn in_m(&self, x: &Element) -> Result<bool, AlgebraError> {
        self.all_terms(x, |m| self.set.contains(&m.mu().range()))
    }

    pub fn in_m_star(&self, x: &Element) -> Result<bool, AlgebraError> {
        self.all_terms(x, |m| self.set.contains(&m.nu().range()))
    }

    pub fn in_mm_star(&self, x: &Element) -> Result<bool, AlgebraError> {
        self.all_terms(x, |m| self.set.contains(&m.mu().range()) && self.set.contains(&m.nu().range()))
    }

    /// Membership in the ideal `M^*M`: the image in `L_R(E/ΣH(V))` vanishes.
    pub fn in_m_star_m(&self, x: &Element) -> Result<bool, AlgebraError> {
        self.check(x)?;
        Ok(self.quotient.eval(x)?.is_zero())
    }

    /// Basis monomials of `M` with path lengths at most `max_len`.
    pub fn m_generators(&self, max_len: usize) -> Vec<Monomial> {
        basis_monomials(self.graph(), max_len, |mu, _| self.set.contains(&mu.range()))
    }

    pub fn m_star_generators(&self, max_len: usize) -> Vec<Monomial> {
        basis_monomials(self.graph(), max_len, |_, nu| self.set.contains(&nu.range()))
    }

    pub fn mm_star_generators(&self, max_len: usize) -> Vec<Monomial> {
        basis_monomials(self.graph(), max_len, |mu: &Path, nu: &Path| {
            self.set.contains(&mu.range()) && self.set.contains(&nu.range())
        })
    }

    /// Randomized verification of the surjective Morita context.
    pub fn verify(&self, samples: usize, seed: u64, bounds: SampleBounds) -> Report {
        let alg = &self.alg;
        let g = self.graph();
        let mut rng = Sampler::new(seed);
        let all = basis_monomials(g, bounds.max_len, |_, _| true);
        let m_pool = self.m_generators(bounds.max_len);
        let ms_pool = self.m_star_generators(bounds.max_len);
        let mms_pool = self.mm_star_generators(bounds.max_len);
        let t = bounds.max_terms;
        let mut report = Report::new();

        let names: Vec<&str> = self.set.iter().map(|&v| g.vertex_name(v)).collect();
        let mut header = String::new();
        let _ = write!(header, "V={{{}}} samples={samples} seed={seed} full={}", names.join(","), self.is_full());
        report.pass_with("context", header);

        let yes = |r: Result<bool, AlgebraError>| r.expect("sampled elements share the algebra");

        let witness = mms_pool.iter().find_map(|m| {
            let x = alg.from_monomial(1, m.clone());
            (!yes(self.in_mm_star(&x)) || !yes(self.in_m_star_m(&x))).then(|| x.to_expr())
        });
        report.record("mm*-generators", witness);

        let mut witness = None;
        for _ in 0..samples {
            let x = rng.element(alg, &mms_pool, t);
            let y = rng.element(alg, &mms_pool, t);
            let xy = &x * &y;
            if !yes(self.in_mm_star(&xy)) {
                witness = Some(format!("({x})*({y})"));
                break;
            }
        }
        report.record("mm*-product-closure", witness);

        let mut witness = None;
        for _ in 0..samples {
            let x = rng.element(alg, &mms_pool, t);
            if yes(self.in_mm_star(&x)) && !yes(self.in_m_star_m(&x)) {
                witness = Some(x.to_expr());
                break;
            }
        }
        report.record("mm*-inside-m*m", witness);

        let mut witness = None;
        for _ in 0..samples {
            let n = rng.element(alg, &ms_pool, t);
            let m = rng.element(alg, &m_pool, t);
            let x = &n * &m;
            let x2 = &rng.element(alg, &ms_pool, t) * &rng.element(alg, &m_pool, t);
            let a = rng.element(alg, &all, t);
            let b = rng.element(alg, &all, t);
            let axb = &(&a * &x) * &b;
            if !yes(self.in_m_star_m(&x)) {
                witness = Some(x.to_expr());
            } else if !yes(self.in_m_star_m(&axb)) {
                witness = Some(format!("({a})*({x})*({b})"));
            } else if !yes(self.in_m_star_m(&(&x + &x2))) {
                witness = Some(format!("({x}) + ({x2})"));
            }
            if witness.is_some() {
                break;
            }
        }
        report.record("m*m-ideal-absorption", witness);

        let mut witness = None;
        for _ in 0..samples {
            let (m, m2) = (rng.element(alg, &m_pool, t), rng.element(alg, &m_pool, t));
            let (n, n2) = (rng.element(alg, &ms_pool, t), rng.element(alg, &ms_pool, t));
            if &(&m * &n) * &m2 != &m * &(&n * &m2) {
                witness = Some(format!("m=({m}) n=({n}) m'=({m2})"));
                break;
            }
            if &(&n * &m) * &n2 != &n * &(&m * &n2) {
                witness = Some(format!("n=({n}) m=({m}) n'=({n2})"));
                break;
            }
        }
        report.record("mixed-associativity", witness);

        let mut witness = None;
        for _ in 0..samples {
            let c = rng.element(alg, &mms_pool, t);
            let m = rng.element(alg, &m_pool, t);
            let n = rng.element(alg, &ms_pool, t);
            let d = &rng.element(alg, &ms_pool, t) * &rng.element(alg, &m_pool, t);
            let cases = [
                ("(MM*)M", &c * &m, true),
                ("M(M*M)", &m * &d, true),
                ("(M*M)M*", &d * &n, false),
                ("M*(MM*)", &n * &c, false),
            ];
            for (what, x, left) in cases {
                let ok = if left { yes(self.in_m(&x)) } else { yes(self.in_m_star(&x)) };
                if !ok {
                    witness = Some(format!("{what}: {x}"));
                    break;
                }
            }
            if witness.is_some() {
                break;
            }
        }
        report.record("bimodule-closure", witness);
        report
    }
}

/// Size limits for randomly sampled elements.
#[derive(Clone, Copy, Debug)]
pub struct SampleBounds {
    pub max_terms: usize,
    pub max_len: usize,
}

impl Default for SampleBounds {
    fn default() -> Self {
        SampleBounds { max_terms: 6, max_len: 4 }
    }
}
