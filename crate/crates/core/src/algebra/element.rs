use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use thiserror::Error;

use crate::graph::{EdgeId, Graph, GraphError, Path, VertexId};
use crate::ring::{Coeff, RingSpec};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("operands live in different algebras ({0} vs {1})")]
    Mismatch(String, String),
    #[error("path does not belong to graph `{0}`")]
    ForeignPath(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// `L_R(E)` for a finite graph `E` and a coefficient ring `R`.
///
/// Cheap to clone; elements keep a handle to their algebra so mixing
/// graphs or rings is always detected.
#[derive(Clone)]
pub struct Algebra {
    graph: Arc<Graph>,
    ring: RingSpec,
}

impl fmt::Debug for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L_{}({})", self.ring, self.graph.name())
    }
}

impl PartialEq for Algebra {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && (Arc::ptr_eq(&self.graph, &other.graph) || *self.graph == *other.graph)
    }
}

impl Eq for Algebra {}

/// The basis element `s_mu s_{nu^*}`; `s(mu) = s(nu)` always holds.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    mu: Path,
    nu: Path,
}

impl Monomial {
    /// `None` when the junction vertices differ (the product is zero).
    pub fn new(mu: Path, nu: Path) -> Option<Monomial> {
        (mu.source() == nu.source()).then_some(Monomial { mu, nu })
    }

    pub fn vertex(v: VertexId) -> Monomial {
        Monomial { mu: Path::vertex(v), nu: Path::vertex(v) }
    }

    pub fn mu(&self) -> &Path {
        &self.mu
    }

    pub fn nu(&self) -> &Path {
        &self.nu
    }

    /// `s(mu) = s(nu)`.
    pub fn junction(&self) -> VertexId {
        self.mu.source()
    }

    pub fn degree(&self) -> i64 {
        self.mu.len() as i64 - self.nu.len() as i64
    }

    pub fn star(&self) -> Monomial {
        Monomial { mu: self.nu.clone(), nu: self.mu.clone() }
    }

    /// True when both paths end in the same edge and that edge is the special
    /// edge of its range. Such monomials are rewritten away.
    pub fn is_reducible(&self, g: &Graph) -> bool {
        match (self.mu.last_edge(), self.nu.last_edge()) {
            (Some(a), Some(b)) => a == b && g.special_edge(g.range(a)) == Some(a),
            _ => false,
        }
    }

    /// Product of two monomials by ghost-path cancellation.
    pub fn times(&self, other: &Monomial) -> Option<Monomial> {
        if other.mu.len() >= self.nu.len() {
            let rest = other.mu.strip_prefix(&self.nu)?;
            let mu = if self.mu.is_vertex() { rest } else { self.mu.concat(&rest) };
            Some(Monomial { mu, nu: other.nu.clone() })
        } else {
            let rest = self.nu.strip_prefix(&other.mu)?;
            let nu = if other.nu.is_vertex() { rest } else { other.nu.concat(&rest) };
            Some(Monomial { mu: self.mu.clone(), nu })
        }
    }

    pub fn display(&self, g: &Graph) -> String {
        match (self.mu.is_vertex(), self.nu.is_vertex()) {
            (true, true) => format!("p({})", g.vertex_name(self.mu.range())),
            (false, true) => format!("s({})", self.mu.display(g)),
            (true, false) => format!("sx({})", self.nu.display(g)),
            (false, false) => format!("s({})*sx({})", self.mu.display(g), self.nu.display(g)),
        }
    }
}

/// A finite linear combination of basis monomials in normal form.
#[derive(Clone, PartialEq, Eq)]
pub struct Element {
    alg: Algebra,
    terms: BTreeMap<Monomial, Coeff>,
}

impl Algebra {
    pub fn new(graph: impl Into<Arc<Graph>>, ring: RingSpec) -> Algebra {
        Algebra { graph: graph.into(), ring }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn graph_arc(&self) -> &Arc<Graph> {
        &self.graph
    }

    pub fn ring(&self) -> RingSpec {
        self.ring
    }

    /// Same graph under a different coefficient ring.
    pub fn with_ring(&self, ring: RingSpec) -> Algebra {
        Algebra { graph: self.graph.clone(), ring }
    }

    pub fn zero(&self) -> Element {
        Element { alg: self.clone(), terms: BTreeMap::new() }
    }

    /// `sum_v p_v`, the unit of `L_R(E)` for finite `E`.
    pub fn one(&self) -> Element {
        self.normal_form(self.graph.vertices().map(|v| (1, Path::vertex(v), Path::vertex(v))))
    }

    pub fn p(&self, v: VertexId) -> Element {
        self.from_monomial(1, Monomial::vertex(v))
    }

    pub fn s(&self, e: EdgeId) -> Element {
        let g = &self.graph;
        self.monomial_unchecked(1, Path::edge(g, e), Path::vertex(g.source(e)))
    }

    pub fn s_star(&self, e: EdgeId) -> Element {
        let g = &self.graph;
        self.monomial_unchecked(1, Path::vertex(g.source(e)), Path::edge(g, e))
    }

    /// `s_mu`.
    pub fn path(&self, mu: &Path) -> Element {
        self.monomial_unchecked(1, mu.clone(), Path::vertex(mu.source()))
    }

    /// `s_{mu^*}`.
    pub fn ghost(&self, mu: &Path) -> Element {
        self.monomial_unchecked(1, Path::vertex(mu.source()), mu.clone())
    }

    pub fn p_named(&self, v: &str) -> Result<Element, AlgebraError> {
        Ok(self.p(self.graph.require_vertex(v)?))
    }

    pub fn s_named(&self, e: &str) -> Result<Element, AlgebraError> {
        Ok(self.s(self.graph.require_edge(e)?))
    }

    pub fn s_star_named(&self, e: &str) -> Result<Element, AlgebraError> {
        Ok(self.s_star(self.graph.require_edge(e)?))
    }

    pub fn scalar(&self, c: Coeff) -> Element {
        self.one().scale(c)
    }

    fn check_path(&self, p: &Path) -> Result<(), AlgebraError> {
        let g = &self.graph;
        let foreign = || AlgebraError::ForeignPath(g.name().to_string());
        if p.range().index() >= g.vertex_count() || p.source().index() >= g.vertex_count() {
            return Err(foreign());
        }
        if p.edges().iter().any(|e| e.index() >= g.edge_count()) {
            return Err(foreign());
        }
        if let (Some(&first), Some(&last)) = (p.edges().first(), p.edges().last()) {
            let composable = p.edges().windows(2).all(|w| g.source(w[0]) == g.range(w[1]));
            if !composable || g.range(first) != p.range() || g.source(last) != p.source() {
                return Err(foreign());
            }
        } else if p.range() != p.source() {
            return Err(foreign());
        }
        Ok(())
    }

    /// `c * s_mu s_{nu^*}` in normal form; zero when `s(mu) != s(nu)`.
    pub fn monomial(&self, c: Coeff, mu: Path, nu: Path) -> Result<Element, AlgebraError> {
        self.check_path(&mu)?;
        self.check_path(&nu)?;
        Ok(self.monomial_unchecked(c, mu, nu))
    }

    pub(crate) fn monomial_unchecked(&self, c: Coeff, mu: Path, nu: Path) -> Element {
        self.normal_form([(c, mu, nu)])
    }

    pub fn from_monomial(&self, c: Coeff, m: Monomial) -> Element {
        self.normal_form([(c, m.mu, m.nu)])
    }

    /// Normal form of a formal combination `sum c_i s_{mu_i} s_{nu_i^*}`.
    ///
    /// A monomial `s_{mu' g} s_{(nu' g)^*}` whose paths end in the special
    /// edge `g` of `v = r(g)` is rewritten with the relation at `v` into
    /// `s_{mu'} s_{nu'^*} - sum_{e in r^{-1}(v), e != g} s_{mu' e} s_{(nu' e)^*}`.
    /// Every rewrite shortens the term it touches, and a monomial has at most
    /// one redex, so the result does not depend on processing order.
    pub fn normal_form<I>(&self, raw: I) -> Element
    where
        I: IntoIterator<Item = (Coeff, Path, Path)>,
    {
        let g = &*self.graph;
        let ring = self.ring;
        let mut out: BTreeMap<Monomial, Coeff> = BTreeMap::new();
        let mut work: Vec<(Coeff, Path, Path)> = raw.into_iter().collect();
        while let Some((c, mu, nu)) = work.pop() {
            let c = ring.reduce(c as i128);
            if c == 0 {
                continue;
            }
            let Some(m) = Monomial::new(mu, nu) else { continue };
            if m.is_reducible(g) {
                let special = m.mu.last_edge().expect("reducible monomials have edges");
                let v = g.range(special);
                let mu1 = m.mu.without_last(g).expect("nonempty");
                let nu1 = m.nu.without_last(g).expect("nonempty");
                let negc = ring.neg(c);
                for &e in g.in_edges(v) {
                    if e != special {
                        // irreducible: its last edge is not special
                        let key = Monomial { mu: mu1.extended(g, e), nu: nu1.extended(g, e) };
                        accumulate(&mut out, ring, key, negc);
                    }
                }
                work.push((c, mu1, nu1));
            } else {
                accumulate(&mut out, ring, m, c);
            }
        }
        out.retain(|_, c| *c != 0);
        Element { alg: self.clone(), terms: out }
    }

    fn check_same(&self, other: &Algebra) -> Result<(), AlgebraError> {
        if self == other {
            Ok(())
        } else {
            Err(AlgebraError::Mismatch(format!("{self:?}"), format!("{other:?}")))
        }
    }
}

fn accumulate(out: &mut BTreeMap<Monomial, Coeff>, ring: RingSpec, key: Monomial, c: Coeff) {
    let slot = out.entry(key).or_insert(0);
    *slot = ring.add(*slot, c);
}

impl Element {
    pub fn algebra(&self) -> &Algebra {
        &self.alg
    }

    pub fn graph(&self) -> &Graph {
        &self.alg.graph
    }

    pub fn ring(&self) -> RingSpec {
        self.alg.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl ExactSizeIterator<Item = (&Monomial, Coeff)> + '_ {
        self.terms.iter().map(|(m, &c)| (m, c))
    }

    pub fn coefficient(&self, m: &Monomial) -> Coeff {
        self.terms.get(m).copied().unwrap_or(0)
    }

    pub fn try_add(&self, other: &Element) -> Result<Element, AlgebraError> {
        self.alg.check_same(&other.alg)?;
        let ring = self.alg.ring;
        let mut terms = self.terms.clone();
        for (m, &c) in &other.terms {
            accumulate(&mut terms, ring, m.clone(), c);
        }
        terms.retain(|_, c| *c != 0);
        Ok(Element { alg: self.alg.clone(), terms })
    }

    pub fn try_sub(&self, other: &Element) -> Result<Element, AlgebraError> {
        self.try_add(&other.neg())
    }

    pub fn scale(&self, c: Coeff) -> Element {
        let ring = self.alg.ring;
        let mut terms: BTreeMap<Monomial, Coeff> =
            self.terms.iter().map(|(m, &d)| (m.clone(), ring.mul(c, d))).collect();
        terms.retain(|_, c| *c != 0);
        Element { alg: self.alg.clone(), terms }
    }

    pub fn try_mul(&self, other: &Element) -> Result<Element, AlgebraError> {
        self.alg.check_same(&other.alg)?;
        let ring = self.alg.ring;
        let mut raw = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (a, &ca) in &self.terms {
            for (b, &cb) in &other.terms {
                if let Some(m) = a.times(b) {
                    raw.push((ring.mul(ca, cb), m.mu, m.nu));
                }
            }
        }
        Ok(self.alg.normal_form(raw))
    }

    /// The `*`-involution `c s_mu s_{nu^*} -> c s_nu s_{mu^*}`.
    pub fn star(&self) -> Element {
        // the normal-form condition is symmetric in mu and nu
        let terms = self.terms.iter().map(|(m, &c)| (m.star(), c)).collect();
        Element { alg: self.alg.clone(), terms }
    }

    /// Terms with `|mu| - |nu| = n`.
    pub fn grade_component(&self, n: i64) -> Element {
        let terms = self.terms.iter().filter(|(m, _)| m.degree() == n).map(|(m, &c)| (m.clone(), c)).collect();
        Element { alg: self.alg.clone(), terms }
    }

    /// Degrees present, ascending.
    pub fn degrees(&self) -> Vec<i64> {
        let mut ds: Vec<i64> = self.terms.keys().map(Monomial::degree).collect();
        ds.sort_unstable();
        ds.dedup();
        ds
    }

    /// Raw terms, e.g. for re-normalizing in a different order.
    pub fn to_raw(&self) -> Vec<(Coeff, Path, Path)> {
        self.terms.iter().map(|(m, &c)| (c, m.mu.clone(), m.nu.clone())).collect()
    }

    pub fn is_normal(&self) -> bool {
        let g = self.graph();
        self.terms.iter().all(|(m, &c)| c != 0 && !m.is_reducible(g))
    }

    /// Text form in the expression grammar.
    pub fn to_expr(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let g = self.graph();
        let mut out = String::new();
        for (i, (m, &c)) in self.terms.iter().enumerate() {
            let (neg, mag) = if c < 0 { (true, -(c as i128)) } else { (false, c as i128) };
            match (i, neg) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            if mag != 1 {
                out.push_str(&format!("{mag}*"));
            }
            out.push_str(&m.display(g));
        }
        out
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_expr())
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}[{}]", self.alg, self.to_expr())
    }
}

impl Neg for &Element {
    type Output = Element;

    fn neg(self) -> Element {
        let ring = self.alg.ring;
        let terms = self.terms.iter().map(|(m, &c)| (m.clone(), ring.neg(c))).collect();
        Element { alg: self.alg.clone(), terms }
    }
}

impl Element {
    #[allow(clippy::should_implement_trait)]
    pub fn neg(&self) -> Element {
        -self
    }
}

// Operator forms panic on mixed algebras; use the `try_*` methods to get a
// `Result` instead.
impl Add for &Element {
    type Output = Element;

    fn add(self, rhs: &Element) -> Element {
        self.try_add(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Sub for &Element {
    type Output = Element;

    fn sub(self, rhs: &Element) -> Element {
        self.try_sub(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Mul for &Element {
    type Output = Element;

    fn mul(self, rhs: &Element) -> Element {
        self.try_mul(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parallel(ring: RingSpec) -> Algebra {
        let g = Graph::new("par", ["v", "w"], [("e", "w", "v"), ("f", "w", "v")]).unwrap();
        Algebra::new(g, ring)
    }

    #[test]
    fn vertex_idempotent() {
        let a = parallel(RingSpec::Integers);
        let v = a.graph().vertex("v").unwrap();
        let pv = a.monomial(1, Path::vertex(v), Path::vertex(v)).unwrap();
        assert_eq!(pv, a.p(v));
        assert_eq!(&pv * &pv, pv);
    }

    #[test]
    fn junction_mismatch_is_zero() {
        let g = Graph::new("g", ["a", "b", "c"], [("e", "b", "a"), ("f", "c", "a")]).unwrap();
        let a = Algebra::new(g, RingSpec::Integers);
        let e = Path::edge(a.graph(), a.graph().edge("e").unwrap());
        let f = Path::edge(a.graph(), a.graph().edge("f").unwrap());
        assert!(a.monomial(1, e.clone(), f).unwrap().is_zero());
        assert!(a.monomial(0, e.clone(), e).unwrap().is_zero());
    }

    #[test]
    fn special_edge_rewrite() {
        // s_e s_e* = p_v - s_f s_f*; multiplying back by s_e on the right recovers s_e
        let a = parallel(RingSpec::Integers);
        let g = a.graph();
        let e = Path::edge(g, g.edge("e").unwrap());
        let ee = a.monomial(1, e.clone(), e).unwrap();
        let f = a.s_named("f").unwrap();
        let expected = &a.p_named("v").unwrap() - &(&f * &a.s_star_named("f").unwrap());
        assert_eq!(ee, expected);
        assert_eq!(ee.to_expr(), "p(v) - s(f)*sx(f)");
        let se = a.s_named("e").unwrap();
        assert_eq!(&ee * &se, se);
        assert!((&ee * &f).is_zero());
    }

    #[test]
    fn single_in_edge_collapses() {
        let g = Graph::new("one", ["v", "w"], [("e", "w", "v")]).unwrap();
        let a = Algebra::new(g, RingSpec::Integers);
        let e = a.s_named("e").unwrap();
        assert_eq!(&e * &a.s_star_named("e").unwrap(), a.p_named("v").unwrap());
    }

    #[test]
    fn relations_l1_l2() {
        let a = parallel(RingSpec::Integers);
        let (e, f) = (a.s_named("e").unwrap(), a.s_named("f").unwrap());
        let (es, fs) = (a.s_star_named("e").unwrap(), a.s_star_named("f").unwrap());
        let (pv, pw) = (a.p_named("v").unwrap(), a.p_named("w").unwrap());
        assert_eq!(&es * &e, pw);
        assert!((&es * &f).is_zero());
        assert_eq!(&pv * &e, e);
        assert_eq!(&e * &pw, e);
        assert!((&pw * &e).is_zero());
        assert_eq!(&fs * &pv, fs);
    }

    #[test]
    fn loop_prefix_cancellation() {
        let g = Graph::new("loop", ["v"], [("a", "v", "v")]).unwrap();
        let alg = Algebra::new(g, RingSpec::Integers);
        let a = alg.s_named("a").unwrap();
        let astar = alg.s_star_named("a").unwrap();
        let aa = &a * &a;
        assert_eq!(&astar * &aa, a);
        assert_eq!(&(&astar * &a) * &a, &astar * &(&a * &a));
        assert_eq!(&a * &astar, alg.p_named("v").unwrap());
    }

    #[test]
    fn additive_structure() {
        let a = parallel(RingSpec::modulo(2).unwrap());
        let x = &a.s_named("e").unwrap() + &a.p_named("w").unwrap();
        assert_eq!(&x + &a.zero(), x);
        assert!(x.scale(0).is_zero());
        assert!((&x + &x).is_zero());
    }

    #[test]
    fn involution_and_grading() {
        let a = parallel(RingSpec::Integers);
        let pv = a.p_named("v").unwrap();
        assert_eq!(pv.star(), pv);
        assert_eq!(a.s_named("e").unwrap().star(), a.s_star_named("e").unwrap());
        assert_eq!(pv.grade_component(0), pv);
        assert!(pv.grade_component(1).is_zero());
        let x = &a.s_named("e").unwrap() + &a.s_star_named("f").unwrap();
        assert_eq!(x.grade_component(1), a.s_named("e").unwrap());
        assert_eq!(x.degrees(), vec![-1, 1]);
    }

    #[test]
    fn mixed_algebras_rejected() {
        let a = parallel(RingSpec::Integers);
        let b = parallel(RingSpec::modulo(3).unwrap());
        assert!(matches!(a.zero().try_add(&b.zero()), Err(AlgebraError::Mismatch(..))));
        let other = Algebra::new(Graph::new("x", ["v"], Vec::<(&str, &str, &str)>::new()).unwrap(), RingSpec::Integers);
        assert!(a.p_named("v").unwrap().try_mul(&other.p_named("v").unwrap()).is_err());
        let bogus = Path::vertex(VertexId(9));
        assert!(matches!(a.monomial(1, bogus.clone(), bogus), Err(AlgebraError::ForeignPath(_))));
    }
}
