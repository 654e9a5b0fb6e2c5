//! Contracting an acyclic subgraph `T` down to the vertex set `G^0`.
//!
//! Every path `beta` with both ends in `G^0` whose interior sources lie in
//! `T^0 = E^0 \ G^0` becomes one edge `e_beta` of the contracted graph `G`.
//! The assignment `q_v -> p_v`, `t_{e_beta} -> s_beta` is a Leavitt
//! `G`-family in `L_R(E)` whose homomorphism `phi` maps `L_R(G)` onto the
//! corner `MM^*` for `V = G^0`.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::sync::{Arc, OnceLock};

use thiserror::Error;

use crate::algebra::sample::{basis_monomials, Sampler};
use crate::algebra::{Algebra, AlgebraError, Element, FamilyAssignment, VerifiedFamily};
use crate::graph::{is_full, EdgeId, Graph, GraphError, Path, PathFilter, VertexId, VertexSet};
use crate::morita::MoritaContext;
use crate::report::Report;

/// Prefix of every contracted edge name.
pub const EDGE_PREFIX: &str = "c_";
/// Separator between witness edge names inside a contracted edge name.
pub const EDGE_SEPARATOR: char = '/';

const VACUOUS: &str = "vacuous: E is finite and T is acyclic, so T has no infinite paths and neither does E inside T^0";

#[derive(Debug, Error)]
pub enum ContractionError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("hypotheses fail:\n{0}")]
    Invalid(Report),
    #[error("the contraction family fails its relations:\n{0}")]
    Family(Report),
    #[error("element is not in MM^* for V = G^0: {0}")]
    NotInCorner(String),
    #[error("vertex `{0}` is not in T^0 or has no incoming B-paths")]
    NotEligible(String),
    #[error("cannot factor `{path}` into B-paths: leftover segment `{rest}` (term {term})")]
    Factorization { path: String, rest: String, term: String },
}

/// Checks the hypotheses of the contraction theorem for `(E, G^0)`.
pub fn validate(e: &Graph, g0: &VertexSet) -> Report {
    let mut report = Report::new();
    let outside = e.singular_vertices().into_iter().find(|v| !g0.contains(v));
    report.record("singular-in-g0", outside.map(|v| e.vertex_name(v).to_string()));
    let t0 = complement(e, g0);
    report.record("t-acyclic", e.find_cycle(&t0).map(|c| c.display(e)));
    if e.has_no_heads() {
        report.pass_with("no-heads", "finite graph: an infinite path repeats a vertex");
    }
    for name in ["T1", "T2", "T3", "T4"] {
        if report.passed() {
            report.pass_with(name, VACUOUS);
        } else {
            report.fail(name, "not evaluated: T must be acyclic and contain no singular vertex");
        }
    }
    report
}

fn complement(e: &Graph, g0: &VertexSet) -> VertexSet {
    e.vertices().filter(|v| !g0.contains(v)).collect()
}

/// All `B_v` at once, keyed by `v`. Assumes `T` is acyclic, so every path
/// has at most `|T^0| + 1` edges.
fn all_b_sets(e: &Graph, g0: &VertexSet, t0: &VertexSet) -> BTreeMap<VertexId, Vec<Path>> {
    let filter = PathFilter::default().with_source(g0.clone()).with_interior(t0.clone());
    let mut out: BTreeMap<VertexId, Vec<Path>> = e.vertices().map(|v| (v, Vec::new())).collect();
    for p in e.enumerate_paths(t0.len() + 1, &filter) {
        if !p.is_vertex() {
            out.get_mut(&p.range()).expect("every vertex keyed").push(p);
        }
    }
    out
}

/// `B_v`: nontrivial paths into `v` from `G^0` with interior sources in `T^0`.
pub fn b_set(e: &Graph, g0: &VertexSet, v: VertexId) -> Result<Vec<Path>, ContractionError> {
    let report = validate(e, g0);
    if !report.passed() {
        return Err(ContractionError::Invalid(report));
    }
    let t0 = complement(e, g0);
    let filter =
        PathFilter::default().with_source(g0.clone()).with_range([v].into_iter().collect()).with_interior(t0.clone());
    Ok(e.enumerate_paths(t0.len() + 1, &filter).into_iter().filter(|p| !p.is_vertex()).collect())
}

/// Name of the contracted edge standing for `beta`.
pub fn edge_name(e: &Graph, beta: &Path) -> String {
    let names = beta.edge_names(e);
    let mut s = String::from(EDGE_PREFIX);
    for (i, n) in names.iter().enumerate() {
        if i > 0 {
            s.push(EDGE_SEPARATOR);
        }
        s.push_str(n);
    }
    s
}

/// The contracted graph together with its witness paths and the family
/// `Q_v = p_v`, `T_{e_beta} = s_beta`.
#[derive(Debug)]
pub struct ContractionResult {
    source: Algebra,
    g0: VertexSet,
    t0: VertexSet,
    contracted: Algebra,
    witness: Vec<Path>,
    by_path: BTreeMap<Vec<EdgeId>, EdgeId>,
    b_sets: BTreeMap<VertexId, Vec<Path>>,
    family: FamilyAssignment,
    verified: OnceLock<Result<VerifiedFamily, Report>>,
}

/// Builds `G` and the contraction family over the coefficient ring of `alg`.
pub fn contract(alg: &Algebra, g0: &VertexSet) -> Result<ContractionResult, ContractionError> {
    let e = alg.graph();
    let report = validate(e, g0);
    if !report.passed() {
        return Err(ContractionError::Invalid(report));
    }
    let t0 = complement(e, g0);
    let b_sets = all_b_sets(e, g0, &t0);

    let vertices: Vec<String> = g0.iter().map(|&v| e.vertex_name(v).to_string()).collect();
    let mut edges = Vec::new();
    let mut paths_by_name = BTreeMap::new();
    for w in g0 {
        for beta in &b_sets[w] {
            let name = edge_name(e, beta);
            edges.push((
                name.clone(),
                e.vertex_name(beta.source()).to_string(),
                e.vertex_name(beta.range()).to_string(),
            ));
            paths_by_name.insert(name, beta.clone());
        }
    }
    let g = Graph::new(format!("{}_contracted", e.name()), vertices, edges)?;
    let witness: Vec<Path> = g.edges().map(|f| paths_by_name[g.edge_name(f)].clone()).collect();
    let by_path = g.edges().map(|f| (witness[f.index()].edges().to_vec(), f)).collect();
    let contracted = Algebra::new(g, alg.ring());
    let cg = contracted.graph_arc().clone();
    let family = FamilyAssignment::from_fn(
        cg.clone(),
        alg.clone(),
        |v| alg.p(e.vertex(cg.vertex_name(v)).expect("G^0 is a subset of E^0")),
        |f| alg.path(&witness[f.index()]),
        |f| alg.ghost(&witness[f.index()]),
    )
    .expect("contraction family is total");
    Ok(ContractionResult {
        source: alg.clone(),
        g0: g0.clone(),
        t0,
        contracted,
        witness,
        by_path,
        b_sets,
        family,
        verified: OnceLock::new(),
    })
}

impl ContractionResult {
    /// `L_R(E)`.
    pub fn source(&self) -> &Algebra {
        &self.source
    }

    /// `L_R(G)`.
    pub fn contracted(&self) -> &Algebra {
        &self.contracted
    }

    pub fn graph(&self) -> &Graph {
        self.contracted.graph()
    }

    pub fn g0(&self) -> &VertexSet {
        &self.g0
    }

    pub fn t0(&self) -> &VertexSet {
        &self.t0
    }

    /// The subgraph `T` on `T^0`.
    pub fn t_graph(&self) -> Graph {
        let e = self.source.graph();
        e.induced_subgraph(format!("{}_T", e.name()), &self.t0)
    }

    /// Witness path `beta` of a contracted edge `e_beta`.
    pub fn witness(&self, f: EdgeId) -> &Path {
        &self.witness[f.index()]
    }

    pub fn edge_for(&self, beta: &Path) -> Option<EdgeId> {
        self.by_path.get(beta.edges()).copied()
    }

    /// `B_v` for any vertex of `E`.
    pub fn b_set(&self, v: VertexId) -> &[Path] {
        &self.b_sets[&v]
    }

    pub fn family(&self) -> &FamilyAssignment {
        &self.family
    }

    fn verified(&self) -> &Result<VerifiedFamily, Report> {
        self.verified.get_or_init(|| {
            self.family.clone().verify().map_err(|err| match err {
                crate::algebra::FamilyError::Relations(r) => r,
                other => {
                    let mut r = Report::new();
                    r.fail("family", other.to_string());
                    r
                }
            })
        })
    }

    /// Relations (L1)-(L3) for the contraction family, checked in `L_R(E)`.
    pub fn family_check(&self) -> Report {
        match self.verified() {
            Ok(_) => self.family.check(),
            Err(r) => r.clone(),
        }
    }

    /// Whether `p_v = sum_{beta in B_v} s_beta s_beta^*` for `v` in `T^0`.
    pub fn b_identity_check(&self, v: VertexId) -> Result<bool, ContractionError> {
        let alg = &self.source;
        let bs = &self.b_sets[&v];
        if !self.t0.contains(&v) || bs.is_empty() {
            return Err(ContractionError::NotEligible(alg.graph().vertex_name(v).to_string()));
        }
        let mut raw = vec![(1, Path::vertex(v), Path::vertex(v))];
        raw.extend(bs.iter().map(|b| (-1, b.clone(), b.clone())));
        Ok(alg.normal_form(raw).is_zero())
    }

    /// The homomorphism `phi: L_R(G) -> L_R(E)`.
    pub fn phi(&self, x: &Element) -> Result<Element, ContractionError> {
        match self.verified() {
            Ok(fam) => Ok(fam.eval(x)?),
            Err(r) => Err(ContractionError::Family(r.clone())),
        }
    }

    fn factor(&self, path: &Path, term: &dyn Fn() -> String) -> Result<Path, ContractionError> {
        let e = self.source.graph();
        let g = self.graph();
        if path.is_vertex() {
            let v = g.vertex(e.vertex_name(path.range())).expect("factored paths start in G^0");
            return Ok(Path::vertex(v));
        }
        let mut out = Vec::new();
        let mut seg: Vec<EdgeId> = Vec::new();
        for &edge in path.edges() {
            seg.push(edge);
            if self.g0.contains(&e.source(edge)) {
                match self.by_path.get(&seg) {
                    Some(&f) => out.push(f),
                    None => break,
                }
                seg.clear();
            }
        }
        if !seg.is_empty() {
            let rest = Path::from_edges(e, seg).expect("subpath").display(e);
            return Err(ContractionError::Factorization { path: path.display(e), rest, term: term() });
        }
        Ok(Path::from_edges(g, out).expect("consecutive B-paths compose"))
    }

    /// An `x` in `L_R(G)` with `phi(x) = y`, for `y` in `MM^*`.
    pub fn preimage(&self, y: &Element) -> Result<Element, ContractionError> {
        let alg = &self.source;
        let e = alg.graph();
        if *y.algebra() != *alg {
            return Err(AlgebraError::Mismatch(format!("{:?}", y.algebra()), format!("{alg:?}")).into());
        }
        if y.terms().any(|(m, _)| !self.g0.contains(&m.mu().range()) || !self.g0.contains(&m.nu().range())) {
            return Err(ContractionError::NotInCorner(y.to_expr()));
        }
        let mut raw = Vec::new();
        for (m, c) in y.terms() {
            let term = || alg.from_monomial(c, m.clone()).to_expr();
            let j = m.junction();
            let pieces: Vec<(Path, Path)> = if self.t0.contains(&j) {
                self.b_sets[&j].iter().map(|b| (m.mu().concat(b), m.nu().concat(b))).collect()
            } else {
                vec![(m.mu().clone(), m.nu().clone())]
            };
            if pieces.is_empty() {
                return Err(ContractionError::Factorization {
                    path: e.vertex_name(j).to_string(),
                    rest: String::new(),
                    term: term(),
                });
            }
            for (mu, nu) in pieces {
                raw.push((c, self.factor(&mu, &term)?, self.factor(&nu, &term)?));
            }
        }
        Ok(self.contracted.normal_form(raw))
    }

    /// Checks `phi(preimage(y)) = y` on every basis monomial of `MM^*` with
    /// `|mu|, |nu| <= max_len`.
    pub fn preimage_sweep(&self, max_len: usize) -> Report {
        let g0 = &self.g0;
        let pool = basis_monomials(self.source.graph(), max_len, |mu, nu| {
            g0.contains(&mu.range()) && g0.contains(&nu.range())
        });
        let mut report = Report::new();
        let mut witness = None;
        for m in &pool {
            let y = self.source.from_monomial(1, m.clone());
            let back = self.preimage(&y).and_then(|x| self.phi(&x).map(|z| (x, z)));
            match back {
                Ok((_, z)) if z == y => {}
                Ok((x, z)) => witness = Some(format!("y={y} x={x} phi(x)={z}")),
                Err(err) => witness = Some(format!("y={y}: {err}")),
            }
            if witness.is_some() {
                break;
            }
        }
        match witness {
            None => report.pass_with("preimage-sweep", format!("{} monomials, max_len={max_len}", pool.len())),
            Some(w) => report.fail("preimage-sweep", w),
        }
        report
    }

    /// Structural hypotheses of the injectivity lemma plus a randomized check
    /// that sampled nonzero elements have nonzero image.
    pub fn injectivity_check(&self, samples: usize, seed: u64, max_len: usize) -> Report {
        let g = self.graph();
        let mut report = Report::new();

        let mut seen = VertexSet::new();
        let bad = g.vertices().find(|&v| {
            let img = self.family.vertex_image(v);
            let mut terms = img.terms();
            let ok = img.len() == 1
                && terms.next().is_some_and(|(m, c)| {
                    c == 1 && m.mu().is_vertex() && m.nu().is_vertex() && seen.insert(m.junction())
                });
            !ok
        });
        report
            .record("vertex-images", bad.map(|v| format!("q_{} -> {}", g.vertex_name(v), self.family.vertex_image(v))));

        let bad = g.edges().find(|&f| {
            let img = self.family.edge_image(f);
            let mut terms = img.terms();
            let ok =
                img.len() == 1 && terms.next().is_some_and(|(m, c)| c == 1 && m.mu().len() >= 1 && m.nu().is_vertex());
            !ok
        });
        report.record("edge-images", bad.map(|f| format!("t_{} -> {}", g.edge_name(f), self.family.edge_image(f))));

        let pool = basis_monomials(g, max_len, |_, _| true);
        let mut rng = Sampler::new(seed);
        let mut witness = None;
        let mut tried = 0;
        for _ in 0..samples {
            let Some(x) = rng.nonzero_element(&self.contracted, &pool, 6) else {
                break;
            };
            tried += 1;
            match self.phi(&x) {
                Ok(y) if !y.is_zero() => {}
                Ok(_) => witness = Some(x.to_expr()),
                Err(err) => witness = Some(format!("{x}: {err}")),
            }
            if witness.is_some() {
                break;
            }
        }
        match witness {
            None => report.pass_with("nonzero-images", format!("{tried} samples")),
            Some(w) => report.fail("nonzero-images", w),
        }
        report
    }

    /// `phi` preserves sums, products and the involution, and lands in `MM^*`.
    pub fn homomorphism_check(&self, samples: usize, seed: u64, max_len: usize) -> Report {
        let g = self.graph();
        let pool = basis_monomials(g, max_len, |_, _| true);
        let ctx = MoritaContext::new(self.source.clone(), self.g0.clone()).expect("G^0 lies in E^0");
        let mut rng = Sampler::new(seed);
        let mut report = Report::new();
        let mut failures: [Option<String>; 4] = Default::default();
        for _ in 0..samples {
            let x = rng.element(&self.contracted, &pool, 6);
            let y = rng.element(&self.contracted, &pool, 6);
            let (px, py) = match (self.phi(&x), self.phi(&y)) {
                (Ok(a), Ok(b)) => (a, b),
                (Err(err), _) | (_, Err(err)) => {
                    failures[0].get_or_insert(err.to_string());
                    break;
                }
            };
            let sum = self.phi(&(&x + &y)).expect("family verified");
            if sum != &px + &py {
                failures[0].get_or_insert(format!("x=({x}) y=({y})"));
            }
            let prod = self.phi(&(&x * &y)).expect("family verified");
            if prod != &px * &py {
                failures[1].get_or_insert(format!("x=({x}) y=({y})"));
            }
            if self.phi(&x.star()).expect("family verified") != px.star() {
                failures[2].get_or_insert(format!("x=({x})"));
            }
            if !ctx.in_mm_star(&px).expect("same algebra") {
                failures[3].get_or_insert(format!("x=({x}) phi(x)=({px})"));
            }
        }
        for (name, w) in
            ["phi-additive", "phi-multiplicative", "phi-involution", "phi-range-in-mm*"].into_iter().zip(failures)
        {
            report.record(name, w);
        }
        report
    }

    /// Every check the contraction supports, in a fixed order.
    pub fn verify(&self, max_len: usize, samples: usize, seed: u64) -> Report {
        let e = self.source.graph();
        let mut report = validate(e, &self.g0);
        report.extend(self.family_check());
        let bad = self
            .t0
            .iter()
            .find(|&&v| !matches!(self.b_identity_check(v), Ok(true)))
            .map(|&v| e.vertex_name(v).to_string());
        report.record("b-identities", bad);
        if self.verified().is_ok() {
            report.extend(self.homomorphism_check(samples, seed, max_len));
            report.extend(self.preimage_sweep(max_len));
            report.extend(self.injectivity_check(samples, seed, max_len));
        }
        match is_full(e, &self.g0) {
            Ok(true) => report.pass("g0-full"),
            Ok(false) => report.fail("g0-full", "ΣH(G^0) is a proper subset of E^0"),
            Err(err) => report.fail("g0-full", err.to_string()),
        }
        report
    }

    /// `G` in the standard format followed by `witness <edge> = <path>` lines.
    pub fn to_text(&self) -> String {
        let e = self.source.graph();
        let g = self.graph();
        let mut out = g.to_text();
        for f in g.edges() {
            let _ = writeln!(out, "witness {} = {}", g.edge_name(f), self.witness[f.index()].display(e));
        }
        out
    }

    pub fn graph_arc(&self) -> &Arc<Graph> {
        self.contracted.graph_arc()
    }
}
