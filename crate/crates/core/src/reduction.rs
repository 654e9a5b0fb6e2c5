//! Certified search for reduction witnesses.
//!
//! For nonzero `x` the search looks for paths `mu`, `nu` such that
//! `s_{mu^*} x s_nu` is either `r p_v` with `r != 0`, or a nonzero
//! polynomial `sum r_i s_alpha^i` in a single cycle `alpha`, where negative
//! powers stand for `s_{alpha^*}^{|i|}` and `s_alpha^0 = p_{r(alpha)}`.
//! Every returned certificate can be rechecked independently.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;

use thiserror::Error;

use crate::algebra::{Algebra, Element};
use crate::graph::{Graph, GraphError, Path, PathFilter, VertexId};
use crate::ring::Coeff;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ReductionError {
    #[error("cannot reduce the zero element")]
    Zero,
    #[error("certificate: {0}")]
    Syntax(String),
    #[error("certificate: {0}")]
    Graph(#[from] GraphError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CertificateKind {
    /// `s_{mu^*} x s_nu = r p_v`.
    Vertex { r: Coeff, v: VertexId },
    /// `s_{mu^*} x s_nu = sum_i r_i s_alpha^i`; only nonzero `r_i` are stored.
    Cycle { alpha: Path, coeffs: BTreeMap<i64, Coeff> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionCertificate {
    pub mu: Path,
    pub nu: Path,
    pub kind: CertificateKind,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Reduction {
    Found(ReductionCertificate),
    /// No pair with `|mu|, |nu| <= bound` works.
    Exhausted {
        bound: usize,
    },
}

/// Default search bound: the largest `|mu| + |nu|` among the terms of `x`.
pub fn default_bound(x: &Element) -> usize {
    x.terms().map(|(m, _)| m.mu().len() + m.nu().len()).max().unwrap_or(0)
}

/// `s_alpha^i` for a cycle `alpha`, with the negative-power convention.
pub fn cycle_power(alg: &Algebra, alpha: &Path, i: i64) -> Element {
    let p = alpha.power(i.unsigned_abs() as usize);
    if i >= 0 {
        alg.path(&p)
    } else {
        alg.ghost(&p)
    }
}

impl ReductionCertificate {
    /// The element the certificate claims `s_{mu^*} x s_nu` equals.
    pub fn claimed(&self, alg: &Algebra) -> Element {
        match &self.kind {
            CertificateKind::Vertex { r, v } => alg.p(*v).scale(*r),
            CertificateKind::Cycle { alpha, coeffs } => {
                coeffs.iter().fold(alg.zero(), |acc, (&i, &c)| &acc + &cycle_power(alg, alpha, i).scale(c))
            }
        }
    }

    pub fn to_text(&self, g: &Graph) -> String {
        let mut out = format!("mu={} nu={}", self.mu.display(g), self.nu.display(g));
        match &self.kind {
            CertificateKind::Vertex { r, v } => {
                let _ = write!(out, " kind=vertex r={r} v={}", g.vertex_name(*v));
            }
            CertificateKind::Cycle { alpha, coeffs } => {
                let list: Vec<String> = coeffs.iter().map(|(i, c)| format!("{i}:{c}")).collect();
                let _ = write!(out, " kind=cycle alpha={} coeffs={}", alpha.display(g), list.join(","));
            }
        }
        out
    }

    pub fn parse(g: &Graph, text: &str) -> Result<ReductionCertificate, ReductionError> {
        let syntax = |m: String| ReductionError::Syntax(m);
        let mut fields: BTreeMap<&str, &str> = BTreeMap::new();
        for tok in text.split_whitespace() {
            let (k, v) = tok.split_once('=').ok_or_else(|| syntax(format!("expected key=value, got `{tok}`")))?;
            if fields.insert(k, v).is_some() {
                return Err(syntax(format!("duplicate field `{k}`")));
            }
        }
        let mut take = |k: &str| fields.remove(k).ok_or_else(|| syntax(format!("missing field `{k}`")));
        let mu = Path::parse(g, take("mu")?)?;
        let nu = Path::parse(g, take("nu")?)?;
        let kind = match take("kind")? {
            "vertex" => {
                let r = take("r")?;
                let r: Coeff = r.parse().map_err(|_| syntax(format!("bad coefficient `{r}`")))?;
                let v = g.require_vertex(take("v")?)?;
                CertificateKind::Vertex { r, v }
            }
            "cycle" => {
                let alpha = Path::parse(g, take("alpha")?)?;
                let mut coeffs = BTreeMap::new();
                let list = take("coeffs")?;
                for item in list.split(',').filter(|s| !s.is_empty()) {
                    let bad = || syntax(format!("bad coefficient entry `{item}`"));
                    let (i, c) = item.split_once(':').ok_or_else(bad)?;
                    let i: i64 = i.parse().map_err(|_| bad())?;
                    let c: Coeff = c.parse().map_err(|_| bad())?;
                    if coeffs.insert(i, c).is_some() {
                        return Err(syntax(format!("power {i} listed twice")));
                    }
                }
                CertificateKind::Cycle { alpha, coeffs }
            }
            other => return Err(syntax(format!("unknown kind `{other}`"))),
        };
        if let Some(k) = fields.keys().next() {
            return Err(syntax(format!("unexpected field `{k}`")));
        }
        Ok(ReductionCertificate { mu, nu, kind })
    }
}

/// Matches `y` against the two conclusion shapes.
fn classify(g: &Graph, y: &Element) -> Option<CertificateKind> {
    if y.is_zero() {
        return None;
    }
    if y.len() == 1 {
        let (m, c) = y.terms().next().expect("one term");
        if m.mu().is_vertex() && m.nu().is_vertex() {
            return Some(CertificateKind::Vertex { r: c, v: m.junction() });
        }
    }
    let shortest = y.terms().flat_map(|(m, _)| [m.mu(), m.nu()]).filter(|p| !p.is_vertex()).min_by_key(|p| p.len())?;
    let (alpha, _) = shortest.primitive_root();
    if !alpha.is_cycle(g) {
        return None;
    }
    let v = alpha.range();
    let power_of = |p: &Path| -> Option<i64> {
        if !p.len().is_multiple_of(alpha.len()) || p.range() != v {
            return None;
        }
        let k = p.len() / alpha.len();
        (alpha.power(k) == *p).then_some(k as i64)
    };
    let mut coeffs = BTreeMap::new();
    for (m, c) in y.terms() {
        let i = match (m.mu().is_vertex(), m.nu().is_vertex()) {
            (true, true) if m.junction() == v => 0,
            (false, true) => power_of(m.mu())?,
            (true, false) => -power_of(m.nu())?,
            _ => return None,
        };
        coeffs.insert(i, c);
    }
    Some(CertificateKind::Cycle { alpha, coeffs })
}

fn sorted_paths(g: &Graph, max_len: usize) -> Vec<Path> {
    let mut paths = g.enumerate_paths(max_len, &PathFilter::default());
    paths.sort();
    paths
}

fn search(x: &Element, bound: usize) -> Option<ReductionCertificate> {
    let alg = x.algebra();
    let g = alg.graph();
    let paths = sorted_paths(g, bound);
    let mut by_len: Vec<Vec<&Path>> = vec![Vec::new(); bound + 1];
    for p in &paths {
        by_len[p.len()].push(p);
    }
    let mut right: HashMap<&Path, Element> = HashMap::new();
    for total in 0..=2 * bound {
        let lo = total.saturating_sub(bound);
        let hi = total.min(bound);
        for lm in lo..=hi {
            let ln = total - lm;
            for &mu in &by_len[lm] {
                let left = alg.ghost(mu);
                for &nu in &by_len[ln] {
                    let xr = right.entry(nu).or_insert_with(|| x * &alg.path(nu));
                    if xr.is_zero() {
                        continue;
                    }
                    let y = &left * xr;
                    if let Some(kind) = classify(g, &y) {
                        return Some(ReductionCertificate { mu: mu.clone(), nu: nu.clone(), kind });
                    }
                }
            }
        }
    }
    None
}

/// Searches pairs in order of total length, then `mu`, then `nu`. Starts at
/// `max_len` (or [`default_bound`]) and widens once by 2.
pub fn reduce(x: &Element, max_len: Option<usize>) -> Result<Reduction, ReductionError> {
    if x.is_zero() {
        return Err(ReductionError::Zero);
    }
    let start = max_len.unwrap_or_else(|| default_bound(x));
    for bound in [start, start + 2] {
        if let Some(cert) = search(x, bound) {
            return Ok(Reduction::Found(cert));
        }
    }
    Ok(Reduction::Exhausted { bound: start + 2 })
}

/// Recomputes `s_{mu^*} x s_nu` and compares it with the certified form.
pub fn verify_certificate(x: &Element, cert: &ReductionCertificate) -> bool {
    let alg = x.algebra();
    let g = alg.graph();
    let ring = alg.ring();
    let well_formed = match &cert.kind {
        CertificateKind::Vertex { r, .. } => !ring.is_zero(*r),
        CertificateKind::Cycle { alpha, coeffs } => alpha.is_cycle(g) && coeffs.values().any(|&c| !ring.is_zero(c)),
    };
    if !well_formed {
        return false;
    }
    let y = &(&alg.ghost(&cert.mu) * x) * &alg.path(&cert.nu);
    !y.is_zero() && y == cert.claimed(alg)
}
