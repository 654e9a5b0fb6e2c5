//! Seeded random elements and graphs for property checks.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::element::{Algebra, Element, Monomial};
use crate::graph::{Graph, Path, PathFilter, VertexId};
use crate::ring::Coeff;

/// Basis monomials `s_mu s_{nu^*}` with `|mu|, |nu| <= max_len` accepted by
/// `keep`, in a deterministic order.
pub fn basis_monomials(g: &Graph, max_len: usize, keep: impl Fn(&Path, &Path) -> bool) -> Vec<Monomial> {
    let mut by_source: BTreeMap<VertexId, Vec<Path>> = BTreeMap::new();
    for p in g.enumerate_paths(max_len, &PathFilter::default()) {
        by_source.entry(p.source()).or_default().push(p);
    }
    let mut out = Vec::new();
    for paths in by_source.values() {
        for mu in paths {
            for nu in paths {
                if !keep(mu, nu) {
                    continue;
                }
                let m = Monomial::new(mu.clone(), nu.clone()).expect("same junction");
                if !m.is_reducible(g) {
                    out.push(m);
                }
            }
        }
    }
    out
}

/// Deterministic source of random coefficients, elements and graphs.
pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Sampler {
        Sampler { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    /// A coefficient in `{-3, ..., 3}` that is nonzero in the ring.
    pub fn coeff(&mut self, alg: &Algebra) -> Coeff {
        let ring = alg.ring();
        loop {
            let c = ring.reduce(self.rng.gen_range(-3i128..=3));
            if c != 0 {
                return c;
            }
        }
    }

    /// Random combination of up to `max_terms` monomials from `pool`.
    /// Returns zero when the pool is empty.
    pub fn element(&mut self, alg: &Algebra, pool: &[Monomial], max_terms: usize) -> Element {
        if pool.is_empty() || max_terms == 0 {
            return alg.zero();
        }
        let n = self.rng.gen_range(1..=max_terms);
        let raw: Vec<_> = (0..n)
            .map(|_| {
                let m = pool.choose(&mut self.rng).expect("nonempty pool").clone();
                (self.coeff(alg), m.mu().clone(), m.nu().clone())
            })
            .collect();
        alg.normal_form(raw)
    }

    /// Like [`Sampler::element`] but retries until the result is nonzero.
    pub fn nonzero_element(&mut self, alg: &Algebra, pool: &[Monomial], max_terms: usize) -> Option<Element> {
        if pool.is_empty() {
            return None;
        }
        loop {
            let x = self.element(alg, pool, max_terms);
            if !x.is_zero() {
                return Some(x);
            }
        }
    }

    /// Random graph on `v0..v{n-1}` with `edges` random edges `e0, e1, ...`
    /// (loops and parallel edges allowed).
    pub fn graph(&mut self, name: &str, vertices: usize, edges: usize) -> Graph {
        let vs: Vec<String> = (0..vertices).map(|i| format!("v{i}")).collect();
        let es: Vec<(String, String, String)> = if vertices == 0 {
            Vec::new()
        } else {
            (0..edges)
                .map(|i| {
                    let s = self.rng.gen_range(0..vertices);
                    let r = self.rng.gen_range(0..vertices);
                    (format!("e{i}"), vs[s].clone(), vs[r].clone())
                })
                .collect()
        };
        Graph::new(name, vs, es).expect("generated graph is valid")
    }

    /// Shuffles in place.
    pub fn shuffle<T>(&mut self, xs: &mut [T]) {
        xs.shuffle(&mut self.rng);
    }

    pub fn below(&mut self, n: usize) -> usize {
        self.rng.gen_range(0..n)
    }

    pub fn chance(&mut self, p: f64) -> bool {
        self.rng.gen_bool(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::RingSpec;

    #[test]
    fn same_seed_same_stream() {
        let g = Graph::new("l", ["v"], [("a", "v", "v")]).unwrap();
        let alg = Algebra::new(g, RingSpec::Integers);
        let pool = basis_monomials(alg.graph(), 3, |_, _| true);
        let a: Vec<_> = {
            let mut s = Sampler::new(7);
            (0..5).map(|_| s.element(&alg, &pool, 4)).collect()
        };
        let b: Vec<_> = {
            let mut s = Sampler::new(7);
            (0..5).map(|_| s.element(&alg, &pool, 4)).collect()
        };
        assert_eq!(a, b);
    }

    #[test]
    fn pool_is_basis() {
        let g = Graph::new("par", ["v", "w"], [("e", "w", "v"), ("f", "w", "v")]).unwrap();
        let pool = basis_monomials(&g, 1, |_, _| true);
        // p_v, p_w, s_e, s_f, s_e*, s_f*, s_e s_f*, s_f s_e*, s_f s_f* (s_e s_e* is excluded)
        assert_eq!(pool.len(), 9);
        assert!(pool.iter().all(|m| !m.is_reducible(&g)));
    }
}
