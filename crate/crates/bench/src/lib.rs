//! Seeded workloads shared by the benchmarks.

use leavitt_core::algebra::sample::{basis_monomials, Sampler};
use leavitt_core::moves::{Fixture, FixtureName};
use leavitt_core::{Algebra, Element, RingSpec};

/// The algebra of a fixture over `Z` and `count` random elements with up to
/// `terms` terms and path length at most `max_len`.
pub fn elements(
    name: FixtureName,
    depth: usize,
    count: usize,
    terms: usize,
    max_len: usize,
) -> (Algebra, Vec<Element>) {
    let fx = Fixture::new(name, depth).expect("valid fixture depth");
    let alg = fx.algebra(RingSpec::Integers);
    let pool = basis_monomials(alg.graph(), max_len, |_, _| true);
    let mut s = Sampler::new(depth as u64);
    let xs = (0..count).map(|_| s.element(&alg, &pool, terms)).collect();
    (alg, xs)
}
