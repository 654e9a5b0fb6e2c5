//! Symbolic computation with Leavitt path algebras of finite directed graphs.
//!
//! * [`graph`]: graphs, paths, hereditary and saturated closures, text format.
//! * [`algebra`]: normal-form arithmetic, Leavitt families and homomorphisms.
//! * [`morita`]: membership tests for the Morita context of a vertex subset.
//! * [`contraction`]: contracting an acyclic subgraph and the comparison map.
//! * [`moves`]: in-delays, desingularisation, collapses and example fixtures.
//! * [`reduction`]: certified search for reduction witnesses.

pub mod algebra;
pub mod contraction;
pub mod graph;
pub mod morita;
pub mod moves;
pub mod reduction;
pub mod report;
pub mod ring;

pub use algebra::{Algebra, Element, FamilyAssignment, Monomial, VerifiedFamily};
pub use graph::{Graph, Path, VertexSet};
pub use report::Report;
pub use ring::{Coeff, RingSpec};
