//! Exact arithmetic in Leavitt path algebras `L_R(E)` of finite graphs.
//!
//! Elements are kept as linear combinations of monomials `s_mu s_{nu^*}` in
//! the basis that excludes monomials whose two paths end in the same special
//! edge. Equality of elements is equality of these term maps.

mod element;
mod expr;
mod family;
pub mod sample;

pub use element::{Algebra, AlgebraError, Element, Monomial};
pub use expr::ExprError;
pub use family::{FamilyAssignment, FamilyError, VerifiedFamily};
