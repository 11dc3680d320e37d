//! Exact scalar arithmetic: Laurent polynomials in `q`, cyclotomic quotients,
//! quantum integers and binomials, and integer Chebyshev polynomials.

mod cyclo;
mod intpoly;
mod laurent;
mod quantum;

pub use cyclo::{cyclo_poly, valid_orders, CycloContext};
pub use intpoly::IntPoly;
pub use laurent::{cyclo_reduce, QLaurent};
pub(crate) use laurent::{merge_ctx, mul_into};
pub use quantum::{cheb, qbinom, qint, ChebKind, QIntKind};
