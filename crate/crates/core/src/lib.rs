//! Exact symbolic kernel for q-commuting Laurent algebras, the quantum group
//! `SL₂^q`, its action on the quantum plane, and executable checks of the
//! Chebyshev trace cancellations at roots of unity.

pub mod cli;
pub mod error;
pub mod qmatrix;
pub mod qplane;
pub mod qscalar;
pub mod qtensor;
pub mod ring;
pub mod sl2q;
pub mod theorems;

pub use error::{Error, Result};
pub use qmatrix::{Matrix2, Triangular, WordSpec};
pub use qscalar::{CycloContext, IntPoly, QLaurent};
pub use qtensor::{TElement, TMonomial};
pub use ring::{QAlgebra, Ring};
pub use sl2q::SL2qElement;
pub use theorems::{Report, Status};
