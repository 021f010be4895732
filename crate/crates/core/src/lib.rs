//! Exact computation in q-Schur algebras `S(n,r)` over `Z[v, v^-1]`, the
//! integral realization of quantum `gl_n` inside `prod_r S(n,r)`, and its
//! specialization at odd roots of unity.

pub mod blm;
pub mod error;
pub mod hecke;
pub mod laurent;
pub mod linalg;
pub mod schur;
pub mod specialize;
pub mod uqgl;
pub mod verify;

pub use error::{Error, Result};
pub use laurent::{CycloScalar, Int, IntVector, LaurentPoly};
pub use schur::{SchurElement, ThetaMatrix};
