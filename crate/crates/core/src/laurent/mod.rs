//! Exact arithmetic in `Z[v, v^-1]` and its specializations.

pub mod binomial;
pub mod cyclo;
pub mod int;
pub mod poly;
pub mod vector;

pub(crate) use binomial::balanced_binomial_ref;
pub use binomial::{
    balanced_binomial, balanced_bracket, balanced_factorial, scalar_trinomial, trinomial,
    unbalanced_binomial, unbalanced_bracket, unbalanced_factorial, unbalanced_trinomial,
    vector_binomial, vpow,
};
pub use cyclo::{cyclotomic_polynomial, eval_at_root, CycloScalar};
pub use int::Int;
pub use poly::LaurentPoly;
pub use vector::{box_range, compositions, IntVector};
