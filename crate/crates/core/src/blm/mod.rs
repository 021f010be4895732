//! The realization `V(n)` of quantum `gl_n` inside `prod_r S(n, r)`, spanned
//! by the elements `A(delta, lam)`.

pub mod formulas;
pub mod order;
pub mod symbolic;
pub mod triangular;

pub use formulas::{
    b1_expand, delta_reduce, formula1_product, formula2_e, formula2_f, left_e, left_f, left_torus,
    symbolic_product,
};
pub use order::{norm, order_compare, precedes, preceq, sigma_ij};
pub use symbolic::{realize, Key, SymbolicElement, TruncatedElement};
pub use triangular::{
    factor_product, pbw_factors, triangular_product, triangular_symbolic, Factor, TriangularReport,
};
