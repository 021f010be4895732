//! The q-Schur algebra `S(n, r)` in the normalized basis `{[A]}`.

pub mod element;
pub mod formulas;
pub mod matrix;
pub mod product;

pub use element::SchurElement;
pub use formulas::{diag_mult, element_a, element_a_signed, multiply_bm, multiply_cm, Side};
pub use matrix::{theta_matrices, theta_pm_matrices, ThetaMatrix};
pub use product::{general_product, ProductEngine, ProductMode};
