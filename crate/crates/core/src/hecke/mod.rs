//! Symmetric groups, the Hecke algebra `H(r)`, Young subgroups and double
//! cosets, and a definition-level multiplication oracle for `S(n, r)`.

pub mod algebra;
pub mod coset;
pub mod group;
pub mod oracle;
pub mod perm;

pub use algebra::HeckeElt;
pub use coset::{
    coset_to_matrix, distinguished_reps, in_young_subgroup, matrix_to_coset, row_blocks, x_lambda,
    CosetIndex,
};
pub use group::{SymmetricGroup, MAX_TABLE_DEGREE};
pub use oracle::{d_a, oracle_product, phi_to_normalized, DEFAULT_ORACLE_CAP};
pub use perm::Permutation;

/// All weak compositions of `r` into `n` parts, in lexicographic order.
pub fn enumerate_compositions(n: usize, r: usize) -> Vec<crate::laurent::IntVector> {
    crate::laurent::compositions(n, r as i64)
}
