//! Quantum `gl_n` through generators and relations, and its realization.

pub mod independence;
pub mod pbw;
pub mod relations;
pub mod word;
pub mod zeta;

pub use independence::{
    b3_family, coordinate_map, coordinate_vectors, first_independent_truncation,
    independence_check, pbw_family, IndependenceVerdict, DEFAULT_EVALUATION_POINTS,
};
pub use pbw::{pbw_indices, pbw_monomial, pbw_symbolic, pbw_word, PBWIndex};
pub use relations::{check_relations, divide_exact, RelationInstance, RelationReport};
pub use word::{Generator, GeneratorWord};
pub use zeta::{apply_generator, generator_element, zeta, zeta_symbolic};
