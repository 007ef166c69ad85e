//! Finite fields `GF(p^e)`, their additive characters, and small dense
//! matrices over them.

mod field;
mod mat;
mod tables;

pub use field::{
    additive_character, enumerate, is_irreducible, is_prime, prime_power, trace_to_prime, FieldElem, FieldSpec, MAX_ENUM_ORDER,
};
pub use mat::{gaussian_binomial, gl_order, subspaces, Mat, Subspace};
pub use tables::{Gf, MAX_TABLE_ORDER};
