//! The twisted Ringel-Hall bialgebra over a representation engine.

mod checks;
mod element;
mod ops;
mod primitive;

pub use checks::{adjointness_check, associativity_check, coassociativity_check, grades_up_to};
pub use element::{HallElement, TensorElement};
pub use ops::{
    aut_rational, comultiply, comultiply_in, comultiply_restricted, green_form, green_form_tensor, multiply, one_d,
    one_reg, one_subset, twist, Predicate, Subcategory,
};
pub use primitive::{coordinates, is_primitive, primitive_subspace, primitivity_defect};

#[cfg(test)]
mod tests;
