//! Fourier transforms between Hall algebras of quivers that differ by
//! reversing arrows, realized on `G_V`-invariant functions.

mod checks;
mod transform;

pub use checks::*;
pub use transform::*;

#[cfg(test)]
mod tests;
