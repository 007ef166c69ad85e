//! Engine selection and the on-disk cache used by the `hallalg` binary.

pub mod cache;
pub mod engines;
