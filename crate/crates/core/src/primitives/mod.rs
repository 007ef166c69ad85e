//! The named primitive elements and the checks of their identities.

mod construct;
mod verify;

pub use construct::*;
pub use verify::*;

#[cfg(test)]
mod tests;
