pub mod coeff;
pub mod error;
pub mod gf;
pub mod hallcore;
pub mod partitions;
pub mod fourier;
pub mod primitives;
pub mod report;
pub mod suite;
pub mod repengine;

pub use error::{Error, Result};

/// Library version, stamped into cache files.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
