//! Isoclasses of quiver representations over finite fields.

pub mod brute;
pub mod decompose;
pub mod engine;
pub mod hall;
pub mod hallpoly;
pub mod kronecker;
pub mod multiseg;
pub mod nilcyclic;
pub mod point;
pub mod quiver;

pub use brute::{BruteEngine, OrbitData, OrbitSummary, MAX_BRUTE_POINTS, MAX_BRUTE_TOTAL_DIM};
pub use engine::{
    hall_number, hom_dim, is_indecomposable, product_index, socle, ClassKey, Decomposition, EngineMemo, HallTable,
    Memo, ProductIndex, RepEngine,
};
pub use hall::{count_hall_number, for_each_submodule};
pub use hallpoly::hall_polynomial;
pub use multiseg::{multisegments_of, Multisegment};
pub use nilcyclic::NilCyclicEngine;
pub use point::{hom_dim_points, hom_space, RepPoint};
pub use quiver::{DimVector, Quiver};
