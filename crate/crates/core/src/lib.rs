//! Exact enumeration and verification of Gallai (rainbow-triangle-free) edge
//! colorings on small graphs.

pub mod containers;
pub mod counting;
pub mod error;
pub mod extremal;
pub mod graph;
pub mod stability;
pub mod templates;

pub use error::{Error, Result};
pub use num_bigint::BigUint as BigCount;
