//! Exact computations for the exotic nilpotent cone of Sp(2n).
//!
//! * [`rootdata`]: type C_n weights, the hyperoctahedral Weyl group,
//!   Borel–Weil–Bott regularization, hull membership and the twisted action.
//! * [`kostant`]: partition functions over the positive roots and over the
//!   exotic weights.
//! * [`characters`]: weight multiplicities (Kostant sum and Freudenthal).
//! * [`sections`]: multiplicities of V_μ in global sections of dominant line
//!   bundles on the exotic Springer resolution.
//! * [`bipartitions`]: the orbit poset and its collapse maps.
//! * [`exoticlin`]: rational linear algebra on the symplectic space: orbit
//!   classification, representatives, adapted filtrations.
//!
//! No floating point is used anywhere.

pub mod bipartitions;
pub mod characters;
pub mod error;
pub mod exoticlin;
pub mod kostant;
pub mod linalg;
mod lp;
pub mod rootdata;
pub mod sections;

pub use error::{Error, Result};
