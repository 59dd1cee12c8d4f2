//! Exact computations for E-series of character varieties, Kac polynomials
//! of comet-shaped quivers, and the Hilbert scheme of points on the plane.

pub mod algebra;
pub mod charvar;
pub mod error;
pub mod glnchar;
pub mod hilbmod;
pub mod macdonald;
pub mod oracle_ff;
pub mod partitions;
pub mod quiver;
pub mod report;
pub mod symfunc;
pub mod verify;

pub use error::{Error, Result};
