//! Exact verification and enumeration for the nonnegative floor-function
//! commutator
//!
//! ```text
//! ⌊α⌊βx⌋⌋ ≥ ⌊β⌊αx⌋⌋   for all real x
//! ```
//!
//! with negative rational dilations `α, β < 0`.
//!
//! The crate decides membership of `(α, β)` in the solution set five
//! independent ways (an exhaustive period scan, a strict rounding ordering,
//! a torus-orbit avoidance test, a lattice avoidance test and an explicit
//! witness search), exposes the symmetry maps of the set, and renders
//! atlases of it.
//!
//! ```
//! use floor_commutator::{classifier::{decide, Kind}, exactnum::Rat};
//!
//! let alpha: Rat = "-3/2".parse().unwrap();
//! let beta: Rat = "-6/11".parse().unwrap();
//! let decision = decide(&alpha, &beta).unwrap();
//! assert!(decision.verdict.holds);
//! assert_eq!(decision.kind(), Kind::Sporadic);
//! ```

pub mod atlas;
pub mod classifier;
pub mod cli;
pub mod commutator;
pub mod error;
pub mod exactnum;
pub mod geometry;
pub mod symmetry;

pub use error::{Error, Result};
pub use exactnum::{PosRat, Rat};
