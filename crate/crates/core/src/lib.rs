//! Exact invariants of the Brill-Noether curve `W¹ₐ₊₂(C)` of a general curve
//! of genus `2a+1`, with a registry of identity checks over ranges of `a`.
//!
//! - [`exactmath`]: big integers, reduced rationals, memoized factorials.
//! - [`invariants`]: the formulas, one method each on [`invariants::Formulas`].
//! - [`verify`]: named identity checks, range runner, worked examples.
//! - [`render`]: json / csv / markdown / plain output.

pub mod divisor;
pub mod error;
pub mod exactmath;
pub mod invariants;
pub mod render;
pub mod verify;

pub use error::{Error, Result};
