//! Canonical GWO, PSO, and WOA baselines sharing the core run loop.

mod gwo;
mod pso;
mod woa;

pub use gwo::Gwo;
pub use pso::{Pso, PsoParams};
pub use woa::{Woa, WoaParams};
