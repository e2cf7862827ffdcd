//! Motion-planning toolkit built around graph neural networks.
//!
//! Two planning regimes are covered:
//!
//! - **Dense-graph critical samples**: a constant Halton graph covers a
//!   2-D configuration space; models trained on shortest-path bottleneck
//!   labels predict the critical region of a new planning problem.
//! - **Learned sampling distributions**: RRT (pendulum swing-up) and
//!   BiRRT (planar 6-joint arm) grow trees guided by a sampler that is
//!   itself a graph network over the partially built tree.
//!
//! Everything numeric is 64-bit and deterministic under a single seed:
//! the differentiable kernel ([`kernel`]) carries hand-derived backward
//! passes verified against finite differences, and graph filters are
//! permutation equivariant by construction.

pub mod dynamics;
pub mod env2d;
pub mod graph;
pub mod io;
pub mod kernel;
pub mod models;
pub mod rng;
pub mod sbp;
pub mod search;
pub mod verify;

mod error;

pub use error::{Error, Result};
