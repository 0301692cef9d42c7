//! One-shot task-adaptive channel selection for semantic segmentation of
//! multichannel images.
//!
//! The library implements the full selection pipeline (supernet training,
//! discrete forward-only pruning, fine-tuning), the exhaustive supervised
//! grid-search oracle, the direct-feeding / PCA / entropy baselines, and the
//! evaluation metrics (mA, mIoU, CAP, DCA, RAT, RAM), all on a small
//! deterministic CPU substrate so that every run is reproducible at the bit
//! level.

pub mod baselines;
pub mod combinatorics;
pub mod data;
pub mod error;
pub mod experiment;
pub mod metrics;
pub mod parallel;
pub mod pipeline;
pub mod rng;
pub mod schedule;
pub mod substrate;

pub use error::{Error, Result};
