//! Independent checks on the exact evaluator: Haar sampling with Monte Carlo
//! estimates, and exact integration over `O(2)`.

mod estimate;
mod haar;
mod o2;

pub use estimate::{
    chunk_seed, estimate_observable, estimate_observables, mc_estimate, mc_estimate_many,
    mc_estimate_with, McConfig, McError, McEstimate, CHUNK_SIZE,
};
pub use haar::{sample_haar, sample_haar_columns, HaarSample};
pub use o2::{o2_exact, wallis_moment};
