//! Theorem and lemma harnesses over graph streams and parameter samples.

mod claims;
mod report;
mod runner;
mod sampled;

pub use claims::{
    extremal_ttough_violation, BrouwerGu, SpectralBounds, Thm11, Thm12, Thm13, SPECTRAL_TOL,
};
pub use report::{CaseRecord, Outcome, Status, VerificationReport};
pub use runner::{run_stream, StreamClaim};
pub use sampled::{sample_dense_stream, verify_cycle_lemmas, verify_lemma_2_2};

use crate::error::Result;
use crate::graph::Graph;

/// Theorem 1.1 harness: spectral threshold implies 1-tough at fixed
/// minimum degree `delta`.
pub fn verify_thm_1_1<I>(stream: I, delta: usize, jobs: usize) -> Result<VerificationReport>
where
    I: IntoIterator<Item = Result<Graph>>,
{
    run_stream(&Thm11::new(delta), stream, jobs)
}

/// Theorem 1.2 harness: spectral threshold implies hamiltonicity among
/// 1-tough graphs.
pub fn verify_thm_1_2<I>(stream: I, jobs: usize) -> Result<VerificationReport>
where
    I: IntoIterator<Item = Result<Graph>>,
{
    run_stream(&Thm12::new(), stream, jobs)
}

/// Theorem 1.3 harness: spectral threshold implies t-toughness.
pub fn verify_thm_1_3<I>(stream: I, t: usize, jobs: usize) -> Result<VerificationReport>
where
    I: IntoIterator<Item = Result<Graph>>,
{
    run_stream(&Thm13::new(t), stream, jobs)
}

/// Closed-form bound harness with equality-set characterizations.
pub fn verify_spectral_bounds<I>(stream: I, jobs: usize) -> Result<VerificationReport>
where
    I: IntoIterator<Item = Result<Graph>>,
{
    run_stream(&SpectralBounds, stream, jobs)
}

/// Regular-graph toughness bound `t(G) > d/lambda - 1`.
pub fn verify_brouwer_gu<I>(stream: I, jobs: usize) -> Result<VerificationReport>
where
    I: IntoIterator<Item = Result<Graph>>,
{
    run_stream(&BrouwerGu, stream, jobs)
}
