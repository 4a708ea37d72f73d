//! Claim runner: feeds a graph stream through a claim check, sequentially
//! or over a thread pool, merging results in input order.

use super::report::{Outcome, VerificationReport};
use crate::error::Result;
use crate::graph::Graph;
use rayon::prelude::*;

const CHUNK: usize = 8192;

/// A per-graph check run over a stream.
pub trait StreamClaim: Sync {
    fn id(&self) -> String;

    /// Header notes for the report (sampling bias, filters applied).
    fn notes(&self) -> Vec<String> {
        Vec::new()
    }

    fn evaluate(&self, g: &Graph) -> Outcome;
}

/// Run `claim` over the stream. Stream errors abort the run and carry line
/// numbers. `jobs` > 1 evaluates chunks in parallel; results are absorbed
/// in input order either way, so reports are byte-identical across worker
/// counts.
pub fn run_stream<C, I>(claim: &C, stream: I, jobs: usize) -> Result<VerificationReport>
where
    C: StreamClaim,
    I: IntoIterator<Item = Result<Graph>>,
{
    let mut report = VerificationReport::new(claim.id(), claim.notes());
    let mut iter = stream.into_iter();
    if jobs <= 1 {
        for g in iter {
            report.absorb(claim.evaluate(&g?));
        }
        return Ok(report);
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| crate::error::Error::InvalidArgument(format!("thread pool: {e}")))?;
    loop {
        let mut chunk = Vec::with_capacity(CHUNK);
        for g in iter.by_ref().take(CHUNK) {
            chunk.push(g?);
        }
        if chunk.is_empty() {
            break;
        }
        let outcomes: Vec<Outcome> =
            pool.install(|| chunk.par_iter().map(|g| claim.evaluate(g)).collect());
        for o in outcomes {
            report.absorb(o);
        }
    }
    Ok(report)
}
