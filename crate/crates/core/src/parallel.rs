//! Chunked parallel sweep over every edge mask `0 .. 2^bits`.
//!
//! Each worker owns its scratch state and a `u64` histogram; histograms are
//! merged by element-wise addition. Integer addition is associative and
//! commutative, so the merged histogram does not depend on the schedule or
//! the worker count.

use std::sync::atomic::{AtomicU64, Ordering};

use rayon::prelude::*;

use crate::error::Error;
use crate::{DEFAULT_BIT_LIMIT, HARD_BIT_CAP};

const CHUNK_BITS: u32 = 14;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumConfig {
    pub workers: usize,
    pub bit_limit: u32,
}

impl Default for EnumConfig {
    fn default() -> Self {
        Self {
            workers: std::thread::available_parallelism().map_or(1, |n| n.get()),
            bit_limit: DEFAULT_BIT_LIMIT,
        }
    }
}

impl EnumConfig {
    pub fn with_workers(workers: usize) -> Self {
        Self { workers: workers.max(1), ..Self::default() }
    }

    /// Refuse `bits` above the configured limit or the hard cap.
    pub fn check_bits(&self, bits: u32) -> Result<(), Error> {
        let limit = self.bit_limit.min(HARD_BIT_CAP);
        if bits > limit {
            Err(Error::EnumerationLimit { bits, limit })
        } else {
            Ok(())
        }
    }
}

/// Visit every mask in `0 .. 2^bits` and return the merged histogram.
///
/// `visit(scratch, mask, hist)` must only read `mask` and write into its own
/// `scratch` and `hist`.
pub fn sweep_masks<S, I, F>(
    cfg: &EnumConfig,
    bits: u32,
    hist_len: usize,
    init: I,
    visit: F,
) -> Result<Vec<u64>, Error>
where
    S: Send,
    I: Fn() -> S + Sync + Send,
    F: Fn(&mut S, u64, &mut [u64]) + Sync + Send,
{
    cfg.check_bits(bits)?;
    let total: u64 = 1u64 << bits;
    let chunk = 1u64 << CHUNK_BITS.min(bits);
    let n_chunks = total / chunk;
    let done = AtomicU64::new(0);
    let report_every = (n_chunks / 16).max(1);

    let run = || {
        (0..n_chunks)
            .into_par_iter()
            .fold(
                || (init(), vec![0u64; hist_len]),
                |(mut scratch, mut hist), c| {
                    let lo = c * chunk;
                    for mask in lo..lo + chunk {
                        visit(&mut scratch, mask, &mut hist);
                    }
                    let finished = done.fetch_add(1, Ordering::Relaxed) + 1;
                    if n_chunks >= 64 && finished.is_multiple_of(report_every) {
                        log::info!("enumerated {}/{} chunks of 2^{} masks", finished, n_chunks, CHUNK_BITS);
                    }
                    (scratch, hist)
                },
            )
            .map(|(_, hist)| hist)
            .reduce(
                || vec![0u64; hist_len],
                |mut a, b| {
                    a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                    a
                },
            )
    };

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.workers.max(1))
        .build()
        .map_err(|e| Error::InvalidArgument(format!("cannot start worker pool: {e}")))?;
    Ok(pool.install(run))
}
