//! Monte-Carlo engine for the two-phase cooperative protocol.
//!
//! Phase I: every source transmits at the common power `P`; the relay decodes
//! source `i` iff `x_i P >= eps` and harvests the surplus of every decoded
//! message. Phase II: within each coalition the pooled harvested power is
//! split equally over the decoded members and the relay forwards; delivery to
//! destination `i` succeeds iff `y_i * relay_power_i >= eps`.
//!
//! Trials are sharded into fixed-size chunks with per-chunk derived seeds, so
//! estimates are bitwise reproducible for a fixed `(seed, trials)` regardless
//! of how many worker threads execute the shards.

use crate::channel::{sample_link, LinkDraw, NetworkConfig};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;
use rayon::prelude::*;
use thiserror::Error;

/// Trials per shard; fixed so that the shard boundaries (and hence the random
/// streams) do not depend on the worker count.
const CHUNK_TRIALS: u64 = 8192;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum PartitionError {
    #[error("partition contains an empty block")]
    EmptyBlock,
    #[error("pair index {0} appears more than once")]
    DuplicateIndex(usize),
    #[error("pair index {0} is out of range for {1} pairs")]
    IndexOutOfRange(usize, usize),
    #[error("partition covers {0} of {1} pairs")]
    IncompleteCover(usize, usize),
}

/// A set partition of the pair indices `0..num_pairs` into disjoint
/// non-empty coalitions. Blocks are kept in canonical order: each block
/// sorted, blocks ordered by their smallest element.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Partition {
    blocks: Vec<Vec<usize>>,
    num_pairs: usize,
}

impl Partition {
    pub fn new(mut blocks: Vec<Vec<usize>>, num_pairs: usize) -> Result<Self, PartitionError> {
        let mut seen = vec![false; num_pairs];
        let mut covered = 0usize;
        for block in &blocks {
            if block.is_empty() {
                return Err(PartitionError::EmptyBlock);
            }
            for &i in block {
                if i >= num_pairs {
                    return Err(PartitionError::IndexOutOfRange(i, num_pairs));
                }
                if seen[i] {
                    return Err(PartitionError::DuplicateIndex(i));
                }
                seen[i] = true;
                covered += 1;
            }
        }
        if covered != num_pairs {
            return Err(PartitionError::IncompleteCover(covered, num_pairs));
        }
        for block in blocks.iter_mut() {
            block.sort_unstable();
        }
        blocks.sort();
        Ok(Partition { blocks, num_pairs })
    }

    /// The grand coalition over `n` pairs.
    pub fn grand(n: usize) -> Self {
        Partition {
            blocks: vec![(0..n).collect()],
            num_pairs: n,
        }
    }

    /// Every pair in its own singleton coalition.
    pub fn singletons(n: usize) -> Self {
        Partition {
            blocks: (0..n).map(|i| vec![i]).collect(),
            num_pairs: n,
        }
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn num_pairs(&self) -> usize {
        self.num_pairs
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    /// Size of the coalition containing pair `i`.
    pub fn block_size_of(&self, i: usize) -> usize {
        self.blocks
            .iter()
            .find(|b| b.contains(&i))
            .map(|b| b.len())
            .unwrap_or(0)
    }
}

/// Per-pair result of one protocol execution.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PairOutcome {
    pub decoded: bool,
    pub harvested_power: f64,
    pub relay_power: f64,
    pub delivered: bool,
}

impl PairOutcome {
    pub fn outage(&self) -> bool {
        !self.delivered
    }
}

/// Outcome of one Monte-Carlo realization over all pairs.
#[derive(Debug, Clone, PartialEq)]
pub struct TrialOutcome {
    pub pairs: Vec<PairOutcome>,
}

/// Outage frequency with its binomial standard error.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OutageEstimate {
    pub outage_probability: f64,
    pub trials: u64,
    pub std_error: f64,
}

impl OutageEstimate {
    fn from_count(outages: u64, trials: u64) -> Self {
        let p = outages as f64 / trials as f64;
        OutageEstimate {
            outage_probability: p,
            trials,
            std_error: (p * (1.0 - p) / trials as f64).sqrt(),
        }
    }
}

/// Runs one trial on externally supplied channel draws; `draws[i]` is the
/// (source-relay, relay-destination) pair for user pair `i`. This is the
/// injection hook the deterministic unit tests use.
pub fn run_trial_with_draws(
    config: &NetworkConfig,
    partition: &Partition,
    draws: &[(LinkDraw, LinkDraw)],
) -> TrialOutcome {
    debug_assert_eq!(draws.len(), partition.num_pairs());
    let eps = config.decode_threshold();
    let p = config.tx_power;
    let eta = config.harvest_efficiency;

    let mut pairs: Vec<PairOutcome> = draws
        .iter()
        .map(|(src, _)| {
            let decoded = src.composite * p >= eps;
            let harvested_power = if decoded {
                eta * (src.composite * p - eps)
            } else {
                0.0
            };
            PairOutcome {
                decoded,
                harvested_power,
                relay_power: 0.0,
                delivered: false,
            }
        })
        .collect();

    for block in partition.blocks() {
        let decoded: Vec<usize> = block.iter().copied().filter(|&i| pairs[i].decoded).collect();
        if decoded.is_empty() {
            // No member decoded: nothing harvested, whole coalition in outage.
            continue;
        }
        let pool: f64 = decoded.iter().map(|&i| pairs[i].harvested_power).sum();
        let share = pool / decoded.len() as f64;
        for &i in &decoded {
            pairs[i].relay_power = share;
            pairs[i].delivered = draws[i].1.composite * share >= eps;
        }
    }

    TrialOutcome { pairs }
}

/// Draws fresh channels for every pair and runs one trial. Draws are made in
/// pair order, independently of the partition structure, so comparing
/// partitions at the same seed uses common random numbers.
pub fn run_trial<R: Rng + ?Sized>(
    config: &NetworkConfig,
    partition: &Partition,
    rng: &mut R,
) -> TrialOutcome {
    let draws: Vec<(LinkDraw, LinkDraw)> = (0..partition.num_pairs())
        .map(|_| (sample_link(config, rng), sample_link(config, rng)))
        .collect();
    run_trial_with_draws(config, partition, &draws)
}

/// Derives the random seed for shard `chunk` from the base seed
/// (SplitMix64 finalizer applied twice).
fn chunk_seed(seed: u64, chunk: u64) -> u64 {
    splitmix64(splitmix64(seed.wrapping_add(chunk.wrapping_mul(0x9E37_79B9_7F4A_7C15))))
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Estimates the per-pair outage probability over `trials` independent
/// protocol executions. Shard-parallel; bitwise reproducible for fixed
/// `(seed, trials)` at any worker count.
pub fn estimate_outage(
    config: &NetworkConfig,
    partition: &Partition,
    trials: u64,
    seed: u64,
) -> Vec<OutageEstimate> {
    assert!(trials >= 1, "trials must be >= 1");
    let n = partition.num_pairs();
    let num_chunks = trials.div_ceil(CHUNK_TRIALS);
    let counts = (0..num_chunks)
        .into_par_iter()
        .map(|chunk| {
            let start = chunk * CHUNK_TRIALS;
            let len = CHUNK_TRIALS.min(trials - start);
            let mut rng = ChaCha12Rng::seed_from_u64(chunk_seed(seed, chunk));
            let mut counts = vec![0u64; n];
            for _ in 0..len {
                let outcome = run_trial(config, partition, &mut rng);
                for (i, pair) in outcome.pairs.iter().enumerate() {
                    if pair.outage() {
                        counts[i] += 1;
                    }
                }
            }
            counts
        })
        .reduce(
            || vec![0u64; n],
            |mut a, b| {
                for (x, y) in a.iter_mut().zip(b) {
                    *x += y;
                }
                a
            },
        );
    counts
        .into_iter()
        .map(|c| OutageEstimate::from_count(c, trials))
        .collect()
}

/// One cell of an experiment grid: a network configuration together with the
/// partition to simulate under it.
#[derive(Debug, Clone)]
pub struct SweepPoint {
    pub config: NetworkConfig,
    pub partition: Partition,
}

/// Which columns a sweep populates.
#[derive(Debug, Clone, Copy)]
pub struct SweepOptions {
    pub simulate: bool,
    pub analytic: bool,
    pub asymptotic: bool,
    pub trials: u64,
    pub seed: u64,
}

/// One output row: estimates for the pairs that sit in coalitions of
/// `coalition_size` under one grid cell.
#[derive(Debug, Clone)]
pub struct SweepRow {
    pub snr_db: f64,
    pub coalition_size: usize,
    pub outage_sim: Option<OutageEstimate>,
    pub outage_thm1: Option<f64>,
    pub outage_asym: Option<f64>,
    pub validity_flag: bool,
}

/// Maps [`estimate_outage`] over a grid and attaches the analytic and
/// asymptotic columns. Emits one row per distinct block size per cell; the
/// simulated column reports the estimate for the first pair of the first
/// block of that size (all pairs of equal-size blocks are exchangeable).
pub fn sweep(
    grid: &[SweepPoint],
    options: &SweepOptions,
) -> Result<Vec<SweepRow>, crate::analytic::AnalyticError> {
    use crate::analytic::{outage_asymptotic, outage_theorem1, AnalyticContext};

    let mut rows = Vec::new();
    for point in grid {
        let snr_db = 10.0 * point.config.tx_power.log10();
        let estimates = if options.simulate {
            Some(estimate_outage(
                &point.config,
                &point.partition,
                options.trials,
                options.seed,
            ))
        } else {
            None
        };
        let mut sizes: Vec<usize> = point.partition.blocks().iter().map(|b| b.len()).collect();
        sizes.sort_unstable();
        sizes.dedup();
        for size in sizes {
            let representative = point
                .partition
                .blocks()
                .iter()
                .find(|b| b.len() == size)
                .and_then(|b| b.first().copied())
                .expect("size comes from the block list");
            let outage_sim = estimates.as_ref().map(|e| e[representative]);
            let mut validity_flag = false;
            let outage_thm1 = if options.analytic {
                let ctx = AnalyticContext::from_config(&point.config, size)?;
                let v = outage_theorem1(&ctx)?;
                validity_flag |= v.clamped;
                Some(v.value)
            } else {
                None
            };
            let outage_asym = if options.asymptotic {
                let ctx = AnalyticContext::from_config(&point.config, size)?;
                let v = outage_asymptotic(&ctx);
                validity_flag |= v.clamped;
                Some(v.value)
            } else {
                None
            };
            rows.push(SweepRow {
                snr_db,
                coalition_size: size,
                outage_sim,
                outage_thm1,
                outage_asym,
                validity_flag,
            });
        }
    }
    Ok(rows)
}

/// Phase-I decode failure frequency of pair 0; isolates the first term of
/// the outage decomposition for validation against `cdf_x(eps/P)`.
pub fn estimate_phase1_failure(config: &NetworkConfig, trials: u64, seed: u64) -> OutageEstimate {
    let eps = config.decode_threshold();
    let num_chunks = trials.div_ceil(CHUNK_TRIALS);
    let count: u64 = (0..num_chunks)
        .into_par_iter()
        .map(|chunk| {
            let start = chunk * CHUNK_TRIALS;
            let len = CHUNK_TRIALS.min(trials - start);
            let mut rng = ChaCha12Rng::seed_from_u64(chunk_seed(seed, chunk));
            let mut c = 0u64;
            for _ in 0..len {
                let draw = sample_link(config, &mut rng);
                if draw.composite * config.tx_power < eps {
                    c += 1;
                }
            }
            c
        })
        .sum();
    OutageEstimate::from_count(count, trials)
}
