//! Seeded Monte-Carlo estimation of expected chain indices, exhaustive exact
//! expectations, and the comparison series between the two chain families.
//!
//! The estimator never materializes graphs: each sampled chain is reduced to
//! its edge-type census incrementally and evaluated through the three-term
//! fast path, so chains with millions of rings stay cheap.

use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::mpsc;
use std::time::{Duration, Instant};

use rand::RngExt;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::closed_forms::{expected_chain_variant, resolve_chain_shift};
use crate::error::{Error, Result};
use crate::generators::{census_model, step_from_unit, CensusCounts, ChainFamily, ChainProbabilities, ChainStep};
use crate::generators::{enumerate_chains_capped, DEFAULT_ENUMERATION_CAP};
use crate::sombor::{edge_weight, sombor_from_census, IndexVariant};

/// Samples per deterministic block. The block layout depends only on the
/// sample count, never on the worker count, so results are bit-identical for
/// any parallelism level.
pub const MC_BLOCK_SIZE: u64 = 4096;

/// Monte-Carlo estimate with its standard error.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct McResult {
    /// Sample mean of the index over independently sampled chains.
    pub mean: f64,
    /// Unbiased sample standard deviation divided by `sqrt(samples)`.
    pub std_error: f64,
    pub samples: u64,
    pub seed: u64,
    pub elapsed: Duration,
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Seed of block `b` under root seed `seed`:
/// `splitmix64(seed + splitmix64(b))` with wrapping addition. This is the
/// published mixing function; reproducing a run only needs the root seed.
pub fn block_seed(seed: u64, block: u64) -> u64 {
    splitmix64(seed.wrapping_add(splitmix64(block)))
}

/// Running count/mean/M2 moments.
#[derive(Debug, Clone, Copy, Default)]
struct Moments {
    count: u64,
    mean: f64,
    m2: f64,
}

impl Moments {
    fn push(&mut self, x: f64) {
        self.count += 1;
        let delta = x - self.mean;
        self.mean += delta / self.count as f64;
        self.m2 += delta * (x - self.mean);
    }

    fn merge(a: Moments, b: Moments) -> Moments {
        if a.count == 0 {
            return b;
        }
        if b.count == 0 {
            return a;
        }
        let count = a.count + b.count;
        let delta = b.mean - a.mean;
        let mean = a.mean + delta * (b.count as f64 / count as f64);
        let m2 = a.m2 + b.m2 + delta * delta * (a.count as f64 * b.count as f64 / count as f64);
        Moments { count, mean, m2 }
    }
}

/// Merge block moments pairwise in fixed block order.
fn pairwise_merge(mut blocks: Vec<Moments>) -> Moments {
    if blocks.is_empty() {
        return Moments::default();
    }
    while blocks.len() > 1 {
        blocks = blocks
            .chunks(2)
            .map(|pair| {
                if pair.len() == 2 {
                    Moments::merge(pair[0], pair[1])
                } else {
                    pair[0]
                }
            })
            .collect();
    }
    blocks[0]
}

/// Per-sample index evaluator over the incremental census.
struct CensusSampler {
    steps: u64,
    probs: ChainProbabilities,
    base: CensusCounts,
    linear_delta: CensusCounts,
    kink_delta: CensusCounts,
    weight22: f64,
    weight23: f64,
    weight33: f64,
}

impl CensusSampler {
    fn new(family: ChainFamily, n: u64, probs: ChainProbabilities, shift: f64) -> Self {
        let (base, linear_delta, kink_delta) = census_model(family);
        CensusSampler {
            steps: n - 2,
            probs,
            base,
            linear_delta,
            kink_delta,
            weight22: edge_weight(2, 2, shift),
            weight23: edge_weight(2, 3, shift),
            weight33: edge_weight(3, 3, shift),
        }
    }

    fn draw(&self, rng: &mut ChaCha8Rng) -> f64 {
        let mut linear = 0u64;
        for _ in 0..self.steps {
            if step_from_unit(rng.random::<f64>(), self.probs) == ChainStep::Type2 {
                linear += 1;
            }
        }
        let kinks = self.steps - linear;
        let m22 = (self.base.0 + linear * self.linear_delta.0 + kinks * self.kink_delta.0) as f64;
        let m23 = (self.base.1 + linear * self.linear_delta.1 + kinks * self.kink_delta.1) as f64;
        let m33 = (self.base.2 + linear * self.linear_delta.2 + kinks * self.kink_delta.2) as f64;
        self.weight22 * m22 + self.weight23 * m23 + self.weight33 * m33
    }

    fn run_block(&self, seed: u64, block: u64, samples: u64) -> Moments {
        let mut rng = ChaCha8Rng::seed_from_u64(block_seed(seed, block));
        let mut moments = Moments::default();
        let start = block * MC_BLOCK_SIZE;
        let count = MC_BLOCK_SIZE.min(samples - start);
        for _ in 0..count {
            moments.push(self.draw(&mut rng));
        }
        moments
    }
}

/// Monte-Carlo estimate of the expected index over the random chain model.
///
/// Samples are split into fixed-size blocks; block `b` draws from its own
/// generator seeded via [`block_seed`], and block moments are merged pairwise
/// in block order. The result is therefore bit-identical for a fixed
/// `(seed, samples)` regardless of `workers`, which only bounds parallelism.
pub fn mc_expectation(
    family: ChainFamily,
    n: u64,
    probs: ChainProbabilities,
    variant: IndexVariant,
    samples: u64,
    seed: u64,
    workers: usize,
) -> Result<McResult> {
    if n < 2 {
        return Err(Error::domain("chain length n must be ≥ 2"));
    }
    if samples < 1 {
        return Err(Error::domain("sample count must be ≥ 1"));
    }
    if workers < 1 {
        return Err(Error::domain("worker count must be ≥ 1"));
    }
    let shift = resolve_chain_shift(family, n, variant)?;
    let sampler = CensusSampler::new(family, n, probs, shift);

    let start = Instant::now();
    let blocks = samples.div_ceil(MC_BLOCK_SIZE);
    let mut block_moments = vec![Moments::default(); blocks as usize];
    let worker_count = workers.min(blocks as usize);
    if worker_count <= 1 {
        for (b, slot) in block_moments.iter_mut().enumerate() {
            *slot = sampler.run_block(seed, b as u64, samples);
        }
    } else {
        let next_block = AtomicU64::new(0);
        let (tx, rx) = mpsc::channel::<(u64, Moments)>();
        std::thread::scope(|scope| {
            for _ in 0..worker_count {
                let tx = tx.clone();
                let sampler = &sampler;
                let next_block = &next_block;
                scope.spawn(move || loop {
                    let b = next_block.fetch_add(1, Ordering::Relaxed);
                    if b >= blocks {
                        break;
                    }
                    if tx.send((b, sampler.run_block(seed, b, samples))).is_err() {
                        break;
                    }
                });
            }
            drop(tx);
            for (b, moments) in rx {
                block_moments[b as usize] = moments;
            }
        });
    }

    let total = pairwise_merge(block_moments);
    debug_assert_eq!(total.count, samples);
    let std_error = if total.count > 1 {
        (total.m2 / (total.count - 1) as f64).sqrt() / (total.count as f64).sqrt()
    } else {
        0.0
    };
    Ok(McResult {
        mean: total.mean,
        std_error,
        samples,
        seed,
        elapsed: start.elapsed(),
    })
}

/// Exact expectation by probability-weighted enumeration of all `3^(n−2)`
/// chains, under the default enumeration cap.
pub fn exact_expectation_enumeration(
    family: ChainFamily,
    n: u64,
    probs: ChainProbabilities,
    a: f64,
) -> Result<f64> {
    exact_expectation_enumeration_capped(family, n, probs, a, DEFAULT_ENUMERATION_CAP)
}

/// Exact expectation by exhaustive enumeration with an explicit cap on `n`.
pub fn exact_expectation_enumeration_capped(
    family: ChainFamily,
    n: u64,
    probs: ChainProbabilities,
    a: f64,
    cap: u64,
) -> Result<f64> {
    let mut total = 0.0;
    for spec in enumerate_chains_capped(family, n, cap)? {
        let mut counts = [0i32; 3];
        for step in spec.steps() {
            counts[*step as usize] += 1;
        }
        let weight =
            probs.p1().powi(counts[0]) * probs.p2().powi(counts[1]) * probs.p3().powi(counts[2]);
        let census = crate::generators::incremental_census(family, spec.steps());
        total += weight * sombor_from_census(&census, a)?;
    }
    Ok(total)
}

/// One row of the two-family comparison series: the three expected index
/// variants for each family at length `n`, plus the phenylene-minus-hexagonal
/// gap per variant.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChainComparisonRow {
    pub n: u64,
    pub hexagonal_plain: f64,
    pub hexagonal_reduced: f64,
    pub hexagonal_average: f64,
    pub phenylene_plain: f64,
    pub phenylene_reduced: f64,
    pub phenylene_average: f64,
    pub gap_plain: f64,
    pub gap_reduced: f64,
    pub gap_average: f64,
}

/// Expected-value series for both chain families over an inclusive range of
/// lengths. Gap columns are positive throughout, and the plain/reduced gaps
/// equal `9√2(n−1)` and `6√2(n−1)`.
pub fn chain_comparison_series(
    n_range: std::ops::RangeInclusive<u64>,
    probs: ChainProbabilities,
) -> Result<Vec<ChainComparisonRow>> {
    let mut rows = Vec::new();
    for n in n_range {
        let value = |family, variant| -> Result<f64> {
            Ok(expected_chain_variant(family, n, probs, variant)?.value)
        };
        let hexagonal_plain = value(ChainFamily::Hexagonal, IndexVariant::Plain)?;
        let hexagonal_reduced = value(ChainFamily::Hexagonal, IndexVariant::Reduced)?;
        let hexagonal_average = value(ChainFamily::Hexagonal, IndexVariant::Average)?;
        let phenylene_plain = value(ChainFamily::Phenylene, IndexVariant::Plain)?;
        let phenylene_reduced = value(ChainFamily::Phenylene, IndexVariant::Reduced)?;
        let phenylene_average = value(ChainFamily::Phenylene, IndexVariant::Average)?;
        rows.push(ChainComparisonRow {
            n,
            hexagonal_plain,
            hexagonal_reduced,
            hexagonal_average,
            phenylene_plain,
            phenylene_reduced,
            phenylene_average,
            gap_plain: phenylene_plain - hexagonal_plain,
            gap_reduced: phenylene_reduced - hexagonal_reduced,
            gap_average: phenylene_average - hexagonal_average,
        });
    }
    Ok(rows)
}
