//! Behavioural tests of the Monte-Carlo estimator: determinism across worker
//! counts, statistical coverage of the closed forms, agreement between the
//! census-incremental sampler and built graphs, and the categorical sampler's
//! frequency balance.

use sombor_core::closed_forms::expected_chain_variant;
use sombor_core::generators::{build_chain, incremental_census, sample_chain};
use sombor_core::random_experiments::mc_expectation;
use sombor_core::{ChainFamily, ChainProbabilities, ChainStep, IndexVariant};

#[test]
fn determinism_across_runs_and_worker_counts() {
    let probs = ChainProbabilities::new(0.3, 0.4).unwrap();
    for family in ChainFamily::BOTH {
        for variant in [IndexVariant::Plain, IndexVariant::Reduced, IndexVariant::Average] {
            let baseline = mc_expectation(family, 50, probs, variant, 30_000, 7, 1).unwrap();
            for workers in [2usize, 4, 8] {
                let run = mc_expectation(family, 50, probs, variant, 30_000, 7, workers).unwrap();
                assert_eq!(baseline.mean, run.mean, "{family} {variant:?} workers={workers}");
                assert_eq!(baseline.std_error, run.std_error);
            }
            let again = mc_expectation(family, 50, probs, variant, 30_000, 7, 1).unwrap();
            assert_eq!(baseline.mean, again.mean);
        }
    }
}

#[test]
fn closed_form_is_covered_across_seeds() {
    // Over 20 fixed seeds the closed form must land within mean ± 4σ at
    // least 19 times per family/variant.
    let probs = ChainProbabilities::new(0.25, 0.25).unwrap();
    for family in ChainFamily::BOTH {
        for variant in [IndexVariant::Plain, IndexVariant::Average] {
            let closed = expected_chain_variant(family, 30, probs, variant).unwrap().value;
            let hits = (0..20u64)
                .filter(|&seed| {
                    let run =
                        mc_expectation(family, 30, probs, variant, 20_000, 1000 + seed, 4).unwrap();
                    (run.mean - closed).abs() <= 4.0 * run.std_error
                })
                .count();
            assert!(hits >= 19, "{family} {variant:?}: only {hits}/20 seeds covered");
        }
    }
}

#[test]
fn sampled_specs_agree_with_built_graphs() {
    let prob_cycle = [
        ChainProbabilities::uniform(),
        ChainProbabilities::new(0.2, 0.5).unwrap(),
        ChainProbabilities::new(0.0, 1.0).unwrap(),
        ChainProbabilities::new(1.0, 0.0).unwrap(),
        ChainProbabilities::new(0.6, 0.1).unwrap(),
    ];
    for family in ChainFamily::BOTH {
        for i in 0..100u64 {
            let probs = prob_cycle[(i % 5) as usize];
            let n = 2 + (i * 13) % 60;
            let spec = sample_chain(family, n, probs, 5000 + i).unwrap();
            let built = build_chain(&spec).unwrap().census();
            assert_eq!(built, incremental_census(family, spec.steps()));
        }
    }
}

#[test]
fn step_frequencies_match_probabilities() {
    // Chi-squared over the three step categories at 1e5 draws; the 0.999
    // quantile for two degrees of freedom is 13.82.
    let probs = ChainProbabilities::new(0.2, 0.3).unwrap();
    let draws = 100_000u64;
    let spec = sample_chain(ChainFamily::Hexagonal, draws + 2, probs, 424_242).unwrap();
    let mut observed = [0f64; 3];
    for step in spec.steps() {
        observed[*step as usize] += 1.0;
    }
    let expected = [
        probs.p1() * draws as f64,
        probs.p2() * draws as f64,
        probs.p3() * draws as f64,
    ];
    let chi2: f64 = observed
        .iter()
        .zip(&expected)
        .map(|(o, e)| (o - e) * (o - e) / e)
        .sum();
    assert!(chi2 < 13.82, "chi-squared {chi2} too large: {observed:?} vs {expected:?}");
}

#[test]
fn degenerate_sampling_is_constant() {
    let spec = sample_chain(ChainFamily::Phenylene, 12, ChainProbabilities::new(0.0, 1.0).unwrap(), 3).unwrap();
    assert!(spec.steps().iter().all(|&s| s == ChainStep::Type2));
}
