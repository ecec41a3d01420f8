//! Exhaustive oracles over small chain lengths: every incremental census is
//! checked against an explicitly built graph, weighted enumeration against
//! the closed forms, and the enumerated extrema against the bound formulas.

use std::f64::consts::SQRT_2;

use sombor_core::closed_forms::{
    average_over_chains, chain_extremes, expected_chain_general, resolve_chain_shift,
};
use sombor_core::generators::{
    build_chain, build_graphene, enumerate_chains, incremental_census, ChainSpec, ChainStep,
};
use sombor_core::sombor::sombor_general;
use sombor_core::{
    sombor_from_census, validate_handshake, ChainFamily, ChainProbabilities, IndexVariant,
};

fn rel_close(actual: f64, expected: f64, rel: f64) -> bool {
    (actual - expected).abs() <= rel * (1.0 + expected.abs())
}

#[test]
fn incremental_census_matches_built_graphs_exhaustively() {
    for family in ChainFamily::BOTH {
        for n in 2..=8u64 {
            for spec in enumerate_chains(family, n).unwrap() {
                let graph = build_chain(&spec).unwrap();
                let built = graph.census();
                let incremental = incremental_census(family, spec.steps());
                assert_eq!(built, incremental, "census mismatch for {spec}");
                assert!(graph.degree_sequence().iter().all(|&d| d == 2 || d == 3));

                let degrees = graph.degree_sequence();
                let n2 = degrees.iter().filter(|&&d| d == 2).count() as u64;
                let n3 = degrees.iter().filter(|&&d| d == 3).count() as u64;
                assert!(validate_handshake(
                    &built,
                    n2,
                    n3,
                    graph.vertex_count() as u64,
                    graph.edge_count() as u64
                ));
            }
        }
    }
}

#[test]
fn mirrored_chains_share_a_census() {
    for family in ChainFamily::BOTH {
        for n in 2..=7u64 {
            for spec in enumerate_chains(family, n).unwrap() {
                let mirrored = spec.mirrored();
                assert_eq!(
                    incremental_census(family, spec.steps()),
                    incremental_census(family, mirrored.steps()),
                    "mirror mismatch for {spec}"
                );
            }
        }
    }
}

#[test]
fn weighted_enumeration_matches_closed_forms() {
    let prob_grid: Vec<ChainProbabilities> = [
        (0.0, 0.0),
        (0.25, 0.25),
        (1.0 / 3.0, 1.0 / 3.0),
        (0.5, 0.5),
        (0.25, 0.5),
        (0.5, 0.25),
        (0.0, 1.0),
        (1.0, 0.0),
        (0.0, 0.5),
    ]
    .into_iter()
    .map(|(p1, p2)| ChainProbabilities::new(p1, p2).unwrap())
    .collect();

    for family in ChainFamily::BOTH {
        for n in 2..=6u64 {
            let specs = enumerate_chains(family, n).unwrap();
            for &probs in &prob_grid {
                for variant in [IndexVariant::Plain, IndexVariant::Reduced, IndexVariant::Average] {
                    let a = resolve_chain_shift(family, n, variant).unwrap();
                    // Independent oracle: explicit graphs, edge-wise index,
                    // probability weights multiplied out per chain.
                    let mut weighted = 0.0;
                    for spec in &specs {
                        let mut counts = [0i32; 3];
                        for step in spec.steps() {
                            counts[*step as usize] += 1;
                        }
                        let weight = probs.p1().powi(counts[0])
                            * probs.p2().powi(counts[1])
                            * probs.p3().powi(counts[2]);
                        let graph = build_chain(spec).unwrap();
                        weighted += weight * sombor_general(&graph, a).unwrap();
                    }
                    let closed = expected_chain_general(family, n, probs, a).unwrap();
                    assert!(
                        rel_close(weighted, closed, 1e-9),
                        "{family} n={n} {variant:?}: enumeration {weighted} vs closed {closed}"
                    );
                }
            }
        }
    }
}

#[test]
fn closed_form_is_nondecreasing_in_p2() {
    for family in ChainFamily::BOTH {
        for n in 3..=12u64 {
            for a in [0.0, 1.0] {
                let mut last = f64::NEG_INFINITY;
                for p2 in [0.0, 0.2, 0.4, 0.6, 0.8, 1.0] {
                    let probs = ChainProbabilities::new(0.0, p2).unwrap();
                    let value = expected_chain_general(family, n, probs, a).unwrap();
                    assert!(value >= last - 1e-12, "{family} n={n} a={a} not monotone at p2={p2}");
                    last = value;
                }
            }
        }
    }
}

#[test]
fn enumerated_extrema_hit_the_bound_formulas_and_extremal_chains() {
    for family in ChainFamily::BOTH {
        for n in 2..=8u64 {
            let specs = enumerate_chains(family, n).unwrap();
            for variant in [IndexVariant::Plain, IndexVariant::Reduced, IndexVariant::Average] {
                let a = resolve_chain_shift(family, n, variant).unwrap();
                let values: Vec<f64> = specs
                    .iter()
                    .map(|s| sombor_from_census(&incremental_census(family, s.steps()), a).unwrap())
                    .collect();
                let min = values.iter().cloned().fold(f64::INFINITY, f64::min);
                let max = values.iter().cloned().fold(f64::NEG_INFINITY, f64::max);

                let (lo, hi) = chain_extremes(family, n, variant).unwrap();
                assert!(rel_close(min, lo, 1e-9), "{family} n={n} {variant:?} min {min} vs {lo}");
                assert!(rel_close(max, hi, 1e-9), "{family} n={n} {variant:?} max {max} vs {hi}");

                // The all-kink chain attains the minimum, the all-linear the maximum.
                let steps = (n - 2) as usize;
                let all_kink = ChainSpec::new(family, n, vec![ChainStep::Type1; steps]).unwrap();
                let all_linear = ChainSpec::new(family, n, vec![ChainStep::Type2; steps]).unwrap();
                let kink_value =
                    sombor_from_census(&incremental_census(family, all_kink.steps()), a).unwrap();
                let linear_value =
                    sombor_from_census(&incremental_census(family, all_linear.steps()), a).unwrap();
                assert_eq!(kink_value, min);
                assert_eq!(linear_value, max);
            }
        }
    }
}

#[test]
fn uniform_average_matches_enumeration_for_both_families() {
    for family in ChainFamily::BOTH {
        for n in 2..=6u64 {
            for a in [0.0, 1.0, 2.5] {
                let specs = enumerate_chains(family, n).unwrap();
                let total: f64 = specs
                    .iter()
                    .map(|s| sombor_general(&build_chain(s).unwrap(), a).unwrap())
                    .sum();
                let brute = total / specs.len() as f64;
                let closed = average_over_chains(family, n, a).unwrap();
                assert!(rel_close(brute, closed, 1e-9), "{family} n={n} a={a}");
            }
        }
    }
}

#[test]
fn single_row_graphene_is_the_linear_chain() {
    for n in 1..=9u64 {
        let sheet = build_graphene(n, 1, false).unwrap();
        if n >= 2 {
            let steps = vec![ChainStep::Type2; (n - 2) as usize];
            let spec = ChainSpec::new(ChainFamily::Hexagonal, n, steps).unwrap();
            let chain = build_chain(&spec).unwrap();
            assert_eq!(sheet.vertex_count(), chain.vertex_count());
            assert_eq!(sheet.edge_count(), chain.edge_count());
            assert_eq!(sheet.census(), chain.census());
        }
    }
}

#[test]
fn comparison_gaps_hold_across_probabilities() {
    for n in 2..=30u64 {
        for (p1, p2) in [(0.0, 0.0), (0.3, 0.4), (0.0, 1.0), (1.0, 0.0)] {
            let probs = ChainProbabilities::new(p1, p2).unwrap();
            let hex = expected_chain_general(ChainFamily::Hexagonal, n, probs, 0.0).unwrap();
            let phen = expected_chain_general(ChainFamily::Phenylene, n, probs, 0.0).unwrap();
            assert!(rel_close(phen - hex, 9.0 * SQRT_2 * (n as f64 - 1.0), 1e-9));
        }
    }
}
