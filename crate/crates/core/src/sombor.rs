//! The generalized degree-shift index `SO_a`.
//!
//! For a graph `G` and a real shift `a`,
//! `SO_a(G) = Σ_{(i,j) ∈ E} sqrt((d_i − a)² + (d_j − a)²)`.
//! `a = 0` gives the plain index, `a = 1` the reduced index, and `a = d̄`
//! (the average degree) the average index. When every edge is of type
//! `(2,2)`, `(2,3)` or `(3,3)` the sum collapses to a three-term census
//! evaluation; both paths share [`edge_weight`] so they agree term by term.

use num_rational::Ratio;

use crate::census::EdgeTypeCensus;
use crate::error::{Error, Result};
use crate::graph::MolecularGraph;

/// Which shift `a` to apply when evaluating `SO_a`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum IndexVariant {
    /// `a = 0`.
    Plain,
    /// `a = 1`.
    Reduced,
    /// `a = d̄`, the average degree of the target graph or family.
    Average,
    /// Any finite real shift.
    Custom(f64),
}

impl IndexVariant {
    /// Stable label used in CSV output and CLI flags.
    pub fn label(&self) -> String {
        match self {
            IndexVariant::Plain => "plain".to_string(),
            IndexVariant::Reduced => "reduced".to_string(),
            IndexVariant::Average => "average".to_string(),
            IndexVariant::Custom(a) => format!("custom:{a}"),
        }
    }
}

/// Contribution of one edge with endpoint degrees `deg_i`, `deg_j`:
/// `sqrt((deg_i − a)² + (deg_j − a)²)`.
///
/// The census fast path evaluates the same expression per degree pair, so the
/// two evaluation routes differ only in summation order.
pub fn edge_weight(deg_i: u32, deg_j: u32, a: f64) -> f64 {
    let x = f64::from(deg_i) - a;
    let y = f64::from(deg_j) - a;
    (x * x + y * y).sqrt()
}

fn ensure_finite(a: f64) -> Result<()> {
    if a.is_finite() {
        Ok(())
    } else {
        Err(Error::domain(format!("index shift a must be finite, got {a}")))
    }
}

/// Edge-wise evaluation of `SO_a` over an explicit graph.
pub fn sombor_general(graph: &MolecularGraph, a: f64) -> Result<f64> {
    ensure_finite(a)?;
    let degrees = graph.degree_sequence();
    Ok(graph
        .edges()
        .iter()
        .map(|&(u, v)| edge_weight(degrees[u as usize], degrees[v as usize], a))
        .sum())
}

/// Census evaluation of `SO_a`:
/// `√2·|2−a|·m22 + sqrt(2a²−10a+13)·m23 + √2·|3−a|·m33`.
///
/// Only censuses whose degree pairs all lie in `{(2,2), (2,3), (3,3)}` are
/// accepted; anything else reports the offending pair.
pub fn sombor_from_census(census: &EdgeTypeCensus, a: f64) -> Result<f64> {
    ensure_finite(a)?;
    let mut total = 0.0;
    for ((i, j), count) in census.pairs() {
        if !matches!((i, j), (2, 2) | (2, 3) | (3, 3)) {
            return Err(Error::UnsupportedCensus { i, j });
        }
        total += count as f64 * edge_weight(i, j, a);
    }
    Ok(total)
}

/// Evaluate `SO` under a variant; `Average` recomputes `d̄` from the graph.
pub fn sombor_variant(graph: &MolecularGraph, variant: IndexVariant) -> Result<f64> {
    let a = match variant {
        IndexVariant::Plain => 0.0,
        IndexVariant::Reduced => 1.0,
        IndexVariant::Average => ratio_to_f64(graph.average_degree()?),
        IndexVariant::Custom(a) => a,
    };
    sombor_general(graph, a)
}

/// Exact-rational to float conversion; a single correctly-rounded division.
pub fn ratio_to_f64(ratio: Ratio<u64>) -> f64 {
    *ratio.numer() as f64 / *ratio.denom() as f64
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::cycle_graph;
    use crate::test_fixtures::{assert_close, naphthalene, sqrt13, sqrt17, sqrt5};
    use std::f64::consts::SQRT_2;

    #[test]
    fn six_cycle_vanishes_at_shift_two() {
        let g = cycle_graph(6).unwrap();
        assert_eq!(sombor_general(&g, 2.0).unwrap(), 0.0);
    }

    #[test]
    fn six_cycle_plain() {
        let g = cycle_graph(6).unwrap();
        assert_close(sombor_general(&g, 0.0).unwrap(), 12.0 * SQRT_2, 1e-12);
    }

    #[test]
    fn naphthalene_edge_wise_plain() {
        let g = naphthalene();
        assert_close(
            sombor_general(&g, 0.0).unwrap(),
            15.0 * SQRT_2 + 4.0 * sqrt13(),
            1e-12,
        );
    }

    #[test]
    fn census_reduced_and_average_values() {
        let census = EdgeTypeCensus::benzenoid(6, 4, 1);
        assert_close(
            sombor_from_census(&census, 1.0).unwrap(),
            8.0 * SQRT_2 + 4.0 * sqrt5(),
            1e-12,
        );
        // Shift by the average degree 11/5 of the underlying graph.
        assert_close(
            sombor_from_census(&census, 2.2).unwrap(),
            2.0 * SQRT_2 + 4.0 * sqrt17() / 5.0,
            1e-12,
        );
    }

    #[test]
    fn census_coronoid_plain() {
        let census = EdgeTypeCensus::benzenoid(6, 28, 16);
        assert_close(
            sombor_from_census(&census, 0.0).unwrap(),
            60.0 * SQRT_2 + 28.0 * sqrt13(),
            1e-12,
        );
    }

    #[test]
    fn unsupported_census_pair_is_reported() {
        let census = EdgeTypeCensus::tally([(1, 3), (3, 3)]);
        assert_eq!(
            sombor_from_census(&census, 0.0).unwrap_err(),
            Error::UnsupportedCensus { i: 1, j: 3 }
        );
    }

    #[test]
    fn variants_resolve_their_shift() {
        let g = naphthalene();
        assert_close(
            sombor_variant(&g, IndexVariant::Plain).unwrap(),
            15.0 * SQRT_2 + 4.0 * sqrt13(),
            1e-12,
        );
        assert_close(
            sombor_variant(&g, IndexVariant::Reduced).unwrap(),
            8.0 * SQRT_2 + 4.0 * sqrt5(),
            1e-12,
        );
        assert_close(
            sombor_variant(&g, IndexVariant::Average).unwrap(),
            2.0 * SQRT_2 + 4.0 * sqrt17() / 5.0,
            1e-12,
        );
        assert_eq!(
            sombor_variant(&g, IndexVariant::Custom(2.5)).unwrap(),
            sombor_general(&g, 2.5).unwrap()
        );
    }

    #[test]
    fn non_finite_shift_is_rejected() {
        let g = cycle_graph(6).unwrap();
        assert!(matches!(sombor_general(&g, f64::NAN), Err(Error::Domain(_))));
        assert!(matches!(
            sombor_from_census(&g.census(), f64::INFINITY),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn census_and_edge_paths_agree_on_a_grid() {
        let g = naphthalene();
        let census = g.census();
        let dbar = ratio_to_f64(g.average_degree().unwrap());
        for a in [0.0, 1.0, 2.0, 2.5, 3.0, dbar, -1.5, 7.25] {
            let edgewise = sombor_general(&g, a).unwrap();
            let fast = sombor_from_census(&census, a).unwrap();
            assert!(
                (edgewise - fast).abs() <= 1e-9 * (1.0 + edgewise.abs()),
                "paths disagree at a = {a}: {edgewise} vs {fast}"
            );
        }
    }
}
