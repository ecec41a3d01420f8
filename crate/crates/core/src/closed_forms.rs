//! Closed forms: expected index values over the random chain models, their
//! one-step recurrences, extremal bounds, uniform averages, and the published
//! census/index formulas for the graphene, coronoid and nanocone families.
//!
//! Every formula here is an independent expression tree from the graph-level
//! evaluation in [`crate::sombor`]; the test suites confirm agreement (or,
//! for the two known coronoid lines, pin down the exact disagreement).

use std::f64::consts::SQRT_2;

use num_rational::Ratio;

use crate::census::{validate_handshake, EdgeTypeCensus};
use crate::error::{Error, Result};
use crate::generators::{ChainFamily, ChainProbabilities};
use crate::sombor::{ratio_to_f64, sombor_from_census, IndexVariant};

/// The mixed-edge factor `sqrt(2a² − 10a + 13)`; equals
/// `sqrt(2(a − 5/2)² + 1/2)`, so it is bounded below by `sqrt(1/2)`.
pub fn mixed_degree_term(a: f64) -> f64 {
    (2.0 * a * a - 10.0 * a + 13.0).sqrt()
}

fn sqrt13() -> f64 {
    13f64.sqrt()
}

fn sqrt5() -> f64 {
    5f64.sqrt()
}

fn ensure_chain_length(n: u64) -> Result<()> {
    if n < 2 {
        return Err(Error::domain("chain length n must be ≥ 2"));
    }
    Ok(())
}

fn ensure_finite_shift(a: f64) -> Result<()> {
    if a.is_finite() {
        Ok(())
    } else {
        Err(Error::domain(format!("index shift a must be finite, got {a}")))
    }
}

/// Average degree of any chain of the family at length `n`, as an exact
/// rational: `(5n + 1)/(2n + 1)` for hexagonal, `(8n − 2)/(3n)` for
/// phenylene. Every chain of a family shares it, whatever the steps.
pub fn chain_average_degree(family: ChainFamily, n: u64) -> Result<Ratio<u64>> {
    ensure_chain_length(n)?;
    Ok(match family {
        ChainFamily::Hexagonal => Ratio::new(5 * n + 1, 2 * n + 1),
        ChainFamily::Phenylene => Ratio::new(8 * n - 2, 3 * n),
    })
}

/// Shift `a` a variant resolves to for a chain family at length `n`.
pub fn resolve_chain_shift(family: ChainFamily, n: u64, variant: IndexVariant) -> Result<f64> {
    Ok(match variant {
        IndexVariant::Plain => 0.0,
        IndexVariant::Reduced => 1.0,
        IndexVariant::Average => ratio_to_f64(chain_average_degree(family, n)?),
        IndexVariant::Custom(a) => {
            ensure_finite_shift(a)?;
            a
        }
    })
}

/// Expected value of `SO_a` over the random chain model with step
/// probabilities `(p1, p2, 1 − p1 − p2)`. Only `p2` enters: the two kinks
/// contribute identical census deltas.
pub fn expected_chain_general(
    family: ChainFamily,
    n: u64,
    probs: ChainProbabilities,
    a: f64,
) -> Result<f64> {
    ensure_chain_length(n)?;
    ensure_finite_shift(a)?;
    let nf = n as f64;
    let p2 = probs.p2();
    let mixed = mixed_degree_term(a);
    let shift2 = (2.0 - a).abs();
    let shift3 = (3.0 - a).abs();
    let mixed_coeff = 2.0 * (nf * p2 - 2.0 * p2 + nf);
    let coeff2 = -nf * p2 + 2.0 * p2 + nf + 4.0;
    let coeff3 = match family {
        ChainFamily::Hexagonal => -nf * p2 + 2.0 * p2 + 2.0 * nf - 3.0,
        ChainFamily::Phenylene => -nf * p2 + 2.0 * p2 + 5.0 * nf - 6.0,
    };
    Ok(mixed_coeff * mixed + SQRT_2 * coeff2 * shift2 + SQRT_2 * coeff3 * shift3)
}

/// Expected value with per-variant specializations of the closed form.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExpectationResult {
    pub value: f64,
    pub family: ChainFamily,
    pub variant: IndexVariant,
    pub n: u64,
    pub probs: ChainProbabilities,
}

/// Expected value of the chosen variant. `Plain` and `Reduced` use the
/// linear-in-`n` specializations, `Average` substitutes the family's exact
/// `d̄(n)`, and `Custom` falls back to [`expected_chain_general`].
pub fn expected_chain_variant(
    family: ChainFamily,
    n: u64,
    probs: ChainProbabilities,
    variant: IndexVariant,
) -> Result<ExpectationResult> {
    ensure_chain_length(n)?;
    let nf = n as f64;
    let p2 = probs.p2();
    let value = match (family, variant) {
        (ChainFamily::Hexagonal, IndexVariant::Plain) => {
            ((2.0 * sqrt13() - 5.0 * SQRT_2) * p2 + 8.0 * SQRT_2 + 2.0 * sqrt13()) * nf
                + (10.0 * SQRT_2 - 4.0 * sqrt13()) * p2
                - SQRT_2
        }
        (ChainFamily::Hexagonal, IndexVariant::Reduced) => {
            ((2.0 * sqrt5() - 3.0 * SQRT_2) * p2 + 5.0 * SQRT_2 + 2.0 * sqrt5()) * nf
                + (6.0 * SQRT_2 - 4.0 * sqrt5()) * p2
                - 2.0 * SQRT_2
        }
        (ChainFamily::Hexagonal, IndexVariant::Average) => {
            let d = ratio_to_f64(chain_average_degree(family, n)?);
            let mixed = mixed_degree_term(d);
            (2.0 * (p2 + 1.0) * mixed + SQRT_2 * (4.0 - p2 - d)) * nf - 4.0 * p2 * mixed
                + SQRT_2 * (2.0 * p2 + 7.0 * d - 17.0)
        }
        (ChainFamily::Phenylene, IndexVariant::Plain) => {
            ((2.0 * sqrt13() - 5.0 * SQRT_2) * p2 + 17.0 * SQRT_2 + 2.0 * sqrt13()) * nf
                + 2.0 * (5.0 * SQRT_2 - 2.0 * sqrt13()) * p2
                - 10.0 * SQRT_2
        }
        (ChainFamily::Phenylene, IndexVariant::Reduced) => {
            ((2.0 * sqrt5() - 3.0 * SQRT_2) * p2 + 11.0 * SQRT_2 + 2.0 * sqrt5()) * nf
                + (6.0 * SQRT_2 - 4.0 * sqrt5()) * p2
                - 8.0 * SQRT_2
        }
        (ChainFamily::Phenylene, IndexVariant::Average) => {
            let d = ratio_to_f64(chain_average_degree(family, n)?);
            let mixed = mixed_degree_term(d);
            (2.0 * (p2 + 1.0) * mixed + SQRT_2 * (13.0 - p2 - 4.0 * d)) * nf - 4.0 * p2 * mixed
                + 2.0 * SQRT_2 * (p2 + 5.0 * d - 13.0)
        }
        (_, IndexVariant::Custom(a)) => expected_chain_general(family, n, probs, a)?,
    };
    Ok(ExpectationResult { value, family, variant, n, probs })
}

/// One step of the expectation recurrence: the expected census delta of a
/// single growth step, evaluated at shift `a`, added to `prev`.
pub fn recurrence_step(family: ChainFamily, prev: f64, probs: ChainProbabilities, a: f64) -> f64 {
    let p2 = probs.p2();
    let mixed = mixed_degree_term(a);
    let shift2 = (2.0 - a).abs();
    let shift3 = (3.0 - a).abs();
    let coeff3 = match family {
        ChainFamily::Hexagonal => 2.0 - p2,
        ChainFamily::Phenylene => 5.0 - p2,
    };
    prev + 2.0 * (p2 + 1.0) * mixed + SQRT_2 * ((1.0 - p2) * shift2 + coeff3 * shift3)
}

/// `SO_a` of the all-kink chain (every step a mirror kink).
pub fn all_kink_chain_value(family: ChainFamily, n: u64, a: f64) -> Result<f64> {
    ensure_chain_length(n)?;
    ensure_finite_shift(a)?;
    let nf = n as f64;
    let mixed = mixed_degree_term(a);
    let coeff3 = match family {
        ChainFamily::Hexagonal => 2.0 * nf - 3.0,
        ChainFamily::Phenylene => 5.0 * nf - 6.0,
    };
    Ok(2.0 * nf * mixed + SQRT_2 * (nf + 4.0) * (2.0 - a).abs() + SQRT_2 * coeff3 * (3.0 - a).abs())
}

/// `SO_a` of the all-linear chain (every step the middle attachment).
pub fn all_linear_chain_value(family: ChainFamily, n: u64, a: f64) -> Result<f64> {
    ensure_chain_length(n)?;
    ensure_finite_shift(a)?;
    let nf = n as f64;
    let mixed = mixed_degree_term(a);
    let coeff3 = match family {
        ChainFamily::Hexagonal => SQRT_2 * (nf - 1.0),
        ChainFamily::Phenylene => 4.0 * SQRT_2 * (nf - 1.0),
    };
    Ok(4.0 * (nf - 1.0) * mixed + 6.0 * SQRT_2 * (2.0 - a).abs() + coeff3 * (3.0 - a).abs())
}

/// Extremal values over all chains of length `n`: the minimum is attained by
/// the all-kink chain (`p2 = 0`), the maximum by the all-linear chain
/// (`p2 = 1`). `Plain`, `Reduced` and `Average` use the published bound
/// lines; `Custom` evaluates the two extremal chains directly.
pub fn chain_extremes(family: ChainFamily, n: u64, variant: IndexVariant) -> Result<(f64, f64)> {
    ensure_chain_length(n)?;
    let nf = n as f64;
    let pair = match (family, variant) {
        (ChainFamily::Hexagonal, IndexVariant::Plain) => (
            (8.0 * SQRT_2 + 2.0 * sqrt13()) * nf - SQRT_2,
            (3.0 * SQRT_2 + 4.0 * sqrt13()) * nf + 9.0 * SQRT_2 - 4.0 * sqrt13(),
        ),
        (ChainFamily::Hexagonal, IndexVariant::Reduced) => (
            (5.0 * SQRT_2 + 2.0 * sqrt5()) * nf - 2.0 * SQRT_2,
            (2.0 * SQRT_2 + 4.0 * sqrt5()) * nf + 4.0 * SQRT_2 - 4.0 * sqrt5(),
        ),
        (ChainFamily::Hexagonal, IndexVariant::Average) => {
            let d = ratio_to_f64(chain_average_degree(family, n)?);
            let mixed = mixed_degree_term(d);
            (
                2.0 * nf * mixed + SQRT_2 * ((4.0 - d) * nf + 7.0 * d - 17.0),
                4.0 * (nf - 1.0) * mixed + SQRT_2 * ((3.0 - d) * nf + 7.0 * d - 15.0),
            )
        }
        (ChainFamily::Phenylene, IndexVariant::Plain) => (
            (17.0 * SQRT_2 + 2.0 * sqrt13()) * nf - 10.0 * SQRT_2,
            (12.0 * SQRT_2 + 4.0 * sqrt13()) * nf - 4.0 * sqrt13(),
        ),
        (ChainFamily::Phenylene, IndexVariant::Reduced) => (
            (11.0 * SQRT_2 + 2.0 * sqrt5()) * nf - 8.0 * SQRT_2,
            (8.0 * SQRT_2 + 4.0 * sqrt5()) * nf - 2.0 * SQRT_2 - 4.0 * sqrt5(),
        ),
        (ChainFamily::Phenylene, IndexVariant::Average) => {
            let d = ratio_to_f64(chain_average_degree(family, n)?);
            let mixed = mixed_degree_term(d);
            (
                2.0 * nf * mixed + SQRT_2 * ((13.0 - 4.0 * d) * nf + 2.0 * (5.0 * d - 13.0)),
                4.0 * (nf - 1.0) * mixed + 2.0 * SQRT_2 * (2.0 * nf * (3.0 - d) + 5.0 * d - 12.0),
            )
        }
        (_, IndexVariant::Custom(a)) => (
            all_kink_chain_value(family, n, a)?,
            all_linear_chain_value(family, n, a)?,
        ),
    };
    Ok(pair)
}

/// Average of `SO_a` over all `3^(n−2)` chains weighted uniformly
/// (equivalently, the expected value at `p1 = p2 = 1/3`).
pub fn average_over_chains(family: ChainFamily, n: u64, a: f64) -> Result<f64> {
    ensure_chain_length(n)?;
    ensure_finite_shift(a)?;
    let nf = n as f64;
    let mixed = mixed_degree_term(a);
    let shift2 = (2.0 - a).abs();
    let shift3 = (3.0 - a).abs();
    let third = match family {
        ChainFamily::Hexagonal => SQRT_2 / 3.0 * (5.0 * nf - 7.0),
        ChainFamily::Phenylene => 2.0 / 3.0 * SQRT_2 * (7.0 * nf - 8.0),
    };
    Ok(4.0 / 3.0 * (2.0 * nf - 1.0) * mixed + 2.0 / 3.0 * SQRT_2 * (nf + 7.0) * shift2 + third * shift3)
}

/// Gap between the phenylene and hexagonal expected values at equal `n` and
/// probabilities: `(9√2(n − 1), 6√2(n − 1))` for the plain and reduced
/// variants. Independent of `(p1, p2)`.
pub fn expectation_gap(n: u64) -> Result<(f64, f64)> {
    ensure_chain_length(n)?;
    let nf = n as f64;
    Ok((9.0 * SQRT_2 * (nf - 1.0), 6.0 * SQRT_2 * (nf - 1.0)))
}

/// Validated parameters for the census-level graph families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilyParams {
    /// Graphene sheet `GN(n, k)` with `1 ≤ k ≤ n`.
    Graphene { n: u64, k: u64 },
    /// Coronoid system `K(n, p, r)` with `n ≥ 3`, `1 ≤ p ≤ n`, `r ≥ 1`.
    Coronoid { n: u64, p: u64, r: u64 },
    /// Carbon nanocone `CNC_k(n)` with `k ≥ 5`, `n ≥ 1`.
    Nanocone { k: u64, n: u64 },
}

impl FamilyParams {
    pub fn graphene(n: u64, k: u64) -> Result<Self> {
        let params = FamilyParams::Graphene { n, k };
        params.check()?;
        Ok(params)
    }

    pub fn coronoid(n: u64, p: u64, r: u64) -> Result<Self> {
        let params = FamilyParams::Coronoid { n, p, r };
        params.check()?;
        Ok(params)
    }

    pub fn nanocone(k: u64, n: u64) -> Result<Self> {
        let params = FamilyParams::Nanocone { k, n };
        params.check()?;
        Ok(params)
    }

    pub fn label(&self) -> String {
        match self {
            FamilyParams::Graphene { n, k } => format!("graphene(n={n},k={k})"),
            FamilyParams::Coronoid { n, p, r } => format!("coronoid(n={n},p={p},r={r})"),
            FamilyParams::Nanocone { k, n } => format!("nanocone(k={k},n={n})"),
        }
    }

    fn check(&self) -> Result<()> {
        match *self {
            FamilyParams::Graphene { n, k } => {
                if k < 1 || k > n {
                    return Err(Error::domain(format!(
                        "graphene domain is 1 ≤ k ≤ n (got n = {n}, k = {k})"
                    )));
                }
            }
            FamilyParams::Coronoid { n, p, r } => {
                if n < 3 || p < 1 || p > n || r < 1 {
                    return Err(Error::domain(format!(
                        "coronoid domain is n ≥ 3, 1 ≤ p ≤ n, r ≥ 1 (got n = {n}, p = {p}, r = {r})"
                    )));
                }
            }
            FamilyParams::Nanocone { k, n } => {
                if k < 5 || n < 1 {
                    return Err(Error::domain(format!(
                        "nanocone domain is k ≥ 5, n ≥ 1 (got k = {k}, n = {n})"
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Census-level description of a family member: edge-type counts plus vertex,
/// edge and per-degree vertex counts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyCensus {
    pub census: EdgeTypeCensus,
    pub vertices: u64,
    pub edges: u64,
    pub degree2_count: u64,
    pub degree3_count: u64,
}

/// Closed-form census of a family member. Always satisfies the handshake
/// identities.
pub fn family_census(params: &FamilyParams) -> Result<FamilyCensus> {
    params.check()?;
    let summary = match *params {
        FamilyParams::Graphene { n, k } => FamilyCensus {
            census: EdgeTypeCensus::benzenoid(2 * k + 4, 4 * (n + k - 2), 6 * n * k + 4 - 5 * k - 5 * n),
            vertices: 2 * (2 * n + 1) * k,
            edges: (6 * n + 1) * k - n,
            degree2_count: 2 * n + 4 * k,
            degree3_count: 4 * n * k - 2 * n - 2 * k,
        },
        FamilyParams::Coronoid { n, p, r } => {
            let span = 2 * p + n;
            let total = 4 * p + 2 * n + 3 * r - 3;
            FamilyCensus {
                census: EdgeTypeCensus::benzenoid(
                    6,
                    8 * span + 12 * r - 24,
                    2 * (3 * r - 2) * span + 3 * (3 * r * r + 4 - 5 * r),
                ),
                vertices: 2 * (r + 1) * total,
                edges: (3 * r + 2) * total,
                degree2_count: 2 * total,
                degree3_count: 2 * r * total,
            }
        }
        FamilyParams::Nanocone { k, n } => FamilyCensus {
            census: EdgeTypeCensus::benzenoid(k, 2 * k * n, k * n * (3 * n + 1) / 2),
            vertices: k * (n + 1) * (n + 1),
            edges: k * (n + 1) * (3 * n + 2) / 2,
            degree2_count: k * (n + 1),
            degree3_count: k * n * (n + 1),
        },
    };
    debug_assert!(validate_handshake(
        &summary.census,
        summary.degree2_count,
        summary.degree3_count,
        summary.vertices,
        summary.edges
    ));
    Ok(summary)
}

/// Exact average degree `2e/v` of a family member.
pub fn family_average_degree(params: &FamilyParams) -> Result<Ratio<u64>> {
    let summary = family_census(params)?;
    Ok(Ratio::new(2 * summary.edges, summary.vertices))
}

/// Index of a family member evaluated through its census (the
/// construction-backed route).
pub fn family_index_census(params: &FamilyParams, variant: IndexVariant) -> Result<f64> {
    let summary = family_census(params)?;
    let a = match variant {
        IndexVariant::Plain => 0.0,
        IndexVariant::Reduced => 1.0,
        IndexVariant::Average => ratio_to_f64(Ratio::new(2 * summary.edges, summary.vertices)),
        IndexVariant::Custom(a) => a,
    };
    sombor_from_census(&summary.census, a)
}

/// Index of a family member evaluated through the published closed forms,
/// transcribed literally.
///
/// For graphene and nanocones these agree with [`family_index_census`]. For
/// coronoids, the published `Plain` line exceeds the census route by exactly
/// `3√2(3r − 2)(2p + n)`, and the published `Average` line replaces the
/// `m33` contribution in the numerator constant by `1`, so those two lines
/// reproduce the published reference table rather than the census values.
/// The coronoid `Reduced` and general-shift lines agree with the census.
pub fn family_index_paper(params: &FamilyParams, variant: IndexVariant) -> Result<f64> {
    params.check()?;
    if let IndexVariant::Custom(a) = variant {
        ensure_finite_shift(a)?;
    }
    Ok(match *params {
        FamilyParams::Graphene { n, k } => graphene_paper(n, k, variant),
        FamilyParams::Coronoid { n, p, r } => coronoid_paper(n, p, r, variant),
        FamilyParams::Nanocone { k, n } => nanocone_paper(k, n, variant),
    })
}

fn graphene_paper(n: u64, k: u64, variant: IndexVariant) -> f64 {
    let nf = n as f64;
    let kf = k as f64;
    match variant {
        IndexVariant::Plain => {
            4.0 * sqrt13() * (nf + kf - 2.0)
                + SQRT_2 * (18.0 * nf * kf - 15.0 * nf - 11.0 * kf + 20.0)
        }
        IndexVariant::Reduced => {
            4.0 * sqrt5() * (nf + kf - 2.0)
                + SQRT_2 * (12.0 * nf * kf - 8.0 * kf - 10.0 * nf + 12.0)
        }
        IndexVariant::Average => {
            let denom = kf * (2.0 * nf + 1.0);
            let radicand = 4.0 * kf * kf * nf * nf - 4.0 * kf * kf * nf + 5.0 * kf * kf
                - 4.0 * kf * nf * nf
                + 6.0 * kf * nf
                + 2.0 * nf * nf;
            4.0 * (kf + nf - 2.0) / denom * radicand.sqrt()
                + SQRT_2
                    * (16.0 * kf * kf * nf - 12.0 * kf * kf + 6.0 * kf * nf * nf - 9.0 * kf * nf
                        + 4.0 * kf
                        - 5.0 * nf * nf)
                    / denom
        }
        IndexVariant::Custom(a) => {
            4.0 * (nf + kf - 2.0) * mixed_degree_term(a)
                + 2.0 * SQRT_2 * (kf + 2.0) * (2.0 - a).abs()
                + SQRT_2 * (6.0 * nf * kf - 5.0 * kf - 5.0 * nf + 4.0) * (3.0 - a).abs()
        }
    }
}

fn coronoid_paper(n: u64, p: u64, r: u64, variant: IndexVariant) -> f64 {
    let nf = n as f64;
    let pf = p as f64;
    let rf = r as f64;
    let reach = 2.0 * nf + 4.0 * pf + 3.0 * rf - 6.0;
    let span = 2.0 * pf + nf;
    match variant {
        IndexVariant::Plain => {
            4.0 * sqrt13() * reach
                + 3.0 * SQRT_2 * (3.0 * (3.0 * rf - 2.0) * span + 9.0 * rf * rf - 15.0 * rf + 16.0)
        }
        IndexVariant::Reduced => {
            4.0 * sqrt5() * reach
                + SQRT_2 * (4.0 * (3.0 * rf - 2.0) * span + 18.0 * rf * rf - 30.0 * rf + 30.0)
        }
        IndexVariant::Average => {
            (4.0 * (rf * rf + 1.0).sqrt() * reach + SQRT_2 * (1.0 + 6.0 * rf)) / (rf + 1.0)
        }
        IndexVariant::Custom(a) => {
            4.0 * mixed_degree_term(a) * reach
                + 6.0 * SQRT_2 * (2.0 - a).abs()
                + SQRT_2
                    * (2.0 * (3.0 * rf - 2.0) * span + 3.0 * (3.0 * rf * rf - 5.0 * rf + 4.0))
                    * (3.0 - a).abs()
        }
    }
}

fn nanocone_paper(k: u64, n: u64, variant: IndexVariant) -> f64 {
    let kf = k as f64;
    let nf = n as f64;
    match variant {
        IndexVariant::Plain => {
            2.0 * sqrt13() * kf * nf + SQRT_2 * kf / 2.0 * (9.0 * nf * nf + 3.0 * nf + 4.0)
        }
        IndexVariant::Reduced => {
            2.0 * sqrt5() * kf * nf + SQRT_2 * kf * (3.0 * nf * nf + nf + 1.0)
        }
        IndexVariant::Average => {
            kf * nf / 2.0 * (4.0 / (nf + 1.0) * (nf * nf + 1.0).sqrt() + 3.0 * SQRT_2)
        }
        IndexVariant::Custom(a) => {
            2.0 * kf * nf * mixed_degree_term(a)
                + SQRT_2 * kf / 2.0
                    * (2.0 * (2.0 - a).abs() + (3.0 * nf + 1.0) * nf * (3.0 - a).abs())
        }
    }
}

fn ensure_circumscription(r: u64) -> Result<()> {
    if r < 1 {
        return Err(Error::domain("circumscription count r must be ≥ 1"));
    }
    Ok(())
}

/// Published closed forms for the `r`-circumscribed C₃₂H₁₆ coronoid, the
/// `(n, p) = (2, 1)` specialization of the coronoid family.
pub fn circumscribed_c32h16(r: u64, variant: IndexVariant) -> Result<f64> {
    ensure_circumscription(r)?;
    let rf = r as f64;
    Ok(match variant {
        IndexVariant::Plain => {
            4.0 * sqrt13() * (2.0 + 3.0 * rf) + 3.0 * SQRT_2 * (9.0 * rf * rf + 21.0 * rf - 8.0)
        }
        IndexVariant::Reduced => {
            4.0 * sqrt5() * (2.0 + 3.0 * rf) + 2.0 * SQRT_2 * (9.0 * rf * rf + 9.0 * rf - 1.0)
        }
        IndexVariant::Average => {
            (4.0 * (rf * rf + 1.0).sqrt() * (2.0 + 3.0 * rf) + SQRT_2 * (1.0 + 6.0 * rf)) / (rf + 1.0)
        }
        IndexVariant::Custom(a) => {
            ensure_finite_shift(a)?;
            coronoid_paper(2, 1, r, IndexVariant::Custom(a))
        }
    })
}

/// Published closed forms for the `r`-circumscribed C₄₈H₂₄ coronoid, the
/// `(n, p) = (2, 2)` specialization of the coronoid family.
pub fn circumscribed_c48h24(r: u64, variant: IndexVariant) -> Result<f64> {
    ensure_circumscription(r)?;
    let rf = r as f64;
    Ok(match variant {
        IndexVariant::Plain => {
            12.0 * sqrt13() * (2.0 + rf) + 3.0 * SQRT_2 * (9.0 * rf * rf + 39.0 * rf - 20.0)
        }
        IndexVariant::Reduced => {
            12.0 * sqrt5() * (2.0 + rf) + 6.0 * SQRT_2 * (3.0 * rf * rf + 7.0 * rf - 3.0)
        }
        IndexVariant::Average => {
            (12.0 * (rf * rf + 1.0).sqrt() * (2.0 + rf) + SQRT_2 * (1.0 + 6.0 * rf)) / (rf + 1.0)
        }
        IndexVariant::Custom(a) => {
            ensure_finite_shift(a)?;
            coronoid_paper(2, 2, r, IndexVariant::Custom(a))
        }
    })
}

/// Published closed forms for the pentagonal nanocone `CNC₅(n)`.
pub fn pentagonal_nanocone(n: u64, variant: IndexVariant) -> Result<f64> {
    if n < 1 {
        return Err(Error::domain("nanocone needs n ≥ 1"));
    }
    let nf = n as f64;
    Ok(match variant {
        IndexVariant::Plain => {
            10.0 * sqrt13() * nf + 5.0 * SQRT_2 / 2.0 * (9.0 * nf * nf + 3.0 * nf + 4.0)
        }
        IndexVariant::Reduced => {
            10.0 * sqrt5() * nf + 5.0 * SQRT_2 * (3.0 * nf * nf + nf + 1.0)
        }
        IndexVariant::Average => {
            5.0 * nf / 2.0 * (4.0 / (nf + 1.0) * (nf * nf + 1.0).sqrt() + 3.0 * SQRT_2)
        }
        IndexVariant::Custom(a) => {
            ensure_finite_shift(a)?;
            nanocone_paper(5, n, IndexVariant::Custom(a))
        }
    })
}
