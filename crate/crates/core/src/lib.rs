//! Benzenoid-type molecular graphs and the generalized Sombor index family.
//!
//! The crate builds hexagonal chains, phenylene chains, graphene sheets and
//! carbon nanocones as explicit graphs (coronoid systems are handled at the
//! census level), counts edges by endpoint-degree type, and evaluates the
//! degree-shift index `SO_a` edge-wise or through the three-term census fast
//! path. On top of that sit the closed forms for expected values over the
//! random chain growth models, their extremal bounds and uniform averages,
//! the published family formulas, and a seeded, worker-count-independent
//! Monte-Carlo estimator.

pub mod census;
pub mod closed_forms;
pub mod error;
pub mod generators;
pub mod graph;
pub mod random_experiments;
pub mod sombor;

pub use census::{validate_handshake, EdgeTypeCensus};
pub use error::{Error, Result};
pub use generators::{ChainFamily, ChainProbabilities, ChainSpec, ChainStep};
pub use graph::MolecularGraph;
pub use sombor::{sombor_from_census, sombor_general, sombor_variant, IndexVariant};
