//! Edge-type censuses: edge counts keyed by the unordered degree pair of the
//! endpoints, plus the handshake identities that tie a census to vertex and
//! edge counts.

use std::collections::BTreeMap;

/// Edge counts keyed by unordered endpoint-degree pair `(i, j)` with `i ≤ j`.
///
/// For the graphs built in this crate only the pairs `(2,2)`, `(2,3)` and
/// `(3,3)` occur, but the census accepts arbitrary degree pairs so graphs
/// outside that family are still countable.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct EdgeTypeCensus {
    counts: BTreeMap<(u32, u32), u64>,
}

impl EdgeTypeCensus {
    /// Census of the degree pairs produced by `pairs`; each pair is sorted
    /// before counting.
    pub fn tally(pairs: impl IntoIterator<Item = (u32, u32)>) -> Self {
        let mut counts = BTreeMap::new();
        for (i, j) in pairs {
            let key = if i <= j { (i, j) } else { (j, i) };
            *counts.entry(key).or_insert(0) += 1;
        }
        EdgeTypeCensus { counts }
    }

    /// Census with the three chain-typed counts `m22`, `m23`, `m33`.
    pub fn benzenoid(m22: u64, m23: u64, m33: u64) -> Self {
        let mut counts = BTreeMap::new();
        for (key, count) in [((2, 2), m22), ((2, 3), m23), ((3, 3), m33)] {
            if count > 0 {
                counts.insert(key, count);
            }
        }
        EdgeTypeCensus { counts }
    }

    /// Count for the unordered pair `(i, j)`; 0 when absent.
    pub fn get(&self, i: u32, j: u32) -> u64 {
        let key = if i <= j { (i, j) } else { (j, i) };
        self.counts.get(&key).copied().unwrap_or(0)
    }

    pub fn m22(&self) -> u64 {
        self.get(2, 2)
    }

    pub fn m23(&self) -> u64 {
        self.get(2, 3)
    }

    pub fn m33(&self) -> u64 {
        self.get(3, 3)
    }

    /// Total number of counted edges.
    pub fn total_edges(&self) -> u64 {
        self.counts.values().sum()
    }

    /// Degree pairs in ascending order with their counts.
    pub fn pairs(&self) -> impl Iterator<Item = ((u32, u32), u64)> + '_ {
        self.counts.iter().map(|(&k, &v)| (k, v))
    }

    /// True when every counted pair is one of `(2,2)`, `(2,3)`, `(3,3)`.
    pub fn is_chain_typed(&self) -> bool {
        self.counts
            .keys()
            .all(|&k| matches!(k, (2, 2) | (2, 3) | (3, 3)))
    }
}

/// Handshake identities linking a chain-typed census to the counts of
/// degree-2 vertices (`n2`), degree-3 vertices (`n3`), vertices and edges.
///
/// Returns true iff all of
/// `n2 + n3 = v`, `2 n2 + 3 n3 = 2 e`, `m22 + m23 + m33 = e`,
/// `2 m22 + m23 = 2 n2` and `m23 + 2 m33 = 3 n3` hold exactly.
pub fn validate_handshake(census: &EdgeTypeCensus, n2: u64, n3: u64, vertices: u64, edges: u64) -> bool {
    let (m22, m23, m33) = (census.m22(), census.m23(), census.m33());
    n2 + n3 == vertices
        && 2 * n2 + 3 * n3 == 2 * edges
        && m22 + m23 + m33 == edges
        && 2 * m22 + m23 == 2 * n2
        && m23 + 2 * m33 == 3 * n3
}
