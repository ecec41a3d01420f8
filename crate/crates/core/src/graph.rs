//! Simple connected molecular graphs with dense integer vertex ids.
//!
//! Graphs are value-immutable after construction: the edge list is normalized
//! (each pair stored with `u < v`, sorted lexicographically) and validated for
//! self-loops, duplicates, out-of-range ids, isolated vertices and
//! connectivity. The canonical form makes the JSON export reproducible.

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::census::EdgeTypeCensus;
use crate::error::{Error, Result};

/// A finite, connected, simple undirected graph with vertex ids `0..vertex_count`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct MolecularGraph {
    vertex_count: usize,
    edges: Vec<(u32, u32)>,
}

#[derive(Deserialize)]
struct RawGraph {
    vertex_count: usize,
    edges: Vec<(u32, u32)>,
}

impl MolecularGraph {
    /// Build a graph from a vertex count and an edge list.
    ///
    /// Edges may arrive in any order and orientation; they are normalized to
    /// `u < v` and sorted. Rejects self-loops, duplicate edges, ids outside
    /// `0..vertex_count`, isolated vertices and disconnected graphs.
    pub fn new(vertex_count: usize, edges: impl IntoIterator<Item = (u32, u32)>) -> Result<Self> {
        let mut normalized: Vec<(u32, u32)> = Vec::new();
        for (u, v) in edges {
            if u == v {
                return Err(Error::SelfLoop { u, v });
            }
            if (u as usize) >= vertex_count || (v as usize) >= vertex_count {
                return Err(Error::VertexOutOfRange { u, v, vertex_count });
            }
            normalized.push(if u < v { (u, v) } else { (v, u) });
        }
        normalized.sort_unstable();
        if let Some(w) = normalized.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge { u: w[0].0, v: w[0].1 });
        }

        let graph = MolecularGraph { vertex_count, edges: normalized };
        if vertex_count > 0 {
            let degrees = graph.degree_sequence();
            if let Some(v) = degrees.iter().position(|&d| d == 0) {
                return Err(Error::IsolatedVertex { v: v as u32 });
            }
            if !graph.is_connected() {
                return Err(Error::Disconnected);
            }
        }
        Ok(graph)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in canonical order: `u < v` within each pair, pairs sorted.
    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    /// Degree of every vertex, indexed by vertex id.
    ///
    /// The degree sum equals twice the edge count.
    pub fn degree_sequence(&self) -> Vec<u32> {
        let mut degrees = vec![0u32; self.vertex_count];
        for &(u, v) in &self.edges {
            degrees[u as usize] += 1;
            degrees[v as usize] += 1;
        }
        degrees
    }

    /// Average degree `2·|E| / |V|` as an exact rational.
    ///
    /// Conversion to a float happens only at index-evaluation time so that
    /// closed forms can be compared without rounding the degree itself.
    pub fn average_degree(&self) -> Result<Ratio<u64>> {
        if self.vertex_count == 0 {
            return Err(Error::domain("average degree is undefined for the empty graph"));
        }
        Ok(Ratio::new(2 * self.edges.len() as u64, self.vertex_count as u64))
    }

    /// Edge-type census: edge counts keyed by sorted endpoint-degree pair.
    pub fn census(&self) -> EdgeTypeCensus {
        let degrees = self.degree_sequence();
        EdgeTypeCensus::tally(
            self.edges
                .iter()
                .map(|&(u, v)| (degrees[u as usize], degrees[v as usize])),
        )
    }

    /// Canonical JSON form: `{"vertex_count": n, "edges": [[u, v], ...]}` with
    /// `u < v` in each pair and pairs sorted lexicographically.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("graph serialization cannot fail")
    }

    /// Parse and validate a graph from its JSON form.
    pub fn from_json(json: &str) -> Result<Self> {
        let raw: RawGraph = serde_json::from_str(json)
            .map_err(|e| Error::domain(format!("invalid graph JSON: {e}")))?;
        MolecularGraph::new(raw.vertex_count, raw.edges)
    }

    fn is_connected(&self) -> bool {
        if self.vertex_count == 0 {
            return true;
        }
        // CSR adjacency, then BFS from vertex 0.
        let mut offsets = vec![0usize; self.vertex_count + 1];
        for &(u, v) in &self.edges {
            offsets[u as usize + 1] += 1;
            offsets[v as usize + 1] += 1;
        }
        for i in 0..self.vertex_count {
            offsets[i + 1] += offsets[i];
        }
        let mut neighbors = vec![0u32; 2 * self.edges.len()];
        let mut cursor = offsets.clone();
        for &(u, v) in &self.edges {
            neighbors[cursor[u as usize]] = v;
            cursor[u as usize] += 1;
            neighbors[cursor[v as usize]] = u;
            cursor[v as usize] += 1;
        }

        let mut seen = vec![false; self.vertex_count];
        let mut queue = std::collections::VecDeque::from([0u32]);
        seen[0] = true;
        let mut visited = 1usize;
        while let Some(u) = queue.pop_front() {
            for &w in &neighbors[offsets[u as usize]..offsets[u as usize + 1]] {
                if !seen[w as usize] {
                    seen[w as usize] = true;
                    visited += 1;
                    queue.push_back(w);
                }
            }
        }
        visited == self.vertex_count
    }
}

/// Cycle graph on `n ≥ 3` vertices.
pub fn cycle_graph(n: usize) -> Result<MolecularGraph> {
    if n < 3 {
        return Err(Error::domain("a cycle needs at least 3 vertices"));
    }
    MolecularGraph::new(n, (0..n).map(|i| (i as u32, ((i + 1) % n) as u32)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::test_fixtures::naphthalene;

    #[test]
    fn six_cycle_degrees() {
        let g = cycle_graph(6).unwrap();
        assert_eq!(g.degree_sequence(), vec![2; 6]);
        assert_eq!(g.average_degree().unwrap(), Ratio::new(2, 1));
        let census = g.census();
        assert_eq!((census.m22(), census.m23(), census.m33()), (6, 0, 0));
    }

    #[test]
    fn single_edge_degrees() {
        let g = MolecularGraph::new(2, [(0, 1)]).unwrap();
        assert_eq!(g.degree_sequence(), vec![1, 1]);
    }

    #[test]
    fn naphthalene_degrees_and_census() {
        let g = naphthalene();
        let degrees = g.degree_sequence();
        assert_eq!(degrees.iter().filter(|&&d| d == 2).count(), 8);
        assert_eq!(degrees.iter().filter(|&&d| d == 3).count(), 2);
        assert_eq!(degrees.iter().sum::<u32>(), 22);
        assert_eq!(g.edge_count(), 11);

        let census = g.census();
        assert_eq!((census.m22(), census.m23(), census.m33()), (6, 4, 1));
        assert_eq!(g.average_degree().unwrap(), Ratio::new(11, 5));
    }

    #[test]
    fn validation_errors_name_the_edge() {
        assert_eq!(
            MolecularGraph::new(3, [(0, 0), (0, 1), (1, 2)]).unwrap_err(),
            Error::SelfLoop { u: 0, v: 0 }
        );
        assert_eq!(
            MolecularGraph::new(3, [(0, 1), (1, 0), (1, 2), (2, 0)]).unwrap_err(),
            Error::DuplicateEdge { u: 0, v: 1 }
        );
        assert_eq!(
            MolecularGraph::new(2, [(0, 1), (1, 5)]).unwrap_err(),
            Error::VertexOutOfRange { u: 1, v: 5, vertex_count: 2 }
        );
    }

    #[test]
    fn isolated_and_disconnected_are_rejected() {
        assert_eq!(
            MolecularGraph::new(3, [(0, 1)]).unwrap_err(),
            Error::IsolatedVertex { v: 2 }
        );
        let two_triangles = [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)];
        assert_eq!(
            MolecularGraph::new(6, two_triangles).unwrap_err(),
            Error::Disconnected
        );
    }

    #[test]
    fn empty_graph_is_a_value_but_has_no_average_degree() {
        let g = MolecularGraph::new(0, []).unwrap();
        assert!(matches!(g.average_degree(), Err(Error::Domain(_))));
    }

    #[test]
    fn json_round_trip_is_canonical() {
        let g = MolecularGraph::new(3, [(2, 1), (1, 0), (0, 2)]).unwrap();
        assert_eq!(
            g.to_json(),
            r#"{"vertex_count":3,"edges":[[0,1],[0,2],[1,2]]}"#
        );
        assert_eq!(MolecularGraph::from_json(&g.to_json()).unwrap(), g);
    }

    #[test]
    fn json_parse_validates() {
        let disconnected = r#"{"vertex_count":4,"edges":[[0,1],[2,3]]}"#;
        assert_eq!(MolecularGraph::from_json(disconnected).unwrap_err(), Error::Disconnected);
        assert!(MolecularGraph::from_json("not json").is_err());
    }
}
