use std::fmt::Write as _;

use super::{ordered, LabelMap, VertexId};

/// Undirected graph with a +1 or -1 sign per edge. At most one edge per
/// vertex pair; conflicting signs are rejected at parse/build time.
#[derive(Debug, Clone, PartialEq)]
pub struct SignedGraph {
    labels: LabelMap,
    /// Sorted by (u, v) with u < v.
    edges: Vec<(VertexId, VertexId, i8)>,
    /// adj[vertex] -> sorted (neighbor, sign)
    adj: Vec<Vec<(VertexId, i8)>>,
}

impl SignedGraph {
    /// Duplicates with a consistent sign collapse; a pair that appears with
    /// both signs is a conflict reported with its labels.
    pub(crate) fn build(
        labels: LabelMap,
        mut edges: Vec<(VertexId, VertexId, i8)>,
    ) -> Result<Self, (String, String)> {
        for e in edges.iter_mut() {
            let (u, v) = ordered(e.0, e.1);
            *e = (u, v, e.2);
        }
        edges.sort_unstable();
        edges.dedup();
        for w in edges.windows(2) {
            if w[0].0 == w[1].0 && w[0].1 == w[1].1 {
                return Err((
                    labels.label(w[0].0).to_owned(),
                    labels.label(w[0].1).to_owned(),
                ));
            }
        }
        let n = labels.len();
        let mut adj = vec![Vec::new(); n];
        for &(u, v, s) in &edges {
            adj[u as usize].push((v, s));
            adj[v as usize].push((u, s));
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(SignedGraph { labels, edges, adj })
    }

    /// Programmatic constructor: vertices "0".."n-1", edges as (u, v, sign).
    pub fn from_indexed(n: usize, edges: &[(VertexId, VertexId, i8)]) -> Self {
        for &(u, v, s) in edges {
            assert!(u != v && (u as usize) < n && (v as usize) < n);
            assert!(s == 1 || s == -1);
        }
        Self::build(LabelMap::numeric(n), edges.to_vec()).expect("conflicting signs")
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn labels(&self) -> &LabelMap {
        &self.labels
    }

    pub fn edges(&self) -> &[(VertexId, VertexId, i8)] {
        &self.edges
    }

    pub fn signed_neighbors(&self, u: VertexId) -> &[(VertexId, i8)] {
        &self.adj[u as usize]
    }

    pub fn degree(&self, u: VertexId) -> usize {
        self.adj[u as usize].len()
    }

    pub fn positive_edge_count(&self) -> usize {
        self.edges.iter().filter(|e| e.2 > 0).count()
    }

    /// Serializes back to the `u v sign` line format in edge id order.
    pub fn write(&self) -> String {
        let mut out = String::new();
        for &(u, v, s) in &self.edges {
            let _ = writeln!(
                out,
                "{} {} {}",
                self.labels.label(u),
                self.labels.label(v),
                if s > 0 { "+1" } else { "-1" }
            );
        }
        out
    }
}
