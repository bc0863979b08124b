use std::fmt::Write as _;

use super::{adjacency_from_edges, ordered, GraphView, LabelMap, VertexId, VertexSet};

/// Undirected graph with a fixed vertex set shared by an ordered list of
/// layers. Layer order is first-appearance order from the input.
#[derive(Debug, Clone, PartialEq)]
pub struct MultilayerGraph {
    labels: LabelMap,
    layer_labels: Vec<String>,
    /// adj[layer][vertex] -> sorted neighbor ids
    adj: Vec<Vec<Vec<VertexId>>>,
    edge_counts: Vec<usize>,
}

impl MultilayerGraph {
    pub(crate) fn build(
        labels: LabelMap,
        layer_labels: Vec<String>,
        mut edges_per_layer: Vec<Vec<(VertexId, VertexId)>>,
    ) -> Self {
        let n = labels.len();
        let mut adj = Vec::with_capacity(edges_per_layer.len());
        let mut edge_counts = Vec::with_capacity(edges_per_layer.len());
        for edges in &mut edges_per_layer {
            for e in edges.iter_mut() {
                *e = ordered(e.0, e.1);
            }
            edges.sort_unstable();
            edges.dedup();
            edge_counts.push(edges.len());
            adj.push(adjacency_from_edges(n, edges));
        }
        MultilayerGraph {
            labels,
            layer_labels,
            adj,
            edge_counts,
        }
    }

    /// Programmatic constructor for tests and generators: vertices are
    /// labeled "0".."n-1", layers "0".."l-1", edges given as (u, v, layer).
    pub fn from_indexed(n: usize, layers: usize, edges: &[(VertexId, VertexId, usize)]) -> Self {
        let mut per_layer = vec![Vec::new(); layers];
        for &(u, v, l) in edges {
            assert!(u != v, "self-loop");
            assert!((u as usize) < n && (v as usize) < n && l < layers);
            per_layer[l].push((u, v));
        }
        let layer_labels = (0..layers).map(|l| l.to_string()).collect();
        Self::build(LabelMap::numeric(n), layer_labels, per_layer)
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn layer_count(&self) -> usize {
        self.layer_labels.len()
    }

    pub fn edge_count(&self, layer: usize) -> usize {
        self.edge_counts[layer]
    }

    pub fn total_edge_count(&self) -> usize {
        self.edge_counts.iter().sum()
    }

    pub fn labels(&self) -> &LabelMap {
        &self.labels
    }

    pub fn layer_label(&self, layer: usize) -> &str {
        &self.layer_labels[layer]
    }

    pub fn layer_labels(&self) -> &[String] {
        &self.layer_labels
    }

    pub fn neighbors(&self, layer: usize, u: VertexId) -> &[VertexId] {
        &self.adj[layer][u as usize]
    }

    pub fn layer_view(&self, layer: usize) -> LayerView<'_> {
        LayerView { graph: self, layer }
    }

    /// Neighbors of `u` in the union of all layers, deduplicated.
    pub fn flattened_neighbors(&self, u: VertexId) -> Vec<VertexId> {
        let mut out: Vec<VertexId> = self
            .adj
            .iter()
            .flat_map(|layer| layer[u as usize].iter().copied())
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Number of edges of `layer` with both endpoints in `s` (uses a
    /// caller-provided membership mask sized `vertex_count`).
    pub(crate) fn edges_within(&self, layer: usize, s: &VertexSet, mask: &[bool]) -> usize {
        let mut twice = 0usize;
        for &u in s {
            twice += self.adj[layer][u as usize]
                .iter()
                .filter(|&&v| mask[v as usize])
                .count();
        }
        twice / 2
    }

    /// Serializes back to the `u v layer` line format, grouped by layer with
    /// edges in id order. Reparsing yields the same labeled edge set; ids
    /// may permute to appearance order.
    pub fn write(&self) -> String {
        let mut out = String::new();
        for (l, label) in self.layer_labels.iter().enumerate() {
            for u in 0..self.vertex_count() as VertexId {
                for &v in &self.adj[l][u as usize] {
                    if u < v {
                        let _ = writeln!(
                            out,
                            "{} {} {}",
                            self.labels.label(u),
                            self.labels.label(v),
                            label
                        );
                    }
                }
            }
        }
        out
    }
}

/// One layer of a [`MultilayerGraph`] as a peelable view.
#[derive(Clone, Copy)]
pub struct LayerView<'a> {
    graph: &'a MultilayerGraph,
    layer: usize,
}

impl GraphView for LayerView<'_> {
    fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    fn neighbors(&self, u: VertexId) -> &[VertexId] {
        self.graph.neighbors(self.layer, u)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn duplicate_edges_collapse() {
        let g = MultilayerGraph::from_indexed(3, 2, &[(0, 1, 0), (1, 0, 0), (0, 1, 0), (1, 2, 1)]);
        assert_eq!(g.edge_count(0), 1);
        assert_eq!(g.edge_count(1), 1);
        assert_eq!(g.neighbors(0, 0), &[1]);
    }

    #[test]
    fn flattened_neighbors_union_layers() {
        let g = MultilayerGraph::from_indexed(4, 2, &[(0, 1, 0), (0, 2, 1), (0, 1, 1)]);
        assert_eq!(g.flattened_neighbors(0), vec![1, 2]);
    }
}
