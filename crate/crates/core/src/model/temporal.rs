use std::fmt::Write as _;

use super::{adjacency_from_edges, ordered, GraphView, LabelMap, VertexId};

/// A sequence of snapshots over a contiguous timestamp range. Timestamps
/// missing from the input become empty snapshots, so `[t_min, t_max]` always
/// indexes without gaps.
#[derive(Debug, Clone, PartialEq)]
pub struct TemporalGraph {
    labels: LabelMap,
    t_min: u64,
    /// snapshots[t - t_min][vertex] -> sorted neighbor ids
    snapshots: Vec<Vec<Vec<VertexId>>>,
}

impl TemporalGraph {
    pub(crate) fn build(
        labels: LabelMap,
        t_min: u64,
        mut edges_per_t: Vec<Vec<(VertexId, VertexId)>>,
    ) -> Self {
        let n = labels.len();
        let snapshots = edges_per_t
            .iter_mut()
            .map(|edges| {
                for e in edges.iter_mut() {
                    *e = ordered(e.0, e.1);
                }
                edges.sort_unstable();
                edges.dedup();
                adjacency_from_edges(n, edges)
            })
            .collect();
        TemporalGraph {
            labels,
            t_min,
            snapshots,
        }
    }

    /// Programmatic constructor: vertices "0".."n-1", timestamps 0..t,
    /// edges as (u, v, t). Zero timestamps gives an empty domain.
    pub fn from_indexed(n: usize, timestamps: usize, edges: &[(VertexId, VertexId, u64)]) -> Self {
        let mut per_t = vec![Vec::new(); timestamps];
        for &(u, v, t) in edges {
            assert!(u != v && (t as usize) < timestamps);
            per_t[t as usize].push((u, v));
        }
        Self::build(LabelMap::numeric(n), 0, per_t)
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &LabelMap {
        &self.labels
    }

    pub fn t_min(&self) -> u64 {
        self.t_min
    }

    pub fn t_max(&self) -> u64 {
        self.t_min + self.snapshots.len() as u64 - 1
    }

    /// Number of timestamps in the materialized domain.
    pub fn timestamp_count(&self) -> usize {
        self.snapshots.len()
    }

    pub fn timestamps(&self) -> impl DoubleEndedIterator<Item = u64> {
        self.t_min..=self.t_max()
    }

    fn slot(&self, t: u64) -> &Vec<Vec<VertexId>> {
        &self.snapshots[(t - self.t_min) as usize]
    }

    pub fn snapshot_neighbors(&self, t: u64, u: VertexId) -> &[VertexId] {
        &self.slot(t)[u as usize]
    }

    pub fn snapshot_edge_count(&self, t: u64) -> usize {
        self.slot(t).iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn snapshot_view(&self, t: u64) -> SnapshotView<'_> {
        SnapshotView { graph: self, t }
    }

    /// Serializes back to the `u v t` line format, grouped by timestamp.
    pub fn write(&self) -> String {
        let mut out = String::new();
        for t in self.timestamps() {
            let adj = self.slot(t);
            for u in 0..self.vertex_count() as VertexId {
                for &v in &adj[u as usize] {
                    if u < v {
                        let _ = writeln!(
                            out,
                            "{} {} {}",
                            self.labels.label(u),
                            self.labels.label(v),
                            t
                        );
                    }
                }
            }
        }
        out
    }
}

/// One snapshot of a [`TemporalGraph`] as a peelable view.
#[derive(Clone, Copy)]
pub struct SnapshotView<'a> {
    graph: &'a TemporalGraph,
    t: u64,
}

impl GraphView for SnapshotView<'_> {
    fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    fn neighbors(&self, u: VertexId) -> &[VertexId] {
        self.graph.snapshot_neighbors(self.t, u)
    }
}

/// Materialized edge intersection of a timestamp interval.
///
/// Built from a single snapshot and narrowed one timestamp at a time, which
/// is what the span-core sweeps rely on; `from_interval` folds the whole
/// interval for one-shot use.
#[derive(Debug, Clone, PartialEq)]
pub struct IntersectionGraph {
    adj: Vec<Vec<VertexId>>,
    edge_count: usize,
}

impl IntersectionGraph {
    pub fn from_snapshot(g: &TemporalGraph, t: u64) -> Self {
        let adj = g.slot(t).clone();
        let edge_count = adj.iter().map(Vec::len).sum::<usize>() / 2;
        IntersectionGraph { adj, edge_count }
    }

    pub fn from_interval(g: &TemporalGraph, ts: u64, te: u64) -> Self {
        assert!(ts <= te && ts >= g.t_min() && te <= g.t_max());
        let mut inter = Self::from_snapshot(g, ts);
        for t in ts + 1..=te {
            inter.intersect_snapshot(g, t);
        }
        inter
    }

    /// Keeps only edges that also exist at timestamp `t`.
    pub fn intersect_snapshot(&mut self, g: &TemporalGraph, t: u64) {
        let snap = g.slot(t);
        let mut kept = 0usize;
        for (u, list) in self.adj.iter_mut().enumerate() {
            if list.is_empty() {
                continue;
            }
            let other = &snap[u];
            let mut out = Vec::with_capacity(list.len().min(other.len()));
            let (mut i, mut j) = (0, 0);
            while i < list.len() && j < other.len() {
                match list[i].cmp(&other[j]) {
                    std::cmp::Ordering::Less => i += 1,
                    std::cmp::Ordering::Greater => j += 1,
                    std::cmp::Ordering::Equal => {
                        out.push(list[i]);
                        i += 1;
                        j += 1;
                    }
                }
            }
            kept += out.len();
            *list = out;
        }
        self.edge_count = kept / 2;
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }
}

impl GraphView for IntersectionGraph {
    fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    fn neighbors(&self, u: VertexId) -> &[VertexId] {
        &self.adj[u as usize]
    }
}
