//! Graph containers shared by every mining module: vertex interning, sorted
//! vertex sets, and read-only adjacency views.
//!
//! All three graph kinds intern vertex labels to dense ids in first-appearance
//! order and are immutable once built. Adjacency lists are sorted, symmetric,
//! and free of self-loops and duplicates.

mod multilayer;
mod parse;
mod signed;
mod temporal;

pub use multilayer::{LayerView, MultilayerGraph};
pub use parse::{parse_multilayer, parse_signed, parse_temporal, MAX_TIME_RANGE};
pub use signed::SignedGraph;
pub use temporal::{IntersectionGraph, SnapshotView, TemporalGraph};

use std::collections::HashMap;

use crate::error::Error;

/// Dense internal vertex id. The owning graph maps it back to its label.
pub type VertexId = u32;

/// Interner mapping external labels to dense ids in first-appearance order.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LabelMap {
    labels: Vec<String>,
    index: HashMap<String, VertexId>,
}

impl LabelMap {
    pub fn intern(&mut self, label: &str) -> VertexId {
        if let Some(&id) = self.index.get(label) {
            return id;
        }
        let id = self.labels.len() as VertexId;
        self.labels.push(label.to_owned());
        self.index.insert(label.to_owned(), id);
        id
    }

    pub fn get(&self, label: &str) -> Option<VertexId> {
        self.index.get(label).copied()
    }

    pub fn label(&self, id: VertexId) -> &str {
        &self.labels[id as usize]
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// Interner for graphs built programmatically: labels are "0".."n-1".
    pub fn numeric(n: usize) -> Self {
        let mut m = LabelMap::default();
        for i in 0..n {
            m.intern(&i.to_string());
        }
        m
    }
}

/// Sorted, duplicate-free set of vertex ids.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexSet {
    members: Vec<VertexId>,
}

impl VertexSet {
    /// Wraps a vector that is already sorted and deduplicated.
    pub fn from_sorted(members: Vec<VertexId>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        VertexSet { members }
    }

    pub fn from_unsorted(mut members: Vec<VertexId>) -> Self {
        members.sort_unstable();
        members.dedup();
        VertexSet { members }
    }

    /// The full set {0, .., n-1}.
    pub fn full(n: usize) -> Self {
        VertexSet {
            members: (0..n as VertexId).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.members.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, VertexId> {
        self.members.iter()
    }

    pub fn as_slice(&self) -> &[VertexId] {
        &self.members
    }

    pub fn is_subset_of(&self, other: &VertexSet) -> bool {
        self.members.iter().all(|&v| other.contains(v))
    }

    /// Merge-walk intersection; both operands stay sorted so this is linear.
    pub fn intersect(&self, other: &VertexSet) -> VertexSet {
        let (a, b) = (&self.members, &other.members);
        let mut out = Vec::with_capacity(a.len().min(b.len()));
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    out.push(a[i]);
                    i += 1;
                    j += 1;
                }
            }
        }
        VertexSet { members: out }
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = &'a VertexId;
    type IntoIter = std::slice::Iter<'a, VertexId>;
    fn into_iter(self) -> Self::IntoIter {
        self.members.iter()
    }
}

impl FromIterator<VertexId> for VertexSet {
    fn from_iter<T: IntoIterator<Item = VertexId>>(iter: T) -> Self {
        VertexSet::from_unsorted(iter.into_iter().collect())
    }
}

/// Read-only adjacency view: one layer, one snapshot, or an intersection
/// graph. The peeling engine and the core indexers are generic over this.
pub trait GraphView: Sync {
    fn vertex_count(&self) -> usize;
    fn neighbors(&self, u: VertexId) -> &[VertexId];

    fn degree(&self, u: VertexId) -> usize {
        self.neighbors(u).len()
    }
}

/// Degree of `u` inside the subgraph induced by `s` on `view`.
///
/// `u` must be a member of `s`; asking about an outside vertex is a contract
/// violation rather than a zero.
pub fn induced_degree<V: GraphView>(view: &V, s: &VertexSet, u: VertexId) -> Result<usize, Error> {
    if !s.contains(u) {
        return Err(Error::NotInSet { vertex: u });
    }
    Ok(view.neighbors(u).iter().filter(|&&v| s.contains(v)).count())
}

/// Normalizes an undirected edge so the smaller endpoint comes first.
pub(crate) fn ordered(u: VertexId, v: VertexId) -> (VertexId, VertexId) {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

/// Builds sorted adjacency lists from a deduplicated (u < v) edge list.
pub(crate) fn adjacency_from_edges(n: usize, edges: &[(VertexId, VertexId)]) -> Vec<Vec<VertexId>> {
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u as usize].push(v);
        adj[v as usize].push(u);
    }
    for list in &mut adj {
        list.sort_unstable();
    }
    adj
}
