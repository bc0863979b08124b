//! The constrained-peeling primitive everything else builds on.
//!
//! Peeling repeatedly deletes any vertex violating its degree threshold until
//! none is left. The fixed point does not depend on deletion order, so the
//! result of every function here is unique for its inputs.

use crate::error::Error;
use crate::model::{GraphView, IntersectionGraph, MultilayerGraph, TemporalGraph, VertexId, VertexSet};
use crate::multilayer::CorenessVector;

/// Core numbers for the vertices of one view.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoreIndexing {
    /// core_number[u] = largest k such that u survives k-peeling.
    pub core_number: Vec<u32>,
    /// Maximum core order; the k*-core is non-empty, the (k*+1)-core is not.
    pub k_star: u32,
}

impl CoreIndexing {
    /// Members of the k-core, i.e. vertices with core number >= k.
    ///
    /// For k = 0 this is every vertex, including isolated ones.
    pub fn core_set(&self, k: u32) -> VertexSet {
        VertexSet::from_sorted(
            self.core_number
                .iter()
                .enumerate()
                .filter(|&(_, &c)| c >= k)
                .map(|(u, _)| u as VertexId)
                .collect(),
        )
    }
}

/// Single-graph core decomposition by bucket peeling, O(|V| + |E|).
pub fn core_decomposition<V: GraphView>(view: &V) -> CoreIndexing {
    let n = view.vertex_count();
    let members: Vec<VertexId> = (0..n as VertexId).collect();
    let core_number = core_numbers_within(view, &members, None);
    let k_star = core_number.iter().copied().max().unwrap_or(0);
    CoreIndexing {
        core_number,
        k_star,
    }
}

/// Bucket peeling restricted to `members` (degrees are counted inside the
/// induced subgraph). Returns an n-sized vector; non-members get 0.
///
/// `mask`, when given, must flag exactly the members and saves rebuilding it.
pub(crate) fn core_numbers_within<V: GraphView>(
    view: &V,
    members: &[VertexId],
    mask: Option<&[bool]>,
) -> Vec<u32> {
    let n = view.vertex_count();
    let mut core = vec![0u32; n];
    if members.is_empty() {
        return core;
    }
    let owned_mask;
    let mask: &[bool] = match mask {
        Some(m) => m,
        None => {
            let mut m = vec![false; n];
            for &u in members {
                m[u as usize] = true;
            }
            owned_mask = m;
            &owned_mask
        }
    };
    let mut deg = vec![0u32; n];
    let mut max_deg = 0u32;
    for &u in members {
        let d = view
            .neighbors(u)
            .iter()
            .filter(|&&v| mask[v as usize])
            .count() as u32;
        deg[u as usize] = d;
        max_deg = max_deg.max(d);
    }

    // Batagelj-Zaversnik: members bucketed by current degree, lowest first.
    let mut bin = vec![0usize; max_deg as usize + 2];
    for &u in members {
        bin[deg[u as usize] as usize + 1] += 1;
    }
    for i in 1..bin.len() {
        bin[i] += bin[i - 1];
    }
    let mut start = bin.clone(); // start[d] = first slot of bucket d
    let mut vert = vec![0 as VertexId; members.len()];
    let mut pos = vec![0usize; n];
    for &u in members {
        let d = deg[u as usize] as usize;
        vert[start[d]] = u;
        pos[u as usize] = start[d];
        start[d] += 1;
    }

    let mut processed = vec![false; n];
    for i in 0..vert.len() {
        let u = vert[i];
        processed[u as usize] = true;
        core[u as usize] = deg[u as usize];
        for &v in view.neighbors(u) {
            let vi = v as usize;
            if !mask[vi] || processed[vi] || deg[vi] <= deg[u as usize] {
                continue;
            }
            // move v to the front of its bucket, then shrink its degree
            let dv = deg[vi] as usize;
            let pv = pos[vi];
            let pw = bin[dv];
            let w = vert[pw];
            if v != w {
                vert[pv] = w;
                vert[pw] = v;
                pos[w as usize] = pv;
                pos[vi] = pw;
            }
            bin[dv] += 1;
            deg[vi] -= 1;
        }
    }
    core
}

/// Deletes vertices of `start` with fewer than `k` neighbors inside the
/// surviving set until none violates, and returns the survivors.
pub(crate) fn peel_in_view<V: GraphView>(view: &V, k: u32, start: &VertexSet) -> VertexSet {
    if k == 0 {
        return start.clone();
    }
    let n = view.vertex_count();
    let mut alive = vec![false; n];
    for &u in start {
        alive[u as usize] = true;
    }
    let mut deg = vec![0u32; n];
    let mut queue: Vec<VertexId> = Vec::new();
    for &u in start {
        let d = view
            .neighbors(u)
            .iter()
            .filter(|&&v| alive[v as usize])
            .count() as u32;
        deg[u as usize] = d;
        if d < k {
            queue.push(u);
        }
    }
    for &u in &queue {
        alive[u as usize] = false;
    }
    let mut head = 0;
    while head < queue.len() {
        let u = queue[head];
        head += 1;
        for &v in view.neighbors(u) {
            let vi = v as usize;
            if alive[vi] {
                deg[vi] -= 1;
                if deg[vi] < k {
                    alive[vi] = false;
                    queue.push(v);
                }
            }
        }
    }
    VertexSet::from_sorted(start.iter().copied().filter(|&u| alive[u as usize]).collect())
}

/// The k-core of a multilayer graph restricted to `start`: the maximal
/// S ⊆ start whose members have at least k[l] neighbors in S on every layer.
///
/// Starting from any superset of the true core gives the same result; callers
/// seed with lattice parents to avoid re-peeling from the whole graph.
pub fn peel_to_vector(g: &MultilayerGraph, k: &CorenessVector, start: &VertexSet) -> VertexSet {
    assert_eq!(
        k.len(),
        g.layer_count(),
        "coreness vector length must match layer count"
    );
    // layers with a zero threshold can never trigger a deletion
    let active: Vec<usize> = (0..k.len()).filter(|&l| k[l] > 0).collect();
    if active.is_empty() {
        return start.clone();
    }
    let n = g.vertex_count();
    let mut alive = vec![false; n];
    for &u in start {
        alive[u as usize] = true;
    }
    let mut deg = vec![0u32; n * active.len()];
    let mut queue: Vec<VertexId> = Vec::new();
    for &u in start {
        let mut violates = false;
        for (slot, &l) in active.iter().enumerate() {
            let d = g
                .neighbors(l, u)
                .iter()
                .filter(|&&v| alive[v as usize])
                .count() as u32;
            deg[u as usize * active.len() + slot] = d;
            violates |= d < k[l];
        }
        if violates {
            queue.push(u);
        }
    }
    for &u in &queue {
        alive[u as usize] = false;
    }
    let mut head = 0;
    while head < queue.len() {
        let u = queue[head];
        head += 1;
        for (slot, &l) in active.iter().enumerate() {
            for &v in g.neighbors(l, u) {
                let vi = v as usize;
                if alive[vi] {
                    let cell = vi * active.len() + slot;
                    deg[cell] -= 1;
                    if deg[cell] < k[l] {
                        alive[vi] = false;
                        queue.push(v);
                    }
                }
            }
        }
    }
    VertexSet::from_sorted(start.iter().copied().filter(|&u| alive[u as usize]).collect())
}

/// The k-core of the edge intersection over `[ts, te]`, restricted to
/// `start`. Materializes the intersection graph, then peels.
pub fn peel_interval(
    g: &TemporalGraph,
    k: u32,
    ts: u64,
    te: u64,
    start: &VertexSet,
) -> Result<VertexSet, Error> {
    if g.timestamp_count() == 0 || ts > te || ts < g.t_min() || te > g.t_max() {
        return Err(Error::InvalidParameter(format!(
            "interval [{ts}, {te}] lies outside the timestamp domain"
        )));
    }
    let inter = IntersectionGraph::from_interval(g, ts, te);
    Ok(peel_in_view(&inter, k, start))
}
