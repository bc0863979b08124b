//! Applications of the multilayer core lattice: densest subgraph under a
//! layer trade-off, search-space pruning for frequent cross-graph
//! quasi-cliques, and seeded community search.
//!
//! All three score a vertex set by the same shape of objective: pick the
//! layer subset maximizing (worst per-layer figure) · |subset|^β. Restricted
//! to the top-p layers by figure, only prefixes of the sorted order matter,
//! so the max over 2^|L|−1 subsets collapses to a linear scan.

use std::collections::HashSet;

use crate::error::Error;
use crate::exec;
use crate::model::{MultilayerGraph, VertexId, VertexSet};
use crate::multilayer::{decompose_all, CorenessVector, MultilayerCore};
use crate::peel::peel_to_vector;

/// Largest prefix value of `values` sorted descending, weighted by
/// |prefix|^beta. Returns the value and the chosen layers (ascending).
/// Ties go to the larger prefix, which keeps the chosen support monotone
/// in beta.
fn layer_tradeoff_max(values: &[f64], beta: f64) -> (f64, Vec<usize>) {
    debug_assert!(!values.is_empty());
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_by(|&a, &b| {
        values[b]
            .partial_cmp(&values[a])
            .expect("layer figures are finite")
            .then(a.cmp(&b))
    });
    let mut best = f64::NEG_INFINITY;
    let mut best_p = 0;
    for p in 1..=order.len() {
        let value = values[order[p - 1]] * (p as f64).powf(beta);
        if value >= best {
            best = value;
            best_p = p;
        }
    }
    let mut support = order[..best_p].to_vec();
    support.sort_unstable();
    (best, support)
}

fn validate_beta(beta: f64) -> Result<(), Error> {
    if !(beta >= 0.0 && beta.is_finite()) {
        return Err(Error::InvalidParameter(format!(
            "beta must be a finite non-negative number, got {beta}"
        )));
    }
    Ok(())
}

/// Density of `s` with the layer trade-off: max over non-empty layer subsets
/// of (min per-layer edge density of s) · |subset|^beta. Returns the value
/// and the maximizing layers.
pub fn multilayer_density(
    g: &MultilayerGraph,
    s: &VertexSet,
    beta: f64,
) -> Result<(f64, Vec<usize>), Error> {
    validate_beta(beta)?;
    if s.is_empty() {
        return Err(Error::InvalidParameter(
            "density of the empty set is undefined".to_owned(),
        ));
    }
    let mut mask = vec![false; g.vertex_count()];
    for &u in s {
        mask[u as usize] = true;
    }
    let densities: Vec<f64> = (0..g.layer_count())
        .map(|l| g.edges_within(l, s, &mask) as f64 / s.len() as f64)
        .collect();
    Ok(layer_tradeoff_max(&densities, beta))
}

#[derive(Debug, Clone, PartialEq)]
pub struct DensestResult {
    pub vertices: VertexSet,
    pub delta: f64,
    /// Layer indices achieving the max, ascending.
    pub support_layers: Vec<usize>,
    /// The approximation factor 1/(2·|L|^beta) this result is good for.
    pub guarantee: f64,
}

/// Best core of the lattice under `multilayer_density`. Ties prefer fewer
/// vertices, then the earlier core in level-major order. The result's delta
/// is within factor guarantee of the true optimum over all vertex sets.
pub fn densest_subgraph(
    g: &MultilayerGraph,
    beta: f64,
    cap: usize,
) -> Result<DensestResult, Error> {
    validate_beta(beta)?;
    if g.total_edge_count() == 0 {
        return Err(Error::NoEdges);
    }
    let cores = decompose_all(g, cap)?;
    // Density is a function of the member set alone; evaluate each distinct
    // set once, at its first (level-major) appearance.
    let mut seen: HashSet<&[VertexId]> = HashSet::new();
    let candidates: Vec<&MultilayerCore> = cores
        .iter()
        .filter(|c| seen.insert(c.members.as_slice()))
        .collect();
    let scored = exec::map_ordered(candidates, |core| {
        let (delta, support) =
            multilayer_density(g, &core.members, beta).expect("cores are non-empty");
        (core, delta, support)
    });
    let mut best: Option<(&MultilayerCore, f64, Vec<usize>)> = None;
    for (core, delta, support) in scored {
        let better = match &best {
            None => true,
            Some((bc, bd, _)) => {
                delta > *bd || (delta == *bd && core.members.len() < bc.members.len())
            }
        };
        if better {
            best = Some((core, delta, support));
        }
    }
    let (core, delta, support_layers) = best.expect("a graph with edges has cores");
    Ok(DensestResult {
        vertices: core.members.clone(),
        delta,
        support_layers,
        guarantee: 1.0 / (2.0 * (g.layer_count() as f64).powf(beta)),
    })
}

/// Ceiling that forgives float dust: values a hair above an integer round
/// down to it, and the result never drops below 1.
pub(crate) fn ceil_threshold(x: f64) -> u32 {
    ((x - 1e-9).ceil().max(1.0)) as u32
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuasiCliqueParams {
    /// Degree fraction gamma in (0, 1]: members need >= ceil(gamma(|S|-1))
    /// neighbors inside S.
    pub gamma: f64,
    /// Smallest interesting quasi-clique, >= 2.
    pub min_size: u32,
    /// Fraction of layers that must qualify, in (0, 1].
    pub min_sup: f64,
}

impl QuasiCliqueParams {
    pub fn validate(&self) -> Result<(), Error> {
        if !(self.gamma > 0.0 && self.gamma <= 1.0) {
            return Err(Error::InvalidParameter(format!(
                "gamma must lie in (0, 1], got {}",
                self.gamma
            )));
        }
        if self.min_size < 2 {
            return Err(Error::InvalidParameter(format!(
                "min-size must be at least 2, got {}",
                self.min_size
            )));
        }
        if !(self.min_sup > 0.0 && self.min_sup <= 1.0) {
            return Err(Error::InvalidParameter(format!(
                "min-sup must lie in (0, 1], got {}",
                self.min_sup
            )));
        }
        Ok(())
    }

    /// Layers that must qualify: ceil(min_sup · |L|).
    pub fn support_threshold(&self, layers: usize) -> u32 {
        ceil_threshold(self.min_sup * layers as f64)
    }

    /// Degree every member must reach in a qualifying layer, at the minimum
    /// size: ceil(gamma · (min_size − 1)).
    pub fn degree_threshold(&self) -> u32 {
        ceil_threshold(self.gamma * (self.min_size - 1) as f64)
    }
}

/// Vertices that can possibly appear in a frequent cross-graph quasi-clique:
/// the union of all cores of size >= min_size whose vector reaches the
/// degree threshold on at least the required number of layers.
///
/// Every qualifying core contains, and is no smaller than, the core of some
/// vector with the threshold on exactly that many layers and zero elsewhere,
/// so only those vectors are peeled. May return the empty set — then no
/// frequent quasi-clique exists at all.
pub fn quasi_clique_prune(
    g: &MultilayerGraph,
    params: &QuasiCliqueParams,
) -> Result<VertexSet, Error> {
    params.validate()?;
    let lc = g.layer_count();
    let r = params.support_threshold(lc).min(lc as u32) as usize;
    let d = params.degree_threshold();
    let full = VertexSet::full(g.vertex_count());
    let mut keep = vec![false; g.vertex_count()];
    let mut combo = Vec::with_capacity(r);
    layer_combinations(lc, r, 0, &mut combo, &mut |layers| {
        let mut ks = vec![0u32; lc];
        for &l in layers {
            ks[l] = d;
        }
        let core = peel_to_vector(g, &CorenessVector::new(ks), &full);
        if core.len() >= params.min_size as usize {
            for &u in &core {
                keep[u as usize] = true;
            }
        }
    });
    Ok((0..g.vertex_count() as VertexId)
        .filter(|&u| keep[u as usize])
        .collect())
}

/// Calls `f` with every size-r subset of 0..lc, in lexicographic order.
fn layer_combinations(
    lc: usize,
    r: usize,
    from: usize,
    combo: &mut Vec<usize>,
    f: &mut impl FnMut(&[usize]),
) {
    if combo.len() == r {
        f(combo);
        return;
    }
    let still_needed = r - combo.len();
    for l in from..=lc.saturating_sub(still_needed) {
        combo.push(l);
        layer_combinations(lc, r, l + 1, combo, f);
        combo.pop();
    }
}

/// Everything inside `candidates` that actually is a frequent cross-graph
/// quasi-clique: sets of size >= min_size where, in enough layers, every
/// member has at least ceil(gamma(|S|-1)) neighbors inside the set.
/// Exhaustive over subsets; the candidate count is capped hard.
pub fn quasi_clique_enumerate(
    g: &MultilayerGraph,
    params: &QuasiCliqueParams,
    candidates: &VertexSet,
) -> Result<Vec<VertexSet>, Error> {
    const GUARD: usize = 25;
    params.validate()?;
    let c = candidates.len();
    if c > GUARD {
        return Err(Error::GuardExceeded {
            what: "quasi-clique candidate set",
            limit: GUARD,
            unit: "vertices",
            actual: c,
        });
    }
    let lc = g.layer_count();
    let r = params.support_threshold(lc);
    let ids = candidates.as_slice();
    // adjacency between candidates as bitmasks, one per layer
    let mut bits = vec![vec![0u32; c]; lc];
    for (i, &u) in ids.iter().enumerate() {
        for (j, &v) in ids.iter().enumerate().skip(i + 1) {
            for l in 0..lc {
                if g.neighbors(l, u).binary_search(&v).is_ok() {
                    bits[l][i] |= 1 << j;
                    bits[l][j] |= 1 << i;
                }
            }
        }
    }
    let mut found = Vec::new();
    for mask in 1u32..1 << c {
        let size = mask.count_ones();
        if size < params.min_size {
            continue;
        }
        let need = ceil_threshold(params.gamma * (size - 1) as f64);
        let mut qualifying = 0u32;
        for layer_bits in &bits {
            let ok = (0..c).all(|i| {
                mask & (1 << i) == 0 || (layer_bits[i] & mask).count_ones() >= need
            });
            if ok {
                qualifying += 1;
                if qualifying >= r {
                    break;
                }
            }
        }
        if qualifying >= r {
            found.push(
                (0..c)
                    .filter(|&i| mask & (1 << i) != 0)
                    .map(|i| ids[i])
                    .collect::<VertexSet>(),
            );
        }
    }
    found.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.as_slice().cmp(b.as_slice())));
    Ok(found)
}

#[derive(Debug, Clone, PartialEq)]
pub struct CommunityQuery {
    pub query: VertexSet,
    pub beta: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CommunityResult {
    pub vertices: VertexSet,
    pub mu: f64,
    /// Layer indices achieving mu on the returned set, ascending.
    pub support_layers: Vec<usize>,
}

/// Seeded community search: among the cores that contain the whole query
/// inside one flattened-graph component, take the one maximizing the
/// min-degree trade-off mu, and return the query's component of it.
///
/// mu mirrors the density trade-off with minimum degree in place of density;
/// the reported value is recomputed on the returned component (never worse —
/// dropping other components keeps every member's layer degrees).
pub fn community_search(
    g: &MultilayerGraph,
    q: &CommunityQuery,
    cap: usize,
) -> Result<CommunityResult, Error> {
    validate_beta(q.beta)?;
    if q.query.is_empty() {
        return Err(Error::InvalidParameter(
            "community query needs at least one vertex".to_owned(),
        ));
    }
    if let Some(&u) = q.query.iter().find(|&&u| u as usize >= g.vertex_count()) {
        return Err(Error::InvalidParameter(format!(
            "query vertex id {u} is out of range"
        )));
    }
    let cores = decompose_all(g, cap)?;
    let scored = exec::map_ordered(cores, |core| {
        if !q.query.is_subset_of(&core.members) {
            return None;
        }
        let component = flattened_component(g, &core.members, q.query.as_slice()[0]);
        if !q.query.is_subset_of(&component) {
            return None;
        }
        let (mu, _) = min_degree_tradeoff(g, &core.members, q.beta);
        Some((core.members, mu))
    });
    let mut best: Option<(VertexSet, f64)> = None;
    for (members, mu) in scored.into_iter().flatten() {
        let better = match &best {
            None => true,
            Some((bm, bmu)) => mu > *bmu || (mu == *bmu && members.len() < bm.len()),
        };
        if better {
            best = Some((members, mu));
        }
    }
    let (members, _) = best.ok_or(Error::NoCommunity)?;
    let vertices = flattened_component(g, &members, q.query.as_slice()[0]);
    let (mu, support_layers) = min_degree_tradeoff(g, &vertices, q.beta);
    Ok(CommunityResult {
        vertices,
        mu,
        support_layers,
    })
}

/// Minimum per-layer degree inside `s`, fed through the layer trade-off.
fn min_degree_tradeoff(g: &MultilayerGraph, s: &VertexSet, beta: f64) -> (f64, Vec<usize>) {
    let mut mask = vec![false; g.vertex_count()];
    for &u in s {
        mask[u as usize] = true;
    }
    let mindegs: Vec<f64> = (0..g.layer_count())
        .map(|l| {
            s.iter()
                .map(|&u| g.neighbors(l, u).iter().filter(|&&v| mask[v as usize]).count())
                .min()
                .unwrap_or(0) as f64
        })
        .collect();
    layer_tradeoff_max(&mindegs, beta)
}

/// Component of `start` in the union-of-layers graph induced on `s`.
fn flattened_component(g: &MultilayerGraph, s: &VertexSet, start: VertexId) -> VertexSet {
    let mut in_s = vec![false; g.vertex_count()];
    for &u in s {
        in_s[u as usize] = true;
    }
    debug_assert!(in_s[start as usize]);
    let mut seen = vec![false; g.vertex_count()];
    seen[start as usize] = true;
    let mut queue = vec![start];
    let mut head = 0;
    while head < queue.len() {
        let u = queue[head];
        head += 1;
        for l in 0..g.layer_count() {
            for &v in g.neighbors(l, u) {
                if in_s[v as usize] && !seen[v as usize] {
                    seen[v as usize] = true;
                    queue.push(v);
                }
            }
        }
    }
    queue.sort_unstable();
    VertexSet::from_sorted(queue)
}
