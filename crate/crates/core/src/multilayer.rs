//! Multilayer core lattice: every non-empty coreness vector, and the maximal
//! ones.
//!
//! A coreness vector k assigns each layer a degree threshold; its core is the
//! largest vertex set whose members meet every threshold inside the set.
//! Cores shrink as vectors grow, so the non-empty vectors form a downward
//! closed lattice explored level by level (level = sum of thresholds).

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::ops::Index;

use crate::error::Error;
use crate::exec;
use crate::model::{MultilayerGraph, VertexId, VertexSet};
use crate::peel::{core_numbers_within, peel_to_vector};

/// Emission cap shared by the exhaustive decompositions. Lattices are
/// exponential in the worst case; hitting the cap aborts with an error
/// instead of filling memory.
pub const DEFAULT_CORE_CAP: usize = 10_000_000;

/// Per-layer degree thresholds. Ordering is lexicographic.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CorenessVector(Vec<u32>);

impl CorenessVector {
    pub fn new(ks: Vec<u32>) -> Self {
        CorenessVector(ks)
    }

    pub fn zero(layers: usize) -> Self {
        CorenessVector(vec![0; layers])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    /// Sum of thresholds; the lattice level this vector sits on.
    pub fn level(&self) -> u64 {
        self.0.iter().map(|&k| k as u64).sum()
    }

    /// The vector one step deeper on layer `l`.
    pub fn child(&self, l: usize) -> Self {
        let mut ks = self.0.clone();
        ks[l] += 1;
        CorenessVector(ks)
    }

    /// One step shallower on each positive layer. This vector's core is
    /// contained in the core of every parent.
    pub fn parents(&self) -> impl Iterator<Item = (usize, CorenessVector)> + '_ {
        (0..self.0.len()).filter(|&l| self.0[l] > 0).map(move |l| {
            let mut ks = self.0.clone();
            ks[l] -= 1;
            (l, CorenessVector(ks))
        })
    }

    /// Componentwise >=.
    pub fn dominates(&self, other: &Self) -> bool {
        self.0.len() == other.0.len()
            && self.0.iter().zip(&other.0).all(|(a, b)| a >= b)
    }
}

impl Index<usize> for CorenessVector {
    type Output = u32;
    fn index(&self, l: usize) -> &u32 {
        &self.0[l]
    }
}

impl fmt::Display for CorenessVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, k) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{k}")?;
        }
        write!(f, ")")
    }
}

/// One non-empty core of the lattice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultilayerCore {
    pub vector: CorenessVector,
    pub members: VertexSet,
}

/// Degree bookkeeping carried from parent to child during the lattice walk.
/// `degs[i * L + l]` is the layer-l degree of `members[i]` inside `members`.
struct CoreState {
    members: VertexSet,
    degs: Vec<u32>,
}

/// All non-empty cores, level-major and lexicographic within a level.
///
/// Walks the lattice breadth-first. A child's member set is derived from its
/// smallest parent's degree state: members outside the parents' intersection
/// are force-deleted, the raised threshold is applied, and the usual cascade
/// runs — no degree is ever recounted from the adjacency lists. Fails with
/// `CapExceeded` once more than `cap` cores would be emitted.
pub fn decompose_all(g: &MultilayerGraph, cap: usize) -> Result<Vec<MultilayerCore>, Error> {
    let n = g.vertex_count();
    let lc = g.layer_count();
    let mut out = Vec::new();
    if n == 0 {
        return Ok(out);
    }

    let mut degs = vec![0u32; n * lc];
    for u in 0..n {
        for l in 0..lc {
            degs[u * lc + l] = g.neighbors(l, u as VertexId).len() as u32;
        }
    }
    let mut frontier: BTreeMap<CorenessVector, CoreState> = BTreeMap::new();
    frontier.insert(
        CorenessVector::zero(lc),
        CoreState {
            members: VertexSet::full(n),
            degs,
        },
    );

    while !frontier.is_empty() {
        for (k, st) in &frontier {
            if out.len() == cap {
                return Err(Error::CapExceeded { cap });
            }
            out.push(MultilayerCore {
                vector: k.clone(),
                members: st.members.clone(),
            });
        }

        // Candidates for the next level: children whose parents all survived.
        // A non-empty core's parents are all non-empty, so this loses nothing.
        let mut cands: BTreeSet<CorenessVector> = BTreeSet::new();
        for k in frontier.keys() {
            for l in 0..lc {
                cands.insert(k.child(l));
            }
        }
        let cands: Vec<CorenessVector> = cands
            .into_iter()
            .filter(|c| c.parents().all(|(_, p)| frontier.contains_key(&p)))
            .collect();

        let built = exec::map_ordered(cands, |c| {
            let st = build_child(g, &frontier, &c);
            (c, st)
        });
        let mut next = BTreeMap::new();
        for (c, st) in built {
            if let Some(st) = st {
                next.insert(c, st);
            }
        }
        frontier = next;
    }
    Ok(out)
}

/// Child construction for `decompose_all`. Returns None for an empty core.
fn build_child(
    g: &MultilayerGraph,
    frontier: &BTreeMap<CorenessVector, CoreState>,
    c: &CorenessVector,
) -> Option<CoreState> {
    let lc = g.layer_count();

    let mut inter: Option<VertexSet> = None;
    let mut base: Option<&CoreState> = None;
    for (_, p) in c.parents() {
        let ps = &frontier[&p];
        if base.map_or(true, |b| ps.members.len() < b.members.len()) {
            base = Some(ps);
        }
        inter = Some(match inter {
            None => ps.members.clone(),
            Some(i) => i.intersect(&ps.members),
        });
    }
    let base = base?;
    let inter = inter?;
    if inter.is_empty() {
        return None;
    }

    let m = base.members.len();
    let mut pos = vec![u32::MAX; g.vertex_count()];
    for (i, &u) in base.members.iter().enumerate() {
        pos[u as usize] = i as u32;
    }
    let mut alive = vec![true; m];
    let mut deg = base.degs.clone();
    let mut queue: Vec<u32> = Vec::new();
    for (i, &u) in base.members.iter().enumerate() {
        let forced = !inter.contains(u);
        let violates = (0..lc).any(|l| deg[i * lc + l] < c[l]);
        if forced || violates {
            alive[i] = false;
            queue.push(i as u32);
        }
    }
    let mut head = 0;
    while head < queue.len() {
        let i = queue[head] as usize;
        head += 1;
        let u = base.members.as_slice()[i];
        for l in 0..lc {
            for &v in g.neighbors(l, u) {
                let pv = pos[v as usize];
                if pv == u32::MAX || !alive[pv as usize] {
                    continue;
                }
                let cell = pv as usize * lc + l;
                deg[cell] -= 1;
                if deg[cell] < c[l] {
                    alive[pv as usize] = false;
                    queue.push(pv);
                }
            }
        }
    }

    let survivors: Vec<usize> = (0..m).filter(|&i| alive[i]).collect();
    if survivors.is_empty() {
        return None;
    }
    let mut members = Vec::with_capacity(survivors.len());
    let mut degs = Vec::with_capacity(survivors.len() * lc);
    for &i in &survivors {
        members.push(base.members.as_slice()[i]);
        degs.extend_from_slice(&deg[i * lc..(i + 1) * lc]);
    }
    Some(CoreState {
        members: VertexSet::from_sorted(members),
        degs,
    })
}

/// Reference decomposition: identical output to `decompose_all`, but every
/// core is peeled from the full vertex set with fresh degree counts.
pub fn decompose_naive(g: &MultilayerGraph, cap: usize) -> Result<Vec<MultilayerCore>, Error> {
    let n = g.vertex_count();
    let lc = g.layer_count();
    let mut out = Vec::new();
    if n == 0 {
        return Ok(out);
    }
    let full = VertexSet::full(n);
    let mut level = vec![CorenessVector::zero(lc)];
    while !level.is_empty() {
        let peeled = exec::map_ordered(level, |k| {
            let members = peel_to_vector(g, &k, &full);
            (k, members)
        });
        let mut next: BTreeSet<CorenessVector> = BTreeSet::new();
        for (k, members) in peeled {
            if members.is_empty() {
                continue;
            }
            if out.len() == cap {
                return Err(Error::CapExceeded { cap });
            }
            for l in 0..lc {
                next.insert(k.child(l));
            }
            out.push(MultilayerCore { vector: k, members });
        }
        level = next.into_iter().collect();
    }
    Ok(out)
}

/// The maximal cores: non-empty vectors dominated by no other non-empty
/// vector. Found by a depth-first walk that never materializes the full
/// lattice.
///
/// Each vector is reached once, along the path whose increments come in
/// non-decreasing layer order; from a node entered by incrementing layer j,
/// only layers >= j are extended. Per-layer core numbers inside the current
/// members bound every reachable threshold, which both skips peels for
/// provably empty children and prunes whole branches once a known maximal
/// vector dominates the branch envelope.
pub fn maximal_cores(g: &MultilayerGraph) -> Vec<MultilayerCore> {
    let n = g.vertex_count();
    let lc = g.layer_count();
    let mut found: Vec<MultilayerCore> = Vec::new();
    if n == 0 {
        return found;
    }
    maximal_dfs(g, &CorenessVector::zero(lc), &VertexSet::full(n), 0, &mut found);
    found.sort_by(|a, b| {
        a.vector
            .level()
            .cmp(&b.vector.level())
            .then_with(|| a.vector.cmp(&b.vector))
    });
    found
}

fn maximal_dfs(
    g: &MultilayerGraph,
    k: &CorenessVector,
    s: &VertexSet,
    j: usize,
    found: &mut Vec<MultilayerCore>,
) {
    let lc = g.layer_count();
    let mut mask = vec![false; g.vertex_count()];
    for &u in s {
        mask[u as usize] = true;
    }
    // ub[l]: largest layer-l core order inside s; no descendant exceeds it.
    let ub: Vec<u32> = (0..lc)
        .map(|l| {
            core_numbers_within(&g.layer_view(l), s.as_slice(), Some(&mask))
                .into_iter()
                .max()
                .unwrap_or(0)
        })
        .collect();
    // Branch envelope: coordinates below j are frozen at k, the rest can
    // reach at most ub. A known maximal vector covering the envelope makes
    // every descendant non-maximal.
    let dominated = found.iter().any(|m| {
        (0..lc).all(|l| m.vector[l] >= if l < j { k[l] } else { ub[l] })
    });
    if dominated {
        return;
    }

    let mut all_empty = true;
    for l in j..lc {
        if k[l] + 1 > ub[l] {
            continue;
        }
        let ck = k.child(l);
        let child = peel_to_vector(g, &ck, s);
        if child.is_empty() {
            continue;
        }
        all_empty = false;
        maximal_dfs(g, &ck, &child, l, found);
    }
    if all_empty {
        // Layers below j are extended elsewhere in the walk, but their
        // children still decide maximality here.
        for l in 0..j {
            if k[l] + 1 > ub[l] {
                continue;
            }
            if !peel_to_vector(g, &k.child(l), s).is_empty() {
                all_empty = false;
                break;
            }
        }
    }
    if all_empty {
        found.push(MultilayerCore {
            vector: k.clone(),
            members: s.clone(),
        });
    }
}

/// Dominance filter over an explicit core list; quadratic, kept as the
/// plainly-correct counterpart of `maximal_cores`.
pub fn filter_maximal(cores: &[MultilayerCore]) -> Vec<MultilayerCore> {
    cores
        .iter()
        .filter(|a| {
            !cores
                .iter()
                .any(|b| b.vector != a.vector && b.vector.dominates(&a.vector))
        })
        .cloned()
        .collect()
}

/// Collapses cores sharing one member set to the maximal vectors generating
/// that set, preserving input order. A set with incomparable maximal
/// generators keeps one record per generator.
pub fn collapse_distinct_sets(cores: &[MultilayerCore]) -> Vec<MultilayerCore> {
    let mut groups: HashMap<&[VertexId], Vec<&CorenessVector>> = HashMap::new();
    for core in cores {
        groups
            .entry(core.members.as_slice())
            .or_default()
            .push(&core.vector);
    }
    cores
        .iter()
        .filter(|core| {
            !groups[core.members.as_slice()]
                .iter()
                .any(|v| **v != core.vector && v.dominates(&core.vector))
        })
        .cloned()
        .collect()
}
