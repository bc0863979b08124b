//! Span-cores of temporal graphs.
//!
//! A span-core (k, [ts, te]) is the k-core of the graph whose edges are
//! present at every timestamp of the interval. Intersections only lose edges
//! as intervals widen, so cores are monotone in both k and span — the
//! containment everything here exploits and the dominance notion behind
//! maximal span-cores.

use std::collections::BTreeMap;
use std::sync::atomic::{AtomicUsize, Ordering};

use crate::error::Error;
use crate::exec;
use crate::model::{IntersectionGraph, TemporalGraph, VertexSet};
use crate::peel::{core_decomposition, peel_in_view};

/// Contiguous timestamp interval, inclusive on both ends.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Span {
    pub ts: u64,
    pub te: u64,
}

impl Span {
    pub fn new(ts: u64, te: u64) -> Self {
        debug_assert!(ts <= te);
        Span { ts, te }
    }

    pub fn len(&self) -> u64 {
        self.te - self.ts + 1
    }

    pub fn is_empty(&self) -> bool {
        false // ts <= te always; a span covers at least one timestamp
    }
}

/// A non-empty k-core over an interval. Orders k >= 1; the 0-core is the
/// whole vertex set on every interval and is never emitted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpanCore {
    pub k: u32,
    pub span: Span,
    pub members: VertexSet,
}

/// All non-empty span-cores, sorted by (ts, te, k).
///
/// One sweep per start ts, with te ascending: the interval graph shrinks by
/// one snapshot intersection per step, and each (k, [ts, te]) peel starts
/// from C(k, [ts, te-1]) ∩ C(k-1, [ts, te]) instead of the whole vertex set.
/// A sweep stops at the first edgeless intersection. Errors with
/// `CapExceeded` once more than `cap` records accumulate.
pub fn span_cores_all(g: &TemporalGraph, cap: usize) -> Result<Vec<SpanCore>, Error> {
    if g.timestamp_count() == 0 {
        return Ok(Vec::new());
    }
    let emitted = AtomicUsize::new(0);
    let starts: Vec<u64> = g.timestamps().collect();
    let per_start = exec::map_ordered(starts, |ts| sweep_from(g, ts, cap, &emitted));
    let mut out = Vec::new();
    for sweep in per_start {
        out.extend(sweep?);
    }
    Ok(out)
}

/// The te-ascending sweep for one start; records come out in (te, k) order.
fn sweep_from(
    g: &TemporalGraph,
    ts: u64,
    cap: usize,
    emitted: &AtomicUsize,
) -> Result<Vec<SpanCore>, Error> {
    let mut out = Vec::new();
    let mut inter = IntersectionGraph::from_snapshot(g, ts);
    if inter.edge_count() == 0 {
        return Ok(out);
    }
    // First interval [ts, ts]: a plain core decomposition seeds the sweep.
    let ci = core_decomposition(&inter);
    let mut prev: Vec<VertexSet> = (1..=ci.k_star).map(|k| ci.core_set(k)).collect();
    for (i, members) in prev.iter().enumerate() {
        push_record(&mut out, emitted, cap, i as u32 + 1, ts, ts, members)?;
    }
    for te in ts + 1..=g.t_max() {
        inter.intersect_snapshot(g, te);
        if inter.edge_count() == 0 {
            break;
        }
        let mut cur: Vec<VertexSet> = Vec::with_capacity(prev.len());
        for (i, wider) in prev.iter().enumerate() {
            // C(k,[ts,te]) lies inside both C(k,[ts,te-1]) and C(k-1,[ts,te])
            let seed = match cur.last() {
                None => wider.clone(),
                Some(shallower) => wider.intersect(shallower),
            };
            if seed.is_empty() {
                break;
            }
            let k = i as u32 + 1;
            let core = peel_in_view(&inter, k, &seed);
            if core.is_empty() {
                break;
            }
            push_record(&mut out, emitted, cap, k, ts, te, &core)?;
            cur.push(core);
        }
        if cur.is_empty() {
            break;
        }
        prev = cur;
    }
    Ok(out)
}

fn push_record(
    out: &mut Vec<SpanCore>,
    emitted: &AtomicUsize,
    cap: usize,
    k: u32,
    ts: u64,
    te: u64,
    members: &VertexSet,
) -> Result<(), Error> {
    if emitted.fetch_add(1, Ordering::Relaxed) >= cap {
        return Err(Error::CapExceeded { cap });
    }
    out.push(SpanCore {
        k,
        span: Span::new(ts, te),
        members: members.clone(),
    });
    Ok(())
}

/// Reference route: every one of the |T|(|T|+1)/2 intervals materializes its
/// intersection graph from scratch and runs a full core decomposition.
/// Identical record list to `span_cores_all`.
pub fn span_cores_naive(g: &TemporalGraph, cap: usize) -> Result<Vec<SpanCore>, Error> {
    if g.timestamp_count() == 0 {
        return Ok(Vec::new());
    }
    let emitted = AtomicUsize::new(0);
    let starts: Vec<u64> = g.timestamps().collect();
    let per_start = exec::map_ordered(starts, |ts| -> Result<Vec<SpanCore>, Error> {
        let mut out = Vec::new();
        for te in ts..=g.t_max() {
            let inter = IntersectionGraph::from_interval(g, ts, te);
            let ci = core_decomposition(&inter);
            for k in 1..=ci.k_star {
                push_record(&mut out, &emitted, cap, k, ts, te, &ci.core_set(k))?;
            }
        }
        Ok(out)
    });
    let mut out = Vec::new();
    for sweep in per_start {
        out.extend(sweep?);
    }
    Ok(out)
}

/// Frontier entry while sweeping starts downward: for one order k, the
/// furthest end reachable from the current start, and the members there.
struct Reach {
    te: u64,
    members: VertexSet,
}

/// The maximal span-cores: no other non-empty span-core has both order >= k
/// and span ⊇ the span. Sorted by (ts, te, k).
///
/// Starts sweep descending. For each start the per-order furthest ends form
/// a staircase (higher k never reaches further), and each is bounded by the
/// previous start's staircase, so re-peeling explores only fresh ground. A
/// start's candidate (k, [ts, E]) is settled one iteration later, once the
/// next staircase tells whether the span extends left.
pub fn maximal_span_cores(g: &TemporalGraph) -> Vec<SpanCore> {
    let mut found: Vec<SpanCore> = Vec::new();
    if g.timestamp_count() == 0 {
        return found;
    }
    let mut prev: Vec<Reach> = Vec::new(); // staircase of start ts+1, k = index+1
    let mut prev_ts = 0u64;
    for ts in g.timestamps().rev() {
        let cur = staircase_at(g, ts, &prev);
        // Settle the previous start: up_ok means raising k kills the core,
        // left_ok means widening to this start kills it.
        for (i, reach) in prev.iter().enumerate() {
            let e = reach.te;
            let up_ok = i + 1 == prev.len() || prev[i + 1].te < e;
            let left_ok = cur.get(i).map_or(true, |c| c.te < e);
            if up_ok && left_ok {
                found.push(SpanCore {
                    k: i as u32 + 1,
                    span: Span::new(prev_ts, e),
                    members: reach.members.clone(),
                });
            }
        }
        prev = cur;
        prev_ts = ts;
    }
    // The earliest start has no left neighbor; only the order check applies.
    for (i, reach) in prev.iter().enumerate() {
        if i + 1 == prev.len() || prev[i + 1].te < reach.te {
            found.push(SpanCore {
                k: i as u32 + 1,
                span: Span::new(prev_ts, reach.te),
                members: reach.members.clone(),
            });
        }
    }
    found.sort_by_key(|c| (c.span.ts, c.span.te, c.k));
    found
}

/// Furthest reach per order for start `ts`, bounded by the staircase of
/// start ts+1 (an interval only shrinks when it gains a snapshot).
fn staircase_at(g: &TemporalGraph, ts: u64, bound: &[Reach]) -> Vec<Reach> {
    let mut inter = IntersectionGraph::from_snapshot(g, ts);
    if inter.edge_count() == 0 {
        return Vec::new();
    }
    let ci = core_decomposition(&inter);
    let mut cur: Vec<Reach> = (1..=ci.k_star)
        .map(|k| Reach {
            te: ts,
            members: ci.core_set(k),
        })
        .collect();
    let mut active = cur.len(); // orders 1..=active can still extend
    let mut te = ts;
    while active > 0 && te < g.t_max() {
        te += 1;
        // Orders whose bound ends before te are final (bound-less orders,
        // k > |bound|, cannot cross ts at all).
        while active > 0 {
            let limit = bound.get(active - 1).map_or(ts, |r| r.te);
            if limit >= te {
                break;
            }
            active -= 1;
        }
        if active == 0 {
            break;
        }
        inter.intersect_snapshot(g, te);
        if inter.edge_count() == 0 {
            break;
        }
        let mut survived = 0;
        for i in 0..active {
            let seed = if i == 0 {
                cur[0].members.clone()
            } else {
                cur[i].members.intersect(&cur[i - 1].members)
            };
            let core = if seed.is_empty() {
                seed
            } else {
                peel_in_view(&inter, i as u32 + 1, &seed)
            };
            if core.is_empty() {
                break;
            }
            cur[i] = Reach { te, members: core };
            survived = i + 1;
        }
        active = survived;
    }
    cur
}

/// Dominance filter over an explicit record list; the plainly-correct
/// counterpart of `maximal_span_cores`.
pub fn filter_maximal_spans(cores: &[SpanCore]) -> Vec<SpanCore> {
    cores
        .iter()
        .filter(|a| {
            !cores.iter().any(|b| {
                (b.k, b.span) != (a.k, a.span)
                    && b.k >= a.k
                    && b.span.ts <= a.span.ts
                    && b.span.te >= a.span.te
            })
        })
        .cloned()
        .collect()
}

/// Span-length distribution over maximal span-cores.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SpanStats {
    /// span length -> number of maximal span-cores with that span.
    pub histogram: BTreeMap<u64, usize>,
    /// order k -> longest span among maximal span-cores of that order.
    pub max_span_per_k: BTreeMap<u32, u64>,
}

pub fn span_statistics(maximal: &[SpanCore]) -> SpanStats {
    let mut stats = SpanStats::default();
    for core in maximal {
        *stats.histogram.entry(core.span.len()).or_insert(0) += 1;
        let best = stats.max_span_per_k.entry(core.k).or_insert(0);
        *best = (*best).max(core.span.len());
    }
    stats
}
