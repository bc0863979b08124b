//! Cross-module invariants checked against independent oracles: an
//! iterative-deletion peeler, subset brute forces, and a dense Jacobi
//! eigensolver. Each optimized routine in the library has a slower
//! counterpart here that knows nothing about its shortcuts.

use std::collections::BTreeMap;

use proptest::prelude::*;

use coremine::apps::{
    community_search, densest_subgraph, multilayer_density, quasi_clique_enumerate,
    quasi_clique_prune, CommunityQuery, QuasiCliqueParams,
};
use coremine::multilayer::{
    decompose_all, decompose_naive, filter_maximal, maximal_cores, DEFAULT_CORE_CAP,
};
use coremine::signed::{
    brute_force_polarity, default_max_iter, leading_eigenvector, polarity, round_deterministic,
    round_randomized, Assignment, DEFAULT_TOL,
};
use coremine::synth::{random_multilayer, random_signed, random_temporal};
use coremine::temporal::{
    filter_maximal_spans, maximal_span_cores, span_cores_all, span_cores_naive,
};
use coremine::{
    core_decomposition, parse_multilayer, parse_signed, parse_temporal, peel_interval, GraphView,
    MultilayerGraph, SignedGraph, VertexId, VertexSet,
};

/// Fixed-point deletion: drop vertices of insufficient degree until stable.
/// The textbook definition of the k-core, with none of the library's
/// bucketing or restart tricks.
fn kcore_by_deletion<V: GraphView>(view: &V, k: u32) -> Vec<VertexId> {
    let n = view.vertex_count();
    let mut alive = vec![true; n];
    loop {
        let mut changed = false;
        for u in 0..n {
            if !alive[u] {
                continue;
            }
            let deg = view
                .neighbors(u as VertexId)
                .iter()
                .filter(|&&v| alive[v as usize])
                .count();
            if (deg as u32) < k {
                alive[u] = false;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    (0..n as VertexId).filter(|&u| alive[u as usize]).collect()
}

#[test]
fn core_decomposition_matches_iterative_deletion() {
    for seed in 0..12 {
        let p = 0.1 + 0.05 * (seed % 5) as f64;
        let g = random_multilayer(24, 1, p, seed);
        let view = g.layer_view(0);
        let idx = core_decomposition(&view);
        for k in 0..=idx.k_star + 1 {
            assert_eq!(
                idx.core_set(k).as_slice(),
                kcore_by_deletion(&view, k),
                "k={k} seed={seed}"
            );
        }
    }
}

/// Endpoint order within a line tracks internal ids, which re-interning may
/// permute; the label-level edge identity is what must survive a round trip.
fn canonical_edges(text: &str) -> Vec<(String, String, String)> {
    let mut edges: Vec<(String, String, String)> = text
        .lines()
        .map(|line| {
            let f: Vec<&str> = line.split_whitespace().collect();
            let (a, b) = if f[0] <= f[1] { (f[0], f[1]) } else { (f[1], f[0]) };
            (a.to_owned(), b.to_owned(), f[2].to_owned())
        })
        .collect();
    edges.sort();
    edges
}

#[test]
fn write_parse_round_trips() {
    for seed in 0..6 {
        let ml = random_multilayer(18, 3, 0.15, seed);
        let w1 = ml.write();
        let w2 = parse_multilayer(&w1).unwrap().write();
        assert_eq!(canonical_edges(&w1), canonical_edges(&w2));

        let tg = random_temporal(15, 5, 0.2, seed);
        let w1 = tg.write();
        let w2 = parse_temporal(&w1).unwrap().write();
        assert_eq!(canonical_edges(&w1), canonical_edges(&w2));

        let sg = random_signed(15, 0.3, seed);
        let w1 = sg.write();
        let w2 = parse_signed(&w1).unwrap().write();
        assert_eq!(canonical_edges(&w1), canonical_edges(&w2));
    }
}

#[test]
fn multilayer_routes_agree_on_random_instances() {
    for seed in 0..10 {
        let g = random_multilayer(14, 2 + (seed % 2) as usize, 0.15 + 0.1 * (seed % 3) as f64, seed);
        let all = decompose_all(&g, DEFAULT_CORE_CAP).unwrap();
        let naive = decompose_naive(&g, DEFAULT_CORE_CAP).unwrap();
        assert_eq!(all, naive, "seed={seed}");
        assert_eq!(maximal_cores(&g), filter_maximal(&all), "seed={seed}");
    }
}

#[test]
fn maximal_cores_are_a_vanishing_fraction() {
    let g = random_multilayer(40, 3, 0.25, 17);
    let all = decompose_all(&g, DEFAULT_CORE_CAP).unwrap();
    let maximal = maximal_cores(&g);
    let ratio = maximal.len() as f64 / all.len() as f64;
    println!("maximal/all core ratio: {}/{} = {ratio:.4}", maximal.len(), all.len());
    assert!(!maximal.is_empty());
    assert!(ratio < 1.0);
}

/// Brute-force layer-subset maximum of (min density over the subset)·|L̂|^β.
fn density_by_subsets(g: &MultilayerGraph, s: &VertexSet, beta: f64) -> f64 {
    let lc = g.layer_count();
    let per_layer: Vec<f64> = (0..lc)
        .map(|l| {
            let view = g.layer_view(l);
            let inside = s
                .iter()
                .map(|&u| {
                    view.neighbors(u)
                        .iter()
                        .filter(|&&v| s.contains(v))
                        .count()
                })
                .sum::<usize>() as f64
                / 2.0;
            inside / s.len() as f64
        })
        .collect();
    let mut best = f64::NEG_INFINITY;
    for mask in 1u32..(1 << lc) {
        let min = (0..lc)
            .filter(|l| mask >> l & 1 == 1)
            .map(|l| per_layer[l])
            .fold(f64::INFINITY, f64::min);
        best = best.max(min * (mask.count_ones() as f64).powf(beta));
    }
    best
}

#[test]
fn density_prefix_scan_matches_subset_brute_force() {
    for seed in 0..8 {
        let layers = 2 + (seed % 3) as usize;
        let g = random_multilayer(12, layers, 0.3, seed);
        let mut members: Vec<VertexId> = (0..12).collect();
        members.retain(|&u| u % (2 + seed % 3) as u32 != 1);
        let s = VertexSet::from_sorted(members);
        for beta in [0.0, 0.5, 1.0, 2.0] {
            let (delta, support) = multilayer_density(&g, &s, beta).unwrap();
            let brute = density_by_subsets(&g, &s, beta);
            assert!((delta - brute).abs() < 1e-12, "seed={seed} beta={beta}");
            assert!(!support.is_empty());
        }
    }
}

#[test]
fn density_support_never_shrinks_as_beta_grows() {
    for seed in 0..8 {
        let g = random_multilayer(12, 4, 0.3, 100 + seed);
        let s = VertexSet::full(12);
        let mut last = 0;
        for beta in [0.0, 0.25, 0.5, 1.0, 1.5, 2.0, 3.0] {
            let (_, support) = multilayer_density(&g, &s, beta).unwrap();
            assert!(support.len() >= last, "seed={seed} beta={beta}");
            last = support.len();
        }
    }
}

#[test]
fn enumerated_quasi_cliques_stay_inside_the_pruned_set() {
    for seed in 0..6 {
        let g = random_multilayer(12, 3, 0.35, 200 + seed);
        let everyone = VertexSet::full(12);
        for gamma in [0.6, 0.8, 1.0] {
            for min_size in [3u32, 4] {
                for min_sup in [0.5, 1.0] {
                    let params = QuasiCliqueParams { gamma, min_size, min_sup };
                    let pruned = quasi_clique_prune(&g, &params).unwrap();
                    let found = quasi_clique_enumerate(&g, &params, &everyone).unwrap();
                    for s in &found {
                        assert!(
                            s.is_subset_of(&pruned),
                            "seed={seed} gamma={gamma} m={min_size} sup={min_sup}"
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn densest_subgraph_recomputes_its_own_delta() {
    for seed in 0..6 {
        let g = random_multilayer(14, 3, 0.25, 300 + seed);
        if g.total_edge_count() == 0 {
            continue;
        }
        for beta in [0.0, 1.0, 2.0] {
            let res = densest_subgraph(&g, beta, DEFAULT_CORE_CAP).unwrap();
            let (delta, support) = multilayer_density(&g, &res.vertices, beta).unwrap();
            assert_eq!(res.delta, delta);
            assert_eq!(res.support_layers, support);
            assert!((res.guarantee - 1.0 / (2.0 * (g.layer_count() as f64).powf(beta))).abs() < 1e-15);
        }
    }
}

#[test]
fn community_contains_its_query_and_own_mu() {
    for seed in 0..6 {
        let g = random_multilayer(14, 2, 0.3, 400 + seed);
        for q in 0..3u32 {
            let query = CommunityQuery {
                query: VertexSet::from_sorted(vec![q]),
                beta: 1.0,
            };
            match community_search(&g, &query, DEFAULT_CORE_CAP) {
                Ok(res) => {
                    assert!(res.vertices.contains(q));
                    assert!(res.mu >= 0.0);
                }
                Err(coremine::Error::NoCommunity) => {}
                Err(e) => panic!("unexpected error: {e}"),
            }
        }
    }
}

#[test]
fn span_routes_agree_on_random_instances() {
    for seed in 0..10 {
        let g = random_temporal(14, 6, 0.25 + 0.05 * (seed % 3) as f64, seed);
        let all = span_cores_all(&g, usize::MAX).unwrap();
        let naive = span_cores_naive(&g, usize::MAX).unwrap();
        assert_eq!(all, naive, "seed={seed}");
        assert_eq!(maximal_span_cores(&g), filter_maximal_spans(&all), "seed={seed}");
    }
}

#[test]
fn span_cores_nest_along_both_axes() {
    let g = random_temporal(16, 6, 0.3, 99);
    let all = span_cores_all(&g, usize::MAX).unwrap();
    let by_key: BTreeMap<(u32, u64, u64), &VertexSet> = all
        .iter()
        .map(|c| ((c.k, c.span.ts, c.span.te), &c.members))
        .collect();
    for c in &all {
        // higher order, same span
        if c.k > 1 {
            if let Some(shallower) = by_key.get(&(c.k - 1, c.span.ts, c.span.te)) {
                assert!(c.members.is_subset_of(shallower));
            } else {
                panic!("missing ancestor of {:?}", (c.k, c.span.ts, c.span.te));
            }
        }
        // same order, narrower span
        if c.span.te > c.span.ts {
            if let Some(narrower) = by_key.get(&(c.k, c.span.ts, c.span.te - 1)) {
                assert!(c.members.is_subset_of(narrower));
            } else {
                panic!("missing narrower span of {:?}", (c.k, c.span.ts, c.span.te));
            }
        }
    }
}

#[test]
fn maximal_span_cores_cannot_extend_one_step() {
    let g = random_temporal(16, 7, 0.3, 77);
    let everyone = VertexSet::full(16);
    for c in maximal_span_cores(&g) {
        let (ts, te) = (c.span.ts, c.span.te);
        assert!(
            peel_interval(&g, c.k + 1, ts, te, &everyone).unwrap().is_empty(),
            "order-extendable at {:?}",
            (c.k, ts, te)
        );
        if ts > g.t_min() {
            assert!(
                peel_interval(&g, c.k, ts - 1, te, &everyone).unwrap().is_empty(),
                "left-extendable at {:?}",
                (c.k, ts, te)
            );
        }
        if te < g.t_max() {
            assert!(
                peel_interval(&g, c.k, ts, te + 1, &everyone).unwrap().is_empty(),
                "right-extendable at {:?}",
                (c.k, ts, te)
            );
        }
    }
}

/// Cyclic Jacobi on a dense copy of the signed adjacency — a full-spectrum
/// oracle for the power iteration's single eigenvalue.
fn jacobi_max_eigenvalue(g: &SignedGraph) -> f64 {
    let n = g.vertex_count();
    let mut a = vec![vec![0.0f64; n]; n];
    for &(u, v, s) in g.edges() {
        a[u as usize][v as usize] = s as f64;
        a[v as usize][u as usize] = s as f64;
    }
    for _ in 0..100 {
        let mut off = 0.0;
        for p in 0..n {
            for q in p + 1..n {
                off += a[p][q] * a[p][q];
            }
        }
        if off < 1e-24 {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                if a[p][q].abs() < 1e-15 {
                    continue;
                }
                // rotation angle: tan(2φ) = 2a_pq / (a_pp − a_qq)
                let phi = 0.5 * (2.0 * a[p][q]).atan2(a[p][p] - a[q][q]);
                let (sin, cos) = phi.sin_cos();
                for i in 0..n {
                    let (aip, aiq) = (a[i][p], a[i][q]);
                    a[i][p] = cos * aip + sin * aiq;
                    a[i][q] = -sin * aip + cos * aiq;
                }
                for i in 0..n {
                    let (api, aqi) = (a[p][i], a[q][i]);
                    a[p][i] = cos * api + sin * aqi;
                    a[q][i] = -sin * api + cos * aqi;
                }
            }
        }
    }
    (0..n).map(|i| a[i][i]).fold(f64::NEG_INFINITY, f64::max)
}

#[test]
fn power_iteration_matches_dense_jacobi() {
    for seed in 0..15 {
        let g = random_signed(10, 0.2 + 0.05 * (seed % 4) as f64, 500 + seed);
        if g.edge_count() == 0 {
            continue;
        }
        let spectral = leading_eigenvector(&g, DEFAULT_TOL, default_max_iter(10)).unwrap();
        let dense = jacobi_max_eigenvalue(&g);
        assert!(
            (spectral.lambda1 - dense).abs() < 1e-6,
            "seed={seed}: power {} vs jacobi {dense}",
            spectral.lambda1
        );
    }
}

#[test]
fn optimum_is_bounded_by_lambda1_and_roundings_meet_their_factors() {
    for seed in 0..12 {
        let g = random_signed(8, 0.35, 600 + seed);
        if g.edge_count() == 0 {
            continue;
        }
        let spectral = leading_eigenvector(&g, DEFAULT_TOL, default_max_iter(8)).unwrap();
        let opt = brute_force_polarity(&g).unwrap();
        assert!(opt.polarity <= spectral.lambda1 + 1e-6, "seed={seed}");
        let det = round_deterministic(&g, &spectral).unwrap();
        assert!(det.polarity >= opt.polarity / 8.0 - 1e-9, "seed={seed}");
        let rand = round_randomized(&g, &spectral, 32, 1).unwrap();
        assert!(rand.polarity >= opt.polarity / 8f64.sqrt() - 1e-9, "seed={seed}");
    }
}

#[test]
fn polarity_flips_are_free_and_scaling_is_not_observable() {
    // negating the assignment preserves polarity; scaling the eigenvector
    // cannot change the deterministic rounding (it only reads order + signs)
    let g = random_signed(9, 0.4, 731);
    let spectral = leading_eigenvector(&g, DEFAULT_TOL, default_max_iter(9)).unwrap();
    let det = round_deterministic(&g, &spectral).unwrap();
    let mut scaled = spectral.clone();
    for v in &mut scaled.vector {
        *v *= -7.5;
    }
    let det_scaled = round_deterministic(&g, &scaled).unwrap();
    assert_eq!(det.polarity, det_scaled.polarity);
    assert_eq!(det.assignment, det_scaled.assignment);
}

// ---- generative checks ----------------------------------------------------

fn arb_multilayer() -> impl Strategy<Value = MultilayerGraph> {
    (2usize..=9, 1usize..=3).prop_flat_map(|(n, layers)| {
        proptest::collection::vec(
            ((0..n as VertexId), (0..n as VertexId), 0..layers),
            0..=28,
        )
        .prop_map(move |mut edges| {
            edges.retain(|e| e.0 != e.1);
            MultilayerGraph::from_indexed(n, layers, &edges)
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn intersection_laws(
        mut a in proptest::collection::vec(0u32..40, 0..25),
        mut b in proptest::collection::vec(0u32..40, 0..25),
    ) {
        a.dedup();
        b.dedup();
        let sa = VertexSet::from_unsorted(a);
        let sb = VertexSet::from_unsorted(b);
        let i = sa.intersect(&sb);
        prop_assert!(i.is_subset_of(&sa));
        prop_assert!(i.is_subset_of(&sb));
        prop_assert_eq!(&i, &sb.intersect(&sa));
        prop_assert_eq!(&sa.intersect(&sa), &sa);
        for &v in &i {
            prop_assert!(sa.contains(v) && sb.contains(v));
        }
    }

    #[test]
    fn parsers_never_panic(text in ".{0,200}") {
        let _ = parse_multilayer(&text);
        let _ = parse_temporal(&text);
        let _ = parse_signed(&text);
    }

    #[test]
    fn optimized_decomposition_equals_naive(g in arb_multilayer()) {
        let all = decompose_all(&g, DEFAULT_CORE_CAP).unwrap();
        let naive = decompose_naive(&g, DEFAULT_CORE_CAP).unwrap();
        prop_assert_eq!(&all, &naive);
        prop_assert_eq!(maximal_cores(&g), filter_maximal(&all));
    }

    #[test]
    fn cores_nest_within_a_layer(g in arb_multilayer()) {
        let view = g.layer_view(0);
        let idx = core_decomposition(&view);
        for k in 1..=idx.k_star {
            prop_assert!(idx.core_set(k).is_subset_of(&idx.core_set(k - 1)));
        }
    }

    #[test]
    fn assignment_negation_preserves_polarity(
        edges in proptest::collection::vec(((0u32..8), (0u32..8)), 1..16),
        signs in proptest::collection::vec(prop_oneof![Just(1i8), Just(-1i8)], 16),
        xs in proptest::collection::vec(-1i8..=1, 8),
    ) {
        let mut seen = std::collections::BTreeSet::new();
        let list: Vec<(VertexId, VertexId, i8)> = edges
            .iter()
            .zip(&signs)
            .filter(|((u, v), _)| u != v)
            .filter(|((u, v), _)| seen.insert((*u.min(v), *u.max(v))))
            .map(|((u, v), &s)| (*u, *v, s))
            .collect();
        prop_assume!(!list.is_empty());
        let g = SignedGraph::from_indexed(8, &list);
        let x = Assignment::new(xs.clone());
        let neg = Assignment::new(xs.iter().map(|&v| -v).collect());
        if x.is_valid() {
            prop_assert_eq!(polarity(&g, &x).unwrap(), polarity(&g, &neg).unwrap());
        }
    }
}
