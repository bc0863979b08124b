//! Two-community polarization in signed graphs.
//!
//! An assignment x ∈ {−1, 0, +1}ⁿ names two camps and a neutral rest; its
//! polarity xᵀAx / xᵀx rewards internal friendship and cross-camp hostility,
//! and the xᵀx denominator (= nonzero count) penalizes size. Maximizing it
//! is NP-hard; both rounding algorithms discretize the leading eigenvector
//! of A, whose eigenvalue λ₁ bounds every assignment's polarity from above.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::Error;
use crate::model::{SignedGraph, VertexId};

pub const DEFAULT_TOL: f64 = 1e-9;

/// Iteration budget that comfortably covers the spectral gaps of desk-scale
/// graphs.
pub fn default_max_iter(n: usize) -> usize {
    10 * n + 1000
}

/// Camp assignment: +1 and −1 are the two communities, 0 is neutral.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Assignment(Vec<i8>);

impl Assignment {
    pub fn new(x: Vec<i8>) -> Self {
        assert!(x.iter().all(|&v| (-1..=1).contains(&v)));
        Assignment(x)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[i8] {
        &self.0
    }

    pub fn nonzero_count(&self) -> usize {
        self.0.iter().filter(|&&v| v != 0).count()
    }

    /// A solution must name at least one vertex.
    pub fn is_valid(&self) -> bool {
        self.0.iter().any(|&v| v != 0)
    }

    /// Flips globally so the first nonzero entry is +1; polarity is
    /// symmetric under the flip, so every algorithm reports this form.
    pub fn canonicalize(&mut self) {
        if let Some(first) = self.0.iter().find(|&&v| v != 0) {
            if *first < 0 {
                for v in &mut self.0 {
                    *v = -*v;
                }
            }
        }
    }

    pub fn members(&self, sign: i8) -> Vec<VertexId> {
        self.0
            .iter()
            .enumerate()
            .filter(|&(_, &v)| v == sign)
            .map(|(u, _)| u as VertexId)
            .collect()
    }
}

/// xᵀAx / xᵀx: twice the signed agreement over edges, per nonzero entry.
pub fn polarity(g: &SignedGraph, x: &Assignment) -> Result<f64, Error> {
    if x.len() != g.vertex_count() {
        return Err(Error::InvalidParameter(format!(
            "assignment length {} does not match vertex count {}",
            x.len(),
            g.vertex_count()
        )));
    }
    let nonzero = x.nonzero_count();
    if nonzero == 0 {
        return Err(Error::AllZeroAssignment);
    }
    let xs = x.as_slice();
    let mut quad = 0i64;
    for &(u, v, s) in g.edges() {
        quad += s as i64 * xs[u as usize] as i64 * xs[v as usize] as i64;
    }
    Ok(2.0 * quad as f64 / nonzero as f64)
}

#[derive(Debug, Clone, PartialEq)]
pub struct SpectralResult {
    /// Largest eigenvalue of the signed adjacency (algebraic, matching the
    /// relaxation's optimum; it upper-bounds every assignment's polarity).
    pub lambda1: f64,
    /// Unit eigenvector for lambda1.
    pub vector: Vec<f64>,
    pub iterations: usize,
    /// ‖Av − λ₁v‖₂ at the accepted iterate.
    pub residual: f64,
    /// Set when the graph has no edges: λ₁ = 0 and the vector is arbitrary.
    pub degenerate: bool,
}

/// Power iteration on A + sI with s = max degree. The shift makes the
/// iteration matrix positive semidefinite, so it converges to the largest
/// algebraic eigenvalue of A with no sign ambiguity. The start vector is a
/// fixed seeded draw from [1, 2)ⁿ: strictly positive, deterministic, and —
/// unlike a uniform start, which is exactly orthogonal to every
/// antisymmetric eigenvector — in general position against the dominant
/// eigenspace.
pub fn leading_eigenvector(
    g: &SignedGraph,
    tol: f64,
    max_iter: usize,
) -> Result<SpectralResult, Error> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(Error::InvalidParameter(
            "spectral analysis needs at least one vertex".to_owned(),
        ));
    }
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(Error::InvalidParameter(format!(
            "tolerance must be positive and finite, got {tol}"
        )));
    }
    let mut start_rng = ChaCha8Rng::seed_from_u64(0x0123_4567_89ab_cdef);
    let mut v: Vec<f64> = (0..n).map(|_| 1.0 + start_rng.gen::<f64>()).collect();
    normalize(&mut v);
    if g.edge_count() == 0 {
        return Ok(SpectralResult {
            lambda1: 0.0,
            vector: v,
            iterations: 0,
            residual: 0.0,
            degenerate: true,
        });
    }
    let shift = (0..n as VertexId).map(|u| g.degree(u)).max().unwrap_or(0) as f64;
    let mut w = vec![0.0f64; n];
    let mut iterations = 0;
    let mut residual = f64::INFINITY;
    while iterations < max_iter {
        iterations += 1;
        // w = (A + shift·I) v, one pass over the adjacency
        for u in 0..n {
            let mut acc = shift * v[u];
            for &(nb, s) in g.signed_neighbors(u as VertexId) {
                acc += s as f64 * v[nb as usize];
            }
            w[u] = acc;
        }
        let lambda_shifted: f64 = v.iter().zip(&w).map(|(a, b)| a * b).sum();
        let w_norm_sq: f64 = w.iter().map(|a| a * a).sum();
        // ‖w − λv‖² = ‖w‖² − λ² when ‖v‖ = 1 and λ = vᵀw
        residual = (w_norm_sq - lambda_shifted * lambda_shifted).max(0.0).sqrt();
        if w_norm_sq == 0.0 {
            break; // start vector sits in the kernel of the shifted matrix
        }
        let inv = w_norm_sq.sqrt().recip();
        for (vu, wu) in v.iter_mut().zip(&w) {
            *vu = wu * inv;
        }
        if residual <= tol {
            return Ok(SpectralResult {
                lambda1: lambda_shifted - shift,
                vector: v,
                iterations,
                residual,
                degenerate: false,
            });
        }
    }
    Err(Error::NotConverged {
        tol,
        iterations,
        residual,
    })
}

fn normalize(v: &mut [f64]) {
    let norm: f64 = v.iter().map(|a| a * a).sum::<f64>().sqrt();
    if norm > 0.0 {
        for a in v {
            *a /= norm;
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PolarityAlgorithm {
    Deterministic,
    Randomized,
    BruteForce,
}

impl PolarityAlgorithm {
    pub fn tag(&self) -> &'static str {
        match self {
            PolarityAlgorithm::Deterministic => "deterministic",
            PolarityAlgorithm::Randomized => "randomized",
            PolarityAlgorithm::BruteForce => "brute-force",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PolarizedPartition {
    pub assignment: Assignment,
    pub polarity: f64,
    pub algorithm: PolarityAlgorithm,
    /// Approximation factor the algorithm is certified for: OPT divided by
    /// this is a lower bound on `polarity`. n, √n, or 1 for brute force.
    pub guarantee: f64,
}

/// The one candidate every rounding falls back on: a single edge scores
/// exactly 1.0 (agree with a friend or disagree with a foe), which already
/// beats OPT/n since no assignment scores above n−1.
fn single_edge_assignment(g: &SignedGraph) -> Option<(Assignment, f64)> {
    let &(u, v, s) = g.edges().first()?;
    let mut x = vec![0i8; g.vertex_count()];
    x[u as usize] = 1;
    x[v as usize] = s;
    Some((Assignment::new(x), 1.0))
}

fn finish(
    g: &SignedGraph,
    mut assignment: Assignment,
    algorithm: PolarityAlgorithm,
    guarantee: f64,
) -> Result<PolarizedPartition, Error> {
    assignment.canonicalize();
    let polarity = polarity(g, &assignment)?;
    Ok(PolarizedPartition {
        assignment,
        polarity,
        algorithm,
        guarantee,
    })
}

/// Prefix-sweep rounding of the leading eigenvector: vertices in |v_u|
/// descending order, each prefix signed by v, best prefix wins, with the
/// single-edge candidate as floor. Equal scores keep the smaller prefix.
pub fn round_deterministic(
    g: &SignedGraph,
    spectral: &SpectralResult,
) -> Result<PolarizedPartition, Error> {
    let n = g.vertex_count();
    let (mut best, mut best_score) = single_edge_assignment(g).ok_or(Error::NoSolution)?;
    let mut order: Vec<VertexId> = (0..n as VertexId).collect();
    order.sort_by(|&a, &b| {
        spectral.vector[b as usize]
            .abs()
            .partial_cmp(&spectral.vector[a as usize].abs())
            .expect("eigenvector entries are finite")
            .then(a.cmp(&b))
    });
    let mut x = vec![0i8; n];
    let mut quad = 0i64; // xᵀAx / 2 restricted to the current prefix
    for (p, &u) in order.iter().enumerate() {
        let vu = spectral.vector[u as usize];
        if vu == 0.0 {
            break; // remaining prefixes only repeat earlier assignments
        }
        let su: i8 = if vu > 0.0 { 1 } else { -1 };
        for &(nb, s) in g.signed_neighbors(u) {
            quad += s as i64 * su as i64 * x[nb as usize] as i64;
        }
        x[u as usize] = su;
        let score = 2.0 * quad as f64 / (p + 1) as f64;
        if score > best_score {
            best_score = score;
            best = Assignment::new(x.clone());
        }
    }
    finish(g, best, PolarityAlgorithm::Deterministic, n as f64)
}

/// Randomized rounding: each trial keeps vertex u with probability
/// min(1, |v_u|·√n/‖v‖∞), signed by v. Best of `trials` wins; earlier
/// trials win ties; the single-edge candidate is the floor. Trial t draws
/// from a generator seeded with seed + t, so any trial count is
/// reproducible.
pub fn round_randomized(
    g: &SignedGraph,
    spectral: &SpectralResult,
    trials: usize,
    seed: u64,
) -> Result<PolarizedPartition, Error> {
    if trials == 0 {
        return Err(Error::InvalidParameter(
            "at least one randomized trial is required".to_owned(),
        ));
    }
    let n = g.vertex_count();
    let (mut best, mut best_score) = single_edge_assignment(g).ok_or(Error::NoSolution)?;
    let max_abs = spectral
        .vector
        .iter()
        .fold(0.0f64, |acc, &a| acc.max(a.abs()));
    if max_abs > 0.0 {
        let scale = (n as f64).sqrt() / max_abs;
        for t in 0..trials {
            let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(t as u64));
            let mut x = vec![0i8; n];
            let mut any = false;
            for (u, &vu) in spectral.vector.iter().enumerate() {
                let p = (vu.abs() * scale).min(1.0);
                if rng.gen::<f64>() < p {
                    x[u] = if vu > 0.0 { 1 } else { -1 };
                    any = true;
                }
            }
            if !any {
                continue;
            }
            let x = Assignment::new(x);
            let score = polarity(g, &x)?;
            if score > best_score {
                best_score = score;
                best = x;
            }
        }
    }
    finish(g, best, PolarityAlgorithm::Randomized, (n as f64).sqrt())
}

/// Exhaustive optimum over all 3ⁿ assignments, global sign fixed up front.
/// The earliest optimum in counting order wins ties.
pub fn brute_force_polarity(g: &SignedGraph) -> Result<PolarizedPartition, Error> {
    const GUARD: usize = 12;
    let n = g.vertex_count();
    if n > GUARD {
        return Err(Error::GuardExceeded {
            what: "brute-force polarity",
            limit: GUARD,
            unit: "vertices",
            actual: n,
        });
    }
    if n == 0 {
        return Err(Error::InvalidParameter(
            "brute force needs at least one vertex".to_owned(),
        ));
    }
    let mut best: Option<(Assignment, f64)> = None;
    let mut x = vec![0i8; n];
    let total = 3usize.pow(n as u32);
    'outer: for code in 1..total {
        let mut c = code;
        for xi in x.iter_mut() {
            *xi = match c % 3 {
                0 => 0,
                1 => 1,
                _ => -1,
            };
            c /= 3;
        }
        // canonical representative only: first nonzero entry positive
        match x.iter().find(|&&v| v != 0) {
            Some(&first) if first > 0 => {}
            _ => continue 'outer,
        }
        let mut quad = 0i64;
        for &(u, v, s) in g.edges() {
            quad += s as i64 * x[u as usize] as i64 * x[v as usize] as i64;
        }
        let score = 2.0 * quad as f64 / x.iter().filter(|&&v| v != 0).count() as f64;
        if best.as_ref().map_or(true, |(_, b)| score > *b) {
            best = Some((Assignment::new(x.clone()), score));
        }
    }
    let (assignment, _) = best.expect("n >= 1 admits a single-vertex assignment");
    finish(g, assignment, PolarityAlgorithm::BruteForce, 1.0)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlantedParams {
    pub n: usize,
    pub size1: usize,
    pub size2: usize,
    /// Probability of a positive edge inside either planted camp.
    pub p_in: f64,
    /// Probability of a negative edge between the camps.
    pub p_out: f64,
    /// Probability of a random-sign edge on any pair touching a neutral
    /// vertex.
    pub noise: f64,
    pub seed: u64,
}

impl PlantedParams {
    pub fn validate(&self) -> Result<(), Error> {
        if self.size1 + self.size2 > self.n {
            return Err(Error::InvalidParameter(format!(
                "planted sizes {}+{} exceed n={}",
                self.size1, self.size2, self.n
            )));
        }
        for (name, p) in [("p-in", self.p_in), ("p-out", self.p_out), ("noise", self.noise)] {
            if !((0.0..=1.0).contains(&p) && p.is_finite()) {
                return Err(Error::InvalidParameter(format!(
                    "{name} must lie in [0, 1], got {p}"
                )));
            }
        }
        Ok(())
    }
}

/// Two planted camps: positive edges inside each camp, negative edges
/// across, sparse random-sign noise on pairs touching the neutral rest.
/// Returns the graph and the ground-truth assignment (+1 camp, −1 camp,
/// 0 neutral). With size1 = size2 = 0 the truth is all-zero — invalid as a
/// solution, callers check `is_valid`.
pub fn generate_planted(params: &PlantedParams) -> Result<(SignedGraph, Assignment), Error> {
    params.validate()?;
    let PlantedParams {
        n,
        size1,
        size2,
        p_in,
        p_out,
        noise,
        seed,
    } = *params;
    let mut truth = vec![0i8; n];
    truth[..size1].fill(1);
    truth[size1..size1 + size2].fill(-1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            let (tu, tv) = (truth[u], truth[v]);
            if tu != 0 && tv != 0 {
                if tu == tv {
                    if rng.gen::<f64>() < p_in {
                        edges.push((u as VertexId, v as VertexId, 1i8));
                    }
                } else if rng.gen::<f64>() < p_out {
                    edges.push((u as VertexId, v as VertexId, -1i8));
                }
            } else if rng.gen::<f64>() < noise {
                let sign = if rng.gen::<bool>() { 1i8 } else { -1i8 };
                edges.push((u as VertexId, v as VertexId, sign));
            }
        }
    }
    let graph = SignedGraph::from_indexed(n, &edges);
    Ok((graph, Assignment::new(truth)))
}
