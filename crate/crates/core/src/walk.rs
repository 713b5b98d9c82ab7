//! Random walks on graph vertices and on the edges of a complex.
//!
//! Both engines use the same neighbor rule: a SplitMix64 output `x` picks
//! index `(x * len) >> 64` (128-bit product) of the sorted neighbor list.
//! The walk on the edges of `X` and the vertex walk on `G₁(X)` therefore
//! produce the same path for the same seed.

use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;
use rayon::prelude::*;
use serde::Serialize;

use crate::complex::Complex2;
use crate::error::{HdxError, Result};
use crate::expansion::{alpha_bound, ExpansionCertificate};
use crate::spectral::{edge_graph, normalized_spectrum, underlying_graph, Graph, Tolerances};
use crate::verdict::Verdict;

/// Slack added to every bound comparison on distances.
pub const BOUND_SLACK: f64 = 1e-9;
const SUM_TOLERANCE: f64 = 1e-12;

/// A probability vector over the vertices of a graph.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(transparent)]
pub struct Distribution {
    probabilities: Vec<f64>,
}

impl Distribution {
    /// Entries must be non-negative and sum to 1 within 1e-12.
    pub fn new(probabilities: Vec<f64>) -> Result<Self> {
        if probabilities.is_empty() {
            return Err(HdxError::Parameter("distribution over no vertices".into()));
        }
        if let Some(p) = probabilities.iter().find(|p| !(**p >= 0.0)) {
            return Err(HdxError::Parameter(format!(
                "probability {p} is negative or NaN"
            )));
        }
        let sum: f64 = probabilities.iter().sum();
        if (sum - 1.0).abs() > SUM_TOLERANCE {
            return Err(HdxError::Parameter(format!(
                "probabilities sum to {sum}, not 1"
            )));
        }
        Ok(Self { probabilities })
    }

    pub fn uniform(n: usize) -> Result<Self> {
        Self::new(vec![1.0 / n as f64; n])
    }

    pub fn point_mass(n: usize, v: usize) -> Result<Self> {
        if v >= n {
            return Err(HdxError::IndexOutOfRange {
                what: "vertex",
                index: v,
                size: n,
            });
        }
        let mut p = vec![0.0; n];
        p[v] = 1.0;
        Ok(Self { probabilities: p })
    }

    pub fn probabilities(&self) -> &[f64] {
        &self.probabilities
    }

    pub fn len(&self) -> usize {
        self.probabilities.len()
    }

    pub fn is_empty(&self) -> bool {
        self.probabilities.is_empty()
    }

    /// ‖p − u‖₂ with `u` uniform.
    pub fn distance_to_uniform(&self) -> f64 {
        let u = 1.0 / self.len() as f64;
        self.probabilities
            .iter()
            .map(|p| (p - u) * (p - u))
            .sum::<f64>()
            .sqrt()
    }

    pub fn total_variation(&self, other: &Distribution) -> Result<f64> {
        if self.len() != other.len() {
            return Err(HdxError::DimensionMismatch(self.len(), other.len()));
        }
        let l1: f64 = self
            .probabilities
            .iter()
            .zip(&other.probabilities)
            .map(|(a, b)| (a - b).abs())
            .sum();
        Ok(l1 / 2.0)
    }
}

/// Distributions p₀…p_T, their distances to uniform and, when a rate `α` is
/// given, whether `dᵢ ≤ αⁱ + 1e-9`.
#[derive(Debug, Clone, Serialize)]
pub struct WalkTrace {
    pub distributions: Vec<Distribution>,
    pub distances: Vec<f64>,
    pub alpha: Option<f64>,
    /// Empty when no `alpha` is given.
    pub bound_satisfied: Vec<bool>,
}

impl WalkTrace {
    fn from_distributions(distributions: Vec<Distribution>, alpha: Option<f64>) -> Self {
        let distances: Vec<f64> = distributions
            .iter()
            .map(Distribution::distance_to_uniform)
            .collect();
        let bound_satisfied = match alpha {
            Some(a) => distances
                .iter()
                .enumerate()
                .map(|(i, d)| *d <= alpha_power(a, i) + BOUND_SLACK)
                .collect(),
            None => Vec::new(),
        };
        Self {
            distributions,
            distances,
            alpha,
            bound_satisfied,
        }
    }

    pub fn steps(&self) -> usize {
        self.distributions.len() - 1
    }

    /// True when `alpha` is set and every step meets the bound.
    pub fn within_bound(&self) -> bool {
        self.alpha.is_some() && self.bound_satisfied.iter().all(|&b| b)
    }
}

pub fn alpha_power(alpha: f64, i: usize) -> f64 {
    alpha.powi(i32::try_from(i).unwrap_or(i32::MAX))
}

fn require_walkable(g: &Graph) -> Result<usize> {
    if let Some(v) = (0..g.n()).find(|&v| g.degree(v) == 0) {
        return Err(HdxError::UndefinedTransition(format!(
            "vertex {v} has no neighbors"
        )));
    }
    g.require_regular()
}

/// One step `p ↦ Mp` with `M(u, v) = 1/k` for neighbors.
pub fn step_distribution(g: &Graph, p: &Distribution) -> Result<Distribution> {
    if p.len() != g.n() {
        return Err(HdxError::DimensionMismatch(g.n(), p.len()));
    }
    let k = require_walkable(g)?;
    Ok(apply_transition(g, k, p))
}

fn apply_transition(g: &Graph, k: usize, p: &Distribution) -> Distribution {
    let scale = 1.0 / k as f64;
    let probabilities = (0..g.n())
        .map(|v| {
            g.neighbors(v)
                .iter()
                .map(|&u| p.probabilities[u])
                .sum::<f64>()
                * scale
        })
        .collect();
    Distribution { probabilities }
}

/// Exact evolution of `p0` for `steps` steps of the uniform-neighbor walk.
pub fn evolve_exact(
    g: &Graph,
    p0: &Distribution,
    steps: usize,
    alpha: Option<f64>,
) -> Result<WalkTrace> {
    if p0.len() != g.n() {
        return Err(HdxError::DimensionMismatch(g.n(), p0.len()));
    }
    let k = require_walkable(g)?;
    let mut distributions = Vec::with_capacity(steps + 1);
    distributions.push(p0.clone());
    for i in 0..steps {
        let next = apply_transition(g, k, &distributions[i]);
        distributions.push(next);
    }
    Ok(WalkTrace::from_distributions(distributions, alpha))
}

/// Edges sharing a triangle with `e`, sorted by index.
pub fn high_order_neighbors(x: &Complex2, e: usize) -> Vec<usize> {
    let mut neighbors: Vec<usize> = x
        .edge_triangles(e)
        .iter()
        .flat_map(|&t| x.triangle_edges(t))
        .filter(|&f| f != e)
        .collect();
    neighbors.sort_unstable();
    neighbors.dedup();
    neighbors
}

fn pick(rng: &mut SplitMix64, len: usize) -> usize {
    ((u128::from(rng.next_u64()) * len as u128) >> 64) as usize
}

/// Vertex path `v₀ … v_steps` of the uniform-neighbor walk on `g`.
pub fn simulate(g: &Graph, v0: usize, steps: usize, seed: u64) -> Result<Vec<usize>> {
    if v0 >= g.n() {
        return Err(HdxError::IndexOutOfRange {
            what: "vertex",
            index: v0,
            size: g.n(),
        });
    }
    let mut rng = SplitMix64::seed_from_u64(seed);
    let mut path = Vec::with_capacity(steps + 1);
    path.push(v0);
    let mut v = v0;
    for _ in 0..steps {
        let neighbors = g.neighbors(v);
        if neighbors.is_empty() {
            return Err(HdxError::UndefinedTransition(format!(
                "vertex {v} has no neighbors"
            )));
        }
        v = neighbors[pick(&mut rng, neighbors.len())];
        path.push(v);
    }
    Ok(path)
}

/// Edge path `e₀ … e_steps` of the high-order walk on `x`.
pub fn high_order_simulate(x: &Complex2, e0: usize, steps: usize, seed: u64) -> Result<Vec<usize>> {
    if e0 >= x.num_edges() {
        return Err(HdxError::IndexOutOfRange {
            what: "edge",
            index: e0,
            size: x.num_edges(),
        });
    }
    let mut rng = SplitMix64::seed_from_u64(seed);
    let mut path = Vec::with_capacity(steps + 1);
    path.push(e0);
    let mut e = e0;
    for _ in 0..steps {
        let neighbors = high_order_neighbors(x, e);
        if neighbors.is_empty() {
            let [a, b] = x.edge(e);
            return Err(HdxError::UndefinedTransition(format!(
                "edge {e} = {{{a}, {b}}} lies in no triangle"
            )));
        }
        e = neighbors[pick(&mut rng, neighbors.len())];
        path.push(e);
    }
    Ok(path)
}

/// Seed of path `index` in an ensemble: the first SplitMix64 output for
/// state `seed ^ s`, where `s` is the first output for state `index`.
pub fn path_seed(seed: u64, index: u64) -> u64 {
    let salt = SplitMix64::seed_from_u64(index).next_u64();
    SplitMix64::seed_from_u64(seed ^ salt).next_u64()
}

/// Empirical distributions of `paths` independent high-order walks from
/// `e0`; step `i` of the trace holds the visit frequencies at time `i`.
/// The result does not depend on the thread schedule.
pub fn monte_carlo_trace(
    x: &Complex2,
    e0: usize,
    steps: usize,
    paths: u64,
    seed: u64,
    alpha: Option<f64>,
) -> Result<WalkTrace> {
    if paths == 0 {
        return Err(HdxError::Parameter(
            "ensemble needs at least one path".into(),
        ));
    }
    let m = x.num_edges();
    let width = (steps + 1) * m;
    let counts = (0..paths)
        .into_par_iter()
        .try_fold(
            || vec![0u64; width],
            |mut acc, i| {
                let path = high_order_simulate(x, e0, steps, path_seed(seed, i))?;
                for (t, e) in path.into_iter().enumerate() {
                    acc[t * m + e] += 1;
                }
                Ok::<_, HdxError>(acc)
            },
        )
        .try_reduce(
            || vec![0u64; width],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                Ok(a)
            },
        )?;
    let scale = 1.0 / paths as f64;
    let distributions = counts
        .chunks(m)
        .map(|row| Distribution {
            probabilities: row.iter().map(|&c| c as f64 * scale).collect(),
        })
        .collect();
    Ok(WalkTrace::from_distributions(distributions, alpha))
}

/// Outcome of checking the rapid-mixing bound on the high-order walk.
#[derive(Debug, Clone, Serialize)]
pub struct RapidMixingReport {
    pub steps: usize,
    pub epsilon: Option<f64>,
    /// λ̃₂ of the underlying graph.
    pub lambda2: Option<f64>,
    pub alpha: Option<f64>,
    /// max(|λ̃₂|, |λ̃_n|) of the edge-graph.
    pub edge_graph_lambda: Option<f64>,
    /// Maximum of dᵢ over all point-mass starts.
    pub worst_distances: Vec<f64>,
    /// Start edge attaining each entry of `worst_distances`.
    pub worst_starts: Vec<usize>,
    pub bound_satisfied: Vec<bool>,
    /// Whether dᵢ ≤ λ̃ⁱ·d₀ + 1e-9 for every start.
    pub spectral_decay: Option<bool>,
    pub verdict: Verdict,
    /// Why the hypotheses are not met.
    pub reason: Option<String>,
}

impl RapidMixingReport {
    fn not_applicable(steps: usize, reason: String) -> Self {
        Self {
            steps,
            epsilon: None,
            lambda2: None,
            alpha: None,
            edge_graph_lambda: None,
            worst_distances: Vec::new(),
            worst_starts: Vec::new(),
            bound_satisfied: Vec::new(),
            spectral_decay: None,
            verdict: Verdict::NotApplicable,
            reason: Some(reason),
        }
    }
}

/// Checks `‖pᵢ − u‖₂ ≤ αⁱ` for `α = alpha_bound(ε, λ̃₂(G₀))` on the walk on
/// the edges of `x`, from every point-mass start, for `i ≤ steps`.
///
/// Unmet hypotheses (irregular complex, λ̃₂ ≥ 1/2, edges in no triangle)
/// yield a not-applicable report rather than an error.
pub fn rapid_mixing_audit(
    x: &Complex2,
    certificate: &ExpansionCertificate,
    steps: usize,
    tol: Tolerances,
) -> Result<RapidMixingReport> {
    if let Err(e) = x.regularity() {
        return Ok(RapidMixingReport::not_applicable(steps, e.to_string()));
    }
    let g0 = underlying_graph(x);
    let spectrum = match normalized_spectrum(&g0, tol.eigen) {
        Ok(s) => s,
        Err(e @ HdxError::NotRegular(_)) => {
            return Ok(RapidMixingReport::not_applicable(steps, e.to_string()))
        }
        Err(e) => return Err(e),
    };
    let lambda2 = spectrum.lambda2;
    let epsilon = certificate.epsilon_cosystolic.to_f64();
    let alpha = match alpha_bound(epsilon, lambda2) {
        Ok(a) => a,
        Err(e @ HdxError::Domain(_)) => {
            let mut r = RapidMixingReport::not_applicable(steps, e.to_string());
            r.lambda2 = Some(lambda2);
            r.epsilon = Some(epsilon);
            return Ok(r);
        }
        Err(e) => return Err(e),
    };
    let g1 = edge_graph(x).graph;
    let g1_spectrum = match normalized_spectrum(&g1, tol.eigen) {
        Ok(s) => s,
        Err(e @ HdxError::NotRegular(_)) => {
            let mut r = RapidMixingReport::not_applicable(steps, e.to_string());
            r.lambda2 = Some(lambda2);
            r.epsilon = Some(epsilon);
            r.alpha = Some(alpha);
            return Ok(r);
        }
        Err(e) => return Err(e),
    };
    let lambda = g1_spectrum.lambda_max_nontrivial;
    let m = g1.n();
    let mut worst = vec![f64::NEG_INFINITY; steps + 1];
    let mut worst_starts = vec![0; steps + 1];
    let mut spectral_decay = true;
    for start in 0..m {
        let trace = evolve_exact(&g1, &Distribution::point_mass(m, start)?, steps, None)?;
        let d0 = trace.distances[0];
        for (i, &d) in trace.distances.iter().enumerate() {
            if d > worst[i] {
                worst[i] = d;
                worst_starts[i] = start;
            }
            if d > alpha_power(lambda, i) * d0 + tol.slack {
                spectral_decay = false;
            }
        }
    }
    let bound_satisfied: Vec<bool> = worst
        .iter()
        .enumerate()
        .map(|(i, &d)| d <= alpha_power(alpha, i) + tol.slack)
        .collect();
    let holds = bound_satisfied.iter().all(|&b| b);
    Ok(RapidMixingReport {
        steps,
        epsilon: Some(epsilon),
        lambda2: Some(lambda2),
        alpha: Some(alpha),
        edge_graph_lambda: Some(lambda),
        worst_distances: worst,
        worst_starts,
        bound_satisfied,
        spectral_decay: Some(spectral_decay),
        verdict: Verdict::from_check(holds, true),
        reason: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expansion::{certify_exact, DEFAULT_MAX_BITS};
    use crate::spectral::Tolerances;

    fn octahedron() -> Graph {
        edge_graph(&Complex2::complete(4)).graph
    }

    fn k2() -> Graph {
        Graph::from_edges(2, &[[0, 1]]).unwrap()
    }

    #[test]
    fn uniform_start_is_stationary() {
        let g = octahedron();
        let trace = evolve_exact(&g, &Distribution::uniform(6).unwrap(), 20, Some(0.5)).unwrap();
        assert!(trace.distances.iter().all(|d| d.abs() < 1e-15));
        assert!(trace.within_bound());
    }

    #[test]
    fn k2_alternates() {
        let g = k2();
        let trace = evolve_exact(&g, &Distribution::point_mass(2, 0).unwrap(), 5, None).unwrap();
        assert_eq!(trace.distributions[1].probabilities(), &[0.0, 1.0]);
        assert_eq!(trace.distributions[2].probabilities(), &[1.0, 0.0]);
        let d0 = trace.distances[0];
        assert!(trace.distances.iter().all(|d| (d - d0).abs() < 1e-15));
        assert!(trace.bound_satisfied.is_empty());

        let path = simulate(&g, 0, 7, 12345).unwrap();
        assert_eq!(path, vec![0, 1, 0, 1, 0, 1, 0, 1]);
    }

    #[test]
    fn octahedron_decays_at_rate_half() {
        let g = octahedron();
        let trace = evolve_exact(&g, &Distribution::point_mass(6, 2).unwrap(), 64, None).unwrap();
        let d0 = trace.distances[0];
        for (i, d) in trace.distances.iter().enumerate() {
            assert!(*d <= 0.5f64.powi(i as i32) * d0 + 1e-12, "step {i}");
        }
    }

    #[test]
    fn isolated_vertex_has_no_transition() {
        let g = Graph::from_edges(3, &[[0, 1]]).unwrap();
        let p = Distribution::uniform(3).unwrap();
        assert!(matches!(
            evolve_exact(&g, &p, 1, None),
            Err(HdxError::UndefinedTransition(_))
        ));
        assert!(matches!(
            simulate(&g, 2, 1, 0),
            Err(HdxError::UndefinedTransition(_))
        ));
        assert_eq!(simulate(&g, 2, 0, 0).unwrap(), vec![2]);
    }

    #[test]
    fn distribution_validation() {
        assert!(Distribution::new(vec![0.5, 0.6]).is_err());
        assert!(Distribution::new(vec![1.5, -0.5]).is_err());
        assert!(Distribution::new(vec![]).is_err());
        assert!(Distribution::point_mass(3, 3).is_err());
        let p = Distribution::point_mass(4, 1).unwrap();
        assert!((p.distance_to_uniform() - (0.75f64).sqrt()).abs() < 1e-15);
    }

    #[test]
    fn high_order_neighbors_examples() {
        let k4 = Complex2::complete(4);
        let e = k4.edge_id(0, 1).unwrap();
        let mut expected: Vec<usize> = [[0, 2], [1, 2], [0, 3], [1, 3]]
            .iter()
            .map(|[a, b]| k4.edge_id(*a, *b).unwrap())
            .collect();
        expected.sort_unstable();
        assert_eq!(high_order_neighbors(&k4, e), expected);

        let k5 = Complex2::complete(5);
        assert!((0..10).all(|e| high_order_neighbors(&k5, e).len() == 6));

        let bare = Complex2::build_from_triangles(&[[0, 1, 2]], &[[2, 3]]).unwrap();
        let lonely = bare.edge_id(2, 3).unwrap();
        assert!(high_order_neighbors(&bare, lonely).is_empty());
        assert!(matches!(
            high_order_simulate(&bare, lonely, 1, 0),
            Err(HdxError::UndefinedTransition(_))
        ));
    }

    #[test]
    fn simulation_is_deterministic() {
        let k4 = Complex2::complete(4);
        assert_eq!(high_order_simulate(&k4, 3, 0, 9).unwrap(), vec![3]);
        let a = high_order_simulate(&k4, 0, 50, 2024).unwrap();
        let b = high_order_simulate(&k4, 0, 50, 2024).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, high_order_simulate(&k4, 0, 50, 2025).unwrap());
        let g = Graph::complete(4);
        assert_eq!(
            simulate(&g, 1, 30, 7).unwrap(),
            simulate(&g, 1, 30, 7).unwrap()
        );
    }

    #[test]
    fn high_order_walk_matches_edge_graph_walk() {
        for n in 4..=6 {
            let x = Complex2::complete(n);
            let map = edge_graph(&x);
            for seed in 0..20 {
                let e0 = seed as usize % x.num_edges();
                let edges = high_order_simulate(&x, e0, 40, seed).unwrap();
                let vertices = simulate(&map.graph, map.vertex_of(e0), 40, seed).unwrap();
                let mapped: Vec<usize> = vertices.into_iter().map(|v| map.edge_of(v)).collect();
                assert_eq!(edges, mapped);
            }
        }
    }

    #[test]
    fn monte_carlo_is_schedule_independent() {
        let x = Complex2::complete(4);
        let a = monte_carlo_trace(&x, 0, 4, 2000, 11, None).unwrap();
        let b = monte_carlo_trace(&x, 0, 4, 2000, 11, None).unwrap();
        assert_eq!(a.distributions, b.distributions);
        assert_eq!(a.distributions[0].probabilities()[0], 1.0);
        for p in &a.distributions {
            assert!((p.probabilities().iter().sum::<f64>() - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn rapid_mixing_on_k4() {
        let x = Complex2::complete(4);
        let cert = certify_exact(&x, DEFAULT_MAX_BITS).unwrap();
        let report = rapid_mixing_audit(&x, &cert, 100, Tolerances::default()).unwrap();
        assert_eq!(report.verdict, Verdict::Pass);
        let alpha = report.alpha.unwrap();
        assert!(alpha > 0.0 && alpha < 1.0);
        assert!((report.lambda2.unwrap() + 1.0 / 3.0).abs() < 1e-9);
        assert!((report.edge_graph_lambda.unwrap() - 0.5).abs() < 1e-9);
        assert_eq!(report.spectral_decay, Some(true));
        assert_eq!(report.worst_distances.len(), 101);
        assert!(report.worst_distances[0] <= 1.0);
    }

    #[test]
    fn rapid_mixing_irregular_is_not_applicable() {
        let x = Complex2::build_from_triangles(&[[0, 1, 2], [1, 2, 3]], &[]).unwrap();
        let k4 = Complex2::complete(4);
        let cert = certify_exact(&k4, DEFAULT_MAX_BITS).unwrap();
        let report = rapid_mixing_audit(&x, &cert, 10, Tolerances::default()).unwrap();
        assert_eq!(report.verdict, Verdict::NotApplicable);
        assert!(report.reason.is_some());
    }
}
