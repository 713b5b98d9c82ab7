//! Underlying and edge graphs of a complex, normalized adjacency spectra,
//! exact Cheeger constants, and audits of the classical spectral
//! inequalities on regular graphs.

mod eigen;
mod graph;

use std::cmp::Ordering;

use serde::Serialize;

pub use eigen::symmetric_eigenvalues;
pub use graph::{edge_graph, underlying_graph, EdgeGraphMap, Graph};

use crate::complex::Complex2;
use crate::error::{HdxError, Result};
use crate::fraction::Fraction;
use crate::gf2::lex_cmp_u64;
use crate::search::best_over;

pub const DEFAULT_EIGEN_TOLERANCE: f64 = 1e-9;
/// Absolute slack allowed on real-valued sides of audited inequalities.
pub const AUDIT_SLACK: f64 = 1e-9;
pub const CHEEGER_MAX_VERTICES: usize = 26;
pub const MIXING_MAX_VERTICES: usize = 22;
/// Residual threshold of the mixing-lemma audit.
pub const MIXING_RESIDUAL_LIMIT: f64 = 1e-6;
/// Lower bound on the smallest normalized eigenvalue of an edge-graph.
pub const EDGE_GRAPH_FLOOR: f64 = -17.0 / 18.0;

/// Numerical tolerances of the spectral and expansion audits.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Tolerances {
    /// Off-diagonal norm at which the eigensolver stops.
    pub eigen: f64,
    /// Amount by which an audited inequality may be missed.
    pub slack: f64,
    /// Largest accepted expander-mixing residual.
    pub mixing: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            eigen: DEFAULT_EIGEN_TOLERANCE,
            slack: AUDIT_SLACK,
            mixing: MIXING_RESIDUAL_LIMIT,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectralReport {
    /// Eigenvalues of `A / k`, descending.
    pub normalized_eigenvalues: Vec<f64>,
    pub lambda2: f64,
    pub lambda_n: f64,
    /// `max(|λ̃₂|, |λ̃ₙ|)`.
    pub lambda_max_nontrivial: f64,
    /// Off-diagonal norm left by the eigensolver; bounds each eigenvalue's error.
    pub tolerance: f64,
}

impl SpectralReport {
    pub fn spectral_gap(&self) -> f64 {
        1.0 - self.lambda2
    }
}

/// Full normalized spectrum of a regular graph with degree at least one.
pub fn normalized_spectrum(g: &Graph, tol: f64) -> Result<SpectralReport> {
    let k = g.require_regular()?;
    if k == 0 {
        return Err(HdxError::NotRegular(
            "degree 0: normalized adjacency undefined".into(),
        ));
    }
    let n = g.n();
    let scale = 1.0 / k as f64;
    let a = g.dense_adjacency().into_iter().map(|x| x * scale).collect();
    let (values, achieved) = symmetric_eigenvalues(a, n, tol)?;
    let lambda2 = values[1];
    let lambda_n = values[n - 1];
    Ok(SpectralReport {
        lambda_max_nontrivial: lambda2.abs().max(lambda_n.abs()),
        normalized_eigenvalues: values,
        lambda2,
        lambda_n,
        tolerance: achieved,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheegerResult {
    /// `min |E(S, S̄)| / (k|S|)` over `0 < |S| <= n/2`.
    pub h_normalized: Fraction,
    pub witness: Vec<usize>,
    pub cut: usize,
}

fn mask_members(mask: u64) -> Vec<usize> {
    (0..64).filter(|i| mask >> i & 1 == 1).collect()
}

fn check_small(g: &Graph, limit: usize) -> Result<()> {
    if g.n() > limit {
        return Err(HdxError::capacity("vertex count", g.n(), limit));
    }
    Ok(())
}

/// Exact normalized Cheeger constant by enumerating the subsets that contain
/// vertex 0 together with their complements. Ties go to the
/// lexicographically smallest witness.
pub fn cheeger_exhaustive(g: &Graph) -> Result<CheegerResult> {
    check_small(g, CHEEGER_MAX_VERTICES)?;
    let k = g.require_regular()?;
    let n = g.n();
    if k == 0 || n < 2 {
        return Err(HdxError::Degenerate(
            "Cheeger constant needs n >= 2 and k >= 1".into(),
        ));
    }
    let masks = g.adjacency_masks()?;
    let full = (1u64 << n) - 1;
    let half = n / 2;
    // candidate: (cut, size, set)
    let better = |a: &(u64, u64, u64), b: &(u64, u64, u64)| match (a.0 * b.1).cmp(&(b.0 * a.1)) {
        Ordering::Less => true,
        Ordering::Greater => false,
        Ordering::Equal => lex_cmp_u64(a.2, b.2) == Ordering::Less,
    };
    let best = best_over(
        1u64 << (n - 1),
        |r| {
            let set = 1 | r << 1;
            if set == full {
                return None;
            }
            let cut = g.cut_size(&masks, set) as u64;
            let size = set.count_ones() as usize;
            let inside = (size <= half).then_some((cut, size as u64, set));
            let outside = (n - size <= half).then_some((cut, (n - size) as u64, full & !set));
            match (inside, outside) {
                (Some(a), Some(b)) => Some(if better(&b, &a) { b } else { a }),
                (a, b) => a.or(b),
            }
        },
        better,
    )
    .expect("n >= 2 yields a candidate");
    Ok(CheegerResult {
        h_normalized: Fraction::new(best.0, k as u64 * best.1),
        witness: mask_members(best.2),
        cut: best.0 as usize,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MinCut {
    pub cut: usize,
    pub witness: Vec<usize>,
}

/// Minimum of `|E(S, S̄)|` over `∅ ≠ S ⊊ V`.
pub fn min_cut_exhaustive(g: &Graph) -> Result<MinCut> {
    check_small(g, CHEEGER_MAX_VERTICES)?;
    let n = g.n();
    if n < 2 {
        return Err(HdxError::Degenerate(
            "no proper nonempty vertex subset".into(),
        ));
    }
    let masks = g.adjacency_masks()?;
    let full = (1u64 << n) - 1;
    let better = |a: &(u32, u64), b: &(u32, u64)| {
        a.0 < b.0 || (a.0 == b.0 && lex_cmp_u64(a.1, b.1) == Ordering::Less)
    };
    let best = best_over(
        1u64 << (n - 1),
        |r| {
            let set = 1 | r << 1;
            (set != full).then(|| (g.cut_size(&masks, set), set))
        },
        better,
    )
    .expect("n >= 2 yields a candidate");
    Ok(MinCut {
        cut: best.0 as usize,
        witness: mask_members(best.1),
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MixingAudit {
    /// `max_S 2|E(S)| − k|S|(|S|/n + λ̃₂)`.
    pub residual: f64,
    pub witness: Vec<usize>,
    pub lambda2: f64,
    pub passes: bool,
}

/// One-sided expander mixing lemma, checked over every vertex subset.
pub fn mixing_lemma_audit(g: &Graph, tol: Tolerances) -> Result<MixingAudit> {
    check_small(g, MIXING_MAX_VERTICES)?;
    let k = g.require_regular()? as f64;
    let lambda2 = normalized_spectrum(g, tol.eigen)?.lambda2;
    let n = g.n();
    let masks = g.adjacency_masks()?;
    let residual_of = |set: u64| {
        let size = set.count_ones() as f64;
        g.twice_inner_edges(&masks, set) as f64 - k * size * (size / n as f64 + lambda2)
    };
    let better = |a: &(f64, u64), b: &(f64, u64)| match a.0.total_cmp(&b.0) {
        Ordering::Greater => true,
        Ordering::Less => false,
        Ordering::Equal => lex_cmp_u64(a.1, b.1) == Ordering::Less,
    };
    let (residual, set) = best_over(1u64 << n, |s| Some((residual_of(s), s)), better)
        .expect("the empty set is always a candidate");
    Ok(MixingAudit {
        residual,
        witness: mask_members(set),
        lambda2,
        passes: residual <= tol.mixing,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheegerInequalityAudit {
    pub h_normalized: Fraction,
    pub lambda2: f64,
    /// `(1 − h̃²/2) − λ̃₂`.
    pub slack: f64,
    pub passes: bool,
}

pub fn cheeger_inequality_audit(g: &Graph, tol: Tolerances) -> Result<CheegerInequalityAudit> {
    let cheeger = cheeger_exhaustive(g)?;
    let lambda2 = normalized_spectrum(g, tol.eigen)?.lambda2;
    let h = cheeger.h_normalized.to_f64();
    let slack = (1.0 - h * h / 2.0) - lambda2;
    Ok(CheegerInequalityAudit {
        h_normalized: cheeger.h_normalized,
        lambda2,
        slack,
        passes: slack >= -tol.slack,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FloorAudit {
    pub lambda_n: f64,
    /// `λ̃ₙ(G₁) + 17/18`.
    pub slack: f64,
    pub passes: bool,
}

/// Lower bound on the smallest normalized eigenvalue of the edge-graph of an
/// edge-regular complex.
pub fn edge_graph_floor_audit(x: &Complex2, tol: Tolerances) -> Result<FloorAudit> {
    let profile = x.degree_profile();
    let k1 = profile.edge_regular().ok_or_else(|| {
        HdxError::NotRegular("edges lie in different numbers of triangles".into())
    })?;
    if k1 == 0 {
        return Err(HdxError::NotRegular("edges lie in no triangles".into()));
    }
    let lambda_n = normalized_spectrum(&edge_graph(x).graph, tol.eigen)?.lambda_n;
    let slack = lambda_n - EDGE_GRAPH_FLOOR;
    Ok(FloorAudit {
        lambda_n,
        slack,
        passes: slack >= -tol.slack,
    })
}
