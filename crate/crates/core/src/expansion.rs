//! Exact coboundary/cosystolic expansion constants and the local-view
//! machinery relating them to the edge-graph.
//!
//! Constants are certified by enumerating every cochain of dimension 0 and 1,
//! so the complex must be small: by default at most 24 vertices and 24 edges.
//! The lemma audits take a [`LemmaContext`] holding the certificate, the
//! second normalized eigenvalue of the underlying graph and the cocycle space
//! Z¹, and report per-vertex evidence together with whether the size
//! hypotheses of each statement are met.

use std::cmp::Ordering;

use rayon::prelude::*;
use serde::Serialize;

use crate::cochain::{self, Chain, CodeSpace, DEFAULT_ENUMERATION_LIMIT};
use crate::complex::Complex2;
use crate::error::{HdxError, Result};
use crate::fraction::Fraction;
use crate::gf2::lex_cmp_u64;
use crate::spectral::{self, edge_graph, underlying_graph, Graph, Tolerances};
use crate::verdict::Verdict;

pub const DEFAULT_MAX_BITS: usize = 24;

/// A minimizing cochain together with the quantities defining its ratio.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub members: Vec<usize>,
    pub coboundary_size: usize,
    pub distance: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DimensionCertificate {
    pub dim: usize,
    pub faces: usize,
    /// `k0` for vertices, `k1` for edges.
    pub k: usize,
    pub cocycle_dimension: usize,
    pub coboundary_dimension: usize,
    /// `min |δ(S)| / (k · dist(S, Z))` over non-cocycles.
    pub epsilon_cosystolic: Fraction,
    pub cosystolic_witness: Witness,
    /// Same ratio with the distance taken to B.
    pub epsilon_coboundary: Fraction,
    pub coboundary_witness: Witness,
    /// `min |z| / |X(dim)|` over cocycles outside B, if there are any.
    pub mu: Option<Fraction>,
    pub mu_witness: Option<Vec<usize>>,
    pub nontrivial_cocycles: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExpansionCertificate {
    pub k0: usize,
    pub k1: usize,
    pub epsilon_cosystolic: Fraction,
    pub epsilon_coboundary: Fraction,
    pub mu: Fraction,
    /// Set when no nontrivial cocycle exists in either dimension, in which
    /// case `mu` is reported as 1 and never binds.
    pub mu_vacuous: bool,
    /// No nontrivial cocycles, so `epsilon_coboundary` certifies coboundary
    /// expansion as well.
    pub coboundary_expander: bool,
    /// With a disconnected 1-skeleton, Z⁰ is strictly larger than B⁰.
    pub connected: bool,
    pub dimensions: Vec<DimensionCertificate>,
}

#[derive(Clone, Copy)]
struct Candidate {
    cob: u64,
    dist: u64,
    set: u64,
}

impl Candidate {
    fn better_ratio_than(&self, other: &Candidate) -> bool {
        match (self.cob * other.dist).cmp(&(other.cob * self.dist)) {
            Ordering::Less => true,
            Ordering::Greater => false,
            Ordering::Equal => lex_cmp_u64(self.set, other.set) == Ordering::Less,
        }
    }
}

#[derive(Clone, Copy, Default)]
struct Scan {
    cosystolic: Option<Candidate>,
    coboundary: Option<Candidate>,
    // (size, set)
    smallest_nontrivial: Option<(u32, u64)>,
    nontrivial: u64,
}

fn keep_min(slot: &mut Option<Candidate>, c: Candidate) {
    match slot {
        Some(cur) if !c.better_ratio_than(cur) => {}
        _ => *slot = Some(c),
    }
}

impl Scan {
    fn merge(mut self, other: Scan) -> Scan {
        if let Some(c) = other.cosystolic {
            keep_min(&mut self.cosystolic, c);
        }
        if let Some(c) = other.coboundary {
            keep_min(&mut self.coboundary, c);
        }
        if let Some(z) = other.smallest_nontrivial {
            self.keep_nontrivial(z);
        }
        self.nontrivial += other.nontrivial;
        self
    }

    fn keep_nontrivial(&mut self, z: (u32, u64)) {
        match self.smallest_nontrivial {
            Some(cur)
                if z.0 > cur.0 || (z.0 == cur.0 && lex_cmp_u64(z.1, cur.1) != Ordering::Less) => {}
            _ => self.smallest_nontrivial = Some(z),
        }
    }
}

fn certify_dimension(
    x: &Complex2,
    dim: usize,
    k: usize,
    max_bits: usize,
) -> Result<DimensionCertificate> {
    let faces = x.num_faces(dim);
    if faces > max_bits {
        return Err(HdxError::capacity(
            if dim == 0 {
                "number of vertices"
            } else {
                "number of edges"
            },
            faces,
            max_bits,
        ));
    }
    let z = cochain::cocycle_space(x, dim)?;
    let b = cochain::coboundary_space(x, dim)?;
    let to_z = cochain::distance_table(&z, max_bits)?;
    let to_b = cochain::distance_table(&b, max_bits)?;
    let coboundary_size: Box<dyn Fn(u64) -> u64 + Sync> = if dim == 0 {
        let g = underlying_graph(x);
        let masks = g.adjacency_masks()?;
        Box::new(move |s| g.cut_size(&masks, s) as u64)
    } else {
        let columns = cochain::coboundary_masks(x, 1)?;
        Box::new(move |s| {
            let mut image = 0u64;
            let mut rest = s;
            while rest != 0 {
                image ^= columns[rest.trailing_zeros() as usize];
                rest &= rest - 1;
            }
            image.count_ones() as u64
        })
    };

    let scan = (0..1u64 << faces)
        .into_par_iter()
        .fold(Scan::default, |mut acc, s| {
            let cob = coboundary_size(s);
            if cob == 0 {
                if to_b[s as usize] != 0 {
                    acc.nontrivial += 1;
                    acc.keep_nontrivial((s.count_ones(), s));
                }
            } else {
                keep_min(
                    &mut acc.cosystolic,
                    Candidate {
                        cob,
                        dist: to_z[s as usize] as u64,
                        set: s,
                    },
                );
                keep_min(
                    &mut acc.coboundary,
                    Candidate {
                        cob,
                        dist: to_b[s as usize] as u64,
                        set: s,
                    },
                );
            }
            acc
        })
        .reduce(Scan::default, Scan::merge);

    let (Some(cosys), Some(cobound)) = (scan.cosystolic, scan.coboundary) else {
        return Err(HdxError::Degenerate(format!(
            "every {}-cochain is a cocycle",
            dim
        )));
    };
    let witness = |c: Candidate| Witness {
        members: Chain::from_mask(dim, c.set).members().to_vec(),
        coboundary_size: c.cob as usize,
        distance: c.dist as usize,
    };
    let ratio = |c: Candidate| Fraction::new(c.cob, k as u64 * c.dist);
    Ok(DimensionCertificate {
        dim,
        faces,
        k,
        cocycle_dimension: z.dimension(),
        coboundary_dimension: b.dimension(),
        epsilon_cosystolic: ratio(cosys),
        cosystolic_witness: witness(cosys),
        epsilon_coboundary: ratio(cobound),
        coboundary_witness: witness(cobound),
        mu: scan
            .smallest_nontrivial
            .map(|(size, _)| Fraction::new(size as u64, faces as u64)),
        mu_witness: scan
            .smallest_nontrivial
            .map(|(_, set)| Chain::from_mask(dim, set).members().to_vec()),
        nontrivial_cocycles: scan.nontrivial,
    })
}

/// Exact `(ε, μ)` cosystolic constants (and the coboundary constant) of a
/// regular complex, by enumerating all cochains of dimensions 0 and 1.
pub fn certify_exact(x: &Complex2, max_bits: usize) -> Result<ExpansionCertificate> {
    for dim in 0..2 {
        if x.num_faces(dim) > max_bits {
            return Err(HdxError::capacity(
                if dim == 0 {
                    "number of vertices"
                } else {
                    "number of edges"
                },
                x.num_faces(dim),
                max_bits,
            ));
        }
    }
    let (k0, k1) = x.regularity()?;
    let dims = vec![
        certify_dimension(x, 0, k0, max_bits)?,
        certify_dimension(x, 1, k1, max_bits)?,
    ];
    let epsilon_cosystolic = dims
        .iter()
        .map(|d| d.epsilon_cosystolic)
        .min()
        .expect("two dimensions");
    let epsilon_coboundary = dims
        .iter()
        .map(|d| d.epsilon_coboundary)
        .min()
        .expect("two dimensions");
    let mu = dims.iter().filter_map(|d| d.mu).min();
    let coboundary_expander = dims.iter().all(|d| d.nontrivial_cocycles == 0);
    Ok(ExpansionCertificate {
        k0,
        k1,
        epsilon_cosystolic,
        epsilon_coboundary,
        mu: mu.unwrap_or(Fraction::from_integer(1)),
        mu_vacuous: mu.is_none(),
        coboundary_expander,
        connected: dims[0].cocycle_dimension <= 1,
        dimensions: dims,
    })
}

/// `3√((1+2λ)² + 32) − 2λ − 17`, the factor shared by the sum-of-coboundaries
/// bound and the mixing rate.
pub fn coboundary_bracket(lambda2: f64) -> f64 {
    let a = 1.0 + 2.0 * lambda2;
    3.0 * (a * a + 32.0).sqrt() - 2.0 * lambda2 - 17.0
}

fn check_lambda2(lambda2: f64) -> Result<()> {
    if !(lambda2 < 0.5) {
        return Err(HdxError::Domain(format!("λ̃₂ = {lambda2} is not below 1/2")));
    }
    Ok(())
}

/// Fatness constant `η = (1 + 2λ + √((1+2λ)² + 32)) / 8` for `λ = λ̃₂ < 1/2`.
pub fn eta(lambda2: f64) -> Result<f64> {
    check_lambda2(lambda2)?;
    let a = 1.0 + 2.0 * lambda2;
    let eta = (a + (a * a + 32.0).sqrt()) / 8.0;
    if !(eta > 0.5) {
        return Err(HdxError::Domain(format!(
            "fatness constant {eta} is not above 1/2"
        )));
    }
    Ok(eta)
}

/// Mixing rate `α = 1 − ε²/128 · bracket(λ̃₂)²`.
pub fn alpha_bound(epsilon: f64, lambda2: f64) -> Result<f64> {
    check_lambda2(lambda2)?;
    if !(epsilon >= 0.0) {
        return Err(HdxError::Domain(format!("ε = {epsilon} is negative")));
    }
    let bracket = coboundary_bracket(lambda2);
    Ok(1.0 - epsilon * epsilon / 128.0 * bracket * bracket)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Fatness {
    Fat,
    SemiFat,
    NonFat,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FatnessPartition {
    pub eta: f64,
    pub k0: usize,
    pub fat: Vec<usize>,
    pub semi_fat: Vec<usize>,
    pub non_fat: Vec<usize>,
}

impl FatnessPartition {
    pub fn classify(local_size: usize, k0: usize, eta: f64) -> Fatness {
        if local_size as f64 > eta * k0 as f64 {
            Fatness::Fat
        } else if 2 * local_size > k0 {
            Fatness::SemiFat
        } else {
            Fatness::NonFat
        }
    }

    pub fn class_of(&self, v: usize) -> Fatness {
        if self.fat.binary_search(&v).is_ok() {
            Fatness::Fat
        } else if self.semi_fat.binary_search(&v).is_ok() {
            Fatness::SemiFat
        } else {
            Fatness::NonFat
        }
    }
}

fn check_eta(eta: f64) -> Result<()> {
    if !(eta > 0.5 && eta < 1.0) {
        return Err(HdxError::Domain(format!(
            "fatness constant {eta} outside (1/2, 1)"
        )));
    }
    Ok(())
}

fn local_sizes(x: &Complex2, f: &Chain) -> Result<Vec<usize>> {
    f.check(x, 1)?;
    let mut sizes = vec![0; x.num_vertices()];
    for &e in f.members() {
        for v in x.edge(e) {
            sizes[v] += 1;
        }
    }
    Ok(sizes)
}

pub fn fatness_partition(x: &Complex2, f: &Chain, eta: f64) -> Result<FatnessPartition> {
    check_eta(eta)?;
    let (k0, _) = x.regularity()?;
    let mut p = FatnessPartition {
        eta,
        k0,
        fat: Vec::new(),
        semi_fat: Vec::new(),
        non_fat: Vec::new(),
    };
    for (v, size) in local_sizes(x, f)?.into_iter().enumerate() {
        match FatnessPartition::classify(size, k0, eta) {
            Fatness::Fat => p.fat.push(v),
            Fatness::SemiFat => p.semi_fat.push(v),
            Fatness::NonFat => p.non_fat.push(v),
        }
    }
    Ok(p)
}

/// Both sides of `|E_{G₁}(S, S̄)| = Σ_v |δ(F_v)|`, where `S` is the set of
/// edge-graph vertices corresponding to `f`.
pub fn outgoing_edges_identity(x: &Complex2, f: &Chain) -> Result<(usize, usize)> {
    f.check(x, 1)?;
    let map = edge_graph(x);
    let mut in_s = vec![false; map.graph.n()];
    for &e in f.members() {
        in_s[map.vertex_of(e)] = true;
    }
    let lhs = (0..map.graph.n())
        .filter(|&a| in_s[a])
        .map(|a| map.graph.neighbors(a).iter().filter(|&&b| !in_s[b]).count())
        .sum();
    let mut rhs = 0;
    for v in 0..x.num_vertices() {
        let view = cochain::local_view(x, f, v)?;
        rhs += cochain::coboundary_edges(x, &view)?.len();
    }
    Ok((lhs, rhs))
}

/// Size hypotheses under which the local-view lemmas are stated.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SizeConditions {
    pub vertices: usize,
    /// `|V| ≥ 4 / (1 − 2λ̃₂)`.
    pub large_cuts_bound: f64,
    pub large_cuts: bool,
    /// `|V| ≥ 3 / μ`.
    pub nontrivial_sets_bound: f64,
    pub nontrivial_sets: bool,
}

impl SizeConditions {
    pub fn new(vertices: usize, lambda2: f64, mu: Fraction) -> Self {
        let large_cuts_bound = 4.0 / (1.0 - 2.0 * lambda2);
        let nontrivial_sets_bound = 3.0 / mu.to_f64();
        SizeConditions {
            vertices,
            large_cuts_bound,
            large_cuts: vertices as f64 >= large_cuts_bound,
            nontrivial_sets_bound,
            nontrivial_sets: vertices as f64 >= nontrivial_sets_bound,
        }
    }

    pub fn met(&self) -> bool {
        self.large_cuts && self.nontrivial_sets
    }
}

/// Shared inputs of the local-view audits.
#[derive(Debug, Clone)]
pub struct LemmaContext<'a> {
    pub complex: &'a Complex2,
    pub k0: usize,
    pub k1: usize,
    pub lambda2: f64,
    pub epsilon: Fraction,
    pub mu: Fraction,
    pub conditions: SizeConditions,
    pub tolerances: Tolerances,
    cocycles: CodeSpace,
}

impl<'a> LemmaContext<'a> {
    /// Requires a regular complex whose underlying graph has `λ̃₂ < 1/2`.
    pub fn new(
        x: &'a Complex2,
        certificate: &ExpansionCertificate,
        tol: Tolerances,
    ) -> Result<Self> {
        let (k0, k1) = x.regularity()?;
        let lambda2 = spectral::normalized_spectrum(&underlying_graph(x), tol.eigen)?.lambda2;
        check_lambda2(lambda2)?;
        Ok(LemmaContext {
            complex: x,
            k0,
            k1,
            lambda2,
            epsilon: certificate.epsilon_cosystolic,
            mu: certificate.mu,
            conditions: SizeConditions::new(x.num_vertices(), lambda2, certificate.mu),
            tolerances: tol,
            cocycles: cochain::cocycle_space(x, 1)?,
        })
    }

    /// Same context with a different expansion constant.
    pub fn with_epsilon(mut self, epsilon: Fraction) -> Self {
        self.epsilon = epsilon;
        self
    }

    pub fn cocycles(&self) -> &CodeSpace {
        &self.cocycles
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LocalDistance {
    pub vertex: usize,
    pub local_size: usize,
    pub distance: usize,
    /// `min{|F_v|, k0 − |F_v|}`.
    pub formula: usize,
    pub equal: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DistanceFormulaReport {
    pub conditions: SizeConditions,
    /// The statement covers `∅ ≠ F ⊊ E` only.
    pub proper_nonempty: bool,
    pub vertices: Vec<LocalDistance>,
    pub verdict: Verdict,
}

/// Compares `dist(F_v, Z¹)` with `min{|F_v|, k0 − |F_v|}` at every vertex.
pub fn distance_formula_audit(ctx: &LemmaContext, f: &Chain) -> Result<DistanceFormulaReport> {
    let x = ctx.complex;
    f.check(x, 1)?;
    let mut vertices = Vec::with_capacity(x.num_vertices());
    for v in 0..x.num_vertices() {
        let view = cochain::local_view(x, f, v)?;
        let (distance, _) =
            cochain::distance_to_space(&view, &ctx.cocycles, DEFAULT_ENUMERATION_LIMIT)?;
        let formula = view.len().min(ctx.k0 - view.len());
        vertices.push(LocalDistance {
            vertex: v,
            local_size: view.len(),
            distance,
            formula,
            equal: distance == formula,
        });
    }
    let proper_nonempty = !f.is_empty() && f.len() < x.num_edges();
    let holds = vertices.iter().all(|r| r.equal);
    Ok(DistanceFormulaReport {
        conditions: ctx.conditions,
        proper_nonempty,
        vertices,
        verdict: Verdict::from_check(holds, ctx.conditions.met() && proper_nonempty),
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LocalBound {
    pub vertex: usize,
    pub class: Fatness,
    pub local_size: usize,
    pub coboundary: usize,
    /// `ε k1 (1 − η) k0` for semi-fat, `ε k1 |F_v|` for non-fat, absent for fat.
    pub bound: Option<f64>,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LocalViewBoundsReport {
    pub eta: f64,
    pub conditions: SizeConditions,
    pub vertices: Vec<LocalBound>,
    pub verdict: Verdict,
}

/// Lower bounds on `|δ(F_v)|` for semi-fat and non-fat vertices.
pub fn local_view_bounds_audit(
    ctx: &LemmaContext,
    f: &Chain,
    eta: f64,
) -> Result<LocalViewBoundsReport> {
    check_eta(eta)?;
    let x = ctx.complex;
    f.check(x, 1)?;
    let eps = ctx.epsilon.to_f64();
    let mut vertices = Vec::with_capacity(x.num_vertices());
    for v in 0..x.num_vertices() {
        let view = cochain::local_view(x, f, v)?;
        let coboundary = cochain::coboundary_edges(x, &view)?.len();
        let class = FatnessPartition::classify(view.len(), ctx.k0, eta);
        let bound = match class {
            Fatness::Fat => None,
            Fatness::SemiFat => Some(eps * ctx.k1 as f64 * (1.0 - eta) * ctx.k0 as f64),
            Fatness::NonFat => Some(eps * ctx.k1 as f64 * view.len() as f64),
        };
        vertices.push(LocalBound {
            vertex: v,
            class,
            local_size: view.len(),
            coboundary,
            bound,
            holds: bound.is_none_or(|b| coboundary as f64 >= b - ctx.tolerances.slack),
        });
    }
    let holds = vertices.iter().all(|r| r.holds);
    Ok(LocalViewBoundsReport {
        eta,
        conditions: ctx.conditions,
        vertices,
        verdict: Verdict::from_check(holds, ctx.conditions.met()),
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LargeCutsReport {
    pub min_cut: usize,
    pub k: usize,
    pub witness: Vec<usize>,
    pub lambda2: f64,
    pub passes: bool,
    pub precondition_met: bool,
    pub verdict: Verdict,
}

/// Every proper nonempty vertex set of a regular graph with `λ̃₂ < 1/2`
/// has at least `k` outgoing edges once `|V| ≥ 4/(1 − 2λ̃₂)`.
pub fn large_cuts_audit(g: &Graph, tol: Tolerances) -> Result<LargeCutsReport> {
    let k = g.require_regular()?;
    let lambda2 = spectral::normalized_spectrum(g, tol.eigen)?.lambda2;
    check_lambda2(lambda2)?;
    let cut = spectral::min_cut_exhaustive(g)?;
    let precondition_met = g.n() as f64 >= 4.0 / (1.0 - 2.0 * lambda2);
    let passes = cut.cut >= k;
    Ok(LargeCutsReport {
        min_cut: cut.cut,
        k,
        witness: cut.witness,
        lambda2,
        passes,
        precondition_met,
        verdict: Verdict::from_check(passes, precondition_met),
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SumCoboundariesReport {
    /// `Σ_v |δ(F_v)|`.
    pub lhs: usize,
    pub rhs_bound: f64,
    pub passes: bool,
    pub conditions: SizeConditions,
    pub verdict: Verdict,
}

/// `Σ_v |δ(F_v)| ≥ (ε k1 / 4) · bracket(λ̃₂) · |F|` for `|F| ≤ |E|/2`.
pub fn sum_coboundaries_audit(ctx: &LemmaContext, f: &Chain) -> Result<SumCoboundariesReport> {
    let x = ctx.complex;
    f.check(x, 1)?;
    if 2 * f.len() > x.num_edges() {
        return Err(HdxError::Domain(format!(
            "|F| = {} exceeds half of |E| = {}",
            f.len(),
            x.num_edges()
        )));
    }
    let mut lhs = 0;
    for v in 0..x.num_vertices() {
        let view = cochain::local_view(x, f, v)?;
        lhs += cochain::coboundary_edges(x, &view)?.len();
    }
    let rhs_bound = ctx.epsilon.to_f64() * ctx.k1 as f64 / 4.0
        * coboundary_bracket(ctx.lambda2)
        * f.len() as f64;
    let passes = lhs as f64 >= rhs_bound - ctx.tolerances.slack;
    Ok(SumCoboundariesReport {
        lhs,
        rhs_bound,
        passes,
        conditions: ctx.conditions,
        verdict: Verdict::from_check(passes, ctx.conditions.met()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4() -> Complex2 {
        Complex2::complete(4)
    }

    fn edge_chain(x: &Complex2, pairs: &[[usize; 2]]) -> Chain {
        Chain::edges(pairs.iter().map(|p| x.edge_id(p[0], p[1]).unwrap()))
    }

    #[test]
    fn eta_closed_form() {
        assert!((eta(0.0).unwrap() - (1.0 + 33f64.sqrt()) / 8.0).abs() < 1e-15);
        assert!((eta(0.0).unwrap() - 0.843070).abs() < 1e-6);
        assert!((eta(-0.25).unwrap() - 0.772364).abs() < 1e-6);
        assert!((eta(0.5 - 1e-12).unwrap() - 1.0).abs() < 1e-9);
        assert!(eta(0.5).is_err());
        assert!(eta(f64::NAN).is_err());
    }

    #[test]
    fn alpha_closed_form() {
        assert_eq!(alpha_bound(0.0, 0.1).unwrap(), 1.0);
        assert!((alpha_bound(1.0, 0.0).unwrap() - 0.9995734).abs() < 1e-7);
        assert!((alpha_bound(0.7, 0.5 - 1e-9).unwrap() - 1.0).abs() < 1e-12);
        assert!(alpha_bound(1.0, 0.5).is_err());
        assert!(alpha_bound(-1.0, 0.0).is_err());
    }

    #[test]
    fn bracket_vanishes_at_one_half() {
        assert!(coboundary_bracket(0.5).abs() < 1e-12);
        assert!((coboundary_bracket(-1.0 / 3.0) - 2.0 / 3.0).abs() < 1e-12);
    }

    #[test]
    fn fatness_thresholds() {
        let x = k4();
        let none = fatness_partition(&x, &Chain::edges([]), 0.843).unwrap();
        assert_eq!(none.non_fat, vec![0, 1, 2, 3]);

        let all = fatness_partition(&x, &Chain::edges(0..6), 0.843).unwrap();
        assert_eq!(all.fat, vec![0, 1, 2, 3]);

        let star = edge_chain(&x, &[[0, 1], [0, 2], [0, 3]]);
        let p = fatness_partition(&x, &star, 0.843).unwrap();
        assert_eq!(p.fat, vec![0]);
        assert!(p.semi_fat.is_empty());
        assert_eq!(p.non_fat, vec![1, 2, 3]);
        assert_eq!(p.class_of(0), Fatness::Fat);

        assert!(fatness_partition(&x, &star, 0.5).is_err());
        assert!(fatness_partition(&x, &star, 1.0).is_err());
    }

    #[test]
    fn semi_fat_boundaries_are_exact() {
        // k0 = 4: |F_v| = 2 is non-fat (not > k0/2), 3 is semi-fat under η = 0.8 (3 ≤ 3.2)
        assert_eq!(FatnessPartition::classify(2, 4, 0.8), Fatness::NonFat);
        assert_eq!(FatnessPartition::classify(3, 4, 0.8), Fatness::SemiFat);
        assert_eq!(FatnessPartition::classify(3, 4, 0.7), Fatness::Fat);
        assert_eq!(FatnessPartition::classify(4, 4, 0.99), Fatness::Fat);
    }

    #[test]
    fn outgoing_edges_examples() {
        let x = k4();
        assert_eq!(
            outgoing_edges_identity(&x, &Chain::edges([])).unwrap(),
            (0, 0)
        );
        assert_eq!(
            outgoing_edges_identity(&x, &edge_chain(&x, &[[0, 1]])).unwrap(),
            (4, 4)
        );
        assert_eq!(
            outgoing_edges_identity(&x, &Chain::edges(0..6)).unwrap(),
            (0, 0)
        );
    }

    #[test]
    fn k4_certificate() {
        let cert = certify_exact(&k4(), DEFAULT_MAX_BITS).unwrap();
        assert_eq!((cert.k0, cert.k1), (3, 2));
        assert_eq!(cert.dimensions[0].epsilon_cosystolic, Fraction::new(2, 3));
        assert_eq!(cert.dimensions[0].epsilon_coboundary, Fraction::new(2, 3));
        assert!(cert.mu_vacuous);
        assert_eq!(cert.mu, Fraction::from_integer(1));
        assert!(cert.coboundary_expander && cert.connected);
        assert!(cert.epsilon_cosystolic >= cert.epsilon_coboundary);
    }

    #[test]
    fn certify_rejects_oversized_and_irregular() {
        let err = certify_exact(&Complex2::complete(8), DEFAULT_MAX_BITS).unwrap_err();
        assert!(err.is_capacity());
        let x = Complex2::build_from_triangles(&[[0, 1, 2], [1, 2, 3]], &[]).unwrap();
        assert!(matches!(
            certify_exact(&x, 24),
            Err(HdxError::NotRegular(_))
        ));
    }

    #[test]
    fn triangle_free_complex_is_degenerate() {
        // the 4-cycle is (2, 0)-regular, so every 1-cochain is a cocycle
        let x = Complex2::build_from_triangles(&[], &[[0, 1], [1, 2], [2, 3], [3, 0]]).unwrap();
        assert!(matches!(
            certify_exact(&x, 24),
            Err(HdxError::Degenerate(_))
        ));
    }

    #[test]
    fn octahedral_sphere_has_no_nontrivial_cocycle() {
        // boundary of the octahedron: a (4, 2)-regular 2-sphere, so Z¹ = B¹
        let tris = [
            [0, 2, 4],
            [0, 2, 5],
            [0, 3, 4],
            [0, 3, 5],
            [1, 2, 4],
            [1, 2, 5],
            [1, 3, 4],
            [1, 3, 5],
        ];
        let x = Complex2::build_from_triangles(&tris, &[]).unwrap();
        let cert = certify_exact(&x, 24).unwrap();
        assert_eq!((cert.k0, cert.k1), (4, 2));
        assert!(cert.mu_vacuous);
    }

    #[test]
    fn torus_has_nontrivial_cocycles() {
        // 7-vertex triangulation of the torus: (6, 2)-regular, H¹ = Z₂²
        let mut tris = Vec::new();
        for i in 0..7 {
            tris.push([i, (i + 1) % 7, (i + 3) % 7]);
            tris.push([i, (i + 2) % 7, (i + 3) % 7]);
        }
        let x = Complex2::build_from_triangles(&tris, &[]).unwrap();
        assert_eq!(x.counts(), (7, 21, 14));
        let cert = certify_exact(&x, 24).unwrap();
        assert_eq!((cert.k0, cert.k1), (6, 2));
        let d1 = &cert.dimensions[1];
        assert_eq!(d1.cocycle_dimension - d1.coboundary_dimension, 2);
        assert_eq!(d1.nontrivial_cocycles, 3 * 64);
        assert!(!cert.mu_vacuous && !cert.coboundary_expander);
        let witness = d1.mu_witness.as_ref().unwrap();
        let z = Chain::edges(witness.iter().copied());
        assert!(cochain::coboundary_edges(&x, &z).unwrap().is_empty());
        assert!(!cochain::coboundary_space(&x, 1).unwrap().contains(&z));
        assert_eq!(cert.mu, Fraction::new(witness.len() as u64, 21));
        assert!(cert.epsilon_cosystolic >= cert.epsilon_coboundary);
    }

    #[test]
    fn disconnected_complex_flagged() {
        // two disjoint copies of K4
        let mut tris = Vec::new();
        for off in [0, 4] {
            for t in Complex2::complete(4).triangles() {
                tris.push(t.map(|v| v + off));
            }
        }
        let x = Complex2::build_from_triangles(&tris, &[]).unwrap();
        let cert = certify_exact(&x, 24).unwrap();
        assert!(!cert.connected);
        assert_eq!(cert.dimensions[0].nontrivial_cocycles, 2);
    }

    #[test]
    fn local_view_audits_on_k4() {
        let x = k4();
        let cert = certify_exact(&x, 24).unwrap();
        let ctx = LemmaContext::new(&x, &cert, Tolerances::default()).unwrap();
        assert!(ctx.conditions.met());

        let f = edge_chain(&x, &[[0, 1]]);
        let report = distance_formula_audit(&ctx, &f).unwrap();
        assert_eq!(report.vertices[0].distance, 1);
        assert_eq!(report.vertices[0].formula, 1);
        assert_eq!(report.verdict, Verdict::Pass);

        let f = edge_chain(&x, &[[0, 2], [0, 3]]);
        let report = distance_formula_audit(&ctx, &f).unwrap();
        assert_eq!(
            (report.vertices[0].distance, report.vertices[0].formula),
            (1, 1)
        );

        let eta = eta(ctx.lambda2).unwrap();
        let f = edge_chain(&x, &[[0, 1]]);
        let report = local_view_bounds_audit(&ctx, &f, eta).unwrap();
        assert_eq!(report.vertices[0].class, Fatness::NonFat);
        assert_eq!(report.vertices[0].coboundary, 2);
        assert_eq!(report.verdict, Verdict::Pass);
    }

    #[test]
    fn empty_and_full_chains_are_outside_the_corollary() {
        let x = k4();
        let cert = certify_exact(&x, 24).unwrap();
        let ctx = LemmaContext::new(&x, &cert, Tolerances::default()).unwrap();
        let report = distance_formula_audit(&ctx, &Chain::edges([])).unwrap();
        assert!(!report.proper_nonempty);
        assert!(report
            .vertices
            .iter()
            .all(|r| r.distance == 0 && r.formula == 0));
    }

    #[test]
    fn sum_audit_examples() {
        let x = k4();
        let cert = certify_exact(&x, 24).unwrap();
        let ctx = LemmaContext::new(&x, &cert, Tolerances::default()).unwrap();
        let empty = sum_coboundaries_audit(&ctx, &Chain::edges([])).unwrap();
        assert_eq!(empty.lhs, 0);
        assert!(empty.rhs_bound.abs() < 1e-12);
        let one = sum_coboundaries_audit(&ctx, &edge_chain(&x, &[[0, 1]])).unwrap();
        assert_eq!(one.lhs, 4);
        let eps = cert.epsilon_cosystolic.to_f64();
        assert!((one.rhs_bound - eps / 3.0).abs() < 1e-9);
        assert!(one.passes);
        assert!(sum_coboundaries_audit(&ctx, &Chain::edges(0..4)).is_err());
    }

    #[test]
    fn large_cuts_on_complete_graphs() {
        let r = large_cuts_audit(&Graph::complete(4), Tolerances::default()).unwrap();
        assert_eq!((r.min_cut, r.k), (3, 3));
        assert!(r.passes && r.precondition_met);
        let r = large_cuts_audit(&Graph::complete(5), Tolerances::default()).unwrap();
        assert_eq!(r.min_cut, 4);
        // C6 has λ̃₂ = 1/2
        assert!(large_cuts_audit(&Graph::cycle(6), Tolerances::default()).is_err());
    }
}
