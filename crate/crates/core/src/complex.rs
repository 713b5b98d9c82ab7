//! Two-dimensional simplicial complexes.
//!
//! A [`Complex2`] stores its faces in canonical form: every edge and triangle
//! is kept with sorted vertex ids, and both face lists are sorted
//! lexicographically, so face indices are a pure function of the face set.

use std::collections::{BTreeMap, HashMap, HashSet};

use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;
use serde::{Deserialize, Serialize};

use crate::error::{HdxError, Result};

/// A 2-dimensional simplicial complex on the dense vertex set `0..n`.
#[derive(Debug, Clone)]
pub struct Complex2 {
    n: usize,
    edges: Vec<[usize; 2]>,
    triangles: Vec<[usize; 3]>,
    edge_lookup: HashMap<[usize; 2], usize>,
    vertex_edges: Vec<Vec<usize>>,
    edge_triangles: Vec<Vec<usize>>,
    // None marks a triangle side that is missing from the edge list; only
    // complexes assembled through `from_parts_unchecked` can contain one.
    triangle_edges: Vec<[Option<usize>; 3]>,
    labels: Option<Vec<String>>,
}

impl PartialEq for Complex2 {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.edges == other.edges && self.triangles == other.triangles
    }
}

impl Eq for Complex2 {}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeProfile {
    pub vertex_edge_degrees: Vec<usize>,
    pub edge_triangle_degrees: Vec<usize>,
    /// `(k0, k1)` when both degree sequences are constant.
    pub regular: Option<(usize, usize)>,
}

impl DegreeProfile {
    /// Common number of triangles per edge, if the complex is regular in
    /// the dimension of its edges.
    pub fn edge_regular(&self) -> Option<usize> {
        constant(&self.edge_triangle_degrees)
    }
}

fn constant(values: &[usize]) -> Option<usize> {
    let first = *values.first()?;
    values.iter().all(|&d| d == first).then_some(first)
}

fn sort2(u: usize, v: usize) -> [usize; 2] {
    if u < v {
        [u, v]
    } else {
        [v, u]
    }
}

fn sort3(mut t: [usize; 3]) -> [usize; 3] {
    t.sort_unstable();
    t
}

fn sides(t: &[usize; 3]) -> [[usize; 2]; 3] {
    [[t[0], t[1]], [t[0], t[2]], [t[1], t[2]]]
}

impl Complex2 {
    /// Builds the closure of `triples` together with `extra_edges`.
    pub fn build_from_triangles(
        triples: &[[usize; 3]],
        extra_edges: &[[usize; 2]],
    ) -> Result<Self> {
        Self::build_with_vertices(0, triples, extra_edges)
    }

    /// Like [`Complex2::build_from_triangles`], but guarantees at least
    /// `min_vertices` vertices so that isolated vertices can be represented.
    pub fn build_with_vertices(
        min_vertices: usize,
        triples: &[[usize; 3]],
        extra_edges: &[[usize; 2]],
    ) -> Result<Self> {
        let mut n = min_vertices;
        let mut seen = HashSet::with_capacity(triples.len());
        let mut triangles = Vec::with_capacity(triples.len());
        for t in triples {
            if t[0] == t[1] || t[0] == t[2] || t[1] == t[2] {
                return Err(HdxError::InvalidFace(t.to_vec()));
            }
            let t = sort3(*t);
            if !seen.insert(t) {
                return Err(HdxError::DuplicateFace(t.to_vec()));
            }
            n = n.max(t[2] + 1);
            triangles.push(t);
        }
        let mut edge_set: HashSet<[usize; 2]> = HashSet::new();
        for t in &triangles {
            edge_set.extend(sides(t));
        }
        for e in extra_edges {
            if e[0] == e[1] {
                return Err(HdxError::InvalidFace(e.to_vec()));
            }
            let e = sort2(e[0], e[1]);
            n = n.max(e[1] + 1);
            edge_set.insert(e);
        }
        let mut edges: Vec<_> = edge_set.into_iter().collect();
        edges.sort_unstable();
        triangles.sort_unstable();
        Ok(Self::assemble(n, edges, triangles))
    }

    /// Assembles a complex from raw face lists without canonicalizing or
    /// enforcing closure. Use [`Complex2::validate`] to inspect the result.
    pub fn from_parts_unchecked(
        n: usize,
        edges: Vec<[usize; 2]>,
        triangles: Vec<[usize; 3]>,
    ) -> Self {
        Self::assemble(n, edges, triangles)
    }

    fn assemble(n: usize, edges: Vec<[usize; 2]>, triangles: Vec<[usize; 3]>) -> Self {
        let (edge_lookup, vertex_edges, edge_triangles, triangle_edges) =
            build_incidence(n, &edges, &triangles);
        Complex2 {
            n,
            edges,
            triangles,
            edge_lookup,
            vertex_edges,
            edge_triangles,
            triangle_edges,
            labels: None,
        }
    }

    /// The complete 2-dimensional complex on `n` vertices.
    pub fn complete(n: usize) -> Self {
        let mut triangles = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    triangles.push([a, b, c]);
                }
            }
        }
        let mut edges = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                edges.push([a, b]);
            }
        }
        Self::assemble(n, edges, triangles)
    }

    /// Random complex with the complete graph on `n` vertices as 1-skeleton
    /// and each triangle kept independently with probability `p`.
    ///
    /// Triangles are visited in lexicographic order; each consumes one
    /// SplitMix64 output `x`, and is kept iff `(x >> 11) * 2^-53 < p`.
    pub fn random(n: usize, p: f64, seed: u64) -> Result<Self> {
        if !(0.0..=1.0).contains(&p) {
            return Err(HdxError::Parameter(format!(
                "triangle probability {p} outside [0, 1]"
            )));
        }
        let mut rng = SplitMix64::seed_from_u64(seed);
        let mut triangles = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    if unit_f64(rng.next_u64()) < p {
                        triangles.push([a, b, c]);
                    }
                }
            }
        }
        let mut edges = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                edges.push([a, b]);
            }
        }
        Ok(Self::assemble(n, edges, triangles))
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n {
            return Err(HdxError::Parameter(format!(
                "{} labels for {} vertices",
                labels.len(),
                self.n
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn num_vertices(&self) -> usize {
        self.n
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn num_triangles(&self) -> usize {
        self.triangles.len()
    }

    /// `(|V|, |E|, |T|)`.
    pub fn counts(&self) -> (usize, usize, usize) {
        (self.n, self.edges.len(), self.triangles.len())
    }

    /// Number of faces of dimension `dim` (0, 1 or 2).
    pub fn num_faces(&self, dim: usize) -> usize {
        match dim {
            0 => self.n,
            1 => self.edges.len(),
            2 => self.triangles.len(),
            _ => 0,
        }
    }

    pub fn edges(&self) -> &[[usize; 2]] {
        &self.edges
    }

    pub fn triangles(&self) -> &[[usize; 3]] {
        &self.triangles
    }

    pub fn edge(&self, index: usize) -> [usize; 2] {
        self.edges[index]
    }

    pub fn triangle(&self, index: usize) -> [usize; 3] {
        self.triangles[index]
    }

    pub fn edge_id(&self, u: usize, v: usize) -> Option<usize> {
        self.edge_lookup.get(&sort2(u, v)).copied()
    }

    pub fn vertex_edges(&self, v: usize) -> &[usize] {
        &self.vertex_edges[v]
    }

    pub fn edge_triangles(&self, e: usize) -> &[usize] {
        &self.edge_triangles[e]
    }

    /// The three edge indices of triangle `t`.
    ///
    /// Panics if a side of `t` is missing, which only happens for complexes
    /// built with [`Complex2::from_parts_unchecked`].
    pub fn triangle_edges(&self, t: usize) -> [usize; 3] {
        let sides = self.triangle_edges[t];
        sides.map(|s| s.unwrap_or_else(|| panic!("triangle {t} violates closure")))
    }

    pub fn degree_profile(&self) -> DegreeProfile {
        let vertex_edge_degrees: Vec<usize> = self.vertex_edges.iter().map(Vec::len).collect();
        let edge_triangle_degrees: Vec<usize> = self.edge_triangles.iter().map(Vec::len).collect();
        let regular = match (
            constant(&vertex_edge_degrees),
            constant(&edge_triangle_degrees),
        ) {
            (Some(k0), Some(k1)) => Some((k0, k1)),
            _ => None,
        };
        DegreeProfile {
            vertex_edge_degrees,
            edge_triangle_degrees,
            regular,
        }
    }

    /// `(k0, k1)` or a regularity error.
    pub fn regularity(&self) -> Result<(usize, usize)> {
        self.degree_profile()
            .regular
            .ok_or_else(|| HdxError::NotRegular("complex is not (k0, k1)-regular".into()))
    }

    /// Checks closure, canonical form, duplicates and incidence consistency.
    pub fn validate(&self) -> ValidationReport {
        let mut findings = Vec::new();
        let mut seen_edges = HashSet::new();
        for (i, e) in self.edges.iter().enumerate() {
            if e[0] >= self.n || e[1] >= self.n {
                findings.push(Finding::VertexOutOfRange { face: e.to_vec() });
            }
            if e[0] == e[1] {
                findings.push(Finding::DegenerateFace { face: e.to_vec() });
            } else if e[0] > e[1] {
                findings.push(Finding::UnsortedFace { face: e.to_vec() });
            }
            if !seen_edges.insert(sort2(e[0], e[1])) {
                findings.push(Finding::DuplicateFace {
                    face: e.to_vec(),
                    index: i,
                });
            }
        }
        let mut seen_triangles = HashSet::new();
        for (i, t) in self.triangles.iter().enumerate() {
            if t.iter().any(|&v| v >= self.n) {
                findings.push(Finding::VertexOutOfRange { face: t.to_vec() });
            }
            if t[0] == t[1] || t[0] == t[2] || t[1] == t[2] {
                findings.push(Finding::DegenerateFace { face: t.to_vec() });
                continue;
            }
            if !(t[0] < t[1] && t[1] < t[2]) {
                findings.push(Finding::UnsortedFace { face: t.to_vec() });
            }
            let sorted = sort3(*t);
            if !seen_triangles.insert(sorted) {
                findings.push(Finding::DuplicateFace {
                    face: t.to_vec(),
                    index: i,
                });
            }
            for side in sides(&sorted) {
                if !seen_edges.contains(&side) {
                    findings.push(Finding::ClosureViolation {
                        triangle: t.to_vec(),
                        missing_edge: side.to_vec(),
                    });
                }
            }
        }
        if findings
            .iter()
            .all(|f| !matches!(f, Finding::VertexOutOfRange { .. }))
        {
            let (lookup, vertex_edges, edge_triangles, triangle_edges) =
                build_incidence(self.n, &self.edges, &self.triangles);
            if lookup != self.edge_lookup {
                findings.push(Finding::IncidenceMismatch { map: "edge lookup" });
            }
            if vertex_edges != self.vertex_edges {
                findings.push(Finding::IncidenceMismatch {
                    map: "vertex to edges",
                });
            }
            if edge_triangles != self.edge_triangles {
                findings.push(Finding::IncidenceMismatch {
                    map: "edge to triangles",
                });
            }
            if triangle_edges != self.triangle_edges {
                findings.push(Finding::IncidenceMismatch {
                    map: "triangle to edges",
                });
            }
        }
        ValidationReport { findings }
    }

    pub fn to_document(&self) -> ComplexDocument {
        ComplexDocument {
            vertices: Some((0..self.n as u64).map(VertexToken::Id).collect()),
            edges: self
                .edges
                .iter()
                .map(|e| e.iter().map(|&v| VertexToken::Id(v as u64)).collect())
                .collect(),
            triangles: self
                .triangles
                .iter()
                .map(|t| t.iter().map(|&v| VertexToken::Id(v as u64)).collect())
                .collect(),
            labels: self
                .labels
                .as_ref()
                .map(|l| l.iter().cloned().enumerate().collect()),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_document()).expect("complex document serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: ComplexDocument =
            serde_json::from_str(text).map_err(|e| HdxError::Parse(e.to_string()))?;
        doc.into_complex()
    }
}

type Incidence = (
    HashMap<[usize; 2], usize>,
    Vec<Vec<usize>>,
    Vec<Vec<usize>>,
    Vec<[Option<usize>; 3]>,
);

fn build_incidence(n: usize, edges: &[[usize; 2]], triangles: &[[usize; 3]]) -> Incidence {
    let mut lookup = HashMap::with_capacity(edges.len());
    let mut vertex_edges = vec![Vec::new(); n];
    for (i, e) in edges.iter().enumerate() {
        lookup.entry(sort2(e[0], e[1])).or_insert(i);
        for &v in e {
            if v < n {
                vertex_edges[v].push(i);
            }
        }
    }
    let mut edge_triangles = vec![Vec::new(); edges.len()];
    let mut triangle_edges = Vec::with_capacity(triangles.len());
    for (i, t) in triangles.iter().enumerate() {
        let ids = sides(&sort3(*t)).map(|s| lookup.get(&s).copied());
        for id in ids.iter().flatten() {
            edge_triangles[*id].push(i);
        }
        triangle_edges.push(ids);
    }
    (lookup, vertex_edges, edge_triangles, triangle_edges)
}

/// Maps a 64-bit output to `[0, 1)` using its top 53 bits.
pub(crate) fn unit_f64(x: u64) -> f64 {
    (x >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Finding {
    ClosureViolation {
        triangle: Vec<usize>,
        missing_edge: Vec<usize>,
    },
    DuplicateFace {
        face: Vec<usize>,
        index: usize,
    },
    DegenerateFace {
        face: Vec<usize>,
    },
    UnsortedFace {
        face: Vec<usize>,
    },
    VertexOutOfRange {
        face: Vec<usize>,
    },
    IncidenceMismatch {
        map: &'static str,
    },
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub findings: Vec<Finding>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.findings.is_empty()
    }
}

/// A vertex reference in a complex file: a dense id or an arbitrary label.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(untagged)]
pub enum VertexToken {
    Id(u64),
    Label(String),
}

/// On-disk form of a complex.
///
/// `edges` lists extra edges beyond those implied by `triangles`. If any
/// token is a string, tokens are labels and receive dense ids in order of
/// first appearance (`vertices`, then `triangles`, then `edges`); otherwise
/// tokens are the ids themselves and `labels` optionally names them.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vertices: Option<Vec<VertexToken>>,
    #[serde(default)]
    pub edges: Vec<Vec<VertexToken>>,
    #[serde(default)]
    pub triangles: Vec<Vec<VertexToken>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<BTreeMap<usize, String>>,
}

impl ComplexDocument {
    fn tokens(&self) -> impl Iterator<Item = &VertexToken> {
        self.vertices
            .iter()
            .flatten()
            .chain(self.triangles.iter().flatten())
            .chain(self.edges.iter().flatten())
    }

    /// Resolves tokens to dense ids, returning the faces, vertex count and labels.
    #[allow(clippy::type_complexity)]
    pub fn resolve(
        &self,
    ) -> Result<(usize, Vec<[usize; 3]>, Vec<[usize; 2]>, Option<Vec<String>>)> {
        let labelled = self.tokens().any(|t| matches!(t, VertexToken::Label(_)));
        let mut ids: HashMap<&VertexToken, usize> = HashMap::new();
        let mut names: Vec<String> = Vec::new();
        let mut n = 0usize;
        if labelled {
            if self.labels.is_some() {
                return Err(HdxError::Parse(
                    "`labels` map cannot be combined with string vertex labels".into(),
                ));
            }
            for t in self.tokens() {
                if !ids.contains_key(t) {
                    ids.insert(t, names.len());
                    names.push(match t {
                        VertexToken::Id(i) => i.to_string(),
                        VertexToken::Label(s) => s.clone(),
                    });
                }
            }
            n = names.len();
        } else {
            for t in self.tokens() {
                if let VertexToken::Id(i) = t {
                    n = n.max(*i as usize + 1);
                }
            }
        }
        let id = |t: &VertexToken| -> usize {
            match t {
                VertexToken::Id(i) if !labelled => *i as usize,
                _ => ids[t],
            }
        };
        let mut triangles = Vec::with_capacity(self.triangles.len());
        for t in &self.triangles {
            let face: [usize; 3] = t
                .iter()
                .map(id)
                .collect::<Vec<_>>()
                .try_into()
                .map_err(|_| HdxError::Parse(format!("triangle {t:?} does not have 3 vertices")))?;
            triangles.push(face);
        }
        let mut edges = Vec::with_capacity(self.edges.len());
        for e in &self.edges {
            let face: [usize; 2] = e
                .iter()
                .map(id)
                .collect::<Vec<_>>()
                .try_into()
                .map_err(|_| HdxError::Parse(format!("edge {e:?} does not have 2 vertices")))?;
            edges.push(face);
        }
        let labels = if labelled {
            Some(names)
        } else if let Some(map) = &self.labels {
            if let Some(max) = map.keys().next_back() {
                n = n.max(max + 1);
            }
            Some(
                (0..n)
                    .map(|i| map.get(&i).cloned().unwrap_or_else(|| i.to_string()))
                    .collect(),
            )
        } else {
            None
        };
        Ok((n, triangles, edges, labels))
    }

    pub fn into_complex(self) -> Result<Complex2> {
        let (n, triangles, edges, labels) = self.resolve()?;
        let complex = Complex2::build_with_vertices(n, &triangles, &edges)?;
        match labels {
            Some(l) => complex.with_labels(l),
            None => Ok(complex),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_input_gives_empty_complex() {
        let x = Complex2::build_from_triangles(&[], &[]).unwrap();
        assert_eq!(x.counts(), (0, 0, 0));
        assert!(x.validate().is_valid());
    }

    #[test]
    fn single_triangle_closes() {
        let x = Complex2::build_from_triangles(&[[2, 0, 1]], &[]).unwrap();
        assert_eq!(x.counts(), (3, 3, 1));
        assert_eq!(x.triangle(0), [0, 1, 2]);
        assert_eq!(x.degree_profile().regular, Some((2, 1)));
    }

    #[test]
    fn all_triples_of_four_vertices() {
        let x = Complex2::build_from_triangles(&[[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]], &[])
            .unwrap();
        assert_eq!(x.counts(), (4, 6, 4));
        assert_eq!(x, Complex2::complete(4));
    }

    #[test]
    fn duplicate_and_degenerate_faces_rejected() {
        let err = Complex2::build_from_triangles(&[[0, 1, 2], [2, 1, 0]], &[]).unwrap_err();
        assert_eq!(err, HdxError::DuplicateFace(vec![0, 1, 2]));
        let err = Complex2::build_from_triangles(&[[0, 0, 2]], &[]).unwrap_err();
        assert!(matches!(err, HdxError::InvalidFace(_)));
        let err = Complex2::build_from_triangles(&[], &[[3, 3]]).unwrap_err();
        assert!(matches!(err, HdxError::InvalidFace(_)));
    }

    #[test]
    fn extra_edges_and_isolated_vertices() {
        let x = Complex2::build_with_vertices(6, &[[0, 1, 2]], &[[3, 4], [1, 0]]).unwrap();
        assert_eq!(x.counts(), (6, 4, 1));
        assert!(x.vertex_edges(5).is_empty());
        assert!(x.validate().is_valid());
        assert_eq!(x.degree_profile().regular, None);
    }

    #[test]
    fn complete_counts_and_regularity() {
        for (n, counts, reg) in [
            (3, (3, 3, 1), (2, 1)),
            (4, (4, 6, 4), (3, 2)),
            (5, (5, 10, 10), (4, 3)),
        ] {
            let x = Complex2::complete(n);
            assert_eq!(x.counts(), counts);
            assert_eq!(x.degree_profile().regular, Some(reg));
        }
    }

    #[test]
    fn complete_edge_count_identity() {
        for n in 2..=12 {
            let x = Complex2::complete(n);
            let p = x.degree_profile();
            assert_eq!(
                p.vertex_edge_degrees.iter().sum::<usize>(),
                2 * x.num_edges()
            );
            assert_eq!(
                p.edge_triangle_degrees.iter().sum::<usize>(),
                3 * x.num_triangles()
            );
            let (k0, _) = p.regular.unwrap();
            assert_eq!(2 * x.num_edges(), k0 * n);
        }
    }

    #[test]
    fn random_complex_extremes_and_determinism() {
        assert_eq!(Complex2::random(5, 1.0, 11).unwrap(), Complex2::complete(5));
        let empty = Complex2::random(5, 0.0, 11).unwrap();
        assert_eq!(empty.counts(), (5, 10, 0));
        assert_eq!(
            Complex2::random(6, 0.5, 7).unwrap(),
            Complex2::random(6, 0.5, 7).unwrap()
        );
        assert!(Complex2::random(4, 1.5, 0).is_err());
        assert!(Complex2::random(4, -0.1, 0).is_err());
    }

    #[test]
    fn random_complex_varies_with_seed() {
        let differing = (0..100u64)
            .filter(|&s| {
                Complex2::random(6, 0.5, s).unwrap() != Complex2::random(6, 0.5, s + 1000).unwrap()
            })
            .count();
        assert!(differing >= 1);
    }

    #[test]
    fn missing_side_is_a_closure_violation() {
        let x = Complex2::from_parts_unchecked(3, vec![[0, 2], [1, 2]], vec![[0, 1, 2]]);
        let report = x.validate();
        assert!(report.findings.contains(&Finding::ClosureViolation {
            triangle: vec![0, 1, 2],
            missing_edge: vec![0, 1],
        }));
    }

    #[test]
    fn corrupted_incidence_is_reported() {
        let mut x = Complex2::complete(4);
        x.edge_triangles[0].pop();
        let report = x.validate();
        assert_eq!(
            report.findings,
            vec![Finding::IncidenceMismatch {
                map: "edge to triangles"
            }]
        );
    }

    #[test]
    fn json_round_trip_keeps_faces() {
        let x = Complex2::build_with_vertices(7, &[[0, 1, 2], [1, 2, 4]], &[[5, 3]]).unwrap();
        let y = Complex2::from_json(&x.to_json()).unwrap();
        assert_eq!(x, y);
        assert_eq!(y.num_vertices(), 7);
    }

    #[test]
    fn string_labels_map_to_dense_ids() {
        let text = r#"{"triangles": [["a", "b", "c"], ["b", "c", "d"]], "edges": [["d", "e"]]}"#;
        let x = Complex2::from_json(text).unwrap();
        assert_eq!(x.counts(), (5, 6, 2));
        assert_eq!(x.labels().unwrap(), &["a", "b", "c", "d", "e"]);
        let y = Complex2::from_json(&x.to_json()).unwrap();
        assert_eq!(x, y);
        assert_eq!(y.labels(), x.labels());
    }

    #[test]
    fn malformed_documents_are_parse_errors() {
        assert!(matches!(
            Complex2::from_json(r#"{"triangles": [[0, 1]]}"#),
            Err(HdxError::Parse(_))
        ));
        assert!(matches!(
            Complex2::from_json("not json"),
            Err(HdxError::Parse(_))
        ));
        assert!(matches!(
            Complex2::from_json(r#"{"triangles": [], "bogus": 1}"#),
            Err(HdxError::Parse(_))
        ));
    }
}
