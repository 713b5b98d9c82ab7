use std::collections::BTreeSet;

use crate::complex::Complex2;
use crate::error::{HdxError, Result};
use crate::walk::high_order_neighbors;

/// A finite simple undirected graph on `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph from an edge list, rejecting loops and parallel edges.
    pub fn from_edges(n: usize, edges: &[[usize; 2]]) -> Result<Self> {
        let mut seen = BTreeSet::new();
        let mut adjacency = vec![Vec::new(); n];
        for &[u, v] in edges {
            if u >= n || v >= n {
                return Err(HdxError::IndexOutOfRange {
                    what: "vertex",
                    index: u.max(v),
                    size: n,
                });
            }
            if u == v {
                return Err(HdxError::InvalidFace(vec![u, v]));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(HdxError::DuplicateFace(vec![u.min(v), u.max(v)]));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok(Graph { adjacency })
    }

    pub(crate) fn from_sorted_adjacency(adjacency: Vec<Vec<usize>>) -> Self {
        debug_assert!(adjacency.iter().all(|l| l.windows(2).all(|w| w[0] < w[1])));
        Graph { adjacency }
    }

    pub fn complete(n: usize) -> Self {
        Graph {
            adjacency: (0..n)
                .map(|v| (0..n).filter(|&u| u != v).collect())
                .collect(),
        }
    }

    pub fn cycle(n: usize) -> Self {
        let edges: Vec<[usize; 2]> = (0..n).map(|i| [i, (i + 1) % n]).collect();
        Self::from_edges(n, &edges).expect("cycle needs n >= 3")
    }

    pub fn n(&self) -> usize {
        self.adjacency.len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    /// The common degree, if every vertex has the same one.
    pub fn regular_k(&self) -> Option<usize> {
        let k = self.adjacency.first()?.len();
        self.adjacency.iter().all(|l| l.len() == k).then_some(k)
    }

    pub fn require_regular(&self) -> Result<usize> {
        self.regular_k()
            .ok_or_else(|| HdxError::NotRegular("graph is not regular".into()))
    }

    pub fn num_edges(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn edges(&self) -> Vec<[usize; 2]> {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(v, l)| l.iter().filter(move |&&u| u > v).map(move |&u| [v, u]))
            .collect()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Adjacency rows as bit masks; requires `n <= 64`.
    pub fn adjacency_masks(&self) -> Result<Vec<u64>> {
        if self.n() > 64 {
            return Err(HdxError::capacity("vertex count", self.n(), 64));
        }
        Ok(self
            .adjacency
            .iter()
            .map(|l| l.iter().fold(0u64, |m, &u| m | 1 << u))
            .collect())
    }

    /// Dense adjacency matrix, row-major.
    pub fn dense_adjacency(&self) -> Vec<f64> {
        let n = self.n();
        let mut a = vec![0.0; n * n];
        for (v, l) in self.adjacency.iter().enumerate() {
            for &u in l {
                a[v * n + u] = 1.0;
            }
        }
        a
    }

    /// `|E(S, S̄)|` for a vertex mask.
    pub fn cut_size(&self, masks: &[u64], set: u64) -> u32 {
        let mut cut = 0;
        let mut rest = set;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            cut += (masks[v] & !set).count_ones();
        }
        cut
    }

    /// `2|E(S)|` for a vertex mask.
    pub fn twice_inner_edges(&self, masks: &[u64], set: u64) -> u32 {
        let mut inner = 0;
        let mut rest = set;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            inner += (masks[v] & set).count_ones();
        }
        inner
    }
}

/// G₀(X): the complex with its triangles forgotten.
pub fn underlying_graph(x: &Complex2) -> Graph {
    let mut adjacency = vec![Vec::new(); x.num_vertices()];
    for e in x.edges() {
        adjacency[e[0]].push(e[1]);
        adjacency[e[1]].push(e[0]);
    }
    for l in &mut adjacency {
        l.sort_unstable();
    }
    Graph::from_sorted_adjacency(adjacency)
}

/// G₁(X) together with the correspondence between its vertices and X's edges.
#[derive(Debug, Clone)]
pub struct EdgeGraphMap {
    pub graph: Graph,
    pub to_edge: Vec<usize>,
    pub from_edge: Vec<usize>,
}

impl EdgeGraphMap {
    pub fn edge_of(&self, vertex: usize) -> usize {
        self.to_edge[vertex]
    }

    pub fn vertex_of(&self, edge: usize) -> usize {
        self.from_edge[edge]
    }
}

/// The edge-graph: one vertex per edge of `x`, two adjacent iff their union
/// is a triangle of `x`.
pub fn edge_graph(x: &Complex2) -> EdgeGraphMap {
    let adjacency = (0..x.num_edges())
        .map(|e| high_order_neighbors(x, e))
        .collect();
    let identity: Vec<usize> = (0..x.num_edges()).collect();
    EdgeGraphMap {
        graph: Graph::from_sorted_adjacency(adjacency),
        to_edge: identity.clone(),
        from_edge: identity,
    }
}
