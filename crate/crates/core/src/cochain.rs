//! GF(2) cochains on a [`Complex2`]: coboundary maps, cocycle and coboundary
//! spaces, local views, and Hamming distances to code spaces.

use std::cmp::Ordering;
use std::collections::VecDeque;

use serde::{Serialize, Serializer};

use crate::complex::Complex2;
use crate::error::{HdxError, Result};
use crate::gf2::{self, BitVector};

/// Default cap on the dimension of a code space enumerated by
/// [`distance_to_space`].
pub const DEFAULT_ENUMERATION_LIMIT: usize = 24;

/// A set of faces of one dimension, i.e. a GF(2) cochain.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Chain {
    dim: usize,
    members: Vec<usize>,
}

impl Chain {
    pub fn new(dim: usize, members: impl IntoIterator<Item = usize>) -> Self {
        let mut members: Vec<usize> = members.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        Chain { dim, members }
    }

    pub fn empty(dim: usize) -> Self {
        Chain {
            dim,
            members: Vec::new(),
        }
    }

    pub fn vertices(members: impl IntoIterator<Item = usize>) -> Self {
        Self::new(0, members)
    }

    pub fn edges(members: impl IntoIterator<Item = usize>) -> Self {
        Self::new(1, members)
    }

    /// Chain of the faces whose bits are set in `mask`.
    pub fn from_mask(dim: usize, mask: u64) -> Self {
        Chain {
            dim,
            members: (0..64).filter(|i| mask >> i & 1 == 1).collect(),
        }
    }

    pub(crate) fn from_bits(dim: usize, bits: &BitVector) -> Self {
        Chain {
            dim,
            members: bits.ones().collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, index: usize) -> bool {
        self.members.binary_search(&index).is_ok()
    }

    /// GF(2) sum.
    pub fn symmetric_difference(&self, other: &Chain) -> Result<Chain> {
        check_same_dim(self, other)?;
        let (a, b) = (&self.members, &other.members);
        let (mut i, mut j) = (0, 0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Ok(Chain {
            dim: self.dim,
            members: out,
        })
    }

    pub fn to_mask(&self) -> u64 {
        self.members.iter().fold(0u64, |m, &i| {
            assert!(i < 64, "chain index {i} does not fit a 64-bit mask");
            m | 1 << i
        })
    }

    pub(crate) fn to_bits(&self, len: usize) -> BitVector {
        BitVector::from_indices(len, self.members.iter().copied())
    }

    /// Checks that the chain indexes faces of `dim` in `x`.
    pub fn check(&self, x: &Complex2, dim: usize) -> Result<()> {
        if self.dim != dim {
            return Err(HdxError::DimensionMismatch(self.dim, dim));
        }
        let size = x.num_faces(dim);
        match self.members.last() {
            Some(&last) if last >= size => Err(HdxError::IndexOutOfRange {
                what: face_name(dim),
                index: last,
                size,
            }),
            _ => Ok(()),
        }
    }
}

impl Serialize for Chain {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.members.serialize(serializer)
    }
}

fn face_name(dim: usize) -> &'static str {
    match dim {
        0 => "vertex",
        1 => "edge",
        2 => "triangle",
        _ => "face",
    }
}

fn check_same_dim(a: &Chain, b: &Chain) -> Result<()> {
    if a.dim != b.dim {
        return Err(HdxError::DimensionMismatch(a.dim, b.dim));
    }
    Ok(())
}

fn check_cochain_dim(dim: usize) -> Result<()> {
    if dim > 1 {
        return Err(HdxError::Domain(format!(
            "cochain dimension {dim} not in {{0, 1}}"
        )));
    }
    Ok(())
}

/// δ(S): the edges with exactly one endpoint in `s`.
pub fn coboundary_vertices(x: &Complex2, s: &Chain) -> Result<Chain> {
    s.check(x, 0)?;
    let mut inside = vec![false; x.num_vertices()];
    for &v in s.members() {
        inside[v] = true;
    }
    Ok(Chain {
        dim: 1,
        members: x
            .edges()
            .iter()
            .enumerate()
            .filter(|(_, e)| inside[e[0]] != inside[e[1]])
            .map(|(i, _)| i)
            .collect(),
    })
}

/// δ(F): the triangles containing an odd number of edges of `f`.
pub fn coboundary_edges(x: &Complex2, f: &Chain) -> Result<Chain> {
    f.check(x, 1)?;
    let mut parity = vec![false; x.num_triangles()];
    for &e in f.members() {
        for &t in x.edge_triangles(e) {
            parity[t] ^= true;
        }
    }
    Ok(Chain {
        dim: 2,
        members: (0..parity.len()).filter(|&t| parity[t]).collect(),
    })
}

/// Coboundary of a chain of dimension 0 or 1.
pub fn coboundary(x: &Complex2, chain: &Chain) -> Result<Chain> {
    match chain.dim {
        0 => coboundary_vertices(x, chain),
        1 => coboundary_edges(x, chain),
        d => Err(HdxError::Domain(format!(
            "no coboundary map from dimension {d}"
        ))),
    }
}

/// F_v: the edges of `f` incident to `v`.
pub fn local_view(x: &Complex2, f: &Chain, v: usize) -> Result<Chain> {
    f.check(x, 1)?;
    if v >= x.num_vertices() {
        return Err(HdxError::IndexOutOfRange {
            what: "vertex",
            index: v,
            size: x.num_vertices(),
        });
    }
    Ok(Chain {
        dim: 1,
        members: f
            .members()
            .iter()
            .copied()
            .filter(|&e| x.edge(e).contains(&v))
            .collect(),
    })
}

/// Rows of the matrix of δ^dim: one row per face of dimension `dim + 1`.
pub(crate) fn coboundary_rows(x: &Complex2, dim: usize) -> Vec<BitVector> {
    match dim {
        0 => x
            .edges()
            .iter()
            .map(|e| BitVector::from_indices(x.num_vertices(), e.iter().copied()))
            .collect(),
        1 => (0..x.num_triangles())
            .map(|t| BitVector::from_indices(x.num_edges(), x.triangle_edges(t)))
            .collect(),
        _ => unreachable!("checked by caller"),
    }
}

/// Columns of δ^dim, i.e. the coboundary of each single face, packed into
/// 64-bit masks over faces of dimension `dim + 1`.
pub(crate) fn coboundary_masks(x: &Complex2, dim: usize) -> Result<Vec<u64>> {
    let targets = x.num_faces(dim + 1);
    if targets > 64 {
        return Err(HdxError::capacity(
            format!("number of {}s", face_name(dim + 1)),
            targets,
            64,
        ));
    }
    Ok(match dim {
        0 => (0..x.num_vertices())
            .map(|v| x.vertex_edges(v).iter().fold(0u64, |m, &e| m | 1 << e))
            .collect(),
        1 => (0..x.num_edges())
            .map(|e| x.edge_triangles(e).iter().fold(0u64, |m, &t| m | 1 << t))
            .collect(),
        _ => unreachable!("checked by caller"),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SpaceKind {
    /// Cocycles, the kernel of δ.
    Z,
    /// Coboundaries, the image of the previous δ.
    B,
}

/// A GF(2) subspace of the cochains of one dimension.
#[derive(Debug, Clone)]
pub struct CodeSpace {
    dim: usize,
    kind: SpaceKind,
    ambient: usize,
    basis: Vec<BitVector>,
    echelon: Vec<BitVector>,
}

impl CodeSpace {
    fn new(dim: usize, kind: SpaceKind, ambient: usize, basis: Vec<BitVector>) -> Self {
        let echelon = gf2::span_basis(&basis, ambient);
        debug_assert_eq!(echelon.len(), basis.len(), "basis must be independent");
        CodeSpace {
            dim,
            kind,
            ambient,
            basis,
            echelon,
        }
    }

    pub fn face_dim(&self) -> usize {
        self.dim
    }

    pub fn kind(&self) -> SpaceKind {
        self.kind
    }

    /// Number of faces the codewords live on.
    pub fn ambient_len(&self) -> usize {
        self.ambient
    }

    /// GF(2) dimension of the space.
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> Vec<Chain> {
        self.basis
            .iter()
            .map(|b| Chain::from_bits(self.dim, b))
            .collect()
    }

    pub fn contains(&self, chain: &Chain) -> bool {
        chain.dim == self.dim
            && chain.members.last().is_none_or(|&m| m < self.ambient)
            && gf2::in_span(&self.echelon, &chain.to_bits(self.ambient))
    }

    /// All codewords as 64-bit masks, in Gray-code order starting from zero.
    pub fn codeword_masks(&self, limit: usize) -> Result<Vec<u64>> {
        self.check_enumerable(limit)?;
        if self.ambient > 64 {
            return Err(HdxError::capacity("codeword length", self.ambient, 64));
        }
        let basis: Vec<u64> = self.basis.iter().map(BitVector::to_u64).collect();
        let mut out = Vec::with_capacity(1 << basis.len());
        let mut cur = 0u64;
        out.push(cur);
        for i in 1u64..1 << basis.len() {
            cur ^= basis[i.trailing_zeros() as usize];
            out.push(cur);
        }
        Ok(out)
    }

    fn check_enumerable(&self, limit: usize) -> Result<()> {
        if self.dimension() > limit {
            return Err(HdxError::capacity(
                "code space dimension",
                self.dimension(),
                limit,
            ));
        }
        Ok(())
    }
}

/// Basis of Z^dim, the kernel of δ^dim.
pub fn cocycle_space(x: &Complex2, dim: usize) -> Result<CodeSpace> {
    check_cochain_dim(dim)?;
    let ambient = x.num_faces(dim);
    let basis = gf2::kernel_basis(&coboundary_rows(x, dim), ambient);
    Ok(CodeSpace::new(dim, SpaceKind::Z, ambient, basis))
}

/// Basis of B^dim: `{∅, V}` for dimension 0, the cuts δ(S) for dimension 1.
pub fn coboundary_space(x: &Complex2, dim: usize) -> Result<CodeSpace> {
    check_cochain_dim(dim)?;
    let ambient = x.num_faces(dim);
    let basis = match dim {
        0 if ambient == 0 => Vec::new(),
        0 => vec![BitVector::from_indices(ambient, 0..ambient)],
        _ => {
            let stars: Vec<BitVector> = (0..x.num_vertices())
                .map(|v| BitVector::from_indices(ambient, x.vertex_edges(v).iter().copied()))
                .collect();
            gf2::span_basis(&stars, ambient)
        }
    };
    Ok(CodeSpace::new(dim, SpaceKind::B, ambient, basis))
}

/// `|S \ T| + |T \ S|`.
pub fn set_distance(s: &Chain, t: &Chain) -> Result<usize> {
    Ok(s.symmetric_difference(t)?.len())
}

/// Minimum Hamming distance from `f` to the span of `space`, with the
/// lexicographically smallest nearest codeword. Enumerates all codewords,
/// so `space.dimension()` must not exceed `limit`.
pub fn distance_to_space(f: &Chain, space: &CodeSpace, limit: usize) -> Result<(usize, Chain)> {
    if f.dim != space.dim {
        return Err(HdxError::DimensionMismatch(f.dim, space.dim));
    }
    if let Some(&last) = f.members.last() {
        if last >= space.ambient {
            return Err(HdxError::IndexOutOfRange {
                what: face_name(f.dim),
                index: last,
                size: space.ambient,
            });
        }
    }
    space.check_enumerable(limit)?;
    let target = f.to_bits(space.ambient);
    let mut cur = BitVector::zeros(space.ambient);
    let mut best = cur.clone();
    let mut best_dist = target.distance(&cur);
    for i in 1u64..1 << space.dimension() {
        cur.xor_assign(&space.basis[i.trailing_zeros() as usize]);
        let d = target.distance(&cur);
        if d < best_dist || (d == best_dist && cur.lex_cmp(&best) == Ordering::Less) {
            best_dist = d;
            best = cur.clone();
        }
    }
    Ok((best_dist, Chain::from_bits(space.dim, &best)))
}

/// Distance to `space` of every cochain, indexed by its face mask.
///
/// Multi-source breadth-first search on the hypercube `{0,1}^len` seeded
/// with all codewords; `len` must be at most `max_bits`.
pub fn distance_table(space: &CodeSpace, max_bits: usize) -> Result<Vec<u8>> {
    let len = space.ambient;
    if len > max_bits {
        return Err(HdxError::capacity(
            format!("number of {}s", face_name(space.dim)),
            len,
            max_bits,
        ));
    }
    if len > 32 {
        return Err(HdxError::capacity("distance table width", len, 32));
    }
    let codewords = space.codeword_masks(len)?;
    let mut dist = vec![u8::MAX; 1usize << len];
    let mut queue = VecDeque::with_capacity(codewords.len());
    for &c in &codewords {
        dist[c as usize] = 0;
        queue.push_back(c as usize);
    }
    while let Some(m) = queue.pop_front() {
        let next = dist[m] + 1;
        for b in 0..len {
            let nb = m ^ (1 << b);
            if dist[nb] == u8::MAX {
                dist[nb] = next;
                queue.push_back(nb);
            }
        }
    }
    Ok(dist)
}
