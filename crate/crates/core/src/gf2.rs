//! Word-packed GF(2) vectors and exact Gaussian elimination.

use std::cmp::Ordering;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BitVector {
    len: usize,
    words: Vec<u64>,
}

impl BitVector {
    pub fn zeros(len: usize) -> Self {
        BitVector {
            len,
            words: vec![0; len.div_ceil(64)],
        }
    }

    pub fn from_indices(len: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut v = Self::zeros(len);
        for i in indices {
            v.set(i);
        }
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn set(&mut self, i: usize) {
        assert!(i < self.len, "bit {i} out of range {}", self.len);
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub fn flip(&mut self, i: usize) {
        self.words[i / 64] ^= 1 << (i % 64);
    }

    pub fn xor_assign(&mut self, other: &BitVector) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Hamming distance without allocating.
    pub fn distance(&self, other: &BitVector) -> usize {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a ^ b).count_ones() as usize)
            .sum()
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * 64 + b)
            })
        })
    }

    pub fn first_one(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(wi, w)| wi * 64 + w.trailing_zeros() as usize)
    }

    /// Packs into a single word; requires `len <= 64`.
    pub fn to_u64(&self) -> u64 {
        assert!(self.len <= 64);
        self.words.first().copied().unwrap_or(0)
    }

    /// Lexicographic order of the sorted index lists of two sets.
    pub fn lex_cmp(&self, other: &BitVector) -> Ordering {
        self.ones().cmp(other.ones())
    }
}

/// Lexicographic comparison of the sorted index lists of two bit masks.
pub fn lex_cmp_u64(a: u64, b: u64) -> Ordering {
    let diff = a ^ b;
    if diff == 0 {
        return Ordering::Equal;
    }
    let low = diff.trailing_zeros();
    let above = if low == 63 { 0 } else { !0u64 << (low + 1) };
    // The set holding the lowest differing index is smaller, unless the
    // other set ends right there (it is then a proper prefix).
    let a_holds = a >> low & 1 == 1;
    let lacking = if a_holds { b } else { a };
    let holder_smaller = lacking & above != 0;
    if a_holds == holder_smaller {
        Ordering::Less
    } else {
        Ordering::Greater
    }
}

/// Row-echelon reduction; returns the independent reduced rows and their pivots.
fn echelon(rows: &[BitVector], ncols: usize) -> (Vec<BitVector>, Vec<usize>) {
    let mut rows: Vec<BitVector> = rows.to_vec();
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..ncols {
        let Some(p) = (rank..rows.len()).find(|&r| rows[r].get(col)) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row.get(col) {
                row.xor_assign(&pivot);
            }
        }
        pivots.push(col);
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rows.truncate(rank);
    (rows, pivots)
}

pub fn rank(rows: &[BitVector], ncols: usize) -> usize {
    echelon(rows, ncols).0.len()
}

/// Basis of the span of `rows`, in reduced echelon form.
pub fn span_basis(rows: &[BitVector], ncols: usize) -> Vec<BitVector> {
    echelon(rows, ncols).0
}

/// Basis of `{x : M x = 0}` where `M` has the given rows over `ncols` columns.
pub fn kernel_basis(rows: &[BitVector], ncols: usize) -> Vec<BitVector> {
    let (reduced, pivots) = echelon(rows, ncols);
    let mut is_pivot = vec![false; ncols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    (0..ncols)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut x = BitVector::zeros(ncols);
            x.set(free);
            for (row, &p) in reduced.iter().zip(&pivots) {
                if row.get(free) {
                    x.set(p);
                }
            }
            x
        })
        .collect()
}

/// Whether `v` lies in the span of an echelon basis produced by [`span_basis`].
pub fn in_span(basis: &[BitVector], v: &BitVector) -> bool {
    let mut r = v.clone();
    for b in basis {
        let p = b.first_one().expect("basis vectors are nonzero");
        if r.get(p) {
            r.xor_assign(b);
        }
    }
    r.is_zero()
}
