use std::collections::BTreeMap;

use super::rational::Rational;

/// Sparse vector as strictly increasing `(index, nonzero value)` pairs.
pub type SparseVec = Vec<(usize, Rational)>;

pub fn sparse_from_dense(v: &[Rational]) -> SparseVec {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| (i, x.clone()))
        .collect()
}

/// `a + c * b` for sparse vectors.
fn sparse_axpy(a: &SparseVec, c: &Rational, b: &SparseVec) -> SparseVec {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let ia = a.get(i).map_or(usize::MAX, |e| e.0);
        let jb = b.get(j).map_or(usize::MAX, |e| e.0);
        if ia < jb {
            out.push(a[i].clone());
            i += 1;
        } else if jb < ia {
            out.push((jb, c * &b[j].1));
            j += 1;
        } else {
            let v = &a[i].1 + &(c * &b[j].1);
            if !v.is_zero() {
                out.push((ia, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Incrementally maintained echelon basis of a span of sparse vectors.
///
/// Used for ranks of tall matrices given column by column, where a dense
/// elimination would be wasteful.
#[derive(Default, Debug, Clone)]
pub struct EchelonBasis {
    rows: BTreeMap<usize, SparseVec>,
}

impl EchelonBasis {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the basis; returns the remainder (empty when `v`
    /// lies in the span).
    pub fn reduce(&self, mut v: SparseVec) -> SparseVec {
        let mut start = 0;
        loop {
            let Some(pos) = v[start..].iter().position(|(i, _)| self.rows.contains_key(i)) else {
                return v;
            };
            let pos = start + pos;
            let (lead, c) = (v[pos].0, v[pos].1.clone());
            v = sparse_axpy(&v, &-c, &self.rows[&lead]);
            start = v.partition_point(|(i, _)| *i <= lead);
        }
    }

    /// Adds `v` to the span; returns whether the rank grew.
    pub fn insert(&mut self, v: SparseVec) -> bool {
        let r = self.reduce(v);
        let Some((lead, c)) = r.first().cloned() else {
            return false;
        };
        let inv = c.recip().expect("nonzero leading entry");
        let r = r.into_iter().map(|(i, x)| (i, x * &inv)).collect();
        self.rows.insert(lead, r);
        true
    }

    pub fn contains(&self, v: SparseVec) -> bool {
        self.reduce(v).is_empty()
    }
}

/// Rank of the span of the given sparse vectors.
pub fn sparse_rank(vectors: impl IntoIterator<Item = SparseVec>) -> usize {
    let mut b = EchelonBasis::new();
    for v in vectors {
        b.insert(v);
    }
    b.rank()
}
