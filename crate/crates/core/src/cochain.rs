//! Cochains on wedge-pair arguments, the circle product and the graded bracket.
//!
//! A cochain of degree `p` is a pair `(f, g)` with `f(X_1, …, X_p)` and
//! `g(X_1, …, X_p, z)`, each `X_m` ranging over `∧²L`. Degree counts wedge
//! slots, so a linear map is degree 0 (stored as `g` with no wedge slots and
//! an empty `f`), and the structure `Π = (π, ω)` is degree 1. The classical
//! Yamaguti complex numbers the same spaces one higher: its `C^{n+1}` is the
//! degree-`n` cochain here.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{check_dim, Error, Result};
use crate::exact::vector::{axpy, support, zeros};
use crate::exact::{Rational, SparseVec};
use crate::lya::{BilinearMap, LinearMap, LyAlgebra, TrilinearMap};

/// Number of basis pairs `i < j` in dimension `d`.
pub fn pair_count(d: usize) -> usize {
    d * d.saturating_sub(1) / 2
}

/// Index of the pair `(i, j)`, `i < j`, in lexicographic order.
pub fn pair_index(d: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < d);
    i * (2 * d - i - 1) / 2 + (j - i - 1)
}

/// All pairs `(i, j)` with `i < j`, indexed by [`pair_index`].
pub fn pairs(d: usize) -> Vec<(usize, usize)> {
    let mut v = Vec::with_capacity(pair_count(d));
    for i in 0..d {
        for j in i + 1..d {
            v.push((i, j));
        }
    }
    v
}

/// `u ∧ v` in the wedge-pair basis, as sparse `(pair index, coefficient)`.
pub fn wedge(d: usize, u: &[Rational], v: &[Rational]) -> SparseVec {
    let mut acc = zeros(pair_count(d));
    for (i, a) in support(u) {
        for (j, b) in support(v) {
            if i < j {
                acc[pair_index(d, i, j)] += a * b;
            } else if j < i {
                acc[pair_index(d, j, i)] -= a * b;
            }
        }
    }
    crate::exact::sparse_from_dense(&acc)
}

/// A `(p, q)`-shuffle: `perm[m]` is `σ(m + 1) − 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Shuffle {
    pub perm: Vec<usize>,
    pub sign: i8,
}

/// All `(p, q)`-shuffles, first block chosen in lexicographic order.
pub fn shuffles(p: usize, q: usize) -> Vec<Shuffle> {
    let n = p + q;
    let mut out = Vec::new();
    let mut chosen = Vec::with_capacity(p);
    fn rec(n: usize, p: usize, start: usize, chosen: &mut Vec<usize>, out: &mut Vec<Shuffle>) {
        if chosen.len() == p {
            let mut perm = chosen.clone();
            perm.extend((0..n).filter(|m| !chosen.contains(m)));
            let mut inv = 0usize;
            for a in 0..n {
                for b in a + 1..n {
                    if perm[a] > perm[b] {
                        inv += 1;
                    }
                }
            }
            out.push(Shuffle { perm, sign: if inv % 2 == 0 { 1 } else { -1 } });
            return;
        }
        for m in start..n {
            chosen.push(m);
            rec(n, p, m + 1, chosen, out);
            chosen.pop();
        }
    }
    rec(n, p, 0, &mut chosen, &mut out);
    out
}

fn sign_rational(negative: bool) -> Rational {
    if negative {
        Rational::from_integer(-1)
    } else {
        Rational::one()
    }
}

/// Which half of a cochain a coordinate belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Part {
    F,
    G,
}

/// Decoded coordinate of a cochain.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoordKey {
    pub part: Part,
    pub pairs: Vec<(usize, usize)>,
    pub z: Option<usize>,
    pub k: usize,
}

/// Cochain with values in a space of dimension `value_dim`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cochain {
    dim: usize,
    degree: usize,
    value_dim: usize,
    /// `f` coordinates followed by `g` coordinates.
    data: Vec<Rational>,
}

impl Cochain {
    pub fn zero(dim: usize, degree: usize, value_dim: usize) -> Self {
        let len = Self::f_len_for(dim, degree, value_dim) + Self::g_len_for(dim, degree, value_dim);
        Cochain { dim, degree, value_dim, data: zeros(len) }
    }

    fn tuples_for(dim: usize, degree: usize) -> usize {
        pair_count(dim).pow(degree as u32)
    }

    fn f_len_for(dim: usize, degree: usize, value_dim: usize) -> usize {
        if degree == 0 {
            0
        } else {
            Self::tuples_for(dim, degree) * value_dim
        }
    }

    fn g_len_for(dim: usize, degree: usize, value_dim: usize) -> usize {
        Self::tuples_for(dim, degree) * dim * value_dim
    }

    /// Total number of coordinates of a cochain of this shape.
    pub fn space_dim(dim: usize, degree: usize, value_dim: usize) -> usize {
        Self::f_len_for(dim, degree, value_dim) + Self::g_len_for(dim, degree, value_dim)
    }

    pub fn from_data(dim: usize, degree: usize, value_dim: usize, data: Vec<Rational>) -> Result<Self> {
        check_dim("cochain coordinates", Self::space_dim(dim, degree, value_dim), data.len())?;
        Ok(Cochain { dim, degree, value_dim, data })
    }

    /// Cochain with a single coordinate equal to one.
    pub fn unit(dim: usize, degree: usize, value_dim: usize, coord: usize) -> Self {
        let mut c = Cochain::zero(dim, degree, value_dim);
        c.data[coord] = Rational::one();
        c
    }

    /// Degree-0 cochain of a linear map `L → V`.
    pub fn from_linear_map(f: &LinearMap) -> Self {
        let (d, vd) = (f.src_dim(), f.dst_dim());
        let mut c = Cochain::zero(d, 0, vd);
        for z in 0..d {
            for k in 0..vd {
                c.data[z * vd + k] = f.matrix().get(k, z).clone();
            }
        }
        c
    }

    /// Degree-1 cochain `(π, ω)`.
    pub fn from_structure(pi: &BilinearMap, omega: &TrilinearMap) -> Self {
        let d = pi.dim();
        let mut c = Cochain::zero(d, 1, d);
        let fl = c.f_len();
        for (a, &(i, j)) in pairs(d).iter().enumerate() {
            c.data[a * d..(a + 1) * d].clone_from_slice(pi.basis(i, j));
            for z in 0..d {
                let s = fl + (a * d + z) * d;
                c.data[s..s + d].clone_from_slice(omega.basis(i, j, z));
            }
        }
        c
    }

    pub fn from_algebra(a: &LyAlgebra) -> Self {
        Self::from_structure(a.pi(), a.omega())
    }

    /// Inverse of [`Cochain::from_structure`] for degree-1 `L`-valued cochains.
    pub fn to_structure(&self) -> Result<(BilinearMap, TrilinearMap)> {
        if self.degree != 1 {
            return Err(Error::Invalid(format!("expected a degree-1 cochain, got degree {}", self.degree)));
        }
        check_dim("structure cochain values", self.dim, self.value_dim)?;
        let d = self.dim;
        let fl = self.f_len();
        let pi = BilinearMap::from_fn(d, |i, j| self.data[pair_index(d, i, j) * d..][..d].to_vec());
        let omega = TrilinearMap::from_fn(d, |i, j, z| {
            let s = fl + (pair_index(d, i, j) * d + z) * d;
            self.data[s..s + d].to_vec()
        });
        Ok((pi, omega))
    }

    /// Degree-0 cochain as a linear map.
    pub fn to_linear_map(&self) -> Result<LinearMap> {
        if self.degree != 0 {
            return Err(Error::Invalid(format!("expected a degree-0 cochain, got degree {}", self.degree)));
        }
        let images: Vec<Vec<Rational>> =
            (0..self.dim).map(|z| self.data[z * self.value_dim..(z + 1) * self.value_dim].to_vec()).collect();
        Ok(LinearMap::from_images(self.value_dim, &images))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn value_dim(&self) -> usize {
        self.value_dim
    }

    pub fn data(&self) -> &[Rational] {
        &self.data
    }

    pub fn len(&self) -> usize {
        self.data.len()
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    pub fn f_len(&self) -> usize {
        Self::f_len_for(self.dim, self.degree, self.value_dim)
    }

    pub fn tuples(&self) -> usize {
        Self::tuples_for(self.dim, self.degree)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Rational::is_zero)
    }

    fn same_shape(&self, other: &Cochain) -> bool {
        (self.dim, self.degree, self.value_dim) == (other.dim, other.degree, other.value_dim)
    }

    pub fn add(&self, other: &Cochain) -> Cochain {
        assert!(self.same_shape(other), "cochain shapes differ");
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        Cochain { data, ..*self }
    }

    pub fn sub(&self, other: &Cochain) -> Cochain {
        assert!(self.same_shape(other), "cochain shapes differ");
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect();
        Cochain { data, ..*self }
    }

    pub fn scale(&self, s: &Rational) -> Cochain {
        Cochain { data: self.data.iter().map(|a| a * s).collect(), ..*self }
    }

    pub fn to_sparse(&self) -> SparseVec {
        crate::exact::sparse_from_dense(&self.data)
    }

    /// Decodes a coordinate index.
    pub fn coord_key(&self, coord: usize) -> CoordKey {
        let np = pair_count(self.dim);
        let all = pairs(self.dim);
        let decode = |mut t: usize| {
            let mut v = vec![(0, 0); self.degree];
            for slot in (0..self.degree).rev() {
                v[slot] = all[t % np];
                t /= np;
            }
            v
        };
        let fl = self.f_len();
        if coord < fl {
            CoordKey { part: Part::F, pairs: decode(coord / self.value_dim), z: None, k: coord % self.value_dim }
        } else {
            let c = coord - fl;
            let k = c % self.value_dim;
            let rest = c / self.value_dim;
            CoordKey { part: Part::G, pairs: decode(rest / self.dim), z: Some(rest % self.dim), k }
        }
    }

    /// Coordinate index of a key; `None` when the key is out of shape.
    pub fn coord_of(&self, key: &CoordKey) -> Option<usize> {
        if key.pairs.len() != self.degree || key.k >= self.value_dim {
            return None;
        }
        let np = pair_count(self.dim);
        let mut t = 0;
        for &(i, j) in &key.pairs {
            if !(i < j && j < self.dim) {
                return None;
            }
            t = t * np + pair_index(self.dim, i, j);
        }
        match (key.part, key.z) {
            (Part::F, None) if self.degree > 0 => Some(t * self.value_dim + key.k),
            (Part::G, Some(z)) if z < self.dim => Some(self.f_len() + (t * self.dim + z) * self.value_dim + key.k),
            _ => None,
        }
    }

    pub fn set(&mut self, coord: usize, v: Rational) {
        self.data[coord] = v;
    }

    fn f_block(&self, t: usize) -> &[Rational] {
        &self.data[t * self.value_dim..(t + 1) * self.value_dim]
    }

    /// `g(X_t, ·)` for all `z`: `dim × value_dim` block.
    fn g_block(&self, t: usize) -> &[Rational] {
        let s = self.f_len() + t * self.dim * self.value_dim;
        &self.data[s..s + self.dim * self.value_dim]
    }

    fn g_vec(&self, t: usize, z: usize) -> &[Rational] {
        let s = self.f_len() + (t * self.dim + z) * self.value_dim;
        &self.data[s..s + self.value_dim]
    }

    /// `f(X_1, …, X_p)` for basis pairs.
    pub fn eval_f_basis(&self, pairs_idx: &[usize]) -> &[Rational] {
        self.f_block(flat(pair_count(self.dim), pairs_idx))
    }

    /// `g(X_1, …, X_p, e_z)` for basis pairs.
    pub fn eval_g_basis(&self, pairs_idx: &[usize], z: usize) -> &[Rational] {
        self.g_vec(flat(pair_count(self.dim), pairs_idx), z)
    }

    /// Adds `coef · f(args)` to `out`.
    pub fn eval_f(&self, args: &[SparseVec], coef: &Rational, out: &mut [Rational]) {
        let np = pair_count(self.dim);
        for_each_combo(np, args, coef, |t, c| axpy(out, &c, self.f_block(t)));
    }

    /// Adds `coef · g(args, z)` to `out`.
    pub fn eval_g(&self, args: &[SparseVec], z: &[Rational], coef: &Rational, out: &mut [Rational]) {
        let np = pair_count(self.dim);
        for_each_combo(np, args, coef, |t, c| {
            for (zi, zc) in support(z) {
                axpy(out, &(&c * zc), self.g_vec(t, zi));
            }
        });
    }

    /// Adds `coef · g(args, ·)` for every `z` to the `dim × value_dim` block `out`.
    fn eval_g_all(&self, args: &[SparseVec], coef: &Rational, out: &mut [Rational]) {
        let np = pair_count(self.dim);
        for_each_combo(np, args, coef, |t, c| axpy(out, &c, self.g_block(t)));
    }

    /// Nonzero coordinates in index order.
    pub fn nonzero_entries(&self) -> Vec<(CoordKey, Rational)> {
        support(&self.data).map(|(i, v)| (self.coord_key(i), v.clone())).collect()
    }
}

fn flat(np: usize, idx: &[usize]) -> usize {
    idx.iter().fold(0, |acc, &a| acc * np + a)
}

/// Iterates the multilinear expansion of sparse arguments: calls `f(flat
/// index, coefficient)` for each combination of nonzero components.
fn for_each_combo(np: usize, args: &[SparseVec], coef: &Rational, mut f: impl FnMut(usize, Rational)) {
    if coef.is_zero() || args.iter().any(Vec::is_empty) {
        return;
    }
    let n = args.len();
    let mut pos = vec![0usize; n];
    loop {
        let mut t = 0;
        let mut c = coef.clone();
        for (m, arg) in args.iter().enumerate() {
            let (a, v) = &arg[pos[m]];
            t = t * np + a;
            c = c * v;
        }
        f(t, c);
        let mut m = n;
        loop {
            if m == 0 {
                return;
            }
            m -= 1;
            pos[m] += 1;
            if pos[m] < args[m].len() {
                break;
            }
            pos[m] = 0;
        }
    }
}

fn basis_arg(a: usize) -> SparseVec {
    vec![(a, Rational::one())]
}

fn merge_sparse(a: SparseVec, b: SparseVec) -> SparseVec {
    let mut m = std::collections::BTreeMap::<usize, Rational>::new();
    for (i, v) in a.into_iter().chain(b) {
        *m.entry(i).or_default() += v;
    }
    m.into_iter().filter(|(_, v)| !v.is_zero()).collect()
}

fn decode_tuple(np: usize, n: usize, mut t: usize) -> Vec<usize> {
    let mut v = vec![0; n];
    for slot in (0..n).rev() {
        v[slot] = t % np;
        t /= np;
    }
    v
}

const PAR_MIN: usize = 32;

/// `P ∘ Q` for `p, q ≥ 1`; `Q` must be `L`-valued.
pub fn circle(p_cochain: &Cochain, q_cochain: &Cochain) -> Result<Cochain> {
    if p_cochain.degree == 0 || q_cochain.degree == 0 {
        return Err(Error::DegreeZeroOperand);
    }
    circle_any(p_cochain, q_cochain)
}

/// The circle product with the displayed shuffle sums; degree-0 operands are
/// treated as `g`-only cochains (their `f` part is absent).
fn circle_any(pc: &Cochain, qc: &Cochain) -> Result<Cochain> {
    check_dim("circle operand dimensions", pc.dim, qc.dim)?;
    check_dim("inner cochain values", qc.dim, qc.value_dim)?;
    let d = pc.dim;
    let (p, q) = (pc.degree, qc.degree);
    let n = p + q;
    let vd = pc.value_dim;
    let np = pair_count(d);
    let all_pairs = pairs(d);
    let sign_pq = sign_rational((p * q) % 2 == 1);
    let full = shuffles(p, q);
    let restricted: Vec<&Shuffle> = full.iter().filter(|s| s.perm.last() == Some(&(n - 1))).collect();
    let inner: Vec<Vec<Shuffle>> = (1..=p).map(|k| shuffles(k - 1, q)).collect();

    let compute = |t: usize| -> (Vec<Rational>, Vec<Rational>) {
        let a = decode_tuple(np, n, t);
        let mut out_f = zeros(if n == 0 { 0 } else { vd });
        let mut out_g = zeros(d * vd);
        let pick = |idx: &[usize]| -> Vec<usize> { idx.iter().map(|&m| a[m]).collect() };

        // P_2(X_σ(1..p), Q_1(X_σ(p+1..p+q))) with σ fixing the last slot.
        if q > 0 {
            for s in &restricted {
                let qv = qc.eval_f_basis(&pick(&s.perm[p..]));
                if qv.iter().all(Rational::is_zero) {
                    continue;
                }
                let c = &sign_pq * &sign_rational(s.sign < 0);
                let args: Vec<SparseVec> = s.perm[..p].iter().map(|&m| basis_arg(a[m])).collect();
                pc.eval_g(&args, qv, &c, &mut out_f);
            }
        }
        // P_2(X_σ(1..p), Q_2(X_σ(p+1..p+q), z)) for every z.
        for s in &full {
            let qt = flat(np, &pick(&s.perm[p..]));
            let qblock = qc.g_block(qt);
            if qblock.iter().all(Rational::is_zero) {
                continue;
            }
            let c = &sign_pq * &sign_rational(s.sign < 0);
            let args: Vec<SparseVec> = s.perm[..p].iter().map(|&m| basis_arg(a[m])).collect();
            for z in 0..d {
                let zv = &qblock[z * d..(z + 1) * d];
                if zv.iter().any(|x| !x.is_zero()) {
                    pc.eval_g(&args, zv, &c, &mut out_g[z * vd..(z + 1) * vd]);
                }
            }
        }
        // Wedge-insertion sums.
        for k in 1..=p {
            let s0 = sign_rational(((k - 1) * q) % 2 == 1);
            let slot = k + q - 1;
            let (xk, yk) = all_pairs[a[slot]];
            for s in &inner[k - 1] {
                let qt = flat(np, &pick(&s.perm[k - 1..k + q - 1]));
                let v_y = qc.g_vec(qt, yk);
                let v_x = qc.g_vec(qt, xk);
                let ins = merge_sparse(
                    wedge(d, &crate::exact::vector::unit(d, xk), v_y),
                    wedge(d, v_x, &crate::exact::vector::unit(d, yk)),
                );
                if ins.is_empty() {
                    continue;
                }
                let c = &s0 * &sign_rational(s.sign < 0);
                let mut args: Vec<SparseVec> = s.perm[..k - 1].iter().map(|&m| basis_arg(a[m])).collect();
                args.push(ins);
                args.extend(a[k + q..].iter().map(|&b| basis_arg(b)));
                pc.eval_f(&args, &c, &mut out_f);
                pc.eval_g_all(&args, &c, &mut out_g);
            }
        }
        (out_f, out_g)
    };

    let total = np.pow(n as u32);
    let blocks: Vec<(Vec<Rational>, Vec<Rational>)> =
        (0..total).into_par_iter().with_min_len(PAR_MIN).map(compute).collect();
    let mut out = Cochain::zero(d, n, vd);
    let fl = out.f_len();
    for (t, (bf, bg)) in blocks.into_iter().enumerate() {
        if n > 0 {
            out.data[t * vd..(t + 1) * vd].clone_from_slice(&bf);
        }
        out.data[fl + t * d * vd..fl + (t + 1) * d * vd].clone_from_slice(&bg);
    }
    Ok(out)
}

/// `[P, f]` for a linear map `f: L → L` given as a degree-0 cochain:
/// `P∘f` substitutes `f` into every argument slot, `f∘P` applies `f` after `P`.
fn bracket_with_map(pc: &Cochain, fc: &Cochain) -> Result<Cochain> {
    check_dim("bracket operand dimensions", pc.dim, fc.dim)?;
    check_dim("degree-0 operand values", fc.dim, fc.value_dim)?;
    check_dim("bracket operand values", pc.dim, pc.value_dim)?;
    let d = pc.dim;
    let p = pc.degree;
    let np = pair_count(d);
    let all_pairs = pairs(d);
    let fmap = fc.to_linear_map()?;
    let fimg: Vec<Vec<Rational>> = (0..d).map(|j| fmap.image_of_basis(j)).collect();
    let one = Rational::one();

    let compute = |t: usize| -> (Vec<Rational>, Vec<Rational>) {
        let a = decode_tuple(np, p, t);
        let mut out_f = zeros(if p == 0 { 0 } else { d });
        let mut out_g = zeros(d * d);
        // P∘f: substitute f into each wedge slot.
        for k in 0..p {
            let (x, y) = all_pairs[a[k]];
            let ins = merge_sparse(
                wedge(d, &crate::exact::vector::unit(d, x), &fimg[y]),
                wedge(d, &fimg[x], &crate::exact::vector::unit(d, y)),
            );
            let mut args: Vec<SparseVec> = a.iter().map(|&b| basis_arg(b)).collect();
            args[k] = ins;
            pc.eval_f(&args, &one, &mut out_f);
            pc.eval_g_all(&args, &one, &mut out_g);
        }
        // P∘f: substitute f into the last slot.
        let args: Vec<SparseVec> = a.iter().map(|&b| basis_arg(b)).collect();
        for z in 0..d {
            pc.eval_g(&args, &fimg[z], &one, &mut out_g[z * d..(z + 1) * d]);
        }
        // − f∘P.
        if p > 0 {
            let v = fmap.apply(pc.f_block(t));
            crate::exact::vector::sub_into(&mut out_f, &v);
        }
        for z in 0..d {
            let v = fmap.apply(pc.g_vec(t, z));
            crate::exact::vector::sub_into(&mut out_g[z * d..(z + 1) * d], &v);
        }
        (out_f, out_g)
    };

    let total = np.pow(p as u32);
    let blocks: Vec<(Vec<Rational>, Vec<Rational>)> =
        (0..total).into_par_iter().with_min_len(PAR_MIN).map(compute).collect();
    let mut out = Cochain::zero(d, p, d);
    let fl = out.f_len();
    for (t, (bf, bg)) in blocks.into_iter().enumerate() {
        if p > 0 {
            out.data[t * d..(t + 1) * d].clone_from_slice(&bf);
        }
        out.data[fl + t * d * d..fl + (t + 1) * d * d].clone_from_slice(&bg);
    }
    Ok(out)
}

/// `[P, Q] = P∘Q − (−1)^{pq} Q∘P`; degree-0 operands go through the
/// linear-map path.
pub fn graded_bracket(pc: &Cochain, qc: &Cochain) -> Result<Cochain> {
    if qc.degree == 0 {
        return bracket_with_map(pc, qc);
    }
    if pc.degree == 0 {
        return Ok(bracket_with_map(qc, pc)?.scale(&Rational::from_integer(-1)));
    }
    check_dim("bracket operand values", pc.dim, pc.value_dim)?;
    let pq = circle_any(pc, qc)?;
    let qp = circle_any(qc, pc)?;
    Ok(if (pc.degree * qc.degree) % 2 == 1 { pq.add(&qp) } else { pq.sub(&qp) })
}

/// Circle product that also accepts degree-0 operands, via the general
/// formula with a linear map read as a `g`-only cochain.
pub fn circle_general(pc: &Cochain, qc: &Cochain) -> Result<Cochain> {
    circle_any(pc, qc)
}

/// `[Π, Π]`.
pub fn mc_residual(pi_omega: &Cochain) -> Result<Cochain> {
    if pi_omega.degree != 1 {
        return Err(Error::Invalid(format!("Maurer-Cartan residual needs degree 1, got {}", pi_omega.degree)));
    }
    graded_bracket(pi_omega, pi_omega)
}

/// `([Π1,Π1], [Π2,Π2], [Π1,Π2])`.
pub fn mc_pair_residual(c: &crate::compat::CompatibleLy) -> Result<(Cochain, Cochain, Cochain)> {
    let p1 = Cochain::from_algebra(c.first());
    let p2 = Cochain::from_algebra(c.second());
    Ok((graded_bracket(&p1, &p1)?, graded_bracket(&p2, &p2)?, graded_bracket(&p1, &p2)?))
}

/// `[base, target]` for a degree-1 `base`.
pub fn twisted_differential(base: &Cochain, target: &Cochain) -> Result<Cochain> {
    if base.degree != 1 {
        return Err(Error::Invalid(format!("twisted differential needs a degree-1 base, got {}", base.degree)));
    }
    graded_bracket(base, target)
}
