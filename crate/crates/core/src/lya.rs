//! Lie Yamaguti algebras given by structure constants.

use crate::error::{check_dim, Error, Result};
use crate::exact::vector::{axpy, is_zero, sub_into, support, unit, zeros};
use crate::exact::{kernel_basis, Matrix, Rational};
use crate::report::{failing_ids, for_each_tuple, CheckReport};

/// Skew bilinear bracket `[e_i, e_j] = Σ_k c[i,j,k] e_k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BilinearMap {
    dim: usize,
    c: Vec<Rational>,
}

impl BilinearMap {
    pub fn zero(dim: usize) -> Self {
        BilinearMap { dim, c: zeros(dim * dim * dim) }
    }

    /// Builds from `(i, j, k, v)` entries with `i < j`; the `(j, i)` entries are
    /// filled by skew-symmetry and repeated entries accumulate.
    pub fn from_entries(
        dim: usize,
        entries: impl IntoIterator<Item = (usize, usize, usize, Rational)>,
    ) -> Result<Self> {
        let mut b = BilinearMap::zero(dim);
        for (i, j, k, v) in entries {
            for idx in [i, j, k] {
                if idx >= dim {
                    return Err(Error::IndexOutOfRange { index: idx, dim });
                }
            }
            if i >= j {
                return Err(Error::NotUpperEntry { i, j });
            }
            let a = b.idx(i, j, k);
            b.c[a] += &v;
            let a = b.idx(j, i, k);
            b.c[a] -= &v;
        }
        Ok(b)
    }

    /// Builds from `f(i, j) = [e_i, e_j]` evaluated for `i < j` only.
    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> Vec<Rational>) -> Self {
        let mut b = BilinearMap::zero(dim);
        for i in 0..dim {
            for j in i + 1..dim {
                let v = f(i, j);
                assert_eq!(v.len(), dim, "bracket value length");
                for (k, x) in v.into_iter().enumerate() {
                    let a = b.idx(j, i, k);
                    b.c[a] = -&x;
                    let a = b.idx(i, j, k);
                    b.c[a] = x;
                }
            }
        }
        b
    }

    fn idx(&self, i: usize, j: usize, k: usize) -> usize {
        (i * self.dim + j) * self.dim + k
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Rational {
        &self.c[self.idx(i, j, k)]
    }

    /// `[e_i, e_j]` as a coefficient slice.
    pub fn basis(&self, i: usize, j: usize) -> &[Rational] {
        let s = (i * self.dim + j) * self.dim;
        &self.c[s..s + self.dim]
    }

    pub fn apply(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        let mut out = zeros(self.dim);
        for (i, xi) in support(x) {
            for (j, yj) in support(y) {
                if i != j {
                    axpy(&mut out, &(xi * yj), self.basis(i, j));
                }
            }
        }
        out
    }

    /// Nonzero entries with `i < j`, in index order.
    pub fn upper_entries(&self) -> Vec<(usize, usize, usize, Rational)> {
        let mut out = Vec::new();
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                for (k, v) in support(self.basis(i, j)) {
                    out.push((i, j, k, v.clone()));
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        is_zero(&self.c)
    }

    pub fn scale(&self, s: &Rational) -> Self {
        BilinearMap { dim: self.dim, c: self.c.iter().map(|x| x * s).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim, "bilinear map dimensions");
        BilinearMap { dim: self.dim, c: self.c.iter().zip(&other.c).map(|(a, b)| a + b).collect() }
    }

    pub fn raw(&self) -> &[Rational] {
        &self.c
    }
}

/// Trilinear bracket `[e_i, e_j, e_k] = Σ_l d[i,j,k,l] e_l`, skew in `i, j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TrilinearMap {
    dim: usize,
    d: Vec<Rational>,
}

impl TrilinearMap {
    pub fn zero(dim: usize) -> Self {
        TrilinearMap { dim, d: zeros(dim.pow(4)) }
    }

    /// Builds from `(i, j, k, l, v)` entries with `i < j`; repeated entries
    /// accumulate.
    pub fn from_entries(
        dim: usize,
        entries: impl IntoIterator<Item = (usize, usize, usize, usize, Rational)>,
    ) -> Result<Self> {
        let mut t = TrilinearMap::zero(dim);
        for (i, j, k, l, v) in entries {
            for idx in [i, j, k, l] {
                if idx >= dim {
                    return Err(Error::IndexOutOfRange { index: idx, dim });
                }
            }
            if i >= j {
                return Err(Error::NotUpperEntry { i, j });
            }
            let a = t.idx(i, j, k, l);
            t.d[a] += &v;
            let a = t.idx(j, i, k, l);
            t.d[a] -= &v;
        }
        Ok(t)
    }

    /// Builds from `f(i, j, k) = [e_i, e_j, e_k]` evaluated for `i < j` only.
    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize, usize) -> Vec<Rational>) -> Self {
        let mut t = TrilinearMap::zero(dim);
        for i in 0..dim {
            for j in i + 1..dim {
                for k in 0..dim {
                    let v = f(i, j, k);
                    assert_eq!(v.len(), dim, "bracket value length");
                    for (l, x) in v.into_iter().enumerate() {
                        let a = t.idx(j, i, k, l);
                        t.d[a] = -&x;
                        let a = t.idx(i, j, k, l);
                        t.d[a] = x;
                    }
                }
            }
        }
        t
    }

    fn idx(&self, i: usize, j: usize, k: usize, l: usize) -> usize {
        ((i * self.dim + j) * self.dim + k) * self.dim + l
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize, k: usize, l: usize) -> &Rational {
        &self.d[self.idx(i, j, k, l)]
    }

    pub fn basis(&self, i: usize, j: usize, k: usize) -> &[Rational] {
        let s = ((i * self.dim + j) * self.dim + k) * self.dim;
        &self.d[s..s + self.dim]
    }

    pub fn apply(&self, x: &[Rational], y: &[Rational], z: &[Rational]) -> Vec<Rational> {
        let mut out = zeros(self.dim);
        for (i, xi) in support(x) {
            for (j, yj) in support(y) {
                if i == j {
                    continue;
                }
                let xy = xi * yj;
                for (k, zk) in support(z) {
                    axpy(&mut out, &(&xy * zk), self.basis(i, j, k));
                }
            }
        }
        out
    }

    pub fn upper_entries(&self) -> Vec<(usize, usize, usize, usize, Rational)> {
        let mut out = Vec::new();
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                for k in 0..self.dim {
                    for (l, v) in support(self.basis(i, j, k)) {
                        out.push((i, j, k, l, v.clone()));
                    }
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        is_zero(&self.d)
    }

    pub fn scale(&self, s: &Rational) -> Self {
        TrilinearMap { dim: self.dim, d: self.d.iter().map(|x| x * s).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim, "trilinear map dimensions");
        TrilinearMap { dim: self.dim, d: self.d.iter().zip(&other.d).map(|(a, b)| a + b).collect() }
    }

    pub fn raw(&self) -> &[Rational] {
        &self.d
    }
}

/// Linear map stored as a `dst_dim × src_dim` matrix acting on column vectors.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinearMap {
    matrix: Matrix,
}

impl LinearMap {
    pub fn new(matrix: Matrix) -> Self {
        LinearMap { matrix }
    }

    pub fn identity(n: usize) -> Self {
        LinearMap { matrix: Matrix::identity(n) }
    }

    pub fn zero(src_dim: usize, dst_dim: usize) -> Self {
        LinearMap { matrix: Matrix::zeros(dst_dim, src_dim) }
    }

    /// Map sending `e_j` to `images[j]`.
    pub fn from_images(dst_dim: usize, images: &[Vec<Rational>]) -> Self {
        LinearMap { matrix: Matrix::from_columns(dst_dim, images.len(), |j| images[j].clone()) }
    }

    pub fn src_dim(&self) -> usize {
        self.matrix.cols()
    }

    pub fn dst_dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn apply(&self, v: &[Rational]) -> Vec<Rational> {
        self.matrix.mul_vec(v)
    }

    pub fn image_of_basis(&self, j: usize) -> Vec<Rational> {
        self.matrix.column(j)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &LinearMap) -> LinearMap {
        LinearMap { matrix: self.matrix.mul(&other.matrix) }
    }

    pub fn inverse(&self) -> Option<LinearMap> {
        self.matrix.inverse().map(LinearMap::new)
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }
}

/// A vector space with a skew bilinear bracket `π` and a trilinear bracket `ω`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LyAlgebra {
    basis_names: Vec<String>,
    pi: BilinearMap,
    omega: TrilinearMap,
}

pub fn default_basis_names(dim: usize) -> Vec<String> {
    (1..=dim).map(|i| format!("e{i}")).collect()
}

impl LyAlgebra {
    pub fn new(pi: BilinearMap, omega: TrilinearMap) -> Result<Self> {
        let names = default_basis_names(pi.dim());
        Self::with_names(names, pi, omega)
    }

    pub fn with_names(basis_names: Vec<String>, pi: BilinearMap, omega: TrilinearMap) -> Result<Self> {
        check_dim("trilinear bracket", pi.dim(), omega.dim())?;
        check_dim("basis names", pi.dim(), basis_names.len())?;
        Ok(LyAlgebra { basis_names, pi, omega })
    }

    pub fn abelian(dim: usize) -> Self {
        LyAlgebra {
            basis_names: default_basis_names(dim),
            pi: BilinearMap::zero(dim),
            omega: TrilinearMap::zero(dim),
        }
    }

    pub fn dim(&self) -> usize {
        self.pi.dim()
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis_names
    }

    pub fn pi(&self) -> &BilinearMap {
        &self.pi
    }

    pub fn omega(&self) -> &TrilinearMap {
        &self.omega
    }

    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        self.pi.apply(x, y)
    }

    pub fn triple(&self, x: &[Rational], y: &[Rational], z: &[Rational]) -> Vec<Rational> {
        self.omega.apply(x, y, z)
    }

    pub fn e(&self, i: usize) -> Vec<Rational> {
        unit(self.dim(), i)
    }

    /// Both brackets scaled by `s`.
    pub fn scale(&self, s: &Rational) -> Self {
        LyAlgebra {
            basis_names: self.basis_names.clone(),
            pi: self.pi.scale(s),
            omega: self.omega.scale(s),
        }
    }

    /// Degree-1 bracket `ad_x` as a matrix.
    pub fn ad(&self, i: usize) -> Matrix {
        let d = self.dim();
        Matrix::from_columns(d, d, |z| self.pi.basis(i, z).to_vec())
    }

    /// `z ↦ [e_i, e_j, z]`.
    pub fn inner(&self, i: usize, j: usize) -> Matrix {
        let d = self.dim();
        Matrix::from_columns(d, d, |z| self.omega.basis(i, j, z).to_vec())
    }
}

/// Residuals of LY1–LY4 at one basis tuple.
pub(crate) fn ly1(a: &LyAlgebra, x: usize, y: usize, z: usize) -> Vec<Rational> {
    let (ex, ey, ez) = (a.e(x), a.e(y), a.e(z));
    let mut r = a.bracket(a.pi.basis(x, y), &ez);
    for v in [
        a.bracket(a.pi.basis(y, z), &ex),
        a.bracket(a.pi.basis(z, x), &ey),
    ] {
        crate::exact::vector::add_into(&mut r, &v);
    }
    for v in [a.omega.basis(x, y, z), a.omega.basis(y, z, x), a.omega.basis(z, x, y)] {
        crate::exact::vector::add_into(&mut r, v);
    }
    r
}

fn ly2(a: &LyAlgebra, x: usize, y: usize, z: usize, w: usize) -> Vec<Rational> {
    let (ex, ey, ez, ew) = (a.e(x), a.e(y), a.e(z), a.e(w));
    let mut r = a.triple(a.pi.basis(x, y), &ez, &ew);
    crate::exact::vector::add_into(&mut r, &a.triple(a.pi.basis(y, z), &ex, &ew));
    crate::exact::vector::add_into(&mut r, &a.triple(a.pi.basis(z, x), &ey, &ew));
    r
}

fn ly3(a: &LyAlgebra, x: usize, y: usize, z: usize, w: usize) -> Vec<Rational> {
    let (ex, ey, ez, ew) = (a.e(x), a.e(y), a.e(z), a.e(w));
    let mut r = a.triple(&ex, &ey, a.pi.basis(z, w));
    sub_into(&mut r, &a.bracket(a.omega.basis(x, y, z), &ew));
    sub_into(&mut r, &a.bracket(&ez, a.omega.basis(x, y, w)));
    r
}

fn ly4(a: &LyAlgebra, x: usize, y: usize, z: usize, w: usize, t: usize) -> Vec<Rational> {
    let (ex, ey, ez, ew, et) = (a.e(x), a.e(y), a.e(z), a.e(w), a.e(t));
    let mut r = a.triple(&ex, &ey, a.omega.basis(z, w, t));
    sub_into(&mut r, &a.triple(a.omega.basis(x, y, z), &ew, &et));
    sub_into(&mut r, &a.triple(&ez, a.omega.basis(x, y, w), &et));
    sub_into(&mut r, &a.triple(&ez, &ew, a.omega.basis(x, y, t)));
    r
}

/// One report per axiom LY1–LY4, each over all ordered basis tuples.
pub fn check_lya(a: &LyAlgebra) -> Vec<CheckReport> {
    let d = a.dim();
    let mut r1 = CheckReport::new("LY1");
    for_each_tuple(d, 3, |t| r1.record(t, &ly1(a, t[0], t[1], t[2])));
    let mut r2 = CheckReport::new("LY2");
    for_each_tuple(d, 4, |t| r2.record(t, &ly2(a, t[0], t[1], t[2], t[3])));
    let mut r3 = CheckReport::new("LY3");
    for_each_tuple(d, 4, |t| r3.record(t, &ly3(a, t[0], t[1], t[2], t[3])));
    let mut r4 = CheckReport::new("LY4");
    for_each_tuple(d, 5, |t| r4.record(t, &ly4(a, t[0], t[1], t[2], t[3], t[4])));
    vec![r1, r2, r3, r4]
}

pub fn is_lya(a: &LyAlgebra) -> bool {
    crate::report::all_hold(&check_lya(a))
}

/// The algebra with bracket `b` and `[x,y,z] = [[x,y],z]`.
pub fn from_lie(b: &BilinearMap) -> Result<LyAlgebra> {
    let d = b.dim();
    let mut bad = None;
    for_each_tuple(d, 3, |t| {
        if bad.is_some() {
            return;
        }
        let (x, y, z) = (t[0], t[1], t[2]);
        let (ex, ey, ez) = (unit(d, x), unit(d, y), unit(d, z));
        let mut s = b.apply(b.basis(x, y), &ez);
        crate::exact::vector::add_into(&mut s, &b.apply(b.basis(y, z), &ex));
        crate::exact::vector::add_into(&mut s, &b.apply(b.basis(z, x), &ey));
        if !is_zero(&s) {
            bad = Some((x, y, z));
        }
    });
    if let Some((x, y, z)) = bad {
        return Err(Error::JacobiViolation { x, y, z });
    }
    let omega = TrilinearMap::from_fn(d, |i, j, k| b.apply(b.basis(i, j), &unit(d, k)));
    LyAlgebra::new(b.clone(), omega)
}

fn require_lya(a: &LyAlgebra, what: &'static str) -> Result<()> {
    let reports = check_lya(a);
    if crate::report::all_hold(&reports) {
        Ok(())
    } else {
        Err(Error::AxiomFailure { what, failing: failing_ids(&reports) })
    }
}

/// Block-diagonal sum; basis of `a` first.
pub fn direct_sum(a: &LyAlgebra, b: &LyAlgebra) -> Result<LyAlgebra> {
    require_lya(a, "first summand")?;
    require_lya(b, "second summand")?;
    Ok(direct_sum_unchecked(a, b))
}

pub(crate) fn direct_sum_unchecked(a: &LyAlgebra, b: &LyAlgebra) -> LyAlgebra {
    let (m, n) = (a.dim(), b.dim());
    let d = m + n;
    let embed = |v: &[Rational], off: usize| {
        let mut out = zeros(d);
        out[off..off + v.len()].clone_from_slice(v);
        out
    };
    let pi = BilinearMap::from_fn(d, |i, j| {
        if j < m {
            embed(a.pi.basis(i, j), 0)
        } else if i >= m {
            embed(b.pi.basis(i - m, j - m), m)
        } else {
            zeros(d)
        }
    });
    let omega = TrilinearMap::from_fn(d, |i, j, k| {
        if j < m && k < m {
            embed(a.omega.basis(i, j, k), 0)
        } else if i >= m && k >= m {
            embed(b.omega.basis(i - m, j - m, k - m), m)
        } else {
            zeros(d)
        }
    });
    let mut names = a.basis_names.clone();
    names.extend(b.basis_names.iter().cloned());
    let mut seen = std::collections::HashSet::new();
    if !names.iter().all(|n| seen.insert(n.clone())) {
        names = default_basis_names(d);
    }
    LyAlgebra { basis_names: names, pi, omega }
}

/// Checks `φ[x,y] = [φx,φy]` and `φ[x,y,z] = [φx,φy,φz]` on basis tuples.
pub fn check_homomorphism(a: &LyAlgebra, b: &LyAlgebra, phi: &LinearMap) -> Result<Vec<CheckReport>> {
    check_dim("homomorphism source", a.dim(), phi.src_dim())?;
    check_dim("homomorphism target", b.dim(), phi.dst_dim())?;
    let d = a.dim();
    let img: Vec<Vec<Rational>> = (0..d).map(|j| phi.image_of_basis(j)).collect();
    let mut rb = CheckReport::new("HOM-bilinear");
    for_each_tuple(d, 2, |t| {
        let mut r = phi.apply(a.pi.basis(t[0], t[1]));
        sub_into(&mut r, &b.bracket(&img[t[0]], &img[t[1]]));
        rb.record(t, &r);
    });
    let mut rt = CheckReport::new("HOM-trilinear");
    for_each_tuple(d, 3, |t| {
        let mut r = phi.apply(a.omega.basis(t[0], t[1], t[2]));
        sub_into(&mut r, &b.triple(&img[t[0]], &img[t[1]], &img[t[2]]));
        rt.record(t, &r);
    });
    Ok(vec![rb, rt])
}

fn leibniz_residuals(a: &LyAlgebra, dm: &LinearMap, mut sink: impl FnMut(bool, &[usize], Vec<Rational>)) {
    let d = a.dim();
    let img: Vec<Vec<Rational>> = (0..d).map(|j| dm.image_of_basis(j)).collect();
    for_each_tuple(d, 2, |t| {
        let (x, y) = (t[0], t[1]);
        let mut r = dm.apply(a.pi.basis(x, y));
        sub_into(&mut r, &a.bracket(&img[x], &a.e(y)));
        sub_into(&mut r, &a.bracket(&a.e(x), &img[y]));
        sink(false, t, r);
    });
    for_each_tuple(d, 3, |t| {
        let (x, y, z) = (t[0], t[1], t[2]);
        let mut r = dm.apply(a.omega.basis(x, y, z));
        sub_into(&mut r, &a.triple(&img[x], &a.e(y), &a.e(z)));
        sub_into(&mut r, &a.triple(&a.e(x), &img[y], &a.e(z)));
        sub_into(&mut r, &a.triple(&a.e(x), &a.e(y), &img[z]));
        sink(true, t, r);
    });
}

/// Checks the Leibniz rules for `d` against both brackets.
pub fn check_derivation(a: &LyAlgebra, dm: &LinearMap) -> Result<Vec<CheckReport>> {
    check_dim("derivation source", a.dim(), dm.src_dim())?;
    check_dim("derivation target", a.dim(), dm.dst_dim())?;
    let mut rb = CheckReport::new("DER-bilinear");
    let mut rt = CheckReport::new("DER-trilinear");
    leibniz_residuals(a, dm, |tri, t, r| if tri { rt.record(t, &r) } else { rb.record(t, &r) });
    Ok(vec![rb, rt])
}

/// Basis of the derivation algebra, from the kernel of the linearized
/// Leibniz constraints. Unknown `u = r·d + c` is the matrix entry `(r, c)`.
pub fn derivation_space(a: &LyAlgebra) -> Vec<LinearMap> {
    common_derivation_space(&[a])
}

/// Maps that are derivations of every algebra in `algs` (all of one dimension).
pub fn common_derivation_space(algs: &[&LyAlgebra]) -> Vec<LinearMap> {
    let Some(d) = algs.first().map(|a| a.dim()) else {
        return Vec::new();
    };
    let n = d * d;
    let columns: Vec<Vec<Rational>> = (0..n)
        .map(|u| {
            let mut m = Matrix::zeros(d, d);
            m.set(u / d, u % d, Rational::one());
            let m = LinearMap::new(m);
            let mut col = Vec::new();
            for a in algs {
                leibniz_residuals(a, &m, |_, _, r| col.extend(r));
            }
            col
        })
        .collect();
    let rows = columns.first().map_or(0, Vec::len);
    let constraints = Matrix::from_columns(rows, n, |u| columns[u].clone());
    kernel_basis(&constraints)
        .into_iter()
        .map(|v| LinearMap::new(Matrix::new(d, d, v).expect("square derivation")))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::q;

    fn alg1() -> LyAlgebra {
        let pi = BilinearMap::from_entries(2, [(0, 1, 0, q(1))]).unwrap();
        let om = TrilinearMap::from_entries(2, [(0, 1, 1, 0, q(1))]).unwrap();
        LyAlgebra::new(pi, om).unwrap()
    }

    #[test]
    fn skew_normal_form() {
        let b = BilinearMap::from_entries(2, [(0, 1, 1, q(3))]).unwrap();
        assert_eq!(b.get(1, 0, 1), &q(-3));
        assert_eq!(b.get(0, 0, 1), &q(0));
        assert!(matches!(
            BilinearMap::from_entries(2, [(1, 0, 1, q(1))]),
            Err(Error::NotUpperEntry { .. })
        ));
        assert!(matches!(
            TrilinearMap::from_entries(2, [(0, 1, 2, 0, q(1))]),
            Err(Error::IndexOutOfRange { index: 2, dim: 2 })
        ));
    }

    #[test]
    fn abelian_and_alg1_pass() {
        assert!(is_lya(&LyAlgebra::abelian(2)));
        assert!(is_lya(&alg1()));
    }

    #[test]
    fn from_lie_rejects_non_jacobi() {
        let b = BilinearMap::from_entries(
            3,
            [(0, 1, 1, q(1)), (0, 2, 0, q(1)), (1, 2, 2, q(1))],
        )
        .unwrap();
        assert!(matches!(from_lie(&b), Err(Error::JacobiViolation { .. })));
    }

    #[test]
    fn from_lie_of_nonabelian_dim2() {
        let b = BilinearMap::from_entries(2, [(0, 1, 0, q(1))]).unwrap();
        let a = from_lie(&b).unwrap();
        assert_eq!(a.omega().basis(0, 1, 1), &[q(1), q(0)]);
        assert_eq!(a, alg1());
    }

    #[test]
    fn derivation_examples() {
        assert!(crate::report::all_hold(&check_derivation(&alg1(), &LinearMap::zero(2, 2)).unwrap()));
        assert!(!crate::report::all_hold(&check_derivation(&alg1(), &LinearMap::identity(2)).unwrap()));
        assert_eq!(derivation_space(&LyAlgebra::abelian(2)).len(), 4);
        assert_eq!(derivation_space(&LyAlgebra::abelian(1)).len(), 1);
    }

    #[test]
    fn dimension_errors() {
        assert!(LyAlgebra::new(BilinearMap::zero(2), TrilinearMap::zero(3)).is_err());
        assert!(check_homomorphism(&alg1(), &alg1(), &LinearMap::identity(3)).is_err());
    }

    #[test]
    fn direct_sum_with_zero_dim_is_identity() {
        let s = direct_sum(&alg1(), &LyAlgebra::abelian(0)).unwrap();
        assert_eq!(s, alg1());
    }
}
