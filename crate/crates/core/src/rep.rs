//! Representations `(ρ, μ)` of a Lie Yamaguti algebra on a space `V`.

use crate::error::{check_dim, Error, Result};
use crate::exact::vector::{support, zeros};
use crate::exact::{Matrix, Rational};
use crate::lya::{default_basis_names, is_lya, BilinearMap, LinearMap, LyAlgebra, TrilinearMap};
use crate::report::{failing_ids, for_each_tuple, CheckReport};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    alg_dim: usize,
    v_dim: usize,
    rho: Vec<Matrix>,
    mu: Vec<Matrix>,
}

impl Representation {
    /// `rho[i] = ρ(e_i)`, `mu[i * alg_dim + j] = μ(e_i, e_j)`.
    pub fn new(alg_dim: usize, v_dim: usize, rho: Vec<Matrix>, mu: Vec<Matrix>) -> Result<Self> {
        check_dim("rho count", alg_dim, rho.len())?;
        check_dim("mu count", alg_dim * alg_dim, mu.len())?;
        for m in rho.iter().chain(&mu) {
            check_dim("representation matrix rows", v_dim, m.rows())?;
            check_dim("representation matrix cols", v_dim, m.cols())?;
        }
        Ok(Representation { alg_dim, v_dim, rho, mu })
    }

    pub fn zero(alg_dim: usize, v_dim: usize) -> Self {
        Representation {
            alg_dim,
            v_dim,
            rho: vec![Matrix::zeros(v_dim, v_dim); alg_dim],
            mu: vec![Matrix::zeros(v_dim, v_dim); alg_dim * alg_dim],
        }
    }

    pub fn alg_dim(&self) -> usize {
        self.alg_dim
    }

    pub fn v_dim(&self) -> usize {
        self.v_dim
    }

    pub fn rho(&self, i: usize) -> &Matrix {
        &self.rho[i]
    }

    pub fn mu(&self, i: usize, j: usize) -> &Matrix {
        &self.mu[i * self.alg_dim + j]
    }

    pub fn set_rho(&mut self, i: usize, m: Matrix) {
        self.rho[i] = m;
    }

    pub fn set_mu(&mut self, i: usize, j: usize, m: Matrix) {
        self.mu[i * self.alg_dim + j] = m;
    }

    /// `ρ(x)` for a coefficient vector `x`.
    pub fn rho_of(&self, x: &[Rational]) -> Matrix {
        let mut out = Matrix::zeros(self.v_dim, self.v_dim);
        for (i, c) in support(x) {
            out = out.add(&self.rho[i].scale(c));
        }
        out
    }

    /// `μ(x, y)` for coefficient vectors.
    pub fn mu_of(&self, x: &[Rational], y: &[Rational]) -> Matrix {
        let mut out = Matrix::zeros(self.v_dim, self.v_dim);
        for (i, a) in support(x) {
            for (j, b) in support(y) {
                out = out.add(&self.mu(i, j).scale(&(a * b)));
            }
        }
        out
    }

    /// `k1·self + k2·other`.
    pub fn combine(&self, k1: &Rational, other: &Representation, k2: &Rational) -> Representation {
        assert_eq!((self.alg_dim, self.v_dim), (other.alg_dim, other.v_dim));
        let mix = |a: &Matrix, b: &Matrix| a.scale(k1).add(&b.scale(k2));
        Representation {
            alg_dim: self.alg_dim,
            v_dim: self.v_dim,
            rho: self.rho.iter().zip(&other.rho).map(|(a, b)| mix(a, b)).collect(),
            mu: self.mu.iter().zip(&other.mu).map(|(a, b)| mix(a, b)).collect(),
        }
    }
}

/// Table of `D(e_i, e_j)` matrices, indexed `i * dim + j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DTable {
    dim: usize,
    d: Vec<Matrix>,
}

impl DTable {
    pub fn get(&self, i: usize, j: usize) -> &Matrix {
        &self.d[i * self.dim + j]
    }

    pub fn of(&self, x: &[Rational], y: &[Rational]) -> Matrix {
        let v = self.d.first().map_or(0, Matrix::rows);
        let mut out = Matrix::zeros(v, v);
        for (i, a) in support(x) {
            for (j, b) in support(y) {
                out = out.add(&self.get(i, j).scale(&(a * b)));
            }
        }
        out
    }
}

fn check_rep_dims(a: &LyAlgebra, rep: &Representation) -> Result<()> {
    check_dim("representation algebra dimension", a.dim(), rep.alg_dim)
}

/// `D(x,y) = μ(y,x) − μ(x,y) + [ρ(x),ρ(y)] − ρ([x,y])` on basis pairs.
pub fn derived_d(rep: &Representation, a: &LyAlgebra) -> Result<DTable> {
    check_rep_dims(a, rep)?;
    let n = a.dim();
    let mut d = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let m = rep
                .mu(j, i)
                .sub(rep.mu(i, j))
                .add(&rep.rho[i].commutator(&rep.rho[j]))
                .sub(&rep.rho_of(a.pi().basis(i, j)));
            d.push(m);
        }
    }
    Ok(DTable { dim: n, d })
}

/// The five representation conditions on all basis tuples.
pub fn check_representation(a: &LyAlgebra, rep: &Representation) -> Result<Vec<CheckReport>> {
    let dt = derived_d(rep, a)?;
    let n = a.dim();
    let e = |i| a.e(i);
    let mut r1 = CheckReport::new("REP1");
    let mut r2 = CheckReport::new("REP2");
    let mut r3 = CheckReport::new("REP3");
    for_each_tuple(n, 3, |t| {
        let (x, y, z) = (t[0], t[1], t[2]);
        let m1 = rep
            .mu_of(a.pi().basis(x, y), &e(z))
            .sub(&rep.mu(x, z).mul(rep.rho(y)))
            .add(&rep.mu(y, z).mul(rep.rho(x)));
        r1.record(t, m1.entries());
        let m2 = rep
            .mu_of(&e(x), a.pi().basis(y, z))
            .sub(&rep.rho(y).mul(rep.mu(x, z)))
            .add(&rep.rho(z).mul(rep.mu(x, y)));
        r2.record(t, m2.entries());
        let m3 = rep.rho_of(a.omega().basis(x, y, z)).sub(&dt.get(x, y).commutator(rep.rho(z)));
        r3.record(t, m3.entries());
    });
    let mut r4 = CheckReport::new("REP4");
    let mut r5 = CheckReport::new("REP5");
    for_each_tuple(n, 4, |t| {
        let (x, y, z, w) = (t[0], t[1], t[2], t[3]);
        let m4 = rep
            .mu(z, w)
            .mul(rep.mu(x, y))
            .sub(&rep.mu(y, w).mul(rep.mu(x, z)))
            .sub(&rep.mu_of(&e(x), a.omega().basis(y, z, w)))
            .add(&dt.get(y, z).mul(rep.mu(x, w)));
        r4.record(t, m4.entries());
        let m5 = rep
            .mu_of(a.omega().basis(x, y, z), &e(w))
            .add(&rep.mu_of(&e(z), a.omega().basis(x, y, w)))
            .sub(&dt.get(x, y).commutator(rep.mu(z, w)));
        r5.record(t, m5.entries());
    });
    Ok(vec![r1, r2, r3, r4, r5])
}

/// `ρ(x) = ad_x`, `μ(x, y) = (z ↦ [z, x, y])`.
pub fn adjoint(a: &LyAlgebra) -> Result<Representation> {
    if !is_lya(a) {
        return Err(Error::AxiomFailure {
            what: "adjoint representation input",
            failing: failing_ids(&crate::lya::check_lya(a)),
        });
    }
    Ok(adjoint_unchecked(a))
}

pub(crate) fn adjoint_unchecked(a: &LyAlgebra) -> Representation {
    let n = a.dim();
    let rho = (0..n).map(|i| a.ad(i)).collect();
    let mut mu = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            mu.push(Matrix::from_columns(n, n, |z| a.omega().basis(z, i, j).to_vec()));
        }
    }
    Representation { alg_dim: n, v_dim: n, rho, mu }
}

/// Algebra on `L ⊕ V` (basis of `L` first). Validity of `rep` is not assumed;
/// pair with [`check_representation`] and [`crate::lya::check_lya`].
pub fn semidirect(a: &LyAlgebra, rep: &Representation) -> Result<LyAlgebra> {
    let dt = derived_d(rep, a)?;
    let n = a.dim();
    let m = rep.v_dim;
    let d = n + m;
    let col = |mat: &Matrix, j: usize, sign: bool| {
        let mut out = zeros(d);
        for i in 0..m {
            let v = mat.get(i, j);
            out[n + i] = if sign { -v } else { v.clone() };
        }
        out
    };
    let pi = BilinearMap::from_fn(d, |i, j| {
        if j < n {
            let mut out = zeros(d);
            out[..n].clone_from_slice(a.pi().basis(i, j));
            out
        } else if i < n {
            col(rep.rho(i), j - n, false)
        } else {
            zeros(d)
        }
    });
    let omega = TrilinearMap::from_fn(d, |i, j, k| match (i < n, j < n, k < n) {
        (true, true, true) => {
            let mut out = zeros(d);
            out[..n].clone_from_slice(a.omega().basis(i, j, k));
            out
        }
        (true, true, false) => col(dt.get(i, j), k - n, false),
        // i < j, so only the second slot can carry the V-component here.
        (true, false, true) => col(rep.mu(i, k), j - n, true),
        _ => zeros(d),
    });
    let mut names = a.basis_names().to_vec();
    names.extend((1..=m).map(|i| format!("v{i}")));
    let mut seen = std::collections::HashSet::new();
    if !names.iter().all(|s| seen.insert(s.clone())) {
        names = default_basis_names(d);
    }
    LyAlgebra::with_names(names, pi, omega)
}

/// A representation together with `T: V → V`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RbRepresentation {
    pub rep: Representation,
    pub t_map: LinearMap,
}

/// Checks the two operator-intertwining identities on `(x, u)` and `(x, y, u)`;
/// the preconditions (RB operator under the slotwise convention, valid
/// representation) are reported alongside.
pub fn check_rb_representation(
    a: &LyAlgebra,
    r: &LinearMap,
    rb_rep: &RbRepresentation,
) -> Result<Vec<CheckReport>> {
    let rep = &rb_rep.rep;
    let t = &rb_rep.t_map;
    check_rep_dims(a, rep)?;
    check_dim("operator source", a.dim(), r.src_dim())?;
    check_dim("operator target", a.dim(), r.dst_dim())?;
    check_dim("T source", rep.v_dim, t.src_dim())?;
    check_dim("T target", rep.v_dim, t.dst_dim())?;
    let mut out = Vec::new();
    let rb = crate::rb::check_rb(a, r, crate::rb::RbConvention::Slotwise)?;
    let mut pre_rb = CheckReport::new("precondition:RB");
    pre_rb.checked = 1;
    if !crate::report::all_hold(&rb) {
        pre_rb.violation(&[], Vec::new());
    }
    out.push(pre_rb);
    let reps = check_representation(a, rep)?;
    let mut pre_rep = CheckReport::new("precondition:REP");
    pre_rep.checked = 1;
    if !crate::report::all_hold(&reps) {
        pre_rep.violation(&[], Vec::new());
    }
    out.push(pre_rep);

    let n = a.dim();
    let tm = t.matrix();
    let rx: Vec<Vec<Rational>> = (0..n).map(|i| r.image_of_basis(i)).collect();
    let mut rho_rep = CheckReport::new("RBREP-rho");
    let mut mu_rep = CheckReport::new("RBREP-mu");
    for x in 0..n {
        let rho_rx = rep.rho_of(&rx[x]);
        let lhs = rho_rx.mul(tm);
        let rhs = tm.mul(&rho_rx.add(&rep.rho(x).mul(tm)));
        let diff = lhs.sub(&rhs);
        for u in 0..rep.v_dim {
            rho_rep.record(&[x, u], &diff.column(u));
        }
    }
    for_each_tuple(n, 2, |p| {
        let (x, y) = (p[0], p[1]);
        let mu_rr = rep.mu_of(&rx[x], &rx[y]);
        let lhs = mu_rr.mul(tm);
        let inner = mu_rr
            .add(&rep.mu_of(&rx[x], &a.e(y)).mul(tm))
            .add(&rep.mu_of(&a.e(x), &rx[y]).mul(tm));
        let diff = lhs.sub(&tm.mul(&inner));
        for u in 0..rep.v_dim {
            mu_rep.record(&[x, y, u], &diff.column(u));
        }
    });
    out.push(rho_rep);
    out.push(mu_rep);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::q;
    use crate::lya::check_lya;
    use crate::report::all_hold;

    fn alg1() -> LyAlgebra {
        let pi = BilinearMap::from_entries(2, [(0, 1, 0, q(1))]).unwrap();
        let om = TrilinearMap::from_entries(2, [(0, 1, 1, 0, q(1))]).unwrap();
        LyAlgebra::new(pi, om).unwrap()
    }

    #[test]
    fn zero_rep_passes() {
        let a = alg1();
        assert!(all_hold(&check_representation(&a, &Representation::zero(2, 3)).unwrap()));
    }

    #[test]
    fn adjoint_of_alg1() {
        let a = alg1();
        let ad = adjoint(&a).unwrap();
        assert!(all_hold(&check_representation(&a, &ad).unwrap()));
        // μ(e1, e2): z ↦ [z, e1, e2]; e1 ↦ 0, e2 ↦ [e2, e1, e2] = −e1.
        assert_eq!(ad.mu(0, 1).column(0), vec![q(0), q(0)]);
        assert_eq!(ad.mu(0, 1).column(1), vec![q(-1), q(0)]);
        let dt = derived_d(&ad, &a).unwrap();
        assert_eq!(dt.get(0, 1), &a.inner(0, 1));
    }

    #[test]
    fn semidirect_of_adjoint_is_lya() {
        let a = alg1();
        let s = semidirect(&a, &adjoint(&a).unwrap()).unwrap();
        assert_eq!(s.dim(), 4);
        assert!(all_hold(&check_lya(&s)));
    }

    #[test]
    fn rb_rep_zero_t() {
        let a = alg1();
        let rb = RbRepresentation { rep: adjoint(&a).unwrap(), t_map: LinearMap::zero(2, 2) };
        let reps = check_rb_representation(&a, &LinearMap::zero(2, 2), &rb).unwrap();
        assert!(all_hold(&reps));
    }
}
