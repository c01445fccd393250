//! Rota-Baxter operators, pre-Lie Yamaguti structures and sub-adjacent algebras.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::compat::{check_compat_homomorphism, CompatibleLy};
use crate::error::{check_dim, Error, Result};
use crate::exact::vector::{add_into, axpy, sub_into, zeros};
use crate::exact::{Matrix, Rational};
use crate::lya::{BilinearMap, LinearMap, LyAlgebra, TrilinearMap};
use crate::report::{all_hold, failing_ids, for_each_tuple, CheckReport};

/// Which trilinear Rota-Baxter identity (and induced triple product) to use.
///
/// * `Cyclic`: `[Rx,Ry,Rz] = R([Rx,Ry,z] + [Ry,Rz,x] − [Rx,Rz,y])`, `{x,y,z} = [Ry,Rz,x]`.
/// * `Slotwise`: `[Rx,Ry,Rz] = R([Rx,Ry,z] + [Rx,y,Rz] + [x,Ry,Rz])`, `{x,y,z} = [x,Ry,Rz]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RbConvention {
    Cyclic,
    Slotwise,
}

impl RbConvention {
    pub const ALL: [RbConvention; 2] = [RbConvention::Cyclic, RbConvention::Slotwise];

    /// Command-line token.
    pub fn token(self) -> &'static str {
        match self {
            RbConvention::Cyclic => "sec2",
            RbConvention::Slotwise => "sec6",
        }
    }

    pub fn from_token(s: &str) -> Option<Self> {
        match s {
            "sec2" => Some(RbConvention::Cyclic),
            "sec6" => Some(RbConvention::Slotwise),
            _ => None,
        }
    }
}

fn columns(r: &LinearMap) -> Vec<Vec<Rational>> {
    (0..r.src_dim()).map(|i| r.image_of_basis(i)).collect()
}

fn check_square(a_dim: usize, r: &LinearMap) -> Result<()> {
    check_dim("operator source", a_dim, r.src_dim())?;
    check_dim("operator target", a_dim, r.dst_dim())
}

/// `[Rx,Ry] − R([Rx,y] − [Ry,x])` and `[Rx,Ry] − R([x,Ry] + [Rx,y])`.
fn bilinear_residuals(a: &LyAlgebra, r: &LinearMap, rx: &[Vec<Rational>], i: usize, j: usize) -> (Vec<Rational>, Vec<Rational>) {
    let lhs = a.bracket(&rx[i], &rx[j]);
    let mut in2 = a.bracket(&rx[i], &a.e(j));
    sub_into(&mut in2, &a.bracket(&rx[j], &a.e(i)));
    let mut in6 = a.bracket(&a.e(i), &rx[j]);
    add_into(&mut in6, &a.bracket(&rx[i], &a.e(j)));
    let mut r2 = lhs.clone();
    sub_into(&mut r2, &r.apply(&in2));
    let mut r6 = lhs;
    sub_into(&mut r6, &r.apply(&in6));
    (r2, r6)
}

fn trilinear_residual(
    a: &LyAlgebra,
    r: &LinearMap,
    rx: &[Vec<Rational>],
    conv: RbConvention,
    (i, j, k): (usize, usize, usize),
) -> Vec<Rational> {
    let mut inner = a.triple(&rx[i], &rx[j], &a.e(k));
    match conv {
        RbConvention::Cyclic => {
            add_into(&mut inner, &a.triple(&rx[j], &rx[k], &a.e(i)));
            sub_into(&mut inner, &a.triple(&rx[i], &rx[k], &a.e(j)));
        }
        RbConvention::Slotwise => {
            add_into(&mut inner, &a.triple(&rx[i], &a.e(j), &rx[k]));
            add_into(&mut inner, &a.triple(&a.e(i), &rx[j], &rx[k]));
        }
    }
    let mut res = a.triple(&rx[i], &rx[j], &rx[k]);
    sub_into(&mut res, &r.apply(&inner));
    res
}

/// Reports `RB-bilinear`, `RB-bilinear-forms` (the two bilinear forms give
/// equal residuals) and `RB-trilinear` on all basis tuples.
pub fn check_rb(a: &LyAlgebra, r: &LinearMap, conv: RbConvention) -> Result<Vec<CheckReport>> {
    let n = a.dim();
    check_square(n, r)?;
    let rx = columns(r);
    let mut bil = CheckReport::new("RB-bilinear");
    let mut forms = CheckReport::new("RB-bilinear-forms");
    for_each_tuple(n, 2, |t| {
        let (r2, r6) = bilinear_residuals(a, r, &rx, t[0], t[1]);
        bil.record(t, &r2);
        let mut diff = r2;
        sub_into(&mut diff, &r6);
        forms.record(t, &diff);
    });
    let mut tri = CheckReport::new("RB-trilinear");
    for_each_tuple(n, 3, |t| {
        tri.record(t, &trilinear_residual(a, r, &rx, conv, (t[0], t[1], t[2])));
    });
    Ok(vec![bil, forms, tri])
}

/// Fast yes/no version of [`check_rb`] with early exit.
pub fn is_rb(a: &LyAlgebra, r: &LinearMap, conv: RbConvention) -> bool {
    let n = a.dim();
    if r.src_dim() != n || r.dst_dim() != n {
        return false;
    }
    let rx = columns(r);
    for i in 0..n {
        for j in i + 1..n {
            if bilinear_residuals(a, r, &rx, i, j).0.iter().any(|v| !v.is_zero()) {
                return false;
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if trilinear_residual(a, r, &rx, conv, (i, j, k)).iter().any(|v| !v.is_zero()) {
                    return false;
                }
            }
        }
    }
    true
}

/// [`check_rb`] against both structures, suffixed `[1]` and `[2]`.
pub fn check_rb_compatible(c: &CompatibleLy, r: &LinearMap, conv: RbConvention) -> Result<Vec<CheckReport>> {
    let mut out: Vec<CheckReport> = check_rb(c.first(), r, conv)?.into_iter().map(|x| x.with_suffix("[1]")).collect();
    out.extend(check_rb(c.second(), r, conv)?.into_iter().map(|x| x.with_suffix("[2]")));
    Ok(out)
}

pub fn is_rb_compatible(c: &CompatibleLy, r: &LinearMap, conv: RbConvention) -> bool {
    is_rb(c.first(), r, conv) && is_rb(c.second(), r, conv)
}

/// A bilinear product `x ⋆ y` and a trilinear product `{x, y, z}` with no
/// symmetry assumed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PreLy {
    dim: usize,
    /// `star[(i·d + j)·d + k]` is the `e_k` coefficient of `e_i ⋆ e_j`.
    star: Vec<Rational>,
    /// `triple[((i·d + j)·d + k)·d + l]` is the `e_l` coefficient of `{e_i, e_j, e_k}`.
    triple: Vec<Rational>,
}

fn bi_apply(d: usize, t: &[Rational], x: &[Rational], y: &[Rational]) -> Vec<Rational> {
    let mut out = zeros(d);
    for (i, xi) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
        for (j, yj) in y.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            let c = xi * yj;
            axpy(&mut out, &c, &t[(i * d + j) * d..(i * d + j + 1) * d]);
        }
    }
    out
}

fn tri_apply(d: usize, t: &[Rational], x: &[Rational], y: &[Rational], z: &[Rational]) -> Vec<Rational> {
    let mut out = zeros(d);
    for (i, xi) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
        for (j, yj) in y.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            let xy = xi * yj;
            for (k, zk) in z.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                let base = ((i * d + j) * d + k) * d;
                axpy(&mut out, &(&xy * zk), &t[base..base + d]);
            }
        }
    }
    out
}

fn e(d: usize, i: usize) -> Vec<Rational> {
    crate::exact::vector::unit(d, i)
}

impl PreLy {
    pub fn new(dim: usize, star: Vec<Rational>, triple: Vec<Rational>) -> Result<Self> {
        check_dim("star table length", dim.pow(3), star.len())?;
        check_dim("triple table length", dim.pow(4), triple.len())?;
        Ok(PreLy { dim, star, triple })
    }

    pub fn zero(dim: usize) -> Self {
        PreLy { dim, star: zeros(dim.pow(3)), triple: zeros(dim.pow(4)) }
    }

    /// From basis images `e_i ⋆ e_j` and `{e_i, e_j, e_k}`.
    pub fn from_fns(
        dim: usize,
        mut star: impl FnMut(usize, usize) -> Vec<Rational>,
        mut triple: impl FnMut(usize, usize, usize) -> Vec<Rational>,
    ) -> Self {
        let mut s = Vec::with_capacity(dim.pow(3));
        let mut t = Vec::with_capacity(dim.pow(4));
        for i in 0..dim {
            for j in 0..dim {
                let v = star(i, j);
                assert_eq!(v.len(), dim);
                s.extend(v);
                for k in 0..dim {
                    let v = triple(i, j, k);
                    assert_eq!(v.len(), dim);
                    t.extend(v);
                }
            }
        }
        PreLy { dim, star: s, triple: t }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn star_table(&self) -> &[Rational] {
        &self.star
    }

    pub fn triple_table(&self) -> &[Rational] {
        &self.triple
    }

    pub fn star_get(&self, i: usize, j: usize, k: usize) -> &Rational {
        &self.star[(i * self.dim + j) * self.dim + k]
    }

    pub fn triple_get(&self, i: usize, j: usize, k: usize, l: usize) -> &Rational {
        &self.triple[((i * self.dim + j) * self.dim + k) * self.dim + l]
    }

    pub fn is_zero(&self) -> bool {
        self.star.iter().chain(&self.triple).all(Rational::is_zero)
    }

    pub fn star(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        bi_apply(self.dim, &self.star, x, y)
    }

    pub fn triple(&self, x: &[Rational], y: &[Rational], z: &[Rational]) -> Vec<Rational> {
        tri_apply(self.dim, &self.triple, x, y, z)
    }

    /// `[x, y]_C = x ⋆ y − y ⋆ x`.
    pub fn commutator(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        let mut v = self.star(x, y);
        sub_into(&mut v, &self.star(y, x));
        v
    }

    /// `(x, y, z) = (x ⋆ y) ⋆ z − x ⋆ (y ⋆ z)`.
    pub fn associator(&self, x: &[Rational], y: &[Rational], z: &[Rational]) -> Vec<Rational> {
        let mut v = self.star(&self.star(x, y), z);
        sub_into(&mut v, &self.star(x, &self.star(y, z)));
        v
    }

    /// `{x, y, z}_D = {z, y, x} − {z, x, y} + (y, x, z) − (x, y, z)`.
    pub fn d_triple(&self, x: &[Rational], y: &[Rational], z: &[Rational]) -> Vec<Rational> {
        let mut v = self.triple(z, y, x);
        sub_into(&mut v, &self.triple(z, x, y));
        add_into(&mut v, &self.associator(y, x, z));
        sub_into(&mut v, &self.associator(x, y, z));
        v
    }

    fn ops(&self) -> Ops {
        let d = self.dim;
        let mut dt = Vec::with_capacity(d.pow(4));
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    dt.extend(self.d_triple(&e(d, i), &e(d, j), &e(d, k)));
                }
            }
        }
        Ops { d, star: self.star.clone(), triple: self.triple.clone(), dt }
    }
}

/// Tabulated operations of one pre-LYA, including `{·,·,·}_D`.
struct Ops {
    d: usize,
    star: Vec<Rational>,
    triple: Vec<Rational>,
    dt: Vec<Rational>,
}

impl Ops {
    fn s(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        bi_apply(self.d, &self.star, x, y)
    }
    fn t(&self, x: &[Rational], y: &[Rational], z: &[Rational]) -> Vec<Rational> {
        tri_apply(self.d, &self.triple, x, y, z)
    }
    fn dd(&self, x: &[Rational], y: &[Rational], z: &[Rational]) -> Vec<Rational> {
        tri_apply(self.d, &self.dt, x, y, z)
    }
    fn c(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        let mut v = self.s(x, y);
        sub_into(&mut v, &self.s(y, x));
        v
    }
    /// `{x,y,z} − {y,x,z}`.
    fn ta(&self, x: &[Rational], y: &[Rational], z: &[Rational]) -> Vec<Rational> {
        let mut v = self.t(x, y, z);
        sub_into(&mut v, &self.t(y, x, z));
        v
    }
}

/// Sums signed terms.
fn combine(terms: &[(i64, Vec<Rational>)]) -> Vec<Rational> {
    let mut out = zeros(terms[0].1.len());
    for (s, v) in terms {
        axpy(&mut out, &Rational::from_integer(*s), v);
    }
    out
}

// Identities with inner operations from `i` and outer ones from `j`. With
// `i == j` they are the five pre-LYA identities; summing over the two
// orderings of distinct structures gives the mixed ones.

fn id1(i: &Ops, j: &Ops, v: &[Vec<Rational>]) -> Vec<Rational> {
    let (x, y, z, w) = (&v[0], &v[1], &v[2], &v[3]);
    combine(&[
        (1, j.t(z, &i.c(x, y), w)),
        (-1, j.t(&i.s(y, z), x, w)),
        (1, j.t(&i.s(x, z), y, w)),
    ])
}

fn id2(i: &Ops, j: &Ops, v: &[Vec<Rational>]) -> Vec<Rational> {
    let (x, y, z, w) = (&v[0], &v[1], &v[2], &v[3]);
    combine(&[
        (1, j.t(x, y, &i.c(z, w))),
        (-1, i.s(z, &j.t(x, y, w))),
        (1, i.s(w, &j.t(x, y, z))),
    ])
}

fn id3(i: &Ops, j: &Ops, v: &[Vec<Rational>]) -> Vec<Rational> {
    let (x, y, z, w, t) = (&v[0], &v[1], &v[2], &v[3], &v[4]);
    combine(&[
        (1, j.t(&i.t(x, y, z), w, t)),
        (-1, j.t(&i.t(x, y, w), z, t)),
        (-1, j.t(x, y, &i.dd(z, w, t))),
        (-1, j.t(x, y, &i.ta(z, w, t))),
        (1, j.dd(z, w, &i.t(x, y, t))),
    ])
}

fn id4(i: &Ops, j: &Ops, v: &[Vec<Rational>]) -> Vec<Rational> {
    let (x, y, z, w, t) = (&v[0], &v[1], &v[2], &v[3], &v[4]);
    combine(&[
        (1, j.t(z, &i.dd(x, y, w), t)),
        (1, j.t(z, &i.ta(x, y, w), t)),
        (1, j.t(z, w, &i.dd(x, y, t))),
        (1, j.t(z, w, &i.ta(x, y, t))),
        (-1, j.dd(x, y, &i.t(z, w, t))),
        (1, j.t(&i.dd(x, y, z), w, t)),
    ])
}

fn id5(i: &Ops, j: &Ops, v: &[Vec<Rational>]) -> Vec<Rational> {
    let (x, y, z, w) = (&v[0], &v[1], &v[2], &v[3]);
    combine(&[
        (1, j.s(&i.dd(x, y, z), w)),
        (1, j.s(&i.ta(x, y, z), w)),
        (-1, j.dd(x, y, &i.s(z, w))),
        (1, i.s(z, &j.dd(x, y, w))),
    ])
}

type Identity = fn(&Ops, &Ops, &[Vec<Rational>]) -> Vec<Rational>;

const IDENTITIES: [(Identity, usize); 5] = [(id1, 4), (id2, 4), (id3, 5), (id4, 5), (id5, 4)];

fn basis_args(d: usize, t: &[usize]) -> Vec<Vec<Rational>> {
    t.iter().map(|&i| e(d, i)).collect()
}

/// Evaluates one identity on all basis tuples, in parallel over the first
/// index; witnesses keep lexicographic order.
fn run_identity(id: &str, d: usize, arity: usize, f: impl Fn(&[Vec<Rational>]) -> Vec<Rational> + Sync) -> CheckReport {
    let parts: Vec<Vec<(Vec<usize>, Vec<Rational>)>> = (0..d)
        .into_par_iter()
        .map(|first| {
            let mut out = Vec::new();
            for_each_tuple(d, arity - 1, |rest| {
                let mut t = vec![first];
                t.extend_from_slice(rest);
                out.push((t.clone(), f(&basis_args(d, &t))));
            });
            out
        })
        .collect();
    let mut r = CheckReport::new(id);
    for (t, res) in parts.into_iter().flatten() {
        r.record(&t, &res);
    }
    r
}

/// The five pre-LYA identities (`PLY1`..`PLY5`) on all basis tuples.
pub fn check_pre_lya(p: &PreLy) -> Vec<CheckReport> {
    let o = p.ops();
    IDENTITIES
        .iter()
        .enumerate()
        .map(|(n, &(f, arity))| run_identity(&format!("PLY{}", n + 1), p.dim, arity, |v| f(&o, &o, v)))
        .collect()
}

pub fn is_pre_lya(p: &PreLy) -> bool {
    all_hold(&check_pre_lya(p))
}

/// Two pre-LYA structures on one basis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompatPreLy {
    pub first: PreLy,
    pub second: PreLy,
}

impl CompatPreLy {
    pub fn new(first: PreLy, second: PreLy) -> Result<Self> {
        check_dim("second pre-LYA dimension", first.dim, second.dim)?;
        Ok(CompatPreLy { first, second })
    }

    pub fn dim(&self) -> usize {
        self.first.dim
    }
}

/// Prerequisite reports for both components (`PLY*[1]`, `PLY*[2]`) followed
/// by the five mixed identities `CPLY1`..`CPLY5`.
pub fn check_compat_pre_lya(cp: &CompatPreLy) -> Vec<CheckReport> {
    let mut out: Vec<CheckReport> = check_pre_lya(&cp.first).into_iter().map(|r| r.with_suffix("[1]")).collect();
    out.extend(check_pre_lya(&cp.second).into_iter().map(|r| r.with_suffix("[2]")));
    let (o1, o2) = (cp.first.ops(), cp.second.ops());
    for (n, &(f, arity)) in IDENTITIES.iter().enumerate() {
        out.push(run_identity(&format!("CPLY{}", n + 1), cp.dim(), arity, |v| {
            let mut r = f(&o1, &o2, v);
            add_into(&mut r, &f(&o2, &o1, v));
            r
        }));
    }
    out
}

pub fn is_compat_pre_lya(cp: &CompatPreLy) -> bool {
    all_hold(&check_compat_pre_lya(cp))
}

fn lemma_i(i: &Ops, j: &Ops, v: &[Vec<Rational>]) -> Vec<Rational> {
    let (x, y, z, t) = (&v[0], &v[1], &v[2], &v[3]);
    combine(&[
        (1, j.dd(&i.c(x, y), z, t)),
        (1, j.dd(&i.c(y, z), x, t)),
        (1, j.dd(&i.c(z, x), y, t)),
    ])
}

fn lemma_ii(i: &Ops, j: &Ops, v: &[Vec<Rational>]) -> Vec<Rational> {
    let (x, y, z, w, t) = (&v[0], &v[1], &v[2], &v[3], &v[4]);
    combine(&[
        (1, j.dd(x, y, &i.dd(z, w, t))),
        (-1, j.dd(&i.dd(x, y, z), w, t)),
        (-1, j.dd(&i.ta(x, y, z), w, t)),
        (-1, j.dd(z, &i.dd(x, y, w), t)),
        (-1, j.dd(z, &i.ta(x, y, w), t)),
        (-1, j.dd(z, w, &i.dd(x, y, t))),
    ])
}

/// Both identities of the lemma for each ordering `(i, j)` of the two
/// structures: `L41-i[12]`, `L41-i[21]`, `L41-ii[12]`, `L41-ii[21]`.
pub fn check_lemma41(cp: &CompatPreLy) -> Vec<CheckReport> {
    let (o1, o2) = (cp.first.ops(), cp.second.ops());
    let d = cp.dim();
    vec![
        run_identity("L41-i[12]", d, 4, |v| lemma_i(&o1, &o2, v)),
        run_identity("L41-i[21]", d, 4, |v| lemma_i(&o2, &o1, v)),
        run_identity("L41-ii[12]", d, 5, |v| lemma_ii(&o1, &o2, v)),
        run_identity("L41-ii[21]", d, 5, |v| lemma_ii(&o2, &o1, v)),
    ]
}

/// `x ⋆ y = [Rx, y]` and the convention's triple product.
pub fn induce_pre_lya_unchecked(a: &LyAlgebra, r: &LinearMap, conv: RbConvention) -> PreLy {
    let d = a.dim();
    let rx = columns(r);
    PreLy::from_fns(
        d,
        |i, j| a.bracket(&rx[i], &a.e(j)),
        |i, j, k| match conv {
            RbConvention::Cyclic => a.triple(&rx[j], &rx[k], &a.e(i)),
            RbConvention::Slotwise => a.triple(&a.e(i), &rx[j], &rx[k]),
        },
    )
}

/// Induced pre-LYA with its identity reports.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedPreLy {
    pub pre: PreLy,
    /// `PLY1`..`PLY5`, then the informational `D-operator-form` comparing
    /// `{x,y,z}_D` with `[Rx, Ry, z]`.
    pub reports: Vec<CheckReport>,
}

fn d_operator_form(a: &LyAlgebra, r: &LinearMap, p: &PreLy) -> CheckReport {
    let d = a.dim();
    let rx = columns(r);
    let mut rep = CheckReport::new("D-operator-form").informational();
    for_each_tuple(d, 3, |t| {
        let mut v = p.d_triple(&e(d, t[0]), &e(d, t[1]), &e(d, t[2]));
        sub_into(&mut v, &a.triple(&rx[t[0]], &rx[t[1]], &e(d, t[2])));
        rep.record(t, &v);
    });
    rep
}

fn require_reports(what: &'static str, reports: &[CheckReport]) -> Result<()> {
    if all_hold(reports) {
        Ok(())
    } else {
        Err(Error::AxiomFailure { what, failing: failing_ids(reports) })
    }
}

/// Errors with an axiom failure when `r` is not Rota-Baxter under `conv`.
pub fn induce_pre_lya(a: &LyAlgebra, r: &LinearMap, conv: RbConvention) -> Result<InducedPreLy> {
    require_reports("Rota-Baxter operator", &check_rb(a, r, conv)?)?;
    let pre = induce_pre_lya_unchecked(a, r, conv);
    let mut reports = check_pre_lya(&pre);
    reports.push(d_operator_form(a, r, &pre));
    Ok(InducedPreLy { pre, reports })
}

/// Componentwise induced pair; `r` must be Rota-Baxter for both structures.
pub fn induce_compat_pre_lya(c: &CompatibleLy, r: &LinearMap, conv: RbConvention) -> Result<CompatPreLy> {
    require_reports("Rota-Baxter operator on both structures", &check_rb_compatible(c, r, conv)?)?;
    CompatPreLy::new(
        induce_pre_lya_unchecked(c.first(), r, conv),
        induce_pre_lya_unchecked(c.second(), r, conv),
    )
}

/// `[x,y]_c = x ⋆ y − y ⋆ x` and `[x,y,z]_c = {x,y,z}_D + {x,y,z} − {y,x,z}`.
pub fn subadjacent_single(p: &PreLy) -> Result<LyAlgebra> {
    let d = p.dim;
    let pi = BilinearMap::from_fn(d, |i, j| p.commutator(&e(d, i), &e(d, j)));
    let omega = TrilinearMap::from_fn(d, |i, j, k| {
        let (x, y, z) = (e(d, i), e(d, j), e(d, k));
        let mut v = p.d_triple(&x, &y, &z);
        add_into(&mut v, &p.triple(&x, &y, &z));
        sub_into(&mut v, &p.triple(&y, &x, &z));
        v
    });
    LyAlgebra::new(pi, omega)
}

/// Sub-adjacent pair without checking the input identities.
pub fn subadjacent_unchecked(cp: &CompatPreLy) -> Result<CompatibleLy> {
    CompatibleLy::new(subadjacent_single(&cp.first)?, subadjacent_single(&cp.second)?)
}

/// Sub-adjacent compatible algebra; the input must pass [`check_compat_pre_lya`].
pub fn subadjacent(cp: &CompatPreLy) -> Result<CompatibleLy> {
    require_reports("compatible pre-Lie Yamaguti identities", &check_compat_pre_lya(cp))?;
    subadjacent_unchecked(cp)
}

/// Homomorphism preconditions (informational) and `RB-HOM`: `φ R1 = R2 φ`,
/// witnessed by column.
pub fn check_rb_homomorphism(
    c1: &CompatibleLy,
    r1: &LinearMap,
    c2: &CompatibleLy,
    r2: &LinearMap,
    phi: &LinearMap,
) -> Result<Vec<CheckReport>> {
    check_square(c1.dim(), r1)?;
    check_square(c2.dim(), r2)?;
    let mut out: Vec<CheckReport> = check_compat_homomorphism(c1, c2, phi)?
        .into_iter()
        .map(|mut r| {
            r.axiom_id = format!("precondition:{}", r.axiom_id);
            r
        })
        .collect();
    let diff: Matrix = phi.matrix().mul(r1.matrix()).sub(&r2.matrix().mul(phi.matrix()));
    let mut rep = CheckReport::new("RB-HOM");
    for j in 0..diff.cols() {
        rep.record(&[j], &diff.column(j));
    }
    out.push(rep);
    Ok(out)
}

/// What a Rota-Baxter search targets.
#[derive(Clone, Copy, Debug)]
pub enum RbTarget<'a> {
    Single(&'a LyAlgebra),
    Compatible(&'a CompatibleLy),
}

impl RbTarget<'_> {
    fn dim(&self) -> usize {
        match self {
            RbTarget::Single(a) => a.dim(),
            RbTarget::Compatible(c) => c.dim(),
        }
    }

    fn accepts(&self, r: &LinearMap, conv: RbConvention) -> bool {
        match self {
            RbTarget::Single(a) => is_rb(a, r, conv),
            RbTarget::Compatible(c) => is_rb_compatible(c, r, conv),
        }
    }
}

/// Default bound on the number of candidate matrices in [`search_rb`].
pub const DEFAULT_GRID_CAP: u128 = 1 << 21;

/// All operators with entries from `entry_set` (sorted, deduplicated)
/// satisfying the Rota-Baxter identities, in lexicographic order of their
/// row-major entry sequences.
pub fn search_rb(target: RbTarget<'_>, conv: RbConvention, entry_set: &[Rational], grid_cap: u128) -> Result<Vec<LinearMap>> {
    let mut entries = entry_set.to_vec();
    entries.sort();
    entries.dedup();
    if entries.is_empty() {
        return Err(Error::Invalid("empty entry set".into()));
    }
    let d = target.dim();
    let cells = d * d;
    let base = entries.len() as u128;
    let size = u32::try_from(cells)
        .ok()
        .and_then(|c| base.checked_pow(c))
        .filter(|&s| s <= grid_cap)
        .ok_or(Error::ResourceCap {
            what: "Rota-Baxter search grid",
            requested: base.checked_pow(cells as u32).unwrap_or(u128::MAX),
            cap: grid_cap,
        })?;
    let build = |mut idx: u128| -> LinearMap {
        let mut flat = vec![Rational::zero(); cells];
        for slot in (0..cells).rev() {
            flat[slot] = entries[(idx % base) as usize].clone();
            idx /= base;
        }
        LinearMap::new(Matrix::new(d, d, flat).expect("square grid point"))
    };
    let size = usize::try_from(size).expect("grid size below cap");
    let found: Vec<LinearMap> = (0..size)
        .into_par_iter()
        .with_min_len(256)
        .filter_map(|i| {
            let r = build(i as u128);
            target.accepts(&r, conv).then_some(r)
        })
        .collect();
    Ok(found)
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
    fn zero_operator_is_rb() {
        let a = alg1();
        for conv in RbConvention::ALL {
            assert!(all_hold(&check_rb(&a, &LinearMap::zero(2, 2), conv).unwrap()));
            assert!(is_rb(&a, &LinearMap::zero(2, 2), conv));
        }
    }

    #[test]
    fn identity_fails_on_nonabelian() {
        let a = alg1();
        assert!(!is_rb(&a, &LinearMap::identity(2), RbConvention::Slotwise));
        assert!(is_rb(&LyAlgebra::abelian(2), &LinearMap::identity(2), RbConvention::Cyclic));
    }

    #[test]
    fn tokens_round_trip() {
        for c in RbConvention::ALL {
            assert_eq!(RbConvention::from_token(c.token()), Some(c));
        }
        assert_eq!(RbConvention::from_token("sec3"), None);
    }

    #[test]
    fn search_contains_zero_and_is_sorted() {
        let a = alg1();
        let found = search_rb(RbTarget::Single(&a), RbConvention::Slotwise, &[q(1), q(0), q(-1)], DEFAULT_GRID_CAP).unwrap();
        assert!(found.iter().any(LinearMap::is_zero));
        let keys: Vec<Vec<Rational>> = found.iter().map(|m| m.matrix().entries().to_vec()).collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
        for r in &found {
            assert!(all_hold(&check_rb(&a, r, RbConvention::Slotwise).unwrap()));
        }
    }

    #[test]
    fn abelian_search_finds_everything() {
        let a = LyAlgebra::abelian(2);
        let found = search_rb(RbTarget::Single(&a), RbConvention::Cyclic, &[q(0), q(1)], DEFAULT_GRID_CAP).unwrap();
        assert_eq!(found.len(), 16);
    }

    #[test]
    fn grid_cap_is_enforced() {
        let a = LyAlgebra::abelian(3);
        assert!(matches!(
            search_rb(RbTarget::Single(&a), RbConvention::Cyclic, &[q(0), q(1), q(2)], 100),
            Err(Error::ResourceCap { .. })
        ));
    }

    #[test]
    fn zero_pre_lya_passes() {
        assert!(is_pre_lya(&PreLy::zero(2)));
        let cp = CompatPreLy::new(PreLy::zero(2), PreLy::zero(2)).unwrap();
        assert!(is_compat_pre_lya(&cp));
        assert!(all_hold(&check_lemma41(&cp)));
        let s = subadjacent(&cp).unwrap();
        assert!(s.first().pi().is_zero() && s.second().omega().is_zero());
    }

    #[test]
    fn induced_pre_lya_from_zero_operator_is_zero() {
        let ind = induce_pre_lya(&alg1(), &LinearMap::zero(2, 2), RbConvention::Cyclic).unwrap();
        assert!(ind.pre.is_zero());
        assert!(all_hold(&ind.reports));
    }
}
