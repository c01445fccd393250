//! Yamaguti coboundary, the compatible complex and infinitesimal deformations.

use rayon::prelude::*;
use serde::Serialize;

use crate::cochain::{graded_bracket, pair_count, pairs, wedge, Cochain, CoordKey, Part};
use crate::compat::{check_compatible, is_compatible, CompatibleLy};
use crate::error::{check_dim, Error, Result};
use crate::exact::vector::{add_into, axpy, sub_into, unit, zeros};
use crate::exact::{EchelonBasis, Matrix, Rational, SparseVec};
use crate::lya::{BilinearMap, LinearMap, LyAlgebra, TrilinearMap};
use crate::rep::{adjoint_unchecked, derived_d, Representation};
use crate::report::{all_hold, CheckReport};

/// Largest cochain degree (number of wedge slots) any operation here produces.
pub const COCHAIN_DEGREE_CAP: usize = 3;

fn sign(negative: bool) -> Rational {
    if negative {
        Rational::from_integer(-1)
    } else {
        Rational::one()
    }
}

/// `δ⁰f = (ρ(x)f(y) − ρ(y)f(x) − f([x,y]), D(x,y)f(z) + μ(y,z)f(x) − μ(x,z)f(y) − f([x,y,z]))`.
pub fn delta0(f: &LinearMap, a: &LyAlgebra, rep: &Representation) -> Result<Cochain> {
    let d = a.dim();
    check_dim("map source", d, f.src_dim())?;
    check_dim("map target", rep.v_dim(), f.dst_dim())?;
    let dt = derived_d(rep, a)?;
    let vd = rep.v_dim();
    let fi: Vec<Vec<Rational>> = (0..d).map(|j| f.image_of_basis(j)).collect();
    let mut out = Cochain::zero(d, 1, vd);
    for (t, &(x, y)) in pairs(d).iter().enumerate() {
        let mut v = rep.rho(x).mul_vec(&fi[y]);
        sub_into(&mut v, &rep.rho(y).mul_vec(&fi[x]));
        sub_into(&mut v, &f.apply(a.pi().basis(x, y)));
        for (k, val) in v.into_iter().enumerate() {
            out.set(t * vd + k, val);
        }
        for z in 0..d {
            let mut v = dt.get(x, y).mul_vec(&fi[z]);
            add_into(&mut v, &rep.mu(y, z).mul_vec(&fi[x]));
            sub_into(&mut v, &rep.mu(x, z).mul_vec(&fi[y]));
            sub_into(&mut v, &f.apply(a.omega().basis(x, y, z)));
            let base = out.f_len() + (t * d + z) * vd;
            for (k, val) in v.into_iter().enumerate() {
                out.set(base + k, val);
            }
        }
    }
    Ok(out)
}

/// The coboundary `δ = (δ₁, δ₂)` with coefficients in `rep`. A degree-`n`
/// cochain (`n` wedge slots) maps to degree `n + 1`; degree 0 uses [`delta0`].
pub fn delta(fc: &Cochain, a: &LyAlgebra, rep: &Representation) -> Result<Cochain> {
    delta_capped(fc, a, rep, COCHAIN_DEGREE_CAP)
}

/// [`delta`] with an explicit bound on the output degree.
pub fn delta_capped(fc: &Cochain, a: &LyAlgebra, rep: &Representation, cap: usize) -> Result<Cochain> {
    let d = a.dim();
    check_dim("cochain arguments", d, fc.dim())?;
    check_dim("cochain values", rep.v_dim(), fc.value_dim())?;
    let n = fc.degree();
    if n + 1 > cap {
        return Err(Error::DegreeAboveCap { degree: n + 1, cap });
    }
    if n == 0 {
        return delta0(&fc.to_linear_map()?, a, rep);
    }
    let dt = derived_d(rep, a)?;
    let vd = rep.v_dim();
    let np = pair_count(d);
    let all = pairs(d);
    let sn = sign(n % 2 == 1);
    let basis = |b: usize| -> SparseVec { vec![(b, Rational::one())] };
    // X_k ∘ X_l as a sparse wedge element.
    let circ = |k: usize, l: usize| -> SparseVec {
        let (xk, yk) = all[k];
        let (xl, yl) = all[l];
        let mut acc = wedge(d, a.omega().basis(xk, yk, xl), &unit(d, yl));
        acc.extend(wedge(d, &unit(d, xl), a.omega().basis(xk, yk, yl)));
        let mut dense = zeros(np);
        for (i, v) in acc {
            dense[i] += v;
        }
        crate::exact::sparse_from_dense(&dense)
    };

    let compute = |t: usize| -> (Vec<Rational>, Vec<Rational>) {
        let mut idx = vec![0; n + 1];
        let mut r = t;
        for slot in (0..=n).rev() {
            idx[slot] = r % np;
            r /= np;
        }
        let xy: Vec<(usize, usize)> = idx.iter().map(|&b| all[b]).collect();
        let head: Vec<SparseVec> = idx[..n].iter().map(|&b| basis(b)).collect();
        let without = |k: usize| -> Vec<SparseVec> {
            idx.iter().enumerate().filter(|&(m, _)| m != k).map(|(_, &b)| basis(b)).collect()
        };
        let one = Rational::one();
        let (xn, yn) = xy[n];
        let mut out_f = zeros(vd);
        let mut out_g = zeros(d * vd);

        // δ₁: leading term.
        let mut g_y = zeros(vd);
        fc.eval_g(&head, &unit(d, yn), &one, &mut g_y);
        let mut g_x = zeros(vd);
        fc.eval_g(&head, &unit(d, xn), &one, &mut g_x);
        let mut lead = rep.rho(xn).mul_vec(&g_y);
        sub_into(&mut lead, &rep.rho(yn).mul_vec(&g_x));
        fc.eval_g(&head, a.pi().basis(xn, yn), &Rational::from_integer(-1), &mut lead);
        axpy(&mut out_f, &sn, &lead);
        // δ₁: D(X_k) f(…X̂_k…), k = 1..n.
        for k in 0..n {
            let mut v = zeros(vd);
            fc.eval_f(&without(k), &one, &mut v);
            let s = sign(k % 2 == 1);
            axpy(&mut out_f, &s, &dt.get(xy[k].0, xy[k].1).mul_vec(&v));
        }
        // δ₁ and δ₂: X_k ∘ X_l terms, sign (−1)^k with 1-based k.
        for k in 0..=n {
            for l in k + 1..=n {
                let mut args = without(k);
                args[l - 1] = circ(idx[k], idx[l]);
                let s = sign(k % 2 == 0);
                fc.eval_f(&args, &s, &mut out_f);
                for z in 0..d {
                    fc.eval_g(&args, &unit(d, z), &s, &mut out_g[z * vd..(z + 1) * vd]);
                }
            }
        }
        for z in 0..d {
            let og = &mut out_g[z * vd..(z + 1) * vd];
            // δ₂: leading term.
            let mut lead = rep.mu(yn, z).mul_vec(&g_x);
            sub_into(&mut lead, &rep.mu(xn, z).mul_vec(&g_y));
            axpy(og, &sn, &lead);
            for k in 0..=n {
                let args = without(k);
                // D(X_k) g(…X̂_k…, z), k = 1..n+1.
                let mut v = zeros(vd);
                fc.eval_g(&args, &unit(d, z), &one, &mut v);
                axpy(og, &sign(k % 2 == 1), &dt.get(xy[k].0, xy[k].1).mul_vec(&v));
                // (−1)^k g(…X̂_k…, [x_k, y_k, z]).
                fc.eval_g(&args, a.omega().basis(xy[k].0, xy[k].1, z), &sign(k % 2 == 0), og);
            }
        }
        (out_f, out_g)
    };

    let total = np.pow((n + 1) as u32);
    let blocks: Vec<(Vec<Rational>, Vec<Rational>)> =
        (0..total).into_par_iter().with_min_len(32).map(compute).collect();
    let mut data = Vec::with_capacity(Cochain::space_dim(d, n + 1, vd));
    let mut gs = Vec::with_capacity(total * d * vd);
    for (bf, bg) in blocks {
        data.extend(bf);
        gs.extend(bg);
    }
    data.extend(gs);
    Cochain::from_data(d, n + 1, vd, data)
}

/// Witness tuple for a cochain coordinate: `[part, i1, j1, …, (z), k]`
/// with `part` 0 for `f` and 1 for `g`.
pub fn key_tuple(key: &CoordKey) -> Vec<usize> {
    let mut t = vec![match key.part {
        Part::F => 0,
        Part::G => 1,
    }];
    for &(i, j) in &key.pairs {
        t.push(i);
        t.push(j);
    }
    if let Some(z) = key.z {
        t.push(z);
    }
    t.push(key.k);
    t
}

/// Report of the coordinates where `c` is nonzero.
pub fn zero_report(id: impl Into<String>, c: &Cochain) -> CheckReport {
    let mut r = CheckReport::new(id);
    for (i, v) in c.data().iter().enumerate() {
        r.checked += 1;
        if !v.is_zero() {
            r.violation(&key_tuple(&c.coord_key(i)), vec![v.clone()]);
        }
    }
    r
}

/// Compares `δF` with `(−1)ⁿ[Π, F]` for adjoint coefficients.
pub fn delta_vs_bracket(fc: &Cochain, a: &LyAlgebra) -> Result<CheckReport> {
    check_dim("cochain values", a.dim(), fc.value_dim())?;
    let rep = adjoint_unchecked(a);
    let lhs = delta(fc, a, &rep)?;
    let pi = Cochain::from_algebra(a);
    let rhs = graded_bracket(&pi, fc)?.scale(&sign(fc.degree() % 2 == 1));
    Ok(zero_report("DELTA=BRACKET", &lhs.sub(&rhs)))
}

/// Element of the compatible complex at `level`: `level + 1` cochains of
/// degree `level`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompatCochainTuple {
    level: usize,
    components: Vec<Cochain>,
}

impl CompatCochainTuple {
    pub fn new(components: Vec<Cochain>) -> Result<Self> {
        let level = components.len().checked_sub(1).ok_or_else(|| Error::Invalid("empty cochain tuple".into()))?;
        let (d, vd) = (components[0].dim(), components[0].value_dim());
        for c in &components {
            check_dim("tuple component degree", level, c.degree())?;
            check_dim("tuple component arguments", d, c.dim())?;
            check_dim("tuple component values", vd, c.value_dim())?;
        }
        Ok(CompatCochainTuple { level, components })
    }

    pub fn zero(dim: usize, level: usize) -> Self {
        CompatCochainTuple { level, components: vec![Cochain::zero(dim, level, dim); level + 1] }
    }

    pub fn from_map(f: &LinearMap) -> Self {
        CompatCochainTuple { level: 0, components: vec![Cochain::from_linear_map(f)] }
    }

    /// Basis element: coordinate `coord` of component `comp` set to one.
    pub fn unit(dim: usize, level: usize, comp: usize, coord: usize) -> Self {
        let mut t = Self::zero(dim, level);
        t.components[comp] = Cochain::unit(dim, level, dim, coord);
        t
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn components(&self) -> &[Cochain] {
        &self.components
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(Cochain::is_zero)
    }

    /// Dimension of the space of tuples at `level` over a `dim`-dimensional algebra.
    pub fn space_dim(dim: usize, level: usize) -> usize {
        (level + 1) * Cochain::space_dim(dim, level, dim)
    }

    pub fn to_sparse(&self) -> SparseVec {
        let mut out = Vec::new();
        let mut off = 0;
        for c in &self.components {
            out.extend(c.to_sparse().into_iter().map(|(i, v)| (i + off, v)));
            off += c.len();
        }
        out
    }
}

/// `δ_c(F_0, …, F_m)_i = [Π₂, F_{i−1}] + [Π₁, F_i]` for `i = 0..=m+1`.
pub fn delta_c(fs: &CompatCochainTuple, c: &CompatibleLy) -> Result<CompatCochainTuple> {
    delta_c_capped(fs, c, COCHAIN_DEGREE_CAP)
}

/// [`delta_c`] with an explicit bound on the output level.
pub fn delta_c_capped(fs: &CompatCochainTuple, c: &CompatibleLy, cap: usize) -> Result<CompatCochainTuple> {
    let m = fs.level;
    if m + 1 > cap {
        return Err(Error::DegreeAboveCap { degree: m + 1, cap });
    }
    let d = c.dim();
    check_dim("tuple arguments", d, fs.components[0].dim())?;
    check_dim("tuple values", d, fs.components[0].value_dim())?;
    let p1 = Cochain::from_algebra(c.first());
    let p2 = Cochain::from_algebra(c.second());
    let bracket = |p: &Cochain, f: &Cochain| {
        if f.is_zero() {
            Ok(Cochain::zero(d, m + 1, d))
        } else {
            graded_bracket(p, f)
        }
    };
    let b1: Vec<Cochain> = fs.components.iter().map(|f| bracket(&p1, f)).collect::<Result<_>>()?;
    let b2: Vec<Cochain> = fs.components.iter().map(|f| bracket(&p2, f)).collect::<Result<_>>()?;
    let mut out = Vec::with_capacity(m + 2);
    for i in 0..=m + 1 {
        let mut acc = Cochain::zero(d, m + 1, d);
        if i >= 1 {
            acc = acc.add(&b2[i - 1]);
        }
        if i <= m {
            acc = acc.add(&b1[i]);
        }
        out.push(acc);
    }
    Ok(CompatCochainTuple { level: m + 1, components: out })
}

/// Caps for [`cohomology_dim`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CohomologyOptions {
    pub degree_cap: usize,
    pub dim_cap: usize,
}

impl Default for CohomologyOptions {
    fn default() -> Self {
        CohomologyOptions { degree_cap: 2, dim_cap: 4 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CohomologyDims {
    pub n: usize,
    pub cochain_dim: usize,
    /// Rank of `δ_c` on level `n`.
    pub rank: usize,
    pub kernel: usize,
    /// Rank of `δ_c` on level `n − 1`.
    pub image: usize,
    pub h: usize,
    /// Whether `δ_c ∘ δ_c` vanished on every basis element of level `n − 1`.
    pub image_in_kernel: bool,
}

/// `([Π₁, f], [Π₂, f])` for every unit cochain `f` of degree `level`.
fn unit_brackets(c: &CompatibleLy, level: usize) -> Result<Vec<(Cochain, Cochain)>> {
    let d = c.dim();
    let p1 = Cochain::from_algebra(c.first());
    let p2 = Cochain::from_algebra(c.second());
    (0..Cochain::space_dim(d, level, d))
        .into_par_iter()
        .map(|b| {
            let f = Cochain::unit(d, level, d, b);
            Ok((graded_bracket(&p1, &f)?, graded_bracket(&p2, &f)?))
        })
        .collect()
}

/// Columns of `δ_c` on the unit basis of `level`: the unit `f` in slot `comp`
/// maps to `[Π₁, f]` in slot `comp` and `[Π₂, f]` in slot `comp + 1`.
fn columns_from_brackets(brackets: &[(Cochain, Cochain)], level: usize) -> Vec<SparseVec> {
    let out_len = brackets.first().map_or(0, |(b, _)| b.len());
    let sparse: Vec<(SparseVec, SparseVec)> = brackets.iter().map(|(b1, b2)| (b1.to_sparse(), b2.to_sparse())).collect();
    let mut cols = Vec::with_capacity((level + 1) * sparse.len());
    for comp in 0..=level {
        for (s1, s2) in &sparse {
            let mut col: SparseVec = s1.iter().map(|(i, v)| (i + comp * out_len, v.clone())).collect();
            col.extend(s2.iter().map(|(i, v)| (i + (comp + 1) * out_len, v.clone())));
            cols.push(col);
        }
    }
    cols
}

/// Rank of `δ_c` on level `level`, from its columns on the unit basis.
pub fn delta_c_rank(c: &CompatibleLy, level: usize) -> Result<usize> {
    if level + 1 > COCHAIN_DEGREE_CAP {
        return Err(Error::DegreeAboveCap { degree: level + 1, cap: COCHAIN_DEGREE_CAP });
    }
    let brackets = unit_brackets(c, level)?;
    let mut e = EchelonBasis::new();
    for col in columns_from_brackets(&brackets, level) {
        e.insert(col);
    }
    Ok(e.rank())
}

/// `dim ker δ_cⁿ`, `dim im δ_cⁿ⁻¹` and their difference.
pub fn cohomology_dim(c: &CompatibleLy, n: usize, opts: CohomologyOptions) -> Result<CohomologyDims> {
    if n > opts.degree_cap {
        return Err(Error::ResourceCap { what: "cohomology degree", requested: n as u128, cap: opts.degree_cap as u128 });
    }
    if c.dim() > opts.dim_cap {
        return Err(Error::ResourceCap { what: "cohomology dimension", requested: c.dim() as u128, cap: opts.dim_cap as u128 });
    }
    let d = c.dim();
    let cochain_dim = CompatCochainTuple::space_dim(d, n);
    let rank = delta_c_rank(c, n)?;
    let kernel = cochain_dim - rank;
    let (image, image_in_kernel) = if n == 0 {
        (0, true)
    } else {
        let brackets = unit_brackets(c, n - 1)?;
        // δ_c∘δ_c of a unit in any slot has components [Π₁,[Π₁,f]],
        // [Π₂,[Π₁,f]] + [Π₁,[Π₂,f]] and [Π₂,[Π₂,f]].
        let p1 = Cochain::from_algebra(c.first());
        let p2 = Cochain::from_algebra(c.second());
        let ok = brackets
            .par_iter()
            .map(|(b1, b2)| -> Result<bool> {
                Ok(graded_bracket(&p1, b1)?.is_zero()
                    && graded_bracket(&p2, b1)?.add(&graded_bracket(&p1, b2)?).is_zero()
                    && graded_bracket(&p2, b2)?.is_zero())
            })
            .collect::<Result<Vec<bool>>>()?
            .into_iter()
            .all(|z| z);
        let mut e = EchelonBasis::new();
        for col in columns_from_brackets(&brackets, n - 1) {
            e.insert(col);
        }
        (e.rank(), ok)
    };
    Ok(CohomologyDims { n, cochain_dim, rank, kernel, image, h: kernel.saturating_sub(image), image_in_kernel })
}

/// `(μ₁, λ₁, μ₂, λ₂)` perturbing `(π₁, ω₁, π₂, ω₂)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeformationGenerator {
    pub mu1: BilinearMap,
    pub lambda1: TrilinearMap,
    pub mu2: BilinearMap,
    pub lambda2: TrilinearMap,
}

impl DeformationGenerator {
    pub fn zero(dim: usize) -> Self {
        DeformationGenerator {
            mu1: BilinearMap::zero(dim),
            lambda1: TrilinearMap::zero(dim),
            mu2: BilinearMap::zero(dim),
            lambda2: TrilinearMap::zero(dim),
        }
    }

    /// The structure of `c` itself.
    pub fn from_compatible(c: &CompatibleLy) -> Self {
        DeformationGenerator {
            mu1: c.first().pi().clone(),
            lambda1: c.first().omega().clone(),
            mu2: c.second().pi().clone(),
            lambda2: c.second().omega().clone(),
        }
    }

    /// From a level-1 tuple `((μ₁, λ₁), (μ₂, λ₂))`.
    pub fn from_tuple(t: &CompatCochainTuple) -> Result<Self> {
        if t.level != 1 {
            return Err(Error::Invalid(format!("generator needs a level-1 tuple, got level {}", t.level)));
        }
        let (mu1, lambda1) = t.components[0].to_structure()?;
        let (mu2, lambda2) = t.components[1].to_structure()?;
        Ok(DeformationGenerator { mu1, lambda1, mu2, lambda2 })
    }

    pub fn dim(&self) -> usize {
        self.mu1.dim()
    }

    pub fn as_tuple(&self) -> CompatCochainTuple {
        CompatCochainTuple {
            level: 1,
            components: vec![
                Cochain::from_structure(&self.mu1, &self.lambda1),
                Cochain::from_structure(&self.mu2, &self.lambda2),
            ],
        }
    }

    /// The generator read as a pair of structures (no validity implied).
    pub fn as_compatible(&self) -> Result<CompatibleLy> {
        CompatibleLy::new(
            LyAlgebra::new(self.mu1.clone(), self.lambda1.clone())?,
            LyAlgebra::new(self.mu2.clone(), self.lambda2.clone())?,
        )
    }
}

/// `(π_i + tμ_i, ω_i + tλ_i)`; validity is not asserted.
pub fn deform(c: &CompatibleLy, g: &DeformationGenerator, t: &Rational) -> Result<CompatibleLy> {
    check_dim("generator dimension", c.dim(), g.dim())?;
    let names = c.first().basis_names().to_vec();
    let first = LyAlgebra::with_names(
        names.clone(),
        c.first().pi().add(&g.mu1.scale(t)),
        c.first().omega().add(&g.lambda1.scale(t)),
    )?;
    let second = LyAlgebra::with_names(
        names,
        c.second().pi().add(&g.mu2.scale(t)),
        c.second().omega().add(&g.lambda2.scale(t)),
    )?;
    CompatibleLy::new(first, second)
}

/// Coefficients of the three Maurer-Cartan residuals of the deformed pair as
/// polynomials in `t`, grouped by order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DeformationReport {
    pub order0: Vec<CheckReport>,
    pub order1: Vec<CheckReport>,
    pub order2: Vec<CheckReport>,
    /// Residual at `t = 4` minus the interpolated quadratic.
    pub interpolation: CheckReport,
    /// Which compatibility identities the generator satisfies on its own.
    pub generator_identities: Vec<CheckReport>,
}

impl DeformationReport {
    pub fn order1_holds(&self) -> bool {
        all_hold(&self.order1)
    }

    pub fn order2_holds(&self) -> bool {
        all_hold(&self.order2)
    }

    pub fn all_reports(&self) -> Vec<CheckReport> {
        let mut v = self.order0.clone();
        v.extend(self.order1.iter().cloned());
        v.extend(self.order2.iter().cloned());
        v.push(self.interpolation.clone());
        v.extend(self.generator_identities.iter().cloned());
        v
    }
}

fn mc_triplet(c: &CompatibleLy) -> Result<[Cochain; 3]> {
    let (a, b, m) = crate::cochain::mc_pair_residual(c)?;
    Ok([a, b, m])
}

pub fn check_deformation_generator(c: &CompatibleLy, g: &DeformationGenerator) -> Result<DeformationReport> {
    let r: Vec<[Cochain; 3]> = [1, 2, 3, 4]
        .iter()
        .map(|&t| mc_triplet(&deform(c, g, &Rational::from_integer(t))?))
        .collect::<Result<_>>()?;
    let two = Rational::from_integer(2);
    let names = ["[P1,P1]", "[P2,P2]", "[P1,P2]"];
    let mut order0 = Vec::new();
    let mut order1 = Vec::new();
    let mut order2 = Vec::new();
    let mut interp = CheckReport::new("interpolation");
    for (s, name) in names.iter().enumerate() {
        let (r1, r2, r3, r4) = (&r[0][s], &r[1][s], &r[2][s], &r[3][s]);
        let c2 = r1.sub(&r2.scale(&two)).add(r3).scale(&Rational::new(1, 2));
        let c1 = r2.sub(r1).sub(&c2.scale(&Rational::from_integer(3)));
        let c0 = r1.sub(&c1).sub(&c2);
        let predicted = c0.add(&c1.scale(&Rational::from_integer(4))).add(&c2.scale(&Rational::from_integer(16)));
        let rep = zero_report(format!("interpolation{name}"), &r4.sub(&predicted));
        interp.checked += rep.checked;
        for w in rep.witnesses.iter().take(crate::report::max_witnesses()) {
            interp.violation(&w.tuple, w.residual.clone());
        }
        interp.violations = interp.violations.max(rep.violations);
        order0.push(zero_report(format!("order0:{name}"), &c0));
        order1.push(zero_report(format!("order1:{name}"), &c1));
        order2.push(zero_report(format!("order2:{name}"), &c2));
    }
    let generator_identities = check_compatible(&g.as_compatible()?)
        .into_iter()
        .map(|mut r| {
            r.axiom_id = format!("generator:{}", r.axiom_id);
            r.informational = true;
            r
        })
        .collect();
    Ok(DeformationReport { order0, order1, order2, interpolation: interp, generator_identities })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CocycleStatus {
    Pass,
    Fail,
    Vacuous,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CocycleReport {
    pub status: CocycleStatus,
    /// Compatibility of the base pair and of the deformed pair at `t = 1, 2, 3`.
    pub precondition: Vec<(String, bool)>,
    /// Components of `δ_c((μ₁, λ₁), (μ₂, λ₂))`.
    pub reports: Vec<CheckReport>,
}

/// Checks that a generator whose deformed family stays compatible is a
/// `δ_c`-cocycle. Compatibility identities are quadratic in `t`, so the base
/// pair plus `t = 1, 2, 3` decide "for all `t`".
pub fn verify_cocycle_theorem(c: &CompatibleLy, g: &DeformationGenerator) -> Result<CocycleReport> {
    let mut precondition = vec![("t=0".to_string(), is_compatible(c))];
    for t in 1..=3 {
        precondition.push((format!("t={t}"), is_compatible(&deform(c, g, &Rational::from_integer(t))?)));
    }
    let out = delta_c(&g.as_tuple(), c)?;
    let reports: Vec<CheckReport> = out
        .components
        .iter()
        .enumerate()
        .map(|(i, comp)| zero_report(format!("delta_c[{i}]"), comp))
        .collect();
    let status = if !precondition.iter().all(|(_, ok)| *ok) {
        CocycleStatus::Vacuous
    } else if all_hold(&reports) {
        CocycleStatus::Pass
    } else {
        CocycleStatus::Fail
    };
    Ok(CocycleReport { status, precondition, reports })
}

/// `δ` with adjoint coefficients, for convenience.
pub fn delta_adjoint(fc: &Cochain, a: &LyAlgebra) -> Result<Cochain> {
    delta(fc, a, &adjoint_unchecked(a))
}

/// Matrix of `δ_c` on level `level` in the unit bases (dense; for small cases).
pub fn delta_c_matrix(c: &CompatibleLy, level: usize) -> Result<Matrix> {
    let d = c.dim();
    let rows = CompatCochainTuple::space_dim(d, level + 1);
    if level + 1 > COCHAIN_DEGREE_CAP {
        return Err(Error::DegreeAboveCap { degree: level + 1, cap: COCHAIN_DEGREE_CAP });
    }
    let cols = columns_from_brackets(&unit_brackets(c, level)?, level);
    Ok(Matrix::from_columns(rows, cols.len(), |j| {
        let mut v = zeros(rows);
        for (i, x) in &cols[j] {
            v[*i] = x.clone();
        }
        v
    }))
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
    fn delta_of_zero_is_zero() {
        let a = alg1();
        let rep = adjoint_unchecked(&a);
        for n in 0..=2 {
            assert!(delta(&Cochain::zero(2, n, 2), &a, &rep).unwrap().is_zero());
        }
        assert!(matches!(
            delta(&Cochain::zero(2, 3, 2), &a, &rep),
            Err(Error::DegreeAboveCap { .. })
        ));
    }

    #[test]
    fn delta0_of_identity_adjoint() {
        // δ₁(id)(x, y) = [x, y] − [y, x] − [x, y] = [x, y].
        let a = alg1();
        let rep = adjoint_unchecked(&a);
        let d = delta0(&LinearMap::identity(2), &a, &rep).unwrap();
        assert_eq!(d.eval_f_basis(&[0]), &[q(1), q(0)]);
    }

    #[test]
    fn abelian_cohomology_is_everything() {
        let c = CompatibleLy::abelian(2);
        let h = cohomology_dim(&c, 1, CohomologyOptions::default()).unwrap();
        assert_eq!(h.h, CompatCochainTuple::space_dim(2, 1));
        assert_eq!(h.rank, 0);
        assert!(h.image_in_kernel);
    }

    #[test]
    fn caps_are_enforced() {
        let c = CompatibleLy::abelian(5);
        assert!(matches!(
            cohomology_dim(&c, 1, CohomologyOptions::default()),
            Err(Error::ResourceCap { .. })
        ));
        let c = CompatibleLy::abelian(2);
        assert!(matches!(
            cohomology_dim(&c, 3, CohomologyOptions::default()),
            Err(Error::ResourceCap { .. })
        ));
    }

    #[test]
    fn zero_generator_is_vacuously_fine() {
        let a = alg1();
        let c = CompatibleLy::new(a.clone(), a).unwrap();
        let g = DeformationGenerator::zero(2);
        let rep = check_deformation_generator(&c, &g).unwrap();
        assert!(all_hold(&rep.all_reports()));
        assert_eq!(verify_cocycle_theorem(&c, &g).unwrap().status, CocycleStatus::Pass);
    }
}
