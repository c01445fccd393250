//! Compatible pairs of Lie Yamaguti structures on one space.

use serde::{Deserialize, Serialize};

use crate::error::{check_dim, Error, Result};
use crate::exact::vector::{add_into, sub_into};
use crate::exact::{Matrix, Rational};
use crate::lya::{check_derivation, check_homomorphism, check_lya, direct_sum_unchecked, LinearMap, LyAlgebra};
use crate::rep::{check_representation, derived_d, semidirect, Representation};
use crate::report::{all_hold, failing_ids, for_each_tuple, CheckReport};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompatibleLy {
    first: LyAlgebra,
    second: LyAlgebra,
}

/// Weights `(k1, k2)` of a linear combination of the two structures.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CombinationWeights {
    pub k1: Rational,
    pub k2: Rational,
}

impl CombinationWeights {
    pub fn new(k1: impl Into<Rational>, k2: impl Into<Rational>) -> Self {
        CombinationWeights { k1: k1.into(), k2: k2.into() }
    }

    /// `(1,1), (1,−1), (2,3), (1,0), (0,1)`.
    pub fn default_samples() -> Vec<CombinationWeights> {
        [(1, 1), (1, -1), (2, 3), (1, 0), (0, 1)]
            .into_iter()
            .map(|(a, b)| CombinationWeights::new(a as i64, b as i64))
            .collect()
    }
}

impl CompatibleLy {
    /// Pairs two structures on the same basis (the basis names of `first` are kept).
    pub fn new(first: LyAlgebra, second: LyAlgebra) -> Result<Self> {
        check_dim("second structure", first.dim(), second.dim())?;
        let second = LyAlgebra::with_names(
            first.basis_names().to_vec(),
            second.pi().clone(),
            second.omega().clone(),
        )?;
        Ok(CompatibleLy { first, second })
    }

    pub fn abelian(dim: usize) -> Self {
        CompatibleLy { first: LyAlgebra::abelian(dim), second: LyAlgebra::abelian(dim) }
    }

    pub fn dim(&self) -> usize {
        self.first.dim()
    }

    pub fn first(&self) -> &LyAlgebra {
        &self.first
    }

    pub fn second(&self) -> &LyAlgebra {
        &self.second
    }

    pub fn component(&self, i: usize) -> &LyAlgebra {
        if i == 0 {
            &self.first
        } else {
            &self.second
        }
    }

    pub fn swapped(&self) -> CompatibleLy {
        CompatibleLy::new(self.second.clone(), self.first.clone()).expect("same dimension")
    }
}

fn cy1(c: &CompatibleLy, x: usize, y: usize, z: usize) -> Vec<Rational> {
    let (a, b) = (&c.first, &c.second);
    let mut r = crate::exact::vector::zeros(c.dim());
    for (p, q) in [(a, b), (b, a)] {
        for (u, v, w) in [(x, y, z), (y, z, x), (z, x, y)] {
            add_into(&mut r, &q.bracket(p.pi().basis(u, v), &p.e(w)));
        }
    }
    r
}

fn cy2(c: &CompatibleLy, x: usize, y: usize, z: usize, t: usize) -> Vec<Rational> {
    let (a, b) = (&c.first, &c.second);
    let mut r = crate::exact::vector::zeros(c.dim());
    for (p, q) in [(a, b), (b, a)] {
        for (u, v, w) in [(x, y, z), (y, z, x), (z, x, y)] {
            add_into(&mut r, &q.triple(p.pi().basis(u, v), &p.e(w), &p.e(t)));
        }
    }
    r
}

fn cy3(c: &CompatibleLy, aa: usize, bb: usize, x: usize, y: usize, z: usize) -> Vec<Rational> {
    let (a, b) = (&c.first, &c.second);
    let e = |i| a.e(i);
    let mut r = crate::exact::vector::zeros(c.dim());
    // p plays the inner structure, q the outer one.
    for (p, q) in [(a, b), (b, a)] {
        add_into(&mut r, &q.triple(&e(aa), &e(bb), p.omega().basis(x, y, z)));
        sub_into(&mut r, &q.triple(p.omega().basis(aa, bb, x), &e(y), &e(z)));
        sub_into(&mut r, &q.triple(&e(x), p.omega().basis(aa, bb, y), &e(z)));
        sub_into(&mut r, &q.triple(&e(x), &e(y), p.omega().basis(aa, bb, z)));
    }
    r
}

fn cy4(c: &CompatibleLy, aa: usize, bb: usize, x: usize, y: usize) -> Vec<Rational> {
    let (a, b) = (&c.first, &c.second);
    let e = |i| a.e(i);
    let mut r = crate::exact::vector::zeros(c.dim());
    for (p, q) in [(a, b), (b, a)] {
        add_into(&mut r, &q.triple(&e(aa), &e(bb), p.pi().basis(x, y)));
        sub_into(&mut r, &q.bracket(p.omega().basis(aa, bb, x), &e(y)));
        sub_into(&mut r, &q.bracket(&e(x), p.omega().basis(aa, bb, y)));
    }
    r
}

/// Component reports (suffixed `[1]`, `[2]`), CY1–CY4, and the informational
/// `LY1-split` report: the cyclic sums of each trilinear bracket alone, which
/// must vanish for every linear combination of the pair to satisfy LY1.
pub fn check_compatible(c: &CompatibleLy) -> Vec<CheckReport> {
    let d = c.dim();
    let mut out: Vec<CheckReport> = check_lya(&c.first).into_iter().map(|r| r.with_suffix("[1]")).collect();
    out.extend(check_lya(&c.second).into_iter().map(|r| r.with_suffix("[2]")));
    let mut r1 = CheckReport::new("CY1");
    for_each_tuple(d, 3, |t| r1.record(t, &cy1(c, t[0], t[1], t[2])));
    let mut r2 = CheckReport::new("CY2");
    for_each_tuple(d, 4, |t| r2.record(t, &cy2(c, t[0], t[1], t[2], t[3])));
    let mut r3 = CheckReport::new("CY3");
    for_each_tuple(d, 5, |t| r3.record(t, &cy3(c, t[0], t[1], t[2], t[3], t[4])));
    let mut r4 = CheckReport::new("CY4");
    for_each_tuple(d, 4, |t| r4.record(t, &cy4(c, t[0], t[1], t[2], t[3])));
    let mut r5 = CheckReport::new("LY1-split").informational();
    for_each_tuple(d, 3, |t| {
        let mut res = Vec::with_capacity(2 * d);
        for p in [&c.first, &c.second] {
            let mut s = p.omega().basis(t[0], t[1], t[2]).to_vec();
            add_into(&mut s, p.omega().basis(t[1], t[2], t[0]));
            add_into(&mut s, p.omega().basis(t[2], t[0], t[1]));
            res.extend(s);
        }
        r5.record(t, &res);
    });
    out.extend([r1, r2, r3, r4, r5]);
    out
}

pub fn is_compatible(c: &CompatibleLy) -> bool {
    all_hold(&check_compatible(c))
}

fn require_compatible(c: &CompatibleLy, what: &'static str) -> Result<()> {
    let reports = check_compatible(c);
    if all_hold(&reports) {
        Ok(())
    } else {
        Err(Error::AxiomFailure { what, failing: failing_ids(&reports) })
    }
}

/// `k1·(π1, ω1) + k2·(π2, ω2)`; validity is not asserted.
pub fn linear_combination(c: &CompatibleLy, w: &CombinationWeights) -> LyAlgebra {
    let pi = c.first.pi().scale(&w.k1).add(&c.second.pi().scale(&w.k2));
    let omega = c.first.omega().scale(&w.k1).add(&c.second.omega().scale(&w.k2));
    LyAlgebra::with_names(c.first.basis_names().to_vec(), pi, omega).expect("shared dimension")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SampleResult {
    pub weights: CombinationWeights,
    pub reports: Vec<CheckReport>,
}

impl SampleResult {
    pub fn holds(&self) -> bool {
        all_hold(&self.reports)
    }
}

/// Runs `check_lya` on the combination at each sample.
pub fn check_prop31(c: &CompatibleLy, samples: &[CombinationWeights]) -> Vec<SampleResult> {
    samples
        .iter()
        .map(|w| SampleResult { weights: w.clone(), reports: check_lya(&linear_combination(c, w)) })
        .collect()
}

pub fn compat_direct_sum(c1: &CompatibleLy, c2: &CompatibleLy) -> Result<CompatibleLy> {
    require_compatible(c1, "first summand")?;
    require_compatible(c2, "second summand")?;
    CompatibleLy::new(
        direct_sum_unchecked(&c1.first, &c2.first),
        direct_sum_unchecked(&c1.second, &c2.second),
    )
}

pub fn check_compat_homomorphism(
    c1: &CompatibleLy,
    c2: &CompatibleLy,
    phi: &LinearMap,
) -> Result<Vec<CheckReport>> {
    let mut out: Vec<CheckReport> = check_homomorphism(&c1.first, &c2.first, phi)?
        .into_iter()
        .map(|r| r.with_suffix("[1]"))
        .collect();
    out.extend(check_homomorphism(&c1.second, &c2.second, phi)?.into_iter().map(|r| r.with_suffix("[2]")));
    Ok(out)
}

/// Two representations on a shared `V`, one per structure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompatRepresentation {
    pub first: Representation,
    pub second: Representation,
}

impl CompatRepresentation {
    pub fn new(first: Representation, second: Representation) -> Result<Self> {
        check_dim("second representation algebra", first.alg_dim(), second.alg_dim())?;
        check_dim("second representation space", first.v_dim(), second.v_dim())?;
        Ok(CompatRepresentation { first, second })
    }

    /// `(k1ρ1 + k2ρ2, k1μ1 + k2μ2)`.
    pub fn combined(&self, w: &CombinationWeights) -> Representation {
        self.first.combine(&w.k1, &self.second, &w.k2)
    }

    pub fn v_dim(&self) -> usize {
        self.first.v_dim()
    }
}

/// `(ad_i, 𝔞𝔡_i)` for each structure.
pub fn compat_adjoint(c: &CompatibleLy) -> Result<CompatRepresentation> {
    CompatRepresentation::new(crate::rep::adjoint(&c.first)?, crate::rep::adjoint(&c.second)?)
}

/// Component representation reports, the six mixed conditions, and the
/// identity `D = D1 + D2` at unit weights.
pub fn check_compat_representation(c: &CompatibleLy, r: &CompatRepresentation) -> Result<Vec<CheckReport>> {
    let (a1, a2) = (&c.first, &c.second);
    let (p1, p2) = (&r.first, &r.second);
    let mut out: Vec<CheckReport> = check_representation(a1, p1)?.into_iter().map(|x| x.with_suffix("[1]")).collect();
    out.extend(check_representation(a2, p2)?.into_iter().map(|x| x.with_suffix("[2]")));
    let d1 = derived_d(p1, a1)?;
    let d2 = derived_d(p2, a2)?;
    let n = c.dim();
    let e = |i| a1.e(i);

    let mut c1 = CheckReport::new("CREP1");
    let mut c2 = CheckReport::new("CREP2");
    let mut c3 = CheckReport::new("CREP3");
    for_each_tuple(n, 3, |t| {
        let (x, y, z) = (t[0], t[1], t[2]);
        let m = p2
            .mu_of(a1.pi().basis(x, y), &e(z))
            .add(&p1.mu_of(a2.pi().basis(x, y), &e(z)))
            .sub(&p2.mu(x, z).mul(p1.rho(y)))
            .sub(&p1.mu(x, z).mul(p2.rho(y)))
            .add(&p2.mu(y, z).mul(p1.rho(x)))
            .add(&p1.mu(y, z).mul(p2.rho(x)));
        c1.record(t, m.entries());
        let m = p2
            .mu_of(&e(x), a1.pi().basis(y, z))
            .add(&p1.mu_of(&e(x), a2.pi().basis(y, z)))
            .sub(&p2.rho(y).mul(p1.mu(x, z)))
            .sub(&p1.rho(y).mul(p2.mu(x, z)))
            .add(&p2.rho(z).mul(p1.mu(x, y)))
            .add(&p1.rho(z).mul(p2.mu(x, y)));
        c2.record(t, m.entries());
        let m = p1
            .rho_of(a2.omega().basis(x, y, z))
            .add(&p2.rho_of(a1.omega().basis(x, y, z)))
            .sub(&d1.get(x, y).commutator(p2.rho(z)))
            .sub(&d2.get(x, y).commutator(p1.rho(z)));
        c3.record(t, m.entries());
    });
    let mut c4 = CheckReport::new("CREP4");
    let mut c5 = CheckReport::new("CREP5");
    for_each_tuple(n, 4, |t| {
        let (x, y, z, w) = (t[0], t[1], t[2], t[3]);
        let m = p2
            .mu(z, w)
            .mul(p1.mu(x, y))
            .add(&p1.mu(z, w).mul(p2.mu(x, y)))
            .add(&d2.get(y, z).mul(p1.mu(x, w)))
            .add(&d1.get(y, z).mul(p2.mu(x, w)))
            .sub(&p2.mu(y, w).mul(p1.mu(x, z)))
            .sub(&p1.mu(y, w).mul(p2.mu(x, z)))
            .sub(&p2.mu_of(&e(x), a1.omega().basis(y, z, w)))
            .sub(&p1.mu_of(&e(x), a2.omega().basis(y, z, w)));
        c4.record(t, m.entries());
        let m = p2
            .mu_of(a1.omega().basis(x, y, z), &e(w))
            .add(&p1.mu_of(a2.omega().basis(x, y, z), &e(w)))
            .add(&p2.mu_of(&e(z), a1.omega().basis(x, y, w)))
            .add(&p1.mu_of(&e(z), a2.omega().basis(x, y, w)))
            .sub(&d2.get(x, y).commutator(p1.mu(z, w)))
            .sub(&d1.get(x, y).commutator(p2.mu(z, w)));
        c5.record(t, m.entries());
    });
    let mut c6 = CheckReport::new("CREP6");
    let mut dsum = CheckReport::new("D=D1+D2");
    let unit = CombinationWeights::new(1, 1);
    let combined = r.combined(&unit);
    let sum_alg = linear_combination(c, &unit);
    let dd = derived_d(&combined, &sum_alg)?;
    for_each_tuple(n, 2, |t| {
        let (x, y) = (t[0], t[1]);
        let m = p1
            .rho_of(a2.pi().basis(x, y))
            .add(&p2.rho_of(a1.pi().basis(x, y)))
            .sub(&p1.rho(x).mul(p2.rho(y)))
            .add(&p1.rho(y).mul(p2.rho(x)))
            .sub(&p2.rho(x).mul(p1.rho(y)))
            .add(&p2.rho(y).mul(p1.rho(x)));
        c6.record(t, m.entries());
        let m = dd.get(x, y).sub(d1.get(x, y)).sub(d2.get(x, y));
        dsum.record(t, m.entries());
    });
    out.extend([c1, c2, c3, c4, c5, c6, dsum]);
    Ok(out)
}

/// Componentwise semidirect product on `L ⊕ V`; validity is not asserted.
pub fn compat_semidirect(c: &CompatibleLy, r: &CompatRepresentation) -> Result<CompatibleLy> {
    CompatibleLy::new(semidirect(&c.first, &r.first)?, semidirect(&c.second, &r.second)?)
}

pub fn check_compat_derivation(c: &CompatibleLy, d: &LinearMap) -> Result<Vec<CheckReport>> {
    let mut out: Vec<CheckReport> = check_derivation(&c.first, d)?.into_iter().map(|r| r.with_suffix("[1]")).collect();
    out.extend(check_derivation(&c.second, d)?.into_iter().map(|r| r.with_suffix("[2]")));
    Ok(out)
}

/// Maps that are derivations of both structures.
pub fn compat_derivation_space(c: &CompatibleLy) -> Vec<LinearMap> {
    crate::lya::common_derivation_space(&[&c.first, &c.second])
}

/// `z ↦ k1[e_a, e_b, z]_1 + k2[e_a, e_b, z]_2`.
pub fn inner_derivation(c: &CompatibleLy, a: usize, b: usize, w: &CombinationWeights) -> Result<LinearMap> {
    let n = c.dim();
    for idx in [a, b] {
        if idx >= n {
            return Err(Error::IndexOutOfRange { index: idx, dim: n });
        }
    }
    let m: Matrix = c.first.inner(a, b).scale(&w.k1).add(&c.second.inner(a, b).scale(&w.k2));
    Ok(LinearMap::new(m))
}
