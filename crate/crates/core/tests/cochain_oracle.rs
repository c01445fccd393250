mod common;

use common::*;
use lya_core::cochain::{graded_bracket, mc_pair_residual, mc_residual, pair_count, shuffles, Cochain};
use lya_core::cohom::{delta_adjoint, delta_c, delta_c_matrix, delta_vs_bracket, CompatCochainTuple};
use lya_core::compat::CompatibleLy;
use lya_core::exact::{q, Rational};
use lya_core::lya::{is_lya, BilinearMap, LyAlgebra, TrilinearMap};
use proptest::prelude::*;
use rand::Rng;

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn random_cochain(r: &mut impl Rng, d: usize, degree: usize, nonzeros: usize) -> Cochain {
    let mut c = Cochain::zero(d, degree, d);
    if c.is_empty() {
        return c;
    }
    for _ in 0..nonzeros {
        let coord = r.gen_range(0..c.len());
        c.set(coord, small_entry(r));
    }
    c
}

#[test]
fn shuffles_are_monotone_with_inversion_signs() {
    for p in 0..=3 {
        for qq in 0..=3 {
            let all = shuffles(p, qq);
            assert_eq!(all.len(), binomial(p + qq, p), "({p},{qq})");
            for s in &all {
                assert!(s.perm[..p].windows(2).all(|w| w[0] < w[1]));
                assert!(s.perm[p..].windows(2).all(|w| w[0] < w[1]));
                let mut inv = 0;
                for i in 0..s.perm.len() {
                    for j in i + 1..s.perm.len() {
                        inv += usize::from(s.perm[i] > s.perm[j]);
                    }
                }
                assert_eq!(s.sign, if inv % 2 == 0 { 1 } else { -1 });
            }
        }
    }
}

#[test]
fn corpus_structures_are_maurer_cartan() {
    for (name, a) in all_corpus_lyas() {
        let r = mc_residual(&Cochain::from_algebra(&a)).unwrap();
        assert_eq!(r.is_zero(), naive_is_lya(&a), "{name}");
    }
    for (name, c) in corpus_pairs() {
        let (a, b, m) = mc_pair_residual(&c).unwrap();
        assert_eq!(a.is_zero() && b.is_zero() && m.is_zero(), naive_is_compatible(&c), "{name}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// The residual sees only the two Leibniz-type axioms.
    #[test]
    fn maurer_cartan_iff_leibniz_axioms(seed in any::<u64>(), d in 2usize..=3, p in 0.0f64..0.25) {
        let a = random_algebra(&mut rng(seed), d, p);
        let mc = mc_residual(&Cochain::from_algebra(&a)).unwrap().is_zero();
        let ax = naive_lya_axioms(&a);
        prop_assert_eq!(mc, ax[2] && ax[3]);
        prop_assert!(!naive_is_lya(&a) || mc);
    }

    #[test]
    fn bracket_is_graded_skew(seed in any::<u64>(), d in 2usize..=3, p in 0usize..=2, qq in 0usize..=1) {
        let mut r = rng(seed);
        let a = random_cochain(&mut r, d, p, 4);
        let b = random_cochain(&mut r, d, qq, 4);
        let ab = graded_bracket(&a, &b).unwrap();
        let ba = graded_bracket(&b, &a).unwrap();
        let s = if (p * qq) % 2 == 0 { q(1) } else { q(-1) };
        prop_assert_eq!(ab, ba.scale(&-s));
    }

    #[test]
    fn graded_jacobi_on_degree_one(seed in any::<u64>(), d in 2usize..=3) {
        let mut r = rng(seed);
        let x = random_cochain(&mut r, d, 1, 5);
        let y = random_cochain(&mut r, d, 1, 5);
        let z = random_cochain(&mut r, d, 1, 5);
        // [x,[y,z]] = [[x,y],z] + (-1)^{|x||y|} [y,[x,z]]
        let lhs = graded_bracket(&x, &graded_bracket(&y, &z).unwrap()).unwrap();
        let r1 = graded_bracket(&graded_bracket(&x, &y).unwrap(), &z).unwrap();
        let r2 = graded_bracket(&y, &graded_bracket(&x, &z).unwrap()).unwrap();
        prop_assert_eq!(lhs, r1.sub(&r2));
    }

    #[test]
    fn compatible_iff_pair_residuals_vanish(s1 in any::<u64>(), s2 in any::<u64>()) {
        let mut r = rng(s1);
        let (b1, _) = random_structure(&mut r, 3, 0.3);
        let mut r = rng(s2);
        let (b2, _) = random_structure(&mut r, 3, 0.3);
        let (Ok(a1), Ok(a2)) = (lya_core::lya::from_lie(&b1), lya_core::lya::from_lie(&b2)) else { return Ok(()) };
        let c = CompatibleLy::new(a1, a2).unwrap();
        let (x, y, m) = mc_pair_residual(&c).unwrap();
        prop_assert!(x.is_zero() && y.is_zero());
        prop_assert_eq!(m.is_zero(), naive_is_compatible(&c));
    }
}

/// Every dim-3 structure with zero bracket and one trilinear entry in {-1,1}:
/// some have a vanishing residual yet fail LY1.
#[test]
fn vanishing_residual_does_not_certify_lya() {
    let mut gaps = 0;
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        for z in 0..3 {
            for k in 0..3 {
                for v in [q(-1), q(1)] {
                    let om = TrilinearMap::from_entries(3, [(i, j, z, k, v.clone())]).unwrap();
                    let a = LyAlgebra::new(BilinearMap::zero(3), om).unwrap();
                    let ax = naive_lya_axioms(&a);
                    let mc = mc_residual(&Cochain::from_algebra(&a)).unwrap().is_zero();
                    assert_eq!(mc, ax[2] && ax[3]);
                    if mc && !ax[0] {
                        assert!(!is_lya(&a));
                        gaps += 1;
                    }
                }
            }
        }
    }
    assert!(gaps > 0);
}

/// On the dim-2 {-1,0,1} grid a vanishing residual does certify an LYA.
#[test]
fn dim2_grid_has_no_residual_gap() {
    let vals = [q(-1), q(0), q(1)];
    for code in 0..3usize.pow(6) {
        let digit = |k: usize| vals[code / 3usize.pow(k as u32) % 3].clone();
        let pi = BilinearMap::from_entries(2, [(0, 1, 0, digit(0)), (0, 1, 1, digit(1))]).unwrap();
        let om = TrilinearMap::from_entries(2, (0..4).map(|k| (0, 1, k / 2, k % 2, digit(2 + k)))).unwrap();
        let a = LyAlgebra::new(pi, om).unwrap();
        assert_eq!(mc_residual(&Cochain::from_algebra(&a)).unwrap().is_zero(), naive_is_lya(&a), "code {code}");
    }
}

fn lya_corpus_upto(d: usize) -> Vec<(String, LyAlgebra)> {
    all_corpus_lyas().into_iter().filter(|(_, a)| a.dim() <= d && is_lya(a)).collect()
}

#[test]
fn delta_equals_signed_bracket_on_random_cochains() {
    let mut r = rng(7);
    for (name, a) in lya_corpus_upto(3) {
        for degree in 0..=2 {
            for _ in 0..5 {
                let f = random_cochain(&mut r, a.dim(), degree, 6);
                let rep = delta_vs_bracket(&f, &a).unwrap();
                assert!(rep.holds(), "{name} degree {degree}: {:?}", rep.witnesses);
            }
        }
    }
}

#[test]
fn delta_squares_to_zero() {
    let mut r = rng(11);
    for (name, a) in lya_corpus_upto(3) {
        for degree in 0..=1 {
            for _ in 0..10 {
                let f = random_cochain(&mut r, a.dim(), degree, 5);
                let once = delta_adjoint(&f, &a).unwrap();
                assert!(delta_adjoint(&once, &a).unwrap().is_zero(), "{name} degree {degree}");
            }
        }
    }
}

fn random_tuple(r: &mut impl Rng, d: usize, level: usize) -> CompatCochainTuple {
    CompatCochainTuple::new((0..=level).map(|_| random_cochain(r, d, level, 3)).collect()).unwrap()
}

#[test]
fn compatible_delta_squares_to_zero() {
    let mut r = rng(13);
    for (name, c) in corpus_pairs() {
        if c.dim() > 3 || !naive_is_compatible(&c) {
            continue;
        }
        for level in 0..=1 {
            for _ in 0..10 {
                let t = random_tuple(&mut r, c.dim(), level);
                let once = delta_c(&t, &c).unwrap();
                assert!(delta_c(&once, &c).unwrap().is_zero(), "{name} level {level}");
            }
        }
    }
}

#[test]
fn delta_c_matrix_columns_match_direct_evaluation() {
    for (name, c) in corpus_pairs() {
        if c.dim() > 3 {
            continue;
        }
        for level in 0..=1 {
            let m = delta_c_matrix(&c, level).unwrap();
            let d = c.dim();
            let per = Cochain::space_dim(d, level, d);
            assert_eq!(m.cols(), (level + 1) * per);
            assert_eq!(m.rows(), CompatCochainTuple::space_dim(d, level + 1));
            for j in 0..m.cols() {
                let t = CompatCochainTuple::unit(d, level, j / per, j % per);
                let out = delta_c(&t, &c).unwrap();
                let mut dense = vec![Rational::zero(); m.rows()];
                for (i, v) in out.to_sparse() {
                    dense[i] = v;
                }
                assert_eq!(m.column(j), dense, "{name} level {level} column {j}");
            }
        }
    }
}

#[test]
fn pair_counts() {
    assert_eq!((0..=5).map(pair_count).collect::<Vec<_>>(), vec![0, 0, 1, 3, 6, 10]);
}
