mod common;

use common::*;
use lya_core::all_hold;
use lya_core::compat::{is_compatible, CompatibleLy};
use lya_core::exact::{q, Matrix, Rational};
use lya_core::lya::{from_lie, is_lya, BilinearMap, LinearMap, LyAlgebra};
use lya_core::rb::{
    check_compat_pre_lya, check_lemma41, check_pre_lya, induce_compat_pre_lya, induce_pre_lya, is_rb,
    is_rb_compatible, search_rb, subadjacent, subadjacent_single, RbConvention, RbTarget, DEFAULT_GRID_CAP,
};
use proptest::prelude::*;
use rand::Rng;

fn grid() -> Vec<Rational> {
    vec![q(-1), q(0), q(1)]
}

/// The two operator identities evaluated directly.
fn naive_is_rb(a: &LyAlgebra, r: &LinearMap, conv: RbConvention) -> bool {
    let n = Naive::new(a);
    let d = n.d;
    let rr = |v: &[Rational]| r.apply(v);
    for x in 0..d {
        for y in 0..d {
            let (ex, ey) = (n.e(x), n.e(y));
            let (rx, ry) = (rr(&ex), rr(&ey));
            if n.br(&rx, &ry) != rr(&vadd(&n.br(&rx, &ey), &n.br(&ex, &ry))) {
                return false;
            }
            for z in 0..d {
                let ez = n.e(z);
                let rz = rr(&ez);
                let inner = match conv {
                    RbConvention::Cyclic => vsub(&vadd(&n.tr(&rx, &ry, &ez), &n.tr(&ry, &rz, &ex)), &n.tr(&rx, &rz, &ey)),
                    RbConvention::Slotwise => {
                        vadd(&vadd(&n.tr(&rx, &ry, &ez), &n.tr(&rx, &ey, &rz)), &n.tr(&ex, &ry, &rz))
                    }
                };
                if n.tr(&rx, &ry, &rz) != rr(&inner) {
                    return false;
                }
            }
        }
    }
    true
}

fn grid_maps(d: usize) -> Vec<LinearMap> {
    let cells = d * d;
    (0..3usize.pow(cells as u32))
        .map(|mut i| {
            let mut v = vec![q(0); cells];
            for slot in (0..cells).rev() {
                v[slot] = q(i as i64 % 3 - 1);
                i /= 3;
            }
            LinearMap::new(Matrix::new(d, d, v).unwrap())
        })
        .collect()
}

#[test]
fn search_matches_brute_force_on_dim2() {
    for (name, a) in all_corpus_lyas().into_iter().filter(|(_, a)| a.dim() == 2) {
        for conv in RbConvention::ALL {
            let found = search_rb(RbTarget::Single(&a), conv, &grid(), DEFAULT_GRID_CAP).unwrap();
            let naive: Vec<LinearMap> = grid_maps(2).into_iter().filter(|r| naive_is_rb(&a, r, conv)).collect();
            assert_eq!(found, naive, "{name} {conv:?}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn is_rb_matches_naive(seed in any::<u64>()) {
        let algs: Vec<_> = all_corpus_lyas().into_iter().filter(|(_, a)| a.dim() <= 3).collect();
        let mut r = rng(seed);
        let (name, a) = &algs[r.gen_range(0..algs.len())];
        let d = a.dim();
        let sparse = r.gen_bool(0.5);
        let m: Vec<Rational> = (0..d * d)
            .map(|_| if sparse && r.gen_bool(0.7) { q(0) } else { small_entry(&mut r) })
            .collect();
        let op = LinearMap::new(Matrix::new(d, d, m).unwrap());
        for conv in RbConvention::ALL {
            prop_assert_eq!(is_rb(a, &op, conv), naive_is_rb(a, &op, conv), "{} {:?}", name, conv);
        }
    }
}

/// Every grid operator on the small corpus algebras induces a pre-LYA whose
/// sub-adjacent algebra is an LYA mapped into the original by the operator.
#[test]
fn induced_pre_lya_pipeline_on_search_results() {
    for (name, a) in all_corpus_lyas().into_iter().filter(|(_, a)| a.dim() <= 2 && is_lya(a)) {
        for conv in RbConvention::ALL {
            for r in search_rb(RbTarget::Single(&a), conv, &grid(), DEFAULT_GRID_CAP).unwrap() {
                let induced = induce_pre_lya(&a, &r, conv).unwrap();
                assert!(induced.reports.iter().filter(|x| !x.informational).all(|x| x.holds()), "{name} {conv:?}");
                let sub = subadjacent_single(&induced.pre).unwrap();
                assert!(naive_is_lya(&sub), "{name} {conv:?}");
                let n = Naive::new(&a);
                let s = Naive::new(&sub);
                for x in 0..a.dim() {
                    for y in 0..a.dim() {
                        let (ex, ey) = (n.e(x), n.e(y));
                        assert_eq!(r.apply(&s.br(&ex, &ey)), n.br(&r.apply(&ex), &r.apply(&ey)));
                        for z in 0..a.dim() {
                            let ez = n.e(z);
                            assert_eq!(
                                r.apply(&s.tr(&ex, &ey, &ez)),
                                n.tr(&r.apply(&ex), &r.apply(&ey), &r.apply(&ez)),
                                "{name} {conv:?}"
                            );
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn non_rb_operator_is_rejected() {
    let a = from_lie(&BilinearMap::from_entries(2, [(0, 1, 0, q(1))]).unwrap()).unwrap();
    let id = LinearMap::identity(2);
    for conv in RbConvention::ALL {
        assert!(!is_rb(&a, &id, conv));
        assert!(induce_pre_lya(&a, &id, conv).is_err());
    }
}

/// Filiform Lie algebra with `[e0,e1] = e2`, `[e0,e2] = e3`, lifted to an LYA.
fn filiform() -> LyAlgebra {
    from_lie(&BilinearMap::from_entries(4, [(0, 1, 2, q(1)), (0, 2, 3, q(1))]).unwrap()).unwrap()
}

#[test]
fn inverse_of_invertible_derivation_is_slotwise_rb() {
    let a = filiform();
    assert!(is_lya(&a) && !a.omega().is_zero());
    let mut dm = Matrix::zeros(4, 4);
    for (i, w) in [1, 1, 2, 3].into_iter().enumerate() {
        dm.set(i, i, q(w));
    }
    let dmap = LinearMap::new(dm);
    assert!(all_hold(&lya_core::lya::check_derivation(&a, &dmap).unwrap()));
    let r = dmap.inverse().unwrap();
    assert!(is_rb(&a, &r, RbConvention::Slotwise));
    assert!(naive_is_rb(&a, &r, RbConvention::Slotwise));
    let induced = induce_pre_lya(&a, &r, RbConvention::Slotwise).unwrap();
    assert!(all_hold(&check_pre_lya(&induced.pre)));
}

#[test]
fn compatible_pipeline_on_grid_operators() {
    let lifted = corpus_pairs().into_iter().find(|(n, _)| n == "lifted-compatible-lie.json").unwrap().1;
    let self_pair = corpus_pairs().into_iter().find(|(n, _)| n == "self-compatible-dim2.json").unwrap().1;
    for (name, c) in [("lifted", lifted), ("self", self_pair)] {
        assert!(is_compatible(&c));
        for conv in RbConvention::ALL {
            let found = search_rb(RbTarget::Compatible(&c), conv, &grid(), DEFAULT_GRID_CAP).unwrap();
            assert!(!found.is_empty());
            // Spread the sample over the solution set.
            let step = (found.len() / 12).max(1);
            for r in found.iter().step_by(step) {
                assert!(is_rb_compatible(&c, r, conv));
                let cp = induce_compat_pre_lya(&c, r, conv).unwrap();
                assert!(all_hold(&check_compat_pre_lya(&cp)), "{name} {conv:?}");
                assert!(all_hold(&check_lemma41(&cp)), "{name} {conv:?}");
                let sub: CompatibleLy = subadjacent(&cp).unwrap();
                assert!(naive_is_compatible(&sub), "{name} {conv:?}");
            }
        }
    }
}
