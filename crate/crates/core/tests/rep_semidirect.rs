mod common;

use common::*;
use lya_core::all_hold;
use lya_core::compat::{check_compat_representation, compat_adjoint, compat_semidirect, CompatRepresentation};
use lya_core::exact::{q, Matrix, Rational};
use lya_core::lya::{is_lya, LyAlgebra};
use lya_core::rep::{adjoint, check_representation, derived_d, semidirect, Representation};
use proptest::prelude::*;
use rand::Rng;

fn bump(m: &Matrix, i: usize, j: usize, by: &Rational) -> Matrix {
    let mut out = m.clone();
    out.set(i, j, m.get(i, j).clone() + by.clone());
    out
}

/// Adds `by` to one entry of one action matrix, chosen by `pick`.
fn perturb(rep: &Representation, pick: usize, by: &Rational) -> Representation {
    let (n, m) = (rep.alg_dim(), rep.v_dim());
    let cells = m * m;
    let slot = pick % ((n + n * n) * cells);
    let (mat, cell) = (slot / cells, slot % cells);
    let (i, j) = (cell / m, cell % m);
    let mut out = rep.clone();
    if mat < n {
        out.set_rho(mat, bump(rep.rho(mat), i, j, by));
    } else {
        let (x, y) = ((mat - n) / n, (mat - n) % n);
        out.set_mu(x, y, bump(rep.mu(x, y), i, j, by));
    }
    out
}

fn reps_under_test() -> Vec<(String, LyAlgebra, Representation)> {
    let mut out = corpus_representations();
    for (name, a) in all_corpus_lyas() {
        if a.dim() <= 2 && is_lya(&a) {
            out.push((format!("adjoint {name}"), a.clone(), adjoint(&a).unwrap()));
        }
    }
    out
}

#[test]
fn valid_representations_give_lya_semidirect_products() {
    for (name, a, rep) in reps_under_test() {
        assert!(all_hold(&check_representation(&a, &rep).unwrap()), "{name}");
        let s = semidirect(&a, &rep).unwrap();
        assert!(is_lya(&s), "{name}");
        assert!(naive_is_lya(&s), "{name}");
    }
}

#[test]
fn adjoint_derived_action_is_inner_map() {
    for (name, a) in all_corpus_lyas() {
        if !is_lya(&a) {
            continue;
        }
        let rep = adjoint(&a).unwrap();
        let dt = derived_d(&rep, &a).unwrap();
        for i in 0..a.dim() {
            for j in 0..a.dim() {
                assert_eq!(dt.get(i, j), &a.inner(i, j), "{name} D({i},{j})");
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn representation_iff_semidirect_is_lya(seed in any::<u64>()) {
        let reps = reps_under_test();
        let mut r = rng(seed);
        let (name, a, rep) = &reps[r.gen_range(0..reps.len())];
        let mut by = small_entry(&mut r);
        if by.is_zero() {
            by = q(1);
        }
        let p = perturb(rep, r.gen::<usize>(), &by);
        let valid = all_hold(&check_representation(a, &p).unwrap());
        let s = semidirect(a, &p).unwrap();
        prop_assert_eq!(valid, naive_is_lya(&s), "{}", name);
        prop_assert_eq!(valid, is_lya(&s), "{}", name);
    }

    #[test]
    fn compat_representation_iff_semidirect_is_compatible(seed in any::<u64>()) {
        let mut cases: Vec<(String, _, CompatRepresentation)> = corpus_compat_representations();
        for (name, c) in corpus_pairs() {
            if c.dim() <= 2 && naive_is_compatible(&c) {
                cases.push((format!("adjoint {name}"), c.clone(), compat_adjoint(&c).unwrap()));
            }
        }
        let mut r = rng(seed);
        let (name, c, rep) = &cases[r.gen_range(0..cases.len())];
        let mut by = small_entry(&mut r);
        if by.is_zero() {
            by = q(-1);
        }
        let p = if r.gen_bool(0.2) {
            rep.clone()
        } else if r.gen_bool(0.5) {
            CompatRepresentation::new(perturb(&rep.first, r.gen::<usize>(), &by), rep.second.clone()).unwrap()
        } else {
            CompatRepresentation::new(rep.first.clone(), perturb(&rep.second, r.gen::<usize>(), &by)).unwrap()
        };
        let valid = all_hold(&check_compat_representation(c, &p).unwrap());
        let s = compat_semidirect(c, &p).unwrap();
        prop_assert_eq!(valid, naive_is_compatible(&s), "{}", name);
    }
}
