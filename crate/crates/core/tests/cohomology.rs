mod common;

use common::*;
use lya_core::cochain::Cochain;
use lya_core::cohom::{
    check_deformation_generator, cohomology_dim, delta_c, delta_c_matrix, delta_c_rank, deform, verify_cocycle_theorem,
    CocycleStatus, CohomologyOptions, CompatCochainTuple, DeformationGenerator,
};
use lya_core::compat::{is_compatible, CompatibleLy};
use lya_core::exact::{q, rank};
use lya_core::Error;
use rand::Rng;

fn pair(name: &str) -> CompatibleLy {
    corpus_pairs().into_iter().find(|(n, _)| n == name).unwrap().1
}

#[test]
fn abelian_pairs_have_full_cohomology() {
    for d in 1..=3 {
        let c = CompatibleLy::abelian(d);
        for n in 0..=1 {
            let h = cohomology_dim(&c, n, CohomologyOptions::default()).unwrap();
            let full = CompatCochainTuple::space_dim(d, n);
            assert_eq!((h.rank, h.kernel, h.image, h.h), (0, full, 0, full), "d={d} n={n}");
        }
    }
}

/// Dense ranks of the assembled matrices agree with the sparse path, and the
/// composite of consecutive differentials vanishes.
#[test]
fn dense_oracle_agrees_with_cohomology_dims() {
    for name in ["lifted-compatible-lie.json", "self-compatible-dim2.json", "cross-product-pair-3.json"] {
        let c = pair(name);
        assert!(is_compatible(&c));
        let m0 = delta_c_matrix(&c, 0).unwrap();
        let m1 = delta_c_matrix(&c, 1).unwrap();
        assert!(m1.mul(&m0).is_zero(), "{name}");
        let (r0, r1) = (rank(&m0), rank(&m1));
        assert_eq!(delta_c_rank(&c, 0).unwrap(), r0, "{name}");
        assert_eq!(delta_c_rank(&c, 1).unwrap(), r1, "{name}");
        let h = cohomology_dim(&c, 1, CohomologyOptions::default()).unwrap();
        assert_eq!(h.cochain_dim, m1.cols());
        assert_eq!(h.rank + h.kernel, h.cochain_dim);
        assert_eq!(h.kernel, m1.cols() - r1);
        assert_eq!(h.image, r0);
        assert_eq!(h.h, h.kernel - h.image);
        assert!(h.image_in_kernel);
    }
}

#[test]
fn cohomology_caps_are_errors() {
    let c = CompatibleLy::abelian(2);
    assert!(matches!(cohomology_dim(&c, 3, CohomologyOptions::default()), Err(Error::ResourceCap { .. })));
    let tight = CohomologyOptions { degree_cap: 2, dim_cap: 1 };
    assert!(matches!(cohomology_dim(&c, 1, tight), Err(Error::ResourceCap { .. })));
    assert!(matches!(delta_c(&CompatCochainTuple::zero(2, 3), &c), Err(Error::DegreeAboveCap { .. })));
}

#[test]
fn scaling_generator_is_cocycle() {
    let c = pair("lifted-compatible-lie.json");
    let g = DeformationGenerator::from_compatible(&c);
    let rep = check_deformation_generator(&c, &g).unwrap();
    assert!(rep.order1_holds() && rep.order2_holds() && rep.interpolation.holds());
    let v = verify_cocycle_theorem(&c, &g).unwrap();
    assert_eq!(v.status, CocycleStatus::Pass);
}

#[test]
fn coboundaries_have_vanishing_first_order() {
    let mut r = rng(21);
    for name in ["lifted-compatible-lie.json", "self-compatible-dim2.json"] {
        let c = pair(name);
        let d = c.dim();
        for _ in 0..5 {
            let mut f = Cochain::zero(d, 0, d);
            for k in 0..f.len() {
                if r.gen_bool(0.5) {
                    f.set(k, small_entry(&mut r));
                }
            }
            let t = delta_c(&CompatCochainTuple::new(vec![f]).unwrap(), &c).unwrap();
            let g = DeformationGenerator::from_tuple(&t).unwrap();
            let rep = check_deformation_generator(&c, &g).unwrap();
            assert!(rep.order1_holds(), "{name}");
            assert!(rep.interpolation.holds(), "{name}");
            assert!(delta_c(&t, &c).unwrap().is_zero(), "{name}");
        }
    }
}

/// Generators on the dim-2 self pair supported on one coordinate: those whose
/// deformed family stays compatible must be cocycles.
#[test]
fn compatible_families_come_from_cocycles() {
    let c = pair("self-compatible-dim2.json");
    let zero = DeformationGenerator::zero(2);
    let base = zero.as_tuple();
    let per = Cochain::space_dim(2, 1, 2);
    let mut seen_pass = 0;
    for comp in 0..2 {
        for coord in 0..per {
            for v in [q(1), q(-1)] {
                let mut comps = base.components().to_vec();
                comps[comp].set(coord, v.clone());
                let g = DeformationGenerator::from_tuple(&CompatCochainTuple::new(comps).unwrap()).unwrap();
                let family_ok = (1..=3).all(|t| is_compatible(&deform(&c, &g, &q(t)).unwrap()));
                let rep = verify_cocycle_theorem(&c, &g).unwrap();
                if family_ok {
                    assert_eq!(rep.status, CocycleStatus::Pass, "comp {comp} coord {coord}");
                    seen_pass += 1;
                } else {
                    assert_eq!(rep.status, CocycleStatus::Vacuous);
                }
            }
        }
    }
    assert!(seen_pass > 0);
}
