mod common;

use common::{basis, naive_hom_yd_sides};
use homcat_core::generators::{
    constant_coaction, cyclic_mul, gen_cyclic_yd_fixtures, gen_group_bialgebra, grouplike_comul, trivial_action,
};
use homcat_core::hom_structures::{AlgebraLike, CoalgebraLike, Space};
use homcat_core::rep_theory::{check_comodule, check_module, tensor_module, twist_module, Twist};
use homcat_core::yetter_drinfeld::{
    b_yd, check_b_yd, check_yd, check_yd_mixed_ybe, f_twist_yd, quasi_braiding_yd, twist_classical_yd, yd_associator,
    yd_tensor, YdBase, YdModule,
};
use homcat_core::{flatten, flip_map, Field, LinMap};

fn q() -> Field {
    Field::Rational
}

fn classical(n: usize) -> YdBase {
    YdBase::new(gen_group_bialgebra(q(), n, 1).unwrap().0).unwrap()
}

/// `k[Z_2]` acting on itself trivially with coaction `Δ`.
fn z2_regular_yd() -> YdModule {
    YdModule::new(
        trivial_action(q(), 2, 2),
        grouplike_comul(q(), 2),
        LinMap::identity(q(), 2),
    )
    .unwrap()
}

fn fixture_sets() -> Vec<(YdBase, Vec<YdModule>)> {
    let mut sets = vec![(classical(2), vec![z2_regular_yd()])];
    for (field, n, k) in [(q(), 3, 2), (Field::Prime(7), 4, 3), (q(), 2, 1)] {
        sets.push(gen_cyclic_yd_fixtures(field, n, k).unwrap());
    }
    sets
}

fn assert_yd_matches_oracle(base: &YdBase, m: &YdModule) -> bool {
    let h = base.bialgebra();
    (0..h.dim()).all(|x| {
        (0..m.dim()).all(|y| {
            let (lhs, rhs) = naive_hom_yd_sides(h.mul(), h.comul(), h.alpha(), m.action(), m.coaction(), x, y);
            lhs == rhs
        })
    })
}

#[test]
fn classical_z2_fixture_passes() {
    let base = classical(2);
    let m = z2_regular_yd();
    assert!(check_yd(&base, &m).unwrap().pass());
    assert!(assert_yd_matches_oracle(&base, &m));
}

#[test]
fn regular_action_and_regular_coaction_fail_hom_yd() {
    let base = classical(2);
    let m = YdModule::new(cyclic_mul(q(), 2), grouplike_comul(q(), 2), LinMap::identity(q(), 2)).unwrap();
    let r = check_yd(&base, &m).unwrap();
    assert_eq!(r.failed_axioms(), vec!["homYD"]);
    assert!(!assert_yd_matches_oracle(&base, &m));
}

#[test]
fn zero_structures_pass() {
    let base = classical(2);
    let m = YdModule::new(
        LinMap::zeros(q(), 3, 6),
        LinMap::zeros(q(), 6, 3),
        LinMap::identity(q(), 3),
    )
    .unwrap();
    assert!(check_yd(&base, &m).unwrap().pass());
    assert!(b_yd(&base, &m, &z2_regular_yd()).unwrap().is_zero());
    assert!(quasi_braiding_yd(&base, &m, &m).unwrap().is_zero());
}

#[test]
fn constant_grouplike_coaction_is_decided_by_the_checker() {
    let base = classical(2);
    let m = YdModule::new(
        cyclic_mul(q(), 2),
        constant_coaction(q(), 2, 2, 1),
        LinMap::identity(q(), 2),
    )
    .unwrap();
    let r = check_yd(&base, &m).unwrap();
    // λ(m) = g ⊗ m is a comodule structure, and g is central
    assert!(check_comodule(base.bialgebra(), &m.comodule()).unwrap().pass());
    assert_eq!(r.pass(), assert_yd_matches_oracle(&base, &m));
    assert!(r.pass());
}

#[test]
fn checker_agrees_with_oracle_on_fixtures() {
    for (base, mods) in fixture_sets() {
        for m in &mods {
            assert!(check_yd(&base, m).unwrap().pass());
            assert!(assert_yd_matches_oracle(&base, m));
        }
    }
}

#[test]
fn tensor_with_zero_coaction_has_zero_coaction() {
    let base = classical(2);
    let z = YdModule::new(
        trivial_action(q(), 2, 1),
        LinMap::zeros(q(), 2, 1),
        LinMap::identity(q(), 1),
    )
    .unwrap();
    assert!(check_yd(&base, &z).unwrap().pass());
    let t = yd_tensor(&base, &z2_regular_yd(), &z).unwrap();
    assert!(t.coaction().is_zero());
}

#[test]
fn regular_tensor_regular_coaction_multiplies_degrees() {
    let base = classical(2);
    let m = z2_regular_yd();
    let t = yd_tensor(&base, &m, &m).unwrap();
    // e_a ⊗ e_b ↦ e_{a+b} ⊗ (e_a ⊗ e_b)
    for a in 0..2 {
        for b in 0..2 {
            let col = t.coaction().column(flatten(a, b, 2));
            assert_eq!(col, basis(q(), 8, flatten((a + b) % 2, flatten(a, b, 2), 4)));
        }
    }
    assert!(check_yd(&base, &t).unwrap().pass());
}

#[test]
fn tensor_closure_on_all_pairs() {
    for (base, mods) in fixture_sets() {
        for m in &mods {
            for n in &mods {
                let t = yd_tensor(&base, m, n).unwrap();
                let r = check_yd(&base, &t).unwrap();
                assert!(r.pass(), "{:?}", r.failed_axioms());
                assert_eq!(
                    t.module(),
                    &tensor_module(base.bialgebra(), m.module(), n.module()).unwrap()
                );
            }
        }
    }
}

#[test]
fn b_on_classical_z2_fixture() {
    let base = classical(2);
    let m = z2_regular_yd();
    let b = b_yd(&base, &m, &m).unwrap();
    // the action is trivial, so B is the flip
    assert_eq!(b, flip_map(q(), 2, 2));
    assert_eq!(quasi_braiding_yd(&base, &m, &m).unwrap(), b);
    assert!(check_yd_mixed_ybe(&base, &m, &m, &m).unwrap().pass());
}

#[test]
fn b_on_regular_action_module() {
    let (base, mods) = gen_cyclic_yd_fixtures(q(), 2, 1).unwrap();
    // M with trivial action, coaction Δ; N with regular action
    let (m, n) = (&mods[0], &mods[1]);
    let b = b_yd(&base, m, n).unwrap();
    // B(e_a ⊗ e_b) = e_{a+b} ⊗ e_a
    for a in 0..2 {
        for c in 0..2 {
            assert_eq!(b.column(flatten(a, c, 2)), basis(q(), 4, flatten((a + c) % 2, a, 2)));
        }
    }
}

#[test]
fn b_properties_on_all_pairs() {
    for (base, mods) in fixture_sets() {
        for m in &mods {
            for n in &mods {
                let r = check_b_yd(&base, m, n).unwrap();
                assert!(r.pass(), "{:?}", r.failed_axioms());
            }
        }
    }
}

#[test]
fn mixed_ybe_on_all_triples() {
    for (base, mods) in fixture_sets() {
        for m in &mods {
            for n in &mods {
                for p in &mods {
                    assert!(check_yd_mixed_ybe(&base, m, n, p).unwrap().pass());
                }
            }
        }
    }
}

#[test]
fn f_twist_examples() {
    let base = classical(2);
    let m = z2_regular_yd();
    assert_eq!(f_twist_yd(&base, &m).unwrap(), m);
    let (base, mods) = gen_cyclic_yd_fixtures(q(), 3, 2).unwrap();
    let h = base.bialgebra();
    for m in &mods {
        let fm = f_twist_yd(&base, m).unwrap();
        assert!(check_yd(&base, &fm).unwrap().pass());
        assert_eq!(fm.module(), &twist_module(h, m.module(), Twist::F).unwrap());
        let ffm = f_twist_yd(&base, &fm).unwrap();
        let inv2 = base.alpha_inv().compose(base.alpha_inv()).unwrap();
        let expected = inv2
            .kron(&LinMap::identity(q(), m.dim()))
            .unwrap()
            .compose(m.coaction())
            .unwrap();
        assert_eq!(ffm.coaction(), &expected);
        for n in &mods {
            let lhs = f_twist_yd(&base, &yd_tensor(&base, m, n).unwrap()).unwrap();
            let rhs = yd_tensor(&base, &fm, &f_twist_yd(&base, n).unwrap()).unwrap();
            assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn associator_examples() {
    let m = z2_regular_yd();
    assert!(yd_associator(&m, &m, &m).unwrap().is_identity());
    let two = YdModule::new(
        trivial_action(q(), 2, 1),
        LinMap::zeros(q(), 2, 1),
        LinMap::from_ints(q(), &[&[2]]),
    )
    .unwrap();
    let three = YdModule::new(
        trivial_action(q(), 2, 1),
        LinMap::zeros(q(), 2, 1),
        LinMap::from_ints(q(), &[&[3]]),
    )
    .unwrap();
    assert_eq!(
        yd_associator(&two, &m, &three).unwrap(),
        LinMap::identity(q(), 2).scale(&q().from_ratio(3, 2).unwrap()).unwrap()
    );
}

#[test]
fn twisted_structures_pass_module_and_comodule_checks() {
    for (base, mods) in fixture_sets() {
        let h = base.bialgebra();
        for m in &mods {
            assert!(check_module(h, m.module()).unwrap().pass());
            assert!(check_comodule(h, &m.comodule()).unwrap().pass());
        }
    }
}

#[test]
fn twisting_a_non_intertwiner_breaks_the_structure() {
    let (base, _) = gen_cyclic_yd_fixtures(q(), 3, 2).unwrap();
    // the identity does not intertwine the regular action with α_H
    let m = twist_classical_yd(
        &base,
        &cyclic_mul(q(), 3),
        &constant_coaction(q(), 3, 3, 0),
        &LinMap::identity(q(), 3),
    )
    .unwrap();
    assert!(!check_yd(&base, &m).unwrap().pass());
}

#[test]
fn base_requires_alpha_equal_to_psi() {
    let (h, _) = gen_group_bialgebra(q(), 3, 2).unwrap();
    assert!(YdBase::new(h.clone()).is_ok());
    let other = homcat_core::hom_structures::HomBialgebra::new(
        h.mul().clone(),
        h.comul().clone(),
        h.alpha().clone(),
        LinMap::identity(q(), 3),
    )
    .unwrap();
    assert!(YdBase::new(other).is_err());
}
