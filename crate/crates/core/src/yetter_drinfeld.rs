//! Yetter-Drinfeld modules over a hom-bialgebra with `α = ψ` invertible,
//! their tensor products, the map `B` and the associated quasi-braiding.

use crate::error::Error;
use crate::field::Field;
use crate::hom_structures::{AlgebraLike, CoalgebraLike, HomBialgebra, Space};
use crate::linmap::{check_field, flip_map, LinMap};
use crate::qt_braiding::check_mixed_hom_ybe;
use crate::rep_theory::{check_comodule, check_module, tensor_action, HComodule, HModule};
use crate::report::CheckReport;

/// A hom-bialgebra with `α = ψ` invertible, with `α⁻¹` and `α⁻²` cached.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YdBase {
    h: HomBialgebra,
    alpha_inv: LinMap,
    alpha_inv2: LinMap,
}

impl YdBase {
    pub fn new(h: HomBialgebra) -> Result<YdBase, Error> {
        if h.alpha() != h.psi() {
            return Err(Error::precondition("Yetter-Drinfeld data need α = ψ", None));
        }
        let alpha_inv = h.alpha().inverse().map_err(|_| Error::Singular("α_H".into()))?;
        let alpha_inv2 = alpha_inv.compose(&alpha_inv)?;
        Ok(YdBase {
            h,
            alpha_inv,
            alpha_inv2,
        })
    }

    pub fn bialgebra(&self) -> &HomBialgebra {
        &self.h
    }

    pub fn alpha_inv(&self) -> &LinMap {
        &self.alpha_inv
    }

    pub fn field(&self) -> Field {
        self.h.field()
    }

    pub fn dim(&self) -> usize {
        self.h.dim()
    }
}

/// A space with an action, a coaction and one twisting map serving both.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YdModule {
    module: HModule,
    coaction: LinMap,
}

impl YdModule {
    pub fn new(action: LinMap, coaction: LinMap, alpha: LinMap) -> Result<YdModule, Error> {
        let comodule = HComodule::new(coaction.clone(), alpha.clone())?;
        let module = HModule::new(action, alpha)?;
        if module.dim() > 0 && module.hdim() != comodule.hdim() {
            return Err(Error::dim("action and coaction use algebras of different dimension"));
        }
        Ok(YdModule { module, coaction })
    }

    pub fn module(&self) -> &HModule {
        &self.module
    }

    pub fn comodule(&self) -> HComodule {
        HComodule::new(self.coaction.clone(), self.module.alpha().clone()).expect("validated on construction")
    }

    pub fn action(&self) -> &LinMap {
        self.module.action()
    }

    pub fn coaction(&self) -> &LinMap {
        &self.coaction
    }

    pub fn alpha(&self) -> &LinMap {
        self.module.alpha()
    }
}

impl Space for YdModule {
    fn field(&self) -> Field {
        self.module.field()
    }
    fn dim(&self) -> usize {
        self.module.dim()
    }
}

fn require_over(base: &YdBase, m: &YdModule) -> Result<(), Error> {
    check_field(base.field(), m.field())?;
    if m.dim() > 0 && m.module.hdim() != base.dim() {
        return Err(Error::dim("module lives over a bialgebra of another dimension"));
    }
    Ok(())
}

/// Twists a classical Yetter-Drinfeld structure along `α_M`, a map
/// intertwining the classical action and coaction with `α_H`. The result
/// has action `α_M ∘ act` and coaction `(α_H ⊗ α_M) ∘ λ`.
pub fn twist_classical_yd(
    base: &YdBase,
    action: &LinMap,
    coaction: &LinMap,
    alpha_m: &LinMap,
) -> Result<YdModule, Error> {
    YdModule::new(
        alpha_m.compose(action)?,
        base.h.alpha().kron(alpha_m)?.compose(coaction)?,
        alpha_m.clone(),
    )
}

/// Module and comodule axioms plus the hom-Yetter-Drinfeld compatibility
/// `Σ (h(1)·m)(-1) α²(h(2)) ⊗ (h(1)·m)(0) = Σ α²(h(1)) α(m(-1)) ⊗ α(h(2))·m(0)`.
pub fn check_yd(base: &YdBase, m: &YdModule) -> Result<CheckReport, Error> {
    require_over(base, m)?;
    let h = &base.h;
    let f = h.field();
    let (n, p) = (h.dim(), m.dim());
    let mut report = check_module(h, &m.module)?;
    report.merge(check_comodule(h, &m.comodule())?);

    let alpha = h.alpha();
    let alpha2 = alpha.compose(alpha)?;
    let (id_n, id_p) = (LinMap::identity(f, n), LinMap::identity(f, p));
    let (act, lam) = (m.action(), &m.coaction);
    let lhs = LinMap::chain(&[
        &h.mul().kron(&id_p)?,
        &id_n.kron(&flip_map(f, p, n))?,
        &lam.kron(&id_n)?,
        &act.kron(&alpha2)?,
        &id_n.kron(&flip_map(f, n, p))?,
        &h.comul().kron(&id_p)?,
    ])?;
    let rhs = LinMap::chain(&[
        &h.mul().kron(act)?,
        &LinMap::kron_all(&[&alpha2, alpha, alpha, &id_p])?,
        &LinMap::kron_all(&[&id_n, &flip_map(f, n, n), &id_p])?,
        &h.comul().kron(lam)?,
    ])?;
    report.compare("homYD", &lhs, &rhs, &[n, p]);
    Ok(report)
}

/// `M ⊗ N` with the diagonal action and the coaction
/// `m ⊗ n ↦ Σ α⁻²(m(-1) n(-1)) ⊗ (m(0) ⊗ n(0))`.
pub fn yd_tensor(base: &YdBase, m: &YdModule, n: &YdModule) -> Result<YdModule, Error> {
    require_over(base, m)?;
    require_over(base, n)?;
    let h = &base.h;
    let f = h.field();
    let (hd, dm, dn) = (h.dim(), m.dim(), n.dim());
    let action = tensor_action(h.comul(), m.action(), dm, n.action(), dn)?;
    let coaction = LinMap::chain(&[
        &base.alpha_inv2.compose(h.mul())?.kron(&LinMap::identity(f, dm * dn))?,
        &LinMap::kron_all(&[&LinMap::identity(f, hd), &flip_map(f, dm, hd), &LinMap::identity(f, dn)])?,
        &m.coaction.kron(&n.coaction)?,
    ])?;
    YdModule::new(action, coaction, m.alpha().kron(n.alpha())?)
}

/// `F(M)`: action through `α_H`, coaction followed by `α_H⁻¹ ⊗ id`.
pub fn f_twist_yd(base: &YdBase, m: &YdModule) -> Result<YdModule, Error> {
    require_over(base, m)?;
    let f = base.field();
    let id_m = LinMap::identity(f, m.dim());
    YdModule::new(
        m.action().compose(&base.h.alpha().kron(&id_m)?)?,
        base.alpha_inv.kron(&id_m)?.compose(&m.coaction)?,
        m.alpha().clone(),
    )
}

/// `B_{M,N}(m ⊗ n) = Σ α⁻¹(m(-1)) · n ⊗ m(0)`.
pub fn b_yd(base: &YdBase, m: &YdModule, n: &YdModule) -> Result<LinMap, Error> {
    require_over(base, m)?;
    require_over(base, n)?;
    let f = base.field();
    let (dm, dn) = (m.dim(), n.dim());
    let twisted_act = n.action().compose(&base.alpha_inv.kron(&LinMap::identity(f, dn))?)?;
    LinMap::chain(&[
        &twisted_act.kron(&LinMap::identity(f, dm))?,
        &LinMap::identity(f, base.dim()).kron(&flip_map(f, dm, dn))?,
        &m.coaction.kron(&LinMap::identity(f, dn))?,
    ])
}

/// `c_{M,N} = (α_N⁻¹ ⊗ α_M⁻¹) ∘ B_{M,N}`; needs invertible twisting maps.
pub fn quasi_braiding_yd(base: &YdBase, m: &YdModule, n: &YdModule) -> Result<LinMap, Error> {
    let am = m.alpha().inverse().map_err(|_| Error::Singular("α_M".into()))?;
    let an = n.alpha().inverse().map_err(|_| Error::Singular("α_N".into()))?;
    an.kron(&am)?.compose(&b_yd(base, m, n)?)
}

/// `α_M⁻¹ ⊗ id_N ⊗ α_P` on `M ⊗ N ⊗ P`.
pub fn yd_associator(m: &YdModule, n: &YdModule, p: &YdModule) -> Result<LinMap, Error> {
    let am = m.alpha().inverse().map_err(|_| Error::Singular("α_M".into()))?;
    LinMap::kron_all(&[&am, &LinMap::identity(m.field(), n.dim()), p.alpha()])
}

/// Properties of `B_{M,N}`: it intertwines the twisting maps, is a module
/// and comodule morphism `M ⊗ N -> F(N) ⊗ F(M)`, and `F` does not change it.
pub fn check_b_yd(base: &YdBase, m: &YdModule, n: &YdModule) -> Result<CheckReport, Error> {
    let f = base.field();
    let (hd, dm, dn) = (base.dim(), m.dim(), n.dim());
    let b = b_yd(base, m, n)?;
    let mut report = CheckReport::new();
    report.compare(
        "defB",
        &n.alpha().kron(m.alpha())?.compose(&b)?,
        &b.compose(&m.alpha().kron(n.alpha())?)?,
        &[dm, dn],
    );
    let src = yd_tensor(base, m, n)?;
    let fm = f_twist_yd(base, m)?;
    let fn_ = f_twist_yd(base, n)?;
    let dst = yd_tensor(base, &fn_, &fm)?;
    let id_h = LinMap::identity(f, hd);
    report.compare(
        "B_module",
        &b.compose(src.action())?,
        &dst.action().compose(&id_h.kron(&b)?)?,
        &[hd, dm, dn],
    );
    report.compare(
        "B_comodule",
        &id_h.kron(&b)?.compose(src.coaction())?,
        &dst.coaction().compose(&b)?,
        &[dm, dn],
    );
    report.compare("F_B", &b_yd(base, &fm, &fn_)?, &b, &[dm, dn]);
    Ok(report)
}

/// The mixed hom-Yang-Baxter identity for `B` on three modules.
pub fn check_yd_mixed_ybe(base: &YdBase, m: &YdModule, n: &YdModule, p: &YdModule) -> Result<CheckReport, Error> {
    check_mixed_hom_ybe(
        &b_yd(base, m, n)?,
        &b_yd(base, m, p)?,
        &b_yd(base, n, p)?,
        m.alpha(),
        n.alpha(),
        p.alpha(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{
        constant_coaction, cyclic_mul, gen_cyclic_yd_fixtures, gen_group_bialgebra, grouplike_comul, trivial_action,
    };

    fn kz2() -> YdBase {
        YdBase::new(gen_group_bialgebra(Field::Rational, 2, 1).unwrap().0).unwrap()
    }

    #[test]
    fn singular_alpha_is_rejected() {
        let (h, _) = gen_group_bialgebra(Field::Rational, 2, 2).unwrap();
        assert!(matches!(YdBase::new(h), Err(Error::Singular(_))));
    }

    #[test]
    fn regular_action_with_regular_coaction_fails() {
        let base = kz2();
        let q = Field::Rational;
        let m = YdModule::new(cyclic_mul(q, 2), grouplike_comul(q, 2), LinMap::identity(q, 2)).unwrap();
        let r = check_yd(&base, &m).unwrap();
        assert_eq!(r.failed_axioms(), vec!["homYD"]);
        // h = g, m = 1
        assert!(r.violations().iter().any(|v| v.index == vec![1, 0]));
    }

    #[test]
    fn adjoint_action_with_regular_coaction_passes() {
        let base = kz2();
        let q = Field::Rational;
        let m = YdModule::new(trivial_action(q, 2, 2), grouplike_comul(q, 2), LinMap::identity(q, 2)).unwrap();
        assert!(check_yd(&base, &m).unwrap().pass());
        let b = b_yd(&base, &m, &m).unwrap();
        assert_eq!(b, flip_map(q, 2, 2));
    }

    #[test]
    fn constant_grouplike_coaction_passes() {
        let base = kz2();
        let q = Field::Rational;
        let m = YdModule::new(cyclic_mul(q, 2), constant_coaction(q, 2, 2, 1), LinMap::identity(q, 2)).unwrap();
        assert!(check_yd(&base, &m).unwrap().pass());
    }

    #[test]
    fn twisted_fixtures_are_yetter_drinfeld() {
        let (base, fixtures) = gen_cyclic_yd_fixtures(Field::Rational, 3, 2).unwrap();
        for m in &fixtures {
            let r = check_yd(&base, m).unwrap();
            assert!(r.pass(), "{r:?}");
        }
    }
}
