//! Modules and comodules over hom-structures, their tensor products and
//! the twisting functors `F` and `G`.
//!
//! An action of `H` on `M` is a `dim M x (dim H · dim M)` map whose column
//! `flatten(h, m, dim M)` holds `e_h · e_m`. A coaction is a
//! `(dim H · dim M) x dim M` map whose column `m` holds `λ(e_m)`.

use crate::error::Error;
use crate::field::{Field, FieldElem};
use crate::hom_structures::{AlgebraLike, CoalgebraLike, HomAlgebra, HomBialgebra, Space};
use crate::linmap::{check_field, flatten, flip_map, LinMap};
use crate::report::CheckReport;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HModule {
    action: LinMap,
    alpha: LinMap,
}

impl HModule {
    pub fn new(action: LinMap, alpha: LinMap) -> Result<HModule, Error> {
        check_field(action.field(), alpha.field())?;
        let d = alpha.rows();
        if !alpha.is_square() {
            return Err(Error::dim("module twisting map is not square"));
        }
        if action.rows() != d || (d > 0 && !action.cols().is_multiple_of(d)) || (d == 0 && action.cols() != 0) {
            return Err(Error::dim(format!(
                "action is {}x{} for a module of dimension {d}",
                action.rows(),
                action.cols()
            )));
        }
        Ok(HModule { action, alpha })
    }

    /// `A` acting on itself by multiplication, with `α_M = α_A`.
    pub fn regular<A: AlgebraLike + ?Sized>(a: &A) -> HModule {
        HModule {
            action: a.mul().clone(),
            alpha: a.alpha().clone(),
        }
    }

    /// The zero action on a space with the given twisting map.
    pub fn zero(hdim: usize, alpha: LinMap) -> Result<HModule, Error> {
        let d = alpha.rows();
        HModule::new(LinMap::zeros(alpha.field(), d, hdim * d), alpha)
    }

    pub fn action(&self) -> &LinMap {
        &self.action
    }

    pub fn alpha(&self) -> &LinMap {
        &self.alpha
    }

    /// Dimension of the acting algebra.
    pub fn hdim(&self) -> usize {
        if self.dim() == 0 {
            0
        } else {
            self.action.cols() / self.dim()
        }
    }

    /// The operator `m ↦ e_h · m`.
    pub fn operator(&self, h: usize) -> LinMap {
        let d = self.dim();
        LinMap::from_fn(self.field(), d, d, |r, c| self.action.get(r, flatten(h, c, d)).clone())
    }

    /// The operator `m ↦ x · m` for an arbitrary element `x`.
    pub fn operator_of(&self, x: &[FieldElem]) -> LinMap {
        let d = self.dim();
        let mut out = LinMap::zeros(self.field(), d, d);
        for (h, c) in x.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for r in 0..d {
                for m in 0..d {
                    out.add_at(r, m, c, self.action.get(r, flatten(h, m, d)));
                }
            }
        }
        out
    }

    /// The same module in the basis given by the columns of `p⁻¹`:
    /// action `p ∘ act ∘ (id ⊗ p⁻¹)` and twisting map `p α p⁻¹`.
    pub fn transport(&self, p: &LinMap) -> Result<HModule, Error> {
        let inv = p.inverse()?;
        let id_h = LinMap::identity(self.field(), self.hdim());
        HModule::new(
            p.compose(&self.action.compose(&id_h.kron(&inv)?)?)?,
            p.compose(&self.alpha.compose(&inv)?)?,
        )
    }
}

impl Space for HModule {
    fn field(&self) -> Field {
        self.alpha.field()
    }
    fn dim(&self) -> usize {
        self.alpha.rows()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HComodule {
    coaction: LinMap,
    psi: LinMap,
}

impl HComodule {
    pub fn new(coaction: LinMap, psi: LinMap) -> Result<HComodule, Error> {
        check_field(coaction.field(), psi.field())?;
        let d = psi.rows();
        if !psi.is_square() {
            return Err(Error::dim("comodule twisting map is not square"));
        }
        if coaction.cols() != d || (d > 0 && !coaction.rows().is_multiple_of(d)) {
            return Err(Error::dim(format!(
                "coaction is {}x{} for a comodule of dimension {d}",
                coaction.rows(),
                coaction.cols()
            )));
        }
        Ok(HComodule { coaction, psi })
    }

    /// `C` coacting on itself by its comultiplication.
    pub fn regular<C: CoalgebraLike + ?Sized>(c: &C) -> HComodule {
        HComodule {
            coaction: c.comul().clone(),
            psi: c.psi().clone(),
        }
    }

    pub fn coaction(&self) -> &LinMap {
        &self.coaction
    }

    pub fn psi(&self) -> &LinMap {
        &self.psi
    }

    pub fn hdim(&self) -> usize {
        if self.dim() == 0 {
            0
        } else {
            self.coaction.rows() / self.dim()
        }
    }
}

impl Space for HComodule {
    fn field(&self) -> Field {
        self.psi.field()
    }
    fn dim(&self) -> usize {
        self.psi.rows()
    }
}

fn require_module_over(hdim: usize, m: &HModule) -> Result<(), Error> {
    if m.dim() > 0 && m.hdim() != hdim {
        return Err(Error::dim(format!(
            "module expects an algebra of dimension {}, got {hdim}",
            m.hdim()
        )));
    }
    Ok(())
}

/// Compatibility of the action with the twisting maps and hom-associativity
/// of the action.
pub fn check_module<A: AlgebraLike + ?Sized>(h: &A, m: &HModule) -> Result<CheckReport, Error> {
    check_field(h.field(), m.field())?;
    require_module_over(h.dim(), m)?;
    let (n, d) = (h.dim(), m.dim());
    let act = &m.action;
    let mut report = CheckReport::new();
    report.compare(
        "eq8",
        &m.alpha.compose(act)?,
        &act.compose(&h.alpha().kron(&m.alpha)?)?,
        &[n, d],
    );
    report.compare(
        "eq9",
        &act.compose(&h.alpha().kron(act)?)?,
        &act.compose(&h.mul().kron(&m.alpha)?)?,
        &[n, n, d],
    );
    Ok(report)
}

/// Compatibility of the coaction with the twisting maps and
/// hom-coassociativity of the coaction.
pub fn check_comodule<C: CoalgebraLike + ?Sized>(c: &C, m: &HComodule) -> Result<CheckReport, Error> {
    check_field(c.field(), m.field())?;
    if m.dim() > 0 && m.hdim() != c.dim() {
        return Err(Error::dim("comodule coacts with a coalgebra of another dimension"));
    }
    let d = m.dim();
    let lam = &m.coaction;
    let mut report = CheckReport::new();
    report.compare(
        "comodul1",
        &c.psi().kron(&m.psi)?.compose(lam)?,
        &lam.compose(&m.psi)?,
        &[d],
    );
    report.compare(
        "comodul2",
        &c.comul().kron(&m.psi)?.compose(lam)?,
        &c.psi().kron(lam)?.compose(lam)?,
        &[d],
    );
    Ok(report)
}

/// Nonzero entries of every column, for sparse loops.
fn sparse_columns(m: &LinMap) -> Vec<Vec<(usize, FieldElem)>> {
    (0..m.cols())
        .map(|c| {
            (0..m.rows())
                .filter_map(|r| {
                    let x = m.get(r, c);
                    (!x.is_zero()).then(|| (r, x.clone()))
                })
                .collect()
        })
        .collect()
}

/// `h · (m ⊗ n) = Σ (h(1) · m) ⊗ (h(2) · n)` with `α_{M⊗N} = α_M ⊗ α_N`.
pub fn tensor_module(h: &HomBialgebra, m: &HModule, n: &HModule) -> Result<HModule, Error> {
    check_field(h.field(), m.field())?;
    check_field(h.field(), n.field())?;
    require_module_over(h.dim(), m)?;
    require_module_over(h.dim(), n)?;
    let action = tensor_action(h.comul(), &m.action, m.dim(), &n.action, n.dim())?;
    HModule::new(action, m.alpha.kron(&n.alpha)?)
}

pub(crate) fn tensor_action(
    comul: &LinMap,
    act_m: &LinMap,
    dm: usize,
    act_n: &LinMap,
    dn: usize,
) -> Result<LinMap, Error> {
    let f = comul.field();
    let hd = comul.cols();
    let d = dm * dn;
    let mut out = LinMap::zeros(f, d, hd * d);
    let cm = sparse_columns(act_m);
    let cn = sparse_columns(act_n);
    let delta = sparse_columns(comul);
    for (h, terms) in delta.iter().enumerate() {
        for (ab, coeff) in terms {
            let (a, b) = (ab / hd, ab % hd);
            for m in 0..dm {
                let col_m = &cm[flatten(a, m, dm)];
                if col_m.is_empty() {
                    continue;
                }
                for n in 0..dn {
                    let col_n = &cn[flatten(b, n, dn)];
                    let target = flatten(h, flatten(m, n, dn), d);
                    for (x, cx) in col_m {
                        let scaled = coeff.mul(cx);
                        for (y, cy) in col_n {
                            out.add_at(flatten(*x, *y, dn), target, &scaled, cy);
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Twist {
    /// `h ·ψ m = ψ_H(h) · m`
    F,
    /// `h ·α m = α_H(h) · m`
    G,
}

/// `F(M)` or `G(M)`: the action precomposed with `ψ_H` or `α_H`.
pub fn twist_module(h: &HomBialgebra, m: &HModule, which: Twist) -> Result<HModule, Error> {
    check_field(h.field(), m.field())?;
    require_module_over(h.dim(), m)?;
    let t = match which {
        Twist::F => h.psi(),
        Twist::G => h.alpha(),
    };
    let id_m = LinMap::identity(m.field(), m.dim());
    HModule::new(m.action.compose(&t.kron(&id_m)?)?, m.alpha.clone())
}

/// `f : M -> N` with `α_N f = f α_M` and `f(h · m) = h · f(m)`.
pub fn check_module_morphism(f: &LinMap, h: &HomBialgebra, m: &HModule, n: &HModule) -> Result<CheckReport, Error> {
    check_field(f.field(), h.field())?;
    require_module_over(h.dim(), m)?;
    require_module_over(h.dim(), n)?;
    if f.rows() != n.dim() || f.cols() != m.dim() {
        return Err(Error::dim("morphism does not match source and target"));
    }
    let id_h = LinMap::identity(h.field(), h.dim());
    let mut report = CheckReport::new();
    report.compare(
        "module_morphism.alpha",
        &n.alpha.compose(f)?,
        &f.compose(&m.alpha)?,
        &[m.dim()],
    );
    report.compare(
        "module_morphism.action",
        &f.compose(&m.action)?,
        &n.action.compose(&id_h.kron(f)?)?,
        &[h.dim(), m.dim()],
    );
    Ok(report)
}

/// `Φ_M = α_M` as a morphism `M -> G(M)`, and its naturality against the
/// supplied module morphisms `f : M -> N`.
pub fn phi_check(h: &HomBialgebra, m: &HModule, morphisms: &[(&LinMap, &HModule)]) -> Result<CheckReport, Error> {
    let gm = twist_module(h, m, Twist::G)?;
    let mut report = CheckReport::new();
    let id_h = LinMap::identity(h.field(), h.dim());
    report.compare(
        "phi.morphism",
        &m.alpha.compose(&m.action)?,
        &gm.action.compose(&id_h.kron(&m.alpha)?)?,
        &[h.dim(), m.dim()],
    );
    for (f, n) in morphisms {
        if f.rows() != n.dim() || f.cols() != m.dim() {
            return Err(Error::dim("naturality morphism does not match its modules"));
        }
        report.compare("phi.natural", &n.alpha.compose(f)?, &f.compose(&m.alpha)?, &[m.dim()]);
    }
    Ok(report)
}

/// Compares the actions on `(U ⊗ V) ⊗ F(W)` and `F(U) ⊗ (V ⊗ W)`, which
/// share a flat basis, so the associator is the identity exactly when
/// they agree.
pub fn check_associator_instance(
    h: &HomBialgebra,
    u: &HModule,
    v: &HModule,
    w: &HModule,
) -> Result<CheckReport, Error> {
    let left = tensor_module(h, &tensor_module(h, u, v)?, &twist_module(h, w, Twist::F)?)?;
    let right = tensor_module(h, &twist_module(h, u, Twist::F)?, &tensor_module(h, v, w)?)?;
    let mut report = CheckReport::new();
    report.compare(
        "associator",
        &left.action,
        &right.action,
        &[h.dim(), u.dim(), v.dim(), w.dim()],
    );
    report.compare(
        "associator.alpha",
        &left.alpha,
        &right.alpha,
        &[u.dim(), v.dim(), w.dim()],
    );
    Ok(report)
}

/// Module hom-algebra condition
/// `(αψ)(h) · (aa') = Σ (h(1) · a)(h(2) · a')`, requiring `α_M = α_A`.
pub fn check_module_hom_algebra(h: &HomBialgebra, a: &HomAlgebra, m: &HModule) -> Result<CheckReport, Error> {
    check_field(h.field(), a.field())?;
    check_field(h.field(), m.field())?;
    require_module_over(h.dim(), m)?;
    if m.dim() != a.dim() || m.alpha() != a.alpha() {
        return Err(Error::precondition(
            "the module twisting map must equal the algebra twisting map",
            None,
        ));
    }
    let f = h.field();
    let (n, d) = (h.dim(), a.dim());
    let id_a = LinMap::identity(f, d);
    let id_h = LinMap::identity(f, n);
    let alpha_psi = h.alpha().compose(h.psi())?;
    let lhs = m.action.compose(&alpha_psi.kron(a.mul())?)?;
    let shuffle = LinMap::kron_all(&[&id_h, &flip_map(f, n, d), &id_a])?;
    let rhs = LinMap::chain(&[
        a.mul(),
        &m.action.kron(&m.action)?,
        &shuffle,
        &h.comul().kron(&id_a.kron(&id_a)?)?,
    ])?;
    let mut report = CheckReport::new();
    report.compare("compmodulealgebra", &lhs, &rhs, &[n, d, d]);
    Ok(report)
}
