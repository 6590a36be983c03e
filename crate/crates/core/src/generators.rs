//! Generated fixtures: twisted cyclic group bialgebras and their
//! quasitriangular structures.

use crate::error::Error;
use crate::field::{Field, FieldElem};
use crate::hom_structures::{check_hom_bialgebra, yau_twist_bialgebra, HomBialgebra};
use crate::linmap::{flatten, LinMap};
use crate::qt_braiding::RMatrix;
use crate::report::CheckReport;
use crate::yetter_drinfeld::{twist_classical_yd, YdBase, YdModule};

/// Group law of `Z_n` on the basis `e_0..e_{n-1}`.
pub fn cyclic_mul(field: Field, n: usize) -> LinMap {
    let mut mul = LinMap::zeros(field, n, n * n);
    for i in 0..n {
        for j in 0..n {
            mul.set((i + j) % n, flatten(i, j, n), field.one());
        }
    }
    mul
}

/// `Δ(e_i) = e_i ⊗ e_i`.
pub fn grouplike_comul(field: Field, n: usize) -> LinMap {
    let mut comul = LinMap::zeros(field, n * n, n);
    for i in 0..n {
        comul.set(flatten(i, i, n), i, field.one());
    }
    comul
}

/// The endomorphism `e_i ↦ e_{ik mod n}` of the group algebra of `Z_n`.
pub fn power_map(field: Field, n: usize, k: usize) -> LinMap {
    let mut m = LinMap::zeros(field, n, n);
    for i in 0..n {
        m.set((i * k) % n, i, field.one());
    }
    m
}

/// The group bialgebra of `Z_n` twisted along `g ↦ g^k`, so that
/// `α = ψ` is that map, the multiplication is `α ∘ μ` and the
/// comultiplication is `Δ ∘ α`. Returned with its axiom report.
pub fn gen_group_bialgebra(field: Field, n: usize, k: usize) -> Result<(HomBialgebra, CheckReport), Error> {
    if n == 0 {
        return Err(Error::dim("the cyclic group needs at least one element"));
    }
    let h = yau_twist_bialgebra(
        &cyclic_mul(field, n),
        &grouplike_comul(field, n),
        &power_map(field, n, k),
    )?;
    let report = check_hom_bialgebra(&h)?;
    Ok((h, report))
}

/// `R = (1/n) Σ_{a,b} ω^{ab} e_a ⊗ e_b` on the twisted group bialgebra
/// of `Z_n`, for a primitive `n`-th root of unity `ω` in the field.
pub fn gen_cyclic_qt(field: Field, n: usize, k: usize, omega: &FieldElem) -> Result<(HomBialgebra, RMatrix), Error> {
    if omega.field() != field {
        return Err(Error::FieldMismatch(field, omega.field()));
    }
    let inv_n = field
        .from_i64(n as i64)
        .inv()
        .ok_or_else(|| Error::precondition(format!("{n} is not invertible in {field}"), None))?;
    let mut powers = vec![field.one()];
    for _ in 1..n {
        let next = powers.last().unwrap().mul(omega);
        powers.push(next);
    }
    let primitive = powers.iter().skip(1).all(|p| !p.is_one()) && powers[n - 1].mul(omega).is_one();
    if !primitive {
        return Err(Error::precondition(
            format!("{omega} is not a primitive root of unity of order {n}"),
            None,
        ));
    }
    let (h, _) = gen_group_bialgebra(field, n, k)?;
    let coeffs = (0..n * n)
        .map(|idx| powers[(idx / n) * (idx % n) % n].mul(&inv_n))
        .collect();
    Ok((h, RMatrix::new(field, n, coeffs)?))
}

/// The group algebra of `Z_2` with `α = ψ = id` and
/// `R = ½(1⊗1 + 1⊗g + g⊗1 − g⊗g)`.
pub fn gen_kz2_qt(field: Field) -> Result<(HomBialgebra, RMatrix), Error> {
    if field.characteristic() == 2 {
        return Err(Error::CharacteristicTwo);
    }
    gen_cyclic_qt(field, 2, 1, &field.from_i64(-1))
}

/// Every group element acts as the identity: `g · m = m`.
pub fn trivial_action(field: Field, hdim: usize, dim: usize) -> LinMap {
    LinMap::from_fn(field, dim, hdim * dim, |r, c| {
        if c % dim == r {
            field.one()
        } else {
            field.zero()
        }
    })
}

/// `λ(m) = e_g ⊗ m` for a fixed basis element `g`.
pub fn constant_coaction(field: Field, hdim: usize, dim: usize, g: usize) -> LinMap {
    let mut lam = LinMap::zeros(field, hdim * dim, dim);
    for m in 0..dim {
        lam.set(flatten(g, m, dim), m, field.one());
    }
    lam
}

/// Yetter-Drinfeld modules over the twisted group bialgebra of `Z_n`
/// (`gcd(n, k) = 1`), each the twist of a classical structure along a
/// compatible invertible map:
///
/// 0. the group algebra with trivial action and coaction `Δ`, `α_M = α`;
/// 1. the group algebra with regular action and coaction `1 ⊗ m`, `α_M = α`;
/// 2. as 0 with `α_M = 2α`;
/// 3. the ground field with trivial action and coaction, `α_M = 3`.
pub fn gen_cyclic_yd_fixtures(field: Field, n: usize, k: usize) -> Result<(YdBase, Vec<YdModule>), Error> {
    let (h, _) = gen_group_bialgebra(field, n, k)?;
    let base = YdBase::new(h)?;
    let alpha = power_map(field, n, k);
    let two = LinMap::identity(field, n).scale(&field.from_i64(2))?.compose(&alpha)?;
    let three = LinMap::from_ints(field, &[&[3]]);
    let fixtures = vec![
        twist_classical_yd(&base, &trivial_action(field, n, n), &grouplike_comul(field, n), &alpha)?,
        twist_classical_yd(&base, &cyclic_mul(field, n), &constant_coaction(field, n, n, 0), &alpha)?,
        twist_classical_yd(&base, &trivial_action(field, n, n), &grouplike_comul(field, n), &two)?,
        twist_classical_yd(
            &base,
            &trivial_action(field, n, 1),
            &constant_coaction(field, n, 1, 0),
            &three,
        )?,
    ];
    Ok((base, fixtures))
}
