//! Hom-algebras, hom-coalgebras, hom-bialgebras and hom-semigroups.
//!
//! A multiplication on a space of dimension `n` is an `n x n²` map whose
//! column `flatten(i, j, n)` holds the coordinates of `e_i e_j`. A
//! comultiplication is an `n² x n` map whose column `k` holds `Δ(e_k)`.

use crate::error::Error;
use crate::field::{Field, FieldElem};
use crate::linmap::{check_field, flatten, flip_map, LinMap};
use crate::report::CheckReport;

/// A finite-dimensional space with a chosen basis.
pub trait Space {
    fn field(&self) -> Field;
    fn dim(&self) -> usize;
}

pub trait AlgebraLike: Space {
    fn mul(&self) -> &LinMap;
    fn alpha(&self) -> &LinMap;
}

pub trait CoalgebraLike: Space {
    fn comul(&self) -> &LinMap;
    fn psi(&self) -> &LinMap;
}

fn check_square(m: &LinMap, n: usize, what: &str) -> Result<(), Error> {
    if m.rows() != n || m.cols() != n {
        return Err(Error::dim(format!(
            "{what} is {}x{}, expected {n}x{n}",
            m.rows(),
            m.cols()
        )));
    }
    Ok(())
}

fn check_mul_shape(mul: &LinMap, n: usize) -> Result<(), Error> {
    if mul.rows() != n || mul.cols() != n * n {
        return Err(Error::dim(format!(
            "multiplication is {}x{}, expected {n}x{}",
            mul.rows(),
            mul.cols(),
            n * n
        )));
    }
    Ok(())
}

fn check_comul_shape(comul: &LinMap, n: usize) -> Result<(), Error> {
    if comul.rows() != n * n || comul.cols() != n {
        return Err(Error::dim(format!(
            "comultiplication is {}x{}, expected {}x{n}",
            comul.rows(),
            comul.cols(),
            n * n
        )));
    }
    Ok(())
}

/// Builds a multiplication map from structure constants `m[i][j][k]`
/// with `e_i e_j = Σ_k m[i][j][k] e_k`.
pub fn mul_from_cube(field: Field, cube: &[Vec<Vec<FieldElem>>]) -> Result<LinMap, Error> {
    let n = cube.len();
    let mut mul = LinMap::zeros(field, n, n * n);
    for (i, plane) in cube.iter().enumerate() {
        if plane.len() != n {
            return Err(Error::dim("structure constants are not n x n x n"));
        }
        for (j, line) in plane.iter().enumerate() {
            if line.len() != n {
                return Err(Error::dim("structure constants are not n x n x n"));
            }
            for (k, x) in line.iter().enumerate() {
                check_field(field, x.field())?;
                mul.set(k, flatten(i, j, n), x.clone());
            }
        }
    }
    Ok(mul)
}

/// Builds a comultiplication from `d[k][i][j]` with
/// `Δ(e_k) = Σ d[k][i][j] e_i ⊗ e_j`.
pub fn comul_from_cube(field: Field, cube: &[Vec<Vec<FieldElem>>]) -> Result<LinMap, Error> {
    let n = cube.len();
    let mut comul = LinMap::zeros(field, n * n, n);
    for (k, plane) in cube.iter().enumerate() {
        if plane.len() != n {
            return Err(Error::dim("structure constants are not n x n x n"));
        }
        for (i, line) in plane.iter().enumerate() {
            if line.len() != n {
                return Err(Error::dim("structure constants are not n x n x n"));
            }
            for (j, x) in line.iter().enumerate() {
                check_field(field, x.field())?;
                comul.set(flatten(i, j, n), k, x.clone());
            }
        }
    }
    Ok(comul)
}

/// `m[i][j][k]` for a multiplication map.
pub fn mul_to_cube(mul: &LinMap) -> Vec<Vec<Vec<FieldElem>>> {
    let n = mul.rows();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).map(|k| mul.get(k, flatten(i, j, n)).clone()).collect())
                .collect()
        })
        .collect()
}

/// `d[k][i][j]` for a comultiplication map.
pub fn comul_to_cube(comul: &LinMap) -> Vec<Vec<Vec<FieldElem>>> {
    let n = comul.cols();
    (0..n)
        .map(|k| {
            (0..n)
                .map(|i| (0..n).map(|j| comul.get(flatten(i, j, n), k).clone()).collect())
                .collect()
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomAlgebra {
    mul: LinMap,
    alpha: LinMap,
}

impl HomAlgebra {
    pub fn new(mul: LinMap, alpha: LinMap) -> Result<HomAlgebra, Error> {
        let n = alpha.rows();
        check_field(mul.field(), alpha.field())?;
        check_square(&alpha, n, "alpha")?;
        check_mul_shape(&mul, n)?;
        Ok(HomAlgebra { mul, alpha })
    }
}

impl Space for HomAlgebra {
    fn field(&self) -> Field {
        self.alpha.field()
    }
    fn dim(&self) -> usize {
        self.alpha.rows()
    }
}

impl AlgebraLike for HomAlgebra {
    fn mul(&self) -> &LinMap {
        &self.mul
    }
    fn alpha(&self) -> &LinMap {
        &self.alpha
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomCoalgebra {
    comul: LinMap,
    psi: LinMap,
}

impl HomCoalgebra {
    pub fn new(comul: LinMap, psi: LinMap) -> Result<HomCoalgebra, Error> {
        let n = psi.rows();
        check_field(comul.field(), psi.field())?;
        check_square(&psi, n, "psi")?;
        check_comul_shape(&comul, n)?;
        Ok(HomCoalgebra { comul, psi })
    }
}

impl Space for HomCoalgebra {
    fn field(&self) -> Field {
        self.psi.field()
    }
    fn dim(&self) -> usize {
        self.psi.rows()
    }
}

impl CoalgebraLike for HomCoalgebra {
    fn comul(&self) -> &LinMap {
        &self.comul
    }
    fn psi(&self) -> &LinMap {
        &self.psi
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomBialgebra {
    mul: LinMap,
    comul: LinMap,
    alpha: LinMap,
    psi: LinMap,
}

impl HomBialgebra {
    pub fn new(mul: LinMap, comul: LinMap, alpha: LinMap, psi: LinMap) -> Result<HomBialgebra, Error> {
        let n = alpha.rows();
        for m in [&mul, &comul, &psi] {
            check_field(alpha.field(), m.field())?;
        }
        check_square(&alpha, n, "alpha")?;
        check_square(&psi, n, "psi")?;
        check_mul_shape(&mul, n)?;
        check_comul_shape(&comul, n)?;
        Ok(HomBialgebra { mul, comul, alpha, psi })
    }

    pub fn algebra(&self) -> HomAlgebra {
        HomAlgebra {
            mul: self.mul.clone(),
            alpha: self.alpha.clone(),
        }
    }

    pub fn coalgebra(&self) -> HomCoalgebra {
        HomCoalgebra {
            comul: self.comul.clone(),
            psi: self.psi.clone(),
        }
    }
}

impl Space for HomBialgebra {
    fn field(&self) -> Field {
        self.alpha.field()
    }
    fn dim(&self) -> usize {
        self.alpha.rows()
    }
}

impl AlgebraLike for HomBialgebra {
    fn mul(&self) -> &LinMap {
        &self.mul
    }
    fn alpha(&self) -> &LinMap {
        &self.alpha
    }
}

impl CoalgebraLike for HomBialgebra {
    fn comul(&self) -> &LinMap {
        &self.comul
    }
    fn psi(&self) -> &LinMap {
        &self.psi
    }
}

fn id(field: Field, n: usize) -> LinMap {
    LinMap::identity(field, n)
}

fn algebra_axioms<A: AlgebraLike + ?Sized>(a: &A, report: &mut CheckReport) -> Result<(), Error> {
    let n = a.dim();
    let (mul, alpha) = (a.mul(), a.alpha());
    let lhs = alpha.compose(mul)?;
    let rhs = mul.compose(&alpha.kron(alpha)?)?;
    report.compare("eq1", &lhs, &rhs, &[n, n]);
    let lhs = mul.compose(&alpha.kron(mul)?)?;
    let rhs = mul.compose(&mul.kron(alpha)?)?;
    report.compare("eq2", &lhs, &rhs, &[n, n, n]);
    Ok(())
}

fn coalgebra_axioms<C: CoalgebraLike + ?Sized>(c: &C, report: &mut CheckReport) -> Result<(), Error> {
    let n = c.dim();
    let (comul, psi) = (c.comul(), c.psi());
    let lhs = psi.kron(psi)?.compose(comul)?;
    let rhs = comul.compose(psi)?;
    report.compare("eq3", &lhs, &rhs, &[n]);
    let lhs = comul.kron(psi)?.compose(comul)?;
    let rhs = psi.kron(comul)?.compose(comul)?;
    report.compare("eq4", &lhs, &rhs, &[n]);
    Ok(())
}

/// Multiplicativity of α and hom-associativity.
pub fn check_hom_algebra<A: AlgebraLike + ?Sized>(a: &A) -> Result<CheckReport, Error> {
    let mut report = CheckReport::new();
    algebra_axioms(a, &mut report)?;
    Ok(report)
}

/// Comultiplicativity of ψ and hom-coassociativity.
pub fn check_hom_coalgebra<C: CoalgebraLike + ?Sized>(c: &C) -> Result<CheckReport, Error> {
    let mut report = CheckReport::new();
    coalgebra_axioms(c, &mut report)?;
    Ok(report)
}

/// Hom-coassociativity evaluated on structure constants in Sweedler form,
/// independently of the matrix route used for `eq4`.
fn sweedler_coassociativity(h: &HomBialgebra, report: &mut CheckReport) {
    let (f, n) = (h.field(), h.dim());
    let d = |k: usize, i: usize, j: usize| h.comul.get(flatten(i, j, n), k);
    report.touch("eq5");
    for b in 0..n {
        let mut lhs = vec![f.zero(); n * n * n];
        let mut rhs = vec![f.zero(); n * n * n];
        for i in 0..n {
            for j in 0..n {
                let c = d(b, i, j);
                if c.is_zero() {
                    continue;
                }
                for x in 0..n {
                    for y in 0..n {
                        // b(1)(1) ⊗ b(1)(2) ⊗ ψ(b(2))
                        let l = c.mul(d(i, x, y));
                        if !l.is_zero() {
                            for z in 0..n {
                                lhs[(x * n + y) * n + z].add_product(&l, h.psi.get(z, j));
                            }
                        }
                        // ψ(b(1)) ⊗ b(2)(1) ⊗ b(2)(2)
                        let r = c.mul(d(j, x, y));
                        if !r.is_zero() {
                            for z in 0..n {
                                rhs[(z * n + x) * n + y].add_product(&r, h.psi.get(z, i));
                            }
                        }
                    }
                }
            }
        }
        if lhs != rhs {
            report.record("eq5", vec![b], lhs, rhs);
        }
    }
}

/// All hom-bialgebra axioms: the hom-algebra and hom-coalgebra parts,
/// `αψ = ψα`, multiplicativity of Δ, and compatibility of Δ with α and
/// of the multiplication with ψ.
pub fn check_hom_bialgebra(h: &HomBialgebra) -> Result<CheckReport, Error> {
    let (f, n) = (h.field(), h.dim());
    let mut report = CheckReport::new();
    algebra_axioms(h, &mut report)?;
    coalgebra_axioms(h, &mut report)?;
    sweedler_coassociativity(h, &mut report);

    let lhs = h.alpha.compose(&h.psi)?;
    let rhs = h.psi.compose(&h.alpha)?;
    report.compare("alpha_psi", &lhs, &rhs, &[n]);

    let lhs = h.comul.compose(&h.mul)?;
    let rhs = tensor_mul(f, &h.mul, &h.mul)?.compose(&h.comul.kron(&h.comul)?)?;
    report.compare("eq6", &lhs, &rhs, &[n, n]);

    let lhs = h.comul.compose(&h.alpha)?;
    let rhs = h.alpha.kron(&h.alpha)?.compose(&h.comul)?;
    report.compare("eq7", &lhs, &rhs, &[n]);

    let lhs = h.comul.compose(&h.psi)?;
    let rhs = h.psi.kron(&h.psi)?.compose(&h.comul)?;
    report.compare("eq7111", &lhs, &rhs, &[n]);

    let lhs = h.psi.compose(&h.mul)?;
    let rhs = h.mul.compose(&h.psi.kron(&h.psi)?)?;
    report.compare("eq7112", &lhs, &rhs, &[n, n]);
    Ok(report)
}

/// Multiplication of `A ⊗ B`: `(a ⊗ b)(a' ⊗ b') = aa' ⊗ bb'`.
fn tensor_mul(field: Field, mul_a: &LinMap, mul_b: &LinMap) -> Result<LinMap, Error> {
    let (da, db) = (mul_a.rows(), mul_b.rows());
    let shuffle = LinMap::kron_all(&[&id(field, da), &flip_map(field, db, da), &id(field, db)])?;
    mul_a.kron(mul_b)?.compose(&shuffle)
}

/// The tensor product hom-algebra `A ⊗ B` with twisting map `α_A ⊗ α_B`.
pub fn tensor_hom_algebra<A: AlgebraLike + ?Sized, B: AlgebraLike + ?Sized>(a: &A, b: &B) -> Result<HomAlgebra, Error> {
    check_field(a.field(), b.field())?;
    HomAlgebra::new(tensor_mul(a.field(), a.mul(), b.mul())?, a.alpha().kron(b.alpha())?)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MorphismKind {
    Algebra,
    Coalgebra,
}

/// `f : A -> B` with `α_B f = f α_A` and `f(aa') = f(a)f(a')`.
pub fn check_algebra_morphism<A: AlgebraLike + ?Sized, B: AlgebraLike + ?Sized>(
    f: &LinMap,
    src: &A,
    dst: &B,
) -> Result<CheckReport, Error> {
    check_field(f.field(), src.field())?;
    check_field(f.field(), dst.field())?;
    if f.rows() != dst.dim() || f.cols() != src.dim() {
        return Err(Error::dim("morphism does not match source and target"));
    }
    let n = src.dim();
    let mut report = CheckReport::new();
    report.compare(
        "morphism.alpha",
        &dst.alpha().compose(f)?,
        &f.compose(src.alpha())?,
        &[n],
    );
    report.compare(
        "morphism.mul",
        &f.compose(src.mul())?,
        &dst.mul().compose(&f.kron(f)?)?,
        &[n, n],
    );
    Ok(report)
}

/// `g : C -> D` with `ψ_D g = g ψ_C` and `(g ⊗ g)Δ_C = Δ_D g`.
pub fn check_coalgebra_morphism<C: CoalgebraLike + ?Sized, D: CoalgebraLike + ?Sized>(
    g: &LinMap,
    src: &C,
    dst: &D,
) -> Result<CheckReport, Error> {
    check_field(g.field(), src.field())?;
    check_field(g.field(), dst.field())?;
    if g.rows() != dst.dim() || g.cols() != src.dim() {
        return Err(Error::dim("morphism does not match source and target"));
    }
    let n = src.dim();
    let mut report = CheckReport::new();
    report.compare("morphism.psi", &dst.psi().compose(g)?, &g.compose(src.psi())?, &[n]);
    report.compare(
        "morphism.comul",
        &g.kron(g)?.compose(src.comul())?,
        &dst.comul().compose(g)?,
        &[n],
    );
    Ok(report)
}

/// Checks `f` as a morphism of the algebra or coalgebra parts.
pub fn check_structure_morphism(
    f: &LinMap,
    src: &HomBialgebra,
    dst: &HomBialgebra,
    kind: MorphismKind,
) -> Result<CheckReport, Error> {
    match kind {
        MorphismKind::Algebra => check_algebra_morphism(f, src, dst),
        MorphismKind::Coalgebra => check_coalgebra_morphism(f, src, dst),
    }
}

fn is_associative(mul: &LinMap) -> Result<bool, Error> {
    let n = mul.rows();
    let i = id(mul.field(), n);
    Ok(mul.compose(&mul.kron(&i)?)? == mul.compose(&i.kron(mul)?)?)
}

fn is_coassociative(comul: &LinMap) -> Result<bool, Error> {
    let n = comul.cols();
    let i = id(comul.field(), n);
    Ok(comul.kron(&i)?.compose(comul)? == i.kron(comul)?.compose(comul)?)
}

/// Twists an associative multiplication along an algebra endomorphism:
/// the result has multiplication `α ∘ μ` and twisting map `α`.
pub fn yau_twist_algebra(mul: &LinMap, alpha: &LinMap) -> Result<HomAlgebra, Error> {
    check_field(mul.field(), alpha.field())?;
    let n = alpha.rows();
    check_square(alpha, n, "alpha")?;
    check_mul_shape(mul, n)?;
    if !is_associative(mul)? {
        return Err(Error::NotAssociative);
    }
    if alpha.compose(mul)? != mul.compose(&alpha.kron(alpha)?)? {
        return Err(Error::NotEndomorphism);
    }
    HomAlgebra::new(alpha.compose(mul)?, alpha.clone())
}

/// Twists a bialgebra along a bialgebra endomorphism `α`: multiplication
/// `α ∘ μ`, comultiplication `Δ ∘ α`, and `α = ψ`.
pub fn yau_twist_bialgebra(mul: &LinMap, comul: &LinMap, alpha: &LinMap) -> Result<HomBialgebra, Error> {
    let f = alpha.field();
    check_field(f, mul.field())?;
    check_field(f, comul.field())?;
    let n = alpha.rows();
    check_square(alpha, n, "alpha")?;
    check_mul_shape(mul, n)?;
    check_comul_shape(comul, n)?;
    if !is_associative(mul)? {
        return Err(Error::NotAssociative);
    }
    if !is_coassociative(comul)? {
        return Err(Error::precondition("comultiplication is not coassociative", None));
    }
    if comul.compose(mul)? != tensor_mul(f, mul, mul)?.compose(&comul.kron(comul)?)? {
        return Err(Error::precondition("comultiplication is not multiplicative", None));
    }
    if alpha.compose(mul)? != mul.compose(&alpha.kron(alpha)?)? {
        return Err(Error::NotEndomorphism);
    }
    if comul.compose(alpha)? != alpha.kron(alpha)?.compose(comul)? {
        return Err(Error::precondition("alpha is not a coalgebra endomorphism", None));
    }
    HomBialgebra::new(alpha.compose(mul)?, comul.compose(alpha)?, alpha.clone(), alpha.clone())
}

/// A finite hom-semigroup given by a Cayley table and a self-map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomSemigroup {
    pub table: Vec<Vec<usize>>,
    pub alpha: Vec<usize>,
}

impl HomSemigroup {
    pub fn new(table: Vec<Vec<usize>>, alpha: Vec<usize>) -> HomSemigroup {
        HomSemigroup { table, alpha }
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    fn validate(&self) -> Result<(), Error> {
        let n = self.order();
        if self.alpha.len() != n {
            return Err(Error::dim("alpha table length differs from the order"));
        }
        for row in &self.table {
            if row.len() != n {
                return Err(Error::dim("Cayley table is not square"));
            }
        }
        for &x in self.table.iter().flatten().chain(&self.alpha) {
            if x >= n {
                return Err(Error::IndexOutOfRange { index: x, bound: n });
            }
        }
        Ok(())
    }
}

fn one_hot(n: usize, i: usize) -> Vec<FieldElem> {
    let q = Field::Rational;
    (0..n).map(|k| if k == i { q.one() } else { q.zero() }).collect()
}

/// Hom-associativity `α(x)(yz) = (xy)α(z)` and multiplicativity of α.
/// Elements are reported as basis vectors of the semigroup algebra.
pub fn check_hom_semigroup(s: &HomSemigroup) -> Result<CheckReport, Error> {
    s.validate()?;
    let n = s.order();
    let (t, a) = (&s.table, &s.alpha);
    let mut report = CheckReport::new();
    report.touch("hom_semigroup");
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let lhs = t[a[x]][t[y][z]];
                let rhs = t[t[x][y]][a[z]];
                if lhs != rhs {
                    report.record("hom_semigroup", vec![x, y, z], one_hot(n, lhs), one_hot(n, rhs));
                }
            }
        }
    }
    report.touch("multiplicative");
    for x in 0..n {
        for y in 0..n {
            let lhs = a[t[x][y]];
            let rhs = t[a[x]][a[y]];
            if lhs != rhs {
                report.record("multiplicative", vec![x, y], one_hot(n, lhs), one_hot(n, rhs));
            }
        }
    }
    Ok(report)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Nondegeneracy {
    Nondegenerate,
    Unknown,
}

fn full_column_rank(m: &LinMap) -> Nondegeneracy {
    if m.rank() == m.cols() {
        Nondegeneracy::Nondegenerate
    } else {
        Nondegeneracy::Unknown
    }
}

/// Sufficient test for nondegeneracy: `h ↦ (a ↦ h a)` is injective.
/// Failure of the test proves nothing, hence `Unknown`.
pub fn nondegenerate_via_regular<A: AlgebraLike + ?Sized>(a: &A) -> Nondegeneracy {
    full_column_rank(&left_multiplications(a.mul(), None))
}

/// Sufficient test for strong nondegeneracy: `h ↦ (a ↦ h α(a))` is injective.
pub fn strongly_nondegenerate_via_regular<A: AlgebraLike + ?Sized>(a: &A) -> Nondegeneracy {
    full_column_rank(&left_multiplications(a.mul(), Some(a.alpha())))
}

/// Column `h` lists the entries of the operator `a ↦ h·twist(a)`.
fn left_multiplications(mul: &LinMap, twist: Option<&LinMap>) -> LinMap {
    let f = mul.field();
    let n = mul.rows();
    LinMap::from_fn(f, n * n, n, |row, h| {
        let (a, k) = (row / n, row % n);
        match twist {
            None => mul.get(k, flatten(h, a, n)).clone(),
            Some(t) => {
                let mut s = f.zero();
                for b in 0..n {
                    s.add_product(t.get(b, a), mul.get(k, flatten(h, b, n)));
                }
                s
            }
        }
    })
}
