//! Brute-force oracles evaluated from structure constants with explicit
//! index loops, plus random-input helpers.
#![allow(dead_code)]

use homcat_core::{Field, FieldElem, LinMap};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub type Vector = Vec<FieldElem>;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_matrix(rng: &mut ChaCha8Rng, field: Field, rows: usize, cols: usize, span: i64) -> LinMap {
    LinMap::from_fn(field, rows, cols, |_, _| field.from_i64(rng.gen_range(-span..=span)))
}

pub fn random_invertible(rng: &mut ChaCha8Rng, field: Field, n: usize) -> LinMap {
    loop {
        let m = random_matrix(rng, field, n, n, 3);
        if m.rank() == n {
            return m;
        }
    }
}

pub fn zeros(field: Field, n: usize) -> Vector {
    vec![field.zero(); n]
}

pub fn basis(field: Field, n: usize, i: usize) -> Vector {
    let mut v = zeros(field, n);
    v[i] = field.one();
    v
}

/// `m v` by the row-times-column definition.
pub fn apply(m: &LinMap, v: &[FieldElem]) -> Vector {
    (0..m.rows())
        .map(|r| {
            let mut acc = m.field().zero();
            for (c, x) in v.iter().enumerate() {
                acc = acc.add(&m.get(r, c).mul(x));
            }
            acc
        })
        .collect()
}

/// Matrix product by the triple loop.
pub fn naive_compose(g: &LinMap, f: &LinMap) -> LinMap {
    LinMap::from_fn(g.field(), g.rows(), f.cols(), |r, c| {
        let mut acc = g.field().zero();
        for k in 0..g.cols() {
            acc = acc.add(&g.get(r, k).mul(f.get(k, c)));
        }
        acc
    })
}

/// `(f ⊗ g)[i·p + k, j·q + l] = f[i, j] g[k, l]`.
pub fn naive_kron(f: &LinMap, g: &LinMap) -> LinMap {
    let (p, q) = (g.rows(), g.cols());
    LinMap::from_fn(f.field(), f.rows() * p, f.cols() * q, |r, c| {
        f.get(r / p, c / q).mul(g.get(r % p, c % q))
    })
}

/// Structure constants `m[i][j][k]`, read from a multiplication map.
pub fn mul_entry(mul: &LinMap, i: usize, j: usize, k: usize) -> FieldElem {
    let n = mul.rows();
    mul.get(k, i * n + j).clone()
}

/// `x y` in an algebra given by a multiplication map.
pub fn product(mul: &LinMap, x: &[FieldElem], y: &[FieldElem]) -> Vector {
    let n = mul.rows();
    let f = mul.field();
    let mut out = zeros(f, n);
    for (i, xi) in x.iter().enumerate().take(n) {
        if xi.is_zero() {
            continue;
        }
        for (j, yj) in y.iter().enumerate().take(n) {
            if yj.is_zero() {
                continue;
            }
            let c = xi.mul(yj);
            for (k, o) in out.iter_mut().enumerate() {
                *o = o.add(&c.mul(&mul_entry(mul, i, j, k)));
            }
        }
    }
    out
}

/// `h · m` for an action stored as a `d x (n · d)` map.
pub fn act(action: &LinMap, h: &[FieldElem], m: &[FieldElem]) -> Vector {
    let d = action.rows();
    let f = action.field();
    let mut out = zeros(f, d);
    for (a, ha) in h.iter().enumerate() {
        if ha.is_zero() {
            continue;
        }
        for (b, mb) in m.iter().enumerate() {
            if mb.is_zero() {
                continue;
            }
            let c = ha.mul(mb);
            for (k, o) in out.iter_mut().enumerate() {
                *o = o.add(&c.mul(action.get(k, a * d + b)));
            }
        }
    }
    out
}

/// Tensor of two vectors in the flat basis.
pub fn tensor(x: &[FieldElem], y: &[FieldElem]) -> Vector {
    let mut out = Vec::with_capacity(x.len() * y.len());
    for a in x {
        for b in y {
            out.push(a.mul(b));
        }
    }
    out
}

pub fn add_into(acc: &mut [FieldElem], v: &[FieldElem], scale: &FieldElem) {
    for (a, x) in acc.iter_mut().zip(v) {
        *a = a.add(&scale.mul(x));
    }
}

/// Coefficient of `e_a ⊗ e_b` in `Δ(e_h)`.
pub fn comul_entry(comul: &LinMap, h: usize, a: usize, b: usize) -> FieldElem {
    let n = comul.cols();
    comul.get(a * n + b, h).clone()
}

/// `h · (m ⊗ n) = Σ (h(1) · m) ⊗ (h(2) · n)` on basis elements.
pub fn tensor_action_on_basis(comul: &LinMap, act_m: &LinMap, act_n: &LinMap, h: usize, m: usize, n: usize) -> Vector {
    let f = comul.field();
    let hd = comul.cols();
    let (dm, dn) = (act_m.rows(), act_n.rows());
    let mut out = zeros(f, dm * dn);
    for a in 0..hd {
        for b in 0..hd {
            let c = comul_entry(comul, h, a, b);
            if c.is_zero() {
                continue;
            }
            let left = act(act_m, &basis(f, hd, a), &basis(f, dm, m));
            let right = act(act_n, &basis(f, hd, b), &basis(f, dn, n));
            add_into(&mut out, &tensor(&left, &right), &c);
        }
    }
    out
}

/// `c(e_u ⊗ e_v) = Σ R[a, b] (α e_b · e_v) ⊗ (α e_a · e_u)`.
pub fn braiding_on_basis(
    r: &[FieldElem],
    alpha: &LinMap,
    act_u: &LinMap,
    act_v: &LinMap,
    u: usize,
    v: usize,
) -> Vector {
    let f = alpha.field();
    let n = alpha.rows();
    let (du, dv) = (act_u.rows(), act_v.rows());
    let mut out = zeros(f, dv * du);
    for a in 0..n {
        for b in 0..n {
            let c = &r[a * n + b];
            if c.is_zero() {
                continue;
            }
            let left = act(act_v, &alpha.column(b), &basis(f, dv, v));
            let right = act(act_u, &alpha.column(a), &basis(f, du, u));
            add_into(&mut out, &tensor(&left, &right), c);
        }
    }
    out
}

/// `(X ⊗ Y ⊗ Z) v` where exactly the pair `(X, Y)` or `(Y, Z)` is a single
/// map on two factors: `two_first` selects `(B ⊗ α)` over `(α ⊗ B)`.
fn apply_pair(b: &LinMap, alpha: &LinMap, v: &[FieldElem], two_first: bool) -> Vector {
    let d = alpha.rows();
    let f = alpha.field();
    let mut out = zeros(f, d * d * d);
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                let x = &v[(i * d + j) * d + k];
                if x.is_zero() {
                    continue;
                }
                for p in 0..d {
                    for q in 0..d {
                        for s in 0..d {
                            let coeff = if two_first {
                                b.get(p * d + q, i * d + j).mul(alpha.get(s, k))
                            } else {
                                alpha.get(p, i).mul(b.get(q * d + s, j * d + k))
                            };
                            if coeff.is_zero() {
                                continue;
                            }
                            let o = &mut out[(p * d + q) * d + s];
                            *o = o.add(&coeff.mul(x));
                        }
                    }
                }
            }
        }
    }
    out
}

/// Whether `(B ⊗ α)(α ⊗ B)(B ⊗ α) = (α ⊗ B)(B ⊗ α)(α ⊗ B)` on every basis
/// triple and `(α ⊗ α)B = B(α ⊗ α)` on every basis pair.
pub fn naive_hom_ybe(b: &LinMap, alpha: &LinMap) -> (bool, bool) {
    let d = alpha.rows();
    let f = alpha.field();
    let aa = naive_kron(alpha, alpha);
    let compat = naive_compose(&aa, b) == naive_compose(b, &aa);
    let mut ybe = true;
    for t in 0..d * d * d {
        let e = basis(f, d * d * d, t);
        let lhs = apply_pair(
            b,
            alpha,
            &apply_pair(b, alpha, &apply_pair(b, alpha, &e, true), false),
            true,
        );
        let rhs = apply_pair(
            b,
            alpha,
            &apply_pair(b, alpha, &apply_pair(b, alpha, &e, false), true),
            false,
        );
        if lhs != rhs {
            ybe = false;
            break;
        }
    }
    (compat, ybe)
}

/// Whether `α(a)(bc) = (ab)α(c)` on every basis triple.
pub fn naive_hom_associative(mul: &LinMap, alpha: &LinMap) -> bool {
    let n = mul.rows();
    let f = mul.field();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let (a, b, c) = (basis(f, n, i), basis(f, n, j), basis(f, n, k));
                let lhs = product(mul, &apply(alpha, &a), &product(mul, &b, &c));
                let rhs = product(mul, &product(mul, &a, &b), &apply(alpha, &c));
                if lhs != rhs {
                    return false;
                }
            }
        }
    }
    true
}

/// Whether `α(ab) = α(a)α(b)` on every basis pair.
pub fn naive_multiplicative(mul: &LinMap, alpha: &LinMap) -> bool {
    let n = mul.rows();
    let f = mul.field();
    (0..n).all(|i| {
        (0..n).all(|j| {
            let (a, b) = (basis(f, n, i), basis(f, n, j));
            apply(alpha, &product(mul, &a, &b)) == product(mul, &apply(alpha, &a), &apply(alpha, &b))
        })
    })
}

/// The two sides of the hom-Yetter-Drinfeld identity on `e_h ⊗ e_m`:
/// `Σ (h(1)·m)(-1) α²(h(2)) ⊗ (h(1)·m)(0)` and
/// `Σ α²(h(1)) α(m(-1)) ⊗ α(h(2))·m(0)`.
pub fn naive_hom_yd_sides(
    mul: &LinMap,
    comul: &LinMap,
    alpha: &LinMap,
    action: &LinMap,
    coaction: &LinMap,
    h: usize,
    m: usize,
) -> (Vector, Vector) {
    let f = mul.field();
    let n = mul.rows();
    let d = action.rows();
    let alpha2 = naive_compose(alpha, alpha);
    let coact = |x: usize| -> Vec<(usize, usize, FieldElem)> {
        let mut terms = Vec::new();
        for y in 0..n {
            for z in 0..d {
                let c = coaction.get(y * d + z, x);
                if !c.is_zero() {
                    terms.push((y, z, c.clone()));
                }
            }
        }
        terms
    };
    let mut lhs = zeros(f, n * d);
    let mut rhs = zeros(f, n * d);
    for a in 0..n {
        for b in 0..n {
            let c = comul_entry(comul, h, a, b);
            if c.is_zero() {
                continue;
            }
            let hm = act(action, &basis(f, n, a), &basis(f, d, m));
            for (x, cx) in hm.iter().enumerate() {
                if cx.is_zero() {
                    continue;
                }
                for (y, z, cy) in coact(x) {
                    let left = product(mul, &basis(f, n, y), &alpha2.column(b));
                    add_into(&mut lhs, &tensor(&left, &basis(f, d, z)), &c.mul(cx).mul(&cy));
                }
            }
            for (y, z, cy) in coact(m) {
                let left = product(mul, &alpha2.column(a), &alpha.column(y));
                let right = act(action, &alpha.column(b), &basis(f, d, z));
                add_into(&mut rhs, &tensor(&left, &right), &c.mul(&cy));
            }
        }
    }
    (lhs, rhs)
}
