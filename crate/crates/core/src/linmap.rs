//! Dense exact matrices and the tensor-product conventions used throughout.
//!
//! A basis vector `e_i ⊗ e_j` of `U ⊗ V` has flat index `i * dim V + j`.
//! Longer tensors flatten left to right, so `(U ⊗ V) ⊗ W` and
//! `U ⊗ (V ⊗ W)` share one flat basis and associators are identities.

use std::fmt;

use crate::error::Error;
use crate::field::{Field, FieldElem};

/// Flat index of `e_i ⊗ e_j` when the right factor has dimension `dim_j`.
pub fn flatten(i: usize, j: usize, dim_j: usize) -> usize {
    i * dim_j + j
}

/// Inverse of left-to-right flattening over the given factor dimensions.
pub fn unflatten(mut idx: usize, dims: &[usize]) -> Vec<usize> {
    let mut out = vec![0; dims.len()];
    for (slot, d) in out.iter_mut().zip(dims).rev() {
        *slot = idx % d;
        idx /= d;
    }
    out
}

/// A linear map `F^cols -> F^rows`, stored row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinMap {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<FieldElem>,
}

impl fmt::Debug for LinMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "LinMap {}x{} over {}", self.rows, self.cols, self.field)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl LinMap {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> LinMap {
        LinMap {
            field,
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> LinMap {
        let mut m = LinMap::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = field.one();
        }
        m
    }

    pub fn diagonal(field: Field, diag: &[FieldElem]) -> Result<LinMap, Error> {
        let n = diag.len();
        let mut m = LinMap::zeros(field, n, n);
        for (i, d) in diag.iter().enumerate() {
            check_field(field, d.field())?;
            m.data[i * n + i] = d.clone();
        }
        Ok(m)
    }

    pub fn from_fn(field: Field, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> FieldElem) -> LinMap {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                let x = f(r, c);
                assert_eq!(x.field(), field, "entry in the wrong field");
                data.push(x);
            }
        }
        LinMap {
            field,
            rows,
            cols,
            data,
        }
    }

    /// Builds a map from row vectors; all rows must share one length.
    pub fn from_rows(field: Field, rows: Vec<Vec<FieldElem>>) -> Result<LinMap, Error> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            if row.len() != c {
                return Err(Error::dim("ragged rows"));
            }
            for x in row {
                check_field(field, x.field())?;
                data.push(x);
            }
        }
        Ok(LinMap {
            field,
            rows: r,
            cols: c,
            data,
        })
    }

    /// Column vector with the given entries.
    pub fn column_vector(field: Field, v: &[FieldElem]) -> Result<LinMap, Error> {
        let mut m = LinMap::zeros(field, v.len(), 1);
        for (i, x) in v.iter().enumerate() {
            check_field(field, x.field())?;
            m.data[i] = x.clone();
        }
        Ok(m)
    }

    /// Builds a map from small integer entries. Convenient for fixtures.
    pub fn from_ints(field: Field, rows: &[&[i64]]) -> LinMap {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        LinMap::from_fn(field, r, c, |i, j| field.from_i64(rows[i][j]))
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &FieldElem {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, x: FieldElem) {
        assert_eq!(x.field(), self.field, "entry in the wrong field");
        self.data[r * self.cols + c] = x;
    }

    pub(crate) fn add_at(&mut self, r: usize, c: usize, a: &FieldElem, b: &FieldElem) {
        self.data[r * self.cols + c].add_product(a, b);
    }

    pub fn row(&self, r: usize) -> &[FieldElem] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<FieldElem> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn entries(&self) -> &[FieldElem] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(FieldElem::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|r| {
                (0..self.cols).all(|c| {
                    let x = self.get(r, c);
                    if r == c {
                        x.is_one()
                    } else {
                        x.is_zero()
                    }
                })
            })
    }

    /// `self ∘ f`: apply `f` first.
    pub fn compose(&self, f: &LinMap) -> Result<LinMap, Error> {
        check_field(self.field, f.field)?;
        if self.cols != f.rows {
            return Err(Error::dim(format!(
                "cannot compose {}x{} after {}x{}",
                self.rows, self.cols, f.rows, f.cols
            )));
        }
        let mut out = LinMap::zeros(self.field, self.rows, f.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.get(i, l);
                if a.is_zero() {
                    continue;
                }
                for j in 0..f.cols {
                    let b = f.get(l, j);
                    if !b.is_zero() {
                        out.data[i * f.cols + j].add_product(a, b);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Composes a chain applied right to left: `chain(&[h, g, f]) = h ∘ g ∘ f`.
    pub fn chain(maps: &[&LinMap]) -> Result<LinMap, Error> {
        let (last, rest) = maps.split_last().ok_or_else(|| Error::dim("empty chain"))?;
        let mut acc = (*last).clone();
        for m in rest.iter().rev() {
            acc = m.compose(&acc)?;
        }
        Ok(acc)
    }

    /// Kronecker product `self ⊗ g` in the left-to-right flat basis.
    pub fn kron(&self, g: &LinMap) -> Result<LinMap, Error> {
        check_field(self.field, g.field)?;
        let rows = self.rows * g.rows;
        let cols = self.cols * g.cols;
        let mut out = LinMap::zeros(self.field, rows, cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..g.rows {
                    for l in 0..g.cols {
                        let b = g.get(k, l);
                        if !b.is_zero() {
                            out.data[(i * g.rows + k) * cols + j * g.cols + l] = a.mul(b);
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    /// Left-to-right Kronecker product of several factors.
    pub fn kron_all(maps: &[&LinMap]) -> Result<LinMap, Error> {
        let (first, rest) = maps.split_first().ok_or_else(|| Error::dim("empty product"))?;
        let mut acc = (*first).clone();
        for m in rest {
            acc = acc.kron(m)?;
        }
        Ok(acc)
    }

    pub fn apply(&self, v: &[FieldElem]) -> Result<Vec<FieldElem>, Error> {
        if v.len() != self.cols {
            return Err(Error::dim(format!(
                "vector of length {} for a map with {} columns",
                v.len(),
                self.cols
            )));
        }
        let mut out = vec![self.field.zero(); self.rows];
        for (r, slot) in out.iter_mut().enumerate() {
            for (c, x) in v.iter().enumerate() {
                check_field(self.field, x.field())?;
                slot.add_product(self.get(r, c), x);
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &LinMap) -> Result<LinMap, Error> {
        self.zip_with(other, FieldElem::add)
    }

    pub fn sub(&self, other: &LinMap) -> Result<LinMap, Error> {
        self.zip_with(other, FieldElem::sub)
    }

    fn zip_with(&self, other: &LinMap, op: impl Fn(&FieldElem, &FieldElem) -> FieldElem) -> Result<LinMap, Error> {
        check_field(self.field, other.field)?;
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::dim(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let data = self.data.iter().zip(&other.data).map(|(a, b)| op(a, b)).collect();
        Ok(self.with_data(data))
    }

    fn with_data(&self, data: Vec<FieldElem>) -> LinMap {
        LinMap {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn scale(&self, s: &FieldElem) -> Result<LinMap, Error> {
        check_field(self.field, s.field())?;
        let data = self.data.iter().map(|x| x.mul(s)).collect();
        Ok(self.with_data(data))
    }

    pub fn transpose(&self) -> LinMap {
        LinMap::from_fn(self.field, self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    /// Reduced row echelon form together with the pivot columns.
    fn echelon(&self) -> (LinMap, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(row, p);
            let inv = m.get(row, col).inv().expect("pivot is nonzero");
            for c in 0..m.cols {
                let x = m.get(row, c).mul(&inv);
                m.data[row * m.cols + c] = x;
            }
            for r in 0..m.rows {
                if r == row {
                    continue;
                }
                let factor = m.get(r, col).clone();
                if factor.is_zero() {
                    continue;
                }
                for c in 0..m.cols {
                    let x = m.get(r, c).sub(&factor.mul(m.get(row, c)));
                    m.data[r * m.cols + c] = x;
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn rank(&self) -> usize {
        self.echelon().1.len()
    }

    /// Exact inverse by Gauss-Jordan elimination.
    pub fn inverse(&self) -> Result<LinMap, Error> {
        if !self.is_square() {
            return Err(Error::Singular(format!("{}x{} map", self.rows, self.cols)));
        }
        let n = self.rows;
        let augmented = LinMap::from_fn(self.field, n, 2 * n, |r, c| {
            if c < n {
                self.get(r, c).clone()
            } else if c - n == r {
                self.field.one()
            } else {
                self.field.zero()
            }
        });
        let (red, pivots) = augmented.echelon();
        if pivots.len() < n || pivots[n - 1] >= n {
            return Err(Error::Singular(format!("{n}x{n} map")));
        }
        Ok(LinMap::from_fn(self.field, n, n, |r, c| red.get(r, n + c).clone()))
    }

    /// `self^k` for a square map.
    pub fn power(&self, k: usize) -> Result<LinMap, Error> {
        if !self.is_square() {
            return Err(Error::dim("power of a non-square map"));
        }
        let mut acc = LinMap::identity(self.field, self.rows);
        for _ in 0..k {
            acc = self.compose(&acc)?;
        }
        Ok(acc)
    }
}

pub(crate) fn check_field(a: Field, b: Field) -> Result<(), Error> {
    if a == b {
        Ok(())
    } else {
        Err(Error::FieldMismatch(a, b))
    }
}

/// The swap `U ⊗ V -> V ⊗ U`, sending `flatten(i, j, dv)` to `flatten(j, i, du)`.
pub fn flip_map(field: Field, du: usize, dv: usize) -> LinMap {
    let mut m = LinMap::zeros(field, du * dv, du * dv);
    for i in 0..du {
        for j in 0..dv {
            m.set(flatten(j, i, du), flatten(i, j, dv), field.one());
        }
    }
    m
}
