//! Dense linear algebra over GF(q) and the three inner products.

use alloc::{vec, vec::Vec};

use crate::error::{Error, Result};
use crate::gf::{Elem, Field};

/// Inner product on GF(q)^N.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum InnerProduct {
    /// `sum x_i y_i`
    Euclidean,
    /// `sum x_i y_i^q0` over GF(q0^2)
    Hermitian,
    /// `sum_{i<N/2} x_i y_{N/2+i} - x_{N/2+i} y_i`, i.e. `x Omega y^T` with
    /// `Omega = [[0, I], [-I, 0]]`
    Symplectic,
}

impl InnerProduct {
    pub const ALL: [InnerProduct; 3] =
        [InnerProduct::Euclidean, InnerProduct::Hermitian, InnerProduct::Symplectic];

    pub fn name(self) -> &'static str {
        match self {
            InnerProduct::Euclidean => "euclidean",
            InnerProduct::Hermitian => "hermitian",
            InnerProduct::Symplectic => "symplectic",
        }
    }

    /// Checks that vectors of `len` coordinates over `f` support this form.
    pub fn check(self, len: usize, f: &Field) -> Result<()> {
        match self {
            InnerProduct::Euclidean => Ok(()),
            InnerProduct::Hermitian => f
                .hermitian_base()
                .map(|_| ())
                .ok_or(Error::NotSquareOrder(f.order())),
            InnerProduct::Symplectic if !len.is_multiple_of(2) => Err(Error::OddLength(len)),
            InnerProduct::Symplectic => Ok(()),
        }
    }
}

impl core::str::FromStr for InnerProduct {
    type Err = alloc::string::String;

    fn from_str(s: &str) -> core::result::Result<Self, Self::Err> {
        match s {
            "euclidean" => Ok(InnerProduct::Euclidean),
            "hermitian" => Ok(InnerProduct::Hermitian),
            "symplectic" => Ok(InnerProduct::Symplectic),
            other => Err(alloc::format!("unknown inner product {other:?}")),
        }
    }
}

pub fn inner_product(x: &[Elem], y: &[Elem], kind: InnerProduct, f: &Field) -> Result<Elem> {
    if x.len() != y.len() {
        return Err(Error::LengthMismatch(x.len(), y.len()));
    }
    kind.check(x.len(), f)?;
    let dot = |a: &[Elem], b: &[Elem]| {
        a.iter().zip(b).fold(Elem::ZERO, |acc, (&u, &v)| f.add(acc, f.mul(u, v)))
    };
    Ok(match kind {
        InnerProduct::Euclidean => dot(x, y),
        InnerProduct::Hermitian => x.iter().zip(y).fold(Elem::ZERO, |acc, (&u, &v)| {
            f.add(acc, f.mul(u, f.conj(v).expect("checked square order")))
        }),
        InnerProduct::Symplectic => {
            let half = x.len() / 2;
            let (x0, x1) = x.split_at(half);
            let (y0, y1) = y.split_at(half);
            f.sub(dot(x0, y1), dot(x1, y0))
        }
    })
}

/// Row-major dense matrix. Entries are only meaningful with the field
/// passed to each operation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Elem>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Matrix {
        Matrix { rows, cols, data: vec![Elem::ZERO; rows * cols] }
    }

    pub fn identity(n: usize) -> Matrix {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Elem::ONE);
        }
        m
    }

    /// Builds a matrix from rows of equal length `cols`.
    pub fn from_rows(rows: &[Vec<Elem>], cols: usize) -> Result<Matrix> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::LengthMismatch(r.len(), cols));
            }
            data.extend_from_slice(r);
        }
        Ok(Matrix { rows: rows.len(), cols, data })
    }

    #[inline]
    pub fn nrows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn ncols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> Elem {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: Elem) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Elem] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_mut(&mut self, r: usize) -> &mut [Elem] {
        &mut self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Elem]> {
        (0..self.rows).map(move |r| self.row(r))
    }

    pub fn push_row(&mut self, row: &[Elem]) -> Result<()> {
        if row.len() != self.cols {
            return Err(Error::LengthMismatch(row.len(), self.cols));
        }
        self.data.extend_from_slice(row);
        self.rows += 1;
        Ok(())
    }

    /// `self` on top of `other`.
    pub fn stack(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.cols {
            return Err(Error::LengthMismatch(self.cols, other.cols));
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(Matrix { rows: self.rows + other.rows, cols: self.cols, data })
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix, f: &Field) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::LengthMismatch(self.cols, other.rows));
        }
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = f.add(out.get(i, j), f.mul(a, other.get(k, j)));
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    /// Entry-wise map, e.g. Frobenius conjugation.
    pub fn map(&self, op: impl Fn(Elem) -> Elem) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|&x| op(x)).collect() }
    }

    /// Keeps the listed columns in the given order.
    pub fn select_columns(&self, cols: &[usize]) -> Matrix {
        let mut out = Matrix::zeros(self.rows, cols.len());
        for r in 0..self.rows {
            for (j, &c) in cols.iter().enumerate() {
                out.set(r, j, self.get(r, c));
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }
}

/// Result of row reduction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Echelon {
    /// Reduced row echelon form, same shape as the input.
    pub matrix: Matrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

impl Echelon {
    /// The nonzero rows: a basis of the row space.
    pub fn basis(&self) -> Matrix {
        let cols = self.matrix.cols;
        Matrix {
            rows: self.rank,
            cols,
            data: self.matrix.data[..self.rank * cols].to_vec(),
        }
    }
}

/// Reduced row echelon form. Columns are scanned left to right and the
/// first row with a nonzero entry becomes the pivot row.
pub fn rref(m: &Matrix, f: &Field) -> Echelon {
    rref_on(m, f, |_| true)
}

/// Row reduction that only places pivots in columns accepted by `allow`;
/// other columns are carried along.
pub fn rref_on(m: &Matrix, f: &Field, allow: impl Fn(usize) -> bool) -> Echelon {
    let order: Vec<usize> = (0..m.cols).filter(|&c| allow(c)).collect();
    rref_ordered(m, f, &order)
}

/// Row reduction scanning pivot columns in the given order. `pivots`
/// lists the chosen columns in the order their rows appear.
pub fn rref_ordered(m: &Matrix, f: &Field, order: &[usize]) -> Echelon {
    let mut a = m.clone();
    let mut pivots = Vec::new();
    let mut rank = 0;
    for &col in order {
        if rank == a.rows {
            break;
        }
        let Some(piv) = (rank..a.rows).find(|&r| !a.get(r, col).is_zero()) else {
            continue;
        };
        a.swap_rows(rank, piv);
        let inv = f.inv(a.get(rank, col)).expect("pivot is nonzero");
        for c in 0..a.cols {
            let v = f.mul(a.get(rank, c), inv);
            a.set(rank, c, v);
        }
        for r in 0..a.rows {
            if r == rank {
                continue;
            }
            let factor = a.get(r, col);
            if factor.is_zero() {
                continue;
            }
            for c in 0..a.cols {
                let v = f.sub(a.get(r, c), f.mul(factor, a.get(rank, c)));
                a.set(r, c, v);
            }
        }
        pivots.push(col);
        rank += 1;
    }
    Echelon { matrix: a, rank, pivots }
}

pub fn rank(m: &Matrix, f: &Field) -> usize {
    rref(m, f).rank
}

/// Basis of the right null space `{v : m v^T = 0}`, one vector per row.
pub fn kernel_basis(m: &Matrix, f: &Field) -> Matrix {
    let e = rref(m, f);
    let free: Vec<usize> = (0..m.cols).filter(|c| !e.pivots.contains(c)).collect();
    let mut out = Matrix::zeros(free.len(), m.cols);
    for (i, &fc) in free.iter().enumerate() {
        out.set(i, fc, Elem::ONE);
        for (r, &pc) in e.pivots.iter().enumerate() {
            out.set(i, pc, f.neg(e.matrix.get(r, fc)));
        }
    }
    out
}

/// `dim(rowspace(a) ∩ rowspace(b)) = rank a + rank b - rank [a; b]`.
pub fn rowspace_intersection_dim(a: &Matrix, b: &Matrix, f: &Field) -> Result<usize> {
    let stacked = a.stack(b)?;
    Ok(rank(a, f) + rank(b, f) - rank(&stacked, f))
}

/// Matrix of pairwise inner products of the rows.
pub fn gram_matrix(g: &Matrix, kind: InnerProduct, f: &Field) -> Result<Matrix> {
    kind.check(g.cols, f)?;
    let mut out = Matrix::zeros(g.rows, g.rows);
    for i in 0..g.rows {
        for j in 0..g.rows {
            out.set(i, j, inner_product(g.row(i), g.row(j), kind, f)?);
        }
    }
    Ok(out)
}

/// Matrix `A` such that `<x, y>_kind = 0` for all rows `x` of `g` exactly
/// when `A y^T = 0` (Euclidean, symplectic) or `A conj(y)^T = 0` (Hermitian).
pub(crate) fn form_matrix(g: &Matrix, kind: InnerProduct, f: &Field) -> Result<Matrix> {
    kind.check(g.cols, f)?;
    Ok(match kind {
        InnerProduct::Euclidean | InnerProduct::Hermitian => g.clone(),
        InnerProduct::Symplectic => {
            // rows of g * Omega = (-x1, x0)
            let half = g.cols / 2;
            let mut out = Matrix::zeros(g.rows, g.cols);
            for r in 0..g.rows {
                for c in 0..half {
                    out.set(r, c, f.neg(g.get(r, half + c)));
                    out.set(r, half + c, g.get(r, c));
                }
            }
            out
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(f: &Field, rows: &[&[u64]]) -> Matrix {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows: Vec<Vec<Elem>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| f.elem(x).unwrap()).collect())
            .collect();
        Matrix::from_rows(&rows, cols).unwrap()
    }

    fn v(f: &Field, xs: &[u64]) -> Vec<Elem> {
        xs.iter().map(|&x| f.elem(x).unwrap()).collect()
    }

    #[test]
    fn inner_product_examples() {
        let gf2 = Field::new(2).unwrap();
        let gf4 = Field::new(4).unwrap();
        let e = InnerProduct::Euclidean;
        assert_eq!(inner_product(&v(&gf2, &[1, 0]), &v(&gf2, &[0, 1]), e, &gf2).unwrap(), Elem::ZERO);
        let s = InnerProduct::Symplectic;
        assert_eq!(inner_product(&v(&gf2, &[1, 0]), &v(&gf2, &[0, 1]), s, &gf2).unwrap(), Elem::ONE);
        let h = InnerProduct::Hermitian;
        assert_eq!(inner_product(&v(&gf4, &[2]), &v(&gf4, &[2]), h, &gf4).unwrap(), Elem::ONE);
        assert_eq!(
            inner_product(&v(&gf2, &[1]), &v(&gf2, &[1, 0]), e, &gf2),
            Err(Error::LengthMismatch(1, 2))
        );
        assert_eq!(inner_product(&v(&gf2, &[1]), &v(&gf2, &[1]), s, &gf2), Err(Error::OddLength(1)));
        assert_eq!(inner_product(&v(&gf2, &[1]), &v(&gf2, &[1]), h, &gf2), Err(Error::NotSquareOrder(2)));
    }

    #[test]
    fn rref_examples() {
        let gf2 = Field::new(2).unwrap();
        let id = Matrix::identity(3);
        let e = rref(&id, &gf2);
        assert_eq!((e.matrix.clone(), e.rank), (id, 3));
        let z = Matrix::zeros(2, 3);
        assert_eq!(rref(&z, &gf2).rank, 0);
        assert_eq!(rref(&z, &gf2).matrix, z);
        let a = m(&gf2, &[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]]);
        let e = rref(&a, &gf2);
        assert_eq!(e.rank, 2);
        assert_eq!(e.pivots, vec![0, 1]);
        // exhaustive span size check: 2^rank distinct combinations
        let mut span = alloc::collections::BTreeSet::new();
        for mask in 0..8u32 {
            let mut acc = vec![Elem::ZERO; 3];
            for r in 0..3 {
                if mask >> r & 1 == 1 {
                    for c in 0..3 {
                        acc[c] = gf2.add(acc[c], a.get(r, c));
                    }
                }
            }
            span.insert(acc);
        }
        assert_eq!(span.len(), 4);
    }

    #[test]
    fn kernel_examples() {
        let gf2 = Field::new(2).unwrap();
        assert_eq!(kernel_basis(&Matrix::identity(4), &gf2).nrows(), 0);
        let k = kernel_basis(&m(&gf2, &[&[1, 1]]), &gf2);
        assert_eq!(k, m(&gf2, &[&[1, 1]]));
        let gf3 = Field::new(3).unwrap();
        let a = m(&gf3, &[&[1, 2, 0, 1], &[0, 1, 1, 2]]);
        let k = kernel_basis(&a, &gf3);
        assert_eq!(k.nrows(), 2);
        assert!(a.mul(&k.transpose(), &gf3).unwrap().is_zero());
        assert_eq!(rank(&k, &gf3), 2);
    }

    #[test]
    fn intersection_examples() {
        let gf2 = Field::new(2).unwrap();
        let id = Matrix::identity(2);
        assert_eq!(rowspace_intersection_dim(&id, &id, &gf2).unwrap(), 2);
        let a = m(&gf2, &[&[1, 0]]);
        let b = m(&gf2, &[&[0, 1]]);
        assert_eq!(rowspace_intersection_dim(&a, &b, &gf2).unwrap(), 0);
        assert!(rowspace_intersection_dim(&a, &Matrix::identity(3), &gf2).is_err());
    }

    #[test]
    fn gram_examples() {
        let gf2 = Field::new(2).unwrap();
        let g = gram_matrix(&Matrix::identity(2), InnerProduct::Euclidean, &gf2).unwrap();
        assert_eq!(g, Matrix::identity(2));
        let g = gram_matrix(&m(&gf2, &[&[1, 1]]), InnerProduct::Euclidean, &gf2).unwrap();
        assert_eq!(g, m(&gf2, &[&[0]]));
    }

    #[test]
    fn rref_on_restricts_pivots() {
        let gf2 = Field::new(2).unwrap();
        let a = m(&gf2, &[&[1, 0, 1, 1], &[0, 1, 1, 0]]);
        let e = rref_on(&a, &gf2, |c| c >= 2);
        assert_eq!(e.pivots, vec![2, 3]);
        assert_eq!(e.rank, 2);
    }
}
