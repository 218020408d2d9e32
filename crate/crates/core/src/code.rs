//! Cyclic and quasi-cyclic codes as explicit generator matrices.
//!
//! A quasi-cyclic descriptor lists `h` generators `(g_i, f_{i,0..ell})`;
//! its generator matrix has block `(i, j)` equal to the circulant of
//! `g_i f_{i,j} mod x^n - 1`. Rows are kept as built and the dimension is
//! the rank.

use alloc::{sync::Arc, vec::Vec};

use crate::error::{Error, Result};
use crate::gf::{Elem, Field};
use crate::linalg::{self, form_matrix, kernel_basis, rref, InnerProduct, Matrix};
use crate::polyring::{Poly, Ring};

/// One generator `(g, f_0, ..., f_{ell-1})`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QcGenerator {
    pub g: Poly,
    pub f: Vec<Poly>,
}

/// A validated quasi-cyclic code description. The `f` polynomials are
/// stored reduced mod x^n - 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QcDescriptor {
    ring: Ring,
    ell: usize,
    kind: InnerProduct,
    generators: Vec<QcGenerator>,
}

impl QcDescriptor {
    pub fn new(
        ring: Ring,
        ell: usize,
        kind: InnerProduct,
        generators: Vec<QcGenerator>,
    ) -> Result<QcDescriptor> {
        let invalid = |msg: &str| Err(Error::InvalidDescriptor(msg.into()));
        if ell == 0 {
            return invalid("ell must be at least 1");
        }
        if generators.is_empty() {
            return invalid("at least one generator is required");
        }
        if kind == InnerProduct::Symplectic && !ell.is_multiple_of(2) {
            return invalid("symplectic kind requires even ell");
        }
        kind.check(ell * ring.n(), ring.field())?;
        let mut reduced = Vec::with_capacity(generators.len());
        for gen in generators {
            if !gen.g.is_monic() {
                return invalid("g must be monic");
            }
            if !ring.is_divisor(&gen.g) {
                return Err(Error::NotDivisor);
            }
            if gen.f.len() != ell {
                return Err(Error::LengthMismatch(gen.f.len(), ell));
            }
            let f = gen.f.iter().map(|p| ring.reduce(p)).collect();
            reduced.push(QcGenerator { g: gen.g, f });
        }
        Ok(QcDescriptor { ring, ell, kind, generators: reduced })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn field(&self) -> &Field {
        self.ring.field()
    }

    pub fn n(&self) -> usize {
        self.ring.n()
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    pub fn kind(&self) -> InnerProduct {
        self.kind
    }

    pub fn generators(&self) -> &[QcGenerator] {
        &self.generators
    }

    /// Code length `ell * n`.
    pub fn length(&self) -> usize {
        self.ell * self.ring.n()
    }

    /// The same generators judged under another inner product.
    pub fn with_kind(&self, kind: InnerProduct) -> Result<QcDescriptor> {
        QcDescriptor::new(self.ring.clone(), self.ell, kind, self.generators.clone())
    }
}

/// `n x n` matrix whose row `t` is `x^t poly mod x^n - 1`.
pub fn circulant(ring: &Ring, poly: &Poly) -> Matrix {
    let n = ring.n();
    let base = ring.vector(poly);
    let mut m = Matrix::zeros(n, n);
    for t in 0..n {
        for (i, &c) in base.iter().enumerate() {
            m.set(t, (i + t) % n, c);
        }
    }
    m
}

/// A linear code given by a (possibly redundant) generator matrix.
#[derive(Clone, Debug)]
pub struct LinearCode {
    field: Arc<Field>,
    gen: Matrix,
    dim: usize,
}

impl LinearCode {
    pub fn new(field: Arc<Field>, gen: Matrix) -> LinearCode {
        let dim = linalg::rank(&gen, &field);
        LinearCode { field, gen, dim }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn field_arc(&self) -> &Arc<Field> {
        &self.field
    }

    pub fn generator(&self) -> &Matrix {
        &self.gen
    }

    pub fn length(&self) -> usize {
        self.gen.ncols()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `dim` independent rows spanning the code, in reduced echelon form.
    pub fn basis(&self) -> Matrix {
        rref(&self.gen, &self.field).basis()
    }

    pub fn contains(&self, v: &[Elem]) -> Result<bool> {
        if v.len() != self.length() {
            return Err(Error::LengthMismatch(v.len(), self.length()));
        }
        let mut m = self.gen.clone();
        m.push_row(v)?;
        Ok(linalg::rank(&m, &self.field) == self.dim)
    }

    /// Same row space, compared through reduced echelon forms.
    pub fn same_code(&self, other: &LinearCode) -> bool {
        self.length() == other.length()
            && self.dim == other.dim
            && self.basis() == other.basis()
    }
}

/// Generator matrix of a quasi-cyclic descriptor: `h n` rows, `ell n`
/// columns, generator `i` above generator `i + 1`.
pub fn assemble_qc(desc: &QcDescriptor) -> LinearCode {
    let ring = &desc.ring;
    let n = ring.n();
    let mut gen = Matrix::zeros(desc.generators.len() * n, desc.length());
    for (i, g) in desc.generators.iter().enumerate() {
        for (j, fj) in g.f.iter().enumerate() {
            let block = circulant(ring, &ring.mul(&g.g, fj));
            for t in 0..n {
                for c in 0..n {
                    gen.set(i * n + t, j * n + c, block.get(t, c));
                }
            }
        }
    }
    LinearCode::new(ring.field_arc().clone(), gen)
}

/// `{v : <u, v> = 0 for all u in c}` under the chosen inner product.
pub fn dual_code(c: &LinearCode, kind: InnerProduct) -> Result<LinearCode> {
    let f = c.field();
    let a = form_matrix(&c.gen, kind, f)?;
    let mut k = kernel_basis(&a, f);
    if kind == InnerProduct::Hermitian {
        k = k.map(|x| f.conj(x).expect("checked square order"));
    }
    Ok(LinearCode { field: c.field.clone(), dim: k.nrows(), gen: k })
}

/// Cyclic code generated by `g`: rows `x^t g` for `t < n - deg g`.
pub fn cyclic_code(g: &Poly, ring: &Ring) -> Result<LinearCode> {
    if !ring.is_divisor(g) {
        return Err(Error::NotDivisor);
    }
    let n = ring.n();
    let k = n - g.degree().expect("divisor is nonzero");
    let mut gen = Matrix::zeros(k, n);
    for t in 0..k {
        for (i, &c) in g.coeffs().iter().enumerate() {
            gen.set(t, t + i, c);
        }
    }
    Ok(LinearCode::new(ring.field_arc().clone(), gen))
}

/// Shifts each length-`n` block of `v` cyclically one place to the right.
pub fn block_shift(v: &[Elem], n: usize) -> Vec<Elem> {
    let mut out = v.to_vec();
    for (src, dst) in v.chunks(n).zip(out.chunks_mut(n)) {
        for i in 0..src.len() {
            dst[(i + 1) % src.len()] = src[i];
        }
    }
    out
}
