//! Polynomials over GF(q) and the quotient ring R = GF(q)[x]/(x^n - 1).
//!
//! Besides ordinary arithmetic this module provides the two reciprocals used
//! throughout the LCD theory:
//!
//! * [`Ring::bar`]: `x^n a(1/x) mod x^n-1`, i.e. the coefficient vector
//!   `(a_0, a_{n-1}, ..., a_1)`. This is the adjoint of multiplication for the
//!   Euclidean inner product on coefficient vectors.
//! * [`tilde`]: the monic reciprocal `x^deg(a) a(1/x)` of a polynomial with
//!   nonzero constant term.
//!
//! Hermitian variants apply the coefficient-wise Frobenius [`conj`].

mod factor;

use alloc::{sync::Arc, vec, vec::Vec};
use core::cmp::Ordering;

use crate::error::{Error, Result};
use crate::gf::{Elem, Field};

pub use factor::{expand, factor, factor_xn_minus_1, is_irreducible, Factor};

/// Dense polynomial, coefficient `i` multiplies `x^i`. Trailing zeros are
/// never stored, so the zero polynomial has no coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<Elem>,
}

impl Ord for Poly {
    /// Degree first, then coefficients from the constant term upwards.
    fn cmp(&self, other: &Self) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.cmp(&other.coeffs))
    }
}

impl PartialOrd for Poly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Poly {
    pub fn zero() -> Poly {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Poly {
        Poly::constant(Elem::ONE)
    }

    pub fn constant(c: Elem) -> Poly {
        Poly::from_coeffs(vec![c])
    }

    pub fn monomial(c: Elem, k: usize) -> Poly {
        let mut coeffs = vec![Elem::ZERO; k + 1];
        coeffs[k] = c;
        Poly::from_coeffs(coeffs)
    }

    /// `x^k`
    pub fn x_pow(k: usize) -> Poly {
        Poly::monomial(Elem::ONE, k)
    }

    pub fn from_coeffs(mut coeffs: Vec<Elem>) -> Poly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    /// Builds a polynomial from integer encodings, validating each against `f`.
    pub fn from_reps(reps: &[u64], f: &Field) -> Result<Poly> {
        let coeffs = reps.iter().map(|&r| f.elem(r)).collect::<Result<Vec<_>>>()?;
        Ok(Poly::from_coeffs(coeffs))
    }

    /// Polynomial with coefficient 1 at each listed exponent.
    pub fn from_exponents(exps: &[usize]) -> Poly {
        let len = exps.iter().max().map_or(0, |&m| m + 1);
        let mut coeffs = vec![Elem::ZERO; len];
        for &e in exps {
            coeffs[e] = Elem::ONE;
        }
        Poly::from_coeffs(coeffs)
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    pub fn reps(&self) -> Vec<u32> {
        self.coeffs.iter().map(|c| c.rep()).collect()
    }

    /// Coefficient of `x^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> Elem {
        self.coeffs.get(i).copied().unwrap_or(Elem::ZERO)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0] == Elem::ONE
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<Elem> {
        self.coeffs.last().copied()
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == Some(Elem::ONE)
    }

    pub fn add(&self, other: &Poly, f: &Field) -> Poly {
        let len = self.coeffs.len().max(other.coeffs.len());
        Poly::from_coeffs((0..len).map(|i| f.add(self.coeff(i), other.coeff(i))).collect())
    }

    pub fn sub(&self, other: &Poly, f: &Field) -> Poly {
        let len = self.coeffs.len().max(other.coeffs.len());
        Poly::from_coeffs((0..len).map(|i| f.sub(self.coeff(i), other.coeff(i))).collect())
    }

    pub fn neg(&self, f: &Field) -> Poly {
        Poly::from_coeffs(self.coeffs.iter().map(|&c| f.neg(c)).collect())
    }

    pub fn scale(&self, c: Elem, f: &Field) -> Poly {
        Poly::from_coeffs(self.coeffs.iter().map(|&a| f.mul(a, c)).collect())
    }

    pub fn mul(&self, other: &Poly, f: &Field) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Elem::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        Poly::from_coeffs(out)
    }

    /// Quotient and remainder of Euclidean division.
    pub fn div_rem(&self, divisor: &Poly, f: &Field) -> Result<(Poly, Poly)> {
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let lead_inv = f.inv(divisor.coeffs[dd])?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Poly::zero(), self.clone()));
        }
        let mut quot = vec![Elem::ZERO; rem.len() - dd];
        for top in (dd..rem.len()).rev() {
            let c = rem[top];
            if c.is_zero() {
                continue;
            }
            let t = f.mul(c, lead_inv);
            quot[top - dd] = t;
            for (i, &d) in divisor.coeffs.iter().enumerate() {
                let k = top - dd + i;
                rem[k] = f.sub(rem[k], f.mul(t, d));
            }
        }
        rem.truncate(dd);
        Ok((Poly::from_coeffs(quot), Poly::from_coeffs(rem)))
    }

    pub fn rem(&self, divisor: &Poly, f: &Field) -> Result<Poly> {
        Ok(self.div_rem(divisor, f)?.1)
    }

    /// Exact quotient, failing with [`Error::NotDivisor`] on a nonzero remainder.
    pub fn exact_div(&self, divisor: &Poly, f: &Field) -> Result<Poly> {
        let (q, r) = self.div_rem(divisor, f)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::NotDivisor)
        }
    }

    pub fn divides(&self, other: &Poly, f: &Field) -> Result<bool> {
        Ok(other.rem(self, f)?.is_zero())
    }

    /// Scales to leading coefficient 1 (zero stays zero).
    pub fn monic(&self, f: &Field) -> Poly {
        match self.leading() {
            None => Poly::zero(),
            Some(l) => self.scale(f.inv(l).expect("leading coefficient is nonzero"), f),
        }
    }

    pub fn derivative(&self, f: &Field) -> Poly {
        Poly::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| f.mul(c, f.from_int(i as i64)))
                .collect(),
        )
    }

    pub fn eval(&self, x: Elem, f: &Field) -> Elem {
        self.coeffs
            .iter()
            .rev()
            .fold(Elem::ZERO, |acc, &c| f.add(f.mul(acc, x), c))
    }

    /// `self^e mod modulus`.
    pub fn pow_mod(&self, mut e: u64, modulus: &Poly, f: &Field) -> Result<Poly> {
        let mut base = self.rem(modulus, f)?;
        let mut acc = Poly::one().rem(modulus, f)?;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base, f).rem(modulus, f)?;
            }
            base = base.mul(&base, f).rem(modulus, f)?;
            e >>= 1;
        }
        Ok(acc)
    }

    /// Human-readable form, highest degree first (`x^2+w*x+1`).
    pub fn format(&self, f: &Field) -> alloc::string::String {
        use alloc::format;
        use alloc::string::String;
        if self.is_zero() {
            return String::from("0");
        }
        let mut terms = Vec::new();
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let cs = f.format_elem(c);
            let coeff = if c == Elem::ONE && i > 0 {
                String::new()
            } else if i > 0 && cs.contains('+') {
                format!("({cs})")
            } else {
                cs
            };
            terms.push(match i {
                0 => coeff,
                1 => format!("{coeff}x"),
                _ => format!("{coeff}x^{i}"),
            });
        }
        terms.join("+")
    }
}

/// Monic greatest common divisor; `gcd(a, 0) = monic(a)`.
pub fn gcd(a: &Poly, b: &Poly, f: &Field) -> Result<Poly> {
    if a.is_zero() && b.is_zero() {
        return Err(Error::UndefinedGcd);
    }
    let (mut x, mut y) = (a.clone(), b.clone());
    while !y.is_zero() {
        let r = x.rem(&y, f)?;
        x = y;
        y = r;
    }
    Ok(x.monic(f))
}

/// Monic reciprocal `x^deg(a) a(1/x)`, scaled by the inverse of its
/// leading coefficient.
pub fn tilde(a: &Poly, f: &Field) -> Result<Poly> {
    if a.coeff(0).is_zero() {
        return Err(Error::ReciprocalUndefined);
    }
    let mut rev = a.coeffs.clone();
    rev.reverse();
    Ok(Poly::from_coeffs(rev).monic(f))
}

/// Coefficient-wise Frobenius `a_i -> a_i^q0`.
pub fn conj(a: &Poly, q0: u32, f: &Field) -> Result<Poly> {
    f.check_base_power(q0)?;
    Ok(Poly::from_coeffs(
        a.coeffs.iter().map(|&c| f.pow(c, q0 as u64)).collect(),
    ))
}

/// Which reciprocal a self-duality test uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Reciprocity {
    /// `g = tilde(g)`
    Euclidean,
    /// `g = conj(tilde(g))` over GF(q0^2)
    Hermitian,
}

/// The reciprocal partner of `a` under the chosen reciprocity.
pub fn reciprocal(a: &Poly, kind: Reciprocity, f: &Field) -> Result<Poly> {
    let t = tilde(a, f)?;
    match kind {
        Reciprocity::Euclidean => Ok(t),
        Reciprocity::Hermitian => {
            let q0 = f.hermitian_base().ok_or(Error::NotSquareOrder(f.order()))?;
            conj(&t, q0, f)
        }
    }
}

/// `a` equals its (conjugate-)reciprocal. False whenever `a(0) = 0`.
pub fn is_self_reciprocal(a: &Poly, kind: Reciprocity, f: &Field) -> Result<bool> {
    if a.coeff(0).is_zero() {
        return Ok(false);
    }
    Ok(&reciprocal(a, kind, f)? == a)
}

/// The quotient ring GF(q)[x]/(x^n - 1).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ring {
    field: Arc<Field>,
    n: usize,
    semisimple: bool,
}

impl Ring {
    pub fn new(field: Arc<Field>, n: usize) -> Result<Ring> {
        if n == 0 {
            return Err(Error::ZeroLength);
        }
        let semisimple = !n.is_multiple_of(field.characteristic() as usize);
        Ok(Ring { field, n, semisimple })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn field_arc(&self) -> &Arc<Field> {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `gcd(n, p) = 1`, so x^n - 1 is square-free.
    pub fn is_semisimple(&self) -> bool {
        self.semisimple
    }

    pub fn require_semisimple(&self) -> Result<()> {
        if self.semisimple {
            Ok(())
        } else {
            Err(Error::NotSemisimple { n: self.n, p: self.field.characteristic() })
        }
    }

    /// `x^n - 1` as an ordinary polynomial.
    pub fn modulus(&self) -> Poly {
        let f = &self.field;
        let mut coeffs = vec![Elem::ZERO; self.n + 1];
        coeffs[0] = f.neg(Elem::ONE);
        coeffs[self.n] = Elem::ONE;
        Poly::from_coeffs(coeffs)
    }

    /// Reduction modulo x^n - 1 by folding exponents.
    pub fn reduce(&self, a: &Poly) -> Poly {
        if a.coeffs.len() <= self.n {
            return a.clone();
        }
        let mut out = vec![Elem::ZERO; self.n];
        for (i, &c) in a.coeffs.iter().enumerate() {
            out[i % self.n] = self.field.add(out[i % self.n], c);
        }
        Poly::from_coeffs(out)
    }

    pub fn is_reduced(&self, a: &Poly) -> bool {
        a.coeffs.len() <= self.n
    }

    pub fn mul(&self, a: &Poly, b: &Poly) -> Poly {
        let f = &self.field;
        if a.is_zero() || b.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Elem::ZERO; self.n];
        for (i, &x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, &y) in b.coeffs.iter().enumerate() {
                let k = (i + j) % self.n;
                out[k] = f.add(out[k], f.mul(x, y));
            }
        }
        Poly::from_coeffs(out)
    }

    pub fn add(&self, a: &Poly, b: &Poly) -> Poly {
        self.reduce(&a.add(b, &self.field))
    }

    pub fn sub(&self, a: &Poly, b: &Poly) -> Poly {
        self.reduce(&a.sub(b, &self.field))
    }

    /// `x^n a(1/x) mod x^n - 1`: index map `i -> (n - i) mod n`.
    pub fn bar(&self, a: &Poly) -> Poly {
        let a = self.reduce(a);
        let mut out = vec![Elem::ZERO; self.n];
        for (i, &c) in a.coeffs.iter().enumerate() {
            out[(self.n - i) % self.n] = c;
        }
        Poly::from_coeffs(out)
    }

    /// Conjugate of the bar reciprocal, the Hermitian adjoint of multiplication.
    pub fn bar_conj(&self, a: &Poly) -> Result<Poly> {
        let q0 = self
            .field
            .hermitian_base()
            .ok_or(Error::NotSquareOrder(self.field.order()))?;
        conj(&self.bar(a), q0, &self.field)
    }

    /// Coefficient vector of length n (a must be reduced).
    pub fn vector(&self, a: &Poly) -> Vec<Elem> {
        let a = self.reduce(a);
        let mut v = a.coeffs;
        v.resize(self.n, Elem::ZERO);
        v
    }

    /// `(x^n - 1) / g`, failing when g does not divide x^n - 1.
    pub fn cofactor(&self, g: &Poly) -> Result<Poly> {
        if g.is_zero() {
            return Err(Error::NotDivisor);
        }
        self.modulus().exact_div(g, &self.field)
    }

    pub fn is_divisor(&self, g: &Poly) -> bool {
        !g.is_zero() && self.cofactor(g).is_ok()
    }

    /// Complete factorization of x^n - 1 into monic irreducibles with
    /// multiplicities, sorted by degree then coefficients.
    pub fn factor_modulus(&self) -> Result<Vec<Factor>> {
        factor_xn_minus_1(self)
    }

    /// All monic divisors `d` of x^n - 1 with `d` equal to its
    /// (conjugate-)reciprocal, including 1 and x^n - 1, sorted by degree
    /// then coefficients.
    pub fn self_reciprocal_divisors(&self, kind: Reciprocity) -> Result<Vec<Poly>> {
        self.require_semisimple()?;
        let f = &*self.field;
        let factors = self.factor_modulus()?;
        if factors.len() > MAX_DIVISOR_FACTORS {
            return Err(Error::TooManyFactors(factors.len()));
        }
        // Pair each irreducible factor with its reciprocal partner; a
        // self-reciprocal divisor takes both members of an orbit or neither.
        let mut orbits: Vec<Poly> = Vec::new();
        let mut used = vec![false; factors.len()];
        for i in 0..factors.len() {
            if used[i] {
                continue;
            }
            used[i] = true;
            let p = &factors[i].poly;
            let partner = reciprocal(p, kind, f)?;
            let mut orbit = p.clone();
            if &partner != p {
                let j = factors
                    .iter()
                    .position(|fac| fac.poly == partner)
                    .ok_or_else(|| Error::Inconsistent("reciprocal factor missing".into()))?;
                used[j] = true;
                orbit = orbit.mul(&partner, f);
            }
            orbits.push(orbit);
        }
        let mut out = Vec::with_capacity(1 << orbits.len());
        for mask in 0u64..(1u64 << orbits.len()) {
            let mut d = Poly::one();
            for (b, o) in orbits.iter().enumerate() {
                if mask >> b & 1 == 1 {
                    d = d.mul(o, f);
                }
            }
            out.push(d);
        }
        out.sort();
        Ok(out)
    }

    /// Generator polynomial of the dual of the cyclic code generated by `g`:
    /// `tilde(h)` (Euclidean) or `conj(tilde(h))` (Hermitian), `h = (x^n-1)/g`.
    pub fn cyclic_dual_generator(&self, g: &Poly, kind: Reciprocity) -> Result<Poly> {
        let h = self.cofactor(g)?;
        reciprocal(&h, kind, &self.field)
    }
}

/// Divisor enumeration refuses more irreducible factors than this.
pub const MAX_DIVISOR_FACTORS: usize = 24;
