//! Arithmetic in small finite fields GF(p^r) with q = p^r <= 2^16.
//!
//! An element is stored as the integer packing of its residue polynomial
//! modulo the defining polynomial: the coefficient of `w^i` is the i-th
//! base-p digit. GF(4) with modulus x^2+x+1 therefore encodes 0, 1, w, w+1
//! as 0, 1, 2, 3. Multiplication goes through log/antilog tables that are
//! built once when the field is created.

use alloc::{format, string::String, vec, vec::Vec};
use core::fmt;

use crate::error::{Error, Result};

/// Largest supported field order.
pub const MAX_ORDER: u32 = 1 << 16;

/// A field element, valid only together with the [`Field`] it came from.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Elem(u16);

impl Elem {
    pub const ZERO: Elem = Elem(0);
    pub const ONE: Elem = Elem(1);

    /// Integer encoding of the element.
    #[inline]
    pub fn rep(self) -> u32 {
        self.0 as u32
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

/// Defining data and lookup tables of GF(p^r).
#[derive(Clone)]
pub struct Field {
    p: u32,
    r: u32,
    q: u32,
    modulus: Vec<u32>,
    exp: Vec<u16>,
    log: Vec<u32>,
    // q*q addition table, only for odd p with q <= 256
    add: Vec<u16>,
    neg: Vec<u16>,
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.q == other.q && self.modulus == other.modulus
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Field")
            .field("q", &self.q)
            .field("modulus", &self.modulus)
            .finish()
    }
}

/// Splits `q` into `(p, r)` with `q = p^r`, or `None` if `q` is not a prime power.
pub fn prime_power(q: u64) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2u64;
    while p * p <= q && !q.is_multiple_of(p) {
        p += 1;
    }
    if !q.is_multiple_of(p) {
        p = q;
    }
    let mut rest = q;
    let mut r = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        r += 1;
    }
    (rest == 1).then_some((p as u32, r))
}

impl Field {
    /// GF(q) with the default modulus: x^2+x+1 for GF(4), otherwise the
    /// smallest irreducible monic polynomial of degree r (lower coefficients
    /// read as a base-p integer).
    pub fn new(q: u32) -> Result<Field> {
        let (p, r) = check_order(q as u64)?;
        let modulus = default_modulus(p, r);
        Self::build(p, r, modulus)
    }

    /// GF(q) with an explicit modulus (coefficients over GF(p), low to high).
    pub fn with_modulus(q: u32, modulus: &[u32]) -> Result<Field> {
        let (p, r) = check_order(q as u64)?;
        if modulus.len() != r as usize + 1 {
            return Err(Error::InvalidModulus(format!(
                "expected degree {r}, got {} coefficients",
                modulus.len()
            )));
        }
        if modulus.iter().any(|&c| c >= p) {
            return Err(Error::InvalidModulus(format!(
                "coefficients must be below {p}"
            )));
        }
        if modulus[r as usize] != 1 {
            return Err(Error::InvalidModulus("modulus must be monic".into()));
        }
        if !is_irreducible_prime(modulus, p) {
            return Err(Error::InvalidModulus(format!(
                "{modulus:?} is reducible over GF({p})"
            )));
        }
        Self::build(p, r, modulus.to_vec())
    }

    fn build(p: u32, r: u32, modulus: Vec<u32>) -> Result<Field> {
        let q = p.pow(r);
        let mut neg = vec![0u16; q as usize];
        for (a, slot) in neg.iter_mut().enumerate() {
            *slot = map_digits(a as u32, 0, p, |x, _| (p - x) % p) as u16;
        }
        let mut add = Vec::new();
        if p != 2 && q <= 256 {
            add = vec![0u16; (q * q) as usize];
            for a in 0..q {
                for b in 0..q {
                    add[(a * q + b) as usize] = map_digits(a, b, p, |x, y| (x + y) % p) as u16;
                }
            }
        }

        let order = q - 1;
        let mut exp = vec![0u16; 2 * order as usize];
        let mut log = vec![0u32; q as usize];
        'search: for gen in 1..q {
            let mut x = 1u32;
            for i in 0..order {
                if i > 0 && x == 1 {
                    continue 'search;
                }
                exp[i as usize] = x as u16;
                log[x as usize] = i;
                x = slow_mul(x, gen, p, r, &modulus);
            }
            if x == 1 {
                break;
            }
        }
        for i in order..2 * order {
            exp[i as usize] = exp[(i - order) as usize];
        }
        Ok(Field { p, r, q, modulus, exp, log, add, neg })
    }

    /// Field order q.
    #[inline]
    pub fn order(&self) -> u32 {
        self.q
    }

    #[inline]
    pub fn characteristic(&self) -> u32 {
        self.p
    }

    /// Extension degree r over the prime field.
    #[inline]
    pub fn degree(&self) -> u32 {
        self.r
    }

    /// Defining polynomial over GF(p), low to high.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// `sqrt(q)` when q is a square; the conjugation exponent of the
    /// Hermitian inner product.
    pub fn hermitian_base(&self) -> Option<u32> {
        self.r.is_multiple_of(2).then(|| self.p.pow(self.r / 2))
    }

    pub fn elem(&self, rep: u64) -> Result<Elem> {
        if rep >= self.q as u64 {
            return Err(Error::ElementOutOfRange { rep, q: self.q });
        }
        Ok(Elem(rep as u16))
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, i: i64) -> Elem {
        Elem(i.rem_euclid(self.p as i64) as u16)
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        (0..self.q).map(|i| Elem(i as u16))
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        if self.p == 2 {
            Elem(a.0 ^ b.0)
        } else if !self.add.is_empty() {
            Elem(self.add[a.0 as usize * self.q as usize + b.0 as usize])
        } else {
            Elem(map_digits(a.rep(), b.rep(), self.p, |x, y| (x + y) % self.p) as u16)
        }
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        Elem(self.neg[a.0 as usize])
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if a.0 == 0 || b.0 == 0 {
            return Elem::ZERO;
        }
        Elem(self.exp[(self.log[a.0 as usize] + self.log[b.0 as usize]) as usize])
    }

    pub fn inv(&self, a: Elem) -> Result<Elem> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let order = self.q - 1;
        Ok(Elem(self.exp[((order - self.log[a.0 as usize]) % order) as usize]))
    }

    pub fn div(&self, a: Elem, b: Elem) -> Result<Elem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: Elem, e: u64) -> Elem {
        if a.is_zero() {
            return if e == 0 { Elem::ONE } else { Elem::ZERO };
        }
        let order = (self.q - 1) as u64;
        let l = (self.log[a.0 as usize] as u64 * (e % order)) % order;
        Elem(self.exp[l as usize])
    }

    /// `a^q0` for `q0 = p^s`, `0 <= s <= r`.
    pub fn frobenius(&self, a: Elem, q0: u32) -> Result<Elem> {
        self.check_base_power(q0)?;
        Ok(self.pow(a, q0 as u64))
    }

    /// Hermitian conjugation `a -> a^sqrt(q)`.
    pub fn conj(&self, a: Elem) -> Result<Elem> {
        let q0 = self.hermitian_base().ok_or(Error::NotSquareOrder(self.q))?;
        Ok(self.pow(a, q0 as u64))
    }

    pub(crate) fn check_base_power(&self, q0: u32) -> Result<()> {
        let mut x = 1u32;
        for _ in 0..=self.r {
            if x == q0 {
                return Ok(());
            }
            x *= self.p;
        }
        Err(Error::InvalidBasePower { q0, q: self.q })
    }

    /// p-th root, the inverse of the absolute Frobenius.
    pub fn pth_root(&self, a: Elem) -> Elem {
        self.pow(a, (self.q / self.p) as u64)
    }

    /// Human-readable element: integers for prime fields, polynomials in
    /// `w` otherwise (GF(4) prints as 0, 1, w, w+1).
    pub fn format_elem(&self, a: Elem) -> String {
        if self.r == 1 || a.rep() < self.p {
            return format!("{}", a.rep());
        }
        let mut digits = Vec::with_capacity(self.r as usize);
        let mut x = a.rep();
        for _ in 0..self.r {
            digits.push(x % self.p);
            x /= self.p;
        }
        let mut out = String::new();
        for (i, &c) in digits.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !out.is_empty() {
                out.push('+');
            }
            let coeff = if c == 1 && i > 0 { String::new() } else { format!("{c}") };
            match i {
                0 => out.push_str(&coeff),
                1 => out.push_str(&format!("{coeff}w")),
                _ => out.push_str(&format!("{coeff}w^{i}")),
            }
        }
        out
    }
}

fn check_order(q: u64) -> Result<(u32, u32)> {
    if q > MAX_ORDER as u64 {
        return Err(Error::FieldTooLarge(q));
    }
    prime_power(q).ok_or(Error::NotPrimePower(q))
}

fn map_digits(a: u32, b: u32, p: u32, op: impl Fn(u32, u32) -> u32) -> u32 {
    let (mut a, mut b) = (a, b);
    let mut out = 0;
    let mut scale = 1;
    while a > 0 || b > 0 {
        out += op(a % p, b % p) * scale;
        a /= p;
        b /= p;
        scale *= p;
    }
    // op(0, 0) is 0 for every digit map used here
    out
}

fn unpack(x: u32, p: u32, r: u32) -> Vec<u32> {
    let mut v = Vec::with_capacity(r as usize);
    let mut x = x;
    for _ in 0..r {
        v.push(x % p);
        x /= p;
    }
    v
}

fn pack(v: &[u32], p: u32) -> u32 {
    v.iter().rev().fold(0, |acc, &d| acc * p + d)
}

fn slow_mul(a: u32, b: u32, p: u32, r: u32, modulus: &[u32]) -> u32 {
    let (a, b) = (unpack(a, p, r), unpack(b, p, r));
    let pw = p as u64;
    let mut prod = vec![0u64; 2 * r as usize];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x as u64 * y as u64) % pw;
        }
    }
    let r = r as usize;
    for top in (r..prod.len()).rev() {
        let c = prod[top];
        if c == 0 {
            continue;
        }
        for i in 0..=r {
            let t = top - r + i;
            prod[t] = (prod[t] + pw - c * modulus[i] as u64 % pw) % pw;
        }
    }
    let low: Vec<u32> = prod[..r].iter().map(|&c| c as u32).collect();
    pack(&low, p)
}

fn default_modulus(p: u32, r: u32) -> Vec<u32> {
    if r == 1 {
        return vec![0, 1];
    }
    let lower = p.pow(r);
    (0..lower)
        .map(|x| {
            let mut m = unpack(x, p, r);
            m.push(1);
            m
        })
        .find(|m| is_irreducible_prime(m, p))
        .expect("irreducible polynomials exist in every degree")
}

// Trial division by every monic polynomial of degree 1..=deg/2 over GF(p).
fn is_irreducible_prime(m: &[u32], p: u32) -> bool {
    let deg = m.len() - 1;
    for d in 1..=deg / 2 {
        for x in 0..p.pow(d as u32) {
            let mut div = unpack(x, p, d as u32);
            div.push(1);
            if prime_rem_is_zero(m, &div, p) {
                return false;
            }
        }
    }
    deg >= 1
}

fn prime_rem_is_zero(a: &[u32], monic_div: &[u32], p: u32) -> bool {
    let pw = p as u64;
    let mut rem: Vec<u64> = a.iter().map(|&c| c as u64).collect();
    let d = monic_div.len() - 1;
    for top in (d..rem.len()).rev() {
        let c = rem[top];
        if c == 0 {
            continue;
        }
        for i in 0..=d {
            let t = top - d + i;
            rem[t] = (rem[t] + pw - c * monic_div[i] as u64 % pw) % pw;
        }
    }
    rem[..d].iter().all(|&c| c == 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(f: &Field, rep: u64) -> Elem {
        f.elem(rep).unwrap()
    }

    #[test]
    fn small_field_examples() {
        let gf2 = Field::new(2).unwrap();
        let gf3 = Field::new(3).unwrap();
        let gf4 = Field::new(4).unwrap();
        assert_eq!(gf4.modulus(), &[1, 1, 1]);
        assert_eq!(gf2.add(Elem::ONE, Elem::ONE), Elem::ZERO);
        assert_eq!(gf4.add(w(&gf4, 2), w(&gf4, 2)), Elem::ZERO);
        assert_eq!(gf3.add(w(&gf3, 2), w(&gf3, 2)), w(&gf3, 1));
        // w*w = w+1, w*(w+1) = 1
        assert_eq!(gf4.mul(w(&gf4, 2), w(&gf4, 2)), w(&gf4, 3));
        assert_eq!(gf4.mul(w(&gf4, 2), w(&gf4, 3)), Elem::ONE);
        assert_eq!(gf3.mul(w(&gf3, 2), w(&gf3, 2)), Elem::ONE);
        assert_eq!(gf2.inv(Elem::ONE).unwrap(), Elem::ONE);
        assert_eq!(gf4.inv(w(&gf4, 2)).unwrap(), w(&gf4, 3));
        assert_eq!(gf3.inv(w(&gf3, 2)).unwrap(), w(&gf3, 2));
        assert_eq!(gf4.inv(Elem::ZERO), Err(Error::DivisionByZero));
    }

    #[test]
    fn frobenius_on_gf4() {
        let gf4 = Field::new(4).unwrap();
        let om = w(&gf4, 2);
        assert_eq!(gf4.frobenius(om, 2).unwrap(), w(&gf4, 3));
        assert_eq!(gf4.frobenius(Elem::ONE, 2).unwrap(), Elem::ONE);
        let twice = gf4.frobenius(gf4.frobenius(om, 2).unwrap(), 2).unwrap();
        assert_eq!(twice, om);
        assert!(matches!(gf4.frobenius(om, 3), Err(Error::InvalidBasePower { .. })));
        assert!(matches!(gf4.frobenius(om, 8), Err(Error::InvalidBasePower { .. })));
    }

    #[test]
    fn field_axioms_exhaustive_small() {
        for q in [2u32, 3, 4, 5, 7, 8, 9, 11, 13, 16] {
            let f = Field::new(q).unwrap();
            let els: Vec<Elem> = f.elements().collect();
            for &a in &els {
                if !a.is_zero() {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), Elem::ONE, "q={q} a={a:?}");
                }
                assert_eq!(f.add(a, f.neg(a)), Elem::ZERO);
                for &b in &els {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for &c in &els {
                        assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    }
                }
            }
        }
    }

    #[test]
    fn multiplication_matches_polynomial_product() {
        for q in [8u32, 9, 25, 27, 81] {
            let f = Field::new(q).unwrap();
            let (p, r) = (f.characteristic(), f.degree());
            for a in 0..q {
                for b in 0..q {
                    let expected = slow_mul(a, b, p, r, f.modulus());
                    assert_eq!(f.mul(w(&f, a as u64), w(&f, b as u64)).rep(), expected);
                }
            }
        }
    }

    #[test]
    fn frobenius_cycles() {
        for q in [4u32, 8, 9, 16, 27, 64] {
            let f = Field::new(q).unwrap();
            let (p, r) = (f.characteristic(), f.degree());
            for a in f.elements() {
                assert_eq!(f.frobenius(a, q).unwrap(), a);
                for s in 1..=r {
                    if r % s != 0 {
                        continue;
                    }
                    let q0 = p.pow(s);
                    let mut x = a;
                    for _ in 0..r / s {
                        x = f.frobenius(x, q0).unwrap();
                    }
                    assert_eq!(x, a);
                }
            }
        }
    }

    #[test]
    fn prime_power_detection() {
        assert_eq!(prime_power(4), Some((2, 2)));
        assert_eq!(prime_power(27), Some((3, 3)));
        assert_eq!(prime_power(13), Some((13, 1)));
        assert_eq!(prime_power(12), None);
        assert_eq!(prime_power(1), None);
        assert!(matches!(Field::new(6), Err(Error::NotPrimePower(6))));
        assert!(matches!(Field::new(1 << 17), Err(Error::FieldTooLarge(_))));
    }

    #[test]
    fn large_fields_build() {
        let f = Field::new(1 << 16).unwrap();
        let a = w(&f, 12345);
        assert_eq!(f.mul(a, f.inv(a).unwrap()), Elem::ONE);
        let f = Field::new(65521).unwrap();
        let a = w(&f, 65000);
        assert_eq!(f.mul(a, f.inv(a).unwrap()), Elem::ONE);
        assert_eq!(f.add(a, w(&f, 1000)).rep(), (65000 + 1000) % 65521);
    }

    #[test]
    fn explicit_modulus_validation() {
        assert!(Field::with_modulus(4, &[1, 1, 1]).is_ok());
        assert!(matches!(
            Field::with_modulus(4, &[1, 0, 1]),
            Err(Error::InvalidModulus(_))
        ));
        assert!(Field::with_modulus(8, &[1, 0, 1, 1]).is_ok());
        assert_eq!(Field::new(8).unwrap().modulus(), &[1, 1, 0, 1]);
    }

    #[test]
    fn gf4_printing() {
        let gf4 = Field::new(4).unwrap();
        let names: Vec<String> = gf4.elements().map(|a| gf4.format_elem(a)).collect();
        assert_eq!(names, ["0", "1", "w", "w+1"]);
        let gf9 = Field::new(9).unwrap();
        assert_eq!(gf9.format_elem(w(&gf9, 7)), "2w+1");
    }
}
