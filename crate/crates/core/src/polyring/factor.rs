//! Factorization over GF(q): square-free decomposition, distinct-degree
//! splitting, then Cantor-Zassenhaus equal-degree splitting.

use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{gcd, Poly, Ring};
use crate::error::{Error, Result};
use crate::gf::Field;

/// A monic irreducible factor and its multiplicity.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Factor {
    pub poly: Poly,
    pub multiplicity: usize,
}

/// Complete factorization of x^n - 1, reproducible for a given ring.
pub fn factor_xn_minus_1(ring: &Ring) -> Result<Vec<Factor>> {
    let f = ring.field();
    let mut seed = 0xcbf2_9ce4_8422_2325u64;
    for word in [f.order() as u64, ring.n() as u64]
        .into_iter()
        .chain(f.modulus().iter().map(|&c| c as u64))
    {
        seed = (seed ^ word).wrapping_mul(0x0000_0100_0000_01b3);
    }
    factor(&ring.modulus(), f, seed)
}

/// Factors a nonzero polynomial into monic irreducibles (the leading
/// coefficient is dropped). Output is sorted by degree then coefficients.
pub fn factor(a: &Poly, f: &Field, seed: u64) -> Result<Vec<Factor>> {
    if a.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    if a.degree() == Some(0) {
        return Ok(out);
    }
    for (part, mult) in square_free(&a.monic(f), f)? {
        for (d, block) in distinct_degree(&part, f)? {
            for poly in equal_degree(&block, d, f, &mut rng)? {
                out.push(Factor { poly, multiplicity: mult });
            }
        }
    }
    out.sort_by(|x, y| x.poly.cmp(&y.poly));
    Ok(out)
}

fn pth_root(a: &Poly, f: &Field) -> Poly {
    let p = f.characteristic() as usize;
    Poly::from_coeffs(
        a.coeffs()
            .iter()
            .step_by(p)
            .map(|&c| f.pth_root(c))
            .collect(),
    )
}

fn square_free(a: &Poly, f: &Field) -> Result<Vec<(Poly, usize)>> {
    let p = f.characteristic() as usize;
    let mut out = Vec::new();
    let da = a.derivative(f);
    if da.is_zero() {
        for (g, m) in square_free(&pth_root(a, f), f)? {
            out.push((g, m * p));
        }
        return Ok(out);
    }
    let mut c = gcd(a, &da, f)?;
    let mut w = a.exact_div(&c, f)?;
    let mut i = 1;
    while w.degree() != Some(0) {
        let y = gcd(&w, &c, f)?;
        let fac = w.exact_div(&y, f)?;
        if fac.degree() != Some(0) {
            out.push((fac.monic(f), i));
        }
        c = c.exact_div(&y, f)?;
        w = y;
        i += 1;
    }
    if c.degree() != Some(0) {
        for (g, m) in square_free(&pth_root(&c, f), f)? {
            out.push((g, m * p));
        }
    }
    Ok(out)
}

fn distinct_degree(a: &Poly, f: &Field) -> Result<Vec<(usize, Poly)>> {
    let x = Poly::x_pow(1);
    let q = f.order() as u64;
    let mut out = Vec::new();
    let mut rest = a.clone();
    let mut xq = x.clone();
    let mut d = 1;
    while rest.degree().unwrap_or(0) >= 2 * d {
        xq = xq.pow_mod(q, &rest, f)?;
        let g = gcd(&rest, &xq.sub(&x, f), f)?;
        if g.degree() != Some(0) {
            rest = rest.exact_div(&g, f)?;
            xq = xq.rem(&rest, f)?;
            out.push((d, g));
        }
        d += 1;
    }
    if let Some(deg) = rest.degree().filter(|&deg| deg > 0) {
        out.push((deg, rest.monic(f)));
    }
    Ok(out)
}

fn equal_degree(a: &Poly, d: usize, f: &Field, rng: &mut ChaCha8Rng) -> Result<Vec<Poly>> {
    let deg = a.degree().unwrap_or(0);
    if deg == d {
        return Ok(alloc::vec![a.monic(f)]);
    }
    let q = f.order() as u64;
    loop {
        let b = Poly::from_coeffs(
            (0..deg)
                .map(|_| f.elem(rng.gen_range(0..q)).expect("in range"))
                .collect(),
        );
        if b.degree().unwrap_or(0) == 0 {
            continue;
        }
        let t = if f.characteristic() == 2 {
            // trace map b + b^2 + ... + b^(2^(r d - 1))
            let mut acc = Poly::zero();
            let mut term = b.rem(a, f)?;
            for _ in 0..f.degree() as usize * d {
                acc = acc.add(&term, f);
                term = term.mul(&term, f).rem(a, f)?;
            }
            acc
        } else {
            // b^((q^d - 1)/2) = (b * b^q * ... * b^(q^(d-1)))^((q-1)/2)
            let mut norm = Poly::one();
            let mut term = b.rem(a, f)?;
            for _ in 0..d {
                norm = norm.mul(&term, f).rem(a, f)?;
                term = term.pow_mod(q, a, f)?;
            }
            norm.pow_mod((q - 1) / 2, a, f)?.sub(&Poly::one(), f)
        };
        if t.is_zero() {
            continue;
        }
        let g = gcd(&t, a, f)?;
        let gd = g.degree().unwrap_or(0);
        if gd > 0 && gd < deg {
            let mut out = equal_degree(&g, d, f, rng)?;
            out.extend(equal_degree(&a.exact_div(&g, f)?, d, f, rng)?);
            return Ok(out);
        }
    }
}

/// Rabin's irreducibility test: `x^(q^d) = x mod a` and
/// `gcd(x^(q^(d/t)) - x, a) = 1` for every prime `t | d`.
pub fn is_irreducible(a: &Poly, f: &Field) -> Result<bool> {
    let d = match a.degree() {
        None | Some(0) => return Ok(false),
        Some(d) => d,
    };
    let a = a.monic(f);
    let q = f.order() as u64;
    let x = Poly::x_pow(1);
    let mut powers = Vec::with_capacity(d + 1);
    let mut xq = x.rem(&a, f)?;
    powers.push(xq.clone());
    for _ in 0..d {
        xq = xq.pow_mod(q, &a, f)?;
        powers.push(xq.clone());
    }
    if powers[d] != x.rem(&a, f)? {
        return Ok(false);
    }
    for t in (2..=d).filter(|&t| d % t == 0 && (2..t).all(|s| t % s != 0)) {
        let g = gcd(&powers[d / t].sub(&x, f), &a, f)?;
        if g.degree() != Some(0) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Product of `factor^multiplicity`, for checking factorizations.
pub fn expand(factors: &[Factor], f: &Field) -> Poly {
    factors.iter().fold(Poly::one(), |acc, fac| {
        (0..fac.multiplicity).fold(acc, |acc, _| acc.mul(&fac.poly, f))
    })
}
