//! Complementary-dual decisions for quasi-cyclic codes.
//!
//! Two independent routes: polynomial conditions on the descriptor
//! (self-reciprocal `g`, cross sums coprime to `(x^n - 1)/g`) and the hull
//! `C ∩ C^⊥` of the assembled code.

use alloc::vec::Vec;

use crate::code::{assemble_qc, dual_code, LinearCode, QcDescriptor, QcGenerator};
use crate::error::{Error, Result};
use crate::linalg::{gram_matrix, rank, rowspace_intersection_dim, InnerProduct};
use crate::polyring::{gcd, is_self_reciprocal, Poly, Reciprocity, Ring};

/// Codes up to this length get the hull oracle under [`OracleMode::Auto`].
pub const AUTO_ORACLE_MAX_LENGTH: usize = 128;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum OracleMode {
    /// Only when the code length is at most [`AUTO_ORACLE_MAX_LENGTH`].
    #[default]
    Auto,
    Always,
    Never,
}

impl OracleMode {
    pub fn applies(self, length: usize) -> bool {
        match self {
            OracleMode::Auto => length <= AUTO_ORACLE_MAX_LENGTH,
            OracleMode::Always => true,
            OracleMode::Never => false,
        }
    }
}

/// Polynomial condition for one ordered pair of generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairCheck {
    pub r: usize,
    pub s: usize,
    /// `g_r = g_s`
    pub same_generator: bool,
    /// `g_r` equals its (conjugate-)reciprocal
    pub self_reciprocal: bool,
    /// cross sum reduced mod x^n - 1
    pub sum: Poly,
    /// `gcd(sum, (x^n - 1)/g_r)`; a zero sum gives the cofactor itself
    pub gcd: Poly,
    pub holds: bool,
}

/// The descriptor-level verdict with its ingredients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremCheck {
    pub holds: bool,
    pub generators_equal: bool,
    pub self_reciprocal: bool,
    /// Every ordered pair `(r, s)`, row-major; a single `(0, 0)` entry
    /// for one generator.
    pub pairs: Vec<PairCheck>,
    /// Diagnostic: for every generator, the `f` tuple shares no factor
    /// with `(x^n - 1)/g`, so `g` is the true generator polynomial.
    pub generator_reduced: bool,
    /// Diagnostic: `gcd(g, (x^n - 1)/g) = 1` for every generator.
    pub separable_generator: bool,
}

/// Result of a full check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LcdVerdict {
    pub kind: InnerProduct,
    pub theorem: TheoremCheck,
    /// `hull_dim == Some(0)`, when the oracle ran
    pub oracle: Option<bool>,
    pub hull_dim: Option<usize>,
    /// Rows and rank of the assembled generator matrix, when assembled.
    pub rows: usize,
    pub dim: Option<usize>,
}

impl LcdVerdict {
    pub fn is_lcd(&self) -> bool {
        self.oracle.unwrap_or(self.theorem.holds)
    }

    /// `Some(false)` only for a theorem/oracle disagreement.
    pub fn agrees(&self) -> Option<bool> {
        self.oracle.map(|o| o == self.theorem.holds)
    }
}

fn reciprocity(kind: InnerProduct) -> Reciprocity {
    match kind {
        InnerProduct::Hermitian => Reciprocity::Hermitian,
        InnerProduct::Euclidean | InnerProduct::Symplectic => Reciprocity::Euclidean,
    }
}

/// `C ∩ C^⊥` dimension, computed as a row-space intersection and as
/// `k - rank(Gram)`; a disagreement is reported as [`Error::Inconsistent`].
pub fn hull_dimension(c: &LinearCode, kind: InnerProduct) -> Result<usize> {
    let f = c.field();
    let dual = dual_code(c, kind)?;
    let by_intersection = rowspace_intersection_dim(c.generator(), dual.generator(), f)?;
    let gram = gram_matrix(&c.basis(), kind, f)?;
    let by_gram = c.dim() - rank(&gram, f);
    if by_intersection != by_gram {
        return Err(Error::Inconsistent(alloc::format!(
            "hull dimension {by_intersection} by intersection, {by_gram} by Gram rank"
        )));
    }
    Ok(by_gram)
}

/// Cross sum `S_{r,s}` in the ring for the chosen inner product.
pub fn cross_sum(ring: &Ring, kind: InnerProduct, fr: &[Poly], fs: &[Poly]) -> Result<Poly> {
    if fr.len() != fs.len() {
        return Err(Error::LengthMismatch(fr.len(), fs.len()));
    }
    let mut acc = Poly::zero();
    match kind {
        InnerProduct::Euclidean => {
            for (a, b) in fr.iter().zip(fs) {
                acc = ring.add(&acc, &ring.mul(a, &ring.bar(b)));
            }
        }
        InnerProduct::Hermitian => {
            for (a, b) in fr.iter().zip(fs) {
                acc = ring.add(&acc, &ring.mul(a, &ring.bar_conj(b)?));
            }
        }
        InnerProduct::Symplectic => {
            if !fr.len().is_multiple_of(2) {
                return Err(Error::OddLength(fr.len()));
            }
            let m = fr.len() / 2;
            for i in 0..m {
                let plus = ring.mul(&fs[i], &ring.bar(&fr[m + i]));
                let minus = ring.mul(&fs[m + i], &ring.bar(&fr[i]));
                acc = ring.add(&acc, &ring.sub(&plus, &minus));
            }
        }
    }
    Ok(acc)
}

/// Condition for generator `r` to be completely non-orthogonal to
/// generator `s`.
pub fn check_pairwise(
    ring: &Ring,
    kind: InnerProduct,
    gen_r: &QcGenerator,
    gen_s: &QcGenerator,
) -> Result<PairCheck> {
    let f = ring.field();
    let same_generator = gen_r.g == gen_s.g;
    let self_reciprocal = is_self_reciprocal(&gen_r.g, reciprocity(kind), f)?;
    let sum = cross_sum(ring, kind, &gen_r.f, &gen_s.f)?;
    let gcd = gcd(&sum, &ring.cofactor(&gen_r.g)?, f)?;
    let holds = same_generator && self_reciprocal && gcd.is_one();
    Ok(PairCheck { r: 0, s: 0, same_generator, self_reciprocal, sum, gcd, holds })
}

/// Polynomial conditions for the whole descriptor: all `g_i` equal and
/// self-(conjugate-)reciprocal, and every ordered pair passes
/// [`check_pairwise`].
pub fn theorem_check(desc: &QcDescriptor) -> Result<TheoremCheck> {
    let ring = desc.ring();
    let f = ring.field();
    let kind = desc.kind();
    let gens = desc.generators();
    let generators_equal = gens.iter().all(|x| x.g == gens[0].g);
    let self_reciprocal = is_self_reciprocal(&gens[0].g, reciprocity(kind), f)?;
    let mut pairs = Vec::with_capacity(gens.len() * gens.len());
    for (r, gr) in gens.iter().enumerate() {
        for (s, gs) in gens.iter().enumerate() {
            let mut pc = check_pairwise(ring, kind, gr, gs)?;
            pc.r = r;
            pc.s = s;
            pairs.push(pc);
        }
    }
    let mut generator_reduced = true;
    let mut separable_generator = true;
    for gen in gens {
        let cof = ring.cofactor(&gen.g)?;
        let common = gen.f.iter().try_fold(cof.clone(), |acc, fj| gcd(&acc, fj, f))?;
        generator_reduced &= common.is_one();
        separable_generator &= gcd(&gen.g, &cof, f)?.is_one();
    }
    let holds = generators_equal && self_reciprocal && pairs.iter().all(|p| p.holds);
    Ok(TheoremCheck {
        holds,
        generators_equal,
        self_reciprocal,
        pairs,
        generator_reduced,
        separable_generator,
    })
}

/// Theorem check plus, per `mode`, the hull oracle on the assembled code.
pub fn check_hgen(desc: &QcDescriptor, mode: OracleMode) -> Result<LcdVerdict> {
    let theorem = theorem_check(desc)?;
    let rows = desc.generators().len() * desc.n();
    let (oracle, hull_dim, dim) = if mode.applies(desc.length()) {
        let code = assemble_qc(desc);
        let hull = hull_dimension(&code, desc.kind())?;
        (Some(hull == 0), Some(hull), Some(code.dim()))
    } else {
        (None, None, None)
    };
    Ok(LcdVerdict { kind: desc.kind(), theorem, oracle, hull_dim, rows, dim })
}

/// [`check_hgen`] restricted to one generator.
pub fn check_1gen(desc: &QcDescriptor, mode: OracleMode) -> Result<LcdVerdict> {
    if desc.generators().len() != 1 {
        return Err(Error::NotOneGenerator(desc.generators().len()));
    }
    check_hgen(desc, mode)
}

/// `(dim(C_r ∩ C_s^⊥), dim(C_r^⊥ ∩ C_s))`; both zero means the codes are
/// completely non-orthogonal.
pub fn pairwise_oracle(
    c_r: &LinearCode,
    c_s: &LinearCode,
    kind: InnerProduct,
) -> Result<(usize, usize)> {
    let f = c_r.field();
    let a = rowspace_intersection_dim(c_r.generator(), dual_code(c_s, kind)?.generator(), f)?;
    let b = rowspace_intersection_dim(dual_code(c_r, kind)?.generator(), c_s.generator(), f)?;
    Ok((a, b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::Field;
    use crate::linalg::Matrix;
    use alloc::{sync::Arc, vec};

    fn ring(q: u32, n: usize) -> Ring {
        Ring::new(Arc::new(Field::new(q).unwrap()), n).unwrap()
    }

    fn p(exps: &[usize]) -> Poly {
        Poly::from_exponents(exps)
    }

    fn one_gen(r: &Ring, kind: InnerProduct, g: Poly, f: Vec<Poly>) -> QcDescriptor {
        QcDescriptor::new(r.clone(), f.len(), kind, vec![QcGenerator { g, f }]).unwrap()
    }

    #[test]
    fn hull_of_small_codes() {
        let f = Arc::new(Field::new(2).unwrap());
        let rows = vec![vec![crate::gf::Elem::ONE; 2]];
        let c = LinearCode::new(f.clone(), Matrix::from_rows(&rows, 2).unwrap());
        assert_eq!(hull_dimension(&c, InnerProduct::Euclidean).unwrap(), 1);
        let c = LinearCode::new(f, Matrix::identity(4));
        assert_eq!(hull_dimension(&c, InnerProduct::Euclidean).unwrap(), 0);
        assert_eq!(hull_dimension(&c, InnerProduct::Symplectic).unwrap(), 0);
    }

    #[test]
    fn zero_sum_fails_against_nontrivial_cofactor() {
        let r = ring(2, 3);
        let d = one_gen(&r, InnerProduct::Euclidean, p(&[0, 1]), vec![Poly::one(); 2]);
        let v = check_1gen(&d, OracleMode::Always).unwrap();
        assert!(v.theorem.pairs[0].sum.is_zero());
        assert_eq!(v.theorem.pairs[0].gcd, p(&[0, 1, 2]));
        assert!(!v.theorem.holds);
        assert_eq!(v.oracle, Some(false));
        assert_eq!(v.dim, Some(2));
    }

    #[test]
    fn differing_generators_fail_pairwise() {
        let r = ring(2, 3);
        let a = QcGenerator { g: Poly::one(), f: vec![Poly::one()] };
        let b = QcGenerator { g: p(&[0, 1]), f: vec![Poly::one()] };
        let pc = check_pairwise(&r, InnerProduct::Euclidean, &a, &b).unwrap();
        assert!(!pc.same_generator);
        assert!(!pc.holds);
    }

    #[test]
    fn one_generator_rejects_two() {
        let r = ring(2, 3);
        let gen = QcGenerator { g: Poly::one(), f: vec![Poly::one(); 2] };
        let d = QcDescriptor::new(r, 2, InnerProduct::Euclidean, vec![gen.clone(), gen]).unwrap();
        assert_eq!(check_1gen(&d, OracleMode::Never), Err(Error::NotOneGenerator(2)));
    }

    #[test]
    fn duplicate_generator_matches_single() {
        let r = ring(2, 7);
        let gen = QcGenerator { g: p(&[0, 1]), f: vec![p(&[0, 2, 3]), p(&[1, 5])] };
        let single = one_gen(&r, InnerProduct::Euclidean, gen.g.clone(), gen.f.clone());
        let double =
            QcDescriptor::new(r, 2, InnerProduct::Euclidean, vec![gen.clone(), gen]).unwrap();
        let a = check_1gen(&single, OracleMode::Always).unwrap();
        let b = check_hgen(&double, OracleMode::Always).unwrap();
        assert_eq!(a.theorem.holds, b.theorem.holds);
        assert_eq!(a.oracle, b.oracle);
        assert_eq!(a.dim, b.dim);
    }

    #[test]
    fn shared_factor_in_f_is_flagged() {
        // every f is divisible by x + 1, so the code is generated by
        // g (x + 1) rather than g
        let r = ring(2, 7);
        let d = one_gen(&r, InnerProduct::Euclidean, Poly::one(), vec![p(&[0, 1]), p(&[1, 2])]);
        let t = theorem_check(&d).unwrap();
        assert!(!t.generator_reduced);
        assert!(t.separable_generator);
    }

    #[test]
    fn oracle_mode_threshold() {
        assert!(OracleMode::Auto.applies(128));
        assert!(!OracleMode::Auto.applies(129));
        assert!(OracleMode::Always.applies(1000));
        assert!(!OracleMode::Never.applies(1));
    }
}
