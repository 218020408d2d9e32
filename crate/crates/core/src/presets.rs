//! Three reference quasi-cyclic codes with known parameters:
//!
//! | name       | field | n  | ell | kind       | parameters        |
//! |------------|-------|----|-----|------------|-------------------|
//! | `example1` | GF(2) | 13 | 3   | euclidean  | [39, 13, 12]      |
//! | `example2` | GF(4) | 19 | 2   | hermitian  | [38, 18, 12]      |
//! | `example3` | GF(2) | 21 | 2   | symplectic | [42, 18, 9] (d_s) |

use alloc::{sync::Arc, vec, vec::Vec};

use crate::code::{QcDescriptor, QcGenerator};
use crate::error::Result;
use crate::gf::Field;
use crate::linalg::InnerProduct;
use crate::polyring::{Poly, Ring};

pub const NAMES: [&str; 3] = ["example1", "example2", "example3"];

pub fn by_name(name: &str) -> Option<QcDescriptor> {
    match name {
        "example1" => Some(example1()),
        "example2" => Some(example2()),
        "example3" => Some(example3()),
        _ => None,
    }
}

fn build(q: u32, n: usize, kind: InnerProduct, g: Poly, f: Vec<Poly>) -> Result<QcDescriptor> {
    let ring = Ring::new(Arc::new(Field::new(q)?), n)?;
    QcDescriptor::new(ring, f.len(), kind, vec![QcGenerator { g, f }])
}

/// Binary, n = 13, `g = 1`, `f = (1, x^12+x^7+x^3+x+1, x^12+x^11+x^9+x^8+x^5+x^3+x^2)`.
pub fn example1() -> QcDescriptor {
    build(
        2,
        13,
        InnerProduct::Euclidean,
        Poly::one(),
        vec![
            Poly::one(),
            Poly::from_exponents(&[0, 1, 3, 7, 12]),
            Poly::from_exponents(&[2, 3, 5, 8, 9, 11, 12]),
        ],
    )
    .expect("valid preset")
}

/// GF(4) with `w = 2`, `w^2 = w + 1 = 3`; n = 19, `g = x + 1`.
pub fn example2() -> QcDescriptor {
    let f = Field::new(4).expect("GF(4)");
    // coefficients of x^0 .. x^18
    let f0 = [1, 2, 1, 1, 2, 1, 2, 3, 1, 1, 3, 2, 2, 3, 1, 1, 3, 1, 3];
    let f1 = [1, 3, 2, 2, 2, 2, 1, 2, 0, 0, 3, 0, 2, 0, 3, 1];
    let poly = |c: &[u64]| Poly::from_reps(c, &f).expect("GF(4) coefficients");
    build(
        4,
        19,
        InnerProduct::Hermitian,
        Poly::from_exponents(&[0, 1]),
        vec![poly(&f0), poly(&f1)],
    )
    .expect("valid preset")
}

/// Binary, n = 21, `g = x^3 + 1`, symplectic.
pub fn example3() -> QcDescriptor {
    build(
        2,
        21,
        InnerProduct::Symplectic,
        Poly::from_exponents(&[0, 3]),
        vec![
            Poly::from_exponents(&[0, 3, 7, 8, 12, 13, 14, 15, 16, 18]),
            Poly::from_exponents(&[0, 2, 3, 5, 7, 9, 14, 15, 18, 19, 20]),
        ],
    )
    .expect("valid preset")
}
