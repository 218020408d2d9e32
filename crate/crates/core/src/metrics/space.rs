//! Packed codeword storage for the enumerators.
//!
//! Characteristic 2: one bitplane per field digit, so addition is XOR and
//! the support is the OR of the planes. With a symplectic split the two
//! halves start on separate words so pairs line up bit for bit.
//! Other characteristics keep one element per coordinate.

use alloc::{sync::Arc, vec, vec::Vec};

use super::WeightKind;
use crate::gf::{Elem, Field};

pub(crate) trait Space: Sync {
    type V: Clone + Send;

    fn zero(&self) -> Self::V;
    fn pack(&self, v: &[Elem]) -> Self::V;
    fn add_assign(&self, acc: &mut Self::V, v: &Self::V);
    /// `acc = a + b`, reusing `acc`'s storage.
    fn sum_into(&self, acc: &mut Self::V, a: &Self::V, b: &Self::V);
    fn weight(&self, v: &Self::V) -> usize;
    /// Hamming weight on a column mask built by [`Space::mask`].
    fn masked_weight(&self, v: &Self::V, mask: &Self::V) -> usize;
    fn mask(&self, cols: &[usize]) -> Self::V;
}

/// Bitplane layout for GF(2^r).
pub(crate) struct Binary {
    planes: usize,
    /// words per plane
    words: usize,
    /// first word of the second half, symplectic layout only
    split: Option<usize>,
    half: usize,
    kind: WeightKind,
}

impl Binary {
    pub(crate) fn new(f: &Field, len: usize, kind: WeightKind) -> Binary {
        let planes = f.degree() as usize;
        match kind {
            WeightKind::Hamming => Binary { planes, words: len.div_ceil(64), split: None, half: 0, kind },
            WeightKind::Symplectic => {
                let half = len / 2;
                let hw = half.div_ceil(64);
                Binary { planes, words: 2 * hw, split: Some(hw), half, kind }
            }
        }
    }

    #[inline]
    fn slot(&self, col: usize) -> (usize, u64) {
        match self.split {
            None => (col / 64, 1u64 << (col % 64)),
            Some(_) if col < self.half => (col / 64, 1u64 << (col % 64)),
            Some(hw) => {
                let c = col - self.half;
                (hw + c / 64, 1u64 << (c % 64))
            }
        }
    }

    #[inline]
    fn support_word(&self, v: &[u64], w: usize) -> u64 {
        let mut s = 0;
        for p in 0..self.planes {
            s |= v[p * self.words + w];
        }
        s
    }
}

impl Space for Binary {
    type V = Vec<u64>;

    fn zero(&self) -> Vec<u64> {
        vec![0; self.planes * self.words]
    }

    fn pack(&self, v: &[Elem]) -> Vec<u64> {
        let mut out = self.zero();
        for (col, &x) in v.iter().enumerate() {
            let (w, bit) = self.slot(col);
            for p in 0..self.planes {
                if x.rep() >> p & 1 == 1 {
                    out[p * self.words + w] |= bit;
                }
            }
        }
        out
    }

    #[inline]
    fn add_assign(&self, acc: &mut Vec<u64>, v: &Vec<u64>) {
        for (a, b) in acc.iter_mut().zip(v) {
            *a ^= b;
        }
    }

    #[inline]
    fn sum_into(&self, acc: &mut Vec<u64>, a: &Vec<u64>, b: &Vec<u64>) {
        for ((o, x), y) in acc.iter_mut().zip(a).zip(b) {
            *o = x ^ y;
        }
    }

    #[inline]
    fn weight(&self, v: &Vec<u64>) -> usize {
        match (self.kind, self.split) {
            (WeightKind::Symplectic, Some(hw)) => (0..hw)
                .map(|w| (self.support_word(v, w) | self.support_word(v, hw + w)).count_ones() as usize)
                .sum(),
            _ => (0..self.words).map(|w| self.support_word(v, w).count_ones() as usize).sum(),
        }
    }

    #[inline]
    fn masked_weight(&self, v: &Vec<u64>, mask: &Vec<u64>) -> usize {
        (0..self.words)
            .map(|w| (self.support_word(v, w) & mask[w]).count_ones() as usize)
            .sum()
    }

    fn mask(&self, cols: &[usize]) -> Vec<u64> {
        let mut m = vec![0; self.words];
        for &c in cols {
            let (w, bit) = self.slot(c);
            m[w] |= bit;
        }
        m
    }
}

/// One element per coordinate, any field.
pub(crate) struct Generic {
    field: Arc<Field>,
    len: usize,
    kind: WeightKind,
}

impl Generic {
    pub(crate) fn new(field: Arc<Field>, len: usize, kind: WeightKind) -> Generic {
        Generic { field, len, kind }
    }
}

impl Space for Generic {
    type V = Vec<Elem>;

    fn zero(&self) -> Vec<Elem> {
        vec![Elem::ZERO; self.len]
    }

    fn pack(&self, v: &[Elem]) -> Vec<Elem> {
        v.to_vec()
    }

    #[inline]
    fn add_assign(&self, acc: &mut Vec<Elem>, v: &Vec<Elem>) {
        for (a, &b) in acc.iter_mut().zip(v) {
            *a = self.field.add(*a, b);
        }
    }

    #[inline]
    fn sum_into(&self, acc: &mut Vec<Elem>, a: &Vec<Elem>, b: &Vec<Elem>) {
        for ((o, &x), &y) in acc.iter_mut().zip(a).zip(b) {
            *o = self.field.add(x, y);
        }
    }

    fn weight(&self, v: &Vec<Elem>) -> usize {
        super::weight_unchecked(v, self.kind)
    }

    fn masked_weight(&self, v: &Vec<Elem>, mask: &Vec<Elem>) -> usize {
        v.iter().zip(mask).filter(|(x, m)| !m.is_zero() && !x.is_zero()).count()
    }

    fn mask(&self, cols: &[usize]) -> Vec<Elem> {
        let mut m = self.zero();
        for &c in cols {
            m[c] = Elem::ONE;
        }
        m
    }
}
