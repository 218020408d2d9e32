use std::sync::Arc;

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use qclcd_core::code::{assemble_qc, block_shift, circulant, dual_code, LinearCode, QcDescriptor, QcGenerator};
use qclcd_core::lcd::hull_dimension;
use qclcd_core::linalg::{inner_product, kernel_basis, rank, Matrix};
use qclcd_core::metrics::{weight, weight_distribution, WeightKind};
use qclcd_core::polyring::{Poly, Ring};
use qclcd_core::{Elem, Field, InnerProduct};

const FIELDS: [u32; 3] = [2, 3, 4];

fn field(i: usize) -> Arc<Field> {
    Arc::new(Field::new(FIELDS[i % 3]).unwrap())
}

fn random_vec(f: &Field, len: usize, rng: &mut ChaCha8Rng) -> Vec<Elem> {
    (0..len).map(|_| f.elem(rng.gen_range(0..f.order() as u64)).unwrap()).collect()
}

fn random_poly(f: &Field, n: usize, rng: &mut ChaCha8Rng) -> Poly {
    Poly::from_coeffs(random_vec(f, n, rng))
}

fn random_code(f: &Arc<Field>, rows: usize, cols: usize, rng: &mut ChaCha8Rng) -> LinearCode {
    let rows: Vec<Vec<Elem>> = (0..rows).map(|_| random_vec(f, cols, rng)).collect();
    LinearCode::new(f.clone(), Matrix::from_rows(&rows, cols).unwrap())
}

fn random_qc(f: &Arc<Field>, n: usize, ell: usize, h: usize, kind: InnerProduct, rng: &mut ChaCha8Rng) -> QcDescriptor {
    let ring = Ring::new(f.clone(), n).unwrap();
    let factors = ring.factor_modulus().unwrap();
    let gens = (0..h)
        .map(|_| {
            let mut g = Poly::one();
            for fac in &factors {
                for _ in 0..rng.gen_range(0..=fac.multiplicity) {
                    g = g.mul(&fac.poly, f);
                }
            }
            let fs = (0..ell).map(|_| random_poly(f, n, rng)).collect();
            QcGenerator { g, f: fs }
        })
        .collect();
    QcDescriptor::new(ring, ell, kind, gens).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn euclidean_adjoint_identity(fi in 0usize..3, n in 1usize..16, seed: u64) {
        let f = field(fi);
        let ring = Ring::new(f.clone(), n).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (a, b, c) = (random_poly(&f, n, &mut rng), random_poly(&f, n, &mut rng), random_poly(&f, n, &mut rng));
        let lhs = inner_product(&ring.vector(&ring.mul(&a, &b)), &ring.vector(&c), InnerProduct::Euclidean, &f).unwrap();
        let rhs = inner_product(&ring.vector(&b), &ring.vector(&ring.mul(&ring.bar(&a), &c)), InnerProduct::Euclidean, &f).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn hermitian_adjoint_identity(q in prop::sample::select(vec![4u32, 9, 16]), n in 1usize..16, seed: u64) {
        let f = Arc::new(Field::new(q).unwrap());
        let ring = Ring::new(f.clone(), n).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (a, b, c) = (random_poly(&f, n, &mut rng), random_poly(&f, n, &mut rng), random_poly(&f, n, &mut rng));
        let lhs = inner_product(&ring.vector(&ring.mul(&a, &b)), &ring.vector(&c), InnerProduct::Hermitian, &f).unwrap();
        let adj = ring.bar_conj(&a).unwrap();
        let rhs = inner_product(&ring.vector(&b), &ring.vector(&ring.mul(&adj, &c)), InnerProduct::Hermitian, &f).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn bar_is_a_ring_involution(fi in 0usize..3, n in 1usize..20, seed: u64) {
        let f = field(fi);
        let ring = Ring::new(f.clone(), n).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (a, b) = (random_poly(&f, n, &mut rng), random_poly(&f, n, &mut rng));
        prop_assert_eq!(ring.bar(&ring.bar(&a)), a.clone());
        prop_assert_eq!(ring.bar(&ring.mul(&a, &b)), ring.mul(&ring.bar(&a), &ring.bar(&b)));
    }

    #[test]
    fn symplectic_weight_brackets_hamming(fi in 0usize..3, half in 1usize..40, seed: u64) {
        let f = field(fi);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let v = random_vec(&f, 2 * half, &mut rng);
        let s = weight(&v, WeightKind::Symplectic).unwrap();
        let h = weight(&v, WeightKind::Hamming).unwrap();
        prop_assert!(s <= h && h <= 2 * s);
    }

    #[test]
    fn kernel_is_annihilated(fi in 0usize..3, rows in 1usize..8, cols in 1usize..12, seed: u64) {
        let f = field(fi);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let c = random_code(&f, rows, cols, &mut rng);
        let k = kernel_basis(c.generator(), &f);
        prop_assert_eq!(k.nrows() + c.dim(), cols);
        prop_assert_eq!(rank(&k, &f), k.nrows());
        prop_assert!(c.generator().mul(&k.transpose(), &f).unwrap().is_zero());
    }

    #[test]
    fn dual_dimensions_add_up(fi in 0usize..3, n in 1usize..8, ell in 1usize..4, seed: u64) {
        let f = field(fi);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let ell = 2 * ell;
        let d = random_qc(&f, n, ell, 1, InnerProduct::Euclidean, &mut rng);
        let c = assemble_qc(&d);
        let mut kinds = vec![InnerProduct::Euclidean, InnerProduct::Symplectic];
        if f.hermitian_base().is_some() {
            kinds.push(InnerProduct::Hermitian);
        }
        for kind in kinds {
            let dual = dual_code(&c, kind).unwrap();
            prop_assert_eq!(c.dim() + dual.dim(), ell * n);
            for u in c.generator().rows() {
                for v in dual.generator().rows() {
                    prop_assert!(inner_product(u, v, kind, &f).unwrap().is_zero());
                }
            }
            // both hull routes agree or hull_dimension reports an error
            hull_dimension(&c, kind).unwrap();
        }
    }

    #[test]
    fn quasi_cyclic_structure(fi in 0usize..3, n in 1usize..9, ell in 1usize..4, h in 1usize..3, seed: u64) {
        let f = field(fi);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let d = random_qc(&f, n, ell, h, InnerProduct::Euclidean, &mut rng);
        let c = assemble_qc(&d);
        let ring = d.ring();
        for (i, gen) in d.generators().iter().enumerate() {
            for (j, fj) in gen.f.iter().enumerate() {
                let block = circulant(ring, &ring.mul(&gen.g, fj));
                for t in 0..n {
                    prop_assert_eq!(&c.generator().row(i * n + t)[j * n..(j + 1) * n], block.row(t));
                }
            }
        }
        for row in c.generator().rows() {
            prop_assert!(c.contains(&block_shift(row, n)).unwrap());
        }
    }

    #[test]
    fn distribution_ignores_basis_choice(fi in 0usize..3, rows in 1usize..6, cols in 2usize..14, seed: u64) {
        let f = field(fi);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let cols = cols & !1;
        let c = random_code(&f, rows, cols, &mut rng);
        let reduced = LinearCode::new(f.clone(), c.basis());
        for kind in [WeightKind::Hamming, WeightKind::Symplectic] {
            let a = weight_distribution(&c, kind, 1 << 20).unwrap();
            let b = weight_distribution(&reduced, kind, 1 << 20).unwrap();
            prop_assert_eq!(&a, &b);
            prop_assert_eq!(a.counts.get(&0), Some(&1));
            prop_assert_eq!(a.total(), (f.order() as u128).pow(c.dim() as u32));
            for (&w, &cnt) in &a.counts {
                if w > 0 {
                    prop_assert_eq!(cnt % (f.order() as u64 - 1), 0);
                }
            }
        }
    }
}
