//! Cross-checks against brute force and counting arguments.

use std::collections::BTreeSet;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use qclcd_core::code::{assemble_qc, LinearCode, QcDescriptor, QcGenerator};
use qclcd_core::lcd::{check_1gen, check_pairwise, hull_dimension, pairwise_oracle, OracleMode};
use qclcd_core::linalg::{inner_product, Matrix};
use qclcd_core::metrics::{min_distance_bz, min_distance_exhaustive, WeightKind};
use qclcd_core::polyring::{expand, is_irreducible, is_self_reciprocal, Poly, Reciprocity, Ring};
use qclcd_core::search::{reverify, run_search, GChoice, Sampling, SearchConfig, SearchPlan, TrialOutcome};
use qclcd_core::{Elem, Field, InnerProduct};

fn gf(q: u32) -> Arc<Field> {
    Arc::new(Field::new(q).unwrap())
}

fn random_code(f: &Arc<Field>, rows: usize, cols: usize, rng: &mut ChaCha8Rng) -> LinearCode {
    let rows: Vec<Vec<Elem>> = (0..rows)
        .map(|_| (0..cols).map(|_| f.elem(rng.gen_range(0..f.order() as u64)).unwrap()).collect())
        .collect();
    LinearCode::new(f.clone(), Matrix::from_rows(&rows, cols).unwrap())
}

/// Every codeword of a code given by independent rows.
fn codewords(c: &LinearCode) -> Vec<Vec<Elem>> {
    let f = c.field();
    let basis = c.basis();
    let q = f.order() as u64;
    let mut out = Vec::new();
    for mut idx in 0..q.pow(c.dim() as u32) {
        let mut v = vec![Elem::ZERO; c.length()];
        for row in basis.rows() {
            let a = f.elem(idx % q).unwrap();
            idx /= q;
            for (x, &y) in v.iter_mut().zip(row) {
                *x = f.add(*x, f.mul(a, y));
            }
        }
        out.push(v);
    }
    out
}

#[test]
fn hull_matches_brute_force() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for trial in 0..150 {
        let (q, rows, cols) = match trial % 3 {
            0 => (2, 4, 10),
            1 => (3, 3, 8),
            _ => (4, 3, 8),
        };
        let f = gf(q);
        let c = random_code(&f, rows, cols, &mut rng);
        let mut kinds = vec![InnerProduct::Euclidean, InnerProduct::Symplectic];
        if q == 4 {
            kinds.push(InnerProduct::Hermitian);
        }
        let words = codewords(&c);
        for kind in kinds {
            let in_hull = words
                .iter()
                .filter(|u| words.iter().all(|v| inner_product(u, v, kind, &f).unwrap().is_zero()))
                .count();
            let hull = hull_dimension(&c, kind).unwrap();
            assert_eq!((q as usize).pow(hull as u32), in_hull, "trial {trial} {kind:?}");
            // LCD exactly when every nonzero codeword meets some generator row
            let every_word_meets_a_row = words.iter().filter(|u| u.iter().any(|x| !x.is_zero())).all(|u| {
                c.generator().rows().any(|row| !inner_product(u, row, kind, &f).unwrap().is_zero())
            });
            assert_eq!(hull == 0, every_word_meets_a_row);
        }
    }
}

fn cyclotomic_coset_sizes(q: u64, n: u64) -> Vec<usize> {
    let mut seen = vec![false; n as usize];
    let mut sizes = Vec::new();
    for s in 0..n {
        if seen[s as usize] {
            continue;
        }
        let mut x = s;
        let mut size = 0;
        while !seen[x as usize] {
            seen[x as usize] = true;
            size += 1;
            x = x * q % n;
        }
        sizes.push(size);
    }
    sizes.sort();
    sizes
}

#[test]
fn factor_degrees_match_cyclotomic_cosets() {
    for q in [2u32, 3, 4, 5, 7, 8, 9] {
        for n in 1..=30usize {
            let r = Ring::new(gf(q), n).unwrap();
            if !r.is_semisimple() {
                continue;
            }
            let fs = r.factor_modulus().unwrap();
            let mut degs: Vec<usize> = fs.iter().map(|x| x.poly.degree().unwrap()).collect();
            degs.sort();
            assert_eq!(degs, cyclotomic_coset_sizes(q as u64, n as u64), "q={q} n={n}");
            assert!(fs.iter().all(|x| x.multiplicity == 1));
        }
    }
}

/// All divisors from subsets of the factor multiset, then filtered.
fn brute_force_divisors(r: &Ring, kind: Reciprocity) -> Vec<Poly> {
    let f = r.field();
    let fs = r.factor_modulus().unwrap();
    let mut out = BTreeSet::new();
    for mask in 0u32..(1 << fs.len()) {
        let mut d = Poly::one();
        for (i, fac) in fs.iter().enumerate() {
            if mask >> i & 1 == 1 {
                d = d.mul(&fac.poly, f);
            }
        }
        assert!(r.is_divisor(&d));
        if is_self_reciprocal(&d, kind, f).unwrap() {
            out.insert(d);
        }
    }
    out.into_iter().collect()
}

#[test]
fn factorization_and_divisors() {
    for q in [2u32, 3, 4] {
        for n in 1..=30usize {
            let r = Ring::new(gf(q), n).unwrap();
            let fs = r.factor_modulus().unwrap();
            assert_eq!(expand(&fs, r.field()), r.modulus(), "q={q} n={n}");
            for fac in &fs {
                assert!(fac.poly.is_monic() && is_irreducible(&fac.poly, r.field()).unwrap());
            }
            if !r.is_semisimple() {
                continue;
            }
            let mut kinds = vec![Reciprocity::Euclidean];
            if q == 4 {
                kinds.push(Reciprocity::Hermitian);
            }
            for kind in kinds {
                let mut fast = r.self_reciprocal_divisors(kind).unwrap();
                fast.sort();
                assert_eq!(fast, brute_force_divisors(&r, kind), "q={q} n={n} {kind:?}");
            }
        }
    }
}

#[test]
fn bz_matches_exhaustive() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for trial in 0..120 {
        let q = [2u32, 3, 4][trial % 3];
        let f = gf(q);
        let n = rng.gen_range(4..=20);
        let max_k = match q {
            2 => 10,
            3 => 7,
            _ => 6,
        };
        let k = rng.gen_range(1..=max_k.min(n));
        let c = random_code(&f, k, n, &mut rng);
        if c.dim() == 0 {
            continue;
        }
        let (d, _) = min_distance_exhaustive(&c, WeightKind::Hamming, 1 << 20).unwrap();
        let (b, stats) = min_distance_bz(&c, 1 << 30).unwrap();
        assert_eq!(b, d, "trial {trial}");
        assert!(stats.lower_bounds.windows(2).all(|w| w[0] <= w[1]));
    }
}

#[test]
fn pairwise_verdict_against_cross_intersections() {
    let r = Ring::new(gf(2), 7).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let gs = [Poly::from_exponents(&[0, 1, 3]), Poly::from_exponents(&[0, 1]), Poly::one()];
    for _ in 0..60 {
        let pick = |rng: &mut ChaCha8Rng| {
            let g = gs[rng.gen_range(0..gs.len())].clone();
            let f = (0..2)
                .map(|_| Poly::from_coeffs((0..7).map(|_| r.field().elem(rng.gen_range(0..2)).unwrap()).collect()))
                .collect();
            QcGenerator { g, f }
        };
        let (a, b) = (pick(&mut rng), pick(&mut rng));
        let pc = check_pairwise(&r, InnerProduct::Euclidean, &a, &b).unwrap();
        let code = |x: &QcGenerator| {
            assemble_qc(&QcDescriptor::new(r.clone(), 2, InnerProduct::Euclidean, vec![x.clone()]).unwrap())
        };
        let (ca, cb) = (code(&a), code(&b));
        let (x, y) = pairwise_oracle(&ca, &cb, InnerProduct::Euclidean).unwrap();
        if pc.holds {
            assert_eq!((x, y), (0, 0));
        }
        if !pc.same_generator || !pc.self_reciprocal {
            // different or non-reciprocal generators never pass
            assert!(!pc.holds);
        }
    }
}

#[test]
fn exhaustive_search_equals_filtered_brute_force() {
    let g = Poly::from_exponents(&[0, 1, 2]);
    let mut cfg = SearchConfig::new(gf(2), 3, 2, InnerProduct::Euclidean);
    cfg.g = GChoice::One(g.clone());
    cfg.sampling = Sampling::Exhaustive { max_degree: 1 };
    cfg.oracle = OracleMode::Always;
    let plan = SearchPlan::new(cfg.clone()).unwrap();
    let passed: BTreeSet<Vec<Poly>> = (0..plan.trials())
        .filter_map(|t| match plan.evaluate(t).unwrap() {
            TrialOutcome::Passed(r) => Some(r.descriptor.generators()[0].f.clone()),
            _ => None,
        })
        .collect();
    let r = Ring::new(gf(2), 3).unwrap();
    let mut brute = BTreeSet::new();
    for a in 0..4u64 {
        for b in 0..4u64 {
            let poly = |x: u64| Poly::from_coeffs(vec![r.field().elem(x & 1).unwrap(), r.field().elem(x >> 1).unwrap()]);
            let fs = vec![poly(a), poly(b)];
            let d = QcDescriptor::new(r.clone(), 2, InnerProduct::Euclidean, vec![QcGenerator { g: g.clone(), f: fs.clone() }]).unwrap();
            let c = assemble_qc(&d);
            if c.dim() > 0 && hull_dimension(&c, InnerProduct::Euclidean).unwrap() == 0 {
                brute.insert(fs);
            }
        }
    }
    assert_eq!(passed, brute);
    let state = run_search(cfg, || false).unwrap();
    let best = state.table.records().map(|r| (r.dim, r.distance.value)).collect::<Vec<_>>();
    // (111, 111) is self-orthogonal, so one block must vanish
    assert_eq!(best, vec![(1, 3)]);
}

#[test]
fn search_records_reverify() {
    let mut cfg = SearchConfig::new(gf(2), 13, 3, InnerProduct::Euclidean);
    cfg.sampling = Sampling::Random { trials: 500, seed: 1 };
    let state = run_search(cfg.clone(), || false).unwrap();
    assert!(state.mismatches.is_empty());
    assert!(!state.improvements.is_empty());
    for rec in &state.improvements {
        assert!(reverify(rec).unwrap());
        assert!(rec.verdict.theorem.holds);
    }
    let again = run_search(cfg, || false).unwrap();
    let key = |s: &qclcd_core::search::SearchState| s.improvements.iter().map(|r| (r.trial, r.dim, r.distance.value)).collect::<Vec<_>>();
    assert_eq!(key(&state), key(&again));
}

#[test]
fn reference_symplectic_code_passes_the_search_filter() {
    let d = qclcd_core::presets::example3();
    let v = check_1gen(&d, OracleMode::Never).unwrap();
    assert!(v.theorem.holds);
    let mut cfg = SearchConfig::new(gf(2), 21, 2, InnerProduct::Symplectic);
    cfg.g = GChoice::One(d.generators()[0].g.clone());
    cfg.sampling = Sampling::Random { trials: 40, seed: 7 };
    let state = run_search(cfg, || false).unwrap();
    assert!(state.mismatches.is_empty());
    let rec = state.table.get(18).expect("a k = 18 record");
    assert!(rec.distance.value >= 6);
}
