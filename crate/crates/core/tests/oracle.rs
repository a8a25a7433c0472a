//! Linear algebra and relation operations against exhaustive enumeration
//! over F_2 in ambient dimension at most 3.

use std::collections::{BTreeMap, BTreeSet};

use dchase_core::brute::{self, BitMatrix, Bits};
use dchase_core::genrand::random_matrix;
use dchase_core::matrix::rref;
use dchase_core::subspace::{cokernel, image, kernel};
use dchase_core::suite::Suite;
use dchase_core::{ChainComplex, Field, LinearMap, Subspace};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const F2: Field = Field::Prime(2);

fn small_matrix(rng: &mut ChaCha8Rng) -> LinearMap {
    let (r, c) = (rng.gen_range(0..=3), rng.gen_range(0..=3));
    random_matrix(rng, F2, r, c)
}

#[test]
fn every_operation_matches_enumeration_on_600_instances() {
    let seeds = 600;
    let failures: Vec<_> = (0..seeds)
        .map(|s| Suite::Oracle.check_seed(s, 200))
        .filter_map(|o| o.failure.map(|f| (o.seed, f)))
        .collect();
    assert!(failures.is_empty(), "{failures:?}");
}

#[test]
fn reduced_bases_are_canonical() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut by_set: BTreeMap<(usize, BTreeSet<Bits>), Subspace> = BTreeMap::new();
    for _ in 0..600 {
        let n = rng.gen_range(0..=3);
        let k = rng.gen_range(0..=4);
        let gens: Vec<Bits> = (0..k).map(|_| rng.gen_range(0..1 << n)).collect();
        let s = Subspace::span(F2, n, gens.iter().map(|&g| brute::from_bits(n, g)));
        let set = brute::span_set(&gens);
        assert_eq!(brute::subspace_set(&s), set);
        assert_eq!(1 << s.dim(), set.len());
        let basis = s.basis();
        let r = rref(basis);
        assert_eq!(&r.reduced, basis, "basis is already reduced");
        assert_eq!(r.rank, s.dim());
        // equal sets have identical bases
        if let Some(prev) = by_set.insert((n, set), s.clone()) {
            assert_eq!(prev, s);
        }
    }
    assert!(by_set.len() > 20);
}

#[test]
fn cokernels_match_cosets() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..500 {
        let m = small_matrix(&mut rng);
        let q = cokernel(&m);
        let im = brute::image_set(&m);
        assert_eq!(1usize << q.dim(), (1usize << m.rows()) / im.len());
        let p = BitMatrix::new(&q.projection);
        for x in brute::all(m.rows()) {
            assert_eq!(p.apply(x) == 0, im.contains(&x));
        }
        let s = BitMatrix::new(&q.section);
        for c in brute::all(q.dim()) {
            assert_eq!(p.apply(s.apply(c)), c);
        }
    }
}

#[test]
fn complex_homology_matches_enumeration() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..500 {
        let d1 = small_matrix(&mut rng);
        let q = cokernel(&d1);
        let rows = rng.gen_range(0..=3);
        let after = random_matrix(&mut rng, F2, rows, q.dim());
        let d2 = &after * &q.projection;
        let c = ChainComplex::from_maps(vec![d1.clone(), d2.clone()]).unwrap();
        assert!(c.is_complex());
        let ker = brute::kernel_set(&d2);
        let im = brute::image_set(&d1);
        assert!(im.is_subset(&ker));
        let dims = c.homology_dims().unwrap();
        assert_eq!(1usize << dims[1], ker.len() / im.len());
        assert_eq!(1usize << dims[0], brute::kernel_set(&d1).len());
        assert_eq!(1usize << dims[2], (1usize << d2.rows()) / brute::image_set(&d2).len());
        assert_eq!(c.is_exact_at(1).unwrap(), ker == im);
        assert_eq!(brute::subspace_set(&kernel(&d2)), ker);
        assert_eq!(brute::subspace_set(&image(&d1)), im);
    }
}
