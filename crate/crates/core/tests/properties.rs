use dchase_core::genrand::{
    random_cross, random_exact_complex, random_exact_grid, random_hom_instance, random_invertible, random_matrix,
    random_shape, random_snake_input, GenConfig,
};
use dchase_core::grid::{
    ccl_homology_dims, ccl_homology_dims_direct, kcl_homology_dims, kcl_homology_iso, kernel_complex_left,
    kernel_complex_top,
};
use dchase_core::io;
use dchase_core::quiverhom::{additivity_check, hom_grid};
use dchase_core::snake::{snake, snake_via_grids};
use dchase_core::subspace::{image, kernel, quotient};
use dchase_core::{Field, LinearMap, Orientation, Relation};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn field() -> impl Strategy<Value = Field> {
    prop_oneof![
        Just(Field::Prime(2)),
        Just(Field::Prime(3)),
        Just(Field::Prime(5)),
        Just(Field::Prime(7)),
        Just(Field::Rationals),
    ]
}

fn grid_config(seed: u64, f: Field, orientation: Orientation) -> GenConfig {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let shape = random_shape(&mut rng, 4, 4);
    GenConfig::new(seed, f, 4).with_shape(shape).with_orientation(orientation)
}

fn matrix(seed: u64, f: Field, rows: usize, cols: usize) -> LinearMap {
    random_matrix(&mut ChaCha8Rng::seed_from_u64(seed), f, rows, cols)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn homology_is_invariant_under_base_change(seed in any::<u64>(), f in field()) {
        let g = random_exact_grid(&grid_config(seed, f, Orientation::Kernel)).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 1);
        let changes: Vec<Vec<LinearMap>> = g
            .spaces()
            .iter()
            .map(|row| row.iter().map(|&d| random_invertible(&mut rng, f, d).0).collect())
            .collect();
        let h = g.conjugate(&changes).unwrap();
        prop_assert!(h.is_valid());
        let (a, b) = (kcl_homology_dims(&g).unwrap(), kcl_homology_dims(&h).unwrap());
        prop_assert_eq!(&a.top, &b.top);
        prop_assert_eq!(&a.left, &b.left);
        prop_assert!(b.agree());
        for &n in &b.admissible {
            let iso = kcl_homology_iso(&h, n).unwrap();
            prop_assert!(iso.is_invertible());
        }
    }

    #[test]
    fn dualize_is_an_involution(seed in any::<u64>(), f in field()) {
        for orientation in [Orientation::Kernel, Orientation::Cokernel] {
            let g = random_exact_grid(&grid_config(seed, f, orientation)).unwrap();
            let d = g.dualize();
            prop_assert_eq!(d.orientation(), orientation.flip());
            prop_assert!(d.is_valid());
            prop_assert_eq!(d.dualize(), g);
        }
    }

    #[test]
    fn cokernel_side_by_duality_matches_direct(seed in any::<u64>(), f in field()) {
        let g = random_exact_grid(&grid_config(seed, f, Orientation::Cokernel)).unwrap();
        let dual = ccl_homology_dims(&g).unwrap();
        prop_assert_eq!(&dual, &ccl_homology_dims_direct(&g).unwrap());
        prop_assert!(dual.agree());
    }

    #[test]
    fn transpose_swaps_top_and_left(seed in any::<u64>(), f in field()) {
        let g = random_exact_grid(&grid_config(seed, f, Orientation::Kernel)).unwrap();
        let t = g.transpose();
        prop_assert_eq!(kernel_complex_top(&g).unwrap().homology_dims().unwrap(), kernel_complex_left(&t).unwrap().homology_dims().unwrap());
        prop_assert_eq!(kernel_complex_left(&g).unwrap().homology_dims().unwrap(), kernel_complex_top(&t).unwrap().homology_dims().unwrap());
    }

    #[test]
    fn generators_are_deterministic(seed in any::<u64>(), f in field()) {
        let cfg = grid_config(seed, f, Orientation::Kernel);
        prop_assert_eq!(random_exact_grid(&cfg).unwrap(), random_exact_grid(&cfg).unwrap());
        prop_assert_eq!(random_exact_complex(&cfg, 5).unwrap(), random_exact_complex(&cfg, 5).unwrap());
        let (a, b) = (random_cross(&cfg).unwrap(), random_cross(&cfg).unwrap());
        prop_assert_eq!(io::cross_to_json(&a), io::cross_to_json(&b));
        let (a, b) = (random_snake_input(&cfg).unwrap(), random_snake_input(&cfg).unwrap());
        prop_assert_eq!(io::snake_to_json(&a), io::snake_to_json(&b));
    }

    #[test]
    fn exact_complexes_survive_base_change(seed in any::<u64>(), f in field(), len in 2usize..7) {
        let c = random_exact_complex(&GenConfig::new(seed, f, 4), len).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let changes: Vec<LinearMap> = c.dims().iter().map(|&d| random_invertible(&mut rng, f, d).0).collect();
        let d = c.conjugate(&changes).unwrap();
        prop_assert_eq!(c.homology_dims().unwrap(), d.homology_dims().unwrap());
        for i in 1..len - 1 {
            prop_assert!(d.is_exact_at(i).unwrap());
        }
    }

    #[test]
    fn rank_nullity_and_quotients(seed in any::<u64>(), f in field(), rows in 0usize..6, cols in 0usize..6) {
        let m = matrix(seed, f, rows, cols);
        prop_assert_eq!(kernel(&m).dim() + image(&m).dim(), cols);
        prop_assert_eq!(image(&m).dim(), m.rank());
        prop_assert_eq!(m.transpose().rank(), m.rank());
        let q = quotient(rows, &image(&m)).unwrap();
        prop_assert!((&q.projection * &q.section).is_identity());
        prop_assert_eq!(kernel(&q.projection), image(&m));
        prop_assert!((&q.projection * &m).is_zero());
    }

    #[test]
    fn subspace_lattice_dimensions(seed in any::<u64>(), f in field(), n in 0usize..6) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (ka, kb) = (rng.gen_range(0..=n), rng.gen_range(0..=n));
        let u = image(&random_matrix(&mut rng, f, n, ka));
        let w = image(&random_matrix(&mut rng, f, n, kb));
        let (s, i) = (u.sum(&w).unwrap(), u.intersect(&w).unwrap());
        prop_assert_eq!(s.dim() + i.dim(), u.dim() + w.dim());
        prop_assert!(i.leq(&u).unwrap() && i.leq(&w).unwrap());
        prop_assert!(u.leq(&s).unwrap() && w.leq(&s).unwrap());
        prop_assert_eq!(u.sum(&u).unwrap(), u.clone());
    }

    #[test]
    fn relations_form_a_category(seed in any::<u64>(), f in field(), d in prop::array::uniform4(0usize..4)) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut rel = |rows: usize, cols: usize| {
            let m = random_matrix(&mut rng, f, rows, cols);
            if rng.gen_bool(0.5) { Relation::graph(&m) } else { Relation::graph(&m.transpose()).inverse() }
        };
        let (r, s, t) = (rel(d[1], d[0]), rel(d[2], d[1]), rel(d[3], d[2]));
        let left = t.compose(&s).unwrap().compose(&r).unwrap();
        let right = t.compose(&s.compose(&r).unwrap()).unwrap();
        prop_assert_eq!(&left, &right);
        prop_assert_eq!(s.compose(&r).unwrap().inverse(), r.inverse().compose(&s.inverse()).unwrap());
        prop_assert_eq!(r.inverse().inverse(), r.clone());
        let (g1, g2) = (matrix(seed, f, d[1], d[0]), matrix(seed ^ 2, f, d[2], d[1]));
        prop_assert_eq!(Relation::graph(&g2).compose(&Relation::graph(&g1)).unwrap(), Relation::graph(&(&g2 * &g1)));
    }

    #[test]
    fn snake_routes_agree(seed in any::<u64>(), f in field()) {
        let input = random_snake_input(&GenConfig::new(seed, f, 3)).unwrap();
        let (a, b) = (snake(&input).unwrap(), snake_via_grids(&input).unwrap());
        prop_assert!(a.holds());
        prop_assert!(b.holds());
        prop_assert_eq!(&a.delta, &b.delta);
        prop_assert_eq!(a.six_term.homology_dims().unwrap(), b.six_term.homology_dims().unwrap());
        prop_assert_eq!(a.f_monic_iff.0, a.f_monic_iff.1);
        prop_assert_eq!(a.gp_epi_iff.0, a.gp_epi_iff.1);
    }

    #[test]
    fn hom_grids_satisfy_the_hypotheses(seed in any::<u64>(), f in prop_oneof![Just(Field::Prime(2)), Just(Field::Prime(3))]) {
        let (a, e) = random_hom_instance(&GenConfig::new(seed, f, 2)).unwrap();
        prop_assert!(hom_grid(&a, &e).unwrap().is_valid());
        let r = additivity_check(&a, &e).unwrap();
        prop_assert_eq!(&r.right, &r.bottom);
        prop_assert_eq!(r.defect, r.e_a as i64 - r.e_b as i64 + r.e_c as i64);
    }

    #[test]
    fn json_roundtrips(seed in any::<u64>(), f in field()) {
        let g = random_exact_grid(&grid_config(seed, f, Orientation::Cokernel)).unwrap();
        prop_assert_eq!(io::grid_from_json(&io::grid_to_json(&g), None).unwrap(), g);
        let s = random_snake_input(&GenConfig::new(seed, f, 3)).unwrap();
        let back = io::snake_from_json(&io::snake_to_json(&s), None).unwrap();
        prop_assert_eq!(io::snake_to_json(&back), io::snake_to_json(&s));
        let c = random_exact_complex(&GenConfig::new(seed, f, 3), 4).unwrap();
        prop_assert_eq!(io::complex_from_json(&io::complex_to_json(&c), None).unwrap(), c);
    }
}
