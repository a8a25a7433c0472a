//! Seeded property sweeps. Each suite checks one family of statements on a
//! run of seeds; one seed is one instance. Suites are pure, so seeds can be
//! checked in any order (or in parallel) and collected by seed.

use std::collections::BTreeMap;
use std::panic::{catch_unwind, AssertUnwindSafe};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::brute::{self, Bits};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::genrand::{
    random_cross, random_exact_grid, random_hom_instance, random_shape, random_snake_input, GenConfig,
    PRNG_ID,
};
use crate::grid::{
    ccl_homology_dims, ccl_homology_dims_direct, ccl_homology_iso, corollary_check, kcl_homology_dims,
    kcl_homology_iso, kcl_homology_iso_with, Grid, Orientation, StaircaseShape, WitnessChoice,
};
use crate::matrix::LinearMap;
use crate::quiverhom::{
    additivity_check, disjoint_instance, functor_dim, hom_grid, hom_space, summand_instance,
};
use crate::relation::{verify_cross_lemma, Relation};
use crate::snake::{snake, snake_via_grids, SnakeInput, SnakeResult};
use crate::subspace::{image, induced_map, kernel, quotient, Subspace};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    Kcl,
    Ccl,
    Cross,
    Corollary,
    Snake,
    Hom,
    Oracle,
}

impl Suite {
    pub const ALL: [Suite; 7] =
        [Suite::Kcl, Suite::Ccl, Suite::Cross, Suite::Corollary, Suite::Snake, Suite::Hom, Suite::Oracle];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Kcl => "kcl",
            Suite::Ccl => "ccl",
            Suite::Cross => "cross",
            Suite::Corollary => "corollary",
            Suite::Snake => "snake",
            Suite::Hom => "hom",
            Suite::Oracle => "oracle",
        }
    }

    /// Instances at the reference size of 200 seeds.
    fn reference_count(self) -> u64 {
        match self {
            Suite::Kcl | Suite::Ccl | Suite::Corollary | Suite::Snake => 200,
            Suite::Cross => 100,
            Suite::Hom => 50,
            Suite::Oracle => 500,
        }
    }

    /// Instances for a sweep of `seeds` seeds, scaled from the reference size.
    pub fn count(self, seeds: u64) -> u64 {
        (self.reference_count() * seeds).div_ceil(200)
    }

    pub fn check_seed(self, seed: u64, seeds: u64) -> SeedOutcome {
        let mut tags = BTreeMap::new();
        let run = catch_unwind(AssertUnwindSafe(|| match self {
            Suite::Kcl => kcl_seed(seed, seeds, &mut tags),
            Suite::Ccl => ccl_seed(seed, seeds, &mut tags),
            Suite::Cross => cross_seed(seed, &mut tags),
            Suite::Corollary => corollary_seed(seed, &mut tags),
            Suite::Snake => snake_seed(seed, &mut tags),
            Suite::Hom => hom_seed(seed, &mut tags),
            Suite::Oracle => oracle_seed(seed, &mut tags),
        }));
        let failure = match run {
            Ok(Ok(())) => None,
            Ok(Err(e)) => Some(e.to_string()),
            Err(panic) => Some(format!(
                "panic: {}",
                panic
                    .downcast_ref::<String>()
                    .cloned()
                    .or_else(|| panic.downcast_ref::<&str>().map(|s| s.to_string()))
                    .unwrap_or_default()
            )),
        };
        SeedOutcome { seed, failure, tags }
    }

    /// Runs the suite sequentially.
    pub fn run(self, seeds: u64) -> SuiteReport {
        let outcomes = (0..self.count(seeds)).map(|s| self.check_seed(s, seeds)).collect();
        SuiteReport::collect(self, seeds, outcomes)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeedOutcome {
    pub seed: u64,
    pub failure: Option<String>,
    pub tags: BTreeMap<String, u64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub instances: u64,
    pub failures: Vec<(u64, String)>,
    /// Sums of the per-seed tags.
    pub stats: BTreeMap<String, u64>,
    /// Suite-level checks beyond the per-seed ones.
    pub checks: Vec<(String, bool)>,
}

impl SuiteReport {
    /// `outcomes` must be in seed order.
    pub fn collect(suite: Suite, seeds: u64, outcomes: Vec<SeedOutcome>) -> SuiteReport {
        let mut stats = BTreeMap::new();
        let mut failures = Vec::new();
        for o in &outcomes {
            for (k, v) in &o.tags {
                *stats.entry(k.clone()).or_insert(0) += v;
            }
            if let Some(f) = &o.failure {
                failures.push((o.seed, f.clone()));
            }
        }
        let checks = suite_checks(suite, seeds, &stats);
        SuiteReport { suite, instances: outcomes.len() as u64, failures, stats, checks }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.checks.iter().all(|(_, ok)| *ok)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "suite": self.suite.name(),
            "instances": self.instances,
            "failed": self.failures.len(),
            "passed": self.passed(),
            "failures": self.failures.iter().take(20).map(|(s, m)| json!({"seed": s, "error": m})).collect::<Vec<_>>(),
            "stats": self.stats,
            "checks": self.checks.iter().map(|(n, ok)| json!({"check": n, "holds": ok})).collect::<Vec<_>>(),
        })
    }
}

/// The whole self-test as one JSON document.
pub fn selftest_json(seeds: u64, reports: &[SuiteReport]) -> Value {
    json!({
        "prng": PRNG_ID,
        "seeds": seeds,
        "passed": reports.iter().all(SuiteReport::passed),
        "suites": reports.iter().map(SuiteReport::to_json).collect::<Vec<_>>(),
    })
}

fn suite_checks(suite: Suite, seeds: u64, stats: &BTreeMap<String, u64>) -> Vec<(String, bool)> {
    match suite {
        Suite::Snake => {
            let need = (10 * seeds).div_ceil(200);
            ["monic_epi", "monic_not_epi", "not_monic_epi", "not_monic_not_epi"]
                .iter()
                .map(|k| {
                    let n = stats.get(*k).copied().unwrap_or(0);
                    (format!("{k} occurs {n} >= {need} times"), n >= need)
                })
                .collect()
        }
        Suite::Hom => vec![
            ("summand instance: flag set, defect 1".to_string(), constructed_summand().unwrap_or(false)),
            ("disjoint instance: defect 0".to_string(), constructed_disjoint().unwrap_or(false)),
        ],
        _ => Vec::new(),
    }
}

fn fail(what: impl Into<String>) -> Error {
    Error::TheoremViolation(what.into())
}

fn ensure(cond: bool, what: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(fail(what()))
    }
}

fn tag(tags: &mut BTreeMap<String, u64>, key: &str) {
    *tags.entry(key.to_string()).or_insert(0) += 1;
}

/// The grid shared by the KCL and CCL suites: alternating `F_2` and `F_5`,
/// a random staircase inside `5 x 5`, spaces of dimension at most 6.
pub fn sweep_grid_config(seed: u64) -> GenConfig {
    let field = if seed % 2 == 0 { Field::Prime(2) } else { Field::Prime(5) };
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed_5a9e);
    let shape = random_shape(&mut rng, 5, 5);
    GenConfig::new(seed, field, 6).with_shape(shape)
}

/// Small `F_2` grids for the enumeration cross-checks.
pub fn small_grid_config(seed: u64, orientation: Orientation) -> GenConfig {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x0dd_ba11);
    let shape = random_shape(&mut rng, 4, 4);
    GenConfig::new(seed, Field::Prime(2), 3).with_shape(shape).with_orientation(orientation)
}

fn require_valid(g: &Grid) -> Result<()> {
    let report = g.validate();
    ensure(report.is_valid(), || format!("generated grid is invalid: {report}"))
}

fn kcl_seed(seed: u64, seeds: u64, tags: &mut BTreeMap<String, u64>) -> Result<()> {
    let g = random_exact_grid(&sweep_grid_config(seed))?;
    require_valid(&g)?;
    let dims = kcl_homology_dims(&g)?;
    ensure(dims.agree(), || format!("top {:?} vs left {:?}", dims.top, dims.left))?;
    for &n in &dims.admissible {
        let iso = kcl_homology_iso(&g, n)?;
        let m = &iso.matrix;
        ensure(m.rows() == m.cols() && m.rank() == m.rows(), || format!("position {n}: not full rank"))?;
        let shifted = kcl_homology_iso_with(&g, n, WitnessChoice::Shifted(seed))?;
        ensure(shifted.matrix == iso.matrix, || format!("position {n}: depends on the witness"))?;
        tags.insert("positions".into(), tags.get("positions").unwrap_or(&0) + 1);
        if m.rows() > 0 {
            tag(tags, "nonzero_isos");
        }
    }
    if seed < Suite::Kcl.count(seeds) / 4 {
        let small = random_exact_grid(&small_grid_config(seed, Orientation::Kernel))?;
        let d = kcl_homology_dims(&small)?;
        let (top, left) = brute::kernel_homology_by_enumeration(&small);
        ensure(d.top == top && d.left == left, || {
            format!("enumeration gives {top:?}/{left:?}, computed {:?}/{:?}", d.top, d.left)
        })?;
        tag(tags, "enumerated");
    }
    Ok(())
}

fn ccl_seed(seed: u64, seeds: u64, tags: &mut BTreeMap<String, u64>) -> Result<()> {
    let g = random_exact_grid(&sweep_grid_config(seed).with_orientation(Orientation::Cokernel))?;
    require_valid(&g)?;
    let dims = ccl_homology_dims(&g)?;
    ensure(dims.agree(), || format!("right {:?} vs bottom {:?}", dims.right, dims.bottom))?;
    for &n in &dims.admissible {
        let iso = ccl_homology_iso(&g, n)?;
        ensure(iso.is_invertible(), || format!("position {n}: not invertible"))?;
        if iso.matrix.rows() > 0 {
            tag(tags, "nonzero_isos");
        }
    }
    if seed < Suite::Ccl.count(seeds) / 4 {
        let small = random_exact_grid(&small_grid_config(seed, Orientation::Cokernel))?;
        let dual = ccl_homology_dims(&small)?;
        let direct = ccl_homology_dims_direct(&small)?;
        let (right, bottom) = brute::cokernel_homology_by_enumeration(&small);
        ensure(dual == direct, || format!("duality {dual:?} vs direct {direct:?}"))?;
        ensure(direct.right == right && direct.bottom == bottom, || {
            format!("enumeration gives {right:?}/{bottom:?}, computed {direct:?}")
        })?;
        tag(tags, "direct_compared");
    }
    Ok(())
}

fn cross_seed(seed: u64, tags: &mut BTreeMap<String, u64>) -> Result<()> {
    let cfg = if seed % 2 == 0 {
        GenConfig::new(seed, Field::Prime(2), 3)
    } else {
        GenConfig::new(seed, Field::Prime(5), 4)
    };
    let report = verify_cross_lemma(&random_cross(&cfg)?)?;
    ensure(report.all_hold(), || format!("verdicts {:?}, enumerated {:?}", report.verdicts(), report.enumerated))?;
    if report.enumerated.is_some() {
        tag(tags, "enumerated");
    }
    Ok(())
}

fn corollary_seed(seed: u64, tags: &mut BTreeMap<String, u64>) -> Result<()> {
    let field = if seed % 2 == 0 { Field::Prime(2) } else { Field::Prime(5) };
    let gamma = StaircaseShape::new(vec![3, 3, 2])?;
    let g = if seed % 4 == 3 {
        tag(tags, "truncated");
        let full = random_exact_grid(&GenConfig::new(seed, field, 4).with_shape(StaircaseShape::rectangle(3, 3)?))?;
        full.restrict(&gamma)?
    } else {
        random_exact_grid(&GenConfig::new(seed, field, 4).with_shape(gamma))?
    };
    require_valid(&g)?;
    let r = corollary_check(&g)?;
    ensure(r.holds, || format!("top {:?} vs left {:?}", r.top, r.left))?;
    if r.top[..2].iter().any(|&d| d > 0) {
        tag(tags, "nonzero_homology");
    }
    Ok(())
}

/// `graph(delta)` as pairs `(c, least element of the class)`, for
/// comparison with the element chase.
pub fn delta_pairs(input: &SnakeInput, r: &SnakeResult) -> std::collections::BTreeSet<(Bits, Bits)> {
    let ker_gamma = kernel(&input.gamma);
    let cok_alpha = quotient(input.alpha.rows(), &image(&input.alpha)).expect("image lives in A'");
    let im_alpha = brute::image_set(&input.alpha);
    let incl = ker_gamma.inclusion();
    brute::all(ker_gamma.dim())
        .map(|x| {
            let v = brute::from_bits(ker_gamma.dim(), x);
            let c = brute::to_bits(&incl.apply(&v));
            let a = cok_alpha.representative(&r.delta.apply(&v));
            (c, brute::coset_min(brute::to_bits(&a), &im_alpha))
        })
        .collect()
}

fn snake_seed(seed: u64, tags: &mut BTreeMap<String, u64>) -> Result<()> {
    let cfg = if seed % 4 == 3 {
        GenConfig::new(seed, Field::Prime(3), 3)
    } else {
        GenConfig::new(seed, Field::Prime(2), 2)
    };
    let input = random_snake_input(&cfg)?;
    let chase = snake(&input)?;
    let grids = snake_via_grids(&input)?;
    for r in [&chase, &grids] {
        ensure(r.holds(), || format!("{:?} route: verdicts {:?}", r.route, r.verdicts()))?;
    }
    ensure(chase.six_term.homology_dims()? == grids.six_term.homology_dims()?, || {
        "routes disagree on homology".into()
    })?;
    ensure(chase.delta == grids.delta, || format!("routes disagree on delta:\n{}\n{}", chase.delta, grids.delta))?;
    let key = match (chase.f_monic_iff.0, chase.gp_epi_iff.0) {
        (true, true) => "monic_epi",
        (true, false) => "monic_not_epi",
        (false, true) => "not_monic_epi",
        (false, false) => "not_monic_not_epi",
    };
    tag(tags, key);
    let (a, b, c, ap, bp, cp) = input.dims();
    if cfg.field == Field::Prime(2) && a + b + c + ap + bp + cp <= 8 {
        let expected = brute::snake_delta_set(&input);
        ensure(delta_pairs(&input, &chase) == expected, || "delta differs from the element chase".into())?;
        tag(tags, "enumerated");
    }
    Ok(())
}

fn hom_seed(seed: u64, tags: &mut BTreeMap<String, u64>) -> Result<()> {
    let (aseq, eseq) = random_hom_instance(&GenConfig::new(seed, Field::Prime(2), 2))?;
    let g = hom_grid(&aseq, &eseq)?;
    require_valid(&g)?;
    let report = additivity_check(&aseq, &eseq)?;
    ensure(report.ccl_agree && report.right == report.bottom, || {
        format!("right {:?} vs bottom {:?}", report.right, report.bottom)
    })?;
    for (name, m) in [("A", &aseq.a), ("B", &aseq.b), ("C", &aseq.c)] {
        let d = functor_dim(&eseq, m)?;
        let e = brute::functor_dim_by_enumeration(&eseq, m);
        ensure(d == e, || format!("E({name}) = {d}, enumeration gives {e}"))?;
        for w in [&eseq.x, &eseq.y, &eseq.z] {
            let h = hom_space(w, m)?.dim();
            let count = brute::hom_set(w, m).len();
            ensure(count == 1 << h, || format!("Hom(-, {name}) has {count} elements, dim {h}"))?;
        }
    }
    if report.defect != 0 {
        tag(tags, "nonzero_defect");
    }
    if report.summand.flag {
        tag(tags, "summand");
    }
    Ok(())
}

fn constructed_summand() -> Result<bool> {
    let (aseq, eseq) = summand_instance();
    let r = additivity_check(&aseq, &eseq)?;
    Ok(r.summand.flag && r.defect == 1 && r.ccl_agree)
}

fn constructed_disjoint() -> Result<bool> {
    let (aseq, eseq) = disjoint_instance();
    let r = additivity_check(&aseq, &eseq)?;
    Ok(r.defect == 0 && r.ccl_agree)
}

fn random_f2_matrix(rng: &mut ChaCha8Rng, max: usize) -> LinearMap {
    let (r, c) = (rng.gen_range(0..=max), rng.gen_range(0..=max));
    let data: Vec<i64> = (0..r * c).map(|_| rng.gen_range(0..2)).collect();
    LinearMap::from_ints(Field::Prime(2), r, c, &data)
}

fn random_f2_subspace(rng: &mut ChaCha8Rng, n: usize) -> Subspace {
    let k = rng.gen_range(0..=n);
    let gens = (0..k).map(|_| brute::from_bits(n, rng.gen_range(0..1 << n)));
    Subspace::span(Field::Prime(2), n, gens)
}

/// One instance of every linear-algebra and relation operation, each
/// checked against enumeration over `F_2` in ambient dimension at most 3.
fn oracle_seed(seed: u64, tags: &mut BTreeMap<String, u64>) -> Result<()> {
    use std::collections::BTreeSet;
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x0a_c1e);
    let m = random_f2_matrix(&mut rng, 3);
    let bits = brute::BitMatrix::new(&m);
    let (rows, cols) = (m.rows(), m.cols());

    ensure(brute::subspace_set(&kernel(&m)) == brute::kernel_set(&m), || "kernel".into())?;
    ensure(brute::subspace_set(&image(&m)) == brute::image_set(&m), || "image".into())?;
    ensure(1 << m.rank() == brute::image_set(&m).len(), || "rank".into())?;
    let target = rng.gen_range(0..1 << rows);
    let solvable = brute::all(cols).any(|x| bits.apply(x) == target);
    match m.solve(&brute::from_bits(rows, target)) {
        Some(x) => ensure(bits.apply(brute::to_bits(&x)) == target, || "solve".into())?,
        None => ensure(!solvable, || "solve missed a solution".into())?,
    }
    if rows == cols {
        let invertible = brute::kernel_set(&m).len() == 1;
        ensure(m.inverse().is_some() == invertible, || "inverse exists".into())?;
        if let Some(inv) = m.inverse() {
            let ib = brute::BitMatrix::new(&inv);
            ensure(brute::all(cols).all(|x| ib.apply(bits.apply(x)) == x), || "inverse".into())?;
        }
    }

    // subspace operations in one ambient space
    let n = rng.gen_range(0..=3);
    let u = random_f2_subspace(&mut rng, n);
    let w = random_f2_subspace(&mut rng, n);
    let (su, sw) = (brute::subspace_set(&u), brute::subspace_set(&w));
    let meet: BTreeSet<Bits> = su.intersection(&sw).copied().collect();
    let join = brute::span_set(&su.iter().chain(&sw).copied().collect::<Vec<_>>());
    ensure(brute::subspace_set(&u.intersect(&w)?) == meet, || "intersect".into())?;
    ensure(brute::subspace_set(&u.sum(&w)?) == join, || "sum".into())?;
    ensure(u.leq(&w)? == su.is_subset(&sw), || "leq".into())?;
    let q = quotient(n, &w)?;
    let xs: Vec<Bits> = brute::all(n).collect();
    for &x in &xs {
        for &y in &xs {
            let same = q.class_of(&brute::from_bits(n, x)) == q.class_of(&brute::from_bits(n, y));
            ensure(same == sw.contains(&(x ^ y)), || "quotient classes".into())?;
        }
    }
    ensure(1 << q.dim() == (1 << n) / sw.len(), || "quotient dimension".into())?;

    // images and preimages of subspaces under m
    let s = random_f2_subspace(&mut rng, cols);
    let t = random_f2_subspace(&mut rng, rows);
    let ss = brute::subspace_set(&s);
    let ts = brute::subspace_set(&t);
    let mapped: BTreeSet<Bits> = ss.iter().map(|&x| bits.apply(x)).collect();
    ensure(brute::subspace_set(&s.map(&m)?) == mapped, || "map".into())?;
    let pre: BTreeSet<Bits> = brute::all(cols).filter(|&x| ts.contains(&bits.apply(x))).collect();
    ensure(brute::subspace_set(&t.preimage(&m)?) == pre, || "preimage".into())?;
    if mapped.is_subset(&ts) {
        let induced = induced_map(&m, &s, &t)?;
        for x in brute::all(s.dim()) {
            let v = brute::from_bits(s.dim(), x);
            let direct = m.apply(&s.inclusion().apply(&v));
            ensure(t.inclusion().apply(&induced.apply(&v)) == direct, || "induced map".into())?;
        }
        tag(tags, "induced");
    }

    // relations
    let r = Relation::new(rows, cols, random_f2_subspace(&mut rng, rows + cols))?;
    let other = random_f2_matrix(&mut rng, 3);
    let s_rel = Relation::new(cols, other.cols(), random_f2_subspace(&mut rng, cols + other.cols()))?;
    let rs = brute::relation_set(&r);
    let ss_rel = brute::relation_set(&s_rel);
    ensure(brute::relation_set(&r.compose(&s_rel)?) == brute::compose_sets(&rs, &ss_rel), || "compose".into())?;
    ensure(brute::relation_set(&r.inverse()) == brute::inverse_set(&rs), || "inverse".into())?;
    ensure(brute::relation_set(&Relation::graph(&m)) == brute::graph_set(&m), || "graph".into())?;
    let domain: BTreeSet<Bits> = rs.iter().map(|&(_, a)| a).collect();
    let range: BTreeSet<Bits> = rs.iter().map(|&(b, _)| b).collect();
    let homogeneous: BTreeSet<Bits> = rs.iter().filter(|&&(_, a)| a == 0).map(|&(b, _)| b).collect();
    ensure(brute::subspace_set(&r.domain()) == domain, || "domain".into())?;
    ensure(brute::subspace_set(&r.range()) == range, || "range".into())?;
    ensure(brute::subspace_set(&r.homogeneous()) == homogeneous, || "homogeneous part".into())?;
    for a in brute::all(cols) {
        let w = r.witnesses(&brute::from_bits(cols, a))?;
        let related: BTreeSet<Bits> = rs.iter().filter(|&&(_, x)| x == a).map(|&(b, _)| b).collect();
        match w.particular {
            Some(p) => {
                let p = brute::to_bits(&p);
                let found: BTreeSet<Bits> = brute::subspace_set(&w.homogeneous).iter().map(|h| h ^ p).collect();
                ensure(found == related, || "witnesses".into())?;
            }
            None => ensure(related.is_empty(), || "witnesses missed a pair".into())?,
        }
        for b in brute::all(rows) {
            let member = r.member(&brute::from_bits(rows, b), &brute::from_bits(cols, a))?;
            ensure(member == rs.contains(&(b, a)), || "member".into())?;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_sweeps_pass() {
        for suite in Suite::ALL {
            let report = suite.run(8);
            assert!(report.failures.is_empty(), "{}: {:?}", suite.name(), report.failures);
        }
    }

    #[test]
    fn counts_scale_from_reference() {
        assert_eq!(Suite::Oracle.count(200), 500);
        assert_eq!(Suite::Hom.count(200), 50);
        assert_eq!(Suite::Cross.count(1), 1);
    }
}
