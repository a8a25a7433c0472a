//! Seeded random instances: every generator is a pure function of its
//! configuration.
//!
//! Exact complexes and grids are assembled from small indecomposable
//! blocks with identity maps and then disguised by random changes of basis
//! at every term, so exactness holds by construction.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::complex::ChainComplex;
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::grid::{Grid, Orientation, StaircaseShape};
use crate::matrix::LinearMap;
use crate::quiverhom::{hom_space, Quiver, RepMap, Representation, RightExact, ShortExact};
use crate::relation::Cross;
use crate::snake::SnakeInput;
use crate::subspace::{cokernel, image, quotient, Subspace};

/// Name of the generator behind every seed, recorded in reports.
pub const PRNG_ID: &str = "ChaCha8Rng (rand_chacha 0.3) via seed_from_u64";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenConfig {
    pub seed: u64,
    pub field: Field,
    /// Upper bound on the dimension of every generated space.
    pub max_dim: usize,
    pub shape: StaircaseShape,
    pub orientation: Orientation,
    /// Force `f` injective (`Some(true)`) or not (`Some(false)`) in snake inputs.
    pub f_monic: Option<bool>,
    /// Force `g'` surjective or not in snake inputs.
    pub gp_epi: Option<bool>,
}

impl GenConfig {
    pub fn new(seed: u64, field: Field, max_dim: usize) -> GenConfig {
        GenConfig {
            seed,
            field,
            max_dim,
            shape: StaircaseShape::rectangle(3, 3).expect("3x3 is a shape"),
            orientation: Orientation::Kernel,
            f_monic: None,
            gp_epi: None,
        }
    }

    pub fn with_shape(mut self, shape: StaircaseShape) -> GenConfig {
        self.shape = shape;
        self
    }

    pub fn with_orientation(mut self, orientation: Orientation) -> GenConfig {
        self.orientation = orientation;
        self
    }

    pub fn rng(&self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed)
    }
}

/// A uniform element of `F_p`, or a small rational `n / d` with
/// `|n| <= 3`, `1 <= d <= 2`.
pub fn random_scalar(rng: &mut impl Rng, field: Field) -> Scalar {
    match field.characteristic() {
        Some(p) => field.from_i64(rng.gen_range(0..p) as i64),
        None => {
            let n = field.from_i64(rng.gen_range(-3..=3));
            let d = field.from_i64(rng.gen_range(1..=2));
            field.mul(&n, &field.inv(&d))
        }
    }
}

fn random_nonzero(rng: &mut impl Rng, field: Field) -> Scalar {
    loop {
        let s = random_scalar(rng, field);
        if !field.is_zero(&s) {
            return s;
        }
    }
}

pub fn random_matrix(rng: &mut impl Rng, field: Field, rows: usize, cols: usize) -> LinearMap {
    let entries = (0..rows * cols).map(|_| random_scalar(rng, field)).collect();
    LinearMap::new(field, rows, cols, entries).expect("sizes match")
}

/// A random invertible matrix and its inverse, as a product of elementary
/// row operations.
pub fn random_invertible(rng: &mut impl Rng, field: Field, n: usize) -> (LinearMap, LinearMap) {
    let mut p = LinearMap::identity(field, n);
    let mut inv = LinearMap::identity(field, n);
    if n == 0 {
        return (p, inv);
    }
    for _ in 0..3 * n {
        let r = rng.gen_range(0..n);
        let s = rng.gen_range(0..n);
        let mut e = LinearMap::identity(field, n);
        let mut e_inv = LinearMap::identity(field, n);
        match rng.gen_range(0..3) {
            0 if r != s => {
                // swap rows r and s
                for m in [&mut e, &mut e_inv] {
                    m.set(r, r, field.zero());
                    m.set(s, s, field.zero());
                    m.set(r, s, field.one());
                    m.set(s, r, field.one());
                }
            }
            1 => {
                let c = random_nonzero(rng, field);
                e_inv.set(r, r, field.inv(&c));
                e.set(r, r, c);
            }
            _ if r != s => {
                let c = random_scalar(rng, field);
                e_inv.set(r, s, field.neg(&c));
                e.set(r, s, c);
            }
            _ => continue,
        }
        p = &e * &p;
        inv = &inv * &e_inv;
    }
    (p, inv)
}

/// A random injective `rows x cols` matrix (`rows >= cols`).
pub fn random_injection(rng: &mut impl Rng, field: Field, rows: usize, cols: usize) -> LinearMap {
    assert!(rows >= cols);
    let stacked = LinearMap::identity(field, cols)
        .vstack(&random_matrix(rng, field, rows - cols, cols))
        .expect("same width");
    let (p, _) = random_invertible(rng, field, rows);
    let (q, _) = random_invertible(rng, field, cols);
    &(&p * &stacked) * &q
}

/// A random surjective `rows x cols` matrix (`rows <= cols`).
pub fn random_surjection(rng: &mut impl Rng, field: Field, rows: usize, cols: usize) -> LinearMap {
    random_injection(rng, field, cols, rows).transpose()
}

/// A random `rows x cols` matrix of the given rank.
pub fn random_of_rank(rng: &mut impl Rng, field: Field, rows: usize, cols: usize, rank: usize) -> LinearMap {
    &random_injection(rng, field, rows, rank) * &random_surjection(rng, field, rank, cols)
}

/// An exact complex with `length` terms, each of dimension at most
/// `max_dim`: a sum of intervals `0 -> F -id-> F -> 0`, disguised.
pub fn random_exact_complex(cfg: &GenConfig, length: usize) -> Result<ChainComplex> {
    if length == 0 {
        return Err(Error::Dimension("a complex needs at least one term".into()));
    }
    let mut rng = cfg.rng();
    let f = cfg.field;
    // mult[p]: copies of the interval on terms p and p+1
    let mut mult = vec![0usize; length - 1];
    for p in 0..length - 1 {
        let used = if p == 0 { 0 } else { mult[p - 1] };
        mult[p] = rng.gen_range(0..=cfg.max_dim - used.min(cfg.max_dim));
    }
    let dim = |p: usize| (if p == 0 { 0 } else { mult[p - 1] }) + mult.get(p).copied().unwrap_or(0);
    let dims: Vec<usize> = (0..length).map(dim).collect();
    let maps = (0..length - 1)
        .map(|p| {
            let before = if p == 0 { 0 } else { mult[p - 1] };
            let after = mult.get(p + 1).copied().unwrap_or(0);
            // coordinates of term p: [from (p-1, p) | from (p, p+1)]
            // coordinates of term p+1: [from (p, p+1) | from (p+1, p+2)]
            LinearMap::zero(f, mult[p], before)
                .hstack(&LinearMap::identity(f, mult[p]))
                .and_then(|top| top.vstack(&LinearMap::zero(f, after, before + mult[p])))
        })
        .collect::<Result<Vec<_>>>()?;
    let plain = ChainComplex::new(f, dims.clone(), maps)?;
    let changes: Vec<LinearMap> = dims.iter().map(|&d| random_invertible(&mut rng, f, d).0).collect();
    plain.conjugate(&changes)
}

/// Cells and edges of one indecomposable block.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Block {
    cells: Vec<(usize, usize)>,
    hedges: Vec<(usize, usize)>,
    vedges: Vec<(usize, usize)>,
}

fn square(i: usize, j: usize) -> Block {
    Block {
        cells: vec![(i, j), (i, j + 1), (i + 1, j), (i + 1, j + 1)],
        hedges: vec![(i, j), (i + 1, j)],
        vedges: vec![(i, j), (i, j + 1)],
    }
}

/// Spaces on the antidiagonals `i + j = n - 2` and `i + j = n - 1`, each
/// lower cell mapping to its right and lower neighbours. Every row and
/// column sees it as a short interval or a lone space, and it carries
/// homology at position `n` of both kernel complexes.
fn zigzag(n: usize) -> Block {
    let mut cells: Vec<(usize, usize)> = (0..n).map(|i| (i, n - 1 - i)).collect();
    let lower: Vec<(usize, usize)> = (0..n.saturating_sub(1)).map(|i| (i, n - 2 - i)).collect();
    cells.extend(&lower);
    Block { cells, hedges: lower.clone(), vedges: lower }
}

fn lone(i: usize, j: usize) -> Block {
    Block { cells: vec![(i, j)], hedges: vec![], vedges: vec![] }
}

fn candidate_blocks(shape: &StaircaseShape) -> (Vec<Block>, Vec<Block>, Vec<Block>) {
    let squares = shape
        .cells()
        .filter(|&(i, j)| shape.contains(i + 1, j + 1))
        .map(|(i, j)| square(i, j))
        .collect();
    let zigzags = (1..=shape.rows() + shape.cols())
        .map(zigzag)
        .filter(|b| b.cells.iter().all(|&(i, j)| shape.contains(i, j)))
        .collect();
    // a lone space is exact-neutral only at a cell ending its row and column
    let corners = shape
        .cells()
        .filter(|&(i, j)| !shape.contains(i + 1, j) && !shape.contains(i, j + 1))
        .map(|(i, j)| lone(i, j))
        .collect();
    (squares, zigzags, corners)
}

/// A valid grid of `cfg.shape` in `cfg.orientation` with every space of
/// dimension at most `cfg.max_dim`.
pub fn random_exact_grid(cfg: &GenConfig) -> Result<Grid> {
    let mut rng = cfg.rng();
    let f = cfg.field;
    let shape = &cfg.shape;
    let (squares, zigzags, corners) = candidate_blocks(shape);
    let mut dims = vec![vec![0usize; shape.cols()]; shape.rows()];
    let mut chosen: Vec<Block> = Vec::new();
    for _ in 0..2 * shape.cell_count() {
        let pool = match rng.gen_range(0..20) {
            0..=9 => &squares,
            10..=16 => &zigzags,
            _ => &corners,
        };
        let Some(block) = pool.choose(&mut rng) else { continue };
        if block.cells.iter().all(|&(i, j)| dims[i][j] < cfg.max_dim) {
            for &(i, j) in &block.cells {
                dims[i][j] += 1;
            }
            chosen.push(block.clone());
        }
    }
    // coordinate of block k at each cell it occupies
    let mut slot = vec![vec![Vec::<(usize, usize)>::new(); shape.cols()]; shape.rows()];
    let mut next = vec![vec![0usize; shape.cols()]; shape.rows()];
    for (k, block) in chosen.iter().enumerate() {
        for &(i, j) in &block.cells {
            slot[i][j].push((k, next[i][j]));
            next[i][j] += 1;
        }
    }
    let coord = |k: usize, (i, j): (usize, usize)| -> usize {
        slot[i][j].iter().find(|&&(b, _)| b == k).expect("block occupies cell").1
    };
    let edge = |near: (usize, usize), far: (usize, usize), horizontal: bool| -> LinearMap {
        let (src, dst) = match cfg.orientation {
            Orientation::Kernel => (near, far),
            Orientation::Cokernel => (far, near),
        };
        let mut m = LinearMap::zero(f, dims[dst.0][dst.1], dims[src.0][src.1]);
        for (k, block) in chosen.iter().enumerate() {
            let edges = if horizontal { &block.hedges } else { &block.vedges };
            if edges.contains(&near) {
                m.set(coord(k, dst), coord(k, src), f.one());
            }
        }
        m
    };
    let plain = Grid::from_fn(
        f,
        shape.clone(),
        cfg.orientation,
        |i, j| dims[i][j],
        |i, j| edge((i, j), (i, j + 1), true),
        |i, j| edge((i, j), (i + 1, j), false),
    )?;
    let changes: Vec<Vec<LinearMap>> = dims
        .iter()
        .enumerate()
        .map(|(i, row)| {
            row[..shape.row_len(i)]
                .iter()
                .map(|&d| random_invertible(&mut rng, f, d).0)
                .collect()
        })
        .collect();
    plain.conjugate(&changes)
}

/// A staircase shape with at most `max_rows` rows and `max_cols` columns.
pub fn random_shape(rng: &mut impl Rng, max_rows: usize, max_cols: usize) -> StaircaseShape {
    let rows = rng.gen_range(1..=max_rows.max(1));
    let mut lengths = Vec::with_capacity(rows);
    let mut cap = max_cols.max(1);
    for _ in 0..rows {
        let len = rng.gen_range(1..=cap);
        lengths.push(len);
        cap = len;
    }
    StaircaseShape::new(lengths).expect("non-increasing and positive")
}

/// `(basis of a random subspace of F^n of dimension d)` as columns.
fn random_subspace(rng: &mut impl Rng, field: Field, n: usize, d: usize) -> Subspace {
    image(&random_injection(rng, field, n, d))
}

/// A map `F^cols -> F^n` with image exactly `w`.
fn onto(rng: &mut impl Rng, w: &Subspace, cols: usize) -> LinearMap {
    &w.inclusion() * &random_surjection(rng, w.field(), w.dim(), cols)
}

/// A map `F^n -> F^rows` with kernel exactly `w`.
fn killing(rng: &mut impl Rng, w: &Subspace, rows: usize) -> Result<LinearMap> {
    let q = quotient(w.ambient_dim(), w)?;
    Ok(&random_injection(rng, w.field(), rows, q.dim()) * &q.projection)
}

/// A cross with the row and the column exact at `B2`.
pub fn random_cross(cfg: &GenConfig) -> Result<Cross> {
    let mut rng = cfg.rng();
    let f = cfg.field;
    let m = cfg.max_dim;
    let b2 = rng.gen_range(0..=m);
    let (du, dw) = (rng.gen_range(0..=b2), rng.gen_range(0..=b2));
    let u = random_subspace(&mut rng, f, b2, du);
    let w = random_subspace(&mut rng, f, b2, dw);
    let a = rng.gen_range(u.dim()..=m.max(u.dim()));
    let b1 = rng.gen_range(w.dim()..=m.max(w.dim()));
    let c = rng.gen_range(b2 - u.dim()..=m.max(b2 - u.dim()));
    let b3 = rng.gen_range(b2 - w.dim()..=m.max(b2 - w.dim()));
    Ok(Cross {
        f: onto(&mut rng, &u, a),
        g: killing(&mut rng, &u, c)?,
        beta1: onto(&mut rng, &w, b1),
        beta2: killing(&mut rng, &w, b3)?,
    })
}

/// A snake diagram satisfying every hypothesis. `f` is random (or forced
/// monic or not), `C = B / Im f`, `f'` is a random injection, `C'` is
/// `B' / Im f'` plus an extra summand exactly when `g'` is not to be epi,
/// `alpha = r f`, `beta = f' r + n g`, and `gamma` is induced.
pub fn random_snake_input(cfg: &GenConfig) -> Result<SnakeInput> {
    let mut rng = cfg.rng();
    let fld = cfg.field;
    let m = cfg.max_dim.max(1);
    let monic = cfg.f_monic.unwrap_or_else(|| rng.gen_bool(0.5));
    let epi = cfg.gp_epi.unwrap_or_else(|| rng.gen_bool(0.5));

    let b = rng.gen_range(usize::from(!monic)..=m);
    let a = if monic { rng.gen_range(0..=b) } else { rng.gen_range(1..=m) };
    let rank = if monic { a } else { rng.gen_range(0..=b.min(a - 1)) };
    let f = random_of_rank(&mut rng, fld, b, a, rank);
    let g = cokernel(&f).projection;
    let c = g.rows();

    let bp = rng.gen_range(0..=m);
    let ap = rng.gen_range(0..=bp);
    let fp = random_injection(&mut rng, fld, bp, ap);
    let q = cokernel(&fp).projection;
    let extra = if epi { 0 } else { rng.gen_range(1..=m.saturating_sub(q.rows()).max(1)) };
    let gp = q.vstack(&LinearMap::zero(fld, extra, bp))?;
    let cp = gp.rows();

    let r = random_matrix(&mut rng, fld, ap, b);
    let n = random_matrix(&mut rng, fld, bp, c);
    let alpha = &r * &f;
    let beta = &(&fp * &r) + &(&n * &g);
    let section = cokernel(&f).section;
    let gamma = &(&gp * &beta) * &section;

    // disguise every space
    let mut change = |d: usize| random_invertible(&mut rng, fld, d);
    let (_, pa_i) = change(a);
    let (pb, pb_i) = change(b);
    let (pc, pc_i) = change(c);
    let (qa, qa_i) = change(ap);
    let (qb, qb_i) = change(bp);
    let (qc, _) = change(cp);
    let t = |p: &LinearMap, x: &LinearMap, s: &LinearMap| &(p * x) * s;
    let input = SnakeInput {
        f: t(&pb, &f, &pa_i),
        g: t(&pc, &g, &pb_i),
        fp: t(&qb, &fp, &qa_i),
        gp: t(&qc, &gp, &qb_i),
        alpha: t(&qa, &alpha, &pa_i),
        beta: t(&qb, &beta, &pb_i),
        gamma: t(&qc, &gamma, &pc_i),
    };
    debug_assert!(input.check().is_ok());
    Ok(input)
}

/// One of the small quivers used for random Hom instances: a single arrow,
/// two parallel arrows, a 2-cycle, or an arrow with a loop.
pub fn random_quiver(rng: &mut impl Rng) -> Quiver {
    let arrows = match rng.gen_range(0..4) {
        0 => vec![(0, 1)],
        1 => vec![(0, 1), (0, 1)],
        2 => vec![(0, 1), (1, 0)],
        _ => vec![(0, 1), (1, 1)],
    };
    Quiver::new(2, arrows).expect("arrows stay inside two vertices")
}

pub fn random_representation(rng: &mut impl Rng, field: Field, quiver: &Quiver, dims: Vec<usize>) -> Representation {
    let maps = quiver
        .arrows()
        .iter()
        .map(|&(s, t)| random_matrix(rng, field, dims[t], dims[s]))
        .collect();
    Representation::new(field, quiver.clone(), dims, maps).expect("sizes follow the quiver")
}

fn random_dims(rng: &mut impl Rng, n: usize, max: usize) -> Vec<usize> {
    (0..n).map(|_| rng.gen_range(0..=max)).collect()
}

/// `0 -> A -> A (+) C -> C -> 0` with a random extension class, disguised
/// at every vertex of the middle term.
pub fn random_short_exact(rng: &mut impl Rng, field: Field, quiver: &Quiver, max_dim: usize) -> Result<ShortExact> {
    let n = quiver.vertex_count();
    let da = random_dims(rng, n, max_dim / 2);
    let dc: Vec<usize> = da.iter().map(|&x| rng.gen_range(0..=max_dim - x)).collect();
    let a = random_representation(rng, field, quiver, da.clone());
    let c = random_representation(rng, field, quiver, dc.clone());
    let maps = quiver
        .arrows()
        .iter()
        .enumerate()
        .map(|(k, &(s, t))| {
            let eps = random_matrix(rng, field, da[t], dc[s]);
            let top = a.maps()[k].hstack(&eps)?;
            let bottom = LinearMap::zero(field, dc[t], da[s]).hstack(&c.maps()[k])?;
            top.vstack(&bottom)
        })
        .collect::<Result<Vec<_>>>()?;
    let db: Vec<usize> = da.iter().zip(&dc).map(|(x, y)| x + y).collect();
    let b = Representation::new(field, quiver.clone(), db.clone(), maps)?;
    let incl = RepMap::new(
        (0..n)
            .map(|v| LinearMap::identity(field, da[v]).vstack(&LinearMap::zero(field, dc[v], da[v])))
            .collect::<Result<Vec<_>>>()?,
    );
    let g = RepMap::new(
        (0..n)
            .map(|v| LinearMap::zero(field, dc[v], da[v]).hstack(&LinearMap::identity(field, dc[v])))
            .collect::<Result<Vec<_>>>()?,
    );
    let changes: Vec<(LinearMap, LinearMap)> = db.iter().map(|&d| random_invertible(rng, field, d)).collect();
    let p: Vec<LinearMap> = changes.iter().map(|c| c.0.clone()).collect();
    let b = b.conjugate(&p)?;
    let incl = RepMap::new((0..n).map(|v| &changes[v].0 * &incl.components()[v]).collect());
    let g = RepMap::new((0..n).map(|v| &g.components()[v] * &changes[v].1).collect());
    Ok(ShortExact { a, b, c, incl, g })
}

/// `X -u-> Y -> Cok u -> 0` with `u` a random morphism.
pub fn random_right_exact(rng: &mut impl Rng, field: Field, quiver: &Quiver, max_dim: usize) -> Result<RightExact> {
    let n = quiver.vertex_count();
    let (dx, dy) = (random_dims(rng, n, max_dim), random_dims(rng, n, max_dim));
    let x = random_representation(rng, field, quiver, dx);
    let y = random_representation(rng, field, quiver, dy);
    let hom = hom_space(&x, &y)?;
    let coords: Vec<Scalar> = (0..hom.dim()).map(|_| random_scalar(rng, field)).collect();
    let u = hom.element(&coords);
    let quotients: Vec<_> = u.components().iter().map(cokernel).collect();
    let zmaps = quiver
        .arrows()
        .iter()
        .enumerate()
        .map(|(k, &(s, t))| &(&quotients[t].projection * &y.maps()[k]) * &quotients[s].section)
        .collect();
    let z = Representation::new(field, quiver.clone(), quotients.iter().map(|q| q.dim()).collect(), zmaps)?;
    let proj = RepMap::new(quotients.iter().map(|q| q.projection.clone()).collect());
    Ok(RightExact { x, y, z, u, proj })
}

/// A random pair of sequences on a random small quiver.
pub fn random_hom_instance(cfg: &GenConfig) -> Result<(ShortExact, RightExact)> {
    let mut rng = cfg.rng();
    let quiver = random_quiver(&mut rng);
    let aseq = random_short_exact(&mut rng, cfg.field, &quiver, cfg.max_dim)?;
    let eseq = random_right_exact(&mut rng, cfg.field, &quiver, cfg.max_dim)?;
    Ok((aseq, eseq))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::{kcl_homology_dims, ccl_homology_dims};

    fn f2() -> Field {
        Field::prime(2).unwrap()
    }

    #[test]
    fn invertible_pairs() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for field in [f2(), Field::prime(7).unwrap(), Field::rationals()] {
            for n in 0..5 {
                let (p, q) = random_invertible(&mut rng, field, n);
                assert!((&p * &q).is_identity());
            }
        }
    }

    #[test]
    fn ranks_are_as_requested() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        assert_eq!(random_of_rank(&mut rng, f2(), 4, 3, 2).rank(), 2);
        assert!(random_injection(&mut rng, f2(), 4, 3).is_injective());
        assert!(random_surjection(&mut rng, f2(), 2, 5).is_surjective());
    }

    #[test]
    fn exact_complexes() {
        for seed in 0..30 {
            let cfg = GenConfig::new(seed, Field::prime(3).unwrap(), 3);
            let c = random_exact_complex(&cfg, 5).unwrap();
            assert!(c.is_complex());
            assert!(c.is_exact().unwrap());
            assert!(c.dims().iter().all(|&d| d <= 3));
            assert_eq!(c, random_exact_complex(&cfg, 5).unwrap());
        }
    }

    #[test]
    fn exact_grids_both_orientations() {
        let mut nontrivial = 0;
        for seed in 0..40 {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let shape = random_shape(&mut rng, 5, 5);
            let cfg = GenConfig::new(seed, f2(), 3).with_shape(shape);
            let g = random_exact_grid(&cfg).unwrap();
            assert!(g.is_valid(), "seed {seed}: {}", g.validate());
            let d = kcl_homology_dims(&g).unwrap();
            assert!(d.agree());
            nontrivial += usize::from(d.admissible.iter().any(|&n| d.top[n - 1] > 0));
            let c = random_exact_grid(&cfg.with_orientation(Orientation::Cokernel)).unwrap();
            assert!(c.is_valid(), "seed {seed}: {}", c.validate());
            assert!(ccl_homology_dims(&c).unwrap().agree());
        }
        assert!(nontrivial >= 10, "only {nontrivial} grids with homology");
    }

    #[test]
    fn crosses_and_snakes_satisfy_hypotheses() {
        for seed in 0..50 {
            let cfg = GenConfig::new(seed, Field::prime(5).unwrap(), 3);
            random_cross(&cfg).unwrap().check().unwrap();
            random_snake_input(&cfg).unwrap().check().unwrap();
        }
    }

    #[test]
    fn forced_snake_flags() {
        for seed in 0..20 {
            let mut cfg = GenConfig::new(seed, f2(), 3);
            cfg.f_monic = Some(false);
            cfg.gp_epi = Some(true);
            let s = random_snake_input(&cfg).unwrap();
            assert!(!s.f.is_injective());
            assert!(s.gp.is_surjective());
        }
    }

    #[test]
    fn hom_instances_are_exact() {
        for seed in 0..20 {
            let (a, e) = random_hom_instance(&GenConfig::new(seed, f2(), 2)).unwrap();
            a.check().unwrap();
            e.check().unwrap();
        }
    }
}
