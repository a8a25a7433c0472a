//! Kernel complexes of a grid and the isomorphism between their homologies.
//!
//! The top complex is `0 -> Ker v(0,0) -> Ker v(0,1) -> ...` with maps
//! induced by the top row, the left complex `0 -> Ker h(0,0) -> Ker h(1,0)
//! -> ...` with maps induced by the left column. Position `n >= 1` holds the
//! kernel at cell `(0, n-1)`, resp. `(n-1, 0)`; a cell without an outgoing
//! map contributes its whole space.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Grid, Orientation, StaircaseShape};
use crate::complex::{ChainComplex, HomologyAt};
use crate::error::{Error, Result};
use crate::matrix::LinearMap;
use crate::relation::Relation;
use crate::subspace::{induced_map, kernel, Subspace};

/// An isomorphism between the homologies of two complexes at one position.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyIso {
    /// 1-based position.
    pub position: usize,
    pub source: HomologyAt,
    pub target: HomologyAt,
    /// Source homology coordinates to target homology coordinates.
    pub matrix: LinearMap,
}

impl HomologyIso {
    pub fn is_invertible(&self) -> bool {
        self.matrix.is_invertible()
    }
}

/// Homology dimensions of both kernel complexes at positions `1, 2, ...`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KclDims {
    pub top: Vec<usize>,
    pub left: Vec<usize>,
    /// Positions where the grid is large enough for the comparison.
    pub admissible: Vec<usize>,
}

impl KclDims {
    /// Equality at every admissible position.
    pub fn agree(&self) -> bool {
        self.admissible.iter().all(|&n| self.top[n - 1] == self.left[n - 1])
    }
}

/// How `kcl_homology_iso` picks a witness among all `z` with `(z, c)` related.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WitnessChoice {
    /// The reduced particular solution.
    Canonical,
    /// The particular solution plus a seeded random element of the
    /// homogeneous part.
    Shifted(u64),
}

#[derive(Clone, Copy)]
pub(super) enum Line {
    Top,
    Left,
}

/// Kernel subspaces along the top row or left column, and the complex they
/// form with a leading zero term.
pub(super) fn kernel_line(g: &Grid, line: Line) -> Result<(Vec<Subspace>, ChainComplex)> {
    let f = g.field();
    let shape = g.shape();
    let len = match line {
        Line::Top => shape.row_len(0),
        Line::Left => shape.col_len(0),
    };
    let cell = |k: usize| match line {
        Line::Top => (0, k),
        Line::Left => (k, 0),
    };
    let terms: Vec<Subspace> = (0..len)
        .map(|k| {
            let (i, j) = cell(k);
            match line {
                Line::Top if shape.contains(1, j) => kernel(g.v(0, j)),
                Line::Left if shape.contains(i, 1) => kernel(g.h(i, 0)),
                _ => Subspace::full(f, g.dim(i, j)),
            }
        })
        .collect();
    let mut dims = vec![0];
    dims.extend(terms.iter().map(Subspace::dim));
    let mut maps = vec![LinearMap::zero(f, terms[0].dim(), 0)];
    for k in 0..len - 1 {
        let m = match line {
            Line::Top => g.h(0, k),
            Line::Left => g.v(k, 0),
        };
        let induced = induced_map(m, &terms[k], &terms[k + 1]).map_err(|e| {
            Error::TheoremViolation(format!("kernel map at position {} is not induced: {e}", k + 1))
        })?;
        maps.push(induced);
    }
    Ok((terms, ChainComplex::new(f, dims, maps)?))
}

/// `0 -> Ker v(0,0) -> Ker v(0,1) -> ...`
pub fn kernel_complex_top(g: &Grid) -> Result<ChainComplex> {
    g.require(Orientation::Kernel)?;
    Ok(kernel_line(g, Line::Top)?.1)
}

/// `0 -> Ker h(0,0) -> Ker h(1,0) -> ...`
pub fn kernel_complex_left(g: &Grid) -> Result<ChainComplex> {
    g.require(Orientation::Kernel)?;
    Ok(kernel_line(g, Line::Left)?.1)
}

/// Cells `(i, j)` with `i + j <= bound` missing from the shape, 1-based.
fn missing_cells(shape: &StaircaseShape, bound: usize) -> Vec<(usize, usize)> {
    (0..=bound)
        .flat_map(|i| (0..=bound - i).map(move |j| (i, j)))
        .filter(|&(i, j)| !shape.contains(i, j))
        .map(|(i, j)| (i + 1, j + 1))
        .collect()
}

/// Positions `n` at which the kernel homologies can be compared: every cell
/// with `i + j <= n` (0-based) lies in the shape.
pub fn admissible_positions(shape: &StaircaseShape) -> Vec<usize> {
    (1..)
        .take_while(|&n| missing_cells(shape, n).is_empty())
        .collect()
}

/// The relation `u = e_n^-1 . v . h^-1 . ... . v . h^-1 . incl` between the
/// `n`-th left kernel `K_n` and the `n`-th top kernel, chased down the
/// antidiagonal from `(0, n-1)` to `(n-1, 0)`. Coordinates are those of the
/// kernel bases.
pub fn antidiagonal_relation(g: &Grid, n: usize) -> Result<Relation> {
    g.require(Orientation::Kernel)?;
    antidiagonal_unchecked(g, n)
}

fn antidiagonal_unchecked(g: &Grid, n: usize) -> Result<Relation> {
    let shape = g.shape();
    if n == 0 {
        return Err(Error::Position { position: 0, len: shape.row_len(0).min(shape.col_len(0)) + 1 });
    }
    let missing = missing_cells(shape, n - 1);
    if !missing.is_empty() {
        return Err(Error::RegionMissing { position: n, missing });
    }
    let (top, _) = kernel_line(g, Line::Top)?;
    let (left, _) = kernel_line(g, Line::Left)?;
    let mut rel = Relation::graph(&top[n - 1].inclusion());
    for k in 0..n - 1 {
        let j = n - 2 - k;
        rel = Relation::graph(g.h(k, j)).inverse().compose(&rel)?;
        rel = Relation::graph(g.v(k, j)).compose(&rel)?;
    }
    Relation::graph(&left[n - 1].inclusion()).inverse().compose(&rel)
}

/// The isomorphism from top homology to left homology at position `n`,
/// sending the class of a cycle `c` to the class of any `z` with `(z, c)` in
/// the antidiagonal relation.
pub fn kcl_homology_iso(g: &Grid, n: usize) -> Result<HomologyIso> {
    kcl_homology_iso_with(g, n, WitnessChoice::Canonical)
}

pub fn kcl_homology_iso_with(g: &Grid, n: usize, choice: WitnessChoice) -> Result<HomologyIso> {
    g.require(Orientation::Kernel)?;
    let missing = missing_cells(g.shape(), n);
    if n == 0 || !missing.is_empty() {
        return Err(Error::RegionMissing { position: n, missing });
    }
    let u = antidiagonal_unchecked(g, n)?;
    let (_, top) = kernel_line(g, Line::Top)?;
    let (_, left) = kernel_line(g, Line::Left)?;
    let source = top.homology_at(n)?;
    let target = left.homology_at(n)?;
    let f = g.field();
    let mut rng = match choice {
        WitnessChoice::Canonical => None,
        WitnessChoice::Shifted(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
    };

    let violation = |what: String| Error::TheoremViolation(format!("position {n}: {what}"));
    let class_of_witness = |c: &[crate::Scalar], rng: &mut Option<ChaCha8Rng>| -> Result<Vec<crate::Scalar>> {
        let w = u.witnesses(c)?;
        let mut z = w
            .particular
            .ok_or_else(|| violation("a top cycle has no witness on the left".into()))?;
        if let Some(rng) = rng.as_mut() {
            for h in w.homogeneous.basis_vectors() {
                let coeff = f.from_i64(rng.gen_range(0..1_000_000));
                f.axpy(&mut z, &coeff, &h);
            }
        }
        target
            .class_of_vector(&z)
            .ok_or_else(|| violation("a witness is not a cycle".into()))
    };

    let mut columns = Vec::with_capacity(source.dim);
    for k in 0..source.dim {
        let c = source.representative(&f.unit_vector(source.dim, k));
        columns.push(class_of_witness(&c, &mut rng)?);
    }
    let matrix = LinearMap::from_columns(f, target.dim, &columns);

    // boundaries on top must go to zero classes, and every element related to
    // zero must be a boundary on the left
    for b in source.boundaries.basis_vectors() {
        if !f.is_zero_vector(&class_of_witness(&b, &mut rng)?) {
            return Err(violation("a top boundary is sent to a nonzero class".into()));
        }
    }
    for h in u.homogeneous().basis_vectors() {
        if !target.boundaries.contains(&h)? {
            return Err(violation("the relation is ambiguous beyond boundaries".into()));
        }
    }
    if !matrix.is_invertible() {
        return Err(violation(format!(
            "induced {}x{} matrix of rank {} is not invertible",
            matrix.rows(),
            matrix.cols(),
            matrix.rank()
        )));
    }
    Ok(HomologyIso { position: n, source, target, matrix })
}

/// Homology dimensions of both kernel complexes, positions `1, 2, ...`.
pub fn kcl_homology_dims(g: &Grid) -> Result<KclDims> {
    g.require(Orientation::Kernel)?;
    let (_, top) = kernel_line(g, Line::Top)?;
    let (_, left) = kernel_line(g, Line::Left)?;
    Ok(KclDims {
        top: top.homology_dims()?[1..].to_vec(),
        left: left.homology_dims()?[1..].to_vec(),
        admissible: admissible_positions(g.shape()),
    })
}

/// Homology of `0 -> Ker a1 -> Ker b1 -> Ker c1` and `0 -> Ker f1 -> Ker f2
/// -> Ker f3` on a grid of shape `[3, 3, 2]`; equality is claimed at
/// positions 1 and 2 only.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorollaryReport {
    pub top: Vec<usize>,
    pub left: Vec<usize>,
    pub holds: bool,
}

pub fn corollary_check(g: &Grid) -> Result<CorollaryReport> {
    if g.shape().row_lengths() != [3, 3, 2] {
        return Err(Error::Shape(format!("expected shape [3, 3, 2], got {}", g.shape())));
    }
    let dims = kcl_homology_dims(g)?;
    let holds = dims.top[..2] == dims.left[..2];
    Ok(CorollaryReport { top: dims.top, left: dims.left, holds })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;

    fn f2() -> Field {
        Field::prime(2).unwrap()
    }

    #[test]
    fn admissible_region() {
        let s = |v: Vec<usize>| StaircaseShape::new(v).unwrap();
        assert_eq!(admissible_positions(&s(vec![3, 3, 2])), vec![1, 2]);
        assert_eq!(admissible_positions(&s(vec![1])), Vec::<usize>::new());
        assert_eq!(admissible_positions(&s(vec![4, 4, 4, 4])), vec![1, 2, 3]);
        assert_eq!(admissible_positions(&s(vec![5, 4, 3, 2, 1])), vec![1, 2, 3, 4]);
    }

    #[test]
    fn zero_grid() {
        let g = Grid::zero(f2(), StaircaseShape::rectangle(3, 3).unwrap(), Orientation::Kernel);
        let d = kcl_homology_dims(&g).unwrap();
        assert_eq!(d.top, vec![0, 0, 0]);
        assert!(d.agree());
        let iso = kcl_homology_iso(&g, 2).unwrap();
        assert_eq!((iso.matrix.rows(), iso.matrix.cols()), (0, 0));
        assert!(matches!(kcl_homology_iso(&g, 3), Err(Error::RegionMissing { position: 3, .. })));
    }

    /// A single space at the corner with every map out of it zero.
    fn corner_block() -> Grid {
        let f = f2();
        Grid::from_fn(
            f,
            StaircaseShape::rectangle(2, 2).unwrap(),
            Orientation::Kernel,
            |i, j| usize::from(i + j == 0),
            |i, j| LinearMap::zero(f, 0, usize::from(i + j == 0)),
            |i, j| LinearMap::zero(f, 0, usize::from(i + j == 0)),
        )
        .unwrap()
    }

    #[test]
    fn corner_block_has_matching_homology() {
        let g = corner_block();
        assert!(g.is_valid());
        let d = kcl_homology_dims(&g).unwrap();
        assert_eq!(d.top[0], 1);
        assert_eq!(d.left[0], 1);
        let u = antidiagonal_relation(&g, 1).unwrap();
        assert_eq!(u.to_map().unwrap(), LinearMap::identity(f2(), 1));
        let iso = kcl_homology_iso(&g, 1).unwrap();
        assert!(iso.is_invertible());
    }

    #[test]
    fn all_vertical_maps_zero_gives_top_row() {
        let f = Field::prime(5).unwrap();
        // rows 0 -> F -> F -> 0 via identity, second row zero
        let g = Grid::from_fn(
            f,
            StaircaseShape::rectangle(2, 4).unwrap(),
            Orientation::Kernel,
            |i, j| usize::from(i == 0 && (j == 1 || j == 2)),
            |i, j| {
                let d = |j: usize| usize::from(i == 0 && (j == 1 || j == 2));
                if i == 0 && j == 1 {
                    LinearMap::identity(f, 1)
                } else {
                    LinearMap::zero(f, d(j + 1), d(j))
                }
            },
            |i, j| LinearMap::zero(f, 0, usize::from(i == 0 && (j == 1 || j == 2))),
        )
        .unwrap();
        assert!(g.is_valid());
        let top = kernel_complex_top(&g).unwrap();
        assert_eq!(top.dims(), &[0, 0, 1, 1, 0]);
        assert!(top.is_exact().unwrap());
    }

    #[test]
    fn corollary_wrong_shape() {
        let g = Grid::zero(f2(), StaircaseShape::rectangle(3, 3).unwrap(), Orientation::Kernel);
        assert!(matches!(corollary_check(&g), Err(Error::Shape(_))));
        let gamma = g.restrict(&StaircaseShape::new(vec![3, 3, 2]).unwrap()).unwrap();
        assert!(corollary_check(&gamma).unwrap().holds);
    }

    #[test]
    fn orientation_is_checked() {
        let g = Grid::zero(f2(), StaircaseShape::rectangle(2, 2).unwrap(), Orientation::Cokernel);
        assert!(matches!(kernel_complex_top(&g), Err(Error::Orientation { .. })));
    }
}
