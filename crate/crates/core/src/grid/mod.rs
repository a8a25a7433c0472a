//! Staircase-shaped commutative grids of vector spaces.
//!
//! Cells are addressed `(i, j)`, 0-based, with row `i` occupying columns
//! `0..row_lengths[i]`. A grid carries one map per horizontal edge
//! `(i, j) - (i, j+1)` and one per vertical edge `(i, j) - (i+1, j)`.
//!
//! In kernel orientation arrows point away from the corner `(0, 0)`:
//! `(i, j) -> (i, j+1)` and `(i, j) -> (i+1, j)`. In cokernel orientation
//! they point towards it, so `(0, 0)` is the sink; when drawn, such a grid
//! is the kernel picture rotated by 180 degrees. Transposing every matrix
//! exchanges the two orientations without touching the shape.

mod cokernel;
mod kernel;

pub use cokernel::{
    ccl_homology_dims, ccl_homology_dims_direct, ccl_homology_iso, cokernel_complex_bottom,
    cokernel_complex_right, CclDims,
};
pub use kernel::{
    admissible_positions, antidiagonal_relation, corollary_check, kcl_homology_dims,
    kcl_homology_iso, kcl_homology_iso_with, kernel_complex_left, kernel_complex_top,
    CorollaryReport, HomologyIso, KclDims, WitnessChoice,
};

use std::fmt;

use crate::complex::ChainComplex;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::matrix::LinearMap;
use crate::subspace::{image, kernel};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StaircaseShape {
    row_lengths: Vec<usize>,
}

impl StaircaseShape {
    pub fn new(row_lengths: Vec<usize>) -> Result<StaircaseShape> {
        if row_lengths.is_empty() {
            return Err(Error::Shape("a staircase needs at least one row".into()));
        }
        if row_lengths.contains(&0) {
            return Err(Error::Shape("row lengths must be at least 1".into()));
        }
        if row_lengths.windows(2).any(|w| w[1] > w[0]) {
            return Err(Error::Shape(format!("row lengths {row_lengths:?} are not non-increasing")));
        }
        Ok(StaircaseShape { row_lengths })
    }

    pub fn rectangle(rows: usize, cols: usize) -> Result<StaircaseShape> {
        StaircaseShape::new(vec![cols; rows])
    }

    pub fn row_lengths(&self) -> &[usize] {
        &self.row_lengths
    }

    pub fn rows(&self) -> usize {
        self.row_lengths.len()
    }

    pub fn cols(&self) -> usize {
        self.row_lengths[0]
    }

    pub fn row_len(&self, i: usize) -> usize {
        self.row_lengths.get(i).copied().unwrap_or(0)
    }

    pub fn col_len(&self, j: usize) -> usize {
        self.row_lengths.iter().take_while(|&&l| l > j).count()
    }

    pub fn contains(&self, i: usize, j: usize) -> bool {
        j < self.row_len(i)
    }

    /// All cells, row by row.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.row_lengths
            .iter()
            .enumerate()
            .flat_map(|(i, &l)| (0..l).map(move |j| (i, j)))
    }

    pub fn cell_count(&self) -> usize {
        self.row_lengths.iter().sum()
    }

    /// The mirror image in the main diagonal.
    pub fn transpose(&self) -> StaircaseShape {
        StaircaseShape { row_lengths: (0..self.cols()).map(|j| self.col_len(j)).collect() }
    }

    pub fn is_subshape_of(&self, other: &StaircaseShape) -> bool {
        self.rows() <= other.rows()
            && self.row_lengths.iter().zip(&other.row_lengths).all(|(a, b)| a <= b)
    }
}

impl fmt::Display for StaircaseShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.row_lengths)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Orientation {
    Kernel,
    Cokernel,
}

impl Orientation {
    pub fn flip(self) -> Orientation {
        match self {
            Orientation::Kernel => Orientation::Cokernel,
            Orientation::Cokernel => Orientation::Kernel,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Orientation::Kernel => "kernel",
            Orientation::Cokernel => "cokernel",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Grid {
    field: Field,
    shape: StaircaseShape,
    orientation: Orientation,
    spaces: Vec<Vec<usize>>,
    hmaps: Vec<Vec<LinearMap>>,
    vmaps: Vec<Vec<LinearMap>>,
}

/// What `validate` found wrong; cells are 0-based here and printed 1-based.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    /// Top-left corners of squares that do not commute.
    pub non_commuting: Vec<(usize, usize)>,
    /// Cells where their row is not exact.
    pub inexact_rows: Vec<(usize, usize)>,
    /// Cells where their column is not exact.
    pub inexact_columns: Vec<(usize, usize)>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.non_commuting.is_empty() && self.inexact_rows.is_empty() && self.inexact_columns.is_empty()
    }
}

fn one_based(cells: &[(usize, usize)]) -> String {
    let parts: Vec<String> = cells.iter().map(|(i, j)| format!("({},{})", i + 1, j + 1)).collect();
    parts.join(" ")
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_valid() {
            return write!(f, "valid");
        }
        let mut parts = Vec::new();
        if !self.non_commuting.is_empty() {
            parts.push(format!("non-commuting squares at {}", one_based(&self.non_commuting)));
        }
        if !self.inexact_rows.is_empty() {
            parts.push(format!("rows not exact at {}", one_based(&self.inexact_rows)));
        }
        if !self.inexact_columns.is_empty() {
            parts.push(format!("columns not exact at {}", one_based(&self.inexact_columns)));
        }
        write!(f, "{}", parts.join("; "))
    }
}

impl Grid {
    /// `hmaps[i][j]` sits on the edge `(i, j) - (i, j+1)` and `vmaps[i][j]`
    /// on `(i, j) - (i+1, j)`; directions follow the orientation.
    pub fn new(
        field: Field,
        shape: StaircaseShape,
        orientation: Orientation,
        spaces: Vec<Vec<usize>>,
        hmaps: Vec<Vec<LinearMap>>,
        vmaps: Vec<Vec<LinearMap>>,
    ) -> Result<Grid> {
        let rows = shape.rows();
        if spaces.len() != rows || hmaps.len() != rows || vmaps.len() != rows {
            return Err(Error::Shape(format!("expected data for {rows} rows")));
        }
        for i in 0..rows {
            let len = shape.row_len(i);
            if spaces[i].len() != len {
                return Err(Error::Shape(format!("row {} needs {len} spaces", i + 1)));
            }
            if hmaps[i].len() != len - 1 {
                return Err(Error::Shape(format!("row {} needs {} horizontal maps", i + 1, len - 1)));
            }
            if vmaps[i].len() != shape.row_len(i + 1).min(len) {
                return Err(Error::Shape(format!(
                    "row {} needs {} vertical maps",
                    i + 1,
                    shape.row_len(i + 1).min(len)
                )));
            }
        }
        let grid = Grid { field, shape, orientation, spaces, hmaps, vmaps };
        for (i, j) in grid.shape.cells() {
            if grid.shape.contains(i, j + 1) {
                grid.check_map(grid.h(i, j), (i, j), (i, j + 1), "horizontal")?;
            }
            if grid.shape.contains(i + 1, j) {
                grid.check_map(grid.v(i, j), (i, j), (i + 1, j), "vertical")?;
            }
        }
        Ok(grid)
    }

    fn check_map(
        &self,
        m: &LinearMap,
        near: (usize, usize),
        far: (usize, usize),
        kind: &str,
    ) -> Result<()> {
        if m.field() != self.field {
            return Err(Error::FieldMismatch(self.field, m.field()));
        }
        let (src, dst) = match self.orientation {
            Orientation::Kernel => (near, far),
            Orientation::Cokernel => (far, near),
        };
        let (r, c) = (self.dim(dst.0, dst.1), self.dim(src.0, src.1));
        if m.rows() != r || m.cols() != c {
            return Err(Error::Dimension(format!(
                "{kind} map at ({},{}) is {}x{}, expected {r}x{c}",
                near.0 + 1,
                near.1 + 1,
                m.rows(),
                m.cols()
            )));
        }
        Ok(())
    }

    /// Builds a grid from closures giving each space and each map.
    pub fn from_fn(
        field: Field,
        shape: StaircaseShape,
        orientation: Orientation,
        space: impl Fn(usize, usize) -> usize,
        hmap: impl Fn(usize, usize) -> LinearMap,
        vmap: impl Fn(usize, usize) -> LinearMap,
    ) -> Result<Grid> {
        let rows = shape.rows();
        let spaces = (0..rows).map(|i| (0..shape.row_len(i)).map(|j| space(i, j)).collect()).collect();
        let hmaps = (0..rows)
            .map(|i| (0..shape.row_len(i) - 1).map(|j| hmap(i, j)).collect())
            .collect();
        let vmaps = (0..rows)
            .map(|i| (0..shape.row_len(i + 1).min(shape.row_len(i))).map(|j| vmap(i, j)).collect())
            .collect();
        Grid::new(field, shape, orientation, spaces, hmaps, vmaps)
    }

    /// Every space zero.
    pub fn zero(field: Field, shape: StaircaseShape, orientation: Orientation) -> Grid {
        Grid::from_fn(
            field,
            shape,
            orientation,
            |_, _| 0,
            |_, _| LinearMap::zero(field, 0, 0),
            |_, _| LinearMap::zero(field, 0, 0),
        )
        .expect("zero grid is well formed")
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn shape(&self) -> &StaircaseShape {
        &self.shape
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    pub fn dim(&self, i: usize, j: usize) -> usize {
        self.spaces[i][j]
    }

    pub fn spaces(&self) -> &[Vec<usize>] {
        &self.spaces
    }

    /// Map on the edge `(i, j) - (i, j+1)`.
    pub fn h(&self, i: usize, j: usize) -> &LinearMap {
        &self.hmaps[i][j]
    }

    /// Map on the edge `(i, j) - (i+1, j)`.
    pub fn v(&self, i: usize, j: usize) -> &LinearMap {
        &self.vmaps[i][j]
    }

    pub fn hmaps(&self) -> &[Vec<LinearMap>] {
        &self.hmaps
    }

    pub fn vmaps(&self) -> &[Vec<LinearMap>] {
        &self.vmaps
    }

    pub fn with_orientation(mut self, orientation: Orientation) -> Result<Grid> {
        if orientation != self.orientation {
            self.orientation = orientation;
            Grid::new(self.field, self.shape, orientation, self.spaces, self.hmaps, self.vmaps)
        } else {
            Ok(self)
        }
    }

    /// Row `i` as a complex, in arrow order.
    pub fn row_complex(&self, i: usize) -> ChainComplex {
        let len = self.shape.row_len(i);
        let mut dims: Vec<usize> = self.spaces[i].clone();
        let mut maps: Vec<LinearMap> = self.hmaps[i].clone();
        if self.orientation == Orientation::Cokernel {
            dims.reverse();
            maps.reverse();
        }
        debug_assert_eq!(dims.len(), len);
        ChainComplex::new(self.field, dims, maps).expect("grid maps are sized")
    }

    /// Column `j` as a complex, in arrow order.
    pub fn column_complex(&self, j: usize) -> ChainComplex {
        let len = self.shape.col_len(j);
        let mut dims: Vec<usize> = (0..len).map(|i| self.spaces[i][j]).collect();
        let mut maps: Vec<LinearMap> = (0..len - 1).map(|i| self.vmaps[i][j].clone()).collect();
        if self.orientation == Orientation::Cokernel {
            dims.reverse();
            maps.reverse();
        }
        ChainComplex::new(self.field, dims, maps).expect("grid maps are sized")
    }

    /// Lists every square that fails to commute and every interior cell of
    /// a row or column where exactness fails.
    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::default();
        for (i, j) in self.shape.cells() {
            if self.shape.contains(i + 1, j + 1) && !self.square_commutes(i, j) {
                report.non_commuting.push((i, j));
            }
        }
        for (i, j) in self.shape.cells() {
            if 0 < j && j + 1 < self.shape.row_len(i) {
                let (into, out) = match self.orientation {
                    Orientation::Kernel => (self.h(i, j - 1), self.h(i, j)),
                    Orientation::Cokernel => (self.h(i, j), self.h(i, j - 1)),
                };
                if !exact_at(into, out) {
                    report.inexact_rows.push((i, j));
                }
            }
            if 0 < i && i + 1 < self.shape.col_len(j) {
                let (into, out) = match self.orientation {
                    Orientation::Kernel => (self.v(i - 1, j), self.v(i, j)),
                    Orientation::Cokernel => (self.v(i, j), self.v(i - 1, j)),
                };
                if !exact_at(into, out) {
                    report.inexact_columns.push((i, j));
                }
            }
        }
        report
    }

    /// The square with corners `(i, j)` and `(i+1, j+1)`.
    pub fn square_commutes(&self, i: usize, j: usize) -> bool {
        match self.orientation {
            Orientation::Kernel => {
                self.v(i, j + 1) * self.h(i, j) == self.h(i + 1, j) * self.v(i, j)
            }
            Orientation::Cokernel => {
                self.h(i, j) * self.v(i, j + 1) == self.v(i, j) * self.h(i + 1, j)
            }
        }
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_valid()
    }

    pub(crate) fn require_valid(&self) -> Result<()> {
        let report = self.validate();
        if report.is_valid() {
            Ok(())
        } else {
            Err(Error::InvalidGrid(report))
        }
    }

    pub(crate) fn require(&self, orientation: Orientation) -> Result<()> {
        if self.orientation != orientation {
            return Err(Error::Orientation { expected: orientation.name() });
        }
        self.require_valid()
    }

    /// Transposes every matrix and flips the orientation. The shape is
    /// unchanged; in a drawing this rotates the picture by 180 degrees.
    pub fn dualize(&self) -> Grid {
        let t = |ms: &Vec<Vec<LinearMap>>| -> Vec<Vec<LinearMap>> {
            ms.iter().map(|row| row.iter().map(LinearMap::transpose).collect()).collect()
        };
        Grid {
            field: self.field,
            shape: self.shape.clone(),
            orientation: self.orientation.flip(),
            spaces: self.spaces.clone(),
            hmaps: t(&self.hmaps),
            vmaps: t(&self.vmaps),
        }
    }

    /// Mirror in the main diagonal: rows become columns.
    pub fn transpose(&self) -> Grid {
        let shape = self.shape.transpose();
        Grid::from_fn(
            self.field,
            shape,
            self.orientation,
            |i, j| self.dim(j, i),
            |i, j| self.v(j, i).clone(),
            |i, j| self.h(j, i).clone(),
        )
        .expect("transpose of a well formed grid")
    }

    /// The part of the grid inside a smaller staircase.
    pub fn restrict(&self, shape: &StaircaseShape) -> Result<Grid> {
        if !shape.is_subshape_of(&self.shape) {
            return Err(Error::Shape(format!("{shape} does not fit inside {}", self.shape)));
        }
        Grid::from_fn(
            self.field,
            shape.clone(),
            self.orientation,
            |i, j| self.dim(i, j),
            |i, j| self.h(i, j).clone(),
            |i, j| self.v(i, j).clone(),
        )
    }

    /// Replaces the space at each cell `c` by its image under `changes[c]`
    /// (invertible), transporting all maps: `m` becomes `P_t m P_s^-1`.
    pub fn conjugate(&self, changes: &[Vec<LinearMap>]) -> Result<Grid> {
        let mut inverses = Vec::with_capacity(changes.len());
        for row in changes {
            let inv = row
                .iter()
                .map(|p| p.inverse().ok_or_else(|| Error::Dimension("change of basis is singular".into())))
                .collect::<Result<Vec<_>>>()?;
            inverses.push(inv);
        }
        let transport = |m: &LinearMap, near: (usize, usize), far: (usize, usize)| -> Result<LinearMap> {
            let (s, t) = match self.orientation {
                Orientation::Kernel => (near, far),
                Orientation::Cokernel => (far, near),
            };
            changes[t.0][t.1].compose(m)?.compose(&inverses[s.0][s.1])
        };
        let mut hmaps = Vec::new();
        let mut vmaps = Vec::new();
        for i in 0..self.shape.rows() {
            let hs = (0..self.hmaps[i].len())
                .map(|j| transport(self.h(i, j), (i, j), (i, j + 1)))
                .collect::<Result<Vec<_>>>()?;
            let vs = (0..self.vmaps[i].len())
                .map(|j| transport(self.v(i, j), (i, j), (i + 1, j)))
                .collect::<Result<Vec<_>>>()?;
            hmaps.push(hs);
            vmaps.push(vs);
        }
        Grid::new(self.field, self.shape.clone(), self.orientation, self.spaces.clone(), hmaps, vmaps)
    }
}

/// `Im into == Ker out`.
pub(crate) fn exact_at(into: &LinearMap, out: &LinearMap) -> bool {
    image(into) == kernel(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f2() -> Field {
        Field::prime(2).unwrap()
    }

    #[test]
    fn shapes() {
        let s = StaircaseShape::new(vec![3, 3, 2]).unwrap();
        assert_eq!(s.col_len(0), 3);
        assert_eq!(s.col_len(2), 2);
        assert_eq!(s.transpose().row_lengths(), &[3, 3, 2]);
        assert!(StaircaseShape::new(vec![2, 3]).is_err());
        assert!(StaircaseShape::new(vec![]).is_err());
        assert!(StaircaseShape::new(vec![2, 0]).is_err());
        assert_eq!(StaircaseShape::new(vec![4, 1]).unwrap().transpose().row_lengths(), &[2, 1, 1, 1]);
    }

    #[test]
    fn zero_grid_is_valid() {
        let g = Grid::zero(f2(), StaircaseShape::rectangle(3, 4).unwrap(), Orientation::Kernel);
        assert!(g.is_valid());
        assert_eq!(g.dualize().dualize(), g);
    }

    /// One identity square at the corner of a 2x2 grid.
    fn identity_square(orientation: Orientation) -> Grid {
        let f = f2();
        Grid::from_fn(
            f,
            StaircaseShape::rectangle(2, 2).unwrap(),
            orientation,
            |_, _| 1,
            |_, _| LinearMap::identity(f, 1),
            |_, _| LinearMap::identity(f, 1),
        )
        .unwrap()
    }

    #[test]
    fn identity_square_is_valid_both_ways() {
        assert!(identity_square(Orientation::Kernel).is_valid());
        assert!(identity_square(Orientation::Cokernel).is_valid());
    }

    #[test]
    fn flipped_entry_is_flagged() {
        let g = identity_square(Orientation::Kernel);
        let mut vmaps = g.vmaps().to_vec();
        vmaps[0][1] = LinearMap::zero(f2(), 1, 1);
        let bad = Grid::new(f2(), g.shape().clone(), g.orientation(), g.spaces().to_vec(), g.hmaps().to_vec(), vmaps)
            .unwrap();
        let report = bad.validate();
        assert_eq!(report.non_commuting, vec![(0, 0)]);
        assert!(report.to_string().contains("(1,1)"));
    }

    #[test]
    fn inexact_row_is_flagged() {
        let f = f2();
        let g = Grid::from_fn(
            f,
            StaircaseShape::rectangle(1, 3).unwrap(),
            Orientation::Kernel,
            |_, _| 1,
            |_, _| LinearMap::zero(f, 1, 1),
            |_, _| unreachable!(),
        )
        .unwrap();
        assert_eq!(g.validate().inexact_rows, vec![(0, 1)]);
    }

    #[test]
    fn wrong_sizes_are_rejected() {
        let f = f2();
        let err = Grid::from_fn(
            f,
            StaircaseShape::rectangle(1, 2).unwrap(),
            Orientation::Kernel,
            |_, j| j + 1,
            |_, _| LinearMap::zero(f, 1, 1),
            |_, _| unreachable!(),
        )
        .unwrap_err();
        assert!(matches!(err, Error::Dimension(_)));
    }

    #[test]
    fn transpose_and_restrict() {
        let g = identity_square(Orientation::Kernel);
        assert_eq!(g.transpose().transpose(), g);
        let gamma = g.restrict(&StaircaseShape::new(vec![2, 1]).unwrap()).unwrap();
        assert_eq!(gamma.shape().cell_count(), 3);
        assert!(g.restrict(&StaircaseShape::new(vec![3]).unwrap()).is_err());
    }
}
