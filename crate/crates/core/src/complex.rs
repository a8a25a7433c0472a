//! Finite chain complexes `V_0 -> V_1 -> ... -> V_n` and their homology.
//!
//! Boundary convention: nothing maps into `V_0`, and `V_n` maps nowhere, so
//! at position 0 the boundaries are zero and at position `n` every vector is
//! a cycle.

use crate::error::{Error, Result};
use crate::field::{Field, Scalar, Vector};
use crate::matrix::LinearMap;
use crate::subspace::{image, kernel, quotient, QuotientSpace, Subspace};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ChainComplex {
    field: Field,
    dims: Vec<usize>,
    maps: Vec<LinearMap>,
}

/// Homology at one position, with the data needed to move between cycles,
/// classes and representatives.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyAt {
    pub position: usize,
    pub cycles: Subspace,
    pub boundaries: Subspace,
    pub dim: usize,
    /// Quotient of cycle coordinates by the boundaries written in cycle
    /// coordinates.
    pub quotient: QuotientSpace,
    /// Cycle coordinates to homology coordinates.
    pub class_of: LinearMap,
}

impl HomologyAt {
    /// Homology class of a vector of the ambient term, if it is a cycle.
    pub fn class_of_vector(&self, v: &[Scalar]) -> Option<Vector> {
        self.cycles.coordinates(v).map(|c| self.class_of.apply(&c))
    }

    /// The chosen cycle representing a class, in ambient coordinates.
    pub fn representative(&self, class: &[Scalar]) -> Vector {
        self.cycles.inclusion().apply(&self.quotient.representative(class))
    }

    /// Representatives of the standard basis of homology, as columns.
    pub fn representatives(&self) -> LinearMap {
        &self.cycles.inclusion() * &self.quotient.section
    }
}

impl ChainComplex {
    /// `maps[i]` must go from `F^dims[i]` to `F^dims[i+1]`.
    pub fn new(field: Field, dims: Vec<usize>, maps: Vec<LinearMap>) -> Result<ChainComplex> {
        if dims.is_empty() {
            return Err(Error::Dimension("a complex needs at least one term".into()));
        }
        if maps.len() + 1 != dims.len() {
            return Err(Error::Dimension(format!(
                "{} terms need {} maps, got {}",
                dims.len(),
                dims.len() - 1,
                maps.len()
            )));
        }
        for (i, m) in maps.iter().enumerate() {
            if m.field() != field {
                return Err(Error::FieldMismatch(field, m.field()));
            }
            if m.cols() != dims[i] || m.rows() != dims[i + 1] {
                return Err(Error::Dimension(format!(
                    "maps[{i}] is {}x{}, expected {}x{}",
                    m.rows(),
                    m.cols(),
                    dims[i + 1],
                    dims[i]
                )));
            }
        }
        Ok(ChainComplex { field, dims, maps })
    }

    /// The complex `F^d_0 -> ... ` built from maps alone; needs at least one map.
    pub fn from_maps(maps: Vec<LinearMap>) -> Result<ChainComplex> {
        let first = maps
            .first()
            .ok_or_else(|| Error::Dimension("from_maps needs at least one map".into()))?;
        let field = first.field();
        let mut dims = vec![first.cols()];
        dims.extend(maps.iter().map(|m| m.rows()));
        ChainComplex::new(field, dims, maps)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn maps(&self) -> &[LinearMap] {
        &self.maps
    }

    /// Number of terms.
    pub fn len(&self) -> usize {
        self.dims.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// First index `i` with `maps[i+1] . maps[i] != 0`.
    pub fn first_defect(&self) -> Option<usize> {
        self.maps
            .windows(2)
            .position(|w| !(&w[1] * &w[0]).is_zero())
    }

    pub fn is_complex(&self) -> bool {
        self.first_defect().is_none()
    }

    fn check_complex(&self) -> Result<()> {
        match self.first_defect() {
            Some(index) => Err(Error::NotComplex { index }),
            None => Ok(()),
        }
    }

    pub fn cycles(&self, i: usize) -> Subspace {
        match self.maps.get(i) {
            Some(m) => kernel(m),
            None => Subspace::full(self.field, self.dims[i]),
        }
    }

    pub fn boundaries(&self, i: usize) -> Subspace {
        if i == 0 {
            Subspace::zero(self.field, self.dims[0])
        } else {
            image(&self.maps[i - 1])
        }
    }

    pub fn homology_at(&self, i: usize) -> Result<HomologyAt> {
        if i >= self.len() {
            return Err(Error::Position { position: i, len: self.len() });
        }
        self.check_complex()?;
        let cycles = self.cycles(i);
        let boundaries = self.boundaries(i);
        let in_cycles = boundaries
            .basis_vectors()
            .iter()
            .map(|b| {
                cycles
                    .coordinates(b)
                    .ok_or(Error::NotComplex { index: i.saturating_sub(1) })
            })
            .collect::<Result<Vec<_>>>()?;
        let sub = Subspace::span(self.field, cycles.dim(), in_cycles);
        let quotient = quotient(cycles.dim(), &sub)?;
        Ok(HomologyAt {
            position: i,
            dim: quotient.dim(),
            class_of: quotient.projection.clone(),
            cycles,
            boundaries,
            quotient,
        })
    }

    /// Exactness at `i`: cycles equal boundaries.
    pub fn is_exact_at(&self, i: usize) -> Result<bool> {
        Ok(self.homology_at(i)?.dim == 0)
    }

    /// Exact at every interior position `1..n`.
    pub fn is_exact(&self) -> Result<bool> {
        for i in 1..self.len().saturating_sub(1) {
            if !self.is_exact_at(i)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn homology_dims(&self) -> Result<Vec<usize>> {
        self.check_complex()?;
        Ok((0..self.len())
            .map(|i| self.cycles(i).dim() - self.boundaries(i).dim())
            .collect())
    }

    /// `V_i` replaced by `P_i V_i`: every map `d_i` becomes `P_{i+1} d_i P_i^-1`.
    pub fn conjugate(&self, changes: &[LinearMap]) -> Result<ChainComplex> {
        if changes.len() != self.len() {
            return Err(Error::Dimension("one change of basis per term".into()));
        }
        let inverses = changes
            .iter()
            .map(|p| p.inverse().ok_or_else(|| Error::Dimension("change of basis is singular".into())))
            .collect::<Result<Vec<_>>>()?;
        let maps = self
            .maps
            .iter()
            .enumerate()
            .map(|(i, d)| changes[i + 1].compose(d)?.compose(&inverses[i]))
            .collect::<Result<Vec<_>>>()?;
        ChainComplex::new(self.field, self.dims.clone(), maps)
    }
}

/// `sum (-1)^i d_i` over a list of dimensions.
pub fn euler_characteristic(dims: &[usize]) -> i64 {
    dims.iter()
        .enumerate()
        .map(|(i, &d)| if i % 2 == 0 { d as i64 } else { -(d as i64) })
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f2() -> Field {
        Field::prime(2).unwrap()
    }

    #[test]
    fn zero_maps_are_a_complex() {
        let c = ChainComplex::new(
            f2(),
            vec![1, 1, 1],
            vec![LinearMap::zero(f2(), 1, 1), LinearMap::zero(f2(), 1, 1)],
        )
        .unwrap();
        assert!(c.is_complex());
        assert_eq!(c.homology_dims().unwrap(), vec![1, 1, 1]);
        assert!(!c.is_exact_at(1).unwrap());
    }

    #[test]
    fn identity_sandwich() {
        let f = Field::prime(3).unwrap();
        let c = ChainComplex::new(
            f,
            vec![0, 2, 2, 0],
            vec![
                LinearMap::zero(f, 2, 0),
                LinearMap::identity(f, 2),
                LinearMap::zero(f, 0, 2),
            ],
        )
        .unwrap();
        assert_eq!(c.homology_dims().unwrap(), vec![0, 0, 0, 0]);
    }

    #[test]
    fn identities_do_not_compose_to_zero() {
        let c = ChainComplex::from_maps(vec![LinearMap::identity(f2(), 1), LinearMap::identity(f2(), 1)])
            .unwrap();
        assert!(!c.is_complex());
        assert_eq!(c.homology_at(1).unwrap_err(), Error::NotComplex { index: 0 });
    }

    #[test]
    fn middle_homology_example() {
        let c = ChainComplex::from_maps(vec![
            LinearMap::from_ints(f2(), 2, 2, &[1, 0, 0, 0]),
            LinearMap::from_ints(f2(), 2, 2, &[0, 0, 0, 1]),
        ])
        .unwrap();
        let h = c.homology_at(1).unwrap();
        assert_eq!(h.dim, 0);
        assert_eq!(h.cycles.dim(), 1);
        assert_eq!(h.boundaries.dim(), 1);
    }

    #[test]
    fn classes_and_representatives() {
        // 0 -> F -> F^2 with image the first axis; homology at 1 is F
        let f5 = Field::prime(5).unwrap();
        let c = ChainComplex::from_maps(vec![LinearMap::from_ints(f5, 2, 1, &[1, 0])]).unwrap();
        let h = c.homology_at(1).unwrap();
        assert_eq!(h.dim, 1);
        let rep = h.representative(&[f5.one()]);
        assert_eq!(h.class_of_vector(&rep), Some(vec![f5.one()]));
        assert_eq!(h.class_of_vector(&[f5.one(), f5.zero()]), Some(vec![f5.zero()]));
    }

    #[test]
    fn euler() {
        assert_eq!(euler_characteristic(&[1, 3, 2]), 0);
        assert_eq!(euler_characteristic(&[2]), 2);
    }
}
