//! Exact diagram chasing: linear algebra over `F_p` and `Q`, linear
//! relations, chain complexes, grids with their kernel and cokernel complex
//! lemmas, the snake lemma, Hom grids of quiver representations, seeded
//! instance generators and enumeration oracles.

pub mod brute;
pub mod complex;
pub mod error;
pub mod field;
pub mod genrand;
pub mod grid;
pub mod io;
pub mod matrix;
pub mod quiverhom;
pub mod relation;
pub mod snake;
pub mod subspace;
pub mod suite;

pub use complex::{ChainComplex, HomologyAt};
pub use error::{Error, Result};
pub use field::{Field, Scalar, Vector};
pub use grid::{Grid, Orientation, StaircaseShape, ValidationReport};
pub use matrix::LinearMap;
pub use quiverhom::{Quiver, RepMap, Representation, RightExact, ShortExact};
pub use relation::{Cross, Relation};
pub use snake::{SnakeInput, SnakeResult};
pub use subspace::{QuotientSpace, Subspace};
