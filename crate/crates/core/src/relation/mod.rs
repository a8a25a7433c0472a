//! Linear relations: a relation on `B x A` is a subspace of `B (+) A`.
//!
//! Coordinates are ordered left block first: a pair `(b, a)` is stored as the
//! concatenated vector `b ++ a`. The graph of `f: A -> B` is `{(f(a), a)}`,
//! and composition `r . s` relates `(b, c)` when some `a` has `(b, a) in r`
//! and `(a, c) in s`, so chains read right to left like maps do.

mod cross;

pub use cross::{verify_cross_lemma, Cross, CrossReport};

use crate::error::{Error, Result};
use crate::field::{Field, Scalar, Vector};
use crate::matrix::LinearMap;
use crate::subspace::Subspace;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Relation {
    left_dim: usize,
    right_dim: usize,
    space: Subspace,
}

/// Solutions `b` of `(b, a) in r` for a fixed `a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witnesses {
    /// Canonical solution (reduced modulo `homogeneous`), if any exists.
    pub particular: Option<Vector>,
    /// `{b : (b, 0) in r}`.
    pub homogeneous: Subspace,
}

impl Relation {
    pub fn new(left_dim: usize, right_dim: usize, space: Subspace) -> Result<Relation> {
        if space.ambient_dim() != left_dim + right_dim {
            return Err(Error::AmbientMismatch {
                left: left_dim + right_dim,
                right: space.ambient_dim(),
            });
        }
        Ok(Relation { left_dim, right_dim, space })
    }

    /// `{(f(a), a)}`
    pub fn graph(f: &LinearMap) -> Relation {
        let field = f.field();
        let gens = (0..f.cols()).map(|j| {
            let mut v = f.column(j);
            v.extend(field.unit_vector(f.cols(), j));
            v
        });
        Relation {
            left_dim: f.rows(),
            right_dim: f.cols(),
            space: Subspace::span(field, f.rows() + f.cols(), gens),
        }
    }

    /// Every pair is related.
    pub fn full(field: Field, left_dim: usize, right_dim: usize) -> Relation {
        Relation { left_dim, right_dim, space: Subspace::full(field, left_dim + right_dim) }
    }

    /// Only `(0, 0)` is related.
    pub fn zero(field: Field, left_dim: usize, right_dim: usize) -> Relation {
        Relation { left_dim, right_dim, space: Subspace::zero(field, left_dim + right_dim) }
    }

    pub fn field(&self) -> Field {
        self.space.field()
    }

    pub fn left_dim(&self) -> usize {
        self.left_dim
    }

    pub fn right_dim(&self) -> usize {
        self.right_dim
    }

    pub fn space(&self) -> &Subspace {
        &self.space
    }

    pub fn inverse(&self) -> Relation {
        let (l, r) = (self.left_dim, self.right_dim);
        let gens = self.space.basis_vectors().into_iter().map(|v| {
            let mut w = v[l..].to_vec();
            w.extend_from_slice(&v[..l]);
            w
        });
        Relation {
            left_dim: r,
            right_dim: l,
            space: Subspace::span(self.field(), l + r, gens),
        }
    }

    /// `self . other` for `self` on `B x A` and `other` on `A x C`: the
    /// projection to `B (+) C` of `(self (+) C) /\ (B (+) other)` inside
    /// `B (+) A (+) C`.
    pub fn compose(&self, other: &Relation) -> Result<Relation> {
        if self.field() != other.field() {
            return Err(Error::FieldMismatch(self.field(), other.field()));
        }
        if self.right_dim != other.left_dim {
            return Err(Error::Dimension(format!(
                "middle dimensions differ: {} vs {}",
                self.right_dim, other.left_dim
            )));
        }
        let f = self.field();
        let (b, a, c) = (self.left_dim, self.right_dim, other.right_dim);
        let n = b + a + c;

        let pad = |v: &[Scalar], before: usize, after: usize| {
            let mut w = f.zero_vector(before);
            w.extend_from_slice(v);
            w.extend(f.zero_vector(after));
            w
        };
        let left_gens = self
            .space
            .basis_vectors()
            .into_iter()
            .map(|v| pad(&v, 0, c))
            .chain((b + a..n).map(|i| f.unit_vector(n, i)));
        let right_gens = (0..b)
            .map(|i| f.unit_vector(n, i))
            .chain(other.space.basis_vectors().into_iter().map(|v| pad(&v, b, 0)));
        let meet = Subspace::span(f, n, left_gens).intersect(&Subspace::span(f, n, right_gens))?;

        let keep: Vec<usize> = (0..b).chain(b + a..n).collect();
        let all: Vec<usize> = (0..n).collect();
        let drop_middle = LinearMap::identity(f, n).select(&keep, &all);
        Ok(Relation { left_dim: b, right_dim: c, space: meet.map(&drop_middle)? })
    }

    pub fn member(&self, b: &[Scalar], a: &[Scalar]) -> Result<bool> {
        self.check_left(b.len())?;
        self.check_right(a.len())?;
        let mut v = b.to_vec();
        v.extend_from_slice(a);
        self.space.contains(&v)
    }

    /// All `b` with `(b, a)` related, as particular solution plus the
    /// homogeneous space `{b : (b, 0) related}`.
    pub fn witnesses(&self, a: &[Scalar]) -> Result<Witnesses> {
        self.check_right(a.len())?;
        let (l, r) = (self.left_dim, self.right_dim);
        let basis = self.space.basis();
        let rows: Vec<usize> = (0..basis.rows()).collect();
        let left_part = basis.select(&rows, &(0..l).collect::<Vec<_>>());
        let right_part = basis.select(&rows, &(l..l + r).collect::<Vec<_>>());

        let homogeneous = self.homogeneous();
        let particular = right_part.transpose().solve(a).map(|coeffs| {
            let b = left_part.transpose().apply(&coeffs);
            homogeneous.reduce(&b)
        });
        Ok(Witnesses { particular, homogeneous })
    }

    /// `{b : (b, 0) related}`.
    pub fn homogeneous(&self) -> Subspace {
        let f = self.field();
        let (l, r) = (self.left_dim, self.right_dim);
        let left_axis = Subspace::span(f, l + r, (0..l).map(|i| f.unit_vector(l + r, i)));
        let meet = self
            .space
            .intersect(&left_axis)
            .expect("same ambient space");
        let gens = meet.basis_vectors().into_iter().map(|v| v[..l].to_vec());
        Subspace::span(f, l, gens)
    }

    /// `{a : (b, a) related for some b}`.
    pub fn domain(&self) -> Subspace {
        let l = self.left_dim;
        let gens = self.space.basis_vectors().into_iter().map(|v| v[l..].to_vec());
        Subspace::span(self.field(), self.right_dim, gens)
    }

    /// `{b : (b, a) related for some a}`.
    pub fn range(&self) -> Subspace {
        let l = self.left_dim;
        let gens = self.space.basis_vectors().into_iter().map(|v| v[..l].to_vec());
        Subspace::span(self.field(), l, gens)
    }

    /// True when the relation is the graph of a map defined on all of `A`.
    pub fn is_graph(&self) -> bool {
        self.homogeneous().is_zero() && self.domain().is_full()
    }

    /// The map whose graph this relation is, if it is one.
    pub fn to_map(&self) -> Option<LinearMap> {
        if !self.is_graph() {
            return None;
        }
        let f = self.field();
        let columns: Vec<Vector> = (0..self.right_dim)
            .map(|j| {
                self.witnesses(&f.unit_vector(self.right_dim, j))
                    .expect("dimension checked")
                    .particular
                    .expect("domain is full")
            })
            .collect();
        Some(LinearMap::from_columns(f, self.left_dim, &columns))
    }

    fn check_left(&self, n: usize) -> Result<()> {
        if n != self.left_dim {
            return Err(Error::Dimension(format!("left vector of length {n}, expected {}", self.left_dim)));
        }
        Ok(())
    }

    fn check_right(&self, n: usize) -> Result<()> {
        if n != self.right_dim {
            return Err(Error::Dimension(format!("right vector of length {n}, expected {}", self.right_dim)));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f2() -> Field {
        Field::prime(2).unwrap()
    }

    fn v(xs: &[i64]) -> Vector {
        xs.iter().map(|&x| f2().from_i64(x)).collect()
    }

    #[test]
    fn graph_examples() {
        let f = f2();
        let g = Relation::graph(&LinearMap::identity(f, 2));
        assert_eq!(*g.space(), Subspace::span(f, 4, [v(&[1, 0, 1, 0]), v(&[0, 1, 0, 1])]));

        let z = Relation::graph(&LinearMap::zero(f, 1, 1));
        assert_eq!(*z.space(), Subspace::span(f, 2, [v(&[0, 1])]));

        let g = Relation::graph(&LinearMap::from_ints(f, 1, 2, &[1, 1]));
        assert_eq!(*g.space(), Subspace::span(f, 3, [v(&[1, 1, 0]), v(&[1, 0, 1])]));
    }

    #[test]
    fn inverse_examples() {
        let f = f2();
        let g = Relation::graph(&LinearMap::from_ints(f, 2, 1, &[1, 0]));
        let inv = g.inverse();
        assert_eq!((inv.left_dim(), inv.right_dim()), (1, 2));
        assert_eq!(*inv.space(), Subspace::span(f, 3, [v(&[1, 1, 0])]));
        assert_eq!(inv.inverse(), g);
        let id = Relation::graph(&LinearMap::identity(f, 2));
        assert_eq!(id.inverse(), id);
    }

    #[test]
    fn compose_examples() {
        let f = f2();
        // (b, c) with b = a_1 and a = (c, c): the diagonal
        let r = Relation::graph(&LinearMap::from_ints(f, 1, 2, &[1, 0]));
        let s = Relation::graph(&LinearMap::from_ints(f, 2, 1, &[1, 1]));
        let u = r.compose(&s).unwrap();
        assert_eq!(u, Relation::graph(&LinearMap::identity(f, 1)));
        assert!(u.member(&v(&[1]), &v(&[1])).unwrap());
        assert!(!u.member(&v(&[1]), &v(&[0])).unwrap());

        // (b, c) with b = a_1 and c = a_1 + a_2: everything
        let s = Relation::graph(&LinearMap::from_ints(f, 1, 2, &[1, 1])).inverse();
        assert_eq!(r.compose(&s).unwrap(), Relation::full(f, 1, 1));

        let m = LinearMap::from_ints(f, 2, 3, &[1, 0, 1, 0, 1, 1]);
        let g = Relation::graph(&m);
        assert_eq!(g.compose(&Relation::graph(&LinearMap::identity(f, 3))).unwrap(), g);

        assert!(matches!(r.compose(&r), Err(Error::Dimension(_))));
    }

    #[test]
    fn witnesses_of_graph_and_inverse() {
        let f = Field::prime(5).unwrap();
        let m = LinearMap::from_ints(f, 2, 2, &[1, 2, 2, 4]);
        let a: Vector = vec![f.from_i64(3), f.from_i64(1)];
        let w = Relation::graph(&m).witnesses(&a).unwrap();
        assert_eq!(w.particular, Some(m.apply(&a)));
        assert!(w.homogeneous.is_zero());

        let outside: Vector = vec![f.from_i64(1), f.from_i64(0)];
        let w = Relation::graph(&m).inverse().witnesses(&outside).unwrap();
        assert!(w.particular.is_none());
        assert_eq!(w.homogeneous.dim(), 1);
    }

    #[test]
    fn zero_relation_membership() {
        let f = f2();
        let z = Relation::zero(f, 1, 2);
        assert!(z.member(&v(&[0]), &v(&[0, 0])).unwrap());
        assert!(!z.member(&v(&[1]), &v(&[0, 0])).unwrap());
        assert!(!z.member(&v(&[0]), &v(&[0, 1])).unwrap());
        assert!(z.member(&v(&[0]), &v(&[0])).is_err());
    }

    #[test]
    fn to_map_recovers_graph() {
        let q = Field::rationals();
        let m = LinearMap::from_ints(q, 2, 3, &[1, -2, 0, 3, 1, 5]);
        assert_eq!(Relation::graph(&m).to_map(), Some(m.clone()));
        assert_eq!(Relation::graph(&m).inverse().to_map(), None);
    }
}
