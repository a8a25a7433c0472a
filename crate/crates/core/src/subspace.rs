//! Subspaces of coordinate spaces in canonical form, quotients, and the maps
//! a linear map induces on them.
//!
//! A [`Subspace`] stores its basis in reduced row-echelon form, so two values
//! compare equal exactly when they are the same set of vectors.

use crate::error::{Error, Result};
use crate::field::{Field, Scalar, Vector};
use crate::matrix::LinearMap;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    field: Field,
    ambient_dim: usize,
    basis: LinearMap,
    pivots: Vec<usize>,
}

impl Subspace {
    /// Span of arbitrary generators, each of length `ambient_dim`.
    pub fn span<I>(field: Field, ambient_dim: usize, generators: I) -> Subspace
    where
        I: IntoIterator<Item = Vector>,
    {
        let m = LinearMap::from_rows(field, ambient_dim, generators.into_iter().collect());
        Subspace::row_space(&m)
    }

    /// Span of the rows of `m`.
    pub fn row_space(m: &LinearMap) -> Subspace {
        let r = m.rref();
        let keep: Vec<usize> = (0..r.rank).collect();
        let all: Vec<usize> = (0..m.cols()).collect();
        Subspace {
            field: m.field(),
            ambient_dim: m.cols(),
            basis: r.reduced.select(&keep, &all),
            pivots: r.pivot_cols,
        }
    }

    pub fn zero(field: Field, ambient_dim: usize) -> Subspace {
        Subspace {
            field,
            ambient_dim,
            basis: LinearMap::zero(field, 0, ambient_dim),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: Field, ambient_dim: usize) -> Subspace {
        Subspace {
            field,
            ambient_dim,
            basis: LinearMap::identity(field, ambient_dim),
            pivots: (0..ambient_dim).collect(),
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient_dim
    }

    /// The canonical basis, one vector per row.
    pub fn basis(&self) -> &LinearMap {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vector> {
        self.basis.row_vectors()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Ambient coordinates not used as pivots, in increasing order.
    pub fn free_coordinates(&self) -> Vec<usize> {
        (0..self.ambient_dim)
            .filter(|c| !self.pivots.contains(c))
            .collect()
    }

    /// The inclusion `F^dim -> F^ambient`; basis vectors as columns.
    pub fn inclusion(&self) -> LinearMap {
        self.basis.transpose()
    }

    /// Normal form of `v` modulo this subspace: the unique representative of
    /// `v + self` that vanishes on every pivot coordinate.
    pub fn reduce(&self, v: &[Scalar]) -> Vector {
        assert_eq!(v.len(), self.ambient_dim, "reduce: vector has wrong length");
        let f = self.field;
        let mut out = v.to_vec();
        for (i, &p) in self.pivots.iter().enumerate() {
            let c = f.neg(&out[p]);
            f.axpy(&mut out, &c, self.basis.row(i));
        }
        out
    }

    pub fn contains(&self, v: &[Scalar]) -> Result<bool> {
        self.check_len(v.len())?;
        Ok(self.field.is_zero_vector(&self.reduce(v)))
    }

    /// Coordinates of `v` with respect to the canonical basis, if `v` lies in
    /// the subspace.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vector> {
        if v.len() != self.ambient_dim {
            return None;
        }
        let coords: Vector = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let back = self.inclusion().apply(&coords);
        (back == v).then_some(coords)
    }

    pub fn leq(&self, other: &Subspace) -> Result<bool> {
        self.check_ambient(other)?;
        for v in self.basis_vectors() {
            if !other.contains(&v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let stacked = self.basis.vstack(&other.basis)?;
        Ok(Subspace::row_space(&stacked))
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        // (s, t) with s.A = t.B, i.e. the left kernel of [A ; -B].
        let stacked = self.basis.vstack(&other.basis.neg())?;
        let relations = kernel(&stacked.transpose());
        let ra = self.dim();
        let gens = relations.basis_vectors().into_iter().map(|w| {
            let s = LinearMap::from_rows(self.field, ra, vec![w[..ra].to_vec()]);
            (&s * &self.basis).row(0).to_vec()
        });
        Ok(Subspace::span(self.field, self.ambient_dim, gens))
    }

    /// Image of this subspace under `f`.
    pub fn map(&self, f: &LinearMap) -> Result<Subspace> {
        if f.cols() != self.ambient_dim {
            return Err(Error::AmbientMismatch { left: f.cols(), right: self.ambient_dim });
        }
        let images = (&self.basis * &f.transpose()).row_vectors();
        Ok(Subspace::span(self.field, f.rows(), images))
    }

    /// `{x : f(x) in self}`.
    pub fn preimage(&self, f: &LinearMap) -> Result<Subspace> {
        if f.rows() != self.ambient_dim {
            return Err(Error::AmbientMismatch { left: f.rows(), right: self.ambient_dim });
        }
        let q = quotient(self.ambient_dim, self)?;
        Ok(kernel(&(&q.projection * f)))
    }

    fn check_len(&self, n: usize) -> Result<()> {
        if n != self.ambient_dim {
            return Err(Error::AmbientMismatch { left: self.ambient_dim, right: n });
        }
        Ok(())
    }

    fn check_ambient(&self, other: &Subspace) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field, other.field));
        }
        self.check_len(other.ambient_dim)
    }
}

/// `{x : m.x = 0}` as a subspace of the domain.
pub fn kernel(m: &LinearMap) -> Subspace {
    let f = m.field();
    let r = m.rref();
    let n = m.cols();
    let gens = (0..n).filter(|c| !r.pivot_cols.contains(c)).map(|free| {
        let mut v = f.unit_vector(n, free);
        for (i, &p) in r.pivot_cols.iter().enumerate() {
            v[p] = f.neg(r.reduced.get(i, free));
        }
        v
    });
    Subspace::span(f, n, gens)
}

/// Column space of `m` as a subspace of the codomain.
pub fn image(m: &LinearMap) -> Subspace {
    Subspace::row_space(&m.transpose())
}

/// `ambient / w` with explicit projection and section matrices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuotientSpace {
    subspace: Subspace,
    pub projection: LinearMap,
    pub section: LinearMap,
}

impl QuotientSpace {
    pub fn ambient_dim(&self) -> usize {
        self.subspace.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.projection.rows()
    }

    pub fn subspace(&self) -> &Subspace {
        &self.subspace
    }

    /// Quotient coordinates of the class of `v`.
    pub fn class_of(&self, v: &[Scalar]) -> Vector {
        self.projection.apply(v)
    }

    /// The chosen representative of a class.
    pub fn representative(&self, class: &[Scalar]) -> Vector {
        self.section.apply(class)
    }
}

/// Quotient of `F^ambient_dim` by `w`. Representatives use the coordinates
/// that are not pivots of `w`'s canonical basis.
pub fn quotient(ambient_dim: usize, w: &Subspace) -> Result<QuotientSpace> {
    if w.ambient_dim != ambient_dim {
        return Err(Error::AmbientMismatch { left: ambient_dim, right: w.ambient_dim });
    }
    let f = w.field;
    let free = w.free_coordinates();
    let columns: Vec<Vector> = (0..ambient_dim)
        .map(|j| {
            let reduced = w.reduce(&f.unit_vector(ambient_dim, j));
            free.iter().map(|&c| reduced[c].clone()).collect()
        })
        .collect();
    let projection = LinearMap::from_columns(f, free.len(), &columns);
    let section_cols: Vec<Vector> =
        free.iter().map(|&c| f.unit_vector(ambient_dim, c)).collect();
    let section = LinearMap::from_columns(f, ambient_dim, &section_cols);
    Ok(QuotientSpace { subspace: w.clone(), projection, section })
}

/// Cokernel of `m` as a quotient of its codomain.
pub fn cokernel(m: &LinearMap) -> QuotientSpace {
    quotient(m.rows(), &image(m)).expect("image lives in the codomain")
}

/// Matrix of `f` restricted to `u`, in the basis coordinates of `u` and `w`.
/// Fails when `f(u)` is not contained in `w`.
pub fn induced_map(f: &LinearMap, u: &Subspace, w: &Subspace) -> Result<LinearMap> {
    if f.cols() != u.ambient_dim() || f.rows() != w.ambient_dim() {
        return Err(Error::Dimension(format!(
            "{}x{} map between subspaces of F^{} and F^{}",
            f.rows(),
            f.cols(),
            u.ambient_dim(),
            w.ambient_dim()
        )));
    }
    let mut columns = Vec::with_capacity(u.dim());
    for (k, b) in u.basis_vectors().iter().enumerate() {
        let coords = w
            .coordinates(&f.apply(b))
            .ok_or(Error::NotInduced { basis_index: k })?;
        columns.push(coords);
    }
    Ok(LinearMap::from_columns(f.field(), w.dim(), &columns))
}

/// Map induced by `f` between quotient spaces; requires `f(src.sub) <= dst.sub`.
pub fn induced_quotient_map(
    f: &LinearMap,
    src: &QuotientSpace,
    dst: &QuotientSpace,
) -> Result<LinearMap> {
    if f.cols() != src.ambient_dim() || f.rows() != dst.ambient_dim() {
        return Err(Error::Dimension("induced quotient map".into()));
    }
    for (k, b) in src.subspace.basis_vectors().iter().enumerate() {
        if !dst.subspace.contains(&f.apply(b))? {
            return Err(Error::NotInduced { basis_index: k });
        }
    }
    Ok(&(&dst.projection * f) * &src.section)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f2() -> Field {
        Field::prime(2).unwrap()
    }

    fn v(f: Field, xs: &[i64]) -> Vector {
        xs.iter().map(|&x| f.from_i64(x)).collect()
    }

    #[test]
    fn kernel_examples() {
        let f3 = Field::prime(3).unwrap();
        assert!(kernel(&LinearMap::identity(f3, 2)).is_zero());

        let z = LinearMap::zero(f2(), 1, 2);
        assert_eq!(kernel(&z), Subspace::full(f2(), 2));

        let m = LinearMap::from_ints(f2(), 2, 2, &[1, 0, 1, 0]);
        assert_eq!(kernel(&m), Subspace::span(f2(), 2, [v(f2(), &[0, 1])]));
    }

    #[test]
    fn image_examples() {
        assert!(image(&LinearMap::zero(f2(), 2, 3)).is_zero());
        assert!(image(&LinearMap::identity(f2(), 3)).is_full());
        let m = LinearMap::from_ints(f2(), 2, 1, &[1, 1]);
        assert_eq!(image(&m), Subspace::span(f2(), 2, [v(f2(), &[1, 1])]));
    }

    #[test]
    fn quotient_examples() {
        let f = f2();
        let q = quotient(2, &Subspace::zero(f, 2)).unwrap();
        assert_eq!(q.dim(), 2);
        assert!(q.projection.is_identity());

        assert_eq!(quotient(2, &Subspace::full(f, 2)).unwrap().dim(), 0);

        let w = Subspace::span(f, 2, [v(f, &[1, 1])]);
        let q = quotient(2, &w).unwrap();
        assert_eq!(q.dim(), 1);
        assert!(f.is_zero_vector(&q.class_of(&v(f, &[1, 1]))));
        assert_eq!(q.projection.rank(), 1);
        assert!((&q.projection * &q.section).is_identity());
        assert_eq!(kernel(&q.projection), w);

        assert!(matches!(
            quotient(3, &w),
            Err(Error::AmbientMismatch { .. })
        ));
    }

    #[test]
    fn induced_map_examples() {
        let f = f2();
        let u = Subspace::span(f, 3, [v(f, &[1, 0, 1]), v(f, &[0, 1, 1])]);
        let m = induced_map(&LinearMap::identity(f, 3), &u, &u).unwrap();
        assert!(m.is_identity());

        let zero = Subspace::zero(f, 2);
        let any = LinearMap::from_ints(f, 2, 2, &[1, 1, 0, 1]);
        let e = induced_map(&any, &zero, &Subspace::full(f, 2)).unwrap();
        assert_eq!((e.rows(), e.cols()), (2, 0));

        let fm = LinearMap::from_ints(f, 2, 2, &[1, 1, 0, 0]);
        let u = Subspace::span(f, 2, [v(f, &[1, 1])]);
        let w = kernel(&LinearMap::from_ints(f, 1, 2, &[0, 1]));
        assert_eq!(w, Subspace::span(f, 2, [v(f, &[1, 0])]));
        let m = induced_map(&fm, &u, &w).unwrap();
        assert_eq!(m, LinearMap::zero(f, 1, 1));

        // (1,0) is not sent into span{(0,1)}
        let bad = induced_map(
            &LinearMap::identity(f, 2),
            &Subspace::span(f, 2, [v(f, &[1, 0])]),
            &Subspace::span(f, 2, [v(f, &[0, 1])]),
        );
        assert_eq!(bad, Err(Error::NotInduced { basis_index: 0 }));
    }

    #[test]
    fn lattice_examples() {
        let f = f2();
        let a = Subspace::span(f, 2, [v(f, &[1, 0])]);
        let b = Subspace::span(f, 2, [v(f, &[0, 1])]);
        let c = Subspace::span(f, 2, [v(f, &[1, 1])]);
        assert_eq!(a.intersect(&a).unwrap(), a);
        assert!(a.intersect(&b).unwrap().is_zero());
        assert!(a.sum(&c).unwrap().is_full());
        assert!(a.leq(&a.sum(&b).unwrap()).unwrap());
        assert!(!a.leq(&b).unwrap());
        assert!(matches!(
            a.intersect(&Subspace::zero(f, 3)),
            Err(Error::AmbientMismatch { .. })
        ));
        assert!(a.contains(&v(f, &[1, 0, 0])).is_err());
    }

    #[test]
    fn canonical_form_ignores_generators() {
        let q = Field::rationals();
        let a = Subspace::span(q, 3, [v(q, &[1, 2, 3]), v(q, &[0, 1, 1])]);
        let b = Subspace::span(q, 3, [v(q, &[1, 3, 4]), v(q, &[2, 5, 7]), v(q, &[1, 1, 2])]);
        assert_eq!(a, b);
    }

    #[test]
    fn preimage_of_zero_is_kernel() {
        let f5 = Field::prime(5).unwrap();
        let m = LinearMap::from_ints(f5, 2, 3, &[1, 2, 3, 2, 4, 1]);
        assert_eq!(Subspace::zero(f5, 2).preimage(&m).unwrap(), kernel(&m));
    }
}
