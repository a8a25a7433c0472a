//! The cross lemma: one exact row `A -f-> B2 -g-> C` and one exact column
//! `B1 -beta1-> B2 -beta2-> B3` meeting at `B2`.

use crate::brute;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::matrix::LinearMap;
use crate::relation::Relation;
use crate::subspace::{image, kernel, Subspace};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cross {
    pub beta1: LinearMap,
    pub beta2: LinearMap,
    pub f: LinearMap,
    pub g: LinearMap,
}

/// Verdicts for the three statements of the cross lemma, each decided by an
/// equality of canonical subspaces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossReport {
    /// For `(c, b3)` in `g . beta2^-1`: `b3 in Im beta2 f` iff `c in Im g beta1`.
    pub image_transfer: bool,
    /// `Ker beta2 f` is the domain of `v = beta1^-1 . f`.
    pub kernel_domain: bool,
    /// `Ker g beta1` is the range of `v`.
    pub kernel_range: bool,
    /// The same three verdicts by element enumeration; present over `F_2`
    /// when every space has dimension at most 3.
    pub enumerated: Option<[bool; 3]>,
}

impl CrossReport {
    pub fn verdicts(&self) -> [bool; 3] {
        [self.image_transfer, self.kernel_domain, self.kernel_range]
    }

    pub fn all_hold(&self) -> bool {
        self.verdicts().iter().all(|&b| b) && self.enumerated.map_or(true, |e| e == self.verdicts())
    }
}

impl Cross {
    pub fn field(&self) -> Field {
        self.f.field()
    }

    /// `(dim A, dim B1, dim B2, dim B3, dim C)`
    pub fn dims(&self) -> (usize, usize, usize, usize, usize) {
        (self.f.cols(), self.beta1.cols(), self.f.rows(), self.beta2.rows(), self.g.rows())
    }

    /// Checks that the maps meet at a common `B2` and that the row and the
    /// column are exact there.
    pub fn check(&self) -> Result<()> {
        let field = self.field();
        for m in [&self.beta1, &self.beta2, &self.g] {
            if m.field() != field {
                return Err(Error::FieldMismatch(field, m.field()));
            }
        }
        let b2 = self.f.rows();
        if self.g.cols() != b2 || self.beta1.rows() != b2 || self.beta2.cols() != b2 {
            return Err(Error::Dimension(format!(
                "maps do not meet at a common B2 (f lands in F^{b2}, g starts at F^{}, beta1 lands in F^{}, beta2 starts at F^{})",
                self.g.cols(),
                self.beta1.rows(),
                self.beta2.cols()
            )));
        }
        if image(&self.f) != kernel(&self.g) {
            return Err(Error::Hypothesis("row A -> B2 -> C is not exact at B2".into()));
        }
        if image(&self.beta1) != kernel(&self.beta2) {
            return Err(Error::Hypothesis("column B1 -> B2 -> B3 is not exact at B2".into()));
        }
        Ok(())
    }
}

/// Decides the three statements of the cross lemma on a concrete cross.
pub fn verify_cross_lemma(cross: &Cross) -> Result<CrossReport> {
    cross.check()?;
    let Cross { beta1, beta2, f, g } = cross;
    let field = cross.field();
    let (_, _, _, b3, c) = cross.dims();

    // (1) u = g . beta2^-1 on C x B3
    let u = Relation::graph(g).compose(&Relation::graph(beta2).inverse())?;
    let im_b3 = image(&(beta2 * f));
    let im_c = image(&(g * beta1));
    let c_block = block_sum(field, &Subspace::full(field, c), &im_b3);
    let b3_block = block_sum(field, &im_c, &Subspace::full(field, b3));
    let image_transfer = u.space().intersect(&c_block)? == u.space().intersect(&b3_block)?;

    // (2) v = beta1^-1 . f on B1 x A
    let v = Relation::graph(beta1).inverse().compose(&Relation::graph(f))?;
    let kernel_domain = kernel(&(beta2 * f)) == v.domain();
    let kernel_range = kernel(&(g * beta1)) == v.range();

    let (da, db1, db2, db3, dc) = cross.dims();
    let small = [da, db1, db2, db3, dc].iter().all(|&d| d <= 3);
    let enumerated = (brute::is_f2(field) && small).then(|| brute::cross_lemma_verdicts(cross));

    Ok(CrossReport { image_transfer, kernel_domain, kernel_range, enumerated })
}

/// `left (+) right` inside the concatenated space.
fn block_sum(field: Field, left: &Subspace, right: &Subspace) -> Subspace {
    let (l, r) = (left.ambient_dim(), right.ambient_dim());
    let lefts = left.basis_vectors().into_iter().map(|mut v| {
        v.extend(field.zero_vector(r));
        v
    });
    let rights = right.basis_vectors().into_iter().map(|v| {
        let mut w = field.zero_vector(l);
        w.extend(v);
        w
    });
    Subspace::span(field, l + r, lefts.chain(rights))
}
