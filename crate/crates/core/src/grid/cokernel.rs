//! Cokernel complexes of a grid in cokernel orientation.
//!
//! With `(0, 0)` the sink, the right column of the drawn picture is column
//! 0 and the bottom row is row 0. Position `k >= 1` is the cokernel at cell
//! `(k-1, 0)` (of the incoming horizontal map), resp. `(0, k-1)` (of the
//! incoming vertical map). As complexes, in arrow order, they read
//! `... -> Q_2 -> Q_1 -> 0`.
//!
//! Homology dimensions and the isomorphism are obtained from the kernel side
//! of the dual grid; the complexes themselves are also built directly so the
//! two routes can be compared.

use super::kernel::{kernel_line, Line};
use super::{kcl_homology_dims, kcl_homology_iso, Grid, HomologyIso, Orientation};
use crate::complex::ChainComplex;
use crate::error::{Error, Result};
use crate::matrix::LinearMap;
use crate::subspace::{cokernel, induced_quotient_map, quotient, QuotientSpace, Subspace};

/// Homology dimensions of both cokernel complexes at positions `1, 2, ...`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CclDims {
    pub right: Vec<usize>,
    pub bottom: Vec<usize>,
    pub admissible: Vec<usize>,
}

impl CclDims {
    pub fn agree(&self) -> bool {
        self.admissible.iter().all(|&n| self.right[n - 1] == self.bottom[n - 1])
    }
}

/// Quotients along the right column or bottom row, nearest the corner
/// first, and the complex they form (farthest first, trailing zero).
fn cokernel_line(g: &Grid, line: Line) -> Result<(Vec<QuotientSpace>, ChainComplex)> {
    let f = g.field();
    let shape = g.shape();
    let len = match line {
        Line::Left => shape.col_len(0),
        Line::Top => shape.row_len(0),
    };
    let terms: Vec<QuotientSpace> = (0..len)
        .map(|k| match line {
            Line::Left if shape.contains(k, 1) => Ok(cokernel(g.h(k, 0))),
            Line::Top if shape.contains(1, k) => Ok(cokernel(g.v(0, k))),
            Line::Left => quotient(g.dim(k, 0), &Subspace::zero(f, g.dim(k, 0))),
            Line::Top => quotient(g.dim(0, k), &Subspace::zero(f, g.dim(0, k))),
        })
        .collect::<Result<_>>()?;
    let mut dims: Vec<usize> = terms.iter().rev().map(QuotientSpace::dim).collect();
    dims.push(0);
    let mut maps = Vec::with_capacity(len);
    for k in (1..len).rev() {
        let m = match line {
            Line::Left => g.v(k - 1, 0),
            Line::Top => g.h(0, k - 1),
        };
        let induced = induced_quotient_map(m, &terms[k], &terms[k - 1]).map_err(|e| {
            Error::TheoremViolation(format!("cokernel map at position {} is not induced: {e}", k + 1))
        })?;
        maps.push(induced);
    }
    maps.push(LinearMap::zero(f, 0, terms[0].dim()));
    Ok((terms, ChainComplex::new(f, dims, maps)?))
}

/// `... -> Cok h(1,0) -> Cok h(0,0) -> 0`, maps induced by the column.
pub fn cokernel_complex_right(g: &Grid) -> Result<ChainComplex> {
    g.require(Orientation::Cokernel)?;
    Ok(cokernel_line(g, Line::Left)?.1)
}

/// `... -> Cok v(0,1) -> Cok v(0,0) -> 0`, maps induced by the row.
pub fn cokernel_complex_bottom(g: &Grid) -> Result<ChainComplex> {
    g.require(Orientation::Cokernel)?;
    Ok(cokernel_line(g, Line::Top)?.1)
}

/// Homology dimensions by duality: the right column of `g` is the left
/// column of `dualize(g)`, the bottom row its top row.
pub fn ccl_homology_dims(g: &Grid) -> Result<CclDims> {
    g.require(Orientation::Cokernel)?;
    let d = kcl_homology_dims(&g.dualize())?;
    Ok(CclDims { right: d.left, bottom: d.top, admissible: d.admissible })
}

/// Homology dimensions read off the directly built cokernel complexes.
pub fn ccl_homology_dims_direct(g: &Grid) -> Result<CclDims> {
    g.require(Orientation::Cokernel)?;
    let by_position = |c: ChainComplex| -> Result<Vec<usize>> {
        let mut dims = c.homology_dims()?;
        dims.pop();
        dims.reverse();
        Ok(dims)
    };
    Ok(CclDims {
        right: by_position(cokernel_line(g, Line::Left)?.1)?,
        bottom: by_position(cokernel_line(g, Line::Top)?.1)?,
        admissible: super::admissible_positions(g.shape()),
    })
}

/// The isomorphism from right homology to bottom homology at position `n`,
/// in the homology coordinates of the directly built complexes.
///
/// The kernel-side isomorphism `M` of the dual grid goes from bottom* to
/// right*. With pairing matrices `P` between each dual homology and the
/// corresponding direct one, the adjoint is `P_bottom^-1 M^T P_right`.
pub fn ccl_homology_iso(g: &Grid, n: usize) -> Result<HomologyIso> {
    g.require(Orientation::Cokernel)?;
    let dual = g.dualize();
    let m = kcl_homology_iso(&dual, n)?;
    let (dual_top, _) = kernel_line(&dual, Line::Top)?;
    let (dual_left, _) = kernel_line(&dual, Line::Left)?;
    let (right_q, right_c) = cokernel_line(g, Line::Left)?;
    let (bottom_q, bottom_c) = cokernel_line(g, Line::Top)?;
    let right_h = right_c.homology_at(right_c.len() - 1 - n)?;
    let bottom_h = bottom_c.homology_at(bottom_c.len() - 1 - n)?;

    let p_right = pairing(
        &(&dual_left[n - 1].inclusion() * &m.target.representatives()),
        &(&right_q[n - 1].section * &right_h.representatives()),
    );
    let p_bottom = pairing(
        &(&dual_top[n - 1].inclusion() * &m.source.representatives()),
        &(&bottom_q[n - 1].section * &bottom_h.representatives()),
    );
    let p_bottom_inv = p_bottom.inverse().ok_or_else(|| {
        Error::TheoremViolation(format!("position {n}: homology pairing is degenerate"))
    })?;
    let matrix = &(&p_bottom_inv * &m.matrix.transpose()) * &p_right;
    if !matrix.is_invertible() {
        return Err(Error::TheoremViolation(format!("position {n}: transported matrix is singular")));
    }
    Ok(HomologyIso { position: n, source: right_h, target: bottom_h, matrix })
}

/// `P[a][b] = <z_a, y_b>` for columns `z_a` of `z` and `y_b` of `y`.
fn pairing(z: &LinearMap, y: &LinearMap) -> LinearMap {
    &z.transpose() * y
}
