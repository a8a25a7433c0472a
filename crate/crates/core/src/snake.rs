//! The snake lemma for a commutative diagram with exact rows
//!
//! ```text
//!        A  -f->  B  -g->  C  -> 0
//!        |alpha   |beta    |gamma
//!  0 ->  A' -f'-> B' -g'-> C'
//! ```
//!
//! computed two ways: by the element chase, and from the kernel and
//! cokernel lemmas applied to two auxiliary grids.

use crate::complex::ChainComplex;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::grid::{
    ccl_homology_dims, ccl_homology_iso, corollary_check, Grid, Orientation, StaircaseShape,
};
use crate::matrix::LinearMap;
use crate::relation::Relation;
use crate::subspace::{cokernel, image, induced_map, induced_quotient_map, kernel, QuotientSpace, Subspace};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnakeInput {
    pub f: LinearMap,
    pub g: LinearMap,
    pub fp: LinearMap,
    pub gp: LinearMap,
    pub alpha: LinearMap,
    pub beta: LinearMap,
    pub gamma: LinearMap,
}

/// How the six-term sequence was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Route {
    Chase,
    Grids,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnakeResult {
    pub route: Route,
    /// `Ker alpha -> Ker beta -> Ker gamma -> Cok alpha -> Cok beta -> Cok gamma`
    pub six_term: ChainComplex,
    /// Connecting map from `Ker gamma` to `Cok alpha` coordinates.
    pub delta: LinearMap,
    /// Exactness at `Ker beta`, `Ker gamma`, `Cok alpha`, `Cok beta`.
    pub exact: [bool; 4],
    /// `(dim Ker f~, dim Ker f)`: equal, so `Ker alpha -> Ker beta` is
    /// injective exactly when `f` is.
    pub kernel_end: (usize, usize),
    /// `(dim Cok g'', dim Cok g')`
    pub cokernel_end: (usize, usize),
    /// `(f monic, Ker alpha -> Ker beta monic)`
    pub f_monic_iff: (bool, bool),
    /// `(g' epi, Cok beta -> Cok gamma epi)`
    pub gp_epi_iff: (bool, bool),
}

impl SnakeResult {
    pub fn holds(&self) -> bool {
        self.exact.iter().all(|&e| e)
            && self.kernel_end.0 == self.kernel_end.1
            && self.cokernel_end.0 == self.cokernel_end.1
            && self.f_monic_iff.0 == self.f_monic_iff.1
            && self.gp_epi_iff.0 == self.gp_epi_iff.1
    }

    /// One verdict per asserted position: the four interior positions and
    /// the two ends.
    pub fn verdicts(&self) -> [bool; 6] {
        [
            self.kernel_end.0 == self.kernel_end.1,
            self.exact[0],
            self.exact[1],
            self.exact[2],
            self.exact[3],
            self.cokernel_end.0 == self.cokernel_end.1,
        ]
    }
}

impl SnakeInput {
    pub fn field(&self) -> Field {
        self.f.field()
    }

    /// `(A, B, C, A', B', C')`
    pub fn dims(&self) -> (usize, usize, usize, usize, usize, usize) {
        (
            self.f.cols(),
            self.f.rows(),
            self.g.rows(),
            self.fp.cols(),
            self.fp.rows(),
            self.gp.rows(),
        )
    }

    pub fn check(&self) -> Result<()> {
        let field = self.field();
        let named = [
            ("f", &self.f),
            ("g", &self.g),
            ("f'", &self.fp),
            ("g'", &self.gp),
            ("alpha", &self.alpha),
            ("beta", &self.beta),
            ("gamma", &self.gamma),
        ];
        if let Some((_, m)) = named.iter().find(|(_, m)| m.field() != field) {
            return Err(Error::FieldMismatch(field, m.field()));
        }
        let (a, b, c, ap, bp, cp) = self.dims();
        let expected = [(b, a), (c, b), (bp, ap), (cp, bp), (ap, a), (bp, b), (cp, c)];
        for ((name, m), (r, k)) in named.iter().zip(expected) {
            if (m.rows(), m.cols()) != (r, k) {
                return Err(Error::Dimension(format!(
                    "{name} is {}x{}, expected {r}x{k}",
                    m.rows(),
                    m.cols()
                )));
            }
        }
        if &self.fp * &self.alpha != &self.beta * &self.f {
            return Err(Error::Hypothesis("square A B A' B' does not commute".into()));
        }
        if &self.gp * &self.beta != &self.gamma * &self.g {
            return Err(Error::Hypothesis("square B C B' C' does not commute".into()));
        }
        if image(&self.f) != kernel(&self.g) {
            return Err(Error::Hypothesis("top row is not exact at B".into()));
        }
        if !self.g.is_surjective() {
            return Err(Error::Hypothesis("top row is not exact at C (g is not surjective)".into()));
        }
        if !self.fp.is_injective() {
            return Err(Error::Hypothesis("bottom row is not exact at A' (f' is not injective)".into()));
        }
        if image(&self.fp) != kernel(&self.gp) {
            return Err(Error::Hypothesis("bottom row is not exact at B'".into()));
        }
        Ok(())
    }
}

struct Pieces {
    ker: [Subspace; 3],
    cok: [QuotientSpace; 3],
    f_tilde: LinearMap,
    g_tilde: LinearMap,
    f_dd: LinearMap,
    g_dd: LinearMap,
}

fn pieces(input: &SnakeInput) -> Result<Pieces> {
    let ker = [kernel(&input.alpha), kernel(&input.beta), kernel(&input.gamma)];
    let cok = [cokernel(&input.alpha), cokernel(&input.beta), cokernel(&input.gamma)];
    let lift = |e: Error| Error::TheoremViolation(format!("restricted map is not induced: {e}"));
    Ok(Pieces {
        f_tilde: induced_map(&input.f, &ker[0], &ker[1]).map_err(lift)?,
        g_tilde: induced_map(&input.g, &ker[1], &ker[2]).map_err(lift)?,
        f_dd: induced_quotient_map(&input.fp, &cok[0], &cok[1]).map_err(lift)?,
        g_dd: induced_quotient_map(&input.gp, &cok[1], &cok[2]).map_err(lift)?,
        ker,
        cok,
    })
}

/// The connecting relation `proj . f'^-1 . beta . g^-1 . incl`, from
/// `Ker gamma` coordinates to `Cok alpha` coordinates.
pub fn delta_relation(input: &SnakeInput) -> Result<Relation> {
    input.check()?;
    let ker_gamma = kernel(&input.gamma);
    let cok_alpha = cokernel(&input.alpha);
    Relation::graph(&cok_alpha.projection)
        .compose(&Relation::graph(&input.fp).inverse())?
        .compose(&Relation::graph(&input.beta))?
        .compose(&Relation::graph(&input.g).inverse())?
        .compose(&Relation::graph(&ker_gamma.inclusion()))
}

fn assemble(input: &SnakeInput, p: &Pieces, delta: LinearMap, route: Route) -> Result<SnakeResult> {
    let f = input.field();
    let dims = vec![
        p.ker[0].dim(),
        p.ker[1].dim(),
        p.ker[2].dim(),
        p.cok[0].dim(),
        p.cok[1].dim(),
        p.cok[2].dim(),
    ];
    let six_term = ChainComplex::new(
        f,
        dims,
        vec![p.f_tilde.clone(), p.g_tilde.clone(), delta.clone(), p.f_dd.clone(), p.g_dd.clone()],
    )?;
    if let Some(index) = six_term.first_defect() {
        return Err(Error::TheoremViolation(format!(
            "six-term sequence is not a complex at map {index}"
        )));
    }
    let exact = [1, 2, 3, 4].map(|i| six_term.homology_dims().map(|h| h[i] == 0).unwrap_or(false));
    let ker_f = kernel(&input.f).dim();
    let ker_ft = kernel(&p.f_tilde).dim();
    let cok_gp = input.gp.rows() - input.gp.rank();
    let cok_gdd = p.g_dd.rows() - p.g_dd.rank();
    Ok(SnakeResult {
        route,
        delta,
        exact,
        kernel_end: (ker_ft, ker_f),
        cokernel_end: (cok_gdd, cok_gp),
        f_monic_iff: (input.f.is_injective(), p.f_tilde.is_injective()),
        gp_epi_iff: (input.gp.is_surjective(), p.g_dd.is_surjective()),
        six_term,
    })
}

/// The six-term sequence with the connecting map found by the chase.
pub fn snake(input: &SnakeInput) -> Result<SnakeResult> {
    let r = delta_relation(input)?;
    if !r.homogeneous().is_zero() {
        return Err(Error::TheoremViolation("connecting relation is multivalued".into()));
    }
    if !r.domain().is_full() {
        return Err(Error::TheoremViolation("connecting relation is not total on Ker gamma".into()));
    }
    let delta = r
        .to_map()
        .ok_or_else(|| Error::TheoremViolation("connecting relation is not a map".into()))?;
    let p = pieces(input)?;
    assemble(input, &p, delta, Route::Chase)
}

/// The kernel grid
///
/// ```text
///  A      -f->   B      -g->  C
///  A'     -f'->  B'     -g'-> C'
///  Cok a  -f''-> Cok b
/// ```
///
/// of shape `[3, 3, 2]`, whose corollary gives exactness at `Ker beta`.
pub fn kernel_side_grid(input: &SnakeInput) -> Result<Grid> {
    input.check()?;
    let p = pieces(input)?;
    let f = input.field();
    let (a, b, c, ap, bp, cp) = input.dims();
    let dims = [[a, b, c], [ap, bp, cp], [p.cok[0].dim(), p.cok[1].dim(), 0]];
    Grid::from_fn(
        f,
        StaircaseShape::new(vec![3, 3, 2])?,
        Orientation::Kernel,
        |i, j| dims[i][j],
        |i, j| match (i, j) {
            (0, 0) => input.f.clone(),
            (0, _) => input.g.clone(),
            (1, 0) => input.fp.clone(),
            (1, _) => input.gp.clone(),
            _ => p.f_dd.clone(),
        },
        |i, j| match (i, j) {
            (0, 0) => input.alpha.clone(),
            (0, 1) => input.beta.clone(),
            (0, _) => input.gamma.clone(),
            (_, 0) => p.cok[0].projection.clone(),
            _ => p.cok[1].projection.clone(),
        },
    )
}

/// The cokernel grid, drawn as
///
/// ```text
///  0    0       0        0        0
///  0 -> Ker f~ -> Ker a -> Ker b -> Ker c
///  0 -> Ker f  -> A     -> B     -> C
///  0 -> 0      -> A'    -> B'    -> C'
/// ```
///
/// and stored rotated, with `C'` at `(0, 0)`. Its right column ends in
/// `Cok g~` and its bottom row ends in `Cok alpha`, and position 3 of the
/// cokernel lemma identifies them.
pub fn cokernel_side_grid(input: &SnakeInput) -> Result<Grid> {
    input.check()?;
    let p = pieces(input)?;
    let f = input.field();
    let (a, b, c, ap, bp, cp) = input.dims();
    let ker_f = kernel(&input.f);
    let ker_ft = kernel(&p.f_tilde);
    let into_ker_f = induced_map(&p.ker[0].inclusion(), &ker_ft, &ker_f)
        .map_err(|e| Error::TheoremViolation(format!("Ker f~ does not land in Ker f: {e}")))?;
    let dims = [
        [0, 0, 0, 0, 0],
        [0, ker_ft.dim(), p.ker[0].dim(), p.ker[1].dim(), p.ker[2].dim()],
        [0, ker_f.dim(), a, b, c],
        [0, 0, ap, bp, cp],
    ];
    let zero = |r: usize, k: usize| LinearMap::zero(f, r, k);
    // physical horizontal map out of (r, k) and vertical map out of (r, k)
    let horizontal = |r: usize, k: usize| -> LinearMap {
        match (r, k) {
            (1, 1) => ker_ft.inclusion(),
            (1, 2) => p.f_tilde.clone(),
            (1, 3) => p.g_tilde.clone(),
            (2, 1) => ker_f.inclusion(),
            (2, 2) => input.f.clone(),
            (2, 3) => input.g.clone(),
            (3, 2) => input.fp.clone(),
            (3, 3) => input.gp.clone(),
            _ => zero(dims[r][k + 1], dims[r][k]),
        }
    };
    let vertical = |r: usize, k: usize| -> LinearMap {
        match (r, k) {
            (1, 1) => into_ker_f.clone(),
            (1, 2) => p.ker[0].inclusion(),
            (1, 3) => p.ker[1].inclusion(),
            (1, 4) => p.ker[2].inclusion(),
            (2, 2) => input.alpha.clone(),
            (2, 3) => input.beta.clone(),
            (2, 4) => input.gamma.clone(),
            _ => zero(dims[r + 1][k], dims[r][k]),
        }
    };
    Grid::from_fn(
        f,
        StaircaseShape::rectangle(4, 5)?,
        Orientation::Cokernel,
        |i, j| dims[3 - i][4 - j],
        |i, j| horizontal(3 - i, 3 - j),
        |i, j| vertical(2 - i, 4 - j),
    )
}

/// The six-term sequence assembled from the lemmas: exactness at `Ker beta`
/// from the kernel grid, and the connecting map as the cokernel lemma's
/// isomorphism `Cok g~ -> Ker f''` composed with the projection and the
/// inclusion.
pub fn snake_via_grids(input: &SnakeInput) -> Result<SnakeResult> {
    let kg = kernel_side_grid(input)?;
    kg.require_valid()
        .map_err(|e| Error::TheoremViolation(format!("kernel grid: {e}")))?;
    let corollary = corollary_check(&kg)?;
    if !corollary.holds {
        return Err(Error::TheoremViolation(format!(
            "kernel grid corollary fails: {:?} vs {:?}",
            corollary.top, corollary.left
        )));
    }

    let cg = cokernel_side_grid(input)?;
    cg.require_valid()
        .map_err(|e| Error::TheoremViolation(format!("cokernel grid: {e}")))?;
    let dims = ccl_homology_dims(&cg)?;
    if !dims.agree() {
        return Err(Error::TheoremViolation(format!(
            "cokernel grid dimensions disagree: {:?} vs {:?}",
            dims.right, dims.bottom
        )));
    }
    let iso = ccl_homology_iso(&cg, 3)?;
    let p = pieces(input)?;
    let cok_gt = cokernel(&p.g_tilde);
    let f = input.field();
    let columns = (0..p.ker[2].dim())
        .map(|k| {
            let q = cok_gt.projection.apply(&f.unit_vector(p.ker[2].dim(), k));
            let class = iso.source.class_of_vector(&q).ok_or_else(|| {
                Error::TheoremViolation("Cok g~ element is not a cycle".into())
            })?;
            Ok(iso.target.representative(&iso.matrix.apply(&class)))
        })
        .collect::<Result<Vec<_>>>()?;
    let delta = LinearMap::from_columns(f, p.cok[0].dim(), &columns);

    let result = assemble(input, &p, delta, Route::Grids)?;
    // the grid lemmas assert these directly
    let consistent = (corollary.top[0], corollary.left[0]) == result.kernel_end
        && (corollary.top[1] == 0) == result.exact[0]
        && (dims.bottom[0], dims.right[0]) == result.cokernel_end;
    if !consistent {
        return Err(Error::TheoremViolation(format!(
            "grid lemma data {corollary:?} / {dims:?} contradict the assembled sequence"
        )));
    }
    Ok(result)
}
