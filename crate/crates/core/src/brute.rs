//! Exhaustive enumeration over `F_2`.
//!
//! Everything here works on bit-packed vectors and decides statements
//! straight from their definitions, without row reduction, so it can serve
//! as an independent oracle for the subspace-level computations. Only small
//! dimensions are practical (the cost is exponential).

use std::collections::BTreeSet;

use crate::field::{Field, Scalar, Vector};
use crate::matrix::LinearMap;
use crate::relation::{Cross, Relation};
use crate::subspace::Subspace;
use crate::grid::Grid;
use crate::quiverhom::{Representation, RepMap, RightExact};
use crate::snake::SnakeInput;

/// Vectors in `F_2^n`, `n <= 24`, as bit masks (bit `i` = coordinate `i`).
pub type Bits = u32;

pub fn is_f2(field: Field) -> bool {
    field == Field::Prime(2)
}

/// A matrix over `F_2` stored by columns.
#[derive(Clone, Debug)]
pub struct BitMatrix {
    pub rows: usize,
    pub cols: usize,
    columns: Vec<Bits>,
}

impl BitMatrix {
    /// Panics unless `m` is over `F_2` with at most 24 rows.
    pub fn new(m: &LinearMap) -> BitMatrix {
        assert!(is_f2(m.field()), "enumeration oracle needs F_2");
        assert!(m.rows() <= 24);
        let columns = m.columns().iter().map(|c| to_bits(c)).collect();
        BitMatrix { rows: m.rows(), cols: m.cols(), columns }
    }

    pub fn apply(&self, x: Bits) -> Bits {
        self.columns
            .iter()
            .enumerate()
            .filter(|(j, _)| x >> j & 1 == 1)
            .fold(0, |acc, (_, c)| acc ^ c)
    }

    /// `self . inner`
    pub fn after(&self, inner: &BitMatrix) -> BitMatrix {
        assert_eq!(self.cols, inner.rows);
        BitMatrix {
            rows: self.rows,
            cols: inner.cols,
            columns: inner.columns.iter().map(|&c| self.apply(c)).collect(),
        }
    }
}

pub fn to_bits(v: &[Scalar]) -> Bits {
    v.iter().enumerate().fold(0, |acc, (i, x)| match x {
        Scalar::Mod(1) => acc | 1 << i,
        Scalar::Mod(0) => acc,
        other => panic!("{other} is not an element of F_2"),
    })
}

pub fn from_bits(n: usize, x: Bits) -> Vector {
    (0..n).map(|i| Scalar::Mod(u64::from(x >> i & 1))).collect()
}

/// Every vector of `F_2^n`.
pub fn all(n: usize) -> impl Iterator<Item = Bits> + Clone {
    assert!(n <= 24);
    0..(1 as Bits) << n
}

pub fn kernel_set(m: &LinearMap) -> BTreeSet<Bits> {
    let b = BitMatrix::new(m);
    all(m.cols()).filter(|&x| b.apply(x) == 0).collect()
}

pub fn image_set(m: &LinearMap) -> BTreeSet<Bits> {
    let b = BitMatrix::new(m);
    all(m.cols()).map(|x| b.apply(x)).collect()
}

/// All elements of a subspace, from all combinations of its basis.
pub fn subspace_set(s: &Subspace) -> BTreeSet<Bits> {
    let gens: Vec<Bits> = s.basis_vectors().iter().map(|v| to_bits(v)).collect();
    span_set(&gens)
}

pub fn span_set(gens: &[Bits]) -> BTreeSet<Bits> {
    all(gens.len())
        .map(|c| {
            gens.iter()
                .enumerate()
                .filter(|(i, _)| c >> i & 1 == 1)
                .fold(0, |acc, (_, g)| acc ^ g)
        })
        .collect()
}

/// The relation as a set of pairs `(b, a)`.
pub fn relation_set(r: &Relation) -> BTreeSet<(Bits, Bits)> {
    let l = r.left_dim();
    let mask = (1 << l) - 1;
    subspace_set(r.space())
        .into_iter()
        .map(|v| (v & mask, v >> l))
        .collect()
}

/// `{(m a, a)}`
pub fn graph_set(m: &LinearMap) -> BTreeSet<(Bits, Bits)> {
    let b = BitMatrix::new(m);
    all(m.cols()).map(|a| (b.apply(a), a)).collect()
}

pub fn inverse_set(r: &BTreeSet<(Bits, Bits)>) -> BTreeSet<(Bits, Bits)> {
    r.iter().map(|&(b, a)| (a, b)).collect()
}

/// `{(b, c) : (b, a) in r and (a, c) in s for some a}`
pub fn compose_sets(
    r: &BTreeSet<(Bits, Bits)>,
    s: &BTreeSet<(Bits, Bits)>,
) -> BTreeSet<(Bits, Bits)> {
    let mut out = BTreeSet::new();
    for &(b, a) in r {
        for &(a2, c) in s {
            if a == a2 {
                out.insert((b, c));
            }
        }
    }
    out
}

/// The three statements of the cross lemma, decided element by element.
pub fn cross_lemma_verdicts(cross: &Cross) -> [bool; 3] {
    let beta1 = BitMatrix::new(&cross.beta1);
    let beta2 = BitMatrix::new(&cross.beta2);
    let f = BitMatrix::new(&cross.f);
    let g = BitMatrix::new(&cross.g);
    let (a_dim, b1_dim, b2_dim, _, _) = cross.dims();

    let im_b3: BTreeSet<Bits> = all(a_dim).map(|a| beta2.apply(f.apply(a))).collect();
    let im_c: BTreeSet<Bits> = all(b1_dim).map(|b| g.apply(beta1.apply(b))).collect();
    let u: BTreeSet<(Bits, Bits)> = all(b2_dim).map(|b| (g.apply(b), beta2.apply(b))).collect();
    let first = u
        .iter()
        .all(|(c, b3)| im_b3.contains(b3) == im_c.contains(c));

    let v: Vec<(Bits, Bits)> = all(b1_dim)
        .flat_map(|b1| all(a_dim).map(move |a| (b1, a)))
        .filter(|&(b1, a)| beta1.apply(b1) == f.apply(a))
        .collect();
    let second = all(a_dim).all(|a| {
        (beta2.apply(f.apply(a)) == 0) == v.iter().any(|&(_, a2)| a2 == a)
    });
    let third = all(b1_dim).all(|b1| {
        (g.apply(beta1.apply(b1)) == 0) == v.iter().any(|&(b, _)| b == b1)
    });
    [first, second, third]
}

/// `log2` of the size of a set known to be an `F_2`-subspace.
pub fn log2_size<T>(set: &BTreeSet<T>) -> usize {
    assert!(set.len().is_power_of_two());
    set.len().trailing_zeros() as usize
}

/// The connecting relation of a snake diagram by the element chase: all
/// pairs `(c, [a'])` with `gamma(c) = 0`, `g(b) = c` and `f'(a') = beta(b)`
/// for some `b`. Classes `[a']` modulo `Im alpha` are named by their least
/// element.
pub fn snake_delta_set(input: &SnakeInput) -> BTreeSet<(Bits, Bits)> {
    let g = BitMatrix::new(&input.g);
    let gamma = BitMatrix::new(&input.gamma);
    let beta = BitMatrix::new(&input.beta);
    let fp = BitMatrix::new(&input.fp);
    let im_alpha = image_set(&input.alpha);
    let (_, b, _, a_p, _, _) = input.dims();

    let mut out = BTreeSet::new();
    for bb in all(b) {
        let c = g.apply(bb);
        if gamma.apply(c) != 0 {
            continue;
        }
        let target = beta.apply(bb);
        for ap in all(a_p) {
            if fp.apply(ap) == target {
                out.insert((c, coset_min(ap, &im_alpha)));
            }
        }
    }
    out
}

pub fn coset_min(x: Bits, sub: &BTreeSet<Bits>) -> Bits {
    sub.iter().map(|s| x ^ s).min().unwrap_or(x)
}

/// Every morphism `x -> y` (as flattened per-vertex matrices, vertex by
/// vertex, row-major), found by trying all vertexwise tuples of matrices.
pub fn hom_set(x: &Representation, y: &Representation) -> Vec<RepMap> {
    let field = x.field();
    let shapes: Vec<(usize, usize)> = (0..x.quiver().vertex_count())
        .map(|v| (y.dims()[v], x.dims()[v]))
        .collect();
    let total: usize = shapes.iter().map(|(r, c)| r * c).sum();
    assert!(total <= 20, "hom enumeration too large");
    let mut out = Vec::new();
    for bits in all(total) {
        let mut offset = 0;
        let components = shapes
            .iter()
            .map(|&(r, c)| {
                let data: Vec<i64> = (0..r * c)
                    .map(|k| i64::from(bits >> (offset + k) & 1))
                    .collect();
                offset += r * c;
                LinearMap::from_ints(field, r, c, &data)
            })
            .collect();
        let phi = RepMap::new(components);
        if phi.is_morphism(x, y) {
            out.push(phi);
        }
    }
    out
}

/// Flattened bit form of a morphism, matching the enumeration order of
/// [`hom_set`].
pub fn rep_map_bits(phi: &RepMap) -> Bits {
    let mut bits = 0;
    let mut offset = 0;
    for m in phi.components() {
        for (k, e) in m.entries().iter().enumerate() {
            if matches!(e, Scalar::Mod(1)) {
                bits |= 1 << (offset + k);
            }
        }
        offset += m.entries().len();
    }
    bits
}

/// Homology dimensions of the two kernel complexes of a kernel-orientation
/// grid at positions `1, 2, ...`, counting cycles and boundaries element
/// by element.
pub fn kernel_homology_by_enumeration(grid: &Grid) -> (Vec<usize>, Vec<usize>) {
    let shape = grid.shape();
    let top: Vec<(usize, usize)> = (0..shape.row_len(0)).map(|j| (0, j)).collect();
    let left: Vec<(usize, usize)> = (0..shape.col_len(0)).map(|i| (i, 0)).collect();
    let line = |cells: &[(usize, usize)], along_row: bool| -> Vec<usize> {
        let kernels: Vec<BTreeSet<Bits>> = cells
            .iter()
            .map(|&(i, j)| {
                let (ki, kj) = if along_row { (i + 1, j) } else { (i, j + 1) };
                if shape.contains(ki, kj) {
                    let m = if along_row { grid.v(i, j) } else { grid.h(i, j) };
                    kernel_set(m)
                } else {
                    all(grid.dim(i, j)).collect()
                }
            })
            .collect();
        let step = |k: usize| {
            let (i, j) = cells[k];
            BitMatrix::new(if along_row { grid.h(i, j) } else { grid.v(i, j) })
        };
        (0..cells.len())
            .map(|k| {
                let cycles = if k + 1 < cells.len() {
                    let m = step(k);
                    kernels[k].iter().filter(|&&x| m.apply(x) == 0).count()
                } else {
                    kernels[k].len()
                };
                let boundaries: BTreeSet<Bits> = if k > 0 {
                    let m = step(k - 1);
                    kernels[k - 1].iter().map(|&x| m.apply(x)).collect()
                } else {
                    BTreeSet::from([0])
                };
                cycles.trailing_zeros() as usize - log2_size(&boundaries)
            })
            .collect()
    };
    (line(&top, true), line(&left, false))
}

/// Homology dimensions of the two cokernel complexes of a
/// cokernel-orientation grid, `(right, bottom)` at positions `1, 2, ...`.
pub fn cokernel_homology_by_enumeration(grid: &Grid) -> (Vec<usize>, Vec<usize>) {
    let shape = grid.shape();
    let right: Vec<(usize, usize)> = (0..shape.col_len(0)).map(|i| (i, 0)).collect();
    let bottom: Vec<(usize, usize)> = (0..shape.row_len(0)).map(|j| (0, j)).collect();
    // along the column the killed images come from the horizontal maps
    let line = |cells: &[(usize, usize)], along_column: bool| -> Vec<usize> {
        let killed: Vec<BTreeSet<Bits>> = cells
            .iter()
            .map(|&(i, j)| {
                let (ki, kj) = if along_column { (i, j + 1) } else { (i + 1, j) };
                if shape.contains(ki, kj) {
                    image_set(if along_column { grid.h(i, j) } else { grid.v(i, j) })
                } else {
                    BTreeSet::from([0])
                }
            })
            .collect();
        // map from cell k to cell k - 1
        let step = |k: usize| {
            let (i, j) = cells[k - 1];
            BitMatrix::new(if along_column { grid.v(i, j) } else { grid.h(i, j) })
        };
        (0..cells.len())
            .map(|k| {
                let (i, j) = cells[k];
                let cycles = if k > 0 {
                    let m = step(k);
                    all(grid.dim(i, j)).filter(|&x| killed[k - 1].contains(&m.apply(x))).count()
                } else {
                    1 << grid.dim(i, j)
                };
                let mut gens: Vec<Bits> = killed[k].iter().copied().collect();
                if k + 1 < cells.len() {
                    let m = step(k + 1);
                    let (ni, nj) = cells[k + 1];
                    gens.extend(all(grid.dim(ni, nj)).map(|x| m.apply(x)));
                }
                let boundaries = closure(&gens);
                cycles.trailing_zeros() as usize - log2_size(&boundaries)
            })
            .collect()
    };
    (line(&right, true), line(&bottom, false))
}

/// The subspace generated by a set of vectors.
fn closure(gens: &[Bits]) -> BTreeSet<Bits> {
    let mut set = BTreeSet::from([0]);
    for &g in gens {
        if !set.contains(&g) {
            let shifted: Vec<Bits> = set.iter().map(|x| x ^ g).collect();
            set.extend(shifted);
        }
    }
    set
}

/// `dim Cok (Hom(y, a) -> Hom(x, a))` with both Hom sets enumerated.
pub fn functor_dim_by_enumeration(eseq: &RightExact, a: &Representation) -> usize {
    let from_x = hom_set(&eseq.x, a);
    let pulled: BTreeSet<Bits> = hom_set(&eseq.y, a)
        .iter()
        .map(|phi| rep_map_bits(&phi.compose(&eseq.u).expect("sizes match")))
        .collect();
    from_x.len().trailing_zeros() as usize - log2_size(&pulled)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bits_roundtrip() {
        let v = from_bits(4, 0b1010);
        assert_eq!(to_bits(&v), 0b1010);
    }

    #[test]
    fn kernel_by_enumeration() {
        let f = Field::prime(2).unwrap();
        let m = LinearMap::from_ints(f, 2, 2, &[1, 0, 1, 0]);
        assert_eq!(kernel_set(&m), BTreeSet::from([0, 0b10]));
        assert_eq!(image_set(&m), BTreeSet::from([0, 0b11]));
    }
}
