use std::fmt;

use super::matrix::{bracket, SquareMatrix};
use super::scalar::{Ring, Scalar};
use super::solve::solve_linear;
use super::span::{Span, SparseVec};
use crate::error::{Error, Result};

/// A bracket-closed subspace of `gl(n)`.
///
/// The basis is the reduced echelon form over the row-major flattening of
/// matrix coordinates, so it is reproducible and span equality is basis
/// equality.
#[derive(Clone)]
pub struct Subalgebra {
    n: usize,
    span: Span,
    basis: Vec<SquareMatrix>,
}

impl PartialEq for Subalgebra {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.span == other.span
    }
}

pub(crate) fn flatten(m: &SquareMatrix) -> SparseVec {
    let n = m.n();
    SparseVec::from_pairs(m.entries().map(|(&(i, j), v)| (SquareMatrix::<Scalar>::flat_index(n, i, j), v.clone())))
}

pub(crate) fn unflatten(n: usize, v: &SparseVec) -> SquareMatrix {
    SquareMatrix::from_entries(n, v.iter().map(|(k, x)| (SquareMatrix::<Scalar>::unflatten(n, *k), x.clone())))
}

impl Subalgebra {
    pub fn zero(n: usize) -> Self {
        Subalgebra { n, span: Span::new(), basis: Vec::new() }
    }

    /// Wraps a span after checking closure under the bracket.
    pub fn from_span(n: usize, span: Span) -> Result<Self> {
        let s = Self::from_span_unchecked(n, span);
        if !s.is_closed() {
            return Err(Error::NotSubalgebra);
        }
        Ok(s)
    }

    pub fn from_basis(n: usize, mats: &[SquareMatrix]) -> Result<Self> {
        Self::from_span(n, span_of(mats))
    }

    pub(crate) fn from_span_unchecked(n: usize, span: Span) -> Self {
        let basis = span.basis().into_iter().map(|v| unflatten(n, v)).collect();
        Subalgebra { n, span, basis }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[SquareMatrix] {
        &self.basis
    }

    pub fn span(&self) -> &Span {
        &self.span
    }

    pub fn contains(&self, m: &SquareMatrix) -> bool {
        self.span.contains(&flatten(m))
    }

    pub fn contains_all(&self, other: &Subalgebra) -> bool {
        self.span.contains_span(&other.span)
    }

    /// Coordinates in [`Subalgebra::basis`] order.
    pub fn coordinates(&self, m: &SquareMatrix) -> Option<Vec<Scalar>> {
        self.span.coordinates(&flatten(m))
    }

    pub fn is_closed(&self) -> bool {
        for (a, x) in self.basis.iter().enumerate() {
            for y in &self.basis[a + 1..] {
                if !self.contains(&bracket(x, y).expect("same n")) {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_abelian(&self) -> bool {
        self.basis.iter().enumerate().all(|(a, x)| self.basis[a + 1..].iter().all(|y| bracket(x, y).unwrap().is_zero()))
    }

    /// `[x_a, x_b]` in basis coordinates, indexed `[a][b]`.
    pub fn structure_constants(&self) -> Vec<Vec<Vec<Scalar>>> {
        self.basis
            .iter()
            .map(|x| {
                self.basis
                    .iter()
                    .map(|y| self.coordinates(&bracket(x, y).unwrap()).expect("closed under bracket"))
                    .collect()
            })
            .collect()
    }

    /// The derived algebra `[S, S]`.
    pub fn derived(&self) -> Subalgebra {
        let mut span = Span::new();
        for (a, x) in self.basis.iter().enumerate() {
            for y in &self.basis[a + 1..] {
                span.insert(&flatten(&bracket(x, y).unwrap()));
            }
        }
        Subalgebra::from_span_unchecked(self.n, span)
    }

    /// Dimensions along the derived series, ending at the first repeat.
    pub fn derived_series_dims(&self) -> Vec<usize> {
        let mut dims = vec![self.dim()];
        let mut cur = self.clone();
        loop {
            let next = cur.derived();
            if next.dim() == cur.dim() {
                return dims;
            }
            dims.push(next.dim());
            if next.dim() == 0 {
                return dims;
            }
            cur = next;
        }
    }

    pub fn is_solvable(&self) -> bool {
        self.derived_series_dims().last() == Some(&0)
    }

    /// Whether `self` is an ideal of `ambient` (`[ambient, self] ⊆ self`).
    pub fn is_ideal_in(&self, ambient: &Subalgebra) -> bool {
        ambient
            .basis
            .iter()
            .all(|x| self.basis.iter().all(|y| self.contains(&bracket(x, y).unwrap())))
    }

    /// Killing form `tr(ad x ad y)` of the algebra itself, in basis coordinates.
    pub fn killing_matrix(&self) -> Vec<Vec<Scalar>> {
        let c = self.structure_constants();
        let m = self.dim();
        // ad[a][row][col]: coefficient of x_row in [x_a, x_col]
        let ad = |a: usize, row: usize, col: usize| &c[a][col][row];
        let mut k = vec![vec![<Scalar as Ring>::zero(); m]; m];
        for a in 0..m {
            for b in a..m {
                let mut acc = <Scalar as Ring>::zero();
                for i in 0..m {
                    for j in 0..m {
                        let x = ad(a, i, j);
                        if !x.is_zero() {
                            let y = ad(b, j, i);
                            if !y.is_zero() {
                                acc += x * y;
                            }
                        }
                    }
                }
                k[a][b] = acc.clone();
                k[b][a] = acc;
            }
        }
        k
    }

    pub fn intersect(&self, other: &Subalgebra) -> Subalgebra {
        Subalgebra::from_span_unchecked(self.n, self.span.intersect(&other.span, self.n * self.n))
    }

    /// Image of a linear map applied to every basis element; closure is checked.
    pub fn map(&self, f: impl Fn(&SquareMatrix) -> SquareMatrix) -> Result<Subalgebra> {
        Subalgebra::from_basis(self.n, &self.basis.iter().map(f).collect::<Vec<_>>())
    }
}

pub(crate) fn span_of(mats: &[SquareMatrix]) -> Span {
    let mut span = Span::new();
    for m in mats {
        span.insert(&flatten(m));
    }
    span
}

/// Smallest bracket-closed subspace containing `gens`.
pub fn subalgebra_closure(n: usize, gens: &[SquareMatrix]) -> Result<Subalgebra> {
    if let Some(g) = gens.iter().find(|g| g.n() != n) {
        return Err(Error::DimensionMismatch(n, g.n()));
    }
    let mut span = Span::new();
    let mut elems: Vec<SquareMatrix> = Vec::new();
    let mut queue: Vec<SquareMatrix> = gens.to_vec();
    while let Some(x) = queue.pop() {
        if !span.insert(&flatten(&x)) {
            continue;
        }
        for y in &elems {
            let z = bracket(&x, y)?;
            if !z.is_zero() {
                queue.push(z);
            }
        }
        elems.push(x);
    }
    Ok(Subalgebra::from_span_unchecked(n, span))
}

/// Largest solvable ideal, as the Killing-orthogonal of `[S, S]`.
///
/// The result is checked to be a solvable ideal before it is returned.
pub fn solvable_radical(s: &Subalgebra) -> Result<Subalgebra> {
    let m = s.dim();
    if m == 0 {
        return Ok(s.clone());
    }
    let kill = s.killing_matrix();
    let derived = s.derived();
    let mut system = Vec::new();
    for d in derived.basis() {
        let dc = s.coordinates(d).expect("derived algebra lies in S");
        // row: coefficient of c_a is κ(x_a, d)
        let row: Vec<Scalar> = (0..m)
            .map(|a| {
                let mut acc = <Scalar as Ring>::zero();
                for (b, db) in dc.iter().enumerate() {
                    if !db.is_zero() {
                        acc += &kill[a][b] * db;
                    }
                }
                acc
            })
            .collect();
        system.push(row);
    }
    let kernel = if system.is_empty() {
        (0..m).map(|a| (0..m).map(|b| if a == b { Ring::one() } else { Ring::zero() }).collect()).collect()
    } else {
        let zeros = vec![<Scalar as Ring>::zero(); system.len()];
        solve_linear(&system, &zeros)?.nullspace
    };
    let mats: Vec<SquareMatrix> = kernel
        .iter()
        .map(|c| {
            let mut acc = SquareMatrix::zero(s.n());
            for (coef, x) in c.iter().zip(s.basis()) {
                acc = acc.add(&x.scale(coef)).unwrap();
            }
            acc
        })
        .collect();
    let radical = Subalgebra::from_span_unchecked(s.n(), span_of(&mats));
    if !radical.is_closed() || !radical.is_ideal_in(s) || !radical.is_solvable() {
        return Err(Error::CheckFailed("Killing-orthogonal of [S,S] is not a solvable ideal".into()));
    }
    Ok(radical)
}

impl fmt::Debug for Subalgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Subalgebra").field("n", &self.n).field("dim", &self.dim()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    fn e(n: usize, i: usize, j: usize) -> SquareMatrix {
        SquareMatrix::unit(n, i, j)
    }

    #[test]
    fn closure_of_sl2_generators() {
        let s = subalgebra_closure(2, &[e(2, 1, 2), e(2, 2, 1)]).unwrap();
        assert_eq!(s.dim(), 3);
        assert!(s.contains(&e(2, 1, 1).sub(&e(2, 2, 2)).unwrap()));
        assert!(!s.contains(&e(2, 1, 1)));
        assert!(s.is_closed());
    }

    #[test]
    fn empty_generators_give_zero_algebra() {
        assert_eq!(subalgebra_closure(4, &[]).unwrap().dim(), 0);
    }

    #[test]
    fn closure_is_idempotent() {
        let s = subalgebra_closure(3, &[e(3, 1, 2), e(3, 2, 3), e(3, 3, 1)]).unwrap();
        let again = subalgebra_closure(3, s.basis()).unwrap();
        assert_eq!(s, again);
    }

    #[test]
    fn xi_eta_abelian_n5() {
        let xi = e(5, 2, 3).add(&e(5, 4, 5)).unwrap();
        let eta = e(5, 2, 1).add(&e(5, 4, 3)).unwrap();
        let s = subalgebra_closure(5, &[xi, eta]).unwrap();
        assert_eq!(s.dim(), 2);
        assert!(s.is_abelian());
    }

    #[test]
    fn radical_of_semisimple_is_zero() {
        let s = subalgebra_closure(2, &[e(2, 1, 2), e(2, 2, 1)]).unwrap();
        assert_eq!(solvable_radical(&s).unwrap().dim(), 0);
    }

    #[test]
    fn radical_of_solvable_is_everything() {
        let h = e(2, 1, 1).sub(&e(2, 2, 2)).unwrap();
        let s = subalgebra_closure(2, &[h, e(2, 1, 2)]).unwrap();
        assert_eq!(s.dim(), 2);
        assert_eq!(solvable_radical(&s).unwrap(), s);
    }

    #[test]
    fn radical_of_gl2_is_center() {
        let s = subalgebra_closure(2, &[e(2, 1, 2), e(2, 2, 1), e(2, 1, 1)]).unwrap();
        assert_eq!(s.dim(), 4);
        let r = solvable_radical(&s).unwrap();
        assert_eq!(r.dim(), 1);
        assert!(r.contains(&SquareMatrix::identity(2)));
    }

    #[test]
    fn non_closed_basis_rejected() {
        assert_eq!(Subalgebra::from_basis(2, &[e(2, 1, 2), e(2, 2, 1)]), Err(Error::NotSubalgebra));
    }
}
