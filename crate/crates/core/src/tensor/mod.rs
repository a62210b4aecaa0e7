//! Sparse tensors on `gl(n)^{⊗2}` and `gl(n)^{⊗3}`.
//!
//! A [`Tensor2`] stores `Σ c · e_ij ⊗ e_kl` keyed by `[i, j, k, l]`; a
//! [`Tensor3`] uses `[i, j, k, l, p, q]`. Indices are 1-based matrix-unit
//! indices and terms iterate in lexicographic order.

mod json;
mod pretty;
mod yb;

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::error::{Error, Result};
use crate::exact::{bracket, GroupElement, Poly, Ring, Scalar, SquareMatrix};

pub use json::{AnyTensor, CoeffJson, JsonCoeff, TensorJson};
pub use pretty::{parse_pretty, to_pretty};
pub use yb::{
    ad_diag, conj_action, in_sl_tensor, is_cybe, is_mcybe, is_sl_invariant, proportional, sign_relation, sl_basis,
    wedge, yb_bracket, yb_bracket_with, SignRelation,
};

type Entry<R> = ((usize, usize), R);

/// Tensor with `D / 2` matrix-unit slots.
#[derive(Clone, PartialEq)]
pub struct Tensor<R: Ring, const D: usize> {
    n: usize,
    terms: BTreeMap<[usize; D], R>,
}

pub type Tensor2<R = Scalar> = Tensor<R, 4>;
pub type Tensor3<R = Scalar> = Tensor<R, 6>;

impl<R: Ring, const D: usize> Tensor<R, D> {
    pub fn zero(n: usize) -> Self {
        Tensor { n, terms: BTreeMap::new() }
    }

    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = ([usize; D], R)>) -> Self {
        let mut t = Self::zero(n);
        for (idx, c) in terms {
            t.add_term(idx, &c);
        }
        t
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn slots() -> usize {
        D / 2
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[usize; D], &R)> {
        self.terms.iter()
    }

    pub fn nnz(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn get(&self, idx: &[usize; D]) -> R {
        self.terms.get(idx).cloned().unwrap_or_else(R::zero)
    }

    pub fn add_term(&mut self, idx: [usize; D], c: &R) {
        assert!(idx.iter().all(|&k| k >= 1 && k <= self.n), "index {idx:?} outside n = {}", self.n);
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&idx) {
            Some(v) => {
                v.add_assign(c);
                if v.is_zero() {
                    self.terms.remove(&idx);
                }
            }
            None => {
                self.terms.insert(idx, c.clone());
            }
        }
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch(self.n, other.n));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (idx, c) in &other.terms {
            out.add_term(*idx, c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Tensor { n: self.n, terms: self.terms.iter().map(|(k, v)| (*k, v.neg())).collect() }
    }

    pub fn scale(&self, c: &R) -> Self {
        let mut out = Self::zero(self.n);
        for (idx, v) in &self.terms {
            out.add_term(*idx, &v.mul(c));
        }
        out
    }

    pub fn scale_q(&self, c: &Scalar) -> Self {
        self.scale(&R::from_scalar(c))
    }

    /// Applies a linear map to every slot: `e_ij ↦ image(i, j)`.
    pub fn map_slots(&self, image: impl Fn(usize, usize) -> SquareMatrix<R>) -> Self {
        let mut cache: HashMap<(usize, usize), Vec<Entry<R>>> = HashMap::new();
        let mut out = Self::zero(self.n);
        for (idx, c) in &self.terms {
            let mut partial: Vec<([usize; D], R)> = vec![([0; D], c.clone())];
            for s in 0..D / 2 {
                let key = (idx[2 * s], idx[2 * s + 1]);
                let img = cache
                    .entry(key)
                    .or_insert_with(|| image(key.0, key.1).entries().map(|(&k, v)| (k, v.clone())).collect());
                let mut next = Vec::with_capacity(partial.len() * img.len());
                for (p, pc) in &partial {
                    for ((a, b), v) in img.iter() {
                        let mut q = *p;
                        q[2 * s] = *a;
                        q[2 * s + 1] = *b;
                        next.push((q, pc.mul(v)));
                    }
                }
                partial = next;
            }
            for (q, v) in partial {
                out.add_term(q, &v);
            }
        }
        out
    }

    /// The slot-`s` factors, as matrices, grouped by the remaining indices.
    pub fn slot_matrix(&self, s: usize) -> BTreeMap<Vec<usize>, SquareMatrix<R>> {
        let mut out: BTreeMap<Vec<usize>, SquareMatrix<R>> = BTreeMap::new();
        for (idx, c) in &self.terms {
            let rest: Vec<usize> =
                idx.iter().enumerate().filter(|(k, _)| k / 2 != s).map(|(_, v)| *v).collect();
            out.entry(rest).or_insert_with(|| SquareMatrix::zero(self.n)).add_entry(idx[2 * s], idx[2 * s + 1], c);
        }
        out
    }
}

impl<const D: usize> Tensor<Scalar, D> {
    pub fn lift(&self) -> Tensor<Poly, D> {
        Tensor { n: self.n, terms: self.terms.iter().map(|(k, v)| (*k, Poly::constant(v.clone()))).collect() }
    }
}

impl<const D: usize> Tensor<Poly, D> {
    /// Coefficient of `t^k`.
    pub fn coeff(&self, k: usize) -> Tensor<Scalar, D> {
        let mut out = Tensor::zero(self.n);
        for (idx, v) in &self.terms {
            out.add_term(*idx, &v.coeff(k));
        }
        out
    }

    /// Highest power of `t` present; `None` for the zero tensor.
    pub fn degree(&self) -> Option<usize> {
        self.terms.values().filter_map(Poly::degree).max()
    }

    /// Coefficients of `t^0, …, t^degree`.
    pub fn split(&self) -> Vec<Tensor<Scalar, D>> {
        match self.degree() {
            None => vec![Tensor::zero(self.n)],
            Some(d) => (0..=d).map(|k| self.coeff(k)).collect(),
        }
    }
}

impl<R: Ring> Tensor2<R> {
    /// `A ⊗ B`
    pub fn tensor_product(a: &SquareMatrix<R>, b: &SquareMatrix<R>) -> Result<Self> {
        if a.n() != b.n() {
            return Err(Error::DimensionMismatch(a.n(), b.n()));
        }
        let mut out = Self::zero(a.n());
        for (&(i, j), x) in a.entries() {
            for (&(k, l), y) in b.entries() {
                out.add_term([i, j, k, l], &x.mul(y));
            }
        }
        Ok(out)
    }

    /// Swaps the two tensor factors.
    pub fn flip(&self) -> Self {
        Tensor { n: self.n, terms: self.terms.iter().map(|([i, j, k, l], v)| ([*k, *l, *i, *j], v.clone())).collect() }
    }

    /// Coefficient of `e_ij ⊗ e_kl` equals minus that of `e_kl ⊗ e_ij`.
    pub fn is_skew(&self) -> bool {
        self.terms.iter().all(|([i, j, k, l], v)| self.get(&[*k, *l, *i, *j]).add(v).is_zero())
    }

    /// Contractions of the second slot against coordinate functionals:
    /// one matrix per `(k, l)` with nonzero column.
    pub fn left_factors(&self) -> Vec<SquareMatrix<R>> {
        let mut by_kl: BTreeMap<(usize, usize), SquareMatrix<R>> = BTreeMap::new();
        for ([i, j, k, l], v) in &self.terms {
            by_kl.entry((*k, *l)).or_insert_with(|| SquareMatrix::zero(self.n)).add_entry(*i, *j, v);
        }
        by_kl.into_values().collect()
    }
}

impl<R: Ring, const D: usize> fmt::Debug for Tensor<R, D> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tensor(n={}; ", self.n)?;
        let parts: Vec<String> = self.terms.iter().map(|(k, v)| format!("{v}·{k:?}")).collect();
        write!(f, "{})", parts.join(" + "))
    }
}

/// `[x, ·]` applied to a single matrix unit.
pub(crate) fn ad_unit<R: Ring>(x: &SquareMatrix<R>, i: usize, j: usize) -> SquareMatrix<R> {
    bracket(x, &SquareMatrix::unit(x.n(), i, j)).expect("same n")
}

/// `g e_ij g^{-1}`
pub(crate) fn conj_unit<R: Ring>(g: &GroupElement<R>, i: usize, j: usize) -> SquareMatrix<R> {
    let n = g.n();
    let mut out = SquareMatrix::zero(n);
    let col: Vec<(usize, R)> = (1..=n).map(|a| (a, g.g.get(a, i))).filter(|(_, v)| !v.is_zero()).collect();
    let row: Vec<(usize, R)> = g.inv.row(j).map(|(b, v)| (b, v.clone())).collect();
    for (a, x) in &col {
        for (b, y) in &row {
            out.add_entry(*a, *b, &x.mul(y));
        }
    }
    out
}
