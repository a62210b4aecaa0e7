use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::{ad_unit, conj_unit, Tensor, Tensor2, Tensor3};
use crate::error::{Error, Result};
use crate::exact::{GroupElement, Ring, Scalar, SquareMatrix};
use crate::exec::Exec;

/// `A ∧ B = ½(A ⊗ B − B ⊗ A)`.
pub fn wedge<R: Ring>(a: &SquareMatrix<R>, b: &SquareMatrix<R>) -> Result<Tensor2<R>> {
    let ab = Tensor2::tensor_product(a, b)?;
    let ba = Tensor2::tensor_product(b, a)?;
    Ok(ab.sub(&ba)?.scale_q(&crate::exact::q(1, 2)))
}

type Acc<R> = HashMap<[usize; 6], R>;

fn push<R: Ring>(acc: &mut Acc<R>, idx: [usize; 6], c: R) {
    match acc.get_mut(&idx) {
        Some(v) => v.add_assign(&c),
        None => {
            acc.insert(idx, c);
        }
    }
}

struct Index<'a, R> {
    terms: Vec<([usize; 4], &'a R)>,
    a_row: HashMap<usize, Vec<usize>>,
    a_col: HashMap<usize, Vec<usize>>,
    b_row: HashMap<usize, Vec<usize>>,
    b_col: HashMap<usize, Vec<usize>>,
}

impl<'a, R: Ring> Index<'a, R> {
    fn new(r: &'a Tensor2<R>) -> Self {
        let terms: Vec<([usize; 4], &R)> = r.terms().map(|(k, v)| (*k, v)).collect();
        let mut ix = Index {
            terms,
            a_row: HashMap::new(),
            a_col: HashMap::new(),
            b_row: HashMap::new(),
            b_col: HashMap::new(),
        };
        for (t, (idx, _)) in ix.terms.iter().enumerate() {
            ix.a_row.entry(idx[0]).or_default().push(t);
            ix.a_col.entry(idx[1]).or_default().push(t);
            ix.b_row.entry(idx[2]).or_default().push(t);
            ix.b_col.entry(idx[3]).or_default().push(t);
        }
        ix
    }

    fn hits(map: &HashMap<usize, Vec<usize>>, key: usize) -> &[usize] {
        map.get(&key).map_or(&[], Vec::as_slice)
    }

    /// `[r12, r13] = Σ [a_s, a_t] ⊗ b_s ⊗ b_t`
    fn r12_r13(&self) -> Acc<R> {
        let mut acc = Acc::new();
        for ([i, j, k, l], cs) in &self.terms {
            for &t in Self::hits(&self.a_row, *j) {
                let ([_, q, u, v], ct) = self.terms[t];
                push(&mut acc, [*i, q, *k, *l, u, v], cs.mul(ct));
            }
            for &t in Self::hits(&self.a_col, *i) {
                let ([p, _, u, v], ct) = self.terms[t];
                push(&mut acc, [p, *j, *k, *l, u, v], cs.mul(ct).neg());
            }
        }
        acc
    }

    /// `[r12, r23] = Σ a_s ⊗ [b_s, a_t] ⊗ b_t`
    fn r12_r23(&self) -> Acc<R> {
        let mut acc = Acc::new();
        for ([i, j, k, l], cs) in &self.terms {
            for &t in Self::hits(&self.a_row, *l) {
                let ([_, q, u, v], ct) = self.terms[t];
                push(&mut acc, [*i, *j, *k, q, u, v], cs.mul(ct));
            }
            for &t in Self::hits(&self.a_col, *k) {
                let ([p, _, u, v], ct) = self.terms[t];
                push(&mut acc, [*i, *j, p, *l, u, v], cs.mul(ct).neg());
            }
        }
        acc
    }

    /// `[r13, r23] = Σ a_s ⊗ a_t ⊗ [b_s, b_t]`
    fn r13_r23(&self) -> Acc<R> {
        let mut acc = Acc::new();
        for ([i, j, k, l], cs) in &self.terms {
            for &t in Self::hits(&self.b_row, *l) {
                let ([p, q, _, v], ct) = self.terms[t];
                push(&mut acc, [*i, *j, p, q, *k, v], cs.mul(ct));
            }
            for &t in Self::hits(&self.b_col, *k) {
                let ([p, q, u, _], ct) = self.terms[t];
                push(&mut acc, [*i, *j, p, q, u, *l], cs.mul(ct).neg());
            }
        }
        acc
    }
}

/// The Yang–Baxter bracket `⟨r, r⟩ = [r12, r13] + [r12, r23] + [r13, r23]`.
///
/// `r` must be skew; the three summands are evaluated independently and
/// summed in a fixed order.
pub fn yb_bracket<R: Ring>(r: &Tensor2<R>) -> Result<Tensor3<R>> {
    yb_bracket_with(r, Exec::default())
}

pub fn yb_bracket_with<R: Ring>(r: &Tensor2<R>, exec: Exec) -> Result<Tensor3<R>> {
    if !r.is_skew() {
        return Err(Error::NotSkew);
    }
    let ix = Index::new(r);
    let (s1, (s2, s3)) = exec.join(|| ix.r12_r13(), || exec.join(|| ix.r12_r23(), || ix.r13_r23()));
    let mut out = Tensor3::zero(r.n());
    for part in [s1, s2, s3] {
        for (idx, c) in part {
            out.add_term(idx, &c);
        }
    }
    Ok(out)
}

/// Diagonal adjoint action: `[x, ·]` in every slot, summed.
pub fn ad_diag<R: Ring, const D: usize>(x: &SquareMatrix<R>, t: &Tensor<R, D>) -> Result<Tensor<R, D>> {
    if x.n() != t.n() {
        return Err(Error::DimensionMismatch(x.n(), t.n()));
    }
    let mut cache: HashMap<(usize, usize), SquareMatrix<R>> = HashMap::new();
    let mut out = Tensor::zero(t.n());
    for (idx, c) in t.terms() {
        for s in 0..D / 2 {
            let (i, j) = (idx[2 * s], idx[2 * s + 1]);
            let img = cache.entry((i, j)).or_insert_with(|| ad_unit(x, i, j));
            for (&(a, b), v) in img.entries() {
                let mut k = *idx;
                k[2 * s] = a;
                k[2 * s + 1] = b;
                out.add_term(k, &c.mul(v));
            }
        }
    }
    Ok(out)
}

/// `g · T`: conjugation `x ↦ g x g^{-1}` in every slot.
pub fn conj_action<R: Ring, const D: usize>(g: &GroupElement<R>, t: &Tensor<R, D>) -> Result<Tensor<R, D>> {
    if g.n() != t.n() {
        return Err(Error::DimensionMismatch(g.n(), t.n()));
    }
    Ok(t.map_slots(|i, j| conj_unit(g, i, j)))
}

/// Standard basis of `sl(n)`: `e_ij` for `i ≠ j` and `e_ii − e_{i+1,i+1}`.
pub fn sl_basis(n: usize) -> Vec<SquareMatrix> {
    let mut out = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            if i != j {
                out.push(SquareMatrix::unit(n, i, j));
            }
        }
    }
    for i in 1..n {
        out.push(SquareMatrix::unit(n, i, i).sub(&SquareMatrix::unit(n, i + 1, i + 1)).unwrap());
    }
    out
}

/// Invariance of a 3-tensor under the diagonal adjoint action of `sl(n)`.
pub fn is_sl_invariant(t: &Tensor3) -> bool {
    Exec::default().all(&sl_basis(t.n()), |x| ad_diag(x, t).map(|v| v.is_zero()).unwrap_or(false))
}

/// `⟨r, r⟩ = 0`. Non-skew input is rejected.
pub fn is_cybe<R: Ring>(r: &Tensor2<R>) -> Result<bool> {
    Ok(yb_bracket(r)?.is_zero())
}

/// `⟨r, r⟩` nonzero and `sl(n)`-invariant. Non-skew input is rejected.
pub fn is_mcybe(r: &Tensor2) -> Result<bool> {
    let b = yb_bracket(r)?;
    Ok(!b.is_zero() && is_sl_invariant(&b))
}

/// Whether both partial traces vanish, i.e. `r ∈ sl(n) ⊗ sl(n)`.
pub fn in_sl_tensor<R: Ring>(r: &Tensor2<R>) -> bool {
    let mut left: HashMap<(usize, usize), R> = HashMap::new();
    let mut right: HashMap<(usize, usize), R> = HashMap::new();
    for ([i, j, k, l], c) in r.terms() {
        if i == j {
            left.entry((*k, *l)).or_insert_with(R::zero).add_assign(c);
        }
        if k == l {
            right.entry((*i, *j)).or_insert_with(R::zero).add_assign(c);
        }
    }
    left.values().chain(right.values()).all(Ring::is_zero)
}

/// `λ` with `r = λ·s`.
///
/// Two zero tensors give `Some(1)`; `r = 0` against nonzero `s` gives
/// `Some(0)`; nonzero `r` against zero `s` gives `None`.
pub fn proportional<const D: usize>(r: &Tensor<Scalar, D>, s: &Tensor<Scalar, D>) -> Option<Scalar> {
    if r.n() != s.n() {
        return None;
    }
    if s.is_zero() {
        return r.is_zero().then(<Scalar as Ring>::one);
    }
    let (idx, sv) = s.terms().next()?;
    let lambda = r.get(idx) / sv;
    (s.scale(&lambda) == *r).then_some(lambda)
}

/// How a computed tensor compares with an expected one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SignRelation {
    Exact,
    UpToSign,
    Failed,
}

pub fn sign_relation<const D: usize>(computed: &Tensor<Scalar, D>, expected: &Tensor<Scalar, D>) -> SignRelation {
    if computed == expected {
        SignRelation::Exact
    } else if computed.neg() == *expected {
        SignRelation::UpToSign
    } else {
        SignRelation::Failed
    }
}
