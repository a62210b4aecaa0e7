use std::collections::BTreeMap;
use std::fmt;

use super::poly::Poly;
use super::scalar::{q, Ring, Scalar};
use super::solve::solve_linear;
use crate::error::{Error, Result};

/// Sparse `n×n` matrix, indexed by matrix units `e_ij` with `1 ≤ i, j ≤ n`.
///
/// No zero entries are ever stored, so structural equality is value equality.
#[derive(Clone, PartialEq)]
pub struct SquareMatrix<R: Ring = Scalar> {
    n: usize,
    entries: BTreeMap<(usize, usize), R>,
}

impl<R: Ring> SquareMatrix<R> {
    pub fn zero(n: usize) -> Self {
        SquareMatrix { n, entries: BTreeMap::new() }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n);
        for i in 1..=n {
            m.entries.insert((i, i), R::one());
        }
        m
    }

    /// The matrix unit `e_ij`.
    pub fn unit(n: usize, i: usize, j: usize) -> Self {
        Self::from_entries(n, [((i, j), R::one())])
    }

    pub fn from_entries(n: usize, entries: impl IntoIterator<Item = ((usize, usize), R)>) -> Self {
        let mut m = Self::zero(n);
        for ((i, j), c) in entries {
            m.add_entry(i, j, &c);
        }
        m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> R {
        self.entries.get(&(i, j)).cloned().unwrap_or_else(R::zero)
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(usize, usize), &R)> {
        self.entries.iter()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// Adds `c` to entry `(i, j)`, dropping the entry if it cancels.
    pub fn add_entry(&mut self, i: usize, j: usize, c: &R) {
        assert!(i >= 1 && i <= self.n && j >= 1 && j <= self.n, "e_{i},{j} outside n = {}", self.n);
        if c.is_zero() {
            return;
        }
        match self.entries.get_mut(&(i, j)) {
            Some(v) => {
                v.add_assign(c);
                if v.is_zero() {
                    self.entries.remove(&(i, j));
                }
            }
            None => {
                self.entries.insert((i, j), c.clone());
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
        for (&(i, j), c) in &other.entries {
            out.add_entry(i, j, c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.map(|c| c.neg())
    }

    pub fn scale(&self, c: &R) -> Self {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        let mut out = Self::zero(self.n);
        for (&(i, j), v) in &self.entries {
            out.add_entry(i, j, &v.mul(c));
        }
        out
    }

    pub fn scale_q(&self, c: &Scalar) -> Self {
        self.scale(&R::from_scalar(c))
    }

    fn map(&self, f: impl Fn(&R) -> R) -> Self {
        let mut out = Self::zero(self.n);
        for (&(i, j), v) in &self.entries {
            out.add_entry(i, j, &f(v));
        }
        out
    }

    /// Row `i` as `(column, value)` pairs.
    pub fn row(&self, i: usize) -> impl Iterator<Item = (usize, &R)> {
        self.entries.range((i, 0)..(i + 1, 0)).map(|(&(_, j), v)| (j, v))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut out = Self::zero(self.n);
        for (&(i, k), a) in &self.entries {
            for (j, b) in other.row(k) {
                out.add_entry(i, j, &a.mul(b));
            }
        }
        Ok(out)
    }

    pub fn trace(&self) -> R {
        let mut acc = R::zero();
        for i in 1..=self.n {
            if let Some(v) = self.entries.get(&(i, i)) {
                acc.add_assign(v);
            }
        }
        acc
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zero(self.n);
        for (&(i, j), v) in &self.entries {
            out.add_entry(j, i, v);
        }
        out
    }

    /// True when every nonzero entry is on the diagonal.
    pub fn is_diagonal(&self) -> bool {
        self.entries.keys().all(|(i, j)| i == j)
    }

    /// Row-major flattening index of `e_ij`, 0-based: `(i-1)n + (j-1)`.
    pub fn flat_index(n: usize, i: usize, j: usize) -> usize {
        (i - 1) * n + (j - 1)
    }

    pub fn unflatten(n: usize, k: usize) -> (usize, usize) {
        (k / n + 1, k % n + 1)
    }

    pub fn power(&self, k: usize) -> Self {
        let mut acc = Self::identity(self.n);
        for _ in 0..k {
            acc = acc.mul(self).expect("same n");
        }
        acc
    }
}

impl SquareMatrix<Scalar> {
    /// Embeds a rational matrix into `Q[t]`.
    pub fn lift(&self) -> SquareMatrix<Poly> {
        SquareMatrix::from_entries(self.n, self.entries.iter().map(|(&k, v)| (k, Poly::constant(v.clone()))))
    }

    /// Exact inverse by Gaussian elimination.
    pub fn inverse(&self) -> Result<Self> {
        let n = self.n;
        let mut a = vec![vec![<Scalar as Ring>::zero(); n]; n];
        for (&(i, j), v) in &self.entries {
            a[i - 1][j - 1] = v.clone();
        }
        let mut inv = Self::zero(n);
        for col in 1..=n {
            let mut rhs = vec![<Scalar as Ring>::zero(); n];
            rhs[col - 1] = <Scalar as Ring>::one();
            let sol = solve_linear(&a, &rhs).map_err(|_| Error::Singular)?;
            if !sol.nullspace.is_empty() {
                return Err(Error::Singular);
            }
            for (i, v) in sol.particular.iter().enumerate() {
                inv.add_entry(i + 1, col, v);
            }
        }
        Ok(inv)
    }
}

impl SquareMatrix<Poly> {
    /// Coefficient matrix of `t^k`.
    pub fn coeff(&self, k: usize) -> SquareMatrix<Scalar> {
        SquareMatrix::from_entries(self.n, self.entries.iter().map(|(&key, v)| (key, v.coeff(k))))
    }
}

/// `[A, B] = AB − BA`.
pub fn bracket<R: Ring>(a: &SquareMatrix<R>, b: &SquareMatrix<R>) -> Result<SquareMatrix<R>> {
    a.mul(b)?.sub(&b.mul(a)?)
}

/// The trace form `(A, B) = tr(AB)`.
pub fn trace_form<R: Ring>(a: &SquareMatrix<R>, b: &SquareMatrix<R>) -> Result<R> {
    a.check_same(b)?;
    let mut acc = R::zero();
    for (&(i, j), x) in &a.entries {
        if let Some(y) = b.entries.get(&(j, i)) {
            acc.add_assign(&x.mul(y));
        }
    }
    Ok(acc)
}

/// `exp(A) = Σ_{k<n} A^k / k!` for nilpotent `A`; nilpotency is verified.
pub fn nilpotent_exp<R: Ring>(a: &SquareMatrix<R>) -> Result<SquareMatrix<R>> {
    let n = a.n;
    let mut out = SquareMatrix::identity(n);
    let mut power = SquareMatrix::identity(n);
    let mut factorial: i64 = 1;
    for k in 1..=n {
        power = power.mul(a)?;
        if power.is_zero() {
            return Ok(out);
        }
        if k == n {
            break;
        }
        factorial *= k as i64;
        out = out.add(&power.scale_q(&q(1, factorial)))?;
    }
    Err(Error::NotNilpotent(n))
}

/// An invertible matrix together with its inverse, used for conjugation.
#[derive(Clone, Debug, PartialEq)]
pub struct GroupElement<R: Ring = Scalar> {
    pub g: SquareMatrix<R>,
    pub inv: SquareMatrix<R>,
}

impl<R: Ring> GroupElement<R> {
    /// `exp(A)` with inverse `exp(−A)`.
    pub fn exp(a: &SquareMatrix<R>) -> Result<Self> {
        Ok(GroupElement { g: nilpotent_exp(a)?, inv: nilpotent_exp(&a.neg())? })
    }

    pub fn identity(n: usize) -> Self {
        GroupElement { g: SquareMatrix::identity(n), inv: SquareMatrix::identity(n) }
    }

    pub fn n(&self) -> usize {
        self.g.n()
    }

    /// `g x g^{-1}`
    pub fn conjugate(&self, x: &SquareMatrix<R>) -> Result<SquareMatrix<R>> {
        self.g.mul(x)?.mul(&self.inv)
    }
}

impl GroupElement<Scalar> {
    pub fn from_matrix(g: SquareMatrix<Scalar>) -> Result<Self> {
        let inv = g.inverse()?;
        Ok(GroupElement { g, inv })
    }
}

impl<R: Ring> fmt::Display for SquareMatrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.entries.iter().map(|(&(i, j), v)| format!("({v}) e{i},{j}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl<R: Ring> fmt::Debug for SquareMatrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SquareMatrix(n={}; {})", self.n, self)
    }
}
