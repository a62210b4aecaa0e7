//! Admissible triples and the `r = γ + β + α` solutions of the modified
//! classical Yang–Baxter equation for `sl(n)`.

mod triple;

use num_integer::Integer;

pub use triple::{cg_triple, enumerate_one_omitted, enumerate_one_omitted_with, validate_triple, PositiveRoot, Triple, TripleReport};

use crate::error::{Error, Result};
use crate::exact::{q, solve_linear, Ring, Scalar, Span, SparseVec, SquareMatrix};
use crate::tensor::{is_mcybe, wedge, Tensor2};

fn unit(n: usize, i: usize, j: usize) -> SquareMatrix {
    SquareMatrix::unit(n, i, j)
}

/// `Σ_{a<b} e_ab ∧ e_ba`
pub fn gamma_term(n: usize) -> Tensor2 {
    let mut out = Tensor2::zero(n);
    for root in PositiveRoot::all(n) {
        out = out.add(&wedge(&root.x(n), &root.x_neg(n)).unwrap()).unwrap();
    }
    out
}

/// `Σ_{p<q} b(p, q) e_pp ∧ e_qq`
pub fn diagonal_wedge(n: usize, b: impl Fn(usize, usize) -> Scalar) -> Tensor2 {
    let mut out = Tensor2::zero(n);
    for p in 1..=n {
        for qq in p + 1..=n {
            let c = b(p, qq);
            if !c.is_zero() {
                out = out.add(&wedge(&unit(n, p, p), &unit(n, qq, qq)).unwrap().scale(&c)).unwrap();
            }
        }
    }
    out
}

/// Closed form of the Cartan part for the triple `T(j) = j + i mod n`:
/// `b(p, q) = (n − 2s)/n` where `q − p ≡ s·i (mod n)`, `1 ≤ s ≤ n − 1`.
pub fn beta_cg(n: usize, i: usize) -> Result<Tensor2> {
    if n < 2 || i == 0 || i >= n {
        return Err(Error::OutOfRange(format!("need 1 ≤ i ≤ n − 1 (n = {n}, i = {i})")));
    }
    if n.gcd(&i) != 1 {
        return Err(Error::NotCoprime { n, i });
    }
    let inv = (1..n).find(|k| (k * i) % n == 1).expect("coprime");
    Ok(diagonal_wedge(n, |p, qq| {
        let s = ((qq - p) * inv) % n;
        q(n as i64 - 2 * s as i64, n as i64)
    }))
}

/// Solutions `β ∈ h ∧ h` of `(1 ⊗ (Tπ − π)) β = ½(h_{Tπ} + h_π)` for every
/// `π ∈ Π₁`, as a particular solution plus a nullspace basis.
#[derive(Clone, Debug, PartialEq)]
pub struct BetaFamily {
    pub particular: Tensor2,
    pub nullspace: Vec<Tensor2>,
}

impl BetaFamily {
    pub fn dim(&self) -> usize {
        self.nullspace.len()
    }

    /// `particular + Σ c_k nullspace_k`
    pub fn member(&self, coeffs: &[Scalar]) -> Result<Tensor2> {
        if coeffs.len() != self.nullspace.len() {
            return Err(Error::DimensionMismatch(coeffs.len(), self.nullspace.len()));
        }
        let mut out = self.particular.clone();
        for (c, v) in coeffs.iter().zip(&self.nullspace) {
            out = out.add(&v.scale(c))?;
        }
        Ok(out)
    }

    /// Whether `beta` lies in the affine family.
    pub fn contains(&self, beta: &Tensor2) -> bool {
        let flat = |t: &Tensor2| {
            let n = t.n();
            SparseVec::from_pairs(
                t.terms().map(|([i, j, k, l], v)| ((((i - 1) * n + j - 1) * n + k - 1) * n + l - 1, v.clone())),
            )
        };
        let Ok(diff) = beta.sub(&self.particular) else {
            return false;
        };
        let span = Span::from_vectors(self.nullspace.iter().map(flat).collect::<Vec<_>>().iter());
        span.contains(&flat(&diff))
    }
}

/// Writing `β = Σ_{p<q} b_pq e_pp ∧ e_qq` with `b` extended skew, the root
/// functional `α_m` applied to the second factor gives
/// `½ Σ_p (b_{p,m} − b_{p,m+1}) e_pp`; tracelessness of each factor is
/// `Σ_q b_pq = 0`.
pub fn solve_beta(t: &Triple) -> Result<BetaFamily> {
    let n = t.n();
    let pairs: Vec<(usize, usize)> = (1..=n).flat_map(|p| (p + 1..=n).map(move |qq| (p, qq))).collect();
    let col = |p: usize, qq: usize| -> Option<(usize, Scalar)> {
        use std::cmp::Ordering::*;
        match p.cmp(&qq) {
            Equal => None,
            Less => Some((pairs.iter().position(|&x| x == (p, qq)).unwrap(), q(1, 1))),
            Greater => Some((pairs.iter().position(|&x| x == (qq, p)).unwrap(), q(-1, 1))),
        }
    };
    let zero_row = || vec![Scalar::zero(); pairs.len()];
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for p in 1..=n {
        let mut row = zero_row();
        for qq in 1..=n {
            if let Some((k, s)) = col(p, qq) {
                row[k] += s;
            }
        }
        rows.push(row);
        rhs.push(Scalar::zero());
    }
    let delta = |a: usize, b: usize| if a == b { q(1, 1) } else { Scalar::zero() };
    for (pi, tau) in t.pairs() {
        for p in 1..=n {
            let mut row = zero_row();
            for (m, sign) in [(tau, 1), (tau + 1, -1), (pi, -1), (pi + 1, 1)] {
                if let Some((k, s)) = col(p, m) {
                    row[k] += s * q(sign, 2);
                }
            }
            rows.push(row);
            rhs.push((delta(p, tau) - delta(p, tau + 1) + delta(p, pi) - delta(p, pi + 1)) * q(1, 2));
        }
    }
    let sol = solve_linear(&rows, &rhs)?;
    let to_tensor = |v: &[Scalar]| diagonal_wedge(n, |p, qq| v[pairs.iter().position(|&x| x == (p, qq)).unwrap()].clone());
    Ok(BetaFamily { particular: to_tensor(&sol.particular), nullspace: sol.nullspace.iter().map(|v| to_tensor(v)).collect() })
}

/// `2 Σ_{π ≺ ρ} x_π ∧ x_{−ρ}`, where `π ≺ ρ` when some power of `T`
/// (applied to the simple constituents of `π`) carries `π` to `ρ`.
pub fn alpha_term(t: &Triple) -> Tensor2 {
    let n = t.n();
    let mut out = Tensor2::zero(n);
    let two = q(2, 1);
    for root in PositiveRoot::all(n) {
        let mut cur = root;
        let mut steps = 0;
        while let Some(next) = cur.image(t) {
            out = out.add(&wedge(&root.x(n), &next.x_neg(n)).unwrap().scale(&two)).unwrap();
            cur = next;
            steps += 1;
            assert!(steps <= n, "T not nilpotent on {root:?}");
        }
    }
    out
}

/// `γ + β + α`, checked against the modified classical Yang–Baxter equation.
pub fn assemble_r(t: &Triple, beta: &Tensor2) -> Result<Tensor2> {
    let n = t.n();
    if beta.n() != n {
        return Err(Error::DimensionMismatch(beta.n(), n));
    }
    let r = gamma_term(n).add(beta)?.add(&alpha_term(t))?;
    if !is_mcybe(&r)? {
        return Err(Error::CheckFailed(format!("assembled r for n = {n} does not solve the MCYBE")));
    }
    Ok(r)
}

/// Closed form of the solution for `T(j) = j + 1`:
/// `γ + (1/n) Σ_{i<j} (n + 2(i − j)) e_ii ∧ e_jj
///  + 2 Σ_{i<j} Σ_{m=1}^{j−i−1} e_{i,j−m} ∧ e_{j,i+m}`.
pub fn r_cg_closed(n: usize) -> Result<Tensor2> {
    if n < 2 {
        return Err(Error::OutOfRange(format!("n = {n}")));
    }
    let mut out = gamma_term(n).add(&diagonal_wedge(n, |i, j| q(n as i64 + 2 * (i as i64 - j as i64), n as i64)))?;
    for i in 1..=n {
        for j in i + 1..=n {
            for m in 1..j - i {
                out = out.add(&wedge(&unit(n, i, j - m), &unit(n, j, i + m))?.scale_q(&q(2, 1)))?;
            }
        }
    }
    Ok(out)
}
