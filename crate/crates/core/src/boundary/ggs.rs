use super::{extract_boundary, orbit_expand, t_times};
use crate::bd::gamma_term;
use crate::error::{Error, Result};
use crate::exact::{q, Ring, Scalar, SquareMatrix, Subalgebra};
use crate::tensor::{wedge, Tensor2};

fn unit(n: usize, i: usize, j: usize) -> SquareMatrix {
    SquareMatrix::unit(n, i, j)
}

/// Top coefficient of `exp(−t e_1n)·γ`.
pub fn ggs_single(n: usize) -> Result<Tensor2> {
    if n < 2 {
        return Err(Error::OutOfRange(format!("n = {n}")));
    }
    extract_boundary(&orbit_expand(&t_times(&unit(n, 1, n).neg()), &gamma_term(n))?)
}

/// `(e11 − enn) ∧ e1n + 2 Σ_{i=2}^{n−1} e1i ∧ ein`
pub fn ggs_single_display(n: usize) -> Tensor2 {
    let h = unit(n, 1, 1).sub(&unit(n, n, n)).unwrap();
    let mut out = wedge(&h, &unit(n, 1, n)).unwrap();
    for i in 2..n {
        out = out.add(&wedge(&unit(n, 1, i), &unit(n, i, n)).unwrap().scale_q(&q(2, 1))).unwrap();
    }
    out
}

/// Top coefficient of `exp(−t a)·γ` with `a = Σ_{p ≤ ⌊n/2⌋} λ_p e_{p,n−p+1}`.
pub fn ggs_family(n: usize, lambdas: &[Scalar]) -> Result<Tensor2> {
    let d = n / 2;
    if n < 2 || lambdas.len() != d {
        return Err(Error::DimensionMismatch(lambdas.len(), d));
    }
    if lambdas.iter().any(Ring::is_zero) {
        return Err(Error::OutOfRange("every λ must be nonzero".into()));
    }
    let mut a = SquareMatrix::zero(n);
    for (p, l) in (1..=d).zip(lambdas) {
        a.add_entry(p, n - p + 1, l);
    }
    extract_boundary(&orbit_expand(&t_times(&a.neg()), &gamma_term(n))?)
}

/// `Σ_p (μ_p (e_pp − e_{n−p+1,n−p+1}) ∧ e_{p,n−p+1} + ν_p · 2 Σ_{i=p+1}^{n−p} e_pi ∧ e_{i,n−p+1})`
/// for per-index weights `μ`, `ν`.
pub fn ggs_display(n: usize, mu: &[Scalar], nu: &[Scalar]) -> Result<Tensor2> {
    let d = n / 2;
    if mu.len() != d || nu.len() != d {
        return Err(Error::DimensionMismatch(mu.len().max(nu.len()), d));
    }
    let mut out = Tensor2::zero(n);
    for p in 1..=d {
        let c = n - p + 1;
        let h = unit(n, p, p).sub(&unit(n, c, c))?;
        out = out.add(&wedge(&h, &unit(n, p, c))?.scale(&mu[p - 1]))?;
        for i in p + 1..=n - p {
            out = out.add(&wedge(&unit(n, p, i), &unit(n, i, c))?.scale(&(&nu[p - 1] * q(2, 1))))?;
        }
    }
    Ok(out)
}

/// `span{e_pp − e_{n−p+1,n−p+1} : p ≤ ⌊n/2⌋} ⊕ span{e_ij : i < j}`.
pub fn ggs_carrier_shape(n: usize) -> Result<Subalgebra> {
    let mut basis = Vec::new();
    for p in 1..=n / 2 {
        basis.push(unit(n, p, p).sub(&unit(n, n - p + 1, n - p + 1))?);
    }
    for i in 1..=n {
        for j in i + 1..=n {
            basis.push(unit(n, i, j));
        }
    }
    Subalgebra::from_basis(n, &basis)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_matches_display() {
        for n in 2..6 {
            assert_eq!(ggs_single(n).unwrap(), ggs_single_display(n), "n = {n}");
        }
    }

    #[test]
    fn zero_lambda_rejected() {
        assert!(ggs_family(4, &[q(1, 1), q(0, 1)]).is_err());
        assert!(ggs_family(4, &[q(1, 1)]).is_err());
    }
}
