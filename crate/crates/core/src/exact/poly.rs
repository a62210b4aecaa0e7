use std::fmt;

use super::scalar::{format_scalar, Ring, Scalar};

/// Polynomial in the formal parameter `t` with rational coefficients.
///
/// `coeffs[k]` is the coefficient of `t^k`; trailing zeros are stripped so
/// the zero polynomial has no coefficients and [`Poly::degree`] `None`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<Scalar>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(Ring::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn constant(x: Scalar) -> Self {
        Poly::new(vec![x])
    }

    /// `c·t^k`
    pub fn monomial(c: Scalar, k: usize) -> Self {
        let mut v = vec![<Scalar as Ring>::zero(); k + 1];
        v[k] = c;
        Poly::new(v)
    }

    /// The formal parameter itself.
    pub fn t() -> Self {
        Poly::monomial(<Scalar as Ring>::one(), 1)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> Scalar {
        self.coeffs.get(k).cloned().unwrap_or_else(<Scalar as Ring>::zero)
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    /// Substitute a rational value for `t`.
    pub fn eval(&self, at: &Scalar) -> Scalar {
        let mut acc = <Scalar as Ring>::zero();
        for c in self.coeffs.iter().rev() {
            acc = &acc * at + c;
        }
        acc
    }
}

impl Ring for Poly {
    const NAME: &'static str = "Q[t]";

    fn zero() -> Self {
        Poly::default()
    }
    fn one() -> Self {
        Poly::constant(<Scalar as Ring>::one())
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign(rhs);
        out
    }
    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }
    fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut v = vec![<Scalar as Ring>::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if Ring::is_zero(a) {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        Poly::new(v)
    }
    fn neg(&self) -> Self {
        Poly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
    fn from_scalar(x: &Scalar) -> Self {
        Poly::constant(x.clone())
    }
    fn scale(&self, x: &Scalar) -> Self {
        Poly::new(self.coeffs.iter().map(|c| c * x).collect())
    }
    fn add_assign(&mut self, rhs: &Self) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), <Scalar as Ring>::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
        while self.coeffs.last().is_some_and(Ring::is_zero) {
            self.coeffs.pop();
        }
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if Ring::is_zero(c) {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c} t")?,
                _ => write!(f, "{c} t^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(format_scalar).collect();
        write!(f, "Poly[{}]", parts.join(", "))
    }
}
