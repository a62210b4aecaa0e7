//! Boundary solutions of the classical Yang–Baxter equation.
//!
//! If `r` solves the MCYBE and `a` is nilpotent, `exp(a)·r` expanded in the
//! formal parameter `t` is `r_0 + t r_1 + … + t^m r_m` and the top
//! coefficient `r_m` solves the CYBE. This module produces those
//! expansions and analyses the resulting solutions: carriers, Frobenius
//! functionals, parabolics, cohomology, and the string decomposition.

mod carrier;
mod cg;
mod ggs;
mod sl5;
mod strings;
mod wspace;

pub use carrier::{
    carrier, frobenius_probe, frobenius_probe_with, lie_h2, lie_h2_with, parabolic, CarrierAnalysis, FrobeniusVerdict,
};
pub use cg::{b_cg_closed, principal_sl2, r_cg_orbit_generator, sigma, sigma_tensor, SL2Triple, XR_SIGN};
pub use ggs::{ggs_display, ggs_family, ggs_carrier_shape, ggs_single, ggs_single_display};
pub use sl5::{sl5_i2_boundary, sl5_i2_pipeline};
pub use strings::{conj61_check, conj61_check_with, conj61_generator, matrix_text, strings, StringData};
pub use wspace::{nonboundary_w, w_space};

use crate::error::{Error, Result};
use crate::exact::{GroupElement, Poly, SquareMatrix};
use crate::tensor::{conj_action, is_cybe, Tensor2};

/// `exp(A)·r` split by powers of `t`.
#[derive(Clone, Debug, PartialEq)]
pub struct OrbitExpansion {
    /// Coefficient of `t^0`.
    pub base: Tensor2,
    /// Coefficients of `t^1, …, t^m`; the last one is nonzero.
    pub coefficients: Vec<Tensor2>,
}

impl OrbitExpansion {
    pub fn degree(&self) -> usize {
        self.coefficients.len()
    }

    pub fn top(&self) -> Option<&Tensor2> {
        self.coefficients.last()
    }

    /// `base + Σ t^k coefficients[k−1]`
    pub fn polynomial(&self) -> Tensor2<Poly> {
        let mut out = self.base.lift();
        for (k, c) in self.coefficients.iter().enumerate() {
            for (idx, v) in c.terms() {
                out.add_term(*idx, &Poly::monomial(v.clone(), k + 1));
            }
        }
        out
    }
}

/// Expands `exp(A)·r` for nilpotent `A` with entries in `Q[t]`.
pub fn orbit_expand(a: &SquareMatrix<Poly>, r: &Tensor2) -> Result<OrbitExpansion> {
    let g = GroupElement::exp(a)?;
    let rt = conj_action(&g, &r.lift())?;
    let mut parts = rt.split();
    let base = parts.remove(0);
    Ok(OrbitExpansion { base, coefficients: parts })
}

/// The top coefficient of an orbit expansion, checked to solve the CYBE.
pub fn extract_boundary(e: &OrbitExpansion) -> Result<Tensor2> {
    let top = e.top().ok_or(Error::NoCoefficients)?;
    if !is_cybe(top)? {
        return Err(Error::CheckFailed("top coefficient does not solve the CYBE".into()));
    }
    Ok(top.clone())
}

/// `t·A` as a matrix over `Q[t]`.
pub fn t_times(a: &SquareMatrix) -> SquareMatrix<Poly> {
    SquareMatrix::from_entries(a.n(), a.entries().map(|(&k, v)| (k, Poly::monomial(v.clone(), 1))))
}
