use crate::bd::r_cg_closed;
use crate::error::{Error, Result};
use crate::exact::{bracket, q, Scalar, SquareMatrix};
use crate::tensor::{ad_diag, is_cybe, wedge, Tensor, Tensor2};

/// Sign `s` in `[x, r] = s · b` between the closed forms of the shift-triple
/// solution `r`, its boundary solution `b`, and `x = ½ Σ (n − p) e_{p,p+1}`.
pub const XR_SIGN: i8 = -1;

fn unit(n: usize, i: usize, j: usize) -> SquareMatrix {
    SquareMatrix::unit(n, i, j)
}

/// `½ Σ_p (n − p) e_{p,p+1}`
pub fn r_cg_orbit_generator(n: usize) -> SquareMatrix {
    SquareMatrix::from_entries(n, (1..n).map(|p| ((p, p + 1), q((n - p) as i64, 2))))
}

/// Closed form of the boundary solution with carrier `p_1`:
/// `Σ_p d_p ∧ e_{p,p+1} + Σ_{i<j} Σ_{m=1}^{j−i−1} e_{i,j−m+1} ∧ e_{j,i+m}` with
/// `d_p = ((n − p)/n)(e_11 + … + e_pp) − (p/n)(e_{p+1,p+1} + … + e_nn)`.
///
/// Checked to solve the CYBE and to agree with `[x, r]`.
pub fn b_cg_closed(n: usize) -> Result<Tensor2> {
    if n < 2 {
        return Err(Error::OutOfRange(format!("n = {n}")));
    }
    let nn = n as i64;
    let mut out = Tensor2::zero(n);
    for p in 1..n {
        let d = SquareMatrix::from_entries(
            n,
            (1..=n).map(|k| ((k, k), if k <= p { q(nn - p as i64, nn) } else { q(-(p as i64), nn) })),
        );
        out = out.add(&wedge(&d, &unit(n, p, p + 1))?)?;
    }
    for i in 1..=n {
        for j in i + 1..=n {
            for m in 1..j - i {
                out = out.add(&wedge(&unit(n, i, j - m + 1), &unit(n, j, i + m))?)?;
            }
        }
    }
    if !is_cybe(&out)? {
        return Err(Error::CheckFailed("closed-form boundary solution fails the CYBE".into()));
    }
    let xr = ad_diag(&r_cg_orbit_generator(n), &r_cg_closed(n)?)?;
    if xr != out.scale_q(&Scalar::from_integer(XR_SIGN.into())) {
        return Err(Error::CheckFailed("[x, r] differs from the closed-form boundary solution".into()));
    }
    Ok(out)
}

/// `e_ij ↦ e_{n+1−i, n+1−j}`
pub fn sigma(x: &SquareMatrix) -> SquareMatrix {
    let n = x.n();
    SquareMatrix::from_entries(n, x.entries().map(|(&(i, j), v)| ((n + 1 - i, n + 1 - j), v.clone())))
}

/// `σ` applied in every slot.
pub fn sigma_tensor<const D: usize>(t: &Tensor<Scalar, D>) -> Tensor<Scalar, D> {
    let n = t.n();
    t.map_slots(|i, j| unit(n, n + 1 - i, n + 1 - j))
}

/// The principal `sl(2)`: `E = Σ (n − j) e_{j,j+1}`, `F = σ(E)`, `H = [E, F]`.
#[derive(Clone, Debug, PartialEq)]
pub struct SL2Triple {
    pub e: SquareMatrix,
    pub f: SquareMatrix,
    pub h: SquareMatrix,
}

pub fn principal_sl2(n: usize) -> Result<SL2Triple> {
    if n < 2 {
        return Err(Error::OutOfRange(format!("n = {n}")));
    }
    let e = SquareMatrix::from_entries(n, (1..n).map(|j| ((j, j + 1), q((n - j) as i64, 1))));
    let f = sigma(&e);
    let h = bracket(&e, &f)?;
    let two = q(2, 1);
    if bracket(&h, &e)? != e.scale(&two) || bracket(&h, &f)? != f.scale(&-two) {
        return Err(Error::CheckFailed("principal sl(2) relations".into()));
    }
    Ok(SL2Triple { e, f, h })
}
