use super::{carrier, orbit_expand, parabolic, t_times};
use crate::bd::{alpha_term, assemble_r, beta_cg, cg_triple, gamma_term, solve_beta, Triple};
use crate::error::Result;
use crate::exact::{bracket, q, GroupElement, SquareMatrix};
use crate::report::Report;
use crate::tensor::{ad_diag, conj_action, is_cybe, is_mcybe, parse_pretty, wedge, Tensor2};

const N: usize = 5;

fn m(entries: &[(usize, usize, i64, i64)]) -> SquareMatrix {
    SquareMatrix::from_entries(N, entries.iter().map(|&(i, j, a, b)| ((i, j), q(a, b))))
}

fn text(s: &str) -> Tensor2 {
    parse_pretty(N, s).expect("well-formed reference text")
}

fn w(a: &SquareMatrix, b: &SquareMatrix) -> Tensor2 {
    wedge(a, b).expect("same n")
}

/// Reference forms for the `sl(5)`, `T: 1→3, 2→4, 4→1` case.
struct Reference {
    gamma: Tensor2,
    beta: Tensor2,
    alpha: Tensor2,
    x_r2: Tensor2,
}

fn reference() -> Reference {
    let gamma = text(
        "e12^e21 + e13^e31 + e14^e41 + e15^e51 + e23^e32 + e24^e42 + e25^e52 + e34^e43 + e35^e53 + e45^e54",
    );
    let beta = text(
        "- 1/5 e11^e22 - 1/5 e22^e33 - 1/5 e33^e44 - 1/5 e44^e55 + 3/5 e11^e33 + 3/5 e22^e44 + 3/5 e33^e55 \
         - 3/5 e11^e44 - 3/5 e22^e55 + 1/5 e11^e55",
    );
    let alpha = text("2 e23^e54 + 2 e23^e21 + 2 e23^e43 + 2 e45^e21 + 2 e45^e43 + 2 e12^e43 + 2 e13^e53");
    let d1 = m(&[(1, 1, 4, 5), (2, 2, 4, 5), (3, 3, -6, 5), (4, 4, 4, 5), (5, 5, -6, 5)]);
    let d2 = m(&[(1, 1, 1, 5), (2, 2, 1, 5), (3, 3, 1, 5), (4, 4, -4, 5), (5, 5, 1, 5)]);
    let d3 = m(&[(1, 1, 1, 5), (2, 2, 1, 5), (3, 3, 1, 5), (4, 4, 1, 5), (5, 5, -4, 5)]);
    let e = |i, j| SquareMatrix::unit(N, i, j);
    let x_r2 = w(&d1, &e(1, 3))
        .add(&w(&d2, &e(2, 4)))
        .and_then(|t| t.add(&w(&d3, &e(3, 5))))
        .and_then(|t| t.add(&text("e14^e43 + e12^e23 + e25^e54 + e12^e45 + e15^e53 + e34^e45")))
        .expect("same n");
    Reference { gamma, beta, alpha, x_r2 }
}

fn orbit_x() -> SquareMatrix {
    m(&[(1, 3, 2, 1), (2, 4, 1, 1), (3, 5, 1, 1)])
}

fn orbit_eta() -> SquareMatrix {
    m(&[(2, 1, 1, 1), (4, 3, 1, 1)])
}

/// The `t`-coefficient `ω` of `exp(tX + η)·r_2`, without the reference checks.
pub fn sl5_i2_boundary() -> Result<Tensor2> {
    let r2 = assemble_r(&cg_triple(N, 2)?, &beta_cg(N, 2)?)?;
    let a = t_times(&orbit_x()).add(&orbit_eta().lift())?;
    super::extract_boundary(&orbit_expand(&a, &r2)?)
}

/// Reproduces the `sl(5)` boundary solution with carrier `p_2`.
///
/// With `X = 2e13 + e24 + e35`, `ξ = e23 + e45`, `η = e21 + e43` and
/// `H1 = (1/5)(−4, 6, −4, 6, −4)`, checks the closed forms of `r_2`,
/// `[X, r_2]`, `exp(η)·r_2`, the invariance of `α_0 = 2 ξ ∧ η`, and that
/// `exp(tX + η)·r_2` is linear in `t` with a CYBE solution carried by `p_2`
/// as its `t`-coefficient.
pub fn sl5_i2_pipeline() -> Result<Report> {
    let mut report = Report::new("sl5-i2", N, Some(2), None);
    let refs = reference();
    let triple = cg_triple(N, 2)?;
    let r2 = assemble_r(&triple, &beta_cg(N, 2)?)?;
    report.compare("gamma", &gamma_term(N), &refs.gamma);
    report.compare("beta", &beta_cg(N, 2)?, &refs.beta);
    report.compare("alpha", &alpha_term(&triple), &refs.alpha);
    report.check("r2 solves MCYBE", is_mcybe(&r2)?);

    let (x, eta) = (orbit_x(), orbit_eta());
    let xi = m(&[(2, 3, 1, 1), (4, 5, 1, 1)]);
    let h1 = m(&[(1, 1, -4, 5), (2, 2, 6, 5), (3, 3, -4, 5), (4, 4, 6, 5), (5, 5, -4, 5)]);
    let x_r2 = ad_diag(&x, &r2)?;
    report.compare("[X,r2]", &x_r2, &refs.x_r2);

    let minus_x = orbit_expand(&t_times(&x.neg()), &r2)?;
    report.check("exp(-tX) r2 has t-degree 1", minus_x.degree() == 1);
    if let Some(top) = minus_x.top() {
        report.compare("exp(-tX) r2 = r2 + t[X,r2]", top, &x_r2);
    }

    let exp_eta = conj_action(&GroupElement::exp(&eta)?, &r2)?;
    report.compare("exp(eta) r2 = r2 + H1^eta", &exp_eta, &r2.add(&w(&h1, &eta))?);

    report.check("[X,xi]=0", bracket(&x, &xi)?.is_zero());
    report.check("[X,eta]=-xi", bracket(&x, &eta)? == xi.neg());
    let alpha0 = w(&xi, &eta).scale_q(&q(2, 1));
    report.check("[X,alpha0]=0", ad_diag(&x, &alpha0)?.is_zero());
    let r2p = r2.sub(&alpha0)?;
    let sub = Triple::new(N, [(1, 3), (2, 4)])?;
    let sub_beta = r2p.sub(&gamma_term(N))?.sub(&alpha_term(&sub))?;
    report.check("r2 - alpha0 solves MCYBE", is_mcybe(&r2p)?);
    report.check("r2 - alpha0 is the sub-triple solution", solve_beta(&sub)?.contains(&sub_beta));
    report.check("[X,r2]=[X,r2-alpha0]", ad_diag(&x, &r2p)? == x_r2);

    let c_xr = carrier(&x_r2)?;
    report.detail("carrier_dim_[X,r2]", c_xr.dim());
    report.check("carrier([X,r2]) has dim 16", c_xr.dim() == 16);

    let a = t_times(&x).add(&eta.lift())?;
    let e = orbit_expand(&a, &r2)?;
    report.check("exp(tX+eta) r2 has t-degree 1", e.degree() == 1);
    report.compare("exp(tX+eta) r2 constant term", &e.base, &exp_eta);
    let expected_omega = x_r2.sub(&w(&h1, &xi).scale_q(&q(3, 2)))?.add(&w(&eta, &xi))?;
    let p2 = parabolic(N, &[2])?;
    if let Some(omega) = e.top() {
        report.compare("exp(tX+eta) r2 linear term", omega, &expected_omega);
        report.check("omega solves CYBE", is_cybe(omega)?);
        let c = carrier(omega)?;
        let summary = c.summary(Some(&p2));
        report.check("carrier(omega) = p2", summary.matches_parabolic);
        report.carrier = Some(summary);
    }
    report.detail("dim_p2", p2.dim());
    Ok(report)
}
