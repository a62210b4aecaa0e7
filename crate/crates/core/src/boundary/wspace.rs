use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::exact::{Scalar, SquareMatrix, Subalgebra};
use crate::report::Report;
use crate::tensor::{is_cybe, wedge, Tensor2};

/// `W = span{e_ij : i ≤ ⌊n/2⌋ < j}`, an abelian subalgebra.
pub fn w_space(n: usize) -> Result<Subalgebra> {
    let h = n / 2;
    let basis: Vec<SquareMatrix> =
        (1..=h).flat_map(|i| (h + 1..=n).map(move |j| SquareMatrix::unit(n, i, j))).collect();
    Subalgebra::from_basis(n, &basis)
}

/// Checks that `W` is abelian, that random elements of `W ∧ W` solve the
/// CYBE, and compares `dim W ∧ W` with the dimension bound
/// `(n² − 1) + (n − 1)(n − 2)/2` for the trivial-triple component.
pub fn nonboundary_w(n: usize, seed: u64) -> Result<Report> {
    if n < 4 {
        return Err(Error::OutOfRange(format!("n = {n} (need n ≥ 4)")));
    }
    let w = w_space(n)?;
    let k = w.dim();
    let mut report = Report::new("nonboundary-w", n, None, Some(seed));
    report.check("W abelian", w.is_abelian());
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let random = |rng: &mut ChaCha8Rng| {
        let mut m = SquareMatrix::zero(n);
        for x in w.basis() {
            m = m.add(&x.scale(&Scalar::from_integer(rng.gen_range(-9i64..=9).into()))).unwrap();
        }
        m
    };
    let mut all_cybe = true;
    for _ in 0..5 {
        let mut r = Tensor2::zero(n);
        for _ in 0..3 {
            let (a, b) = (random(&mut rng), random(&mut rng));
            r = r.add(&wedge(&a, &b)?)?;
        }
        all_cybe &= is_cybe(&r)?;
    }
    report.check("random elements of W^W solve the CYBE", all_cybe);
    let wedge_dim = k * (k - 1) / 2;
    let bound = (n * n - 1) + (n - 1) * (n - 2) / 2;
    report.detail("dim_W", k);
    report.detail("dim_W_wedge_W", wedge_dim);
    report.detail("trivial_component_bound", bound);
    report.detail("exceeds_bound", wedge_dim > bound);
    Ok(report)
}
