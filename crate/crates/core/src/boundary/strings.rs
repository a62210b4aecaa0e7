use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use super::{carrier, orbit_expand, parabolic, t_times};
use crate::bd::{assemble_r, beta_cg, cg_triple};
use crate::error::{Error, Result};
use crate::exact::{bracket, solvable_radical, subalgebra_closure, Scalar, SquareMatrix, Subalgebra};
use crate::report::Report;
use crate::tensor::{is_cybe, is_mcybe, to_pretty};

/// The runs of `i, 2i, …, (n − 1)i mod n` and the Lie algebras they generate.
#[derive(Clone, Debug)]
pub struct StringData {
    pub n: usize,
    pub i: usize,
    pub order: Vec<usize>,
    pub strings: Vec<Vec<usize>>,
    /// `Σ_{j ∈ s} e_{j,j+1}` for every string but the last.
    pub e_of_s: Vec<SquareMatrix>,
    /// `Σ_{j ∈ s} e_{j+1,j}` for every string but the first.
    pub eprime_of_s: Vec<SquareMatrix>,
    pub l_plus: Subalgebra,
    pub l_minus: Subalgebra,
    pub l: Subalgebra,
    pub l0: Subalgebra,
    pub radical: Subalgebra,
    pub radical_plus: Subalgebra,
    pub radical_minus: Subalgebra,
}

impl StringData {
    pub fn semisimple_dim(&self) -> usize {
        self.l.dim() - self.radical.dim()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mats = |v: &[SquareMatrix]| -> Vec<String> { v.iter().map(matrix_text).collect() };
        json!({
            "n": self.n,
            "i": self.i,
            "order": self.order,
            "strings": self.strings,
            "e": mats(&self.e_of_s),
            "e_prime": mats(&self.eprime_of_s),
            "dims": {
                "L_plus": self.l_plus.dim(),
                "L_minus": self.l_minus.dim(),
                "L": self.l.dim(),
                "L0": self.l0.dim(),
                "radical": self.radical.dim(),
                "radical_plus": self.radical_plus.dim(),
                "radical_minus": self.radical_minus.dim(),
                "semisimple": self.semisimple_dim(),
            }
        })
    }
}

/// `e12 + (1/2) e33`, with `e{10,3}` once an index can exceed 9.
pub fn matrix_text(m: &SquareMatrix) -> String {
    let n = m.n();
    let terms: Vec<String> = m
        .entries()
        .map(|(&(i, j), v)| {
            let name = if n <= 9 { format!("e{i}{j}") } else { format!("e{{{i},{j}}}") };
            if *v == Scalar::from_integer(1.into()) {
                name
            } else {
                format!("({v}) {name}")
            }
        })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

fn coprime_check(n: usize, i: usize) -> Result<()> {
    if n < 2 || i == 0 || i >= n {
        return Err(Error::OutOfRange(format!("need 1 ≤ i ≤ n − 1 (n = {n}, i = {i})")));
    }
    if n.gcd(&i) != 1 {
        return Err(Error::NotCoprime { n, i });
    }
    Ok(())
}

pub fn strings(n: usize, i: usize) -> Result<StringData> {
    coprime_check(n, i)?;
    let order: Vec<usize> = (1..n).map(|k| (k * i) % n).collect();
    let mut runs: Vec<Vec<usize>> = Vec::new();
    for &x in &order {
        match runs.last_mut() {
            Some(run) if *run.last().unwrap() < x => run.push(x),
            _ => runs.push(vec![x]),
        }
    }
    let raise = |s: &[usize]| SquareMatrix::from_entries(n, s.iter().map(|&j| ((j, j + 1), Scalar::from_integer(1.into()))));
    let lower = |s: &[usize]| SquareMatrix::from_entries(n, s.iter().map(|&j| ((j + 1, j), Scalar::from_integer(1.into()))));
    let k = runs.len();
    let e_of_s: Vec<SquareMatrix> = runs[..k.saturating_sub(1)].iter().map(|s| raise(s)).collect();
    let eprime_of_s: Vec<SquareMatrix> = runs.iter().skip(1).map(|s| lower(s)).collect();
    let l_plus = subalgebra_closure(n, &e_of_s)?;
    let l_minus = subalgebra_closure(n, &eprime_of_s)?;
    let both: Vec<SquareMatrix> = e_of_s.iter().chain(&eprime_of_s).cloned().collect();
    let l = subalgebra_closure(n, &both)?;
    let diag = Subalgebra::from_basis(n, &(1..=n).map(|k| SquareMatrix::unit(n, k, k)).collect::<Vec<_>>())?;
    let l0 = l.intersect(&diag);
    let radical = solvable_radical(&l)?;
    let radical_plus = radical.intersect(&l_plus);
    let radical_minus = radical.intersect(&l_minus);
    Ok(StringData {
        n,
        i,
        order,
        strings: runs,
        e_of_s,
        eprime_of_s,
        l_plus,
        l_minus,
        l,
        l0,
        radical,
        radical_plus,
        radical_minus,
    })
}

/// `X = Σ_{j=1}^{n−i} ⌊(n − j)/i⌋ e_{j,j+i}`
pub fn conj61_generator(n: usize, i: usize) -> Result<SquareMatrix> {
    coprime_check(n, i)?;
    Ok(SquareMatrix::from_entries(n, (1..=n - i).map(|j| ((j, j + i), Scalar::from_integer((((n - j) / i) as i64).into())))))
}

fn brackets_with(x: &SquareMatrix, s: &Subalgebra) -> Vec<SquareMatrix> {
    s.basis().iter().map(|y| bracket(x, y).unwrap()).collect()
}

fn span_equals(n: usize, mats: &[SquareMatrix], s: &Subalgebra) -> bool {
    let nonzero: Vec<SquareMatrix> = mats.iter().filter(|m| !m.is_zero()).cloned().collect();
    match Subalgebra::from_basis(n, &nonzero) {
        Ok(sub) => sub == *s,
        Err(_) => false,
    }
}

pub fn conj61_check(n: usize, i: usize, seed: u64) -> Result<Report> {
    conj61_check_with(n, i, seed, 2)
}

/// Descriptive check of the string conjecture: relations between `X` and
/// the string algebras, abelian radical, and for `samples` random
/// `z ∈ R₋` the expansion `exp(tX + z)·r_i`.
pub fn conj61_check_with(n: usize, i: usize, seed: u64, samples: usize) -> Result<Report> {
    let data = strings(n, i)?;
    let x = conj61_generator(n, i)?;
    let mut report = Report::new("conj61", n, Some(i), Some(seed));
    report.check("[X,L0]=0", brackets_with(&x, &data.l0).iter().all(SquareMatrix::is_zero));
    report.check("[X,L+]=0", brackets_with(&x, &data.l_plus).iter().all(SquareMatrix::is_zero));
    report.check("[X,L-]=L+", span_equals(n, &brackets_with(&x, &data.l_minus), &data.l_plus));
    report.check("[X,R-]=R+", span_equals(n, &brackets_with(&x, &data.radical_minus), &data.radical_plus));
    report.check("R abelian", data.radical.is_abelian());
    report.detail("strings", json!(data.strings));
    report.detail("dim_L", data.l.dim());
    report.detail("dim_radical", data.radical.dim());

    let r = assemble_r(&cg_triple(n, i)?, &beta_cg(n, i)?)?;
    let p = parabolic(n, &[i])?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let zbasis = data.radical_minus.basis().to_vec();
    let sample_count = if zbasis.is_empty() { 1 } else { samples.max(1) };
    let mut outcomes = Vec::new();
    for k in 0..sample_count {
        let mut z = SquareMatrix::zero(n);
        for b in &zbasis {
            let c = loop {
                let num: i64 = rng.gen_range(-9..=9);
                if num != 0 {
                    break crate::exact::q(num, rng.gen_range(1..=5));
                }
            };
            z = z.add(&b.scale(&c))?;
        }
        let label = |what: &str| format!("sample {k}: {what}");
        let mut a = t_times(&x);
        a = a.add(&z.lift())?;
        let expansion = match orbit_expand(&a, &r) {
            Ok(e) => e,
            Err(err) => {
                report.check(&label("tX+z nilpotent"), false);
                outcomes.push(json!({"z": matrix_text(&z), "error": err.to_string()}));
                continue;
            }
        };
        report.check(&label("tX+z nilpotent"), true);
        report.check(&label("t-degree 1"), expansion.degree() == 1);
        report.check(&label("degree-0 part solves MCYBE"), is_mcybe(&expansion.base).unwrap_or(false));
        let Some(omega) = expansion.top().cloned() else {
            outcomes.push(json!({"z": matrix_text(&z), "degree": 0}));
            continue;
        };
        report.check(&label("omega solves CYBE"), is_cybe(&omega).unwrap_or(false));
        match carrier(&omega) {
            Ok(c) => {
                let summary = c.summary(Some(&p));
                report.check(&label("carrier = p_i"), summary.matches_parabolic);
                if report.carrier.is_none() {
                    report.carrier = Some(summary.clone());
                }
                outcomes.push(json!({
                    "z": matrix_text(&z),
                    "degree": expansion.degree(),
                    "carrier_dim": summary.dim,
                    "omega": to_pretty(&omega),
                }));
            }
            Err(err) => {
                report.check(&label("carrier = p_i"), false);
                outcomes.push(json!({"z": matrix_text(&z), "error": err.to_string()}));
            }
        }
    }
    report.detail("samples", outcomes);
    report.detail("dim_p_i", p.dim());
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::q;

    #[test]
    fn order_12_5() {
        let s = strings(12, 5).unwrap();
        assert_eq!(s.order, vec![5, 10, 3, 8, 1, 6, 11, 4, 9, 2, 7]);
        assert_eq!(s.strings, vec![vec![5, 10], vec![3, 8], vec![1, 6, 11], vec![4, 9], vec![2, 7]]);
    }

    #[test]
    fn shift_has_no_strings_algebra() {
        let s = strings(7, 1).unwrap();
        assert_eq!(s.strings.len(), 1);
        assert_eq!(s.l.dim(), 0);
    }

    #[test]
    fn generator_examples() {
        let x = conj61_generator(7, 3).unwrap();
        let expected = SquareMatrix::from_entries(
            7,
            [((1, 4), q(2, 1)), ((2, 5), q(1, 1)), ((3, 6), q(1, 1)), ((4, 7), q(1, 1))],
        );
        assert_eq!(x, expected);
        assert!(conj61_generator(6, 2).is_err());
    }
}
