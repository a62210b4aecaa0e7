use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{bracket, rank, subalgebra_closure, Ring, Scalar, SparseVec, SquareMatrix, Subalgebra};
use crate::exec::{check_guard, Exec};
use crate::report::CarrierSummary;
use crate::tensor::{SignRelation, Tensor2};

/// The carrier of a skew solution and the bilinear form it inverts to.
///
/// Writing `r = Σ R_ab x_a ⊗ x_b` over the carrier basis `x_a`, the form is
/// `F = (Rᵀ)^{-1}`, so that `F(x_a, x_b)` is the entry `[a][b]`. With this
/// convention `(e11 − e22) ∧ e12` inverts to `x ∧ y ↦ e12*([x, y])`.
#[derive(Clone, Debug, PartialEq)]
pub struct CarrierAnalysis {
    pub carrier: Subalgebra,
    pub r_in_carrier: Vec<Vec<Scalar>>,
    pub cocycle: Vec<Vec<Scalar>>,
    /// Coefficients `f_kl` of a functional `Σ f_kl e_kl*` with
    /// `F(x, y) = f([x, y])`, when one exists.
    pub frobenius_functional: Option<SquareMatrix>,
}

fn eval(f: &SquareMatrix, x: &SquareMatrix) -> Scalar {
    let mut acc = Scalar::zero();
    for (&(k, l), v) in x.entries() {
        let c = f.get(k, l);
        if !c.is_zero() {
            acc += c * v;
        }
    }
    acc
}

impl CarrierAnalysis {
    pub fn dim(&self) -> usize {
        self.carrier.dim()
    }

    /// Whether `F(x, y) = ±f([x, y])` on all basis pairs.
    pub fn functional_relation(&self, f: &SquareMatrix) -> SignRelation {
        let basis = self.carrier.basis();
        let mut plus = true;
        let mut minus = true;
        for (a, x) in basis.iter().enumerate() {
            for (b, y) in basis.iter().enumerate().skip(a + 1) {
                let v = eval(f, &bracket(x, y).unwrap());
                let want = &self.cocycle[a][b];
                plus &= v == *want;
                minus &= -v == *want;
            }
        }
        match (plus, minus) {
            (true, _) => SignRelation::Exact,
            (false, true) => SignRelation::UpToSign,
            _ => SignRelation::Failed,
        }
    }

    /// The scalar `c` with `F(x, y) = c · f([x, y])` on the carrier, if any.
    ///
    /// A tensor `Σ c_ab x_a ∧ x_b` can be read as a form through the tensor
    /// pairing (used here) or the determinant pairing; the two differ by a
    /// factor 2, so `c = 2` means the identity holds in the other reading.
    pub fn functional_scale(&self, f: &SquareMatrix) -> Option<Scalar> {
        let basis = self.carrier.basis();
        let mut scale: Option<Scalar> = None;
        for (a, x) in basis.iter().enumerate() {
            for (b, y) in basis.iter().enumerate().skip(a + 1) {
                let v = eval(f, &bracket(x, y).unwrap());
                let want = &self.cocycle[a][b];
                match (v.is_zero(), want.is_zero()) {
                    (true, true) => {}
                    (true, false) | (false, true) => return None,
                    (false, false) => {
                        let c = want / &v;
                        if scale.as_ref().is_some_and(|s| *s != c) {
                            return None;
                        }
                        scale = Some(c);
                    }
                }
            }
        }
        scale
    }

    /// `x ∧ y ↦ f([x, y])` is non-degenerate on the carrier.
    pub fn is_frobenius_functional(&self, f: &SquareMatrix) -> bool {
        let basis = self.carrier.basis();
        let m = basis.len();
        let rows: Vec<SparseVec> = (0..m)
            .map(|a| SparseVec::from_pairs((0..m).map(|b| (b, eval(f, &bracket(&basis[a], &basis[b]).unwrap())))))
            .collect();
        rank(&rows) == m
    }

    pub fn summary(&self, parabolic: Option<&Subalgebra>) -> CarrierSummary {
        CarrierSummary { dim: self.dim(), matches_parabolic: parabolic.is_some_and(|p| *p == self.carrier) }
    }
}

/// Carrier of a nonzero skew `r`: the span of its contractions.
///
/// Checks that the span is a subalgebra, that `r` lies in its exterior
/// square with invertible coefficient matrix, and that the inverse form is a
/// 2-cocycle; then looks for a functional whose coboundary is that form.
pub fn carrier(r: &Tensor2) -> Result<CarrierAnalysis> {
    if !r.is_skew() {
        return Err(Error::NotSkew);
    }
    if r.is_zero() {
        return Err(Error::OutOfRange("zero tensor has no carrier".into()));
    }
    let n = r.n();
    let mut by_kl: BTreeMap<(usize, usize), SquareMatrix> = BTreeMap::new();
    for ([i, j, k, l], v) in r.terms() {
        by_kl.entry((*k, *l)).or_insert_with(|| SquareMatrix::zero(n)).add_entry(*i, *j, v);
    }
    let left: Vec<SquareMatrix> = by_kl.values().cloned().collect();
    let span = crate::exact::Span::from_vectors(left.iter().map(flat).collect::<Vec<_>>().iter());
    let carrier = Subalgebra::from_span(n, span)?;
    let m = carrier.dim();

    let mut right = vec![SquareMatrix::zero(n); m];
    for (&(k, l), mat) in &by_kl {
        let u = carrier.coordinates(mat).expect("left factor lies in its own span");
        for (a, c) in u.iter().enumerate() {
            right[a].add_entry(k, l, c);
        }
    }
    let rows: Vec<Vec<Scalar>> = right
        .iter()
        .map(|y| carrier.coordinates(y).ok_or_else(|| Error::CheckFailed("r is not in carrier ∧ carrier".into())))
        .collect::<Result<_>>()?;
    let rmat = SquareMatrix::from_entries(
        m,
        rows.iter().enumerate().flat_map(|(a, row)| row.iter().enumerate().map(move |(b, v)| ((a + 1, b + 1), v.clone()))),
    );
    let inv = rmat.transpose().inverse().map_err(|_| Error::DegenerateRestriction)?;
    let cocycle: Vec<Vec<Scalar>> = (1..=m).map(|a| (1..=m).map(|b| inv.get(a, b)).collect()).collect();

    let sc = carrier.structure_constants();
    let form = |u: &[Scalar], c: usize| -> Scalar {
        let mut acc = Scalar::zero();
        for (k, v) in u.iter().enumerate() {
            if !v.is_zero() {
                acc += v * &cocycle[k][c];
            }
        }
        acc
    };
    for a in 0..m {
        for b in a + 1..m {
            for c in b + 1..m {
                let s = form(&sc[a][b], c) + form(&sc[b][c], a) + form(&sc[c][a], b);
                if !s.is_zero() {
                    return Err(Error::CheckFailed(format!("cocycle identity fails on basis triple ({a}, {b}, {c})")));
                }
            }
        }
    }

    let basis = carrier.basis();
    let mut system = Vec::new();
    let mut rhs = Vec::new();
    for a in 0..m {
        for b in a + 1..m {
            let z = bracket(&basis[a], &basis[b])?;
            let mut row = vec![Scalar::zero(); n * n];
            for (&(k, l), v) in z.entries() {
                row[SquareMatrix::<Scalar>::flat_index(n, k, l)] = v.clone();
            }
            system.push(row);
            rhs.push(cocycle[a][b].clone());
        }
    }
    let frobenius_functional = if system.is_empty() {
        None
    } else {
        crate::exact::solve_linear(&system, &rhs).ok().map(|sol| {
            SquareMatrix::from_entries(
                n,
                sol.particular.into_iter().enumerate().map(|(k, v)| (SquareMatrix::<Scalar>::unflatten(n, k), v)),
            )
        })
    };
    Ok(CarrierAnalysis { carrier, r_in_carrier: rows, cocycle, frobenius_functional })
}

fn flat(m: &SquareMatrix) -> SparseVec {
    let n = m.n();
    SparseVec::from_pairs(m.entries().map(|(&(i, j), v)| (SquareMatrix::<Scalar>::flat_index(n, i, j), v.clone())))
}

/// Parabolic subalgebra generated by the Cartan subalgebra, every `e_{j,j+1}`
/// and every `e_{j+1,j}` with `j` not omitted.
pub fn parabolic(n: usize, omitted: &[usize]) -> Result<Subalgebra> {
    if omitted.is_empty() || omitted.iter().any(|&j| j == 0 || j >= n) {
        return Err(Error::OutOfRange(format!("omitted roots {omitted:?} for n = {n}")));
    }
    let mut gens = Vec::new();
    for j in 1..n {
        gens.push(SquareMatrix::unit(n, j, j).sub(&SquareMatrix::unit(n, j + 1, j + 1))?);
        gens.push(SquareMatrix::unit(n, j, j + 1));
        if !omitted.contains(&j) {
            gens.push(SquareMatrix::unit(n, j + 1, j));
        }
    }
    subalgebra_closure(n, &gens)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "verdict")]
pub enum FrobeniusVerdict {
    /// `witness` gives a non-degenerate form; coefficients of `e_kl*`.
    Frobenius { witness: Vec<(usize, usize, String)> },
    /// Every sampled functional gave a degenerate form.
    ProbablyNot { samples: usize },
    /// Nothing was sampled.
    Unknown,
}

/// Samples integer functionals `f` and tests whether `x ∧ y ↦ f([x, y])` is
/// non-degenerate on `S`. A hit is a proof; no hit after `trials` samples
/// is strong evidence that no such `f` exists.
pub fn frobenius_probe(s: &Subalgebra, trials: usize, seed: u64) -> FrobeniusVerdict {
    frobenius_probe_with(s, trials, seed, Exec::default())
}

pub fn frobenius_probe_with(s: &Subalgebra, trials: usize, seed: u64, exec: Exec) -> FrobeniusVerdict {
    if trials == 0 {
        return FrobeniusVerdict::Unknown;
    }
    let m = s.dim();
    let n = s.n();
    if m == 0 {
        return FrobeniusVerdict::Frobenius { witness: Vec::new() };
    }
    let sc = s.structure_constants();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let candidates: Vec<SquareMatrix> = (0..trials)
        .map(|_| {
            SquareMatrix::from_entries(
                n,
                (1..=n).flat_map(|i| (1..=n).map(move |j| (i, j))).map(|k| (k, Scalar::from_integer(rng.gen_range(-1000i64..=1000).into()))).collect::<Vec<_>>(),
            )
        })
        .collect();
    let nondegenerate = |f: &SquareMatrix| -> bool {
        let fx: Vec<Scalar> = s.basis().iter().map(|x| eval(f, x)).collect();
        let rows: Vec<SparseVec> = (0..m)
            .map(|a| {
                SparseVec::from_pairs((0..m).map(|b| {
                    let mut acc = Scalar::zero();
                    for (k, c) in sc[a][b].iter().enumerate() {
                        if !c.is_zero() {
                            acc += c * &fx[k];
                        }
                    }
                    (b, acc)
                }))
            })
            .collect();
        rank(&rows) == m
    };
    for chunk in candidates.chunks(8) {
        let hits = exec.map(chunk, nondegenerate);
        if let Some(k) = hits.iter().position(|h| *h) {
            let f = &chunk[k];
            return FrobeniusVerdict::Frobenius {
                witness: f.entries().map(|(&(i, j), v)| (i, j, crate::exact::format_scalar(v))).collect(),
            };
        }
    }
    FrobeniusVerdict::ProbablyNot { samples: trials }
}

/// `dim H²(S; k)` from the Chevalley–Eilenberg complex.
pub fn lie_h2(s: &Subalgebra) -> Result<usize> {
    lie_h2_with(s, Exec::default())
}

pub fn lie_h2_with(s: &Subalgebra, exec: Exec) -> Result<usize> {
    check_guard("lie_h2 n", s.n(), 6)?;
    let m = s.dim();
    if m < 2 {
        return Ok(0);
    }
    let sc = s.structure_constants();
    let col = |k: usize, j: usize| -> Option<(usize, i64)> {
        use std::cmp::Ordering::*;
        match k.cmp(&j) {
            Equal => None,
            Less => Some((k * m + j, 1)),
            Greater => Some((j * m + k, -1)),
        }
    };
    let triples: Vec<(usize, usize, usize)> =
        (0..m).flat_map(|a| (a + 1..m).flat_map(move |b| (b + 1..m).map(move |c| (a, b, c)))).collect();
    let rows = exec.map(&triples, |&(a, b, c)| {
        let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
        // (dω)(x_a, x_b, x_c) = −ω([x_a,x_b], x_c) + ω([x_a,x_c], x_b) − ω([x_b,x_c], x_a)
        for (pair, other, sign) in [((a, b), c, -1), ((a, c), b, 1), ((b, c), a, -1)] {
            for (k, v) in sc[pair.0][pair.1].iter().enumerate() {
                if v.is_zero() {
                    continue;
                }
                if let Some((idx, s2)) = col(k, other) {
                    *acc.entry(idx).or_insert_with(Scalar::zero) += v * Scalar::from_integer((sign * s2).into());
                }
            }
        }
        SparseVec::from_pairs(acc)
    });
    let rank_d2 = rank(&rows);
    let rank_d1 = s.derived().dim();
    Ok(m * (m - 1) / 2 - rank_d2 - rank_d1)
}
