//! Kronecker matrices, cube-zero tests and quantum Yang–Baxter checks.
//!
//! `e_ij ⊗ e_kl` sits at row `(i−1)n + k`, column `(j−1)n + l` (1-based),
//! so a tensor on `gl(n)^{⊗2}` becomes an `n² × n²` matrix acting on
//! `V ⊗ V`. The three placements of such a matrix on `V ⊗ V ⊗ V` use the
//! analogous row-major index `(a−1)n² + (b−1)n + c`.

mod grid;

use num_integer::Roots;
use serde::{Deserialize, Serialize};

use crate::boundary::b_cg_closed;
use crate::error::{Error, Result};
use crate::exact::{q, Poly, Ring, Scalar, SquareMatrix};
use crate::exec::{check_guard, Exec};
use crate::report::Report;
use crate::tensor::{is_cybe, CoeffJson, JsonCoeff, Tensor2};

pub use grid::{entry_text, parse_entry};

/// Default upper bound on `n` for [`cube_zero_sweep`].
pub const SWEEP_GUARD: usize = 12;

/// A square matrix on `V^{⊗k}` for `dim V = n`.
#[derive(Clone, Debug, PartialEq)]
pub struct BigMatrix<R: Ring = Scalar> {
    n: usize,
    m: SquareMatrix<R>,
}

impl<R: Ring> BigMatrix<R> {
    /// Wraps a matrix whose side is `n²`.
    pub fn new(n: usize, m: SquareMatrix<R>) -> Result<Self> {
        if m.n() != n * n {
            return Err(Error::DimensionMismatch(m.n(), n * n));
        }
        Ok(BigMatrix { n, m })
    }

    pub fn identity(n: usize) -> Self {
        BigMatrix { n, m: SquareMatrix::identity(n * n) }
    }

    /// Base dimension `n`.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Side length `n²`.
    pub fn side(&self) -> usize {
        self.m.n()
    }

    pub fn matrix(&self) -> &SquareMatrix<R> {
        &self.m
    }

    pub fn get(&self, r: usize, c: usize) -> R {
        self.m.get(r, c)
    }

    pub fn is_zero(&self) -> bool {
        self.m.is_zero()
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        Ok(BigMatrix { n: self.n, m: self.m.mul(&other.m)? })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        Ok(BigMatrix { n: self.n, m: self.m.add(&other.m)? })
    }

    pub fn power(&self, k: usize) -> Self {
        BigMatrix { n: self.n, m: self.m.power(k) }
    }

    /// `B₁₂`, `B₁₃` and `B₂₃` as `n³ × n³` matrices.
    pub fn placements(&self) -> [SquareMatrix<R>; 3] {
        let n = self.n;
        let split = |r: usize| ((r - 1) / n + 1, (r - 1) % n + 1);
        let idx = |a: usize, b: usize, c: usize| (a - 1) * n * n + (b - 1) * n + c;
        let mut out = [SquareMatrix::zero(n * n * n), SquareMatrix::zero(n * n * n), SquareMatrix::zero(n * n * n)];
        for (&(r, c), v) in self.m.entries() {
            let (a, b) = split(r);
            let (a2, b2) = split(c);
            for x in 1..=n {
                out[0].add_entry(idx(a, b, x), idx(a2, b2, x), v);
                out[1].add_entry(idx(a, x, b), idx(a2, x, b2), v);
                out[2].add_entry(idx(x, a, b), idx(x, a2, b2), v);
            }
        }
        out
    }
}

impl BigMatrix<Scalar> {
    pub fn lift(&self) -> BigMatrix<Poly> {
        BigMatrix { n: self.n, m: self.m.lift() }
    }
}

/// Kronecker matrix of a 2-tensor.
pub fn to_matrix<R: Ring>(r: &Tensor2<R>) -> BigMatrix<R> {
    let n = r.n();
    let mut m = SquareMatrix::zero(n * n);
    for ([i, j, k, l], v) in r.terms() {
        m.add_entry((i - 1) * n + k, (j - 1) * n + l, v);
    }
    BigMatrix { n, m }
}

/// `to_matrix(b)³ = 0`.
pub fn cube_zero(b: &Tensor2) -> bool {
    to_matrix(b).power(3).is_zero()
}

/// `1 + t b + (t²/2) b²`, defined when `b³ = 0`.
pub fn exp_quantize(b: &Tensor2) -> Result<BigMatrix<Poly>> {
    let m = to_matrix(b);
    let sq = m.mul(&m)?;
    if !sq.mul(&m)?.is_zero() {
        return Err(Error::CubeNotZero);
    }
    let t = Poly::monomial(q(1, 1), 1);
    let half_t2 = Poly::monomial(q(1, 2), 2);
    let out = BigMatrix::identity(m.n)
        .add(&BigMatrix { n: m.n, m: m.m.lift().scale(&t) })?
        .add(&BigMatrix { n: m.n, m: sq.m.lift().scale(&half_t2) })?;
    Ok(out)
}

/// `B₁₂ B₁₃ B₂₃ = B₂₃ B₁₃ B₁₂`, exactly.
pub fn qybe_check<R: Ring>(b: &BigMatrix<R>) -> Result<bool> {
    qybe_check_with(b, Exec::default())
}

pub fn qybe_check_with<R: Ring>(b: &BigMatrix<R>, exec: Exec) -> Result<bool> {
    Ok(qybe_defect_with(b, exec)?.is_zero())
}

/// `B₁₂ B₁₃ B₂₃ − B₂₃ B₁₃ B₁₂` on `V^{⊗3}`.
pub fn qybe_defect<R: Ring>(b: &BigMatrix<R>) -> Result<SquareMatrix<R>> {
    qybe_defect_with(b, Exec::default())
}

pub fn qybe_defect_with<R: Ring>(b: &BigMatrix<R>, exec: Exec) -> Result<SquareMatrix<R>> {
    let [b12, b13, b23] = b.placements();
    let (lhs, rhs) = exec.join(
        || b12.mul(&b13).and_then(|x| x.mul(&b23)),
        || b23.mul(&b13).and_then(|x| x.mul(&b12)),
    );
    lhs?.sub(&rhs?)
}

/// Powers of `t` at which the quantum Yang–Baxter equation fails.
pub fn qybe_failing_degrees(b: &BigMatrix<Poly>) -> Result<Vec<usize>> {
    let d = qybe_defect(b)?;
    let top = d.entries().filter_map(|(_, v)| v.degree()).max();
    Ok(top.map(|top| (0..=top).filter(|&k| !d.coeff(k).is_zero()).collect()).unwrap_or_default())
}

/// Records `cube_zero(b_CG(n))` for `n = 3..=max_n`, and the quantum
/// Yang–Baxter check whenever the cube vanishes.
pub fn cube_zero_sweep(max_n: usize) -> Result<Report> {
    cube_zero_sweep_with(max_n, Exec::default())
}

pub fn cube_zero_sweep_with(max_n: usize, exec: Exec) -> Result<Report> {
    check_guard("n", max_n, SWEEP_GUARD)?;
    let ns: Vec<usize> = (3..=max_n).collect();
    let rows = exec.map(&ns, |&n| -> Result<(usize, bool, Option<Vec<usize>>)> {
        let b = b_cg_closed(n)?;
        if !cube_zero(&b) {
            return Ok((n, false, None));
        }
        let failing = qybe_failing_degrees(&exp_quantize(&b)?)?;
        Ok((n, true, Some(failing)))
    });
    let mut report = Report::new("cube-zero-sweep", max_n, None, None);
    let mut cubes = serde_json::Map::new();
    let mut degrees = serde_json::Map::new();
    let mut first_failure = None;
    for row in rows {
        let (n, cz, qy) = row?;
        cubes.insert(n.to_string(), cz.into());
        if let Some(failing) = qy {
            report.check(&format!("n={n}: exp(t b) solves the QYBE"), failing.is_empty());
            degrees.insert(n.to_string(), failing.into());
        }
        if !cz && first_failure.is_none() {
            first_failure = Some(n);
        }
    }
    report.detail("cube_zero", cubes);
    report.detail("qybe_failing_degrees", degrees);
    report.detail("first_n_without_cube_zero", first_failure);
    Ok(report)
}

/// Runs the checks of the quantization theorem on one tensor: CYBE, cube
/// zero and, when both hold, the quantum Yang–Baxter equation for
/// `exp(t b)`.
pub fn quantize_report(name: &str, b: &Tensor2) -> Result<Report> {
    let mut report = Report::new(name, b.n(), None, None);
    let cybe = report.check("b solves the CYBE", is_cybe(b)?);
    let cz = report.check("b^3 = 0", cube_zero(b));
    if cybe && cz {
        let failing = qybe_failing_degrees(&exp_quantize(b)?)?;
        report.check("exp(t b) solves the QYBE", failing.is_empty());
        report.detail("qybe_failing_degrees", failing);
    }
    Ok(report)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EntryJson {
    pub r: usize,
    pub c: usize,
    pub coeff: CoeffJson,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BigMatrixJson {
    pub n2: usize,
    pub entries: Vec<EntryJson>,
}

impl<R: JsonCoeff> BigMatrix<R> {
    pub fn to_json(&self) -> BigMatrixJson {
        BigMatrixJson {
            n2: self.side(),
            entries: self.m.entries().map(|(&(r, c), v)| EntryJson { r, c, coeff: v.encode() }).collect(),
        }
    }

    pub fn from_json(j: &BigMatrixJson) -> Result<Self> {
        let n = j.n2.sqrt();
        if n * n != j.n2 || n == 0 {
            return Err(Error::Parse(format!("n2 = {} is not a positive square", j.n2)));
        }
        let mut m = SquareMatrix::zero(j.n2);
        for e in &j.entries {
            if e.r == 0 || e.c == 0 || e.r > j.n2 || e.c > j.n2 {
                return Err(Error::OutOfRange(format!("entry ({}, {}) with n2 = {}", e.r, e.c, j.n2)));
            }
            m.add_entry(e.r, e.c, &R::decode(&e.coeff)?);
        }
        Ok(BigMatrix { n, m })
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(&self.to_json()).expect("serializable")
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let j: BigMatrixJson = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_json(&j)
    }
}

impl BigMatrix<Poly> {
    /// Accepts either coefficient encoding; rational entries become constants.
    pub fn from_json_str_any(s: &str) -> Result<Self> {
        let j: BigMatrixJson = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        let lifted = BigMatrixJson {
            n2: j.n2,
            entries: j
                .entries
                .into_iter()
                .map(|e| {
                    let coeff = match e.coeff {
                        CoeffJson::Q(s) => CoeffJson::Poly(vec![s]),
                        p => p,
                    };
                    EntryJson { coeff, ..e }
                })
                .collect(),
        };
        Self::from_json(&lifted)
    }
}

impl<R: Ring> BigMatrix<R> {
    /// Aligned plain-text grid, one row per line.
    pub fn to_grid(&self) -> String
    where
        R: grid::EntryText,
    {
        let side = self.side();
        let cells: Vec<Vec<String>> =
            (1..=side).map(|r| (1..=side).map(|c| self.get(r, c).entry_text()).collect()).collect();
        let width = cells.iter().flatten().map(|s| s.chars().count()).max().unwrap_or(1);
        cells
            .iter()
            .map(|row| row.iter().map(|s| format!("{s:>width$}")).collect::<Vec<_>>().join("  ").trim_end().to_string())
            .collect::<Vec<_>>()
            .join("\n")
    }
}

impl BigMatrix<Poly> {
    /// Parses the grid printed by [`BigMatrix::to_grid`] (or any whitespace
    /// separated rows of entries such as `t^2/36`, `-t/2`, `1`, `0`).
    pub fn from_grid(text: &str) -> Result<Self> {
        let rows: Vec<Vec<Poly>> = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty())
            .map(|l| l.split_whitespace().map(parse_entry).collect::<Result<Vec<_>>>())
            .collect::<Result<_>>()?;
        let side = rows.len();
        let n = side.sqrt();
        if n * n != side || n == 0 {
            return Err(Error::Parse(format!("{side} rows is not a positive square")));
        }
        let mut m = SquareMatrix::zero(side);
        for (r, row) in rows.iter().enumerate() {
            if row.len() != side {
                return Err(Error::Parse(format!("row {} has {} entries, expected {side}", r + 1, row.len())));
            }
            for (c, v) in row.iter().enumerate() {
                m.add_entry(r + 1, c + 1, v);
            }
        }
        Ok(BigMatrix { n, m })
    }

    /// Coefficient matrix of `t^k`.
    pub fn coeff(&self, k: usize) -> BigMatrix<Scalar> {
        BigMatrix { n: self.n, m: self.m.coeff(k) }
    }

    /// Multiplies every entry by `t`.
    pub fn scale_t(&self) -> Self {
        BigMatrix { n: self.n, m: self.m.scale(&Poly::monomial(q(1, 1), 1)) }
    }
}
