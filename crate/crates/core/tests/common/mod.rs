#![allow(dead_code)]

use ybwb_core::exact::q;
use ybwb_core::tensor::{parse_pretty, wedge};
use ybwb_core::{Scalar, SquareMatrix, Tensor2};

/// Matrix from `(i, j, num, den)` entries.
pub fn mat(n: usize, entries: &[(usize, usize, i64, i64)]) -> SquareMatrix {
    SquareMatrix::from_entries(n, entries.iter().map(|&(i, j, a, b)| ((i, j), q(a, b))))
}

pub fn e(n: usize, i: usize, j: usize) -> SquareMatrix {
    SquareMatrix::unit(n, i, j)
}

pub fn w(a: &SquareMatrix, b: &SquareMatrix) -> Tensor2 {
    wedge(a, b).unwrap()
}

pub fn sum(parts: &[Tensor2]) -> Tensor2 {
    let mut out = Tensor2::zero(parts[0].n());
    for p in parts {
        out = out.add(p).unwrap();
    }
    out
}

pub fn scaled(c: Scalar, t: &Tensor2) -> Tensor2 {
    t.scale(&c)
}

pub fn pretty(n: usize, text: &str) -> Tensor2 {
    parse_pretty(n, text).unwrap()
}

/// The n = 3 solution with the shift triple.
pub fn eq_r3() -> Tensor2 {
    pretty(3, "e12^e21 + e13^e31 + e23^e32 + 1/3 e11^e22 - 1/3 e11^e33 + 1/3 e22^e33 + 2 e12^e32")
}

/// The n = 3 boundary solution with carrier p_1.
pub fn eq_b3() -> Tensor2 {
    let n = 3;
    sum(&[
        w(&mat(n, &[(1, 1, 2, 3), (2, 2, -1, 3), (3, 3, -1, 3)]), &e(n, 1, 2)),
        w(&mat(n, &[(1, 1, 1, 3), (2, 2, 1, 3), (3, 3, -2, 3)]), &e(n, 2, 3)),
        w(&e(n, 1, 3), &e(n, 3, 2)),
    ])
}

/// r_2 for n = 5, T: 1→3, 2→4, 4→1, as displayed term by term.
pub fn r2_display() -> Tensor2 {
    pretty(
        5,
        "e12^e21 + e13^e31 + e14^e41 + e15^e51 + e23^e32 + e24^e42 + e25^e52 + e34^e43 + e35^e53 + e45^e54 \
         - 1/5 e11^e22 - 1/5 e22^e33 - 1/5 e33^e44 - 1/5 e44^e55 + 3/5 e11^e33 + 3/5 e22^e44 + 3/5 e33^e55 \
         - 3/5 e11^e44 - 3/5 e22^e55 + 1/5 e11^e55 \
         + 2 e23^e54 + 2 e23^e21 + 2 e23^e43 + 2 e45^e21 + 2 e45^e43 + 2 e12^e43 + 2 e13^e53",
    )
}

/// `1 + t b + (t²/2) b²` for the n = 3 boundary solution, row by row.
pub const QUANTUM_B3_GRID: &str = "
1 t/3 t^2/36 -t/3 t^2/18 0 t^2/36 0 0
0 1 t/6 0 t/6 t^2/36 0 t^2/36 0
0 0 1 0 0 t/6 0 t/2 -t^2/18
0 0 0 1 -t/6 t^2/36 -t/6 t^2/36 0
0 0 0 0 1 t/6 0 -t/6 t^2/18
0 0 0 0 0 1 0 0 t/3
0 0 0 0 0 -t/2 1 -t/6 -t^2/18
0 0 0 0 0 0 0 1 -t/3
0 0 0 0 0 0 0 0 1
";
