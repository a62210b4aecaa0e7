mod common;

use common::*;
use num_integer::Integer;
use ybwb_core::bd::*;
use ybwb_core::exact::q;
use ybwb_core::exec::Exec;
use ybwb_core::tensor::{in_sl_tensor, is_cybe, is_mcybe, to_pretty};
use ybwb_core::Error;

fn coprime(n: usize) -> impl Iterator<Item = usize> {
    (1..n).filter(move |i| n.gcd(i) == 1)
}

#[test]
fn shift_triple_n3_assembles_displayed_solution() {
    let t = cg_triple(3, 1).unwrap();
    let r = assemble_r(&t, &beta_cg(3, 1).unwrap()).unwrap();
    assert_eq!(r, eq_r3());
    assert_eq!(r_cg_closed(3).unwrap(), eq_r3());
}

#[test]
fn n5_step_two_assembles_displayed_solution() {
    let t = cg_triple(5, 2).unwrap();
    let r = assemble_r(&t, &beta_cg(5, 2).unwrap()).unwrap();
    assert_eq!(r, r2_display());
}

#[test]
fn n5_alpha_has_seven_terms() {
    let a = alpha_term(&cg_triple(5, 2).unwrap());
    assert_eq!(
        a,
        pretty(5, "2 e23^e54 + 2 e23^e21 + 2 e23^e43 + 2 e45^e21 + 2 e45^e43 + 2 e12^e43 + 2 e13^e53")
    );
}

#[test]
fn trivial_triple_gives_no_alpha() {
    for n in 2..7 {
        assert!(alpha_term(&Triple::trivial(n).unwrap()).is_zero());
    }
}

#[test]
fn trivial_family_for_n3_is_one_parameter() {
    let fam = solve_beta(&Triple::trivial(3).unwrap()).unwrap();
    assert_eq!(fam.dim(), 1);
    let dir = pretty(3, "e11^e22 - e11^e33 + e22^e33");
    assert!(ybwb_core::tensor::proportional(&fam.nullspace[0], &dir).is_some());
    for lambda in [q(0, 1), q(1, 1), q(-7, 4)] {
        let beta = fam.member(std::slice::from_ref(&lambda)).unwrap();
        let r = assemble_r(&Triple::trivial(3).unwrap(), &beta).unwrap();
        assert!(is_mcybe(&r).unwrap());
    }
}

#[test]
fn family_dimension_counts_omitted_roots() {
    for n in 2..7 {
        let fam = solve_beta(&Triple::trivial(n).unwrap()).unwrap();
        let d = n - 1;
        assert_eq!(fam.dim(), d * (d - 1) / 2, "n = {n}");
    }
    let t = Triple::new(5, [(1, 3)]).unwrap();
    assert!(validate_triple(&t).valid);
    assert_eq!(solve_beta(&t).unwrap().dim(), 3);
}

#[test]
fn closed_form_beta_matches_solver() {
    for n in 2..9 {
        for i in coprime(n) {
            let fam = solve_beta(&cg_triple(n, i).unwrap()).unwrap();
            assert_eq!(fam.dim(), 0);
            assert_eq!(fam.particular, beta_cg(n, i).unwrap(), "n = {n}, i = {i}");
        }
    }
}

/// With `s` read from `p − q` instead of `q − p` the coefficients change sign
/// pattern and no longer solve the Cartan constraints.
#[test]
fn reversed_congruence_reading_fails() {
    for (n, i) in [(3, 1), (5, 2), (7, 3)] {
        let inv = (1..n).find(|k| (k * i) % n == 1).unwrap();
        let reversed = diagonal_wedge(n, |p, qq| {
            let s = ((n + p - qq) * inv) % n;
            q(n as i64 - 2 * s as i64, n as i64)
        });
        let fam = solve_beta(&cg_triple(n, i).unwrap()).unwrap();
        assert_ne!(fam.particular, reversed);
    }
}

#[test]
fn n1_closed_form_coefficients() {
    for n in 2..9 {
        let expected = diagonal_wedge(n, |i, j| q(n as i64 + 2 * (i as i64 - j as i64), n as i64));
        assert_eq!(beta_cg(n, 1).unwrap(), expected);
    }
}

#[test]
fn closed_form_r_matches_assembly() {
    for n in 2..9 {
        let assembled = assemble_r(&cg_triple(n, 1).unwrap(), &beta_cg(n, 1).unwrap()).unwrap();
        assert_eq!(r_cg_closed(n).unwrap(), assembled, "n = {n}");
    }
}

#[test]
fn every_coprime_assembly_solves_mcybe() {
    for n in 2..8 {
        for i in coprime(n) {
            let r = assemble_r(&cg_triple(n, i).unwrap(), &beta_cg(n, i).unwrap()).unwrap();
            assert!(r.is_skew());
            assert!(in_sl_tensor(&r));
            assert!(!is_cybe(&r).unwrap());
        }
    }
}

#[test]
fn wrong_beta_is_rejected() {
    let t = cg_triple(4, 1).unwrap();
    let bad = beta_cg(4, 3).unwrap();
    assert!(matches!(assemble_r(&t, &bad), Err(Error::CheckFailed(_))));
}

#[test]
fn enumeration_matches_coprime_shifts() {
    for n in 2..9 {
        let found = enumerate_one_omitted(n).unwrap();
        let mut expected: Vec<Triple> = coprime(n).map(|i| cg_triple(n, i).unwrap()).collect();
        expected.sort();
        expected.dedup();
        assert_eq!(found, expected, "n = {n}");
    }
}

#[test]
fn enumeration_small_cases() {
    let shifts = |n: usize| -> Vec<usize> {
        enumerate_one_omitted(n)
            .unwrap()
            .iter()
            .map(|t| (1..n).find(|i| *t == cg_triple(n, *i).unwrap_or(Triple::trivial(n).unwrap())).unwrap())
            .collect()
    };
    assert_eq!(shifts(3), vec![1, 2]);
    assert_eq!(shifts(4), vec![1, 3]);
    assert_eq!(shifts(6), vec![1, 5]);
}

#[test]
fn enumeration_modes_agree() {
    let a = enumerate_one_omitted_with(7, Exec::Sequential).unwrap();
    let b = enumerate_one_omitted_with(7, Exec::Parallel).unwrap();
    assert_eq!(a, b);
}

#[test]
fn enumeration_guard() {
    assert!(matches!(enumerate_one_omitted(12), Err(Error::GuardExceeded { .. })));
}

#[test]
fn pretty_output_of_n3() {
    let text = to_pretty(&r_cg_closed(3).unwrap());
    assert_eq!(pretty(3, &text), eq_r3());
}
