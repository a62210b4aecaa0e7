mod common;

use proptest::prelude::*;
use ybwb_core::boundary::{conj61_check, conj61_generator, parabolic, strings};
use ybwb_core::tensor::SignRelation;
use ybwb_core::Error;

use common::*;

#[test]
fn twelve_five() {
    let s = strings(12, 5).unwrap();
    assert_eq!(s.order, vec![5, 10, 3, 8, 1, 6, 11, 4, 9, 2, 7]);
    assert_eq!(s.strings, vec![vec![5, 10], vec![3, 8], vec![1, 6, 11], vec![4, 9], vec![2, 7]]);
    assert_eq!(s.e_of_s[0], e(12, 5, 6).add(&e(12, 10, 11)).unwrap());
    assert_eq!(s.eprime_of_s[3], e(12, 3, 2).add(&e(12, 8, 7)).unwrap());
    assert_eq!(s.e_of_s.len(), 4);
    assert_eq!(s.eprime_of_s.len(), 4);
}

// Semisimple part 11 and radical 12 occur at n = 12, not n = 11.
#[test]
fn i5_decompositions() {
    let twelve = strings(12, 5).unwrap();
    assert_eq!(twelve.semisimple_dim(), 11);
    assert_eq!(twelve.radical.dim(), 12);
    let eleven = strings(11, 5).unwrap();
    assert_eq!(eleven.semisimple_dim(), 15);
    assert_eq!(eleven.radical.dim(), 8);
}

#[test]
fn five_two() {
    let s = strings(5, 2).unwrap();
    assert_eq!(s.strings, vec![vec![2, 4], vec![1, 3]]);
    assert_eq!(s.e_of_s, vec![e(5, 2, 3).add(&e(5, 4, 5)).unwrap()]);
    assert_eq!(s.eprime_of_s, vec![e(5, 2, 1).add(&e(5, 4, 3)).unwrap()]);
    assert_eq!(s.l.dim(), 2);
    assert!(s.l.is_abelian());
    assert_eq!(conj61_generator(5, 2).unwrap(), mat(5, &[(1, 3, 2, 1), (2, 4, 1, 1), (3, 5, 1, 1)]));
}

#[test]
fn shift_case_is_empty() {
    for n in 3..=8 {
        let s = strings(n, 1).unwrap();
        assert_eq!(s.strings.len(), 1);
        assert_eq!(s.l.dim(), 0);
    }
}

#[test]
fn semisimple_part_appears_past_two() {
    assert_eq!(strings(7, 2).unwrap().semisimple_dim(), 0);
    assert!(strings(7, 3).unwrap().semisimple_dim() > 0);
}

#[test]
fn not_coprime() {
    assert_eq!(strings(4, 2).unwrap_err(), Error::NotCoprime { n: 4, i: 2 });
    assert!(conj61_check(6, 3, 1).is_err());
}

#[test]
fn conj61_shift_reduces_to_p1() {
    for n in 3..=6 {
        let r = conj61_check(n, 1, 7).unwrap();
        assert!(r.passed(), "n = {n}: {}", r.to_json_string());
        let c = r.carrier.unwrap();
        assert!(c.matches_parabolic);
        assert_eq!(c.dim, parabolic(n, &[1]).unwrap().dim());
    }
}

#[test]
fn conj61_five_two() {
    let r = conj61_check(5, 2, 7).unwrap();
    let status = |name: &str| r.identity(name).unwrap().status;
    for name in ["[X,L0]=0", "[X,L+]=0", "[X,L-]=L+", "[X,R-]=R+", "R abelian"] {
        assert_eq!(status(name), SignRelation::Exact, "{name}");
    }
    assert_eq!(status("sample 0: omega solves CYBE"), SignRelation::Exact);
    assert_eq!(status("sample 0: carrier = p_i"), SignRelation::Failed);
    assert_eq!(r.carrier.unwrap().dim, 16);
}

#[test]
fn conj61_is_deterministic() {
    assert_eq!(conj61_check(7, 2, 3).unwrap(), conj61_check(7, 2, 3).unwrap());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn strings_partition((n, i) in (3usize..=13).prop_flat_map(|n| (Just(n), 1..n))) {
        prop_assume!(num_integer::gcd(n, i) == 1);
        let s = strings(n, i).unwrap();
        prop_assert_eq!(s.strings.len(), i);
        let mut all: Vec<usize> = s.strings.iter().flatten().copied().collect();
        all.sort();
        prop_assert_eq!(all, (1..n).collect::<Vec<_>>());
        for run in &s.strings {
            prop_assert!(run.len() == n / i || run.len() == n / i + 1 || (i == 1 && run.len() == n - 1));
        }
        prop_assert!(s.radical.is_solvable());
        prop_assert!(s.l_plus.contains_all(&s.radical_plus));
    }
}
