mod common;

use common::*;
use cremona::monomial::{factor_word, IntMatrix2};
use proptest::prelude::*;

proptest! {
    #![proptest_config(config())]

    #[test]
    fn weyl_moves_preserve_forms_and_are_involutions(a in small_class(), b in small_class(), mv in weyl_move()) {
        check_weyl_move(&a, &b, &mv)?;
    }

    #[test]
    fn predecessor_does_not_depend_on_the_step_index(t in proper_type()) {
        check_s_independence(&t)?;
    }

    #[test]
    fn comult_never_increases_along_chains(t in proper_type()) {
        check_comult_monotone(&t)?;
    }

    #[test]
    fn castelnuovo_length_agrees_on_random_types(t in proper_type()) {
        check_castelnuovo_agreement(&t)?;
    }

    #[test]
    fn length_bounds_hold_on_random_types(t in proper_type()) {
        check_length_bounds(&t)?;
    }

    #[test]
    fn ell_ignores_the_first_exponent(s in exps(12, 9), first in 1u64..50) {
        check_ell_first_entry(s, first)?;
    }

    #[test]
    fn ell_adds_over_concatenation(s in exps(8, 6), t in exps(8, 6)) {
        check_ell_additivity(s, t)?;
    }

    #[test]
    fn factoring_inverts_word_matrices(e in exps(8, 30)) {
        check_round_trip(e)?;
    }

    #[test]
    fn normalization_and_conjugation_witnesses_verify(m in unimodular()) {
        check_witnesses(&m)?;
    }
}

#[test]
fn castelnuovo_length_agrees_up_to_degree_12() {
    for t in types_up_to(12) {
        check_castelnuovo_agreement(&t).unwrap();
    }
}

#[test]
fn length_bounds_hold_up_to_degree_12() {
    for t in types_up_to(12) {
        check_length_bounds(&t).unwrap();
    }
}

#[test]
fn predecessor_and_comult_properties_up_to_degree_12() {
    for t in types_up_to(12) {
        check_s_independence(&t).unwrap();
        check_comult_monotone(&t).unwrap();
    }
}

#[test]
fn factoring_round_trip_for_entries_up_to_200() {
    let words = words_with_entries_up_to(200);
    assert!(words.len() > 10_000);
    for e in words {
        check_round_trip(e).unwrap();
    }
}

#[test]
fn every_small_nonnegative_matrix_factors() {
    for a in 0..=30 {
        for b in 0..=30 {
            for c in 0..=30 {
                for d in 0..=30 {
                    let m = IntMatrix2::new(a, b, c, d);
                    if a * d - b * c == 1 {
                        let f = factor_word(&m).unwrap();
                        let w = f.word.matrix().unwrap();
                        assert_eq!(if f.flipped { w.tau_flip() } else { w }, m);
                    }
                }
            }
        }
    }
}

#[test]
fn rotations_with_a_large_first_exponent_agree() {
    // Cyclic block words of even length; rotating by one position swaps the
    // letters, which is conjugation by tau.
    cremona::oracle::for_each_word(12, |w| {
        let s = w.exps();
        if s.len() % 2 != 0 || s.iter().all(|&x| x < 2) {
            return;
        }
        let values: Vec<u64> = (0..s.len())
            .filter(|&i| s[i] >= 2)
            .map(|i| {
                let r: Vec<u64> = s[i..].iter().chain(&s[..i]).copied().collect();
                cremona::monomial::ell(&word(r))
            })
            .collect();
        assert!(values.windows(2).all(|p| p[0] == p[1]), "{w}: {values:?}");
    });
}

#[test]
fn witnesses_verify_on_the_sweep() {
    for m in unimodular_sweep(20) {
        check_witnesses(&m).unwrap();
    }
}
