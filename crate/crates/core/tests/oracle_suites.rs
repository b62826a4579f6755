mod common;

use common::*;

#[test]
fn kernel_operations_match_word_level_definitions() {
    let t = kernel_oracle(11, 200, 8);
    assert_eq!(t.violations, 0, "{t:?}");
}

#[test]
fn canonical_equality_is_language_equality() {
    let t = minimization_oracle(12, 100);
    assert_eq!(t.violations, 0, "{t:?}");
}

#[test]
fn forward_and_inverse_are_dual() {
    let t = duality_oracle(&attack_corpus(13, 100), 6);
    assert_eq!(t.violations, 0, "{t:?}");
}

#[test]
fn mappings_are_additive_and_monotone() {
    let t = additivity_oracle(&attack_corpus(13, 100), 14, 5);
    assert_eq!(t.violations, 0, "{t:?}");
}

#[test]
fn finite_encoding_matches_bitmask_oracle() {
    let t = finite_encoding_oracle(15, 50, 8);
    assert_eq!(t.violations, 0, "{t:?}");
}
