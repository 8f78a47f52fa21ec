//! Exhaustive property checks over all small quandles and biquandles.

mod common;

use common::*;

fn run(c: Check) {
    if let Err(e) = c {
        panic!("{e}");
    }
}

#[test]
fn structure_round_trips() {
    run(check_round_trips());
}

#[test]
fn coinciding_operations_iff_trivial_associated_quandle() {
    run(check_coinciding_operations());
}

#[test]
fn connected_base_gives_connected_biquandles() {
    run(check_connectedness());
}

#[test]
fn constant_structures_on_medial_quandles_are_medial() {
    run(check_constant_structures_medial());
}

#[test]
fn no_commutative_structures_on_commutative_quandles() {
    run(check_no_commutative_structures());
}

#[test]
fn commutative_biquandles_have_involutive_quotients_of_betas() {
    run(check_order_two_betas());
}

#[test]
fn hom_biquandles_into_medial_targets_are_medial() {
    run(check_hom_mediality());
}

#[test]
fn lifting_criterion_on_all_order_three_pairs() {
    run(check_lifting());
}

#[test]
fn involutory_and_commutative_targets_pass_to_hom() {
    run(check_hom_inherits_identities());
}

#[test]
fn constant_action_passes_to_hom() {
    run(check_hom_constant_action());
}

#[test]
fn induced_maps_are_functorial() {
    run(check_functor_laws());
}

#[test]
fn power_embedding_image_is_the_hom_biquandle() {
    run(check_power_embedding());
}

#[test]
fn constant_action_is_medial_and_two_reductive() {
    run(check_constant_action_medial());
}

#[test]
fn two_reductive_is_medial() {
    run(check_two_reductive_medial());
}

#[test]
fn two_reductive_quotient_preserves_homs() {
    run(check_quotient_by_gamma());
}

#[test]
fn both_structure_equivalences_agree() {
    run(check_equivalences_agree());
}

#[test]
fn algebra_invariants() {
    run(check_algebra_invariants());
}

#[test]
fn small_quandle_counts() {
    // 1, 1, 3, 7 quandles of orders 1..4
    let counts: Vec<usize> = (1..=4).map(|n| quandles_of_order(n).len()).collect();
    assert_eq!(counts, vec![1, 1, 3, 7]);
}
