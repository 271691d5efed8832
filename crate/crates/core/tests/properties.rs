mod common;

use common::*;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn ring_axioms_hold(a in series(), b in series(), c in series()) {
        ring_axioms(&a, &b, &c)?;
    }

    #[test]
    fn inversion_round_trips(f in unit_series()) {
        inverse_relations(&f)?;
    }

    #[test]
    fn substitution_then_dissection_is_identity(f in series(), m in 1i64..6) {
        substitute_dissect_inverse(&f, m)?;
    }

    #[test]
    fn dissection_reassembles(f in series(), m in 1i64..6) {
        dissection_reconstruction(&f, m)?;
    }

    #[test]
    fn dissection_commutes_with_q_power_factors(f in series(), g in series(), m in 1i64..5, i in 0i64..5) {
        dissect_pulls_out_powers(&f, &g, m, i % m)?;
    }

    #[test]
    fn product_text_round_trips(spec in product_spec()) {
        product_round_trip(&spec)?;
    }

    #[test]
    fn appell_text_round_trips(spec in appell_spec()) {
        appell_round_trip(&spec)?;
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn theta_sums_equal_products(order in 1i64..=500) {
        theta_sums_match_products(order)?;
    }
}

#[test]
fn theta_sums_equal_products_at_500() {
    theta_sums_match_products(500).unwrap();
}

#[test]
fn squared_partial_fractions() {
    for n in 1..=5 {
        partial_fractions(n, 400).unwrap();
    }
}
