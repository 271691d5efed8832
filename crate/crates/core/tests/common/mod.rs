//! Strategies and property checks shared by the `properties` and `acceptance` targets.
#![allow(dead_code)]

use proptest::prelude::*;
use proptest::test_runner::TestCaseError;

use qpv::lambert::AppellSpec;
use qpv::products::{phi, phi_prod, psi, psi_prod, Factor, ProductSpec};
use qpv::series::rat;
use qpv::{LaurentSeries, Rational, EXACT};

pub type Check = Result<(), TestCaseError>;

fn coefficient() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| rat(n, d))
}

/// Sparse Laurent series: up to 8 terms in `q^-4 .. q^24`, truncated at 5..40 or exact.
pub fn series() -> impl Strategy<Value = LaurentSeries> {
    let order = prop_oneof![3 => 5i64..40, 1 => Just(EXACT)];
    (
        prop::collection::vec((-4i64..24, coefficient()), 0..8),
        order,
    )
        .prop_map(|(terms, order)| LaurentSeries::from_terms(terms, order))
}

/// Truncated series with a nonzero term below the order.
pub fn unit_series() -> impl Strategy<Value = LaurentSeries> {
    (
        -4i64..6,
        coefficient().prop_filter("nonzero", |c| *c != rat(0, 1)),
        prop::collection::vec((1i64..20, coefficient()), 0..6),
        8i64..40,
    )
        .prop_map(|(low, lead, rest, span)| {
            let terms =
                std::iter::once((low, lead)).chain(rest.into_iter().map(|(e, c)| (low + e, c)));
            LaurentSeries::from_terms(terms, low + span)
        })
}

pub fn product_spec() -> impl Strategy<Value = ProductSpec> {
    let factor = (prop::bool::ANY, 0i64..9, 1i64..10, -3i64..=3).prop_map(|(neg, r, m, p)| {
        let sign = if neg || r == 0 { -1 } else { 1 };
        Factor::new(sign, r, m, p).expect("valid factor")
    });
    (
        prop::collection::vec(factor, 0..5),
        -6i64..6,
        (-9i64..=9).prop_filter("nonzero", |n| *n != 0),
        1i64..=6,
    )
        .prop_map(|(factors, shift, num, den)| {
            factors
                .into_iter()
                .fold(ProductSpec::one(), ProductSpec::with_factor)
                .q_shift(shift)
                .scale(&rat(num, den))
        })
}

pub fn appell_spec() -> impl Strategy<Value = AppellSpec> {
    (
        1i64..30,
        -40i64..40,
        -10i64..60,
        prop::bool::ANY,
        (-20i64..=20).prop_filter("nonzero", |k| *k != 0),
        -20i64..40,
        1u32..=2,
        (prop::bool::ANY, prop::bool::ANY, prop::bool::ANY),
    )
        .prop_map(|(a, b, c, neg, k, j, d, (alt, excl, halved))| {
            let sigma = if neg { -1 } else { 1 };
            let mut spec = AppellSpec::new(a, b, c, sigma, k, j, d);
            if halved && (a + b) % 2 == 0 {
                spec = spec.over(2);
            }
            if alt {
                spec = spec.alternating();
            }
            if excl {
                spec = spec.excluding_zero();
            }
            spec
        })
}

fn agree(label: &str, a: &LaurentSeries, b: &LaurentSeries) -> Check {
    match a.first_mismatch(b) {
        None => Ok(()),
        Some((e, x, y)) => Err(TestCaseError::fail(format!(
            "{label}: q^{e} has {x} vs {y}"
        ))),
    }
}

pub fn ring_axioms(a: &LaurentSeries, b: &LaurentSeries, c: &LaurentSeries) -> Check {
    agree("a+b = b+a", &(a + b), &(b + a))?;
    agree("(a+b)+c = a+(b+c)", &(&(a + b) + c), &(a + &(b + c)))?;
    agree("ab = ba", &(a * b), &(b * a))?;
    agree("(ab)c = a(bc)", &(&(a * b) * c), &(a * &(b * c)))?;
    agree("a(b+c) = ab+ac", &(a * &(b + c)), &(&(a * b) + &(a * c)))?;
    agree("a·1 = a", &(a * &LaurentSeries::one()), a)?;
    agree("a+0 = a", &(a + &LaurentSeries::zero(EXACT)), a)?;
    prop_assert!((a + &(-a)).terms().next().is_none(), "a + (-a) has terms");
    Ok(())
}

pub fn inverse_relations(f: &LaurentSeries) -> Check {
    let inv = f.invert().map_err(|e| TestCaseError::fail(e.to_string()))?;
    let prod = f * &inv;
    prop_assert!(
        prod.order() > 0,
        "f·f⁻¹ carries no information (order {})",
        prod.order()
    );
    agree("f·f⁻¹ = 1", &prod, &LaurentSeries::one())?;
    let back = inv
        .invert()
        .map_err(|e| TestCaseError::fail(e.to_string()))?;
    agree("(f⁻¹)⁻¹ = f", &back, f)?;
    prop_assert_eq!(back.order(), f.order());
    Ok(())
}

pub fn substitute_dissect_inverse(f: &LaurentSeries, m: i64) -> Check {
    let g = f.substitute_power(m);
    prop_assert_eq!(&g.dissect(m, 0), f);
    for i in 1..m {
        let other = g.dissect(m, i);
        prop_assert!(
            other.terms().next().is_none(),
            "residue {} of f(q^{}) is nonzero",
            i,
            m
        );
    }
    Ok(())
}

pub fn dissection_reconstruction(f: &LaurentSeries, m: i64) -> Check {
    let mut acc = LaurentSeries::zero(EXACT);
    for i in 0..m {
        let piece = f.dissect(m, i).substitute_power(m).shift(i);
        acc = &acc + &piece;
    }
    prop_assert!(
        acc.order() >= f.order(),
        "reassembled order {} < {}",
        acc.order(),
        f.order()
    );
    agree("Σ q^i f_i(q^m) = f", &acc, f)
}

pub fn dissect_pulls_out_powers(f: &LaurentSeries, g: &LaurentSeries, m: i64, i: i64) -> Check {
    let lhs = (f * &g.substitute_power(m)).dissect(m, i);
    let rhs = &f.dissect(m, i) * g;
    agree("dissect(f·g(q^m)) = dissect(f)·g", &lhs, &rhs)
}

pub fn product_round_trip(spec: &ProductSpec) -> Check {
    let text = spec.to_string();
    let parsed: ProductSpec = text
        .parse()
        .map_err(|e| TestCaseError::fail(format!("`{text}`: {e}")))?;
    prop_assert_eq!(parsed.to_string(), text.clone());
    let order = 30;
    let a = spec
        .eval(order)
        .map_err(|e| TestCaseError::fail(e.to_string()))?;
    let b = parsed
        .eval(order)
        .map_err(|e| TestCaseError::fail(e.to_string()))?;
    prop_assert_eq!(a, b, "`{}`", text);
    Ok(())
}

pub fn appell_round_trip(spec: &AppellSpec) -> Check {
    let text = spec.to_string();
    let parsed: AppellSpec = text
        .parse()
        .map_err(|e| TestCaseError::fail(format!("`{text}`: {e}")))?;
    prop_assert_eq!(&parsed, spec, "`{}`", text);
    Ok(())
}

pub fn theta_sums_match_products(order: i64) -> Check {
    prop_assert_eq!(phi(order), phi_prod(order), "φ at order {}", order);
    prop_assert_eq!(psi(order), psi_prod(order), "ψ at order {}", order);
    Ok(())
}

/// `4/(1-q^{8n})² = (2-q^{4n})/(1-q^{4n})² + (2+q^{4n})/(1+q^{4n})²`.
pub fn partial_fractions(n: i64, order: i64) -> Check {
    let poly = |t: &[(i64, i64)]| LaurentSeries::polynomial(t.iter().copied()).truncate(order);
    let sq_inv = |p: LaurentSeries| p.pow(-2).map_err(|e| TestCaseError::fail(e.to_string()));
    let e = 4 * n;
    let lhs = sq_inv(poly(&[(0, 1), (2 * e, -1)]))?.scale_int(4);
    let a = &poly(&[(0, 2), (e, -1)]) * &sq_inv(poly(&[(0, 1), (e, -1)]))?;
    let b = &poly(&[(0, 2), (e, 1)]) * &sq_inv(poly(&[(0, 1), (e, 1)]))?;
    agree("partial fractions", &lhs, &(&a + &b))
}
