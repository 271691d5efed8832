use qpv::lambert::{mw_diff_series, nt_diff_series, s2_function, s2_half, x_function, AppellSpec};
use qpv::partitions::{
    self, aggregates, beck7_as_printed, check_congruences, congruences, enumerate_partitions,
    for_each_partition, Partition,
};
use qpv::products::{self, block_a, block_b, phi, phi_prod, pochhammer, psi, ProductSpec};
use qpv::registry::{
    self, build_lemma21_sides, build_section4_sides, Identity, Lemma21Variant, Section4Side, Tag,
};
use qpv::series::{int, rat};
use qpv::{LaurentSeries, SeriesError, EXACT};

fn ints(terms: &[(i64, i64)], order: i64) -> LaurentSeries {
    LaurentSeries::from_ints(terms.iter().copied(), order)
}

fn poly(terms: &[(i64, i64)]) -> LaurentSeries {
    LaurentSeries::polynomial(terms.iter().copied())
}

// series arithmetic

#[test]
fn addition() {
    assert_eq!(
        &poly(&[(0, 1), (1, 1)]) + &poly(&[(0, 1), (1, -1)]),
        poly(&[(0, 2)])
    );
    let f = ints(&[(-1, 3), (2, 5)], 12);
    assert_eq!(&f + &LaurentSeries::zero(EXACT), f);
    assert_eq!(
        &poly(&[(-1, 1), (0, 1)]) + &poly(&[(-1, -1)]),
        LaurentSeries::one()
    );
}

#[test]
fn multiplication() {
    assert_eq!(
        &poly(&[(0, 1), (1, 1)]) * &poly(&[(0, 1), (1, -1)]),
        poly(&[(0, 1), (2, -1)])
    );
    let f = ints(&[(-2, 1), (3, -4)], 9);
    assert_eq!(&f * &LaurentSeries::one(), f);
    assert_eq!(
        &LaurentSeries::q_pow(-2) * &LaurentSeries::q_pow(3),
        LaurentSeries::q_pow(1)
    );
}

#[test]
fn inversion() {
    let geometric = ints(&[(0, 1), (1, -1)], 12).invert().unwrap();
    assert_eq!(
        geometric,
        ints(&(0..12).map(|e| (e, 1)).collect::<Vec<_>>(), 12)
    );
    assert_eq!(
        LaurentSeries::q_pow(1).invert().unwrap(),
        LaurentSeries::q_pow(-1)
    );
    let f = ints(&[(0, 2), (3, -1), (7, 5)], 30);
    assert!((&f * &f.invert().unwrap()).agrees_with(&LaurentSeries::one()));
}

#[test]
fn powers() {
    let p = ints(&[(0, 1), (1, -1)], 10).pow(-2).unwrap();
    assert_eq!(
        p,
        ints(&(0..10).map(|e| (e, e + 1)).collect::<Vec<_>>(), 10)
    );
    let f = ints(&[(1, 2), (4, -1)], 15);
    assert_eq!(f.pow(1).unwrap(), f);
    assert_eq!(
        LaurentSeries::q_pow(1).pow(3).unwrap(),
        LaurentSeries::q_pow(3)
    );
}

#[test]
fn substitution() {
    assert_eq!(
        poly(&[(0, 1), (1, 1)]).substitute_power(3),
        poly(&[(0, 1), (3, 1)])
    );
    let f = ints(&[(0, 1), (5, 2)], 11);
    assert_eq!(f.substitute_power(1), f);
    assert_eq!(
        poly(&[(-1, 1), (1, 1)]).substitute_power(2),
        poly(&[(-2, 1), (2, 1)])
    );
}

#[test]
fn dissection() {
    let f = poly(&[(0, 1), (1, 2), (2, 3), (3, 4)]);
    assert_eq!(f.dissect(2, 1), poly(&[(0, 2), (1, 4)]));
    let g = ints(&[(-3, 1), (2, 7), (9, -1)], 20);
    assert_eq!(g.substitute_power(5).dissect(5, 0), g);
    let phi2 = &phi(401) * &phi(401);
    let psi2 = &psi(100) * &psi(100);
    let piece = phi2.dissect(4, 1);
    assert_eq!(piece.order(), 100);
    assert_eq!(piece, psi2.scale_int(4));
}

#[test]
fn coefficients() {
    let j1 = products::j(1).eval(13).unwrap();
    assert_eq!(j1.coeff(5).unwrap(), int(1));
    assert_eq!(ints(&[(0, 1), (1, 1)], 10).coeff(7).unwrap(), int(0));
    assert!(matches!(
        ints(&[(0, 1)], 10).coeff(10),
        Err(SeriesError::BeyondOrder { .. })
    ));
}

// products

#[test]
fn pochhammer_symbols() {
    assert_eq!(
        pochhammer(1, 2, 8, 13).unwrap(),
        ints(&[(0, 1), (2, -1), (10, -1), (12, 1)], 13)
    );
    assert_eq!(
        pochhammer(-1, 2, 8, 11).unwrap(),
        ints(&[(0, 1), (2, 1), (10, 1)], 11)
    );
    assert_eq!(pochhammer(-1, 0, 8, 8).unwrap(), ints(&[(0, 2)], 8));
}

#[test]
fn theta_products() {
    let j1 = products::j(1).eval(13).unwrap();
    assert_eq!(
        j1,
        ints(&[(0, 1), (1, -1), (2, -1), (5, 1), (7, 1), (12, -1)], 13)
    );
    let br = products::bracket(-1, 0, 8).unwrap().eval(9).unwrap();
    assert_eq!(br, ints(&[(0, 2), (8, 4)], 9));
    let j216 = products::jrm(2, 16).unwrap().eval(3).unwrap();
    assert_eq!(j216, ints(&[(0, 1), (2, -1)], 3));
}

#[test]
fn theta_series() {
    assert_eq!(phi(10), ints(&[(0, 1), (1, 2), (4, 2), (9, 2)], 10));
    assert_eq!(psi(10), ints(&[(0, 1), (1, 1), (3, 1), (6, 1)], 10));
    assert!((&phi(200) - &phi_prod(200)).is_zero());
}

#[test]
fn building_blocks() {
    assert_eq!(block_a(0, 3).unwrap(), ints(&[(0, 1), (1, -1)], 3));
    assert_eq!(block_b(1, 3).unwrap(), ints(&[(0, 1), (1, -1)], 3));
}

#[test]
fn product_notation() {
    let spec: ProductSpec = "J[1]^2 / J[2] * q^-1 / 3".parse().unwrap();
    let direct = ProductSpec::one()
        .j(1, 2)
        .j(2, -1)
        .q_shift(-1)
        .scale(&rat(1, 3));
    assert_eq!(spec.eval(40).unwrap(), direct.eval(40).unwrap());
    assert!("J[0]".parse::<ProductSpec>().is_err());
    assert!("J[1] *".parse::<ProductSpec>().is_err());
}

// Lambert and Appell sums

#[test]
fn x_function_values() {
    assert!(x_function(-1, 8, 16, 200).unwrap().is_zero());
    assert_eq!(
        x_function(-1, 16, 16, 200).unwrap(),
        LaurentSeries::constant(rat(1, 2)).truncate(200)
    );
    let x = x_function(1, 4, 16, 20).unwrap();
    assert_eq!(x.low(), Some(4));
    assert_eq!(x.coeff(4).unwrap(), int(1));
    assert_eq!(x.coeff(8).unwrap(), int(1));
}

#[test]
fn x_function_antisymmetry() {
    assert_eq!(
        x_function(-1, 4, 16, 300).unwrap(),
        -x_function(-1, 12, 16, 300).unwrap()
    );
}

#[test]
fn s2_values() {
    let b = (-1, 6);
    assert_eq!(
        s2_function(b, b, 16, 200).unwrap(),
        s2_half(b, 16, 200).unwrap().scale_int(2)
    );
    let s = s2_function((1, 3), (-1, 5), 16, 1).unwrap();
    assert_eq!(s.coeff(0).unwrap(), int(0));
}

#[test]
fn s2_splitting() {
    let report = registry::verify("SS2", 400).unwrap();
    assert!(report.passed(), "{report}");
}

#[test]
fn appell_lowest_terms() {
    let s0 = AppellSpec::new(24, 6, 0, 1, 16, 0, 2)
        .excluding_zero()
        .eval(200)
        .unwrap();
    assert_eq!(s0.low(), Some(30));
    assert_eq!(s0.coeff(30).unwrap(), int(1));

    let spec = AppellSpec::new(24, 72, 53, -1, 16, 22, 2).alternating();
    let middle: ProductSpec = "q^53 / P[-q^22; 1000]^2".parse().unwrap();
    assert_eq!(
        middle.eval(120).unwrap(),
        ints(&[(53, 1), (75, -2), (97, 3), (119, -4)], 120)
    );
    // the n = -1 term, q^5/(1+q^6)^2, sits below it
    let full = spec.eval(120).unwrap();
    assert_eq!(full.low(), Some(5));
    assert_eq!(full.coeff(5).unwrap(), int(-1));
}

#[test]
fn pentagonal_shift_symmetry() {
    for sigma in [1, -1] {
        for a in 0..=7 {
            let lhs = AppellSpec::pentagonal(a, sigma, 4, 2).eval(300).unwrap();
            let rhs = AppellSpec::pentagonal(7 - a, sigma, 4, 2)
                .eval(300)
                .unwrap();
            assert_eq!(lhs, rhs, "a = {a}, sigma = {sigma}");
        }
    }
}

#[test]
fn generating_function_coefficients() {
    let nt = nt_diff_series(2, 8, 10).unwrap();
    assert_eq!(nt.coeff(3).unwrap(), int(-2));
    assert_eq!(nt.coeff(0).unwrap(), int(0));
    let mw = mw_diff_series(10).unwrap();
    assert_eq!(mw.coeff(1).unwrap(), int(-1));
    assert_eq!(mw.coeff(3).unwrap(), int(3));
}

// partitions

#[test]
fn enumeration() {
    assert_eq!(enumerate_partitions(4).len(), 5);
    let empty = enumerate_partitions(0);
    assert_eq!(empty.len(), 1);
    assert!(empty[0].parts().is_empty());
    let inv_j1 = products::j(1).eval(31).unwrap().invert().unwrap();
    for n in 0..31u32 {
        assert_eq!(
            int(enumerate_partitions(n).len() as i64),
            inv_j1.coeff(n as i64).unwrap(),
            "n = {n}"
        );
    }
}

#[test]
fn rank_and_crank() {
    let p = Partition::new(vec![2, 1, 1, 1]).unwrap();
    assert_eq!(p.stats().rank, -2);
    assert_eq!(p.stats().crank, -3);
    assert_eq!(Partition::new(vec![4, 2, 2]).unwrap().stats().crank, 4);
    assert_eq!(Partition::new(vec![1]).unwrap().stats().crank, -1);
}

#[test]
fn nt_and_mw_values() {
    assert_eq!((partitions::nt(2, 8, 3), partitions::nt(6, 8, 3)), (1, 3));
    assert_eq!((partitions::mw(1, 4, 3), partitions::mw(3, 4, 3)), (3, 0));
    for m in 1..10 {
        for r in 0..m {
            assert_eq!(partitions::nt(r, m, 0), 0);
        }
    }
}

#[test]
fn residue_sums_are_totals() {
    for n in 0..=40u32 {
        let (mut parts, mut ones) = (0u64, 0u64);
        for_each_partition(n, |p| {
            parts += p.len() as u64;
            ones += p.iter().filter(|&&x| x == 1).count() as u64;
        });
        for m in [4, 5, 7, 8] {
            assert_eq!(
                (0..m).map(|r| partitions::nt(r, m, n)).sum::<u64>(),
                parts,
                "nt, n = {n}, m = {m}"
            );
            assert_eq!(
                (0..m).map(|r| partitions::mw(r, m, n)).sum::<u64>(),
                ones,
                "mw, n = {n}, m = {m}"
            );
        }
    }
}

#[test]
fn congruence_examples() {
    assert_eq!(partitions::partition_count(4), 5);
    let beck5 = &congruences()[3];
    assert_eq!((beck5.value)(&aggregates(1)), 0);
    let report = check_congruences(51);
    assert!(report.all_passed(), "{report:?}");
    assert_eq!(beck7_as_printed(&aggregates(5)).rem_euclid(7), 2);
}

// registry

const REQUIRED: [&str; 34] = [
    "V12",
    "V13",
    "V14",
    "V15",
    "V16a",
    "V16b",
    "L1a",
    "L1b",
    "ZP1",
    "J1ID",
    "X4",
    "X22",
    "GENCHAN-spec",
    "CHAN0-spec",
    "CHAN1-spec",
    "SS2",
    "E41",
    "E42",
    "E49",
    "E410",
    "E411",
    "E422",
    "E499",
    "E41010",
    "GEN7121-check",
    "E11201930",
    "PLQ",
    "THN8",
    "RF1",
    "RF2",
    "RF11",
    "THMAIN",
    "C8a",
    "C8b",
];

#[test]
fn registry_contents() {
    let list = registry::list_identities();
    assert!(list.len() >= 34);
    for id in REQUIRED {
        assert!(list.iter().any(|m| m.id == id), "missing {id}");
    }
    assert!(list.iter().all(|m| !m.formula.trim().is_empty()));
    let mut ids: Vec<_> = list.iter().map(|m| m.id).collect();
    ids.sort_unstable();
    ids.dedup();
    assert_eq!(ids.len(), list.len());
}

#[test]
fn verify_examples() {
    assert!(registry::verify("V14", 300).unwrap().passed());
    assert!(registry::verify("THMAIN", 200).unwrap().passed());

    let base = registry::get("V14").unwrap().clone();
    let rhs = base.rhs.clone();
    let flipped = Identity {
        rhs: std::sync::Arc::new(move |n| Ok(-rhs(n)?)),
        ..base
    };
    let report = flipped.verify(300).unwrap();
    assert!(!report.passed());
    assert!(report.first_mismatch.is_some());
}

#[test]
fn verify_all_examples() {
    let all = registry::verify_all(Some(200), &[]);
    assert_eq!(all.len(), registry::registry().entries().len());
    for r in &all {
        assert!(r.passed(), "{r}");
    }
    let congruence = registry::verify_all(Some(200), &[Tag::Congruence]);
    assert!(!congruence.is_empty());
    for r in &congruence {
        assert!(registry::get(&r.id)
            .unwrap()
            .tags
            .contains(&Tag::Congruence));
        assert!(r.passed(), "{r}");
    }
}

#[test]
fn lemma_sides() {
    let (l, r) = build_lemma21_sides(Lemma21Variant::FourN, 200).unwrap();
    assert_eq!((l.coeff(0).unwrap(), r.coeff(0).unwrap()), (int(0), int(0)));
    assert!(l.agrees_with(&r));
    let (l, r) = build_lemma21_sides(Lemma21Variant::FourNPlus2, 200).unwrap();
    let expected = partitions::mw(1, 4, 2) as i64 - partitions::mw(3, 4, 2) as i64;
    assert_eq!(expected, 0);
    assert_eq!(l.coeff(0).unwrap(), int(expected));
    assert_eq!(r.coeff(0).unwrap(), int(expected));
    assert!(l.agrees_with(&r));
}

#[test]
fn reduction_sides() {
    let (l, r) = build_section4_sides(Section4Side::Rf1, 300).unwrap();
    assert_eq!(l.coeff(0).unwrap(), r.coeff(0).unwrap());
    assert!(l.order() >= 300 && r.order() >= 300);
    assert!(l.truncate(300).agrees_with(&r));
    let (l, r) = build_section4_sides(Section4Side::Rf2, 300).unwrap();
    assert!(l.order() >= 300 && r.order() >= 300);
    assert!(l.truncate(300).agrees_with(&r));
}
