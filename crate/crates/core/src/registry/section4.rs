use crate::error::Result;
use crate::lambert::{mw_diff_series, nt_diff_series};
use crate::partitions;
use crate::series::{rat, LaurentSeries};

use super::lemma2::Blocks;
use super::section3::{r1, r2};
use super::{prod, sequence_series, Identity, Tag};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Section4Side {
    Rf1,
    Rf2,
}

fn q(e: i64) -> LaurentSeries {
    LaurentSeries::q_pow(e)
}

/// f_1..f_4 at one order, indexed 1..=4.
fn f_functions(order: i64) -> Result<[LaurentSeries; 4]> {
    let k = Blocks::new(order)?;
    let quarter = rat(1, 4);
    let a0b0 = &k.a0 * &k.b[0];
    let a2b2 = &k.a2 * &k.b[2];
    let cross = k.cross();
    let f1 = (&a0b0 + &(&q(1) * &a2b2)).scale(&quarter);
    let f2 = {
        let t0 = (&a0b0 * &k.phi2).scale(&quarter);
        let inner = &(&(&a2b2 * &k.phi2).scale(&quarter) + &(&(&k.a2 * &k.b[1]) * &k.psi2))
            - &(&cross * &k.psi_q2_sq);
        let t2 = &(&k.a0 * &k.b[3]) * &k.psi2;
        -(&(&(&t0 + &(&q(1) * &inner)) + &(&q(2) * &t2)))
    };
    let f3 = -cross.scale(&quarter);
    let f4 = {
        let t0 = (&cross * &k.phi2).scale(&quarter);
        let t1 = &k.a0 * &(&(&k.b[1] * &k.psi2) - &(&k.b[0] * &k.psi_q2_sq));
        let t2 = &a2b2 * &k.psi_q2_sq;
        let t3 = &(&k.a2 * &k.b[3]) * &k.psi2;
        &(&(&t0 + &t1) - &(&q(1) * &t2)) + &(&q(2) * &t3)
    };
    Ok([f1, f2, f3, f4].map(|f| &f * &k.inv_j1))
}

fn section4_rhs(which: Section4Side, order: i64) -> Result<LaurentSeries> {
    let f = f_functions(order / 2 + 8)?;
    let (even, odd) = match which {
        Section4Side::Rf1 => (&f[0], &f[2]),
        Section4Side::Rf2 => (&f[1], &f[3]),
    };
    Ok(&even.substitute_power(2) - &(&q(1) * &odd.substitute_power(2)))
}

fn section4_lhs(which: Section4Side, order: i64) -> Result<LaurentSeries> {
    match which {
        Section4Side::Rf1 => r1(order),
        Section4Side::Rf2 => r2(order),
    }
}

/// `(R_1, f_1(q²) - q f_3(q²))` or `(R_2, f_2(q²) - q f_4(q²))`.
pub fn build_section4_sides(
    which: Section4Side,
    order: i64,
) -> Result<(LaurentSeries, LaurentSeries)> {
    Ok((section4_lhs(which, order)?, section4_rhs(which, order)?))
}

/// Signs of the six terms of the 64-lattice identity, as stated.
pub const RF11_SIGNS: [i8; 6] = [1, -1, -1, -1, -1, -1];

const RF11_TERMS: [&str; 6] = [
    "J[6,16]^2 * J[8,16]^8 / J[1,16]^2 / J[3,16]^2 / J[4,16]^2 / J[5,16]^2 / J[7,16]^2 * q^-6 / 4",
    "J[2,16]^2 * J[8,16]^6 / J[1,16]^4 / J[7,16]^4 * q^-4 / 2",
    "J[3,64]^3 * J[5,64]^3 * J[8,64]^12 * J[11,64]^3 * J[12,64] * J[13,64]^3 * J[19,64]^3 * J[20,64]^2 \
     * J[21,64]^3 * J[24,64]^12 * J[27,64]^3 * J[29,64]^3 / J[10,64] / J[16,64] / J[22,64] / J[64]^48 * q^-6 / 4",
    "J[3,64]^3 * J[4,64] * J[5,64]^3 * J[8,64]^12 * J[10,64] * J[11,64]^3 * J[12,64] * J[13,64]^3 * J[19,64]^3 \
     * J[21,64]^3 * J[22,64] * J[24,64]^12 * J[27,64]^3 * J[28,64] * J[29,64]^3 \
     / J[2,64] / J[14,64] / J[16,64] / J[18,64] / J[30,64] / J[64]^48 * q^-4 / 4",
    "J[3,64]^3 * J[5,64]^3 * J[8,64]^12 * J[11,64]^3 * J[12,64]^2 * J[13,64]^3 * J[19,64]^3 * J[20,64] \
     * J[21,64]^3 * J[24,64]^12 * J[27,64]^3 * J[29,64]^3 / J[6,64] / J[16,64] / J[26,64] / J[64]^48 * q^-5 / 4",
    "J[3,64]^3 * J[4,64] * J[5,64]^3 * J[6,64] * J[8,64]^12 * J[11,64]^3 * J[13,64]^3 * J[19,64]^3 * J[20,64] \
     * J[21,64]^3 * J[24,64]^12 * J[26,64] * J[27,64]^3 * J[28,64] * J[29,64]^3 \
     / J[2,64] / J[14,64] / J[16,64] / J[18,64] / J[30,64] / J[64]^48 * q^-5 / 4",
];

/// The six-term J_{r,16}/J_{r,64} quotient sum with the given term signs.
/// With [`RF11_SIGNS`] it vanishes identically.
pub fn build_rf11(signs: [i8; 6], order: i64) -> Result<LaurentSeries> {
    let mut acc = LaurentSeries::zero(order + 8);
    for (text, sign) in RF11_TERMS.iter().zip(signs) {
        acc = &acc + &prod(text, order + 8)?.scale_int(sign as i64);
    }
    Ok(acc)
}

fn nt_diff_at(b: i64, k: i64, n: i64) -> i64 {
    partitions::nt(b, k, n as u32) as i64 - partitions::nt(k - b, k, n as u32) as i64
}

fn mw_diff_at(n: i64) -> i64 {
    partitions::mw(1, 4, n as u32) as i64 - partitions::mw(3, 4, n as u32) as i64
}

pub(super) fn identities() -> Vec<Identity> {
    let sec = |i: Identity| i.tag(Tag::Section4);
    vec![
        sec(Identity::new(
            "RF1",
            "R_1 through the 2-dissection pieces f_1, f_3",
            "R_1(q) = f_1(q^2) - q f_3(q^2)",
            |n| section4_lhs(Section4Side::Rf1, n),
            |n| section4_rhs(Section4Side::Rf1, n),
        ))
        .order(300),
        sec(Identity::new(
            "RF2",
            "R_2 through the 2-dissection pieces f_2, f_4",
            "R_2(q) = f_2(q^2) - q f_4(q^2)",
            |n| section4_lhs(Section4Side::Rf2, n),
            |n| section4_rhs(Section4Side::Rf2, n),
        ))
        .order(300),
        sec(Identity::new(
            "RF11",
            "six-term theta quotient identity on the q^64 lattice",
            "J_{6,16}^2 J_{8,16}^8/(4q^6 J_{1,16}^2 J_{3,16}^2 J_{4,16}^2 J_{5,16}^2 J_{7,16}^2) - J_{2,16}^2 J_{8,16}^6/(2q^4 J_{1,16}^4 J_{7,16}^4) - (four J_{r,64} quotients) = 0",
            |n| build_rf11(RF11_SIGNS, n),
            |n| Ok(LaurentSeries::zero(n)),
        ))
        .order(800),
        sec(Identity::new(
            "THMAIN",
            "NT(2,8,2n) - NT(6,8,2n) = (-1)^n (M_ω(1,4,2n) - M_ω(3,4,2n)), as series",
            "Σ (NT(2,8,2n)-NT(6,8,2n)) q^n = Σ (-1)^n (M_ω(1,4,2n)-M_ω(3,4,2n)) q^n",
            |n| Ok(nt_diff_series(2, 8, 2 * n + 2)?.dissect(2, 0)),
            |n| Ok(mw_diff_series(2 * n + 2)?.dissect(2, 0).alternate()),
        ))
        .order(200),
        sec(Identity::new(
            "THMAIN-COMB",
            "NT(2,8,2n) - NT(6,8,2n) = (-1)^n (M_ω(1,4,2n) - M_ω(3,4,2n)) by enumeration, n ≤ 30",
            "NT(2,8,2n) - NT(6,8,2n) = (-1)^n (M_ω(1,4,2n) - M_ω(3,4,2n))",
            |n| Ok(sequence_series(n, |k| nt_diff_at(2, 8, 2 * k))),
            |n| Ok(sequence_series(n, |k| if k % 2 == 0 { 1 } else { -1 } * mw_diff_at(2 * k))),
        ))
        .capped(31),
        sec(Identity::new(
            "C8a",
            "NT(2,8,4n) - NT(6,8,4n) = M_ω(1,4,4n) - M_ω(3,4,4n) by enumeration, 4n ≤ 60",
            "NT(2,8,4n) - NT(6,8,4n) = M_ω(1,4,4n) - M_ω(3,4,4n)",
            |n| Ok(sequence_series(n, |k| nt_diff_at(2, 8, 4 * k))),
            |n| Ok(sequence_series(n, |k| mw_diff_at(4 * k))),
        ))
        .capped(16),
        sec(Identity::new(
            "C8b",
            "NT(6,8,4n+2) - NT(2,8,4n+2) = M_ω(1,4,4n+2) - M_ω(3,4,4n+2) by enumeration, 4n+2 ≤ 60",
            "NT(6,8,4n+2) - NT(2,8,4n+2) = M_ω(1,4,4n+2) - M_ω(3,4,4n+2)",
            |n| Ok(sequence_series(n, |k| nt_diff_at(6, 8, 4 * k + 2))),
            |n| Ok(sequence_series(n, |k| mw_diff_at(4 * k + 2))),
        ))
        .capped(15),
        sec(Identity::new(
            "C8a-series",
            "4n component of the rank-moment and crank-moment series agree",
            "Σ (NT(2,8,4n)-NT(6,8,4n)) q^n = Σ (M_ω(1,4,4n)-M_ω(3,4,4n)) q^n",
            |n| Ok(nt_diff_series(2, 8, 4 * n + 4)?.dissect(4, 0)),
            |n| Ok(mw_diff_series(4 * n + 4)?.dissect(4, 0)),
        ))
        .order(200),
        sec(Identity::new(
            "C8b-series",
            "4n+2 component of the rank-moment and crank-moment series agree up to sign",
            "Σ (NT(6,8,4n+2)-NT(2,8,4n+2)) q^n = Σ (M_ω(1,4,4n+2)-M_ω(3,4,4n+2)) q^n",
            |n| Ok(-nt_diff_series(2, 8, 4 * n + 4)?.dissect(4, 2)),
            |n| Ok(mw_diff_series(4 * n + 4)?.dissect(4, 2)),
        ))
        .order(200),
    ]
}
