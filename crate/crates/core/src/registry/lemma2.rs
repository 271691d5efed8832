use crate::error::Result;
use crate::lambert::{mw_diff_series, v12_lambert, LambertSpec};
use crate::products::{block_a, block_b, phi, phi_prod, psi, psi_prod};
use crate::series::{rat, LaurentSeries, Rational};

use super::{prod, sequence_series, Identity, Tag};
use crate::partitions;

const PAD: i64 = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Lemma21Variant {
    /// Exponents ≡ 0 (mod 4).
    FourN,
    /// Exponents ≡ 2 (mod 4).
    FourNPlus2,
}

impl Lemma21Variant {
    pub fn residue(self) -> i64 {
        match self {
            Lemma21Variant::FourN => 0,
            Lemma21Variant::FourNPlus2 => 2,
        }
    }
}

/// The blocks A_0, A_2, B_0..B_3, φ, ψ, ψ(q²) and 1/J_1 at one order.
pub(super) struct Blocks {
    pub(super) a0: LaurentSeries,
    pub(super) a2: LaurentSeries,
    pub(super) b: [LaurentSeries; 4],
    pub(super) phi2: LaurentSeries,
    pub(super) psi2: LaurentSeries,
    pub(super) psi_q2_sq: LaurentSeries,
    pub(super) inv_j1: LaurentSeries,
}

impl Blocks {
    pub(super) fn new(order: i64) -> Result<Self> {
        let ph = phi(order);
        let ps = psi(order);
        let ps_q2 = psi(order / 2 + 1).substitute_power(2);
        Ok(Self {
            a0: block_a(0, order)?,
            a2: block_a(2, order)?,
            b: [
                block_b(0, order)?,
                block_b(1, order)?,
                block_b(2, order)?,
                block_b(3, order)?,
            ],
            phi2: &ph * &ph,
            psi2: &ps * &ps,
            psi_q2_sq: &ps_q2 * &ps_q2,
            inv_j1: prod("1 / J[1]", order)?,
        })
    }

    pub(super) fn cross(&self) -> LaurentSeries {
        &(&self.a0 * &self.b[2]) + &(&self.a2 * &self.b[0])
    }
}

fn q(e: i64) -> LaurentSeries {
    LaurentSeries::q_pow(e)
}

fn quarter() -> Rational {
    rat(1, 4)
}

/// LHS: the 4-dissection component of the crank-moment generating function.
/// RHS: the block expression.
///
/// 4n:   (1/4J_1) A_0 B_0 (1 - φ²) + (q/J_1)((1/4) A_2 B_2 (1 - φ²) - A_2 B_1 ψ² + (A_0 B_2 + A_2 B_0) ψ(q²)²) - (q²/J_1) A_0 B_3 ψ²
/// 4n+2: (1/4J_1)(A_0 B_2 + A_2 B_0)(φ² - 1) + (1/J_1) A_0 (B_1 ψ² - B_0 ψ(q²)²) - (q/J_1) A_2 B_2 ψ(q²)² + (q²/J_1) A_2 B_3 ψ²
pub fn build_lemma21_sides(
    variant: Lemma21Variant,
    order: i64,
) -> Result<(LaurentSeries, LaurentSeries)> {
    Ok((lemma21_lhs(variant, order)?, lemma21_rhs(variant, order)?))
}

fn lemma21_lhs(variant: Lemma21Variant, order: i64) -> Result<LaurentSeries> {
    Ok(mw_diff_series(4 * order + 4)?.dissect(4, variant.residue()))
}

fn lemma21_rhs(variant: Lemma21Variant, order: i64) -> Result<LaurentSeries> {
    let k = Blocks::new(order + PAD)?;
    let one = LaurentSeries::one();
    Ok(match variant {
        Lemma21Variant::FourN => {
            let one_minus = &one - &k.phi2;
            let t0 = (&(&k.a0 * &k.b[0]) * &one_minus).scale(&quarter());
            let inner = &(&(&(&k.a2 * &k.b[2]) * &one_minus).scale(&quarter())
                - &(&(&k.a2 * &k.b[1]) * &k.psi2))
                + &(&k.cross() * &k.psi_q2_sq);
            let t2 = &(&k.a0 * &k.b[3]) * &k.psi2;
            &(&(&t0 + &(&q(1) * &inner)) - &(&q(2) * &t2)) * &k.inv_j1
        }
        Lemma21Variant::FourNPlus2 => {
            let t0 = (&k.cross() * &(&k.phi2 - &one)).scale(&quarter());
            let t1 = &k.a0 * &(&(&k.b[1] * &k.psi2) - &(&k.b[0] * &k.psi_q2_sq));
            let t2 = &(&k.a2 * &k.b[2]) * &k.psi_q2_sq;
            let t3 = &(&k.a2 * &k.b[3]) * &k.psi2;
            &(&(&(&t0 + &t1) - &(&q(1) * &t2)) + &(&q(2) * &t3)) * &k.inv_j1
        }
    })
}

fn phi_sq(order: i64) -> LaurentSeries {
    let p = phi(order);
    &p * &p
}

fn eta_124(order: i64) -> Result<LaurentSeries> {
    prod("J[1] * J[2] / J[4]", order)
}

pub(super) fn identities() -> Vec<Identity> {
    let lemma = |i: Identity| i.tag(Tag::Lemma2).order(300);
    vec![
        lemma(Identity::new(
            "PHI",
            "theta function φ: sum form against product form",
            "Σ_{n∈ℤ} q^{n²} = J_2^5/(J_1^2 J_4^2)",
            |n| Ok(phi(n)),
            |n| Ok(phi_prod(n)),
        ))
        .order(500),
        lemma(Identity::new(
            "PSI",
            "theta function ψ: sum form against product form",
            "Σ_{n≥0} q^{n(n+1)/2} = J_2^2/J_1",
            |n| Ok(psi(n)),
            |n| Ok(psi_prod(n)),
        ))
        .order(500),
        lemma(Identity::new(
            "V11",
            "two Lambert forms of the crank-moment difference",
            "(J_1 J_2/J_4) Σ_{n≥1} (q^{3n} - q^n)/(1 - q^{4n}) = -(J_1 J_2/J_4) Σ_{n≥1} q^n/(1 + q^{2n})",
            |n| {
                let one = Rational::from_integer(1.into());
                let a = LambertSpec::new(one.clone(), 0, 1, 0, 4, 1).with_steps(3, 4).from_index(1).eval(n)?;
                let b = LambertSpec::new(one, 0, 1, 0, 4, 1).with_steps(1, 4).from_index(1).eval(n)?;
                Ok(&eta_124(n)? * &(&a - &b))
            },
            |n| Ok(-(&eta_124(n)? * &v12_lambert(n)?)),
        )),
        lemma(Identity::new(
            "V12",
            "Lambert series for φ²",
            "Σ_{n≥1} q^n/(1 + q^{2n}) = (φ(q)² - 1)/4",
            v12_lambert,
            |n| Ok((&phi_sq(n) - &LaurentSeries::one()).scale(&quarter())),
        )),
        lemma(Identity::new(
            "V13",
            "crank-moment difference: Lambert form against product form",
            "-(J_1 J_2/J_4) Σ_{n≥1} q^n/(1 + q^{2n}) = (1/4)(J_1 J_2/J_4)(1 - φ(q)²)",
            |n| Ok(-(&eta_124(n)? * &v12_lambert(n)?)),
            mw_diff_series,
        )),
        Identity::new(
            "MW-check",
            "crank-moment generating function against enumeration (n ≤ 60)",
            "(1/4)(J_1 J_2/J_4)(1 - φ(q)²) = Σ (M_ω(1,4,n) - M_ω(3,4,n)) q^n",
            mw_diff_series,
            |n| {
                Ok(sequence_series(n, |k| {
                    partitions::mw(1, 4, k as u32) as i64 - partitions::mw(3, 4, k as u32) as i64
                }))
            },
        )
        .tag(Tag::Lemma2)
        .capped(61),
        lemma(Identity::new(
            "V14",
            "2-dissection of J_2 by A blocks",
            "J_2 = A_0(q^4) - q^2 A_2(q^4)",
            |n| prod("J[2]", n),
            |n| {
                let m = n / 4 + 2;
                let a0 = block_a(0, m)?.substitute_power(4);
                let a2 = block_a(2, m)?.substitute_power(4);
                Ok(&a0 - &(&q(2) * &a2))
            },
        )),
        lemma(Identity::new(
            "V15",
            "4-dissection of J_1 by B blocks",
            "J_1 = B_0(q^4) - q B_1(q^4) - q^2 B_2(q^4) + q^7 B_3(q^4)",
            |n| prod("J[1]", n),
            |n| {
                let m = n / 4 + 2;
                let b = |j| block_b(j, m).map(|s| s.substitute_power(4));
                Ok(&(&(&b(0)? - &(&q(1) * &b(1)?)) - &(&q(2) * &b(2)?)) + &(&q(7) * &b(3)?))
            },
        )),
        lemma(Identity::new(
            "V16a",
            "2-dissection of φ²",
            "φ(q)² = φ(q²)² + 4q ψ(q⁴)²",
            |n| Ok(phi_sq(n)),
            |n| {
                let p2 = phi(n / 2 + 1).substitute_power(2);
                let s4 = psi(n / 4 + 1).substitute_power(4);
                Ok(&(&p2 * &p2) + &(&q(1) * &(&s4 * &s4)).scale_int(4))
            },
        )),
        lemma(Identity::new(
            "V16b",
            "4-dissection of φ²",
            "φ(q)² = φ(q⁴)² + 4q ψ(q⁴)² + 4q² ψ(q⁸)²",
            |n| Ok(phi_sq(n)),
            |n| {
                let p4 = phi(n / 4 + 1).substitute_power(4);
                let s4 = psi(n / 4 + 1).substitute_power(4);
                let s8 = psi(n / 8 + 1).substitute_power(8);
                Ok(&(&(&p4 * &p4) + &(&q(1) * &(&s4 * &s4)).scale_int(4)) + &(&q(2) * &(&s8 * &s8)).scale_int(4))
            },
        )),
        lemma(Identity::new(
            "L1a",
            "M_ω(1,4,4n) - M_ω(3,4,4n) generating function",
            "Σ (M_ω(1,4,4n) - M_ω(3,4,4n)) q^n = (1/4J_1) A_0 B_0 (1-φ²) + (q/J_1)((1/4) A_2 B_2 (1-φ²) - A_2 B_1 ψ² + (A_0 B_2 + A_2 B_0) ψ(q²)²) - (q²/J_1) A_0 B_3 ψ²",
            move |n| lemma21_lhs(Lemma21Variant::FourN, n),
            move |n| lemma21_rhs(Lemma21Variant::FourN, n),
        )),
        lemma(Identity::new(
            "L1b",
            "M_ω(1,4,4n+2) - M_ω(3,4,4n+2) generating function",
            "Σ (M_ω(1,4,4n+2) - M_ω(3,4,4n+2)) q^n = (1/4J_1)(A_0 B_2 + A_2 B_0)(φ²-1) + (1/J_1) A_0 (B_1 ψ² - B_0 ψ(q²)²) - (q/J_1) A_2 B_2 ψ(q²)² + (q²/J_1) A_2 B_3 ψ²",
            move |n| lemma21_lhs(Lemma21Variant::FourNPlus2, n),
            move |n| lemma21_rhs(Lemma21Variant::FourNPlus2, n),
        )),
    ]
}
