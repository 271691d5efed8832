use crate::error::Result;
use crate::lambert::{
    nt_diff_series, s1_function, s2_function, x_function, AppellSpec, LambertSpec,
};
use crate::partitions;
use crate::series::{int, rat, LaurentSeries, Rational};

use super::{prod, sequence_series, Identity, Tag};

const PAD: i64 = 48;

/// Working order and shorthands for the q^16-lattice objects.
struct Ctx {
    n: i64,
}

impl Ctx {
    fn new(order: i64) -> Self {
        Self { n: order + PAD }
    }

    fn p(&self, text: &str) -> Result<LaurentSeries> {
        prod(text, self.n)
    }

    /// X(sign·q^e; q^16)
    fn x(&self, sign: i8, e: i64) -> Result<LaurentSeries> {
        x_function(sign, e, 16, self.n)
    }

    /// Σ_n (-1)^n q^{24n²+bn+c}/(1 - σq^{16n+j})²
    fn t(&self, b: i64, c: i64, sigma: i8, j: i64) -> Result<LaurentSeries> {
        AppellSpec::new(24, b, c, sigma, 16, j, 2)
            .alternating()
            .eval(self.n)
    }

    /// Σ_n (-1)^n q^{n(3n+1)/2 + an}/(1 - σq^{4n})², n = 0 omitted for σ = 1.
    fn pent(&self, a: i64, sigma: i8) -> Result<LaurentSeries> {
        let spec = AppellSpec::pentagonal(a, sigma, 4, 2);
        if sigma == 1 {
            spec.eval(self.n)
        } else {
            pent_with_zero(a, sigma, 4, 2).eval(self.n)
        }
    }

    fn s(&self, b: i64, c: i64, j: i64) -> Result<LaurentSeries> {
        let spec = AppellSpec::new(24, b, c, 1, 16, j, 2);
        if j == 0 { spec.excluding_zero() } else { spec }.eval(self.n)
    }

    fn s0(&self) -> Result<LaurentSeries> {
        self.s(6, 0, 0)
    }
    fn s1(&self) -> Result<LaurentSeries> {
        self.s(18, 3, 4)
    }
    fn s2(&self) -> Result<LaurentSeries> {
        self.s(30, 9, 8)
    }
    fn s3(&self) -> Result<LaurentSeries> {
        self.s(42, 18, 12)
    }

    /// X(q^12) + X(-q^22)
    fn xa(&self) -> Result<LaurentSeries> {
        s1_function((1, 12), (-1, 22), 16, self.n)
    }

    /// X(q^4) + X(-q^22)
    fn xb(&self) -> Result<LaurentSeries> {
        s1_function((1, 4), (-1, 22), 16, self.n)
    }

    /// X(-q^12) + X(q^22)
    fn xc(&self) -> Result<LaurentSeries> {
        s1_function((-1, 12), (1, 22), 16, self.n)
    }

    /// X(-q^12) - X(q^22)
    fn xd(&self) -> Result<LaurentSeries> {
        Ok(&self.x(-1, 12)? - &self.x(1, 22)?)
    }

    /// Σ_n (q^{16n+12}/(1 - q^{16n+12})² - q^{16n+22}/(1 + q^{16n+22})²)
    fn bil(&self) -> Result<LaurentSeries> {
        let a = AppellSpec::new(0, 16, 12, 1, 16, 12, 2).eval(self.n)?;
        let b = AppellSpec::new(0, 16, 22, -1, 16, 22, 2).eval(self.n)?;
        Ok(&a - &b)
    }

    /// Σ_{n≥1} q^{16n}/(1 - q^{16n})²
    fn lsum(&self) -> Result<LaurentSeries> {
        LambertSpec::new(Rational::from_integer(1.into()), 0, 1, 0, 16, 2)
            .from_index(1)
            .eval(self.n)
    }

    fn j1_over_j16(&self) -> Result<LaurentSeries> {
        self.p("J[1] / J[16]")
    }

    /// -Bil/2 - Lsum, shared by the four σ = 1 formulas.
    fn common(&self) -> Result<LaurentSeries> {
        Ok(&self.bil()?.scale(&rat(-1, 2)) - &self.lsum()?)
    }

    fn pre(&self) -> Result<LaurentSeries> {
        self.p("q^3 * BR[-q^2; 16] * J[16]^2 / BR[-q^6, q^8; 16]")
    }

    fn pa(&self) -> Result<LaurentSeries> {
        self.p("BR[q^4, -q^6; 16] * J[16]^2 / BR[-1, -q^4, q^6; 16]")
    }

    fn pb(&self) -> Result<LaurentSeries> {
        self.p("q^3 * BR[-q^2, q^4; 16] * J[16]^2 / BR[q^6, -q^8, -q^4; 16]")
    }
}

fn pent_with_zero(a: i64, sigma: i8, k: i64, d: u32) -> AppellSpec {
    AppellSpec::new(3, 1 + 2 * a, 0, sigma, k, 0, d)
        .over(2)
        .alternating()
}

fn k(x: i64) -> LaurentSeries {
    LaurentSeries::constant(int(x))
}

fn cr(n: i64, d: i64) -> LaurentSeries {
    LaurentSeries::constant(rat(n, d))
}

fn half(s: &LaurentSeries) -> LaurentSeries {
    s.scale(&rat(1, 2))
}

/// The σ = 1 family: ±(J_1/J_16) T - (X_a + u)(X_a + v)/2 + common - pre·(X_b + shift).
fn e4_plus(
    ctx: &Ctx,
    sign: i64,
    t: (i64, i64),
    quad: (i64, i64),
    xb_shift: i64,
) -> Result<LaurentSeries> {
    let tsum = ctx.t(t.0, t.1, -1, 22)?;
    let xa = ctx.xa()?;
    let quadratic = &(&xa + &k(quad.0)) * &(&xa + &k(quad.1));
    let first = (&ctx.j1_over_j16()? * &tsum).scale_int(sign);
    let second = -half(&quadratic);
    let last = &ctx.pre()? * &(&ctx.xb()? + &k(xb_shift));
    Ok(&(&(&first + &second) + &ctx.common()?) - &last)
}

fn rhs_e41(n: i64) -> Result<LaurentSeries> {
    e4_plus(&Ctx::new(n), -1, (72, 53), (0, -1), 0)
}

fn rhs_e42(n: i64) -> Result<LaurentSeries> {
    e4_plus(&Ctx::new(n), 1, (88, 75), (-2, -1), -1)
}

fn rhs_e49(n: i64) -> Result<LaurentSeries> {
    e4_plus(&Ctx::new(n), -1, (104, 97), (-3, -2), -2)
}

fn rhs_e410(n: i64) -> Result<LaurentSeries> {
    e4_plus(&Ctx::new(n), 1, (56, 31), (0, 1), 1)
}

fn rhs_e411(n: i64) -> Result<LaurentSeries> {
    let ctx = Ctx::new(n);
    let first = -(&ctx.j1_over_j16()? * &ctx.t(72, 53, 1, 22)?);
    let second = &ctx.pa()? * &(&ctx.xc()? - &cr(1, 2));
    let third = &ctx.pb()? * &ctx.xd()?;
    Ok(&(&first + &second) + &third)
}

fn rhs_e422(n: i64) -> Result<LaurentSeries> {
    let ctx = Ctx::new(n);
    let first = &ctx.j1_over_j16()? * &ctx.t(40, 15, 1, 10)?;
    let second = &ctx.pa()? * &(&cr(3, 2) - &ctx.xc()?);
    let third = &ctx.pb()? * &(&ctx.xd()? + &k(1));
    Ok(&(&first + &second) - &third)
}

fn rhs_e499(n: i64) -> Result<LaurentSeries> {
    let ctx = Ctx::new(n);
    let first = -(&ctx.j1_over_j16()? * &ctx.t(8, -15, 1, -10)?);
    let second = &ctx.pa()? * &(&ctx.xc()? - &cr(5, 2));
    let inner = &(&ctx.x(1, 22)? - &ctx.x(-1, 12)?) - &k(2);
    let third = &ctx.pb()? * &inner;
    Ok(&(&first + &second) - &third)
}

fn rhs_e41010(n: i64) -> Result<LaurentSeries> {
    let ctx = Ctx::new(n);
    let first = -(&ctx.j1_over_j16()? * &ctx.t(24, -13, 1, -6)?);
    let second = &ctx.pa()? * &(&ctx.xc()? + &cr(1, 2));
    let third = &ctx.pb()? * &(&ctx.xd()? - &k(1));
    Ok(&(&first - &second) - &third)
}

/// Σ with weights w over pentagonal sums, divided by 2J_1.
fn pent_combination(
    ctx: &Ctx,
    plus: &[(i64, i64)],
    minus: &[(i64, i64)],
    minus_with_zero: bool,
) -> Result<LaurentSeries> {
    let mut acc = LaurentSeries::zero(ctx.n);
    for &(a, w) in plus {
        acc = &acc + &ctx.pent(a, 1)?.scale_int(w);
    }
    for &(a, w) in minus {
        let s = if minus_with_zero {
            pent_with_zero(a, -1, 4, 2).eval(ctx.n)?
        } else {
            AppellSpec::pentagonal(a, -1, 4, 2).eval(ctx.n)?
        };
        acc = &acc + &s.scale_int(w);
    }
    Ok(&acc.scale(&rat(1, 2)) * &ctx.p("1 / J[1]")?)
}

fn rhs_e11201930(n: i64) -> Result<LaurentSeries> {
    pent_combination(
        &Ctx::new(n),
        &[(1, 9), (2, -9), (9, 3), (10, -3)],
        &[(1, 7), (2, -7), (9, -3), (10, 3)],
        true,
    )
}

fn rhs_e11201930_mid(n: i64) -> Result<LaurentSeries> {
    pent_combination(
        &Ctx::new(n),
        &[(1, 2), (2, -2), (5, -7), (6, 7), (9, 3), (10, -3)],
        &[(1, 2), (2, -2), (5, -5), (6, 5), (9, -3), (10, 3)],
        false,
    )
}

/// L(q) = 2(2X(-q^12)(u + v) + 2X(q^22)(u - v) - (2u - v))[q^4]J_16²/([q^6,-q^4]J_1),
/// u = [-q^6]/[-1], v = q^3[-q^2]/[-q^8], all brackets base q^16.
fn l_function(ctx: &Ctx) -> Result<LaurentSeries> {
    let u = ctx.p("BR[-q^6; 16] / BR[-1; 16]")?;
    let v = ctx.p("q^3 * BR[-q^2; 16] / BR[-q^8; 16]")?;
    let a = (&ctx.x(-1, 12)? * &(&u + &v)).scale_int(2);
    let b = (&ctx.x(1, 22)? * &(&u - &v)).scale_int(2);
    let inner = &(&a + &b) - &(&u.scale_int(2) - &v);
    let outer = ctx.p("2 * BR[q^4; 16] * J[16]^2 / BR[q^6, -q^4; 16] / J[1]")?;
    Ok(&inner * &outer)
}

fn rhs_plq(n: i64) -> Result<LaurentSeries> {
    let ctx = Ctx::new(n);
    let terms: [(i64, i64, i64, i64, i8, i64); 8] = [
        (-9, 2, 72, 53, -1, 22),
        (-9, 2, 88, 75, -1, 22),
        (-3, 2, 104, 97, -1, 22),
        (-3, 2, 56, 31, -1, 22),
        (-7, 2, 72, 53, 1, 22),
        (-7, 2, 40, 15, 1, 10),
        (3, 2, 8, -15, 1, -10),
        (-3, 2, 24, -13, 1, -6),
    ];
    let mut acc = LaurentSeries::zero(ctx.n);
    for (num, den, b, cc, sigma, j) in terms {
        acc = &acc + &ctx.t(b, cc, sigma, j)?.scale(&rat(num, den));
    }
    Ok(&(&acc * &ctx.p("1 / J[16]")?) + &l_function(&ctx)?)
}

/// R_1(q) + R_2(q), brackets base q^8.
pub(crate) fn r1(order: i64) -> Result<LaurentSeries> {
    let n = order + PAD;
    let p = |t: &str| prod(t, n);
    let first = &p("BR[-q^3; 8]^2 / BR[-1; 8]")? - &p("q^2 * BR[-q; 8]^2 / BR[-q^4; 8]")?;
    Ok(&first * &p("BR[q^2; 8] * J[8]^3 / 2 / BR[-q^2, q^3; 8] / J[1]^2")?)
}

pub(crate) fn r2(order: i64) -> Result<LaurentSeries> {
    let n = order + PAD;
    let p = |t: &str| prod(t, n);
    let parts = [
        "BR[q^2, -q^3, -q^3; 8] / 2 / BR[-1, q, q, q, q^3; 8]",
        "-2 * BR[-q^3, -q^3, q^4; 8] / BR[-1, -1, -q^2, -q^2, -q^4; 8]",
        "-3 * q * BR[q^2, -q^3, -q^3; 8] / 2 / BR[-1, q, q^3, q^3, q^3; 8]",
        "-2 * q^2 * BR[-q, -q, q^4; 8] / BR[-1, -q^2, -q^2, -q^4, -q^4; 8]",
        "-1 * q^2 * BR[-q, -q, q^2; 8] / 2 / BR[q, q, q, q^3, -q^4; 8]",
        "3 * q^3 * BR[-q, -q, q^2; 8] / 2 / BR[q, q^3, q^3, q^3, -q^4; 8]",
    ];
    let mut acc = LaurentSeries::zero(n);
    for t in parts {
        acc = &acc + &p(t)?;
    }
    Ok(&acc * &p("BR[q^2; 8]^3 * J[8]^5 / BR[-q^2, q^3; 8] / J[1]^2")?)
}

fn r1_plus_r2(order: i64) -> Result<LaurentSeries> {
    Ok(&r1(order)? + &r2(order)?)
}

/// Σ_n (NT(b,k,n) - NT(k-b,k,n)) q^n by enumeration.
pub(crate) fn nt_diff_brute(b: i64, k: i64, order: i64) -> LaurentSeries {
    sequence_series(order, |n| {
        partitions::nt(b, k, n as u32) as i64 - partitions::nt(k - b, k, n as u32) as i64
    })
}

fn gen7121(id: &'static str, formula: &'static str, b: i64, k: i64) -> Identity {
    Identity::new(
        id,
        "rank-moment generating function against enumeration (n ≤ 60)",
        formula,
        move |n| nt_diff_series(b, k, n),
        move |n| Ok(nt_diff_brute(b, k, n)),
    )
    .tag(Tag::Section3)
    .capped(61)
}

pub(super) fn identities() -> Vec<Identity> {
    let sec = |i: Identity| i.tag(Tag::Section3).order(400);
    let x_id = |id,
                description,
                formula,
                lhs: fn(&Ctx) -> Result<LaurentSeries>,
                rhs: fn(&Ctx) -> Result<LaurentSeries>| {
        sec(Identity::new(
            id,
            description,
            formula,
            move |n| lhs(&Ctx::new(n)),
            move |n| rhs(&Ctx::new(n)),
        ))
    };
    let mut out = vec![
        x_id(
            "J1ID",
            "J_1 through q^16 brackets",
            "q[-q^2;q^16] - [-q^6;q^16] = -[q^2,q^4,q^4,q^6,q^8;q^16] J_1 J_16 / J_2^2",
            |c| Ok(&c.p("q * BR[-q^2; 16]")? - &c.p("BR[-q^6; 16]")?),
            |c| Ok(-c.p("BR[q^2, q^4, q^4, q^6, q^8; 16] * J[1] * J[16] / J[2]^2")?),
        ),
        x_id(
            "ZP1",
            "1/J_1 through q^16 brackets",
            "(J_16/J_2^2)([-q^6;q^16] + q[-q^2;q^16]) = 1/J_1",
            |c| Ok(&c.p("J[16] / J[2]^2")? * &(&c.p("BR[-q^6; 16]")? + &c.p("q * BR[-q^2; 16]")?)),
            |c| c.p("1 / J[1]"),
        ),
        x_id(
            "ZP2",
            "difference of squared brackets",
            "[-q^6;q^16]^2 - q^2[-q^2;q^16]^2 = [q^2,q^4,q^4,q^6,q^8;q^16]",
            |c| Ok(&c.p("BR[-q^6; 16]^2")? - &c.p("q^2 * BR[-q^2; 16]^2")?),
            |c| c.p("BR[q^2, q^4, q^4, q^6, q^8; 16]"),
        ),
        x_id(
            "XANTI",
            "reflection of X at -q^4",
            "X(-q^4;q^16) = -X(-q^12;q^16)",
            |c| c.x(-1, 4),
            |c| Ok(-c.x(-1, 12)?),
        ),
        x_id(
            "X4",
            "X(-q^12;q^16) as a product",
            "X(-q^12;q^16) = 1/4 - [q^4,q^4,q^8;q^16] J_16^2 / (2[-q^4;q^16]^2 [-1,-q^8;q^16])",
            |c| c.x(-1, 12),
            |c| Ok(&cr(1, 4) - &c.p("BR[q^4, q^4, q^8; 16] * J[16]^2 / 2 / BR[-q^4; 16]^2 / BR[-1, -q^8; 16]")?),
        ),
        x_id(
            "GENCHAN-spec",
            "the general X identity at b = -q^4, base q^16",
            "1/2 + 2X(-q^4;q^16) = [q^4,q^4,q^8;q^16] J_16^2 / ([-q^4;q^16]^2 [-1,-q^8;q^16])",
            |c| Ok(&cr(1, 2) + &c.x(-1, 4)?.scale_int(2)),
            |c| c.p("BR[q^4, q^4, q^8; 16] * J[16]^2 / BR[-q^4; 16]^2 / BR[-1, -q^8; 16]"),
        ),
        x_id(
            "X22",
            "X(q^22;q^16) as products",
            "X(q^22;q^16) = 7/8 - 3q^2[q^4]^3 J_16^2/(8[q^6]^3[q^2]) + [q^4]^3 J_16^2/(8[q^2]^3[q^6])",
            |c| c.x(1, 22),
            |c| {
                let a = c.p("3 * q^2 * BR[q^4; 16]^3 * J[16]^2 / 8 / BR[q^6; 16]^3 / BR[q^2; 16]")?;
                let b = c.p("BR[q^4; 16]^3 * J[16]^2 / 8 / BR[q^2; 16]^3 / BR[q^6; 16]")?;
                Ok(&(&cr(7, 8) - &a) + &b)
            },
        ),
        x_id(
            "X22A",
            "first step towards X(q^22;q^16)",
            "1 - 3X(q^22;q^16) - X(q^-18;q^16) = [q^-12]^3 J_16^2/([q^-6]^3 [q^-18])",
            |c| Ok(&(&k(1) - &c.x(1, 22)?.scale_int(3)) - &c.x(1, -18)?),
            |c| c.p("BR[q^-12; 16]^3 * J[16]^2 / BR[q^-6; 16]^3 / BR[q^-18; 16]"),
        ),
        x_id(
            "X22B",
            "second step towards X(q^22;q^16)",
            "4 + 3X(q^-18;q^16) + X(q^22;q^16) = [q^-36]^3 J_16^2/([q^-18]^3 [q^-54])",
            |c| Ok(&(&k(4) + &c.x(1, -18)?.scale_int(3)) + &c.x(1, 22)?),
            |c| c.p("BR[q^-36; 16]^3 * J[16]^2 / BR[q^-18; 16]^3 / BR[q^-54; 16]"),
        ),
        x_id(
            "S012",
            "splitting the pentagonal sum by n mod 4",
            "Σ_{n≠0} (-1)^n q^{n(3n+1)/2+n}/(1-q^{4n})^2 = S_0 - S_1 + S_2 - S_3 with S_0 = Σ_{n≠0} q^{24n^2+6n}/(1-q^{16n})^2, S_1 = Σ q^{24n^2+18n+3}/(1-q^{16n+4})^2, S_2 = Σ q^{24n^2+30n+9}/(1-q^{16n+8})^2, S_3 = Σ q^{24n^2+42n+18}/(1-q^{16n+12})^2",
            |c| c.pent(1, 1),
            |c| Ok(&(&(&c.s0()? - &c.s1()?) + &c.s2()?) - &c.s3()?),
        ),
        x_id(
            "CHAN0-spec",
            "S_1 - S_2 through X(q^4) + X(-q^22) and a shifted Appell sum",
            "S_1 - S_2 = q^3[-q^2]J_16^2/[-q^6,q^8] (X(q^4)+X(-q^22)) + [q^4]/[-q^2] Σ (-1)^n q^{24n^2+72n+53}/(1+q^{16n+22})^2",
            |c| Ok(&c.s1()? - &c.s2()?),
            |c| {
                let a = &c.pre()? * &c.xb()?;
                let b = &c.p("BR[q^4; 16] / BR[-q^2; 16]")? * &c.t(72, 53, -1, 22)?;
                Ok(&a + &b)
            },
        ),
        x_id(
            "SS2",
            "S_2(q^12, -q^22; q^16) reduced to S_1 and a bilateral sum",
            "S_2(q^12,-q^22;q^16) = X(q^12)+X(-q^22) + Σ_n (q^{16n+12}/(1-q^{16n+12})^2 - q^{16n+22}/(1+q^{16n+22})^2)",
            |c| s2_function((1, 12), (-1, 22), 16, c.n),
            |c| Ok(&c.xa()? + &c.bil()?),
        ),
        x_id(
            "S03",
            "S_0 - S_3 through S_1 and S_2",
            "S_0 - S_3 = (S_1(2 - S_1) - S_2)/2 - Σ_{n≥1} q^{16n}/(1-q^{16n})^2 + [q^4]/[-q^6] Σ (-1)^n q^{24n^2+72n+54}/(1+q^{16n+22})^2",
            |c| Ok(&c.s0()? - &c.s3()?),
            |c| {
                let s1 = c.xa()?;
                let s2 = s2_function((1, 12), (-1, 22), 16, c.n)?;
                let quad = half(&(&(&s1 * &(&k(2) - &s1)) - &s2));
                let t = &c.p("BR[q^4; 16] / BR[-q^6; 16]")? * &c.t(72, 54, -1, 22)?;
                Ok(&(&quad - &c.lsum()?) + &t)
            },
        ),
        x_id(
            "CHAN1-spec",
            "S_0 - S_3 in closed form",
            "S_0 - S_3 = [q^4]/[-q^6] Σ (-1)^n q^{24n^2+72n+54}/(1+q^{16n+22})^2 - Σ_{n≥1} q^{16n}/(1-q^{16n})^2 + S_1(1-S_1)/2 - Bil/2",
            |c| Ok(&c.s0()? - &c.s3()?),
            |c| {
                let xa = c.xa()?;
                let t = &c.p("BR[q^4; 16] / BR[-q^6; 16]")? * &c.t(72, 54, -1, 22)?;
                let quad = half(&(&xa * &(&k(1) - &xa)));
                Ok(&(&(&t - &c.lsum()?) + &quad) - &half(&c.bil()?))
            },
        ),
    ];
    let e4 = |id, formula, a: i64, sigma: i8, rhs: fn(i64) -> Result<LaurentSeries>| {
        sec(Identity::new(
            id,
            "pentagonal Appell sum with denominator (1 ∓ q^{4n})^2",
            formula,
            move |n| Ctx::new(n).pent(a, sigma),
            rhs,
        ))
    };
    out.extend([
        e4("E41", "Σ_{n≠0} (-1)^n q^{n(3n+1)/2+n}/(1-q^{4n})^2 = -(J_1/J_16) Σ (-1)^n q^{24n^2+72n+53}/(1+q^{16n+22})^2 + S_1(1-S_1)/2 - Bil/2 - Lsum - pre (X(q^4)+X(-q^22))", 1, 1, rhs_e41),
        e4("E42", "Σ_{n≠0} (-1)^n q^{n(3n+1)/2+2n}/(1-q^{4n})^2 = (J_1/J_16) Σ (-1)^n q^{24n^2+88n+75}/(1+q^{16n+22})^2 - (S_1-2)(S_1-1)/2 - Bil/2 - Lsum - pre (X(q^4)+X(-q^22)-1)", 2, 1, rhs_e42),
        e4("E49", "Σ_{n≠0} (-1)^n q^{n(3n+1)/2+9n}/(1-q^{4n})^2 = -(J_1/J_16) Σ (-1)^n q^{24n^2+104n+97}/(1+q^{16n+22})^2 - (S_1-3)(S_1-2)/2 - Bil/2 - Lsum - pre (X(q^4)+X(-q^22)-2)", 9, 1, rhs_e49),
        e4("E410", "Σ_{n≠0} (-1)^n q^{n(3n+1)/2+10n}/(1-q^{4n})^2 = (J_1/J_16) Σ (-1)^n q^{24n^2+56n+31}/(1+q^{16n+22})^2 - S_1(S_1+1)/2 - Bil/2 - Lsum - pre (X(q^4)+X(-q^22)+1)", 10, 1, rhs_e410),
        e4("E411", "Σ_n (-1)^n q^{n(3n+1)/2+n}/(1+q^{4n})^2 = -(J_1/J_16) Σ (-1)^n q^{24n^2+72n+53}/(1-q^{16n+22})^2 + P_A (X(-q^12)+X(q^22) - 1/2) + P_B (X(-q^12)-X(q^22))", 1, -1, rhs_e411),
        e4("E422", "Σ_n (-1)^n q^{n(3n+1)/2+2n}/(1+q^{4n})^2 = (J_1/J_16) Σ (-1)^n q^{24n^2+40n+15}/(1-q^{16n+10})^2 + P_A (3/2 - X(-q^12)-X(q^22)) - P_B (X(-q^12)-X(q^22)+1)", 2, -1, rhs_e422),
        e4("E499", "Σ_n (-1)^n q^{n(3n+1)/2+9n}/(1+q^{4n})^2 = -(J_1/J_16) Σ (-1)^n q^{24n^2+8n-15}/(1-q^{16n-10})^2 + P_A (X(-q^12)+X(q^22) - 5/2) - P_B (X(q^22)-X(-q^12)-2)", 9, -1, rhs_e499),
        e4("E41010", "Σ_n (-1)^n q^{n(3n+1)/2+10n}/(1+q^{4n})^2 = -(J_1/J_16) Σ (-1)^n q^{24n^2+24n-13}/(1-q^{16n-6})^2 - P_A (X(-q^12)+X(q^22) + 1/2) - P_B (X(-q^12)-X(q^22)-1)", 10, -1, rhs_e41010),
    ]);
    out.extend([
        gen7121("GEN7121-check", "Σ (NT(2,8,n) - NT(6,8,n)) q^n from bilateral sums = enumeration", 2, 8),
        gen7121("GEN7121-b1k5", "Σ (NT(1,5,n) - NT(4,5,n)) q^n from bilateral sums = enumeration", 1, 5),
        gen7121("GEN7121-b3k7", "Σ (NT(3,7,n) - NT(4,7,n)) q^n from bilateral sums = enumeration", 3, 7),
        gen7121("GEN7121-b1k4", "Σ (NT(1,4,n) - NT(3,4,n)) q^n from bilateral sums = enumeration", 1, 4),
        sec(Identity::new(
            "E11201930",
            "NT(2,8,n) - NT(6,8,n) through eight pentagonal sums",
            "Σ (NT(2,8,n)-NT(6,8,n)) q^n = (1/2J_1)(Σ_{n≠0} (-1)^n q^{n(3n+1)/2}(9q^n-9q^{2n}+3q^{9n}-3q^{10n})/(1-q^{4n})^2 + Σ_n (-1)^n q^{n(3n+1)/2}(7q^n-7q^{2n}-3q^{9n}+3q^{10n})/(1+q^{4n})^2)",
            |n| nt_diff_series(2, 8, n + PAD),
            rhs_e11201930,
        )),
        sec(Identity::new(
            "E11201930-mid",
            "NT(2,8,n) - NT(6,8,n) through twelve pentagonal sums",
            "Σ (NT(2,8,n)-NT(6,8,n)) q^n = (1/2J_1) Σ_{n≠0} (-1)^n q^{n(3n+1)/2}((2q^n-2q^{2n}-7q^{5n}+7q^{6n}+3q^{9n}-3q^{10n})/(1-q^{4n})^2 + (2q^n-2q^{2n}-5q^{5n}+5q^{6n}-3q^{9n}+3q^{10n})/(1+q^{4n})^2)",
            |n| nt_diff_series(2, 8, n + PAD),
            rhs_e11201930_mid,
        )),
        sec(Identity::new(
            "PLQ",
            "NT(2,8,n) - NT(6,8,n) through eight q^16 Appell sums and L(q)",
            "Σ (NT(2,8,n)-NT(6,8,n)) q^n = (1/J_16)(-9/2 T(72,53,-) - 9/2 T(88,75,-) - 3/2 T(104,97,-) - 3/2 T(56,31,-) - 7/2 T(72,53,+) - 7/2 T(40,15,+) + 3/2 T(8,-15,+) - 3/2 T(24,-13,+)) + L(q)",
            |n| nt_diff_series(2, 8, n + PAD),
            rhs_plq,
        )),
        sec(Identity::new(
            "THN8",
            "even part of NT(2,8,n) - NT(6,8,n) as R_1 + R_2",
            "Σ (NT(2,8,2n)-NT(6,8,2n)) q^n = R_1(q) + R_2(q)",
            |n| Ok(nt_diff_series(2, 8, 2 * n + 2)?.dissect(2, 0)),
            r1_plus_r2,
        )),
        sec(Identity::new(
            "THN8-L",
            "even part of L(q) as R_1 + R_2",
            "Σ_n [q^{2n}] L(q) q^n = R_1(q) + R_2(q)",
            |n| Ok(l_function(&Ctx::new(2 * n + 2))?.dissect(2, 0)),
            r1_plus_r2,
        )),
    ]);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lattice_sums_low_terms() {
        let c = Ctx::new(0);
        assert_eq!(c.s0().unwrap().low(), Some(30));
        assert_eq!(c.lsum().unwrap().coeff(16).unwrap(), int(1));
        assert_eq!(c.lsum().unwrap().coeff(32).unwrap(), int(3));
    }

    #[test]
    fn including_zero_in_the_plus_sums_adds_nothing_new() {
        // at n = 0 the (1+q^{4n})^2 sums contribute q^0/4 each, cancelling in pairs
        let ctx = Ctx::new(60);
        let with = pent_combination(&ctx, &[], &[(1, 7), (2, -7), (9, -3), (10, 3)], true).unwrap();
        let without =
            pent_combination(&ctx, &[], &[(1, 7), (2, -7), (9, -3), (10, 3)], false).unwrap();
        assert_eq!(with, without);
    }
}
