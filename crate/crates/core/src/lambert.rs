//! Lambert-type and bilateral Appell-type sums.
//!
//! All sums here are built from quotients `c·q^s / (1 - σ q^t)^d`. The only
//! place that deals with `t ≤ 0` is [`push_quotient`]: for `t < 0` it rewrites
//! `1/(1 - σ q^{-u})^d = (-σ)^d q^{du} / (1 - σ q^u)^d` before the geometric
//! expansion, so every expanded quotient has a computable lowest exponent.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::error::{Result, SeriesError};
use crate::products::{self, ProductSpec};
use crate::series::{int, LaurentSeries, Rational};

/// Accumulates `coef·q^shift / (1 - sigma·q^t)^power` into `acc`, exact below `order`.
#[allow(clippy::too_many_arguments)]
fn push_quotient(
    acc: &mut BTreeMap<i64, Rational>,
    coef: &Rational,
    shift: i64,
    sigma: i8,
    t: i64,
    power: u32,
    order: i64,
    index: i64,
) -> Result<()> {
    if t == 0 {
        if sigma == 1 {
            return Err(SeriesError::VanishingDenominator { index });
        }
        if shift < order {
            let c = coef / int(2).pow(power as i32);
            *acc.entry(shift).or_insert_with(Rational::zero) += c;
        }
        return Ok(());
    }
    let (coef, shift, t) = if t < 0 {
        let u = -t;
        let flip = sigma == 1 && power % 2 == 1;
        let c = if flip { -coef } else { coef.clone() };
        (c, shift + power as i64 * u, u)
    } else {
        (coef.clone(), shift, t)
    };
    // 1/(1 - σx)^d = Σ_i C(i+d-1, d-1) σ^i x^i, for d = 1, 2
    let mut i = 0i64;
    let mut e = shift;
    while e < order {
        let binom = match power {
            1 => 1,
            2 => i + 1,
            _ => unreachable!("denominator power validated to 1 or 2"),
        };
        let sign = if sigma == -1 && i % 2 == 1 { -1 } else { 1 };
        *acc.entry(e).or_insert_with(Rational::zero) += &coef * int(sign * binom);
        i += 1;
        e += t;
    }
    Ok(())
}

/// Lowest exponent contributed by `q^shift / (1 - σq^t)^d` after normalisation.
fn min_exponent(shift: i64, t: i64, power: u32) -> i64 {
    if t < 0 {
        shift - power as i64 * t
    } else {
        shift
    }
}

fn finish(acc: BTreeMap<i64, Rational>, order: i64) -> LaurentSeries {
    LaurentSeries::from_terms(acc, order)
}

/// Bilateral sum
/// `Σ_{n∈ℤ} (±1)^n q^{(quadratic·n² + linear·n)/divisor + constant} / (1 - sigma·q^{step·n + offset})^power`.
///
/// The exponent is written over a `divisor` so that pentagonal-type exponents
/// such as `n(3n+1)/2` are expressible; it must be integral for every `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AppellSpec {
    pub quadratic: i64,
    pub linear: i64,
    pub constant: i64,
    pub divisor: i64,
    pub alternating: bool,
    pub sigma: i8,
    pub step: i64,
    pub offset: i64,
    pub power: u32,
    pub exclude_zero: bool,
}

impl AppellSpec {
    /// `Σ (±1)^n q^{a n² + b n + c} / (1 - σ q^{k n + j})^d`.
    pub fn new(a: i64, b: i64, c: i64, sigma: i8, k: i64, j: i64, power: u32) -> Self {
        Self {
            quadratic: a,
            linear: b,
            constant: c,
            divisor: 1,
            alternating: false,
            sigma,
            step: k,
            offset: j,
            power,
            exclude_zero: false,
        }
    }

    pub fn alternating(mut self) -> Self {
        self.alternating = true;
        self
    }

    pub fn excluding_zero(mut self) -> Self {
        self.exclude_zero = true;
        self
    }

    pub fn over(mut self, divisor: i64) -> Self {
        self.divisor = divisor;
        self
    }

    /// `Σ_{n≠0} (-1)^n q^{n(3n+1)/2 + a·n} / (1 - σ q^{k n})^d`, the pentagonal-type sums
    /// of the rank generating functions.
    pub fn pentagonal(a: i64, sigma: i8, k: i64, power: u32) -> Self {
        Self::new(3, 1 + 2 * a, 0, sigma, k, 0, power)
            .over(2)
            .alternating()
            .excluding_zero()
    }

    pub fn exponent(&self, n: i64) -> i64 {
        (self.quadratic * n * n + self.linear * n) / self.divisor + self.constant
    }

    fn lowest(&self, n: i64) -> i64 {
        min_exponent(self.exponent(n), self.step * n + self.offset, self.power)
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(SeriesError::InvalidArgument(msg));
        if self.sigma != 1 && self.sigma != -1 {
            return bad(format!("denominator sign must be ±1, got {}", self.sigma));
        }
        if !(1..=2).contains(&self.power) {
            return bad(format!(
                "denominator power must be 1 or 2, got {}",
                self.power
            ));
        }
        if self.divisor < 1 {
            return bad(format!(
                "exponent divisor must be ≥ 1, got {}",
                self.divisor
            ));
        }
        for n in [1i64, -1] {
            if (self.quadratic * n * n + self.linear * n) % self.divisor != 0 {
                return bad(format!("exponent is not integral at n = {n}"));
            }
        }
        if self.quadratic < 0 {
            return bad("quadratic coefficient must be ≥ 0".into());
        }
        if self.quadratic == 0 {
            // lowest(n) grows linearly; both tails must go to +∞.
            let d = self.power as i64;
            let k = self.step;
            let right = self.linear + if k < 0 { -d * k * self.divisor } else { 0 };
            let left = self.linear - if k > 0 { d * k * self.divisor } else { 0 };
            if right <= 0 || left >= 0 {
                return bad(
                    "sum does not converge q-adically: exponents do not grow in both directions"
                        .into(),
                );
            }
        }
        Ok(())
    }

    /// Bilateral sum truncated to `order`.
    pub fn eval(&self, order: i64) -> Result<LaurentSeries> {
        appell_sum(self, order)
    }
}

/// Evaluates an [`AppellSpec`], exact below `order`.
///
/// The per-index lowest exponent is convex in `n`, so each direction stops at
/// the first index whose lowest exponent is at or above `order` and not
/// smaller than its predecessor's.
pub fn appell_sum(spec: &AppellSpec, order: i64) -> Result<LaurentSeries> {
    spec.validate()?;
    let mut acc = BTreeMap::new();
    for dir in [1i64, -1] {
        let mut n = if dir == 1 { 0 } else { -1 };
        let mut prev = spec.lowest(n - dir);
        loop {
            let low = spec.lowest(n);
            if low >= order && low >= prev {
                break;
            }
            prev = low;
            if !(spec.exclude_zero && n == 0) {
                let coef = if spec.alternating && n % 2 != 0 {
                    int(-1)
                } else {
                    Rational::one()
                };
                push_quotient(
                    &mut acc,
                    &coef,
                    spec.exponent(n),
                    spec.sigma,
                    spec.step * n + spec.offset,
                    spec.power,
                    order,
                    n,
                )?;
            }
            n += dir;
        }
    }
    Ok(finish(acc, order))
}

/// Text form `APPELL[alt; 24n^2+72n+53; (1+q^{16n+22})^2; n!=0:false]`; a divided
/// exponent is written `(3n^2+3n)/2`.
impl fmt::Display for AppellSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let poly = |a: i64, b: i64, c: i64| {
            let mut s = String::new();
            let mut push = |coef: i64, var: &str| {
                if coef == 0 {
                    return;
                }
                if !s.is_empty() {
                    s.push(if coef < 0 { '-' } else { '+' });
                } else if coef < 0 {
                    s.push('-');
                }
                let mag = coef.abs();
                if mag != 1 || var.is_empty() {
                    s.push_str(&mag.to_string());
                }
                s.push_str(var);
            };
            push(a, "n^2");
            push(b, "n");
            push(c, "");
            if s.is_empty() {
                s.push('0');
            }
            s
        };
        let exponent = if self.divisor == 1 {
            poly(self.quadratic, self.linear, self.constant)
        } else {
            let mut s = format!(
                "({})/{}",
                poly(self.quadratic, self.linear, 0),
                self.divisor
            );
            if self.constant != 0 {
                s.push_str(&format!("{:+}", self.constant));
            }
            s
        };
        write!(
            f,
            "APPELL[{}; {}; (1{}q^{{{}}})^{}; n!=0:{}]",
            if self.alternating { "alt" } else { "plain" },
            exponent,
            if self.sigma == 1 { '-' } else { '+' },
            poly(0, self.step, self.offset),
            self.power,
            self.exclude_zero
        )
    }
}

impl FromStr for AppellSpec {
    type Err = SeriesError;

    fn from_str(s: &str) -> Result<Self> {
        let perr = |msg: &str| SeriesError::Parse {
            pos: 0,
            msg: format!("{msg} in `{s}`"),
        };
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let body = compact
            .strip_prefix("APPELL[")
            .and_then(|b| b.strip_suffix(']'))
            .ok_or_else(|| perr("expected APPELL[...]"))?;
        let fields: Vec<&str> = body.split(';').collect();
        if fields.len() != 4 {
            return Err(perr("expected four `;`-separated fields"));
        }
        let alternating = match fields[0] {
            "alt" => true,
            "plain" => false,
            _ => return Err(perr("first field must be `alt` or `plain`")),
        };
        let (quadratic, linear, constant, divisor) =
            parse_exponent(fields[1]).ok_or_else(|| perr("bad exponent"))?;
        let den = fields[2];
        let (inner, power) = den
            .strip_prefix("(1")
            .and_then(|d| d.rsplit_once(")^"))
            .ok_or_else(|| perr("bad denominator"))?;
        let power: u32 = power.parse().map_err(|_| perr("bad denominator power"))?;
        let sigma = match inner.as_bytes().first() {
            Some(b'-') => 1,
            Some(b'+') => -1,
            _ => return Err(perr("bad denominator sign")),
        };
        let lin = inner[1..]
            .strip_prefix("q^{")
            .and_then(|x| x.strip_suffix('}'))
            .ok_or_else(|| perr("bad denominator exponent"))?;
        let (a, k, j) = parse_poly(lin).ok_or_else(|| perr("bad denominator exponent"))?;
        if a != 0 {
            return Err(perr("denominator exponent must be linear"));
        }
        let exclude_zero = match fields[3] {
            "n!=0:true" => true,
            "n!=0:false" => false,
            _ => return Err(perr("last field must be n!=0:true|false")),
        };
        let spec = AppellSpec {
            quadratic,
            linear,
            constant,
            divisor,
            alternating,
            sigma,
            step: k,
            offset: j,
            power,
            exclude_zero,
        };
        spec.validate()?;
        Ok(spec)
    }
}

fn parse_exponent(s: &str) -> Option<(i64, i64, i64, i64)> {
    if let Some(rest) = s.strip_prefix('(') {
        let (num, tail) = rest.split_once(")/")?;
        let (a, b, c0) = parse_poly(num)?;
        let split = tail.find(['+', '-']).unwrap_or(tail.len());
        let divisor: i64 = tail[..split].parse().ok()?;
        let constant: i64 = if split < tail.len() {
            tail[split..].parse().ok()?
        } else {
            0
        };
        if c0 % divisor != 0 {
            return None;
        }
        Some((a, b, constant + c0 / divisor, divisor))
    } else {
        let (a, b, c) = parse_poly(s)?;
        Some((a, b, c, 1))
    }
}

/// Parses `a n^2 + b n + c` written like `24n^2+72n+53`, `-n`, `16n-10`.
fn parse_poly(s: &str) -> Option<(i64, i64, i64)> {
    let (mut a, mut b, mut c) = (0, 0, 0);
    let bytes = s.as_bytes();
    let mut i = 0;
    if bytes.is_empty() {
        return None;
    }
    while i < bytes.len() {
        let start = i;
        if bytes[i] == b'+' || bytes[i] == b'-' {
            i += 1;
        }
        while i < bytes.len() && bytes[i] != b'+' && bytes[i] != b'-' {
            i += 1;
        }
        let term = &s[start..i];
        let (sign, mag) = match term.as_bytes().first()? {
            b'-' => (-1, &term[1..]),
            b'+' => (1, &term[1..]),
            _ => (1, term),
        };
        let coef = |t: &str| -> Option<i64> {
            if t.is_empty() {
                Some(sign)
            } else {
                t.parse::<i64>().ok().map(|v| v * sign)
            }
        };
        if let Some(t) = mag.strip_suffix("n^2") {
            a += coef(t)?;
        } else if let Some(t) = mag.strip_suffix('n') {
            b += coef(t)?;
        } else {
            c += mag.parse::<i64>().ok()? * sign;
        }
    }
    Some((a, b, c))
}

/// Unilateral sum `Σ_{n≥start} coef·q^{e0 + e_step·n} / (1 - sigma·q^{t0 + t_step·n})^power`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LambertSpec {
    pub coef: Rational,
    pub e0: i64,
    pub e_step: i64,
    pub sigma: i8,
    pub t0: i64,
    pub t_step: i64,
    pub power: u32,
    pub start: i64,
}

impl LambertSpec {
    /// `Σ_{n≥0} coef·q^{e0+m n} / (1 - σ q^{t0+m n})^d`.
    pub fn new(coef: Rational, e0: i64, sigma: i8, t0: i64, m: i64, power: u32) -> Self {
        Self {
            coef,
            e0,
            e_step: m,
            sigma,
            t0,
            t_step: m,
            power,
            start: 0,
        }
    }

    pub fn from_index(mut self, start: i64) -> Self {
        self.start = start;
        self
    }

    pub fn with_steps(mut self, e_step: i64, t_step: i64) -> Self {
        self.e_step = e_step;
        self.t_step = t_step;
        self
    }

    pub fn eval(&self, order: i64) -> Result<LaurentSeries> {
        lambert_sum(self, order)
    }
}

pub fn lambert_sum(spec: &LambertSpec, order: i64) -> Result<LaurentSeries> {
    if spec.e_step <= 0 || spec.t_step <= 0 {
        return Err(SeriesError::InvalidArgument(
            "unilateral Lambert sum needs positive exponent steps".into(),
        ));
    }
    if !(1..=2).contains(&spec.power) {
        return Err(SeriesError::InvalidArgument(format!(
            "denominator power must be 1 or 2, got {}",
            spec.power
        )));
    }
    let mut acc = BTreeMap::new();
    let mut n = spec.start;
    loop {
        let shift = spec.e0 + spec.e_step * n;
        let t = spec.t0 + spec.t_step * n;
        // once t > 0 the lowest exponent increases with n
        if t > 0 && min_exponent(shift, t, spec.power) >= order {
            break;
        }
        push_quotient(
            &mut acc, &spec.coef, shift, spec.sigma, t, spec.power, order, n,
        )?;
        n += 1;
    }
    Ok(finish(acc, order))
}

/// `X(a; q^m) = Σ_{n≥0} (a q^{mn}/(1 - a q^{mn}) - q^{m(n+1)}/a / (1 - q^{m(n+1)}/a))`
/// with `a = sign·q^e`. Any integer `e` is accepted; quotients with a negative
/// exponent are normalised like every other quotient.
pub fn x_function(sign: i8, e: i64, m: i64, order: i64) -> Result<LaurentSeries> {
    check_sign_modulus(sign, m)?;
    let c = int(sign as i64);
    let first = LambertSpec::new(c.clone(), e, sign, e, m, 1).eval(order)?;
    let second = LambertSpec::new(c, m - e, sign, m - e, m, 1).eval(order)?;
    Ok(&first - &second)
}

/// `S_1(b_1, b_2; q^m) = X(b_1; q^m) + X(b_2; q^m)`.
pub fn s1_function(b1: (i8, i64), b2: (i8, i64), m: i64, order: i64) -> Result<LaurentSeries> {
    Ok(&x_function(b1.0, b1.1, m, order)? + &x_function(b2.0, b2.1, m, order)?)
}

/// One `b`-half of `S_2`:
/// `Σ_{n≥0} ((2b q^{mn} - b² q^{2mn})/(1 - b q^{mn})² + (q^{2m(n+1)}/b²)/(1 - q^{m(n+1)}/b)²)`.
pub fn s2_half(b: (i8, i64), m: i64, order: i64) -> Result<LaurentSeries> {
    let (sign, e) = b;
    check_sign_modulus(sign, m)?;
    let twice = LambertSpec::new(int(2 * sign as i64), e, sign, e, m, 2).eval(order)?;
    let square = LambertSpec::new(Rational::one(), 2 * e, sign, e, m, 2)
        .with_steps(2 * m, m)
        .eval(order)?;
    let reflected = LambertSpec::new(Rational::one(), 2 * (m - e), sign, m - e, m, 2)
        .with_steps(2 * m, m)
        .eval(order)?;
    Ok(&(&twice - &square) + &reflected)
}

/// `S_2(b_1, b_2; q^m)` with `b_i = sign_i·q^{e_i}`.
pub fn s2_function(b1: (i8, i64), b2: (i8, i64), m: i64, order: i64) -> Result<LaurentSeries> {
    Ok(&s2_half(b1, m, order)? + &s2_half(b2, m, order)?)
}

fn check_sign_modulus(sign: i8, m: i64) -> Result<()> {
    if sign != 1 && sign != -1 {
        return Err(SeriesError::InvalidArgument(format!(
            "sign must be ±1, got {sign}"
        )));
    }
    if m < 1 {
        return Err(SeriesError::InvalidArgument(format!(
            "modulus must be ≥ 1, got {m}"
        )));
    }
    Ok(())
}

/// `Σ_n (NT(b,k,n) - NT(k-b,k,n)) q^n` from the bilateral-sum generating function
/// `k/J_1 Σ_{n≠0} (-1)^n q^{n(3n+1)/2+(b-1)n}(1-q^n)/(1-q^{kn})²
///  - (k-b)/J_1 Σ_{n≠0} (-1)^n q^{n(3n+1)/2+(b-1)n}(1-q^n)/(1-q^{kn})`.
pub fn nt_diff_series(b: i64, k: i64, order: i64) -> Result<LaurentSeries> {
    if !(1..k).contains(&b) {
        return Err(SeriesError::InvalidArgument(format!(
            "need 1 ≤ b ≤ k-1, got b={b}, k={k}"
        )));
    }
    let sum = |a: i64, d: u32| AppellSpec::pentagonal(a, 1, k, d).eval(order);
    let squared = &sum(b - 1, 2)? - &sum(b, 2)?;
    let simple = &sum(b - 1, 1)? - &sum(b, 1)?;
    let bracket = &squared.scale_int(k) - &simple.scale_int(k - b);
    let inv_j1 = ProductSpec::one().j(1, -1).eval(order)?;
    Ok(&bracket * &inv_j1)
}

/// `Σ_n (M_ω(1,4,n) - M_ω(3,4,n)) q^n = (1/4)(J_1 J_2 / J_4)(1 - φ(q)²)`.
pub fn mw_diff_series(order: i64) -> Result<LaurentSeries> {
    let eta = ProductSpec::one().j(1, 1).j(2, 1).j(4, -1).eval(order)?;
    let phi = products::phi(order);
    let one_minus = &LaurentSeries::one() - &(&phi * &phi);
    Ok((&eta * &one_minus).scale(&crate::series::rat(1, 4)))
}

/// `Σ_{n≥1} q^n / (1 + q^{2n})`.
pub fn v12_lambert(order: i64) -> Result<LaurentSeries> {
    LambertSpec::new(Rational::one(), 0, -1, 0, 1, 1)
        .with_steps(1, 2)
        .from_index(1)
        .eval(order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::rat;

    /// `coef q^s / (1 - σq^t)^d` by series inversion, as an independent route.
    fn quotient_by_inversion(s: i64, sigma: i8, t: i64, d: i64, order: i64) -> LaurentSeries {
        let den = LaurentSeries::polynomial([(0, 1), (t, -(sigma as i64))]);
        let pad = order + d * t.abs() + 4;
        let inv = den.truncate(pad).pow(-d).unwrap();
        (&LaurentSeries::q_pow(s) * &inv).truncate(order)
    }

    #[test]
    fn normalisation_matches_inversion() {
        for &(s, sigma, t, d) in &[
            (3, 1, 4, 1),
            (3, -1, 4, 2),
            (0, 1, -6, 2),
            (-12, -1, -6, 2),
            (5, 1, -3, 1),
            (2, -1, -5, 1),
        ] {
            let mut acc = BTreeMap::new();
            push_quotient(&mut acc, &Rational::one(), s, sigma, t, d as u32, 40, 0).unwrap();
            let got = finish(acc, 40);
            let want = quotient_by_inversion(s, sigma, t, d, 40);
            assert!(
                got.agrees_with(&want),
                "s={s} σ={sigma} t={t} d={d}: {got} vs {want}"
            );
        }
    }

    #[test]
    fn vanishing_denominator() {
        let mut acc = BTreeMap::new();
        assert!(matches!(
            push_quotient(&mut acc, &Rational::one(), 0, 1, 0, 2, 10, 3),
            Err(SeriesError::VanishingDenominator { index: 3 })
        ));
        assert!(matches!(
            x_function(1, 16, 16, 20),
            Err(SeriesError::VanishingDenominator { .. })
        ));
        let spec = AppellSpec::new(1, 0, 0, 1, 4, 0, 2);
        assert!(matches!(
            spec.eval(10),
            Err(SeriesError::VanishingDenominator { index: 0 })
        ));
    }

    #[test]
    fn x_function_special_values() {
        assert!(x_function(-1, 8, 16, 200).unwrap().is_zero());
        assert_eq!(
            x_function(-1, 16, 16, 200).unwrap(),
            LaurentSeries::constant(rat(1, 2)).truncate(200)
        );
        let x4 = x_function(1, 4, 16, 20).unwrap();
        assert_eq!(x4.low(), Some(4));
        assert_eq!(x4.coeff(4).unwrap(), int(1));
        assert_eq!(x4.coeff(8).unwrap(), int(1));
        // n=0: q^4/(1-q^4) - q^12/(1-q^12), n=1: q^20/(1-q^20) - ...
        assert_eq!(x4.coeff(12).unwrap(), int(0));
        assert_eq!(x4.coeff(16).unwrap(), int(1));
    }

    #[test]
    fn x_function_reflection() {
        let a = x_function(-1, 4, 16, 300).unwrap();
        let b = x_function(-1, 12, 16, 300).unwrap();
        assert_eq!(a, -b);
    }

    #[test]
    fn s2_symmetric_and_positive() {
        let b = (1, 12);
        let both = s2_function(b, b, 16, 120).unwrap();
        assert_eq!(both, s2_half(b, 16, 120).unwrap().scale_int(2));
        let low = s2_function((1, 12), (-1, 3), 16, 1).unwrap();
        assert_eq!(low.coeff(0).unwrap(), int(0));
    }

    #[test]
    fn appell_lowest_terms() {
        let s0 = AppellSpec::new(24, 6, 0, 1, 16, 0, 2)
            .excluding_zero()
            .eval(60)
            .unwrap();
        // n=1: q^30/(1-q^16)^2; n=-1: q^18 q^32 /(1-q^16)^2 = q^50/...
        assert_eq!(s0.low(), Some(30));
        assert_eq!(
            s0,
            LaurentSeries::from_ints([(30, 1), (46, 2), (50, 1)], 60)
        );
        let t = AppellSpec::new(24, 72, 53, -1, 16, 22, 2)
            .alternating()
            .eval(80)
            .unwrap();
        // n=-1: -q^5/(1+q^6)^2; n=-2: q^25/(1+q^10)^2; n=0: q^53/(1+q^22)^2
        assert_eq!(t.low(), Some(5));
        assert_eq!(t.coeff(5).unwrap(), int(-1));
        assert_eq!(t.coeff(11).unwrap(), int(2));
        assert_eq!(t.coeff(25).unwrap(), int(1));
        assert_eq!(t.coeff(53).unwrap(), int(-8));
    }

    #[test]
    fn appell_shift_symmetry() {
        for sigma in [1i8, -1] {
            for a in 0..8 {
                let lhs = AppellSpec::pentagonal(a, sigma, 4, 2).eval(300).unwrap();
                let rhs = AppellSpec::pentagonal(7 - a, sigma, 4, 2)
                    .eval(300)
                    .unwrap();
                assert_eq!(lhs, rhs, "a={a}, sigma={sigma}");
            }
        }
    }

    #[test]
    fn appell_zero_quadratic_converges() {
        // Σ_n q^{16n+12}/(1-q^{16n+12})^2 is symmetric under n -> -1-n
        let s = AppellSpec::new(0, 16, 12, 1, 16, 12, 2).eval(200).unwrap();
        let l = LambertSpec::new(Rational::one(), 12, 1, 12, 16, 2)
            .eval(200)
            .unwrap();
        let r = LambertSpec::new(Rational::one(), 4, 1, 4, 16, 2)
            .eval(200)
            .unwrap();
        assert_eq!(s, &l + &r);
        let divergent = AppellSpec::new(0, 16, 12, 1, 16, 12, 1);
        assert!(divergent.validate().is_err());
    }

    #[test]
    fn appell_text_form() {
        let spec = AppellSpec::new(24, 72, 53, -1, 16, 22, 2).alternating();
        let text = spec.to_string();
        assert_eq!(
            text,
            "APPELL[alt; 24n^2+72n+53; (1+q^{16n+22})^2; n!=0:false]"
        );
        assert_eq!(text.parse::<AppellSpec>().unwrap(), spec);
        let pent = AppellSpec::pentagonal(9, -1, 4, 2);
        assert_eq!(
            pent.to_string(),
            "APPELL[alt; (3n^2+19n)/2; (1+q^{4n})^2; n!=0:true]"
        );
        assert_eq!(pent.to_string().parse::<AppellSpec>().unwrap(), pent);
        let neg = AppellSpec::new(24, 8, -15, 1, 16, -10, 2).alternating();
        assert_eq!(neg.to_string().parse::<AppellSpec>().unwrap(), neg);
        assert!("APPELL[alt; 3n; (1-q^{n})^3; n!=0:true]"
            .parse::<AppellSpec>()
            .is_err());
    }

    #[test]
    fn lambert_v12_identity() {
        let n = 300;
        let lhs = v12_lambert(n).unwrap();
        let phi = products::phi(n);
        let rhs = (&(&phi * &phi) - &LaurentSeries::one()).scale(&rat(1, 4));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn nt_diff_rejects_bad_residue() {
        assert!(nt_diff_series(0, 8, 10).is_err());
        assert!(nt_diff_series(8, 8, 10).is_err());
    }

    #[test]
    fn nt_diff_small_coefficients() {
        let s = nt_diff_series(2, 8, 10).unwrap();
        assert_eq!(s.coeff(0).unwrap(), int(0));
        assert_eq!(s.coeff(3).unwrap(), int(-2));
    }

    #[test]
    fn mw_diff_small_coefficients() {
        let s = mw_diff_series(10).unwrap();
        assert_eq!(s.coeff(0).unwrap(), int(0));
        assert_eq!(s.coeff(1).unwrap(), int(-1));
        assert_eq!(s.coeff(3).unwrap(), int(3));
    }
}
