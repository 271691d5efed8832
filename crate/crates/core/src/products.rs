//! Infinite products `(±q^r; q^m)_∞` and their combinations.
//!
//! Every product object (J_m, J_{r,m}, brackets, theta quotients, the A/B
//! blocks) is a [`ProductSpec`]. Evaluation first nets out the power of each
//! elementary factor `(1 - s q^e)`, so large cancelling powers such as
//! `J_64^48` in a denominator cost nothing, and then applies the survivors to
//! a dense integer vector one factor at a time.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Result, SeriesError};
use crate::series::{int, LaurentSeries, Rational};

/// `(sign·q^r; q^m)_∞ ^ power`, i.e. `Π_{n≥0} (1 - sign·q^{r+mn})^power`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Factor {
    pub sign: i8,
    pub r: i64,
    pub m: i64,
    pub power: i64,
}

impl Factor {
    pub fn new(sign: i8, r: i64, m: i64, power: i64) -> Result<Self> {
        if sign != 1 && sign != -1 {
            return Err(SeriesError::InvalidArgument(format!(
                "factor sign must be ±1, got {sign}"
            )));
        }
        if m < 1 {
            return Err(SeriesError::InvalidArgument(format!(
                "factor modulus must be ≥ 1, got {m}"
            )));
        }
        if r < 0 {
            return Err(SeriesError::InvalidArgument(format!(
                "factor offset must be ≥ 0, got {r}; use a bracket entry for negative offsets"
            )));
        }
        if r == 0 && sign == 1 {
            return Err(SeriesError::ZeroFactor);
        }
        Ok(Self { sign, r, m, power })
    }
}

/// `scalar · q^shift · Π factors`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductSpec {
    pub factors: Vec<Factor>,
    pub shift: i64,
    pub scalar: Rational,
}

impl Default for ProductSpec {
    fn default() -> Self {
        Self::one()
    }
}

impl ProductSpec {
    pub fn one() -> Self {
        Self {
            factors: Vec::new(),
            shift: 0,
            scalar: Rational::one(),
        }
    }

    pub fn with_factor(mut self, f: Factor) -> Self {
        if f.power != 0 {
            self.factors.push(f);
        }
        self
    }

    /// `(sign·q^r; q^m)_∞^power` for `r ≥ 0`.
    pub fn pochhammer(self, sign: i8, r: i64, m: i64, power: i64) -> Result<Self> {
        Ok(self.with_factor(Factor::new(sign, r, m, power)?))
    }

    /// `J_m^power = (q^m; q^m)_∞^power`.
    pub fn j(self, m: i64, power: i64) -> Self {
        self.pochhammer(1, m, m, power)
            .expect("J_m with m ≥ 1 is a valid factor")
    }

    /// `J_{r,m}^power = (q^r, q^{m-r}, q^m; q^m)_∞^power`.
    pub fn jrm(self, r: i64, m: i64, power: i64) -> Result<Self> {
        Ok(self.bracket(1, r, m, power)?.j(m, power))
    }

    /// `[sign·q^e; q^m]_∞^power = (sign·q^e, sign·q^{m-e}; q^m)_∞^power` for any
    /// integer `e`. Factors with negative exponent are normalised via
    /// `1 - s q^{-t} = -s q^{-t} (1 - s q^t)`.
    pub fn bracket(self, sign: i8, e: i64, m: i64, power: i64) -> Result<Self> {
        if m < 1 {
            return Err(SeriesError::InvalidArgument(format!(
                "bracket modulus must be ≥ 1, got {m}"
            )));
        }
        let spec = self.signed_pochhammer(sign, e, m, power)?;
        spec.signed_pochhammer(sign, m - e, m, power)
    }

    /// Bracket with several entries sharing one modulus and power.
    pub fn brackets(self, entries: &[(i8, i64)], m: i64, power: i64) -> Result<Self> {
        entries
            .iter()
            .try_fold(self, |spec, &(s, e)| spec.bracket(s, e, m, power))
    }

    fn signed_pochhammer(mut self, sign: i8, mut r: i64, m: i64, power: i64) -> Result<Self> {
        while r < 0 {
            // (1 - s q^r) = -s q^r (1 - s q^{-r})
            self.shift += r * power;
            if sign == 1 && power.rem_euclid(2) == 1 {
                self.scalar = -self.scalar;
            }
            // single binomial (1 - s q^t) = (s q^t; q^t)_∞ / (s q^{2t}; q^t)_∞
            let t = -r;
            self = self
                .with_factor(Factor::new(sign, t, t, power)?)
                .with_factor(Factor::new(sign, 2 * t, t, -power)?);
            r += m;
        }
        self.pochhammer(sign, r, m, power)
    }

    pub fn q_shift(mut self, k: i64) -> Self {
        self.shift += k;
        self
    }

    pub fn scale(mut self, c: &Rational) -> Self {
        self.scalar *= c;
        self
    }

    pub fn times(mut self, other: &ProductSpec) -> Self {
        self.factors.extend(other.factors.iter().copied());
        self.shift += other.shift;
        self.scalar *= &other.scalar;
        self
    }

    pub fn pow(&self, k: i64) -> Result<Self> {
        if k < 0 && self.scalar.is_zero() {
            return Err(SeriesError::NotInvertible { order: 0 });
        }
        let scalar = if k >= 0 {
            num_traits::pow(self.scalar.clone(), k as usize)
        } else {
            num_traits::pow(self.scalar.recip(), k.unsigned_abs() as usize)
        };
        Ok(Self {
            factors: self
                .factors
                .iter()
                .map(|f| Factor {
                    power: f.power * k,
                    ..*f
                })
                .filter(|f| f.power != 0)
                .collect(),
            shift: self.shift * k,
            scalar,
        })
    }

    pub fn recip(&self) -> Result<Self> {
        self.pow(-1)
    }

    pub fn over(self, other: &ProductSpec) -> Result<Self> {
        Ok(self.times(&other.recip()?))
    }

    /// Net power of each elementary factor `(1 - s q^e)` with `0 < e < limit`,
    /// and the net power of the constant factor `(1 + 1) = 2`.
    fn elementary(&self, limit: i64) -> (BTreeMap<(i64, i8), i64>, i64) {
        let mut net: BTreeMap<(i64, i8), i64> = BTreeMap::new();
        let mut twos = 0i64;
        for f in &self.factors {
            let mut e = f.r;
            if e == 0 {
                // validated: sign is -1, factor (1 + 1)
                twos += f.power;
                e += f.m;
            }
            while e < limit {
                *net.entry((e, f.sign)).or_insert(0) += f.power;
                e += f.m;
            }
        }
        net.retain(|_, p| *p != 0);
        (net, twos)
    }

    pub fn eval(&self, order: i64) -> Result<LaurentSeries> {
        eval_product(self, order)
    }
}

/// `Π_{n≥0} (1 - sign·q^{r+mn})` truncated to `order`.
pub fn pochhammer(sign: i8, r: i64, m: i64, order: i64) -> Result<LaurentSeries> {
    ProductSpec::one().pochhammer(sign, r, m, 1)?.eval(order)
}

/// Evaluates `c · q^s · Π factor^power`, exact below `order`.
pub fn eval_product(spec: &ProductSpec, order: i64) -> Result<LaurentSeries> {
    if spec.scalar.is_zero() {
        return Ok(LaurentSeries::zero(order));
    }
    let len = order - spec.shift;
    if len <= 0 {
        return Ok(LaurentSeries::zero(order));
    }
    let (net, twos) = spec.elementary(len);
    let len = len as usize;
    let mut a = vec![BigInt::zero(); len];
    a[0] = BigInt::one();
    // highest index that may be nonzero so far, to skip work on the zero tail
    let mut top = 0usize;
    for (&(e, sign), &power) in &net {
        let e = e as usize;
        if power > 0 {
            for _ in 0..power {
                top = (top + e).min(len - 1);
                for i in (e..=top).rev() {
                    let (lo, hi) = a.split_at_mut(i);
                    if sign == 1 {
                        hi[0] -= &lo[i - e];
                    } else {
                        hi[0] += &lo[i - e];
                    }
                }
            }
        } else {
            top = len - 1;
            for _ in 0..(-power) {
                for i in e..len {
                    let (lo, hi) = a.split_at_mut(i);
                    if sign == 1 {
                        hi[0] += &lo[i - e];
                    } else {
                        hi[0] -= &lo[i - e];
                    }
                }
            }
        }
    }
    let mut scalar = spec.scalar.clone();
    if twos > 0 {
        scalar *= int(2).pow(twos as i32);
    } else if twos < 0 {
        scalar /= int(2).pow((-twos) as i32);
    }
    let den = scalar.denom().clone();
    let num = scalar.numer().clone();
    if !num.is_one() {
        for c in a.iter_mut() {
            if !c.is_zero() {
                *c *= &num;
            }
        }
    }
    Ok(LaurentSeries::from_dense(spec.shift, a, &den, order))
}

/// `J_m`.
pub fn j(m: i64) -> ProductSpec {
    ProductSpec::one().j(m, 1)
}

/// `J_{r,m}`.
pub fn jrm(r: i64, m: i64) -> Result<ProductSpec> {
    ProductSpec::one().jrm(r, m, 1)
}

/// `[sign·q^e; q^m]_∞`.
pub fn bracket(sign: i8, e: i64, m: i64) -> Result<ProductSpec> {
    ProductSpec::one().bracket(sign, e, m, 1)
}

/// `φ(q) = Σ_{n∈ℤ} q^{n²}` from its sum form.
pub fn phi(order: i64) -> LaurentSeries {
    let mut terms = Vec::new();
    let mut n = 0i64;
    while n * n < order {
        terms.push((n * n, if n == 0 { 1 } else { 2 }));
        n += 1;
    }
    LaurentSeries::from_ints(terms, order)
}

/// `ψ(q) = Σ_{n≥0} q^{n(n+1)/2}` from its sum form.
pub fn psi(order: i64) -> LaurentSeries {
    let mut terms = Vec::new();
    let mut n = 0i64;
    while n * (n + 1) / 2 < order {
        terms.push((n * (n + 1) / 2, 1));
        n += 1;
    }
    LaurentSeries::from_ints(terms, order)
}

/// `J_2^5 / (J_1^2 J_4^2)`.
pub fn phi_spec() -> ProductSpec {
    ProductSpec::one().j(2, 5).j(1, -2).j(4, -2)
}

/// `J_2^2 / J_1`.
pub fn psi_spec() -> ProductSpec {
    ProductSpec::one().j(2, 2).j(1, -1)
}

pub fn phi_prod(order: i64) -> LaurentSeries {
    phi_spec()
        .eval(order)
        .expect("theta quotient has no zero factor")
}

pub fn psi_prod(order: i64) -> LaurentSeries {
    psi_spec()
        .eval(order)
        .expect("theta quotient has no zero factor")
}

/// `A_0 = (q^2,q^6,q^8;q^8)_∞/(-q,-q^7;q^8)_∞`, `A_2 = (q^2,q^6,q^8;q^8)_∞/(-q^3,-q^5;q^8)_∞`.
pub fn block_a_spec(i: u8) -> Result<ProductSpec> {
    let den = match i {
        0 => 1,
        2 => 3,
        _ => {
            return Err(SeriesError::InvalidArgument(format!(
                "A block index must be 0 or 2, got {i}"
            )))
        }
    };
    ProductSpec::one().jrm(2, 8, 1)?.bracket(-1, den, 8, -1)
}

/// `B_j = (q^a,q^{16-a},q^16;q^16)_∞/(-q^b,-q^{16-b};q^16)_∞` with
/// `(a, b)` = (6,3), (2,1), (6,5), (2,7) for `j` = 0..3.
pub fn block_b_spec(j: u8) -> Result<ProductSpec> {
    let (num, den) = match j {
        0 => (6, 3),
        1 => (2, 1),
        2 => (6, 5),
        3 => (2, 7),
        _ => {
            return Err(SeriesError::InvalidArgument(format!(
                "B block index must be 0..=3, got {j}"
            )))
        }
    };
    ProductSpec::one().jrm(num, 16, 1)?.bracket(-1, den, 16, -1)
}

pub fn block_a(i: u8, order: i64) -> Result<LaurentSeries> {
    block_a_spec(i)?.eval(order)
}

pub fn block_b(j: u8, order: i64) -> Result<LaurentSeries> {
    block_b_spec(j)?.eval(order)
}

// ---------------------------------------------------------------------------
// Text notation
// ---------------------------------------------------------------------------
//
//   spec   := item (('*' | '/') item)*
//   item   := atom ('^' int)?
//   atom   := 'J[' int ']'                 J_m
//           | 'J[' int ',' int ']'         J_{r,m}
//           | 'BR[' entry (',' entry)* ';' int ']'
//           | 'P[' entry ';' int ']'       (±q^r; q^m)_∞, r ≥ 0
//           | 'q' ('^' int)?
//           | int
//   entry  := '-'? ('1' | 'q' ('^' int)?)
//
// The modulus inside BR/P may also be written `q^m`. Whitespace is ignored.
// A scalar such as 1/4 parses as `1` divided by `4`.

impl FromStr for ProductSpec {
    type Err = SeriesError;

    fn from_str(s: &str) -> Result<Self> {
        Parser::new(s).spec()
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(s: &'a str) -> Self {
        Self {
            src: s.as_bytes(),
            pos: 0,
        }
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(SeriesError::Parse {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            self.err(format!("expected `{}`", c as char))
        }
    }

    fn eat_word(&mut self, w: &str) -> bool {
        self.skip_ws();
        if self.src[self.pos..].starts_with(w.as_bytes()) {
            self.pos += w.len();
            true
        } else {
            false
        }
    }

    fn int(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        if matches!(self.src.get(self.pos), Some(b'-') | Some(b'+')) {
            self.pos += 1;
        }
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap_or("");
        match text.parse() {
            Ok(v) => Ok(v),
            Err(_) => {
                self.pos = start;
                self.err("expected integer")
            }
        }
    }

    fn spec(&mut self) -> Result<ProductSpec> {
        let mut spec = self.item()?;
        loop {
            if self.eat(b'*') {
                spec = spec.times(&self.item()?);
            } else if self.eat(b'/') {
                spec = spec.over(&self.item()?)?;
            } else {
                break;
            }
        }
        if self.peek().is_some() {
            return self.err("unexpected trailing input");
        }
        Ok(spec)
    }

    fn item(&mut self) -> Result<ProductSpec> {
        let atom = self.atom()?;
        if self.eat(b'^') {
            let k = self.int()?;
            atom.pow(k)
        } else {
            Ok(atom)
        }
    }

    /// `(sign, exponent)` of an entry `±1` / `±q^e`.
    fn entry(&mut self) -> Result<(i8, i64)> {
        let sign = if self.eat(b'-') { -1 } else { 1 };
        if self.eat(b'q') {
            let e = if self.eat(b'^') { self.int()? } else { 1 };
            Ok((sign, e))
        } else if self.eat(b'1') {
            Ok((sign, 0))
        } else {
            self.err("expected bracket entry `±1` or `±q^e`")
        }
    }

    fn modulus(&mut self) -> Result<i64> {
        if self.eat(b'q') {
            if self.eat(b'^') {
                self.int()
            } else {
                Ok(1)
            }
        } else {
            self.int()
        }
    }

    fn atom(&mut self) -> Result<ProductSpec> {
        if self.eat_word("BR[") {
            let mut entries = vec![self.entry()?];
            while self.eat(b',') {
                entries.push(self.entry()?);
            }
            self.expect(b';')?;
            let m = self.modulus()?;
            self.expect(b']')?;
            return ProductSpec::one().brackets(&entries, m, 1);
        }
        if self.eat_word("P[") {
            let (sign, r) = self.entry()?;
            self.expect(b';')?;
            let m = self.modulus()?;
            self.expect(b']')?;
            return ProductSpec::one().pochhammer(sign, r, m, 1);
        }
        if self.eat_word("J[") {
            let a = self.int()?;
            let spec = if self.eat(b',') {
                let m = self.int()?;
                ProductSpec::one().jrm(a, m, 1)?
            } else {
                if a < 1 {
                    return self.err("J modulus must be ≥ 1");
                }
                ProductSpec::one().j(a, 1)
            };
            self.expect(b']')?;
            return Ok(spec);
        }
        if self.eat(b'q') {
            // `q^k` binds the exponent here so that `q^-6` is not read as a power
            let k = if self.eat(b'^') { self.int()? } else { 1 };
            return Ok(ProductSpec::one().q_shift(k));
        }
        match self.peek() {
            Some(c) if c.is_ascii_digit() || c == b'-' => {
                let n = self.int()?;
                Ok(ProductSpec::one().scale(&int(n)))
            }
            _ => self.err("expected J[..], BR[..], P[..], q^k or an integer"),
        }
    }
}

impl fmt::Display for ProductSpec {
    /// Canonical form in the text notation: scalar, shift, then one `P[..]`
    /// per factor with its power.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        let num = self.scalar.numer();
        let den = self.scalar.denom();
        parts.push(format!("{num}"));
        for fac in &self.factors {
            let entry = match (fac.sign, fac.r) {
                (1, 1) => "q".to_string(),
                (-1, 1) => "-q".to_string(),
                (-1, 0) => "-1".to_string(),
                (1, r) => format!("q^{r}"),
                (_, r) => format!("-q^{r}"),
            };
            parts.push(format!("P[{entry}; {}]^{}", fac.m, fac.power));
        }
        if self.shift != 0 {
            parts.push(format!("q^{}", self.shift));
        }
        write!(f, "{}", parts.join(" * "))?;
        if !den.is_one() {
            write!(f, " / {den}")?;
        }
        Ok(())
    }
}
