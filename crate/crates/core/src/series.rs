//! Truncated Laurent series in one variable `q` with exact rational coefficients.
//!
//! A [`LaurentSeries`] is a sparse map from exponent to coefficient plus a
//! truncation order `O`: every exponent below `O` is exact, everything at or
//! above `O` is unknown. Exact (untruncated) polynomials carry the order
//! [`EXACT`]. Orders are propagated pessimistically through every operation.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Result, SeriesError};

pub type Rational = BigRational;

/// Order of a series known to all exponents.
pub const EXACT: i64 = i64::MAX;

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `o + d` where either operand may be [`EXACT`].
pub(crate) fn order_add(o: i64, d: i64) -> i64 {
    if o == EXACT || d == EXACT {
        EXACT
    } else {
        o + d
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct LaurentSeries {
    terms: BTreeMap<i64, Rational>,
    order: i64,
}

impl LaurentSeries {
    /// The zero series, exact below `order`.
    pub fn zero(order: i64) -> Self {
        Self {
            terms: BTreeMap::new(),
            order,
        }
    }

    pub fn one() -> Self {
        Self::monomial(Rational::one(), 0)
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0)
    }

    /// Exact monomial `c q^e`.
    pub fn monomial(c: Rational, e: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        Self {
            terms,
            order: EXACT,
        }
    }

    /// Exact `q^e`.
    pub fn q_pow(e: i64) -> Self {
        Self::monomial(Rational::one(), e)
    }

    /// Builds a series from `(exponent, coefficient)` pairs. Repeated exponents
    /// are summed; terms at or above `order` and zero coefficients are dropped.
    pub fn from_terms<I>(terms: I, order: i64) -> Self
    where
        I: IntoIterator<Item = (i64, Rational)>,
    {
        let mut map: BTreeMap<i64, Rational> = BTreeMap::new();
        for (e, c) in terms {
            if e < order {
                *map.entry(e).or_insert_with(Rational::zero) += c;
            }
        }
        map.retain(|_, c| !c.is_zero());
        Self { terms: map, order }
    }

    /// Convenience form of [`from_terms`](Self::from_terms) for integer coefficients.
    pub fn from_ints<I>(terms: I, order: i64) -> Self
    where
        I: IntoIterator<Item = (i64, i64)>,
    {
        Self::from_terms(terms.into_iter().map(|(e, c)| (e, int(c))), order)
    }

    /// Exact polynomial from integer coefficients.
    pub fn polynomial<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, i64)>,
    {
        Self::from_ints(terms, EXACT)
    }

    pub fn order(&self) -> i64 {
        self.order
    }

    pub fn is_exact(&self) -> bool {
        self.order == EXACT
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn low(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rational)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn coeff(&self, n: i64) -> Result<Rational> {
        if n >= self.order {
            return Err(SeriesError::BeyondOrder {
                exponent: n,
                order: self.order,
            });
        }
        Ok(self.terms.get(&n).cloned().unwrap_or_else(Rational::zero))
    }

    /// Lowers the order to `min(self.order, order)`.
    pub fn truncate(&self, order: i64) -> Self {
        let order = order.min(self.order);
        Self {
            terms: self
                .terms
                .range(..order)
                .map(|(e, c)| (*e, c.clone()))
                .collect(),
            order,
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.order);
        }
        Self {
            terms: self.terms.iter().map(|(e, v)| (*e, v * c)).collect(),
            order: self.order,
        }
    }

    pub fn scale_int(&self, c: i64) -> Self {
        self.scale(&int(c))
    }

    /// Multiplication by the exact monomial `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
            order: order_add(self.order, k),
        }
    }

    /// `f(q) -> f(-q)`.
    pub fn alternate(&self) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (*e, if e.is_odd() { -c } else { c.clone() }))
                .collect(),
            order: self.order,
        }
    }

    /// `f(q) -> f(q^k)` for `k >= 1`.
    pub fn substitute_power(&self, k: i64) -> Self {
        assert!(k >= 1, "substitute_power needs a positive power, got {k}");
        Self {
            terms: self.terms.iter().map(|(e, c)| (e * k, c.clone())).collect(),
            order: if self.order == EXACT {
                EXACT
            } else {
                self.order * k
            },
        }
    }

    /// Component of exponents congruent to `i` mod `m`, shifted down by `i`
    /// and rescaled `q^m -> q`.
    pub fn dissect(&self, m: i64, i: i64) -> Self {
        assert!(m >= 1, "dissect needs a positive modulus, got {m}");
        assert!(
            (0..m).contains(&i),
            "residue {i} out of range for modulus {m}"
        );
        let order = if self.order == EXACT {
            EXACT
        } else {
            -(-(self.order - i)).div_euclid(m)
        };
        Self {
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| (*e - i).rem_euclid(m) == 0)
                .map(|(e, c)| ((e - i) / m, c.clone()))
                .collect(),
            order,
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let order = self.order.min(other.order);
        let mut terms: BTreeMap<i64, Rational> = self
            .terms
            .range(..order)
            .map(|(e, c)| (*e, c.clone()))
            .collect();
        for (e, c) in other.terms.range(..order) {
            let slot = terms.entry(*e).or_insert_with(Rational::zero);
            *slot += c;
            if slot.is_zero() {
                terms.remove(e);
            }
        }
        Self { terms, order }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
            order: self.order,
        }
    }

    /// Order of a product: `min(a.order + low(b), b.order + low(a), a.order + b.order)`
    /// with `low` of an empty series taken as infinite.
    fn product_order(&self, other: &Self) -> i64 {
        let mut order = order_add(self.order, other.order);
        if let Some(lb) = other.low() {
            order = order.min(order_add(self.order, lb));
        }
        if let Some(la) = self.low() {
            order = order.min(order_add(other.order, la));
        }
        order
    }

    pub fn mul(&self, other: &Self) -> Self {
        let order = self.product_order(other);
        let (Some(la), Some(lb)) = (self.low(), other.low()) else {
            return Self::zero(order);
        };
        let hi = if order == EXACT {
            let ha = *self.terms.keys().next_back().unwrap();
            let hb = *other.terms.keys().next_back().unwrap();
            ha + hb + 1
        } else {
            order
        };
        let lo = la + lb;
        if hi <= lo {
            return Self::zero(order);
        }
        let (da, na) = integerize(self);
        let (db, nb) = integerize(other);
        let mut acc = vec![BigInt::zero(); (hi - lo) as usize];
        for (ea, ca) in &na {
            if ea + lb >= hi {
                break;
            }
            for (eb, cb) in &nb {
                let e = ea + eb;
                if e >= hi {
                    break;
                }
                acc[(e - lo) as usize] += ca * cb;
            }
        }
        let den = da * db;
        Self::from_dense(lo, acc, &den, order)
    }

    /// Multiplicative inverse, handling Laurent units by factoring out `q^low`.
    pub fn invert(&self) -> Result<Self> {
        let Some(e) = self.low() else {
            return Err(SeriesError::NotInvertible { order: self.order });
        };
        let lead = self.terms[&e].clone();
        if self.order == EXACT {
            if self.terms.len() == 1 {
                return Ok(Self::monomial(lead.recip(), -e));
            }
            return Err(SeriesError::UnboundedInverse);
        }
        // self = lead q^e (1 + u); 1/(1+u) has the relative precision of u.
        let rel = self.order - e;
        let unit = self.shift(-e).scale(&lead.recip());
        let (den, u) = integerize(&unit);
        let u: Vec<(i64, BigInt)> = u.into_iter().filter(|(k, _)| *k > 0).collect();
        // c_n = C_n / den^n, C_n = -sum_{k>=1} u_k den^(k-1) C_{n-k}
        let max_k = u.last().map(|(k, _)| *k).unwrap_or(0).min(rel);
        let mut den_pow = Vec::with_capacity(max_k.max(1) as usize);
        den_pow.push(BigInt::one());
        for k in 1..max_k.max(1) {
            let next = &den_pow[(k - 1) as usize] * &den;
            den_pow.push(next);
        }
        let weights: Vec<(i64, BigInt)> = u
            .into_iter()
            .filter(|(k, _)| *k < rel)
            .map(|(k, c)| {
                let w = c * &den_pow[(k - 1) as usize];
                (k, w)
            })
            .collect();
        let n = rel as usize;
        let mut big_c = vec![BigInt::zero(); n];
        big_c[0] = BigInt::one();
        for i in 1..n {
            let mut s = BigInt::zero();
            for (k, w) in &weights {
                let k = *k as usize;
                if k > i {
                    break;
                }
                if !big_c[i - k].is_zero() {
                    s += w * &big_c[i - k];
                }
            }
            big_c[i] = -s;
        }
        let inv_lead = lead.recip();
        let mut terms = BTreeMap::new();
        let mut den_n = BigInt::one();
        for (i, c) in big_c.into_iter().enumerate() {
            if i > 0 {
                den_n *= &den;
            }
            if !c.is_zero() {
                terms.insert(i as i64 - e, Rational::new(c, den_n.clone()) * &inv_lead);
            }
        }
        Ok(Self {
            terms,
            order: rel - e,
        })
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.invert()?))
    }

    /// Power by repeated squaring; negative exponents go through [`invert`](Self::invert).
    pub fn pow(&self, e: i64) -> Result<Self> {
        let mut base = if e < 0 { self.invert()? } else { self.clone() };
        let mut k = e.unsigned_abs();
        let mut acc = Self::one();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = Self::mul(&base, &base);
            }
        }
        Ok(acc)
    }

    /// Exponent, left and right coefficients of the first disagreement below
    /// the common order of `self` and `other`.
    pub fn first_mismatch(&self, other: &Self) -> Option<(i64, Rational, Rational)> {
        let order = self.order.min(other.order);
        let mut a = self.terms.range(..order).peekable();
        let mut b = other.terms.range(..order).peekable();
        loop {
            match (a.peek(), b.peek()) {
                (None, None) => return None,
                (Some((ea, ca)), None) => return Some((**ea, (*ca).clone(), Rational::zero())),
                (None, Some((eb, cb))) => return Some((**eb, Rational::zero(), (*cb).clone())),
                (Some((ea, ca)), Some((eb, cb))) => {
                    if ea < eb {
                        return Some((**ea, (*ca).clone(), Rational::zero()));
                    }
                    if eb < ea {
                        return Some((**eb, Rational::zero(), (*cb).clone()));
                    }
                    if ca != cb {
                        return Some((**ea, (*ca).clone(), (*cb).clone()));
                    }
                    a.next();
                    b.next();
                }
            }
        }
    }

    /// Equality of every coefficient below the common order.
    pub fn agrees_with(&self, other: &Self) -> bool {
        self.first_mismatch(other).is_none()
    }

    /// Builds a series from a dense integer vector starting at `lo`, divided by `den`.
    pub(crate) fn from_dense(lo: i64, coeffs: Vec<BigInt>, den: &BigInt, order: i64) -> Self {
        let terms = coeffs
            .into_iter()
            .enumerate()
            .filter(|(i, c)| !c.is_zero() && lo + (*i as i64) < order)
            .map(|(i, c)| (lo + i as i64, Rational::new(c, den.clone())))
            .collect();
        Self { terms, order }
    }
}

/// Common denominator and integer numerators of a series' coefficients.
fn integerize(s: &LaurentSeries) -> (BigInt, Vec<(i64, BigInt)>) {
    let mut den = BigInt::one();
    for c in s.terms.values() {
        if !c.denom().is_one() {
            den = den.lcm(c.denom());
        }
    }
    let nums = s
        .terms
        .iter()
        .map(|(e, c)| {
            let n = if c.denom() == &den {
                c.numer().clone()
            } else {
                c.numer() * (&den / c.denom())
            };
            (*e, n)
        })
        .collect();
    (den, nums)
}

impl fmt::Debug for LaurentSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for LaurentSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        const SHOWN: usize = 12;
        let mut first = true;
        for (e, c) in self.terms.iter().take(SHOWN) {
            let (sign, mag) = if c.is_negative() {
                ("-", -c)
            } else {
                ("+", c.clone())
            };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            match (*e, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "q")?,
                (1, false) => write!(f, "{mag}*q")?,
                (e, true) => write!(f, "q^{e}")?,
                (e, false) => write!(f, "{mag}*q^{e}")?,
            }
        }
        if self.terms.len() > SHOWN {
            write!(f, " + ...")?;
        }
        if first {
            write!(f, "0")?;
        }
        if self.order != EXACT {
            write!(f, " + O(q^{})", self.order)?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct SeriesRepr {
    order: Option<i64>,
    terms: Vec<(i64, String)>,
}

impl Serialize for LaurentSeries {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        SeriesRepr {
            order: (self.order != EXACT).then_some(self.order),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (*e, rational_to_string(c)))
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for LaurentSeries {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = SeriesRepr::deserialize(deserializer)?;
        let mut terms = Vec::with_capacity(repr.terms.len());
        for (e, s) in repr.terms {
            let c = parse_rational(&s).map_err(serde::de::Error::custom)?;
            terms.push((e, c));
        }
        Ok(Self::from_terms(terms, repr.order.unwrap_or(EXACT)))
    }
}

/// Renders as `"num/den"`, always with an explicit denominator.
pub fn rational_to_string(c: &Rational) -> String {
    format!("{}/{}", c.numer(), c.denom())
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || SeriesError::Parse {
        pos: 0,
        msg: format!("bad rational `{s}`"),
    };
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s.trim(), "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(n, d))
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<&LaurentSeries> for &LaurentSeries {
            type Output = LaurentSeries;
            fn $method(self, rhs: &LaurentSeries) -> LaurentSeries {
                LaurentSeries::$method(self, rhs)
            }
        }
        impl $trait<LaurentSeries> for LaurentSeries {
            type Output = LaurentSeries;
            fn $method(self, rhs: LaurentSeries) -> LaurentSeries {
                LaurentSeries::$method(&self, &rhs)
            }
        }
        impl $trait<&LaurentSeries> for LaurentSeries {
            type Output = LaurentSeries;
            fn $method(self, rhs: &LaurentSeries) -> LaurentSeries {
                LaurentSeries::$method(&self, rhs)
            }
        }
        impl $trait<LaurentSeries> for &LaurentSeries {
            type Output = LaurentSeries;
            fn $method(self, rhs: LaurentSeries) -> LaurentSeries {
                LaurentSeries::$method(self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Neg for LaurentSeries {
    type Output = LaurentSeries;
    fn neg(self) -> LaurentSeries {
        LaurentSeries::neg(&self)
    }
}

impl Neg for &LaurentSeries {
    type Output = LaurentSeries;
    fn neg(self) -> LaurentSeries {
        LaurentSeries::neg(self)
    }
}
