//! Exact bivariate polynomials in the rates `α` (written `a`) and `β`
//! (written `b`) with arbitrary-precision integer coefficients, plus the
//! univariate images used for q-specializations.
//!
//! Terms are kept in canonical form: no stored coefficient is ever zero, so
//! structural equality is polynomial equality.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Exact rational number used for concrete rate values and probabilities.
pub type Rat = BigRational;

/// Parses `"p/q"` or an integer literal.
pub fn parse_rat(text: &str) -> Result<Rat> {
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Err(Error::parse(0, "empty rational"));
    }
    trimmed.parse::<Rat>().map_err(|e| {
        Error::parse(0, format!("cannot read {trimmed:?} as a rational: {e}"))
    })
}

/// Exponent pair `(j, ℓ)` of the monomial `α^j β^ℓ`.
pub type Exponent = (u32, u32);

/// Graded-lex order: total degree descending, then α-degree descending.
fn graded_lex(x: &Exponent, y: &Exponent) -> Ordering {
    (y.0 + y.1).cmp(&(x.0 + x.1)).then(y.0.cmp(&x.0))
}

#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct BivarPoly {
    terms: BTreeMap<Exponent, BigInt>,
}

impl BivarPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0, 0)
    }

    pub fn alpha() -> Self {
        Self::monomial(1, 1, 0)
    }

    pub fn beta() -> Self {
        Self::monomial(1, 0, 1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0, 0)
    }

    /// `c · α^j β^ℓ`.
    pub fn monomial(c: impl Into<BigInt>, j: u32, l: u32) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((j, l), c);
        }
        Self { terms }
    }

    /// Builds a polynomial from possibly repeated, possibly zero terms.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Exponent, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    fn add_term(&mut self, e: Exponent, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&(0, 0)).is_some_and(|c| c.is_one())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Coefficient of `α^j β^ℓ`; zero when absent.
    pub fn coeff(&self, j: u32, l: u32) -> BigInt {
        self.terms.get(&(j, l)).cloned().unwrap_or_default()
    }

    /// Terms in graded-lex order.
    pub fn terms(&self) -> Vec<(Exponent, &BigInt)> {
        let mut v: Vec<_> = self.terms.iter().map(|(e, c)| (*e, c)).collect();
        v.sort_by(|x, y| graded_lex(&x.0, &y.0));
        v
    }

    /// Terms in the internal (α-degree, then β-degree) order.
    pub fn iter(&self) -> impl Iterator<Item = (&Exponent, &BigInt)> {
        self.terms.iter()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|(j, l)| j + l).max()
    }

    pub fn degree_alpha(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.0).max()
    }

    pub fn degree_beta(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.1).max()
    }

    /// If this polynomial is `c·α^j β^ℓ`, returns `(c, j, ℓ)`.
    pub fn as_monomial(&self) -> Option<(&BigInt, u32, u32)> {
        if self.terms.len() != 1 {
            return None;
        }
        self.terms.iter().next().map(|(e, c)| (c, e.0, e.1))
    }

    pub fn has_nonnegative_coefficients(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    pub fn scale(&self, s: &BigInt) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, c)| (*e, c * s)).collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Multiplies by the Laurent monomial `α^da β^db`. Returns `None` when a
    /// resulting exponent would be negative.
    pub fn shift(&self, da: i64, db: i64) -> Option<Self> {
        let mut terms = BTreeMap::new();
        for (&(j, l), c) in &self.terms {
            let nj = u32::try_from(i64::from(j) + da).ok()?;
            let nl = u32::try_from(i64::from(l) + db).ok()?;
            terms.insert((nj, nl), c.clone());
        }
        Some(Self { terms })
    }

    /// Exact division by `α^j β^ℓ`.
    pub fn div_monomial(&self, j: u32, l: u32) -> Option<Self> {
        self.shift(-i64::from(j), -i64::from(l))
    }

    /// Exact division by `divisor`, or `None` when it does not divide.
    ///
    /// Leading-term reduction in graded-lex order. For an exact quotient the
    /// leading term of the remainder is always divisible by the divisor's
    /// leading term, so the loop terminates with a zero remainder.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let (lead_e, lead_c) = divisor.leading_term()?;
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some((e, c)) = rem.leading_term() {
            if e.0 < lead_e.0 || e.1 < lead_e.1 {
                return None;
            }
            let (q, r) = c.div_rem(lead_c);
            if !r.is_zero() {
                return None;
            }
            let step = Self::monomial(q, e.0 - lead_e.0, e.1 - lead_e.1);
            rem -= &(&step * divisor);
            quot += &step;
        }
        Some(quot)
    }

    fn leading_term(&self) -> Option<(Exponent, &BigInt)> {
        self.terms.iter().min_by(|x, y| graded_lex(x.0, y.0)).map(|(e, c)| (*e, c))
    }

    /// Exact value at `α = a`, `β = b`.
    pub fn eval(&self, a: &Rat, b: &Rat) -> Rat {
        let mut a_pows: BTreeMap<u32, Rat> = BTreeMap::new();
        let mut b_pows: BTreeMap<u32, Rat> = BTreeMap::new();
        let mut acc = Rat::zero();
        for (&(j, l), c) in &self.terms {
            let aj = a_pows.entry(j).or_insert_with(|| Pow::pow(a, j)).clone();
            let bl = b_pows.entry(l).or_insert_with(|| Pow::pow(b, l)).clone();
            acc += Rat::from_integer(c.clone()) * aj * bl;
        }
        acc
    }

    /// Image under one of the q-specializations.
    pub fn substitute(&self, mode: Substitution) -> UniPoly {
        let mut out = UniPoly::zero();
        for (&(j, l), c) in &self.terms {
            out.add_term(mode.image_degree(j, l), c.clone());
        }
        out
    }

    /// Canonical JSON form `{"terms":[{"a":j,"b":l,"c":"<int>"}]}`.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("polynomial serializes")
    }
}

/// The three q-specializations of `(α, β)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Substitution {
    /// `α = q`, `β = q`
    QQ,
    /// `α = q`, `β = 1`
    Q1,
    /// `α = 1`, `β = q`
    OneQ,
}

impl Substitution {
    /// Degree in `q` of the image of `α^j β^ℓ`.
    pub fn image_degree(self, j: u32, l: u32) -> u32 {
        match self {
            Substitution::QQ => j + l,
            Substitution::Q1 => j,
            Substitution::OneQ => l,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Substitution::QQ => "qq",
            Substitution::Q1 => "q1",
            Substitution::OneQ => "1q",
        }
    }
}

impl FromStr for Substitution {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "qq" => Ok(Substitution::QQ),
            "q1" => Ok(Substitution::Q1),
            "1q" => Ok(Substitution::OneQ),
            other => Err(Error::parse(0, format!("unknown specialization {other:?}; expected qq, q1 or 1q"))),
        }
    }
}

impl fmt::Display for Substitution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

// ---------------------------------------------------------------------------
// Arithmetic

impl<'a> Add<&'a BivarPoly> for &BivarPoly {
    type Output = BivarPoly;
    fn add(self, rhs: &'a BivarPoly) -> BivarPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for BivarPoly {
    type Output = BivarPoly;
    fn add(mut self, rhs: BivarPoly) -> BivarPoly {
        self += &rhs;
        self
    }
}

impl<'a> AddAssign<&'a BivarPoly> for BivarPoly {
    fn add_assign(&mut self, rhs: &'a BivarPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl AddAssign for BivarPoly {
    fn add_assign(&mut self, rhs: BivarPoly) {
        for (e, c) in rhs.terms {
            self.add_term(e, c);
        }
    }
}

impl Neg for BivarPoly {
    type Output = BivarPoly;
    fn neg(self) -> BivarPoly {
        BivarPoly {
            terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect(),
        }
    }
}

impl Neg for &BivarPoly {
    type Output = BivarPoly;
    fn neg(self) -> BivarPoly {
        -self.clone()
    }
}

impl<'a> SubAssign<&'a BivarPoly> for BivarPoly {
    fn sub_assign(&mut self, rhs: &'a BivarPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, -c.clone());
        }
    }
}

impl SubAssign for BivarPoly {
    fn sub_assign(&mut self, rhs: BivarPoly) {
        for (e, c) in rhs.terms {
            self.add_term(e, -c);
        }
    }
}

impl<'a> Sub<&'a BivarPoly> for &BivarPoly {
    type Output = BivarPoly;
    fn sub(self, rhs: &'a BivarPoly) -> BivarPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for BivarPoly {
    type Output = BivarPoly;
    fn sub(mut self, rhs: BivarPoly) -> BivarPoly {
        self -= &rhs;
        self
    }
}

impl<'a> Mul<&'a BivarPoly> for &BivarPoly {
    type Output = BivarPoly;
    fn mul(self, rhs: &'a BivarPoly) -> BivarPoly {
        let mut out = BivarPoly::zero();
        for (&(j1, l1), c1) in &self.terms {
            for (&(j2, l2), c2) in &rhs.terms {
                out.add_term((j1 + j2, l1 + l2), c1 * c2);
            }
        }
        out
    }
}

impl Mul for BivarPoly {
    type Output = BivarPoly;
    fn mul(self, rhs: BivarPoly) -> BivarPoly {
        &self * &rhs
    }
}

impl<'a> MulAssign<&'a BivarPoly> for BivarPoly {
    fn mul_assign(&mut self, rhs: &'a BivarPoly) {
        *self = &*self * rhs;
    }
}

impl Sum for BivarPoly {
    fn sum<I: Iterator<Item = BivarPoly>>(iter: I) -> Self {
        iter.fold(BivarPoly::zero(), |acc, p| acc + p)
    }
}

impl<'a> Sum<&'a BivarPoly> for BivarPoly {
    fn sum<I: Iterator<Item = &'a BivarPoly>>(iter: I) -> Self {
        let mut acc = BivarPoly::zero();
        for p in iter {
            acc += p;
        }
        acc
    }
}

impl Product for BivarPoly {
    fn product<I: Iterator<Item = BivarPoly>>(iter: I) -> Self {
        iter.fold(BivarPoly::one(), |acc, p| &acc * &p)
    }
}

impl From<i64> for BivarPoly {
    fn from(c: i64) -> Self {
        BivarPoly::constant(c)
    }
}

impl From<BigInt> for BivarPoly {
    fn from(c: BigInt) -> Self {
        BivarPoly::constant(c)
    }
}

// ---------------------------------------------------------------------------
// Text form

fn write_signed_terms<I>(f: &mut fmt::Formatter<'_>, terms: I) -> fmt::Result
where
    I: IntoIterator<Item = (bool, String)>,
{
    let mut first = true;
    for (negative, body) in terms {
        match (first, negative) {
            (true, true) => write!(f, "-{body}")?,
            (true, false) => write!(f, "{body}")?,
            (false, true) => write!(f, " - {body}")?,
            (false, false) => write!(f, " + {body}")?,
        }
        first = false;
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

fn monomial_body(c: &BigInt, j: u32, l: u32) -> String {
    let mut factors = Vec::new();
    let mag = c.abs();
    if (j == 0 && l == 0) || !mag.is_one() {
        factors.push(mag.to_string());
    }
    match j {
        0 => {}
        1 => factors.push("a".to_owned()),
        _ => factors.push(format!("a^{j}")),
    }
    match l {
        0 => {}
        1 => factors.push("b".to_owned()),
        _ => factors.push(format!("b^{l}")),
    }
    factors.join("*")
}

impl fmt::Display for BivarPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_signed_terms(
            f,
            self.terms()
                .into_iter()
                .map(|((j, l), c)| (c.is_negative(), monomial_body(c, j, l))),
        )
    }
}

impl fmt::Debug for BivarPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BivarPoly({self})")
    }
}

struct Cursor<'s> {
    chars: Vec<(usize, char)>,
    at: usize,
    len: usize,
    _src: &'s str,
}

impl<'s> Cursor<'s> {
    fn new(src: &'s str) -> Self {
        let chars: Vec<_> = src.char_indices().filter(|(_, c)| !c.is_whitespace()).collect();
        Self {
            chars,
            at: 0,
            len: src.len(),
            _src: src,
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.at).map(|&(_, c)| c)
    }

    fn pos(&self) -> usize {
        self.chars.get(self.at).map_or(self.len, |&(p, _)| p)
    }

    fn eat(&mut self, want: char) -> bool {
        if self.peek() == Some(want) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn sign(&mut self) -> Option<bool> {
        match self.peek() {
            Some('+') => {
                self.at += 1;
                Some(false)
            }
            Some('-') | Some('\u{2212}') => {
                self.at += 1;
                Some(true)
            }
            _ => None,
        }
    }

    fn digits(&mut self) -> Option<String> {
        let mut s = String::new();
        while let Some(c) = self.peek().filter(|c| c.is_ascii_digit()) {
            s.push(c);
            self.at += 1;
        }
        (!s.is_empty()).then_some(s)
    }

    fn exponent(&mut self) -> Result<u32> {
        if !self.eat('^') {
            return Ok(1);
        }
        let pos = self.pos();
        let digits = self.digits().ok_or_else(|| Error::parse(pos, "expected an exponent after '^'"))?;
        digits.parse().map_err(|_| Error::parse(pos, "exponent too large"))
    }

    /// term = [int]["*"]["a"["^"int]]["*"]["b"["^"int]]
    fn term(&mut self) -> Result<(BigInt, u32, u32)> {
        let start = self.pos();
        let coeff = self.digits();
        let mut star_pending = coeff.is_some() && self.eat('*');
        let mut j = 0;
        let mut l = 0;
        let mut saw_var = false;
        if self.eat('a') {
            j = self.exponent()?;
            saw_var = true;
            star_pending = self.eat('*');
        }
        if self.eat('b') {
            l = self.exponent()?;
            saw_var = true;
            star_pending = false;
        }
        if star_pending {
            return Err(Error::parse(self.pos(), "expected a variable after '*'"));
        }
        if coeff.is_none() && !saw_var {
            return Err(Error::parse(start, "expected a coefficient or a variable"));
        }
        let c = match coeff {
            Some(d) => d.parse::<BigInt>().map_err(|e| Error::parse(start, e.to_string()))?,
            None => BigInt::one(),
        };
        Ok((c, j, l))
    }
}

impl FromStr for BivarPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut cur = Cursor::new(s);
        if cur.peek().is_none() {
            return Err(Error::parse(0, "empty polynomial"));
        }
        let mut out = BivarPoly::zero();
        let mut first = true;
        while cur.peek().is_some() {
            let negative = match cur.sign() {
                Some(neg) => neg,
                None if first => false,
                None => return Err(Error::parse(cur.pos(), "expected '+' or '-' between terms")),
            };
            let (c, j, l) = cur.term()?;
            out.add_term((j, l), if negative { -c } else { c });
            first = false;
        }
        Ok(out)
    }
}

// ---------------------------------------------------------------------------
// JSON form

#[derive(Serialize, Deserialize)]
struct JsonTerm {
    a: u32,
    b: u32,
    c: String,
}

#[derive(Serialize, Deserialize)]
struct JsonPoly {
    terms: Vec<JsonTerm>,
}

impl Serialize for BivarPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        JsonPoly {
            terms: self
                .terms()
                .into_iter()
                .map(|((a, b), c)| JsonTerm { a, b, c: c.to_string() })
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for BivarPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = JsonPoly::deserialize(deserializer)?;
        let mut out = BivarPoly::zero();
        for t in raw.terms {
            let c: BigInt = t.c.parse().map_err(serde::de::Error::custom)?;
            out.add_term((t.a, t.b), c);
        }
        Ok(out)
    }
}

// ---------------------------------------------------------------------------
// Univariate images

/// Polynomial in a single variable `q` with big-integer coefficients.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct UniPoly {
    terms: BTreeMap<u32, BigInt>,
}

impl UniPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    /// From coefficients listed lowest degree first.
    pub fn from_coeffs<C: Into<BigInt>>(coeffs: impl IntoIterator<Item = C>) -> Self {
        let mut p = Self::zero();
        for (d, c) in coeffs.into_iter().enumerate() {
            p.add_term(d as u32, c.into());
        }
        p
    }

    fn add_term(&mut self, d: u32, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(d).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&d);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, d: u32) -> BigInt {
        self.terms.get(&d).cloned().unwrap_or_default()
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().copied()
    }

    /// Lowest degree carrying a nonzero coefficient.
    pub fn valuation(&self) -> Option<u32> {
        self.terms.keys().next().copied()
    }

    /// Exact division by `q^d`.
    pub fn div_q_pow(&self, d: u32) -> Option<Self> {
        let mut terms = BTreeMap::new();
        for (&e, c) in &self.terms {
            terms.insert(e.checked_sub(d)?, c.clone());
        }
        Some(Self { terms })
    }

    pub fn eval(&self, q: &Rat) -> Rat {
        self.terms
            .iter()
            .map(|(&d, c)| Rat::from_integer(c.clone()) * Pow::pow(q, d))
            .fold(Rat::zero(), |acc, t| acc + t)
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_signed_terms(
            f,
            self.terms.iter().rev().map(|(&d, c)| {
                let mag = c.abs();
                let coeff = if d == 0 || !mag.is_one() { mag.to_string() } else { String::new() };
                let var = match d {
                    0 => String::new(),
                    1 => "q".to_owned(),
                    _ => format!("q^{d}"),
                };
                (c.is_negative(), format!("{coeff}{var}"))
            }),
        )
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(s: &str) -> BivarPoly {
        s.parse().unwrap()
    }

    fn r(s: &str) -> Rat {
        parse_rat(s).unwrap()
    }

    #[test]
    fn add_identity_and_cancellation() {
        let ab = &BivarPoly::alpha() + &BivarPoly::beta();
        assert_eq!(&ab + &BivarPoly::zero(), ab);
        let a_minus_b = &BivarPoly::alpha() - &BivarPoly::beta();
        let sum = &ab + &a_minus_b;
        assert_eq!(sum, BivarPoly::monomial(2, 1, 0));
        assert_eq!(sum.num_terms(), 1);
        assert!((&ab - &ab).is_zero());
    }

    #[test]
    fn mul_examples() {
        assert_eq!(&BivarPoly::alpha() * &BivarPoly::beta(), BivarPoly::monomial(1, 1, 1));
        let ab = p("a + b");
        assert_eq!(&ab * &ab, p("a^2 + 2*a*b + b^2"));
        // boundary weight times path weight of the 5x9 example
        let total = &BivarPoly::monomial(1, 5, 9) * &BivarPoly::monomial(1, 4, 3);
        assert_eq!(total, BivarPoly::monomial(1, 9, 12));
    }

    #[test]
    fn eval_examples() {
        assert_eq!(p("a + b").eval(&r("1"), &r("1")), r("2"));
        let row = p("2*a^5 + 3*a^4 + 4*a^3 + 5*a^2 + 6*a + 1");
        assert_eq!(row.eval(&r("1"), &r("7/3")), r("21"));
        let q = p("3*a^2*b + 7 - b");
        assert_eq!(q.eval(&r("0"), &r("0")), r("7"));
        assert_eq!(p("a^2 + b").eval(&r("1/2"), &r("-1/3")), r("-1/12"));
    }

    #[test]
    fn coeff_examples() {
        let q = p("a^2 + 2*a*b");
        assert_eq!(q.coeff(1, 1), BigInt::from(2));
        assert_eq!(q.coeff(2, 0), BigInt::from(1));
        assert_eq!(q.coeff(3, 5), BigInt::zero());
        assert_eq!(q.coeff(0, 0), BigInt::zero());
    }

    #[test]
    fn substitute_examples() {
        assert_eq!(p("a*b").substitute(Substitution::QQ), UniPoly::from_coeffs([0, 0, 1]));
        assert_eq!(p("a^3*b + b^2").substitute(Substitution::Q1).to_string(), "q^3 + 1");
        assert_eq!(p("a^3*b + b^2").substitute(Substitution::OneQ).to_string(), "q^2 + q");
    }

    #[test]
    fn format_and_parse() {
        assert_eq!(p("a^2*b").to_string(), "a^2*b");
        assert_eq!(BivarPoly::monomial(1, 2, 1).to_string(), "a^2*b");
        assert_eq!(p("a + b"), BivarPoly::from_terms([((1, 0), 1), ((0, 1), 1)]));
        assert_eq!(p("b^2 + 1 - 3a*b + a^3").to_string(), "a^3 - 3*a*b + b^2 + 1");
        assert_eq!(p(" - 2 * a ^ 2 * b ^3 ").to_string(), "-2*a^2*b^3");
        assert_eq!(p("2ab"), BivarPoly::monomial(2, 1, 1));
        assert_eq!(p("a - a").to_string(), "0");
        assert_eq!(p("0"), BivarPoly::zero());
        assert_eq!(p("5"), BivarPoly::constant(5));
        assert_eq!(p("a \u{2212} b").to_string(), "a - b");
    }

    #[test]
    fn parse_errors_report_position() {
        for (text, pos) in [("a +", 3), ("a a", 2), ("2*", 2), ("a^", 2), ("x", 0), ("", 0), ("a + * b", 4)] {
            match text.parse::<BivarPoly>() {
                Err(Error::Parse { position, .. }) => assert_eq!(position, pos, "{text:?}"),
                other => panic!("{text:?} parsed to {other:?}"),
            }
        }
    }

    #[test]
    fn json_form_is_graded_lex() {
        let q = p("b^2 + a*b + 3*a^2 + 1");
        let v = q.to_json();
        assert_eq!(
            v.to_string(),
            r#"{"terms":[{"a":2,"b":0,"c":"3"},{"a":1,"b":1,"c":"1"},{"a":0,"b":2,"c":"1"},{"a":0,"b":0,"c":"1"}]}"#
        );
        let back: BivarPoly = serde_json::from_value(v).unwrap();
        assert_eq!(back, q);
    }

    #[test]
    fn exact_division() {
        let x = p("a^2 + 2*a*b + b^2 + a + b");
        let d = p("a + b");
        assert_eq!(x.div_exact(&d), Some(p("a + b + 1")));
        assert_eq!(p("a^2 + 1").div_exact(&d), None);
        assert_eq!(p("6*a*b").div_exact(&p("4*a")), None);
        assert_eq!(BivarPoly::zero().div_exact(&d), Some(BivarPoly::zero()));
        assert_eq!(d.div_exact(&BivarPoly::zero()), None);
        assert_eq!(p("a^3*b^2").div_monomial(1, 2), Some(p("a^2")));
        assert_eq!(p("a^3 + b").div_monomial(1, 0), None);
    }

    #[test]
    fn univariate_format_and_shift() {
        let u = UniPoly::from_coeffs([1, 6, 5, 4, 3, 2]);
        assert_eq!(u.to_string(), "2q^5 + 3q^4 + 4q^3 + 5q^2 + 6q + 1");
        let shifted = UniPoly::from_coeffs([0, 0, 1, 1]);
        assert_eq!(shifted.div_q_pow(2).unwrap().to_string(), "q + 1");
        assert!(shifted.div_q_pow(3).is_none());
        assert_eq!(UniPoly::from_coeffs([-1, 0, -1]).to_string(), "-q^2 - 1");
        assert_eq!(UniPoly::zero().to_string(), "0");
    }

    fn arb_poly() -> impl Strategy<Value = BivarPoly> {
        prop::collection::vec(((0u32..5, 0u32..5), -20i64..20), 0..6).prop_map(BivarPoly::from_terms)
    }

    fn arb_rat() -> impl Strategy<Value = Rat> {
        (-9i64..10, 1i64..7).prop_map(|(n, d)| Rat::new(n.into(), d.into()))
    }

    proptest! {
        #[test]
        fn ring_axioms(x in arb_poly(), y in arb_poly(), z in arb_poly()) {
            prop_assert_eq!(&x + &y, &y + &x);
            prop_assert_eq!(&x * &y, &y * &x);
            prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
            prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
            prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
            prop_assert_eq!(&x * &BivarPoly::one(), x.clone());
            prop_assert!((&x - &x).is_zero());
            prop_assert!(x.iter().all(|(_, c)| !c.is_zero()));
        }

        #[test]
        fn eval_is_a_ring_homomorphism(x in arb_poly(), y in arb_poly(), a in arb_rat(), b in arb_rat()) {
            prop_assert_eq!((&x * &y).eval(&a, &b), x.eval(&a, &b) * y.eval(&a, &b));
            prop_assert_eq!((&x + &y).eval(&a, &b), x.eval(&a, &b) + y.eval(&a, &b));
        }

        #[test]
        fn substitute_commutes_with_eval(x in arb_poly(), t in arb_rat()) {
            let one = Rat::one();
            prop_assert_eq!(x.substitute(Substitution::QQ).eval(&t), x.eval(&t, &t));
            prop_assert_eq!(x.substitute(Substitution::Q1).eval(&t), x.eval(&t, &one));
            prop_assert_eq!(x.substitute(Substitution::OneQ).eval(&t), x.eval(&one, &t));
        }

        #[test]
        fn text_and_json_round_trip(x in arb_poly()) {
            let text = x.to_string();
            let back: BivarPoly = text.parse().unwrap();
            prop_assert_eq!(&back, &x);
            prop_assert_eq!(back.to_string(), text);
            let json: BivarPoly = serde_json::from_value(x.to_json()).unwrap();
            prop_assert_eq!(json, x);
        }

        #[test]
        fn div_exact_inverts_mul(x in arb_poly(), y in arb_poly()) {
            prop_assume!(!y.is_zero());
            prop_assert_eq!((&x * &y).div_exact(&y), Some(x));
        }
    }
}
