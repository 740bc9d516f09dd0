//! Exact commutative base rings: ℤ, ℤ/n and ℚ.
//!
//! Every ring is a small context value; elements are plain data and all
//! arithmetic goes through the context so that ℤ/n can reduce.

use std::fmt;
use std::hash::Hash;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Textual ring descriptor: `int`, `zmod:<n>` or `rat`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RingSpec {
    Integers,
    Modular(u64),
    Rationals,
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingSpec::Integers => write!(f, "int"),
            RingSpec::Modular(n) => write!(f, "zmod:{n}"),
            RingSpec::Rationals => write!(f, "rat"),
        }
    }
}

impl FromStr for RingSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "int" => Ok(RingSpec::Integers),
            "rat" => Ok(RingSpec::Rationals),
            other => {
                let n = other
                    .strip_prefix("zmod:")
                    .ok_or_else(|| Error::Parse(format!("unknown ring descriptor `{other}`")))?;
                let n: u64 = n
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad modulus `{n}`")))?;
                Zmod::new(n)?;
                Ok(RingSpec::Modular(n))
            }
        }
    }
}

/// A commutative ring with unit and exact arithmetic.
pub trait Ring: Clone + fmt::Debug + PartialEq + Send + Sync + 'static {
    type Elem: Clone + fmt::Debug + PartialEq + Eq + Hash + Ord + Send + Sync;

    fn spec(&self) -> RingSpec;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, v: i64) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// The inverse of `a` when it exists.
    fn inverse(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn parse_elem(&self, s: &str) -> Result<Self::Elem>;
    fn format_elem(&self, a: &Self::Elem) -> String;
    /// All elements, for finite rings.
    fn elements(&self) -> Option<Vec<Self::Elem>>;
    /// A random element; infinite rings draw small values.
    fn sample<G: rand::Rng>(&self, rng: &mut G) -> Self::Elem;
    /// True when some nonzero scalar kills every entry of `xs`.
    fn annihilated(&self, xs: &[Self::Elem]) -> bool;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        *a == self.zero()
    }

    fn is_invertible(&self, a: &Self::Elem) -> bool {
        self.inverse(a).is_some()
    }

    fn invert(&self, a: &Self::Elem) -> Result<Self::Elem> {
        self.inverse(a)
            .ok_or_else(|| Error::NotInvertible(self.format_elem(a)))
    }

    fn pow(&self, a: &Self::Elem, k: u32) -> Self::Elem {
        (0..k).fold(self.one(), |acc, _| self.mul(&acc, a))
    }

    fn is_finite(&self) -> bool {
        self.elements().is_some()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Integers;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Rationals;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Zmod {
    n: u64,
}

impl Zmod {
    pub fn new(n: u64) -> Result<Self> {
        if n < 2 || n >= 1 << 63 {
            return Err(Error::Parse(format!("modulus {n} out of range [2, 2^63)")));
        }
        Ok(Zmod { n })
    }

    pub fn modulus(&self) -> u64 {
        self.n
    }

    fn reduce_i128(&self, v: i128) -> u64 {
        v.rem_euclid(self.n as i128) as u64
    }

    fn reduce_big(&self, v: &BigInt) -> u64 {
        let n = BigInt::from(self.n);
        v.mod_floor(&n).to_u64().expect("residue fits")
    }
}

/// Bound for random integer and rational samples.
pub const SAMPLE_BOUND: i64 = 5;

impl Ring for Integers {
    type Elem = BigInt;

    fn spec(&self) -> RingSpec {
        RingSpec::Integers
    }
    fn zero(&self) -> BigInt {
        BigInt::zero()
    }
    fn one(&self) -> BigInt {
        BigInt::one()
    }
    fn from_i64(&self, v: i64) -> BigInt {
        BigInt::from(v)
    }
    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }
    fn sub(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a - b
    }
    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }
    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }
    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }
    fn inverse(&self, a: &BigInt) -> Option<BigInt> {
        (a.abs().is_one()).then(|| a.clone())
    }
    fn parse_elem(&self, s: &str) -> Result<BigInt> {
        s.trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad integer `{s}`")))
    }
    fn format_elem(&self, a: &BigInt) -> String {
        a.to_string()
    }
    fn elements(&self) -> Option<Vec<BigInt>> {
        None
    }
    fn sample<G: rand::Rng>(&self, rng: &mut G) -> BigInt {
        BigInt::from(rng.gen_range(-SAMPLE_BOUND..=SAMPLE_BOUND))
    }
    fn annihilated(&self, xs: &[BigInt]) -> bool {
        xs.iter().all(Zero::is_zero)
    }
}

impl Integers {
    /// `b / a` when `a` divides `b` exactly.
    pub fn div_exact(&self, b: &BigInt, a: &BigInt) -> Option<BigInt> {
        if a.is_zero() {
            return b.is_zero().then(BigInt::zero);
        }
        let (q, r) = b.div_rem(a);
        r.is_zero().then_some(q)
    }
}

impl Ring for Zmod {
    type Elem = u64;

    fn spec(&self) -> RingSpec {
        RingSpec::Modular(self.n)
    }
    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn from_i64(&self, v: i64) -> u64 {
        self.reduce_i128(v as i128)
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        let (s, overflow) = a.overflowing_add(*b);
        if overflow || s >= self.n {
            s.wrapping_sub(self.n)
        } else {
            s
        }
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            self.n - (b - a)
        }
    }
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.n - a
        }
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        if self.n <= 1 << 32 {
            a * b % self.n
        } else {
            ((*a as u128 * *b as u128) % self.n as u128) as u64
        }
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn inverse(&self, a: &u64) -> Option<u64> {
        let e = (*a as i128).extended_gcd(&(self.n as i128));
        e.gcd.is_one().then(|| self.reduce_i128(e.x))
    }
    fn parse_elem(&self, s: &str) -> Result<u64> {
        let v: BigInt = s
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad residue `{s}`")))?;
        Ok(self.reduce_big(&v))
    }
    fn format_elem(&self, a: &u64) -> String {
        a.to_string()
    }
    fn elements(&self) -> Option<Vec<u64>> {
        Some((0..self.n).collect())
    }
    fn sample<G: rand::Rng>(&self, rng: &mut G) -> u64 {
        rng.gen_range(0..self.n)
    }
    fn annihilated(&self, xs: &[u64]) -> bool {
        xs.iter().fold(self.n, |g, x| g.gcd(x)) > 1
    }
}

impl Ring for Rationals {
    type Elem = BigRational;

    fn spec(&self) -> RingSpec {
        RingSpec::Rationals
    }
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn from_i64(&self, v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn inverse(&self, a: &BigRational) -> Option<BigRational> {
        (!a.is_zero()).then(|| a.recip())
    }
    fn parse_elem(&self, s: &str) -> Result<BigRational> {
        let s = s.trim();
        let bad = || Error::Parse(format!("bad rational `{s}`"));
        match s.split_once('/') {
            Some((p, q)) => {
                let p: BigInt = p.trim().parse().map_err(|_| bad())?;
                let q: BigInt = q.trim().parse().map_err(|_| bad())?;
                if q.is_zero() {
                    return Err(bad());
                }
                Ok(BigRational::new(p, q))
            }
            None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
        }
    }
    fn format_elem(&self, a: &BigRational) -> String {
        a.to_string()
    }
    fn elements(&self) -> Option<Vec<BigRational>> {
        None
    }
    fn sample<G: rand::Rng>(&self, rng: &mut G) -> BigRational {
        let p = rng.gen_range(-SAMPLE_BOUND..=SAMPLE_BOUND);
        let q = rng.gen_range(1..=SAMPLE_BOUND);
        BigRational::new(p.into(), q.into())
    }
    fn annihilated(&self, xs: &[BigRational]) -> bool {
        xs.iter().all(Zero::is_zero)
    }
}

/// Runs `$body` with `$r` bound to the concrete ring named by a [`RingSpec`].
///
/// The enclosing function must return a `Result` whose error converts from
/// [`Error`](crate::Error).
#[macro_export]
macro_rules! with_ring {
    ($spec:expr, |$r:ident| $body:expr) => {
        match $spec {
            $crate::ring::RingSpec::Integers => {
                let $r = $crate::ring::Integers;
                $body
            }
            $crate::ring::RingSpec::Rationals => {
                let $r = $crate::ring::Rationals;
                $body
            }
            $crate::ring::RingSpec::Modular(n) => {
                let $r = $crate::ring::Zmod::new(n)?;
                $body
            }
        }
    };
}

/// Evaluates an expression built from `+`, `-`, `*`, parentheses and
/// constants. Constants may be fractions `p/q`; over ℤ/n the denominator
/// must be a unit, over ℤ the quotient must be exact.
pub fn ring_eval<R: Ring>(ring: &R, expr: &str) -> Result<R::Elem> {
    let tokens = tokenize(expr)?;
    let mut p = Parser {
        ring,
        tokens: &tokens,
        pos: 0,
    };
    let v = p.sum()?;
    if p.pos != tokens.len() {
        return Err(Error::Parse(format!("trailing input in `{expr}`")));
    }
    Ok(v)
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Plus,
    Minus,
    Times,
    Slash,
    Open,
    Close,
}

fn tokenize(s: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let chars: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            ' ' | '\t' => {}
            '+' => out.push(Tok::Plus),
            '-' | '−' => out.push(Tok::Minus),
            '*' | '×' => out.push(Tok::Times),
            '/' => out.push(Tok::Slash),
            '(' => out.push(Tok::Open),
            ')' => out.push(Tok::Close),
            d if d.is_ascii_digit() => {
                let start = i;
                while i + 1 < chars.len() && chars[i + 1].is_ascii_digit() {
                    i += 1;
                }
                let lit: String = chars[start..=i].iter().collect();
                out.push(Tok::Num(lit.parse().expect("digits")));
            }
            other => return Err(Error::Parse(format!("unexpected `{other}` in `{s}`"))),
        }
        i += 1;
    }
    Ok(out)
}

struct Parser<'a, R: Ring> {
    ring: &'a R,
    tokens: &'a [Tok],
    pos: usize,
}

impl<R: Ring> Parser<'_, R> {
    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.pos)
    }

    fn sum(&mut self) -> Result<R::Elem> {
        let mut acc = self.product()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    acc = self.ring.add(&acc, &self.product()?);
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    acc = self.ring.sub(&acc, &self.product()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn product(&mut self) -> Result<R::Elem> {
        let mut acc = self.unary()?;
        while let Some(Tok::Times) = self.peek() {
            self.pos += 1;
            acc = self.ring.mul(&acc, &self.unary()?);
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<R::Elem> {
        match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                Ok(self.ring.neg(&self.unary()?))
            }
            Some(Tok::Plus) => {
                self.pos += 1;
                self.unary()
            }
            _ => self.atom(),
        }
    }

    fn atom(&mut self) -> Result<R::Elem> {
        match self.tokens.get(self.pos).cloned() {
            Some(Tok::Open) => {
                self.pos += 1;
                let v = self.sum()?;
                if self.peek() != Some(&Tok::Close) {
                    return Err(Error::Parse("missing `)`".into()));
                }
                self.pos += 1;
                Ok(v)
            }
            Some(Tok::Num(p)) => {
                self.pos += 1;
                let num = self.ring.parse_elem(&p.to_string())?;
                if self.peek() != Some(&Tok::Slash) {
                    return Ok(num);
                }
                self.pos += 1;
                let Some(Tok::Num(q)) = self.tokens.get(self.pos).cloned() else {
                    return Err(Error::Parse("expected denominator".into()));
                };
                self.pos += 1;
                self.fraction(num, &p, &q)
            }
            other => Err(Error::Parse(format!("unexpected token {other:?}"))),
        }
    }

    fn fraction(&self, num: R::Elem, p: &BigInt, q: &BigInt) -> Result<R::Elem> {
        match self.ring.spec() {
            RingSpec::Integers => {
                let quot = Integers
                    .div_exact(p, q)
                    .ok_or_else(|| Error::NotInvertible(q.to_string()))?;
                self.ring.parse_elem(&quot.to_string())
            }
            _ => {
                let den = self.ring.parse_elem(&q.to_string())?;
                Ok(self.ring.mul(&num, &self.ring.invert(&den)?))
            }
        }
    }
}
