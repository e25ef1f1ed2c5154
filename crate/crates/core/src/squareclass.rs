//! Rational square classes and places of Q.
//!
//! A class in `Q^×/(Q^×)²` is stored as a sign and the sorted list of primes
//! that divide its squarefree representative. Factorization is trial
//! division up to [`TRIAL_DIVISION_LIMIT`]; a cofactor left over below
//! `TRIAL_DIVISION_LIMIT²` is prime, anything larger is refused.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::numeric::Rational;

pub const TRIAL_DIVISION_LIMIT: u64 = 1_000_000;

/// Primes with odd exponent in `n > 0`.
fn odd_primes_of(n: &BigUint) -> Result<Vec<u64>> {
    match n.to_u128() {
        Some(small) => odd_primes_of_u128(small),
        None => odd_primes_of_big(n),
    }
}

fn odd_primes_of_u128(n: u128) -> Result<Vec<u64>> {
    let mut rest = n;
    let mut out = Vec::new();
    let mut d: u64 = 2;
    while d <= TRIAL_DIVISION_LIMIT && (d as u128) * (d as u128) <= rest {
        let mut e = 0u32;
        while rest % d as u128 == 0 {
            rest /= d as u128;
            e += 1;
        }
        if e % 2 == 1 {
            out.push(d);
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if rest != 1 {
        if rest >= (d as u128) * (d as u128) {
            return Err(Error::FactorizationLimit(format!(
                "{n} has a cofactor {rest} beyond trial division to {TRIAL_DIVISION_LIMIT}"
            )));
        }
        out.push(rest as u64);
    }
    out.sort_unstable();
    Ok(out)
}

fn odd_primes_of_big(n: &BigUint) -> Result<Vec<u64>> {
    let mut rest = n.clone();
    let mut out = Vec::new();
    let mut d: u64 = 2;
    while d <= TRIAL_DIVISION_LIMIT {
        if BigUint::from(d) * BigUint::from(d) > rest {
            break;
        }
        let bd = BigUint::from(d);
        let mut e = 0u32;
        loop {
            let (q, r) = rest.div_rem(&bd);
            if !r.is_zero() {
                break;
            }
            rest = q;
            e += 1;
        }
        if e % 2 == 1 {
            out.push(d);
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if !rest.is_one() {
        // No factor ≤ min(d, limit) survives, so rest is prime when it is
        // below the square of the search bound.
        let bound = BigUint::from(d) * BigUint::from(d);
        if rest >= bound {
            return Err(Error::FactorizationLimit(format!(
                "{n} has a cofactor {rest} beyond trial division to {TRIAL_DIVISION_LIMIT}"
            )));
        }
        out.push(rest.to_u64().expect("cofactor below 10^12"));
    }
    out.sort_unstable();
    Ok(out)
}

fn merge_xor(a: &[u64], b: &[u64]) -> Vec<u64> {
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::with_capacity(a.len() + b.len());
    while i < a.len() || j < b.len() {
        match (a.get(i), b.get(j)) {
            (Some(x), Some(y)) => match x.cmp(y) {
                Ordering::Less => {
                    out.push(*x);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(*y);
                    j += 1;
                }
                Ordering::Equal => {
                    i += 1;
                    j += 1;
                }
            },
            (Some(x), None) => {
                out.push(*x);
                i += 1;
            }
            (None, Some(y)) => {
                out.push(*y);
                j += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    out
}

/// A class of `Q^×` modulo squares, represented by a squarefree integer.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct SquareClass {
    negative: bool,
    primes: Vec<u64>,
}

impl SquareClass {
    pub fn one() -> Self {
        SquareClass {
            negative: false,
            primes: Vec::new(),
        }
    }

    pub fn from_int(n: i64) -> Result<Self> {
        Self::from_bigint(&BigInt::from(n))
    }

    pub fn from_bigint(n: &BigInt) -> Result<Self> {
        if n.is_zero() {
            return Err(Error::ZeroEntry);
        }
        Ok(SquareClass {
            negative: n.sign() == Sign::Minus,
            primes: odd_primes_of(n.magnitude())?,
        })
    }

    /// `p/q` has the class of `p·q`.
    pub fn from_rational(r: &Rational) -> Result<Self> {
        let a = Self::from_bigint(r.numer())?;
        let b = Self::from_bigint(r.denom())?;
        Ok(a.mul(&b))
    }

    pub fn is_one(&self) -> bool {
        !self.negative && self.primes.is_empty()
    }

    pub fn is_negative(&self) -> bool {
        self.negative
    }

    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    pub fn contains_prime(&self, p: u64) -> bool {
        self.primes.binary_search(&p).is_ok()
    }

    pub fn mul(&self, other: &SquareClass) -> SquareClass {
        SquareClass {
            negative: self.negative != other.negative,
            primes: merge_xor(&self.primes, &other.primes),
        }
    }

    /// The squarefree representative.
    pub fn value(&self) -> BigInt {
        let mag = self
            .primes
            .iter()
            .fold(BigInt::one(), |acc, &p| acc * BigInt::from(p));
        if self.negative {
            -mag
        } else {
            mag
        }
    }

    /// The representative reduced modulo `m`, in `0..m`.
    pub fn residue(&self, m: u64) -> u64 {
        let m128 = m as u128;
        let r = self
            .primes
            .iter()
            .fold(1u128 % m128, |acc, &p| acc * (p as u128 % m128) % m128);
        let r = r as u64;
        if self.negative {
            (m - r) % m
        } else {
            r
        }
    }
}

impl fmt::Display for SquareClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value())
    }
}

impl Serialize for SquareClass {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// A place of Q: a prime or the real place.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Place {
    Prime(u64),
    Infinity,
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::Prime(p) => write!(f, "{p}"),
            Place::Infinity => write!(f, "inf"),
        }
    }
}

impl FromStr for Place {
    type Err = Error;
    fn from_str(s: &str) -> Result<Place> {
        match s.trim() {
            "inf" | "∞" => Ok(Place::Infinity),
            t => {
                let p: u64 = t.parse().map_err(|_| Error::Parse(format!("bad place `{s}`")))?;
                let is_prime = p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0);
                if !is_prime {
                    return Err(Error::Parse(format!("`{s}` is not a prime")));
                }
                Ok(Place::Prime(p))
            }
        }
    }
}

impl Serialize for Place {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}
