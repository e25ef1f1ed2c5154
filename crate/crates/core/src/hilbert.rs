//! Hilbert symbols over Q and 2-torsion Brauer classes as sets of places.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::Result;
use crate::numeric::Rational;
use crate::squareclass::{Place, SquareClass};

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    (a as u128 * b as u128 % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Legendre symbol of a unit `u` modulo an odd prime `p`, by Euler's criterion.
fn legendre(u: u64, p: u64) -> i32 {
    debug_assert!(u % p != 0);
    if pow_mod(u, (p - 1) / 2, p) == 1 {
        1
    } else {
        -1
    }
}

/// The `p`-adic unit part of the squarefree representative, reduced mod `m`.
fn unit_residue(a: &SquareClass, p: u64, m: u64) -> u64 {
    let r = a
        .primes()
        .iter()
        .filter(|&&q| q != p)
        .fold(1 % m, |acc, &q| mul_mod(acc, q % m, m));
    if a.is_negative() {
        (m - r) % m
    } else {
        r
    }
}

/// `(a, b)_v` for square classes.
pub fn hilbert_symbol(a: &SquareClass, b: &SquareClass, v: Place) -> i32 {
    match v {
        Place::Infinity => {
            if a.is_negative() && b.is_negative() {
                -1
            } else {
                1
            }
        }
        Place::Prime(2) => {
            let (alpha, beta) = (a.contains_prime(2) as u64, b.contains_prime(2) as u64);
            let (u, w) = (unit_residue(a, 2, 8), unit_residue(b, 2, 8));
            let eps = |x: u64| ((x - 1) / 2) % 2;
            let omega = |x: u64| ((x * x - 1) / 8) % 2;
            let e = eps(u) * eps(w) + alpha * omega(w) + beta * omega(u);
            if e % 2 == 0 {
                1
            } else {
                -1
            }
        }
        Place::Prime(p) => {
            let (alpha, beta) = (a.contains_prime(p), b.contains_prime(p));
            let mut s = 1;
            if alpha && beta && p % 4 == 3 {
                s = -s;
            }
            if beta {
                s *= legendre(unit_residue(a, p, p), p);
            }
            if alpha {
                s *= legendre(unit_residue(b, p, p), p);
            }
            s
        }
    }
}

pub fn hilbert_symbol_q(a: &Rational, b: &Rational, v: Place) -> Result<i32> {
    Ok(hilbert_symbol(
        &SquareClass::from_rational(a)?,
        &SquareClass::from_rational(b)?,
        v,
    ))
}

/// A 2-torsion Brauer class of Q, given by its ramification places.
#[derive(Clone, PartialEq, Eq, Hash, Default, Debug)]
pub struct BrauerSet(BTreeSet<Place>);

impl BrauerSet {
    pub fn empty() -> Self {
        BrauerSet(BTreeSet::new())
    }

    pub fn from_places(places: impl IntoIterator<Item = Place>) -> Self {
        BrauerSet(places.into_iter().collect())
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn places(&self) -> impl Iterator<Item = Place> + '_ {
        self.0.iter().copied()
    }

    pub fn contains(&self, v: Place) -> bool {
        self.0.contains(&v)
    }

    /// Sum of Brauer classes: symmetric difference.
    pub fn add(&self, other: &BrauerSet) -> BrauerSet {
        BrauerSet(self.0.symmetric_difference(&other.0).copied().collect())
    }

    /// Hilbert reciprocity: a genuine class ramifies at an even number of places.
    pub fn satisfies_reciprocity(&self) -> bool {
        self.0.len() % 2 == 0
    }
}

impl fmt::Display for BrauerSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

impl Serialize for BrauerSet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.0.iter())
    }
}

/// The places that can ramify `(a)·(b)`.
pub fn candidate_places(a: &SquareClass, b: &SquareClass) -> BTreeSet<Place> {
    let mut out: BTreeSet<Place> = [Place::Prime(2), Place::Infinity].into();
    out.extend(a.primes().iter().chain(b.primes()).map(|&p| Place::Prime(p)));
    out
}

/// The cup product `(a)·(b)` as the set of places where `(a, b)_v = −1`.
pub fn cup(a: &SquareClass, b: &SquareClass) -> BrauerSet {
    let set = BrauerSet(
        candidate_places(a, b)
            .into_iter()
            .filter(|&v| hilbert_symbol(a, b, v) == -1)
            .collect(),
    );
    debug_assert!(set.satisfies_reciprocity(), "reciprocity fails for ({a},{b})");
    set
}

pub fn cup_int(a: i64, b: i64) -> Result<BrauerSet> {
    Ok(cup(&SquareClass::from_int(a)?, &SquareClass::from_int(b)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sc(n: i64) -> SquareClass {
        SquareClass::from_int(n).unwrap()
    }

    #[test]
    fn minus_one_minus_one() {
        let m = sc(-1);
        assert_eq!(hilbert_symbol(&m, &m, Place::Infinity), -1);
        assert_eq!(hilbert_symbol(&m, &m, Place::Prime(2)), -1);
        for p in [3, 5, 7, 11] {
            assert_eq!(hilbert_symbol(&m, &m, Place::Prime(p)), 1);
        }
        assert_eq!(
            cup(&m, &m),
            BrauerSet::from_places([Place::Prime(2), Place::Infinity])
        );
    }

    #[test]
    fn trivial_and_known_cups() {
        assert!(cup(&sc(1), &sc(-7)).is_empty());
        // 2 is a norm from Q(√17): 17 ≡ 1 mod 8.
        assert!(cup(&sc(2), &sc(17)).is_empty());
        assert!(cup(&sc(2), &sc(2)).is_empty());
        assert_eq!(
            cup(&sc(2), &sc(3)),
            BrauerSet::from_places([Place::Prime(2), Place::Prime(3)])
        );
    }

    #[test]
    fn reciprocity_and_symmetry_small_range() {
        for a in -30i64..=30 {
            for b in -30i64..=30 {
                if a == 0 || b == 0 {
                    continue;
                }
                let (x, y) = (sc(a), sc(b));
                let c = cup(&x, &y);
                assert!(c.satisfies_reciprocity(), "({a},{b})");
                assert_eq!(c, cup(&y, &x));
            }
        }
    }
}
