//! Clifford algebra of the unit form `⟨1, …, 1⟩` of rank `n ≤ 24`.
//!
//! Basis vectors are `e_0 … e_{n-1}` with `e_i² = 1` and `e_i e_j = −e_j e_i`
//! for `i ≠ j`. A monomial is a bitmask `S`; products follow
//! `e_S · e_T = sign(S, T) · e_{S △ T}` with
//! `sign(S, T) = (−1)^{Σ_{t ∈ T} #{s ∈ S : s > t}}`.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::qsqrt2::QSqrt2;

pub const MAX_RANK: usize = 24;

/// Sign of the monomial product `e_S · e_T`.
#[inline]
pub fn monomial_sign(s: u32, t: u32) -> i32 {
    let mut swaps = 0u32;
    let mut rest = t;
    while rest != 0 {
        let bit = rest.trailing_zeros();
        rest &= rest - 1;
        let above = if bit >= 31 { 0 } else { !((2u32 << bit) - 1) };
        swaps += (s & above).count_ones();
    }
    if swaps % 2 == 0 {
        1
    } else {
        -1
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CliffordElt {
    rank: usize,
    terms: BTreeMap<u32, QSqrt2>,
}

impl CliffordElt {
    pub fn zero(rank: usize) -> Result<Self> {
        if rank > MAX_RANK {
            return Err(Error::CapExceeded {
                what: "Clifford rank",
                size: rank,
                cap: MAX_RANK,
            });
        }
        Ok(CliffordElt {
            rank,
            terms: BTreeMap::new(),
        })
    }

    pub fn scalar(rank: usize, c: QSqrt2) -> Result<Self> {
        Self::monomial(rank, 0, c)
    }

    pub fn one(rank: usize) -> Result<Self> {
        Self::scalar(rank, QSqrt2::from_int(1))
    }

    pub fn monomial(rank: usize, mask: u32, c: QSqrt2) -> Result<Self> {
        let mut x = Self::zero(rank)?;
        if rank < 32 && mask >> rank != 0 {
            return Err(Error::OutOfRange(format!("monomial {mask:#b} outside rank {rank}")));
        }
        if !c.is_zero() {
            x.terms.insert(mask, c);
        }
        Ok(x)
    }

    /// The basis vector `e_i`.
    pub fn vector(rank: usize, i: usize) -> Result<Self> {
        if i >= rank {
            return Err(Error::OutOfRange(format!("basis vector {i} outside rank {rank}")));
        }
        Self::monomial(rank, 1 << i, QSqrt2::from_int(1))
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, QSqrt2)> + '_ {
        self.terms.iter().map(|(&m, &c)| (m, c))
    }

    pub fn coefficient(&self, mask: u32) -> QSqrt2 {
        self.terms.get(&mask).copied().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The scalar value, if the element has no terms of positive grade.
    pub fn as_scalar(&self) -> Option<QSqrt2> {
        match self.terms.len() {
            0 => Some(QSqrt2::default()),
            1 => self.terms.get(&0).copied(),
            _ => None,
        }
    }

    fn accumulate(terms: &mut BTreeMap<u32, QSqrt2>, mask: u32, c: QSqrt2) {
        use std::collections::btree_map::Entry;
        match terms.entry(mask) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let sum = *e.get() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    fn check_rank(&self, other: &CliffordElt) -> Result<()> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch(self.rank, other.rank));
        }
        Ok(())
    }

    pub fn add(&self, other: &CliffordElt) -> Result<CliffordElt> {
        self.check_rank(other)?;
        let mut terms = self.terms.clone();
        for (&m, &c) in &other.terms {
            Self::accumulate(&mut terms, m, c);
        }
        Ok(CliffordElt {
            rank: self.rank,
            terms,
        })
    }

    pub fn neg(&self) -> CliffordElt {
        self.scale(QSqrt2::from_int(-1))
    }

    pub fn scale(&self, c: QSqrt2) -> CliffordElt {
        let terms = if c.is_zero() {
            BTreeMap::new()
        } else {
            self.terms.iter().map(|(&m, &x)| (m, x * c)).collect()
        };
        CliffordElt {
            rank: self.rank,
            terms,
        }
    }

    pub fn mul(&self, other: &CliffordElt) -> Result<CliffordElt> {
        self.check_rank(other)?;
        let mut terms = BTreeMap::new();
        for (&s, &a) in &self.terms {
            for (&t, &b) in &other.terms {
                let c = a * b;
                let c = if monomial_sign(s, t) < 0 { -c } else { c };
                Self::accumulate(&mut terms, s ^ t, c);
            }
        }
        Ok(CliffordElt {
            rank: self.rank,
            terms,
        })
    }

    /// `x · v` for a vector `v = Σ c_k e_k`, without building `v` as an
    /// element. This is the hot path of Pin lifts.
    pub fn mul_vector(&self, v: &[(usize, QSqrt2)]) -> Result<CliffordElt> {
        let mut terms = BTreeMap::new();
        for &(k, ck) in v {
            if k >= self.rank {
                return Err(Error::OutOfRange(format!("basis vector {k} outside rank {}", self.rank)));
            }
            let bit = 1u32 << k;
            for (&s, &a) in &self.terms {
                let c = a * ck;
                let c = if monomial_sign(s, bit) < 0 { -c } else { c };
                Self::accumulate(&mut terms, s ^ bit, c);
            }
        }
        Ok(CliffordElt {
            rank: self.rank,
            terms,
        })
    }

    /// Reversion `x ↦ x_t`: reverses the order of vector factors, so a
    /// grade-`r` monomial picks up `(−1)^{r(r−1)/2}`.
    pub fn reverse(&self) -> CliffordElt {
        let terms = self
            .terms
            .iter()
            .map(|(&m, &c)| {
                let r = m.count_ones();
                (m, if (r * r.saturating_sub(1) / 2) % 2 == 1 { -c } else { c })
            })
            .collect();
        CliffordElt {
            rank: self.rank,
            terms,
        }
    }

    /// The automorphism `I` induced by `v ↦ −v`: negates odd-grade terms.
    pub fn grade_involution(&self) -> CliffordElt {
        let terms = self
            .terms
            .iter()
            .map(|(&m, &c)| (m, if m.count_ones() % 2 == 1 { -c } else { c }))
            .collect();
        CliffordElt {
            rank: self.rank,
            terms,
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut parities = self.terms.keys().map(|m| m.count_ones() % 2);
        match parities.next() {
            None => true,
            Some(p) => parities.all(|q| q == p),
        }
    }

    /// Spinor norm `x_t · x`; errors unless it is a non-zero scalar.
    pub fn spinor_norm(&self) -> Result<QSqrt2> {
        let n = self.reverse().mul(self)?;
        match n.as_scalar() {
            Some(s) if !s.is_zero() => Ok(s),
            _ => Err(Error::NonInvertible),
        }
    }

    /// `x⁻¹ = x_t / sp(x)` for elements of the Clifford group.
    pub fn inverse(&self) -> Result<CliffordElt> {
        let sp = self.spinor_norm()?;
        let inv = sp.inverse().ok_or(Error::NonInvertible)?;
        Ok(self.reverse().scale(inv))
    }
}

impl fmt::Display for CliffordElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(&m, c)| {
                if m == 0 {
                    format!("({c})")
                } else {
                    let idx: Vec<String> = (0..self.rank)
                        .filter(|i| m >> i & 1 == 1)
                        .map(|i| i.to_string())
                        .collect();
                    format!("({c})e[{}]", idx.join(","))
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}
