//! Regular quadratic forms over Q and their invariants.
//!
//! The degree-two invariant follows the pair-sum normalization
//! `w2(⟨a_1,…,a_n⟩) = Σ_{i<j} (a_i)·(a_j)`, with `(a)·(b)` realized as the set
//! of places where the Hilbert symbol is −1. Two forms are isometric over Q
//! exactly when rank, signature, `w1` and `w2` agree.

use std::fmt;

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::hilbert::{cup, BrauerSet};
use crate::numeric::{format_rational, parse_rational, parse_rational_list, Rational};
use crate::squareclass::SquareClass;

/// A diagonal form `⟨a_1, …, a_n⟩` with non-zero entries.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QForm {
    entries: Vec<Rational>,
}

impl QForm {
    pub fn new(entries: Vec<Rational>) -> Result<Self> {
        if entries.iter().any(|a| a.is_zero()) {
            return Err(Error::ZeroEntry);
        }
        Ok(QForm { entries })
    }

    pub fn from_ints(entries: &[i64]) -> Result<Self> {
        Self::new(entries.iter().map(|&a| Rational::from_integer(a.into())).collect())
    }

    /// `a1,a2,…` with each entry `p` or `p/q`.
    pub fn parse(s: &str) -> Result<Self> {
        Self::new(parse_rational_list(s)?)
    }

    pub fn unit(n: usize) -> Self {
        QForm {
            entries: vec![Rational::from_integer(1.into()); n],
        }
    }

    /// `m` copies of the hyperbolic plane `⟨1, −1⟩`.
    pub fn hyperbolic(m: usize) -> Self {
        let one = Rational::from_integer(1.into());
        QForm {
            entries: (0..m).flat_map(|_| [one.clone(), -one.clone()]).collect(),
        }
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    /// `(#positive, #negative)`.
    pub fn signature(&self) -> (usize, usize) {
        let p = self.entries.iter().filter(|a| a.is_positive()).count();
        (p, self.rank() - p)
    }

    pub fn entry_classes(&self) -> Result<Vec<SquareClass>> {
        self.entries.iter().map(SquareClass::from_rational).collect()
    }

    /// Entries replaced by their squarefree representatives.
    pub fn reduced(&self) -> Result<QForm> {
        let entries = self
            .entry_classes()?
            .iter()
            .map(|c| Rational::from_integer(c.value()))
            .collect();
        Ok(QForm { entries })
    }

    pub fn w1(&self) -> Result<SquareClass> {
        Ok(self
            .entry_classes()?
            .iter()
            .fold(SquareClass::one(), |acc, c| acc.mul(c)))
    }

    pub fn w2(&self) -> Result<BrauerSet> {
        Ok(w2_of_classes(&self.entry_classes()?))
    }

    pub fn sw_total(&self) -> Result<TruncatedSW> {
        let classes = self.entry_classes()?;
        Ok(TruncatedSW {
            w1: classes.iter().fold(SquareClass::one(), |acc, c| acc.mul(c)),
            w2: w2_of_classes(&classes),
        })
    }

    pub fn direct_sum(&self, other: &QForm) -> QForm {
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&other.entries);
        QForm { entries }
    }

    pub fn tensor(&self, other: &QForm) -> QForm {
        let entries = self
            .entries
            .iter()
            .flat_map(|a| other.entries.iter().map(move |b| a * b))
            .collect();
        QForm { entries }
    }

    pub fn scale(&self, a: &Rational) -> Result<QForm> {
        if a.is_zero() {
            return Err(Error::ZeroEntry);
        }
        Ok(QForm {
            entries: self.entries.iter().map(|x| x * a).collect(),
        })
    }

    /// `m ⊗ q`: the orthogonal sum of `m` copies.
    pub fn copies(&self, m: usize) -> QForm {
        QForm {
            entries: (0..m).flat_map(|_| self.entries.iter().cloned()).collect(),
        }
    }

    pub fn invariants(&self) -> Result<FormInvariants> {
        let sw = self.sw_total()?;
        Ok(FormInvariants {
            rank: self.rank(),
            signature: self.signature(),
            w1: sw.w1,
            w2: sw.w2,
        })
    }

    /// Hasse–Minkowski over Q.
    pub fn is_isometric(&self, other: &QForm) -> Result<bool> {
        Ok(self.invariants()? == other.invariants()?)
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.entries.iter().map(format_rational).collect()
    }
}

impl fmt::Display for QForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}>", self.to_strings().join(","))
    }
}

fn w2_of_classes(classes: &[SquareClass]) -> BrauerSet {
    let mut acc = BrauerSet::empty();
    for i in 0..classes.len() {
        for j in i + 1..classes.len() {
            acc = acc.add(&cup(&classes[i], &classes[j]));
        }
    }
    acc
}

/// The complete isometry invariants of a regular form over Q.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct FormInvariants {
    pub rank: usize,
    pub signature: (usize, usize),
    pub w1: SquareClass,
    pub w2: BrauerSet,
}

/// `1 + w1 + w2` in the degree-two truncation of the total Stiefel–Whitney class.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct TruncatedSW {
    pub w1: SquareClass,
    pub w2: BrauerSet,
}

impl TruncatedSW {
    pub fn identity() -> Self {
        TruncatedSW {
            w1: SquareClass::one(),
            w2: BrauerSet::empty(),
        }
    }

    /// `(1+a1+a2)(1+b1+b2) = 1 + (a1+b1) + (a2+b2+a1·b1)`.
    pub fn mul(&self, other: &TruncatedSW) -> TruncatedSW {
        TruncatedSW {
            w1: self.w1.mul(&other.w1),
            w2: self.w2.add(&other.w2).add(&cup(&self.w1, &other.w1)),
        }
    }
}

/// `w(⟨a⟩ ⊗ q)` from the closed form
/// `1 + [n(a) + w1] + [C(n,2)(a)(a) + (n−1)(a)w1 + w2]`.
pub fn berger(a: &Rational, q: &QForm) -> Result<TruncatedSW> {
    let n = q.rank();
    let ca = SquareClass::from_rational(a)?;
    let sw = q.sw_total()?;
    let w1 = if n % 2 == 1 { ca.mul(&sw.w1) } else { sw.w1.clone() };
    let mut w2 = sw.w2.clone();
    if (n * n.saturating_sub(1) / 2) % 2 == 1 {
        w2 = w2.add(&cup(&ca, &ca));
    }
    if n.saturating_sub(1) % 2 == 1 {
        w2 = w2.add(&cup(&ca, &sw.w1));
    }
    Ok(TruncatedSW { w1, w2 })
}

/// A symmetric rational matrix.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Gram {
    n: usize,
    entries: Vec<Rational>,
}

/// Which diagonal entry becomes the next pivot.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PivotOrder {
    First,
    Last,
}

impl Gram {
    pub fn new(n: usize, entries: Vec<Rational>) -> Result<Self> {
        if entries.len() != n * n {
            return Err(Error::Parse(format!("{} entries for a {n}×{n} matrix", entries.len())));
        }
        for i in 0..n {
            for j in 0..i {
                if entries[i * n + j] != entries[j * n + i] {
                    return Err(Error::NotSymmetric);
                }
            }
        }
        Ok(Gram { n, entries })
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::Parse("Gram matrix is not square".into()));
        }
        Self::new(n, rows.into_iter().flatten().collect())
    }

    /// A JSON array of rows whose entries are strings (or integers) holding
    /// exact rationals.
    pub fn from_json(text: &str) -> Result<Self> {
        let value: serde_json::Value =
            serde_json::from_str(text).map_err(|e| Error::Parse(format!("Gram JSON: {e}")))?;
        let rows = value
            .as_array()
            .ok_or_else(|| Error::Parse("Gram JSON must be an array of rows".into()))?;
        let parsed = rows
            .iter()
            .map(|row| {
                row.as_array()
                    .ok_or_else(|| Error::Parse("Gram row must be an array".into()))?
                    .iter()
                    .map(|x| match x {
                        serde_json::Value::String(s) => parse_rational(s),
                        serde_json::Value::Number(n) => parse_rational(&n.to_string()),
                        other => Err(Error::Parse(format!("bad Gram entry {other}"))),
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(parsed)
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.n + j]
    }

    pub fn diagonalize(&self) -> Result<QForm> {
        self.diagonalize_with(PivotOrder::First)
    }

    /// Congruence diagonalization by completing squares. When every
    /// remaining diagonal entry vanishes, a basis vector `u` is replaced by
    /// `u + v` for a `v` pairing non-trivially with it.
    pub fn diagonalize_with(&self, order: PivotOrder) -> Result<QForm> {
        let mut m: Vec<Vec<Rational>> = (0..self.n)
            .map(|i| self.entries[i * self.n..(i + 1) * self.n].to_vec())
            .collect();
        let mut out = Vec::with_capacity(self.n);
        while !m.is_empty() {
            let k = m.len();
            let mut candidates: Vec<usize> = (0..k).collect();
            if order == PivotOrder::Last {
                candidates.reverse();
            }
            let pivot = match candidates.iter().copied().find(|&i| !m[i][i].is_zero()) {
                Some(i) => i,
                None => {
                    let (i, j) = candidates
                        .iter()
                        .flat_map(|&i| (0..k).map(move |j| (i, j)))
                        .find(|&(i, j)| !m[i][j].is_zero())
                        .ok_or(Error::Singular)?;
                    // u ← u + v: row and column i absorb row and column j.
                    for r in 0..k {
                        let add = m[j][r].clone();
                        m[i][r] += add;
                    }
                    for r in 0..k {
                        let add = m[r][j].clone();
                        m[r][i] += add;
                    }
                    i
                }
            };
            let d = m[pivot][pivot].clone();
            let row = m[pivot].clone();
            let mut next = Vec::with_capacity(k - 1);
            for r in (0..k).filter(|&r| r != pivot) {
                let factor = &row[r] / &d;
                let new_row: Vec<Rational> = (0..k)
                    .filter(|&c| c != pivot)
                    .map(|c| &m[r][c] - &factor * &row[c])
                    .collect();
                next.push(new_row);
            }
            out.push(d);
            m = next;
        }
        QForm::new(out)
    }

    pub fn determinant(&self) -> Result<Rational> {
        match self.diagonalize() {
            Ok(q) => Ok(q.entries.iter().fold(Rational::from_integer(1.into()), |a, b| a * b)),
            Err(Error::Singular) => Ok(Rational::zero()),
            Err(e) => Err(e),
        }
    }
}
