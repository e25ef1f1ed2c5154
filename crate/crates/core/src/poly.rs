//! Monic integer polynomials: Newton power sums, separability, resultants.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::numeric::Rational;

/// `x^d + c_1 x^{d−1} + … + c_d`, stored leading coefficient first.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MonicPoly {
    coeffs: Vec<BigInt>,
}

impl MonicPoly {
    pub fn new(coeffs: Vec<BigInt>) -> Result<Self> {
        match coeffs.first() {
            Some(c) if c.is_one() => Ok(MonicPoly { coeffs }),
            _ => Err(Error::NotMonic),
        }
    }

    pub fn from_i64(coeffs: &[i64]) -> Result<Self> {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `1,0,-4,0,2`, leading coefficient first.
    pub fn parse(s: &str) -> Result<Self> {
        let coeffs = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<BigInt>()
                    .map_err(|_| Error::Parse(format!("bad coefficient `{t}` in `{s}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(coeffs)
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficients, leading first.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// `p_k = Σ θ^k` over the roots, for `k = 0..=k_max`, by Newton's identities.
    pub fn power_sums(&self, k_max: usize) -> Vec<BigInt> {
        let d = self.degree();
        let c = &self.coeffs;
        let mut p: Vec<BigInt> = Vec::with_capacity(k_max + 1);
        p.push(BigInt::from(d));
        for k in 1..=k_max {
            let mut s = BigInt::zero();
            for i in 1..k.min(d + 1) {
                s -= &c[i] * &p[k - i];
            }
            if k <= d {
                s -= BigInt::from(k) * &c[k];
            }
            p.push(s);
        }
        p
    }

    /// Coefficients over Q, lowest degree first.
    pub fn to_dense(&self) -> Vec<Rational> {
        self.coeffs
            .iter()
            .rev()
            .map(|c| Rational::from_integer(c.clone()))
            .collect()
    }

    pub fn derivative_dense(&self) -> Vec<Rational> {
        let dense = self.to_dense();
        dense
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * Rational::from_integer(BigInt::from(i)))
            .collect()
    }

    /// Squarefree over Q: `gcd(f, f')` is constant.
    pub fn is_separable(&self) -> bool {
        dense_gcd(&self.to_dense(), &self.derivative_dense()).len() == 1
    }

    /// `disc(f) = (−1)^{d(d−1)/2} Res(f, f')` for monic `f`.
    pub fn discriminant(&self) -> BigInt {
        let d = self.degree();
        let fp: Vec<BigInt> = self
            .coeffs
            .iter()
            .take(d)
            .enumerate()
            .map(|(i, c)| c * BigInt::from(d - i))
            .collect();
        let r = resultant(&self.coeffs, &fp);
        if (d * d.saturating_sub(1) / 2) % 2 == 1 {
            -r
        } else {
            r
        }
    }
}

impl fmt::Display for MonicPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

fn trim(mut v: Vec<Rational>) -> Vec<Rational> {
    while v.len() > 1 && v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

/// Remainder of dense polynomials (lowest degree first) over Q.
pub fn dense_rem(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let b = trim(b.to_vec());
    assert!(!b.last().unwrap().is_zero(), "division by the zero polynomial");
    let mut r = trim(a.to_vec());
    let lead = b.last().unwrap().clone();
    while r.len() >= b.len() && !(r.len() == 1 && r[0].is_zero()) {
        let shift = r.len() - b.len();
        let q = r.last().unwrap() / &lead;
        for (i, bc) in b.iter().enumerate() {
            r[shift + i] -= &q * bc;
        }
        r.pop();
        r = trim(r);
        if r.is_empty() {
            r.push(Rational::zero());
        }
    }
    r
}

/// Monic gcd of dense polynomials over Q.
pub fn dense_gcd(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut x = trim(a.to_vec());
    let mut y = trim(b.to_vec());
    while !(y.len() == 1 && y[0].is_zero()) {
        let r = dense_rem(&x, &y);
        x = y;
        y = r;
    }
    let lead = x.last().unwrap().clone();
    if lead.is_zero() {
        return x;
    }
    x.iter().map(|c| c / &lead).collect()
}

/// Determinant of an integer matrix by fraction-free (Bareiss) elimination.
pub fn bareiss_det(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

/// Sylvester resultant of two integer polynomials given leading coefficient
/// first.
pub fn resultant(f: &[BigInt], g: &[BigInt]) -> BigInt {
    let (m, n) = (f.len() - 1, g.len() - 1);
    let size = m + n;
    if size == 0 {
        return BigInt::one();
    }
    let mut rows = Vec::with_capacity(size);
    for i in 0..n {
        let mut row = vec![BigInt::zero(); size];
        for (j, c) in f.iter().enumerate() {
            row[i + j] = c.clone();
        }
        rows.push(row);
    }
    for i in 0..m {
        let mut row = vec![BigInt::zero(); size];
        for (j, c) in g.iter().enumerate() {
            row[i + j] = c.clone();
        }
        rows.push(row);
    }
    bareiss_det(rows)
}
