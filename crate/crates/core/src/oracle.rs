//! Brute-force local solubility, used to cross-check the Hilbert symbol.
//!
//! `(a, b)_p = 1` iff `a x² + b y² = z²` has a non-zero solution in `Q_p`.
//! After scaling to a primitive solution, either `x` is a unit (take
//! `x = 1`), or `x ∈ pZ_p` and `y` is a unit (take `y = 1`); in both cases
//! the remaining variable is searched over residues mod `p^k` and the value
//! is tested for being a `p`-adic square directly. Solutions with `z = 0`
//! exist iff `−ab` is a square.

use crate::squareclass::Place;

/// Removes square factors; `n ≠ 0`.
fn squarefree(n: i64) -> i64 {
    let mut m = n;
    let mut d = 2i64;
    while d * d <= m.abs() {
        while m % (d * d) == 0 {
            m /= d * d;
        }
        d += 1;
    }
    m
}

/// Whether an integer is a square in `Q_p`; `residues[r]` says whether `r`
/// is a non-zero square mod `p` (unused for `p = 2`).
fn is_padic_square(w: i128, p: i128, residues: &[bool]) -> bool {
    if w == 0 {
        return true;
    }
    let mut v = 0;
    let mut u = w;
    while u % p == 0 {
        u /= p;
        v += 1;
    }
    if v % 2 == 1 {
        return false;
    }
    if p == 2 {
        u.rem_euclid(8) == 1
    } else {
        residues[u.rem_euclid(p) as usize]
    }
}

/// `(a, b)_v` by searching for local points.
pub fn hilbert_oracle(a: i64, b: i64, v: Place) -> i32 {
    assert!(a != 0 && b != 0);
    let (a, b) = (squarefree(a), squarefree(b));
    let p = match v {
        Place::Infinity => {
            // Some real (x, y) ≠ 0 has a x² + b y² ≥ 0 unless both are negative.
            return if a > 0 || b > 0 { 1 } else { -1 };
        }
        Place::Prime(p) => p as i128,
    };
    let (a, b) = (a as i128, b as i128);
    let mut residues = vec![false; p as usize];
    for t in 1..p {
        residues[(t * t % p) as usize] = true;
    }
    let sq = |w: i128| is_padic_square(w, p, &residues);
    if sq(-a * b) {
        return 1;
    }
    let k = if p == 2 { 6 } else { 3 };
    let modulus = p.pow(k);
    let found = (0..modulus).any(|y| sq(a + b * y * y))
        || (0..modulus / p).any(|t| {
            let x = p * t;
            sq(a * x * x + b)
        });
    if found {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_values() {
        assert_eq!(hilbert_oracle(-1, -1, Place::Infinity), -1);
        assert_eq!(hilbert_oracle(-1, -1, Place::Prime(2)), -1);
        assert_eq!(hilbert_oracle(-1, -1, Place::Prime(3)), 1);
        assert_eq!(hilbert_oracle(2, 3, Place::Prime(3)), -1);
        assert_eq!(hilbert_oracle(2, 17, Place::Prime(2)), 1);
        assert_eq!(hilbert_oracle(1, -5, Place::Prime(5)), 1);
        assert_eq!(hilbert_oracle(12, 7, Place::Prime(7)), -1);
    }
}
