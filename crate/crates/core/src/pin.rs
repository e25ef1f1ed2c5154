//! Pin lifts of permutations and the class of the pulled-back Pin extension.
//!
//! The transposition `(i j)` lifts to `ε_{ij} = (e_i − e_j)/√2`, a unit
//! vector whose reflection swaps `e_i` and `e_j`. A permutation lifts to the
//! product of the ε's of its canonical transposition expansion (see
//! [`Perm::transpositions`]). Indices are 0-based throughout.

use serde::Serialize;

use crate::clifford::{CliffordElt, MAX_RANK};
use crate::cohomology::Cocycle2;
use crate::error::{Error, Result};
use crate::group::Group;
use crate::perm::Perm;
use crate::qsqrt2::QSqrt2;

/// Largest group with a full cocycle table.
pub const FULL_COCYCLE_CAP: usize = 12;
/// Largest group for the involution-only diagonal.
pub const INVOLUTION_CAP: usize = MAX_RANK;
/// Largest degree accepted by the counting path of [`involution_square_sign`].
pub const COUNTING_CAP: usize = 1 << 22;

fn epsilon_factors(i: usize, j: usize) -> [(usize, QSqrt2); 2] {
    let h = QSqrt2::inv_sqrt2();
    [(i, h), (j, -h)]
}

pub fn epsilon(i: usize, j: usize, n: usize) -> Result<CliffordElt> {
    if i == j || i >= n || j >= n {
        return Err(Error::OutOfRange(format!("ε({i},{j}) in rank {n}")));
    }
    CliffordElt::one(n)?.mul_vector(&epsilon_factors(i, j))
}

/// Right-multiplies `x` by the ε factors of `transpositions`, in order.
pub fn times_epsilons(x: &CliffordElt, transpositions: &[(usize, usize)]) -> Result<CliffordElt> {
    let mut acc = x.clone();
    for &(i, j) in transpositions {
        acc = acc.mul_vector(&epsilon_factors(i, j))?;
    }
    Ok(acc)
}

pub fn pin_lift(p: &Perm) -> Result<CliffordElt> {
    let n = p.degree();
    if n > MAX_RANK {
        return Err(Error::CapExceeded {
            what: "permutation degree",
            size: n,
            cap: MAX_RANK,
        });
    }
    let ts = p.transpositions();
    let rebuilt = ts.iter().fold(Perm::identity(n), |acc, &(a, b)| {
        acc.compose(&Perm::transposition(n, a, b).expect("canonical transposition"))
    });
    assert_eq!(&rebuilt, p, "transposition expansion does not reproduce {p}");
    times_epsilons(&CliffordElt::one(n)?, &ts)
}

/// `x · pin_lift(q)`, without building the lift of `q`.
pub fn times_lift(x: &CliffordElt, q: &Perm) -> Result<CliffordElt> {
    if q.degree() != x.rank() {
        return Err(Error::RankMismatch(x.rank(), q.degree()));
    }
    times_epsilons(x, &q.transpositions())
}

/// `Some(false)` if `x = y`, `Some(true)` if `x = −y`, `None` otherwise.
pub fn sign_against(x: &CliffordElt, y: &CliffordElt) -> Option<bool> {
    if x == y {
        Some(false)
    } else if x.neg() == *y {
        Some(true)
    } else {
        None
    }
}

pub fn check_pin(x: &CliffordElt) -> bool {
    matches!(x.spinor_norm(), Ok(s) if s.is_one())
}

/// True iff `I(x) e_k x⁻¹ = e_{p(k)}` for every `k`, checked in the
/// equivalent form `I(x) e_k = e_{p(k)} x`.
pub fn check_action(x: &CliffordElt, p: &Perm) -> Result<bool> {
    if p.degree() != x.rank() {
        return Err(Error::RankMismatch(x.rank(), p.degree()));
    }
    x.spinor_norm()?;
    let ix = x.grade_involution();
    let one = QSqrt2::from_int(1);
    for k in 0..x.rank() {
        let lhs = ix.mul_vector(&[(k, one)])?;
        let rhs = CliffordElt::vector(x.rank(), p.apply(k))?.mul(x)?;
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Sign of the square of a product of `k` pairwise anticommuting
/// involutions, by counting the transpositions a bubble sort of the word
/// `1…k 1…k` performs (merge-sort inversion count).
fn counting_sign(k: usize) -> i32 {
    fn inversions(v: &mut Vec<usize>) -> u64 {
        if v.len() < 2 {
            return 0;
        }
        let mut right = v.split_off(v.len() / 2);
        let mut count = inversions(v) + inversions(&mut right);
        let mut merged = Vec::with_capacity(v.len() + right.len());
        let (mut a, mut b) = (0, 0);
        while a < v.len() && b < right.len() {
            if v[a] <= right[b] {
                merged.push(v[a]);
                a += 1;
            } else {
                count += (v.len() - a) as u64;
                merged.push(right[b]);
                b += 1;
            }
        }
        merged.extend_from_slice(&v[a..]);
        merged.extend_from_slice(&right[b..]);
        *v = merged;
        count
    }
    let mut word: Vec<usize> = (0..k).chain(0..k).collect();
    if inversions(&mut word) % 2 == 0 {
        1
    } else {
        -1
    }
}

/// The fixed-point-free involution `(0 1)(2 3)…(n−2 n−1)`.
pub fn standard_involution(n: usize) -> Result<Perm> {
    let cycles: Vec<Vec<usize>> = (0..n / 2).map(|i| vec![2 * i, 2 * i + 1]).collect();
    Perm::from_cycles(n, &cycles)
}

/// The two evaluations of the square of the lift of `(0 1)(2 3)…(n−2 n−1)`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct SquareSignPaths {
    pub counting: i32,
    /// `None` above [`MAX_RANK`].
    pub clifford: Option<i32>,
}

pub fn involution_square_paths(n: usize) -> Result<SquareSignPaths> {
    if n % 2 == 1 {
        return Err(Error::OddDegree(n));
    }
    if n > COUNTING_CAP {
        return Err(Error::CapExceeded {
            what: "involution degree",
            size: n,
            cap: COUNTING_CAP,
        });
    }
    let counting = counting_sign(n / 2);
    let clifford = if n <= MAX_RANK {
        let z = standard_involution(n)?;
        let sq = times_epsilons(&pin_lift(&z)?, &z.transpositions())?;
        let s = sq.as_scalar().ok_or(Error::SignMismatch(0, 0))?;
        Some(if s.is_one() {
            1
        } else if (-s).is_one() {
            -1
        } else {
            return Err(Error::SignMismatch(0, 0));
        })
    } else {
        None
    };
    Ok(SquareSignPaths { counting, clifford })
}

/// Square of the Pin lift of `(0 1)(2 3)…(n−2 n−1)`, as `±1`.
///
/// Computed in the Clifford algebra for `n ≤ 24` and by counting for every
/// even `n`; the two paths must agree.
pub fn involution_square_sign(n: usize) -> Result<i32> {
    let paths = involution_square_paths(n)?;
    if let Some(c) = paths.clifford {
        assert_eq!(c, paths.counting, "Clifford and counting paths disagree at n = {n}");
    }
    Ok(paths.counting)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PinMode {
    Full,
    InvolutionsOnly,
}

#[derive(Clone, Debug)]
pub struct PinCocycleResult {
    pub group: Group,
    pub mode: PinMode,
    /// The full table; `None` in involution-only mode.
    pub cocycle: Option<Cocycle2>,
    pub involutions: Vec<usize>,
    /// `lift(f(z))² = ±1` for each involution `z`.
    pub square_signs: Vec<i32>,
}

impl PinCocycleResult {
    /// The diagonal `c_G(z, z)` at the involutions.
    pub fn diagonal(&self) -> Vec<bool> {
        self.square_signs.iter().map(|&s| s < 0).collect()
    }

    pub fn has_two_lift_property(&self) -> bool {
        self.square_signs.iter().all(|&s| s > 0)
    }
}

/// The cocycle `c_G` of `1 → Z/2 → Pin(G) → G → 1` for the canonical lifts
/// of the left regular representation.
pub fn pin_cocycle(group: &Group, mode: PinMode) -> Result<PinCocycleResult> {
    let n = group.order();
    let cap = match mode {
        PinMode::Full => FULL_COCYCLE_CAP,
        PinMode::InvolutionsOnly => INVOLUTION_CAP,
    };
    if n > cap {
        return Err(Error::CapExceeded {
            what: "group order for Pin cocycle",
            size: n,
            cap,
        });
    }
    let perms = group.left_regular();
    let involutions = group.involutions();
    let one = CliffordElt::one(n)?;
    let mut square_signs = Vec::with_capacity(involutions.len());
    for &z in &involutions {
        let ts = perms[z].transpositions();
        let sq = times_epsilons(&pin_lift(&perms[z])?, &ts)?;
        match sign_against(&sq, &one) {
            Some(neg) => square_signs.push(if neg { -1 } else { 1 }),
            None => return Err(Error::SignMismatch(z, z)),
        }
    }
    let cocycle = match mode {
        PinMode::InvolutionsOnly => None,
        PinMode::Full => {
            let lifts = perms.iter().map(pin_lift).collect::<Result<Vec<_>>>()?;
            let factors: Vec<_> = perms.iter().map(|p| p.transpositions()).collect();
            let mut c = Cocycle2::zero(n);
            for g in 1..n {
                for h in 1..n {
                    let prod = times_epsilons(&lifts[g], &factors[h])?;
                    let neg = sign_against(&prod, &lifts[group.mul(g, h)])
                        .ok_or(Error::SignMismatch(g, h))?;
                    c.set(g, h, neg);
                }
            }
            c.validate(group)?;
            for (&z, &s) in involutions.iter().zip(&square_signs) {
                assert_eq!(c.get(z, z), s < 0, "diagonal disagrees with square sign at {z}");
            }
            Some(c)
        }
    };
    Ok(PinCocycleResult {
        group: group.clone(),
        mode,
        cocycle,
        involutions,
        square_signs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn epsilon_properties() {
        let e01 = epsilon(0, 1, 4).unwrap();
        assert_eq!(e01.mul(&e01).unwrap(), CliffordElt::one(4).unwrap());
        assert!(check_pin(&e01));
        let e23 = epsilon(2, 3, 4).unwrap();
        assert_eq!(e01.mul(&e23).unwrap(), e23.mul(&e01).unwrap().neg());
        assert!(epsilon(1, 1, 4).is_err());
        assert!(epsilon(0, 4, 4).is_err());
    }

    #[test]
    fn lifts_act_correctly() {
        let id = Perm::identity(3);
        assert_eq!(pin_lift(&id).unwrap(), CliffordElt::one(3).unwrap());
        let t = Perm::transposition(3, 0, 1).unwrap();
        let lt = pin_lift(&t).unwrap();
        assert_eq!(lt, epsilon(0, 1, 3).unwrap());
        assert!(check_action(&lt, &t).unwrap());
        assert!(!check_action(&lt, &id).unwrap());
        let c = Perm::from_cycles(5, &[vec![0, 3, 1, 4], vec![2]]).unwrap();
        let lc = pin_lift(&c).unwrap();
        assert!(check_pin(&lc));
        assert!(check_action(&lc, &c).unwrap());
    }

    #[test]
    fn disjoint_transpositions_expand_fully() {
        let z = standard_involution(6).unwrap();
        assert_eq!(pin_lift(&z).unwrap().num_terms(), 8);
    }

    #[test]
    fn small_involution_signs() {
        assert_eq!(involution_square_sign(2).unwrap(), 1);
        assert_eq!(involution_square_sign(4).unwrap(), -1);
        assert_eq!(involution_square_sign(8).unwrap(), 1);
        assert_eq!(involution_square_sign(3), Err(Error::OddDegree(3)));
        // Counting path alone beyond the Clifford rank.
        assert_eq!(involution_square_sign(26).unwrap(), 1);
        assert_eq!(involution_square_sign(28).unwrap(), -1);
    }

    #[test]
    fn cyclic_diagonals() {
        let z2 = pin_cocycle(&catalog::cyclic(2).unwrap(), PinMode::Full).unwrap();
        assert_eq!(z2.diagonal(), vec![false]);
        let z4 = pin_cocycle(&catalog::cyclic(4).unwrap(), PinMode::Full).unwrap();
        assert_eq!(z4.diagonal(), vec![true]);
        let c = z4.cocycle.unwrap();
        assert!(c.get(2, 2));
    }

    #[test]
    fn cap_enforced() {
        let g = catalog::cyclic(16).unwrap();
        assert!(pin_cocycle(&g, PinMode::Full).is_err());
        assert!(pin_cocycle(&g, PinMode::InvolutionsOnly).is_ok());
    }
}
