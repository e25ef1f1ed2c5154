//! Exact arithmetic in Q(√2).
//!
//! Components are `Ratio<i64>` with checked operations: every coefficient
//! met by Pin lifts is a signed dyadic rational of small height, and an
//! overflow panics instead of wrapping.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::Ratio;
use num_traits::{CheckedAdd, CheckedDiv, CheckedMul, CheckedSub, One, Zero};

pub type Q64 = Ratio<i64>;

const OVERFLOW: &str = "coefficient overflow in Q(√2) arithmetic";

/// `u + v√2`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct QSqrt2 {
    pub u: Q64,
    pub v: Q64,
}

impl QSqrt2 {
    pub const fn new(u: Q64, v: Q64) -> Self {
        QSqrt2 { u, v }
    }

    pub fn from_int(n: i64) -> Self {
        QSqrt2::new(Q64::from_integer(n), Q64::zero())
    }

    pub fn sqrt2() -> Self {
        QSqrt2::new(Q64::zero(), Q64::one())
    }

    /// `1/√2 = √2/2`.
    pub fn inv_sqrt2() -> Self {
        QSqrt2::new(Q64::zero(), Q64::new(1, 2))
    }

    pub fn is_zero(&self) -> bool {
        self.u.is_zero() && self.v.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.u.is_one() && self.v.is_zero()
    }

    /// Field norm `u² − 2v²`.
    pub fn norm(&self) -> Q64 {
        let uu = self.u.checked_mul(&self.u).expect(OVERFLOW);
        let vv = self.v.checked_mul(&self.v).expect(OVERFLOW);
        uu.checked_sub(&vv.checked_add(&vv).expect(OVERFLOW))
            .expect(OVERFLOW)
    }

    pub fn inverse(&self) -> Option<QSqrt2> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm();
        let d = |a: &Q64| a.checked_div(&n).expect(OVERFLOW);
        Some(QSqrt2::new(d(&self.u), -d(&self.v)))
    }
}

impl Add for QSqrt2 {
    type Output = QSqrt2;
    fn add(self, o: QSqrt2) -> QSqrt2 {
        QSqrt2::new(
            self.u.checked_add(&o.u).expect(OVERFLOW),
            self.v.checked_add(&o.v).expect(OVERFLOW),
        )
    }
}

impl Sub for QSqrt2 {
    type Output = QSqrt2;
    fn sub(self, o: QSqrt2) -> QSqrt2 {
        QSqrt2::new(
            self.u.checked_sub(&o.u).expect(OVERFLOW),
            self.v.checked_sub(&o.v).expect(OVERFLOW),
        )
    }
}

impl Neg for QSqrt2 {
    type Output = QSqrt2;
    fn neg(self) -> QSqrt2 {
        QSqrt2::new(-self.u, -self.v)
    }
}

impl Mul for QSqrt2 {
    type Output = QSqrt2;
    fn mul(self, o: QSqrt2) -> QSqrt2 {
        let m = |a: &Q64, b: &Q64| a.checked_mul(b).expect(OVERFLOW);
        let vv = m(&self.v, &o.v);
        let two_vv = vv.checked_add(&vv).expect(OVERFLOW);
        let u = m(&self.u, &o.u).checked_add(&two_vv).expect(OVERFLOW);
        let v = m(&self.u, &o.v).checked_add(&m(&self.v, &o.u)).expect(OVERFLOW);
        QSqrt2::new(u, v)
    }
}

impl fmt::Display for QSqrt2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.u.is_zero(), self.v.is_zero()) {
            (_, true) => write!(f, "{}", self.u),
            (true, false) => write!(f, "{}√2", self.v),
            (false, false) => write!(f, "{}+{}√2", self.u, self.v),
        }
    }
}
