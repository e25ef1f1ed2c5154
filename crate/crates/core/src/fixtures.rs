//! Number-field fixtures: minimal polynomials of Galois fields over Q.
//!
//! Each polynomial is re-derived from its primitive element in the
//! integration tests (characteristic polynomial of a Kronecker sum of
//! companion matrices, or a Chebyshev substitution) and screened for
//! irreducibility there.

use crate::catalog;
use crate::error::{Error, Result};
use crate::group::Group;
use crate::poly::MonicPoly;
use crate::squareclass::SquareClass;
use crate::trace::{EtaleAlg, GaloisDescriptor};

#[derive(Clone, Copy, Debug)]
pub struct Fixture {
    pub name: &'static str,
    pub description: &'static str,
    /// Leading coefficient first.
    pub poly: &'static [i64],
    /// Catalog group spec of the Galois group.
    pub group: &'static str,
    pub totally_real: bool,
}

pub const MQ_REAL: Fixture = Fixture {
    name: "mq_real",
    description: "Q(√2,√3,√5), primitive element √2+√3+√5",
    poly: &[1, 0, -40, 0, 352, 0, -960, 0, 576],
    group: "catalog:elem_abelian_2:3",
    totally_real: true,
};

pub const MQ_IMAG: Fixture = Fixture {
    name: "mq_imag",
    description: "Q(i,√2,√3), primitive element i+√2+√3",
    poly: &[1, 0, -16, 0, 88, 0, 192, 0, 144],
    group: "catalog:elem_abelian_2:3",
    totally_real: false,
};

pub const D4_OCTIC: Fixture = Fixture {
    name: "d4_octic",
    description: "splitting field of x⁴−2, primitive element 2^{1/4}+i",
    poly: &[1, 0, 4, 0, 2, 0, 28, 0, 1],
    group: "catalog:dihedral:8",
    totally_real: false,
};

pub const C8_REAL: Fixture = Fixture {
    name: "c8_real",
    description: "real cyclic octic subfield of Q(ζ32), generated by 2cos(π/16)",
    poly: &[1, 0, -8, 0, 20, 0, -16, 0, 2],
    group: "catalog:cyclic:8",
    totally_real: true,
};

pub const C8_IMAG: Fixture = Fixture {
    name: "c8_imag",
    description: "imaginary cyclic octic subfield of Q(ζ32), generated by 2i·sin(π/16)",
    poly: &[1, 0, 8, 0, 20, 0, 16, 0, 2],
    group: "catalog:cyclic:8",
    totally_real: false,
};

pub const C4: Fixture = Fixture {
    name: "c4",
    description: "Q(√(2+√2)), the real cyclic quartic subfield of Q(ζ16)",
    poly: &[1, 0, -4, 0, 2],
    group: "catalog:cyclic:4",
    totally_real: true,
};

/// `E1 = Q(√3)` (order-2 factor) and `E2 = Q(√(2+√2))` (order-4 factor).
pub const C4X_COMPOSITUM: Fixture = Fixture {
    name: "c4x_compositum",
    description: "Q(√3, √(2+√2)) with group Z/4×Z/2, primitive element √3+√(2+√2)",
    poly: &[1, 0, -20, 0, 98, 0, -76, 0, 1],
    group: "catalog:Z4xZ2",
    totally_real: true,
};

pub const ALL: [Fixture; 7] = [MQ_REAL, MQ_IMAG, D4_OCTIC, C8_REAL, C8_IMAG, C4, C4X_COMPOSITUM];

/// The four octics of the `w2 = (2)·(d)` check.
pub const SERRE_OCTICS: [Fixture; 4] = [MQ_REAL, MQ_IMAG, C8_REAL, D4_OCTIC];

/// Discriminant classes of the two sub-extensions of the compositum.
pub fn compositum_discs() -> (SquareClass, SquareClass) {
    (
        SquareClass::from_int(3).expect("nonzero"),
        SquareClass::from_int(2).expect("nonzero"),
    )
}

impl Fixture {
    pub fn poly(&self) -> MonicPoly {
        MonicPoly::from_i64(self.poly).expect("fixture polynomials are monic")
    }

    pub fn algebra(&self) -> Result<EtaleAlg> {
        EtaleAlg::field(self.poly())
    }

    pub fn group(&self) -> Result<Group> {
        catalog::parse_group_spec(self.group)
    }

    pub fn descriptor(&self) -> Result<GaloisDescriptor> {
        GaloisDescriptor::from_group(&self.group()?, true)
    }
}

pub fn by_name(name: &str) -> Result<Fixture> {
    ALL.iter()
        .copied()
        .find(|f| f.name == name)
        .ok_or_else(|| Error::Parse(format!("unknown fixture `{name}`")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_are_consistent() {
        for f in ALL {
            let alg = f.algebra().unwrap();
            let g = f.group().unwrap();
            assert_eq!(alg.degree(), g.order(), "{}", f.name);
            assert_eq!(alg.is_totally_real().unwrap(), f.totally_real, "{}", f.name);
        }
        assert!(by_name("nope").is_err());
    }
}
