//! Exact computations around the mod-2 obstructions of finite groups and the
//! Hasse-Witt invariants of trace forms over the rationals.
//!
//! * [`group`], [`catalog`], [`perm`]: finite groups as multiplication tables.
//! * [`f2`], [`cohomology`]: H²(G, F2), the s-map, central extensions by Z/2.
//! * [`qsqrt2`], [`clifford`], [`pin`]: exact Clifford arithmetic and the Pin(G) cocycle.
//! * [`squareclass`], [`hilbert`], [`qform`]: rational quadratic forms and
//!   their invariants.
//! * [`poly`], [`trace`], [`fixtures`]: trace forms of étale algebras.
//! * [`report`], [`suite`]: JSON verification reports.
//! * [`oracle`]: brute-force cross-checks.

pub mod catalog;
pub mod clifford;
pub mod cohomology;
pub mod error;
pub mod f2;
pub mod fixtures;
pub mod group;
pub mod hilbert;
pub mod numeric;
pub mod oracle;
pub mod perm;
pub mod pin;
pub mod poly;
pub mod qform;
pub mod qsqrt2;
pub mod report;
pub mod squareclass;
pub mod suite;
pub mod trace;

pub use error::{Error, Result};
