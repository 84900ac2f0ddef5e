//! Exact-arithmetic kernel for classifying connected étale algebras in
//! pre-modular fusion categories of small rank.
//!
//! Everything in this crate is computed over exact scalar types: arbitrary
//! precision rationals, rationals mod 1 (conformal dimensions) and elements
//! of cyclotomic fields `Q(zeta_N)` (quantum dimensions, braiding phases).
//! Floating point only ever appears in two places: as a *prefilter* for the
//! conformal-dimension scans (every survivor is re-checked exactly) and in
//! certified rational interval enclosures used for sign and floor decisions.
//!
//! The crate is `no_std` + `alloc`; IO, the built-in catalog and the command
//! line front end live in the companion `etale` crate.

#![cfg_attr(not(test), no_std)]
// index-based loops mirror the matrix formulas throughout
#![allow(clippy::needless_range_loop)]
#![allow(clippy::manual_is_multiple_of)]

extern crate alloc;

pub mod cyclotomic;
pub mod etale;
pub mod fusion;
pub mod interval;
pub mod nimrep;
#[cfg(feature = "oracle")]
pub mod oracle;
pub mod phase;
pub mod poly;
pub mod premodular;

pub use cyclotomic::CycNumber;
pub use etale::{
    AlgebraCandidate, Certificate, ClassificationReport, ClassifyError, ClassifyOptions,
    LibraryRing, MfcReference, Reason, Status, Verdict,
};
pub use fusion::{DimensionCharacter, FpData, FusionRing};
pub use interval::RationalInterval;
pub use nimrep::NimRep;
pub use phase::PhaseExponent;
pub use premodular::{MonodromyTable, PreModularCategory, SMatrix};

/// Arbitrary precision rational, stored in lowest terms with positive
/// denominator (maintained by `num-rational`).
pub type Rational = num_rational::BigRational;

pub type BigInt = num_bigint::BigInt;

/// Convenience constructor for small rationals.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Convenience constructor for integers as rationals.
pub fn rat_int(num: i64) -> Rational {
    Rational::from(BigInt::from(num))
}
