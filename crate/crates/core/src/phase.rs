//! Rationals mod 1: the exact representation of conformal dimensions and of
//! every other quantity that only ever enters through `e^{2 pi i h}`.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::{rat_int, BigInt, Rational};

/// A rational number reduced mod 1 into `[0, 1)`.
///
/// Arithmetic stays reduced; `PhaseExponent` is totally ordered by its
/// canonical representative, which also makes scan output deterministic.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PhaseExponent(Rational);

impl PhaseExponent {
    pub fn new(value: Rational) -> Self {
        PhaseExponent(reduce_mod_one(value))
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "phase denominator must be nonzero");
        Self::new(Rational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn zero() -> Self {
        PhaseExponent(Rational::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn value(&self) -> &Rational {
        &self.0
    }

    /// Denominator of the reduced representative (1 for the zero phase).
    pub fn denominator(&self) -> BigInt {
        self.0.denom().clone()
    }

    pub fn denominator_u64(&self) -> u64 {
        use num_traits::ToPrimitive;
        self.0
            .denom()
            .to_u64()
            .expect("phase denominator exceeds u64")
    }

    pub fn numerator_u64(&self) -> u64 {
        use num_traits::ToPrimitive;
        self.0.numer().to_u64().expect("phase numerator exceeds u64")
    }

    /// Scale by an integer, mod 1.
    pub fn scale(&self, k: i64) -> Self {
        Self::new(&self.0 * rat_int(k))
    }

    pub fn double(&self) -> Self {
        self.scale(2)
    }

    /// Parse `"p/q"` or `"p"`.
    pub fn parse(text: &str) -> Option<Self> {
        let mut parts = text.splitn(2, '/');
        let num: i64 = parts.next()?.trim().parse().ok()?;
        let den: i64 = match parts.next() {
            Some(d) => d.trim().parse().ok()?,
            None => 1,
        };
        if den == 0 {
            return None;
        }
        Some(Self::from_ratio(num, den))
    }

    /// All reduced phases `p/q` with `1 <= q <= bound`, ascending.
    pub fn farey(bound: u64) -> Vec<Self> {
        let mut out = Vec::new();
        for q in 1..=bound {
            for p in 0..q {
                if num_integer::gcd(p, q) == 1 {
                    out.push(Self::from_ratio(p as i64, q as i64));
                }
            }
        }
        out.sort();
        out.dedup();
        out
    }

    /// Approximate value in `[0, 1)` for numeric prefilters only.
    pub fn to_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        self.0.to_f64().unwrap_or(0.0)
    }
}

fn reduce_mod_one(value: Rational) -> Rational {
    let floor = value.floor();
    let reduced = value - floor;
    debug_assert!(!reduced.is_negative() && reduced < Rational::one());
    reduced
}

impl Add for &PhaseExponent {
    type Output = PhaseExponent;
    fn add(self, rhs: &PhaseExponent) -> PhaseExponent {
        PhaseExponent::new(&self.0 + &rhs.0)
    }
}

impl Sub for &PhaseExponent {
    type Output = PhaseExponent;
    fn sub(self, rhs: &PhaseExponent) -> PhaseExponent {
        PhaseExponent::new(&self.0 - &rhs.0)
    }
}

impl Neg for &PhaseExponent {
    type Output = PhaseExponent;
    fn neg(self) -> PhaseExponent {
        PhaseExponent::new(-self.0.clone())
    }
}

impl fmt::Display for PhaseExponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Debug for PhaseExponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PhaseExponent({})", self.0)
    }
}

/// Renders a rational as `p/q`, used by report emitters.
pub fn rational_to_string(r: &Rational) -> String {
    use alloc::format;
    format!("{}", r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduction_into_unit_interval() {
        assert_eq!(PhaseExponent::from_ratio(-2, 3), PhaseExponent::from_ratio(1, 3));
        assert_eq!(PhaseExponent::from_ratio(7, 3), PhaseExponent::from_ratio(1, 3));
        assert_eq!(PhaseExponent::from_ratio(4, 2), PhaseExponent::zero());
    }

    #[test]
    fn arithmetic_stays_reduced() {
        let a = PhaseExponent::from_ratio(2, 3);
        let b = PhaseExponent::from_ratio(2, 3);
        assert_eq!(&a + &b, PhaseExponent::from_ratio(1, 3));
        assert_eq!(-&a, PhaseExponent::from_ratio(1, 3));
        assert_eq!(a.scale(3), PhaseExponent::zero());
    }

    #[test]
    fn farey_counts() {
        // 1 + phi(2) + phi(3) + phi(4) = 1 + 1 + 2 + 2
        assert_eq!(PhaseExponent::farey(4).len(), 6);
    }

    #[test]
    fn parse_fraction() {
        assert_eq!(PhaseExponent::parse("3/16"), Some(PhaseExponent::from_ratio(3, 16)));
        assert_eq!(PhaseExponent::parse("0"), Some(PhaseExponent::zero()));
        assert_eq!(PhaseExponent::parse("1/0"), None);
    }
}
