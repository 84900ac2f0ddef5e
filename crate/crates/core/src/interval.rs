//! Certified rational interval enclosures.
//!
//! Floor computations (`r_max`), positivity checks and decimal rendering all
//! need enclosures that are guaranteed to contain the real embedding of a
//! cyclotomic number under `zeta_N -> e^{2 pi i / N}`. Everything here is
//! plain rational arithmetic: pi comes from a Machin-style arctan series
//! with an explicit alternating-series tail bound, cosines from the Taylor
//! series with the same kind of bound.

use alloc::string::String;
use core::cmp::Ordering;

use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::cyclotomic::CycNumber;
use crate::{rat, rat_int, BigInt, Rational};

/// Closed interval `[lo, hi]` with rational endpoints.
#[derive(Clone, Debug, PartialEq)]
pub struct RationalInterval {
    pub lo: Rational,
    pub hi: Rational,
}

impl RationalInterval {
    pub fn point(v: Rational) -> Self {
        RationalInterval {
            lo: v.clone(),
            hi: v,
        }
    }

    pub fn new(lo: Rational, hi: Rational) -> Self {
        assert!(lo <= hi, "interval endpoints out of order");
        RationalInterval { lo, hi }
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn contains(&self, v: &Rational) -> bool {
        self.lo <= *v && *v <= self.hi
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::new(&self.lo + &other.lo, &self.hi + &other.hi)
    }

    pub fn neg(&self) -> Self {
        Self::new(-self.hi.clone(), -self.lo.clone())
    }

    pub fn scale(&self, r: &Rational) -> Self {
        if r.is_negative() {
            Self::new(&self.hi * r, &self.lo * r)
        } else {
            Self::new(&self.lo * r, &self.hi * r)
        }
    }

    /// Sign of every point in the interval: `Some(1)`, `Some(-1)`, `Some(0)`
    /// for the zero point-interval, otherwise `None` (straddles zero).
    pub fn certified_sign(&self) -> Option<i8> {
        if self.lo.is_positive() {
            Some(1)
        } else if self.hi.is_negative() {
            Some(-1)
        } else if self.lo.is_zero() && self.hi.is_zero() {
            Some(0)
        } else {
            None
        }
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) * rat(1, 2)
    }

    /// Widens the interval minimally so both endpoints have denominator
    /// `10^digits`. Keeps the numbers flowing through long certified
    /// computations at bounded size; the enclosure property is preserved.
    pub fn round_outward(&self, digits: u32) -> Self {
        let scale = Rational::from(BigInt::from(10u32).pow(digits));
        let lo = (&self.lo * &scale).floor() / &scale;
        let hi = (&self.hi * &scale).ceil() / &scale;
        Self::new(lo, hi)
    }

    pub fn to_f64(&self) -> f64 {
        self.midpoint().to_f64().unwrap_or(0.0)
    }

    /// Decimal rendering of the midpoint with `digits` fractional digits.
    pub fn decimal(&self, digits: u32) -> String {
        use alloc::format;
        use alloc::string::ToString;
        let mid = self.midpoint();
        let scale = BigInt::from(10u32).pow(digits);
        let scaled = (&mid * Rational::from(scale.clone())).round();
        let int = scaled.numer() / scaled.denom();
        let neg = int.is_negative();
        let abs = if neg { -int.clone() } else { int.clone() };
        let whole = &abs / &scale;
        let frac = &abs % &scale;
        let mut frac_str = frac.to_string();
        while (frac_str.len() as u32) < digits {
            frac_str.insert(0, '0');
        }
        if digits == 0 {
            format!("{}{}", if neg { "-" } else { "" }, whole)
        } else {
            format!("{}{}.{}", if neg { "-" } else { "" }, whole, frac_str)
        }
    }
}

/// Enclosure of pi with width at most `10^-precision`.
pub fn pi_interval(precision: u32) -> RationalInterval {
    // pi = 16 arctan(1/5) - 4 arctan(1/239)
    let eps = pow10_inv(precision + 2);
    let a = arctan_inv_interval(5, &eps);
    let b = arctan_inv_interval(239, &eps);
    a.scale(&rat_int(16))
        .add(&b.scale(&rat_int(-4)))
        .round_outward(precision + 2)
}

fn pow10_inv(digits: u32) -> Rational {
    Rational::new(BigInt::one(), BigInt::from(10u32).pow(digits))
}

/// Enclosure of `arctan(1/x)` for integer `x >= 2` via the alternating
/// series; the tail is bounded by the first omitted term.
fn arctan_inv_interval(x: i64, eps: &Rational) -> RationalInterval {
    let x2 = rat_int(x * x);
    let mut term = rat(1, x);
    let mut sum = Rational::zero();
    let mut n = 0u32;
    loop {
        if n % 2 == 0 {
            sum += &term;
        } else {
            sum -= &term;
        }
        n += 1;
        term = term / &x2 * rat_int(2 * n as i64 - 1) / rat_int(2 * n as i64 + 1);
        if term < *eps {
            break;
        }
    }
    RationalInterval::new(&sum - &term, &sum + &term)
}

/// Certified enclosure of `cos(x)` at a rational point.
///
/// Sums the Taylor series in interval arithmetic with per-step outward
/// rounding to `digits` decimal places (keeping every intermediate at
/// bounded size) until the terms are decreasing and below `eps`; the
/// remainder of the alternating series is then bounded by the first
/// omitted term.
fn cos_point_interval(x: &Rational, eps: &Rational, digits: u32) -> RationalInterval {
    let x2 = RationalInterval::point(x * x).round_outward(digits);
    // term and sum as intervals over nonnegative / mixed values
    let mut term = RationalInterval::point(Rational::one());
    let mut sum = RationalInterval::point(Rational::zero());
    let mut n = 0u32;
    loop {
        if n % 2 == 0 {
            sum = sum.add(&term).round_outward(digits);
        } else {
            sum = sum.add(&term.neg()).round_outward(digits);
        }
        n += 1;
        let denom = rat_int(2 * n as i64 - 1) * rat_int(2 * n as i64);
        // term stays nonnegative: multiply endpoints directly
        let mut next = RationalInterval::new(
            &term.lo * &x2.lo / &denom,
            &term.hi * &x2.hi / &denom,
        )
        .round_outward(digits);
        if next.lo.is_negative() {
            next.lo = Rational::zero();
        }
        // once the factorial outpaces x^2 the true terms decrease forever,
        // so the alternating remainder is bounded by the next term
        let decreasing = x2.hi < denom;
        term = next;
        if decreasing && term.hi < *eps {
            break;
        }
    }
    RationalInterval::new(&sum.lo - &term.hi, &sum.hi + &term.hi)
}

/// Certified enclosure of `cos(2 pi t)` for a rational `t` in `[0, 1)`.
pub fn cos_2pi_interval(t: &Rational, precision: u32) -> RationalInterval {
    debug_assert!(!t.is_negative() && *t < Rational::one());
    let quarter = rat(1, 4);
    let half = rat(1, 2);
    let three_quarters = rat(3, 4);
    // exact special points
    if t.is_zero() {
        return RationalInterval::point(Rational::one());
    }
    if *t == quarter || *t == three_quarters {
        return RationalInterval::point(Rational::zero());
    }
    if *t == half {
        return RationalInterval::point(-Rational::one());
    }
    // reduce to s in (0, 1/4], where cos(2 pi s) is decreasing in s
    let (s, sign) = if *t < quarter {
        (t.clone(), 1)
    } else if *t < half {
        (&half - t, -1)
    } else if *t < three_quarters {
        (t - &half, -1)
    } else {
        (&Rational::one() - t, 1)
    };
    let mut prec = precision + 1;
    loop {
        let pi = pi_interval(prec);
        let eps = pow10_inv(prec + 1);
        let angle = RationalInterval::new(
            &s * rat_int(2) * &pi.lo,
            &s * rat_int(2) * &pi.hi,
        )
        .round_outward(prec + 2);
        // cos decreasing on [0, pi/2]: the angle interval sits inside it
        // because s <= 1/4 and the pi enclosure is tight
        let lo = cos_point_interval(&angle.hi, &eps, prec + 2).lo;
        let hi = cos_point_interval(&angle.lo, &eps, prec + 2).hi;
        if hi >= lo {
            let out = RationalInterval::new(lo, hi);
            if out.width() <= pow10_inv(precision) {
                let out = if sign < 0 { out.neg() } else { out };
                return out;
            }
        }
        prec += 4;
    }
}

/// Errors from interval evaluation of cyclotomic numbers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IntervalError {
    /// The element is not fixed by complex conjugation.
    NotReal,
}

impl CycNumber {
    /// Certified enclosure of the real embedding, width at most
    /// `10^-precision`. Rejects elements that are not real.
    pub fn real_interval(&self, precision: u32) -> Result<RationalInterval, IntervalError> {
        if !self.is_real() {
            return Err(IntervalError::NotReal);
        }
        if let Some(r) = self.to_rational() {
            return Ok(RationalInterval::point(r));
        }
        let mut budget = precision + 2;
        loop {
            let mut acc = RationalInterval::point(Rational::zero());
            for (e, c) in self.terms() {
                let t = Rational::new(BigInt::from(*e), BigInt::from(self.conductor()));
                let cos = cos_2pi_interval(&t, budget);
                acc = acc.add(&cos.scale(c));
            }
            if acc.width() <= pow10_inv(precision) {
                return Ok(acc);
            }
            budget += 4;
        }
    }

    /// Certified comparison of two real cyclotomic numbers.
    pub fn cmp_real(&self, other: &CycNumber) -> Ordering {
        if self == other {
            return Ordering::Equal;
        }
        let diff = self - other;
        let mut prec = 6;
        loop {
            let iv = diff
                .real_interval(prec)
                .expect("cmp_real requires real operands");
            match iv.certified_sign() {
                Some(s) if s > 0 => return Ordering::Greater,
                Some(s) if s < 0 => return Ordering::Less,
                Some(_) => return Ordering::Equal,
                None => prec += 6,
            }
        }
    }

    /// Certified `x >= bound` for real `x` (exact equality short-circuits).
    pub fn at_least(&self, bound: &Rational) -> bool {
        if let Some(r) = self.to_rational() {
            return r >= *bound;
        }
        self.cmp_real(&CycNumber::from_rational(bound.clone())) != Ordering::Less
    }

    /// Floor of a real cyclotomic number, certified.
    pub fn floor_certified(&self) -> BigInt {
        if let Some(r) = self.to_rational() {
            return r.floor().numer() / r.floor().denom();
        }
        // irrational: tighten until the enclosure avoids an integer boundary
        let mut prec = 8;
        loop {
            let iv = self
                .real_interval(prec)
                .expect("floor requires a real element");
            let f_lo = iv.lo.floor();
            let f_hi = iv.hi.floor();
            if f_lo == f_hi {
                return f_lo.numer() / f_lo.denom();
            }
            prec += 8;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pi_enclosure() {
        let pi = pi_interval(12);
        // known bracket 3.14159265358979 < pi < 3.14159265358980
        let lo_known = rat(314159265358979i64, 100000000000000i64);
        let hi_known = rat(314159265358980i64, 100000000000000i64);
        assert!(pi.lo <= hi_known && pi.hi >= lo_known);
        assert!(pi.width() <= pow10_inv(12));
    }

    #[test]
    fn cos_special_points() {
        assert_eq!(
            cos_2pi_interval(&rat(1, 4), 10),
            RationalInterval::point(Rational::zero())
        );
        assert_eq!(
            cos_2pi_interval(&rat(1, 2), 10),
            RationalInterval::point(-Rational::one())
        );
    }

    #[test]
    fn cos_third() {
        let iv = cos_2pi_interval(&rat(1, 3), 12);
        assert!(iv.contains(&rat(-1, 2)));
        assert!(iv.width() <= pow10_inv(12));
    }

    #[test]
    fn golden_ratio_interval() {
        let s5 = CycNumber::sqrt_rational(&rat_int(5));
        let phi = (&CycNumber::one() + &s5).scale(&rat(1, 2));
        let iv = phi.real_interval(9).unwrap();
        // known bracket 1.618033988 < phi < 1.618033989
        let lo_known = rat(1618033988i64, 1000000000i64);
        let hi_known = rat(1618033989i64, 1000000000i64);
        assert!(iv.lo <= hi_known && iv.hi >= lo_known);
        assert!(iv.width() <= pow10_inv(9));
        assert_eq!(phi.floor_certified(), BigInt::from(1));
    }

    #[test]
    fn rejects_non_real() {
        let i = CycNumber::root_of_unity(&crate::PhaseExponent::from_ratio(1, 4));
        assert_eq!(i.real_interval(5), Err(IntervalError::NotReal));
    }

    #[test]
    fn ordering_respected() {
        let s2 = CycNumber::sqrt_rational(&rat_int(2));
        let s3 = CycNumber::sqrt_rational(&rat_int(3));
        assert_eq!(s2.cmp_real(&s3), Ordering::Less);
        assert!(s3.at_least(&rat_int(1)));
    }

    #[test]
    fn decimal_rendering() {
        let s2 = CycNumber::sqrt_rational(&rat_int(2));
        let iv = s2.real_interval(9).unwrap();
        assert_eq!(&iv.decimal(3)[..5], "1.414");
    }
}
