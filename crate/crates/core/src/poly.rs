//! Dense polynomials over the rational and cyclotomic scalars, plus the
//! root-finding used by the fusion-ring character solver.
//!
//! The character solver only ever has to extract roots of rational
//! polynomials of degree at most three (catalog rings are singly generated
//! once invertible objects are branched over roots of unity), so the finder
//! covers exactly: rational roots, quadratics with rational discriminant
//! (Gauss-sum square roots) and irreducible totally-real cubics that split
//! inside the real subfield of a prime-power cyclotomic field (recognised
//! through Gaussian periods and then verified exactly).

use alloc::vec;
use alloc::vec::Vec;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::cyclotomic::CycNumber;
use crate::interval::RationalInterval;
use crate::{rat, rat_int, BigInt, Rational};

/// Polynomial with cyclotomic coefficients, lowest degree first.
#[derive(Clone, Debug, PartialEq)]
pub struct CycPoly {
    pub coeffs: Vec<CycNumber>,
}

impl CycPoly {
    pub fn new(mut coeffs: Vec<CycNumber>) -> Self {
        while coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
            coeffs.pop();
        }
        CycPoly { coeffs }
    }

    pub fn zero() -> Self {
        CycPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: CycNumber) -> Self {
        Self::new(vec![c])
    }

    pub fn symbol() -> Self {
        Self::new(vec![CycNumber::zero(), CycNumber::one()])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn as_constant(&self) -> Option<CycNumber> {
        match self.coeffs.len() {
            0 => Some(CycNumber::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i).cloned().unwrap_or_else(CycNumber::zero);
            let b = other.coeffs.get(i).cloned().unwrap_or_else(CycNumber::zero);
            out.push(&a + &b);
        }
        Self::new(out)
    }

    pub fn neg(&self) -> Self {
        Self::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![CycNumber::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, c: &CycNumber) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn scale_int(&self, k: i64) -> Self {
        self.scale(&CycNumber::from_int(k))
    }

    pub fn eval(&self, x: &CycNumber) -> CycNumber {
        let mut acc = CycNumber::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    /// All coefficients rational?
    pub fn to_rat_poly(&self) -> Option<RatPoly> {
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            out.push(c.to_rational()?);
        }
        Some(RatPoly::new(out))
    }
}

/// Polynomial with rational coefficients, lowest degree first.
#[derive(Clone, Debug, PartialEq)]
pub struct RatPoly {
    pub coeffs: Vec<Rational>,
}

impl RatPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
            coeffs.pop();
        }
        RatPoly { coeffs }
    }

    pub fn zero() -> Self {
        RatPoly { coeffs: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn leading(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * rat_int(i as i64))
            .collect();
        Self::new(coeffs)
    }

    pub fn monic(&self) -> Self {
        let lead = self.leading();
        if lead.is_zero() || lead.is_one() {
            return self.clone();
        }
        Self::new(self.coeffs.iter().map(|c| c / &lead).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    /// Euclidean division, `(quotient, remainder)`.
    pub fn divrem(&self, divisor: &Self) -> (Self, Self) {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        let mut rem = self.coeffs.clone();
        let dlead = divisor.leading();
        let ddeg = divisor.degree();
        if rem.len() < divisor.coeffs.len() {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![Rational::zero(); rem.len() - ddeg];
        while rem.len() >= divisor.coeffs.len() && !rem.is_empty() {
            let rdeg = rem.len() - 1;
            let factor = rem.last().unwrap() / &dlead;
            if factor.is_zero() {
                rem.pop();
                continue;
            }
            quot[rdeg - ddeg] = factor.clone();
            for (i, c) in divisor.coeffs.iter().enumerate() {
                let idx = rdeg - ddeg + i;
                rem[idx] = &rem[idx] - &(c * &factor);
            }
            while rem.last().map(|c| c.is_zero()).unwrap_or(false) {
                rem.pop();
            }
        }
        (Self::new(quot), Self::new(rem))
    }

    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Sturm chain for counting real roots.
    fn sturm_chain(&self) -> Vec<Self> {
        let mut chain = vec![self.clone(), self.derivative()];
        loop {
            let n = chain.len();
            if chain[n - 1].is_zero() {
                chain.pop();
                break;
            }
            let (_, r) = chain[n - 2].divrem(&chain[n - 1]);
            if r.is_zero() {
                break;
            }
            chain.push(Self::new(r.coeffs.iter().map(|c| -c.clone()).collect()));
        }
        chain
    }

    fn sign_variations(chain: &[Self], x: &Rational) -> usize {
        let mut count = 0;
        let mut last: i8 = 0;
        for p in chain {
            let v = p.eval(x);
            let s = if v.is_positive() {
                1
            } else if v.is_negative() {
                -1
            } else {
                0
            };
            if s != 0 {
                if last != 0 && s != last {
                    count += 1;
                }
                last = s;
            }
        }
        count
    }

    /// Number of distinct real roots in the half-open interval `(a, b]`.
    pub fn count_roots_between(&self, a: &Rational, b: &Rational) -> usize {
        let chain = self.sturm_chain();
        Self::sign_variations(&chain, a) - Self::sign_variations(&chain, b)
    }

    /// Cauchy bound: all real roots lie in `[-bound, bound]`.
    pub fn root_bound(&self) -> Rational {
        let lead = self.leading();
        let mut max = Rational::zero();
        for c in &self.coeffs[..self.coeffs.len().saturating_sub(1)] {
            let q = (c / &lead).abs();
            if q > max {
                max = q;
            }
        }
        max + Rational::one()
    }

    /// Isolates the distinct real roots of a squarefree polynomial into
    /// disjoint intervals of width at most `eps`.
    pub fn isolate_real_roots(&self, eps: &Rational) -> Vec<RationalInterval> {
        if self.degree() == 0 {
            return Vec::new();
        }
        let chain = self.sturm_chain();
        let bound = self.root_bound();
        let mut stack = vec![(-bound.clone(), bound)];
        let mut found = Vec::new();
        while let Some((a, b)) = stack.pop() {
            let n = Self::sign_variations(&chain, &a) - Self::sign_variations(&chain, &b);
            if n == 0 {
                continue;
            }
            if n == 1 && (&b - &a) <= *eps {
                found.push(RationalInterval::new(a, b));
                continue;
            }
            let mid = (&a + &b) * rat(1, 2);
            // nudge off a root at the midpoint so the count stays exact
            let mid = if self.eval(&mid).is_zero() {
                (&a + &mid) * rat(1, 2)
            } else {
                mid
            };
            stack.push((a, mid.clone()));
            stack.push((mid, b));
        }
        found.sort_by(|x, y| x.lo.cmp(&y.lo));
        found
    }

    /// Squarefree part `p / gcd(p, p')`.
    pub fn squarefree(&self) -> Self {
        let g = self.gcd(&self.derivative());
        if g.degree() == 0 {
            return self.monic();
        }
        let (q, r) = self.divrem(&g);
        debug_assert!(r.is_zero());
        q.monic()
    }

    /// Rescales to a primitive integer polynomial (content removed).
    fn integer_coeffs(&self) -> Vec<BigInt> {
        let mut den = BigInt::one();
        for c in &self.coeffs {
            den = den.lcm(c.denom());
        }
        let mut ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * &den / c.denom())
            .collect();
        let mut content = BigInt::zero();
        for c in &ints {
            content = content.gcd(c);
        }
        if !content.is_zero() && !content.is_one() {
            for c in ints.iter_mut() {
                *c = &*c / &content;
            }
        }
        ints
    }

    /// All rational roots, found through the rational root theorem.
    pub fn rational_roots(&self) -> Vec<Rational> {
        if self.is_zero() || self.degree() == 0 {
            return Vec::new();
        }
        let ints = self.integer_coeffs();
        let lead = ints.last().unwrap().clone();
        // strip trailing zero coefficients: x = 0 roots
        let mut roots = Vec::new();
        let mut low = 0;
        while low < ints.len() && ints[low].is_zero() {
            low += 1;
        }
        if low > 0 {
            roots.push(Rational::zero());
        }
        if low >= ints.len() - 1 {
            return roots;
        }
        let constant = ints[low].clone();
        for p in divisors(&constant) {
            for q in divisors(&lead) {
                for sign in [1i64, -1] {
                    let cand = Rational::new(&p * BigInt::from(sign), q.clone());
                    if self.eval(&cand).is_zero() && !roots.contains(&cand) {
                        roots.push(cand);
                    }
                }
            }
        }
        roots.sort();
        roots
    }
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    if n.is_zero() {
        return vec![BigInt::one()];
    }
    let mut out = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= n {
        if (&n % &d).is_zero() {
            out.push(d.clone());
            out.push(&n / &d);
        }
        d += 1;
    }
    out.sort();
    out.dedup();
    out
}

/// Failure modes of the cyclotomic root finder.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RootError {
    /// Roots do not lie in the declared conductor, or the degree pattern is
    /// outside the supported (rational / quadratic / prime cubic) range.
    NotRecognized,
}

/// All roots of a rational polynomial that lie in `Q(zeta_conductor)`,
/// including complex quadratic roots. Errors when the polynomial has an
/// irreducible factor the recogniser does not cover.
pub fn roots_in_cyclotomic(poly: &RatPoly, conductor: u64) -> Result<Vec<CycNumber>, RootError> {
    let mut f = poly.squarefree();
    let mut roots: Vec<CycNumber> = Vec::new();
    for r in f.rational_roots() {
        roots.push(CycNumber::from_rational(r.clone()));
        let (q, rem) = f.divrem(&RatPoly::new(vec![-r, Rational::one()]));
        debug_assert!(rem.is_zero());
        f = q;
    }
    match f.degree() {
        0 => Ok(roots),
        1 => {
            // linear after deflation would have been a rational root
            Err(RootError::NotRecognized)
        }
        2 => {
            let a = f.coeffs[2].clone();
            let b = f.coeffs[1].clone();
            let c = f.coeffs[0].clone();
            let disc = &b * &b - rat_int(4) * &a * &c;
            let sqrt = CycNumber::sqrt_rational(&disc);
            let inv_2a = CycNumber::from_rational((rat_int(2) * &a).recip());
            let minus_b = CycNumber::from_rational(-b);
            let r1 = &(&minus_b + &sqrt) * &inv_2a;
            let r2 = &(&minus_b - &sqrt) * &inv_2a;
            roots.push(r1);
            roots.push(r2);
            Ok(roots)
        }
        3 => {
            let cubic = cubic_roots_by_periods(&f, conductor)?;
            roots.extend(cubic);
            Ok(roots)
        }
        _ => Err(RootError::NotRecognized),
    }
}

/// Roots of an irreducible totally-real cubic inside the degree-three real
/// subfield of `Q(zeta_q)` for a prime power `q` dividing the conductor.
///
/// Strategy: roots of the monic integer model are algebraic integers, hence
/// integer combinations of `{1, eta_1, eta_1^2}` with `eta_k` the Gaussian
/// periods. Certified numerics propose the integer coordinates; the
/// candidate is then verified exactly, so the numerics never decide.
fn cubic_roots_by_periods(f: &RatPoly, conductor: u64) -> Result<Vec<CycNumber>, RootError> {
    // monic integer model: y = lead * denlcm * x
    let ints = f.integer_coeffs();
    let lead = ints.last().unwrap().clone();
    // g(y) = y^3 + c2 y^2 + c1 lead y + c0 lead^2 for f = lead x^3 + ...
    let c2 = Rational::new(ints[2].clone(), BigInt::one());
    let c1 = Rational::new(&ints[1] * &lead, BigInt::one());
    let c0 = Rational::new(&ints[0] * &lead * &lead, BigInt::one());
    let g = RatPoly::new(vec![c0, c1, c2, Rational::one()]);

    for q in cubic_subfield_conductors(conductor) {
        if let Some(roots) = try_period_reconstruction(&g, q) {
            // map back: x = y / lead
            let inv_lead = CycNumber::from_rational(Rational::new(BigInt::one(), lead.clone()));
            let mapped: Vec<CycNumber> = roots.iter().map(|y| y * &inv_lead).collect();
            if mapped.iter().all(|x| {
                f.coeffs
                    .iter()
                    .rev()
                    .fold(CycNumber::zero(), |acc, c| {
                        &(&acc * x) + &CycNumber::from_rational(c.clone())
                    })
                    .is_zero()
            }) {
                return Ok(mapped);
            }
        }
    }
    Err(RootError::NotRecognized)
}

/// Prime powers `q` dividing `conductor` whose real cyclotomic subfield has
/// degree three (`phi(q) = 6`).
fn cubic_subfield_conductors(conductor: u64) -> Vec<u64> {
    [7u64, 9]
        .into_iter()
        .filter(|q| conductor % q == 0)
        .collect()
}

fn try_period_reconstruction(g: &RatPoly, q: u64) -> Option<Vec<CycNumber>> {
    use crate::phase::PhaseExponent;
    // period eta_k = zeta_q^k + zeta_q^{-k}
    let eta = |k: u64| -> CycNumber {
        let z = CycNumber::root_of_unity(&PhaseExponent::from_ratio(k as i64, q as i64));
        &z + &z.conj()
    };
    // generator of the order-3 Galois quotient
    let gen = (2..q).find(|&a| {
        a.gcd(&q) == 1 && {
            let a2 = (a * a) % q;
            let a3 = (a2 * a) % q;
            a3 == 1 || a3 == q - 1
        }
    })?;
    let e1 = eta(1);
    let e2 = eta((2u64) % q);
    // real embeddings of (eta(1), eta(2)) under the three Galois slots
    let prec = 40u32;
    let mut rows = Vec::new();
    let mut a_pow = 1u64;
    for _ in 0..3 {
        let v1 = eta(a_pow % q).real_interval(prec).ok()?;
        let v2 = eta((2 * a_pow) % q).real_interval(prec).ok()?;
        rows.push((v1, v2));
        a_pow = (a_pow * gen) % q;
    }
    // certified root enclosures
    let eps = Rational::new(BigInt::one(), BigInt::from(10u64).pow(25));
    let mut root_ivs = g.isolate_real_roots(&eps);
    if root_ivs.len() != 3 {
        return None;
    }
    // try the six assignments of roots to Galois slots
    let perms: [[usize; 3]; 6] = [
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ];
    root_ivs.sort_by(|x, y| x.lo.cmp(&y.lo));
    for perm in perms {
        if let Some((a, b, c)) = solve_integer_coords(&rows, &root_ivs, &perm) {
            let cand = &(&CycNumber::from_rational(a)
                + &e1.scale(&b))
                + &e2.scale(&c);
            let val = g
                .coeffs
                .iter()
                .rev()
                .fold(CycNumber::zero(), |acc, cf| {
                    &(&acc * &cand) + &CycNumber::from_rational(cf.clone())
                });
            if val.is_zero() {
                let r2 = cand.galois(gen);
                let r3 = r2.galois(gen);
                return Some(vec![cand, r2, r3]);
            }
        }
    }
    None
}

/// Solves the 3x3 system `a + b eta1_j + c eta2_j = root_{perm(j)}` over
/// interval arithmetic and rounds to integers when the enclosure is tight.
fn solve_integer_coords(
    rows: &[(RationalInterval, RationalInterval)],
    roots: &[RationalInterval],
    perm: &[usize; 3],
) -> Option<(Rational, Rational, Rational)> {
    // work with midpoints; verification happens exactly afterwards
    let m = |iv: &RationalInterval| iv.midpoint();
    let (a11, a12) = (m(&rows[0].0), m(&rows[0].1));
    let (a21, a22) = (m(&rows[1].0), m(&rows[1].1));
    let (a31, a32) = (m(&rows[2].0), m(&rows[2].1));
    let r1 = m(&roots[perm[0]]);
    let r2 = m(&roots[perm[1]]);
    let r3 = m(&roots[perm[2]]);
    // 3x3 Cramer with first column = 1
    let det = det3(
        &rat_int(1), &a11, &a12,
        &rat_int(1), &a21, &a22,
        &rat_int(1), &a31, &a32,
    );
    if det.is_zero() {
        return None;
    }
    let da = det3(&r1, &a11, &a12, &r2, &a21, &a22, &r3, &a31, &a32);
    let db = det3(&rat_int(1), &r1, &a12, &rat_int(1), &r2, &a22, &rat_int(1), &r3, &a32);
    let dc = det3(&rat_int(1), &a11, &r1, &rat_int(1), &a21, &r2, &rat_int(1), &a31, &r3);
    let a = round_to_int(&(da / &det))?;
    let b = round_to_int(&(db / &det))?;
    let c = round_to_int(&(dc / &det))?;
    Some((a, b, c))
}

#[allow(clippy::too_many_arguments)]
fn det3(
    a: &Rational, b: &Rational, c: &Rational,
    d: &Rational, e: &Rational, f: &Rational,
    g: &Rational, h: &Rational, i: &Rational,
) -> Rational {
    a * &(e * i - f * h) - b * &(d * i - f * g) + c * &(d * h - e * g)
}

/// Rounds to the nearest integer when within 1e-6 of one.
fn round_to_int(r: &Rational) -> Option<Rational> {
    let rounded = r.round();
    let tol = Rational::new(BigInt::one(), BigInt::from(1_000_000u64));
    if (r - &rounded).abs() < tol {
        Some(rounded)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64]) -> RatPoly {
        RatPoly::new(coeffs.iter().map(|&c| rat_int(c)).collect())
    }

    #[test]
    fn division_and_gcd() {
        // (x-1)(x-2) = x^2 - 3x + 2
        let f = p(&[2, -3, 1]);
        let g = p(&[-1, 1]);
        let (q, r) = f.divrem(&g);
        assert!(r.is_zero());
        assert_eq!(q, p(&[-2, 1]));
        assert_eq!(f.gcd(&p(&[-1, 1])), p(&[-1, 1]).monic());
    }

    #[test]
    fn rational_root_extraction() {
        let f = p(&[6, -5, 1]); // (x-2)(x-3)
        assert_eq!(f.rational_roots(), vec![rat_int(2), rat_int(3)]);
        let g = p(&[0, -1, 1]); // x(x-1)
        assert_eq!(g.rational_roots(), vec![rat_int(0), rat_int(1)]);
    }

    #[test]
    fn sturm_isolation() {
        // roots at 1, 2, 3
        let f = p(&[-6, 11, -6, 1]);
        let ivs = f.isolate_real_roots(&rat(1, 100));
        assert_eq!(ivs.len(), 3);
        assert!(ivs[0].contains(&rat_int(1)));
        assert!(ivs[1].contains(&rat_int(2)));
        assert!(ivs[2].contains(&rat_int(3)));
    }

    #[test]
    fn quadratic_roots_in_field() {
        // x^2 - x - 1: golden ratio pair
        let f = p(&[-1, -1, 1]);
        let roots = roots_in_cyclotomic(&f, 5).unwrap();
        assert_eq!(roots.len(), 2);
        for r in &roots {
            assert!(f
                .coeffs
                .iter()
                .rev()
                .fold(CycNumber::zero(), |acc, c| &(&acc * r)
                    + &CycNumber::from_rational(c.clone()))
                .is_zero());
        }
    }

    #[test]
    fn cubic_roots_by_gaussian_periods() {
        // minimal polynomial of 2cos(pi/7): x^3 - x^2 - 2x + 1, splits in Q(zeta_7)
        let f = p(&[1, -2, -1, 1]);
        let roots = roots_in_cyclotomic(&f, 7).unwrap();
        assert_eq!(roots.len(), 3);
        for r in &roots {
            let val = f
                .coeffs
                .iter()
                .rev()
                .fold(CycNumber::zero(), |acc, c| &(&acc * r)
                    + &CycNumber::from_rational(c.clone()));
            assert!(val.is_zero());
            assert!(r.is_real());
        }
        // one of them is 2cos(pi/7) ~ 1.8019
        assert!(roots
            .iter()
            .any(|r| (r.approx().0 - 1.8019377).abs() < 1e-5));
    }

    #[test]
    fn unrecognized_degree_errors() {
        // x^5 - x - 1 is irreducible and certainly not handled
        let f = p(&[-1, -1, 0, 0, 0, 1]);
        assert_eq!(roots_in_cyclotomic(&f, 7), Err(RootError::NotRecognized));
    }
}
