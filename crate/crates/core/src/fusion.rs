//! Fusion rings: axiom validation, ring characters, and Frobenius-Perron
//! dimension data.
//!
//! Characters (ring homomorphisms into the scalar field) are found by a
//! small constraint solver: invertible objects are branched over roots of
//! unity, self-fusion relations with concrete coefficients are solved by the
//! quadratic formula (Gauss-sum square roots keep everything exact), and a
//! single symbolic unknown handles the singly-generated rings whose
//! character values are cubic irrationalities. Every candidate assignment is
//! verified against the full set of character equations before it is
//! returned, so the search heuristics never decide correctness.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::cyclotomic::CycNumber;
use crate::phase::PhaseExponent;
use crate::poly::{roots_in_cyclotomic, CycPoly};
use crate::{rat, rat_int, BigInt, Rational};

/// A fusion ring: rank, duality involution and the fusion tensor
/// `N[i][j][k]` giving the multiplicity of `b_k` in `b_i (x) b_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FusionRing {
    labels: Vec<String>,
    dual: Vec<usize>,
    tensor: Vec<u32>,
}

/// One violated fusion-ring axiom, report style.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AxiomViolation {
    Shape(String),
    UnitLaw { i: usize, j: usize, k: usize },
    DualInvolution { i: usize },
    Duality { i: usize, j: usize },
    FrobeniusReciprocity { i: usize, j: usize, k: usize },
    Associativity { i: usize, j: usize, k: usize, l: usize },
}

impl core::fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            AxiomViolation::Shape(s) => write!(f, "shape: {}", s),
            AxiomViolation::UnitLaw { i, j, k } => {
                write!(f, "unit law fails at N[{}][{}][{}]", i, j, k)
            }
            AxiomViolation::DualInvolution { i } => {
                write!(f, "duality is not an involution fixing the unit at {}", i)
            }
            AxiomViolation::Duality { i, j } => {
                write!(f, "N[{}][{}][0] inconsistent with duality", i, j)
            }
            AxiomViolation::FrobeniusReciprocity { i, j, k } => {
                write!(f, "Frobenius reciprocity fails at ({}, {}, {})", i, j, k)
            }
            AxiomViolation::Associativity { i, j, k, l } => {
                write!(f, "associativity fails at ({}, {}, {}, {})", i, j, k, l)
            }
        }
    }
}

impl FusionRing {
    /// Builds a ring from labels, duality and the flattened tensor
    /// (row-major `[i][j][k]`). Panics on shape mismatch; the ring axioms
    /// are checked separately by [`FusionRing::validate`].
    pub fn new(labels: Vec<String>, dual: Vec<usize>, tensor: Vec<u32>) -> Self {
        let rank = labels.len();
        assert_eq!(dual.len(), rank, "dual permutation length");
        assert_eq!(tensor.len(), rank * rank * rank, "tensor length");
        FusionRing {
            labels,
            dual,
            tensor,
        }
    }

    /// Convenience constructor from a table of products:
    /// `table[i][j]` lists the summands of `b_i (x) b_j` (with multiplicity).
    pub fn from_products(labels: &[&str], dual: Vec<usize>, table: &[&[&[usize]]]) -> Self {
        let rank = labels.len();
        let mut tensor = vec![0u32; rank * rank * rank];
        for (i, row) in table.iter().enumerate() {
            for (j, prod) in row.iter().enumerate() {
                for &k in prod.iter() {
                    tensor[(i * rank + j) * rank + k] += 1;
                }
            }
        }
        Self::new(
            labels.iter().map(|s| String::from(*s)).collect(),
            dual,
            tensor,
        )
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn dual(&self, i: usize) -> usize {
        self.dual[i]
    }

    pub fn dual_map(&self) -> &[usize] {
        &self.dual
    }

    pub fn tensor(&self) -> &[u32] {
        &self.tensor
    }

    #[inline]
    pub fn n(&self, i: usize, j: usize, k: usize) -> u32 {
        self.tensor[(i * self.rank() + j) * self.rank() + k]
    }

    /// Fusion matrix `(N_i)_{jk}`.
    pub fn fusion_matrix(&self, i: usize) -> Vec<Vec<u32>> {
        let r = self.rank();
        (0..r)
            .map(|j| (0..r).map(|k| self.n(i, j, k)).collect())
            .collect()
    }

    pub fn is_commutative(&self) -> bool {
        let r = self.rank();
        for i in 0..r {
            for j in 0..i {
                for k in 0..r {
                    if self.n(i, j, k) != self.n(j, i, k) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Invertible objects satisfy `b (x) b* = 1` on the nose.
    pub fn is_invertible(&self, i: usize) -> bool {
        let r = self.rank();
        (0..r).all(|k| self.n(i, self.dual(i), k) == u32::from(k == 0))
    }

    /// Multiplicative order of an invertible object.
    pub fn invertible_order(&self, i: usize) -> Option<u32> {
        if !self.is_invertible(i) {
            return None;
        }
        let r = self.rank();
        let mut current = i; // i^1
        let mut order = 1u32;
        while current != 0 {
            // the product of invertibles is a single simple object
            let mut next = None;
            for k in 0..r {
                if self.n(current, i, k) > 0 {
                    if next.is_some() {
                        return None;
                    }
                    next = Some(k);
                }
            }
            current = next?;
            order += 1;
            if order > 64 {
                return None;
            }
        }
        Some(order)
    }

    /// Report-style axiom check; an empty list means the ring is valid.
    pub fn validate(&self) -> Vec<AxiomViolation> {
        let r = self.rank();
        let mut out = Vec::new();
        if r == 0 {
            out.push(AxiomViolation::Shape(String::from("empty ring")));
            return out;
        }
        if self.dual[0] != 0 {
            out.push(AxiomViolation::DualInvolution { i: 0 });
        }
        for i in 0..r {
            if self.dual[i] >= r || self.dual[self.dual[i].min(r - 1)] != i {
                out.push(AxiomViolation::DualInvolution { i });
            }
        }
        for j in 0..r {
            for k in 0..r {
                let expected = u32::from(j == k);
                if self.n(0, j, k) != expected || self.n(j, 0, k) != expected {
                    out.push(AxiomViolation::UnitLaw { i: 0, j, k });
                }
            }
        }
        for i in 0..r {
            for j in 0..r {
                let expected = u32::from(j == self.dual[i]);
                if self.n(i, j, 0) != expected {
                    out.push(AxiomViolation::Duality { i, j });
                }
            }
        }
        for i in 0..r {
            for j in 0..r {
                for k in 0..r {
                    if self.n(i, j, k) != self.n(self.dual[i], k, j) {
                        out.push(AxiomViolation::FrobeniusReciprocity { i, j, k });
                    }
                }
            }
        }
        for i in 0..r {
            for j in 0..r {
                for k in 0..r {
                    for l in 0..r {
                        let lhs: u64 = (0..r)
                            .map(|m| self.n(i, j, m) as u64 * self.n(m, k, l) as u64)
                            .sum();
                        let rhs: u64 = (0..r)
                            .map(|m| self.n(j, k, m) as u64 * self.n(i, m, l) as u64)
                            .sum();
                        if lhs != rhs {
                            out.push(AxiomViolation::Associativity { i, j, k, l });
                        }
                    }
                }
            }
        }
        out
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_empty()
    }
}

/// A real character of the fusion ring with all values nonzero; entries may
/// be negative (quantum dimensions of non-unitary data).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimensionCharacter {
    pub dims: Vec<CycNumber>,
}

impl DimensionCharacter {
    /// Global (categorical) dimension `sum d_i^2`.
    pub fn categorical_dimension(&self) -> CycNumber {
        let mut total = CycNumber::zero();
        for d in &self.dims {
            total = &total + &(d * d);
        }
        total
    }

    pub fn is_integral(&self) -> bool {
        self.dims.iter().all(|d| {
            d.to_rational()
                .map(|r| r.denom().is_one())
                .unwrap_or(false)
        })
    }
}

/// Frobenius-Perron dimension data: the unique all-positive character.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FpData {
    pub dims: Vec<CycNumber>,
    pub total: CycNumber,
}

/// Failure modes of character and Frobenius-Perron computations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CharacterError {
    InvalidRing,
    RankTooLarge,
    /// A value was not recognizable over the declared conductor.
    NotRecognized,
    /// No all-positive character exists (bad catalog data).
    NoPositiveCharacter,
    /// Exact solution and certified power iteration disagree.
    CrossCheckFailed,
}

struct SolverState {
    values: Vec<Option<CycPoly>>,
    symbol_used: bool,
}

impl FusionRing {
    /// All characters of the fusion algebra (including complex and
    /// zero-valued ones), each verified against every character equation.
    ///
    /// `conductor_hint` names the cyclotomic field in which irrational
    /// values are searched; rings whose characters live in quadratic fields
    /// ignore it.
    pub fn all_characters(&self, conductor_hint: u64) -> Result<Vec<Vec<CycNumber>>, CharacterError> {
        if !self.is_valid() {
            return Err(CharacterError::InvalidRing);
        }
        let r = self.rank();
        let mut stack = vec![SolverState {
            values: {
                let mut v = vec![None; r];
                v[0] = Some(CycPoly::constant(CycNumber::one()));
                v
            },
            symbol_used: false,
        }];
        let mut solutions: Vec<Vec<CycNumber>> = Vec::new();
        let mut guard = 0usize;
        while let Some(state) = stack.pop() {
            guard += 1;
            if guard > 4096 {
                return Err(CharacterError::NotRecognized);
            }
            match self.advance(state, conductor_hint, &mut solutions)? {
                StepOutcome::Done => {}
                StepOutcome::Branched(children) => stack.extend(children),
            }
        }
        // dedup
        let mut unique: Vec<Vec<CycNumber>> = Vec::new();
        for s in solutions {
            if !unique.contains(&s) {
                unique.push(s);
            }
        }
        Ok(unique)
    }

    fn advance(
        &self,
        mut state: SolverState,
        conductor_hint: u64,
        solutions: &mut Vec<Vec<CycNumber>>,
    ) -> Result<StepOutcome, CharacterError> {
        let r = self.rank();
        // propagate linear assignments to a fixed point
        loop {
            let mut progressed = false;
            for i in 0..r {
                for j in 0..r {
                    let (vi, vj) = match (&state.values[i], &state.values[j]) {
                        (Some(a), Some(b)) => (a.clone(), b.clone()),
                        _ => continue,
                    };
                    let mut unassigned = Vec::new();
                    for k in 0..r {
                        if self.n(i, j, k) > 0 && state.values[k].is_none() {
                            unassigned.push(k);
                        }
                    }
                    if unassigned.len() == 1 {
                        let k0 = unassigned[0];
                        let mut rhs = vi.mul(&vj);
                        for k in 0..r {
                            let nij = self.n(i, j, k);
                            if nij > 0 && k != k0 {
                                let vk = state.values[k].clone().unwrap();
                                rhs = rhs.sub(&vk.scale_int(nij as i64));
                            }
                        }
                        let coef = self.n(i, j, k0) as i64;
                        let value = rhs.scale(&CycNumber::from_rational(rat(1, coef)));
                        state.values[k0] = Some(value);
                        progressed = true;
                    }
                }
            }
            if !progressed {
                break;
            }
        }

        if state.values.iter().all(|v| v.is_some()) {
            self.finish(state, conductor_hint, solutions)?;
            return Ok(StepOutcome::Done);
        }

        // branch an unassigned invertible object over roots of unity
        if let Some(i) = (0..r).find(|&i| state.values[i].is_none() && self.is_invertible(i)) {
            if let Some(order) = self.invertible_order(i) {
                let mut children = Vec::new();
                for j in 0..order {
                    let root = CycNumber::root_of_unity(&PhaseExponent::from_ratio(
                        j as i64,
                        order as i64,
                    ));
                    let mut child = SolverState {
                        values: state.values.clone(),
                        symbol_used: state.symbol_used,
                    };
                    child.values[i] = Some(CycPoly::constant(root));
                    children.push(child);
                }
                return Ok(StepOutcome::Branched(children));
            }
        }

        // quadratic self-fusion with concrete constants
        for i in 0..r {
            if state.values[i].is_some() {
                continue;
            }
            let mut constant = Some(CycNumber::zero());
            let mut applicable = false;
            for k in 0..r {
                let n = self.n(i, i, k);
                if n == 0 {
                    continue;
                }
                applicable = true;
                if k == i {
                    continue; // linear term, handled below
                }
                match &state.values[k] {
                    Some(p) => match p.as_constant() {
                        Some(c) => {
                            constant = constant
                                .map(|acc| &acc + &c.scale(&rat_int(n as i64)));
                        }
                        None => constant = None,
                    },
                    None => constant = None,
                }
            }
            let constant = match (applicable, constant) {
                (true, Some(c)) => c,
                _ => continue,
            };
            // x^2 - n_ii^i x - constant = 0
            let lin = self.n(i, i, i) as i64;
            let disc = &CycNumber::from_rational(rat_int(lin * lin))
                + &constant.scale(&rat_int(4));
            let disc_rat = match disc.to_rational() {
                Some(d) => d,
                None => continue,
            };
            let sqrt = CycNumber::sqrt_rational(&disc_rat);
            let half = rat(1, 2);
            let b = CycNumber::from_rational(rat_int(lin));
            let r1 = (&b + &sqrt).scale(&half);
            let r2 = (&b - &sqrt).scale(&half);
            let mut children = Vec::new();
            let mut seen = Vec::new();
            for root in [r1, r2] {
                if seen.contains(&root) {
                    continue;
                }
                seen.push(root.clone());
                let mut child = SolverState {
                    values: state.values.clone(),
                    symbol_used: state.symbol_used,
                };
                child.values[i] = Some(CycPoly::constant(root));
                children.push(child);
            }
            return Ok(StepOutcome::Branched(children));
        }

        // introduce the single symbolic unknown
        if !state.symbol_used {
            let i = (0..r).find(|&i| state.values[i].is_none()).unwrap();
            let mut child = SolverState {
                values: state.values,
                symbol_used: true,
            };
            child.values[i] = Some(CycPoly::symbol());
            return Ok(StepOutcome::Branched(vec![child]));
        }

        Err(CharacterError::NotRecognized)
    }

    fn finish(
        &self,
        state: SolverState,
        conductor_hint: u64,
        solutions: &mut Vec<Vec<CycNumber>>,
    ) -> Result<(), CharacterError> {
        let r = self.rank();
        let values: Vec<CycPoly> = state.values.into_iter().map(|v| v.unwrap()).collect();
        // collect constraint polynomials
        let mut constraints: Vec<CycPoly> = Vec::new();
        for i in 0..r {
            for j in 0..r {
                let mut rhs = CycPoly::zero();
                for k in 0..r {
                    let n = self.n(i, j, k);
                    if n > 0 {
                        rhs = rhs.add(&values[k].scale_int(n as i64));
                    }
                }
                let c = values[i].mul(&values[j]).sub(&rhs);
                if !c.is_zero() {
                    constraints.push(c);
                }
            }
        }
        if !state.symbol_used {
            if constraints.is_empty() {
                let sol: Vec<CycNumber> =
                    values.iter().map(|v| v.as_constant().unwrap()).collect();
                solutions.push(sol);
            }
            return Ok(());
        }
        if constraints.is_empty() {
            // a free symbol cannot remain in a finite character variety
            return Err(CharacterError::NotRecognized);
        }
        let mut gcd: Option<crate::poly::RatPoly> = None;
        for c in &constraints {
            let rp = c.to_rat_poly().ok_or(CharacterError::NotRecognized)?;
            gcd = Some(match gcd {
                None => rp,
                Some(g) => g.gcd(&rp),
            });
        }
        let gcd = gcd.unwrap();
        if gcd.degree() == 0 {
            return Ok(()); // inconsistent branch, no roots
        }
        let roots =
            roots_in_cyclotomic(&gcd, conductor_hint).map_err(|_| CharacterError::NotRecognized)?;
        for root in roots {
            let sol: Vec<CycNumber> = values.iter().map(|v| v.eval(&root)).collect();
            if self.verify_character(&sol) {
                solutions.push(sol);
            }
        }
        Ok(())
    }

    fn verify_character(&self, chi: &[CycNumber]) -> bool {
        let r = self.rank();
        for i in 0..r {
            for j in 0..r {
                let mut rhs = CycNumber::zero();
                for k in 0..r {
                    let n = self.n(i, j, k);
                    if n > 0 {
                        rhs = &rhs + &chi[k].scale(&rat_int(n as i64));
                    }
                }
                if &chi[i] * &chi[j] != rhs {
                    return false;
                }
            }
        }
        true
    }

    /// All real characters with nonzero entries, in the deterministic order
    /// given by lexicographic comparison of certified interval midpoints.
    pub fn dimension_characters(
        &self,
        conductor_hint: u64,
    ) -> Result<Vec<DimensionCharacter>, CharacterError> {
        if self.rank() > 4 {
            return Err(CharacterError::RankTooLarge);
        }
        let mut real: Vec<Vec<CycNumber>> = self
            .all_characters(conductor_hint)?
            .into_iter()
            .filter(|chi| chi.iter().all(|v| v.is_real() && !v.is_zero()))
            .collect();
        real.sort_by(|a, b| {
            for (x, y) in a.iter().zip(b.iter()) {
                match x.cmp_real(y) {
                    core::cmp::Ordering::Equal => continue,
                    other => return other,
                }
            }
            core::cmp::Ordering::Equal
        });
        Ok(real
            .into_iter()
            .map(|dims| DimensionCharacter { dims })
            .collect())
    }

    /// The Frobenius-Perron character: the unique real character with all
    /// entries at least one, cross-checked against certified power
    /// iteration on each fusion matrix to `10^-9`.
    pub fn fp_dims(&self, conductor_hint: u64) -> Result<FpData, CharacterError> {
        let one = rat_int(1);
        let candidates: Vec<Vec<CycNumber>> = self
            .all_characters(conductor_hint)?
            .into_iter()
            .filter(|chi| chi.iter().all(|v| v.is_real() && !v.is_zero() && v.at_least(&one)))
            .collect();
        if candidates.len() != 1 {
            return Err(CharacterError::NoPositiveCharacter);
        }
        let dims = candidates.into_iter().next().unwrap();
        let tol = Rational::new(BigInt::from(1), BigInt::from(1_000_000_000u64));
        for (i, d) in dims.iter().enumerate() {
            let (lo, hi) = self
                .pf_eigenvalue_bounds(i, &tol)
                .ok_or(CharacterError::CrossCheckFailed)?;
            let iv = d
                .real_interval(10)
                .map_err(|_| CharacterError::CrossCheckFailed)?;
            if iv.hi < lo - &tol || iv.lo > hi + &tol {
                return Err(CharacterError::CrossCheckFailed);
            }
        }
        let mut total = CycNumber::zero();
        for d in &dims {
            total = &total + &(d * d);
        }
        Ok(FpData { dims, total })
    }

    /// Certified Collatz-Wielandt bounds for the Perron root of `N_i`,
    /// computed on the aperiodic shift `N_i + 1`.
    pub fn pf_eigenvalue_bounds(&self, i: usize, tol: &Rational) -> Option<(Rational, Rational)> {
        let r = self.rank();
        let m = self.fusion_matrix(i);
        let mut v: Vec<BigInt> = vec![BigInt::from(1); r];
        for _ in 0..20_000 {
            let mut w: Vec<BigInt> = vec![BigInt::zero(); r];
            for a in 0..r {
                for b in 0..r {
                    if m[a][b] > 0 {
                        w[a] += BigInt::from(m[a][b]) * &v[b];
                    }
                }
                w[a] += &v[a]; // the +1 shift
            }
            let mut lo: Option<Rational> = None;
            let mut hi: Option<Rational> = None;
            for a in 0..r {
                let ratio = Rational::new(w[a].clone(), v[a].clone());
                if lo.as_ref().map(|l| ratio < *l).unwrap_or(true) {
                    lo = Some(ratio.clone());
                }
                if hi.as_ref().map(|h| ratio > *h).unwrap_or(true) {
                    hi = Some(ratio);
                }
            }
            let (lo, hi) = (lo.unwrap(), hi.unwrap());
            if &hi - &lo <= *tol {
                let one = rat_int(1);
                return Some((lo - &one, hi - &one));
            }
            // keep integers bounded by dividing out the gcd
            let mut g = BigInt::zero();
            for x in &w {
                g = g.gcd(x);
            }
            if g > BigInt::from(1) {
                for x in w.iter_mut() {
                    *x = &*x / &g;
                }
            }
            v = w;
        }
        None
    }
}

enum StepOutcome {
    Done,
    Branched(Vec<SolverState>),
}

/// Multiplicity of each label in a candidate algebra object, rendered as
/// `1 (+) 2X`-style strings by the report layer.
pub fn pretty_multiplicities(ring: &FusionRing, n: &[u32]) -> String {
    let mut parts: Vec<String> = Vec::new();
    for (i, &mult) in n.iter().enumerate() {
        if mult == 0 {
            continue;
        }
        let label = ring.label(i);
        if mult == 1 {
            parts.push(String::from(label));
        } else {
            parts.push(format!("{}{}", mult, label));
        }
    }
    if parts.is_empty() {
        String::from("0")
    } else {
        parts.join(" (+) ")
    }
}


#[cfg(test)]
mod tests {
    use super::test_rings::*;
    use super::*;

    #[test]
    fn validation_accepts_catalog_style_rings() {
        for ring in [trivial(), z2(), fib(), z3(), ising(), rep_s3(), psu2_5()] {
            assert!(ring.validate().is_empty(), "ring {:?}", ring.labels());
        }
    }

    #[test]
    fn validation_reports_broken_duality() {
        // Z/3 fusion with duality forced to the identity: N[X][X][0] = 0
        // but dual(X) = X demands 1
        let broken = FusionRing::from_products(
            &["1", "X", "Y"],
            vec![0, 1, 2],
            &[
                &[&[0], &[1], &[2]],
                &[&[1], &[2], &[0]],
                &[&[2], &[0], &[1]],
            ],
        );
        let violations = broken.validate();
        assert!(violations
            .iter()
            .any(|v| matches!(v, AxiomViolation::Duality { .. })));
    }

    #[test]
    fn z2_characters() {
        let chars = z2().dimension_characters(4).unwrap();
        let values: Vec<Rational> = chars
            .iter()
            .map(|c| c.dims[1].to_rational().unwrap())
            .collect();
        assert_eq!(values, vec![rat_int(-1), rat_int(1)]);
    }

    #[test]
    fn fib_fp_dims() {
        let fp = fib().fp_dims(5).unwrap();
        // dims (1, (1+sqrt5)/2), total (5+sqrt5)/2
        let phi = (&CycNumber::one() + &CycNumber::sqrt_rational(&rat_int(5))).scale(&rat(1, 2));
        assert_eq!(fp.dims[1], phi);
        let expected_total =
            (&CycNumber::from_int(5) + &CycNumber::sqrt_rational(&rat_int(5))).scale(&rat(1, 2));
        assert_eq!(fp.total, expected_total);
    }

    #[test]
    fn ising_characters_and_fp() {
        let chars = ising().dimension_characters(8).unwrap();
        assert_eq!(chars.len(), 2);
        let s2 = CycNumber::sqrt_rational(&rat_int(2));
        assert_eq!(chars[0].dims[2], -&s2);
        assert_eq!(chars[1].dims[2], s2);
        let fp = ising().fp_dims(8).unwrap();
        assert_eq!(fp.total.to_rational().unwrap(), rat_int(4));
    }

    #[test]
    fn z3_unique_real_character() {
        let chars = z3().dimension_characters(3).unwrap();
        assert_eq!(chars.len(), 1);
        assert!(chars[0].dims.iter().all(|d| d.to_rational() == Some(rat_int(1))));
        let fp = z3().fp_dims(3).unwrap();
        assert_eq!(fp.total.to_rational().unwrap(), rat_int(3));
    }

    #[test]
    fn rep_s3_characters() {
        let chars = rep_s3().dimension_characters(3).unwrap();
        // nonzero real characters: d_Y = -1 and d_Y = 2 (the zero-valued
        // character (1, -1, 0) is excluded)
        assert_eq!(chars.len(), 2);
        let dy: Vec<Rational> = chars
            .iter()
            .map(|c| c.dims[2].to_rational().unwrap())
            .collect();
        assert_eq!(dy, vec![rat_int(-1), rat_int(2)]);
        // categorical dimensions 3 and 6
        assert_eq!(
            chars[0].categorical_dimension().to_rational().unwrap(),
            rat_int(3)
        );
        assert_eq!(
            chars[1].categorical_dimension().to_rational().unwrap(),
            rat_int(6)
        );
    }

    #[test]
    fn psu2_5_three_sine_ratio_characters() {
        let chars = psu2_5().dimension_characters(7).unwrap();
        assert_eq!(chars.len(), 3);
        for c in &chars {
            assert!(c.dims.iter().all(|d| d.is_real() && !d.is_zero()));
        }
        // the all-positive one is the FP character
        let fp = psu2_5().fp_dims(7).unwrap();
        assert!(chars.iter().any(|c| c.dims == fp.dims));
        let (x, _) = fp.dims[1].approx();
        let (y, _) = fp.dims[2].approx();
        assert!((x - 1.8019377).abs() < 1e-6);
        assert!((y - 2.2469796).abs() < 1e-6);
        // FPdim(B) = 7 / (4 sin^2(pi/7)) ~ 9.295
        let (total, _) = fp.total.approx();
        assert!((total - 9.2958968).abs() < 1e-6);
    }

    #[test]
    fn fp_dims_duality_invariance() {
        for ring in [z2(), fib(), z3(), ising(), rep_s3(), psu2_5()] {
            let hint = 2520; // generous common conductor for the test
            let fp = ring.fp_dims(hint).unwrap();
            for i in 0..ring.rank() {
                assert_eq!(fp.dims[i], fp.dims[ring.dual(i)]);
            }
            assert!(fp
                .total
                .at_least(&Rational::from(BigInt::from(ring.rank() as u32))));
        }
    }
}
