//! Pre-modular category data: S and T matrices, central charge,
//! Frobenius-Schur indicators, monodromy phases, and the bounded-denominator
//! conformal-dimension solver.
//!
//! A dataset is a fusion ring together with a real nonzero dimension
//! character, conformal dimensions `h_i` (rationals mod 1) and a sign choice
//! for the total dimension `D`. The unnormalised S-matrix is
//! `S_{ij} = sum_k N_{ij}^k e^{2 pi i (h_k - h_i - h_j)} d_k`, evaluated
//! exactly. Modularity is `det S != 0`, also exact.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::cyclotomic::{cos_sin_2pi, CycNumber};
use crate::fusion::{DimensionCharacter, FpData, FusionRing};
use crate::phase::PhaseExponent;
use crate::{rat_int, BigInt, Rational};

/// Unnormalised S-matrix (quantum traces of double braidings).
#[derive(Clone, Debug, PartialEq)]
pub struct SMatrix {
    pub entries: Vec<Vec<CycNumber>>,
}

impl SMatrix {
    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    pub fn is_symmetric_matrix(&self) -> bool {
        let r = self.rank();
        (0..r).all(|i| (0..r).all(|j| self.entries[i][j] == self.entries[j][i]))
    }

    pub fn first_row(&self) -> &[CycNumber] {
        &self.entries[0]
    }

    pub fn det(&self) -> CycNumber {
        det(&self.entries)
    }
}

/// Monodromy phases `theta(i,j,k) = h_k - h_i - h_j` on admissible channels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonodromyTable {
    pub phases: BTreeMap<(usize, usize, usize), PhaseExponent>,
}

/// A pre-modular dataset over a fusion ring.
#[derive(Clone, Debug)]
pub struct PreModularCategory {
    pub id: String,
    pub family: String,
    ring: FusionRing,
    dims: DimensionCharacter,
    fp: FpData,
    h: Vec<PhaseExponent>,
    d_sign: i8,
    /// Positive square root of the categorical dimension, when the dataset
    /// needs one (central charge of modular data); verified on construction.
    total_sqrt: Option<CycNumber>,
    /// Display parameters, e.g. `dX = 1`, `h = 1/4`.
    pub params: BTreeMap<String, String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PremodularError {
    InvalidRing,
    NotACharacter,
    CharacterNotReal,
    BadPhases(String),
    BadSign,
    BadTotalSqrt,
    Characters(crate::fusion::CharacterError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ChargeError {
    Degenerate,
    /// `(ST)^3` is not a scalar multiple of `S^2`.
    InconsistentData,
    /// The scalar is not a root of unity in its field.
    NotRootOfUnity,
    /// The dataset carries no usable square root of `D^2`.
    MissingTotalSqrt,
}

impl PreModularCategory {
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        id: String,
        family: String,
        ring: FusionRing,
        dims: Vec<CycNumber>,
        h: Vec<PhaseExponent>,
        d_sign: i8,
        total_sqrt: Option<CycNumber>,
        char_conductor: u64,
    ) -> Result<Self, PremodularError> {
        let fp = ring
            .fp_dims(char_conductor)
            .map_err(PremodularError::Characters)?;
        Self::new_with_fp(id, family, ring, dims, h, d_sign, total_sqrt, fp)
    }

    /// Constructor reusing Frobenius-Perron data computed once per ring.
    /// The supplied data is re-verified cheaply (character equations and
    /// positivity), so a wrong cache cannot slip through.
    #[allow(clippy::too_many_arguments)]
    pub fn new_with_fp(
        id: String,
        family: String,
        ring: FusionRing,
        dims: Vec<CycNumber>,
        h: Vec<PhaseExponent>,
        d_sign: i8,
        total_sqrt: Option<CycNumber>,
        fp: FpData,
    ) -> Result<Self, PremodularError> {
        {
            let one = crate::rat_int(1);
            if !verify_character(&ring, &fp.dims)
                || !fp.dims.iter().all(|d| d.is_real() && d.at_least(&one))
            {
                return Err(PremodularError::NotACharacter);
            }
            let mut total = CycNumber::zero();
            for d in &fp.dims {
                total = &total + &(d * d);
            }
            if total != fp.total {
                return Err(PremodularError::NotACharacter);
            }
        }
        if !ring.is_valid() {
            return Err(PremodularError::InvalidRing);
        }
        let r = ring.rank();
        if dims.len() != r || !verify_character(&ring, &dims) {
            return Err(PremodularError::NotACharacter);
        }
        if !dims.iter().all(|d| d.is_real() && !d.is_zero()) {
            return Err(PremodularError::CharacterNotReal);
        }
        if h.len() != r {
            return Err(PremodularError::BadPhases(String::from("length")));
        }
        if !h[0].is_zero() {
            return Err(PremodularError::BadPhases(String::from("h[0] != 0")));
        }
        for i in 0..r {
            if h[i] != h[ring.dual(i)] {
                return Err(PremodularError::BadPhases(String::from(
                    "h not dual-invariant",
                )));
            }
        }
        if d_sign != 1 && d_sign != -1 {
            return Err(PremodularError::BadSign);
        }
        let dims = DimensionCharacter { dims };
        if let Some(sqrt) = &total_sqrt {
            let d2 = dims.categorical_dimension();
            if !(sqrt.is_real() && (sqrt * sqrt) == d2 && sqrt.at_least(&Rational::zero())) {
                return Err(PremodularError::BadTotalSqrt);
            }
        }
        Ok(PreModularCategory {
            id,
            family,
            ring,
            dims,
            fp,
            h,
            d_sign,
            total_sqrt,
            params: BTreeMap::new(),
        })
    }

    pub fn ring(&self) -> &FusionRing {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.ring.rank()
    }

    pub fn dims(&self) -> &DimensionCharacter {
        &self.dims
    }

    pub fn fp(&self) -> &FpData {
        &self.fp
    }

    pub fn h(&self) -> &[PhaseExponent] {
        &self.h
    }

    pub fn d_sign(&self) -> i8 {
        self.d_sign
    }

    /// Categorical dimension `D^2`.
    pub fn categorical_dimension(&self) -> CycNumber {
        self.dims.categorical_dimension()
    }

    /// Signed total dimension `D = d_sign * sqrt(D^2)`, when available.
    pub fn total_dim(&self) -> Option<CycNumber> {
        let sqrt = match &self.total_sqrt {
            Some(s) => s.clone(),
            None => {
                let d2 = self.categorical_dimension().to_rational()?;
                CycNumber::sqrt_rational(&d2)
            }
        };
        Some(if self.d_sign == 1 { sqrt } else { -&sqrt })
    }

    pub fn s_matrix(&self) -> SMatrix {
        SMatrix {
            entries: s_matrix_of(&self.ring, &self.dims.dims, &self.h),
        }
    }

    pub fn is_modular(&self) -> bool {
        !self.s_matrix().det().is_zero()
    }

    /// Symmetric data: `S_{ij} = d_i d_j` for all entries.
    pub fn is_symmetric(&self) -> bool {
        is_symmetric_data(&self.s_matrix().entries, &self.dims.dims)
    }

    pub fn monodromy_table(&self) -> MonodromyTable {
        let r = self.rank();
        let mut phases = BTreeMap::new();
        for i in 0..r {
            for j in 0..r {
                for k in 0..r {
                    if self.ring.n(i, j, k) > 0 {
                        let theta = &(&self.h[k] - &self.h[i]) - &self.h[j];
                        phases.insert((i, j, k), theta);
                    }
                }
            }
        }
        MonodromyTable { phases }
    }

    /// Additive central charge `c mod 8`, from the modular relation
    /// `(ST)^3 = e^{2 pi i c/8} S^2 C`.
    ///
    /// With the trace-of-double-braiding convention for `S` the square of
    /// the normalised S-matrix is the charge conjugation permutation `C`,
    /// so the right-hand side is a scalar matrix. Both identities are
    /// verified exactly; a mismatch is an error, not a wrong answer.
    pub fn central_charge(&self) -> Result<Rational, ChargeError> {
        let s_tilde = self.s_matrix();
        if s_tilde.det().is_zero() {
            return Err(ChargeError::Degenerate);
        }
        let d = self.total_dim().ok_or(ChargeError::MissingTotalSqrt)?;
        let d_inv = d.inv();
        let r = self.rank();
        let s: Vec<Vec<CycNumber>> = s_tilde
            .entries
            .iter()
            .map(|row| row.iter().map(|e| e * &d_inv).collect())
            .collect();
        let t: Vec<CycNumber> = (0..r)
            .map(|i| CycNumber::root_of_unity(&self.h[i]))
            .collect();
        // S^2 must be the duality permutation exactly
        let s2 = mat_mul(&s, &s);
        for i in 0..r {
            for j in 0..r {
                let expected = if j == self.ring.dual(i) {
                    CycNumber::one()
                } else {
                    CycNumber::zero()
                };
                if s2[i][j] != expected {
                    return Err(ChargeError::InconsistentData);
                }
            }
        }
        // ST: scale column j of S by t_j
        let st: Vec<Vec<CycNumber>> = (0..r)
            .map(|i| (0..r).map(|j| &s[i][j] * &t[j]).collect())
            .collect();
        let st2 = mat_mul(&st, &st);
        let st3 = mat_mul(&st2, &st);
        // (ST)^3 = scalar * S^2 C = scalar * Id; scalar from the (0,0)
        // entry, verified globally
        let scalar = st3[0][0].clone();
        for i in 0..r {
            for j in 0..r {
                let expected = if i == j { scalar.clone() } else { CycNumber::zero() };
                if st3[i][j] != expected {
                    return Err(ChargeError::InconsistentData);
                }
            }
        }
        // recognise the scalar as a root of unity
        let m = scalar.conductor();
        let group = if m % 2 == 0 { m } else { 2 * m };
        for j in 0..group {
            let cand =
                CycNumber::root_of_unity(&PhaseExponent::new(Rational::new(
                    BigInt::from(j),
                    BigInt::from(group),
                )));
            if cand == scalar {
                // c/8 = j/group mod 1
                let c = Rational::new(BigInt::from(8 * j), BigInt::from(group));
                let eight = rat_int(8);
                let c = &c - &(&(&c / &eight).floor() * &eight);
                return Ok(c);
            }
        }
        Err(ChargeError::NotRootOfUnity)
    }

    /// Frobenius-Schur indicator of a self-dual object via the modular
    /// formula. Degenerate datasets must supply the indicator through a
    /// catalog certificate instead.
    pub fn fs_indicator(&self, k: usize) -> Result<CycNumber, ChargeError> {
        if !self.is_modular() {
            return Err(ChargeError::Degenerate);
        }
        Ok(fs_indicator_of(&self.ring, &self.dims.dims, &self.h, k))
    }

    /// The self-braiding scalar `c_{X,X} = e^{-2 pi i h_X} nu_2(X)` of an
    /// invertible self-dual object, acting on the unit channel.
    pub fn self_braiding_invertible(
        &self,
        x: usize,
        nu2: &CycNumber,
    ) -> Result<CycNumber, SelfBraidingError> {
        if !self.ring.is_invertible(x) || self.ring.dual(x) != x {
            return Err(SelfBraidingError::NotInvertible);
        }
        let twist = CycNumber::root_of_unity(&-&self.h[x]);
        Ok(&twist * nu2)
    }

    /// True when the dataset's quantum dimensions equal its FP dimensions.
    pub fn is_unitary(&self) -> bool {
        self.dims.dims == self.fp.dims
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SelfBraidingError {
    NotInvertible,
}

pub(crate) fn verify_character(ring: &FusionRing, chi: &[CycNumber]) -> bool {
    let r = ring.rank();
    if chi.len() != r || chi[0] != CycNumber::one() {
        return false;
    }
    for i in 0..r {
        for j in 0..r {
            let mut rhs = CycNumber::zero();
            for k in 0..r {
                let n = ring.n(i, j, k);
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

/// `S_{ij} = sum_k N_{ij}^k e^{2 pi i (h_k - h_i - h_j)} d_k`, exact.
pub fn s_matrix_of(
    ring: &FusionRing,
    dims: &[CycNumber],
    h: &[PhaseExponent],
) -> Vec<Vec<CycNumber>> {
    let r = ring.rank();
    (0..r)
        .map(|i| {
            (0..r)
                .map(|j| {
                    let mut entry = CycNumber::zero();
                    for k in 0..r {
                        let n = ring.n(i, j, k);
                        if n > 0 {
                            let phase = &(&h[k] - &h[i]) - &h[j];
                            let root = CycNumber::root_of_unity(&phase);
                            entry = &entry
                                + &(&root * &dims[k]).scale(&rat_int(n as i64));
                        }
                    }
                    entry
                })
                .collect()
        })
        .collect()
}

pub fn is_symmetric_data(s: &[Vec<CycNumber>], dims: &[CycNumber]) -> bool {
    let r = s.len();
    (0..r).all(|i| (0..r).all(|j| s[i][j] == &dims[i] * &dims[j]))
}

pub fn fs_indicator_of(
    ring: &FusionRing,
    dims: &[CycNumber],
    h: &[PhaseExponent],
    k: usize,
) -> CycNumber {
    let r = ring.rank();
    let mut sum = CycNumber::zero();
    for i in 0..r {
        for j in 0..r {
            let n = ring.n(i, j, k);
            if n > 0 {
                let phase = (&h[i] - &h[j]).double();
                let root = CycNumber::root_of_unity(&phase);
                let term = &(&dims[i] * &dims[j]) * &root;
                sum = &sum + &term.scale(&rat_int(n as i64));
            }
        }
    }
    let mut d2 = CycNumber::zero();
    for d in dims {
        d2 = &d2 + &(d * d);
    }
    &sum * &d2.inv()
}

fn mat_mul(a: &[Vec<CycNumber>], b: &[Vec<CycNumber>]) -> Vec<Vec<CycNumber>> {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let mut acc = CycNumber::zero();
                    for k in 0..n {
                        acc = &acc + &(&a[i][k] * &b[k][j]);
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

fn det(m: &[Vec<CycNumber>]) -> CycNumber {
    let n = m.len();
    match n {
        0 => CycNumber::one(),
        1 => m[0][0].clone(),
        _ => {
            let mut acc = CycNumber::zero();
            for (j, pivot) in m[0].iter().enumerate() {
                if pivot.is_zero() {
                    continue;
                }
                let minor: Vec<Vec<CycNumber>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|(c, _)| *c != j)
                            .map(|(_, v)| v.clone())
                            .collect()
                    })
                    .collect();
                let term = pivot * &det(&minor);
                if j % 2 == 0 {
                    acc = &acc + &term;
                } else {
                    acc = &acc - &term;
                }
            }
            acc
        }
    }
}

/// Scan mode for the conformal-dimension solver.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SolveMode {
    /// Enforce `S_{dual(i), j} = conj(S_{ij})` (reality of self-dual rows
    /// and conjugate-dual rows in general).
    General,
    /// Enforce fully symmetric data `S_{ij} = d_i d_j`; also requires the
    /// dimension character to be integral, since a symmetric fusion
    /// category is (super-)Tannakian and has integer dimensions.
    Symmetric,
}

/// Enumerates all dual-invariant `h`-vectors with `h[0] = 0` and reduced
/// denominators at most `bound` satisfying the mode's S-matrix constraints
/// and any pinned S-entries. A fast float prefilter proposes candidates;
/// every survivor is verified with exact cyclotomic arithmetic, so the
/// output is exact. Deterministic lexicographic order.
pub fn solve_conformal_dimensions(
    ring: &FusionRing,
    dims: &[CycNumber],
    bound: u64,
    mode: SolveMode,
    h_pins: &[(usize, PhaseExponent)],
    s_pins: &[(usize, usize, CycNumber)],
) -> Vec<Vec<PhaseExponent>> {
    let r = ring.rank();
    if mode == SolveMode::Symmetric {
        let integral = dims.iter().all(|d| {
            d.to_rational()
                .map(|q| q.denom().is_one())
                .unwrap_or(false)
        });
        if !integral {
            return Vec::new();
        }
    }
    // orbit representatives under duality, h[0] fixed to zero
    let reps: Vec<usize> = (1..r).filter(|&i| i <= ring.dual(i)).collect();
    let mut pinned: BTreeMap<usize, PhaseExponent> = BTreeMap::new();
    for (idx, v) in h_pins {
        let rep = if ring.dual(*idx) < *idx {
            ring.dual(*idx)
        } else {
            *idx
        };
        pinned.insert(rep, v.clone());
    }
    let free: Vec<usize> = reps.iter().copied().filter(|i| !pinned.contains_key(i)).collect();
    let candidates = PhaseExponent::farey(bound);

    // numeric tables
    let dims_f64: Vec<f64> = dims.iter().map(|d| d.approx().0).collect();
    let pins_f64: Vec<(usize, usize, f64, f64)> = s_pins
        .iter()
        .map(|(i, j, v)| {
            let (re, im) = v.approx();
            (*i, *j, re, im)
        })
        .collect();

    let assemble = |free_vals: &[&PhaseExponent]| -> Vec<PhaseExponent> {
        let mut h = vec![PhaseExponent::zero(); r];
        for (rep, v) in &pinned {
            h[*rep] = v.clone();
            h[ring.dual(*rep)] = v.clone();
        }
        for (pos, &i) in free.iter().enumerate() {
            h[i] = free_vals[pos].clone();
            h[ring.dual(i)] = free_vals[pos].clone();
        }
        h
    };

    let numeric_ok = |h: &[PhaseExponent]| -> bool {
        let hf: Vec<f64> = h.iter().map(|p| p.to_f64()).collect();
        let entry = |i: usize, j: usize| -> (f64, f64) {
            let mut re = 0.0;
            let mut im = 0.0;
            for k in 0..r {
                let n = ring.n(i, j, k);
                if n > 0 {
                    let (c, s) = cos_sin_2pi(hf[k] - hf[i] - hf[j]);
                    re += n as f64 * dims_f64[k] * c;
                    im += n as f64 * dims_f64[k] * s;
                }
            }
            (re, im)
        };
        const TOL: f64 = 1e-7;
        match mode {
            SolveMode::General => {
                for i in 0..r {
                    for j in 0..r {
                        let (re_d, im_d) = entry(ring.dual(i), j);
                        let (re, im) = entry(i, j);
                        if (re_d - re).abs() > TOL || (im_d + im).abs() > TOL {
                            return false;
                        }
                    }
                }
            }
            SolveMode::Symmetric => {
                for i in 0..r {
                    for j in 0..r {
                        let (re, im) = entry(i, j);
                        let target = dims_f64[i] * dims_f64[j];
                        if (re - target).abs() > TOL || im.abs() > TOL {
                            return false;
                        }
                    }
                }
            }
        }
        for (i, j, pre, pim) in &pins_f64 {
            let (re, im) = entry(*i, *j);
            if (re - pre).abs() > TOL || (im - pim).abs() > TOL {
                return false;
            }
        }
        true
    };

    let exact_ok = |h: &[PhaseExponent]| -> bool {
        let s = s_matrix_of(ring, dims, h);
        match mode {
            SolveMode::General => {
                for i in 0..r {
                    for j in 0..r {
                        if s[ring.dual(i)][j] != s[i][j].conj() {
                            return false;
                        }
                    }
                }
            }
            SolveMode::Symmetric => {
                if !is_symmetric_data(&s, dims) {
                    return false;
                }
            }
        }
        for (i, j, v) in s_pins {
            if &s[*i][*j] != v {
                return false;
            }
        }
        true
    };

    let mut out: Vec<Vec<PhaseExponent>> = Vec::new();
    let nfree = free.len();
    if nfree == 0 {
        let h = assemble(&[]);
        if numeric_ok(&h) && exact_ok(&h) {
            out.push(h);
        }
        return out;
    }
    // per-variable narrowing where constraints touch a single variable is
    // subsumed by the early-exit prefilter; the scans stay desk-scale
    let mut idx = vec![0usize; nfree];
    loop {
        let vals: Vec<&PhaseExponent> = idx.iter().map(|&i| &candidates[i]).collect();
        let h = assemble(&vals);
        if numeric_ok(&h) && exact_ok(&h) {
            out.push(h);
        }
        // odometer
        let mut pos = nfree;
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < candidates.len() {
                break;
            }
            idx[pos] = 0;
        }
    }
}

/// Admissibility of a scanned `h`-vector as actual pre-modular data.
#[derive(Clone, Debug, PartialEq)]
pub enum HAdmissibility {
    /// Symmetric data with integral dimensions ((super-)group-like).
    Symmetric,
    /// Modular with a consistent central charge and `nu_2 = +-1` on all
    /// self-dual objects.
    Modular { charge_of_positive_branch: Rational },
    /// Degenerate but not symmetric; no computable obstruction here.
    DegenerateNonSymmetric,
    /// Rejected: symmetric data with non-integral dimensions cannot be a
    /// symmetric fusion category.
    RejectSymmetricNonIntegral,
    /// Rejected: the modular axioms fail (charge extraction or
    /// Frobenius-Schur integrality).
    RejectModular,
}

/// Applies the twist/balancing filter to a candidate `h`-vector.
pub fn admissibility(
    ring: &FusionRing,
    dims: &[CycNumber],
    h: &[PhaseExponent],
    total_sqrt: Option<&CycNumber>,
    char_conductor: u64,
) -> HAdmissibility {
    let s = s_matrix_of(ring, dims, h);
    if is_symmetric_data(&s, dims) {
        let integral = dims.iter().all(|d| {
            d.to_rational()
                .map(|q| q.denom().is_one())
                .unwrap_or(false)
        });
        return if integral {
            HAdmissibility::Symmetric
        } else {
            HAdmissibility::RejectSymmetricNonIntegral
        };
    }
    if det(&s).is_zero() {
        return HAdmissibility::DegenerateNonSymmetric;
    }
    // modular: nu_2 must be a sign on every self-dual object
    for k in 0..ring.rank() {
        if ring.dual(k) == k {
            let nu2 = fs_indicator_of(ring, dims, h, k);
            let pm = nu2.to_rational();
            if pm != Some(rat_int(1)) && pm != Some(rat_int(-1)) {
                return HAdmissibility::RejectModular;
            }
        }
    }
    let cat = PreModularCategory::new(
        String::from("scan"),
        String::from("scan"),
        ring.clone(),
        dims.to_vec(),
        h.to_vec(),
        1,
        total_sqrt.cloned(),
        char_conductor,
    );
    match cat {
        Ok(cat) => match cat.central_charge() {
            Ok(c) => HAdmissibility::Modular {
                charge_of_positive_branch: c,
            },
            Err(_) => HAdmissibility::RejectModular,
        },
        Err(_) => HAdmissibility::RejectModular,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fusion::test_rings::*;
    use crate::rat;

    fn phi() -> CycNumber {
        (&CycNumber::one() + &CycNumber::sqrt_rational(&rat_int(5))).scale(&rat(1, 2))
    }

    fn fib_category(h_num: i64) -> PreModularCategory {
        // d_X = golden ratio, D = 2 sin(2 pi / 5) in Q(zeta_20)
        let z20 = |e: i64| CycNumber::root_of_unity(&PhaseExponent::from_ratio(e, 20));
        let total = &z20(1) - &z20(9);
        PreModularCategory::new(
            String::from("fib-test"),
            String::from("fib"),
            fib(),
            vec![CycNumber::one(), phi()],
            vec![PhaseExponent::zero(), PhaseExponent::from_ratio(h_num, 5)],
            1,
            Some(total),
            5,
        )
        .unwrap()
    }

    fn ising_category(dy_sign: i64, h_y: (i64, i64), d_sign: i8) -> PreModularCategory {
        let s2 = CycNumber::sqrt_rational(&rat_int(2));
        let dy = if dy_sign > 0 { s2.clone() } else { -&s2 };
        PreModularCategory::new(
            String::from("ising-test"),
            String::from("ising"),
            ising(),
            vec![CycNumber::one(), CycNumber::one(), dy],
            vec![
                PhaseExponent::zero(),
                PhaseExponent::from_ratio(1, 2),
                PhaseExponent::from_ratio(h_y.0, h_y.1),
            ],
            d_sign,
            None,
            8,
        )
        .unwrap()
    }

    fn z2_category(d: i64, h: (i64, i64)) -> PreModularCategory {
        PreModularCategory::new(
            String::from("z2-test"),
            String::from("vec-z2"),
            z2(),
            vec![CycNumber::one(), CycNumber::from_int(d)],
            vec![PhaseExponent::zero(), PhaseExponent::from_ratio(h.0, h.1)],
            1,
            None,
            8,
        )
        .unwrap()
    }

    fn rep_s3_category(dy: i64, hy: (i64, i64)) -> PreModularCategory {
        PreModularCategory::new(
            String::from("s3-test"),
            String::from("rep-s3"),
            rep_s3(),
            vec![
                CycNumber::one(),
                CycNumber::one(),
                CycNumber::from_int(dy),
            ],
            vec![
                PhaseExponent::zero(),
                PhaseExponent::zero(),
                PhaseExponent::from_ratio(hy.0, hy.1),
            ],
            1,
            None,
            3,
        )
        .unwrap()
    }

    #[test]
    fn fib_s_matrix_matches_closed_form() {
        let cat = fib_category(2);
        let s = cat.s_matrix();
        assert_eq!(s.entries[0][1], phi());
        assert_eq!(s.entries[1][0], phi());
        assert_eq!(s.entries[1][1], CycNumber::from_int(-1));
        assert!(s.is_symmetric_matrix());
        assert_eq!(s.first_row(), &[CycNumber::one(), phi()]);
        assert!(cat.is_modular());
    }

    #[test]
    fn trivial_s_matrix() {
        let cat = PreModularCategory::new(
            String::from("vect"),
            String::from("vect"),
            trivial(),
            vec![CycNumber::one()],
            vec![PhaseExponent::zero()],
            1,
            None,
            1,
        )
        .unwrap();
        assert_eq!(cat.s_matrix().entries, vec![vec![CycNumber::one()]]);
        assert!(cat.is_modular());
        assert_eq!(cat.central_charge().unwrap(), rat_int(0));
    }

    #[test]
    fn negative_unit_dataset_charge() {
        let cat = PreModularCategory::new(
            String::from("vect-neg"),
            String::from("vect"),
            trivial(),
            vec![CycNumber::one()],
            vec![PhaseExponent::zero()],
            -1,
            None,
            1,
        )
        .unwrap();
        assert_eq!(cat.central_charge().unwrap(), rat_int(4));
    }

    #[test]
    fn symmetric_rep_s3_degenerate() {
        for dy in [2i64, -1] {
            let cat = rep_s3_category(dy, (0, 1));
            assert!(!cat.is_modular());
            assert!(cat.is_symmetric());
            assert_eq!(cat.central_charge(), Err(ChargeError::Degenerate));
            let s = cat.s_matrix();
            assert_eq!(s.entries[2][2], CycNumber::from_int(dy * dy));
        }
    }

    #[test]
    fn z2_modularity_by_phase() {
        assert!(z2_category(1, (1, 4)).is_modular());
        assert!(z2_category(1, (3, 4)).is_modular());
        assert!(!z2_category(1, (0, 1)).is_modular());
        assert!(!z2_category(1, (1, 2)).is_modular());
    }

    #[test]
    fn ising_central_charge_half() {
        let cat = ising_category(1, (1, 16), 1);
        assert!(cat.is_modular());
        assert_eq!(cat.central_charge().unwrap(), rat(1, 2));
    }

    #[test]
    fn z3_central_charges() {
        // charge 2 for h = 1/3 with D = +sqrt 3, and 6 for h = 2/3
        for (h, expected) in [((1i64, 3i64), rat_int(2)), ((2, 3), rat_int(6))] {
            let cat = PreModularCategory::new(
                String::from("z3-test"),
                String::from("vec-z3"),
                z3(),
                vec![CycNumber::one(), CycNumber::one(), CycNumber::one()],
                vec![
                    PhaseExponent::zero(),
                    PhaseExponent::from_ratio(h.0, h.1),
                    PhaseExponent::from_ratio(h.0, h.1),
                ],
                1,
                None,
                3,
            )
            .unwrap();
            assert_eq!(cat.central_charge().unwrap(), expected);
        }
    }

    #[test]
    fn fs_indicator_examples() {
        // Vec_Z2 with h = 1/4: nu_2(X) = d cos(pi) = -d
        let cat = z2_category(1, (1, 4));
        assert_eq!(cat.fs_indicator(1).unwrap(), CycNumber::from_int(-1));
        let cat = z2_category(-1, (1, 4));
        assert_eq!(cat.fs_indicator(1).unwrap(), CycNumber::from_int(1));
        // unit object always has nu_2 = 1
        assert_eq!(cat.fs_indicator(0).unwrap(), CycNumber::one());
        // Ising X is a boson for the indicator: nu_2(X) = +1
        let ising_cat = ising_category(1, (1, 16), 1);
        assert_eq!(ising_cat.fs_indicator(1).unwrap(), CycNumber::one());
        // and the self-braiding scalar of the fermion is -1
        let scalar = ising_cat
            .self_braiding_invertible(1, &CycNumber::one())
            .unwrap();
        assert_eq!(scalar, CycNumber::from_int(-1));
    }

    #[test]
    fn self_braiding_case_list() {
        // (d, h) = (1, 0) -> +1; (1, 1/2) -> -1; (1, 1/4) -> -i; (-1, 0) -> -1
        let plus = CycNumber::one();
        let minus = CycNumber::from_int(-1);
        type Case = ((i64, (i64, i64)), CycNumber, CycNumber);
        let cases: Vec<Case> = vec![
            ((1, (0, 1)), plus.clone(), plus.clone()),
            ((1, (1, 2)), plus.clone(), minus.clone()),
            ((-1, (0, 1)), minus.clone(), minus.clone()),
            ((-1, (1, 2)), minus.clone(), plus.clone()),
        ];
        for ((d, h), nu2, expected) in cases {
            let cat = z2_category(d, h);
            let scalar = cat.self_braiding_invertible(1, &nu2).unwrap();
            assert_eq!(scalar, expected, "case d={} h={:?}", d, h);
        }
        // modular cases compute nu_2 from the formula
        let cat = z2_category(1, (1, 4));
        let nu2 = cat.fs_indicator(1).unwrap();
        let scalar = cat.self_braiding_invertible(1, &nu2).unwrap();
        // e^{-pi i/2} * (-1) = +i
        let i = CycNumber::root_of_unity(&PhaseExponent::from_ratio(1, 4));
        assert_eq!(scalar, i);
    }

    #[test]
    fn monodromy_examples() {
        // Vec_Z3 with h = 1/3: theta(X, X, Y) = 1/3 - 2/3 = 2/3
        let cat = PreModularCategory::new(
            String::from("z3"),
            String::from("vec-z3"),
            z3(),
            vec![CycNumber::one(); 3],
            vec![
                PhaseExponent::zero(),
                PhaseExponent::from_ratio(1, 3),
                PhaseExponent::from_ratio(1, 3),
            ],
            1,
            None,
            3,
        )
        .unwrap();
        let table = cat.monodromy_table();
        assert_eq!(
            table.phases.get(&(1, 1, 2)),
            Some(&PhaseExponent::from_ratio(2, 3))
        );
        assert_eq!(table.phases.get(&(0, 2, 2)), Some(&PhaseExponent::zero()));
        // non-symmetric Rep(S3), h_Y = 1/3: theta(Y, Y, 1) = -2/3 = 1/3 mod 1
        let s3 = rep_s3_category(2, (1, 3));
        let table = s3.monodromy_table();
        assert_eq!(
            table.phases.get(&(2, 2, 0)),
            Some(&PhaseExponent::from_ratio(1, 3))
        );
        // dual-symmetry of monodromy phases
        for ((i, j, k), theta) in &table.phases {
            let dual_key = (
                s3.ring().dual(*i),
                s3.ring().dual(*j),
                s3.ring().dual(*k),
            );
            assert_eq!(table.phases.get(&dual_key), Some(theta));
        }
    }

    #[test]
    fn solver_z2_quarters() {
        let sols = solve_conformal_dimensions(
            &z2(),
            &[CycNumber::one(), CycNumber::one()],
            8,
            SolveMode::General,
            &[],
            &[],
        );
        let hx: Vec<PhaseExponent> = sols.iter().map(|h| h[1].clone()).collect();
        assert_eq!(
            hx,
            vec![
                PhaseExponent::zero(),
                PhaseExponent::from_ratio(1, 4),
                PhaseExponent::from_ratio(1, 2),
                PhaseExponent::from_ratio(3, 4),
            ]
        );
    }

    #[test]
    fn solver_z3_thirds() {
        let sols = solve_conformal_dimensions(
            &z3(),
            &[CycNumber::one(), CycNumber::one(), CycNumber::one()],
            12,
            SolveMode::General,
            &[],
            &[],
        );
        let hx: Vec<PhaseExponent> = sols.iter().map(|h| h[1].clone()).collect();
        assert_eq!(
            hx,
            vec![
                PhaseExponent::zero(),
                PhaseExponent::from_ratio(1, 3),
                PhaseExponent::from_ratio(2, 3),
            ]
        );
        for h in &sols {
            assert_eq!(h[1], h[2]);
        }
    }

    #[test]
    fn solver_rep_s3_symmetric_mode() {
        for dy in [2i64, -1] {
            let sols = solve_conformal_dimensions(
                &rep_s3(),
                &[
                    CycNumber::one(),
                    CycNumber::one(),
                    CycNumber::from_int(dy),
                ],
                12,
                SolveMode::Symmetric,
                &[],
                &[],
            );
            assert_eq!(sols.len(), 1, "d_Y = {}", dy);
            assert!(sols[0].iter().all(|p| p.is_zero()));
        }
    }

    #[test]
    fn solver_rep_s3_pinned_nonsymmetric() {
        // pin S_{YY} = -2: the raw scan also admits (h_X, h_Y) = (1/2, 1/2),
        // which the twist filter rejects (nu_2(Y) = 2); after filtering,
        // h_Y in {1/3, 2/3} with h_X = 0 for d_Y = 2, empty for d_Y = -1
        let pin = |v: i64| vec![(2usize, 2usize, CycNumber::from_int(v))];
        let dims2 = [CycNumber::one(), CycNumber::one(), CycNumber::from_int(2)];
        let sols = solve_conformal_dimensions(
            &rep_s3(),
            &dims2,
            12,
            SolveMode::General,
            &[],
            &pin(-2),
        );
        assert_eq!(sols.len(), 3);
        let admissible: Vec<&Vec<PhaseExponent>> = sols
            .iter()
            .filter(|h| {
                !matches!(
                    admissibility(&rep_s3(), &dims2, h, None, 3),
                    HAdmissibility::RejectModular | HAdmissibility::RejectSymmetricNonIntegral
                )
            })
            .collect();
        let hy: Vec<PhaseExponent> = admissible.iter().map(|h| h[2].clone()).collect();
        assert_eq!(
            hy,
            vec![
                PhaseExponent::from_ratio(1, 3),
                PhaseExponent::from_ratio(2, 3)
            ]
        );
        assert!(admissible.iter().all(|h| h[1].is_zero()));

        let none = solve_conformal_dimensions(
            &rep_s3(),
            &[CycNumber::one(), CycNumber::one(), CycNumber::from_int(-1)],
            60,
            SolveMode::General,
            &[],
            &pin(-2),
        );
        assert!(none.is_empty());
    }

    #[test]
    fn admissibility_filters() {
        let one = CycNumber::one();
        // symmetric integral data passes
        let verdict = admissibility(
            &z2(),
            &[one.clone(), one.clone()],
            &[PhaseExponent::zero(), PhaseExponent::zero()],
            None,
            8,
        );
        assert_eq!(verdict, HAdmissibility::Symmetric);
        // symmetric non-integral data rejected (Fib with h = 0)
        let verdict = admissibility(
            &fib(),
            &[one.clone(), phi()],
            &[PhaseExponent::zero(), PhaseExponent::zero()],
            None,
            5,
        );
        assert_eq!(verdict, HAdmissibility::RejectSymmetricNonIntegral);
        // Fib with h = 1/2 is modular but nu_2(X) is not a sign
        let verdict = admissibility(
            &fib(),
            &[one.clone(), phi()],
            &[PhaseExponent::zero(), PhaseExponent::from_ratio(1, 2)],
            None,
            5,
        );
        assert_eq!(verdict, HAdmissibility::RejectModular);
        // the genuine Fib phases pass
        let z20 = |e: i64| CycNumber::root_of_unity(&PhaseExponent::from_ratio(e, 20));
        let total = &z20(1) - &z20(9);
        let verdict = admissibility(
            &fib(),
            &[one.clone(), phi()],
            &[PhaseExponent::zero(), PhaseExponent::from_ratio(2, 5)],
            Some(&total),
            5,
        );
        assert!(matches!(verdict, HAdmissibility::Modular { .. }));
    }
}
