//! The classification driver: enumerate connected self-dual algebra
//! candidates in a pre-modular dataset, run the obstruction pipeline, and
//! assemble per-dataset verdict reports.
//!
//! Candidates come from two sources. Ring matching filters a library of
//! fusion rings by rank, Frobenius-Perron dimension and exact realizability
//! of `FPdim(A) = FPdim(B) / FPdim(ring)` as a natural combination of simple
//! dimensions. For modular hosts the dyslectic-module bound
//! `FPdim(A)^2 <= FPdim(B)` independently enumerates every admissible
//! multiplicity vector. Each candidate then passes through NIM-rep
//! existence, internal-Hom matching, monodromy, self-braiding, central
//! charge matching and the Tannakian criterion. Etale status is only ever
//! granted by a structural theorem (trivial algebra, invertible-pair
//! self-braiding, Tannakian positivity) or by a verified catalog
//! certificate; necessary conditions alone leave a candidate inconclusive.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Signed, ToPrimitive};

use crate::cyclotomic::CycNumber;
use crate::fusion::{pretty_multiplicities, FpData, FusionRing};
use crate::nimrep::{enumerate_nimreps, NimRep};
use crate::phase::PhaseExponent;
use crate::premodular::PreModularCategory;
use crate::{rat_int, Rational};

/// A candidate connected self-dual algebra object, as multiplicities of the
/// host's simple objects (`n[0] = 1`).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct AlgebraCandidate {
    pub n: Vec<u32>,
}

impl AlgebraCandidate {
    pub fn trivial(rank: usize) -> Self {
        let mut n = vec![0u32; rank];
        n[0] = 1;
        AlgebraCandidate { n }
    }

    pub fn is_trivial(&self) -> bool {
        self.n[0] == 1 && self.n.iter().skip(1).all(|&v| v == 0)
    }

    pub fn support(&self) -> Vec<usize> {
        self.n
            .iter()
            .enumerate()
            .filter(|(_, &v)| v > 0)
            .map(|(i, _)| i)
            .collect()
    }

    pub fn fpdim(&self, fp: &FpData) -> CycNumber {
        let mut acc = CycNumber::zero();
        for (i, &v) in self.n.iter().enumerate() {
            if v > 0 {
                acc = &acc + &fp.dims[i].scale(&rat_int(v as i64));
            }
        }
        acc
    }

    pub fn pretty(&self, ring: &FusionRing) -> String {
        pretty_multiplicities(ring, &self.n)
    }
}

/// Classification status of a candidate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Etale,
    RuledOut,
    Inconclusive,
}

/// Why a candidate received its status.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Reason {
    TrivialAlgebra,
    FPdimBound,
    NoRealizingVector,
    NoNimRep,
    NoMatchingModuleCategory,
    MonodromyFailure,
    SelfBraidingFailure,
    SelfBraidingIdentity,
    CentralChargeMismatch,
    DyslecticBound,
    VafaViolation,
    TannakianPositivity,
    CatalogCertificate,
    NecessaryOnly,
}

impl Reason {
    pub fn as_str(&self) -> &'static str {
        match self {
            Reason::TrivialAlgebra => "trivial algebra",
            Reason::FPdimBound => "FP-dimension bound",
            Reason::NoRealizingVector => "no realizing multiplicity vector",
            Reason::NoNimRep => "no NIM-rep of the required dimension",
            Reason::NoMatchingModuleCategory => "no module category matches the candidate",
            Reason::MonodromyFailure => "monodromy obstruction",
            Reason::SelfBraidingFailure => "self-braiding is not the identity",
            Reason::SelfBraidingIdentity => "invertible-pair self-braiding identity",
            Reason::CentralChargeMismatch => "no modular category matches the central charge",
            Reason::DyslecticBound => "dyslectic-module dimension bound",
            Reason::VafaViolation => "no rational twist within the scan bound",
            Reason::TannakianPositivity => "Tannakian positivity",
            Reason::CatalogCertificate => "verified half-braiding certificate",
            Reason::NecessaryOnly => "passes necessary conditions only",
        }
    }
}

/// Final verdict for one candidate.
#[derive(Clone, Debug)]
pub struct Verdict {
    pub status: Status,
    pub reason: Reason,
    pub witness: Option<String>,
    pub target_rank: Option<usize>,
    pub target_rings: Vec<String>,
    pub lagrangian: bool,
}

/// Library entry: a candidate fusion ring for `B_A` with precomputed
/// Frobenius-Perron data.
#[derive(Clone, Debug)]
pub struct LibraryRing {
    pub id: String,
    pub display: String,
    pub ring: FusionRing,
    pub fp: FpData,
}

impl LibraryRing {
    pub fn new(id: String, display: String, ring: FusionRing, char_conductor: u64) -> Self {
        let fp = ring
            .fp_dims(char_conductor)
            .expect("library ring must have FP data");
        LibraryRing {
            id,
            display,
            ring,
            fp,
        }
    }
}

/// Reference entry for central-charge matching: a modular category of known
/// rank, FP dimension and additive central charge.
#[derive(Clone, Debug)]
pub struct MfcReference {
    pub id: String,
    pub rank: usize,
    pub fpdim: CycNumber,
    pub charge: Rational,
}

/// Catalog certificates attached to a dataset.
#[derive(Clone, Debug)]
pub enum Certificate {
    /// Frobenius-Schur indicator of a self-dual object (for degenerate
    /// hosts, where the modular formula does not apply).
    FsIndicator { object: usize, value: i8 },
    /// Half-braiding scalars `R^{a_i a_j}_k = e^{2 pi i t}` for all fusion
    /// channels inside the support of the algebra.
    HalfBraiding {
        algebra: Vec<u32>,
        scalars: Vec<(usize, usize, usize, PhaseExponent)>,
    },
}

/// One matched candidate ring with its realizing multiplicity vectors.
#[derive(Clone, Debug)]
pub struct RingMatch {
    pub ring_id: String,
    pub display: String,
    pub rank: usize,
    pub required_fpdim: CycNumber,
    pub vectors: Vec<Vec<u32>>,
}

/// Per-dataset classification result.
#[derive(Clone, Debug)]
pub struct ClassificationReport {
    pub dataset_id: String,
    pub family: String,
    pub params: BTreeMap<String, String>,
    pub r_max: u64,
    pub scan_bound: u64,
    pub modular: bool,
    pub symmetric: bool,
    pub charge: Option<Rational>,
    pub candidates: Vec<(AlgebraCandidate, Verdict)>,
    pub ring_matches: Vec<RingMatch>,
    pub rejected_rings: Vec<(String, Reason)>,
    pub completely_anisotropic: bool,
    pub gsd: BTreeSet<usize>,
    pub gsd_open_ended: bool,
    pub spontaneously_broken: bool,
    pub notes: Vec<String>,
}

/// Options and shared libraries for a classification run.
pub struct ClassifyOptions<'a> {
    pub ring_library: &'a [LibraryRing],
    pub mfc_library: &'a [MfcReference],
    pub certificates: &'a [Certificate],
    pub strict_monodromy: bool,
    pub scan_bound: u64,
    pub extra_notes: &'a [String],
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClassifyError {
    BadCertificate(String),
}

/// `r_max = floor(FPdim(B))`, certified.
pub fn r_max(cat: &PreModularCategory) -> u64 {
    cat.fp()
        .total
        .floor_certified()
        .to_u64()
        .expect("r_max fits in u64")
}

/// Goal for the candidate-vector enumeration.
enum VectorGoal<'a> {
    ExactSum(&'a CycNumber),
    SquareAtMost(&'a CycNumber),
}

fn goal_admits(partial: &CycNumber, goal: &VectorGoal<'_>) -> (bool, bool) {
    // (keep extending, collect at leaf)
    match goal {
        VectorGoal::ExactSum(target) => match partial.cmp_real(target) {
            core::cmp::Ordering::Greater => (false, false),
            core::cmp::Ordering::Equal => (true, true),
            core::cmp::Ordering::Less => (true, false),
        },
        VectorGoal::SquareAtMost(limit) => {
            let sq = partial * partial;
            match sq.cmp_real(limit) {
                core::cmp::Ordering::Greater => (false, false),
                _ => (true, true),
            }
        }
    }
}

fn candidate_vectors(cat: &PreModularCategory, goal: VectorGoal<'_>) -> Vec<Vec<u32>> {
    let ring = cat.ring();
    let fp = cat.fp();
    let rank = ring.rank();
    let reps: Vec<usize> = (1..rank).filter(|&i| i <= ring.dual(i)).collect();
    let mut out = Vec::new();
    let mut n = vec![0u32; rank];
    n[0] = 1;

    #[allow(clippy::too_many_arguments)]
    fn dfs(
        reps: &[usize],
        pos: usize,
        partial: CycNumber,
        ring: &FusionRing,
        fp: &FpData,
        n: &mut Vec<u32>,
        goal: &VectorGoal<'_>,
        out: &mut Vec<Vec<u32>>,
    ) {
        if pos == reps.len() {
            let (_, collect) = goal_admits(&partial, goal);
            if collect {
                out.push(n.clone());
            }
            return;
        }
        let i = reps[pos];
        let dual = ring.dual(i);
        let step = if dual == i {
            fp.dims[i].clone()
        } else {
            &fp.dims[i] + &fp.dims[dual]
        };
        let mut v = 0u32;
        loop {
            let contribution = step.scale(&rat_int(v as i64));
            let candidate = &partial + &contribution;
            let (extend, _) = goal_admits(&candidate, goal);
            if !extend {
                break;
            }
            n[i] = v;
            n[dual] = v;
            dfs(reps, pos + 1, candidate, ring, fp, n, goal, out);
            v += 1;
        }
        n[i] = 0;
        n[dual] = 0;
    }

    dfs(
        &reps,
        0,
        CycNumber::one(),
        ring,
        fp,
        &mut n,
        &goal,
        &mut out,
    );
    out.sort();
    out
}

/// Step two of the pipeline: candidate fusion rings for `B_A` from the
/// library, filtered by rank, FP dimension and exact realizability, with
/// the rejected entries and the reason each failed.
pub fn candidate_module_rings(
    cat: &PreModularCategory,
    library: &[LibraryRing],
) -> (Vec<RingMatch>, Vec<(String, Reason)>) {
    let rmax = r_max(cat) as usize;
    let host_total = &cat.fp().total;
    let mut matches = Vec::new();
    let mut rejected = Vec::new();
    for entry in library {
        if entry.ring.rank() > rmax
            || entry.fp.total.cmp_real(host_total) == core::cmp::Ordering::Greater
        {
            rejected.push((entry.id.clone(), Reason::FPdimBound));
            continue;
        }
        let required = host_total * &entry.fp.total.inv();
        let vectors = candidate_vectors(cat, VectorGoal::ExactSum(&required));
        if vectors.is_empty() {
            rejected.push((entry.id.clone(), Reason::NoRealizingVector));
            continue;
        }
        matches.push(RingMatch {
            ring_id: entry.id.clone(),
            display: entry.display.clone(),
            rank: entry.ring.rank(),
            required_fpdim: required,
            vectors,
        });
    }
    (matches, rejected)
}

/// Candidates allowed by the dyslectic-module bound
/// `1 <= FPdim(A)^2 <= FPdim(B)` on modular hosts.
pub fn dyslectic_bounded_candidates(cat: &PreModularCategory) -> Vec<AlgebraCandidate> {
    candidate_vectors(cat, VectorGoal::SquareAtMost(&cat.fp().total))
        .into_iter()
        .map(|n| AlgebraCandidate { n })
        .collect()
}

/// Monodromy violations of the commutativity-necessary condition: channels
/// `(i, j, k)` with nonzero fusion coefficient and nontrivial double
/// braiding phase. The default restricts `k` to the candidate's support
/// (components outside the algebra are annihilated by the multiplication);
/// `strict` checks every channel.
pub fn monodromy_test(
    cat: &PreModularCategory,
    cand: &AlgebraCandidate,
    strict: bool,
) -> Vec<((usize, usize, usize), PhaseExponent)> {
    let ring = cat.ring();
    let h = cat.h();
    let support = cand.support();
    let mut violations = Vec::new();
    for &i in &support {
        for &j in &support {
            for k in 0..ring.rank() {
                if !strict && !support.contains(&k) {
                    continue;
                }
                if ring.n(i, j, k) == 0 {
                    continue;
                }
                let theta = &(&h[k] - &h[i]) - &h[j];
                if !theta.is_zero() {
                    violations.push(((i, j, k), theta));
                }
            }
        }
    }
    violations
}

/// Result of the invertible-pair self-braiding test.
pub enum InvertibleTest {
    NotApplicable,
    /// The Frobenius-Schur indicator is unavailable (degenerate host with
    /// no certificate).
    MissingIndicator,
    Pass,
    Fail(CycNumber),
}

/// For candidates `1 (+) X` with `X` invertible and self-dual, the
/// self-braiding scalar decides commutativity outright.
pub fn invertible_algebra_test(
    cat: &PreModularCategory,
    cand: &AlgebraCandidate,
    certificates: &[Certificate],
) -> InvertibleTest {
    let ring = cat.ring();
    let support = cand.support();
    if support.len() != 2 {
        return InvertibleTest::NotApplicable;
    }
    let x = support[1];
    if cand.n[x] != 1 || !ring.is_invertible(x) || ring.dual(x) != x {
        return InvertibleTest::NotApplicable;
    }
    let nu2 = if cat.is_modular() {
        match cat.fs_indicator(x) {
            Ok(v) => v,
            Err(_) => return InvertibleTest::MissingIndicator,
        }
    } else {
        let cert = certificates.iter().find_map(|c| match c {
            Certificate::FsIndicator { object, value } if *object == x => Some(*value),
            _ => None,
        });
        match cert {
            Some(v) => CycNumber::from_int(v as i64),
            None => return InvertibleTest::MissingIndicator,
        }
    };
    let scalar = cat
        .self_braiding_invertible(x, &nu2)
        .expect("support checked invertible");
    if scalar == CycNumber::one() {
        InvertibleTest::Pass
    } else {
        InvertibleTest::Fail(scalar)
    }
}

/// Result of the modular-host constraints.
pub enum ModularTest {
    NotModular,
    BoundFail,
    ChargeFail { target_fpdim: CycNumber },
    Pass,
}

/// For modular hosts: the dyslectic bound plus central-charge matching of
/// `B_A^0` against the reference library of modular categories.
pub fn modular_constraints_test(
    cat: &PreModularCategory,
    cand: &AlgebraCandidate,
    mfc_library: &[MfcReference],
) -> ModularTest {
    if !cat.is_modular() {
        return ModularTest::NotModular;
    }
    let fpdim_a = cand.fpdim(cat.fp());
    let square = &fpdim_a * &fpdim_a;
    let host_total = &cat.fp().total;
    if square.cmp_real(host_total) == core::cmp::Ordering::Greater {
        return ModularTest::BoundFail;
    }
    let target = host_total * &square.inv();
    let charge = match cat.central_charge() {
        Ok(c) => c,
        Err(_) => return ModularTest::NotModular,
    };
    let rmax = r_max(cat) as usize;
    let found = mfc_library.iter().any(|entry| {
        entry.rank <= 4 && entry.rank <= rmax && entry.charge == charge && entry.fpdim == target
    });
    if found {
        ModularTest::Pass
    } else {
        ModularTest::ChargeFail {
            target_fpdim: target,
        }
    }
}

/// Tannakian criterion outcome for symmetric hosts.
pub enum TannakianTest {
    NotApplicable,
    Pass,
    Fail,
}

/// A symmetric host condenses its regular algebra to the trivial category
/// iff all quantum dimensions are positive integers.
pub fn tannakian_test(cat: &PreModularCategory) -> TannakianTest {
    if !cat.is_symmetric() {
        return TannakianTest::NotApplicable;
    }
    let positive_integral = cat.dims().dims.iter().all(|d| {
        d.to_rational()
            .map(|q| q.denom().is_one() && q.is_positive())
            .unwrap_or(false)
    });
    if positive_integral {
        TannakianTest::Pass
    } else {
        TannakianTest::Fail
    }
}

/// The regular multiplicity vector `n_i = FPdim_i`, when integral.
pub fn regular_vector(cat: &PreModularCategory) -> Option<AlgebraCandidate> {
    let mut n = Vec::with_capacity(cat.rank());
    for d in &cat.fp().dims {
        let q = d.to_rational()?;
        if !q.denom().is_one() || q.is_negative() {
            return None;
        }
        n.push(q.numer().to_u32()?);
    }
    Some(AlgebraCandidate { n })
}

/// Outcome of checking a half-braiding certificate.
pub enum CertificateCheck {
    /// Internally consistent, all components act as the identity: etale.
    Commutative,
    /// Consistent but some component is not the identity.
    NotCommutative { witness: String },
    /// The certificate contradicts the dataset (catalog bug).
    Bad(String),
}

/// Verifies a half-braiding certificate against the dataset: channel
/// scalars must square to the monodromy phases, diagonal channels must
/// agree with the twist formula when an indicator is known, and
/// commutativity requires every scalar to be `+1`.
pub fn verify_commutative_certificate(
    cat: &PreModularCategory,
    cand: &AlgebraCandidate,
    scalars: &[(usize, usize, usize, PhaseExponent)],
    certificates: &[Certificate],
) -> CertificateCheck {
    let ring = cat.ring();
    let h = cat.h();
    let support = cand.support();
    let lookup = |i: usize, j: usize, k: usize| -> Option<&PhaseExponent> {
        scalars
            .iter()
            .find(|(a, b, c, _)| *a == i && *b == j && *c == k)
            .map(|(_, _, _, t)| t)
    };
    for &i in &support {
        for &j in &support {
            for &k in &support {
                if ring.n(i, j, k) == 0 {
                    continue;
                }
                let (tij, tji) = match (lookup(i, j, k), lookup(j, i, k)) {
                    (Some(a), Some(b)) => (a, b),
                    _ => {
                        return CertificateCheck::Bad(format!(
                            "missing scalar for channel ({}, {}, {})",
                            i, j, k
                        ))
                    }
                };
                let theta = &(&h[k] - &h[i]) - &h[j];
                if (tij + tji) != theta {
                    return CertificateCheck::Bad(format!(
                        "monodromy mismatch on channel ({}, {}, {})",
                        i, j, k
                    ));
                }
            }
        }
    }
    // diagonal consistency with the twist formula where an indicator exists
    for &i in &support {
        if i == 0 || ring.dual(i) != i {
            continue;
        }
        let nu2 = certificates.iter().find_map(|c| match c {
            Certificate::FsIndicator { object, value } if *object == i => Some(*value),
            _ => None,
        });
        if let Some(nu2) = nu2 {
            let expected = if nu2 == 1 {
                -&h[i]
            } else {
                &(-&h[i]) + &PhaseExponent::from_ratio(1, 2)
            };
            for &k in &support {
                if ring.n(i, i, k) > 0 {
                    if let Some(t) = lookup(i, i, k) {
                        if *t != expected {
                            return CertificateCheck::Bad(format!(
                                "twist mismatch on diagonal channel ({}, {}, {})",
                                i, i, k
                            ));
                        }
                    }
                }
            }
        }
    }
    for &i in &support {
        for &j in &support {
            for &k in &support {
                if ring.n(i, j, k) == 0 {
                    continue;
                }
                let t = lookup(i, j, k).unwrap();
                if !t.is_zero() {
                    return CertificateCheck::NotCommutative {
                        witness: format!(
                            "scalar e^(2 pi i {}) on channel ({}, {}, {})",
                            t, i, j, k
                        ),
                    };
                }
            }
        }
    }
    CertificateCheck::Commutative
}

/// Runs the full pipeline on one dataset.
pub fn classify(
    cat: &PreModularCategory,
    options: &ClassifyOptions<'_>,
) -> Result<ClassificationReport, ClassifyError> {
    let ring = cat.ring();
    let rank = ring.rank();
    let rmax = r_max(cat);
    let modular = cat.is_modular();
    let symmetric = cat.is_symmetric();
    let charge = if modular { cat.central_charge().ok() } else { None };

    let (matches, rejected) = candidate_module_rings(cat, options.ring_library);

    // candidate vectors and the rings that could host them
    let mut table: BTreeMap<Vec<u32>, Vec<(String, String, usize)>> = BTreeMap::new();
    for m in &matches {
        for v in &m.vectors {
            table
                .entry(v.clone())
                .or_default()
                .push((m.ring_id.clone(), m.display.clone(), m.rank));
        }
    }
    if modular {
        for cand in dyslectic_bounded_candidates(cat) {
            table.entry(cand.n).or_default();
        }
    }

    let mut nimrep_cache: BTreeMap<usize, Vec<NimRep>> = BTreeMap::new();
    let mut candidates: Vec<(AlgebraCandidate, Verdict)> = Vec::new();

    let host_total = cat.fp().total.clone();
    for (n, rings) in &table {
        let cand = AlgebraCandidate { n: n.clone() };
        let fpdim_a = cand.fpdim(cat.fp());
        let lagrangian = (&fpdim_a * &fpdim_a) == host_total;
        if cand.is_trivial() {
            candidates.push((
                cand,
                Verdict {
                    status: Status::Etale,
                    reason: Reason::TrivialAlgebra,
                    witness: None,
                    target_rank: Some(rank),
                    target_rings: vec![String::from("B")],
                    lagrangian,
                },
            ));
            continue;
        }
        let verdict =
            classify_candidate(cat, &cand, rings, options, &mut nimrep_cache, lagrangian)?;
        candidates.push((cand, verdict));
    }

    // deterministic candidate order: total multiplicity, then lex
    candidates.sort_by(|(a, _), (b, _)| {
        let sa: u32 = a.n.iter().sum();
        let sb: u32 = b.n.iter().sum();
        sa.cmp(&sb).then(a.n.cmp(&b.n))
    });

    let completely_anisotropic = !candidates
        .iter()
        .any(|(c, v)| !c.is_trivial() && v.status == Status::Etale);
    let mut gsd = BTreeSet::new();
    for (_, v) in &candidates {
        if v.status == Status::Etale {
            if let Some(r) = v.target_rank {
                gsd.insert(r);
            }
        }
    }
    let gsd_open_ended = rmax > 3 && !modular;
    let spontaneously_broken = gsd.iter().next().map(|&m| m > 1).unwrap_or(false);

    let mut notes: Vec<String> = options.extra_notes.to_vec();
    if rmax > 3 {
        notes.push(String::from(
            "candidate ring library beyond rank 3 is restricted to multiplicity-free fusion rings",
        ));
    }

    Ok(ClassificationReport {
        dataset_id: cat.id.clone(),
        family: cat.family.clone(),
        params: cat.params.clone(),
        r_max: rmax,
        scan_bound: options.scan_bound,
        modular,
        symmetric,
        charge,
        candidates,
        ring_matches: matches,
        rejected_rings: rejected,
        completely_anisotropic,
        gsd,
        gsd_open_ended,
        spontaneously_broken,
        notes,
    })
}

fn classify_candidate(
    cat: &PreModularCategory,
    cand: &AlgebraCandidate,
    rings: &[(String, String, usize)],
    options: &ClassifyOptions<'_>,
    nimrep_cache: &mut BTreeMap<usize, Vec<NimRep>>,
    lagrangian: bool,
) -> Result<Verdict, ClassifyError> {
    let mut verdict = Verdict {
        status: Status::Inconclusive,
        reason: Reason::NecessaryOnly,
        witness: None,
        target_rank: None,
        target_rings: Vec::new(),
        lagrangian,
    };

    // NIM-rep existence and internal-Hom matching, per candidate rank
    if !rings.is_empty() {
        let mut any_rep = false;
        let ranks: BTreeSet<usize> = rings.iter().map(|(_, _, r)| *r).collect();
        let mut matching_ranks: BTreeSet<usize> = BTreeSet::new();
        for &r in &ranks {
            let reps = nimrep_cache
                .entry(r)
                .or_insert_with(|| enumerate_nimreps(cat.ring(), r).unwrap_or_default());
            if !reps.is_empty() {
                any_rep = true;
            }
            if reps
                .iter()
                .any(|rep| rep.internal_hom_candidates().contains(&cand.n))
            {
                matching_ranks.insert(r);
            }
        }
        let matched: Vec<(String, String, usize)> = rings
            .iter()
            .filter(|(_, _, r)| matching_ranks.contains(r))
            .cloned()
            .collect();
        if matched.is_empty() {
            verdict.status = Status::RuledOut;
            verdict.reason = if any_rep {
                Reason::NoMatchingModuleCategory
            } else {
                Reason::NoNimRep
            };
            return Ok(verdict);
        }
        verdict.target_rank = matching_ranks.iter().next().copied();
        verdict.target_rings = matched.iter().map(|(_, d, _)| d.clone()).collect();
    }

    // monodromy (necessary for commutativity)
    let violations = monodromy_test(cat, cand, options.strict_monodromy);
    if !violations.is_empty() {
        let ((i, j, k), theta) = &violations[0];
        verdict.status = Status::RuledOut;
        verdict.reason = Reason::MonodromyFailure;
        verdict.witness = Some(format!(
            "theta({}, {}, {}) = {} != 0",
            cat.ring().label(*i),
            cat.ring().label(*j),
            cat.ring().label(*k),
            theta
        ));
        return Ok(verdict);
    }

    // invertible-pair candidates are decided by the self-braiding scalar
    match invertible_algebra_test(cat, cand, options.certificates) {
        InvertibleTest::Pass => {
            verdict.status = Status::Etale;
            verdict.reason = Reason::SelfBraidingIdentity;
            return Ok(verdict);
        }
        InvertibleTest::Fail(scalar) => {
            verdict.status = Status::RuledOut;
            verdict.reason = Reason::SelfBraidingFailure;
            verdict.witness = Some(format!("c(X, X) = {}", scalar));
            return Ok(verdict);
        }
        InvertibleTest::MissingIndicator => {
            verdict.witness = Some(String::from(
                "invertible pair without a Frobenius-Schur certificate",
            ));
        }
        InvertibleTest::NotApplicable => {}
    }

    // modular hosts: dyslectic bound and central-charge matching
    match modular_constraints_test(cat, cand, options.mfc_library) {
        ModularTest::BoundFail => {
            verdict.status = Status::RuledOut;
            verdict.reason = Reason::DyslecticBound;
            return Ok(verdict);
        }
        ModularTest::ChargeFail { target_fpdim } => {
            verdict.status = Status::RuledOut;
            verdict.reason = Reason::CentralChargeMismatch;
            verdict.witness = Some(format!(
                "no reference modular category with FPdim {} and matching charge",
                target_fpdim
            ));
            return Ok(verdict);
        }
        ModularTest::Pass | ModularTest::NotModular => {}
    }

    // symmetric hosts: the regular candidate is decided by positivity
    if let Some(regular) = regular_vector(cat) {
        if regular == *cand {
            match tannakian_test(cat) {
                TannakianTest::Pass => {
                    verdict.status = Status::Etale;
                    verdict.reason = Reason::TannakianPositivity;
                    return Ok(verdict);
                }
                TannakianTest::Fail => {
                    verdict.status = Status::RuledOut;
                    verdict.reason = Reason::TannakianPositivity;
                    verdict.witness =
                        Some(String::from("symmetric host with non-positive dimensions"));
                    return Ok(verdict);
                }
                TannakianTest::NotApplicable => {}
            }
        }
    }

    // verified half-braiding certificates grant etale status
    for cert in options.certificates {
        if let Certificate::HalfBraiding { algebra, scalars } = cert {
            if algebra == &cand.n {
                match verify_commutative_certificate(cat, cand, scalars, options.certificates) {
                    CertificateCheck::Commutative => {
                        verdict.status = Status::Etale;
                        verdict.reason = Reason::CatalogCertificate;
                        return Ok(verdict);
                    }
                    CertificateCheck::NotCommutative { witness } => {
                        verdict.status = Status::RuledOut;
                        verdict.reason = Reason::SelfBraidingFailure;
                        verdict.witness = Some(witness);
                        return Ok(verdict);
                    }
                    CertificateCheck::Bad(msg) => {
                        return Err(ClassifyError::BadCertificate(msg));
                    }
                }
            }
        }
    }

    Ok(verdict)
}

/// Ground state degeneracy set and the symmetry-breaking verdict from a
/// finished report: ranks of `B_A` over etale verdicts; the symmetry is
/// spontaneously broken iff the minimum exceeds one.
pub fn gsd_set(report: &ClassificationReport) -> (BTreeSet<usize>, bool) {
    (report.gsd.clone(), report.spontaneously_broken)
}
