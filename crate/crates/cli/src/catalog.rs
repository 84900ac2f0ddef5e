//! The built-in catalog: pre-modular families over the rank <= 3 fusion
//! rings, the candidate-ring library, the modular reference list used for
//! central-charge matching, and the braiding certificates.
//!
//! Families declare their conformal-dimension lists explicitly. On load the
//! declared lists are cross-checked against the bounded-denominator solver
//! plus the twist/balancing admissibility filter, so a catalog that
//! disagrees with its own derivation refuses to load.

use std::collections::BTreeMap;

use etale_core::premodular::{admissibility, solve_conformal_dimensions, HAdmissibility, SolveMode};
use etale_core::{
    rat, rat_int, Certificate, ClassificationReport, ClassifyError, ClassifyOptions, CycNumber,
    DimensionCharacter, FusionRing, LibraryRing, MfcReference, PhaseExponent, PreModularCategory,
};

use crate::rings::{builtin_rings, RingEntry};

/// Default denominator bound for conformal-dimension scans.
pub const DEFAULT_BOUND: u64 = 60;

/// A parameterised family of pre-modular datasets over one fusion ring.
#[derive(Clone, Debug)]
pub struct FamilyEntry {
    pub id: String,
    pub display: String,
    pub ring_id: String,
    pub provenance: String,
    pub mode: SolveMode,
    pub char_conductor: u64,
    pub h_pins: Vec<(usize, PhaseExponent)>,
    pub s_pins: Vec<(usize, usize, CycNumber)>,
    pub characters: Vec<FamilyCharacter>,
    /// Extra `params` attached to every dataset of the family.
    pub class_params: Vec<(String, String)>,
}

/// One dimension character of a family, with its declared h-vectors.
#[derive(Clone, Debug)]
pub struct FamilyCharacter {
    pub id: String,
    pub dims: Vec<CycNumber>,
    pub dims_display: Vec<String>,
    /// Positive square root of the categorical dimension, when irrational.
    pub total_sqrt: Option<CycNumber>,
    pub declared_h: Vec<Vec<PhaseExponent>>,
}

/// Attaches a certificate to the datasets whose params match.
#[derive(Clone, Debug)]
pub struct CertificateRule {
    pub id: String,
    pub family: String,
    pub conditions: Vec<(String, String)>,
    pub certificate: Certificate,
}

/// Catalog loading failures.
#[derive(Debug)]
pub enum CatalogError {
    Parse(String),
    Validation { entry: String, message: String },
    ExpansionMismatch { family: String, character: String },
}

impl std::fmt::Display for CatalogError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CatalogError::Parse(m) => write!(f, "parse error: {}", m),
            CatalogError::Validation { entry, message } => {
                write!(f, "validation error in entry {}: {}", entry, message)
            }
            CatalogError::ExpansionMismatch { family, character } => write!(
                f,
                "expansion mismatch: declared h-list for family {} character {} disagrees with the solver",
                family, character
            ),
        }
    }
}

impl std::error::Error for CatalogError {}

/// The loaded catalog: rings, families, the expanded datasets, the modular
/// reference list and certificate rules.
pub struct Catalog {
    pub rings: Vec<RingEntry>,
    pub families: Vec<FamilyEntry>,
    pub datasets: Vec<PreModularCategory>,
    pub mfc_refs: Vec<MfcReference>,
    pub cert_rules: Vec<CertificateRule>,
    pub scan_bound: u64,
    library: Vec<LibraryRing>,
}

impl Catalog {
    pub fn builtin() -> Result<Catalog, CatalogError> {
        Self::builtin_with_bound(DEFAULT_BOUND)
    }

    pub fn builtin_with_bound(bound: u64) -> Result<Catalog, CatalogError> {
        let rings = builtin_rings();
        let families = builtin_families(&rings);
        let cert_rules = builtin_certificates();
        Self::assemble(rings, families, cert_rules, bound)
    }

    pub fn assemble(
        rings: Vec<RingEntry>,
        families: Vec<FamilyEntry>,
        cert_rules: Vec<CertificateRule>,
        bound: u64,
    ) -> Result<Catalog, CatalogError> {
        for entry in &rings {
            if !entry.ring.validate().is_empty() {
                return Err(CatalogError::Validation {
                    entry: entry.id.clone(),
                    message: "fusion ring axioms violated".into(),
                });
            }
        }
        let ring_map: BTreeMap<&str, &RingEntry> =
            rings.iter().map(|r| (r.id.as_str(), r)).collect();
        let mut datasets = Vec::new();
        for family in &families {
            let ring_entry = ring_map.get(family.ring_id.as_str()).ok_or_else(|| {
                CatalogError::Validation {
                    entry: family.id.clone(),
                    message: format!("unknown ring {}", family.ring_id),
                }
            })?;
            let expanded = expand_family(family, ring_entry, bound)?;
            datasets.extend(expanded);
        }
        // modular reference list: every modular dataset of the expansion
        let mut mfc_refs = Vec::new();
        for cat in &datasets {
            if cat.is_modular() {
                if let Ok(charge) = cat.central_charge() {
                    mfc_refs.push(MfcReference {
                        id: cat.id.clone(),
                        rank: cat.rank(),
                        fpdim: cat.fp().total.clone(),
                        charge,
                    });
                }
            }
        }
        let library: Vec<LibraryRing> = rings
            .iter()
            .map(|r| {
                LibraryRing::new(
                    r.id.clone(),
                    r.display.clone(),
                    r.ring.clone(),
                    r.char_conductor,
                )
            })
            .collect();
        let catalog = Catalog {
            rings,
            families,
            datasets,
            mfc_refs,
            cert_rules,
            scan_bound: bound,
            library,
        };
        catalog.validate_certificates()?;
        Ok(catalog)
    }

    /// Every certificate rule must match at least one dataset and verify
    /// against each dataset it matches.
    fn validate_certificates(&self) -> Result<(), CatalogError> {
        for rule in &self.cert_rules {
            let mut matched = false;
            for cat in self.datasets_of_family(&rule.family) {
                if !rule_matches(rule, cat) {
                    continue;
                }
                matched = true;
                if let Certificate::HalfBraiding { algebra, scalars } = &rule.certificate {
                    let cand = etale_core::AlgebraCandidate { n: algebra.clone() };
                    let certs = self.certificates_for(cat);
                    if let etale_core::etale::CertificateCheck::Bad(msg) =
                        etale_core::etale::verify_commutative_certificate(
                            cat, &cand, scalars, &certs,
                        )
                    {
                        return Err(CatalogError::Validation {
                            entry: rule.id.clone(),
                            message: format!("certificate fails on {}: {}", cat.id, msg),
                        });
                    }
                }
            }
            if !matched {
                return Err(CatalogError::Validation {
                    entry: rule.id.clone(),
                    message: "certificate matches no dataset".into(),
                });
            }
        }
        Ok(())
    }

    pub fn dataset(&self, id: &str) -> Option<&PreModularCategory> {
        self.datasets.iter().find(|d| d.id == id)
    }

    pub fn datasets_of_family<'a>(
        &'a self,
        family: &'a str,
    ) -> impl Iterator<Item = &'a PreModularCategory> + 'a {
        self.datasets.iter().filter(move |d| d.family == family)
    }

    pub fn family_ids(&self) -> Vec<String> {
        let mut out: Vec<String> = Vec::new();
        for f in &self.families {
            if !out.contains(&f.id) {
                out.push(f.id.clone());
            }
        }
        out
    }

    pub fn ring(&self, id: &str) -> Option<&RingEntry> {
        self.rings
            .iter()
            .find(|r| r.id == id || r.display.eq_ignore_ascii_case(id))
    }

    pub fn library(&self) -> &[LibraryRing] {
        &self.library
    }

    /// Certificates attached to one dataset.
    pub fn certificates_for(&self, cat: &PreModularCategory) -> Vec<Certificate> {
        self.cert_rules
            .iter()
            .filter(|rule| rule.family == cat.family && rule_matches(rule, cat))
            .map(|rule| rule.certificate.clone())
            .collect()
    }

    /// Classifies one dataset with the catalog's libraries.
    pub fn classify(
        &self,
        cat: &PreModularCategory,
        strict_monodromy: bool,
    ) -> Result<ClassificationReport, ClassifyError> {
        let certs = self.certificates_for(cat);
        let notes: Vec<String> = if cat.family == "psu2-5" {
            vec![String::from(
                "the dyslectic-module category has rank at most 8 (refinement of r_max; annotation only)",
            )]
        } else {
            Vec::new()
        };
        let options = ClassifyOptions {
            ring_library: &self.library,
            mfc_library: &self.mfc_refs,
            certificates: &certs,
            strict_monodromy,
            scan_bound: self.scan_bound,
            extra_notes: &notes,
        };
        etale_core::etale::classify(cat, &options)
    }
}


fn rule_matches(rule: &CertificateRule, cat: &PreModularCategory) -> bool {
    rule.conditions
        .iter()
        .all(|(k, v)| cat.params.get(k).map(|x| x == v).unwrap_or(false))
}

/// Expands one family: run the solver under the family pins, filter by
/// admissibility, cross-check against the declared lists, and emit one
/// dataset per (character, h-vector, D-sign).
fn expand_family(
    family: &FamilyEntry,
    ring_entry: &RingEntry,
    bound: u64,
) -> Result<Vec<PreModularCategory>, CatalogError> {
    let ring = &ring_entry.ring;
    let mut out = Vec::new();
    for character in &family.characters {
        let solved = solve_conformal_dimensions(
            ring,
            &character.dims,
            bound,
            family.mode,
            &family.h_pins,
            &family.s_pins,
        );
        let admissible: Vec<Vec<PhaseExponent>> = solved
            .into_iter()
            .filter(|h| {
                !matches!(
                    admissibility(
                        ring,
                        &character.dims,
                        h,
                        character.total_sqrt.as_ref(),
                        family.char_conductor,
                    ),
                    HAdmissibility::RejectModular | HAdmissibility::RejectSymmetricNonIntegral
                )
            })
            .collect();
        if admissible != character.declared_h {
            return Err(CatalogError::ExpansionMismatch {
                family: family.id.clone(),
                character: character.id.clone(),
            });
        }
        let fp = ring
            .fp_dims(family.char_conductor)
            .map_err(|e| CatalogError::Validation {
                entry: family.id.clone(),
                message: format!("{:?}", e),
            })?;
        for h in &character.declared_h {
            for d_sign in [1i8, -1] {
                let id = dataset_id(family, character, h, d_sign);
                let mut cat = PreModularCategory::new_with_fp(
                    id.clone(),
                    family.id.clone(),
                    ring.clone(),
                    character.dims.clone(),
                    h.clone(),
                    d_sign,
                    character.total_sqrt.clone(),
                    fp.clone(),
                )
                .map_err(|e| CatalogError::Validation {
                    entry: id.clone(),
                    message: format!("{:?}", e),
                })?;
                let mut params = BTreeMap::new();
                for (k, v) in &family.class_params {
                    params.insert(k.clone(), v.clone());
                }
                params.insert("char".into(), character.id.clone());
                for (i, label) in ring.labels().iter().enumerate().skip(1) {
                    params.insert(format!("d{}", label), character.dims_display[i].clone());
                    params.insert(format!("h{}", label), format!("{}", h[i]));
                }
                params.insert("D".into(), if d_sign > 0 { "+".into() } else { "-".into() });
                cat.params = params;
                out.push(cat);
            }
        }
    }
    Ok(out)
}

fn dataset_id(
    family: &FamilyEntry,
    character: &FamilyCharacter,
    h: &[PhaseExponent],
    d_sign: i8,
) -> String {
    let hs: Vec<String> = h
        .iter()
        .skip(1)
        .map(|p| format!("{}", p).replace('/', "_"))
        .collect();
    format!(
        "{}:{}:h{}:D{}",
        family.id,
        character.id,
        hs.join(","),
        if d_sign > 0 { "+" } else { "-" }
    )
}

fn ph(num: i64, den: i64) -> PhaseExponent {
    PhaseExponent::from_ratio(num, den)
}

fn hvec(parts: &[(i64, i64)]) -> Vec<PhaseExponent> {
    let mut out = vec![PhaseExponent::zero()];
    out.extend(parts.iter().map(|&(n, d)| ph(n, d)));
    out
}

fn root(num: i64, den: i64) -> CycNumber {
    CycNumber::root_of_unity(&ph(num, den))
}

/// `2 sin(pi k / n)` as an exact cyclotomic number (positive for
/// `0 < k/n < 1`): `-i (zeta_{2n}^k - zeta_{2n}^{-k})`.
fn two_sin(k: i64, n: i64) -> CycNumber {
    let minus_i = root(3, 4);
    let diff = &root(k, 2 * n) - &root(2 * n - k, 2 * n);
    &minus_i * &diff
}

/// `2 cos(pi k / n)` as an exact cyclotomic number.
fn two_cos(k: i64, n: i64) -> CycNumber {
    &root(k, 2 * n) + &root(2 * n - k, 2 * n)
}

fn builtin_families(rings: &[RingEntry]) -> Vec<FamilyEntry> {
    let ring = |id: &str| -> &FusionRing {
        &rings.iter().find(|r| r.id == id).expect("builtin ring").ring
    };
    let one = CycNumber::one();
    let mut families = Vec::new();

    // rank one
    families.push(FamilyEntry {
        id: "vect".into(),
        display: "trivial category".into(),
        ring_id: "fr-1-0-1".into(),
        provenance: "rank 1; two datasets from the sign of D".into(),
        mode: SolveMode::General,
        char_conductor: 1,
        h_pins: vec![],
        s_pins: vec![],
        class_params: vec![],
        characters: vec![FamilyCharacter {
            id: "c1".into(),
            dims: vec![one.clone()],
            dims_display: vec!["1".into()],
            total_sqrt: None,
            declared_h: vec![vec![PhaseExponent::zero()]],
        }],
    });

    // Z/2 ring: d_X = +-1, h in {0, 1/4, 1/2, 3/4}
    families.push(FamilyEntry {
        id: "vec-z2".into(),
        display: "Z/2 pointed".into(),
        ring_id: "fr-2-0-1".into(),
        provenance: "sixteen datasets: h x d_X x sign(D)".into(),
        mode: SolveMode::General,
        char_conductor: 4,
        h_pins: vec![],
        s_pins: vec![],
        class_params: vec![],
        characters: [1i64, -1]
            .iter()
            .map(|&d| FamilyCharacter {
                id: if d > 0 { "d+1".into() } else { "d-1".into() },
                dims: vec![one.clone(), CycNumber::from_int(d)],
                dims_display: vec!["1".into(), format!("{}", d)],
                total_sqrt: None,
                declared_h: vec![
                    hvec(&[(0, 1)]),
                    hvec(&[(1, 4)]),
                    hvec(&[(1, 2)]),
                    hvec(&[(3, 4)]),
                ],
            })
            .collect(),
    });

    // Fibonacci ring: d_X = phi with h in {2/5, 3/5}; d_X = -1/phi with
    // h in {1/5, 4/5}; total dimension 2 sin(2 pi/5) resp. 2 sin(pi/5)
    let phi = {
        let s5 = CycNumber::sqrt_rational(&rat_int(5));
        (&one + &s5).scale(&rat(1, 2))
    };
    let neg_inv_phi = -&phi.inv();
    families.push(FamilyEntry {
        id: "fib".into(),
        display: "Fibonacci".into(),
        ring_id: "fr-2-0-2".into(),
        provenance: "eight datasets: d_X x h x sign(D)".into(),
        mode: SolveMode::General,
        char_conductor: 5,
        h_pins: vec![],
        s_pins: vec![],
        class_params: vec![],
        characters: vec![
            FamilyCharacter {
                id: "phi".into(),
                dims: vec![one.clone(), phi.clone()],
                dims_display: vec!["1".into(), "phi".into()],
                total_sqrt: Some(two_sin(2, 5)),
                declared_h: vec![hvec(&[(2, 5)]), hvec(&[(3, 5)])],
            },
            FamilyCharacter {
                id: "-1/phi".into(),
                dims: vec![one.clone(), neg_inv_phi],
                dims_display: vec!["1".into(), "-1/phi".into()],
                total_sqrt: Some(two_sin(1, 5)),
                declared_h: vec![hvec(&[(1, 5)]), hvec(&[(4, 5)])],
            },
        ],
    });

    // Z/3 ring: unique character, h_X = h_Y in {0, 1/3, 2/3}
    families.push(FamilyEntry {
        id: "vec-z3".into(),
        display: "Z/3 pointed".into(),
        ring_id: "fr-3-2-1".into(),
        provenance: "six datasets: h x sign(D)".into(),
        mode: SolveMode::General,
        char_conductor: 3,
        h_pins: vec![],
        s_pins: vec![],
        class_params: vec![],
        characters: vec![FamilyCharacter {
            id: "c1".into(),
            dims: vec![one.clone(), one.clone(), one.clone()],
            dims_display: vec!["1".into(), "1".into(), "1".into()],
            total_sqrt: None,
            declared_h: vec![
                hvec(&[(0, 1), (0, 1)]),
                hvec(&[(1, 3), (1, 3)]),
                hvec(&[(2, 3), (2, 3)]),
            ],
        }],
    });

    // Ising ring: d_Y = +-sqrt(2), h_X = 1/2 pinned, h_Y the odd sixteenths
    let sqrt2 = CycNumber::sqrt_rational(&rat_int(2));
    let sixteenths: Vec<Vec<PhaseExponent>> = [1i64, 3, 5, 7, 9, 11, 13, 15]
        .iter()
        .map(|&k| hvec(&[(1, 2), (k, 16)]))
        .collect();
    families.push(FamilyEntry {
        id: "ising".into(),
        display: "Ising".into(),
        ring_id: "fr-3-0-1".into(),
        provenance: "thirty-two datasets: d_Y x h_Y x sign(D); h_X = 1/2 pinned".into(),
        mode: SolveMode::General,
        char_conductor: 16,
        h_pins: vec![(1, ph(1, 2))],
        s_pins: vec![],
        class_params: vec![],
        characters: vec![
            FamilyCharacter {
                id: "d+sqrt2".into(),
                dims: vec![one.clone(), one.clone(), sqrt2.clone()],
                dims_display: vec!["1".into(), "1".into(), "sqrt2".into()],
                total_sqrt: None,
                declared_h: sixteenths.clone(),
            },
            FamilyCharacter {
                id: "d-sqrt2".into(),
                dims: vec![one.clone(), one.clone(), -&sqrt2],
                dims_display: vec!["1".into(), "1".into(), "-sqrt2".into()],
                total_sqrt: None,
                declared_h: sixteenths,
            },
        ],
    });

    // Rep(S3) ring, non-symmetric class: pin S_{YY} = -2; d_Y = 2 gives
    // h_Y in {1/3, 2/3}, d_Y = -1 has no rational solution (Vafa)
    families.push(FamilyEntry {
        id: "rep-s3".into(),
        display: "Rep(S3), non-symmetric".into(),
        ring_id: "fr-3-0-2".into(),
        provenance: "four datasets; S_{YY} = -2 pinned".into(),
        mode: SolveMode::General,
        char_conductor: 3,
        h_pins: vec![],
        s_pins: vec![(2, 2, CycNumber::from_int(-2))],
        class_params: vec![("class".into(), "non-symmetric".into())],
        characters: vec![
            FamilyCharacter {
                id: "d+2".into(),
                dims: vec![one.clone(), one.clone(), CycNumber::from_int(2)],
                dims_display: vec!["1".into(), "1".into(), "2".into()],
                total_sqrt: None,
                declared_h: vec![hvec(&[(0, 1), (1, 3)]), hvec(&[(0, 1), (2, 3)])],
            },
            FamilyCharacter {
                id: "d-1".into(),
                dims: vec![one.clone(), one.clone(), CycNumber::from_int(-1)],
                dims_display: vec!["1".into(), "1".into(), "-1".into()],
                total_sqrt: None,
                declared_h: vec![],
            },
        ],
    });

    // Rep(S3) ring, symmetric class: h = 0, both dimension characters
    families.push(FamilyEntry {
        id: "rep-s3".into(),
        display: "Rep(S3), symmetric".into(),
        ring_id: "fr-3-0-2".into(),
        provenance: "four datasets; symmetric S-matrix".into(),
        mode: SolveMode::Symmetric,
        char_conductor: 3,
        h_pins: vec![],
        s_pins: vec![],
        class_params: vec![("class".into(), "symmetric".into())],
        characters: vec![
            FamilyCharacter {
                id: "d+2".into(),
                dims: vec![one.clone(), one.clone(), CycNumber::from_int(2)],
                dims_display: vec!["1".into(), "1".into(), "2".into()],
                total_sqrt: None,
                declared_h: vec![hvec(&[(0, 1), (0, 1)])],
            },
            FamilyCharacter {
                id: "d-1".into(),
                dims: vec![one.clone(), one.clone(), CycNumber::from_int(-1)],
                dims_display: vec!["1".into(), "1".into(), "-1".into()],
                total_sqrt: None,
                declared_h: vec![hvec(&[(0, 1), (0, 1)])],
            },
        ],
    });

    // psu(2)_5 ring: three sine-ratio characters, two h-pairs each
    let psu = ring("fr-3-0-3");
    let chars = psu
        .dimension_characters(7)
        .expect("psu(2)_5 characters");
    assert_eq!(chars.len(), 3);
    let pick = |f: &dyn Fn(&DimensionCharacter) -> bool| -> Vec<CycNumber> {
        chars
            .iter()
            .find(|c| f(c))
            .expect("psu(2)_5 character by sign pattern")
            .dims
            .clone()
    };
    let positive =
        |x: &CycNumber| x.at_least(&rat_int(0)) && !x.is_zero();
    let first = pick(&|c| positive(&c.dims[1]) && !positive(&c.dims[2]));
    let second = pick(&|c| !positive(&c.dims[1]));
    let third = pick(&|c| positive(&c.dims[1]) && positive(&c.dims[2]));
    let sqrt7 = CycNumber::sqrt_rational(&rat_int(7));
    let psu_sqrt = |denom: CycNumber| -> CycNumber { &sqrt7 * &denom.inv() };
    families.push(FamilyEntry {
        id: "psu2-5".into(),
        display: "psu(2)_5".into(),
        ring_id: "fr-3-0-3".into(),
        provenance: "twelve datasets: character x h-pair x sign(D); all modular".into(),
        mode: SolveMode::General,
        char_conductor: 7,
        h_pins: vec![],
        s_pins: vec![],
        class_params: vec![],
        characters: vec![
            FamilyCharacter {
                id: "1st".into(),
                dims: first,
                dims_display: vec![
                    "1".into(),
                    "sin(pi/7)/cos(pi/14)".into(),
                    "-sin(2pi/7)/cos(pi/14)".into(),
                ],
                total_sqrt: Some(psu_sqrt(two_cos(1, 14))),
                declared_h: vec![hvec(&[(3, 7), (1, 7)]), hvec(&[(4, 7), (6, 7)])],
            },
            FamilyCharacter {
                id: "2nd".into(),
                dims: second,
                dims_display: vec![
                    "1".into(),
                    "-sin(3pi/7)/cos(3pi/14)".into(),
                    "sin(pi/7)/cos(3pi/14)".into(),
                ],
                total_sqrt: Some(psu_sqrt(two_cos(3, 14))),
                declared_h: vec![hvec(&[(2, 7), (3, 7)]), hvec(&[(5, 7), (4, 7)])],
            },
            FamilyCharacter {
                id: "3rd".into(),
                dims: third,
                dims_display: vec![
                    "1".into(),
                    "sin(5pi/7)/sin(pi/7)".into(),
                    "sin(3pi/7)/sin(pi/7)".into(),
                ],
                total_sqrt: Some(psu_sqrt(two_sin(1, 7))),
                declared_h: vec![hvec(&[(1, 7), (5, 7)]), hvec(&[(6, 7), (2, 7)])],
            },
        ],
    });

    families
}

fn builtin_certificates() -> Vec<CertificateRule> {
    let mut rules = Vec::new();
    // Z/2 hosts: degenerate datasets carry nu_2(X) = alpha d_X with
    // alpha = +1 (the anomaly-free associator for h in {0, 1/2})
    for (h, d, value) in [
        ("0", "1", 1i8),
        ("0", "-1", -1),
        ("1/2", "1", 1),
        ("1/2", "-1", -1),
    ] {
        rules.push(CertificateRule {
            id: format!("cert-z2-fs-h{}-d{}", h.replace('/', "_"), d),
            family: "vec-z2".into(),
            conditions: vec![("hX".into(), h.into()), ("dX".into(), d.into())],
            certificate: Certificate::FsIndicator {
                object: 1,
                value,
            },
        });
    }
    // Rep(S3): nu_2(X) = +1 on all eight datasets; nu_2(Y) = +1 on the
    // symmetric ones
    rules.push(CertificateRule {
        id: "cert-s3-fs-x".into(),
        family: "rep-s3".into(),
        conditions: vec![],
        certificate: Certificate::FsIndicator {
            object: 1,
            value: 1,
        },
    });
    rules.push(CertificateRule {
        id: "cert-s3-fs-y".into(),
        family: "rep-s3".into(),
        conditions: vec![("class".into(), "symmetric".into())],
        certificate: Certificate::FsIndicator {
            object: 2,
            value: 1,
        },
    });
    // Z/3 host with trivial twists: R = +1 on every channel of 1 + X + Y
    rules.push(CertificateRule {
        id: "cert-z3-regular".into(),
        family: "vec-z3".into(),
        conditions: vec![("hX".into(), "0".into())],
        certificate: Certificate::HalfBraiding {
            algebra: vec![1, 1, 1],
            scalars: all_trivial_scalars(&crate::rings::z3(), &[0, 1, 2]),
        },
    });
    // symmetric Rep(S3): c_{Y,Y} = id on each channel grants 1 + Y
    rules.push(CertificateRule {
        id: "cert-s3-one-plus-y".into(),
        family: "rep-s3".into(),
        conditions: vec![("class".into(), "symmetric".into())],
        certificate: Certificate::HalfBraiding {
            algebra: vec![1, 0, 1],
            scalars: all_trivial_scalars(&crate::rings::rep_s3(), &[0, 2]),
        },
    });
    // symmetric Rep(S3) with d_Y = 2: the regular algebra 1 + X + 2Y
    rules.push(CertificateRule {
        id: "cert-s3-regular".into(),
        family: "rep-s3".into(),
        conditions: vec![
            ("class".into(), "symmetric".into()),
            ("dY".into(), "2".into()),
        ],
        certificate: Certificate::HalfBraiding {
            algebra: vec![1, 1, 2],
            scalars: all_trivial_scalars(&crate::rings::rep_s3(), &[0, 1, 2]),
        },
    });
    rules
}

/// Trivial (`+1`) half-braiding scalars on every fusion channel inside the
/// support.
fn all_trivial_scalars(
    ring: &FusionRing,
    support: &[usize],
) -> Vec<(usize, usize, usize, PhaseExponent)> {
    let mut out = Vec::new();
    for &i in support {
        for &j in support {
            for &k in support {
                if ring.n(i, j, k) > 0 {
                    out.push((i, j, k, PhaseExponent::zero()));
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_counts() {
        let catalog = Catalog::builtin_with_bound(16).unwrap();
        let count = |family: &str| catalog.datasets_of_family(family).count();
        assert_eq!(count("vect"), 2);
        assert_eq!(count("vec-z2"), 16);
        assert_eq!(count("fib"), 8);
        assert_eq!(count("vec-z3"), 6);
        assert_eq!(count("ising"), 32);
        assert_eq!(count("rep-s3"), 8);
        assert_eq!(count("psu2-5"), 12);
        assert_eq!(catalog.datasets.len(), 84);
    }

    #[test]
    fn unitary_subcounts_match() {
        let catalog = Catalog::builtin_with_bound(16).unwrap();
        let unitary_modular = |family: &str| {
            catalog
                .datasets_of_family(family)
                .filter(|d| d.is_unitary() && d.is_modular())
                .count()
        };
        assert_eq!(unitary_modular("vec-z2"), 4);
        assert_eq!(unitary_modular("fib"), 4);
        assert_eq!(unitary_modular("vec-z3"), 4);
        assert_eq!(unitary_modular("ising"), 16);
        assert_eq!(unitary_modular("psu2-5"), 4);
    }

    #[test]
    fn psu2_5_all_modular() {
        let catalog = Catalog::builtin_with_bound(16).unwrap();
        for cat in catalog.datasets_of_family("psu2-5") {
            assert!(cat.is_modular(), "{} must be modular", cat.id);
        }
    }

    #[test]
    fn rep_s3_never_modular() {
        let catalog = Catalog::builtin_with_bound(16).unwrap();
        for cat in catalog.datasets_of_family("rep-s3") {
            assert!(!cat.is_modular(), "{} must be degenerate", cat.id);
        }
    }
}
