//! Versioned JSON schema for the catalog: fusion rings, pre-modular
//! families, derived modular references and certificates. Exact scalars are
//! serialised as `{conductor, terms: [[exponent, "p/q"], ...]}` so the
//! encoding is unambiguous.

use std::collections::BTreeMap;

use etale_core::{BigInt, Certificate, CycNumber, PhaseExponent, Rational};
use serde::{Deserialize, Serialize};

use crate::catalog::{Catalog, CatalogError, CertificateRule, FamilyCharacter, FamilyEntry};
use crate::rings::RingEntry;
use etale_core::premodular::SolveMode;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CatalogDoc {
    pub version: u32,
    pub entries: Vec<EntryDoc>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EntryDoc {
    pub id: String,
    pub kind: String,
    pub provenance: String,
    pub conductor: u64,
    pub payload: PayloadDoc,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum PayloadDoc {
    FusionRing {
        display: String,
        labels: Vec<String>,
        dual: Vec<usize>,
        tensor: Vec<Vec<Vec<u32>>>,
    },
    PremodularFamily {
        display: String,
        ring: String,
        mode: String,
        class_params: Vec<(String, String)>,
        h_pins: Vec<(usize, String)>,
        s_pins: Vec<(usize, usize, CycDoc)>,
        characters: Vec<CharacterDoc>,
    },
    MfcReference {
        rank: usize,
        fpdim: CycDoc,
        charge: String,
    },
    Certificate {
        family: String,
        conditions: Vec<(String, String)>,
        certificate: CertDoc,
    },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CycDoc {
    pub conductor: u64,
    pub terms: Vec<(u64, String)>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CharacterDoc {
    pub id: String,
    pub dims: Vec<CycDoc>,
    pub dims_display: Vec<String>,
    pub total_sqrt: Option<CycDoc>,
    pub declared_h: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum CertDoc {
    FsIndicator {
        object: usize,
        value: i8,
    },
    HalfBraiding {
        algebra: Vec<u32>,
        scalars: Vec<(usize, usize, usize, String)>,
    },
}

fn rational_to_string(r: &Rational) -> String {
    format!("{}", r)
}

fn rational_from_string(s: &str) -> Result<Rational, CatalogError> {
    let parse_err = || CatalogError::Parse(format!("bad rational: {}", s));
    let mut parts = s.splitn(2, '/');
    let numer: BigInt = parts
        .next()
        .ok_or_else(parse_err)?
        .trim()
        .parse()
        .map_err(|_| parse_err())?;
    let denom: BigInt = match parts.next() {
        Some(d) => d.trim().parse().map_err(|_| parse_err())?,
        None => BigInt::from(1),
    };
    Ok(Rational::new(numer, denom))
}

fn phase_to_string(p: &PhaseExponent) -> String {
    format!("{}", p)
}

fn phase_from_string(s: &str) -> Result<PhaseExponent, CatalogError> {
    Ok(PhaseExponent::new(rational_from_string(s)?))
}

pub fn cyc_to_doc(x: &CycNumber) -> CycDoc {
    CycDoc {
        conductor: x.conductor(),
        terms: x
            .raw_terms()
            .iter()
            .map(|(e, c)| (*e, rational_to_string(c)))
            .collect(),
    }
}

pub fn cyc_from_doc(doc: &CycDoc) -> Result<CycNumber, CatalogError> {
    let mut terms = BTreeMap::new();
    for (e, c) in &doc.terms {
        terms.insert(*e, rational_from_string(c)?);
    }
    Ok(CycNumber::from_parts(doc.conductor, terms))
}

fn mode_to_string(mode: SolveMode) -> String {
    match mode {
        SolveMode::General => "general".into(),
        SolveMode::Symmetric => "symmetric".into(),
    }
}

fn mode_from_string(s: &str) -> Result<SolveMode, CatalogError> {
    match s {
        "general" => Ok(SolveMode::General),
        "symmetric" => Ok(SolveMode::Symmetric),
        _ => Err(CatalogError::Parse(format!("bad solve mode: {}", s))),
    }
}

fn cert_to_doc(cert: &Certificate) -> CertDoc {
    match cert {
        Certificate::FsIndicator { object, value } => CertDoc::FsIndicator {
            object: *object,
            value: *value,
        },
        Certificate::HalfBraiding { algebra, scalars } => CertDoc::HalfBraiding {
            algebra: algebra.clone(),
            scalars: scalars
                .iter()
                .map(|(i, j, k, t)| (*i, *j, *k, phase_to_string(t)))
                .collect(),
        },
    }
}

fn cert_from_doc(doc: &CertDoc) -> Result<Certificate, CatalogError> {
    Ok(match doc {
        CertDoc::FsIndicator { object, value } => Certificate::FsIndicator {
            object: *object,
            value: *value,
        },
        CertDoc::HalfBraiding { algebra, scalars } => {
            let mut out = Vec::new();
            for (i, j, k, t) in scalars {
                out.push((*i, *j, *k, phase_from_string(t)?));
            }
            Certificate::HalfBraiding {
                algebra: algebra.clone(),
                scalars: out,
            }
        }
    })
}

impl Catalog {
    /// Serialises the catalog (rings, families, derived modular references
    /// and certificates) to the versioned document form.
    pub fn to_doc(&self) -> CatalogDoc {
        let mut entries = Vec::new();
        for ring in &self.rings {
            let r = ring.ring.rank();
            let tensor: Vec<Vec<Vec<u32>>> = (0..r)
                .map(|i| {
                    (0..r)
                        .map(|j| (0..r).map(|k| ring.ring.n(i, j, k)).collect())
                        .collect()
                })
                .collect();
            entries.push(EntryDoc {
                id: ring.id.clone(),
                kind: "fusion_ring".into(),
                provenance: ring.provenance.clone(),
                conductor: ring.char_conductor,
                payload: PayloadDoc::FusionRing {
                    display: ring.display.clone(),
                    labels: ring.ring.labels().to_vec(),
                    dual: ring.ring.dual_map().to_vec(),
                    tensor,
                },
            });
        }
        for (idx, family) in self.families.iter().enumerate() {
            entries.push(EntryDoc {
                id: format!("{}#{}", family.id, idx),
                kind: "premodular_family".into(),
                provenance: family.provenance.clone(),
                conductor: family.char_conductor,
                payload: PayloadDoc::PremodularFamily {
                    display: family.display.clone(),
                    ring: family.ring_id.clone(),
                    mode: mode_to_string(family.mode),
                    class_params: family.class_params.clone(),
                    h_pins: family
                        .h_pins
                        .iter()
                        .map(|(i, p)| (*i, phase_to_string(p)))
                        .collect(),
                    s_pins: family
                        .s_pins
                        .iter()
                        .map(|(i, j, v)| (*i, *j, cyc_to_doc(v)))
                        .collect(),
                    characters: family
                        .characters
                        .iter()
                        .map(|c| CharacterDoc {
                            id: c.id.clone(),
                            dims: c.dims.iter().map(cyc_to_doc).collect(),
                            dims_display: c.dims_display.clone(),
                            total_sqrt: c.total_sqrt.as_ref().map(cyc_to_doc),
                            declared_h: c
                                .declared_h
                                .iter()
                                .map(|h| h.iter().map(phase_to_string).collect())
                                .collect(),
                        })
                        .collect(),
                },
            });
        }
        for mfc in &self.mfc_refs {
            entries.push(EntryDoc {
                id: format!("mfc:{}", mfc.id),
                kind: "mfc_reference".into(),
                provenance: "derived from the expanded modular datasets".into(),
                conductor: mfc.fpdim.conductor(),
                payload: PayloadDoc::MfcReference {
                    rank: mfc.rank,
                    fpdim: cyc_to_doc(&mfc.fpdim),
                    charge: rational_to_string(&mfc.charge),
                },
            });
        }
        for rule in &self.cert_rules {
            entries.push(EntryDoc {
                id: rule.id.clone(),
                kind: "certificate".into(),
                provenance: "braiding data".into(),
                conductor: 1,
                payload: PayloadDoc::Certificate {
                    family: rule.family.clone(),
                    conditions: rule.conditions.clone(),
                    certificate: cert_to_doc(&rule.certificate),
                },
            });
        }
        CatalogDoc {
            version: SCHEMA_VERSION,
            entries,
        }
    }

    /// Loads a catalog from its document form, re-validating every entry
    /// and re-deriving the modular reference list; declared references must
    /// agree with the derived ones.
    pub fn from_doc(doc: &CatalogDoc, bound: u64) -> Result<Catalog, CatalogError> {
        if doc.version != SCHEMA_VERSION {
            return Err(CatalogError::Parse(format!(
                "unsupported schema version {}",
                doc.version
            )));
        }
        let mut rings = Vec::new();
        let mut families = Vec::new();
        let mut cert_rules = Vec::new();
        let mut declared_refs: Vec<(String, usize, CycNumber, Rational)> = Vec::new();
        for entry in &doc.entries {
            match &entry.payload {
                PayloadDoc::FusionRing {
                    display,
                    labels,
                    dual,
                    tensor,
                } => {
                    let rank = labels.len();
                    let mut flat = vec![0u32; rank * rank * rank];
                    for i in 0..rank {
                        for j in 0..rank {
                            for k in 0..rank {
                                flat[(i * rank + j) * rank + k] = tensor[i][j][k];
                            }
                        }
                    }
                    rings.push(RingEntry {
                        id: entry.id.clone(),
                        display: display.clone(),
                        provenance: entry.provenance.clone(),
                        char_conductor: entry.conductor,
                        ring: etale_core::FusionRing::new(labels.clone(), dual.clone(), flat),
                    });
                }
                PayloadDoc::PremodularFamily {
                    display,
                    ring,
                    mode,
                    class_params,
                    h_pins,
                    s_pins,
                    characters,
                } => {
                    let mut chars = Vec::new();
                    for c in characters {
                        let mut dims = Vec::new();
                        for d in &c.dims {
                            dims.push(cyc_from_doc(d)?);
                        }
                        let total_sqrt = match &c.total_sqrt {
                            Some(d) => Some(cyc_from_doc(d)?),
                            None => None,
                        };
                        let mut declared = Vec::new();
                        for h in &c.declared_h {
                            let mut hv = Vec::new();
                            for p in h {
                                hv.push(phase_from_string(p)?);
                            }
                            declared.push(hv);
                        }
                        chars.push(FamilyCharacter {
                            id: c.id.clone(),
                            dims,
                            dims_display: c.dims_display.clone(),
                            total_sqrt,
                            declared_h: declared,
                        });
                    }
                    let mut hp = Vec::new();
                    for (i, p) in h_pins {
                        hp.push((*i, phase_from_string(p)?));
                    }
                    let mut sp = Vec::new();
                    for (i, j, v) in s_pins {
                        sp.push((*i, *j, cyc_from_doc(v)?));
                    }
                    let family_id = entry
                        .id
                        .split('#')
                        .next()
                        .unwrap_or(&entry.id)
                        .to_string();
                    families.push(FamilyEntry {
                        id: family_id,
                        display: display.clone(),
                        ring_id: ring.clone(),
                        provenance: entry.provenance.clone(),
                        mode: mode_from_string(mode)?,
                        char_conductor: entry.conductor,
                        h_pins: hp,
                        s_pins: sp,
                        characters: chars,
                        class_params: class_params.clone(),
                    });
                }
                PayloadDoc::MfcReference {
                    rank,
                    fpdim,
                    charge,
                } => {
                    let id = entry
                        .id
                        .strip_prefix("mfc:")
                        .unwrap_or(&entry.id)
                        .to_string();
                    declared_refs.push((
                        id,
                        *rank,
                        cyc_from_doc(fpdim)?,
                        rational_from_string(charge)?,
                    ));
                }
                PayloadDoc::Certificate {
                    family,
                    conditions,
                    certificate,
                } => {
                    cert_rules.push(CertificateRule {
                        id: entry.id.clone(),
                        family: family.clone(),
                        conditions: conditions.clone(),
                        certificate: cert_from_doc(certificate)?,
                    });
                }
            }
        }
        let catalog = Catalog::assemble(rings, families, cert_rules, bound)?;
        // declared modular references must match the derived set
        if !declared_refs.is_empty() {
            if declared_refs.len() != catalog.mfc_refs.len() {
                return Err(CatalogError::Validation {
                    entry: "mfc_reference".into(),
                    message: "declared reference count disagrees with derivation".into(),
                });
            }
            for (id, rank, fpdim, charge) in &declared_refs {
                let found = catalog.mfc_refs.iter().any(|m| {
                    &m.id == id && m.rank == *rank && m.fpdim == *fpdim && m.charge == *charge
                });
                if !found {
                    return Err(CatalogError::Validation {
                        entry: format!("mfc:{}", id),
                        message: "declared modular reference disagrees with derivation".into(),
                    });
                }
            }
        }
        Ok(catalog)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_doc()).expect("catalog serialisation")
    }

    pub fn from_json(text: &str, bound: u64) -> Result<Catalog, CatalogError> {
        let doc: CatalogDoc =
            serde_json::from_str(text).map_err(|e| CatalogError::Parse(e.to_string()))?;
        Catalog::from_doc(&doc, bound)
    }
}
