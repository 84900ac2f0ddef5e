//! Command line front end: classification runs, NIM-rep enumeration,
//! conformal-dimension solving and catalog inspection.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use rayon::prelude::*;

use etale::catalog::{Catalog, DEFAULT_BOUND};
use etale::report;
use etale_core::premodular::{admissibility, solve_conformal_dimensions, HAdmissibility, SolveMode};
use etale_core::{ClassificationReport, PreModularCategory, Status};

#[derive(Parser)]
#[command(
    name = "etale",
    about = "Classify connected etale algebras in small pre-modular fusion categories with exact arithmetic",
    version
)]
struct Cli {
    /// Path to a catalog JSON file (default: built-in; env ETALE_CATALOG)
    #[arg(long, global = true)]
    catalog: Option<PathBuf>,
    /// Denominator bound for conformal-dimension scans
    #[arg(long, global = true)]
    bound: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify connected etale algebras in catalog datasets
    Classify {
        /// Family id (vect, vec-z2, fib, vec-z3, ising, rep-s3, psu2-5)
        #[arg(long)]
        family: Option<String>,
        /// Single dataset id
        #[arg(long)]
        dataset: Option<String>,
        /// Parameter filter, e.g. dX=1,hX=0
        #[arg(long)]
        params: Option<String>,
        /// Restrict rep-s3 to the symmetric class
        #[arg(long)]
        symmetric: bool,
        /// Restrict rep-s3 to the non-symmetric class
        #[arg(long)]
        non_symmetric: bool,
        /// Print the per-family rollup instead of per-dataset reports
        #[arg(long)]
        summary: bool,
        /// Output format: markdown, json or csv
        #[arg(long, default_value = "markdown")]
        format: String,
        /// Exit with code 2 when any verdict is inconclusive
        #[arg(long)]
        strict: bool,
        /// Check monodromy on all channels, not only those inside the
        /// candidate's support (diagnostic)
        #[arg(long)]
        strict_monodromy: bool,
        /// Append decimal approximations with this many digits
        #[arg(long)]
        float: Option<u32>,
    },
    /// Enumerate NIM-reps of a catalog fusion ring
    Nimrep {
        /// Ring id or display name (e.g. fr-2-0-2 or Fib)
        #[arg(long)]
        ring: String,
        /// Module-category dimension (1..=9)
        #[arg(long)]
        dim: usize,
        #[arg(long, default_value = "markdown")]
        format: String,
    },
    /// Solve for admissible conformal dimensions of a catalog ring
    Confdims {
        /// Ring or family id
        #[arg(long)]
        ring: String,
        /// Character index (1-based, family order) or character id
        #[arg(long)]
        character: Option<String>,
        /// general or symmetric
        #[arg(long, default_value = "general")]
        mode: String,
        /// Skip the twist/balancing admissibility filter
        #[arg(long)]
        raw: bool,
    },
    /// Inspect or export the catalog
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    /// List rings, families and dataset counts
    List,
    /// Show one dataset by id
    Show { id: String },
    /// Print the catalog as JSON
    Export,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {}", message);
            ExitCode::from(1)
        }
    }
}

fn load_catalog(path: &Option<PathBuf>, bound: u64) -> Result<Catalog, String> {
    let path = path
        .clone()
        .or_else(|| std::env::var_os("ETALE_CATALOG").map(PathBuf::from));
    match path {
        Some(p) => {
            let text = std::fs::read_to_string(&p)
                .map_err(|e| format!("cannot read {}: {}", p.display(), e))?;
            Catalog::from_json(&text, bound).map_err(|e| e.to_string())
        }
        None => Catalog::builtin_with_bound(bound).map_err(|e| e.to_string()),
    }
}

fn parse_params(expr: &str) -> Result<BTreeMap<String, String>, String> {
    let mut out = BTreeMap::new();
    for pair in expr.split(',') {
        let mut kv = pair.splitn(2, '=');
        let k = kv.next().unwrap_or("").trim();
        let v = kv.next().ok_or_else(|| format!("bad parameter: {}", pair))?;
        out.insert(k.to_string(), v.trim().to_string());
    }
    Ok(out)
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    let bound = cli.bound.unwrap_or(DEFAULT_BOUND);
    match cli.command {
        Command::Classify {
            family,
            dataset,
            params,
            symmetric,
            non_symmetric,
            summary,
            format,
            strict,
            strict_monodromy,
            float,
        } => {
            let catalog = load_catalog(&cli.catalog, bound)?;
            let filter = match &params {
                Some(p) => Some(parse_params(p)?),
                None => None,
            };
            let selected: Vec<&PreModularCategory> = catalog
                .datasets
                .iter()
                .filter(|d| family.as_ref().map(|f| &d.family == f).unwrap_or(true))
                .filter(|d| dataset.as_ref().map(|id| &d.id == id).unwrap_or(true))
                .filter(|d| {
                    filter
                        .as_ref()
                        .map(|f| {
                            f.iter()
                                .all(|(k, v)| d.params.get(k).map(|x| x == v).unwrap_or(false))
                        })
                        .unwrap_or(true)
                })
                .filter(|d| {
                    !symmetric
                        || d.params
                            .get("class")
                            .map(|c| c == "symmetric")
                            .unwrap_or(true)
                })
                .filter(|d| {
                    !non_symmetric
                        || d.params
                            .get("class")
                            .map(|c| c == "non-symmetric")
                            .unwrap_or(true)
                })
                .collect();
            if selected.is_empty() {
                return Err("selector matches no dataset".into());
            }
            let reports: Vec<ClassificationReport> = selected
                .par_iter()
                .map(|cat| {
                    catalog
                        .classify(cat, strict_monodromy)
                        .map_err(|e| format!("{:?}", e))
                })
                .collect::<Result<Vec<_>, _>>()?;
            let items: Vec<(&PreModularCategory, &ClassificationReport)> =
                selected.iter().copied().zip(reports.iter()).collect();

            match format.as_str() {
                "json" => {
                    let values: Vec<serde_json::Value> = items
                        .iter()
                        .map(|(c, r)| report::report_json(c, r))
                        .collect();
                    println!(
                        "{}",
                        serde_json::to_string_pretty(&serde_json::Value::Array(values))
                            .expect("json")
                    );
                }
                "csv" => print!("{}", report::reports_csv(&items)),
                "markdown" => {
                    if summary {
                        let mut groups: Vec<(
                            String,
                            Vec<(&PreModularCategory, &ClassificationReport)>,
                        )> = Vec::new();
                        for fam in catalog.family_ids() {
                            let members: Vec<_> = items
                                .iter()
                                .filter(|(c, _)| c.family == fam)
                                .copied()
                                .collect();
                            if !members.is_empty() {
                                groups.push((fam, members));
                            }
                        }
                        print!("{}", report::summary_markdown(&groups));
                        for (fam, members) in &groups {
                            print!("{}", report::family_table_markdown(fam, members));
                        }
                    } else {
                        for (cat, rep) in &items {
                            print!("{}", report::dataset_markdown(cat, rep, float));
                        }
                    }
                }
                other => return Err(format!("unknown format: {}", other)),
            }

            let inconclusive = reports.iter().any(|r| {
                r.candidates
                    .iter()
                    .any(|(_, v)| v.status == Status::Inconclusive)
            });
            if strict && inconclusive {
                return Ok(ExitCode::from(2));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Nimrep { ring, dim, format } => {
            let catalog = load_catalog(&cli.catalog, bound)?;
            let entry = catalog
                .ring(&ring)
                .ok_or_else(|| format!("unknown ring: {}", ring))?;
            let reps = etale_core::nimrep::enumerate_nimreps(&entry.ring, dim)
                .map_err(|e| format!("{:?}", e))?;
            if format == "json" {
                let values: Vec<serde_json::Value> = reps
                    .iter()
                    .map(|rep| {
                        serde_json::json!({
                            "dimension": rep.dim(),
                            "matrices": (0..entry.ring.rank())
                                .map(|i| matrix_rows(rep, i))
                                .collect::<Vec<_>>(),
                            "canonical": true,
                            "indecomposable": rep.is_indecomposable(),
                            "internal_hom": rep.internal_hom_candidates(),
                        })
                    })
                    .collect();
                println!(
                    "{}",
                    serde_json::to_string_pretty(&serde_json::Value::Array(values)).expect("json")
                );
                return Ok(ExitCode::SUCCESS);
            }
            if reps.is_empty() {
                println!("no NIM-reps of dimension {} for {}", dim, entry.display);
                return Ok(ExitCode::SUCCESS);
            }
            println!(
                "{} NIM-rep(s) of dimension {} for {} (canonical forms):",
                reps.len(),
                dim,
                entry.display
            );
            for (idx, rep) in reps.iter().enumerate() {
                println!(
                    "- solution {}{}",
                    idx + 1,
                    if rep.is_indecomposable() {
                        ""
                    } else {
                        " (decomposable)"
                    }
                );
                for i in 0..entry.ring.rank() {
                    println!("    M[{}] = {:?}", entry.ring.label(i), matrix_rows(rep, i));
                }
                println!(
                    "    internal-Hom candidates: {:?}",
                    rep.internal_hom_candidates()
                );
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Confdims {
            ring,
            character,
            mode,
            raw,
        } => {
            let catalog = load_catalog(&cli.catalog, bound)?;
            let mode = match mode.as_str() {
                "general" => SolveMode::General,
                "symmetric" => SolveMode::Symmetric,
                other => return Err(format!("unknown mode: {}", other)),
            };
            // resolve a family (by id, or by its ring), preferring the
            // entry whose solve mode matches the request when a family id
            // covers several classes
            let by_ring = catalog.ring(&ring).map(|e| e.id.clone());
            let matches_selector = |f: &&etale::catalog::FamilyEntry| {
                f.id == ring || by_ring.as_ref().map(|id| &f.ring_id == id).unwrap_or(false)
            };
            let family = catalog
                .families
                .iter()
                .filter(matches_selector)
                .find(|f| f.mode == mode)
                .or_else(|| catalog.families.iter().find(matches_selector))
                .ok_or_else(|| format!("no family for ring: {}", ring))?;
            let ring_entry = catalog
                .ring(&family.ring_id)
                .ok_or_else(|| format!("unknown ring: {}", family.ring_id))?;
            let characters: Vec<&etale::catalog::FamilyCharacter> = match &character {
                None => family.characters.iter().collect(),
                Some(sel) => {
                    let by_index = sel
                        .parse::<usize>()
                        .ok()
                        .and_then(|i| family.characters.get(i.saturating_sub(1)));
                    let found = by_index
                        .or_else(|| family.characters.iter().find(|c| &c.id == sel))
                        .ok_or_else(|| format!("unknown character: {}", sel))?;
                    vec![found]
                }
            };
            for c in characters {
                let solved = solve_conformal_dimensions(
                    &ring_entry.ring,
                    &c.dims,
                    bound,
                    mode,
                    &family.h_pins,
                    &family.s_pins,
                );
                let kept: Vec<_> = solved
                    .into_iter()
                    .filter(|h| {
                        raw || !matches!(
                            admissibility(
                                &ring_entry.ring,
                                &c.dims,
                                h,
                                c.total_sqrt.as_ref(),
                                family.char_conductor,
                            ),
                            HAdmissibility::RejectModular
                                | HAdmissibility::RejectSymmetricNonIntegral
                        )
                    })
                    .collect();
                println!(
                    "character {} (dims {}): {} solution(s) with denominator bound {}{}",
                    c.id,
                    c.dims_display.join(", "),
                    kept.len(),
                    bound,
                    if raw { " (raw scan)" } else { "" }
                );
                for h in &kept {
                    let rendered: Vec<String> = h
                        .iter()
                        .enumerate()
                        .skip(1)
                        .map(|(i, p)| format!("h{} = {}", ring_entry.ring.label(i), p))
                        .collect();
                    println!("  ({})", rendered.join(", "));
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Catalog { action } => {
            let catalog = load_catalog(&cli.catalog, bound)?;
            match action {
                CatalogAction::List => {
                    println!("fusion rings:");
                    for r in &catalog.rings {
                        println!(
                            "  {} ({}), rank {} [{}]",
                            r.id,
                            r.display,
                            r.ring.rank(),
                            r.provenance
                        );
                    }
                    println!("families:");
                    for f in catalog.family_ids() {
                        let count = catalog.datasets_of_family(&f).count();
                        println!("  {} ({} datasets)", f, count);
                    }
                    println!(
                        "modular references: {} | certificates: {}",
                        catalog.mfc_refs.len(),
                        catalog.cert_rules.len()
                    );
                }
                CatalogAction::Show { id } => {
                    let cat = catalog
                        .dataset(&id)
                        .ok_or_else(|| format!("unknown dataset: {}", id))?;
                    let report = catalog
                        .classify(cat, false)
                        .map_err(|e| format!("{:?}", e))?;
                    println!("{}", report::dataset_markdown(cat, &report, Some(6)));
                }
                CatalogAction::Export => {
                    println!("{}", catalog.to_json());
                }
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn matrix_rows(rep: &etale_core::NimRep, object: usize) -> Vec<Vec<u32>> {
    let d = rep.dim();
    (0..d)
        .map(|a| (0..d).map(|b| rep.entry(object, a, b)).collect())
        .collect()
}
