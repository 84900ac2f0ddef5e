//! Report emitters: per-dataset markdown, aggregated per-family tables in
//! the classification-table layout, the summary rollup, JSON and CSV.

use std::collections::{BTreeMap, BTreeSet};

use etale_core::{
    ClassificationReport, CycNumber, PreModularCategory, Rational, Status,
};
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::{json, Value};

/// Renders an exact cyclotomic scalar compactly: rationals as `p/q`,
/// quadratic irrationalities as `(a + b*sqrt(d))/c`, anything else as its
/// canonical root-of-unity combination.
pub fn pretty_cyc(x: &CycNumber) -> String {
    if let Some(q) = x.to_rational() {
        return format!("{}", q);
    }
    if let Some(s) = quadratic_form(x) {
        return s;
    }
    format!("{}", x)
}

fn quadratic_form(x: &CycNumber) -> Option<String> {
    if !x.is_real() {
        return None;
    }
    let m = x.conductor();
    // rational part: trace / degree
    let mut trace = CycNumber::zero();
    let mut degree = 0u32;
    for a in 1..m {
        if num_integer::gcd(a, m) == 1 {
            trace = &trace + &x.galois(a);
            degree += 1;
        }
    }
    let a = trace.to_rational()? / Rational::from(etale_core::BigInt::from(degree));
    let y = x - &CycNumber::from_rational(a.clone());
    let y2 = (&y * &y).to_rational()?;
    if y2.is_zero() {
        return Some(format!("{}", a));
    }
    // y = b sqrt(d) with d squarefree
    let num = y2.numer().to_i64()?;
    let den = y2.denom().to_i64()?;
    let (bn, dn) = split_square_i64(num);
    let (bd, dd) = split_square_i64(den);
    // y^2 = (bn^2 dn) / (bd^2 dd) = (bn/(bd*dd))^2 * dn*dd
    let d = dn * dd;
    let b_abs = Rational::new(
        etale_core::BigInt::from(bn),
        etale_core::BigInt::from(bd * dd),
    );
    let b = if y.at_least(&Rational::zero()) {
        b_abs
    } else {
        -b_abs
    };
    let fmt_term = |b: &Rational| -> String {
        if b.is_one() {
            format!("sqrt({})", d)
        } else {
            format!("{}*sqrt({})", b, d)
        }
    };
    if a.is_zero() {
        if b == -Rational::one() {
            return Some(format!("-sqrt({})", d));
        }
        Some(fmt_term(&b))
    } else if b.is_negative() {
        Some(format!("{} - {}", a, fmt_term(&-b)))
    } else {
        Some(format!("{} + {}", a, fmt_term(&b)))
    }
}

fn split_square_i64(n: i64) -> (i64, i64) {
    let mut square = 1i64;
    let mut rest = n.abs();
    let mut p = 2i64;
    while p * p <= rest {
        while rest % (p * p) == 0 {
            rest /= p * p;
            square *= p;
        }
        p += 1;
    }
    (square, rest)
}

/// Optional decimal rendering via certified intervals.
pub fn decimal_of(x: &CycNumber, digits: u32) -> Option<String> {
    x.real_interval(digits + 1).ok().map(|iv| iv.decimal(digits))
}

fn status_str(s: Status) -> &'static str {
    match s {
        Status::Etale => "etale",
        Status::RuledOut => "ruled out",
        Status::Inconclusive => "inconclusive",
    }
}

fn charge_str(c: &Rational) -> String {
    format!("{}", c)
}

fn params_line(params: &BTreeMap<String, String>) -> String {
    params
        .iter()
        .map(|(k, v)| format!("{}={}", k, v))
        .collect::<Vec<_>>()
        .join(", ")
}

fn gsd_str(report: &ClassificationReport) -> String {
    let vals: Vec<String> = report.gsd.iter().map(|v| v.to_string()).collect();
    let open = if report.gsd_open_ended { ", ..." } else { "" };
    format!("{{{}{}}}", vals.join(", "), open)
}

/// Per-dataset markdown report.
pub fn dataset_markdown(
    cat: &PreModularCategory,
    report: &ClassificationReport,
    float_digits: Option<u32>,
) -> String {
    let ring = cat.ring();
    let mut out = String::new();
    out.push_str(&format!("## {}\n\n", report.dataset_id));
    out.push_str(&format!(
        "family: {} | params: {}\n\n",
        report.family,
        params_line(&report.params)
    ));
    let fp = &cat.fp().total;
    let mut line = format!("- FPdim(B) = {}", pretty_cyc(fp));
    if let Some(d) = float_digits.and_then(|n| decimal_of(fp, n)) {
        line.push_str(&format!(" (~{})", d));
    }
    out.push_str(&line);
    out.push('\n');
    out.push_str(&format!(
        "- D^2 = {} | modular: {} | symmetric: {}",
        pretty_cyc(&cat.categorical_dimension()),
        if report.modular { "yes" } else { "no" },
        if report.symmetric { "yes" } else { "no" },
    ));
    if let Some(c) = &report.charge {
        out.push_str(&format!(" | c = {} (mod 8)", charge_str(c)));
    }
    out.push('\n');
    out.push_str(&format!(
        "- r_max = {} | twist scan bound = {}\n\n",
        report.r_max, report.scan_bound
    ));
    if !report.ring_matches.is_empty() {
        out.push_str("candidate rings for B_A: ");
        let items: Vec<String> = report
            .ring_matches
            .iter()
            .map(|m| {
                format!(
                    "{} (FPdim_B(A) = {})",
                    m.display,
                    pretty_cyc(&m.required_fpdim)
                )
            })
            .collect();
        out.push_str(&items.join("; "));
        out.push('\n');
    }
    if !report.rejected_rings.is_empty() {
        out.push_str("rejected rings: ");
        let items: Vec<String> = report
            .rejected_rings
            .iter()
            .map(|(id, r)| format!("{} ({})", id, r.as_str()))
            .collect();
        out.push_str(&items.join("; "));
        out.push_str("\n\n");
    }
    out.push_str("| A | FPdim_B(A) | status | reason | B_A | rank(B_A) | Lagrangian? |\n");
    out.push_str("|---|---|---|---|---|---|---|\n");
    for (cand, verdict) in &report.candidates {
        let fpdim_a = cand.fpdim(cat.fp());
        let target = if verdict.target_rings.is_empty() {
            String::from("-")
        } else {
            verdict.target_rings.join(" / ")
        };
        let rank = verdict
            .target_rank
            .map(|r| r.to_string())
            .unwrap_or_else(|| String::from("-"));
        let mut reason = verdict.reason.as_str().to_string();
        if let Some(w) = &verdict.witness {
            reason.push_str(&format!(" [{}]", w));
        }
        out.push_str(&format!(
            "| {} | {} | {} | {} | {} | {} | {} |\n",
            cand.pretty(ring),
            pretty_cyc(&fpdim_a),
            status_str(verdict.status),
            reason,
            target,
            rank,
            if verdict.lagrangian { "Yes" } else { "No" },
        ));
    }
    out.push('\n');
    out.push_str(&format!(
        "completely anisotropic: {} | GSD = {} | spontaneously broken: {}\n",
        if report.completely_anisotropic {
            "yes"
        } else {
            "no"
        },
        gsd_str(report),
        if report.spontaneously_broken {
            "yes"
        } else {
            "no"
        },
    ));
    for note in &report.notes {
        out.push_str(&format!("- note: {}\n", note));
    }
    out.push('\n');
    out
}

/// Drops the parameters that do not influence membership of `matched`
/// inside `all` (e.g. the sign of D) and renders the remaining distinct
/// combinations as a qualifier.
fn qualifier(
    all: &[&BTreeMap<String, String>],
    matched: &[&BTreeMap<String, String>],
) -> Option<String> {
    if matched.len() == all.len() {
        return None;
    }
    let mut keys: Vec<String> = all
        .first()
        .map(|m| m.keys().cloned().collect())
        .unwrap_or_default();
    // greedily drop keys that do not change the matched set
    let project = |m: &BTreeMap<String, String>, keys: &[String]| -> Vec<String> {
        keys.iter()
            .map(|k| m.get(k).cloned().unwrap_or_default())
            .collect()
    };
    let matched_set: BTreeSet<Vec<String>> = {
        let keys = keys.clone();
        matched.iter().map(|m| project(m, &keys)).collect()
    };
    let mut current: BTreeSet<Vec<String>> = matched_set;
    let mut retained = keys.clone();
    for k in keys.drain(..) {
        let trial: Vec<String> = retained.iter().filter(|x| **x != k).cloned().collect();
        let trial_matched: BTreeSet<Vec<String>> =
            matched.iter().map(|m| project(m, &trial)).collect();
        let reexpanded: Vec<&&BTreeMap<String, String>> = all
            .iter()
            .filter(|m| trial_matched.contains(&project(m, &trial)))
            .collect();
        if reexpanded.len() == matched.len() {
            retained = trial;
            current = trial_matched;
        }
    }
    if retained.is_empty() {
        return None;
    }
    let combos: Vec<String> = current
        .iter()
        .map(|vals| format!("({})", vals.join(",")))
        .collect();
    Some(format!(
        "({})={}",
        retained.join(","),
        combos.join(",")
    ))
}

/// Aggregated table over a set of datasets of one family (or class subset),
/// in the layout of the per-family classification tables: one row per etale
/// algebra with a parameter qualifier when it does not hold everywhere.
pub fn family_table_markdown(
    title: &str,
    items: &[(&PreModularCategory, &ClassificationReport)],
) -> String {
    let mut out = String::new();
    out.push_str(&format!("### Connected etale algebras in {}\n\n", title));
    out.push_str("| Connected etale algebra A | B_A | rank(B_A) | Lagrangian? |\n");
    out.push_str("|---|---|---|---|\n");

    // group etale rows by (algebra, target, rank, lagrangian)
    #[derive(PartialEq, Eq, PartialOrd, Ord)]
    struct RowKey {
        total: u32,
        n: Vec<u32>,
        target: String,
        rank: Option<usize>,
        lagrangian: bool,
    }
    let mut rows: BTreeMap<RowKey, Vec<usize>> = BTreeMap::new();
    for (idx, (_, report)) in items.iter().enumerate() {
        for (cand, verdict) in &report.candidates {
            if verdict.status != Status::Etale {
                continue;
            }
            let target = if cand.is_trivial() {
                String::from("B")
            } else {
                verdict.target_rings.join(" / ")
            };
            let key = RowKey {
                total: cand.n.iter().sum(),
                n: cand.n.clone(),
                target,
                rank: verdict.target_rank,
                lagrangian: verdict.lagrangian,
            };
            rows.entry(key).or_default().push(idx);
        }
    }
    let all_params: Vec<&BTreeMap<String, String>> =
        items.iter().map(|(_, r)| &r.params).collect();
    for (key, indices) in &rows {
        let matched: Vec<&BTreeMap<String, String>> =
            indices.iter().map(|&i| &items[i].1.params).collect();
        let ring = items[indices[0]].0.ring();
        let cand = etale_core::AlgebraCandidate { n: key.n.clone() };
        let mut label = cand.pretty(ring);
        if let Some(q) = qualifier(&all_params, &matched) {
            label.push_str(&format!(" for {}", q));
        }
        out.push_str(&format!(
            "| {} | {} | {} | {} |\n",
            label,
            key.target,
            key.rank.map(|r| r.to_string()).unwrap_or_default(),
            if key.lagrangian { "Yes" } else { "No" },
        ));
    }
    out.push('\n');

    // GSD summary per parameter group
    let mut gsd_groups: BTreeMap<String, Vec<usize>> = BTreeMap::new();
    for (idx, (_, report)) in items.iter().enumerate() {
        let key = format!(
            "{} | broken: {}",
            gsd_str(report),
            if report.spontaneously_broken { "yes" } else { "no" }
        );
        gsd_groups.entry(key).or_default().push(idx);
    }
    for (desc, indices) in &gsd_groups {
        let matched: Vec<&BTreeMap<String, String>> =
            indices.iter().map(|&i| &items[i].1.params).collect();
        match qualifier(&all_params, &matched) {
            Some(q) => out.push_str(&format!("- GSD {} for {}\n", desc, q)),
            None => out.push_str(&format!("- GSD {}\n", desc)),
        }
    }
    out.push('\n');
    out
}

/// The summary rollup: one line per family with the completely-anisotropic
/// verdict (with parameter conditions when the verdict is mixed).
pub fn summary_markdown(
    groups: &[(String, Vec<(&PreModularCategory, &ClassificationReport)>)],
) -> String {
    let mut out = String::new();
    out.push_str("### Summary: connected etale algebras by family\n\n");
    out.push_str("| Family | Datasets | Completely anisotropic? |\n");
    out.push_str("|---|---|---|\n");
    for (family, items) in groups {
        let all_params: Vec<&BTreeMap<String, String>> =
            items.iter().map(|(_, r)| &r.params).collect();
        let anisotropic: Vec<&BTreeMap<String, String>> = items
            .iter()
            .filter(|(_, r)| r.completely_anisotropic)
            .map(|(_, r)| &r.params)
            .collect();
        let verdict = if anisotropic.len() == items.len() {
            String::from("Yes")
        } else if anisotropic.is_empty() {
            String::from("No")
        } else {
            let not: Vec<&BTreeMap<String, String>> = items
                .iter()
                .filter(|(_, r)| !r.completely_anisotropic)
                .map(|(_, r)| &r.params)
                .collect();
            match qualifier(&all_params, &not) {
                Some(q) => format!("No for {} / Yes (otherwise)", q),
                None => String::from("mixed"),
            }
        };
        out.push_str(&format!(
            "| {} | {} | {} |\n",
            family,
            items.len(),
            verdict
        ));
    }
    out.push('\n');
    out
}

/// Structured JSON for one report; every table cell traces back to a
/// verdict field.
pub fn report_json(cat: &PreModularCategory, report: &ClassificationReport) -> Value {
    let ring = cat.ring();
    let candidates: Vec<Value> = report
        .candidates
        .iter()
        .map(|(cand, verdict)| {
            json!({
                "algebra": cand.pretty(ring),
                "multiplicities": cand.n,
                "fpdim": pretty_cyc(&cand.fpdim(cat.fp())),
                "status": status_str(verdict.status),
                "reason": verdict.reason.as_str(),
                "witness": verdict.witness,
                "target_rings": verdict.target_rings,
                "target_rank": verdict.target_rank,
                "lagrangian": verdict.lagrangian,
            })
        })
        .collect();
    json!({
        "dataset": report.dataset_id,
        "family": report.family,
        "params": report.params,
        "fpdim": pretty_cyc(&cat.fp().total),
        "categorical_dimension": pretty_cyc(&cat.categorical_dimension()),
        "r_max": report.r_max,
        "scan_bound": report.scan_bound,
        "modular": report.modular,
        "symmetric": report.symmetric,
        "central_charge_mod_8": report.charge.as_ref().map(charge_str),
        "candidates": candidates,
        "candidate_rings": report.ring_matches.iter().map(|m| json!({
            "ring": m.ring_id,
            "display": m.display,
            "rank": m.rank,
            "required_fpdim": pretty_cyc(&m.required_fpdim),
            "vectors": m.vectors,
        })).collect::<Vec<_>>(),
        "rejected_rings": report.rejected_rings.iter().map(|(id, r)| json!({
            "ring": id,
            "reason": r.as_str(),
        })).collect::<Vec<_>>(),
        "completely_anisotropic": report.completely_anisotropic,
        "gsd": report.gsd.iter().collect::<Vec<_>>(),
        "gsd_open_ended": report.gsd_open_ended,
        "spontaneously_broken": report.spontaneously_broken,
        "notes": report.notes,
    })
}

/// Flat CSV: one row per candidate verdict.
pub fn reports_csv(items: &[(&PreModularCategory, &ClassificationReport)]) -> String {
    let mut out = String::from(
        "dataset,family,algebra,status,reason,target,rank,lagrangian,completely_anisotropic,gsd\n",
    );
    for (cat, report) in items {
        for (cand, verdict) in &report.candidates {
            out.push_str(&format!(
                "{},{},{},{},{},{},{},{},{},{}\n",
                report.dataset_id,
                report.family,
                cand.pretty(cat.ring()).replace(',', ";"),
                status_str(verdict.status),
                verdict.reason.as_str().replace(',', ";"),
                verdict.target_rings.join("/"),
                verdict
                    .target_rank
                    .map(|r| r.to_string())
                    .unwrap_or_default(),
                verdict.lagrangian,
                report.completely_anisotropic,
                gsd_str(report).replace(", ", ";"),
            ));
        }
    }
    out
}
