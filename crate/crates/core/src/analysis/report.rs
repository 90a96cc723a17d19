use std::collections::BTreeMap;
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf2m::{FieldConfig, FieldCtx};

use super::verify::{verify, Case, VerificationReport, VerifyOptions};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Refusal {
    pub kind: String,
    pub message: String,
}

impl From<&Error> for Refusal {
    fn from(e: &Error) -> Self {
        Refusal { kind: e.kind().to_string(), message: e.to_string() }
    }
}

/// A verified case, or the reason it was refused.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(untagged)]
pub enum BatchEntry {
    Report(Box<VerificationReport>),
    Refused { name: String, case: Case, error: Refusal },
}

impl BatchEntry {
    pub fn passed(&self) -> bool {
        matches!(self, BatchEntry::Report(r) if r.passed())
    }

    pub fn name(&self) -> &str {
        match self {
            BatchEntry::Report(r) => &r.name,
            BatchEntry::Refused { name, .. } => name,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BatchReport {
    pub cases: Vec<BatchEntry>,
    pub passed: usize,
    pub failed: usize,
    pub refused: usize,
}

impl BatchReport {
    pub fn all_passed(&self) -> bool {
        self.failed == 0 && self.refused == 0
    }
}

/// Verifies `cases` independently on a pool of `jobs` workers (all cores
/// when `None`). Entries come back in input order.
pub fn verify_batch(
    fields: &FieldConfig,
    cases: &[Case],
    opts: &VerifyOptions,
    jobs: Option<usize>,
) -> Result<BatchReport> {
    let mut ctxs: BTreeMap<u32, std::result::Result<FieldCtx, Refusal>> = BTreeMap::new();
    for c in cases {
        ctxs.entry(c.m).or_insert_with(|| fields.field(c.m).map_err(|e| Refusal::from(&e)));
    }
    let run = || -> Vec<BatchEntry> {
        cases
            .par_iter()
            .map(|case| {
                let outcome = match &ctxs[&case.m] {
                    Ok(ctx) => verify(ctx, case, opts).map_err(|e| Refusal::from(&e)),
                    Err(r) => Err(r.clone()),
                };
                match outcome {
                    Ok(r) => BatchEntry::Report(Box::new(r)),
                    Err(error) => BatchEntry::Refused { name: case.name(), case: case.clone(), error },
                }
            })
            .collect()
    };
    let entries = match jobs {
        Some(j) => rayon::ThreadPoolBuilder::new()
            .num_threads(j.max(1))
            .build()
            .map_err(|e| Error::Config(format!("cannot start {j} workers: {e}")))?
            .install(run),
        None => run(),
    };
    let passed = entries.iter().filter(|e| e.passed()).count();
    let refused = entries.iter().filter(|e| matches!(e, BatchEntry::Refused { .. })).count();
    Ok(BatchReport { failed: entries.len() - passed - refused, passed, refused, cases: entries })
}

fn opt<T: ToString>(x: Option<T>) -> String {
    x.map(|v| v.to_string()).unwrap_or_default()
}

/// One CSV row per case.
pub fn summary_csv(batch: &BatchReport) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record([
        "name",
        "theorem_id",
        "m",
        "function",
        "predicted_n",
        "predicted_k",
        "predicted_d",
        "enumerated_n",
        "enumerated_k",
        "enumerated_d",
        "predicted_dual_d",
        "enumerated_dual_d",
        "verdict",
        "failed_checks",
        "notes",
    ])
    .expect("in-memory write");
    for e in &batch.cases {
        let rec: Vec<String> = match e {
            BatchEntry::Report(r) => vec![
                r.name.clone(),
                r.theorem_id.to_string(),
                r.field.m.to_string(),
                r.function.clone(),
                r.predicted.n.to_string(),
                r.predicted.k.to_string(),
                opt(r.predicted.d),
                r.enumerated.n.to_string(),
                r.enumerated.k.to_string(),
                opt(r.enumerated.d),
                opt(r.predicted.dual.d),
                opt(r.enumerated.dual.d),
                if r.passed() { "pass" } else { "fail" }.into(),
                r.failed_checks().join(";"),
                r.notes.len().to_string(),
            ],
            BatchEntry::Refused { name, case, error } => vec![
                name.clone(),
                case.theorem.to_string(),
                case.m.to_string(),
                opt(case.function.clone()),
                String::new(),
                String::new(),
                String::new(),
                String::new(),
                String::new(),
                String::new(),
                String::new(),
                String::new(),
                "refused".into(),
                error.kind.clone(),
                String::new(),
            ],
        };
        w.write_record(&rec).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
}

/// Aligned plain-text rendering of one report.
pub fn render_report(r: &VerificationReport) -> String {
    let mut s = String::new();
    let verdict = if r.passed() { "PASS" } else { "FAIL" };
    writeln!(s, "{}  [{verdict}]", r.name).unwrap();
    writeln!(
        s,
        "  field      GF(2^{}) modulus {:#b} gamma {:#x}",
        r.field.m, r.field.modulus, r.field.gamma
    )
    .unwrap();
    writeln!(s, "  function   {}", r.function).unwrap();
    writeln!(s, "  positions  {}", r.recipe).unwrap();
    let p = &r.predicted;
    let e = &r.enumerated;
    writeln!(s, "  predicted  [{}, {}, {}]  dual [{}, {}, {}]", p.n, p.k, opt(p.d), p.dual.n, p.dual.k, opt(p.dual.d))
        .unwrap();
    writeln!(s, "  enumerated [{}, {}, {}]  dual [{}, {}, {}]", e.n, e.k, opt(e.d), e.dual.n, e.dual.k, opt(e.dual.d))
        .unwrap();
    writeln!(s, "  {:>8}  {:>24}  {:>24}", "weight", "predicted", "enumerated").unwrap();
    for row in &r.rows {
        let mark = if row.matches { "" } else { "  <- mismatch" };
        writeln!(s, "  {:>8}  {:>24}  {:>24}{mark}", row.weight, row.predicted, row.enumerated).unwrap();
    }
    for c in &r.checks {
        let status = match (c.pass, c.fatal) {
            (true, _) => "ok",
            (false, true) => "FAILED",
            (false, false) => "note",
        };
        writeln!(s, "  check {:<30} {status}", c.name).unwrap();
    }
    for n in &r.notes {
        writeln!(s, "  note: {n}").unwrap();
    }
    if let Some(ms) = r.runtime_ms {
        writeln!(s, "  runtime {ms} ms").unwrap();
    }
    s
}

/// Plain-text rendering of a batch: one line per case, then totals.
pub fn render_batch(b: &BatchReport) -> String {
    let mut s = String::new();
    let width = b.cases.iter().map(|e| e.name().len()).max().unwrap_or(0);
    for e in &b.cases {
        match e {
            BatchEntry::Report(r) => {
                let v = if r.passed() { "PASS" } else { "FAIL" };
                writeln!(
                    s,
                    "{v}  {:<width$}  [{}, {}, {}]  dual d {}",
                    r.name,
                    r.enumerated.n,
                    r.enumerated.k,
                    opt(r.enumerated.d),
                    opt(r.enumerated.dual.d)
                )
                .unwrap();
            }
            BatchEntry::Refused { name, error, .. } => {
                writeln!(s, "SKIP  {name:<width$}  {}: {}", error.kind, error.message).unwrap();
            }
        }
    }
    writeln!(s, "{} passed, {} failed, {} refused", b.passed, b.failed, b.refused).unwrap();
    s
}
