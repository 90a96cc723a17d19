//! Output formats for each command.

use std::fmt::Write as _;

use serde::Serialize;

use puncodes::analysis::{
    render_batch, render_report, summary_csv, BatchReport, BuildReport, Outcome, SpectrumReport, VerificationReport,
};

use crate::args::Format;
use crate::Ctx;

fn csv_rows<I, R>(header: &[&str], rows: I) -> String
where
    I: IntoIterator<Item = R>,
    R: IntoIterator,
    R::Item: AsRef<[u8]>,
{
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for r in rows {
        w.write_record(r).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
}

fn opt<T: ToString>(x: Option<T>) -> String {
    x.map(|v| v.to_string()).unwrap_or_else(|| "-".into())
}

fn outcome<T: ToString>(o: &Outcome<T>) -> String {
    match o {
        Outcome::Value(v) => v.to_string(),
        Outcome::Refused { refused } => format!("refused ({})", refused.message),
    }
}

#[derive(Serialize)]
struct FamilyEntry {
    name: &'static str,
    form: &'static str,
}

#[derive(Serialize)]
struct FunctionList {
    families: Vec<FamilyEntry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    m: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    ab_exponents: Option<Vec<u64>>,
}

pub fn functions(ctx: &Ctx, catalog: &[(&'static str, &'static str)], m: Option<u32>, ab: Option<&[u64]>) -> String {
    match ctx.format {
        Format::Json => ctx.json(
            "list-functions",
            FunctionList {
                families: catalog.iter().map(|&(name, form)| FamilyEntry { name, form }).collect(),
                m,
                ab_exponents: ab.map(<[u64]>::to_vec),
            },
        ),
        Format::Csv => csv_rows(&["name", "form"], catalog.iter().map(|&(n, f)| [n, f])),
        Format::Table => {
            let width = catalog.iter().map(|(n, _)| n.len()).max().unwrap_or(0);
            let mut s = String::new();
            for (n, f) in catalog {
                writeln!(s, "{n:<width$}  {f}").unwrap();
            }
            if let (Some(m), Some(ab)) = (m, ab) {
                let list: Vec<String> = ab.iter().map(u64::to_string).collect();
                writeln!(s, "\nAB exponents at m = {m}: {}", list.join(", ")).unwrap();
            }
            s
        }
    }
}

pub fn spectrum(ctx: &Ctx, r: &SpectrumReport) -> String {
    match ctx.format {
        Format::Json => ctx.json("spectrum", r),
        Format::Csv => csv_rows(&["value", "count"], r.spectrum.iter().map(|(w, c)| [w.clone(), c.to_string()])),
        Format::Table => {
            let mut s = String::new();
            writeln!(s, "GF(2^{}) modulus {:#b}  function {}", r.field.m, r.field.modulus, r.function).unwrap();
            writeln!(s, "  {:>10}  {:>14}", "W_f(a,b)", "count").unwrap();
            for (w, c) in &r.spectrum {
                writeln!(s, "  {w:>10}  {c:>14}").unwrap();
            }
            writeln!(s, "AB: {}", outcome(&r.ab)).unwrap();
            writeln!(s, "APN: {}", outcome(&r.apn)).unwrap();
            writeln!(s, "differential uniformity: {}", outcome(&r.differential_uniformity)).unwrap();
            writeln!(s, "permutation: {}", r.permutation).unwrap();
            s
        }
    }
}

fn weight_rows(r: &BuildReport) -> impl Iterator<Item = [String; 2]> + '_ {
    std::iter::once(["0".to_string(), "1".to_string()])
        .chain(r.table.0.iter().map(|(w, c)| [w.to_string(), c.to_string()]))
}

pub fn build(ctx: &Ctx, r: &BuildReport) -> String {
    match ctx.format {
        Format::Json => ctx.json("build", r),
        Format::Csv => csv_rows(&["weight", "count"], weight_rows(r)),
        Format::Table => {
            let mut s = String::new();
            writeln!(s, "GF(2^{}) modulus {:#b} gamma {:#x}", r.field.m, r.field.modulus, r.field.gamma).unwrap();
            writeln!(s, "function   {}", r.function).unwrap();
            writeln!(s, "positions  {}", r.recipe).unwrap();
            writeln!(s, "code       [{}, {}, {}]", r.n, r.k, opt(r.d)).unwrap();
            writeln!(s, "dual       [{}, {}, {}]", r.dual.n, r.dual.k, opt(r.dual.d)).unwrap();
            writeln!(s, "all-one    {}", r.self_complementary).unwrap();
            let b = &r.bounds;
            writeln!(s, "bounds     sphere packing {}, Griesmer {} (tight {})", b.sphere_packing, b.griesmer, b.griesmer_tight)
                .unwrap();
            writeln!(s, "dual sphere packing optimal {}", opt(b.dual_sphere_packing_optimal)).unwrap();
            writeln!(s, "  {:>8}  {:>24}", "weight", "count").unwrap();
            for [w, c] in weight_rows(r) {
                writeln!(s, "  {w:>8}  {c:>24}").unwrap();
            }
            s
        }
    }
}

pub fn verification(ctx: &Ctx, r: &VerificationReport) -> String {
    match ctx.format {
        Format::Json => ctx.json("verify", r),
        Format::Csv => csv_rows(
            &["weight", "predicted", "enumerated", "matches"],
            r.rows.iter().map(|row| {
                [row.weight.to_string(), row.predicted.to_string(), row.enumerated.to_string(), row.matches.to_string()]
            }),
        ),
        Format::Table => render_report(r),
    }
}

pub fn batch(ctx: &Ctx, b: &BatchReport) -> String {
    match ctx.format {
        Format::Json => ctx.json("verify-all", b),
        Format::Csv => summary_csv(b),
        Format::Table => render_batch(b),
    }
}

#[derive(Serialize)]
struct Written<'a> {
    files: &'a [String],
    passed: usize,
    failed: usize,
    refused: usize,
}

pub fn written(ctx: &Ctx, b: &BatchReport, files: &[String]) -> String {
    match ctx.format {
        Format::Json => {
            ctx.json("report", Written { files, passed: b.passed, failed: b.failed, refused: b.refused })
        }
        Format::Csv => csv_rows(&["file"], files.iter().map(|f| [f.as_str()])),
        Format::Table => {
            let mut s = render_batch(b);
            for f in files {
                writeln!(s, "wrote {f}").unwrap();
            }
            s
        }
    }
}
