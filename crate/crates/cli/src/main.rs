//! `puncodes`: build punctured trace codes, enumerate them and check the
//! closed-form parameters.

mod args;
mod render;

use std::io::{IsTerminal, Write};
use std::path::Path;
use std::process::ExitCode;

use clap::Parser;
use serde::Serialize;

use puncodes::analysis::{build_report, spectrum_report, verify, verify_batch, Case, VerifyOptions};
use puncodes::boolfunc::{ab_monomial_exponents, Family, FunctionSpec};
use puncodes::codegen::Guards;
use puncodes::gf2m::FieldConfig;
use puncodes::manifest::Manifest;

use args::{Cli, Command, Format};

/// An error reported on stderr with a machine-readable kind.
#[derive(Debug, Serialize)]
pub struct CliError {
    pub kind: String,
    pub message: String,
}

impl CliError {
    pub fn new(kind: &str, message: impl Into<String>) -> Self {
        CliError { kind: kind.into(), message: message.into() }
    }
}

impl From<puncodes::Error> for CliError {
    fn from(e: puncodes::Error) -> Self {
        CliError::new(e.kind(), e.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::new("io", e.to_string())
    }
}

type CliResult<T> = Result<T, CliError>;

#[derive(Serialize)]
struct Envelope<'a, T: Serialize> {
    tool: &'static str,
    version: &'static str,
    command: &'a str,
    #[serde(skip_serializing_if = "Option::is_none")]
    generated_at: Option<String>,
    result: T,
}

struct Ctx {
    format: Format,
    timestamp: bool,
    fields: FieldConfig,
    opts: VerifyOptions,
}

impl Ctx {
    fn json<T: Serialize>(&self, command: &str, result: T) -> String {
        let env = Envelope {
            tool: "puncodes",
            version: env!("CARGO_PKG_VERSION"),
            command,
            generated_at: self.timestamp.then(|| chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Secs, true)),
            result,
        };
        let mut s = serde_json::to_string_pretty(&env).expect("reports serialize");
        s.push('\n');
        s
    }
}

fn write_output(out: Option<&Path>, text: &str) -> CliResult<()> {
    match out {
        Some(p) => std::fs::write(p, text)
            .map_err(|e| CliError::new("io", format!("cannot write {}: {e}", p.display()))),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            Ok(stdout.flush()?)
        }
    }
}

fn load_cases(manifest: Option<&Path>, m_max: Option<u32>) -> CliResult<Vec<Case>> {
    let mut man = match manifest {
        Some(p) => Manifest::load(p)?,
        None => Manifest::builtin(),
    };
    if let Some(mm) = m_max {
        man = man.filter_m_max(mm);
    }
    Ok(man.cases)
}

/// Runs the command; the flag is whether every verification passed.
fn run(cli: Cli, format: Format) -> CliResult<(String, bool)> {
    let fields = match &cli.field_config {
        Some(p) => FieldConfig::load(p)?,
        None => FieldConfig::default(),
    };
    if let Some(j) = cli.jobs {
        if j == 0 {
            return Err(CliError::new("config", "--jobs must be at least 1"));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(j)
            .build_global()
            .map_err(|e| CliError::new("config", format!("cannot start {j} workers: {e}")))?;
    }
    let defaults = Guards::default();
    let guards = Guards { max_k: cli.guard_k.unwrap_or(defaults.max_k), max_n: cli.guard_n.unwrap_or(defaults.max_n) };
    let opts = VerifyOptions { guards, timing: !cli.no_timestamp, ..VerifyOptions::default() };
    let ctx = Ctx { format, timestamp: !cli.no_timestamp, fields, opts };

    match cli.command {
        Command::ListFunctions { m } => {
            let ab = match m {
                Some(m) if m % 2 == 1 => Some(ab_monomial_exponents(m)?),
                _ => None,
            };
            Ok((render::functions(&ctx, Family::CATALOG, m, ab.as_deref()), true))
        }
        Command::Spectrum(f) => {
            let field = ctx.fields.field(f.m)?;
            let spec = FunctionSpec::parse(f.m, &f.family_text()?)?;
            Ok((render::spectrum(&ctx, &spectrum_report(&field, &spec)?), true))
        }
        Command::Build(b) => {
            let field = ctx.fields.field(b.function.m)?;
            let spec = FunctionSpec::parse(b.function.m, &b.function.family_text()?)?;
            let recipe = b.recipe(&field, &spec)?;
            let report = build_report(&field, &spec, &recipe, &ctx.opts.guards, ctx.opts.timing)?;
            Ok((render::build(&ctx, &report), true))
        }
        Command::Verify(v) => {
            let case = v.case()?;
            let field = ctx.fields.field(case.m)?;
            let report = verify(&field, &case, &ctx.opts)?;
            let ok = report.passed();
            Ok((render::verification(&ctx, &report), ok))
        }
        Command::VerifyAll(sel) => {
            let cases = load_cases(sel.manifest.as_deref(), sel.m_max)?;
            let batch = verify_batch(&ctx.fields, &cases, &ctx.opts, None)?;
            Ok((render::batch(&ctx, &batch), batch.all_passed()))
        }
        Command::Report { selection, dir } => {
            let cases = load_cases(selection.manifest.as_deref(), selection.m_max)?;
            let batch = verify_batch(&ctx.fields, &cases, &ctx.opts, None)?;
            std::fs::create_dir_all(&dir)
                .map_err(|e| CliError::new("io", format!("cannot create {}: {e}", dir.display())))?;
            let files = [
                ("report.json", ctx.json("report", &batch)),
                ("summary.csv", puncodes::analysis::summary_csv(&batch)),
                ("report.txt", puncodes::analysis::render_batch(&batch)),
            ];
            let mut written = Vec::new();
            for (name, text) in &files {
                let p = dir.join(name);
                write_output(Some(&p), text)?;
                written.push(p.display().to_string());
            }
            Ok((render::written(&ctx, &batch, &written), batch.all_passed()))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = cli.out.clone();
    let format = cli.format.unwrap_or(if out.is_none() && std::io::stdout().is_terminal() {
        Format::Table
    } else {
        Format::Json
    });
    match run(cli, format).and_then(|(text, ok)| write_output(out.as_deref(), &text).map(|_| ok)) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            if format == Format::Json {
                eprintln!("{}", serde_json::to_string(&e).expect("error serializes"));
            } else {
                eprintln!("error [{}]: {}", e.kind, e.message);
            }
            ExitCode::from(2)
        }
    }
}
