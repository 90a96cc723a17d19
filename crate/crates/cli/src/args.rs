use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use puncodes::analysis::{Case, TheoremId};
use puncodes::boolfunc::{Family, FunctionSpec};
use puncodes::codegen::Recipe;
use puncodes::gf2m::{FieldCtx, FieldElement};

use crate::{CliError, CliResult};

#[derive(Debug, Parser)]
#[command(name = "puncodes", version, about = "Punctured binary codes from functions on GF(2^m)")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Output format; `table` on a terminal, `json` otherwise.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Write the output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// TOML file with a `[moduli]` table mapping degree to modulus.
    #[arg(long, global = true)]
    pub field_config: Option<PathBuf>,
    /// Worker threads.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    /// Largest dimension enumerated exhaustively.
    #[arg(long, global = true)]
    pub guard_k: Option<usize>,
    /// Largest length enumerated exhaustively.
    #[arg(long, global = true)]
    pub guard_n: Option<usize>,
    /// Leave timestamps and run times out of the output.
    #[arg(long, global = true)]
    pub no_timestamp: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Table,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List the function families, and the AB exponents for an odd `--m`.
    ListFunctions {
        #[arg(long)]
        m: Option<u32>,
    },
    /// Walsh value distribution with the AB, APN and permutation verdicts.
    Spectrum(FunctionArgs),
    /// Build one code and report its parameters and weight distribution.
    Build(BuildArgs),
    /// Check one theorem instance against enumeration.
    Verify(VerifyArgs),
    /// Check every case of a manifest.
    VerifyAll(Selection),
    /// Run a manifest and write report.json, summary.csv and report.txt.
    Report {
        #[command(flatten)]
        selection: Selection,
        /// Output directory.
        #[arg(long)]
        dir: PathBuf,
    },
}

fn parse_param(s: &str) -> Result<(String, u64), String> {
    let (k, v) = s.split_once('=').ok_or_else(|| format!("expected key=value, got {s:?}"))?;
    let v = v.trim();
    let parsed = if let Some(h) = v.strip_prefix("0x") { u64::from_str_radix(h, 16) } else { v.parse() };
    Ok((k.trim().to_string(), parsed.map_err(|_| format!("{v:?} is not a nonnegative integer"))?))
}

#[derive(Debug, Args)]
pub struct FunctionArgs {
    /// Extension degree.
    #[arg(long)]
    pub m: u32,
    /// Family name, e.g. `gold`, or the full form `gold(1)`.
    #[arg(long)]
    pub family: String,
    /// Family parameter, e.g. `h=1`; repeatable.
    #[arg(long = "param", value_parser = parse_param)]
    pub params: Vec<(String, u64)>,
}

impl FunctionArgs {
    /// Canonical text of the family, filling the catalog signature from
    /// `--param`.
    pub fn family_text(&self) -> CliResult<String> {
        family_text(&self.family, &self.params)
    }
}

/// Parameter names of a catalog family, e.g. `["t1", "t2"]` for `pair-sum`.
fn signature_names(family: &str) -> Vec<&'static str> {
    let name = family.trim().to_ascii_lowercase();
    Family::CATALOG
        .iter()
        .find(|(sig, _)| sig.split('(').next() == Some(name.as_str()))
        .and_then(|(sig, _)| sig.split_once('('))
        .map(|(_, rest)| rest.trim_end_matches(')').split(',').collect())
        .unwrap_or_default()
}

fn family_text(family: &str, params: &[(String, u64)]) -> CliResult<String> {
    if family.contains('(') {
        if !params.is_empty() {
            return Err(CliError::new("parse", "give family parameters either inline or with --param, not both"));
        }
        return Ok(family.to_string());
    }
    let name = family.trim().to_ascii_lowercase();
    let (sig, _) = Family::CATALOG
        .iter()
        .find(|(sig, _)| sig.split('(').next() == Some(name.as_str()))
        .ok_or_else(|| CliError::new("parse", format!("unknown function family {family:?}")))?;
    let names = signature_names(&name);
    for (k, _) in params {
        if !names.contains(&k.as_str()) {
            return Err(CliError::new("parse", format!("{name} has no parameter {k:?}; signature {sig}")));
        }
    }
    let values = names
        .iter()
        .map(|n| {
            params
                .iter()
                .rev()
                .find(|(k, _)| k == n)
                .map(|(_, v)| v.to_string())
                .ok_or_else(|| CliError::new("parse", format!("{name} needs --param {n}=...; signature {sig}")))
        })
        .collect::<CliResult<Vec<_>>>()?;
    Ok(if values.is_empty() { name } else { format!("{name}({})", values.join(",")) })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum RecipeKind {
    /// `{x != 0 : Tr(x) = 1}`.
    TraceSupport,
    /// `{x != 0 : Tr(lambda f(x)) = nu}`.
    TraceOfF,
    /// The subgroup generated by `gamma^t`.
    Cyclotomic,
    /// Every nonzero element.
    Whole,
}

#[derive(Debug, Args)]
pub struct BuildArgs {
    #[command(flatten)]
    pub function: FunctionArgs,
    #[arg(long, value_enum, default_value = "trace-support")]
    pub recipe: RecipeKind,
    /// For `trace-of-f`: an element encoding, or `g^i` for a power of the
    /// primitive element.
    #[arg(long)]
    pub lambda: Option<String>,
    /// For `trace-of-f`: 0 or 1.
    #[arg(long)]
    pub nu: Option<u8>,
    /// For `cyclotomic`: the subgroup index.
    #[arg(long)]
    pub t: Option<u64>,
}

fn parse_element(ctx: &FieldCtx, s: &str) -> CliResult<FieldElement> {
    let m = ctx.m();
    let bad = || CliError::new("parse", format!("{s:?} is not a field element of GF(2^{m})"));
    let v: u64 = if let Some(h) = s.strip_prefix("0x") {
        u64::from_str_radix(h, 16).map_err(|_| bad())?
    } else if let Some(b) = s.strip_prefix("0b") {
        u64::from_str_radix(b, 2).map_err(|_| bad())?
    } else if let Some(i) = s.strip_prefix("g^") {
        let i: u64 = i.parse().map_err(|_| bad())?;
        return Ok(ctx.gamma_pow(i));
    } else {
        s.parse().map_err(|_| bad())?
    };
    if m >= 32 || v >> m != 0 {
        return Err(bad());
    }
    Ok(FieldElement(v as u32))
}

impl BuildArgs {
    pub fn recipe(&self, ctx: &FieldCtx, f: &FunctionSpec) -> CliResult<Recipe> {
        let unused = |what: &str| CliError::new("config", format!("{what} does not apply to recipe {:?}", self.recipe));
        match self.recipe {
            RecipeKind::TraceOfF => {
                if self.t.is_some() {
                    return Err(unused("--t"));
                }
                let lambda = parse_element(ctx, self.lambda.as_deref().unwrap_or("1"))?;
                let nu = self.nu.unwrap_or(0);
                Ok(Recipe::TraceOfF { function: *f, lambda, nu })
            }
            RecipeKind::Cyclotomic => {
                if self.lambda.is_some() || self.nu.is_some() {
                    return Err(unused("--lambda/--nu"));
                }
                let t = self.t.ok_or_else(|| CliError::new("config", "recipe cyclotomic needs --t"))?;
                Ok(Recipe::Cyclotomic { t })
            }
            RecipeKind::TraceSupport | RecipeKind::Whole => {
                if self.lambda.is_some() || self.nu.is_some() {
                    return Err(unused("--lambda/--nu"));
                }
                if self.t.is_some() {
                    return Err(unused("--t"));
                }
                Ok(if self.recipe == RecipeKind::Whole { Recipe::Whole } else { Recipe::TraceSupport })
            }
        }
    }
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Theorem identifier, e.g. `gold-support-v2le`.
    #[arg(long)]
    pub theorem: TheoremId,
    #[arg(long)]
    pub m: u32,
    /// Function, when the theorem admits a choice; same syntax as `build`.
    #[arg(long)]
    pub family: Option<String>,
    /// `k=..` or `t=..` for the theorem, or parameters of `--family`.
    #[arg(long = "param", value_parser = parse_param)]
    pub params: Vec<(String, u64)>,
    /// Cyclotomic index, same as `--param t=..`.
    #[arg(long)]
    pub t: Option<u64>,
    /// Fix lambda for the AB level-set theorems.
    #[arg(long)]
    pub lambda: Option<u32>,
    /// Pick the smallest lambda with this sign of `W_f(lambda, 0)`.
    #[arg(long, allow_hyphen_values = true)]
    pub walsh_sign: Option<i8>,
    /// Run even when a side condition of the theorem fails.
    #[arg(long)]
    pub override_hypotheses: bool,
    /// Label used as the case name.
    #[arg(long)]
    pub label: Option<String>,
}

impl VerifyArgs {
    pub fn case(&self) -> CliResult<Case> {
        let mut case = Case::new(self.theorem, self.m);
        let sig = self.family.as_deref().map(signature_names).unwrap_or_default();
        let mut family_params = Vec::new();
        for (k, v) in &self.params {
            match k.as_str() {
                "k" => case.k = Some(u32::try_from(*v).map_err(|_| CliError::new("parse", "k too large"))?),
                "t" => case.t = Some(*v),
                _ => {}
            }
            if !matches!(k.as_str(), "k" | "t") || sig.contains(&k.as_str()) {
                family_params.push((k.clone(), *v));
            }
        }
        if let Some(t) = self.t {
            case.t = Some(t);
        }
        if let Some(f) = &self.family {
            case.function = Some(family_text(f, &family_params)?);
        } else if let Some((k, _)) = family_params.first() {
            return Err(CliError::new("parse", format!("unknown parameter {k:?}")));
        }
        case.lambda = self.lambda;
        case.walsh_sign = self.walsh_sign;
        case.override_hypotheses = self.override_hypotheses;
        case.label = self.label.clone();
        Ok(case)
    }
}

#[derive(Debug, Args)]
pub struct Selection {
    /// Versioned TOML manifest; the built-in matrix when absent.
    #[arg(long)]
    pub manifest: Option<PathBuf>,
    /// Keep only the cases with `m <= m_max`.
    #[arg(long)]
    pub m_max: Option<u32>,
}
