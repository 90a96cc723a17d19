//! One-off summaries for a single function or a single (f, D) pair, outside
//! any theorem.

use std::collections::BTreeMap;
use std::time::Instant;

use serde::Serialize;

use crate::boolfunc::{differential_uniformity, is_ab, walsh_spectrum, FunctionSpec};
use crate::codegen::{build_code, build_position_set, dual_min_distance, dual_prefix, enumerate_weights, Guards, Recipe};
use crate::error::Result;
use crate::gf2m::FieldCtx;

use super::bounds::{griesmer_ok, griesmer_tight, sphere_packing_distance_optimal, sphere_packing_ok};
use super::exact::json_int;
use super::report::Refusal;
use super::verify::{CodeParams, FieldInfo, Table};

impl FieldInfo {
    pub fn of(ctx: &FieldCtx) -> Self {
        FieldInfo { m: ctx.m(), modulus: ctx.modulus(), gamma: ctx.gamma().0 }
    }
}

/// A yes/no property, or the reason it was not decided.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Outcome<T> {
    Value(T),
    Refused { refused: Refusal },
}

impl<T> Outcome<T> {
    fn from_result(r: Result<T>) -> Self {
        match r {
            Ok(v) => Outcome::Value(v),
            Err(e) => Outcome::Refused { refused: Refusal::from(&e) },
        }
    }

    pub fn map<U>(&self, f: impl FnOnce(&T) -> U) -> Outcome<U> {
        match self {
            Outcome::Value(v) => Outcome::Value(f(v)),
            Outcome::Refused { refused } => Outcome::Refused { refused: refused.clone() },
        }
    }

    pub fn value(&self) -> Option<&T> {
        match self {
            Outcome::Value(v) => Some(v),
            Outcome::Refused { .. } => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpectrumReport {
    pub field: FieldInfo,
    pub function: String,
    /// Value distribution of `W_f(a, b)` over `a != 0` and every `b`.
    pub spectrum: BTreeMap<String, u64>,
    pub ab: Outcome<bool>,
    pub apn: Outcome<bool>,
    pub differential_uniformity: Outcome<u32>,
    pub permutation: bool,
}

/// Walsh value distribution plus the AB, APN and permutation verdicts.
pub fn spectrum_report(ctx: &FieldCtx, f: &FunctionSpec) -> Result<SpectrumReport> {
    let spectrum = walsh_spectrum(ctx, f)?.into_iter().map(|(w, c)| (w.to_string(), c)).collect();
    let du = Outcome::from_result(differential_uniformity(ctx, f));
    Ok(SpectrumReport {
        field: FieldInfo::of(ctx),
        function: f.family.to_string(),
        spectrum,
        ab: Outcome::from_result(is_ab(ctx, f)),
        apn: du.map(|&u| u == 2),
        differential_uniformity: du,
        permutation: f.is_permutation(ctx)?,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundVerdicts {
    pub sphere_packing: bool,
    pub griesmer: bool,
    pub griesmer_tight: bool,
    /// Sphere packing distance optimality of the dual, with the even-weight
    /// step when the code contains the all-one word.
    pub dual_sphere_packing_optimal: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BuildReport {
    pub field: FieldInfo,
    pub function: String,
    pub recipe: Recipe,
    pub n: u64,
    pub k: u64,
    pub d: Option<u64>,
    pub table: Table,
    pub dual: CodeParams,
    /// `A_1^perp, ..., A_5^perp`.
    pub dual_low: Vec<serde_json::Number>,
    pub self_complementary: bool,
    pub bounds: BoundVerdicts,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub runtime_ms: Option<u64>,
}

/// Builds `C(f)` on the positions of `recipe` and reports its parameters.
pub fn build_report(
    ctx: &FieldCtx,
    f: &FunctionSpec,
    recipe: &Recipe,
    guards: &Guards,
    timing: bool,
) -> Result<BuildReport> {
    let start = Instant::now();
    let positions = build_position_set(ctx, recipe)?;
    let code = build_code(ctx, f, &positions)?;
    guards.check(code.n(), code.k())?;
    let wd = enumerate_weights(&code, guards)?;
    let (n, k) = (code.n(), code.k());
    let d = wd.min_distance().ok();
    let dual_d = dual_min_distance(&wd, k)?;
    let dual_low = dual_prefix(&wd, k, 5.min(n))?;
    let self_comp = code.is_self_complementary();
    let bounds = BoundVerdicts {
        sphere_packing: d.is_none_or(|d| sphere_packing_ok(n, k, d)),
        griesmer: d.is_none_or(|d| griesmer_ok(n, k, d)),
        griesmer_tight: d.is_some_and(|d| griesmer_tight(n, k, d)),
        dual_sphere_packing_optimal: dual_d.map(|dd| sphere_packing_distance_optimal(n, n - k, dd, self_comp)),
    };
    Ok(BuildReport {
        field: FieldInfo::of(ctx),
        function: f.family.to_string(),
        recipe: recipe.clone(),
        n: n as u64,
        k: k as u64,
        d: d.map(|d| d as u64),
        table: Table::from_distribution(&wd),
        dual: CodeParams { n: n as u64, k: (n - k) as u64, d: dual_d.map(|d| d as u64) },
        dual_low: dual_low.iter().map(json_int).collect(),
        self_complementary: self_comp,
        bounds,
        runtime_ms: timing.then(|| start.elapsed().as_millis() as u64),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf2m::FieldElement;

    #[test]
    fn spectrum_verdicts() {
        let ctx = FieldCtx::new(7).unwrap();
        let r = spectrum_report(&ctx, &FunctionSpec::parse(7, "gold(1)").unwrap()).unwrap();
        assert_eq!((r.ab.value(), r.apn.value()), (Some(&true), Some(&true)));
        assert_eq!(r.spectrum.keys().map(String::as_str).collect::<Vec<_>>(), ["-16", "0", "16"]);

        let ctx = FieldCtx::new(6).unwrap();
        let r = spectrum_report(&ctx, &FunctionSpec::parse(6, "gold(1)").unwrap()).unwrap();
        assert!(matches!(&r.ab, Outcome::Refused { refused } if refused.kind == "hypothesis"));
        assert_eq!(r.apn.value(), Some(&true));

        let ctx = FieldCtx::new(5).unwrap();
        let r = spectrum_report(&ctx, &FunctionSpec::parse(5, "monomial(1)").unwrap()).unwrap();
        assert_eq!(r.ab.value(), Some(&false));
        assert!(r.permutation);
    }

    #[test]
    fn build_examples() {
        let ctx = FieldCtx::new(7).unwrap();
        let f = FunctionSpec::parse(7, "gold(1)").unwrap();
        let r = build_report(&ctx, &f, &Recipe::TraceOfF { function: f, lambda: FieldElement::ONE, nu: 1 }, &Guards::default(), false)
            .unwrap();
        assert_eq!((r.n, r.k, r.d), (64, 14, Some(24)));

        let ctx = FieldCtx::new(6).unwrap();
        let f = FunctionSpec::parse(6, "monomial(3)").unwrap();
        let r = build_report(&ctx, &f, &Recipe::Cyclotomic { t: 3 }, &Guards::default(), false).unwrap();
        assert_eq!((r.n, r.k, r.d), (21, 9, Some(8)));
        assert_eq!(r.dual.d, Some(5));

        let ctx = FieldCtx::new(9).unwrap();
        let f = FunctionSpec::parse(9, "pair-sum(9,65)").unwrap();
        let r = build_report(&ctx, &f, &Recipe::TraceSupport, &Guards::default(), false).unwrap();
        assert_eq!((r.n, r.k, r.d), (256, 15, Some(96)));
        assert_eq!(r.bounds.dual_sphere_packing_optimal, Some(true));
    }
}
