//! Acceptance runner: one PASS/FAIL line per criterion, nonzero exit on
//! any failure.

use std::collections::BTreeMap;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigUint;

use puncodes::analysis::{verify, Case, TheoremId, VerificationReport, VerifyOptions};
use puncodes::boolfunc::ab_monomial_exponents;
use puncodes::gf2m::FieldCtx;

mod common;

fn run(case: Case) -> VerificationReport {
    let ctx = FieldCtx::new(case.m).unwrap();
    let name = case.name();
    let r = verify(&ctx, &case, &VerifyOptions::default()).unwrap_or_else(|e| panic!("{name}: {e}"));
    assert!(r.passed(), "{name}: failed checks {:?}", r.failed_checks());
    assert!(r.rows.iter().all(|row| row.matches), "{name}: row mismatch");
    r
}

fn params(r: &VerificationReport, code: (u64, u64, u64), dual: (u64, u64, u64)) {
    let e = &r.enumerated;
    assert_eq!((e.n, e.k, e.d), (code.0, code.1, Some(code.2)), "{}", r.name);
    assert_eq!((e.dual.n, e.dual.k, e.dual.d), (dual.0, dual.1, Some(dual.2)), "{}", r.name);
}

fn count(r: &VerificationReport, w: u64) -> u64 {
    r.enumerated.table.0.get(&w).map(|c| u64::try_from(c).unwrap()).unwrap_or(0)
}

fn table(r: &VerificationReport) -> BTreeMap<u64, u64> {
    r.enumerated.table.0.iter().filter(|(w, _)| **w > 0).map(|(w, c)| (*w, u64::try_from(c).unwrap())).collect()
}

fn check_pass(r: &VerificationReport, name: &str) -> bool {
    r.check(name).unwrap_or_else(|| panic!("{}: no {name} check", r.name)).pass
}

fn sp_verdict(r: &VerificationReport) -> bool {
    let c = r.check("dual_sphere_packing_optimal").unwrap_or_else(|| panic!("{}: no optimality claim", r.name));
    c.actual["verdict"] == serde_json::Value::Bool(true)
}

fn within(r: &VerificationReport, limit: Duration) {
    let ms = r.runtime_ms.unwrap();
    assert!(Duration::from_millis(ms) < limit, "{} took {ms} ms", r.name);
}

fn ab_levelset() {
    // x^3 is a permutation for odd m, so W(lambda, 0) vanishes; x^3 + x is
    // AB with both nonzero signs available.
    let r0 = run(Case::new(TheoremId::AbLevelsetNu0, 7).with_function("binomial(3,1)").with_walsh_sign(1));
    params(&r0, (71, 13, 28), (71, 58, 5));
    within(&r0, Duration::from_secs(5));
    let r1 = run(Case::new(TheoremId::AbLevelsetNu1, 7).with_function("binomial(3,1)").with_walsh_sign(1));
    params(&r1, (56, 14, 20), (56, 42, 6));
    within(&r1, Duration::from_secs(5));
    assert_eq!(r0.params.walsh_at_lambda, Some(16));
}

fn ab_perm() {
    let r0 = run(Case::new(TheoremId::AbPermNu0, 7));
    params(&r0, (63, 13, 24), (63, 50, 5));
    assert_eq!(count(&r0, 32), 3 * (1 << 10) + (1 << 4) - 1);
    let r1 = run(Case::new(TheoremId::AbPermNu1, 7));
    params(&r1, (64, 14, 24), (64, 50, 6));
    for m in [5u32, 9] {
        for d in ab_monomial_exponents(m).unwrap() {
            let f = format!("monomial({d})");
            for th in [TheoremId::AbPermNu0, TheoremId::AbPermNu1] {
                run(Case::new(th, m).with_function(&f));
            }
        }
    }
}

fn gold_support_v2le() {
    let r = run(Case::new(TheoremId::GoldSupportV2le, 5).with_k(1));
    params(&r, (16, 10, 4), (16, 6, 6));
    assert_eq!(count(&r, 8), 390);
    assert!(check_pass(&r, "brute_force_dual"));
}

fn gold_support_v2gt() {
    let r = run(Case::new(TheoremId::GoldSupportV2gt, 6).with_k(1));
    assert_eq!(r.enumerated.dual.d, Some(6));
    assert!(sp_verdict(&r));
}

fn gold_support_half() {
    let r = run(Case::new(TheoremId::GoldSupportHalf, 8).with_k(4));
    params(&r, (128, 12, 56), (128, 116, 4));
}

fn pair_sum() {
    for f in ["pair-sum(9,65)", "pair-sum(9,72)", "pair-sum(65,72)"] {
        let r = run(Case::new(TheoremId::PairSumSupport, 9).with_function(f));
        params(&r, (256, 15, 96), (256, 241, 4));
        assert!(sp_verdict(&r), "{f}");
    }
}

fn reltrace() {
    let r = run(Case::new(TheoremId::ReltraceSupport, 5).with_k(1));
    params(&r, (16, 6, 6), (16, 10, 4));
    run(Case::new(TheoremId::ReltraceSupport, 6).with_k(1));
    run(Case::new(TheoremId::ReltraceSupport, 8).with_k(2));
}

fn cyclo_cubic() {
    let r = run(Case::new(TheoremId::CycloCubicDiv3, 6).with_t(3));
    params(&r, (21, 7, 8), (21, 14, 4));
    let r = run(Case::new(TheoremId::CycloCubicNdiv3, 6).with_t(1));
    assert_eq!(r.enumerated.n, 63);
    run(Case::new(TheoremId::CycloCubicDiv3, 10).with_t(3));
    run(Case::new(TheoremId::CycloCubicNdiv3, 10).with_t(11));
}

fn cyclo_gold_class() {
    let r = run(Case::new(TheoremId::CycloGoldClass, 6).with_k(1));
    params(&r, (21, 9, 8), (21, 12, 5));
    assert_eq!(table(&r), BTreeMap::from([(8, 210), (12, 280), (16, 21)]));
    let r = run(Case::new(TheoremId::CycloGoldClass, 10).with_k(1));
    params(&r, (341, 15, 160), (341, 326, 4));
    assert!(sp_verdict(&r));
    assert!(r.enumerated.table.0.values().any(|c| *c > BigUint::from(0u8)));
    within(&r, Duration::from_secs(60));
}

fn cyclo_cubic_rm() {
    let r = run(Case::new(TheoremId::CycloCubicRm, 6).with_t(9));
    assert_eq!((r.enumerated.n, r.enumerated.k, r.enumerated.d), (7, 4, Some(3)));
    assert_eq!(table(&r), BTreeMap::from([(3, 7), (4, 7), (7, 1)]));
    assert!(check_pass(&r, "griesmer_tight"));
    assert!(check_pass(&r, "dual_distance"));
    assert_eq!(r.enumerated.dual.d, Some(4));
}

fn properties() {
    common::parseval();
    common::macwilliams_on_manifest();
    common::puncture_and_realization_invariance();
    common::quadratic_square_law();
    common::gold_values_when_v2m_at_most_v2k();
    common::gold_zero_unless_linearized_equation_solvable();
    common::joint_quadratic_sum_m6();
    common::cube_root_trace_pattern();
    common::gauss_sum_values();
    common::gold_support_dual_low_weights();
    common::gold_class_dual_low_weight_laws();
}

fn main() -> ExitCode {
    let criteria: [(&str, fn()); 11] = [
        ("AB level-set codes at m=7", ab_levelset),
        ("AB permutation codes at m=5,7,9", ab_perm),
        ("Gold trace-support, v2(m) <= v2(k)", gold_support_v2le),
        ("Gold trace-support, v2(m) > v2(k)", gold_support_v2gt),
        ("Gold trace-support, k = m/2", gold_support_half),
        ("pair-sum trace-support at m=9", pair_sum),
        ("relative-trace support", reltrace),
        ("cubic cyclotomic codes", cyclo_cubic),
        ("Gold cyclotomic class codes", cyclo_gold_class),
        ("cubic cyclotomic [7,4,3] case", cyclo_cubic_rm),
        ("exhaustive property suites", properties),
    ];
    std::panic::set_hook(Box::new(|info| eprintln!("  {info}")));
    let mut failed = 0;
    for (i, (desc, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let ok = catch_unwind(AssertUnwindSafe(f)).is_ok();
        failed += usize::from(!ok);
        let verdict = if ok { "PASS" } else { "FAIL" };
        println!("criterion {:>2} {desc:<40} {verdict} ({} ms)", i + 1, start.elapsed().as_millis());
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
