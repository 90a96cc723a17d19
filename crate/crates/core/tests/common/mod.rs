//! Exhaustive oracle checks shared by the property tests and the
//! acceptance runner. Each panics on the first disagreement.

#![allow(dead_code)]

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use puncodes::analysis::{
    gold_support_a4, pless_check, resolve, verify, walsh_at_zero, Case, TheoremId, VerifyOptions,
};
use puncodes::boolfunc::{ab_monomial_exponents, t_sum, Family, FunctionSpec, WalshRows};
use puncodes::codegen::{
    build_code, build_position_set, dual_min_distance, dual_prefix, enumerate_weights, evaluate_codeword,
    macwilliams_dual, popcount, puncture_full_code, BinaryLinearCode, Guards, Recipe, WeightDistribution,
};
use puncodes::gf2m::{is_irreducible, smallest_irreducible, FieldCtx, FieldElement};
use puncodes::manifest::Manifest;

pub fn spec(m: u32, s: &str) -> FunctionSpec {
    FunctionSpec::parse(m, s).unwrap()
}

pub fn code(ctx: &FieldCtx, f: &FunctionSpec, r: Recipe) -> (BinaryLinearCode, WeightDistribution) {
    let d = build_position_set(ctx, &r).unwrap();
    let c = build_code(ctx, f, &d).unwrap();
    let wd = enumerate_weights(&c, &Guards::default()).unwrap();
    (c, wd)
}

/// The second-smallest irreducible polynomial of degree `m`.
pub fn alternate_modulus(m: u32) -> u64 {
    let first = smallest_irreducible(m);
    (first + 1..1u64 << (m + 1)).find(|&p| is_irreducible(p)).unwrap()
}

pub fn parseval() {
    for m in 3..=8u32 {
        let ctx = FieldCtx::new(m).unwrap();
        let mut fams = vec![Family::Gold(1), Family::Monomial(7), Family::Monomial(ctx.order() - 1), Family::Binomial(3, 5)];
        if m % 2 == 1 {
            fams.push(Family::Welch);
        }
        if m > 2 && m % 2 == 0 {
            fams.push(Family::RelTraceQuadratic(1));
        }
        for fam in fams {
            let Ok(f) = FunctionSpec::new(m, fam) else { continue };
            let rows = WalshRows::new(&ctx, &f).unwrap();
            for a in ctx.elements() {
                let s: i64 = rows.row(a).iter().map(|&w| (w as i64) * (w as i64)).sum();
                assert_eq!(s, 1i64 << (2 * m), "m={m} f={fam} a={}", a.0);
            }
        }
    }
}

pub fn gauss_sum_values() {
    // m = 2sh and ell | 2^h + 1
    for m in [4u32, 6, 8, 10] {
        let ctx = FieldCtx::new(m).unwrap();
        for h in (1..=m / 2).filter(|h| m % (2 * h) == 0) {
            let s = m / (2 * h);
            let q = (1u64 << h) + 1;
            for ell in (1..=q).filter(|l| q.is_multiple_of(*l)) {
                let root = 1i64 << (m / 2);
                let sign = if s % 2 == 0 { 1 } else { -1 };
                for i in 0..ctx.order() {
                    let g = ctx.gamma_pow(i);
                    let sum: i64 = ctx.elements().map(|x| 1 - 2 * ctx.trace(ctx.mul(g, ctx.pow(x, ell))) as i64).sum();
                    let expect = if i % ell != 0 { sign * root } else { -sign * (ell as i64 - 1) * root };
                    assert_eq!(sum, expect, "m={m} h={h} ell={ell} i={i}");
                }
            }
        }
    }
}

pub fn joint_quadratic_sum_m6() {
    // S(a, b) = sum_x (-1)^(Tr(a x^3) + Tr_1^3(b x^9)) over GF(64) x GF(8);
    // x^9 lies in GF(8), so the second trace is taken there
    let ctx = FieldCtx::new(6).unwrap();
    let sub_trace = |y: FieldElement| -> u32 {
        let t = y + ctx.square(y) + ctx.frobenius(y, 2);
        assert!(t.0 <= 1);
        t.0
    };
    let mut hist: BTreeMap<i64, u64> = BTreeMap::new();
    for a in ctx.elements() {
        for b in ctx.elements().filter(|&b| ctx.in_subfield(3, b)) {
            let s: i64 = ctx
                .elements()
                .map(|x| {
                    let e = ctx.trace(ctx.mul(a, ctx.pow(x, 3))) ^ sub_trace(ctx.mul(b, ctx.pow(x, 9)));
                    1 - 2 * e as i64
                })
                .sum();
            *hist.entry(s).or_default() += 1;
        }
    }
    assert_eq!(hist, BTreeMap::from([(-32, 21), (-8, 280), (16, 210), (64, 1)]));
}

pub fn cube_root_trace_pattern() {
    // zeros among (Tr(a), Tr(a w), Tr(a w^2)) for a primitive cube root w
    for m in [6u32, 10] {
        let ctx = FieldCtx::new(m).unwrap();
        for t in [1u64, 2, 5] {
            let w = ctx.gamma_pow(t * ctx.order() / 3);
            let w2 = ctx.mul(w, w);
            let mut hist = [0u64; 4];
            for a in ctx.elements() {
                let n = [a, ctx.mul(a, w), ctx.mul(a, w2)].iter().filter(|&&y| ctx.trace(y) == 0).count();
                hist[n] += 1;
            }
            let q = 1u64 << (m - 2);
            assert_eq!(hist, [0, 3 * q, 0, q], "m={m} t={t}");
        }
    }
}

pub fn gold_support_dual_low_weights() {
    for m in 5..=8u32 {
        let ctx = FieldCtx::new(m).unwrap();
        for k in 1..m {
            let f = spec(m, &format!("gold({k})"));
            let (c, wd) = code(&ctx, &f, Recipe::TraceSupport);
            let dual = macwilliams_dual(&wd, c.k()).unwrap();
            let a4 = gold_support_a4(m, m.gcd(&k));
            assert!(a4.is_integer());
            let expect: Vec<BigUint> =
                vec![0u32.into(), 0u32.into(), 0u32.into(), a4.to_integer().to_biguint().unwrap(), 0u32.into()];
            assert_eq!(&dual.counts()[1..=5], &expect[..], "m={m} k={k}");
        }
    }
}

pub fn puncture_and_realization_invariance() {
    let opts = VerifyOptions { timing: false, ..VerifyOptions::default() };
    for case in Manifest::builtin().filter_m_max(8).cases {
        let m = case.m;
        let a = FieldCtx::new(m).unwrap();
        let b = FieldCtx::with_modulus(m, Some(alternate_modulus(m))).unwrap();
        assert_ne!(a.modulus(), b.modulus());
        let ra = verify(&a, &case, &opts).unwrap();
        let rb = verify(&b, &case, &opts).unwrap();
        assert!(ra.passed() && rb.passed(), "{}", case.name());
        assert_eq!(ra.enumerated, rb.enumerated, "{}", case.name());

        let res = puncodes::analysis::resolve(&a, &case).unwrap();
        let d = build_position_set(&a, &res.recipe).unwrap();
        assert_eq!(build_code(&a, &res.function, &d).unwrap(), puncture_full_code(&a, &res.function, &d).unwrap());
    }
}

/// Round trip through the MacWilliams transform, and agreement with the
/// directly enumerated dual, for the built-in cases with `m <= 8`.
pub fn macwilliams_on_manifest() {
    for case in Manifest::builtin().filter_m_max(8).cases {
        let ctx = FieldCtx::new(case.m).unwrap();
        let res = resolve(&ctx, &case).unwrap();
        let d = build_position_set(&ctx, &res.recipe).unwrap();
        let c = build_code(&ctx, &res.function, &d).unwrap();
        let wd = enumerate_weights(&c, &Guards::default()).unwrap();
        let dual = macwilliams_dual(&wd, c.k()).unwrap();
        assert_eq!(macwilliams_dual(&dual, c.n() - c.k()).unwrap(), wd, "{}", case.name());
        if c.n() - c.k() <= 22 {
            let direct = enumerate_weights(&c.dual(), &Guards { max_k: 22, max_n: 4096 }).unwrap();
            assert_eq!(direct, dual, "{}", case.name());
        }
    }
}

pub fn quadratic_square_law() {
    // for quadratic f and a != 0, every nonzero W_f(a, b)^2 equals 2^(m + r)
    for (m, fam) in [(6, "gold(1)"), (6, "gold(2)"), (8, "reltrace(2)"), (9, "pair-sum(9,65)"), (7, "gold(3)")] {
        let ctx = FieldCtx::new(m).unwrap();
        let f = spec(m, fam);
        assert!(f.family.is_quadratic(m));
        let rows = WalshRows::new(&ctx, &f).unwrap();
        for a in ctx.nonzero() {
            let sq: std::collections::BTreeSet<i64> =
                rows.row(a).iter().map(|&w| (w as i64) * (w as i64)).filter(|&s| s != 0).collect();
            assert_eq!(sq.len(), 1, "m={m} f={fam} a={}", a.0);
            let s = *sq.iter().next().unwrap();
            assert!(s.count_ones() == 1 && s.trailing_zeros() >= m, "m={m} f={fam} W^2={s}");
        }
    }
}

pub fn gold_values_when_v2m_at_most_v2k() {
    for m in 3..=8u32 {
        for k in 1..m {
            if puncodes::gf2m::v2(m as u64) > puncodes::gf2m::v2(k as u64) {
                continue;
            }
            let ctx = FieldCtx::new(m).unwrap();
            let ell = m.gcd(&k);
            let amp = 1i64 << ((m + ell) / 2);
            let rows = WalshRows::new(&ctx, &spec(m, &format!("gold({k})"))).unwrap();
            for a in ctx.nonzero() {
                for w in rows.row(a) {
                    assert!(w == 0 || (w as i64).abs() == amp, "m={m} k={k} W={w}");
                }
            }
        }
    }
}

pub fn gold_zero_unless_linearized_equation_solvable() {
    // v2(m) > v2(k): W(a, b) != 0 forces a^(2^k) x^(2^2k) + a x = b^(2^k) to be solvable
    for m in [4u32, 6, 8] {
        let ctx = FieldCtx::new(m).unwrap();
        for k in (1..m).filter(|&k| puncodes::gf2m::v2(m as u64) > puncodes::gf2m::v2(k as u64)) {
            let rows = WalshRows::new(&ctx, &spec(m, &format!("gold({k})"))).unwrap();
            let ell = m.gcd(&k);
            let allowed = [0i64, 1 << (m / 2), 1 << (m / 2 + ell)];
            for a in ctx.nonzero() {
                let ak = ctx.frobenius(a, k);
                let mut image = vec![false; ctx.size()];
                for x in ctx.elements() {
                    let y = ctx.mul(ak, ctx.frobenius(x, 2 * k)) + ctx.mul(a, x);
                    image[y.0 as usize] = true;
                }
                for (b, w) in ctx.elements().zip(rows.row(a)) {
                    assert!(allowed.contains(&(w as i64).abs()), "m={m} k={k} W={w}");
                    if w != 0 {
                        assert!(image[ctx.frobenius(b, k).0 as usize], "m={m} k={k} a={} b={}", a.0, b.0);
                    }
                }
            }
        }
    }
}

pub fn level_set_length_law() {
    for m in [5u32, 7] {
        let ctx = FieldCtx::new(m).unwrap();
        for fam in ["gold(1)", "binomial(3,1)"] {
            let f = spec(m, fam);
            let w = walsh_at_zero(&ctx, &f).unwrap();
            for l in ctx.nonzero() {
                for nu in [0u8, 1] {
                    let r = Recipe::TraceOfF { function: f, lambda: l, nu };
                    let n = build_position_set(&ctx, &r).unwrap().len() as i64;
                    let half = 1i64 << ((m - 1) / 2);
                    let sgn = if nu == 0 { 1 } else { -1 };
                    let expect = match w[l.0 as usize] {
                        0 => (1 << (m - 1)) - 1 + nu as i64,
                        v if v > 0 => (1 << (m - 1)) + sgn * half - 1 + nu as i64,
                        _ => (1 << (m - 1)) - sgn * half - 1 + nu as i64,
                    };
                    assert_eq!(n, expect, "m={m} f={fam} lambda={} nu={nu}", l.0);
                }
            }
        }
    }
}

pub fn ab_dual_distance_lower_bound() {
    for m in [5u32, 7] {
        let ctx = FieldCtx::new(m).unwrap();
        for d in ab_monomial_exponents(m).unwrap() {
            let f = FunctionSpec::new(m, Family::Monomial(d)).unwrap();
            for lambda in [FieldElement::ONE, ctx.gamma()] {
                for nu in [0u8, 1] {
                    let (c, wd) = code(&ctx, &f, Recipe::TraceOfF { function: f, lambda, nu });
                    let dd = dual_min_distance(&wd, c.k()).unwrap().unwrap();
                    assert!(dd >= 5 + nu as usize, "m={m} d={d} nu={nu} dual d={dd}");
                }
            }
        }
    }
}

pub fn trace_support_weight_formula() {
    for (m, fam) in [(5, "gold(1)"), (6, "reltrace(1)"), (6, "monomial(13)"), (7, "welch")] {
        let ctx = FieldCtx::new(m).unwrap();
        let f = spec(m, fam);
        let d = build_position_set(&ctx, &Recipe::TraceSupport).unwrap();
        let rows = WalshRows::new(&ctx, &f).unwrap();
        for a in ctx.elements() {
            let r = rows.row(a);
            for b in ctx.elements() {
                let wt = popcount(&evaluate_codeword(&ctx, &f, &d, a, b).unwrap()) as i64;
                let diff = r[b.0 as usize] as i64 - r[(b + FieldElement::ONE).0 as usize] as i64;
                assert_eq!(4 * wt, (1 << m) - diff, "m={m} f={fam} a={} b={}", a.0, b.0);
            }
        }
    }
}

pub fn cyclotomic_weight_formula() {
    for (m, t, dexp) in [(6u32, 3u64, 21u64), (6, 1, 21), (6, 3, 3), (8, 5, 85)] {
        let ctx = FieldCtx::new(m).unwrap();
        let f = FunctionSpec::new(m, Family::CyclotomicPower(dexp)).unwrap();
        let d = build_position_set(&ctx, &Recipe::Cyclotomic { t }).unwrap();
        let n = d.len() as i64;
        for a in ctx.elements() {
            for b in ctx.elements() {
                let wt = popcount(&evaluate_codeword(&ctx, &f, &d, a, b).unwrap()) as i64;
                assert_eq!(2 * wt, n - t_sum(&ctx, d.elements(), dexp, a, b));
            }
        }
    }
}

pub fn gold_class_dual_low_weight_laws() {
    for (m, k) in [(6u32, 1u32), (10, 1), (12, 2)] {
        let ctx = FieldCtx::new(m).unwrap();
        let case = Case::new(TheoremId::CycloGoldClass, m).with_k(k);
        let r = verify(&ctx, &case, &VerifyOptions::default()).unwrap();
        let low: Vec<u64> = r.enumerated.dual_low.iter().map(|x| x.as_u64().unwrap()).collect();
        assert_eq!(low[2] == 0, k == 1, "A3 at m={m} k={k}");
        if k == 1 {
            assert_eq!(low[3] == 0, m == 6, "A4 at m={m}");
        }
    }
}

pub fn pless_residuals_vanish_on_enumerated_codes() {
    for (m, fam, r) in [
        (5u32, "gold(1)", Recipe::TraceSupport),
        (6, "monomial(21)", Recipe::Cyclotomic { t: 3 }),
        (7, "gold(1)", Recipe::Whole),
        (6, "binomial(3,5)", Recipe::TraceSupport),
    ] {
        let ctx = FieldCtx::new(m).unwrap();
        let (c, wd) = code(&ctx, &spec(m, fam), r);
        let low = dual_prefix(&wd, c.k(), 4).unwrap();
        assert!(pless_check(&wd, c.k(), &low).all_zero(), "m={m} f={fam}");
    }
}

pub fn weight_counts_are_exact_big_integers() {
    let ctx = FieldCtx::new(10).unwrap();
    let (c, wd) = code(&ctx, &spec(10, "cyclotomic-power(93)"), Recipe::Cyclotomic { t: 11 });
    assert_eq!(wd.total(), BigUint::from(1u64 << c.k()));
    let dual = macwilliams_dual(&wd, c.k()).unwrap();
    // the dual of a length-93 code has counts far beyond u64
    assert!(dual.counts().iter().any(|x| x.to_u64().is_none()));
    assert!(!dual.count(0).is_zero());
}
