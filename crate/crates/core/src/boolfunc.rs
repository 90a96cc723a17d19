//! Functions on GF(2^m), their Walsh transforms and differential profiles.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf2m::{v2, FieldCtx, FieldElement};

/// Largest degree for full Walsh spectra.
pub const SPECTRUM_MAX_M: u32 = 16;
/// Largest degree for the exhaustive AB and APN tests.
pub const PROPERTY_MAX_M: u32 = 13;

/// The catalog of functions. Every family satisfies `f(0) = 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    /// `x^d`.
    Monomial(u64),
    /// `x^(2^h + 1)`.
    Gold(u32),
    /// `x^(2^(2h) - 2^h + 1)`, `h >= 2`.
    Kasami(u32),
    /// `x^(2^((m-1)/2) + 3)`, m odd.
    Welch,
    /// `x^(2^((m-1)/2) + 2^((m-1)/4) - 1)`, m = 1 mod 4.
    Niho1,
    /// `x^(2^((m-1)/2) + 2^((3m-1)/4) - 1)`, m = 3 mod 4.
    Niho2,
    /// `x^t1 + x^t2` with `t1 != t2` from `{2^(m/3)+1, 2^(2m/3)+1, 2^(2m/3)+2^(m/3)}`.
    QuadraticPairSum(u64, u64),
    /// `Tr_k^m(x^(2^k + 1))`.
    RelTraceQuadratic(u32),
    /// `x^d` used over a cyclotomic position set.
    CyclotomicPower(u64),
    /// `x^d1 + x^d2`.
    Binomial(u64, u64),
}

impl Family {
    /// Name and parameter signature for every family, in display order.
    pub const CATALOG: &'static [(&'static str, &'static str)] = &[
        ("monomial(d)", "x^d"),
        ("gold(h)", "x^(2^h+1), 1 <= h < m"),
        ("kasami(h)", "x^(2^(2h)-2^h+1), 2 <= h < m"),
        ("welch", "x^(2^((m-1)/2)+3), m odd"),
        ("niho1", "x^(2^((m-1)/2)+2^((m-1)/4)-1), m = 1 mod 4"),
        ("niho2", "x^(2^((m-1)/2)+2^((3m-1)/4)-1), m = 3 mod 4"),
        ("pair-sum(t1,t2)", "x^t1+x^t2, 3 | m, m >= 9, t1 != t2 in {2^(m/3)+1, 2^(2m/3)+1, 2^(2m/3)+2^(m/3)}"),
        ("reltrace(k)", "Tr_k^m(x^(2^k+1)), k | m, k not in {m, m/2}"),
        ("cyclotomic-power(d)", "x^d over a cyclotomic class"),
        ("binomial(d1,d2)", "x^d1+x^d2, d1 != d2"),
    ];

    /// The three exponents admissible for [`Family::QuadraticPairSum`].
    pub fn pair_sum_exponents(m: u32) -> [u64; 3] {
        let s = m / 3;
        [(1 << s) + 1, (1 << (2 * s)) + 1, (1 << (2 * s)) + (1 << s)]
    }

    /// Power-map exponents, or `None` for the relative-trace family.
    /// Exponents are returned as written, not reduced.
    pub fn exponents(&self, m: u32) -> Option<Vec<u64>> {
        let e = match *self {
            Family::Monomial(d) | Family::CyclotomicPower(d) => vec![d],
            Family::Gold(h) => vec![(1u64 << h) + 1],
            Family::Kasami(h) => vec![(1u64 << (2 * h)) - (1u64 << h) + 1],
            Family::Welch => vec![(1u64 << ((m - 1) / 2)) + 3],
            Family::Niho1 => vec![(1u64 << ((m - 1) / 2)) + (1u64 << ((m - 1) / 4)) - 1],
            Family::Niho2 => vec![(1u64 << ((m - 1) / 2)) + (1u64 << ((3 * m - 1) / 4)) - 1],
            Family::QuadraticPairSum(a, b) | Family::Binomial(a, b) => vec![a, b],
            Family::RelTraceQuadratic(_) => return None,
        };
        Some(e)
    }

    fn check(&self, m: u32) -> std::result::Result<(), String> {
        match *self {
            Family::Monomial(d) | Family::CyclotomicPower(d) => {
                if d == 0 {
                    return Err("exponent must be positive so that f(0) = 0".into());
                }
            }
            Family::Gold(h) => {
                if !(1..m).contains(&h) {
                    return Err(format!("gold needs 1 <= h < m, got h = {h}"));
                }
            }
            Family::Kasami(h) => {
                if !(2..m).contains(&h) {
                    return Err(format!("kasami needs 2 <= h < m, got h = {h}"));
                }
            }
            Family::Welch => {
                if m.is_multiple_of(2) {
                    return Err("welch needs m odd".into());
                }
            }
            Family::Niho1 => {
                if m % 4 != 1 {
                    return Err("niho1 needs m = 1 mod 4".into());
                }
            }
            Family::Niho2 => {
                if m % 4 != 3 {
                    return Err("niho2 needs m = 3 mod 4".into());
                }
            }
            Family::QuadraticPairSum(t1, t2) => {
                if !m.is_multiple_of(3) || m < 9 {
                    return Err(format!("pair-sum needs 3 | m and m >= 9, got m = {m}"));
                }
                let allowed = Self::pair_sum_exponents(m);
                if t1 == t2 || !allowed.contains(&t1) || !allowed.contains(&t2) {
                    return Err(format!(
                        "pair-sum needs distinct exponents from {allowed:?}, got ({t1}, {t2})"
                    ));
                }
            }
            Family::RelTraceQuadratic(k) => {
                if k == 0 || !m.is_multiple_of(k) || k == m || 2 * k == m {
                    return Err(format!("reltrace needs k | m with k not in {{m, m/2}}, got k = {k}"));
                }
            }
            Family::Binomial(d1, d2) => {
                if d1 == 0 || d2 == 0 || d1 == d2 {
                    return Err("binomial needs distinct positive exponents".into());
                }
            }
        }
        Ok(())
    }

    /// Whether every component `Tr(a f(x))` is a quadratic form plus a linear
    /// part, i.e. all exponents have binary weight at most 2.
    pub fn is_quadratic(&self, m: u32) -> bool {
        let order = (1u64 << m) - 1;
        match self.exponents(m) {
            None => true,
            Some(es) => es.iter().all(|&d| {
                let r = d % order;
                let r = if r == 0 { order } else { r };
                r.count_ones() <= 2
            }),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Family::Monomial(d) => write!(f, "monomial({d})"),
            Family::Gold(h) => write!(f, "gold({h})"),
            Family::Kasami(h) => write!(f, "kasami({h})"),
            Family::Welch => f.write_str("welch"),
            Family::Niho1 => f.write_str("niho1"),
            Family::Niho2 => f.write_str("niho2"),
            Family::QuadraticPairSum(a, b) => write!(f, "pair-sum({a},{b})"),
            Family::RelTraceQuadratic(k) => write!(f, "reltrace({k})"),
            Family::CyclotomicPower(d) => write!(f, "cyclotomic-power({d})"),
            Family::Binomial(a, b) => write!(f, "binomial({a},{b})"),
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (name, args) = match s.find('(') {
            Some(i) => {
                let inner = s[i + 1..]
                    .strip_suffix(')')
                    .ok_or_else(|| Error::Parse(format!("missing ')' in {s:?}")))?;
                (&s[..i], inner.split(',').map(str::trim).collect::<Vec<_>>())
            }
            None => (s, Vec::new()),
        };
        let nums: Vec<u64> = args
            .iter()
            .map(|a| parse_u64(a))
            .collect::<Result<_>>()?;
        let want = |n: usize| -> Result<()> {
            if nums.len() == n {
                Ok(())
            } else {
                Err(Error::Parse(format!("{name} takes {n} parameter(s), got {}", nums.len())))
            }
        };
        let small = |v: u64| -> Result<u32> {
            u32::try_from(v).map_err(|_| Error::Parse(format!("parameter {v} too large")))
        };
        let fam = match name.trim().to_ascii_lowercase().as_str() {
            "monomial" => {
                want(1)?;
                Family::Monomial(nums[0])
            }
            "gold" => {
                want(1)?;
                Family::Gold(small(nums[0])?)
            }
            "kasami" => {
                want(1)?;
                Family::Kasami(small(nums[0])?)
            }
            "welch" => {
                want(0)?;
                Family::Welch
            }
            "niho1" => {
                want(0)?;
                Family::Niho1
            }
            "niho2" => {
                want(0)?;
                Family::Niho2
            }
            "pair-sum" | "pairsum" => {
                want(2)?;
                Family::QuadraticPairSum(nums[0], nums[1])
            }
            "reltrace" | "rel-trace" => {
                want(1)?;
                Family::RelTraceQuadratic(small(nums[0])?)
            }
            "cyclotomic-power" | "cyclotomic" => {
                want(1)?;
                Family::CyclotomicPower(nums[0])
            }
            "binomial" => {
                want(2)?;
                Family::Binomial(nums[0], nums[1])
            }
            other => return Err(Error::Parse(format!("unknown function family {other:?}"))),
        };
        Ok(fam)
    }
}

fn parse_u64(s: &str) -> Result<u64> {
    let parsed = if let Some(b) = s.strip_prefix("0b") {
        u64::from_str_radix(b, 2)
    } else if let Some(h) = s.strip_prefix("0x") {
        u64::from_str_radix(h, 16)
    } else {
        s.parse()
    };
    parsed.map_err(|_| Error::Parse(format!("not a nonnegative integer: {s:?}")))
}

/// A validated function on GF(2^m).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FunctionSpec {
    pub m: u32,
    #[serde(with = "family_text")]
    pub family: Family,
}

mod family_text {
    use super::Family;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(f: &Family, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(f)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Family, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl FunctionSpec {
    pub fn new(m: u32, family: Family) -> Result<Self> {
        family
            .check(m)
            .map_err(|e| Error::InvalidFunction(format!("{family} on GF(2^{m}): {e}")))?;
        Ok(FunctionSpec { m, family })
    }

    pub fn parse(m: u32, text: &str) -> Result<Self> {
        Self::new(m, text.parse()?)
    }

    fn check_ctx(&self, ctx: &FieldCtx) -> Result<()> {
        if ctx.m() != self.m {
            return Err(Error::InvalidFunction(format!(
                "{} is defined over GF(2^{}), field has m = {}",
                self.family,
                self.m,
                ctx.m()
            )));
        }
        Ok(())
    }

    /// `f(x)`.
    pub fn eval(&self, ctx: &FieldCtx, x: FieldElement) -> Result<FieldElement> {
        self.check_ctx(ctx)?;
        Ok(self.eval_unchecked(ctx, x))
    }

    fn eval_unchecked(&self, ctx: &FieldCtx, x: FieldElement) -> FieldElement {
        if x.is_zero() {
            return FieldElement::ZERO;
        }
        match self.family {
            Family::RelTraceQuadratic(k) => {
                let y = ctx.pow(x, (1u64 << k) + 1);
                ctx.rel_trace(k, y).expect("k | m checked at construction")
            }
            fam => fam
                .exponents(self.m)
                .expect("power family")
                .into_iter()
                .fold(FieldElement::ZERO, |acc, e| acc + ctx.pow(x, e)),
        }
    }

    /// `f(x)` for every `x`, indexed by encoding.
    pub fn value_table(&self, ctx: &FieldCtx) -> Result<Vec<FieldElement>> {
        self.check_ctx(ctx)?;
        Ok((0..ctx.size() as u32)
            .into_par_iter()
            .map(|x| self.eval_unchecked(ctx, FieldElement(x)))
            .collect())
    }

    /// Whether `x -> f(x)` is a bijection of GF(2^m).
    pub fn is_permutation(&self, ctx: &FieldCtx) -> Result<bool> {
        let vals = self.value_table(ctx)?;
        let mut seen = vec![false; ctx.size()];
        for v in vals {
            if std::mem::replace(&mut seen[v.0 as usize], true) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

impl fmt::Display for FunctionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} on GF(2^{})", self.family, self.m)
    }
}

/// `W_f(a, b) = sum_x (-1)^Tr(a f(x) + b x)`, by definition.
pub fn walsh(ctx: &FieldCtx, f: &FunctionSpec, a: FieldElement, b: FieldElement) -> Result<i64> {
    f.check_ctx(ctx)?;
    Ok(ctx
        .elements()
        .map(|x| {
            let e = ctx.trace(ctx.mul(a, f.eval_unchecked(ctx, x)) + ctx.mul(b, x));
            1 - 2 * e as i64
        })
        .sum())
}

/// In-place unnormalized Walsh-Hadamard transform.
pub fn fwht(buf: &mut [i32]) {
    let n = buf.len();
    debug_assert!(n.is_power_of_two());
    let mut h = 1;
    while h < n {
        for block in buf.chunks_exact_mut(2 * h) {
            let (lo, hi) = block.split_at_mut(h);
            for (u, v) in lo.iter_mut().zip(hi.iter_mut()) {
                let (a, b) = (*u, *v);
                *u = a + b;
                *v = a - b;
            }
        }
        h *= 2;
    }
}

/// Fast evaluation of `W_f(a, .)` for fixed `a`.
///
/// `Tr(y z)` is the parity of `z & tmask[y]`, so one Hadamard transform of
/// `x -> (-1)^Tr(a f(x))` yields every `W_f(a, b)` at index `tmask[b]`.
pub struct WalshRows<'a> {
    ctx: &'a FieldCtx,
    values: Vec<FieldElement>,
    tmask: Vec<u32>,
}

impl<'a> WalshRows<'a> {
    pub fn new(ctx: &'a FieldCtx, f: &FunctionSpec) -> Result<Self> {
        Ok(WalshRows { ctx, values: f.value_table(ctx)?, tmask: ctx.trace_functional_table() })
    }

    pub fn values(&self) -> &[FieldElement] {
        &self.values
    }

    /// Raw transform for `a`, indexed by trace mask.
    fn transform(&self, a: FieldElement, buf: &mut [i32]) {
        let ma = self.tmask[a.0 as usize];
        for (slot, v) in buf.iter_mut().zip(&self.values) {
            *slot = 1 - 2 * ((v.0 & ma).count_ones() & 1) as i32;
        }
        fwht(buf);
    }

    /// `W_f(a, b)` for every `b`, indexed by the encoding of `b`.
    pub fn row(&self, a: FieldElement) -> Vec<i32> {
        let mut buf = vec![0i32; self.ctx.size()];
        self.transform(a, &mut buf);
        self.tmask.iter().map(|&mb| buf[mb as usize]).collect()
    }

    /// Value distribution of `W_f(a, b)` over `a != 0` and all `b`.
    pub fn spectrum(&self) -> BTreeMap<i64, u64> {
        let size = self.ctx.size();
        (1..size as u32)
            .into_par_iter()
            .fold(
                || (vec![0i32; size], BTreeMap::new()),
                |(mut buf, mut hist), a| {
                    self.transform(FieldElement(a), &mut buf);
                    for &w in &buf {
                        *hist.entry(w as i64).or_insert(0u64) += 1;
                    }
                    (buf, hist)
                },
            )
            .map(|(_, h)| h)
            .reduce(BTreeMap::new, merge_hist)
    }
}

fn merge_hist(mut a: BTreeMap<i64, u64>, b: BTreeMap<i64, u64>) -> BTreeMap<i64, u64> {
    for (k, v) in b {
        *a.entry(k).or_insert(0) += v;
    }
    a
}

/// Value distribution of `W_f(a, b)` over `a != 0`, all `b`.
pub fn walsh_spectrum(ctx: &FieldCtx, f: &FunctionSpec) -> Result<BTreeMap<i64, u64>> {
    if ctx.m() > SPECTRUM_MAX_M {
        return Err(Error::ResourceGuard(format!(
            "full Walsh spectrum limited to m <= {SPECTRUM_MAX_M}, got m = {}",
            ctx.m()
        )));
    }
    Ok(WalshRows::new(ctx, f)?.spectrum())
}

/// Exhaustive almost-bent test: every `W_f(a, b)` with `a != 0` lies in
/// `{0, +-2^((m+1)/2)}`.
pub fn is_ab(ctx: &FieldCtx, f: &FunctionSpec) -> Result<bool> {
    let m = ctx.m();
    if m.is_multiple_of(2) {
        return Err(Error::Hypothesis(format!(
            "almost bent functions exist only for odd m, got m = {m}"
        )));
    }
    if m > PROPERTY_MAX_M {
        return Err(Error::ResourceGuard(format!("AB test limited to m <= {PROPERTY_MAX_M}")));
    }
    let peak = 1i64 << m.div_ceil(2);
    Ok(walsh_spectrum(ctx, f)?.keys().all(|&w| w == 0 || w.abs() == peak))
}

/// Largest number of solutions of `f(x + a) + f(x) = b` over `a != 0`, `b`.
pub fn differential_uniformity(ctx: &FieldCtx, f: &FunctionSpec) -> Result<u32> {
    if ctx.m() > PROPERTY_MAX_M {
        return Err(Error::ResourceGuard(format!(
            "differential scan limited to m <= {PROPERTY_MAX_M}"
        )));
    }
    let vals = f.value_table(ctx)?;
    let size = ctx.size();
    Ok((1..size)
        .into_par_iter()
        .map_init(
            || vec![0u32; size],
            |counts, a| {
                counts.iter_mut().for_each(|c| *c = 0);
                for x in 0..size {
                    counts[(vals[x ^ a].0 ^ vals[x].0) as usize] += 1;
                }
                *counts.iter().max().unwrap()
            },
        )
        .max()
        .unwrap_or(0))
}

/// Exhaustive APN test.
pub fn is_apn(ctx: &FieldCtx, f: &FunctionSpec) -> Result<bool> {
    Ok(differential_uniformity(ctx, f)? == 2)
}

/// Known AB power exponents for odd `m`, reduced modulo `2^m - 1`, sorted
/// and without repeats. The Gold and Kasami side condition is taken as
/// `gcd(m, h) = 1`.
pub fn ab_monomial_exponents(m: u32) -> Result<Vec<u64>> {
    if m.is_multiple_of(2) || !(3..=crate::gf2m::MAX_DEGREE).contains(&m) {
        return Err(Error::Hypothesis(format!("AB exponent list needs odd m >= 3, got m = {m}")));
    }
    let order = (1u64 << m) - 1;
    let mut out = Vec::new();
    for h in 1..m {
        if h.gcd(&m) == 1 {
            out.push(Family::Gold(h).exponents(m).unwrap()[0]);
            if h >= 2 {
                out.push(Family::Kasami(h).exponents(m).unwrap()[0]);
            }
        }
    }
    out.push(Family::Welch.exponents(m).unwrap()[0]);
    match m % 4 {
        1 => out.push(Family::Niho1.exponents(m).unwrap()[0]),
        3 => out.push(Family::Niho2.exponents(m).unwrap()[0]),
        _ => unreachable!(),
    }
    let mut out: Vec<u64> = out.into_iter().map(|d| d % order).filter(|&d| d != 0).collect();
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

/// `T(a, b) = sum_{x in D} (-1)^Tr(a x^d + b x)`, by definition.
pub fn t_sum(ctx: &FieldCtx, positions: &[FieldElement], d: u64, a: FieldElement, b: FieldElement) -> i64 {
    positions
        .iter()
        .map(|&x| {
            let e = ctx.trace(ctx.mul(a, ctx.pow(x, d)) + ctx.mul(b, x));
            1 - 2 * e as i64
        })
        .sum()
}

/// Smallest `d >= 1` with `d * (2^k + 1) = 2^(m/2) + 1 (mod 2^m - 1)`.
pub fn gold_class_exponent(m: u32, k: u32) -> Option<u64> {
    if !m.is_multiple_of(2) || k == 0 || k >= m {
        return None;
    }
    let order = (1u64 << m) - 1;
    let t = (1u64 << k) + 1;
    let target = ((1u64 << (m / 2)) + 1) % order;
    (1..=order).find(|&d| (d as u128 * t as u128 % order as u128) as u64 == target)
}

/// `ell = gcd(m, k)` and the 2-adic comparison used to pick a Gold case.
pub fn gold_case(m: u32, k: u32) -> (u32, std::cmp::Ordering) {
    (m.gcd(&k), v2(m as u64).cmp(&v2(k as u64)))
}
