use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::boolfunc::gold_class_exponent;
use crate::error::{Error, Result};
use crate::gf2m::v2;

use super::exact::{p2, p2_half, q, ser_rational, to_natural, to_u64};

/// The closed-form results that can be checked against enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TheoremId {
    /// AB `f`, `D = {x != 0 : Tr(lambda f(x)) = 0}`.
    AbLevelsetNu0,
    /// AB `f`, `D = {x : Tr(lambda f(x)) = 1}`.
    AbLevelsetNu1,
    /// AB permutation, `nu = 0`.
    AbPermNu0,
    /// AB permutation, `nu = 1`.
    AbPermNu1,
    /// Gold `x^(2^k+1)` on the trace support, `v2(m) <= v2(k)`.
    GoldSupportV2le,
    /// Gold on the trace support, `v2(m) > v2(k)`, `gcd(m, k) = 1`.
    GoldSupportV2gt,
    /// Gold on the trace support, `k = m/2`.
    GoldSupportHalf,
    /// Sum of two quadratic monomials on the trace support, `3 | m`.
    PairSumSupport,
    /// `Tr_k^m(x^(2^k+1))` on the trace support.
    ReltraceSupport,
    /// `x^((2^m-1)/3)` on a cyclotomic class, `3 | t`.
    CycloCubicDiv3,
    /// `x^((2^m-1)/3)` on a cyclotomic class, `3 ∤ t`.
    CycloCubicNdiv3,
    /// `x^d` with `d(2^k+1) = 2^(m/2)+1` on the class of index `2^k+1`.
    CycloGoldClass,
    /// `x^((2^m-1)/3)` on the class of index `2^(m/2)+1`.
    CycloCubicRm,
}

impl TheoremId {
    pub const ALL: [TheoremId; 13] = [
        TheoremId::AbLevelsetNu0,
        TheoremId::AbLevelsetNu1,
        TheoremId::AbPermNu0,
        TheoremId::AbPermNu1,
        TheoremId::GoldSupportV2le,
        TheoremId::GoldSupportV2gt,
        TheoremId::GoldSupportHalf,
        TheoremId::PairSumSupport,
        TheoremId::ReltraceSupport,
        TheoremId::CycloCubicDiv3,
        TheoremId::CycloCubicNdiv3,
        TheoremId::CycloGoldClass,
        TheoremId::CycloCubicRm,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TheoremId::AbLevelsetNu0 => "ab-levelset-nu0",
            TheoremId::AbLevelsetNu1 => "ab-levelset-nu1",
            TheoremId::AbPermNu0 => "ab-perm-nu0",
            TheoremId::AbPermNu1 => "ab-perm-nu1",
            TheoremId::GoldSupportV2le => "gold-support-v2le",
            TheoremId::GoldSupportV2gt => "gold-support-v2gt",
            TheoremId::GoldSupportHalf => "gold-support-half",
            TheoremId::PairSumSupport => "pair-sum-support",
            TheoremId::ReltraceSupport => "reltrace-support",
            TheoremId::CycloCubicDiv3 => "cyclo-cubic-div3",
            TheoremId::CycloCubicNdiv3 => "cyclo-cubic-ndiv3",
            TheoremId::CycloGoldClass => "cyclo-gold-class",
            TheoremId::CycloCubicRm => "cyclo-cubic-rm",
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            TheoremId::AbLevelsetNu0 => "AB f, D = {x != 0 : Tr(lambda f(x)) = 0}",
            TheoremId::AbLevelsetNu1 => "AB f, D = {x : Tr(lambda f(x)) = 1}",
            TheoremId::AbPermNu0 => "AB permutation f, nu = 0",
            TheoremId::AbPermNu1 => "AB permutation f, nu = 1",
            TheoremId::GoldSupportV2le => "x^(2^k+1) on {Tr(x) = 1}, v2(m) <= v2(k)",
            TheoremId::GoldSupportV2gt => "x^(2^k+1) on {Tr(x) = 1}, v2(m) > v2(k), gcd(m,k) = 1",
            TheoremId::GoldSupportHalf => "x^(2^(m/2)+1) on {Tr(x) = 1}",
            TheoremId::PairSumSupport => "x^t1 + x^t2 on {Tr(x) = 1}, 3 | m",
            TheoremId::ReltraceSupport => "Tr_k^m(x^(2^k+1)) on {Tr(x) = 1}",
            TheoremId::CycloCubicDiv3 => "x^((2^m-1)/3) on <gamma^t>, 3 | t",
            TheoremId::CycloCubicNdiv3 => "x^((2^m-1)/3) on <gamma^t>, 3 does not divide t",
            TheoremId::CycloGoldClass => "x^d, d(2^k+1) = 2^(m/2)+1, on <gamma^(2^k+1)>",
            TheoremId::CycloCubicRm => "x^((2^m-1)/3) on <gamma^(2^(m/2)+1)>",
        }
    }

    /// `Some(nu)` for the theorems whose position set is a level set of
    /// `Tr(lambda f(x))`.
    pub fn nu(self) -> Option<u8> {
        match self {
            TheoremId::AbLevelsetNu0 | TheoremId::AbPermNu0 => Some(0),
            TheoremId::AbLevelsetNu1 | TheoremId::AbPermNu1 => Some(1),
            _ => None,
        }
    }

    pub fn is_ab(self) -> bool {
        self.nu().is_some()
    }

    pub fn is_gold_support(self) -> bool {
        matches!(self, TheoremId::GoldSupportV2le | TheoremId::GoldSupportV2gt | TheoremId::GoldSupportHalf)
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TheoremId::ALL
            .into_iter()
            .find(|t| t.as_str() == s)
            .ok_or_else(|| Error::Parse(format!("unknown theorem id {s:?}")))
    }
}

/// Inputs of a closed-form prediction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PredictParams {
    pub theorem: TheoremId,
    pub m: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t: Option<u64>,
    /// `W_f(lambda, 0)`, needed by the AB level-set theorems.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub walsh_at_lambda: Option<i64>,
}

/// One printed table row, before merging equal weights.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PredictedRow {
    #[serde(serialize_with = "ser_rational")]
    pub weight: BigRational,
    #[serde(serialize_with = "ser_rational")]
    pub count: BigRational,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Claim {
    /// The dual is distance-optimal for the sphere packing bound.
    DualSpherePackingOptimal,
    /// The code meets the Griesmer bound with equality.
    GriesmerTight,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DualPrediction {
    pub n: u64,
    pub k: u64,
    pub d: u64,
    /// The dual dimension as printed, when it differs from `n - k`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub stated_k: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Prediction {
    pub theorem: TheoremId,
    pub n: u64,
    pub k: u64,
    /// Minimum distance as printed in the statement, when it gives one.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub header_d: Option<u64>,
    pub rows: Vec<PredictedRow>,
    pub dual: DualPrediction,
    pub claims: Vec<Claim>,
    pub notes: Vec<String>,
}

impl Prediction {
    /// Nonzero weights with merged counts, dropping zero-count rows. Fails
    /// with a description when some entry is not a nonnegative integer.
    pub fn table(&self) -> std::result::Result<BTreeMap<u64, BigUint>, String> {
        let mut out = BTreeMap::new();
        for row in &self.rows {
            let c = to_natural(&row.count)
                .ok_or_else(|| format!("count {} at weight {} is not a nonnegative integer", row.count, row.weight))?;
            if c.is_zero() {
                continue;
            }
            let w = to_u64(&row.weight)
                .filter(|&w| w > 0 && w <= self.n)
                .ok_or_else(|| format!("weight {} is not an integer in 1..={}", row.weight, self.n))?;
            *out.entry(w).or_insert_with(BigUint::zero) += c;
        }
        Ok(out)
    }

    /// Least weight of the merged table.
    pub fn min_distance(&self) -> Option<u64> {
        self.table().ok().and_then(|t| t.keys().next().copied())
    }

    /// Whether the table lists the all-one word.
    pub fn self_complementary(&self) -> Option<bool> {
        self.table().ok().map(|t| t.contains_key(&self.n))
    }

    /// `1 + sum of the table` minus `2^k`; zero for a consistent table.
    pub fn total_defect(&self) -> BigRational {
        let sum: BigRational = self.rows.iter().map(|r| r.count.clone()).sum();
        sum + BigRational::one() - p2(self.k as i64)
    }
}

fn need<T>(x: Option<T>, what: &str, th: TheoremId) -> Result<T> {
    x.ok_or_else(|| Error::Config(format!("{th} needs parameter {what}")))
}

fn nat(x: &BigRational, what: &str) -> Result<u64> {
    to_u64(x).ok_or_else(|| Error::Hypothesis(format!("{what} = {x} is not a nonnegative integer")))
}

fn row(weight: BigRational, count: BigRational) -> PredictedRow {
    PredictedRow { weight, count }
}

/// The side conditions of `theorem` that `params` violates; empty when all
/// hold. Properties that need the function (AB, permutation) are checked
/// by the verifier.
pub fn hypothesis_violations(params: &PredictParams) -> Vec<String> {
    let PredictParams { theorem, m, k, t, .. } = *params;
    let mut bad = Vec::new();
    match theorem {
        TheoremId::AbLevelsetNu0 | TheoremId::AbLevelsetNu1 | TheoremId::AbPermNu0 | TheoremId::AbPermNu1 => {
            if m % 2 == 0 || m < 3 {
                bad.push(format!("m = {m} must be odd and at least 3"));
            }
            if matches!(theorem, TheoremId::AbPermNu0 | TheoremId::AbPermNu1) && m < 5 {
                bad.push(format!("m = {m} must be at least 5"));
            }
        }
        TheoremId::GoldSupportV2le | TheoremId::GoldSupportV2gt | TheoremId::GoldSupportHalf => match k {
            None => bad.push("k is required".into()),
            Some(k) if k == 0 || k >= m => bad.push(format!("k = {k} must satisfy 1 <= k < m")),
            Some(k) => {
                let (vm, vk) = (v2(m as u64), v2(k as u64));
                match theorem {
                    TheoremId::GoldSupportV2le if vm > vk => bad.push(format!("v2(m) = {vm} > v2(k) = {vk}")),
                    TheoremId::GoldSupportV2gt => {
                        if vm <= vk {
                            bad.push(format!("v2(m) = {vm} <= v2(k) = {vk}"));
                        }
                        if m.gcd(&k) != 1 {
                            bad.push(format!("gcd(m, k) = {} != 1", m.gcd(&k)));
                        }
                    }
                    TheoremId::GoldSupportHalf => {
                        if m % 2 != 0 || 2 * k != m {
                            bad.push(format!("k = {k} must equal m/2"));
                        }
                        if m < 4 {
                            bad.push(format!("m = {m} must be at least 4"));
                        }
                    }
                    _ => {}
                }
            }
        },
        TheoremId::PairSumSupport => {
            if m % 3 != 0 || m < 9 {
                bad.push(format!("m = {m} must be a multiple of 3 and at least 9"));
            }
        }
        TheoremId::ReltraceSupport => match k {
            None => bad.push("k is required".into()),
            Some(k) => {
                if k == 0 || m % k != 0 || k == m || 2 * k == m {
                    bad.push(format!("k = {k} must divide m = {m} with k not in {{m, m/2}}"));
                }
            }
        },
        TheoremId::CycloCubicDiv3 | TheoremId::CycloCubicNdiv3 => {
            if v2(m as u64) != 1 {
                bad.push(format!("v2(m) = {} != 1", v2(m as u64)));
            }
            match t {
                None => bad.push("t is required".into()),
                Some(t) => {
                    let h = (1u64 << (m / 2)) + 1;
                    if t == 0 || !h.is_multiple_of(t.lcm(&3)) {
                        bad.push(format!("lcm(3, t) = {} does not divide 2^(m/2)+1 = {h}", t.lcm(&3)));
                    }
                    if t == h {
                        bad.push(format!("t = 2^(m/2)+1 = {h} is excluded"));
                    }
                    let div3 = t % 3 == 0;
                    if div3 != (theorem == TheoremId::CycloCubicDiv3) {
                        bad.push(format!("3 {} t = {t}", if div3 { "divides" } else { "does not divide" }));
                    }
                }
            }
        }
        TheoremId::CycloGoldClass => match k {
            None => bad.push("k is required".into()),
            Some(k) => {
                if m % 2 != 0 {
                    bad.push(format!("m = {m} must be even"));
                } else {
                    if k == 0 || 2 * k == m || k >= m {
                        bad.push(format!("k = {k} must satisfy 1 <= k < m, k != m/2"));
                    } else if gold_class_exponent(m, k).is_none() {
                        bad.push(format!("no d with d(2^{k}+1) = 2^{}+1 mod 2^{m}-1", m / 2));
                    }
                    if let Some(t) = t {
                        if k < 63 && t != (1u64 << k) + 1 {
                            bad.push(format!("t = {t} must equal 2^k+1"));
                        }
                    }
                }
            }
        },
        TheoremId::CycloCubicRm => {
            if m % 2 != 0 || v2(m as u64) != 1 {
                bad.push(format!("m = {m} must be twice an odd number"));
            } else if let Some(t) = t {
                if t != (1u64 << (m / 2)) + 1 {
                    bad.push(format!("t = {t} must equal 2^(m/2)+1"));
                }
            }
        }
    }
    bad
}

/// Evaluates the closed-form parameters and weight table for `params`.
///
/// Side conditions are not enforced here (see [`hypothesis_violations`]);
/// this only fails when a formula cannot be evaluated at all.
pub fn predict(params: &PredictParams) -> Result<Prediction> {
    let PredictParams { theorem, m, .. } = *params;
    if !(2..=crate::gf2m::MAX_DEGREE).contains(&m) {
        return Err(Error::DegreeOutOfRange(m));
    }
    let mi = m as i64;
    let one = BigRational::one();
    let mut notes = Vec::new();
    let mut claims = Vec::new();
    let mut header_d = None;
    let mut stated_dual_k = None;
    let (n, dim, rows, dual_d): (BigRational, u64, Vec<PredictedRow>, u64);

    match theorem {
        TheoremId::AbLevelsetNu0 | TheoremId::AbLevelsetNu1 => {
            let nu = theorem.nu().unwrap() as i64;
            let w = need(params.walsh_at_lambda, "walsh_at_lambda", theorem)?;
            let amp = 1i64 << m.div_ceil(2);
            if w != 0 && w.abs() != amp {
                return Err(Error::Hypothesis(format!("W_f(lambda, 0) = {w} is not in {{0, +-{amp}}}")));
            }
            let sign = if nu == 0 { 1 } else { -1 };
            let nn = q((1 << (m - 1)) + sign * w / 2 - 1 + nu);
            let h1 = p2_half(mi - 1)?;
            let h3 = p2_half(mi - 3)?;
            if nu == 0 {
                let np = &nn + &one;
                let n = &nn;
                let c0 = p2(2 * mi - 1) - np.pow(4) * p2(-2 * mi) + q(5) * np.pow(2) * p2(-mi - 1)
                    - q(5) * &np * p2(mi - 2)
                    + q(3) * n.pow(2) / q(2)
                    + q(2) * n
                    - q(1) / q(2);
                let a_odd = (np.pow(3) * p2_half(1 - 3 * mi)? - (q(3) * n + &one) * &h1 - &np * p2_half(-mi - 1)?
                    + p2_half(3 * mi - 3)?)
                    / q(6);
                let a_even = -np.pow(4) * p2(-2 * mi) / q(6) + np.pow(2) * p2(-mi - 1) / q(6) - &np * p2(mi - 2) / q(6)
                    + n.pow(2) / q(4)
                    + n / q(3)
                    + q(1) / q(12);
                let b_odd = (-np.pow(3) * p2_half(3 - 3 * mi)? + &np * p2_half(5 - mi)? + p2_half(mi + 1)?
                    - p2_half(3 + 3 * mi)?
                    + q(6) * n * &h1)
                    / q(6);
                let b_even = p2(2 - 2 * mi) * n.pow(2)
                    + (n.pow(4) + q(4) * n.pow(3) + q(4) * n + &one) * p2(1 - 2 * mi) / q(3)
                    - np.pow(2) * p2(2 - mi) / q(3)
                    + &np * p2(1 + mi) / q(3)
                    - n.pow(2)
                    - q(4) * n / q(3)
                    - q(1) / q(3);
                let mid = &np / q(2);
                rows = vec![
                    row(mid.clone(), c0),
                    row(&mid + &h1, &a_even + &a_odd),
                    row(&mid - &h1, &a_even - &a_odd),
                    row(&mid + &h3, &b_even + &b_odd),
                    row(&mid - &h3, &b_even - &b_odd),
                ];
                header_d = Some(nat(&(&mid - &h3), "header distance")?);
                dim = 2 * m as u64 - 1;
                dual_d = 5;
            } else {
                let n = &nn;
                let c0 = p2(2 * mi) - q(5) * n * p2(mi - 1) + q(5) * n.pow(2) * p2(-mi) - p2(1 - 2 * mi) * n.pow(4)
                    + q(3) * n.pow(2)
                    - q(2) * n
                    - q(2);
                let a = -n.pow(4) * p2(-2 * mi) / q(3)
                    + (p2(-mi) * n.pow(2) + q(3) * n.pow(2) - p2(mi - 1) * n - q(2) * n) / q(6);
                let b = q(4) * n / q(3) * (p2(-2 * mi) * n.pow(3) - p2(1 - mi) * n - q(3) * n / q(2) + p2(mi) + &one);
                let mid = n / q(2);
                rows = vec![
                    row(mid.clone(), c0),
                    row(&mid + &h1, a.clone()),
                    row(&mid - &h1, a),
                    row(&mid + &h3, b.clone()),
                    row(&mid - &h3, b),
                    row(n.clone(), one.clone()),
                ];
                header_d = Some(nat(&(&mid - &h3), "header distance")?);
                dim = 2 * m as u64;
                dual_d = 6;
                claims.push(Claim::DualSpherePackingOptimal);
            }
            n = nn;
            notes.push(format!("length from W_f(lambda, 0) = {w}"));
        }
        TheoremId::AbPermNu0 | TheoremId::AbPermNu1 => {
            let nu = theorem.nu().unwrap() as i64;
            n = p2(mi - 1) - &one + q(nu);
            let base = p2(mi - 2);
            let h1 = p2_half(mi - 1)?;
            let h3 = p2_half(mi - 3)?;
            if nu == 0 {
                let a_even = p2(2 * mi - 5) - p2(mi - 4);
                let a_odd = p2_half(mi - 5)? - p2_half(3 * mi - 7)?;
                let b_odd = p2_half(3 * mi - 5)?;
                rows = vec![
                    row(base.clone(), q(3) * p2(2 * mi - 4) + p2(mi - 3) - &one),
                    row(&base + &h1, &a_even + &a_odd),
                    row(&base - &h1, &a_even - &a_odd),
                    row(&base + &h3, p2(2 * mi - 3) - &b_odd),
                    row(&base - &h3, p2(2 * mi - 3) + &b_odd),
                ];
                dim = 2 * m as u64 - 1;
                dual_d = 5;
            } else {
                let a = p2(2 * mi - 4) - p2(mi - 3);
                rows = vec![
                    row(base.clone(), q(3) * p2(2 * mi - 3) + p2(mi - 2) - q(2)),
                    row(&base + &h1, a.clone()),
                    row(&base - &h1, a),
                    row(&base + &h3, p2(2 * mi - 2)),
                    row(&base - &h3, p2(2 * mi - 2)),
                    row(p2(mi - 1), one.clone()),
                ];
                dim = 2 * m as u64;
                dual_d = 6;
                claims.push(Claim::DualSpherePackingOptimal);
            }
            header_d = Some(nat(&(&base - &h3), "header distance")?);
        }
        TheoremId::GoldSupportV2le | TheoremId::GoldSupportV2gt | TheoremId::GoldSupportHalf => {
            let k = need(params.k, "k", theorem)?;
            n = p2(mi - 1);
            let base = p2(mi - 2);
            match theorem {
                TheoremId::GoldSupportV2le => {
                    let l = m.gcd(&k) as i64;
                    let hi = p2_half(mi + l - 2)?;
                    let lo = p2_half(mi + l - 4)?;
                    let a = p2(2 * mi - 2 * l - 2) - p2(mi - l - 2);
                    let b = p2(2 * mi - l) - p2(2 * mi - 2 * l);
                    rows = vec![
                        row(
                            base.clone(),
                            p2(2 * mi) - p2(2 * mi - l + 1) + q(3) * p2(2 * mi - 2 * l - 1) + p2(mi - l - 1) - q(2),
                        ),
                        row(&base + &hi, a.clone()),
                        row(&base - &hi, a),
                        row(&base + &lo, b.clone()),
                        row(&base - &lo, b),
                        row(n.clone(), one.clone()),
                    ];
                    header_d = Some(nat(&(&base - &lo), "header distance")?);
                    dim = 2 * m as u64;
                    if l >= 2 {
                        dual_d = 4;
                    } else {
                        dual_d = 6;
                        claims.push(Claim::DualSpherePackingOptimal);
                    }
                }
                TheoremId::GoldSupportV2gt => {
                    let hi = p2_half(mi)?;
                    let lo = p2_half(mi - 2)?;
                    let a = (p2(2 * mi - 6) - p2(mi - 4)) / q(3);
                    let b = (q(11) * p2(2 * mi - 3) - p2(mi)) / q(6);
                    rows = vec![
                        row(base.clone(), q(17) * p2(2 * mi - 5) + q(3) * p2(mi - 3) - q(2)),
                        row(&base + &hi, a.clone()),
                        row(&base - &hi, a),
                        row(&base + &lo, b.clone()),
                        row(&base - &lo, b),
                        row(n.clone(), one.clone()),
                    ];
                    header_d = Some(nat(&(&base - &hi), "header distance")?);
                    dim = 2 * m as u64;
                    dual_d = 6;
                    claims.push(Claim::DualSpherePackingOptimal);
                }
                _ => {
                    let h = p2_half(mi - 2)?;
                    let a = p2_half(3 * mi - 4)? - p2(mi - 2);
                    rows = vec![
                        row(base.clone(), p2_half(3 * mi - 2)? + p2(mi - 1) - q(2)),
                        row(&base + &h, a.clone()),
                        row(&base - &h, a),
                        row(n.clone(), one.clone()),
                    ];
                    header_d = Some(nat(&(&base - &h), "header distance")?);
                    if m % 2 != 0 {
                        return Err(Error::Hypothesis(format!("dimension 3m/2 needs even m, got {m}")));
                    }
                    dim = 3 * m as u64 / 2;
                    dual_d = 4;
                    claims.push(Claim::DualSpherePackingOptimal);
                }
            }
        }
        TheoremId::PairSumSupport => {
            if m % 3 != 0 {
                return Err(Error::Hypothesis(format!("dimension 5m/3 needs 3 | m, got {m}")));
            }
            let s = mi / 3;
            n = p2(mi - 1);
            let base = p2(mi - 2);
            let h = p2(2 * s - 1);
            let a = p2(4 * s - 2) - p2(2 * s - 2);
            rows = vec![
                row(base.clone(), p2(5 * s) - p2(4 * s - 1) + p2(2 * s - 1) - q(2)),
                row(&base + &h, a.clone()),
                row(&base - &h, a),
                row(n.clone(), one.clone()),
            ];
            header_d = Some(nat(&(&base - &h), "header distance")?);
            dim = 5 * s as u64;
            dual_d = 4;
            claims.push(Claim::DualSpherePackingOptimal);
        }
        TheoremId::ReltraceSupport => {
            let k = need(params.k, "k", theorem)?;
            let ki = k as i64;
            let (vm, vk) = (v2(m as u64), v2(k as u64));
            let t = if vm > vk + 1 {
                p2_half(mi + 2 * ki - 2)?
            } else if vm == vk + 1 {
                p2_half(mi + 2 * ki - 4)?
            } else if vm == vk {
                p2_half(mi + ki - 4)?
            } else {
                return Err(Error::Hypothesis(format!("v2(m) = {vm} < v2(k) = {vk}")));
            };
            n = p2(mi - 1);
            let base = p2(mi - 2);
            let t2 = &t * &t;
            let a = p2(2 * mi - 4) * (p2(ki) - &one) / &t2;
            rows = vec![
                row(base.clone(), p2(mi + ki) - q(2) + p2(2 * mi - 3) * (&one - p2(ki)) / &t2),
                row(&base + &t, a.clone()),
                row(&base - &t, a),
                row(n.clone(), one.clone()),
            ];
            header_d = Some(nat(&(&base - &t), "header distance")?);
            dim = (m + k) as u64;
            dual_d = 4;
            claims.push(Claim::DualSpherePackingOptimal);
        }
        TheoremId::CycloCubicDiv3 | TheoremId::CycloCubicNdiv3 => {
            let t = need(params.t, "t", theorem)?;
            if t == 0 {
                return Err(Error::Hypothesis("t must be positive".into()));
            }
            let tq = q(t as i64);
            let big = p2(mi) - &one;
            let h = p2_half(mi)?;
            n = &big / &tq;
            if theorem == TheoremId::CycloCubicDiv3 {
                let c_many = (&tq - &one) * &big / &tq;
                let c_few = &big / &tq;
                rows = vec![
                    row((p2(mi) - q(2) - &h) / (q(2) * &tq), c_many.clone()),
                    row((p2(mi) + &h) / (q(2) * &tq), c_many),
                    row((p2(mi) - q(2) + (&tq - &one) * &h) / (q(2) * &tq), c_few.clone()),
                    row((p2(mi) - (&tq - &one) * &h) / (q(2) * &tq), c_few),
                    row(n.clone(), one.clone()),
                ];
                dim = m as u64 + 1;
                dual_d = 4;
                claims.push(Claim::DualSpherePackingOptimal);
            } else {
                let base = &big / (q(2) * &tq);
                let tt = q(2) * &tq;
                let st = q(6) * &tq;
                rows = vec![
                    row(&base - ((&tq - &one) * &h - &one) / &tt, &big / &tq),
                    row(&base + ((q(3) * &tq - &one) * &h - &one) / &st, q(2) * &big / &tq),
                    row((p2(mi) + &h) / &tt, (&tq - &one) * &big / &tq),
                    row(&base - (&h + &one) / &st, q(3) * (&tq - &one) * &big / &tq),
                    row(&base - ((q(3) * &tq + &one) * &h + &one) / &st, &big / &tq),
                    row(q(2) * &big / (q(3) * &tq), q(3)),
                ];
                dim = m as u64 + 2;
                dual_d = 3;
            }
        }
        TheoremId::CycloGoldClass => {
            let k = need(params.k, "k", theorem)?;
            if m % 2 != 0 {
                return Err(Error::Hypothesis(format!("dimension 3m/2 needs even m, got {m}")));
            }
            let (ki, hi) = (k as i64, mi / 2);
            let t = p2(ki) + &one;
            let t2 = &t * &t;
            let big = p2(mi) - &one;
            n = &big / &t;
            let pk1 = p2(ki) - &one;
            rows = vec![
                row(
                    (p2(mi - 1) + p2(hi - 1)) / &t,
                    p2(3 * ki) * (p2(hi) - &one) * (p2(mi) - p2(mi - 2 * ki) - p2(mi - 3 * ki) + p2(hi) - p2(hi - ki) + &one)
                        / (&t2 * &pk1),
                ),
                row(
                    (p2(mi - 1) - p2(hi + ki - 1)) / &t,
                    p2(ki) * &big * (p2(hi) + p2(hi - ki) + p2(hi - 2 * ki) + &one) / &t2,
                ),
                row((p2(mi - 1) + p2(hi + 2 * ki - 1)) / &t, (p2(hi - ki) - &one) * &big / (&t2 * &pk1)),
            ];
            header_d = Some(nat(&((p2(mi - 1) - p2(hi + ki - 1)) / &t), "header distance")?);
            dim = 3 * hi as u64;
            if k > 1 {
                dual_d = 3;
            } else if m != 6 {
                dual_d = 4;
                claims.push(Claim::DualSpherePackingOptimal);
            } else {
                dual_d = 5;
                notes.push("dual [21,12,5] is stated as optimal per best-known tables; recorded, not verified".into());
            }
        }
        TheoremId::CycloCubicRm => {
            if m % 2 != 0 {
                return Err(Error::Hypothesis(format!("m = {m} must be even")));
            }
            let hi = mi / 2;
            n = p2(hi) - &one;
            rows = vec![
                row(p2(hi - 1) - &one, n.clone()),
                row(p2(hi - 1), n.clone()),
                row(n.clone(), one.clone()),
            ];
            header_d = Some(nat(&(p2(hi - 1) - &one), "header distance")?);
            dim = hi as u64 + 1;
            dual_d = 4;
            stated_dual_k = Some(hi as u64 + 1);
            claims.push(Claim::GriesmerTight);
            claims.push(Claim::DualSpherePackingOptimal);
            notes.push(format!(
                "the stated dual dimension m/2+1 = {} is inconsistent with n - k; n - k is predicted",
                hi + 1
            ));
        }
    }

    let n = nat(&n, "length")?;
    if dim > n {
        return Err(Error::Hypothesis(format!("dimension {dim} exceeds length {n}")));
    }
    Ok(Prediction {
        theorem,
        n,
        k: dim,
        header_d,
        rows,
        dual: DualPrediction { n, k: n - dim, d: dual_d, stated_k: stated_dual_k },
        claims,
        notes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(theorem: TheoremId, m: u32, k: Option<u32>, t: Option<u64>, w: Option<i64>) -> PredictParams {
        PredictParams { theorem, m, k, t, walsh_at_lambda: w }
    }

    fn table(p: &Prediction) -> Vec<(u64, u64)> {
        p.table().unwrap().into_iter().map(|(w, c)| (w, c.try_into().unwrap())).collect()
    }

    #[test]
    fn theorem_ids_roundtrip() {
        for t in TheoremId::ALL {
            assert_eq!(t.as_str().parse::<TheoremId>().unwrap(), t);
            assert_eq!(serde_json::to_string(&t).unwrap(), format!("\"{}\"", t.as_str()));
        }
        assert!("nope".parse::<TheoremId>().is_err());
    }

    #[test]
    fn ab_levelset_examples() {
        // [56,14,20] with the hand-evaluated rows at n = 56, m = 7
        let p = predict(&params(TheoremId::AbLevelsetNu1, 7, None, None, Some(16))).unwrap();
        assert_eq!((p.n, p.k, p.min_distance()), (56, 14, Some(20)));
        assert_eq!(table(&p), vec![(20, 756), (24, 4095), (28, 6680), (32, 4095), (36, 756), (56, 1)]);
        assert_eq!((p.dual.n, p.dual.k, p.dual.d), (56, 42, 6));

        let p = predict(&params(TheoremId::AbLevelsetNu0, 7, None, None, Some(16))).unwrap();
        assert_eq!((p.n, p.k, p.min_distance()), (71, 13, Some(28)));
        assert!(p.total_defect().is_zero());
        assert!(predict(&params(TheoremId::AbLevelsetNu0, 7, None, None, Some(8))).is_err());
        assert!(predict(&params(TheoremId::AbLevelsetNu0, 7, None, None, None)).is_err());
    }

    #[test]
    fn ab_perm_rows() {
        let p = predict(&params(TheoremId::AbPermNu0, 5, None, None, None)).unwrap();
        assert_eq!(table(&p), vec![(4, 45), (6, 160), (8, 195), (10, 96), (12, 15)]);
        let p = predict(&params(TheoremId::AbPermNu0, 7, None, None, None)).unwrap();
        assert_eq!((p.n, p.k, p.min_distance()), (63, 13, Some(24)));
        assert_eq!(p.table().unwrap()[&32], BigUint::from(3u32 * 1024 + 16 - 1));
        let p = predict(&params(TheoremId::AbPermNu1, 7, None, None, None)).unwrap();
        assert_eq!((p.n, p.k, p.min_distance(), p.dual.k), (64, 14, Some(24), 50));
    }

    #[test]
    fn trace_support_tables() {
        let p = predict(&params(TheoremId::GoldSupportV2le, 5, Some(1), None, None)).unwrap();
        assert_eq!((p.n, p.k, p.min_distance()), (16, 10, Some(4)));
        assert_eq!(p.table().unwrap()[&8], BigUint::from(390u32));
        let p = predict(&params(TheoremId::GoldSupportV2gt, 6, Some(1), None, None)).unwrap();
        assert_eq!(table(&p), vec![(8, 20), (12, 928), (16, 2198), (20, 928), (24, 20), (32, 1)]);
        let p = predict(&params(TheoremId::GoldSupportHalf, 8, Some(4), None, None)).unwrap();
        assert_eq!(table(&p), vec![(56, 960), (64, 2174), (72, 960), (128, 1)]);
        let p = predict(&params(TheoremId::PairSumSupport, 9, None, None, None)).unwrap();
        assert_eq!((p.n, p.k, p.min_distance(), p.dual.k), (256, 15, Some(96), 241));
        let p = predict(&params(TheoremId::ReltraceSupport, 5, Some(1), None, None)).unwrap();
        assert_eq!((p.n, p.k, p.min_distance()), (16, 6, Some(6)));
    }

    #[test]
    fn cyclotomic_tables() {
        let p = predict(&params(TheoremId::CycloCubicDiv3, 6, None, Some(3), None)).unwrap();
        assert_eq!((p.n, p.k, p.min_distance(), p.dual.k), (21, 7, Some(8), 14));
        let p = predict(&params(TheoremId::CycloCubicNdiv3, 6, None, Some(1), None)).unwrap();
        assert_eq!(table(&p), vec![(26, 63), (32, 63), (34, 126), (42, 3)]);
        let p = predict(&params(TheoremId::CycloGoldClass, 6, Some(1), None, None)).unwrap();
        assert_eq!(table(&p), vec![(8, 210), (12, 280), (16, 21)]);
        assert_eq!(p.dual.d, 5);
        let p = predict(&params(TheoremId::CycloGoldClass, 10, Some(1), None, None)).unwrap();
        assert_eq!((p.n, p.k, p.min_distance()), (341, 15, Some(160)));
        let p = predict(&params(TheoremId::CycloCubicRm, 6, None, Some(9), None)).unwrap();
        assert_eq!(table(&p), vec![(3, 7), (4, 7), (7, 1)]);
        assert_eq!((p.dual.k, p.dual.stated_k), (3, Some(4)));
    }

    #[test]
    fn hypotheses_are_named() {
        let v = hypothesis_violations(&params(TheoremId::GoldSupportV2gt, 6, Some(2), None, None));
        assert!(v.iter().any(|s| s.contains("v2(m)")));
        assert!(v.iter().any(|s| s.contains("gcd")));
        let v = hypothesis_violations(&params(TheoremId::CycloCubicDiv3, 6, None, Some(1), None));
        assert!(v.iter().any(|s| s.contains("does not divide t")));
        assert!(hypothesis_violations(&params(TheoremId::CycloCubicDiv3, 10, None, Some(3), None)).is_empty());
        assert!(hypothesis_violations(&params(TheoremId::CycloCubicRm, 6, None, Some(9), None)).is_empty());
        assert!(!hypothesis_violations(&params(TheoremId::CycloCubicRm, 8, None, None, None)).is_empty());
        assert!(!hypothesis_violations(&params(TheoremId::AbPermNu0, 6, None, None, None)).is_empty());
    }
}
