//! Table-driven arithmetic in GF(2^m) for 2 <= m <= 20.
//!
//! Elements are encoded as m-bit integers in the polynomial basis of the
//! modulus: bit `i` is the coefficient of `x^i`. Multiplication goes through
//! discrete log/exp tables built once per context; the carry-less routine
//! [`clmul_mod`] is kept as the reference path the tables are built from.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign};
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const MIN_DEGREE: u32 = 2;
pub const MAX_DEGREE: u32 = 20;

/// Returned by [`v2`] for `n = 0`.
pub const V2_INFINITY: u32 = u32::MAX;

/// An element of GF(2^m), encoded in the polynomial basis of its context.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FieldElement(pub u32);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    #[inline]
    pub fn bits(self) -> u32 {
        self.0
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl Add for FieldElement {
    type Output = FieldElement;

    #[inline]
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn add(self, rhs: FieldElement) -> FieldElement {
        FieldElement(self.0 ^ rhs.0)
    }
}

impl AddAssign for FieldElement {
    #[inline]
    #[allow(clippy::suspicious_op_assign_impl)]
    fn add_assign(&mut self, rhs: FieldElement) {
        self.0 ^= rhs.0;
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:#x}", self.0)
    }
}

/// Degree of a nonzero polynomial over GF(2); `None` for zero.
pub fn poly_degree(p: u64) -> Option<u32> {
    if p == 0 {
        None
    } else {
        Some(63 - p.leading_zeros())
    }
}

/// Remainder of `a` modulo `b` over GF(2).
pub fn poly_rem(mut a: u64, b: u64) -> u64 {
    let db = poly_degree(b).expect("division by the zero polynomial");
    while let Some(da) = poly_degree(a) {
        if da < db {
            break;
        }
        a ^= b << (da - db);
    }
    a
}

/// Irreducibility by trial division with every polynomial of degree
/// `1..=deg/2`.
pub fn is_irreducible(p: u64) -> bool {
    let deg = match poly_degree(p) {
        Some(d) if d >= 1 => d,
        _ => return false,
    };
    for d in 1..=deg / 2 {
        for q in (1u64 << d)..(1u64 << (d + 1)) {
            if poly_rem(p, q) == 0 {
                return false;
            }
        }
    }
    true
}

/// Lexicographically smallest irreducible polynomial of degree `m`.
pub fn smallest_irreducible(m: u32) -> u64 {
    ((1u64 << m) + 1..1u64 << (m + 1))
        .find(|&p| is_irreducible(p))
        .expect("irreducible polynomials exist in every degree")
}

/// Carry-less product of `a` and `b` reduced modulo `modulus` (degree `m`).
pub fn clmul_mod(a: u32, b: u32, modulus: u64, m: u32) -> u32 {
    let mut acc: u64 = 0;
    let mut a = a as u64;
    let mut b = b;
    while b != 0 {
        if b & 1 == 1 {
            acc ^= a;
        }
        b >>= 1;
        a <<= 1;
        if a >> m & 1 == 1 {
            a ^= modulus;
        }
    }
    acc as u32
}

fn clmul_pow(x: u32, mut e: u64, modulus: u64, m: u32) -> u32 {
    let mut base = x;
    let mut acc = 1u32;
    while e > 0 {
        if e & 1 == 1 {
            acc = clmul_mod(acc, base, modulus, m);
        }
        base = clmul_mod(base, base, modulus, m);
        e >>= 1;
    }
    acc
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// 2-adic valuation; `v2(0)` is [`V2_INFINITY`].
pub fn v2(n: u64) -> u32 {
    if n == 0 {
        V2_INFINITY
    } else {
        n.trailing_zeros()
    }
}

/// A concrete realization of GF(2^m). Immutable once built.
#[derive(Clone)]
pub struct FieldCtx {
    m: u32,
    modulus: u64,
    gamma: FieldElement,
    /// `exp[i] = gamma^i` for `0 <= i < 2 * (2^m - 1)`.
    exp: Vec<u32>,
    /// `log[x]` for nonzero `x`; `log[0]` is unused.
    log: Vec<u32>,
    /// Bit `i` is `Tr(x^i)`, so `Tr(y) = parity(y & trace_mask)`.
    trace_mask: u32,
}

impl fmt::Debug for FieldCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldCtx")
            .field("m", &self.m)
            .field("modulus", &format_args!("{:#b}", self.modulus))
            .field("gamma", &self.gamma)
            .finish()
    }
}

impl FieldCtx {
    /// Field with the default (smallest irreducible) modulus.
    pub fn new(m: u32) -> Result<Self> {
        Self::with_modulus(m, None)
    }

    /// Builds GF(2^m) over `modulus`, or over the smallest irreducible
    /// degree-`m` polynomial when `modulus` is `None`. The primitive element is
    /// the smallest encoding of full multiplicative order.
    pub fn with_modulus(m: u32, modulus: Option<u64>) -> Result<Self> {
        if !(MIN_DEGREE..=MAX_DEGREE).contains(&m) {
            return Err(Error::DegreeOutOfRange(m));
        }
        let modulus = match modulus {
            None => smallest_irreducible(m),
            Some(p) => {
                if poly_degree(p) != Some(m) {
                    return Err(Error::BadModulus {
                        m,
                        modulus: p,
                        reason: format!("degree is {:?}", poly_degree(p)),
                    });
                }
                if !is_irreducible(p) {
                    return Err(Error::BadModulus { m, modulus: p, reason: "reducible".into() });
                }
                p
            }
        };

        let order = (1u64 << m) - 1;
        let cofactors: Vec<u64> = prime_factors(order).into_iter().map(|p| order / p).collect();
        let gamma = (2..1u32 << m)
            .find(|&g| cofactors.iter().all(|&c| clmul_pow(g, c, modulus, m) != 1))
            .expect("the multiplicative group is cyclic");

        let order = order as usize;
        let mut exp = vec![0u32; 2 * order];
        let mut log = vec![0u32; 1 << m];
        let mut x = 1u32;
        for i in 0..order {
            exp[i] = x;
            exp[i + order] = x;
            log[x as usize] = i as u32;
            x = clmul_mod(x, gamma, modulus, m);
        }
        debug_assert_eq!(x, 1);

        let mut ctx = FieldCtx {
            m,
            modulus,
            gamma: FieldElement(gamma),
            exp,
            log,
            trace_mask: 0,
        };
        ctx.trace_mask = (0..m)
            .map(|i| ctx.trace_slow(FieldElement(1 << i)) << i)
            .fold(0, |acc, b| acc | b);
        Ok(ctx)
    }

    #[inline]
    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn gamma(&self) -> FieldElement {
        self.gamma
    }

    /// Number of field elements, `2^m`.
    #[inline]
    pub fn size(&self) -> usize {
        1 << self.m
    }

    /// Order of the multiplicative group, `2^m - 1`.
    #[inline]
    pub fn order(&self) -> u64 {
        (1u64 << self.m) - 1
    }

    pub fn contains(&self, x: FieldElement) -> bool {
        (x.0 as usize) < self.size()
    }

    /// All elements in ascending encoding order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.size() as u32).map(FieldElement)
    }

    /// The nonzero elements in ascending encoding order.
    pub fn nonzero(&self) -> impl Iterator<Item = FieldElement> {
        (1..self.size() as u32).map(FieldElement)
    }

    /// The polynomial basis `{x^i}`, i.e. the single-bit encodings.
    pub fn basis(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.m).map(|i| FieldElement(1 << i))
    }

    #[inline]
    pub fn mul(&self, x: FieldElement, y: FieldElement) -> FieldElement {
        if x.0 == 0 || y.0 == 0 {
            return FieldElement::ZERO;
        }
        let i = self.log[x.0 as usize] + self.log[y.0 as usize];
        FieldElement(self.exp[i as usize])
    }

    #[inline]
    pub fn square(&self, x: FieldElement) -> FieldElement {
        self.mul(x, x)
    }

    pub fn inv(&self, x: FieldElement) -> Option<FieldElement> {
        if x.is_zero() {
            return None;
        }
        let l = self.log[x.0 as usize] as u64;
        Some(FieldElement(self.exp[((self.order() - l) % self.order()) as usize]))
    }

    /// `x^e` with `0^0 = 1`. The exponent is reduced modulo `2^m - 1` for
    /// nonzero `x`.
    #[inline]
    pub fn pow(&self, x: FieldElement, e: u64) -> FieldElement {
        if e == 0 {
            return FieldElement::ONE;
        }
        if x.is_zero() {
            return FieldElement::ZERO;
        }
        let order = self.order();
        let l = self.log[x.0 as usize] as u64;
        // l < 2^20 and e % order < 2^20, so the product fits.
        let idx = (l * (e % order)) % order;
        FieldElement(self.exp[idx as usize])
    }

    /// `gamma^i` for any integer `i >= 0`.
    #[inline]
    pub fn gamma_pow(&self, i: u64) -> FieldElement {
        FieldElement(self.exp[(i % self.order()) as usize])
    }

    /// Discrete logarithm base gamma, `None` for zero.
    pub fn log(&self, x: FieldElement) -> Option<u64> {
        if x.is_zero() {
            None
        } else {
            Some(self.log[x.0 as usize] as u64)
        }
    }

    /// Absolute trace `Tr(x) = x + x^2 + ... + x^(2^(m-1))`, as 0 or 1.
    #[inline]
    pub fn trace(&self, x: FieldElement) -> u32 {
        (x.0 & self.trace_mask).count_ones() & 1
    }

    /// Bit `i` of the result is `Tr(e_i * y)` for the polynomial basis `e_i`.
    /// This is the linear functional `x -> Tr(y x)` written as a mask on the
    /// coordinates of `x`.
    pub fn trace_functional(&self, y: FieldElement) -> u32 {
        self.basis()
            .enumerate()
            .map(|(i, e)| self.trace(self.mul(e, y)) << i)
            .fold(0, |acc, b| acc | b)
    }

    /// `trace_functional(y)` for every `y`, indexed by encoding.
    pub fn trace_functional_table(&self) -> Vec<u32> {
        let basis: Vec<u32> = self.basis().map(|e| self.trace_functional(e)).collect();
        let mut table = vec![0u32; self.size()];
        for y in 1..self.size() {
            let low = y.trailing_zeros() as usize;
            table[y] = table[y & (y - 1)] ^ basis[low];
        }
        table
    }

    fn trace_slow(&self, x: FieldElement) -> u32 {
        let mut acc = FieldElement::ZERO;
        let mut y = x;
        for _ in 0..self.m {
            acc += y;
            y = FieldElement(clmul_mod(y.0, y.0, self.modulus, self.m));
        }
        debug_assert!(acc.0 <= 1);
        acc.0
    }

    /// Relative trace `Tr_k^m(x) = sum_{i < m/k} x^(2^(k i))`.
    pub fn rel_trace(&self, k: u32, x: FieldElement) -> Result<FieldElement> {
        if k == 0 || !self.m.is_multiple_of(k) {
            return Err(Error::NotDivisor { k, m: self.m });
        }
        let mut acc = FieldElement::ZERO;
        let mut y = x;
        for _ in 0..self.m / k {
            acc += y;
            y = self.frobenius(y, k);
        }
        Ok(acc)
    }

    /// `x^(2^j)`.
    #[inline]
    pub fn frobenius(&self, x: FieldElement, j: u32) -> FieldElement {
        let mut y = x;
        for _ in 0..j % self.m {
            y = self.square(y);
        }
        y
    }

    /// Whether `x` lies in the subfield GF(2^k) (requires `k | m`).
    pub fn in_subfield(&self, k: u32, x: FieldElement) -> bool {
        self.m.is_multiple_of(k) && self.frobenius(x, k) == x
    }
}

/// Overrides of the default modulus per degree, loaded from TOML:
///
/// ```toml
/// [moduli]
/// 7 = 0b10001001   # x^7 + x^3 + 1
/// 8 = 0x11d
/// ```
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldConfig {
    #[serde(default)]
    pub moduli: BTreeMap<String, u64>,
}

impl FieldConfig {
    pub fn from_toml_str(text: &str) -> Result<Self> {
        let cfg: FieldConfig = toml::from_str(text).map_err(|e| Error::Config(e.to_string()))?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let text = std::fs::read_to_string(path.as_ref()).map_err(|e| {
            Error::Config(format!("cannot read {}: {e}", path.as_ref().display()))
        })?;
        Self::from_toml_str(&text)
    }

    fn validate(&self) -> Result<()> {
        for (key, &modulus) in &self.moduli {
            let m: u32 = key
                .parse()
                .map_err(|_| Error::Config(format!("degree key {key:?} is not an integer")))?;
            if !(MIN_DEGREE..=MAX_DEGREE).contains(&m) {
                return Err(Error::Config(format!("degree {m} outside 2..=20")));
            }
            if poly_degree(modulus) != Some(m) || !is_irreducible(modulus) {
                return Err(Error::Config(format!(
                    "modulus {modulus:#b} for degree {m} is not an irreducible degree-{m} polynomial"
                )));
            }
        }
        Ok(())
    }

    pub fn modulus_for(&self, m: u32) -> Option<u64> {
        self.moduli.get(&m.to_string()).copied()
    }

    pub fn field(&self, m: u32) -> Result<FieldCtx> {
        FieldCtx::with_modulus(m, self.modulus_for(m))
    }
}
