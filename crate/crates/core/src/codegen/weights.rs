use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};

use super::code::{popcount, words_for, xor_into, BinaryLinearCode};

/// Limits on exhaustive enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Guards {
    pub max_k: usize,
    pub max_n: usize,
}

impl Default for Guards {
    fn default() -> Self {
        Guards { max_k: 26, max_n: 4096 }
    }
}

impl Guards {
    pub fn check(&self, n: usize, k: usize) -> Result<()> {
        if k > self.max_k {
            return Err(Error::ResourceGuard(format!(
                "dimension {k} exceeds the enumeration limit {}",
                self.max_k
            )));
        }
        if n > self.max_n {
            return Err(Error::ResourceGuard(format!(
                "length {n} exceeds the enumeration limit {}",
                self.max_n
            )));
        }
        Ok(())
    }
}

/// Exact counts `A_0..A_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightDistribution {
    counts: Vec<BigUint>,
}

impl WeightDistribution {
    /// From a dense count vector of length `n + 1`.
    pub fn from_counts(counts: Vec<BigUint>) -> Self {
        assert!(!counts.is_empty(), "weight distribution needs n + 1 >= 1 entries");
        WeightDistribution { counts }
    }

    /// From sparse `(weight, count)` pairs; absent weights count zero.
    pub fn from_pairs(n: usize, pairs: impl IntoIterator<Item = (usize, BigUint)>) -> Self {
        let mut counts = vec![BigUint::zero(); n + 1];
        for (w, c) in pairs {
            counts[w] += c;
        }
        WeightDistribution { counts }
    }

    pub fn n(&self) -> usize {
        self.counts.len() - 1
    }

    pub fn count(&self, w: usize) -> &BigUint {
        &self.counts[w]
    }

    pub fn counts(&self) -> &[BigUint] {
        &self.counts
    }

    pub fn total(&self) -> BigUint {
        self.counts.iter().sum()
    }

    /// Weights with nonzero count, including 0.
    pub fn support(&self) -> BTreeMap<usize, BigUint> {
        self.counts
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(w, c)| (w, c.clone()))
            .collect()
    }

    /// Least positive weight present.
    pub fn min_distance(&self) -> Result<usize> {
        (1..self.counts.len())
            .find(|&w| !self.counts[w].is_zero())
            .ok_or_else(|| Error::Degenerate("the zero code has no minimum distance".into()))
    }

    /// Number of distinct nonzero weights.
    pub fn weight_count(&self) -> usize {
        self.counts.iter().skip(1).filter(|c| !c.is_zero()).count()
    }

    /// `weight,count` rows for the nonzero entries, with a header.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("weight,count\n");
        for (w, c) in self.support() {
            writeln!(out, "{w},{c}").unwrap();
        }
        out
    }

    /// Counts as `u64`, if they all fit.
    pub fn to_u64(&self) -> Option<Vec<u64>> {
        self.counts.iter().map(|c| c.to_u64()).collect()
    }
}

/// Visits every codeword in Gray-code order and tallies Hamming weights.
///
/// The message space is cut into contiguous Gray ranges. Each worker seeds
/// its accumulator with the codeword at the start of its range, then XORs
/// one generator row per step.
pub fn enumerate_weights(code: &BinaryLinearCode, guards: &Guards) -> Result<WeightDistribution> {
    let n = code.n();
    let k = code.k();
    guards.check(n, k)?;
    let rows = code.rows();
    let w = words_for(n);
    let total: u64 = 1u64 << k;
    let chunks: u64 = (rayon::current_num_threads() as u64 * 8).next_power_of_two().min(total);
    let span = total / chunks;

    let hist = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let start = c * span;
            let end = start + span;
            let mut acc = vec![0u64; w];
            let g = start ^ (start >> 1);
            for (i, r) in rows.iter().enumerate() {
                if g >> i & 1 == 1 {
                    xor_into(&mut acc, r);
                }
            }
            let mut hist = vec![0u64; n + 1];
            hist[popcount(&acc)] += 1;
            for i in start + 1..end {
                xor_into(&mut acc, &rows[i.trailing_zeros() as usize]);
                hist[popcount(&acc)] += 1;
            }
            hist
        })
        .reduce(
            || vec![0u64; n + 1],
            |mut a, b| {
                for (x, y) in a.iter_mut().zip(b) {
                    *x += y;
                }
                a
            },
        );
    Ok(WeightDistribution::from_counts(hist.into_iter().map(BigUint::from).collect()))
}

/// `2^e` as a big integer.
pub fn pow2(e: usize) -> BigUint {
    BigUint::one() << e
}
