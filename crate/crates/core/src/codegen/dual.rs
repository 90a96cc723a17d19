use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

use super::weights::{pow2, WeightDistribution};

/// `K_j(i) = sum_s (-1)^s C(i, s) C(n - i, j - s)`, straight from the
/// definition.
pub fn krawtchouk(n: usize, j: usize, i: usize) -> BigInt {
    let mut acc = BigInt::zero();
    for s in 0..=j.min(i) {
        if j - s > n - i {
            continue;
        }
        let term = BigInt::from(binomial(i, s) * binomial(n - i, j - s));
        if s % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

/// Exact binomial coefficient.
pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::from(1u32);
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// `K_0(i), K_1(i), ...` by the three-term recurrence
/// `(j + 1) K_{j+1} = (n - 2i) K_j - (n - j + 1) K_{j-1}`.
struct KrawtchoukColumn {
    n: i64,
    i: i64,
    j: i64,
    prev: BigInt,
    cur: BigInt,
}

impl KrawtchoukColumn {
    fn new(n: usize, i: usize) -> Self {
        KrawtchoukColumn {
            n: n as i64,
            i: i as i64,
            j: 0,
            prev: BigInt::zero(),
            cur: BigInt::from(1),
        }
    }

    /// Returns `K_j(i)` for the current `j`, then advances.
    fn next_value(&mut self) -> BigInt {
        let out = self.cur.clone();
        let (n, i, j) = (self.n, self.i, self.j);
        let num = BigInt::from(n - 2 * i) * &self.cur - BigInt::from(n - j + 1) * &self.prev;
        let (q, r) = num.div_rem(&BigInt::from(j + 1));
        debug_assert!(r.is_zero(), "Krawtchouk recurrence must divide exactly");
        self.prev = std::mem::replace(&mut self.cur, q);
        self.j += 1;
        out
    }
}

/// `K_0(i), K_1(i), ..., K_n(i)` via the recurrence.
pub fn krawtchouk_column(n: usize, i: usize) -> impl Iterator<Item = BigInt> {
    let mut col = KrawtchoukColumn::new(n, i);
    (0..=n).map(move |_| col.next_value())
}

/// Incremental dual counts `A_0^perp, A_1^perp, ...` of an `[n, k]` code.
pub struct DualCounts<'a> {
    wd: &'a WeightDistribution,
    k: usize,
    columns: Vec<(BigInt, KrawtchoukColumn)>,
    j: usize,
}

impl<'a> DualCounts<'a> {
    pub fn new(wd: &'a WeightDistribution, k: usize) -> Result<Self> {
        let total = wd.total();
        if total != pow2(k) {
            return Err(Error::MacWilliams(format!("sum of A_i is {total}, expected 2^{k}")));
        }
        let n = wd.n();
        let columns = wd
            .support()
            .into_iter()
            .map(|(i, a)| (BigInt::from(a), KrawtchoukColumn::new(n, i)))
            .collect();
        Ok(DualCounts { wd, k, columns, j: 0 })
    }
}

impl Iterator for DualCounts<'_> {
    type Item = Result<BigUint>;

    fn next(&mut self) -> Option<Result<BigUint>> {
        if self.j > self.wd.n() {
            return None;
        }
        let j = self.j;
        self.j += 1;
        let sum: BigInt = self.columns.iter_mut().map(|(a, col)| &*a * col.next_value()).sum();
        let (q, r) = sum.div_rem(&BigInt::from(pow2(self.k)));
        if !r.is_zero() || q.is_negative() {
            return Some(Err(Error::MacWilliams(format!(
                "A_{j}^perp = {sum} / 2^{} is not a nonnegative integer",
                self.k
            ))));
        }
        Some(Ok(q.to_biguint().expect("nonnegative")))
    }
}

/// Full dual weight distribution via the MacWilliams transform.
pub fn macwilliams_dual(wd: &WeightDistribution, k: usize) -> Result<WeightDistribution> {
    let counts = DualCounts::new(wd, k)?.collect::<Result<Vec<_>>>()?;
    let dual = WeightDistribution::from_counts(counts);
    let n = wd.n();
    if k > n || dual.total() != pow2(n - k) {
        return Err(Error::MacWilliams(format!("dual counts do not sum to 2^{}", n as i64 - k as i64)));
    }
    Ok(dual)
}

/// Smallest `j > 0` with `A_j^perp > 0`, stopping at the first hit. `None`
/// when the dual is the zero code.
pub fn dual_min_distance(wd: &WeightDistribution, k: usize) -> Result<Option<usize>> {
    for (j, c) in DualCounts::new(wd, k)?.enumerate() {
        let c = c?;
        if j > 0 && !c.is_zero() {
            return Ok(Some(j));
        }
    }
    Ok(None)
}

/// `A_1^perp..A_upto^perp`, computed incrementally.
pub fn dual_prefix(wd: &WeightDistribution, k: usize, upto: usize) -> Result<Vec<BigUint>> {
    DualCounts::new(wd, k)?.skip(1).take(upto).collect()
}

/// Signed view used when mixing counts with moment identities.
pub fn signed(x: &BigUint) -> BigInt {
    BigInt::from_biguint(Sign::Plus, x.clone())
}
