use crate::boolfunc::FunctionSpec;
use crate::error::Result;
use crate::gf2m::{FieldCtx, FieldElement};

use super::position::{build_position_set, PositionSet, Recipe};

/// Number of 64-bit words holding `n` bits.
#[inline]
pub fn words_for(n: usize) -> usize {
    n.div_ceil(64)
}

#[inline]
pub fn get_bit(v: &[u64], j: usize) -> bool {
    v[j / 64] >> (j % 64) & 1 == 1
}

#[inline]
pub fn set_bit(v: &mut [u64], j: usize) {
    v[j / 64] |= 1 << (j % 64);
}

#[inline]
pub fn xor_into(acc: &mut [u64], row: &[u64]) {
    for (a, r) in acc.iter_mut().zip(row) {
        *a ^= r;
    }
}

#[inline]
pub fn popcount(v: &[u64]) -> usize {
    v.iter().map(|w| w.count_ones() as usize).sum()
}

fn lowest_bit(v: &[u64]) -> Option<usize> {
    v.iter()
        .enumerate()
        .find(|(_, w)| **w != 0)
        .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
}

/// The all-one word vector of length `n`.
pub fn all_one(n: usize) -> Vec<u64> {
    let mut v = vec![u64::MAX; words_for(n)];
    if !n.is_multiple_of(64) {
        *v.last_mut().unwrap() = (1u64 << (n % 64)) - 1;
    }
    v
}

/// A binary linear code held as a reduced row-echelon generator matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinaryLinearCode {
    n: usize,
    /// Rows in reduced echelon form; `pivots[i]` is the lowest set bit of
    /// `rows[i]` and no other row has that bit.
    rows: Vec<Vec<u64>>,
    pivots: Vec<usize>,
    all_one: bool,
}

impl BinaryLinearCode {
    /// Row space of `spanning`, each a packed vector of `n` bits.
    pub fn from_spanning_rows(n: usize, spanning: impl IntoIterator<Item = Vec<u64>>) -> Self {
        let w = words_for(n);
        let mut rows: Vec<Vec<u64>> = Vec::new();
        let mut pivots: Vec<usize> = Vec::new();
        for mut v in spanning {
            assert_eq!(v.len(), w, "row length does not match n");
            for (r, &p) in rows.iter().zip(&pivots) {
                if get_bit(&v, p) {
                    xor_into(&mut v, r);
                }
            }
            if let Some(p) = lowest_bit(&v) {
                for r in rows.iter_mut() {
                    if get_bit(r, p) {
                        xor_into(r, &v);
                    }
                }
                rows.push(v);
                pivots.push(p);
            }
        }
        let mut order: Vec<usize> = (0..rows.len()).collect();
        order.sort_by_key(|&i| pivots[i]);
        let rows: Vec<Vec<u64>> = order.iter().map(|&i| rows[i].clone()).collect();
        let pivots: Vec<usize> = order.iter().map(|&i| pivots[i]).collect();
        let mut code = BinaryLinearCode { n, rows, pivots, all_one: false };
        code.all_one = n > 0 && code.contains(&all_one(n));
        code
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<u64>] {
        &self.rows
    }

    /// Whether the all-one vector is a codeword.
    pub fn is_self_complementary(&self) -> bool {
        self.all_one
    }

    /// Membership test by reduction against the echelon basis.
    pub fn contains(&self, v: &[u64]) -> bool {
        let mut v = v.to_vec();
        for (r, &p) in self.rows.iter().zip(&self.pivots) {
            if get_bit(&v, p) {
                xor_into(&mut v, r);
            }
        }
        v.iter().all(|&w| w == 0)
    }

    /// The dual code, from the standard parity-check construction on the
    /// reduced echelon form.
    pub fn dual(&self) -> BinaryLinearCode {
        let w = words_for(self.n);
        let mut is_pivot = vec![false; self.n];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        let checks = (0..self.n).filter(|&c| !is_pivot[c]).map(|c| {
            let mut h = vec![0u64; w];
            set_bit(&mut h, c);
            for (r, &p) in self.rows.iter().zip(&self.pivots) {
                if get_bit(r, c) {
                    set_bit(&mut h, p);
                }
            }
            h
        });
        BinaryLinearCode::from_spanning_rows(self.n, checks.collect::<Vec<_>>())
    }

    /// Keeps only coordinates `cols` (in the given order).
    pub fn puncture(&self, cols: &[usize]) -> BinaryLinearCode {
        let w = words_for(cols.len());
        let rows = self.rows.iter().map(|r| {
            let mut v = vec![0u64; w];
            for (j, &c) in cols.iter().enumerate() {
                if get_bit(r, c) {
                    set_bit(&mut v, j);
                }
            }
            v
        });
        BinaryLinearCode::from_spanning_rows(cols.len(), rows.collect::<Vec<_>>())
    }

    /// Rows as 0/1 strings, for reports.
    pub fn generator_strings(&self) -> Vec<String> {
        self.rows
            .iter()
            .map(|r| (0..self.n).map(|j| if get_bit(r, j) { '1' } else { '0' }).collect())
            .collect()
    }
}

/// The `2m` spanning rows `(Tr(e_i f(d_j)))_j` and `(Tr(e_i d_j))_j`, in
/// that order, for the polynomial basis `e_i`. The codeword `c(a, b)` is the
/// sum of the rows selected by the coordinates of `a` and then `b`.
pub fn spanning_rows(ctx: &FieldCtx, f: &FunctionSpec, d: &PositionSet) -> Result<Vec<Vec<u64>>> {
    let values = f.value_table(ctx)?;
    let n = d.len();
    let w = words_for(n);
    let masks: Vec<u32> = ctx.basis().map(|e| ctx.trace_functional(e)).collect();
    let mut rows = vec![vec![0u64; w]; 2 * ctx.m() as usize];
    for (j, x) in d.elements().iter().enumerate() {
        let fx = values[x.0 as usize].0;
        for (i, &mask) in masks.iter().enumerate() {
            if (fx & mask).count_ones() & 1 == 1 {
                set_bit(&mut rows[i], j);
            }
            if (x.0 & mask).count_ones() & 1 == 1 {
                set_bit(&mut rows[masks.len() + i], j);
            }
        }
    }
    Ok(rows)
}

/// The punctured code `{(Tr(a f(x) + b x))_{x in D}}`.
pub fn build_code(ctx: &FieldCtx, f: &FunctionSpec, d: &PositionSet) -> Result<BinaryLinearCode> {
    Ok(BinaryLinearCode::from_spanning_rows(d.len(), spanning_rows(ctx, f, d)?))
}

/// `c(a, b)` evaluated coordinate by coordinate.
pub fn evaluate_codeword(
    ctx: &FieldCtx,
    f: &FunctionSpec,
    d: &PositionSet,
    a: FieldElement,
    b: FieldElement,
) -> Result<Vec<u64>> {
    let mut v = vec![0u64; words_for(d.len())];
    for (j, &x) in d.elements().iter().enumerate() {
        if ctx.trace(ctx.mul(a, f.eval(ctx, x)?) + ctx.mul(b, x)) == 1 {
            set_bit(&mut v, j);
        }
    }
    Ok(v)
}

/// Builds the code on all of GF(2^m)* (coordinates by ascending encoding)
/// and deletes every coordinate outside `keep`.
pub fn puncture_full_code(ctx: &FieldCtx, f: &FunctionSpec, keep: &PositionSet) -> Result<BinaryLinearCode> {
    let whole = build_position_set(ctx, &Recipe::Whole)?;
    let full = build_code(ctx, f, &whole)?;
    let cols: Vec<usize> = keep.elements().iter().map(|x| x.0 as usize - 1).collect();
    Ok(full.puncture(&cols))
}
