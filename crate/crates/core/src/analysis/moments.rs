use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::codegen::WeightDistribution;

use super::exact::{p2, q};

/// Residuals of the first five Pless power moments and, when
/// `A_1^perp = ... = A_4^perp = 0`, the value of `A_5^perp` forced by the
/// sixth.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PlessCheck {
    #[serde(serialize_with = "super::exact::ser_rationals")]
    pub residuals: Vec<BigRational>,
    #[serde(serialize_with = "super::exact::ser_opt_rational")]
    pub solved_a5_perp: Option<BigRational>,
}

impl PlessCheck {
    pub fn all_zero(&self) -> bool {
        self.residuals.iter().all(Zero::is_zero)
    }
}

fn power_sum(wd: &WeightDistribution, r: u32) -> BigRational {
    let s: BigInt = wd
        .counts()
        .iter()
        .enumerate()
        .map(|(i, a)| BigInt::from(a.clone()) * BigInt::from(i).pow(r))
        .sum();
    BigRational::from_integer(s)
}

/// Evaluates the moment identities on `wd` (an `[n, k]` code) given
/// `dual_low = [A_1^perp, A_2^perp, A_3^perp, A_4^perp]`; missing entries are
/// taken as zero. A residual is `lhs - rhs`.
pub fn pless_check(wd: &WeightDistribution, k: usize, dual_low: &[BigUint]) -> PlessCheck {
    let n = q(wd.n() as i64);
    let a = |j: usize| -> BigRational {
        dual_low.get(j - 1).map(|x| BigRational::from_integer(BigInt::from(x.clone()))).unwrap_or_else(BigRational::zero)
    };
    let (a1, a2, a3, a4) = (a(1), a(2), a(3), a(4));
    let k = k as i64;
    let one = BigRational::one();
    let rhs = [
        p2(k),
        p2(k - 1) * (&n - &a1),
        p2(k - 2) * (&n * (&n + &one) - q(2) * &n * &a1 + q(2) * &a2),
        p2(k - 3)
            * (&n * &n * (&n + q(3)) - (q(3) * &n * &n + q(3) * &n - q(2)) * &a1 + q(6) * &n * &a2
                - q(6) * &a3),
        p2(k - 4)
            * (&n * (&n + &one) * (&n * &n + q(5) * &n - q(2))
                - q(4) * &n * (&n * &n + q(3) * &n - q(2)) * &a1
                + q(4) * (q(3) * &n * &n + q(3) * &n - q(4)) * &a2
                - q(24) * &n * &a3
                + q(24) * &a4),
    ];
    let residuals: Vec<BigRational> = rhs.iter().enumerate().map(|(r, v)| power_sum(wd, r as u32) - v).collect();

    let low_zero = [&a1, &a2, &a3, &a4].iter().all(|x| x.is_zero());
    let solved_a5_perp = low_zero.then(|| {
        let poly = n.pow(5) + q(10) * n.pow(4) + q(15) * n.pow(3) - q(10) * n.pow(2);
        (p2(k - 5) * poly - power_sum(wd, 5)) / (q(120) * p2(k - 5))
    });
    PlessCheck { residuals, solved_a5_perp }
}
