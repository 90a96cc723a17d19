use num_bigint::BigUint;
use num_traits::Zero;

use crate::codegen::{binomial, pow2};

/// Sphere packing: `2^n >= 2^k * sum_{i <= (d-1)/2} C(n, i)`.
pub fn sphere_packing_ok(n: usize, k: usize, d: usize) -> bool {
    if k > n {
        return false;
    }
    let radius = d.saturating_sub(1) / 2;
    let volume: BigUint = (0..=radius.min(n)).map(|i| binomial(n, i)).fold(BigUint::zero(), |a, b| a + b);
    volume <= pow2(n - k)
}

/// Whether `[n, k, d]` meets the sphere packing bound while the next
/// admissible distance does not. The next distance is `d + 2` when the code
/// is known to have only even weights, otherwise `d + 1`.
pub fn sphere_packing_distance_optimal(n: usize, k: usize, d: usize, even_weight: bool) -> bool {
    let step = if even_weight { 2 } else { 1 };
    sphere_packing_ok(n, k, d) && !sphere_packing_ok(n, k, d + step)
}

/// `sum_{i < k} ceil(d / 2^i)`.
pub fn griesmer_sum(k: usize, d: usize) -> usize {
    (0..k).map(|i| if i >= usize::BITS as usize { 1.min(d) } else { d.div_ceil(1usize << i) }).sum()
}

pub fn griesmer_ok(n: usize, k: usize, d: usize) -> bool {
    n >= griesmer_sum(k, d)
}

/// Whether `[n, k, d]` meets the Griesmer bound with equality.
pub fn griesmer_tight(n: usize, k: usize, d: usize) -> bool {
    n == griesmer_sum(k, d)
}
