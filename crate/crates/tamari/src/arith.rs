//! Exact big-integer helpers for the counting formulas.

use num_bigint::BigUint;

pub(crate) fn factorial(n: u64) -> BigUint {
    (1..=n).map(BigUint::from).product()
}

/// Binomial coefficient, computed multiplicatively; each intermediate
/// division is exact. Returns zero when `k > n`.
pub(crate) fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::ZERO;
    }
    let k = k.min(n - k);
    let mut acc = BigUint::from(1u32);
    for i in 1..=k {
        acc *= n - k + i;
        acc /= i;
    }
    acc
}

/// Quotient of an exact division. The closed formulas only ever divide
/// integers they divide evenly; a remainder means the formula was
/// transcribed wrong, so it stops the program rather than mis-counting.
pub(crate) fn exact_div(num: BigUint, den: &BigUint) -> BigUint {
    let (q, r) = num_integer::Integer::div_rem(&num, den);
    assert!(r == BigUint::ZERO, "non-exact division: {num} / {den}");
    q
}
