//! Small exact counting helpers.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

pub use crate::partition::factorial;

pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// `(sum parts)! / prod(parts!)`.
pub fn multinomial(parts: &[u64]) -> BigUint {
    let mut total = 0u64;
    let mut acc = BigUint::one();
    for &p in parts {
        total += p;
        acc *= binomial(total, p);
    }
    acc
}

pub fn binomial_int(n: u64, k: u64) -> BigInt {
    BigInt::from(binomial(n, k))
}

/// All weak compositions of `total` into `len` parts, in lexicographic order.
pub fn weak_compositions(total: u64, len: usize) -> Vec<Vec<u64>> {
    fn rec(rest: u64, slots: usize, current: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if slots == 1 {
            current.push(rest);
            out.push(current.clone());
            current.pop();
            return;
        }
        for v in 0..=rest {
            current.push(v);
            rec(rest - v, slots - 1, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    if len == 0 {
        if total == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(total, len, &mut Vec::with_capacity(len), &mut out);
    out
}
