//! Truncated formal power series with exact rational coefficients.

use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::combinat::factorial;

/// `coeffs[k]` is the coefficient of `λ^k`; everything from `order()` on is
/// unknown, not zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerSeries {
    coeffs: Vec<BigRational>,
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl PowerSeries {
    pub fn new(mut coeffs: Vec<BigRational>, order: usize) -> Self {
        coeffs.resize(order, BigRational::zero());
        PowerSeries { coeffs }
    }

    pub fn from_integers(values: &[i64], order: usize) -> Self {
        Self::new(values.iter().map(|&v| rat(v)).collect(), order)
    }

    pub fn constant(c: BigRational, order: usize) -> Self {
        Self::new(vec![c], order)
    }

    /// `1 / (1 - a λ)`.
    pub fn geometric(a: BigRational, order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order);
        let mut term = BigRational::one();
        for _ in 0..order {
            coeffs.push(term.clone());
            term *= &a;
        }
        PowerSeries { coeffs }
    }

    /// `sum_k λ^k / k!` scaled by `a^k`, i.e. `exp(a λ)`.
    pub fn exp_linear(a: BigRational, order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order);
        let mut term = BigRational::one();
        for k in 0..order {
            coeffs.push(term.clone());
            term = term * &a / rat(k as i64 + 1);
        }
        PowerSeries { coeffs }
    }

    pub fn cos(order: usize) -> Self {
        Self::trig(order, 0)
    }

    pub fn sin(order: usize) -> Self {
        Self::trig(order, 1)
    }

    fn trig(order: usize, parity: usize) -> Self {
        let coeffs = (0..order)
            .map(|k| {
                if k % 2 != parity {
                    return BigRational::zero();
                }
                let sign = if (k / 2) % 2 == 0 { 1 } else { -1 };
                BigRational::new(BigInt::from(sign), BigInt::from(factorial(k as u64)))
            })
            .collect();
        PowerSeries { coeffs }
    }

    pub fn sec(order: usize) -> Self {
        Self::cos(order).reciprocal().expect("cos has constant term 1")
    }

    pub fn tan(order: usize) -> Self {
        Self::sin(order).div(&Self::cos(order)).expect("cos has constant term 1")
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, k: usize) -> &BigRational {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// `k! [λ^k]`, the exponential-generating-function coefficient.
    pub fn egf_coeff(&self, k: usize) -> BigRational {
        &self.coeffs[k] * BigRational::from_integer(BigInt::from(factorial(k as u64)))
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        PowerSeries {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// `None` when the constant term is zero.
    pub fn reciprocal(&self) -> Option<Self> {
        let n = self.order();
        let c0 = self.coeffs.first()?;
        if c0.is_zero() {
            return None;
        }
        let inv0 = c0.recip();
        let mut out: Vec<BigRational> = Vec::with_capacity(n);
        for k in 0..n {
            if k == 0 {
                out.push(inv0.clone());
                continue;
            }
            let mut s = BigRational::zero();
            for j in 1..=k {
                s += &self.coeffs[j] * &out[k - j];
            }
            out.push(-s * &inv0);
        }
        Some(PowerSeries { coeffs: out })
    }

    pub fn div(&self, other: &Self) -> Option<Self> {
        Some(self * &other.reciprocal()?)
    }

    /// `f^alpha` for `f(0) = 1`, by `n g_n = sum_k ((alpha + 1) k - n) f_k g_{n-k}`.
    pub fn pow_rational(&self, alpha: &BigRational) -> Option<Self> {
        let n = self.order();
        if n == 0 {
            return Some(self.clone());
        }
        if !self.coeffs[0].is_one() {
            return None;
        }
        let mut g: Vec<BigRational> = Vec::with_capacity(n);
        g.push(BigRational::one());
        let a1 = alpha + BigRational::one();
        for m in 1..n {
            let mut s = BigRational::zero();
            for k in 1..=m {
                let w = &a1 * rat(k as i64) - rat(m as i64);
                s += w * &self.coeffs[k] * &g[m - k];
            }
            g.push(s / rat(m as i64));
        }
        Some(PowerSeries { coeffs: g })
    }

    /// `exp(f)` for `f(0) = 0`, from `g' = f' g`.
    pub fn exp(&self) -> Option<Self> {
        let n = self.order();
        if n == 0 {
            return Some(self.clone());
        }
        if !self.coeffs[0].is_zero() {
            return None;
        }
        let mut g: Vec<BigRational> = Vec::with_capacity(n);
        g.push(BigRational::one());
        for m in 1..n {
            let mut s = BigRational::zero();
            for k in 1..=m {
                s += rat(k as i64) * &self.coeffs[k] * &g[m - k];
            }
            g.push(s / rat(m as i64));
        }
        Some(PowerSeries { coeffs: g })
    }

    /// Antiderivative with zero constant term; keeps the order.
    pub fn integrate(&self) -> Self {
        let n = self.order();
        let coeffs = (0..n)
            .map(|k| match k {
                0 => BigRational::zero(),
                _ => &self.coeffs[k - 1] / rat(k as i64),
            })
            .collect();
        PowerSeries { coeffs }
    }
}

impl Add for &PowerSeries {
    type Output = PowerSeries;
    fn add(self, rhs: &PowerSeries) -> PowerSeries {
        let n = self.order().min(rhs.order());
        PowerSeries {
            coeffs: (0..n).map(|k| &self.coeffs[k] + &rhs.coeffs[k]).collect(),
        }
    }
}

impl Sub for &PowerSeries {
    type Output = PowerSeries;
    fn sub(self, rhs: &PowerSeries) -> PowerSeries {
        let n = self.order().min(rhs.order());
        PowerSeries {
            coeffs: (0..n).map(|k| &self.coeffs[k] - &rhs.coeffs[k]).collect(),
        }
    }
}

impl Mul for &PowerSeries {
    type Output = PowerSeries;
    fn mul(self, rhs: &PowerSeries) -> PowerSeries {
        let n = self.order().min(rhs.order());
        let coeffs = (0..n)
            .map(|k| {
                (0..=k).fold(BigRational::zero(), |acc, j| {
                    acc + &self.coeffs[j] * &rhs.coeffs[k - j]
                })
            })
            .collect();
        PowerSeries { coeffs }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn egfs(s: &PowerSeries) -> Vec<BigRational> {
        (0..s.order()).map(|k| s.egf_coeff(k)).collect()
    }

    fn ints(v: &[i64]) -> Vec<BigRational> {
        v.iter().map(|&x| rat(x)).collect()
    }

    #[test]
    fn sec_and_tan() {
        assert_eq!(
            egfs(&PowerSeries::sec(9)),
            ints(&[1, 0, 1, 0, 5, 0, 61, 0, 1385])
        );
        assert_eq!(
            egfs(&PowerSeries::tan(8)),
            ints(&[0, 1, 0, 2, 0, 16, 0, 272])
        );
    }

    #[test]
    fn rational_power() {
        let f = PowerSeries::from_integers(&[1, -12], 6);
        let g = f.pow_rational(&BigRational::new((-1).into(), 3.into())).unwrap();
        assert_eq!(egfs(&g)[5], rat(3727360));
        // (1 - 12λ)^{-1} two ways
        let h = f.pow_rational(&rat(-1)).unwrap();
        assert_eq!(h, f.reciprocal().unwrap());
        assert_eq!(h, PowerSeries::geometric(rat(12), 6));
    }

    #[test]
    fn exp_of_integral() {
        // exp(2 ∫ 1/(1-λ)) = (1-λ)^{-2}
        let a = PowerSeries::geometric(rat(1), 8);
        let l = a.scale(&rat(2)).integrate().exp().unwrap();
        let want = PowerSeries::from_integers(&[1, -1], 8)
            .pow_rational(&rat(-2))
            .unwrap();
        assert_eq!(l, want);
        assert_eq!(
            PowerSeries::exp_linear(rat(2), 6),
            PowerSeries::from_integers(&[0, 2], 6).exp().unwrap()
        );
    }
}
