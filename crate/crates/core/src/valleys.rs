//! Valley-counting polynomials `K_n(kappa) = sum_k V(n, k) kappa^k`.
//!
//! `K_n` is read off `C_{n+1}`: a circular monomial with `2(k+1)` factors
//! corresponds to a linear permutation of `[n]` with `k` valleys.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::Error;
use crate::par::{self, Strategy};
use crate::poly::RunPolynomial;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ValleyPolynomial {
    coeffs: Vec<BigInt>,
}

impl ValleyPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        ValleyPolynomial { coeffs }
    }

    pub fn one() -> Self {
        Self::new(vec![BigInt::one()])
    }

    /// `coeffs()[k] = V(n, k)`.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Exact value at a rational `kappa` (Horner).
    pub fn eval(&self, kappa: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| {
                acc * kappa + BigRational::from_integer(c.clone())
            })
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    fn derivative(&self) -> ValleyPolynomial {
        ValleyPolynomial::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * k)
                .collect(),
        )
    }
}

impl fmt::Display for ValleyPolynomial {
    /// `16 + 88κ + 16κ²`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}κ")?,
                _ => write!(f, "{c}κ{}", superscript(k))?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

fn superscript(k: usize) -> String {
    const SUP: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    k.to_string()
        .bytes()
        .map(|b| SUP[(b - b'0') as usize])
        .collect()
}

/// `K_n(kappa) = C_{n+1}(sqrt(kappa), ...) / kappa`, given `circular = C_{n+1}`.
pub fn valley_poly(n: usize, circular: &RunPolynomial) -> Result<ValleyPolynomial, Error> {
    if n == 0 {
        return Ok(ValleyPolynomial::one());
    }
    circular.check_homogeneous(n as u64 + 1)?;
    let mut coeffs: Vec<BigInt> = Vec::new();
    for (key, c) in circular.terms() {
        let d = key.len();
        if d % 2 == 1 || d == 0 {
            return Err(Error::OddDegree(d));
        }
        let k = d / 2 - 1;
        if coeffs.len() <= k {
            coeffs.resize(k + 1, BigInt::zero());
        }
        coeffs[k] += c;
    }
    Ok(ValleyPolynomial::new(coeffs))
}

/// `K_n = 2 kappa (1 - kappa) K_{n-1}' + (2 + (n - 2) kappa) K_{n-1}`, `n >= 2`.
pub fn valley_recurrence_step(prev: &ValleyPolynomial, n: usize) -> Result<ValleyPolynomial, Error> {
    if n < 2 {
        return Err(Error::Precondition(format!(
            "valley recurrence starts at n = 2, got {n}"
        )));
    }
    let d = prev.derivative();
    let len = prev.coeffs.len() + 1;
    let mut out = vec![BigInt::zero(); len];
    for (k, c) in d.coeffs.iter().enumerate() {
        // 2 kappa K' - 2 kappa^2 K'
        out[k + 1] += c * 2;
        out[k + 2] -= c * 2;
    }
    let shift = BigInt::from(n as i64 - 2);
    for (k, c) in prev.coeffs.iter().enumerate() {
        out[k] += c * 2;
        out[k + 1] += c * &shift;
    }
    Ok(ValleyPolynomial::new(out))
}

/// `K_0 ..= K_{n_max}` by the recurrence from `K_1 = 1`.
pub fn valley_polys_by_recurrence(n_max: usize) -> Vec<ValleyPolynomial> {
    let mut out = vec![ValleyPolynomial::one()];
    if n_max >= 1 {
        out.push(ValleyPolynomial::one());
    }
    for n in 2..=n_max {
        let next = valley_recurrence_step(&out[n - 1], n).expect("n >= 2");
        out.push(next);
    }
    out
}

/// Rows `n = 1 ..= n_max` of `V(n, k)`, each read off the circular polynomials.
pub fn valley_table(n_max: usize) -> Result<Vec<ValleyPolynomial>, Error> {
    valley_table_with(n_max, Strategy::default())
}

pub fn valley_table_with(n_max: usize, strategy: Strategy) -> Result<Vec<ValleyPolynomial>, Error> {
    if n_max < 1 {
        return Err(Error::Precondition("valley table needs n_max >= 1".into()));
    }
    let circular = crate::enumerate::circular_polys(n_max + 1);
    par::map_range(n_max, strategy, |i| {
        let n = i + 1;
        valley_poly(n, circular.get(n + 1).expect("computed up to n_max + 1"))
    })
    .into_iter()
    .collect()
}

/// Settings for comparing the closed form against a truncated series.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ClosedFormCheck {
    pub order: usize,
    pub tolerance: f64,
    /// Minimum distance of the tangent argument from a pole.
    pub pole_margin: f64,
}

impl Default for ClosedFormCheck {
    fn default() -> Self {
        ClosedFormCheck {
            order: 25,
            tolerance: 1e-9,
            pole_margin: 1e-3,
        }
    }
}

/// `1 - 1/kappa + sqrt(kappa - 1)/kappa * tan(nu sqrt(kappa - 1) + atan(1/sqrt(kappa - 1)))`.
pub fn kitaev_closed_form(nu: f64, kappa: f64, pole_margin: f64) -> Result<f64, Error> {
    if kappa.is_nan() || kappa <= 1.0 {
        return Err(Error::UnsupportedBranch(kappa));
    }
    let s = (kappa - 1.0).sqrt();
    let argument = nu * s + (1.0 / s).atan();
    let half_pi = std::f64::consts::FRAC_PI_2;
    // distance to the nearest odd multiple of pi/2
    let shifted = (argument - half_pi).rem_euclid(std::f64::consts::PI);
    let distance = shifted.min(std::f64::consts::PI - shifted);
    if distance < pole_margin {
        return Err(Error::NearPole {
            argument,
            margin: pole_margin,
        });
    }
    Ok(1.0 - 1.0 / kappa + s / kappa * argument.tan())
}

/// `sum_{n=0}^{order} K_n(kappa) nu^n / n!`, summed exactly and rounded once.
pub fn truncated_series(nu: f64, kappa: f64, order: usize) -> Result<f64, Error> {
    let to_rational = |x: f64| {
        BigRational::from_float(x).ok_or_else(|| Error::Precondition(format!("{x} is not finite")))
    };
    let nu_q = to_rational(nu)?;
    let kappa_q = to_rational(kappa)?;
    let polys = valley_polys_by_recurrence(order);
    let mut sum = BigRational::zero();
    let mut weight = BigRational::one();
    for (n, k) in polys.iter().enumerate() {
        if n > 0 {
            weight = weight * &nu_q / BigRational::from_integer(BigInt::from(n));
        }
        sum += k.eval(&kappa_q) * &weight;
    }
    sum.to_f64()
        .ok_or_else(|| Error::Precondition("series value out of f64 range".into()))
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ClosedFormReport {
    pub nu: f64,
    pub kappa: f64,
    pub closed_form: f64,
    pub series: f64,
    pub difference: f64,
    pub passed: bool,
}

pub fn check_closed_form(nu: f64, kappa: f64, check: &ClosedFormCheck) -> Result<ClosedFormReport, Error> {
    if check.tolerance.is_nan() || check.tolerance <= 0.0 {
        return Err(Error::Precondition("tolerance must be positive".into()));
    }
    let closed_form = kitaev_closed_form(nu, kappa, check.pole_margin)?;
    let series = truncated_series(nu, kappa, check.order)?;
    let difference = (closed_form - series).abs();
    Ok(ClosedFormReport {
        nu,
        kappa,
        closed_form,
        series,
        difference,
        passed: difference <= check.tolerance,
    })
}
