//! Closed forms for low-degree parts of `A_n` and `C_n`, and the three
//! special three-run series.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::combinat::{binomial, binomial_int, multinomial};
use crate::error::Error;
use crate::partition::Partition;
use crate::poly::RunPolynomial;

/// `(n-q-1)/(n-q-j) * multinomial(n-q-2; i-1, j-1, k-q)`, the weight of the
/// run triple `(i, j, k)` with split index `q` in the degree-3 part of `A_n`.
fn third_degree_weight(n: u64, i: u64, j: u64, k: u64, q: u64) -> BigRational {
    let m = multinomial(&[i - 1, j - 1, k - q]);
    BigRational::new(
        BigInt::from(m) * BigInt::from(n - q - 1),
        BigInt::from(n - q - j),
    )
}

fn into_integer_poly(acc: BTreeMap<Partition, BigRational>, what: &str) -> RunPolynomial {
    RunPolynomial::from_terms(acc.into_iter().map(|(k, c)| {
        assert!(c.is_integer(), "{what}: non-integral coefficient {c} for {k}");
        (k, c.to_integer())
    }))
}

/// Degree-3 part of `A_n` from the double-sum closed form, `n >= 3`.
pub fn atomic_third_degree(n: usize) -> Result<RunPolynomial, Error> {
    if n < 3 {
        return Err(Error::Precondition(format!(
            "third degree part needs n >= 3, got {n}"
        )));
    }
    let n = n as u64;
    let mut acc: BTreeMap<Partition, BigRational> = BTreeMap::new();
    for i in 1..=n - 2 {
        for j in 1..=n - 1 - i {
            let k = n - i - j;
            let mut coeff = BigRational::zero();
            for q in 1..=k {
                coeff += third_degree_weight(n, i, j, k, q);
            }
            let key = Partition::new(vec![i as u32, j as u32, k as u32])?;
            *acc.entry(key).or_insert_with(BigRational::zero) += coeff;
        }
    }
    Ok(into_integer_poly(acc, "A_n^(3)"))
}

/// `C_n^(2) = sum_{m=1}^{n-1} binom(n-2, m-1) x_m x_{n-m}`, `n >= 2`.
pub fn circular_second_degree(n: usize) -> Result<RunPolynomial, Error> {
    if n < 2 {
        return Err(Error::Precondition(format!(
            "second degree part needs n >= 2, got {n}"
        )));
    }
    let terms = (1..n).map(|m| {
        (
            Partition::new(vec![m as u32, (n - m) as u32]).expect("positive parts"),
            binomial_int((n - 2) as u64, (m - 1) as u64),
        )
    });
    Ok(RunPolynomial::from_terms(terms))
}

/// `C_n^(4)` from the quadruple sum, with the index constraint
/// `i + j + k + l = n`. Zero for `n < 4`.
pub fn circular_fourth_degree(n: usize) -> Result<RunPolynomial, Error> {
    if n < 2 {
        return Err(Error::Precondition(format!(
            "fourth degree part needs n >= 2, got {n}"
        )));
    }
    let n = n as u64;
    let mut acc: BTreeMap<Partition, BigRational> = BTreeMap::new();
    for l in 1..n.saturating_sub(2) {
        // the x_l factor comes from A_{n-l}^(1); the rest is A_{n-l}^(3)
        let m = n - l;
        let outer = BigRational::from_integer(BigInt::from(binomial(n - 2, m - 1)) * 2);
        for i in 1..=m.saturating_sub(2) {
            for j in 1..=m - 1 - i {
                let k = m - i - j;
                let mut coeff = BigRational::zero();
                for q in 1..=k {
                    coeff += third_degree_weight(m, i, j, k, q);
                }
                let key = Partition::new(vec![i as u32, j as u32, k as u32, l as u32])?;
                *acc.entry(key).or_insert_with(BigRational::zero) += coeff * &outer;
            }
        }
    }
    Ok(into_integer_poly(acc, "C_n^(4)"))
}

/// `(C_n^(2), C_n^(4))`; the fourth-degree part is zero below `n = 4`.
pub fn circular_degree_parts(n: usize) -> Result<(RunPolynomial, RunPolynomial), Error> {
    Ok((circular_second_degree(n)?, circular_fourth_degree(n)?))
}

/// The three-run series `Z_A(n+n+n)`, `Z_A(1+n+n)` and `Z_A(1+1+n)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpecialSeries {
    /// Three runs of equal length `n` (weight `3n`), `n >= 1`.
    EqualTriple,
    /// One run of length 1 and two of length `n` (weight `2n+1`), `n >= 2`.
    OneTwoEqual,
    /// Two runs of length 1 and one of length `n` (weight `n+2`), `n >= 2`.
    TwoOnes,
}

impl SpecialSeries {
    /// The partition whose atomic coefficient the series counts.
    pub fn partition(self, n: u32) -> Partition {
        let parts = match self {
            SpecialSeries::EqualTriple => vec![n, n, n],
            SpecialSeries::OneTwoEqual => vec![n, n, 1],
            SpecialSeries::TwoOnes => vec![n, 1, 1],
        };
        Partition::new(parts).expect("n >= 1")
    }
}

pub fn z_special_series(kind: SpecialSeries, n: u64) -> Result<BigInt, Error> {
    let min = match kind {
        SpecialSeries::EqualTriple => 1,
        _ => 2,
    };
    if n < min {
        return Err(Error::Precondition(format!(
            "{kind:?} is defined for n >= {min}, got {n}"
        )));
    }
    match kind {
        SpecialSeries::EqualTriple => {
            let mut sum = BigRational::zero();
            for q in 1..=n {
                let m = multinomial(&[n - 1, n - 1, n - q]);
                sum += BigRational::new(
                    BigInt::from(m) * BigInt::from(3 * n - q - 1),
                    BigInt::from(2 * n - q),
                );
            }
            assert!(sum.is_integer());
            Ok(sum.to_integer())
        }
        SpecialSeries::OneTwoEqual => {
            let mut sum = BigInt::zero();
            for q in 1..=n {
                sum += binomial_int(2 * n - q, n - 1) + binomial_int(2 * n - q - 1, n - 1);
            }
            let central = binomial_int(2 * n, n);
            let half = BigRational::new(central, BigInt::from(2));
            let total = BigRational::from_integer(sum) + half;
            assert!(total.is_integer());
            Ok(total.to_integer())
        }
        SpecialSeries::TwoOnes => Ok(BigInt::from(2 * n + 1)),
    }
}

/// `2 binom(2n, n) - 1`.
pub fn one_two_equal_closed_form(n: u64) -> BigInt {
    binomial_int(2 * n, n) * 2 - BigInt::one()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::{atomic_polys, circular_polys};

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn poly(terms: &[(&[u32], i64)]) -> RunPolynomial {
        RunPolynomial::from_terms(terms.iter().map(|(k, c)| (p(k), BigInt::from(*c))))
    }

    #[test]
    fn third_degree_examples() {
        assert_eq!(atomic_third_degree(3).unwrap(), poly(&[(&[1, 1, 1], 1)]));
        assert_eq!(
            atomic_third_degree(5).unwrap(),
            poly(&[(&[3, 1, 1], 7), (&[2, 2, 1], 11)])
        );
        let a = atomic_polys(7);
        assert_eq!(atomic_third_degree(7).unwrap(), a.get(7).unwrap().degree_part(3));
        assert!(atomic_third_degree(2).is_err());
    }

    #[test]
    fn circular_parts_examples() {
        assert_eq!(
            circular_second_degree(4).unwrap(),
            poly(&[(&[3, 1], 2), (&[2, 2], 2)])
        );
        assert_eq!(
            circular_second_degree(6).unwrap(),
            poly(&[(&[5, 1], 2), (&[4, 2], 8), (&[3, 3], 6)])
        );
        let c = circular_polys(6);
        let c6_4 = c.get(6).unwrap().degree_part(4);
        assert_eq!(c6_4, poly(&[(&[2, 2, 1, 1], 62), (&[3, 1, 1, 1], 26)]));
        assert_eq!(circular_fourth_degree(6).unwrap(), c6_4);
        assert!(circular_fourth_degree(3).unwrap().is_zero());
        assert_eq!(
            circular_fourth_degree(4).unwrap(),
            poly(&[(&[1, 1, 1, 1], 2)])
        );
    }

    #[test]
    fn special_series_examples() {
        let nnn: Vec<BigInt> = (1..=6)
            .map(|n| z_special_series(SpecialSeries::EqualTriple, n).unwrap())
            .collect();
        let want: Vec<BigInt> = [1, 11, 181, 3499, 73501, 1623467]
            .iter()
            .map(|&v| BigInt::from(v))
            .collect();
        assert_eq!(nnn, want);
        assert_eq!(z_special_series(SpecialSeries::OneTwoEqual, 2).unwrap(), 11.into());
        assert_eq!(z_special_series(SpecialSeries::TwoOnes, 3).unwrap(), 7.into());
        assert!(z_special_series(SpecialSeries::TwoOnes, 1).is_err());
        for n in 2..=12 {
            assert_eq!(
                z_special_series(SpecialSeries::OneTwoEqual, n).unwrap(),
                one_two_equal_closed_form(n)
            );
        }
    }
}
