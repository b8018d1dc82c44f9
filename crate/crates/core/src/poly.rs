//! Sparse polynomials in `x_1, x_2, ...` with big-integer coefficients,
//! keyed by [`Partition`].

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rustc_hash::FxHashMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;
use crate::par::{self, Strategy};
use crate::partition::Partition;

/// Scratch map used while building a polynomial.
#[derive(Debug, Default)]
pub(crate) struct Accumulator {
    terms: FxHashMap<Partition, BigInt>,
}

impl Accumulator {
    pub(crate) fn new() -> Self {
        Self::default()
    }

    pub(crate) fn add(&mut self, key: Partition, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            std::collections::hash_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
            }
            std::collections::hash_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
        }
    }

    pub(crate) fn merge(mut self, mut other: Accumulator) -> Accumulator {
        if self.terms.len() < other.terms.len() {
            std::mem::swap(&mut self, &mut other);
        }
        for (k, v) in other.terms {
            self.add(k, v);
        }
        self
    }

    pub(crate) fn finish(self) -> RunPolynomial {
        let mut terms: Vec<(Partition, BigInt)> =
            self.terms.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by(|a, b| a.0.cmp(&b.0));
        RunPolynomial { terms }
    }
}

/// An element of `Z[x_1, x_2, ...]`.
///
/// Terms are stored in canonical order (graded by weight, then lexicographic
/// on the part list) with no zero coefficients, so structural equality is
/// polynomial equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct RunPolynomial {
    terms: Vec<(Partition, BigInt)>,
}

impl RunPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(Partition::empty(), BigInt::one())
    }

    /// The variable `x_i`.
    pub fn var(i: u32) -> Self {
        assert!(i > 0, "variables are indexed from 1");
        Self::monomial(Partition::from_sorted_unchecked(vec![i]), BigInt::one())
    }

    pub fn monomial(key: Partition, coeff: BigInt) -> Self {
        if coeff.is_zero() {
            return Self::zero();
        }
        RunPolynomial {
            terms: vec![(key, coeff)],
        }
    }

    /// Terms must already be in canonical order with nonzero coefficients.
    pub(crate) fn from_sorted_unchecked(terms: Vec<(Partition, BigInt)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        RunPolynomial { terms }
    }

    /// Collects terms, summing repeated monomials and dropping zeros.
    pub fn from_terms<I: IntoIterator<Item = (Partition, BigInt)>>(terms: I) -> Self {
        let mut acc = Accumulator::new();
        for (k, c) in terms {
            acc.add(k, c);
        }
        acc.finish()
    }

    pub fn terms(&self) -> &[(Partition, BigInt)] {
        &self.terms
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of the monomial `q` (zero if absent).
    pub fn coefficient(&self, q: &Partition) -> BigInt {
        self.terms
            .binary_search_by(|(k, _)| k.cmp(q))
            .map(|i| self.terms[i].1.clone())
            .unwrap_or_else(|_| BigInt::zero())
    }

    /// Terms with exactly `degree` variable factors.
    pub fn degree_part(&self, degree: usize) -> RunPolynomial {
        RunPolynomial {
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| k.len() == degree)
                .cloned()
                .collect(),
        }
    }

    /// Checks that every monomial has weight `weight`.
    pub fn check_homogeneous(&self, weight: u64) -> Result<(), Error> {
        match self.terms.iter().find(|(k, _)| k.weight() != weight) {
            Some((k, _)) => Err(Error::WeightMismatch {
                expected: weight,
                found: k.weight(),
            }),
            None => Ok(()),
        }
    }

    /// Largest variable index occurring in any monomial.
    pub fn max_index(&self) -> u32 {
        self.terms
            .iter()
            .filter_map(|(k, _)| k.largest())
            .max()
            .unwrap_or(0)
    }

    /// Sum of all coefficients, i.e. the value at `x_i = 1`.
    pub fn coefficient_sum(&self) -> BigInt {
        self.terms.iter().map(|(_, c)| c).sum()
    }

    pub fn scale(&self, factor: &BigInt) -> RunPolynomial {
        if factor.is_zero() {
            return Self::zero();
        }
        RunPolynomial {
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.clone(), c * factor))
                .collect(),
        }
    }

    pub fn add_poly(&self, other: &RunPolynomial) -> RunPolynomial {
        // both sides are sorted, so a linear merge suffices
        let mut terms = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (ka, ca) = &self.terms[i];
            let (kb, cb) = &other.terms[j];
            match ka.cmp(kb) {
                std::cmp::Ordering::Less => {
                    terms.push((ka.clone(), ca.clone()));
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    terms.push((kb.clone(), cb.clone()));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = ca + cb;
                    if !c.is_zero() {
                        terms.push((ka.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        terms.extend_from_slice(&self.terms[i..]);
        terms.extend_from_slice(&other.terms[j..]);
        RunPolynomial { terms }
    }

    pub fn mul_poly(&self, other: &RunPolynomial) -> RunPolynomial {
        self.mul_with(other, Strategy::default())
    }

    pub fn mul_with(&self, other: &RunPolynomial, strategy: Strategy) -> RunPolynomial {
        let (outer, inner) = if self.len() >= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        par::fold_reduce(
            &outer.terms,
            strategy,
            Accumulator::new,
            |acc, (ka, ca)| {
                for (kb, cb) in &inner.terms {
                    acc.add(ka.union(kb), ca * cb);
                }
            },
            Accumulator::merge,
        )
        .finish()
    }

    pub fn pow(&self, exp: u32) -> RunPolynomial {
        let mut out = Self::one();
        for _ in 0..exp {
            out = out.mul_poly(self);
        }
        out
    }

    /// Exact value under `assignment`.
    pub fn evaluate(&self, assignment: &Assignment) -> Result<BigRational, Error> {
        self.evaluate_with(assignment, Strategy::default())
    }

    pub fn evaluate_with(
        &self,
        assignment: &Assignment,
        strategy: Strategy,
    ) -> Result<BigRational, Error> {
        let values = assignment.values_up_to(self.max_index() as usize)?;
        // only indices that actually occur must resolve
        let mut needed = vec![false; values.len()];
        for (k, _) in &self.terms {
            for &p in k.parts() {
                needed[p as usize] = true;
            }
        }
        for (i, v) in values.iter().enumerate() {
            if needed[i] && v.is_none() {
                return Err(Error::UnresolvedIndex(i));
            }
        }
        let sum = par::fold_reduce(
            &self.terms,
            strategy,
            BigRational::zero,
            |acc, (k, c)| {
                let mut term = BigRational::from_integer(c.clone());
                for &p in k.parts() {
                    if term.is_zero() {
                        break;
                    }
                    term *= values[p as usize].as_ref().expect("checked above");
                }
                *acc += term;
            },
            |a, b| a + b,
        );
        Ok(sum)
    }
}

impl Add for &RunPolynomial {
    type Output = RunPolynomial;
    fn add(self, rhs: &RunPolynomial) -> RunPolynomial {
        self.add_poly(rhs)
    }
}

impl Sub for &RunPolynomial {
    type Output = RunPolynomial;
    fn sub(self, rhs: &RunPolynomial) -> RunPolynomial {
        self.add_poly(&-rhs)
    }
}

impl Neg for &RunPolynomial {
    type Output = RunPolynomial;
    fn neg(self) -> RunPolynomial {
        RunPolynomial {
            terms: self.terms.iter().map(|(k, c)| (k.clone(), -c)).collect(),
        }
    }
}

impl Mul for &RunPolynomial {
    type Output = RunPolynomial;
    fn mul(self, rhs: &RunPolynomial) -> RunPolynomial {
        self.mul_poly(rhs)
    }
}

const SUBSCRIPTS: [char; 10] = ['₀', '₁', '₂', '₃', '₄', '₅', '₆', '₇', '₈', '₉'];
const SUPERSCRIPTS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];

pub(crate) fn subscript(n: u64) -> String {
    n.to_string()
        .bytes()
        .map(|b| SUBSCRIPTS[(b - b'0') as usize])
        .collect()
}

fn superscript(n: u64) -> String {
    n.to_string()
        .bytes()
        .map(|b| SUPERSCRIPTS[(b - b'0') as usize])
        .collect()
}

/// `x₃x₁²` for the partition 3+1+1.
pub fn format_monomial(key: &Partition) -> String {
    key.multiplicities()
        .into_iter()
        .map(|(part, m)| {
            if m == 1 {
                format!("x{}", subscript(part.into()))
            } else {
                format!("x{}{}", subscript(part.into()), superscript(m as u64))
            }
        })
        .collect()
}

impl fmt::Display for RunPolynomial {
    /// Highest monomial first, e.g. `x₅ + 7x₃x₁² + 11x₂²x₁ + 5x₁⁵`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (k, c)) in self.terms.iter().rev().enumerate() {
            let abs = c.abs();
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mono = format_monomial(k);
            if mono.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{abs}{mono}")?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TermRecord {
    partition: Vec<u32>,
    coeff: String,
}

impl Serialize for RunPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let records: Vec<TermRecord> = self
            .terms
            .iter()
            .map(|(k, c)| TermRecord {
                partition: k.parts().to_vec(),
                coeff: c.to_string(),
            })
            .collect();
        records.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for RunPolynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        use serde::de::Error as _;
        let records = Vec::<TermRecord>::deserialize(deserializer)?;
        let mut acc = Accumulator::new();
        for r in records {
            if r.partition.windows(2).any(|w| w[0] < w[1]) {
                return Err(D::Error::custom("partition parts must be non-increasing"));
            }
            let key = Partition::new(r.partition).map_err(D::Error::custom)?;
            let coeff: BigInt = r
                .coeff
                .parse()
                .map_err(|_| D::Error::custom(format!("bad coefficient {:?}", r.coeff)))?;
            acc.add(key, coeff);
        }
        Ok(acc.finish())
    }
}

impl RunPolynomial {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("polynomial serialization cannot fail")
    }

    pub fn from_json(s: &str) -> Result<Self, Error> {
        Ok(serde_json::from_str(s)?)
    }
}

/// The named substitution rules `x_i -> value`.
#[derive(Clone, Debug, PartialEq)]
pub enum Generator {
    /// No rule: only explicit overrides resolve.
    Explicit,
    /// `x_i = 1`.
    Ones,
    /// `x_{2k+1} = (-1)^k Catalan(k)`, `x_{2k} = 0`.
    CatalanAlternating,
    /// `x_1 = 1`, all others 0.
    X1Only,
    /// `x_n = y_n`, the nested-sum sequence 2, 24, 568, ...
    QftY,
    /// Every index maps to the same value.
    Constant(BigRational),
}

/// A rule resolving each variable index to an exact rational.
#[derive(Clone, Debug, PartialEq)]
pub struct Assignment {
    pub generator: Generator,
    pub overrides: BTreeMap<usize, BigRational>,
}

impl Assignment {
    pub fn new(generator: Generator) -> Self {
        Assignment {
            generator,
            overrides: BTreeMap::new(),
        }
    }

    pub fn ones() -> Self {
        Self::new(Generator::Ones)
    }

    pub fn explicit<I: IntoIterator<Item = (usize, BigRational)>>(values: I) -> Self {
        Assignment {
            generator: Generator::Explicit,
            overrides: values.into_iter().collect(),
        }
    }

    pub fn with_override(mut self, index: usize, value: BigRational) -> Self {
        self.overrides.insert(index, value);
        self
    }

    /// Value of `x_index`.
    pub fn value(&self, index: usize) -> Result<BigRational, Error> {
        self.values_up_to(index)?
            .pop()
            .flatten()
            .ok_or(Error::UnresolvedIndex(index))
    }

    /// Values for indices `0..=max` (index 0 is always unresolved).
    pub(crate) fn values_up_to(&self, max: usize) -> Result<Vec<Option<BigRational>>, Error> {
        let mut out: Vec<Option<BigRational>> = match &self.generator {
            Generator::Explicit => vec![None; max + 1],
            Generator::Ones => (0..=max).map(|_| Some(BigRational::one())).collect(),
            Generator::Constant(v) => (0..=max).map(|_| Some(v.clone())).collect(),
            Generator::X1Only => (0..=max)
                .map(|i| {
                    Some(if i == 1 {
                        BigRational::one()
                    } else {
                        BigRational::zero()
                    })
                })
                .collect(),
            Generator::CatalanAlternating => {
                let cat = crate::sequences::catalan_numbers(max / 2 + 1);
                (0..=max)
                    .map(|i| {
                        Some(if i % 2 == 0 {
                            BigRational::zero()
                        } else {
                            let k = (i - 1) / 2;
                            let c = BigRational::from_integer(BigInt::from(cat[k].clone()));
                            if k % 2 == 0 {
                                c
                            } else {
                                -c
                            }
                        })
                    })
                    .collect()
            }
            Generator::QftY => {
                let ys = crate::sequences::y_sequence(max.max(1));
                (0..=max)
                    .map(|i| {
                        Some(BigRational::from_integer(BigInt::from(
                            ys[i.max(1) - 1].clone(),
                        )))
                    })
                    .collect()
            }
        };
        if let Some(first) = out.first_mut() {
            *first = None;
        }
        for (&i, v) in &self.overrides {
            if i <= max && i > 0 {
                out[i] = Some(v.clone());
            }
        }
        Ok(out)
    }
}
