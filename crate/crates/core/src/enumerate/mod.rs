//! The run-structure polynomials `A_n`, `C_n` and `L_n`.
//!
//! * `A_n` (weight `n`) counts atomic permutations of `[n+1]`:
//!   `A_1 = x_1`, `A_n = D A_{n-1}`.
//! * `C_n` (weight `n`) counts circular permutations of `[n]`:
//!   `C_2 = x_1^2`, `C_n = D C_{n-1}`.
//! * `L_n` (weight `n`) counts linear permutations of `[n+1]`:
//!   `L_0 = 1`, `L_n = 2 sum_m binom(n-1, m-1) A_m L_{n-m}`.

mod closed_forms;
mod operator;

use num_bigint::BigInt;
use num_traits::{One, Zero};

pub use closed_forms::{
    atomic_third_degree, circular_degree_parts, circular_fourth_degree, circular_second_degree,
    one_two_equal_closed_form, z_special_series, SpecialSeries,
};
pub use operator::{apply_operator, apply_operator_with, repeated_d0, OperatorKind};

use crate::combinat::{binomial_int, factorial};
use crate::error::Error;
use crate::par::Strategy;
use crate::partition::Partition;
use crate::poly::{Accumulator, RunPolynomial};

/// A run of consecutive polynomials `P_first, P_{first+1}, ...`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolySequence {
    first: usize,
    polys: Vec<RunPolynomial>,
}

impl PolySequence {
    pub fn get(&self, n: usize) -> Option<&RunPolynomial> {
        n.checked_sub(self.first).and_then(|i| self.polys.get(i))
    }

    pub fn first_index(&self) -> usize {
        self.first
    }

    pub fn last_index(&self) -> Option<usize> {
        (self.first + self.polys.len()).checked_sub(1).filter(|&n| n >= self.first)
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &RunPolynomial)> {
        self.polys.iter().enumerate().map(move |(i, p)| (self.first + i, p))
    }

    pub fn as_slice(&self) -> &[RunPolynomial] {
        &self.polys
    }
}

/// Iterates `P_{n+1} = D P_n + shift * x_1 * P_n` from a seed without
/// keeping earlier terms alive.
pub struct OperatorChain {
    next_index: usize,
    current: Option<RunPolynomial>,
    shift: Option<BigInt>,
    strategy: Strategy,
}

impl OperatorChain {
    /// `A_1, A_2, ...`
    pub fn atomic(strategy: Strategy) -> Self {
        Self::new(1, RunPolynomial::var(1), None, strategy)
    }

    /// `C_2, C_3, ...`
    pub fn circular(strategy: Strategy) -> Self {
        let seed = RunPolynomial::monomial(Partition::from_sorted_unchecked(vec![1, 1]), BigInt::one());
        Self::new(2, seed, None, strategy)
    }

    /// `L_0, L_1, ...` via `L_n = (D + 2 x_1) L_{n-1}`.
    pub fn linear(strategy: Strategy) -> Self {
        Self::new(0, RunPolynomial::one(), Some(BigInt::from(2)), strategy)
    }

    fn new(first: usize, seed: RunPolynomial, shift: Option<BigInt>, strategy: Strategy) -> Self {
        OperatorChain {
            next_index: first,
            current: Some(seed),
            shift,
            strategy,
        }
    }
}

impl Iterator for OperatorChain {
    type Item = (usize, RunPolynomial);

    fn next(&mut self) -> Option<Self::Item> {
        let current = self.current.take()?;
        let next = operator::apply_shifted(
            OperatorKind::D,
            &current,
            self.shift.as_ref(),
            self.strategy,
        );
        self.current = Some(next);
        let n = self.next_index;
        self.next_index += 1;
        Some((n, current))
    }
}

fn collect_chain(chain: OperatorChain, first: usize, last: usize) -> PolySequence {
    let polys = if last < first {
        Vec::new()
    } else {
        chain.take(last - first + 1).map(|(_, p)| p).collect()
    };
    PolySequence { first, polys }
}

/// `A_1 ..= A_{n_max}`.
pub fn atomic_polys(n_max: usize) -> PolySequence {
    collect_chain(OperatorChain::atomic(Strategy::default()), 1, n_max)
}

/// `C_2 ..= C_{n_max}`.
pub fn circular_polys(n_max: usize) -> PolySequence {
    collect_chain(OperatorChain::circular(Strategy::default()), 2, n_max)
}

/// `C_n = sum_{m=1}^{n-1} binom(n-2, m-1) A_m A_{n-m}`, with `atoms[i] = A_{i+1}`.
pub fn circular_from_atomic(n: usize, atoms: &[RunPolynomial]) -> Result<RunPolynomial, Error> {
    if n < 2 {
        return Err(Error::Precondition(format!("C_n needs n >= 2, got {n}")));
    }
    if atoms.len() < n - 1 {
        return Err(Error::InsufficientAtoms {
            needed: n - 1,
            got: atoms.len(),
        });
    }
    let mut acc = RunPolynomial::zero();
    // the summand is symmetric under m <-> n - m
    for m in 1..=(n - 1) / 2 {
        let b = binomial_int((n - 2) as u64, (m - 1) as u64) * 2;
        acc = &acc + &(&atoms[m - 1] * &atoms[n - m - 1]).scale(&b);
    }
    if n.is_multiple_of(2) {
        let m = n / 2;
        let b = binomial_int((n - 2) as u64, (m - 1) as u64);
        acc = &acc + &(&atoms[m - 1] * &atoms[m - 1]).scale(&b);
    }
    Ok(acc)
}

/// How `L_n` is produced.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum LinearRoute {
    /// `L_n = 2 sum_m binom(n-1, m-1) A_m L_{n-m}`.
    Convolution,
    /// `L_n = (D + 2 x_1) L_{n-1}`, which follows from `L' = 2 A L` and the
    /// homomorphism property of `exp(lambda D)`.
    #[default]
    Operator,
}

/// `L_0 ..= L_{n_max}` by the principal-atom convolution.
pub fn linear_polys(n_max: usize) -> PolySequence {
    let atoms = atomic_polys(n_max);
    linear_from_atoms(n_max, atoms.as_slice(), Strategy::default())
}

/// `L_0 ..= L_{n_max}` via the shifted operator chain.
pub fn linear_polys_operator(n_max: usize) -> PolySequence {
    collect_chain(OperatorChain::linear(Strategy::default()), 0, n_max)
}

fn linear_from_atoms(n_max: usize, atoms: &[RunPolynomial], strategy: Strategy) -> PolySequence {
    let mut polys = vec![RunPolynomial::one()];
    for n in 1..=n_max {
        polys.push(linear_step(n, atoms, &polys, strategy));
    }
    PolySequence { first: 0, polys }
}

fn linear_step(
    n: usize,
    atoms: &[RunPolynomial],
    lower: &[RunPolynomial],
    strategy: Strategy,
) -> RunPolynomial {
    let mut acc = Accumulator::new();
    for m in 1..=n {
        let b = binomial_int((n - 1) as u64, (m - 1) as u64) * 2;
        let prod = atoms[m - 1].mul_with(&lower[n - m], strategy);
        for (k, c) in prod.terms() {
            acc.add(k.clone(), c * &b);
        }
    }
    acc.finish()
}

/// `n! 2^{|p|} / (ord(p) prod p_i!)`.
fn faa_coefficient(p: &Partition, n_fact: &BigInt) -> BigInt {
    let denom: num_bigint::BigUint = p
        .parts()
        .iter()
        .map(|&q| factorial(u64::from(q)))
        .product::<num_bigint::BigUint>()
        * p.symmetry_order();
    (n_fact << p.len()) / BigInt::from(denom)
}

/// `L_n` written in the atomic polynomials: the monomial `x_p` of the result
/// stands for `A_{p_1} A_{p_2} ...`.
pub fn linear_atom_form(n: usize) -> RunPolynomial {
    let n_fact = BigInt::from(factorial(n as u64));
    RunPolynomial::from_terms(Partition::all_of(n as u32).into_iter().map(|p| {
        let c = faa_coefficient(&p, &n_fact);
        (p, c)
    }))
}

/// `L_n` as a sum over partitions `p` of `n` of
/// `2^{|p|} / ord(p) * multinomial(n; p) * prod A_{p_i}`, with `atoms[i] = A_{i+1}`.
pub fn linear_polys_faa(n: usize, atoms: &[RunPolynomial]) -> Result<RunPolynomial, Error> {
    if atoms.len() < n {
        return Err(Error::InsufficientAtoms {
            needed: n,
            got: atoms.len(),
        });
    }
    if n == 0 {
        return Ok(RunPolynomial::one());
    }
    let n_fact = BigInt::from(factorial(n as u64));
    let mut total = Accumulator::new();
    // depth-first over partitions with non-increasing parts, sharing prefix products
    struct Frame<'a> {
        atoms: &'a [RunPolynomial],
        n_fact: &'a BigInt,
    }
    fn rec(
        f: &Frame<'_>,
        rest: usize,
        max: usize,
        parts: &mut Vec<usize>,
        product: &RunPolynomial,
        total: &mut Accumulator,
    ) {
        if rest == 0 {
            let key = Partition::new(parts.iter().map(|&p| p as u32).collect())
                .expect("parts are positive");
            let coeff = faa_coefficient(&key, f.n_fact);
            for (k, c) in product.terms() {
                total.add(k.clone(), c * &coeff);
            }
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            parts.push(p);
            let next = product * &f.atoms[p - 1];
            rec(f, rest - p, p, parts, &next, total);
            parts.pop();
        }
    }
    let frame = Frame {
        atoms,
        n_fact: &n_fact,
    };
    rec(&frame, n, n, &mut Vec::new(), &RunPolynomial::one(), &mut total);
    Ok(total.finish())
}

/// `A_1 ..= A_{n_max}` via `A'' = A^3 + exp(lambda D) x_3`, i.e.
/// `A_{n+3} = sum_c binom(n, c) A_{c+1} (A^2)_{n-c} + D^n x_3`.
pub fn atomic_polys_accelerated(n_max: usize) -> PolySequence {
    let strategy = Strategy::default();
    let mut atoms: Vec<RunPolynomial> = Vec::new();
    // squares[k] = sum_a binom(k, a) A_{a+1} A_{k-a+1}, which is C_{k+2}
    let mut squares: Vec<RunPolynomial> = Vec::new();
    let mut x3_chain = RunPolynomial::var(3);
    for n in 1..=n_max {
        let a = match n {
            1 => RunPolynomial::var(1),
            2 => RunPolynomial::var(2),
            _ => {
                let k = n - 3;
                let mut acc = x3_chain.clone();
                for c in 0..=k {
                    let b = binomial_int(k as u64, c as u64);
                    let term = atoms[c].mul_with(&squares[k - c], strategy);
                    acc = &acc + &term.scale(&b);
                }
                x3_chain = apply_operator_with(OperatorKind::D, &x3_chain, strategy);
                acc
            }
        };
        atoms.push(a);
        let k = n - 1;
        let sq = circular_from_atomic(k + 2, &atoms).expect("atoms up to A_{k+1} are present");
        squares.push(sq);
    }
    PolySequence { first: 1, polys: atoms }
}

/// Session cache for the three families; every value is computed once.
#[derive(Debug)]
pub struct RunTables {
    strategy: Strategy,
    linear_route: LinearRoute,
    atoms: Vec<RunPolynomial>,
    circular: Vec<RunPolynomial>,
    linear: Vec<RunPolynomial>,
}

impl Default for RunTables {
    fn default() -> Self {
        Self::new(Strategy::default(), LinearRoute::default())
    }
}

impl RunTables {
    pub fn new(strategy: Strategy, linear_route: LinearRoute) -> Self {
        RunTables {
            strategy,
            linear_route,
            atoms: Vec::new(),
            circular: Vec::new(),
            linear: Vec::new(),
        }
    }

    /// `A_n`, `n >= 1`.
    pub fn atomic(&mut self, n: usize) -> &RunPolynomial {
        assert!(n >= 1, "A_n is defined for n >= 1");
        while self.atoms.len() < n {
            let next = match self.atoms.last() {
                None => RunPolynomial::var(1),
                Some(prev) => apply_operator_with(OperatorKind::D, prev, self.strategy),
            };
            self.atoms.push(next);
        }
        &self.atoms[n - 1]
    }

    /// `A_1 ..= A_n` as a slice (`[i] = A_{i+1}`).
    pub fn atoms_up_to(&mut self, n: usize) -> &[RunPolynomial] {
        if n > 0 {
            self.atomic(n);
        }
        &self.atoms[..n]
    }

    /// `C_n`, `n >= 2`.
    pub fn circular(&mut self, n: usize) -> &RunPolynomial {
        assert!(n >= 2, "C_n is defined for n >= 2");
        while self.circular.len() < n - 1 {
            let next = match self.circular.last() {
                None => RunPolynomial::monomial(
                    Partition::from_sorted_unchecked(vec![1, 1]),
                    BigInt::one(),
                ),
                Some(prev) => apply_operator_with(OperatorKind::D, prev, self.strategy),
            };
            self.circular.push(next);
        }
        &self.circular[n - 2]
    }

    /// `L_n`, `n >= 0`.
    pub fn linear(&mut self, n: usize) -> &RunPolynomial {
        if self.linear.is_empty() {
            self.linear.push(RunPolynomial::one());
        }
        while self.linear.len() <= n {
            let k = self.linear.len();
            let next = match self.linear_route {
                LinearRoute::Operator => operator::apply_shifted(
                    OperatorKind::D,
                    &self.linear[k - 1],
                    Some(&BigInt::from(2)),
                    self.strategy,
                ),
                LinearRoute::Convolution => {
                    self.atomic(k);
                    linear_step(k, &self.atoms, &self.linear, self.strategy)
                }
            };
            self.linear.push(next);
        }
        &self.linear[n]
    }
}

/// Coefficient of `q` in `A_n`, zero for `n = 0`.
pub fn z_atomic(tables: &mut RunTables, q: &Partition) -> BigInt {
    let n = q.weight() as usize;
    if n == 0 {
        return BigInt::zero();
    }
    tables.atomic(n).coefficient(q)
}
