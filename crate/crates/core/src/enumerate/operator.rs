//! The run-extension operators `D0`, `D+` and `D = D0 + D+`.
//!
//! Inserting a new largest letter into an atomic or circular permutation
//! either lengthens one run (`D0: x_i -> x_{i+1}`) or splits a run of length
//! `i + j` into runs of lengths `1, i, j` (`D+: x_{i+j} -> x_1 x_i x_j`).
//! Both act on monomials by the Leibniz rule; `D+` sums over ordered pairs.

use num_bigint::BigInt;
use num_traits::Zero;
use rustc_hash::FxHashMap;

use crate::combinat::{multinomial, weak_compositions};
use crate::par::{self, Strategy};
use crate::partition::Partition;
use crate::poly::{Accumulator, RunPolynomial};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OperatorKind {
    /// Degree-preserving part.
    D0,
    /// Degree-increasing part.
    DPlus,
    /// The full operator.
    D,
}

pub fn apply_operator(kind: OperatorKind, p: &RunPolynomial) -> RunPolynomial {
    apply_operator_with(kind, p, Strategy::default())
}

pub fn apply_operator_with(
    kind: OperatorKind,
    p: &RunPolynomial,
    strategy: Strategy,
) -> RunPolynomial {
    apply_shifted(kind, p, None, strategy)
}

/// `kind(p) + shift * x_1 * p`; with `shift = 2` and `kind = D` this is the
/// step `L_n = (D + 2 x_1) L_{n-1}`.
pub(crate) fn apply_shifted(
    kind: OperatorKind,
    p: &RunPolynomial,
    shift: Option<&BigInt>,
    strategy: Strategy,
) -> RunPolynomial {
    match homogeneous_weight(p) {
        Some(w) => pull(kind, p, w, shift, strategy),
        None => push(kind, p, shift, strategy),
    }
}

fn homogeneous_weight(p: &RunPolynomial) -> Option<u64> {
    // terms are graded by weight, so the ends decide
    let first = p.terms().first()?.0.weight();
    (p.terms().last()?.0.weight() == first).then_some(first)
}

/// Expands every term and sums the images.
fn push(
    kind: OperatorKind,
    p: &RunPolynomial,
    shift: Option<&BigInt>,
    strategy: Strategy,
) -> RunPolynomial {
    let x1 = Partition::from_sorted_unchecked(vec![1]);
    par::fold_reduce(
        p.terms(),
        strategy,
        Accumulator::new,
        |acc, (key, coeff)| {
            expand_term(kind, key, coeff, acc);
            if let Some(s) = shift {
                acc.add(key.union(&x1), coeff * s);
            }
        },
        Accumulator::merge,
    )
    .finish()
}

/// For input of weight `w`, visits every monomial of weight `w + 1` in
/// canonical order and gathers its coefficient from its preimages.
fn pull(
    kind: OperatorKind,
    p: &RunPolynomial,
    w: u64,
    shift: Option<&BigInt>,
    strategy: Strategy,
) -> RunPolynomial {
    let index: FxHashMap<&[u32], &BigInt> =
        p.terms().iter().map(|(k, c)| (k.parts(), c)).collect();
    let max_len = p.terms().iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    let mut allowed = vec![false; max_len + 3];
    for (k, _) in p.terms() {
        let d = k.len();
        if kind != OperatorKind::DPlus {
            allowed[d] = true;
        }
        if kind != OperatorKind::D0 && k.largest().is_some_and(|v| v >= 2) {
            allowed[d + 2] = true;
        }
        if shift.is_some() {
            allowed[d + 1] = true;
        }
    }
    let mut candidates = Partition::all_of((w + 1) as u32);
    candidates.retain(|q| allowed.get(q.len()).copied().unwrap_or(false));
    candidates.reverse();

    let chunks: Vec<&[Partition]> = candidates.chunks(CHUNK).collect();
    let pieces = par::map_range(chunks.len(), strategy, |i| {
        let mut scratch = Vec::new();
        chunks[i]
            .iter()
            .filter_map(|q| {
                let c = gather(kind, q.parts(), &index, shift, &mut scratch);
                (!c.is_zero()).then(|| (q.clone(), c))
            })
            .collect::<Vec<_>>()
    });
    RunPolynomial::from_sorted_unchecked(pieces.into_iter().flatten().collect())
}

const CHUNK: usize = 1024;

fn count(q: &[u32], v: u32) -> usize {
    // q is non-increasing
    let lo = q.partition_point(|&x| x > v);
    let hi = q.partition_point(|&x| x >= v);
    hi - lo
}

/// Coefficient of `q` in `kind(p) + shift * x_1 * p`.
fn gather(
    kind: OperatorKind,
    q: &[u32],
    index: &FxHashMap<&[u32], &BigInt>,
    shift: Option<&BigInt>,
    scratch: &mut Vec<u32>,
) -> BigInt {
    let mut total = BigInt::zero();
    if kind != OperatorKind::DPlus {
        // undo x_{v-1} -> x_v on the last copy of v, which keeps the order
        let mut i = 0;
        while i < q.len() {
            let v = q[i];
            let mut end = i;
            while end < q.len() && q[end] == v {
                end += 1;
            }
            if v >= 2 {
                scratch.clear();
                scratch.extend_from_slice(q);
                scratch[end - 1] = v - 1;
                if let Some(c) = index.get(&scratch[..]) {
                    total += *c * (count(q, v - 1) + 1);
                }
            }
            i = end;
        }
    }
    if q.last() != Some(&1) {
        return total;
    }
    let rest = &q[..q.len() - 1];
    if let Some(s) = shift {
        if let Some(c) = index.get(rest) {
            total += *c * s;
        }
    }
    if kind == OperatorKind::D0 {
        return total;
    }
    // undo x_{i+j} -> x_1 x_i x_j for each unordered pair of values in rest
    let mut values: Vec<(u32, usize)> = Vec::new();
    for &v in rest {
        match values.last_mut() {
            Some((last, m)) if *last == v => *m += 1,
            _ => values.push((v, 1)),
        }
    }
    for (a, &(i, mi)) in values.iter().enumerate() {
        for &(j, _) in &values[a..] {
            if i == j && mi < 2 {
                continue;
            }
            let sum = i + j;
            scratch.clear();
            let (mut skip_i, mut skip_j, mut placed) = (true, true, false);
            for &x in rest {
                if !placed && sum > x {
                    scratch.push(sum);
                    placed = true;
                }
                if skip_i && x == i {
                    skip_i = false;
                } else if skip_j && x == j {
                    skip_j = false;
                } else {
                    scratch.push(x);
                }
            }
            if !placed {
                scratch.push(sum);
            }
            if let Some(c) = index.get(&scratch[..]) {
                let m = count(rest, sum) + 1;
                let factor = if i == j { m } else { 2 * m };
                total += *c * factor;
            }
        }
    }
    total
}

fn expand_term(kind: OperatorKind, key: &Partition, coeff: &BigInt, acc: &mut Accumulator) {
    let parts = key.parts();
    let mut idx = 0;
    while idx < parts.len() {
        let v = parts[idx];
        let mut end = idx;
        while end < parts.len() && parts[end] == v {
            end += 1;
        }
        let mult = BigInt::from(end - idx);
        let c = coeff * &mult;

        if kind != OperatorKind::DPlus {
            // everything before idx is > v, so bumping the first v keeps order
            let mut bumped = parts.to_vec();
            bumped[idx] = v + 1;
            acc.add(Partition::from_sorted_unchecked(bumped), c.clone());
        }

        if kind != OperatorKind::D0 && v >= 2 {
            let mut rest = parts.to_vec();
            rest.remove(idx);
            let rest = Partition::from_sorted_unchecked(rest);
            for i in 1..=v / 2 {
                let j = v - i;
                let split = Partition::from_sorted_unchecked(vec![j, i, 1]);
                // (i, j) and (j, i) give the same monomial unless i == j
                let factor = if i == j { c.clone() } else { &c * 2 };
                acc.add(rest.union(&split), factor);
            }
        }
        idx = end;
    }
}

/// `D0^n` applied to the monomial of `m`, expanded by the multinomial Leibniz
/// rule rather than by iteration.
pub fn repeated_d0(m: &Partition, n: u32) -> RunPolynomial {
    let parts = m.parts();
    let mut acc = Accumulator::new();
    for shifts in weak_compositions(u64::from(n), parts.len()) {
        let coeff = BigInt::from(multinomial(&shifts));
        let shifted: Vec<u32> = parts
            .iter()
            .zip(&shifts)
            .map(|(&p, &s)| p + s as u32)
            .collect();
        let key = Partition::new(shifted).expect("shifted parts stay positive");
        acc.add(key, coeff);
    }
    acc.finish()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn poly(terms: &[(&[u32], i64)]) -> RunPolynomial {
        RunPolynomial::from_terms(terms.iter().map(|(k, c)| (p(k), BigInt::from(*c))))
    }

    #[test]
    fn d_on_x1_squared_x3() {
        // five insertion slots, so the coefficients sum to 5: D+ x_3 = 2 x_1^2 x_2
        let got = apply_operator(OperatorKind::D, &poly(&[(&[3, 1, 1], 1)]));
        let want = poly(&[(&[3, 2, 1], 2), (&[4, 1, 1], 1), (&[2, 1, 1, 1, 1], 2)]);
        assert_eq!(got, want);
    }

    #[test]
    fn small_cases() {
        let x1 = RunPolynomial::var(1);
        assert_eq!(apply_operator(OperatorKind::D0, &x1), RunPolynomial::var(2));
        assert!(apply_operator(OperatorKind::DPlus, &x1).is_zero());
        let x1_cubed = poly(&[(&[1, 1, 1], 1)]);
        assert_eq!(
            apply_operator(OperatorKind::D0, &x1_cubed),
            poly(&[(&[2, 1, 1], 3)])
        );
        assert!(apply_operator(OperatorKind::D, &RunPolynomial::one()).is_zero());
    }

    #[test]
    fn d_is_sum_of_parts() {
        let q = poly(&[(&[4, 2, 2, 1], 3), (&[5, 3], -2), (&[1, 1], 7)]);
        let d = apply_operator(OperatorKind::D, &q);
        let sum = &apply_operator(OperatorKind::D0, &q) + &apply_operator(OperatorKind::DPlus, &q);
        assert_eq!(d, sum);
    }

    #[test]
    fn repeated_d0_examples() {
        assert_eq!(repeated_d0(&p(&[1]), 2), RunPolynomial::var(3));
        assert_eq!(repeated_d0(&p(&[2, 1]), 1), poly(&[(&[2, 2], 1), (&[3, 1], 1)]));
        assert_eq!(repeated_d0(&p(&[1, 1]), 2), poly(&[(&[3, 1], 2), (&[2, 2], 2)]));
        assert_eq!(repeated_d0(&Partition::empty(), 0), RunPolynomial::one());
        assert!(repeated_d0(&Partition::empty(), 3).is_zero());
    }

    #[test]
    fn repeated_d0_matches_iteration() {
        for m in [p(&[3, 1, 1]), p(&[2, 2]), p(&[4]), p(&[1, 1, 1, 1])] {
            let mut iter = RunPolynomial::monomial(m.clone(), 1.into());
            for n in 0..6 {
                assert_eq!(repeated_d0(&m, n), iter, "m = {m}, n = {n}");
                iter = apply_operator(OperatorKind::D0, &iter);
            }
        }
    }

    #[test]
    fn pull_matches_push() {
        let two = BigInt::from(2);
        let mut q = RunPolynomial::var(1);
        let mut l = RunPolynomial::one();
        for _ in 0..12 {
            for kind in [OperatorKind::D0, OperatorKind::DPlus, OperatorKind::D] {
                let w = homogeneous_weight(&q).unwrap();
                assert_eq!(
                    pull(kind, &q, w, None, Strategy::Sequential),
                    push(kind, &q, None, Strategy::Sequential)
                );
            }
            let w = homogeneous_weight(&l).unwrap();
            assert_eq!(
                pull(OperatorKind::D, &l, w, Some(&two), Strategy::Sequential),
                push(OperatorKind::D, &l, Some(&two), Strategy::Sequential)
            );
            q = apply_operator(OperatorKind::D, &q);
            l = apply_shifted(OperatorKind::D, &l, Some(&two), Strategy::Sequential);
        }
    }

    #[test]
    fn sequential_and_parallel_agree() {
        let mut q = RunPolynomial::var(1);
        for _ in 0..14 {
            q = apply_operator(OperatorKind::D, &q);
        }
        assert_eq!(
            apply_operator_with(OperatorKind::D, &q, Strategy::Sequential),
            apply_operator_with(OperatorKind::D, &q, Strategy::Parallel)
        );
    }

    proptest::proptest! {
        #[test]
        fn pull_matches_push_on_random_input(
            w in 1u32..9,
            picks in proptest::collection::vec((0usize..1000, -9i64..=9), 1..8),
            shift in proptest::option::of(-3i64..=3),
        ) {
            let all = Partition::all_of(w);
            let q = RunPolynomial::from_terms(
                picks.iter().map(|&(i, c)| (all[i % all.len()].clone(), BigInt::from(c))),
            );
            let shift = shift.map(BigInt::from);
            for kind in [OperatorKind::D0, OperatorKind::DPlus, OperatorKind::D] {
                proptest::prop_assert_eq!(
                    pull(kind, &q, u64::from(w), shift.as_ref(), Strategy::Sequential),
                    push(kind, &q, shift.as_ref(), Strategy::Sequential)
                );
            }
        }
    }
}
