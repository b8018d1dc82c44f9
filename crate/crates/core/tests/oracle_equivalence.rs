mod common;

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use runstruct::enumerate::{atomic_polys, circular_polys, linear_polys_operator};
use runstruct::oracle::{
    beta, next_permutation, tally_descent_sets, tally_run_structures, tally_valleys,
    OracleConfig, PermutationKind,
};
use runstruct::valleys::valley_table;
use runstruct::{Partition, RunPolynomial};

fn as_map(p: &RunPolynomial) -> BTreeMap<Partition, BigInt> {
    p.terms().iter().cloned().collect()
}

fn tally_map(t: BTreeMap<Partition, u64>) -> BTreeMap<Partition, BigInt> {
    t.into_iter().map(|(k, v)| (k, BigInt::from(v))).collect()
}

fn config() -> OracleConfig {
    OracleConfig {
        linear_ceiling: 9,
        circular_ceiling: 9,
        atomic_ceiling: 10,
        ..OracleConfig::default()
    }
}

#[test]
fn linear_tallies_match_polynomials() {
    // L_n covers permutations of n + 1 letters
    let l = linear_polys_operator(8);
    for letters in 1..=9 {
        let t = tally_run_structures(PermutationKind::Linear, letters, &config()).unwrap();
        assert_eq!(tally_map(t), as_map(l.get(letters - 1).unwrap()), "{letters} letters");
    }
}

#[test]
fn circular_tallies_match_polynomials() {
    let c = circular_polys(9);
    for n in 2..=9 {
        let t = tally_run_structures(PermutationKind::Circular, n, &config()).unwrap();
        assert_eq!(tally_map(t), as_map(c.get(n).unwrap()), "n = {n}");
    }
}

#[test]
fn atomic_tallies_match_polynomials() {
    let a = atomic_polys(9);
    for n in 1..=9 {
        for kind in [PermutationKind::AtomicRising, PermutationKind::AtomicFalling] {
            let t = tally_run_structures(kind, n + 1, &config()).unwrap();
            assert_eq!(tally_map(t), as_map(a.get(n).unwrap()), "{kind} n = {n}");
        }
    }
}

#[test]
fn valley_tallies_match_table() {
    let table = valley_table(8).unwrap();
    for n in 1..=8 {
        let t = tally_valleys(n, &config()).unwrap();
        let t: Vec<BigInt> = t.into_iter().map(BigInt::from).collect();
        assert_eq!(t, table[n - 1].coeffs(), "n = {n}");
    }
}

#[test]
fn beta_matches_brute_force() {
    let cfg = config();
    for n in 1..=7usize {
        let tally = tally_descent_sets(n, &cfg).unwrap();
        for mask in 0u32..(1 << (n - 1)) {
            let s: BTreeSet<usize> = (0..n - 1).filter(|i| mask >> i & 1 == 1).map(|i| i + 1).collect();
            let want = tally.get(&s).copied().unwrap_or(0);
            assert_eq!(beta(&s, n).unwrap(), BigInt::from(want), "S = {s:?}, n = {n}");
        }
    }
}

#[test]
fn ceilings_are_enforced() {
    let cfg = OracleConfig::default();
    assert!(tally_run_structures(PermutationKind::Linear, 9, &cfg).is_err());
    assert!(tally_run_structures(PermutationKind::Circular, 10, &cfg).is_err());
}

#[test]
fn next_permutation_visits_all() {
    let mut v = vec![1, 2, 3, 4, 5];
    let mut count = 1;
    while next_permutation(&mut v) {
        count += 1;
    }
    assert_eq!(count, 120);
    assert_eq!(v, vec![5, 4, 3, 2, 1]);
}
