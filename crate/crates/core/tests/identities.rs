mod common;

use common::*;
use num_bigint::BigInt;
use runstruct::enumerate::{
    atomic_polys, atomic_polys_accelerated, atomic_third_degree, circular_degree_parts,
    circular_from_atomic, circular_polys, linear_polys, linear_polys_faa, linear_polys_operator,
    one_two_equal_closed_form, z_special_series, SpecialSeries,
};
use runstruct::sequences::{secant_numbers, tangent_numbers};
use runstruct::{binomial, factorial, Assignment, Partition};

const N: usize = 30;

#[test]
fn circular_is_atomic_square() {
    let a = atomic_polys(N);
    let c = circular_polys(N);
    for n in 2..=N {
        let sq = circular_from_atomic(n, a.as_slice()).unwrap();
        assert_eq!(&sq, c.get(n).unwrap(), "n = {n}");
    }
}

#[test]
fn faa_di_bruno_matches_recurrence() {
    let a = atomic_polys(25);
    let l = linear_polys(25);
    for n in 0..=25 {
        let faa = linear_polys_faa(n, a.as_slice()).unwrap();
        assert_eq!(&faa, l.get(n).unwrap(), "n = {n}");
    }
}

#[test]
fn linear_routes_agree() {
    assert_eq!(linear_polys(N), linear_polys_operator(N));
}

#[test]
fn accelerated_atoms_agree() {
    assert_eq!(atomic_polys_accelerated(N), atomic_polys(N));
}

#[test]
fn low_degree_parts() {
    let a = atomic_polys(N);
    let c = circular_polys(N);
    for n in 3..=N {
        assert_eq!(
            atomic_third_degree(n).unwrap(),
            a.get(n).unwrap().degree_part(3),
            "A_{n}^(3)"
        );
    }
    for n in 2..=N {
        let (two, four) = circular_degree_parts(n).unwrap();
        let cn = c.get(n).unwrap();
        assert_eq!(two, cn.degree_part(2), "C_{n}^(2)");
        assert_eq!(four, cn.degree_part(4), "C_{n}^(4)");
    }
}

#[test]
fn parity_and_grading() {
    let a = atomic_polys(N);
    let c = circular_polys(N);
    let l = linear_polys_operator(N);
    for (n, p) in a.iter() {
        p.check_homogeneous(n as u64).unwrap();
        // an atomic word alternates up and down, ending in the direction it started
        assert!(p.terms().iter().all(|(k, _)| k.len() % 2 == 1), "A_{n}");
    }
    for (n, p) in c.iter() {
        p.check_homogeneous(n as u64).unwrap();
        assert!(p.terms().iter().all(|(k, _)| k.len() % 2 == 0), "C_{n}");
    }
    for (n, p) in l.iter() {
        p.check_homogeneous(n as u64).unwrap();
    }
}

#[test]
fn coefficient_sums() {
    let a = atomic_polys(N);
    let c = circular_polys(N);
    let l = linear_polys_operator(N);
    let ones = Assignment::ones();
    let fact = |n: usize| BigInt::from(factorial(n as u64));
    for n in 1..=N {
        assert_eq!(a.get(n).unwrap().coefficient_sum(), fact(n - 1), "A_{n}(1)");
        assert_eq!(l.get(n).unwrap().coefficient_sum(), fact(n + 1), "L_{n}(1)");
        let via_eval = l.get(n).unwrap().evaluate(&ones).unwrap();
        assert_eq!(via_eval.to_integer(), fact(n + 1));
    }
    for n in 2..=N {
        assert_eq!(c.get(n).unwrap().coefficient_sum(), fact(n - 1), "C_{n}(1)");
    }
}

#[test]
fn special_series_against_coefficients() {
    let a = atomic_polys(21);
    let z = |p: &Partition| a.get(p.weight() as usize).unwrap().coefficient(p);
    let nnn = [1, 11, 181, 3499, 73501, 1623467];
    for (i, &want) in nnn.iter().enumerate() {
        let n = i as u64 + 1;
        let key = SpecialSeries::EqualTriple.partition(n as u32);
        assert_eq!(z_special_series(SpecialSeries::EqualTriple, n).unwrap(), want.into());
        assert_eq!(z(&key), want.into(), "Z(n+n+n), n = {n}");
    }
    for n in 2..=10u64 {
        let key = SpecialSeries::OneTwoEqual.partition(n as u32);
        let closed = one_two_equal_closed_form(n);
        assert_eq!(z_special_series(SpecialSeries::OneTwoEqual, n).unwrap(), closed);
        assert_eq!(z(&key), closed, "Z(1+n+n), n = {n}");
    }
    for n in 2..=15u64 {
        let key = SpecialSeries::TwoOnes.partition(n as u32);
        assert_eq!(z(&key), BigInt::from(2 * n + 1), "Z(1+1+n), n = {n}");
    }
}

#[test]
fn secant_tangent_from_coefficients() {
    let a = atomic_polys(11);
    let c = circular_polys(12);
    let s = secant_numbers(5);
    let t = tangent_numbers(6);
    for (k, sk) in s.iter().enumerate() {
        let n = 2 * k + 1;
        let all_ones = Partition::repeated(1, n).unwrap();
        assert_eq!(a.get(n).unwrap().coefficient(&all_ones), BigInt::from(sk.clone()), "S_{k}");
    }
    for k in 1..=6usize {
        let n = 2 * k;
        let all_ones = Partition::repeated(1, n).unwrap();
        assert_eq!(c.get(n).unwrap().coefficient(&all_ones), BigInt::from(t[k - 1].clone()), "T_{k}");
    }
    let printed_s = [1u64, 1, 5, 61, 1385, 50521];
    let printed_t = [1u64, 2, 16, 272, 7936, 353792];
    assert!(s.iter().zip(printed_s).all(|(x, y)| *x == y.into()));
    assert!(t.iter().zip(printed_t).all(|(x, y)| *x == y.into()));
    let s10 = secant_numbers(10);
    let t11 = tangent_numbers(11);
    for n in 0..=10u64 {
        let sum: num_bigint::BigUint = (0..=n)
            .map(|m| binomial(2 * n, 2 * m) * &s10[m as usize] * &s10[(n - m) as usize])
            .sum();
        assert_eq!(sum, t11[n as usize], "T_{}", n + 1);
    }
}

#[test]
fn circular_degree_two_example() {
    assert_eq!(
        circular_degree_parts(6).unwrap().0,
        poly(&[(&[5, 1], 2), (&[4, 2], 8), (&[3, 3], 6)])
    );
}
