#![allow(dead_code)]

use num_bigint::BigInt;
use runstruct::{Partition, RunPolynomial};

/// Parses `9 x_4 x_1^2 + 11 x_2^3`-style sums over the variable letter `var`.
pub fn parse_poly(s: &str, var: char) -> RunPolynomial {
    let terms = s.split('+').map(|term| {
        let term: String = term.chars().filter(|c| !c.is_whitespace()).collect();
        let (coeff, rest) = match term.find(var) {
            Some(0) => (BigInt::from(1), term.as_str()),
            Some(i) => (term[..i].parse().expect("coefficient"), &term[i..]),
            None => panic!("no variable in {term:?}"),
        };
        let mut parts = Vec::new();
        for factor in rest.split(var).filter(|f| !f.is_empty()) {
            let factor = factor.strip_prefix('_').expect("subscript");
            let (index, power) = match factor.split_once('^') {
                Some((i, p)) => (i.parse::<u32>().unwrap(), p.parse::<usize>().unwrap()),
                None => (factor.parse::<u32>().unwrap(), 1),
            };
            parts.extend(std::iter::repeat_n(index, power));
        }
        (Partition::new(parts).unwrap(), coeff)
    });
    RunPolynomial::from_terms(terms)
}

pub fn poly(terms: &[(&[u32], i64)]) -> RunPolynomial {
    RunPolynomial::from_terms(
        terms
            .iter()
            .map(|(k, c)| (Partition::new(k.to_vec()).unwrap(), BigInt::from(*c))),
    )
}

pub fn part(p: &[u32]) -> Partition {
    Partition::new(p.to_vec()).unwrap()
}

pub const PRINTED_ATOMIC: [(usize, &str); 5] = [
    (2, "x_2"),
    (3, "x_3 + x_1^3"),
    (4, "x_4 + 5 x_2 x_1^2"),
    (5, "x_5 + 7 x_3 x_1^2 + 11 x_2^2 x_1 + 5 x_1^5"),
    (6, "x_6 + 9 x_4 x_1^2 + 11 x_2^3 + 38 x_3 x_2 x_1 + 61 x_2 x_1^4"),
];

pub const PRINTED_CIRCULAR: [(usize, &str); 4] = [
    (3, "2 x_2 x_1"),
    (4, "2 x_2^2 + 2 x_3 x_1 + 2 x_1^4"),
    (5, "2 x_4 x_1 + 6 x_3 x_2 + 16 x_1^3 x_2"),
    (6, "2 x_5 x_1 + 8 x_4 x_2 + 6 x_3^2 + 62 x_1^2 x_2^2 + 26 x_1^3 x_3 + 16 x_1^6"),
];

pub const PRINTED_LINEAR_ATOMS: [(usize, &str); 6] = [
    (1, "2 A_1"),
    (2, "4 A_1^2 + 2 A_2"),
    (3, "8 A_1^3 + 12 A_1 A_2 + 2 A_3"),
    (4, "16 A_1^4 + 48 A_1^2 A_2 + 12 A_2^2 + 16 A_1 A_3 + 2 A_4"),
    (5, "32 A_1^5 + 160 A_1^3 A_2 + 120 A_1 A_2^2 + 80 A_1^2 A_3 + 40 A_2 A_3 + 20 A_1 A_4 + 2 A_5"),
    (6, "64 A_1^6 + 480 A_1^4 A_2 + 320 A_1^3 A_3 + 720 A_1^2 A_2^2 + 120 A_1^2 A_4 + 480 A_1 A_2 A_3 + 120 A_2^3 + 24 A_1 A_5 + 60 A_2 A_4 + 40 A_3^2 + 2A_6"),
];

pub const PRINTED_LINEAR: [(usize, &str); 6] = [
    (1, "2 x_1"),
    (2, "4 x_1^2 + 2 x_2"),
    (3, "10 x_1^3 + 12 x_1 x_2 + 2 x_3"),
    (4, "32 x_1^4 + 58 x_1^2 x_2 + 12 x_2^2 + 16 x_1 x_3 + 2 x_4"),
    (5, "122 x_1^5 + 300 x_1^3 x_2 + 142 x_1 x_2^2 + 94 x_1^2 x_3 + 40 x_2 x_3 + 20 x_1 x_4 + 2 x_5"),
    (6, "544 x_1^6 + 1682 x_1^4 x_2 + 568x_1^3 x_3 + 1284 x_1^2 x_2^2 + 138 x_1^2 x_4 + 556 x_1 x_2 x_3 + 142 x_2^3 + 24 x_1 x_5 + 60 x_2 x_4 + 40 x_3^2 + 2x_6"),
];

pub const PRINTED_VALLEYS: [(usize, &[i64]); 6] = [
    (1, &[1]),
    (2, &[2]),
    (3, &[4, 2]),
    (4, &[8, 16]),
    (5, &[16, 88, 16]),
    (6, &[32, 416, 272]),
];
