mod common;

use common::*;
use num_bigint::BigInt;
use runstruct::enumerate::{
    atomic_polys, circular_polys, linear_atom_form, linear_polys, linear_polys_faa,
    linear_polys_operator,
};
use runstruct::valleys::{valley_poly, valley_polys_by_recurrence, ValleyPolynomial};
use runstruct::RunPolynomial;

#[test]
fn atomic_polynomials() {
    let a = atomic_polys(6);
    for (n, text) in PRINTED_ATOMIC {
        assert_eq!(a.get(n).unwrap(), &parse_poly(text, 'x'), "A_{n}");
    }
}

#[test]
fn atomic_pretty_printing() {
    let a = atomic_polys(5);
    assert_eq!(a.get(5).unwrap().to_string(), "x₅ + 7x₃x₁² + 11x₂²x₁ + 5x₁⁵");
}

#[test]
fn circular_polynomials() {
    let c = circular_polys(6);
    for (n, text) in PRINTED_CIRCULAR {
        assert_eq!(c.get(n).unwrap(), &parse_poly(text, 'x'), "C_{n}");
    }
}

#[test]
fn linear_polynomials_in_atoms() {
    for (n, text) in PRINTED_LINEAR_ATOMS {
        assert_eq!(linear_atom_form(n), parse_poly(text, 'A'), "L_{n}");
    }
}

#[test]
fn linear_polynomials_in_runs() {
    let conv = linear_polys(6);
    let op = linear_polys_operator(6);
    let atoms = atomic_polys(6);
    for (n, text) in PRINTED_LINEAR {
        let want = parse_poly(text, 'x');
        assert_eq!(conv.get(n).unwrap(), &want, "L_{n} convolution");
        assert_eq!(op.get(n).unwrap(), &want, "L_{n} operator");
        assert_eq!(&linear_polys_faa(n, atoms.as_slice()).unwrap(), &want, "L_{n} faa");
    }
    assert_eq!(conv.get(0).unwrap(), &RunPolynomial::one());
}

#[test]
fn atom_form_expands_to_run_form() {
    // substitute A_i into the atom form by hand
    let atoms = atomic_polys(6);
    for (n, text) in PRINTED_LINEAR {
        let form = linear_atom_form(n);
        let mut expanded = RunPolynomial::zero();
        for (p, c) in form.terms() {
            let mut term = RunPolynomial::one().scale(c);
            for &i in p.parts() {
                term = &term * atoms.get(i as usize).unwrap();
            }
            expanded = &expanded + &term;
        }
        assert_eq!(expanded, parse_poly(text, 'x'), "L_{n}");
    }
}

#[test]
fn valley_polynomials() {
    let c = circular_polys(7);
    let rec = valley_polys_by_recurrence(6);
    for (n, coeffs) in PRINTED_VALLEYS {
        let want = ValleyPolynomial::new(coeffs.iter().map(|&v| BigInt::from(v)).collect());
        assert_eq!(valley_poly(n, c.get(n + 1).unwrap()).unwrap(), want, "K_{n}");
        assert_eq!(rec[n], want, "K_{n} recurrence");
    }
}
