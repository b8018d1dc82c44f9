//! Exact enumeration of permutations by their alternating-run structure.
//!
//! The generating polynomials `A_n` (atomic), `C_n` (circular) and `L_n`
//! (linear) live in `Z[x_1, x_2, ...]`, where the coefficient of
//! `x_{l_1} ... x_{l_k}` counts permutations whose runs have lengths
//! `l_1, ..., l_k`. They are built by repeated application of a derivation
//! `D` and cross-checked against brute-force enumeration in [`oracle`].

mod combinat;
pub mod enumerate;
mod error;
pub mod natmerge;
pub mod oracle;
mod par;
mod partition;
mod poly;
pub mod sequences;
pub mod series;
pub mod valleys;

pub use combinat::{binomial, factorial, multinomial};
pub use error::Error;
pub use par::Strategy;
pub use partition::Partition;
pub use poly::{format_monomial, Assignment, Generator, RunPolynomial};
