//! Secant and tangent numbers, the `y_n` sequence, cumulants and the
//! generating-function consistency reports for the named substitutions.
//!
//! Every expected value here comes from a route that never touches the
//! operator `D`: the zigzag triangle for `S_n`/`T_n`, and exact power series
//! for the generating-function targets.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::enumerate::OperatorChain;
use crate::error::Error;
use crate::par::Strategy;
use crate::poly::{Assignment, Generator, RunPolynomial};
use crate::series::PowerSeries;

/// `Catalan(0) ..= Catalan(k)`.
pub fn catalan_numbers(k: usize) -> Vec<BigUint> {
    let mut out = Vec::with_capacity(k + 1);
    let mut c = BigUint::one();
    for i in 0..=k {
        out.push(c.clone());
        // C_{i+1} = C_i * 2(2i+1) / (i+2)
        c = c * BigUint::from(2 * (2 * i as u64 + 1)) / BigUint::from(i as u64 + 2);
    }
    out
}

/// Euler zigzag numbers `E_0 ..= E_m` from the Seidel-Entringer triangle.
fn zigzag_numbers(m: usize) -> Vec<BigUint> {
    let mut out = vec![BigUint::one()];
    let mut row = vec![BigUint::one()];
    for n in 1..=m {
        // E(n, 0) = 0, E(n, k) = E(n, k-1) + E(n-1, n-k)
        let mut next = Vec::with_capacity(n + 1);
        next.push(BigUint::zero());
        for k in 1..=n {
            let v = &next[k - 1] + &row[n - k];
            next.push(v);
        }
        out.push(next[n].clone());
        row = next;
    }
    out
}

/// `S_0 ..= S_{n_max}`: 1, 1, 5, 61, 1385, ...
pub fn secant_numbers(n_max: usize) -> Vec<BigUint> {
    let e = zigzag_numbers(2 * n_max);
    (0..=n_max).map(|n| e[2 * n].clone()).collect()
}

/// `T_1 ..= T_{n_max}` (index `i` holds `T_{i+1}`): 1, 2, 16, 272, ...
pub fn tangent_numbers(n_max: usize) -> Vec<BigUint> {
    if n_max == 0 {
        return Vec::new();
    }
    let e = zigzag_numbers(2 * n_max - 1);
    (1..=n_max).map(|n| e[2 * n - 1].clone()).collect()
}

/// `y_1 ..= y_{n_max}` (index `i` holds `y_{i+1}`).
///
/// `y_n = 2^n h_{n-1}(2)` with `h_0 = 1` and
/// `h_j(b) = sum_{r=0}^{b} (1 + r) h_{j-1}(2 + r)`.
pub fn y_sequence(n_max: usize) -> Vec<BigUint> {
    if n_max == 0 {
        return Vec::new();
    }
    // h_j is needed for b <= 2 + 2 (n_max - 1 - j)
    let bound = |j: usize| 2 + 2 * (n_max - 1 - j);
    let mut h: Vec<BigUint> = vec![BigUint::one(); bound(0) + 1];
    let mut out = Vec::with_capacity(n_max);
    out.push(BigUint::from(2u32));
    for j in 1..n_max {
        let b_max = bound(j);
        let mut next = Vec::with_capacity(b_max + 1);
        let mut running = BigUint::zero();
        for b in 0..=b_max {
            running += BigUint::from(b as u64 + 1) * &h[b + 2];
            next.push(running.clone());
        }
        h = next;
        out.push((BigUint::one() << (j + 1)) * &h[2]);
    }
    out
}

/// `kappa_1 ..= kappa_{n_max}` (index `i` holds `kappa_{i+1}`), where
/// `kappa_n = C_n / 2` under `assignment` and `kappa_1 = 0`.
pub fn cumulants(n_max: usize, assignment: &Assignment) -> Result<Vec<BigRational>, Error> {
    cumulants_with(n_max, assignment, Strategy::default())
}

pub fn cumulants_with(
    n_max: usize,
    assignment: &Assignment,
    strategy: Strategy,
) -> Result<Vec<BigRational>, Error> {
    if n_max < 2 {
        return Err(Error::Precondition(format!(
            "cumulants need n_max >= 2, got {n_max}"
        )));
    }
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    let mut out = vec![BigRational::zero()];
    for (_, c) in OperatorChain::circular(strategy).take(n_max - 1) {
        out.push(c.evaluate_with(assignment, strategy)? * &half);
    }
    Ok(out)
}

/// Result of comparing `sum_{n=2}^{N} kappa_n λ^n / n!` with
/// `log(e^{-λ/6} (1 - 12λ)^{-1/72})` under the `y` substitution.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct MgfCheck {
    pub lambda: f64,
    pub terms: usize,
    pub partial_sum: f64,
    pub closed_form: f64,
    pub difference: f64,
    pub passed: bool,
}

pub fn mgf_check(lambda: f64, terms: usize, tolerance: f64) -> Result<MgfCheck, Error> {
    if !(0.0..1.0 / 12.0).contains(&lambda) {
        return Err(Error::Precondition(format!(
            "lambda must lie in [0, 1/12), got {lambda}"
        )));
    }
    let kappas = cumulants(terms, &Assignment::new(Generator::QftY))?;
    let lam = BigRational::from_float(lambda).expect("finite");
    let mut sum = BigRational::zero();
    let mut weight = BigRational::one();
    for (i, k) in kappas.iter().enumerate() {
        let n = i + 1;
        weight = weight * &lam / BigRational::from_integer(BigInt::from(n));
        if n >= 2 {
            sum += k * &weight;
        }
    }
    let partial_sum = sum.to_f64().expect("finite partial sum");
    let closed_form = -lambda / 6.0 - (-12.0 * lambda).ln_1p() / 72.0;
    let difference = (partial_sum - closed_form).abs();
    Ok(MgfCheck {
        lambda,
        terms,
        partial_sum,
        closed_form,
        difference,
        passed: difference <= tolerance,
    })
}

/// A substitution family with a conjectured (or classical) generating function.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    QftY,
    Catalan,
    X1Only,
    Ones,
}

impl Family {
    pub const ALL: [Family; 4] = [Family::QftY, Family::Catalan, Family::X1Only, Family::Ones];

    pub fn name(self) -> &'static str {
        match self {
            Family::QftY => "qft-y",
            Family::Catalan => "catalan",
            Family::X1Only => "x1-only",
            Family::Ones => "ones",
        }
    }

    pub fn assignment(self) -> Assignment {
        Assignment::new(match self {
            Family::QftY => Generator::QftY,
            Family::Catalan => Generator::CatalanAlternating,
            Family::X1Only => Generator::X1Only,
            Family::Ones => Generator::Ones,
        })
    }

    /// Target generating functions `(sum A_n λ^{n-1}/(n-1)!,
    /// sum C_n λ^{n-2}/(n-2)!, sum L_n λ^n/n!)`, each to `order` terms.
    fn targets(self, order: usize) -> (PowerSeries, PowerSeries, PowerSeries) {
        let r = |n: i64, d: i64| BigRational::new(n.into(), d.into());
        match self {
            Family::QftY => {
                let twelve = r(12, 1);
                let a = PowerSeries::geometric(twelve.clone(), order).scale(&r(2, 1));
                let c = &a * &a;
                let l = PowerSeries::from_integers(&[1, -12], order)
                    .pow_rational(&r(-1, 3))
                    .expect("constant term 1");
                (a, c, l)
            }
            Family::Catalan => (
                PowerSeries::from_integers(&[1], order),
                PowerSeries::from_integers(&[1], order),
                PowerSeries::exp_linear(r(2, 1), order),
            ),
            Family::X1Only => {
                let sec = PowerSeries::sec(order);
                let sec_tan = &sec + &PowerSeries::tan(order);
                (sec.clone(), &sec * &sec, &sec_tan * &sec_tan)
            }
            Family::Ones => {
                let a = PowerSeries::geometric(BigRational::one(), order);
                let c = PowerSeries::from_integers(&[1, -1], order)
                    .pow_rational(&r(-2, 1))
                    .expect("constant term 1");
                (a, c.clone(), c)
            }
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s || (s == "catalan-alternating" && *f == Family::Catalan))
            .ok_or_else(|| Error::Parse(format!("unknown family {s:?}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Quantity {
    A,
    C,
    L,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Status {
    Consistent,
    Mismatch,
}

impl Status {
    pub fn label(self) -> &'static str {
        match self {
            Status::Consistent => "CONJECTURE-CONSISTENT",
            Status::Mismatch => "MISMATCH",
        }
    }
}

impl Serialize for Status {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.label())
    }
}

fn as_decimal<S: Serializer>(v: &BigRational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ReportRow {
    pub n: usize,
    pub quantity: Quantity,
    #[serde(serialize_with = "as_decimal")]
    pub expected: BigRational,
    #[serde(serialize_with = "as_decimal")]
    pub computed: BigRational,
    pub status: Status,
}

pub const DEFAULT_BUDGET: usize = 30;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ReportConfig {
    /// Largest `n` accepted without error.
    pub budget: usize,
    pub strategy: Strategy,
}

impl Default for ReportConfig {
    fn default() -> Self {
        ReportConfig {
            budget: DEFAULT_BUDGET,
            strategy: Strategy::default(),
        }
    }
}

/// Rows for `A_1..A_{n_max}`, `C_2..C_{n_max}` and `L_1..L_{n_max}`, ordered by
/// `n` and then by quantity.
pub fn conjecture_report(family: Family, n_max: usize) -> Result<Vec<ReportRow>, Error> {
    conjecture_report_with(family, n_max, &ReportConfig::default())
}

pub fn conjecture_report_with(
    family: Family,
    n_max: usize,
    config: &ReportConfig,
) -> Result<Vec<ReportRow>, Error> {
    if n_max < 1 {
        return Err(Error::Precondition("report needs n_max >= 1".into()));
    }
    if n_max > config.budget {
        return Err(Error::BudgetExceeded {
            n: n_max,
            budget: config.budget,
        });
    }
    let assignment = family.assignment();
    let (a_gf, c_gf, l_gf) = family.targets(n_max + 1);
    let strategy = config.strategy;
    let eval = |p: &RunPolynomial| p.evaluate_with(&assignment, strategy);
    let row = |n, quantity, expected: BigRational, computed: BigRational| {
        let status = if expected == computed {
            Status::Consistent
        } else {
            Status::Mismatch
        };
        ReportRow {
            n,
            quantity,
            expected,
            computed,
            status,
        }
    };

    let mut atoms = OperatorChain::atomic(strategy);
    let mut circ = OperatorChain::circular(strategy);
    let mut lin = OperatorChain::linear(strategy).skip(1);
    let mut rows = Vec::new();
    for n in 1..=n_max {
        let (_, a) = atoms.next().expect("infinite chain");
        rows.push(row(n, Quantity::A, a_gf.egf_coeff(n - 1), eval(&a)?));
        if n >= 2 {
            let (_, c) = circ.next().expect("infinite chain");
            rows.push(row(n, Quantity::C, c_gf.egf_coeff(n - 2), eval(&c)?));
        }
        let (_, l) = lin.next().expect("infinite chain");
        rows.push(row(n, Quantity::L, l_gf.egf_coeff(n), eval(&l)?));
    }
    Ok(rows)
}
