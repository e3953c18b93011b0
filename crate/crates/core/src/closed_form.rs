//! Closed-form coefficient formulas, evaluated exactly.
//!
//! Every formula is written in terms of the half-length `m`, where the permutation
//! length is `2m` or `2m + 1`. Binomials with out-of-range arguments are zero, which
//! makes each formula total over `k ≥ 0`.

use std::sync::Mutex;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::stats::Family;

static FACTORIALS: Mutex<Vec<BigInt>> = Mutex::new(Vec::new());

pub fn factorial(n: u64) -> BigInt {
    let mut memo = FACTORIALS.lock().unwrap_or_else(|e| e.into_inner());
    if memo.is_empty() {
        memo.push(BigInt::one());
    }
    while memo.len() as u64 <= n {
        let next = memo.last().unwrap() * BigInt::from(memo.len());
        memo.push(next);
    }
    memo[n as usize].clone()
}

/// `C(n, k)`, zero unless `0 ≤ k ≤ n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

fn exact_div(num: BigInt, den: i64) -> BigInt {
    assert!(den != 0, "division by zero in a closed form");
    let (q, r) = num.div_rem(&BigInt::from(den));
    assert!(r.is_zero(), "closed form did not divide exactly");
    q
}

fn fact(m: i64) -> BigInt {
    factorial(m as u64)
}

fn sq(b: BigInt) -> BigInt {
    &b * &b
}

/// One coefficient: `R_{k,n}`, `P_{j,k,n}`, `Q_{j,k,n}` or `M_{k,n}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CoefficientQuery {
    pub family: Family,
    /// Present exactly for P and Q.
    pub zdeg: Option<u32>,
    pub xdeg: u32,
    /// Permutation length.
    pub n: usize,
}

impl CoefficientQuery {
    pub fn new(family: Family, zdeg: Option<u32>, xdeg: u32, n: usize) -> Result<Self> {
        let needs_z = family.z_marker().is_some();
        match zdeg {
            Some(j) if !needs_z => {
                return Err(Error::InvalidInput(format!(
                    "family {family} has no z-degree (got {j})"
                )))
            }
            Some(j) if j > 1 => {
                return Err(Error::InvalidInput(format!(
                    "z-degree must be 0 or 1, got {j}"
                )))
            }
            None if needs_z => {
                return Err(Error::InvalidInput(format!(
                    "family {family} needs a z-degree"
                )))
            }
            _ => {}
        }
        if n == 0 {
            return Err(Error::InvalidInput("n must be at least 1".into()));
        }
        if xdeg as usize > n {
            return Err(Error::InvalidInput(format!(
                "x-degree {xdeg} exceeds n = {n}"
            )));
        }
        Ok(CoefficientQuery {
            family,
            zdeg,
            xdeg,
            n,
        })
    }
}

/// Exact value of the closed form for `q`.
pub fn coeff(q: &CoefficientQuery) -> BigInt {
    let k = q.xdeg as i64;
    let m = (q.n / 2) as i64;
    let even = q.n.is_multiple_of(2);
    let j = q.zdeg.unwrap_or(0);
    let c = binomial;
    match (q.family, even, j) {
        (Family::R, true, _) => sq(c(m, k)) * sq(fact(m)),
        (Family::R, false, _) => exact_div(sq(c(m, k)) * sq(fact(m + 1)), k + 1),
        (Family::P, true, 0) => c(m - 1, k) * c(m, k) * sq(fact(m)),
        (Family::P, true, _) => c(m - 1, k) * c(m, k + 1) * sq(fact(m)),
        (Family::P, false, 0) => BigInt::from(k + 1) * c(m, k) * c(m + 1, k + 1) * sq(fact(m)),
        (Family::P, false, _) => {
            let b = c(m, k);
            if b.is_zero() {
                return b;
            }
            exact_div(BigInt::from((m + 1) * (m - k)) * sq(b) * sq(fact(m)), k + 1)
        }
        (Family::Q, true, 0) => c(m - 1, k - 1) * c(m, k) * sq(fact(m)),
        (Family::Q, true, _) => c(m - 1, k) * c(m, k) * sq(fact(m)),
        (Family::Q, false, 0) => {
            let b = c(m, k - 1);
            if b.is_zero() {
                return b;
            }
            exact_div(BigInt::from((m + 1) * (m - k + 1)) * sq(b) * sq(fact(m)), k)
        }
        (Family::Q, false, _) => sq(c(m, k)) * fact(m) * fact(m + 1),
        (Family::M, true, _) => exact_div(
            BigInt::from(m + 1) * c(m - 1, k) * c(m, k) * sq(fact(m)),
            k + 1,
        ),
        (Family::M, false, _) => {
            let b = c(m, k);
            if b.is_zero() {
                return b;
            }
            exact_div(sq(b) * sq(fact(m + 1)), m - k + 1)
        }
    }
}

/// The second printed expression of a formula that is stated in two equivalent ways.
///
/// Covers `R_{k,2m+1}`, `P_{0,k,2m+1}`, `M_{k,2m}` and `M_{k,2m+1}`; `None` elsewhere.
pub fn coeff_alternate(q: &CoefficientQuery) -> Option<BigInt> {
    let k = q.xdeg as i64;
    let m = (q.n / 2) as i64;
    let even = q.n.is_multiple_of(2);
    let c = binomial;
    let value = match (q.family, even, q.zdeg) {
        (Family::R, false, _) => {
            BigInt::from(k + 1) * sq(c(m, k + 1)) * sq(fact(m))
                + BigInt::from(2 * m + 1 - k) * sq(c(m, k)) * sq(fact(m))
        }
        (Family::P, false, Some(0)) => BigInt::from(m + 1) * sq(c(m, k)) * sq(fact(m)),
        (Family::M, true, _) => c(m - 1, k) * c(m + 1, k + 1) * sq(fact(m)),
        (Family::M, false, _) => c(m, k) * c(m + 1, k) * fact(m) * fact(m + 1),
        _ => return None,
    };
    Some(value)
}

/// Closed-form polynomial: every coefficient with `zdeg ∈ {0,1}` (P, Q) and `xdeg ≤ n`.
pub fn closed_form_poly(family: Family, n: usize) -> Result<crate::poly::BivariatePolynomial> {
    if n == 0 {
        return Err(Error::InvalidInput("n must be at least 1".into()));
    }
    let zdegs: &[Option<u32>] = if family.z_marker().is_some() {
        &[Some(0), Some(1)]
    } else {
        &[None]
    };
    let mut out = crate::poly::BivariatePolynomial::zero();
    for &zdeg in zdegs {
        for k in 0..=n as u32 {
            let q = CoefficientQuery::new(family, zdeg, k, n)?;
            out.add_term(zdeg.unwrap_or(0), k, coeff(&q));
        }
    }
    Ok(out)
}

/// Boundary values of the `LeftEven` distribution: `R_{0,2m} = R_{m,2m} = (m!)²`.
pub fn r_boundary(m: u64) -> BigInt {
    sq(factorial(m))
}

/// Initial coefficients of P, in the order `P_{0,0,2m}`, `P_{1,0,2m}`, `P_{0,0,2m+1}`,
/// `P_{1,0,2m+1}`, each paired with its alternative printed expression.
pub fn p_initial_values(m: u64) -> [(BigInt, BigInt); 4] {
    let f = factorial(m);
    let g = factorial(m + 1);
    let mm = BigInt::from(m);
    [
        (sq(f.clone()), sq(f.clone())),
        (&f * &g - sq(f.clone()), &mm * sq(f.clone())),
        (&f * &g, &f * &g),
        (sq(g.clone()) - &f * &g, &mm * (&f * &g)),
    ]
}
