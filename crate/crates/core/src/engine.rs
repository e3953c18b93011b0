//! Insertion operators and the recursions that generate the R, P, Q and M families.
//!
//! Each operator is a table of monomial actions. A size-`2n` or size-`2n+1` operator
//! sends `z^j x^k` to a sum of terms `(c0 + cn·n + ck·k) z^{j'} x^{k+dx}`. Inserting the
//! largest value into every slot of every permutation of the previous size is exactly
//! one application of the matching table.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::poly::BivariatePolynomial;
use crate::stats::Family;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OperatorId {
    /// `R_{2n} → R_{2n+1}`
    Delta,
    /// `R_{2n+1} → R_{2n+2}`
    Gamma,
    /// `P_{2n} → P_{2n+1}`
    Theta,
    /// `P_{2n+1} → P_{2n+2}`
    Omega,
    /// `Q_{2n} → Q_{2n+1}`
    Phi,
    /// `Q_{2n+1} → Q_{2n+2}`
    Psi,
    /// `P_n → Q_n`
    Xi,
}

/// One output term of a monomial action.
#[derive(Debug, Clone, Copy)]
struct Term {
    zdeg: u32,
    dx: i32,
    c0: i64,
    cn: i64,
    ck: i64,
}

const fn t(zdeg: u32, dx: i32, c0: i64, cn: i64, ck: i64) -> Term {
    Term {
        zdeg,
        dx,
        c0,
        cn,
        ck,
    }
}

/// Images of `z^0 x^k` and `z^1 x^k`; `None` marks a monomial outside the domain.
struct ActionTable {
    z0: &'static [Term],
    z1: Option<&'static [Term]>,
}

// x^k ↦ k x^{k-1} + (2n+1-k) x^k
const DELTA: ActionTable = ActionTable {
    z0: &[t(0, -1, 0, 0, 1), t(0, 0, 1, 2, -1)],
    z1: None,
};
// x^k ↦ (k+1) x^k + (2n+1-k) x^{k+1}
const GAMMA: ActionTable = ActionTable {
    z0: &[t(0, 0, 1, 0, 1), t(0, 1, 1, 2, -1)],
    z1: None,
};
const THETA: ActionTable = ActionTable {
    z0: &[t(0, 0, 1, 1, 1), t(0, 1, 0, 1, -1)],
    z1: Some(&[t(1, 0, 1, 1, 1), t(0, 1, 1, 0, 0), t(1, 1, -1, 1, -1)]),
};
const OMEGA: ActionTable = ActionTable {
    z0: &[t(0, 0, 1, 1, 1), t(1, 0, 1, 0, 0), t(0, 1, 0, 1, -1)],
    z1: Some(&[t(1, 0, 2, 1, 1), t(1, 1, 0, 1, -1)]),
};
const PHI: ActionTable = ActionTable {
    z0: &[t(1, 0, 1, 0, 0), t(0, 0, 0, 1, 1), t(0, 1, 0, 1, -1)],
    z1: Some(&[t(1, 0, 1, 1, 1), t(1, 1, 0, 1, -1)]),
};
const PSI: ActionTable = ActionTable {
    z0: &[t(0, 0, 1, 1, 1), t(0, 1, 1, 1, -1)],
    z1: Some(&[t(1, 0, 1, 1, 1), t(0, 1, 1, 0, 0), t(1, 1, 0, 1, -1)]),
};
const XI: ActionTable = ActionTable {
    z0: &[t(1, 0, 1, 0, 0)],
    z1: Some(&[t(0, 1, 1, 0, 0)]),
};

impl OperatorId {
    pub const ALL: [OperatorId; 7] = [
        OperatorId::Delta,
        OperatorId::Gamma,
        OperatorId::Theta,
        OperatorId::Omega,
        OperatorId::Phi,
        OperatorId::Psi,
        OperatorId::Xi,
    ];

    fn table(self) -> &'static ActionTable {
        match self {
            OperatorId::Delta => &DELTA,
            OperatorId::Gamma => &GAMMA,
            OperatorId::Theta => &THETA,
            OperatorId::Omega => &OMEGA,
            OperatorId::Phi => &PHI,
            OperatorId::Psi => &PSI,
            OperatorId::Xi => &XI,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            OperatorId::Delta => "DELTA",
            OperatorId::Gamma => "GAMMA",
            OperatorId::Theta => "THETA",
            OperatorId::Omega => "OMEGA",
            OperatorId::Phi => "PHI",
            OperatorId::Psi => "PSI",
            OperatorId::Xi => "XI",
        }
    }

    /// Parity of the size index: `Some(0)` for `2n`, `Some(1)` for `2n+1`, `None` for Ξ.
    fn size_parity(self) -> Option<usize> {
        match self {
            OperatorId::Delta | OperatorId::Theta | OperatorId::Phi => Some(0),
            OperatorId::Gamma | OperatorId::Omega | OperatorId::Psi => Some(1),
            OperatorId::Xi => None,
        }
    }

    /// The operator carrying `family` from size `size` to `size + 1`.
    pub fn step(family: Family, size: usize) -> Option<OperatorId> {
        let even = size.is_multiple_of(2);
        match (family, even) {
            (Family::R, true) => Some(OperatorId::Delta),
            (Family::R, false) => Some(OperatorId::Gamma),
            (Family::P, true) => Some(OperatorId::Theta),
            (Family::P, false) => Some(OperatorId::Omega),
            (Family::Q, true) => Some(OperatorId::Phi),
            (Family::Q, false) => Some(OperatorId::Psi),
            (Family::M, _) => None,
        }
    }
}

impl fmt::Display for OperatorId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Applies `op`, indexed by `size` (the `2n` or `2n+1` subscript; ignored for Ξ), to `poly`.
pub fn apply_operator(
    op: OperatorId,
    size: usize,
    poly: &BivariatePolynomial,
) -> Result<BivariatePolynomial> {
    let half = match op.size_parity() {
        Some(parity) => {
            if size % 2 != parity || (parity == 0 && size == 0) {
                return Err(Error::InvalidInput(format!(
                    "{op} is indexed by an {} size, got {size}",
                    if parity == 0 { "even positive" } else { "odd" }
                )));
            }
            (size / 2) as i64
        }
        None => 0,
    };
    let table = op.table();
    let mut out = BivariatePolynomial::zero();
    for ((zdeg, xdeg), c) in poly.terms() {
        let image = match zdeg {
            0 => Some(table.z0),
            1 => table.z1,
            _ => None,
        }
        .ok_or(Error::Domain {
            op: op.name(),
            zdeg,
        })?;
        for term in image {
            let k = xdeg as i64;
            let factor = term.c0 + term.cn * half + term.ck * k;
            if factor == 0 {
                continue;
            }
            let target = k + term.dx as i64;
            if target < 0 {
                return Err(Error::Consistency(format!(
                    "{op} produced a negative x-degree from x^{xdeg}"
                )));
            }
            out.add_term(term.zdeg, target as u32, c * BigInt::from(factor));
        }
    }
    Ok(out)
}

/// `R_1 = 1, R_2 = 1 + x`; `P_1 = 1, P_2 = 1 + z`; `Q_1 = z, Q_2 = z + x`.
fn base(family: Family, n: usize) -> BivariatePolynomial {
    use BivariatePolynomial as Poly;
    match (family, n) {
        (Family::R, 1) | (Family::P, 1) => Poly::one(),
        (Family::R, 2) => Poly::from_x_coeffs([1, 1]),
        (Family::P, 2) => &Poly::one() + &Poly::z(),
        (Family::Q, 1) => Poly::z(),
        (Family::Q, 2) => &Poly::z() + &Poly::x(),
        _ => unreachable!("no stored base for {family}_{n}"),
    }
}

/// Generates `f_1, ..., f_max_n` (index 0 of the result is `f_1`).
pub fn family_table(family: Family, max_n: usize) -> Result<Vec<BivariatePolynomial>> {
    if max_n == 0 {
        return Err(Error::InvalidInput("n must be at least 1".into()));
    }
    if family == Family::M {
        return m_table(max_n);
    }
    let mut out = Vec::with_capacity(max_n);
    for n in 1..=max_n {
        let next = if n <= 2 {
            base(family, n)
        } else {
            let op = OperatorId::step(family, n - 1).expect("R, P and Q have operators");
            apply_operator(op, n - 1, &out[n - 2])?
        };
        out.push(next);
    }
    Ok(out)
}

// M_{2n} = P_{2n}(x, 1) and M_{2n+1} = Q_{2n+1}(x, 1).
fn m_table(max_n: usize) -> Result<Vec<BivariatePolynomial>> {
    let p = family_table(Family::P, max_n)?;
    let q = family_table(Family::Q, max_n)?;
    Ok((1..=max_n)
        .map(|n| {
            let source = if n % 2 == 0 { &p[n - 1] } else { &q[n - 1] };
            source.eval_z(1)
        })
        .collect())
}

/// The `n`-th polynomial of `family`.
pub fn family_poly(family: Family, n: usize) -> Result<BivariatePolynomial> {
    Ok(family_table(family, n)?.pop().expect("non-empty table"))
}

pub fn eval_z(poly: &BivariatePolynomial, z0: i64) -> BivariatePolynomial {
    poly.eval_z(z0)
}

/// `A·∂/∂x + B·∂/∂z + C`, with polynomial multipliers.
#[derive(Debug, Clone)]
pub struct DifferentialForm {
    pub dx_coeff: BivariatePolynomial,
    pub dz_coeff: BivariatePolynomial,
    pub multiplier: BivariatePolynomial,
}

impl DifferentialForm {
    pub fn apply(&self, p: &BivariatePolynomial) -> BivariatePolynomial {
        let a = &self.dx_coeff * &p.d_dx();
        let b = &self.dz_coeff * &p.d_dz();
        let c = &self.multiplier * p;
        &(&a + &b) + &c
    }

    /// The differential operator taking `family` from size `size` to `size + 1`.
    pub fn for_step(family: Family, size: usize) -> Option<DifferentialForm> {
        use BivariatePolynomial as Poly;
        let n = (size / 2) as i64;
        let one = Poly::one();
        let x = Poly::x();
        let z = Poly::z();
        let c = |v: i64| Poly::constant(v);
        let one_minus_x = &one - &x;
        let one_minus_z = &one - &z;
        let x_one_minus_x = &x * &one_minus_x;
        // n(1 + x)
        let n_one_plus_x = (&one + &x).scale(&BigInt::from(n));
        let even = size.is_multiple_of(2);
        let form = match (family, even) {
            (Family::R, true) => DifferentialForm {
                dx_coeff: one_minus_x,
                dz_coeff: Poly::zero(),
                multiplier: c(1 + 2 * n),
            },
            (Family::R, false) => DifferentialForm {
                dx_coeff: x_one_minus_x,
                dz_coeff: Poly::zero(),
                multiplier: &one + &x.scale(&BigInt::from(1 + 2 * n)),
            },
            (Family::P, true) => DifferentialForm {
                dx_coeff: x_one_minus_x,
                dz_coeff: &x * &one_minus_z,
                multiplier: &one + &n_one_plus_x,
            },
            (Family::P, false) => DifferentialForm {
                dx_coeff: x_one_minus_x,
                dz_coeff: &z * &one_minus_z,
                multiplier: &(&one + &z) + &n_one_plus_x,
            },
            (Family::Q, true) => DifferentialForm {
                dx_coeff: x_one_minus_x,
                dz_coeff: &z * &one_minus_z,
                multiplier: &z + &n_one_plus_x,
            },
            (Family::Q, false) => DifferentialForm {
                dx_coeff: x_one_minus_x,
                dz_coeff: &x * &one_minus_z,
                multiplier: (&one + &x).scale(&BigInt::from(n + 1)),
            },
            (Family::M, _) => return None,
        };
        Some(form)
    }
}

/// Compares the step `n-1 → n` computed by the operator table and by the differential form.
pub fn differential_form_check(family: Family, n: usize) -> Result<bool> {
    if n < 2 {
        return Err(Error::InvalidInput(
            "differential forms start at n = 2".into(),
        ));
    }
    let form = DifferentialForm::for_step(family, n - 1).ok_or_else(|| {
        Error::InvalidInput(format!("family {family} has no differential recursion"))
    })?;
    let op = OperatorId::step(family, n - 1).expect("family has an operator");
    let previous = family_poly(family, n - 1)?;
    let by_operator = apply_operator(op, n - 1, &previous)?;
    let by_form = form.apply(&previous);
    Ok(by_operator == by_form && !by_operator.is_zero())
}

/// `true` when every stored coefficient is a positive integer and `zdeg ≤ 1`.
pub fn is_distribution_shaped(p: &BivariatePolynomial) -> bool {
    p.terms().all(|((z, _), c)| z <= 1 && *c > BigInt::zero())
}
