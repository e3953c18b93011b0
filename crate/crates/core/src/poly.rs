//! Sparse polynomials in `x` and `z` with arbitrary-precision integer coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Exponent pair `(zdeg, xdeg)`. Ordering is zdeg first, then xdeg.
pub type Monomial = (u32, u32);

/// Sparse map from `(zdeg, xdeg)` to a non-zero coefficient.
///
/// Distribution polynomials only ever have `zdeg ≤ 1` and positive coefficients, but the
/// type is closed under the ring operations used by the differential-form checks, so it
/// admits any degree and sign.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct BivariatePolynomial {
    terms: BTreeMap<Monomial, BigInt>,
}

impl BivariatePolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 0, 1)
    }

    pub fn x() -> Self {
        Self::monomial(0, 1, 1)
    }

    pub fn z() -> Self {
        Self::monomial(1, 0, 1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(0, 0, c)
    }

    pub fn monomial(zdeg: u32, xdeg: u32, c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero();
        p.add_term(zdeg, xdeg, c.into());
        p
    }

    /// Builds from `(zdeg, xdeg, coefficient)` triples, merging duplicates.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (u32, u32, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (z, x, c) in terms {
            p.add_term(z, x, c.into());
        }
        p
    }

    /// Univariate polynomial in `x` from coefficients of `x^0, x^1, ...`.
    pub fn from_x_coeffs<C: Into<BigInt>>(coeffs: impl IntoIterator<Item = C>) -> Self {
        Self::from_terms(
            coeffs
                .into_iter()
                .enumerate()
                .map(|(k, c)| (0, k as u32, c)),
        )
    }

    pub fn add_term(&mut self, zdeg: u32, xdeg: u32, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry((zdeg, xdeg)) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Coefficient of `z^zdeg x^xdeg` (zero when absent).
    pub fn coeff(&self, zdeg: u32, xdeg: u32) -> BigInt {
        self.terms.get(&(zdeg, xdeg)).cloned().unwrap_or_default()
    }

    /// Terms in `(zdeg, xdeg)` ascending order.
    pub fn terms(&self) -> impl Iterator<Item = (Monomial, &BigInt)> + '_ {
        self.terms.iter().map(|(&k, v)| (k, v))
    }

    /// Number of nonzero terms.
    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn max_zdeg(&self) -> Option<u32> {
        self.terms.keys().map(|&(z, _)| z).max()
    }

    pub fn max_xdeg(&self) -> Option<u32> {
        self.terms.keys().map(|&(_, x)| x).max()
    }

    pub fn all_non_negative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Value at `x = z = 1`.
    pub fn sum_of_coefficients(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        BivariatePolynomial {
            terms: self.terms.iter().map(|(&k, v)| (k, v * c)).collect(),
        }
    }

    pub fn d_dx(&self) -> Self {
        let mut out = Self::zero();
        for (&(z, x), c) in &self.terms {
            if x > 0 {
                out.add_term(z, x - 1, c * BigInt::from(x));
            }
        }
        out
    }

    pub fn d_dz(&self) -> Self {
        let mut out = Self::zero();
        for (&(z, x), c) in &self.terms {
            if z > 0 {
                out.add_term(z - 1, x, c * BigInt::from(z));
            }
        }
        out
    }

    /// Substitutes `z = z0` and merges terms.
    pub fn eval_z(&self, z0: impl Into<BigInt>) -> Self {
        let z0 = z0.into();
        let mut out = Self::zero();
        for (&(z, x), c) in &self.terms {
            let factor = if z == 0 {
                BigInt::one()
            } else {
                num_traits::pow(z0.clone(), z as usize)
            };
            out.add_term(0, x, c * factor);
        }
        out
    }
}

impl Add for &BivariatePolynomial {
    type Output = BivariatePolynomial;

    fn add(self, rhs: &BivariatePolynomial) -> BivariatePolynomial {
        let mut out = self.clone();
        for (&(z, x), c) in &rhs.terms {
            out.add_term(z, x, c.clone());
        }
        out
    }
}

impl Add for BivariatePolynomial {
    type Output = BivariatePolynomial;

    fn add(self, rhs: BivariatePolynomial) -> BivariatePolynomial {
        &self + &rhs
    }
}

impl Neg for &BivariatePolynomial {
    type Output = BivariatePolynomial;

    fn neg(self) -> BivariatePolynomial {
        BivariatePolynomial {
            terms: self.terms.iter().map(|(&k, v)| (k, -v)).collect(),
        }
    }
}

impl Sub for &BivariatePolynomial {
    type Output = BivariatePolynomial;

    fn sub(self, rhs: &BivariatePolynomial) -> BivariatePolynomial {
        self + &(-rhs)
    }
}

impl Sub for BivariatePolynomial {
    type Output = BivariatePolynomial;

    fn sub(self, rhs: BivariatePolynomial) -> BivariatePolynomial {
        &self - &rhs
    }
}

impl Mul for &BivariatePolynomial {
    type Output = BivariatePolynomial;

    fn mul(self, rhs: &BivariatePolynomial) -> BivariatePolynomial {
        let mut out = BivariatePolynomial::zero();
        for (&(z1, x1), c1) in &self.terms {
            for (&(z2, x2), c2) in &rhs.terms {
                out.add_term(z1 + z2, x1 + x2, c1 * c2);
            }
        }
        out
    }
}

impl Mul for BivariatePolynomial {
    type Output = BivariatePolynomial;

    fn mul(self, rhs: BivariatePolynomial) -> BivariatePolynomial {
        &self * &rhs
    }
}

/// Human-readable form ordered by x-degree then z-degree, e.g. `2 + 2z + 2x + 4zx^2`.
impl fmt::Display for BivariatePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut ordered: Vec<_> = self.terms.iter().collect();
        ordered.sort_by_key(|(&(z, x), _)| (x, z));
        for (i, (&(z, x), c)) in ordered.into_iter().enumerate() {
            let magnitude = c.abs();
            if i == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            let bare = z == 0 && x == 0;
            if bare || !magnitude.is_one() {
                write!(f, "{magnitude}")?;
            }
            match z {
                0 => {}
                1 => f.write_str("z")?,
                _ => write!(f, "z^{z}")?,
            }
            match x {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{x}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for BivariatePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BivariatePolynomial({self})")
    }
}
