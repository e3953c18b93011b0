//! Genocchi numbers from the series of `2t / (e^t + 1)`, and the permutation classes
//! they count.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::closed_form::factorial;
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::pattern::ParityPattern;
use crate::perm::par_fold_perms;

/// Unsigned Genocchi values `g_1, g_2, ...`; `g_m` comes from the `t^{2m}` coefficient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenocchiTable {
    values: Vec<BigInt>,
}

impl GenocchiTable {
    pub fn values(&self) -> &[BigInt] {
        &self.values
    }

    /// `g_m` for `m ≥ 1`.
    pub fn get(&self, m: usize) -> Option<&BigInt> {
        m.checked_sub(1).and_then(|i| self.values.get(i))
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// Coefficients of `2t / (e^t + 1)` through `t^order`, exact.
pub fn genocchi_series(order: usize) -> Vec<BigRational> {
    // e^t + 1 = 2 + t + t^2/2! + ...
    let denominator: Vec<BigRational> = (0..=order)
        .map(|i| {
            let term = BigRational::new(BigInt::one(), factorial(i as u64));
            if i == 0 {
                term + BigRational::one()
            } else {
                term
            }
        })
        .collect();

    // Reciprocal by long division: inv_j = -(1/d_0) Σ_{i=1..j} d_i inv_{j-i}.
    let lead = denominator[0].clone();
    let mut inverse: Vec<BigRational> = Vec::with_capacity(order + 1);
    inverse.push(lead.recip());
    for j in 1..=order {
        let mut acc = BigRational::zero();
        for i in 1..=j {
            acc += &denominator[i] * &inverse[j - i];
        }
        inverse.push(-acc / &lead);
    }

    // Multiply by 2t.
    let two = BigRational::from_integer(BigInt::from(2));
    let mut series = vec![BigRational::zero(); order + 1];
    for i in 1..=order {
        series[i] = &two * &inverse[i - 1];
    }
    series
}

/// `g_1..=g_m` with `g_n = (-1)^n (2n)! [t^{2n}] 2t/(e^t+1)`.
pub fn genocchi_sequence(m: usize) -> Result<GenocchiTable> {
    if m == 0 {
        return Err(Error::InvalidInput(
            "need at least one Genocchi number".into(),
        ));
    }
    let series = genocchi_series(2 * m);
    let mut values = Vec::with_capacity(m);
    for n in 1..=m {
        let mut scaled = &series[2 * n] * BigRational::from_integer(factorial(2 * n as u64));
        if n % 2 == 1 {
            scaled = -scaled;
        }
        if !scaled.is_integer() || !scaled.is_positive() {
            return Err(Error::Consistency(format!(
                "order-{} coefficient gave {scaled}, not a positive integer",
                2 * n
            )));
        }
        values.push(scaled.to_integer());
    }
    Ok(GenocchiTable { values })
}

/// Ascent after every odd entry and descent after every even entry.
#[inline]
pub fn is_dumont(values: &[u32]) -> bool {
    values.windows(2).all(|w| {
        if w[0] % 2 == 1 {
            w[0] < w[1]
        } else {
            w[0] > w[1]
        }
    })
}

/// Number of Dumont permutations in `S_n`, `n` odd.
pub fn dumont_count(n: usize, limits: &Limits) -> Result<u64> {
    if n.is_multiple_of(2) {
        return Err(Error::InvalidInput(format!(
            "Dumont counts are taken over odd n, got {n}"
        )));
    }
    limits.check_enumeration(n)?;
    Ok(count_where(n, is_dumont))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AvoidanceClass {
    /// Avoid `1^e2^*` and `2^o1^*`.
    Def1,
    /// Avoid `2^*1^e` and `2^e1^*`.
    Conj,
}

impl AvoidanceClass {
    pub fn patterns(self) -> Vec<ParityPattern> {
        let specs: [&str; 2] = match self {
            AvoidanceClass::Def1 => ["1e2*", "2o1*"],
            AvoidanceClass::Conj => ["2*1e", "2e1*"],
        };
        specs
            .iter()
            .map(|s| s.parse().expect("built-in pattern parses"))
            .collect()
    }

    /// Direct test on a slice, equivalent to consecutive avoidance of [`patterns`](Self::patterns).
    #[inline]
    pub fn admits(self, values: &[u32]) -> bool {
        match self {
            AvoidanceClass::Def1 => values.windows(2).all(|w| {
                let ascent_from_even = w[0] % 2 == 0 && w[0] < w[1];
                let descent_from_odd = w[0] % 2 == 1 && w[0] > w[1];
                !ascent_from_even && !descent_from_odd
            }),
            // every descent must run odd to odd
            AvoidanceClass::Conj => values
                .windows(2)
                .all(|w| w[0] < w[1] || (w[0] % 2 == 1 && w[1] % 2 == 1)),
        }
    }
}

pub fn avoidance_count(n: usize, class: AvoidanceClass, limits: &Limits) -> Result<u64> {
    if n == 0 {
        return Err(Error::InvalidInput("n must be at least 1".into()));
    }
    limits.check_enumeration(n)?;
    Ok(count_where(n, |s| class.admits(s)))
}

fn count_where(n: usize, pred: impl Fn(&[u32]) -> bool + Sync) -> u64 {
    par_fold_perms(
        n,
        || 0u64,
        |acc, s| {
            if pred(s) {
                *acc += 1;
            }
        },
        |a, b| a + b,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pattern::avoids_consecutive;
    use crate::perm::{all_perms, Permutation};

    #[test]
    fn sequence_from_series() {
        let table = genocchi_sequence(6).unwrap();
        let expect: Vec<BigInt> = [1, 1, 3, 17, 155, 2073]
            .iter()
            .map(|&v| BigInt::from(v))
            .collect();
        assert_eq!(table.values(), expect.as_slice());
        assert_eq!(genocchi_sequence(1).unwrap().values(), &[BigInt::from(1)]);
        assert!(genocchi_sequence(0).is_err());
        assert_eq!(table.get(0), None);
        assert_eq!(table.get(4), Some(&BigInt::from(17)));
    }

    #[test]
    fn series_low_order_terms() {
        let s = genocchi_series(4);
        assert!(s[0].is_zero());
        assert!(s[1].is_one());
        assert_eq!(s[2], BigRational::new(BigInt::from(-1), BigInt::from(2)));
        assert!(s[3].is_zero());
        // odd orders above 1 vanish
        let longer = genocchi_series(15);
        for i in (3..=15).step_by(2) {
            assert!(longer[i].is_zero(), "t^{i}");
        }
    }

    #[test]
    fn dumont_small_counts() {
        let limits = Limits::default();
        assert_eq!(dumont_count(1, &limits).unwrap(), 1);
        assert_eq!(dumont_count(3, &limits).unwrap(), 1);
        assert_eq!(dumont_count(5, &limits).unwrap(), 3);
        assert_eq!(dumont_count(7, &limits).unwrap(), 17);
        assert!(dumont_count(4, &limits).is_err());
        assert!(matches!(
            dumont_count(13, &limits),
            Err(Error::ResourceLimit { .. })
        ));

        for w in ["2 1 4 3 5", "4 2 1 3 5", "3 4 2 1 5"] {
            assert!(is_dumont(w.parse::<Permutation>().unwrap().values()));
        }
        assert!(is_dumont(&[2, 1, 3]));
    }

    #[test]
    fn avoidance_small_counts() {
        let limits = Limits::default();
        assert_eq!(
            avoidance_count(3, AvoidanceClass::Def1, &limits).unwrap(),
            1
        );
        assert_eq!(
            avoidance_count(4, AvoidanceClass::Conj, &limits).unwrap(),
            3
        );
        assert_eq!(
            avoidance_count(2, AvoidanceClass::Def1, &limits).unwrap(),
            2
        );

        let conj4: Vec<String> = all_perms(4, &limits)
            .unwrap()
            .filter(|s| AvoidanceClass::Conj.admits(s.values()))
            .map(|s| s.to_string())
            .collect();
        assert_eq!(conj4, ["1 2 3 4", "2 3 1 4", "3 1 2 4"]);
    }

    #[test]
    fn direct_predicates_match_pattern_machinery() {
        let limits = Limits::default();
        for class in [AvoidanceClass::Def1, AvoidanceClass::Conj] {
            let patterns = class.patterns();
            for n in 1..=8 {
                for s in all_perms(n, &limits).unwrap() {
                    assert_eq!(
                        class.admits(s.values()),
                        avoids_consecutive(&s, &patterns),
                        "{s}"
                    );
                }
            }
        }
    }
}
