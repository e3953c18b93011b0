//! The insertion-driven matchings, built one size at a time.
//!
//! `alpha(n)` pairs odd-starting permutations graded by `RightEven` with odd-starting
//! permutations graded by `RightOdd`, preserving the statistic. `beta(n)` pairs
//! even-starting permutations graded by `RightEven` with even-starting permutations
//! graded by `RightOdd`, raising the statistic by one.
//!
//! Growing `alpha` from size `N` to `N + 1`: for each pair `(σ, π)`, every insertion slot
//! for `N + 1` that keeps the first letter odd is labelled on each side, and slots with
//! equal labels are matched. On the `RightEven` side (`X` = even) and the `RightOdd` side
//! (`X` = odd) a slot followed by entry `b` is labelled
//!
//! * `End` for the final slot,
//! * `Descent(m)` when it sits inside the m-th descent whose bottom lies in `X`,
//! * `Cross(m)` when `b ∉ X` (m-th such slot),
//! * `Rise(m)` when `b ∈ X` and the slot is not a descent (m-th such slot).
//!
//! Inserting `N + 1` keeps the statistic under `End`, `Descent` and `Cross` and raises it
//! by one under `Rise`, on both sides, so label-matching preserves it.
//!
//! When `N` is even, placing `N + 1` in front of an even-starting permutation also yields
//! an odd-starting one. Those are matched through `beta(N)`: `(N+1)·σ ↦ (N+1)·beta(σ)`.
//! The leading `N + 1` adds one `RightEven` descent and no `RightOdd` descent, which the
//! `+1` shift of `beta` exactly compensates.
//!
//! Growing `beta` to size `N + 1` uses `alpha(N)`: a `0` is placed in slots `1..=N` of both
//! `σ` and `π`, the m-th descent slot on one side matched with the m-th on the other and
//! likewise for non-descent slots, and finally every entry is raised by one.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::perm::Permutation;
use crate::stats::{DescentKind, Parity};

use super::matching::MatchingTable;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
enum SlotLabel {
    End,
    Descent(usize),
    Cross(usize),
    Rise(usize),
}

/// Labels for slots `first_slot..=len` of `values`, where descents count when their
/// bottom has parity `marked`.
fn label_slots(values: &[u32], marked: Parity, first_slot: usize) -> Vec<(SlotLabel, usize)> {
    let len = values.len();
    let (mut descents, mut crosses, mut rises) = (0, 0, 0);
    let mut out = Vec::with_capacity(len + 1 - first_slot);
    for slot in first_slot..=len {
        let label = if slot == len {
            SlotLabel::End
        } else {
            let bottom = values[slot];
            let is_descent = slot > 0 && values[slot - 1] > bottom;
            if !marked.contains(bottom) {
                crosses += 1;
                SlotLabel::Cross(crosses)
            } else if is_descent {
                descents += 1;
                SlotLabel::Descent(descents)
            } else {
                rises += 1;
                SlotLabel::Rise(rises)
            }
        };
        out.push((label, slot));
    }
    out
}

fn insert_value(values: &[u32], slot: usize, value: u32) -> Vec<u32> {
    let mut out = Vec::with_capacity(values.len() + 1);
    out.extend_from_slice(&values[..slot]);
    out.push(value);
    out.extend_from_slice(&values[slot..]);
    out
}

fn alpha_table(n: usize) -> MatchingTable {
    MatchingTable::new(
        n,
        (DescentKind::RightEven, Parity::Odd),
        (DescentKind::RightOdd, Parity::Odd),
        0,
    )
}

fn beta_table(n: usize) -> MatchingTable {
    MatchingTable::new(
        n,
        (DescentKind::RightEven, Parity::Even),
        (DescentKind::RightOdd, Parity::Even),
        1,
    )
}

fn grow_alpha(prev_alpha: &MatchingTable, prev_beta: &MatchingTable) -> Result<MatchingTable> {
    let size = prev_alpha.n();
    let new_value = size as u32 + 1;
    // slot 0 keeps an odd first letter only when the inserted value is odd
    let first_slot = if new_value % 2 == 1 { 0 } else { 1 };
    let mut table = alpha_table(size + 1);

    for (sigma, pi) in prev_alpha.pairs() {
        let sigma_slots = label_slots(sigma.values(), Parity::Even, first_slot);
        let pi_slots: HashMap<SlotLabel, usize> = label_slots(pi.values(), Parity::Odd, first_slot)
            .into_iter()
            .collect();
        if pi_slots.len() != sigma_slots.len() {
            return Err(Error::Consistency(format!(
                "{sigma} and {pi} have different slot profiles"
            )));
        }
        for (label, i) in sigma_slots {
            let j = *pi_slots.get(&label).ok_or_else(|| {
                Error::Consistency(format!("slot {label:?} of {sigma} has no partner in {pi}"))
            })?;
            table.insert(sigma.insert_at(i)?, pi.insert_at(j)?)?;
        }
    }

    if new_value % 2 == 1 {
        for (sigma, image) in prev_beta.pairs() {
            let from = Permutation::from_vec_unchecked(insert_value(sigma.values(), 0, new_value));
            let to = Permutation::from_vec_unchecked(insert_value(image.values(), 0, new_value));
            table.insert(from, to)?;
        }
    }
    Ok(table)
}

fn grow_beta(prev_alpha: &MatchingTable) -> Result<MatchingTable> {
    let size = prev_alpha.n();
    let mut table = beta_table(size + 1);

    // Slots 1..=size for a 0 placed into `values`; descents are those of kind `kind`.
    let split = |values: &[u32], marked: Parity| -> (Vec<usize>, Vec<usize>) {
        let (mut descents, mut others) = (Vec::new(), Vec::new());
        for slot in 1..=values.len() {
            let is_descent = slot < values.len()
                && values[slot - 1] > values[slot]
                && marked.contains(values[slot]);
            if is_descent {
                descents.push(slot);
            } else {
                others.push(slot);
            }
        }
        (descents, others)
    };
    let raise =
        |v: Vec<u32>| Permutation::from_vec_unchecked(v.into_iter().map(|x| x + 1).collect());

    for (sigma, pi) in prev_alpha.pairs() {
        let (sd, so) = split(sigma.values(), Parity::Even);
        let (pd, po) = split(pi.values(), Parity::Odd);
        if sd.len() != pd.len() || so.len() != po.len() {
            return Err(Error::Consistency(format!(
                "{sigma} and {pi} have different descent counts"
            )));
        }
        for (i, j) in sd.into_iter().zip(pd).chain(so.into_iter().zip(po)) {
            let from = raise(insert_value(pi.values(), j, 0));
            let to = raise(insert_value(sigma.values(), i, 0));
            table.insert(from, to)?;
        }
    }
    Ok(table)
}

/// `alpha` and `beta` for every size up to a bound.
#[derive(Debug, Clone)]
pub struct RecursiveBijections {
    alpha: Vec<MatchingTable>,
    beta: Vec<MatchingTable>,
}

impl RecursiveBijections {
    pub fn build(max_n: usize, limits: &Limits) -> Result<Self> {
        if max_n == 0 {
            return Err(Error::InvalidInput("n must be at least 1".into()));
        }
        limits.check_table(max_n)?;

        let mut base = alpha_table(1);
        base.insert(Permutation::identity(1), Permutation::identity(1))?;
        let mut alpha = vec![base];
        let mut beta = vec![beta_table(1)];
        for size in 1..max_n {
            let next_beta = grow_beta(&alpha[size - 1])?;
            let next_alpha = grow_alpha(&alpha[size - 1], &beta[size - 1])?;
            beta.push(next_beta);
            alpha.push(next_alpha);
        }
        for table in alpha.iter().chain(&beta) {
            table.verify()?;
        }
        Ok(RecursiveBijections { alpha, beta })
    }

    pub fn max_n(&self) -> usize {
        self.alpha.len()
    }

    pub fn alpha(&self, n: usize) -> Result<&MatchingTable> {
        n.checked_sub(1)
            .and_then(|i| self.alpha.get(i))
            .ok_or(Error::ResourceLimit {
                n,
                cap: self.max_n(),
            })
    }

    pub fn beta(&self, n: usize) -> Result<&MatchingTable> {
        n.checked_sub(1)
            .and_then(|i| self.beta.get(i))
            .ok_or(Error::ResourceLimit {
                n,
                cap: self.max_n(),
            })
    }
}

/// Builds `alpha(n)` from scratch.
pub fn alpha(n: usize, limits: &Limits) -> Result<MatchingTable> {
    let all = RecursiveBijections::build(n, limits)?;
    Ok(all.alpha[n - 1].clone())
}

/// Builds `beta(n)` from scratch.
pub fn beta(n: usize, limits: &Limits) -> Result<MatchingTable> {
    let all = RecursiveBijections::build(n, limits)?;
    Ok(all.beta[n - 1].clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closed_form::{coeff, CoefficientQuery};
    use crate::stats::Family;
    use num_bigint::BigInt;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn base_levels() {
        let limits = Limits::default();
        let a1 = alpha(1, &limits).unwrap();
        assert_eq!(a1.pairs(), vec![(&p("1"), &p("1"))]);
        let a2 = alpha(2, &limits).unwrap();
        assert_eq!(a2.pairs(), vec![(&p("1 2"), &p("1 2"))]);
        assert!(beta(1, &limits).unwrap().is_empty());
        let b2 = beta(2, &limits).unwrap();
        assert_eq!(b2.pairs(), vec![(&p("2 1"), &p("2 1"))]);
    }

    #[test]
    fn class_sizes() {
        let limits = Limits::default();
        let a5 = alpha(5, &limits).unwrap();
        assert_eq!(a5.domain_classes()[&1], 48);
        let b4 = beta(4, &limits).unwrap();
        assert_eq!(b4.domain_classes()[&0], 8);
        assert_eq!(b4.codomain_classes()[&1], 8);
    }

    #[test]
    fn cap_is_enforced() {
        let limits = Limits::default();
        assert!(matches!(
            alpha(10, &limits),
            Err(Error::ResourceLimit { n: 10, cap: 9 })
        ));
        let all = RecursiveBijections::build(4, &limits).unwrap();
        assert!(all.alpha(5).is_err());
        assert!(all.beta(0).is_err());
    }

    #[test]
    fn tables_verify_and_match_closed_forms() {
        let all = RecursiveBijections::build(8, &Limits::default()).unwrap();
        for n in 1..=8 {
            let a = all.alpha(n).unwrap();
            a.verify().unwrap();
            for (k, size) in a.domain_classes() {
                let q = CoefficientQuery::new(Family::P, Some(0), k, n).unwrap();
                assert_eq!(BigInt::from(size), coeff(&q));
            }
            for (k, size) in a.codomain_classes() {
                let q = CoefficientQuery::new(Family::Q, Some(1), k, n).unwrap();
                assert_eq!(BigInt::from(size), coeff(&q));
            }
            let b = all.beta(n).unwrap();
            b.verify().unwrap();
            for (k, size) in b.domain_classes() {
                let q = CoefficientQuery::new(Family::P, Some(1), k, n).unwrap();
                assert_eq!(BigInt::from(size), coeff(&q));
            }
        }
    }

    #[test]
    fn construction_is_deterministic() {
        let limits = Limits::default();
        assert_eq!(alpha(7, &limits).unwrap(), alpha(7, &limits).unwrap());
        assert_eq!(beta(7, &limits).unwrap(), beta(7, &limits).unwrap());
    }
}
