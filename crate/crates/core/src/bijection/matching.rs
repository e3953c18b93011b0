use std::collections::{BTreeMap, HashMap};

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::stats::{descent_count_slice, DescentKind, Parity};

/// A materialized bijection between two classes of permutations of `1..=n`.
///
/// The domain is every permutation whose first letter has parity `domain_first`, graded by
/// `domain_stat`; the codomain likewise. A pair `(σ, π)` satisfies
/// `codomain_stat(π) = domain_stat(σ) + shift`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatchingTable {
    n: usize,
    forward: HashMap<Permutation, Permutation>,
    backward: HashMap<Permutation, Permutation>,
    pub domain_stat: DescentKind,
    pub codomain_stat: DescentKind,
    pub domain_first: Parity,
    pub codomain_first: Parity,
    pub shift: i64,
}

impl MatchingTable {
    pub(crate) fn new(
        n: usize,
        domain: (DescentKind, Parity),
        codomain: (DescentKind, Parity),
        shift: i64,
    ) -> Self {
        MatchingTable {
            n,
            forward: HashMap::new(),
            backward: HashMap::new(),
            domain_stat: domain.0,
            codomain_stat: codomain.0,
            domain_first: domain.1,
            codomain_first: codomain.1,
            shift,
        }
    }

    /// Adds a pair after checking its statistic contract and injectivity.
    pub(crate) fn insert(&mut self, from: Permutation, to: Permutation) -> Result<()> {
        self.check_pair(&from, &to)?;
        if self.backward.contains_key(&to) {
            return Err(Error::Consistency(format!("{to} is matched twice")));
        }
        if self.forward.contains_key(&from) {
            return Err(Error::Consistency(format!("{from} is matched twice")));
        }
        self.backward.insert(to.clone(), from.clone());
        self.forward.insert(from, to);
        Ok(())
    }

    fn check_pair(&self, from: &Permutation, to: &Permutation) -> Result<()> {
        if from.len() != self.n || to.len() != self.n {
            return Err(Error::Consistency(format!(
                "pair {from} -> {to} does not have length {}",
                self.n
            )));
        }
        if !self.domain_first.contains(from.first()) || !self.codomain_first.contains(to.first()) {
            return Err(Error::Consistency(format!(
                "pair {from} -> {to} starts with the wrong parity"
            )));
        }
        let a = descent_count_slice(from.values(), self.domain_stat) as i64;
        let b = descent_count_slice(to.values(), self.codomain_stat) as i64;
        if b != a + self.shift {
            return Err(Error::Consistency(format!(
                "pair {from} -> {to} carries statistic {a} to {b}, expected {}",
                a + self.shift
            )));
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.forward.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forward.is_empty()
    }

    pub fn apply(&self, sigma: &Permutation) -> Result<&Permutation> {
        self.forward.get(sigma).ok_or_else(|| {
            Error::InvalidInput(format!("{sigma} is not in the domain of this matching"))
        })
    }

    pub fn invert(&self, pi: &Permutation) -> Result<&Permutation> {
        self.backward.get(pi).ok_or_else(|| {
            Error::InvalidInput(format!("{pi} is not in the codomain of this matching"))
        })
    }

    /// Pairs sorted by domain element.
    pub fn pairs(&self) -> Vec<(&Permutation, &Permutation)> {
        let mut out: Vec<_> = self.forward.iter().collect();
        out.sort();
        out
    }

    /// Domain sizes keyed by the domain statistic.
    pub fn domain_classes(&self) -> BTreeMap<u32, usize> {
        let mut out = BTreeMap::new();
        for sigma in self.forward.keys() {
            *out.entry(descent_count_slice(sigma.values(), self.domain_stat))
                .or_default() += 1;
        }
        out
    }

    /// Codomain sizes keyed by the codomain statistic.
    pub fn codomain_classes(&self) -> BTreeMap<u32, usize> {
        let mut out = BTreeMap::new();
        for pi in self.backward.keys() {
            *out.entry(descent_count_slice(pi.values(), self.codomain_stat))
                .or_default() += 1;
        }
        out
    }

    /// Re-checks every pair, mutual inversion, and that both sides are the full classes.
    pub fn verify(&self) -> Result<()> {
        for (from, to) in &self.forward {
            self.check_pair(from, to)?;
            if self.backward.get(to) != Some(from) {
                return Err(Error::Consistency(format!(
                    "{from} -> {to} does not invert"
                )));
            }
        }
        if self.forward.len() != self.backward.len() {
            return Err(Error::Consistency(
                "forward and backward sizes differ".into(),
            ));
        }
        let expected = |parity: Parity| -> usize {
            if self.n == 0 {
                return 0;
            }
            let count = (1..=self.n as u32).filter(|&v| parity.contains(v)).count();
            count * (1..self.n).product::<usize>()
        };
        if self.forward.len() != expected(self.domain_first)
            || self.backward.len() != expected(self.codomain_first)
        {
            return Err(Error::Consistency(format!(
                "table has {} pairs, classes have {} and {} members",
                self.forward.len(),
                expected(self.domain_first),
                expected(self.codomain_first)
            )));
        }
        Ok(())
    }
}
