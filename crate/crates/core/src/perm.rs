//! Permutations of `1..=n` and the elementary transformations on them.
//!
//! Entries are addressed 1-based (`σ_i`, `1 ≤ i ≤ n`) while insertion slots are
//! 0-based: slot 0 is in front of `σ_1`, slot `i ≥ 1` is immediately after `σ_i`.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::limits::Limits;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<u32>);

impl Permutation {
    /// Validates that `values` is a rearrangement of `1..=n` with `n ≥ 1`.
    pub fn new(values: Vec<u32>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::InvalidInput("empty permutation".into()));
        }
        let n = values.len();
        let mut seen = vec![false; n + 1];
        for &v in &values {
            let idx = v as usize;
            if idx == 0 || idx > n {
                return Err(Error::InvalidInput(format!("value {v} is outside 1..={n}")));
            }
            if std::mem::replace(&mut seen[idx], true) {
                return Err(Error::InvalidInput(format!("value {v} repeated")));
            }
        }
        Ok(Permutation(values))
    }

    pub(crate) fn from_vec_unchecked(values: Vec<u32>) -> Self {
        debug_assert!(Permutation::new(values.clone()).is_ok());
        Permutation(values)
    }

    pub fn identity(n: usize) -> Self {
        assert!(n >= 1, "permutations start at n = 1");
        Permutation((1..=n as u32).collect())
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn values(&self) -> &[u32] {
        &self.0
    }

    pub fn into_values(self) -> Vec<u32> {
        self.0
    }

    /// `σ_i` for `1 ≤ i ≤ n`.
    pub fn at(&self, i: usize) -> u32 {
        self.0[i - 1]
    }

    pub fn first(&self) -> u32 {
        self.0[0]
    }

    /// `σ_i ↦ n + 1 − σ_i`.
    pub fn complement(&self) -> Self {
        let top = self.0.len() as u32 + 1;
        Permutation(self.0.iter().map(|&v| top - v).collect())
    }

    pub fn reverse(&self) -> Self {
        Permutation(self.0.iter().rev().copied().collect())
    }

    /// `σ^(slot)`: the permutation of `1..=n+1` obtained by placing `n + 1` in `slot`.
    pub fn insert_at(&self, slot: usize) -> Result<Self> {
        let n = self.0.len();
        if slot > n {
            return Err(Error::InvalidPosition { slot, len: n });
        }
        let mut values = Vec::with_capacity(n + 1);
        values.extend_from_slice(&self.0[..slot]);
        values.push(n as u32 + 1);
        values.extend_from_slice(&self.0[slot..]);
        Ok(Permutation(values))
    }

    /// Inverse of [`insert_at`](Self::insert_at): strips the maximum and reports its slot.
    pub fn remove_max(&self) -> Result<(Self, usize)> {
        let n = self.0.len();
        if n < 2 {
            return Err(Error::InvalidInput(
                "cannot remove the maximum of a permutation of length 1".into(),
            ));
        }
        let pos = self.position_of(n as u32).expect("maximum is present");
        let mut values = self.0.clone();
        values.remove(pos);
        Ok((Permutation(values), pos))
    }

    /// Left cyclic rotation bringing `value` to the front.
    pub fn rotate_to_front(&self, value: u32) -> Result<Self> {
        let pos = self
            .position_of(value)
            .ok_or_else(|| Error::InvalidInput(format!("value {value} not present")))?;
        let mut values = self.0.clone();
        values.rotate_left(pos);
        Ok(Permutation(values))
    }

    /// 0-based index of `value`, if present.
    pub fn position_of(&self, value: u32) -> Option<usize> {
        self.0.iter().position(|&v| v == value)
    }
}

/// Standardizes a sequence of distinct integers to the permutation with the same relative order.
pub fn red(seq: &[i64]) -> Result<Permutation> {
    if seq.is_empty() {
        return Err(Error::InvalidInput("empty sequence".into()));
    }
    let mut order: Vec<usize> = (0..seq.len()).collect();
    order.sort_by_key(|&i| seq[i]);
    if order.windows(2).any(|w| seq[w[0]] == seq[w[1]]) {
        return Err(Error::InvalidInput("sequence has repeated entries".into()));
    }
    let mut values = vec![0u32; seq.len()];
    for (rank, &i) in order.iter().enumerate() {
        values[i] = rank as u32 + 1;
    }
    Ok(Permutation(values))
}

/// Writes `red(window)` into `out` without allocating; `window` must have distinct entries.
pub(crate) fn standardize_into(window: &[u32], out: &mut [u32]) {
    for (i, &a) in window.iter().enumerate() {
        out[i] = 1 + window.iter().filter(|&&b| b < a).count() as u32;
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in &self.0 {
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

/// Accepts space- and/or comma-separated values, e.g. `"2 5 3 1 4"` or `"2,5,3,1,4"`.
impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let values = s
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<u32>()
                    .map_err(|_| Error::InvalidInput(format!("`{t}` is not a positive integer")))
            })
            .collect::<Result<Vec<_>>>()?;
        Permutation::new(values)
    }
}

/// Rearranges `buf` into its lexicographic successor; returns `false` at the last arrangement.
pub(crate) fn next_permutation(buf: &mut [u32]) -> bool {
    let n = buf.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && buf[i - 1] >= buf[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while buf[j] <= buf[i - 1] {
        j -= 1;
    }
    buf.swap(i - 1, j);
    buf[i..].reverse();
    true
}

/// Lexicographic stream over `S_n`.
#[derive(Debug, Clone)]
pub struct AllPerms {
    current: Option<Vec<u32>>,
}

impl Iterator for AllPerms {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let cur = self.current.as_mut()?;
        let out = Permutation(cur.clone());
        if !next_permutation(cur) {
            self.current = None;
        }
        Some(out)
    }
}

/// Every permutation of `1..=n` exactly once, in lexicographic order.
pub fn all_perms(n: usize, limits: &Limits) -> Result<AllPerms> {
    if n == 0 {
        return Err(Error::InvalidInput("n must be at least 1".into()));
    }
    limits.check_enumeration(n)?;
    Ok(AllPerms {
        current: Some((1..=n as u32).collect()),
    })
}

/// Folds over `S_n` in parallel, one task per first entry; `merge` must be commutative.
pub(crate) fn par_fold_perms<T, F, M>(n: usize, init: impl Fn() -> T + Sync, fold: F, merge: M) -> T
where
    T: Send,
    F: Fn(&mut T, &[u32]) + Sync,
    M: Fn(T, T) -> T + Sync + Send,
{
    (1..=n as u32)
        .into_par_iter()
        .map(|head| {
            let mut acc = init();
            let mut buf: Vec<u32> = Vec::with_capacity(n);
            buf.push(head);
            buf.extend((1..=n as u32).filter(|&v| v != head));
            loop {
                fold(&mut acc, &buf);
                if !next_permutation(&mut buf[1..]) {
                    break;
                }
            }
            acc
        })
        .reduce(&init, &merge)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn red_examples() {
        assert_eq!(red(&[5, 2, 7, 8]).unwrap(), p("2 1 3 4"));
        assert_eq!(red(&[1, 2, 3]).unwrap(), p("1 2 3"));
        assert_eq!(red(&[9, 4]).unwrap(), p("2 1"));
        assert!(matches!(red(&[3, 1, 3]), Err(Error::InvalidInput(_))));
        assert!(red(&[]).is_err());
    }

    #[test]
    fn complement_and_reverse() {
        assert_eq!(p("2 5 3 1 4").complement(), p("4 1 3 5 2"));
        assert_eq!(p("1 2 3").complement(), p("3 2 1"));
        assert_eq!(Permutation::identity(4).complement(), p("4 3 2 1"));
        assert_eq!(p("1 2 3").reverse(), p("3 2 1"));
        assert_eq!(p("2 5 3 1 4").reverse(), p("4 1 3 5 2"));
        assert_eq!(p("1").reverse(), p("1"));
    }

    #[test]
    fn insertion_and_removal() {
        assert_eq!(p("2 1").insert_at(0).unwrap(), p("3 2 1"));
        assert_eq!(p("1 2").insert_at(1).unwrap(), p("1 3 2"));
        assert_eq!(p("1 2").insert_at(2).unwrap(), p("1 2 3"));
        assert_eq!(
            p("1 2").insert_at(3),
            Err(Error::InvalidPosition { slot: 3, len: 2 })
        );

        assert_eq!(p("1 3 2").remove_max().unwrap(), (p("1 2"), 1));
        assert_eq!(p("3 2 1").remove_max().unwrap(), (p("2 1"), 0));
        assert_eq!(p("1 2 3").remove_max().unwrap(), (p("1 2"), 2));
        assert!(p("1").remove_max().is_err());
    }

    #[test]
    fn rotation() {
        assert_eq!(p("1 2 3").rotate_to_front(3).unwrap(), p("3 1 2"));
        assert_eq!(p("3 1 2").rotate_to_front(3).unwrap(), p("3 1 2"));
        assert_eq!(p("5 4 1 3 2").rotate_to_front(1).unwrap(), p("1 3 2 5 4"));
        assert!(p("1 2").rotate_to_front(7).is_err());
    }

    #[test]
    fn parsing() {
        assert_eq!(p("2,5,3,1,4"), p("2 5 3 1 4"));
        assert_eq!(p(" 2, 1 "), p("2 1"));
        assert!("1 1".parse::<Permutation>().is_err());
        assert!("0 1".parse::<Permutation>().is_err());
        assert!("1 x".parse::<Permutation>().is_err());
        assert!("".parse::<Permutation>().is_err());
        assert_eq!(p("2 5 3 1 4").to_string(), "2 5 3 1 4");
    }

    #[test]
    fn enumeration_counts_and_order() {
        let limits = Limits::default();
        let one: Vec<_> = all_perms(1, &limits).unwrap().collect();
        assert_eq!(one, vec![p("1")]);

        let three: Vec<_> = all_perms(3, &limits).unwrap().collect();
        assert_eq!(three.len(), 6);
        assert!(three.windows(2).all(|w| w[0] < w[1]));

        assert_eq!(all_perms(9, &limits).unwrap().count(), 362_880);
        assert!(matches!(
            all_perms(12, &limits),
            Err(Error::ResourceLimit { n: 12, cap: 11 })
        ));
    }

    #[test]
    fn parallel_fold_covers_every_permutation_once() {
        let total = par_fold_perms(
            6,
            || (0u64, 0u64),
            |acc, s| {
                acc.0 += 1;
                acc.1 += s
                    .iter()
                    .enumerate()
                    .map(|(i, &v)| (i as u64 + 1) * v as u64)
                    .sum::<u64>();
            },
            |a, b| (a.0 + b.0, a.1 + b.1),
        );
        let mut serial = (0u64, 0u64);
        for s in all_perms(6, &Limits::default()).unwrap() {
            serial.0 += 1;
            serial.1 += s
                .values()
                .iter()
                .enumerate()
                .map(|(i, &v)| (i as u64 + 1) * v as u64)
                .sum::<u64>();
        }
        assert_eq!(total, serial);
        assert_eq!(total.0, 720);
    }

    #[test]
    fn complement_parity_lemma() {
        let limits = Limits::default();
        for n in 1..=8 {
            for s in all_perms(n, &limits).unwrap() {
                let c = s.complement();
                for i in 1..=n {
                    let same = s.at(i) % 2 == c.at(i) % 2;
                    assert_eq!(same, n % 2 == 1, "{s} at {i}");
                }
            }
        }
    }
}
