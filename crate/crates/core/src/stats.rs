//! Descent statistics refined by the parity of the descent top or bottom.

use std::fmt;
use std::str::FromStr;

use crate::error::Error;
use crate::perm::Permutation;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of(value: u32) -> Parity {
        if value.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn contains(self, value: u32) -> bool {
        Parity::of(value) == self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DescentKind {
    /// Descent top is even.
    LeftEven,
    /// Descent bottom is even.
    RightEven,
    /// Descent top is odd.
    LeftOdd,
    /// Descent bottom is odd.
    RightOdd,
    /// Every descent.
    Plain,
}

impl DescentKind {
    pub const ALL: [DescentKind; 5] = [
        DescentKind::LeftEven,
        DescentKind::RightEven,
        DescentKind::LeftOdd,
        DescentKind::RightOdd,
        DescentKind::Plain,
    ];

    #[inline]
    fn accepts(self, top: u32, bottom: u32) -> bool {
        match self {
            DescentKind::LeftEven => top.is_multiple_of(2),
            DescentKind::LeftOdd => top % 2 == 1,
            DescentKind::RightEven => bottom.is_multiple_of(2),
            DescentKind::RightOdd => bottom % 2 == 1,
            DescentKind::Plain => true,
        }
    }
}

/// The four distribution polynomial families.
///
/// | family | statistic    | z marks           |
/// |--------|--------------|-------------------|
/// | R      | `LeftEven`   | –                 |
/// | P      | `RightEven`  | first letter even |
/// | Q      | `RightOdd`   | first letter odd  |
/// | M      | `LeftOdd`    | –                 |
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    R,
    P,
    Q,
    M,
}

impl Family {
    pub const ALL: [Family; 4] = [Family::R, Family::P, Family::Q, Family::M];

    pub fn statistic(self) -> DescentKind {
        match self {
            Family::R => DescentKind::LeftEven,
            Family::P => DescentKind::RightEven,
            Family::Q => DescentKind::RightOdd,
            Family::M => DescentKind::LeftOdd,
        }
    }

    /// Parity class tracked by the z variable, if any.
    pub fn z_marker(self) -> Option<Parity> {
        match self {
            Family::P => Some(Parity::Even),
            Family::Q => Some(Parity::Odd),
            Family::R | Family::M => None,
        }
    }

    /// `(zdeg, xdeg)` contributed by one permutation.
    pub fn monomial(self, values: &[u32]) -> (u32, u32) {
        let x = descent_count_slice(values, self.statistic());
        let z = match self.z_marker() {
            Some(parity) => parity.contains(values[0]) as u32,
            None => 0,
        };
        (z, x)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::R => "R",
            Family::P => "P",
            Family::Q => "Q",
            Family::M => "M",
        };
        f.write_str(s)
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s.trim().to_ascii_uppercase().as_str() {
            "R" => Ok(Family::R),
            "P" => Ok(Family::P),
            "Q" => Ok(Family::Q),
            "M" => Ok(Family::M),
            other => Err(Error::InvalidInput(format!("unknown family `{other}`"))),
        }
    }
}

/// 1-based descent positions of the given kind.
pub fn parity_descent_set(sigma: &Permutation, kind: DescentKind) -> Vec<usize> {
    sigma
        .values()
        .windows(2)
        .enumerate()
        .filter(|(_, w)| w[0] > w[1] && kind.accepts(w[0], w[1]))
        .map(|(i, _)| i + 1)
        .collect()
}

pub fn parity_descent_count(sigma: &Permutation, kind: DescentKind) -> usize {
    descent_count_slice(sigma.values(), kind) as usize
}

/// Also used on sequences over `0..=n`, which the bijections pass through.
#[inline]
pub(crate) fn descent_count_slice(values: &[u32], kind: DescentKind) -> u32 {
    values
        .windows(2)
        .filter(|w| w[0] > w[1] && kind.accepts(w[0], w[1]))
        .count() as u32
}

/// 1 when `σ_1` lies in `class`, else 0.
pub fn first_parity_flag(sigma: &Permutation, class: Parity) -> u32 {
    class.contains(sigma.first()) as u32
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::limits::Limits;
    use crate::perm::all_perms;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn descent_sets() {
        let s = p("2 5 3 1 4");
        assert_eq!(parity_descent_set(&s, DescentKind::RightOdd), vec![2, 3]);
        assert!(parity_descent_set(&s, DescentKind::LeftEven).is_empty());
        assert_eq!(
            parity_descent_count(&p("4 2 1 5 6 3 10 8 7 9"), DescentKind::LeftEven),
            5
        );
        assert!(parity_descent_set(&Permutation::identity(6), DescentKind::Plain).is_empty());
    }

    #[test]
    fn descent_counts() {
        assert_eq!(
            parity_descent_count(&p("2 5 3 1 4"), DescentKind::RightOdd),
            2
        );
        for kind in DescentKind::ALL {
            assert_eq!(parity_descent_count(&Permutation::identity(7), kind), 0);
        }
        assert_eq!(parity_descent_count(&p("2 1"), DescentKind::LeftEven), 1);
    }

    #[test]
    fn first_letter_flag() {
        assert_eq!(first_parity_flag(&p("2 5 3 1 4"), Parity::Even), 1);
        assert_eq!(first_parity_flag(&p("1 2"), Parity::Even), 0);
        assert_eq!(first_parity_flag(&p("1 2"), Parity::Odd), 1);
    }

    #[test]
    fn refined_counts_partition_plain_descents() {
        let limits = Limits::default();
        for n in 1..=8 {
            for s in all_perms(n, &limits).unwrap() {
                let c = |k| parity_descent_count(&s, k);
                let plain = c(DescentKind::Plain);
                assert_eq!(c(DescentKind::LeftEven) + c(DescentKind::LeftOdd), plain);
                assert_eq!(c(DescentKind::RightEven) + c(DescentKind::RightOdd), plain);

                let all = parity_descent_set(&s, DescentKind::Plain);
                for kind in DescentKind::ALL {
                    assert!(parity_descent_set(&s, kind).iter().all(|i| all.contains(i)));
                }
            }
        }
    }

    #[test]
    fn reverse_complement_swaps_sides() {
        let limits = Limits::default();
        for n in 1..=9 {
            for s in all_perms(n, &limits).unwrap() {
                let rc = s.complement().reverse();
                let left_odd = parity_descent_count(&s, DescentKind::LeftOdd);
                let target = if n % 2 == 0 {
                    DescentKind::RightEven
                } else {
                    DescentKind::RightOdd
                };
                assert_eq!(left_odd, parity_descent_count(&rc, target), "{s}");
            }
        }
    }
}
