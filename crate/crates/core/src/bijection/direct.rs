//! Bijections given by a fixed chain of elementary moves.

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::stats::Parity;

use super::recursive::RecursiveBijections;

fn require_even_length(sigma: &Permutation) -> Result<u32> {
    if !sigma.len().is_multiple_of(2) {
        return Err(Error::InvalidInput(format!(
            "{sigma} has odd length {}, expected even",
            sigma.len()
        )));
    }
    Ok(sigma.len() as u32)
}

fn with_value(values: &[u32], front: bool, value: u32) -> Permutation {
    let mut out = Vec::with_capacity(values.len() + 1);
    if front {
        out.push(value);
    }
    out.extend_from_slice(values);
    if !front {
        out.push(value);
    }
    Permutation::from_vec_unchecked(out)
}

fn without_value(sigma: &Permutation, value: u32) -> Permutation {
    Permutation::from_vec_unchecked(
        sigma
            .values()
            .iter()
            .copied()
            .filter(|&v| v != value)
            .collect(),
    )
}

/// Sends `LeftEven = k` to `LeftEven = n − k` on `S_{2n}`.
///
/// Append `2n+1`, complement, rotate `2n+1` to the front, drop it.
pub fn bij_r_symmetry(sigma: &Permutation) -> Result<Permutation> {
    let len = require_even_length(sigma)?;
    let dummy = len + 1;
    let rotated = with_value(sigma.values(), false, dummy)
        .complement()
        .rotate_to_front(dummy)?;
    Ok(without_value(&rotated, dummy))
}

/// Prepend `2n+1`, rotate `1` to the back, complement, drop the trailing `2n+1`.
pub fn bij_r_symmetry_inv(sigma_star: &Permutation) -> Result<Permutation> {
    let len = require_even_length(sigma_star)?;
    let dummy = len + 1;
    let mut values = with_value(sigma_star.values(), true, dummy).into_values();
    let one = values.iter().position(|&v| v == 1).expect("1 is present");
    values.rotate_left(one + 1);
    let restored = Permutation::from_vec_unchecked(values).complement();
    Ok(without_value(&restored, dummy))
}

/// Which coefficient class [`bij_r_split`] lands in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SplitTag {
    /// Odd first letter, `RightEven` equal to the input's `LeftEven`.
    P0,
    /// Even first letter, `RightEven` one less than the input's `LeftEven`.
    P1,
}

/// Splits the `LeftEven = k` class of `S_{2n}` into the odd-starting `RightEven = k` and
/// even-starting `RightEven = k − 1` classes.
///
/// Append `2n+1`, complement and reverse, rotate `2n+1` to the front, drop it. The output
/// starts with the complement of the cyclic predecessor of `1`, which has the same parity.
pub fn bij_r_split(sigma: &Permutation) -> Result<(SplitTag, Permutation)> {
    let len = require_even_length(sigma)?;
    let dummy = len + 1;
    let rotated = with_value(sigma.values(), false, dummy)
        .complement()
        .reverse()
        .rotate_to_front(dummy)?;
    let out = without_value(&rotated, dummy);
    let tag = if Parity::Odd.contains(out.first()) {
        SplitTag::P0
    } else {
        SplitTag::P1
    };
    Ok((tag, out))
}

/// Prepend `2n+1`, rotate `1` to the front, reverse and complement, drop the trailing `2n+1`.
pub fn bij_r_split_inv(pi: &Permutation) -> Result<Permutation> {
    let len = require_even_length(pi)?;
    let dummy = len + 1;
    let restored = with_value(pi.values(), true, dummy)
        .rotate_to_front(1)?
        .reverse()
        .complement();
    Ok(without_value(&restored, dummy))
}

// Even-starting `RightEven = n−1−k`  →  odd-starting `RightOdd = k`:
// prepend 2n+1, complement, drop the leading 1, lower every entry by one.
fn even_start_to_right_odd(pi: &Permutation) -> Permutation {
    let dummy = pi.len() as u32 + 1;
    let complemented = with_value(pi.values(), true, dummy).complement();
    Permutation::from_vec_unchecked(complemented.values()[1..].iter().map(|&v| v - 1).collect())
}

fn right_odd_to_even_start(tau: &Permutation) -> Permutation {
    let raised: Vec<u32> = tau.values().iter().map(|&v| v + 1).collect();
    let complemented = with_value(&raised, true, 1).complement();
    Permutation::from_vec_unchecked(complemented.values()[1..].to_vec())
}

fn require_first_parity(sigma: &Permutation, parity: Parity) -> Result<()> {
    if !parity.contains(sigma.first()) {
        return Err(Error::InvalidInput(format!(
            "{sigma} must start with an {} letter",
            if parity == Parity::Odd { "odd" } else { "even" }
        )));
    }
    Ok(())
}

/// Odd-starting `RightEven = k` on `S_{2n}` to even-starting `RightEven = n − 1 − k`.
///
/// `alpha` carries the input to an odd-starting `RightOdd = k` permutation, which the
/// complement chain turns into the even-starting class. `tables` must cover size `2n`.
pub fn bij_p_complement(sigma: &Permutation, tables: &RecursiveBijections) -> Result<Permutation> {
    require_even_length(sigma)?;
    require_first_parity(sigma, Parity::Odd)?;
    let tau = tables.alpha(sigma.len())?.apply(sigma)?;
    Ok(right_odd_to_even_start(tau))
}

pub fn bij_p_complement_inv(pi: &Permutation, tables: &RecursiveBijections) -> Result<Permutation> {
    require_even_length(pi)?;
    require_first_parity(pi, Parity::Even)?;
    let tau = even_start_to_right_odd(pi);
    Ok(tables.alpha(pi.len())?.invert(&tau)?.clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::limits::Limits;
    use crate::perm::all_perms;
    use crate::stats::{parity_descent_count, DescentKind};

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn r_symmetry_examples() {
        assert_eq!(bij_r_symmetry(&p("1 2")).unwrap(), p("2 1"));
        assert_eq!(bij_r_symmetry(&p("1 2 3 4")).unwrap(), p("4 3 2 1"));
        assert_eq!(bij_r_symmetry_inv(&p("2 1")).unwrap(), p("1 2"));
        assert_eq!(bij_r_symmetry_inv(&p("4 3 2 1")).unwrap(), p("1 2 3 4"));
        assert!(bij_r_symmetry(&p("1 2 3")).is_err());
        assert!(bij_r_symmetry_inv(&p("1")).is_err());
    }

    #[test]
    fn r_symmetry_middle_class_of_s4() {
        let limits = Limits::default();
        let middle: Vec<_> = all_perms(4, &limits)
            .unwrap()
            .filter(|s| parity_descent_count(s, DescentKind::LeftEven) == 1)
            .collect();
        assert_eq!(middle.len(), 16);
        for s in &middle {
            let image = bij_r_symmetry(s).unwrap();
            assert_eq!(parity_descent_count(&image, DescentKind::LeftEven), 1);
        }
    }

    #[test]
    fn r_split_examples() {
        assert_eq!(bij_r_split(&p("2 1")).unwrap(), (SplitTag::P1, p("2 1")));
        assert_eq!(bij_r_split(&p("1 2")).unwrap(), (SplitTag::P0, p("1 2")));
        assert_eq!(bij_r_split_inv(&p("2 1")).unwrap(), p("2 1"));
        assert!(bij_r_split(&p("2 1 3")).is_err());

        let limits = Limits::default();
        let (mut p0, mut p1) = (0, 0);
        for s in all_perms(4, &limits).unwrap() {
            if parity_descent_count(&s, DescentKind::LeftEven) == 1 {
                match bij_r_split(&s).unwrap().0 {
                    SplitTag::P0 => p0 += 1,
                    SplitTag::P1 => p1 += 1,
                }
            }
        }
        assert_eq!((p0, p1), (8, 8));
    }

    #[test]
    fn p_complement_examples() {
        let tables = RecursiveBijections::build(4, &Limits::default()).unwrap();
        assert_eq!(bij_p_complement(&p("1 2"), &tables).unwrap(), p("2 1"));
        assert_eq!(bij_p_complement_inv(&p("2 1"), &tables).unwrap(), p("1 2"));
        assert!(bij_p_complement(&p("2 1"), &tables).is_err());
        assert!(bij_p_complement(&p("1 2 3"), &tables).is_err());
        assert!(bij_p_complement_inv(&p("1 2"), &tables).is_err());

        let limits = Limits::default();
        let mut sizes = std::collections::BTreeMap::new();
        for s in all_perms(4, &limits)
            .unwrap()
            .filter(|s| s.first() % 2 == 1)
        {
            let k = parity_descent_count(&s, DescentKind::RightEven);
            let image = bij_p_complement(&s, &tables).unwrap();
            assert_eq!(image.first() % 2, 0);
            let target = parity_descent_count(&image, DescentKind::RightEven);
            assert_eq!(target, 1 - k);
            *sizes.entry((k, target)).or_insert(0) += 1;
        }
        assert_eq!(sizes[&(0, 1)], 4);
        assert_eq!(sizes[&(1, 0)], 8);
    }

    #[test]
    fn complement_chain_round_trips() {
        let limits = Limits::default();
        for n in [2, 4, 6] {
            for pi in all_perms(n, &limits)
                .unwrap()
                .filter(|s| s.first() % 2 == 0)
            {
                let tau = even_start_to_right_odd(&pi);
                assert_eq!(tau.first() % 2, 1);
                let k = parity_descent_count(&tau, DescentKind::RightOdd);
                assert_eq!(
                    parity_descent_count(&pi, DescentKind::RightEven),
                    n / 2 - 1 - k
                );
                assert_eq!(right_odd_to_even_start(&tau), pi);
            }
        }
    }
}
