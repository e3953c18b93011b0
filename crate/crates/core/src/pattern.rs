//! Patterns whose letters carry residue constraints.
//!
//! The two-letter parity notation (`2e1*`, `1o2e`, ...) is the modulus-2 case:
//! `e` requires an even entry, `o` an odd one and `*` anything. The general
//! form annotates a letter with `%r:k`, meaning the entry must be `≡ r (mod k)`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::perm::{standardize_into, Permutation};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Annotation {
    Any,
    Residue(u32),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PatternLetter {
    pub rank: u32,
    pub annotation: Annotation,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ParityPattern {
    letters: Vec<PatternLetter>,
    /// Shared modulus of every `Residue` annotation; `None` when all letters are `Any`.
    modulus: Option<u32>,
}

impl ParityPattern {
    pub fn new(letters: Vec<PatternLetter>, modulus: Option<u32>) -> Result<Self> {
        if letters.is_empty() {
            return Err(Error::InvalidPattern("pattern has no letters".into()));
        }
        let ranks: Vec<u32> = letters.iter().map(|l| l.rank).collect();
        Permutation::new(ranks)
            .map_err(|e| Error::InvalidPattern(format!("ranks are not a permutation: {e}")))?;
        let annotated = letters
            .iter()
            .any(|l| matches!(l.annotation, Annotation::Residue(_)));
        match modulus {
            Some(0) => return Err(Error::InvalidPattern("modulus must be positive".into())),
            Some(k) => {
                for l in &letters {
                    if let Annotation::Residue(r) = l.annotation {
                        if r >= k {
                            return Err(Error::InvalidPattern(format!(
                                "residue {r} is not reduced mod {k}"
                            )));
                        }
                    }
                }
            }
            None if annotated => {
                return Err(Error::InvalidPattern(
                    "residue annotations need a modulus".into(),
                ))
            }
            None => {}
        }
        Ok(ParityPattern { letters, modulus })
    }

    /// Every letter constrained to `τ_j mod k`, the classical "parity-k-τ" reading.
    pub fn from_tau(tau: &Permutation, k: u32) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidPattern("modulus must be positive".into()));
        }
        let letters = tau
            .values()
            .iter()
            .map(|&v| PatternLetter {
                rank: v,
                annotation: Annotation::Residue(v % k),
            })
            .collect();
        ParityPattern::new(letters, Some(k))
    }

    /// Pattern with the given ranks and no residue constraints.
    pub fn unannotated(tau: &Permutation) -> Self {
        let letters = tau
            .values()
            .iter()
            .map(|&v| PatternLetter {
                rank: v,
                annotation: Annotation::Any,
            })
            .collect();
        ParityPattern {
            letters,
            modulus: None,
        }
    }

    /// Same letters, reinterpreted under `modulus`; only valid when nothing is annotated.
    pub fn with_vacuous_modulus(&self, modulus: u32) -> Result<Self> {
        ParityPattern::new(self.letters.clone(), Some(modulus))
    }

    pub fn letters(&self) -> &[PatternLetter] {
        &self.letters
    }

    pub fn modulus(&self) -> Option<u32> {
        self.modulus
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    fn admits(&self, j: usize, value: u32) -> bool {
        match (self.letters[j].annotation, self.modulus) {
            (Annotation::Any, _) => true,
            (Annotation::Residue(r), Some(k)) => value % k == r,
            (Annotation::Residue(_), None) => unreachable!("validated at construction"),
        }
    }
}

/// Number of windows `σ_i..σ_{i+m-1}` that match `pattern` in order and residues.
pub fn count_consecutive_matches(sigma: &Permutation, pattern: &ParityPattern) -> usize {
    let m = pattern.len();
    let values = sigma.values();
    if m > values.len() {
        return 0;
    }
    let ranks: Vec<u32> = pattern.letters.iter().map(|l| l.rank).collect();
    let mut reduced = vec![0u32; m];
    values
        .windows(m)
        .filter(|w| {
            if !w.iter().enumerate().all(|(j, &v)| pattern.admits(j, v)) {
                return false;
            }
            standardize_into(w, &mut reduced);
            reduced == ranks
        })
        .count()
}

/// True when no pattern in `patterns` has a consecutive occurrence in `sigma`.
pub fn avoids_consecutive(sigma: &Permutation, patterns: &[ParityPattern]) -> bool {
    patterns
        .iter()
        .all(|p| count_consecutive_matches(sigma, p) == 0)
}

/// Classical (not necessarily consecutive) avoidance of `τ` with every chosen entry
/// `≡ τ_j (mod k)`. `k = 1` is ordinary pattern avoidance.
pub fn is_parity_k_tau_avoiding_classical(
    sigma: &Permutation,
    tau: &Permutation,
    k: u32,
) -> Result<bool> {
    if k == 0 {
        return Err(Error::InvalidPattern("modulus must be positive".into()));
    }
    let values = sigma.values();
    let target = tau.values();
    if target.len() > values.len() {
        return Ok(true);
    }
    let mut chosen = Vec::with_capacity(target.len());
    Ok(!embeds(values, target, k, 0, &mut chosen))
}

// Depth-first search over increasing index tuples, pruning on residue and relative order.
fn embeds(values: &[u32], tau: &[u32], k: u32, start: usize, chosen: &mut Vec<u32>) -> bool {
    let j = chosen.len();
    if j == tau.len() {
        return true;
    }
    let remaining = tau.len() - j;
    for i in start..=values.len() - remaining {
        let v = values[i];
        if v % k != tau[j] % k {
            continue;
        }
        let consistent = chosen
            .iter()
            .zip(tau)
            .all(|(&c, &t)| (c < v) == (t < tau[j]));
        if !consistent {
            continue;
        }
        chosen.push(v);
        if embeds(values, tau, k, i + 1, chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}

impl FromStr for ParityPattern {
    type Err = Error;

    /// Parses letters such as `2e1*` or `2%2:3 1%1:3`; whitespace between letters is optional.
    fn from_str(s: &str) -> Result<Self> {
        let chars: Vec<char> = s.chars().collect();
        let mut i = 0;
        let mut letters = Vec::new();
        let mut modulus: Option<u32> = None;
        let mut set_modulus = |k: u32| -> Result<()> {
            match modulus {
                Some(existing) if existing != k => Err(Error::InvalidPattern(format!(
                    "mixed moduli {existing} and {k}"
                ))),
                _ => {
                    modulus = Some(k);
                    Ok(())
                }
            }
        };
        let read_number = |i: &mut usize| -> Option<u32> {
            let begin = *i;
            while *i < chars.len() && chars[*i].is_ascii_digit() {
                *i += 1;
            }
            chars[begin..*i].iter().collect::<String>().parse().ok()
        };

        while i < chars.len() {
            if chars[i].is_whitespace() || chars[i] == ',' {
                i += 1;
                continue;
            }
            let rank = read_number(&mut i)
                .ok_or_else(|| Error::InvalidPattern(format!("expected a rank at offset {i}")))?;
            let annotation = match chars.get(i) {
                Some('e') => {
                    i += 1;
                    set_modulus(2)?;
                    Annotation::Residue(0)
                }
                Some('o') => {
                    i += 1;
                    set_modulus(2)?;
                    Annotation::Residue(1)
                }
                Some('*') => {
                    i += 1;
                    Annotation::Any
                }
                Some('%') => {
                    i += 1;
                    let r = read_number(&mut i).ok_or_else(|| {
                        Error::InvalidPattern(format!("expected a residue at offset {i}"))
                    })?;
                    if chars.get(i) != Some(&':') {
                        return Err(Error::InvalidPattern(format!(
                            "expected `:` after residue at offset {i}"
                        )));
                    }
                    i += 1;
                    let k = read_number(&mut i).ok_or_else(|| {
                        Error::InvalidPattern(format!("expected a modulus at offset {i}"))
                    })?;
                    set_modulus(k)?;
                    Annotation::Residue(r)
                }
                _ => {
                    return Err(Error::InvalidPattern(format!(
                        "letter {rank} needs a suffix `e`, `o`, `*` or `%r:k`"
                    )))
                }
            };
            letters.push(PatternLetter { rank, annotation });
        }
        ParityPattern::new(letters, modulus)
    }
}

impl fmt::Display for ParityPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // spaces separate letters only when a `%r:k` suffix could run into the next rank
        let parity_style = matches!(self.modulus, None | Some(2));
        for (j, l) in self.letters.iter().enumerate() {
            if j > 0 && !parity_style {
                f.write_str(" ")?;
            }
            write!(f, "{}", l.rank)?;
            match (l.annotation, self.modulus) {
                (Annotation::Any, _) => f.write_str("*")?,
                (Annotation::Residue(0), Some(2)) => f.write_str("e")?,
                (Annotation::Residue(1), Some(2)) => f.write_str("o")?,
                (Annotation::Residue(r), Some(k)) => write!(f, "%{r}:{k}")?,
                (Annotation::Residue(_), None) => unreachable!(),
            }
        }
        Ok(())
    }
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

    fn pat(s: &str) -> ParityPattern {
        s.parse().unwrap()
    }

    #[test]
    fn two_letter_occurrences() {
        let s = p("2 5 3 1 4");
        assert_eq!(count_consecutive_matches(&s, &pat("1o2e")), 1);
        assert_eq!(count_consecutive_matches(&s, &pat("1o2o")), 0);
        assert_eq!(count_consecutive_matches(&s, &pat("2e1*")), 0);
        assert_eq!(count_consecutive_matches(&s, &pat("2*1o")), 2);
        assert_eq!(count_consecutive_matches(&s, &pat("2o1o")), 2);
    }

    #[test]
    fn residue_matches() {
        let s = p("3 2 4 5 1");
        let mod2 = ParityPattern::from_tau(&p("2 1"), 2).unwrap();
        assert_eq!(count_consecutive_matches(&s, &mod2), 0);
        let mod3 = pat("2%2:3 1%1:3");
        assert_eq!(mod3, ParityPattern::from_tau(&p("2 1"), 3).unwrap());
        assert_eq!(count_consecutive_matches(&s, &mod3), 1);
        assert_eq!(
            count_consecutive_matches(&s, &ParityPattern::unannotated(&p("2 1"))),
            2
        );
    }

    #[test]
    fn long_patterns_never_match_short_permutations() {
        assert_eq!(count_consecutive_matches(&p("1 2"), &pat("1*2*3*")), 0);
    }

    #[test]
    fn single_letter_patterns_count_admissible_positions() {
        assert_eq!(count_consecutive_matches(&p("2 5 3 1 4"), &pat("1e")), 2);
        assert_eq!(count_consecutive_matches(&p("2 5 3 1 4"), &pat("1*")), 5);
    }

    #[test]
    fn avoidance_of_sets() {
        let def1 = [pat("1e2*"), pat("2o1*")];
        assert!(avoids_consecutive(&p("2 1 3"), &def1));
        assert!(!avoids_consecutive(&p("1 2 3"), &def1));
        assert!(avoids_consecutive(&p("3 1 2"), &[]));
    }

    #[test]
    fn classical_avoidance() {
        let s = p("3 2 4 5 1");
        let tau = p("2 1");
        // the subsequence 2 1 is even-then-odd, so only the consecutive sense avoids it
        assert!(!is_parity_k_tau_avoiding_classical(&s, &tau, 2).unwrap());
        let parity2 = ParityPattern::from_tau(&tau, 2).unwrap();
        assert_eq!(count_consecutive_matches(&s, &parity2), 0);
        let parity3 = ParityPattern::from_tau(&tau, 3).unwrap();
        assert_eq!(count_consecutive_matches(&s, &parity3), 1);
        assert!(is_parity_k_tau_avoiding_classical(&p("1 3 2 4 5"), &tau, 2).unwrap());
        assert!(!is_parity_k_tau_avoiding_classical(&s, &tau, 1).unwrap());
        for k in 1..5 {
            assert!(
                is_parity_k_tau_avoiding_classical(&Permutation::identity(5), &tau, k).unwrap()
            );
        }
        // 2 5 1 reduces to 2 3 1 with residues 0 1 1 mod 2; no entry ≡ 0 mod 3 follows a 2 or 5
        assert!(!is_parity_k_tau_avoiding_classical(&s, &p("2 3 1"), 1).unwrap());
        assert!(!is_parity_k_tau_avoiding_classical(&s, &p("2 3 1"), 2).unwrap());
        assert!(is_parity_k_tau_avoiding_classical(&s, &p("2 3 1"), 3).unwrap());
        assert!(is_parity_k_tau_avoiding_classical(&s, &p("1 2 3 4 5 6"), 1).unwrap());
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            "".parse::<ParityPattern>(),
            Err(Error::InvalidPattern(_))
        ));
        assert!("2e1".parse::<ParityPattern>().is_err());
        assert!("2e2*".parse::<ParityPattern>().is_err());
        assert!("2%1:3 1e".parse::<ParityPattern>().is_err());
        assert!("2%4:3 1%1:3".parse::<ParityPattern>().is_err());
        assert!("2%1 1%1:3".parse::<ParityPattern>().is_err());
        assert!("x".parse::<ParityPattern>().is_err());
    }

    #[test]
    fn display_round_trips() {
        for s in ["2e1*", "1o2e", "2%2:3 1%1:3", "3*1*2*"] {
            assert_eq!(pat(s).to_string(), s);
            assert_eq!(pat(&pat(s).to_string()), pat(s));
        }
    }

    #[test]
    fn patterns_reproduce_descent_statistics() {
        let limits = Limits::default();
        let plain_k1 = ParityPattern::from_tau(&p("2 1"), 1).unwrap();
        let cases = [
            ("2e1*", DescentKind::LeftEven),
            ("2o1*", DescentKind::LeftOdd),
            ("2*1e", DescentKind::RightEven),
            ("2*1o", DescentKind::RightOdd),
        ];
        let compiled: Vec<_> = cases.iter().map(|(s, k)| (pat(s), *k)).collect();
        for n in 1..=8 {
            for s in all_perms(n, &limits).unwrap() {
                assert_eq!(
                    count_consecutive_matches(&s, &plain_k1),
                    parity_descent_count(&s, DescentKind::Plain)
                );
                for (pattern, kind) in &compiled {
                    assert_eq!(
                        count_consecutive_matches(&s, pattern),
                        parity_descent_count(&s, *kind),
                        "{s} vs {pattern}"
                    );
                }
            }
        }
    }
}
