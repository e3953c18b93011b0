//! Size caps for exhaustive enumeration and materialized matching tables.

use crate::error::{Error, Result};

/// Environment variable overriding the enumeration cap.
pub const MAX_N_ENV: &str = "PARITY_DESCENTS_MAX_N";

pub const DEFAULT_ENUMERATION_CAP: usize = 11;
pub const DEFAULT_TABLE_CAP: usize = 9;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest n for which S_n is enumerated.
    pub enumeration: usize,
    /// Largest n for which a bijection table is materialized.
    pub table: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            enumeration: DEFAULT_ENUMERATION_CAP,
            table: DEFAULT_TABLE_CAP,
        }
    }
}

impl Limits {
    /// Defaults, with the enumeration cap taken from `PARITY_DESCENTS_MAX_N` when set.
    pub fn from_env() -> Self {
        let mut limits = Limits::default();
        if let Some(n) = std::env::var(MAX_N_ENV)
            .ok()
            .and_then(|v| v.trim().parse::<usize>().ok())
        {
            limits.enumeration = n;
        }
        limits
    }

    pub fn check_enumeration(&self, n: usize) -> Result<()> {
        if n > self.enumeration {
            return Err(Error::ResourceLimit {
                n,
                cap: self.enumeration,
            });
        }
        Ok(())
    }

    pub fn check_table(&self, n: usize) -> Result<()> {
        if n > self.table {
            return Err(Error::ResourceLimit { n, cap: self.table });
        }
        Ok(())
    }
}
