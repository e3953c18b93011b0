//! Published tables of `R_n`, `P_n` and `Q_n` for `n ≤ 8`, transcribed as printed.

use crate::poly::BivariatePolynomial;
use crate::stats::Family;

/// `(zdeg, xdeg, value)` cells as printed.
type Cells = &'static [(u32, u32, u64)];

const R: [Cells; 8] = [
    &[(0, 0, 1)],
    &[(0, 0, 1), (0, 1, 1)],
    &[(0, 0, 4), (0, 1, 2)],
    &[(0, 0, 4), (0, 1, 16), (0, 2, 4)],
    &[(0, 0, 36), (0, 1, 72), (0, 2, 12)],
    &[(0, 0, 36), (0, 1, 324), (0, 2, 324), (0, 3, 36)],
    &[(0, 0, 576), (0, 1, 2592), (0, 2, 1728), (0, 3, 144)],
    &[
        (0, 0, 576),
        (0, 1, 9216),
        (0, 2, 20736),
        (0, 3, 9216),
        (0, 4, 576),
    ],
];

const P: [Cells; 8] = [
    &[(0, 0, 1)],
    &[(0, 0, 1), (1, 0, 1)],
    &[(0, 0, 2), (1, 0, 2), (0, 1, 2)],
    &[(0, 0, 4), (1, 0, 8), (0, 1, 8), (1, 1, 4)],
    &[(0, 0, 12), (1, 0, 24), (0, 1, 48), (1, 1, 24), (0, 2, 12)],
    &[
        (0, 0, 36),
        (1, 0, 108),
        (0, 1, 216),
        (1, 1, 216),
        (0, 2, 108),
        (1, 2, 36),
    ],
    &[
        (0, 0, 144),
        (1, 0, 432),
        (0, 1, 1296),
        (1, 1, 1296),
        (0, 2, 1296),
        (1, 2, 432),
        (0, 3, 144),
    ],
    &[
        (0, 0, 576),
        (1, 0, 2304),
        (0, 1, 6912),
        (1, 1, 10368),
        (0, 2, 10368),
        (1, 2, 6192),
        (0, 3, 2304),
        (1, 3, 576),
    ],
];

const Q: [Cells; 8] = [
    &[(1, 0, 1)],
    &[(1, 0, 1), (0, 1, 1)],
    &[(1, 0, 2), (0, 1, 2), (1, 1, 2)],
    &[(1, 0, 4), (0, 1, 8), (1, 1, 8), (0, 2, 4)],
    &[(1, 0, 12), (0, 1, 24), (1, 1, 48), (0, 2, 24), (1, 2, 12)],
    &[
        (1, 0, 36),
        (0, 1, 108),
        (1, 1, 216),
        (0, 2, 216),
        (1, 2, 108),
        (0, 3, 36),
    ],
    &[
        (1, 0, 144),
        (0, 1, 432),
        (1, 1, 1296),
        (0, 2, 1296),
        (1, 2, 1296),
        (0, 3, 432),
        (1, 3, 144),
    ],
    &[
        (1, 0, 576),
        (0, 1, 2304),
        (1, 1, 6912),
        (0, 2, 10368),
        (1, 2, 10368),
        (0, 3, 6192),
        (1, 3, 2304),
        (0, 4, 576),
    ],
];

/// A printed cell known to be wrong, with the value the count actually takes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct KnownErratum {
    pub family: Family,
    pub n: usize,
    pub zdeg: u32,
    pub xdeg: u32,
    pub printed: u64,
    pub actual: u64,
}

/// Both cells print `6192` where the coefficient is `6912` (two digits transposed).
pub const ERRATA: [KnownErratum; 2] = [
    KnownErratum {
        family: Family::P,
        n: 8,
        zdeg: 1,
        xdeg: 2,
        printed: 6192,
        actual: 6912,
    },
    KnownErratum {
        family: Family::Q,
        n: 8,
        zdeg: 0,
        xdeg: 3,
        printed: 6192,
        actual: 6912,
    },
];

pub const MAX_PRINTED_N: usize = 8;

/// The printed polynomial, or `None` outside `R_1..R_8`, `P_1..P_8`, `Q_1..Q_8`.
pub fn printed(family: Family, n: usize) -> Option<BivariatePolynomial> {
    let tables = match family {
        Family::R => &R,
        Family::P => &P,
        Family::Q => &Q,
        Family::M => return None,
    };
    let cells = tables.get(n.checked_sub(1)?)?;
    Some(BivariatePolynomial::from_terms(cells.iter().copied()))
}

pub fn erratum(family: Family, n: usize, zdeg: u32, xdeg: u32) -> Option<&'static KnownErratum> {
    ERRATA
        .iter()
        .find(|e| e.family == family && e.n == n && e.zdeg == zdeg && e.xdeg == xdeg)
}
