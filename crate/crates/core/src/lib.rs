//! Exact distributions of parity-refined descent statistics over the symmetric groups.
//!
//! A descent `σ_i > σ_{i+1}` is counted by one of four statistics according to whether the
//! top (`Left*`) or bottom (`Right*`) entry is even or odd. Four bivariate families track
//! these statistics together with the parity of the first letter:
//!
//! | family | statistic   | `z` marks        |
//! |--------|-------------|------------------|
//! | `R`    | `LeftEven`  | nothing          |
//! | `P`    | `RightEven` | even first letter |
//! | `Q`    | `RightOdd`  | odd first letter  |
//! | `M`    | `LeftOdd`   | nothing          |
//!
//! Distributions can be produced three ways (operator recursion, closed form, exhaustive
//! enumeration) and the [`verify`] module cross-checks them.
//!
//! ```
//! use parity_descents::{brute_distribution, closed_form_poly, family_poly, Family, Limits};
//!
//! let p6 = family_poly(Family::P, 6).unwrap();
//! assert_eq!(p6, brute_distribution(6, Family::P, &Limits::default()).unwrap());
//! assert_eq!(p6, closed_form_poly(Family::P, 6).unwrap());
//! assert_eq!(family_poly(Family::R, 3).unwrap().to_string(), "4 + 2x");
//! ```

pub mod bijection;
pub mod closed_form;
pub mod engine;
pub mod error;
pub mod genocchi;
pub mod golden;
pub mod limits;
pub mod pattern;
pub mod perm;
pub mod poly;
pub mod stats;
pub mod verify;

pub use bijection::{
    bij_p_complement, bij_p_complement_inv, bij_r_split, bij_r_split_inv, bij_r_symmetry,
    bij_r_symmetry_inv, MatchingTable, RecursiveBijections, SplitTag,
};
pub use closed_form::{closed_form_poly, coeff, CoefficientQuery};
pub use engine::{apply_operator, family_poly, family_table, OperatorId};
pub use error::{Error, Result};
pub use genocchi::{genocchi_sequence, AvoidanceClass, GenocchiTable};
pub use limits::Limits;
pub use pattern::{avoids_consecutive, is_parity_k_tau_avoiding_classical, ParityPattern};
pub use perm::{all_perms, red, Permutation};
pub use poly::BivariatePolynomial;
pub use stats::{parity_descent_count, parity_descent_set, DescentKind, Family, Parity};
pub use verify::{
    brute_distribution, run_identity_suite, CheckRecord, Status, SuiteOptions, VerificationReport,
};
