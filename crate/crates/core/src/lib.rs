//! Hook lengths and the shifted-parts g-function of integer partitions, with
//! exact, exhaustive verification of the identities that connect them.
//!
//! * [`partition`]: partitions, hooks, corners, standard Young tableaux.
//! * [`poly`]: exact polynomials over the rationals.
//! * [`shifted`]: `g_λ(x)` and the per-partition identity catalog.
//! * [`symfunc`]: Schur-basis expansions, Pieri's rule for `p_1`, and the
//!   generating identity in symmetric functions with a monomial oracle.
//! * [`harness`]: parallel sweeps and reports.

pub mod error;
pub mod harness;
pub mod outcome;
pub mod partition;
pub mod poly;
pub mod shifted;
pub mod symfunc;

pub use error::{Error, Result};
pub use harness::{render_report, run_sweep, Jobs, OutputFormat, Selection, SweepConfig, SweepReport};
pub use outcome::{CheckId, IdentityId, SchurCheck, Side, Status, VerificationOutcome, Witness};
pub use partition::{enumerate_partitions, parse_partition, Cell, CornerData, Partition};
pub use poly::{ExactPolynomial, Rational};
pub use shifted::{check_identity, g_poly, Fault, IdentityChecker};
pub use symfunc::{MonomialExpansion, SchurExpansion};
