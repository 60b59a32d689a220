//! Referee panels that cover every pair of proposals.
//!
//! Ranking a set of proposals by pairwise comparison only works if every
//! pair of proposals lands with at least one referee. Given `n` proposals
//! and a per-referee capacity of `k`, this crate answers two questions:
//! how many referees are needed at minimum, and how to assign proposals
//! to a near-minimal panel so that all `n(n-1)/2` pairs are covered.
//!
//! - [`cover`]: domain types, pair enumeration, and the verifier.
//! - [`bounds`]: the counting lower bound, its strengthenings for the
//!   half/third/quarter capacity shapes, and reference tables and curves.
//! - [`designs`]: the orthogonal tuple systems behind the collision-free
//!   cross referees.
//! - [`constructions`]: explicit schemes (1, 6, 12, 20, or `n(2n-k)/k²`
//!   referees depending on shape), a dispatcher, and a deterministic
//!   greedy fallback.
//! - [`oracle`]: exact branch-and-bound minima and brute-force checks of
//!   the maximization kernels the bounds rest on.
//! - [`specialty`]: subject-area constrained panels and a compliance
//!   checker.
//! - [`cli`]: the `paircover` binary.
//!
//! Every generator is pure and deterministic, and every emitted
//! assignment passes [`cover::verify`] before it leaves the CLI.
//!
//! ```
//! let assignment = paircover::constructions::assign_auto(18, 6).unwrap();
//! let report = paircover::cover::verify(&assignment).unwrap();
//! assert!(report.is_complete());
//! assert_eq!(assignment.referee_count(), 12);
//! ```

pub mod bounds;
pub mod cli;
pub mod constructions;
pub mod cover;
pub mod designs;
pub mod error;
pub mod format;
pub mod oracle;
pub mod specialty;

pub use cover::{all_pairs, pairs_of, verify, Assignment, CoverageReport, Instance, Pair, Referee};
pub use error::{Error, Result};
