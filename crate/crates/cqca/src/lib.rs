//! Exact simulation of Clifford quantum cellular automata (CQCAs) on an
//! infinite 1-D lattice.
//!
//! A CQCA updates generalized Pauli operators `Q^i P^j` on each site through a
//! reversible, translation-invariant rule. Because the rule maps Pauli strings
//! to Pauli strings, the whole Heisenberg evolution reduces to linear algebra
//! over Laurent polynomials with integer coefficients mod N: no state vectors,
//! no truncation, every number exact.
//!
//! The crate is organized around that representation:
//!
//! - [`algebra`]: Laurent-polynomial arithmetic mod N, operator strings, and
//!   rule matrices (construction, validation, evolution).
//! - [`dynamics`]: squared-commutator maps `C_alpha(t)`, scrambling times,
//!   scans over the local dimension N, and butterfly-cone fits.
//! - [`combinatorics`]: Whitney numbers of fences, computed independently by
//!   hypergeometric series and by brute-force ideal enumeration, used to
//!   cross-check the simulator.
//! - [`analysis`]: box-counting fractal dimension, primal-scar comparisons,
//!   and cone-fill statistics.
//! - [`output`]: deterministic CSV / PGM / JSON writers shared by the `cqca`
//!   binary and the examples.
//!
//! Start with the examples directory; each example exercises one capability
//! end to end (`cargo run --release --example scrambling_scan`, etc.).
//!
//! # Quick start
//!
//! ```
//! use cqca::algebra::paper_rule;
//! use cqca::dynamics::{scrambling_time, xi, Insertion, ScrambleOutcome};
//!
//! let rule = paper_rule(7)?;
//! // Whitney numbers appear as the center-column phase integers:
//! assert_eq!(xi(&rule, Insertion::Q, Insertion::Q, 0, 3)?, 5);
//! // and the squared commutator first reaches 1 at t = 2 for N = 7:
//! let found = scrambling_time(&rule, Insertion::Q, Insertion::Q, 16)?;
//! assert_eq!(found, ScrambleOutcome::Found { t_star: 2, xi_witness: 2 });
//! # Ok::<(), cqca::Error>(())
//! ```

pub mod algebra;
pub mod analysis;
pub mod combinatorics;
pub mod dynamics;
pub mod error;
mod fit;
pub mod output;

pub use algebra::{LaurentPoly, OperatorString, RuleMatrix, RuleValidation};
pub use dynamics::{ConeFit, HeatMap, Insertion, ScanResult};
pub use error::Error;
