//! Closed-form Laurent-Puiseux series and generating functions through
//! holonomic differential equations and recurrence equations.
//!
//! The pipeline mirrors the classical algorithms for functions of
//! rational, exponential, and hypergeometric type:
//!
//! * [`expr`] — exact expression trees, parsing, differentiation.
//! * [`taylor`] — a truncated exact Taylor/Laurent oracle used for initial
//!   values and verification.
//! * [`definder`] — minimal-order homogeneous linear ODEs with polynomial
//!   coefficients for a given expression.
//! * [`transform`] — ODE <-> recurrence conversion and validity extension.
//! * [`series`] — classification and closed-form coefficient solving.
//! * [`seqrec`] — recurrences for explicitly given coefficient sequences.
//! * [`gf`] — generating functions: recurrence -> ODE -> bounded solver.

pub mod rat;
pub mod surd;
pub mod mpoly;
pub mod mrat;
pub mod error;
pub mod conv;
pub mod trace;
pub mod expr;
pub mod taylor;
pub mod ode;
pub mod recurrence;
pub mod definder;
pub mod transform;
pub mod series;
pub mod seqrec;
pub mod gf;

pub use error::{Error, Result};
pub use expr::{parse, Expr, Head};
pub use ode::LinearODE;
pub use recurrence::{LinearRecurrence, Validity};
