//! Complex fuzzy Lie subalgebras and ideals over finite-dimensional Lie
//! algebras with finite carriers.
//!
//! Every algebra lives over a prime field `F_p` with a small dimension, so
//! the full carrier (all `p^n` coordinate vectors) is enumerable and every
//! predicate in the crate is decided exhaustively with exact rational
//! arithmetic. Membership values are points of the closed unit disc,
//! `r * e^(i*w)` with `r` a rational in `[0, 1]` and `w` a rational multiple
//! of pi in `[0, 2pi]`; the componentwise partial order, meet, and join on
//! such values drive all subalgebra/ideal conditions.
//!
//! Module map:
//! - [`lie_core`]: prime fields, structure constants, Lie axiom validation,
//!   carrier enumeration, crisp subalgebra/ideal checks, homomorphisms.
//! - [`cfuzzy`]: exact unit-disc memberships, homogeneity, pi-fuzzy sets,
//!   decomposition, intersections.
//! - [`cfla`]: complex fuzzy subalgebra/ideal predicates, level machinery,
//!   the fuzzy sum, and chain-based instance generation.
//! - [`homs`]: image/preimage of complex fuzzy sets along homomorphisms and
//!   the commutation checks.
//! - [`harness`]: scenario file I/O, seeded random instance generation, the
//!   verification suite, the hypothesis probe, and the CLI driver.
//!
//! See the crate `examples/` directory for one runnable walkthrough per
//! capability; the `cflie` binary exposes the same machinery as subcommands.

pub mod cfla;
pub mod cfuzzy;
pub mod check;
pub mod error;
pub mod harness;
pub mod homs;
pub mod lie_core;

pub use check::{CheckResult, Verdict, Witness};
pub use error::Error;

/// Exact rational scalar used for both membership amplitudes and phases.
pub type Rational = num_rational::Ratio<i64>;
