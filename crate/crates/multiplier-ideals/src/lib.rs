//! Multiplier ideals of monomial ideals and generic determinantal ideals,
//! computed combinatorially in exact rational arithmetic.
//!
//! For a monomial ideal, Howald's theorem reduces every multiplier ideal
//! `J(I^c)` to lattice-point geometry on the Newton polyhedron of `I`; this
//! crate ships a self-contained exact polyhedral engine (facet enumeration
//! by the double description method, scaled interior systems, minimal
//! lattice generators) and builds on it:
//!
//! - [`multiplier_ideal`], [`in_multiplier_ideal`] — `J(I^c)` by generators,
//!   and the direct membership test that serves as its independent oracle;
//! - [`threshold_of_monomial`], [`lct`] — thresholds with witness facets,
//!   and the log canonical threshold;
//! - [`jumping_numbers`] — all jumping numbers in an interval, each
//!   confirmed by an ideal comparison;
//! - [`skoda_extend`] — multiplier ideals at large exponents through the
//!   periodicity `J(I^c) = I * J(I^(c-1))`.
//!
//! For the ideal of `r x r` minors of a generic `m x n` matrix, a formula of
//! Johnson gives `J(I_r(X)^c)` as a formal intersection of symbolic powers;
//! [`DeterminantalShape`] computes those intersections, the log canonical
//! threshold, jumping-number candidates, symbolic-power expansions over
//! partitions, and explicit minor generators.
//!
//! ```
//! use multiplier_ideals::{jumping_numbers, lct, Interval, MonomialIdeal};
//! use multiplier_ideals::rational::rational_int;
//!
//! let ideal = MonomialIdeal::parse(
//!     &["x", "y", "z", "w"],
//!     &["x*y", "x*z", "y*z", "y*w", "z*w^2"],
//! )?;
//! assert_eq!(lct(&ideal)?, rational_int(2));
//!
//! let interval = Interval::open_closed(rational_int(0), rational_int(4))?;
//! let report = jumping_numbers(&ideal, &interval)?;
//! assert_eq!(report.numbers.len(), 9);
//! # Ok::<(), multiplier_ideals::Error>(())
//! ```
//!
//! The `examples/` directory exercises each capability as a runnable
//! program, and the `multiplier-ideals` binary exposes the same operations
//! as subcommands.

pub mod cli;
pub mod determinantal;
pub mod error;
mod hull;
pub mod ideal;
pub mod interval;
pub mod multiplier;
pub mod newton;
pub mod rational;

pub use determinantal::{
    DeterminantalShape, FormalExpansion, JumpingCandidate, MinorTermList, SymbolicFactor,
    SymbolicIntersection,
};
pub use error::{Error, Result};
pub use ideal::{minimalize, monomial_string, parse_monomial, ExponentVector, MonomialIdeal};
pub use interval::Interval;
pub use multiplier::{
    in_multiplier_ideal, jumping_numbers, lct, multiplier_ideal, skoda_extend,
    threshold_of_monomial, JumpingReport, Threshold, ThresholdResult,
};
pub use newton::{Facet, NewtonPolyhedron, ScaledSystem};
pub use rational::Rational;
