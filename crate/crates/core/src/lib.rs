//! Verification toolkit for congruences of central trinomial coefficient
//! sums modulo prime powers.
//!
//! The crate certifies a catalog of congruences (weighted sums of central
//! trinomial and central binomial coefficients, harmonic-number congruences,
//! classical binomial congruences such as Wolstenholme's and Morley's, and a
//! telescoped double sum) over sweeps of primes, two independent ways:
//!
//! * [`claims`] evaluates each congruence with an O(p)-per-prime modular
//!   pipeline built on [`modring`] and the sequence tables in [`comb`];
//! * [`exact`] recomputes left-hand sides as exact rationals from first
//!   definitions and reduces them at the stated modulus, and checks the
//!   finite identities (partial-sum closed forms, binomial transforms, the
//!   telescoping certificate) that the congruence proofs rest on.
//!
//! Agreement between the two routes, plus grid checks of the identities, is
//! the evidence the toolkit produces.

// divisibility tests are written with `%` throughout
#![allow(clippy::manual_is_multiple_of)]

pub mod claims;
pub mod comb;
pub mod exact;
pub mod modring;
pub mod primes;
