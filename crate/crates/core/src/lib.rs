//! Mechanical verification of overpartition congruences modulo 5 and 25.
//!
//! The crate is `no_std` (it needs `alloc`) and is organized bottom-up:
//!
//! - [`series`]: truncated formal power series over exact integers, residues
//!   mod `u`, or exact rationals, plus eta-quotient and theta expansions.
//! - [`overpartitions`]: the ground-truth oracle for `p̄(n)` and direct checks
//!   of arithmetic progressions.
//! - [`identities`]: a named catalog of the series identities and congruences
//!   the proofs depend on, each checked coefficientwise.
//! - [`parametrization`]: exact monomial algebra over rational powers of
//!   `{2, q, p, 1-p, 1+p, 1+2p, 2+p, k}` that reduces the two nine-term sums to
//!   `25/4096` times a monomial times an integer polynomial in `p`.
//! - [`radu_sellers`]: the finite-check criterion for eta-quotient
//!   congruences, with the sets, bounds and hypothesis values computed exactly.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod arith;
pub mod error;
pub mod identities;
pub mod overpartitions;
pub mod parametrization;
pub mod radu_sellers;
pub mod series;

pub use error::{Error, Result};
pub use overpartitions::{ClaimStatus, CongruenceClaim, OverpartitionTable};
pub use series::{Coefficient, Domain, EtaQuotient, TruncatedSeries};
