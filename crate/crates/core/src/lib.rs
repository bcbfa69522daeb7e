//! Exact-arithmetic engine for certifying log-behavior of sequences that
//! satisfy an order-2 recurrence `S_n = a(n) S_{n-1} + b(n) S_{n-2}` with
//! rational-function coefficients.
//!
//! Everything is computed over Q or the quadratic extension Q(√2); no
//! floating point participates in any decision. A certification run reduces
//! the claimed property (log-convexity of the difference sequence, ratio
//! log-concavity/convexity, factorial log-convexity, ratio bounds) to a
//! small set of polynomial positivity facts, each of which is decided by an
//! exact shifted-coefficient test and recorded in a replayable certificate.
//!
//! The crate is `no_std` (alloc only); IO, file formats and the CLI live in
//! the companion `logcert` binary crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod qfield;
pub mod symb;
pub mod posit;
pub mod recur;
pub mod bounds;
pub mod criteria;
pub mod seqcheck;

pub use qfield::{BigRational, Qrt2};
pub use symb::{Polynomial, RationalFunction};
