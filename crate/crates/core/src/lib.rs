//! Exact chromatic polynomials of signed multigraphs.
//!
//! A signed multigraph carries a sign on every edge; parallel edges and loops
//! are allowed.  Proper colorings use the symmetric palette {-k, ..., k}
//! (lambda = 2k+1 colors) and must satisfy c(w) != sigma(e) * c(u) across every
//! edge; the balanced variant drops the color 0 (lambda = 2k colors).  Both
//! counting functions are monic polynomials in lambda of degree |V|, and both
//! are invariant under switching (negating all signs across a vertex cut).
//!
//! The crate computes these polynomials four independent ways:
//!
//! * brute-force counting plus exact interpolation ([`chromatic::chromatic_poly_oracle`]),
//! * memoized deletion-contraction ([`chromatic::chromatic_poly`]),
//! * Whitney numbers of the chromatic poset of a type-BC hyperplane
//!   arrangement complement ([`arrangement::whitney_numbers`]),
//! * closed-form recursions for book graphs ([`book::formula_signed_book`]).
//!
//! The agreement of the four routes on overlapping inputs is the correctness
//! argument; the test suite exercises it exhaustively at small sizes.
//!
//! `alloc` is required; `std` is not (the crate is `no_std` outside of tests).

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod arrangement;
pub mod book;
pub mod budget;
pub mod chromatic;
pub mod error;
pub mod graph;
pub mod poly;

pub use book::{BookClass, BookFamily, BookSpec};
pub use budget::Budget;
pub use chromatic::ColoringMode;
pub use error::{Error, Result};
pub use graph::{Edge, Sign, SignedMultigraph, SwitchingVector};
pub use poly::{IntPolynomial, Parity};

pub use num_bigint::{BigInt, BigUint};
