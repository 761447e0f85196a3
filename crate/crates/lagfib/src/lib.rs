//! Exact-arithmetic toolkit for the discriminant locus of a Lagrangian
//! fibration on a holomorphic symplectic manifold.
//!
//! The crate computes, with no floating point anywhere:
//!
//! - sparse truncated graded-ring arithmetic over big rationals
//!   ([`graded_ring`]), the substrate for characteristic-class series;
//! - the A-roof genus and its formal square root as polynomial series in
//!   Chern classes, and characteristic numbers of manifolds
//!   ([`char_classes`]);
//! - closed-form degrees of the discriminant locus for fibrations by
//!   principally and non-principally polarized abelian varieties, the
//!   Fujiki-relation pipeline that derives them, and the admissible
//!   degeneration models of a polarized fibre ([`fibration`]);
//! - an independent intersection-theory verification: the degree as the
//!   third Chern class of a rank-3 bundle on Surface x P1 ([`pencil`]);
//! - the finite census of admissible four-fold invariants (b2, b3, d,
//!   deg Delta) with CSV/JSON export ([`fourfold`]).
//!
//! The `examples/` directory demonstrates each capability as a runnable
//! program; the `lagfib` binary exposes the same computations as CLI
//! subcommands (`series`, `degdelta`, `census`, `pencil`, `models`).
//!
//! # Quick start
//!
//! ```
//! use lagfib::char_classes::{characteristic_number, sqrt_ahat_series, ChernNumbers};
//! use lagfib::fibration::deg_delta_principal;
//! use lagfib::rational::rat;
//!
//! // sqrt-A-roof of the Hilbert scheme of two points on a K3 surface,
//! // straight from its Chern numbers
//! let record = ChernNumbers::new("S[2]", 4, &[("c2.c2", 828), ("c4", 324)]).unwrap();
//! let sqrt_ahat = characteristic_number(&sqrt_ahat_series(4), &record).unwrap();
//! assert_eq!(sqrt_ahat, rat(25, 32));
//!
//! // the discriminant of a Lagrangian fibration on it has degree 30
//! let degree = deg_delta_principal(2, &sqrt_ahat).unwrap();
//! assert_eq!(degree, rat(30, 1));
//! ```

pub mod char_classes;
pub mod cli;
pub mod error;
pub mod fibration;
pub mod fourfold;
pub mod graded_ring;
pub mod pencil;
pub mod rational;

pub use error::{Error, Result};
pub use rational::Rational;
