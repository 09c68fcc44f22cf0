//! Exact computations with the Auslander–Dlab–Ringel algebra of a bound
//! quiver algebra.
//!
//! The crate is layered bottom-up:
//!
//! - [`exact`]: linear algebra over `Q` and `F_p` with canonical subspaces.
//! - [`quiver`]: algebra files, path bases and the bound algebra `A = KQ/I`.
//! - [`graded`]: modules given by idempotent-graded generator actions; shared
//!   by both kinds of module below.
//! - [`amod`]: `A`-modules as quiver representations.
//! - [`adr`]: the generator `G = ⊕ P_i/rad^j P_i`, the algebra
//!   `R = End_A(G)^op` and the functor `Hom_A(G, -)`.
//! - [`strat`]: standard modules, the preradical `δ` and `Δ`-semisimple
//!   filtrations.
//! - [`approx`]: `Add(G)`-approximations, minimal resolutions and the
//!   Loewy-length audits.
//! - [`corpus`]: seeded random modules and independent oracles.
//! - [`expr`]: the module expression language used by the CLI.
//! - [`report`]: serializable reports.

pub mod adr;
pub mod amod;
pub mod approx;
pub mod builtins;
pub mod corpus;
pub mod error;
pub mod exact;
pub mod expr;
pub mod graded;
pub mod quiver;
pub mod report;
pub mod strat;

pub use error::{Error, Result};
pub use exact::{Field, Matrix, Scalar, Subspace};
