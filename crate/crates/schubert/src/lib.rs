//! Exact tangent-space computations for intersections of Schubert varieties
//! in a Grassmannian, for flag pairs of arbitrary relative position, plus
//! the Brill-Noether bookkeeping built on top of them (rho and its modified
//! variant, genus-1 twice-marked fiber models, refined chain enumeration).
//!
//! Everything runs over exact fields (arbitrary-precision rationals or a
//! prime field), and every closed-form dimension has an independent
//! brute-force counterpart used by the verification sweeps.
//!
//! The `examples/` directory is the guided tour: one runnable example per
//! capability (`cargo run --example <name>`). The `schubert` binary exposes
//! the same operations as subcommands for scripting.

pub mod brill;
pub mod chains;
pub mod error;
pub mod field;
pub mod flag;
pub mod matrix;
pub mod oracle;
pub mod perm;
pub mod report;
pub mod schubert;
pub mod subspace;
pub mod textio;
pub mod verify;

pub use error::{Error, Result};
pub use field::{FieldSpec, Scalar, DEFAULT_PRIME};
pub use flag::{Flag, FlagPairClass, RelPosition};
pub use matrix::Matrix;
pub use perm::Perm;
pub use schubert::{GrassPoint, SchubertIndex, TangentReport};
pub use subspace::Subspace;
