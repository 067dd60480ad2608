//! Exact combinatorics for branching multiplicities from `GL_n` to the
//! orthogonal and symplectic groups.
//!
//! The building blocks are partitions, semistandard tableaux and their
//! type-A crystal structure, Littlewood-Richardson tableaux in lattice and
//! anti-lattice form, the two-column spinor model for type-D crystals, a
//! separation algorithm factoring highest weight elements into an even body
//! and an LR tail, flag conditions on LR tableaux, and graded zero-weight
//! multiplicities (generalized exponents) of types B and D.
//!
//! Everything is exact integer combinatorics; independent brute-force
//! oracles live in [`oracle`] and are wired into the test suite.

#![forbid(unsafe_code)]

pub mod branching;
pub mod flags;
pub mod genexp;
pub mod lr;
pub mod oracle;
pub(crate) mod par;
pub mod partition;
pub mod poly;
pub mod separation;
pub mod spinor;
pub mod tableau;

pub use branching::{BranchingQuery, Group, Method};
pub use flags::{FlagContext, FlagSequences};
pub use lr::{LrKind, LrWitness};
pub use partition::{ParityFamily, Partition};
pub use poly::GradedPolynomial;
pub use separation::SeparationResult;
pub use spinor::{SpinorElement, TwoColumn};
pub use tableau::{SkewShape, Tableau};
