//! Symbolic ω-automata over effective Boolean algebras.
//!
//! The crate builds alternating and nondeterministic Büchi automata whose
//! transitions are *transition terms*: nested if-then-else trees with
//! algebra predicates at the internal nodes. Temporal formulas (LTL extended
//! with regular-expression operators) and extended regular expressions are
//! translated by symbolic derivatives, alternation is eliminated
//! incrementally, and emptiness and ultimately-periodic-word membership are
//! decided on the resulting automata. Reference implementations in
//! [`oracle`] evaluate the same questions by independent classical
//! algorithms for differential testing.

pub mod algebra;
pub mod automata;
pub mod ere;
pub mod error;
pub mod oracle;
pub mod parse;
pub mod rltl;
pub mod tterm;

pub use algebra::{Algebra, Letter, Pred};
pub use automata::{Aba, Emptiness, UpWord};
pub use ere::{Regex, RegexDfa};
pub use error::{Error, Result};
pub use rltl::Formula;
pub use tterm::{Dnf, Tt};
