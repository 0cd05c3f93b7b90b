//! Proof search and coherence for skew non-commutative
//! multiplicative-additive logic.
//!
//! The crate provides:
//! * formulas, sequents and their concrete syntax ([`formula`]);
//! * the unfocused sequent calculus with cut ([`calculus`]);
//! * the congruence on derivations as a rewrite system ([`congruence`]);
//! * the focused calculus of normal forms ([`focused`]);
//! * proof search and enumeration ([`search`]);
//! * a JSON exchange format ([`json`]) and a command line front end ([`cli`]).

pub mod calculus;
pub mod cli;
pub mod congruence;
pub mod corpus;
pub mod error;
pub mod focused;
pub mod formula;
pub mod json;
pub mod profiles;
pub mod search;

pub use calculus::Derivation;
pub use error::{Error, Path, Result};
pub use focused::{FocusedDerivation, Tag};
pub use formula::{parse_formula, parse_sequent, Formula, Sequent};
pub use profiles::LogicProfile;
pub use search::SearchBudget;
