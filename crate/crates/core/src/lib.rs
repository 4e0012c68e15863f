//! Finite semigroups through the kernel of their right regular representation.
//!
//! The kernel `θ_S` relates `a` and `b` when `sa = sb` for every `s`, that is,
//! when columns `a` and `b` of the Cayley table agree. This crate computes
//! `θ_S`, its index, and the probability that two random elements are
//! related, and it builds and recognizes the four families of medial
//! semigroups whose kernel has exactly two classes. An exhaustive enumerator
//! of small semigroups serves as an independent check on all of it.
//!
//! ```
//! use semitheta::{classify, fixtures, representation};
//!
//! let s = fixtures::right_zero_extension();
//! let analysis = representation::analyze(&s);
//! assert_eq!(analysis.index, 2);
//! assert_eq!(analysis.probability.to_string(), "1/2");
//!
//! let report = classify::classify_medial_index2(&s).unwrap();
//! assert_eq!(report.family.number(), 4);
//! assert!(report.verified);
//! ```

pub mod classify;
pub mod cli;
pub mod congruence;
pub mod constructions;
pub mod enumerate;
pub mod fixtures;
pub mod iso;
pub mod report;
pub mod representation;
pub mod retract;
pub mod semigroup;
pub mod text;

pub use classify::{classify_medial_index2, ClassificationReport, ClassifyError, Rejection};
pub use congruence::Congruence;
pub use constructions::{ConstructionError, ConstructionParams, Family};
pub use iso::are_isomorphic;
pub use representation::{analyze, theta, Probability, ThetaAnalysis};
pub use retract::{RetractSemigroup, RetractStructure};
pub use semigroup::{ElementMap, ElementSubset, FiniteSemigroup, SemigroupError, TwoElementType};
