//! Finite permutation groups and the classification of finite CN-groups.
//!
//! A CN-group is a group in which the centralizer of every nontrivial
//! element is nilpotent. For such a group with Fitting subgroup `F`, the
//! classifier decides which of five structural alternatives the quotient
//! `G/F` satisfies and records the accompanying conditions on `F`.

pub mod action_lab;
pub mod app;
pub mod bounds;
pub mod catalog;
pub mod chain;
pub mod classifier;
pub mod constructors;
pub mod error;
pub mod group;
pub mod hom;
pub mod instances;
pub mod modular;
pub mod named;
pub mod outcome;
pub mod perm;
pub mod recognition;
pub mod spec;
pub mod structure;

pub use bounds::Bounds;
pub use error::{GroupError, Result};
pub use group::{ConjugacyClass, PermGroup};
pub use perm::Permutation;
