//! Exact computational group theory for conjugacy classes that are
//! differences of normal subgroups.

pub mod arith;
mod chain;
pub mod chartab;
pub mod classes;
pub mod classify;
pub mod construct;
pub mod cyclo;
pub mod error;
pub mod group;
mod modp;
pub mod normal;
pub mod perm;
pub mod pgrp;
pub mod subgroup;

pub use chartab::{character_table, Character, CharacterTable};
pub use classes::{class_mult_coefficients, ConjClass};
pub use classify::{CensusReport, ClassificationReport, TheoremCheckOutcome, Verdict, Verification};
pub use construct::{make, Complement, FamilySpec};
pub use cyclo::{Cyclotomic, Rational};
pub use error::{Error, Result};
pub use group::{group_from_generators, Elem, Limits, PermGroup};
pub use normal::{Fusion, Quotient};
pub use perm::{Permutation, Point};
pub use subgroup::Subgroup;
