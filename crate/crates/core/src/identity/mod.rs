//! Formal multilinear identities, a catalog of named ones, and an exact checker.

mod catalog;
mod check;
mod expr;

pub use catalog::{
    catalog, compatibility, delta_novikov, delta_pre_lie, gd_tp_combination_check, Family, NAMES,
};
pub use check::{
    admissible_deltas, check, check_family, evaluate, evaluate_vectors, Admissible, CheckReport,
    FamilyReport, Verdict, Witness,
};
pub use expr::{var, Expr, FormalIdentity, Tree};
