//! Exact linear algebra over ℚ and ℚ(δ).

mod dense;
mod field;
mod sparse;

pub use dense::{rank_and_nullspace, rank_at, rref, solve_affine, ExactMatrix, RankReport};
pub use field::Field;
pub use sparse::{to_sparse, SparseEchelon, SparseRow};
