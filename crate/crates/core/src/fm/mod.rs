//! Strict Fourier–Motzkin elimination over stringent ordered hyperfields.

pub mod eliminate;
pub mod farkas;
pub mod solve;
pub mod system;

pub use eliminate::{
    eliminate_all, eliminate_k, eliminate_last_var, feasible_strict, normalize_last_row, split_balanced_column, ColClass, EliminationStep,
    Normalized, Origin, Trace,
};
pub use farkas::{farkas, farkas_with, reconstruct_kernel, weak_duality_holds, FarkasCertificate, MAX_PERMUTED_ROWS};
pub use solve::{back_substitute, solve_last};
pub use system::{realisable_add, realisable_scale, RealisableMatrix, RealisableSet};
