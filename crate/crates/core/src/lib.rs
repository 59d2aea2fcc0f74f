//! Dyck paths, a statistic-swapping involution on them, and exhaustive
//! verifiers.
//!
//! The central map is [`involution::big_phi`]: an involution on Dyck words
//! of each semilength `n` that keeps the rise set and exchanges the number
//! of returns with `n - ldr`, where `ldr` is the height of the last double
//! rise. Reflecting through [`DyckWord::reverse_complement`] turns `n - ldr`
//! into the position of the first double fall.

pub mod cli;
pub mod enumerate;
pub mod factor;
pub mod involution;
pub mod perm;
pub mod render;
pub mod stats;
pub mod verify;
pub mod word;

pub use enumerate::{catalan, enumerate_dyck, DyckWords};
pub use factor::{
    marked_factorization, prime_components, Factor, FactorError, MarkedFactorization,
};
pub use involution::{
    backward_decompose, big_phi, big_phi_trace, classify_case, forward_decompose, phi, phi_inverse,
    strip_trailing_ne, BackwardDecomposition, ForwardDecomposition, InvolutionError, PhiCase,
    PhiError, TraceEntry, TraceStep,
};
pub use perm::{
    enumerate_avoiders, from_dyck, perm_stats, to_dyck, PermError, PermStats, Permutation,
};
pub use render::render_ascii;
pub use stats::{compute_stats, StatProfile};
pub use verify::{joint_distribution, JointDistribution, VerificationReport, VerifyOptions};
pub use word::{Alphabet, DyckWord, Step, WordError};
