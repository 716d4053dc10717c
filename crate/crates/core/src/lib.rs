//! Jordan partitions `λ(m, n, p)` of tensor products `V_m ⊗ V_n` of
//! indecomposable modules for a cyclic `p`-group.
//!
//! - [`recursion`] computes `λ(m, n, p)` through the signed sequences
//!   `s_p(m, n)`.
//! - [`standardness`] decides when `λ(m, n, p)` is standard, three ways.
//! - [`gfp_oracle`] recovers `λ(m, n, p)` from ranks over GF(p), with no
//!   reference to the recursion.
//! - [`cli`] is the command-line front end and the cross-check sweep.

pub mod cli;
pub mod error;
pub mod gfp_oracle;
pub mod prime;
pub mod recursion;
pub mod seqcore;
pub mod standardness;

pub use error::{Error, Result};
pub use prime::Prime;
pub use recursion::{jordan_partition, signed_sequence, signed_sequence_traced, RadixForm};
pub use seqcore::{JordanPartition, SignedSequence};
pub use standardness::{classify, Criterion, Verdict, Witness};
