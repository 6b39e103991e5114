//! Alternating sign matrices, their Bruhat lattice, and the parabolic
//! sublattices `ASM^I(n)` that complete the parabolic quotients `S_n^I`.
//!
//! Everything is exact and 1-based at the API boundary. Order and lattice
//! operations are computed on rank (corner-sum) matrices.

pub mod asm;
pub mod bruhat;
pub mod completion;
pub mod count;
pub mod enumerate;
pub mod error;
pub mod hasse;
pub mod mask;
pub mod parabolic;
pub mod permutation;
pub mod pi;
pub mod poly;
pub mod rank;
pub mod six_vertex;
pub mod triangle;
pub mod variety;
pub mod verify;

pub use asm::Asm;
pub use completion::{dm_completion, poset_isomorphism, FinitePoset};
pub use enumerate::{asm_count_formula, enumerate_asms};
pub use error::{Error, Line, Result};
pub use mask::ParabolicMask;
pub use parabolic::enumerate_asm_i;
pub use permutation::Permutation;
pub use poly::MultiPolynomial;
pub use rank::RankMatrix;
pub use six_vertex::SixVertexState;
pub use triangle::MonotoneTriangle;
pub use variety::RationalMatrix;
