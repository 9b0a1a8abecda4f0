//! Exact-arithmetic kernels for graded matrix factorizations and the
//! lattice-level bookkeeping that surrounds them: Gepner central charges,
//! Chern characters and Riemann-Roch pairings, numerical Grothendieck
//! groups with autoequivalence actions, Clifford-algebra polynomial matrix
//! identities, and twisted-K3 Mukai-vector arithmetic.
//!
//! Everything is computed over `Q` or over cyclotomic fields `Q(zeta_d)`
//! in exact representation; floating point appears only in optional
//! display embeddings and never in a decision.

pub mod charge;
pub mod checks;
pub mod clifford;
pub mod exact;
pub mod interring;
pub mod lattice;
pub mod linalg;
pub mod mf;
pub mod milnor;
pub mod mukai;
pub mod poly;

pub use exact::{Cyclotomic, Rat};
