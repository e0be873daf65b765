//! Exact computation of cohomology jump loci and finiteness invariants:
//! characteristic and resonance varieties, exponential tangent cones,
//! Dwyer-Fried Omega-sets, and BNSR Sigma-invariant bounds for toric
//! complexes, finitely presented groups, and hyperplane arrangements.

pub mod arrangements;
pub mod error;
pub mod exactlin;
pub mod fox;
pub mod golden;
pub mod io;
pub mod raag;
pub mod report;
pub mod resonance;
pub mod simplicial;
pub mod varieties;

pub use error::Error;
