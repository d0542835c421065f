//! Exact combinatorics for h-triangles of sequentially Cohen-Macaulay
//! simplicial complexes.
//!
//! The crate decides whether a triangular integer array is the h̃-triangle of
//! a sequentially Cohen-Macaulay complex, and builds a shifted complex that
//! realizes it when it is. The same machinery characterizes Betti tables of
//! componentwise linear ideals through their square-free strongly stable
//! representatives.
//!
//! Modules, bottom-up:
//!
//! * [`macaulay`]: binomial ℓ-representations, Macaulay boundary operators,
//!   M-sequences.
//! * [`complexes`]: simplicial complexes, skeleta, shiftedness, h-vectors,
//!   h̃- and h-triangles, Alexander duality.
//! * [`multicomplexes`]: monomials, multicomplexes, cones, metacomplexes.
//! * [`correspondence`]: lattice paths and the bijection between shifted
//!   multicomplexes and pure shifted complexes.
//! * [`characterization`]: compositions, ρ, the regular composition, the
//!   triangle checker and the witness constructor.
//! * [`betti`]: generator arrays and Eliahou-Kervaire Betti tables.
//! * [`harness`]: exhaustive enumeration, verification suites and the
//!   line-oriented file formats used by the CLI.

pub mod betti;
pub mod characterization;
pub mod complexes;
pub mod correspondence;
pub mod harness;
pub mod macaulay;
pub mod multicomplexes;

pub use betti::{BettiTable, GeneratorArray, MonomialIdeal};
pub use characterization::{Composition, CompositionSpace, Positivity, Verdict};
pub use complexes::{Face, SimplicialComplex, Triangle};
pub use correspondence::LatticePath;
pub use multicomplexes::{Metacomplex, Monomial, Multicomplex};
