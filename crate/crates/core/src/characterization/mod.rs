//! Compositions, `ρ`, and the characterization of h̃-triangles.
//!
//! A [`CompositionSpace`] fixes the variable count, the degree cap and the
//! lower-bound sequence `h`. Compositions are weightings of its monomials;
//! `ρ` is the least weight any composition of a given mass can put on the
//! monomials divisible by the top variable. [`check_htriangle`] decides
//! whether a triangle is realized by a shifted complex and
//! [`build_witness`] produces one when it is.

mod regular;
mod search;
mod space;
mod theorem;
mod witness;

use thiserror::Error;

use crate::complexes::ComplexError;
use crate::correspondence::CorrespondenceError;
use crate::macaulay::MacaulayError;
use crate::multicomplexes::{MetacomplexViolation, Monomial};

pub use regular::regular_composition;
pub use search::{enumerate_compositions, for_each_composition, rho_search};
pub use space::{
    sigma_top, validate_composition, Composition, CompositionSpace, CompositionViolation, PiOrder, Positivity,
};
pub use theorem::{
    check_htriangle, check_htriangle_with, necessity_compositions, CheckOptions, Condition, NecessityRecord,
    Verdict,
};
pub use witness::{build_witness, revlex_cmp, revlex_first, witness_metacomplex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CharacterizationError {
    #[error("invalid composition space: {0}")]
    InvalidSpace(String),
    #[error("expected {expected} values, found {found}")]
    WrongLength { expected: usize, found: usize },
    #[error("monomial {0} is not in the space")]
    UnknownMonomial(Monomial),
    #[error("no value assigned to {0}")]
    MissingAssignment(Monomial),
    #[error("no composition of {r} exists")]
    Infeasible { r: u64 },
    #[error("the regular construction produced an invalid composition: {0}")]
    ConstructionFailed(CompositionViolation),
    #[error("malformed triangle: {0}")]
    MalformedTriangle(String),
    #[error("triangle rejected: {0}")]
    Rejected(Verdict),
    #[error("witness is not a metacomplex: {0}")]
    Witness(#[from] MetacomplexViolation),
    #[error("witness check failed: {0}")]
    WitnessMismatch(String),
    #[error(transparent)]
    Correspondence(#[from] CorrespondenceError),
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error(transparent)]
    Arithmetic(#[from] MacaulayError),
}

/// How `ρ` is evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum RhoMethod {
    /// `Σ_v` of the regular composition. This is an upper bound for `ρ`
    /// and is not always attained; the checker falls back to the search
    /// whenever the bound alone would reject.
    #[default]
    Regular,
    /// Exhaustive branch-and-bound minimum.
    Search,
}

/// `ρ(r)` on `space`; `Ok(None)` when no composition of `r` exists.
pub fn rho(space: &CompositionSpace, r: u64, method: RhoMethod) -> Result<Option<u64>, CharacterizationError> {
    match method {
        RhoMethod::Search => Ok(rho_search(space, r).map(|(v, _)| v)),
        RhoMethod::Regular => match regular_composition(space, r) {
            Ok(c) => Ok(Some(sigma_top(&c))),
            Err(CharacterizationError::Infeasible { .. }) => Ok(None),
            Err(e) => Err(e),
        },
    }
}

/// A composition of `r` whose top mass is at most `bound`, if one exists.
///
/// With [`RhoMethod::Regular`] the regular composition is tried first and
/// the exhaustive search settles the cases where it overshoots.
pub(crate) fn composition_within(
    space: &CompositionSpace,
    r: u64,
    bound: u64,
    method: RhoMethod,
) -> Result<Option<Composition>, CharacterizationError> {
    if method == RhoMethod::Regular {
        match regular_composition(space, r) {
            Ok(c) if sigma_top(&c) <= bound => return Ok(Some(c)),
            Ok(_) | Err(CharacterizationError::Infeasible { .. }) => {}
            Err(e) => return Err(e),
        }
    }
    Ok(rho_search(space, r).filter(|(v, _)| *v <= bound).map(|(_, c)| c))
}
