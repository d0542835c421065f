//! The greedy regular composition.

use super::space::{validate_composition, Composition, CompositionSpace};
use super::CharacterizationError;
use crate::macaulay::generalized_boundary;

/// Builds the regular composition of `r`.
///
/// Monomials are visited in `<_π` order and each receives the largest value
/// `p` for which the already fixed mass, plus `p`, plus a pessimistic
/// estimate of every later monomial still fits into `r`. A later monomial of
/// degree `deg m + j` is estimated by `max{h, ∂^⟨ℓ,j⟩(p)}`; one of lower
/// degree by the largest value already given to that degree.
pub fn regular_composition(space: &CompositionSpace, r: u64) -> Result<Composition, CharacterizationError> {
    match space.minimum_mass() {
        Some(min) if min <= r => {}
        _ => return Err(CharacterizationError::Infeasible { r }),
    }
    let cap = space.cap();
    let len = space.len();
    let degrees: Vec<u32> = space.nodes.iter().map(|n| n.degree).collect();

    // later[idx][deg]: monomials of degree `deg` strictly after `idx`.
    let mut later = vec![vec![0u64; cap as usize + 1]; len];
    let mut running = vec![0u64; cap as usize + 1];
    for idx in (0..len).rev() {
        later[idx].clone_from(&running);
        running[degrees[idx] as usize] += 1;
    }

    let mut values = Vec::with_capacity(len);
    let mut placed = 0u64;
    // Largest value so far at each degree.
    let mut best_at = vec![0u64; cap as usize + 1];
    for idx in 0..len {
        let deg = degrees[idx];
        let p = if deg == cap {
            1
        } else {
            let ell = cap - deg;
            let fits = |p: u64| -> Option<bool> {
                let mut total = placed.checked_add(p)?;
                for j in 0..=ell {
                    let count = later[idx][(deg + j) as usize];
                    if count == 0 {
                        continue;
                    }
                    let est = space.h_at(ell - j).max(generalized_boundary(p, ell, j).ok()?);
                    total = total.checked_add(count.checked_mul(est)?)?;
                }
                for lower in 0..deg {
                    let count = later[idx][lower as usize];
                    total = total.checked_add(count.checked_mul(best_at[lower as usize])?)?;
                }
                Some(total <= r)
            };
            // The left side grows with `p`, so the admissible values form a
            // prefix of 0..=r.
            if fits(0) != Some(true) {
                return Err(CharacterizationError::Infeasible { r });
            }
            let (mut lo, mut hi) = (0u64, r);
            while lo < hi {
                let mid = lo + (hi - lo).div_ceil(2);
                if fits(mid) == Some(true) {
                    lo = mid;
                } else {
                    hi = mid - 1;
                }
            }
            lo
        };
        values.push(p);
        placed += p;
        best_at[deg as usize] = best_at[deg as usize].max(p);
    }
    let comp = Composition::from_values(space.clone(), values)?;
    validate_composition(&comp, r).map_err(CharacterizationError::ConstructionFailed)?;
    Ok(comp)
}
