//! Exact binomial calculus: ℓ-representations, the Macaulay boundary
//! operators ∂^ℓ and ∂^⟨ℓ,j⟩, and M-sequence testing.
//!
//! All arithmetic is carried out in `u64` with checked operations. Overflow
//! is reported as [`MacaulayError::Overflow`] and never wraps.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MacaulayError {
    #[error("integer overflow while evaluating {0}")]
    Overflow(&'static str),
    #[error("ℓ-representations are defined for p ≥ 1 and ℓ ≥ 1 (got p = {p}, ℓ = {ell})")]
    NonPositive { p: u64, ell: u32 },
    #[error("∂^⟨ℓ,j⟩ needs j ≤ ℓ (got ℓ = {ell}, j = {j})")]
    ShiftTooLarge { ell: u32, j: u32 },
}

/// Exact binomial coefficient. Returns 0 when `k < 0` or `k > n`.
pub fn binomial(n: u64, k: i64) -> Result<u64, MacaulayError> {
    if k < 0 || k as u64 > n {
        return Ok(0);
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (n - i) / (i + 1) is always an integer at this point.
        acc = acc
            .checked_mul((n - i) as u128)
            .ok_or(MacaulayError::Overflow("binomial"))?
            / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return Err(MacaulayError::Overflow("binomial"));
        }
    }
    Ok(acc as u64)
}

/// Binomial coefficient with a possibly negative upper index, using the
/// polynomial extension `C(n, k) = n (n-1) ... (n-k+1) / k!`. Only the cases
/// needed for monomial counting (`C(-1, 0) = 1`) ever arise.
pub(crate) fn binomial_signed(n: i64, k: i64) -> Result<u64, MacaulayError> {
    if k < 0 {
        return Ok(0);
    }
    if n >= 0 {
        return binomial(n as u64, k);
    }
    if k == 0 {
        Ok(1)
    } else {
        // Negative upper index with k ≥ 1 gives signed values; callers only
        // ask for counts, so these are zero.
        Ok(0)
    }
}

/// Number of monomials of degree `degree` in `vars` variables.
pub fn monomial_count(vars: usize, degree: usize) -> Result<u64, MacaulayError> {
    binomial_signed(vars as i64 + degree as i64 - 1, degree as i64)
}

/// The greedy ℓ-representation `p = C(a_ℓ, ℓ) + C(a_{ℓ-1}, ℓ-1) + ... + C(a_e, e)`
/// with `a_ℓ > a_{ℓ-1} > ... > a_e ≥ e ≥ 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LRepresentation {
    ell: u32,
    /// Pairs `(a_k, k)` with `k` running `ell, ell-1, ..., e`.
    terms: Vec<(u64, u32)>,
}

impl LRepresentation {
    pub fn ell(&self) -> u32 {
        self.ell
    }

    pub fn terms(&self) -> &[(u64, u32)] {
        &self.terms
    }

    /// Smallest lower index `e` appearing in the representation.
    pub fn last_index(&self) -> u32 {
        self.terms.last().map(|&(_, k)| k).unwrap_or(self.ell)
    }

    /// Re-evaluates the sum of binomials.
    pub fn value(&self) -> Result<u64, MacaulayError> {
        self.shifted_sum(0)
    }

    /// `Σ C(a_k - j, k - j)`; terms with `k < j` contribute nothing.
    fn shifted_sum(&self, j: u32) -> Result<u64, MacaulayError> {
        let mut total: u64 = 0;
        for &(a, k) in &self.terms {
            if k < j {
                continue;
            }
            let term = binomial(a - j as u64, (k - j) as i64)?;
            total = total
                .checked_add(term)
                .ok_or(MacaulayError::Overflow("boundary sum"))?;
        }
        Ok(total)
    }
}

impl fmt::Display for LRepresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(a, k)| format!("C({a},{k})"))
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

/// Computes the ℓ-representation of `p`.
pub fn l_representation(p: u64, ell: u32) -> Result<LRepresentation, MacaulayError> {
    if p == 0 || ell == 0 {
        return Err(MacaulayError::NonPositive { p, ell });
    }
    let mut terms = Vec::new();
    let mut rest = p;
    let mut k = ell;
    while rest > 0 {
        debug_assert!(k >= 1);
        let a = largest_top_index(rest, k)?;
        terms.push((a, k));
        rest -= binomial(a, k as i64)?;
        k -= 1;
    }
    Ok(LRepresentation { ell, terms })
}

/// Largest `a ≥ k` with `C(a, k) ≤ rest`, for `rest ≥ 1`.
fn largest_top_index(rest: u64, k: u32) -> Result<u64, MacaulayError> {
    if k == 1 {
        return Ok(rest);
    }
    let k = k as u64;
    // Exponential search then bisection on a ↦ C(a, k), which is increasing
    // for a ≥ k.
    let fits = |a: u64| -> bool { matches!(binomial(a, k as i64), Ok(v) if v <= rest) };
    let mut lo = k;
    let mut step = 1u64;
    while fits(lo + step) {
        lo += step;
        step = step.saturating_mul(2);
    }
    let mut hi = lo + step;
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if fits(mid) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(lo)
}

/// Macaulay boundary `∂^ℓ(p)`, with `∂^ℓ(0) = 0`.
pub fn boundary(p: u64, ell: u32) -> Result<u64, MacaulayError> {
    generalized_boundary(p, ell, 1)
}

/// `∂^⟨ℓ,j⟩(p) = Σ C(a_k - j, k - j)` over the ℓ-representation of `p`.
///
/// Terms whose lower index would become negative are dropped, so the value
/// is the size of the `j`-fold shadow of a compressed family of `p`
/// monomials of degree `ℓ`.
pub fn generalized_boundary(p: u64, ell: u32, j: u32) -> Result<u64, MacaulayError> {
    if ell == 0 {
        return Err(MacaulayError::NonPositive { p, ell });
    }
    if j > ell {
        return Err(MacaulayError::ShiftTooLarge { ell, j });
    }
    if p == 0 {
        return Ok(0);
    }
    l_representation(p, ell)?.shifted_sum(j)
}

/// True iff `f_0 = 1` and `∂^ℓ(f_ℓ) ≤ f_{ℓ-1}` for all `ℓ ≥ 1`.
///
/// The empty vector is not an M-sequence.
pub fn is_m_sequence(f: &[u64]) -> bool {
    m_sequence_violation(f).is_none()
}

/// First index at which `f` fails to be an M-sequence (`Some(0)` covers the
/// empty vector and `f_0 ≠ 1`).
pub fn m_sequence_violation(f: &[u64]) -> Option<usize> {
    if f.first() != Some(&1) {
        return Some(0);
    }
    for ell in 1..f.len() {
        match boundary(f[ell], ell as u32) {
            Ok(b) if b <= f[ell - 1] => {}
            _ => return Some(ell),
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(5, 2).unwrap(), 10);
        assert_eq!(binomial(3, -1).unwrap(), 0);
        assert_eq!(binomial(4, 4).unwrap(), 1);
        assert_eq!(binomial(2, 3).unwrap(), 0);
        assert_eq!(binomial(0, 0).unwrap(), 1);
        assert_eq!(binomial(62, 31).unwrap(), 465428353255261088);
    }

    #[test]
    fn binomial_overflow_is_an_error() {
        assert!(matches!(binomial(200, 100), Err(MacaulayError::Overflow(_))));
    }

    #[test]
    fn monomial_counts() {
        assert_eq!(monomial_count(0, 0).unwrap(), 1);
        assert_eq!(monomial_count(0, 2).unwrap(), 0);
        assert_eq!(monomial_count(3, 2).unwrap(), 6);
        assert_eq!(monomial_count(1, 7).unwrap(), 1);
    }

    #[test]
    fn representation_examples() {
        assert_eq!(l_representation(10, 2).unwrap().terms(), &[(5, 2)]);
        assert_eq!(l_representation(9, 2).unwrap().terms(), &[(4, 2), (3, 1)]);
        assert_eq!(l_representation(1, 3).unwrap().terms(), &[(3, 3)]);
        assert_eq!(l_representation(9, 2).unwrap().to_string(), "C(4,2) + C(3,1)");
    }

    #[test]
    fn representation_rejects_zero() {
        assert!(l_representation(0, 2).is_err());
        assert!(l_representation(3, 0).is_err());
    }

    #[test]
    fn boundary_examples() {
        assert_eq!(boundary(0, 4).unwrap(), 0);
        assert_eq!(boundary(10, 2).unwrap(), 4);
        assert_eq!(boundary(9, 2).unwrap(), 4);
        assert_eq!(boundary(4, 1).unwrap(), 1);
    }

    #[test]
    fn generalized_boundary_examples() {
        assert_eq!(generalized_boundary(10, 2, 0).unwrap(), 10);
        assert_eq!(generalized_boundary(10, 2, 1).unwrap(), 4);
        assert_eq!(generalized_boundary(10, 2, 2).unwrap(), 1);
        assert_eq!(
            generalized_boundary(10, 2, 3),
            Err(MacaulayError::ShiftTooLarge { ell: 2, j: 3 })
        );
    }

    #[test]
    fn m_sequence_examples() {
        assert!(is_m_sequence(&[1, 4, 9, 4, 1]));
        assert!(!is_m_sequence(&[2, 1]));
        assert!(!is_m_sequence(&[1, 2, 4]));
        assert!(!is_m_sequence(&[]));
        assert!(is_m_sequence(&[1]));
        assert!(is_m_sequence(&[1, 3, 0, 0]));
        assert!(!is_m_sequence(&[1, 0, 1]));
    }

    #[test]
    fn uniqueness_grid() {
        for p in 1..=10_000u64 {
            for ell in 1..=6u32 {
                let rep = l_representation(p, ell).unwrap();
                assert_eq!(rep.value().unwrap(), p);
                let terms = rep.terms();
                assert_eq!(terms[0].1, ell);
                for w in terms.windows(2) {
                    assert!(w[0].0 > w[1].0);
                    assert_eq!(w[0].1, w[1].1 + 1);
                }
                let (a_e, e) = *terms.last().unwrap();
                assert!(a_e >= e as u64 && e >= 1);
            }
        }
    }

    #[test]
    fn monotone_and_composed_on_grid() {
        for ell in 1..=6u32 {
            for j in 0..=ell {
                let mut prev = 0;
                for p in 0..=2_000u64 {
                    let v = generalized_boundary(p, ell, j).unwrap();
                    assert!(v >= prev, "∂^⟨{ell},{j}⟩ not monotone at {p}");
                    prev = v;
                    if j == 1 {
                        assert_eq!(v, boundary(p, ell).unwrap());
                    }
                }
            }
        }
    }
}
