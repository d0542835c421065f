//! The three conditions on an h̃-triangle, and their replay on shifted
//! complexes.

use std::collections::HashMap;
use std::fmt;

use super::space::{Composition, CompositionSpace, Positivity};
use super::{composition_within, CharacterizationError, RhoMethod};
use crate::complexes::{htriangle_tilde, SimplicialComplex, Triangle};
use crate::correspondence::psi_bar;
use crate::macaulay::m_sequence_violation;
use crate::multicomplexes::Monomial;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct CheckOptions {
    pub positivity: Positivity,
    pub method: RhoMethod,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Condition {
    /// Every row is an M-sequence.
    A,
    /// `h̃_{i,j} ≥ Σ_{ℓ≤j} h̃_{i+1,ℓ}`.
    B,
    /// `ρ(h̃_{i,j}) ≤ h̃_{i,j-1}` over `d - i` variables with cap `j`.
    C,
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Condition::A => "a",
            Condition::B => "b",
            Condition::C => "c",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Accept,
    Reject { condition: Condition, i: usize, j: usize },
}

impl Verdict {
    pub fn is_accept(&self) -> bool {
        matches!(self, Verdict::Accept)
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Accept => f.write_str("ACCEPT"),
            Verdict::Reject { condition, i, j } => write!(f, "REJECT condition={condition} at (i={i},j={j})"),
        }
    }
}

/// Checks with zero values admitted and `ρ` from the regular construction.
pub fn check_htriangle(t: &Triangle) -> Result<Verdict, CharacterizationError> {
    check_htriangle_with(t, &CheckOptions::default())
}

/// Conditions are tried in the order (a), (b), (c); within a condition,
/// cells are visited row by row. The first failure is reported.
pub fn check_htriangle_with(t: &Triangle, options: &CheckOptions) -> Result<Verdict, CharacterizationError> {
    if t.row(0) != [1] {
        return Err(CharacterizationError::MalformedTriangle(format!("row 0 must be (1), found {:?}", t.row(0))));
    }
    if let Some((i, j, v)) = t.entries().find(|&(_, _, v)| v < 0) {
        return Err(CharacterizationError::MalformedTriangle(format!("negative entry {v} at (i={i},j={j})")));
    }
    let d = t.d();
    let at = |i: usize, j: usize| t.get(i, j) as u64;
    let rows: Vec<Vec<u64>> = (0..=d).map(|i| t.row(i).iter().map(|&v| v as u64).collect()).collect();

    for (i, row) in rows.iter().enumerate() {
        if let Some(j) = m_sequence_violation(row) {
            return Ok(Verdict::Reject { condition: Condition::A, i, j });
        }
    }
    for i in 0..d {
        let mut below = 0u64;
        for j in 0..=i {
            below += at(i + 1, j);
            if at(i, j) < below {
                return Ok(Verdict::Reject { condition: Condition::B, i, j });
            }
        }
    }
    for i in 1..d {
        for j in 1..=i {
            let space = CompositionSpace::new(d - i, j as u32, rows[d].clone())?.with_positivity(options.positivity);
            if composition_within(&space, at(i, j), at(i, j - 1), options.method)?.is_none() {
                return Ok(Verdict::Reject { condition: Condition::C, i, j });
            }
        }
    }
    Ok(Verdict::Accept)
}

/// The composition `𝒟_{i,j}` read off a shifted complex, with the bound
/// `h̃_{i,j-1}` its top mass must respect.
#[derive(Debug, Clone)]
pub struct NecessityRecord {
    pub i: usize,
    pub j: usize,
    /// `h̃_{i,j}`, the mass of the composition.
    pub mass: u64,
    /// `h̃_{i,j-1}`.
    pub bound: u64,
    pub composition: Composition,
}

/// For every `1 ≤ j ≤ i ≤ d - 1`, partitions the degree-`j` monomials of
/// level `i` of `Ψ̄(Δ)` by their part on the `d - i` highest variables and
/// records the class sizes as a composition.
pub fn necessity_compositions(c: &SimplicialComplex) -> Result<Vec<NecessityRecord>, CharacterizationError> {
    let mc = psi_bar(c)?;
    let t = htriangle_tilde(c)?;
    let d = c.d();
    let n = c.n() as usize;
    let free = n - d;
    let h: Vec<u64> = t.row(d).iter().map(|&v| v as u64).collect();
    let mut out = Vec::new();
    for i in 1..d {
        for j in 1..=i {
            let space = CompositionSpace::new(d - i, j as u32, h.clone())?;
            let mut counts: HashMap<Monomial, u64> = space.monomials().iter().map(|m| (m.clone(), 0)).collect();
            for p in mc.level(i).of_degree(j as u32) {
                let key = Monomial::new(p.exps()[free..].to_vec());
                *counts.get_mut(&key).ok_or(CharacterizationError::UnknownMonomial(key.clone()))? += 1;
            }
            let composition = Composition::from_assignments(space, counts)?;
            out.push(NecessityRecord {
                i,
                j,
                mass: t.get(i, j) as u64,
                bound: t.get(i, j - 1) as u64,
                composition,
            });
        }
    }
    Ok(out)
}
