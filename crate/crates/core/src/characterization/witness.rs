//! Realizing an accepted triangle by a shifted complex.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use super::space::{Composition, CompositionSpace};
use super::theorem::{check_htriangle_with, CheckOptions, Verdict};
use super::{composition_within, CharacterizationError};
use crate::complexes::{htriangle_tilde, is_shifted, SimplicialComplex, Triangle};
use crate::correspondence::phi_bar;
use crate::macaulay::monomial_count;
use crate::multicomplexes::{is_shifted_multicomplex, monomials_of_degree, Metacomplex, Monomial, Multicomplex};

/// Reverse lexicographic order on monomials of equal degree: at the lowest
/// variable where the exponents differ, the smaller exponent comes first.
///
/// Initial segments are compressed and closed under up-shifts, so
/// `w_r^j` is always first.
pub fn revlex_cmp(a: &Monomial, b: &Monomial) -> Ordering {
    a.exps().cmp(b.exps())
}

/// The first `count` monomials of `degree` on `vars` variables in reverse
/// lexicographic order.
pub fn revlex_first(vars: usize, degree: u32, count: u64) -> Result<Vec<Monomial>, CharacterizationError> {
    let mut all = monomials_of_degree(vars, degree);
    if count > all.len() as u64 {
        return Err(CharacterizationError::WitnessMismatch(format!(
            "only {} monomials of degree {degree} on {vars} variables, {count} requested",
            all.len()
        )));
    }
    all.sort_by(revlex_cmp);
    all.truncate(count as usize);
    Ok(all)
}

fn entry(t: &Triangle, i: usize, j: usize) -> u64 {
    t.get(i, j).max(0) as u64
}

/// Builds the metacomplex whose f-triangle is `t`.
///
/// Level `d` is the compressed multicomplex with f-vector `h̃^[d]` on the
/// `n - d` free variables. Level `i < d` is assembled from the regular
/// compositions `𝒟_{i,j}` (or a minimal one from the search when the
/// regular one overshoots `h̃_{i,j-1}`): a monomial `m` on the `d - i` extra variables is
/// multiplied by the first `q^m` free monomials of complementary degree.
/// The number of free variables is the least one for which every prefix
/// exists.
pub fn witness_metacomplex(t: &Triangle, options: &CheckOptions) -> Result<Metacomplex, CharacterizationError> {
    let verdict = check_htriangle_with(t, options)?;
    if verdict != Verdict::Accept {
        return Err(CharacterizationError::Rejected(verdict));
    }
    let d = t.d();
    let h: Vec<u64> = (0..=d).map(|j| entry(t, d, j)).collect();

    // compositions[i][j - 1] = 𝒟_{i,j}
    let mut compositions: Vec<Vec<Composition>> = Vec::with_capacity(d);
    for i in 0..d {
        let mut row = Vec::with_capacity(i);
        for j in 1..=i {
            let space =
                CompositionSpace::new(d - i, j as u32, h.clone())?.with_positivity(options.positivity);
            let within = composition_within(&space, entry(t, i, j), entry(t, i, j - 1), options.method)?;
            row.push(within.ok_or(CharacterizationError::Rejected(Verdict::Reject {
                condition: super::Condition::C,
                i,
                j,
            }))?);
        }
        compositions.push(row);
    }

    // (degree, count) requirements on the free variables.
    let mut needs: Vec<(u32, u64)> = (0..=d).map(|l| (l as u32, h[l])).collect();
    for (i, row) in compositions.iter().enumerate() {
        for (jm1, comp) in row.iter().enumerate() {
            let j = jm1 as u32 + 1;
            debug_assert!(j as usize <= i);
            for (m, q) in comp.iter() {
                needs.push((j - m.degree(), q));
            }
        }
    }
    let mut free = 0usize;
    loop {
        let mut fits = true;
        for &(deg, count) in &needs {
            if monomial_count(free, deg as usize)? < count {
                fits = false;
                break;
            }
        }
        if fits {
            break;
        }
        free += 1;
        if free + d > 64 {
            return Err(CharacterizationError::WitnessMismatch("witness needs more than 64 vertices".into()));
        }
    }
    let n = free + d;

    let mut levels: Vec<Multicomplex> = Vec::with_capacity(d + 1);
    for (i, row) in compositions.iter().enumerate() {
        let vars = n - i;
        let mut members = BTreeSet::new();
        members.insert(Monomial::one(vars));
        for (jm1, comp) in row.iter().enumerate() {
            let j = jm1 as u32 + 1;
            for (m, q) in comp.iter() {
                for p in revlex_first(free, j - m.degree(), q)? {
                    let mut exps = p.exps().to_vec();
                    exps.extend_from_slice(m.exps());
                    members.insert(Monomial::new(exps));
                }
            }
        }
        levels.push(Multicomplex::from_members(vars, members).map_err(|e| {
            CharacterizationError::WitnessMismatch(format!("level {i} is not a multicomplex: {e}"))
        })?);
    }
    let mut top = BTreeSet::new();
    for (l, &count) in h.iter().enumerate() {
        top.extend(revlex_first(free, l as u32, count)?);
    }
    levels.push(Multicomplex::from_members(free, top).map_err(|e| {
        CharacterizationError::WitnessMismatch(format!("level {d} is not a multicomplex: {e}"))
    })?);

    let mc = Metacomplex::new(n as u32, levels);
    mc.validate()?;
    if let Some(i) = mc.levels().iter().position(|l| !is_shifted_multicomplex(l)) {
        return Err(CharacterizationError::WitnessMismatch(format!("level {i} is not shifted")));
    }
    Ok(mc)
}

/// A shifted complex with h̃-triangle `t`, or the reason none was built.
///
/// Vertices that no face uses are removed from the bottom of the ground
/// set. The result is re-checked against `t` before it is returned.
pub fn build_witness(t: &Triangle, options: &CheckOptions) -> Result<SimplicialComplex, CharacterizationError> {
    let mc = witness_metacomplex(t, options)?;
    let full = phi_bar(&mc)?;
    let complex = full.drop_low_vertices(full.unused_low_vertices());
    if !is_shifted(&complex) {
        return Err(CharacterizationError::WitnessMismatch("result is not shifted".into()));
    }
    let got = htriangle_tilde(&complex)?;
    if &got != t {
        return Err(CharacterizationError::WitnessMismatch(format!("h̃-triangle {got:?} differs from {t:?}")));
    }
    Ok(complex)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tri(rows: &[&[i64]]) -> Triangle {
        Triangle::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn revlex_segments() {
        let names: Vec<String> = revlex_first(3, 2, 6).unwrap().iter().map(|m| m.render('w')).collect();
        assert_eq!(names, ["w3^2", "w2*w3", "w2^2", "w1*w3", "w1*w2", "w1^2"]);
        assert!(revlex_first(2, 1, 3).is_err());
    }

    #[test]
    fn revlex_segments_are_compressed_and_shifted() {
        // Every initial segment of degree-3 monomials on 3 variables has a
        // shadow of exactly ∂³(size) monomials.
        let all = revlex_first(3, 3, 10).unwrap();
        for k in 1..=all.len() {
            let seg = &all[..k];
            let shadow: BTreeSet<Monomial> = seg.iter().flat_map(|m| m.lower_neighbours().collect::<Vec<_>>()).collect();
            assert_eq!(shadow.len() as u64, crate::macaulay::boundary(k as u64, 3).unwrap(), "k = {k}");
            let set: BTreeSet<&Monomial> = seg.iter().collect();
            for m in seg {
                for r in 1..=3 {
                    for s in (r + 1)..=3 {
                        if let Some(up) = m.exchange(r, s) {
                            assert!(set.contains(&up));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn spec_witnesses() {
        let opts = CheckOptions::default();
        let c = build_witness(&tri(&[&[1]]), &opts).unwrap();
        assert_eq!(c.facets().len(), 1);
        assert!(c.facets()[0].is_empty());

        let t = tri(&[&[1], &[1, 2], &[1, 0, 0]]);
        let c = build_witness(&t, &opts).unwrap();
        let mut sizes: Vec<usize> = c.facets().iter().map(|f| f.len()).collect();
        sizes.sort();
        assert_eq!(sizes, [1, 2]);

        let t = tri(&[&[1], &[1, 2], &[1, 1, 0]]);
        let c = build_witness(&t, &opts).unwrap();
        assert!(c.is_pure());
        assert_eq!(c.facets().len(), 2);
    }

    #[test]
    fn rejected_triangle_has_no_witness() {
        let t = tri(&[&[1], &[1, 5], &[1, 4, 7], &[1, 3, 3, 4], &[1, 2, 0, 0, 0]]);
        assert!(matches!(build_witness(&t, &CheckOptions::default()), Err(CharacterizationError::Rejected(_))));
    }
}
