//! Exhaustive branch-and-bound over compositions.
//!
//! Values are assigned in `<_π` order. Every axiom relates a monomial to
//! `<_π`-earlier ones only through lower bounds, so the cheapest completion
//! of a partial assignment is obtained by propagating those bounds, and both
//! its mass and its top-variable mass are monotone in each assigned value.
//! Top-degree monomials are pinned to 1.

use super::space::{Composition, CompositionSpace};

struct Search<'a> {
    space: &'a CompositionSpace,
    r: u64,
    /// Indices of monomials below the top degree, in `<_π` order.
    free: Vec<usize>,
    values: Vec<u64>,
    fixed_mass: u64,
    fixed_top: u64,
}

impl<'a> Search<'a> {
    fn new(space: &'a CompositionSpace, r: u64) -> Self {
        let cap = space.cap();
        let free: Vec<usize> = (0..space.len()).filter(|&i| space.nodes[i].degree < cap).collect();
        let values: Vec<u64> = space.nodes.iter().map(|n| u64::from(n.degree == cap)).collect();
        let fixed_mass = space.nodes.iter().filter(|n| n.degree == cap).count() as u64;
        let fixed_top = space.nodes.iter().filter(|n| n.degree == cap && n.top).count() as u64;
        Search { space, r, free, values, fixed_mass, fixed_top }
    }

    /// Least mass and least top mass over free positions `from..`, given the
    /// current values at earlier positions. `None` on arithmetic overflow.
    fn cheapest_rest(&self, from: usize, scratch: &mut Vec<u64>) -> Option<(u64, u64)> {
        scratch.clear();
        scratch.extend_from_slice(&self.values);
        let mut mass = 0u64;
        let mut top = 0u64;
        for &idx in &self.free[from..] {
            let v = self.space.lower_bound(idx, scratch)?;
            scratch[idx] = v;
            mass = mass.checked_add(v)?;
            if self.space.nodes[idx].top {
                top = top.checked_add(v)?;
            }
        }
        Some((mass, top))
    }

    /// Depth-first search. `bound` returns the current objective cutoff:
    /// branches whose least top mass reaches it are skipped.
    fn run<F, B>(&mut self, pos: usize, mass: u64, top: u64, scratch: &mut Vec<u64>, bound: &B, visit: &mut F)
    where
        F: FnMut(&[u64], u64),
        B: Fn() -> u64,
    {
        if pos == self.free.len() {
            if mass + self.fixed_mass == self.r {
                visit(&self.values, top + self.fixed_top);
            }
            return;
        }
        let idx = self.free[pos];
        let Some(lb) = self.space.lower_bound(idx, &self.values) else {
            return;
        };
        let is_top = self.space.nodes[idx].top;
        let budget = match self.r.checked_sub(mass + self.fixed_mass) {
            Some(b) => b,
            None => return,
        };
        if pos + 1 == self.free.len() {
            // The last free monomial is u_v^{cap-1}; it absorbs whatever is left.
            if budget >= lb {
                self.values[idx] = budget;
                let t = top + if is_top { budget } else { 0 };
                if t + self.fixed_top < bound() {
                    self.run(pos + 1, mass + budget, t, scratch, bound, visit);
                }
            }
            return;
        }
        for p in lb..=budget {
            self.values[idx] = p;
            let Some((rest_mass, rest_top)) = self.cheapest_rest(pos + 1, scratch) else {
                break;
            };
            if p + rest_mass > budget {
                break;
            }
            let t = top + if is_top { p } else { 0 };
            if t + rest_top + self.fixed_top >= bound() {
                break;
            }
            self.run(pos + 1, mass + p, t, scratch, bound, visit);
        }
    }
}

/// Calls `visit` on every valid composition of `r`, in lexicographic order
/// of `<_π`-ordered value vectors.
pub fn for_each_composition<F>(space: &CompositionSpace, r: u64, mut visit: F)
where
    F: FnMut(Composition),
{
    let mut search = Search::new(space, r);
    let mut scratch = Vec::new();
    search.run(0, 0, 0, &mut scratch, &|| u64::MAX, &mut |values, _| {
        visit(Composition::from_values(space.clone(), values.to_vec()).expect("length matches"));
    });
}

/// All valid compositions of `r`.
pub fn enumerate_compositions(space: &CompositionSpace, r: u64) -> Vec<Composition> {
    let mut out = Vec::new();
    for_each_composition(space, r, |c| out.push(c));
    out
}

/// The least `Σ_v` over all compositions of `r` together with the first
/// composition attaining it, or `None` when no composition exists.
pub fn rho_search(space: &CompositionSpace, r: u64) -> Option<(u64, Composition)> {
    use std::cell::Cell;
    let best = Cell::new(u64::MAX);
    let mut best_values: Option<Vec<u64>> = None;
    let mut search = Search::new(space, r);
    let mut scratch = Vec::new();
    search.run(0, 0, 0, &mut scratch, &|| best.get(), &mut |values, top| {
        if top < best.get() {
            best.set(top);
            best_values = Some(values.to_vec());
        }
    });
    best_values.map(|v| (best.get(), Composition::from_values(space.clone(), v).expect("length matches")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::characterization::space::{sigma_top, validate_composition, Positivity};
    use crate::multicomplexes::Monomial;

    /// Plain enumeration of every value vector with entries in `0..=r`,
    /// filtered by the validator.
    fn brute_force(space: &CompositionSpace, r: u64) -> Vec<Vec<u64>> {
        let len = space.len();
        let mut out = Vec::new();
        let mut v = vec![0u64; len];
        loop {
            let c = Composition::from_values(space.clone(), v.clone()).unwrap();
            if validate_composition(&c, r).is_ok() {
                out.push(v.clone());
            }
            let mut k = len;
            loop {
                if k == 0 {
                    return out;
                }
                k -= 1;
                if v[k] < r {
                    v[k] += 1;
                    break;
                }
                v[k] = 0;
            }
        }
    }

    #[test]
    fn search_matches_brute_force_on_small_spaces() {
        for (vars, cap, h, rs) in [
            (1usize, 2u32, vec![1u64, 2, 1], 3..=8u64),
            (2, 1, vec![1, 2], 2..=7),
            (1, 3, vec![1, 1, 1, 1], 3..=7),
            (2, 2, vec![1, 1, 0], 3..=6),
        ] {
            for pos in [Positivity::AllowZero, Positivity::Strict] {
                let space = CompositionSpace::new(vars, cap, h.clone()).unwrap().with_positivity(pos);
                for r in rs.clone() {
                    let fast: Vec<Vec<u64>> =
                        enumerate_compositions(&space, r).iter().map(|c| c.values().to_vec()).collect();
                    let slow = brute_force(&space, r);
                    assert_eq!(fast, slow, "space {space:?}, r = {r}");
                    let best = slow
                        .iter()
                        .map(|v| sigma_top(&Composition::from_values(space.clone(), v.clone()).unwrap()))
                        .min();
                    assert_eq!(rho_search(&space, r).map(|(v, _)| v), best);
                }
            }
        }
    }

    #[test]
    fn worked_example_enumeration() {
        let space = CompositionSpace::new(2, 2, vec![1, 4, 9, 4, 1]).unwrap();
        let all = enumerate_compositions(&space, 22);
        let triples: Vec<(u64, u64, u64)> = all.iter().map(|c| (c.values()[0], c.values()[1], c.values()[3])).collect();
        for t in [(10, 4, 5), (9, 5, 5), (9, 4, 6)] {
            assert!(triples.contains(&t), "missing {t:?} in {triples:?}");
        }
        let (rho, witness) = rho_search(&space, 22).unwrap();
        assert_eq!(rho, 7);
        assert_eq!(validate_composition(&witness, 22), Ok(()));
    }

    #[test]
    fn tiny_enumerations() {
        let space = CompositionSpace::new(1, 1, vec![1, 0]).unwrap();
        let all = enumerate_compositions(&space, 2);
        assert_eq!(all.len(), 1);
        assert_eq!(all[0].get(&Monomial::one(1)), Some(1));

        let strict = CompositionSpace::new(2, 2, vec![1, 2, 0]).unwrap().with_positivity(Positivity::Strict);
        assert!(enumerate_compositions(&strict, 7).is_empty());
        assert!(rho_search(&strict, 7).is_none());
        let relaxed = CompositionSpace::new(2, 2, vec![1, 2, 0]).unwrap();
        assert_eq!(rho_search(&relaxed, 7).map(|(v, _)| v), Some(4));
    }
}
