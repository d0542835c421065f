//! Exhaustive enumeration of shifted complexes and shifted multicomplexes.
//!
//! Both are down-sets of a finite poset whose covering relations are the
//! elementary moves (add a vertex or variable, shift an index down). The
//! enumerator fixes a linear extension in which every element comes after
//! its upper covers and decides membership element by element: an element
//! whose upper cover is present is forced in, otherwise both choices are
//! explored.

use crate::complexes::{Face, SimplicialComplex};
use crate::multicomplexes::{monomials_up_to, Monomial, Multicomplex};

use super::HarnessError;

/// Default largest ground set the census accepts.
pub const DEFAULT_MAX_N: u32 = 7;

/// The census bound: `SCMH_MAX_N` if set to a number, else
/// [`DEFAULT_MAX_N`]. Never more than 16.
pub fn census_bound() -> u32 {
    std::env::var("SCMH_MAX_N")
        .ok()
        .and_then(|v| v.trim().parse::<u32>().ok())
        .unwrap_or(DEFAULT_MAX_N)
        .min(16)
}

/// A poset presented by a linear extension (upper covers first) and, for
/// each element, the indices of its upper covers.
struct DownSets {
    covers: Vec<Vec<usize>>,
}

/// Choice points above this depth are explored in parallel.
const SPLIT_DEPTH: usize = 10;

impl DownSets {
    fn all(&self) -> Vec<Vec<bool>> {
        let mut state = vec![false; self.covers.len()];
        self.walk(0, 0, &mut state)
    }

    fn walk(&self, idx: usize, choices: usize, state: &mut Vec<bool>) -> Vec<Vec<bool>> {
        // Entries at and after `idx` are undecided; every one is written
        // before it is read.
        let mut idx = idx;
        while idx < state.len() && self.covers[idx].iter().any(|&c| state[c]) {
            state[idx] = true;
            idx += 1;
        }
        if idx == state.len() {
            return vec![state.clone()];
        }
        state[idx] = false;
        let mut with = state.clone();
        with[idx] = true;
        let (mut a, b) = if choices < SPLIT_DEPTH {
            rayon::join(|| self.walk(idx + 1, choices + 1, state), || self.walk(idx + 1, choices + 1, &mut with))
        } else {
            (self.walk(idx + 1, choices + 1, state), self.walk(idx + 1, choices + 1, &mut with))
        };
        a.extend(b);
        a
    }
}

fn run_in_pool<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T, HarnessError> {
    match jobs {
        None => Ok(f()),
        Some(k) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(k.max(1))
                .build()
                .map_err(|e| HarnessError::Bounds(format!("cannot start {k} workers: {e}")))?;
            Ok(pool.install(f))
        }
    }
}

/// Every shifted complex on `[n]` with faces of at most `dmax` vertices,
/// the void complex excluded, in a fixed order.
pub fn enumerate_shifted(n: u32, dmax: u32) -> Result<Vec<SimplicialComplex>, HarnessError> {
    enumerate_shifted_with(n, dmax, None)
}

/// As [`enumerate_shifted`], on `jobs` worker threads when given.
pub fn enumerate_shifted_with(n: u32, dmax: u32, jobs: Option<usize>) -> Result<Vec<SimplicialComplex>, HarnessError> {
    let bound = census_bound();
    if n > bound {
        return Err(HarnessError::Bounds(format!("n = {n} exceeds the census bound {bound} (set SCMH_MAX_N)")));
    }
    if dmax > n {
        return Err(HarnessError::Bounds(format!("dmax = {dmax} exceeds n = {n}")));
    }
    let mut faces: Vec<Face> = (0u64..(1u64 << n))
        .map(Face::from_bits)
        .filter(|f| f.len() <= dmax as usize)
        .collect();
    let weight = |f: &Face| -> u32 { f.vertices().sum() };
    faces.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| weight(a).cmp(&weight(b))).then_with(|| a.cmp(b)));
    let pos: std::collections::HashMap<Face, usize> = faces.iter().enumerate().map(|(i, &f)| (f, i)).collect();
    let mut covers = Vec::with_capacity(faces.len());
    let mut grow = Vec::with_capacity(faces.len());
    for &f in &faces {
        let mut up = Vec::new();
        let mut bigger = Vec::new();
        for v in 1..=n {
            if !f.contains(v) {
                if let Some(&i) = pos.get(&f.with(v)) {
                    up.push(i);
                    bigger.push(i);
                }
            }
        }
        for s in f.vertices() {
            for r in 1..s {
                if !f.contains(r) {
                    up.push(pos[&f.without(s).with(r)]);
                }
            }
        }
        covers.push(up);
        grow.push(bigger);
    }
    let sets = run_in_pool(jobs, || DownSets { covers }.all())?;
    let mut out = Vec::with_capacity(sets.len());
    for chosen in sets {
        if !chosen.iter().any(|&b| b) {
            continue;
        }
        let facets = (0..faces.len()).filter(|&i| chosen[i] && !grow[i].iter().any(|&j| chosen[j])).map(|i| faces[i]);
        out.push(SimplicialComplex::from_facets(n, facets).expect("faces lie in [n]"));
    }
    Ok(out)
}

/// Every non-empty shifted multicomplex on `vars` variables of degree at
/// most `cap`, in a fixed order.
pub fn enumerate_shifted_multicomplexes(vars: usize, cap: u32) -> Vec<Multicomplex> {
    let mut monos = monomials_up_to(vars, cap);
    let weight = |m: &Monomial| -> u64 { m.exps().iter().enumerate().map(|(i, &e)| (i as u64 + 1) * e as u64).sum() };
    monos.sort_by(|a, b| b.degree().cmp(&a.degree()).then_with(|| weight(a).cmp(&weight(b))).then_with(|| a.cmp(b)));
    let pos: std::collections::HashMap<Monomial, usize> = monos.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
    let covers = monos
        .iter()
        .map(|m| {
            let mut up = Vec::new();
            if m.degree() < cap {
                up.extend((1..=vars).map(|j| pos[&m.times_var(j)]));
            }
            for j in 1..=vars {
                for i in 1..j {
                    if let Some(e) = m.exchange(j, i) {
                        up.push(pos[&e]);
                    }
                }
            }
            up
        })
        .collect();
    DownSets { covers }
        .all()
        .into_iter()
        .filter(|chosen| chosen.iter().any(|&b| b))
        .map(|chosen| {
            let members = monos.iter().zip(&chosen).filter(|(_, &c)| c).map(|(m, _)| m.clone());
            Multicomplex::from_members(vars, members).expect("down-sets are closed under division")
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complexes::is_shifted;
    use crate::multicomplexes::is_shifted_multicomplex;
    use std::collections::HashSet;

    /// Filters every subset-closed family on `[n]`, built from arbitrary
    /// antichains of faces.
    fn brute_force(n: u32, dmax: u32) -> HashSet<SimplicialComplex> {
        let faces: Vec<Face> = (0u64..(1 << n)).map(Face::from_bits).filter(|f| f.len() <= dmax as usize).collect();
        let mut out = HashSet::new();
        for mask in 1u64..(1u64 << faces.len()) {
            let gens = (0..faces.len()).filter(|&i| mask >> i & 1 == 1).map(|i| faces[i]);
            let c = SimplicialComplex::from_facets(n, gens).unwrap();
            if is_shifted(&c) {
                out.insert(c);
            }
        }
        out
    }

    #[test]
    fn small_counts() {
        assert_eq!(enumerate_shifted(2, 2).unwrap().len(), 4);
        assert_eq!(enumerate_shifted(1, 1).unwrap().len(), 2);
        let three = enumerate_shifted(3, 1).unwrap();
        let expected: Vec<SimplicialComplex> = vec![
            SimplicialComplex::empty(3),
            SimplicialComplex::from_vertex_lists(3, &[&[3]]).unwrap(),
            SimplicialComplex::from_vertex_lists(3, &[&[2], &[3]]).unwrap(),
            SimplicialComplex::from_vertex_lists(3, &[&[1], &[2], &[3]]).unwrap(),
        ];
        let got: HashSet<_> = three.into_iter().collect();
        assert_eq!(got, expected.into_iter().collect());
    }

    #[test]
    fn matches_brute_force() {
        for (n, dmax) in [(3, 3), (4, 2), (4, 3)] {
            let fast = enumerate_shifted(n, dmax).unwrap();
            let set: HashSet<_> = fast.iter().cloned().collect();
            assert_eq!(set.len(), fast.len(), "duplicates for n = {n}");
            assert_eq!(set, brute_force(n, dmax), "n = {n}, dmax = {dmax}");
        }
    }

    #[test]
    fn deterministic_under_parallelism() {
        let a = enumerate_shifted_with(5, 5, Some(1)).unwrap();
        let b = enumerate_shifted_with(5, 5, Some(4)).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn bounds() {
        assert!(matches!(enumerate_shifted(3, 4), Err(HarnessError::Bounds(_))));
        assert!(matches!(enumerate_shifted(65, 1), Err(HarnessError::Bounds(_))));
    }

    #[test]
    fn multicomplexes_are_shifted_and_distinct() {
        let all = enumerate_shifted_multicomplexes(2, 2);
        let set: HashSet<_> = all.iter().cloned().collect();
        assert_eq!(set.len(), all.len());
        assert!(all.iter().all(is_shifted_multicomplex));
        // {1}, {1,w2}, {1,w1,w2}, {1,w2,w2^2}, {1,w1,w2,w2^2},
        // {1,w1,w2,w1w2,w2^2}, {1,w1,w2,w1^2,w1w2,w2^2}
        assert_eq!(all.len(), 7);
    }
}
