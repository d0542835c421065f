//! Verification suites over the census and over composition spaces.
//!
//! Each suite returns a [`SuiteReport`]; the caller decides how to print it.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use super::census::{enumerate_shifted, enumerate_shifted_multicomplexes};
use crate::betti::{
    betti_from_complex, betti_table, check_generator_array, generator_array, BettiTable, GeneratorArray,
    MonomialIdeal,
};
use crate::characterization::{
    build_witness, check_htriangle_with, enumerate_compositions, necessity_compositions, regular_composition,
    rho_search, sigma_top, validate_composition, CheckOptions, Composition, CompositionSpace, Condition,
    Positivity, Verdict,
};
use crate::complexes::{
    alexander_dual, h_triangle_shelling, h_vector, htriangle_tilde, is_shifted, pure_skeleton, Face,
    SimplicialComplex, Triangle,
};
use crate::correspondence::{
    lambda, lambda_inverse, nu, nu_inverse, path_leq, phi, phi_bar, phi_complex, psi, psi_bar, psi_multicomplex,
    LatticePath,
};
use crate::macaulay::{is_m_sequence, monomial_count};
use crate::multicomplexes::{
    a_cone, is_shifted_multicomplex, mc_f_vector, monomials_up_to, Monomial, Multicomplex,
};

/// Outcome of one suite.
#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub name: String,
    pub passed: bool,
    /// Number of individual checks performed.
    pub checked: u64,
    /// One line per finding; empty lines are not stored.
    pub notes: Vec<String>,
    pub elapsed: Duration,
}

impl SuiteReport {
    fn new(name: &str) -> Self {
        SuiteReport { name: name.to_string(), passed: true, checked: 0, notes: Vec::new(), elapsed: Duration::ZERO }
    }

    fn fail(&mut self, note: impl Into<String>) {
        self.passed = false;
        if self.notes.len() < 20 {
            self.notes.push(note.into());
        }
    }

    fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    fn check(&mut self, ok: bool, note: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.fail(note());
        }
    }

    fn timed(mut self, start: Instant) -> Self {
        self.elapsed = start.elapsed();
        self
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} ({} checks, {:.2}s)",
            if self.passed { "PASS" } else { "FAIL" },
            self.name,
            self.checked,
            self.elapsed.as_secs_f64()
        )?;
        for n in &self.notes {
            write!(f, "\n    {n}")?;
        }
        Ok(())
    }
}

/// The 4-row triangle that satisfies the first two conditions only.
pub fn counterexample_triangle() -> Triangle {
    Triangle::new(vec![vec![1], vec![1, 5], vec![1, 4, 7], vec![1, 3, 3, 4], vec![1, 2, 0, 0, 0]])
        .expect("well shaped")
}

fn census(n: u32, dmax: u32, report: &mut SuiteReport) -> Vec<SimplicialComplex> {
    match enumerate_shifted(n, dmax) {
        Ok(v) => v,
        Err(e) => {
            report.fail(format!("census ({n}, {dmax}) failed: {e}"));
            Vec::new()
        }
    }
}

/// The counterexample is rejected by the third condition and no shifted
/// complex on `[n]` has it as h̃-triangle.
pub fn counterexample_suite(n: u32, options: &CheckOptions) -> SuiteReport {
    let start = Instant::now();
    let mut r = SuiteReport::new("counterexample rejection");
    let t = counterexample_triangle();
    match check_htriangle_with(&t, options) {
        Ok(v) => {
            let expected = Verdict::Reject { condition: Condition::C, i: 3, j: 3 };
            r.check(v == expected, || format!("verdict {v}, expected {expected}"));
            r.note(format!("verdict: {v}"));
        }
        Err(e) => r.fail(format!("checker error: {e}")),
    }
    let all = census(n, 4.min(n), &mut r);
    let hits = all.par_iter().filter(|c| htriangle_tilde(c).map(|h| h == t).unwrap_or(false)).count();
    r.check(hits == 0, || format!("{hits} census complexes realize the triangle"));
    r.note(format!("census n={n}, dmax={}: {} complexes, none realizes it", 4.min(n), all.len()));
    r.timed(start)
}

/// The worked composition example.
pub fn worked_composition_suite() -> SuiteReport {
    let start = Instant::now();
    let mut r = SuiteReport::new("worked composition example");
    let space = CompositionSpace::new(2, 2, vec![1, 4, 9, 4, 1]).expect("valid space");
    let build = |one: u64, u1: u64, u2: u64| {
        let m = |s: &str| Monomial::parse(s, 2).expect("literal");
        Composition::from_assignments(
            space.clone(),
            [(m("1"), one), (m("u1"), u1), (m("u2"), u2), (m("u1^2"), 1), (m("u1*u2"), 1), (m("u2^2"), 1)],
        )
        .expect("complete")
    };
    let d1 = build(10, 4, 5);
    let d2 = build(9, 5, 5);
    let d3 = build(9, 4, 6);
    for (name, d, sigma) in [("D1", &d1, 7), ("D2", &d2, 7), ("D3", &d3, 8)] {
        let v = validate_composition(d, 22);
        r.check(v.is_ok(), || format!("{name} rejected: {v:?}"));
        let s = sigma_top(d);
        r.check(s == sigma, || format!("Σ({name}) = {s}, expected {sigma}"));
    }
    let rho = rho_search(&space, 22).map(|(v, _)| v);
    r.check(rho == Some(7), || format!("ρ = {rho:?}, expected 7"));
    match regular_composition(&space, 22) {
        Ok(c) => r.check(c == d1, || format!("regular composition {c:?} differs from D1")),
        Err(e) => r.fail(format!("regular composition failed: {e}")),
    }
    let all = enumerate_compositions(&space, 22);
    for (name, d) in [("D1", &d1), ("D2", &d2), ("D3", &d3)] {
        r.check(all.contains(d), || format!("{name} missing from the enumeration"));
    }
    r.note(format!("{} compositions of 22 in total", all.len()));
    r.timed(start)
}

/// `ν` and `λ` of the path `NEENENNEEEN`.
pub fn lattice_path_suite() -> SuiteReport {
    let start = Instant::now();
    let mut r = SuiteReport::new("lattice path example");
    let path: LatticePath = "NEENENNEEEN".parse().expect("literal");
    let set = nu(&path);
    let expected = Face::from_vertices([1, 4, 6, 7, 11]).expect("literal");
    r.check(set == expected, || format!("ν = {set}, expected {expected}"));
    let m = lambda(&path);
    let want = Monomial::new(vec![1, 0, 1, 2, 0, 0]);
    r.check(m == want, || format!("λ = {}, expected w1*w3*w4^2", m.render('w')));
    r.note(format!("ν = {set}, λ = {}", m.render('w')));
    r.timed(start)
}

fn a_subsets(n: u32, a: u32) -> Vec<Face> {
    (0u64..(1u64 << n)).map(Face::from_bits).filter(|f| f.len() == a as usize).collect()
}

/// Reflexive-transitive closure of `step` on `items`, as reachability sets.
fn closure<T: Clone + Eq + std::hash::Hash>(items: &[T], step: impl Fn(&T) -> Vec<T>) -> Vec<HashSet<usize>> {
    let pos: HashMap<T, usize> = items.iter().cloned().enumerate().map(|(i, x)| (x, i)).collect();
    items
        .iter()
        .map(|x| {
            let mut seen = HashSet::new();
            let mut queue = VecDeque::from([pos[x]]);
            while let Some(i) = queue.pop_front() {
                if seen.insert(i) {
                    for y in step(&items[i]) {
                        queue.push_back(pos[&y]);
                    }
                }
            }
            seen
        })
        .collect()
}

/// Round trips `φ∘ψ`, `ψ∘φ`, `Φ̄∘Ψ̄`, and the order-ideal descriptions of
/// shifted families and shifted multicomplexes.
pub fn round_trip_suite(max_ra: u32, census_n: u32, ideal_max: u32) -> SuiteReport {
    let start = Instant::now();
    let mut r = SuiteReport::new("round-trip bijections");
    for total in 1..=max_ra {
        for a in 1..=total {
            let rr = total - a;
            for f in a_subsets(total, a) {
                let back = psi(f, rr, a).and_then(|m| phi(&m, a));
                r.check(back.as_ref() == Ok(&f), || format!("φψ({f}) = {back:?} for r={rr}, a={a}"));
            }
            for m in monomials_up_to(rr as usize, a) {
                let back = phi(&m, a).and_then(|f| psi(f, rr, a));
                r.check(back.as_ref() == Ok(&m), || format!("ψφ({m:?}) = {back:?} for r={rr}, a={a}"));
            }
        }
    }
    for n in 1..=census_n {
        let all = census(n, n, &mut r);
        let bad: Vec<String> = all
            .par_iter()
            .filter_map(|c| {
                let back = psi_bar(c).and_then(|mc| phi_bar(&mc));
                (back.as_ref() != Ok(c)).then(|| format!("Φ̄Ψ̄({c}) = {back:?}"))
            })
            .collect();
        r.checked += all.len() as u64;
        for b in bad {
            r.fail(b);
        }
    }
    for total in 1..=ideal_max {
        for a in 1..=total {
            order_ideal_checks(total - a, a, &mut r);
        }
    }
    r.timed(start)
}

fn order_ideal_checks(rr: u32, a: u32, r: &mut SuiteReport) {
    let n = rr + a;
    let paths = LatticePath::all(rr, a);
    let leq = |x: &LatticePath, y: &LatticePath| path_leq(x, y).expect("same endpoints");

    // Shifting one element of a set up is the covering move; its closure
    // must be the path order.
    let sets = a_subsets(n, a);
    let set_paths: Vec<LatticePath> =
        sets.iter().map(|&f| nu_inverse(f, rr, a).expect("a-subset of [r+a]")).collect();
    let reach = closure(&sets, |f| {
        let mut out = Vec::new();
        for v in f.vertices() {
            for u in (v + 1)..=n {
                if !f.contains(u) {
                    out.push(f.without(v).with(u));
                }
            }
        }
        out
    });
    for (i, above) in reach.iter().enumerate() {
        for (j, q) in set_paths.iter().enumerate() {
            let expect = leq(q, &set_paths[i]);
            r.check(above.contains(&j) == expect, || {
                format!("r={rr}, a={a}: shifting {} → {} disagrees with the path order", sets[i], sets[j])
            });
        }
    }

    // For monomials, dividing and shifting a variable up are the moves.
    let monos = monomials_up_to(rr as usize, a);
    let mono_paths: Vec<LatticePath> =
        monos.iter().map(|m| lambda_inverse(m, a).expect("degree ≤ a")).collect();
    let reach = closure(&monos, |m| {
        let mut out: Vec<Monomial> = m.lower_neighbours().collect();
        for i in 1..=rr as usize {
            for j in (i + 1)..=rr as usize {
                if let Some(e) = m.exchange(i, j) {
                    out.push(e);
                }
            }
        }
        out
    });
    for (i, below) in reach.iter().enumerate() {
        for (j, q) in mono_paths.iter().enumerate() {
            let expect = leq(q, &mono_paths[i]);
            r.check(below.contains(&j) == expect, || {
                format!("r={rr}, a={a}: {:?} → {:?} disagrees with the path order", monos[i], monos[j])
            });
        }
    }

    // Small posets: every family, checked directly.
    if paths.len() <= 16 {
        let is_ideal = |chosen: &[bool], ps: &[LatticePath]| {
            (0..ps.len()).all(|i| !chosen[i] || (0..ps.len()).all(|j| chosen[j] || !leq(&ps[j], &ps[i])))
        };
        for mask in 0u32..(1u32 << sets.len()) {
            let chosen: Vec<bool> = (0..sets.len()).map(|i| mask >> i & 1 == 1).collect();
            let family: HashSet<Face> = sets.iter().zip(&chosen).filter(|(_, &c)| c).map(|(&f, _)| f).collect();
            let shifted = family.iter().all(|f| {
                f.vertices().all(|v| ((v + 1)..=n).all(|u| f.contains(u) || family.contains(&f.without(v).with(u))))
            });
            let ideal = is_ideal(&chosen, &set_paths);
            r.check(shifted == ideal, || format!("r={rr}, a={a}: set family {mask:#b} shifted={shifted}"));
            let members: BTreeSet<Monomial> =
                monos.iter().zip(&chosen).filter(|(_, &c)| c).map(|(m, _)| m.clone()).collect();
            let as_mc = Multicomplex::from_members(rr as usize, members.iter().cloned())
                .map(|m| is_shifted_multicomplex(&m))
                .unwrap_or(false);
            let ideal = is_ideal(&chosen, &mono_paths);
            r.check(as_mc == ideal, || format!("r={rr}, a={a}: monomial family {mask:#b} shifted={as_mc}"));
        }
    }
}

/// `h(Δ) = f(Ψ(Δ))` for pure shifted complexes, and the cone of a shifted
/// multicomplex maps to the codimension-one skeleton.
pub fn transport_suite(census_n: u32, cone_r: u32, cone_a: u32) -> SuiteReport {
    let start = Instant::now();
    let mut r = SuiteReport::new("correspondence transport");
    for n in 1..=census_n {
        for c in census(n, n, &mut r).into_iter().filter(|c| c.is_pure()) {
            let h = h_vector(&c).expect("small");
            let f = psi_multicomplex(&c).map(|m| {
                let mut f: Vec<i64> = mc_f_vector(&m).into_iter().map(|v| v as i64).collect();
                f.resize(c.d() + 1, 0);
                f
            });
            r.check(f.as_ref() == Ok(&h), || format!("{c}: h = {h:?}, f(Ψ) = {f:?}"));
        }
    }
    for rr in 0..=cone_r {
        for a in 1..=cone_a {
            for m in enumerate_shifted_multicomplexes(rr as usize, a) {
                let cone = a_cone(&m, a).expect("degree ≤ a");
                let lhs = phi_complex(&cone, a - 1);
                let rhs = phi_complex(&m, a).map(|c| pure_skeleton(&c, a as i64 - 2).expect("a - 2 ≤ dim"));
                r.check(lhs.is_ok() && lhs == rhs, || format!("r={rr}, a={a}, M={m}: {lhs:?} vs {rhs:?}"));
            }
        }
    }
    r.timed(start)
}

/// Every triangle with `d ≤ dmax`, row 0 equal to `(1)` and all other
/// entries in `0..=max_entry`, in row-major order.
pub fn bounded_triangles(dmax: usize, max_entry: i64) -> Vec<Triangle> {
    let mut out = Vec::new();
    for d in 0..=dmax {
        let cells = d * (d + 3) / 2;
        let base = max_entry as u64 + 1;
        let total = base.pow(cells as u32);
        for code in 0..total {
            let mut rows = vec![vec![1i64]];
            let mut c = code;
            for i in 1..=d {
                let mut row = Vec::with_capacity(i + 1);
                for _ in 0..=i {
                    row.push((c % base) as i64);
                    c /= base;
                }
                rows.push(row);
            }
            out.push(Triangle::new(rows).expect("well shaped"));
        }
    }
    out
}

/// Outcome of comparing accepted triangles with census triangles.
#[derive(Debug, Clone)]
pub struct Completeness {
    /// Accepted triangles, sorted.
    pub accepted_triangles: Vec<Triangle>,
    pub accepted: usize,
    pub realized: usize,
    pub accepted_not_realized: Vec<Triangle>,
    pub realized_not_accepted: Vec<Triangle>,
}

/// Compares the accepted bounded triangles with the h̃-triangles of shifted
/// complexes on `[census_n]` under the given checker options.
pub fn completeness(options: &CheckOptions, dmax: usize, max_entry: i64, census_n: u32) -> Completeness {
    let candidates = bounded_triangles(dmax, max_entry);
    let accepted: HashSet<Triangle> = candidates
        .into_par_iter()
        .filter(|t| matches!(check_htriangle_with(t, options), Ok(Verdict::Accept)))
        .collect();
    let realized: HashSet<Triangle> = enumerate_shifted(census_n, dmax as u32)
        .expect("census within bounds")
        .par_iter()
        .map(|c| htriangle_tilde(c).expect("non-void"))
        .filter(|t| t.entries().all(|(i, _, v)| i == 0 || v <= max_entry))
        .collect();
    let mut accepted_triangles: Vec<Triangle> = accepted.iter().cloned().collect();
    accepted_triangles.sort();
    let mut a: Vec<Triangle> = accepted.difference(&realized).cloned().collect();
    let mut b: Vec<Triangle> = realized.difference(&accepted).cloned().collect();
    a.sort();
    b.sort();
    Completeness { accepted_triangles, accepted: accepted.len(), realized: realized.len(), accepted_not_realized: a, realized_not_accepted: b }
}

/// Accepted bounded triangles equal census triangles, and every accepted
/// triangle's witness is shifted with the same triangle.
pub fn desk_completeness_suite(options: &CheckOptions, dmax: usize, max_entry: i64, census_n: u32) -> SuiteReport {
    let start = Instant::now();
    let mut r = SuiteReport::new("desk-scale completeness");
    let cmp = completeness(options, dmax, max_entry, census_n);
    r.note(format!(
        "{} accepted, {} realized ({} positivity, {:?} ρ)",
        cmp.accepted, cmp.realized, options.positivity, options.method
    ));
    r.check(cmp.accepted_not_realized.is_empty(), || {
        format!("{} accepted but not realized, e.g. {:?}", cmp.accepted_not_realized.len(), cmp.accepted_not_realized.first())
    });
    r.check(cmp.realized_not_accepted.is_empty(), || {
        format!("{} realized but rejected, e.g. {:?}", cmp.realized_not_accepted.len(), cmp.realized_not_accepted.first())
    });
    let accepted = &cmp.accepted_triangles;
    let failures: Vec<String> = accepted
        .par_iter()
        .filter_map(|t| match build_witness(t, options) {
            Ok(c) if is_shifted(&c) && htriangle_tilde(&c).as_ref() == Ok(t) => None,
            Ok(c) => Some(format!("witness {c} for {t:?} does not match")),
            Err(e) => Some(format!("no witness for {t:?}: {e}")),
        })
        .collect();
    r.checked += accepted.len() as u64;
    if !failures.is_empty() {
        r.fail(format!("{} of {} witnesses failed", failures.len(), accepted.len()));
        for f in failures.into_iter().take(10) {
            r.fail(f);
        }
    }
    r.timed(start)
}

/// The checker's positivity convention, chosen by comparison with the
/// census: zero values admitted unless only strict positivity matches.
#[derive(Debug, Clone)]
pub struct Calibration {
    pub selected: Option<Positivity>,
    pub allow_zero: Completeness,
    pub strict: Completeness,
}

pub fn calibrate(dmax: usize, max_entry: i64, census_n: u32) -> Calibration {
    let run = |positivity| completeness(&CheckOptions { positivity, ..Default::default() }, dmax, max_entry, census_n);
    let allow_zero = run(Positivity::AllowZero);
    let strict = run(Positivity::Strict);
    let exact = |c: &Completeness| c.accepted_not_realized.is_empty() && c.realized_not_accepted.is_empty();
    let selected = if exact(&allow_zero) {
        Some(Positivity::AllowZero)
    } else if exact(&strict) {
        Some(Positivity::Strict)
    } else {
        None
    };
    Calibration { selected, allow_zero, strict }
}

/// M-sequences `(1, h_1, ..., h_len-1)` with every entry at most `max`.
pub fn m_sequences(len: usize, max: u64) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    let mut cur = vec![1u64];
    fn rec(len: usize, max: u64, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for v in 0..=max {
            cur.push(v);
            if is_m_sequence(cur) {
                rec(len, max, cur, out);
                cur.pop();
            } else {
                cur.pop();
                break;
            }
        }
    }
    rec(len, max, &mut cur, &mut out);
    out
}

/// `Σ_v` of the regular composition equals the exhaustive minimum on every
/// feasible space with `v ≤ vmax`, `c ≤ cmax`, `r ≤ rmax`.
pub fn rho_agreement_suite(positivity: Positivity, vmax: usize, cmax: u32, rmax: u64) -> SuiteReport {
    let start = Instant::now();
    let mut r = SuiteReport::new("regular composition minimality");
    let mut jobs = Vec::new();
    for v in 1..=vmax {
        for c in 1..=cmax {
            for h in m_sequences(c as usize + 1, rmax) {
                let space = CompositionSpace::new(v, c, h).expect("M-sequence").with_positivity(positivity);
                if let Some(min) = space.minimum_mass().filter(|&m| m <= rmax) {
                    for mass in min..=rmax {
                        jobs.push((space.clone(), mass));
                    }
                }
            }
        }
    }
    let results: Vec<Option<String>> = jobs
        .par_iter()
        .map(|(space, mass)| {
            let best = rho_search(space, *mass).map(|(v, _)| v);
            let regular = regular_composition(space, *mass);
            match (best, regular) {
                (Some(b), Ok(c)) if sigma_top(&c) == b => None,
                (Some(b), Ok(c)) => Some(format!("{space:?}, r={mass}: regular Σ = {}, minimum {b}", sigma_top(&c))),
                (None, Err(_)) => None,
                (b, reg) => Some(format!("{space:?}, r={mass}: search {b:?}, regular {reg:?}")),
            }
        })
        .collect();
    r.checked += results.len() as u64;
    let bad: Vec<String> = results.into_iter().flatten().collect();
    if !bad.is_empty() {
        r.fail(format!("{} disagreements", bad.len()));
        for b in bad.into_iter().take(10) {
            r.fail(b);
        }
    }
    r.note(format!("{} (space, r) pairs under {positivity} positivity", jobs.len()));
    r.timed(start)
}

/// h-vectors of pure shifted complexes, f-vectors of shifted multicomplexes
/// and bounded M-sequences coincide.
pub fn macaulay_stanley_suite(nmax: u32, dmax: u32) -> SuiteReport {
    let start = Instant::now();
    let mut r = SuiteReport::new("Macaulay-Stanley equivalence");
    for n in 1..=nmax {
        let all = census(n, dmax.min(n), &mut r);
        for d in 1..=dmax.min(n) {
            let free = (n - d) as usize;
            let hs: BTreeSet<Vec<i64>> = all
                .iter()
                .filter(|c| c.is_pure() && c.d() == d as usize)
                .map(|c| h_vector(c).expect("small"))
                .collect();
            let fs: BTreeSet<Vec<i64>> = enumerate_shifted_multicomplexes(free, d)
                .iter()
                .map(|m| {
                    let mut f: Vec<i64> = mc_f_vector(m).into_iter().map(|v| v as i64).collect();
                    f.resize(d as usize + 1, 0);
                    f
                })
                .collect();
            let bound = (0..=d).map(|l| monomial_count(free, l as usize).expect("small")).max().unwrap_or(1);
            let ms: BTreeSet<Vec<i64>> = m_sequences(d as usize + 1, bound)
                .into_iter()
                .filter(|h| h.get(1).copied().unwrap_or(0) <= free as u64)
                .map(|h| h.into_iter().map(|v| v as i64).collect())
                .collect();
            r.check(hs == fs && fs == ms, || {
                format!("n={n}, d={d}: {} h-vectors, {} f-vectors, {} M-sequences", hs.len(), fs.len(), ms.len())
            });
        }
    }
    r.timed(start)
}

fn table_from_m(array: &GeneratorArray, ell: usize, t: u64) -> u64 {
    (0..=array.n()).map(|s| array.m(s + 1, ell).max(0) as u64 * (1 + t).pow(s as u32)).sum()
}

/// Koszul examples, the dual-complex lemma, the Betti generating function
/// and generator-array acceptance over the census.
pub fn betti_suite(census_n: u32, options: &CheckOptions) -> SuiteReport {
    let start = Instant::now();
    let mut r = SuiteReport::new("Betti tables and generator arrays");
    let sq = |n: usize, gens: &[&[u32]]| {
        MonomialIdeal::from_faces(n, gens.iter().map(|g| Face::from_vertices(g.iter().copied()).expect("literal")))
    };
    let t = betti_table(&sq(3, &[&[1, 2], &[1, 3]]));
    let want = BettiTable::from_entries([((0, 2), 2), ((1, 2), 1)]);
    r.check(t.as_ref() == Ok(&want), || format!("⟨x1x2, x1x3⟩: {t:?}"));
    let t = betti_table(&sq(2, &[&[1], &[2]]));
    let want = BettiTable::from_entries([((0, 1), 2), ((1, 1), 1)]);
    r.check(t.as_ref() == Ok(&want), || format!("⟨x1, x2⟩: {t:?}"));

    for n in 1..=census_n {
        for c in census(n, n, &mut r) {
            let nn = n as usize;
            let ideal = MonomialIdeal::stanley_reisner(&c);
            let dual = alexander_dual(&c);
            if ideal.generators().is_empty() || dual.is_void() {
                continue;
            }
            let array = match generator_array(&ideal) {
                Ok(a) => a,
                Err(e) => {
                    r.fail(format!("{c}: {e}"));
                    continue;
                }
            };
            let h = h_triangle_shelling(&dual).expect("dual of shifted is shifted");
            for k in 1..=nn {
                for s in 0..nn {
                    let lhs = array.m(s + 1, k);
                    let rhs = if nn - k <= h.d() { h.get(nn - k, s) } else { 0 };
                    r.check(lhs == rhs, || format!("{c}: m_{{{},{k}}} = {lhs}, h_{{{},{s}}}(Δ*) = {rhs}", s + 1, nn - k));
                }
            }
            let table = betti_table(&ideal).expect("strongly stable");
            for ell in array.d()..=array.r() {
                for t in 1..=3 {
                    let (a, b) = (table.poly_at(ell, t), table_from_m(&array, ell, t));
                    r.check(a == b, || format!("{c}: ℓ={ell}, t={t}: {a} vs {b}"));
                }
            }
            let first: u64 = table.entries().filter(|((s, _), _)| *s == 0).map(|(_, v)| v).sum();
            r.check(first == ideal.generators().len() as u64, || format!("{c}: first column {first}"));
            let from_h = betti_from_complex(&dual);
            r.check(from_h.as_ref() == Ok(&table), || format!("{c}: corollary gives {from_h:?}, ideal gives {table:?}"));
            let v = check_generator_array(&array, options);
            r.check(matches!(v, Ok(Verdict::Accept)), || format!("{c}: generator array verdict {v:?}"));
        }
    }
    let rotated = GeneratorArray::from_cumulative(
        6,
        2,
        vec![vec![1, 2, 0, 0, 0], vec![1, 3, 3, 4], vec![1, 4, 7], vec![1, 5], vec![1]],
    )
    .expect("well shaped");
    let v = check_generator_array(&rotated, options);
    r.check(matches!(v, Ok(Verdict::Reject { condition: Condition::C, .. })), || {
        format!("rotated counterexample: {v:?}")
    });
    r.timed(start)
}

/// Per-complex checks over a census: `Φ̄∘Ψ̄ = id`, necessity replay,
/// acceptance of the h̃-triangle, and a witness with the same triangle.
pub fn verify_census(complexes: &[SimplicialComplex], options: &CheckOptions) -> SuiteReport {
    let start = Instant::now();
    let mut r = SuiteReport::new("census verification");
    let problems: Vec<Vec<String>> = complexes
        .par_iter()
        .map(|c| {
            let mut out = Vec::new();
            match psi_bar(c).and_then(|mc| phi_bar(&mc)) {
                Ok(back) if &back == c => {}
                other => out.push(format!("{c}: Φ̄Ψ̄ gives {other:?}")),
            }
            match necessity_compositions(c) {
                Ok(recs) => {
                    for rec in recs {
                        if let Err(v) = validate_composition(&rec.composition, rec.mass) {
                            out.push(format!("{c}: 𝒟_{{{},{}}} invalid: {v}", rec.i, rec.j));
                        } else if sigma_top(&rec.composition) > rec.bound {
                            out.push(format!("{c}: Σ(𝒟_{{{},{}}}) exceeds {}", rec.i, rec.j, rec.bound));
                        }
                    }
                }
                Err(e) => out.push(format!("{c}: replay failed: {e}")),
            }
            let t = htriangle_tilde(c).expect("non-void");
            match check_htriangle_with(&t, options) {
                Ok(Verdict::Accept) => match build_witness(&t, options) {
                    Ok(_) => {}
                    Err(e) => out.push(format!("{c}: witness failed: {e}")),
                },
                other => out.push(format!("{c}: triangle {t:?} gives {other:?}")),
            }
            out
        })
        .collect();
    r.checked += complexes.len() as u64 * 4;
    for p in problems.into_iter().flatten() {
        r.fail(p);
    }
    r.note(format!("{} complexes", complexes.len()));
    r.timed(start)
}

/// Necessity replay on its own, for the given census.
pub fn necessity_suite(census_n: u32) -> SuiteReport {
    let start = Instant::now();
    let mut r = SuiteReport::new("necessity replay");
    for n in 1..=census_n {
        for c in census(n, n, &mut r) {
            match necessity_compositions(&c) {
                Ok(recs) => {
                    for rec in recs {
                        let v = validate_composition(&rec.composition, rec.mass);
                        r.check(v.is_ok(), || format!("{c}: ({},{}) {v:?}", rec.i, rec.j));
                        let s = sigma_top(&rec.composition);
                        r.check(s <= rec.bound, || format!("{c}: ({},{}) Σ = {s} > {}", rec.i, rec.j, rec.bound));
                    }
                }
                Err(e) => r.fail(format!("{c}: {e}")),
            }
        }
    }
    r.timed(start)
}
