//! Square-free strongly stable ideals, their generator arrays, and graded
//! Betti numbers.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::characterization::{check_htriangle_with, CharacterizationError, CheckOptions, Verdict};
use crate::complexes::{h_triangle_shelling, minimal_nonfaces, ComplexError, Face, SimplicialComplex, Triangle};
use crate::macaulay::binomial;
use crate::multicomplexes::Monomial;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BettiError {
    #[error("generator {0} is not square-free")]
    NotSquareFree(Monomial),
    #[error("generator {found} has {} variables, expected {expected}", found.vars())]
    VariableCount { expected: usize, found: Monomial },
    #[error("the ideal is not square-free strongly stable")]
    NotStronglyStable,
    #[error("malformed generator array: {0}")]
    Shape(String),
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error(transparent)]
    Characterization(#[from] CharacterizationError),
}

/// A monomial ideal in `k[x_1, ..., x_n]`, stored by its minimal generators.
#[derive(Clone, PartialEq, Eq)]
pub struct MonomialIdeal {
    n: usize,
    generators: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Drops generators divisible by other generators.
    pub fn new<I: IntoIterator<Item = Monomial>>(n: usize, generators: I) -> Result<Self, BettiError> {
        let mut gens: Vec<Monomial> = Vec::new();
        for g in generators {
            if g.vars() != n {
                return Err(BettiError::VariableCount { expected: n, found: g });
            }
            gens.push(g);
        }
        gens.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| b.cmp(a)));
        gens.dedup();
        let mut minimal: Vec<Monomial> = Vec::new();
        for g in gens {
            if !minimal.iter().any(|m| m.divides(&g)) {
                minimal.push(g);
            }
        }
        Ok(MonomialIdeal { n, generators: minimal })
    }

    /// The ideal generated by `x_F = ∏_{v∈F} x_v`.
    pub fn from_faces<I: IntoIterator<Item = Face>>(n: usize, faces: I) -> Self {
        let gens = faces.into_iter().map(|f| {
            let mut exps = vec![0u32; n];
            for v in f.vertices() {
                exps[v as usize - 1] = 1;
            }
            Monomial::new(exps)
        });
        MonomialIdeal::new(n, gens).expect("faces live on [n]")
    }

    /// The Stanley–Reisner ideal, generated by the minimal non-faces.
    pub fn stanley_reisner(c: &SimplicialComplex) -> Self {
        MonomialIdeal::from_faces(c.n() as usize, minimal_nonfaces(c))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Minimal generators, by degree.
    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.generators.iter().any(|g| g.divides(m))
    }

    pub fn is_square_free(&self) -> bool {
        self.generators.iter().all(|g| g.exps().iter().all(|&e| e <= 1))
    }

    /// Least and greatest generator degree; `None` for the zero ideal.
    pub fn degree_range(&self) -> Option<(u32, u32)> {
        let lo = self.generators.iter().map(Monomial::degree).min()?;
        let hi = self.generators.iter().map(Monomial::degree).max()?;
        Some((lo, hi))
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "⟨")?;
        for (k, g) in self.generators.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", g.render('x'))?;
        }
        write!(f, "⟩")
    }
}

/// True iff `x_i (u / x_j) ∈ I` for every generator `u`, every `x_j | u`
/// and every `i < j` with `x_i ∤ u`.
pub fn is_sqfree_strongly_stable(ideal: &MonomialIdeal) -> Result<bool, BettiError> {
    if let Some(g) = ideal.generators.iter().find(|g| g.exps().iter().any(|&e| e > 1)) {
        return Err(BettiError::NotSquareFree(g.clone()));
    }
    for g in &ideal.generators {
        for j in 1..=ideal.n {
            if g.exp(j) == 0 {
                continue;
            }
            for i in 1..j {
                if g.exp(i) == 0 && !ideal.contains(&g.exchange(j, i).expect("x_j divides g")) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// The reduced array `m_{k,ℓ}` and the array `μ_{k,ℓ}` of generators of an
/// ideal in `n` variables with generator degrees in `[d, r]`.
///
/// Both are stored by degree: `reduced[ℓ - d][k - 1]`, with
/// `n - ℓ + 1` positions per degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorArray {
    n: usize,
    d: usize,
    reduced: Vec<Vec<i64>>,
    cumulative: Vec<Vec<i64>>,
}

fn check_shape(n: usize, d: usize, rows: &[Vec<i64>]) -> Result<(), BettiError> {
    if d == 0 || d > n {
        return Err(BettiError::Shape(format!("need 1 ≤ d ≤ n, got d = {d}, n = {n}")));
    }
    if rows.is_empty() || d + rows.len() - 1 > n {
        return Err(BettiError::Shape(format!("degrees {d}..{} exceed n = {n}", d + rows.len().max(1) - 1)));
    }
    for (off, row) in rows.iter().enumerate() {
        let ell = d + off;
        if row.len() != n - ell + 1 {
            return Err(BettiError::Shape(format!(
                "degree {ell} has {} entries, expected {}",
                row.len(),
                n - ell + 1
            )));
        }
    }
    Ok(())
}

impl GeneratorArray {
    /// From `m_{k,ℓ}`; `μ` follows from `μ_{k,ℓ} = m_{k,ℓ} + Σ_{q≤k} μ_{q,ℓ-1}`.
    pub fn from_reduced(n: usize, d: usize, reduced: Vec<Vec<i64>>) -> Result<Self, BettiError> {
        check_shape(n, d, &reduced)?;
        let mut cumulative: Vec<Vec<i64>> = Vec::with_capacity(reduced.len());
        for (off, row) in reduced.iter().enumerate() {
            let mut out = Vec::with_capacity(row.len());
            let mut prefix = 0i64;
            for (k0, &m) in row.iter().enumerate() {
                if off > 0 {
                    prefix += cumulative[off - 1][k0];
                }
                out.push(m + prefix);
            }
            cumulative.push(out);
        }
        Ok(GeneratorArray { n, d, reduced, cumulative })
    }

    /// From `μ_{k,ℓ}`; `m_{k,ℓ} = μ_{k,ℓ} - Σ_{q≤k} μ_{q,ℓ-1}`.
    pub fn from_cumulative(n: usize, d: usize, cumulative: Vec<Vec<i64>>) -> Result<Self, BettiError> {
        check_shape(n, d, &cumulative)?;
        let mut reduced = Vec::with_capacity(cumulative.len());
        for (off, row) in cumulative.iter().enumerate() {
            let mut out = Vec::with_capacity(row.len());
            let mut prefix = 0i64;
            for (k0, &mu) in row.iter().enumerate() {
                if off > 0 {
                    prefix += cumulative[off - 1][k0];
                }
                out.push(mu - prefix);
            }
            reduced.push(out);
        }
        Ok(GeneratorArray { n, d, reduced, cumulative })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Least degree.
    pub fn d(&self) -> usize {
        self.d
    }

    /// Greatest degree.
    pub fn r(&self) -> usize {
        self.d + self.reduced.len() - 1
    }

    /// `m_{k,ℓ}`, zero outside the stored range.
    pub fn m(&self, k: usize, ell: usize) -> i64 {
        lookup(&self.reduced, self.d, k, ell)
    }

    /// `μ_{k,ℓ}`, zero outside the stored range.
    pub fn mu(&self, k: usize, ell: usize) -> i64 {
        lookup(&self.cumulative, self.d, k, ell)
    }

    pub fn reduced(&self) -> &[Vec<i64>] {
        &self.reduced
    }

    pub fn cumulative(&self) -> &[Vec<i64>] {
        &self.cumulative
    }

    /// The h̃-triangle of the Alexander dual of any complex whose
    /// Stanley–Reisner ideal has this array: row `i` is
    /// `(μ_{1,n-i}, ..., μ_{i+1,n-i})`, for `0 ≤ i ≤ n - d`. Degrees above
    /// `r` are filled in with no new generators.
    pub fn to_htriangle(&self) -> Triangle {
        let extended = GeneratorArray::from_reduced(
            self.n,
            self.d,
            (self.d..=self.n).map(|ell| (1..=self.n - ell + 1).map(|k| self.m(k, ell)).collect()).collect(),
        )
        .expect("shape is built to fit");
        let rows = (0..=self.n - self.d)
            .map(|i| (1..=i + 1).map(|k| extended.mu(k, self.n - i)).collect())
            .collect();
        Triangle::new(rows).expect("rows have length i + 1")
    }
}

fn lookup(rows: &[Vec<i64>], d: usize, k: usize, ell: usize) -> i64 {
    if ell < d || k == 0 {
        return 0;
    }
    rows.get(ell - d).and_then(|r| r.get(k - 1)).copied().unwrap_or(0)
}

/// Position of triangle cell `(i, j)` in generator-array coordinates
/// `(k, ℓ)`.
pub fn triangle_cell_to_array(n: usize, i: usize, j: usize) -> (usize, usize) {
    (j + 1, n - i)
}

/// `m_{k,ℓ}` counts generators of degree `ℓ` whose largest variable is
/// `x_{k+ℓ-1}`.
pub fn generator_array(ideal: &MonomialIdeal) -> Result<GeneratorArray, BettiError> {
    if !is_sqfree_strongly_stable(ideal)? {
        return Err(BettiError::NotStronglyStable);
    }
    let (d, r) = ideal
        .degree_range()
        .ok_or_else(|| BettiError::Shape("the zero ideal has no generator array".into()))?;
    let (d, r) = (d as usize, r as usize);
    if d == 0 {
        return Err(BettiError::Shape("the unit ideal has no generator array".into()));
    }
    let n = ideal.n;
    let mut reduced: Vec<Vec<i64>> = (d..=r).map(|ell| vec![0; n - ell + 1]).collect();
    for g in &ideal.generators {
        let ell = g.degree() as usize;
        let top = g.max_var().expect("degree ≥ 1");
        reduced[ell - d][top + 1 - ell - 1] += 1;
    }
    GeneratorArray::from_reduced(n, d, reduced)
}

/// Graded Betti numbers `b_{s,s+ℓ}`, keyed by `(s, ℓ)`; zero entries are
/// not stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BettiTable {
    entries: BTreeMap<(usize, usize), u64>,
}

impl BettiTable {
    pub fn from_entries<I: IntoIterator<Item = ((usize, usize), u64)>>(entries: I) -> Self {
        BettiTable { entries: entries.into_iter().filter(|&(_, v)| v > 0).collect() }
    }

    /// `b_{s,s+ℓ}`.
    pub fn get(&self, s: usize, ell: usize) -> u64 {
        self.entries.get(&(s, ell)).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize), u64)> + '_ {
        self.entries.iter().map(|(&k, &v)| (k, v))
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `Σ_s b_{s,s+ℓ} t^s`.
    pub fn poly_at(&self, ell: usize, t: u64) -> u64 {
        self.entries.iter().filter(|((_, l), _)| *l == ell).map(|(&(s, _), &v)| v * t.pow(s as u32)).sum()
    }
}

impl fmt::Display for BettiTable {
    /// Rows are `ℓ`, columns are homological degree `s`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return writeln!(f, "(zero ideal)");
        }
        let smax = self.entries.keys().map(|&(s, _)| s).max().unwrap_or(0);
        let lmin = self.entries.keys().map(|&(_, l)| l).min().unwrap_or(0);
        let lmax = self.entries.keys().map(|&(_, l)| l).max().unwrap_or(0);
        let width = self.entries.values().map(|v| v.to_string().len()).max().unwrap_or(1).max(smax.to_string().len());
        write!(f, "{:>6}", "")?;
        for s in 0..=smax {
            write!(f, " {s:>width$}")?;
        }
        writeln!(f)?;
        for ell in lmin..=lmax {
            write!(f, "{:>6}", format!("{ell}:"))?;
            for s in 0..=smax {
                match self.get(s, ell) {
                    0 => write!(f, " {:>width$}", "-")?,
                    v => write!(f, " {v:>width$}")?,
                }
            }
            writeln!(f)?;
        }
        write!(f, "{:>6}", "total:")?;
        for s in 0..=smax {
            let total: u64 = (lmin..=lmax).map(|ell| self.get(s, ell)).sum();
            write!(f, " {total:>width$}")?;
        }
        writeln!(f)
    }
}

/// Betti numbers from a reduced array: `b_{s,s+ℓ} = Σ_k C(k-1, s) m_{k,ℓ}`,
/// the coefficients of `Σ_s m_{s+1,ℓ} (1+t)^s`.
pub fn betti_from_array(array: &GeneratorArray) -> BettiTable {
    let mut entries = BTreeMap::new();
    for ell in array.d()..=array.r() {
        for k in 1..=array.n() - ell + 1 {
            let m = array.m(k, ell).max(0) as u64;
            for s in 0..k {
                *entries.entry((s, ell)).or_insert(0) += binomial(k as u64 - 1, s as i64).expect("small") * m;
            }
        }
    }
    BettiTable::from_entries(entries)
}

/// Betti table of a square-free strongly stable ideal.
pub fn betti_table(ideal: &MonomialIdeal) -> Result<BettiTable, BettiError> {
    if ideal.generators.is_empty() {
        return Ok(BettiTable::default());
    }
    if ideal.generators.iter().any(Monomial::is_one) {
        return Ok(BettiTable::from_entries([((0, 0), 1)]));
    }
    Ok(betti_from_array(&generator_array(ideal)?))
}

/// Betti table of the Stanley–Reisner ideal of the Alexander dual of a
/// shifted complex, from the h-triangle of the complex alone:
/// `Σ_s b_{s,s+ℓ} t^s = Σ_s h_{n-ℓ,s} (1+t)^s`.
pub fn betti_from_complex(c: &SimplicialComplex) -> Result<BettiTable, BettiError> {
    let h = h_triangle_shelling(c)?;
    let n = c.n() as usize;
    let mut entries = BTreeMap::new();
    for ell in 0..=n {
        let i = n - ell;
        if i > h.d() {
            continue;
        }
        for s in 0..=i {
            let m = h.get(i, s).max(0) as u64;
            for t in 0..=s {
                *entries.entry((t, ell)).or_insert(0) += binomial(s as u64, t as i64).expect("small") * m;
            }
        }
    }
    Ok(BettiTable::from_entries(entries))
}

/// Decides whether `μ` is the array of generators of a square-free strongly
/// stable ideal in `n` variables, by checking the h̃-triangle it determines.
/// A rejection is located by triangle cell; see [`triangle_cell_to_array`].
pub fn check_generator_array(array: &GeneratorArray, options: &CheckOptions) -> Result<Verdict, BettiError> {
    if let Some(v) = array.cumulative.iter().flatten().find(|&&v| v < 0) {
        return Err(BettiError::Shape(format!("negative entry {v}")));
    }
    let t = array.to_htriangle();
    if t.row(0) != [1] {
        return Ok(Verdict::Reject { condition: crate::characterization::Condition::A, i: 0, j: 0 });
    }
    Ok(check_htriangle_with(&t, options)?)
}
