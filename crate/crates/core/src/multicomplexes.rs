//! Monomials, multicomplexes, the a-cone and metacomplexes.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::complexes::Triangle;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MulticomplexError {
    #[error("monomial has {found} variables, expected {expected}")]
    VariableCount { expected: usize, found: usize },
    #[error("monomial {monomial} has degree above the cap {cap}")]
    DegreeCap { monomial: Monomial, cap: u32 },
    #[error("family is not closed under divisibility: {divisor} divides {monomial} but is missing")]
    NotClosed { monomial: Monomial, divisor: Monomial },
    #[error("malformed monomial {0:?}")]
    Parse(String),
}

/// A monomial `w_1^{e_1} ... w_r^{e_r}`, stored as its exponent vector.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    /// The unit monomial on `vars` variables.
    pub fn one(vars: usize) -> Self {
        Monomial { exps: vec![0; vars] }
    }

    /// `w_i` (1-based) on `vars` variables.
    pub fn var(vars: usize, i: usize) -> Self {
        let mut m = Monomial::one(vars);
        m.exps[i - 1] = 1;
        m
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn vars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    /// Exponent of `w_i` (1-based); zero past the last variable.
    pub fn exp(&self, i: usize) -> u32 {
        self.exps.get(i - 1).copied().unwrap_or(0)
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.len() == other.exps.len() && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `self · w_i` (1-based).
    pub fn times_var(&self, i: usize) -> Monomial {
        let mut m = self.clone();
        m.exps[i - 1] += 1;
        m
    }

    /// `self / w_i`, if `w_i` divides `self`.
    pub fn div_var(&self, i: usize) -> Option<Monomial> {
        (self.exp(i) > 0).then(|| {
            let mut m = self.clone();
            m.exps[i - 1] -= 1;
            m
        })
    }

    /// `w_s · (self / w_r)`, if `w_r` divides `self`.
    pub fn exchange(&self, r: usize, s: usize) -> Option<Monomial> {
        self.div_var(r).map(|m| m.times_var(s))
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.vars(), other.vars());
        Monomial { exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect() }
    }

    /// The same monomial viewed on `vars ≥ self.vars()` variables.
    pub fn extend(&self, vars: usize) -> Monomial {
        let mut exps = self.exps.clone();
        exps.resize(vars, 0);
        Monomial { exps }
    }

    /// Largest index of a variable dividing the monomial.
    pub fn max_var(&self) -> Option<usize> {
        self.exps.iter().rposition(|&e| e > 0).map(|i| i + 1)
    }

    /// Divisors obtained by removing one variable.
    pub fn lower_neighbours(&self) -> impl Iterator<Item = Monomial> + '_ {
        (1..=self.vars()).filter_map(move |i| self.div_var(i))
    }

    /// Renders with the given variable letter, e.g. `w1*w3*w4^2`.
    pub fn render(&self, letter: char) -> String {
        let parts: Vec<String> = self
            .exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| if e == 1 { format!("{letter}{}", i + 1) } else { format!("{letter}{}^{e}", i + 1) })
            .collect();
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }

    /// Parses `1` or a product like `w1*w3*w4^2` (any single letter) on
    /// `vars` variables.
    pub fn parse(s: &str, vars: usize) -> Result<Monomial, MulticomplexError> {
        let s = s.trim();
        let mut m = Monomial::one(vars);
        if s == "1" {
            return Ok(m);
        }
        let bad = || MulticomplexError::Parse(s.to_string());
        for factor in s.split('*') {
            let factor = factor.trim();
            let body = factor.get(1..).ok_or_else(bad)?;
            let (idx, e) = match body.split_once('^') {
                Some((i, e)) => (i, e.parse::<u32>().map_err(|_| bad())?),
                None => (body, 1),
            };
            let idx: usize = idx.parse().map_err(|_| bad())?;
            if idx == 0 || idx > vars {
                return Err(bad());
            }
            m.exps[idx - 1] += e;
        }
        Ok(m)
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render('w'))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render('w'))
    }
}

/// All monomials of exactly `degree` on `vars` variables, in lexicographic
/// order of exponent vectors.
pub fn monomials_of_degree(vars: usize, degree: u32) -> Vec<Monomial> {
    fn rec(vars: usize, left: u32, prefix: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if prefix.len() + 1 == vars {
            prefix.push(left);
            out.push(Monomial::new(prefix.clone()));
            prefix.pop();
            return;
        }
        for e in (0..=left).rev() {
            prefix.push(e);
            rec(vars, left - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if vars == 0 {
        if degree == 0 {
            out.push(Monomial::one(0));
        }
        return out;
    }
    rec(vars, degree, &mut Vec::with_capacity(vars), &mut out);
    out
}

/// All monomials of degree at most `cap` on `vars` variables.
pub fn monomials_up_to(vars: usize, cap: u32) -> Vec<Monomial> {
    (0..=cap).flat_map(|d| monomials_of_degree(vars, d)).collect()
}

/// A finite family of monomials on `w_1, ..., w_r` closed under divisibility.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Multicomplex {
    vars: usize,
    members: BTreeSet<Monomial>,
}

impl Multicomplex {
    /// The empty multicomplex.
    pub fn new(vars: usize) -> Self {
        Multicomplex { vars, members: BTreeSet::new() }
    }

    /// Closes `generators` under divisibility.
    pub fn from_generators<I: IntoIterator<Item = Monomial>>(vars: usize, generators: I) -> Result<Self, MulticomplexError> {
        let mut members = BTreeSet::new();
        let mut stack: Vec<Monomial> = Vec::new();
        for g in generators {
            check_vars(&g, vars)?;
            stack.push(g);
        }
        while let Some(m) = stack.pop() {
            if members.contains(&m) {
                continue;
            }
            stack.extend(m.lower_neighbours());
            members.insert(m);
        }
        Ok(Multicomplex { vars, members })
    }

    /// Takes `members` as is, rejecting families that are not closed under
    /// divisibility.
    pub fn from_members<I: IntoIterator<Item = Monomial>>(vars: usize, members: I) -> Result<Self, MulticomplexError> {
        let mut set = BTreeSet::new();
        for m in members {
            check_vars(&m, vars)?;
            set.insert(m);
        }
        for m in &set {
            for d in m.lower_neighbours() {
                if !set.contains(&d) {
                    return Err(MulticomplexError::NotClosed { monomial: m.clone(), divisor: d });
                }
            }
        }
        Ok(Multicomplex { vars, members: set })
    }

    pub(crate) fn from_set_unchecked(vars: usize, members: BTreeSet<Monomial>) -> Self {
        Multicomplex { vars, members }
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.members.contains(m)
    }

    pub fn members(&self) -> impl Iterator<Item = &Monomial> {
        self.members.iter()
    }

    pub fn max_degree(&self) -> Option<u32> {
        self.members.iter().map(|m| m.degree()).max()
    }

    pub fn of_degree(&self, degree: u32) -> impl Iterator<Item = &Monomial> {
        self.members.iter().filter(move |m| m.degree() == degree)
    }

    pub fn is_subset(&self, other: &Multicomplex) -> bool {
        self.vars == other.vars && self.members.is_subset(&other.members)
    }

    /// Checks closure under divisibility (always true for values built
    /// through the public constructors).
    pub fn is_closed(&self) -> bool {
        self.members.iter().all(|m| m.lower_neighbours().all(|d| self.members.contains(&d)))
    }
}

fn check_vars(m: &Monomial, vars: usize) -> Result<(), MulticomplexError> {
    if m.vars() != vars {
        return Err(MulticomplexError::VariableCount { expected: vars, found: m.vars() });
    }
    Ok(())
}

impl fmt::Debug for Multicomplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Multicomplex(vars={}, {})", self.vars, self)
    }
}

impl fmt::Display for Multicomplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut ms: Vec<&Monomial> = self.members.iter().collect();
        ms.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| b.cmp(a)));
        let parts: Vec<String> = ms.iter().map(|m| m.to_string()).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// True iff `w_s · (m / w_r)` stays inside for every member `m` and `r < s`.
pub fn is_shifted_multicomplex(m: &Multicomplex) -> bool {
    m.members.iter().all(|mono| {
        (1..=m.vars).all(|r| {
            mono.exp(r) == 0 || ((r + 1)..=m.vars).all(|s| m.members.contains(&mono.exchange(r, s).unwrap()))
        })
    })
}

/// `(f_0, f_1, ...)` with `f_i` the number of members of degree `i`.
pub fn mc_f_vector(m: &Multicomplex) -> Vec<u64> {
    let Some(top) = m.max_degree() else {
        return Vec::new();
    };
    let mut f = vec![0u64; top as usize + 1];
    for mono in &m.members {
        f[mono.degree() as usize] += 1;
    }
    f
}

/// The `a`-cone `{ w_{r+1}^ℓ · m : m ∈ M, deg m + ℓ < a }` on `r + 1`
/// variables.
pub fn a_cone(m: &Multicomplex, a: u32) -> Result<Multicomplex, MulticomplexError> {
    let vars = m.vars + 1;
    let mut out = BTreeSet::new();
    for mono in &m.members {
        let deg = mono.degree();
        if deg > a {
            return Err(MulticomplexError::DegreeCap { monomial: mono.clone(), cap: a });
        }
        let base = mono.extend(vars);
        let mut power = base;
        for _ in deg..a {
            out.insert(power.clone());
            power = power.times_var(vars);
        }
    }
    Ok(Multicomplex::from_set_unchecked(vars, out))
}

/// A sequence `(M^[0], ..., M^[d])` with `M^[i]` a multicomplex on `n - i`
/// variables of degree at most `i`, linked by `C^i M^[i] ⊆ M^[i-1]`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Metacomplex {
    n: u32,
    levels: Vec<Multicomplex>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MetacomplexViolation {
    #[error("metacomplex needs at least one level, and at most n + 1")]
    LevelCount,
    #[error("level {level} lives on {found} variables, expected {expected}")]
    Variables { level: usize, expected: usize, found: usize },
    #[error("level {level} contains {monomial} of degree above {level}")]
    DegreeCap { level: usize, monomial: Monomial },
    #[error("level {level} is not closed under divisibility")]
    NotClosed { level: usize },
    #[error("the cone of level {level} is not contained in level {}: {monomial} is missing", level - 1)]
    ConeContainment { level: usize, monomial: Monomial },
}

impl Metacomplex {
    pub fn new(n: u32, levels: Vec<Multicomplex>) -> Self {
        Metacomplex { n, levels }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Index of the last level.
    pub fn d(&self) -> usize {
        self.levels.len().saturating_sub(1)
    }

    pub fn levels(&self) -> &[Multicomplex] {
        &self.levels
    }

    pub fn level(&self, i: usize) -> &Multicomplex {
        &self.levels[i]
    }

    /// Checks both metacomplex axioms, reporting the first violation.
    pub fn validate(&self) -> Result<(), MetacomplexViolation> {
        if self.levels.is_empty() || self.levels.len() > self.n as usize + 1 {
            return Err(MetacomplexViolation::LevelCount);
        }
        for (i, level) in self.levels.iter().enumerate() {
            let expected = self.n as usize - i;
            if level.vars() != expected {
                return Err(MetacomplexViolation::Variables { level: i, expected, found: level.vars() });
            }
            if let Some(m) = level.members().find(|m| m.degree() > i as u32) {
                return Err(MetacomplexViolation::DegreeCap { level: i, monomial: m.clone() });
            }
            if !level.is_closed() {
                return Err(MetacomplexViolation::NotClosed { level: i });
            }
        }
        for i in 1..self.levels.len() {
            let cone = a_cone(&self.levels[i], i as u32).expect("degree cap checked above");
            let missing = cone.members().find(|m| !self.levels[i - 1].contains(m)).cloned();
            if let Some(monomial) = missing {
                return Err(MetacomplexViolation::ConeContainment { level: i, monomial });
            }
        }
        Ok(())
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_ok()
    }

    pub fn is_shifted(&self) -> bool {
        self.levels.iter().all(is_shifted_multicomplex)
    }

    /// Row `i` is the f-vector of `M^[i]` padded with zeros to length `i + 1`.
    pub fn f_triangle(&self) -> Triangle {
        let rows = self
            .levels
            .iter()
            .enumerate()
            .map(|(i, level)| {
                let mut row = vec![0i64; i + 1];
                for m in level.members() {
                    if let Some(slot) = row.get_mut(m.degree() as usize) {
                        *slot += 1;
                    }
                }
                row
            })
            .collect();
        Triangle::new(rows).expect("rows are padded to shape")
    }
}

impl fmt::Debug for Metacomplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Metacomplex(n={}", self.n)?;
        for (i, l) in self.levels.iter().enumerate() {
            write!(f, ", M[{i}]={l}")?;
        }
        f.write_str(")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(vars: usize, s: &str) -> Monomial {
        Monomial::parse(s, vars).unwrap()
    }

    fn mc(vars: usize, members: &[&str]) -> Multicomplex {
        Multicomplex::from_members(vars, members.iter().map(|s| mono(vars, s))).unwrap()
    }

    #[test]
    fn monomial_parsing_and_rendering() {
        let m = mono(6, "w1*w3*w4^2");
        assert_eq!(m.exps(), &[1, 0, 1, 2, 0, 0]);
        assert_eq!(m.to_string(), "w1*w3*w4^2");
        assert_eq!(m.render('u'), "u1*u3*u4^2");
        assert_eq!(mono(2, "1"), Monomial::one(2));
        assert!(Monomial::parse("w3", 2).is_err());
        assert!(Monomial::parse("w", 2).is_err());
    }

    #[test]
    fn closure_from_generators() {
        let m = Multicomplex::from_generators(2, [mono(2, "w1*w2")]).unwrap();
        assert_eq!(mc_f_vector(&m), vec![1, 2, 1]);
        assert!(matches!(
            Multicomplex::from_members(2, [mono(2, "w1")]),
            Err(MulticomplexError::NotClosed { .. })
        ));
    }

    #[test]
    fn shifted_multicomplexes() {
        assert!(is_shifted_multicomplex(&mc(1, &["1", "w1"])));
        assert!(!is_shifted_multicomplex(&mc(2, &["1", "w1"])));
        assert!(is_shifted_multicomplex(&mc(2, &["1", "w1", "w2", "w2^2"])));
    }

    #[test]
    fn f_vectors() {
        assert_eq!(mc_f_vector(&mc(1, &["1", "w1"])), vec![1, 1]);
        assert_eq!(mc_f_vector(&mc(1, &["1"])), vec![1]);
        assert_eq!(mc_f_vector(&mc(2, &["1", "w1", "w2", "w1*w2"])), vec![1, 2, 1]);
        assert!(mc_f_vector(&Multicomplex::new(3)).is_empty());
    }

    #[test]
    fn cones() {
        assert_eq!(a_cone(&mc(1, &["1", "w1"]), 2).unwrap(), mc(2, &["1", "w2", "w1"]));
        assert_eq!(a_cone(&mc(1, &["1"]), 1).unwrap(), mc(2, &["1"]));
        assert_eq!(
            a_cone(&mc(1, &["1", "w1", "w1^2"]), 3).unwrap(),
            mc(2, &["1", "w2", "w2^2", "w1", "w1*w2", "w1^2"])
        );
        assert!(matches!(a_cone(&mc(1, &["1", "w1", "w1^2"]), 1), Err(MulticomplexError::DegreeCap { .. })));
    }

    #[test]
    fn metacomplex_axioms() {
        let good = Metacomplex::new(3, vec![mc(3, &["1"]), mc(2, &["1", "w1", "w2"]), mc(1, &["1"])]);
        assert!(good.is_valid());
        let expected = Triangle::new(vec![vec![1], vec![1, 2], vec![1, 0, 0]]).unwrap();
        assert_eq!(good.f_triangle(), expected);

        let bad = Metacomplex::new(3, vec![mc(3, &["1"]), mc(2, &["1"]), mc(1, &["1"])]);
        assert!(matches!(bad.validate(), Err(MetacomplexViolation::ConeContainment { level: 2, .. })));

        let single = Metacomplex::new(3, vec![mc(3, &["1"])]);
        assert!(single.is_valid());
        assert_eq!(single.f_triangle(), Triangle::new(vec![vec![1]]).unwrap());

        let capped = Metacomplex::new(2, vec![mc(2, &["1", "w1"])]);
        assert!(matches!(capped.validate(), Err(MetacomplexViolation::DegreeCap { level: 0, .. })));
    }

    #[test]
    fn monomial_listing() {
        assert_eq!(monomials_of_degree(2, 2).len(), 3);
        assert_eq!(monomials_up_to(3, 2).len(), 10);
        assert_eq!(monomials_of_degree(0, 0), vec![Monomial::one(0)]);
        assert!(monomials_of_degree(0, 1).is_empty());
    }
}
