//! Composition spaces, the monomial order `<_π`, and the composition axioms.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

use super::CharacterizationError;
use crate::macaulay::{boundary, is_m_sequence};
use crate::multicomplexes::{monomials_up_to, Monomial};

/// Whether composition values may be zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Positivity {
    /// Values range over the non-negative integers.
    #[default]
    AllowZero,
    /// Values must be at least 1.
    Strict,
}

impl Positivity {
    pub fn floor(self) -> u64 {
        match self {
            Positivity::AllowZero => 0,
            Positivity::Strict => 1,
        }
    }
}

impl fmt::Display for Positivity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Positivity::AllowZero => "allow-zero",
            Positivity::Strict => "strict",
        })
    }
}

/// The total order on monomials in `u_1, ..., u_v` that compares exponents
/// from the highest variable down: `1 < u_1 < u_1^2 < ... < u_2 < u_1 u_2 < ...`.
///
/// It is a linear extension of the componentwise product order and of every
/// up-exchange `u_i → u_j`, `i < j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PiOrder {
    vars: usize,
}

impl PiOrder {
    pub fn new(vars: usize) -> Self {
        PiOrder { vars }
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.vars(), self.vars);
        a.exps().iter().rev().cmp(b.exps().iter().rev())
    }

    /// Every monomial of degree at most `cap`, sorted by this order.
    pub fn sorted(&self, cap: u32) -> Vec<Monomial> {
        let mut ms = monomials_up_to(self.vars, cap);
        ms.sort_by(|a, b| self.compare(a, b));
        ms
    }
}

/// Per-monomial structure of a space, indexed by position in `<_π` order.
#[derive(Debug, Clone)]
pub(crate) struct Node {
    pub degree: u32,
    /// Divisible by the top variable `u_v`.
    pub top: bool,
    /// Monomials `m''` with `m = u_j (m''/u_i)`, `i < j`.
    pub exchange_preds: Vec<usize>,
    /// Monomials `m / u_j`.
    pub divisors: Vec<usize>,
    /// Monomials `u_j (m/u_i)`, `i < j`.
    pub exchange_succs: Vec<usize>,
    /// Monomials `m · u_j` of degree at most the cap.
    pub multiples: Vec<usize>,
}

/// The domain of an `M`-array: monomials of degree at most `cap` on `vars`
/// variables, together with the M-sequence `h` that bounds the values
/// from below.
#[derive(Clone)]
pub struct CompositionSpace {
    vars: usize,
    cap: u32,
    h: Vec<u64>,
    positivity: Positivity,
    monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
    pub(crate) nodes: Vec<Node>,
}

impl CompositionSpace {
    pub fn new(vars: usize, cap: u32, h: Vec<u64>) -> Result<Self, CharacterizationError> {
        if vars == 0 || cap == 0 {
            return Err(CharacterizationError::InvalidSpace(format!(
                "need at least one variable and a positive degree cap (vars = {vars}, cap = {cap})"
            )));
        }
        if !is_m_sequence(&h) {
            return Err(CharacterizationError::InvalidSpace(format!("{h:?} is not an M-sequence")));
        }
        let monomials = PiOrder::new(vars).sorted(cap);
        let index: HashMap<Monomial, usize> = monomials.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        let nodes = monomials
            .iter()
            .map(|m| {
                let degree = m.degree();
                let mut exchange_preds = Vec::new();
                let mut exchange_succs = Vec::new();
                for i in 1..=vars {
                    for j in (i + 1)..=vars {
                        if let Some(p) = m.exchange(j, i) {
                            exchange_preds.push(index[&p]);
                        }
                        if let Some(s) = m.exchange(i, j) {
                            exchange_succs.push(index[&s]);
                        }
                    }
                }
                let divisors = m.lower_neighbours().map(|d| index[&d]).collect();
                let multiples = if degree < cap {
                    (1..=vars).map(|j| index[&m.times_var(j)]).collect()
                } else {
                    Vec::new()
                };
                Node { degree, top: m.exp(vars) > 0, exchange_preds, divisors, exchange_succs, multiples }
            })
            .collect();
        Ok(CompositionSpace { vars, cap, h, positivity: Positivity::default(), monomials, index, nodes })
    }

    pub fn with_positivity(mut self, positivity: Positivity) -> Self {
        self.positivity = positivity;
        self
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn cap(&self) -> u32 {
        self.cap
    }

    pub fn h(&self) -> &[u64] {
        &self.h
    }

    pub fn positivity(&self) -> Positivity {
        self.positivity
    }

    /// `h_ℓ`, zero past the end of `h`.
    pub fn h_at(&self, ell: u32) -> u64 {
        self.h.get(ell as usize).copied().unwrap_or(0)
    }

    /// Smallest admissible value at a monomial of degree `cap - ell`.
    pub fn floor(&self, ell: u32) -> u64 {
        self.h_at(ell).max(self.positivity.floor())
    }

    /// Monomials in `<_π` order.
    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn index_of(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }

    /// `ℓ = cap - deg m` for the monomial at `idx`.
    pub fn ell(&self, idx: usize) -> u32 {
        self.cap - self.nodes[idx].degree
    }

    /// The least total mass of any composition, or `None` on overflow.
    pub fn minimum_mass(&self) -> Option<u64> {
        let values = self.least_values(&[])?;
        values.iter().try_fold(0u64, |acc, v| acc.checked_add(*v))
    }

    /// Propagates lower bounds in `<_π` order starting from the fixed
    /// `prefix`; each remaining value is the least one the axioms allow.
    pub(crate) fn least_values(&self, prefix: &[u64]) -> Option<Vec<u64>> {
        let mut values = prefix.to_vec();
        values.reserve(self.len() - prefix.len());
        for idx in prefix.len()..self.len() {
            values.push(self.lower_bound(idx, &values)?);
        }
        Some(values)
    }

    /// Least value at `idx` given the values of all `<_π`-earlier monomials.
    pub(crate) fn lower_bound(&self, idx: usize, values: &[u64]) -> Option<u64> {
        let node = &self.nodes[idx];
        if node.degree == self.cap {
            return Some(1);
        }
        let mut lb = self.floor(self.ell(idx));
        for &p in &node.exchange_preds {
            lb = lb.max(values[p]);
        }
        for &p in &node.divisors {
            lb = lb.max(boundary(values[p], self.ell(p)).ok()?);
        }
        Some(lb)
    }
}

impl fmt::Debug for CompositionSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CompositionSpace(vars={}, cap={}, h={:?}, {})", self.vars, self.cap, self.h, self.positivity)
    }
}

impl PartialEq for CompositionSpace {
    fn eq(&self, other: &Self) -> bool {
        self.vars == other.vars && self.cap == other.cap && self.h == other.h && self.positivity == other.positivity
    }
}

impl Eq for CompositionSpace {}

/// An assignment `m ↦ q^m` of non-negative integers to every monomial of a
/// [`CompositionSpace`].
#[derive(Clone, PartialEq, Eq)]
pub struct Composition {
    space: CompositionSpace,
    values: Vec<u64>,
}

impl Composition {
    /// Values listed in `<_π` order.
    pub fn from_values(space: CompositionSpace, values: Vec<u64>) -> Result<Self, CharacterizationError> {
        if values.len() != space.len() {
            return Err(CharacterizationError::WrongLength { expected: space.len(), found: values.len() });
        }
        Ok(Composition { space, values })
    }

    /// Every monomial of the space must be assigned exactly once.
    pub fn from_assignments<I>(space: CompositionSpace, assignments: I) -> Result<Self, CharacterizationError>
    where
        I: IntoIterator<Item = (Monomial, u64)>,
    {
        let mut values: Vec<Option<u64>> = vec![None; space.len()];
        for (m, q) in assignments {
            let idx = space.index_of(&m).ok_or_else(|| CharacterizationError::UnknownMonomial(m.clone()))?;
            values[idx] = Some(q);
        }
        let values = values
            .into_iter()
            .enumerate()
            .map(|(i, v)| v.ok_or_else(|| CharacterizationError::MissingAssignment(space.monomials[i].clone())))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Composition { space, values })
    }

    pub fn space(&self) -> &CompositionSpace {
        &self.space
    }

    /// Values in `<_π` order.
    pub fn values(&self) -> &[u64] {
        &self.values
    }

    pub fn get(&self, m: &Monomial) -> Option<u64> {
        self.space.index_of(m).map(|i| self.values[i])
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Monomial, u64)> {
        self.space.monomials.iter().zip(self.values.iter().copied())
    }

    pub fn total(&self) -> u64 {
        self.values.iter().sum()
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, (m, q)) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}↦{q}", m.render('u'))?;
        }
        write!(f, "}}")
    }
}

impl fmt::Display for Composition {
    /// One `monomial value` pair per line.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (m, q) in self.iter() {
            writeln!(f, "{} {q}", m.render('u'))?;
        }
        Ok(())
    }
}

/// The first composition axiom a candidate violates.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CompositionViolation {
    #[error("exchange monotonicity: q^{from} = {from_value} > q^{to} = {to_value}")]
    ExchangeMonotonicity { from: String, to: String, from_value: u64, to_value: u64 },
    #[error("top degree: q^{monomial} = {value}, expected 1")]
    TopDegree { monomial: String, value: u64 },
    #[error("boundary: ∂^{ell}(q^{from}) = {bound} > q^{to} = {to_value}")]
    Boundary { from: String, to: String, ell: u32, bound: u64, to_value: u64 },
    #[error("lower bound: q^{monomial} = {value} < {bound}")]
    LowerBound { monomial: String, value: u64, bound: u64 },
    #[error("total mass {found}, expected {expected}")]
    Sum { expected: u64, found: u64 },
}

/// Checks the three array axioms, the lower bounds from `h` (and the
/// positivity convention), and that the values sum to `r`.
pub fn validate_composition(comp: &Composition, r: u64) -> Result<(), CompositionViolation> {
    let space = &comp.space;
    let q = &comp.values;
    let name = |i: usize| space.monomials[i].render('u');
    for (i, node) in space.nodes.iter().enumerate() {
        for &s in &node.exchange_succs {
            if q[i] > q[s] {
                return Err(CompositionViolation::ExchangeMonotonicity {
                    from: name(i),
                    to: name(s),
                    from_value: q[i],
                    to_value: q[s],
                });
            }
        }
    }
    for (i, node) in space.nodes.iter().enumerate() {
        if node.degree == space.cap && q[i] != 1 {
            return Err(CompositionViolation::TopDegree { monomial: name(i), value: q[i] });
        }
    }
    for (i, node) in space.nodes.iter().enumerate() {
        let ell = space.ell(i);
        for &s in &node.multiples {
            let bound = boundary(q[i], ell).unwrap_or(u64::MAX);
            if bound > q[s] {
                return Err(CompositionViolation::Boundary { from: name(i), to: name(s), ell, bound, to_value: q[s] });
            }
        }
    }
    for (i, &value) in q.iter().enumerate() {
        let bound = space.floor(space.ell(i));
        if value < bound {
            return Err(CompositionViolation::LowerBound { monomial: name(i), value, bound });
        }
    }
    let total = comp.total();
    if total != r {
        return Err(CompositionViolation::Sum { expected: r, found: total });
    }
    Ok(())
}

/// `Σ_v 𝒟`: the total value on monomials divisible by the top variable.
pub fn sigma_top(comp: &Composition) -> u64 {
    comp.space.nodes.iter().zip(&comp.values).filter(|(n, _)| n.top).map(|(_, v)| v).sum()
}
