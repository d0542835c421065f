//! Lattice paths and the correspondence between shifted multicomplexes and
//! pure shifted complexes.
//!
//! A path from `(0,0)` to `(r,a)` is read two ways: `nu` records the
//! positions of its north steps (an `a`-subset of `[r+a]`), `lambda` records
//! how many north steps sit in each column `x = 0..r-1` (a monomial on
//! `w_1..w_r` of degree at most `a`; north steps in the last column `x = r`
//! carry no variable). `phi = nu ∘ lambda⁻¹` and `psi = lambda ∘ nu⁻¹`.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::complexes::{is_shifted, pure_skeleton, Face, SimplicialComplex, MAX_VERTICES};
use crate::multicomplexes::{is_shifted_multicomplex, Metacomplex, MetacomplexViolation, Monomial, Multicomplex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CorrespondenceError {
    #[error("lattice path literal may only contain 'N' and 'E' (found {0:?})")]
    BadStep(char),
    #[error("set has {found} elements, expected {expected}")]
    SetSize { expected: usize, found: usize },
    #[error("set element {element} is outside [1, {bound}]")]
    SetRange { element: u32, bound: u32 },
    #[error("monomial of degree {degree} does not fit below height {a}")]
    DegreeTooLarge { degree: u32, a: u32 },
    #[error("paths end at different points ({0:?} vs {1:?})")]
    Endpoints((u32, u32), (u32, u32)),
    #[error("paths longer than {MAX_VERTICES} steps are not supported")]
    TooLong,
    #[error("input is not shifted")]
    NotShifted,
    #[error("complex is not pure")]
    NotPure,
    #[error("the void complex has no multicomplex")]
    Void,
    #[error("invalid metacomplex: {0}")]
    Metacomplex(#[from] MetacomplexViolation),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Step {
    N,
    E,
}

/// A word over `{N, E}`: a lattice path from `(0,0)` to `(#E, #N)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LatticePath {
    steps: Vec<Step>,
}

impl LatticePath {
    pub fn new(steps: Vec<Step>) -> Self {
        LatticePath { steps }
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    /// Number of east steps.
    pub fn r(&self) -> u32 {
        self.steps.iter().filter(|s| **s == Step::E).count() as u32
    }

    /// Number of north steps.
    pub fn a(&self) -> u32 {
        self.steps.len() as u32 - self.r()
    }

    /// Height after each step.
    pub fn heights(&self) -> impl Iterator<Item = u32> + '_ {
        self.steps.iter().scan(0u32, |h, s| {
            if *s == Step::N {
                *h += 1;
            }
            Some(*h)
        })
    }

    /// Every path from `(0,0)` to `(r,a)`.
    pub fn all(r: u32, a: u32) -> Vec<LatticePath> {
        let len = r + a;
        (0u64..1 << len)
            .filter(|bits| bits.count_ones() == a)
            .map(|bits| {
                let steps = (0..len).map(|i| if bits >> i & 1 == 1 { Step::N } else { Step::E }).collect();
                LatticePath { steps }
            })
            .collect()
    }
}

impl FromStr for LatticePath {
    type Err = CorrespondenceError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let steps = s
            .chars()
            .map(|c| match c {
                'N' => Ok(Step::N),
                'E' => Ok(Step::E),
                other => Err(CorrespondenceError::BadStep(other)),
            })
            .collect::<Result<Vec<_>, _>>()?;
        if steps.len() > MAX_VERTICES as usize {
            return Err(CorrespondenceError::TooLong);
        }
        Ok(LatticePath { steps })
    }
}

impl fmt::Display for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            f.write_str(match s {
                Step::N => "N",
                Step::E => "E",
            })?;
        }
        Ok(())
    }
}

impl fmt::Debug for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LatticePath({self})")
    }
}

/// Positions (1-based) of the north steps.
pub fn nu(path: &LatticePath) -> Face {
    let positions = path
        .steps
        .iter()
        .enumerate()
        .filter(|(_, s)| **s == Step::N)
        .map(|(i, _)| i as u32 + 1);
    Face::from_vertices(positions).expect("path length is bounded")
}

/// The path from `(0,0)` to `(r,a)` whose north steps sit at the positions in `set`.
pub fn nu_inverse(set: Face, r: u32, a: u32) -> Result<LatticePath, CorrespondenceError> {
    let len = r + a;
    if len > MAX_VERTICES {
        return Err(CorrespondenceError::TooLong);
    }
    if set.len() != a as usize {
        return Err(CorrespondenceError::SetSize { expected: a as usize, found: set.len() });
    }
    if let Some(max) = set.max_vertex().filter(|&m| m > len) {
        return Err(CorrespondenceError::SetRange { element: max, bound: len });
    }
    let steps = (1..=len).map(|i| if set.contains(i) { Step::N } else { Step::E }).collect();
    Ok(LatticePath { steps })
}

/// Column counts of north steps as a monomial on `w_1..w_r`.
pub fn lambda(path: &LatticePath) -> Monomial {
    let r = path.r() as usize;
    let mut exps = vec![0u32; r];
    let mut x = 0usize;
    for s in &path.steps {
        match s {
            Step::E => x += 1,
            Step::N if x < r => exps[x] += 1,
            Step::N => {}
        }
    }
    Monomial::new(exps)
}

/// The path from `(0,0)` to `(r,a)`, `r = m.vars()`, with `λ = m`; the
/// remaining `a - deg m` north steps go in the last column.
pub fn lambda_inverse(m: &Monomial, a: u32) -> Result<LatticePath, CorrespondenceError> {
    let degree = m.degree();
    if degree > a {
        return Err(CorrespondenceError::DegreeTooLarge { degree, a });
    }
    let r = m.vars();
    if r + a as usize > MAX_VERTICES as usize {
        return Err(CorrespondenceError::TooLong);
    }
    let mut steps = Vec::with_capacity(r + a as usize);
    for &e in m.exps() {
        steps.extend(std::iter::repeat_n(Step::N, e as usize));
        steps.push(Step::E);
    }
    steps.extend(std::iter::repeat_n(Step::N, (a - degree) as usize));
    Ok(LatticePath { steps })
}

/// True iff `lower` never goes above `upper`.
pub fn path_leq(lower: &LatticePath, upper: &LatticePath) -> Result<bool, CorrespondenceError> {
    let (p, q) = ((lower.r(), lower.a()), (upper.r(), upper.a()));
    if p != q {
        return Err(CorrespondenceError::Endpoints(p, q));
    }
    Ok(lower.heights().zip(upper.heights()).all(|(x, y)| x <= y))
}

/// `φ^a(m) = ν(λ⁻¹(m))`, an `a`-subset of `[r + a]` where `r = m.vars()`.
pub fn phi(m: &Monomial, a: u32) -> Result<Face, CorrespondenceError> {
    Ok(nu(&lambda_inverse(m, a)?))
}

/// `ψ(S) = λ(ν⁻¹(S))`, a monomial on `r` variables.
pub fn psi(set: Face, r: u32, a: u32) -> Result<Monomial, CorrespondenceError> {
    Ok(lambda(&nu_inverse(set, r, a)?))
}

/// `Φ^a(M)`: the pure complex on `[r + a]` whose facets are `φ^a(M)`.
pub fn phi_complex(m: &Multicomplex, a: u32) -> Result<SimplicialComplex, CorrespondenceError> {
    if !is_shifted_multicomplex(m) {
        return Err(CorrespondenceError::NotShifted);
    }
    let n = m.vars() as u32 + a;
    if n > MAX_VERTICES {
        return Err(CorrespondenceError::TooLong);
    }
    let facets = m.members().map(|mono| phi(mono, a)).collect::<Result<Vec<_>, _>>()?;
    Ok(SimplicialComplex::from_facets(n, facets).expect("φ lands inside [r + a]"))
}

/// `Ψ(Δ)`: the multicomplex `{ψ(F) : F a facet}` of a pure shifted complex,
/// on `n - a` variables where `a` is the facet size.
pub fn psi_multicomplex(c: &SimplicialComplex) -> Result<Multicomplex, CorrespondenceError> {
    if c.is_void() {
        return Err(CorrespondenceError::Void);
    }
    if !c.is_pure() {
        return Err(CorrespondenceError::NotPure);
    }
    if !is_shifted(c) {
        return Err(CorrespondenceError::NotShifted);
    }
    psi_facets(c.n(), c.d() as u32, c.facets())
}

fn psi_facets(n: u32, a: u32, facets: &[Face]) -> Result<Multicomplex, CorrespondenceError> {
    let r = n - a;
    let members = facets.iter().map(|&f| psi(f, r, a)).collect::<Result<Vec<_>, _>>()?;
    Multicomplex::from_members(r as usize, members).map_err(|_| CorrespondenceError::NotShifted)
}

/// `Φ̄(𝓜)`: the complex on `[n]` whose `i`-element faces are `φ^i(M^[i])`.
pub fn phi_bar(mc: &Metacomplex) -> Result<SimplicialComplex, CorrespondenceError> {
    mc.validate()?;
    if !mc.is_shifted() {
        return Err(CorrespondenceError::NotShifted);
    }
    let mut faces = Vec::new();
    for (i, level) in mc.levels().iter().enumerate() {
        for m in level.members() {
            faces.push(phi(m, i as u32)?);
        }
    }
    Ok(SimplicialComplex::from_facets(mc.n(), faces).expect("φ lands inside [n]"))
}

/// `Ψ̄(Δ)`: level `i` is `Ψ` of the pure `(i-1)`-skeleton.
pub fn psi_bar(c: &SimplicialComplex) -> Result<Metacomplex, CorrespondenceError> {
    if c.is_void() {
        return Err(CorrespondenceError::Void);
    }
    if !is_shifted(c) {
        return Err(CorrespondenceError::NotShifted);
    }
    let mut levels = Vec::with_capacity(c.d() + 1);
    for i in 0..=c.d() {
        let skel = pure_skeleton(c, i as i64 - 1).expect("i - 1 ≤ dim");
        levels.push(psi_facets(c.n(), i as u32, skel.facets())?);
    }
    Ok(Metacomplex::new(c.n(), levels))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(s: &str) -> LatticePath {
        s.parse().unwrap()
    }

    fn face(v: &[u32]) -> Face {
        Face::from_vertices(v.iter().copied()).unwrap()
    }

    fn mono(vars: usize, s: &str) -> Monomial {
        Monomial::parse(s, vars).unwrap()
    }

    fn mc(vars: usize, members: &[&str]) -> Multicomplex {
        Multicomplex::from_members(vars, members.iter().map(|s| mono(vars, s))).unwrap()
    }

    #[test]
    fn nu_examples() {
        assert_eq!(nu(&path("NEENENNEEEN")), face(&[1, 4, 6, 7, 11]));
        assert_eq!(nu(&path("EEN")), face(&[3]));
        assert_eq!(nu_inverse(face(&[2, 3]), 1, 2).unwrap(), path("ENN"));
        assert!(matches!(nu_inverse(face(&[2]), 1, 2), Err(CorrespondenceError::SetSize { .. })));
        assert!(matches!(nu_inverse(face(&[2, 4]), 1, 2), Err(CorrespondenceError::SetRange { .. })));
    }

    #[test]
    fn lambda_examples() {
        let l = path("NEENENNEEEN");
        assert_eq!((l.r(), l.a()), (6, 5));
        assert_eq!(lambda(&l), mono(6, "w1*w3*w4^2"));
        assert_eq!(lambda(&path("EEN")), Monomial::one(2));
        assert_eq!(lambda_inverse(&mono(1, "w1"), 2).unwrap(), path("NEN"));
        assert!(matches!(lambda_inverse(&mono(1, "w1^3"), 2), Err(CorrespondenceError::DegreeTooLarge { .. })));
    }

    #[test]
    fn path_order() {
        assert!(path_leq(&path("EEN"), &path("NEE")).unwrap());
        assert!(!path_leq(&path("NEE"), &path("EEN")).unwrap());
        assert!(path_leq(&path("NEN"), &path("NEN")).unwrap());
        assert!(path_leq(&path("NE"), &path("NNE")).is_err());
        assert!("NEX".parse::<LatticePath>().is_err());
    }

    #[test]
    fn phi_psi_examples() {
        assert_eq!(phi(&mono(6, "w1*w3*w4^2"), 5).unwrap(), face(&[1, 4, 6, 7, 11]));
        assert_eq!(phi(&Monomial::one(1), 2).unwrap(), face(&[2, 3]));
        assert_eq!(psi(face(&[2, 3]), 1, 2).unwrap(), Monomial::one(1));
    }

    #[test]
    fn complex_level_maps() {
        let m = mc(1, &["1", "w1"]);
        let c = phi_complex(&m, 2).unwrap();
        assert_eq!(c, SimplicialComplex::from_vertex_lists(3, &[&[2, 3], &[1, 3]]).unwrap());
        assert_eq!(psi_multicomplex(&c).unwrap(), m);
        assert_eq!(
            phi_complex(&mc(0, &["1"]), 1).unwrap(),
            SimplicialComplex::from_vertex_lists(1, &[&[1]]).unwrap()
        );
        assert_eq!(phi_complex(&mc(2, &["1", "w1"]), 2), Err(CorrespondenceError::NotShifted));
        let nonpure = SimplicialComplex::from_vertex_lists(3, &[&[2, 3], &[1]]).unwrap();
        assert_eq!(psi_multicomplex(&nonpure), Err(CorrespondenceError::NotPure));
    }

    #[test]
    fn extended_maps() {
        let c = SimplicialComplex::from_vertex_lists(3, &[&[2, 3], &[1]]).unwrap();
        let meta = psi_bar(&c).unwrap();
        assert_eq!(meta.levels(), &[mc(3, &["1"]), mc(2, &["1", "w1", "w2"]), mc(1, &["1"])]);
        assert_eq!(phi_bar(&meta).unwrap(), c);

        let empty = SimplicialComplex::empty(3);
        let meta = psi_bar(&empty).unwrap();
        assert_eq!(meta.levels(), &[mc(3, &["1"])]);
        assert_eq!(phi_bar(&meta).unwrap(), empty);
    }
}
