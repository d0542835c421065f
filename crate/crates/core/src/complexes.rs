//! Simplicial complexes on `[n]`, their skeleta, f- and h-vectors, the
//! h̃- and h-triangles, shiftedness and Alexander duality.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;

use thiserror::Error;

use crate::macaulay::{binomial, MacaulayError};

/// Largest supported ground set.
pub const MAX_VERTICES: u32 = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ComplexError {
    #[error("vertex {vertex} is outside the ground set [1, {n}]")]
    VertexOutOfRange { vertex: u32, n: u32 },
    #[error("ground sets larger than {MAX_VERTICES} are not supported")]
    GroundSetTooLarge,
    #[error("skeleton dimension {requested} exceeds the complex dimension {dim}")]
    SkeletonTooLarge { requested: i64, dim: i64 },
    #[error("the void complex has no h̃-triangle")]
    Void,
    #[error("complex is not shifted")]
    NotShifted,
    #[error("triangle row {row} has {len} entries, expected {expected}")]
    Shape { row: usize, len: usize, expected: usize },
    #[error(transparent)]
    Arithmetic(#[from] MacaulayError),
}

/// A finite subset of `[n]`, stored as a bit set (vertex `v` is bit `v-1`).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Face(u64);

impl Face {
    pub const EMPTY: Face = Face(0);

    pub fn from_vertices<I: IntoIterator<Item = u32>>(vertices: I) -> Result<Face, ComplexError> {
        let mut bits = 0u64;
        for v in vertices {
            if v == 0 || v > MAX_VERTICES {
                return Err(ComplexError::VertexOutOfRange { vertex: v, n: MAX_VERTICES });
            }
            bits |= 1 << (v - 1);
        }
        Ok(Face(bits))
    }

    pub const fn from_bits(bits: u64) -> Face {
        Face(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// The segment `{lo, ..., hi}` (empty when `lo > hi`).
    pub fn segment(lo: u32, hi: u32) -> Face {
        if lo > hi || hi == 0 {
            return Face::EMPTY;
        }
        let lo = lo.max(1);
        let upper = if hi >= 64 { u64::MAX } else { (1u64 << hi) - 1 };
        let lower = (1u64 << (lo - 1)) - 1;
        Face(upper & !lower)
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Dimension, `-1` for the empty face.
    pub fn dim(self) -> i64 {
        self.len() as i64 - 1
    }

    pub fn contains(self, v: u32) -> bool {
        (1..=64).contains(&v) && self.0 & (1 << (v - 1)) != 0
    }

    pub fn is_subset(self, other: Face) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn with(self, v: u32) -> Face {
        Face(self.0 | 1 << (v - 1))
    }

    pub fn without(self, v: u32) -> Face {
        Face(self.0 & !(1 << (v - 1)))
    }

    pub fn union(self, other: Face) -> Face {
        Face(self.0 | other.0)
    }

    pub fn difference(self, other: Face) -> Face {
        Face(self.0 & !other.0)
    }

    /// Largest vertex, if any.
    pub fn max_vertex(self) -> Option<u32> {
        (self.0 != 0).then(|| 64 - self.0.leading_zeros())
    }

    /// Vertices in increasing order.
    pub fn vertices(self) -> impl Iterator<Item = u32> {
        let bits = self.0;
        (1..=64u32).filter(move |&v| bits & (1 << (v - 1)) != 0)
    }

    /// All subsets of this face, including the empty face and the face itself.
    pub fn subfaces(self) -> impl Iterator<Item = Face> {
        let full = self.0;
        let mut sub = full;
        let mut done = false;
        std::iter::from_fn(move || {
            if done {
                return None;
            }
            let out = Face(sub);
            if sub == 0 {
                done = true;
            } else {
                sub = (sub - 1) & full;
            }
            Some(out)
        })
    }

    /// `[n] ∖ F`.
    pub fn complement(self, n: u32) -> Face {
        Face(Face::segment(1, n).0 & !self.0)
    }
}

impl Ord for Face {
    /// Lexicographic order of the sorted vertex lists.
    fn cmp(&self, other: &Self) -> Ordering {
        self.vertices().cmp(other.vertices())
    }
}

impl PartialOrd for Face {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vs: Vec<String> = self.vertices().map(|v| v.to_string()).collect();
        write!(f, "{{{}}}", vs.join(","))
    }
}

/// The longest segment `{s, ..., n}` contained in `face` (empty if `n ∉ face`).
pub fn sigma(face: Face, n: u32) -> Face {
    let mut s = n;
    while s >= 1 && face.contains(s) {
        s -= 1;
    }
    Face::segment(s + 1, n)
}

/// `face ∖ sigma(face)`, the restriction of a facet in the reverse
/// lexicographic shelling of a shifted complex.
pub fn restriction(face: Face, n: u32) -> Face {
    face.difference(sigma(face, n))
}

/// A simplicial complex on `[n]`, stored by its facets.
///
/// Facets are kept sorted, so two complexes on the same ground set are equal
/// exactly when they have the same faces. The complex `{∅}` has the single
/// facet `∅`; the void complex has no facets at all.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    n: u32,
    facets: Vec<Face>,
}

impl SimplicialComplex {
    /// Builds the complex generated by `generators`; non-maximal generators
    /// are discarded.
    pub fn from_facets<I: IntoIterator<Item = Face>>(n: u32, generators: I) -> Result<Self, ComplexError> {
        if n > MAX_VERTICES {
            return Err(ComplexError::GroundSetTooLarge);
        }
        let ground = Face::segment(1, n);
        let mut gens: Vec<Face> = Vec::new();
        for g in generators {
            if !g.is_subset(ground) {
                let vertex = g.difference(ground).max_vertex().unwrap_or(0);
                return Err(ComplexError::VertexOutOfRange { vertex, n });
            }
            gens.push(g);
        }
        gens.sort_by_key(|f| std::cmp::Reverse(f.len()));
        gens.dedup();
        let mut facets: Vec<Face> = Vec::new();
        for g in gens {
            if !facets.iter().any(|f| g.is_subset(*f)) {
                facets.push(g);
            }
        }
        facets.sort();
        Ok(SimplicialComplex { n, facets })
    }

    /// Convenience constructor from vertex lists.
    pub fn from_vertex_lists(n: u32, facets: &[&[u32]]) -> Result<Self, ComplexError> {
        let faces = facets
            .iter()
            .map(|f| Face::from_vertices(f.iter().copied()))
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_facets(n, faces)
    }

    /// The complex `{∅}`.
    pub fn empty(n: u32) -> Self {
        SimplicialComplex { n, facets: vec![Face::EMPTY] }
    }

    /// The complex with no faces at all.
    pub fn void(n: u32) -> Self {
        SimplicialComplex { n, facets: Vec::new() }
    }

    pub fn simplex(n: u32) -> Self {
        SimplicialComplex { n, facets: vec![Face::segment(1, n)] }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// Maximal facet cardinality, i.e. `dim + 1`. Zero for `{∅}` and void.
    pub fn d(&self) -> usize {
        self.facets.iter().map(|f| f.len()).max().unwrap_or(0)
    }

    /// Dimension; `-1` for `{∅}`, `None` for the void complex.
    pub fn dim(&self) -> Option<i64> {
        (!self.is_void()).then(|| self.d() as i64 - 1)
    }

    pub fn is_pure(&self) -> bool {
        let d = self.d();
        self.facets.iter().all(|f| f.len() == d)
    }

    pub fn contains(&self, face: Face) -> bool {
        self.facets.iter().any(|f| face.is_subset(*f))
    }

    /// Every face, sorted.
    pub fn faces(&self) -> Vec<Face> {
        let mut v: Vec<Face> = self.face_set().into_iter().collect();
        v.sort();
        v
    }

    pub fn face_set(&self) -> HashSet<Face> {
        let mut set = HashSet::new();
        for f in &self.facets {
            for s in f.subfaces() {
                set.insert(s);
            }
        }
        set
    }

    /// Relabels the ground set to `[n - k]` after dropping the `k` smallest
    /// vertices, which must be unused.
    pub fn drop_low_vertices(&self, k: u32) -> Self {
        let facets = self.facets.iter().map(|f| Face(f.0 >> k)).collect();
        SimplicialComplex { n: self.n - k, facets }
    }

    /// Number of unused vertices at the bottom of the ground set.
    pub fn unused_low_vertices(&self) -> u32 {
        let used = self.facets.iter().fold(0u64, |acc, f| acc | f.0);
        if used == 0 {
            self.n
        } else {
            used.trailing_zeros().min(self.n)
        }
    }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SimplicialComplex(n={}, {})", self.n, self)
    }
}

impl fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_void() {
            return f.write_str("void");
        }
        let parts: Vec<String> = self.facets.iter().map(|x| x.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// `(f_{-1}, f_0, ..., f_{d-1})`; empty for the void complex.
pub fn f_vector(c: &SimplicialComplex) -> Vec<u64> {
    if c.is_void() {
        return Vec::new();
    }
    let mut f = vec![0u64; c.d() + 1];
    for face in c.face_set() {
        f[face.len()] += 1;
    }
    f
}

/// The h-vector `(h_0, ..., h_d)` defined by
/// `Σ h_i y^i = Σ f_{i-1} (1-y)^{d-i} y^i`.
///
/// Entries may be negative for complexes that are not Cohen-Macaulay.
pub fn h_vector(c: &SimplicialComplex) -> Result<Vec<i64>, ComplexError> {
    let f = f_vector(c);
    if f.is_empty() {
        return Ok(Vec::new());
    }
    let d = f.len() - 1;
    let mut h = vec![0i64; d + 1];
    for (k, hk) in h.iter_mut().enumerate() {
        let mut acc: i128 = 0;
        for (i, &fi) in f.iter().enumerate().take(k + 1) {
            let coeff = binomial((d - i) as u64, (k - i) as i64)? as i128;
            let term = coeff * fi as i128;
            if (k - i) % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        *hk = i64::try_from(acc).map_err(|_| MacaulayError::Overflow("h-vector"))?;
    }
    Ok(h)
}

/// The pure `i`-skeleton: the complex whose facets are the `i`-faces of `c`.
pub fn pure_skeleton(c: &SimplicialComplex, i: i64) -> Result<SimplicialComplex, ComplexError> {
    let dim = c.dim().unwrap_or(-2);
    if i > dim || i < -1 {
        return Err(ComplexError::SkeletonTooLarge { requested: i, dim });
    }
    let size = (i + 1) as usize;
    let mut facets: Vec<Face> = c.face_set().into_iter().filter(|f| f.len() == size).collect();
    facets.sort();
    Ok(SimplicialComplex { n: c.n, facets })
}

/// The `i`-skeleton: all faces of dimension at most `i`.
pub fn skeleton(c: &SimplicialComplex, i: i64) -> SimplicialComplex {
    if c.is_void() {
        return c.clone();
    }
    if i < -1 {
        return SimplicialComplex::void(c.n);
    }
    let size = (i + 1) as usize;
    if c.d() <= size {
        return c.clone();
    }
    let faces = c.face_set().into_iter().filter(|f| f.len() <= size);
    SimplicialComplex::from_facets(c.n, faces).expect("faces stay inside the ground set")
}

/// True iff every face survives every exchange `r → s` with `r < s`.
pub fn is_shifted(c: &SimplicialComplex) -> bool {
    shifted_violation(c).is_none()
}

/// A face and an exchange `(r, s)` that leaves the complex, if any.
pub fn shifted_violation(c: &SimplicialComplex) -> Option<(Face, u32, u32)> {
    let faces = c.face_set();
    for &f in &faces {
        for r in f.vertices() {
            for s in (r + 1)..=c.n {
                if !f.contains(s) && !faces.contains(&f.without(r).with(s)) {
                    return Some((f, r, s));
                }
            }
        }
    }
    None
}

/// A triangular integer array with rows `0..=d`, row `i` holding `i + 1`
/// entries.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Triangle {
    rows: Vec<Vec<i64>>,
}

impl Triangle {
    pub fn new(rows: Vec<Vec<i64>>) -> Result<Self, ComplexError> {
        for (i, row) in rows.iter().enumerate() {
            if row.len() != i + 1 {
                return Err(ComplexError::Shape { row: i, len: row.len(), expected: i + 1 });
            }
        }
        Ok(Triangle { rows })
    }

    pub fn zeros(d: usize) -> Self {
        Triangle { rows: (0..=d).map(|i| vec![0; i + 1]).collect() }
    }

    /// Index of the last row.
    pub fn d(&self) -> usize {
        self.rows.len().saturating_sub(1)
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.rows[i]
    }

    /// Entry `(i, j)`; zero outside the triangle.
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.rows.get(i).and_then(|r| r.get(j)).copied().unwrap_or(0)
    }

    pub fn set(&mut self, i: usize, j: usize, value: i64) {
        self.rows[i][j] = value;
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, i64)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(i, r)| r.iter().enumerate().map(move |(j, &v)| (i, j, v)))
    }
}

impl fmt::Debug for Triangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| format!("({})", r.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")))
            .collect();
        f.write_str(&rows.join(""))
    }
}

impl fmt::Display for Triangle {
    /// One row per line, entries separated by single spaces.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            let line: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

/// The h̃-triangle: row `i` is the h-vector of the pure `(i-1)`-skeleton.
pub fn htriangle_tilde(c: &SimplicialComplex) -> Result<Triangle, ComplexError> {
    if c.is_void() {
        return Err(ComplexError::Void);
    }
    let faces = c.face_set();
    let d = c.d();
    let mut rows = Vec::with_capacity(d + 1);
    for i in 0..=d {
        let skel = SimplicialComplex {
            n: c.n,
            facets: faces.iter().copied().filter(|f| f.len() == i).collect(),
        };
        rows.push(h_vector(&skel)?);
    }
    Triangle::new(rows)
}

/// `h_{i,j} = h̃_{i,j} - Σ_{ℓ ≤ j} h̃_{i+1,ℓ}`; the last row is unchanged.
pub fn h_from_htilde(t: &Triangle) -> Triangle {
    let d = t.d();
    let mut out = t.clone();
    for i in 0..d {
        let mut partial = 0;
        for j in 0..=i {
            partial += t.get(i + 1, j);
            out.rows[i][j] = t.get(i, j) - partial;
        }
    }
    out
}

/// Inverse of [`h_from_htilde`].
pub fn htilde_from_h(t: &Triangle) -> Triangle {
    let d = t.d();
    let mut out = t.clone();
    for i in (0..d).rev() {
        let mut partial = 0;
        for j in 0..=i {
            partial += out.rows[i + 1][j];
            out.rows[i][j] = t.get(i, j) + partial;
        }
    }
    out
}

/// The h-triangle of a shifted complex read off the reverse lexicographic
/// shelling: `h_{i,j}` counts facets `F` with `|F| = i` and `|σ(F)| = i - j`.
pub fn h_triangle_shelling(c: &SimplicialComplex) -> Result<Triangle, ComplexError> {
    if c.is_void() {
        return Err(ComplexError::Void);
    }
    if !is_shifted(c) {
        return Err(ComplexError::NotShifted);
    }
    let mut t = Triangle::zeros(c.d());
    for &f in c.facets() {
        let i = f.len();
        let j = i - sigma(f, c.n).len();
        t.rows[i][j] += 1;
    }
    Ok(t)
}

/// Inclusion-minimal subsets of `[n]` that are not faces.
pub fn minimal_nonfaces(c: &SimplicialComplex) -> Vec<Face> {
    if c.is_void() {
        return vec![Face::EMPTY];
    }
    let faces = c.face_set();
    let mut out: HashSet<Face> = HashSet::new();
    for &f in &faces {
        for v in 1..=c.n {
            if f.contains(v) {
                continue;
            }
            let g = f.with(v);
            if faces.contains(&g) || out.contains(&g) {
                continue;
            }
            if g.vertices().all(|u| faces.contains(&g.without(u))) {
                out.insert(g);
            }
        }
    }
    let mut v: Vec<Face> = out.into_iter().collect();
    v.sort();
    v
}

/// The Alexander dual `{F ⊆ [n] : [n] ∖ F ∉ c}`. The dual of the full
/// simplex is the void complex.
pub fn alexander_dual(c: &SimplicialComplex) -> SimplicialComplex {
    let facets = minimal_nonfaces(c).into_iter().map(|g| g.complement(c.n));
    SimplicialComplex::from_facets(c.n, facets).expect("complements stay inside the ground set")
}
