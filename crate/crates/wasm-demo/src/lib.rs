//! Browser bindings. Every export takes plain strings or numbers and returns
//! a JSON document; failures come back as `{"error": "..."}`.

use serde::Serialize;
use wasm_bindgen::prelude::*;

use scmh::characterization::{
    build_witness, check_htriangle_with, regular_composition as regular, sigma_top, CheckOptions, CompositionSpace,
};
use scmh::correspondence::{lambda, nu, LatticePath};
use scmh::harness::formats::parse_triangle;

#[derive(Serialize)]
struct ErrorReport {
    error: String,
}

#[derive(Serialize)]
pub struct TriangleReport {
    pub accepted: bool,
    pub verdict: String,
    /// Facets of a realizing shifted complex, vertices 1-based.
    pub witness: Option<Vec<Vec<u32>>>,
    pub vertices: Option<u32>,
}

#[derive(Serialize)]
pub struct PathReport {
    pub path: String,
    pub r: u32,
    pub a: u32,
    pub set: Vec<u32>,
    pub monomial: String,
    /// Height after each step.
    pub heights: Vec<u32>,
}

#[derive(Serialize)]
pub struct CompositionReport {
    pub values: Vec<(String, u64)>,
    pub top_mass: u64,
}

fn to_json<T: Serialize>(result: Result<T, String>) -> String {
    match result {
        Ok(v) => serde_json::to_string(&v),
        Err(error) => serde_json::to_string(&ErrorReport { error }),
    }
    .expect("reports serialize")
}

pub fn triangle_report(text: &str) -> Result<TriangleReport, String> {
    let t = parse_triangle(text).map_err(|e| e.to_string())?;
    let options = CheckOptions::default();
    let verdict = check_htriangle_with(&t, &options).map_err(|e| e.to_string())?;
    let (witness, vertices) = if verdict.is_accept() {
        let c = build_witness(&t, &options).map_err(|e| e.to_string())?;
        (Some(c.facets().iter().map(|f| f.vertices().collect()).collect()), Some(c.n()))
    } else {
        (None, None)
    };
    Ok(TriangleReport { accepted: verdict.is_accept(), verdict: verdict.to_string(), witness, vertices })
}

pub fn path_report(path: &str) -> Result<PathReport, String> {
    let p: LatticePath = path.trim().parse().map_err(|e: scmh::correspondence::CorrespondenceError| e.to_string())?;
    Ok(PathReport {
        path: p.to_string(),
        r: p.r(),
        a: p.a(),
        set: nu(&p).vertices().collect(),
        monomial: lambda(&p).to_string(),
        heights: p.heights().collect(),
    })
}

pub fn composition_report(vars: usize, cap: u32, h: &str, r: u64) -> Result<CompositionReport, String> {
    let h = h
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<u64>().map_err(|_| format!("`{t}` is not a number")))
        .collect::<Result<Vec<_>, _>>()?;
    let space = CompositionSpace::new(vars, cap, h).map_err(|e| e.to_string())?;
    let c = regular(&space, r).map_err(|e| e.to_string())?;
    Ok(CompositionReport { values: c.iter().map(|(m, q)| (m.render('u'), q)).collect(), top_mass: sigma_top(&c) })
}

/// Checks a triangle given in the `.tri` text format and, when it is
/// accepted, returns a realizing complex.
#[wasm_bindgen]
pub fn check_triangle(text: &str) -> String {
    to_json(triangle_report(text))
}

/// Reads a lattice path over `{N, E}`.
#[wasm_bindgen]
pub fn lattice_path(path: &str) -> String {
    to_json(path_report(path))
}

/// The regular composition of `r`; `h` is comma separated.
#[wasm_bindgen]
pub fn regular_composition(vars: usize, cap: u32, h: &str, r: u64) -> String {
    to_json(composition_report(vars, cap, h, r))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_json() {
        let json = check_triangle("1\n1 5\n1 4 7\n1 3 3 4\n1 2 0 0 0\n");
        assert!(json.contains(r#""verdict":"REJECT condition=c at (i=3,j=3)""#), "{json}");
        let r = triangle_report("1\n1 2\n1 1 0\n").unwrap();
        assert!(r.accepted);
        assert_eq!(r.witness.unwrap().len(), 2);
        assert!(check_triangle("1\n1 2 3\n").contains("line 2"));
    }

    #[test]
    fn path_json() {
        let r = path_report("NEENENNEEEN").unwrap();
        assert_eq!(r.set, [1, 4, 6, 7, 11]);
        assert_eq!(r.monomial, "w1*w3*w4^2");
        assert!(lattice_path("NEX").contains("error"));
    }

    #[test]
    fn composition_json() {
        let r = composition_report(2, 2, "1,4,9,4,1", 22).unwrap();
        assert_eq!(r.top_mass, 7);
        assert_eq!(r.values[0], ("1".to_string(), 10));
        assert!(regular_composition(2, 2, "1,x", 3).contains("error"));
    }
}
