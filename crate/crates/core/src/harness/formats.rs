//! Line-oriented text formats.
//!
//! * Triangle (`.tri`): line `i` holds the `i + 1` entries of row `i`.
//! * Facets (`.fac`): a header `n N`, then one facet per line as vertex
//!   numbers; `-` is the empty facet.
//! * Generators (`.gens`): a header `vars N`, then one exponent vector per
//!   line.
//! * Generator array: one line per degree `ℓ = d, ..., r` holding
//!   `μ_{1,ℓ}, ..., μ_{n-ℓ+1,ℓ}`.
//!
//! Blank lines and lines starting with `#` are ignored everywhere. Errors
//! carry the 1-based line number.

use std::fmt::Write as _;

use thiserror::Error;

use crate::betti::{GeneratorArray, MonomialIdeal};
use crate::complexes::{Face, SimplicialComplex, Triangle};
use crate::multicomplexes::Monomial;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct FormatError {
    pub line: usize,
    pub message: String,
}

fn err<T>(line: usize, message: impl Into<String>) -> Result<T, FormatError> {
    Err(FormatError { line, message: message.into() })
}

/// Non-blank, non-comment lines with their 1-based numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn numbers<T: std::str::FromStr>(line: usize, s: &str, what: &str) -> Result<Vec<T>, FormatError> {
    s.split_whitespace()
        .map(|tok| tok.parse::<T>().or_else(|_| err(line, format!("`{tok}` is not a valid {what}"))))
        .collect()
}

pub fn parse_triangle(text: &str) -> Result<Triangle, FormatError> {
    let mut rows: Vec<Vec<i64>> = Vec::new();
    for (line, s) in content_lines(text) {
        let row: Vec<u64> = numbers(line, s, "non-negative integer")?;
        let expected = rows.len() + 1;
        if row.len() != expected {
            return err(line, format!("row {} needs {expected} entries, found {}", rows.len(), row.len()));
        }
        let row = row
            .into_iter()
            .map(|v| i64::try_from(v).or_else(|_| err(line, format!("{v} is too large"))))
            .collect::<Result<Vec<_>, _>>()?;
        rows.push(row);
    }
    if rows.is_empty() {
        return err(text.lines().count().max(1), "no rows");
    }
    Ok(Triangle::new(rows).expect("row lengths checked"))
}

pub fn write_triangle(t: &Triangle) -> String {
    t.to_string()
}

fn header(text: &str, keyword: &str) -> Result<(usize, usize), FormatError> {
    let Some((line, s)) = content_lines(text).next() else {
        return err(1, format!("missing `{keyword} <N>` header"));
    };
    let mut parts = s.split_whitespace();
    if parts.next() != Some(keyword) {
        return err(line, format!("expected `{keyword} <N>`"));
    }
    let n = match (parts.next().map(str::parse::<usize>), parts.next()) {
        (Some(Ok(n)), None) => n,
        _ => return err(line, format!("expected `{keyword} <N>`")),
    };
    Ok((line, n))
}

pub fn parse_facets(text: &str) -> Result<SimplicialComplex, FormatError> {
    let (head, n) = header(text, "n")?;
    if n > 64 {
        return err(head, "at most 64 vertices are supported");
    }
    let mut facets = Vec::new();
    for (line, s) in content_lines(text).skip(1) {
        if s == "-" {
            facets.push(Face::EMPTY);
            continue;
        }
        let vs: Vec<u32> = numbers(line, s, "vertex")?;
        if let Some(&v) = vs.iter().find(|&&v| v == 0 || v as usize > n) {
            return err(line, format!("vertex {v} is outside [1, {n}]"));
        }
        facets.push(Face::from_vertices(vs).or_else(|e| err(line, e.to_string()))?);
    }
    SimplicialComplex::from_facets(n as u32, facets).or_else(|e| err(head, e.to_string()))
}

pub fn write_facets(c: &SimplicialComplex) -> String {
    let mut out = format!("n {}\n", c.n());
    for f in c.facets() {
        if f.is_empty() {
            out.push_str("-\n");
        } else {
            let vs: Vec<String> = f.vertices().map(|v| v.to_string()).collect();
            let _ = writeln!(out, "{}", vs.join(" "));
        }
    }
    out
}

pub fn parse_gens(text: &str) -> Result<MonomialIdeal, FormatError> {
    let (head, n) = header(text, "vars")?;
    let mut gens = Vec::new();
    for (line, s) in content_lines(text).skip(1) {
        let exps: Vec<u32> = numbers(line, s, "exponent")?;
        if exps.len() != n {
            return err(line, format!("expected {n} exponents, found {}", exps.len()));
        }
        gens.push(Monomial::new(exps));
    }
    MonomialIdeal::new(n, gens).or_else(|e| err(head, e.to_string()))
}

pub fn write_gens(ideal: &MonomialIdeal) -> String {
    let mut out = format!("vars {}\n", ideal.n());
    for g in ideal.generators() {
        let es: Vec<String> = g.exps().iter().map(|e| e.to_string()).collect();
        let _ = writeln!(out, "{}", es.join(" "));
    }
    out
}

/// Reads `μ` for degrees `d..=r` of an ideal in `n` variables.
pub fn parse_generator_array(text: &str, n: usize, r: usize, d: usize) -> Result<GeneratorArray, FormatError> {
    if d == 0 || d > r || r > n {
        return err(0, format!("need 1 ≤ d ≤ r ≤ n, got d = {d}, r = {r}, n = {n}"));
    }
    let mut rows = Vec::new();
    let mut last = 0;
    for (line, s) in content_lines(text) {
        last = line;
        let ell = d + rows.len();
        if ell > r {
            return err(line, format!("more than {} degree lines", r - d + 1));
        }
        let row: Vec<i64> = numbers(line, s, "non-negative integer")?;
        if row.len() != n - ell + 1 {
            return err(line, format!("degree {ell} needs {} entries, found {}", n - ell + 1, row.len()));
        }
        if let Some(v) = row.iter().find(|&&v| v < 0) {
            return err(line, format!("negative entry {v}"));
        }
        rows.push(row);
    }
    if rows.len() != r - d + 1 {
        return err(last + 1, format!("expected {} degree lines, found {}", r - d + 1, rows.len()));
    }
    GeneratorArray::from_cumulative(n, d, rows).or_else(|e| err(last, e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_round_trip() {
        let text = "# counterexample\n1\n1 5\n1 4 7\n1 3 3 4\n1 2 0 0 0\n";
        let t = parse_triangle(text).unwrap();
        assert_eq!(t.get(3, 3), 4);
        assert_eq!(parse_triangle(&write_triangle(&t)).unwrap(), t);
    }

    #[test]
    fn triangle_errors_have_lines() {
        let e = parse_triangle("1\n1 2 3\n").unwrap_err();
        assert_eq!(e.line, 2);
        let e = parse_triangle("1\n\n1 x\n").unwrap_err();
        assert_eq!(e.line, 3);
        assert!(parse_triangle("1\n1 -2\n").is_err());
    }

    #[test]
    fn facets_round_trip() {
        let c = parse_facets("n 4\n1 2\n3\n").unwrap();
        assert_eq!(c.facets().len(), 2);
        assert_eq!(parse_facets(&write_facets(&c)).unwrap(), c);
        let e = parse_facets("n 3\n-\n").unwrap();
        assert_eq!(e, SimplicialComplex::empty(3));
        assert_eq!(parse_facets("n 3\n1 4\n").unwrap_err().line, 2);
        assert_eq!(parse_facets("vertices 3\n").unwrap_err().line, 1);
    }

    #[test]
    fn gens_and_arrays() {
        let i = parse_gens("vars 3\n1 1 0\n1 0 1\n").unwrap();
        assert_eq!(i.generators().len(), 2);
        assert_eq!(parse_gens(&write_gens(&i)).unwrap(), i);
        assert_eq!(parse_gens("vars 3\n1 1\n").unwrap_err().line, 2);
        let a = parse_generator_array("1 2 0 0 0\n1 3 3 4\n1 4 7\n1 5\n1\n", 6, 6, 2).unwrap();
        assert_eq!(a.mu(2, 3), 3);
        assert_eq!(parse_generator_array("1 2 0 0\n", 6, 2, 2).unwrap_err().line, 1);
    }
}
