//! Plain-text formats.
//!
//! Spec files: a line `n=<int>`, then one generator `a b c` per line. Blank
//! lines and lines starting with `#` are ignored everywhere.

use std::fmt::Write as _;

use crate::classify::SurfaceReport;
use crate::complex::CyclicComplexSpec;
use crate::error::{Error, Result};
use crate::surface::SimplicialSurface;

/// Non-blank, non-comment lines with their 1-based line numbers.
pub(crate) fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

pub(crate) fn parse_kv(line: usize, token: &str, key: &str) -> Result<i64> {
    let value = token
        .strip_prefix(key)
        .and_then(|r| r.strip_prefix('='))
        .ok_or_else(|| Error::Parse {
            line,
            msg: format!("expected `{key}=<int>`, found `{token}`"),
        })?;
    value.parse().map_err(|_| Error::Parse {
        line,
        msg: format!("`{value}` is not an integer"),
    })
}

pub(crate) fn parse_ints(line: usize, text: &str) -> Result<Vec<i64>> {
    text.split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse().map_err(|_| Error::Parse {
                line,
                msg: format!("`{t}` is not an integer"),
            })
        })
        .collect()
}

pub fn parse_spec(text: &str) -> Result<CyclicComplexSpec> {
    let mut lines = content_lines(text);
    let (line, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        msg: "empty spec file".into(),
    })?;
    let n = parse_kv(line, header, "n")?;
    let n = u32::try_from(n).map_err(|_| Error::Parse {
        line,
        msg: format!("n={n} out of range"),
    })?;
    let mut gens = Vec::new();
    for (line, l) in lines {
        let v = parse_ints(line, l)?;
        let t: [i64; 3] = v.try_into().map_err(|v: Vec<i64>| Error::Parse {
            line,
            msg: format!("expected 3 integers, found {}", v.len()),
        })?;
        gens.push(t);
    }
    CyclicComplexSpec::new(n, gens)
}

pub fn write_spec(spec: &CyclicComplexSpec) -> String {
    let mut out = format!("n={}\n", spec.n());
    for g in spec.generators() {
        let _ = writeln!(out, "{} {} {}", g[0], g[1], g[2]);
    }
    out
}

/// All facets, lex-sorted, one `a b c` per line.
pub fn write_facets(surface: &SimplicialSurface) -> String {
    let mut out = String::new();
    for t in surface.facets() {
        let _ = writeln!(out, "{} {} {}", t[0], t[1], t[2]);
    }
    out
}

/// `key=value` lines covering every report field.
pub fn write_report(report: &SurfaceReport) -> String {
    let (f0, f1, f2) = report.f_vector;
    let mut out = String::new();
    let _ = writeln!(out, "f_vector={f0},{f1},{f2}");
    let _ = writeln!(out, "euler_characteristic={}", report.euler_characteristic);
    let profile: Vec<String> = report
        .degree_profile
        .iter()
        .map(|(d, c)| format!("{d}:{c}"))
        .collect();
    let _ = writeln!(out, "degree_profile={}", profile.join(","));
    let _ = writeln!(out, "orientable={}", report.orientable);
    match report.genus {
        Some(g) if report.orientable => {
            let _ = writeln!(out, "genus=g{g}");
        }
        Some(u) => {
            let _ = writeln!(out, "genus=u{u}");
        }
        None => {
            let _ = writeln!(out, "genus=none");
        }
    }
    let _ = writeln!(out, "pinched={}", report.pinched);
    let _ = writeln!(out, "connected={}", report.connected);
    out
}

pub fn write_report_json(report: &SurfaceReport) -> String {
    serde_json::to_string_pretty(report).expect("report serializes")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::classify;
    use crate::surface::expand;

    #[test]
    fn spec_round_trip() {
        let text = "# B9\nn=16\n0 1 2\n\n2 5 10\n0 2 5\n";
        let spec = parse_spec(text).unwrap();
        assert_eq!(spec.n(), 16);
        assert_eq!(spec.generators(), &[[0, 1, 2], [0, 2, 5], [0, 3, 8]]);
        assert_eq!(parse_spec(&write_spec(&spec)).unwrap(), spec);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        assert!(matches!(parse_spec(""), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(
            parse_spec("m=4\n"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_spec("n=8\n0 1 2\n0 2\n"),
            Err(Error::Parse { line: 3, .. })
        ));
        assert!(matches!(
            parse_spec("n=8\n0 1 x\n"),
            Err(Error::Parse { line: 2, .. })
        ));
    }

    #[test]
    fn report_lines() {
        let s = expand(&parse_spec("n=16\n0 1 2\n0 2 5\n0 3 8\n").unwrap()).unwrap();
        let text = write_report(&classify(&s));
        assert!(text.contains("f_vector=16,72,48\n"));
        assert!(text.contains("euler_characteristic=-8\n"));
        assert!(text.contains("degree_profile=9:16\n"));
        assert!(text.contains("genus=g5\n"));
        assert_eq!(write_facets(&s).lines().count(), 48);
    }
}
