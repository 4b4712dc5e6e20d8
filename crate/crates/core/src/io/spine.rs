//! The `.spine` text format.
//!
//! ```text
//! spine v1
//! vertices 2
//! edge 0.0 1.0 map 123 twist 0
//! ...
//! ```
//!
//! `map abc` lists the images (port labels at the second end) of the slots of
//! the first end in ascending label order. `#` starts a comment.

use std::fmt::Write as _;

use crate::error::{Result, SpineError};
use crate::polyhedron::{EdgeGluing, Port, SpecialPolyhedron};

use super::{content_lines, parse_digits, parse_port};

/// Raw parse without structural validation.
pub fn parse_spine_parts(text: &str, file: &str) -> Result<(usize, Vec<EdgeGluing>)> {
    let err = |line: usize, message: String| SpineError::Parse {
        file: file.to_string(),
        line,
        message,
    };
    let mut lines = content_lines(text);
    let (ln, header) = lines.next().ok_or_else(|| err(0, "empty input".into()))?;
    if header != ["spine", "v1"] {
        return Err(err(ln, format!("expected `spine v1`, found `{}`", header.join(" "))));
    }
    let (ln, count) = lines.next().ok_or_else(|| err(ln, "missing `vertices` line".into()))?;
    let n = match count.as_slice() {
        ["vertices", n] => n
            .parse::<usize>()
            .map_err(|_| err(ln, format!("bad vertex count `{n}`")))?,
        _ => return Err(err(ln, format!("expected `vertices <n>`, found `{}`", count.join(" ")))),
    };
    let mut gluings = Vec::with_capacity(2 * n);
    let mut last = ln;
    for (ln, tokens) in lines {
        last = ln;
        let g = match tokens.as_slice() {
            ["edge", a, b, "map", m] => parse_edge(a, b, m, None),
            ["edge", a, b, "map", m, "twist", t] => parse_edge(a, b, m, Some(t)),
            [first, ..] if *first != "edge" => Err(format!("unknown directive `{first}`")),
            _ => Err(format!("malformed edge line `{}`", tokens.join(" "))),
        }
        .map_err(|m| err(ln, m))?;
        gluings.push(g);
    }
    if gluings.len() != 2 * n {
        return Err(err(
            last,
            format!("expected {} edge lines for {n} vertices, found {}", 2 * n, gluings.len()),
        ));
    }
    Ok((n, gluings))
}

fn parse_edge(
    a: &str,
    b: &str,
    map: &str,
    twist: Option<&str>,
) -> std::result::Result<EdgeGluing, String> {
    let end_a = parse_port(a, '.')?;
    let end_b = parse_port(b, '.')?;
    let slot_map = parse_digits::<3>(map)?;
    let twist = match twist {
        None => None,
        Some("0") => Some(false),
        Some("1") => Some(true),
        Some(t) => return Err(format!("twist must be 0 or 1, found `{t}`")),
    };
    Ok(EdgeGluing {
        end_a: Port::new(end_a.0, end_a.1),
        end_b: Port::new(end_b.0, end_b.1),
        slot_map,
        twist,
    })
}

/// Parses and validates.
pub fn parse_spine(text: &str, file: &str) -> Result<SpecialPolyhedron> {
    let (n, gluings) = parse_spine_parts(text, file)?;
    SpecialPolyhedron::new(n, gluings)
}

pub fn write_spine(p: &SpecialPolyhedron) -> String {
    let mut out = String::new();
    if let Some(name) = p.name() {
        let _ = writeln!(out, "# {name}");
    }
    let _ = writeln!(out, "spine v1");
    let _ = writeln!(out, "vertices {}", p.vertex_count());
    for g in p.gluings() {
        let m = g.slot_map;
        let _ = write!(out, "edge {} {} map {}{}{}", g.end_a, g.end_b, m[0], m[1], m[2]);
        if let Some(t) = g.twist {
            let _ = write!(out, " twist {}", t as u8);
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const ONE_VERTEX: &str = "\
# smallest case
spine v1
vertices 1
edge 0.0 0.1 map 023   # loop
edge 0.2 0.3 map 012 twist 1
";

    #[test]
    fn parses_and_writes_back() {
        let p = parse_spine(ONE_VERTEX, "t.spine").unwrap();
        assert_eq!(p.vertex_count(), 1);
        assert_eq!(p.gluings()[1].twist, Some(true));
        let again = parse_spine(&write_spine(&p), "w.spine").unwrap();
        assert_eq!(p, again);
    }

    #[test]
    fn rejects_unknown_directive() {
        let text = ONE_VERTEX.replace("edge 0.2", "glue 0.2");
        let e = parse_spine(&text, "t.spine").unwrap_err();
        assert!(e.to_string().contains("t.spine:5"), "{e}");
        assert!(e.to_string().contains("unknown directive"), "{e}");
    }

    #[test]
    fn rejects_wrong_edge_count_and_header() {
        let text = ONE_VERTEX.replace("edge 0.2 0.3 map 012 twist 1\n", "");
        assert!(parse_spine(&text, "t").unwrap_err().to_string().contains("expected 2 edge lines"));
        assert!(parse_spine("spine v2\nvertices 1\n", "t").is_err());
        assert!(parse_spine("", "t").is_err());
        let bad_twist = ONE_VERTEX.replace("twist 1", "twist 2");
        assert!(parse_spine(&bad_twist, "t").is_err());
    }

    #[test]
    fn duplicate_port_is_invalid_not_a_parse_error() {
        let text = ONE_VERTEX.replace("edge 0.2 0.3", "edge 0.1 0.3");
        let (n, g) = parse_spine_parts(&text, "t").unwrap();
        let report = crate::polyhedron::validate_parts(n, &g);
        assert!(!report.valid);
        assert!(matches!(parse_spine(&text, "t"), Err(SpineError::Invalid(_))));
    }
}
