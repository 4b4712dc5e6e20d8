//! The `.ograph` format.
//!
//! ```text
//! ograph v1
//! vertices 5
//! edge 0.2 0.1 color 1
//! ```
//!
//! Germs 0 and 2 are the over strand at a vertex, 1 and 3 the under strand.

use std::fmt::Write as _;

use crate::error::{Result, SpineError};
use crate::generators::{Germ, OEdge, OGraph};

use super::{content_lines, parse_port};

/// Parses and checks that the graph is 4-regular, connected and Z₃-colored.
pub fn parse_ograph(text: &str, file: &str) -> Result<OGraph> {
    let err = |line: usize, message: String| SpineError::Parse {
        file: file.to_string(),
        line,
        message,
    };
    let mut lines = content_lines(text);
    let (ln, header) = lines.next().ok_or_else(|| err(0, "empty input".into()))?;
    if header != ["ograph", "v1"] {
        return Err(err(ln, format!("expected `ograph v1`, found `{}`", header.join(" "))));
    }
    let (ln, count) = lines.next().ok_or_else(|| err(ln, "missing `vertices` line".into()))?;
    let n = match count.as_slice() {
        ["vertices", n] => n
            .parse::<usize>()
            .map_err(|_| err(ln, format!("bad vertex count `{n}`")))?,
        _ => return Err(err(ln, format!("expected `vertices <n>`, found `{}`", count.join(" ")))),
    };
    let mut edges = Vec::with_capacity(2 * n);
    for (ln, tokens) in lines {
        let e = match tokens.as_slice() {
            ["edge", a, b, "color", c] => parse_edge(a, b, c),
            [first, ..] if *first != "edge" => Err(format!("unknown directive `{first}`")),
            _ => Err(format!("malformed edge line `{}`", tokens.join(" "))),
        }
        .map_err(|m| err(ln, m))?;
        edges.push(e);
    }
    let g = OGraph { vertex_count: n, edges };
    g.validate()?;
    Ok(g)
}

fn parse_edge(a: &str, b: &str, c: &str) -> std::result::Result<OEdge, String> {
    let (va, ga) = parse_port(a, '.')?;
    let (vb, gb) = parse_port(b, '.')?;
    let color = match c {
        "0" => 0,
        "1" => 1,
        "2" => 2,
        _ => return Err(format!("color must be 0, 1 or 2, found `{c}`")),
    };
    Ok(OEdge { a: Germ { vertex: va, germ: ga }, b: Germ { vertex: vb, germ: gb }, color })
}

pub fn write_ograph(g: &OGraph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "ograph v1");
    let _ = writeln!(out, "vertices {}", g.vertex_count);
    for e in &g.edges {
        let _ = writeln!(
            out,
            "edge {}.{} {}.{} color {}",
            e.a.vertex, e.a.germ, e.b.vertex, e.b.germ, e.color
        );
    }
    out
}
