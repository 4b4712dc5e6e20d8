//! The `.tri` face-pairing format.
//!
//! ```text
//! tri v1
//! tetrahedra 2
//! face 0/3 1/2 map 013
//! ```
//!
//! `face a/f b/g map xyz` glues face `f` of tetrahedron `a` to face `g` of
//! tetrahedron `b`, sending the vertices of the first face, ascending, to
//! `x`, `y`, `z`.

use std::fmt::Write as _;

use crate::error::{Result, SpineError};
use crate::generators::{Face, FaceGluing, FacePairing};

use super::{content_lines, parse_digits, parse_port};

pub fn parse_tri(text: &str, file: &str) -> Result<FacePairing> {
    let err = |line: usize, message: String| SpineError::Parse {
        file: file.to_string(),
        line,
        message,
    };
    let mut lines = content_lines(text);
    let (ln, header) = lines.next().ok_or_else(|| err(0, "empty input".into()))?;
    if header != ["tri", "v1"] {
        return Err(err(ln, format!("expected `tri v1`, found `{}`", header.join(" "))));
    }
    let (ln, count) = lines.next().ok_or_else(|| err(ln, "missing `tetrahedra` line".into()))?;
    let t = match count.as_slice() {
        ["tetrahedra", t] => t
            .parse::<usize>()
            .map_err(|_| err(ln, format!("bad tetrahedron count `{t}`")))?,
        _ => return Err(err(ln, format!("expected `tetrahedra <t>`, found `{}`", count.join(" ")))),
    };
    let mut gluings = Vec::with_capacity(2 * t);
    let mut last = ln;
    for (ln, tokens) in lines {
        last = ln;
        let g = match tokens.as_slice() {
            ["face", a, b, "map", m] => parse_face_line(a, b, m),
            [first, ..] if *first != "face" => Err(format!("unknown directive `{first}`")),
            _ => Err(format!("malformed face line `{}`", tokens.join(" "))),
        }
        .map_err(|m| err(ln, m))?;
        gluings.push(g);
    }
    if gluings.len() != 2 * t {
        return Err(err(
            last,
            format!("expected {} face lines for {t} tetrahedra, found {}", 2 * t, gluings.len()),
        ));
    }
    Ok(FacePairing { tetrahedra: t, gluings })
}

fn parse_face_line(a: &str, b: &str, m: &str) -> std::result::Result<FaceGluing, String> {
    let (ta, fa) = parse_port(a, '/')?;
    let (tb, fb) = parse_port(b, '/')?;
    Ok(FaceGluing {
        a: Face { tet: ta, face: fa },
        b: Face { tet: tb, face: fb },
        map: parse_digits::<3>(m)?,
    })
}

pub fn write_tri(fp: &FacePairing) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "tri v1");
    let _ = writeln!(out, "tetrahedra {}", fp.tetrahedra);
    for g in &fp.gluings {
        let m = g.map;
        let _ = writeln!(
            out,
            "face {}/{} {}/{} map {}{}{}",
            g.a.tet, g.a.face, g.b.tet, g.b.face, m[0], m[1], m[2]
        );
    }
    out
}
