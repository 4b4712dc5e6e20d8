//! Line-oriented interchange formats: `.spine`, `.tri`, `.ograph`.

pub mod ograph;
pub mod spine;
pub mod tri;

pub use ograph::{parse_ograph, write_ograph};
pub use spine::{parse_spine, parse_spine_parts, write_spine};
pub use tri::{parse_tri, write_tri};

/// Non-empty lines with comments stripped, tokenized, with 1-based line numbers.
pub(crate) fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let body = line.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = body.split_whitespace().collect();
        (!tokens.is_empty()).then_some((i + 1, tokens))
    })
}

/// `<index><sep><label>` with label in `0..4`.
pub(crate) fn parse_port(s: &str, sep: char) -> Result<(usize, u8), String> {
    let (a, b) = s.split_once(sep).ok_or_else(|| format!("malformed port `{s}`"))?;
    let index = a.parse::<usize>().map_err(|_| format!("malformed index in `{s}`"))?;
    let label = b.parse::<u8>().map_err(|_| format!("malformed label in `{s}`"))?;
    if label > 3 {
        return Err(format!("label out of range in `{s}`"));
    }
    Ok((index, label))
}

/// Exactly `N` decimal digits.
pub(crate) fn parse_digits<const N: usize>(s: &str) -> Result<[u8; N], String> {
    let bytes = s.as_bytes();
    if bytes.len() != N || !bytes.iter().all(u8::is_ascii_digit) {
        return Err(format!("expected {N} digits, found `{s}`"));
    }
    let mut out = [0u8; N];
    for (o, b) in out.iter_mut().zip(bytes) {
        *o = b - b'0';
    }
    Ok(out)
}
