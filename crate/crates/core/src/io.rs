//! The flat text format for complexes.
//!
//! ```text
//! n d m family
//! 1 2 3
//! 1 2 4
//! ...
//! ```
//!
//! The header gives the label bound, the facet cardinality, the facet count
//! and a family tag without whitespace. Each following line is one facet as
//! strictly increasing labels. Facets are written in lexicographic order and
//! every line ends in LF.

use crate::complex::{PureComplex, Validation};
use crate::error::{Error, Result};
use crate::facet::{FacetSet, Label};

/// Tag used for complexes that did not come from a generator.
pub const MANUAL_TAG: &str = "manual";

/// A parsed file: the complex and its family tag.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComplexFile {
    pub complex: PureComplex,
    pub family: String,
}

pub fn serialize_complex(c: &PureComplex, family: &str) -> String {
    let tag = if family.is_empty() || family.contains(char::is_whitespace) { MANUAL_TAG } else { family };
    let mut out = format!("{} {} {} {}\n", c.n(), c.d(), c.num_facets(), tag);
    for f in c.facets() {
        let mut first = true;
        for v in f.iter() {
            if !first {
                out.push(' ');
            }
            first = false;
            out.push_str(&v.to_string());
        }
        out.push('\n');
    }
    out
}

fn err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, column, message: message.into() }
}

/// Whitespace-separated tokens of a line with their 1-based columns.
fn tokens(line: &str) -> impl Iterator<Item = (usize, &str)> {
    let mut rest = line;
    let mut offset = 0;
    std::iter::from_fn(move || {
        let skip = rest.len() - rest.trim_start().len();
        rest = &rest[skip..];
        offset += skip;
        if rest.is_empty() {
            return None;
        }
        let len = rest.find(char::is_whitespace).unwrap_or(rest.len());
        let tok = &rest[..len];
        let col = offset + 1;
        rest = &rest[len..];
        offset += len;
        Some((col, tok))
    })
}

fn number<T: std::str::FromStr>(line: usize, col: usize, tok: &str, what: &str) -> Result<T> {
    tok.parse().map_err(|_| err(line, col, format!("expected {what}, found {tok:?}")))
}

pub fn parse_complex(text: &str, validation: Validation) -> Result<ComplexFile> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.strip_suffix('\r').unwrap_or(l)));
    let (hl, header) = lines.next().ok_or_else(|| err(1, 1, "empty input"))?;
    let toks: Vec<(usize, &str)> = tokens(header).collect();
    if toks.len() != 4 {
        let col = toks.get(4).map_or(header.len() + 1, |t| t.0);
        return Err(err(hl, col, format!("header needs `n d m family`, found {} fields", toks.len())));
    }
    let n: Label = number(hl, toks[0].0, toks[0].1, "label bound n")?;
    let d: usize = number(hl, toks[1].0, toks[1].1, "facet size d")?;
    let m: usize = number(hl, toks[2].0, toks[2].1, "facet count m")?;
    let family = toks[3].1.to_string();

    let mut facets = Vec::with_capacity(m);
    let mut last_line = hl;
    for (ln, line) in lines {
        if line.trim().is_empty() {
            continue;
        }
        last_line = ln;
        if facets.len() == m {
            return Err(err(ln, 1, format!("header promises {m} facets but more lines follow")));
        }
        let mut labels: Vec<Label> = Vec::with_capacity(d);
        for (col, tok) in tokens(line) {
            let v: Label = number(ln, col, tok, "a label")?;
            if labels.last().is_some_and(|&p| p >= v) {
                return Err(err(ln, col, format!("labels must increase, {v} follows {}", labels[labels.len() - 1])));
            }
            labels.push(v);
        }
        if labels.len() != d {
            return Err(err(ln, 1, format!("facet has {} labels, header says {d}", labels.len())));
        }
        facets.push(FacetSet::new(labels));
    }
    if facets.len() != m {
        return Err(err(last_line + 1, 1, format!("header promises {m} facets, found {}", facets.len())));
    }
    let complex = if m == 0 { PureComplex::empty(n, d) } else { PureComplex::build(n, facets, validation)? };
    Ok(ComplexFile { complex, family })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::facet::fs;

    #[test]
    fn tetrahedron_text() {
        let c = PureComplex::simplex_boundary(&fs(&[1, 2, 3, 4]));
        let text = serialize_complex(&c, MANUAL_TAG);
        assert_eq!(text, "4 3 4 manual\n1 2 3\n1 2 4\n1 3 4\n2 3 4\n");
        let back = parse_complex(&text, Validation::Strict).unwrap();
        assert_eq!(back.complex, c);
        assert_eq!(back.family, "manual");
    }

    #[test]
    fn count_mismatch() {
        let e = parse_complex("4 3 2 manual\n1 2 3\n", Validation::AllowGaps).unwrap_err();
        assert!(matches!(e, Error::Parse { line: 3, .. }), "{e}");
        let e = parse_complex("4 3 1 manual\n1 2 3\n1 2 4\n", Validation::AllowGaps).unwrap_err();
        assert!(matches!(e, Error::Parse { line: 3, .. }), "{e}");
    }

    #[test]
    fn decreasing_labels_point_at_column() {
        let e = parse_complex("4 3 1 manual\n1 3 2\n", Validation::AllowGaps).unwrap_err();
        assert_eq!(e, Error::Parse { line: 2, column: 5, message: "labels must increase, 2 follows 3".into() });
    }

    #[test]
    fn bad_tokens() {
        assert!(matches!(parse_complex("", Validation::Strict), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_complex("4 3 x manual\n", Validation::Strict), Err(Error::Parse { line: 1, column: 5, .. })));
        assert!(matches!(parse_complex("4 3 1\n", Validation::Strict), Err(Error::Parse { .. })));
        assert!(matches!(parse_complex("4 2 1 t\n1 -2\n", Validation::Strict), Err(Error::Parse { line: 2, column: 3, .. })));
    }

    #[test]
    fn validation_errors_propagate() {
        let e = parse_complex("5 2 1 t\n1 2\n", Validation::Strict).unwrap_err();
        assert_eq!(e, Error::IsolatedVertex(3));
        assert!(parse_complex("5 2 1 t\n1 2\n", Validation::AllowGaps).is_ok());
        let e = parse_complex("3 2 1 t\n1 4\n", Validation::AllowGaps).unwrap_err();
        assert!(matches!(e, Error::VertexOutOfRange { label: 4, n: 3 }));
    }

    #[test]
    fn whitespace_tags_fall_back() {
        let c = PureComplex::simplex(&fs(&[1, 2]));
        assert!(serialize_complex(&c, "two words").starts_with("2 2 1 manual\n"));
        let crlf = parse_complex("2 2 1 x\r\n1 2\r\n", Validation::Strict).unwrap();
        assert_eq!(crlf.complex, c);
    }
}
