//! The plain-text group file format.
//!
//! Line 1 holds the degree n. Every following non-empty line is one
//! generator written as n space-separated 0-based images (one-line
//! notation). Lines starting with `#` are comments. Writing emits the
//! generators only, never the cached element list.

use std::fs;
use std::path::Path;

use crate::error::{Error, Result};
use crate::group::{close, Group};
use crate::perm::Permutation;

pub fn parse_group_str(input: &str) -> Result<Group> {
    let mut degree: Option<usize> = None;
    let mut generators = Vec::new();
    for (idx, raw) in input.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        match degree {
            None => {
                let d: usize = line.parse().map_err(|_| Error::Parse {
                    line: line_no,
                    message: format!("expected the degree, got {line:?}"),
                })?;
                if d == 0 {
                    return Err(Error::Parse {
                        line: line_no,
                        message: "degree must be at least 1".into(),
                    });
                }
                degree = Some(d);
            }
            Some(d) => {
                let images = line
                    .split_whitespace()
                    .map(|tok| {
                        tok.parse::<usize>().map_err(|_| Error::Parse {
                            line: line_no,
                            message: format!("invalid image {tok:?}"),
                        })
                    })
                    .collect::<Result<Vec<usize>>>()?;
                if images.len() != d {
                    return Err(Error::Parse {
                        line: line_no,
                        message: format!("expected {d} images, got {}", images.len()),
                    });
                }
                let perm = Permutation::new(images).map_err(|_| Error::Parse {
                    line: line_no,
                    message: "images are not a bijection".into(),
                })?;
                generators.push(perm);
            }
        }
    }
    let degree = degree.ok_or(Error::Parse {
        line: 1,
        message: "missing degree line".into(),
    })?;
    close(degree, generators)
}

pub fn parse_group(path: &Path) -> Result<Group> {
    parse_group_str(&fs::read_to_string(path)?)
}

/// Canonical file form: the degree, then one line per generator.
pub fn write_group_str(g: &Group) -> String {
    let mut out = format!("{}\n", g.degree());
    for gen in g.generators() {
        out.push_str(&gen.to_string());
        out.push('\n');
    }
    out
}

pub fn write_group(g: &Group, path: &Path) -> Result<()> {
    fs::write(path, write_group_str(g))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_cyclic_group() {
        let g = parse_group_str("3\n1 2 0\n").unwrap();
        assert_eq!(g.order(), 3);
    }

    #[test]
    fn parses_s3_with_comments_and_blanks() {
        let g = parse_group_str("# symmetric group on three points\n3\n\n1 2 0\n1 0 2\n").unwrap();
        assert_eq!(g.order(), 6);
    }

    #[test]
    fn parses_frobenius20() {
        let g = parse_group_str("5\n1 2 3 4 0\n0 2 4 1 3\n").unwrap();
        assert_eq!(g.order(), 20);
    }

    #[test]
    fn reports_line_numbers_for_malformed_input() {
        let err = parse_group_str("3\n1 2 0\n1 x 0\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }));

        let err = parse_group_str("3\n0 0 1\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
        assert!(err.to_string().contains("bijection"));

        let err = parse_group_str("3\n1 2 0 3\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));

        let err = parse_group_str("# nothing\n").unwrap_err();
        assert!(matches!(err, Error::Parse { .. }));
    }

    #[test]
    fn write_then_parse_roundtrips() {
        let g = parse_group_str("# comment\n4\n\n1 2 3 0\n1 0 2 3\n").unwrap();
        let written = write_group_str(&g);
        assert_eq!(written, "4\n1 2 3 0\n1 0 2 3\n");
        let reparsed = parse_group_str(&written).unwrap();
        assert_eq!(reparsed, g);
        // canonical form is a fixpoint
        assert_eq!(write_group_str(&reparsed), written);
    }

    #[test]
    fn trivial_group_is_a_degree_line_alone() {
        let g = parse_group_str("1\n").unwrap();
        assert!(g.is_trivial());
        assert_eq!(write_group_str(&g), "1\n");
    }
}
