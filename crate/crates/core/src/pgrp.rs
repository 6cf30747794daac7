//! The `.pgrp` text format.
//!
//! ```text
//! # optional comment lines
//! 4            <- degree n
//! 2            <- generator count k
//! 1 2 3 0      <- k lines of n images
//! 2 1 0 3
//! ```
//! Blank lines and lines starting with `#` are ignored anywhere.

use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::{Permutation, Point};

/// Parses `.pgrp` text into a group.
pub fn parse(text: &str) -> Result<PermGroup> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let parse_count = |item: Option<(usize, &str)>, what: &str| -> Result<(usize, usize)> {
        let (line, l) = item.ok_or(Error::Parse {
            line: 0,
            msg: format!("missing {what}"),
        })?;
        let v = l.parse::<usize>().map_err(|_| Error::Parse {
            line,
            msg: format!("expected {what}, found {l:?}"),
        })?;
        Ok((line, v))
    };
    let (dline, degree) = parse_count(lines.next(), "degree")?;
    if degree == 0 {
        return Err(Error::Parse {
            line: dline,
            msg: "degree must be positive".into(),
        });
    }
    let (_, k) = parse_count(lines.next(), "generator count")?;
    let mut gens = Vec::with_capacity(k);
    for i in 0..k {
        let (line, l) = lines.next().ok_or(Error::Parse {
            line: 0,
            msg: format!("expected {k} generators, found {i}"),
        })?;
        let images = l
            .split_whitespace()
            .map(|t| {
                t.parse::<Point>().map_err(|_| Error::Parse {
                    line,
                    msg: format!("not a point: {t:?}"),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        if images.len() != degree {
            return Err(Error::Parse {
                line,
                msg: format!("expected {degree} images, found {}", images.len()),
            });
        }
        let p = Permutation::from_images(images).map_err(|e| Error::Parse {
            line,
            msg: e.to_string(),
        })?;
        gens.push(p);
    }
    if let Some((line, _)) = lines.next() {
        return Err(Error::Parse {
            line,
            msg: "trailing content after the generators".into(),
        });
    }
    PermGroup::new(degree, gens)
}

pub fn read(path: &Path) -> Result<PermGroup> {
    parse(&std::fs::read_to_string(path)?)
}

/// Serializes the generators, with optional `#` header lines.
pub fn to_string(g: &PermGroup, header: &[String]) -> String {
    let mut s = String::new();
    for h in header {
        for l in h.lines() {
            let _ = writeln!(s, "# {l}");
        }
    }
    let _ = writeln!(s, "{}", g.degree());
    let _ = writeln!(s, "{}", g.generators().len());
    for p in g.generators() {
        let imgs: Vec<String> = p.images().iter().map(|x| x.to_string()).collect();
        let _ = writeln!(s, "{}", imgs.join(" "));
    }
    s
}

pub fn write(path: &Path, g: &PermGroup, header: &[String]) -> Result<()> {
    std::fs::write(path, to_string(g, header))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_emit() {
        let text = "# D8\n\n4\n2\n1 2 3 0\n# reflection\n2 1 0 3\n";
        let g = parse(text).unwrap();
        assert_eq!(g.order(), 8);
        let again = parse(&to_string(&g, &["dihedral 8".into()])).unwrap();
        assert_eq!(again.generators(), g.generators());
        assert_eq!(parse("1\n0\n").unwrap().order(), 1);
    }

    #[test]
    fn errors_carry_line_numbers() {
        match parse("3\n1\n0 0 1\n") {
            Err(Error::Parse { line: 3, .. }) => {}
            other => panic!("unexpected {other:?}"),
        }
        match parse("3\n1\n0 1\n") {
            Err(Error::Parse { line: 3, .. }) => {}
            other => panic!("unexpected {other:?}"),
        }
        match parse("x\n") {
            Err(Error::Parse { line: 1, .. }) => {}
            other => panic!("unexpected {other:?}"),
        }
        assert!(parse("3\n2\n0 1 2\n").is_err());
    }
}
