//! Text format for permutation groups.
//!
//! ```text
//! # comment
//! permgroup <n> <ngens>
//! <n images of generator 1, 0-based>
//! ...
//! ```

use std::fmt::Write as _;

use super::group::PermGroup;
use super::perm::Perm;
use crate::error::{Error, Result};

/// Whitespace-separated tokens with their 1-based line numbers; `#` starts a comment.
pub(crate) fn tokens(text: &str) -> Vec<(usize, &str)> {
    text.lines()
        .enumerate()
        .flat_map(|(i, line)| {
            let content = line.split('#').next().unwrap_or("");
            content.split_whitespace().map(move |t| (i + 1, t))
        })
        .collect()
}

pub(crate) fn parse_int(tok: Option<&(usize, &str)>, last_line: usize, what: &str) -> Result<u64> {
    match tok {
        None => Err(Error::Parse { line: last_line, msg: format!("unexpected end of input, expected {what}") }),
        Some(&(line, t)) => t
            .parse::<u64>()
            .map_err(|_| Error::Parse { line, msg: format!("expected {what}, found {t:?}") }),
    }
}

pub fn parse_perm_group(text: &str, max_degree: u64) -> Result<PermGroup> {
    let toks = tokens(text);
    let last_line = text.lines().count().max(1);
    let mut it = toks.iter();
    match it.next() {
        Some(&(_, "permgroup")) => {}
        Some(&(line, t)) => return Err(Error::Parse { line, msg: format!("expected header `permgroup`, found {t:?}") }),
        None => return Err(Error::Parse { line: 1, msg: "empty input".into() }),
    }
    let n = parse_int(it.next(), last_line, "degree")?;
    let ngens = parse_int(it.next(), last_line, "generator count")?;
    if n == 0 {
        return Err(Error::Parse { line: toks[0].0, msg: "degree must be positive".into() });
    }
    if n > max_degree {
        return Err(Error::DegreeTooLarge { degree: n, cap: max_degree });
    }
    let mut gens = Vec::with_capacity(ngens as usize);
    for _ in 0..ngens {
        let line = it.clone().next().map(|t| t.0).unwrap_or(last_line);
        let mut images = Vec::with_capacity(n as usize);
        for _ in 0..n {
            let v = parse_int(it.next(), last_line, "image")?;
            images.push(v as u32);
        }
        let p = Perm::from_images(images).map_err(|e| Error::Parse { line, msg: e.to_string() })?;
        gens.push(p);
    }
    if let Some(&(line, t)) = it.next() {
        return Err(Error::Parse { line, msg: format!("trailing token {t:?}") });
    }
    PermGroup::new(n as usize, gens)
}

pub fn write_perm_group(g: &PermGroup) -> String {
    let mut out = String::new();
    writeln!(out, "permgroup {} {}", g.degree(), g.generators().len()).unwrap();
    for p in g.generators() {
        let line: Vec<String> = p.images().iter().map(|x| x.to_string()).collect();
        writeln!(out, "{}", line.join(" ")).unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permgrp::standard;

    #[test]
    fn round_trip() {
        let g = standard::dihedral(5);
        let text = write_perm_group(&g);
        let h = parse_perm_group(&text, 1000).unwrap();
        assert_eq!(h.generators(), g.generators());
    }

    #[test]
    fn comments_and_errors() {
        let text = "# S3\npermgroup 3 2\n1 0 2 # transposition\n1 2 0\n";
        assert_eq!(parse_perm_group(text, 100).unwrap().order(), 6);
        assert!(matches!(parse_perm_group("perm 3 1\n0 1 2\n", 100), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_perm_group("permgroup 3 1\n0 0 2\n", 100), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_perm_group("permgroup 3 2\n0 1 2\n", 100), Err(Error::Parse { .. })));
        assert!(matches!(parse_perm_group("permgroup 3 1\n0 x 2\n", 100), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_perm_group("permgroup 300 0\n", 100), Err(Error::DegreeTooLarge { .. })));
    }
}
