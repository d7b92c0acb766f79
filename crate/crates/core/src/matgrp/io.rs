//! Text format for matrix groups.
//!
//! ```text
//! matgroup <p> <f> <d> <ngens>
//! <d lines of d field encodings per generator, row-major>
//! ```

use std::fmt::Write as _;

use super::group::MatrixGroup;
use super::matrix::FFMatrix;
use crate::error::{Error, Result};
use crate::gf::FieldSpec;
use crate::permgrp::io::{parse_int, tokens};

pub fn parse_matrix_group(text: &str) -> Result<MatrixGroup> {
    let toks = tokens(text);
    let last_line = text.lines().count().max(1);
    let mut it = toks.iter();
    match it.next() {
        Some(&(_, "matgroup")) => {}
        Some(&(line, t)) => return Err(Error::Parse { line, msg: format!("expected header `matgroup`, found {t:?}") }),
        None => return Err(Error::Parse { line: 1, msg: "empty input".into() }),
    }
    let header_line = toks[0].0;
    let p = parse_int(it.next(), last_line, "characteristic")?;
    let f = parse_int(it.next(), last_line, "extension degree")?;
    let d = parse_int(it.next(), last_line, "dimension")? as usize;
    let ngens = parse_int(it.next(), last_line, "generator count")?;
    if d == 0 || d > 64 {
        return Err(Error::Parse { line: header_line, msg: format!("dimension {d} out of range") });
    }
    let field = FieldSpec::new(p, u32::try_from(f).unwrap_or(u32::MAX))
        .map_err(|e| Error::Parse { line: header_line, msg: e.to_string() })?;
    let q = field.order() as u64;
    let mut gens = Vec::new();
    for _ in 0..ngens {
        let line = it.clone().next().map(|t| t.0).unwrap_or(last_line);
        let mut rows = Vec::with_capacity(d);
        for _ in 0..d {
            let mut row = Vec::with_capacity(d);
            for _ in 0..d {
                let tok = it.next();
                let v = parse_int(tok, last_line, "matrix entry")?;
                if v >= q {
                    let l = tok.map(|t| t.0).unwrap_or(last_line);
                    return Err(Error::Parse { line: l, msg: format!("entry {v} is not an element of GF({q})") });
                }
                row.push(v as u32);
            }
            rows.push(row);
        }
        let m = FFMatrix::from_rows(&field, &rows)?;
        if !m.is_invertible() {
            return Err(Error::Parse { line, msg: "generator is singular".into() });
        }
        gens.push(m);
    }
    if let Some(&(line, t)) = it.next() {
        return Err(Error::Parse { line, msg: format!("trailing token {t:?}") });
    }
    MatrixGroup::new(&field, d, gens)
}

pub fn write_matrix_group(g: &MatrixGroup) -> String {
    let f = g.field();
    let mut out = String::new();
    writeln!(out, "matgroup {} {} {} {}", f.characteristic(), f.degree(), g.dim(), g.generators().len()).unwrap();
    for m in g.generators() {
        for row in m.rows() {
            let line: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            writeln!(out, "{}", line.join(" ")).unwrap();
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matgrp::named;

    #[test]
    fn round_trip() {
        let g = named::quaternion(&FieldSpec::new(5, 1).unwrap()).unwrap();
        let h = parse_matrix_group(&write_matrix_group(&g)).unwrap();
        assert_eq!(h.generators(), g.generators());
        assert_eq!(h.order(100).unwrap(), 8);
    }

    #[test]
    fn errors() {
        let ok = "# Q8\nmatgroup 5 1 2 2\n0 4\n1 0\n2 0\n0 3\n";
        assert_eq!(parse_matrix_group(ok).unwrap().order(100).unwrap(), 8);
        assert!(matches!(parse_matrix_group("matgroup 4 1 2 0\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_matrix_group("matgroup 5 1 2 1\n1 2\n2 4\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_matrix_group("matgroup 5 1 2 1\n1 0\n0 7\n"), Err(Error::Parse { line: 3, .. })));
        assert!(matches!(parse_matrix_group("matgroup 5 1 2 1\n1 0\n"), Err(Error::Parse { .. })));
    }
}
