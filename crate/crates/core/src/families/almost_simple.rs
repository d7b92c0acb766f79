use std::sync::Arc;

use crate::error::{Error, Result};
use crate::gf::FieldSpec;
use crate::matgrp::{named, FFMatrix};
use crate::permgrp::{Perm, PermGroup};

/// Points of the projective line over `GF(q)`: `(1, a)` is point `a`, `(0, 1)` is point `q`.
fn projective_point(field: &FieldSpec, v: &[u32]) -> u32 {
    if v[0] == 0 {
        field.order()
    } else {
        let inv = field.inv(v[0]).expect("nonzero");
        field.mul(v[1], inv)
    }
}

fn line_vector(field: &FieldSpec, x: u32) -> [u32; 2] {
    if x == field.order() {
        [0, 1]
    } else {
        [1, x]
    }
}

/// Action of an invertible 2×2 matrix on the projective line.
pub fn projective_action(m: &FFMatrix) -> Perm {
    let f = &**m.field();
    let images = (0..=f.order()).map(|x| projective_point(f, &m.apply(&line_vector(f, x)))).collect();
    Perm::from_images(images).expect("invertible matrices permute the projective line")
}

/// `PGL(2, q)` on the `q + 1` points of the projective line.
pub fn pgl2(field: &Arc<FieldSpec>) -> Result<PermGroup> {
    let gl = named::general_linear(field, 2);
    let gens = gl.generators().iter().map(projective_action).filter(|p| !p.is_identity()).collect();
    PermGroup::new(field.order() as usize + 1, gens)
}

/// `PΓL(2, 8)` acting on the 28 right cosets of the normalizer of a cyclic subgroup of order 9.
///
/// `PGL(2,8)` acts on the 9 projective points and the field automorphism
/// `x -> x^2` is adjoined. `C9` is generated by the first element of order 9 of
/// `PGL(2,8)` in enumeration order; its normalizer in `PΓL(2,8)` is `C9 : C6` of
/// order 54 and index 28.
pub fn pgammal_28() -> Result<PermGroup> {
    let f8 = FieldSpec::new(2, 3)?;
    let pgl = pgl2(&f8)?;
    check(pgl.order() == 504, "PGL(2,8) has order 504")?;
    let frob = Perm::from_images((0..=8).map(|x| if x == 8 { 8 } else { f8.mul(x, x) }).collect())?;
    let mut gens = pgl.generators().to_vec();
    gens.push(frob);
    let g = PermGroup::new(9, gens)?;
    check(g.order() == 1512, "PΓL(2,8) has order 1512")?;

    let elements = pgl.enumerate_elements(1000)?;
    let x = elements.iter().find(|x| x.order() == 9).ok_or_else(|| Error::Internal("no element of order 9".into()))?;
    let c9 = PermGroup::new(9, vec![x.clone()])?;
    let s = g.normalizer(&c9, 2000)?;
    check(s.order() == 54, "normalizer of C9 has order 54")?;
    let action = g.coset_action(&s, 1000)?;
    check(action.degree() == 28 && action.image.order() == 1512, "faithful action of degree 28")?;
    Ok(action.image)
}

fn check(cond: bool, what: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Internal(format!("construction check failed: {what}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn projective_groups() {
        for (p, f, order) in [(2u64, 1u32, 6u128), (3, 1, 24), (5, 1, 120), (2, 2, 60)] {
            let field = FieldSpec::new(p, f).unwrap();
            assert_eq!(pgl2(&field).unwrap().order(), order);
        }
    }

    #[test]
    fn pgammal_on_28_points() {
        let g = pgammal_28().unwrap();
        assert_eq!(g.degree(), 28);
        assert_eq!(g.order(), 1512);
        assert!(g.is_transitive());
    }
}
