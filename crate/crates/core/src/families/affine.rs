use std::sync::Arc;

use crate::error::{Error, Result};
use crate::gf::FieldSpec;
use crate::matgrp::{MatrixGroup, VectorSpace, DEFAULT_MATRIX_CAP};
use crate::permgrp::{Perm, PermGroup};
use crate::util::prime_power;

/// Largest vector space (or field) used as a point set.
pub const AFFINE_DEGREE_CAP: u64 = 100_000;

/// `T : H` acting on the `q^d` vectors, generated by translations along a
/// `GF(p)`-basis and the generators of `H`.
pub fn affine_group(h: &MatrixGroup) -> Result<PermGroup> {
    let field = h.field();
    let space = VectorSpace::new(field, h.dim());
    if space.size > AFFINE_DEGREE_CAP {
        return Err(Error::DegreeTooLarge { degree: space.size, cap: AFFINE_DEGREE_CAP });
    }
    let mut gens = Vec::new();
    for i in 0..h.dim() {
        for j in 0..field.degree() {
            let mut shift = vec![0u32; h.dim()];
            shift[i] = field.characteristic().pow(j);
            gens.push(translation(&space, &shift));
        }
    }
    for m in h.generators() {
        gens.push(Perm::from_images(space.action(m))?);
    }
    let g = PermGroup::new(space.size as usize, gens)?;
    let expected = space.size as u128 * h.order(DEFAULT_MATRIX_CAP)? as u128;
    if g.order() != expected {
        return Err(Error::Internal(format!("affine group has order {}, expected {expected}", g.order())));
    }
    Ok(g)
}

fn translation(space: &VectorSpace, shift: &[u32]) -> Perm {
    let f = &*space.field;
    let images = (0..space.size as u32)
        .map(|x| {
            let v: Vec<u32> = space.decode(x).iter().zip(shift).map(|(&a, &b)| f.add(a, b)).collect();
            space.encode(&v)
        })
        .collect();
    Perm::from_images(images).expect("translations are bijective")
}

/// `{x -> a x^i + c : a != 0, i in {1, q}}` on `GF(q^2)`, of order `2 q^2 (q^2 - 1)`.
pub fn semilinear_example(q: u64) -> Result<PermGroup> {
    let (p, f) = prime_power(q).ok_or_else(|| Error::ConstraintViolated(format!("{q} is not a prime power")))?;
    let n = q * q;
    if n > AFFINE_DEGREE_CAP {
        return Err(Error::DegreeTooLarge { degree: n, cap: AFFINE_DEGREE_CAP });
    }
    let big: Arc<FieldSpec> = FieldSpec::new(p, 2 * f)?;
    let w = big.primitive_element();
    let points = 0..n as u32;
    let shift = points.clone().map(|x| big.add(x, 1)).collect();
    let scale = points.clone().map(|x| big.mul(w, x)).collect();
    let frob = points.map(|x| big.pow(x, q)).collect();
    let g = PermGroup::new(n as usize, vec![Perm::from_images(shift)?, Perm::from_images(scale)?, Perm::from_images(frob)?])?;
    let expected = 2 * n as u128 * (n as u128 - 1);
    if g.order() != expected {
        return Err(Error::Internal(format!("semilinear group has order {}, expected {expected}", g.order())));
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matgrp::named;

    #[test]
    fn affine_examples() {
        let f3 = FieldSpec::new(3, 1).unwrap();
        let gl13 = named::general_linear(&f3, 1);
        assert_eq!(affine_group(&gl13).unwrap().order(), 6);
        let scal = named::scalars(&f3, 2);
        let g = affine_group(&scal).unwrap();
        assert_eq!((g.degree(), g.order()), (9, 18));
        let f4 = FieldSpec::new(2, 2).unwrap();
        let agl14 = affine_group(&named::general_linear(&f4, 1)).unwrap();
        assert_eq!((agl14.degree(), agl14.order()), (4, 12));
    }

    #[test]
    fn semilinear_orders() {
        for (q, order) in [(3u64, 144u128), (4, 480), (5, 1200)] {
            let g = semilinear_example(q).unwrap();
            assert_eq!(g.degree() as u64, q * q);
            assert_eq!(g.order(), order);
        }
        assert!(semilinear_example(6).is_err());
    }
}
