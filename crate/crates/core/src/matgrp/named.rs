//! Named subgroups of `GL(d, q)`.
//!
//! Groups without an obvious generating set (`Q8`, `SL(2,3)`, `SL(2,5)`) are found
//! by searching 2×2 determinant-one matrices in lexicographic entry order and
//! validated by order and element-order histogram.

use std::collections::{BTreeMap, HashSet};
use std::sync::Arc;

use super::embedding::QuadraticExtension;
use super::group::MatrixGroup;
use super::matrix::FFMatrix;
use crate::error::{Error, Result};
use crate::gf::FieldSpec;

const SEARCH_CAP: u64 = 10_000;

/// `GL(d, q)` generated by `diag(w, 1, ..., 1)` and the elementary transvections
/// `I + E(i, i+1)`, `I + E(i+1, i)`.
pub fn general_linear(field: &Arc<FieldSpec>, d: usize) -> MatrixGroup {
    let mut gens = Vec::new();
    let w = field.primitive_element();
    if w != 1 {
        let mut diag = vec![1; d];
        diag[0] = w;
        gens.push(FFMatrix::diagonal(field, &diag));
    }
    for i in 0..d.saturating_sub(1) {
        for (r, c) in [(i, i + 1), (i + 1, i)] {
            let mut e = FFMatrix::identity(field, d).entries().to_vec();
            e[r * d + c] = 1;
            gens.push(FFMatrix::from_entries(field, d, e));
        }
    }
    MatrixGroup::new(field, d, gens).expect("generators are invertible")
}

/// All nonzero scalar matrices `{λI}`.
pub fn scalars(field: &Arc<FieldSpec>, d: usize) -> MatrixGroup {
    let w = field.primitive_element();
    MatrixGroup::new(field, d, vec![FFMatrix::scalar(field, d, w)]).expect("scalar is invertible")
}

/// `<diag(u, u^-1), swap>` with `u` primitive: dihedral of order `2(q-1)`.
pub fn dihedral_split_torus(field: &Arc<FieldSpec>) -> Result<MatrixGroup> {
    let w = field.primitive_element();
    torus_dihedral(field, w)
}

fn torus_dihedral(field: &Arc<FieldSpec>, u: u32) -> Result<MatrixGroup> {
    let uinv = field.inv(u).ok_or(Error::DivisionByZero)?;
    let swap = FFMatrix::from_entries(field, 2, vec![0, 1, 1, 0]);
    MatrixGroup::new(field, 2, vec![FFMatrix::diagonal(field, &[u, uinv]), swap])
}

/// Dihedral group of order `2m` in `GL(2, q)`.
///
/// Uses the split torus when `m | q - 1` and otherwise the non-split torus
/// `<x, σ>` with `x ∈ GF(q^2)` of order `m | q + 1` and `σ` the Frobenius map.
pub fn dihedral(field: &Arc<FieldSpec>, order: u64) -> Result<MatrixGroup> {
    let q = field.order() as u64;
    if order % 2 != 0 || order < 4 {
        return Err(Error::ConstraintViolated(format!("dihedral order {order} must be even and at least 4")));
    }
    let m = order / 2;
    let g = if (q - 1) % m == 0 {
        let w = field.primitive_element();
        torus_dihedral(field, field.pow(w, (q - 1) / m))?
    } else if (q + 1) % m == 0 {
        let ext = QuadraticExtension::new(field);
        let x = ext.element_of_order(m)?;
        MatrixGroup::new(field, 2, vec![ext.mult_rep(x), ext.frobenius()])?
    } else {
        return Err(Error::ConstraintViolated(format!("{m} divides neither q-1 nor q+1 for q = {q}")));
    };
    validate(g, order, None)
}

/// Quaternion group of order 8 in `SL(2, q)`, `q` odd.
pub fn quaternion(field: &Arc<FieldSpec>) -> Result<MatrixGroup> {
    require_odd(field)?;
    let a = first_square_root_of_minus_one(field);
    let ainv = a.inverse()?;
    let b = sl2(field)
        .find(|b| *b != a && is_minus_identity(&b.mul(b)) && b.inverse().unwrap().mul(&a).mul(b) == ainv)
        .ok_or_else(|| Error::ConstraintViolated("no quaternion pair found".into()))?;
    let hist = BTreeMap::from([(1, 1), (2, 1), (4, 6)]);
    validate(MatrixGroup::new(field, 2, vec![a, b])?, 8, Some(&hist))
}

/// `SL(2, 3) ≅ 2.A4` inside `SL(2, q)`, `q` odd.
pub fn sl2_3(field: &Arc<FieldSpec>) -> Result<MatrixGroup> {
    let hist = BTreeMap::from([(1, 1), (2, 1), (3, 8), (4, 6), (6, 8)]);
    binary_polyhedral(field, 24, &hist)
}

/// `SL(2, 5) ≅ 2.A5` inside `SL(2, q)`, requires `q ≡ ±1 (mod 10)` or `5 | q`.
pub fn sl2_5(field: &Arc<FieldSpec>) -> Result<MatrixGroup> {
    let hist = BTreeMap::from([(1, 1), (2, 1), (3, 20), (4, 30), (5, 24), (6, 20), (10, 24)]);
    binary_polyhedral(field, 120, &hist)
}

fn binary_polyhedral(field: &Arc<FieldSpec>, order: u64, hist: &BTreeMap<u64, u64>) -> Result<MatrixGroup> {
    require_odd(field)?;
    let a = first_square_root_of_minus_one(field);
    for c in sl2(field) {
        if c.is_identity() || !c.mul(&c).mul(&c).is_identity() {
            continue;
        }
        if bounded_order(&[a.clone(), c.clone()], order) == Some(order) {
            let g = MatrixGroup::new(field, 2, vec![a.clone(), c])?;
            if g.order_histogram(order)? == *hist {
                return Ok(g);
            }
        }
    }
    Err(Error::ConstraintViolated(format!(
        "no subgroup of order {order} with the required element orders in SL(2,{})",
        field.order()
    )))
}

fn validate(g: MatrixGroup, order: u64, hist: Option<&BTreeMap<u64, u64>>) -> Result<MatrixGroup> {
    let found = g.order(SEARCH_CAP)?;
    if found != order {
        return Err(Error::Internal(format!("constructed group has order {found}, expected {order}")));
    }
    if let Some(h) = hist {
        if g.order_histogram(SEARCH_CAP)? != *h {
            return Err(Error::Internal("element-order histogram mismatch".into()));
        }
    }
    Ok(g)
}

fn require_odd(field: &Arc<FieldSpec>) -> Result<()> {
    if field.characteristic() == 2 {
        return Err(Error::ConstraintViolated("characteristic 2 has no element of order 4 in SL(2,q)".into()));
    }
    Ok(())
}

fn is_minus_identity(m: &FFMatrix) -> bool {
    m.as_scalar() == Some(m.field().neg(1))
}

fn first_square_root_of_minus_one(field: &Arc<FieldSpec>) -> FFMatrix {
    sl2(field).find(|a| is_minus_identity(&a.mul(a))).expect("odd q has elements of order 4 in SL(2,q)")
}

/// Determinant-one 2×2 matrices in lexicographic row-major order.
fn sl2(field: &Arc<FieldSpec>) -> impl Iterator<Item = FFMatrix> + '_ {
    let q = field.order();
    (0..q).flat_map(move |a| {
        (0..q).flat_map(move |b| {
            (0..q).flat_map(move |c| {
                (0..q).filter_map(move |d| {
                    let f = &**field;
                    (f.sub(f.mul(a, d), f.mul(b, c)) == 1).then(|| FFMatrix::from_entries(field, 2, vec![a, b, c, d]))
                })
            })
        })
    })
}

/// Order of `<gens>`, or `None` once the closure exceeds `bail`.
fn bounded_order(gens: &[FFMatrix], bail: u64) -> Option<u64> {
    let id = FFMatrix::identity(gens[0].field(), gens[0].dim());
    let mut seen: HashSet<Vec<u32>> = HashSet::from([id.entries().to_vec()]);
    let mut elements = vec![id];
    let mut k = 0;
    while k < elements.len() {
        for g in gens {
            let y = elements[k].mul(g);
            if seen.insert(y.entries().to_vec()) {
                if seen.len() as u64 > bail {
                    return None;
                }
                elements.push(y);
            }
        }
        k += 1;
    }
    Some(elements.len() as u64)
}
