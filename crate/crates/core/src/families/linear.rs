use crate::derange::identify_quotient;
use crate::error::{Error, Result};
use crate::gf::FieldSpec;
use crate::matgrp::{named, MatrixGroup, QuadraticExtension, DEFAULT_MATRIX_CAP};
use crate::util::prime_power;

/// `X ∘ Y <= GL(4, q)` for `q ≡ 3 (mod 4)`, with `H/R(H)` dihedral of order `q + 1`.
///
/// `X = <diag(u, u^-1), swap>` with `u` primitive, and `Y = <x, y σ>` where
/// `x, y ∈ GF(q^2)` have orders `q + 1` and `2(q + 1)` and `σ` is the Frobenius map.
pub fn dihedral_quotient_family(q: u64) -> Result<MatrixGroup> {
    let (p, f) = prime_power(q).ok_or_else(|| Error::ConstraintViolated(format!("{q} is not a prime power")))?;
    if q % 4 != 3 {
        return Err(Error::ConstraintViolated(format!("q ≡ 3 mod 4 required, got q = {q}")));
    }
    let field = FieldSpec::new(p, f)?;
    let x_group = named::dihedral_split_torus(&field)?;
    let ext = QuadraticExtension::new(&field);
    let x = ext.element_of_order(q + 1)?;
    let y = ext.element_of_order(2 * (q + 1))?;
    let y_sigma = ext.mult_rep(y).mul(&ext.frobenius());
    let y_group = MatrixGroup::new(&field, 2, vec![ext.mult_rep(x), y_sigma])?;
    if y_group.order(DEFAULT_MATRIX_CAP)? != 2 * (q + 1) {
        return Err(Error::Internal("Y has the wrong order".into()));
    }
    let h = MatrixGroup::central_product(&x_group, &y_group, DEFAULT_MATRIX_CAP)?;
    verify_linear(&h, &format!("D{}", q + 1))?;
    Ok(h)
}

/// Named central products `X ∘ Y` with a prescribed `H/R(H)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CentralProduct {
    /// `D12 ∘ Q8 <= GL(4, 5)`, quotient `C2 x C2`.
    Klein,
    /// `D44 ∘ SL(2,3) <= GL(4, 23)`, quotient `A4`.
    A4,
    /// `D116 ∘ SL(2,5) <= GL(4, 59)`, quotient `A5`.
    A5,
}

impl CentralProduct {
    pub fn parse(name: &str) -> Option<CentralProduct> {
        match name {
            "klein" => Some(CentralProduct::Klein),
            "a4" => Some(CentralProduct::A4),
            "a5" => Some(CentralProduct::A5),
            _ => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            CentralProduct::Klein => "klein",
            CentralProduct::A4 => "a4",
            CentralProduct::A5 => "a5",
        }
    }

    pub fn quotient_name(self) -> &'static str {
        match self {
            CentralProduct::Klein => "C2xC2",
            CentralProduct::A4 => "A4",
            CentralProduct::A5 => "A5",
        }
    }
}

pub fn central_product_example(which: CentralProduct) -> Result<MatrixGroup> {
    let (q, dihedral_order) = match which {
        CentralProduct::Klein => (5, 12),
        CentralProduct::A4 => (23, 44),
        CentralProduct::A5 => (59, 116),
    };
    let field = FieldSpec::new(q, 1)?;
    let x = named::dihedral(&field, dihedral_order)?;
    let y = match which {
        CentralProduct::Klein => named::quaternion(&field)?,
        CentralProduct::A4 => named::sl2_3(&field)?,
        CentralProduct::A5 => named::sl2_5(&field)?,
    };
    let h = MatrixGroup::central_product(&x, &y, DEFAULT_MATRIX_CAP)?;
    verify_linear(&h, which.quotient_name())?;
    Ok(h)
}

fn verify_linear(h: &MatrixGroup, quotient: &str) -> Result<()> {
    if !h.is_irreducible()?.irreducible {
        return Err(Error::Internal("constructed group is reducible".into()));
    }
    let r = h.r_subgroup(DEFAULT_MATRIX_CAP)?;
    let q = h.quotient(&r.subgroup, DEFAULT_MATRIX_CAP)?;
    let (_, name) = identify_quotient(&q)?;
    if !r.normal || name != quotient {
        return Err(Error::Internal(format!("H/R(H) identified as {name}, expected {quotient}")));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dihedral_family() {
        let h = dihedral_quotient_family(7).unwrap();
        assert_eq!(h.dim(), 4);
        assert_eq!(h.order(DEFAULT_MATRIX_CAP).unwrap(), 96);
        let h = dihedral_quotient_family(11).unwrap();
        assert_eq!(h.order(DEFAULT_MATRIX_CAP).unwrap(), 240);
        match dihedral_quotient_family(5) {
            Err(Error::ConstraintViolated(msg)) => assert!(msg.contains("3 mod 4")),
            other => panic!("expected violation, got {other:?}"),
        }
    }

    #[test]
    fn klein_and_a4() {
        let h = central_product_example(CentralProduct::Klein).unwrap();
        assert_eq!(h.order(DEFAULT_MATRIX_CAP).unwrap(), 48);
        assert_eq!(h.r_subgroup(DEFAULT_MATRIX_CAP).unwrap().index, 4);
        let h = central_product_example(CentralProduct::A4).unwrap();
        assert_eq!(h.order(DEFAULT_MATRIX_CAP).unwrap(), 528);
        assert_eq!(h.r_subgroup(DEFAULT_MATRIX_CAP).unwrap().index, 12);
    }
}
