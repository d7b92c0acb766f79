//! Constructors for the concrete group families.

mod affine;
mod almost_simple;
mod linear;
mod products;

pub use affine::{affine_group, semilinear_example, AFFINE_DEGREE_CAP};
pub use almost_simple::{pgammal_28, pgl2, projective_action};
pub use linear::{central_product_example, dihedral_quotient_family, CentralProduct};
pub use products::{
    direct_product_action, frobenius_complement_example, unit_multiplier, wreath_product_action,
    wreath_product_imprimitive, PRODUCT_DEGREE_CAP,
};
