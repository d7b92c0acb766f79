//! Derangement subgroups of transitive permutation groups and eigenvalue-one
//! subgroups of linear groups over finite fields.
//!
//! For a transitive group `G`, `D(G)` is the subgroup generated by the
//! fixed-point-free elements. For a linear group `H <= GL(d, q)`, `R(H)` is the
//! subgroup generated by elements with eigenvalue 1; the affine group
//! `V : H` has `D(V : H) = V : R(H)`.

pub mod derange;
pub mod error;
pub mod families;
pub mod gf;
pub mod matgrp;
pub mod permgrp;
pub mod suite;
pub mod util;

pub use error::{Error, Result};
