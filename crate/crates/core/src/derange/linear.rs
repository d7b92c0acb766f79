use serde::{Deserialize, Serialize};

use super::fingerprint::{identify_quotient, GroupFingerprint};
use crate::error::{Error, Result};
use crate::matgrp::{MatrixGroup, SPIN_WORKLOAD_CAP};

/// `R(H)` and the quotient `H/R(H)` for a linear group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinearReport {
    pub p: u64,
    pub f: u64,
    pub dim: u64,
    pub order: u64,
    pub r_order: u64,
    pub index: u64,
    pub r_normal: bool,
    pub bound: u64,
    pub within_bound: bool,
    pub semiregular: bool,
    /// Absent when the spinning workload exceeds its cap.
    pub irreducible: Option<bool>,
    pub quotient_name: String,
    pub quotient: GroupFingerprint,
}

impl LinearReport {
    pub fn checks_pass(&self) -> bool {
        self.r_normal && self.within_bound && self.semiregular
    }
}

pub fn analyze_linear(h: &MatrixGroup, cap: u64) -> Result<LinearReport> {
    let order = h.order(cap)?;
    let r = h.r_subgroup(cap)?;
    let check = h.r_index_bound_check(cap)?;
    let irreducible = match h.is_irreducible() {
        Ok(irr) => Some(irr.irreducible),
        Err(Error::CapExceeded { cap, .. }) if cap == SPIN_WORKLOAD_CAP => None,
        Err(e) => return Err(e),
    };
    let q = h.quotient(&r.subgroup, cap)?;
    let (quotient, quotient_name) = identify_quotient(&q)?;
    Ok(LinearReport {
        p: h.field().characteristic() as u64,
        f: h.field().degree() as u64,
        dim: h.dim() as u64,
        order,
        r_order: r.subgroup.order(cap)?,
        index: r.index,
        r_normal: r.normal,
        bound: check.bound,
        within_bound: check.within_bound,
        semiregular: check.semiregular,
        irreducible,
        quotient_name,
        quotient,
    })
}
