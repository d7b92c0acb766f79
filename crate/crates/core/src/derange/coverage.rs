//! Which elements of `D(G)` are products of two derangements.

use std::collections::HashSet;

use super::analysis::derangement_set;
use crate::error::{Error, Result};
use crate::permgrp::{Perm, PermGroup};

/// Largest number of derangement pairs examined.
pub const PAIR_CAP: u64 = 50_000_000;

#[derive(Clone, Debug)]
pub struct Coverage {
    pub covered: bool,
    /// Elements of `D(G)` that are not a product of two derangements.
    pub witnesses: Vec<Perm>,
}

pub fn two_derangement_coverage(g: &PermGroup, d: &PermGroup, cap: u64) -> Result<Coverage> {
    let der = derangement_set(g, cap)?;
    let pairs = (der.len() as u64).saturating_mul(der.len() as u64);
    if pairs > PAIR_CAP {
        return Err(Error::CapExceeded { what: "derangement pairs", cap: PAIR_CAP });
    }
    let mut products: HashSet<Perm> = HashSet::new();
    for a in &der {
        for b in &der {
            products.insert(a.mul(b));
        }
    }
    let mut witnesses = Vec::new();
    d.for_each_element(cap, |x| {
        if !products.contains(x) {
            witnesses.push(x.clone());
        }
    })?;
    Ok(Coverage { covered: witnesses.is_empty(), witnesses })
}
