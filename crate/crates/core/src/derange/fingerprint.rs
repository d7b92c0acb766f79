//! Group fingerprints and quotient identification against a small catalog.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf::FieldSpec;
use crate::matgrp::{named, MatrixGroup};
use crate::permgrp::{standard, Perm, PermGroup, MAX_QUOTIENT_INDEX};
use crate::util::factorize;

/// Isomorphism invariants used to recognize small groups.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupFingerprint {
    pub order: u64,
    /// Element order -> number of elements of that order.
    pub histogram: BTreeMap<u64, u64>,
    pub center_order: u64,
    pub derived_order: u64,
    /// Prime-power invariant factors, ascending; present only for abelian groups.
    pub abelian_invariants: Option<Vec<u64>>,
}

impl GroupFingerprint {
    pub fn of(g: &PermGroup) -> Result<GroupFingerprint> {
        let elements = g.enumerate_elements(MAX_QUOTIENT_INDEX)?;
        let mut histogram = BTreeMap::new();
        let mut center_order = 0;
        for x in &elements {
            *histogram.entry(x.order()).or_insert(0) += 1;
            if g.generators().iter().all(|y| x.mul(y) == y.mul(x)) {
                center_order += 1;
            }
        }
        let gens = g.generators();
        let mut commutators = Vec::new();
        for (i, a) in gens.iter().enumerate() {
            for b in &gens[i + 1..] {
                let c = a.inverse().mul(&b.inverse()).mul(a).mul(b);
                if !c.is_identity() {
                    commutators.push(c);
                }
            }
        }
        let derived_order = g.normal_closure(&commutators).order() as u64;
        let order = elements.len() as u64;
        let abelian_invariants = (derived_order == 1).then(|| abelian_invariants(order, &histogram));
        Ok(GroupFingerprint { order, histogram, center_order, derived_order, abelian_invariants })
    }

    pub fn is_abelian(&self) -> bool {
        self.derived_order == 1
    }
}

/// Invariant factors of an abelian group from the counts of elements of each order.
fn abelian_invariants(order: u64, histogram: &BTreeMap<u64, u64>) -> Vec<u64> {
    let mut out = Vec::new();
    for (p, e) in factorize(order) {
        // s[k] = log_p #{x : x^(p^k) = 1}
        let mut s = vec![0u32];
        let mut pk = 1u64;
        for _ in 0..e {
            pk *= p;
            let count: u64 = histogram.iter().filter(|(o, _)| pk % **o == 0).map(|(_, c)| c).sum();
            s.push(count.ilog(p));
        }
        // number of cyclic factors of order >= p^k is s[k] - s[k-1]
        for k in 1..=e as usize {
            let at_least_k = s[k] - s[k - 1];
            let at_least_next = if k < e as usize { s[k + 1] - s[k] } else { 0 };
            for _ in 0..at_least_k - at_least_next {
                out.push(p.pow(k as u32));
            }
        }
    }
    out.sort_unstable();
    out
}

struct Catalog {
    entries: Vec<(&'static str, GroupFingerprint)>,
}

fn perm_image(h: &MatrixGroup) -> PermGroup {
    h.vector_action().expect("catalog groups act on small spaces")
}

fn catalog() -> &'static Catalog {
    static CATALOG: OnceLock<Catalog> = OnceLock::new();
    CATALOG.get_or_init(|| {
        let f3 = FieldSpec::new(3, 1).unwrap();
        let f5 = FieldSpec::new(5, 1).unwrap();
        let klein = PermGroup::new(
            4,
            vec![
                Perm::from_cycles(4, &[&[0, 1], &[2, 3]]).unwrap(),
                Perm::from_cycles(4, &[&[0, 2], &[1, 3]]).unwrap(),
            ],
        )
        .unwrap();
        let fixed: Vec<(&'static str, PermGroup)> = vec![
            ("C2xC2", klein),
            ("S3", standard::symmetric(3)),
            ("A4", standard::alternating(4)),
            ("A5", standard::alternating(5)),
            ("Q8", perm_image(&named::quaternion(&f3).unwrap())),
            ("SL(2,3)", perm_image(&named::sl2_3(&f3).unwrap())),
            ("SL(2,5)", perm_image(&named::sl2_5(&f5).unwrap())),
        ];
        let entries: Vec<(&'static str, GroupFingerprint)> =
            fixed.iter().map(|(name, g)| (*name, GroupFingerprint::of(g).unwrap())).collect();

        // Pairwise distinct, also against cyclic and dihedral groups of the same orders.
        let mut seen: Vec<(String, GroupFingerprint)> =
            entries.iter().map(|(n, f)| (n.to_string(), f.clone())).collect();
        for (_, fp) in &entries {
            let n = fp.order;
            seen.push((format!("C{n}"), GroupFingerprint::of(&standard::cyclic(n as usize)).unwrap()));
            if n % 2 == 0 && n >= 8 {
                seen.push((format!("D{n}"), GroupFingerprint::of(&standard::dihedral(n as usize / 2)).unwrap()));
            }
        }
        for i in 0..seen.len() {
            for j in i + 1..seen.len() {
                if seen[i].0 != seen[j].0 {
                    assert_ne!(seen[i].1, seen[j].1, "catalog fingerprints of {} and {} coincide", seen[i].0, seen[j].0);
                }
            }
        }
        Catalog { entries }
    })
}

/// Name of the catalog group with this fingerprint, or `"unrecognized"`.
///
/// The catalog holds cyclic groups `Ck`, dihedral groups `D2m` (order `2m`, `m >= 4`),
/// `C2xC2`, `S3`, `A4`, `A5`, `Q8`, `SL(2,3)` and `SL(2,5)`.
pub fn identify_fingerprint(fp: &GroupFingerprint) -> String {
    if fp.is_abelian() && fp.histogram.contains_key(&fp.order) {
        return format!("C{}", fp.order);
    }
    if let Some((name, _)) = catalog().entries.iter().find(|(_, f)| f == fp) {
        return name.to_string();
    }
    if fp.order % 2 == 0 && fp.order >= 8 && fp.order <= MAX_QUOTIENT_INDEX {
        if let Ok(d) = GroupFingerprint::of(&standard::dihedral(fp.order as usize / 2)) {
            if d == *fp {
                return format!("D{}", fp.order);
            }
        }
    }
    "unrecognized".to_string()
}

/// Fingerprint and catalog name of `q`.
pub fn identify_quotient(q: &PermGroup) -> Result<(GroupFingerprint, String)> {
    if q.order() > MAX_QUOTIENT_INDEX as u128 {
        return Err(Error::IndexTooLarge { index: q.order().min(u64::MAX as u128) as u64, cap: MAX_QUOTIENT_INDEX });
    }
    let fp = GroupFingerprint::of(q)?;
    let name = identify_fingerprint(&fp);
    Ok((fp, name))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn name(g: &PermGroup) -> String {
        identify_quotient(g).unwrap().1
    }

    #[test]
    fn catalog_names() {
        assert_eq!(name(&PermGroup::trivial(1)), "C1");
        assert_eq!(name(&standard::symmetric(2)), "C2");
        assert_eq!(name(&standard::cyclic(12)), "C12");
        assert_eq!(name(&standard::symmetric(3)), "S3");
        assert_eq!(name(&standard::dihedral(3)), "S3");
        assert_eq!(name(&standard::dihedral(4)), "D8");
        assert_eq!(name(&standard::dihedral(6)), "D12");
        assert_eq!(name(&standard::alternating(4)), "A4");
        assert_eq!(name(&standard::alternating(5)), "A5");
        assert_eq!(name(&standard::symmetric(4)), "unrecognized");
        let klein = PermGroup::new(4, vec![Perm::from_cycles(4, &[&[0, 1]]).unwrap(), Perm::from_cycles(4, &[&[2, 3]]).unwrap()]).unwrap();
        assert_eq!(name(&klein), "C2xC2");
    }

    #[test]
    fn abelian_invariant_factors() {
        let g = PermGroup::new(
            7,
            vec![Perm::from_cycles(7, &[&[0, 1]]).unwrap(), Perm::from_cycles(7, &[&[2, 3, 4, 5]]).unwrap()],
        )
        .unwrap();
        let fp = GroupFingerprint::of(&g).unwrap();
        assert_eq!(fp.abelian_invariants, Some(vec![2, 4]));
        assert_eq!(name(&g), "unrecognized");
        let c6 = GroupFingerprint::of(&standard::cyclic(6)).unwrap();
        assert_eq!(c6.abelian_invariants, Some(vec![2, 3]));
        assert_eq!(GroupFingerprint::of(&standard::symmetric(3)).unwrap().abelian_invariants, None);
    }

    #[test]
    fn representation_independent() {
        // A4 on 4 points and on the 6 cosets of a subgroup of order 2
        let a4 = standard::alternating(4);
        let sub = PermGroup::new(4, vec![Perm::from_cycles(4, &[&[0, 1], &[2, 3]]).unwrap()]).unwrap();
        let image = a4.coset_action(&sub, 100).unwrap().image;
        assert_eq!(image.degree(), 6);
        assert_eq!(name(&image), "A4");
    }
}
