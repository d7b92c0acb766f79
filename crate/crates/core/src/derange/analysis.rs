use serde::{Deserialize, Serialize};

use super::complement::{complement_search, Complement};
use super::fingerprint::{identify_quotient, GroupFingerprint};
use crate::error::{Error, Result};
use crate::permgrp::{Perm, PermGroup, SubgroupBuilder, DEFAULT_MAX_ORDER, MAX_QUOTIENT_INDEX};
use crate::util::isqrt;

/// All derangements of `g`, in enumeration order.
pub fn derangement_set(g: &PermGroup, cap: u64) -> Result<Vec<Perm>> {
    let mut out = Vec::new();
    g.for_each_element(cap, |x| {
        if x.is_derangement() {
            out.push(x.clone());
        }
    })?;
    Ok(out)
}

/// `D(G)` with the number of derangements found while building it.
#[derive(Clone, Debug)]
pub struct DerangementSubgroup {
    pub group: PermGroup,
    pub derangement_count: u64,
}

/// The subgroup generated by the derangements of a transitive group.
///
/// Built by a full element scan; the result is checked against the normal
/// closure of its generators, and every element outside it is checked to have
/// exactly one fixed point.
pub fn derangement_subgroup(g: &PermGroup, cap: u64) -> Result<DerangementSubgroup> {
    if !g.is_transitive() {
        return Err(Error::NotTransitive);
    }
    let mut builder = SubgroupBuilder::new(g.degree());
    let mut count = 0u64;
    g.for_each_element(cap, |x| {
        if x.is_derangement() {
            count += 1;
            if !builder.contains(x) {
                builder.add(x.clone());
            }
        }
    })?;
    let d = builder.finish();
    let closure = g.normal_closure(d.generators());
    if !closure.same_group(&d) {
        return Err(Error::Internal("derangement subgroup differs from its normal closure".into()));
    }
    let mut stray = false;
    g.for_each_element(cap, |x| {
        if !stray && x.fixed_point_count() != 1 && !d.contains(x) {
            stray = true;
        }
    })?;
    if stray {
        return Err(Error::Internal("element with fixed-point count other than 1 outside D(G)".into()));
    }
    Ok(DerangementSubgroup { group: d, derangement_count: count })
}

/// The four parts of the structure theorem for `N = D(G)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Theorem1Checks {
    /// `N` is transitive.
    pub a: bool,
    /// Every element with fixed-point count other than 1 lies in `N`.
    pub b: bool,
    /// `r_N - 1 = (r_G - 1) |G:N|`.
    pub c: bool,
    /// `G_0 / N_0` permutes the `N_0`-orbits other than `{0}` semiregularly.
    pub d: bool,
}

impl Theorem1Checks {
    pub fn all(&self) -> bool {
        self.a && self.b && self.c && self.d
    }
}

pub fn verify_theorem1(g: &PermGroup, cap: u64) -> Result<Theorem1Checks> {
    let d = derangement_subgroup(g, cap)?;
    check_theorem1_for(g, &d.group, cap)
}

/// Evaluates the four checks for an arbitrary candidate `n` in place of `D(G)`.
pub fn check_theorem1_for(g: &PermGroup, n: &PermGroup, cap: u64) -> Result<Theorem1Checks> {
    let a = n.is_transitive();
    let mut b = true;
    g.for_each_element(cap, |x| {
        if b && x.fixed_point_count() != 1 && !n.contains(x) {
            b = false;
        }
    })?;
    let index = g.order() / n.order();
    let c = a && {
        let rg = g.rank()? as u128;
        let rn = n.rank()? as u128;
        rn - 1 == (rg - 1) * index
    };
    let d = stabilizer_semiregular(g, n, cap)?;
    Ok(Theorem1Checks { a, b, c, d })
}

fn stabilizer_semiregular(g: &PermGroup, n: &PermGroup, cap: u64) -> Result<bool> {
    let g0 = g.stabilizer(0);
    let n0 = n.stabilizer(0);
    let mut label = vec![0u32; g.degree()];
    let orbits = n0.orbits();
    for (i, orb) in orbits.iter().enumerate() {
        for &x in orb {
            label[x as usize] = i as u32;
        }
    }
    let reps: Vec<u32> = orbits.iter().filter(|o| o[..] != [0]).map(|o| o[0]).collect();
    let mut ok = true;
    g0.for_each_element(cap, |h| {
        if ok && !n0.contains(h) && reps.iter().any(|&x| label[h.apply(x) as usize] == label[x as usize]) {
            ok = false;
        }
    })?;
    Ok(ok)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorollaryChecks {
    /// `|G:D(G)|` divides `n - 1`.
    pub divides: bool,
    /// When `D(G) != G`: at least half of `G_0` fixes only `0`, and those elements generate `G_0`.
    pub stabilizer: bool,
}

pub fn verify_corollaries(g: &PermGroup, d: &PermGroup, cap: u64) -> Result<CorollaryChecks> {
    let n = g.degree() as u128;
    let index = g.order() / d.order();
    let divides = n == 1 || (n - 1) % index == 0;
    let stabilizer = index == 1 || {
        let g0 = g.stabilizer(0);
        let mut builder = SubgroupBuilder::new(g.degree());
        let mut unique = 0u128;
        g0.for_each_element(cap, |h| {
            if h.fixed_point_count() == 1 {
                unique += 1;
                if !builder.contains(h) {
                    builder.add(h.clone());
                }
            }
        })?;
        2 * unique >= g0.order() && builder.order() == g0.order()
    };
    Ok(CorollaryChecks { divides, stabilizer })
}

/// Frobenius test: transitive, non-regular, and no non-identity element fixes two points.
///
/// Returns the kernel `{derangements} ∪ {1}` when `G` is Frobenius; the kernel is
/// verified to be the subgroup `d`.
pub fn is_frobenius(g: &PermGroup, d: &DerangementSubgroup, cap: u64) -> Result<Option<PermGroup>> {
    if !g.is_transitive() {
        return Err(Error::NotTransitive);
    }
    let g0 = g.stabilizer(0);
    if g0.order() == 1 {
        return Ok(None);
    }
    let mut frob = true;
    g0.for_each_element(cap, |h| {
        if frob && !h.is_identity() && h.fixed_point_count() > 1 {
            frob = false;
        }
    })?;
    if !frob {
        return Ok(None);
    }
    if d.derangement_count as u128 + 1 != d.group.order() {
        return Err(Error::Internal("Frobenius kernel is not a subgroup".into()));
    }
    Ok(Some(d.group.clone()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Regime {
    Imprimitive,
    /// Primitive and regular, so of prime degree: every non-identity element is a derangement.
    Regular,
    PrimitiveFrobenius,
    /// Primitive, not Frobenius, not regular: the conjectured bound.
    Primitive,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundCheck {
    pub regime: Regime,
    pub index: u64,
    pub holds: bool,
    /// `index = sqrt(n) - 1` exactly.
    pub equality: bool,
}

/// `|G:D(G)| <= sqrt(n) - 1`, or divisibility of `n - 1` for primitive Frobenius groups.
pub fn bound_check(g: &PermGroup, index: u64, frobenius: bool) -> Result<BoundCheck> {
    let n = g.degree() as u64;
    let within = (index + 1) * (index + 1) <= n;
    let root = isqrt(n);
    let equality = root * root == n && index + 1 == root;
    let regime = if !g.is_primitive()? {
        Regime::Imprimitive
    } else if g.order() == n as u128 {
        Regime::Regular
    } else if frobenius {
        Regime::PrimitiveFrobenius
    } else {
        Regime::Primitive
    };
    let holds = match regime {
        Regime::Regular => index == 1,
        Regime::Imprimitive | Regime::Primitive => within,
        Regime::PrimitiveFrobenius => (n - 1) % index == 0,
    };
    Ok(BoundCheck { regime, index, holds, equality })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportChecks {
    pub thm1a: bool,
    pub thm1b: bool,
    pub thm1c: bool,
    pub thm1d: bool,
    pub cor1: bool,
    pub cor2: bool,
    pub bound: bool,
}

impl ReportChecks {
    pub fn all(&self) -> bool {
        self.thm1a && self.thm1b && self.thm1c && self.thm1d && self.cor1 && self.cor2 && self.bound
    }
}

/// Everything computed about `D(G)` for one transitive group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub degree: u64,
    pub order: u64,
    pub derangements: u64,
    pub d_order: u64,
    pub index: u64,
    pub rank_g: u64,
    pub rank_n: u64,
    pub frobenius: bool,
    pub primitive: bool,
    pub regime: Regime,
    pub quotient_name: String,
    pub quotient: Option<GroupFingerprint>,
    /// Whether `G` splits over `D(G)`; absent when the search was not run.
    pub splits: Option<bool>,
    pub checks: ReportChecks,
}

#[derive(Clone, Copy, Debug)]
pub struct AnalysisOptions {
    pub max_order: u64,
    /// Run the complement search when `|G|` is at most this.
    pub complement_limit: u64,
}

impl Default for AnalysisOptions {
    fn default() -> Self {
        AnalysisOptions { max_order: DEFAULT_MAX_ORDER, complement_limit: super::complement::COMPLEMENT_ORDER_LIMIT }
    }
}

/// Full analysis of a transitive group together with its `D(G)`.
pub struct Analysis {
    pub report: AnalysisReport,
    pub d: DerangementSubgroup,
    pub quotient: Option<PermGroup>,
    pub complement: Option<Complement>,
}

pub fn analyze(g: &PermGroup, opts: &AnalysisOptions) -> Result<Analysis> {
    let cap = opts.max_order;
    if g.order() > cap as u128 {
        return Err(Error::CapExceeded { what: "group order", cap });
    }
    let d = derangement_subgroup(g, cap)?;
    let thm = check_theorem1_for(g, &d.group, cap)?;
    let cor = verify_corollaries(g, &d.group, cap)?;
    let frob = is_frobenius(g, &d, cap)?.is_some();
    let order = g.order() as u64;
    let d_order = d.group.order() as u64;
    let index = order / d_order;
    let bound = bound_check(g, index, frob)?;
    let (quotient, fingerprint, quotient_name) = if index <= MAX_QUOTIENT_INDEX {
        let q = g.quotient(&d.group)?;
        let (fp, name) = identify_quotient(&q)?;
        (Some(q), Some(fp), name)
    } else {
        (None, None, "unrecognized".to_string())
    };
    let complement = (index > 1 && order <= opts.complement_limit).then(|| complement_search(g, &d.group));
    let splits = match &complement {
        Some(Complement::Split(_)) => Some(true),
        Some(Complement::NonSplit) => Some(false),
        _ => None,
    };
    let report = AnalysisReport {
        degree: g.degree() as u64,
        order,
        derangements: d.derangement_count,
        d_order,
        index,
        rank_g: g.rank()?,
        rank_n: d.group.rank()?,
        frobenius: frob,
        primitive: g.is_primitive()?,
        regime: bound.regime,
        quotient_name,
        quotient: fingerprint,
        splits,
        checks: ReportChecks {
            thm1a: thm.a,
            thm1b: thm.b,
            thm1c: thm.c,
            thm1d: thm.d,
            cor1: cor.divides,
            cor2: cor.stabilizer,
            bound: bound.holds,
        },
    };
    Ok(Analysis { report, d, quotient, complement })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permgrp::standard;

    const CAP: u64 = 1_000_000;

    #[test]
    fn derangement_set_examples() {
        let s3 = derangement_set(&standard::symmetric(3), CAP).unwrap();
        assert_eq!(s3.len(), 2);
        assert!(s3.iter().all(|x| x.order() == 3));
        let s4 = derangement_set(&standard::symmetric(4), CAP).unwrap();
        assert_eq!(s4.len(), 9);
        assert_eq!(s4.iter().filter(|x| x.order() == 4).count(), 6);
        assert_eq!(derangement_set(&standard::cyclic(5), CAP).unwrap().len(), 4);
    }

    #[test]
    fn derangement_subgroup_examples() {
        let s3 = derangement_subgroup(&standard::symmetric(3), CAP).unwrap();
        assert_eq!(s3.group.order(), 3);
        let agl = standard::affine_line(5);
        let d = derangement_subgroup(&agl, CAP).unwrap();
        assert_eq!(d.group.order(), 5);
        assert!(d.group.same_group(&standard::cyclic(5)));
        assert_eq!(derangement_subgroup(&standard::symmetric(4), CAP).unwrap().group.order(), 24);
        let intransitive = PermGroup::new(3, vec![Perm::from_cycles(3, &[&[0, 1]]).unwrap()]).unwrap();
        assert_eq!(derangement_subgroup(&intransitive, CAP).unwrap_err(), Error::NotTransitive);
    }

    #[test]
    fn theorem_checks_on_affine_line() {
        let agl = standard::affine_line(5);
        let t = verify_theorem1(&agl, CAP).unwrap();
        assert!(t.all());
        assert_eq!(agl.rank().unwrap(), 2);
        let d = derangement_subgroup(&agl, CAP).unwrap();
        assert_eq!(d.group.rank().unwrap(), 5);
        let c = verify_corollaries(&agl, &d.group, CAP).unwrap();
        assert!(c.divides && c.stabilizer);
        assert!(is_frobenius(&agl, &d, CAP).unwrap().is_some());

        let s4 = standard::symmetric(4);
        let d4 = derangement_subgroup(&s4, CAP).unwrap();
        assert!(is_frobenius(&s4, &d4, CAP).unwrap().is_none());
        assert!(verify_theorem1(&s4, CAP).unwrap().all());
        let b = bound_check(&s4, 1, false).unwrap();
        assert!(b.holds);
    }

    #[test]
    fn wrong_candidate_fails_checks() {
        let agl = standard::affine_line(5);
        let t = check_theorem1_for(&agl, &PermGroup::trivial(5), CAP).unwrap();
        assert!(!t.a && !t.b && !t.c);
    }

    #[test]
    fn regular_groups_are_not_frobenius() {
        let c5 = standard::cyclic(5);
        let d = derangement_subgroup(&c5, CAP).unwrap();
        assert!(is_frobenius(&c5, &d, CAP).unwrap().is_none());
        let b = bound_check(&c5, 1, false).unwrap();
        assert_eq!(b.regime, Regime::Regular);
        assert!(b.holds);
        let c6 = standard::cyclic(6);
        assert_eq!(bound_check(&c6, 1, false).unwrap().regime, Regime::Imprimitive);
    }

    #[test]
    fn report_for_s3() {
        let a = analyze(&standard::symmetric(3), &AnalysisOptions::default()).unwrap();
        let r = &a.report;
        assert_eq!((r.index, r.d_order, r.derangements), (2, 3, 2));
        assert_eq!(r.quotient_name, "C2");
        assert!(r.frobenius);
        assert_eq!(r.splits, Some(true));
        assert!(r.checks.all());
        let json = serde_json::to_string(r).unwrap();
        let back: AnalysisReport = serde_json::from_str(&json).unwrap();
        assert_eq!(&back, r);
    }
}
