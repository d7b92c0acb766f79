//! Property checks run over every corpus group.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::corpus::CorpusEntry;
use crate::derange::{
    analyze, check_theorem1_for, two_derangement_coverage, AnalysisOptions, Complement, Regime,
};
use crate::error::Result;
use crate::permgrp::{Perm, PermGroup};

/// Random coset representatives tried per group for the coset-average identity.
pub const COSET_SAMPLES: usize = 10;
/// Seed for the coset representatives; group `i` uses `COSET_SEED + i`.
pub const COSET_SEED: u64 = 0x5eed_0d06;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusChecks {
    pub thm1a: bool,
    pub thm1b: bool,
    pub thm1c: bool,
    pub thm1d: bool,
    pub cor1: bool,
    pub cor2: bool,
    /// Bound for the group's regime; for imprimitive groups `(index + 1)^2 <= n`.
    pub bound: bool,
    /// The average fixed-point count over `tG` is exactly 1 for every sampled `t`.
    pub coset_average: bool,
    /// `derangements * n >= |G|`.
    pub abundance: bool,
    /// For Frobenius groups with kernel of order at least 3: every kernel element
    /// is a product of two derangements.
    pub coverage: Option<bool>,
    /// When `G` has a regular normal subgroup and splits over `D(G)`, the
    /// complement found fixes a point.
    pub complement_fixes_point: Option<bool>,
}

impl CorpusChecks {
    pub fn all(&self) -> bool {
        self.thm1a
            && self.thm1b
            && self.thm1c
            && self.thm1d
            && self.cor1
            && self.cor2
            && self.bound
            && self.coset_average
            && self.abundance
            && self.coverage != Some(false)
            && self.complement_fixes_point != Some(false)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusResult {
    pub name: String,
    pub degree: u64,
    pub order: u64,
    pub index: u64,
    pub frobenius: bool,
    pub imprimitive: bool,
    pub quotient_name: String,
    pub checks: CorpusChecks,
    pub error: Option<String>,
}

impl CorpusResult {
    pub fn pass(&self) -> bool {
        self.error.is_none() && self.checks.all()
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct CorpusOptions {
    pub max_order: u64,
    /// Replace `D(G)` by the subgroup generated by all but one of its generators.
    pub inject_fault: bool,
}

pub fn run_corpus(entries: &[CorpusEntry], opts: &CorpusOptions) -> Vec<CorpusResult> {
    entries
        .par_iter()
        .enumerate()
        .map(|(i, e)| match check_entry(i, e, opts) {
            Ok(r) => r,
            Err(err) => CorpusResult {
                name: e.name.clone(),
                degree: e.group.degree() as u64,
                order: e.group.order() as u64,
                index: 0,
                frobenius: false,
                imprimitive: false,
                quotient_name: String::new(),
                checks: CorpusChecks::default(),
                error: Some(err.to_string()),
            },
        })
        .collect()
}

/// A uniformly random permutation of `{0..n}` from the seeded generator.
pub fn random_perm(rng: &mut ChaCha8Rng, n: usize) -> Perm {
    let mut images: Vec<u32> = (0..n as u32).collect();
    images.shuffle(rng);
    Perm::from_images(images).expect("shuffle is a permutation")
}

fn check_entry(i: usize, e: &CorpusEntry, opts: &CorpusOptions) -> Result<CorpusResult> {
    let g = &e.group;
    let cap = opts.max_order;
    let a = analyze(g, &AnalysisOptions { max_order: cap, ..AnalysisOptions::default() })?;
    let r = &a.report;
    let n = g.degree() as u64;

    let mut checks = CorpusChecks {
        thm1a: r.checks.thm1a,
        thm1b: r.checks.thm1b,
        thm1c: r.checks.thm1c,
        thm1d: r.checks.thm1d,
        cor1: r.checks.cor1,
        cor2: r.checks.cor2,
        bound: r.checks.bound,
        ..CorpusChecks::default()
    };
    if opts.inject_fault {
        let gens = a.d.group.generators();
        let weakened = PermGroup::new(g.degree(), gens[1.min(gens.len())..].to_vec())?;
        let t = check_theorem1_for(g, &weakened, cap)?;
        checks.thm1a = t.a;
        checks.thm1b = t.b;
        checks.thm1c = t.c;
        checks.thm1d = t.d;
    }

    let mut rng = ChaCha8Rng::seed_from_u64(COSET_SEED + i as u64);
    checks.coset_average = true;
    for _ in 0..COSET_SAMPLES {
        let t = random_perm(&mut rng, g.degree());
        if g.coset_average_fixed_points(&t, cap)? != num_rational::Ratio::from_integer(1) {
            checks.coset_average = false;
        }
    }
    checks.abundance = r.derangements as u128 * n as u128 >= g.order();
    if r.frobenius && r.d_order >= 3 {
        checks.coverage = Some(two_derangement_coverage(g, &a.d.group, cap)?.covered);
    }
    if e.regular_normal {
        if let Some(Complement::Split(k)) = &a.complement {
            let common = (0..g.degree() as u32).any(|x| k.generators().iter().all(|h| h.apply(x) == x));
            checks.complement_fixes_point = Some(common);
        }
    }
    Ok(CorpusResult {
        name: e.name.clone(),
        degree: n,
        order: r.order,
        index: r.index,
        frobenius: r.frobenius,
        imprimitive: r.regime == Regime::Imprimitive,
        quotient_name: r.quotient_name.clone(),
        checks,
        error: None,
    })
}
