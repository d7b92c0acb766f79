//! Named scenarios with expected values, run as one suite.

use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};

use super::checks::{run_corpus, CorpusOptions, CorpusResult};
use super::corpus::{corpus, scalar_affine};
use crate::derange::{analyze, analyze_linear, derangement_subgroup, two_derangement_coverage, AnalysisOptions};
use crate::error::{Error, Result};
use crate::families::{
    affine_group, central_product_example, dihedral_quotient_family, frobenius_complement_example, pgammal_28,
    semilinear_example, unit_multiplier, CentralProduct,
};
use crate::gf::FieldSpec;
use crate::matgrp::{named, MatrixGroup};
use crate::permgrp::{PermGroup, DEFAULT_MAX_ORDER};

/// One expected value of a scenario.
#[derive(Clone, Debug)]
pub struct Expectation {
    pub field: &'static str,
    pub expected: Value,
    /// The statement the value confirms.
    pub claim: &'static str,
}

type Runner = Box<dyn Fn(&Context) -> Result<Map<String, Value>> + Send + Sync>;

pub struct Scenario {
    pub id: String,
    pub description: String,
    pub expectations: Vec<Expectation>,
    needs_corpus: bool,
    run: Runner,
}

/// Shared inputs for scenario runners.
pub struct Context {
    pub max_order: u64,
    pub corpus: Vec<CorpusResult>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckResult {
    pub field: String,
    pub expected: Value,
    pub actual: Value,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub id: String,
    pub description: String,
    pub pass: bool,
    pub checks: Vec<CheckResult>,
    pub error: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub wall_ms: Option<u64>,
}

#[derive(Clone, Copy, Debug)]
pub struct RunOptions {
    pub max_order: u64,
    /// Worker threads; `None` uses the global pool.
    pub workers: Option<usize>,
    pub timing: bool,
    pub inject_fault: bool,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions { max_order: DEFAULT_MAX_ORDER, workers: None, timing: false, inject_fault: false }
    }
}

fn exp(field: &'static str, expected: Value, claim: &'static str) -> Expectation {
    Expectation { field, expected, claim }
}

fn scenario<F>(id: impl Into<String>, description: impl Into<String>, expectations: Vec<Expectation>, run: F) -> Scenario
where
    F: Fn(&Context) -> Result<Map<String, Value>> + Send + Sync + 'static,
{
    Scenario { id: id.into(), description: description.into(), expectations, needs_corpus: false, run: Box::new(run) }
}

fn corpus_scenario<F>(id: &str, description: &str, expectations: Vec<Expectation>, run: F) -> Scenario
where
    F: Fn(&Context) -> Result<Map<String, Value>> + Send + Sync + 'static,
{
    Scenario { needs_corpus: true, ..scenario(id, description, expectations, run) }
}

fn field(p: u64, f: u32) -> std::sync::Arc<FieldSpec> {
    FieldSpec::new(p, f).expect("valid field")
}

/// Summary of a permutation group's analysis as scenario values.
fn perm_facts(g: &PermGroup, cap: u64) -> Result<Map<String, Value>> {
    let a = analyze(g, &AnalysisOptions { max_order: cap, ..AnalysisOptions::default() })?;
    let r = &a.report;
    let bound = crate::derange::bound_check(g, r.index, r.frobenius)?;
    let mut m = Map::new();
    m.insert("degree".into(), json!(r.degree));
    m.insert("order".into(), json!(r.order));
    m.insert("d_order".into(), json!(r.d_order));
    m.insert("index".into(), json!(r.index));
    m.insert("frobenius".into(), json!(r.frobenius));
    m.insert("primitive".into(), json!(r.primitive));
    m.insert("quotient".into(), json!(r.quotient_name));
    m.insert("splits".into(), json!(r.splits));
    m.insert("sqrt_equality".into(), json!(bound.equality));
    m.insert("checks_pass".into(), json!(r.checks.all()));
    Ok(m)
}

fn linear_facts(h: &MatrixGroup, cap: u64) -> Result<Map<String, Value>> {
    let r = analyze_linear(h, cap)?;
    let mut m = Map::new();
    m.insert("order".into(), json!(r.order));
    m.insert("r_order".into(), json!(r.r_order));
    m.insert("index".into(), json!(r.index));
    m.insert("quotient".into(), json!(r.quotient_name));
    m.insert("irreducible".into(), json!(r.irreducible));
    m.insert("checks_pass".into(), json!(r.checks_pass()));
    Ok(m)
}

/// The scenario list, in run order.
pub fn scenarios() -> Vec<Scenario> {
    let mut out = Vec::new();

    for (q, index, splits) in [(3u64, 2u64, false), (4, 3, true), (5, 4, false)] {
        let n = q * q;
        let mut e = vec![
            exp("degree", json!(n), "points are the elements of GF(q^2)"),
            exp("order", json!(2 * n * (n - 1)), "order 2 q^2 (q^2 - 1)"),
            exp("index", json!(index), "index q - 1"),
            exp("primitive", json!(true), "the semilinear group is primitive"),
            exp("frobenius", json!(false), "the semilinear group is not a Frobenius group"),
            exp("checks_pass", json!(true), "structural checks hold"),
        ];
        if q == 3 {
            e.push(exp("sqrt_equality", json!(true), "index meets sqrt(n) - 1 with equality"));
            e.push(exp("splits", json!(splits), "G does not split over D(G)"));
        }
        out.push(scenario(
            format!("semilinear-{q}"),
            format!("x -> a x^s + c on GF({q}^2)"),
            e,
            move |ctx| perm_facts(&semilinear_example(q)?, ctx.max_order),
        ));
    }

    for (p, f) in [(5u64, 1u32), (7, 1), (2, 3)] {
        let q = p.pow(f);
        out.push(scenario(
            format!("agl1-{q}"),
            format!("AGL(1,{q}) on {q} points"),
            vec![
                exp("index", json!(q - 1), "index n - 1"),
                exp("frobenius", json!(true), "AGL(1,q) is a Frobenius group"),
                exp("d_is_translations", json!(true), "D(G) is the translation subgroup"),
                exp("checks_pass", json!(true), "structural checks hold"),
            ],
            move |ctx| {
                let gf = field(p, f);
                let g = affine_group(&named::general_linear(&gf, 1))?;
                let mut m = perm_facts(&g, ctx.max_order)?;
                let translations = PermGroup::new(g.degree(), g.generators()[..f as usize].to_vec())?;
                let d = derangement_subgroup(&g, ctx.max_order)?.group;
                m.insert("d_is_translations".into(), json!(d.same_group(&translations)));
                Ok(m)
            },
        ));
    }

    out.push(scenario(
        "imprimitive-equality",
        "GF(3)^2 : GF(3)* on 9 points",
        vec![
            exp("index", json!(2), "index 2"),
            exp("primitive", json!(false), "the group is imprimitive"),
            exp("sqrt_equality", json!(true), "index meets sqrt(n) - 1 with equality"),
            exp("checks_pass", json!(true), "structural checks hold"),
        ],
        |ctx| perm_facts(&scalar_affine(3), ctx.max_order),
    ));

    out.push(scenario(
        "pgammal-28",
        "PGammaL(2,8) on the 28 cosets of the normalizer of C9",
        vec![
            exp("degree", json!(28), "degree 28"),
            exp("order", json!(1512), "order 1512"),
            exp("d_order", json!(504), "D(G) = PSL(2,8)"),
            exp("index", json!(3), "index 3"),
            exp("d_is_derived_subgroup", json!(true), "D(G) is the derived subgroup"),
            exp("d_center_order", json!(1), "D(G) has trivial centre"),
            exp("d_perfect", json!(true), "D(G) is perfect"),
            exp("checks_pass", json!(true), "structural checks hold"),
        ],
        |ctx| {
            let g = pgammal_28()?;
            let mut m = perm_facts(&g, ctx.max_order)?;
            let d = derangement_subgroup(&g, ctx.max_order)?.group;
            let gens = g.generators();
            let mut commutators = Vec::new();
            for a in gens {
                for b in gens {
                    commutators.push(a.inverse().mul(&b.inverse()).mul(a).mul(b));
                }
            }
            m.insert("d_is_derived_subgroup".into(), json!(g.normal_closure(&commutators).same_group(&d)));
            let fp = crate::derange::GroupFingerprint::of(&d)?;
            m.insert("d_center_order".into(), json!(fp.center_order));
            m.insert("d_perfect".into(), json!(fp.derived_order == fp.order));
            Ok(m)
        },
    ));

    type Builder = fn() -> Result<MatrixGroup>;
    let bridges: [(&str, &str, Builder, u64, &str); 3] = [
        ("scalars-3", "scalars in GL(2,3)", || Ok(named::scalars(&field(3, 1), 2)), 2, "C2"),
        ("gl-2-3", "GL(2,3)", || Ok(named::general_linear(&field(3, 1), 2)), 1, "C1"),
        ("klein", "D12 o Q8 in GL(4,5)", || {
            central_product_example(CentralProduct::Klein)
        }, 4, "C2xC2"),
    ];
    for (tag, what, build, index, quotient) in bridges {
        out.push(scenario(
            format!("affine-bridge-{tag}"),
            format!("V : H for H = {what}, permutation side against matrix side"),
            vec![
                exp("perm_index", json!(index), "|G:D(G)| = |H:R(H)|"),
                exp("matrix_index", json!(index), "|H:R(H)| as computed on matrices"),
                exp("quotient", json!(quotient), "quotient type"),
                exp("fingerprints_equal", json!(true), "G/D(G) and H/R(H) have the same invariants"),
            ],
            move |ctx| {
                let h = build()?;
                let g = affine_group(&h)?;
                let a = analyze(&g, &AnalysisOptions { max_order: ctx.max_order, ..AnalysisOptions::default() })?;
                let lin = analyze_linear(&h, ctx.max_order)?;
                let mut m = Map::new();
                m.insert("perm_index".into(), json!(a.report.index));
                m.insert("matrix_index".into(), json!(lin.index));
                m.insert("quotient".into(), json!(a.report.quotient_name));
                m.insert("fingerprints_equal".into(), json!(a.report.quotient.as_ref() == Some(&lin.quotient)));
                Ok(m)
            },
        ));
    }

    for (which, order, index) in [
        (CentralProduct::Klein, 48u64, 4u64),
        (CentralProduct::A4, 528, 12),
        (CentralProduct::A5, 6960, 60),
    ] {
        let e = vec![
            exp("order", json!(order), "order of H"),
            exp("index", json!(index), "index of R(H)"),
            exp("quotient", json!(which.quotient_name()), "quotient type"),
            exp("irreducible", json!(true), "H is irreducible"),
            exp("checks_pass", json!(true), "R(H) is normal and H/R(H) acts semiregularly"),
        ];
        out.push(scenario(
            format!("central-{}", which.name()),
            format!("central product with quotient {}", which.quotient_name()),
            e,
            move |ctx| linear_facts(&central_product_example(which)?, ctx.max_order),
        ));
    }

    for q in [7u64, 11] {
        out.push(scenario(
            format!("dihedral-family-{q}"),
            format!("irreducible subgroup of GL(2,{q}) with dihedral quotient"),
            vec![
                exp("index", json!(q + 1), "index q + 1"),
                exp("quotient", json!(format!("D{}", q + 1)), "quotient dihedral of order q + 1"),
                exp("irreducible", json!(true), "H is irreducible"),
                exp("checks_pass", json!(true), "R(H) is normal and H/R(H) acts semiregularly"),
            ],
            move |ctx| linear_facts(&dihedral_quotient_family(q)?, ctx.max_order),
        ));
    }

    out.push(scenario(
        "frobenius-complement-5-4-3",
        "Z5^3 : (C4 x C3) in product action",
        vec![
            exp("degree", json!(125), "degree 125"),
            exp("order", json!(1500), "order 1500"),
            exp("d_order", json!(375), "D(G) = N^3 : C3"),
            exp("index", json!(4), "index 4"),
            exp("quotient", json!("C4"), "quotient C4"),
            exp("frobenius", json!(false), "G is not a Frobenius group"),
            exp("coordinate_cycle_in_d", json!(true), "the coordinate cycle lies in D(G)"),
            exp("checks_pass", json!(true), "structural checks hold"),
        ],
        |ctx| {
            let g = frobenius_complement_example(5, &unit_multiplier(5, 4)?, 3)?;
            let mut m = perm_facts(&g, ctx.max_order)?;
            let d = derangement_subgroup(&g, ctx.max_order)?.group;
            let cycle = g.generators().last().expect("generators").clone();
            m.insert("coordinate_cycle_in_d".into(), json!(d.contains(&cycle)));
            Ok(m)
        },
    ));

    let coverage: [(&str, &str, fn() -> PermGroup, bool); 3] = [
        ("s2", "S2", || crate::permgrp::standard::symmetric(2), false),
        ("a5", "A5 on 5 points", || crate::permgrp::standard::alternating(5), true),
        ("agl1-5", "AGL(1,5)", || crate::permgrp::standard::affine_line(5), true),
    ];
    for (tag, what, build, covered) in coverage {
        let mut e = vec![exp("covered", json!(covered), "every element of D(G) is a product of two derangements")];
        if !covered {
            e.push(exp("witnesses", json!(["(0 1)"]), "the transposition is not such a product"));
        }
        out.push(scenario(format!("coverage-{tag}"), format!("two-derangement products in {what}"), e, move |ctx| {
            let g = build();
            let d = derangement_subgroup(&g, ctx.max_order)?.group;
            let c = two_derangement_coverage(&g, &d, ctx.max_order)?;
            let mut m = Map::new();
            m.insert("covered".into(), json!(c.covered));
            m.insert("witnesses".into(), json!(c.witnesses.iter().map(|w| w.to_string()).collect::<Vec<_>>()));
            Ok(m)
        }));
    }

    out.push(corpus_scenario(
        "corpus-size",
        "the generated corpus",
        vec![exp("at_least_60", json!(true), "at least 60 transitive groups")],
        |ctx| Ok(Map::from_iter([("at_least_60".to_string(), json!(ctx.corpus.len() >= 60))])),
    ));
    let summaries: [(&str, &str, &str, fn(&CorpusResult) -> bool); 7] = [
        ("corpus-structure", "normality, orbit and fixed-point structure of D(G)", "structure holds on every group", |r| {
            r.checks.thm1a && r.checks.thm1b && r.checks.thm1c && r.checks.thm1d
        }),
        ("corpus-point-stabilizer", "index divisibility and the point stabilizer", "both corollaries hold on every group", |r| {
            r.checks.cor1 && r.checks.cor2
        }),
        ("corpus-imprimitive-bound", "(index + 1)^2 <= n for imprimitive groups", "no imprimitive group violates the bound", |r| {
            !r.imprimitive || r.checks.bound
        }),
        ("corpus-bound", "the index bound for each regime", "no group violates its regime's bound", |r| r.checks.bound),
        ("corpus-coset-average", "average fixed points over random cosets tG", "the average is exactly 1", |r| {
            r.checks.coset_average
        }),
        ("corpus-abundance", "at least |G|/n derangements", "every group has at least |G|/n derangements", |r| {
            r.checks.abundance
        }),
        ("corpus-frobenius-coverage", "Frobenius kernels as products of two derangements", "every kernel of order at least 3 is covered", |r| {
            r.checks.coverage != Some(false)
        }),
    ];
    for (id, description, claim, pred) in summaries {
        out.push(corpus_scenario(id, description, vec![exp("failures", json!(0), claim)], move |ctx| {
            let failed: Vec<&str> =
                ctx.corpus.iter().filter(|r| r.error.is_some() || !pred(r)).map(|r| r.name.as_str()).collect();
            let mut m = Map::new();
            m.insert("failures".into(), json!(failed.len()));
            m.insert("failed_groups".into(), json!(failed));
            Ok(m)
        }));
    }
    out
}

fn evaluate(s: &Scenario, ctx: &Context, timing: bool) -> RunReport {
    let start = Instant::now();
    let outcome = (s.run)(ctx);
    let wall_ms = timing.then(|| start.elapsed().as_millis() as u64);
    match outcome {
        Ok(values) => {
            let checks: Vec<CheckResult> = s
                .expectations
                .iter()
                .map(|e| {
                    let actual = values.get(e.field).cloned().unwrap_or(Value::Null);
                    CheckResult { field: e.field.to_string(), pass: actual == e.expected, expected: e.expected.clone(), actual }
                })
                .collect();
            RunReport {
                id: s.id.clone(),
                description: s.description.clone(),
                pass: checks.iter().all(|c| c.pass),
                checks,
                error: None,
                wall_ms,
            }
        }
        Err(err) => RunReport {
            id: s.id.clone(),
            description: s.description.clone(),
            pass: false,
            checks: Vec::new(),
            error: Some(err.to_string()),
            wall_ms,
        },
    }
}

/// Runs the given scenarios in parallel; reports come back in input order.
///
/// The corpus is checked once up front when any scenario needs it.
pub fn run_scenarios(list: &[Scenario], opts: &RunOptions) -> Result<Vec<RunReport>> {
    let work = || {
        let corpus = if list.iter().any(|s| s.needs_corpus) {
            run_corpus(&corpus(), &CorpusOptions { max_order: opts.max_order, inject_fault: opts.inject_fault })
        } else {
            Vec::new()
        };
        let ctx = Context { max_order: opts.max_order, corpus };
        list.par_iter().map(|s| evaluate(s, &ctx, opts.timing)).collect()
    };

    with_workers(opts.workers, work)
}

/// Runs `f` on a pool of `workers` threads, or on the global pool when `None`.
pub fn with_workers<T: Send>(workers: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T> {
    match workers {
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .map_err(|e| Error::Internal(format!("thread pool: {e}")))?;
            Ok(pool.install(f))
        }
        None => Ok(f()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_are_unique_and_reports_round_trip() {
        let list = scenarios();
        let mut ids: Vec<&str> = list.iter().map(|s| s.id.as_str()).collect();
        ids.sort();
        ids.dedup();
        assert_eq!(ids.len(), list.len());

        let small: Vec<Scenario> = scenarios().into_iter().filter(|s| s.id == "coverage-s2" || s.id == "agl1-5").collect();
        let reports = run_scenarios(&small, &RunOptions::default()).unwrap();
        assert!(reports.iter().all(|r| r.pass), "{reports:?}");
        let text = serde_json::to_string(&reports).unwrap();
        let back: Vec<RunReport> = serde_json::from_str(&text).unwrap();
        assert_eq!(back, reports);
    }
}
