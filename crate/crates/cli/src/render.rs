use std::fmt::Write;

use dgroup::derange::{AnalysisReport, LinearReport};
use dgroup::suite::{CorpusResult, RunReport};

fn row(out: &mut String, key: &str, value: impl std::fmt::Display) {
    writeln!(out, "{key:<14} {value}").unwrap();
}

fn mark(ok: bool) -> &'static str {
    if ok {
        "ok"
    } else {
        "FAIL"
    }
}

pub fn analysis_table(r: &AnalysisReport) -> String {
    let mut out = String::new();
    row(&mut out, "degree", r.degree);
    row(&mut out, "order", r.order);
    row(&mut out, "derangements", r.derangements);
    row(&mut out, "d_order", r.d_order);
    row(&mut out, "index", r.index);
    row(&mut out, "quotient", &r.quotient_name);
    row(&mut out, "rank_g", r.rank_g);
    row(&mut out, "rank_n", r.rank_n);
    row(&mut out, "primitive", r.primitive);
    row(&mut out, "frobenius", r.frobenius);
    row(&mut out, "regime", serde_json::to_value(r.regime).unwrap().as_str().unwrap_or("?"));
    row(&mut out, "splits", r.splits.map_or("not checked".to_string(), |s| s.to_string()));
    let c = &r.checks;
    for (name, ok) in [
        ("thm1a", c.thm1a),
        ("thm1b", c.thm1b),
        ("thm1c", c.thm1c),
        ("thm1d", c.thm1d),
        ("cor1", c.cor1),
        ("cor2", c.cor2),
        ("bound", c.bound),
    ] {
        row(&mut out, name, mark(ok));
    }
    out
}

pub fn linear_table(r: &LinearReport) -> String {
    let mut out = String::new();
    row(&mut out, "field", format!("GF({}^{})", r.p, r.f));
    row(&mut out, "dim", r.dim);
    row(&mut out, "order", r.order);
    row(&mut out, "r_order", r.r_order);
    row(&mut out, "index", r.index);
    row(&mut out, "quotient", &r.quotient_name);
    row(&mut out, "irreducible", r.irreducible.map_or("not checked".to_string(), |b| b.to_string()));
    row(&mut out, "r_normal", mark(r.r_normal));
    row(&mut out, "bound", format!("{} <= {}: {}", r.index, r.bound, mark(r.within_bound)));
    row(&mut out, "semiregular", mark(r.semiregular));
    out
}

pub fn scenario_table(reports: &[RunReport]) -> String {
    let mut out = String::new();
    for r in reports {
        write!(out, "{} {:<30} {}", if r.pass { "PASS" } else { "FAIL" }, r.id, r.description).unwrap();
        if let Some(ms) = r.wall_ms {
            write!(out, " ({ms} ms)").unwrap();
        }
        out.push('\n');
        if let Some(e) = &r.error {
            writeln!(out, "     error: {e}").unwrap();
        }
        for c in r.checks.iter().filter(|c| !c.pass) {
            writeln!(out, "     {}: expected {}, got {}", c.field, c.expected, c.actual).unwrap();
        }
    }
    let passed = reports.iter().filter(|r| r.pass).count();
    writeln!(out, "{passed}/{} scenarios passed", reports.len()).unwrap();
    out
}

pub fn corpus_table(results: &[CorpusResult]) -> String {
    let mut out = String::new();
    for r in results {
        write!(out, "{} {:<28} n={:<4} |G|={:<8} index={:<3} {}", if r.pass() { "PASS" } else { "FAIL" }, r.name, r.degree, r.order, r.index, r.quotient_name).unwrap();
        if let Some(e) = &r.error {
            write!(out, " error: {e}").unwrap();
        }
        out.push('\n');
        if r.error.is_none() && !r.checks.all() {
            let c = &r.checks;
            let failed: Vec<&str> = [
                ("thm1a", c.thm1a),
                ("thm1b", c.thm1b),
                ("thm1c", c.thm1c),
                ("thm1d", c.thm1d),
                ("cor1", c.cor1),
                ("cor2", c.cor2),
                ("bound", c.bound),
                ("coset_average", c.coset_average),
                ("abundance", c.abundance),
                ("coverage", c.coverage != Some(false)),
                ("complement", c.complement_fixes_point != Some(false)),
            ]
            .into_iter()
            .filter(|&(_, ok)| !ok)
            .map(|(n, _)| n)
            .collect();
            writeln!(out, "     failed: {}", failed.join(", ")).unwrap();
        }
    }
    let failures = results.iter().filter(|r| !r.pass()).count();
    writeln!(out, "{} groups, {failures} failures", results.len()).unwrap();
    out
}
