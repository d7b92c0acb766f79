mod construct;
mod render;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use dgroup::derange::{analyze, analyze_linear, AnalysisOptions};
use dgroup::matgrp::io::parse_matrix_group;
use dgroup::permgrp::{io::parse_perm_group, DEFAULT_MAX_DEGREE, DEFAULT_MAX_ORDER};
use dgroup::suite::{corpus, run_corpus, run_scenarios, scenarios, with_workers, CorpusOptions, RunOptions};
use dgroup::Error;

use construct::{Built, Family};

#[derive(Parser)]
#[command(name = "dgroup", version, about = "Subgroups generated by derangements and by eigenvalue-one elements")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct Global {
    /// Emit JSON instead of a table.
    #[arg(long, global = true)]
    json: bool,
    /// Largest group order enumerated.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_ORDER)]
    max_order: u64,
    /// Largest permutation degree accepted from input files.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_DEGREE)]
    max_degree: u64,
    /// Worker threads for suite runs.
    #[arg(long, global = true)]
    workers: Option<usize>,
    /// Include wall-clock times in suite output.
    #[arg(long, global = true)]
    timing: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze a group read from a file.
    Analyze {
        path: PathBuf,
        /// Input kind; detected from the header when omitted.
        #[arg(long, value_enum)]
        kind: Option<Kind>,
    },
    /// Run a built-in suite.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        /// Run the structural checks against D(G) with one generator dropped.
        #[arg(long)]
        inject_fault: bool,
    },
    /// Build a group from a named family and write it in the text format.
    Construct {
        #[arg(value_enum)]
        family: Family,
        params: Vec<String>,
        /// Analyze the constructed group as well.
        #[arg(long)]
        analyze: bool,
        /// Write the group here instead of standard output.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Perm,
    Mat,
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    Paper,
    Corpus,
}

enum Outcome {
    Pass,
    Fail,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Analyze { path, kind } => analyze_file(&cli.global, &path, kind),
        Command::Verify { suite, inject_fault } => verify(&cli.global, suite, inject_fault),
        Command::Construct { family, params, analyze, output } => {
            construct_cmd(&cli.global, family, &params, analyze, output.as_deref())
        }
    };
    match result {
        Ok(Outcome::Pass) => ExitCode::SUCCESS,
        Ok(Outcome::Fail) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Parse { .. } | Error::ConstraintViolated(_) => ExitCode::from(2),
                _ => ExitCode::from(1),
            }
        }
    }
}

fn analyze_file(g: &Global, path: &Path, kind: Option<Kind>) -> dgroup::Result<Outcome> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::Parse { line: 0, msg: format!("cannot read {}: {e}", path.display()) })?;
    let kind = kind.unwrap_or_else(|| {
        let first = text.lines().map(|l| l.split('#').next().unwrap_or("").trim()).find(|l| !l.is_empty());
        if first.is_some_and(|l| l.starts_with("matgroup")) {
            Kind::Mat
        } else {
            Kind::Perm
        }
    });
    let built = match kind {
        Kind::Perm => Built::Perm(parse_perm_group(&text, g.max_degree)?),
        Kind::Mat => Built::Mat(parse_matrix_group(&text)?),
    };
    analyze_built(g, &built)
}

fn analyze_built(g: &Global, built: &Built) -> dgroup::Result<Outcome> {
    let pass = match built {
        Built::Perm(group) => {
            let report = analyze(group, &AnalysisOptions { max_order: g.max_order, ..AnalysisOptions::default() })?.report;
            print(g, &report, render::analysis_table(&report));
            report.checks.all()
        }
        Built::Mat(h) => {
            let report = analyze_linear(h, g.max_order)?;
            print(g, &report, render::linear_table(&report));
            report.checks_pass()
        }
    };
    Ok(if pass { Outcome::Pass } else { Outcome::Fail })
}

fn print<T: serde::Serialize>(g: &Global, value: &T, table: String) {
    if g.json {
        println!("{}", serde_json::to_string_pretty(value).expect("serializable report"));
    } else {
        print!("{table}");
    }
}

fn verify(g: &Global, suite: Suite, inject_fault: bool) -> dgroup::Result<Outcome> {
    let pass = match suite {
        Suite::Paper => {
            let opts = RunOptions { max_order: g.max_order, workers: g.workers, timing: g.timing, inject_fault };
            let reports = run_scenarios(&scenarios(), &opts)?;
            print(g, &reports, render::scenario_table(&reports));
            reports.iter().all(|r| r.pass)
        }
        Suite::Corpus => {
            let opts = CorpusOptions { max_order: g.max_order, inject_fault };
            let results = with_workers(g.workers, || run_corpus(&corpus(), &opts))?;
            print(g, &results, render::corpus_table(&results));
            results.iter().all(|r| r.pass())
        }
    };
    Ok(if pass { Outcome::Pass } else { Outcome::Fail })
}

fn construct_cmd(
    g: &Global,
    family: Family,
    params: &[String],
    and_analyze: bool,
    output: Option<&Path>,
) -> dgroup::Result<Outcome> {
    let built = construct::build(family, params, g.max_degree)?;
    let text = built.to_text();
    match output {
        Some(path) => fs::write(path, &text).map_err(|e| Error::Internal(format!("cannot write {}: {e}", path.display())))?,
        None if !and_analyze => print!("{text}"),
        None => {}
    }
    if and_analyze {
        analyze_built(g, &built)
    } else {
        Ok(Outcome::Pass)
    }
}
