//! The corpus, its property checks and the scenario suite.

pub mod checks;
pub mod corpus;
pub mod scenarios;

pub use checks::{run_corpus, CorpusChecks, CorpusOptions, CorpusResult, COSET_SAMPLES, COSET_SEED};
pub use corpus::{corpus, CorpusEntry};
pub use scenarios::{run_scenarios, with_workers, scenarios, CheckResult, Expectation, RunOptions, RunReport, Scenario};
