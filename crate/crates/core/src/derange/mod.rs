//! The subgroup generated by derangements and the checks built on it.

mod analysis;
mod complement;
mod coverage;
mod fingerprint;
mod linear;

pub use analysis::{
    analyze, bound_check, check_theorem1_for, derangement_set, derangement_subgroup, is_frobenius,
    verify_corollaries, verify_theorem1, Analysis, AnalysisOptions, AnalysisReport, BoundCheck, CorollaryChecks,
    DerangementSubgroup, Regime, ReportChecks, Theorem1Checks,
};
pub use complement::{complement_search, Complement, COMPLEMENT_ORDER_LIMIT};
pub use coverage::{two_derangement_coverage, Coverage, PAIR_CAP};
pub use fingerprint::{identify_fingerprint, identify_quotient, GroupFingerprint};
pub use linear::{analyze_linear, LinearReport};
