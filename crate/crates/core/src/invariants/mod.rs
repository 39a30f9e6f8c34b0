//! Length sequences, limit estimates and regularity criteria.

mod monomial;
mod reports;
mod sequence;

pub use monomial::monomial_ehk_exact;
pub use reports::{
    cm_depth, corollary_check, ehk_sequence, inequality_suite, kunz_test, lemma_check, regularity_report, ti_sequence,
    Check, CorollaryReport, DepthReport, InequalityReport, InequalityRow, KunzResult, LemmaReport, MaximalSequences,
    RegularityReport, Verdict,
};
pub use sequence::{extrapolate, non_shrinking_differences, LengthSequence, LimitEstimate, SequenceKind};
