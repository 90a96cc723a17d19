//! Closed-form predictions, moment identities, bounds and the verifier that
//! compares them with enumeration.

mod bounds;
pub mod exact;
mod moments;
mod predict;
mod report;
mod summary;
mod verify;

pub use bounds::{griesmer_ok, griesmer_sum, griesmer_tight, sphere_packing_distance_optimal, sphere_packing_ok};
pub use moments::{pless_check, PlessCheck};
pub use predict::{
    hypothesis_violations, predict, Claim, DualPrediction, PredictParams, PredictedRow, Prediction, TheoremId,
};
pub use report::{render_batch, render_report, summary_csv, verify_batch, BatchEntry, BatchReport, Refusal};
pub use summary::{build_report, spectrum_report, BoundVerdicts, BuildReport, Outcome, SpectrumReport};
pub use verify::{
    gold_support_a4, resolve, table_u64, verify, walsh_at_zero, Case, Check, CodeParams, EnumeratedSummary,
    FieldInfo, PredictedSummary, Resolved, RowComparison, Table, VerificationReport, Verdict, VerifyOptions,
};
