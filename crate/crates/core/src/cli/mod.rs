//! File formats, reports and verification campaigns behind the `zmx` binary.

pub mod io;
pub mod report;
pub mod verify;

pub use io::{parse_json, parse_matrix, parse_plain, to_json, to_plain};
pub use report::{describe, emit_report, format_perron, CyclicInfo, ReportFormat};
pub use verify::{run_verify, Theorem, TrialFailure, VerifyConfig, VerifySummary};

/// Environment variable overriding the minor-enumeration cap.
pub const ORDER_CAP_ENV: &str = "ZMX_ORDER_CAP";
