//! A workbench for three-dimensional filtered `(phi, N)`-modules over
//! `Q_p(p^(1/e))`: module files, the `phin` command line, and a seeded
//! certification campaign that checks the classifier against independent
//! oracles.
//!
//! Every command returns a [`Report`], whose [`Verdict`] decides the exit
//! code: 0 for a positive answer, 1 for a negative one and 2 for an error.
//!
//! ```
//! use phin_workbench::commands;
//!
//! let report = commands::enumerate(1, 2, Some(2));
//! assert_eq!(report.exit_code(), 0);
//! assert_eq!(report.result["families"][0]["id"], "R2_3");
//! ```

pub mod certify;
pub mod commands;
mod error;
mod files;
pub mod random;
mod report;

pub use certify::{certify, CampaignReport, CertifyConfig, Counterexample, Fault, StageReport};
pub use error::WorkbenchError;
pub use files::{module_to_string, parse_module_file, parse_module_str, write_module_file};
pub use report::{Report, Verdict};
