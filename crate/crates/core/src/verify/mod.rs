//! Uniform verifiers, the identity regression suite and machine-readable reports.

pub mod identities;
pub mod report;
pub mod suite;
pub mod swap;
pub mod tables;

pub use suite::{checks, run_checks, run_suite, CheckDef, Group};
pub use report::{CheckReport, Expected, Provenance, Status};

pub use swap::{goldman_properties, verify_central, verify_swap};
