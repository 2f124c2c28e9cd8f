//! Exact computations with strict 2-groups, crossed modules, and the Hopf-algebraic
//! structures obtained from them by the group-algebra and function-algebra functors.
//!
//! Everything is finite and exact: scalars live in `Q` or `F_p`, groups are
//! multiplication tables, and every law is checked by exhaustive enumeration.

pub mod cli;
pub mod cotrialg;
pub mod error;
pub mod exactlin;
pub mod fingrp;
pub mod hopf;
pub mod hopflimits;
pub mod repcat;
pub mod report;
pub mod trialg;
pub mod twogroup;
pub mod xmod;

pub use error::{Error, Result};
pub use report::{CheckRecord, Report};
