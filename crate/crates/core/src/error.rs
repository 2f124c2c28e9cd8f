use thiserror::Error;

use crate::exactlin::LinAlgError;
use crate::fingrp::GroupError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    LinAlg(#[from] LinAlgError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("characteristic {p} divides the group order {order}")]
    Characteristic { p: u64, order: usize },
    #[error("field is not a splitting field: {0}")]
    NotSplitting(String),
    #[error("signature mismatch: {0}")]
    Mismatch(String),
    #[error("pair not composable: s(a) = {s_a}, t(b) = {t_b}")]
    NotComposable { s_a: usize, t_b: usize },
    #[error("invalid {what}: {detail}")]
    Invalid { what: &'static str, detail: String },
    #[error("precondition failed: {0}")]
    Precondition(String),
}

impl Error {
    pub(crate) fn invalid(what: &'static str, detail: impl Into<String>) -> Self {
        Error::Invalid {
            what,
            detail: detail.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
