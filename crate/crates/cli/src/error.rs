use std::fmt;

use repcontain_core::chartab::ChartabError;
use repcontain_core::exact::ExactError;
use repcontain_core::gl2ring::RingError;
use repcontain_core::groups::GroupError;
use repcontain_core::lambda::LambdaError;
use repcontain_core::preceq::PreceqError;
use repcontain_core::satake::SatakeError;

/// Failure categories, each with its own exit code.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    /// A check ran and its answer was negative, or a computation failed.
    Mismatch,
    /// A configured bound refused the computation.
    Resource,
    /// Malformed invocation or input.
    Usage,
}

impl Kind {
    pub fn exit_code(self) -> i32 {
        match self {
            Kind::Mismatch => 1,
            Kind::Resource => 2,
            Kind::Usage => 64,
        }
    }
}

#[derive(Debug, Clone)]
pub struct CliError {
    pub kind: Kind,
    pub message: String,
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> Self {
        CliError { kind: Kind::Usage, message: message.into() }
    }

    pub fn mismatch(message: impl Into<String>) -> Self {
        CliError { kind: Kind::Mismatch, message: message.into() }
    }

    pub fn resource(message: impl Into<String>) -> Self {
        CliError { kind: Kind::Resource, message: message.into() }
    }

    pub fn exit_code(&self) -> i32 {
        self.kind.exit_code()
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl std::error::Error for CliError {}

fn exact_kind(e: &ExactError) -> Kind {
    match e {
        ExactError::FieldTooLarge { .. } => Kind::Resource,
        ExactError::NotPrimePower(_) => Kind::Usage,
        _ => Kind::Mismatch,
    }
}

fn group_kind(e: &GroupError) -> Kind {
    match e {
        GroupError::BoundExceeded { .. } => Kind::Resource,
        GroupError::Field(x) => exact_kind(x),
        GroupError::InvalidParameter(_) | GroupError::Parse | GroupError::NotBijection | GroupError::MixedCarriers => {
            Kind::Usage
        }
        _ => Kind::Mismatch,
    }
}

fn chartab_kind(e: &ChartabError) -> Kind {
    match e {
        ChartabError::TooManyClasses { .. } => Kind::Resource,
        ChartabError::NotPrimePower(_) => Kind::Usage,
        ChartabError::Group(g) => group_kind(g),
        ChartabError::Exact(x) => exact_kind(x),
        _ => Kind::Mismatch,
    }
}

fn lambda_kind(e: &LambdaError) -> Kind {
    match e {
        LambdaError::Chartab(c) => chartab_kind(c),
        _ => Kind::Mismatch,
    }
}

macro_rules! from_core {
    ($t:ty, $f:expr) => {
        impl From<$t> for CliError {
            fn from(e: $t) -> Self {
                CliError { kind: $f(&e), message: e.to_string() }
            }
        }
    };
}

from_core!(ExactError, exact_kind);
from_core!(GroupError, group_kind);
from_core!(ChartabError, chartab_kind);
from_core!(LambdaError, lambda_kind);
from_core!(PreceqError, |e: &PreceqError| match e {
    PreceqError::Lambda(l) => lambda_kind(l),
    _ => Kind::Mismatch,
});
from_core!(RingError, |e: &RingError| match e {
    RingError::BoundExceeded { .. } => Kind::Resource,
    RingError::Parse { .. } => Kind::Usage,
    _ => Kind::Mismatch,
});
from_core!(SatakeError, |e: &SatakeError| match e {
    SatakeError::BadTolerance => Kind::Usage,
    _ => Kind::Mismatch,
});

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::usage(e.to_string())
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::usage(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
