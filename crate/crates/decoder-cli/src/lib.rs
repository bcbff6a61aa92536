//! Decoding affine-variety codes with precomputed locator tables.
//!
//! A code is described by a small configuration file ([`CodeConfig`]).
//! [`DecoderTables::build`] computes the reduced Gröbner basis of the
//! ghost-point decoding ideal and extracts the error locators (optionally
//! stuffed so that they have no parasite roots) and the error evaluator.
//! [`decode`] runs the locators on a syndrome, [`verify_exhaustive`] checks
//! every correctable error, and [`analyze`] reports the fiber structure of
//! the decoding ideal.

mod analyze;
mod config;
mod decode;
mod sections;
mod tables;
mod verify;

pub use analyze::{analyze, Analysis};
pub use config::CodeConfig;
pub use decode::{decode, predict_weight, CandidateStep, DecodeResult, DecodeStatus, Received, WeightPrediction};
pub use tables::{BuildMetadata, BuildOptions, DecoderTables};
pub use verify::{verify_exhaustive, Mismatch, VerifyReport};

use code_core::CodeError;
use decoding_ideals::DecodingError;
use groebner::GroebnerError;
use mpoly::MpolyError;

/// Process exit codes of the command-line tool.
pub mod exit_code {
    pub const OK: u8 = 0;
    pub const VERIFICATION_FAILED: u8 = 1;
    pub const INVALID_INPUT: u8 = 2;
    pub const CONTRACT_VIOLATION: u8 = 3;
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DecoderError {
    #[error("line {line}: {message}")]
    Config { line: usize, message: String },
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Io(String),
    #[error("the tables have no error evaluator")]
    EvaluatorMissing,
    #[error(transparent)]
    Code(#[from] CodeError),
    #[error(transparent)]
    Decoding(#[from] DecodingError),
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
    #[error(transparent)]
    Poly(#[from] MpolyError),
}

impl DecoderError {
    /// Invalid configurations and inputs map to
    /// [`exit_code::INVALID_INPUT`]; failures of the construction itself,
    /// such as a missing locator, to [`exit_code::CONTRACT_VIOLATION`].
    pub fn exit_code(&self) -> u8 {
        match self {
            DecoderError::Decoding(
                DecodingError::LocatorMissing { .. }
                | DecodingError::StuffingIncomplete(_)
                | DecodingError::RingMismatch
                | DecodingError::Points(_)
                | DecodingError::TooLarge(_)
                | DecodingError::Groebner(_)
                | DecodingError::Poly(_),
            )
            | DecoderError::Groebner(_)
            | DecoderError::Poly(_) => exit_code::CONTRACT_VIOLATION,
            _ => exit_code::INVALID_INPUT,
        }
    }
}
