//! Sparse multivariate polynomials over small finite fields.
//!
//! Rings have at most [`MAX_VARS`] variables ordered by position (later
//! variables are bigger) and use lexicographic or block-lexicographic term
//! orders. Polynomials support ring arithmetic, evaluation and partial
//! specialization, Hasse derivatives, exhaustive univariate root finding with
//! multiplicities, and a small text grammar for input and output.

mod monomial;
mod parse;
mod poly;
mod ring;
mod univariate;

pub use gf::{Elem, Field};
pub use monomial::{Monomial, MAX_EXP, MAX_VARS};
pub use parse::{format_poly, parse_poly};
pub use poly::{binomial_mod_p, Poly, Term};
pub use ring::{Block, PolyRing, TermOrder, VarSet};
pub use univariate::{multiplicity_at, roots_univariate};

/// Errors raised by polynomial construction and arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MpolyError {
    #[error("operands belong to different polynomial rings")]
    RingMismatch,
    #[error("operation undefined on the zero polynomial")]
    ZeroPolynomial,
    #[error("unknown variable '{0}'")]
    UnknownVariable(String),
    #[error("variable '{0}' has no assigned value")]
    UnassignedVariable(String),
    #[error("'{0}' is not a valid variable name")]
    InvalidVariable(String),
    #[error("'{0}' is reserved for the field generator")]
    ReservedName(String),
    #[error("variable '{0}' is listed twice")]
    DuplicateVariable(String),
    #[error("{0} variables exceed the supported maximum of 16")]
    TooManyVariables(usize),
    #[error("an exponent exceeds the supported maximum of 127")]
    ExponentOverflow,
    #[error("polynomial involves more than the designated variable")]
    NotUnivariate,
    #[error("parse error at offset {position} in {input:?}: {message}")]
    Parse { position: usize, message: String, input: String },
}
