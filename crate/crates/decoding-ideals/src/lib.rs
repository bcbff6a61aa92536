//! Decoding ideals for affine-variety codes.
//!
//! For a code `C⊥(I, L)` correcting `t` errors, a decoding ideal lives in
//! `GF(q)[S, X_t, …, X_1, E]`: `S = s_1..s_r` are syndrome variables, each
//! `X_j` holds the `m` coordinates of one error location and `E = e_t..e_1`
//! holds the error values. Three families are built ([`Variant`]): the plain
//! one, one forcing distinct locations, and the ghost-point ideal `J_*` that
//! pads errors of weight `μ < t` with `t − μ` slots at a point `P₀` outside the
//! variety carrying the value 0.
//!
//! From a lex Gröbner basis of `J_*` this crate reads weak locators, raises
//! root multiplicities ("stuffing") so that the locators have no parasite
//! roots, extracts the error evaluator, and analyzes the fiber structure of
//! the variety that makes all of this work.

mod evviva;
mod ghost;
mod ideal;
mod locators;
mod stratification;
mod stuffing;
mod variety;

pub use evviva::{check_evviva, EvvivaReport};
pub use ghost::{choose_ghost_point, compute_t_bounds, is_optimal_ghost};
pub use ideal::{build_ideal, DecodingIdealSpec, Variant};
pub use locators::{extract_evaluator, extract_locators, extract_weak_locators, EvaluatorPoly, Flavor, LocatorSet};
pub use stratification::{analyze_stratification, BlockReport, SlotReport, StratificationReport};
pub use stuffing::{stuff_ideal, StuffedIdeal, StuffedSlot};
pub use variety::{semantic_variety, variety_from_basis};

use code_core::CodeError;
use groebner::GroebnerError;
use mpoly::MpolyError;
use points_ideals::PointsError;

/// Errors raised while building or analyzing decoding ideals.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DecodingError {
    #[error("the ghost point lies on the variety")]
    GhostOnVariety,
    #[error("every point of the ambient space lies on the variety, so no ghost point exists")]
    NoGhostAvailable,
    #[error("this ideal family needs a ghost point")]
    GhostRequired,
    #[error("the ghost point has {found} coordinates but the code has {expected}")]
    GhostDimension { expected: usize, found: usize },
    #[error("invalid coordinate order: {0}")]
    CoordinateOrder(String),
    #[error("this operation needs the ghost-point ideal")]
    GhostIdealRequired,
    #[error("no basis element in the slot of '{variable}' has a pure-power leading term: {reason}")]
    LocatorMissing { variable: String, reason: String },
    #[error("the basis ring does not match the decoding ring")]
    RingMismatch,
    #[error("variety enumeration exceeded {0} partial points")]
    TooLarge(usize),
    #[error("stuffing left parasite roots over {0} prefixes")]
    StuffingIncomplete(usize),
    #[error(transparent)]
    Code(#[from] CodeError),
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
    #[error(transparent)]
    Poly(#[from] MpolyError),
    #[error(transparent)]
    Points(#[from] PointsError),
}
