//! Ghost-point selection and the degree bounds it induces.

use std::collections::HashSet;

use code_core::AffineVarietyCode;
use mpoly::Elem;

use crate::DecodingError;

/// Coordinates `k` at which `point` takes a value that no variety point has.
fn missing_components(code: &AffineVarietyCode, point: &[Elem]) -> Vec<usize> {
    (0..code.m()).filter(|&k| code.points().iter().all(|p| p[k] != point[k])).collect()
}

/// Whether `point` is an optimal ghost point, that is some coordinate of it
/// misses the variety's projection, together with all such coordinates
/// (0-based, in the code's variable order).
pub fn is_optimal_ghost(code: &AffineVarietyCode, point: &[Elem]) -> (bool, Vec<usize>) {
    let missing = missing_components(code, point);
    (!missing.is_empty(), missing)
}

/// The first point outside the variety in canonical scan order (first
/// coordinate slowest), preferring optimal ghost points when any exists.
pub fn choose_ghost_point(code: &AffineVarietyCode) -> Result<Vec<Elem>, DecodingError> {
    let els = code.field().elements();
    let m = code.m();
    let total = (els.len() as u64).checked_pow(m as u32).unwrap_or(u64::MAX);
    if total > code_core::MAX_SCAN {
        return Err(DecodingError::Code(code_core::CodeError::TooLarge(total)));
    }
    let on_variety: HashSet<&[Elem]> = code.points().iter().map(Vec::as_slice).collect();
    let mut first_free = None;
    let mut digits = vec![0usize; m];
    loop {
        let point: Vec<Elem> = digits.iter().map(|&d| els[d]).collect();
        if !on_variety.contains(point.as_slice()) {
            if !missing_components(code, &point).is_empty() {
                return Ok(point);
            }
            first_free.get_or_insert(point);
        }
        let Some(k) = (0..m).rev().find(|&k| digits[k] + 1 < els.len()) else {
            break;
        };
        digits[k] += 1;
        digits[k + 1..].iter_mut().for_each(|d| *d = 0);
    }
    first_free.ok_or(DecodingError::NoGhostAvailable)
}

/// For each `i = 1..m`, `min{t, |{(x_1..x_i)(P) : P ∈ V(I) ∪ {P₀}}|}`: the
/// number of distinct length-`i` prefixes of the variety points and the
/// ghost point, capped at `t`. Coordinates are taken in `coordinate_order`
/// (indices into the code's variables).
pub fn compute_t_bounds(code: &AffineVarietyCode, ghost: &[Elem], coordinate_order: &[usize]) -> Vec<usize> {
    let reorder = |p: &[Elem]| -> Vec<Elem> { coordinate_order.iter().map(|&k| p[k]).collect() };
    let points: Vec<Vec<Elem>> =
        code.points().iter().map(|p| reorder(p)).chain(std::iter::once(reorder(ghost))).collect();
    (1..=coordinate_order.len())
        .map(|i| {
            let prefixes: HashSet<&[Elem]> = points.iter().map(|p| &p[..i]).collect();
            prefixes.len().min(code.t())
        })
        .collect()
}
