//! Two independent descriptions of the variety of `J_*`: one built from its
//! meaning (every correctable error, padded with ghost slots, in every slot
//! order) and one read off a lex Gröbner basis by back-substitution.

use std::collections::HashSet;

use groebner::GroebnerBasis;
use mpoly::{Elem, Poly};
use points_ideals::PointSet;

use crate::{DecodingError, DecodingIdealSpec, Variant};

/// Largest number of partial points kept while extending a variety.
const MAX_PARTIAL_POINTS: usize = 1 << 22;

/// Every permutation of `0..n`, in lexicographic order.
fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..n).collect();
    loop {
        out.push(current.clone());
        let Some(i) = (1..n).rev().find(|&i| current[i - 1] < current[i]) else {
            return out;
        };
        let pivot = i - 1;
        let swap = (i..n).rev().find(|&k| current[k] > current[pivot]).expect("a larger element exists");
        current.swap(pivot, swap);
        current[i..].reverse();
    }
}

/// Sorts points by the canonical order of their coordinates.
pub(crate) fn sort_canonically(field: &mpoly::Field, points: &mut [Vec<Elem>]) {
    points.sort_by_cached_key(|p| p.iter().map(|&e| field.canonical_index(e)).collect::<Vec<_>>());
}

/// The variety of the ghost-point ideal described directly: for each error
/// of weight `μ ≤ t`, its `μ` (location, value) pairs and `t − μ` copies of
/// `(P₀, 0)` are placed in the slots `1..t` in every order, next to the
/// error's syndrome. Points follow the locator ring's variable order and
/// are listed canonically.
pub fn semantic_variety(spec: &DecodingIdealSpec) -> Result<PointSet, DecodingError> {
    if spec.variant() != Variant::Star {
        return Err(DecodingError::GhostIdealRequired);
    }
    let code = spec.code();
    let ghost = spec.to_coordinate_order(spec.ghost().ok_or(DecodingError::GhostRequired)?);
    let (r, t) = (spec.r(), spec.t());
    let nvars = spec.locator_ring().nvars();
    let orders = permutations(t);
    let mut seen: HashSet<Vec<Elem>> = HashSet::new();
    for pattern in code.correctable_patterns() {
        let syndrome = code.pattern_syndrome(&pattern)?;
        let mut slots: Vec<(Vec<Elem>, Elem)> = pattern
            .entries()
            .iter()
            .map(|&(pos, value)| (spec.to_coordinate_order(&code.points()[pos]), value))
            .collect();
        slots.resize(t, (ghost.clone(), Elem::ZERO));
        for order in &orders {
            let mut point = vec![Elem::ZERO; nvars];
            point[..r].copy_from_slice(&syndrome);
            for (j, &slot) in (1..=t).zip(order) {
                let (location, value) = &slots[slot];
                for (k, &x) in location.iter().enumerate() {
                    point[spec.location_var(j, k)] = x;
                }
                point[spec.value_var(j)] = *value;
            }
            seen.insert(point);
        }
    }
    let mut points: Vec<Vec<Elem>> = seen.into_iter().collect();
    sort_canonically(code.field(), &mut points);
    Ok(PointSet::new(spec.locator_ring(), points)?)
}

/// Index of the largest variable of `f`, or `None` for constants.
fn top_variable(f: &Poly) -> Option<usize> {
    let support = f.support();
    (support != 0).then(|| 31 - support.leading_zeros() as usize)
}

/// The zeros over `GF(q)` of a lex Gröbner basis, found one variable at
/// a time: a partial point on the first `k` variables is extended by every
/// field element that annihilates the basis elements whose largest variable
/// is the `(k+1)`-th. Because the basis is lex, each prefix of the result
/// is exactly the variety of the corresponding elimination ideal.
///
/// `seed` optionally supplies candidate values for a leading run of
/// variables (for instance the syndromes of correctable errors when the
/// syndrome space is too large to scan); they are filtered by the basis
/// like any other partial point. Points are returned canonically sorted.
pub fn variety_from_basis(
    basis: &GroebnerBasis,
    seed: Option<Vec<Vec<Elem>>>,
) -> Result<Vec<Vec<Elem>>, DecodingError> {
    back_substitute(basis, seed, basis.ring().nvars())
}

/// [`variety_from_basis`] restricted to the first `n` variables, for bases
/// of elimination ideals.
pub(crate) fn back_substitute(
    basis: &GroebnerBasis,
    seed: Option<Vec<Vec<Elem>>>,
    n: usize,
) -> Result<Vec<Vec<Elem>>, DecodingError> {
    let ring = basis.ring();
    let field = ring.field();
    if basis.is_unit() {
        return Ok(Vec::new());
    }
    let mut by_top: Vec<Vec<&Poly>> = vec![Vec::new(); n];
    for g in basis.elements() {
        match top_variable(g) {
            Some(v) if v < n => by_top[v].push(g),
            _ => {}
        }
    }
    let vanishes_on = |k: usize, prefix: &[Elem]| by_top[k].iter().all(|g| g.hasse_value(0, 0, prefix).is_zero());

    let (mut partial, start) = match seed {
        Some(seed) => {
            let len = seed.first().map_or(0, Vec::len);
            if seed.iter().any(|p| p.len() != len) || len > n {
                return Err(DecodingError::RingMismatch);
            }
            let kept: Vec<Vec<Elem>> =
                seed.into_iter().filter(|p| (0..len).all(|k| vanishes_on(k, &p[..=k]))).collect();
            (kept, len)
        }
        None => (vec![Vec::new()], 0),
    };
    let elements = field.elements();
    for k in start..n {
        let mut next = Vec::new();
        for p in &partial {
            for &a in &elements {
                let mut q = Vec::with_capacity(k + 1);
                q.extend_from_slice(p);
                q.push(a);
                if vanishes_on(k, &q) {
                    next.push(q);
                }
            }
            if next.len() > MAX_PARTIAL_POINTS {
                return Err(DecodingError::TooLarge(MAX_PARTIAL_POINTS));
            }
        }
        partial = next;
    }
    sort_canonically(field, &mut partial);
    partial.dedup();
    Ok(partial)
}
