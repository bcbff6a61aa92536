//! Stuffing: raising root multiplicities in the locator slots so that the
//! top polynomial of each slot has no parasite roots.
//!
//! For the variable `x_{t,i}`, let `K` be the elimination ideal of `J_*` in
//! `S, x_{t,1}..x_{t,i}`, `Δ = η(t,i)` and `g` the element of its reduced
//! basis with leading term `x_{t,i}^Δ`. A prefix `P` with `h < Δ` true
//! extensions may give `g(P, x)` up to `Δ − h` extra roots. Applying the
//! Hasse functionals of orders `1..Δ−h` at one true extension `Q = (P, λ)`
//! makes `λ` a root of multiplicity `Δ − h + 1`, which leaves no room for
//! parasites, and keeps the variety and the leading-term shape of `K`.

use std::collections::{BTreeSet, HashMap};

use groebner::GroebnerBasis;
use mpoly::{roots_univariate, Elem, Poly};
use points_ideals::hasse_step;

use crate::variety::back_substitute;
use crate::{semantic_variety, DecodingError, DecodingIdealSpec};

/// The stuffed elimination ideal of one locator variable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StuffedSlot {
    var: usize,
    var_name: String,
    basis: GroebnerBasis,
    eta: usize,
    stuffed_prefixes: usize,
}

impl StuffedSlot {
    /// Position of the locator variable in the locator ring.
    pub fn var(&self) -> usize {
        self.var
    }

    pub fn var_name(&self) -> &str {
        &self.var_name
    }

    /// Reduced basis of the stuffed elimination ideal, in the locator ring.
    pub fn basis(&self) -> &GroebnerBasis {
        &self.basis
    }

    /// `η(t,i)`, the degree of the slot's locator.
    pub fn eta(&self) -> usize {
        self.eta
    }

    /// Number of prefixes whose multiplicities had to be raised.
    pub fn stuffed_prefixes(&self) -> usize {
        self.stuffed_prefixes
    }

    /// Zeros of the stuffed ideal over the syndrome variables and the
    /// coordinates up to this slot's variable, by back-substitution.
    pub fn variety(&self) -> Result<Vec<Vec<Elem>>, DecodingError> {
        back_substitute(&self.basis, None, self.var + 1)
    }
}

/// Stuffed elimination ideals for the coordinates of the least location
/// block, in coordinate order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StuffedIdeal {
    slots: Vec<StuffedSlot>,
}

impl StuffedIdeal {
    pub fn slots(&self) -> &[StuffedSlot] {
        &self.slots
    }
}

/// The element of `w` led by `var^Δ`.
fn top_element(w: &GroebnerBasis, var: usize, delta: usize) -> Option<&Poly> {
    let lead = mpoly::Monomial::var_power(var, delta as u32)?;
    w.elements().iter().find(|g| g.lm() == lead)
}

/// Whether `g(prefix, x)` has exactly the roots `extensions`, with
/// multiplicities adding up to its degree.
fn has_exact_roots(g: &Poly, var: usize, prefix: &[Elem], extensions: &[Elem]) -> bool {
    let assignment: Vec<(usize, Elem)> = prefix.iter().copied().enumerate().collect();
    let specialized = g.specialize(&assignment);
    let Ok(roots) = roots_univariate(&specialized, var) else {
        return false;
    };
    let total: u32 = roots.iter().map(|&(_, m)| m).sum();
    total == g.degree_in(var) && roots.len() == extensions.len() && roots.iter().all(|(a, _)| extensions.contains(a))
}

/// Stuffs the elimination ideals of `J_*` for `x_{t,1}, …, x_{t,m}` in
/// turn. `basis` is the reduced basis of `J_*` in the locator ring; true
/// extensions are taken from [`semantic_variety`]. For each prefix with
/// parasite roots the multiplicity of its canonically smallest extension is
/// raised. A prefix whose root multiplicities were right only by accident can
/// gain parasites when the basis changes, so prefixes are swept again until a
/// full pass changes nothing; each raise is enforced by the ideal from then on. A Hasse functional that vanishes on the whole ideal violates the
/// construction's contract and is reported as an error.
pub fn stuff_ideal(spec: &DecodingIdealSpec, basis: &GroebnerBasis) -> Result<StuffedIdeal, DecodingError> {
    let ring = spec.locator_ring();
    if basis.ring() != ring {
        return Err(DecodingError::RingMismatch);
    }
    let field = ring.field();
    let variety = semantic_variety(spec)?;
    let mut slots = Vec::with_capacity(spec.m());
    for k in 0..spec.m() {
        let var = spec.location_var(spec.t(), k);
        let var_name = ring.vars().name(var).to_string();

        let mut fibers: HashMap<&[Elem], BTreeSet<usize>> = HashMap::new();
        for p in variety.points() {
            fibers.entry(&p[..var]).or_default().insert(field.canonical_index(p[var]));
        }
        let elements = field.elements();
        let mut prefixes: Vec<(Vec<Elem>, Vec<Elem>)> = fibers
            .into_iter()
            .map(|(prefix, ext)| (prefix.to_vec(), ext.into_iter().map(|i| elements[i]).collect()))
            .collect();
        prefixes.sort_by_cached_key(|(p, _)| p.iter().map(|&e| field.canonical_index(e)).collect::<Vec<_>>());
        let delta = prefixes.iter().map(|(_, ext)| ext.len()).max().unwrap_or(0);

        let mut w = GroebnerBasis::from_groebner_elements(ring, basis.elimination_prefix(var + 1))?;
        let missing = |reason: String| DecodingError::LocatorMissing { variable: var_name.clone(), reason };
        let mut stuffed_prefixes = 0;
        loop {
            let mut changed = false;
            for (prefix, extensions) in prefixes.iter().filter(|(_, ext)| ext.len() < delta) {
                let g = top_element(&w, var, delta)
                    .ok_or_else(|| missing(format!("no element is led by the power {delta}")))?;
                if has_exact_roots(g, var, prefix, extensions) {
                    continue;
                }
                let mut q = prefix.clone();
                q.push(extensions[0]);
                for order in 1..=(delta - extensions.len()) as u32 {
                    w = hasse_step(&w, &q, order)?;
                }
                stuffed_prefixes += 1;
                changed = true;
            }
            if !changed {
                break;
            }
        }

        let g = top_element(&w, var, delta).ok_or_else(|| missing(format!("no element is led by the power {delta}")))?;
        let failures = prefixes.iter().filter(|(prefix, ext)| !has_exact_roots(g, var, prefix, ext)).count();
        if failures > 0 {
            return Err(DecodingError::StuffingIncomplete(failures));
        }
        slots.push(StuffedSlot { var, var_name, basis: w, eta: delta, stuffed_prefixes });
    }
    Ok(StuffedIdeal { slots })
}
