//! Polynomial division by a list of reducers, heap-based.
//!
//! The dividend and every scaled reducer multiple are merged lazily through a
//! max-heap holding one cursor per multiple, so each reduction step costs
//! `O(log h)` per emitted term instead of a full merge of both operands.

use std::collections::BinaryHeap;

use mpoly::{Elem, Field, Monomial, MpolyError, Poly, Term};

/// A scaled, shifted view `coeff * shift * terms[pos..]`.
struct Multiple<'a> {
    terms: &'a [Term],
    coeff: Elem,
    shift: Monomial,
    pos: usize,
}

/// How far to reduce.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Reduction {
    /// Stop reducing once the leading term is irreducible.
    Head,
    /// Reduce every term.
    Full,
}

/// Leading monomials of reducers with a quick support filter.
pub struct ReducerIndex<'a> {
    lms: Vec<Monomial>,
    polys: Vec<&'a Poly>,
}

impl<'a> ReducerIndex<'a> {
    pub fn new(polys: impl IntoIterator<Item = &'a Poly>) -> Self {
        let polys: Vec<&Poly> = polys.into_iter().filter(|p| !p.is_zero()).collect();
        ReducerIndex { lms: polys.iter().map(|p| p.lm()).collect(), polys }
    }

    /// First reducer whose leading monomial divides `m`.
    #[inline]
    pub fn find(&self, m: Monomial) -> Option<&'a Poly> {
        self.lms.iter().position(|lm| lm.divides(m)).map(|i| self.polys[i])
    }

    pub fn is_empty(&self) -> bool {
        self.lms.is_empty()
    }
}

/// Reduces `f` modulo the reducers. With [`Reduction::Full`] the result has
/// no term divisible by a reducer's leading monomial; with
/// [`Reduction::Head`] only the leading term is guaranteed irreducible.
///
/// # Panics
/// If an intermediate exponent exceeds the monomial capacity; see
/// [`try_reduce`].
pub fn reduce(f: &Poly, reducers: &ReducerIndex<'_>, mode: Reduction) -> Poly {
    try_reduce(f, reducers, mode).expect("monomial exponent overflow (maximum exponent is 127)")
}

/// [`reduce`], failing with [`MpolyError::ExponentOverflow`] when a reducer
/// multiple has an exponent beyond the monomial capacity.
pub fn try_reduce(f: &Poly, reducers: &ReducerIndex<'_>, mode: Reduction) -> Result<Poly, MpolyError> {
    let field: &Field = f.field();
    if f.is_zero() || reducers.is_empty() {
        return Ok(f.clone());
    }
    let mut multiples: Vec<Multiple<'_>> = vec![Multiple { terms: f.terms(), coeff: Elem::ONE, shift: Monomial::ONE, pos: 0 }];
    let mut heap: BinaryHeap<(Monomial, usize)> = BinaryHeap::new();
    heap.push((f.terms()[0].0, 0));
    let mut out: Vec<Term> = Vec::new();
    let mut reducing = true;

    while let Some((m, first)) = heap.pop() {
        let mut sum = Elem::ZERO;
        let mut advance = |k: usize, heap: &mut BinaryHeap<(Monomial, usize)>, sum: &mut Elem| {
            let mu = &mut multiples[k];
            *sum = field.add(*sum, field.mul(mu.coeff, mu.terms[mu.pos].1));
            mu.pos += 1;
            if mu.pos < mu.terms.len() {
                heap.push((mu.terms[mu.pos].0.checked_mul(mu.shift).ok_or(MpolyError::ExponentOverflow)?, k));
            }
            Ok::<(), MpolyError>(())
        };
        advance(first, &mut heap, &mut sum)?;
        while let Some(&(m2, k)) = heap.peek() {
            if m2 != m {
                break;
            }
            heap.pop();
            advance(k, &mut heap, &mut sum)?;
        }
        if sum.is_zero() {
            continue;
        }
        if reducing {
            if let Some(g) = reducers.find(m) {
                let (lm, lc) = g.terms()[0];
                let shift = lm.divide_into(m).expect("reducer divides");
                let coeff = field.neg(field.div(sum, lc).expect("leading coefficient is nonzero"));
                if g.len() > 1 {
                    multiples.push(Multiple { terms: g.terms(), coeff, shift, pos: 1 });
                    let k = multiples.len() - 1;
                    heap.push((g.terms()[1].0.checked_mul(shift).ok_or(MpolyError::ExponentOverflow)?, k));
                }
                continue;
            }
            if mode == Reduction::Head {
                reducing = false;
            }
        }
        out.push((m, sum));
    }
    Ok(Poly::from_sorted_terms(f.ring(), out))
}
