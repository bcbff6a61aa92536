//! Reduced Gröbner bases over small finite fields under lexicographic orders.
//!
//! [`buchberger`] computes the reduced basis of an ideal. The resulting
//! [`GroebnerBasis`] supports normal forms, elimination views on initial
//! segments of the variables, standard-monomial counting, per-variable degree
//! stratification and a canonical text serialization.

mod buchberger;
mod reduce;
mod stratify;

use std::fmt;

use mpoly::{Monomial, MpolyError, Poly, PolyRing};

pub use reduce::{reduce, try_reduce, ReducerIndex, Reduction};
pub use stratify::{BasisStratification, StratumSlot};

/// Errors raised by basis construction and inspection.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GroebnerError {
    #[error("polynomials belong to different rings")]
    RingMismatch,
    #[error("incompatible with the term order: {0}")]
    IncompatibleOrder(String),
    #[error("basis text line {line}: {message}")]
    Format { line: usize, message: String },
    #[error(transparent)]
    Poly(#[from] MpolyError),
}

/// A reduced Gröbner basis: monic elements sorted ascending by leading
/// monomial, no monomial of an element divisible by another's leading
/// monomial. The zero ideal has no elements; the unit ideal is `{1}`.
#[derive(Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    ring: PolyRing,
    elements: Vec<Poly>,
}

impl fmt::Debug for GroebnerBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.elements.iter().map(Poly::to_text)).finish()
    }
}

fn check_ring(ring: &PolyRing, polys: &[Poly]) -> Result<(), GroebnerError> {
    if polys.iter().all(|p| p.ring() == ring) {
        Ok(())
    } else {
        Err(GroebnerError::RingMismatch)
    }
}

/// Reduced Gröbner basis of the ideal generated by `generators` in `ring`.
/// The result does not depend on the order of the generators. Fails with
/// [`MpolyError::ExponentOverflow`] when an intermediate exponent exceeds
/// the monomial capacity.
pub fn buchberger(ring: &PolyRing, generators: &[Poly]) -> Result<GroebnerBasis, GroebnerError> {
    check_ring(ring, generators)?;
    Ok(GroebnerBasis { ring: ring.clone(), elements: buchberger::reduced_basis(ring, generators)? })
}

/// Fully reduces `f` by the leading monomials of `divisors`. When `divisors`
/// is a Gröbner basis the result is the unique normal form of `f`.
///
/// # Panics
/// If an intermediate exponent exceeds the monomial capacity.
pub fn normal_form(f: &Poly, divisors: &[Poly]) -> Poly {
    reduce(f, &ReducerIndex::new(divisors.iter()), Reduction::Full)
}

/// A pair of positions whose S-polynomial does not reduce to zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnreducedPair {
    pub first: usize,
    pub second: usize,
    pub remainder: Poly,
}

/// Checks Buchberger's criterion on `candidate`: every S-polynomial must
/// reduce to zero. Returns the first failing pair otherwise.
///
/// # Panics
/// If an intermediate exponent exceeds the monomial capacity.
pub fn is_groebner(candidate: &[Poly]) -> Result<(), UnreducedPair> {
    let monic: Vec<Poly> = candidate.iter().filter(|p| !p.is_zero()).map(Poly::monic).collect();
    let index = ReducerIndex::new(monic.iter());
    for j in 0..monic.len() {
        for i in 0..j {
            if monic[i].lm().is_coprime(monic[j].lm()) {
                continue;
            }
            let s = buchberger::s_polynomial(&monic[i], &monic[j]).expect("monomial exponent overflow (maximum exponent is 127)");
            let r = reduce(&s, &index, Reduction::Full);
            if !r.is_zero() {
                return Err(UnreducedPair { first: i, second: j, remainder: r });
            }
        }
    }
    Ok(())
}

/// Turns a Gröbner basis (not necessarily minimal or reduced) into the
/// reduced one: drops redundant elements, makes the rest monic and
/// tail-reduces them.
pub fn interreduce(basis: Vec<Poly>) -> Vec<Poly> {
    if basis.iter().any(Poly::is_constant) {
        let ring = basis.iter().find(|p| p.is_constant()).map(|p| p.ring().clone()).expect("found above");
        return vec![ring.one()];
    }
    buchberger::interreduce_minimal(buchberger::minimize(basis))
}

const HEADER_PREFIX: &str = "# groebner-basis ";

impl GroebnerBasis {
    /// Wraps a list that is already a Gröbner basis of its ideal, reducing it.
    pub fn from_groebner_elements(ring: &PolyRing, elements: Vec<Poly>) -> Result<GroebnerBasis, GroebnerError> {
        check_ring(ring, &elements)?;
        Ok(GroebnerBasis { ring: ring.clone(), elements: interreduce(elements) })
    }

    /// The basis of the unit ideal.
    pub fn unit(ring: &PolyRing) -> GroebnerBasis {
        GroebnerBasis { ring: ring.clone(), elements: vec![ring.one()] }
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn elements(&self) -> &[Poly] {
        &self.elements
    }

    pub fn into_elements(self) -> Vec<Poly> {
        self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// True when the ideal is the whole ring.
    pub fn is_unit(&self) -> bool {
        self.elements.len() == 1 && self.elements[0].is_constant()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elements.iter().map(Poly::lm).collect()
    }

    /// Unique normal form of `f` modulo the ideal.
    pub fn normal_form(&self, f: &Poly) -> Poly {
        normal_form(f, &self.elements)
    }

    /// Ideal membership.
    pub fn contains(&self, f: &Poly) -> bool {
        self.normal_form(f).is_zero()
    }

    /// The elements supported on the first `count` variables. Under lex
    /// these form a Gröbner basis of the corresponding elimination ideal.
    pub fn elimination_prefix(&self, count: usize) -> Vec<Poly> {
        let mask = self.ring.mask_of(0..count.min(self.ring.nvars()));
        self.elements.iter().filter(|p| p.supported_on(mask)).cloned().collect()
    }

    /// The elements involving only the named variables, which must be the
    /// smallest variables of the order.
    pub fn elimination_view<S: AsRef<str>>(&self, retained: &[S]) -> Result<Vec<Poly>, GroebnerError> {
        let mut positions = Vec::with_capacity(retained.len());
        for name in retained {
            positions.push(self.ring.var_index(name.as_ref())?);
        }
        positions.sort_unstable();
        positions.dedup();
        if positions.iter().enumerate().any(|(k, &p)| k != p) {
            return Err(GroebnerError::IncompatibleOrder(
                "retained variables must be an initial segment of the variable order".to_string(),
            ));
        }
        Ok(self.elimination_prefix(positions.len()))
    }

    /// Dimension of the quotient ring as a vector space, or `None` when the
    /// ideal is not zero-dimensional (or is the zero ideal in a nonconstant ring).
    pub fn standard_monomial_count(&self) -> Option<u64> {
        let n = self.ring.nvars();
        let lms = self.leading_monomials();
        if self.is_unit() {
            return Some(0);
        }
        let mut bounds = Vec::with_capacity(n);
        for v in 0..n {
            let pure = lms
                .iter()
                .filter(|m| m.support() == 1 << v)
                .map(|m| m.exponent(v))
                .min()?;
            bounds.push(pure);
        }
        fn count(v: usize, m: Monomial, lms: &[Monomial], bounds: &[u32]) -> u64 {
            if v == bounds.len() {
                return 1;
            }
            let mut total = 0;
            for e in 0..bounds[v] {
                let next = m.with_exponent(v, e).expect("exponent below a leading exponent");
                if lms.iter().any(|l| l.divides(next)) {
                    break;
                }
                total += count(v + 1, next, lms, bounds);
            }
            total
        }
        Some(count(0, Monomial::ONE, &lms, &bounds))
    }

    /// Canonical text: a header line describing the ring, then one element
    /// per line in ascending order.
    pub fn to_text(&self) -> String {
        let mut out = format!("{HEADER_PREFIX}{}\n", self.ring.descriptor());
        for p in &self.elements {
            out.push_str(&p.to_text());
            out.push('\n');
        }
        out
    }

    /// Parses the output of [`GroebnerBasis::to_text`]. The elements are
    /// checked to be monic and strictly ascending but not re-reduced.
    pub fn from_text(text: &str) -> Result<GroebnerBasis, GroebnerError> {
        let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
        let (_, header) = lines.next().ok_or(GroebnerError::Format { line: 1, message: "empty input".to_string() })?;
        let descriptor = header
            .strip_prefix(HEADER_PREFIX)
            .ok_or(GroebnerError::Format { line: 1, message: "missing basis header".to_string() })?;
        let ring = PolyRing::from_descriptor(descriptor)?;
        let mut elements: Vec<Poly> = Vec::new();
        for (k, line) in lines {
            let p = ring.parse(line)?;
            let bad = |message: &str| GroebnerError::Format { line: k + 1, message: message.to_string() };
            if p.is_zero() || p.lc() != mpoly::Elem::ONE {
                return Err(bad("basis elements must be monic"));
            }
            if elements.last().is_some_and(|q| q.lm() >= p.lm()) {
                return Err(bad("basis elements must be strictly ascending"));
            }
            elements.push(p);
        }
        Ok(GroebnerBasis { ring, elements })
    }
}
