//! Ideals of finite point sets built one linear functional at a time.
//!
//! [`bm_step`] refines a reduced Gröbner basis of an ideal `H` to one of
//! `ker(θ) ∩ H` for a point evaluation or a Hasse-derivative functional.
//! Iterating point evaluations gives [`vanishing_ideal`]; iterating Hasse
//! functionals at one point gives [`stuff_at`], which raises the multiplicity
//! of a root in the last variable without changing the variety.
//!
//! Points may be shorter than the ring: a point of length `N` addresses the
//! first `N` variables, and the polynomials involved must only use those.

use groebner::{interreduce, GroebnerBasis};
use mpoly::{Elem, Poly, PolyRing};

/// Errors raised by point-ideal construction.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PointsError {
    #[error("point {0} is listed twice")]
    DuplicatePoint(usize),
    #[error("point has {found} coordinates but {expected} were expected")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("the point set is empty")]
    EmptyPointSet,
    #[error("the point is not a zero of the ideal")]
    PointNotInVariety,
    #[error("every basis element is annihilated by the Hasse functional of order {order}")]
    FunctionalDegenerate { order: u32 },
    #[error("the functional uses variables outside the ring")]
    TooManyCoordinates,
}

/// A linear functional on polynomials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Functional {
    /// `f ↦ f(Q)`.
    Point(Vec<Elem>),
    /// `f ↦ φ⁽ⁿ⁾(f(P, V))|_{V = Q_N}`: the `n`-th Hasse derivative in the
    /// last coordinate of `Q = (P, Q_N)`, evaluated at `Q`.
    Hasse { point: Vec<Elem>, order: u32 },
}

impl Functional {
    pub fn point(&self) -> &[Elem] {
        match self {
            Functional::Point(q) | Functional::Hasse { point: q, .. } => q,
        }
    }

    /// Applies the functional to a polynomial supported on the point's variables.
    pub fn apply(&self, f: &Poly) -> Elem {
        match self {
            Functional::Point(q) => evaluate_prefix(f, q),
            Functional::Hasse { point, order } => f.hasse_value(point.len() - 1, *order, point),
        }
    }

    /// Shift constants `β_k` with `θ((V_k − β_k) g) = 0`, given `θ(g) ≠ 0`.
    fn shifts(&self, g: &Poly, theta_g: Elem) -> Vec<Elem> {
        let mut betas = self.point().to_vec();
        if let Functional::Hasse { point, order } = self {
            // φ⁽ⁿ⁾((V − β) g) = (V − β) φ⁽ⁿ⁾(g) + φ⁽ⁿ⁻¹⁾(g)
            let last = point.len() - 1;
            let field = g.field();
            let lower = g.hasse_value(last, order - 1, point);
            let ratio = field.div(lower, theta_g).expect("theta_g is nonzero");
            betas[last] = field.add(ratio, point[last]);
        }
        betas
    }
}

/// Value of `f` at a point assigning the first `q.len()` variables.
fn evaluate_prefix(f: &Poly, q: &[Elem]) -> Elem {
    f.hasse_value(0, 0, q)
}

/// One Buchberger–Möller step: from a reduced basis `w` of `H` and a linear
/// functional `θ` with `ker θ ∩ H` an ideal, the reduced basis of that kernel.
/// Returns `w` unchanged when `θ` vanishes on every element.
pub fn bm_step(w: &GroebnerBasis, theta: &Functional) -> Result<GroebnerBasis, PointsError> {
    let ring = w.ring();
    let dims = theta.point().len();
    if dims == 0 || dims > ring.nvars() {
        return Err(PointsError::TooManyCoordinates);
    }
    let values: Vec<Elem> = w.elements().iter().map(|g| theta.apply(g)).collect();
    let Some(star) = values.iter().position(|v| !v.is_zero()) else {
        return Ok(w.clone());
    };
    let field = ring.field();
    let g_star = &w.elements()[star];
    let alpha_star = values[star];
    let betas = theta.shifts(g_star, alpha_star);

    let mut next: Vec<Poly> = w.elements()[..star].to_vec();
    for (k, &beta) in betas.iter().enumerate() {
        let shift = &ring.var(k) - &ring.constant(beta);
        next.push(&shift * g_star);
    }
    for (g, &alpha) in w.elements()[star + 1..].iter().zip(&values[star + 1..]) {
        let c = field.neg(field.div(alpha, alpha_star).expect("alpha_star is nonzero"));
        next.push(g.add_scaled(g_star, c, mpoly::Monomial::ONE));
    }
    Ok(GroebnerBasis::from_groebner_elements(ring, interreduce(next)).expect("same ring"))
}

/// An ordered list of distinct points addressing the first `dims` variables
/// of a ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointSet {
    ring: PolyRing,
    points: Vec<Vec<Elem>>,
}

impl PointSet {
    /// Points over all variables of `ring`, in the given order.
    pub fn new(ring: &PolyRing, points: Vec<Vec<Elem>>) -> Result<PointSet, PointsError> {
        for p in &points {
            if p.len() != ring.nvars() {
                return Err(PointsError::DimensionMismatch { expected: ring.nvars(), found: p.len() });
            }
        }
        let mut seen = std::collections::HashSet::with_capacity(points.len());
        for (i, p) in points.iter().enumerate() {
            if !seen.insert(p.as_slice()) {
                return Err(PointsError::DuplicatePoint(i));
            }
        }
        Ok(PointSet { ring: ring.clone(), points })
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn points(&self) -> &[Vec<Elem>] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, p: &[Elem]) -> bool {
        self.points.iter().any(|q| q == p)
    }
}

/// Reduced Gröbner basis of the ideal of all polynomials vanishing on the
/// points, adding them one at a time in list order.
pub fn vanishing_ideal(points: &PointSet) -> Result<GroebnerBasis, PointsError> {
    if points.is_empty() {
        return Err(PointsError::EmptyPointSet);
    }
    let mut w = GroebnerBasis::unit(points.ring());
    for p in points.points() {
        w = bm_step(&w, &Functional::Point(p.clone()))?;
    }
    Ok(w)
}

/// Extends the vanishing ideal of some points by further points, keeping
/// those already present.
pub fn add_points(w: &GroebnerBasis, points: &[Vec<Elem>]) -> Result<GroebnerBasis, PointsError> {
    let mut w = w.clone();
    for p in points {
        w = bm_step(&w, &Functional::Point(p.clone()))?;
    }
    Ok(w)
}

/// Replaces the basis of `H^[Q, n-1]` with that of `H^[Q, n]`, the kernel of
/// the `n`-th Hasse functional at `q` in its last coordinate. Fails with
/// [`PointsError::FunctionalDegenerate`] when the functional vanishes on the
/// whole ideal.
pub fn hasse_step(w: &GroebnerBasis, q: &[Elem], order: u32) -> Result<GroebnerBasis, PointsError> {
    assert!(order >= 1, "Hasse functionals start at order 1");
    let theta = Functional::Hasse { point: q.to_vec(), order };
    if w.elements().iter().all(|g| theta.apply(g).is_zero()) {
        return Err(PointsError::FunctionalDegenerate { order });
    }
    bm_step(w, &theta)
}

/// Forces the root `q_N` of the basis polynomials in the last coordinate of
/// `q` to have multiplicity at least `target` over the prefix of `q`, by
/// applying Hasse functionals of orders `1..target` in turn. A degenerate
/// functional means that order is already enforced on the whole ideal, so it
/// is skipped.
pub fn stuff_at(w: &GroebnerBasis, q: &[Elem], target: u32) -> Result<GroebnerBasis, PointsError> {
    if q.is_empty() || q.len() > w.ring().nvars() {
        return Err(PointsError::TooManyCoordinates);
    }
    if w.elements().iter().any(|g| !evaluate_prefix(g, q).is_zero()) {
        return Err(PointsError::PointNotInVariety);
    }
    let mut current = w.clone();
    for order in 1..target {
        match hasse_step(&current, q, order) {
            Ok(next) => current = next,
            Err(PointsError::FunctionalDegenerate { .. }) => continue,
            Err(e) => return Err(e),
        }
    }
    Ok(current)
}
