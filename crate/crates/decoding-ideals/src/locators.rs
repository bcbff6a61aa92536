//! Error locators and the error evaluator read off Gröbner bases.

use std::fmt;
use std::str::FromStr;

use groebner::GroebnerBasis;
use mpoly::{roots_univariate, Elem, Monomial, Poly, PolyRing, TermOrder, VarSet};

use crate::{DecodingError, DecodingIdealSpec, StuffedIdeal};

/// Whether locators may have parasite roots.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Flavor {
    /// Roots contain the true location components, possibly with parasites.
    Weak,
    /// Roots are exactly the true location components.
    Stuffed,
}

impl Flavor {
    pub fn name(self) -> &'static str {
        match self {
            Flavor::Weak => "weak",
            Flavor::Stuffed => "stuffed",
        }
    }
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Flavor {
    type Err = String;

    fn from_str(s: &str) -> Result<Flavor, String> {
        match s.to_ascii_lowercase().as_str() {
            "weak" => Ok(Flavor::Weak),
            "stuffed" => Ok(Flavor::Stuffed),
            _ => Err(format!("unknown locator flavor '{s}' (expected weak or stuffed)")),
        }
    }
}

/// Locators `L_1..L_m` in `GF(q)[s_1..s_r, x_1..x_m]`, where `x_1..x_m` are
/// the code's coordinates in the decoding coordinate order. `L_i` is monic
/// of degree `t_i` in `x_i` with coefficients in `S, x_1..x_{i−1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocatorSet {
    ring: PolyRing,
    flavor: Flavor,
    locators: Vec<Poly>,
    degrees: Vec<u32>,
}

impl LocatorSet {
    /// Validates the shape of each locator. The ring must consist of the
    /// syndrome variables followed by one variable per coordinate.
    pub fn new(ring: &PolyRing, r: usize, flavor: Flavor, locators: Vec<Poly>) -> Result<LocatorSet, DecodingError> {
        if ring.nvars() != r + locators.len() || locators.iter().any(|l| l.ring() != ring) {
            return Err(DecodingError::RingMismatch);
        }
        let mut degrees = Vec::with_capacity(locators.len());
        for (i, l) in locators.iter().enumerate() {
            let var = r + i;
            let name = ring.vars().name(var).to_string();
            let missing = |reason: String| DecodingError::LocatorMissing { variable: name.clone(), reason };
            if l.is_zero() {
                return Err(missing("the locator is zero".to_string()));
            }
            let degree = l.degree_in(var);
            let lead = Monomial::var_power(var, degree).ok_or(mpoly::MpolyError::ExponentOverflow)?;
            if degree == 0 || l.lm() != lead || l.lc() != Elem::ONE {
                return Err(missing(format!("leading term {} is not a monic power of the variable", leading_monomial_text(l))));
            }
            if !l.supported_on(ring.mask_of(0..=var)) {
                return Err(missing("the locator involves later coordinates".to_string()));
            }
            degrees.push(degree);
        }
        Ok(LocatorSet { ring: ring.clone(), flavor, locators, degrees })
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn locators(&self) -> &[Poly] {
        &self.locators
    }

    /// `t_i`, the degree of `L_i` in `x_i`.
    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    /// Number of syndrome variables.
    pub fn r(&self) -> usize {
        self.ring.nvars() - self.locators.len()
    }

    /// Number of coordinates.
    pub fn m(&self) -> usize {
        self.locators.len()
    }

    /// `L_{i+1}(s̄, prefix, x_{i+1})` as a polynomial in `x_{i+1}` alone,
    /// where `prefix` holds `i` coordinates.
    pub fn specialize(&self, syndrome: &[Elem], prefix: &[Elem]) -> Poly {
        let i = prefix.len();
        let r = self.r();
        let assignment: Vec<(usize, Elem)> =
            syndrome.iter().copied().enumerate().chain(prefix.iter().enumerate().map(|(k, &x)| (r + k, x))).collect();
        self.locators[i].specialize(&assignment)
    }

    /// Roots with multiplicities of `L_{i+1}(s̄, prefix, x_{i+1})`, in the
    /// canonical element order.
    pub fn roots(&self, syndrome: &[Elem], prefix: &[Elem]) -> Vec<(Elem, u32)> {
        let var = self.r() + prefix.len();
        roots_univariate(&self.specialize(syndrome, prefix), var).expect("a monic locator specializes to a nonzero univariate polynomial")
    }
}

/// The general error evaluator `E(s, e)`: monic of degree `t` in `e`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvaluatorPoly {
    ring: PolyRing,
    poly: Poly,
    t: usize,
}

impl EvaluatorPoly {
    /// `ring` must be the syndrome variables followed by one value variable.
    pub fn new(ring: &PolyRing, poly: Poly) -> Result<EvaluatorPoly, DecodingError> {
        if poly.ring() != ring || ring.nvars() == 0 {
            return Err(DecodingError::RingMismatch);
        }
        let var = ring.nvars() - 1;
        let degree = poly.degree_in(var);
        let lead = Monomial::var_power(var, degree).ok_or(mpoly::MpolyError::ExponentOverflow)?;
        if poly.is_zero() || poly.lm() != lead || poly.lc() != Elem::ONE {
            return Err(DecodingError::LocatorMissing {
                variable: ring.vars().name(var).to_string(),
                reason: "the evaluator is not monic in the value variable".to_string(),
            });
        }
        Ok(EvaluatorPoly { ring: ring.clone(), poly, t: degree as usize })
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn poly(&self) -> &Poly {
        &self.poly
    }

    pub fn t(&self) -> usize {
        self.t
    }

    /// `E(s̄, e)` as a polynomial in `e` alone.
    pub fn specialize(&self, syndrome: &[Elem]) -> Poly {
        let assignment: Vec<(usize, Elem)> = syndrome.iter().copied().enumerate().collect();
        self.poly.specialize(&assignment)
    }

    /// Roots with multiplicities of `E(s̄, e)`.
    pub fn roots(&self, syndrome: &[Elem]) -> Vec<(Elem, u32)> {
        roots_univariate(&self.specialize(syndrome), self.ring.nvars() - 1)
            .expect("a monic evaluator specializes to a nonzero univariate polynomial")
    }
}

fn leading_monomial_text(p: &Poly) -> String {
    Poly::from_sorted_terms(p.ring(), vec![(p.lm(), Elem::ONE)]).to_text()
}

/// Largest variable of the leading monomial, `None` for constants.
fn leading_variable(p: &Poly) -> Option<usize> {
    let support = p.lm().support();
    (support != 0).then(|| 31 - support.leading_zeros() as usize)
}

fn syndrome_names(r: usize) -> Vec<String> {
    (1..=r).map(|rho| format!("s{rho}")).collect()
}

/// `GF(q)[s_1..s_r, x_1..x_m]` with the coordinates in decoding order.
pub(crate) fn locator_table_ring(spec: &DecodingIdealSpec) -> Result<PolyRing, DecodingError> {
    let vars = VarSet::with_blocks(vec![
        ("S".to_string(), syndrome_names(spec.r())),
        ("X".to_string(), spec.coordinate_names()),
    ])?;
    Ok(PolyRing::new(spec.code().field().clone(), vars, TermOrder::BlockLex))
}

/// `GF(q)[s_1..s_r, e]`.
pub(crate) fn evaluator_table_ring(spec: &DecodingIdealSpec) -> Result<PolyRing, DecodingError> {
    let vars =
        VarSet::with_blocks(vec![("S".to_string(), syndrome_names(spec.r())), ("E".to_string(), vec!["e".to_string()])])?;
    Ok(PolyRing::new(spec.code().field().clone(), vars, TermOrder::BlockLex))
}

/// The element of `elements` whose leading monomial is the largest pure
/// power of `var` among elements led by `var`.
fn pure_power_top<'a>(elements: &'a [Poly], var: usize, name: &str) -> Result<&'a Poly, DecodingError> {
    let led: Vec<&Poly> = elements
        .iter()
        .filter(|g| !g.is_zero() && leading_variable(g) == Some(var))
        .collect();
    let zeta = led.iter().map(|g| g.lm().exponent(var)).max().ok_or_else(|| DecodingError::LocatorMissing {
        variable: name.to_string(),
        reason: "no basis element is led by this variable".to_string(),
    })?;
    let power = Monomial::var_power(var, zeta).ok_or(mpoly::MpolyError::ExponentOverflow)?;
    led.into_iter().find(|g| g.lm() == power).ok_or_else(|| DecodingError::LocatorMissing {
        variable: name.to_string(),
        reason: format!("no element of top degree {zeta} has a pure-power leading term"),
    })
}

/// Maps a polynomial on `S ∪ X_t` of the locator ring into the table ring.
fn to_table(spec: &DecodingIdealSpec, f: &Poly, table: &PolyRing) -> Result<Poly, DecodingError> {
    let mut map = vec![None; spec.locator_ring().nvars()];
    for (rho, slot) in map.iter_mut().enumerate().take(spec.r()) {
        *slot = Some(rho);
    }
    for k in 0..spec.m() {
        map[spec.location_var(spec.t(), k)] = Some(spec.r() + k);
    }
    Ok(f.map_into(table, &map)?)
}

fn locators_from(
    spec: &DecodingIdealSpec,
    bases: &[&[Poly]],
    flavor: Flavor,
) -> Result<LocatorSet, DecodingError> {
    let ring = spec.locator_ring();
    let table = locator_table_ring(spec)?;
    let mut locators = Vec::with_capacity(spec.m());
    for (k, elements) in bases.iter().enumerate() {
        if elements.iter().any(|g| g.ring() != ring) {
            return Err(DecodingError::RingMismatch);
        }
        let var = spec.location_var(spec.t(), k);
        let top = pure_power_top(elements, var, ring.vars().name(var))?;
        locators.push(to_table(spec, &top.monic(), &table)?);
    }
    LocatorSet::new(&table, spec.r(), flavor, locators)
}

/// Weak locators from a reduced basis of `J_*` in the locator ring: for
/// each coordinate of the least location block `X_t`, the basis element
/// with leading term `x_{t,i}^{ζ(t,i)}`.
pub fn extract_weak_locators(spec: &DecodingIdealSpec, basis: &GroebnerBasis) -> Result<LocatorSet, DecodingError> {
    if basis.ring() != spec.locator_ring() {
        return Err(DecodingError::RingMismatch);
    }
    let bases: Vec<&[Poly]> = vec![basis.elements(); spec.m()];
    locators_from(spec, &bases, Flavor::Weak)
}

/// Locators from a stuffed ideal: the pure-power top element of each
/// coordinate's stuffed elimination basis.
pub fn extract_locators(spec: &DecodingIdealSpec, stuffed: &StuffedIdeal) -> Result<LocatorSet, DecodingError> {
    let bases: Vec<&[Poly]> = stuffed.slots().iter().map(|s| s.basis().elements()).collect();
    if bases.len() != spec.m() {
        return Err(DecodingError::RingMismatch);
    }
    locators_from(spec, &bases, Flavor::Stuffed)
}

/// The evaluator from a reduced basis of `J_*` in the evaluator ring: the
/// element in `S, e_t` with leading term `e_t^t`, with `e_t` renamed `e`.
pub fn extract_evaluator(spec: &DecodingIdealSpec, basis: &GroebnerBasis) -> Result<EvaluatorPoly, DecodingError> {
    let ring = spec.evaluator_ring();
    if basis.ring() != ring {
        return Err(DecodingError::RingMismatch);
    }
    let var = spec.r();
    let name = ring.vars().name(var).to_string();
    let top = pure_power_top(basis.elements(), var, &name)?;
    if top.degree_in(var) as usize != spec.t() {
        return Err(DecodingError::LocatorMissing {
            variable: name,
            reason: format!("the top element has degree {} instead of {}", top.degree_in(var), spec.t()),
        });
    }
    let table = evaluator_table_ring(spec)?;
    let mut map = vec![None; ring.nvars()];
    for (i, slot) in map.iter_mut().enumerate().take(var + 1) {
        *slot = Some(i);
    }
    EvaluatorPoly::new(&table, top.monic().map_into(&table, &map)?)
}
