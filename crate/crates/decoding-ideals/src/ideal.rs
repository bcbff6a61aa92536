//! Decoding rings and the generators of the three decoding ideals.

use std::fmt;
use std::str::FromStr;

use code_core::AffineVarietyCode;
use mpoly::{Elem, Poly, PolyRing, TermOrder, VarSet};
use points_ideals::{vanishing_ideal, PointSet};

use crate::DecodingError;

/// Which decoding ideal to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Variant {
    /// Syndrome equations, nonzero error values and location constraints.
    Fl,
    /// [`Variant::Fl`] plus pairwise-distinct locations.
    Hat,
    /// The ghost-point ideal `J_*`: slots may hold the ghost point with value 0.
    Star,
}

impl Variant {
    pub fn name(self) -> &'static str {
        match self {
            Variant::Fl => "fl",
            Variant::Hat => "hat",
            Variant::Star => "star",
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Variant {
    type Err = String;

    fn from_str(s: &str) -> Result<Variant, String> {
        match s.to_ascii_lowercase().as_str() {
            "fl" => Ok(Variant::Fl),
            "hat" => Ok(Variant::Hat),
            "star" => Ok(Variant::Star),
            _ => Err(format!("unknown ideal variant '{s}' (expected fl, hat or star)")),
        }
    }
}

/// A code together with the choices that fix its decoding ideal: the
/// family, the ghost point and the order of the location coordinates.
///
/// Two rings are attached. The locator ring orders the variables
/// `S < X_t < … < X_1 < E` (with `e_t < … < e_1`), the evaluator ring
/// `S < E < X_t < … < X_1`. Inside each `X_j` the code's coordinates appear
/// in the chosen coordinate order, named `{var}{j}`.
#[derive(Debug, Clone)]
pub struct DecodingIdealSpec {
    code: AffineVarietyCode,
    variant: Variant,
    ghost: Option<Vec<Elem>>,
    coordinate_order: Vec<usize>,
    locator_ring: PolyRing,
    evaluator_ring: PolyRing,
}

impl DecodingIdealSpec {
    /// Validates the ghost point (required for [`Variant::Star`], and never
    /// on the variety) and builds the decoding rings with the code's own
    /// coordinate order.
    pub fn new(code: AffineVarietyCode, variant: Variant, ghost: Option<Vec<Elem>>) -> Result<Self, DecodingError> {
        let m = code.m();
        if let Some(p) = &ghost {
            if p.len() != m {
                return Err(DecodingError::GhostDimension { expected: m, found: p.len() });
            }
            if code.position_of(p).is_some() {
                return Err(DecodingError::GhostOnVariety);
            }
        } else if variant == Variant::Star {
            return Err(DecodingError::GhostRequired);
        }
        let coordinate_order: Vec<usize> = (0..m).collect();
        let (locator_ring, evaluator_ring) = decoding_rings(&code, &coordinate_order)?;
        Ok(DecodingIdealSpec { code, variant, ghost, coordinate_order, locator_ring, evaluator_ring })
    }

    /// Reorders the coordinates inside every location block. `names` must
    /// list each variable of the code's ring exactly once.
    pub fn with_coordinate_order<S: AsRef<str>>(mut self, names: &[S]) -> Result<Self, DecodingError> {
        let vars = self.code.ring().vars();
        let mut order = Vec::with_capacity(names.len());
        for name in names {
            let i = vars
                .index_of(name.as_ref())
                .ok_or_else(|| DecodingError::CoordinateOrder(format!("'{}' is not a code variable", name.as_ref())))?;
            if order.contains(&i) {
                return Err(DecodingError::CoordinateOrder(format!("'{}' is listed twice", name.as_ref())));
            }
            order.push(i);
        }
        if order.len() != vars.len() {
            return Err(DecodingError::CoordinateOrder(format!(
                "{} variables listed but the code has {}",
                order.len(),
                vars.len()
            )));
        }
        let (locator_ring, evaluator_ring) = decoding_rings(&self.code, &order)?;
        self.coordinate_order = order;
        self.locator_ring = locator_ring;
        self.evaluator_ring = evaluator_ring;
        Ok(self)
    }

    pub fn code(&self) -> &AffineVarietyCode {
        &self.code
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn ghost(&self) -> Option<&[Elem]> {
        self.ghost.as_deref()
    }

    /// Code variable index for each position inside a location block.
    pub fn coordinate_order(&self) -> &[usize] {
        &self.coordinate_order
    }

    /// Code variable names in coordinate order.
    pub fn coordinate_names(&self) -> Vec<String> {
        let vars = self.code.ring().vars();
        self.coordinate_order.iter().map(|&i| vars.name(i).to_string()).collect()
    }

    pub fn locator_ring(&self) -> &PolyRing {
        &self.locator_ring
    }

    pub fn evaluator_ring(&self) -> &PolyRing {
        &self.evaluator_ring
    }

    pub fn r(&self) -> usize {
        self.code.r()
    }

    pub fn m(&self) -> usize {
        self.code.m()
    }

    pub fn t(&self) -> usize {
        self.code.t()
    }

    /// Locator-ring position of syndrome variable `s_{rho+1}`.
    pub fn syndrome_var(&self, rho: usize) -> usize {
        rho
    }

    /// Locator-ring position of coordinate `k` (in coordinate order) of
    /// location block `X_j`, `1 ≤ j ≤ t`.
    pub fn location_var(&self, j: usize, k: usize) -> usize {
        self.r() + (self.t() - j) * self.m() + k
    }

    /// Locator-ring position of the error value `e_j`, `1 ≤ j ≤ t`.
    pub fn value_var(&self, j: usize) -> usize {
        self.r() + self.t() * self.m() + (self.t() - j)
    }

    /// Names of the location blocks in ascending order: `X{t}`, …, `X1`.
    pub fn location_blocks(&self) -> Vec<String> {
        (1..=self.t()).rev().map(|j| format!("X{j}")).collect()
    }

    /// A point of the code, listed in the code's variable order, rearranged
    /// into coordinate order.
    pub fn to_coordinate_order(&self, point: &[Elem]) -> Vec<Elem> {
        self.coordinate_order.iter().map(|&i| point[i]).collect()
    }

    /// Inverse of [`Self::to_coordinate_order`].
    pub fn from_coordinate_order(&self, coords: &[Elem]) -> Vec<Elem> {
        let mut point = vec![Elem::ZERO; coords.len()];
        for (k, &i) in self.coordinate_order.iter().enumerate() {
            point[i] = coords[k];
        }
        point
    }

    /// Maps a polynomial of the code ring onto the location block `X_j`.
    pub(crate) fn on_location(&self, f: &Poly, j: usize) -> Result<Poly, DecodingError> {
        let mut map = vec![None; self.m()];
        for (k, &i) in self.coordinate_order.iter().enumerate() {
            map[i] = Some(self.location_var(j, k));
        }
        Ok(f.map_into(&self.locator_ring, &map)?)
    }
}

fn decoding_rings(code: &AffineVarietyCode, order: &[usize]) -> Result<(PolyRing, PolyRing), DecodingError> {
    let (r, t) = (code.r(), code.t());
    let names = code.ring().vars();
    let syndromes: Vec<String> = (1..=r).map(|rho| format!("s{rho}")).collect();
    let locations: Vec<(String, Vec<String>)> = (1..=t)
        .rev()
        .map(|j| (format!("X{j}"), order.iter().map(|&i| format!("{}{j}", names.name(i))).collect()))
        .collect();
    let values: Vec<String> = (1..=t).rev().map(|j| format!("e{j}")).collect();

    let mut locator_blocks = vec![("S".to_string(), syndromes.clone())];
    locator_blocks.extend(locations.iter().cloned());
    locator_blocks.push(("E".to_string(), values.clone()));

    let mut evaluator_blocks = vec![("S".to_string(), syndromes), ("E".to_string(), values)];
    evaluator_blocks.extend(locations);

    let field = code.field();
    Ok((
        PolyRing::new(field.clone(), VarSet::with_blocks(locator_blocks)?, TermOrder::BlockLex),
        PolyRing::new(field.clone(), VarSet::with_blocks(evaluator_blocks)?, TermOrder::BlockLex),
    ))
}

/// The generators of the decoding ideal in the locator ring, followed by
/// the field equations of every variable.
///
/// * syndrome equations `Σ_j e_j b_ρ(X_j) − s_ρ` for every function `b_ρ`;
/// * `e_j^{q−1} − 1` ([`Variant::Fl`], [`Variant::Hat`]) or `e_j^q − e_j`
///   ([`Variant::Star`]);
/// * the code's generators on each `X_j`, or for [`Variant::Star`] the
///   reduced basis of the ideal of `V(I) ∪ {P₀}` on each `X_j`;
/// * [`Variant::Hat`]: `Π_ι((x_{j,ι} − x_{k,ι})^{q−1} − 1)` for `j < k`;
/// * [`Variant::Star`]: `e_j Π_ι((x_{j,ι} − x̄_{0,ι})^{q−1} − 1)`,
///   `(e_j^{q−1} − 1)(x_{j,ι} − x̄_{0,ι})` for each `ι`, and
///   `e_j e_k Π_ι((x_{j,ι} − x_{k,ι})^{q−1} − 1)` for `j < k`.
pub fn build_ideal(spec: &DecodingIdealSpec) -> Result<Vec<Poly>, DecodingError> {
    let code = spec.code();
    let ring = spec.locator_ring();
    let q = ring.field().order();
    let (r, m, t) = (spec.r(), spec.m(), spec.t());
    let one = ring.one();
    let var = |i: usize| ring.var(i);
    let mut gens: Vec<Poly> = Vec::new();

    for rho in 0..r {
        let mut sum = -&var(spec.syndrome_var(rho));
        for j in 1..=t {
            let b = spec.on_location(&code.functions()[rho], j)?;
            sum = &sum + &(&var(spec.value_var(j)) * &b);
        }
        gens.push(sum);
    }

    for j in 1..=t {
        let e = var(spec.value_var(j));
        gens.push(match spec.variant() {
            Variant::Fl | Variant::Hat => &e.pow(q - 1) - &one,
            Variant::Star => &e.pow(q) - &e,
        });
    }

    let code_field_equations = code.ring().field_equations();
    let location_ideal: Vec<Poly> = match spec.variant() {
        Variant::Fl | Variant::Hat => code.generators().to_vec(),
        Variant::Star => {
            let ghost = spec.ghost().ok_or(DecodingError::GhostRequired)?;
            let mut points = code.points().to_vec();
            points.push(ghost.to_vec());
            vanishing_ideal(&PointSet::new(code.ring(), points)?)?.into_elements()
        }
    };
    for j in 1..=t {
        for g in location_ideal.iter().filter(|g| !code_field_equations.contains(g)) {
            gens.push(spec.on_location(g, j)?);
        }
    }

    // Π_ι((a_ι − b_ι)^{q−1} − 1): 1 when the tuples agree, 0 otherwise.
    let agreement = |a: &dyn Fn(usize) -> Poly, b: &dyn Fn(usize) -> Poly| {
        (0..m).fold(one.clone(), |acc, k| &acc * &(&(&a(k) - &b(k)).pow(q - 1) - &one))
    };
    match spec.variant() {
        Variant::Fl => {}
        Variant::Hat => {
            for j in 1..=t {
                for k in j + 1..=t {
                    gens.push(agreement(&|i| var(spec.location_var(j, i)), &|i| var(spec.location_var(k, i))));
                }
            }
        }
        Variant::Star => {
            let ghost = spec.to_coordinate_order(spec.ghost().ok_or(DecodingError::GhostRequired)?);
            for j in 1..=t {
                let e = var(spec.value_var(j));
                let at_ghost = agreement(&|i| var(spec.location_var(j, i)), &|i| ring.constant(ghost[i]));
                gens.push(&e * &at_ghost);
            }
            for j in 1..=t {
                let nonzero = &var(spec.value_var(j)).pow(q - 1) - &one;
                for (i, &g) in ghost.iter().enumerate() {
                    gens.push(&nonzero * &(&var(spec.location_var(j, i)) - &ring.constant(g)));
                }
            }
            for j in 1..=t {
                for k in j + 1..=t {
                    let both = &var(spec.value_var(j)) * &var(spec.value_var(k));
                    let same = agreement(&|i| var(spec.location_var(j, i)), &|i| var(spec.location_var(k, i)));
                    gens.push(&both * &same);
                }
            }
        }
    }

    for fe in ring.field_equations() {
        if !gens.contains(&fe) {
            gens.push(fe);
        }
    }
    Ok(gens)
}
