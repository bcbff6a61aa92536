//! Affine-variety codes `C⊥(I, L)` over finite fields.
//!
//! A code is given by an ideal `I` whose variety `V(I) = {P_1, …, P_n}` is
//! finite, a list of functions `b_1, …, b_r` spanning `L`, and a correction
//! capability `t`. The parity-check matrix has entries `H[ρ][σ] = b_ρ(P_σ)`,
//! and a received error `e` has syndrome `H·e`.

pub mod linalg;

use std::collections::HashMap;
use std::fmt;

use mpoly::{Elem, Field, Poly, PolyRing};

pub use linalg::{rank, row_reduce, solve_columns, Solution};

/// Errors raised while building or using a code.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CodeError {
    #[error("the variety is empty")]
    EmptyVariety,
    #[error("the listed point order is not the variety: {0}")]
    PointOrder(String),
    #[error("the functions of L are linearly dependent on the variety (rank {rank} < {r})")]
    DependentFunctions { rank: usize, r: usize },
    #[error("expected a vector of length {expected}, got {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("no error pattern of weight at most t has this syndrome")]
    NotCorrectable,
    #[error("polynomials belong to different rings")]
    RingMismatch,
    #[error("position {0} is outside the code")]
    BadPosition(usize),
    #[error("variety scan over {0} candidate points is too large")]
    TooLarge(u64),
}

/// Largest number of candidate points scanned when enumerating a variety.
pub const MAX_SCAN: u64 = 1 << 24;

/// All zeros of `generators` in `GF(q)^m`, scanning the space in canonical
/// lexicographic order (first coordinate slowest, each coordinate in the
/// field's canonical element order).
pub fn enumerate_variety(ring: &PolyRing, generators: &[Poly]) -> Result<Vec<Vec<Elem>>, CodeError> {
    if generators.iter().any(|g| g.ring() != ring) {
        return Err(CodeError::RingMismatch);
    }
    let els = ring.field().elements();
    let m = ring.nvars();
    let total = (els.len() as u64).checked_pow(m as u32).unwrap_or(u64::MAX);
    if total > MAX_SCAN {
        return Err(CodeError::TooLarge(total));
    }
    let mut out = Vec::new();
    let mut digits = vec![0usize; m];
    let mut point = vec![els[0]; m];
    loop {
        for (x, &d) in point.iter_mut().zip(&digits) {
            *x = els[d];
        }
        if generators.iter().all(|g| g.evaluate(&point).is_zero()) {
            out.push(point.clone());
        }
        let mut k = m;
        loop {
            if k == 0 {
                return if out.is_empty() { Err(CodeError::EmptyVariety) } else { Ok(out) };
            }
            k -= 1;
            digits[k] += 1;
            if digits[k] < els.len() {
                break;
            }
            digits[k] = 0;
        }
    }
}

/// A set of error positions with nonzero values, positions ascending.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ErrorPattern {
    entries: Vec<(usize, Elem)>,
}

impl ErrorPattern {
    /// Builds a pattern, dropping zero values and sorting by position.
    /// Fails if a position repeats.
    pub fn new(mut entries: Vec<(usize, Elem)>) -> Result<ErrorPattern, CodeError> {
        entries.retain(|e| !e.1.is_zero());
        entries.sort_by_key(|e| e.0);
        if let Some(w) = entries.windows(2).find(|w| w[0].0 == w[1].0) {
            return Err(CodeError::BadPosition(w[0].0));
        }
        Ok(ErrorPattern { entries })
    }

    /// The pattern of a full error vector.
    pub fn from_vector(word: &[Elem]) -> ErrorPattern {
        ErrorPattern {
            entries: word.iter().enumerate().filter(|(_, v)| !v.is_zero()).map(|(i, &v)| (i, v)).collect(),
        }
    }

    pub fn empty() -> ErrorPattern {
        ErrorPattern::default()
    }

    /// `(position, value)` pairs with 0-based positions.
    pub fn entries(&self) -> &[(usize, Elem)] {
        &self.entries
    }

    pub fn weight(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn to_vector(&self, n: usize) -> Vec<Elem> {
        let mut v = vec![Elem::ZERO; n];
        for &(i, e) in &self.entries {
            v[i] = e;
        }
        v
    }
}

/// An affine-variety code with its parity-check matrix.
#[derive(Clone)]
pub struct AffineVarietyCode {
    ring: PolyRing,
    generators: Vec<Poly>,
    points: Vec<Vec<Elem>>,
    functions: Vec<Poly>,
    parity_check: Vec<Vec<Elem>>,
    t: usize,
}

impl fmt::Debug for AffineVarietyCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("AffineVarietyCode")
            .field("ring", &self.ring)
            .field("n", &self.n())
            .field("r", &self.r())
            .field("t", &self.t)
            .finish()
    }
}

impl AffineVarietyCode {
    /// Builds the code. The field equations are added to the generators.
    /// With `point_order` the listed points must be exactly the variety, in
    /// the desired order; otherwise the canonical scan order is used.
    pub fn new(
        ring: &PolyRing,
        generators: Vec<Poly>,
        functions: Vec<Poly>,
        t: usize,
        point_order: Option<Vec<Vec<Elem>>>,
    ) -> Result<AffineVarietyCode, CodeError> {
        if generators.iter().chain(&functions).any(|g| g.ring() != ring) {
            return Err(CodeError::RingMismatch);
        }
        let mut generators = generators;
        for fe in ring.field_equations() {
            if !generators.contains(&fe) {
                generators.push(fe);
            }
        }
        let variety = enumerate_variety(ring, &generators)?;
        let points = match point_order {
            None => variety,
            Some(order) => {
                for (i, p) in order.iter().enumerate() {
                    if p.len() != ring.nvars() {
                        return Err(CodeError::PointOrder(format!("point {} has the wrong dimension", i + 1)));
                    }
                    if order[..i].contains(p) {
                        return Err(CodeError::PointOrder(format!("point {} is repeated", i + 1)));
                    }
                    if !variety.contains(p) {
                        return Err(CodeError::PointOrder(format!("point {} is not on the variety", i + 1)));
                    }
                }
                if order.len() != variety.len() {
                    return Err(CodeError::PointOrder(format!(
                        "{} points listed but the variety has {}",
                        order.len(),
                        variety.len()
                    )));
                }
                order
            }
        };
        let parity_check: Vec<Vec<Elem>> =
            functions.iter().map(|b| points.iter().map(|p| b.evaluate(p)).collect()).collect();
        let rank = linalg::rank(ring.field(), &parity_check);
        if rank < functions.len() {
            return Err(CodeError::DependentFunctions { rank, r: functions.len() });
        }
        Ok(AffineVarietyCode { ring: ring.clone(), generators, points, functions, parity_check, t })
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn field(&self) -> &Field {
        self.ring.field()
    }

    /// Generators of `I`, field equations included.
    pub fn generators(&self) -> &[Poly] {
        &self.generators
    }

    /// The variety points `P_1..P_n` in code order.
    pub fn points(&self) -> &[Vec<Elem>] {
        &self.points
    }

    /// The functions `b_1..b_r`.
    pub fn functions(&self) -> &[Poly] {
        &self.functions
    }

    pub fn parity_check(&self) -> &[Vec<Elem>] {
        &self.parity_check
    }

    /// Code length.
    pub fn n(&self) -> usize {
        self.points.len()
    }

    /// Number of syndrome components.
    pub fn r(&self) -> usize {
        self.functions.len()
    }

    /// Number of coordinates of each point.
    pub fn m(&self) -> usize {
        self.ring.nvars()
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn position_of(&self, point: &[Elem]) -> Option<usize> {
        self.points.iter().position(|p| p == point)
    }

    /// `H · word`.
    pub fn syndrome(&self, word: &[Elem]) -> Result<Vec<Elem>, CodeError> {
        if word.len() != self.n() {
            return Err(CodeError::LengthMismatch { expected: self.n(), found: word.len() });
        }
        let f = self.field();
        Ok(self
            .parity_check
            .iter()
            .map(|row| row.iter().zip(word).fold(Elem::ZERO, |acc, (&h, &w)| f.add(acc, f.mul(h, w))))
            .collect())
    }

    /// Syndrome of an error pattern.
    pub fn pattern_syndrome(&self, pattern: &ErrorPattern) -> Result<Vec<Elem>, CodeError> {
        let f = self.field();
        let mut s = vec![Elem::ZERO; self.r()];
        for &(i, e) in pattern.entries() {
            if i >= self.n() {
                return Err(CodeError::BadPosition(i));
            }
            for (rho, row) in self.parity_check.iter().enumerate() {
                s[rho] = f.add(s[rho], f.mul(row[i], e));
            }
        }
        Ok(s)
    }

    /// Every error pattern of weight at most `t`, each exactly once: by
    /// weight, then positions in lexicographic order, then values in the
    /// canonical order of the nonzero field elements.
    pub fn correctable_patterns(&self) -> CorrectablePatterns {
        CorrectablePatterns::new(self.n(), self.t, self.field())
    }

    /// Number of patterns yielded by [`Self::correctable_patterns`].
    pub fn correctable_count(&self) -> u128 {
        let q1 = (self.field().order() - 1) as u128;
        (0..=self.t.min(self.n())).map(|mu| binomial(self.n() as u128, mu as u128) * q1.pow(mu as u32)).sum()
    }

    /// The unique pattern of weight at most `t` with syndrome `s`, found by
    /// scanning [`Self::correctable_patterns`].
    pub fn oracle_decode(&self, s: &[Elem]) -> Result<ErrorPattern, CodeError> {
        if s.len() != self.r() {
            return Err(CodeError::LengthMismatch { expected: self.r(), found: s.len() });
        }
        self.correctable_patterns()
            .find(|p| self.pattern_syndrome(p).expect("positions in range") == s)
            .ok_or(CodeError::NotCorrectable)
    }

    /// Map from syndrome to the first correctable pattern producing it,
    /// together with the number of distinct correctable patterns sharing
    /// each syndrome (1 everywhere when the code corrects `t` errors).
    pub fn syndrome_table(&self) -> SyndromeTable {
        let mut table: HashMap<Vec<Elem>, (ErrorPattern, usize)> = HashMap::new();
        for p in self.correctable_patterns() {
            let s = self.pattern_syndrome(&p).expect("positions in range");
            table.entry(s).and_modify(|e| e.1 += 1).or_insert((p, 1));
        }
        SyndromeTable { table }
    }
}

/// Precomputed syndrome lookup over all correctable patterns.
#[derive(Debug, Clone)]
pub struct SyndromeTable {
    table: HashMap<Vec<Elem>, (ErrorPattern, usize)>,
}

impl SyndromeTable {
    pub fn lookup(&self, s: &[Elem]) -> Option<&ErrorPattern> {
        self.table.get(s).map(|e| &e.0)
    }

    /// Number of distinct syndromes.
    pub fn len(&self) -> usize {
        self.table.len()
    }

    pub fn is_empty(&self) -> bool {
        self.table.is_empty()
    }

    /// True when no two correctable patterns share a syndrome.
    pub fn is_injective(&self) -> bool {
        self.table.values().all(|e| e.1 == 1)
    }
}

fn binomial(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Iterator over error patterns of weight `0..=t` in canonical order.
pub struct CorrectablePatterns {
    n: usize,
    t: usize,
    nonzero: Vec<Elem>,
    weight: usize,
    positions: Vec<usize>,
    values: Vec<usize>,
    done: bool,
}

impl CorrectablePatterns {
    fn new(n: usize, t: usize, field: &Field) -> CorrectablePatterns {
        CorrectablePatterns {
            n,
            t: t.min(n),
            nonzero: field.elements()[1..].to_vec(),
            weight: 0,
            positions: Vec::new(),
            values: Vec::new(),
            done: false,
        }
    }

    fn advance(&mut self) {
        let q1 = self.nonzero.len();
        for k in (0..self.weight).rev() {
            self.values[k] += 1;
            if self.values[k] < q1 {
                return;
            }
            self.values[k] = 0;
        }
        let w = self.weight;
        for k in (0..w).rev() {
            if self.positions[k] < self.n - (w - k) {
                self.positions[k] += 1;
                for j in k + 1..w {
                    self.positions[j] = self.positions[j - 1] + 1;
                }
                return;
            }
        }
        self.weight += 1;
        if self.weight > self.t {
            self.done = true;
            return;
        }
        self.positions = (0..self.weight).collect();
        self.values = vec![0; self.weight];
    }
}

impl Iterator for CorrectablePatterns {
    type Item = ErrorPattern;

    fn next(&mut self) -> Option<ErrorPattern> {
        if self.done {
            return None;
        }
        let entries = self.positions.iter().zip(&self.values).map(|(&p, &v)| (p, self.nonzero[v])).collect();
        self.advance();
        Some(ErrorPattern { entries })
    }
}

/// Formats a vector as comma-separated element literals.
pub fn format_vector(field: &Field, v: &[Elem]) -> String {
    v.iter().map(|&e| field.format_elem(e)).collect::<Vec<_>>().join(",")
}

/// Parses comma-separated element literals, optionally wrapped in parentheses.
pub fn parse_vector(field: &Field, text: &str) -> Result<Vec<Elem>, gf::GfError> {
    let inner = text.trim().trim_start_matches('(').trim_end_matches(')');
    if inner.trim().is_empty() {
        return Ok(Vec::new());
    }
    inner.split(',').map(|s| field.parse_elem(s.trim())).collect()
}
