//! Decoding a received word or syndrome with precomputed tables.

use std::fmt;

use code_core::linalg::{solve_columns, Solution};
use code_core::{format_vector, ErrorPattern};
use decoding_ideals::Flavor;
use mpoly::Elem;

use crate::{DecoderError, DecoderTables};

/// What the decoder received.
#[derive(Debug, Clone, Copy)]
pub enum Received<'a> {
    Word(&'a [Elem]),
    Syndrome(&'a [Elem]),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DecodeStatus {
    NoError,
    Corrected,
    NotCorrectable,
    /// Weak locators left more than one consistent error pattern.
    Ambiguous,
}

impl DecodeStatus {
    pub fn name(self) -> &'static str {
        match self {
            DecodeStatus::NoError => "no_error",
            DecodeStatus::Corrected => "corrected",
            DecodeStatus::NotCorrectable => "not_correctable",
            DecodeStatus::Ambiguous => "ambiguous",
        }
    }
}

impl fmt::Display for DecodeStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Roots of one specialized locator: `L_{i+1}(s̄, prefix, x)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CandidateStep {
    /// Earlier coordinates, in the locators' coordinate order.
    pub prefix: Vec<Elem>,
    /// Roots with multiplicities, in canonical element order.
    pub roots: Vec<(Elem, u32)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecodeResult {
    pub status: DecodeStatus,
    pub syndrome: Vec<Elem>,
    /// The error for `no_error` (empty) and `corrected`.
    pub pattern: Option<ErrorPattern>,
    /// Every consistent error pattern found; more than one only when
    /// ambiguous.
    pub consistent: Vec<ErrorPattern>,
    /// The received word minus the error, when a word was given and the
    /// error was found.
    pub corrected_word: Option<Vec<Elem>>,
    /// Per coordinate, the roots found over every candidate prefix.
    pub trace: Vec<Vec<CandidateStep>>,
}

/// Runs the locators on the syndrome and recovers the error.
///
/// 1. A zero syndrome means no error.
/// 2. Roots of `L_1(s̄, x_1)` give candidate first coordinates; each prefix is
///    extended by the roots of the next locator up to full points.
/// 3. Stuffed locators: the points other than the ghost point are the error
///    locations. Weak locators: points on the variety are candidates and
///    every subset of at most `t` of them whose syndrome equations have a
///    solution with all values nonzero is kept.
/// 4. Error values solve `Σ_j e_j b_ρ(P_j) = s̄_ρ`, and the result is checked
///    against the syndrome before it is reported as corrected.
pub fn decode(tables: &DecoderTables, received: Received<'_>) -> Result<DecodeResult, DecoderError> {
    let code = tables.code();
    let syndrome = match received {
        Received::Word(w) => code.syndrome(w)?,
        Received::Syndrome(s) => {
            if s.len() != code.r() {
                return Err(DecoderError::Input(format!("expected a syndrome of length {}, got {}", code.r(), s.len())));
            }
            s.to_vec()
        }
    };
    let mut result = DecodeResult {
        status: DecodeStatus::NotCorrectable,
        syndrome,
        pattern: None,
        consistent: Vec::new(),
        corrected_word: None,
        trace: Vec::new(),
    };
    if result.syndrome.iter().all(|e| e.is_zero()) {
        result.status = DecodeStatus::NoError;
        result.pattern = Some(ErrorPattern::empty());
    } else if let Some(locators) = tables.locators() {
        let mut points: Vec<Vec<Elem>> = vec![Vec::new()];
        for _ in 0..locators.m() {
            let mut steps = Vec::with_capacity(points.len());
            let mut next = Vec::new();
            for prefix in points {
                let roots = locators.roots(&result.syndrome, &prefix);
                for &(root, _) in &roots {
                    let mut p = prefix.clone();
                    p.push(root);
                    next.push(p);
                }
                steps.push(CandidateStep { prefix, roots });
            }
            result.trace.push(steps);
            points = next;
        }
        let points: Vec<Vec<Elem>> = points.iter().map(|p| in_code_order(tables.coordinate_order(), p)).collect();
        result.consistent = match tables.flavor() {
            Flavor::Stuffed => stuffed_candidates(tables, &points, &result.syndrome),
            Flavor::Weak => weak_candidates(tables, &points, &result.syndrome),
        };
        match result.consistent.len() {
            0 => {}
            1 => {
                result.status = DecodeStatus::Corrected;
                result.pattern = result.consistent.first().cloned();
            }
            _ => result.status = DecodeStatus::Ambiguous,
        }
    }
    if let (Received::Word(w), Some(pattern)) = (received, &result.pattern) {
        let field = code.field();
        let error = pattern.to_vector(code.n());
        result.corrected_word = Some(w.iter().zip(&error).map(|(&a, &b)| field.sub(a, b)).collect());
    }
    Ok(result)
}

/// Rearranges a point from the locators' coordinate order to the code's.
fn in_code_order(order: &[usize], point: &[Elem]) -> Vec<Elem> {
    let mut out = vec![Elem::ZERO; point.len()];
    for (&i, &x) in order.iter().zip(point) {
        out[i] = x;
    }
    out
}

/// The unique error on `positions` with all values nonzero and the given
/// syndrome, if any.
fn solve_values(tables: &DecoderTables, positions: &[usize], syndrome: &[Elem]) -> Option<ErrorPattern> {
    let code = tables.code();
    let h = code.parity_check();
    let columns: Vec<Vec<Elem>> = positions.iter().map(|&j| h.iter().map(|row| row[j]).collect()).collect();
    let Solution::Unique(values) = solve_columns(code.field(), &columns, syndrome) else {
        return None;
    };
    if values.iter().any(|v| v.is_zero()) {
        return None;
    }
    let pattern = ErrorPattern::new(positions.iter().copied().zip(values).collect()).ok()?;
    (code.pattern_syndrome(&pattern).ok()? == syndrome).then_some(pattern)
}

fn stuffed_candidates(tables: &DecoderTables, points: &[Vec<Elem>], syndrome: &[Elem]) -> Vec<ErrorPattern> {
    let code = tables.code();
    let mut positions = Vec::new();
    for p in points.iter().filter(|p| Some(p.as_slice()) != tables.ghost()) {
        match code.position_of(p) {
            Some(j) => positions.push(j),
            None => return Vec::new(),
        }
    }
    if positions.is_empty() || positions.len() > code.t() {
        return Vec::new();
    }
    positions.sort_unstable();
    solve_values(tables, &positions, syndrome).into_iter().collect()
}

fn weak_candidates(tables: &DecoderTables, points: &[Vec<Elem>], syndrome: &[Elem]) -> Vec<ErrorPattern> {
    let code = tables.code();
    let mut candidates: Vec<usize> = points.iter().filter_map(|p| code.position_of(p)).collect();
    candidates.sort_unstable();
    candidates.dedup();
    let mut found: Vec<ErrorPattern> = Vec::new();
    for size in 1..=code.t().min(candidates.len()) {
        for subset in subsets(&candidates, size) {
            if let Some(pattern) = solve_values(tables, &subset, syndrome) {
                if !found.contains(&pattern) {
                    found.push(pattern);
                }
            }
        }
    }
    found
}

/// The `size`-element subsets of `items`, in lexicographic order.
fn subsets(items: &[usize], size: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut chosen: Vec<usize> = (0..size).collect();
    loop {
        out.push(chosen.iter().map(|&i| items[i]).collect());
        let Some(k) = (0..size).rev().find(|&k| chosen[k] < items.len() - size + k) else {
            return out;
        };
        chosen[k] += 1;
        for l in k + 1..size {
            chosen[l] = chosen[l - 1] + 1;
        }
    }
}

/// Error count and values predicted by the evaluator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightPrediction {
    /// `μ = t − (multiplicity of 0 as a root of E(s̄, e))`.
    pub weight: usize,
    /// Nonzero roots of `E(s̄, e)`, repeated by multiplicity.
    pub values: Vec<Elem>,
}

/// Reads the number of errors and their values off the evaluator.
pub fn predict_weight(tables: &DecoderTables, syndrome: &[Elem]) -> Result<WeightPrediction, DecoderError> {
    let code = tables.code();
    if code.t() == 0 {
        return Ok(WeightPrediction { weight: 0, values: Vec::new() });
    }
    let evaluator = tables.evaluator().ok_or(DecoderError::EvaluatorMissing)?;
    if syndrome.len() != code.r() {
        return Err(DecoderError::Input(format!("expected a syndrome of length {}, got {}", code.r(), syndrome.len())));
    }
    let roots = evaluator.roots(syndrome);
    let zeros = roots.iter().find(|(e, _)| e.is_zero()).map_or(0, |&(_, m)| m as usize);
    let values = roots
        .iter()
        .filter(|(e, _)| !e.is_zero())
        .flat_map(|&(e, m)| std::iter::repeat_n(e, m as usize))
        .collect();
    Ok(WeightPrediction { weight: evaluator.t().saturating_sub(zeros), values })
}

impl DecodeResult {
    /// Multi-line report: status, syndrome, located errors and the root
    /// trace.
    pub fn render(&self, tables: &DecoderTables) -> String {
        let code = tables.code();
        let field = code.field();
        let names = code.ring().vars();
        let mut out = format!("status: {}\nsyndrome: {}\n", self.status, format_vector(field, &self.syndrome));
        for (k, pattern) in self.consistent.iter().enumerate() {
            if self.status == DecodeStatus::Ambiguous {
                out.push_str(&format!("candidate {}:\n", k + 1));
            }
            for &(j, v) in pattern.entries() {
                out.push_str(&format!(
                    "error: position {} point ({}) value {}\n",
                    j + 1,
                    format_vector(field, &code.points()[j]),
                    field.format_elem(v)
                ));
            }
        }
        if let Some(word) = &self.corrected_word {
            out.push_str(&format!("corrected: {}\n", format_vector(field, word)));
        }
        for (i, steps) in self.trace.iter().enumerate() {
            let var = names.name(tables.coordinate_order()[i]);
            for step in steps {
                let prefix = format_vector(field, &step.prefix);
                let roots: Vec<String> = step
                    .roots
                    .iter()
                    .map(|&(e, m)| if m == 1 { field.format_elem(e) } else { format!("{} (x{m})", field.format_elem(e)) })
                    .collect();
                out.push_str(&format!("trace {var} | ({prefix}): {{{}}}\n", roots.join(", ")));
            }
        }
        out
    }
}
