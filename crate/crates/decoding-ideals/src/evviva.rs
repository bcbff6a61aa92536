//! Structural identities of degree-2 first locators for two-error codes.
//!
//! When the first locator is `x² + a(s) x + b(s)` and `L` contains `1`, `x`
//! and `x²` with syndromes `s_1`, `s_x`, `s_{x²}`, every correctable syndrome
//! satisfies `a s_x + b s_1 = −s_{x²}`. When `s_1 = s_x = 0` for a weight-2
//! error, both locations share the coordinate `x̄` and `b = x̄²`, `a = 2x̄`.

use code_core::AffineVarietyCode;
use mpoly::{Elem, Poly};

use crate::LocatorSet;

/// Outcome of [`check_evviva`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvvivaReport {
    /// False when the code or the locator does not have the required shape;
    /// nothing is checked then.
    pub applicable: bool,
    /// Correctable syndromes checked against the linear identity.
    pub checked: usize,
    /// Syndromes violating the linear identity.
    pub violations: Vec<Vec<Elem>>,
    /// Weight-2 errors with `s_1 = s_x = 0` checked.
    pub degenerate_checked: usize,
    /// Syndromes of such errors where `a` or `b` differ from `2x̄`, `x̄²`.
    pub degenerate_violations: Vec<Vec<Elem>>,
}

impl EvvivaReport {
    pub fn holds(&self) -> bool {
        self.applicable && self.violations.is_empty() && self.degenerate_violations.is_empty()
    }
}

fn not_applicable() -> EvvivaReport {
    EvvivaReport {
        applicable: false,
        checked: 0,
        violations: Vec::new(),
        degenerate_checked: 0,
        degenerate_violations: Vec::new(),
    }
}

/// Checks the identities for the first locator of `locators`, whose
/// variable is the code coordinate `coordinate_order[0]`.
pub fn check_evviva(code: &AffineVarietyCode, locators: &LocatorSet, coordinate_order: &[usize]) -> EvvivaReport {
    let Some(&coordinate) = coordinate_order.first() else {
        return not_applicable();
    };
    if code.t() != 2 || locators.degrees().first() != Some(&2) || locators.r() != code.r() {
        return not_applicable();
    }
    let code_ring = code.ring();
    let x = code_ring.var(coordinate);
    let index_of = |f: &Poly| code.functions().iter().position(|b| b == f);
    let (Some(i_one), Some(i_x), Some(i_xx)) = (index_of(&code_ring.one()), index_of(&x), index_of(&(&x * &x))) else {
        return not_applicable();
    };

    let field = code.field();
    let ring = locators.ring();
    let var = locators.r();
    let first = &locators.locators()[0];
    let a = first.coefficient_of_power(var, 1);
    let b = first.coefficient_of_power(var, 0);
    let at = |f: &Poly, s: &[Elem]| {
        let mut point = s.to_vec();
        point.resize(ring.nvars(), Elem::ZERO);
        f.evaluate(&point)
    };

    let mut report = EvvivaReport { applicable: true, ..not_applicable() };
    for pattern in code.correctable_patterns() {
        let s = code.pattern_syndrome(&pattern).expect("pattern positions are in range");
        let (a_s, b_s) = (at(&a, &s), at(&b, &s));
        let lhs = field.add(field.add(field.mul(a_s, s[i_x]), field.mul(b_s, s[i_one])), s[i_xx]);
        report.checked += 1;
        if !lhs.is_zero() {
            report.violations.push(s.clone());
        }
        if pattern.weight() == 2 && s[i_one].is_zero() && s[i_x].is_zero() {
            let x_bar = code.points()[pattern.entries()[0].0][coordinate];
            report.degenerate_checked += 1;
            if b_s != field.mul(x_bar, x_bar) || a_s != field.mul(field.from_int(2), x_bar) {
                report.degenerate_violations.push(s);
            }
        }
    }
    report
}
