//! Exhaustive verification over every correctable error pattern.

use std::thread;
use std::time::{Duration, Instant};

use code_core::ErrorPattern;

use crate::decode::{decode, DecodeStatus, Received};
use crate::DecoderTables;

/// A correctable error the decoder did not reproduce.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub expected: ErrorPattern,
    pub status: DecodeStatus,
    pub found: Option<ErrorPattern>,
}

#[derive(Debug, Clone)]
pub struct VerifyReport {
    /// Correctable patterns checked, the zero pattern included.
    pub total: usize,
    /// Patterns decoded exactly.
    pub exact: usize,
    pub mismatches: Vec<Mismatch>,
    /// Syndromes the decoder reported as ambiguous.
    pub ambiguous: usize,
    /// Syndromes on which the decoder and the syndrome-table oracle differ.
    pub oracle_disagreements: usize,
    pub elapsed: Duration,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty() && self.oracle_disagreements == 0 && self.exact == self.total
    }

    pub fn summary(&self) -> String {
        let mut out = if self.passed() {
            format!("{} ok", self.exact)
        } else {
            format!("{}/{} exact, {} mismatches", self.exact, self.total, self.mismatches.len())
        };
        if self.ambiguous > 0 {
            out.push_str(&format!(", {} ambiguous", self.ambiguous));
        }
        if self.oracle_disagreements > 0 {
            out.push_str(&format!(", {} oracle disagreements", self.oracle_disagreements));
        }
        out.push_str(&format!(" ({:.3} s)", self.elapsed.as_secs_f64()));
        out
    }
}

/// Decodes the syndrome of every error of weight at most `t` and checks the
/// result against the error and against the code's syndrome-table oracle.
/// Syndromes are split across the available cores.
pub fn verify_exhaustive(tables: &DecoderTables) -> VerifyReport {
    let start = Instant::now();
    let code = tables.code();
    let oracle = code.syndrome_table();
    let patterns: Vec<ErrorPattern> = code.correctable_patterns().collect();
    let workers = thread::available_parallelism().map_or(1, |n| n.get()).min(patterns.len().max(1));
    let chunk = patterns.len().div_ceil(workers).max(1);

    let outcomes: Vec<(Option<Mismatch>, bool, bool)> = thread::scope(|scope| {
        let handles: Vec<_> = patterns
            .chunks(chunk)
            .map(|part| {
                let oracle = &oracle;
                scope.spawn(move || {
                    part.iter()
                        .map(|expected| {
                            let s = code.pattern_syndrome(expected).expect("correctable patterns are in range");
                            let (status, found) = match decode(tables, Received::Syndrome(&s)) {
                                Ok(r) => (r.status, r.pattern),
                                Err(_) => (DecodeStatus::NotCorrectable, None),
                            };
                            let oracle_agrees = oracle.lookup(&s) == found.as_ref();
                            let mismatch = (found.as_ref() != Some(expected))
                                .then(|| Mismatch { expected: expected.clone(), status, found });
                            (mismatch, status == DecodeStatus::Ambiguous, oracle_agrees)
                        })
                        .collect::<Vec<_>>()
                })
            })
            .collect();
        handles.into_iter().flat_map(|h| h.join().expect("verification worker panicked")).collect()
    });

    let mut report = VerifyReport {
        total: patterns.len(),
        exact: 0,
        mismatches: Vec::new(),
        ambiguous: 0,
        oracle_disagreements: 0,
        elapsed: Duration::ZERO,
    };
    for (mismatch, ambiguous, oracle_agrees) in outcomes {
        match mismatch {
            Some(m) => report.mismatches.push(m),
            None => report.exact += 1,
        }
        report.ambiguous += usize::from(ambiguous);
        report.oracle_disagreements += usize::from(!oracle_agrees);
    }
    report.elapsed = start.elapsed();
    report
}
