//! Fiber structure of a zero-dimensional variety along blocks of variables,
//! compared with the shape of a lex Gröbner basis.
//!
//! Variables before the first analyzed block play the role of `S`. The
//! analyzed blocks `A_L < … < A_1` are listed in ascending order, so the
//! `k`-th listed block has level `j = L − k`.

use std::collections::{HashMap, HashSet};

use groebner::{GroebnerBasis, GroebnerError};
use mpoly::{Elem, Monomial, PolyRing};

use crate::DecodingError;

/// Fiber data for one variable `a_{j,i}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SlotReport {
    pub block: String,
    /// Level `j` of the block.
    pub level: usize,
    /// 1-based position `i` of the variable inside its block.
    pub index: usize,
    /// Position of the variable in the ring.
    pub var: usize,
    pub var_name: String,
    /// `η(j,i)`: the largest number of values of this variable over one
    /// point of the projection onto the preceding variables.
    pub eta: usize,
    /// `sigma_sizes[l-1] = |Σ_l|`: how many projected points have exactly
    /// `l` extensions, for `l = 1..η`.
    pub sigma_sizes: Vec<usize>,
    /// `ζ(j,i)`: the largest degree of this variable among the basis
    /// elements whose leading monomial has it as largest variable.
    pub zeta: Option<u32>,
    /// How many of those elements have leading monomial exactly `a_{j,i}^ζ`.
    pub pure_power_tops: Option<usize>,
}

impl SlotReport {
    /// No gaps: every `Σ_l` with `l ≤ η` is nonempty.
    pub fn is_weakly_stratified(&self) -> bool {
        self.sigma_sizes.iter().all(|&n| n > 0)
    }
}

/// Fiber data for one whole block `A_j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockReport {
    pub block: String,
    pub level: usize,
    /// Largest number of distinct `A_j`-tuples over one point of the
    /// projection onto the preceding variables.
    pub max_fiber: usize,
    /// Whether some fiber has exactly `level` tuples.
    pub has_full_fiber: bool,
    /// `|Z_j|`: distinct `A_j`-tuples over the whole variety.
    pub image_size: usize,
    /// Distinct fiber images (as sets of `A_j`-tuples) with 1 to `level`
    /// elements.
    pub realized_subsets: u128,
    /// Nonempty subsets of `Z_j` with at most `level` elements.
    pub required_subsets: u128,
}

impl BlockReport {
    pub fn is_multi_stratified(&self) -> bool {
        self.max_fiber <= self.level && self.has_full_fiber
    }

    /// Fibers bounded by the level and every small subset of `Z_j` realized
    /// as a fiber image.
    pub fn is_strongly_multi_stratified(&self) -> bool {
        self.max_fiber <= self.level && self.realized_subsets == self.required_subsets
    }
}

/// Result of [`analyze_stratification`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StratificationReport {
    pub slots: Vec<SlotReport>,
    pub blocks: Vec<BlockReport>,
    pub weakly_stratified: bool,
    pub multi_stratified: bool,
    pub strongly_multi_stratified: bool,
}

impl StratificationReport {
    /// Whether `ζ(j,i) = η(j,i)` on every slot; `None` without a basis.
    pub fn zeta_equals_eta(&self) -> Option<bool> {
        self.slots.iter().map(|s| s.zeta.map(|z| z as usize == s.eta)).collect::<Option<Vec<_>>>().map(|v| {
            v.into_iter().all(|b| b)
        })
    }

    /// Whether every slot has exactly one element with leading monomial
    /// `a_{j,i}^ζ`; `None` without a basis.
    pub fn has_unique_pure_power_tops(&self) -> Option<bool> {
        self.slots
            .iter()
            .map(|s| s.pure_power_tops.map(|n| n == 1))
            .collect::<Option<Vec<_>>>()
            .map(|v| v.into_iter().all(|b| b))
    }

    /// `η(j,1)` for the blocks in ascending order: the level function of a
    /// single-variable-per-block ideal.
    pub fn first_variable_levels(&self) -> Vec<usize> {
        self.slots.iter().filter(|s| s.index == 1).map(|s| s.eta).collect()
    }

    pub fn slot(&self, var_name: &str) -> Option<&SlotReport> {
        self.slots.iter().find(|s| s.var_name == var_name)
    }
}

fn binomial(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u128, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

/// The distinct `width`-tuples that follow each distinct `len`-prefix.
fn extension_counts(variety: &[Vec<Elem>], len: usize, width: usize) -> HashMap<&[Elem], HashSet<&[Elem]>> {
    let mut fibers: HashMap<&[Elem], HashSet<&[Elem]>> = HashMap::new();
    for p in variety {
        fibers.entry(&p[..len]).or_default().insert(&p[len..len + width]);
    }
    fibers
}

/// Computes the level function `η`, the `Σ_l` partition, the block-level
/// fiber conditions and, when a basis is supplied, `ζ` and the pure-power
/// leading terms, for the variables of `blocks` (names of blocks of `ring`,
/// ascending). `variety` lists the points of the ideal in ring order.
///
/// The flags follow the definitions literally: weakly stratified means no
/// `Σ_l` gap on any slot; multi-stratified bounds every block fiber by the
/// level and requires a fiber of exactly that size; strongly
/// multi-stratified bounds the fibers and requires every nonempty subset of
/// `Z_j` with at most `j` elements to occur as a fiber image.
pub fn analyze_stratification<S: AsRef<str>>(
    ring: &PolyRing,
    variety: &[Vec<Elem>],
    blocks: &[S],
    basis: Option<&GroebnerBasis>,
) -> Result<StratificationReport, DecodingError> {
    if variety.iter().any(|p| p.len() != ring.nvars()) {
        return Err(DecodingError::RingMismatch);
    }
    if let Some(b) = basis {
        if b.ring() != ring {
            return Err(DecodingError::RingMismatch);
        }
    }
    let vars = ring.vars();
    let mut resolved = Vec::with_capacity(blocks.len());
    for name in blocks {
        let block = vars.block(name.as_ref()).ok_or_else(|| {
            GroebnerError::IncompatibleOrder(format!("the ring has no variable block '{}'", name.as_ref()))
        })?;
        if resolved.last().is_some_and(|b: &&mpoly::Block| b.start > block.start) {
            return Err(GroebnerError::IncompatibleOrder("blocks must be listed in ascending order".to_string()).into());
        }
        resolved.push(block);
    }
    let strata = basis.map(|b| b.stratify(blocks)).transpose()?;
    let levels = resolved.len();
    let mut slots = Vec::new();
    let mut block_reports = Vec::new();
    for (k, block) in resolved.into_iter().enumerate() {
        let level = levels - k;

        for (offset, var) in block.positions().enumerate() {
            let fibers = extension_counts(variety, var, 1);
            let eta = fibers.values().map(HashSet::len).max().unwrap_or(0);
            let mut sigma_sizes = vec![0usize; eta];
            for f in fibers.values() {
                sigma_sizes[f.len() - 1] += 1;
            }
            let (zeta, pure_power_tops) = match &strata {
                Some(st) => {
                    let slot = st.slot(vars.name(var)).expect("slot exists for every block variable");
                    let zeta = slot.zeta();
                    let power = Monomial::var_power(var, zeta).ok_or(mpoly::MpolyError::ExponentOverflow)?;
                    let count = slot.degree_slice(zeta).iter().filter(|g| g.lm() == power).count();
                    (Some(zeta), Some(count))
                }
                None => (None, None),
            };
            slots.push(SlotReport {
                block: block.name.clone(),
                level,
                index: offset + 1,
                var,
                var_name: vars.name(var).to_string(),
                eta,
                sigma_sizes,
                zeta,
                pure_power_tops,
            });
        }

        let fibers = extension_counts(variety, block.start, block.len);
        let image: HashSet<&[Elem]> = variety.iter().map(|p| &p[block.positions()]).collect();
        let mut images: HashSet<Vec<&[Elem]>> = HashSet::new();
        for f in fibers.values() {
            if f.len() <= level {
                let mut set: Vec<&[Elem]> = f.iter().copied().collect();
                set.sort();
                images.insert(set);
            }
        }
        let required = (1..=level as u128).map(|s| binomial(image.len() as u128, s)).sum();
        block_reports.push(BlockReport {
            block: block.name.clone(),
            level,
            max_fiber: fibers.values().map(HashSet::len).max().unwrap_or(0),
            has_full_fiber: fibers.values().any(|f| f.len() == level),
            image_size: image.len(),
            realized_subsets: images.len() as u128,
            required_subsets: required,
        });
    }
    Ok(StratificationReport {
        weakly_stratified: slots.iter().all(SlotReport::is_weakly_stratified),
        multi_stratified: block_reports.iter().all(BlockReport::is_multi_stratified),
        strongly_multi_stratified: block_reports.iter().all(BlockReport::is_strongly_multi_stratified),
        slots,
        blocks: block_reports,
    })
}
