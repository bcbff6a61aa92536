//! Partition of a basis by the largest variable of each element and its
//! degree in that variable.

use std::collections::BTreeMap;

use mpoly::Poly;

use crate::{GroebnerBasis, GroebnerError};

/// The elements whose largest variable is one designated variable, grouped
/// by their degree in it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StratumSlot {
    /// Name of the block holding the variable.
    pub block: String,
    /// 1-based position of the variable inside its block.
    pub index_in_block: usize,
    /// Position of the variable in the ring.
    pub var: usize,
    pub var_name: String,
    /// Degree to elements, each list ascending by leading monomial.
    pub by_degree: BTreeMap<u32, Vec<Poly>>,
}

impl StratumSlot {
    /// Largest degree present, or 0 when the slot is empty.
    pub fn zeta(&self) -> u32 {
        self.by_degree.keys().next_back().copied().unwrap_or(0)
    }

    pub fn degree_slice(&self, delta: u32) -> &[Poly] {
        self.by_degree.get(&delta).map(Vec::as_slice).unwrap_or(&[])
    }

    /// All elements of the slot, ascending by degree then leading monomial.
    pub fn elements(&self) -> impl Iterator<Item = &Poly> {
        self.by_degree.values().flatten()
    }

    pub fn len(&self) -> usize {
        self.by_degree.values().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.by_degree.is_empty()
    }
}

/// Stratification of a basis over every variable of the chosen blocks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisStratification {
    pub slots: Vec<StratumSlot>,
}

impl BasisStratification {
    pub fn slot(&self, var_name: &str) -> Option<&StratumSlot> {
        self.slots.iter().find(|s| s.var_name == var_name)
    }
}

impl GroebnerBasis {
    /// Stratifies the basis over the variables of the named blocks, which
    /// must be listed in ascending order.
    pub fn stratify<S: AsRef<str>>(&self, blocks: &[S]) -> Result<BasisStratification, GroebnerError> {
        let vars = self.ring().vars();
        let mut slots = Vec::new();
        let mut last_end = 0;
        for name in blocks {
            let block = vars.block(name.as_ref()).ok_or_else(|| {
                GroebnerError::IncompatibleOrder(format!("the ring has no variable block '{}'", name.as_ref()))
            })?;
            if block.start < last_end {
                return Err(GroebnerError::IncompatibleOrder("blocks must be listed in ascending order".to_string()));
            }
            last_end = block.start + block.len;
            for (k, var) in block.positions().enumerate() {
                slots.push(StratumSlot {
                    block: block.name.clone(),
                    index_in_block: k + 1,
                    var,
                    var_name: vars.name(var).to_string(),
                    by_degree: BTreeMap::new(),
                });
            }
        }
        for g in self.elements() {
            let lm = g.lm();
            let Some(top) = (0..32).rev().find(|v| lm.support() & (1 << v) != 0) else {
                continue;
            };
            if let Some(slot) = slots.iter_mut().find(|s| s.var == top) {
                slot.by_degree.entry(lm.exponent(top)).or_default().push(g.clone());
            }
        }
        Ok(BasisStratification { slots })
    }
}
