//! Structure of the ghost-point decoding ideal of a configured code.

use decoding_ideals::{
    analyze_stratification, build_ideal, choose_ghost_point, compute_t_bounds, is_optimal_ghost, semantic_variety,
    variety_from_basis, DecodingIdealSpec, StratificationReport, Variant,
};
use groebner::buchberger;
use mpoly::Elem;

use crate::{CodeConfig, DecoderError};

#[derive(Debug, Clone)]
pub struct Analysis {
    pub ghost: Vec<Elem>,
    /// Coordinates of the ghost point whose value no variety point has.
    pub ghost_components: Vec<usize>,
    pub t_bounds: Vec<usize>,
    pub basis_size: usize,
    pub variety_size: usize,
    /// Whether the variety read off the basis equals the variety built from
    /// the correctable errors.
    pub variety_matches_errors: bool,
    pub stratification: StratificationReport,
}

/// Computes the ghost-point ideal's reduced basis and its variety, and
/// reports the fiber structure along the location blocks.
pub fn analyze(config: &CodeConfig) -> Result<Analysis, DecoderError> {
    let code = config.code()?;
    let ghost = match &config.ghost {
        Some(g) => g.clone(),
        None => choose_ghost_point(&code)?,
    };
    let mut spec = DecodingIdealSpec::new(code.clone(), Variant::Star, Some(ghost.clone()))?;
    if let Some(order) = &config.coordinate_order {
        spec = spec.with_coordinate_order(order)?;
    }
    let basis = buchberger(spec.locator_ring(), &build_ideal(&spec)?)?;
    let variety = variety_from_basis(&basis, None)?;
    let semantic = semantic_variety(&spec)?;
    let stratification =
        analyze_stratification(spec.locator_ring(), &variety, &spec.location_blocks(), Some(&basis))?;
    Ok(Analysis {
        ghost_components: is_optimal_ghost(&code, &ghost).1,
        t_bounds: compute_t_bounds(&code, &ghost, spec.coordinate_order()),
        ghost,
        basis_size: basis.len(),
        variety_size: variety.len(),
        variety_matches_errors: variety.as_slice() == semantic.points(),
        stratification,
    })
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

impl Analysis {
    pub fn render(&self, config: &CodeConfig) -> String {
        let report = &self.stratification;
        let mut out = format!("ghost point: ({})\n", code_core::format_vector(&config.field, &self.ghost));
        let names = config.ring.vars();
        let optimal: Vec<&str> = self.ghost_components.iter().map(|&k| names.name(k)).collect();
        out.push_str(&format!(
            "optimal ghost: {}{}\n",
            yes_no(!optimal.is_empty()),
            if optimal.is_empty() { String::new() } else { format!(" ({})", optimal.join(", ")) }
        ));
        out.push_str(&format!(
            "locator degree bounds: {}\n",
            self.t_bounds.iter().map(usize::to_string).collect::<Vec<_>>().join(", ")
        ));
        out.push_str(&format!("basis size: {}\n", self.basis_size));
        out.push_str(&format!(
            "variety size: {} (matches the correctable errors: {})\n",
            self.variety_size,
            yes_no(self.variety_matches_errors)
        ));
        for slot in &report.slots {
            let sizes: Vec<String> = slot.sigma_sizes.iter().map(usize::to_string).collect();
            out.push_str(&format!(
                "slot {}: eta {} zeta {} sigma [{}] pure-power tops {}\n",
                slot.var_name,
                slot.eta,
                slot.zeta.map_or("-".to_string(), |z| z.to_string()),
                sizes.join(", "),
                slot.pure_power_tops.map_or("-".to_string(), |n| n.to_string())
            ));
        }
        for block in &report.blocks {
            out.push_str(&format!(
                "block {}: level {} largest fiber {} realized subsets {}/{}\n",
                block.block, block.level, block.max_fiber, block.realized_subsets, block.required_subsets
            ));
        }
        out.push_str(&format!("weakly stratified: {}\n", yes_no(report.weakly_stratified)));
        out.push_str(&format!("multi-stratified: {}\n", yes_no(report.multi_stratified)));
        out.push_str(&format!(
            "strongly multi-stratified: {}; ζ=η: {}\n",
            yes_no(report.strongly_multi_stratified),
            yes_no(report.zeta_equals_eta() == Some(true))
        ));
        out.push_str(&format!(
            "unique pure-power tops: {}\n",
            yes_no(report.has_unique_pure_power_tops() == Some(true))
        ));
        out
    }
}
