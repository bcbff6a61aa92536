//! Precomputed decoder tables: locators, the optional evaluator and the code
//! they belong to, with a text serialization.

use std::time::Instant;

use code_core::{format_vector, parse_vector, AffineVarietyCode};
use decoding_ideals::{
    build_ideal, choose_ghost_point, extract_evaluator, extract_locators, extract_weak_locators, stuff_ideal,
    DecodingIdealSpec, EvaluatorPoly, Flavor, LocatorSet, Variant,
};
use groebner::buchberger;
use mpoly::{Elem, Poly, PolyRing};

use crate::config::{CodeConfig, CONFIG_KEYS};
use crate::sections::{config_error, parse_sections, render_section, Section};
use crate::DecoderError;

const FORMAT_VERSION: u32 = 1;

/// Choices made when building tables; unset fields fall back to the
/// configuration, then to stuffed locators of the ghost-point ideal in the
/// code's own coordinate order (weak locators for the other ideals).
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BuildOptions {
    pub flavor: Option<Flavor>,
    pub evaluator: bool,
    pub ideal: Option<Variant>,
    pub coordinate_order: Option<Vec<String>>,
}

/// How the tables were obtained.
#[derive(Debug, Clone, PartialEq)]
pub struct BuildMetadata {
    pub ideal: Variant,
    /// Descriptor of the ring the decoding ideal's basis was computed in.
    pub locator_order: String,
    pub basis_size: usize,
    pub groebner_seconds: f64,
    pub stuffing_seconds: f64,
    pub evaluator_seconds: f64,
}

/// Everything `decode` needs. `locators` is absent only for `t = 0`.
#[derive(Debug, Clone)]
pub struct DecoderTables {
    config: CodeConfig,
    code: AffineVarietyCode,
    ghost: Option<Vec<Elem>>,
    /// Code variable indices in the locators' coordinate order.
    coordinate_order: Vec<usize>,
    locators: Option<LocatorSet>,
    evaluator: Option<EvaluatorPoly>,
    metadata: BuildMetadata,
}

impl PartialEq for DecoderTables {
    fn eq(&self, other: &Self) -> bool {
        self.config == other.config
            && self.ghost == other.ghost
            && self.coordinate_order == other.coordinate_order
            && self.locators == other.locators
            && self.evaluator == other.evaluator
            && self.metadata == other.metadata
    }
}

fn coordinate_indices(config: &CodeConfig, names: &[String]) -> Result<Vec<usize>, DecoderError> {
    names
        .iter()
        .map(|n| {
            config
                .ring
                .vars()
                .index_of(n)
                .ok_or_else(|| config_error(0, format!("'{n}' in the coordinate order is not a code variable")))
        })
        .collect()
}

impl DecoderTables {
    /// Computes the reduced basis of the decoding ideal and reads the
    /// locators (stuffing them for [`Flavor::Stuffed`]) and, when asked,
    /// the evaluator.
    pub fn build(config: &CodeConfig, options: &BuildOptions) -> Result<DecoderTables, DecoderError> {
        let code = config.code()?;
        let ideal = options.ideal.or(config.ideal).unwrap_or(Variant::Star);
        let flavor = options.flavor.unwrap_or(if ideal == Variant::Star { Flavor::Stuffed } else { Flavor::Weak });
        if flavor == Flavor::Stuffed && ideal != Variant::Star {
            return Err(config_error(0, "stuffed locators need the ghost-point ideal (ideal=star)"));
        }
        let ghost = match (ideal, &config.ghost) {
            (Variant::Star, Some(g)) => Some(g.clone()),
            (Variant::Star, None) => Some(choose_ghost_point(&code)?),
            _ => None,
        };
        let names = options.coordinate_order.clone().or_else(|| config.coordinate_order.clone());

        let mut metadata = BuildMetadata {
            ideal,
            locator_order: String::new(),
            basis_size: 0,
            groebner_seconds: 0.0,
            stuffing_seconds: 0.0,
            evaluator_seconds: 0.0,
        };
        if code.t() == 0 {
            let coordinate_order = match &names {
                Some(n) => coordinate_indices(config, n)?,
                None => (0..code.m()).collect(),
            };
            return Ok(DecoderTables {
                config: config.clone(),
                code,
                ghost,
                coordinate_order,
                locators: None,
                evaluator: None,
                metadata,
            });
        }

        let mut spec = DecodingIdealSpec::new(code.clone(), ideal, ghost.clone())?;
        if let Some(n) = &names {
            spec = spec.with_coordinate_order(n)?;
        }
        let generators = build_ideal(&spec)?;

        let start = Instant::now();
        let basis = buchberger(spec.locator_ring(), &generators)?;
        metadata.groebner_seconds = start.elapsed().as_secs_f64();
        metadata.locator_order = spec.locator_ring().descriptor();
        metadata.basis_size = basis.len();

        let locators = match flavor {
            Flavor::Weak => extract_weak_locators(&spec, &basis)?,
            Flavor::Stuffed => {
                let start = Instant::now();
                let stuffed = stuff_ideal(&spec, &basis)?;
                metadata.stuffing_seconds = start.elapsed().as_secs_f64();
                extract_locators(&spec, &stuffed)?
            }
        };

        let evaluator = if options.evaluator {
            let start = Instant::now();
            let ring = spec.evaluator_ring();
            let generators: Vec<Poly> = generators.iter().map(|g| g.map_by_name(ring)).collect::<Result<_, _>>()?;
            let evaluator = extract_evaluator(&spec, &buchberger(ring, &generators)?)?;
            metadata.evaluator_seconds = start.elapsed().as_secs_f64();
            Some(evaluator)
        } else {
            None
        };

        Ok(DecoderTables {
            config: config.clone(),
            code,
            ghost,
            coordinate_order: spec.coordinate_order().to_vec(),
            locators: Some(locators),
            evaluator,
            metadata,
        })
    }

    pub fn config(&self) -> &CodeConfig {
        &self.config
    }

    pub fn code(&self) -> &AffineVarietyCode {
        &self.code
    }

    pub fn ghost(&self) -> Option<&[Elem]> {
        self.ghost.as_deref()
    }

    /// Code variable indices in the order the locators solve for them.
    pub fn coordinate_order(&self) -> &[usize] {
        &self.coordinate_order
    }

    pub fn locators(&self) -> Option<&LocatorSet> {
        self.locators.as_ref()
    }

    pub fn evaluator(&self) -> Option<&EvaluatorPoly> {
        self.evaluator.as_ref()
    }

    pub fn metadata(&self) -> &BuildMetadata {
        &self.metadata
    }

    /// Flavor of the locators; tables without locators count as stuffed,
    /// since they have no parasites to filter.
    pub fn flavor(&self) -> Flavor {
        self.locators.as_ref().map_or(Flavor::Stuffed, LocatorSet::flavor)
    }

    /// Text form: the code configuration followed by `[tables]`,
    /// `[locators]` and `[evaluator]` sections.
    pub fn to_text(&self) -> String {
        let field = self.code.field();
        let mut out = self.config.render();
        let names = self.code.ring().vars();
        let mut header = vec![
            ("version", FORMAT_VERSION.to_string()),
            ("ideal", self.metadata.ideal.to_string()),
            ("flavor", self.flavor().to_string()),
        ];
        if let Some(g) = &self.ghost {
            header.push(("ghost", format!("({})", format_vector(field, g))));
        }
        header.extend([
            (
                "coordinate_order",
                self.coordinate_order.iter().map(|&i| names.name(i)).collect::<Vec<_>>().join(","),
            ),
            ("locator_order", self.metadata.locator_order.clone()),
            ("basis_size", self.metadata.basis_size.to_string()),
            ("groebner_seconds", self.metadata.groebner_seconds.to_string()),
            ("stuffing_seconds", self.metadata.stuffing_seconds.to_string()),
            ("evaluator_seconds", self.metadata.evaluator_seconds.to_string()),
        ]);
        render_section(&mut out, "tables", &header);
        if let Some(locators) = &self.locators {
            let mut entries = vec![("ring", locators.ring().descriptor())];
            entries.extend(locators.locators().iter().map(|l| ("L", l.to_text())));
            render_section(&mut out, "locators", &entries);
        }
        if let Some(evaluator) = &self.evaluator {
            render_section(
                &mut out,
                "evaluator",
                &[("ring", evaluator.ring().descriptor()), ("E", evaluator.poly().to_text())],
            );
        }
        out
    }

    /// Reads tables written by [`DecoderTables::to_text`] and rebuilds the
    /// code from the embedded configuration.
    pub fn from_text(text: &str) -> Result<DecoderTables, DecoderError> {
        let mut keys: Vec<(&str, &[&str])> = CONFIG_KEYS.to_vec();
        keys.extend([
            (
                "tables",
                &[
                    "version",
                    "ideal",
                    "flavor",
                    "ghost",
                    "coordinate_order",
                    "locator_order",
                    "basis_size",
                    "groebner_seconds",
                    "stuffing_seconds",
                    "evaluator_seconds",
                ][..],
            ),
            ("locators", &["ring", "L"][..]),
            ("evaluator", &["ring", "E"][..]),
        ]);
        let sections = parse_sections(text, &keys)?;
        let config = CodeConfig::from_sections(&sections, "tables")?;
        let code = config.code()?;
        let field = code.field();

        let header = find(&sections, "tables")?.ok_or_else(|| config_error(0, "missing section [tables]"))?;
        let version = header.required("version")?;
        if version.value.trim() != FORMAT_VERSION.to_string() {
            return Err(config_error(version.line, format!("unsupported table format version '{}'", version.value)));
        }
        let value = |key: &str| header.required(key).map(|e| (e.value.trim().to_string(), e.line));
        let parsed = |key: &str| -> Result<f64, DecoderError> {
            let (v, line) = value(key)?;
            v.parse().map_err(|_| config_error(line, format!("'{key}' expects a number, found '{v}'")))
        };
        let (ideal, line) = value("ideal")?;
        let ideal: Variant = ideal.parse().map_err(|m| config_error(line, m))?;
        let (flavor, line) = value("flavor")?;
        let flavor: Flavor = flavor.parse().map_err(|m| config_error(line, m))?;
        let ghost = header
            .single("ghost")?
            .map(|e| parse_vector(field, &e.value).map_err(|err| config_error(e.line, err.to_string())))
            .transpose()?;
        let (order, _) = value("coordinate_order")?;
        let order: Vec<String> = order.split(',').map(str::to_string).filter(|s| !s.is_empty()).collect();
        let coordinate_order = coordinate_indices(&config, &order)?;
        let (basis_size, line) = value("basis_size")?;
        let metadata = BuildMetadata {
            ideal,
            locator_order: value("locator_order")?.0,
            basis_size: basis_size.parse().map_err(|_| config_error(line, "'basis_size' expects an integer"))?,
            groebner_seconds: parsed("groebner_seconds")?,
            stuffing_seconds: parsed("stuffing_seconds")?,
            evaluator_seconds: parsed("evaluator_seconds")?,
        };

        let locators = match find(&sections, "locators")? {
            Some(s) => {
                let ring = ring_of(s)?;
                let polys = s
                    .values("L")
                    .map(|e| ring.parse(&e.value).map_err(|err| config_error(e.line, err.to_string())))
                    .collect::<Result<Vec<_>, _>>()?;
                Some(LocatorSet::new(&ring, code.r(), flavor, polys)?)
            }
            None => None,
        };
        let evaluator = match find(&sections, "evaluator")? {
            Some(s) => {
                let ring = ring_of(s)?;
                let e = s.required("E")?;
                let poly = ring.parse(&e.value).map_err(|err| config_error(e.line, err.to_string()))?;
                Some(EvaluatorPoly::new(&ring, poly)?)
            }
            None => None,
        };
        if locators.is_none() && code.t() > 0 {
            return Err(config_error(0, "missing section [locators]"));
        }
        Ok(DecoderTables { config, code, ghost, coordinate_order, locators, evaluator, metadata })
    }
}

fn find<'a>(sections: &'a [Section], name: &str) -> Result<Option<&'a Section>, DecoderError> {
    let mut found = sections.iter().filter(|s| s.name == name);
    let first = found.next();
    if let Some(again) = found.next() {
        return Err(config_error(again.line, format!("section [{name}] appears twice")));
    }
    Ok(first)
}

fn ring_of(section: &Section) -> Result<PolyRing, DecoderError> {
    let entry = section.required("ring")?;
    PolyRing::from_descriptor(entry.value.trim()).map_err(|e| config_error(entry.line, e.to_string()))
}
