//! Code definition files.
//!
//! ```text
//! [field]   p=2 k=2 primitive=1,1,1
//! [ring]    vars=x,y
//! [variety] gen=y^2+y+x^3          (repeatable)
//!           point=(0,0)            (optional, repeatable: pins the point order)
//! [code]    name=hermitian_q2      (optional)
//!           L=1  L=x  L=y  ...     (repeatable, in syndrome order)
//!           t=2
//! [decoder] ghost=(1,1)            (optional)
//!           coordinate_order=x,y   (optional)
//!           ideal=star             (optional: star, fl or hat)
//! ```
//!
//! `primitive` lists the coefficients of the monic primitive polynomial in
//! ascending order; without it the field of order `p^k` uses its default
//! polynomial.

use code_core::{format_vector, parse_vector, AffineVarietyCode};
use decoding_ideals::Variant;
use mpoly::{Elem, Field, Poly, PolyRing};

use crate::sections::{config_error, parse_sections, render_section, Entry, Section};
use crate::DecoderError;

pub(crate) const CONFIG_KEYS: [(&str, &[&str]); 5] = [
    ("field", &["p", "k", "primitive"]),
    ("ring", &["vars"]),
    ("variety", &["gen", "point"]),
    ("code", &["name", "L", "t"]),
    ("decoder", &["ghost", "coordinate_order", "ideal"]),
];

/// A validated code definition together with the decoder options.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodeConfig {
    pub name: String,
    pub field: Field,
    /// `[field] primitive=` as written, if given.
    pub primitive: Option<Vec<u32>>,
    pub ring: PolyRing,
    pub generators: Vec<Poly>,
    pub points: Option<Vec<Vec<Elem>>>,
    pub functions: Vec<Poly>,
    pub t: usize,
    pub ghost: Option<Vec<Elem>>,
    pub coordinate_order: Option<Vec<String>>,
    pub ideal: Option<Variant>,
}

fn parse_number<T: std::str::FromStr>(entry: &Entry) -> Result<T, DecoderError> {
    entry
        .value
        .trim()
        .parse()
        .map_err(|_| config_error(entry.line, format!("'{}' expects a non-negative integer, found '{}'", entry.key, entry.value)))
}

fn parse_list(entry: &Entry) -> Vec<String> {
    entry.value.split(',').map(|s| s.trim().to_string()).filter(|s| !s.is_empty()).collect()
}

fn parse_point(field: &Field, entry: &Entry, m: usize) -> Result<Vec<Elem>, DecoderError> {
    let point = parse_vector(field, &entry.value).map_err(|e| config_error(entry.line, e.to_string()))?;
    if point.len() != m {
        return Err(config_error(entry.line, format!("expected {m} coordinates, found {}", point.len())));
    }
    Ok(point)
}

fn parse_poly(ring: &PolyRing, entry: &Entry) -> Result<Poly, DecoderError> {
    ring.parse(&entry.value).map_err(|e| config_error(entry.line, e.to_string()))
}

fn section<'a>(sections: &'a [Section], name: &str) -> Result<&'a Section, DecoderError> {
    let mut found = sections.iter().filter(|s| s.name == name);
    let first = found.next().ok_or_else(|| config_error(0, format!("missing section [{name}]")))?;
    if let Some(again) = found.next() {
        return Err(config_error(again.line, format!("section [{name}] appears twice")));
    }
    Ok(first)
}

fn optional_section<'a>(sections: &'a [Section], name: &str) -> Result<Option<&'a Section>, DecoderError> {
    if sections.iter().any(|s| s.name == name) {
        section(sections, name).map(Some)
    } else {
        Ok(None)
    }
}

impl CodeConfig {
    /// Parses a configuration. `default_name` names the code when the file
    /// has no `[code] name=` entry.
    pub fn parse(text: &str, default_name: &str) -> Result<CodeConfig, DecoderError> {
        let sections = parse_sections(text, &CONFIG_KEYS)?;
        CodeConfig::from_sections(&sections, default_name)
    }

    pub(crate) fn from_sections(sections: &[Section], default_name: &str) -> Result<CodeConfig, DecoderError> {
        let field_section = section(sections, "field")?;
        let p_entry = field_section.required("p")?;
        let p: u32 = parse_number(p_entry)?;
        let k: u32 = field_section.single("k")?.map(parse_number).transpose()?.unwrap_or(1);
        let primitive_entry = field_section.single("primitive")?;
        let primitive = primitive_entry
            .map(|e| {
                parse_list(e)
                    .iter()
                    .map(|c| c.parse::<u32>().map_err(|_| config_error(e.line, format!("bad coefficient '{c}'"))))
                    .collect::<Result<Vec<u32>, _>>()
            })
            .transpose()?;
        let field_line = primitive_entry.unwrap_or(p_entry).line;
        let field = match &primitive {
            Some(coeffs) => Field::new(p, k, coeffs),
            None => {
                let q = p.checked_pow(k).ok_or_else(|| config_error(field_line, format!("{p}^{k} is too large")))?;
                Field::of_order(q)
            }
        }
        .map_err(|e| config_error(field_line, e.to_string()))?;

        let ring_section = section(sections, "ring")?;
        let vars_entry = ring_section.required("vars")?;
        let ring = PolyRing::lex(&field, &parse_list(vars_entry)).map_err(|e| config_error(vars_entry.line, e.to_string()))?;

        let variety = section(sections, "variety")?;
        let generators = variety.values("gen").map(|e| parse_poly(&ring, e)).collect::<Result<Vec<_>, _>>()?;
        let points: Vec<Vec<Elem>> =
            variety.values("point").map(|e| parse_point(&field, e, ring.nvars())).collect::<Result<_, _>>()?;

        let code = section(sections, "code")?;
        let name = code.single("name")?.map_or_else(|| default_name.to_string(), |e| e.value.trim().to_string());
        let functions = code.values("L").map(|e| parse_poly(&ring, e)).collect::<Result<Vec<_>, _>>()?;
        if functions.is_empty() {
            return Err(config_error(code.line, "[code] needs at least one 'L='"));
        }
        let t: usize = parse_number(code.required("t")?)?;

        let (mut ghost, mut coordinate_order, mut ideal) = (None, None, None);
        if let Some(decoder) = optional_section(sections, "decoder")? {
            ghost = decoder.single("ghost")?.map(|e| parse_point(&field, e, ring.nvars())).transpose()?;
            coordinate_order = decoder.single("coordinate_order")?.map(parse_list);
            ideal = decoder
                .single("ideal")?
                .map(|e| e.value.trim().parse::<Variant>().map_err(|m| config_error(e.line, m)))
                .transpose()?;
        }

        Ok(CodeConfig {
            name,
            field,
            primitive,
            ring,
            generators,
            points: (!points.is_empty()).then_some(points),
            functions,
            t,
            ghost,
            coordinate_order,
            ideal,
        })
    }

    /// Builds the code: enumerates the variety (or checks the pinned point
    /// list) and forms the parity-check matrix.
    pub fn code(&self) -> Result<AffineVarietyCode, DecoderError> {
        Ok(AffineVarietyCode::new(
            &self.ring,
            self.generators.clone(),
            self.functions.clone(),
            self.t,
            self.points.clone(),
        )?)
    }

    /// Canonical text of the configuration; [`CodeConfig::parse`] reads it
    /// back to an equal value.
    pub fn render(&self) -> String {
        let mut out = String::new();
        let mut field = vec![("p", self.field.characteristic().to_string()), ("k", self.field.degree().to_string())];
        if let Some(coeffs) = &self.primitive {
            field.push(("primitive", coeffs.iter().map(u32::to_string).collect::<Vec<_>>().join(",")));
        }
        render_section(&mut out, "field", &field);
        render_section(&mut out, "ring", &[("vars", self.ring.vars().names().join(","))]);
        let mut variety: Vec<(&str, String)> = self.generators.iter().map(|g| ("gen", g.to_text())).collect();
        for p in self.points.iter().flatten() {
            variety.push(("point", format!("({})", format_vector(&self.field, p))));
        }
        render_section(&mut out, "variety", &variety);
        let mut code = vec![("name", self.name.clone())];
        code.extend(self.functions.iter().map(|f| ("L", f.to_text())));
        code.push(("t", self.t.to_string()));
        render_section(&mut out, "code", &code);
        let mut decoder = Vec::new();
        if let Some(g) = &self.ghost {
            decoder.push(("ghost", format!("({})", format_vector(&self.field, g))));
        }
        if let Some(order) = &self.coordinate_order {
            decoder.push(("coordinate_order", order.join(",")));
        }
        if let Some(ideal) = self.ideal {
            decoder.push(("ideal", ideal.to_string()));
        }
        if !decoder.is_empty() {
            render_section(&mut out, "decoder", &decoder);
        }
        out
    }
}
