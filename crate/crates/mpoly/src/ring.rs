//! Variable sets, term orders and polynomial rings.

use std::fmt;
use std::sync::Arc;

use gf::{Elem, Field};

use crate::monomial::{Monomial, MAX_VARS};
use crate::{MpolyError, Poly};

/// A named, contiguous run of variables inside a [`VarSet`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    pub name: String,
    pub start: usize,
    pub len: usize,
}

impl Block {
    pub fn positions(&self) -> std::ops::Range<usize> {
        self.start..self.start + self.len
    }
}

/// An ordered list of variable names partitioned into contiguous blocks.
///
/// Position order is the order of the variables in the term order: later
/// variables are bigger, and later blocks dominate earlier ones.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VarSet {
    names: Vec<String>,
    blocks: Vec<Block>,
}

fn is_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl VarSet {
    /// A variable set forming a single block named `"all"`.
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<VarSet, MpolyError> {
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        let len = names.len();
        VarSet::with_blocks(vec![("all".to_string(), names)]).map(|mut v| {
            if len == 0 {
                v.blocks.clear();
            }
            v
        })
    }

    /// A variable set from named blocks listed in ascending order.
    pub fn with_blocks(blocks: Vec<(String, Vec<String>)>) -> Result<VarSet, MpolyError> {
        let mut names = Vec::new();
        let mut out = Vec::new();
        for (name, vars) in blocks {
            if vars.is_empty() {
                continue;
            }
            out.push(Block { name, start: names.len(), len: vars.len() });
            for v in vars {
                if !is_identifier(&v) {
                    return Err(MpolyError::InvalidVariable(v));
                }
                if v == "g" {
                    return Err(MpolyError::ReservedName(v));
                }
                if names.contains(&v) {
                    return Err(MpolyError::DuplicateVariable(v));
                }
                names.push(v);
            }
        }
        if names.len() > MAX_VARS {
            return Err(MpolyError::TooManyVariables(names.len()));
        }
        Ok(VarSet { names, blocks: out })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn block(&self, name: &str) -> Option<&Block> {
        self.blocks.iter().find(|b| b.name == name)
    }
}

/// Monomial orders in scope. Both are lexicographic in position order; the
/// block variant records that the ring's blocks are compared block by block
/// (later blocks first) with lex inside each block, which is what makes
/// elimination views along block boundaries valid.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TermOrder {
    Lex,
    BlockLex,
}

impl TermOrder {
    #[inline]
    pub fn compare(self, a: Monomial, b: Monomial) -> std::cmp::Ordering {
        a.cmp(&b)
    }

    pub fn name(self) -> &'static str {
        match self {
            TermOrder::Lex => "lex",
            TermOrder::BlockLex => "block-lex",
        }
    }
}

#[derive(Debug)]
struct RingData {
    field: Field,
    vars: VarSet,
    order: TermOrder,
}

/// A polynomial ring `GF(q)[vars]` with a fixed term order. Cheap to clone.
#[derive(Clone)]
pub struct PolyRing(Arc<RingData>);

impl PartialEq for PolyRing {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.field == other.0.field
                && self.0.vars == other.0.vars
                && self.0.order == other.0.order)
    }
}

impl Eq for PolyRing {}

impl fmt::Debug for PolyRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PolyRing({self})")
    }
}

impl fmt::Display for PolyRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let blocks: Vec<String> = self
            .0
            .vars
            .blocks
            .iter()
            .map(|b| self.0.vars.names[b.positions()].join("<"))
            .collect();
        write!(f, "{} {} [{}]", self.0.field, self.0.order.name(), blocks.join(" | "))
    }
}

impl PolyRing {
    pub fn new(field: Field, vars: VarSet, order: TermOrder) -> PolyRing {
        PolyRing(Arc::new(RingData { field, vars, order }))
    }

    /// Lex ring over the given variable names, listed in ascending order.
    pub fn lex<S: AsRef<str>>(field: &Field, names: &[S]) -> Result<PolyRing, MpolyError> {
        Ok(PolyRing::new(field.clone(), VarSet::new(names)?, TermOrder::Lex))
    }

    pub fn field(&self) -> &Field {
        &self.0.field
    }

    pub fn vars(&self) -> &VarSet {
        &self.0.vars
    }

    pub fn order(&self) -> TermOrder {
        self.0.order
    }

    pub fn nvars(&self) -> usize {
        self.0.vars.len()
    }

    pub fn var_index(&self, name: &str) -> Result<usize, MpolyError> {
        self.0.vars.index_of(name).ok_or_else(|| MpolyError::UnknownVariable(name.to_string()))
    }

    pub fn zero(&self) -> Poly {
        Poly::zero(self)
    }

    pub fn one(&self) -> Poly {
        Poly::constant(self, Elem::ONE)
    }

    pub fn constant(&self, c: Elem) -> Poly {
        Poly::constant(self, c)
    }

    /// The variable at position `i` as a polynomial.
    pub fn var(&self, i: usize) -> Poly {
        assert!(i < self.nvars(), "variable index {i} out of range");
        Poly::from_sorted_terms(self, vec![(Monomial::var_power(i, 1).expect("index checked"), Elem::ONE)])
    }

    /// The variable with the given name as a polynomial.
    pub fn var_named(&self, name: &str) -> Result<Poly, MpolyError> {
        Ok(self.var(self.var_index(name)?))
    }

    /// Parses a polynomial in this ring (see [`crate::parse_poly`]).
    pub fn parse(&self, text: &str) -> Result<Poly, MpolyError> {
        crate::parse::parse_poly(text, self)
    }

    /// `x^q - x` for every variable of the ring, in position order.
    pub fn field_equations(&self) -> Vec<Poly> {
        let q = self.field().order();
        (0..self.nvars())
            .map(|i| {
                let xq = Monomial::var_power(i, q).expect("field order within exponent range");
                let x = Monomial::var_power(i, 1).expect("index in range");
                let minus_one = self.field().neg(Elem::ONE);
                Poly::from_sorted_terms(self, vec![(xq, Elem::ONE), (x, minus_one)])
            })
            .collect()
    }

    /// Bit mask selecting the variables at the given positions.
    pub fn mask_of(&self, positions: impl IntoIterator<Item = usize>) -> u32 {
        positions.into_iter().fold(0, |m, i| m | (1 << i))
    }
}

impl PolyRing {
    /// One-line description of field, order and variable blocks, e.g.
    /// `field=2^2:1,1,1 order=lex blocks=S:s1,s2;X:x,y`.
    pub fn descriptor(&self) -> String {
        let f = self.field();
        let prim: Vec<String> = f.primitive_poly().iter().map(|c| c.to_string()).collect();
        let blocks: Vec<String> = self
            .vars()
            .blocks()
            .iter()
            .map(|b| format!("{}:{}", b.name, self.vars().names()[b.positions()].join(",")))
            .collect();
        format!(
            "field={}^{}:{} order={} blocks={}",
            f.characteristic(),
            f.degree(),
            prim.join(","),
            self.order().name(),
            blocks.join(";")
        )
    }

    /// Inverse of [`PolyRing::descriptor`].
    pub fn from_descriptor(text: &str) -> Result<PolyRing, MpolyError> {
        let bad = |msg: &str| MpolyError::Parse { position: 0, message: msg.to_string(), input: text.to_string() };
        let mut field = None;
        let mut order = None;
        let mut blocks = None;
        for token in text.split_whitespace() {
            let (key, value) = token.split_once('=').ok_or_else(|| bad("expected key=value"))?;
            match key {
                "field" => {
                    let (pk, prim) = value.split_once(':').ok_or_else(|| bad("field needs p^k:coefficients"))?;
                    let (p, k) = pk.split_once('^').ok_or_else(|| bad("field needs p^k"))?;
                    let p: u32 = p.parse().map_err(|_| bad("bad characteristic"))?;
                    let k: u32 = k.parse().map_err(|_| bad("bad extension degree"))?;
                    let coeffs: Vec<u32> = prim
                        .split(',')
                        .map(|c| c.parse().map_err(|_| bad("bad coefficient")))
                        .collect::<Result<_, _>>()?;
                    field = Some(Field::new(p, k, &coeffs).map_err(|e| bad(&e.to_string()))?);
                }
                "order" => {
                    order = Some(match value {
                        "lex" => TermOrder::Lex,
                        "block-lex" => TermOrder::BlockLex,
                        _ => return Err(bad("unknown term order")),
                    })
                }
                "blocks" => {
                    let mut list = Vec::new();
                    for b in value.split(';').filter(|b| !b.is_empty()) {
                        let (name, vars) = b.split_once(':').ok_or_else(|| bad("block needs name:vars"))?;
                        list.push((name.to_string(), vars.split(',').map(str::to_string).collect()));
                    }
                    blocks = Some(list);
                }
                _ => return Err(bad("unknown descriptor key")),
            }
        }
        let field = field.ok_or_else(|| bad("missing field"))?;
        let order = order.ok_or_else(|| bad("missing order"))?;
        let vars = VarSet::with_blocks(blocks.unwrap_or_default())?;
        Ok(PolyRing::new(field, vars, order))
    }
}
