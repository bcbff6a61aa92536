//! Text form of polynomials.
//!
//! Grammar (whitespace insignificant, unary minus allowed at the head of a
//! polynomial):
//!
//! ```text
//! poly   := ['-'] term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := base ('^' uint)?
//! base   := var | elem | '(' poly ')'
//! var    := letter (letter | digit | '_')*
//! elem   := uint | 'g'
//! ```
//!
//! The identifier `g` always denotes the field generator.

use gf::Elem;

use crate::poly::Poly;
use crate::ring::PolyRing;
use crate::MpolyError;

struct Parser<'a> {
    text: &'a str,
    bytes: &'a [u8],
    pos: usize,
    ring: &'a PolyRing,
}

impl<'a> Parser<'a> {
    fn error(&self, message: impl Into<String>) -> MpolyError {
        MpolyError::Parse { position: self.pos, message: message.into(), input: self.text.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn uint(&mut self) -> Result<u64, MpolyError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an unsigned integer"));
        }
        self.text[start..self.pos].parse().map_err(|_| {
            self.pos = start;
            self.error("integer literal too large")
        })
    }

    fn poly(&mut self) -> Result<Poly, MpolyError> {
        let field = self.ring.field().clone();
        let negate_first = self.eat(b'-');
        let mut acc = self.term()?;
        if negate_first {
            acc = acc.neg();
        }
        loop {
            if self.eat(b'+') {
                let t = self.term()?;
                acc = acc.add_scaled(&t, Elem::ONE, crate::Monomial::ONE);
            } else if self.eat(b'-') {
                let t = self.term()?;
                acc = acc.add_scaled(&t, field.neg(Elem::ONE), crate::Monomial::ONE);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Poly, MpolyError> {
        let mut acc = self.factor()?;
        while self.eat(b'*') {
            let start = self.pos;
            let f = self.factor()?;
            acc = acc.try_mul(&f).map_err(|e| self.relocate(e, start))?;
        }
        Ok(acc)
    }

    fn relocate(&self, e: MpolyError, at: usize) -> MpolyError {
        match e {
            MpolyError::ExponentOverflow => MpolyError::Parse {
                position: at,
                message: "exponent exceeds the supported maximum".into(),
                input: self.text.to_string(),
            },
            other => other,
        }
    }

    fn factor(&mut self) -> Result<Poly, MpolyError> {
        let start = self.pos;
        let base = self.base()?;
        if self.eat(b'^') {
            let e = self.uint()?;
            let e = u32::try_from(e).map_err(|_| self.error("exponent too large"))?;
            return base.try_pow(e).map_err(|err| self.relocate(err, start));
        }
        Ok(base)
    }

    fn base(&mut self) -> Result<Poly, MpolyError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.poly()?;
                if !self.eat(b')') {
                    return Err(self.error("expected ')'"));
                }
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.uint()?;
                let p = self.ring.field().characteristic() as u64;
                Ok(self.ring.constant(self.ring.field().from_int((n % p) as i64)))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.bytes.len()
                    && (self.bytes[self.pos].is_ascii_alphanumeric() || self.bytes[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = &self.text[start..self.pos];
                if name == "g" {
                    return Ok(self.ring.constant(self.ring.field().generator()));
                }
                match self.ring.vars().index_of(name) {
                    Some(i) => Ok(self.ring.var(i)),
                    None => {
                        self.pos = start;
                        Err(self.error(format!("unknown variable '{name}'")))
                    }
                }
            }
            Some(_) => Err(self.error("unexpected character")),
            None => Err(self.error("unexpected end of input")),
        }
    }
}

/// Parses a polynomial over `ring`.
pub fn parse_poly(text: &str, ring: &PolyRing) -> Result<Poly, MpolyError> {
    let mut parser = Parser { text, bytes: text.as_bytes(), pos: 0, ring };
    let p = parser.poly()?;
    if parser.peek().is_some() {
        return Err(parser.error("unexpected trailing input"));
    }
    Ok(p)
}

/// Canonical text form: terms in descending order joined by `+`/`-`,
/// coefficients as element literals, factors joined by `*`. Prime-subfield
/// coefficients above `p/2` are written as negatives in odd characteristic.
pub fn format_poly(p: &Poly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let field = p.field();
    let ring = p.ring();
    let half = field.characteristic() / 2;
    let mut out = String::new();
    for (idx, &(m, c)) in p.terms().iter().enumerate() {
        let (negative, magnitude) = match field.prime_value(c) {
            Some(v) if field.characteristic() > 2 && v > half => (true, field.neg(c)),
            _ => (false, c),
        };
        if negative {
            out.push('-');
        } else if idx > 0 {
            out.push('+');
        }
        let mut factors: Vec<String> = Vec::new();
        if magnitude != Elem::ONE || m.is_one() {
            factors.push(field.format_elem(magnitude));
        }
        for i in (0..ring.nvars()).rev() {
            let e = m.exponent(i);
            match e {
                0 => {}
                1 => factors.push(ring.vars().name(i).to_string()),
                _ => factors.push(format!("{}^{}", ring.vars().name(i), e)),
            }
        }
        out.push_str(&factors.join("*"));
    }
    out
}
