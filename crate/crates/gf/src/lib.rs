//! Exact arithmetic in small finite fields `GF(p^k)`.
//!
//! A [`Field`] is built from a prime `p`, an extension degree `k` and a monic
//! primitive polynomial of degree `k` over `GF(p)`. Elements are plain
//! [`Elem`] values; every operation goes through the owning [`Field`], which
//! holds discrete-log tables so that multiplication and inversion are O(1).
//!
//! The residue class of the indeterminate is the generator `g`. Elements are
//! enumerated in the canonical order `0, 1, g, g^2, ..., g^(q-2)`, which fixes
//! all downstream tie-breaking (root listing, ghost-point scans).
//!
//! Element literals follow the grammar `elem := uint | 'g' | 'g^' uint`.
//! Integers reduce modulo `p` and embed in the prime subfield.

use std::fmt;
use std::sync::Arc;

/// Largest field order supported by the table-driven representation.
pub const MAX_ORDER: u32 = 1 << 16;

/// Errors raised while building fields or computing in them.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GfError {
    #[error("{0} is not a prime")]
    NotPrime(u32),
    #[error("polynomial {0:?} is reducible over GF(p)")]
    NotIrreducible(Vec<u32>),
    #[error("polynomial {0:?} is irreducible but its root does not generate the multiplicative group")]
    NotPrimitive(Vec<u32>),
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot parse element literal {input:?}: {reason}")]
    Parse { input: String, reason: String },
    #[error("invalid field definition: {0}")]
    InvalidDefinition(String),
}

/// A field element, encoded as the integer whose base-`p` digits are the
/// coefficients of its polynomial-basis representation (lowest degree first).
///
/// The encoding makes `0` the zero element and `1` the unit for every field.
/// Elements carry no reference to their field; mixing fields is a logic error.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Elem(u16);

impl Elem {
    pub const ZERO: Elem = Elem(0);
    pub const ONE: Elem = Elem(1);

    /// Raw encoding (base-`p` digits of the coefficient vector).
    pub fn code(self) -> u16 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Debug for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Elem({})", self.0)
    }
}

struct Tables {
    p: u32,
    k: u32,
    q: u32,
    primitive: Vec<u32>,
    /// `exp[i] = g^i` for `0 <= i < q-1`.
    exp: Vec<Elem>,
    /// `log[code] = i` with `g^i = elem`; unused for zero.
    log: Vec<u32>,
    /// Full addition table for `q <= 256`, indexed by `a * q + b`.
    add: Option<Vec<Elem>>,
    neg: Vec<Elem>,
}

/// A validated finite field `GF(p^k)`. Cheap to clone and safe to share
/// across threads.
#[derive(Clone)]
pub struct Field(Arc<Tables>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p && self.0.primitive == other.0.primitive)
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{}, primitive={:?})", self.0.p, self.0.k, self.0.primitive)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let prim: Vec<String> = self.0.primitive.iter().map(|c| c.to_string()).collect();
        write!(f, "GF({}^{}) primitive=[{}]", self.0.p, self.0.k, prim.join(","))
    }
}

/// Primality by trial division; the fields in scope are tiny.
pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Remainder of `a` modulo the monic polynomial `m` over `GF(p)`; both in
/// ascending coefficient order.
fn poly_rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let mut r: Vec<u32> = a.to_vec();
    let dm = m.len() - 1;
    while r.len() > dm {
        let lead = *r.last().unwrap_or(&0);
        let shift = r.len() - 1 - dm;
        if lead != 0 {
            for (i, &c) in m.iter().enumerate() {
                let idx = shift + i;
                r[idx] = (r[idx] + p - (lead * c) % p) % p;
            }
        }
        r.pop();
    }
    r
}

fn is_irreducible(poly: &[u32], p: u32) -> bool {
    let k = poly.len() - 1;
    // Try every monic divisor of degree 1..=k/2.
    for d in 1..=k / 2 {
        let count = (p as u64).pow(d as u32);
        for idx in 0..count {
            let mut cand = Vec::with_capacity(d + 1);
            let mut v = idx;
            for _ in 0..d {
                cand.push((v % p as u64) as u32);
                v /= p as u64;
            }
            cand.push(1);
            if poly_rem(poly, &cand, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

/// Smallest primitive root modulo the prime `p`.
fn smallest_primitive_root(p: u32) -> u32 {
    if p == 2 {
        return 1;
    }
    (2..p)
        .find(|&g| {
            let mut x = 1u64;
            for i in 1..p {
                x = x * g as u64 % p as u64;
                if x == 1 {
                    return i == p - 1;
                }
            }
            false
        })
        .unwrap_or(1)
}

impl Field {
    /// Builds `GF(p^k)` from a monic primitive polynomial given in ascending
    /// coefficient order (`primitive.len() == k + 1`).
    pub fn new(p: u32, k: u32, primitive: &[u32]) -> Result<Field, GfError> {
        if !is_prime(p) {
            return Err(GfError::NotPrime(p));
        }
        if k == 0 {
            return Err(GfError::InvalidDefinition("extension degree must be at least 1".into()));
        }
        let q = (p as u64)
            .checked_pow(k)
            .filter(|&q| q <= MAX_ORDER as u64)
            .ok_or_else(|| GfError::InvalidDefinition(format!("field order {p}^{k} is too large")))?
            as u32;
        if primitive.len() != k as usize + 1 {
            return Err(GfError::InvalidDefinition(format!(
                "primitive polynomial needs {} coefficients, got {}",
                k + 1,
                primitive.len()
            )));
        }
        if primitive.iter().any(|&c| c >= p) {
            return Err(GfError::InvalidDefinition(format!(
                "coefficients of {primitive:?} must be reduced modulo {p}"
            )));
        }
        if primitive[k as usize] != 1 {
            return Err(GfError::InvalidDefinition(format!("polynomial {primitive:?} is not monic")));
        }
        if !is_irreducible(primitive, p) {
            return Err(GfError::NotIrreducible(primitive.to_vec()));
        }

        // Powers of the indeterminate modulo the primitive polynomial.
        let encode = |v: &[u32]| -> u32 { v.iter().rev().fold(0, |acc, &c| acc * p + c) };
        let mut exp = Vec::with_capacity(q as usize - 1);
        let mut log = vec![u32::MAX; q as usize];
        let mut cur: Vec<u32> = vec![0; k as usize];
        cur[0] = 1;
        for i in 0..q - 1 {
            let code = encode(&cur);
            if i > 0 && code == 1 {
                return Err(GfError::NotPrimitive(primitive.to_vec()));
            }
            exp.push(Elem(code as u16));
            log[code as usize] = i;
            // cur <- cur * x mod primitive
            let mut next = vec![0u32; k as usize + 1];
            next[1..].copy_from_slice(&cur);
            cur = poly_rem(&next, primitive, p);
            cur.resize(k as usize, 0);
        }
        if encode(&cur) != 1 {
            return Err(GfError::NotPrimitive(primitive.to_vec()));
        }

        let add_codes = |a: u32, b: u32| -> u32 {
            let (mut a, mut b) = (a, b);
            let mut out = 0;
            let mut place = 1;
            for _ in 0..k {
                out += ((a % p + b % p) % p) * place;
                a /= p;
                b /= p;
                place *= p;
            }
            out
        };
        let neg_code = |a: u32| -> u32 {
            let mut a = a;
            let mut out = 0;
            let mut place = 1;
            for _ in 0..k {
                out += ((p - a % p) % p) * place;
                a /= p;
                place *= p;
            }
            out
        };
        let add = (q <= 256).then(|| {
            let mut t = Vec::with_capacity((q * q) as usize);
            for a in 0..q {
                for b in 0..q {
                    t.push(Elem(add_codes(a, b) as u16));
                }
            }
            t
        });
        let neg = (0..q).map(|a| Elem(neg_code(a) as u16)).collect();
        Ok(Field(Arc::new(Tables { p, k, q, primitive: primitive.to_vec(), exp, log, add, neg })))
    }

    /// The prime field `GF(p)` whose generator is the smallest primitive root.
    pub fn prime(p: u32) -> Result<Field, GfError> {
        if !is_prime(p) {
            return Err(GfError::NotPrime(p));
        }
        let g = smallest_primitive_root(p);
        Field::new(p, 1, &[(p - g) % p, 1])
    }

    /// The field of order `q` with the pinned primitive polynomials
    /// `GF(4): x^2+x+1`, `GF(8): x^3+x+1`, `GF(9): x^2+2x+2`; other orders use
    /// the first primitive polynomial in ascending coefficient scan order.
    pub fn of_order(q: u32) -> Result<Field, GfError> {
        let (p, k) = prime_power(q)
            .ok_or_else(|| GfError::InvalidDefinition(format!("{q} is not a prime power")))?;
        match q {
            4 => Field::new(2, 2, &[1, 1, 1]),
            8 => Field::new(2, 3, &[1, 1, 0, 1]),
            9 => Field::new(3, 2, &[2, 2, 1]),
            _ if k == 1 => Field::prime(p),
            _ => {
                let count = (p as u64).pow(k);
                for idx in 0..count {
                    let mut poly = Vec::with_capacity(k as usize + 1);
                    let mut v = idx;
                    for _ in 0..k {
                        poly.push((v % p as u64) as u32);
                        v /= p as u64;
                    }
                    poly.push(1);
                    if let Ok(f) = Field::new(p, k, &poly) {
                        return Ok(f);
                    }
                }
                Err(GfError::InvalidDefinition(format!("no primitive polynomial for q={q}")))
            }
        }
    }

    pub fn characteristic(&self) -> u32 {
        self.0.p
    }

    pub fn degree(&self) -> u32 {
        self.0.k
    }

    pub fn order(&self) -> u32 {
        self.0.q
    }

    /// The primitive polynomial, ascending coefficients, monic.
    pub fn primitive_poly(&self) -> &[u32] {
        &self.0.primitive
    }

    pub fn zero(&self) -> Elem {
        Elem::ZERO
    }

    pub fn one(&self) -> Elem {
        Elem::ONE
    }

    /// The generator `g`, the residue class of the indeterminate.
    pub fn generator(&self) -> Elem {
        self.0.exp[1 % self.0.exp.len()]
    }

    /// Embeds an integer into the prime subfield (reduced modulo `p`).
    pub fn from_int(&self, n: i64) -> Elem {
        Elem(n.rem_euclid(self.0.p as i64) as u16)
    }

    /// Coefficient vector (length `k`, ascending powers of `g`'s minimal polynomial root).
    pub fn coeffs(&self, a: Elem) -> Vec<u32> {
        let mut v = a.0 as u32;
        (0..self.0.k)
            .map(|_| {
                let c = v % self.0.p;
                v /= self.0.p;
                c
            })
            .collect()
    }

    /// Element with the given coefficient vector; missing entries are zero.
    pub fn from_coeffs(&self, coeffs: &[u32]) -> Elem {
        let p = self.0.p;
        let code = coeffs.iter().take(self.0.k as usize).rev().fold(0u32, |acc, &c| acc * p + c % p);
        Elem(code as u16)
    }

    /// Returns `Some(n)` when `a` lies in the prime subfield, `a = n mod p`.
    pub fn prime_value(&self, a: Elem) -> Option<u32> {
        ((a.0 as u32) < self.0.p).then_some(a.0 as u32)
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        let t = &self.0;
        match &t.add {
            Some(table) => table[a.0 as usize * t.q as usize + b.0 as usize],
            None => {
                let (mut x, mut y) = (a.0 as u32, b.0 as u32);
                let mut out = 0;
                let mut place = 1;
                for _ in 0..t.k {
                    out += ((x % t.p + y % t.p) % t.p) * place;
                    x /= t.p;
                    y /= t.p;
                    place *= t.p;
                }
                Elem(out as u16)
            }
        }
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        self.0.neg[a.0 as usize]
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if a.0 == 0 || b.0 == 0 {
            return Elem::ZERO;
        }
        let t = &self.0;
        let n = t.q - 1;
        let s = t.log[a.0 as usize] + t.log[b.0 as usize];
        t.exp[(if s >= n { s - n } else { s }) as usize]
    }

    #[inline]
    pub fn inv(&self, a: Elem) -> Result<Elem, GfError> {
        if a.0 == 0 {
            return Err(GfError::DivisionByZero);
        }
        let t = &self.0;
        let l = t.log[a.0 as usize];
        Ok(t.exp[((t.q - 1 - l) % (t.q - 1)) as usize])
    }

    pub fn div(&self, a: Elem, b: Elem) -> Result<Elem, GfError> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// `a^e` with the convention `0^0 = 1`.
    pub fn pow(&self, a: Elem, e: u64) -> Elem {
        if e == 0 {
            return Elem::ONE;
        }
        if a.0 == 0 {
            return Elem::ZERO;
        }
        let t = &self.0;
        let n = (t.q - 1) as u64;
        let l = t.log[a.0 as usize] as u64;
        t.exp[((l * (e % n)) % n) as usize]
    }

    /// Discrete logarithm to base `g`; `None` for zero.
    pub fn log(&self, a: Elem) -> Option<u32> {
        (a.0 != 0).then(|| self.0.log[a.0 as usize])
    }

    /// `g^i`.
    pub fn exp(&self, i: u64) -> Elem {
        self.0.exp[(i % (self.0.q as u64 - 1)) as usize]
    }

    /// All elements in canonical order `0, 1, g, g^2, ..., g^(q-2)`.
    pub fn elements(&self) -> Vec<Elem> {
        std::iter::once(Elem::ZERO).chain(self.0.exp.iter().copied()).collect()
    }

    /// Position of `a` in the canonical order of [`Field::elements`].
    pub fn canonical_index(&self, a: Elem) -> usize {
        match self.log(a) {
            None => 0,
            Some(l) => l as usize + 1,
        }
    }

    /// Multiplicative order of a nonzero element.
    pub fn multiplicative_order(&self, a: Elem) -> Option<u32> {
        let l = self.log(a)?;
        let n = self.0.q - 1;
        Some(n / gcd(n, l))
    }

    /// Parses an element literal: `uint`, `g`, or `g^uint`.
    pub fn parse_elem(&self, text: &str) -> Result<Elem, GfError> {
        let s = text.trim();
        let err = |reason: &str| GfError::Parse { input: text.to_string(), reason: reason.to_string() };
        if s.is_empty() {
            return Err(err("empty literal"));
        }
        if let Some(rest) = s.strip_prefix('g') {
            let rest = rest.trim_start();
            if rest.is_empty() {
                return Ok(self.generator());
            }
            let digits = rest.strip_prefix('^').ok_or_else(|| err("expected '^' after 'g'"))?.trim();
            let e: u64 = parse_uint(digits).ok_or_else(|| err("exponent must be an unsigned integer"))?;
            return Ok(self.pow(self.generator(), e));
        }
        let n: u64 = parse_uint(s).ok_or_else(|| err("expected an unsigned integer or a power of g"))?;
        Ok(Elem((n % self.0.p as u64) as u16))
    }

    /// Canonical literal: prime-subfield elements print as integers, all
    /// others as `g` or `g^i`. `parse_elem(format_elem(a)) == a`.
    pub fn format_elem(&self, a: Elem) -> String {
        if let Some(n) = self.prime_value(a) {
            return n.to_string();
        }
        match self.log(a) {
            Some(1) => "g".to_string(),
            Some(l) => format!("g^{l}"),
            None => "0".to_string(),
        }
    }
}

fn parse_uint(s: &str) -> Option<u64> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Decomposes `q = p^k` for a prime `p`.
pub fn prime_power(q: u32) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let mut k = 0;
    let mut r = q;
    while r.is_multiple_of(p) {
        r /= p;
        k += 1;
    }
    (r == 1).then_some((p, k))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gf4_generator_squares_to_generator_plus_one() {
        let f = Field::new(2, 2, &[1, 1, 1]).unwrap();
        let g = f.generator();
        assert_eq!(f.mul(g, g), f.add(g, f.one()));
        assert_eq!(f.pow(g, 3), f.one());
    }

    #[test]
    fn prime_power_decomposition() {
        assert_eq!(prime_power(9), Some((3, 2)));
        assert_eq!(prime_power(7), Some((7, 1)));
        assert_eq!(prime_power(12), None);
    }
}
