//! Sparse polynomials.

use std::collections::HashMap;
use std::fmt;

use gf::{Elem, Field};

use crate::monomial::Monomial;
use crate::ring::PolyRing;
use crate::MpolyError;

/// A term: monomial and nonzero coefficient.
pub type Term = (Monomial, Elem);

/// A polynomial over a [`PolyRing`]. Terms are stored with nonzero
/// coefficients in strictly descending term order; the zero polynomial has no
/// terms.
#[derive(Clone)]
pub struct Poly {
    ring: PolyRing,
    terms: Vec<Term>,
}

impl PartialEq for Poly {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.terms == other.terms
    }
}

impl Eq for Poly {}

impl std::hash::Hash for Poly {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.terms.hash(state);
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

/// Binomial coefficient `C(n, k) mod p` by Lucas' theorem.
pub fn binomial_mod_p(n: u64, k: u64, p: u64) -> u64 {
    let mut n = n;
    let mut k = k;
    let mut result = 1u64;
    while k > 0 || n > 0 {
        let (ni, ki) = (n % p, k % p);
        if ki > ni {
            return 0;
        }
        // small binomial C(ni, ki) mod p via multiplicative formula with inverses
        let mut num = 1u64;
        let mut den = 1u64;
        for j in 0..ki {
            num = num * ((ni - j) % p) % p;
            den = den * ((j + 1) % p) % p;
        }
        result = result * num % p * mod_inverse(den, p) % p;
        n /= p;
        k /= p;
    }
    result
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // p is prime and a is nonzero modulo p
    let mut base = a % p;
    let mut e = p - 2;
    let mut acc = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    acc
}

/// Sorts terms descending and merges equal monomials, dropping zeros.
fn normalize(field: &Field, mut terms: Vec<Term>) -> Vec<Term> {
    terms.sort_unstable_by_key(|t| std::cmp::Reverse(t.0));
    let mut out: Vec<Term> = Vec::with_capacity(terms.len());
    for (m, c) in terms {
        match out.last_mut() {
            Some(last) if last.0 == m => last.1 = field.add(last.1, c),
            _ => out.push((m, c)),
        }
    }
    out.retain(|t| !t.1.is_zero());
    out
}

impl Poly {
    pub fn zero(ring: &PolyRing) -> Poly {
        Poly { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn constant(ring: &PolyRing, c: Elem) -> Poly {
        let terms = if c.is_zero() { Vec::new() } else { vec![(Monomial::ONE, c)] };
        Poly { ring: ring.clone(), terms }
    }

    /// Builds a polynomial from terms already sorted descending with distinct
    /// monomials; zero coefficients are dropped.
    pub fn from_sorted_terms(ring: &PolyRing, mut terms: Vec<Term>) -> Poly {
        debug_assert!(terms.windows(2).all(|w| w[0].0 > w[1].0), "terms must be strictly descending");
        terms.retain(|t| !t.1.is_zero());
        Poly { ring: ring.clone(), terms }
    }

    /// Builds a polynomial from arbitrary terms, merging duplicates.
    pub fn from_terms(ring: &PolyRing, terms: Vec<Term>) -> Poly {
        let terms = normalize(ring.field(), terms);
        Poly { ring: ring.clone(), terms }
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn field(&self) -> &Field {
        self.ring.field()
    }

    /// Terms in descending order.
    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<Term> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Same as [`Poly::is_zero`]: the zero polynomial has no terms.
    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|t| t.0.is_one())
    }

    /// Leading monomial and coefficient, or `None` for zero.
    pub fn leading_term(&self) -> Option<Term> {
        self.terms.first().copied()
    }

    /// Leading monomial and coefficient.
    pub fn try_leading_term(&self) -> Result<Term, MpolyError> {
        self.leading_term().ok_or(MpolyError::ZeroPolynomial)
    }

    /// Leading monomial.
    ///
    /// # Panics
    /// On the zero polynomial.
    pub fn lm(&self) -> Monomial {
        self.terms.first().expect("leading monomial of the zero polynomial").0
    }

    /// Leading coefficient, zero for the zero polynomial.
    pub fn lc(&self) -> Elem {
        self.terms.first().map_or(Elem::ZERO, |t| t.1)
    }

    fn same_ring(&self, other: &Poly) -> Result<(), MpolyError> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(MpolyError::RingMismatch)
        }
    }

    /// Sum, checking that both operands share a ring.
    pub fn try_add(&self, other: &Poly) -> Result<Poly, MpolyError> {
        self.same_ring(other)?;
        Ok(self.add_scaled(other, Elem::ONE, Monomial::ONE))
    }

    /// Difference, checking that both operands share a ring.
    pub fn try_sub(&self, other: &Poly) -> Result<Poly, MpolyError> {
        self.same_ring(other)?;
        Ok(self.add_scaled(other, self.field().neg(Elem::ONE), Monomial::ONE))
    }

    /// Product, checking that both operands share a ring.
    pub fn try_mul(&self, other: &Poly) -> Result<Poly, MpolyError> {
        self.same_ring(other)?;
        self.mul_poly(other)
    }

    /// `self + c * m * other` by a single merge pass.
    pub fn add_scaled(&self, other: &Poly, c: Elem, m: Monomial) -> Poly {
        let f = self.field();
        if c.is_zero() || other.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = other.terms.iter().map(|&(mm, cc)| (mm * m, f.mul(cc, c))).peekable();
        loop {
            match (a.peek(), b.peek()) {
                (Some(&&(ma, ca)), Some(&(mb, cb))) => {
                    if ma > mb {
                        out.push((ma, ca));
                        a.next();
                    } else if mb > ma {
                        out.push((mb, cb));
                        b.next();
                    } else {
                        let s = f.add(ca, cb);
                        if !s.is_zero() {
                            out.push((ma, s));
                        }
                        a.next();
                        b.next();
                    }
                }
                (Some(&&t), None) => {
                    out.push(t);
                    a.next();
                }
                (None, Some(&t)) => {
                    out.push(t);
                    b.next();
                }
                (None, None) => break,
            }
        }
        Poly { ring: self.ring.clone(), terms: out }
    }

    pub fn neg(&self) -> Poly {
        let f = self.field();
        Poly { ring: self.ring.clone(), terms: self.terms.iter().map(|&(m, c)| (m, f.neg(c))).collect() }
    }

    /// `c * self`.
    pub fn scale(&self, c: Elem) -> Poly {
        if c.is_zero() {
            return Poly::zero(&self.ring);
        }
        let f = self.field();
        Poly { ring: self.ring.clone(), terms: self.terms.iter().map(|&(m, a)| (m, f.mul(a, c))).collect() }
    }

    /// `c * m * self`; order is preserved because the term order is multiplicative.
    pub fn mul_term(&self, m: Monomial, c: Elem) -> Poly {
        if c.is_zero() {
            return Poly::zero(&self.ring);
        }
        let f = self.field();
        Poly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|&(mm, a)| (mm * m, f.mul(a, c))).collect(),
        }
    }

    fn mul_poly(&self, other: &Poly) -> Result<Poly, MpolyError> {
        if self.is_zero() || other.is_zero() {
            return Ok(Poly::zero(&self.ring));
        }
        let f = self.field();
        let mut acc: HashMap<Monomial, Elem> = HashMap::with_capacity(self.len() * other.len());
        for &(ma, ca) in &self.terms {
            for &(mb, cb) in &other.terms {
                let m = ma.checked_mul(mb).ok_or(MpolyError::ExponentOverflow)?;
                let e = acc.entry(m).or_insert(Elem::ZERO);
                *e = f.add(*e, f.mul(ca, cb));
            }
        }
        Ok(Poly::from_terms(&self.ring, acc.into_iter().collect()))
    }

    /// `self^e` by repeated squaring; fails if an exponent leaves the
    /// representable range.
    pub fn try_pow(&self, e: u32) -> Result<Poly, MpolyError> {
        let mut result = self.ring.one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul_poly(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_poly(&base)?;
            }
        }
        Ok(result)
    }

    /// `self^e`.
    ///
    /// # Panics
    /// If an exponent would exceed [`crate::MAX_EXP`].
    pub fn pow(&self, e: u32) -> Poly {
        self.try_pow(e).expect("monomial exponent overflow")
    }

    /// Divides by the leading coefficient; zero stays zero.
    pub fn monic(&self) -> Poly {
        match self.terms.first() {
            None => self.clone(),
            Some(&(_, c)) if c == Elem::ONE => self.clone(),
            Some(&(_, c)) => self.scale(self.field().inv(c).expect("leading coefficient is nonzero")),
        }
    }

    /// Union of the supports of all terms as a variable bit mask.
    pub fn support(&self) -> u32 {
        self.terms.iter().fold(0, |m, t| m | t.0.support())
    }

    /// True when every variable occurring in `self` is in `mask`.
    pub fn supported_on(&self, mask: u32) -> bool {
        self.support() & !mask == 0
    }

    /// Highest power of variable `var` occurring in `self` (0 for zero).
    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.iter().map(|t| t.0.exponent(var)).max().unwrap_or(0)
    }

    /// Coefficient of `var^d`, as a polynomial in the remaining variables.
    pub fn coefficient_of_power(&self, var: usize, d: u32) -> Poly {
        let terms: Vec<Term> = self
            .terms
            .iter()
            .filter(|t| t.0.exponent(var) == d)
            .map(|&(m, c)| (m.with_exponent(var, 0).expect("valid position"), c))
            .collect();
        // clearing one exponent from terms sharing the same power keeps them sorted
        Poly { ring: self.ring.clone(), terms }
    }

    /// The leading polynomial with respect to `var`: the coefficient of the
    /// highest power of `var`.
    pub fn leading_poly(&self, var: usize) -> Result<Poly, MpolyError> {
        if self.is_zero() {
            return Err(MpolyError::ZeroPolynomial);
        }
        Ok(self.coefficient_of_power(var, self.degree_in(var)))
    }

    /// Evaluates at a full assignment indexed by variable position.
    pub fn evaluate(&self, point: &[Elem]) -> Elem {
        assert_eq!(point.len(), self.ring.nvars(), "assignment length must match the ring");
        let f = self.field();
        let mut total = Elem::ZERO;
        for &(m, c) in &self.terms {
            let mut v = c;
            for (i, &x) in point.iter().enumerate() {
                let e = m.exponent(i);
                if e > 0 {
                    v = f.mul(v, f.pow(x, e as u64));
                    if v.is_zero() {
                        break;
                    }
                }
            }
            total = f.add(total, v);
        }
        total
    }

    /// Evaluates at an assignment given by variable names, which must cover
    /// every variable in the ring.
    pub fn evaluate_named(&self, assignment: &[(&str, Elem)]) -> Result<Elem, MpolyError> {
        let mut point = vec![None; self.ring.nvars()];
        for &(name, v) in assignment {
            point[self.ring.var_index(name)?] = Some(v);
        }
        let point: Vec<Elem> = point
            .into_iter()
            .enumerate()
            .map(|(i, v)| v.ok_or_else(|| MpolyError::UnassignedVariable(self.ring.vars().name(i).to_string())))
            .collect::<Result<_, _>>()?;
        Ok(self.evaluate(&point))
    }

    /// Substitutes values for some variables (by position); the result lives
    /// in the same ring with those variables absent.
    pub fn specialize(&self, assignment: &[(usize, Elem)]) -> Poly {
        let f = self.field();
        let mut terms = Vec::with_capacity(self.terms.len());
        for &(m, c) in &self.terms {
            let mut v = c;
            let mut mm = m;
            for &(i, x) in assignment {
                let e = m.exponent(i);
                if e > 0 {
                    v = f.mul(v, f.pow(x, e as u64));
                    mm = mm.with_exponent(i, 0).expect("valid position");
                }
            }
            if !v.is_zero() {
                terms.push((mm, v));
            }
        }
        Poly::from_terms(&self.ring, terms)
    }

    /// Substitutes values by variable name.
    pub fn specialize_named(&self, assignment: &[(&str, Elem)]) -> Result<Poly, MpolyError> {
        let idx: Vec<(usize, Elem)> = assignment
            .iter()
            .map(|&(n, v)| Ok((self.ring.var_index(n)?, v)))
            .collect::<Result<_, MpolyError>>()?;
        Ok(self.specialize(&idx))
    }

    /// The `n`-th Hasse derivative with respect to `var`:
    /// `sum C(i, n) a_i var^(i-n)` with binomials taken modulo `p`.
    pub fn hasse_derivative(&self, var: usize, n: u32) -> Poly {
        if n == 0 {
            return self.clone();
        }
        let f = self.field();
        let p = f.characteristic() as u64;
        let terms: Vec<Term> = self
            .terms
            .iter()
            .filter_map(|&(m, c)| {
                let e = m.exponent(var);
                if e < n {
                    return None;
                }
                let b = binomial_mod_p(e as u64, n as u64, p);
                if b == 0 {
                    return None;
                }
                let coeff = f.mul(c, f.from_int(b as i64));
                Some((m.with_exponent(var, e - n).expect("smaller exponent"), coeff))
            })
            .collect();
        // subtracting the same exponent from every surviving term keeps the order
        Poly { ring: self.ring.clone(), terms }
    }

    /// Value of the `n`-th Hasse derivative in `var` at a full point, without
    /// building the derivative polynomial.
    pub fn hasse_value(&self, var: usize, n: u32, point: &[Elem]) -> Elem {
        let f = self.field();
        let p = f.characteristic() as u64;
        let mut total = Elem::ZERO;
        for &(m, c) in &self.terms {
            let e = m.exponent(var);
            if e < n {
                continue;
            }
            let b = binomial_mod_p(e as u64, n as u64, p);
            if b == 0 {
                continue;
            }
            let mut v = f.mul(c, f.from_int(b as i64));
            for (i, &x) in point.iter().enumerate() {
                let ei = if i == var { e - n } else { m.exponent(i) };
                if ei > 0 {
                    v = f.mul(v, f.pow(x, ei as u64));
                }
            }
            total = f.add(total, v);
        }
        total
    }

    /// Re-expresses the polynomial in another ring over the same field.
    /// `var_map[i]` is the target position of source variable `i`; a
    /// variable mapped to `None` must not occur.
    pub fn map_into(&self, target: &PolyRing, var_map: &[Option<usize>]) -> Result<Poly, MpolyError> {
        if self.field() != target.field() {
            return Err(MpolyError::RingMismatch);
        }
        let n = self.ring.nvars();
        let mut terms = Vec::with_capacity(self.terms.len());
        for &(m, c) in &self.terms {
            let mut exps = vec![0u32; target.nvars()];
            for (i, slot) in var_map.iter().enumerate().take(n) {
                let e = m.exponent(i);
                if e == 0 {
                    continue;
                }
                let j = slot.ok_or_else(|| MpolyError::UnknownVariable(self.ring.vars().name(i).to_string()))?;
                exps[j] += e;
            }
            terms.push((Monomial::from_exponents(&exps).ok_or(MpolyError::ExponentOverflow)?, c));
        }
        Ok(Poly::from_terms(target, terms))
    }

    /// Re-expresses the polynomial in a ring that names the same variables,
    /// matching by name.
    pub fn map_by_name(&self, target: &PolyRing) -> Result<Poly, MpolyError> {
        let map: Vec<Option<usize>> =
            self.ring.vars().names().iter().map(|n| target.vars().index_of(n)).collect();
        self.map_into(target, &map)
    }

    /// Coefficients in ascending powers of `var` when `self` involves no
    /// other variable.
    pub fn univariate_coeffs(&self, var: usize) -> Result<Vec<Elem>, MpolyError> {
        if self.support() & !(1 << var) != 0 {
            return Err(MpolyError::NotUnivariate);
        }
        let mut out = vec![Elem::ZERO; self.degree_in(var) as usize + 1];
        for &(m, c) in &self.terms {
            out[m.exponent(var) as usize] = c;
        }
        Ok(out)
    }

    /// Builds `sum coeffs[i] * var^i`.
    pub fn from_univariate(ring: &PolyRing, var: usize, coeffs: &[Elem]) -> Poly {
        let terms: Vec<Term> = coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, &c)| (Monomial::var_power(var, i as u32).expect("degree within range"), c))
            .collect();
        Poly::from_sorted_terms(ring, terms)
    }

    /// Canonical text form (see [`crate::format_poly`]).
    pub fn to_text(&self) -> String {
        crate::parse::format_poly(self)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::parse::format_poly(self))
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl std::ops::$tr<&Poly> for &Poly {
            type Output = Poly;
            /// # Panics
            /// If the operands live in different rings.
            fn $method(self, rhs: &Poly) -> Poly {
                $body(self, rhs).expect("polynomial operands must share a ring")
            }
        }
        impl std::ops::$tr<Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                $body(&self, &rhs).expect("polynomial operands must share a ring")
            }
        }
    };
}

forward_binop!(Add, add, Poly::try_add);
forward_binop!(Sub, sub, Poly::try_sub);
forward_binop!(Mul, mul, Poly::try_mul);

impl std::ops::Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::neg(self)
    }
}
