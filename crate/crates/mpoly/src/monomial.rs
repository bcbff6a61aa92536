//! Packed exponent vectors.
//!
//! A [`Monomial`] stores up to [`MAX_VARS`] exponents, one byte each, in a
//! `u128`. Byte `i` holds the exponent of ring variable `i`, and later
//! variables are more significant. With this layout the lexicographic order
//! (later variables bigger) is plain integer comparison, multiplication is
//! integer addition, and divisibility is a borrow-free byte-wise subtraction.

use std::fmt;

/// Maximum number of variables in a polynomial ring.
pub const MAX_VARS: usize = 16;
/// Maximum exponent of a single variable.
pub const MAX_EXP: u32 = 127;

const HIGH_BITS: u128 = 0x8080_8080_8080_8080_8080_8080_8080_8080;
const LOW_BITS: u128 = 0x0101_0101_0101_0101_0101_0101_0101_0101;

/// A power product of ring variables, totally ordered lexicographically with
/// later variables bigger.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial(u128);

impl Monomial {
    /// The empty product `1`.
    pub const ONE: Monomial = Monomial(0);

    /// Builds a monomial from an exponent slice (index = variable position).
    /// Returns `None` if a position or exponent is out of range.
    pub fn from_exponents(exps: &[u32]) -> Option<Monomial> {
        if exps.len() > MAX_VARS {
            return None;
        }
        let mut bits = 0u128;
        for (i, &e) in exps.iter().enumerate() {
            if e > MAX_EXP {
                return None;
            }
            bits |= (e as u128) << (8 * i);
        }
        Some(Monomial(bits))
    }

    /// `var^exp`.
    pub fn var_power(var: usize, exp: u32) -> Option<Monomial> {
        (var < MAX_VARS && exp <= MAX_EXP).then(|| Monomial((exp as u128) << (8 * var)))
    }

    /// Raw packed representation.
    pub fn bits(self) -> u128 {
        self.0
    }

    #[inline]
    pub fn exponent(self, var: usize) -> u32 {
        ((self.0 >> (8 * var)) & 0xff) as u32
    }

    /// Exponents of the first `nvars` variables.
    pub fn exponents(self, nvars: usize) -> Vec<u32> {
        (0..nvars).map(|i| self.exponent(i)).collect()
    }

    pub fn is_one(self) -> bool {
        self.0 == 0
    }

    pub fn total_degree(self) -> u32 {
        (0..MAX_VARS).map(|i| self.exponent(i)).sum()
    }

    /// Product, or `None` if some exponent would exceed [`MAX_EXP`].
    #[inline]
    pub fn checked_mul(self, other: Monomial) -> Option<Monomial> {
        let s = self.0 + other.0;
        (s & HIGH_BITS == 0).then_some(Monomial(s))
    }


    /// True when `self` divides `other`.
    #[inline]
    pub fn divides(self, other: Monomial) -> bool {
        ((other.0 | HIGH_BITS) - self.0) & HIGH_BITS == HIGH_BITS
    }

    /// `other / self` when `self` divides `other`.
    #[inline]
    pub fn divide_into(self, other: Monomial) -> Option<Monomial> {
        self.divides(other).then_some(Monomial(other.0 - self.0))
    }

    /// Byte mask with `0xff` in every position where `self >= other`.
    #[inline]
    fn ge_mask(self, other: Monomial) -> u128 {
        let ge = ((self.0 | HIGH_BITS) - other.0) & HIGH_BITS;
        (ge >> 7) * 0xff
    }

    /// Least common multiple.
    #[inline]
    pub fn lcm(self, other: Monomial) -> Monomial {
        let m = self.ge_mask(other);
        Monomial((self.0 & m) | (other.0 & !m))
    }

    /// Greatest common divisor.
    #[inline]
    pub fn gcd(self, other: Monomial) -> Monomial {
        let m = self.ge_mask(other);
        Monomial((other.0 & m) | (self.0 & !m))
    }

    /// Bit mask of variables with positive exponent (bit `i` = variable `i`).
    #[inline]
    pub fn support(self) -> u32 {
        let nz = ((self.0 | HIGH_BITS) - LOW_BITS) & HIGH_BITS;
        let mut mask = 0u32;
        for i in 0..MAX_VARS {
            if (nz >> (8 * i + 7)) & 1 == 1 {
                mask |= 1 << i;
            }
        }
        mask
    }

    /// True when no variable occurs in both monomials.
    #[inline]
    pub fn is_coprime(self, other: Monomial) -> bool {
        let nz = |x: u128| ((x | HIGH_BITS) - LOW_BITS) & HIGH_BITS;
        nz(self.0) & nz(other.0) == 0
    }

    /// The monomial with the exponent of `var` replaced by `exp`.
    pub fn with_exponent(self, var: usize, exp: u32) -> Option<Monomial> {
        if var >= MAX_VARS || exp > MAX_EXP {
            return None;
        }
        let cleared = self.0 & !(0xffu128 << (8 * var));
        Some(Monomial(cleared | ((exp as u128) << (8 * var))))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let exps: Vec<u32> = (0..MAX_VARS).map(|i| self.exponent(i)).collect();
        let last = exps.iter().rposition(|&e| e != 0).map_or(0, |p| p + 1);
        write!(f, "Monomial{:?}", &exps[..last])
    }
}

impl std::ops::Mul for Monomial {
    type Output = Monomial;

    /// Product.
    ///
    /// # Panics
    /// If an exponent would exceed [`MAX_EXP`].
    #[inline]
    fn mul(self, other: Monomial) -> Monomial {
        self.checked_mul(other).expect("monomial exponent overflow (maximum exponent is 127)")
    }
}
