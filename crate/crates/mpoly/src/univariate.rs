//! Root finding and root multiplicities for polynomials in one variable.

use gf::Elem;

use crate::poly::{binomial_mod_p, Poly};
use crate::MpolyError;

/// Value of the `n`-th Hasse derivative of `sum coeffs[i] x^i` at `a`.
fn hasse_at(coeffs: &[Elem], n: usize, a: Elem, field: &gf::Field) -> Elem {
    let p = field.characteristic() as u64;
    let mut total = Elem::ZERO;
    for (i, &c) in coeffs.iter().enumerate().skip(n) {
        if c.is_zero() {
            continue;
        }
        let b = binomial_mod_p(i as u64, n as u64, p);
        if b == 0 {
            continue;
        }
        let term = field.mul(field.mul(c, field.from_int(b as i64)), field.pow(a, (i - n) as u64));
        total = field.add(total, term);
    }
    total
}

/// Multiplicity of `root` as a root of `p`, viewed as a polynomial in `var`
/// alone: the largest `r` such that the Hasse derivatives of orders
/// `0..r` all vanish at `root`. Returns 0 when `root` is not a root.
pub fn multiplicity_at(p: &Poly, var: usize, root: Elem) -> Result<u32, MpolyError> {
    if p.is_zero() {
        return Err(MpolyError::ZeroPolynomial);
    }
    let coeffs = p.univariate_coeffs(var)?;
    let field = p.field();
    let mut r = 0;
    while r < coeffs.len() && hasse_at(&coeffs, r, root, field).is_zero() {
        r += 1;
    }
    Ok(r as u32)
}

/// All roots of `p` in the field with their multiplicities, listed in the
/// canonical element order. `p` must involve only `var`.
pub fn roots_univariate(p: &Poly, var: usize) -> Result<Vec<(Elem, u32)>, MpolyError> {
    if p.is_zero() {
        return Err(MpolyError::ZeroPolynomial);
    }
    let coeffs = p.univariate_coeffs(var)?;
    let field = p.field();
    let mut out = Vec::new();
    for a in field.elements() {
        let mut r = 0;
        while r < coeffs.len() && hasse_at(&coeffs, r, a, field).is_zero() {
            r += 1;
        }
        if r > 0 {
            out.push((a, r as u32));
        }
    }
    Ok(out)
}
