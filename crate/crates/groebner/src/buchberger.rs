//! Buchberger's algorithm with sugar-degree pair selection (ties broken by
//! the smallest lcm), the Gebauer–Möller pair criteria and an active set kept
//! fully reduced throughout.

use mpoly::{Monomial, MpolyError, Poly, PolyRing};

use crate::reduce::{reduce, try_reduce, ReducerIndex, Reduction};

#[derive(Clone, Copy, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u32,
}

/// Working state: every polynomial ever added plus the currently active ones.
struct State {
    polys: Vec<Poly>,
    sugar: Vec<u32>,
    active: Vec<usize>,
    pairs: Vec<Pair>,
}

impl State {
    fn reducer_index(&self) -> ReducerIndex<'_> {
        ReducerIndex::new(self.active.iter().map(|&k| &self.polys[k]))
    }

    /// Adds a monic, head-reduced polynomial and updates the pair set.
    fn insert(&mut self, h: Poly, sugar: u32) -> Result<(), MpolyError> {
        let hk = self.polys.len();
        let lh = h.lm();
        self.polys.push(h);
        self.sugar.push(sugar);

        let mut candidates: Vec<Pair> = self
            .active
            .iter()
            .map(|&g| {
                let lcm = self.polys[g].lm().lcm(lh);
                let sugar = (self.sugar[g] + lcm.total_degree() - self.polys[g].lm().total_degree())
                    .max(sugar + lcm.total_degree() - lh.total_degree());
                Pair { i: g, j: hk, lcm, sugar }
            })
            .collect();
        let mut kept: Vec<Pair> = Vec::new();
        while let Some(p) = candidates.pop() {
            let coprime = self.polys[p.i].lm().is_coprime(lh);
            let dominated = candidates.iter().chain(kept.iter()).any(|o| o.lcm.divides(p.lcm));
            if coprime || !dominated {
                kept.push(p);
            }
        }
        kept.retain(|p| !self.polys[p.i].lm().is_coprime(lh));

        let polys = &self.polys;
        self.pairs.retain(|p| {
            !(lh.divides(p.lcm)
                && polys[p.i].lm().lcm(lh) != p.lcm
                && polys[p.j].lm().lcm(lh) != p.lcm)
        });
        self.pairs.extend(kept);

        self.active.retain(|&g| !lh.divides(polys[g].lm()));
        self.active.push(hk);
        self.tail_reduce_by(hk)
    }

    /// Keeps the active set tail-reduced after `hk` joined it.
    fn tail_reduce_by(&mut self, hk: usize) -> Result<(), MpolyError> {
        let lh = self.polys[hk].lm();
        let stale: Vec<usize> = self
            .active
            .iter()
            .copied()
            .filter(|&g| g != hk && self.polys[g].terms()[1..].iter().any(|t| lh.divides(t.0)))
            .collect();
        for g in stale {
            let reduced = {
                let index = ReducerIndex::new(self.active.iter().filter(|&&k| k != g).map(|&k| &self.polys[k]));
                try_reduce(&self.polys[g], &index, Reduction::Full)?
            };
            self.polys[g] = reduced;
        }
        Ok(())
    }

    /// Removes and returns the pair with the smallest lcm (ties by index).
    fn next_pair(&mut self) -> Option<Pair> {
        let best = self
            .pairs
            .iter()
            .enumerate()
            .min_by_key(|(_, p)| (p.sugar, p.lcm, p.i, p.j))
            .map(|(k, _)| k)?;
        Some(self.pairs.swap_remove(best))
    }
}

/// Whether every term of `f` times `shift` stays within the exponent capacity.
fn shift_fits(f: &Poly, shift: Monomial) -> bool {
    f.terms().iter().all(|t| t.0.checked_mul(shift).is_some())
}

/// S-polynomial of two monic polynomials.
pub(crate) fn s_polynomial(f: &Poly, g: &Poly) -> Result<Poly, MpolyError> {
    let l = f.lm().lcm(g.lm());
    let field = f.field();
    let uf = f.lm().divide_into(l).expect("lm divides lcm");
    let ug = g.lm().divide_into(l).expect("lm divides lcm");
    let cf = field.inv(f.lc()).expect("nonzero leading coefficient");
    let cg = field.neg(field.inv(g.lc()).expect("nonzero leading coefficient"));
    if !shift_fits(f, uf) || !shift_fits(g, ug) {
        return Err(MpolyError::ExponentOverflow);
    }
    Ok(f.mul_term(uf, cf).add_scaled(g, cg, ug))
}

/// Orders polynomials by leading term, then by the full term sequence.
pub(crate) fn canonical_cmp(a: &Poly, b: &Poly) -> std::cmp::Ordering {
    a.terms().cmp(b.terms())
}

/// Computes the reduced Gröbner basis of the ideal generated by `generators`,
/// sorted ascending by leading monomial.
/// Fails when an intermediate exponent exceeds the monomial capacity.
pub(crate) fn reduced_basis(ring: &PolyRing, generators: &[Poly]) -> Result<Vec<Poly>, MpolyError> {
    let mut gens: Vec<Poly> = generators.iter().filter(|p| !p.is_zero()).map(Poly::monic).collect();
    gens.sort_by(canonical_cmp);
    gens.dedup();
    if gens.iter().any(Poly::is_constant) {
        return Ok(vec![ring.one()]);
    }

    let mut state = State { polys: Vec::new(), sugar: Vec::new(), active: Vec::new(), pairs: Vec::new() };
    for g in gens {
        let h = try_reduce(&g, &state.reducer_index(), Reduction::Full)?;
        if h.is_zero() {
            continue;
        }
        if h.is_constant() {
            return Ok(vec![ring.one()]);
        }
        let sugar = g.terms().iter().map(|t| t.0.total_degree()).max().unwrap_or(0);
        state.insert(h.monic(), sugar)?;
    }

    while let Some(pair) = state.next_pair() {
        let s = s_polynomial(&state.polys[pair.i], &state.polys[pair.j])?;
        let h = try_reduce(&s, &state.reducer_index(), Reduction::Full)?;
        if h.is_zero() {
            continue;
        }
        if h.is_constant() {
            return Ok(vec![ring.one()]);
        }
        state.insert(h.monic(), pair.sugar)?;
    }

    let active: Vec<Poly> = state.active.iter().map(|&k| state.polys[k].clone()).collect();
    Ok(interreduce_minimal(minimize(active)))
}

/// Drops every polynomial whose leading monomial is divisible by another's,
/// keeping one representative per leading monomial.
pub(crate) fn minimize(mut polys: Vec<Poly>) -> Vec<Poly> {
    polys.retain(|p| !p.is_zero());
    polys.sort_by(canonical_cmp);
    let mut out: Vec<Poly> = Vec::with_capacity(polys.len());
    for p in polys {
        if !out.iter().any(|q| q.lm().divides(p.lm())) {
            out.push(p.monic());
        }
    }
    out
}

/// Tail-reduces a minimal Gröbner basis. Under lex a tail term of `g` can
/// only be divisible by leading monomials smaller than `lm(g)`, so each
/// element is reduced against the already reduced smaller ones.
pub(crate) fn interreduce_minimal(mut polys: Vec<Poly>) -> Vec<Poly> {
    polys.sort_by_key(Poly::lm);
    let mut out: Vec<Poly> = Vec::with_capacity(polys.len());
    for p in polys {
        let r = reduce(&p, &ReducerIndex::new(out.iter()), Reduction::Full);
        out.push(r.monic());
    }
    out
}
