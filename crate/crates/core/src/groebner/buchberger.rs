//! Buchberger's algorithm with the Gebauer–Möller update and sugar selection.

use std::cmp::Ordering;

use crate::field::Scalar;
use crate::poly::{Monomial, MonomialOrder, Polynomial, Ring};


/// A polynomial with terms sorted descending in a fixed order, plus its sugar.
#[derive(Clone, Debug)]
pub(crate) struct GPoly {
    pub terms: Vec<(Monomial, Scalar)>,
    pub sugar: u32,
}

impl GPoly {
    fn from_poly(p: &Polynomial, order: MonomialOrder) -> Self {
        let mut terms = p.terms().to_vec();
        if order != MonomialOrder::DegRevLex {
            terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        }
        let sugar = terms.iter().map(|(m, _)| m.degree()).max().unwrap_or(0);
        GPoly { terms, sugar }
    }

    pub fn lm(&self) -> &Monomial {
        &self.terms[0].0
    }

    fn make_monic(&mut self) {
        let inv = self.terms[0].1.inv().expect("nonzero leading coefficient");
        if !inv.is_one() {
            for t in self.terms.iter_mut() {
                t.1 = &t.1 * &inv;
            }
        }
    }
}

/// `p - c * m * g`, all sorted descending in `order`.
fn sub_mul(order: MonomialOrder, p: &[(Monomial, Scalar)], c: &Scalar, m: &Monomial, g: &[(Monomial, Scalar)]) -> Vec<(Monomial, Scalar)> {
    let mut out = Vec::with_capacity(p.len() + g.len());
    let (mut i, mut j) = (0, 0);
    let next_g = |j: usize| -> (Monomial, Scalar) { (g[j].0.mul(m), -&(c * &g[j].1)) };
    let mut pending = if g.is_empty() { None } else { Some(next_g(0)) };
    while i < p.len() {
        let Some(gt) = pending.as_ref() else { break };
        match order.cmp(&p[i].0, &gt.0) {
            Ordering::Greater => {
                out.push(p[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push(pending.take().expect("pending term"));
                j += 1;
                pending = (j < g.len()).then(|| next_g(j));
            }
            Ordering::Equal => {
                let s = &p[i].1 + &gt.1;
                if !s.is_zero() {
                    out.push((p[i].0.clone(), s));
                }
                i += 1;
                j += 1;
                pending = (j < g.len()).then(|| next_g(j));
            }
        }
    }
    out.extend(p[i..].iter().cloned());
    if let Some(t) = pending {
        out.push(t);
        for k in j + 1..g.len() {
            out.push(next_g(k));
        }
    }
    out
}

/// Full reduction of `p` by `basis`; the result has no term divisible by
/// any leading monomial of `basis`.
pub(crate) fn reduce_terms(order: MonomialOrder, mut p: Vec<(Monomial, Scalar)>, basis: &[GPoly], skip: Option<usize>) -> Vec<(Monomial, Scalar)> {
    let mut rest: Vec<(Monomial, Scalar)> = Vec::new();
    while !p.is_empty() {
        let (lm, lc) = (&p[0].0, &p[0].1);
        let divisor = basis
            .iter()
            .enumerate()
            .find(|(k, g)| Some(*k) != skip && g.lm().divides(lm));
        match divisor {
            Some((_, g)) => {
                let q = g.lm().quotient_of(lm).expect("divides");
                let c = lc * &g.terms[0].1.inv().expect("nonzero");
                p = sub_mul(order, &p, &c, &q, &g.terms);
            }
            None => {
                // move every leading term that is irreducible in one sweep
                let mut k = 0;
                while k < p.len() && !basis.iter().enumerate().any(|(b, g)| Some(b) != skip && g.lm().divides(&p[k].0)) {
                    k += 1;
                }
                rest.extend(p.drain(..k));
            }
        }
    }
    rest
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u32,
}

/// Reduced Gröbner basis of the ideal generated by `gens` under `order`, as monic polynomials sorted ascending by leading monomial.
pub(crate) fn groebner(order: MonomialOrder, gens: &[Polynomial]) -> Vec<GPoly> {
    let mut polys: Vec<GPoly> = Vec::new();
    let mut active: Vec<bool> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();

    let mut inputs: Vec<GPoly> = gens.iter().filter(|g| !g.is_zero()).map(|g| GPoly::from_poly(g, order)).collect();
    inputs.sort_by(|a, b| order.cmp(a.lm(), b.lm()));
    for f in inputs {
        let sugar = f.sugar;
        let terms = reduce_terms(order, f.terms, &active_view(&polys, &active), None);
        if terms.is_empty() {
            continue;
        }
        let mut h = GPoly { terms, sugar };
        h.make_monic();
        if h.lm().is_one() {
            return vec![h];
        }
        update(&mut polys, &mut active, &mut pairs, h);
    }

    while let Some(k) = select(order, &pairs) {
        let pair = pairs.swap_remove(k);
        let s = spoly(order, &polys[pair.i], &polys[pair.j], &pair.lcm);
        let terms = reduce_terms(order, s, &polys, None);
        if terms.is_empty() {
            continue;
        }
        let mut h = GPoly { terms, sugar: pair.sugar };
        h.make_monic();
        if h.lm().is_one() {
            return vec![h];
        }
        log::trace!("new basis element with leading monomial {}", h.lm());
        update(&mut polys, &mut active, &mut pairs, h);
    }

    let mut basis: Vec<GPoly> = polys.into_iter().zip(active).filter(|(_, a)| *a).map(|(p, _)| p).collect();
    basis.sort_by(|a, b| order.cmp(a.lm(), b.lm()));
    // inter-reduce tails; leading monomials are already minimal
    for k in 0..basis.len() {
        let head = basis[k].terms[0].clone();
        let tail = basis[k].terms[1..].to_vec();
        let mut terms = vec![head];
        terms.extend(reduce_terms(order, tail, &basis, Some(k)));
        basis[k].terms = terms;
    }
    basis
}

fn active_view(polys: &[GPoly], active: &[bool]) -> Vec<GPoly> {
    polys.iter().zip(active).filter(|(_, a)| **a).map(|(p, _)| p.clone()).collect()
}

fn select(order: MonomialOrder, pairs: &[Pair]) -> Option<usize> {
    (0..pairs.len()).min_by(|&a, &b| {
        pairs[a]
            .sugar
            .cmp(&pairs[b].sugar)
            .then_with(|| order.cmp(&pairs[a].lcm, &pairs[b].lcm))
            .then_with(|| (pairs[a].i, pairs[a].j).cmp(&(pairs[b].i, pairs[b].j)))
    })
}

fn spoly(order: MonomialOrder, f: &GPoly, g: &GPoly, lcm: &Monomial) -> Vec<(Monomial, Scalar)> {
    // both are monic
    let mf = f.lm().quotient_of(lcm).expect("lcm");
    let mg = g.lm().quotient_of(lcm).expect("lcm");
    let one = f.terms[0].1.field().one();
    let a: Vec<_> = f.terms[1..].iter().map(|(m, c)| (m.mul(&mf), c.clone())).collect();
    sub_mul(order, &a, &one, &mg, &g.terms[1..])
}

/// The Gebauer–Möller installation of a new basis element `h`.
fn update(polys: &mut Vec<GPoly>, active: &mut Vec<bool>, pairs: &mut Vec<Pair>, h: GPoly) {
    let hi = polys.len();
    let hlm = h.lm().clone();
    let hsugar = h.sugar;

    let mut c: Vec<Pair> = (0..hi)
        .filter(|&g| active[g])
        .map(|g| {
            let lcm = hlm.lcm(polys[g].lm());
            let sugar = (hsugar + lcm.degree() - hlm.degree()).max(polys[g].sugar + lcm.degree() - polys[g].lm().degree());
            Pair { i: g, j: hi, lcm, sugar }
        })
        .collect();

    let mut d: Vec<Pair> = Vec::new();
    while let Some(p) = c.pop() {
        let coprime = hlm.is_coprime(polys[p.i].lm());
        let dominated = c.iter().chain(d.iter()).any(|q| q.lcm.divides(&p.lcm));
        if coprime || !dominated {
            d.push(p);
        }
    }
    let e: Vec<Pair> = d.into_iter().filter(|p| !hlm.is_coprime(polys[p.i].lm())).collect();

    pairs.retain(|p| {
        !(hlm.divides(&p.lcm)
            && hlm.lcm(polys[p.i].lm()) != p.lcm
            && hlm.lcm(polys[p.j].lm()) != p.lcm)
    });
    pairs.extend(e);

    for g in 0..hi {
        if active[g] && hlm.divides(polys[g].lm()) {
            active[g] = false;
        }
    }
    polys.push(h);
    active.push(true);
}

/// Converts a basis element back to a storage polynomial.
pub(crate) fn to_polynomial(ring: Ring, g: &GPoly) -> Polynomial {
    Polynomial::from_terms(ring, g.terms.clone())
}

pub(crate) fn from_polynomial(p: &Polynomial, order: MonomialOrder) -> Vec<(Monomial, Scalar)> {
    GPoly::from_poly(p, order).terms
}
