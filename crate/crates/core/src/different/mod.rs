//! Kähler and Noether differents and Hilbert functions of homogeneous
//! ideals of the coordinate ring `R = P/I_X`.
//!
//! A degree-`d` piece of an ideal `a ⊆ R` is represented by its image under
//! the injection `R_d → S`, `f ↦ f^deh`. Multiplication by `x0` becomes the
//! identity there, so the pieces form an increasing chain of subspaces of `S`
//! that stabilizes at the dehomogenized ideal.

mod kaehler;
mod noether;

use crate::error::{Error, Result};
use crate::linalg::{Subspace, Vector};
use crate::poly::{MonomialOrder, Polynomial};
use crate::scheme::SchemeSpec;

pub use kaehler::{
    affine_and_reduced_kaehler, kaehler_cross_check, kaehler_different, kaehler_different_of, kaehler_minors,
    local_kaehler_different, AffineKaehler, LocalDifferentReport,
};
pub use noether::{different_inclusions, noether_different, noether_different_colon, DifferentInclusions};

/// A homogeneous ideal of `R` with its Hilbert function.
#[derive(Clone, Debug)]
pub struct GradedIdealView {
    /// Nonzero normal forms modulo `I_X` of the supplied generators, monic,
    /// without repetitions, sorted by degree then term order.
    pub generators: Vec<Polynomial>,
    /// A minimal homogeneous system of generators taken from `generators`.
    pub minimal_generators: Vec<Polynomial>,
    /// `hf[d]` for `d = 0..=ri`.
    pub hf: Vec<usize>,
    /// Hilbert polynomial (a constant).
    pub hp: usize,
    /// Regularity index: first degree with `hf = hp`.
    pub ri: usize,
    /// Dimension of the dehomogenized ideal inside `S`.
    pub affine_dim: usize,
    /// Image in `S` of each graded piece `0..=ri`.
    pub pieces: Vec<Subspace>,
}

impl GradedIdealView {
    pub fn value(&self, d: usize) -> usize {
        self.hf.get(d).copied().unwrap_or(self.hp)
    }

    /// `hf(0), ..., hf(upto)`.
    pub fn values(&self, upto: usize) -> Vec<usize> {
        (0..=upto).map(|d| self.value(d)).collect()
    }

    /// The image of the degree-`d` piece in `S`.
    pub fn piece(&self, d: usize) -> &Subspace {
        &self.pieces[d.min(self.ri)]
    }

    pub fn is_principal(&self) -> bool {
        self.minimal_generators.len() == 1
    }

    /// Membership of a homogeneous polynomial of `K[X0..Xn]`.
    pub fn contains(&self, x: &SchemeSpec, f: &Polynomial) -> bool {
        match f.degree() {
            None => true,
            Some(d) => self.piece(d as usize).contains(&x.affine_vector(f)),
        }
    }

    /// Degreewise equality of two ideals of the same `R`.
    pub fn same_ideal(&self, other: &GradedIdealView) -> bool {
        let top = self.ri.max(other.ri);
        (0..=top).all(|d| {
            let (a, b) = (self.piece(d), other.piece(d));
            a.dim() == b.dim() && a.contains_subspace(b)
        })
    }
}

/// Normal form modulo `I_X` of a homogeneous element given by its image in `S`.
fn homogeneous_generator(x: &SchemeSpec, v: &[crate::field::Scalar], d: usize) -> Polynomial {
    x.homogeneous_of(v, d).expect("vector lies in V_d").monic()
}

/// Computes the graded pieces of the ideal of `R` generated by the
/// homogeneous polynomials `gens`.
pub fn graded_ideal_hilbert(x: &SchemeSpec, gens: &[Polynomial]) -> Result<GradedIdealView> {
    let field = x.field;
    let dim = x.s.dim();
    let mut cands: Vec<(usize, Vector)> = Vec::new();
    for g in gens {
        if g.ring() != x.ring() {
            return Err(Error::RingMismatch("generator outside K[X0..Xn]".into()));
        }
        if !g.is_homogeneous() {
            return Err(Error::InvalidInput(format!("generator {g} is not homogeneous")));
        }
        let Some(d) = g.degree() else { continue };
        let v = x.affine_vector(g);
        if v.iter().all(|c| c.is_zero()) {
            continue;
        }
        cands.push((d as usize, v));
    }
    cands.sort_by_key(|c| c.0);
    let mut generators: Vec<Polynomial> = Vec::new();
    for (d, v) in &cands {
        let p = homogeneous_generator(x, v, *d);
        if !generators.contains(&p) {
            generators.push(p);
        }
    }
    generators.sort_by(|a, b| {
        a.degree().cmp(&b.degree()).then_with(|| {
            let (la, lb) = (&a.terms()[0].0, &b.terms()[0].0);
            MonomialOrder::DegRevLex.cmp(la, lb)
        })
    });

    let affine = x.s.ideal_span(&cands.iter().map(|c| c.1.clone()).collect::<Vec<_>>());
    let affine_dim = affine.dim();
    let r = x.regularity_index();
    let max_gen = cands.last().map_or(0, |c| c.0);
    // a_d contains g·S for every generator once d >= deg g + r_X
    let cap = (max_gen + r).max((x.n + 1) * r + x.n);

    // basis indices of S grouped by degree
    let basis_degree: Vec<usize> = x.s.basis().iter().map(|m| m.degree() as usize).collect();
    let mut kept: Vec<(usize, Vector)> = Vec::new();
    let mut minimal_generators = Vec::new();
    let mut cur = Subspace::zero(field, dim);
    let mut pieces = Vec::new();
    let mut hf = Vec::new();
    let mut next_cand = 0;
    let mut d = 0;
    loop {
        for (e, g) in &kept {
            let k = d - e;
            for (b, &bd) in basis_degree.iter().enumerate() {
                if bd == k {
                    cur.insert(&x.s.mul_basis(g, b));
                }
            }
        }
        while next_cand < cands.len() && cands[next_cand].0 == d {
            let (e, v) = &cands[next_cand];
            if cur.insert(v) {
                // products with basis elements of degree 0 (just 1) are `v` itself
                kept.push((*e, v.clone()));
                minimal_generators.push(homogeneous_generator(x, v, *e));
            }
            next_cand += 1;
        }
        hf.push(cur.dim());
        pieces.push(cur.clone());
        if cur.dim() == affine_dim {
            break;
        }
        if d >= cap {
            return Err(Error::StabilizationCap(cap));
        }
        d += 1;
    }
    Ok(GradedIdealView {
        generators,
        minimal_generators,
        hp: affine_dim,
        ri: d,
        hf,
        affine_dim,
        pieces,
    })
}
