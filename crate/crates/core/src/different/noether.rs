use crate::error::{Error, Result};
use crate::groebner::IdealHandle;
use crate::linalg::{axpy, Matrix, Subspace, Vector};
use crate::poly::{Polynomial, Ring};
use crate::scheme::SchemeSpec;

use super::{graded_ideal_hilbert, GradedIdealView};

/// The Noether different `ϑ_N = μ(Ann(J))`, `J` the kernel of `μ: R⊗R → R`.
///
/// Dehomogenizing identifies `R ⊗_{K[x0]} R` with `S ⊗ S` and its degree-`d`
/// piece with the span `W_d` of `s ⊗ s'`, `deg s + deg s' <= d`. The
/// annihilator is a linear kernel there, and `(ϑ_N)_d` is the image under
/// multiplication of its intersection with `W_d`.
pub fn noether_different(x: &SchemeSpec) -> Result<GradedIdealView> {
    let field = x.field;
    let dim = x.s.dim();
    let deg: Vec<usize> = x.s.basis().iter().map(|m| m.degree() as usize).collect();
    // coordinates of S⊗S ordered by decreasing total degree, so an echelon
    // basis splits along the filtration W_0 ⊆ W_1 ⊆ ...
    let mut pairs: Vec<(usize, usize)> = (0..dim).flat_map(|a| (0..dim).map(move |b| (a, b))).collect();
    pairs.sort_by(|p, q| (deg[q.0] + deg[q.1]).cmp(&(deg[p.0] + deg[p.1])).then(p.cmp(q)));
    let mut table = vec![0usize; dim * dim];
    for (k, &(a, b)) in pairs.iter().enumerate() {
        table[a * dim + b] = k;
    }
    let pos = |a: usize, b: usize| table[a * dim + b];
    let size = pairs.len();

    // u·(x_i⊗1 − 1⊗x_i) = 0 for all i
    let mut rows: Vec<Vector> = Vec::new();
    for i in 1..=x.n {
        let m = x.s.var_matrix(i);
        for a in 0..dim {
            for b in 0..dim {
                let mut row = vec![field.zero(); size];
                for c in 0..dim {
                    let l = m.get(a, c);
                    if !l.is_zero() {
                        row[pos(c, b)] = &row[pos(c, b)] + l;
                    }
                    let r = m.get(b, c);
                    if !r.is_zero() {
                        row[pos(a, c)] = &row[pos(a, c)] - r;
                    }
                }
                if row.iter().any(|v| !v.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    let ann = if rows.is_empty() {
        Subspace::full(field, size)
    } else {
        Subspace::span(field, size, Matrix::from_rows(field, size, rows).kernel())
    };
    log::debug!("Noether different: annihilator of dimension {} in S⊗S of dimension {size}", ann.dim());

    let products: Vec<Vector> = pairs.iter().map(|&(a, b)| x.s.mul_basis(&x.s.unit(a), b)).collect();
    let mu = |u: &[crate::field::Scalar]| -> Vector {
        let mut out = x.s.zero();
        for (c, p) in u.iter().zip(&products) {
            if !c.is_zero() {
                axpy(&mut out, c, p);
            }
        }
        out
    };
    let images: Vec<(usize, Vector)> = ann
        .basis()
        .iter()
        .zip(ann.pivots())
        .map(|(u, &p)| (deg[pairs[p].0] + deg[pairs[p].1], mu(u)))
        .collect();
    let total = Subspace::span(field, dim, images.iter().map(|i| i.1.clone()).collect());

    // graded pieces and fresh generators in each degree
    let mut cur = Subspace::zero(field, dim);
    let mut hf = Vec::new();
    let mut cands: Vec<Polynomial> = Vec::new();
    let mut d = 0;
    loop {
        for (e, v) in &images {
            if *e == d && cur.insert(v) {
                cands.push(x.homogeneous_of(v, d).expect("image lies in V_d"));
            }
        }
        hf.push(cur.dim());
        if cur.dim() == total.dim() {
            break;
        }
        d += 1;
    }
    let view = graded_ideal_hilbert(x, &cands)?;
    if view.hf != hf {
        return Err(Error::Internal(format!(
            "Noether different: direct pieces {hf:?} differ from generated ideal {:?}",
            view.hf
        )));
    }
    Ok(view)
}

/// `ϑ_N` through Gröbner bases: `(I^e : ⟨X_i − Y_i⟩)` in `K[X0..Xn, Y1..Yn]`,
/// followed by `Y_i ↦ X_i`.
pub fn noether_different_colon(x: &SchemeSpec) -> Result<GradedIdealView> {
    let n = x.n;
    let big = Ring::projective(x.field, 2 * n);
    let as_x: Vec<usize> = (0..=n).collect();
    let as_y: Vec<usize> = (0..=n).map(|i| if i == 0 { 0 } else { n + i }).collect();
    let gb = x.i_x.groebner_basis();
    let mut gens: Vec<Polynomial> = gb.iter().map(|g| g.remap(big, &as_x)).collect();
    gens.extend(gb.iter().map(|g| g.remap(big, &as_y)));
    let ie = IdealHandle::new(big, gens)?;
    let diag: Vec<Polynomial> = (1..=n).map(|i| &big.var(i) - &big.var(n + i)).collect();
    let colon = ie.colon(&IdealHandle::new(big, diag)?)?;
    let back: Vec<usize> = (0..=2 * n).map(|i| if i <= n { i } else { i - n }).collect();
    let mut images: Vec<Polynomial> = Vec::new();
    for g in colon.generators() {
        if !g.is_homogeneous() {
            return Err(Error::Internal(format!("colon generator {g} is not homogeneous")));
        }
        images.push(g.remap(x.ring(), &back));
    }
    graded_ideal_hilbert(x, &images)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DifferentInclusions {
    pub kaehler_in_noether: bool,
    pub noether_pow_in_kaehler: bool,
}

/// Checks `ϑ_N^n ⊆ ϑ_X ⊆ ϑ_N` on generators.
pub fn different_inclusions(x: &SchemeSpec, kaehler: &GradedIdealView, noether: &GradedIdealView) -> DifferentInclusions {
    let kaehler_in_noether = kaehler.minimal_generators.iter().all(|g| noether.contains(x, g));
    let gens: Vec<(usize, Vector)> = noether
        .minimal_generators
        .iter()
        .map(|g| (g.degree().unwrap_or(0) as usize, x.affine_vector(g)))
        .collect();
    let mut ok = true;
    // n-element multisets of generator indices
    let mut idx = vec![0usize; x.n];
    'outer: while !gens.is_empty() {
        let mut d = 0;
        let mut v = x.s.one();
        for &k in &idx {
            d += gens[k].0;
            v = x.s.mul(&v, &gens[k].1);
        }
        if !kaehler.piece(d).contains(&v) {
            ok = false;
            break;
        }
        let mut p = x.n;
        loop {
            if p == 0 {
                break 'outer;
            }
            p -= 1;
            if idx[p] + 1 < gens.len() {
                idx[p] += 1;
                let v = idx[p];
                for q in idx.iter_mut().skip(p + 1) {
                    *q = v;
                }
                break;
            }
        }
    }
    DifferentInclusions {
        kaehler_in_noether,
        noether_pow_in_kaehler: ok,
    }
}
