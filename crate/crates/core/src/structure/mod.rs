//! Separators, the conductor of `R` in `R̃ = S[x0]`, Cayley–Bacharach tests
//! and the classification of a scheme by its differents.
//!
//! Everything here is linear algebra in `S` through the injection
//! `ĩ: R_i → S`, `f ↦ f^deh`, whose image is the coordinate subspace `V_i`
//! spanned by the standard monomials of degree `<= i`.

mod classify;
mod rank;

use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::linalg::{Matrix, Subspace, Vector};
use crate::poly::{Monomial, Polynomial};
use crate::scheme::SchemeSpec;

pub use classify::{
    classify, classify_with, genpos_equivalence_check, conductor_power, ClassificationReport, GenposCheck,
    CommonZerosCheck, Route,
};
pub use rank::{cb_rank_criterion, RankCriterion};

/// The maps `R_i → S` for `i = 0..=r_X`.
#[derive(Clone, Debug)]
pub struct ItildeFrame {
    /// Monomial basis of `R_i` (normal forms modulo `I_X`).
    pub bases: Vec<Vec<Monomial>>,
    /// Row `k` of `matrices[i]` is the image of `bases[i][k]` in `S`.
    pub matrices: Vec<Matrix>,
    pub images: Vec<Subspace>,
}

impl ItildeFrame {
    pub fn top(&self) -> usize {
        self.images.len() - 1
    }
}

pub fn itilde_frame(x: &SchemeSpec) -> ItildeFrame {
    let r = x.regularity_index();
    let dim = x.s.dim();
    let mut bases = Vec::with_capacity(r + 1);
    let mut matrices = Vec::with_capacity(r + 1);
    let mut images = Vec::with_capacity(r + 1);
    for i in 0..=r {
        let h = x.hilbert.value(i);
        let basis: Vec<Monomial> = x.s.basis()[..h]
            .iter()
            .map(|m| m.with_exponent(0, (i - m.degree() as usize) as u16))
            .collect();
        let rows: Vec<Vector> = basis.iter().map(|m| x.affine_vector(&x.ring().monomial(m.clone()))).collect();
        matrices.push(Matrix::from_rows(x.field, dim, rows.clone()));
        images.push(Subspace::span(x.field, dim, rows));
        bases.push(basis);
    }
    ItildeFrame {
        bases,
        matrices,
        images,
    }
}

/// Degree of the highest standard monomial in the support of `v`; the least
/// `i` with `v ∈ V_i`.
fn filtration_degree(x: &SchemeSpec, v: &[Scalar]) -> Option<usize> {
    x.s.basis()
        .iter()
        .zip(v)
        .filter(|(_, c)| !c.is_zero())
        .map(|(m, _)| m.degree() as usize)
        .max()
}

/// `μ(a)`: the least `i` with `(0,..,a,..,0)·x0^i ∈ ĩ(R)`, `a ∈ O_j` in the
/// coordinates of the local ring.
pub fn mu_value(x: &SchemeSpec, j: usize, a: &[Scalar]) -> Result<usize> {
    x.local_ring(j)?;
    if a.iter().all(|c| c.is_zero()) {
        return Err(Error::InvalidInput("μ is undefined for the zero element".into()));
    }
    let v = x.embed(j, a)?;
    Ok(filtration_degree(x, &v).expect("embedding is injective"))
}

#[derive(Clone, Debug)]
pub struct Separator {
    /// `μ(e_jk·s_j)`.
    pub degree: usize,
    pub minimal: Polynomial,
    /// `x0^(r_X − μ)·minimal`.
    pub full: Polynomial,
}

#[derive(Clone, Debug)]
pub struct SeparatorSet {
    pub component: usize,
    /// The chosen socle element of `O_j`.
    pub socle_element: Vector,
    pub separators: Vec<Separator>,
}

impl SeparatorSet {
    /// Degree of the maximal subscheme's minimal separators, `μ_{Y/X}`.
    pub fn max_degree(&self) -> usize {
        self.separators.iter().map(|s| s.degree).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.separators.iter().map(|s| s.degree).min().unwrap_or(0)
    }
}

/// Socle basis vector with the lexicographically smallest support, scaled
/// to leading coefficient one.
fn socle_generator(socle: &Subspace) -> Option<Vector> {
    let support = |v: &Vector| -> Vec<usize> { (0..v.len()).filter(|&i| !v[i].is_zero()).collect() };
    let best = socle.basis().iter().min_by(|a, b| support(a).cmp(&support(b)))?;
    let lead = best.iter().find(|c| !c.is_zero())?.inv()?;
    Some(best.iter().map(|c| c * &lead).collect())
}

/// Separators of the maximal `p_j`-subscheme cut out by the chosen socle element.
pub fn separators(x: &SchemeSpec, j: usize) -> Result<SeparatorSet> {
    let local = x.local_ring(j)?;
    if !local.is_gorenstein() {
        return Err(Error::Unsupported(format!(
            "component {j} is not Gorenstein: its socle has dimension {} over the residue field",
            local.socle_dim_over_residue()
        )));
    }
    let s = socle_generator(&local.socle).ok_or_else(|| Error::Internal("empty socle".into()))?;
    let r = x.regularity_index();
    let mut out = Vec::new();
    for e in &local.residue_basis {
        let a = local.algebra.mul(e, &s);
        let degree = mu_value(x, j, &a)?;
        let v = x.embed(j, &a)?;
        let minimal = x.homogeneous_of(&v, degree).expect("embedded vector lies in V_μ");
        let full = minimal.mul_monomial(&Monomial::variable(x.ring().nvars, 0).with_exponent(0, (r - degree) as u16));
        out.push(Separator {
            degree,
            minimal,
            full,
        });
    }
    Ok(SeparatorSet {
        component: j,
        socle_element: s,
        separators: out,
    })
}

/// Graded pieces of the conductor `𝔉 = {f ∈ R : f·R̃ ⊆ R}`.
#[derive(Clone, Debug)]
pub struct ConductorProfile {
    /// `F_i ⊆ S` for `i = 0..=r_X`; `F_i = S` from `r_X` on.
    pub pieces: Vec<Subspace>,
    /// `d_j = deg_X(p_j)`, when component data exists.
    pub point_degrees: Option<Vec<usize>>,
    /// `ℓ(R̃/R)`.
    pub len_tilde_over_r: usize,
    /// `ℓ(R/𝔉)`.
    pub len_r_over_f: usize,
    /// `ℓ(R̃/𝔉)`.
    pub len_tilde_over_f: usize,
}

impl ConductorProfile {
    pub fn dims(&self) -> Vec<usize> {
        self.pieces.iter().map(|p| p.dim()).collect()
    }

    pub fn piece(&self, i: usize) -> &Subspace {
        &self.pieces[i.min(self.pieces.len() - 1)]
    }
}

/// `F_i = {v ∈ S : v·S ⊆ V_i}`: an element of `R_i` lies in the conductor
/// iff its products with `S·x0^k` stay in `R` for all `k >= 0`, and
/// `V_i ⊆ V_{i+k}`.
pub fn conductor(x: &SchemeSpec) -> Result<ConductorProfile> {
    let r = x.regularity_index();
    let dim = x.s.dim();
    let deg = x.degree();
    let mut pieces = Vec::with_capacity(r + 1);
    for i in 0..=r {
        let h = x.hilbert.value(i);
        if h == dim {
            pieces.push(Subspace::full(x.field, dim));
            continue;
        }
        let mut rows: Vec<Vector> = Vec::new();
        for b in 0..dim {
            let m = x.s.monomial_matrix(b);
            rows.extend((h..dim).map(|c| m.row(c).to_vec()));
        }
        let ker = Matrix::from_rows(x.field, dim, rows).kernel();
        pieces.push(Subspace::span(x.field, dim, ker));
    }
    let point_degrees = if x.has_components() {
        let mut ds = Vec::with_capacity(x.components.len());
        for j in 0..x.components.len() {
            let mut d = None;
            for (i, p) in pieces.iter().enumerate() {
                let mut hit = false;
                for v in p.basis() {
                    if x.project(j, v)?.iter().any(|c| !c.is_zero()) {
                        hit = true;
                        break;
                    }
                }
                if hit {
                    d = Some(i);
                    break;
                }
            }
            ds.push(d.ok_or_else(|| Error::Internal(format!("conductor misses component {j}")))?);
        }
        Some(ds)
    } else {
        None
    };
    let len_tilde_over_r = (0..r).map(|i| deg - x.hilbert.value(i)).sum();
    let len_r_over_f = (0..r).map(|i| x.hilbert.value(i) - pieces[i].dim()).sum();
    let len_tilde_over_f = (0..r).map(|i| deg - pieces[i].dim()).sum();
    Ok(ConductorProfile {
        pieces,
        point_degrees,
        len_tilde_over_r,
        len_r_over_f,
        len_tilde_over_f,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CbReport {
    pub is_cb: bool,
    pub point_degrees: Option<Vec<usize>>,
    /// For reduced schemes: whether `HF(ϑ_X)(n·r_X − n) = 0`, which forces CB.
    pub kaehler_sufficient: Option<bool>,
    pub consistency_failures: Vec<String>,
}

/// CB iff the conductor has no elements below degree `r_X`.
pub fn cb_test(x: &SchemeSpec) -> Result<CbReport> {
    let cond = conductor(x)?;
    let kaehler = if x.is_reduced() {
        Some(crate::different::kaehler_different(x)?)
    } else {
        None
    };
    Ok(cb_report(x, &cond, kaehler.as_ref()))
}

pub(crate) fn cb_report(
    x: &SchemeSpec,
    cond: &ConductorProfile,
    kaehler: Option<&crate::different::GradedIdealView>,
) -> CbReport {
    let r = x.regularity_index();
    let is_cb = cond.pieces[..r].iter().all(|p| p.is_zero());
    let mut failures = Vec::new();
    if let Some(ds) = &cond.point_degrees {
        if ds.iter().any(|&d| d > r) {
            failures.push(format!("point degree above r_X: {ds:?}"));
        }
        if is_cb != ds.iter().all(|&d| d == r) {
            failures.push(format!("CB ({is_cb}) disagrees with point degrees {ds:?}"));
        }
    }
    let kaehler_sufficient = match kaehler {
        Some(k) if r >= 1 => Some(k.value(x.n * r - x.n) == 0),
        _ => None,
    };
    if kaehler_sufficient == Some(true) && !is_cb {
        failures.push("HF(ϑ_X)(n·r_X − n) = 0 but the conductor is nonzero below r_X".into());
    }
    CbReport {
        is_cb,
        point_degrees: cond.point_degrees.clone(),
        kaehler_sufficient,
        consistency_failures: failures,
    }
}

#[cfg(test)]
mod tests;
