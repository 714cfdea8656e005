use crate::error::{Error, Result};
use crate::groebner::IdealHandle;
use crate::poly::{jacobian_minors, Polynomial};
use crate::scheme::SchemeSpec;

use super::{graded_ideal_hilbert, GradedIdealView};

/// All `n`-minors of the Jacobian of `gens` with respect to `X1..Xn`, zeros kept.
pub fn kaehler_minors(x: &SchemeSpec, gens: &[Polynomial]) -> Vec<Polynomial> {
    let vars: Vec<usize> = (1..=x.n).collect();
    jacobian_minors(gens, &vars)
}

/// The Kähler different `ϑ_X`, generated by the minors of the Jacobian of the
/// reduced Gröbner basis of `I_X`.
pub fn kaehler_different(x: &SchemeSpec) -> Result<GradedIdealView> {
    kaehler_different_of(x, &x.i_x.groebner_basis())
}

/// `ϑ_X` from an arbitrary homogeneous generating set of `I_X`.
pub fn kaehler_different_of(x: &SchemeSpec, gens: &[Polynomial]) -> Result<GradedIdealView> {
    let minors: Vec<Polynomial> = kaehler_minors(x, gens).into_iter().filter(|m| !x.i_x.contains(m)).collect();
    log::debug!("Kähler different: {} nonzero minors from {} generators", minors.len(), gens.len());
    graded_ideal_hilbert(x, &minors)
}

/// Recomputes `ϑ_X` from the generators the scheme was built from and checks
/// that both routes give the same ideal. `None` when no such generators exist.
pub fn kaehler_cross_check(x: &SchemeSpec) -> Result<Option<bool>> {
    let Some(gens) = x.input_generators.as_ref() else { return Ok(None) };
    let a = kaehler_different(x)?;
    let b = kaehler_different_of(x, gens)?;
    Ok(Some(a.same_ideal(&b)))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineKaehler {
    /// `dim_K ϑ_X(S/K)`.
    pub affine_dim: usize,
    /// Whether the Kähler different of `R/⟨x0⟩` is nonzero.
    pub reduced_nonzero: bool,
}

pub fn affine_and_reduced_kaehler(x: &SchemeSpec) -> Result<AffineKaehler> {
    let minors = kaehler_minors(x, &x.i_x.groebner_basis());
    let vectors: Vec<_> = minors.iter().map(|m| x.affine_vector(m)).collect();
    let affine_dim = x.s.ideal_span(&vectors).dim();
    let mut gens = x.i_x.groebner_basis();
    gens.push(x.ring().var(0));
    let artinian = IdealHandle::new(x.ring(), gens)?;
    let reduced_nonzero = minors.iter().any(|m| !artinian.contains(m));
    Ok(AffineKaehler {
        affine_dim,
        reduced_nonzero,
    })
}

/// Local Kähler different at one component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalDifferentReport {
    /// `dim_K ϑ_X(O_j/K)`.
    pub kaehler_local_dim: usize,
    pub is_ci_point: bool,
    pub is_gorenstein_point: bool,
    pub socle_dim_over_residue: usize,
    pub kappa: usize,
}

pub fn local_kaehler_different(x: &SchemeSpec, j: usize) -> Result<LocalDifferentReport> {
    let local = x.local_ring(j)?;
    let minors = kaehler_minors(x, &x.i_x.groebner_basis());
    let vectors: Vec<_> = minors.iter().map(|m| local.algebra.vector_of(&m.dehomogenize())).collect();
    let dim = local.algebra.ideal_span(&vectors).dim();
    let report = LocalDifferentReport {
        kaehler_local_dim: dim,
        is_ci_point: dim > 0,
        is_gorenstein_point: local.is_gorenstein(),
        socle_dim_over_residue: local.socle_dim_over_residue(),
        kappa: local.kappa,
    };
    // the local different is either zero or a copy of the residue field
    if report.is_ci_point && dim != local.kappa {
        return Err(Error::Internal(format!(
            "local Kähler different at component {j} has dimension {dim}, residue degree {}",
            local.kappa
        )));
    }
    Ok(report)
}
