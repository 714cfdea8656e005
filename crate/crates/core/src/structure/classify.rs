use crate::different::{
    affine_and_reduced_kaehler, graded_ideal_hilbert, kaehler_different, local_kaehler_different, noether_different,
    GradedIdealView,
};
use crate::error::{Error, Result};
use crate::groebner::IdealHandle;
use crate::poly::Polynomial;
use crate::scheme::{binomial, local, BoundaryCase, FiniteAlgebra, SchemeSpec};

use super::{cb_report, conductor, ConductorProfile};

/// One criterion for a property: whether its hypotheses hold and what it says.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Route {
    pub name: &'static str,
    pub applicable: bool,
    pub value: bool,
}

impl Route {
    fn new(name: &'static str, applicable: bool, value: bool) -> Self {
        Route { name, applicable, value }
    }
}

#[derive(Clone, Debug)]
pub struct ClassificationReport {
    pub is_generic: bool,
    pub is_cb: bool,
    pub point_degrees: Option<Vec<usize>>,
    pub is_locally_gorenstein: bool,
    pub locally_gorenstein_routes: Vec<Route>,
    pub is_arith_gorenstein: bool,
    /// First applicable route that certified arithmetic Gorensteinness.
    pub arith_gorenstein_criterion: Option<&'static str>,
    pub arith_gorenstein_routes: Vec<Route>,
    pub is_locally_ci: bool,
    pub locally_ci_routes: Vec<Route>,
    pub is_ci: bool,
    /// `HF(ϑ_X)(r_X)`.
    pub ci_witness: usize,
    pub ci_routes: Vec<Route>,
    /// `HF(ϑ_N)(r_X)`.
    pub noether_at_r: usize,
    /// `(ℓ(R̃/R), ℓ(R/𝔉))`.
    pub ags_lengths: (usize, usize),
    /// `Σ_j dim_K K(p_j)`.
    pub residue_degree_sum: usize,
    pub consistency_failures: Vec<String>,
}

/// `Σ κ_j`, read off the components or, for raw input, from `dim S/rad(S)`.
fn residue_degree_sum(x: &SchemeSpec) -> Result<usize> {
    if x.has_components() {
        return Ok(x.components.iter().map(|c| c.kappa()).sum());
    }
    let rad = IdealHandle::new(x.affine_ring(), local::seidenberg_radical(&x.s))?;
    Ok(FiniteAlgebra::new(rad)?.dim())
}

/// Routes that apply must agree with each other and with `expected`.
fn check_routes(label: &str, expected: bool, routes: &[Route], failures: &mut Vec<String>) {
    for r in routes.iter().filter(|r| r.applicable) {
        if r.value != expected {
            failures.push(format!("{label}: route {} gives {}, expected {expected}", r.name, r.value));
        }
    }
}

pub fn classify(x: &SchemeSpec) -> Result<ClassificationReport> {
    let kaehler = kaehler_different(x)?;
    let noether = noether_different(x)?;
    let cond = conductor(x)?;
    classify_with(x, &kaehler, &noether, &cond)
}

/// Classification from precomputed differents and conductor.
pub fn classify_with(
    x: &SchemeSpec,
    kaehler: &GradedIdealView,
    noether: &GradedIdealView,
    cond: &ConductorProfile,
) -> Result<ClassificationReport> {
    let n = x.n;
    let r = x.regularity_index();
    let mut failures = Vec::new();
    let gp = x.generic_position_check();
    let cb = cb_report(x, cond, if x.is_reduced() { Some(kaehler) } else { None });
    failures.extend(cb.consistency_failures.iter().cloned());
    let is_cb = cb.is_cb;
    let kappa_sum = residue_degree_sum(x)?;

    if gp.is_generic && r * x.degree() < 2 * x.hilbert.sum_below_regularity() {
        failures.push("generic position but r_X·deg < 2·Σ_{i<r_X} HF(i)".into());
    }
    if cond.len_tilde_over_f != cond.len_tilde_over_r + cond.len_r_over_f {
        failures.push("conductor lengths are not additive".into());
    }

    // local Gorenstein
    let locals = if x.has_components() {
        Some((0..x.components.len()).map(|j| local_kaehler_different(x, j)).collect::<Result<Vec<_>>>()?)
    } else {
        None
    };
    let lg_socle = locals.as_ref().map(|ls| ls.iter().all(|l| l.is_gorenstein_point));
    let lg_hp = noether.hp == kappa_sum;
    let is_lg = lg_socle.unwrap_or(lg_hp);
    let locally_gorenstein_routes = vec![
        Route::new("socle", lg_socle.is_some(), lg_socle.unwrap_or(false)),
        Route::new("noether-hilbert-polynomial", true, lg_hp),
    ];
    check_routes("locally Gorenstein", is_lg, &locally_gorenstein_routes, &mut failures);

    // local complete intersection
    let lci_point = locals.as_ref().map(|ls| ls.iter().all(|l| l.is_ci_point));
    let lci_hp = kaehler.hp == kappa_sum;
    let is_lci = lci_point.unwrap_or(if n >= 2 { lci_hp } else { true });
    let locally_ci_routes = vec![
        Route::new("local-kaehler", lci_point.is_some(), lci_point.unwrap_or(false)),
        Route::new("kaehler-hilbert-polynomial", n >= 2, lci_hp),
    ];
    check_routes("locally CI", is_lci, &locally_ci_routes, &mut failures);
    if let Some(ls) = &locals {
        for (j, l) in ls.iter().enumerate() {
            if l.is_ci_point && !l.is_gorenstein_point {
                failures.push(format!("component {j} is a CI point but not Gorenstein"));
            }
        }
    }

    // arithmetically Gorenstein
    let noether_at_r = noether.value(r);
    let symmetric = x.hilbert.is_symmetric();
    let equal_lengths = cond.len_tilde_over_r == cond.len_r_over_f;
    let arith_gorenstein_routes = vec![
        Route::new("noether-different", true, is_cb && is_lg && noether_at_r != 0),
        Route::new("noether-hilbert-polynomial", true, is_cb && lg_hp && noether_at_r != 0),
        Route::new("symmetric-hilbert-function", true, is_cb && is_lg && symmetric),
        Route::new("apery-gorenstein-samuel", is_lg && gp.is_generic, equal_lengths),
        Route::new("cb-and-lengths", is_lg, is_cb && equal_lengths),
    ];
    let is_ag = arith_gorenstein_routes[0].value;
    check_routes("arithmetically Gorenstein", is_ag, &arith_gorenstein_routes, &mut failures);
    let arith_gorenstein_criterion = arith_gorenstein_routes
        .iter()
        .find(|r| r.applicable && r.value)
        .map(|r| r.name);
    if is_ag {
        if !symmetric {
            failures.push("arithmetically Gorenstein with non-symmetric Hilbert function".into());
        }
        if !equal_lengths {
            failures.push("arithmetically Gorenstein with ℓ(R̃/R) ≠ ℓ(R/𝔉)".into());
        }
        let principal_in_r = noether.is_principal() && noether.minimal_generators[0].degree() == Some(r as u32);
        if !principal_in_r || noether.ri > 2 * r {
            failures.push("arithmetically Gorenstein but ϑ_N is not principal in degree r_X with ri <= 2 r_X".into());
        }
    }

    // complete intersection
    let ci_witness = kaehler.value(r);
    let reduced_nonzero = affine_and_reduced_kaehler(x)?.reduced_nonzero;
    let ci_routes = vec![
        Route::new("reduced-kaehler-different", true, reduced_nonzero),
        Route::new("kaehler-at-regularity", true, is_cb && is_lg && ci_witness != 0),
        Route::new("kaehler-hilbert-polynomial", true, is_cb && lci_hp && ci_witness != 0),
    ];
    let is_ci = ci_routes[1].value;
    check_routes("complete intersection", is_ci, &ci_routes, &mut failures);
    if is_ci && !is_ag {
        failures.push("complete intersection but not arithmetically Gorenstein".into());
    }
    if is_ci && !is_lci {
        failures.push("complete intersection but not locally CI".into());
    }
    if is_ci && !kaehler.is_principal() {
        failures.push("complete intersection with non-principal ϑ_X".into());
    }
    if is_ag && !(is_cb && is_lg) {
        failures.push("arithmetically Gorenstein but not a locally Gorenstein CB-scheme".into());
    }
    for f in &failures {
        log::warn!("consistency failure: {f}");
    }
    Ok(ClassificationReport {
        is_generic: gp.is_generic,
        is_cb,
        point_degrees: cond.point_degrees.clone(),
        is_locally_gorenstein: is_lg,
        locally_gorenstein_routes,
        is_arith_gorenstein: is_ag,
        arith_gorenstein_criterion,
        arith_gorenstein_routes,
        is_locally_ci: is_lci,
        locally_ci_routes,
        is_ci,
        ci_witness,
        ci_routes,
        noether_at_r,
        ags_lengths: (cond.len_tilde_over_r, cond.len_r_over_f),
        residue_degree_sum: kappa_sum,
        consistency_failures: failures,
    })
}

/// `𝔉^k` as a homogeneous ideal of `R`.
pub fn conductor_power(x: &SchemeSpec, cond: &ConductorProfile, k: usize) -> Result<GradedIdealView> {
    let mut gens = Vec::new();
    for (i, p) in cond.pieces.iter().enumerate() {
        for v in p.basis() {
            gens.push(x.homogeneous_of(v, i).expect("conductor piece lies in V_i"));
        }
    }
    let base = graded_ideal_hilbert(x, &gens)?;
    let dims = cond.dims();
    if (0..dims.len()).any(|i| base.value(i) != dims[i]) {
        return Err(Error::Internal(format!(
            "conductor pieces {dims:?} differ from the generated ideal {:?}",
            base.hf
        )));
    }
    let mut cur = base.clone();
    for _ in 1..k.max(1) {
        let products: Vec<Polynomial> = cur
            .minimal_generators
            .iter()
            .flat_map(|a| base.minimal_generators.iter().map(move |b| a * b))
            .collect();
        cur = graded_ideal_hilbert(x, &products)?;
    }
    Ok(cur)
}

/// Checks of generic-position characterizations for reduced schemes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenposCheck {
    /// Generic position with `deg = C(n + α − 1, n)`.
    pub generic_boundary: bool,
    /// `HF(ϑ_X)(i) = 0` for `i < n·r_X` and `deg` from `n·r_X` on.
    pub kaehler_pattern: bool,
    /// CB and `ϑ_X = 𝔉^n`.
    pub cb_conductor_power: bool,
    /// The equivalence is claimed for `n >= 2` or a single point.
    pub applicable: bool,
    pub consistent: bool,
    pub common_zeros: Option<CommonZerosCheck>,
}

/// Generic position versus `HF(ϑ_X)(nα − n − 1) = 0` for
/// `C(n+α−1, n) < deg < C(n+α, n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommonZerosCheck {
    pub alpha: usize,
    /// `HF(α) = deg` and `dim (I_X)_α >= n`.
    pub hypotheses_hold: bool,
    pub is_generic: bool,
    pub kaehler_value: usize,
    pub consistent: bool,
}

/// Evaluates the three equivalent conditions. The Prop. 4.10 style check runs
/// only when `assert_common_zeros` states that `n` forms of `(I_X)_α` meet in
/// `α^n` distinct points over some extension field.
pub fn genpos_equivalence_check(x: &SchemeSpec, assert_common_zeros: bool) -> Result<GenposCheck> {
    if !x.is_reduced() {
        return Err(Error::Hypothesis("the scheme is not reduced".into()));
    }
    let n = x.n;
    let r = x.regularity_index();
    let deg = x.degree();
    let gp = x.generic_position_check();
    let generic_boundary = gp.is_generic && gp.boundary_case == BoundaryCase::LowerBinomial;
    let kaehler = kaehler_different(x)?;
    let top = n * r;
    let kaehler_pattern = (0..top).all(|i| kaehler.value(i) == 0) && kaehler.value(top) == deg && kaehler.hp == deg;
    let cond = conductor(x)?;
    let is_cb = cond.pieces[..r].iter().all(|p| p.is_zero());
    let power = conductor_power(x, &cond, n)?;
    let cb_conductor_power = is_cb && power.same_ideal(&kaehler);
    // on the projective line the conditions part ways as soon as deg >= 2
    let applicable = n >= 2 || deg == 1;
    let consistent = !applicable || (generic_boundary == kaehler_pattern && kaehler_pattern == cb_conductor_power);

    let common_zeros = if assert_common_zeros {
        let alpha = (2..=deg + 1).find(|&a| binomial(n + a - 1, n) < deg && deg < binomial(n + a, n));
        alpha.map(|alpha| {
            let dim_ia = binomial(n + alpha, n) - x.hilbert.value(alpha).min(binomial(n + alpha, n));
            let hypotheses_hold = x.hilbert.value(alpha) == deg && dim_ia >= n;
            let kaehler_value = kaehler.value(n * alpha - n - 1);
            let consistent = !hypotheses_hold || gp.is_generic == (kaehler_value == 0);
            CommonZerosCheck {
                alpha,
                hypotheses_hold,
                is_generic: gp.is_generic,
                kaehler_value,
                consistent,
            }
        })
    } else {
        None
    };
    Ok(GenposCheck {
        generic_boundary,
        kaehler_pattern,
        cb_conductor_power,
        applicable,
        consistent,
        common_zeros,
    })
}
