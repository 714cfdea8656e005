use crate::error::{Error, Result};
use crate::linalg::{Matrix, Vector};
use crate::poly::{jacobian_minors, Monomial, Polynomial};
use crate::scheme::{binomial, BoundaryCase, SchemeSpec};

use super::cb_test;

/// Outcome of the evaluation-matrix test for CB on reduced rational point
/// sets in generic position with `r_X = α_X`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankCriterion {
    /// `dim (I_X)_α`.
    pub t: usize,
    /// Number of `n`-minors, `C(t, n)`.
    pub delta: usize,
    pub rank: usize,
    /// Rank of the matrix augmented by the `j`-th unit column, per point.
    pub augmented_ranks: Vec<usize>,
    pub sufficient_cb: bool,
    /// Whether the criterion is also necessary (`n = 2` or `(n, r_X) = (3, 2)`).
    pub is_equivalence: bool,
    pub cb: bool,
    pub consistent: bool,
}

/// A basis of `(I_X)_d`: kernel of the map from degree-`d` monomials to `S`.
pub(crate) fn ideal_degree_basis(x: &SchemeSpec, d: usize) -> Vec<Polynomial> {
    let ring = x.ring();
    let monomials = degree_monomials(ring.nvars, d);
    let cols: Vec<Vector> = monomials.iter().map(|m| x.affine_vector(&ring.monomial(m.clone()))).collect();
    let m = Matrix::from_columns(x.field, x.s.dim(), &cols);
    m.kernel()
        .into_iter()
        .map(|k| {
            let terms = monomials
                .iter()
                .zip(k)
                .filter(|(_, c)| !c.is_zero())
                .map(|(m, c)| (m.clone(), c))
                .collect();
            Polynomial::from_terms(ring, terms)
        })
        .collect()
}

fn degree_monomials(nvars: usize, d: usize) -> Vec<Monomial> {
    fn rec(nvars: usize, i: usize, left: usize, cur: &mut Vec<u16>, out: &mut Vec<Monomial>) {
        if i + 1 == nvars {
            cur.push(left as u16);
            out.push(Monomial::from_exponents(cur.iter().copied()));
            cur.pop();
            return;
        }
        for e in (0..=left).rev() {
            cur.push(e as u16);
            rec(nvars, i + 1, left - e, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(nvars, 0, d, &mut Vec::new(), &mut out);
    out
}

pub fn cb_rank_criterion(x: &SchemeSpec) -> Result<RankCriterion> {
    let n = x.n;
    if !x.has_rational_support() || !x.is_reduced() {
        return Err(Error::Hypothesis("the rank criterion needs a set of reduced K-rational points".into()));
    }
    let gp = x.generic_position_check();
    let r = x.regularity_index();
    let alpha = gp.alpha;
    if !gp.is_generic || gp.boundary_case != BoundaryCase::StrictlyBetween || r != alpha || alpha < 2 {
        return Err(Error::Hypothesis(format!(
            "the rank criterion needs generic position with r_X = α_X >= 2 (r_X = {r}, α_X = {alpha}, generic: {})",
            gp.is_generic
        )));
    }
    let t = binomial(n + alpha, n) - x.degree();
    if t < n {
        return Err(Error::Hypothesis(format!("t = {t} is smaller than n = {n}")));
    }
    let forms = ideal_degree_basis(x, alpha);
    if forms.len() != t {
        return Err(Error::Internal(format!("(I_X)_α has dimension {}, expected {t}", forms.len())));
    }
    let vars: Vec<usize> = (1..=n).collect();
    let minors = jacobian_minors(&forms, &vars);
    let delta = minors.len();
    let s = x.components.len();
    let mut rows = Vec::with_capacity(s);
    for c in &x.components {
        let p = c.coords.as_ref().ok_or_else(|| Error::Internal("rational point without coordinates".into()))?;
        rows.push(minors.iter().map(|h| h.evaluate(p)).collect::<Result<Vec<_>>>()?);
    }
    let a = Matrix::from_rows(x.field, delta, rows.clone());
    let rank = a.rank();
    let augmented_ranks: Vec<usize> = (0..s)
        .map(|j| {
            let aug: Vec<Vector> = rows
                .iter()
                .enumerate()
                .map(|(k, row)| {
                    let mut row = row.clone();
                    row.push(if k == j { x.field.one() } else { x.field.zero() });
                    row
                })
                .collect();
            Matrix::from_rows(x.field, delta + 1, aug).rank()
        })
        .collect();
    let sufficient_cb = augmented_ranks.iter().all(|&k| k > rank);
    let is_equivalence = n == 2 || (n == 3 && r == 2);
    let cb = cb_test(x)?.is_cb;
    let consistent = if is_equivalence { sufficient_cb == cb } else { !sufficient_cb || cb };
    Ok(RankCriterion {
        t,
        delta,
        rank,
        augmented_ranks,
        sufficient_cb,
        is_equivalence,
        cb,
        consistent,
    })
}
