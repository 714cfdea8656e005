//! Vanishing ideal of a union of local components, computed directly from the
//! product of their coordinate algebras (Buchberger–Möller style).

use std::collections::hash_map::Entry;
use std::collections::{BTreeSet, HashMap};

use crate::field::Scalar;
use crate::linalg::{axpy, Matrix, Vector};
use crate::poly::{Monomial, MonomialOrder, Polynomial, Ring};

use super::algebra::FiniteAlgebra;

/// Monomial wrapper ordered by `DegRevLex` so a `BTreeSet` pops the smallest.
#[derive(Clone, PartialEq, Eq)]
struct Ordered(Monomial);

impl PartialOrd for Ordered {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Ordered {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        MonomialOrder::DegRevLex.cmp(&self.0, &other.0)
    }
}

/// Echelon rows `image` with the combination of standard monomials producing them.
#[derive(Default)]
struct Echelon {
    rows: Vec<(usize, Vector, Vector)>,
}

impl Echelon {
    /// Reduces `(v, comb)` against the rows; returns the remainder.
    fn reduce(&self, mut v: Vector, mut comb: Vector) -> (Vector, Vector) {
        for (p, row, rc) in &self.rows {
            if !v[*p].is_zero() {
                let c = -&v[*p];
                axpy(&mut v, &c, row);
                axpy(&mut comb, &c, rc);
            }
        }
        (v, comb)
    }

    fn push(&mut self, v: Vector, comb: Vector) {
        let p = v.iter().position(|x| !x.is_zero()).expect("nonzero row");
        let inv = v[p].inv().expect("nonzero pivot");
        let v: Vector = v.iter().map(|x| x * &inv).collect();
        let comb: Vector = comb.iter().map(|x| x * &inv).collect();
        // keep earlier rows reduced at the new pivot
        for (_, row, rc) in self.rows.iter_mut() {
            if !row[p].is_zero() {
                let c = -&row[p];
                axpy(row, &c, &v);
                axpy(rc, &c, &comb);
            }
        }
        self.rows.push((p, v, comb));
    }
}

pub(crate) struct VanishingIdeal {
    /// Reduced `DegRevLex` Gröbner basis of the affine ideal.
    pub basis: Vec<Polynomial>,
    /// Standard monomials in increasing order.
    pub standard: Vec<Monomial>,
    /// Columns are the images of the standard monomials in `⊕ O_j`.
    pub phi: Matrix,
}

/// Computes the kernel of `K[x1..xn] -> ⊕ O_j`.
pub(crate) fn vanishing_ideal(ring: Ring, parts: &[&FiniteAlgebra]) -> VanishingIdeal {
    let field = ring.field;
    let total: usize = parts.iter().map(|a| a.dim()).sum();
    let offsets: Vec<usize> = parts
        .iter()
        .scan(0, |acc, a| {
            let o = *acc;
            *acc += a.dim();
            Some(o)
        })
        .collect();
    // image of x_i * (image), blockwise
    let times_var = |i: usize, v: &[Scalar]| -> Vector {
        let mut out = Vec::with_capacity(total);
        for (a, &o) in parts.iter().zip(&offsets) {
            out.extend(a.var_matrix(i).mul_vec(&v[o..o + a.dim()]));
        }
        out
    };
    let mut one = Vec::with_capacity(total);
    for a in parts {
        one.extend(a.one());
    }

    let mut standard: Vec<Monomial> = Vec::new();
    let mut images: HashMap<Monomial, Vector> = HashMap::new();
    let mut leading: Vec<Monomial> = Vec::new();
    let mut basis: Vec<Polynomial> = Vec::new();
    let mut ech = Echelon::default();
    let mut queue: BTreeSet<Ordered> = BTreeSet::new();
    queue.insert(Ordered(Monomial::one(ring.nvars)));
    let mut pending: HashMap<Monomial, Vector> = HashMap::new();
    pending.insert(Monomial::one(ring.nvars), one);

    while let Some(Ordered(t)) = queue.pop_first() {
        let img = pending.remove(&t).expect("queued monomial has an image");
        if leading.iter().any(|l| l.divides(&t)) {
            continue;
        }
        // combinations are indexed by standard monomial; slot `k` is `t` itself
        let k = standard.len();
        let mut comb = vec![field.zero(); total + 1];
        comb[k] = field.one();
        let (rem, comb) = ech.reduce(img.clone(), comb);
        if rem.iter().all(|x| x.is_zero()) {
            // t + Σ comb_s s vanishes on every component
            let mut terms: Vec<(Monomial, Scalar)> = vec![(t.clone(), field.one())];
            for (s, c) in standard.iter().zip(&comb) {
                if !c.is_zero() {
                    terms.push((s.clone(), c.clone()));
                }
            }
            basis.push(Polynomial::from_terms(ring, terms));
            leading.push(t);
            continue;
        }
        ech.push(rem, comb);
        images.insert(t.clone(), img.clone());
        standard.push(t.clone());
        for i in 1..ring.nvars {
            let next = t.with_exponent(i, t.exponent(i) + 1);
            if let Entry::Vacant(e) = pending.entry(next.clone()) {
                e.insert(times_var(i, &img));
                queue.insert(Ordered(next));
            }
        }
    }
    let cols: Vec<Vector> = standard.iter().map(|s| images[s].clone()).collect();
    let phi = Matrix::from_columns(field, total, &cols);
    VanishingIdeal { basis, standard, phi }
}
