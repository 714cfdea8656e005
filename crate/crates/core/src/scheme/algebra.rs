//! Finite-dimensional quotient algebras `K[x1..xn]/J` with explicit
//! multiplication matrices.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::groebner::IdealHandle;
use crate::linalg::{axpy, Matrix, Subspace, Vector};
use crate::poly::{Monomial, Polynomial, Ring};

/// `K[x]/J` for a 0-dimensional affine ideal `J`, in the basis of standard
/// monomials (sorted by degree, then ascending `DegRevLex`).
#[derive(Clone, Debug)]
pub struct FiniteAlgebra {
    ideal: IdealHandle,
    basis: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
    /// `var_mult[i - 1]` is multiplication by `x_i`.
    var_mult: Vec<Matrix>,
    /// `mono_mult[b]` is multiplication by the basis monomial `b`.
    mono_mult: Vec<Matrix>,
}

impl FiniteAlgebra {
    pub fn new(ideal: IdealHandle) -> Result<Self> {
        let ring = ideal.ring();
        let q = ideal.quotient_basis(None);
        if !q.finite {
            return Err(Error::NotZeroDimensional("affine quotient is infinite".into()));
        }
        let basis = q.standard_monomials;
        let index: HashMap<Monomial, usize> = basis.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        let mut alg = FiniteAlgebra {
            ideal,
            basis,
            index,
            var_mult: Vec::new(),
            mono_mult: Vec::new(),
        };
        let field = ring.field;
        let dim = alg.basis.len();
        alg.var_mult = (1..ring.nvars)
            .map(|i| {
                let cols: Vec<Vector> = alg
                    .basis
                    .iter()
                    .map(|b| alg.vector_of(&ring.monomial(b.with_exponent(i, b.exponent(i) + 1))))
                    .collect();
                Matrix::from_columns(field, dim, &cols)
            })
            .collect();
        let mut mono: Vec<Matrix> = Vec::with_capacity(dim);
        for b in &alg.basis {
            let m = match (1..ring.nvars).find(|&i| b.exponent(i) > 0) {
                None => Matrix::identity(field, dim),
                Some(i) => {
                    let prev = b.with_exponent(i, b.exponent(i) - 1);
                    alg.var_mult[i - 1].mul(&mono[alg.index[&prev]])
                }
            };
            mono.push(m);
        }
        alg.mono_mult = mono;
        Ok(alg)
    }

    pub fn ideal(&self) -> &IdealHandle {
        &self.ideal
    }

    pub fn ring(&self) -> Ring {
        self.ideal.ring()
    }

    pub fn field(&self) -> Field {
        self.ideal.ring().field
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Monomial] {
        &self.basis
    }

    pub fn index_of(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }

    pub fn var_matrix(&self, i: usize) -> &Matrix {
        &self.var_mult[i - 1]
    }

    pub fn monomial_matrix(&self, b: usize) -> &Matrix {
        &self.mono_mult[b]
    }

    pub fn zero(&self) -> Vector {
        vec![self.field().zero(); self.dim()]
    }

    pub fn one(&self) -> Vector {
        self.unit(0)
    }

    pub fn unit(&self, b: usize) -> Vector {
        let mut v = self.zero();
        v[b] = self.field().one();
        v
    }

    /// Coordinates of the residue class of an affine polynomial.
    pub fn vector_of(&self, f: &Polynomial) -> Vector {
        let nf = self.ideal.normal_form(f);
        let mut v = self.zero();
        for (m, c) in nf.terms() {
            v[self.index[m]] = c.clone();
        }
        v
    }

    /// The affine polynomial `Σ v_b b`.
    pub fn polynomial_of(&self, v: &[Scalar]) -> Polynomial {
        let terms = self
            .basis
            .iter()
            .zip(v)
            .filter(|(_, c)| !c.is_zero())
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect();
        Polynomial::from_terms(self.ring(), terms)
    }

    /// Matrix of multiplication by `u`.
    pub fn mult_matrix(&self, u: &[Scalar]) -> Matrix {
        let mut out = Matrix::zeros(self.field(), self.dim(), self.dim());
        for (b, c) in u.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mb = &self.mono_mult[b];
            for i in 0..self.dim() {
                axpy(out.row_mut(i), c, mb.row(i));
            }
        }
        out
    }

    pub fn mul(&self, u: &[Scalar], v: &[Scalar]) -> Vector {
        let mut out = self.zero();
        for (b, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let ub = self.mono_mult[b].mul_vec(u);
            axpy(&mut out, c, &ub);
        }
        out
    }

    /// `u * b` for the basis monomial `b`.
    pub fn mul_basis(&self, u: &[Scalar], b: usize) -> Vector {
        self.mono_mult[b].mul_vec(u)
    }

    /// The ideal of the algebra generated by `gens`, as a subspace.
    pub fn ideal_span(&self, gens: &[Vector]) -> Subspace {
        let mut sp = Subspace::zero(self.field(), self.dim());
        for g in gens {
            for b in 0..self.dim() {
                sp.insert(&self.mul_basis(g, b));
            }
        }
        sp
    }

    /// Closure of a subspace under multiplication by the algebra.
    pub fn ideal_closure(&self, sub: &Subspace) -> Subspace {
        self.ideal_span(sub.basis())
    }

    /// Annihilator `{v : v·g = 0 for all g}` as a subspace.
    pub fn annihilator(&self, gens: &[Vector]) -> Subspace {
        let dim = self.dim();
        let mut rows: Vec<Vector> = Vec::new();
        for g in gens {
            rows.extend(self.mult_matrix(g).rows().iter().cloned());
        }
        if rows.is_empty() {
            return Subspace::full(self.field(), dim);
        }
        let m = Matrix::from_rows(self.field(), dim, rows);
        Subspace::span(self.field(), dim, m.kernel())
    }

    /// Minimal polynomial of `u`, coefficients from the constant term up, monic.
    pub fn minimal_polynomial(&self, u: &[Scalar]) -> Vec<Scalar> {
        let f = self.field();
        let mut powers: Vec<Vector> = vec![self.one()];
        loop {
            let next = self.mul(powers.last().expect("nonempty"), u);
            let m = Matrix::from_columns(f, self.dim(), &powers);
            if let Some(c) = m.solve(&next) {
                let mut coeffs: Vec<Scalar> = c.iter().map(|x| -x).collect();
                coeffs.push(f.one());
                return coeffs;
            }
            powers.push(next);
        }
    }
}
