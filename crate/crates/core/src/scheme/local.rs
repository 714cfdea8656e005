//! Local rings of a 0-dimensional scheme at its points.

use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::groebner::IdealHandle;
use crate::linalg::{Subspace, Vector};
use crate::poly::{Polynomial, Ring};

use super::algebra::FiniteAlgebra;

/// `O = K[x]/Q` for an affine primary ideal `Q`, with its maximal ideal,
/// residue field degree and socle.
#[derive(Clone, Debug)]
pub struct LocalRing {
    pub algebra: FiniteAlgebra,
    /// Generators of the radical of `Q` (affine).
    pub radical: Vec<Polynomial>,
    pub maximal_ideal: Subspace,
    /// `dim_K O/m`.
    pub kappa: usize,
    /// `dim_K O`.
    pub length: usize,
    /// `Ann_O(m)`.
    pub socle: Subspace,
    /// Lift of a basis of `O/m` from the standard basis of `O`.
    pub residue_basis: Vec<Vector>,
}

impl LocalRing {
    /// `point` (affine coordinates) is used as the radical when known.
    pub fn new(primary: IdealHandle, point: Option<&[Scalar]>) -> Result<Self> {
        let algebra = FiniteAlgebra::new(primary)?;
        if algebra.dim() == 0 {
            return Err(Error::InvalidInput("component has an empty affine part".into()));
        }
        let ring = algebra.ring();
        let radical = match point {
            Some(p) => point_ideal(ring, p),
            None => seidenberg_radical(&algebra),
        };
        let rad_vectors: Vec<Vector> = radical.iter().map(|g| algebra.vector_of(g)).collect();
        let maximal_ideal = algebra.ideal_span(&rad_vectors);
        if maximal_ideal.dim() == algebra.dim() {
            return Err(Error::InvalidInput("the given point does not lie on the primary component".into()));
        }
        let kappa = algebra.dim() - maximal_ideal.dim();
        let socle = algebra.annihilator(maximal_ideal.basis());
        let mut lifted = maximal_ideal.clone();
        let mut residue_basis = Vec::new();
        for b in 0..algebra.dim() {
            let e = algebra.unit(b);
            if lifted.insert(&e) {
                residue_basis.push(e);
            }
        }
        debug_assert_eq!(residue_basis.len(), kappa);
        Ok(LocalRing {
            length: algebra.dim(),
            algebra,
            radical,
            maximal_ideal,
            kappa,
            socle,
            residue_basis,
        })
    }

    /// Gorenstein iff the socle is one-dimensional over the residue field.
    pub fn is_gorenstein(&self) -> bool {
        self.socle.dim() == self.kappa
    }

    pub fn is_reduced(&self) -> bool {
        self.maximal_ideal.is_zero()
    }

    /// Socle dimension divided by `κ` (an integer for local rings).
    pub fn socle_dim_over_residue(&self) -> usize {
        self.socle.dim() / self.kappa.max(1)
    }

    /// A rational point of the support, when the residue field is `K`.
    pub fn rational_point(&self) -> Option<Vec<Scalar>> {
        if self.kappa != 1 {
            return None;
        }
        let ring = self.algebra.ring();
        let f = ring.field;
        let mut coords = vec![f.one()];
        let one = self.maximal_ideal.reduce(&self.algebra.one());
        let p = one.iter().position(|x| !x.is_zero())?;
        let inv = one[p].inv()?;
        for i in 1..ring.nvars {
            // O/m is one-dimensional, so x_i reduces to a multiple of 1
            let r = self.maximal_ideal.reduce(&self.algebra.vector_of(&ring.var(i)));
            coords.push(&r[p] * &inv);
        }
        Some(coords)
    }
}

/// `⟨x_i - a_i⟩` for an affine point `a = (1, a_1, ..., a_n)` or `(a_1, ..., a_n)`.
pub fn point_ideal(ring: Ring, point: &[Scalar]) -> Vec<Polynomial> {
    let offset = point.len() + 1 - ring.nvars;
    (1..ring.nvars)
        .map(|i| &ring.var(i) - &ring.constant(point[i - 1 + offset].clone()))
        .collect()
}

/// Radical of a 0-dimensional ideal: add the squarefree part of each
/// variable's minimal polynomial.
pub fn seidenberg_radical(algebra: &FiniteAlgebra) -> Vec<Polynomial> {
    let ring = algebra.ring();
    let mut gens: Vec<Polynomial> = algebra.ideal().groebner_basis();
    for i in 1..ring.nvars {
        let x = algebra.vector_of(&ring.var(i));
        let mp = algebra.minimal_polynomial(&x);
        let sq = univariate::squarefree_part(&mp);
        if sq.len() < mp.len() {
            gens.push(univariate::to_polynomial(ring, i, &sq));
        }
    }
    IdealHandle::new(ring, gens).expect("same ring").groebner_basis()
}

pub mod univariate {
    //! Dense univariate polynomials, coefficients from the constant term up.

    use crate::field::Scalar;
    use crate::poly::{Monomial, Polynomial, Ring};

    fn trim(mut a: Vec<Scalar>) -> Vec<Scalar> {
        while a.last().is_some_and(Scalar::is_zero) {
            a.pop();
        }
        a
    }

    pub fn derivative(a: &[Scalar]) -> Vec<Scalar> {
        if a.is_empty() {
            return Vec::new();
        }
        let f = a[0].field();
        trim(a.iter().enumerate().skip(1).map(|(k, c)| c * &f.from_i64(k as i64)).collect())
    }

    /// Remainder of `a` modulo `b` (b nonzero).
    pub fn rem(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        let mut r = trim(a.to_vec());
        let b = trim(b.to_vec());
        let lead_inv = b.last().expect("nonzero divisor").inv().expect("nonzero");
        while r.len() >= b.len() && !r.is_empty() {
            let shift = r.len() - b.len();
            let c = r.last().expect("nonempty") * &lead_inv;
            for (k, bk) in b.iter().enumerate() {
                r[shift + k] = &r[shift + k] - &(&c * bk);
            }
            r = trim(r);
        }
        r
    }

    pub fn quotient(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        let mut r = trim(a.to_vec());
        let b = trim(b.to_vec());
        let f = b[0].field();
        let lead_inv = b.last().expect("nonzero divisor").inv().expect("nonzero");
        if r.len() < b.len() {
            return Vec::new();
        }
        let mut q = vec![f.zero(); r.len() - b.len() + 1];
        while r.len() >= b.len() && !r.is_empty() {
            let shift = r.len() - b.len();
            let c = r.last().expect("nonempty") * &lead_inv;
            for (k, bk) in b.iter().enumerate() {
                r[shift + k] = &r[shift + k] - &(&c * bk);
            }
            q[shift] = c;
            r = trim(r);
        }
        trim(q)
    }

    pub fn monic(a: &[Scalar]) -> Vec<Scalar> {
        let a = trim(a.to_vec());
        match a.last() {
            None => a,
            Some(l) => {
                let inv = l.inv().expect("nonzero");
                a.iter().map(|c| c * &inv).collect()
            }
        }
    }

    pub fn gcd(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        let (mut x, mut y) = (trim(a.to_vec()), trim(b.to_vec()));
        while !y.is_empty() {
            let r = rem(&x, &y);
            x = y;
            y = r;
        }
        monic(&x)
    }

    /// `a / gcd(a, a')`, monic.
    pub fn squarefree_part(a: &[Scalar]) -> Vec<Scalar> {
        let d = derivative(a);
        if d.is_empty() {
            return monic(a);
        }
        monic(&quotient(a, &gcd(a, &d)))
    }

    pub fn to_polynomial(ring: Ring, var: usize, a: &[Scalar]) -> Polynomial {
        let terms = a
            .iter()
            .enumerate()
            .map(|(k, c)| (Monomial::one(ring.nvars).with_exponent(var, k as u16), c.clone()))
            .collect();
        Polynomial::from_terms(ring, terms)
    }
}
