//! Sparse multivariate polynomials over a [`Field`].

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};

use super::monomial::{Monomial, MonomialOrder};

/// Whether a polynomial ring is the projective ring `K[X0..Xn]` or the
/// affine chart `K[X1..Xn]`.
///
/// Both use `n + 1` exponent slots; affine polynomials keep slot 0 at zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RingKind {
    Projective,
    Affine,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Ring {
    pub field: Field,
    /// Number of exponent slots (`n + 1` for `P^n`).
    pub nvars: usize,
    pub kind: RingKind,
}

impl Ring {
    /// `K[X0, ..., Xn]`.
    pub fn projective(field: Field, n: usize) -> Self {
        Ring {
            field,
            nvars: n + 1,
            kind: RingKind::Projective,
        }
    }

    /// `K[X1, ..., Xn]`.
    pub fn affine(field: Field, n: usize) -> Self {
        Ring {
            field,
            nvars: n + 1,
            kind: RingKind::Affine,
        }
    }

    /// Dimension of the ambient projective space.
    pub fn n(&self) -> usize {
        self.nvars - 1
    }

    pub fn with_kind(self, kind: RingKind) -> Self {
        Ring { kind, ..self }
    }

    /// Same field and kind, `extra` additional variables appended.
    pub fn extended(self, extra: usize) -> Self {
        Ring {
            nvars: self.nvars + extra,
            ..self
        }
    }

    pub fn zero(&self) -> Polynomial {
        Polynomial::zero(*self)
    }

    pub fn one(&self) -> Polynomial {
        self.constant(self.field.one())
    }

    pub fn constant(&self, c: Scalar) -> Polynomial {
        Polynomial::from_terms(*self, vec![(Monomial::one(self.nvars), c)])
    }

    pub fn var(&self, i: usize) -> Polynomial {
        assert!(i < self.nvars, "variable X{i} out of range");
        Polynomial::from_terms(*self, vec![(Monomial::variable(self.nvars, i), self.field.one())])
    }

    pub fn monomial(&self, m: Monomial) -> Polynomial {
        Polynomial::from_terms(*self, vec![(m, self.field.one())])
    }

    fn check(&self, other: &Ring) -> Result<()> {
        if self.field != other.field || self.nvars != other.nvars || self.kind != other.kind {
            return Err(Error::RingMismatch(format!("{self:?} vs {other:?}")));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

/// A polynomial stored as a list of terms sorted descending in
/// `DegRevLex` with `X0` last. No stored coefficient is zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    ring: Ring,
    terms: Vec<(Monomial, Scalar)>,
    homogeneous: bool,
}

impl Polynomial {
    pub fn zero(ring: Ring) -> Self {
        Polynomial {
            ring,
            terms: Vec::new(),
            homogeneous: true,
        }
    }

    /// Builds a polynomial from arbitrary terms, merging duplicates and
    /// dropping zeros.
    pub fn from_terms(ring: Ring, terms: Vec<(Monomial, Scalar)>) -> Self {
        let mut acc: HashMap<Monomial, Scalar> = HashMap::with_capacity(terms.len());
        for (m, c) in terms {
            debug_assert_eq!(m.nvars(), ring.nvars);
            debug_assert!(ring.kind == RingKind::Projective || m.exponent(0) == 0);
            acc.entry(m)
                .and_modify(|e| e.add_assign_ref(&c))
                .or_insert(c);
        }
        let terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        Self::from_sorted_unchecked(ring, sort_terms(terms))
    }

    /// Terms must already be sorted descending in `DegRevLex`, distinct and nonzero.
    pub(crate) fn from_sorted_unchecked(ring: Ring, terms: Vec<(Monomial, Scalar)>) -> Self {
        let homogeneous = terms.windows(2).all(|w| w[0].0.degree() == w[1].0.degree());
        Polynomial {
            ring,
            terms,
            homogeneous,
        }
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn field(&self) -> Field {
        self.ring.field
    }

    pub fn terms(&self) -> &[(Monomial, Scalar)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, Scalar)> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.homogeneous
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.first().map(|(m, _)| m.degree())
    }

    /// Leading term with respect to `order`.
    pub fn leading_term(&self, order: MonomialOrder) -> Option<&(Monomial, Scalar)> {
        if order == MonomialOrder::DegRevLex {
            return self.terms.first();
        }
        self.terms.iter().max_by(|a, b| order.cmp(&a.0, &b.0))
    }

    pub fn leading_coefficient(&self) -> Option<&Scalar> {
        self.terms.first().map(|(_, c)| c)
    }

    /// Ring-checked arithmetic.
    pub fn arith(&self, other: &Polynomial, op: ArithOp) -> Result<Polynomial> {
        self.ring.check(&other.ring)?;
        Ok(match op {
            ArithOp::Add => self + other,
            ArithOp::Sub => self - other,
            ArithOp::Mul => self * other,
        })
    }

    pub fn scale(&self, c: &Scalar) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.ring);
        }
        let terms = self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect();
        Polynomial {
            ring: self.ring,
            terms,
            homogeneous: self.homogeneous,
        }
    }

    /// Scales so that the leading coefficient is one.
    pub fn monic(&self) -> Polynomial {
        match self.leading_coefficient() {
            None => self.clone(),
            Some(c) if c.is_one() => self.clone(),
            Some(c) => self.scale(&c.inv().expect("nonzero")),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        // multiplication by a monomial preserves the term order
        let terms = self.terms.iter().map(|(t, c)| (t.mul(m), c.clone())).collect();
        Polynomial {
            ring: self.ring,
            terms,
            homogeneous: self.homogeneous,
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = self.ring.one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Formal partial derivative with respect to `X_i`.
    pub fn partial_derivative(&self, i: usize) -> Polynomial {
        assert!(i < self.ring.nvars, "variable X{i} out of range");
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.exponent(i) > 0)
            .map(|(m, c)| {
                let e = m.exponent(i);
                (m.with_exponent(i, e - 1), c * &self.ring.field.from_i64(e as i64))
            })
            .collect();
        Polynomial::from_terms(self.ring, terms)
    }

    /// Substitutes `point[i]` for `X_i`. For affine polynomials the point may
    /// either list `X1..Xn` or all of `X0..Xn`.
    pub fn evaluate(&self, point: &[Scalar]) -> Result<Scalar> {
        let offset = match (self.ring.kind, point.len()) {
            (_, l) if l == self.ring.nvars => 0,
            (RingKind::Affine, l) if l + 1 == self.ring.nvars => 1,
            (_, l) => {
                return Err(Error::InvalidInput(format!(
                    "point of length {l} for a ring with {} variables",
                    self.ring.nvars
                )))
            }
        };
        let f = self.ring.field;
        let mut acc = f.zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    t = &t * &point[i - offset].pow(e as u32);
                }
            }
            acc.add_assign_ref(&t);
        }
        Ok(acc)
    }

    /// Sets `X0 := 1`, producing an affine polynomial.
    pub fn dehomogenize(&self) -> Polynomial {
        let ring = self.ring.with_kind(RingKind::Affine);
        let terms = self.terms.iter().map(|(m, c)| (m.with_exponent(0, 0), c.clone())).collect();
        Polynomial::from_terms(ring, terms)
    }

    /// Multiplies each term by the power of `X0` reaching the top degree.
    pub fn homogenize(&self) -> Polynomial {
        let ring = self.ring.with_kind(RingKind::Projective);
        let top = self.terms.iter().map(|(m, _)| m.degree()).max().unwrap_or(0);
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let e0 = m.exponent(0) as u32 + top - m.degree();
                (m.with_exponent(0, e0 as u16), c.clone())
            })
            .collect();
        Polynomial::from_terms(ring, terms)
    }

    /// Reinterprets the polynomial in `ring`, moving variable `i` to slot `map[i]`.
    pub fn remap(&self, ring: Ring, map: &[usize]) -> Polynomial {
        let terms = self.terms.iter().map(|(m, c)| (m.remap(ring.nvars, map), c.clone())).collect();
        Polynomial::from_terms(ring, terms)
    }

    /// Replaces each variable `X_i` by the polynomial `images[i]`.
    pub fn substitute(&self, ring: Ring, images: &[Polynomial]) -> Polynomial {
        let mut acc = ring.zero();
        for (m, c) in &self.terms {
            let mut t = ring.constant(c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    t = &t * &images[i].pow(e as u32);
                }
            }
            acc = &acc + &t;
        }
        acc
    }

    /// Largest power of `X0` dividing every term.
    pub fn x0_valuation(&self) -> u16 {
        self.terms.iter().map(|(m, _)| m.exponent(0)).min().unwrap_or(0)
    }

    /// Homogeneous component of the given degree.
    pub fn homogeneous_part(&self, d: u32) -> Polynomial {
        let terms = self.terms.iter().filter(|(m, _)| m.degree() == d).cloned().collect();
        Polynomial::from_sorted_unchecked(self.ring, terms)
    }

    /// Exact division; `None` if `divisor` does not divide `self`.
    pub fn exact_div(&self, divisor: &Polynomial) -> Option<Polynomial> {
        let (lm, lc) = divisor.terms.first()?;
        let lc_inv = lc.inv()?;
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some((m, c)) = rem.terms.first() {
            let q_m = lm.quotient_of(m)?;
            let q_c = c * &lc_inv;
            rem = &rem - &divisor.mul_monomial(&q_m).scale(&q_c);
            quot.push((q_m, q_c));
        }
        Some(Polynomial::from_terms(self.ring, quot))
    }

    fn merge(&self, other: &Polynomial, negate: bool) -> Polynomial {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() && j < b.len() {
            match MonomialOrder::DegRevLex.cmp(&a[i].0, &b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = if negate { -&b[j].1 } else { b[j].1.clone() };
                    out.push((b[j].0.clone(), c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        for (m, c) in &b[j..] {
            out.push((m.clone(), if negate { -c } else { c.clone() }));
        }
        Polynomial::from_sorted_unchecked(self.ring, out)
    }
}

pub(crate) fn sort_terms(mut terms: Vec<(Monomial, Scalar)>) -> Vec<(Monomial, Scalar)> {
    terms.sort_by(|a, b| MonomialOrder::DegRevLex.cmp(&b.0, &a.0));
    terms
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        debug_assert_eq!(self.ring, rhs.ring);
        self.merge(rhs, false)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        debug_assert_eq!(self.ring, rhs.ring);
        self.merge(rhs, true)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&-&self.ring.field.one())
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        debug_assert_eq!(self.ring, rhs.ring);
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero(self.ring);
        }
        let mut acc: HashMap<Monomial, Scalar> = HashMap::with_capacity(self.len() * rhs.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let c = ca * cb;
                acc.entry(ma.mul(mb))
                    .and_modify(|e| e.add_assign_ref(&c))
                    .or_insert(c);
            }
        }
        let terms = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        Polynomial::from_sorted_unchecked(self.ring, sort_terms(terms))
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { -c } else { c.clone() };
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}
