use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::poly::{Monomial, MonomialOrder, Polynomial, Ring, RingKind};

use super::buchberger::{from_polynomial, groebner, reduce_terms, to_polynomial, GPoly};
use super::quotient::QuotientBasis;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IdealOp {
    Sum,
    Product,
    Intersection,
    Colon,
}

/// An ideal given by generators, with a lazily computed reduced Gröbner basis.
#[derive(Clone, Debug)]
pub struct IdealHandle {
    ring: Ring,
    order: MonomialOrder,
    generators: Vec<Polynomial>,
    gb: OnceLock<Arc<Vec<GPoly>>>,
}

impl IdealHandle {
    /// The ideal generated by `generators` under `DegRevLex`.
    pub fn new(ring: Ring, generators: Vec<Polynomial>) -> Result<Self> {
        Self::with_order(ring, MonomialOrder::DegRevLex, generators)
    }

    pub fn with_order(ring: Ring, order: MonomialOrder, generators: Vec<Polynomial>) -> Result<Self> {
        if let Some(bad) = generators.iter().find(|g| g.ring() != ring) {
            return Err(Error::RingMismatch(format!("generator in {:?}, ideal in {ring:?}", bad.ring())));
        }
        if let MonomialOrder::Elimination(mask) = order {
            if ring.nvars > 64 || mask >> ring.nvars != 0 {
                return Err(Error::InvalidInput("elimination mask exceeds the variables".into()));
            }
        }
        let generators = generators.into_iter().filter(|g| !g.is_zero()).collect();
        Ok(IdealHandle {
            ring,
            order,
            generators,
            gb: OnceLock::new(),
        })
    }

    pub fn unit(ring: Ring) -> Self {
        Self::new(ring, vec![ring.one()]).expect("same ring")
    }

    /// Builds from polynomials already known to form a reduced Gröbner basis
    /// under `DegRevLex`. Callers must guarantee this.
    pub(crate) fn from_reduced_basis(ring: Ring, basis: Vec<Polynomial>) -> Self {
        let mut gps: Vec<GPoly> = basis
            .iter()
            .map(|p| GPoly {
                terms: from_polynomial(p, MonomialOrder::DegRevLex),
                sugar: p.degree().unwrap_or(0),
            })
            .collect();
        gps.sort_by(|a, b| MonomialOrder::DegRevLex.cmp(a.lm(), b.lm()));
        let gb = OnceLock::new();
        let _ = gb.set(Arc::new(gps));
        IdealHandle {
            ring,
            order: MonomialOrder::DegRevLex,
            generators: basis,
            gb,
        }
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn is_homogeneous(&self) -> bool {
        self.generators.iter().all(Polynomial::is_homogeneous)
    }

    fn basis(&self) -> &[GPoly] {
        self.gb.get_or_init(|| {
            log::debug!("computing a Gröbner basis of {} generators in {} variables", self.generators.len(), self.ring.nvars);
            Arc::new(groebner(self.order, &self.generators))
        })
    }

    /// The reduced Gröbner basis: monic, sorted ascending by leading monomial.
    pub fn groebner_basis(&self) -> Vec<Polynomial> {
        self.basis().iter().map(|g| to_polynomial(self.ring, g)).collect()
    }

    /// Same ideal with generators replaced by its reduced Gröbner basis.
    pub fn buchberger(&self) -> IdealHandle {
        let out = IdealHandle {
            ring: self.ring,
            order: self.order,
            generators: self.groebner_basis(),
            gb: OnceLock::new(),
        };
        let _ = out.gb.set(Arc::new(self.basis().to_vec()));
        out
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.basis().iter().map(|g| g.lm().clone()).collect()
    }

    pub fn is_unit(&self) -> bool {
        self.basis().first().is_some_and(|g| g.lm().is_one())
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        debug_assert_eq!(f.ring(), self.ring);
        let terms = reduce_terms(self.order, from_polynomial(f, self.order), self.basis(), None);
        Polynomial::from_terms(self.ring, terms)
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        self.normal_form(f).is_zero()
    }

    pub fn contains_ideal(&self, other: &IdealHandle) -> bool {
        other.generators.iter().all(|g| self.contains(g))
    }

    /// Equality as ideals.
    pub fn same_ideal(&self, other: &IdealHandle) -> bool {
        self.ring == other.ring && self.contains_ideal(other) && other.contains_ideal(self)
    }

    pub fn binary(&self, other: &IdealHandle, op: IdealOp) -> Result<IdealHandle> {
        match op {
            IdealOp::Sum => self.sum(other),
            IdealOp::Product => self.product(other),
            IdealOp::Intersection => self.intersection(other),
            IdealOp::Colon => self.colon(other),
        }
    }

    fn check(&self, other: &IdealHandle) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch(format!("{:?} vs {:?}", self.ring, other.ring)));
        }
        Ok(())
    }

    pub fn sum(&self, other: &IdealHandle) -> Result<IdealHandle> {
        self.check(other)?;
        let mut gens = self.generators.clone();
        gens.extend(other.generators.iter().cloned());
        IdealHandle::with_order(self.ring, self.order, gens)
    }

    pub fn product(&self, other: &IdealHandle) -> Result<IdealHandle> {
        self.check(other)?;
        let gens = self
            .generators
            .iter()
            .flat_map(|a| other.generators.iter().map(move |b| a * b))
            .collect();
        IdealHandle::with_order(self.ring, self.order, gens)
    }

    /// `I ∩ J` by eliminating `t` from `t·I + (1 − t)·J`.
    pub fn intersection(&self, other: &IdealHandle) -> Result<IdealHandle> {
        self.check(other)?;
        if self.is_zero_ideal() || other.is_zero_ideal() {
            return IdealHandle::with_order(self.ring, self.order, Vec::new());
        }
        let n = self.ring.nvars;
        if n >= 64 {
            return Err(Error::Unsupported("too many variables for elimination".into()));
        }
        let big = self.ring.extended(1);
        let embed: Vec<usize> = (0..n).collect();
        let t = big.var(n);
        let one_minus_t = &big.one() - &t;
        let mut gens: Vec<Polynomial> = self.generators.iter().map(|f| &t * &f.remap(big, &embed)).collect();
        gens.extend(other.generators.iter().map(|g| &one_minus_t * &g.remap(big, &embed)));
        let elim = IdealHandle::with_order(big, MonomialOrder::Elimination(1 << n), gens)?;
        let back: Vec<usize> = (0..=n).map(|i| i.min(n - 1)).collect();
        let gens = elim
            .eliminate_generators(1 << n)
            .into_iter()
            .map(|p| p.remap(self.ring, &back))
            .collect();
        IdealHandle::with_order(self.ring, self.order, gens)
    }

    /// `(I : g)`, computed as `(I ∩ ⟨g⟩) / g`.
    pub fn colon_poly(&self, g: &Polynomial) -> Result<IdealHandle> {
        if g.ring() != self.ring {
            return Err(Error::RingMismatch("colon by a polynomial of another ring".into()));
        }
        if g.is_zero() {
            return Ok(IdealHandle::unit(self.ring));
        }
        if self.order == MonomialOrder::DegRevLex && self.is_x0(g) && self.is_homogeneous() && self.ring.kind == RingKind::Projective {
            return Ok(self.colon_x0_revlex(false));
        }
        self.colon_poly_general(g)
    }

    pub(crate) fn colon_poly_general(&self, g: &Polynomial) -> Result<IdealHandle> {
        let principal = IdealHandle::with_order(self.ring, self.order, vec![g.clone()])?;
        let meet = self.intersection(&principal)?;
        let gens = meet
            .generators
            .iter()
            .map(|h| {
                h.exact_div(g)
                    .ok_or_else(|| Error::Internal("intersection element not divisible by the colon polynomial".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        IdealHandle::with_order(self.ring, self.order, gens)
    }

    /// `(I : J) = ∩_g (I : g)` over the generators of `J`.
    pub fn colon(&self, other: &IdealHandle) -> Result<IdealHandle> {
        self.check(other)?;
        let mut acc = IdealHandle::unit(self.ring).with_same_order(self.order)?;
        for g in &other.generators {
            let c = self.colon_poly(g)?;
            acc = if acc.is_unit() { c } else { acc.intersection(&c)? };
        }
        Ok(acc)
    }

    fn with_same_order(self, order: MonomialOrder) -> Result<IdealHandle> {
        IdealHandle::with_order(self.ring, order, self.generators)
    }

    fn is_x0(&self, g: &Polynomial) -> bool {
        g.len() == 1 && g.terms()[0].0 == Monomial::variable(self.ring.nvars, 0)
    }

    /// For a homogeneous ideal under `DegRevLex` with `X0` smallest, dividing
    /// basis elements by `X0` (once, or fully) yields a basis of `(I : X0)`
    /// (resp. `(I : X0^∞)`).
    fn colon_x0_revlex(&self, fully: bool) -> IdealHandle {
        let gens = self
            .groebner_basis()
            .into_iter()
            .map(|g| {
                let v = g.x0_valuation().min(if fully { u16::MAX } else { 1 });
                if v == 0 {
                    return g;
                }
                let m = Monomial::one(self.ring.nvars).with_exponent(0, v);
                g.exact_div(&self.ring.monomial(m)).expect("x0 divides")
            })
            .collect();
        IdealHandle::new(self.ring, gens).expect("same ring")
    }

    fn eliminate_generators(&self, mask: u64) -> Vec<Polynomial> {
        self.basis()
            .iter()
            .filter(|g| g.terms.iter().all(|(m, _)| m.masked_degree(mask) == 0))
            .map(|g| to_polynomial(self.ring, g))
            .collect()
    }

    /// Generators of `I ∩ K[vars not in mask]`, left in the same ring.
    pub fn eliminate(&self, mask: u64) -> Result<IdealHandle> {
        let elim = IdealHandle::with_order(self.ring, MonomialOrder::Elimination(mask), self.generators.clone())?;
        IdealHandle::with_order(self.ring, self.order, elim.eliminate_generators(mask))
    }

    /// `(I : X0^∞)` by iterating `(I : X0)` until the ideal stops growing.
    pub fn saturate_x0(&self) -> Result<IdealHandle> {
        if self.ring.kind != RingKind::Projective {
            return Err(Error::InvalidInput("saturation by X0 needs a projective ring".into()));
        }
        let x0 = self.ring.var(0);
        let mut cur = self.clone();
        loop {
            let next = cur.colon_poly(&x0)?;
            if cur.contains_ideal(&next) {
                return Ok(cur);
            }
            cur = next;
        }
    }

    /// Standard monomials. Finite quotients are listed completely; otherwise
    /// enumeration stops after `degree_cap` (default twice the largest
    /// leading degree plus one).
    pub fn quotient_basis(&self, degree_cap: Option<u32>) -> QuotientBasis {
        QuotientBasis::enumerate(self.ring, &self.leading_monomials(), degree_cap)
    }
}
