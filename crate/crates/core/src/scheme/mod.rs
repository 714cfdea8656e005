//! 0-dimensional subschemes of projective space not meeting `X0 = 0`.
//!
//! A scheme is built either from per-point primary components or from a raw
//! homogeneous ideal. In both cases the affine coordinate ring
//! `S = K[x1..xn]/J_X` is kept as a [`FiniteAlgebra`], and `I_X` is the
//! homogenization of `J_X`.

pub mod algebra;
mod build;
pub mod hilbert;
pub mod local;

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::groebner::IdealHandle;
use crate::linalg::{Matrix, Subspace, Vector};
use crate::poly::{Polynomial, Ring, RingKind};

pub use algebra::FiniteAlgebra;
pub use hilbert::{binomial, BoundaryCase, GenericPosition, HilbertTable};
pub use local::LocalRing;

/// One component as supplied by the caller.
#[derive(Clone, Debug, Default)]
pub struct ComponentInput {
    /// Projective coordinates `(a0 : ... : an)` with `a0 != 0`.
    pub point: Option<Vec<Scalar>>,
    /// Generators of the primary ideal, homogeneous or affine (no `X0`).
    pub primary: Option<Vec<Polynomial>>,
}

impl ComponentInput {
    pub fn point(coords: Vec<Scalar>) -> Self {
        ComponentInput {
            point: Some(coords),
            primary: None,
        }
    }

    pub fn primary(gens: Vec<Polynomial>) -> Self {
        ComponentInput {
            point: None,
            primary: Some(gens),
        }
    }
}

#[derive(Clone, Debug)]
pub enum SchemeInput {
    Components(Vec<ComponentInput>),
    /// Homogeneous generators in `K[X0..Xn]`.
    Ideal(Vec<Polynomial>),
}

/// A validated component with its local ring.
#[derive(Clone, Debug)]
pub struct PointComponent {
    /// Normalized coordinates `(1 : a1 : ... : an)` when the point is rational.
    pub coords: Option<Vec<Scalar>>,
    /// Dehomogenized primary ideal.
    pub affine_ideal: IdealHandle,
    pub local: LocalRing,
}

impl PointComponent {
    /// `m_j = dim_K O_j`.
    pub fn multiplicity(&self) -> usize {
        self.local.length
    }

    /// `κ_j = dim_K K(p_j)`.
    pub fn kappa(&self) -> usize {
        self.local.kappa
    }
}

/// `S ≅ ⊕ O_j` through the Chinese remainder theorem.
#[derive(Clone, Debug)]
pub struct Projection {
    /// Columns are the images of the basis of `S`; rows grouped by component.
    pub phi: Matrix,
    pub phi_inv: Matrix,
    pub offsets: Vec<usize>,
    pub lengths: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct SchemeSpec {
    pub field: Field,
    pub n: usize,
    pub components: Vec<PointComponent>,
    /// Homogeneous, `X0`-saturated vanishing ideal in `K[X0..Xn]`.
    pub i_x: IdealHandle,
    /// Affine vanishing ideal in `K[x1..xn]`.
    pub j_x: IdealHandle,
    /// `S = K[x1..xn]/J_X`.
    pub s: FiniteAlgebra,
    pub hilbert: HilbertTable,
    pub projection: Option<Projection>,
    /// The raw generators, when they already generate `I_X`.
    pub input_generators: Option<Vec<Polynomial>>,
    pub warnings: Vec<String>,
}

impl SchemeSpec {
    pub fn ring(&self) -> Ring {
        self.i_x.ring()
    }

    pub fn affine_ring(&self) -> Ring {
        self.j_x.ring()
    }

    pub fn degree(&self) -> usize {
        self.hilbert.degree
    }

    pub fn regularity_index(&self) -> usize {
        self.hilbert.regularity_index
    }

    pub fn initial_degree(&self) -> usize {
        self.hilbert.initial_degree
    }

    pub fn hilbert_function(&self) -> &HilbertTable {
        &self.hilbert
    }

    pub fn generic_position_check(&self) -> GenericPosition {
        self.hilbert.generic_position(self.n)
    }

    pub fn has_components(&self) -> bool {
        self.projection.is_some()
    }

    pub fn local_ring(&self, j: usize) -> Result<&LocalRing> {
        if self.components.is_empty() {
            return Err(no_components());
        }
        self.components
            .get(j)
            .map(|c| &c.local)
            .ok_or_else(|| Error::InvalidInput(format!("no component {j}")))
    }

    /// Whether every local ring is a field.
    pub fn is_reduced(&self) -> bool {
        if self.components.is_empty() {
            let rad = IdealHandle::new(self.affine_ring(), local::seidenberg_radical(&self.s)).expect("same ring");
            rad.same_ideal(&self.j_x)
        } else {
            self.components.iter().all(|c| c.local.is_reduced())
        }
    }

    /// Whether the support consists of `K`-rational points only.
    pub fn has_rational_support(&self) -> bool {
        !self.components.is_empty() && self.components.iter().all(|c| c.kappa() == 1)
    }

    /// `V_i`: the image of `R_i` in `S`, spanned by standard monomials of degree `<= i`.
    pub fn v_subspace(&self, i: usize) -> Subspace {
        let k = self.hilbert.value(i);
        Subspace::coordinate(self.field, self.s.dim(), &(0..k).collect::<Vec<_>>())
    }

    /// Coordinates in `S` of the dehomogenization of `f`.
    pub fn affine_vector(&self, f: &Polynomial) -> Vector {
        let g = if f.ring().kind == RingKind::Projective { f.dehomogenize() } else { f.clone() };
        self.s.vector_of(&g)
    }

    /// The homogeneous element of degree `i` of `R` whose dehomogenization is
    /// `v`, written in standard monomials of `I_X`. Needs `v ∈ V_i`.
    pub fn homogeneous_of(&self, v: &[Scalar], i: usize) -> Option<Polynomial> {
        let mut terms = Vec::new();
        for (m, c) in self.s.basis().iter().zip(v) {
            if c.is_zero() {
                continue;
            }
            let d = m.degree() as usize;
            if d > i {
                return None;
            }
            terms.push((m.with_exponent(0, (i - d) as u16), c.clone()));
        }
        Some(Polynomial::from_terms(self.ring(), terms))
    }

    /// The `O_j` coordinates of `v ∈ S`.
    pub fn project(&self, j: usize, v: &[Scalar]) -> Result<Vector> {
        let p = self.projection.as_ref().ok_or_else(no_components)?;
        let (o, l) = (p.offsets[j], p.lengths[j]);
        Ok((o..o + l).map(|r| crate::linalg::dot(self.field, p.phi.row(r), v)).collect())
    }

    /// The element of `S` equal to `a` at component `j` and zero elsewhere.
    pub fn embed(&self, j: usize, a: &[Scalar]) -> Result<Vector> {
        let p = self.projection.as_ref().ok_or_else(no_components)?;
        let mut padded = vec![self.field.zero(); self.s.dim()];
        padded[p.offsets[j]..p.offsets[j] + p.lengths[j]].clone_from_slice(a);
        Ok(p.phi_inv.mul_vec(&padded))
    }
}

fn no_components() -> Error {
    Error::NoComponentData("the scheme was built from a raw ideal".into())
}

/// Validates the input and builds the scheme.
pub fn build_scheme(field: Field, n: usize, input: SchemeInput) -> Result<SchemeSpec> {
    if n == 0 {
        return Err(Error::InvalidInput("n must be at least 1".into()));
    }
    let proj = Ring::projective(field, n);
    let aff = Ring::affine(field, n);
    let spec = match input {
        SchemeInput::Components(list) => from_components(proj, aff, list)?,
        SchemeInput::Ideal(gens) => from_ideal(proj, aff, gens)?,
    };
    let p = field.characteristic();
    if p != 0 && p <= spec.degree() as u64 {
        return Err(Error::CharacteristicTooSmall {
            characteristic: p,
            degree: spec.degree(),
        });
    }
    log::info!(
        "built scheme of degree {} in P^{} (HF {:?}, r_X = {})",
        spec.degree(),
        n,
        spec.hilbert.values,
        spec.hilbert.regularity_index
    );
    Ok(spec)
}

fn validate_component(proj: Ring, aff: Ring, idx: usize, c: ComponentInput) -> Result<PointComponent> {
    let point = match c.point {
        None => None,
        Some(p) => {
            if p.len() != proj.nvars {
                return Err(Error::InvalidInput(format!(
                    "component {idx}: point needs {} coordinates, got {}",
                    proj.nvars,
                    p.len()
                )));
            }
            if let Some(bad) = p.iter().find(|x| x.field() != proj.field) {
                return Err(Error::RingMismatch(format!("component {idx}: coordinate {bad} in another field")));
            }
            let inv = p[0].inv().ok_or(Error::MeetsHyperplane(idx))?;
            Some(p.iter().map(|x| x * &inv).collect::<Vec<_>>())
        }
    };
    let affine_ideal = match &c.primary {
        Some(gens) => {
            if gens.iter().any(|g| g.ring().nvars != proj.nvars || g.field() != proj.field) {
                return Err(Error::RingMismatch(format!("component {idx}: generator outside K[X0..X{}]", proj.n())));
            }
            let homogeneous = gens.iter().all(|g| g.ring().kind == RingKind::Projective && g.is_homogeneous());
            let deh: Vec<Polynomial> = gens.iter().map(|g| g.dehomogenize()).collect();
            let ideal = IdealHandle::new(aff, deh)?;
            if ideal.is_unit() {
                return Err(if homogeneous {
                    Error::MeetsHyperplane(idx)
                } else {
                    Error::InvalidInput(format!("component {idx}: primary ideal is the unit ideal"))
                });
            }
            ideal
        }
        None => match &point {
            Some(p) => IdealHandle::new(aff, local::point_ideal(aff, p))?,
            None => return Err(Error::InvalidInput(format!("component {idx}: needs a point or a primary ideal"))),
        },
    };
    if !affine_ideal.quotient_basis(None).finite {
        return Err(Error::NotZeroDimensional(format!("component {idx}: primary ideal is not 0-dimensional")));
    }
    let local = LocalRing::new(affine_ideal.clone(), point.as_deref())
        .map_err(|e| Error::InvalidInput(format!("component {idx}: {e}")))?;
    let coords = point.or_else(|| local.rational_point());
    Ok(PointComponent {
        coords,
        affine_ideal,
        local,
    })
}

fn from_components(proj: Ring, aff: Ring, list: Vec<ComponentInput>) -> Result<SchemeSpec> {
    if list.is_empty() {
        return Err(Error::InvalidInput("no components given".into()));
    }
    let components: Vec<PointComponent> = list
        .into_iter()
        .enumerate()
        .map(|(i, c)| validate_component(proj, aff, i, c))
        .collect::<Result<_>>()?;
    for a in 0..components.len() {
        for b in a + 1..components.len() {
            if !components[a].affine_ideal.sum(&components[b].affine_ideal)?.is_unit() {
                return Err(Error::DuplicateComponent(a, b));
            }
        }
    }
    let parts: Vec<&FiniteAlgebra> = components.iter().map(|c| &c.local.algebra).collect();
    let vi = build::vanishing_ideal(aff, &parts);
    let j_x = IdealHandle::from_reduced_basis(aff, vi.basis.clone());
    let s = FiniteAlgebra::new(j_x.clone())?;
    debug_assert_eq!(s.basis(), &vi.standard[..]);
    let phi_inv = vi
        .phi
        .inverse()
        .ok_or_else(|| Error::Internal("component projections are not jointly invertible".into()))?;
    let lengths: Vec<usize> = components.iter().map(PointComponent::multiplicity).collect();
    let offsets = lengths
        .iter()
        .scan(0, |acc, &l| {
            let o = *acc;
            *acc += l;
            Some(o)
        })
        .collect();
    let i_x = IdealHandle::from_reduced_basis(proj, vi.basis.iter().map(Polynomial::homogenize).collect());
    let hilbert = hilbert_table(proj.n(), &j_x);
    Ok(SchemeSpec {
        field: proj.field,
        n: proj.n(),
        components,
        i_x,
        j_x,
        s,
        hilbert,
        projection: Some(Projection {
            phi: vi.phi,
            phi_inv,
            offsets,
            lengths,
        }),
        input_generators: None,
        warnings: Vec::new(),
    })
}

fn from_ideal(proj: Ring, aff: Ring, gens: Vec<Polynomial>) -> Result<SchemeSpec> {
    if gens.iter().any(|g| g.ring() != proj) {
        return Err(Error::RingMismatch(format!("ideal generators must live in K[X0..X{}]", proj.n())));
    }
    if let Some(g) = gens.iter().find(|g| !g.is_homogeneous()) {
        return Err(Error::InvalidInput(format!("generator {g} is not homogeneous")));
    }
    let given = IdealHandle::new(proj, gens.clone())?;
    let sat = given.saturate_x0()?;
    let mut warnings = Vec::new();
    let saturated = given.contains_ideal(&sat);
    if !saturated {
        let msg = "input ideal was not X0-saturated; replaced by its saturation".to_string();
        log::warn!("{msg}");
        warnings.push(msg);
    }
    if sat.is_unit() {
        return Err(Error::InvalidInput("the ideal defines the empty scheme".into()));
    }
    let gb = sat.groebner_basis();
    let j_x = IdealHandle::from_reduced_basis(aff, gb.iter().map(Polynomial::dehomogenize).collect());
    if !j_x.quotient_basis(None).finite {
        return Err(Error::NotZeroDimensional("the ideal does not define a finite set of points".into()));
    }
    let i_x = IdealHandle::from_reduced_basis(proj, gb);
    let s = FiniteAlgebra::new(j_x.clone())?;
    let hilbert = hilbert_table(proj.n(), &j_x);
    Ok(SchemeSpec {
        field: proj.field,
        n: proj.n(),
        components: Vec::new(),
        i_x,
        j_x,
        s,
        hilbert,
        projection: None,
        input_generators: saturated.then_some(gens),
        warnings,
    })
}

fn hilbert_table(n: usize, j_x: &IdealHandle) -> HilbertTable {
    let q = j_x.quotient_basis(None);
    let alpha = j_x.leading_monomials().iter().map(|m| m.degree() as usize).min().unwrap_or(0);
    HilbertTable::from_affine_counts(n, &q.per_degree, alpha)
}
