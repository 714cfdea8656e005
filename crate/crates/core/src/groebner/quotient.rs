use std::collections::HashSet;

use crate::poly::{Monomial, MonomialOrder, Ring, RingKind};

/// Standard monomials of an ideal: the monomials divisible by no leading
/// monomial of its Gröbner basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientBasis {
    /// Sorted by degree, then ascending in `DegRevLex`.
    pub standard_monomials: Vec<Monomial>,
    /// Whether the quotient is finite-dimensional over the field.
    pub finite: bool,
    /// `per_degree[d]` counts the listed standard monomials of degree `d`.
    pub per_degree: Vec<usize>,
}

impl QuotientBasis {
    pub(crate) fn enumerate(ring: Ring, leading: &[Monomial], degree_cap: Option<u32>) -> Self {
        let vars: Vec<usize> = match ring.kind {
            RingKind::Projective => (0..ring.nvars).collect(),
            RingKind::Affine => (1..ring.nvars).collect(),
        };
        let finite = vars.iter().all(|&v| {
            leading
                .iter()
                .any(|m| m.exponent(v) > 0 && m.degree() == m.exponent(v) as u32)
        }) || leading.iter().any(Monomial::is_one);
        let cap = if finite {
            u32::MAX
        } else {
            degree_cap.unwrap_or_else(|| 2 * leading.iter().map(Monomial::degree).max().unwrap_or(0) + 1)
        };
        let standard = |m: &Monomial| !leading.iter().any(|l| l.divides(m));

        let mut all = Vec::new();
        let mut per_degree = Vec::new();
        let one = Monomial::one(ring.nvars);
        let mut layer: Vec<Monomial> = if standard(&one) { vec![one] } else { Vec::new() };
        let mut d = 0u32;
        while !layer.is_empty() {
            per_degree.push(layer.len());
            all.extend(layer.iter().cloned());
            if d == cap {
                break;
            }
            let mut next: HashSet<Monomial> = HashSet::new();
            for m in &layer {
                for &v in &vars {
                    let x = m.with_exponent(v, m.exponent(v) + 1);
                    if standard(&x) {
                        next.insert(x);
                    }
                }
            }
            layer = next.into_iter().collect();
            layer.sort_by(|a, b| MonomialOrder::DegRevLex.cmp(a, b));
            d += 1;
        }
        QuotientBasis {
            standard_monomials: all,
            finite,
            per_degree,
        }
    }

    pub fn len(&self) -> usize {
        self.standard_monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.standard_monomials.is_empty()
    }

    /// Number of standard monomials of degree exactly `d` (within the cap).
    pub fn count_in_degree(&self, d: usize) -> usize {
        self.per_degree.get(d).copied().unwrap_or(0)
    }
}
